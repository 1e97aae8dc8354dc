//! Polynomials in `x` and `xi` with `xi^2 = 0`, differential operators on them,
//! and the representation of `K3` by `A -> x D`, `B -> -D`, `eps -> xi D` with
//! `D = d/dxi + xi d/dx`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::operator::Operator;
use super::rep::Representation;
use crate::algebra::k3;
use crate::enveloping::{RewriteSystem, Word};
use crate::error::{DomainError, Result};
use crate::kernel::{format_terms, BasisVector, Element, Parity, Scalar, Weight};

/// `x^p xi^q` with `q` in {0, 1}.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial {
    pub p: u32,
    pub q: u8,
}

impl Monomial {
    pub fn parity(self) -> Parity {
        Parity::from_bit(self.q as u32)
    }

    /// `p + q/2`.
    pub fn weight(self) -> Weight {
        Weight::from_twice(2 * self.p as i32 + self.q as i32)
    }

    pub fn vector(self) -> BasisVector {
        BasisVector::new(&self.to_string(), self.parity(), self.weight())
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.p, self.q) {
            (0, 0) => f.write_str("1"),
            (0, _) => f.write_str("xi"),
            (p, q) => {
                if q == 1 {
                    f.write_str("xi.")?;
                }
                if p == 1 {
                    f.write_str("x")
                } else {
                    write!(f, "x^{p}")
                }
            }
        }
    }
}

/// An element of `Q[x, xi] / (xi^2)`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SuperPolynomial {
    terms: BTreeMap<Monomial, Scalar>,
}

impl SuperPolynomial {
    pub fn zero() -> Self {
        SuperPolynomial::default()
    }

    pub fn monomial(p: u32, q: u8) -> Self {
        SuperPolynomial::term(Scalar::ONE, Monomial { p, q })
    }

    pub fn term(c: Scalar, m: Monomial) -> Self {
        let mut out = SuperPolynomial::zero();
        out.add_term(c, m);
        out
    }

    fn add_term(&mut self, c: Scalar, m: Monomial) {
        assert!(m.q <= 1, "xi^2 = 0 is never stored");
        let v = self.terms.entry(m).or_insert(Scalar::ZERO);
        *v += c;
        if v.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Scalar)> + '_ {
        self.terms.iter()
    }

    /// Highest power of `x`, `None` for zero.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.p).max()
    }

    pub fn to_element(&self) -> Element {
        self.terms.iter().map(|(m, c)| (*c, m.vector())).collect()
    }
}

impl fmt::Display for SuperPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_terms(self.terms.iter().rev(), |m| m.to_string()))
    }
}

/// `x^p xi^q (d/dx)^r (d/dxi)^s`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct OpTerm {
    pub p: u32,
    pub q: u8,
    pub r: u32,
    pub s: u8,
}

impl OpTerm {
    /// `r + s/2 - q/2`, so that `D` has order `1/2` and `x` order 0.
    pub fn order(self) -> Weight {
        Weight::from_twice(2 * self.r as i32 + self.s as i32 - self.q as i32)
    }
}

impl fmt::Display for OpTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        match self.p {
            0 => {}
            1 => parts.push("x".to_string()),
            p => parts.push(format!("x^{p}")),
        }
        if self.q == 1 {
            parts.push("xi".into());
        }
        match self.r {
            0 => {}
            1 => parts.push("dx".into()),
            r => parts.push(format!("dx^{r}")),
        }
        if self.s == 1 {
            parts.push("dxi".into());
        }
        if parts.is_empty() {
            f.write_str("1")
        } else {
            f.write_str(&parts.join(" "))
        }
    }
}

fn falling(n: u32, k: u32) -> Scalar {
    (0..k).fold(Scalar::ONE, |acc, i| acc * Scalar::int((n - i) as i64))
}

fn binomial(n: u32, k: u32) -> Scalar {
    let mut c = Scalar::ONE;
    for i in 0..k {
        c = c * Scalar::new((n - i) as i64, (i + 1) as i64);
    }
    c
}

/// A finite sum of normally ordered terms.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct DiffOperator {
    terms: BTreeMap<OpTerm, Scalar>,
}

impl DiffOperator {
    pub fn zero() -> Self {
        DiffOperator::default()
    }

    pub fn term(c: Scalar, t: OpTerm) -> Self {
        let mut out = DiffOperator::zero();
        out.add_term(c, t);
        out
    }

    pub fn identity() -> Self {
        DiffOperator::term(Scalar::ONE, OpTerm { p: 0, q: 0, r: 0, s: 0 })
    }

    pub fn x() -> Self {
        DiffOperator::term(Scalar::ONE, OpTerm { p: 1, q: 0, r: 0, s: 0 })
    }

    pub fn xi() -> Self {
        DiffOperator::term(Scalar::ONE, OpTerm { p: 0, q: 1, r: 0, s: 0 })
    }

    pub fn dx() -> Self {
        DiffOperator::term(Scalar::ONE, OpTerm { p: 0, q: 0, r: 1, s: 0 })
    }

    pub fn dxi() -> Self {
        DiffOperator::term(Scalar::ONE, OpTerm { p: 0, q: 0, r: 0, s: 1 })
    }

    /// `D = d/dxi + xi d/dx`.
    pub fn d() -> Self {
        DiffOperator::dxi() + DiffOperator::xi() * DiffOperator::dx()
    }

    fn add_term(&mut self, c: Scalar, t: OpTerm) {
        let v = self.terms.entry(t).or_insert(Scalar::ZERO);
        *v += c;
        if v.is_zero() {
            self.terms.remove(&t);
        }
    }

    pub fn scaled(&self, c: Scalar) -> Self {
        let mut out = DiffOperator::zero();
        for (t, d) in &self.terms {
            out.add_term(c * *d, *t);
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&OpTerm, &Scalar)> + '_ {
        self.terms.iter()
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(DiffOperator::identity(), |acc, _| acc * self.clone())
    }

    /// Highest order among the terms, `None` for zero.
    pub fn order(&self) -> Option<Weight> {
        self.terms.keys().map(|t| t.order()).max()
    }

    /// The terms of highest order.
    pub fn leading(&self) -> Self {
        let Some(top) = self.order() else { return DiffOperator::zero() };
        let mut out = DiffOperator::zero();
        for (t, c) in &self.terms {
            if t.order() == top {
                out.add_term(*c, *t);
            }
        }
        out
    }

    pub fn apply(&self, f: &SuperPolynomial) -> SuperPolynomial {
        let mut out = SuperPolynomial::zero();
        for (t, c) in &self.terms {
            for (m, d) in f.terms() {
                let b = match (t.s, m.q) {
                    (1, 0) => continue,
                    (1, _) => 0,
                    (_, q) => q,
                };
                if t.r > m.p || (t.q == 1 && b == 1) {
                    continue;
                }
                let coeff = *c * *d * falling(m.p, t.r);
                out.add_term(coeff, Monomial { p: m.p - t.r + t.p, q: b | t.q });
            }
        }
        out
    }

    fn compose_terms(a: OpTerm, b: OpTerm, c: Scalar, out: &mut DiffOperator) {
        // d/dxi^s xi^Q, written as xi^Q' d/dxi^s'
        let middle: &[(u8, u8, i64)] = match (a.s, b.q) {
            (0, 0) => &[(0, 0, 1)],
            (0, _) => &[(1, 0, 1)],
            (1, 0) => &[(0, 1, 1)],
            _ => &[(0, 0, 1), (1, 1, -1)],
        };
        for k in 0..=a.r.min(b.p) {
            let leibniz = binomial(a.r, k) * falling(b.p, k);
            for &(qq, ss, sign) in middle {
                if (a.q == 1 && qq == 1) || (ss == 1 && b.s == 1) {
                    continue;
                }
                let t = OpTerm { p: a.p + b.p - k, q: a.q | qq, r: a.r - k + b.r, s: ss | b.s };
                out.add_term(c * leibniz * Scalar::int(sign), t);
            }
        }
    }
}

impl Add for DiffOperator {
    type Output = DiffOperator;
    fn add(mut self, rhs: DiffOperator) -> DiffOperator {
        for (t, c) in rhs.terms {
            self.add_term(c, t);
        }
        self
    }
}

impl Sub for DiffOperator {
    type Output = DiffOperator;
    fn sub(self, rhs: DiffOperator) -> DiffOperator {
        self + (-rhs)
    }
}

impl Neg for DiffOperator {
    type Output = DiffOperator;
    fn neg(self) -> DiffOperator {
        self.scaled(-Scalar::ONE)
    }
}

/// Composition.
impl Mul for DiffOperator {
    type Output = DiffOperator;
    fn mul(self, rhs: DiffOperator) -> DiffOperator {
        let mut out = DiffOperator::zero();
        for (a, c) in &self.terms {
            for (b, d) in &rhs.terms {
                DiffOperator::compose_terms(*a, *b, *c * *d, &mut out);
            }
        }
        out
    }
}

impl fmt::Display for DiffOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_terms(self.terms.iter().rev(), |t| t.to_string()))
    }
}

/// The images of the generators of `K3`: `eps -> xi D`, `a -> x D`, `b -> -D`.
pub fn diffop_operators() -> BTreeMap<BasisVector, DiffOperator> {
    let k = k3();
    let d = DiffOperator::d();
    BTreeMap::from([
        (k.find("eps").expect("K3"), DiffOperator::xi() * d.clone()),
        (k.find("a").expect("K3"), DiffOperator::x() * d.clone()),
        (k.find("b").expect("K3"), -d),
    ])
}

/// The carrier of polynomials of `x`-degree at most `bound`.
pub fn diffop_carrier(bound: u32) -> Vec<Monomial> {
    let mut out: Vec<Monomial> = (0..=bound).map(|p| Monomial { p, q: 0 }).collect();
    out.extend((0..=bound).map(|p| Monomial { p, q: 1 }));
    out
}

/// Materializes a differential operator on the truncated carrier; monomials
/// whose image exceeds the bound are marked undefined.
pub fn truncate(op: &DiffOperator, bound: u32) -> Operator {
    let mut out = Operator::zero();
    for m in diffop_carrier(bound) {
        let img = op.apply(&SuperPolynomial::term(Scalar::ONE, m));
        if img.degree().is_some_and(|d| d > bound) {
            out.mark_undefined(m.vector());
        } else {
            out.set(m.vector(), img.to_element());
        }
    }
    out
}

/// The differential-operator representation of `K3` on polynomials of
/// `x`-degree at most `bound`.
pub fn diffop_rep(bound: u32) -> Result<Representation> {
    if bound == 0 {
        return Err(DomainError::Unsupported("the x-degree bound must be at least 1".into()).into());
    }
    let carrier = diffop_carrier(bound).into_iter().map(Monomial::vector).collect();
    let action = diffop_operators().into_iter().map(|(g, op)| (g, truncate(&op, bound))).collect();
    Representation::new("diffop", &k3(), carrier, action)
}

/// The operator of an enveloping-algebra word: letters act right to left.
pub fn word_operator(rep: &Representation, rs: &RewriteSystem, w: &Word) -> Operator {
    let mut out: Option<Operator> = None;
    for &id in w.letters().iter().rev() {
        let op = rep.operator(&rs.alphabet().letter(id).generator);
        out = Some(match out {
            None => op,
            Some(acc) => op.compose(&acc),
        });
    }
    out.unwrap_or_else(|| Operator::from_columns(rep.carrier().iter().map(|v| (v.clone(), Element::basis(v.clone())))))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enveloping::build_env_antialgebra;
    use crate::representations::check_la_representation;

    fn poly(p: u32, q: u8) -> SuperPolynomial {
        SuperPolynomial::monomial(p, q)
    }

    #[test]
    fn d_on_low_monomials() {
        let d = DiffOperator::d();
        assert_eq!(d.apply(&poly(1, 0)), poly(0, 1));
        assert_eq!(d.apply(&poly(0, 1)), poly(0, 0));
        let d2 = d.clone() * d;
        assert_eq!(d2, DiffOperator::dx());
        assert_eq!(d2.apply(&poly(1, 0)), poly(0, 0));
        assert_eq!(d2.apply(&poly(1, 1)), poly(0, 1));
    }

    #[test]
    fn composition_matches_application() {
        let ops = [DiffOperator::x(), DiffOperator::xi(), DiffOperator::dx(), DiffOperator::dxi(), DiffOperator::d()];
        for a in &ops {
            for b in &ops {
                let ab = a.clone() * b.clone();
                for p in 0..4 {
                    for q in 0..2 {
                        let f = poly(p, q);
                        assert_eq!(ab.apply(&f), a.apply(&b.apply(&f)), "{a} o {b} on {f}");
                    }
                }
            }
        }
        let anti = DiffOperator::dxi() * DiffOperator::xi() + DiffOperator::xi() * DiffOperator::dxi();
        assert_eq!(anti, DiffOperator::identity());
        assert!((DiffOperator::xi() * DiffOperator::xi()).is_zero());
        assert_eq!(DiffOperator::d().order(), Some(Weight::half(1)));
    }

    #[test]
    fn diffop_is_an_la_representation() {
        let r = check_la_representation(&diffop_rep(6).unwrap()).unwrap();
        assert!(r.passed(), "{r}");
        assert!(r.get("specialization").unwrap().checked > 0);
    }

    #[test]
    fn rules_hold_on_the_carrier() {
        let rep = diffop_rep(6).unwrap();
        let mut rs = build_env_antialgebra(&k3()).unwrap();
        rs.complete(6).unwrap();
        for (lhs, rhs) in rs.rules() {
            let (lhs, rhs) = (lhs.clone(), rhs.clone());
            let l = word_operator(&rep, &rs, &lhs);
            let mut r = Operator::zero();
            for (w, c) in rhs.iter() {
                r.add_scaled(*c, &word_operator(&rep, &rs, w));
            }
            for v in rep.carrier() {
                if let (Ok(x), Ok(y)) = (l.apply_basis(v), r.apply_basis(v)) {
                    assert_eq!(x, y, "{} on {v}", rs.show_rule(&lhs, &rhs));
                }
            }
        }
    }

    #[test]
    fn leading_order_of_monomials() {
        let ops = diffop_operators();
        let k = k3();
        let (a, b) = (&ops[&k.find("a").unwrap()], &ops[&k.find("b").unwrap()]);
        for n in 0..=4u32 {
            for kk in 0..=n {
                let l = n - kk;
                let img = a.pow(kk) * b.pow(l);
                let sign = Scalar::sign(l);
                let lead = (DiffOperator::x().pow(kk) * DiffOperator::d().pow(n)).scaled(sign);
                let rest = img.clone() - lead;
                assert!(rest.order().is_none_or(|o| o < Weight::from_twice(n as i32)), "A^{kk} B^{l}: {img}");
            }
        }
    }
}
