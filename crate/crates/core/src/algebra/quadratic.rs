//! The homogeneous quadratic model `(K + a_0) (x) S(a_1)`: monomials are an optional
//! even generator followed by a multiset of odd generators.

use std::fmt;

use crate::kernel::{BasisVector, Parity, Scalar, Weight};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GMonomial {
    even: Option<BasisVector>,
    odds: Vec<BasisVector>,
}

impl GMonomial {
    pub fn unit() -> Self {
        GMonomial { even: None, odds: Vec::new() }
    }

    /// Builds `x a_1 ... a_k`; the odd factors are sorted.
    pub fn new(even: Option<BasisVector>, mut odds: Vec<BasisVector>) -> Self {
        debug_assert!(even.as_ref().is_none_or(|x| !x.is_odd()));
        debug_assert!(odds.iter().all(BasisVector::is_odd));
        odds.sort();
        GMonomial { even, odds }
    }

    pub fn even(&self) -> Option<&BasisVector> {
        self.even.as_ref()
    }

    pub fn odds(&self) -> &[BasisVector] {
        &self.odds
    }

    pub fn degree(&self) -> usize {
        self.odds.len() + usize::from(self.even.is_some())
    }

    pub fn weight(&self) -> Weight {
        self.even.iter().chain(&self.odds).map(BasisVector::weight).sum()
    }

    pub fn parity(&self) -> Parity {
        Parity::from_bit(self.odds.len() as u32)
    }

    /// The product: two even-prefixed monomials multiply to zero; moving the even
    /// factor of the right monomial past `p` odd letters costs `(-1)^p`.
    pub fn mul(&self, other: &GMonomial) -> Option<(Scalar, GMonomial)> {
        let odds: Vec<BasisVector> = self.odds.iter().chain(&other.odds).cloned().collect();
        match (&self.even, &other.even) {
            (Some(_), Some(_)) => None,
            (None, Some(x)) => Some((Scalar::sign(self.odds.len() as u32), GMonomial::new(Some(x.clone()), odds))),
            (x, None) => Some((Scalar::ONE, GMonomial::new(x.clone(), odds))),
        }
    }

    /// The monomial as a generator of a materialized model, named by its factors.
    pub fn to_generator(&self) -> BasisVector {
        BasisVector::new(&self.to_string(), self.parity(), self.weight())
    }
}

impl fmt::Display for GMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.degree() == 0 {
            return f.write_str("1");
        }
        let parts: Vec<String> = self.even.iter().chain(&self.odds).map(|g| g.to_string()).collect();
        f.write_str(&parts.join("."))
    }
}

impl fmt::Debug for GMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// All monomials of exactly the given degree, in sorted order.
pub fn monomials(evens: &[BasisVector], odds: &[BasisVector], degree: usize) -> Vec<GMonomial> {
    let mut out = Vec::new();
    for tail in multisets(odds, degree) {
        out.push(GMonomial::new(None, tail));
    }
    if degree >= 1 {
        for x in evens {
            for tail in multisets(odds, degree - 1) {
                out.push(GMonomial::new(Some(x.clone()), tail));
            }
        }
    }
    out.sort();
    out
}

fn multisets(items: &[BasisVector], k: usize) -> Vec<Vec<BasisVector>> {
    fn go(items: &[BasisVector], k: usize, from: usize, cur: &mut Vec<BasisVector>, out: &mut Vec<Vec<BasisVector>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in from..items.len() {
            cur.push(items[i].clone());
            go(items, k, i, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(items, k, 0, &mut Vec::new(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn eps() -> BasisVector {
        BasisVector::even("eps", Weight::ZERO)
    }
    fn a() -> BasisVector {
        BasisVector::odd("a", Weight::half(1))
    }
    fn b() -> BasisVector {
        BasisVector::odd("b", Weight::half(-1))
    }

    #[test]
    fn odd_times_prefixed_picks_up_sign() {
        let left = GMonomial::new(None, vec![a()]);
        let right = GMonomial::new(Some(eps()), vec![b()]);
        let (c, m) = left.mul(&right).unwrap();
        assert_eq!(c, -Scalar::ONE);
        assert_eq!(m.to_string(), "eps.a.b");
    }

    #[test]
    fn two_prefixed_vanish() {
        let m = GMonomial::new(Some(eps()), vec![]);
        assert!(m.mul(&m).is_none());
    }

    #[test]
    fn dimensions_two_n_plus_one() {
        for n in 0..6 {
            let expected = if n == 0 { 1 } else { 2 * n + 1 };
            assert_eq!(monomials(&[eps()], &[a(), b()], n).len(), expected);
        }
    }
}
