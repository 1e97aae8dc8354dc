//! The two conditions on the quadratic-linear relations that guarantee the PBW
//! property, tested on the cubic elements `u0` to `u3`.

use std::fmt;

use crate::algebra::AlgebraSpec;
use crate::axioms::{AxiomReport, AxiomResult, Status, Witness};
use crate::error::{DomainError, Error, Result};
use crate::kernel::{BasisVector, Element, LinComb, Scalar, Span};

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord)]
struct Pair(BasisVector, BasisVector);

impl fmt::Display for Pair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}(x){}", self.0, self.1)
    }
}

type Tensor2 = LinComb<Pair>;
type Tensor3 = LinComb<(BasisVector, BasisVector, BasisVector)>;

fn t3(terms: &[(i64, &BasisVector, &BasisVector, &BasisVector)]) -> Tensor3 {
    terms.iter().map(|&(c, p, q, r)| (Scalar::int(c), (p.clone(), q.clone(), r.clone()))).collect()
}

/// `(mu (x) Id - Id (x) mu)(u)`.
fn defect(spec: &AlgebraSpec, u: &Tensor3) -> Result<Tensor2> {
    let mut out = Tensor2::zero();
    for ((p, q, r), c) in u.iter() {
        for (g, d) in spec.product_gen(p, q)?.iter() {
            out.add_term(*c * *d, Pair(g.clone(), r.clone()));
        }
        for (g, d) in spec.product_gen(q, r)?.iter() {
            out.add_term(-*c * *d, Pair(p.clone(), g.clone()));
        }
    }
    Ok(out)
}

fn multiply(spec: &AlgebraSpec, t: &Tensor2) -> Result<Element> {
    let mut out = Element::zero();
    for (Pair(p, q), c) in t.iter() {
        out.add_scaled(*c, &spec.product_gen(p, q)?);
    }
    Ok(out)
}

/// Writes a tensor as an element whose basis vectors name the pairs.
fn flatten(t: &Tensor2) -> Element {
    t.map_linear(|p| Element::basis(BasisVector::new(&p.to_string(), p.0.parity() + p.1.parity(), p.0.weight() + p.1.weight())))
}

fn relation_span(spec: &AlgebraSpec) -> Result<Span<Pair>> {
    let gens = spec.generators();
    let mut ambient = Vec::new();
    for u in gens {
        for v in gens {
            ambient.push(Pair(u.clone(), v.clone()));
        }
    }
    let mut span = Span::new(ambient);
    for u in gens {
        for v in gens {
            let mut r = Tensor2::basis(Pair(u.clone(), v.clone()));
            match (u.is_odd(), v.is_odd()) {
                (true, true) => r.add_term(-Scalar::ONE, Pair(v.clone(), u.clone())),
                (true, false) | (false, true) => r.add_term(Scalar::ONE, Pair(v.clone(), u.clone())),
                (false, false) => {}
            }
            span.insert(&r)?;
        }
    }
    Ok(span)
}

struct Tally {
    first: AxiomResult,
    second: AxiomResult,
}

impl Tally {
    fn new(id: &str) -> Self {
        let blank = |cond: &str| AxiomResult {
            id: format!("{id} {cond}"),
            status: Status::Pass,
            witness: None,
            checked: 0,
            skipped: 0,
        };
        Tally { first: blank("(i)"), second: blank("(ii)") }
    }

    fn record(&mut self, spec: &AlgebraSpec, span: &Span<Pair>, tuple: &[&BasisVector], u: &Tensor3) -> Result<()> {
        let names = || tuple.iter().map(|g| g.to_string()).collect::<Vec<_>>();
        let d = match defect(spec, u) {
            Ok(d) => d,
            Err(Error::Window(_)) => {
                self.first.skipped += 1;
                self.second.skipped += 1;
                return Ok(());
            }
            Err(e) => return Err(e),
        };
        self.first.checked += 1;
        let rem = span.reduce(&d)?;
        if !rem.is_zero() {
            if self.first.witness.is_none() {
                self.first.status = Status::Fail;
                self.first.witness = Some(Witness { tuple: names(), lhs: flatten(&rem), rhs: Element::zero() });
            }
            // the second condition only makes sense on the span of the relations
            self.second.skipped += 1;
            return Ok(());
        }
        match multiply(spec, &d) {
            Ok(m) => {
                self.second.checked += 1;
                if !m.is_zero() && self.second.witness.is_none() {
                    self.second.status = Status::Fail;
                    self.second.witness = Some(Witness { tuple: names(), lhs: m, rhs: Element::zero() });
                }
            }
            Err(Error::Window(_)) => self.second.skipped += 1,
            Err(e) => return Err(e),
        }
        Ok(())
    }

    fn finish(mut self, report: &mut AxiomReport) {
        for r in [&mut self.first, &mut self.second] {
            if r.checked == 0 && r.skipped > 0 {
                r.status = Status::Skipped;
            }
        }
        report.push(self.first);
        report.push(self.second);
    }
}

type Instance<'a> = (&'static str, [&'a BasisVector; 3], Tensor3);

/// Every instance of `u0 = x y z`, `u1 = (a x + x a) y + (x y) a`,
/// `u2 = x (a b - b a) - b (x a + a x) + a (b x + x b)` and
/// `u3 = (a b - b a) c + (b c - c b) a + (c a - a c) b` (tensor products, `x, y,
/// z` even, `a, b, c` odd).
fn instances<'a>(ev: &'a [BasisVector], od: &'a [BasisVector]) -> Vec<Instance<'a>> {
    let mut out = Vec::new();
    for x in ev {
        for y in ev {
            for z in ev {
                out.push(("u0", [x, y, z], t3(&[(1, x, y, z)])));
            }
        }
    }
    for a in od {
        for x in ev {
            for y in ev {
                out.push(("u1", [a, x, y], t3(&[(1, a, x, y), (1, x, a, y), (1, x, y, a)])));
            }
        }
    }
    for x in ev {
        for a in od {
            for b in od {
                let u = t3(&[(1, x, a, b), (-1, x, b, a), (-1, b, x, a), (-1, b, a, x), (1, a, b, x), (1, a, x, b)]);
                out.push(("u2", [x, a, b], u));
            }
        }
    }
    for a in od {
        for b in od {
            for c in od {
                let u = t3(&[(1, a, b, c), (-1, b, a, c), (1, b, c, a), (-1, c, b, a), (1, c, a, b), (-1, a, c, b)]);
                out.push(("u3", [a, b, c], u));
            }
        }
    }
    out
}

/// The image of one cubic element under `mu (x) Id - Id (x) mu`.
#[derive(Clone, Debug, PartialEq)]
pub struct CubicImage {
    pub family: &'static str,
    pub tuple: Vec<String>,
    /// `None` when a product leaves the window.
    pub image: Option<Element>,
}

/// `(mu (x) Id - Id (x) mu)(u)` for every instance of `u0` to `u3`, with tensors
/// flattened to basis vectors named `u(x)v`.
pub fn cubic_images(spec: &AlgebraSpec) -> Result<Vec<CubicImage>> {
    let (ev, od) = (spec.evens(), spec.odds());
    let mut out = Vec::new();
    for (family, tuple, u) in instances(&ev, &od) {
        let image = match defect(spec, &u) {
            Ok(d) => Some(flatten(&d)),
            Err(Error::Window(_)) => None,
            Err(e) => return Err(e),
        };
        out.push(CubicImage { family, tuple: tuple.iter().map(|g| g.to_string()).collect(), image });
    }
    Ok(out)
}

/// For every instance of `u0` to `u3` (see [`cubic_images`]) checks that
/// `(mu (x) Id - Id (x) mu)(u)` lies in the span of the relations (i) and is
/// killed by the product (ii).
pub fn bg_check(spec: &AlgebraSpec) -> Result<AxiomReport> {
    if spec.is_bracket() {
        return Err(DomainError::Unsupported(format!("`{}` is bracket-style", spec.name())).into());
    }
    let span = relation_span(spec)?;
    let (ev, od) = (spec.evens(), spec.odds());
    let all = instances(&ev, &od);
    let mut report = AxiomReport::default();
    for family in ["u0", "u1", "u2", "u3"] {
        let mut tally = Tally::new(family);
        for (_, tuple, u) in all.iter().filter(|i| i.0 == family) {
            tally.record(spec, &span, tuple, u)?;
        }
        tally.finish(&mut report);
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{catalog, k3, Style, WeightWindow};
    use crate::kernel::Weight;

    #[test]
    fn k3_satisfies_both_conditions() {
        let r = bg_check(&k3()).unwrap();
        assert!(r.passed(), "{r}");
        assert_eq!(r.entries.len(), 8);
        assert_eq!(r.get("u3 (i)").unwrap().checked, 8);
    }

    #[test]
    fn k3_low_images_vanish() {
        let k = k3();
        let (x, a, b) = (k.find("eps").unwrap(), k.find("a").unwrap(), k.find("b").unwrap());
        assert!(defect(&k, &t3(&[(1, &x, &x, &x)])).unwrap().is_zero());
        for c in [&a, &b] {
            let u1 = t3(&[(1, c, &x, &x), (1, &x, c, &x), (1, &x, &x, c)]);
            assert!(defect(&k, &u1).unwrap().is_zero());
        }
        for (p, q) in [(&a, &b), (&b, &a), (&a, &a)] {
            let u2 = t3(&[(1, &x, p, q), (-1, &x, q, p), (-1, q, &x, p), (-1, q, p, &x), (1, p, q, &x), (1, p, &x, q)]);
            assert!(defect(&k, &u2).unwrap().is_zero());
        }
    }

    #[test]
    fn ak1_violates_the_first_condition() {
        let s = catalog("AK1", Some(WeightWindow::ints(-3, 3))).unwrap();
        let r = bg_check(&s).unwrap();
        let u3 = r.get("u3 (i)").unwrap();
        assert_eq!(u3.status, Status::Fail, "{r}");
        assert!(!u3.witness.as_ref().unwrap().lhs.is_zero());
    }

    #[test]
    fn zero_even_products() {
        let gens = vec![BasisVector::even("x", Weight::ZERO), BasisVector::even("y", Weight::ZERO)];
        let z = AlgebraSpec::from_table("Z", Style::Product, gens, vec![]).unwrap();
        let r = bg_check(&z).unwrap();
        assert!(r.passed());
        assert_eq!(r.get("u0 (i)").unwrap().checked, 8);
    }
}
