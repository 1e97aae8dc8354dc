//! Exhaustive checks of the defining identities on generator tuples, with witnesses.

mod report;

pub use report::{scan, AxiomReport, AxiomResult, Status, Witness};

use crate::algebra::{half_unit_defect, AlgebraSpec};
use crate::error::{DomainError, Result};
use crate::kernel::{BasisVector, Element, Scalar};

fn el(g: &BasisVector) -> Element {
    Element::basis(g.clone())
}

fn require_product(spec: &AlgebraSpec) -> Result<()> {
    if spec.is_bracket() {
        return Err(DomainError::Unsupported(format!("`{}` is bracket-style", spec.name())).into());
    }
    Ok(())
}

fn require_bracket(spec: &AlgebraSpec) -> Result<()> {
    if !spec.is_bracket() {
        return Err(DomainError::Unsupported(format!("`{}` is product-style", spec.name())).into());
    }
    Ok(())
}

fn supercommutativity(spec: &AlgebraSpec) -> Result<AxiomResult> {
    let all = spec.generators().to_vec();
    scan("supercommutativity", &[all.clone(), all], |t| {
        let (u, v) = (&t[0], &t[1]);
        let lhs = spec.product_gen(u, v)?;
        let rhs = spec.product_gen(v, u)?.scaled(u.parity().swap_sign(v.parity()));
        Ok((lhs, rhs))
    })
}

/// `u*v = (-1)^{|u||v|} v*u` on all generator pairs.
pub fn check_supercommutativity(spec: &AlgebraSpec) -> Result<AxiomReport> {
    require_product(spec)?;
    Ok(AxiomReport { entries: vec![supercommutativity(spec)?] })
}

/// The cubic identities LA0, LA1, LA1', LA2 and LA3, each reported separately.
pub fn check_lie_antialgebra(spec: &AlgebraSpec) -> Result<AxiomReport> {
    require_product(spec)?;
    let m = |u: &Element, v: &Element| spec.product(u, v);
    let (ev, od) = (spec.evens(), spec.odds());
    let mut report = AxiomReport::default();

    report.push(scan("LA0", &[ev.clone(), ev.clone(), ev.clone()], |t| {
        let (x1, x2, x3) = (el(&t[0]), el(&t[1]), el(&t[2]));
        Ok((m(&x1, &m(&x2, &x3)?)?, m(&m(&x1, &x2)?, &x3)?))
    })?);
    report.push(scan("LA1", &[ev.clone(), ev.clone(), od.clone()], |t| {
        let (x1, x2, y) = (el(&t[0]), el(&t[1]), el(&t[2]));
        Ok((m(&x1, &m(&x2, &y)?)?, m(&m(&x1, &x2)?, &y)?.scaled(Scalar::HALF)))
    })?);
    report.push(scan("LA1'", &[ev.clone(), ev.clone(), od.clone()], |t| {
        let (x1, x2, y) = (el(&t[0]), el(&t[1]), el(&t[2]));
        let lhs = m(&x1, &m(&x2, &y)?)? + m(&x2, &m(&x1, &y)?)?;
        Ok((lhs, m(&m(&x1, &x2)?, &y)?))
    })?);
    report.push(scan("LA2", &[ev, od.clone(), od.clone()], |t| {
        let (x, y1, y2) = (el(&t[0]), el(&t[1]), el(&t[2]));
        let rhs = m(&m(&x, &y1)?, &y2)? + m(&y1, &m(&x, &y2)?)?;
        Ok((m(&x, &m(&y1, &y2)?)?, rhs))
    })?);
    report.push(scan("LA3", &[od.clone(), od.clone(), od], |t| {
        let (y1, y2, y3) = (el(&t[0]), el(&t[1]), el(&t[2]));
        let lhs = m(&y1, &m(&y2, &y3)?)? + m(&y2, &m(&y3, &y1)?)? + m(&y3, &m(&y1, &y2)?)?;
        Ok((lhs, Element::zero()))
    })?);
    Ok(report)
}

/// Supercommutativity (SJ1) and the quartic super Jordan identity (SJ2).
pub fn check_jordan_superalgebra(spec: &AlgebraSpec) -> Result<AxiomReport> {
    require_product(spec)?;
    let mut sj1 = supercommutativity(spec)?;
    sj1.id = "SJ1".into();
    let all = spec.generators().to_vec();
    let m = |u: &Element, v: &Element| spec.product(u, v);
    let sj2 = scan("SJ2", &[all.clone(), all.clone(), all.clone(), all], |t| {
        let [pa, pb, pc, pd] = [0, 1, 2, 3].map(|i| t[i].parity().bit());
        let [a, b, c, d] = [0, 1, 2, 3].map(|i| el(&t[i]));
        let s = Scalar::sign;
        let lhs = m(&m(&a, &b)?, &m(&c, &d)?)?
            + m(&m(&a, &c)?, &m(&b, &d)?)?.scaled(s(pb * pc))
            + m(&m(&a, &d)?, &m(&b, &c)?)?.scaled(s((pb + pc) * pd));
        let rhs = m(&m(&m(&a, &b)?, &c)?, &d)?
            + m(&m(&m(&a, &d)?, &c)?, &b)?.scaled(s((pb + pc) * pd + pb * pc))
            + m(&m(&m(&b, &d)?, &c)?, &a)?.scaled(s((pb + pc + pd) * pa + pc * pd));
        Ok((lhs, rhs))
    })?;
    Ok(AxiomReport { entries: vec![sj1, sj2] })
}

/// Graded antisymmetry on pairs and the graded Jacobi identity on triples.
pub fn check_lie_superalgebra(spec: &AlgebraSpec) -> Result<AxiomReport> {
    require_bracket(spec)?;
    let all = spec.generators().to_vec();
    let br = |u: &Element, v: &Element| spec.product(u, v);
    let anti = scan("antisymmetry", &[all.clone(), all.clone()], |t| {
        let (x, y) = (&t[0], &t[1]);
        let rhs = spec.product_gen(y, x)?.scaled(-x.parity().swap_sign(y.parity()));
        Ok((spec.product_gen(x, y)?, rhs))
    })?;
    let jacobi = scan("Jacobi", &[all.clone(), all.clone(), all], |t| {
        let (px, py, pz) = (t[0].parity(), t[1].parity(), t[2].parity());
        let (x, y, z) = (el(&t[0]), el(&t[1]), el(&t[2]));
        let lhs = br(&br(&x, &y)?, &z)?.scaled(px.swap_sign(pz))
            + br(&br(&y, &z)?, &x)?.scaled(py.swap_sign(px))
            + br(&br(&z, &x)?, &y)?.scaled(pz.swap_sign(py));
        Ok((lhs, Element::zero()))
    })?;
    Ok(AxiomReport { entries: vec![anti, jacobi] })
}

/// Whether `e` acts as the identity on even generators and as `1/2` on odd ones.
pub fn check_half_unit(spec: &AlgebraSpec, e: &BasisVector) -> Result<(bool, Option<Witness>)> {
    require_product(spec)?;
    let defect = half_unit_defect(spec, e)?;
    let witness = defect.map(|(x, lhs, rhs)| Witness { tuple: vec![e.to_string(), x.to_string()], lhs, rhs });
    Ok((witness.is_none(), witness))
}

/// [`check_half_unit`] as a report entry.
pub fn half_unit_result(spec: &AlgebraSpec, e: &BasisVector) -> Result<AxiomResult> {
    let (_, w) = check_half_unit(spec, e)?;
    Ok(AxiomResult::single("half-unit", w))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{catalog, k3, osp12, AlgebraSpec, Style, WeightWindow};
    use crate::kernel::Weight;

    fn mutated_k3() -> AlgebraSpec {
        let k = k3();
        let (eps, a) = (k.find("eps").unwrap(), k.find("a").unwrap());
        k.with_product(&eps, &a, el(&a)).unwrap()
    }

    #[test]
    fn k3_is_a_lie_antialgebra() {
        let k = k3();
        let sc = check_supercommutativity(&k).unwrap();
        assert!(sc.passed());
        assert_eq!(sc.entries[0].checked, 9);
        let r = check_lie_antialgebra(&k).unwrap();
        assert!(r.passed(), "{r}");
        assert_eq!(r.entries.len(), 5);
        assert!(check_jordan_superalgebra(&k).unwrap().passed());
        assert!(check_half_unit(&k, &k.find("eps").unwrap()).unwrap().0);
    }

    #[test]
    fn la1_witness() {
        let r = check_lie_antialgebra(&mutated_k3()).unwrap();
        let la1 = r.get("LA1").unwrap();
        assert_eq!(la1.status, Status::Fail);
        let w = la1.witness.as_ref().unwrap();
        assert_eq!(w.tuple, ["eps", "eps", "a"]);
        assert_eq!(w.lhs.to_string(), "a");
        assert_eq!(w.rhs.to_string(), "1/2 a");
    }

    #[test]
    fn mutation_breaks_jordan() {
        let r = check_jordan_superalgebra(&mutated_k3()).unwrap();
        assert_eq!(r.get("SJ2").unwrap().status, Status::Fail);
    }

    #[test]
    fn symmetric_odd_square_breaks_supercommutativity() {
        let k = k3();
        let (a, b, eps) = (k.find("a").unwrap(), k.find("b").unwrap(), k.find("eps").unwrap());
        let bad = k.with_raw_product(&b, &a, Element::term(Scalar::HALF, eps)).unwrap();
        let r = check_supercommutativity(&bad).unwrap();
        assert_eq!(r.entries[0].witness.as_ref().unwrap().tuple, ["a", "b"]);
    }

    #[test]
    fn zero_algebra_passes() {
        let gens = vec![BasisVector::even("x", Weight::ZERO), BasisVector::odd("y", Weight::ZERO)];
        let z = AlgebraSpec::from_table("Z", Style::Product, gens, vec![]).unwrap();
        assert!(check_supercommutativity(&z).unwrap().passed());
        assert!(check_lie_antialgebra(&z).unwrap().passed());
        assert!(check_jordan_superalgebra(&z).unwrap().passed());
    }

    #[test]
    fn ak1_window_counts_skips() {
        let s = catalog("AK1", Some(WeightWindow::ints(-3, 3))).unwrap();
        let r = check_lie_antialgebra(&s).unwrap();
        assert!(r.passed(), "{r}");
        assert!(r.entries.iter().any(|e| e.skipped > 0));
        assert!(check_half_unit(&s, &s.find("eps_0").unwrap()).unwrap().0);
    }

    #[test]
    fn osp12_and_k1_are_lie_superalgebras() {
        assert!(check_lie_superalgebra(&osp12()).unwrap().passed());
        let k1 = catalog("K1", Some(WeightWindow::ints(-3, 3))).unwrap();
        let r = check_lie_superalgebra(&k1).unwrap();
        assert!(r.passed(), "{r}");
    }

    #[test]
    fn osp12_mutation_breaks_jacobi() {
        let o = osp12();
        let (e, f, h) = (o.find("E").unwrap(), o.find("F").unwrap(), o.find("H").unwrap());
        let bad = o.with_product(&e, &f, -el(&h)).unwrap();
        let r = check_lie_superalgebra(&bad).unwrap();
        assert!(r.get("antisymmetry").unwrap().passed());
        assert_eq!(r.get("Jacobi").unwrap().status, Status::Fail);
    }

    #[test]
    fn odd_half_unit_is_a_domain_error() {
        let k = k3();
        assert!(check_half_unit(&k, &k.find("a").unwrap()).is_err());
    }

    #[test]
    fn wrong_style_rejected() {
        assert!(check_lie_antialgebra(&osp12()).is_err());
        assert!(check_lie_superalgebra(&k3()).is_err());
    }
}
