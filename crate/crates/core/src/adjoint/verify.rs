use std::collections::BTreeMap;

use serde::Serialize;

use super::AdjointSpec;
use crate::algebra::{catalog, osp12, AlgebraSpec};
use crate::axioms::{scan, AxiomReport, AxiomResult, Status, Witness};
use crate::error::{DomainError, Result};
use crate::kernel::{BasisVector, Element, Scalar, Weight};

fn el(g: &BasisVector) -> Element {
    Element::basis(g.clone())
}

/// Representative independence, the alternative expansions of the even-even
/// bracket, graded antisymmetry, graded Jacobi by parity pattern, and the
/// five-variable identity behind the even-even-odd Jacobi case.
pub fn verify_adjoint_consistency(adj: &AdjointSpec) -> Result<AxiomReport> {
    let base = adj.base();
    let g = adj.spec();
    let odds = base.odds();
    let evens = g.evens();
    let m = |x: &Element, y: &Element| base.product(x, y);
    let sym = |x: &Element, y: &Element| adj.sym(x, y);
    let o4 = vec![odds.clone(); 4];
    let mut report = AxiomReport::default();

    report.push(scan("well-defined [a.b, c]", &vec![odds.clone(); 3], |t| {
        let [a, b, c] = [0, 1, 2].map(|i| el(&t[i]));
        Ok((adj.even_odd_formula(&a, &b, &c)?, g.product(&sym(&a, &b)?, &c)?))
    })?);
    report.push(scan("well-defined [a.b, c.d]", &o4, |t| {
        let [a, b, c, d] = [0, 1, 2, 3].map(|i| el(&t[i]));
        Ok((adj.even_even_formula(&a, &b, &c, &d)?, g.product(&sym(&a, &b)?, &sym(&c, &d)?)?))
    })?);
    report.push(scan("symmetric expansion", &o4, |t| {
        let [a, b, c, d] = [0, 1, 2, 3].map(|i| el(&t[i]));
        let rhs = sym(&m(&a, &m(&b, &c)?)?, &d)?
            + sym(&m(&b, &m(&a, &d)?)?, &c)?
            + sym(&m(&b, &m(&a, &c)?)?, &d)?
            + sym(&m(&a, &m(&b, &d)?)?, &c)?;
        Ok((adj.even_even_formula(&a, &b, &c, &d)?, rhs))
    })?);
    report.push(scan("swapped expansion", &o4, |t| {
        let [a, b, c, d] = [0, 1, 2, 3].map(|i| el(&t[i]));
        let rhs = sym(&m(&d, &m(&b, &c)?)?, &a)?
            + sym(&m(&c, &m(&a, &d)?)?, &b)?
            + sym(&m(&d, &m(&a, &c)?)?, &b)?
            + sym(&m(&c, &m(&b, &d)?)?, &a)?;
        Ok((adj.even_even_formula(&a, &b, &c, &d)?, rhs))
    })?);
    report.push(scan("derivation form", &o4, |t| {
        let [a, b, c, d] = [0, 1, 2, 3].map(|i| el(&t[i]));
        let rhs = sym(&adj.even_odd_formula(&a, &b, &c)?, &d)? + sym(&adj.even_odd_formula(&a, &b, &d)?, &c)?;
        Ok((adj.even_even_formula(&a, &b, &c, &d)?, rhs))
    })?);
    report.push(scan("even-even antisymmetry", &o4, |t| {
        let [a, b, c, d] = [0, 1, 2, 3].map(|i| el(&t[i]));
        Ok((adj.even_even_formula(&a, &b, &c, &d)?, -adj.even_even_formula(&c, &d, &a, &b)?))
    })?);

    let all = g.generators().to_vec();
    report.push(scan("antisymmetry", &[all.clone(), all], |t| {
        let (x, y) = (&t[0], &t[1]);
        Ok((g.product_gen(x, y)?, g.product_gen(y, x)?.scaled(-x.parity().swap_sign(y.parity()))))
    })?);
    let br = |x: &Element, y: &Element| g.product(x, y);
    for (id, domains) in [
        ("Jacobi (odd,odd,odd)", [odds.clone(), odds.clone(), odds.clone()]),
        ("Jacobi (even,odd,odd)", [evens.clone(), odds.clone(), odds.clone()]),
        ("Jacobi (even,even,odd)", [evens.clone(), evens.clone(), odds.clone()]),
        ("Jacobi (even,even,even)", [evens.clone(), evens.clone(), evens.clone()]),
    ] {
        report.push(scan(id, &domains, |t| {
            let (px, py, pz) = (t[0].parity(), t[1].parity(), t[2].parity());
            let [x, y, z] = [0, 1, 2].map(|i| el(&t[i]));
            let lhs = br(&br(&x, &y)?, &z)?.scaled(px.swap_sign(pz))
                + br(&br(&y, &z)?, &x)?.scaled(py.swap_sign(px))
                + br(&br(&z, &x)?, &y)?.scaled(pz.swap_sign(py));
            Ok((lhs, Element::zero()))
        })?);
    }
    report.push(scan("J2 - J1", &vec![odds; 5], |t| {
        let [a, b, c, d, e] = [0, 1, 2, 3, 4].map(|i| el(&t[i]));
        let j1 = m(&m(&a, &m(&b, &c)?)?, &m(&d, &e)?)? - m(&a, &m(&b, &m(&c, &m(&d, &e)?)?)?)?
            + m(&m(&b, &m(&a, &c)?)?, &m(&d, &e)?)?
            - m(&b, &m(&a, &m(&c, &m(&d, &e)?)?)?)?;
        let j2 = m(&c, &m(&e, &m(&b, &m(&a, &d)?)?)?)? - m(&c, &m(&d, &m(&b, &m(&a, &e)?)?)?)?
            + m(&c, &m(&e, &m(&a, &m(&b, &d)?)?)?)?
            - m(&c, &m(&d, &m(&a, &m(&b, &e)?)?)?)?;
        Ok((j2, j1))
    })?);
    Ok(report)
}

/// Checks that `phi` (given on generators of `src`) preserves the structure map
/// on every pair of generators where both sides are defined.
pub fn check_homomorphism(
    id: &str,
    src: &AlgebraSpec,
    dst: &AlgebraSpec,
    phi: &BTreeMap<BasisVector, Element>,
) -> Result<AxiomResult> {
    let image = |g: &BasisVector| -> Result<Element> {
        phi.get(g).cloned().ok_or_else(|| DomainError::UnknownGenerator(g.to_string()).into())
    };
    let gens = src.generators().to_vec();
    scan(id, &[gens.clone(), gens], |t| {
        let lhs = src.product_gen(&t[0], &t[1])?.try_map_linear(image)?;
        let rhs = dst.product(&image(&t[0])?, &image(&t[1])?)?;
        Ok((lhs, rhs))
    })
}

/// Images of the `osp(1|2)` generators: `E = 2 a.a`, `F = -2 b.b`, `H = -4 a.b`,
/// `A = 2a`, `B = 2b`.
pub fn osp12_images(adj: &AdjointSpec) -> Result<BTreeMap<BasisVector, Element>> {
    let base = adj.base();
    let (a, b) = (el(&base.find("a")?), el(&base.find("b")?));
    let o = osp12();
    let two = Scalar::int(2);
    Ok(BTreeMap::from([
        (o.find("E")?, adj.sym(&a, &a)?.scaled(two)),
        (o.find("F")?, adj.sym(&b, &b)?.scaled(-two)),
        (o.find("H")?, adj.sym(&a, &b)?.scaled(Scalar::int(-4))),
        (o.find("A")?, a.scaled(two)),
        (o.find("B")?, b.scaled(two)),
    ]))
}

/// The rescaled identification with `osp(1|2)`: bracket preservation on all 25
/// generator pairs and matching dimensions.
pub fn match_osp12(adj: &AdjointSpec) -> Result<AxiomReport> {
    let images = osp12_images(adj)?;
    let brackets = check_homomorphism("osp(1|2) brackets", &osp12(), adj.spec(), &images)?;
    let dims = (adj.even_dimension(), adj.odd_dimension());
    let witness = (dims != (3, 2)).then(|| Witness {
        tuple: vec!["dimension".into()],
        lhs: Element::term(Scalar::int(dims.0 as i64), BasisVector::even("even", Weight::ZERO))
            + Element::term(Scalar::int(dims.1 as i64), BasisVector::odd("odd", Weight::ZERO)),
        rhs: Element::term(Scalar::int(3), BasisVector::even("even", Weight::ZERO))
            + Element::term(Scalar::int(2), BasisVector::odd("odd", Weight::ZERO)),
    });
    Ok(AxiomReport { entries: vec![brackets, AxiomResult::single("osp(1|2) dimensions", witness)] })
}

/// Outcome of comparing the adjoint of the windowed anti-Kaplansky family with
/// the conformal family on the same window.
#[derive(Clone, Debug, Serialize)]
pub struct K1Match {
    pub report: AxiomReport,
    /// `c_n` with `a_i . a_{n-i} = c_n` times the chosen class of weight `n`.
    pub normalization: BTreeMap<Weight, Scalar>,
}

fn odd_splits(odds: &[BasisVector], n: Weight) -> Vec<(BasisVector, BasisVector)> {
    let mut out = Vec::new();
    for a in odds {
        if let Some(b) = odds.iter().find(|b| b.weight() == n - a.weight()) {
            out.push((a.clone(), b.clone()));
        }
    }
    out
}

/// Sends `x_n` to `a_i . a_{n-i}` (smallest admissible `i`) and `a_i` to itself,
/// then checks that the brackets agree, that the image does not depend on the
/// split, and that each weight carries exactly one class.
pub fn match_k1(adj: &AdjointSpec) -> Result<K1Match> {
    let window = adj
        .base()
        .window()
        .ok_or_else(|| DomainError::MissingWindow(adj.base().name().to_string()))?;
    let k1 = catalog("K1", Some(window))?;
    let odds = adj.base().odds();
    let mut phi = BTreeMap::new();
    let mut normalization = BTreeMap::new();
    let mut split_witness = None;
    let mut splits_checked = 0;
    for g in k1.generators() {
        if g.is_odd() {
            phi.insert(g.clone(), el(&adj.base().find(&g.to_string())?));
            continue;
        }
        let splits = odd_splits(&odds, g.weight());
        let Some((a, b)) = splits.first() else { continue };
        let image = adj.sym(&el(a), &el(b))?;
        for (c, d) in &splits[1..] {
            splits_checked += 1;
            let other = adj.sym(&el(c), &el(d))?;
            if other != image && split_witness.is_none() {
                split_witness = Some(Witness {
                    tuple: vec![a.to_string(), b.to_string(), c.to_string(), d.to_string()],
                    lhs: image.clone(),
                    rhs: other,
                });
            }
        }
        if let Some((_, c)) = image.iter().next().filter(|_| image.len() == 1) {
            normalization.insert(g.weight(), *c);
        }
        phi.insert(g.clone(), image);
    }
    let mut report = AxiomReport::default();
    report.push(check_homomorphism("K1 brackets", &k1, adj.spec(), &phi)?);
    report.push(AxiomResult {
        id: "split independence".into(),
        status: if split_witness.is_some() { Status::Fail } else { Status::Pass },
        witness: split_witness,
        checked: splits_checked,
        skipped: 0,
    });
    let dims = adj.even_dimension_by_weight();
    let bad = dims.iter().find(|(_, &d)| d != 1);
    report.push(AxiomResult {
        id: "one class per weight".into(),
        status: if bad.is_some() { Status::Fail } else { Status::Pass },
        witness: bad.map(|(w, d)| Witness {
            tuple: vec![format!("weight {w}")],
            lhs: Element::term(Scalar::int(*d as i64), BasisVector::even("dim", *w)),
            rhs: Element::basis(BasisVector::even("dim", *w)),
        }),
        checked: dims.len(),
        skipped: 0,
    });
    Ok(K1Match { report, normalization })
}
