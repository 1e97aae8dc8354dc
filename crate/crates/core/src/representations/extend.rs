use std::collections::BTreeMap;

use super::operator::Operator;
use super::rep::Representation;
use crate::adjoint::{osp12_images, AdjointSpec};
use crate::algebra::osp12;
use crate::axioms::{scan, AxiomReport, AxiomResult, Status, Witness};
use crate::error::{DomainError, Error, Result};
use crate::kernel::{BasisVector, Element, Scalar};

/// The operators induced on the adjoint superalgebra, and their rescaling to a
/// representation for the standard bracket.
#[derive(Clone, Debug)]
pub struct Extension {
    /// `a -> rho(a)`, `a.b -> 1/2 (rho(a) rho(b) + rho(b) rho(a))`.
    pub rho_tilde: Representation,
    /// `c` such that `a -> c rho(a)`, `a.b -> 2 c^2 rho~(a.b)` preserves brackets.
    pub scale: Option<Scalar>,
    pub sigma: Option<Representation>,
    pub report: AxiomReport,
}

fn exact_sqrt(x: Scalar) -> Option<Scalar> {
    if x.is_negative() {
        return None;
    }
    let root = |n: i64| {
        let r = (n as f64).sqrt().round() as i64;
        (r - 1..=r + 1).find(|k| *k >= 0 && k * k == n)
    };
    Some(Scalar::new(root(x.numer())?, root(x.denom())?))
}

/// `[X, Y] = X Y - (-1)^{xy} Y X` applied to `w`.
fn super_commutator(x: &Operator, px: &BasisVector, y: &Operator, py: &BasisVector, w: &Element) -> Result<Element> {
    let xy = x.apply(&y.apply(w)?)?;
    let yx = y.apply(&x.apply(w)?)?;
    Ok(xy - yx.scaled(px.parity().swap_sign(py.parity())))
}

/// `[rho X, rho Y] = rho [X, Y]` on every generator pair and carrier vector of a
/// bracket-style algebra.
pub fn check_lie_representation(rep: &Representation) -> Result<AxiomReport> {
    let spec = rep.spec();
    if !spec.is_bracket() {
        return Err(DomainError::Unsupported(format!("`{}` is product-style", spec.name())).into());
    }
    let gens = spec.generators().to_vec();
    let r = scan("brackets", &[gens.clone(), gens, rep.carrier().to_vec()], |t| {
        let w = Element::basis(t[2].clone());
        let lhs = super_commutator(&rep.operator(&t[0]), &t[0], &rep.operator(&t[1]), &t[1], &w)?;
        let rhs = rep.image(&spec.product_gen(&t[0], &t[1])?).apply(&w)?;
        Ok((lhs, rhs))
    })?;
    Ok(AxiomReport { entries: vec![r] })
}

fn well_defined(rep: &Representation, adj: &AdjointSpec) -> Result<AxiomResult> {
    let mut out = AxiomResult { id: "well-defined".into(), status: Status::Pass, witness: None, checked: 0, skipped: 0 };
    for rel in adj.relations().basis() {
        let mut op = Operator::zero();
        for (pair, c) in rel.iter() {
            let (p, q) = (rep.operator(&pair.0), rep.operator(&pair.1));
            op.add_scaled(*c, &Operator::combine2(Scalar::HALF, &p, &q, Scalar::HALF));
        }
        for v in rep.carrier() {
            match op.apply_basis(v) {
                Ok(img) => {
                    out.checked += 1;
                    if !img.is_zero() {
                        let names = rel.iter().map(|(p, c)| format!("{c} {p}")).collect::<Vec<_>>().join(" + ");
                        return Err(Error::IllDefined(format!("the relation {names} acts on {v} as {img}")));
                    }
                }
                Err(Error::Window(_)) => out.skipped += 1,
                Err(e) => return Err(e),
            }
        }
    }
    Ok(out)
}

/// The first nonzero coordinate ratio `rho~([X, a]) / (2 [rho~ X, rho a])`.
fn normalization(rho_tilde: &Representation, adj: &AdjointSpec) -> Result<Option<(Scalar, Vec<String>)>> {
    let spec = adj.spec();
    for (x, _) in adj.classes() {
        for a in adj.base().odds() {
            let bracket = match spec.product_gen(x, &a) {
                Ok(e) => e,
                Err(Error::Window(_)) => continue,
                Err(e) => return Err(e),
            };
            for w in rho_tilde.carrier() {
                let w_el = Element::basis(w.clone());
                let ops = (rho_tilde.operator(x), rho_tilde.operator(&a));
                let (l, r) = match (
                    super_commutator(&ops.0, x, &ops.1, &a, &w_el),
                    rho_tilde.image(&bracket).apply(&w_el),
                ) {
                    (Ok(l), Ok(r)) => (l.scaled(Scalar::int(2)), r),
                    (Err(Error::Window(_)), _) | (_, Err(Error::Window(_))) => continue,
                    (Err(e), _) | (_, Err(e)) => return Err(e),
                };
                let ratio = l.iter().next().map(|(t, c)| r.coeff(t) / *c);
                if let Some(ratio) = ratio {
                    return Ok(Some((ratio, vec![x.to_string(), a.to_string(), w.to_string()])));
                }
            }
        }
    }
    Ok(None)
}

/// Extends a representation of a Lie antialgebra to its adjoint superalgebra:
/// odd generators keep their operators and the class of `a.b` acts by the
/// symmetrized product. Checks that this is independent of the representative,
/// finds the rescaling `c` that turns it into a bracket-preserving map and
/// verifies all brackets.
pub fn extend_representation(rep: &Representation, adj: &AdjointSpec) -> Result<Extension> {
    if rep.spec().generators() != adj.base().generators() {
        return Err(DomainError::Inconsistent(format!(
            "`{}` acts on `{}`, not on `{}`",
            rep.name(),
            rep.spec().name(),
            adj.base().name()
        ))
        .into());
    }
    let mut report = AxiomReport::default();
    report.push(well_defined(rep, adj)?);

    let mut action: BTreeMap<BasisVector, Operator> = BTreeMap::new();
    for a in adj.base().odds() {
        action.insert(a.clone(), rep.operator(&a));
    }
    for (x, pair) in adj.classes() {
        let (p, q) = (rep.operator(&pair.0), rep.operator(&pair.1));
        action.insert(x.clone(), Operator::combine2(Scalar::HALF, &p, &q, Scalar::HALF));
    }
    let name = format!("{}~", rep.name());
    let rho_tilde = Representation::new(&name, adj.spec(), rep.carrier().to_vec(), action)?;

    let (square, tuple) = normalization(&rho_tilde, adj)?.unwrap_or((Scalar::ONE, vec![]));
    let scale = exact_sqrt(square).filter(|c| !c.is_zero());
    let witness = scale.is_none().then(|| Witness {
        tuple,
        lhs: Element::term(square, BasisVector::even("c^2", crate::kernel::Weight::ZERO)),
        rhs: Element::zero(),
    });
    report.push(AxiomResult::single("normalization", witness));

    let sigma = match scale {
        Some(c) => {
            let mut action = BTreeMap::new();
            for g in adj.spec().generators() {
                let k = if g.is_odd() { c } else { Scalar::int(2) * c * c };
                action.insert(g.clone(), rho_tilde.operator(g).scaled(k));
            }
            let s = Representation::new(&format!("{}'", rep.name()), adj.spec(), rep.carrier().to_vec(), action)?;
            report.extend(check_lie_representation(&s)?);
            Some(s)
        }
        None => None,
    };
    Ok(Extension { rho_tilde, scale, sigma, report })
}

/// Transports a representation of the adjoint of `K3` to `osp(1|2)` along the
/// rescaled identification.
pub fn to_osp12(sigma: &Representation, adj: &AdjointSpec) -> Result<Representation> {
    let images = osp12_images(adj)?;
    let action = images.iter().map(|(g, x)| (g.clone(), sigma.image(x))).collect();
    Representation::new(&format!("{}@osp12", sigma.name()), &osp12(), sigma.carrier().to_vec(), action)
}
