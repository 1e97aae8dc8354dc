//! The density modules `F_lambda` of the conformal family on `{f_m, phi_i}` and
//! the test of whether `a_i -> chi_{a_i}` extends to an action of the
//! anti-Kaplansky family.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use super::operator::Operator;
use super::rep::Representation;
use crate::algebra::{catalog, WeightWindow};
use crate::axioms::{scan, AxiomResult, Status, Witness};
use crate::error::{DomainError, Error, Result, WindowError};
use crate::kernel::{BasisVector, Element, Parity, Scalar, Weight};

pub fn f_vector(m: Weight) -> BasisVector {
    BasisVector::indexed("f", m, Parity::Even, m)
}

pub fn phi_vector(i: Weight) -> BasisVector {
    BasisVector::indexed("phi", i, Parity::Odd, i)
}

fn eps_vector(n: Weight) -> BasisVector {
    BasisVector::indexed("eps", n, Parity::Even, n)
}

fn column(window: WeightWindow, c: Scalar, target: BasisVector, op: &mut Operator, source: BasisVector) {
    if c.is_zero() {
        op.set(source, Element::zero());
    } else if window.contains(target.weight()) {
        op.set(source, Element::term(c, target));
    } else {
        op.mark_undefined(source);
    }
}

/// `chi_{x_n}(f_m) = (m + lambda n) f_{n+m}`, `chi_{x_n}(phi_i) = (i + (lambda + 1/2) n) phi_{n+i}`,
/// `chi_{a_i}(f_n) = (n/2 + lambda i) phi_{i+n}`, `chi_{a_i}(phi_j) = 2 f_{i+j}`,
/// on the basis vectors inside `window`.
pub fn density_rep(lambda: Scalar, window: WeightWindow) -> Result<Representation> {
    let spec = catalog("K1", Some(window))?;
    let ints = window.weights_in_coset(Weight::ZERO);
    let halves = window.weights_in_coset(Weight::half(1));
    let mut carrier: Vec<BasisVector> = ints.iter().map(|&m| f_vector(m)).collect();
    carrier.extend(halves.iter().map(|&i| phi_vector(i)));
    let s = Weight::to_scalar;
    let mut action = BTreeMap::new();
    for &n in &ints {
        let mut op = Operator::zero();
        for &m in &ints {
            column(window, s(m) + lambda * s(n), f_vector(n + m), &mut op, f_vector(m));
        }
        for &i in &halves {
            column(window, s(i) + (lambda + Scalar::HALF) * s(n), phi_vector(n + i), &mut op, phi_vector(i));
        }
        action.insert(spec.find(&format!("x_{n}"))?, op);
    }
    for &i in &halves {
        let mut op = Operator::zero();
        for &n in &ints {
            column(window, s(n) * Scalar::HALF + lambda * s(i), phi_vector(i + n), &mut op, f_vector(n));
        }
        for &j in &halves {
            column(window, Scalar::int(2), f_vector(i + j), &mut op, phi_vector(j));
        }
        action.insert(spec.find(&format!("a_{i}"))?, op);
    }
    Representation::new(&format!("F({lambda})"), &spec, carrier, action)
}

#[derive(Clone, Debug, Serialize)]
pub struct DensityReport {
    pub lambda: Scalar,
    pub window: String,
    /// `(chi_{a_i} chi_{a_j} - chi_{a_j} chi_{a_i}) / (j - i)` depends only on `i + j`.
    pub well_defined: AxiomResult,
    /// `chi_{eps_n} chi_{a_i} + chi_{a_i} chi_{eps_n} = chi_{a_{n+i}}`.
    pub anticommutator: AxiomResult,
    /// `chi_{eps_n} chi_{eps_m} = chi_{eps_{n+m}}`.
    pub multiplicative: AxiomResult,
    pub holds: bool,
}

impl fmt::Display for DensityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "lambda = {}, window {}", self.lambda, self.window)?;
        writeln!(f, "antialgebra structure: {}", if self.holds { "YES" } else { "NO" })?;
        for r in [&self.well_defined, &self.anticommutator, &self.multiplicative] {
            write!(f, "{:<28} {:<7} checked {:>6}, skipped {:>6}", r.id, r.status, r.checked, r.skipped)?;
            if let Some(w) = &r.witness {
                write!(f, "  witness {w}")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

fn candidate(rep: &Representation, i: Weight, j: Weight) -> Result<Operator> {
    let spec = rep.spec();
    let (ai, aj) = (rep.operator(&spec.find(&format!("a_{i}"))?), rep.operator(&spec.find(&format!("a_{j}"))?));
    Ok(Operator::combine2(Scalar::ONE, &ai, &aj, -Scalar::ONE).scaled((j - i).to_scalar().recip()))
}

/// Checks whether `eps_n`, defined from the odd operators, gives an action of
/// the anti-Kaplansky family. Carrier vectors whose images leave the window are
/// skipped in every comparison.
pub fn density_antialgebra_check(lambda: Scalar, window: WeightWindow) -> Result<DensityReport> {
    let rep = density_rep(lambda, window)?;
    let halves = window.weights_in_coset(Weight::half(1));
    let ints = window.weights_in_coset(Weight::ZERO);
    if halves.len() < 2 {
        return Err(DomainError::Unsupported(format!("window {window} holds fewer than two odd generators")).into());
    }

    let mut well = AxiomResult { id: "split independence".into(), status: Status::Pass, witness: None, checked: 0, skipped: 0 };
    let mut eps: BTreeMap<BasisVector, Operator> = BTreeMap::new();
    for &n in &ints {
        let pairs: Vec<(Weight, Weight)> = halves
            .iter()
            .filter_map(|&i| {
                let j = n - i;
                (i < j && halves.contains(&j)).then_some((i, j))
            })
            .collect();
        let ops = pairs.iter().map(|&(i, j)| candidate(&rep, i, j)).collect::<Result<Vec<_>>>()?;
        let mut merged = Operator::zero();
        for v in rep.carrier() {
            let images: Vec<(usize, Element)> =
                ops.iter().enumerate().filter_map(|(k, op)| op.apply_basis(v).ok().map(|e| (k, e))).collect();
            well.skipped += ops.len() - images.len();
            match images.first() {
                None => merged.mark_undefined(v.clone()),
                Some((k0, e0)) => {
                    merged.set(v.clone(), e0.clone());
                    for (k, e) in &images[1..] {
                        well.checked += 1;
                        if e != e0 && well.witness.is_none() {
                            let pair = |k: usize| format!("a_{}.a_{}", pairs[k].0, pairs[k].1);
                            well.status = Status::Fail;
                            well.witness =
                                Some(Witness { tuple: vec![pair(*k0), pair(*k), v.to_string()], lhs: e0.clone(), rhs: e.clone() });
                        }
                    }
                }
            }
        }
        if !pairs.is_empty() {
            eps.insert(eps_vector(n), merged);
        }
    }

    let spec = rep.spec();
    let eps_gens: Vec<BasisVector> = eps.keys().cloned().collect();
    let eps_op = |g: &BasisVector| -> Result<&Operator> {
        eps.get(g).ok_or_else(|| Error::from(WindowError { generator: g.to_string(), weight: g.weight() }))
    };
    let carrier = rep.carrier().to_vec();
    let anti = scan("anticommutator", &[eps_gens.clone(), spec.odds(), carrier.clone()], |t| {
        let (e, a) = (eps_op(&t[0])?, rep.operator(&t[1]));
        let target = spec.find(&format!("a_{}", t[0].weight() + t[1].weight()))?;
        let w = Element::basis(t[2].clone());
        let lhs = e.apply(&a.apply(&w)?)? + a.apply(&e.apply(&w)?)?;
        Ok((lhs, rep.operator(&target).apply(&w)?))
    })?;
    let mult = scan("multiplicativity", &[eps_gens.clone(), eps_gens, carrier], |t| {
        let (x, y) = (eps_op(&t[0])?, eps_op(&t[1])?);
        let z = eps_op(&eps_vector(t[0].weight() + t[1].weight()))?;
        let w = Element::basis(t[2].clone());
        Ok((x.apply(&y.apply(&w)?)?, z.apply(&w)?))
    })?;
    let holds = well.passed() && anti.passed() && mult.passed();
    Ok(DensityReport {
        lambda,
        window: window.to_string(),
        well_defined: well,
        anticommutator: anti,
        multiplicative: mult,
        holds,
    })
}

/// The scalar `k` with `chi_g(v) = k [g, v]` for every generator `g` and carrier
/// vector `v` of `F_{-1}`, under `f_m <-> x_m`, `phi_i <-> a_i`; `None` when the
/// two actions are not proportional.
pub fn density_adjoint_factor(window: WeightWindow) -> Result<Option<Scalar>> {
    let rep = density_rep(-Scalar::ONE, window)?;
    let spec = rep.spec().clone();
    let to_gen = |v: &BasisVector| -> Result<BasisVector> {
        let i = v.index().expect("indexed carrier");
        spec.find(&format!("{}_{i}", if v.is_odd() { "a" } else { "x" }))
    };
    let mut factor: Option<Scalar> = None;
    for g in spec.generators() {
        let op = rep.operator(g);
        for v in rep.carrier() {
            let chi = match op.apply_basis(v) {
                Ok(e) => e,
                Err(Error::Window(_)) => continue,
                Err(e) => return Err(e),
            };
            let br = match spec.product_gen(g, &to_gen(v)?) {
                Ok(e) => e,
                Err(Error::Window(_)) => continue,
                Err(e) => return Err(e),
            };
            let chi_as_gens = chi.try_map_linear(|t| to_gen(t).map(Element::basis))?;
            if let Some((t, c)) = br.iter().next() {
                let k = chi_as_gens.coeff(t) / *c;
                if factor.is_some_and(|f| f != k) {
                    return Ok(None);
                }
                factor = Some(k);
            }
            let k = factor.unwrap_or(Scalar::ONE);
            if chi_as_gens != br.scaled(k) {
                return Ok(None);
            }
        }
    }
    Ok(factor)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::representations::check_lie_representation;

    fn w6() -> WeightWindow {
        WeightWindow::ints(-6, 6)
    }

    fn chi(rep: &Representation, g: &str, v: BasisVector) -> Element {
        let g = rep.spec().find(g).unwrap();
        rep.act(&g, &Element::basis(v)).unwrap()
    }

    #[test]
    fn action_formulas() {
        let r = density_rep(-Scalar::ONE, w6()).unwrap();
        assert_eq!(chi(&r, "x_2", f_vector(Weight::int(1))), Element::term(Scalar::int(-1), f_vector(Weight::int(3))));
        let r0 = density_rep(Scalar::ZERO, w6()).unwrap();
        assert_eq!(chi(&r0, "x_2", f_vector(Weight::int(3))), Element::term(Scalar::int(3), f_vector(Weight::int(5))));
        for lambda in [Scalar::ZERO, Scalar::new(1, 4), Scalar::int(2)] {
            let r = density_rep(lambda, w6()).unwrap();
            let img = chi(&r, "a_1/2", phi_vector(Weight::half(3)));
            assert_eq!(img, Element::term(Scalar::int(2), f_vector(Weight::int(2))));
        }
        let edge = r0.operator(&r0.spec().find("x_2").unwrap());
        assert!(edge.apply_basis(&f_vector(Weight::int(5))).is_err());
    }

    #[test]
    fn halved_action_represents_the_conformal_family() {
        for lambda in [Scalar::ZERO, Scalar::HALF, Scalar::int(2)] {
            let r = density_rep(lambda, WeightWindow::ints(-3, 3)).unwrap();
            let mut action = BTreeMap::new();
            for g in r.spec().generators() {
                action.insert(g.clone(), r.operator(g).scaled(Scalar::HALF));
            }
            let half = Representation::new("half", r.spec(), r.carrier().to_vec(), action).unwrap();
            let rep = check_lie_representation(&half).unwrap();
            assert!(rep.passed(), "{rep}");
            assert!(!check_lie_representation(&r).unwrap().passed());
        }
    }

    #[test]
    fn structure_exactly_at_zero_and_half() {
        for (n, d) in [(-1, 1), (0, 1), (1, 4), (1, 2), (1, 1), (2, 1)] {
            let lambda = Scalar::new(n, d);
            let r = density_antialgebra_check(lambda, w6()).unwrap();
            assert!(r.well_defined.passed(), "{r}");
            assert!(r.anticommutator.passed(), "{r}");
            assert_eq!(r.holds, lambda == Scalar::ZERO || lambda == Scalar::HALF, "{r}");
            if !r.holds {
                assert_eq!(r.multiplicative.status, Status::Fail);
            }
        }
    }

    #[test]
    fn quarter_witness() {
        let r = density_antialgebra_check(Scalar::new(1, 4), w6()).unwrap();
        let w = r.multiplicative.witness.unwrap();
        assert!(w.tuple[2].starts_with("f_"), "{w}");
        let (l, rr) = (w.lhs.iter().next().unwrap(), w.rhs.iter().next().unwrap());
        assert_eq!(l.0, rr.0);
        assert_eq!((*l.1, *rr.1), (Scalar::new(1, 4), Scalar::HALF));
    }

    #[test]
    fn eps_acts_on_phi_by_one_minus_two_lambda() {
        let r = density_rep(Scalar::HALF, w6()).unwrap();
        let c = candidate(&r, Weight::half(-1), Weight::half(3)).unwrap().apply_basis(&phi_vector(Weight::half(1))).unwrap();
        assert!(c.is_zero());
        let r = density_rep(Scalar::new(1, 4), w6()).unwrap();
        let c = candidate(&r, Weight::half(-1), Weight::half(3)).unwrap().apply_basis(&f_vector(Weight::int(0))).unwrap();
        assert_eq!(c, Element::term(Scalar::HALF, f_vector(Weight::int(1))));
    }

    #[test]
    fn adjoint_module_is_twice_the_bracket() {
        assert_eq!(density_adjoint_factor(WeightWindow::ints(-3, 3)).unwrap(), Some(Scalar::int(2)));
    }
}
