use std::fmt;

use serde::Serialize;

use super::rep::v_ad;
use crate::algebra::k3;
use crate::kernel::{Element, Scalar};

/// Outcome of replaying the constraints on an irreducible module with a vector
/// `v` of parity `sigma`, `eps.v = v/2`, `b.v = 0` and `b.(a.v) = m/4 v`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct IrrVerdict {
    pub m: u32,
    pub sigma: u8,
    pub consistent: bool,
    pub trace: Vec<String>,
}

impl fmt::Display for IrrVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.consistent { "consistent" } else { "inconsistent" };
        writeln!(f, "Irr(sigma={}, 1/2, m={}): {verdict}", self.sigma, self.m)?;
        for line in &self.trace {
            writeln!(f, "  {line}")?;
        }
        Ok(())
    }
}

fn coeff(e: &Element, name: &str) -> Scalar {
    e.iter().find(|(g, _)| g.name() == name).map(|(_, c)| *c).unwrap_or(Scalar::ZERO)
}

/// Replays the argument using the product of `K3` only: an even `v` clashes
/// with even associativity, an odd one forces `b.(a.v) = v/4` through the odd
/// Jacobi identity, so only `m = 1` survives.
pub fn irr_consistency(m: u32, sigma: u8) -> IrrVerdict {
    let k = k3();
    let g = |n: &str| k.find(n).expect("K3 generator");
    let (eps, a, b) = (g("eps"), g("a"), g("b"));
    let prod = |x, y| k.product_gen(x, y).expect("K3 is finite");
    let lambda = Scalar::HALF;
    let mut trace = vec![format!("eps.v = {lambda} v, b.v = 0, b.(a.v) = {} v", Scalar::new(m as i64, 4))];

    if sigma == 0 {
        let ee = coeff(&prod(&eps, &eps), "eps");
        let lhs = lambda * lambda;
        let rhs = ee * lambda;
        trace.push(format!("v even: eps.(eps.v) = {lhs} v, (eps.eps).v = {ee} eps.v = {rhs} v"));
        let consistent = lhs == rhs;
        trace.push(if consistent {
            "even associativity holds".into()
        } else {
            format!("even associativity fails: {lhs} != {rhs}")
        });
        return IrrVerdict { m, sigma, consistent, trace };
    }

    // b.(a.v) + a.(v.b) + v.(b.a) = 0, with v.b = -b.v = 0 and v.eps = eps.v
    let ba = coeff(&prod(&b, &a), "eps");
    let vba = ba * lambda;
    let derived = -vba;
    trace.push(format!("b.a = {ba} eps, so v.(b.a) = {ba} eps.v = {vba} v"));
    trace.push("v.b = -b.v = 0, so a.(v.b) = 0".into());
    trace.push(format!("odd Jacobi: b.(a.v) = -a.(v.b) - v.(b.a) = {derived} v"));
    let expected = Scalar::new(m as i64, 4);
    let consistent = derived == expected;
    if consistent {
        let module = v_ad();
        let (w, u, vv) = (&module.carrier()[0], &module.carrier()[1], &module.carrier()[2]);
        let img = module.act(&b, &module.act(&a, &Element::basis(vv.clone())).expect("finite")).expect("finite");
        trace.push(format!("{derived} = {expected}; in Vad (v, a.v, a.a.v) = ({vv}, {w}, {u}) and b.(a.v) = {img}"));
    } else {
        trace.push(format!("{derived} != {expected}"));
    }
    IrrVerdict { m, sigma, consistent, trace }
}
