//! Workloads shared by the benchmarks.

use antialg_core::algebra::{catalog, k3};
use antialg_core::axioms::check_lie_antialgebra;
use antialg_core::enveloping::{build_env_antialgebra, pbw_check, RewriteSystem, WordElement};
use antialg_core::{Result, WeightWindow};

/// `U(K3)` completed to `degree`.
pub fn k3_enveloping(degree: u32) -> Result<RewriteSystem> {
    let mut rs = build_env_antialgebra(&k3())?;
    rs.complete(degree)?;
    Ok(rs)
}

/// Completes `U(AK1)` on `[-half_width, half_width]`; returns the number of rules
/// added.
pub fn complete_ak1(half_width: i32, degree: u32) -> Result<usize> {
    let spec = catalog("AK1", Some(WeightWindow::ints(-half_width, half_width)))?;
    let mut rs = build_env_antialgebra(&spec)?;
    rs.complete(degree)?;
    Ok(rs.log().len())
}

/// `B^k A^k` in `U(K3)`, the worst ordering for the rewriting.
pub fn reversed_word(rs: &RewriteSystem, k: usize) -> Result<WordElement> {
    Ok(rs.parse(&format!("B^{k} A^{k}"))?)
}

pub fn normal_form(rs: &RewriteSystem, e: &WordElement) -> Result<usize> {
    Ok(rs.normal_form(e)?.len())
}

pub fn k3_pbw(degree: u32) -> Result<bool> {
    Ok(pbw_check(&k3(), degree)?.holds)
}

/// Exhaustive Lie antialgebra scan of `AK1` on `[-half_width, half_width]`.
pub fn ak1_axioms(half_width: i32) -> Result<bool> {
    let spec = catalog("AK1", Some(WeightWindow::ints(-half_width, half_width)))?;
    Ok(check_lie_antialgebra(&spec)?.passed())
}
