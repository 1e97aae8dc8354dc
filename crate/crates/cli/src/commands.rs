use anyhow::{bail, Context};

use antialg_core::adjoint::{build_adjoint, match_k1, match_osp12, verify_adjoint_consistency};
use antialg_core::algebra::k3;
use antialg_core::axioms::{
    check_jordan_superalgebra, check_lie_antialgebra, check_lie_superalgebra, check_supercommutativity,
    half_unit_result, AxiomResult, Status, Witness,
};
use antialg_core::enveloping::{bg_check, build_env_antialgebra, build_env_superalgebra, pbw_check, BracketConvention, RewriteSystem};
use antialg_core::representations::{
    check_la_module, check_la_representation, check_lie_representation, density_antialgebra_check, diffop_rep,
    extend_representation, load_representation, to_osp12, v_ad, Representation,
};
use antialg_core::{AlgebraSpec, BasisVector, Element, Error, Scalar, WeightWindow};

use crate::report::Outcome;
use crate::{RepCheck, Suite};

fn half_unit_candidate(spec: &AlgebraSpec, unit: Option<&str>) -> anyhow::Result<BasisVector> {
    if let Some(u) = unit {
        return Ok(spec.find(u)?);
    }
    for name in ["eps", "eps_0"] {
        if let Ok(g) = spec.find(name) {
            return Ok(g);
        }
    }
    spec.evens().into_iter().next().context("the algebra has no even generator")
}

pub fn verify(spec: &AlgebraSpec, suite: Suite, unit: Option<&str>) -> anyhow::Result<Outcome> {
    let mut o = Outcome::default();
    match suite {
        Suite::Antialgebra => {
            o.line(format!("Lie antialgebra axioms on {}", spec.name()));
            o.report(check_supercommutativity(spec)?);
            o.report(check_lie_antialgebra(spec)?);
        }
        Suite::Jordan => {
            o.line(format!("Jordan superalgebra axioms on {}", spec.name()));
            o.report(check_jordan_superalgebra(spec)?);
        }
        Suite::Superalgebra => {
            o.line(format!("Lie superalgebra axioms on {}", spec.name()));
            o.report(check_lie_superalgebra(spec)?);
        }
        Suite::Halfunit => {
            let e = half_unit_candidate(spec, unit)?;
            o.line(format!("half-unit {e} in {}", spec.name()));
            o.checks.push(half_unit_result(spec, &e)?);
        }
    }
    Ok(o)
}

fn enveloping(spec: &AlgebraSpec, degree: u32) -> anyhow::Result<RewriteSystem> {
    let mut rs = if spec.is_bracket() {
        build_env_superalgebra(spec, BracketConvention::Commutator)?
    } else {
        build_env_antialgebra(spec)?
    };
    rs.complete(degree)?;
    Ok(rs)
}

pub fn nf(spec: &AlgebraSpec, element: &str, degree: u32) -> anyhow::Result<Outcome> {
    let rs = enveloping(spec, degree)?;
    let e = rs.parse(element).with_context(|| format!("parsing `{element}`"))?;
    let shown = rs.show(&rs.normal_form(&e)?);
    let mut o = Outcome::text(format!("{shown}\n"));
    o.data("normal_form", &shown)?;
    Ok(o)
}

pub fn pbw(spec: &AlgebraSpec, degree: u32) -> anyhow::Result<Outcome> {
    let r = pbw_check(spec, degree)?;
    let mut o = Outcome::text(format!("{r}\n"));
    o.verdict = Some(r.holds);
    o.data("pbw", &r)?;
    Ok(o)
}

pub fn bg(spec: &AlgebraSpec) -> anyhow::Result<Outcome> {
    let mut o = Outcome::default();
    o.line(format!("cubic PBW conditions on {}", spec.name()));
    o.report(bg_check(spec)?);
    Ok(o)
}

pub fn adjoint(spec: &AlgebraSpec) -> anyhow::Result<Outcome> {
    let adj = build_adjoint(spec)?;
    let mut o = Outcome::default();
    o.line(format!(
        "adjoint of {}: even dimension {}, odd dimension {}",
        spec.name(),
        adj.even_dimension(),
        adj.odd_dimension()
    ));
    let gens = adj.spec().generators();
    let mut table = Vec::new();
    for (i, x) in gens.iter().enumerate() {
        for y in &gens[i..] {
            let shown = match adj.spec().product_gen(x, y) {
                Ok(e) if e.is_zero() => continue,
                Ok(e) => e.to_string(),
                Err(Error::Window(_)) => "?".to_string(),
                Err(e) => return Err(e.into()),
            };
            o.line(format!("[{x}, {y}] = {shown}"));
            table.push((x.to_string(), y.to_string(), shown));
        }
    }
    o.data("brackets", &table)?;
    o.data("even_dimension", adj.even_dimension())?;
    o.report(verify_adjoint_consistency(&adj)?);
    match spec.name() {
        "K3" => o.report(match_osp12(&adj)?),
        "AK1" => {
            let m = match_k1(&adj)?;
            for (w, c) in &m.normalization {
                o.line(format!("weight {w}: normalization {c}"));
            }
            o.data("normalization", &m.normalization)?;
            o.report(m.report);
        }
        _ => {}
    }
    Ok(o)
}

fn load_rep(spec: &AlgebraSpec, rep: &str, degree: u32) -> anyhow::Result<Representation> {
    let builtin = |r: Representation| {
        if spec.generators() != k3().generators() {
            bail!("`{rep}` is a representation of K3, not of {}", spec.name());
        }
        Ok(r)
    };
    match rep {
        "vad" => builtin(v_ad()),
        "diffop" => builtin(diffop_rep(degree)?),
        path => {
            let text = std::fs::read_to_string(path).with_context(|| format!("reading {path}"))?;
            Ok(load_representation(spec, &text).with_context(|| format!("in {path}"))?)
        }
    }
}

fn extension(o: &mut Outcome, rep: &Representation) -> anyhow::Result<()> {
    let adj = build_adjoint(rep.spec())?;
    let ext = match extend_representation(rep, &adj) {
        Ok(ext) => ext,
        Err(Error::IllDefined(msg)) => {
            o.line(format!("extension to the adjoint: {msg}"));
            o.checks.push(AxiomResult {
                id: "well-defined".into(),
                status: Status::Fail,
                witness: Some(Witness { tuple: vec![msg], lhs: Element::zero(), rhs: Element::zero() }),
                checked: 0,
                skipped: 0,
            });
            return Ok(());
        }
        Err(e) => return Err(e.into()),
    };
    if let Some(c) = ext.scale {
        o.line(format!("adjoint action rescaled by c = {c}"));
        o.data("scale", c)?;
    }
    o.report(ext.report);
    if let Some(sigma) = &ext.sigma {
        let mut r = check_lie_representation(&to_osp12(sigma, &adj)?)?;
        for e in &mut r.entries {
            e.id = format!("osp(1|2) {}", e.id);
        }
        o.report(r);
    }
    Ok(())
}

pub fn rep(spec: &AlgebraSpec, name: &str, check: Option<RepCheck>, degree: u32) -> anyhow::Result<Outcome> {
    let rep = load_rep(spec, name, degree)?;
    let check = check.unwrap_or(if name == "diffop" { RepCheck::Representation } else { RepCheck::Module });
    let mut o = Outcome::default();
    o.line(format!("{} of {} on {} vectors", rep.name(), spec.name(), rep.carrier().len()));
    match check {
        RepCheck::Module => o.report(check_la_module(&rep)?),
        RepCheck::Representation => o.report(check_la_representation(&rep)?),
    }
    if spec.generators() == k3().generators() {
        extension(&mut o, &rep)?;
    }
    Ok(o)
}

pub fn density(lambda: Scalar, window: WeightWindow) -> anyhow::Result<Outcome> {
    let r = density_antialgebra_check(lambda, window)?;
    let mut o = Outcome::default();
    o.line(format!("lambda = {}, window {}", r.lambda, r.window));
    o.line(format!("antialgebra structure: {}", if r.holds { "YES" } else { "NO" }));
    o.verdict = Some(r.holds);
    o.data("holds", r.holds)?;
    o.checks = vec![r.well_defined, r.anticommutator, r.multiplicative];
    Ok(o)
}

pub fn rules(spec: &AlgebraSpec, degree: u32) -> anyhow::Result<Outcome> {
    let rs = enveloping(spec, degree)?;
    let rules: Vec<String> = rs.rules().into_iter().map(|(l, r)| rs.show_rule(l, r)).collect();
    let mut o = Outcome::default();
    o.line(format!(
        "{} rules for U({}) completed to degree {degree}, {} added by completion",
        rules.len(),
        spec.name(),
        rs.log().len()
    ));
    for r in &rules {
        o.line(r);
    }
    o.data("rules", &rules)?;
    o.data("added", rs.log().len())?;
    Ok(o)
}
