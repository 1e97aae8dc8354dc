use std::collections::BTreeMap;
use std::fmt::Write as _;

use antialg_core::axioms::{AxiomReport, AxiomResult};
use serde::Serialize;
use serde_json::Value;

/// What a command produced: a human-readable body, the individual checks and a
/// machine-readable payload.
#[derive(Debug, Default)]
pub struct Outcome {
    pub text: String,
    pub checks: Vec<AxiomResult>,
    pub data: BTreeMap<String, Value>,
    /// Overall verdict when it is not implied by the checks (e.g. a PBW deficit).
    pub verdict: Option<bool>,
}

impl Outcome {
    pub fn text(text: impl Into<String>) -> Self {
        Outcome { text: text.into(), ..Default::default() }
    }

    pub fn line(&mut self, line: impl AsRef<str>) {
        self.text.push_str(line.as_ref());
        self.text.push('\n');
    }

    pub fn report(&mut self, r: AxiomReport) {
        self.checks.extend(r.entries);
    }

    pub fn data(&mut self, key: &str, v: impl Serialize) -> anyhow::Result<()> {
        self.data.insert(key.to_string(), serde_json::to_value(v)?);
        Ok(())
    }

    pub fn passed(&self) -> bool {
        self.verdict.unwrap_or(true) && self.checks.iter().all(AxiomResult::passed)
    }
}

#[derive(Serialize)]
struct Results<'a> {
    passed: bool,
    checks: &'a [AxiomResult],
    data: &'a BTreeMap<String, Value>,
}

#[derive(Serialize)]
struct Timing {
    elapsed_ms: u128,
}

#[derive(Serialize)]
struct Document<'a> {
    command: &'a str,
    config: &'a BTreeMap<String, String>,
    results: Results<'a>,
    timing: Timing,
}

pub fn render_json(command: &str, config: &BTreeMap<String, String>, o: &Outcome, elapsed_ms: u128) -> anyhow::Result<String> {
    let doc = Document {
        command,
        config,
        results: Results { passed: o.passed(), checks: &o.checks, data: &o.data },
        timing: Timing { elapsed_ms },
    };
    Ok(serde_json::to_string_pretty(&doc)?)
}

pub fn render_human(o: &Outcome) -> String {
    let mut out = o.text.clone();
    if !o.checks.is_empty() {
        if !out.is_empty() && !out.ends_with("\n\n") {
            out.push('\n');
        }
        out.push_str(&AxiomReport { entries: o.checks.clone() }.to_string());
        let _ = writeln!(out, "verdict: {}", if o.passed() { "PASS" } else { "FAIL" });
    }
    out
}
