use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::kernel::{BasisVector, Element};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    /// Every tuple left the window; nothing could be evaluated.
    Skipped,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skipped => "skipped",
        })
    }
}

/// A tuple on which an identity fails, with both evaluated sides.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Witness {
    pub tuple: Vec<String>,
    pub lhs: Element,
    pub rhs: Element,
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}): {} != {}", self.tuple.join(", "), self.lhs, self.rhs)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct AxiomResult {
    pub id: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    pub checked: usize,
    pub skipped: usize,
}

impl AxiomResult {
    pub fn passed(&self) -> bool {
        self.status != Status::Fail
    }

    /// A result for a single yes/no fact with an optional witness.
    pub fn single(id: &str, witness: Option<Witness>) -> Self {
        let status = if witness.is_some() { Status::Fail } else { Status::Pass };
        AxiomResult { id: id.to_string(), status, witness, checked: 1, skipped: 0 }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct AxiomReport {
    pub entries: Vec<AxiomResult>,
}

impl AxiomReport {
    pub fn passed(&self) -> bool {
        self.entries.iter().all(AxiomResult::passed)
    }

    pub fn get(&self, id: &str) -> Option<&AxiomResult> {
        self.entries.iter().find(|r| r.id == id)
    }

    pub fn failures(&self) -> impl Iterator<Item = &AxiomResult> + '_ {
        self.entries.iter().filter(|r| !r.passed())
    }

    pub fn push(&mut self, r: AxiomResult) {
        self.entries.push(r);
    }

    pub fn extend(&mut self, other: AxiomReport) {
        self.entries.extend(other.entries);
    }
}

impl fmt::Display for AxiomReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in &self.entries {
            write!(f, "{:<28} {:<7} checked {:>6}, skipped {:>6}", r.id, r.status, r.checked, r.skipped)?;
            if let Some(w) = &r.witness {
                write!(f, "  witness {w}")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// Evaluates `eval` on every tuple of the cartesian product of `domains`, in
/// lexicographic order. Tuples whose evaluation leaves the window are skipped; the
/// first tuple with unequal sides becomes the witness.
pub fn scan<F>(id: &str, domains: &[Vec<BasisVector>], mut eval: F) -> Result<AxiomResult>
where
    F: FnMut(&[BasisVector]) -> Result<(Element, Element)>,
{
    let mut out = AxiomResult { id: id.to_string(), status: Status::Pass, witness: None, checked: 0, skipped: 0 };
    if domains.iter().any(Vec::is_empty) {
        return Ok(out);
    }
    let mut idx = vec![0usize; domains.len()];
    let mut tuple: Vec<BasisVector> = domains.iter().map(|d| d[0].clone()).collect();
    loop {
        match eval(&tuple) {
            Ok((lhs, rhs)) => {
                out.checked += 1;
                if lhs != rhs && out.witness.is_none() {
                    out.status = Status::Fail;
                    out.witness = Some(Witness { tuple: tuple.iter().map(|g| g.to_string()).collect(), lhs, rhs });
                }
            }
            Err(Error::Window(_)) => out.skipped += 1,
            Err(e) => return Err(e),
        }
        // advance the odometer, last position fastest
        let mut k = domains.len();
        loop {
            if k == 0 {
                if out.checked == 0 && out.skipped > 0 {
                    out.status = Status::Skipped;
                }
                return Ok(out);
            }
            k -= 1;
            idx[k] += 1;
            if idx[k] < domains[k].len() {
                tuple[k] = domains[k][idx[k]].clone();
                break;
            }
            idx[k] = 0;
            tuple[k] = domains[k][0].clone();
        }
    }
}
