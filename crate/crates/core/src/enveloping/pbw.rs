use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use super::build::build_env_antialgebra;
use super::system::RewriteSystem;
use super::word::Word;
use crate::algebra::{quadratic::monomials, AlgebraSpec};
use crate::error::{Error, Result};
use crate::kernel::Weight;

/// Extra degrees completed beyond the degree of interest: resolving an overlap
/// of degree `d` can create rules that matter below `d`.
pub const COMPLETION_SLACK: u32 = 2;

/// Irreducible words of filtration degree exactly `n`, in increasing order.
pub fn irreducible_words(rs: &RewriteSystem, n: u32) -> Vec<Word> {
    let mut out = Vec::new();
    let mut stack: Vec<u16> = Vec::new();
    extend(rs, n, &mut stack, 0, &mut out);
    out.sort();
    out
}

fn extend(rs: &RewriteSystem, n: u32, stack: &mut Vec<u16>, deg: u32, out: &mut Vec<Word>) {
    if deg == n {
        out.push(rs.alphabet().word(stack.clone()));
        return;
    }
    for (id, l) in rs.alphabet().letters().iter().enumerate() {
        if deg + l.degree > n {
            continue;
        }
        stack.push(id as u16);
        // every prefix of an irreducible word is irreducible
        if !rs.has_reducible_suffix(stack) {
            extend(rs, n, stack, deg + l.degree, out);
        }
        stack.pop();
    }
}

/// Number of irreducible words of degree `n` (and weight `w` when given).
pub fn graded_dimension(rs: &RewriteSystem, n: u32, w: Option<Weight>) -> Result<usize> {
    if let Some(b) = rs.bound() {
        if n > b {
            return Err(Error::Bound { bound: b as usize, length: n as usize });
        }
    }
    Ok(irreducible_words(rs, n).iter().filter(|word| w.is_none_or(|w| rs.weight(word) == w)).count())
}

/// Dimension of the degree-`n` (weight-`w`) part of the quadratic model, whose
/// monomials carry at most one even factor and any number of odd ones.
pub fn g_model_dimension(spec: &AlgebraSpec, n: usize, w: Option<Weight>) -> usize {
    monomials(&spec.evens(), &spec.odds(), n).iter().filter(|m| w.is_none_or(|w| m.weight() == w)).count()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct DimensionRow {
    pub degree: u32,
    pub weight: Weight,
    pub gr: usize,
    pub g: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PbwReport {
    pub algebra: String,
    pub max_degree: u32,
    pub holds: bool,
    pub first_mismatch: Option<DimensionRow>,
    pub rows: Vec<DimensionRow>,
    pub added_rules: usize,
    pub dropped_relations: usize,
}

impl PbwReport {
    pub fn row(&self, degree: u32, weight: Weight) -> Option<&DimensionRow> {
        self.rows.iter().find(|r| r.degree == degree && r.weight == weight)
    }

    /// Totals per degree, `(Gr, G)`.
    pub fn totals(&self) -> BTreeMap<u32, (usize, usize)> {
        let mut out = BTreeMap::new();
        for r in &self.rows {
            let e = out.entry(r.degree).or_insert((0, 0));
            e.0 += r.gr;
            e.1 += r.g;
        }
        out
    }
}

impl fmt::Display for PbwReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.first_mismatch {
            None => writeln!(f, "PBW: HOLDS up to degree {}", self.max_degree)?,
            Some(r) => {
                writeln!(f, "PBW: FAILS at degree {}", r.degree)?;
                writeln!(f, "first mismatch: degree {}, weight {}: dim Gr = {}, dim G = {}", r.degree, r.weight, r.gr, r.g)?;
            }
        }
        for (n, (gr, g)) in self.totals() {
            writeln!(f, "degree {n}: dim Gr = {gr}, dim G = {g}")?;
        }
        if self.dropped_relations > 0 {
            writeln!(f, "relations dropped at the window edge: {}", self.dropped_relations)?;
        }
        write!(f, "rules added by completion: {}", self.added_rules)
    }
}

/// Completes the enveloping algebra of `spec` and compares the number of
/// irreducible words with the quadratic model degree by degree and weight by
/// weight. For windowed algebras only weights inside the window are compared.
pub fn pbw_check(spec: &AlgebraSpec, max_degree: u32) -> Result<PbwReport> {
    let mut rs = build_env_antialgebra(spec)?;
    rs.complete(max_degree + COMPLETION_SLACK)?;
    let mut rows = Vec::new();
    for n in 0..=max_degree {
        let mut dims: BTreeMap<Weight, (usize, usize)> = BTreeMap::new();
        for w in irreducible_words(&rs, n) {
            dims.entry(rs.weight(&w)).or_default().0 += 1;
        }
        for m in monomials(&spec.evens(), &spec.odds(), n as usize) {
            dims.entry(m.weight()).or_default().1 += 1;
        }
        for (weight, (gr, g)) in dims {
            if spec.window().is_none_or(|win| win.contains(weight)) {
                rows.push(DimensionRow { degree: n, weight, gr, g });
            }
        }
    }
    let first_mismatch = rows.iter().find(|r| r.gr != r.g).copied();
    Ok(PbwReport {
        algebra: spec.name().to_string(),
        max_degree,
        holds: first_mismatch.is_none(),
        first_mismatch,
        rows,
        added_rules: rs.log().len(),
        dropped_relations: rs.dropped(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{catalog, k3, WeightWindow};

    #[test]
    fn k3_dimensions() {
        let mut rs = build_env_antialgebra(&k3()).unwrap();
        rs.complete(6).unwrap();
        assert!(rs.log().is_empty());
        assert_eq!(graded_dimension(&rs, 0, None).unwrap(), 1);
        assert_eq!(graded_dimension(&rs, 2, None).unwrap(), 5);
        let words: Vec<String> = irreducible_words(&rs, 2).iter().map(|w| rs.alphabet().show_word(w)).collect();
        assert_eq!(words, ["E A", "E B", "A A", "A B", "B B"]);
        assert_eq!(g_model_dimension(&k3(), 2, None), 5);
        assert!(graded_dimension(&rs, 7, None).is_err());
    }

    #[test]
    fn k3_pbw_holds() {
        let r = pbw_check(&k3(), 8).unwrap();
        assert!(r.holds, "{r}");
        for (n, (gr, g)) in r.totals() {
            assert_eq!(gr, 2 * n as usize + 1);
            assert_eq!(g, gr);
        }
    }

    #[test]
    fn ak1_pbw_fails_at_degree_two() {
        let s = catalog("AK1", Some(WeightWindow::ints(-4, 4))).unwrap();
        let r = pbw_check(&s, 2).unwrap();
        assert!(!r.holds);
        assert_eq!(r.first_mismatch.unwrap().degree, 2);
        let row = r.row(2, Weight::ZERO).unwrap();
        assert!(row.gr < row.g, "{row:?}");
    }
}
