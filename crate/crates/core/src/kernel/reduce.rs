use std::collections::BTreeMap;
use std::fmt;

use super::{LinComb, Scalar};
use crate::error::DomainError;

type SparseRow = BTreeMap<usize, Scalar>;

/// The row space of a set of vectors over a fixed, ordered, finite ambient basis,
/// kept in reduced row echelon form. Pivots are the first nonzero coordinate of
/// each row in ambient order.
#[derive(Clone)]
pub struct Span<T: Ord + Clone> {
    ambient: Vec<T>,
    position: BTreeMap<T, usize>,
    rows: BTreeMap<usize, SparseRow>,
}

impl<T: Ord + Clone + fmt::Display> Span<T> {
    pub fn new(ambient: Vec<T>) -> Self {
        let position = ambient.iter().cloned().enumerate().map(|(i, t)| (t, i)).collect();
        Span { ambient, position, rows: BTreeMap::new() }
    }

    pub fn ambient(&self) -> &[T] {
        &self.ambient
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    fn to_sparse(&self, v: &LinComb<T>) -> Result<SparseRow, DomainError> {
        v.iter()
            .map(|(t, c)| {
                self.position
                    .get(t)
                    .map(|&i| (i, *c))
                    .ok_or_else(|| DomainError::OutsideAmbient(t.to_string()))
            })
            .collect()
    }

    fn decode(&self, row: &SparseRow) -> LinComb<T> {
        row.iter().map(|(&i, &c)| (c, self.ambient[i].clone())).collect()
    }

    fn reduce_sparse(&self, mut row: SparseRow) -> SparseRow {
        for (&pivot, prow) in &self.rows {
            let c = match row.get(&pivot) {
                Some(c) => *c,
                None => continue,
            };
            for (&j, &v) in prow {
                let e = row.entry(j).or_insert(Scalar::ZERO);
                *e -= c * v;
                if e.is_zero() {
                    row.remove(&j);
                }
            }
        }
        row
    }

    /// Adds a vector to the span. Returns whether the rank grew.
    pub fn insert(&mut self, v: &LinComb<T>) -> Result<bool, DomainError> {
        let row = self.reduce_sparse(self.to_sparse(v)?);
        let Some((&pivot, &lead)) = row.iter().next() else {
            return Ok(false);
        };
        let inv = lead.recip();
        let row: SparseRow = row.into_iter().map(|(j, c)| (j, c * inv)).collect();
        for other in self.rows.values_mut() {
            if let Some(c) = other.get(&pivot).copied() {
                for (&j, &v) in &row {
                    let e = other.entry(j).or_insert(Scalar::ZERO);
                    *e -= c * v;
                    if e.is_zero() {
                        other.remove(&j);
                    }
                }
            }
        }
        self.rows.insert(pivot, row);
        Ok(true)
    }

    /// Remainder of `v` after eliminating every pivot coordinate.
    pub fn reduce(&self, v: &LinComb<T>) -> Result<LinComb<T>, DomainError> {
        Ok(self.decode(&self.reduce_sparse(self.to_sparse(v)?)))
    }

    pub fn contains(&self, v: &LinComb<T>) -> Result<bool, DomainError> {
        Ok(self.reduce(v)?.is_zero())
    }

    /// The reduced basis, in pivot order.
    pub fn basis(&self) -> Vec<LinComb<T>> {
        self.rows.values().map(|r| self.decode(r)).collect()
    }

    pub fn is_pivot(&self, t: &T) -> bool {
        self.position.get(t).is_some_and(|i| self.rows.contains_key(i))
    }

    /// Ambient elements that are not pivots; their classes form a basis of the quotient.
    pub fn free(&self) -> Vec<T> {
        self.ambient
            .iter()
            .enumerate()
            .filter(|(i, _)| !self.rows.contains_key(i))
            .map(|(_, t)| t.clone())
            .collect()
    }
}

/// Row-reduces `rows` over `ambient`, returning the reduced echelon basis of their
/// span and its rank.
pub fn row_reduce<T: Ord + Clone + fmt::Display>(
    rows: &[LinComb<T>],
    ambient: &[T],
) -> Result<(Vec<LinComb<T>>, usize), DomainError> {
    let mut span = Span::new(ambient.to_vec());
    for r in rows {
        span.insert(r)?;
    }
    let basis = span.basis();
    let rank = basis.len();
    Ok((basis, rank))
}
