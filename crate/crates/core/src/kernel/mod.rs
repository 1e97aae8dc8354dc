//! Exact scalars, graded generators, sparse combinations and row reduction.

mod basis;
mod linear;
mod reduce;
mod scalar;

pub use basis::{split_token, BasisVector, Parity, Weight};
pub use linear::{format_terms, Element, LinComb};
pub use reduce::{row_reduce, Span};
pub use scalar::Scalar;

/// Shorthand for [`LinComb::combine`].
pub fn linear_combine<T: Ord + Clone, I: IntoIterator<Item = (Scalar, T)>>(pairs: I) -> LinComb<T> {
    LinComb::combine(pairs)
}
