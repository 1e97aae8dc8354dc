pub mod adjoint;
pub mod algebra;
pub mod axioms;
pub mod enveloping;
pub mod error;
pub mod kernel;
pub mod representations;
mod text;

pub use algebra::{AlgebraSpec, WeightWindow};
pub use error::{Error, Result};
pub use kernel::{BasisVector, Element, LinComb, Parity, Scalar, Weight};
