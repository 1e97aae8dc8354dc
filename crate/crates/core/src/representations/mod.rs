//! Representations and modules of Lie antialgebras, their extension to the
//! adjoint superalgebra, the differential-operator model of `K3` and the density
//! modules of the conformal family.

mod density;
mod diffop;
mod extend;
mod irr;
mod operator;
mod rep;

pub use density::{density_adjoint_factor, density_antialgebra_check, density_rep, f_vector, phi_vector, DensityReport};
pub use diffop::{diffop_carrier, diffop_operators, diffop_rep, truncate, word_operator, DiffOperator, Monomial, OpTerm, SuperPolynomial};
pub use extend::{check_lie_representation, extend_representation, to_osp12, Extension};
pub use irr::{irr_consistency, IrrVerdict};
pub use operator::Operator;
pub use rep::{check_la_module, check_la_representation, load_representation, split_null_extension, v_ad, Representation};
