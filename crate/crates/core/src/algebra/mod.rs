//! Superalgebra specifications: finite tables, windowed infinite families, the
//! quadratic model, and the built-in catalog.

mod catalog;
mod parse;
pub mod quadratic;
mod spec;
mod unit;
mod window;

pub use catalog::{catalog, gk3, k3, osp12, CATALOG, GK3_DEGREE_CAP};
pub use parse::{load_spec, to_document};
pub use quadratic::GMonomial;
pub use spec::{AlgebraSpec, Family, Style};
pub use unit::{adjoin_unit, half_unit_defect};
pub use window::WeightWindow;
