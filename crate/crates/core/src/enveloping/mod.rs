//! Enveloping algebras as noncommutative rewriting systems.

mod bg;
mod build;
mod pbw;
mod quotient;
mod system;
mod word;

pub use bg::{bg_check, cubic_images, CubicImage};
pub use build::{build_env_antialgebra, build_env_superalgebra};
pub use pbw::{g_model_dimension, graded_dimension, irreducible_words, pbw_check, DimensionRow, PbwReport, COMPLETION_SLACK};
pub use quotient::{
    as_element, casimir, check_substitution, ghost_casimir, indexed_letter, jordan_superproduct, k1_quotient, k1_quotient_images,
    pi_generator, pi_images, pi_images_via, pi_map, substitute, twisted_adjoint, word_parity, LetterImages,
};
pub use system::{BracketConvention, CompletionStep, RewriteSystem};
pub use word::{free_product, letter_name, Alphabet, Letter, Word, WordElement};
