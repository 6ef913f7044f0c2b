//! Orientation λ, the two frame realizations, and the identity checks.

mod algebra;
mod checks;
mod orientation;

pub use algebra::{delta, levi_civita, EvenElement, FrameAlgebra, Realization};
pub use checks::{
    check_equation, check_equation_named, direction_pairs, flip_bivector_basis_check, flip_vector_basis_check,
    flip_vector_basis_check_with, flipped_bivector_triple, flipped_vector_triple, gill_variant_reduction,
    reciprocity_check, render_csv, render_jsonl, substitution_check, truth_table, CheckId, EquationCheck,
    LambdaMonomial, ProductRule, RANDOM_PAIRS,
};
pub use orientation::Orientation;
