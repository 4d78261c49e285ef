//! Brute-force ground truth: finite field tables and conjugacy class
//! counts of `GL_N(F_q)` and `SL_N(F_q)` by explicit enumeration.

mod classes;
mod field;

pub use classes::{
    budget_from_env, conj_class_count, ClassCount, GroupKind, MatrixGroupSpec, DEFAULT_BUDGET,
};
pub use field::FiniteField;
