//! Desk-scale additive symplectic codes: duals, seeded dual-containing
//! samplers, type statistics, coset-leader decoding and the union bound.

mod additive;
mod decode;
mod experiment;
mod linalg;
mod types;
mod vector;

pub use additive::{AdditiveCode, ENUMERATION_CAP};
pub use decode::{
    bhattacharyya_union_bound, exact_error_probability, monte_carlo_error_probability, word_index,
    word_letters, CosetTable, MonteCarloEstimate,
};
pub use experiment::{decode_trial, gv_trial, OracleRecord};
pub use types::{
    check_gv, type_class_size, type_of, type_stats, GvReport, GvViolation, TypeCounts, TypeStats,
};
pub use vector::{symplectic_form, SymplecticVector};
