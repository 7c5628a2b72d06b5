//! Exact arithmetic substrate: rationals, Gaussian rationals, rational
//! matrices and generic elimination over exact fields.

mod bareiss;
mod field;
mod gauss;
mod matrix;
mod rational;

pub use bareiss::mat_rank;
pub use field::{echelon, rank, solve_in_span, Echelon, Field};
pub use gauss::GaussRational;
pub use matrix::{mat_inverse, RatMatrix, RatVector};
pub use rational::{parse_rational, rat, Rational};
