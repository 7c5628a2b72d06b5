//! Exact exponential polynomials on `ℝ^d` and the shift, dilation and
//! difference operators acting on them.

mod closure;
mod display;
mod monomial;
mod ops;
mod poly;
mod scalar;
mod span;

pub use closure::translates_closure;
pub use monomial::MultiIndex;
pub use ops::poly_derivative;
pub use poly::{ExpPoly, Frequency, PolyPart};
pub use scalar::ExpScalar;
pub use span::{common_denominator, independent_subset, membership, memberships, span_rank, Membership};
