//! Floating-point companion to the exact core: sampling, least-squares
//! fitting with known frequencies, and rank residuals of sampled kernels.

mod fit;
mod grid;
mod residual;

pub use fit::{fit, round_gauss, FitModel, FitResult, Unrounded};
pub use grid::{read_csv, tensor_grid, SampleGrid, DEFAULT_POINTS_PER_AXIS};
pub use residual::{default_points, equation_residual, equation_residual_exppoly, kernel_matrix, ResidualReport, DEFAULT_TOLERANCE};
