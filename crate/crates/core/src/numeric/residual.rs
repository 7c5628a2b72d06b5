use nalgebra::DMatrix;
use num_complex::Complex64;

use super::grid::{tensor_grid, DEFAULT_POINTS_PER_AXIS};
use crate::equation::{EquationSpec, SolutionTuple};
use crate::error::{Error, Result};

pub const DEFAULT_TOLERANCE: f64 = 1e-8;

#[derive(Clone, Debug, PartialEq)]
pub struct ResidualReport {
    pub rank: usize,
    /// Descending.
    pub singular_values: Vec<f64>,
    /// `sqrt(Σ_{j>n} σ_j²)`, the Frobenius distance to the best rank-`n`
    /// approximation.
    pub residual: f64,
    pub max_abs: f64,
    pub mean_abs: f64,
    pub tolerance: f64,
    pub pass: bool,
}

/// Default sample points for one side of the kernel: a tensor grid over
/// `[−1, 1]^d` with 20 points per axis for `d ≤ 2`, and about 400 points in
/// higher dimensions.
pub fn default_points(d: usize) -> Vec<Vec<f64>> {
    let per_axis = if d <= 2 {
        DEFAULT_POINTS_PER_AXIS
    } else {
        ((400f64).powf(1.0 / d as f64).floor() as usize).max(2)
    };
    tensor_grid(d, per_axis, -1.0, 1.0)
}

fn apply(m: &[Vec<f64>], v: &[f64]) -> Vec<f64> {
    m.iter().map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum()).collect()
}

/// `F[p, q] = Σ_i f_i(b_i x_p + c_i y_q)`.
pub fn kernel_matrix<F: Fn(&[f64]) -> Complex64>(
    spec: &EquationSpec,
    fs: &[F],
    xs: &[Vec<f64>],
    ys: &[Vec<f64>],
) -> Result<DMatrix<Complex64>> {
    if fs.len() != spec.m() {
        return Err(Error::DimensionMismatch {
            expected: spec.m(),
            found: fs.len(),
        });
    }
    let d = spec.d();
    if let Some(p) = xs.iter().chain(ys).find(|p| p.len() != d) {
        return Err(Error::DimensionMismatch { expected: d, found: p.len() });
    }
    let mats: Vec<(Vec<Vec<f64>>, Vec<Vec<f64>>)> = spec
        .pairs()
        .iter()
        .map(|p| (p.b.to_f64_rows(), p.c.to_f64_rows()))
        .collect();
    let bx: Vec<Vec<Vec<f64>>> = mats.iter().map(|(b, _)| xs.iter().map(|x| apply(b, x)).collect()).collect();
    let cy: Vec<Vec<Vec<f64>>> = mats.iter().map(|(_, c)| ys.iter().map(|y| apply(c, y)).collect()).collect();
    let mut out = DMatrix::from_element(xs.len(), ys.len(), Complex64::new(0.0, 0.0));
    for (i, f) in fs.iter().enumerate() {
        for p in 0..xs.len() {
            for q in 0..ys.len() {
                let z: Vec<f64> = bx[i][p].iter().zip(&cy[i][q]).map(|(a, b)| a + b).collect();
                out[(p, q)] += f(&z);
            }
        }
    }
    if let Some(k) = out.iter().position(|v| !v.re.is_finite() || !v.im.is_finite()) {
        return Err(Error::NonFiniteValue(k));
    }
    Ok(out)
}

/// Distance of the sampled left side from the nearest kernel of rank `n`.
pub fn equation_residual<F: Fn(&[f64]) -> Complex64>(
    spec: &EquationSpec,
    fs: &[F],
    xs: &[Vec<f64>],
    ys: &[Vec<f64>],
    n: usize,
    tolerance: f64,
) -> Result<ResidualReport> {
    let k = kernel_matrix(spec, fs, xs, ys)?;
    let svd = k.clone().svd(true, true);
    let u = svd.u.as_ref().expect("requested U");
    let vt = svd.v_t.as_ref().expect("requested V^H");
    let mut order: Vec<usize> = (0..svd.singular_values.len()).collect();
    order.sort_by(|&a, &b| svd.singular_values[b].total_cmp(&svd.singular_values[a]));
    let singular_values: Vec<f64> = order.iter().map(|&j| svd.singular_values[j]).collect();
    let residual = singular_values.iter().skip(n).map(|s| s * s).sum::<f64>().sqrt();

    let mut approx = DMatrix::from_element(k.nrows(), k.ncols(), Complex64::new(0.0, 0.0));
    for &j in order.iter().take(n) {
        let s = Complex64::new(svd.singular_values[j], 0.0);
        approx += u.column(j) * vt.row(j) * s;
    }
    let diff = &k - &approx;
    let abs: Vec<f64> = diff.iter().map(|z| z.norm()).collect();
    let max_abs = abs.iter().cloned().fold(0.0, f64::max);
    let mean_abs = if abs.is_empty() { 0.0 } else { abs.iter().sum::<f64>() / abs.len() as f64 };
    Ok(ResidualReport {
        rank: n,
        singular_values,
        residual,
        max_abs,
        mean_abs,
        tolerance,
        pass: residual < tolerance,
    })
}

/// [`equation_residual`] for an exponential-polynomial solution on the
/// default grids.
pub fn equation_residual_exppoly(
    spec: &EquationSpec,
    sol: &SolutionTuple,
    n: usize,
    points: Option<&[Vec<f64>]>,
    tolerance: f64,
) -> Result<ResidualReport> {
    sol.check_against(spec)?;
    let owned;
    let pts = match points {
        Some(p) => p,
        None => {
            owned = default_points(spec.d());
            &owned
        }
    };
    let fs: Vec<_> = sol.f.iter().map(|f| move |x: &[f64]| f.evaluate(x)).collect();
    equation_residual(spec, &fs, pts, pts, n, tolerance)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exppoly::ExpPoly;
    use crate::linalg::{rat, RatMatrix};

    fn unit_spec() -> EquationSpec {
        EquationSpec::normalized(1, vec![RatMatrix::scalar(rat(1, 1))]).unwrap()
    }

    #[test]
    fn square_has_rank_three() {
        let sol = SolutionTuple::new(vec![ExpPoly::monomial(&[2])]);
        let r3 = equation_residual_exppoly(&unit_spec(), &sol, 3, None, DEFAULT_TOLERANCE).unwrap();
        assert!(r3.residual < 1e-10 && r3.pass);
        assert!(r3.max_abs < 1e-10);
        let r2 = equation_residual_exppoly(&unit_spec(), &sol, 2, None, DEFAULT_TOLERANCE).unwrap();
        assert!(r2.residual > 1e-3 && !r2.pass);
        assert!((r2.residual - r2.singular_values[2]).abs() < 1e-12);
    }

    #[test]
    fn zero_solution_has_zero_residual() {
        let sol = SolutionTuple::new(vec![ExpPoly::zero(1)]);
        for n in 0..3 {
            let r = equation_residual_exppoly(&unit_spec(), &sol, n, None, DEFAULT_TOLERANCE).unwrap();
            assert_eq!(r.residual, 0.0);
        }
    }

    #[test]
    fn callables_are_accepted() {
        let f = |x: &[f64]| Complex64::new(x[0].sin(), 0.0);
        let pts = tensor_grid(1, 15, -1.0, 1.0);
        // sin(x + y) = sin x cos y + cos x sin y
        let r = equation_residual(&unit_spec(), &[f], &pts, &pts, 2, DEFAULT_TOLERANCE).unwrap();
        assert!(r.pass);
        let r = equation_residual(&unit_spec(), &[f], &pts, &pts, 1, DEFAULT_TOLERANCE).unwrap();
        assert!(!r.pass);
    }
}
