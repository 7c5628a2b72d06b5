use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;

use super::SampleGrid;
use crate::error::{Error, Result};
use crate::exppoly::{ExpPoly, ExpScalar, Frequency, MultiIndex};
use crate::linalg::{rat, GaussRational};

/// Ansatz `Σ_s P_s(x) e^{⟨λ_s, x⟩}` with `deg P_s ≤ max_degree[s]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FitModel {
    pub frequencies: Vec<Frequency>,
    pub max_degree: Vec<u32>,
}

/// A fitted coefficient that is not close to a low-denominator rational.
#[derive(Clone, Debug, PartialEq)]
pub struct Unrounded {
    pub frequency: Frequency,
    pub monomial: MultiIndex,
    pub value: Complex64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct FitResult {
    /// Coefficients that rounded to Gaussian rationals.
    pub poly: ExpPoly,
    /// The rest, as floats.
    pub unrounded: Vec<Unrounded>,
    /// Raw least-squares coefficients in basis order.
    pub coefficients: Vec<(Frequency, MultiIndex, Complex64)>,
    /// Root-mean-square residual of the raw fit.
    pub residual: f64,
    pub condition: f64,
}

const CONDITION_LIMIT: f64 = 1e12;
const ROUND_TOLERANCE: f64 = 1e-9;
const MAX_DENOMINATOR: i64 = 100;

impl FitModel {
    pub fn new(frequencies: Vec<Frequency>, max_degree: Vec<u32>) -> Result<Self> {
        if frequencies.len() != max_degree.len() {
            return Err(Error::InvalidInput("one degree bound per frequency".into()));
        }
        for (k, l) in frequencies.iter().enumerate() {
            if frequencies[..k].contains(l) {
                return Err(Error::InvalidInput("model frequencies must be distinct".into()));
            }
        }
        if let Some(w) = frequencies.windows(2).find(|w| w[0].dim() != w[1].dim()) {
            return Err(Error::DimensionMismatch {
                expected: w[0].dim(),
                found: w[1].dim(),
            });
        }
        Ok(Self { frequencies, max_degree })
    }

    pub fn basis(&self) -> Vec<(Frequency, MultiIndex)> {
        let mut out = Vec::new();
        for (l, &deg) in self.frequencies.iter().zip(&self.max_degree) {
            let d = l.dim();
            let bound = MultiIndex::new(vec![deg; d]);
            for a in MultiIndex::below(&bound) {
                if a.degree() <= deg {
                    out.push((l.clone(), a));
                }
            }
        }
        out
    }
}

fn round_real(x: f64) -> Option<crate::linalg::Rational> {
    if !x.is_finite() {
        return None;
    }
    (1..=MAX_DENOMINATOR).find_map(|q| {
        let p = (x * q as f64).round();
        if (p / q as f64 - x).abs() <= ROUND_TOLERANCE && p.abs() < 1e15 {
            Some(rat(p as i64, q))
        } else {
            None
        }
    })
}

/// Nearest Gaussian rational with denominators at most 100, if within `1e-9`
/// in each part.
pub fn round_gauss(z: Complex64) -> Option<GaussRational> {
    Some(GaussRational::new(round_real(z.re)?, round_real(z.im)?))
}

/// Least squares over the model basis via SVD.
pub fn fit(grid: &SampleGrid, model: &FitModel) -> Result<FitResult> {
    if let Some(l) = model.frequencies.iter().find(|l| l.dim() != grid.d()) {
        return Err(Error::DimensionMismatch {
            expected: grid.d(),
            found: l.dim(),
        });
    }
    let basis = model.basis();
    if grid.len() < basis.len() || basis.is_empty() {
        return Err(Error::Underdetermined {
            points: grid.len(),
            coefficients: basis.len(),
        });
    }
    let columns: Vec<ExpPoly> = basis
        .iter()
        .map(|(l, a)| ExpPoly::term(grid.d(), ExpScalar::one(), a.clone(), l.clone()))
        .collect();
    let a = DMatrix::from_fn(grid.len(), basis.len(), |r, c| columns[c].evaluate(&grid.points()[r]));
    let b = DVector::from_column_slice(grid.values());

    let svd = a.clone().svd(true, true);
    let smax = svd.singular_values.max();
    let smin = svd.singular_values.min();
    let condition = if smin > 0.0 { smax / smin } else { f64::INFINITY };
    if condition * condition > CONDITION_LIMIT {
        return Err(Error::IllConditioned(condition * condition));
    }
    let x = svd
        .solve(&b, 0.0)
        .map_err(|e| Error::InvalidInput(format!("least squares: {e}")))?;
    let r = &a * &x - &b;
    let residual = (r.norm_squared() / grid.len() as f64).sqrt();

    let mut poly = ExpPoly::zero(grid.d());
    let mut unrounded = Vec::new();
    let mut coefficients = Vec::with_capacity(basis.len());
    for ((l, alpha), &c) in basis.into_iter().zip(x.iter()) {
        match round_gauss(c) {
            Some(g) => poly.add_term(l.clone(), alpha.clone(), ExpScalar::from_gauss(g)),
            None => unrounded.push(Unrounded {
                frequency: l.clone(),
                monomial: alpha.clone(),
                value: c,
            }),
        }
        coefficients.push((l, alpha, c));
    }
    Ok(FitResult {
        poly,
        unrounded,
        coefficients,
        residual,
        condition,
    })
}
