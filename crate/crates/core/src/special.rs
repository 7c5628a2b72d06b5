//! Checkers for classical special cases: Fréchet, Kakutani–Nagumo, Wilson,
//! Skitovich–Darmois and Ghurye–Olkin.

use std::f64::consts::TAU;

use num_complex::Complex64;

use crate::equation::{CoefficientPair, EquationSpec, SolutionTuple};
use crate::error::{Error, Result};
use crate::exppoly::{ExpPoly, ExpScalar};
use crate::linalg::{rat, RatMatrix, RatVector, Rational};
use crate::separation::{bivariate_expand, Atom, BivariatePoly};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FrechetVerdict {
    pub pass: bool,
    /// `Δ_y^m f = 0` at every supplied `y`.
    pub differences_vanish: bool,
    /// `f` is a polynomial of degree below `m`.
    pub degree_below_order: bool,
    /// First nonzero `Δ_y^m f`, with its `y`.
    pub residual: Option<(RatVector, ExpPoly)>,
}

/// `Δ_y^m f = 0`, checked at the trial shifts and symbolically through the
/// degree of `f`.
pub fn frechet_check(f: &ExpPoly, order: u32, trials: &[RatVector]) -> Result<FrechetVerdict> {
    let mut residual = None;
    for y in trials {
        let r = f.difference(y, order)?;
        if !r.is_zero() {
            residual = Some((y.clone(), r));
            break;
        }
    }
    let degree_below_order = f.is_polynomial() && f.total_degree().is_none_or(|k| k < order);
    let differences_vanish = residual.is_none();
    Ok(FrechetVerdict {
        pass: differences_vanish && degree_below_order,
        differences_vanish,
        degree_below_order,
        residual,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum KnMode {
    /// Rational rotations (`N ∈ {2, 4}`), symbolic and exact.
    Exact,
    /// Double-precision rotations with tolerance `1e-9`.
    Float,
}

#[derive(Clone, Debug, PartialEq)]
pub struct KnVerdict {
    pub mode: KnMode,
    pub pass: bool,
    /// Symbolic residual as a function of `(z, h) ∈ ℝ^4` (exact mode only).
    pub symbolic_residual: Option<ExpPoly>,
    /// Exact residual at each sample (exact mode only).
    pub exact_residuals: Vec<ExpScalar>,
    /// `|residual|` at each sample.
    pub residuals: Vec<f64>,
    pub max_residual: f64,
}

pub const KN_TOLERANCE: f64 = 1e-9;

fn rotation_power(n: u32, k: u32) -> Option<RatMatrix> {
    let quarter = RatMatrix::from_ints(&[&[0, -1], &[1, 0]]);
    let steps = match n {
        4 => k % 4,
        2 => (2 * k) % 4,
        _ => return None,
    };
    let mut m = RatMatrix::identity(2);
    for _ in 0..steps {
        m = m.mul(&quarter).expect("2x2");
    }
    Some(m)
}

/// Mean-value residual `(1/N) Σ_k f(z + w^k h) − f(z)` with `w = e^{2πi/N}`
/// acting on `ℝ² ≅ ℂ`.
pub fn kakutani_nagumo_check(f: &ExpPoly, n: u32, samples: &[(RatVector, RatVector)]) -> Result<KnVerdict> {
    if f.dim() != 2 {
        return Err(Error::DimensionMismatch { expected: 2, found: f.dim() });
    }
    if n < 2 {
        return Err(Error::InvalidInput("root of unity order must be at least 2".into()));
    }
    for (z, h) in samples {
        for v in [z, h] {
            if v.len() != 2 {
                return Err(Error::DimensionMismatch { expected: 2, found: v.len() });
            }
        }
    }
    if rotation_power(n, 0).is_some() {
        let id = RatMatrix::identity(2);
        let mut mean = ExpPoly::zero(4);
        for k in 0..n {
            let l = id.hstack(&rotation_power(n, k).expect("rational rotation"))?;
            mean = &mean + &f.compose_linear(&l)?;
        }
        let mean = mean.scale(&ExpScalar::from_rational(rat(1, n as i64)));
        let residual = mean.try_sub(&f.embed(4, 0))?;
        let exact = samples
            .iter()
            .map(|(z, h)| residual.evaluate_exact(&z.concat(h)))
            .collect::<Result<Vec<_>>>()?;
        let residuals: Vec<f64> = exact.iter().map(|s| s.evaluate().norm()).collect();
        return Ok(KnVerdict {
            mode: KnMode::Exact,
            pass: residual.is_zero(),
            max_residual: residuals.iter().cloned().fold(0.0, f64::max),
            symbolic_residual: Some(residual),
            exact_residuals: exact,
            residuals,
        });
    }
    let mut residuals = Vec::with_capacity(samples.len());
    for (z, h) in samples {
        let z = z.to_f64();
        let h = h.to_f64();
        let mut sum = Complex64::new(0.0, 0.0);
        for k in 0..n {
            let (s, c) = (TAU * k as f64 / n as f64).sin_cos();
            let p = [z[0] + c * h[0] - s * h[1], z[1] + s * h[0] + c * h[1]];
            sum += f.evaluate(&p);
        }
        residuals.push((sum / n as f64 - f.evaluate(&z)).norm());
    }
    let max_residual = residuals.iter().cloned().fold(0.0, f64::max);
    Ok(KnVerdict {
        mode: KnMode::Float,
        pass: max_residual < KN_TOLERANCE,
        symbolic_residual: None,
        exact_residuals: Vec::new(),
        residuals,
        max_residual,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WilsonVerdict {
    pub pass: bool,
    /// Pure-`x` part (including the constant term).
    pub f: Option<ExpPoly>,
    /// Pure-`y` part.
    pub g: Option<ExpPoly>,
    /// First mixed atom with nonzero coefficient.
    pub mixed: Option<(Atom, Atom, ExpScalar)>,
    /// Degree bound (number of summands).
    pub bound: usize,
    /// Per summand: a polynomial of degree at most `bound`.
    pub within_bound: Vec<bool>,
}

/// `Σ f_i(α_i x + β_i y) = f(x) + g(y)` on the line.
pub fn wilson_check(alphas: &[Rational], betas: &[Rational], fs: &[ExpPoly]) -> Result<WilsonVerdict> {
    if alphas.len() != betas.len() || alphas.len() != fs.len() {
        return Err(Error::InvalidInput("alphas, betas and f_i must have equal length".into()));
    }
    let pairs = alphas
        .iter()
        .zip(betas)
        .map(|(a, b)| CoefficientPair {
            b: RatMatrix::scalar(a.clone()),
            c: RatMatrix::scalar(b.clone()),
        })
        .collect();
    let spec = EquationSpec::new(1, pairs)?;
    let lhs = bivariate_expand(&spec, &SolutionTuple::new(fs.to_vec()))?;

    let bound = fs.len();
    let within_bound = fs
        .iter()
        .map(|f| f.is_polynomial() && f.total_degree().is_none_or(|k| k as usize <= bound))
        .collect();
    let mut f = ExpPoly::zero(1);
    let mut g = ExpPoly::zero(1);
    for (xa, ya, c) in lhs.atoms() {
        if ya.is_constant() {
            f.add_term(xa.frequency, xa.monomial, c.clone());
        } else if xa.is_constant() {
            g.add_term(ya.frequency, ya.monomial, c.clone());
        } else {
            return Ok(WilsonVerdict {
                pass: false,
                f: None,
                g: None,
                mixed: Some((xa, ya, c.clone())),
                bound,
                within_bound,
            });
        }
    }
    Ok(WilsonVerdict {
        pass: true,
        f: Some(f),
        g: Some(g),
        mixed: None,
        bound,
        within_bound,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SkitovichVerdict {
    pub pass: bool,
    /// Left side minus right side.
    pub difference: BivariatePoly,
}

/// `Σ f_i(b_i x + c_i y) = Σ f_i(b_i x) + Σ f_i(c_i y)`.
pub fn skitovich_check(spec: &EquationSpec, sol: &SolutionTuple) -> Result<SkitovichVerdict> {
    let lhs = bivariate_expand(spec, sol)?;
    let d = spec.d();
    let mut rhs = BivariatePoly::zero(d);
    for (p, f) in spec.pairs().iter().zip(&sol.f) {
        rhs = rhs.try_add(&BivariatePoly::from_x(&f.dilate(&p.b)?))?;
        rhs = rhs.try_add(&BivariatePoly::from_y(&f.dilate(&p.c)?))?;
    }
    let difference = lhs.try_sub(&rhs)?;
    Ok(SkitovichVerdict {
        pass: difference.is_zero(),
        difference,
    })
}

/// `Σ f_i(x + c_i y) = A(x, y) + B(y, x)` with `A` polynomial of degree at
/// most `r` in `x` and `B` polynomial of degree at most `s` in `y`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GhuryeOlkinSpec {
    pub d: usize,
    pub cs: Vec<RatMatrix>,
    pub r: u32,
    pub s: u32,
}

impl GhuryeOlkinSpec {
    pub fn m(&self) -> usize {
        self.cs.len()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GhuryeOlkinVerdict {
    pub pass: bool,
    pub a: Option<BivariatePoly>,
    pub b: Option<BivariatePoly>,
    /// First atom fitting neither side.
    pub offending: Option<(Atom, Atom)>,
    /// Per summand: `f_i` is an ordinary polynomial.
    pub polynomial: Vec<bool>,
}

impl GhuryeOlkinVerdict {
    pub fn all_polynomial(&self) -> bool {
        self.polynomial.iter().all(|&p| p)
    }
}

/// Splits the left side atom by atom; atoms admissible for both sides go
/// to `A`.
pub fn ghurye_olkin_check(spec: &GhuryeOlkinSpec, sol: &SolutionTuple) -> Result<GhuryeOlkinVerdict> {
    let eq = EquationSpec::normalized(spec.d, spec.cs.clone())?;
    let lhs = bivariate_expand(&eq, sol)?;
    let d = spec.d;
    let polynomial = sol.f.iter().map(ExpPoly::is_polynomial).collect();
    let mut a = ExpPoly::zero(2 * d);
    let mut b = ExpPoly::zero(2 * d);
    for (xa, ya, c) in lhs.atoms() {
        let lambda = xa.frequency.concat(&ya.frequency);
        let alpha = xa.monomial.concat(&ya.monomial);
        if xa.frequency.is_zero() && xa.monomial.degree() <= spec.r {
            a.add_term(lambda, alpha, c.clone());
        } else if ya.frequency.is_zero() && ya.monomial.degree() <= spec.s {
            b.add_term(lambda, alpha, c.clone());
        } else {
            return Ok(GhuryeOlkinVerdict {
                pass: false,
                a: None,
                b: None,
                offending: Some((xa, ya)),
                polynomial,
            });
        }
    }
    Ok(GhuryeOlkinVerdict {
        pass: true,
        a: Some(BivariatePoly::new(d, a)?),
        b: Some(BivariatePoly::new(d, b)?),
        offending: None,
        polynomial,
    })
}
