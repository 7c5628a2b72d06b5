//! The operators the reduction argument manipulates: shifts `τ_y`,
//! dilations `σ_b` and differences `Δ_y`, plus linear substitution in
//! general and exact/floating evaluation.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{One, Zero};

use super::monomial::MultiIndex;
use super::poly::{ExpPoly, Frequency, PolyPart};
use super::scalar::ExpScalar;
use crate::error::{Error, Result};
use crate::linalg::{GaussRational, RatMatrix, RatVector, Rational};

type RatPoly = BTreeMap<MultiIndex, Rational>;

fn binomial(n: u32, k: u32) -> Rational {
    Rational::from_integer(num_integer::binomial(BigInt::from(n), BigInt::from(k)))
}

fn falling(n: u32, k: u32) -> Rational {
    Rational::from_integer((n - k + 1..=n).fold(BigInt::one(), |acc, v| acc * BigInt::from(v)))
}

fn ratpoly_mul(a: &RatPoly, b: &RatPoly) -> RatPoly {
    let mut out = RatPoly::new();
    for (ma, ca) in a {
        for (mb, cb) in b {
            let e = out.entry(ma.add(mb)).or_insert_with(Rational::zero);
            *e += ca * cb;
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

impl ExpPoly {
    fn check_vector(&self, y: &RatVector) -> Result<()> {
        if y.len() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: y.len(),
            });
        }
        Ok(())
    }

    /// `τ_y f (x) = f(x + y)`: each `P(x)e^{⟨λ,x⟩}` becomes
    /// `e^{⟨λ,y⟩}·P(x+y)e^{⟨λ,x⟩}` with `P(x+y)` expanded binomially.
    pub fn translate(&self, y: &RatVector) -> Result<Self> {
        self.check_vector(y)?;
        let mut out = Self::zero(self.dim());
        for (lambda, poly) in self.components() {
            let w = lambda.pair(y.entries());
            for (alpha, c) in poly {
                let shifted = c.shift(&w);
                for beta in MultiIndex::below(alpha) {
                    let mut coef = Rational::one();
                    for ((&a, &b), yj) in alpha.exponents().iter().zip(beta.exponents()).zip(y.entries()) {
                        if a > b {
                            if yj.is_zero() {
                                coef = Rational::zero();
                                break;
                            }
                            coef *= binomial(a, b) * num_traits::pow(yj.clone(), (a - b) as usize);
                        }
                    }
                    if !coef.is_zero() {
                        out.add_term(lambda.clone(), beta, shifted.scale_rational(&coef));
                    }
                }
            }
        }
        Ok(out)
    }

    /// Substitution `z ↦ f(Lz)` for a `dim × k` rational matrix `L`; the
    /// result lives on `ℝ^k`. Frequencies map to `Lᵀλ`.
    pub fn compose_linear(&self, l: &RatMatrix) -> Result<Self> {
        if l.rows() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: l.rows(),
            });
        }
        let k = l.cols();
        // linear forms L_j(z) = Σ_k l[j][k] z_k and their powers, built lazily
        let forms: Vec<RatPoly> = (0..self.dim())
            .map(|j| {
                (0..k)
                    .filter(|&c| !l.get(j, c).is_zero())
                    .map(|c| (MultiIndex::unit(k, c), l.get(j, c).clone()))
                    .collect()
            })
            .collect();
        let mut powers: Vec<Vec<RatPoly>> = forms
            .iter()
            .map(|_| vec![std::iter::once((MultiIndex::zero(k), Rational::one())).collect()])
            .collect();
        let mut out = Self::zero(k);
        for (lambda, poly) in self.components() {
            let mu = Frequency(
                (0..k)
                    .map(|c| {
                        lambda
                            .components()
                            .iter()
                            .enumerate()
                            .fold(GaussRational::zero(), |acc, (j, lj)| &acc + &lj.scale(l.get(j, c)))
                    })
                    .collect(),
            );
            for (alpha, c) in poly {
                let mut prod: RatPoly = std::iter::once((MultiIndex::zero(k), Rational::one())).collect();
                for (j, &e) in alpha.exponents().iter().enumerate() {
                    while powers[j].len() <= e as usize {
                        let next = ratpoly_mul(powers[j].last().expect("seeded"), &forms[j]);
                        powers[j].push(next);
                    }
                    prod = ratpoly_mul(&prod, &powers[j][e as usize]);
                }
                for (m, r) in prod {
                    out.add_term(mu.clone(), m, c.scale_rational(&r));
                }
            }
        }
        Ok(out)
    }

    /// `σ_b f (x) = f(bx)` for a square `b`.
    pub fn dilate(&self, b: &RatMatrix) -> Result<Self> {
        if !b.is_square() || b.rows() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: b.rows(),
            });
        }
        self.compose_linear(b)
    }

    /// `Δ_y^order f`, with `Δ_y f = τ_y f − f`. Order 0 is the identity.
    pub fn difference(&self, y: &RatVector, order: u32) -> Result<Self> {
        self.check_vector(y)?;
        let mut f = self.clone();
        for _ in 0..order {
            if f.is_zero() {
                break;
            }
            f = &f.translate(y)? - &f;
        }
        Ok(f)
    }

    /// Floating-point value at `x`.
    pub fn evaluate(&self, x: &[f64]) -> Complex64 {
        assert_eq!(x.len(), self.dim(), "evaluation point dimension");
        let mut total = Complex64::zero();
        for (lambda, poly) in self.components() {
            let arg: Complex64 = lambda
                .components()
                .iter()
                .zip(x)
                .map(|(l, &xi)| l.to_complex() * xi)
                .sum();
            let mut p = Complex64::zero();
            for (alpha, c) in poly {
                let mono: f64 = alpha
                    .exponents()
                    .iter()
                    .zip(x)
                    .map(|(&e, &xi)| xi.powi(e as i32))
                    .product();
                p += c.evaluate() * mono;
            }
            total += p * arg.exp();
        }
        total
    }

    /// Exact value at a rational point, as a formal scalar.
    pub fn evaluate_exact(&self, x: &RatVector) -> Result<ExpScalar> {
        self.check_vector(x)?;
        let mut total = ExpScalar::zero();
        for (lambda, poly) in self.components() {
            let w = lambda.pair(x.entries());
            for (alpha, c) in poly {
                let mono = alpha
                    .exponents()
                    .iter()
                    .zip(x.entries())
                    .fold(Rational::one(), |acc, (&e, xi)| acc * num_traits::pow(xi.clone(), e as usize));
                total = &total + &c.shift(&w).scale_rational(&mono);
            }
        }
        Ok(total)
    }
}

/// Partial derivative `∂^α P` of a polynomial part.
pub fn poly_derivative(poly: &PolyPart, alpha: &MultiIndex) -> PolyPart {
    let mut out = PolyPart::new();
    for (beta, c) in poly {
        if !alpha.divides(beta) {
            continue;
        }
        let mut coef = Rational::one();
        let mut rest = Vec::with_capacity(beta.dim());
        for (&b, &a) in beta.exponents().iter().zip(alpha.exponents()) {
            coef *= falling(b, a);
            rest.push(b - a);
        }
        out.insert(MultiIndex::new(rest), c.scale_rational(&coef));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rat;

    fn x(d: usize, j: usize) -> ExpPoly {
        ExpPoly::var(d, j)
    }

    fn c(d: usize, n: i64) -> ExpPoly {
        ExpPoly::constant(d, ExpScalar::from_int(n))
    }

    #[test]
    fn translate_square() {
        let f = ExpPoly::monomial(&[2]);
        let expect = &(&f + &x(1, 0).scale_gauss(&GaussRational::from_int(2))) + &c(1, 1);
        assert_eq!(f.translate(&RatVector::from_ints(&[1])).unwrap(), expect);
    }

    #[test]
    fn translate_exponential_picks_up_scalar() {
        let e = ExpPoly::exp_linear(vec![GaussRational::one()]);
        let t = e.translate(&RatVector::from_ints(&[1])).unwrap();
        assert_eq!(t, e.scale(&ExpScalar::exp(GaussRational::one())));
    }

    #[test]
    fn translate_dimension_checked() {
        assert!(ExpPoly::one(2).translate(&RatVector::from_ints(&[1])).is_err());
    }

    #[test]
    fn dilate_examples() {
        let f = &ExpPoly::monomial(&[3, 1]) + &ExpPoly::exp_linear(vec![GaussRational::one(), GaussRational::i()]);
        assert_eq!(f.dilate(&RatMatrix::identity(2)).unwrap(), f);
        let g = x(1, 0).dilate(&RatMatrix::from_ints(&[&[2]])).unwrap();
        assert_eq!(g, x(1, 0).scale_gauss(&GaussRational::from_int(2)));
    }

    #[test]
    fn difference_examples() {
        let y1 = RatVector::from_ints(&[1]);
        assert_eq!(x(1, 0).difference(&y1, 1).unwrap(), c(1, 1));
        let sq = ExpPoly::monomial(&[2]);
        assert_eq!(sq.difference(&y1, 2).unwrap(), c(1, 2));
        let y = RatVector::new(vec![rat(-7, 3)]);
        assert!(sq.difference(&y, 3).unwrap().is_zero());
    }

    #[test]
    fn evaluate_examples() {
        assert_eq!(ExpPoly::zero(2).evaluate(&[0.3, 0.1]), Complex64::zero());
        assert_eq!(ExpPoly::monomial(&[2]).evaluate(&[3.0]), Complex64::new(9.0, 0.0));
    }

    #[test]
    fn compose_to_two_variables() {
        // x^2 at z1 + z2
        let l = RatMatrix::from_ints(&[&[1, 1]]);
        let f = ExpPoly::monomial(&[2]).compose_linear(&l).unwrap();
        let expect = &(&ExpPoly::monomial(&[2, 0]) + &ExpPoly::monomial(&[1, 1]).scale_gauss(&GaussRational::from_int(2)))
            + &ExpPoly::monomial(&[0, 2]);
        assert_eq!(f, expect);
    }

    #[test]
    fn derivative_of_polynomial_part() {
        let f = ExpPoly::monomial(&[3, 1]);
        let (_, p) = f.components().next().unwrap();
        let d = poly_derivative(p, &MultiIndex::new(vec![2, 0]));
        assert_eq!(d.get(&MultiIndex::new(vec![1, 1])), Some(&ExpScalar::from_int(6)));
    }
}
