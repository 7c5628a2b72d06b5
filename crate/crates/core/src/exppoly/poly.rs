use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use super::monomial::MultiIndex;
use super::scalar::ExpScalar;
use crate::error::{Error, Result};
use crate::linalg::{GaussRational, Rational};

/// Frequency vector `λ` of an exponential factor `e^{⟨λ,x⟩}`.
///
/// Ordered lexicographically over components, each compared by `(re, im)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Frequency(pub Vec<GaussRational>);

impl Frequency {
    pub fn zero(d: usize) -> Self {
        Self(vec![GaussRational::zero(); d])
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(GaussRational::is_zero)
    }

    pub fn components(&self) -> &[GaussRational] {
        &self.0
    }

    /// `⟨λ, y⟩` for a rational `y` (bilinear, no conjugation).
    pub fn pair(&self, y: &[Rational]) -> GaussRational {
        self.0
            .iter()
            .zip(y)
            .fold(GaussRational::zero(), |acc, (l, v)| &acc + &l.scale(v))
    }

    pub fn add(&self, other: &Self) -> Self {
        Self(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn concat(&self, other: &Self) -> Self {
        Self(self.0.iter().chain(&other.0).cloned().collect())
    }

    pub fn split_at(&self, k: usize) -> (Self, Self) {
        (Self(self.0[..k].to_vec()), Self(self.0[k..].to_vec()))
    }
}

/// Polynomial part: monomial → scalar coefficient, no zero coefficients.
pub type PolyPart = BTreeMap<MultiIndex, ExpScalar>;

/// Exponential polynomial `Σ_s P_s(x) e^{⟨λ_s, x⟩}` on `ℝ^d`, in canonical
/// form: no zero coefficients, no empty polynomial parts, frequencies and
/// monomials kept in their canonical orders. Structural equality is
/// semantic equality.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct ExpPoly {
    dim: usize,
    terms: BTreeMap<Frequency, PolyPart>,
}

impl ExpPoly {
    pub fn zero(dim: usize) -> Self {
        Self {
            dim,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(dim: usize, c: ExpScalar) -> Self {
        Self::term(dim, c, MultiIndex::zero(dim), Frequency::zero(dim))
    }

    pub fn one(dim: usize) -> Self {
        Self::constant(dim, ExpScalar::one())
    }

    /// `x_{j+1}` (0-based index).
    pub fn var(dim: usize, j: usize) -> Self {
        Self::term(dim, ExpScalar::one(), MultiIndex::unit(dim, j), Frequency::zero(dim))
    }

    pub fn monomial(exponents: &[u32]) -> Self {
        let d = exponents.len();
        Self::term(d, ExpScalar::one(), MultiIndex::new(exponents.to_vec()), Frequency::zero(d))
    }

    /// `e^{⟨λ,x⟩}`.
    pub fn exp_linear(lambda: Vec<GaussRational>) -> Self {
        let d = lambda.len();
        Self::term(d, ExpScalar::one(), MultiIndex::zero(d), Frequency(lambda))
    }

    pub fn term(dim: usize, c: ExpScalar, alpha: MultiIndex, lambda: Frequency) -> Self {
        assert_eq!(alpha.dim(), dim, "monomial dimension");
        assert_eq!(lambda.dim(), dim, "frequency dimension");
        let mut f = Self::zero(dim);
        f.add_term(lambda, alpha, c);
        f
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Frequencies with their polynomial parts, in canonical order.
    pub fn components(&self) -> impl Iterator<Item = (&Frequency, &PolyPart)> {
        self.terms.iter()
    }

    /// Every `(λ, α, c)` atom.
    pub fn atoms(&self) -> impl Iterator<Item = (&Frequency, &MultiIndex, &ExpScalar)> {
        self.terms
            .iter()
            .flat_map(|(l, p)| p.iter().map(move |(a, c)| (l, a, c)))
    }

    pub fn num_atoms(&self) -> usize {
        self.terms.values().map(BTreeMap::len).sum()
    }

    pub fn coefficient(&self, lambda: &Frequency, alpha: &MultiIndex) -> ExpScalar {
        self.terms
            .get(lambda)
            .and_then(|p| p.get(alpha))
            .cloned()
            .unwrap_or_default()
    }

    /// Adds `c·x^α e^{⟨λ,x⟩}` in place, keeping the form canonical.
    pub fn add_term(&mut self, lambda: Frequency, alpha: MultiIndex, c: ExpScalar) {
        if c.is_zero() {
            return;
        }
        let poly = self.terms.entry(lambda.clone()).or_default();
        match poly.entry(alpha) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                let s = o.get() + &c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
        if poly.is_empty() {
            self.terms.remove(&lambda);
        }
    }

    fn check_dim(&self, other: &Self) -> Result<()> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: other.dim,
            });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_dim(other)?;
        let mut out = self.clone();
        for (l, a, c) in other.atoms() {
            out.add_term(l.clone(), a.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.try_add(&-other)
    }

    pub fn scale(&self, c: &ExpScalar) -> Self {
        let mut out = Self::zero(self.dim);
        if c.is_zero() {
            return out;
        }
        for (l, a, s) in self.atoms() {
            out.add_term(l.clone(), a.clone(), s * c);
        }
        out
    }

    pub fn scale_gauss(&self, c: &GaussRational) -> Self {
        let mut out = Self::zero(self.dim);
        if c.is_zero() {
            return out;
        }
        for (l, a, s) in self.atoms() {
            out.add_term(l.clone(), a.clone(), s.scale(c));
        }
        out
    }

    /// Product; frequencies add (`e^λ·e^μ = e^{λ+μ}`).
    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_dim(other)?;
        let mut out = Self::zero(self.dim);
        for (l1, a1, c1) in self.atoms() {
            for (l2, a2, c2) in other.atoms() {
                out.add_term(l1.add(l2), a1.add(a2), c1 * c2);
            }
        }
        Ok(out)
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::one(self.dim), |acc, _| &acc * self)
    }

    /// True iff the only frequency is 0 and no coefficient carries an
    /// exponential factor.
    pub fn is_polynomial(&self) -> bool {
        self.terms
            .iter()
            .all(|(l, p)| l.is_zero() && p.values().all(ExpScalar::is_plain))
    }

    /// Largest total degree of any monomial, `None` for the zero function.
    pub fn total_degree(&self) -> Option<u32> {
        self.atoms().map(|(_, a, _)| a.degree()).max()
    }

    /// Whether every coefficient is a plain Gaussian rational.
    pub fn has_plain_coefficients(&self) -> bool {
        self.atoms().all(|(_, _, c)| c.is_plain())
    }

    /// Re-embeds into dimension `new_dim ≥ dim`, padding with zero exponents.
    pub fn embed(&self, new_dim: usize, offset: usize) -> Self {
        assert!(offset + self.dim <= new_dim, "embedding out of range");
        let mut out = Self::zero(new_dim);
        for (l, a, c) in self.atoms() {
            let mut lv = vec![GaussRational::zero(); new_dim];
            let mut av = vec![0; new_dim];
            lv[offset..offset + self.dim].clone_from_slice(l.components());
            av[offset..offset + self.dim].copy_from_slice(a.exponents());
            out.add_term(Frequency(lv), MultiIndex::new(av), c.clone());
        }
        out
    }
}

impl<'a> Add<&'a ExpPoly> for &ExpPoly {
    type Output = ExpPoly;
    /// Panics on dimension mismatch; see [`ExpPoly::try_add`].
    fn add(self, rhs: &'a ExpPoly) -> ExpPoly {
        self.try_add(rhs).expect("ExpPoly dimensions differ")
    }
}

impl<'a> Sub<&'a ExpPoly> for &ExpPoly {
    type Output = ExpPoly;
    fn sub(self, rhs: &'a ExpPoly) -> ExpPoly {
        self.try_sub(rhs).expect("ExpPoly dimensions differ")
    }
}

impl<'a> Mul<&'a ExpPoly> for &ExpPoly {
    type Output = ExpPoly;
    fn mul(self, rhs: &'a ExpPoly) -> ExpPoly {
        self.try_mul(rhs).expect("ExpPoly dimensions differ")
    }
}

impl Neg for &ExpPoly {
    type Output = ExpPoly;
    fn neg(self) -> ExpPoly {
        ExpPoly {
            dim: self.dim,
            terms: self
                .terms
                .iter()
                .map(|(l, p)| (l.clone(), p.iter().map(|(a, c)| (a.clone(), -c)).collect()))
                .collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl $tr<ExpPoly> for ExpPoly {
            type Output = ExpPoly;
            fn $method(self, rhs: ExpPoly) -> ExpPoly {
                (&self).$method(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for ExpPoly {
    type Output = ExpPoly;
    fn neg(self) -> ExpPoly {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x1sq() -> ExpPoly {
        ExpPoly::monomial(&[2])
    }

    #[test]
    fn add_zero_is_identity() {
        let f = &x1sq() + &ExpPoly::exp_linear(vec![GaussRational::from_int(3)]);
        assert_eq!(&f + &ExpPoly::zero(1), f);
    }

    #[test]
    fn exponentials_multiply_by_adding_frequencies() {
        let e = ExpPoly::exp_linear(vec![GaussRational::one()]);
        assert_eq!(&e * &e, ExpPoly::exp_linear(vec![GaussRational::from_int(2)]));
    }

    #[test]
    fn cancellation_gives_canonical_zero() {
        let f = &x1sq() + &(-&x1sq());
        assert!(f.is_zero());
        assert_eq!(f, ExpPoly::zero(1));
        let g = &x1sq() + &x1sq().scale(&ExpScalar::from_int(-1));
        assert_eq!(g, ExpPoly::zero(1));
    }

    #[test]
    fn dimension_mismatch() {
        assert_eq!(
            ExpPoly::one(1).try_add(&ExpPoly::one(2)),
            Err(Error::DimensionMismatch { expected: 1, found: 2 })
        );
        assert!(ExpPoly::one(2).try_mul(&ExpPoly::one(1)).is_err());
    }

    #[test]
    fn polynomial_predicate() {
        assert!((&x1sq() + &ExpPoly::constant(1, ExpScalar::from_int(3))).is_polynomial());
        assert!(!ExpPoly::exp_linear(vec![GaussRational::one()]).is_polynomial());
        assert!(!ExpPoly::constant(1, ExpScalar::exp(GaussRational::one())).is_polynomial());
        assert!(ExpPoly::zero(2).is_polynomial());
    }
}
