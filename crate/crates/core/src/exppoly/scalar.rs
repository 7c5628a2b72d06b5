use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;

use crate::linalg::{GaussRational, Rational};

/// Exact scalar `Σ c·e^w` with Gaussian-rational coefficients `c` and
/// exponents `w`.
///
/// Shifting `e^{⟨λ,x⟩}` by a rational vector produces the transcendental
/// factor `e^{⟨λ,y⟩}`; keeping it formal keeps every operator exact. By
/// Lindemann–Weierstrass the exponentials of distinct algebraic exponents
/// are linearly independent over the algebraic numbers, so the canonical
/// form is zero exactly when the value is zero.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct ExpScalar {
    terms: BTreeMap<GaussRational, GaussRational>,
}

impl ExpScalar {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_gauss(GaussRational::one())
    }

    pub fn from_gauss(c: GaussRational) -> Self {
        Self::term(c, GaussRational::zero())
    }

    pub fn from_rational(r: Rational) -> Self {
        Self::from_gauss(GaussRational::real(r))
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_gauss(GaussRational::from_int(n))
    }

    /// `e^w`.
    pub fn exp(w: GaussRational) -> Self {
        Self::term(GaussRational::one(), w)
    }

    /// `c·e^w`.
    pub fn term(c: GaussRational, w: GaussRational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(w, c);
        }
        Self { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.as_gauss().is_some_and(|c| c.is_one())
    }

    /// Number of exponential terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// `(exponent, coefficient)` pairs in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (&GaussRational, &GaussRational)> {
        self.terms.iter()
    }

    /// The plain Gaussian rational this scalar equals, when it carries no
    /// exponential factor.
    pub fn as_gauss(&self) -> Option<GaussRational> {
        match self.terms.len() {
            0 => Some(GaussRational::zero()),
            1 => self
                .terms
                .get(&GaussRational::zero())
                .cloned(),
            _ => None,
        }
    }

    pub fn is_plain(&self) -> bool {
        self.as_gauss().is_some()
    }

    /// A single term `c·e^w` with `c ≠ 0` is invertible in the scalar ring.
    pub fn is_unit(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn unit_inverse(&self) -> Option<Self> {
        if !self.is_unit() {
            return None;
        }
        let (w, c) = self.terms.iter().next()?;
        Some(Self::term(c.inv(), -w))
    }

    /// `self / d` when `d` divides `self` in the scalar ring.
    ///
    /// Exponents are ordered lexicographically, a group order on `ℚ(i)`, so
    /// long division by leading terms finds any exact quotient. The quotient
    /// exponents of an exact division lie in a box fixed by the extreme real
    /// and imaginary parts, and on the lattice the exponents generate, so the
    /// loop stops.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        let (d_lead, d_coef) = d.terms.iter().next_back()?;
        if d.is_unit() {
            return Some(self * &Self::term(d_coef.inv(), -d_lead));
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        let (a_re, a_im) = self.exponent_ranges();
        let (d_re, d_im) = d.exponent_ranges();
        let re = (&a_re.0 - &d_re.0, &a_re.1 - &d_re.1);
        let im = (&a_im.0 - &d_im.0, &a_im.1 - &d_im.1);
        let mut rem = self.clone();
        let mut quotient = Self::zero();
        while let Some((w, c)) = rem.terms.iter().next_back() {
            let qw = w - d_lead;
            if qw.re < re.0 || qw.re > re.1 || qw.im < im.0 || qw.im > im.1 {
                return None;
            }
            let q = Self::term(c / d_coef, qw);
            rem = &rem - &(&q * d);
            quotient = &quotient + &q;
        }
        Some(quotient)
    }

    /// `((min re, max re), (min im, max im))` over the exponents of a nonzero
    /// scalar.
    fn exponent_ranges(&self) -> ((Rational, Rational), (Rational, Rational)) {
        let mut ws = self.terms.keys();
        let first = ws.next().expect("nonzero scalar");
        let mut re = (first.re.clone(), first.re.clone());
        let mut im = (first.im.clone(), first.im.clone());
        for w in ws {
            re = (re.0.min(w.re.clone()), re.1.max(w.re.clone()));
            im = (im.0.min(w.im.clone()), im.1.max(w.im.clone()));
        }
        (re, im)
    }

    /// Number of terms plus coefficient height, a rough size for pivoting.
    pub(crate) fn weight(&self) -> u64 {
        (self.terms.len() as u64) << 32 | self.height().min(u32::MAX as u64)
    }

    /// Multiplies by `e^w`.
    pub fn shift(&self, w: &GaussRational) -> Self {
        Self {
            terms: self.terms.iter().map(|(e, c)| (e + w, c.clone())).collect(),
        }
    }

    pub fn scale(&self, s: &GaussRational) -> Self {
        if s.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(e, c)| (e.clone(), c * s)).collect(),
        }
    }

    pub fn scale_rational(&self, r: &Rational) -> Self {
        self.scale(&GaussRational::real(r.clone()))
    }

    fn accumulate(&mut self, w: GaussRational, c: GaussRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get() + &c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn evaluate(&self) -> Complex64 {
        self.terms
            .iter()
            .map(|(w, c)| c.to_complex() * w.to_complex().exp())
            .sum()
    }

    /// Largest bit size among all rationals involved.
    pub fn height(&self) -> u64 {
        self.terms
            .iter()
            .map(|(w, c)| w.height().max(c.height()))
            .max()
            .unwrap_or(0)
    }
}

impl From<GaussRational> for ExpScalar {
    fn from(c: GaussRational) -> Self {
        Self::from_gauss(c)
    }
}

impl<'a> Add<&'a ExpScalar> for &ExpScalar {
    type Output = ExpScalar;
    fn add(self, rhs: &'a ExpScalar) -> ExpScalar {
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.accumulate(w.clone(), c.clone());
        }
        out
    }
}

impl<'a> Sub<&'a ExpScalar> for &ExpScalar {
    type Output = ExpScalar;
    fn sub(self, rhs: &'a ExpScalar) -> ExpScalar {
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.accumulate(w.clone(), -c);
        }
        out
    }
}

impl<'a> Mul<&'a ExpScalar> for &ExpScalar {
    type Output = ExpScalar;
    fn mul(self, rhs: &'a ExpScalar) -> ExpScalar {
        let mut out = ExpScalar::zero();
        for (w1, c1) in &self.terms {
            for (w2, c2) in &rhs.terms {
                out.accumulate(w1 + w2, c1 * c2);
            }
        }
        out
    }
}

impl Neg for &ExpScalar {
    type Output = ExpScalar;
    fn neg(self) -> ExpScalar {
        ExpScalar {
            terms: self.terms.iter().map(|(w, c)| (w.clone(), -c)).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl $tr<ExpScalar> for ExpScalar {
            type Output = ExpScalar;
            fn $method(self, rhs: ExpScalar) -> ExpScalar {
                (&self).$method(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for ExpScalar {
    type Output = ExpScalar;
    fn neg(self) -> ExpScalar {
        -&self
    }
}

/// Prints a sum of scalar terms in the expression syntax, e.g.
/// `2*E(1/2) - 3`.
impl fmt::Display for ExpScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts = self.terms.iter().map(|(w, c)| scalar_term_parts(c, w));
        super::display::write_signed_sum(f, parts)
    }
}

impl fmt::Debug for ExpScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// `(negative, factors)` for a single `c·e^w`.
pub(crate) fn scalar_term_parts(c: &GaussRational, w: &GaussRational) -> (bool, Vec<String>) {
    let (neg, mut factors) = super::display::coefficient_parts(c);
    if !w.is_zero() {
        factors.push(format!("E({w})"));
    }
    (neg, factors)
}
