//! Printing in the expression syntax accepted by [`crate::dsl`].

use std::fmt;

use num_traits::{One, Signed, Zero};

use super::poly::{ExpPoly, Frequency};
use super::scalar::scalar_term_parts;
use crate::linalg::GaussRational;

/// Sign and multiplicative factors of a Gaussian-rational coefficient; an
/// empty factor list means magnitude 1.
pub(crate) fn coefficient_parts(c: &GaussRational) -> (bool, Vec<String>) {
    if c.im.is_zero() {
        let mag = c.re.abs();
        let factors = if mag.is_one() { vec![] } else { vec![mag.to_string()] };
        (c.re.is_negative(), factors)
    } else if c.re.is_zero() {
        let mag = c.im.abs();
        let mut factors = if mag.is_one() { vec![] } else { vec![mag.to_string()] };
        factors.push("i".into());
        (c.im.is_negative(), factors)
    } else {
        (false, vec![format!("({c})")])
    }
}

pub(crate) fn write_signed_sum(
    f: &mut fmt::Formatter<'_>,
    parts: impl Iterator<Item = (bool, Vec<String>)>,
) -> fmt::Result {
    for (k, (neg, factors)) in parts.enumerate() {
        match (k, neg) {
            (0, true) => write!(f, "-")?,
            (0, false) => {}
            (_, true) => write!(f, " - ")?,
            (_, false) => write!(f, " + ")?,
        }
        if factors.is_empty() {
            write!(f, "1")?;
        } else {
            write!(f, "{}", factors.join("*"))?;
        }
    }
    Ok(())
}

struct LinearForm<'a>(&'a Frequency, &'a dyn Fn(usize) -> String);

impl fmt::Display for LinearForm<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts = self
            .0
            .components()
            .iter()
            .enumerate()
            .filter(|(_, l)| !l.is_zero())
            .map(|(j, l)| {
                let (neg, mut factors) = coefficient_parts(l);
                factors.push((self.1)(j));
                (neg, factors)
            });
        write_signed_sum(f, parts)
    }
}

/// Frequencies ascend; within a frequency, monomials print highest first.
impl fmt::Display for ExpPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_poly(f, self, &|j| format!("x{}", j + 1))
    }
}

impl ExpPoly {
    /// Prints with variables named `{var}1, {var}2, …`. Only the `x`
    /// spelling parses back.
    pub fn to_string_with_var(&self, var: &str) -> String {
        self.to_string_with_names(&|j| format!("{var}{}", j + 1))
    }

    /// Prints with variable `j` (0-based) named `name(j)`.
    pub fn to_string_with_names(&self, name: &dyn Fn(usize) -> String) -> String {
        struct Named<'a>(&'a ExpPoly, &'a dyn Fn(usize) -> String);
        impl fmt::Display for Named<'_> {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                write_poly(f, self.0, self.1)
            }
        }
        Named(self, name).to_string()
    }
}

fn write_poly(f: &mut fmt::Formatter<'_>, p: &ExpPoly, name: &dyn Fn(usize) -> String) -> fmt::Result {
    if p.is_zero() {
        return write!(f, "0");
    }
    let parts = p.components().flat_map(|(lambda, poly)| {
        poly.iter().rev().map(move |(alpha, c)| {
            let (neg, mut factors) = match c.terms().next() {
                Some((w, coef)) if c.len() == 1 => scalar_term_parts(coef, w),
                _ => (false, vec![format!("({c})")]),
            };
            factors.extend(alpha.factors(name));
            if !lambda.is_zero() {
                factors.push(format!("exp({})", LinearForm(lambda, name)));
            }
            (neg, factors)
        })
    });
    write_signed_sum(f, parts)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exppoly::ExpScalar;
    use crate::linalg::{rat, RatVector};

    #[test]
    fn prints_translated_square() {
        let f = ExpPoly::monomial(&[2]).translate(&RatVector::from_ints(&[1])).unwrap();
        assert_eq!(f.to_string(), "x1^2 + 2*x1 + 1");
        assert_eq!(ExpPoly::zero(1).to_string(), "0");
    }

    #[test]
    fn prints_exponentials_and_scalars() {
        let lam = vec![GaussRational::from_int(2), -GaussRational::i()];
        assert_eq!(ExpPoly::exp_linear(lam).to_string(), "exp(2*x1 - i*x2)");
        let f = ExpPoly::exp_linear(vec![GaussRational::one()])
            .scale(&ExpScalar::exp(GaussRational::real(rat(1, 2))));
        assert_eq!(f.to_string(), "E(1/2)*exp(x1)");
        let g = ExpPoly::var(1, 0).scale_gauss(&GaussRational::new(rat(1, 1), rat(-1, 2)));
        assert_eq!(g.to_string(), "(1 - 1/2*i)*x1");
        let h = ExpPoly::constant(1, &ExpScalar::exp(GaussRational::one()) + &ExpScalar::one());
        assert_eq!(h.to_string(), "(1 + E(1))");
    }
}
