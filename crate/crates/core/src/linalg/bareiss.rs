use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::gauss::GaussRational;

/// Gaussian integer used inside the fraction-free elimination.
#[derive(Clone, Debug, PartialEq)]
struct GaussInt {
    re: BigInt,
    im: BigInt,
}

impl GaussInt {
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    fn mul(&self, o: &Self) -> Self {
        Self {
            re: &self.re * &o.re - &self.im * &o.im,
            im: &self.re * &o.im + &self.im * &o.re,
        }
    }

    fn sub(&self, o: &Self) -> Self {
        Self {
            re: &self.re - &o.re,
            im: &self.im - &o.im,
        }
    }

    /// Division known to be exact.
    fn div_exact(&self, o: &Self) -> Self {
        let n = &o.re * &o.re + &o.im * &o.im;
        let re = &self.re * &o.re + &self.im * &o.im;
        let im = &self.im * &o.re - &self.re * &o.im;
        debug_assert!((&re % &n).is_zero() && (&im % &n).is_zero());
        Self { re: re / &n, im: im / n }
    }
}

/// Exact rank of a rectangular Gaussian-rational matrix.
///
/// Rows are scaled to Gaussian integers and reduced with Bareiss'
/// fraction-free elimination, so every intermediate entry is a minor of
/// the scaled matrix and each division is exact.
pub fn mat_rank(a: &[Vec<GaussRational>]) -> usize {
    let cols = a.first().map_or(0, Vec::len);
    let mut m: Vec<Vec<GaussInt>> = a
        .iter()
        .map(|row| {
            assert_eq!(row.len(), cols, "ragged matrix");
            let lcm = row.iter().fold(BigInt::one(), |acc, x| {
                acc.lcm(x.re.denom()).lcm(x.im.denom())
            });
            row.iter()
                .map(|x| GaussInt {
                    re: x.re.numer() * (&lcm / x.re.denom()),
                    im: x.im.numer() * (&lcm / x.im.denom()),
                })
                .collect()
        })
        .collect();
    let rows = m.len();
    let mut prev = GaussInt {
        re: BigInt::one(),
        im: BigInt::zero(),
    };
    let mut r = 0;
    for col in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let pivot = m[r][col].clone();
        for i in r + 1..rows {
            let lead = m[i][col].clone();
            for j in col + 1..cols {
                let v = pivot.mul(&m[i][j]).sub(&lead.mul(&m[r][j]));
                m[i][j] = v.div_exact(&prev);
            }
            m[i][col] = GaussInt {
                re: BigInt::zero(),
                im: BigInt::zero(),
            };
        }
        prev = pivot;
        r += 1;
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::field::rank;
    use crate::linalg::rat;

    fn m(rows: &[&[i64]]) -> Vec<Vec<GaussRational>> {
        rows.iter()
            .map(|r| r.iter().map(|&x| GaussRational::from_int(x)).collect())
            .collect()
    }

    #[test]
    fn small_cases() {
        assert_eq!(mat_rank(&m(&[&[1, 0], &[0, 0]])), 1);
        assert_eq!(mat_rank(&m(&[&[0, 0, 0], &[0, 0, 0], &[0, 0, 0]])), 0);
        assert_eq!(mat_rank(&m(&[&[1, 1], &[1, 2]])), 2);
        assert_eq!(mat_rank(&[]), 0);
    }

    #[test]
    fn skipped_columns_and_fractions() {
        let a = vec![
            vec![GaussRational::zero(), GaussRational::real(rat(1, 2)), GaussRational::i()],
            vec![GaussRational::zero(), GaussRational::real(rat(1, 3)), GaussRational::new(rat(0, 1), rat(2, 3))],
            vec![GaussRational::zero(), GaussRational::one(), GaussRational::zero()],
        ];
        assert_eq!(mat_rank(&a), rank(&a, 3));
        assert_eq!(mat_rank(&a), 2);
    }
}
