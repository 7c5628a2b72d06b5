use std::fmt;
use std::ops::{Add, Index, Neg, Sub};

use num_traits::{One, ToPrimitive, Zero};

use super::rational::{rat, Rational};
use crate::error::{Error, Result};

/// Dense rational matrix, row-major. Coefficient matrices of an equation
/// are square; rectangular shapes appear for linear substitutions such as
/// `z = b x + c y`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl RatMatrix {
    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.is_empty() || cols == 0 {
            return Err(Error::InvalidInput("empty matrix".into()));
        }
        if let Some(bad) = rows.iter().find(|r| r.len() != cols) {
            return Err(Error::DimensionMismatch {
                expected: cols,
                found: bad.len(),
            });
        }
        Ok(Self {
            rows: rows.len(),
            cols,
            data: rows.into_iter().flatten().collect(),
        })
    }

    /// Integer-entry constructor, mostly for tests and examples.
    pub fn from_ints(rows: &[&[i64]]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| rat(x, 1)).collect())
                .collect(),
        )
        .expect("well-formed integer matrix")
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(d: usize) -> Self {
        let mut m = Self::zeros(d, d);
        for i in 0..d {
            m.data[i * d + i] = Rational::one();
        }
        m
    }

    /// 1×1 matrix.
    pub fn scalar(r: Rational) -> Self {
        Self {
            rows: 1,
            cols: 1,
            data: vec![r],
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rational) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<Rational>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn to_f64_rows(&self) -> Vec<Vec<f64>> {
        (0..self.rows)
            .map(|i| self.row(i).iter().map(|x| x.to_f64().unwrap_or(f64::NAN)).collect())
            .collect()
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.rows)
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: other.rows,
            });
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let idx = i * other.cols + j;
                    out.data[idx] = &out.data[idx] + a * other.get(k, j);
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &RatVector) -> Result<RatVector> {
        if self.cols != v.len() {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: v.len(),
            });
        }
        Ok(RatVector(
            (0..self.rows)
                .map(|i| {
                    self.row(i)
                        .iter()
                        .zip(&v.0)
                        .fold(Rational::zero(), |acc, (a, b)| acc + a * b)
                })
                .collect(),
        ))
    }

    /// `[self | other]`.
    pub fn hstack(&self, other: &Self) -> Result<Self> {
        if self.rows != other.rows {
            return Err(Error::DimensionMismatch {
                expected: self.rows,
                found: other.rows,
            });
        }
        let rows = (0..self.rows)
            .map(|i| self.row(i).iter().chain(other.row(i)).cloned().collect())
            .collect();
        Self::from_rows(rows)
    }

    fn check_same_shape(&self, other: &Self) -> Result<()> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimensionMismatch {
                expected: self.rows * self.cols,
                found: other.rows * other.cols,
            });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_same_shape(other)?;
        Ok(Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check_same_shape(other)?;
        Ok(Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect(),
        })
    }

    /// Determinant by exact Gaussian elimination.
    pub fn det(&self) -> Result<Rational> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch {
                expected: self.rows,
                found: self.cols,
            });
        }
        let n = self.rows;
        let mut a = self.to_rows();
        let mut det = Rational::one();
        for col in 0..n {
            let Some(p) = (col..n).find(|&i| !a[i][col].is_zero()) else {
                return Ok(Rational::zero());
            };
            if p != col {
                a.swap(p, col);
                det = -det;
            }
            let pivot = a[col][col].clone();
            det *= &pivot;
            for i in col + 1..n {
                if a[i][col].is_zero() {
                    continue;
                }
                let f = &a[i][col] / &pivot;
                for j in col..n {
                    let v = &a[i][j] - &f * &a[col][j];
                    a[i][j] = v;
                }
            }
        }
        Ok(det)
    }

    pub fn is_invertible(&self) -> bool {
        self.det().map(|d| !d.is_zero()).unwrap_or(false)
    }

    /// Exact inverse by Gauss–Jordan elimination.
    pub fn inverse(&self) -> Result<Self> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch {
                expected: self.rows,
                found: self.cols,
            });
        }
        let n = self.rows;
        let mut a = self.to_rows();
        let mut inv = Self::identity(n).to_rows();
        for col in 0..n {
            let p = (col..n)
                .find(|&i| !a[i][col].is_zero())
                .ok_or(Error::SingularMatrix)?;
            a.swap(p, col);
            inv.swap(p, col);
            let pivot_inv = a[col][col].recip();
            for j in 0..n {
                a[col][j] = &a[col][j] * &pivot_inv;
                inv[col][j] = &inv[col][j] * &pivot_inv;
            }
            for i in 0..n {
                if i == col || a[i][col].is_zero() {
                    continue;
                }
                let f = a[i][col].clone();
                for j in 0..n {
                    a[i][j] = &a[i][j] - &f * &a[col][j];
                    inv[i][j] = &inv[i][j] - &f * &inv[col][j];
                }
            }
        }
        Self::from_rows(inv)
    }
}

/// Matrix inverse as a free function.
pub fn mat_inverse(a: &RatMatrix) -> Result<RatMatrix> {
    a.inverse()
}

impl Index<(usize, usize)> for RatMatrix {
    type Output = Rational;
    fn index(&self, (i, j): (usize, usize)) -> &Rational {
        self.get(i, j)
    }
}

impl fmt::Display for RatMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for (j, x) in self.row(i).iter().enumerate() {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{x}")?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for RatMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Rational vector (shift vectors `y`, `h`).
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct RatVector(pub Vec<Rational>);

impl RatVector {
    pub fn new(entries: Vec<Rational>) -> Self {
        Self(entries)
    }

    pub fn from_ints(entries: &[i64]) -> Self {
        Self(entries.iter().map(|&x| rat(x, 1)).collect())
    }

    pub fn zeros(d: usize) -> Self {
        Self(vec![Rational::zero(); d])
    }

    /// j-th standard basis vector.
    pub fn unit(d: usize, j: usize) -> Self {
        let mut v = Self::zeros(d);
        v.0[j] = Rational::one();
        v
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn entries(&self) -> &[Rational] {
        &self.0
    }

    pub fn concat(&self, other: &Self) -> Self {
        Self(self.0.iter().chain(&other.0).cloned().collect())
    }

    pub fn to_f64(&self) -> Vec<f64> {
        self.0.iter().map(|x| x.to_f64().unwrap_or(f64::NAN)).collect()
    }
}

impl Add for &RatVector {
    type Output = RatVector;
    fn add(self, rhs: &RatVector) -> RatVector {
        assert_eq!(self.len(), rhs.len(), "vector length mismatch");
        RatVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &RatVector {
    type Output = RatVector;
    fn sub(self, rhs: &RatVector) -> RatVector {
        assert_eq!(self.len(), rhs.len(), "vector length mismatch");
        RatVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &RatVector {
    type Output = RatVector;
    fn neg(self) -> RatVector {
        RatVector(self.0.iter().map(|a| -a).collect())
    }
}

impl fmt::Display for RatVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (j, x) in self.0.iter().enumerate() {
            if j > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for RatVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_examples() {
        assert_eq!(mat_inverse(&RatMatrix::identity(2)).unwrap(), RatMatrix::identity(2));
        let a = RatMatrix::from_ints(&[&[2, 1], &[1, 1]]);
        let inv = mat_inverse(&a).unwrap();
        assert_eq!(inv, RatMatrix::from_ints(&[&[1, -1], &[-1, 2]]));
        assert!(a.mul(&inv).unwrap().is_identity());
        assert_eq!(
            mat_inverse(&RatMatrix::from_ints(&[&[1, 2], &[2, 4]])),
            Err(Error::SingularMatrix)
        );
    }

    #[test]
    fn det_and_shapes() {
        assert_eq!(RatMatrix::from_ints(&[&[1, -1], &[-1, 1]]).det().unwrap(), rat(0, 1));
        assert_eq!(RatMatrix::from_ints(&[&[0, 1], &[1, 0]]).det().unwrap(), rat(-1, 1));
        let l = RatMatrix::identity(2).hstack(&RatMatrix::from_ints(&[&[2, 0], &[0, 3]])).unwrap();
        assert_eq!((l.rows(), l.cols()), (2, 4));
        assert!(l.det().is_err());
        assert!(RatMatrix::from_rows(vec![vec![rat(1, 1)], vec![]]).is_err());
    }
}
