use std::fmt::Debug;

use super::gauss::GaussRational;

/// Exact field arithmetic used by the generic elimination routines.
///
/// Method names avoid the `std::ops` vocabulary so that implementors can
/// also carry operator overloads without ambiguity.
pub trait Field: Clone + PartialEq + Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn plus(&self, other: &Self) -> Self;
    fn minus(&self, other: &Self) -> Self;
    fn times(&self, other: &Self) -> Self;
    fn negate(&self) -> Self;
    /// Inverse of a nonzero element.
    fn inverse(&self) -> Self;
    /// Smaller is a better pivot.
    fn pivot_cost(&self) -> u64 {
        0
    }
}

impl Field for GaussRational {
    fn zero() -> Self {
        GaussRational::zero()
    }
    fn one() -> Self {
        GaussRational::one()
    }
    fn is_zero(&self) -> bool {
        GaussRational::is_zero(self)
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn minus(&self, other: &Self) -> Self {
        self - other
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn negate(&self) -> Self {
        -self
    }
    fn inverse(&self) -> Self {
        self.inv()
    }
    fn pivot_cost(&self) -> u64 {
        self.height()
    }
}

/// Incrementally built reduced row-echelon basis.
///
/// Every stored row has a 1 in its pivot column and 0 in the pivot columns
/// of all other stored rows. `combos[k]` expresses stored row `k` as a
/// combination of the vectors passed to [`Echelon::insert`], indexed by
/// insertion order.
#[derive(Debug, Clone)]
pub struct Echelon<F: Field> {
    width: usize,
    rows: Vec<Vec<F>>,
    pivots: Vec<usize>,
    combos: Vec<Vec<F>>,
    inserted: usize,
    /// Insertion indices of the vectors that increased the rank.
    pub independent: Vec<usize>,
}

impl<F: Field> Echelon<F> {
    pub fn new(width: usize) -> Self {
        Self {
            width,
            rows: Vec::new(),
            pivots: Vec::new(),
            combos: Vec::new(),
            inserted: 0,
            independent: Vec::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn pivot_columns(&self) -> &[usize] {
        &self.pivots
    }

    /// Reduced rows, in the order their pivots were found.
    pub fn rows(&self) -> &[Vec<F>] {
        &self.rows
    }

    /// Reduces `v` against the stored rows. Returns the remainder and the
    /// multipliers applied to each stored row (`v = remainder + Σ m_k row_k`).
    pub fn reduce(&self, v: &[F]) -> (Vec<F>, Vec<F>) {
        assert_eq!(v.len(), self.width, "vector length mismatch");
        let mut rem = v.to_vec();
        let mut mult = Vec::with_capacity(self.rows.len());
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            let m = rem[p].clone();
            if !m.is_zero() {
                for (r, x) in rem.iter_mut().zip(row) {
                    if !x.is_zero() {
                        *r = r.minus(&m.times(x));
                    }
                }
            }
            mult.push(m);
        }
        (rem, mult)
    }

    pub fn contains(&self, v: &[F]) -> bool {
        self.reduce(v).0.iter().all(Field::is_zero)
    }

    /// Inserts `v`; returns true when it was independent of the stored rows.
    pub fn insert(&mut self, v: &[F]) -> bool {
        let index = self.inserted;
        self.inserted += 1;
        for c in &mut self.combos {
            c.push(F::zero());
        }
        let (mut rem, mult) = self.reduce(v);
        let Some(p) = rem
            .iter()
            .enumerate()
            .filter(|(_, x)| !x.is_zero())
            .min_by_key(|(j, x)| (x.pivot_cost(), *j))
            .map(|(j, _)| j)
        else {
            return false;
        };
        // combo of rem in terms of inserted vectors: e_index - Σ mult_k combos_k
        let mut combo = vec![F::zero(); self.inserted];
        combo[index] = F::one();
        for (m, c) in mult.iter().zip(&self.combos) {
            if !m.is_zero() {
                for (t, x) in combo.iter_mut().zip(c) {
                    *t = t.minus(&m.times(x));
                }
            }
        }
        let inv = rem[p].inverse();
        for x in rem.iter_mut() {
            *x = x.times(&inv);
        }
        for x in combo.iter_mut() {
            *x = x.times(&inv);
        }
        for (row, c) in self.rows.iter_mut().zip(self.combos.iter_mut()) {
            let m = row[p].clone();
            if m.is_zero() {
                continue;
            }
            for (r, x) in row.iter_mut().zip(&rem) {
                *r = r.minus(&m.times(x));
            }
            for (t, x) in c.iter_mut().zip(&combo) {
                *t = t.minus(&m.times(x));
            }
        }
        self.rows.push(rem);
        self.pivots.push(p);
        self.combos.push(combo);
        self.independent.push(index);
        true
    }

    /// Coefficients `c` with `Σ c_j inserted_j = v`, or `None` when `v` is
    /// outside the span. Dependent inserted vectors receive coefficient 0.
    pub fn express(&self, v: &[F]) -> Option<Vec<F>> {
        let (rem, mult) = self.reduce(v);
        if !rem.iter().all(Field::is_zero) {
            return None;
        }
        let mut out = vec![F::zero(); self.inserted];
        for (m, c) in mult.iter().zip(&self.combos) {
            if !m.is_zero() {
                for (o, x) in out.iter_mut().zip(c) {
                    *o = o.plus(&m.times(x));
                }
            }
        }
        Some(out)
    }
}

/// Reduced row-echelon data of a rows × width matrix.
pub fn echelon<F: Field>(rows: &[Vec<F>], width: usize) -> Echelon<F> {
    let mut e = Echelon::new(width);
    for r in rows {
        e.insert(r);
    }
    e
}

pub fn rank<F: Field>(rows: &[Vec<F>], width: usize) -> usize {
    echelon(rows, width).rank()
}

/// Exact coefficients expressing `target` in the span of `basis`, or `None`
/// when it lies outside.
pub fn solve_in_span<F: Field>(target: &[F], basis: &[Vec<F>]) -> Option<Vec<F>> {
    let mut e = Echelon::new(target.len());
    for b in basis {
        e.insert(b);
    }
    e.express(target)
}
