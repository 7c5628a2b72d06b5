//! Exact linear algebra over finite families of exponential polynomials.
//!
//! Functions are identified with coefficient vectors over their
//! `(frequency, monomial)` atoms. When every coefficient is a plain
//! Gaussian rational the computation runs over `ℚ(i)`. Otherwise it runs
//! fraction-free over the formal scalar ring, an integral domain, which
//! gives the exact rank over `ℂ`.

use std::collections::HashMap;

use super::monomial::MultiIndex;
use super::poly::{ExpPoly, Frequency};
use super::scalar::ExpScalar;
use crate::linalg::{Echelon, GaussRational};

/// Coordinates of functions over the union of their atoms.
pub(crate) struct AtomIndex {
    dim: usize,
    keys: Vec<(Frequency, MultiIndex)>,
    pos: HashMap<(Frequency, MultiIndex), usize>,
}

impl AtomIndex {
    pub(crate) fn new<'a>(dim: usize, family: impl IntoIterator<Item = &'a ExpPoly>) -> Self {
        let mut keys = Vec::new();
        let mut pos = HashMap::new();
        for f in family {
            for (l, a, _) in f.atoms() {
                let key = (l.clone(), a.clone());
                if !pos.contains_key(&key) {
                    pos.insert(key.clone(), keys.len());
                    keys.push(key);
                }
            }
        }
        Self { dim, keys, pos }
    }

    pub(crate) fn width(&self) -> usize {
        self.keys.len()
    }

    /// Panics when `f` has an atom outside the index.
    fn coords(&self, f: &ExpPoly) -> Vec<ExpScalar> {
        let mut v = vec![ExpScalar::zero(); self.keys.len()];
        for (l, a, c) in f.atoms() {
            v[self.pos[&(l.clone(), a.clone())]] = c.clone();
        }
        v
    }

    /// `None` when some coefficient is not a plain Gaussian rational.
    fn plain_coords(&self, f: &ExpPoly) -> Option<Vec<GaussRational>> {
        self.coords(f).iter().map(ExpScalar::as_gauss).collect()
    }

    fn poly_from(&self, v: &[ExpScalar]) -> ExpPoly {
        let mut out = ExpPoly::zero(self.dim);
        for ((l, a), c) in self.keys.iter().zip(v) {
            out.add_term(l.clone(), a.clone(), c.clone());
        }
        out
    }
}

/// Brings `num_j / den_j` to a common denominator `D`, returning `D` and the
/// numerators `D·num_j/den_j`.
pub fn common_denominator(pairs: &[(ExpScalar, ExpScalar)]) -> (ExpScalar, Vec<ExpScalar>) {
    let mut dens: Vec<ExpScalar> = Vec::new();
    for (n, d) in pairs {
        if !n.is_zero() && !d.is_one() && !dens.contains(d) {
            dens.push(d.clone());
        }
    }
    let total = dens.iter().fold(ExpScalar::one(), |acc, d| &acc * d);
    let nums = pairs
        .iter()
        .map(|(n, d)| {
            if n.is_zero() {
                return ExpScalar::zero();
            }
            dens.iter()
                .filter(|x| *x != d)
                .fold(n.clone(), |acc, x| &acc * x)
        })
        .collect();
    (total, nums)
}

/// Fraction-free echelon form over the scalar ring (Bareiss elimination).
///
/// Stored row `k` has been through the elimination steps of rows `0..k`,
/// so its entries are `(k+1)`-minors of the inserted vectors and each
/// update divides exactly by the previous pivot. `combos[k]` writes row `k`
/// as a combination of the inserted vectors.
struct RingEchelon {
    rows: Vec<Vec<ExpScalar>>,
    combos: Vec<Vec<ExpScalar>>,
    pivots: Vec<usize>,
    inserted: usize,
    independent: Vec<usize>,
}

fn bareiss_step(pivot: &ExpScalar, x: &ExpScalar, m: &ExpScalar, r: &ExpScalar, prev: &ExpScalar) -> ExpScalar {
    let t = &(pivot * x) - &(m * r);
    if prev.is_one() {
        t
    } else {
        t.div_exact(prev).expect("Bareiss updates divide exactly")
    }
}

impl RingEchelon {
    fn new() -> Self {
        Self {
            rows: Vec::new(),
            combos: Vec::new(),
            pivots: Vec::new(),
            inserted: 0,
            independent: Vec::new(),
        }
    }

    /// Runs every stored elimination step on `v` and its combination.
    fn reduce(&self, v: &mut [ExpScalar], combo: &mut [ExpScalar]) {
        let zero = ExpScalar::zero();
        let mut prev = ExpScalar::one();
        for ((row, c), &p) in self.rows.iter().zip(&self.combos).zip(&self.pivots) {
            let pivot = &row[p];
            let m = v[p].clone();
            for (x, r) in v.iter_mut().zip(row) {
                *x = bareiss_step(pivot, x, &m, r, &prev);
            }
            for (j, x) in combo.iter_mut().enumerate() {
                *x = bareiss_step(pivot, x, &m, c.get(j).unwrap_or(&zero), &prev);
            }
            prev = pivot.clone();
        }
    }

    fn insert(&mut self, v: &[ExpScalar]) -> bool {
        let index = self.inserted;
        self.inserted += 1;
        let mut v = v.to_vec();
        let mut combo = vec![ExpScalar::zero(); self.inserted];
        combo[index] = ExpScalar::one();
        self.reduce(&mut v, &mut combo);
        let Some(p) = v
            .iter()
            .enumerate()
            .filter(|(_, x)| !x.is_zero())
            .min_by_key(|(j, x)| (x.weight(), *j))
            .map(|(j, _)| j)
        else {
            return false;
        };
        self.rows.push(v);
        self.combos.push(combo);
        self.pivots.push(p);
        self.independent.push(index);
        true
    }
}

fn all_plain<'a>(family: impl IntoIterator<Item = &'a ExpPoly>) -> bool {
    family.into_iter().all(ExpPoly::has_plain_coefficients)
}

/// Indices of a maximal linearly independent subfamily, chosen greedily in
/// order.
pub fn independent_subset(family: &[ExpPoly]) -> Vec<usize> {
    let Some(first) = family.first() else {
        return Vec::new();
    };
    let index = AtomIndex::new(first.dim(), family);
    if all_plain(family) {
        let mut e = Echelon::new(index.width());
        for f in family {
            e.insert(&index.plain_coords(f).expect("plain coefficients"));
        }
        e.independent
    } else {
        let mut e = RingEchelon::new();
        for f in family {
            e.insert(&index.coords(f));
        }
        e.independent
    }
}

/// Dimension of the span over `ℂ`.
pub fn span_rank(family: &[ExpPoly]) -> usize {
    independent_subset(family).len()
}

/// Outcome of a span-membership test.
#[derive(Debug, Clone, PartialEq)]
pub enum Membership {
    /// `denominator · target = Σ coefficients_j · basis_j`, exactly.
    /// The denominator is 1 whenever the data has plain coefficients.
    Inside {
        denominator: ExpScalar,
        coefficients: Vec<ExpScalar>,
    },
    /// `target` reduced modulo the span (up to a nonzero scalar factor when
    /// formal scalars are involved); nonzero.
    Outside { remainder: ExpPoly },
}

impl Membership {
    pub fn is_inside(&self) -> bool {
        matches!(self, Membership::Inside { .. })
    }
}

fn plain_memberships(index: &AtomIndex, targets: &[ExpPoly], basis: &[ExpPoly]) -> Vec<Membership> {
    let mut e = Echelon::new(index.width());
    for b in basis {
        e.insert(&index.plain_coords(b).expect("plain coefficients"));
    }
    targets
        .iter()
        .map(|target| {
            let t = index.plain_coords(target).expect("plain coefficients");
            match e.express(&t) {
                Some(coeffs) => Membership::Inside {
                    denominator: ExpScalar::one(),
                    coefficients: coeffs.into_iter().map(ExpScalar::from_gauss).collect(),
                },
                None => {
                    let (rem, _) = e.reduce(&t);
                    let rem: Vec<ExpScalar> = rem.into_iter().map(ExpScalar::from_gauss).collect();
                    Membership::Outside {
                        remainder: index.poly_from(&rem),
                    }
                }
            }
        })
        .collect()
}

fn ring_memberships(index: &AtomIndex, targets: &[ExpPoly], basis: &[ExpPoly]) -> Vec<Membership> {
    let mut e = RingEchelon::new();
    for b in basis {
        e.insert(&index.coords(b));
    }
    let n = basis.len();
    targets
        .iter()
        .map(|target| {
            let mut v = index.coords(target);
            let mut combo = vec![ExpScalar::zero(); n + 1];
            combo[n] = ExpScalar::one();
            e.reduce(&mut v, &mut combo);
            if v.iter().any(|x| !x.is_zero()) {
                return Membership::Outside {
                    remainder: index.poly_from(&v),
                };
            }
            // a·target + Σ c_j basis_j = 0 with a ≠ 0
            let a = combo.pop().expect("target slot");
            let coefficients: Vec<ExpScalar> = combo.iter().map(|c| -c).collect();
            match coefficients.iter().map(|c| c.div_exact(&a)).collect::<Option<Vec<_>>>() {
                Some(coefficients) => Membership::Inside {
                    denominator: ExpScalar::one(),
                    coefficients,
                },
                None => Membership::Inside {
                    denominator: a,
                    coefficients,
                },
            }
        })
        .collect()
}

/// [`membership`] for several targets against one basis.
pub fn memberships(targets: &[ExpPoly], basis: &[ExpPoly]) -> Vec<Membership> {
    let Some(dim) = targets.first().or(basis.first()).map(ExpPoly::dim) else {
        return Vec::new();
    };
    let index = AtomIndex::new(dim, basis.iter().chain(targets));
    if all_plain(basis.iter().chain(targets)) {
        plain_memberships(&index, targets, basis)
    } else {
        ring_memberships(&index, targets, basis)
    }
}

/// Decides `target ∈ span(basis)` exactly.
pub fn membership(target: &ExpPoly, basis: &[ExpPoly]) -> Membership {
    memberships(std::slice::from_ref(target), basis).pop().expect("one target")
}
