//! Seeded random instances shared by the integration tests.
#![allow(dead_code)]

use lcw::equation::{EquationSpec, SolutionTuple};
use lcw::exppoly::{ExpPoly, ExpScalar, Frequency, MultiIndex};
use lcw::linalg::{mat_rank, rat, GaussRational, RatMatrix, RatVector, Rational};
use lcw::separation::BivariatePoly;
use proptest::prelude::*;
use proptest::test_runner::{Config as ProptestConfig, RngSeed};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn seed() -> u64 {
    std::env::var("LCW_SEED").ok().and_then(|s| s.parse().ok()).unwrap_or(0)
}

/// Base seed from `LCW_SEED` (default 0), mixed with a per-test stream id.
pub fn rng(stream: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed().wrapping_mul(0x9E37_79B9_7F4A_7C15) ^ stream)
}

/// Generator state for one proptest case.
pub fn case_rng(case: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(case)
}

/// Deterministic proptest runs keyed on `LCW_SEED`.
pub fn config(cases: u32) -> ProptestConfig {
    ProptestConfig {
        cases,
        rng_seed: RngSeed::Fixed(seed()),
        failure_persistence: None,
        ..ProptestConfig::default()
    }
}

pub fn rational_strategy(height: i64) -> impl Strategy<Value = Rational> {
    (-height..=height, 1..=height).prop_map(|(p, q)| rat(p, q))
}

pub fn vector_strategy(d: usize, height: i64) -> impl Strategy<Value = RatVector> {
    proptest::collection::vec(rational_strategy(height), d).prop_map(RatVector::new)
}

pub fn matrix_strategy(rows: usize, cols: usize, height: i64) -> impl Strategy<Value = RatMatrix> {
    proptest::collection::vec(proptest::collection::vec(rational_strategy(height), cols), rows)
        .prop_map(|r| RatMatrix::from_rows(r).unwrap())
}

/// `p/q` with `|p| ≤ height`, `1 ≤ q ≤ height`.
pub fn rational(r: &mut impl Rng, height: i64) -> Rational {
    rat(r.gen_range(-height..=height), r.gen_range(1..=height))
}

pub fn nonzero_rational(r: &mut impl Rng, height: i64) -> Rational {
    loop {
        let q = rational(r, height);
        if q != rat(0, 1) {
            return q;
        }
    }
}

pub fn gauss(r: &mut impl Rng, height: i64) -> GaussRational {
    if r.gen_bool(0.7) {
        GaussRational::real(rational(r, height))
    } else {
        GaussRational::new(rational(r, height), rational(r, height))
    }
}

pub fn nonzero_gauss(r: &mut impl Rng, height: i64) -> GaussRational {
    loop {
        let g = gauss(r, height);
        if !g.is_zero() {
            return g;
        }
    }
}

pub fn vector(r: &mut impl Rng, d: usize, height: i64) -> RatVector {
    RatVector::new((0..d).map(|_| rational(r, height)).collect())
}

pub fn matrix(r: &mut impl Rng, d: usize, height: i64) -> RatMatrix {
    RatMatrix::from_rows((0..d).map(|_| (0..d).map(|_| rational(r, height)).collect()).collect()).unwrap()
}

pub fn integer_matrix(r: &mut impl Rng, d: usize, height: i64) -> RatMatrix {
    RatMatrix::from_rows((0..d).map(|_| (0..d).map(|_| rat(r.gen_range(-height..=height), 1)).collect()).collect())
        .unwrap()
}

pub fn invertible_matrix(r: &mut impl Rng, d: usize, height: i64) -> RatMatrix {
    loop {
        let m = matrix(r, d, height);
        if m.is_invertible() {
            return m;
        }
    }
}

pub fn invertible_integer_matrix(r: &mut impl Rng, d: usize, height: i64) -> RatMatrix {
    loop {
        let m = integer_matrix(r, d, height);
        if m.is_invertible() {
            return m;
        }
    }
}

/// Shape of random exponential polynomials.
#[derive(Clone, Copy, Debug)]
pub struct Shape {
    pub d: usize,
    pub max_degree: u32,
    pub max_frequencies: usize,
    pub max_terms: usize,
    pub height: i64,
    /// Allow formal `E(w)` factors in coefficients.
    pub formal_scalars: bool,
    /// Allow non-real frequencies.
    pub complex_frequencies: bool,
    /// Candidate frequency components (real and imaginary parts).
    pub frequency_pool: &'static [(i64, i64)],
}

/// `(p, q)` pairs read as `p/q`.
pub const FREQUENCIES: &[(i64, i64)] = &[(0, 1), (1, 1), (-1, 1), (1, 2), (2, 1), (-3, 2)];
/// Frequencies of modulus at most 1, well separated on `[−1, 1]`.
pub const UNIT_FREQUENCIES: &[(i64, i64)] = &[(0, 1), (1, 1), (-1, 1)];

impl Shape {
    pub fn polynomial(d: usize, max_degree: u32) -> Self {
        Self {
            d,
            max_degree,
            max_frequencies: 1,
            max_terms: 6,
            height: 10,
            formal_scalars: false,
            complex_frequencies: false,
            frequency_pool: FREQUENCIES,
        }
    }
}

pub fn monomial(r: &mut impl Rng, d: usize, max_degree: u32) -> MultiIndex {
    let total = r.gen_range(0..=max_degree);
    let mut e = vec![0u32; d];
    for _ in 0..total {
        e[r.gen_range(0..d)] += 1;
    }
    MultiIndex::new(e)
}

pub fn frequency(r: &mut impl Rng, d: usize, complex: bool, pool: &[(i64, i64)]) -> Frequency {
    let choices: Vec<Rational> = pool.iter().map(|&(p, q)| rat(p, q)).collect();
    Frequency(
        (0..d)
            .map(|_| {
                let re = choices.choose(r).unwrap().clone();
                let im = if complex && r.gen_bool(0.3) {
                    choices.choose(r).unwrap().clone()
                } else {
                    rat(0, 1)
                };
                GaussRational::new(re, im)
            })
            .collect(),
    )
}

pub fn coefficient(r: &mut impl Rng, s: &Shape) -> ExpScalar {
    let c = ExpScalar::from_gauss(nonzero_gauss(r, s.height));
    if s.formal_scalars && r.gen_bool(0.25) {
        &c + &ExpScalar::term(nonzero_gauss(r, s.height), GaussRational::real(nonzero_rational(r, 3)))
    } else {
        c
    }
}

pub fn exppoly(r: &mut impl Rng, s: &Shape) -> ExpPoly {
    let nf = r.gen_range(1..=s.max_frequencies);
    let mut freqs = vec![Frequency::zero(s.d)];
    while freqs.len() < nf {
        freqs.push(frequency(r, s.d, s.complex_frequencies, s.frequency_pool));
    }
    let mut p = ExpPoly::zero(s.d);
    for _ in 0..r.gen_range(1..=s.max_terms) {
        let l = freqs.choose(r).unwrap().clone();
        p.add_term(l, monomial(r, s.d, s.max_degree), coefficient(r, s));
    }
    p
}

/// Polynomial of exact total degree `k`.
pub fn polynomial_of_degree(r: &mut impl Rng, d: usize, k: u32, height: i64) -> ExpPoly {
    let shape = Shape::polynomial(d, k);
    loop {
        let mut p = exppoly(r, &shape);
        let mut lead = vec![0u32; d];
        for _ in 0..k {
            lead[r.gen_range(0..d)] += 1;
        }
        p.add_term(Frequency::zero(d), MultiIndex::new(lead), ExpScalar::from_gauss(nonzero_gauss(r, height)));
        if p.total_degree() == Some(k) {
            return p;
        }
    }
}

/// Spec with all `b_i`, `c_i`, and `b_i⁻¹c_i − b_j⁻¹c_j` invertible; with
/// `integer` the matrices have integer entries.
pub fn general_spec(r: &mut impl Rng, d: usize, m: usize, height: i64, integer: bool) -> EquationSpec {
    let draw = |r: &mut _| {
        if integer {
            invertible_integer_matrix(r, d, height)
        } else {
            invertible_matrix(r, d, height)
        }
    };
    loop {
        let pairs = (0..m)
            .map(|_| lcw::equation::CoefficientPair {
                b: draw(r),
                c: draw(r),
            })
            .collect();
        let spec = EquationSpec::new(d, pairs).unwrap();
        if lcw::equation::validate_conditions(&spec, lcw::equation::TheoremProfile::Thm21).pass {
            return spec;
        }
    }
}

/// Spec with `b_i = I` and all `c_i`, `c_i − c_j` invertible.
pub fn normalized_spec(r: &mut impl Rng, d: usize, m: usize, height: i64) -> EquationSpec {
    loop {
        let cs = (0..m).map(|_| invertible_matrix(r, d, height)).collect();
        let spec = EquationSpec::normalized(d, cs).unwrap();
        if lcw::equation::validate_conditions(&spec, lcw::equation::TheoremProfile::Thm22).pass {
            return spec;
        }
    }
}

pub fn solution(r: &mut impl Rng, m: usize, s: &Shape) -> SolutionTuple {
    SolutionTuple::new((0..m).map(|_| exppoly(r, s)).collect())
}

/// Rank of the x-atom × y-atom coefficient matrix, for plain coefficients.
pub fn plain_coefficient_rank(f: &BivariatePoly) -> Option<usize> {
    let mut rows = Vec::new();
    let mut cols = Vec::new();
    let mut entries = Vec::new();
    for (xa, ya, c) in f.atoms() {
        let ri = rows.iter().position(|a| *a == xa).unwrap_or_else(|| {
            rows.push(xa.clone());
            rows.len() - 1
        });
        let ci = cols.iter().position(|a| *a == ya).unwrap_or_else(|| {
            cols.push(ya.clone());
            cols.len() - 1
        });
        entries.push((ri, ci, c.as_gauss()?));
    }
    let mut m = vec![vec![GaussRational::zero(); cols.len()]; rows.len()];
    for (i, j, v) in entries {
        m[i][j] = v;
    }
    Some(mat_rank(&m))
}
