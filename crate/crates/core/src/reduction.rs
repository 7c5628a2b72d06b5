//! Elimination of one summand: substitute `y ↦ y − c_p⁻¹h`, translate by
//! `h` and subtract, leaving `Σ_{i≠p} g_i(x + c_i y) ∈ τ_h(W) + W` with
//! `g_i = Δ_{d_i h} f_i` and `d_i = I − c_i c_p⁻¹`.

use crate::equation::{EquationSpec, SolutionTuple, SubspaceW};
use crate::error::{Error, Result};
use crate::exppoly::{translates_closure, ExpPoly};
use crate::linalg::{RatMatrix, RatVector};
use crate::separation::{verify_membership, BivariatePoly};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionStep {
    pub h: RatVector,
    /// Index (0-based) of the eliminated summand in the input instance.
    pub eliminated_index: usize,
    /// `d_i` for the surviving summands, in order.
    pub d: Vec<RatMatrix>,
    pub w_out: SubspaceW,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReducedInstance {
    pub spec: EquationSpec,
    pub sol: SolutionTuple,
    pub w: SubspaceW,
}

impl ReducedInstance {
    /// Largest total degree among the `f_i`, `None` when all vanish or some
    /// `f_i` is not a polynomial.
    pub fn max_degree(&self) -> Option<u32> {
        max_poly_degree(&self.sol)
    }
}

pub fn max_poly_degree(sol: &SolutionTuple) -> Option<u32> {
    if !sol.f.iter().all(ExpPoly::is_polynomial) {
        return None;
    }
    sol.f.iter().filter_map(ExpPoly::total_degree).max()
}

/// Basis of `τ_h(W) + W`.
pub fn translated_sum(w: &SubspaceW, h: &RatVector) -> Result<SubspaceW> {
    let mut gens = w
        .basis()
        .iter()
        .map(|v| v.translate(h))
        .collect::<Result<Vec<_>>>()?;
    gens.extend(w.basis().iter().cloned());
    SubspaceW::spanned_by(w.d(), gens)
}

/// One elimination step with the given pivot (0-based).
pub fn reduce_once(
    spec: &EquationSpec,
    sol: &SolutionTuple,
    w: &SubspaceW,
    h: &RatVector,
    pivot: usize,
) -> Result<(ReducedInstance, ReductionStep)> {
    let d = spec.d();
    if h.len() != d {
        return Err(Error::DimensionMismatch { expected: d, found: h.len() });
    }
    if pivot >= spec.m() {
        return Err(Error::InvalidInput(format!(
            "pivot {pivot} out of range for {} summands",
            spec.m()
        )));
    }
    if spec.m() < 2 {
        return Err(Error::InvalidInput("nothing to eliminate from a single summand".into()));
    }
    if !spec.is_normalized() {
        return Err(Error::InvalidInput("reduction needs b_i = I; normalize the instance first".into()));
    }
    let cp_inv = spec.pairs()[pivot].c.inverse()?;

    let mut ds = Vec::with_capacity(spec.m() - 1);
    let mut pairs = Vec::with_capacity(spec.m() - 1);
    let mut g = Vec::with_capacity(spec.m() - 1);
    for (i, (p, f)) in spec.pairs().iter().zip(&sol.f).enumerate() {
        if i == pivot {
            continue;
        }
        let di = RatMatrix::identity(d).try_sub(&p.c.mul(&cp_inv)?)?;
        if !di.is_invertible() {
            return Err(Error::HypothesisViolation { pivot, index: i });
        }
        g.push(f.difference(&di.mul_vec(h)?, 1)?);
        ds.push(di);
        pairs.push(p.clone());
    }

    let verdict = verify_membership(spec, sol, w)?;
    if let Some(fail) = verdict.failure {
        return Err(Error::MembershipPrecondition(format!(
            "coefficient of {} is {}, outside W",
            fail.y_atom.display_with_var("y"),
            fail.x_part
        )));
    }

    let w_out = translated_sum(w, h)?;
    let reduced = ReducedInstance {
        spec: EquationSpec::new(d, pairs)?,
        sol: SolutionTuple::new(g),
        w: w_out.clone(),
    };
    assert!(
        verify_membership(&reduced.spec, &reduced.sol, &reduced.w)?.pass,
        "reduced instance must stay inside the enlarged subspace"
    );
    let step = ReductionStep {
        h: h.clone(),
        eliminated_index: pivot,
        d: ds,
        w_out,
    };
    Ok((reduced, step))
}

/// `h_j = e_{j mod d}`.
pub fn default_schedule(d: usize, m: usize) -> Vec<RatVector> {
    (0..m.saturating_sub(1)).map(|j| RatVector::unit(d, j % d)).collect()
}

/// Chains [`reduce_once`] (always eliminating summand 0) down to a single
/// summand. Returns the intermediate instances with their steps.
pub fn full_reduction(
    spec: &EquationSpec,
    sol: &SolutionTuple,
    w: &SubspaceW,
    h_schedule: &[RatVector],
) -> Result<Vec<(ReducedInstance, ReductionStep)>> {
    if h_schedule.len() != spec.m() - 1 {
        return Err(Error::InvalidInput(format!(
            "schedule has {} shifts, expected {}",
            h_schedule.len(),
            spec.m() - 1
        )));
    }
    let mut chain: Vec<(ReducedInstance, ReductionStep)> = Vec::with_capacity(h_schedule.len());
    for h in h_schedule {
        let (s, f, w) = match chain.last() {
            Some((r, _)) => (&r.spec, &r.sol, &r.w),
            None => (spec, sol, w),
        };
        let next = reduce_once(s, f, w, h, 0)?;
        chain.push(next);
    }
    Ok(chain)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FolfactVerdict {
    pub pass: bool,
    pub left: BivariatePoly,
    pub right: BivariatePoly,
}

/// Checks `Δ_{(h,k)}(f(x + cy)) = (Δ_{h+ck} f)(x + cy)` structurally.
pub fn folfact_check(f: &ExpPoly, c: &RatMatrix, h: &RatVector, k: &RatVector) -> Result<FolfactVerdict> {
    let d = f.dim();
    for n in [c.rows(), c.cols(), h.len(), k.len()] {
        if n != d {
            return Err(Error::DimensionMismatch { expected: d, found: n });
        }
    }
    let l = RatMatrix::identity(d).hstack(c)?;
    let composed = f.compose_linear(&l)?;
    let left = composed.difference(&h.concat(k), 1)?;
    let shift = h + &c.mul_vec(k)?;
    let right = f.difference(&shift, 1)?.compose_linear(&l)?;
    Ok(FolfactVerdict {
        pass: left == right,
        left: BivariatePoly::new(d, left)?,
        right: BivariatePoly::new(d, right)?,
    })
}

/// Smallest translation-invariant space containing `f`: the minimal `W`
/// for `f(x + y) = Σ u_k(y) v_k(x)`.
pub fn levi_civita_closure(f: &ExpPoly) -> (usize, Vec<ExpPoly>) {
    let basis = translates_closure(f);
    (basis.len(), basis)
}
