//! Bivariate expansion of `Σ f_i(b_i x + c_i y)`, minimal separated forms
//! `Σ u_k(y) v_k(x)` and exact membership of the left side in `W`.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::equation::{EquationSpec, SolutionTuple, SubspaceW};
use crate::error::{Error, Result};
use crate::exppoly::{
    common_denominator, independent_subset, membership, memberships, span_rank, translates_closure, ExpPoly, ExpScalar, Frequency,
    Membership, MultiIndex,
};
use crate::linalg::RatVector;

/// Atom `x^α e^{⟨λ,x⟩}` (or the same shape in `y`).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Atom {
    pub frequency: Frequency,
    pub monomial: MultiIndex,
}

impl Atom {
    pub fn to_poly(&self) -> ExpPoly {
        ExpPoly::term(self.monomial.dim(), ExpScalar::one(), self.monomial.clone(), self.frequency.clone())
    }

    pub fn is_constant(&self) -> bool {
        self.frequency.is_zero() && self.monomial.is_zero()
    }

    pub fn display_with_var(&self, var: &str) -> String {
        self.to_poly().to_string_with_var(var)
    }
}

/// A function of `(x, y) ∈ ℝ^d × ℝ^d`, stored as an exponential polynomial
/// on `ℝ^{2d}` whose first `d` coordinates are `x`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BivariatePoly {
    d: usize,
    poly: ExpPoly,
}

impl BivariatePoly {
    pub fn new(d: usize, poly: ExpPoly) -> Result<Self> {
        if poly.dim() != 2 * d {
            return Err(Error::DimensionMismatch {
                expected: 2 * d,
                found: poly.dim(),
            });
        }
        Ok(Self { d, poly })
    }

    pub fn zero(d: usize) -> Self {
        Self {
            d,
            poly: ExpPoly::zero(2 * d),
        }
    }

    /// `v(x)` viewed as a function of `(x, y)`.
    pub fn from_x(v: &ExpPoly) -> Self {
        Self {
            d: v.dim(),
            poly: v.embed(2 * v.dim(), 0),
        }
    }

    /// `u(y)` viewed as a function of `(x, y)`.
    pub fn from_y(u: &ExpPoly) -> Self {
        Self {
            d: u.dim(),
            poly: u.embed(2 * u.dim(), u.dim()),
        }
    }

    /// `u(y)·v(x)`.
    pub fn product(u: &ExpPoly, v: &ExpPoly) -> Self {
        let bx = Self::from_x(v);
        let by = Self::from_y(u);
        Self {
            d: bx.d,
            poly: &bx.poly * &by.poly,
        }
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn as_poly(&self) -> &ExpPoly {
        &self.poly
    }

    pub fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }

    /// `(x-atom, y-atom, coefficient)` triples.
    pub fn atoms(&self) -> impl Iterator<Item = (Atom, Atom, &ExpScalar)> + '_ {
        self.poly.atoms().map(move |(l, a, c)| {
            let (lx, ly) = l.split_at(self.d);
            let (ax, ay) = a.split_at(self.d);
            (
                Atom {
                    frequency: lx,
                    monomial: ax,
                },
                Atom {
                    frequency: ly,
                    monomial: ay,
                },
                c,
            )
        })
    }

    /// Coefficient function of each `y`-atom: `F = Σ_atoms atom(y)·X(x)`.
    pub fn x_parts_by_y_atom(&self) -> BTreeMap<Atom, ExpPoly> {
        let mut out: BTreeMap<Atom, ExpPoly> = BTreeMap::new();
        for (xa, ya, c) in self.atoms() {
            out.entry(ya)
                .or_insert_with(|| ExpPoly::zero(self.d))
                .add_term(xa.frequency, xa.monomial, c.clone());
        }
        out
    }

    /// Exact restriction to a rational `y`.
    pub fn specialize_y(&self, y: &RatVector) -> Result<ExpPoly> {
        if y.len() != self.d {
            return Err(Error::DimensionMismatch {
                expected: self.d,
                found: y.len(),
            });
        }
        let mut out = ExpPoly::zero(self.d);
        for (ya, xpart) in self.x_parts_by_y_atom() {
            let value = ya.to_poly().evaluate_exact(y)?;
            out = &out + &xpart.scale(&value);
        }
        Ok(out)
    }

    /// Swaps the roles of `x` and `y`.
    pub fn transpose(&self) -> Self {
        let mut out = ExpPoly::zero(2 * self.d);
        for (xa, ya, c) in self.atoms() {
            out.add_term(
                ya.frequency.concat(&xa.frequency),
                ya.monomial.concat(&xa.monomial),
                c.clone(),
            );
        }
        Self { d: self.d, poly: out }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        Ok(Self {
            d: self.d,
            poly: self.poly.try_add(&other.poly)?,
        })
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        Ok(Self {
            d: self.d,
            poly: self.poly.try_sub(&other.poly)?,
        })
    }
}

impl fmt::Display for BivariatePoly {
    /// Variables print as `x1..xd` and `y1..yd`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let d = self.d;
        let name = move |j: usize| {
            if j < d {
                format!("x{}", j + 1)
            } else {
                format!("y{}", j - d + 1)
            }
        };
        f.write_str(&self.poly.to_string_with_names(&name))
    }
}

/// Expands `Σ f_i(b_i x + c_i y)` by substituting `z = [b_i | c_i](x, y)`.
pub fn bivariate_expand(spec: &EquationSpec, sol: &SolutionTuple) -> Result<BivariatePoly> {
    sol.check_against(spec)?;
    let d = spec.d();
    let mut total = ExpPoly::zero(2 * d);
    for (p, f) in spec.pairs().iter().zip(&sol.f) {
        let l = p.b.hstack(&p.c)?;
        total = &total + &f.compose_linear(&l)?;
    }
    BivariatePoly::new(d, total)
}

/// `D·F(x, y) = Σ_{k=1}^n u_k(y) v_k(x)` with `n` equal to the rank over
/// `ℂ` of the atom coefficient matrix and `D` a nonzero constant.
///
/// `D` is 1 unless the coefficients involve formal exponentials whose
/// elimination needs a non-unit pivot; then `u_k / D` are the true
/// coefficient functions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeparatedForm {
    d: usize,
    /// `(u_k, v_k)`.
    pub pairs: Vec<(ExpPoly, ExpPoly)>,
    pub denominator: ExpScalar,
}

impl SeparatedForm {
    pub fn n(&self) -> usize {
        self.pairs.len()
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn us(&self) -> Vec<ExpPoly> {
        self.pairs.iter().map(|(u, _)| u.clone()).collect()
    }

    pub fn vs(&self) -> Vec<ExpPoly> {
        self.pairs.iter().map(|(_, v)| v.clone()).collect()
    }

    /// `Σ u_k(y) v_k(x)`, re-expanded; equals `D·F`.
    pub fn reconstruct(&self) -> BivariatePoly {
        self.pairs.iter().fold(BivariatePoly::zero(self.d), |acc, (u, v)| {
            acc.try_add(&BivariatePoly::product(u, v)).expect("same dimension")
        })
    }

    /// Whether `Σ u_k(y) v_k(x)` reproduces `f` (after the denominator).
    pub fn reconstructs(&self, f: &BivariatePoly) -> bool {
        self.reconstruct().poly == f.poly.scale(&self.denominator)
    }

    /// `W = span{v_k}`.
    pub fn v_space(&self) -> SubspaceW {
        SubspaceW::new(self.d, self.vs()).expect("v_k are independent")
    }
}

/// Rank over `ℂ` of the coefficient matrix of `F`.
pub fn coefficient_rank(f: &BivariatePoly) -> usize {
    let parts: Vec<ExpPoly> = f.x_parts_by_y_atom().into_values().collect();
    span_rank(&parts)
}

/// Minimal separated form of `F`.
///
/// Writing `F = Σ_j a_j(y) X_j(x)` over its `y`-atoms `a_j`, the `v_k` are a
/// maximal independent subfamily of the `X_j` (greedy in atom order) and
/// `u_k` collects the coordinates of every `X_j` in that basis.
pub fn separate_minimal(f: &BivariatePoly) -> SeparatedForm {
    let d = f.d();
    let (atoms, parts): (Vec<Atom>, Vec<ExpPoly>) = f.x_parts_by_y_atom().into_iter().unzip();
    let vs: Vec<ExpPoly> = independent_subset(&parts).into_iter().map(|j| parts[j].clone()).collect();
    let n = vs.len();

    let mut fractions = Vec::with_capacity(parts.len() * n);
    for m in memberships(&parts, &vs) {
        match m {
            Membership::Inside {
                denominator,
                coefficients,
            } => fractions.extend(coefficients.into_iter().map(|c| (c, denominator.clone()))),
            Membership::Outside { .. } => unreachable!("v_k span every x-part"),
        }
    }
    let (denominator, numerators) = common_denominator(&fractions);

    let mut us = vec![ExpPoly::zero(d); n];
    for (j, atom) in atoms.iter().enumerate() {
        let a = atom.to_poly();
        for (k, u) in us.iter_mut().enumerate() {
            let c = &numerators[j * n + k];
            if !c.is_zero() {
                *u = &*u + &a.scale(c);
            }
        }
    }
    let sep = SeparatedForm {
        d,
        pairs: us.into_iter().zip(vs).collect(),
        denominator,
    };
    assert!(sep.reconstructs(f), "separated form must reconstruct exactly");
    sep
}

/// Failure witness: the `y`-atom whose `x`-coefficient leaves `W`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MembershipFailure {
    pub y_atom: Atom,
    pub x_part: ExpPoly,
    /// `x_part` reduced modulo `W` (nonzero).
    pub residual: ExpPoly,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MembershipVerdict {
    pub pass: bool,
    pub checked_atoms: usize,
    pub failure: Option<MembershipFailure>,
}

/// Decides `Σ_i f_i(b_i x + c_i y) ∈ W` for all `y`.
///
/// The left side is `Σ_j a_j(y) X_j(x)` over linearly independent
/// `y`-atoms `a_j`, so it lies in `W` for every `y` exactly when each
/// `X_j` does; the check is symbolic, with no sampling.
pub fn verify_membership(spec: &EquationSpec, sol: &SolutionTuple, w: &SubspaceW) -> Result<MembershipVerdict> {
    if w.d() != spec.d() {
        return Err(Error::DimensionMismatch {
            expected: spec.d(),
            found: w.d(),
        });
    }
    let f = bivariate_expand(spec, sol)?;
    Ok(membership_of(&f, w.basis()))
}

pub(crate) fn membership_of(f: &BivariatePoly, basis: &[ExpPoly]) -> MembershipVerdict {
    let (atoms, parts): (Vec<Atom>, Vec<ExpPoly>) = f.x_parts_by_y_atom().into_iter().unzip();
    let checked_atoms = parts.len();
    let verdicts = memberships(&parts, basis);
    for ((y_atom, x_part), m) in atoms.into_iter().zip(parts).zip(verdicts) {
        if let Membership::Outside { remainder } = m {
            return MembershipVerdict {
                pass: false,
                checked_atoms,
                failure: Some(MembershipFailure {
                    y_atom,
                    x_part,
                    residual: remainder,
                }),
            };
        }
    }
    MembershipVerdict {
        pass: true,
        checked_atoms,
        failure: None,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SampleVerdict {
    pub y: String,
    pub pass: bool,
    /// Left side at this `y`, reduced modulo `W + R(y)`, when outside.
    pub residual: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RemainderVerdict {
    pub pass: bool,
    pub samples: Vec<SampleVerdict>,
}

/// Checks `Σ τ_{c_i y} f_i ∈ W + R(y)` at the supplied sample points,
/// after confirming each `span R(y)` is closed under translation.
///
/// `R(y)` has no global structure, so this is a check at finitely many
/// points only. Remainders are not carried through reduction steps.
pub fn verify_with_remainder(
    spec: &EquationSpec,
    sol: &SolutionTuple,
    w: &SubspaceW,
    remainders: &[(RatVector, Vec<ExpPoly>)],
) -> Result<RemainderVerdict> {
    let f = bivariate_expand(spec, sol)?;
    let mut samples = Vec::with_capacity(remainders.len());
    for (k, (y, gens)) in remainders.iter().enumerate() {
        if let Some(bad) = gens.iter().find(|g| g.dim() != spec.d()) {
            return Err(Error::DimensionMismatch {
                expected: spec.d(),
                found: bad.dim(),
            });
        }
        for g in gens {
            if translates_closure(g).iter().any(|t| !membership(t, gens).is_inside()) {
                return Err(Error::NotTranslationInvariant { sample: k });
            }
        }
        let lhs = f.specialize_y(y)?;
        let basis: Vec<ExpPoly> = w.basis().iter().chain(gens).cloned().collect();
        let (pass, residual) = match membership(&lhs, &basis) {
            Membership::Inside { .. } => (true, None),
            Membership::Outside { remainder } => (false, Some(remainder.to_string())),
        };
        samples.push(SampleVerdict {
            y: y.to_string(),
            pass,
            residual,
        });
    }
    Ok(RemainderVerdict {
        pass: samples.iter().all(|s| s.pass),
        samples,
    })
}
