//! Equation instances `Σ f_i(b_i x + c_i y) = Σ u_k(y) v_k(x)`, hypothesis
//! validation and the reduction to `b_i = I`.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exppoly::{independent_subset, ExpPoly};
use crate::linalg::RatMatrix;

/// One summand's coefficient matrices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoefficientPair {
    pub b: RatMatrix,
    pub c: RatMatrix,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EquationSpec {
    d: usize,
    pairs: Vec<CoefficientPair>,
    /// Advisory only; separation computes the true minimal rank.
    pub rhs_rank_hint: Option<usize>,
}

impl EquationSpec {
    pub fn new(d: usize, pairs: Vec<CoefficientPair>) -> Result<Self> {
        if d == 0 {
            return Err(Error::InvalidInput("dimension must be positive".into()));
        }
        if pairs.is_empty() {
            return Err(Error::InvalidInput("an equation needs at least one summand".into()));
        }
        for p in &pairs {
            for m in [&p.b, &p.c] {
                if m.rows() != d || m.cols() != d {
                    return Err(Error::DimensionMismatch {
                        expected: d,
                        found: if m.rows() != d { m.rows() } else { m.cols() },
                    });
                }
            }
        }
        Ok(Self {
            d,
            pairs,
            rhs_rank_hint: None,
        })
    }

    /// `Σ f_i(x + c_i y)`.
    pub fn normalized(d: usize, cs: Vec<RatMatrix>) -> Result<Self> {
        Self::new(
            d,
            cs.into_iter()
                .map(|c| CoefficientPair {
                    b: RatMatrix::identity(d),
                    c,
                })
                .collect(),
        )
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn m(&self) -> usize {
        self.pairs.len()
    }

    pub fn pairs(&self) -> &[CoefficientPair] {
        &self.pairs
    }

    pub fn is_normalized(&self) -> bool {
        self.pairs.iter().all(|p| p.b.is_identity())
    }

    pub fn cs(&self) -> impl Iterator<Item = &RatMatrix> {
        self.pairs.iter().map(|p| &p.c)
    }
}

/// The unknowns `(f_1, …, f_m)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolutionTuple {
    pub f: Vec<ExpPoly>,
}

impl SolutionTuple {
    pub fn new(f: Vec<ExpPoly>) -> Self {
        Self { f }
    }

    pub fn check_against(&self, spec: &EquationSpec) -> Result<()> {
        if self.f.len() != spec.m() {
            return Err(Error::DimensionMismatch {
                expected: spec.m(),
                found: self.f.len(),
            });
        }
        if let Some(bad) = self.f.iter().find(|f| f.dim() != spec.d()) {
            return Err(Error::DimensionMismatch {
                expected: spec.d(),
                found: bad.dim(),
            });
        }
        Ok(())
    }
}

/// Finite-dimensional space `W = span{v_k}` with a linearly independent
/// basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubspaceW {
    d: usize,
    basis: Vec<ExpPoly>,
}

impl SubspaceW {
    /// Rejects dependent or mis-dimensioned bases.
    pub fn new(d: usize, basis: Vec<ExpPoly>) -> Result<Self> {
        if let Some(bad) = basis.iter().find(|f| f.dim() != d) {
            return Err(Error::DimensionMismatch {
                expected: d,
                found: bad.dim(),
            });
        }
        if independent_subset(&basis).len() != basis.len() {
            return Err(Error::InvalidInput("subspace basis is linearly dependent".into()));
        }
        Ok(Self { d, basis })
    }

    /// Span of arbitrary generators; a basis is extracted greedily.
    pub fn spanned_by(d: usize, generators: Vec<ExpPoly>) -> Result<Self> {
        if let Some(bad) = generators.iter().find(|f| f.dim() != d) {
            return Err(Error::DimensionMismatch {
                expected: d,
                found: bad.dim(),
            });
        }
        let keep = independent_subset(&generators);
        let basis = keep.into_iter().map(|i| generators[i].clone()).collect();
        Ok(Self { d, basis })
    }

    pub fn empty(d: usize) -> Self {
        Self { d, basis: Vec::new() }
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[ExpPoly] {
        &self.basis
    }
}

/// Which theorem's hypothesis list to check.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum TheoremProfile {
    /// Continuous solutions, general `b_i`: `b_i`, `c_i`,
    /// `b_i⁻¹c_i − b_j⁻¹c_j` invertible.
    #[serde(rename = "thm2.1")]
    Thm21,
    /// Normalized form `Σ τ_{c_i y} f_i ∈ W`: `b_i = I`, `c_i` and
    /// `c_i − c_j` invertible.
    #[serde(rename = "thm2.2")]
    Thm22,
    /// Extended right side with translation-invariant remainders; same
    /// matrix list as `Thm21`.
    #[serde(rename = "thm3.2")]
    Thm32,
    /// Distributional version: `b_i, c_i ∈ GL` and `b_i⁻¹c_i − b_j⁻¹c_j`
    /// invertible.
    #[serde(rename = "cor4.3")]
    Cor43,
}

impl TheoremProfile {
    pub const ALL: [TheoremProfile; 4] = [Self::Thm21, Self::Thm22, Self::Thm32, Self::Cor43];
}

impl FromStr for TheoremProfile {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "thm2.1" => Ok(Self::Thm21),
            "thm2.2" => Ok(Self::Thm22),
            "thm3.2" => Ok(Self::Thm32),
            "cor4.3" => Ok(Self::Cor43),
            other => Err(Error::InvalidInput(format!("unknown theorem profile {other:?}"))),
        }
    }
}

impl fmt::Display for TheoremProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Thm21 => "thm2.1",
            Self::Thm22 => "thm2.2",
            Self::Thm32 => "thm3.2",
            Self::Cor43 => "cor4.3",
        })
    }
}

/// Invertibility verdict for an ordered pair `(i, j)`, `i ≠ j` (0-based).
/// `None` when the matrix is undefined because some `b` is singular.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PairVerdict {
    pub i: usize,
    pub j: usize,
    pub invertible: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ProfileVerdict {
    pub profile: TheoremProfile,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HypothesisReport {
    pub b_invertible: Vec<bool>,
    pub c_invertible: Vec<bool>,
    pub b_identity: Vec<bool>,
    /// `b_i⁻¹c_i − b_j⁻¹c_j`.
    pub normalized_differences: Vec<PairVerdict>,
    /// `c_i − c_j`.
    pub differences: Vec<PairVerdict>,
    pub profiles: Vec<ProfileVerdict>,
    pub requested: TheoremProfile,
    pub pass: bool,
}

impl HypothesisReport {
    pub fn profile(&self, p: TheoremProfile) -> &ProfileVerdict {
        self.profiles
            .iter()
            .find(|v| v.profile == p)
            .expect("every profile is evaluated")
    }
}

/// Exact invertibility verdicts for every matrix any theorem profile needs.
pub fn validate_conditions(spec: &EquationSpec, profile: TheoremProfile) -> HypothesisReport {
    let m = spec.m();
    let b_inverse: Vec<Option<RatMatrix>> = spec.pairs().iter().map(|p| p.b.inverse().ok()).collect();
    let b_invertible: Vec<bool> = b_inverse.iter().map(Option::is_some).collect();
    let c_invertible: Vec<bool> = spec.cs().map(RatMatrix::is_invertible).collect();
    let b_identity: Vec<bool> = spec.pairs().iter().map(|p| p.b.is_identity()).collect();
    let normalized: Vec<Option<RatMatrix>> = b_inverse
        .iter()
        .zip(spec.cs())
        .map(|(bi, c)| bi.as_ref().map(|bi| bi.mul(c).expect("square d×d")))
        .collect();

    let mut normalized_differences = Vec::new();
    let mut differences = Vec::new();
    for i in 0..m {
        for j in 0..m {
            if i == j {
                continue;
            }
            let nd = match (&normalized[i], &normalized[j]) {
                (Some(a), Some(b)) => Some(a.try_sub(b).expect("same shape").is_invertible()),
                _ => None,
            };
            normalized_differences.push(PairVerdict { i, j, invertible: nd });
            let diff = spec.pairs()[i].c.try_sub(&spec.pairs()[j].c).expect("same shape");
            differences.push(PairVerdict {
                i,
                j,
                invertible: Some(diff.is_invertible()),
            });
        }
    }

    let all = |v: &[bool]| v.iter().all(|&x| x);
    let all_pairs = |v: &[PairVerdict]| v.iter().all(|p| p.invertible == Some(true));
    let general = all(&b_invertible) && all(&c_invertible) && all_pairs(&normalized_differences);
    let profiles = TheoremProfile::ALL
        .iter()
        .map(|&p| {
            let (pass, note) = match p {
                TheoremProfile::Thm22 => {
                    let normalized = all(&b_identity);
                    let pass = normalized && all(&c_invertible) && all_pairs(&differences);
                    let note = (!normalized).then(|| "stated for b_i = I; normalize the instance first".to_string());
                    (pass, note)
                }
                _ => (general, None),
            };
            ProfileVerdict { profile: p, pass, note }
        })
        .collect::<Vec<_>>();
    let pass = profiles.iter().find(|v| v.profile == profile).is_some_and(|v| v.pass);
    HypothesisReport {
        b_invertible,
        c_invertible,
        b_identity,
        normalized_differences,
        differences,
        profiles,
        requested: profile,
        pass,
    }
}

/// Substitutes `f̃_i(x) = f_i(b_i x)`, giving the instance with `b_i = I` and
/// `c̃_i = b_i⁻¹c_i`. Both instances have the same bivariate left side.
pub fn normalize_b_to_identity(spec: &EquationSpec, sol: &SolutionTuple) -> Result<(EquationSpec, SolutionTuple)> {
    sol.check_against(spec)?;
    let mut pairs = Vec::with_capacity(spec.m());
    let mut f = Vec::with_capacity(spec.m());
    for (p, fi) in spec.pairs().iter().zip(&sol.f) {
        if p.b.is_identity() {
            pairs.push(p.clone());
            f.push(fi.clone());
            continue;
        }
        let b_inv = p.b.inverse()?;
        pairs.push(CoefficientPair {
            b: RatMatrix::identity(spec.d()),
            c: b_inv.mul(&p.c)?,
        });
        f.push(fi.dilate(&p.b)?);
    }
    let mut out = EquationSpec::new(spec.d(), pairs)?;
    out.rhs_rank_hint = spec.rhs_rank_hint;
    Ok((out, SolutionTuple::new(f)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exppoly::ExpScalar;
    use crate::linalg::{rat, GaussRational};

    fn scalar_spec(b: &[i64], c: &[i64]) -> EquationSpec {
        EquationSpec::new(
            1,
            b.iter()
                .zip(c)
                .map(|(&b, &c)| CoefficientPair {
                    b: RatMatrix::scalar(rat(b, 1)),
                    c: RatMatrix::scalar(rat(c, 1)),
                })
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn distinct_scalars_pass() {
        let r = validate_conditions(&scalar_spec(&[1, 1], &[1, 2]), TheoremProfile::Thm21);
        assert!(r.pass);
        assert!(TheoremProfile::ALL.iter().all(|&p| r.profile(p).pass));
    }

    #[test]
    fn equal_scalars_fail() {
        let r = validate_conditions(&scalar_spec(&[1, 1], &[1, 1]), TheoremProfile::Thm22);
        assert!(!r.pass);
        assert_eq!(r.differences[0].invertible, Some(false));
    }

    #[test]
    fn swap_matrix_difference_is_singular() {
        let spec = EquationSpec::normalized(
            2,
            vec![RatMatrix::identity(2), RatMatrix::from_ints(&[&[0, 1], &[1, 0]])],
        )
        .unwrap();
        let r = validate_conditions(&spec, TheoremProfile::Thm22);
        assert!(!r.pass);
        assert!(r.c_invertible.iter().all(|&x| x));
        assert!(r.differences.iter().all(|p| p.invertible == Some(false)));
    }

    #[test]
    fn singular_b_leaves_normalized_difference_undefined() {
        let r = validate_conditions(&scalar_spec(&[0, 1], &[1, 2]), TheoremProfile::Thm21);
        assert!(!r.pass);
        assert_eq!(r.normalized_differences[0].invertible, None);
    }

    #[test]
    fn single_summand_is_plain_levi_civita() {
        let r = validate_conditions(&scalar_spec(&[1], &[3]), TheoremProfile::Thm22);
        assert!(r.pass);
        assert!(r.differences.is_empty());
    }

    #[test]
    fn normalization_example() {
        let spec = scalar_spec(&[2], &[6]);
        let sol = SolutionTuple::new(vec![ExpPoly::var(1, 0)]);
        let (ns, nsol) = normalize_b_to_identity(&spec, &sol).unwrap();
        assert_eq!(ns.pairs()[0].c, RatMatrix::scalar(rat(3, 1)));
        assert!(ns.is_normalized());
        assert_eq!(nsol.f[0], ExpPoly::var(1, 0).scale(&ExpScalar::from_gauss(GaussRational::from_int(2))));
    }

    #[test]
    fn normalization_of_singular_b_fails() {
        let spec = scalar_spec(&[0], &[6]);
        let sol = SolutionTuple::new(vec![ExpPoly::var(1, 0)]);
        assert_eq!(normalize_b_to_identity(&spec, &sol), Err(Error::SingularMatrix));
    }

    #[test]
    fn dependent_subspace_rejected() {
        let x = ExpPoly::var(1, 0);
        assert!(SubspaceW::new(1, vec![x.clone(), x.scale_gauss(&GaussRational::from_int(2))]).is_err());
        assert_eq!(SubspaceW::spanned_by(1, vec![x.clone(), x]).unwrap().dim(), 1);
    }
}
