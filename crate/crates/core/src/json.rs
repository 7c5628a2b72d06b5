//! JSON documents: equation specs, solution tuples and the term-map form of
//! exponential polynomials.
//!
//! Rationals are strings `"p/q"` (or plain integers on input); Gaussian
//! rationals are `{"re": "p/q", "im": "p/q"}`; matrices are row-major
//! nested arrays.

use serde::{Deserialize, Serialize};

use crate::dsl::parse_exppoly;
use crate::equation::{CoefficientPair, EquationSpec, SolutionTuple, TheoremProfile};
use crate::error::{Error, Result};
use crate::exppoly::{ExpPoly, ExpScalar, Frequency, MultiIndex};
use crate::linalg::{parse_rational, GaussRational, RatMatrix, RatVector, Rational};

/// A rational on input: `"p/q"` or an integer.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum RationalDoc {
    Int(i64),
    Text(String),
}

impl RationalDoc {
    pub fn to_rational(&self) -> Result<Rational> {
        match self {
            Self::Int(n) => Ok(Rational::from_integer((*n).into())),
            Self::Text(s) => parse_rational(s),
        }
    }
}

pub fn rational_doc(r: &Rational) -> RationalDoc {
    RationalDoc::Text(r.to_string())
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GaussDoc {
    pub re: RationalDoc,
    #[serde(default = "zero_doc")]
    pub im: RationalDoc,
}

fn zero_doc() -> RationalDoc {
    RationalDoc::Int(0)
}

impl GaussDoc {
    pub fn from_gauss(g: &GaussRational) -> Self {
        Self {
            re: rational_doc(&g.re),
            im: rational_doc(&g.im),
        }
    }

    pub fn to_gauss(&self) -> Result<GaussRational> {
        Ok(GaussRational::new(self.re.to_rational()?, self.im.to_rational()?))
    }
}

pub type MatrixDoc = Vec<Vec<RationalDoc>>;

pub fn matrix_doc(m: &RatMatrix) -> MatrixDoc {
    m.to_rows()
        .iter()
        .map(|row| row.iter().map(rational_doc).collect())
        .collect()
}

pub fn matrix_from_doc(doc: &MatrixDoc) -> Result<RatMatrix> {
    let rows = doc
        .iter()
        .map(|row| row.iter().map(RationalDoc::to_rational).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    RatMatrix::from_rows(rows)
}

pub fn vector_doc(v: &RatVector) -> Vec<RationalDoc> {
    v.entries().iter().map(rational_doc).collect()
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PairDoc {
    /// Omitted means the identity.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub b: Option<MatrixDoc>,
    pub c: MatrixDoc,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpecDoc {
    pub d: usize,
    pub pairs: Vec<PairDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub profile: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rhs_rank_hint: Option<usize>,
}

impl SpecDoc {
    pub fn from_spec(spec: &EquationSpec, profile: Option<TheoremProfile>) -> Self {
        Self {
            d: spec.d(),
            pairs: spec
                .pairs()
                .iter()
                .map(|p| PairDoc {
                    b: (!p.b.is_identity()).then(|| matrix_doc(&p.b)),
                    c: matrix_doc(&p.c),
                })
                .collect(),
            profile: profile.map(|p| p.to_string()),
            rhs_rank_hint: spec.rhs_rank_hint,
        }
    }

    pub fn to_spec(&self) -> Result<EquationSpec> {
        let pairs = self
            .pairs
            .iter()
            .map(|p| {
                Ok(CoefficientPair {
                    b: match &p.b {
                        Some(b) => matrix_from_doc(b)?,
                        None => RatMatrix::identity(self.d),
                    },
                    c: matrix_from_doc(&p.c)?,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        let mut spec = EquationSpec::new(self.d, pairs)?;
        spec.rhs_rank_hint = self.rhs_rank_hint;
        Ok(spec)
    }

    pub fn profile(&self) -> Result<Option<TheoremProfile>> {
        self.profile.as_deref().map(str::parse).transpose()
    }
}

/// One term `c·e^{w}` of a formal scalar.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ScalarTermDoc {
    pub c: GaussDoc,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub w: Option<GaussDoc>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TermDoc {
    pub frequency: Vec<GaussDoc>,
    pub monomial: Vec<u32>,
    pub coefficient: Vec<ScalarTermDoc>,
}

/// Term-map form of an exponential polynomial.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TermMapDoc {
    pub dim: usize,
    pub terms: Vec<TermDoc>,
}

impl TermMapDoc {
    pub fn from_poly(p: &ExpPoly) -> Self {
        Self {
            dim: p.dim(),
            terms: p
                .atoms()
                .map(|(l, a, c)| TermDoc {
                    frequency: l.components().iter().map(GaussDoc::from_gauss).collect(),
                    monomial: a.exponents().to_vec(),
                    coefficient: c
                        .terms()
                        .map(|(w, c)| ScalarTermDoc {
                            c: GaussDoc::from_gauss(c),
                            w: (!w.is_zero()).then(|| GaussDoc::from_gauss(w)),
                        })
                        .collect(),
                })
                .collect(),
        }
    }

    pub fn to_poly(&self) -> Result<ExpPoly> {
        let mut p = ExpPoly::zero(self.dim);
        for t in &self.terms {
            if t.frequency.len() != self.dim || t.monomial.len() != self.dim {
                return Err(Error::DimensionMismatch {
                    expected: self.dim,
                    found: if t.monomial.len() != self.dim { t.monomial.len() } else { t.frequency.len() },
                });
            }
            let lambda = Frequency(t.frequency.iter().map(GaussDoc::to_gauss).collect::<Result<_>>()?);
            let mut c = ExpScalar::zero();
            for s in &t.coefficient {
                let w = s.w.as_ref().map(GaussDoc::to_gauss).transpose()?.unwrap_or_else(GaussRational::zero);
                c = &c + &ExpScalar::term(s.c.to_gauss()?, w);
            }
            p.add_term(lambda, MultiIndex::new(t.monomial.clone()), c);
        }
        Ok(p)
    }
}

/// A function given as DSL text or a term map.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum PolyDoc {
    Dsl(String),
    Terms(TermMapDoc),
}

impl PolyDoc {
    pub fn to_poly(&self, dim: Option<usize>) -> Result<ExpPoly> {
        match self {
            Self::Dsl(s) => parse_exppoly(s, dim),
            Self::Terms(t) => t.to_poly(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SolutionDoc {
    pub f: Vec<PolyDoc>,
    /// Optional basis of `W`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub w: Option<Vec<PolyDoc>>,
}

impl SolutionDoc {
    pub fn from_solution(sol: &SolutionTuple) -> Self {
        Self {
            f: sol.f.iter().map(|f| PolyDoc::Dsl(f.to_string())).collect(),
            w: None,
        }
    }

    pub fn to_solution(&self, d: usize) -> Result<SolutionTuple> {
        let f = self.f.iter().map(|p| p.to_poly(Some(d))).collect::<Result<Vec<_>>>()?;
        Ok(SolutionTuple::new(f))
    }

    pub fn w_basis(&self, d: usize) -> Result<Option<Vec<ExpPoly>>> {
        self.w
            .as_ref()
            .map(|w| w.iter().map(|p| p.to_poly(Some(d))).collect())
            .transpose()
    }
}

/// `R(y)` generators at one sample point.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RemainderSampleDoc {
    pub y: Vec<RationalDoc>,
    pub r: Vec<PolyDoc>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RemainderDoc {
    pub samples: Vec<RemainderSampleDoc>,
}

impl RemainderDoc {
    pub fn to_samples(&self, d: usize) -> Result<Vec<(RatVector, Vec<ExpPoly>)>> {
        self.samples
            .iter()
            .map(|s| {
                let y = RatVector::new(s.y.iter().map(RationalDoc::to_rational).collect::<Result<_>>()?);
                let r = s.r.iter().map(|p| p.to_poly(Some(d))).collect::<Result<_>>()?;
                Ok((y, r))
            })
            .collect()
    }
}

pub fn from_json_str<T: for<'de> Deserialize<'de>>(text: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::InvalidInput(format!("json: {e}")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dsl::parse_exppoly;
    use crate::linalg::rat;

    #[test]
    fn spec_document_defaults_b_to_identity() {
        let doc: SpecDoc = from_json_str(r#"{"d": 1, "pairs": [{"c": [[1]]}, {"c": [["2"]]}], "profile": "thm2.2"}"#).unwrap();
        let spec = doc.to_spec().unwrap();
        assert!(spec.is_normalized());
        assert_eq!(spec.pairs()[1].c, RatMatrix::scalar(rat(2, 1)));
        assert_eq!(doc.profile().unwrap(), Some(TheoremProfile::Thm22));
        let back = SpecDoc::from_spec(&spec, Some(TheoremProfile::Thm22));
        assert_eq!(back.to_spec().unwrap(), spec);
    }

    #[test]
    fn rejects_malformed_documents() {
        assert!(from_json_str::<SpecDoc>(r#"{"d": 1, "pairs": [{"c": [["1/0"]]}]}"#).unwrap().to_spec().is_err());
        assert!(from_json_str::<SpecDoc>(r#"{"d": 2, "pairs": [{"c": [[1]]}]}"#).unwrap().to_spec().is_err());
        assert!(from_json_str::<SpecDoc>(r#"{"d": 1}"#).is_err());
        assert!(from_json_str::<SpecDoc>(r#"{"d": 1, "pairs": [], "extra": 1}"#).is_err());
    }

    #[test]
    fn term_map_round_trip() {
        let f = parse_exppoly("E(1/2)*x1*exp(x1 - i*x2) + (3 + E(-1))*x2^2 - 1/3", None).unwrap();
        let doc = TermMapDoc::from_poly(&f);
        let text = serde_json::to_string(&doc).unwrap();
        let back: PolyDoc = from_json_str(&text).unwrap();
        assert_eq!(back.to_poly(None).unwrap(), f);
    }

    #[test]
    fn solution_document() {
        let doc: SolutionDoc = from_json_str(r#"{"f": ["x1^2", "exp(x1)"], "w": ["1"]}"#).unwrap();
        let sol = doc.to_solution(1).unwrap();
        assert_eq!(sol.f[0], ExpPoly::monomial(&[2]));
        assert_eq!(doc.w_basis(1).unwrap().unwrap(), vec![ExpPoly::one(1)]);
    }
}
