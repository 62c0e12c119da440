//! Serde representations of the file formats.
//!
//! Integers are written as decimal strings; on input plain JSON integers are
//! accepted as well. Conversion errors name the offending field.
//!
//! | type | shape |
//! |------|-------|
//! | ring element | `{"degree": n, "coeffs": ["17", "-12"]}` |
//! | group hom | `{"degree": n, "matrix": [["1", "0"], ["0", "0"]]}` |
//! | integer matrix | `{"matrix": [["0", "2"], ["1", "0"]]}` |
//! | module matrix | `{"degree": n, "entries": [[["0", "1"]]]}` |
//! | sequence | `{"degree": n, "terms": [["1", "0"], ["0", "1"]]}` |
//! | witness instance | `{"degree": n, "stages": [{"row", "col", "diagonal", "priors"}], "targets": ["1"]}` |

use std::str::FromStr;

use num_bigint::BigInt;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::homcalc::{GroupHom, Stage, WitnessInstance};
use crate::matrix::IntMatrix;
use crate::ring::{RationalBound, RingElem, RingParams};
use crate::seqgroup::FinSeq;
use crate::snf::ModuleMatrix;

/// Arbitrary-precision integer, serialized as a decimal string.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntText(pub BigInt);

impl Serialize for IntText {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.0.to_string())
    }
}

impl<'de> Deserialize<'de> for IntText {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Text(String),
            Signed(i64),
            Unsigned(u64),
        }
        match Raw::deserialize(d)? {
            Raw::Text(s) => BigInt::from_str(s.trim())
                .map(IntText)
                .map_err(|_| serde::de::Error::custom(format!("invalid integer `{s}`"))),
            Raw::Signed(v) => Ok(IntText(v.into())),
            Raw::Unsigned(v) => Ok(IntText(v.into())),
        }
    }
}

fn texts(v: &[BigInt]) -> Vec<IntText> {
    v.iter().cloned().map(IntText).collect()
}

fn ints(v: Vec<IntText>) -> Vec<BigInt> {
    v.into_iter().map(|t| t.0).collect()
}

fn at<T>(field: &str, r: Result<T>) -> Result<T> {
    r.map_err(|e| Error::InvalidParameter(format!("{field}: {e}")))
}

fn params(degree: usize) -> Result<RingParams> {
    at("degree", RingParams::new(degree))
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RingElemJson {
    pub degree: usize,
    pub coeffs: Vec<IntText>,
}

impl RingElemJson {
    pub fn from_elem(x: &RingElem) -> Self {
        RingElemJson {
            degree: x.degree(),
            coeffs: texts(x.coeffs()),
        }
    }

    pub fn into_elem(self) -> Result<RingElem> {
        let p = params(self.degree)?;
        at("coeffs", RingElem::new(p, ints(self.coeffs)))
    }
}

fn matrix_from(field: &str, rows: Vec<Vec<IntText>>) -> Result<IntMatrix> {
    at(field, IntMatrix::from_rows(rows.into_iter().map(ints).collect()))
}

fn matrix_text(m: &IntMatrix) -> Vec<Vec<IntText>> {
    m.to_rows().iter().map(|r| texts(r)).collect()
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupHomJson {
    pub degree: usize,
    pub matrix: Vec<Vec<IntText>>,
}

impl GroupHomJson {
    pub fn from_hom(h: &GroupHom) -> Self {
        GroupHomJson {
            degree: h.params().degree(),
            matrix: matrix_text(h.matrix()),
        }
    }

    pub fn into_hom(self) -> Result<GroupHom> {
        let p = params(self.degree)?;
        let m = matrix_from("matrix", self.matrix)?;
        at("matrix", GroupHom::new(p, m))
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct IntMatrixJson {
    pub matrix: Vec<Vec<IntText>>,
}

impl IntMatrixJson {
    pub fn from_matrix(m: &IntMatrix) -> Self {
        IntMatrixJson {
            matrix: matrix_text(m),
        }
    }

    pub fn into_matrix(self) -> Result<IntMatrix> {
        matrix_from("matrix", self.matrix)
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModuleMatrixJson {
    pub degree: usize,
    pub entries: Vec<Vec<Vec<IntText>>>,
}

impl ModuleMatrixJson {
    pub fn from_matrix(m: &ModuleMatrix) -> Self {
        ModuleMatrixJson {
            degree: m.params().degree(),
            entries: m
                .to_rows()
                .iter()
                .map(|r| r.iter().map(|x| texts(x.coeffs())).collect())
                .collect(),
        }
    }

    pub fn into_matrix(self) -> Result<ModuleMatrix> {
        let p = params(self.degree)?;
        let mut rows = Vec::with_capacity(self.entries.len());
        for (i, row) in self.entries.into_iter().enumerate() {
            let mut out = Vec::with_capacity(row.len());
            for (j, c) in row.into_iter().enumerate() {
                out.push(at(&format!("entries[{i}][{j}]"), RingElem::new(p, ints(c)))?);
            }
            rows.push(out);
        }
        at("entries", ModuleMatrix::new(p, rows))
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FinSeqJson {
    pub degree: usize,
    pub terms: Vec<Vec<IntText>>,
}

impl FinSeqJson {
    pub fn from_seq(a: &FinSeq) -> Self {
        FinSeqJson {
            degree: a.params().degree(),
            terms: a.terms().iter().map(|t| texts(t.coeffs())).collect(),
        }
    }

    pub fn into_seq(self) -> Result<FinSeq> {
        let p = params(self.degree)?;
        let terms = self
            .terms
            .into_iter()
            .enumerate()
            .map(|(i, t)| at(&format!("terms[{i}]"), RingElem::new(p, ints(t))))
            .collect::<Result<Vec<_>>>()?;
        FinSeq::new(p, terms)
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StageJson {
    pub row: usize,
    pub col: usize,
    pub diagonal: Vec<Vec<IntText>>,
    #[serde(default)]
    pub priors: Vec<Vec<Vec<IntText>>>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WitnessInstanceJson {
    pub degree: usize,
    pub stages: Vec<StageJson>,
    /// Rationals as `p/q` strings.
    pub targets: Vec<String>,
}

impl WitnessInstanceJson {
    pub fn from_instance(w: &WitnessInstance) -> Self {
        WitnessInstanceJson {
            degree: w.params().degree(),
            stages: w
                .stages()
                .iter()
                .map(|s| StageJson {
                    row: s.row,
                    col: s.col,
                    diagonal: matrix_text(s.diagonal.matrix()),
                    priors: s.priors.iter().map(|h| matrix_text(h.matrix())).collect(),
                })
                .collect(),
            targets: w.targets().iter().map(ToString::to_string).collect(),
        }
    }

    pub fn into_instance(self) -> Result<WitnessInstance> {
        let p = params(self.degree)?;
        let hom = |field: String, m: Vec<Vec<IntText>>| -> Result<GroupHom> {
            let m = matrix_from(&field, m)?;
            at(&field, GroupHom::new(p, m))
        };
        let mut stages = Vec::with_capacity(self.stages.len());
        for (k, s) in self.stages.into_iter().enumerate() {
            let diagonal = hom(format!("stages[{k}].diagonal"), s.diagonal)?;
            let priors = s
                .priors
                .into_iter()
                .enumerate()
                .map(|(l, m)| hom(format!("stages[{k}].priors[{l}]"), m))
                .collect::<Result<Vec<_>>>()?;
            stages.push(Stage {
                row: s.row,
                col: s.col,
                diagonal,
                priors,
            });
        }
        let targets = self
            .targets
            .iter()
            .enumerate()
            .map(|(k, t)| at(&format!("targets[{k}]"), RationalBound::from_str(t)))
            .collect::<Result<Vec<_>>>()?;
        WitnessInstance::new(p, stages, targets)
    }
}
