//! JSON ring-spec files.
//!
//! ```json
//! {"factors": [{"family": "chain", "k": 1}, {"family": "field"},
//!              {"family": "custom", "elements": ["0", "m", "R"],
//!               "join": [["0","m","R"],["m","m","R"],["R","R","R"]],
//!               "maximal": "m"}]}
//! ```
//!
//! Custom join tables may use element labels or indices. Zero must be the
//! first listed element and the whole ring the last.

use std::path::Path;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::lattice::{make_builtin, validate_lattice, Family, IdealLattice, LatticeError, RawLattice};
use super::product::{product_ring, RingError, RingSpec};

#[derive(Debug, Error)]
pub enum SpecFileError {
    #[error("cannot read ring spec: {0}")]
    Io(#[from] std::io::Error),
    #[error("malformed ring spec: {0}")]
    Json(#[from] serde_json::Error),
    #[error("factor {index}: {source}")]
    Lattice {
        index: usize,
        #[source]
        source: LatticeError,
    },
    #[error("factor {index}: unknown element `{label}`")]
    UnknownLabel { index: usize, label: String },
    #[error(transparent)]
    Ring(#[from] RingError),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Entry {
    Index(usize),
    Label(String),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum FactorSpec {
    Field,
    Chain {
        k: i64,
    },
    TwogenXy {
        q: i64,
    },
    TwogenFlat {
        q: i64,
    },
    Custom {
        #[serde(default)]
        name: Option<String>,
        elements: Vec<String>,
        join: Vec<Vec<Entry>>,
        maximal: Entry,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RingFile {
    pub factors: Vec<FactorSpec>,
}

impl From<Family> for FactorSpec {
    fn from(f: Family) -> Self {
        match f {
            Family::Field => FactorSpec::Field,
            Family::Chain { k } => FactorSpec::Chain { k: k as i64 },
            Family::TwogenXy { q } => FactorSpec::TwogenXy { q: q as i64 },
            Family::TwogenFlat { q } => FactorSpec::TwogenFlat { q: q as i64 },
        }
    }
}

fn param(name: &str, v: i64) -> Result<u32, LatticeError> {
    u32::try_from(v).map_err(|_| LatticeError::BadParameter(format!("{name} = {v} must be non-negative")))
}

impl FactorSpec {
    pub fn to_lattice(&self, index: usize) -> Result<IdealLattice, SpecFileError> {
        let wrap = |source| SpecFileError::Lattice { index, source };
        match self {
            FactorSpec::Field => make_builtin(Family::Field).map_err(wrap),
            FactorSpec::Chain { k } => make_builtin(Family::Chain { k: param("k", *k).map_err(wrap)? }).map_err(wrap),
            FactorSpec::TwogenXy { q } => {
                make_builtin(Family::TwogenXy { q: param("q", *q).map_err(wrap)? }).map_err(wrap)
            }
            FactorSpec::TwogenFlat { q } => {
                make_builtin(Family::TwogenFlat { q: param("q", *q).map_err(wrap)? }).map_err(wrap)
            }
            FactorSpec::Custom {
                name,
                elements,
                join,
                maximal,
            } => {
                let resolve = |e: &Entry| -> Result<usize, SpecFileError> {
                    match e {
                        Entry::Index(i) => Ok(*i),
                        Entry::Label(l) => elements.iter().position(|x| x == l).ok_or_else(|| {
                            SpecFileError::UnknownLabel {
                                index,
                                label: l.clone(),
                            }
                        }),
                    }
                };
                let table = join
                    .iter()
                    .map(|row| row.iter().map(resolve).collect::<Result<Vec<_>, _>>())
                    .collect::<Result<Vec<_>, _>>()?;
                let raw = RawLattice {
                    name: name.clone().unwrap_or_else(|| format!("custom{index}")),
                    elements: elements.clone(),
                    join: table,
                    maximal: resolve(maximal)?,
                };
                validate_lattice(raw).map_err(wrap)
            }
        }
    }
}

impl RingFile {
    pub fn from_families(fams: &[Family]) -> Self {
        RingFile {
            factors: fams.iter().map(|&f| f.into()).collect(),
        }
    }

    pub fn to_ring(&self) -> Result<RingSpec, SpecFileError> {
        let factors = self
            .factors
            .iter()
            .enumerate()
            .map(|(i, f)| f.to_lattice(i))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(product_ring(factors)?)
    }
}

pub fn parse_ring_spec(text: &str) -> Result<RingSpec, SpecFileError> {
    let file: RingFile = serde_json::from_str(text)?;
    file.to_ring()
}

pub fn load_ring_spec(path: &Path) -> Result<RingSpec, SpecFileError> {
    parse_ring_spec(&std::fs::read_to_string(path)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtin_and_custom() {
        let text = r#"{"factors":[{"family":"chain","k":1},{"family":"field"},
            {"family":"custom","elements":["0","m","R"],
             "join":[["0","m","R"],["m","m","R"],[2,2,2]],"maximal":"m"}]}"#;
        let r = parse_ring_spec(text).unwrap();
        assert_eq!(r.factor_count(), 3);
        assert_eq!(r.ideal_count(), 18);
    }

    #[test]
    fn negative_parameter_rejected() {
        let err = parse_ring_spec(r#"{"factors":[{"family":"chain","k":-1},{"family":"field"}]}"#)
            .unwrap_err();
        assert!(matches!(
            err,
            SpecFileError::Lattice {
                source: LatticeError::BadParameter(_),
                ..
            }
        ));
    }

    #[test]
    fn unknown_label() {
        let text = r#"{"factors":[{"family":"custom","elements":["0","R"],
            "join":[["0","R"],["R","X"]],"maximal":"0"}]}"#;
        assert!(matches!(
            parse_ring_spec(text),
            Err(SpecFileError::UnknownLabel { .. })
        ));
    }

    #[test]
    fn round_trip() {
        let f = RingFile::from_families(&[Family::Field, Family::TwogenXy { q: 2 }]);
        let text = serde_json::to_string(&f).unwrap();
        assert_eq!(serde_json::from_str::<RingFile>(&text).unwrap(), f);
    }
}
