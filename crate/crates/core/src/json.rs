//! JSON encodings of matrices, bases and structure constants.
//!
//! Matrix positions are 1-based. Objects are emitted with sorted keys and entry lists
//! sorted by position, so equal values always serialize to identical bytes.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::exactnum::{ExactMatrix, Scalar};
use crate::families::{AlgebraFamily, DimensionProfile, FamilyKind, FamilyParams, GradedBasis};
use crate::graded::{Degree, GradedMatrix, GradingSignature};

#[derive(Serialize, Deserialize)]
struct GradedMatrixRepr {
    n: usize,
    signature: Vec<Degree>,
    degree: Option<Degree>,
    entries: Vec<(usize, usize, Scalar)>,
}

impl From<&GradedMatrix> for GradedMatrixRepr {
    fn from(m: &GradedMatrix) -> Self {
        GradedMatrixRepr {
            n: m.n(),
            signature: m.signature().degrees().to_vec(),
            degree: m.degree(),
            entries: m
                .entries()
                .nonzero_entries()
                .map(|(j, k, v)| (j + 1, k + 1, v.clone()))
                .collect(),
        }
    }
}

impl GradedMatrixRepr {
    fn into_matrix(self, signature: Option<Arc<GradingSignature>>) -> Result<GradedMatrix> {
        if self.signature.len() != self.n {
            return Err(Error::Parse(format!(
                "signature has {} degrees but n = {}",
                self.signature.len(),
                self.n
            )));
        }
        let sig = GradingSignature::new(self.signature);
        let sig = match signature {
            Some(shared) if *shared == sig => shared,
            Some(_) => return Err(Error::SignatureMismatch),
            None => Arc::new(sig),
        };
        let mut m = ExactMatrix::zeros(self.n, self.n);
        for (j, k, v) in self.entries {
            if j == 0 || k == 0 || j > self.n || k > self.n {
                return Err(Error::IndexOutOfRange {
                    row: j,
                    col: k,
                    size: self.n,
                });
            }
            m[(j - 1, k - 1)] = v;
        }
        let gm = GradedMatrix::new(sig, m)?;
        match self.degree {
            Some(d) => gm.with_degree(d),
            None => Ok(gm),
        }
    }
}

impl Serialize for GradedMatrix {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        GradedMatrixRepr::from(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for GradedMatrix {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        GradedMatrixRepr::deserialize(d)?
            .into_matrix(None)
            .map_err(D::Error::custom)
    }
}

#[derive(Serialize, Deserialize)]
struct BasisRepr {
    family: FamilyKind,
    params: FamilyParams,
    signature: Vec<Degree>,
    elements: Vec<GradedMatrixRepr>,
    profile: DimensionProfile,
}

impl Serialize for GradedBasis {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        BasisRepr {
            family: self.family().kind(),
            params: self.family().params(),
            signature: self.signature().degrees().to_vec(),
            elements: self.elements().iter().map(GradedMatrixRepr::from).collect(),
            profile: self.profile(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for GradedBasis {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = BasisRepr::deserialize(d)?;
        let build = || -> Result<GradedBasis> {
            let family = AlgebraFamily::new(raw.family, raw.params)?;
            let signature = Arc::new(GradingSignature::new(raw.signature));
            let elements = raw
                .elements
                .into_iter()
                .map(|e| e.into_matrix(Some(signature.clone())))
                .collect::<Result<Vec<_>>>()?;
            let basis = GradedBasis::from_parts(family, signature, elements)?;
            if basis.profile() != raw.profile {
                return Err(Error::Parse("profile does not match the listed elements".into()));
            }
            Ok(basis)
        };
        build().map_err(D::Error::custom)
    }
}

/// Serializes through `serde_json::Value`, whose maps are ordered, so keys come out sorted.
pub fn to_canonical_json<T: Serialize>(value: &T) -> Result<String> {
    let v = serde_json::to_value(value)?;
    Ok(serde_json::to_string_pretty(&v)?)
}

pub fn to_value<T: Serialize>(value: &T) -> serde_json::Value {
    serde_json::to_value(value).expect("in-memory values always serialize")
}

pub fn matrix_from_json(text: &str) -> Result<GradedMatrix> {
    Ok(serde_json::from_str(text)?)
}

pub fn basis_from_json(text: &str) -> Result<GradedBasis> {
    Ok(serde_json::from_str(text)?)
}

/// Sorted map from `(i, j, k)` (1-based) to the structure constant, for export.
pub(crate) fn structure_entries(
    entries: &BTreeMap<(usize, usize, usize), Scalar>,
) -> Vec<(usize, usize, usize, Scalar)> {
    entries
        .iter()
        .map(|(&(i, j, k), v)| (i + 1, j + 1, k + 1, v.clone()))
        .collect()
}
