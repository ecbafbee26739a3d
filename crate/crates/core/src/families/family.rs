use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graded::{Degree, GradingSignature};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub enum FamilyKind {
    #[serde(rename = "gl")]
    Gl,
    #[serde(rename = "sl")]
    Sl,
    #[serde(rename = "so-graded")]
    SoGraded,
    #[serde(rename = "sp")]
    SpP,
    #[serde(rename = "so-even")]
    SoPEven,
    #[serde(rename = "so-odd")]
    SoPOdd,
}

impl FamilyKind {
    pub const ALL: [FamilyKind; 6] = [
        FamilyKind::Gl,
        FamilyKind::Sl,
        FamilyKind::SoGraded,
        FamilyKind::SpP,
        FamilyKind::SoPEven,
        FamilyKind::SoPOdd,
    ];

    /// Command-line / JSON name.
    pub fn name(self) -> &'static str {
        match self {
            FamilyKind::Gl => "gl",
            FamilyKind::Sl => "sl",
            FamilyKind::SoGraded => "so-graded",
            FamilyKind::SpP => "sp",
            FamilyKind::SoPEven => "so-even",
            FamilyKind::SoPOdd => "so-odd",
        }
    }

    pub fn is_classical(self) -> bool {
        matches!(self, FamilyKind::SpP | FamilyKind::SoPEven | FamilyKind::SoPOdd)
    }
}

impl std::str::FromStr for FamilyKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        FamilyKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown family {s:?}")))
    }
}

impl fmt::Display for FamilyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum FamilyParams {
    /// Multiplicities of the degrees (0,0), (0,1), (1,0), (1,1).
    Graded { p: usize, q: usize, r: usize, s: usize },
    /// Rank `n` and sort boundary `p`, `0 <= p <= n`.
    Classical { n: usize, p: usize },
}

/// One of the six matrix families together with its parameters.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(try_from = "FamilyRepr")]
pub struct AlgebraFamily {
    kind: FamilyKind,
    params: FamilyParams,
}

#[derive(Deserialize)]
struct FamilyRepr {
    kind: FamilyKind,
    params: FamilyParams,
}

impl TryFrom<FamilyRepr> for AlgebraFamily {
    type Error = Error;
    fn try_from(raw: FamilyRepr) -> Result<Self> {
        AlgebraFamily::new(raw.kind, raw.params)
    }
}

impl AlgebraFamily {
    pub fn new(kind: FamilyKind, params: FamilyParams) -> Result<Self> {
        match (kind.is_classical(), params) {
            (false, FamilyParams::Graded { p, q, r, s }) => {
                if p + q + r + s == 0 {
                    return Err(Error::InvalidParameters("p+q+r+s must be positive".into()));
                }
            }
            (true, FamilyParams::Classical { n, p }) => {
                if n == 0 {
                    return Err(Error::InvalidParameters("n must be at least 1".into()));
                }
                if p > n {
                    return Err(Error::InvalidParameters(format!("p = {p} exceeds n = {n}")));
                }
            }
            _ => {
                return Err(Error::InvalidParameters(format!(
                    "parameters {params:?} do not fit family {kind}"
                )))
            }
        }
        Ok(AlgebraFamily { kind, params })
    }

    pub fn gl(p: usize, q: usize, r: usize, s: usize) -> Result<Self> {
        AlgebraFamily::new(FamilyKind::Gl, FamilyParams::Graded { p, q, r, s })
    }

    pub fn sl(p: usize, q: usize, r: usize, s: usize) -> Result<Self> {
        AlgebraFamily::new(FamilyKind::Sl, FamilyParams::Graded { p, q, r, s })
    }

    pub fn so_graded(p: usize, q: usize, r: usize, s: usize) -> Result<Self> {
        AlgebraFamily::new(FamilyKind::SoGraded, FamilyParams::Graded { p, q, r, s })
    }

    pub fn sp(n: usize, p: usize) -> Result<Self> {
        AlgebraFamily::new(FamilyKind::SpP, FamilyParams::Classical { n, p })
    }

    pub fn so_even(n: usize, p: usize) -> Result<Self> {
        AlgebraFamily::new(FamilyKind::SoPEven, FamilyParams::Classical { n, p })
    }

    pub fn so_odd(n: usize, p: usize) -> Result<Self> {
        AlgebraFamily::new(FamilyKind::SoPOdd, FamilyParams::Classical { n, p })
    }

    pub fn kind(&self) -> FamilyKind {
        self.kind
    }

    pub fn params(&self) -> FamilyParams {
        self.params
    }

    /// `(n, p)` for the classical families.
    pub fn classical_params(&self) -> Option<(usize, usize)> {
        match self.params {
            FamilyParams::Classical { n, p } => Some((n, p)),
            FamilyParams::Graded { .. } => None,
        }
    }

    /// `(p, q, r, s)` for gl, sl and the graded so.
    pub fn graded_params(&self) -> Option<(usize, usize, usize, usize)> {
        match self.params {
            FamilyParams::Graded { p, q, r, s } => Some((p, q, r, s)),
            FamilyParams::Classical { .. } => None,
        }
    }

    /// Matrix size.
    pub fn size(&self) -> usize {
        match (self.kind, self.params) {
            (_, FamilyParams::Graded { p, q, r, s }) => p + q + r + s,
            (FamilyKind::SoPOdd, FamilyParams::Classical { n, .. }) => 2 * n + 1,
            (_, FamilyParams::Classical { n, .. }) => 2 * n,
        }
    }

    /// Coordinate degrees realizing the printed block layout of the family.
    pub fn signature(&self) -> GradingSignature {
        match (self.kind, self.params) {
            (_, FamilyParams::Graded { p, q, r, s }) => GradingSignature::sorted(p, q, r, s),
            (FamilyKind::SoPOdd, FamilyParams::Classical { n, p }) => GradingSignature::from_blocks(&[
                (Degree::D00, p),
                (Degree::D11, n - p),
                (Degree::D00, p),
                (Degree::D11, n - p),
                (Degree::D01, 1),
            ]),
            (_, FamilyParams::Classical { n, p }) => GradingSignature::from_blocks(&[
                (Degree::D00, p),
                (Degree::D10, n - p),
                (Degree::D11, p),
                (Degree::D01, n - p),
            ]),
        }
    }

    /// Dimension of the ungraded classical Lie algebra of the same type.
    pub fn classical_counterpart_dim(&self) -> Result<usize> {
        match (self.kind, self.params) {
            (FamilyKind::SpP | FamilyKind::SoPOdd, FamilyParams::Classical { n, .. }) => Ok(2 * n * n + n),
            (FamilyKind::SoPEven, FamilyParams::Classical { n, .. }) => Ok(2 * n * n - n),
            _ => Err(Error::WrongFamilyKind(self.kind.to_string())),
        }
    }
}

pub fn family_signature(f: &AlgebraFamily) -> GradingSignature {
    f.signature()
}

pub fn classical_counterpart_dims(f: &AlgebraFamily) -> Result<usize> {
    f.classical_counterpart_dim()
}

impl fmt::Display for AlgebraFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.params {
            FamilyParams::Graded { p, q, r, s } => write!(f, "{}({p},{q},{r},{s})", self.kind),
            FamilyParams::Classical { n, p } => write!(f, "{}(n={n},p={p})", self.kind),
        }
    }
}
