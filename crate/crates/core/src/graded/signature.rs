use std::fmt;

use serde::{Deserialize, Serialize};

use super::degree::{Degree, DegreePermutation};
use crate::error::{Error, Result};

/// Degree of every coordinate of the graded space V. The degree of the matrix entry
/// `(j, k)` is `d_j + d_k`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(transparent)]
pub struct GradingSignature(Vec<Degree>);

impl GradingSignature {
    pub fn new(degrees: Vec<Degree>) -> Self {
        GradingSignature(degrees)
    }

    /// Blocks of (0,0), (0,1), (1,0), (1,1) coordinates of sizes `p, q, r, s`.
    pub fn sorted(p: usize, q: usize, r: usize, s: usize) -> Self {
        GradingSignature::from_blocks(&[(Degree::D00, p), (Degree::D01, q), (Degree::D10, r), (Degree::D11, s)])
    }

    pub fn from_blocks(blocks: &[(Degree, usize)]) -> Self {
        GradingSignature(blocks.iter().flat_map(|&(d, m)| std::iter::repeat_n(d, m)).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degrees(&self) -> &[Degree] {
        &self.0
    }

    pub fn coordinate(&self, j: usize) -> Degree {
        self.0[j]
    }

    pub fn entry_degree(&self, j: usize, k: usize) -> Result<Degree> {
        let n = self.len();
        if j >= n || k >= n {
            return Err(Error::IndexOutOfRange {
                row: j,
                col: k,
                size: n,
            });
        }
        Ok(self.0[j] + self.0[k])
    }

    /// Unchecked variant for internal loops.
    pub(crate) fn entry(&self, j: usize, k: usize) -> Degree {
        self.0[j] + self.0[k]
    }

    /// Multiplicities of (0,0), (0,1), (1,0), (1,1): the `(p, q, r, s)` of the sorted form.
    pub fn multiplicities(&self) -> [usize; 4] {
        let mut m = [0; 4];
        for d in &self.0 {
            m[d.index()] += 1;
        }
        m
    }

    pub fn permute(&self, pi: &DegreePermutation) -> GradingSignature {
        GradingSignature(self.0.iter().map(|&d| pi.apply(d)).collect())
    }

    /// Adds `c` to every coordinate degree. Entry degrees are unchanged.
    pub fn shift(&self, c: Degree) -> GradingSignature {
        GradingSignature(self.0.iter().map(|&d| d + c).collect())
    }

    /// Row-major positions `(j, k)` whose entry degree is `d`.
    pub fn positions_of_degree(&self, d: Degree) -> Vec<(usize, usize)> {
        let n = self.len();
        (0..n)
            .flat_map(|j| (0..n).map(move |k| (j, k)))
            .filter(|&(j, k)| self.entry(j, k) == d)
            .collect()
    }
}

pub fn permute_grading(sig: &GradingSignature, pi: &DegreePermutation) -> GradingSignature {
    sig.permute(pi)
}

impl fmt::Display for GradingSignature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(Degree::to_string).collect();
        write!(f, "[{}]", parts.join(","))
    }
}
