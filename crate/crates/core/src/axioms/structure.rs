use std::collections::{BTreeMap, BTreeSet};

use rayon::prelude::*;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use super::checks::{basis_solver, bracket_table};
use crate::error::{Error, Result};
use crate::exactnum::Scalar;
use crate::families::GradedBasis;
use crate::graded::{Degree, SignRule};
use crate::json::structure_entries;

/// Coordinates `c_ij^k` of `⟦X_i, X_j⟧ = Σ_k c_ij^k X_k`. Zero constants are not stored.
/// Indices are 0-based in memory and 1-based in JSON.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureConstants {
    pub basis_size: usize,
    pub degrees: Vec<Degree>,
    pub rule: SignRule,
    pub entries: BTreeMap<(usize, usize, usize), Scalar>,
}

impl StructureConstants {
    pub fn get(&self, i: usize, j: usize, k: usize) -> Scalar {
        self.entries.get(&(i, j, k)).cloned().unwrap_or_else(Scalar::zero)
    }

    /// `(i, j, k)` triples where `c_ij^k ≠ -(-1)^(a_i·a_j) c_ji^k`.
    pub fn antisymmetry_violations(&self) -> Vec<(usize, usize, usize)> {
        let candidates: BTreeSet<(usize, usize, usize)> = self
            .entries
            .keys()
            .flat_map(|&(i, j, k)| [(i, j, k), (j, i, k)])
            .collect();
        candidates
            .into_iter()
            .filter(|&(i, j, k)| {
                let sign = self.rule.sign(self.degrees[i], self.degrees[j]);
                self.get(i, j, k) != -self.get(j, i, k).scale_int(sign)
            })
            .collect()
    }

    /// Nonzero constants with `a_i + a_j ≠ a_k`.
    pub fn degree_violations(&self) -> Vec<(usize, usize, usize)> {
        self.entries
            .keys()
            .filter(|&&(i, j, k)| self.degrees[i] + self.degrees[j] != self.degrees[k])
            .copied()
            .collect()
    }
}

impl Serialize for StructureConstants {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("StructureConstants", 2)?;
        st.serialize_field("basis_size", &self.basis_size)?;
        st.serialize_field("entries", &structure_entries(&self.entries))?;
        st.end()
    }
}

/// Solves every pairwise bracket in the basis. Fails with [`Error::NotInSpan`] naming
/// the first pair (1-based) whose bracket leaves the span.
pub fn structure_constants(basis: &GradedBasis, rule: SignRule) -> Result<StructureConstants> {
    let table = bracket_table(basis, rule);
    let solver = basis_solver(basis)?;
    let n = basis.len();
    let solved: Vec<Option<Vec<Scalar>>> = table.par_iter().map(|br| solver.solve(br.entries())).collect();
    let mut entries = BTreeMap::new();
    for (idx, coords) in solved.into_iter().enumerate() {
        let (i, j) = (idx / n, idx % n);
        let coords = coords.ok_or(Error::NotInSpan { i: i + 1, j: j + 1 })?;
        for (k, c) in coords.into_iter().enumerate() {
            if !c.is_zero() {
                entries.insert((i, j, k), c);
            }
        }
    }
    Ok(StructureConstants {
        basis_size: n,
        degrees: basis.degrees(),
        rule,
        entries,
    })
}
