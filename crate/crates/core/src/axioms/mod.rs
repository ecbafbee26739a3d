//! Verification engine. Every check returns a [`CheckReport`]; failing cases are data.

mod checks;
mod properties;
mod report;
mod structure;

use std::fmt;
use std::str::FromStr;

pub use checks::{
    check_antisymmetry, check_axioms, check_closure, check_four_identities, check_four_identities_exact,
    check_four_identities_random, check_jacobi, EXHAUSTIVE_JACOBI_LIMIT, JACOBI_SEED, SAMPLED_JACOBI_TRIPLES,
};
pub use properties::{
    cartan_diagonal, check_all_permutations, check_form_identities, check_generation, check_permutation_stability,
    check_template, expected_cartan_size,
};
pub use report::{CheckReport, Failure, MAX_WITNESSES};
pub use structure::{structure_constants, StructureConstants};

use crate::error::{Error, Result};
use crate::families::GradedBasis;
use crate::graded::SignRule;

/// Seed and size of the random suite behind [`CheckName::Identities`].
pub const IDENTITY_TRIPLES: usize = 1000;
pub const IDENTITY_SEED: u64 = 0x1d_e471;

/// Checks selectable by name.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum CheckName {
    Axioms,
    Jacobi,
    Closure,
    Symmetry,
    Generation,
    Cartan,
    Permutation,
    Identities,
}

impl CheckName {
    pub const ALL: [CheckName; 8] = [
        CheckName::Axioms,
        CheckName::Jacobi,
        CheckName::Closure,
        CheckName::Symmetry,
        CheckName::Generation,
        CheckName::Cartan,
        CheckName::Permutation,
        CheckName::Identities,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CheckName::Axioms => "axioms",
            CheckName::Jacobi => "jacobi",
            CheckName::Closure => "closure",
            CheckName::Symmetry => "symmetry",
            CheckName::Generation => "generation",
            CheckName::Cartan => "cartan",
            CheckName::Permutation => "permutation",
            CheckName::Identities => "identities",
        }
    }
}

impl fmt::Display for CheckName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for CheckName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        CheckName::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown check '{s}'")))
    }
}

/// Runs one named check on `basis`.
pub fn run_check(name: CheckName, basis: &GradedBasis, rule: SignRule) -> Result<CheckReport> {
    Ok(match name {
        CheckName::Axioms => check_axioms(basis, rule)?,
        CheckName::Jacobi => check_jacobi(basis, rule),
        CheckName::Closure => check_closure(basis, rule)?,
        CheckName::Symmetry => check_antisymmetry(basis, rule),
        CheckName::Generation => check_generation(basis),
        CheckName::Cartan => cartan_diagonal(basis).1,
        CheckName::Permutation => check_all_permutations(basis, rule)?,
        CheckName::Identities => check_four_identities_random(IDENTITY_TRIPLES, 2..=5, IDENTITY_SEED),
    })
}

pub(crate) fn report_from_outcomes(
    name: &str,
    family: Option<crate::families::AlgebraFamily>,
    outcomes: Vec<Option<Failure>>,
) -> CheckReport {
    let mut b = report::ReportBuilder::new(name);
    if let Some(f) = family {
        b = b.family(f);
    }
    for o in outcomes {
        b.record(o);
    }
    b.finish()
}
