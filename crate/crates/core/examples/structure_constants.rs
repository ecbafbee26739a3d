//! Structure constants of sp_1(4) and their canonical JSON.

use z2lie::axioms::structure_constants;
use z2lie::families::{build_basis, AlgebraFamily};
use z2lie::graded::SignRule;
use z2lie::json::to_canonical_json;

pub fn run() -> String {
    let basis = build_basis(&AlgebraFamily::sp(2, 1).expect("valid")).expect("buildable");
    let sc = structure_constants(&basis, SignRule::Gla).expect("closed");
    assert!(sc.antisymmetry_violations().is_empty());
    assert!(sc.degree_violations().is_empty());
    let text = to_canonical_json(&sc).expect("serializable");
    format!(
        "{} nonzero constants over {} elements; first lines:\n{}\n",
        sc.entries.len(),
        sc.basis_size,
        text.lines().take(8).collect::<Vec<_>>().join("\n")
    )
}

#[allow(dead_code)]
fn main() {
    print!("{}", run());
}
