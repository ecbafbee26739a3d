//! Relabeling the nonzero degrees maps a graded algebra to another one.

use z2lie::axioms::check_permutation_stability;
use z2lie::families::{build_basis, AlgebraFamily};
use z2lie::graded::{DegreePermutation, SignRule};

pub fn run() -> String {
    let f = AlgebraFamily::sp(2, 1).expect("valid");
    let base = build_basis(&f).expect("buildable").profile();
    let mut out = format!("{f} profile {:?}\n", base.as_array());
    for pi in DegreePermutation::all() {
        let report = check_permutation_stability(&f, &pi, SignRule::Gla).expect("buildable");
        assert!(report.passed());
        out += &format!(
            "  {pi}: profile {:?}, pass = {}\n",
            base.permuted(&pi).as_array(),
            report.pass
        );
    }
    out
}

#[allow(dead_code)]
fn main() {
    print!("{}", run());
}
