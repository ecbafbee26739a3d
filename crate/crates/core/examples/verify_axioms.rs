//! Closure, graded antisymmetry and graded Jacobi over whole bases.

use z2lie::axioms::{cartan_diagonal, check_axioms, check_generation};
use z2lie::families::{build_basis, AlgebraFamily};
use z2lie::graded::SignRule;

pub fn run() -> String {
    let mut out = String::new();
    for f in [
        AlgebraFamily::sl(1, 1, 1, 1),
        AlgebraFamily::sp(2, 1),
        AlgebraFamily::so_odd(2, 1),
    ] {
        let basis = build_basis(&f.expect("valid")).expect("buildable");
        let report = check_axioms(&basis, SignRule::Gla).expect("basis is independent");
        assert!(report.passed());
        let generation = check_generation(&basis);
        let (cartan, cartan_report) = cartan_diagonal(&basis);
        out += &format!(
            "{}: {} cases, pass = {}, generation = {}, diagonal members = {} ({})\n",
            basis.family(),
            report.cases_run,
            report.pass,
            generation.pass,
            cartan.len(),
            cartan_report.pass
        );
    }
    out
}

#[allow(dead_code)]
fn main() {
    print!("{}", run());
}
