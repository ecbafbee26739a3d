//! Two sorts of parafermions in so_q(2n+1).

use z2lie::exactnum::Scalar;
use z2lie::parafermions::{build_system, run_all, Sign};

pub fn run() -> String {
    let sys = build_system(2, 1).expect("valid");
    let p = sys.generator(1, Sign::Plus).entries();
    let m = sys.generator(1, Sign::Minus).entries();
    let triple = p.commutator(m).unwrap().commutator(m).unwrap();
    assert_eq!(triple, m.scale(&Scalar::from_int(-2)));

    let mut out = String::from("[[f1+, f1-], f1-] = -2 f1-\n");
    for (n, q) in [(2, 0), (2, 1), (3, 1), (4, 2)] {
        let (summary, _) = run_all(n, q).expect("valid");
        out += &format!(
            "n={n} q={q}: PF cases {}, PFrel cases {}, pass = {}, spans {:?}\n",
            summary.pf_cases,
            summary.pfrel_cases,
            summary.pass,
            summary.subspace_spans.as_array()
        );
    }
    out
}

#[allow(dead_code)]
fn main() {
    print!("{}", run());
}
