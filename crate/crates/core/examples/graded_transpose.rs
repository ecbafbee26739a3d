//! Degrees, sign rules and the graded transpose on the signature (1,1,1,1).

use std::sync::Arc;

use z2lie::graded::{Degree, GradedMatrix, GradingSignature, SignRule};

pub fn run() -> String {
    let sig = Arc::new(GradingSignature::sorted(1, 1, 1, 1));
    let mut out = String::from("sign of the graded transpose entry (j,k):\n");
    for j in 0..4 {
        let row: Vec<&str> = (0..4)
            .map(|k| {
                let m = GradedMatrix::unit(sig.clone(), k, j).expect("in range");
                let t = m.graded_transpose();
                if t.entries()[(j, k)].is_one() {
                    "+"
                } else {
                    "-"
                }
            })
            .collect();
        out += &format!("  {}\n", row.join(" "));
    }

    let a = GradedMatrix::unit(sig.clone(), 0, 1).expect("in range");
    let b = GradedMatrix::unit(sig.clone(), 1, 3).expect("in range");
    let (da, db) = (a.infer_degree().unwrap(), b.infer_degree().unwrap());
    let lhs = a.product(&b).unwrap().graded_transpose();
    let rhs = b.graded_transpose().product(&a.graded_transpose()).unwrap();
    let sign = SignRule::Gla.sign(da, db);
    assert_eq!(lhs, rhs.scale(&sign.into()));
    out += &format!("(AB)^T = {sign:+} B^T A^T for deg A = {da}, deg B = {db}\n");
    assert_eq!(a.graded_transpose().graded_transpose(), a);
    out += &format!(
        "(1,1)·(1,1) under GLA: {}\n",
        SignRule::Gla.exponent(Degree::D11, Degree::D11)
    );
    out
}

#[allow(dead_code)]
fn main() {
    print!("{}", run());
}
