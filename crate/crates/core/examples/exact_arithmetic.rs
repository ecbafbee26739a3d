//! Exact arithmetic in Q(√2) and row reduction over it.

use z2lie::exactnum::{nullspace, rref, span_dim, ExactMatrix, Scalar};

pub fn run() -> String {
    let mut out = String::new();
    let x = Scalar::from_ratio(1, 2) + Scalar::sqrt2();
    let inv = x.inverse().expect("nonzero");
    out += &format!("x = {x}, 1/x = {inv}, x * (1/x) = {}\n", &x * &inv);
    assert!((&x * &inv).is_one());

    let m = ExactMatrix::from_rows(vec![
        vec![Scalar::one(), Scalar::sqrt2(), Scalar::from_int(2)],
        vec![Scalar::sqrt2(), Scalar::from_int(2), Scalar::sqrt2_times(2)],
    ])
    .expect("rectangular");
    let (reduced, pivots) = rref(&m);
    out += &format!("rank = {}, pivots = {pivots:?}\n", reduced.rank());
    let kernel = nullspace(&m);
    for v in &kernel {
        assert!(m.try_mul(v).expect("shapes").is_zero());
    }
    out += &format!("nullity = {}\n", kernel.len());
    out += &format!("span of kernel = {}\n", span_dim(&kernel).expect("same shape"));
    out
}

#[allow(dead_code)]
fn main() {
    print!("{}", run());
}
