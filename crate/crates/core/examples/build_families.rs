//! Bases of every family, their graded dimensions and the printed formulas.

use z2lie::families::{build_basis, dimension_profile, profile_discrepancies, AlgebraFamily};

pub fn run() -> String {
    let families = [
        AlgebraFamily::gl(1, 1, 1, 1),
        AlgebraFamily::sl(1, 2, 0, 1),
        AlgebraFamily::so_graded(1, 1, 1, 1),
        AlgebraFamily::sp(2, 1),
        AlgebraFamily::so_even(3, 1),
        AlgebraFamily::so_odd(3, 1),
    ];
    let mut out = String::new();
    for f in families {
        let f = f.expect("valid parameters");
        let basis = build_basis(&f).expect("buildable");
        let measured = basis.profile();
        let formula = dimension_profile(&f);
        out += &format!(
            "{f:<28} dim {:>3}  measured {:?}  formula {:?}\n",
            basis.len(),
            measured.as_array(),
            formula.as_array()
        );
        for d in profile_discrepancies(&formula, &measured) {
            out += &format!(
                "  formula for {} gives {}, measured {}\n",
                d.degree, d.formula, d.measured
            );
        }
    }
    out
}

#[allow(dead_code)]
fn main() {
    print!("{}", run());
}
