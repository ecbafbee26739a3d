use std::sync::Arc;

use serde_json::json;

use super::checks::check_axioms;
use super::report::{CheckReport, Failure, ReportBuilder};
use crate::error::Result;
use crate::exactnum::{nullspace, span_dim, ExactMatrix, Scalar};
use crate::families::{
    block_template, build_basis, defining_form, is_member, AlgebraFamily, FamilyKind, FormLabel, GradedBasis,
};
use crate::graded::{Degree, DegreePermutation, GradedMatrix, SignRule};
use crate::json::to_value;

fn span_of(ms: &[GradedMatrix]) -> usize {
    span_dim(ms.iter().map(|m| m.entries())).expect("matrices share a shape")
}

fn pairwise(xs: &[&GradedMatrix], ys: &[&GradedMatrix], same: bool) -> Vec<GradedMatrix> {
    let mut out = Vec::new();
    for (i, x) in xs.iter().enumerate() {
        let start = if same { i } else { 0 };
        for y in &ys[start..] {
            out.push(x.bracket(y, SignRule::Gla).expect("shared signature"));
        }
    }
    out
}

/// Span of `[g10,g10] + [g01,g01]` against `d00`, and of `{g10,g01}` against `d11`.
pub fn check_generation(basis: &GradedBasis) -> CheckReport {
    let mut report = ReportBuilder::new("generation")
        .family(*basis.family())
        .rule(SignRule::Gla);
    let g10: Vec<&GradedMatrix> = basis.of_degree(Degree::D10).collect();
    let g01: Vec<&GradedMatrix> = basis.of_degree(Degree::D01).collect();
    let profile = basis.profile();

    let mut even = pairwise(&g10, &g10, true);
    even.extend(pairwise(&g01, &g01, true));
    let odd = pairwise(&g10, &g01, false);
    let span00 = span_of(&even) as i64;
    let span11 = span_of(&odd) as i64;

    for (case, (what, span, dim)) in [
        ("g00 = [g10,g10] + [g01,g01]", span00, profile.d00),
        ("g11 = {g10,g01}", span11, profile.d11),
    ]
    .into_iter()
    .enumerate()
    {
        report.record((span != dim).then(|| Failure {
            case,
            what: what.into(),
            witness: json!({"family": basis.family(), "g10": g10.len(), "g01": g01.len()}),
            expected: json!(dim),
            got: json!(span),
        }));
    }
    report.metric("span_d00", span00);
    report.metric("span_d11", span11);
    report.metric("d00", profile.d00);
    report.metric("d11", profile.d11);
    report.finish()
}

/// Number of diagonal members the algebra is expected to contain.
pub fn expected_cartan_size(f: &AlgebraFamily) -> usize {
    match f.kind() {
        FamilyKind::Gl => f.size(),
        FamilyKind::Sl => f.size() - 1,
        FamilyKind::SoGraded => 0,
        _ => f.classical_params().expect("classical").0,
    }
}

/// The diagonal matrices in the span of the basis, checked to be of degree (0,0),
/// pairwise commuting and of the expected count.
pub fn cartan_diagonal(basis: &GradedBasis) -> (Vec<GradedMatrix>, CheckReport) {
    let mut report = ReportBuilder::new("cartan").family(*basis.family()).rule(SignRule::Gla);
    let n = basis.signature().len();
    let el = basis.elements();
    let off_diagonal: Vec<(usize, usize)> = (0..n)
        .flat_map(|j| (0..n).filter(move |&k| k != j).map(move |k| (j, k)))
        .filter(|&(j, k)| el.iter().any(|e| !e.entries()[(j, k)].is_zero()))
        .collect();
    let system = ExactMatrix::from_fn(off_diagonal.len(), el.len(), |r, c| {
        let (j, k) = off_diagonal[r];
        el[c].entries()[(j, k)].clone()
    });
    let members: Vec<GradedMatrix> = nullspace(&system)
        .into_iter()
        .map(|v| {
            let mut m = ExactMatrix::zeros(n, n);
            for (c, e) in el.iter().enumerate() {
                let coeff = &v[(c, 0)];
                if !coeff.is_zero() {
                    m.add_scaled(coeff, e.entries()).expect("same shape");
                }
            }
            GradedMatrix::new(basis.signature().clone(), m).expect("square")
        })
        .collect();

    for (i, m) in members.iter().enumerate() {
        let case = report.next_case();
        report.record((!m.is_homogeneous_of(Degree::D00)).then(|| Failure {
            case,
            what: format!("diagonal member {} is not of degree (0,0)", i + 1),
            witness: to_value(m),
            expected: to_value(&Degree::D00),
            got: json!(m.infer_degree()),
        }));
    }
    for i in 0..members.len() {
        for j in i + 1..members.len() {
            let br = members[i]
                .bracket(&members[j], SignRule::Gla)
                .expect("shared signature");
            let case = report.next_case();
            report.record((!br.is_zero()).then(|| Failure {
                case,
                what: format!("diagonal members {} and {} do not commute", i + 1, j + 1),
                witness: json!({"x": to_value(&members[i]), "y": to_value(&members[j])}),
                expected: json!("zero matrix"),
                got: to_value(&br),
            }));
        }
    }
    let expected = expected_cartan_size(basis.family());
    let case = report.next_case();
    report.record((members.len() != expected).then(|| Failure {
        case,
        what: "number of diagonal members".into(),
        witness: json!({"family": basis.family()}),
        expected: json!(expected),
        got: json!(members.len()),
    }));
    report.metric("size", members.len() as i64);
    let members = members
        .into_iter()
        .map(|m| m.clone().with_degree(Degree::D00).unwrap_or(m))
        .collect();
    (members, report.finish())
}

/// Relabels the nonzero degrees of `f` by `pi`, reruns the axioms on the result and
/// compares its profile with the permuted profile.
pub fn check_permutation_stability(f: &AlgebraFamily, pi: &DegreePermutation, rule: SignRule) -> Result<CheckReport> {
    let basis = build_basis(f)?;
    permutation_stability_of(&basis, pi, rule)
}

pub(crate) fn permutation_stability_of(
    basis: &GradedBasis,
    pi: &DegreePermutation,
    rule: SignRule,
) -> Result<CheckReport> {
    let moved = basis.relabel(pi);
    let axioms = check_axioms(&moved, rule)?;
    let mut profile = ReportBuilder::new("profile").family(*basis.family()).rule(rule);
    let want = basis.profile().permuted(pi);
    let got = moved.profile();
    profile.record((want != got).then(|| Failure {
        case: 0,
        what: format!("profile after relabeling by {pi}"),
        witness: json!({"family": basis.family(), "permutation": pi.to_string()}),
        expected: to_value(&want),
        got: to_value(&got),
    }));
    let mut report = CheckReport::merge("permutation", vec![axioms, profile.finish()]);
    report.metrics.insert("permutation.d01".into(), got.d01);
    report.metrics.insert("permutation.d10".into(), got.d10);
    report.metrics.insert("permutation.d11".into(), got.d11);
    Ok(report)
}

/// Every permutation of the nonzero degrees, merged into one report.
pub fn check_all_permutations(basis: &GradedBasis, rule: SignRule) -> Result<CheckReport> {
    let parts = DegreePermutation::all()
        .iter()
        .map(|pi| {
            let mut r = permutation_stability_of(basis, pi, rule)?;
            r.check = format!("permutation {pi}");
            Ok(r)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(CheckReport::merge("permutation", parts))
}

/// The printed block layout of `f`: labels agree with the entry degrees, every instance is a
/// member, and the instances span exactly the algebra.
pub fn check_template(f: &AlgebraFamily) -> Result<CheckReport> {
    let mut report = ReportBuilder::new("template").family(*f);
    let template = block_template(f);
    let signature = Arc::new(f.signature());
    let mismatches = template.label_mismatches(&signature);
    let case = report.next_case();
    report.record((!mismatches.is_empty()).then(|| Failure {
        case,
        what: "block labels disagree with entry degrees".into(),
        witness: json!({"family": f}),
        expected: json!([]),
        got: json!(mismatches.iter().map(|&(a, b)| (a + 1, b + 1)).collect::<Vec<_>>()),
    }));
    let instances = template.instances(signature)?;
    for (i, m) in instances.iter().enumerate() {
        let membership = is_member(f, m)?;
        let case = report.next_case();
        report.record(membership.violation.map(|v| Failure {
            case,
            what: format!("template instance {} violates {}", i + 1, v.condition),
            witness: to_value(m),
            expected: json!("0"),
            got: to_value(&v),
        }));
    }
    let basis = build_basis(f)?;
    let own = span_of(&instances);
    let joint = span_dim(instances.iter().chain(basis.elements()).map(|m| m.entries()))?;
    let case = report.next_case();
    report.record((own != basis.len() || joint != basis.len()).then(|| Failure {
        case,
        what: "template span differs from the algebra".into(),
        witness: json!({"family": f}),
        expected: json!({"span": basis.len(), "joint": basis.len()}),
        got: json!({"span": own, "joint": joint}),
    }));
    Ok(report.finish())
}

/// `J^T = -J`, `K^T = K`, `K'^T = K'` under the graded transpose, and `M M^t = I` with the
/// ordinary transpose.
pub fn check_form_identities(f: &AlgebraFamily) -> Result<CheckReport> {
    let mut report = ReportBuilder::new("forms").family(*f);
    let form = defining_form(f)?;
    let m = &form.matrix;
    let want = match form.label {
        FormLabel::J => m.neg(),
        FormLabel::K | FormLabel::KPrime => m.clone(),
    };
    let got = m.graded_transpose();
    report.record((got.entries() != want.entries()).then(|| Failure {
        case: 0,
        what: "graded transpose of the form".into(),
        witness: to_value(m),
        expected: to_value(&want),
        got: to_value(&got),
    }));
    let product = m.entries().try_mul(&m.entries().transpose())?;
    let identity = ExactMatrix::identity(m.n());
    report.record((product != identity).then(|| Failure {
        case: 1,
        what: "form times its ordinary transpose".into(),
        witness: to_value(m),
        expected: json!("identity"),
        got: json!(product
                .nonzero_entries()
                .map(|(j, k, v)| (j + 1, k + 1, v.clone()))
                .collect::<Vec<(usize, usize, Scalar)>>()),
    }));
    Ok(report.finish())
}
