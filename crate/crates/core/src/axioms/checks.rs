use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::json;

use super::report::{CheckReport, Failure, ReportBuilder};
use crate::error::{Error, Result};
use crate::exactnum::{ExactMatrix, Scalar, SpanSolver};
use crate::families::{is_member, GradedBasis};
use crate::graded::{Degree, GradedMatrix, SignRule};
use crate::json::to_value;

/// Bases up to this size get an exhaustive Jacobi scan; larger ones are sampled.
pub const EXHAUSTIVE_JACOBI_LIMIT: usize = 40;
pub const SAMPLED_JACOBI_TRIPLES: usize = 100_000;
pub const JACOBI_SEED: u64 = 0x5eed_1a3b;

/// All pairwise brackets `⟦X_i, X_j⟧`, row-major.
pub(crate) fn bracket_table(basis: &GradedBasis, rule: SignRule) -> Vec<GradedMatrix> {
    let el = basis.elements();
    let n = el.len();
    (0..n * n)
        .into_par_iter()
        .map(|idx| {
            el[idx / n]
                .bracket(&el[idx % n], rule)
                .expect("basis elements share a signature")
        })
        .collect()
}

fn builder(name: &str, basis: &GradedBasis, rule: SignRule) -> ReportBuilder {
    ReportBuilder::new(name).family(*basis.family()).rule(rule)
}

pub(crate) fn basis_solver(basis: &GradedBasis) -> Result<SpanSolver> {
    SpanSolver::new(basis.elements().iter().map(|e| e.entries().clone()).collect())
}

/// Every bracket of basis elements is homogeneous of the summed degree and stays inside
/// the algebra (span of the basis, and the family conditions when the signature matches).
pub fn check_closure(basis: &GradedBasis, rule: SignRule) -> Result<CheckReport> {
    let mut report = builder("closure", basis, rule);
    let table = bracket_table(basis, rule);
    let solver = basis_solver(basis)?;
    let family = basis.family();
    let native = **basis.signature() == family.signature();
    let n = basis.len();
    let outcomes: Vec<Option<Failure>> = (0..n * n)
        .into_par_iter()
        .map(|idx| {
            let (i, j) = (idx / n, idx % n);
            let br = &table[idx];
            let want = basis.degree_of(i) + basis.degree_of(j);
            let witness = || json!({"i": i + 1, "j": j + 1, "x": to_value(&basis.elements()[i]), "y": to_value(&basis.elements()[j])});
            if let Some((r, c, d)) = br.homogeneity_violation(want) {
                return Some(Failure {
                    case: idx,
                    what: format!("entry ({}, {}) of the bracket has degree {d}", r + 1, c + 1),
                    witness: witness(),
                    expected: to_value(&want),
                    got: to_value(&d),
                });
            }
            if solver.solve(br.entries()).is_none() {
                return Some(Failure {
                    case: idx,
                    what: "bracket leaves the span of the basis".into(),
                    witness: witness(),
                    expected: json!("element of the span"),
                    got: to_value(br),
                });
            }
            if native {
                let m = is_member(family, br).expect("signature checked");
                if let Some(v) = m.violation {
                    return Some(Failure {
                        case: idx,
                        what: format!("bracket violates {}", v.condition),
                        witness: witness(),
                        expected: json!("0"),
                        got: to_value(&v),
                    });
                }
            }
            None
        })
        .collect();
    for o in outcomes {
        report.record(o);
    }
    Ok(report.finish())
}

/// `⟦x, y⟧ = -(-1)^(a·b) ⟦y, x⟧` for all unordered pairs, including `x = y`.
pub fn check_antisymmetry(basis: &GradedBasis, rule: SignRule) -> CheckReport {
    let table = bracket_table(basis, rule);
    antisymmetry_from_table(basis, rule, &table)
}

fn antisymmetry_from_table(basis: &GradedBasis, rule: SignRule, table: &[GradedMatrix]) -> CheckReport {
    let mut report = builder("symmetry", basis, rule);
    let n = basis.len();
    for i in 0..n {
        for j in i..n {
            let sign = Scalar::from_int(rule.sign(basis.degree_of(i), basis.degree_of(j)));
            let lhs = table[i * n + j].entries();
            let rhs = -&table[j * n + i].entries().scale(&sign);
            let case = report.next_case();
            report.record((lhs != &rhs).then(|| Failure {
                case,
                what: "graded antisymmetry".into(),
                witness: json!({"i": i + 1, "j": j + 1, "x": to_value(&basis.elements()[i]), "y": to_value(&basis.elements()[j])}),
                expected: to_value(&rhs.nonzero_entries().map(|(r, c, v)| (r + 1, c + 1, v.clone())).collect::<Vec<_>>()),
                got: to_value(&table[i * n + j]),
            }));
        }
    }
    report.finish()
}

/// `⟦x,⟦y,z⟧⟧ = ⟦⟦x,y⟧,z⟧ + (-1)^(a·b) ⟦y,⟦x,z⟧⟧`.
///
/// Exhaustive over all ordered triples up to [`EXHAUSTIVE_JACOBI_LIMIT`] basis elements,
/// otherwise [`SAMPLED_JACOBI_TRIPLES`] triples drawn with a fixed seed.
pub fn check_jacobi(basis: &GradedBasis, rule: SignRule) -> CheckReport {
    let table = bracket_table(basis, rule);
    jacobi_from_table(basis, rule, &table)
}

fn jacobi_triples(n: usize) -> (Vec<(usize, usize, usize)>, bool) {
    if n <= EXHAUSTIVE_JACOBI_LIMIT {
        let all = (0..n)
            .flat_map(|i| (0..n).flat_map(move |j| (0..n).map(move |k| (i, j, k))))
            .collect();
        (all, true)
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(JACOBI_SEED);
        let sampled = (0..SAMPLED_JACOBI_TRIPLES)
            .map(|_| (rng.random_range(0..n), rng.random_range(0..n), rng.random_range(0..n)))
            .collect();
        (sampled, false)
    }
}

type Sparse = Vec<(usize, usize, Scalar)>;

fn sparse(m: &ExactMatrix) -> Sparse {
    m.nonzero_entries().map(|(j, k, v)| (j, k, v.clone())).collect()
}

/// `acc += c ⟦x, y⟧` with `c = ±1`, where `x` and `y` are homogeneous of degrees `a` and `b`.
fn add_bracket(acc: &mut [Scalar], n: usize, c: i64, x: (&Sparse, Degree), y: (&Sparse, Degree), rule: SignRule) {
    let s = rule.sign(x.1, y.1);
    for (left, right, coeff) in [(x.0, y.0, c), (y.0, x.0, -c * s)] {
        for (i, k, u) in left {
            for (k2, j, v) in right {
                if k == k2 {
                    let term = u * v;
                    if coeff == 1 {
                        acc[i * n + j] += &term;
                    } else {
                        acc[i * n + j] -= &term;
                    }
                }
            }
        }
    }
}

fn jacobi_from_table(basis: &GradedBasis, rule: SignRule, table: &[GradedMatrix]) -> CheckReport {
    let mut report = builder("jacobi", basis, rule);
    let el = basis.elements();
    let n = el.len();
    let size = basis.signature().len();
    let degrees = basis.degrees();
    let elements: Vec<Sparse> = el.iter().map(|e| sparse(e.entries())).collect();
    let brackets: Vec<Sparse> = table.iter().map(|t| sparse(t.entries())).collect();
    let (triples, exhaustive) = jacobi_triples(n);
    let outcomes: Vec<Option<Failure>> = triples
        .par_iter()
        .enumerate()
        .map(|(case, &(i, j, k))| {
            let (ai, aj, ak) = (degrees[i], degrees[j], degrees[k]);
            let mut acc = vec![Scalar::zero(); size * size];
            add_bracket(
                &mut acc,
                size,
                1,
                (&elements[i], ai),
                (&brackets[j * n + k], aj + ak),
                rule,
            );
            add_bracket(
                &mut acc,
                size,
                -1,
                (&brackets[i * n + j], ai + aj),
                (&elements[k], ak),
                rule,
            );
            add_bracket(
                &mut acc,
                size,
                -rule.sign(ai, aj),
                (&elements[j], aj),
                (&brackets[i * n + k], ai + ak),
                rule,
            );
            if acc.iter().all(Scalar::is_zero) {
                return None;
            }
            Some(jacobi_witness(basis, rule, table, case, (i, j, k)))
        })
        .collect();
    for o in outcomes {
        report.record(o);
    }
    report.metric("exhaustive", exhaustive as i64);
    report.finish()
}

fn jacobi_witness(
    basis: &GradedBasis,
    rule: SignRule,
    table: &[GradedMatrix],
    case: usize,
    (i, j, k): (usize, usize, usize),
) -> Failure {
    let el = basis.elements();
    let n = el.len();
    let (x, y, z) = (&el[i], &el[j], &el[k]);
    let lhs = x.bracket(&table[j * n + k], rule).expect("shared signature");
    let first = table[i * n + j].bracket(z, rule).expect("shared signature");
    let second = y.bracket(&table[i * n + k], rule).expect("shared signature");
    let sign = Scalar::from_int(rule.sign(basis.degree_of(i), basis.degree_of(j)));
    let mut rhs = first.entries().clone();
    rhs.add_scaled(&sign, second.entries()).expect("same shape");
    Failure {
        case,
        what: "graded Jacobi identity".into(),
        witness: json!({"i": i + 1, "j": j + 1, "k": k + 1, "x": to_value(x), "y": to_value(y), "z": to_value(z)}),
        expected: to_value(&GradedMatrix::new(x.shared_signature().clone(), rhs).expect("square")),
        got: to_value(&lhs),
    }
}

/// Grading closure, graded antisymmetry and graded Jacobi on one shared bracket table.
pub fn check_axioms(basis: &GradedBasis, rule: SignRule) -> Result<CheckReport> {
    let table = bracket_table(basis, rule);
    let closure = check_closure(basis, rule)?;
    let symmetry = antisymmetry_from_table(basis, rule, &table);
    let jacobi = jacobi_from_table(basis, rule, &table);
    Ok(CheckReport::merge("axioms", vec![closure, symmetry, jacobi]))
}

/// The four ways of writing the twelve-term associativity identity with commutators and
/// anticommutators. Only the entries are used, so signatures may differ.
pub fn check_four_identities(x: &GradedMatrix, y: &GradedMatrix, z: &GradedMatrix) -> Result<CheckReport> {
    check_four_identities_exact(x.entries(), y.entries(), z.entries())
}

/// [`check_four_identities`] on plain square matrices.
pub fn check_four_identities_exact(x: &ExactMatrix, y: &ExactMatrix, z: &ExactMatrix) -> Result<CheckReport> {
    let mut report = ReportBuilder::new("identities");
    four_identities_into(&mut report, x, y, z)?;
    Ok(report.finish())
}

fn four_identities_into(report: &mut ReportBuilder, x: &ExactMatrix, y: &ExactMatrix, z: &ExactMatrix) -> Result<()> {
    for m in [y, z] {
        if m.shape() != x.shape() || !m.is_square() {
            return Err(Error::ShapeMismatch {
                expected: x.shape(),
                got: m.shape(),
            });
        }
    }
    let c = |a: &ExactMatrix, b: &ExactMatrix| a.commutator(b).expect("same shape");
    let a = |a: &ExactMatrix, b: &ExactMatrix| a.anticommutator(b).expect("same shape");
    let sums = [
        (
            "(a) [x,[y,z]] + [y,[z,x]] + [z,[x,y]]",
            &(&c(x, &c(y, z)) + &c(y, &c(z, x))) + &c(z, &c(x, y)),
        ),
        (
            "(b) [x,{y,z}] + [y,{z,x}] + [z,{x,y}]",
            &(&c(x, &a(y, z)) + &c(y, &a(z, x))) + &c(z, &a(x, y)),
        ),
        (
            "(c) [x,{y,z}] + {y,[z,x]} - {z,[x,y]}",
            &(&c(x, &a(y, z)) + &a(y, &c(z, x))) - &a(z, &c(x, y)),
        ),
        (
            "(d) [x,[y,z]] + {y,{z,x}} - {z,{x,y}}",
            &(&c(x, &c(y, z)) + &a(y, &a(z, x))) - &a(z, &a(x, y)),
        ),
    ];
    for (name, value) in sums {
        let case = report.next_case();
        report.record((!value.is_zero()).then(|| Failure {
            case,
            what: name.to_string(),
            witness: json!({"x": matrix_rows(x), "y": matrix_rows(y), "z": matrix_rows(z)}),
            expected: json!("zero matrix"),
            got: json!(matrix_rows(&value)),
        }));
    }
    Ok(())
}

fn matrix_rows(m: &ExactMatrix) -> Vec<Vec<Scalar>> {
    (0..m.rows())
        .map(|i| (0..m.cols()).map(|j| m[(i, j)].clone()).collect())
        .collect()
}

pub(crate) fn random_rational_matrix(rng: &mut impl Rng, size: usize) -> ExactMatrix {
    ExactMatrix::from_fn(size, size, |_, _| {
        Scalar::from_ratio(rng.random_range(-6..=6), rng.random_range(1..=5))
    })
}

/// Runs the four identities on `triples` random rational triples with sizes in `sizes`.
pub fn check_four_identities_random(triples: usize, sizes: std::ops::RangeInclusive<usize>, seed: u64) -> CheckReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = ReportBuilder::new("identities");
    for _ in 0..triples {
        let size = rng.random_range(sizes.clone());
        let x = random_rational_matrix(&mut rng, size);
        let y = random_rational_matrix(&mut rng, size);
        let z = random_rational_matrix(&mut rng, size);
        four_identities_into(&mut report, &x, &y, &z).expect("shapes agree by construction");
    }
    report.metric("triples", triples as i64);
    report.finish()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{build_basis, AlgebraFamily};

    #[test]
    fn sl_1111_passes_exhaustively() {
        let b = build_basis(&AlgebraFamily::sl(1, 1, 1, 1).unwrap()).unwrap();
        let r = check_axioms(&b, SignRule::Gla).unwrap();
        assert!(r.passed(), "{:?}", r.failures);
        assert_eq!(r.cases_run, 15 * 15 + 15 * 16 / 2 + 15 * 15 * 15);
        assert_eq!(r.metric("jacobi.exhaustive"), Some(1));
    }

    #[test]
    fn sp_passes() {
        let b = build_basis(&AlgebraFamily::sp(2, 1).unwrap()).unwrap();
        assert!(check_axioms(&b, SignRule::Gla).unwrap().passed());
    }

    #[test]
    fn corrupted_bracket_table_breaks_jacobi() {
        let b = build_basis(&AlgebraFamily::gl(1, 1, 0, 0).unwrap()).unwrap();
        let rule = SignRule::Gla;
        let mut table = bracket_table(&b, rule);
        assert!(jacobi_from_table(&b, rule, &table).passed());
        let n = b.len();
        let idx = (0..n * n).find(|&t| !table[t].entries().is_zero()).unwrap();
        table[idx] = table[idx].scale(&Scalar::from_int(2));
        let r = jacobi_from_table(&b, rule, &table);
        assert!(!r.passed());
        let w = &r.failures[0];
        assert_ne!(w.expected, w.got);
    }

    #[test]
    fn wrong_rule_is_caught_with_witness() {
        let b = build_basis(&AlgebraFamily::sl(1, 1, 0, 0).unwrap()).unwrap();
        let r = check_closure(&b, SignRule::Glsa).unwrap();
        assert!(!r.passed());
        assert!(!r.failures.is_empty() && r.failures.len() <= r.failed_cases);
        assert!(r.failures[0].witness.get("x").is_some());
    }

    #[test]
    fn identities_on_units_and_identity() {
        let e = |i, j| ExactMatrix::unit(3, 3, i, j);
        assert!(check_four_identities_exact(&e(0, 1), &e(1, 2), &e(2, 0))
            .unwrap()
            .passed());
        let id = ExactMatrix::identity(3);
        assert!(check_four_identities_exact(&id, &id, &id).unwrap().passed());
        assert!(check_four_identities_exact(&id, &ExactMatrix::identity(2), &id).is_err());
    }

    #[test]
    fn random_identities() {
        let r = check_four_identities_random(50, 2..=5, 7);
        assert!(r.passed());
        assert_eq!(r.cases_run, 200);
    }
}
