//! Two sorts of parafermion generators inside the odd orthogonal family, their triple
//! relations, and the graded subspaces they span.

use std::fmt;
use std::sync::Arc;

use rayon::prelude::*;
use serde::Serialize;
use serde_json::json;

use crate::axioms::{CheckReport, Failure};
use crate::error::{Error, Result};
use crate::exactnum::{span_dim, ExactMatrix, Scalar};
use crate::families::{build_basis, is_member, AlgebraFamily, DimensionProfile};
use crate::graded::{Degree, GradedMatrix};
use crate::json::to_value;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize)]
pub enum Sign {
    #[serde(rename = "+")]
    Plus,
    #[serde(rename = "-")]
    Minus,
}

impl Sign {
    pub const BOTH: [Sign; 2] = [Sign::Plus, Sign::Minus];

    pub fn value(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        })
    }
}

/// Which relation a case exercises.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub enum Relation {
    /// Nested commutators, all indices in one sort.
    #[serde(rename = "PF")]
    Commutator,
    /// Nested anticommutators, first two indices in different sorts.
    #[serde(rename = "PFrel")]
    Anticommutator,
}

/// One instance of a triple relation; indices are 1-based.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub struct TripleRelationCase {
    pub j: usize,
    pub k: usize,
    pub l: usize,
    pub xi: Sign,
    pub eta: Sign,
    pub epsilon: Sign,
    pub relation: Relation,
}

/// Generators `f_j^±`, `j = 1..n`, inside `so_q(2n+1)`. Sort one is `j ≤ q`.
#[derive(Clone, Debug)]
pub struct ParafermionSystem {
    n: usize,
    q: usize,
    family: AlgebraFamily,
    generators: Vec<GradedMatrix>,
}

impl ParafermionSystem {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn q(&self) -> usize {
        self.q
    }

    pub fn family(&self) -> &AlgebraFamily {
        &self.family
    }

    /// `f_j^sign` with `j` 1-based.
    pub fn generator(&self, j: usize, sign: Sign) -> &GradedMatrix {
        assert!((1..=self.n).contains(&j), "generator index {j} out of 1..={}", self.n);
        &self.generators[2 * (j - 1) + usize::from(sign == Sign::Minus)]
    }

    pub fn generators(&self) -> impl Iterator<Item = (usize, Sign, &GradedMatrix)> {
        (1..=self.n).flat_map(move |j| Sign::BOTH.into_iter().map(move |s| (j, s, self.generator(j, s))))
    }

    pub fn in_first_sort(&self, j: usize) -> bool {
        j <= self.q
    }

    pub fn degree_of(&self, j: usize) -> Degree {
        if self.in_first_sort(j) {
            Degree::D01
        } else {
            Degree::D10
        }
    }

    fn same_sort(&self, j: usize, k: usize) -> bool {
        self.in_first_sort(j) == self.in_first_sort(k)
    }
}

/// `f_j^- = √2 (e_{j,2n+1} - e_{2n+1,n+j})`, `f_j^+ = √2 (e_{2n+1,j} - e_{n+j,2n+1})`.
pub fn build_system(n: usize, q: usize) -> Result<ParafermionSystem> {
    if n == 0 || q > n {
        return Err(Error::InvalidParameters(format!(
            "need n >= 1 and 0 <= q <= n, got n = {n}, q = {q}"
        )));
    }
    let family = AlgebraFamily::so_odd(n, q)?;
    let signature = Arc::new(family.signature());
    let size = 2 * n + 1;
    let last = 2 * n;
    let root2 = Scalar::sqrt2();
    let mut generators = Vec::with_capacity(2 * n);
    for j in 0..n {
        let degree = if j < q { Degree::D01 } else { Degree::D10 };
        let mut plus = ExactMatrix::zeros(size, size);
        plus[(last, j)] = root2.clone();
        plus[(n + j, last)] = -&root2;
        let mut minus = ExactMatrix::zeros(size, size);
        minus[(j, last)] = root2.clone();
        minus[(last, n + j)] = -&root2;
        for m in [plus, minus] {
            let g = GradedMatrix::homogeneous(signature.clone(), m, degree)?;
            if let Some(v) = is_member(&family, &g)?.violation {
                return Err(Error::Precondition(format!(
                    "generator {} violates {}",
                    j + 1,
                    v.condition
                )));
            }
            generators.push(g);
        }
    }
    Ok(ParafermionSystem {
        n,
        q,
        family,
        generators,
    })
}

fn half_square_diff(a: Sign, b: Sign) -> i64 {
    let d = a.value() - b.value();
    d * d / 2
}

fn delta(a: usize, b: usize) -> i64 {
    i64::from(a == b)
}

fn sign_patterns() -> impl Iterator<Item = (Sign, Sign, Sign)> {
    Sign::BOTH.into_iter().flat_map(|x| {
        Sign::BOTH
            .into_iter()
            .flat_map(move |y| Sign::BOTH.into_iter().map(move |e| (x, y, e)))
    })
}

/// Left and right side of one case as plain matrices.
pub fn evaluate_case(sys: &ParafermionSystem, c: &TripleRelationCase) -> (ExactMatrix, ExactMatrix) {
    let fj = sys.generator(c.j, c.xi).entries();
    let fk = sys.generator(c.k, c.eta).entries();
    let fl = sys.generator(c.l, c.epsilon).entries();
    let first = half_square_diff(c.epsilon, c.eta) * delta(c.k, c.l);
    let second = half_square_diff(c.epsilon, c.xi) * delta(c.j, c.l);
    let (lhs, second_sign) = match c.relation {
        Relation::Commutator => (fj.commutator(fk).and_then(|m| m.commutator(fl)), -1),
        Relation::Anticommutator => (fj.anticommutator(fk).and_then(|m| m.anticommutator(fl)), 1),
    };
    let mut rhs = fj.scale(&Scalar::from_int(first));
    rhs.add_scaled(&Scalar::from_int(second_sign * second), fk)
        .expect("same shape");
    (lhs.expect("same shape"), rhs)
}

fn run_cases(sys: &ParafermionSystem, name: &str, cases: Vec<TripleRelationCase>) -> CheckReport {
    let outcomes: Vec<Option<Failure>> = cases
        .par_iter()
        .enumerate()
        .map(|(idx, c)| {
            let (lhs, rhs) = evaluate_case(sys, c);
            (lhs != rhs).then(|| Failure {
                case: idx,
                what: format!(
                    "{:?} relation at j={}, k={}, l={}, signs ({},{},{})",
                    c.relation, c.j, c.k, c.l, c.xi, c.eta, c.epsilon
                ),
                witness: json!({
                    "case": to_value(c),
                    "f_j": to_value(sys.generator(c.j, c.xi)),
                    "f_k": to_value(sys.generator(c.k, c.eta)),
                    "f_l": to_value(sys.generator(c.l, c.epsilon)),
                }),
                expected: json!(entry_list(&rhs)),
                got: json!(entry_list(&lhs)),
            })
        })
        .collect();
    crate::axioms::report_from_outcomes(name, Some(*sys.family()), outcomes)
}

fn entry_list(m: &ExactMatrix) -> Vec<(usize, usize, Scalar)> {
    m.nonzero_entries().map(|(j, k, v)| (j + 1, k + 1, v.clone())).collect()
}

/// All same-sort `(j, k, l)` with all 8 sign patterns.
pub fn pf_cases(sys: &ParafermionSystem) -> Vec<TripleRelationCase> {
    let n = sys.n;
    let mut out = Vec::new();
    for j in 1..=n {
        for k in 1..=n {
            for l in 1..=n {
                if !(sys.same_sort(j, k) && sys.same_sort(k, l)) {
                    continue;
                }
                for (xi, eta, epsilon) in sign_patterns() {
                    out.push(TripleRelationCase {
                        j,
                        k,
                        l,
                        xi,
                        eta,
                        epsilon,
                        relation: Relation::Commutator,
                    });
                }
            }
        }
    }
    out
}

/// All `(j, k)` in different sorts, every `l`, all 8 sign patterns.
pub fn pfrel_cases(sys: &ParafermionSystem) -> Vec<TripleRelationCase> {
    let n = sys.n;
    let mut out = Vec::new();
    for j in 1..=n {
        for k in 1..=n {
            if sys.same_sort(j, k) {
                continue;
            }
            for l in 1..=n {
                for (xi, eta, epsilon) in sign_patterns() {
                    out.push(TripleRelationCase {
                        j,
                        k,
                        l,
                        xi,
                        eta,
                        epsilon,
                        relation: Relation::Anticommutator,
                    });
                }
            }
        }
    }
    out
}

/// `[[f_j^ξ, f_k^η], f_l^ε] = ½(ε-η)² δ_kl f_j^ξ - ½(ε-ξ)² δ_jl f_k^η` within each sort.
pub fn check_pf(sys: &ParafermionSystem) -> CheckReport {
    run_cases(sys, "pf", pf_cases(sys))
}

/// `{{f_j^ξ, f_k^η}, f_l^ε} = ½(ε-η)² δ_kl f_j^ξ + ½(ε-ξ)² δ_jl f_k^η` across sorts.
/// Requires both sorts to be nonempty.
pub fn check_pfrel(sys: &ParafermionSystem) -> Result<CheckReport> {
    if sys.q == 0 || sys.q == sys.n {
        return Err(Error::Precondition(format!(
            "cross-sort relations need 1 <= q <= n-1, got n = {}, q = {}",
            sys.n, sys.q
        )));
    }
    Ok(run_cases(sys, "pfrel", pfrel_cases(sys)))
}

/// Spans of the generators of each sort, of same-sort commutators and of cross-sort
/// anticommutators.
pub fn subspace_spans(sys: &ParafermionSystem) -> DimensionProfile {
    let gens: Vec<(usize, &GradedMatrix)> = sys.generators().map(|(j, _, g)| (j, g)).collect();
    let span = |ms: Vec<ExactMatrix>| span_dim(ms.iter()).expect("same shape") as i64;
    let sort = |first: bool| {
        span(
            gens.iter()
                .filter(|(j, _)| sys.in_first_sort(*j) == first)
                .map(|(_, g)| g.entries().clone())
                .collect(),
        )
    };
    let mut same = Vec::new();
    let mut cross = Vec::new();
    for (a, &(j, x)) in gens.iter().enumerate() {
        for &(k, y) in &gens[a + 1..] {
            if sys.same_sort(j, k) {
                same.push(x.entries().commutator(y.entries()).expect("same shape"));
            } else {
                cross.push(x.entries().anticommutator(y.entries()).expect("same shape"));
            }
        }
    }
    DimensionProfile::new(span(same), sort(true), sort(false), span(cross))
}

/// Compares [`subspace_spans`] with the measured profile of `so_q(2n+1)`.
pub fn identify_subspaces(sys: &ParafermionSystem) -> Result<CheckReport> {
    let spans = subspace_spans(sys);
    let measured = build_basis(sys.family())?.profile();
    let names = [
        "g00 = span of same-sort commutators",
        "g01 = span of sort one",
        "g10 = span of sort two",
        "g11 = span of cross-sort anticommutators",
    ];
    let outcomes = Degree::ALL
        .into_iter()
        .zip(names)
        .enumerate()
        .map(|(case, (d, what))| {
            (spans.get(d) != measured.get(d)).then(|| Failure {
                case,
                what: what.into(),
                witness: json!({"n": sys.n, "q": sys.q}),
                expected: json!(measured.get(d)),
                got: json!(spans.get(d)),
            })
        })
        .collect();
    let mut report = crate::axioms::report_from_outcomes("subspaces", Some(*sys.family()), outcomes);
    for d in Degree::ALL {
        report
            .metrics
            .insert(format!("span_d{}{}", d.a1(), d.a2()), spans.get(d));
    }
    Ok(report)
}

/// Compact summary for the command line.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ParafermionSummary {
    pub n: usize,
    pub q: usize,
    pub pf_cases: usize,
    pub pfrel_cases: usize,
    pub pass: bool,
    pub subspace_spans: DimensionProfile,
}

/// Runs every parafermion check. Cross-sort relations are skipped (0 cases) when a sort is empty.
pub fn run_all(n: usize, q: usize) -> Result<(ParafermionSummary, Vec<CheckReport>)> {
    let sys = build_system(n, q)?;
    let pf = check_pf(&sys);
    let pfrel = if q == 0 || q == n {
        None
    } else {
        Some(check_pfrel(&sys)?)
    };
    let subspaces = identify_subspaces(&sys)?;
    let mut reports = vec![pf];
    reports.extend(pfrel);
    reports.push(subspaces);
    let summary = ParafermionSummary {
        n,
        q,
        pf_cases: reports[0].cases_run,
        pfrel_cases: reports.iter().find(|r| r.check == "pfrel").map_or(0, |r| r.cases_run),
        pass: reports.iter().all(CheckReport::passed),
        subspace_spans: subspace_spans(&sys),
    };
    Ok((summary, reports))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_generator_entries() {
        let sys = build_system(1, 1).unwrap();
        let f = sys.generator(1, Sign::Minus).entries();
        assert_eq!(f[(0, 2)], Scalar::sqrt2());
        assert_eq!(f[(2, 1)], -&Scalar::sqrt2());
        assert_eq!(f.nonzero_entries().count(), 2);
    }

    #[test]
    fn degrees_follow_sorts() {
        let sys = build_system(2, 1).unwrap();
        for s in Sign::BOTH {
            assert_eq!(sys.generator(1, s).degree(), Some(Degree::D01));
            assert_eq!(sys.generator(2, s).degree(), Some(Degree::D10));
        }
        let sys = build_system(2, 0).unwrap();
        assert!(sys.generators().all(|(_, _, g)| g.degree() == Some(Degree::D10)));
    }

    #[test]
    fn commutator_regression() {
        let sys = build_system(1, 1).unwrap();
        let p = sys.generator(1, Sign::Plus).entries();
        let m = sys.generator(1, Sign::Minus).entries();
        let lhs = p.commutator(m).unwrap().commutator(m).unwrap();
        assert_eq!(lhs, m.scale(&Scalar::from_int(-2)));
        let ppp = p.commutator(p).unwrap().commutator(p).unwrap();
        assert!(ppp.is_zero());
    }

    #[test]
    fn anticommutator_regressions() {
        let sys = build_system(2, 1).unwrap();
        let f = |j, s| sys.generator(j, s).entries().clone();
        let inner = f(1, Sign::Plus).anticommutator(&f(2, Sign::Minus)).unwrap();
        assert_eq!(
            inner.anticommutator(&f(2, Sign::Plus)).unwrap(),
            f(1, Sign::Plus).scale(&Scalar::from_int(2))
        );
        assert_eq!(
            inner.anticommutator(&f(1, Sign::Minus)).unwrap(),
            f(2, Sign::Minus).scale(&Scalar::from_int(2))
        );
        let sys = build_system(3, 1).unwrap();
        let g = |j, s| sys.generator(j, s).entries().clone();
        let zero = g(1, Sign::Plus)
            .anticommutator(&g(2, Sign::Minus))
            .unwrap()
            .anticommutator(&g(3, Sign::Plus))
            .unwrap();
        assert!(zero.is_zero());
    }

    #[test]
    fn single_sort_case_count() {
        let sys = build_system(2, 0).unwrap();
        let r = check_pf(&sys);
        assert!(r.passed());
        assert_eq!(r.cases_run, 64);
        assert!(check_pfrel(&sys).is_err());
    }

    #[test]
    fn spans_match_profile() {
        let r = identify_subspaces(&build_system(3, 1).unwrap()).unwrap();
        assert!(r.passed(), "{:?}", r.failures);
        assert_eq!(r.metric("span_d00"), Some(7));
        let r = identify_subspaces(&build_system(2, 1).unwrap()).unwrap();
        assert_eq!(r.metric("span_d11"), Some(4));
        let r = identify_subspaces(&build_system(1, 1).unwrap()).unwrap();
        assert_eq!(r.metric("span_d10"), Some(0));
        assert_eq!(r.metric("span_d11"), Some(0));
    }

    #[test]
    fn summary_json_shape() {
        let (s, _) = run_all(2, 1).unwrap();
        assert!(s.pass);
        let v = serde_json::to_value(&s).unwrap();
        assert_eq!(v["subspace_spans"]["d11"], 4);
        assert_eq!(v["pfrel_cases"], 2 * 2 * 8);
    }
}
