use std::sync::Arc;

use serde::Serialize;

use super::family::{AlgebraFamily, FamilyKind};
use crate::error::{Error, Result};
use crate::exactnum::{ExactMatrix, Scalar};
use crate::graded::GradedMatrix;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize)]
pub enum FormLabel {
    J,
    K,
    #[serde(rename = "K'")]
    KPrime,
}

/// The fixed matrix `M` with `family = {A : A^T M + M A = 0}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DefiningForm {
    pub label: FormLabel,
    pub matrix: GradedMatrix,
}

/// Places `sign * I` blocks into an otherwise zero matrix.
/// Each item is `(row_block, col_block, sign)` over blocks of the given sizes.
fn block_identity_matrix(sizes: &[usize], blocks: &[(usize, usize, i64)]) -> ExactMatrix {
    let offsets: Vec<usize> = sizes
        .iter()
        .scan(0, |acc, &s| {
            let start = *acc;
            *acc += s;
            Some(start)
        })
        .collect();
    let n: usize = sizes.iter().sum();
    let mut m = ExactMatrix::zeros(n, n);
    for &(bi, bj, sign) in blocks {
        assert_eq!(sizes[bi], sizes[bj], "identity block must be square");
        for t in 0..sizes[bi] {
            m[(offsets[bi] + t, offsets[bj] + t)] = Scalar::from_int(sign);
        }
    }
    m
}

pub fn defining_form(f: &AlgebraFamily) -> Result<DefiningForm> {
    let Some((n, p)) = f.classical_params() else {
        return Err(Error::WrongFamilyKind(f.kind().to_string()));
    };
    let sizes = [p, n - p, p, n - p, 1];
    let (label, entries) = match f.kind() {
        FamilyKind::SpP => (
            FormLabel::J,
            block_identity_matrix(&sizes[..4], &[(0, 2, 1), (1, 3, 1), (2, 0, -1), (3, 1, 1)]),
        ),
        FamilyKind::SoPEven => (
            FormLabel::K,
            block_identity_matrix(&sizes[..4], &[(0, 2, 1), (1, 3, 1), (2, 0, 1), (3, 1, -1)]),
        ),
        FamilyKind::SoPOdd => (
            FormLabel::KPrime,
            block_identity_matrix(&sizes, &[(0, 2, 1), (1, 3, -1), (2, 0, 1), (3, 1, -1), (4, 4, 1)]),
        ),
        _ => unreachable!("classical params imply a classical kind"),
    };
    let matrix = GradedMatrix::new(Arc::new(f.signature()), entries)?;
    let degree = matrix
        .infer_degree()
        .ok_or_else(|| Error::Precondition(format!("defining form of {f} is not homogeneous")))?;
    Ok(DefiningForm {
        label,
        matrix: matrix.with_degree(degree)?,
    })
}

/// Which defining condition failed, and where.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub condition: String,
    /// 1-based position in the residual matrix; absent for the trace condition.
    pub position: Option<(usize, usize)>,
    pub value: Scalar,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Membership {
    pub violation: Option<Violation>,
}

impl Membership {
    pub fn is_member(&self) -> bool {
        self.violation.is_none()
    }
}

/// The linear conditions cutting a family out of gl.
#[derive(Clone, Debug)]
pub(crate) enum Constraints {
    None,
    Traceless,
    /// Traceless and `A^T + A = 0`.
    GradedAntisymmetric,
    /// Traceless and `A^T M + M A = 0`.
    Form(DefiningForm),
}

impl Constraints {
    pub(crate) fn for_family(f: &AlgebraFamily) -> Result<Self> {
        Ok(match f.kind() {
            FamilyKind::Gl => Constraints::None,
            FamilyKind::Sl => Constraints::Traceless,
            FamilyKind::SoGraded => Constraints::GradedAntisymmetric,
            _ => Constraints::Form(defining_form(f)?),
        })
    }

    pub(crate) fn has_trace(&self) -> bool {
        !matches!(self, Constraints::None)
    }

    pub(crate) fn condition_name(&self) -> String {
        match self {
            Constraints::None | Constraints::Traceless => String::new(),
            Constraints::GradedAntisymmetric => "A^T + A = 0".into(),
            Constraints::Form(form) => {
                let m = match form.label {
                    FormLabel::J => "J",
                    FormLabel::K => "K",
                    FormLabel::KPrime => "K'",
                };
                format!("A^T {m} + {m} A = 0")
            }
        }
    }

    /// Matrix residual of the non-trace condition; `None` when there is none.
    pub(crate) fn residual(&self, a: &GradedMatrix) -> Result<Option<ExactMatrix>> {
        Ok(match self {
            Constraints::None | Constraints::Traceless => None,
            Constraints::GradedAntisymmetric => Some(a.graded_transpose().entries().try_add(a.entries())?),
            Constraints::Form(form) => {
                let m = form.matrix.entries();
                let lhs = a.graded_transpose().entries().try_mul(m)?;
                Some(lhs.try_add(&m.try_mul(a.entries())?)?)
            }
        })
    }

    pub(crate) fn check(&self, a: &GradedMatrix) -> Result<Membership> {
        if self.has_trace() {
            let tr = a.trace();
            if !tr.is_zero() {
                return Ok(Membership {
                    violation: Some(Violation {
                        condition: "trace = 0".into(),
                        position: None,
                        value: tr,
                    }),
                });
            }
        }
        let violation = self.residual(a)?.and_then(|res| {
            res.nonzero_entries().next().map(|(j, k, v)| Violation {
                condition: self.condition_name(),
                position: Some((j + 1, k + 1)),
                value: v.clone(),
            })
        });
        Ok(Membership { violation })
    }
}

/// Checks the defining conditions of `f` on `a`, which must use the family's signature.
pub fn is_member(f: &AlgebraFamily, a: &GradedMatrix) -> Result<Membership> {
    if *a.signature() != f.signature() {
        return Err(Error::SignatureMismatch);
    }
    Constraints::for_family(f)?.check(a)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graded::Degree;

    #[test]
    fn j_is_graded_antisymmetric_and_orthogonal() {
        let f = AlgebraFamily::sp(2, 1).unwrap();
        let j = defining_form(&f).unwrap().matrix;
        assert_eq!(j.degree(), Some(Degree::D11));
        assert_eq!(j.graded_transpose(), j.neg());
        let jt = j.entries().transpose();
        assert_eq!(j.entries() * &jt, ExactMatrix::identity(4));
    }

    #[test]
    fn k_is_graded_symmetric_and_orthogonal() {
        for (n, p) in [(2, 1), (3, 0), (3, 2)] {
            let f = AlgebraFamily::so_even(n, p).unwrap();
            let k = defining_form(&f).unwrap().matrix;
            assert_eq!(k.graded_transpose(), k);
            assert_eq!(k.entries() * &k.entries().transpose(), ExactMatrix::identity(2 * n));
        }
    }

    #[test]
    fn k_prime_is_degree_zero() {
        let f = AlgebraFamily::so_odd(3, 1).unwrap();
        let form = defining_form(&f).unwrap();
        assert_eq!(form.label, FormLabel::KPrime);
        assert_eq!(form.matrix.degree(), Some(Degree::D00));
        assert_eq!(form.matrix.graded_transpose(), form.matrix);
    }

    #[test]
    fn wrong_kind() {
        let f = AlgebraFamily::sl(1, 1, 0, 0).unwrap();
        assert!(matches!(defining_form(&f), Err(Error::WrongFamilyKind(_))));
    }

    #[test]
    fn zero_and_identity_membership() {
        for f in [
            AlgebraFamily::gl(1, 1, 1, 0).unwrap(),
            AlgebraFamily::sl(1, 1, 1, 0).unwrap(),
            AlgebraFamily::so_graded(1, 1, 1, 0).unwrap(),
            AlgebraFamily::sp(2, 1).unwrap(),
            AlgebraFamily::so_even(2, 1).unwrap(),
            AlgebraFamily::so_odd(2, 1).unwrap(),
        ] {
            let sig = Arc::new(f.signature());
            assert!(is_member(&f, &GradedMatrix::zero(sig.clone())).unwrap().is_member());
            let id = is_member(&f, &GradedMatrix::identity(sig)).unwrap();
            assert_eq!(id.is_member(), f.kind() == FamilyKind::Gl, "{f}");
        }
        let sl = AlgebraFamily::sl(1, 1, 0, 0).unwrap();
        let v = is_member(&sl, &GradedMatrix::identity(Arc::new(sl.signature()))).unwrap();
        assert_eq!(v.violation.unwrap().value, Scalar::from_int(2));
    }

    #[test]
    fn signature_must_match() {
        let f = AlgebraFamily::sp(2, 1).unwrap();
        let other = Arc::new(crate::graded::GradingSignature::sorted(1, 1, 1, 1));
        assert!(matches!(
            is_member(&f, &GradedMatrix::zero(other)),
            Err(Error::SignatureMismatch)
        ));
    }
}
