use std::sync::Arc;

use super::degree::{Degree, DegreePermutation, SignRule};
use super::signature::GradingSignature;
use crate::error::{Error, Result};
use crate::exactnum::{ExactMatrix, Scalar};

/// An `n x n` matrix acting on a graded space, optionally tagged with a degree.
///
/// When a degree is declared every nonzero entry sits in a position of that degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedMatrix {
    signature: Arc<GradingSignature>,
    entries: ExactMatrix,
    degree: Option<Degree>,
}

/// The four homogeneous components of a graded matrix, indexed by [`Degree::index`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomogeneousDecomposition {
    components: [GradedMatrix; 4],
}

impl HomogeneousDecomposition {
    pub fn component(&self, d: Degree) -> &GradedMatrix {
        &self.components[d.index()]
    }

    pub fn iter(&self) -> impl Iterator<Item = (Degree, &GradedMatrix)> {
        Degree::ALL.into_iter().zip(self.components.iter())
    }

    /// Components that are not identically zero.
    pub fn nonzero(&self) -> impl Iterator<Item = (Degree, &GradedMatrix)> {
        self.iter().filter(|(_, m)| !m.is_zero())
    }

    pub fn sum(&self) -> GradedMatrix {
        let mut acc = GradedMatrix::zero(self.components[0].signature.clone());
        for c in &self.components {
            acc.entries
                .add_scaled(&Scalar::one(), &c.entries)
                .expect("components share a shape");
        }
        acc.degree = None;
        acc
    }
}

impl GradedMatrix {
    pub fn new(signature: impl Into<Arc<GradingSignature>>, entries: ExactMatrix) -> Result<Self> {
        let signature = signature.into();
        let n = signature.len();
        if entries.shape() != (n, n) {
            return Err(Error::ShapeMismatch {
                expected: (n, n),
                got: entries.shape(),
            });
        }
        Ok(GradedMatrix {
            signature,
            entries,
            degree: None,
        })
    }

    /// Builds a matrix and checks that it is homogeneous of `degree`.
    pub fn homogeneous(
        signature: impl Into<Arc<GradingSignature>>,
        entries: ExactMatrix,
        degree: Degree,
    ) -> Result<Self> {
        GradedMatrix::new(signature, entries)?.with_degree(degree)
    }

    pub fn with_degree(mut self, degree: Degree) -> Result<Self> {
        if !self.is_homogeneous_of(degree) {
            return Err(Error::NotHomogeneous(degree));
        }
        self.degree = Some(degree);
        Ok(self)
    }

    /// Drops the declared degree.
    pub fn untagged(mut self) -> Self {
        self.degree = None;
        self
    }

    pub fn zero(signature: impl Into<Arc<GradingSignature>>) -> Self {
        let signature = signature.into();
        let n = signature.len();
        GradedMatrix {
            signature,
            entries: ExactMatrix::zeros(n, n),
            degree: Some(Degree::D00),
        }
    }

    pub fn identity(signature: impl Into<Arc<GradingSignature>>) -> Self {
        let signature = signature.into();
        let n = signature.len();
        GradedMatrix {
            signature,
            entries: ExactMatrix::identity(n),
            degree: Some(Degree::D00),
        }
    }

    /// The matrix unit `e_{jk}` (0-based), tagged with its entry degree.
    pub fn unit(signature: impl Into<Arc<GradingSignature>>, j: usize, k: usize) -> Result<Self> {
        let signature = signature.into();
        let degree = signature.entry_degree(j, k)?;
        let n = signature.len();
        Ok(GradedMatrix {
            entries: ExactMatrix::unit(n, n, j, k),
            signature,
            degree: Some(degree),
        })
    }

    pub fn signature(&self) -> &GradingSignature {
        &self.signature
    }

    pub fn shared_signature(&self) -> &Arc<GradingSignature> {
        &self.signature
    }

    pub fn entries(&self) -> &ExactMatrix {
        &self.entries
    }

    pub fn into_entries(self) -> ExactMatrix {
        self.entries
    }

    pub fn n(&self) -> usize {
        self.signature.len()
    }

    pub fn degree(&self) -> Option<Degree> {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_zero()
    }

    pub fn is_homogeneous_of(&self, d: Degree) -> bool {
        self.entries
            .nonzero_entries()
            .all(|(j, k, _)| self.signature.entry(j, k) == d)
    }

    /// The common degree of all nonzero entries, `None` for the zero matrix or mixed support.
    pub fn infer_degree(&self) -> Option<Degree> {
        let mut found = None;
        for (j, k, _) in self.entries.nonzero_entries() {
            let d = self.signature.entry(j, k);
            match found {
                None => found = Some(d),
                Some(prev) if prev != d => return None,
                _ => {}
            }
        }
        found
    }

    /// Declared degree, falling back to the inferred one.
    pub fn effective_degree(&self) -> Option<Degree> {
        self.degree.or_else(|| self.infer_degree())
    }

    /// First nonzero entry whose position does not have the degree `d`.
    pub fn homogeneity_violation(&self, d: Degree) -> Option<(usize, usize, Degree)> {
        self.entries
            .nonzero_entries()
            .map(|(j, k, _)| (j, k, self.signature.entry(j, k)))
            .find(|&(_, _, e)| e != d)
    }

    pub(crate) fn same_signature(&self, other: &GradedMatrix) -> bool {
        Arc::ptr_eq(&self.signature, &other.signature) || self.signature == other.signature
    }

    fn check_signature(&self, other: &GradedMatrix) -> Result<()> {
        if self.same_signature(other) {
            Ok(())
        } else {
            Err(Error::SignatureMismatch)
        }
    }

    fn derived(&self, entries: ExactMatrix, degree: Option<Degree>) -> GradedMatrix {
        GradedMatrix {
            signature: self.signature.clone(),
            entries,
            degree,
        }
    }

    pub fn decompose(&self) -> HomogeneousDecomposition {
        let n = self.n();
        let mut parts: [ExactMatrix; 4] = std::array::from_fn(|_| ExactMatrix::zeros(n, n));
        for (j, k, v) in self.entries.nonzero_entries() {
            parts[self.signature.entry(j, k).index()][(j, k)] = v.clone();
        }
        let mut degrees = Degree::ALL.into_iter();
        HomogeneousDecomposition {
            components: parts.map(|m| self.derived(m, degrees.next())),
        }
    }

    pub fn try_add(&self, other: &GradedMatrix) -> Result<GradedMatrix> {
        self.check_signature(other)?;
        let degree = (self.degree == other.degree).then_some(self.degree).flatten();
        Ok(self.derived(self.entries.try_add(&other.entries)?, degree))
    }

    pub fn try_sub(&self, other: &GradedMatrix) -> Result<GradedMatrix> {
        self.check_signature(other)?;
        let degree = (self.degree == other.degree).then_some(self.degree).flatten();
        Ok(self.derived(self.entries.try_sub(&other.entries)?, degree))
    }

    pub fn scale(&self, k: &Scalar) -> GradedMatrix {
        self.derived(self.entries.scale(k), self.degree)
    }

    pub fn neg(&self) -> GradedMatrix {
        self.derived(-&self.entries, self.degree)
    }

    /// Associative product; the degree of a product of homogeneous factors is the sum.
    pub fn product(&self, other: &GradedMatrix) -> Result<GradedMatrix> {
        self.check_signature(other)?;
        let degree = match (self.degree, other.degree) {
            (Some(a), Some(b)) => Some(a + b),
            _ => None,
        };
        Ok(self.derived(self.entries.try_mul(&other.entries)?, degree))
    }

    /// `⟦x, y⟧ = xy - (-1)^(a·b) yx` for homogeneous `x`, `y`, extended bilinearly otherwise.
    pub fn bracket(&self, other: &GradedMatrix, rule: SignRule) -> Result<GradedMatrix> {
        self.check_signature(other)?;
        if let (Some(a), Some(b)) = (self.effective_degree(), other.effective_degree()) {
            return Ok(self.homogeneous_bracket(a, other, b, rule));
        }
        let n = self.n();
        let mut acc = ExactMatrix::zeros(n, n);
        let dx = self.decompose();
        let dy = other.decompose();
        for (a, x) in dx.nonzero() {
            for (b, y) in dy.nonzero() {
                let term = x.homogeneous_bracket(a, y, b, rule);
                acc.add_scaled(&Scalar::one(), &term.entries)?;
            }
        }
        Ok(self.derived(acc, None))
    }

    fn homogeneous_bracket(&self, a: Degree, other: &GradedMatrix, b: Degree, rule: SignRule) -> GradedMatrix {
        let xy = &self.entries * &other.entries;
        let yx = &other.entries * &self.entries;
        let entries = if rule.sign(a, b) == 1 { &xy - &yx } else { &xy + &yx };
        self.derived(entries, Some(a + b))
    }

    /// Graded transpose: `result(j, k) = (-1)^(a·d_j) m(k, j)` where `a = d_j + d_k` is the
    /// degree of the entry being moved. Always uses the GLA product.
    pub fn graded_transpose(&self) -> GradedMatrix {
        let n = self.n();
        let sig = &self.signature;
        let mut out = ExactMatrix::zeros(n, n);
        for (k, j, v) in self.entries.nonzero_entries() {
            let a = sig.entry(j, k);
            let dj = sig.coordinate(j);
            out[(j, k)] = if SignRule::Gla.sign(a, dj) == 1 { v.clone() } else { -v };
        }
        self.derived(out, self.degree)
    }

    pub fn trace(&self) -> Scalar {
        self.entries.trace()
    }

    /// Relabels coordinate degrees by `pi`; entries are unchanged and a declared degree `a`
    /// becomes `pi(a)`.
    pub fn relabel(&self, pi: &DegreePermutation) -> GradedMatrix {
        GradedMatrix {
            signature: Arc::new(self.signature.permute(pi)),
            entries: self.entries.clone(),
            degree: self.degree.map(|d| pi.apply(d)),
        }
    }

    /// Same entries viewed over another signature of the same size.
    pub fn with_signature(&self, signature: Arc<GradingSignature>) -> Result<GradedMatrix> {
        let m = GradedMatrix::new(signature, self.entries.clone())?;
        match self.degree {
            Some(d) => m.with_degree(d),
            None => Ok(m),
        }
    }
}

pub fn decompose(m: &GradedMatrix) -> HomogeneousDecomposition {
    m.decompose()
}

pub fn graded_product(x: &GradedMatrix, y: &GradedMatrix) -> Result<GradedMatrix> {
    x.product(y)
}

pub fn graded_bracket(x: &GradedMatrix, y: &GradedMatrix, rule: SignRule) -> Result<GradedMatrix> {
    x.bracket(y, rule)
}

pub fn graded_transpose(m: &GradedMatrix) -> GradedMatrix {
    m.graded_transpose()
}

pub fn trace(m: &GradedMatrix) -> Scalar {
    m.trace()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sig(ds: &[Degree]) -> Arc<GradingSignature> {
        Arc::new(GradingSignature::new(ds.to_vec()))
    }

    fn unit(s: &Arc<GradingSignature>, j: usize, k: usize) -> GradedMatrix {
        GradedMatrix::unit(s.clone(), j, k).unwrap()
    }

    #[test]
    fn decompose_routes_entries() {
        let s = sig(&[Degree::D00, Degree::D01]);
        let m = unit(&s, 0, 0).try_add(&unit(&s, 0, 1)).unwrap();
        let parts = m.decompose();
        assert_eq!(parts.component(Degree::D00).entries(), unit(&s, 0, 0).entries());
        assert_eq!(parts.component(Degree::D01).entries(), unit(&s, 0, 1).entries());
        assert!(parts.component(Degree::D10).is_zero());
        assert_eq!(parts.sum().entries(), m.entries());

        let z = GradedMatrix::zero(s.clone()).decompose();
        assert_eq!(z.nonzero().count(), 0);
        assert_eq!(unit(&s, 1, 0).decompose().nonzero().count(), 1);
    }

    #[test]
    fn products_of_units() {
        let s = sig(&[Degree::D00, Degree::D01, Degree::D10]);
        let p = unit(&s, 0, 1).product(&unit(&s, 1, 2)).unwrap();
        assert_eq!(p.entries(), unit(&s, 0, 2).entries());
        assert_eq!(p.degree(), Some(Degree::D10));
        let x = unit(&s, 1, 2);
        assert_eq!(
            x.product(&GradedMatrix::identity(s.clone())).unwrap().entries(),
            x.entries()
        );
        assert!(unit(&s, 0, 1).product(&unit(&s, 0, 2)).unwrap().is_zero());
    }

    #[test]
    fn bracket_of_odd_pair_is_anticommutator() {
        let s = sig(&[Degree::D00, Degree::D01, Degree::D10]);
        let x = unit(&s, 0, 1);
        let y = unit(&s, 1, 2);
        assert_eq!(y.degree(), Some(Degree::D11));
        let b = x.bracket(&y, SignRule::Gla).unwrap();
        assert_eq!(b.entries(), unit(&s, 0, 2).entries());
        assert_eq!(b.degree(), Some(Degree::D10));
    }

    #[test]
    fn same_degree_bracket_is_commutator() {
        let s = Arc::new(GradingSignature::sorted(1, 1, 2, 1));
        let a = unit(&s, 0, 2).try_add(&unit(&s, 1, 4)).unwrap();
        let b = unit(&s, 2, 0).try_add(&unit(&s, 4, 1)).unwrap();
        assert_eq!(a.degree(), Some(Degree::D10));
        let br = a.bracket(&b, SignRule::Gla).unwrap();
        assert_eq!(br.entries(), &a.entries().commutator(b.entries()).unwrap());
        let d = unit(&s, 0, 0);
        assert!(d.bracket(&d, SignRule::Gla).unwrap().is_zero());
    }

    #[test]
    fn bracket_requires_same_signature() {
        let s1 = sig(&[Degree::D00, Degree::D01]);
        let s2 = sig(&[Degree::D00, Degree::D10]);
        assert!(matches!(
            unit(&s1, 0, 1).bracket(&unit(&s2, 0, 1), SignRule::Gla),
            Err(Error::SignatureMismatch)
        ));
    }

    #[test]
    fn transpose_examples() {
        let s = sig(&[Degree::D00, Degree::D01, Degree::D10]);
        let t = unit(&s, 1, 2).graded_transpose();
        assert_eq!(t.entries(), &-unit(&s, 2, 1).entries());
        let d = unit(&s, 0, 0).try_add(&unit(&s, 1, 2).scale(&Scalar::zero())).unwrap();
        assert_eq!(d.graded_transpose().entries(), &d.entries().transpose());
    }

    #[test]
    fn homogeneity_is_checked() {
        let s = sig(&[Degree::D00, Degree::D01]);
        let e = ExactMatrix::unit(2, 2, 0, 1);
        assert!(GradedMatrix::homogeneous(s.clone(), e.clone(), Degree::D01).is_ok());
        assert!(matches!(
            GradedMatrix::homogeneous(s, e, Degree::D10),
            Err(Error::NotHomogeneous(_))
        ));
    }

    #[test]
    fn trace_examples() {
        let s = Arc::new(GradingSignature::sorted(1, 1, 1, 1));
        assert_eq!(GradedMatrix::identity(s.clone()).trace(), Scalar::from_int(4));
        assert!(unit(&s, 0, 1).trace().is_zero());
    }
}
