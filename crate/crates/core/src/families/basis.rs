use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::family::{AlgebraFamily, FamilyKind, FamilyParams};
use super::forms::Constraints;
use crate::error::{Error, Result};
use crate::exactnum::{nullspace, ExactMatrix, Scalar};
use crate::graded::{Degree, DegreePermutation, GradedMatrix, GradingSignature};

/// Dimensions of the four graded components. Signed because some printed formulas go negative.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default, Serialize, Deserialize)]
pub struct DimensionProfile {
    pub d00: i64,
    pub d01: i64,
    pub d10: i64,
    pub d11: i64,
}

impl DimensionProfile {
    pub fn new(d00: i64, d01: i64, d10: i64, d11: i64) -> Self {
        DimensionProfile { d00, d01, d10, d11 }
    }

    pub fn total(&self) -> i64 {
        self.d00 + self.d01 + self.d10 + self.d11
    }

    pub fn get(&self, d: Degree) -> i64 {
        self.as_array()[d.index()]
    }

    pub fn as_array(&self) -> [i64; 4] {
        [self.d00, self.d01, self.d10, self.d11]
    }

    fn from_array(a: [i64; 4]) -> Self {
        DimensionProfile::new(a[0], a[1], a[2], a[3])
    }

    /// Profile of the relabeled algebra: the `pi(d)` component has the old `d` dimension.
    pub fn permuted(&self, pi: &DegreePermutation) -> DimensionProfile {
        let mut out = [0; 4];
        for d in Degree::ALL {
            out[pi.apply(d).index()] = self.get(d);
        }
        DimensionProfile::from_array(out)
    }
}

/// A homogeneous basis of a family, ordered by degree and then by free parameter.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedBasis {
    family: AlgebraFamily,
    signature: Arc<GradingSignature>,
    elements: Vec<GradedMatrix>,
}

impl GradedBasis {
    /// Assembles a basis from parts, checking shapes and degree tags but not membership.
    pub fn from_parts(
        family: AlgebraFamily,
        signature: Arc<GradingSignature>,
        elements: Vec<GradedMatrix>,
    ) -> Result<Self> {
        let elements = elements
            .into_iter()
            .map(|e| {
                let d = e
                    .degree()
                    .ok_or_else(|| Error::Parse("basis element without a degree".into()))?;
                if *e.signature() != *signature {
                    return Err(Error::SignatureMismatch);
                }
                e.with_signature(signature.clone())?.with_degree(d)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(GradedBasis {
            family,
            signature,
            elements,
        })
    }

    pub fn family(&self) -> &AlgebraFamily {
        &self.family
    }

    pub fn signature(&self) -> &Arc<GradingSignature> {
        &self.signature
    }

    pub fn elements(&self) -> &[GradedMatrix] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn degree_of(&self, i: usize) -> Degree {
        self.elements[i].degree().expect("basis elements carry a degree")
    }

    pub fn degrees(&self) -> Vec<Degree> {
        (0..self.len()).map(|i| self.degree_of(i)).collect()
    }

    pub fn of_degree(&self, d: Degree) -> impl Iterator<Item = &GradedMatrix> {
        self.elements.iter().filter(move |e| e.degree() == Some(d))
    }

    pub fn profile(&self) -> DimensionProfile {
        let mut counts = [0i64; 4];
        for e in &self.elements {
            counts[e.degree().expect("tagged").index()] += 1;
        }
        DimensionProfile::from_array(counts)
    }

    /// Relabels all degrees by `pi`. Entries are untouched.
    pub fn relabel(&self, pi: &DegreePermutation) -> GradedBasis {
        let signature = Arc::new(self.signature.permute(pi));
        let elements = self
            .elements
            .iter()
            .map(|e| {
                let moved = e.relabel(pi);
                moved
                    .with_signature(signature.clone())
                    .expect("relabeling preserves homogeneity")
            })
            .collect();
        GradedBasis {
            family: self.family,
            signature,
            elements,
        }
    }
}

/// Scales `v` so that its first nonzero entry is 1.
fn normalize(v: &mut [Scalar]) {
    if let Some(lead) = v.iter().find(|x| !x.is_zero()).cloned() {
        if !lead.is_one() {
            let inv = lead.inverse().expect("nonzero");
            for x in v.iter_mut() {
                *x = &*x * &inv;
            }
        }
    }
}

/// Solves the defining conditions of `f` degree by degree.
///
/// For each degree the unknowns are the entries of that degree in row-major order; the
/// constraint columns are the residuals of the corresponding matrix units. Conditions are
/// linear and map degree `a` to a single degree, so the solution space splits by degree.
pub fn build_basis(f: &AlgebraFamily) -> Result<GradedBasis> {
    let signature = Arc::new(f.signature());
    let constraints = Constraints::for_family(f)?;
    let n = signature.len();
    let mut elements = Vec::new();
    for d in Degree::ALL {
        let positions = signature.positions_of_degree(d);
        if positions.is_empty() {
            continue;
        }
        let mut columns: Vec<Vec<Scalar>> = Vec::with_capacity(positions.len());
        for &(j, k) in &positions {
            let unit = GradedMatrix::unit(signature.clone(), j, k)?;
            let mut col = Vec::with_capacity(n * n + 1);
            if constraints.has_trace() {
                col.push(unit.trace());
            }
            if let Some(res) = constraints.residual(&unit)? {
                col.extend(res.into_vec());
            }
            columns.push(col);
        }
        let height = columns[0].len();
        // Keep only rows that constrain something.
        let live_rows: Vec<usize> = (0..height)
            .filter(|&r| columns.iter().any(|c| !c[r].is_zero()))
            .collect();
        let system = ExactMatrix::from_fn(live_rows.len(), positions.len(), |i, j| {
            columns[j][live_rows[i]].clone()
        });
        for v in nullspace(&system) {
            let mut coeffs = v.into_vec();
            normalize(&mut coeffs);
            let mut m = ExactMatrix::zeros(n, n);
            for (&(j, k), c) in positions.iter().zip(coeffs) {
                m[(j, k)] = c;
            }
            elements.push(GradedMatrix::homogeneous(signature.clone(), m, d)?);
        }
    }
    Ok(GradedBasis {
        family: *f,
        signature,
        elements,
    })
}

fn sq(x: i64) -> i64 {
    x * x
}

/// The dimension formulas as printed for each family, evaluated verbatim.
///
/// For the graded `so` family no formula is printed; the one used here is read off the block
/// form (antisymmetric diagonal blocks, free off-diagonal blocks linked in pairs).
pub fn dimension_profile(f: &AlgebraFamily) -> DimensionProfile {
    match (f.kind(), f.params()) {
        (FamilyKind::Gl | FamilyKind::Sl, FamilyParams::Graded { p, q, r, s }) => {
            let (p, q, r, s) = (p as i64, q as i64, r as i64, s as i64);
            let trace = if f.kind() == FamilyKind::Sl { 1 } else { 0 };
            DimensionProfile::new(
                sq(p) + sq(q) + sq(r) + sq(s) - trace,
                2 * p * q + 2 * r * s,
                2 * p * r + 2 * q * s,
                2 * q * r + 2 * p * s,
            )
        }
        (FamilyKind::SoGraded, FamilyParams::Graded { p, q, r, s }) => {
            let (p, q, r, s) = (p as i64, q as i64, r as i64, s as i64);
            let anti = |x: i64| x * (x - 1) / 2;
            DimensionProfile::new(
                anti(p) + anti(q) + anti(r) + anti(s),
                p * q + r * s,
                p * r + q * s,
                q * r + p * s,
            )
        }
        (FamilyKind::SpP, FamilyParams::Classical { n, p }) => {
            let (n, p) = (n as i64, p as i64);
            DimensionProfile::new(
                sq(p) + sq(n - p),
                2 * p * (n - p),
                2 * p * (n - p),
                p * (p + 1) + (n - p) * (n - p + 1),
            )
        }
        (FamilyKind::SoPEven, FamilyParams::Classical { n, p }) => {
            let (n, p) = (n as i64, p as i64);
            DimensionProfile::new(
                sq(p) + sq(n - p),
                2 * p * (n - p),
                2 * p * (n - p),
                p * (p - 1) + (n - p) * (n - p - 1),
            )
        }
        (FamilyKind::SoPOdd, FamilyParams::Classical { n, p }) => {
            let (n, p) = (n as i64, p as i64);
            DimensionProfile::new(2 * sq(n) - n - 4 * p * sq(n - p), 2 * p, 2 * (n - p), 4 * p * (n - p))
        }
        _ => unreachable!("validated family"),
    }
}

/// `2n² - n - 4p(n-p)`: the (0,0) dimension of the odd orthogonal family that is
/// consistent with its total `2n² + n`.
pub fn so_odd_consistent_d00(n: usize, p: usize) -> i64 {
    let (n, p) = (n as i64, p as i64);
    2 * n * n - n - 4 * p * (n - p)
}

pub fn dimension_profile_measured(f: &AlgebraFamily) -> Result<DimensionProfile> {
    Ok(build_basis(f)?.profile())
}

/// A graded component whose printed dimension formula disagrees with the measured count.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Discrepancy {
    pub degree: Degree,
    pub formula: i64,
    pub measured: i64,
}

pub fn profile_discrepancies(formula: &DimensionProfile, measured: &DimensionProfile) -> Vec<Discrepancy> {
    Degree::ALL
        .into_iter()
        .filter(|&d| formula.get(d) != measured.get(d))
        .map(|d| Discrepancy {
            degree: d,
            formula: formula.get(d),
            measured: measured.get(d),
        })
        .collect()
}

/// Two coordinate gradings of the odd orthogonal family with the same entry degrees.
///
/// `used` is the family signature, `(0,0)^p (1,1)^(n-p) (0,0)^p (1,1)^(n-p) (0,1)`, i.e. the
/// containing algebra `sl_{2p,1,0,2n-2p}(2n+1)`. `alternative` is read off the diagonal
/// blocks of the layout, `(0,1)^p (1,0)^(n-p) (0,1)^p (1,0)^(n-p) (0,0)`. The two differ by
/// the coordinate shift `coordinate_shift`, which leaves every entry degree unchanged but
/// flips the graded transpose on degrees `a` with `a·shift` odd. Only `used` makes the
/// printed layout and the parafermion generators satisfy the defining condition.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SoOddRelabeling {
    /// Multiplicities of (0,0),(0,1),(1,0),(1,1) in the family signature.
    pub used: [usize; 4],
    pub alternative: GradingSignature,
    pub coordinate_shift: Degree,
}

pub fn so_odd_relabeling(f: &AlgebraFamily) -> Result<SoOddRelabeling> {
    if f.kind() != FamilyKind::SoPOdd {
        return Err(Error::WrongFamilyKind(f.kind().to_string()));
    }
    let used = f.signature();
    Ok(SoOddRelabeling {
        used: used.multiplicities(),
        alternative: used.shift(Degree::D01),
        coordinate_shift: Degree::D01,
    })
}
