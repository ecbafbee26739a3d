use std::fmt;
use std::ops::Add;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// An element `(a1, a2)` of Z2 x Z2.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default)]
pub struct Degree {
    a1: u8,
    a2: u8,
}

impl Degree {
    pub const D00: Degree = Degree { a1: 0, a2: 0 };
    pub const D01: Degree = Degree { a1: 0, a2: 1 };
    pub const D10: Degree = Degree { a1: 1, a2: 0 };
    pub const D11: Degree = Degree { a1: 1, a2: 1 };

    /// All four degrees in the order (0,0), (0,1), (1,0), (1,1).
    pub const ALL: [Degree; 4] = [Degree::D00, Degree::D01, Degree::D10, Degree::D11];

    pub const NONZERO: [Degree; 3] = [Degree::D01, Degree::D10, Degree::D11];

    pub fn new(a1: u8, a2: u8) -> Result<Self> {
        if a1 > 1 || a2 > 1 {
            return Err(Error::Parse(format!("degree components must be bits, got ({a1},{a2})")));
        }
        Ok(Degree { a1, a2 })
    }

    pub fn a1(self) -> u8 {
        self.a1
    }

    pub fn a2(self) -> u8 {
        self.a2
    }

    pub fn is_zero(self) -> bool {
        self == Degree::D00
    }

    /// Position in [`Degree::ALL`].
    pub fn index(self) -> usize {
        (2 * self.a1 + self.a2) as usize
    }

    pub fn from_index(i: usize) -> Degree {
        Degree::ALL[i]
    }
}

impl Add for Degree {
    type Output = Degree;
    fn add(self, rhs: Degree) -> Degree {
        Degree {
            a1: self.a1 ^ rhs.a1,
            a2: self.a2 ^ rhs.a2,
        }
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.a1, self.a2)
    }
}

impl Serialize for Degree {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        [self.a1, self.a2].serialize(s)
    }
}

impl<'de> Deserialize<'de> for Degree {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let [a1, a2] = <[u8; 2]>::deserialize(d)?;
        Degree::new(a1, a2).map_err(serde::de::Error::custom)
    }
}

/// Which commutation factor the bracket uses.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SignRule {
    /// Graded Lie algebra: `a·b = a1 b2 - a2 b1`.
    #[default]
    Gla,
    /// Graded Lie superalgebra: `a·b = a1 b1 + a2 b2`.
    Glsa,
}

impl SignRule {
    /// The integer exponent `a·b`; only its parity matters.
    pub fn exponent(self, a: Degree, b: Degree) -> i32 {
        let (a1, a2, b1, b2) = (a.a1 as i32, a.a2 as i32, b.a1 as i32, b.a2 as i32);
        match self {
            SignRule::Gla => a1 * b2 - a2 * b1,
            SignRule::Glsa => a1 * b1 + a2 * b2,
        }
    }

    /// `(-1)^(a·b)` as `+1` or `-1`.
    pub fn sign(self, a: Degree, b: Degree) -> i64 {
        if self.exponent(a, b).rem_euclid(2) == 0 {
            1
        } else {
            -1
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            SignRule::Gla => "gla",
            SignRule::Glsa => "glsa",
        }
    }
}

impl std::str::FromStr for SignRule {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "gla" => Ok(SignRule::Gla),
            "glsa" => Ok(SignRule::Glsa),
            other => Err(Error::Parse(format!("unknown sign rule {other:?}"))),
        }
    }
}

pub fn degree_sign(a: Degree, b: Degree, rule: SignRule) -> i64 {
    rule.sign(a, b)
}

/// A permutation of Z2 x Z2 fixing (0,0). These are exactly the group automorphisms,
/// so they commute with degree addition.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct DegreePermutation {
    images: [Degree; 4],
}

impl DegreePermutation {
    /// `images[d.index()]` is the image of `d`.
    pub fn new(images: [Degree; 4]) -> Result<Self> {
        if !images[0].is_zero() {
            return Err(Error::InvalidPermutation);
        }
        let mut seen = [false; 4];
        for d in images {
            if std::mem::replace(&mut seen[d.index()], true) {
                return Err(Error::InvalidPermutation);
            }
        }
        Ok(DegreePermutation { images })
    }

    /// Permutation given by the images of (0,1), (1,0), (1,1).
    pub fn from_nonzero(i01: Degree, i10: Degree, i11: Degree) -> Result<Self> {
        DegreePermutation::new([Degree::D00, i01, i10, i11])
    }

    pub fn identity() -> Self {
        DegreePermutation { images: Degree::ALL }
    }

    /// Transposition of two nonzero degrees.
    pub fn swap(a: Degree, b: Degree) -> Result<Self> {
        let mut images = Degree::ALL;
        images.swap(a.index(), b.index());
        DegreePermutation::new(images)
    }

    /// All six permutations, identity first.
    pub fn all() -> Vec<DegreePermutation> {
        let [x, y, z] = Degree::NONZERO;
        [[x, y, z], [x, z, y], [y, x, z], [y, z, x], [z, x, y], [z, y, x]]
            .into_iter()
            .map(|[a, b, c]| DegreePermutation::from_nonzero(a, b, c).expect("valid permutation"))
            .collect()
    }

    pub fn apply(&self, d: Degree) -> Degree {
        self.images[d.index()]
    }

    pub fn images(&self) -> [Degree; 4] {
        self.images
    }
}

impl fmt::Display for DegreePermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = Degree::NONZERO
            .iter()
            .map(|&d| format!("{}->{}", d, self.apply(d)))
            .collect();
        write!(f, "{}", parts.join(" "))
    }
}
