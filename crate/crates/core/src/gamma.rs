//! The intrinsic symmetry group of a knot, `Z2 x Z2`, and its five subgroups.
//!
//! An element is a pair of signs `(eps0, eps1)`: `eps0 = -1` mirrors the knot and
//! `eps1 = -1` reverses its orientation. Elements are totally ordered as
//! `(1,1) < (1,-1) < (-1,1) < (-1,-1)`; every deterministic choice in this crate
//! (coset representatives, orbit normal forms, row ordering) uses that order.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GammaError {
    #[error("unknown symmetry token `{0}` (expected none, pos_amphichiral, invertible, neg_amphichiral or full)")]
    UnknownSymmetry(String),
    #[error("unknown flavor token `{0}` (expected \"\", m, r or mr)")]
    UnknownFlavor(String),
    #[error("sign must be +1 or -1, got {0}")]
    BadSign(i32),
    #[error("element set {0:?} is not a subgroup")]
    NotASubgroup(Vec<GammaElement>),
}

/// One intrinsic-symmetry operation.
///
/// Field order matters: the derived `Ord` gives the fixed element order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GammaElement {
    mirror: bool,
    reverse: bool,
}

impl GammaElement {
    pub const IDENTITY: Self = Self::new(false, false);
    pub const REVERSE: Self = Self::new(false, true);
    pub const MIRROR: Self = Self::new(true, false);
    pub const MIRROR_REVERSE: Self = Self::new(true, true);

    /// All four elements in the fixed order.
    pub const ALL: [Self; 4] = [
        Self::IDENTITY,
        Self::REVERSE,
        Self::MIRROR,
        Self::MIRROR_REVERSE,
    ];

    pub const fn new(mirror: bool, reverse: bool) -> Self {
        Self { mirror, reverse }
    }

    /// Builds an element from its sign pair.
    pub fn from_signs(eps0: i32, eps1: i32) -> Result<Self, GammaError> {
        let flag = |s: i32| match s {
            1 => Ok(false),
            -1 => Ok(true),
            other => Err(GammaError::BadSign(other)),
        };
        Ok(Self::new(flag(eps0)?, flag(eps1)?))
    }

    pub fn eps0(self) -> i32 {
        if self.mirror {
            -1
        } else {
            1
        }
    }

    pub fn eps1(self) -> i32 {
        if self.reverse {
            -1
        } else {
            1
        }
    }

    pub fn is_mirror(self) -> bool {
        self.mirror
    }

    pub fn is_reverse(self) -> bool {
        self.reverse
    }

    pub fn is_identity(self) -> bool {
        self == Self::IDENTITY
    }

    /// Componentwise product of signs.
    pub fn compose(self, other: Self) -> Self {
        Self::new(self.mirror ^ other.mirror, self.reverse ^ other.reverse)
    }

    /// Every element is an involution.
    pub fn inverse(self) -> Self {
        self
    }

    /// Position in the fixed order, `0..4`.
    pub fn index(self) -> usize {
        (self.mirror as usize) << 1 | self.reverse as usize
    }

    pub fn from_index(index: usize) -> Self {
        Self::ALL[index & 3]
    }

    /// Name suffix used for flavored factors: `""`, `"r"`, `"m"` or `"mr"`.
    pub fn suffix(self) -> &'static str {
        match (self.mirror, self.reverse) {
            (false, false) => "",
            (false, true) => "r",
            (true, false) => "m",
            (true, true) => "mr",
        }
    }

    pub fn from_suffix(token: &str) -> Result<Self, GammaError> {
        match token {
            "" => Ok(Self::IDENTITY),
            "r" => Ok(Self::REVERSE),
            "m" => Ok(Self::MIRROR),
            "mr" => Ok(Self::MIRROR_REVERSE),
            other => Err(GammaError::UnknownFlavor(other.to_owned())),
        }
    }
}

impl fmt::Display for GammaElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(&format!("({},{})", self.eps0(), self.eps1()))
    }
}

/// The five classical symmetry types, by their data-file tokens.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SymmetryType {
    None,
    PosAmphichiral,
    Invertible,
    NegAmphichiral,
    Full,
}

impl SymmetryType {
    /// All five types in census column order.
    pub const ALL: [Self; 5] = [
        Self::None,
        Self::PosAmphichiral,
        Self::Invertible,
        Self::NegAmphichiral,
        Self::Full,
    ];

    pub fn token(self) -> &'static str {
        match self {
            Self::None => "none",
            Self::PosAmphichiral => "pos_amphichiral",
            Self::Invertible => "invertible",
            Self::NegAmphichiral => "neg_amphichiral",
            Self::Full => "full",
        }
    }

    pub fn subgroup(self) -> SymmetrySubgroup {
        SymmetrySubgroup::from_type(self)
    }
}

impl fmt::Display for SymmetryType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(self.token())
    }
}

impl FromStr for SymmetryType {
    type Err = GammaError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::ALL
            .into_iter()
            .find(|t| t.token() == s)
            .ok_or_else(|| GammaError::UnknownSymmetry(s.to_owned()))
    }
}

/// A subgroup of Γ, stored as a membership bitmask over element indices.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct SymmetrySubgroup {
    mask: u8,
}

impl SymmetrySubgroup {
    pub const TRIVIAL: Self = Self { mask: 0b0001 };
    pub const FULL: Self = Self { mask: 0b1111 };

    fn from_type(kind: SymmetryType) -> Self {
        let other = match kind {
            SymmetryType::None => return Self::TRIVIAL,
            SymmetryType::Full => return Self::FULL,
            SymmetryType::PosAmphichiral => GammaElement::MIRROR,
            SymmetryType::Invertible => GammaElement::REVERSE,
            SymmetryType::NegAmphichiral => GammaElement::MIRROR_REVERSE,
        };
        Self {
            mask: 1 | 1 << other.index(),
        }
    }

    /// Looks up a subgroup by its symmetry-type token.
    pub fn from_name(name: &str) -> Result<Self, GammaError> {
        Ok(name.parse::<SymmetryType>()?.subgroup())
    }

    /// Builds the subgroup with exactly these members, rejecting sets that are not
    /// closed or lack the identity.
    pub fn from_elements<I>(elements: I) -> Result<Self, GammaError>
    where
        I: IntoIterator<Item = GammaElement>,
    {
        let mask = elements
            .into_iter()
            .fold(0u8, |m, g| m | 1 << g.index());
        let candidate = Self { mask };
        let closed = candidate.elements().all(|a| {
            candidate
                .elements()
                .all(|b| candidate.contains(a.compose(b)))
        });
        if candidate.contains(GammaElement::IDENTITY) && closed {
            Ok(candidate)
        } else {
            Err(GammaError::NotASubgroup(candidate.elements().collect()))
        }
    }

    pub fn contains(self, g: GammaElement) -> bool {
        self.mask & (1 << g.index()) != 0
    }

    /// Members in the fixed element order.
    pub fn elements(self) -> impl Iterator<Item = GammaElement> {
        GammaElement::ALL
            .into_iter()
            .filter(move |g| self.contains(*g))
    }

    pub fn order(self) -> usize {
        self.mask.count_ones() as usize
    }

    pub fn index_in_gamma(self) -> usize {
        4 / self.order()
    }

    pub fn intersect(self, other: Self) -> Self {
        Self {
            mask: self.mask & other.mask,
        }
    }

    /// The classical name of this subgroup. Total, since every subgroup of Γ is
    /// one of the five.
    pub fn symmetry_type(self) -> SymmetryType {
        match self.mask {
            0b0001 => SymmetryType::None,
            0b1111 => SymmetryType::Full,
            m if m == Self::from_type(SymmetryType::PosAmphichiral).mask => {
                SymmetryType::PosAmphichiral
            }
            m if m == Self::from_type(SymmetryType::Invertible).mask => SymmetryType::Invertible,
            m if m == Self::from_type(SymmetryType::NegAmphichiral).mask => {
                SymmetryType::NegAmphichiral
            }
            m => unreachable!("mask {m:#06b} is not a subgroup"),
        }
    }

    pub fn name(self) -> &'static str {
        self.symmetry_type().token()
    }

    /// The minimal element of the coset `g·S`.
    pub fn coset_rep(self, g: GammaElement) -> GammaElement {
        self.elements()
            .map(|s| s.compose(g))
            .min()
            .expect("subgroup contains the identity")
    }

    /// One representative per coset, identity's coset first, then ascending.
    pub fn cosets(self) -> Vec<GammaElement> {
        let mut reps: Vec<GammaElement> = GammaElement::ALL
            .into_iter()
            .map(|g| self.coset_rep(g))
            .collect();
        reps.sort();
        reps.dedup();
        reps
    }
}

impl fmt::Debug for SymmetrySubgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.elements()).finish()
    }
}

impl From<SymmetryType> for SymmetrySubgroup {
    fn from(kind: SymmetryType) -> Self {
        kind.subgroup()
    }
}
