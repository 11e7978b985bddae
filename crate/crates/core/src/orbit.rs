//! Flavor vectors, the wreath-product actions on them, orbit enumeration and
//! composite symmetry groups.
//!
//! For a factor list `P = {(k_i, n_i)}`, a [`FlavorVector`] assigns one element of
//! Γ to each of the `N = Σ n_i` factor slots, grouped in blocks by base type. The
//! group `Γ(P)` acts blockwise: a [`WreathElement`] permutes the slots of each
//! block and then multiplies each slot by its own Γ element. Restricting the slot
//! multipliers of block `i` to the symmetry group of `k_i` gives `Σ(P)`, whose
//! orbits are exactly the distinct composite knots with base factors `P`.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use thiserror::Error;

use crate::gamma::{GammaElement, SymmetrySubgroup};
use crate::prime_table::FactorList;

/// Largest factor count accepted by [`orbit_bruteforce`] (`4^8` states).
pub const BRUTEFORCE_MAX_FACTORS: usize = 8;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OrbitError {
    #[error("block structure {found:?} does not match factor list {expected:?}")]
    StructureMismatch {
        expected: Vec<usize>,
        found: Vec<usize>,
    },
    #[error("block {block}: {perm:?} is not a permutation")]
    InvalidPermutation { block: usize, perm: Vec<usize> },
    #[error("brute-force orbit needs at most {BRUTEFORCE_MAX_FACTORS} factors, got {0}")]
    TooLarge(usize),
}

/// An element of `X(P)`: one flavor per factor slot, in blocks.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FlavorVector {
    blocks: Vec<Vec<GammaElement>>,
}

impl FlavorVector {
    pub fn new(blocks: Vec<Vec<GammaElement>>) -> Self {
        Self { blocks }
    }

    /// The all-identity vector for `factors`.
    pub fn identity(factors: &FactorList) -> Self {
        Self::new(
            factors
                .multiplicities()
                .map(|n| vec![GammaElement::IDENTITY; n])
                .collect(),
        )
    }

    pub fn blocks(&self) -> &[Vec<GammaElement>] {
        &self.blocks
    }

    /// All slots in block order.
    pub fn slots(&self) -> impl Iterator<Item = GammaElement> + '_ {
        self.blocks.iter().flatten().copied()
    }

    pub fn shape(&self) -> Vec<usize> {
        self.blocks.iter().map(Vec::len).collect()
    }

    /// Multiplies every slot by `g` (the diagonal element with identity
    /// permutations).
    pub fn diagonal(&self, g: GammaElement) -> Self {
        Self::new(
            self.blocks
                .iter()
                .map(|b| b.iter().map(|x| g.compose(*x)).collect())
                .collect(),
        )
    }

    /// Every element of `X(P)`, in ascending order.
    pub fn all(factors: &FactorList) -> impl Iterator<Item = FlavorVector> + '_ {
        let shape: Vec<usize> = factors.multiplicities().collect();
        let n = factors.factor_count();
        (0..4usize.pow(n as u32)).map(move |code| {
            let mut digits = (0..n).rev().map(|k| GammaElement::from_index(code >> (2 * k)));
            Self::new(
                shape
                    .iter()
                    .map(|&len| digits.by_ref().take(len).collect())
                    .collect(),
            )
        })
    }

    fn check_shape(&self, factors: &FactorList) -> Result<(), OrbitError> {
        let expected: Vec<usize> = factors.multiplicities().collect();
        let found = self.shape();
        if expected == found {
            Ok(())
        } else {
            Err(OrbitError::StructureMismatch { expected, found })
        }
    }
}

impl fmt::Display for FlavorVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, g) in self.slots().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{g}")?;
        }
        f.write_str(")")
    }
}

/// One block of a wreath element: slot multipliers and a permutation of slots
/// (zero-based, `perm[j]` is the source slot for target slot `j`).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WreathBlock {
    pub gammas: Vec<GammaElement>,
    pub perm: Vec<usize>,
}

/// An element of `Γ(P)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WreathElement {
    blocks: Vec<WreathBlock>,
}

impl WreathElement {
    pub fn new(blocks: Vec<WreathBlock>) -> Result<Self, OrbitError> {
        for (i, b) in blocks.iter().enumerate() {
            let mut seen = vec![false; b.perm.len()];
            let bijective = b.gammas.len() == b.perm.len()
                && b.perm
                    .iter()
                    .all(|&p| p < seen.len() && !std::mem::replace(&mut seen[p], true));
            if !bijective {
                return Err(OrbitError::InvalidPermutation {
                    block: i,
                    perm: b.perm.clone(),
                });
            }
        }
        Ok(Self { blocks })
    }

    pub fn identity(factors: &FactorList) -> Self {
        Self {
            blocks: factors
                .multiplicities()
                .map(|n| WreathBlock {
                    gammas: vec![GammaElement::IDENTITY; n],
                    perm: (0..n).collect(),
                })
                .collect(),
        }
    }

    /// The diagonal element `(g, ..., g; id)` of every block.
    pub fn diagonal(factors: &FactorList, g: GammaElement) -> Self {
        let mut w = Self::identity(factors);
        for b in &mut w.blocks {
            b.gammas.fill(g);
        }
        w
    }

    pub fn blocks(&self) -> &[WreathBlock] {
        &self.blocks
    }

    pub fn shape(&self) -> Vec<usize> {
        self.blocks.iter().map(|b| b.perm.len()).collect()
    }

    /// The product `self · other`, acting as `other` first.
    pub fn compose(&self, other: &Self) -> Result<Self, OrbitError> {
        if self.shape() != other.shape() {
            return Err(OrbitError::StructureMismatch {
                expected: self.shape(),
                found: other.shape(),
            });
        }
        let blocks = self
            .blocks
            .iter()
            .zip(&other.blocks)
            .map(|(outer, inner)| WreathBlock {
                gammas: outer
                    .gammas
                    .iter()
                    .zip(&outer.perm)
                    .map(|(g, &p)| g.compose(inner.gammas[p]))
                    .collect(),
                perm: outer.perm.iter().map(|&p| inner.perm[p]).collect(),
            })
            .collect();
        Ok(Self { blocks })
    }

    /// Whether this element lies in `Σ(P)`.
    pub fn in_symmetry_group(&self, factors: &FactorList) -> bool {
        self.shape() == factors.multiplicities().collect::<Vec<_>>()
            && self
                .blocks
                .iter()
                .zip(factors.entries())
                .all(|(b, e)| b.gammas.iter().all(|g| e.record.subgroup().contains(*g)))
    }

    /// Slot `j` of block `i` becomes `gammas[i][j] · x[i][perm[i][j]]`.
    pub fn act(&self, x: &FlavorVector) -> Result<FlavorVector, OrbitError> {
        if self.shape() != x.shape() {
            return Err(OrbitError::StructureMismatch {
                expected: self.shape(),
                found: x.shape(),
            });
        }
        Ok(FlavorVector::new(
            self.blocks
                .iter()
                .zip(x.blocks())
                .map(|(w, xb)| {
                    w.gammas
                        .iter()
                        .zip(&w.perm)
                        .map(|(g, &p)| g.compose(xb[p]))
                        .collect()
                })
                .collect(),
        ))
    }
}

fn block_subgroups(factors: &FactorList) -> impl Iterator<Item = SymmetrySubgroup> + '_ {
    factors.entries().iter().map(|e| e.record.subgroup())
}

/// The `Σ(P)`-orbit of `x`, by breadth-first closure under a generating set:
/// each nontrivial element of `Σ(k_i)` at each slot, and adjacent transpositions
/// within each block.
pub fn orbit_bruteforce(
    factors: &FactorList,
    x: &FlavorVector,
) -> Result<BTreeSet<FlavorVector>, OrbitError> {
    x.check_shape(factors)?;
    let n = factors.factor_count();
    if n > BRUTEFORCE_MAX_FACTORS {
        return Err(OrbitError::TooLarge(n));
    }
    let identity = WreathElement::identity(factors);
    let mut generators = Vec::new();
    for (i, sub) in block_subgroups(factors).enumerate() {
        let len = identity.blocks[i].perm.len();
        for j in 0..len {
            for s in sub.elements().filter(|s| !s.is_identity()) {
                let mut w = identity.clone();
                w.blocks[i].gammas[j] = s;
                generators.push(w);
            }
        }
        for j in 1..len {
            let mut w = identity.clone();
            w.blocks[i].perm.swap(j - 1, j);
            generators.push(w);
        }
    }

    let mut seen = BTreeSet::from([x.clone()]);
    let mut queue = VecDeque::from([x.clone()]);
    while let Some(y) = queue.pop_front() {
        for w in &generators {
            let z = w.act(&y)?;
            if seen.insert(z.clone()) {
                queue.push_back(z);
            }
        }
    }
    Ok(seen)
}

/// Canonical orbit representative: each slot replaced by its coset
/// representative for the block's symmetry group, each block sorted.
pub fn normal_form(factors: &FactorList, x: &FlavorVector) -> Result<FlavorVector, OrbitError> {
    x.check_shape(factors)?;
    Ok(FlavorVector::new(
        x.blocks()
            .iter()
            .zip(block_subgroups(factors))
            .map(|(b, sub)| {
                let mut reps: Vec<_> = b.iter().map(|g| sub.coset_rep(*g)).collect();
                reps.sort();
                reps
            })
            .collect(),
    ))
}

/// The intrinsic symmetry group of the composite knot with flavors `x`: the
/// elements `g` for which the diagonal action `x -> g·x` preserves the orbit.
pub fn symmetry_group(
    factors: &FactorList,
    x: &FlavorVector,
) -> Result<SymmetrySubgroup, OrbitError> {
    let base = normal_form(factors, x)?;
    let members = GammaElement::ALL
        .into_iter()
        .filter(|g| normal_form(factors, &x.diagonal(*g)).as_ref() == Ok(&base));
    Ok(SymmetrySubgroup::from_elements(members)
        .expect("orbit stabilizer projects to a subgroup"))
}

/// One composite knot: a `Σ(P)`-orbit in `X(P)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompositeClass {
    pub factors: FactorList,
    pub representative: FlavorVector,
    pub orbit_size: u64,
    pub symmetry: Option<SymmetrySubgroup>,
}

fn factorial(n: usize) -> u64 {
    (1..=n as u64).product()
}

/// Size of the orbit with normal-form representative `rep`.
///
/// Block `i` of the orbit is every arrangement of its coset multiset, each slot
/// then ranging freely over its coset: `|Σ(k_i)|^{n_i} · n_i! / Π_c m_{i,c}!`.
fn orbit_size_of(factors: &FactorList, rep: &FlavorVector) -> u64 {
    rep.blocks()
        .iter()
        .zip(block_subgroups(factors))
        .map(|(block, sub)| {
            let arrangements = factorial(block.len())
                / block
                    .chunk_by(|a, b| a == b)
                    .map(|run| factorial(run.len()))
                    .product::<u64>();
            (sub.order() as u64).pow(block.len() as u32) * arrangements
        })
        .product()
}

/// Nondecreasing sequences of length `len` over `choices`.
fn multisets(choices: &[GammaElement], len: usize) -> Vec<Vec<GammaElement>> {
    if len == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for (i, &c) in choices.iter().enumerate() {
        for mut tail in multisets(&choices[i..], len - 1) {
            tail.insert(0, c);
            out.push(tail);
        }
    }
    out
}

/// Every composite knot with base factors `factors`, one class per orbit,
/// ordered by representative. The symmetry field is left empty.
pub fn orbits_all(factors: &FactorList) -> Vec<CompositeClass> {
    let per_block: Vec<Vec<Vec<GammaElement>>> = factors
        .entries()
        .iter()
        .map(|e| multisets(&e.record.subgroup().cosets(), e.multiplicity))
        .collect();

    let mut reps: Vec<Vec<Vec<GammaElement>>> = vec![Vec::new()];
    for options in &per_block {
        reps = reps
            .into_iter()
            .flat_map(|prefix| {
                options.iter().map(move |block| {
                    let mut next = prefix.clone();
                    next.push(block.clone());
                    next
                })
            })
            .collect();
    }

    let mut classes: Vec<CompositeClass> = reps
        .into_iter()
        .map(|blocks| {
            let representative = FlavorVector::new(blocks);
            CompositeClass {
                factors: factors.clone(),
                orbit_size: orbit_size_of(factors, &representative),
                representative,
                symmetry: None,
            }
        })
        .collect();
    classes.sort_by(|a, b| a.representative.cmp(&b.representative));
    classes
}

/// [`orbits_all`] with each class's symmetry group filled in.
pub fn classify(factors: &FactorList) -> Vec<CompositeClass> {
    let mut classes = orbits_all(factors);
    for c in &mut classes {
        c.symmetry = Some(
            symmetry_group(factors, &c.representative).expect("representative matches its factors"),
        );
    }
    classes
}
