//! Test-only oracles that recompute orbits and stabilizers by exhaustive
//! enumeration of the wreath groups, independent of normal forms.
#![allow(dead_code)]

use std::collections::BTreeSet;
use std::sync::Arc;

use knotsum::prime_table::{FactorList, PrimeKnotRecord, PrimeTable};
use knotsum::{GammaElement, SymmetrySubgroup, SymmetryType};

pub type Slots = Vec<Vec<GammaElement>>;
/// One block of a group element: slot multipliers and a slot permutation.
pub type Block = (Vec<GammaElement>, Vec<usize>);

/// Six knots covering all five symmetry types. The positive-amphichiral entry
/// borrows a real diagram; only its symmetry token matters to the orbit engine.
pub fn test_table() -> PrimeTable {
    let bundled = PrimeTable::bundled();
    let real = |name: &str| (*bundled.get(name).unwrap().as_ref()).clone();
    let mut pos = real("6_1");
    pos.name = "6_1+".into();
    pos.table_index = 99;
    pos.symmetry = SymmetryType::PosAmphichiral;
    PrimeTable::from_records(vec![
        real("3_1"),
        real("4_1"),
        pos,
        real("8_17"),
        real("9_32"),
        real("9_33"),
    ])
    .unwrap()
}

/// All factor lists over `table` with between 2 and `max_factors` factors.
pub fn factor_lists_up_to(table: &PrimeTable, max_factors: usize) -> Vec<FactorList> {
    fn go(
        records: &[Arc<PrimeKnotRecord>],
        start: usize,
        left: usize,
        cur: &mut Vec<(Arc<PrimeKnotRecord>, usize)>,
        out: &mut Vec<FactorList>,
    ) {
        for i in start..records.len() {
            for m in 1..=left {
                cur.push((records[i].clone(), m));
                if let Ok(l) = FactorList::from_pairs(cur.clone()) {
                    out.push(l);
                }
                go(records, i + 1, left - m, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(table.records(), 0, max_factors, &mut Vec::new(), &mut out);
    out
}

pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

fn tuples(choices: &[GammaElement], len: usize) -> Vec<Vec<GammaElement>> {
    (0..len).fold(vec![vec![]], |acc, _| {
        acc.into_iter()
            .flat_map(|t| {
                choices.iter().map(move |c| {
                    let mut t = t.clone();
                    t.push(*c);
                    t
                })
            })
            .collect()
    })
}

fn product(per_block: Vec<Vec<Block>>) -> Vec<Vec<Block>> {
    per_block.into_iter().fold(vec![vec![]], |acc, options| {
        acc.into_iter()
            .flat_map(|prefix| {
                options.iter().map(move |b| {
                    let mut p = prefix.clone();
                    p.push(b.clone());
                    p
                })
            })
            .collect()
    })
}

fn subgroups(factors: &FactorList) -> Vec<SymmetrySubgroup> {
    factors.entries().iter().map(|e| e.record.subgroup()).collect()
}

/// Every element of Σ(P).
pub fn sigma_elements(factors: &FactorList) -> Vec<Vec<Block>> {
    product(
        factors
            .entries()
            .iter()
            .map(|e| {
                let allowed: Vec<_> = e.record.subgroup().elements().collect();
                let mut blocks = Vec::new();
                for g in tuples(&allowed, e.multiplicity) {
                    for p in permutations(e.multiplicity) {
                        blocks.push((g.clone(), p));
                    }
                }
                blocks
            })
            .collect(),
    )
}

/// Every element of Δ as `(γ, element)`.
pub fn delta_elements(factors: &FactorList) -> Vec<(GammaElement, Vec<Block>)> {
    let perms = product(
        factors
            .multiplicities()
            .map(|n| {
                permutations(n)
                    .into_iter()
                    .map(|p| (vec![GammaElement::IDENTITY; n], p))
                    .collect()
            })
            .collect(),
    );
    let mut out = Vec::new();
    for g in GammaElement::ALL {
        for p in &perms {
            let element = p
                .iter()
                .map(|(gs, perm)| (vec![g; gs.len()], perm.clone()))
                .collect();
            out.push((g, element));
        }
    }
    out
}

/// The action written out directly: slot j of block i is `γ_ij · x_{i, p_i(j)}`.
pub fn apply(element: &[Block], x: &Slots) -> Slots {
    element
        .iter()
        .zip(x)
        .map(|((gammas, perm), xb)| {
            (0..xb.len())
                .map(|j| gammas[j].compose(xb[perm[j]]))
                .collect()
        })
        .collect()
}

pub fn all_vectors(factors: &FactorList) -> Vec<Slots> {
    let blocks: Vec<Vec<Block>> = factors
        .multiplicities()
        .map(|n| {
            tuples(&GammaElement::ALL, n)
                .into_iter()
                .map(|t| (t, vec![]))
                .collect()
        })
        .collect();
    product(blocks)
        .into_iter()
        .map(|b| b.into_iter().map(|(g, _)| g).collect())
        .collect()
}

/// Partition of X(P) into Σ(P)-orbits by applying every group element.
pub fn oracle_partition(factors: &FactorList) -> BTreeSet<BTreeSet<Slots>> {
    let group = sigma_elements(factors);
    let mut seen = BTreeSet::new();
    let mut parts = BTreeSet::new();
    for x in all_vectors(factors) {
        if seen.contains(&x) {
            continue;
        }
        let orbit: BTreeSet<Slots> = group.iter().map(|s| apply(s, &x)).collect();
        seen.extend(orbit.iter().cloned());
        parts.insert(orbit);
    }
    parts
}

/// π(Δ ∩ Stab(orbit)) by exhaustive search over Δ.
pub fn oracle_symmetry(factors: &FactorList, orbit: &BTreeSet<Slots>) -> BTreeSet<GammaElement> {
    delta_elements(factors)
        .into_iter()
        .filter(|(_, d)| orbit.iter().all(|y| orbit.contains(&apply(d, y))))
        .map(|(g, _)| g)
        .collect()
}

pub fn binomial(n: u64, k: u64) -> u64 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// ∏ C(c_i + n_i - 1, n_i) with c_i the index of Σ(k_i) in Γ.
pub fn expected_orbit_count(factors: &FactorList) -> u64 {
    factors
        .entries()
        .iter()
        .zip(subgroups(factors))
        .map(|(e, s)| {
            let c = (4 / s.order()) as u64;
            let n = e.multiplicity as u64;
            binomial(c + n - 1, n)
        })
        .product()
}
