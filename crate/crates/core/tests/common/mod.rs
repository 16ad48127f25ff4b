//! Brute-force oracles shared by the integration tests.
//!
//! Operators are packed as `(x, z)` bit masks over at most 8 qubits and
//! handled without the library so the checks stay independent of it.

#![allow(dead_code)]

pub mod checks;
pub mod lp;

use rand::Rng;
use rand_chacha::ChaCha8Rng;
use stabweight::StabilizerGenerators;

pub type Packed = (u32, u32);

pub fn weight(p: Packed) -> usize {
    (p.0 | p.1).count_ones() as usize
}

pub fn commutes(a: Packed, b: Packed) -> bool {
    ((a.0 & b.1).count_ones() + (a.1 & b.0).count_ones()) % 2 == 0
}

pub fn letters(p: Packed, n: usize) -> String {
    (0..n)
        .map(|q| match (p.0 >> q & 1, p.1 >> q & 1) {
            (0, 0) => 'I',
            (1, 0) => 'X',
            (1, 1) => 'Y',
            _ => 'Z',
        })
        .collect()
}

/// Rank over F2 of the concatenated `x|z` vectors.
pub fn rank(vs: &[Packed]) -> usize {
    let mut basis: Vec<u64> = Vec::new();
    for &(x, z) in vs {
        let mut v = x as u64 | (z as u64) << 32;
        for &b in &basis {
            v = v.min(v ^ b);
        }
        if v != 0 {
            basis.push(v);
            basis.sort_unstable_by(|a, b| b.cmp(a));
        }
    }
    basis.len()
}

/// Random independent commuting generators on `n` qubits, `r` of them
/// (fewer if rejection sampling gives up).
pub fn random_generators(rng: &mut ChaCha8Rng, n: usize, r: usize) -> Vec<Packed> {
    let mask = (1u32 << n) - 1;
    let mut gens: Vec<Packed> = Vec::new();
    let mut attempts = 0;
    while gens.len() < r && attempts < 10_000 {
        attempts += 1;
        let p = (rng.gen::<u32>() & mask, rng.gen::<u32>() & mask);
        if p == (0, 0) || !gens.iter().all(|&g| commutes(g, p)) {
            continue;
        }
        gens.push(p);
        if rank(&gens) < gens.len() {
            gens.pop();
        }
    }
    gens
}

pub fn to_group(gens: &[Packed], n: usize) -> StabilizerGenerators {
    if gens.is_empty() {
        return StabilizerGenerators::empty(n);
    }
    let strs: Vec<String> = gens.iter().map(|&g| letters(g, n)).collect();
    let refs: Vec<&str> = strs.iter().map(String::as_str).collect();
    StabilizerGenerators::from_strs(&refs).expect("valid random group")
}

/// Every element of the group, identity included, up to sign.
pub fn group_elements(gens: &[Packed]) -> Vec<Packed> {
    (0u32..1 << gens.len())
        .map(|m| {
            gens.iter()
                .enumerate()
                .filter(|(i, _)| m >> i & 1 == 1)
                .fold((0, 0), |acc, (_, g)| (acc.0 ^ g.0, acc.1 ^ g.1))
        })
        .collect()
}

/// Every Pauli (up to phase) commuting with all generators.
pub fn normalizer(gens: &[Packed], n: usize) -> Vec<Packed> {
    let mut out = Vec::new();
    for x in 0u32..1 << n {
        for z in 0u32..1 << n {
            if gens.iter().all(|&g| commutes(g, (x, z))) {
                out.push((x, z));
            }
        }
    }
    out
}

pub fn weight_counts(elements: &[Packed], n: usize) -> Vec<u64> {
    let mut counts = vec![0u64; n + 1];
    for &e in elements {
        counts[weight(e)] += 1;
    }
    counts
}

/// Minimum weight of a normalizer element outside the group; `None` when
/// the normalizer equals the group.
pub fn brute_distance(gens: &[Packed], n: usize) -> Option<usize> {
    let group: std::collections::HashSet<Packed> = group_elements(gens).into_iter().collect();
    normalizer(gens, n)
        .into_iter()
        .filter(|e| !group.contains(e))
        .map(weight)
        .min()
}

/// Smallest `w` such that the group elements of weight `<= w` generate it.
pub fn brute_w(gens: &[Packed]) -> usize {
    let elements = group_elements(gens);
    (0..=32)
        .find(|&w| {
            let light: Vec<Packed> = elements.iter().copied().filter(|&e| weight(e) <= w).collect();
            rank(&light) == gens.len()
        })
        .expect("the full group generates itself")
}
