//! Randomized checks shared by the property tests and the acceptance
//! target. Each returns a short summary or the first counterexample.

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use stabweight::bits::BitVector;
use stabweight::enumerator::{distance_from_enumerators, enumerator_from_group, macwilliams, parity_property, shadow};
use stabweight::reductions::{
    decide_mld, decide_mwsg, decide_sbp, mld_to_sbp, sbp_to_mwsg, Answer, MLDInstance, MWSGInstance, MldReduction,
};
use stabweight::Distance;

use super::*;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn ratio(v: u64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

pub struct EnumeratorSummary {
    pub groups: usize,
    pub mean_weight_checked: usize,
}

/// MacWilliams transform, shadow positivity, distance, parity property and
/// mean group weight on `count` random groups with `n <= 7`.
pub fn enumerator_identities(seed: u64, count: usize) -> Result<EnumeratorSummary, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut mean_weight_checked = 0;
    for i in 0..count {
        let n = rng.gen_range(1..=7);
        // bias toward large r so that d >= 2 is common
        let r = if i % 2 == 0 { rng.gen_range(0..=n) } else { n - rng.gen_range(0..=n.min(2)) };
        let gens = random_generators(&mut rng, n, r);
        let g = to_group(&gens, n);
        let k = n - gens.len();
        let a = enumerator_from_group(&g).map_err(|e| e.to_string())?;
        let elements = group_elements(&gens);
        let a_counts = weight_counts(&elements, n);
        ensure!(a.values == a_counts.iter().map(|&v| ratio(v)).collect::<Vec<_>>(), "A differs for {gens:?}");

        let k_factor = BigInt::from(1u8) << k;
        let b = macwilliams(&a, &k_factor);
        let b_counts = weight_counts(&normalizer(&gens, n), n);
        ensure!(
            b.values == b_counts.iter().map(|&v| ratio(v)).collect::<Vec<_>>(),
            "B differs from normalizer counts for n={n} {gens:?}"
        );
        ensure!(shadow(&a, &k_factor).is_nonnegative(), "negative shadow for {gens:?}");

        let expected = brute_distance(&gens, n).map_or(Distance::Infinity, Distance::Finite);
        let from_enum = distance_from_enumerators(&a, &b).map_err(|e| e.to_string())?;
        ensure!(from_enum == expected, "distance {from_enum} != {expected} for {gens:?}");

        let even = elements.iter().filter(|&&e| weight(e) % 2 == 0).count();
        ensure!(even == elements.len() || 2 * even == elements.len(), "oracle parity fails for {gens:?}");
        ensure!(parity_property(&a), "parity property fails for {gens:?}");

        // every qubit is touched whenever d >= 2 (k = 0 included)
        if expected != Distance::Finite(1) {
            let total: u64 = elements.iter().map(|&e| weight(e) as u64).sum();
            let mean = BigRational::new(BigInt::from(total), BigInt::from(elements.len()));
            let formula = BigRational::new(BigInt::from(3 * n as i64 - a_counts[1] as i64), BigInt::from(4));
            ensure!(mean == formula, "mean weight {mean} != {formula} for {gens:?}");
            mean_weight_checked += 1;
        }
    }
    Ok(EnumeratorSummary {
        groups: count,
        mean_weight_checked,
    })
}

fn bits(mask: u32, n: usize) -> BitVector {
    BitVector::from_indices(n, (0..n).filter(|&i| mask >> i & 1 == 1))
}

/// Is there `x` of weight `<= t` with `H x = s`?
fn brute_mld(h: &[u32], n: usize, s: u32, t: usize) -> bool {
    (0u32..1 << n).any(|x| {
        x.count_ones() as usize <= t && h.iter().enumerate().all(|(i, &row)| ((row & x).count_ones() & 1) == (s >> i & 1))
    })
}

/// `count` random MLD instances with `m <= 3`, `n <= 6`; returns the
/// number of YES answers.
pub fn reduction_chain(seed: u64, count: usize) -> Result<usize, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut yes = 0;
    for _ in 0..count {
        let n = rng.gen_range(2..=6);
        let m = rng.gen_range(1..=3.min(n));
        let h: Vec<u32> = loop {
            let rows: Vec<u32> = (0..m).map(|_| rng.gen_range(0..1u32 << n)).collect();
            if rank(&rows.iter().map(|&r| (r, 0)).collect::<Vec<_>>()) == m {
                break rows;
            }
        };
        let s = rng.gen_range(0..1u32 << m);
        let t = rng.gen_range(0..=n);
        let inst = MLDInstance::new(h.iter().map(|&r| bits(r, n)).collect(), n, bits(s, m), t).map_err(|e| e.to_string())?;
        let direct = decide_mld(&inst).map_err(|e| e.to_string())?;
        ensure!((direct == Answer::Yes) == brute_mld(&h, n, s, t), "decide_mld wrong on\n{}", inst.to_text());
        let chained = match mld_to_sbp(&inst) {
            MldReduction::NoSolution => Answer::No,
            MldReduction::Instance(sbp) => {
                let via_sbp = decide_sbp(&sbp).map_err(|e| e.to_string())?;
                let mwsg = sbp_to_mwsg(&sbp).map_err(|e| e.to_string())?;
                let via_mwsg = decide_mwsg(&mwsg).map_err(|e| e.to_string())?;
                ensure!(via_sbp == via_mwsg, "SBP and MW-SG disagree on\n{}", inst.to_text());
                via_mwsg
            }
        };
        ensure!(direct == chained, "chain changes the answer on\n{}", inst.to_text());
        yes += (direct == Answer::Yes) as usize;
    }
    Ok(yes)
}

/// `decide_mwsg(G, W(G)) = YES` and `decide_mwsg(G, W(G) - 1) = NO` on
/// `count` random groups.
pub fn mwsg_threshold(seed: u64, count: usize) -> Result<(), String> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut checked = 0;
    while checked < count {
        let n = rng.gen_range(2..=7);
        let r = rng.gen_range(1..=n);
        let gens = random_generators(&mut rng, n, r);
        if gens.is_empty() {
            continue;
        }
        let g = to_group(&gens, n);
        let w = g.optimal_weight().map_err(|e| e.to_string())?;
        ensure!(w == brute_w(&gens), "W = {w} but brute force gives {} for {gens:?}", brute_w(&gens));
        let at = decide_mwsg(&MWSGInstance { generators: g.clone(), t: w }).map_err(|e| e.to_string())?;
        let below = decide_mwsg(&MWSGInstance { generators: g, t: w - 1 }).map_err(|e| e.to_string())?;
        ensure!(at == Answer::Yes && below == Answer::No, "threshold not tight for {gens:?}");
        checked += 1;
    }
    Ok(())
}
