//! Code parameters of random groups against brute force: distance, W,
//! W_avg over all generating sets, and the tensor-product law.

mod common;

use common::*;
use num_rational::Rational64;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use stabweight::{Distance, StabilizerGenerators};

/// Minimum of max and of average weight over every generating set.
fn brute_w_and_avg(gens: &[Packed]) -> (usize, Rational64) {
    let r = gens.len();
    let nontrivial: Vec<Packed> = group_elements(gens).into_iter().filter(|&e| e != (0, 0)).collect();
    let mut best_max = usize::MAX;
    let mut best_sum = usize::MAX;
    let mut pick = Vec::with_capacity(r);
    fn rec(
        start: usize,
        r: usize,
        all: &[Packed],
        pick: &mut Vec<Packed>,
        best_max: &mut usize,
        best_sum: &mut usize,
    ) {
        if pick.len() == r {
            if rank(pick) == r {
                *best_max = (*best_max).min(pick.iter().map(|&p| weight(p)).max().unwrap_or(0));
                *best_sum = (*best_sum).min(pick.iter().map(|&p| weight(p)).sum());
            }
            return;
        }
        for i in start..all.len() {
            pick.push(all[i]);
            rec(i + 1, r, all, pick, best_max, best_sum);
            pick.pop();
        }
    }
    rec(0, r, &nontrivial, &mut pick, &mut best_max, &mut best_sum);
    (best_max, Rational64::new(best_sum as i64, r as i64))
}

#[test]
fn parameters_match_brute_force() {
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    for _ in 0..150 {
        let n = rng.gen_range(2..=6);
        let r = rng.gen_range(1..=n.min(4));
        let gens = random_generators(&mut rng, n, r);
        if gens.is_empty() {
            continue;
        }
        let g = to_group(&gens, n);
        let p = g.code_parameters().unwrap();
        assert_eq!(p.k, n - gens.len());
        assert_eq!(p.d, brute_distance(&gens, n).map_or(Distance::Infinity, Distance::Finite));
        assert_eq!(p.w, brute_w(&gens));
        if gens.len() <= 3 {
            let (w, avg) = brute_w_and_avg(&gens);
            assert_eq!(p.w, w);
            assert_eq!(p.w_avg, avg, "gens={gens:?}");
        }
        // the weight-optimal set generates the same group
        let set = g.weight_optimal_generating_set().unwrap();
        let rebuilt = StabilizerGenerators::new(n, set.clone()).unwrap();
        assert_eq!(rebuilt.rank(), g.rank());
        for op in g.generators() {
            assert!(rebuilt.member(op).unwrap() != stabweight::Membership::NotMember);
        }
    }
}

#[test]
fn g1_g2_tension() {
    let g1 = StabilizerGenerators::from_strs(&["XXXI", "IYYY", "ZIZZ"]).unwrap();
    let g2 = StabilizerGenerators::from_strs(&["XXXX", "ZZZZ", "XXII"]).unwrap();
    let (p1, p2) = (g1.code_parameters().unwrap(), g2.code_parameters().unwrap());
    assert_eq!((p1.n, p1.k, p1.d), (4, 1, Distance::Finite(2)));
    assert_eq!((p2.n, p2.k, p2.d), (4, 1, Distance::Finite(2)));
    assert!(p1.w < p2.w && p1.w_avg > p2.w_avg);
    assert_eq!((p1.w, p2.w_avg), (3, Rational64::new(8, 3)));
}

fn random_pair() -> impl Strategy<Value = (u64, usize, usize)> {
    (any::<u64>(), 1usize..=4, 1usize..=4)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(60))]

    #[test]
    fn tensor_law((seed, n1, n2) in random_pair()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let r1 = rng.gen_range(1..=n1);
        let r2 = rng.gen_range(1..=n2);
        let a = to_group(&random_generators(&mut rng, n1, r1), n1);
        let b = to_group(&random_generators(&mut rng, n2, r2), n2);
        let (pa, pb) = (a.code_parameters().unwrap(), b.code_parameters().unwrap());
        let pt = a.tensor_product(&b).code_parameters().unwrap();
        prop_assert_eq!(pt.n, pa.n + pb.n);
        prop_assert_eq!(pt.k, pa.k + pb.k);
        prop_assert_eq!(pt.d, pa.d.min(pb.d));
        prop_assert_eq!(pt.w, pa.w.max(pb.w));
        let (ra, rb) = ((pa.n - pa.k) as i64, (pb.n - pb.k) as i64);
        if ra + rb > 0 {
            let total = pa.w_avg * Rational64::from(ra) + pb.w_avg * Rational64::from(rb);
            prop_assert_eq!(pt.w_avg, total / Rational64::from(ra + rb));
        }
    }

    #[test]
    fn padding_adds_weight_one_checks((seed, n, m) in random_pair()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let r = rng.gen_range(1..=n);
        let g = to_group(&random_generators(&mut rng, n, r), n);
        let p = g.code_parameters().unwrap();
        let padded = g.pad(m).code_parameters().unwrap();
        prop_assert_eq!((padded.n, padded.k, padded.d, padded.w), (p.n + m, p.k, p.d, p.w.max(1)));
    }
}
