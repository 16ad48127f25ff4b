//! Exact LP feasibility against basic-solution enumeration.

mod common;

use common::lp::*;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use stabweight::exactlp::{LinearProgram, Relation};

#[test]
fn five_hundred_random_programs() {
    let (f, i) = check_random_lps(11, 500).unwrap();
    assert!(f > 50 && i > 50, "unbalanced sample: {f} feasible, {i} infeasible");
}

#[test]
fn row_generation_path_matches_oracle() {
    // more rows than a single tableau takes, so the row-generation path runs
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..40 {
        let nv = rng.gen_range(2..=4);
        let rows: Vec<Row> = (0..rng.gen_range(25..=32))
            .map(|_| Row {
                coeffs: (0..nv).map(|_| rng.gen_range(-3..=3)).collect(),
                rel: if rng.gen_bool(0.1) { Relation::Eq } else { [Relation::Ge, Relation::Le][rng.gen_range(0..2)] },
                rhs: rng.gen_range(-6..=6),
            })
            .collect();
        let lp = build(nv, &rows);
        let res = lp.feasible();
        assert_eq!(res.is_feasible(), brute_feasible(&rows, nv));
        match (&res.witness, &res.certificate) {
            (Some(w), _) => assert!(witness_ok(&rows, w)),
            (_, Some(c)) => assert!(certificate_ok(&rows, nv, c)),
            _ => panic!("no evidence returned"),
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn text_round_trip(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (nv, rows) = random_lp(&mut rng);
        let lp = build(nv, &rows);
        let back = LinearProgram::from_text(&lp.to_text()).unwrap();
        prop_assert_eq!(back, lp);
    }
}
