//! Decoding -> shortest basis -> minimum generator weight: answers are
//! preserved along the chain and agree with brute force.

mod common;

use stabweight::bits::BitVector;
use stabweight::reductions::SBPInstance;

fn bits(mask: u32, n: usize) -> BitVector {
    BitVector::from_indices(n, (0..n).filter(|&i| mask >> i & 1 == 1))
}

#[test]
fn hundred_random_mld_instances() {
    let yes = common::checks::reduction_chain(8, 100).unwrap();
    assert!(yes > 10 && yes < 90, "{yes} yes answers");
}

#[test]
fn generator_weight_threshold_is_tight() {
    common::checks::mwsg_threshold(21, 50).unwrap();
}

#[test]
fn sbp_text_round_trip() {
    let inst = SBPInstance::new(vec![bits(0b0011, 4), bits(0b0110, 4)], 4, 2).unwrap();
    assert_eq!(SBPInstance::parse(&inst.to_text()).unwrap(), inst);
    assert!(SBPInstance::new(vec![bits(0b11, 2), bits(0b11, 2)], 2, 1).is_err());
}
