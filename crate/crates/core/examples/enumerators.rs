//! Weight enumerators of a stabilizer group: `A` by enumeration, `B` by
//! the MacWilliams transform and the shadow enumerator.
//!
//! Usage: `cargo run --release --example enumerators`

use num_bigint::BigInt;
use stabweight::enumerator::{
    average_group_weight_check, distance_from_enumerators, enumerator_from_group, macwilliams, parity_property, shadow,
};
use stabweight::StabilizerGenerators;

fn main() -> stabweight::Result<()> {
    let steane = StabilizerGenerators::from_strs(&[
        "IIIXXXX", "IXXIIXX", "XIXIXIX", "IIIZZZZ", "IZZIIZZ", "ZIZIZIZ",
    ])?;
    let a = enumerator_from_group(&steane)?;
    let k_factor = BigInt::from(1u8) << steane.logical_qubits();
    let b = macwilliams(&a, &k_factor);
    println!("A  = {a}");
    println!("B  = {b}");
    println!("Sh = {}", shadow(&a, &k_factor));
    println!("d from enumerators = {}", distance_from_enumerators(&a, &b)?);
    println!("d by search        = {}", steane.distance()?);
    println!("parity property: {}", parity_property(&a));
    let (mean, formula) = average_group_weight_check(&steane)?;
    println!("mean weight over the group {mean}, (3n - A_1)/4 = {formula}");
    Ok(())
}
