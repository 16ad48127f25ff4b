//! Exact-rational feasibility with witnesses and Farkas certificates.
//!
//! Usage: `cargo run --release --example exact_lp`

use num_bigint::BigInt;
use stabweight::bounds::standard_lp;
use stabweight::exactlp::{LinearProgram, Relation};

fn main() -> stabweight::Result<()> {
    let mut lp = LinearProgram::new(2);
    let i = |v: i64| BigInt::from(v);
    lp.add_row(&[i(1), i(1)], Relation::Ge, i(1));
    lp.add_row(&[i(2), i(-1)], Relation::Eq, i(0));
    let res = lp.feasible();
    let witness = res.witness.expect("feasible");
    println!("feasible: x = {} / y = {}", witness[0], witness[1]);
    assert!(lp.verify_witness(&witness)?);

    lp.add_row(&[i(1), i(0)], Relation::Le, i(0));
    let res = lp.feasible();
    let cert = res.certificate.expect("infeasible");
    let parts: Vec<String> = cert.iter().map(ToString::to_string).collect();
    println!("after x <= 0: infeasible, certificate [{}]", parts.join(", "));
    assert!(lp.verify_certificate(&cert)?);

    // the enumerator LP rules out a [[5,2,3]] code
    let no_code = standard_lp(5, 2, 3);
    println!("[[5,2,3]] LP: {} rows, feasible = {}", no_code.rows().len(), no_code.feasible().is_feasible());
    print!("{}", no_code.to_text());
    Ok(())
}
