//! Exact `[[n,k,d;w]]` parameters, weight-optimal generating sets and
//! the tensor-product law on small codes.
//!
//! Usage: `cargo run --release --example code_parameters`

use stabweight::StabilizerGenerators;

fn main() -> stabweight::Result<()> {
    let g1 = StabilizerGenerators::from_strs(&["XXXI", "IYYY", "ZIZZ"])?;
    let g2 = StabilizerGenerators::from_strs(&["XXXX", "ZZZZ", "XXII"])?;
    let five = StabilizerGenerators::from_strs(&["XZZXI", "IXZZX", "XIXZZ", "ZXIXZ"])?;
    for (name, g) in [("G1", &g1), ("G2", &g2), ("five-qubit", &five)] {
        let params = g.code_parameters()?;
        println!("{name:>10}: {params}");
        for p in g.weight_optimal_generating_set()? {
            println!("{:>12}{p}", "");
        }
    }
    // parameters of a tensor product: n and k add, d and W take the minimum and maximum
    let product = g1.tensor_product(&five);
    println!("G1 x five-qubit: {}", product.code_parameters()?);
    println!("padded G1: {}", g1.pad(2).code_parameters()?);
    Ok(())
}
