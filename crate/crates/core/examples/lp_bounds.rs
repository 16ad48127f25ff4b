//! Lower bounds on the optimal check weight for a single `(n, k, d)`.
//!
//! Usage: `cargo run --release --example lp_bounds -- [n k d]`

use stabweight::bounds::{
    admissible_choices, compute_table_with, excluded, nk_lower_bound, weight3_rate_rule, TableOptions,
};

fn main() -> stabweight::Result<()> {
    let args: Vec<usize> = std::env::args().skip(1).filter_map(|s| s.parse().ok()).collect();
    let (n, k, d) = match args[..] {
        [n, k, d] => (n, k, d),
        _ => (8, 3, 3),
    };
    println!("analytic floor ceil(2n/(n-k)) = {}", nk_lower_bound(n, k)?);
    println!("weight-3 rate rule applies: {}", weight3_rate_rule(n, k, d));
    // the weight LPs consult the table for smaller n
    let table = compute_table_with(n - 1, &TableOptions::default());
    for w in 4..=n {
        let choices = admissible_choices(n, k, d, w, &table);
        let ruled_out = excluded(n, k, d, w, &table);
        println!("w = {w:>2}: {:>2} admissible LP families, excluded = {ruled_out}", choices.len());
        if !ruled_out {
            println!("W_opt({n},{k},{d}) >= {w}");
            break;
        }
    }
    Ok(())
}
