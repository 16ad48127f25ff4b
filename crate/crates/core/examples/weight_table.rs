//! Computes the `W_LB(n,k,d)` table and prints it as CSV.
//!
//! Usage: `cargo run --release --example weight_table -- [max_n]`

use stabweight::bounds::compute_table;

fn main() {
    let max_n = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(12);
    let start = std::time::Instant::now();
    let table = compute_table(max_n);
    print!("{}", table.to_csv());
    eprintln!("{} cells in {:.2?}", table.len(), start.elapsed());
}
