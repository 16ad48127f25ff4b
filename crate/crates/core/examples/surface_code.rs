//! Rotated surface codes `[[d^2,1,d;4]]`.
//!
//! Usage: `cargo run --release --example surface_code -- [d_max]`

use stabweight::catalog::builder_surface_code;

fn main() -> stabweight::Result<()> {
    let d_max: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(3);
    for d in 2..=d_max {
        let g = builder_surface_code(d)?;
        println!("d = {d}: {}", g.code_parameters()?);
        if d == 3 {
            for p in g.generators() {
                println!("    {p}");
            }
        }
    }
    Ok(())
}
