//! Verifies every entry of the bundled construction catalog.
//!
//! Usage: `cargo run --release --example verify_catalog`

use stabweight::catalog::Catalog;

fn main() -> stabweight::Result<()> {
    let catalog = Catalog::bundled()?;
    let start = std::time::Instant::now();
    let reports = catalog.verify_all();
    for r in &reports {
        println!("{r}");
    }
    let passed = reports.iter().filter(|r| r.passed()).count();
    eprintln!("{passed}/{} verified in {:.2?}", reports.len(), start.elapsed());
    Ok(())
}
