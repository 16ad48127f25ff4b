//! Check-radius bounds on the 127-qubit heavy-hex Eagle layout.
//!
//! Usage: `cargo run --release --example eagle_radius -- [r_max]`
//!
//! The exact LPs have 127 variables; expect around a minute.

use stabweight::architecture::{
    ball, eagle_centers, eagle_graph, radius_feasible, structure_agnostic_weight_lb, ub_histogram, CheckPlacement,
};

fn main() -> stabweight::Result<()> {
    let r_max: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(5);
    let graph = eagle_graph();
    let centers = eagle_centers();
    println!("{} qubits, {} edges, {} check centers", graph.num_qubits(), graph.edges().len(), centers.len());
    for r in 0..=r_max {
        println!("|ball(62, {r})| = {}", ball(&graph, 62, r)?.len());
    }
    println!("structure-agnostic bound: W >= {}", structure_agnostic_weight_lb(127, 100, 6)?);
    for r in 3..=r_max {
        let placement = CheckPlacement::new(&graph, &centers, r)?;
        let hist = ub_histogram(&placement, None)?;
        let ok = radius_feasible(&graph, &centers, 127, 100, 6, r, None)?;
        println!(
            "radius {r}: max support {}, {} check subsets, LP feasible = {ok}",
            placement.max_support(),
            hist.total()
        );
    }
    Ok(())
}
