//! The decoding -> shortest basis -> weight-of-generators reduction chain.
//!
//! Usage: `cargo run --release --example reductions`

use stabweight::reductions::{decide_mld, decide_mwsg, mld_to_sbp, sbp_to_mwsg, MLDInstance, MldReduction};

fn main() -> stabweight::Result<()> {
    let text = "1 1 0 0 1\n0 1 1 0 0\n0 0 1 1 1\n1 0 1\n";
    for t in 0..=3 {
        let mld = MLDInstance::parse(&format!("{text}{t}\n"))?;
        let direct = decide_mld(&mld)?;
        let MldReduction::Instance(sbp) = mld_to_sbp(&mld) else {
            println!("t = {t}: syndrome unreachable");
            continue;
        };
        let mwsg = sbp_to_mwsg(&sbp)?;
        let reduced = decide_mwsg(&mwsg)?;
        println!("t = {t}: MLD {direct}, reduced MW-SG {reduced} ({} generators on {} qubits, threshold {})",
            mwsg.generators.rank(), mwsg.generators.num_qubits(), mwsg.t);
        assert_eq!(direct, reduced);
    }
    Ok(())
}
