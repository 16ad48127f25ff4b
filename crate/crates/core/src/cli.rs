//! Command-line front end.
//!
//! [`run`] parses arguments, dispatches to the library and returns the
//! process exit code: 0 success, 1 usage or input error, 2 budget
//! exhausted, 3 verification mismatch. Data goes to the supplied writer,
//! progress and diagnostics to standard error.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::architecture::{self, ConnectivityGraph};
use crate::bounds::{self, TableOptions, WeightTable};
use crate::catalog::{self, Catalog, VerificationStatus};
use crate::enumerator;
use crate::exactlp::LinearProgram;
use crate::reductions::{self, Answer, MLDInstance, MWSGInstance, MldReduction, SBPInstance};
use crate::stabilizer::{Budget, StabilizerGenerators};
use crate::{Error, Result};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_BUDGET: i32 = 2;
pub const EXIT_MISMATCH: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "stabweight", version, about = "Check-weight bounds and verification for stabilizer codes")]
pub struct Cli {
    /// Worker threads (defaults to the available cores).
    #[arg(long, global = true)]
    pub jobs: Option<usize>,

    #[command(flatten)]
    pub budget: BudgetArgs,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct BudgetArgs {
    /// Largest n - k for which a stabilizer group is enumerated.
    #[arg(long, global = true, default_value_t = Budget::default().max_group_rank)]
    pub max_group_rank: usize,
    /// Largest block length accepted by the distance search.
    #[arg(long, global = true, default_value_t = Budget::default().max_distance_qubits)]
    pub max_distance_qubits: usize,
    /// Largest Pauli weight reached by the distance search.
    #[arg(long, global = true, default_value_t = Budget::default().max_distance_weight)]
    pub max_distance_weight: usize,
}

impl BudgetArgs {
    fn budget(&self) -> Budget {
        Budget {
            max_distance_qubits: self.max_distance_qubits,
            max_distance_weight: self.max_distance_weight,
            max_group_rank: self.max_group_rank,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Csv,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Problem {
    Mld,
    Sbp,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Code parameters, a weight-optimal generating set and the enumerator.
    Params {
        /// Generator file: one Pauli string per line, '#' comments.
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Weight enumerators A, B and the shadow enumerator of a group.
    Enumerators {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Lower-bound table joined with catalog upper bounds.
    Table {
        #[arg(long)]
        max_n: usize,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        /// Overrides file replacing the bundled one.
        #[arg(long, conflicts_with = "no_overrides")]
        overrides: Option<PathBuf>,
        #[arg(long)]
        no_overrides: bool,
        /// Catalog file replacing the bundled one.
        #[arg(long)]
        catalog: Option<PathBuf>,
        /// Skip catalog verification; upper bounds are reported as inf.
        #[arg(long)]
        lower_only: bool,
        /// Keep rows whose every distance is infeasible (dropped by default).
        #[arg(long)]
        all_cells: bool,
    },
    /// Feasibility of the enumerator LP for [[n,k,d]], optionally with W <= w.
    LpCheck {
        #[arg(required_unless_present = "lp")]
        n: Option<usize>,
        #[arg(required_unless_present = "lp")]
        k: Option<usize>,
        #[arg(required_unless_present = "lp")]
        d: Option<usize>,
        w: Option<usize>,
        /// Solve an LP read from a file instead ("vars N", then rows "c_1 .. c_N REL rhs" with REL one of =, >=, <=).
        #[arg(long, conflicts_with_all = ["n", "k", "d", "w"])]
        lp: Option<PathBuf>,
        /// Print the witness or the infeasibility certificate.
        #[arg(long)]
        certificate: bool,
    },
    /// Structure-agnostic weight lower bound from the coarse LP.
    ArchBound { n: usize, k: usize, d: usize },
    /// Smallest check radius on a connectivity graph admitting [[n,k,d]].
    ArchSearch {
        /// "eagle" or an edge-list file.
        #[arg(long, default_value = "eagle")]
        graph: String,
        /// "default" (bundled Eagle centers) or a file of qubit indices.
        #[arg(long, default_value = "default")]
        centers: String,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        d: usize,
        #[arg(long, default_value_t = 10)]
        r_max: usize,
        /// Cap on the subset size explored by the support-union histogram.
        #[arg(long)]
        cap: Option<usize>,
        /// Report feasibility at every radius instead of bisecting.
        #[arg(long)]
        profile: bool,
    },
    /// Reduction gadgets between decoding, basis and generator problems.
    Reduce {
        #[arg(long, value_enum)]
        from: Problem,
        file: PathBuf,
        /// Decide both the source and the fully reduced instance by brute force.
        #[arg(long)]
        decide: bool,
    },
    /// Recompute every catalog entry and compare with its label.
    VerifyCatalog {
        #[arg(long)]
        catalog: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Treat loose labels and incomplete entries as mismatches.
        #[arg(long)]
        strict: bool,
    },
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = e.print();
            return code;
        }
    };
    if let Some(jobs) = cli.jobs {
        if jobs == 0 {
            eprintln!("error: --jobs must be positive");
            return EXIT_USAGE;
        }
        // a second call in the same process keeps the first pool
        let _ = rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global();
    }
    match dispatch(&cli, out) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::Budget(_) => EXIT_BUDGET,
                _ => EXIT_USAGE,
            }
        }
    }
}

fn dispatch(cli: &Cli, out: &mut dyn Write) -> Result<i32> {
    let budget = cli.budget.budget();
    match &cli.command {
        Command::Params { file, format } => cmd_params(file, *format, &budget, out),
        Command::Enumerators { file, format } => cmd_enumerators(file, *format, &budget, out),
        Command::Table {
            max_n,
            format,
            overrides,
            no_overrides,
            catalog,
            lower_only,
            all_cells,
        } => {
            let sources = TableSources {
                overrides: overrides.as_deref(),
                no_overrides: *no_overrides,
                catalog: catalog.as_deref(),
                lower_only: *lower_only,
            };
            cmd_table(*max_n, *format, &sources, *all_cells, &budget, out)
        }
        Command::LpCheck {
            n,
            k,
            d,
            w,
            lp,
            certificate,
        } => match lp {
            Some(path) => cmd_lp_file(path, *certificate, out),
            None => cmd_lp_check(n.unwrap_or(0), k.unwrap_or(0), d.unwrap_or(0), *w, *certificate, out),
        },
        Command::ArchBound { n, k, d } => {
            let lb = architecture::structure_agnostic_weight_lb(*n, *k, *d)?;
            writeln!(out, "weight lower bound {lb}")?;
            Ok(EXIT_OK)
        }
        Command::ArchSearch {
            graph,
            centers,
            n,
            k,
            d,
            r_max,
            cap,
            profile,
        } => cmd_arch_search(graph, centers, (*n, *k, *d), *r_max, *cap, *profile, out),
        Command::Reduce { from, file, decide } => cmd_reduce(*from, file, *decide, &budget, out),
        Command::VerifyCatalog { catalog, format, strict } => {
            cmd_verify_catalog(catalog.as_deref(), *format, *strict, &budget, out)
        }
    }
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Invalid(format!("{}: {e}", path.display())))
}

fn load_group(path: &Path) -> Result<StabilizerGenerators> {
    let g = StabilizerGenerators::from_text(&read(path)?)?;
    if g.num_qubits() == 0 {
        return Err(Error::Invalid(format!("{}: no generators", path.display())));
    }
    Ok(g)
}

fn cmd_params(path: &Path, format: Format, budget: &Budget, out: &mut dyn Write) -> Result<i32> {
    let g = load_group(path)?;
    let params = g.code_parameters_with(budget)?;
    let set = g.weight_optimal_with(budget)?;
    let a = enumerator::enumerator_from_group_with(&g, budget)?;
    match format {
        Format::Json => {
            let value = json!({
                "parameters": params,
                "weight_optimal_generators": set.iter().map(ToString::to_string).collect::<Vec<_>>(),
                "enumerator": a.values.iter().map(ToString::to_string).collect::<Vec<_>>(),
            });
            writeln!(out, "{}", serde_json::to_string_pretty(&value).expect("json"))?;
        }
        _ => {
            writeln!(out, "{params}")?;
            writeln!(out, "weight-optimal generators:")?;
            for p in &set {
                writeln!(out, "  {p}  (weight {})", p.weight())?;
            }
            writeln!(out, "A = {a}")?;
        }
    }
    Ok(EXIT_OK)
}

fn cmd_enumerators(path: &Path, format: Format, budget: &Budget, out: &mut dyn Write) -> Result<i32> {
    let g = load_group(path)?;
    let a = enumerator::enumerator_from_group_with(&g, budget)?;
    let k_factor = num_bigint::BigInt::from(1u8) << g.logical_qubits();
    let b = enumerator::macwilliams(&a, &k_factor);
    let sh = enumerator::shadow(&a, &k_factor);
    let d = enumerator::distance_from_enumerators(&a, &b)?;
    let parity = enumerator::parity_property(&a);
    let strs = |v: &enumerator::EnumeratorVector| v.values.iter().map(ToString::to_string).collect::<Vec<_>>();
    match format {
        Format::Json => {
            let value = json!({
                "n": g.num_qubits(),
                "k": g.logical_qubits(),
                "A": strs(&a),
                "B": strs(&b),
                "Sh": strs(&sh),
                "distance": d.to_string(),
                "parity_property": parity,
            });
            writeln!(out, "{}", serde_json::to_string_pretty(&value).expect("json"))?;
        }
        _ => {
            writeln!(out, "A  = {a}")?;
            writeln!(out, "B  = {b}")?;
            writeln!(out, "Sh = {sh}")?;
            writeln!(out, "d  = {d}")?;
            writeln!(out, "parity property holds: {parity}")?;
        }
    }
    Ok(EXIT_OK)
}

struct TableSources<'a> {
    overrides: Option<&'a Path>,
    no_overrides: bool,
    catalog: Option<&'a Path>,
    lower_only: bool,
}

fn cmd_table(
    max_n: usize,
    format: Format,
    sources: &TableSources<'_>,
    all_cells: bool,
    budget: &Budget,
    out: &mut dyn Write,
) -> Result<i32> {
    if max_n < 4 {
        return Err(Error::Invalid("--max-n must be at least 4".into()));
    }
    let overrides = match (sources.overrides, sources.no_overrides) {
        (_, true) => Vec::new(),
        (Some(path), false) => bounds::load_overrides(path)?,
        (None, false) => bounds::default_overrides(),
    };
    let options = TableOptions {
        overrides,
        progress: Some(|n| eprintln!("table: n = {n} done")),
    };
    let lower = bounds::compute_table_with(max_n, &options);
    let upper = if sources.lower_only {
        catalog::UpperBoundTable::default()
    } else {
        let cat = match sources.catalog {
            Some(path) => Catalog::parse(&read(path)?)?,
            None => Catalog::bundled()?,
        };
        eprintln!("table: verifying {} catalog entries", cat.entries().len());
        catalog::UpperBoundTable::from_reports(&cat.verify_all_with(budget))
    };
    let mut rows = catalog::join_tables(&lower, &upper);
    if !all_cells {
        let live: std::collections::HashSet<(usize, usize)> =
            rows.iter().filter(|r| r.wlb.is_finite()).map(|r| (r.n, r.k)).collect();
        rows.retain(|r| live.contains(&(r.n, r.k)));
    }
    match format {
        Format::Json => writeln!(out, "{}", serde_json::to_string_pretty(&rows).expect("json"))?,
        Format::Csv => write!(out, "{}", catalog::ranges_to_csv(&rows))?,
        Format::Text => {
            for r in &rows {
                writeln!(out, "n={:<3} k={:<3} d={:<3} W_opt {:<6} ({})", r.n, r.k, r.d, r.range(), r.source)?;
            }
        }
    }
    Ok(EXIT_OK)
}

fn cmd_lp_check(n: usize, k: usize, d: usize, w: Option<usize>, show: bool, out: &mut dyn Write) -> Result<i32> {
    if n == 0 || k > n || d == 0 {
        return Err(Error::Invalid(format!("bad parameters [[{n},{k},{d}]]")));
    }
    let result = bounds::standard_lp(n, k, d).feasible();
    if !result.is_feasible() {
        writeln!(out, "infeasible (no code)")?;
        if show {
            print_vector(out, "certificate", result.certificate.as_deref())?;
        }
        return Ok(EXIT_OK);
    }
    let Some(w) = w else {
        writeln!(out, "feasible")?;
        if show {
            print_vector(out, "witness", result.witness.as_deref())?;
        }
        return Ok(EXIT_OK);
    };
    if k == 0 || k >= n || d < 2 {
        return Err(Error::Invalid("weight check needs 1 <= k < n and d >= 2".into()));
    }
    if bounds::weight3_rate_rule(n, k, d) && w >= 3 {
        writeln!(out, "feasible (weight 3 achievable)")?;
        return Ok(EXIT_OK);
    }
    let start = 4.max(bounds::nk_lower_bound(n, k)?);
    let table: WeightTable = if n > 4 {
        bounds::compute_table_with(n - 1, &TableOptions::default())
    } else {
        WeightTable::default()
    };
    for candidate in start..=w {
        if !bounds::excluded(n, k, d, candidate, &table) {
            writeln!(out, "feasible (first admissible W = {candidate})")?;
            return Ok(EXIT_OK);
        }
    }
    writeln!(out, "infeasible (no code with W <= {w})")?;
    Ok(EXIT_OK)
}

fn cmd_lp_file(path: &Path, show: bool, out: &mut dyn Write) -> Result<i32> {
    let lp = LinearProgram::from_text(&read(path)?)?;
    let result = lp.feasible();
    if result.is_feasible() {
        writeln!(out, "feasible")?;
        if show {
            print_vector(out, "witness", result.witness.as_deref())?;
        }
    } else {
        writeln!(out, "infeasible")?;
        if show {
            print_vector(out, "certificate", result.certificate.as_deref())?;
        }
    }
    Ok(EXIT_OK)
}

fn print_vector(out: &mut dyn Write, name: &str, v: Option<&[num_rational::BigRational]>) -> Result<()> {
    if let Some(v) = v {
        let parts: Vec<String> = v.iter().map(ToString::to_string).collect();
        writeln!(out, "{name} {}", parts.join(" "))?;
    }
    Ok(())
}

fn cmd_arch_search(
    graph: &str,
    centers: &str,
    (n, k, d): (usize, usize, usize),
    r_max: usize,
    cap: Option<usize>,
    profile: bool,
    out: &mut dyn Write,
) -> Result<i32> {
    let graph: ConnectivityGraph = match graph {
        "eagle" => architecture::eagle_graph(),
        path => architecture::load_graph(Path::new(path))?,
    };
    let centers = match centers {
        "default" => architecture::eagle_centers(),
        path => architecture::load_centers(Path::new(path))?,
    };
    if n != graph.num_qubits() {
        return Err(Error::Invalid(format!("n = {n} but the graph has {} qubits", graph.num_qubits())));
    }
    if profile {
        for r in 0..=r_max {
            let ok = architecture::radius_feasible(&graph, &centers, n, k, d, r, cap)?;
            eprintln!("arch-search: radius {r} done");
            writeln!(out, "radius {r} {}", if ok { "feasible" } else { "infeasible" })?;
        }
        return Ok(EXIT_OK);
    }
    match architecture::min_radius(&graph, &centers, n, k, d, r_max, cap)? {
        Some(r) => writeln!(out, "min radius {r}")?,
        None => writeln!(out, "no feasible radius up to {r_max}")?,
    }
    Ok(EXIT_OK)
}

fn cmd_reduce(from: Problem, path: &Path, decide: bool, budget: &Budget, out: &mut dyn Write) -> Result<i32> {
    let text = read(path)?;
    let (sbp, source_answer) = match from {
        Problem::Mld => {
            let mld = MLDInstance::parse(&text)?;
            let answer = if decide { Some(reductions::decide_mld(&mld)?) } else { None };
            match reductions::mld_to_sbp(&mld) {
                MldReduction::Instance(sbp) => {
                    writeln!(out, "# SBP instance")?;
                    write!(out, "{}", sbp.to_text())?;
                    (Some(sbp), answer)
                }
                MldReduction::NoSolution => {
                    writeln!(out, "# syndrome unreachable: MLD answer is NO")?;
                    (None, answer)
                }
            }
        }
        Problem::Sbp => {
            let sbp = SBPInstance::parse(&text)?;
            let answer = if decide { Some(reductions::decide_sbp(&sbp)?) } else { None };
            (Some(sbp), answer)
        }
    };
    let target_answer = match sbp {
        Some(sbp) => {
            let mwsg: MWSGInstance = reductions::sbp_to_mwsg(&sbp)?;
            writeln!(out, "# MW-SG instance")?;
            for g in mwsg.generators.generators() {
                writeln!(out, "{g}")?;
            }
            writeln!(out, "{}", mwsg.t)?;
            if decide {
                Some(reductions::decide_mwsg_with(&mwsg, budget)?)
            } else {
                None
            }
        }
        None => Some(Answer::No),
    };
    if let (Some(src), Some(dst)) = (source_answer, target_answer) {
        writeln!(out, "source {src}")?;
        writeln!(out, "reduced {dst}")?;
        if src != dst {
            eprintln!("reduce: answers disagree");
            return Ok(EXIT_MISMATCH);
        }
    }
    Ok(EXIT_OK)
}

fn cmd_verify_catalog(path: Option<&Path>, format: Format, strict: bool, budget: &Budget, out: &mut dyn Write) -> Result<i32> {
    let cat = match path {
        Some(path) => Catalog::parse(&read(path)?)?,
        None => Catalog::bundled()?,
    };
    eprintln!("verify-catalog: {} entries", cat.entries().len());
    let reports = cat.verify_all_with(budget);
    match format {
        Format::Json => writeln!(out, "{}", serde_json::to_string_pretty(&reports).expect("json"))?,
        _ => {
            for r in &reports {
                writeln!(out, "{r}")?;
            }
        }
    }
    let count = |s: VerificationStatus| reports.iter().filter(|r| r.status == s).count();
    eprintln!(
        "verify-catalog: {} verified, {} weight-below-label, {} incomplete, {} upper-bound-only, {} mismatch, {} failed",
        count(VerificationStatus::Verified),
        count(VerificationStatus::WeightBelowLabel),
        count(VerificationStatus::Incomplete),
        count(VerificationStatus::UpperBoundOnly),
        count(VerificationStatus::Mismatch),
        count(VerificationStatus::Failed),
    );
    let bad = reports.iter().any(|r| match r.status {
        VerificationStatus::Mismatch | VerificationStatus::Failed => true,
        VerificationStatus::Verified => false,
        _ => strict,
    });
    Ok(if bad { EXIT_MISMATCH } else { EXIT_OK })
}
