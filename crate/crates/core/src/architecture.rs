//! Check-weight bounds for codes laid out on a device connectivity graph.
//!
//! Each check is confined to the radius-`r` ball around its center qubit.
//! A product of checks then has weight at most the size of the union of
//! their balls, which gives cumulative lower bounds on `A_1 + ... + A_M`
//! that can be added to the enumerator LP.

use std::collections::BTreeSet;
use std::collections::VecDeque;
use std::path::Path;

use num_bigint::BigInt;

use crate::bounds::{standard_lp, WeightBound};
use crate::enumerator::binomial;
use crate::error::{Error, Result};
use crate::exactlp::{LinearProgram, Relation};
use crate::pauli::QubitSet;

/// Largest center count enumerated without a subset-size cap.
pub const MAX_UNCAPPED_CENTERS: usize = 30;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConnectivityGraph {
    num_qubits: usize,
    edges: BTreeSet<(usize, usize)>,
    adjacency: Vec<Vec<usize>>,
}

impl ConnectivityGraph {
    /// Builds a simple graph; duplicate edges collapse, self-loops are rejected.
    pub fn new(num_qubits: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut set = BTreeSet::new();
        for (u, v) in edges {
            if u >= num_qubits || v >= num_qubits {
                return Err(Error::OutOfRange {
                    index: u.max(v),
                    len: num_qubits,
                });
            }
            if u == v {
                return Err(Error::Invalid(format!("self-loop at qubit {u}")));
            }
            set.insert((u.min(v), u.max(v)));
        }
        let mut adjacency = vec![Vec::new(); num_qubits];
        for &(u, v) in &set {
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        Ok(ConnectivityGraph {
            num_qubits,
            edges: set,
            adjacency,
        })
    }

    pub fn num_qubits(&self) -> usize {
        self.num_qubits
    }

    pub fn edges(&self) -> &BTreeSet<(usize, usize)> {
        &self.edges
    }

    pub fn neighbors(&self, q: usize) -> &[usize] {
        &self.adjacency[q]
    }

    /// Parses `u v` lines; `#` starts a comment. The qubit count is one
    /// more than the largest endpoint.
    pub fn parse(text: &str) -> Result<Self> {
        let mut edges = Vec::new();
        for (i, line) in text.lines().enumerate() {
            let line = line.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let fields: Vec<&str> = line.split_whitespace().collect();
            let parsed: Vec<usize> = fields
                .iter()
                .map(|f| f.parse::<usize>())
                .collect::<std::result::Result<_, _>>()
                .map_err(|_| Error::parse(Some(i + 1), format!("bad edge {line:?}")))?;
            if parsed.len() != 2 {
                return Err(Error::parse(Some(i + 1), format!("expected two endpoints, got {line:?}")));
            }
            if parsed[0] == parsed[1] {
                return Err(Error::parse(Some(i + 1), "self-loop"));
            }
            edges.push((parsed[0], parsed[1]));
        }
        let num_qubits = edges.iter().map(|&(u, v)| u.max(v) + 1).max().unwrap_or(0);
        ConnectivityGraph::new(num_qubits, edges)
    }
}

pub fn load_graph(path: &Path) -> Result<ConnectivityGraph> {
    ConnectivityGraph::parse(&std::fs::read_to_string(path)?)
}

/// The 127-qubit heavy-hex layout shipped in `assets/eagle.edges`.
pub fn eagle_graph() -> ConnectivityGraph {
    ConnectivityGraph::parse(include_str!("../assets/eagle.edges")).expect("bundled graph parses")
}

/// One qubit index per line, `#` comments allowed.
pub fn parse_centers(text: &str) -> Result<Vec<usize>> {
    let mut out = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        out.push(
            line.parse()
                .map_err(|_| Error::parse(Some(i + 1), format!("bad center {line:?}")))?,
        );
    }
    Ok(out)
}

pub fn load_centers(path: &Path) -> Result<Vec<usize>> {
    parse_centers(&std::fs::read_to_string(path)?)
}

/// Default 27 check centers on the heavy-hex layout. Only qubits 0, 62
/// and 83 are known members; the rest is a reconstruction that spreads
/// the centers evenly over the seven long rows.
pub fn eagle_centers() -> Vec<usize> {
    parse_centers(include_str!("../assets/eagle_centers.txt")).expect("bundled centers parse")
}

/// Breadth-first ball of radius `r` around `center`, center included.
pub fn ball(graph: &ConnectivityGraph, center: usize, r: usize) -> Result<QubitSet> {
    if center >= graph.num_qubits {
        return Err(Error::OutOfRange {
            index: center,
            len: graph.num_qubits,
        });
    }
    let mut dist = vec![usize::MAX; graph.num_qubits];
    dist[center] = 0;
    let mut queue = VecDeque::from([center]);
    let mut members = vec![center];
    while let Some(q) = queue.pop_front() {
        if dist[q] == r {
            continue;
        }
        for &nb in graph.neighbors(q) {
            if dist[nb] == usize::MAX {
                dist[nb] = dist[q] + 1;
                members.push(nb);
                queue.push_back(nb);
            }
        }
    }
    Ok(QubitSet::new(members))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckPlacement {
    pub graph: ConnectivityGraph,
    pub centers: Vec<usize>,
    pub radius: usize,
    pub supports: Vec<QubitSet>,
}

impl CheckPlacement {
    pub fn new(graph: &ConnectivityGraph, centers: &[usize], radius: usize) -> Result<Self> {
        let supports = centers
            .iter()
            .map(|&c| ball(graph, c, radius))
            .collect::<Result<Vec<_>>>()?;
        Ok(CheckPlacement {
            graph: graph.clone(),
            centers: centers.to_vec(),
            radius,
            supports,
        })
    }

    pub fn max_support(&self) -> usize {
        self.supports.iter().map(QubitSet::len).max().unwrap_or(0)
    }
}

/// Distribution of support-union sizes over nonempty check subsets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UbHistogram {
    pub num_qubits: usize,
    pub num_generators: usize,
    /// Largest single support; used for the coarse rows.
    pub max_support: usize,
    /// `by_size[M]` = subsets whose union has exactly `M` qubits.
    pub by_size: Vec<u64>,
    pub capped: Option<usize>,
}

impl UbHistogram {
    /// Number of enumerated subsets with union size `<= m`.
    pub fn count(&self, m: usize) -> u64 {
        self.by_size.iter().take(m + 1).sum()
    }

    pub fn cumulative(&self) -> Vec<u64> {
        self.by_size
            .iter()
            .scan(0u64, |acc, &c| {
                *acc += c;
                Some(*acc)
            })
            .collect()
    }

    pub fn total(&self) -> u64 {
        self.by_size.iter().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.total() == 0
    }
}

/// Enumerates nonempty subsets of the checks (of size at most `cap`)
/// depth-first, keeping the running support unions on a stack.
pub fn ub_histogram(placement: &CheckPlacement, cap: Option<usize>) -> Result<UbHistogram> {
    let m = placement.supports.len();
    if cap.is_none() && m > MAX_UNCAPPED_CENTERS {
        return Err(Error::Budget(format!(
            "{m} centers exceed the uncapped limit of {MAX_UNCAPPED_CENTERS}; pass a subset-size cap"
        )));
    }
    let n = placement.graph.num_qubits();
    let words = n.div_ceil(64).max(1);
    let supports: Vec<u64> = placement
        .supports
        .iter()
        .flat_map(|s| s.to_bits(n).words().to_vec())
        .collect();
    let depth = cap.unwrap_or(m).min(m);
    let mut by_size = vec![0u64; n + 1];
    let mut stack = vec![0u64; (depth + 1) * words];
    // explicit stack of (next candidate, level)
    let mut next = vec![0usize; depth + 1];
    let mut level = 0;
    loop {
        if next[level] >= m || level == depth {
            if level == 0 {
                break;
            }
            level -= 1;
            continue;
        }
        let i = next[level];
        next[level] += 1;
        let (done, rest) = stack.split_at_mut((level + 1) * words);
        let parent = &done[level * words..];
        let child = &mut rest[..words];
        let mut size = 0;
        for w in 0..words {
            child[w] = parent[w] | supports[i * words + w];
            size += child[w].count_ones() as usize;
        }
        by_size[size] += 1;
        level += 1;
        next[level] = i + 1;
    }
    Ok(UbHistogram {
        num_qubits: n,
        num_generators: m,
        max_support: placement.max_support(),
        by_size,
        capped: cap,
    })
}

fn add_coarse_rows(lp: &mut LinearProgram, n: usize, k: usize, w: usize) {
    if w == 0 {
        return;
    }
    let r = n - k;
    let mut bound = BigInt::from(0);
    for c in 1..=(n / w) {
        bound += binomial(r, c);
        let terms: Vec<(usize, BigInt)> = (1..=c * w).map(|i| (i - 1, BigInt::from(1))).collect();
        lp.add_sparse_row(&terms, Relation::Ge, bound.clone());
    }
}

/// Standard LP plus `A_1 + ... + A_M >= #{subsets with union <= M}` for
/// every size `M` present in the histogram, plus the coarse rows for the
/// largest single support.
pub fn geometry_lp(n: usize, k: usize, d: usize, hist: &UbHistogram) -> Result<LinearProgram> {
    let mut lp = standard_lp(n, k, d);
    if hist.is_empty() {
        return Ok(lp);
    }
    if hist.num_generators != n - k || hist.num_qubits != n {
        return Err(Error::Invalid(format!(
            "histogram over {} checks on {} qubits does not match [[{n},{k}]]",
            hist.num_generators, hist.num_qubits
        )));
    }
    let cumulative = hist.cumulative();
    for m in 1..=n {
        if hist.by_size[m] == 0 {
            continue;
        }
        let terms: Vec<(usize, BigInt)> = (1..=m).map(|i| (i - 1, BigInt::from(1))).collect();
        lp.add_sparse_row(&terms, Relation::Ge, BigInt::from(cumulative[m]));
    }
    add_coarse_rows(&mut lp, n, k, hist.max_support);
    Ok(lp)
}

/// Feasibility of the geometry LP for one radius.
pub fn radius_feasible(
    graph: &ConnectivityGraph,
    centers: &[usize],
    n: usize,
    k: usize,
    d: usize,
    r: usize,
    cap: Option<usize>,
) -> Result<bool> {
    let placement = CheckPlacement::new(graph, centers, r)?;
    let hist = ub_histogram(&placement, cap)?;
    Ok(geometry_lp(n, k, d, &hist)?.feasible().is_feasible())
}

/// Smallest `r <= r_max` with a feasible geometry LP, found by bisection;
/// `None` when even `r_max` is infeasible.
pub fn min_radius(
    graph: &ConnectivityGraph,
    centers: &[usize],
    n: usize,
    k: usize,
    d: usize,
    r_max: usize,
    cap: Option<usize>,
) -> Result<Option<usize>> {
    if centers.len() + k != n {
        return Err(Error::Invalid(format!("{} centers for n-k = {}", centers.len(), n.saturating_sub(k))));
    }
    if !radius_feasible(graph, centers, n, k, d, r_max, cap)? {
        return Ok(None);
    }
    let (mut lo, mut hi) = (0usize, r_max);
    while lo < hi {
        let mid = (lo + hi) / 2;
        if radius_feasible(graph, centers, n, k, d, mid, cap)? {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    if lo > 0 {
        debug_assert!(!radius_feasible(graph, centers, n, k, d, lo - 1, cap)?);
    }
    Ok(Some(lo))
}

/// Feasibility at every radius `0..=r_max`.
pub fn radius_profile(
    graph: &ConnectivityGraph,
    centers: &[usize],
    n: usize,
    k: usize,
    d: usize,
    r_max: usize,
    cap: Option<usize>,
) -> Result<Vec<bool>> {
    (0..=r_max)
        .map(|r| radius_feasible(graph, centers, n, k, d, r, cap))
        .collect()
}

/// LP with only the coarse rows for maximum weight `w`.
pub fn coarse_lp(n: usize, k: usize, d: usize, w: usize) -> LinearProgram {
    let mut lp = standard_lp(n, k, d);
    add_coarse_rows(&mut lp, n, k, w);
    lp
}

/// Smallest `w` whose coarse LP is feasible, by bisection over `1..=n`.
pub fn structure_agnostic_weight_lb(n: usize, k: usize, d: usize) -> Result<WeightBound> {
    if k == 0 || k >= n {
        return Err(Error::Invalid(format!("needs 1 <= k < n (n={n}, k={k})")));
    }
    if !coarse_lp(n, k, d, n).feasible().is_feasible() {
        return Ok(WeightBound::Infinity);
    }
    let (mut lo, mut hi) = (1usize, n);
    while lo < hi {
        let mid = (lo + hi) / 2;
        if coarse_lp(n, k, d, mid).feasible().is_feasible() {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    Ok(WeightBound::Finite(lo))
}
