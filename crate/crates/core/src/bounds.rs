//! Lower bounds on the optimal check weight `W_opt(n,k,d)`.
//!
//! The table engine walks block lengths in increasing order. A cell is
//! settled by the weight-3 rate rule, by infeasibility of the standard
//! enumerator LP (no code at all), or by scanning candidate weights `w`
//! upward until the weight-constrained LP is feasible for some admissible
//! choice of its discrete parameters.

use std::collections::BTreeMap;
use std::fmt;
use std::path::Path;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::enumerator::{binomial, build_matrices};
use crate::error::{Error, Result};
use crate::exactlp::{LinearProgram, Relation};

/// A weight bound, where `Infinity` means no code exists.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum WeightBound {
    Finite(usize),
    Infinity,
}

impl WeightBound {
    pub fn finite(self) -> Option<usize> {
        match self {
            WeightBound::Finite(w) => Some(w),
            WeightBound::Infinity => None,
        }
    }

    pub fn is_finite(self) -> bool {
        matches!(self, WeightBound::Finite(_))
    }
}

impl fmt::Display for WeightBound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WeightBound::Finite(w) => write!(f, "{w}"),
            WeightBound::Infinity => f.write_str("inf"),
        }
    }
}

impl std::str::FromStr for WeightBound {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "inf" | "∞" | "infinity" => Ok(WeightBound::Infinity),
            t => t
                .parse()
                .map(WeightBound::Finite)
                .map_err(|_| Error::parse(None, format!("bad weight bound {t:?}"))),
        }
    }
}

impl Serialize for WeightBound {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            WeightBound::Finite(w) => s.serialize_u64(*w as u64),
            WeightBound::Infinity => s.serialize_str("inf"),
        }
    }
}

impl<'de> Deserialize<'de> for WeightBound {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Num(usize),
            Text(String),
        }
        match Raw::deserialize(d)? {
            Raw::Num(w) => Ok(WeightBound::Finite(w)),
            Raw::Text(t) => t.parse().map_err(serde::de::Error::custom),
        }
    }
}

/// `ceil(2n / (n - k))`.
pub fn nk_lower_bound(n: usize, k: usize) -> Result<usize> {
    if k >= n {
        return Err(Error::Invalid(format!("nk bound needs k < n (n={n}, k={k})")));
    }
    Ok((2 * n).div_ceil(n - k))
}

/// True when weight 3 is not excluded, i.e. `d = 2` and `k/n <= 1/4`.
pub fn weight3_rate_rule(n: usize, k: usize, d: usize) -> bool {
    d == 2 && 4 * k <= n
}

fn pow2(e: usize) -> BigInt {
    BigInt::one() << e
}

/// Rows over the variables `A_1..A_n` (index `i - 1`), with `A_0 = 1`
/// already moved to the right-hand side.
struct RowBuilder {
    lp: LinearProgram,
    n: usize,
}

impl RowBuilder {
    fn new(n: usize) -> Self {
        RowBuilder {
            lp: LinearProgram::new(n),
            n,
        }
    }

    /// `sum_{i in lo..=hi, i >= 1} A_i  REL  rhs`, where `rhs` already
    /// accounts for `A_0` when `lo = 0`.
    fn range_row(&mut self, lo: usize, hi: usize, relation: Relation, rhs: BigInt) {
        let terms: Vec<(usize, BigInt)> = (lo.max(1)..=hi.min(self.n)).map(|i| (i - 1, BigInt::one())).collect();
        self.lp.add_sparse_row(&terms, relation, rhs);
    }
}

/// Enumerator LP for an `[[n,k,d]]` code, scaled to integer rows.
pub fn standard_lp(n: usize, k: usize, d: usize) -> LinearProgram {
    let mut rb = RowBuilder::new(n);
    push_standard_rows(&mut rb, n, k, d);
    rb.lp
}

fn push_standard_rows(rb: &mut RowBuilder, n: usize, k: usize, d: usize) {
    assert!(n >= 1 && k <= n, "standard_lp needs n >= 1 and k <= n");
    let mats = build_matrices(n);
    let (m, mt) = (&mats.0, &mats.1);
    let scale = pow2(n - k);
    for j in 0..=n {
        // 2^(n-k) * B_j = sum_i M_ji A_i, compared against 2^(n-k) * A_j
        let mut coeffs: Vec<BigInt> = (1..=n).map(|i| m.get(j, i).clone()).collect();
        let mut rhs = -m.get(j, 0).clone();
        if j == 0 {
            rhs += &scale;
        } else {
            coeffs[j - 1] -= &scale;
        }
        let relation = if j < d { Relation::Eq } else { Relation::Ge };
        rb.lp.add_row(&coeffs, relation, rhs);
    }
    for j in 0..=n {
        let coeffs: Vec<BigInt> = (1..=n).map(|i| mt.get(j, i).clone()).collect();
        rb.lp.add_row(&coeffs, Relation::Ge, -mt.get(j, 0).clone());
    }
}

/// Discrete parameters of the weight-constrained LP.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FamilyChoice {
    pub y: usize,
    pub parity: u8,
    pub b_single: bool,
    pub b_overlap: bool,
}

impl fmt::Display for FamilyChoice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "y={} parity={} b_single={} b_overlap={}",
            self.y, self.parity, self.b_single as u8, self.b_overlap as u8
        )
    }
}

/// Smallest admissible `y`: `max{1, 2n - (w-1)(n-k)}`.
pub fn y_min(n: usize, k: usize, w: usize) -> usize {
    let lower = 2 * n as i64 - (w as i64 - 1) * (n as i64 - k as i64);
    lower.max(1) as usize
}

fn parity_allowed(n: usize, k: usize, w: usize, y: usize, parity: u8) -> bool {
    if w % 2 == 1 {
        parity == 1
    } else if y == n - k {
        parity == 0
    } else {
        parity <= 1
    }
}

/// Number of group elements the cumulative-growth argument guarantees
/// at weight `<= m_cap`: `sum_{p,q} 1[p(w-1) + q w <= M] C(n-k-y,p) C(y,q)`.
pub fn cumulative_count(n: usize, k: usize, w: usize, y: usize, m_cap: usize) -> BigInt {
    let light = n - k - y;
    let mut total = BigInt::zero();
    for p in 0..=light {
        for q in 0..=y {
            if p * (w - 1) + q * w <= m_cap {
                total += binomial(light, p) * binomial(y, q);
            }
        }
    }
    total
}

/// Standard rows plus the weight-`w` rows for one family choice.
pub fn weight_lp(n: usize, k: usize, d: usize, w: usize, choice: &FamilyChoice) -> Result<LinearProgram> {
    if k >= n || w == 0 || w > n {
        return Err(Error::Invalid(format!("weight LP needs k < n and 1 <= w <= n (n={n}, k={k}, w={w})")));
    }
    let r = n - k;
    if choice.y < y_min(n, k, w) || choice.y > r {
        return Err(Error::Invalid(format!("y={} outside admissible range", choice.y)));
    }
    if !parity_allowed(n, k, w, choice.y, choice.parity) {
        return Err(Error::Invalid(format!("parity={} not admissible for w={w}, y={}", choice.parity, choice.y)));
    }
    let mut rb = RowBuilder::new(n);
    push_standard_rows(&mut rb, n, k, d);
    let y = choice.y;
    rb.range_row(w, w, Relation::Ge, BigInt::from(y));
    rb.range_row(0, w - 1, Relation::Le, pow2(r - y) - 1);
    for m_cap in (w - 1)..n {
        rb.range_row(0, m_cap, Relation::Ge, cumulative_count(n, k, w, y, m_cap) - 1);
    }
    let evens: Vec<(usize, BigInt)> = (2..=n).step_by(2).map(|i| (i - 1, BigInt::one())).collect();
    rb.lp
        .add_sparse_row(&evens, Relation::Eq, pow2(r - choice.parity as usize) - 1);
    if choice.b_single {
        rb.range_row(1, 1, Relation::Eq, BigInt::zero());
    }
    if choice.b_overlap {
        rb.range_row(1, (2 * w - 2).min(n), Relation::Ge, BigInt::from(2 * r - 1));
    }
    Ok(rb.lp)
}

/// Where a table cell's value came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Source {
    /// `d = 2` and `k/n <= 1/4`: weight 3 is achievable.
    RateRule,
    /// The first scanned weight (the analytic floor) was already feasible.
    NkBound,
    /// Settled by the weight-constrained LP.
    Lp,
    /// The standard LP is infeasible: no `[[n,k,d]]` code exists.
    NoCode,
    /// Raised by an entry of the overrides file.
    Override,
}

impl fmt::Display for Source {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Source::RateRule => "rate-rule",
            Source::NkBound => "nk-bound",
            Source::Lp => "lp",
            Source::NoCode => "no-code",
            Source::Override => "override",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Cell {
    pub wlb: WeightBound,
    pub source: Source,
    /// Value produced by the algorithm before overrides.
    pub computed: WeightBound,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub citation: Option<String>,
}

/// One line of an overrides file: `n k d wlb citation-text`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Override {
    pub n: usize,
    pub k: usize,
    pub d: usize,
    pub wlb: WeightBound,
    pub citation: String,
}

pub fn parse_overrides(text: &str) -> Result<Vec<Override>> {
    let mut out = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut parts = line.splitn(5, char::is_whitespace);
        let mut field = |name: &str| {
            parts
                .next()
                .filter(|s| !s.is_empty())
                .ok_or_else(|| Error::parse(Some(i + 1), format!("missing {name}")))
        };
        let num = |s: &str| s.parse::<usize>().map_err(|_| Error::parse(Some(i + 1), format!("bad integer {s:?}")));
        let n = num(field("n")?)?;
        let k = num(field("k")?)?;
        let d = num(field("d")?)?;
        let wlb = field("wlb")?.parse().map_err(|_| Error::parse(Some(i + 1), "bad wlb"))?;
        let citation = field("citation")?.trim().to_string();
        out.push(Override { n, k, d, wlb, citation });
    }
    Ok(out)
}

pub fn load_overrides(path: &Path) -> Result<Vec<Override>> {
    parse_overrides(&std::fs::read_to_string(path)?)
}

/// Overrides shipped with the crate.
pub fn default_overrides() -> Vec<Override> {
    parse_overrides(include_str!("../assets/overrides.txt")).expect("bundled overrides parse")
}

/// `W_LB(n,k,d)` for `4 <= n <= max_n`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct WeightTable {
    pub max_n: usize,
    cells: BTreeMap<(usize, usize, usize), Cell>,
}

#[derive(Serialize)]
struct CellRecord<'a> {
    n: usize,
    k: usize,
    d: usize,
    wlb: WeightBound,
    source: Source,
    #[serde(skip_serializing_if = "Option::is_none")]
    citation: Option<&'a str>,
}

impl WeightTable {
    pub fn cell(&self, n: usize, k: usize, d: usize) -> Option<&Cell> {
        self.cells.get(&(n, k, d))
    }

    /// Final value; `Infinity` outside the computed range.
    pub fn wlb(&self, n: usize, k: usize, d: usize) -> WeightBound {
        self.cell(n, k, d).map_or(WeightBound::Infinity, |c| c.wlb)
    }

    /// Value before overrides; this is what the algorithm itself reads.
    pub fn computed(&self, n: usize, k: usize, d: usize) -> WeightBound {
        self.cell(n, k, d).map_or(WeightBound::Infinity, |c| c.computed)
    }

    pub fn cells(&self) -> impl Iterator<Item = ((usize, usize, usize), &Cell)> {
        self.cells.iter().map(|(key, c)| (*key, c))
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    fn insert(&mut self, n: usize, k: usize, d: usize, value: WeightBound, source: Source) {
        self.cells.insert(
            (n, k, d),
            Cell {
                wlb: value,
                source,
                computed: value,
                citation: None,
            },
        );
    }

    /// Raises cells to the override values. Overrides never lower a bound.
    pub fn apply_overrides(&mut self, overrides: &[Override]) {
        for o in overrides {
            if let Some(cell) = self.cells.get_mut(&(o.n, o.k, o.d)) {
                if o.wlb > cell.wlb {
                    cell.wlb = o.wlb;
                    cell.source = Source::Override;
                    cell.citation = Some(o.citation.clone());
                }
            }
        }
    }

    /// `max k'/n'` over `n' < n` with a cell of distance `>= d` and
    /// computed bound `<= w`; 0 when no cell qualifies.
    pub fn r_dw(&self, n: usize, d: usize, w: usize) -> BigRational {
        let mut best = BigRational::zero();
        for (&(n2, k2, d2), cell) in &self.cells {
            if n2 >= n || d2 < d || k2 == 0 {
                continue;
            }
            if cell.computed <= WeightBound::Finite(w) {
                let rate = BigRational::new(k2.into(), n2.into());
                if rate > best {
                    best = rate;
                }
            }
        }
        best
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("n,k,d,wlb,source\n");
        for (&(n, k, d), cell) in &self.cells {
            out.push_str(&format!("{n},{k},{d},{},{}\n", cell.wlb, cell.source));
        }
        out
    }

    pub fn to_json(&self) -> String {
        let records: Vec<CellRecord> = self
            .cells
            .iter()
            .map(|(&(n, k, d), c)| CellRecord {
                n,
                k,
                d,
                wlb: c.wlb,
                source: c.source,
                citation: c.citation.as_deref(),
            })
            .collect();
        serde_json::to_string_pretty(&records).expect("table serializes")
    }
}

/// Admissible family choices for a candidate `[[n,k,d;w]]`, in scan order.
pub fn admissible_choices(n: usize, k: usize, d: usize, w: usize, table: &WeightTable) -> Vec<FamilyChoice> {
    if k >= n {
        return Vec::new();
    }
    let b_single = WeightBound::Finite(w) < table.computed(n - 1, k, d);
    let b_overlap = table.r_dw(n, d, w) < BigRational::new(k.into(), n.into());
    let mut out = Vec::new();
    for y in y_min(n, k, w)..=(n - k) {
        for parity in 0..=1u8 {
            if parity_allowed(n, k, w, y, parity) {
                out.push(FamilyChoice {
                    y,
                    parity,
                    b_single,
                    b_overlap,
                });
            }
        }
    }
    out
}

/// True iff the weight LP is infeasible for every admissible choice.
pub fn excluded(n: usize, k: usize, d: usize, w: usize, table: &WeightTable) -> bool {
    admissible_choices(n, k, d, w, table).iter().all(|choice| {
        let lp = weight_lp(n, k, d, w, choice).expect("admissible choice");
        !lp.feasible().is_feasible()
    })
}

/// Options for [`compute_table_with`].
#[derive(Clone, Debug, Default)]
pub struct TableOptions {
    pub overrides: Vec<Override>,
    /// Called once per finished block length.
    pub progress: Option<fn(usize)>,
}

/// Table with the bundled overrides applied.
pub fn compute_table(max_n: usize) -> WeightTable {
    compute_table_with(
        max_n,
        &TableOptions {
            overrides: default_overrides(),
            progress: None,
        },
    )
}

pub fn compute_table_with(max_n: usize, options: &TableOptions) -> WeightTable {
    let mut table = WeightTable {
        max_n,
        cells: BTreeMap::new(),
    };
    for n in 4..=max_n {
        extend_table(&mut table, n);
        if let Some(progress) = options.progress {
            progress(n);
        }
    }
    table.max_n = max_n;
    table.apply_overrides(&options.overrides);
    table
}

/// Fills every cell of block length `n`; reads only smaller `n`.
fn extend_table(table: &mut WeightTable, n: usize) {
    let mut pending = Vec::new();
    for d in 2..=(n + 1) / 2 {
        for k in 1..=n {
            if weight3_rate_rule(n, k, d) {
                table.insert(n, k, d, WeightBound::Finite(3), Source::RateRule);
                continue;
            }
            if !standard_lp(n, k, d).feasible().is_feasible() {
                for kappa in k..=n {
                    table.insert(n, kappa, d, WeightBound::Infinity, Source::NoCode);
                }
                break;
            }
            pending.push((k, d));
        }
    }
    let snapshot = &*table;
    let results: Vec<_> = pending
        .par_iter()
        .map(|&(k, d)| ((k, d), scan_weights(n, k, d, snapshot)))
        .collect();
    for ((k, d), (value, source)) in results {
        table.insert(n, k, d, value, source);
    }
}

fn scan_weights(n: usize, k: usize, d: usize, table: &WeightTable) -> (WeightBound, Source) {
    let start = 4.max(nk_lower_bound(n, k).expect("k < n for a feasible standard LP"));
    for w in start..=n {
        if !excluded(n, k, d, w, table) {
            let source = if w == start { Source::NkBound } else { Source::Lp };
            return (WeightBound::Finite(w), source);
        }
    }
    (WeightBound::Infinity, Source::Lp)
}
