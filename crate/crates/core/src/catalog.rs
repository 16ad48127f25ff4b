//! Catalog of low-weight stabilizer code constructions.
//!
//! Entries are stored in a line-based asset:
//!
//! ```text
//! [[n,k,d;w]] ; optimal|not-known-optimal ; construction ; citation
//! ```
//!
//! A construction is an explicit generator list or is built from other
//! entries by padding, tensor products and powers (see
//! `assets/catalog.txt` for the grammar). Verification recomputes
//! `(n, k, d, W)` of every expanded entry and compares it with the label.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::bounds::{WeightBound, WeightTable};
use crate::error::{Error, Result};
use crate::pauli::{Pauli1, PauliOperator};
use crate::stabilizer::{Budget, Distance, Membership, StabilizerGenerators};

/// SHA-256 of the bundled `assets/catalog.txt`.
pub const CATALOG_SHA256: &str = "e982f77bb0ef7497471593a7b896b34e187ce9a455c1ee6307220c3e1493d3fa";

const BUNDLED: &str = include_str!("../assets/catalog.txt");

/// Candidate logical operators tried per `PLUSLOGICAL` expansion.
const LOGICAL_SEARCH_LIMIT: usize = 5000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Label {
    pub n: usize,
    pub k: usize,
    pub d: usize,
    pub w: usize,
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{},{},{};{}]]", self.n, self.k, self.d, self.w)
    }
}

impl FromStr for Label {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::parse(None, format!("bad label {s:?}"));
        let inner = s
            .trim()
            .strip_prefix("[[")
            .and_then(|t| t.strip_suffix("]]"))
            .ok_or_else(bad)?;
        let (nkd, w) = inner.split_once(';').ok_or_else(bad)?;
        let nums: Vec<usize> = nkd
            .split(',')
            .map(|t| t.trim().parse())
            .collect::<std::result::Result<_, _>>()
            .map_err(|_| bad())?;
        if nums.len() != 3 {
            return Err(bad());
        }
        Ok(Label {
            n: nums[0],
            k: nums[1],
            d: nums[2],
            w: w.trim().parse().map_err(|_| bad())?,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Construction {
    Gens(Vec<PauliOperator>),
    Tensor(Box<Construction>, Box<Construction>),
    Pow(Box<Construction>, usize),
    Pad(Box<Construction>, usize),
    Surface(usize),
    /// Base code plus one logical operator of the given weight as a check.
    PlusLogical(Box<Construction>, usize),
    Ref(Label),
}

impl fmt::Display for Construction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Construction::Gens(ops) => {
                let parts: Vec<String> = ops.iter().map(|p| p.to_string()).collect();
                write!(f, "GENS({})", parts.join(","))
            }
            Construction::Tensor(a, b) => write!(f, "TENSOR({a},{b})"),
            Construction::Pow(a, m) => write!(f, "POW({a},{m})"),
            Construction::Pad(a, m) => write!(f, "PAD({a},{m})"),
            Construction::Surface(d) => write!(f, "SURFACE({d})"),
            Construction::PlusLogical(a, w) => write!(f, "PLUSLOGICAL({a},{w})"),
            Construction::Ref(label) => write!(f, "{label}"),
        }
    }
}

struct ExprParser<'a> {
    text: &'a str,
    pos: usize,
}

impl<'a> ExprParser<'a> {
    fn err(&self, msg: impl Into<String>) -> Error {
        Error::parse(None, format!("{} at offset {} in {:?}", msg.into(), self.pos, self.text))
    }

    fn skip_ws(&mut self) {
        while self.text[self.pos..].starts_with(char::is_whitespace) {
            self.pos += self.text[self.pos..].chars().next().map_or(1, char::len_utf8);
        }
    }

    fn eat(&mut self, token: &str) -> bool {
        self.skip_ws();
        if self.text[self.pos..].starts_with(token) {
            self.pos += token.len();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, token: &str) -> Result<()> {
        if self.eat(token) {
            Ok(())
        } else {
            Err(self.err(format!("expected {token:?}")))
        }
    }

    fn integer(&mut self) -> Result<usize> {
        self.skip_ws();
        let digits: String = self.text[self.pos..].chars().take_while(char::is_ascii_digit).collect();
        if digits.is_empty() {
            return Err(self.err("expected an integer"));
        }
        self.pos += digits.len();
        digits.parse().map_err(|_| self.err("integer overflow"))
    }

    fn expr(&mut self) -> Result<Construction> {
        self.skip_ws();
        if self.text[self.pos..].starts_with("[[") {
            let end = self.text[self.pos..]
                .find("]]")
                .ok_or_else(|| self.err("unterminated label"))?;
            let label = self.text[self.pos..self.pos + end + 2].parse()?;
            self.pos += end + 2;
            return Ok(Construction::Ref(label));
        }
        let name: String = self.text[self.pos..]
            .chars()
            .take_while(|c| c.is_ascii_uppercase())
            .collect();
        self.pos += name.len();
        self.expect("(")?;
        let out = match name.as_str() {
            "GENS" => {
                let end = self.text[self.pos..]
                    .find(')')
                    .ok_or_else(|| self.err("unterminated GENS"))?;
                let body = &self.text[self.pos..self.pos + end];
                self.pos += end;
                let ops = body
                    .split(',')
                    .map(|p| p.trim().parse::<PauliOperator>())
                    .collect::<Result<Vec<_>>>()?;
                Construction::Gens(ops)
            }
            "TENSOR" => {
                let a = self.expr()?;
                self.expect(",")?;
                let b = self.expr()?;
                Construction::Tensor(Box::new(a), Box::new(b))
            }
            "POW" | "PAD" | "PLUSLOGICAL" => {
                let a = Box::new(self.expr()?);
                self.expect(",")?;
                let m = self.integer()?;
                match name.as_str() {
                    "POW" => Construction::Pow(a, m),
                    "PAD" => Construction::Pad(a, m),
                    _ => Construction::PlusLogical(a, m),
                }
            }
            "SURFACE" => Construction::Surface(self.integer()?),
            other => return Err(self.err(format!("unknown construction {other:?}"))),
        };
        self.expect(")")?;
        Ok(out)
    }
}

pub fn parse_construction(text: &str) -> Result<Construction> {
    let mut p = ExprParser { text, pos: 0 };
    let out = p.expr()?;
    p.skip_ws();
    if p.pos != text.len() {
        return Err(p.err("trailing input"));
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatalogEntry {
    pub label: Label,
    pub construction: Construction,
    pub optimal: bool,
    pub citation: String,
}

/// Splits on `;` outside `[[...]]`; the fourth field takes the rest.
fn split_fields(line: &str) -> Vec<&str> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    let bytes = line.as_bytes();
    for (i, &b) in bytes.iter().enumerate() {
        match b {
            b'[' => depth += 1,
            b']' => depth -= 1,
            b';' if depth == 0 && out.len() < 3 => {
                out.push(line[start..i].trim());
                start = i + 1;
            }
            _ => {}
        }
    }
    out.push(line[start..].trim());
    out
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Catalog {
    entries: Vec<CatalogEntry>,
}

impl Catalog {
    pub fn parse(text: &str) -> Result<Self> {
        let mut entries = Vec::new();
        for (i, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let err = |m: String| Error::parse(Some(i + 1), m);
            let fields = split_fields(line);
            if fields.len() != 4 {
                return Err(err(format!("expected 4 fields, found {}", fields.len())));
            }
            let label: Label = fields[0].parse().map_err(|e: Error| err(e.to_string()))?;
            let optimal = match fields[1] {
                "optimal" => true,
                "not-known-optimal" => false,
                other => return Err(err(format!("bad optimality flag {other:?}"))),
            };
            let construction = parse_construction(fields[2]).map_err(|e| err(e.to_string()))?;
            entries.push(CatalogEntry {
                label,
                construction,
                optimal,
                citation: fields[3].to_string(),
            });
        }
        let catalog = Catalog { entries };
        catalog.check_references()?;
        Ok(catalog)
    }

    /// The shipped catalog, after checking its checksum.
    pub fn bundled() -> Result<Self> {
        let digest = sha256_hex(BUNDLED);
        if digest != CATALOG_SHA256 {
            return Err(Error::Invalid(format!(
                "bundled catalog checksum mismatch: {digest} != {CATALOG_SHA256}"
            )));
        }
        Catalog::parse(BUNDLED)
    }

    pub fn entries(&self) -> &[CatalogEntry] {
        &self.entries
    }

    pub fn get(&self, label: &Label) -> Option<&CatalogEntry> {
        self.entries.iter().find(|e| &e.label == label)
    }

    pub fn push(&mut self, entry: CatalogEntry) {
        self.entries.push(entry);
    }

    fn check_references(&self) -> Result<()> {
        fn refs(c: &Construction, out: &mut Vec<Label>) {
            match c {
                Construction::Ref(l) => out.push(*l),
                Construction::Tensor(a, b) => {
                    refs(a, out);
                    refs(b, out);
                }
                Construction::Pow(a, _) | Construction::Pad(a, _) | Construction::PlusLogical(a, _) => refs(a, out),
                Construction::Gens(_) | Construction::Surface(_) => {}
            }
        }
        let index: HashMap<Label, usize> = self.entries.iter().enumerate().map(|(i, e)| (e.label, i)).collect();
        // 0 = unvisited, 1 = on stack, 2 = done
        let mut state = vec![0u8; self.entries.len()];
        fn visit(i: usize, cat: &Catalog, index: &HashMap<Label, usize>, state: &mut [u8]) -> Result<()> {
            match state[i] {
                1 => return Err(Error::Invalid(format!("cyclic reference through {}", cat.entries[i].label))),
                2 => return Ok(()),
                _ => {}
            }
            state[i] = 1;
            let mut out = Vec::new();
            refs(&cat.entries[i].construction, &mut out);
            for l in out {
                let j = *index
                    .get(&l)
                    .ok_or_else(|| Error::Invalid(format!("unknown reference {l} in {}", cat.entries[i].label)))?;
                visit(j, cat, index, state)?;
            }
            state[i] = 2;
            Ok(())
        }
        for i in 0..self.entries.len() {
            visit(i, self, &index, &mut state)?;
        }
        Ok(())
    }

    /// Concrete generators of an entry.
    pub fn expand(&self, entry: &CatalogEntry) -> Result<StabilizerGenerators> {
        let mut ctx = Expansion::default();
        self.expand_entry(entry, &mut ctx, &Budget::default())
    }

    fn expand_entry(
        &self,
        entry: &CatalogEntry,
        ctx: &mut Expansion,
        budget: &Budget,
    ) -> Result<StabilizerGenerators> {
        if let Some(g) = ctx.memo.get(&entry.label) {
            return Ok(g.clone());
        }
        let g = self.build(&entry.construction, Some(&entry.label), ctx, budget)?;
        if g.num_qubits() != entry.label.n {
            return Err(Error::Invalid(format!(
                "{} expands to {} qubits",
                entry.label,
                g.num_qubits()
            )));
        }
        ctx.memo.insert(entry.label, g.clone());
        Ok(g)
    }

    fn build(
        &self,
        c: &Construction,
        target: Option<&Label>,
        ctx: &mut Expansion,
        budget: &Budget,
    ) -> Result<StabilizerGenerators> {
        Ok(match c {
            Construction::Gens(ops) => {
                let n = ops.first().map_or(0, PauliOperator::num_qubits);
                StabilizerGenerators::new(n, ops.clone())?
            }
            Construction::Tensor(a, b) => {
                let a = self.build(a, None, ctx, budget)?;
                let b = self.build(b, None, ctx, budget)?;
                a.tensor_product(&b)
            }
            Construction::Pow(a, m) => {
                if *m == 0 {
                    return Err(Error::Invalid("POW needs a positive exponent".into()));
                }
                let base = self.build(a, None, ctx, budget)?;
                let mut acc = base.clone();
                for _ in 1..*m {
                    acc = acc.tensor_product(&base);
                }
                acc
            }
            Construction::Pad(a, m) => self.build(a, None, ctx, budget)?.pad(*m),
            Construction::Surface(d) => builder_surface_code(*d)?,
            Construction::PlusLogical(a, w) => {
                let base = self.build(a, None, ctx, budget)?;
                let (g, note) = add_logical(&base, *w, target, budget)?;
                ctx.incomplete.extend(note);
                g
            }
            Construction::Ref(label) => {
                let entry = self
                    .get(label)
                    .ok_or_else(|| Error::Invalid(format!("unknown reference {label}")))?;
                self.expand_entry(entry, ctx, budget)?
            }
        })
    }

    pub fn verify(&self, entry: &CatalogEntry) -> VerificationReport {
        self.verify_with(entry, &Budget::default())
    }

    pub fn verify_with(&self, entry: &CatalogEntry, budget: &Budget) -> VerificationReport {
        let mut ctx = Expansion::default();
        let mut report = VerificationReport {
            label: entry.label,
            optimal: entry.optimal,
            citation: entry.citation.clone(),
            n: None,
            k: None,
            d: None,
            w: None,
            w_exact: false,
            w_avg: None,
            status: VerificationStatus::Verified,
            notes: Vec::new(),
        };
        let g = match self.expand_entry(entry, &mut ctx, budget) {
            Ok(g) => g,
            Err(e) => {
                report.status = VerificationStatus::Failed;
                report.notes.push(format!("expansion failed: {e}"));
                return report;
            }
        };
        let label = entry.label;
        report.n = Some(g.num_qubits());
        report.k = Some(g.logical_qubits());
        match g.distance_with(budget) {
            Ok(d) => report.d = Some(d),
            Err(e) => report.notes.push(format!("distance not computed: {e}")),
        }
        match g.weight_optimal_with(budget) {
            Ok(set) => {
                report.w = set.iter().map(PauliOperator::weight).max();
                report.w_exact = true;
                let total: usize = set.iter().map(PauliOperator::weight).sum();
                if !set.is_empty() {
                    report.w_avg = Some(format!(
                        "{}",
                        num_rational::Rational64::new(total as i64, set.len() as i64)
                    ));
                }
            }
            Err(e) => {
                report.w = Some(g.max_generator_weight());
                report.notes.push(format!("W only bounded by the listed generators: {e}"));
            }
        }
        report.notes.extend(ctx.incomplete.iter().cloned());
        let mut mismatches = Vec::new();
        if report.n != Some(label.n) {
            mismatches.push(format!("n = {:?}", report.n));
        }
        if report.k != Some(label.k) {
            mismatches.push(format!("k = {:?}", report.k));
        }
        match report.d {
            Some(d) if d != Distance::Finite(label.d) => mismatches.push(format!("d = {d}")),
            _ => {}
        }
        if matches!(report.w, Some(w) if w > label.w) {
            mismatches.push(format!("W = {}", report.w.unwrap_or_default()));
        }
        if !mismatches.is_empty() {
            report.status = VerificationStatus::Mismatch;
            report.notes.extend(mismatches);
        } else if !ctx.incomplete.is_empty() {
            report.status = VerificationStatus::Incomplete;
        } else if report.d.is_none() || !report.w_exact {
            report.status = VerificationStatus::UpperBoundOnly;
        } else if report.w != Some(label.w) {
            report.status = VerificationStatus::WeightBelowLabel;
            report.notes.push(format!("W = {}", report.w.unwrap_or_default()));
        }
        report
    }

    /// Verifies every entry in catalog order.
    pub fn verify_all(&self) -> Vec<VerificationReport> {
        self.verify_all_with(&Budget::default())
    }

    pub fn verify_all_with(&self, budget: &Budget) -> Vec<VerificationReport> {
        use rayon::prelude::*;
        self.entries.par_iter().map(|e| self.verify_with(e, budget)).collect()
    }
}

pub fn sha256_hex(text: &str) -> String {
    Sha256::digest(text.as_bytes())
        .iter()
        .map(|b| format!("{b:02x}"))
        .collect()
}

/// Adds the first weight-`w` logical operator (lexicographic over
/// supports, then `X < Y < Z` per site) whose addition gives `target`'s
/// parameters, or simply a valid smaller code when there is no target.
///
/// When no candidate matches the target exactly, the first candidate with
/// the target's `(k, d)` and the smallest `W` is used instead and a note
/// describing the substitution is returned alongside it.
fn add_logical(
    base: &StabilizerGenerators,
    w: usize,
    target: Option<&Label>,
    budget: &Budget,
) -> Result<(StabilizerGenerators, Option<String>)> {
    let n = base.num_qubits();
    if w == 0 || w > n || base.logical_qubits() == 0 {
        return Err(Error::Invalid(format!("no weight-{w} logical to add")));
    }
    let mut tried = 0;
    let mut fallback: Option<(usize, StabilizerGenerators)> = None;
    let mut support: Vec<usize> = (0..w).collect();
    loop {
        for code in 0..3usize.pow(w as u32) {
            let mut factors = vec![Pauli1::I; n];
            let mut c = code;
            for &q in &support {
                factors[q] = [Pauli1::X, Pauli1::Y, Pauli1::Z][c % 3];
                c /= 3;
            }
            let p = PauliOperator::from_factors(&factors, false);
            if !base.generators().iter().all(|g| g.commutes_unchecked(&p)) {
                continue;
            }
            if base.member(&p)? != Membership::NotMember {
                continue;
            }
            let mut gens = base.generators().to_vec();
            gens.push(p);
            let candidate = StabilizerGenerators::new(n, gens)?;
            let Some(label) = target else {
                return Ok((candidate, None));
            };
            tried += 1;
            if tried > LOGICAL_SEARCH_LIMIT {
                return Err(Error::Budget(format!("no suitable weight-{w} logical among {LOGICAL_SEARCH_LIMIT} candidates")));
            }
            let params = candidate.code_parameters_with(budget)?;
            if params.k == label.k && params.d == Distance::Finite(label.d) {
                if params.w == label.w {
                    return Ok((candidate, None));
                }
                if fallback.as_ref().is_none_or(|(best, _)| params.w < *best) {
                    fallback = Some((params.w, candidate));
                }
            }
        }
        let Some(pos) = (0..w).rev().find(|&i| support[i] < n - w + i) else {
            break;
        };
        support[pos] += 1;
        for i in pos + 1..w {
            support[i] = support[i - 1] + 1;
        }
    }
    match (fallback, target) {
        (Some((best, g)), Some(label)) => {
            let note = format!(
                "no weight-{w} logical gives W = {}; substituted one giving [[{},{},{};{best}]]",
                label.w, label.n, label.k, label.d
            );
            Ok((g, Some(note)))
        }
        _ => Err(Error::Invalid(format!("no weight-{w} logical yields the requested parameters"))),
    }
}

#[derive(Default)]
struct Expansion {
    memo: HashMap<Label, StabilizerGenerators>,
    /// Substitutions made by `PLUSLOGICAL` searches that missed their target.
    incomplete: Vec<String>,
}

/// Rotated surface code on a `d x d` grid: weight-4 plaquettes in a
/// checkerboard, weight-2 X checks on the top and bottom edges and
/// weight-2 Z checks on the left and right edges.
pub fn builder_surface_code(d: usize) -> Result<StabilizerGenerators> {
    if d < 2 {
        return Err(Error::Invalid("surface code needs d >= 2".into()));
    }
    let n = d * d;
    let q = |i: usize, j: usize| i * d + j;
    let check = |qubits: &[usize], is_x: bool| {
        let mut f = vec![Pauli1::I; n];
        for &k in qubits {
            f[k] = if is_x { Pauli1::X } else { Pauli1::Z };
        }
        PauliOperator::from_factors(&f, false)
    };
    // face (i, j) has corners (i, j), (i, j+1), (i+1, j), (i+1, j+1); X when i + j is even
    let is_x = |i: i64, j: i64| (i + j).rem_euclid(2) == 0;
    let mut gens = Vec::new();
    for i in 0..d - 1 {
        for j in 0..d - 1 {
            gens.push(check(&[q(i, j), q(i, j + 1), q(i + 1, j), q(i + 1, j + 1)], is_x(i as i64, j as i64)));
        }
    }
    let last = d as i64 - 1;
    for j in 0..d - 1 {
        if is_x(-1, j as i64) {
            gens.push(check(&[q(0, j), q(0, j + 1)], true));
        }
        if is_x(last, j as i64) {
            gens.push(check(&[q(d - 1, j), q(d - 1, j + 1)], true));
        }
    }
    for i in 0..d - 1 {
        if !is_x(i as i64, -1) {
            gens.push(check(&[q(i, 0), q(i + 1, 0)], false));
        }
        if !is_x(i as i64, last) {
            gens.push(check(&[q(i, d - 1), q(i + 1, d - 1)], false));
        }
    }
    StabilizerGenerators::new(n, gens)
}

/// Catalog entry `[[d^2,1,d;4]]` built from [`builder_surface_code`].
pub fn surface_code_entry(d: usize) -> CatalogEntry {
    CatalogEntry {
        label: Label { n: d * d, k: 1, d, w: 4 },
        construction: Construction::Surface(d),
        optimal: true,
        citation: "rotated surface code".into(),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum VerificationStatus {
    /// Every parameter recomputed exactly and equal to the label.
    Verified,
    /// `(n, k, d)` match and the weight-optimal generating set is lighter
    /// than the label, so the label holds only as an upper bound.
    WeightBelowLabel,
    /// The construction leaves a choice open and no choice reproduced the
    /// label exactly; a substitute was verified instead.
    Incomplete,
    /// Nothing contradicts the label, but `d` or `W` was only bounded.
    UpperBoundOnly,
    Mismatch,
    Failed,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub label: Label,
    pub optimal: bool,
    pub citation: String,
    pub n: Option<usize>,
    pub k: Option<usize>,
    #[serde(serialize_with = "ser_distance")]
    pub d: Option<Distance>,
    pub w: Option<usize>,
    pub w_exact: bool,
    pub w_avg: Option<String>,
    pub status: VerificationStatus,
    pub notes: Vec<String>,
}

fn ser_distance<S: serde::Serializer>(d: &Option<Distance>, s: S) -> std::result::Result<S::Ok, S::Error> {
    match d {
        None => s.serialize_none(),
        Some(d) => s.serialize_str(&d.to_string()),
    }
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.status == VerificationStatus::Verified
    }

    /// True when the recomputed code has the labeled `(n, k, d)` exactly and
    /// `W` at most the labeled weight, so `W_opt(n,k,d) <= w` is certified.
    pub fn certifies_label(&self) -> bool {
        let l = self.label;
        self.w_exact
            && self.n == Some(l.n)
            && self.k == Some(l.k)
            && self.d == Some(Distance::Finite(l.d))
            && self.w.is_some_and(|w| w <= l.w)
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = match self.status {
            VerificationStatus::Verified => "verified",
            VerificationStatus::WeightBelowLabel => "weight-below-label",
            VerificationStatus::Incomplete => "incomplete",
            VerificationStatus::UpperBoundOnly => "upper-bound-only",
            VerificationStatus::Mismatch => "MISMATCH",
            VerificationStatus::Failed => "FAILED",
        };
        write!(f, "{} {status}", self.label)?;
        if !self.optimal {
            write!(f, " (not known to be optimal)")?;
        }
        for note in &self.notes {
            write!(f, "; {note}")?;
        }
        Ok(())
    }
}

/// Smallest certified label weight per `(n, k, d)`, together with the
/// smallest `W` actually recomputed for a construction of that cell.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct UpperBoundTable {
    cells: BTreeMap<(usize, usize, usize), Label>,
    computed: BTreeMap<(usize, usize, usize), usize>,
}

impl UpperBoundTable {
    pub fn from_reports(reports: &[VerificationReport]) -> Self {
        let mut cells: BTreeMap<(usize, usize, usize), Label> = BTreeMap::new();
        let mut computed: BTreeMap<(usize, usize, usize), usize> = BTreeMap::new();
        for r in reports.iter().filter(|r| r.certifies_label()) {
            let l = r.label;
            let key = (l.n, l.k, l.d);
            let slot = cells.entry(key).or_insert(l);
            if l.w < slot.w {
                *slot = l;
            }
            if let Some(w) = r.w {
                let best = computed.entry(key).or_insert(w);
                *best = (*best).min(w);
            }
        }
        UpperBoundTable { cells, computed }
    }

    /// Smallest recomputed `W` in the cell; can be below [`Self::wub`] when a
    /// label is loose.
    pub fn computed(&self, n: usize, k: usize, d: usize) -> WeightBound {
        self.computed
            .get(&(n, k, d))
            .map_or(WeightBound::Infinity, |&w| WeightBound::Finite(w))
    }

    pub fn wub(&self, n: usize, k: usize, d: usize) -> WeightBound {
        self.cells
            .get(&(n, k, d))
            .map_or(WeightBound::Infinity, |l| WeightBound::Finite(l.w))
    }

    pub fn label(&self, n: usize, k: usize, d: usize) -> Option<Label> {
        self.cells.get(&(n, k, d)).copied()
    }

    pub fn cells(&self) -> impl Iterator<Item = &Label> {
        self.cells.values()
    }
}

/// Verifies the catalog and keeps the best construction per cell.
pub fn upper_bound_table(catalog: &Catalog) -> UpperBoundTable {
    UpperBoundTable::from_reports(&catalog.verify_all())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RangeRow {
    pub n: usize,
    pub k: usize,
    pub d: usize,
    pub wlb: WeightBound,
    pub wub: WeightBound,
    /// Smallest `W` recomputed from the catalog constructions of the cell.
    pub wub_computed: WeightBound,
    pub source: crate::bounds::Source,
}

impl RangeRow {
    /// `"4"` when tight, `"4-5"` otherwise, `"inf"` when no code exists.
    pub fn range(&self) -> String {
        if self.wlb == self.wub || !self.wub.is_finite() {
            self.wlb.to_string()
        } else {
            format!("{}-{}", self.wlb, self.wub)
        }
    }
}

/// Joins lower and upper bounds over every cell of `lower`.
pub fn join_tables(lower: &WeightTable, upper: &UpperBoundTable) -> Vec<RangeRow> {
    lower
        .cells()
        .map(|((n, k, d), cell)| RangeRow {
            n,
            k,
            d,
            wlb: cell.wlb,
            wub: upper.wub(n, k, d),
            wub_computed: upper.computed(n, k, d),
            source: cell.source,
        })
        .collect()
}

pub fn ranges_to_csv(rows: &[RangeRow]) -> String {
    let mut out = String::from("n,k,d,wlb,wub,wub_computed,source\n");
    for r in rows {
        out.push_str(&format!(
            "{},{},{},{},{},{},{}\n",
            r.n, r.k, r.d, r.wlb, r.wub, r.wub_computed, r.source
        ));
    }
    out
}
