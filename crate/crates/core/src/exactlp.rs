//! Exact rational LP feasibility.
//!
//! Phase-1 simplex on a dense tableau whose rows are kept as primitive
//! integer vectors: a tableau row may be rescaled by any positive factor
//! without changing the ratio test, so pivots are fraction-free and each
//! row is divided by its content afterwards. Entering and leaving
//! variables follow the smallest-index rule, which rules out cycling.
//!
//! Every answer carries a witness (feasible) or a Farkas certificate
//! (infeasible), and both are re-checked by exact substitution before
//! they are returned.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Programs with at most this many rows are solved in one tableau.
const DIRECT_ROWS: usize = 24;
/// Violated rows added per row-generation round.
const ROWS_PER_ROUND: usize = 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Relation {
    Eq,
    Ge,
    Le,
}

impl Relation {
    fn symbol(self) -> &'static str {
        match self {
            Relation::Eq => "=",
            Relation::Ge => ">=",
            Relation::Le => "<=",
        }
    }

    fn flipped(self) -> Relation {
        match self {
            Relation::Eq => Relation::Eq,
            Relation::Ge => Relation::Le,
            Relation::Le => Relation::Ge,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Constraint {
    pub coeffs: Vec<BigRational>,
    pub relation: Relation,
    pub rhs: BigRational,
}

/// `rows`, with every variable implicitly nonnegative.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LinearProgram {
    num_vars: usize,
    rows: Vec<Constraint>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Feasible,
    Infeasible,
}

#[derive(Clone, Debug)]
pub struct FeasibilityResult {
    pub status: Status,
    /// Feasible point (one value per variable).
    pub witness: Option<Vec<BigRational>>,
    /// Row multipliers: with every `>=` row negated into `<=` form, the
    /// combination `sum_i mu_i row_i` has nonnegative coefficients and a
    /// negative right-hand side. Multipliers of inequality rows are `>= 0`.
    pub certificate: Option<Vec<BigRational>>,
    pub pivots: usize,
}

impl FeasibilityResult {
    pub fn is_feasible(&self) -> bool {
        self.status == Status::Feasible
    }
}

impl LinearProgram {
    pub fn new(num_vars: usize) -> Self {
        LinearProgram {
            num_vars,
            rows: Vec::new(),
        }
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn rows(&self) -> &[Constraint] {
        &self.rows
    }

    pub fn push(&mut self, row: Constraint) -> Result<()> {
        if row.coeffs.len() != self.num_vars {
            return Err(Error::Dimension {
                expected: self.num_vars,
                found: row.coeffs.len(),
            });
        }
        self.rows.push(row);
        Ok(())
    }

    /// Adds a row from integer data.
    pub fn add_row(&mut self, coeffs: &[BigInt], relation: Relation, rhs: BigInt) {
        assert_eq!(coeffs.len(), self.num_vars, "row length");
        self.rows.push(Constraint {
            coeffs: coeffs.iter().cloned().map(BigRational::from_integer).collect(),
            relation,
            rhs: BigRational::from_integer(rhs),
        });
    }

    /// Adds a row given by `(variable, coefficient)` terms.
    pub fn add_sparse_row(&mut self, terms: &[(usize, BigInt)], relation: Relation, rhs: BigInt) {
        let mut coeffs = vec![BigInt::zero(); self.num_vars];
        for (j, c) in terms {
            coeffs[*j] += c;
        }
        self.add_row(&coeffs, relation, rhs);
    }

    /// Exact substitution check of a candidate point.
    pub fn verify_witness(&self, witness: &[BigRational]) -> Result<bool> {
        if witness.len() != self.num_vars {
            return Err(Error::Dimension {
                expected: self.num_vars,
                found: witness.len(),
            });
        }
        if witness.iter().any(|v| v.is_negative()) {
            return Ok(false);
        }
        Ok(self.rows.iter().all(|row| {
            let lhs: BigRational = row
                .coeffs
                .iter()
                .zip(witness)
                .filter(|(c, _)| !c.is_zero())
                .map(|(c, v)| c * v)
                .sum();
            match row.relation {
                Relation::Eq => lhs == row.rhs,
                Relation::Ge => lhs >= row.rhs,
                Relation::Le => lhs <= row.rhs,
            }
        }))
    }

    /// Checks a Farkas certificate in the convention of
    /// [`FeasibilityResult::certificate`].
    pub fn verify_certificate(&self, certificate: &[BigRational]) -> Result<bool> {
        if certificate.len() != self.rows.len() {
            return Err(Error::Dimension {
                expected: self.rows.len(),
                found: certificate.len(),
            });
        }
        let mut combined = vec![BigRational::zero(); self.num_vars];
        let mut bound = BigRational::zero();
        for (row, mu) in self.rows.iter().zip(certificate) {
            if mu.is_zero() {
                continue;
            }
            let signed = match row.relation {
                Relation::Ge => {
                    if mu.is_negative() {
                        return Ok(false);
                    }
                    -mu.clone()
                }
                Relation::Le => {
                    if mu.is_negative() {
                        return Ok(false);
                    }
                    mu.clone()
                }
                Relation::Eq => mu.clone(),
            };
            for (acc, c) in combined.iter_mut().zip(&row.coeffs) {
                if !c.is_zero() {
                    *acc += &signed * c;
                }
            }
            bound += &signed * &row.rhs;
        }
        Ok(bound.is_negative() && combined.iter().all(|c| !c.is_negative()))
    }

    /// Decides feasibility of `rows` over `x >= 0`.
    pub fn feasible(&self) -> FeasibilityResult {
        let result = if self.rows.len() <= DIRECT_ROWS {
            Tableau::build(self).solve()
        } else {
            self.solve_by_row_generation()
        };
        match result.status {
            Status::Feasible => {
                let ok = result
                    .witness
                    .as_deref()
                    .map(|w| self.verify_witness(w).unwrap_or(false))
                    .unwrap_or(false);
                assert!(ok, "simplex produced a witness that fails exact substitution");
            }
            Status::Infeasible => {
                let ok = result
                    .certificate
                    .as_deref()
                    .map(|c| self.verify_certificate(c).unwrap_or(false))
                    .unwrap_or(false);
                assert!(ok, "simplex produced an invalid Farkas certificate");
            }
        }
        result
    }

    fn subset(&self, indices: &[usize]) -> LinearProgram {
        LinearProgram {
            num_vars: self.num_vars,
            rows: indices.iter().map(|&i| self.rows[i].clone()).collect(),
        }
    }

    /// Solves a growing subset of the rows. Infeasibility of a subset is
    /// infeasibility of the whole program (the certificate is padded with
    /// zeros); a subset witness is accepted only once it satisfies every
    /// row, otherwise the most violated rows join the subset.
    fn solve_by_row_generation(&self) -> FeasibilityResult {
        let mut active: Vec<usize> = (0..self.rows.len())
            .filter(|&i| self.rows[i].relation == Relation::Eq)
            .collect();
        let mut in_active = vec![false; self.rows.len()];
        for &i in &active {
            in_active[i] = true;
        }
        let mut pivots = 0;
        loop {
            let sub = self.subset(&active);
            let res = Tableau::build(&sub).solve();
            pivots += res.pivots;
            if res.status == Status::Infeasible {
                let mut certificate = vec![BigRational::zero(); self.rows.len()];
                for (mu, &i) in res.certificate.unwrap().into_iter().zip(&active) {
                    certificate[i] = mu;
                }
                return FeasibilityResult {
                    status: Status::Infeasible,
                    witness: None,
                    certificate: Some(certificate),
                    pivots,
                };
            }
            let witness = res.witness.unwrap();
            let mut violated: Vec<(f64, usize)> = (0..self.rows.len())
                .filter(|&i| !in_active[i])
                .filter_map(|i| self.violation(i, &witness).map(|v| (v, i)))
                .collect();
            if violated.is_empty() {
                return FeasibilityResult {
                    status: Status::Feasible,
                    witness: Some(witness),
                    certificate: None,
                    pivots,
                };
            }
            violated.sort_by(|a, b| b.0.total_cmp(&a.0).then(a.1.cmp(&b.1)));
            for &(_, i) in violated.iter().take(ROWS_PER_ROUND) {
                in_active[i] = true;
                active.push(i);
            }
            active.sort_unstable();
        }
    }

    /// Relative violation of row `i` at `x`, or `None` when satisfied.
    fn violation(&self, i: usize, x: &[BigRational]) -> Option<f64> {
        let row = &self.rows[i];
        let lhs: BigRational = row
            .coeffs
            .iter()
            .zip(x)
            .filter(|(c, v)| !c.is_zero() && !v.is_zero())
            .map(|(c, v)| c * v)
            .sum();
        let gap = match row.relation {
            Relation::Eq => (&lhs - &row.rhs).abs(),
            Relation::Ge => &row.rhs - &lhs,
            Relation::Le => &lhs - &row.rhs,
        };
        if !gap.is_positive() {
            return None;
        }
        let norm = row.coeffs.iter().map(|c| c.abs()).max().unwrap_or_else(BigRational::one);
        let rel = if norm.is_zero() { gap } else { gap / norm };
        Some(rel.to_f64().unwrap_or(f64::MAX))
    }

    /// Line-oriented dump: a `vars N` header, then one row per line
    /// (`c_1 ... c_N REL rhs`, exact fractions).
    pub fn to_text(&self) -> String {
        let mut out = format!("vars {}\n", self.num_vars);
        for row in &self.rows {
            let coeffs: Vec<String> = row.coeffs.iter().map(|c| c.to_string()).collect();
            out.push_str(&format!("{} {} {}\n", coeffs.join(" "), row.relation.symbol(), row.rhs));
        }
        out
    }

    pub fn from_text(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .filter(|(_, l)| !l.trim().is_empty() && !l.trim_start().starts_with('#'));
        let (_, header) = lines.next().ok_or_else(|| Error::parse(None, "missing header"))?;
        let num_vars: usize = header
            .trim()
            .strip_prefix("vars")
            .and_then(|v| v.trim().parse().ok())
            .ok_or_else(|| Error::parse(Some(1), "expected `vars N`"))?;
        let mut lp = LinearProgram::new(num_vars);
        for (i, line) in lines {
            let fields: Vec<&str> = line.split_whitespace().collect();
            let line_no = Some(i + 1);
            if fields.len() != num_vars + 2 {
                return Err(Error::parse(line_no, format!("expected {} fields", num_vars + 2)));
            }
            let parse = |s: &str| -> Result<BigRational> {
                s.parse::<BigRational>()
                    .map_err(|_| Error::parse(line_no, format!("bad number {s:?}")))
            };
            let coeffs = fields[..num_vars].iter().map(|s| parse(s)).collect::<Result<Vec<_>>>()?;
            let relation = match fields[num_vars] {
                "=" => Relation::Eq,
                ">=" => Relation::Ge,
                "<=" => Relation::Le,
                other => return Err(Error::parse(line_no, format!("bad relation {other:?}"))),
            };
            let rhs = parse(fields[num_vars + 1])?;
            lp.push(Constraint {
                coeffs,
                relation,
                rhs,
            })?;
        }
        Ok(lp)
    }
}

impl fmt::Display for LinearProgram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// Positive content of an integer vector (0 for the zero vector).
fn content(values: &[BigInt]) -> BigInt {
    let mut g = BigInt::zero();
    for v in values {
        if v.is_zero() {
            continue;
        }
        g = g.gcd(v);
        if g.is_one() {
            break;
        }
    }
    g
}

fn divide_out(values: &mut [BigInt], g: &BigInt) {
    if g.is_zero() || g.is_one() {
        return;
    }
    for v in values.iter_mut() {
        if !v.is_zero() {
            *v /= g;
        }
    }
}

struct Tableau {
    num_vars: usize,
    /// rows[i] has `cols + 1` entries; the last is the right-hand side.
    rows: Vec<Vec<BigInt>>,
    /// Reduced-cost row (same layout) and its positive scale.
    cost: Vec<BigInt>,
    cost_scale: BigInt,
    basis: Vec<usize>,
    cols: usize,
    /// Initial basic column of each row, and whether it is artificial.
    initial: Vec<(usize, bool)>,
    /// normalized row = sign * scale * original row
    row_sign: Vec<i8>,
    row_scale: Vec<BigRational>,
    relations: Vec<Relation>,
}

impl Tableau {
    fn build(lp: &LinearProgram) -> Tableau {
        let m = lp.rows.len();
        let nv = lp.num_vars;
        let mut int_rows = Vec::with_capacity(m);
        let mut row_sign = Vec::with_capacity(m);
        let mut row_scale = Vec::with_capacity(m);
        let mut relations = Vec::with_capacity(m);
        for row in &lp.rows {
            let lcm = row
                .coeffs
                .iter()
                .chain(std::iter::once(&row.rhs))
                .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
            let mut ints: Vec<BigInt> = row
                .coeffs
                .iter()
                .chain(std::iter::once(&row.rhs))
                .map(|c| c.numer() * (&lcm / c.denom()))
                .collect();
            let g = content(&ints);
            divide_out(&mut ints, &g);
            let g = if g.is_zero() { BigInt::one() } else { g };
            let mut relation = row.relation;
            let mut sign = 1i8;
            if ints[nv].is_negative() {
                for v in ints.iter_mut() {
                    *v = -&*v;
                }
                relation = relation.flipped();
                sign = -1;
            }
            int_rows.push(ints);
            row_sign.push(sign);
            row_scale.push(BigRational::new(lcm, g));
            relations.push(relation);
        }
        let num_slack = relations.iter().filter(|r| **r != Relation::Eq).count();
        let num_art = relations.iter().filter(|r| **r != Relation::Le).count();
        let cols = nv + num_slack + num_art;
        let mut rows = Vec::with_capacity(m);
        let mut basis = Vec::with_capacity(m);
        let mut initial = Vec::with_capacity(m);
        let mut next_slack = nv;
        let mut next_art = nv + num_slack;
        for (ints, relation) in int_rows.into_iter().zip(&relations) {
            let mut row = vec![BigInt::zero(); cols + 1];
            for (j, v) in ints[..nv].iter().enumerate() {
                row[j] = v.clone();
            }
            row[cols] = ints[nv].clone();
            match relation {
                Relation::Le => {
                    row[next_slack] = BigInt::one();
                    basis.push(next_slack);
                    initial.push((next_slack, false));
                    next_slack += 1;
                }
                Relation::Ge => {
                    row[next_slack] = -BigInt::one();
                    next_slack += 1;
                    row[next_art] = BigInt::one();
                    basis.push(next_art);
                    initial.push((next_art, true));
                    next_art += 1;
                }
                Relation::Eq => {
                    row[next_art] = BigInt::one();
                    basis.push(next_art);
                    initial.push((next_art, true));
                    next_art += 1;
                }
            }
            rows.push(row);
        }
        // reduced costs: c_j - sum over artificial rows of a_ij
        let mut cost = vec![BigInt::zero(); cols + 1];
        for j in nv + num_slack..cols {
            cost[j] = BigInt::one();
        }
        for (row, (_, art)) in rows.iter().zip(&initial) {
            if *art {
                for (c, a) in cost.iter_mut().zip(row) {
                    if !a.is_zero() {
                        *c -= a;
                    }
                }
            }
        }
        Tableau {
            num_vars: nv,
            rows,
            cost,
            cost_scale: BigInt::one(),
            basis,
            cols,
            initial,
            row_sign,
            row_scale,
            relations,
        }
    }

    fn objective_is_zero(&self) -> bool {
        self.cost[self.cols].is_zero()
    }

    fn solve(mut self) -> FeasibilityResult {
        let mut pivots = 0;
        while !self.objective_is_zero() {
            let Some(enter) = (0..self.cols).find(|&j| self.cost[j].is_negative()) else {
                break;
            };
            let Some(leave) = self.ratio_test(enter) else {
                unreachable!("phase-1 objective is bounded below by zero");
            };
            self.pivot(leave, enter);
            pivots += 1;
        }
        if self.objective_is_zero() {
            let mut witness = vec![BigRational::zero(); self.num_vars];
            for (row, &b) in self.rows.iter().zip(&self.basis) {
                if b < self.num_vars {
                    witness[b] = BigRational::new(row[self.cols].clone(), row[b].clone());
                }
            }
            FeasibilityResult {
                status: Status::Feasible,
                witness: Some(witness),
                certificate: None,
                pivots,
            }
        } else {
            FeasibilityResult {
                status: Status::Infeasible,
                witness: None,
                certificate: Some(self.certificate()),
                pivots,
            }
        }
    }

    /// Minimum ratio `b_i / a_ie` over `a_ie > 0`; ties go to the smallest
    /// basic index.
    fn ratio_test(&self, enter: usize) -> Option<usize> {
        let mut best: Option<usize> = None;
        for (i, row) in self.rows.iter().enumerate() {
            if !row[enter].is_positive() {
                continue;
            }
            best = match best {
                None => Some(i),
                Some(k) => {
                    let other = &self.rows[k];
                    let lhs = &row[self.cols] * &other[enter];
                    let rhs = &other[self.cols] * &row[enter];
                    match lhs.cmp(&rhs) {
                        std::cmp::Ordering::Less => Some(i),
                        std::cmp::Ordering::Equal if self.basis[i] < self.basis[k] => Some(i),
                        _ => Some(k),
                    }
                }
            };
        }
        best
    }

    fn pivot(&mut self, r: usize, c: usize) {
        let pivot_row = std::mem::take(&mut self.rows[r]);
        let p = pivot_row[c].clone();
        for (i, row) in self.rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            eliminate(row, &pivot_row, &p, c);
            let g = content(row);
            divide_out(row, &g);
        }
        let factor = self.cost[c].clone();
        if !factor.is_zero() {
            eliminate(&mut self.cost, &pivot_row, &p, c);
            self.cost_scale *= &p;
            let mut g = content(&self.cost);
            g = g.gcd(&self.cost_scale);
            divide_out(&mut self.cost, &g);
            if !g.is_zero() && !g.is_one() {
                self.cost_scale /= &g;
            }
        }
        self.rows[r] = pivot_row;
        self.basis[r] = c;
    }

    fn certificate(&self) -> Vec<BigRational> {
        self.initial
            .iter()
            .enumerate()
            .map(|(i, &(col, art))| {
                let reduced = BigRational::new(self.cost[col].clone(), self.cost_scale.clone());
                let c = if art { BigRational::one() } else { BigRational::zero() };
                let y = c - reduced;
                let lambda = y * &self.row_scale[i] * BigRational::from_integer(self.row_sign[i].into());
                // original orientation decides the sign flip into `<=` form
                let original = if self.row_sign[i] < 0 {
                    self.relations[i].flipped()
                } else {
                    self.relations[i]
                };
                match original {
                    Relation::Ge => lambda,
                    Relation::Le | Relation::Eq => -lambda,
                }
            })
            .collect()
    }
}

/// `row <- p * row - row[c] * pivot_row`
fn eliminate(row: &mut [BigInt], pivot_row: &[BigInt], p: &BigInt, c: usize) {
    let factor = row[c].clone();
    for (a, b) in row.iter_mut().zip(pivot_row) {
        if !a.is_zero() {
            *a *= p;
        }
        if !b.is_zero() {
            *a -= &factor * b;
        }
    }
}
