//! Exact LP feasibility oracle: basic-solution enumeration.
//!
//! A nonempty polyhedron inside `x >= 0` has a vertex, so feasibility is
//! decided by solving every square subsystem of active constraints
//! (rows as equalities plus `x_i = 0` bounds) and testing the solutions.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use stabweight::exactlp::{LinearProgram, Relation};

#[derive(Clone, Debug)]
pub struct Row {
    pub coeffs: Vec<i64>,
    pub rel: Relation,
    pub rhs: i64,
}

/// Solves `m x = b` (square) exactly; `None` when singular. Returns
/// numerators and the common denominator.
pub fn solve(m: &[Vec<i128>], b: &[i128]) -> Option<(Vec<i128>, i128)> {
    let n = m.len();
    let mut a: Vec<Vec<i128>> = m.iter().zip(b).map(|(r, &v)| r.iter().copied().chain([v]).collect()).collect();
    let mut prev = 1i128;
    for col in 0..n {
        let pivot = (col..n).find(|&r| a[r][col] != 0)?;
        a.swap(col, pivot);
        for r in 0..n {
            if r == col {
                continue;
            }
            for c in 0..=n {
                if c != col {
                    a[r][c] = (a[col][col] * a[r][c] - a[r][col] * a[col][c]) / prev;
                }
            }
            a[r][col] = 0;
        }
        prev = a[col][col];
    }
    // Bareiss leaves det on the diagonal of every row
    let det = a[n - 1][n - 1];
    Some(((0..n).map(|i| a[i][n] * det / a[i][i]).collect(), det))
}

pub fn satisfies(rows: &[Row], x: &[i128], den: i128) -> bool {
    let (x, den): (Vec<i128>, i128) = if den < 0 { (x.iter().map(|v| -v).collect(), -den) } else { (x.to_vec(), den) };
    if x.iter().any(|&v| v < 0) {
        return false;
    }
    rows.iter().all(|row| {
        let lhs: i128 = row.coeffs.iter().zip(&x).map(|(&c, &v)| c as i128 * v).sum();
        let rhs = row.rhs as i128 * den;
        match row.rel {
            Relation::Eq => lhs == rhs,
            Relation::Ge => lhs >= rhs,
            Relation::Le => lhs <= rhs,
        }
    })
}

pub fn brute_feasible(rows: &[Row], nv: usize) -> bool {
    // candidate active constraints: rows, then bounds x_i = 0
    let mut cands: Vec<(Vec<i128>, i128)> = rows
        .iter()
        .map(|r| (r.coeffs.iter().map(|&c| c as i128).collect(), r.rhs as i128))
        .collect();
    for i in 0..nv {
        let mut e = vec![0i128; nv];
        e[i] = 1;
        cands.push((e, 0));
    }
    let total = cands.len();
    let mut pick: Vec<usize> = (0..nv).collect();
    loop {
        let m: Vec<Vec<i128>> = pick.iter().map(|&i| cands[i].0.clone()).collect();
        let b: Vec<i128> = pick.iter().map(|&i| cands[i].1).collect();
        if let Some((x, den)) = solve(&m, &b) {
            if satisfies(rows, &x, den) {
                return true;
            }
        }
        let Some(pos) = (0..nv).rev().find(|&i| pick[i] < total - nv + i) else {
            return false;
        };
        pick[pos] += 1;
        for i in pos + 1..nv {
            pick[i] = pick[i - 1] + 1;
        }
    }
}

pub fn random_lp(rng: &mut ChaCha8Rng) -> (usize, Vec<Row>) {
    let nv = rng.gen_range(1..=6);
    let nr = rng.gen_range(1..=10);
    let rows = (0..nr)
        .map(|_| Row {
            coeffs: (0..nv).map(|_| rng.gen_range(-3..=3)).collect(),
            rel: [Relation::Eq, Relation::Ge, Relation::Le][rng.gen_range(0..3)],
            rhs: rng.gen_range(-4..=4),
        })
        .collect();
    (nv, rows)
}

pub fn build(nv: usize, rows: &[Row]) -> LinearProgram {
    let mut lp = LinearProgram::new(nv);
    for r in rows {
        let c: Vec<BigInt> = r.coeffs.iter().map(|&v| BigInt::from(v)).collect();
        lp.add_row(&c, r.rel, BigInt::from(r.rhs));
    }
    lp
}

/// Independent certificate check: negate `>=` rows into `<=` form and
/// combine.
pub fn certificate_ok(rows: &[Row], nv: usize, mu: &[BigRational]) -> bool {
    let mut combined = vec![BigRational::zero(); nv];
    let mut bound = BigRational::zero();
    for (row, m) in rows.iter().zip(mu) {
        let sign = match row.rel {
            Relation::Ge => -1,
            _ => 1,
        };
        if row.rel != Relation::Eq && m.is_negative() {
            return false;
        }
        let s = m * BigRational::from_integer(BigInt::from(sign));
        for (acc, &c) in combined.iter_mut().zip(&row.coeffs) {
            *acc += &s * BigRational::from_integer(BigInt::from(c));
        }
        bound += &s * BigRational::from_integer(BigInt::from(row.rhs));
    }
    bound.is_negative() && combined.iter().all(|c| !c.is_negative())
}

pub fn witness_ok(rows: &[Row], w: &[BigRational]) -> bool {
    w.iter().all(|v| !v.is_negative())
        && rows.iter().all(|row| {
            let lhs: BigRational = row.coeffs.iter().zip(w).map(|(&c, v)| v * BigRational::from_integer(BigInt::from(c))).sum();
            let rhs = BigRational::from_integer(BigInt::from(row.rhs));
            match row.rel {
                Relation::Eq => lhs == rhs,
                Relation::Ge => lhs >= rhs,
                Relation::Le => lhs <= rhs,
            }
        })
}

/// Compares `count` random programs with the oracle; returns the
/// (feasible, infeasible) split or the first disagreement.
pub fn check_random_lps(seed: u64, count: usize) -> Result<(usize, usize), String> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (mut feasible, mut infeasible) = (0, 0);
    for _ in 0..count {
        let (nv, rows) = random_lp(&mut rng);
        let lp = build(nv, &rows);
        let res = lp.feasible();
        if res.is_feasible() != brute_feasible(&rows, nv) {
            return Err(format!("status disagrees on\n{}", lp.to_text()));
        }
        let evidence_ok = match (&res.witness, &res.certificate) {
            (Some(w), _) if res.is_feasible() => witness_ok(&rows, w) && lp.verify_witness(w).unwrap_or(false),
            (_, Some(c)) if !res.is_feasible() => certificate_ok(&rows, nv, c) && lp.verify_certificate(c).unwrap_or(false),
            _ => false,
        };
        if !evidence_ok {
            return Err(format!("evidence does not re-verify on\n{}", lp.to_text()));
        }
        if res.is_feasible() {
            feasible += 1;
        } else {
            infeasible += 1;
        }
    }
    Ok((feasible, infeasible))
}
