//! Quantum weight enumerators and their Krawtchouk transforms.
//!
//! `A_j` counts stabilizer-group elements of weight `j`. The MacWilliams
//! transform `B = (K/2^n) M A` counts normalizer elements, and the shadow
//! `Sh = (K/2^n) M~ A` must be nonnegative for every stabilizer code.
//! Everything here is exact.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::stabilizer::{Budget, Distance, StabilizerGenerators};

/// Binomial coefficient, 0 outside `0 <= k <= n`.
pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// `P_j(z; n) = sum_m (-1)^m 3^(j-m) C(n-z, j-m) C(z, m)`.
pub fn krawtchouk(j: usize, z: usize, n: usize) -> Result<BigInt> {
    if j > n || z > n {
        return Err(Error::OutOfRange {
            index: j.max(z),
            len: n + 1,
        });
    }
    Ok(krawtchouk_unchecked(j, z, n))
}

fn krawtchouk_unchecked(j: usize, z: usize, n: usize) -> BigInt {
    let mut total = BigInt::zero();
    for m in 0..=j.min(z) {
        let term = BigInt::from(3).pow((j - m) as u32) * binomial(n - z, j - m) * binomial(z, m);
        if m % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    total
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KrawtchoukMatrix {
    pub n: usize,
    /// `entries[i][j] = P_i(j; n)`, times `(-1)^j` when `signed`.
    pub entries: Vec<Vec<BigInt>>,
    pub signed: bool,
}

impl KrawtchoukMatrix {
    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.entries[i][j]
    }

    fn apply(&self, a: &[BigRational], scale: &BigRational) -> Vec<BigRational> {
        self.entries
            .iter()
            .map(|row| {
                let dot: BigRational = row
                    .iter()
                    .zip(a)
                    .filter(|(_, v)| !v.is_zero())
                    .map(|(m, v)| v * m)
                    .sum();
                dot * scale
            })
            .collect()
    }
}

/// The pair `(M, M~)` for block length `n`, built once per `n`.
pub fn build_matrices(n: usize) -> Arc<(KrawtchoukMatrix, KrawtchoukMatrix)> {
    type Cache = Mutex<HashMap<usize, Arc<(KrawtchoukMatrix, KrawtchoukMatrix)>>>;
    static CACHE: OnceLock<Cache> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(hit) = cache.lock().unwrap().get(&n) {
        return Arc::clone(hit);
    }
    let entries: Vec<Vec<BigInt>> = (0..=n)
        .map(|i| (0..=n).map(|j| krawtchouk_unchecked(i, j, n)).collect())
        .collect();
    let signed_entries = entries
        .iter()
        .map(|row| {
            row.iter()
                .enumerate()
                .map(|(j, v)| if j % 2 == 1 { -v } else { v.clone() })
                .collect()
        })
        .collect();
    let pair = Arc::new((
        KrawtchoukMatrix {
            n,
            entries,
            signed: false,
        },
        KrawtchoukMatrix {
            n,
            entries: signed_entries,
            signed: true,
        },
    ));
    Arc::clone(cache.lock().unwrap().entry(n).or_insert(pair))
}

/// Length-`(n+1)` vector of exact enumerator values.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EnumeratorVector {
    pub n: usize,
    pub values: Vec<BigRational>,
}

impl EnumeratorVector {
    pub fn from_counts(counts: &[u64]) -> Self {
        EnumeratorVector {
            n: counts.len() - 1,
            values: counts
                .iter()
                .map(|&c| BigRational::from_integer(c.into()))
                .collect(),
        }
    }

    pub fn get(&self, j: usize) -> &BigRational {
        &self.values[j]
    }

    pub fn total(&self) -> BigRational {
        self.values.iter().sum()
    }

    pub fn is_nonnegative(&self) -> bool {
        self.values.iter().all(|v| !v.is_negative())
    }

    /// Entries as integers, if they all are.
    pub fn to_integers(&self) -> Option<Vec<BigInt>> {
        self.values
            .iter()
            .map(|v| v.is_integer().then(|| v.to_integer()))
            .collect()
    }
}

impl fmt::Display for EnumeratorVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.values.iter().map(|v| v.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

pub fn enumerator_from_group(g: &StabilizerGenerators) -> Result<EnumeratorVector> {
    enumerator_from_group_with(g, &Budget::default())
}

pub fn enumerator_from_group_with(g: &StabilizerGenerators, budget: &Budget) -> Result<EnumeratorVector> {
    Ok(EnumeratorVector::from_counts(&g.weight_counts_with(budget)?))
}

fn transform(a: &EnumeratorVector, k_factor: &BigInt, signed: bool) -> EnumeratorVector {
    let n = a.n;
    let mats = build_matrices(n);
    let m = if signed { &mats.1 } else { &mats.0 };
    let scale = BigRational::new(k_factor.clone(), BigInt::one() << n);
    EnumeratorVector {
        n,
        values: m.apply(&a.values, &scale),
    }
}

/// `B = (K / 2^n) M A`, with `K = 2^k`.
pub fn macwilliams(a: &EnumeratorVector, k_factor: &BigInt) -> EnumeratorVector {
    transform(a, k_factor, false)
}

/// `Sh = (K / 2^n) M~ A`.
pub fn shadow(a: &EnumeratorVector, k_factor: &BigInt) -> EnumeratorVector {
    transform(a, k_factor, true)
}

/// Largest `d` with `A_j = B_j` for every `j < d`.
pub fn distance_from_enumerators(a: &EnumeratorVector, b: &EnumeratorVector) -> Result<Distance> {
    if a.values.len() != b.values.len() {
        return Err(Error::Dimension {
            expected: a.values.len(),
            found: b.values.len(),
        });
    }
    Ok(a.values
        .iter()
        .zip(&b.values)
        .position(|(x, y)| x != y)
        .map_or(Distance::Infinity, Distance::Finite))
}

/// Mean weight over the whole group, paired with `(3n - A_1) / 4`.
pub fn average_group_weight_check(g: &StabilizerGenerators) -> Result<(BigRational, BigRational)> {
    let counts = g.weight_counts()?;
    let n = g.num_qubits();
    let total: u64 = counts.iter().sum();
    let weighted: u64 = counts.iter().enumerate().map(|(j, &c)| j as u64 * c).sum();
    let lhs = BigRational::new(weighted.into(), total.into());
    let rhs = BigRational::new((BigInt::from(3 * n) - BigInt::from(counts[1])).into(), 4.into());
    Ok((lhs, rhs))
}

/// True when every element has even weight or exactly half of them do.
pub fn parity_property(a: &EnumeratorVector) -> bool {
    let even: BigRational = a.values.iter().step_by(2).sum();
    let total = a.total();
    even == total || even * BigRational::from_integer(2.into()) == total
}
