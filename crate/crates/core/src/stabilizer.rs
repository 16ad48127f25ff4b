//! Stabilizer groups: validation, membership, distance, weight-optimal
//! generating sets, tensor products and tensor-factor detection.
//!
//! Exhaustive routines (distance, group enumeration) run on a packed
//! representation and are limited to at most 64 qubits and to the
//! [`Budget`] limits; exceeding either is reported as [`Error::Budget`].

use std::fmt;

use num_rational::Rational64;
use serde::{Deserialize, Serialize};

use crate::bits::{BitVector, EchelonBasis};
use crate::error::{Error, Result};
use crate::pauli::{parse_operator_list, PauliOperator, QubitSet};

/// Code distance; `Infinity` when the normalizer equals the group mod phase.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Distance {
    Finite(usize),
    Infinity,
}

impl Distance {
    pub fn finite(self) -> Option<usize> {
        match self {
            Distance::Finite(d) => Some(d),
            Distance::Infinity => None,
        }
    }
}

impl fmt::Display for Distance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Distance::Finite(d) => write!(f, "{d}"),
            Distance::Infinity => f.write_str("inf"),
        }
    }
}

/// Limits for the exhaustive routines.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget {
    /// Largest block length accepted by the distance search.
    pub max_distance_qubits: usize,
    /// Largest Pauli weight the distance search will reach.
    pub max_distance_weight: usize,
    /// Largest `n - k` for which the full group is enumerated.
    pub max_group_rank: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_distance_qubits: 14,
            max_distance_weight: 8,
            max_group_rank: 24,
        }
    }
}

/// Result of a group-membership query.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Membership {
    NotMember,
    /// The group contains `sign · P`.
    Member { sign: i8 },
}

/// Independent, pairwise commuting, Hermitian generators of a (−I)-free group.
#[derive(Clone, PartialEq, Eq)]
pub struct StabilizerGenerators {
    n: usize,
    gens: Vec<PauliOperator>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodeParameters {
    pub n: usize,
    pub k: usize,
    pub d: Distance,
    pub w: usize,
    #[serde(with = "ratio_string")]
    pub w_avg: Rational64,
}

impl fmt::Display for CodeParameters {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[[{},{},{};{}]] W={} W_avg={}",
            self.n, self.k, self.d, self.w, self.w, self.w_avg
        )
    }
}

pub(crate) mod ratio_string {
    use num_rational::Rational64;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(r: &Rational64, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&r.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational64, D::Error> {
        let text = String::deserialize(d)?;
        text.parse().map_err(serde::de::Error::custom)
    }
}

/// Validates `ops` and keeps an independent subset spanning the same group.
///
/// Dependent operators equal to a product of earlier ones are dropped;
/// a dependent operator equal to minus such a product means `-I` is in the
/// span and is rejected.
pub fn canonicalize(n: usize, ops: &[PauliOperator]) -> Result<StabilizerGenerators> {
    for (i, op) in ops.iter().enumerate() {
        if op.num_qubits() != n {
            return Err(Error::Dimension {
                expected: n,
                found: op.num_qubits(),
            });
        }
        if !op.is_hermitian() {
            return Err(Error::NonHermitian(i));
        }
    }
    for i in 0..ops.len() {
        for j in i + 1..ops.len() {
            if !ops[i].commutes_unchecked(&ops[j]) {
                return Err(Error::NonCommuting(i, j));
            }
        }
    }
    let mut kept: Vec<PauliOperator> = Vec::new();
    let mut basis = EchelonBasis::new(2 * n, ops.len());
    for op in ops {
        let sym = op.symplectic();
        match basis.solve(&sym) {
            Some(combo) => {
                let product = product_of(n, &kept, &combo);
                if product.phase_power() != op.phase_power() {
                    return Err(Error::MinusIdentity);
                }
            }
            None => {
                basis.insert(&sym);
                kept.push(op.clone());
            }
        }
    }
    Ok(StabilizerGenerators { n, gens: kept })
}

fn product_of(n: usize, ops: &[PauliOperator], combo: &BitVector) -> PauliOperator {
    combo
        .ones_iter()
        .fold(PauliOperator::identity(n), |acc, i| acc.mul_unchecked(&ops[i]))
}

impl StabilizerGenerators {
    /// Strict constructor: rejects dependent generators.
    pub fn new(n: usize, gens: Vec<PauliOperator>) -> Result<Self> {
        let canonical = canonicalize(n, &gens)?;
        if canonical.gens.len() != gens.len() {
            return Err(Error::Invalid("generators are not independent".into()));
        }
        Ok(canonical)
    }

    pub fn empty(n: usize) -> Self {
        StabilizerGenerators { n, gens: Vec::new() }
    }

    /// Parses a generator file (one operator per line, `#` comments).
    pub fn from_text(text: &str) -> Result<Self> {
        let ops = parse_operator_list(text)?;
        let Some(first) = ops.first() else {
            return Err(Error::Invalid("no generators given".into()));
        };
        StabilizerGenerators::new(first.num_qubits(), ops)
    }

    /// Parses whitespace- or comma-separated operator strings.
    pub fn from_strs(items: &[&str]) -> Result<Self> {
        let ops = items
            .iter()
            .map(|s| s.parse::<PauliOperator>())
            .collect::<Result<Vec<_>>>()?;
        let n = ops.first().map(PauliOperator::num_qubits).unwrap_or(0);
        StabilizerGenerators::new(n, ops)
    }

    pub fn num_qubits(&self) -> usize {
        self.n
    }

    pub fn generators(&self) -> &[PauliOperator] {
        &self.gens
    }

    pub fn rank(&self) -> usize {
        self.gens.len()
    }

    pub fn logical_qubits(&self) -> usize {
        self.n - self.gens.len()
    }

    /// Largest weight among the stored generators (not necessarily `W`).
    pub fn max_generator_weight(&self) -> usize {
        self.gens.iter().map(PauliOperator::weight).max().unwrap_or(0)
    }

    pub fn member(&self, p: &PauliOperator) -> Result<Membership> {
        if p.num_qubits() != self.n {
            return Err(Error::Dimension {
                expected: self.n,
                found: p.num_qubits(),
            });
        }
        let mut basis = EchelonBasis::new(2 * self.n, self.gens.len());
        for g in &self.gens {
            basis.insert(&g.symplectic());
        }
        let Some(combo) = basis.solve(&p.symplectic()) else {
            return Ok(Membership::NotMember);
        };
        let element = product_of(self.n, &self.gens, &combo);
        Ok(match (4 + element.phase_power() - p.phase_power()) % 4 {
            0 => Membership::Member { sign: 1 },
            2 => Membership::Member { sign: -1 },
            _ => Membership::NotMember,
        })
    }

    /// Minimum weight of a Pauli commuting with every generator but outside
    /// the group (mod phase).
    pub fn distance(&self) -> Result<Distance> {
        self.distance_with(&Budget::default())
    }

    pub fn distance_with(&self, budget: &Budget) -> Result<Distance> {
        if self.logical_qubits() == 0 {
            return Ok(Distance::Infinity);
        }
        if self.n > budget.max_distance_qubits || self.n > 64 {
            return Err(Error::Budget(format!(
                "distance search on {} qubits exceeds the limit of {}",
                self.n,
                budget.max_distance_qubits.min(64)
            )));
        }
        let packed = PackedGroup::new(self);
        let limit = budget.max_distance_weight.min(self.n);
        for weight in 1..=limit {
            if packed.has_logical_of_weight(weight) {
                return Ok(Distance::Finite(weight));
            }
        }
        Err(Error::Budget(format!(
            "no logical operator of weight <= {limit}; raise the weight limit"
        )))
    }

    /// All `2^(n-k)` group elements with exact signs.
    pub fn elements(&self) -> Result<Vec<PauliOperator>> {
        self.check_enumerable(&Budget::default())?;
        let mut out = Vec::with_capacity(1 << self.rank());
        PackedGroup::new(self).for_each_element(|e| out.push(e.to_operator(self.n)));
        Ok(out)
    }

    /// `A_j` counts of the group, as plain integers.
    pub fn weight_counts(&self) -> Result<Vec<u64>> {
        self.weight_counts_with(&Budget::default())
    }

    pub fn weight_counts_with(&self, budget: &Budget) -> Result<Vec<u64>> {
        self.check_enumerable(budget)?;
        let mut counts = vec![0u64; self.n + 1];
        PackedGroup::new(self).for_each_element(|e| counts[e.weight()] += 1);
        Ok(counts)
    }

    fn check_enumerable(&self, budget: &Budget) -> Result<()> {
        if self.rank() > budget.max_group_rank || self.n > 64 {
            return Err(Error::Budget(format!(
                "group enumeration needs rank <= {} and n <= 64 (rank {}, n {})",
                budget.max_group_rank,
                self.rank(),
                self.n
            )));
        }
        Ok(())
    }

    /// Greedy weight-optimal generating set, sorted by nondecreasing weight.
    ///
    /// Each step takes a minimum-weight element outside the span of the
    /// elements already chosen; ties go to the smallest packed `(x, z)` value.
    pub fn weight_optimal_generating_set(&self) -> Result<Vec<PauliOperator>> {
        self.weight_optimal_with(&Budget::default())
    }

    pub fn weight_optimal_with(&self, budget: &Budget) -> Result<Vec<PauliOperator>> {
        self.check_enumerable(budget)?;
        let r = self.rank();
        let packed = PackedGroup::new(self);
        let mut counts = vec![0u64; self.n + 1];
        packed.for_each_element(|e| counts[e.weight()] += 1);
        let mut basis = PackedEchelon::default();
        let mut chosen = Vec::with_capacity(r);
        for w in 1..=self.n {
            if chosen.len() == r {
                break;
            }
            if counts[w] == 0 {
                continue;
            }
            let mut layer = Vec::with_capacity(counts[w] as usize);
            packed.for_each_element(|e| {
                if e.weight() == w {
                    layer.push(e)
                }
            });
            layer.sort_by_key(|e| (e.x, e.z));
            for e in layer {
                if basis.insert(e.x, e.z) {
                    chosen.push(e.to_operator(self.n));
                    if chosen.len() == r {
                        break;
                    }
                }
            }
        }
        debug_assert_eq!(chosen.len(), r);
        Ok(chosen)
    }

    /// `W(G)`: the largest weight in a weight-optimal generating set.
    pub fn optimal_weight(&self) -> Result<usize> {
        Ok(self
            .weight_optimal_generating_set()?
            .iter()
            .map(PauliOperator::weight)
            .max()
            .unwrap_or(0))
    }

    /// `W_avg(G)`: mean weight of a weight-optimal generating set.
    pub fn optimal_average_weight(&self) -> Result<Rational64> {
        let set = self.weight_optimal_generating_set()?;
        Ok(average_weight(&set))
    }

    pub fn code_parameters(&self) -> Result<CodeParameters> {
        self.code_parameters_with(&Budget::default())
    }

    pub fn code_parameters_with(&self, budget: &Budget) -> Result<CodeParameters> {
        let set = self.weight_optimal_with(budget)?;
        Ok(CodeParameters {
            n: self.n,
            k: self.logical_qubits(),
            d: self.distance_with(budget)?,
            w: set.iter().map(PauliOperator::weight).max().unwrap_or(0),
            w_avg: average_weight(&set),
        })
    }

    /// Generators `g ⊗ I` and `I ⊗ h`.
    pub fn tensor_product(&self, other: &StabilizerGenerators) -> StabilizerGenerators {
        let n = self.n + other.n;
        let gens = self
            .gens
            .iter()
            .map(|g| g.embed(n, 0))
            .chain(other.gens.iter().map(|h| h.embed(n, self.n)))
            .collect();
        StabilizerGenerators { n, gens }
    }

    /// Appends `m` qubits, each stabilized by a single-qubit `Z`.
    pub fn pad(&self, m: usize) -> StabilizerGenerators {
        let zs: Vec<PauliOperator> = (0..m)
            .map(|q| PauliOperator::single(m, q, crate::pauli::Pauli1::Z))
            .collect();
        self.tensor_product(&StabilizerGenerators { n: m, gens: zs })
    }

    /// Removes the qubits carrying weight-1 group elements.
    ///
    /// Returns the reduced group on `n - t` qubits and `t`; `k`, `d` and `W`
    /// are unchanged.
    pub fn strip_weight_one(&self) -> Result<(StabilizerGenerators, usize)> {
        let set = self.weight_optimal_generating_set()?;
        let t = set.iter().take_while(|g| g.weight() == 1).count();
        if t == 0 {
            return Ok((self.clone(), 0));
        }
        let mut stripped = BitVector::zeros(self.n);
        for g in &set[..t] {
            stripped.or_assign(&g.support_bits());
        }
        let keep = QubitSet::new((0..self.n).filter(|&q| !stripped.get(q)));
        let mut gens = Vec::with_capacity(set.len() - t);
        for g in &set[t..] {
            if g.support_bits().and_count(&stripped) != 0 {
                return Err(Error::Invalid(
                    "weight-optimal generator overlaps a weight-1 element".into(),
                ));
            }
            let mut reduced = g.restrict(&keep)?;
            if g.sign() == Some(-1) {
                reduced = reduced.negated();
            }
            gens.push(reduced);
        }
        Ok((StabilizerGenerators::new(keep.len(), gens)?, t))
    }

    /// Connected components of the generator/qubit incidence structure.
    ///
    /// Qubits outside every generator's support come back as one-qubit
    /// components with no generators.
    pub fn factor_components(&self) -> Vec<Component> {
        let n = self.n;
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut [usize], mut a: usize) -> usize {
            while parent[a] != a {
                parent[a] = parent[parent[a]];
                a = parent[a];
            }
            a
        }
        for g in &self.gens {
            let support: Vec<usize> = g.support_bits().ones_iter().collect();
            for pair in support.windows(2) {
                let (a, b) = (find(&mut parent, pair[0]), find(&mut parent, pair[1]));
                if a != b {
                    parent[a.max(b)] = a.min(b);
                }
            }
        }
        let roots: Vec<usize> = (0..n).map(|q| find(&mut parent, q)).collect();
        let mut order: Vec<usize> = roots.clone();
        order.sort_unstable();
        order.dedup();
        order
            .into_iter()
            .map(|root| {
                let qubits = QubitSet::new((0..n).filter(|&q| roots[q] == root));
                let gens = self
                    .gens
                    .iter()
                    .filter(|g| g.support_bits().first_one().map(|q| roots[q]) == Some(root))
                    .map(|g| {
                        let mut r = g.restrict(&qubits).expect("qubits in range");
                        if g.sign() == Some(-1) {
                            r = r.negated();
                        }
                        r
                    })
                    .collect();
                Component {
                    group: StabilizerGenerators {
                        n: qubits.len(),
                        gens,
                    },
                    qubits,
                }
            })
            .collect()
    }
}

/// One tensor factor of a stabilizer group.
#[derive(Clone, Debug)]
pub struct Component {
    pub qubits: QubitSet,
    pub group: StabilizerGenerators,
}

fn average_weight(set: &[PauliOperator]) -> Rational64 {
    if set.is_empty() {
        return Rational64::from_integer(0);
    }
    let total: usize = set.iter().map(PauliOperator::weight).sum();
    Rational64::new(total as i64, set.len() as i64)
}

impl fmt::Display for StabilizerGenerators {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let items: Vec<String> = self.gens.iter().map(|g| g.to_string()).collect();
        write!(f, "<{}>", items.join(", "))
    }
}

impl fmt::Debug for StabilizerGenerators {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "StabilizerGenerators(n={}, {})", self.n, self)
    }
}

/// Group element on at most 64 qubits: `i^phase X^x Z^z`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) struct Packed {
    pub x: u64,
    pub z: u64,
    pub phase: u8,
}

impl Packed {
    fn from_operator(p: &PauliOperator) -> Self {
        Packed {
            x: p.x_bits().words().first().copied().unwrap_or(0),
            z: p.z_bits().words().first().copied().unwrap_or(0),
            phase: p.phase_power(),
        }
    }

    #[inline]
    pub fn weight(&self) -> usize {
        (self.x | self.z).count_ones() as usize
    }

    #[inline]
    fn mul(&self, other: &Packed) -> Packed {
        let swap = ((self.z & other.x).count_ones() % 2) as u8;
        Packed {
            x: self.x ^ other.x,
            z: self.z ^ other.z,
            phase: (self.phase + other.phase + 2 * swap) % 4,
        }
    }

    pub fn to_operator(self, n: usize) -> PauliOperator {
        let mut x = BitVector::zeros(n);
        let mut z = BitVector::zeros(n);
        for q in 0..n {
            x.set(q, (self.x >> q) & 1 == 1);
            z.set(q, (self.z >> q) & 1 == 1);
        }
        PauliOperator::from_parts(x, z, self.phase).expect("equal lengths")
    }
}

/// Echelon basis over packed symplectic vectors.
#[derive(Default)]
pub(crate) struct PackedEchelon {
    rows: Vec<(u32, u128)>,
}

impl PackedEchelon {
    #[inline]
    fn key(x: u64, z: u64) -> u128 {
        (x as u128) | ((z as u128) << 64)
    }

    #[inline]
    fn reduce(&self, mut v: u128) -> u128 {
        for &(pivot, row) in &self.rows {
            if (v >> pivot) & 1 == 1 {
                v ^= row;
            }
        }
        v
    }

    pub fn contains(&self, x: u64, z: u64) -> bool {
        self.reduce(Self::key(x, z)) == 0
    }

    pub fn insert(&mut self, x: u64, z: u64) -> bool {
        let v = self.reduce(Self::key(x, z));
        if v == 0 {
            return false;
        }
        let pivot = v.trailing_zeros();
        for row in self.rows.iter_mut() {
            if (row.1 >> pivot) & 1 == 1 {
                row.1 ^= v;
            }
        }
        self.rows.push((pivot, v));
        true
    }
}

pub(crate) struct PackedGroup {
    n: usize,
    gens: Vec<Packed>,
}

impl PackedGroup {
    pub fn new(g: &StabilizerGenerators) -> Self {
        debug_assert!(g.n <= 64);
        PackedGroup {
            n: g.n,
            gens: g.gens.iter().map(Packed::from_operator).collect(),
        }
    }

    /// Visits every element once, in Gray-code order.
    pub fn for_each_element(&self, mut visit: impl FnMut(Packed)) {
        let r = self.gens.len();
        let mut cur = Packed { x: 0, z: 0, phase: 0 };
        visit(cur);
        for i in 1u64..(1u64 << r) {
            // generators commute and square to +I, so toggling is right-multiplication
            let flip = i.trailing_zeros() as usize;
            cur = cur.mul(&self.gens[flip]);
            visit(cur);
        }
    }

    fn has_logical_of_weight(&self, weight: usize) -> bool {
        let n = self.n;
        // syndrome masks: bit i set when the single-qubit Pauli anticommutes with gens[i]
        let mut sx = vec![0u64; n];
        let mut sz = vec![0u64; n];
        for (i, g) in self.gens.iter().enumerate() {
            for q in 0..n {
                if (g.z >> q) & 1 == 1 {
                    sx[q] |= 1 << i;
                }
                if (g.x >> q) & 1 == 1 {
                    sz[q] |= 1 << i;
                }
            }
        }
        let mut basis = PackedEchelon::default();
        for g in &self.gens {
            basis.insert(g.x, g.z);
        }
        let ctx = SearchCtx {
            n,
            sx: &sx,
            sz: &sz,
            basis: &basis,
        };
        ctx.search(0, weight, 0, 0, 0)
    }
}

struct SearchCtx<'a> {
    n: usize,
    sx: &'a [u64],
    sz: &'a [u64],
    basis: &'a PackedEchelon,
}

impl SearchCtx<'_> {
    fn search(&self, start: usize, remaining: usize, synd: u64, x: u64, z: u64) -> bool {
        if remaining == 0 {
            return synd == 0 && !self.basis.contains(x, z);
        }
        for q in start..=self.n - remaining {
            let bit = 1u64 << q;
            let choices = [
                (self.sx[q], bit, 0),
                (self.sz[q], 0, bit),
                (self.sx[q] ^ self.sz[q], bit, bit),
            ];
            for (s, bx, bz) in choices {
                if self.search(q + 1, remaining - 1, synd ^ s, x | bx, z | bz) {
                    return true;
                }
            }
        }
        false
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn group(items: &[&str]) -> StabilizerGenerators {
        StabilizerGenerators::from_strs(items).unwrap()
    }

    fn p(s: &str) -> PauliOperator {
        s.parse().unwrap()
    }

    fn weights(set: &[PauliOperator]) -> Vec<usize> {
        set.iter().map(PauliOperator::weight).collect()
    }

    #[test]
    fn canonicalize_drops_and_rejects() {
        let g = canonicalize(2, &[p("XX"), p("XX")]).unwrap();
        assert_eq!(g.rank(), 1);
        let g = canonicalize(2, &[p("XX"), p("ZZ"), p("-YY")]).unwrap();
        assert_eq!(g.rank(), 2);
        assert_eq!(g.member(&p("-YY")).unwrap(), Membership::Member { sign: 1 });
        assert!(matches!(canonicalize(2, &[p("XX"), p("-XX")]), Err(Error::MinusIdentity)));
        assert!(matches!(canonicalize(2, &[p("XX"), p("ZZ"), p("YY")]), Err(Error::MinusIdentity)));
        assert!(matches!(canonicalize(1, &[p("X"), p("Z")]), Err(Error::NonCommuting(0, 1))));
        assert!(matches!(canonicalize(1, &[p("iX")]), Err(Error::NonHermitian(0))));
    }

    #[test]
    fn membership_with_sign() {
        let g = group(&["XXXX", "ZZZZ"]);
        assert_eq!(g.member(&p("YYYY")).unwrap(), Membership::Member { sign: 1 });
        assert_eq!(g.member(&p("-YYYY")).unwrap(), Membership::Member { sign: -1 });
        assert_eq!(g.member(&p("XXZZ")).unwrap(), Membership::NotMember);
        assert_eq!(
            g.member(&PauliOperator::identity(4)).unwrap(),
            Membership::Member { sign: 1 }
        );
    }

    #[test]
    fn distances() {
        assert_eq!(group(&["XXXI", "IYYY", "ZIZZ"]).distance().unwrap(), Distance::Finite(2));
        assert_eq!(
            group(&["XZZXI", "IXZZX", "XIXZZ", "ZXIXZ"]).distance().unwrap(),
            Distance::Finite(3)
        );
        assert_eq!(group(&["Z"]).distance().unwrap(), Distance::Infinity);
        let big = StabilizerGenerators::empty(15);
        assert!(matches!(big.distance(), Err(Error::Budget(_))));
    }

    #[test]
    fn weight_optimal_sets() {
        let g1 = group(&["XXXI", "IYYY", "ZIZZ"]);
        assert_eq!(weights(&g1.weight_optimal_generating_set().unwrap()), vec![3, 3, 3]);
        let g2 = group(&["ZZII", "IIZZ", "XXXX"]);
        assert_eq!(weights(&g2.weight_optimal_generating_set().unwrap()), vec![2, 2, 4]);
        assert_eq!(g1.optimal_weight().unwrap(), 3);
        assert_eq!(g2.optimal_weight().unwrap(), 4);
        assert_eq!(g2.optimal_average_weight().unwrap(), Rational64::new(8, 3));
        let zz = group(&["ZI", "IZ"]);
        assert_eq!(weights(&zz.weight_optimal_generating_set().unwrap()), vec![1, 1]);
        let z = group(&["Z"]);
        assert_eq!(z.optimal_weight().unwrap(), 1);
        assert_eq!(z.optimal_average_weight().unwrap(), Rational64::from_integer(1));
    }

    #[test]
    fn optimal_set_generates_group() {
        let g = group(&["XZZXI", "IXZZX", "XIXZZ", "ZXIXZ"]);
        let set = g.weight_optimal_generating_set().unwrap();
        let regenerated = StabilizerGenerators::new(5, set).unwrap();
        for e in g.elements().unwrap() {
            assert_eq!(regenerated.member(&e).unwrap(), Membership::Member { sign: 1 });
        }
    }

    #[test]
    fn tensor_products() {
        let g1 = group(&["XXXI", "IYYY", "ZIZZ"]);
        let z = group(&["Z"]);
        let params = g1.tensor_product(&z).code_parameters().unwrap();
        assert_eq!((params.n, params.k, params.d, params.w), (5, 1, Distance::Finite(2), 3));
        let sq = g1.tensor_product(&g1).code_parameters().unwrap();
        assert_eq!((sq.n, sq.k, sq.d, sq.w), (8, 2, Distance::Finite(2), 3));
        let free = g1.tensor_product(&StabilizerGenerators::empty(2)).code_parameters().unwrap();
        assert_eq!((free.n, free.k, free.d), (6, 3, Distance::Finite(1)));
    }

    #[test]
    fn stripping_weight_one() {
        let g = group(&["ZII", "IXX"]);
        let (stripped, t) = g.strip_weight_one().unwrap();
        assert_eq!(t, 1);
        assert_eq!(stripped.num_qubits(), 2);
        assert_eq!(stripped.generators(), &[p("XX")]);
        let g1 = group(&["XXXI", "IYYY", "ZIZZ"]);
        let (same, t) = g1.strip_weight_one().unwrap();
        assert_eq!(t, 0);
        assert_eq!(same, g1);
        let padded = g1.pad(1);
        let (back, t) = padded.strip_weight_one().unwrap();
        assert_eq!(t, 1);
        let params = back.code_parameters().unwrap();
        assert_eq!((params.n, params.k, params.d, params.w), (4, 1, Distance::Finite(2), 3));
    }

    #[test]
    fn negative_signs_survive_stripping() {
        let g = group(&["-ZII", "-IXX"]);
        let (stripped, _) = g.strip_weight_one().unwrap();
        assert_eq!(stripped.generators(), &[p("-XX")]);
    }

    #[test]
    fn components() {
        let g1 = group(&["XXXI", "IYYY", "ZIZZ"]);
        assert_eq!(g1.tensor_product(&g1).factor_components().len(), 2);
        assert_eq!(group(&["XXXX", "ZZZZ"]).factor_components().len(), 1);
        let parts = group(&["XXII", "IIZZ"]).factor_components();
        assert_eq!(parts.len(), 2);
        assert_eq!(parts[1].qubits.indices(), &[2, 3]);
        assert_eq!(parts[1].group.generators(), &[p("ZZ")]);
    }

    #[test]
    fn parameter_examples() {
        let g1 = group(&["XXXI", "IYYY", "ZIZZ"]);
        let c = g1.code_parameters().unwrap();
        assert_eq!((c.n, c.k, c.d, c.w), (4, 1, Distance::Finite(2), 3));
        assert_eq!(c.w_avg, Rational64::from_integer(3));
        let c = group(&["XXXX", "ZZZZ"]).code_parameters().unwrap();
        assert_eq!((c.n, c.k, c.d, c.w), (4, 2, Distance::Finite(2), 4));
        assert_eq!(c.w_avg, Rational64::from_integer(4));
        let c = group(&["XXXXXX", "ZZZZZZ"]).code_parameters().unwrap();
        assert_eq!((c.n, c.k, c.d, c.w), (6, 4, Distance::Finite(2), 6));
        assert_eq!(c.w_avg, Rational64::from_integer(6));
    }
}
