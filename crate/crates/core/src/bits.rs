//! Packed GF(2) vectors and an incremental echelon basis.
//!
//! Shared by the symplectic Pauli code, the reduction gadgets and the
//! support-union enumeration.

use std::fmt;

/// Fixed-length bit vector over GF(2), packed into 64-bit words.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BitVector {
    len: usize,
    words: Vec<u64>,
}

#[inline]
pub(crate) fn word_count(len: usize) -> usize {
    len.div_ceil(64)
}

impl BitVector {
    pub fn zeros(len: usize) -> Self {
        BitVector {
            len,
            words: vec![0; word_count(len)],
        }
    }

    pub fn ones(len: usize) -> Self {
        let mut v = Self::zeros(len);
        for i in 0..len {
            v.set(i, true);
        }
        v
    }

    pub fn from_bools(bits: &[bool]) -> Self {
        let mut v = Self::zeros(bits.len());
        for (i, &b) in bits.iter().enumerate() {
            if b {
                v.set(i, true);
            }
        }
        v
    }

    /// Builds a vector from the indices of its set bits.
    pub fn from_indices(len: usize, indices: impl IntoIterator<Item = usize>) -> Self {
        let mut v = Self::zeros(len);
        for i in indices {
            v.set(i, true);
        }
        v
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        debug_assert!(i < self.len);
        (self.words[i / 64] >> (i % 64)) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize, value: bool) {
        debug_assert!(i < self.len);
        let mask = 1u64 << (i % 64);
        if value {
            self.words[i / 64] |= mask;
        } else {
            self.words[i / 64] &= !mask;
        }
    }

    #[inline]
    pub fn flip(&mut self, i: usize) {
        self.words[i / 64] ^= 1u64 << (i % 64);
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn xor_assign(&mut self, other: &BitVector) {
        debug_assert_eq!(self.len, other.len);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    pub fn or_assign(&mut self, other: &BitVector) {
        debug_assert_eq!(self.len, other.len);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    /// Parity of the inner product with `other`.
    pub fn dot(&self, other: &BitVector) -> bool {
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones())
            .sum::<u32>()
            % 2
            == 1
    }

    pub fn and_count(&self, other: &BitVector) -> usize {
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    /// Indices of set bits in increasing order.
    pub fn ones_iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut rest = w;
            std::iter::from_fn(move || {
                if rest == 0 {
                    None
                } else {
                    let tz = rest.trailing_zeros() as usize;
                    rest &= rest - 1;
                    Some(wi * 64 + tz)
                }
            })
        })
    }

    pub fn first_one(&self) -> Option<usize> {
        self.ones_iter().next()
    }

    /// Concatenation `[self | other]`.
    pub fn concat(&self, other: &BitVector) -> BitVector {
        let mut out = BitVector::zeros(self.len + other.len);
        for i in self.ones_iter() {
            out.set(i, true);
        }
        for i in other.ones_iter() {
            out.set(self.len + i, true);
        }
        out
    }

    /// Parses a string of `0`/`1` characters; whitespace is ignored.
    pub fn parse01(text: &str) -> Option<BitVector> {
        let bits: Option<Vec<bool>> = text
            .chars()
            .filter(|c| !c.is_whitespace())
            .map(|c| match c {
                '0' => Some(false),
                '1' => Some(true),
                _ => None,
            })
            .collect();
        bits.map(|b| BitVector::from_bools(&b))
    }
}

impl fmt::Debug for BitVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for BitVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.len {
            f.write_str(if self.get(i) { "1" } else { "0" })?;
        }
        Ok(())
    }
}

/// Row-echelon basis built by incremental insertion.
///
/// Every stored row carries the set of inserted vectors (by insertion
/// order) whose sum it equals, so membership queries can report a
/// combination.
#[derive(Clone, Debug)]
pub struct EchelonBasis {
    len: usize,
    rows: Vec<(usize, BitVector, BitVector)>,
    inserted: usize,
    capacity: usize,
}

impl EchelonBasis {
    /// `capacity` bounds the number of insertions tracked in combinations.
    pub fn new(len: usize, capacity: usize) -> Self {
        EchelonBasis {
            len,
            rows: Vec::new(),
            inserted: 0,
            capacity,
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `v` against the basis; returns the residue and the
    /// combination of inserted vectors that was subtracted.
    pub fn reduce(&self, v: &BitVector) -> (BitVector, BitVector) {
        debug_assert_eq!(v.len(), self.len);
        let mut residue = v.clone();
        let mut combo = BitVector::zeros(self.capacity);
        for (pivot, row, row_combo) in &self.rows {
            if residue.get(*pivot) {
                residue.xor_assign(row);
                combo.xor_assign(row_combo);
            }
        }
        (residue, combo)
    }

    pub fn contains(&self, v: &BitVector) -> bool {
        self.reduce(v).0.is_zero()
    }

    /// Inserts `v`; returns `true` if it was independent of the basis.
    /// Dependent vectors still consume an insertion index.
    pub fn insert(&mut self, v: &BitVector) -> bool {
        let index = self.inserted;
        self.inserted += 1;
        let (residue, mut combo) = self.reduce(v);
        let Some(pivot) = residue.first_one() else {
            return false;
        };
        if index < self.capacity {
            combo.flip(index);
        }
        // keep earlier rows reduced at the new pivot so reduce() stays one pass
        for (_, row, row_combo) in self.rows.iter_mut() {
            if row.get(pivot) {
                row.xor_assign(&residue);
                row_combo.xor_assign(&combo);
            }
        }
        self.rows.push((pivot, residue, combo));
        true
    }

    /// Solves `sum_i c_i v_i = target` over the inserted vectors.
    pub fn solve(&self, target: &BitVector) -> Option<BitVector> {
        let (residue, combo) = self.reduce(target);
        residue.is_zero().then_some(combo)
    }
}

/// Rank of a list of equal-length vectors.
pub fn rank(vectors: &[BitVector]) -> usize {
    let Some(first) = vectors.first() else {
        return 0;
    };
    let mut basis = EchelonBasis::new(first.len(), 0);
    for v in vectors {
        basis.insert(v);
    }
    basis.rank()
}

/// Basis of the right kernel `{x : rows · x = 0}` of a matrix given by rows
/// of length `cols`.
pub fn kernel_basis(rows: &[BitVector], cols: usize) -> Vec<BitVector> {
    // reduced row echelon form over the columns
    let mut m: Vec<BitVector> = rows.to_vec();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..m.len()).find(|&i| m[i].get(c)) else {
            continue;
        };
        m.swap(r, p);
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i != r && row.get(c) {
                row.xor_assign(&pivot_row);
            }
        }
        pivots.push(c);
        r += 1;
        if r == m.len() {
            break;
        }
    }
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut x = BitVector::zeros(cols);
            x.set(f, true);
            for (i, &pc) in pivots.iter().enumerate() {
                if m[i].get(f) {
                    x.set(pc, true);
                }
            }
            x
        })
        .collect()
}

/// One solution of `rows · x = rhs`, if any.
pub fn solve_linear(rows: &[BitVector], cols: usize, rhs: &BitVector) -> Option<BitVector> {
    // augmented rows [row | rhs_i]
    let mut m: Vec<BitVector> = rows
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut aug = BitVector::zeros(cols + 1);
            for j in row.ones_iter() {
                aug.set(j, true);
            }
            aug.set(cols, rhs.get(i));
            aug
        })
        .collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..m.len()).find(|&i| m[i].get(c)) else {
            continue;
        };
        m.swap(r, p);
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i != r && row.get(c) {
                row.xor_assign(&pivot_row);
            }
        }
        pivots.push(c);
        r += 1;
    }
    if m[r..].iter().any(|row| row.get(cols)) {
        return None;
    }
    let mut x = BitVector::zeros(cols);
    for (i, &pc) in pivots.iter().enumerate() {
        if m[i].get(cols) {
            x.set(pc, true);
        }
    }
    Some(x)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn echelon_solve_reports_combination() {
        let a = BitVector::parse01("1100").unwrap();
        let b = BitVector::parse01("0110").unwrap();
        let mut basis = EchelonBasis::new(4, 2);
        assert!(basis.insert(&a));
        assert!(basis.insert(&b));
        let target = BitVector::parse01("1010").unwrap();
        let combo = basis.solve(&target).unwrap();
        assert!(combo.get(0) && combo.get(1));
        assert!(basis.solve(&BitVector::parse01("0001").unwrap()).is_none());
    }

    #[test]
    fn kernel_and_particular_solution() {
        let h = vec![BitVector::parse01("101").unwrap(), BitVector::parse01("011").unwrap()];
        let ker = kernel_basis(&h, 3);
        assert_eq!(ker.len(), 1);
        assert_eq!(ker[0].to_string(), "111");
        let s = BitVector::parse01("10").unwrap();
        let x = solve_linear(&h, 3, &s).unwrap();
        assert_eq!(h[0].dot(&x), true);
        assert_eq!(h[1].dot(&x), false);
        let inconsistent = vec![BitVector::parse01("11").unwrap(), BitVector::parse01("11").unwrap()];
        assert!(solve_linear(&inconsistent, 2, &BitVector::parse01("10").unwrap()).is_none());
    }

    #[test]
    fn ones_iter_crosses_word_boundary() {
        let v = BitVector::from_indices(130, [0, 63, 64, 129]);
        assert_eq!(v.ones_iter().collect::<Vec<_>>(), vec![0, 63, 64, 129]);
        assert_eq!(v.count_ones(), 4);
    }
}
