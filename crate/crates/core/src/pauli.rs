//! n-qubit Pauli operators in binary symplectic form with exact phase.
//!
//! An operator is stored as `i^phase · X^x Z^z` (qubit-wise), so `Y = i·XZ`
//! has both bits set and contributes one unit of phase. Weight and
//! commutation reduce to popcounts over packed words.

use std::fmt;
use std::str::FromStr;

use crate::bits::BitVector;
use crate::error::{Error, Result};

/// Single-qubit factor of a Pauli string.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Pauli1 {
    I,
    X,
    Y,
    Z,
}

impl Pauli1 {
    fn bits(self) -> (bool, bool) {
        match self {
            Pauli1::I => (false, false),
            Pauli1::X => (true, false),
            Pauli1::Y => (true, true),
            Pauli1::Z => (false, true),
        }
    }

    fn from_bits(x: bool, z: bool) -> Self {
        match (x, z) {
            (false, false) => Pauli1::I,
            (true, false) => Pauli1::X,
            (true, true) => Pauli1::Y,
            (false, true) => Pauli1::Z,
        }
    }

    fn letter(self) -> char {
        match self {
            Pauli1::I => 'I',
            Pauli1::X => 'X',
            Pauli1::Y => 'Y',
            Pauli1::Z => 'Z',
        }
    }
}

/// Sorted set of qubit positions.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct QubitSet {
    indices: Vec<usize>,
}

impl QubitSet {
    pub fn new(indices: impl IntoIterator<Item = usize>) -> Self {
        let mut indices: Vec<usize> = indices.into_iter().collect();
        indices.sort_unstable();
        indices.dedup();
        QubitSet { indices }
    }

    pub fn all(n: usize) -> Self {
        QubitSet {
            indices: (0..n).collect(),
        }
    }

    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    pub fn contains(&self, q: usize) -> bool {
        self.indices.binary_search(&q).is_ok()
    }

    pub fn to_bits(&self, n: usize) -> BitVector {
        BitVector::from_indices(n, self.indices.iter().copied())
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PauliOperator {
    n: usize,
    x: BitVector,
    z: BitVector,
    phase: u8,
}

impl PauliOperator {
    pub fn identity(n: usize) -> Self {
        PauliOperator {
            n,
            x: BitVector::zeros(n),
            z: BitVector::zeros(n),
            phase: 0,
        }
    }

    /// Builds `i^phase · X^x Z^z` directly from raw symplectic data.
    pub fn from_parts(x: BitVector, z: BitVector, phase: u8) -> Result<Self> {
        if x.len() != z.len() {
            return Err(Error::Dimension {
                expected: x.len(),
                found: z.len(),
            });
        }
        Ok(PauliOperator {
            n: x.len(),
            x,
            z,
            phase: phase % 4,
        })
    }

    /// Hermitian operator with the given sign (`false` = +1) and factors.
    pub fn from_factors(factors: &[Pauli1], negative: bool) -> Self {
        let n = factors.len();
        let mut op = PauliOperator::identity(n);
        let mut ys = 0u8;
        for (q, f) in factors.iter().enumerate() {
            let (xb, zb) = f.bits();
            op.x.set(q, xb);
            op.z.set(q, zb);
            ys += (*f == Pauli1::Y) as u8;
        }
        op.phase = (ys % 4 + if negative { 2 } else { 0 }) % 4;
        op
    }

    /// Weight-one operator `p` on qubit `q`.
    pub fn single(n: usize, q: usize, p: Pauli1) -> Self {
        let mut factors = vec![Pauli1::I; n];
        factors[q] = p;
        PauliOperator::from_factors(&factors, false)
    }

    /// Z-type operator on the support of `u`.
    pub fn z_type(u: &BitVector) -> Self {
        PauliOperator {
            n: u.len(),
            x: BitVector::zeros(u.len()),
            z: u.clone(),
            phase: 0,
        }
    }

    pub fn num_qubits(&self) -> usize {
        self.n
    }

    pub fn x_bits(&self) -> &BitVector {
        &self.x
    }

    pub fn z_bits(&self) -> &BitVector {
        &self.z
    }

    /// Exponent `p` in `i^p · X^x Z^z`.
    pub fn phase_power(&self) -> u8 {
        self.phase
    }

    fn y_count(&self) -> usize {
        self.x.and_count(&self.z)
    }

    /// Phase relative to the product of the printed single-qubit letters.
    pub fn relative_phase(&self) -> u8 {
        ((self.phase as usize + 4 * self.n - self.y_count()) % 4) as u8
    }

    pub fn is_hermitian(&self) -> bool {
        self.relative_phase() % 2 == 0
    }

    /// Sign of a Hermitian operator relative to its letters: `+1` or `-1`.
    pub fn sign(&self) -> Option<i8> {
        match self.relative_phase() {
            0 => Some(1),
            2 => Some(-1),
            _ => None,
        }
    }

    /// Copy with the relative phase cleared to `+1`.
    pub fn unsigned(&self) -> Self {
        let mut p = self.clone();
        p.phase = (self.y_count() % 4) as u8;
        p
    }

    pub fn negated(&self) -> Self {
        let mut p = self.clone();
        p.phase = (p.phase + 2) % 4;
        p
    }

    pub fn factor(&self, q: usize) -> Pauli1 {
        Pauli1::from_bits(self.x.get(q), self.z.get(q))
    }

    pub fn weight(&self) -> usize {
        self.x
            .words()
            .iter()
            .zip(self.z.words())
            .map(|(a, b)| (a | b).count_ones() as usize)
            .sum()
    }

    pub fn support_bits(&self) -> BitVector {
        let mut s = self.x.clone();
        s.or_assign(&self.z);
        s
    }

    pub fn support(&self) -> QubitSet {
        QubitSet {
            indices: self.support_bits().ones_iter().collect(),
        }
    }

    pub fn is_identity_up_to_phase(&self) -> bool {
        self.x.is_zero() && self.z.is_zero()
    }

    /// Same x/z pattern (phase ignored).
    pub fn same_pattern(&self, other: &PauliOperator) -> bool {
        self.x == other.x && self.z == other.z
    }

    /// Symplectic vector `[x | z]`.
    pub fn symplectic(&self) -> BitVector {
        self.x.concat(&self.z)
    }

    fn check_dim(&self, other: &PauliOperator) -> Result<()> {
        if self.n != other.n {
            return Err(Error::Dimension {
                expected: self.n,
                found: other.n,
            });
        }
        Ok(())
    }

    /// Exact product `self · other`.
    pub fn multiply(&self, other: &PauliOperator) -> Result<PauliOperator> {
        self.check_dim(other)?;
        Ok(self.mul_unchecked(other))
    }

    pub(crate) fn mul_unchecked(&self, other: &PauliOperator) -> PauliOperator {
        // Z^a X^b = (-1)^{a·b} X^b Z^a
        let swap = self.z.and_count(&other.x) as u8;
        let mut x = self.x.clone();
        x.xor_assign(&other.x);
        let mut z = self.z.clone();
        z.xor_assign(&other.z);
        PauliOperator {
            n: self.n,
            x,
            z,
            phase: (self.phase + other.phase + 2 * (swap % 2)) % 4,
        }
    }

    pub fn commutes(&self, other: &PauliOperator) -> Result<bool> {
        self.check_dim(other)?;
        Ok(self.commutes_unchecked(other))
    }

    pub(crate) fn commutes_unchecked(&self, other: &PauliOperator) -> bool {
        (self.x.and_count(&other.z) + self.z.and_count(&other.x)) % 2 == 0
    }

    /// Factors on `qubits`, phase discarded.
    pub fn restrict(&self, qubits: &QubitSet) -> Result<PauliOperator> {
        if let Some(&bad) = qubits.indices.iter().find(|&&q| q >= self.n) {
            return Err(Error::OutOfRange {
                index: bad,
                len: self.n,
            });
        }
        let factors: Vec<Pauli1> = qubits.indices.iter().map(|&q| self.factor(q)).collect();
        Ok(PauliOperator::from_factors(&factors, false))
    }

    /// `self ⊗ other`, phases multiplied.
    pub fn tensor(&self, other: &PauliOperator) -> PauliOperator {
        let n = self.n + other.n;
        let mut x = BitVector::zeros(n);
        let mut z = BitVector::zeros(n);
        for q in self.x.ones_iter() {
            x.set(q, true);
        }
        for q in self.z.ones_iter() {
            z.set(q, true);
        }
        for q in other.x.ones_iter() {
            x.set(self.n + q, true);
        }
        for q in other.z.ones_iter() {
            z.set(self.n + q, true);
        }
        PauliOperator {
            n,
            x,
            z,
            phase: (self.phase + other.phase) % 4,
        }
    }

    /// Identity-padded copy acting on `total` qubits starting at `offset`.
    pub fn embed(&self, total: usize, offset: usize) -> PauliOperator {
        let left = PauliOperator::identity(offset);
        let right = PauliOperator::identity(total - offset - self.n);
        left.tensor(self).tensor(&right)
    }
}

impl fmt::Display for PauliOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let prefix = match self.relative_phase() {
            0 => "",
            1 => "i",
            2 => "-",
            _ => "-i",
        };
        f.write_str(prefix)?;
        for q in 0..self.n {
            write!(f, "{}", self.factor(q).letter())?;
        }
        Ok(())
    }
}

impl fmt::Debug for PauliOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Pauli({self})")
    }
}

impl FromStr for PauliOperator {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let t = text.trim();
        let (negative, rest) = if let Some(r) = t.strip_prefix('-') {
            (true, r)
        } else if let Some(r) = t.strip_prefix('\u{2212}') {
            (true, r)
        } else if let Some(r) = t.strip_prefix('+') {
            (false, r)
        } else {
            (false, t)
        };
        let (imaginary, rest) = match rest.strip_prefix('i') {
            Some(r) => (true, r),
            None => (false, rest),
        };
        let body: String = rest.chars().filter(|c| *c != '⊗' && !c.is_whitespace()).collect();
        if body.is_empty() {
            return Err(Error::parse(None, format!("empty Pauli string {text:?}")));
        }
        let factors = body
            .chars()
            .map(|c| match c {
                'I' => Ok(Pauli1::I),
                'X' => Ok(Pauli1::X),
                'Y' => Ok(Pauli1::Y),
                'Z' => Ok(Pauli1::Z),
                other => Err(Error::parse(None, format!("illegal character {other:?} in {text:?}"))),
            })
            .collect::<Result<Vec<_>>>()?;
        let mut op = PauliOperator::from_factors(&factors, negative);
        if imaginary {
            op.phase = (op.phase + 1) % 4;
        }
        Ok(op)
    }
}

/// Parses one operator per line; blank lines and `#` comments are skipped.
pub fn parse_operator_list(text: &str) -> Result<Vec<PauliOperator>> {
    let mut ops = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let op: PauliOperator = line.parse().map_err(|e| match e {
            Error::Parse { message, .. } => Error::parse(Some(i + 1), message),
            other => other,
        })?;
        if let Some(first) = ops.first() {
            let first: &PauliOperator = first;
            if first.num_qubits() != op.num_qubits() {
                return Err(Error::parse(
                    Some(i + 1),
                    format!("expected {} qubits, found {}", first.num_qubits(), op.num_qubits()),
                ));
            }
        }
        ops.push(op);
    }
    Ok(ops)
}

pub fn format_operator_list(ops: &[PauliOperator]) -> String {
    ops.iter().map(|p| format!("{p}\n")).collect()
}
