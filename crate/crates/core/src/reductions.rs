//! The reduction chain MLD -> SBP over F2 -> MW-SG, with brute-force
//! deciders for small instances.
//!
//! * MLD: given `H` (rank `m`), `s` and `t`, is there `e` with `He = s`
//!   and `wt(e) <= t`?
//! * SBP: does the span of a basis admit a basis of vectors of weight `<= t`?
//! * MW-SG: does a stabilizer group admit generators of weight `<= t`?

use std::fmt;

use crate::bits::{kernel_basis, rank, solve_linear, BitVector, EchelonBasis};
use crate::error::{Error, Result};
use crate::pauli::PauliOperator;
use crate::stabilizer::{Budget, StabilizerGenerators};

/// Largest block length `decide_mld` scans.
pub const MLD_MAX_N: usize = 24;
/// Largest dimension `decide_sbp` enumerates.
pub const SBP_MAX_RANK: usize = 24;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Answer {
    Yes,
    No,
}

impl Answer {
    fn from_bool(b: bool) -> Self {
        if b {
            Answer::Yes
        } else {
            Answer::No
        }
    }
}

impl fmt::Display for Answer {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Answer::Yes => "YES",
            Answer::No => "NO",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MLDInstance {
    pub h: Vec<BitVector>,
    pub n: usize,
    pub s: BitVector,
    pub t: usize,
}

impl MLDInstance {
    /// Checks shapes and that `H` has full row rank.
    pub fn new(h: Vec<BitVector>, n: usize, s: BitVector, t: usize) -> Result<Self> {
        if let Some(row) = h.iter().find(|r| r.len() != n) {
            return Err(Error::Dimension {
                expected: n,
                found: row.len(),
            });
        }
        if s.len() != h.len() {
            return Err(Error::Dimension {
                expected: h.len(),
                found: s.len(),
            });
        }
        if rank(&h) != h.len() {
            return Err(Error::Invalid("H must have full row rank".into()));
        }
        Ok(MLDInstance { h, n, s, t })
    }

    /// Rows of `H`, then the syndrome line, then the threshold.
    pub fn parse(text: &str) -> Result<Self> {
        let lines = content_lines(text);
        if lines.len() < 2 {
            return Err(Error::parse(None, "expected matrix rows, a syndrome line and a threshold"));
        }
        let (t_line, t) = parse_threshold(&lines)?;
        let (s_line, s_text) = lines[lines.len() - 2];
        let s = parse_bits(s_line, s_text)?;
        let h = lines[..lines.len() - 2]
            .iter()
            .map(|&(i, l)| parse_bits(i, l))
            .collect::<Result<Vec<_>>>()?;
        let n = h.first().map_or(0, BitVector::len);
        MLDInstance::new(h, n, s, t).map_err(|e| Error::parse(Some(t_line), e.to_string()))
    }

    pub fn to_text(&self) -> String {
        let mut out: String = self.h.iter().map(|r| format!("{r}\n")).collect();
        out.push_str(&format!("{}\n{}\n", self.s, self.t));
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SBPInstance {
    pub basis: Vec<BitVector>,
    pub len: usize,
    pub t: usize,
}

impl SBPInstance {
    pub fn new(basis: Vec<BitVector>, len: usize, t: usize) -> Result<Self> {
        if let Some(v) = basis.iter().find(|v| v.len() != len) {
            return Err(Error::Dimension {
                expected: len,
                found: v.len(),
            });
        }
        if rank(&basis) != basis.len() {
            return Err(Error::Invalid("basis vectors are dependent".into()));
        }
        Ok(SBPInstance { basis, len, t })
    }

    /// Basis rows, then the threshold.
    pub fn parse(text: &str) -> Result<Self> {
        let lines = content_lines(text);
        let (t_line, t) = parse_threshold(&lines)?;
        let basis = lines[..lines.len() - 1]
            .iter()
            .map(|&(i, l)| parse_bits(i, l))
            .collect::<Result<Vec<_>>>()?;
        let len = basis.first().map_or(0, BitVector::len);
        SBPInstance::new(basis, len, t).map_err(|e| Error::parse(Some(t_line), e.to_string()))
    }

    pub fn to_text(&self) -> String {
        let mut out: String = self.basis.iter().map(|r| format!("{r}\n")).collect();
        out.push_str(&format!("{}\n", self.t));
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MWSGInstance {
    pub generators: StabilizerGenerators,
    pub t: usize,
}

fn content_lines(text: &str) -> Vec<(usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty())
        .collect()
}

fn parse_bits(line: usize, text: &str) -> Result<BitVector> {
    let compact: String = text.split_whitespace().collect();
    BitVector::parse01(&compact).ok_or_else(|| Error::parse(Some(line), format!("expected a 0/1 row, got {text:?}")))
}

fn parse_threshold(lines: &[(usize, &str)]) -> Result<(usize, usize)> {
    let &(i, text) = lines.last().ok_or_else(|| Error::parse(None, "empty instance"))?;
    let t = text
        .parse()
        .map_err(|_| Error::parse(Some(i), format!("expected a threshold, got {text:?}")))?;
    Ok((i, t))
}

/// Outcome of the MLD -> SBP step.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MldReduction {
    Instance(SBPInstance),
    /// `Hx = s` has no solution, so the MLD instance is a NO.
    NoSolution,
}

/// Kernel vectors padded with `n` zeros plus `[x | 1^n]` for a particular
/// solution `x`; threshold `n + t`.
pub fn mld_to_sbp(inst: &MLDInstance) -> MldReduction {
    let n = inst.n;
    let Some(x) = solve_linear(&inst.h, n, &inst.s) else {
        return MldReduction::NoSolution;
    };
    let zeros = BitVector::zeros(n);
    let mut basis: Vec<BitVector> = kernel_basis(&inst.h, n).iter().map(|a| a.concat(&zeros)).collect();
    basis.push(x.concat(&BitVector::ones(n)));
    MldReduction::Instance(SBPInstance {
        basis,
        len: 2 * n,
        t: n + inst.t,
    })
}

/// `Z(v)` for each basis vector, same threshold.
pub fn sbp_to_mwsg(inst: &SBPInstance) -> Result<MWSGInstance> {
    if rank(&inst.basis) != inst.basis.len() {
        return Err(Error::Invalid("basis vectors are dependent".into()));
    }
    let gens = inst.basis.iter().map(PauliOperator::z_type).collect();
    Ok(MWSGInstance {
        generators: StabilizerGenerators::new(inst.len, gens)?,
        t: inst.t,
    })
}

/// Scans error patterns by increasing weight.
pub fn decide_mld(inst: &MLDInstance) -> Result<Answer> {
    let n = inst.n;
    if n > MLD_MAX_N {
        return Err(Error::Budget(format!("MLD decider limited to n <= {MLD_MAX_N}")));
    }
    let columns: Vec<BitVector> = (0..n)
        .map(|j| BitVector::from_bools(&inst.h.iter().map(|r| r.get(j)).collect::<Vec<_>>()))
        .collect();
    let m = inst.h.len();
    for w in 0..=inst.t.min(n) {
        let mut found = false;
        for_each_combination(n, w, |idx| {
            let mut syn = BitVector::zeros(m);
            for &j in idx {
                syn.xor_assign(&columns[j]);
            }
            if syn == inst.s {
                found = true;
            }
            found
        });
        if found {
            return Ok(Answer::Yes);
        }
    }
    Ok(Answer::No)
}

/// Calls `f` on each `w`-subset of `0..n` in lexicographic order until it
/// returns true.
fn for_each_combination(n: usize, w: usize, mut f: impl FnMut(&[usize]) -> bool) {
    if w > n {
        return;
    }
    let mut idx: Vec<usize> = (0..w).collect();
    loop {
        if f(&idx) {
            return;
        }
        let Some(pos) = (0..w).rev().find(|&i| idx[i] < n - w + i) else {
            return;
        };
        idx[pos] += 1;
        for i in pos + 1..w {
            idx[i] = idx[i - 1] + 1;
        }
    }
}

/// Enumerates the span; YES iff its elements of weight `<= t` span it.
pub fn decide_sbp(inst: &SBPInstance) -> Result<Answer> {
    let r = inst.basis.len();
    if r > SBP_MAX_RANK {
        return Err(Error::Budget(format!("SBP decider limited to dimension <= {SBP_MAX_RANK}")));
    }
    let mut light = EchelonBasis::new(inst.len, r);
    let mut current = BitVector::zeros(inst.len);
    for step in 1u64..(1u64 << r) {
        current.xor_assign(&inst.basis[step.trailing_zeros() as usize]);
        if current.count_ones() <= inst.t {
            light.insert(&current);
            if light.rank() == r {
                return Ok(Answer::Yes);
            }
        }
    }
    Ok(Answer::from_bool(light.rank() == r))
}

/// Enumerates the group; YES iff its elements of weight `<= t` generate it.
pub fn decide_mwsg(inst: &MWSGInstance) -> Result<Answer> {
    decide_mwsg_with(inst, &Budget::default())
}

pub fn decide_mwsg_with(inst: &MWSGInstance, budget: &Budget) -> Result<Answer> {
    let g = &inst.generators;
    let r = g.rank();
    if r > budget.max_group_rank {
        return Err(Error::Budget(format!("group rank {r} exceeds {}", budget.max_group_rank)));
    }
    let mut light = EchelonBasis::new(2 * g.num_qubits(), r);
    for e in g.elements()? {
        if !e.is_identity_up_to_phase() && e.weight() <= inst.t {
            light.insert(&e.symplectic());
            if light.rank() == r {
                break;
            }
        }
    }
    Ok(Answer::from_bool(light.rank() == r))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bits(s: &str) -> BitVector {
        BitVector::parse01(s).unwrap()
    }

    #[test]
    fn single_bit_instance() {
        let inst = MLDInstance::new(vec![bits("1")], 1, bits("0"), 0).unwrap();
        let MldReduction::Instance(sbp) = mld_to_sbp(&inst) else {
            panic!("solvable");
        };
        assert_eq!(sbp.basis, vec![bits("01")]);
        assert_eq!(sbp.t, 1);
        assert_eq!(decide_mld(&inst).unwrap(), Answer::Yes);
        assert_eq!(decide_sbp(&sbp).unwrap(), Answer::Yes);
    }

    #[test]
    fn no_solution_is_surfaced() {
        let inst = MLDInstance {
            h: vec![bits("00")],
            n: 2,
            s: bits("1"),
            t: 2,
        };
        assert_eq!(mld_to_sbp(&inst), MldReduction::NoSolution);
        assert!(MLDInstance::new(vec![bits("00")], 2, bits("1"), 2).is_err());
    }

    #[test]
    fn sbp_to_mwsg_examples() {
        let yes = SBPInstance::new(vec![bits("110"), bits("011")], 3, 2).unwrap();
        let g = sbp_to_mwsg(&yes).unwrap();
        assert_eq!(g.generators.generators()[0].to_string(), "ZZI");
        assert_eq!(decide_mwsg(&g).unwrap(), Answer::Yes);
        let no = SBPInstance::new(vec![bits("111")], 3, 2).unwrap();
        assert_eq!(decide_mwsg(&sbp_to_mwsg(&no).unwrap()).unwrap(), Answer::No);
        let empty = SBPInstance::new(vec![], 3, 0).unwrap();
        assert_eq!(decide_sbp(&empty).unwrap(), Answer::Yes);
        assert_eq!(decide_mwsg(&sbp_to_mwsg(&empty).unwrap()).unwrap(), Answer::Yes);
        assert!(SBPInstance::new(vec![bits("11"), bits("11")], 2, 1).is_err());
    }

    #[test]
    fn mwsg_thresholds() {
        let case = |gens: &[&str], t| {
            let generators = StabilizerGenerators::from_strs(gens).unwrap();
            decide_mwsg(&MWSGInstance { generators, t }).unwrap()
        };
        assert_eq!(case(&["XXXI", "IYYY", "ZIZZ"], 3), Answer::Yes);
        assert_eq!(case(&["XXXI", "IYYY", "ZIZZ"], 2), Answer::No);
        assert_eq!(case(&["ZZII", "IIZZ", "XXXX"], 3), Answer::No);
        assert_eq!(case(&["ZZII", "IIZZ", "XXXX"], 4), Answer::Yes);
    }

    #[test]
    fn instance_files_round_trip() {
        let text = "# H\n101\n011\n# s\n11\n1\n";
        let inst = MLDInstance::parse(text).unwrap();
        assert_eq!(inst.n, 3);
        assert_eq!(MLDInstance::parse(&inst.to_text()).unwrap(), inst);
        assert_eq!(decide_mld(&inst).unwrap(), Answer::Yes);
        let sbp = SBPInstance::parse("110\n011\n2\n").unwrap();
        assert_eq!(SBPInstance::parse(&sbp.to_text()).unwrap(), sbp);
        assert!(MLDInstance::parse("10\n1\nx\n").is_err());
    }
}
