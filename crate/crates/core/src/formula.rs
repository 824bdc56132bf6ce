//! Boolean functions of the comparison bits `(x <=_1 y, ..., x <=_d y)`.
//!
//! Tuples are indexed lexicographically: coordinate 1 is the most significant
//! bit, so index 0 is `(0,...,0)` and index `2^d - 1` is `(1,...,1)`.

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};

/// Largest arity for which a truth table is materialized (`2^24` bits).
pub const MAX_TABLE_ARITY: usize = 24;

#[inline]
pub fn tuple_index(bits: &[bool]) -> usize {
    bits.iter().fold(0, |acc, &b| (acc << 1) | b as usize)
}

pub fn tuple_bits(arity: usize, index: usize) -> Vec<bool> {
    (0..arity).map(|i| index >> (arity - 1 - i) & 1 == 1).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TruthTable {
    arity: usize,
    bits: FixedBitSet,
}

impl TruthTable {
    pub fn new(arity: usize, bits: &[bool]) -> Result<Self> {
        if arity > MAX_TABLE_ARITY {
            return Err(Error::ArityTooLarge { arity, max: MAX_TABLE_ARITY });
        }
        if bits.len() != 1 << arity {
            return Err(Error::BadParameter(format!(
                "truth table of arity {arity} needs {} entries, got {}",
                1usize << arity,
                bits.len()
            )));
        }
        let mut set = FixedBitSet::with_capacity(bits.len());
        for (i, _) in bits.iter().enumerate().filter(|(_, &b)| b) {
            set.insert(i);
        }
        Ok(TruthTable { arity, bits: set })
    }

    pub fn zeros(arity: usize) -> Result<Self> {
        Self::from_fn(arity, |_| false)
    }

    pub fn from_fn(arity: usize, f: impl Fn(&[bool]) -> bool) -> Result<Self> {
        if arity > MAX_TABLE_ARITY {
            return Err(Error::ArityTooLarge { arity, max: MAX_TABLE_ARITY });
        }
        let bits: Vec<bool> = (0..1usize << arity).map(|i| f(&tuple_bits(arity, i))).collect();
        Self::new(arity, &bits)
    }

    /// `α_1 ∧ ... ∧ α_d`.
    pub fn conjunction(arity: usize) -> Result<Self> {
        Self::from_fn(arity, |a| a.iter().all(|&b| b))
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn len(&self) -> usize {
        1 << self.arity
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    #[inline]
    pub fn get(&self, index: usize) -> bool {
        self.bits.contains(index)
    }

    pub fn set(&mut self, index: usize, value: bool) {
        self.bits.set(index, value);
    }

    pub fn eval(&self, bits: &[bool]) -> bool {
        self.get(tuple_index(bits))
    }

    /// Indices of the tuples mapped to 1.
    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.bits.ones()
    }

    pub fn count_ones(&self) -> usize {
        self.bits.count_ones(..)
    }

    /// Entries as a `0`/`1` string in index order.
    pub fn to_bit_string(&self) -> String {
        (0..self.len()).map(|i| if self.get(i) { '1' } else { '0' }).collect()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Literal {
    /// 0-based coordinate.
    pub var: usize,
    pub negated: bool,
}

impl Literal {
    pub fn pos(var: usize) -> Self {
        Literal { var, negated: false }
    }

    pub fn neg(var: usize) -> Self {
        Literal { var, negated: true }
    }
}

/// Conjunction of nonempty clauses of literals.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Cnf {
    arity: usize,
    clauses: Vec<Vec<Literal>>,
}

impl Cnf {
    pub fn new(arity: usize, clauses: Vec<Vec<Literal>>) -> Result<Self> {
        for clause in &clauses {
            if clause.is_empty() {
                return Err(Error::BadParameter("empty clause".into()));
            }
            if let Some(l) = clause.iter().find(|l| l.var >= arity) {
                return Err(Error::BadParameter(format!("literal on coordinate {} exceeds arity {arity}", l.var + 1)));
            }
        }
        Ok(Cnf { arity, clauses })
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn clauses(&self) -> &[Vec<Literal>] {
        &self.clauses
    }

    pub fn eval_with(&self, bit: impl Fn(usize) -> bool) -> bool {
        self.clauses.iter().all(|c| c.iter().any(|l| bit(l.var) != l.negated))
    }
}

/// The formula `φ` of a boolean realizer.
///
/// Small arities are stored as truth tables. Conversions that produce many
/// orders (the width-3 local-to-boolean construction) emit a CNF instead,
/// since its table would have `2^d` entries.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum BooleanFormula {
    Table(TruthTable),
    Cnf(Cnf),
}

impl BooleanFormula {
    pub fn arity(&self) -> usize {
        match self {
            BooleanFormula::Table(t) => t.arity(),
            BooleanFormula::Cnf(c) => c.arity(),
        }
    }

    /// Evaluates `φ` where `bit(i)` is coordinate `i` (0-based).
    pub fn eval_with(&self, bit: impl Fn(usize) -> bool) -> bool {
        match self {
            BooleanFormula::Table(t) => {
                let idx = (0..t.arity()).fold(0, |acc, i| (acc << 1) | bit(i) as usize);
                t.get(idx)
            }
            BooleanFormula::Cnf(c) => c.eval_with(bit),
        }
    }

    pub fn eval(&self, bits: &[bool]) -> bool {
        self.eval_with(|i| bits[i])
    }

    pub fn to_table(&self) -> Result<TruthTable> {
        match self {
            BooleanFormula::Table(t) => Ok(t.clone()),
            BooleanFormula::Cnf(c) => TruthTable::from_fn(c.arity(), |a| c.eval_with(|i| a[i])),
        }
    }
}

impl From<TruthTable> for BooleanFormula {
    fn from(t: TruthTable) -> Self {
        BooleanFormula::Table(t)
    }
}

impl From<Cnf> for BooleanFormula {
    fn from(c: Cnf) -> Self {
        BooleanFormula::Cnf(c)
    }
}
