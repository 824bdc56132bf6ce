//! Certificate types for dimension, boolean dimension and local dimension,
//! and their verifiers.
//!
//! All verifiers check every ordered pair of the ground set.

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::formula::{BooleanFormula, TruthTable, MAX_TABLE_ARITY};
use crate::poset::Poset;

/// A linear order on `0..n`, given low to high.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LinearOrder {
    seq: Vec<usize>,
    pos: Vec<usize>,
}

impl LinearOrder {
    pub fn new(seq: Vec<usize>) -> Result<Self> {
        let n = seq.len();
        let mut pos = vec![usize::MAX; n];
        for (i, &x) in seq.iter().enumerate() {
            if x >= n {
                return Err(Error::MalformedOrder(format!("id {x} out of range 0..{n}")));
            }
            if pos[x] != usize::MAX {
                return Err(Error::MalformedOrder(format!("id {x} repeated")));
            }
            pos[x] = i;
        }
        Ok(LinearOrder { seq, pos })
    }

    pub fn identity(n: usize) -> Self {
        Self::new((0..n).collect()).unwrap()
    }

    pub fn len(&self) -> usize {
        self.seq.len()
    }

    pub fn is_empty(&self) -> bool {
        self.seq.is_empty()
    }

    pub fn seq(&self) -> &[usize] {
        &self.seq
    }

    pub fn position(&self, x: usize) -> usize {
        self.pos[x]
    }

    #[inline]
    pub fn le(&self, x: usize, y: usize) -> bool {
        self.pos[x] <= self.pos[y]
    }

    #[inline]
    pub fn lt(&self, x: usize, y: usize) -> bool {
        self.pos[x] < self.pos[y]
    }

    pub fn reversed(&self) -> Self {
        Self::new(self.seq.iter().rev().copied().collect()).unwrap()
    }

    pub fn is_extension_of(&self, p: &Poset) -> bool {
        self.len() == p.n() && p.strict_pairs().all(|(x, y)| self.lt(x, y))
    }
}

fn check_len(order: &LinearOrder, n: usize) -> Result<()> {
    if order.len() != n {
        return Err(Error::MalformedOrder(format!("order has {} elements, poset has {n}", order.len())));
    }
    Ok(())
}

/// A family of linear extensions whose intersection should be the order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Realizer {
    orders: Vec<LinearOrder>,
}

impl Realizer {
    pub fn new(orders: Vec<LinearOrder>) -> Result<Self> {
        if let Some(o) = orders.iter().find(|o| o.len() != orders[0].len()) {
            return Err(Error::MalformedOrder(format!(
                "orders of different lengths {} and {}",
                orders[0].len(),
                o.len()
            )));
        }
        Ok(Realizer { orders })
    }

    pub fn orders(&self) -> &[LinearOrder] {
        &self.orders
    }

    pub fn size(&self) -> usize {
        self.orders.len()
    }

    /// The same orders as a local realizer of full linear extensions.
    pub fn to_local(&self) -> LocalRealizer {
        LocalRealizer::new(self.orders.iter().map(|o| PartialLinearExtension { seq: o.seq.clone() }).collect())
    }

    /// The same orders with `φ = α_1 ∧ ... ∧ α_d`.
    pub fn to_boolean(&self) -> Result<BooleanRealizer> {
        BooleanRealizer::new(self.orders.clone(), TruthTable::conjunction(self.size())?.into())
    }
}

pub fn verify_realizer(p: &Poset, r: &Realizer) -> Result<bool> {
    verify_realizer_with(p, r, Exec::default())
}

/// `true` iff `x <= y ⟺ x <=_i y for all i`, for every ordered pair.
pub fn verify_realizer_with(p: &Poset, r: &Realizer, exec: Exec) -> Result<bool> {
    for o in r.orders() {
        check_len(o, p.n())?;
    }
    let n = p.n();
    Ok(exec.all(n, |x| (0..n).all(|y| p.le(x, y) == r.orders.iter().all(|o| o.le(x, y)))))
}

/// `d` linear orders on the ground set plus a formula `φ` of arity `d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BooleanRealizer {
    orders: Vec<LinearOrder>,
    phi: BooleanFormula,
}

impl BooleanRealizer {
    pub fn new(orders: Vec<LinearOrder>, phi: BooleanFormula) -> Result<Self> {
        if phi.arity() != orders.len() {
            return Err(Error::ArityMismatch { formula: phi.arity(), orders: orders.len() });
        }
        if let Some(o) = orders.iter().find(|o| o.len() != orders[0].len()) {
            return Err(Error::MalformedOrder(format!(
                "orders of different lengths {} and {}",
                orders[0].len(),
                o.len()
            )));
        }
        Ok(BooleanRealizer { orders, phi })
    }

    pub fn orders(&self) -> &[LinearOrder] {
        &self.orders
    }

    pub fn phi(&self) -> &BooleanFormula {
        &self.phi
    }

    pub fn size(&self) -> usize {
        self.orders.len()
    }

    /// `(x <=_1 y, ..., x <=_d y)` as a lexicographic tuple index (tables only).
    pub fn tuple_index(&self, x: usize, y: usize) -> usize {
        self.orders.iter().fold(0, |acc, o| (acc << 1) | o.le(x, y) as usize)
    }

    pub fn tuple(&self, x: usize, y: usize) -> Vec<bool> {
        self.orders.iter().map(|o| o.le(x, y)).collect()
    }
}

/// `φ((x <=_1 y), ..., (x <=_d y))`.
pub fn eval_boolean_relation(br: &BooleanRealizer, x: usize, y: usize) -> bool {
    br.phi.eval_with(|i| br.orders[i].le(x, y))
}

pub fn verify_boolean_realizer(p: &Poset, br: &BooleanRealizer) -> Result<bool> {
    verify_boolean_realizer_with(p, br, Exec::default())
}

pub fn verify_boolean_realizer_with(p: &Poset, br: &BooleanRealizer, exec: Exec) -> Result<bool> {
    if br.phi.arity() != br.orders.len() {
        return Err(Error::ArityMismatch { formula: br.phi.arity(), orders: br.orders.len() });
    }
    for o in br.orders() {
        check_len(o, p.n())?;
    }
    let n = p.n();
    Ok(exec.all(n, |x| (0..n).all(|y| eval_boolean_relation(br, x, y) == p.le(x, y))))
}

/// Restricts `φ` to the tuples realized by some ordered pair, zero elsewhere.
///
/// The result satisfies `φ(1,...,1) = 1` (for nonempty posets) and never maps
/// both a tuple and its complement to 1.
pub fn normalize_truth_table(p: &Poset, br: &BooleanRealizer) -> Result<TruthTable> {
    if !verify_boolean_realizer(p, br)? {
        return Err(Error::NotARealizer);
    }
    if br.size() > MAX_TABLE_ARITY {
        return Err(Error::ArityTooLarge { arity: br.size(), max: MAX_TABLE_ARITY });
    }
    let mut realized = FixedBitSet::with_capacity(1 << br.size());
    for x in 0..p.n() {
        for y in 0..p.n() {
            realized.insert(br.tuple_index(x, y));
        }
    }
    let mut table = TruthTable::zeros(br.size())?;
    for idx in realized.ones() {
        // on realized tuples φ agrees with the order
        let bits = crate::formula::tuple_bits(br.size(), idx);
        table.set(idx, br.phi.eval(&bits));
    }
    Ok(table)
}

/// The table forced by `orders`, or `None` when no table works.
pub(crate) fn forced_table(p: &Poset, orders: &[&LinearOrder]) -> Option<TruthTable> {
    let d = orders.len();
    let mut value: Vec<Option<bool>> = vec![None; 1 << d];
    for x in 0..p.n() {
        for y in 0..p.n() {
            let idx = orders.iter().fold(0, |acc, o| (acc << 1) | o.le(x, y) as usize);
            let want = p.le(x, y);
            match value[idx] {
                Some(v) if v != want => return None,
                _ => value[idx] = Some(want),
            }
        }
    }
    let bits: Vec<bool> = value.into_iter().map(|v| v.unwrap_or(false)).collect();
    Some(TruthTable::new(d, &bits).expect("arity is small"))
}

/// A linear order on a subset of the ground set.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PartialLinearExtension {
    seq: Vec<usize>,
}

impl PartialLinearExtension {
    pub fn new(seq: Vec<usize>) -> Result<Self> {
        let mut sorted = seq.clone();
        sorted.sort_unstable();
        if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::MalformedOrder(format!("id {} repeated", w[0])));
        }
        Ok(PartialLinearExtension { seq })
    }

    pub fn seq(&self) -> &[usize] {
        &self.seq
    }

    pub fn len(&self) -> usize {
        self.seq.len()
    }

    pub fn is_empty(&self) -> bool {
        self.seq.is_empty()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.seq.contains(&x)
    }

    /// First violation of `p` on the support, as `(x, y)` with `x < y` in `p`
    /// but `y` listed before `x`.
    pub fn violation(&self, p: &Poset) -> Option<(usize, usize)> {
        for (i, &lo) in self.seq.iter().enumerate() {
            for &hi in &self.seq[i + 1..] {
                if p.lt(hi, lo) {
                    return Some((hi, lo));
                }
            }
        }
        None
    }
}

impl From<&LinearOrder> for PartialLinearExtension {
    fn from(o: &LinearOrder) -> Self {
        PartialLinearExtension { seq: o.seq.clone() }
    }
}

/// A multiset of partial linear extensions, kept sorted.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct LocalRealizer {
    ples: Vec<PartialLinearExtension>,
}

impl LocalRealizer {
    pub fn new(mut ples: Vec<PartialLinearExtension>) -> Self {
        ples.sort();
        LocalRealizer { ples }
    }

    pub fn ples(&self) -> &[PartialLinearExtension] {
        &self.ples
    }

    pub fn len(&self) -> usize {
        self.ples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ples.is_empty()
    }

    pub fn width(&self) -> usize {
        local_width(self)
    }
}

/// Maximum number of partial linear extensions any element occurs in.
pub fn local_width(lr: &LocalRealizer) -> usize {
    occurrence_counts(lr.ples()).into_iter().max().unwrap_or(0)
}

pub(crate) fn occurrence_counts(ples: &[PartialLinearExtension]) -> Vec<usize> {
    let n = ples.iter().flat_map(|q| q.seq.iter()).map(|&x| x + 1).max().unwrap_or(0);
    let mut count = vec![0; n];
    for q in ples {
        for &x in &q.seq {
            count[x] += 1;
        }
    }
    count
}

/// For each `x`, the set of `y` with `x >_i y` in some member.
pub(crate) fn reversal_sets(n: usize, ples: &[PartialLinearExtension]) -> Vec<FixedBitSet> {
    let mut above = vec![FixedBitSet::with_capacity(n); n];
    for q in ples {
        for (i, &hi) in q.seq.iter().enumerate().skip(1) {
            for &lo in &q.seq[..i] {
                above[hi].insert(lo);
            }
        }
    }
    above
}

/// `true` iff `x <= y ⟺ no member has x >_i y`, for every ordered pair.
///
/// Fails with `NotAnExtension` when some member contradicts the order.
pub fn verify_local_realizer(p: &Poset, lr: &LocalRealizer) -> Result<bool> {
    let n = p.n();
    for (i, q) in lr.ples.iter().enumerate() {
        if let Some(&x) = q.seq.iter().find(|&&x| x >= n) {
            return Err(Error::MalformedOrder(format!("id {x} out of range 0..{n}")));
        }
        if let Some((x, y)) = q.violation(p) {
            return Err(Error::NotAnExtension { ple: i, x, y });
        }
    }
    let above = reversal_sets(n, &lr.ples);
    Ok((0..n).all(|x| (0..n).all(|y| p.le(x, y) != above[x].contains(y))))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formula::{Cnf, Literal};

    fn lo(seq: &[usize]) -> LinearOrder {
        LinearOrder::new(seq.to_vec()).unwrap()
    }

    fn ple(seq: &[usize]) -> PartialLinearExtension {
        PartialLinearExtension::new(seq.to_vec()).unwrap()
    }

    // S_2 with a1=0 a2=1 b1=2 b2=3
    fn s2() -> Poset {
        Poset::from_covers(4, &[(0, 3), (1, 2)]).unwrap()
    }

    #[test]
    fn linear_order_validation() {
        assert!(LinearOrder::new(vec![0, 0]).is_err());
        assert!(LinearOrder::new(vec![0, 2]).is_err());
        assert!(PartialLinearExtension::new(vec![3, 1, 3]).is_err());
    }

    #[test]
    fn realizer_examples() {
        let chain = Poset::chain(3);
        assert!(verify_realizer(&chain, &Realizer::new(vec![lo(&[0, 1, 2])]).unwrap()).unwrap());
        // a2 b1 a1 b2 / a1 b2 a2 b1
        let r = Realizer::new(vec![lo(&[1, 2, 0, 3]), lo(&[0, 3, 1, 2])]).unwrap();
        assert!(verify_realizer(&s2(), &r).unwrap());
        let one = Realizer::new(vec![lo(&[0, 1, 2, 3])]).unwrap();
        assert!(!verify_realizer(&s2(), &one).unwrap());
        let short = Realizer::new(vec![lo(&[0, 1])]).unwrap();
        assert!(matches!(verify_realizer(&s2(), &short), Err(Error::MalformedOrder(_))));
    }

    #[test]
    fn empty_realizer_only_for_tiny_posets() {
        let r = Realizer::new(vec![]).unwrap();
        assert!(verify_realizer(&Poset::chain(1), &r).unwrap());
        assert!(!verify_realizer(&Poset::chain(2), &r).unwrap());
    }

    #[test]
    fn boolean_arity_mismatch() {
        let t = TruthTable::conjunction(2).unwrap();
        assert!(matches!(
            BooleanRealizer::new(vec![lo(&[0, 1])], t.into()),
            Err(Error::ArityMismatch { formula: 2, orders: 1 })
        ));
    }

    #[test]
    fn boolean_with_cnf() {
        let chain = Poset::chain(3);
        let cnf = Cnf::new(1, vec![vec![Literal::neg(0)]]).unwrap();
        let br = BooleanRealizer::new(vec![lo(&[2, 1, 0])], cnf.into()).unwrap();
        // x <= y iff not (x <= y in the reversed order), which fails on x = y
        assert!(!verify_boolean_realizer(&chain, &br).unwrap());
        assert!(eval_boolean_relation(&br, 0, 1));
    }

    #[test]
    fn normalize_chain() {
        let chain = Poset::chain(3);
        let br = Realizer::new(vec![lo(&[0, 1, 2])]).unwrap().to_boolean().unwrap();
        let t = normalize_truth_table(&chain, &br).unwrap();
        assert_eq!(t.to_bit_string(), "01");
        let bad =
            BooleanRealizer::new(vec![lo(&[0, 1, 2])], TruthTable::new(1, &[true, true]).unwrap().into()).unwrap();
        assert_eq!(normalize_truth_table(&chain, &bad), Err(Error::NotARealizer));
    }

    #[test]
    fn local_examples() {
        let chain = Poset::chain(3);
        let lr = LocalRealizer::new(vec![ple(&[0, 1, 2])]);
        assert!(verify_local_realizer(&chain, &lr).unwrap());
        assert_eq!(local_width(&lr), 1);
        let anti = Poset::antichain(2);
        assert!(!verify_local_realizer(&anti, &LocalRealizer::new(vec![ple(&[0, 1])])).unwrap());
        assert!(verify_local_realizer(&anti, &LocalRealizer::new(vec![ple(&[0, 1]), ple(&[1, 0])])).unwrap());
        assert_eq!(local_width(&LocalRealizer::default()), 0);
    }

    #[test]
    fn local_rejects_non_extension() {
        let chain = Poset::chain(3);
        let lr = LocalRealizer::new(vec![ple(&[0, 1, 2]), ple(&[2, 0])]);
        assert_eq!(verify_local_realizer(&chain, &lr), Err(Error::NotAnExtension { ple: 1, x: 0, y: 2 }));
    }

    #[test]
    fn comparable_pairs_must_co_occur() {
        // 0 < 1 but no member contains both
        let p = Poset::chain(2);
        let lr = LocalRealizer::new(vec![ple(&[0]), ple(&[1])]);
        assert!(!verify_local_realizer(&p, &lr).unwrap());
    }
}
