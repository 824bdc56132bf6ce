//! Boolean realizers with at most three orders become realizers.
//!
//! The realized part of `φ` is brought into one of a few shapes by permuting
//! coordinates and reversing orders (reversal complements a coordinate on
//! distinct pairs). Each shape yields a realizer directly or through a
//! transitive orientation of the incomparability graph.

use fixedbitset::FixedBitSet;
use itertools::Itertools;

use crate::error::{Error, Result};
use crate::formula::TruthTable;
use crate::poset::{Digraph, Poset};
use crate::realizer::{forced_table, verify_boolean_realizer, verify_realizer, BooleanRealizer, LinearOrder, Realizer};

/// Coordinate `i` of the transformed certificate is order `perm[i]`,
/// reversed when `flips[i]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignedPermutation {
    pub perm: Vec<usize>,
    pub flips: Vec<bool>,
}

impl SignedPermutation {
    pub fn identity(d: usize) -> Self {
        SignedPermutation { perm: (0..d).collect(), flips: vec![false; d] }
    }

    /// All `2^d · d!` of them: permutations in lexicographic order, then flip
    /// masks in increasing order. The identity comes first.
    pub fn all(d: usize) -> Vec<Self> {
        let mut out = Vec::new();
        for perm in (0..d).permutations(d) {
            for mask in 0..1usize << d {
                let flips = (0..d).map(|i| mask >> i & 1 == 1).collect();
                out.push(SignedPermutation { perm: perm.clone(), flips });
            }
        }
        out
    }

    pub fn apply(&self, orders: &[LinearOrder]) -> Vec<LinearOrder> {
        self.perm
            .iter()
            .zip(&self.flips)
            .map(|(&i, &f)| if f { orders[i].reversed() } else { orders[i].clone() })
            .collect()
    }
}

/// Which shape the certificate took, and the symmetry that exposed it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CertificateCase {
    /// No orders at all; only possible for at most one element.
    Empty,
    /// One order, which is already a realizer.
    SingleOrder,
    /// No incomparable pairs.
    Chain,
    /// The realized ones are exactly the tuples starting with `m` ones; the
    /// first `m` transformed orders form a realizer.
    Conjunction { sigma: SignedPermutation, m: usize },
    /// Exactly one complementary pair `{α, ᾱ}` is zero in the realized table;
    /// `x ≺ y` iff the tuple of `(x, y)` is `alpha`.
    SingleHole { sigma: SignedPermutation, alpha: Vec<bool> },
    /// Three orders whose realized ones are `{001, 111}`;
    /// `x ≺ y` iff `x <_1 y` and `x >_2 y`.
    CrossedPair { sigma: SignedPermutation },
}

fn realized_table(p: &Poset, orders: &[LinearOrder]) -> Option<TruthTable> {
    forced_table(p, &orders.iter().collect::<Vec<_>>())
}

fn is_conjunction(t: &TruthTable, m: usize) -> bool {
    let d = t.arity();
    let top = (1usize << m) - 1;
    (0..t.len()).all(|idx| t.get(idx) == (idx >> (d - m) == top))
}

fn single_hole(t: &TruthTable) -> Option<Vec<bool>> {
    let full = t.len() - 1;
    let mut holes = (0..t.len()).filter(|&a| a < full - a && !t.get(a) && !t.get(full - a));
    let hole = holes.next()?;
    holes.next().is_none().then(|| crate::formula::tuple_bits(t.arity(), hole))
}

fn is_crossed_pair(t: &TruthTable) -> bool {
    t.arity() == 3 && t.ones().collect::<Vec<_>>() == [0b001, 0b111]
}

/// Finds the shape of a verifying boolean realizer with at most 3 orders.
pub fn classify_boolean_certificate(p: &Poset, br: &BooleanRealizer) -> Result<CertificateCase> {
    let d = br.size();
    if d > 3 {
        return Err(Error::ArityTooLarge { arity: d, max: 3 });
    }
    if !verify_boolean_realizer(p, br)? {
        return Err(Error::NotARealizer);
    }
    if d == 0 {
        return Ok(CertificateCase::Empty);
    }
    if d == 1 {
        return Ok(CertificateCase::SingleOrder);
    }
    let n = p.n();
    if (0..n).all(|x| (x + 1..n).all(|y| p.comparable(x, y))) {
        return Ok(CertificateCase::Chain);
    }
    let sigmas = SignedPermutation::all(d);
    let tables: Vec<Option<TruthTable>> = sigmas.iter().map(|s| realized_table(p, &s.apply(br.orders()))).collect();
    let candidates = || sigmas.iter().zip(&tables).filter_map(|(s, t)| t.as_ref().map(|t| (s, t)));
    for m in 1..=d {
        if let Some((s, _)) = candidates().find(|(_, t)| is_conjunction(t, m)) {
            return Ok(CertificateCase::Conjunction { sigma: s.clone(), m });
        }
    }
    if let Some((s, alpha)) = candidates().find_map(|(s, t)| single_hole(t).map(|a| (s, a))) {
        return Ok(CertificateCase::SingleHole { sigma: s.clone(), alpha });
    }
    if let Some((s, _)) = candidates().find(|(_, t)| is_crossed_pair(t)) {
        return Ok(CertificateCase::CrossedPair { sigma: s.clone() });
    }
    Err(Error::NoCaseMatched)
}

fn orientation(n: usize, prec: impl Fn(usize, usize) -> bool) -> Vec<(usize, usize)> {
    (0..n).flat_map(|x| (0..n).map(move |y| (x, y))).filter(|&(x, y)| x != y && prec(x, y)).collect()
}

/// A realizer of size at most `br.size()` from a verifying boolean realizer
/// with at most 3 orders.
pub fn boolean_to_realizer(p: &Poset, br: &BooleanRealizer) -> Result<Realizer> {
    let n = p.n();
    let realizer = match classify_boolean_certificate(p, br)? {
        CertificateCase::Empty => Realizer::new(Vec::new())?,
        CertificateCase::SingleOrder => Realizer::new(br.orders().to_vec())?,
        CertificateCase::Chain => Realizer::new(vec![LinearOrder::new(p.linear_extension())?])?,
        CertificateCase::Conjunction { sigma, m } => {
            let mut orders = sigma.apply(br.orders());
            orders.truncate(m);
            Realizer::new(orders)?
        }
        CertificateCase::SingleHole { sigma, alpha } => {
            let orders = sigma.apply(br.orders());
            let orient = orientation(n, |x, y| orders.iter().zip(&alpha).all(|(o, &a)| o.lt(x, y) == a));
            orientation_to_two_realizer(p, &orient)?
        }
        CertificateCase::CrossedPair { sigma } => {
            let o = sigma.apply(br.orders());
            let orient = orientation(n, |x, y| o[0].lt(x, y) && o[1].lt(y, x));
            orientation_to_two_realizer(p, &orient)?
        }
    };
    if !verify_realizer(p, &realizer)? {
        return Err(Error::NotARealizer);
    }
    Ok(realizer)
}

/// Two linear extensions, of `< ∪ ≺` and of `< ∪ ≻`, given a transitive
/// orientation `≺` (as its list of pairs) of the incomparability graph.
pub fn orientation_to_two_realizer(p: &Poset, orient: &[(usize, usize)]) -> Result<Realizer> {
    let n = p.n();
    let bad = |msg: String| Err(Error::NotTransitiveOrientation(msg));
    let mut succ = vec![FixedBitSet::with_capacity(n); n];
    for &(x, y) in orient {
        if x >= n || y >= n {
            return Err(Error::VertexOutOfRange { vertex: x.max(y), count: n });
        }
        if !p.incomparable(x, y) || x == y {
            return bad(format!("{x} and {y} are comparable"));
        }
        if succ[y].contains(x) {
            return bad(format!("{x} and {y} are oriented both ways"));
        }
        succ[x].insert(y);
    }
    for x in 0..n {
        for y in x + 1..n {
            if p.incomparable(x, y) && !succ[x].contains(y) && !succ[y].contains(x) {
                return bad(format!("incomparable pair {x}, {y} is not oriented"));
            }
        }
    }
    for x in 0..n {
        for y in succ[x].ones() {
            if !succ[y].is_subset(&succ[x]) {
                let z = succ[y].difference(&succ[x]).next().unwrap();
                return bad(format!("{x} ≺ {y} ≺ {z} but not {x} ≺ {z}"));
            }
        }
    }
    let extension = |forward: bool| -> Result<LinearOrder> {
        let arcs = p.strict_pairs().chain(orient.iter().map(|&(x, y)| if forward { (x, y) } else { (y, x) }));
        let order = Digraph::new(n, arcs)?
            .topological_order()
            .map_err(|v| Error::NotTransitiveOrientation(format!("cycle through {v}")))?;
        LinearOrder::new(order)
    };
    let r = Realizer::new(vec![extension(true)?, extension(false)?])?;
    if !verify_realizer(p, &r)? {
        return bad("the two extensions do not realize the poset".into());
    }
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formula::TruthTable;
    use crate::generators::standard_example;
    use crate::realizer::forced_table;

    fn lo(seq: &[usize]) -> LinearOrder {
        LinearOrder::new(seq.to_vec()).unwrap()
    }

    fn table(d: usize, ones: &[usize]) -> TruthTable {
        TruthTable::from_fn(d, |v| ones.contains(&crate::formula::tuple_index(v))).unwrap()
    }

    #[test]
    fn standard_example_two_is_a_conjunction() {
        let s2 = standard_example(2).unwrap();
        let br = s2.realizer.to_boolean().unwrap();
        let case = classify_boolean_certificate(&s2.poset, &br).unwrap();
        assert!(matches!(case, CertificateCase::Conjunction { m: 2, .. }));
        let r = boolean_to_realizer(&s2.poset, &br).unwrap();
        assert_eq!(r, s2.realizer);
    }

    #[test]
    fn chain_with_identity_formula() {
        let p = Poset::chain(4);
        let br = BooleanRealizer::new(vec![LinearOrder::identity(4)], table(1, &[1]).into()).unwrap();
        assert_eq!(boolean_to_realizer(&p, &br).unwrap().size(), 1);
    }

    #[test]
    fn crossed_pair_certificate() {
        // 0 < 1, element 2 incomparable to both; ones exactly {001, 111}
        let p = Poset::from_covers(3, &[(0, 1)]).unwrap();
        let orders = vec![lo(&[2, 1, 0]), lo(&[1, 0, 2]), lo(&[0, 1, 2])];
        let br = BooleanRealizer::new(orders, table(3, &[0b001, 0b111]).into()).unwrap();
        assert!(verify_boolean_realizer(&p, &br).unwrap());
        assert!(is_crossed_pair(&realized_table(&p, br.orders()).unwrap()));
        // reversing all three orders exposes a conjunction of the first two
        let case = classify_boolean_certificate(&p, &br).unwrap();
        assert_eq!(
            case,
            CertificateCase::Conjunction {
                sigma: SignedPermutation { perm: vec![0, 1, 2], flips: vec![true; 3] },
                m: 2
            }
        );
        let r = boolean_to_realizer(&p, &br).unwrap();
        assert_eq!(r.size(), 2);
    }

    #[test]
    fn every_three_order_certificate_converts() {
        // all triples of orders on small posets, with the forced table
        let posets = [
            Poset::from_covers(3, &[(0, 1)]).unwrap(),
            Poset::antichain(3),
            Poset::from_covers(4, &[(0, 1), (2, 3)]).unwrap(),
            Poset::from_covers(4, &[(0, 2), (1, 2)]).unwrap(),
        ];
        let mut seen = [0usize; 3];
        for p in &posets {
            let n = p.n();
            let perms: Vec<LinearOrder> = (0..n).permutations(n).map(|s| lo(&s)).collect();
            for (a, b, c) in itertools::iproduct!(&perms, &perms, &perms) {
                let orders = vec![a.clone(), b.clone(), c.clone()];
                let Some(t) = forced_table(p, &orders.iter().collect::<Vec<_>>()) else { continue };
                let br = BooleanRealizer::new(orders, t.into()).unwrap();
                let r = boolean_to_realizer(p, &br).unwrap();
                assert!(r.size() <= 3 && verify_realizer(p, &r).unwrap());
                match classify_boolean_certificate(p, &br).unwrap() {
                    CertificateCase::Conjunction { .. } => seen[0] += 1,
                    CertificateCase::SingleHole { .. } => seen[1] += 1,
                    CertificateCase::CrossedPair { .. } => seen[2] += 1,
                    _ => {}
                }
            }
        }
        assert!(seen.iter().all(|&c| c > 0), "{seen:?}");
    }

    #[test]
    fn rejects_bad_inputs() {
        let p = Poset::antichain(2);
        let br = BooleanRealizer::new(vec![LinearOrder::identity(2)], table(1, &[1]).into()).unwrap();
        assert!(matches!(boolean_to_realizer(&p, &br), Err(Error::NotARealizer)));
        let s4 = standard_example(4).unwrap();
        assert!(matches!(
            boolean_to_realizer(&s4.poset, s4.boolean.as_ref().unwrap()),
            Err(Error::ArityTooLarge { arity: 4, max: 3 })
        ));
    }

    #[test]
    fn orientation_examples() {
        let anti = Poset::antichain(2);
        let r = orientation_to_two_realizer(&anti, &[(0, 1)]).unwrap();
        assert_eq!(r.orders()[0].seq(), &[0, 1]);
        assert_eq!(r.orders()[1].seq(), &[1, 0]);
        let chain = Poset::chain(3);
        let r = orientation_to_two_realizer(&chain, &[]).unwrap();
        assert_eq!(r.orders()[0], r.orders()[1]);
        // S_2 with a1 = 0, a2 = 1, b1 = 2, b2 = 3
        let s2 = standard_example(2).unwrap().poset;
        let r = orientation_to_two_realizer(&s2, &[(0, 1), (0, 2), (3, 1), (3, 2)]).unwrap();
        assert!(verify_realizer(&s2, &r).unwrap());
    }

    #[test]
    fn orientation_errors() {
        let anti = Poset::antichain(3);
        let cyclic = [(0, 1), (1, 2), (2, 0)];
        assert!(matches!(orientation_to_two_realizer(&anti, &cyclic), Err(Error::NotTransitiveOrientation(_))));
        assert!(matches!(
            orientation_to_two_realizer(&anti, &[(0, 1), (1, 2)]),
            Err(Error::NotTransitiveOrientation(_))
        ));
        let chain = Poset::chain(2);
        assert!(matches!(orientation_to_two_realizer(&chain, &[(0, 1)]), Err(Error::NotTransitiveOrientation(_))));
    }

    #[test]
    fn signed_permutations() {
        let all = SignedPermutation::all(3);
        assert_eq!(all.len(), 48);
        assert_eq!(all[0], SignedPermutation::identity(3));
    }
}
