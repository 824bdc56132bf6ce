//! Seeded random instances and exhaustive small families, for tests,
//! benches and the `generate random` command.

use itertools::Itertools;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::formula::TruthTable;
use crate::poset::{Digraph, Poset};
use crate::realizer::{reversal_sets, BooleanRealizer, LinearOrder, LocalRealizer, PartialLinearExtension, Realizer};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// One representative per isomorphism class of posets on `n` elements.
/// Exhaustive over naturally labelled relations; meant for `n <= 5`.
pub fn all_posets(n: usize) -> Vec<Poset> {
    let pairs: Vec<(usize, usize)> = (0..n).tuple_combinations().collect();
    let perms: Vec<Vec<usize>> = (0..n).permutations(n).collect();
    let mut seen = std::collections::BTreeSet::new();
    let mut out = Vec::new();
    for mask in 0u64..1 << pairs.len() {
        let lt = |x: usize, y: usize| x < y && mask >> pairs.iter().position(|&q| q == (x, y)).unwrap() & 1 == 1;
        let Ok(p) = Poset::from_relation(n, |x, y| x == y || lt(x, y)) else { continue };
        // canonical form: least strict-relation bit string over relabellings
        let canon = perms
            .iter()
            .map(|pi| p.strict_pairs().fold(0u64, |acc, (x, y)| acc | 1 << (pi[x] * n + pi[y])))
            .min()
            .unwrap_or(0);
        if seen.insert(canon) {
            out.push(p);
        }
    }
    out
}

/// Closure of a random DAG on `0..n` keeping each forward pair with probability `density`.
pub fn random_poset<R: Rng + ?Sized>(n: usize, density: f64, rng: &mut R) -> Poset {
    let arcs: Vec<(usize, usize)> = (0..n).tuple_combinations().filter(|_| rng.random_bool(density)).collect();
    Poset::from_covers(n, &arcs).expect("forward arcs are acyclic")
}

pub fn random_permutation<R: Rng + ?Sized>(n: usize, rng: &mut R) -> LinearOrder {
    let mut seq: Vec<usize> = (0..n).collect();
    seq.shuffle(rng);
    LinearOrder::new(seq).expect("a permutation")
}

/// Intersection of two random linear orders, with those orders as realizer.
pub fn random_two_dimensional<R: Rng + ?Sized>(n: usize, rng: &mut R) -> (Poset, Realizer) {
    let (a, b) = (random_permutation(n, rng), random_permutation(n, rng));
    let p = Poset::from_relation(n, |x, y| a.le(x, y) && b.le(x, y)).expect("intersections of orders are posets");
    (p, Realizer::new(vec![a, b]).expect("same length"))
}

/// Random acyclic digraph: forward arcs of a random vertex order, each kept with probability `density`.
pub fn random_acyclic_digraph<R: Rng + ?Sized>(nv: usize, density: f64, rng: &mut R) -> Digraph {
    let order = random_permutation(nv, rng);
    let arcs: Vec<(usize, usize)> = (0..nv)
        .tuple_combinations()
        .filter(|_| rng.random_bool(density))
        .map(|(i, j)| (order.seq()[i], order.seq()[j]))
        .collect();
    Digraph::new(nv, arcs).expect("no self-loops")
}

fn local_relation(n: usize, ples: &[PartialLinearExtension]) -> Option<Poset> {
    let above = reversal_sets(n, ples);
    Poset::from_relation(n, |x, y| !above[x].contains(y)).ok()
}

/// A random poset together with a local realizer of width at most 3.
///
/// One full order plus random partial orders of random subsets; the poset is
/// whatever those define. Members are dropped from the end while the defined
/// relation is not transitive.
pub fn random_local3<R: Rng + ?Sized>(n: usize, rng: &mut R) -> (Poset, LocalRealizer) {
    let mut ples = vec![PartialLinearExtension::from(&random_permutation(n, rng))];
    let mut count = vec![1usize; n];
    for _ in 0..rng.random_range(1..=6) {
        let mut free: Vec<usize> = (0..n).filter(|&x| count[x] < 3).collect();
        if free.len() < 2 {
            break;
        }
        free.shuffle(rng);
        free.truncate(rng.random_range(2..=free.len()));
        for &x in &free {
            count[x] += 1;
        }
        ples.push(PartialLinearExtension::new(free).expect("distinct"));
    }
    loop {
        if let Some(p) = local_relation(n, &ples) {
            return (p, LocalRealizer::new(ples));
        }
        ples.pop();
    }
}

/// A random poset with a 3-order boolean realizer, or `None` after `tries`
/// failed draws. The table holds at most one of each complementary pair.
pub fn random_boolean3<R: Rng + ?Sized>(n: usize, tries: usize, rng: &mut R) -> Option<(Poset, BooleanRealizer)> {
    for _ in 0..tries {
        let orders: Vec<LinearOrder> = (0..3).map(|_| random_permutation(n, rng)).collect();
        let mut ones = vec![false; 8];
        ones[7] = true;
        for a in 1..4 {
            match rng.random_range(0..3) {
                0 => ones[a] = true,
                1 => ones[7 - a] = true,
                _ => {}
            }
        }
        let phi = TruthTable::new(3, &ones).expect("arity 3");
        let br = BooleanRealizer::new(orders, phi.into()).expect("arity 3");
        if let Ok(p) = Poset::from_relation(n, |x, y| crate::realizer::eval_boolean_relation(&br, x, y)) {
            if (0..n).any(|x| (0..n).any(|y| p.incomparable(x, y))) {
                return Some((p, br));
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::realizer::{local_width, verify_boolean_realizer, verify_local_realizer, verify_realizer};

    #[test]
    fn poset_counts() {
        // unlabelled posets on 0..=5 elements
        let counts: Vec<usize> = (0..=5).map(|n| all_posets(n).len()).collect();
        assert_eq!(counts, [1, 1, 2, 5, 16, 63]);
    }

    #[test]
    fn random_fixtures_are_valid() {
        let mut r = rng(7);
        for n in 1..=12 {
            let (p, lr) = random_local3(n, &mut r);
            assert!(local_width(&lr) <= 3);
            assert!(verify_local_realizer(&p, &lr).unwrap());
            let (p, real) = random_two_dimensional(n, &mut r);
            assert!(verify_realizer(&p, &real).unwrap());
            let g = random_acyclic_digraph(n, 0.4, &mut r);
            assert!(g.is_acyclic());
        }
        for n in 3..=6 {
            let (p, br) = random_boolean3(n, 10_000, &mut r).unwrap();
            assert!(verify_boolean_realizer(&p, &br).unwrap());
        }
    }

    #[test]
    fn seeds_reproduce() {
        let a = random_local3(9, &mut rng(3));
        let b = random_local3(9, &mut rng(3));
        assert_eq!(a.0, b.0);
        assert_eq!(a.1, b.1);
    }
}
