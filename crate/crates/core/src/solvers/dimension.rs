//! Dimension by critical-pair reversal.
//!
//! `dim(P) <= d` iff the critical pairs split into `d` buckets such that `≤`
//! plus the reversals in each bucket stays acyclic. Each bucket then extends to
//! a linear extension reversing its pairs, and those extensions form a realizer.

use fixedbitset::FixedBitSet;

use super::{Budget, Decision};
use crate::error::{Error, Result};
use crate::poset::{critical_pairs, Poset};
use crate::realizer::{LinearOrder, LocalRealizer, Realizer};

/// The closure of `≤` plus the reversals assigned so far.
/// `reach[a]` holds every `b` with `a ≤ b` in that relation.
#[derive(Clone)]
struct Bucket {
    reach: Vec<FixedBitSet>,
}

impl Bucket {
    fn new(p: &Poset) -> Self {
        Bucket { reach: (0..p.n()).map(|x| p.up_set(x).clone()).collect() }
    }

    /// Reversing `(x, y)` adds `y ≤ x`; that closes a cycle iff `x ≤ y` already.
    #[inline]
    fn accepts(&self, (x, y): (usize, usize)) -> bool {
        !self.reach[x].contains(y)
    }

    fn reverse(&mut self, (x, y): (usize, usize)) {
        let above_x = self.reach[x].clone();
        for row in &mut self.reach {
            if row.contains(y) {
                row.union_with(&above_x);
            }
        }
    }

    fn linear_extension(&self) -> LinearOrder {
        let n = self.reach.len();
        let mut below = vec![0usize; n];
        for row in &self.reach {
            for b in row.ones() {
                below[b] += 1;
            }
        }
        // a strictly below b means a strictly smaller down-set
        let mut seq: Vec<usize> = (0..n).collect();
        seq.sort_by_key(|&x| (below[x], x));
        LinearOrder::new(seq).unwrap()
    }
}

struct Search<'a> {
    pairs: Vec<(usize, usize)>,
    d: usize,
    empty: Bucket,
    budget: &'a Budget,
    nodes: u64,
}

impl Search<'_> {
    fn run(&mut self, buckets: &mut Vec<Bucket>, assigned: &mut [bool]) -> Result<bool> {
        self.nodes += 1;
        if self.nodes % 256 == 1 {
            self.budget.check()?;
        }
        // most constrained pair first: fewest feasible buckets, ties by pair id
        let mut pick: Option<(usize, usize)> = None;
        for (i, &pair) in self.pairs.iter().enumerate() {
            if assigned[i] {
                continue;
            }
            let open = buckets.iter().filter(|b| b.accepts(pair)).count();
            let options = open + usize::from(buckets.len() < self.d);
            if options == 0 {
                return Ok(false);
            }
            if pick.is_none_or(|(_, best)| options < best) {
                pick = Some((i, options));
            }
        }
        let Some((i, _)) = pick else {
            return Ok(true);
        };
        let pair = self.pairs[i];
        assigned[i] = true;
        for b in 0..buckets.len() {
            if !buckets[b].accepts(pair) {
                continue;
            }
            let saved = buckets[b].clone();
            buckets[b].reverse(pair);
            if self.run(buckets, assigned)? {
                return Ok(true);
            }
            buckets[b] = saved;
        }
        // empty buckets are interchangeable: try only one
        if buckets.len() < self.d {
            let mut fresh = self.empty.clone();
            fresh.reverse(pair);
            buckets.push(fresh);
            if self.run(buckets, assigned)? {
                return Ok(true);
            }
            buckets.pop();
        }
        assigned[i] = false;
        Ok(false)
    }
}

/// Decides `dim(p) <= d`, with a realizer of size at most `d` when it holds.
pub fn decide_dimension(p: &Poset, d: usize, budget: &Budget) -> Result<Decision<Realizer>> {
    let n = p.n();
    if d == 0 {
        // the empty intersection is the full relation
        return Ok(if n <= 1 { Decision::Yes(Realizer::new(vec![])?) } else { Decision::No });
    }
    let pairs = critical_pairs(p);
    if pairs.is_empty() {
        return Ok(Decision::Yes(Realizer::new(vec![LinearOrder::new(p.linear_extension())?])?));
    }
    let mut search = Search { pairs, d, empty: Bucket::new(p), budget, nodes: 0 };
    let mut buckets = Vec::with_capacity(d);
    let mut assigned = vec![false; search.pairs.len()];
    if search.run(&mut buckets, &mut assigned)? {
        Ok(Decision::Yes(Realizer::new(buckets.iter().map(Bucket::linear_extension).collect())?))
    } else {
        Ok(Decision::No)
    }
}

/// Smallest `d <= max_d` with `dim(p) <= d`, and a realizer of that size.
pub fn dimension(p: &Poset, max_d: usize, budget: &Budget) -> Result<Option<(usize, Realizer)>> {
    for d in 0..=max_d {
        if let Decision::Yes(r) = decide_dimension(p, d, budget)? {
            return Ok(Some((d, r)));
        }
    }
    Ok(None)
}

/// Local dimension at most `d` for `d ∈ {1, 2}`, where it coincides with
/// dimension; the witness is a realizer read as a local realizer.
pub fn decide_local_dimension_low(p: &Poset, d: usize, budget: &Budget) -> Result<Decision<LocalRealizer>> {
    if !(1..=2).contains(&d) {
        return Err(Error::BadParameter(format!("exact local dimension is only available for d in {{1, 2}}, got {d}")));
    }
    Ok(decide_dimension(p, d, budget)?.map(|r| r.to_local()))
}
