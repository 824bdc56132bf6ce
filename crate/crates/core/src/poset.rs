//! Finite posets and digraphs over dense integer ids.

use std::cmp::Reverse;
use std::collections::{BTreeMap, BinaryHeap};

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};

/// A finite digraph on vertices `0..nv` without self-loops.
///
/// Arcs are kept sorted and deduplicated, so the arc list doubles as a
/// stable numbering of the arcs (used by [`Digraph::arc_digraph`]).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Digraph {
    nv: usize,
    arcs: Vec<(usize, usize)>,
    out: Vec<Vec<usize>>,
}

impl Digraph {
    pub fn new(nv: usize, arcs: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut arcs: Vec<(usize, usize)> = arcs.into_iter().collect();
        for &(u, v) in &arcs {
            for w in [u, v] {
                if w >= nv {
                    return Err(Error::VertexOutOfRange { vertex: w, count: nv });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
        }
        arcs.sort_unstable();
        arcs.dedup();
        let mut out = vec![Vec::new(); nv];
        for &(u, v) in &arcs {
            out[u].push(v);
        }
        Ok(Digraph { nv, arcs, out })
    }

    /// Undirected graph stored as arcs `(min, max)`.
    pub fn undirected(nv: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        Self::new(nv, edges.into_iter().map(|(u, v)| (u.min(v), u.max(v))))
    }

    pub fn empty(nv: usize) -> Self {
        Digraph { nv, arcs: Vec::new(), out: vec![Vec::new(); nv] }
    }

    pub fn nv(&self) -> usize {
        self.nv
    }

    pub fn arcs(&self) -> &[(usize, usize)] {
        &self.arcs
    }

    pub fn arc_count(&self) -> usize {
        self.arcs.len()
    }

    pub fn out_neighbors(&self, v: usize) -> &[usize] {
        &self.out[v]
    }

    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        self.arcs.binary_search(&(u, v)).is_ok()
    }

    /// Index of arc `(u, v)` in [`Digraph::arcs`].
    pub fn arc_index(&self, u: usize, v: usize) -> Option<usize> {
        self.arcs.binary_search(&(u, v)).ok()
    }

    /// Smallest-id-first topological order, or `Err(v)` with some vertex on a cycle.
    pub fn topological_order(&self) -> std::result::Result<Vec<usize>, usize> {
        let mut indeg = vec![0usize; self.nv];
        for &(_, v) in &self.arcs {
            indeg[v] += 1;
        }
        let mut ready: BinaryHeap<Reverse<usize>> = (0..self.nv).filter(|&v| indeg[v] == 0).map(Reverse).collect();
        let mut order = Vec::with_capacity(self.nv);
        while let Some(Reverse(v)) = ready.pop() {
            order.push(v);
            for &w in &self.out[v] {
                indeg[w] -= 1;
                if indeg[w] == 0 {
                    ready.push(Reverse(w));
                }
            }
        }
        if order.len() == self.nv {
            Ok(order)
        } else {
            Err((0..self.nv).find(|&v| indeg[v] > 0).unwrap_or(0))
        }
    }

    pub fn is_acyclic(&self) -> bool {
        self.topological_order().is_ok()
    }

    /// Symmetric adjacency of the underlying undirected graph.
    pub fn undirected_adjacency(&self) -> Vec<FixedBitSet> {
        let mut adj = vec![FixedBitSet::with_capacity(self.nv); self.nv];
        for &(u, v) in &self.arcs {
            adj[u].insert(v);
            adj[v].insert(u);
        }
        adj
    }

    /// Connected components of the underlying undirected graph, each sorted,
    /// listed by smallest member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let adj = self.undirected_adjacency();
        let mut seen = FixedBitSet::with_capacity(self.nv);
        let mut comps = Vec::new();
        for s in 0..self.nv {
            if seen.contains(s) {
                continue;
            }
            seen.insert(s);
            let mut comp = vec![s];
            let mut stack = vec![s];
            while let Some(v) = stack.pop() {
                for w in adj[v].ones() {
                    if !seen.contains(w) {
                        seen.insert(w);
                        comp.push(w);
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }

    /// The arc digraph: one vertex per arc of `self` (numbered as in
    /// [`Digraph::arcs`]) and an arc `uv -> vw` for every directed path `u v w`.
    pub fn arc_digraph(&self) -> Digraph {
        let mut into: Vec<Vec<usize>> = vec![Vec::new(); self.nv];
        for (i, &(_, v)) in self.arcs.iter().enumerate() {
            into[v].push(i);
        }
        let mut arcs = Vec::new();
        for (j, &(v, _)) in self.arcs.iter().enumerate() {
            for &i in &into[v] {
                arcs.push((i, j));
            }
        }
        Digraph::new(self.arcs.len(), arcs).expect("arc digraph of a loopless digraph is loopless")
    }
}

/// A finite poset on `0..n`.
///
/// Stores the full order as two bit matrices: `up[x] = {y : x <= y}` and
/// `down[x] = {y : y <= x}`. Construction always validates the partial-order
/// axioms, so every value of this type is a genuine poset.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poset {
    n: usize,
    up: Vec<FixedBitSet>,
    down: Vec<FixedBitSet>,
    labels: BTreeMap<usize, String>,
}

impl Poset {
    /// Builds a poset from a relation oracle `le(x, y)` and checks reflexivity,
    /// antisymmetry and transitivity.
    pub fn from_relation(n: usize, le: impl Fn(usize, usize) -> bool) -> Result<Self> {
        let mut up = vec![FixedBitSet::with_capacity(n); n];
        let mut down = vec![FixedBitSet::with_capacity(n); n];
        for (x, y) in (0..n).flat_map(|x| (0..n).map(move |y| (x, y))).filter(|&(x, y)| le(x, y)) {
            up[x].insert(y);
            down[y].insert(x);
        }
        let p = Poset { n, up, down, labels: BTreeMap::new() };
        p.check_axioms()?;
        Ok(p)
    }

    pub fn from_covers(n: usize, covers: &[(usize, usize)]) -> Result<Self> {
        transitive_closure(&Digraph::new(n, covers.iter().copied())?)
    }

    fn check_axioms(&self) -> Result<()> {
        for x in 0..self.n {
            if !self.up[x].contains(x) {
                return Err(Error::NotAPartialOrder(format!("not reflexive at {x}")));
            }
            for y in self.up[x].ones() {
                if y != x && self.up[y].contains(x) {
                    return Err(Error::NotAPartialOrder(format!("{x} and {y} violate antisymmetry")));
                }
                if !self.up[y].is_subset(&self.up[x]) {
                    let z = self.up[y].difference(&self.up[x]).next().unwrap();
                    return Err(Error::NotAPartialOrder(format!("{x} <= {y} <= {z} but not {x} <= {z}")));
                }
            }
        }
        Ok(())
    }

    pub fn chain(n: usize) -> Self {
        Self::from_relation(n, |x, y| x <= y).unwrap()
    }

    pub fn antichain(n: usize) -> Self {
        Self::from_relation(n, |x, y| x == y).unwrap()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn le(&self, x: usize, y: usize) -> bool {
        self.up[x].contains(y)
    }

    #[inline]
    pub fn lt(&self, x: usize, y: usize) -> bool {
        x != y && self.le(x, y)
    }

    #[inline]
    pub fn comparable(&self, x: usize, y: usize) -> bool {
        self.le(x, y) || self.le(y, x)
    }

    #[inline]
    pub fn incomparable(&self, x: usize, y: usize) -> bool {
        !self.comparable(x, y)
    }

    /// `{y : x <= y}`, including `x`.
    pub fn up_set(&self, x: usize) -> &FixedBitSet {
        &self.up[x]
    }

    /// `{y : y <= x}`, including `x`.
    pub fn down_set(&self, x: usize) -> &FixedBitSet {
        &self.down[x]
    }

    /// All strict pairs `x < y` in row-major order.
    pub fn strict_pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |x| self.up[x].ones().filter(move |&y| y != x).map(move |y| (x, y)))
    }

    pub fn strict_pair_count(&self) -> usize {
        self.up.iter().map(|r| r.count_ones(..)).sum::<usize>() - self.n
    }

    /// The cover (Hasse) relation: `x < y` with nothing strictly between.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        self.strict_pairs()
            .filter(|&(x, y)| {
                let mut between = self.up[x].clone();
                between.intersect_with(&self.down[y]);
                between.count_ones(..) == 2
            })
            .collect()
    }

    pub fn cover_digraph(&self) -> Digraph {
        Digraph::new(self.n, self.covers()).unwrap()
    }

    /// Smallest-id-first linear extension.
    pub fn linear_extension(&self) -> Vec<usize> {
        self.cover_digraph().topological_order().expect("posets are acyclic")
    }

    pub fn labels(&self) -> &BTreeMap<usize, String> {
        &self.labels
    }

    pub fn label(&self, x: usize) -> Option<&str> {
        self.labels.get(&x).map(String::as_str)
    }

    pub fn with_labels(mut self, labels: BTreeMap<usize, String>) -> Self {
        self.labels = labels.into_iter().filter(|(id, _)| *id < self.n).collect();
        self
    }

    /// Display name of an element: its label, or its id.
    pub fn name(&self, x: usize) -> String {
        self.label(x).map_or_else(|| x.to_string(), str::to_owned)
    }

    /// The subposet induced on `elements`, renumbered in the given order.
    pub fn induced(&self, elements: &[usize]) -> Poset {
        Poset::from_relation(elements.len(), |i, j| self.le(elements[i], elements[j])).unwrap()
    }

    /// Length of a longest chain (number of elements).
    pub fn height(&self) -> usize {
        let mut best = vec![0usize; self.n];
        for x in self.linear_extension() {
            best[x] = 1 + self.down[x].ones().filter(|&y| y != x).map(|y| best[y]).max().unwrap_or(0);
        }
        best.into_iter().max().unwrap_or(0)
    }

    /// Size of a largest antichain, via Dilworth: `n` minus a maximum matching
    /// in the strict comparability bipartite graph.
    pub fn width(&self) -> usize {
        let mut match_right: Vec<Option<usize>> = vec![None; self.n];
        let mut matched = 0;
        for x in 0..self.n {
            let mut seen = FixedBitSet::with_capacity(self.n);
            if self.augment(x, &mut seen, &mut match_right) {
                matched += 1;
            }
        }
        self.n - matched
    }

    fn augment(&self, x: usize, seen: &mut FixedBitSet, match_right: &mut [Option<usize>]) -> bool {
        for y in self.up[x].ones() {
            if y == x || seen.contains(y) {
                continue;
            }
            seen.insert(y);
            if match_right[y].is_none() || self.augment(match_right[y].unwrap(), seen, match_right) {
                match_right[y] = Some(x);
                return true;
            }
        }
        false
    }
}

/// Reflexive-transitive closure of an acyclic cover digraph.
pub fn transitive_closure(covers: &Digraph) -> Result<Poset> {
    let order = covers.topological_order().map_err(Error::CycleDetected)?;
    let n = covers.nv();
    let mut up = vec![FixedBitSet::with_capacity(n); n];
    for &v in order.iter().rev() {
        let mut row = FixedBitSet::with_capacity(n);
        row.insert(v);
        for &w in covers.out_neighbors(v) {
            row.union_with(&up[w]);
        }
        up[v] = row;
    }
    let mut down = vec![FixedBitSet::with_capacity(n); n];
    for (x, row) in up.iter().enumerate() {
        for y in row.ones() {
            down[y].insert(x);
        }
    }
    Ok(Poset { n, up, down, labels: BTreeMap::new() })
}

/// Undirected graph joining incomparable pairs, stored as arcs `(x, y)` with `x < y`.
pub fn incomparability_graph(p: &Poset) -> Digraph {
    let n = p.n();
    let edges = (0..n).flat_map(|x| (x + 1..n).map(move |y| (x, y))).filter(|&(x, y)| p.incomparable(x, y));
    Digraph::new(n, edges).unwrap()
}

/// Incomparable ordered pairs `(x, y)` with `Down(x) ⊆ Down(y)` and `Up(y) ⊆ Up(x)`
/// (strict down/up sets), in row-major order.
pub fn critical_pairs(p: &Poset) -> Vec<(usize, usize)> {
    let n = p.n();
    let mut out = Vec::new();
    for x in 0..n {
        for y in 0..n {
            if x == y || p.comparable(x, y) {
                continue;
            }
            // incomparability keeps y out of Down(x) and x out of Up(y)
            let downs = p.down_set(x).ones().all(|z| z == x || p.down_set(y).contains(z));
            let ups = p.up_set(y).ones().all(|z| z == y || p.up_set(x).contains(z));
            if downs && ups {
                out.push((x, y));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s2() -> Poset {
        // a1=0 a2=1 b1=2 b2=3
        Poset::from_covers(4, &[(0, 3), (1, 2)]).unwrap()
    }

    #[test]
    fn closure_infers_transitive_pairs() {
        let p = Poset::from_covers(3, &[(0, 1), (1, 2)]).unwrap();
        assert!(p.le(0, 2));
        assert_eq!(p.strict_pair_count(), 3);
        assert_eq!(p.covers(), vec![(0, 1), (1, 2)]);
    }

    #[test]
    fn standard_example_two_has_two_strict_pairs() {
        assert_eq!(s2().strict_pair_count(), 2);
    }

    #[test]
    fn cycle_is_rejected() {
        let g = Digraph::new(2, [(0, 1), (1, 0)]).unwrap();
        assert!(matches!(transitive_closure(&g), Err(Error::CycleDetected(_))));
    }

    #[test]
    fn from_relation_checks_axioms() {
        assert!(matches!(Poset::from_relation(2, |_, _| true), Err(Error::NotAPartialOrder(_))));
        assert!(matches!(Poset::from_relation(2, |_, _| false), Err(Error::NotAPartialOrder(_))));
        let bad = |x: usize, y: usize| x == y || (x, y) == (0, 1) || (x, y) == (1, 2);
        assert!(matches!(Poset::from_relation(3, bad), Err(Error::NotAPartialOrder(_))));
    }

    #[test]
    fn digraph_rejects_loops_and_range() {
        assert_eq!(Digraph::new(2, [(1, 1)]), Err(Error::SelfLoop(1)));
        assert!(matches!(Digraph::new(2, [(0, 2)]), Err(Error::VertexOutOfRange { .. })));
    }

    #[test]
    fn degenerate_sizes() {
        for n in 0..2 {
            let p = Poset::chain(n);
            assert_eq!(p.n(), n);
            assert!(critical_pairs(&p).is_empty());
            assert_eq!(incomparability_graph(&p).arc_count(), 0);
            assert_eq!(p.width(), n);
            assert_eq!(p.height(), n);
        }
    }

    #[test]
    fn incomparability_examples() {
        assert_eq!(incomparability_graph(&Poset::chain(3)).arc_count(), 0);
        assert_eq!(incomparability_graph(&Poset::antichain(3)).arcs(), &[(0, 1), (0, 2), (1, 2)]);
        // a1a2, b1b2, a1b1, a2b2
        assert_eq!(incomparability_graph(&s2()).arcs(), &[(0, 1), (0, 2), (1, 3), (2, 3)]);
    }

    #[test]
    fn critical_pair_examples() {
        assert!(critical_pairs(&Poset::chain(4)).is_empty());
        assert_eq!(critical_pairs(&Poset::antichain(2)), vec![(0, 1), (1, 0)]);
        // S_3 by hand: a_i = i, b_i = 3 + i
        let s3 = Poset::from_relation(6, |x, y| x == y || (x < 3 && y >= 3 && y - 3 != x)).unwrap();
        assert_eq!(critical_pairs(&s3), vec![(0, 3), (1, 4), (2, 5)]);
    }

    #[test]
    fn arc_digraph_examples() {
        let path = Digraph::new(3, [(0, 1), (1, 2)]).unwrap();
        assert_eq!(path.arc_digraph().arcs(), &[(0, 1)]);
        let single = Digraph::new(2, [(0, 1)]).unwrap().arc_digraph();
        assert_eq!((single.nv(), single.arc_count()), (1, 0));
    }

    #[test]
    fn width_and_height() {
        assert_eq!((Poset::chain(4).width(), Poset::chain(4).height()), (1, 4));
        assert_eq!((Poset::antichain(3).width(), Poset::antichain(3).height()), (3, 1));
        assert_eq!((s2().width(), s2().height()), (2, 2));
    }

    #[test]
    fn components_of_incomparability_graph() {
        // {0,1} < {2,3}
        let p = Poset::from_covers(4, &[(0, 2), (0, 3), (1, 2), (1, 3)]).unwrap();
        assert_eq!(incomparability_graph(&p).components(), vec![vec![0, 1], vec![2, 3]]);
    }
}
