//! Graph coloring on the underlying undirected graph of a [`Digraph`].

use fixedbitset::FixedBitSet;

use super::Budget;
use crate::error::Result;
use crate::poset::Digraph;

/// Greedy coloring along `order`; colors are numbered from 0 by first use.
pub fn greedy_coloring(g: &Digraph, order: &[usize]) -> Vec<usize> {
    let adj = g.undirected_adjacency();
    let mut color = vec![usize::MAX; g.nv()];
    for &v in order {
        let mut used = FixedBitSet::with_capacity(g.nv() + 1);
        for w in adj[v].ones() {
            if color[w] != usize::MAX {
                used.insert(color[w]);
            }
        }
        color[v] = (0..).find(|&c| c > g.nv() || !used.contains(c)).unwrap();
    }
    color
}

/// Smallest-last order: coloring greedily along it uses at most
/// degeneracy + 1 colors.
pub fn degeneracy_order(g: &Digraph) -> Vec<usize> {
    let adj = g.undirected_adjacency();
    let n = g.nv();
    let mut degree: Vec<usize> = adj.iter().map(|a| a.count_ones(..)).collect();
    let mut removed = FixedBitSet::with_capacity(n);
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n).filter(|&v| !removed.contains(v)).min_by_key(|&v| (degree[v], v)).unwrap();
        removed.insert(v);
        order.push(v);
        for w in adj[v].ones() {
            degree[w] -= 1;
        }
    }
    order.reverse();
    order
}

pub fn is_proper_coloring(g: &Digraph, color: &[usize]) -> bool {
    color.len() == g.nv() && g.arcs().iter().all(|&(u, v)| color[u] != color[v])
}

fn greedy_clique(adj: &[FixedBitSet]) -> usize {
    let n = adj.len();
    let mut best = 0;
    for start in 0..n {
        let mut cand = adj[start].clone();
        let mut size = 1;
        while let Some(v) = cand.ones().max_by_key(|&v| {
            let mut c = cand.clone();
            c.intersect_with(&adj[v]);
            c.count_ones(..)
        }) {
            size += 1;
            cand.intersect_with(&adj[v]);
        }
        best = best.max(size);
    }
    best
}

struct Dsatur<'a> {
    adj: Vec<FixedBitSet>,
    color: Vec<usize>,
    best: usize,
    best_color: Vec<usize>,
    lower: usize,
    budget: &'a Budget,
    nodes: u64,
}

impl Dsatur<'_> {
    fn pick(&self) -> Option<usize> {
        let n = self.adj.len();
        (0..n).filter(|&v| self.color[v] == usize::MAX).max_by_key(|&v| {
            let mut seen = FixedBitSet::with_capacity(n + 1);
            let mut free = 0;
            for w in self.adj[v].ones() {
                match self.color[w] {
                    usize::MAX => free += 1,
                    c => seen.insert(c),
                }
            }
            (seen.count_ones(..), free, std::cmp::Reverse(v))
        })
    }

    fn run(&mut self, used: usize) -> Result<()> {
        self.nodes += 1;
        if self.nodes % 1024 == 1 {
            self.budget.check()?;
        }
        let Some(v) = self.pick() else {
            self.best = used;
            self.best_color = self.color.clone();
            return Ok(());
        };
        for c in 0..=used {
            // a new color must still beat the incumbent
            if c.max(used.saturating_sub(1)) + 1 >= self.best || self.best == self.lower {
                break;
            }
            if self.adj[v].ones().any(|w| self.color[w] == c) {
                continue;
            }
            self.color[v] = c;
            self.run(used.max(c + 1))?;
            self.color[v] = usize::MAX;
        }
        Ok(())
    }
}

/// An optimal coloring (branch and bound over DSATUR order).
pub fn exact_coloring(g: &Digraph, budget: &Budget) -> Result<Vec<usize>> {
    let n = g.nv();
    if n == 0 {
        return Ok(Vec::new());
    }
    let adj = g.undirected_adjacency();
    let upper = greedy_coloring(g, &degeneracy_order(g));
    let best = upper.iter().max().map_or(0, |&c| c + 1);
    let lower = greedy_clique(&adj);
    let mut search = Dsatur { adj, color: vec![usize::MAX; n], best, best_color: upper, lower, budget, nodes: 0 };
    if search.best > search.lower {
        search.run(0)?;
    }
    Ok(search.best_color)
}

/// `χ(g)` of the underlying undirected graph.
pub fn exact_chromatic_number(g: &Digraph, budget: &Budget) -> Result<usize> {
    Ok(exact_coloring(g, budget)?.iter().max().map_or(0, |&c| c + 1))
}
