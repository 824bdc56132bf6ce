//! Width-3 local realizers become boolean realizers.
//!
//! Output orders: one linear extension `≤*`, then for every partition of the
//! ground set into gadget-ordered blocks the pair "blocks ascending", "blocks
//! descending". The formula is `α* ∧ (α_1 ∨ α_1') ∧ ... ∧ (α_t ∨ α_t')`, so
//! `x < y` iff `x <* y` and no block puts `y` below `x`.

use crate::error::{Error, Result};
use crate::formula::{Cnf, Literal};
use crate::poset::{Digraph, Poset};
use crate::realizer::{
    local_width, occurrence_counts, verify_boolean_realizer, verify_local_realizer, BooleanRealizer, LinearOrder,
    LocalRealizer, PartialLinearExtension,
};
use crate::solvers::{degeneracy_order, greedy_coloring};

/// Gadgets padded so that every element occurs exactly 3 times, and the
/// occurrence number of each gadget entry, counted in gadget order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OccurrenceIndex {
    pub gadgets: Vec<PartialLinearExtension>,
    /// `occurrence[g][i]` is `p` when entry `i` of gadget `g` is `x^p` (0-based).
    pub occurrence: Vec<Vec<usize>>,
    /// `positions[x][p] = (g, i)`.
    pub positions: Vec<[(usize, usize); 3]>,
}

impl OccurrenceIndex {
    /// Pads with singleton gadgets after the given ones.
    pub fn new(n: usize, ples: &[PartialLinearExtension]) -> Self {
        let mut gadgets = ples.to_vec();
        let mut counts = occurrence_counts(ples);
        counts.resize(n, 0);
        for (x, &c) in counts.iter().enumerate() {
            for _ in c..3 {
                gadgets.push(PartialLinearExtension::new(vec![x]).expect("singleton"));
            }
        }
        let mut seen = vec![0usize; n];
        let mut positions = vec![[(usize::MAX, usize::MAX); 3]; n];
        let occurrence = gadgets
            .iter()
            .enumerate()
            .map(|(g, q)| {
                q.seq()
                    .iter()
                    .enumerate()
                    .map(|(i, &x)| {
                        let p = seen[x];
                        positions[x][p] = (g, i);
                        seen[x] += 1;
                        p
                    })
                    .collect()
            })
            .collect();
        OccurrenceIndex { gadgets, occurrence, positions }
    }
}

/// Which occurrences a partition keeps.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PartitionLabel {
    /// Every `x^p`.
    Occurrence { p: usize },
    /// `x^p` with `c(x) = a` and `y^q` with `c(y) = b`, singletons elsewhere.
    Cross { p: usize, q: usize, a: usize, b: usize },
}

/// Partitions of the ground set into blocks, each ordered by one gadget.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartitionScheme {
    pub labels: Vec<PartitionLabel>,
    pub partitions: Vec<Vec<Vec<usize>>>,
}

impl PartitionScheme {
    /// Every partition covers `0..n` exactly once.
    pub fn is_partition_of(&self, n: usize) -> bool {
        self.partitions.iter().all(|blocks| {
            let mut seen = vec![false; n];
            blocks.iter().flatten().all(|&x| x < n && !std::mem::replace(&mut seen[x], true)) && seen.iter().all(|&s| s)
        })
    }
}

#[derive(Clone, Debug)]
pub struct Local3Conversion {
    pub boolean: BooleanRealizer,
    pub occurrences: OccurrenceIndex,
    /// Pairs `x <* y` with `x^p > y^q`, `p != q`, in some gadget.
    pub conflict_graph: Digraph,
    pub coloring: Vec<usize>,
    /// Number of colors used.
    pub colors: usize,
    pub scheme: PartitionScheme,
}

impl Local3Conversion {
    /// `1 + 2(3 + 3c(c-1))`.
    pub fn expected_size(colors: usize) -> usize {
        1 + 2 * (3 + 3 * colors * colors.saturating_sub(1))
    }
}

fn restrict(occ: &OccurrenceIndex, keep: impl Fn(usize, usize) -> bool, n: usize) -> Vec<Vec<usize>> {
    let mut covered = vec![false; n];
    let mut blocks: Vec<Vec<usize>> = occ
        .gadgets
        .iter()
        .zip(&occ.occurrence)
        .map(|(q, occs)| q.seq().iter().zip(occs).filter(|&(&x, &p)| keep(x, p)).map(|(&x, _)| x).collect::<Vec<_>>())
        .filter(|b| !b.is_empty())
        .collect();
    for &x in blocks.iter().flatten() {
        covered[x] = true;
    }
    blocks.extend((0..n).filter(|&x| !covered[x]).map(|x| vec![x]));
    blocks
}

pub fn local3_to_boolean(p: &Poset, lr: &LocalRealizer) -> Result<Local3Conversion> {
    let width = local_width(lr);
    if width > 3 {
        return Err(Error::WidthTooLarge { width, max: 3 });
    }
    if !verify_local_realizer(p, lr)? {
        return Err(Error::NotALocalRealizer);
    }
    let n = p.n();
    let occ = OccurrenceIndex::new(n, lr.ples());
    let star = LinearOrder::new(p.linear_extension())?;

    let mut edges = Vec::new();
    for (q, occs) in occ.gadgets.iter().zip(&occ.occurrence) {
        let s = q.seq();
        for j in 0..s.len() {
            for i in 0..j {
                // s[j] sits above s[i] in this gadget
                let (hi, lo) = (s[j], s[i]);
                if occs[i] != occs[j] && star.lt(hi, lo) {
                    edges.push((hi, lo));
                }
            }
        }
    }
    let conflict_graph = Digraph::undirected(n, edges)?;
    let coloring = greedy_coloring(&conflict_graph, &degeneracy_order(&conflict_graph));
    let colors = coloring.iter().max().map_or(0, |&c| c + 1);

    let mut labels: Vec<PartitionLabel> = (0..3).map(|p| PartitionLabel::Occurrence { p }).collect();
    for (pp, qq) in [(0, 1), (0, 2), (1, 2)] {
        for a in 0..colors {
            for b in (0..colors).filter(|&b| b != a) {
                labels.push(PartitionLabel::Cross { p: pp, q: qq, a, b });
            }
        }
    }
    let partitions: Vec<Vec<Vec<usize>>> = labels
        .iter()
        .map(|&label| match label {
            PartitionLabel::Occurrence { p: pp } => restrict(&occ, |_, o| o == pp, n),
            PartitionLabel::Cross { p: pp, q: qq, a, b } => {
                restrict(&occ, |x, o| (o == pp && coloring[x] == a) || (o == qq && coloring[x] == b), n)
            }
        })
        .collect();

    let mut orders = vec![star];
    for blocks in &partitions {
        orders.push(LinearOrder::new(blocks.iter().flatten().copied().collect())?);
        orders.push(LinearOrder::new(blocks.iter().rev().flatten().copied().collect())?);
    }
    let mut clauses = vec![vec![Literal::pos(0)]];
    clauses.extend((0..partitions.len()).map(|i| vec![Literal::pos(1 + 2 * i), Literal::pos(2 + 2 * i)]));
    let phi = Cnf::new(orders.len(), clauses)?;
    let boolean = BooleanRealizer::new(orders, phi.into())?;
    if !verify_boolean_realizer(p, &boolean)? {
        return Err(Error::NotARealizer);
    }
    let scheme = PartitionScheme { labels, partitions };
    Ok(Local3Conversion { boolean, occurrences: occ, conflict_graph, coloring, colors, scheme })
}
