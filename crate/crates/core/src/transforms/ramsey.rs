//! Monochromatic quadruples in candidate local realizers of incidence posets.
//!
//! Triple `i < j < k` is colored `(p, q)` when some member lists `v_i v_k`
//! below `v_j` and holds the `p`-th occurrence of `v_j` and the `q`-th of
//! `v_i v_k`. Four same-colored triples of `i < j < k < l` put
//! `v_j, v_j v_l, v_k, v_i v_k` into one member with `v_i v_k` below `v_j` and
//! `v_j v_l` below `v_k`; as those members would have to extend `v_j < v_j v_l`
//! and `v_k < v_i v_k`, one of those two comparabilities is reversed there.

use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::generators::incidence_poset;
use crate::realizer::PartialLinearExtension;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RamseyWitness {
    /// `i < j < k < l`, 1-based.
    pub quadruple: [usize; 4],
    /// Common color `(p, q)`, occurrences counted from 1.
    pub color: (usize, usize),
    /// Index into the family of the member holding the cycle.
    pub ple: usize,
    /// `v_j, v_j v_l, v_k, v_i v_k` as element ids.
    pub cycle: [usize; 4],
    /// A pair `lo < hi` of the poset that the member lists as `hi` before `lo`.
    pub violated: (usize, usize),
}

pub fn ramsey_cycle_witness(n: usize, family: &[PartialLinearExtension]) -> Result<Option<RamseyWitness>> {
    ramsey_cycle_witness_with(n, family, Exec::default())
}

/// `None` when no quadruple is monochromatic.
///
/// Fails with `PreconditionUnmet` when some triple has no member listing
/// `v_i v_k` below `v_j`.
pub fn ramsey_cycle_witness_with(
    n: usize,
    family: &[PartialLinearExtension],
    exec: Exec,
) -> Result<Option<RamseyWitness>> {
    let inc = incidence_poset(n)?;
    let size = inc.poset.n();
    // occurrence number (from 1) of each entry, and positions for lookups
    let mut seen = vec![0usize; size];
    let mut occ: Vec<Vec<usize>> = Vec::with_capacity(family.len());
    let mut pos: Vec<Vec<Option<usize>>> = Vec::with_capacity(family.len());
    for q in family {
        let mut here = vec![None; size];
        let mut numbers = Vec::with_capacity(q.len());
        for (i, &x) in q.seq().iter().enumerate() {
            if x >= size {
                return Err(Error::VertexOutOfRange { vertex: x, count: size });
            }
            seen[x] += 1;
            numbers.push(seen[x]);
            here[x] = Some(i);
        }
        occ.push(numbers);
        pos.push(here);
    }

    let idx = |i: usize, j: usize, k: usize| (i * n + j) * n + k;
    let mut color = vec![(0, 0); n * n * n];
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                let (vj, eik) = (inc.vertex(j + 1), inc.edge(i + 1, k + 1));
                let best = (0..family.len())
                    .filter_map(|g| match (pos[g][vj], pos[g][eik]) {
                        (Some(a), Some(b)) if b < a => Some((occ[g][a], occ[g][b])),
                        _ => None,
                    })
                    .min();
                let Some(c) = best else {
                    return Err(Error::PreconditionUnmet(format!(
                        "no member lists v{}v{} below v{}",
                        i + 1,
                        k + 1,
                        j + 1
                    )));
                };
                color[idx(i, j, k)] = c;
            }
        }
    }

    let witness = |i: usize, j: usize, k: usize, l: usize| -> Option<RamseyWitness> {
        let c = color[idx(i, j, k)];
        if [idx(i, j, l), idx(i, k, l), idx(j, k, l)].iter().any(|&t| color[t] != c) {
            return None;
        }
        let vj = inc.vertex(j + 1);
        let ejl = inc.edge(j + 1, l + 1);
        let vk = inc.vertex(k + 1);
        let eik = inc.edge(i + 1, k + 1);
        // the member holding the p-th occurrence of v_j
        let g = (0..family.len()).find(|&g| pos[g][vj].is_some_and(|a| occ[g][a] == c.0))?;
        let at = |x: usize| pos[g][x];
        let violated = [(vj, ejl), (vk, eik)]
            .into_iter()
            .find(|&(lo, hi)| matches!((at(lo), at(hi)), (Some(a), Some(b)) if b < a))?;
        Some(RamseyWitness {
            quadruple: [i + 1, j + 1, k + 1, l + 1],
            color: c,
            ple: g,
            cycle: [vj, ejl, vk, eik],
            violated,
        })
    };
    Ok(exec.find_first(n, |i| {
        (i + 1..n).find_map(|j| (j + 1..n).find_map(|k| (k + 1..n).find_map(|l| witness(i, j, k, l))))
    }))
}
