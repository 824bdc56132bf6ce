//! Poset families with their explicit certificates.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::formula::TruthTable;
use crate::poset::Poset;
use crate::realizer::{BooleanRealizer, LinearOrder, LocalRealizer, PartialLinearExtension, Realizer};

pub fn chain(n: usize) -> Poset {
    Poset::chain(n)
}

pub fn antichain(n: usize) -> Poset {
    Poset::antichain(n)
}

/// The standard example `S_k` with the certificates that apply for its `k`.
#[derive(Clone, Debug)]
pub struct StandardExample {
    pub k: usize,
    pub poset: Poset,
    pub realizer: Realizer,
    /// Present for `k >= 3`.
    pub local: Option<LocalRealizer>,
    /// Present for `k >= 4`.
    pub boolean: Option<BooleanRealizer>,
}

impl StandardExample {
    /// Id of `a_i`, `i` 1-based.
    pub fn a(&self, i: usize) -> usize {
        i - 1
    }

    /// Id of `b_i`, `i` 1-based.
    pub fn b(&self, i: usize) -> usize {
        self.k + i - 1
    }
}

fn orders(seqs: Vec<Vec<usize>>) -> Vec<LinearOrder> {
    seqs.into_iter().map(|s| LinearOrder::new(s).expect("generator orders are permutations")).collect()
}

/// `S_k`: minimal `a_1..a_k` (ids `0..k`), maximal `b_1..b_k` (ids `k..2k`),
/// `a_i < b_j` iff `i != j`.
pub fn standard_example(k: usize) -> Result<StandardExample> {
    if k < 2 {
        return Err(Error::BadParameter(format!("standard example needs k >= 2, got {k}")));
    }
    let a = |i: usize| i;
    let b = |i: usize| k + i;
    let poset = Poset::from_relation(2 * k, |x, y| x == y || (x < k && y >= k && y - k != x))?
        .with_labels((0..k).flat_map(|i| [(a(i), format!("a{}", i + 1)), (b(i), format!("b{}", i + 1))]).collect());

    // L_i = a-chain without a_i, b_i, a_i, b-chain without b_i
    let realizer = Realizer::new(orders(
        (0..k)
            .map(|i| {
                let mut seq: Vec<usize> = (0..k).filter(|&j| j != i).map(a).collect();
                seq.extend([b(i), a(i)]);
                seq.extend((0..k).filter(|&j| j != i).map(b));
                seq
            })
            .collect(),
    ))?;

    let up: Vec<usize> = (0..k).map(a).chain((0..k).map(b)).collect();
    let down: Vec<usize> = (0..k).rev().map(a).chain((0..k).rev().map(b)).collect();
    let interleaved_up: Vec<usize> = (0..k).flat_map(|i| [b(i), a(i)]).collect();
    let interleaved_down: Vec<usize> = (0..k).rev().flat_map(|i| [b(i), a(i)]).collect();

    let local = (k >= 3).then(|| {
        let mut ples =
            vec![PartialLinearExtension::new(up.clone()).unwrap(), PartialLinearExtension::new(down.clone()).unwrap()];
        ples.extend((0..k).map(|i| PartialLinearExtension::new(vec![b(i), a(i)]).unwrap()));
        LocalRealizer::new(ples)
    });

    let boolean = if k >= 4 {
        // α1 ∧ α2 ∧ (α3 ∨ α4)
        let phi = TruthTable::from_fn(4, |v| v[0] && v[1] && (v[2] || v[3]))?;
        Some(BooleanRealizer::new(orders(vec![up, down, interleaved_up, interleaved_down]), phi.into())?)
    } else {
        None
    };

    Ok(StandardExample { k, poset, realizer, local, boolean })
}

/// Incidence poset of `K_n` with its 4-order boolean certificate.
#[derive(Clone, Debug)]
pub struct IncidencePoset {
    pub n: usize,
    pub poset: Poset,
    pub boolean: BooleanRealizer,
}

impl IncidencePoset {
    /// Id of vertex `v_i`, `i` 1-based.
    pub fn vertex(&self, i: usize) -> usize {
        i - 1
    }

    /// Id of edge `v_i v_j`, 1-based, `i != j`.
    pub fn edge(&self, i: usize, j: usize) -> usize {
        edge_id(self.n, i.min(j) - 1, i.max(j) - 1)
    }
}

/// 0-based `i < j`; edges follow the vertices in lexicographic order.
fn edge_id(n: usize, i: usize, j: usize) -> usize {
    debug_assert!(i < j && j < n);
    n + i * (2 * n - i - 1) / 2 + (j - i - 1)
}

/// `P_n`: vertices `v_1..v_n` (ids `0..n`) below the edges `v_i v_j`, `i < j`
/// (ids from `n`, lexicographic).
pub fn incidence_poset(n: usize) -> Result<IncidencePoset> {
    if n < 2 {
        return Err(Error::BadParameter(format!("incidence poset needs n >= 2, got {n}")));
    }
    let m = n * (n - 1) / 2;
    let mut covers = Vec::with_capacity(2 * m);
    let mut labels = BTreeMap::new();
    for i in 0..n {
        labels.insert(i, format!("v{}", i + 1));
        for j in i + 1..n {
            let e = edge_id(n, i, j);
            covers.extend([(i, e), (j, e)]);
            labels.insert(e, format!("v{}v{}", i + 1, j + 1));
        }
    }
    let poset = Poset::from_covers(n + m, &covers)?.with_labels(labels);
    let e = |i: usize, j: usize| edge_id(n, i.min(j), i.max(j));

    // A_i: v_i < v_iv_{i+1} < ... < v_iv_n, blocks ascending
    let a: Vec<usize> = (0..n).flat_map(|i| std::iter::once(i).chain((i + 1..n).map(move |j| e(i, j)))).collect();
    // B_i: v_i < v_iv_n < ... < v_iv_{i+1}, blocks descending
    let b: Vec<usize> =
        (0..n).rev().flat_map(|i| std::iter::once(i).chain((i + 1..n).rev().map(move |j| e(i, j)))).collect();
    // C_i: v_i < v_1v_i < ... < v_{i-1}v_i, blocks ascending
    let c: Vec<usize> = (0..n).flat_map(|i| std::iter::once(i).chain((0..i).map(move |j| e(j, i)))).collect();
    // D_i: v_i < v_{i-1}v_i < ... < v_1v_i, blocks descending
    let d: Vec<usize> =
        (0..n).rev().flat_map(|i| std::iter::once(i).chain((0..i).rev().map(move |j| e(j, i)))).collect();

    // (α1 ∧ α2) ∨ (α3 ∧ α4)
    let phi = TruthTable::from_fn(4, |v| (v[0] && v[1]) || (v[2] && v[3]))?;
    let boolean = BooleanRealizer::new(orders(vec![a, b, c, d]), phi.into())?;
    Ok(IncidencePoset { n, poset, boolean })
}
