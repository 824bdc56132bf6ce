//! Recursive construction of an acyclic digraph `G = (V, E)` of large
//! chromatic number together with a poset on `E` that has a width-4 local
//! realizer `{≤_A, ≤_B} ∪ {≤_v : v ∈ V}`.
//!
//! The poset is *defined* by the local-realizer condition from the orders;
//! building it through [`Poset::from_relation`] machine-checks that the result
//! is a partial order.

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::poset::{Digraph, Poset};
use crate::realizer::{reversal_sets, LinearOrder, LocalRealizer, PartialLinearExtension};

/// Refuse instances whose edge count exceeds this many elements.
pub const DEFAULT_MAX_EDGES: u64 = 100_000;

/// Orders and gadgets before the poset is derived.
#[derive(Clone, Debug)]
struct Skeleton {
    nv: usize,
    /// element id -> arc
    edges: Vec<(usize, usize)>,
    order_a: Vec<usize>,
    order_b: Vec<usize>,
    /// per vertex, `E(v,V)` below `E(V,v)`
    gadgets: Vec<Vec<usize>>,
}

/// Where copy `i` of the smaller instance sits inside the larger one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubCopy {
    /// sub-instance vertex -> vertex here
    pub vertices: Vec<usize>,
    /// sub-instance element -> element here
    pub edges: Vec<usize>,
}

#[derive(Clone, Debug)]
pub struct Theorem6Instance {
    pub k: usize,
    pub g: Digraph,
    /// element id -> arc `(u, v)` of `g`
    pub edges: Vec<(usize, usize)>,
    pub p: Poset,
    pub order_a: LinearOrder,
    pub order_b: LinearOrder,
    /// `gadgets[v]` orders `E(v,V)` below `E(V,v)`.
    pub gadgets: Vec<PartialLinearExtension>,
    /// The `r`-subsets `X^i` of the top-level set `X`, as vertex ids.
    pub xsets: Vec<Vec<usize>>,
    /// `N_j = {v : x_j v ∈ E}` for the top-level `X = {x_1, ..., x_s}`.
    pub nsets: Vec<Vec<usize>>,
    /// Top-level `X`, in order.
    pub xs: Vec<usize>,
    pub copies: Vec<SubCopy>,
    pub sub: Option<Box<Theorem6Instance>>,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum SizeEstimate {
    Exact(u128),
    /// Too large for `u128`; value is `log10` of the size.
    Log10(f64),
    /// Too large even for a floating-point logarithm.
    Overflow,
}

impl SizeEstimate {
    fn log10(self) -> Option<f64> {
        match self {
            SizeEstimate::Exact(v) => Some((v as f64).log10()),
            SizeEstimate::Log10(l) => Some(l),
            SizeEstimate::Overflow => None,
        }
    }

    pub fn exact(self) -> Option<u128> {
        match self {
            SizeEstimate::Exact(v) => Some(v),
            _ => None,
        }
    }
}

impl std::fmt::Display for SizeEstimate {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            SizeEstimate::Exact(v) => write!(f, "{v}"),
            SizeEstimate::Log10(l) => write!(f, "~10^{l:.1}"),
            SizeEstimate::Overflow => write!(f, "beyond 10^(10^300)"),
        }
    }
}

/// Predicted sizes at one recursion level.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Theorem6Sizes {
    pub k: usize,
    /// vertices of the level-`k-1` instance (`r`); 0 at `k = 1`
    pub r: SizeEstimate,
    /// `|X| = k(r-1)+1`
    pub s: SizeEstimate,
    /// number of copies `C(s, r)`
    pub copies: SizeEstimate,
    pub vertices: SizeEstimate,
    pub edges: SizeEstimate,
}

fn ln_factorial(x: f64) -> f64 {
    if x < 30.0 {
        (2..=x as u64).map(|i| (i as f64).ln()).sum()
    } else {
        // Stirling series
        x * x.ln() - x + 0.5 * (2.0 * std::f64::consts::PI * x).ln() + 1.0 / (12.0 * x) - 1.0 / (360.0 * x.powi(3))
    }
}

fn binomial(s: u128, r: u128) -> SizeEstimate {
    let r = r.min(s - r);
    let mut c: u128 = 1;
    for i in 0..r {
        // c * (s - i) is divisible by i + 1 after the multiplication
        match c.checked_mul(s - i) {
            Some(v) => c = v / (i + 1),
            None => {
                let (s, r) = (s as f64, r as f64);
                let ln = ln_factorial(s) - ln_factorial(r) - ln_factorial(s - r);
                return SizeEstimate::Log10(ln / std::f64::consts::LN_10);
            }
        }
    }
    SizeEstimate::Exact(c)
}

/// Sizes of the construction for `k = 1..=k_max`.
pub fn theorem6_sizes(k_max: usize) -> Vec<Theorem6Sizes> {
    let mut out = Vec::new();
    let mut verts = SizeEstimate::Exact(2);
    let mut edges = SizeEstimate::Exact(1);
    for k in 1..=k_max {
        if k == 1 {
            out.push(Theorem6Sizes {
                k,
                r: SizeEstimate::Exact(0),
                s: SizeEstimate::Exact(0),
                copies: SizeEstimate::Exact(0),
                vertices: verts,
                edges,
            });
            continue;
        }
        let r = verts;
        let (s, copies, v_new, e_new) = match (r, edges) {
            (SizeEstimate::Exact(r), SizeEstimate::Exact(e)) => {
                let s = (k as u128) * (r - 1) + 1;
                let n = binomial(s, r);
                match n {
                    SizeEstimate::Exact(n) => {
                        let v = n.checked_mul(r).and_then(|x| x.checked_add(s));
                        let e_total = n.checked_mul(r + e);
                        let lv = (n as f64).log10() + (r as f64).log10();
                        let le = (n as f64).log10() + ((r + e) as f64).log10();
                        (
                            SizeEstimate::Exact(s),
                            SizeEstimate::Exact(n),
                            v.map_or(SizeEstimate::Log10(lv), SizeEstimate::Exact),
                            e_total.map_or(SizeEstimate::Log10(le), SizeEstimate::Exact),
                        )
                    }
                    SizeEstimate::Log10(ln) => {
                        let lr = (r as f64).log10();
                        let le = ((r + e) as f64).log10();
                        (SizeEstimate::Exact(s), n, SizeEstimate::Log10(ln + lr), SizeEstimate::Log10(ln + le))
                    }
                    SizeEstimate::Overflow => unreachable!(),
                }
            }
            _ => {
                // r itself is astronomically large; C(s, r) >= 2^r overflows any float
                let overflow = SizeEstimate::Overflow;
                let s = r.log10().map_or(overflow, |l| SizeEstimate::Log10(l + (k as f64).log10()));
                (s, overflow, overflow, overflow)
            }
        };
        out.push(Theorem6Sizes { k, r, s, copies, vertices: v_new, edges: e_new });
        verts = v_new;
        edges = e_new;
    }
    out
}

fn base() -> Skeleton {
    Skeleton { nv: 2, edges: vec![(0, 1)], order_a: vec![0], order_b: vec![0], gadgets: vec![vec![0], vec![0]] }
}

/// Vertices ordered by the position of their `E(v,V)` block in `≤_B`, sinks last.
fn b_block_order(sk: &Skeleton) -> Vec<usize> {
    let mut first = vec![usize::MAX; sk.nv];
    for (pos, &e) in sk.order_b.iter().enumerate() {
        let tail = sk.edges[e].0;
        first[tail] = first[tail].min(pos);
    }
    (0..sk.nv).sorted_by_key(|&v| (first[v], v)).collect()
}

fn step(k: usize, sub: &Skeleton) -> Level {
    let r = sub.nv;
    let m = sub.edges.len();
    let s = k * (r - 1) + 1;
    let xsets_local: Vec<Vec<usize>> = (0..s).combinations(r).collect();
    let n = xsets_local.len();
    let nv = n * r + s;
    let x_vertex = |j: usize| n * r + j;
    let matched = b_block_order(sub);

    let mut edges = vec![(0, 0); n * (m + r)];
    let mut copies = Vec::with_capacity(n);
    for i in 0..n {
        let vertices: Vec<usize> = (0..r).map(|w| i * r + w).collect();
        let emap: Vec<usize> = (0..m).map(|e| i * m + e).collect();
        for (e, &(u, v)) in sub.edges.iter().enumerate() {
            edges[emap[e]] = (vertices[u], vertices[v]);
        }
        for (j, &x) in xsets_local[i].iter().enumerate() {
            edges[n * m + i * r + j] = (x_vertex(x), vertices[matched[j]]);
        }
        copies.push(SubCopy { vertices, edges: emap });
    }
    let matching_edge = |i: usize, j: usize| n * m + i * r + j;

    // E(X^1,V^1) < E^1 < ... < E(X^n,V^n) < E^n
    let mut order_a = Vec::with_capacity(edges.len());
    for (i, copy) in copies.iter().enumerate() {
        order_a.extend((0..r).map(|j| matching_edge(i, j)));
        order_a.extend(sub.order_a.iter().map(|&e| copy.edges[e]));
    }

    // per x_j: its matching edges, by copy
    let mut x_out: Vec<Vec<(usize, usize)>> = vec![Vec::new(); s];
    for (i, xs) in xsets_local.iter().enumerate() {
        for (j, &x) in xs.iter().enumerate() {
            x_out[x].push((i, j));
        }
    }
    let mut sub_out_by_b: Vec<Vec<usize>> = vec![Vec::new(); r];
    for &e in &sub.order_b {
        sub_out_by_b[sub.edges[e].0].push(e);
    }
    // E(x_1,V) < E(N_1,V) < ... < E(x_s,V) < E(N_s,V)
    let mut order_b = Vec::with_capacity(edges.len());
    let mut nsets = Vec::with_capacity(s);
    for outs in &x_out {
        order_b.extend(outs.iter().map(|&(i, j)| matching_edge(i, j)));
        let mut nj = Vec::with_capacity(outs.len());
        for &(i, j) in outs {
            let w = matched[j];
            nj.push(copies[i].vertices[w]);
            order_b.extend(sub_out_by_b[w].iter().map(|&e| copies[i].edges[e]));
        }
        nsets.push(nj);
    }

    let mut gadgets = vec![Vec::new(); nv];
    for (i, copy) in copies.iter().enumerate() {
        for (j, &w) in matched.iter().enumerate() {
            let mut g: Vec<usize> = sub.gadgets[w].iter().map(|&e| copy.edges[e]).collect();
            // the single edge of E(X, v) goes on top
            g.push(matching_edge(i, j));
            gadgets[copy.vertices[w]] = g;
        }
    }
    for (x, outs) in x_out.iter().enumerate() {
        gadgets[x_vertex(x)] = outs.iter().rev().map(|&(i, j)| matching_edge(i, j)).collect();
    }

    let xsets = xsets_local.iter().map(|xs| xs.iter().map(|&x| x_vertex(x)).collect()).collect();
    Level {
        skeleton: Skeleton { nv, edges, order_a, order_b, gadgets },
        copies,
        xsets,
        nsets,
        xs: (0..s).map(x_vertex).collect(),
    }
}

struct Level {
    skeleton: Skeleton,
    copies: Vec<SubCopy>,
    xsets: Vec<Vec<usize>>,
    nsets: Vec<Vec<usize>>,
    xs: Vec<usize>,
}

fn finalize(k: usize, level: Level, sub: Option<Box<Theorem6Instance>>) -> Result<Theorem6Instance> {
    let Level { skeleton: sk, copies, xsets, nsets, xs } = level;
    let g = Digraph::new(sk.nv, sk.edges.iter().copied())?;
    let n = sk.edges.len();
    let mut family: Vec<PartialLinearExtension> =
        vec![PartialLinearExtension::new(sk.order_a.clone())?, PartialLinearExtension::new(sk.order_b.clone())?];
    let gadgets = sk.gadgets.into_iter().map(PartialLinearExtension::new).collect::<Result<Vec<_>>>()?;
    family.extend(gadgets.iter().cloned());
    let above = reversal_sets(n, &family);
    let p = Poset::from_relation(n, |x, y| !above[x].contains(y))?
        .with_labels(sk.edges.iter().enumerate().map(|(e, &(u, v))| (e, format!("{u}>{v}"))).collect());
    Ok(Theorem6Instance {
        k,
        g,
        edges: sk.edges,
        p,
        order_a: LinearOrder::new(sk.order_a)?,
        order_b: LinearOrder::new(sk.order_b)?,
        gadgets,
        xsets,
        nsets,
        xs,
        copies,
        sub,
    })
}

/// Builds the level-`k` instance, refusing anything above `max_edges` elements.
pub fn theorem6_construct(k: usize, max_edges: u64) -> Result<Theorem6Instance> {
    if k == 0 {
        return Err(Error::BadParameter("construction starts at k = 1".into()));
    }
    let sizes = theorem6_sizes(k);
    let predicted = sizes[k - 1].edges;
    if predicted.exact().is_none_or(|e| e > max_edges as u128) {
        return Err(Error::SizeCapExceeded { k, edges: predicted.to_string(), cap: max_edges });
    }
    let sk = base();
    let level1 =
        Level { skeleton: sk.clone(), copies: Vec::new(), xsets: Vec::new(), nsets: Vec::new(), xs: Vec::new() };
    let mut inst = finalize(1, level1, None)?;
    let mut skeleton = sk;
    for level in 2..=k {
        let next = step(level, &skeleton);
        skeleton = next.skeleton.clone();
        inst = finalize(level, next, Some(Box::new(inst)))?;
    }
    Ok(inst)
}

impl Theorem6Instance {
    pub fn local_realizer(&self) -> LocalRealizer {
        let mut ples = vec![PartialLinearExtension::from(&self.order_a), PartialLinearExtension::from(&self.order_b)];
        ples.extend(self.gadgets.iter().filter(|g| !g.is_empty()).cloned());
        LocalRealizer::new(ples)
    }

    /// Element id of arc `(u, v)`.
    pub fn edge_id(&self, u: usize, v: usize) -> Option<usize> {
        self.edges.iter().position(|&a| a == (u, v))
    }

    /// Element ids of `E(v, V)` and `E(V, v)`.
    pub fn out_in(&self, v: usize) -> (Vec<usize>, Vec<usize>) {
        let out = (0..self.edges.len()).filter(|&e| self.edges[e].0 == v).collect();
        let inc = (0..self.edges.len()).filter(|&e| self.edges[e].1 == v).collect();
        (out, inc)
    }

    /// Checks the ordering properties of `≤_A`, `≤_B` and the gadgets, and
    /// that each copy of the smaller instance carries the smaller poset.
    pub fn check_properties(&self) -> std::result::Result<(), String> {
        let below_all =
            |o: &LinearOrder, lo: &[usize], hi: &[usize]| lo.iter().all(|&e| hi.iter().all(|&f| o.lt(e, f)));
        for (name, o) in [("A", &self.order_a), ("B", &self.order_b)] {
            if !o.is_extension_of(&self.p) {
                return Err(format!("order {name} is not a linear extension"));
            }
        }
        for v in 0..self.g.nv() {
            let (out, inc) = self.out_in(v);
            if !below_all(&self.order_a, &inc, &out) {
                return Err(format!("E(V,{v}) not below E({v},V) in A"));
            }
            if !below_all(&self.order_b, &inc, &out) {
                return Err(format!("E(V,{v}) not below E({v},V) in B"));
            }
            let mut pos: Vec<usize> = out.iter().map(|&e| self.order_b.position(e)).collect();
            pos.sort_unstable();
            if pos.windows(2).any(|w| w[1] != w[0] + 1) {
                return Err(format!("E({v},V) is not contiguous in B"));
            }
            let gadget = self.gadgets[v].seq();
            let mut support: Vec<usize> = gadget.to_vec();
            support.sort_unstable();
            let mut expected: Vec<usize> = out.iter().chain(&inc).copied().collect();
            expected.sort_unstable();
            if support != expected || !gadget[..out.len()].iter().all(|e| out.contains(e)) {
                return Err(format!("gadget of {v} is not E({v},V) below E(V,{v})"));
            }
        }
        if let Some(sub) = &self.sub {
            for (i, copy) in self.copies.iter().enumerate() {
                let m = copy.edges.len();
                for a in 0..m {
                    for b in 0..m {
                        if self.p.le(copy.edges[a], copy.edges[b]) != sub.p.le(a, b) {
                            return Err(format!("copy {i} does not restrict to the smaller poset"));
                        }
                    }
                }
            }
        }
        Ok(())
    }
}
