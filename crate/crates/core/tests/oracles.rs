//! Library answers checked against brute-force or closed-form reference computations.

use itertools::Itertools;
use posetdim::fixtures::{all_posets, random_acyclic_digraph, rng};
use posetdim::generators::{incidence_poset, standard_example};
use posetdim::thm6::theorem6_construct;
use posetdim::thm6::DEFAULT_MAX_EDGES;
use posetdim::{
    critical_pairs, decide_boolean_dimension_small, decide_dimension, exact_chromatic_number, incomparability_graph,
    stats, verify_realizer, Budget, Decision, Digraph, Poset,
};
use rand::Rng;

/// Can `pairs` be split into `t` classes, none holding an alternating cycle?
/// Arc `i -> j` inside a class when `x_i <= y_j`; a class is reversible iff acyclic.
fn reversible_in(p: &Poset, pairs: &[(usize, usize)], t: usize) -> bool {
    let m = pairs.len();
    let arc = |i: usize, j: usize| p.le(pairs[i].0, pairs[j].1);
    let mut class = vec![usize::MAX; m];

    fn has_cycle(members: &[usize], arc: &dyn Fn(usize, usize) -> bool) -> bool {
        // Kahn on the induced subgraph
        let k = members.len();
        let mut indeg: Vec<usize> = (0..k).map(|b| (0..k).filter(|&a| arc(members[a], members[b])).count()).collect();
        let mut stack: Vec<usize> = (0..k).filter(|&b| indeg[b] == 0).collect();
        let mut seen = 0;
        while let Some(a) = stack.pop() {
            seen += 1;
            for b in 0..k {
                if arc(members[a], members[b]) {
                    indeg[b] -= 1;
                    if indeg[b] == 0 {
                        stack.push(b);
                    }
                }
            }
        }
        seen < k
    }

    fn go(i: usize, used: usize, t: usize, class: &mut [usize], arc: &dyn Fn(usize, usize) -> bool) -> bool {
        if i == class.len() {
            return true;
        }
        for c in 0..t.min(used + 1) {
            class[i] = c;
            let members: Vec<usize> = (0..=i).filter(|&j| class[j] == c).collect();
            if !has_cycle(&members, arc) && go(i + 1, used.max(c + 1), t, class, arc) {
                return true;
            }
        }
        class[i] = usize::MAX;
        false
    }
    go(0, 0, t, &mut class, &arc)
}

fn oracle_dimension_at_most(p: &Poset, t: usize) -> bool {
    reversible_in(p, &critical_pairs(p), t)
}

#[test]
fn incidence_poset_dimensions() {
    let p4 = incidence_poset(4).unwrap().poset;
    let p5 = incidence_poset(5).unwrap().poset;
    assert!(oracle_dimension_at_most(&p4, 3));
    assert!(!oracle_dimension_at_most(&p5, 3));
    assert!(oracle_dimension_at_most(&p5, 4));
    let b = Budget::unlimited();
    assert!(decide_dimension(&p4, 3, &b).unwrap().is_yes());
    assert!(!decide_dimension(&p5, 3, &b).unwrap().is_yes());
    let Decision::Yes(r) = decide_dimension(&p5, 4, &b).unwrap() else { panic!() };
    assert!(verify_realizer(&p5, &r).unwrap());
}

#[test]
fn dimension_agrees_with_alternating_cycles() {
    let b = Budget::unlimited();
    for n in 0..=5 {
        for p in all_posets(n) {
            for t in 1..=3 {
                assert_eq!(decide_dimension(&p, t, &b).unwrap().is_yes(), oracle_dimension_at_most(&p, t));
            }
        }
    }
    for k in 2..=4 {
        let s = standard_example(k).unwrap().poset;
        assert!(!oracle_dimension_at_most(&s, k - 1));
        assert!(oracle_dimension_at_most(&s, k));
    }
}

#[test]
fn s3_is_not_two_dimensional_by_extension_pairs() {
    let p = standard_example(3).unwrap().poset;
    let exts: Vec<Vec<usize>> =
        (0..6).permutations(6).filter(|s| s.iter().tuple_combinations().all(|(&x, &y)| !p.lt(y, x))).collect();
    let pos = |s: &[usize], x: usize| s.iter().position(|&y| y == x).unwrap();
    let realizes = |a: &[usize], b: &[usize]| {
        (0..6).all(|x| (0..6).all(|y| p.le(x, y) == (pos(a, x) <= pos(a, y) && pos(b, x) <= pos(b, y))))
    };
    assert!(!exts.iter().tuple_combinations().any(|(a, b)| realizes(a, b)));
}

fn brute_chromatic(g: &Digraph) -> usize {
    let n = g.nv();
    (0..=n)
        .find(|&k| {
            (0..k.max(1).pow(n as u32)).any(|code| {
                let color: Vec<usize> = (0..n).map(|v| code / k.max(1).pow(v as u32) % k.max(1)).collect();
                g.arcs().iter().all(|&(u, v)| color[u] != color[v])
            }) && (k > 0 || n == 0)
        })
        .unwrap()
}

#[test]
fn chromatic_number_matches_brute_force() {
    let mut r = rng(11);
    for _ in 0..60 {
        let nv = r.random_range(0..=7);
        let g = random_acyclic_digraph(nv, r.random_range(0.1..0.9), &mut r);
        assert_eq!(exact_chromatic_number(&g, &Budget::unlimited()).unwrap(), brute_chromatic(&g));
    }
}

#[test]
fn two_level_construction_sizes() {
    // V_k = C(s, r) r + s, E_k = C(s, r)(r + E_{k-1}), s = k(r-1)+1, r = V_{k-1}
    let (r, e1, k) = (2u64, 1u64, 2u64);
    let s = k * (r - 1) + 1;
    let c = (0..r).fold(1, |acc, i| acc * (s - i) / (i + 1));
    let inst = theorem6_construct(2, DEFAULT_MAX_EDGES).unwrap();
    assert_eq!(inst.g.nv() as u64, c * r + s);
    assert_eq!(inst.edges.len() as u64, c * (r + e1));
    assert_eq!(exact_chromatic_number(&inst.g, &Budget::unlimited()).unwrap(), brute_chromatic(&inst.g));
}

#[test]
fn arc_digraph_counts_two_paths() {
    let tournament = Digraph::new(4, (0..4).tuple_combinations()).unwrap();
    let a = tournament.arc_digraph();
    assert_eq!(a.nv(), 6);
    assert_eq!(a.arc_count(), 4);
    let mut r = rng(5);
    for _ in 0..30 {
        let g = random_acyclic_digraph(r.random_range(1..=9), 0.5, &mut r);
        let expected: usize =
            (0..g.nv()).map(|v| g.arcs().iter().filter(|a| a.1 == v).count() * g.out_neighbors(v).len()).sum();
        assert_eq!(g.arc_digraph().arc_count(), expected);
        assert_eq!(g.arc_digraph().nv(), g.arc_count());
    }
}

#[test]
fn incomparability_graph_shapes() {
    let s2 = standard_example(2).unwrap().poset;
    let g = incomparability_graph(&s2);
    assert_eq!(g.arc_count(), 4);
    assert!((0..4).all(|v| g.undirected_adjacency()[v].count_ones(..) == 2));
    assert_eq!(g.components().len(), 1);
    for n in 0..=5 {
        for p in all_posets(n) {
            assert_eq!(incomparability_graph(&p).arc_count(), n * n.saturating_sub(1) / 2 - p.strict_pair_count());
        }
    }
}

#[test]
fn stats_of_standard_example_three() {
    let s = stats(&standard_example(3).unwrap().poset);
    let strict = (0..6).tuple_combinations().filter(|&(x, y)| x < 3 && y >= 3 && y - 3 != x).count();
    assert_eq!((s.n, s.comparable_pairs, s.critical_pairs), (6, strict, 3));
}

/// Every pair of orders and every table, checked pair by pair.
fn brute_boolean_dimension_at_most(p: &Poset, d: usize) -> bool {
    let n = p.n();
    let perms: Vec<Vec<usize>> = (0..n).permutations(n).collect();
    let pos: Vec<Vec<usize>> = perms
        .iter()
        .map(|s| {
            let mut at = vec![0; n];
            s.iter().enumerate().for_each(|(i, &x)| at[x] = i);
            at
        })
        .collect();
    (0..d).map(|_| 0..perms.len()).multi_cartesian_product().any(|choice| {
        (0u32..1 << (1 << d)).any(|table| {
            (0..n).all(|x| {
                (0..n).all(|y| {
                    let idx = choice.iter().fold(0, |acc, &c| (acc << 1) | usize::from(pos[c][x] <= pos[c][y]));
                    (table >> idx & 1 == 1) == p.le(x, y)
                })
            })
        })
    })
}

#[test]
fn small_boolean_search_matches_brute_force() {
    for n in 0..=4 {
        for p in all_posets(n) {
            for d in 1..=2 {
                let got = decide_boolean_dimension_small(&p, d, &Budget::unlimited()).unwrap();
                assert_eq!(got.is_yes(), brute_boolean_dimension_at_most(&p, d), "n={n} d={d}");
            }
        }
    }
}
