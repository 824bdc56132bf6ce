//! Ruling out boolean realizers of the shift-graph poset.
//!
//! For a 2-path `uvw` of `G` the gadget of `v` puts `uv` above `vw`, so
//! `φ(α(uvw))` must be 0, with `α(uvw) = ((uv <_1 vw), ..., (uv <_d vw))`.
//! Along a 3-path `uvwx` the element `uv` lies below `wx`, so equal colors on
//! `uvw` and `vwx` make `(uv, wx)` carry a zero tuple too. Hence `α` properly
//! colors `G″`, which needs `χ(G″) <= 2^d`.

use crate::error::{Error, Result};
use crate::poset::Digraph;
use crate::realizer::BooleanRealizer;
use crate::solvers::{exact_chromatic_number, Budget};
use crate::thm6::Theorem6Instance;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RefutationOutcome {
    /// `φ(α(uvw)) = 1` although `uv ≰ vw`.
    PairViolation { path: [usize; 3], uv: usize, vw: usize, alpha: Vec<bool> },
    /// `α(uvw) = α(vwx) = α(uv, wx)`, `φ` of it is 0, yet `uv < wx`.
    QuadrupleViolation { path: [usize; 4], uv: usize, wx: usize, alpha: Vec<bool> },
    /// `α` is a proper coloring with at most `2^d` colors but `χ(G″)` is larger.
    ColoringBound { d: usize, chi: usize },
    /// None of the above applies.
    Consistent { chi: usize },
}

impl RefutationOutcome {
    pub fn is_refutation(&self) -> bool {
        !matches!(self, RefutationOutcome::Consistent { .. })
    }
}

/// `G″` and its chromatic number for one instance, reusable across candidates.
pub struct Refuter<'a> {
    inst: &'a Theorem6Instance,
    /// 2-paths as element pairs `(uv, vw)`.
    two_paths: Vec<(usize, usize)>,
    /// arcs of `G″` as indices into `two_paths`
    g2: Digraph,
    chi: usize,
}

impl<'a> Refuter<'a> {
    pub fn new(inst: &'a Theorem6Instance, budget: &Budget) -> Result<Self> {
        let m = inst.edges.len();
        let g1 = Digraph::new(
            m,
            (0..m).flat_map(|e| (0..m).map(move |f| (e, f))).filter(|&(e, f)| inst.edges[e].1 == inst.edges[f].0),
        )?;
        let g2 = g1.arc_digraph();
        let chi = exact_chromatic_number(&g2, budget)?;
        Ok(Refuter { inst, two_paths: g1.arcs().to_vec(), g2, chi })
    }

    /// The line digraph of the line digraph of `G`.
    pub fn second_arc_digraph(&self) -> &Digraph {
        &self.g2
    }

    pub fn chi(&self) -> usize {
        self.chi
    }

    pub fn refute(&self, br: &BooleanRealizer) -> Result<RefutationOutcome> {
        let inst = self.inst;
        let m = inst.edges.len();
        if let Some(o) = br.orders().iter().find(|o| o.len() != m) {
            return Err(Error::MalformedCandidate(format!("order over {} elements, expected {m}", o.len())));
        }
        let tuple = |e: usize, f: usize| -> Vec<bool> { br.orders().iter().map(|o| o.lt(e, f)).collect() };
        let phi = |a: &[bool]| br.phi().eval_with(|i| a[i]);
        let alphas: Vec<Vec<bool>> = self.two_paths.iter().map(|&(e, f)| tuple(e, f)).collect();

        for (t, &(uv, vw)) in self.two_paths.iter().enumerate() {
            if phi(&alphas[t]) && !inst.p.le(uv, vw) {
                let (u, v) = inst.edges[uv];
                let w = inst.edges[vw].1;
                return Ok(RefutationOutcome::PairViolation { path: [u, v, w], uv, vw, alpha: alphas[t].clone() });
            }
        }
        for &(s, t) in self.g2.arcs() {
            let (uv, _) = self.two_paths[s];
            let (_, wx) = self.two_paths[t];
            let alpha = &alphas[s];
            if alpha == &alphas[t] && !phi(alpha) && inst.p.lt(uv, wx) && &tuple(uv, wx) == alpha {
                let (u, v) = inst.edges[uv];
                let (w, x) = inst.edges[wx];
                return Ok(RefutationOutcome::QuadrupleViolation { path: [u, v, w, x], uv, wx, alpha: alpha.clone() });
            }
        }
        let d = br.size();
        let proper = self.g2.arcs().iter().all(|&(s, t)| alphas[s] != alphas[t]);
        if proper && d < usize::BITS as usize && (1usize << d) < self.chi {
            return Ok(RefutationOutcome::ColoringBound { d, chi: self.chi });
        }
        Ok(RefutationOutcome::Consistent { chi: self.chi })
    }
}

/// Checks one candidate; see [`Refuter`] to check many against one instance.
pub fn thm6_refute_boolean(
    inst: &Theorem6Instance,
    br: &BooleanRealizer,
    budget: &Budget,
) -> Result<RefutationOutcome> {
    Refuter::new(inst, budget)?.refute(br)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formula::TruthTable;
    use crate::realizer::LinearOrder;
    use crate::thm6::{theorem6_construct, DEFAULT_MAX_EDGES};

    fn table(d: usize, f: impl Fn(&[bool]) -> bool) -> crate::formula::BooleanFormula {
        TruthTable::from_fn(d, f).unwrap().into()
    }

    #[test]
    fn single_edge_is_consistent() {
        let inst = theorem6_construct(1, DEFAULT_MAX_EDGES).unwrap();
        let br = BooleanRealizer::new(vec![LinearOrder::identity(1)], table(1, |v| v[0])).unwrap();
        let out = thm6_refute_boolean(&inst, &br, &Budget::unlimited()).unwrap();
        assert_eq!(out, RefutationOutcome::Consistent { chi: 0 });
    }

    #[test]
    fn always_true_formula_is_a_pair_violation() {
        let inst = theorem6_construct(2, DEFAULT_MAX_EDGES).unwrap();
        let br = BooleanRealizer::new(vec![LinearOrder::identity(9)], table(1, |_| true)).unwrap();
        let out = thm6_refute_boolean(&inst, &br, &Budget::unlimited()).unwrap();
        let RefutationOutcome::PairViolation { uv, vw, .. } = out else { panic!("{out:?}") };
        assert!(!inst.p.le(uv, vw));
        assert_eq!(inst.edges[uv].1, inst.edges[vw].0);
    }

    #[test]
    fn second_arc_digraph_at_level_two() {
        let inst = theorem6_construct(2, DEFAULT_MAX_EDGES).unwrap();
        let r = Refuter::new(&inst, &Budget::unlimited()).unwrap();
        // one 2-path x -> u -> v per copy, no 3-paths
        assert_eq!((r.second_arc_digraph().nv(), r.second_arc_digraph().arc_count()), (3, 0));
        assert_eq!(r.chi(), 1);
    }

    #[test]
    fn malformed() {
        let inst = theorem6_construct(2, DEFAULT_MAX_EDGES).unwrap();
        let br = BooleanRealizer::new(vec![LinearOrder::identity(4)], table(1, |v| v[0])).unwrap();
        assert!(matches!(thm6_refute_boolean(&inst, &br, &Budget::unlimited()), Err(Error::MalformedCandidate(_))));
    }
}
