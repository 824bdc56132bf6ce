//! Summary numbers for a poset.

use std::fmt;

use crate::poset::{critical_pairs, incomparability_graph, Poset};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PosetStats {
    pub n: usize,
    /// strict comparable pairs `x < y`
    pub comparable_pairs: usize,
    pub width: usize,
    pub height: usize,
    pub critical_pairs: usize,
    /// components of the incomparability graph
    pub components: usize,
}

pub fn stats(p: &Poset) -> PosetStats {
    PosetStats {
        n: p.n(),
        comparable_pairs: p.strict_pair_count(),
        width: p.width(),
        height: p.height(),
        critical_pairs: critical_pairs(p).len(),
        components: incomparability_graph(p).components().len(),
    }
}

impl fmt::Display for PosetStats {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "n                      {}", self.n)?;
        writeln!(f, "comparable pairs       {}", self.comparable_pairs)?;
        writeln!(f, "width                  {}", self.width)?;
        writeln!(f, "height                 {}", self.height)?;
        writeln!(f, "critical pairs         {}", self.critical_pairs)?;
        write!(f, "incomparability comps  {}", self.components)
    }
}
