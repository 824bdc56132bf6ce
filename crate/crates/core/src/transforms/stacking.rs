//! Width-2 local realizers become realizers of size at most 2.
//!
//! Inside one component of the incomparability graph every element sits in the
//! same two partial linear extensions, and those two, restricted to the
//! component, realize it. Components are totally ordered by `≤`, so the
//! pieces stack.

use crate::error::{Error, Result};
use crate::poset::{incomparability_graph, Poset};
use crate::realizer::{local_width, verify_local_realizer, verify_realizer, LinearOrder, LocalRealizer, Realizer};

pub fn local2_to_realizer(p: &Poset, lr: &LocalRealizer) -> Result<Realizer> {
    let width = local_width(lr);
    if width > 2 {
        return Err(Error::WidthTooLarge { width, max: 2 });
    }
    if !verify_local_realizer(p, lr)? {
        return Err(Error::NotALocalRealizer);
    }
    let n = p.n();
    let mut components = incomparability_graph(p).components();
    if components.iter().all(|c| c.len() == 1) {
        return Realizer::new(vec![LinearOrder::new(p.linear_extension())?]);
    }
    // all of one component lies below all of a later one
    let ext = LinearOrder::new(p.linear_extension())?;
    components.sort_by_key(|c| ext.position(c[0]));

    let mut first = Vec::with_capacity(n);
    let mut second = Vec::with_capacity(n);
    for comp in &components {
        if let [x] = comp[..] {
            first.push(x);
            second.push(x);
            continue;
        }
        let x = comp[0];
        let y = *comp.iter().find(|&&y| p.incomparable(x, y)).expect("components of size 2+ have an edge");
        let holding = |before: usize, after: usize| {
            lr.ples().iter().find(|q| {
                let s = q.seq();
                let pb = s.iter().position(|&e| e == before);
                let pa = s.iter().position(|&e| e == after);
                matches!((pb, pa), (Some(b), Some(a)) if b < a)
            })
        };
        let (Some(q1), Some(q2)) = (holding(x, y), holding(y, x)) else {
            return Err(Error::NotALocalRealizer);
        };
        for (q, out) in [(q1, &mut first), (q2, &mut second)] {
            let part: Vec<usize> = q.seq().iter().copied().filter(|e| comp.contains(e)).collect();
            if part.len() != comp.len() {
                return Err(Error::NotALocalRealizer);
            }
            out.extend(part);
        }
    }
    let r = Realizer::new(vec![LinearOrder::new(first)?, LinearOrder::new(second)?])?;
    if !verify_realizer(p, &r)? {
        return Err(Error::NotARealizer);
    }
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::realizer::PartialLinearExtension;

    fn ple(seq: &[usize]) -> PartialLinearExtension {
        PartialLinearExtension::new(seq.to_vec()).unwrap()
    }

    #[test]
    fn chain_gives_one_order() {
        let p = Poset::chain(4);
        let lr = LocalRealizer::new(vec![ple(&[0, 1, 2, 3])]);
        assert_eq!(local2_to_realizer(&p, &lr).unwrap().size(), 1);
    }

    #[test]
    fn antichain_of_two() {
        let p = Poset::antichain(2);
        let lr = LocalRealizer::new(vec![ple(&[0, 1]), ple(&[1, 0])]);
        let r = local2_to_realizer(&p, &lr).unwrap();
        assert_eq!(r.size(), 2);
        assert!(verify_realizer(&p, &r).unwrap());
    }

    #[test]
    fn stacked_antichains() {
        // {0, 1} below {2, 3}; one full order, each antichain reversed separately
        let p = Poset::from_covers(4, &[(0, 2), (0, 3), (1, 2), (1, 3)]).unwrap();
        let lr = LocalRealizer::new(vec![ple(&[0, 1, 2, 3]), ple(&[1, 0]), ple(&[3, 2])]);
        assert!(verify_local_realizer(&p, &lr).unwrap());
        let r = local2_to_realizer(&p, &lr).unwrap();
        assert_eq!(r.size(), 2);
        assert!(verify_realizer(&p, &r).unwrap());
    }

    #[test]
    fn errors() {
        let p = Poset::antichain(2);
        let wide = LocalRealizer::new(vec![ple(&[0, 1]), ple(&[1, 0]), ple(&[0])]);
        assert!(matches!(local2_to_realizer(&p, &wide), Err(Error::WidthTooLarge { width: 3, max: 2 })));
        let short = LocalRealizer::new(vec![ple(&[0, 1])]);
        assert!(matches!(local2_to_realizer(&p, &short), Err(Error::NotALocalRealizer)));
    }
}
