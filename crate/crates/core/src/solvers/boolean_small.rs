//! Exhaustive boolean dimension at tiny scale.
//!
//! For a fixed tuple of orders the table is forced: every realized tuple must
//! map to the value of `≤` on the pairs realizing it, and a tuple realized by
//! both a comparable and a non-comparable pair rules the orders out. Unrealized
//! tuples are set to 0.

use itertools::Itertools;

use super::{Budget, Decision};
use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::poset::Poset;
use crate::realizer::{forced_table, BooleanRealizer, LinearOrder};

pub const MAX_SMALL_N: usize = 6;
pub const MAX_SMALL_ARITY: usize = 2;

pub fn decide_boolean_dimension_small(p: &Poset, d: usize, budget: &Budget) -> Result<Decision<BooleanRealizer>> {
    decide_boolean_dimension_small_with(p, d, budget, Exec::default())
}

/// Decides `bdim(p) <= d` for `n <= 6`, `d <= 2` by trying every multiset of
/// `d` orders. The witness is the first one in lexicographic order.
pub fn decide_boolean_dimension_small_with(
    p: &Poset,
    d: usize,
    budget: &Budget,
    exec: Exec,
) -> Result<Decision<BooleanRealizer>> {
    let n = p.n();
    if n > MAX_SMALL_N || d > MAX_SMALL_ARITY {
        return Err(Error::ScaleExceeded(format!(
            "exhaustive boolean search needs n <= {MAX_SMALL_N} and d <= {MAX_SMALL_ARITY}, got n = {n}, d = {d}"
        )));
    }
    let build = |chosen: &[&LinearOrder]| {
        forced_table(p, chosen).map(|t| {
            BooleanRealizer::new(chosen.iter().map(|&o| o.clone()).collect(), t.into()).expect("arity matches")
        })
    };
    if d == 0 {
        return Ok(build(&[]).map_or(Decision::No, Decision::Yes));
    }
    let perms: Vec<LinearOrder> = (0..n).permutations(n).map(|s| LinearOrder::new(s).expect("a permutation")).collect();
    let found = exec.find_first(perms.len(), |i| {
        if budget.check().is_err() {
            return Some(None);
        }
        let first = &perms[i];
        if d == 1 {
            return build(&[first]).map(Some);
        }
        perms[i..].iter().find_map(|second| build(&[first, second])).map(Some)
    });
    match found {
        Some(Some(br)) => Ok(Decision::Yes(br)),
        Some(None) => Err(budget.check().expect_err("budget ran out")),
        None => {
            budget.check()?;
            Ok(Decision::No)
        }
    }
}
