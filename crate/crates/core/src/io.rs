//! Line-oriented text formats. `#` starts a comment; blank lines are ignored.
//!
//! ```text
//! p <n> <m>           poset or digraph header, then m lines
//! e <u> <v>           cover u < v (or arc u -> v for a digraph)
//! l <id> <label>      optional element label
//!
//! r <d>               realizer: d lines of n ids, low to high
//!
//! b <d>               boolean realizer: d order lines, then either
//! 0110...             2^d bits, lexicographic in α with α_1 most significant
//! f 1 ; 2 -3 ; ...    or a CNF: clauses split by ';', literals 1-based, '-' negates
//!
//! l <t>               local realizer: t lines
//! <k> <id_1> ... <id_k>
//! ```

use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::formula::{BooleanFormula, Cnf, Literal, TruthTable};
use crate::poset::{Digraph, Poset};
use crate::realizer::{BooleanRealizer, LinearOrder, LocalRealizer, PartialLinearExtension, Realizer};

struct Lines<'a> {
    items: Vec<(usize, &'a str)>,
    next: usize,
}

impl<'a> Lines<'a> {
    fn new(text: &'a str) -> Self {
        let items = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
            .filter(|(_, l)| !l.is_empty())
            .collect();
        Lines { items, next: 0 }
    }

    fn line(&mut self, what: &str) -> Result<(usize, &'a str)> {
        let last = self.items.last().map_or(1, |&(n, _)| n);
        let item = self.items.get(self.next).copied().ok_or_else(|| Error::parse(last, format!("missing {what}")))?;
        self.next += 1;
        Ok(item)
    }

    fn finish(&self) -> Result<()> {
        match self.items.get(self.next) {
            Some(&(n, l)) => Err(Error::parse(n, format!("unexpected line `{l}`"))),
            None => Ok(()),
        }
    }

    /// A header `<tag> <numbers...>` with exactly `count` numbers.
    fn header(&mut self, tag: &str, count: usize) -> Result<(usize, Vec<usize>)> {
        let (n, l) = self.line(&format!("`{tag}` header"))?;
        let mut words = l.split_whitespace();
        if words.next() != Some(tag) {
            return Err(Error::parse(n, format!("expected `{tag}` header, found `{l}`")));
        }
        let nums = numbers(n, words)?;
        if nums.len() != count {
            return Err(Error::parse(n, format!("`{tag}` header takes {count} numbers")));
        }
        Ok((n, nums))
    }
}

fn number(line: usize, w: &str) -> Result<usize> {
    w.parse().map_err(|_| Error::parse(line, format!("`{w}` is not a non-negative integer")))
}

fn numbers<'a>(line: usize, words: impl Iterator<Item = &'a str>) -> Result<Vec<usize>> {
    words.map(|w| number(line, w)).collect()
}

type CoversAndLabels = (Vec<(usize, usize)>, BTreeMap<usize, String>);

fn covers_and_labels(lines: &mut Lines, n: usize, m: usize) -> Result<CoversAndLabels> {
    let mut arcs = Vec::with_capacity(m);
    let mut labels = BTreeMap::new();
    while let Some(&(ln, l)) = lines.items.get(lines.next) {
        let (tag, rest) = l.split_once(char::is_whitespace).unwrap_or((l, ""));
        match tag {
            "e" => {
                let uv = numbers(ln, rest.split_whitespace())?;
                let [u, v] = uv[..] else {
                    return Err(Error::parse(ln, "`e` takes two ids"));
                };
                if u >= n || v >= n {
                    return Err(Error::parse(ln, format!("id out of range 0..{n}")));
                }
                arcs.push((u, v));
            }
            "l" => {
                let (id, label) = rest.trim().split_once(char::is_whitespace).unwrap_or((rest.trim(), ""));
                let id = number(ln, id)?;
                if id >= n {
                    return Err(Error::parse(ln, format!("id out of range 0..{n}")));
                }
                if label.trim().is_empty() {
                    return Err(Error::parse(ln, "empty label"));
                }
                labels.insert(id, label.trim().to_string());
            }
            _ => break,
        }
        lines.next += 1;
    }
    if arcs.len() != m {
        let ln = lines.items.last().map_or(1, |&(n, _)| n);
        return Err(Error::parse(ln, format!("header promises {m} `e` lines, found {}", arcs.len())));
    }
    Ok((arcs, labels))
}

pub fn parse_poset(text: &str) -> Result<Poset> {
    let mut lines = Lines::new(text);
    let (_, h) = lines.header("p", 2)?;
    let (covers, labels) = covers_and_labels(&mut lines, h[0], h[1])?;
    lines.finish()?;
    Ok(Poset::from_covers(h[0], &covers)?.with_labels(labels))
}

/// Canonical form: Hasse covers sorted, then labels by id.
pub fn write_poset(p: &Poset) -> String {
    let covers = p.covers();
    let mut out = format!("p {} {}\n", p.n(), covers.len());
    for (u, v) in covers {
        let _ = writeln!(out, "e {u} {v}");
    }
    for (id, label) in p.labels() {
        let _ = writeln!(out, "l {id} {label}");
    }
    out
}

pub fn parse_digraph(text: &str) -> Result<Digraph> {
    let mut lines = Lines::new(text);
    let (_, h) = lines.header("p", 2)?;
    let (arcs, _) = covers_and_labels(&mut lines, h[0], h[1])?;
    lines.finish()?;
    Digraph::new(h[0], arcs)
}

pub fn write_digraph(g: &Digraph) -> String {
    let mut out = format!("p {} {}\n", g.nv(), g.arc_count());
    for (u, v) in g.arcs() {
        let _ = writeln!(out, "e {u} {v}");
    }
    out
}

fn order_line(lines: &mut Lines) -> Result<LinearOrder> {
    let (n, l) = lines.line("order line")?;
    LinearOrder::new(numbers(n, l.split_whitespace())?).map_err(|e| Error::parse(n, e.to_string()))
}

fn write_seq(out: &mut String, seq: &[usize]) {
    let words: Vec<String> = seq.iter().map(usize::to_string).collect();
    let _ = writeln!(out, "{}", words.join(" "));
}

pub fn parse_realizer(text: &str) -> Result<Realizer> {
    let mut lines = Lines::new(text);
    let (n, h) = lines.header("r", 1)?;
    let orders = (0..h[0]).map(|_| order_line(&mut lines)).collect::<Result<Vec<_>>>()?;
    lines.finish()?;
    Realizer::new(orders).map_err(|e| Error::parse(n, e.to_string()))
}

pub fn write_realizer(r: &Realizer) -> String {
    let mut out = format!("r {}\n", r.size());
    for o in r.orders() {
        write_seq(&mut out, o.seq());
    }
    out
}

fn parse_cnf(line: usize, arity: usize, body: &str) -> Result<Cnf> {
    let clauses = body
        .split(';')
        .map(|clause| {
            clause
                .split_whitespace()
                .map(|w| {
                    let (neg, digits) = w.strip_prefix('-').map_or((false, w), |d| (true, d));
                    let v = number(line, digits)?;
                    if v == 0 || v > arity {
                        return Err(Error::parse(line, format!("literal `{w}` outside 1..={arity}")));
                    }
                    Ok(if neg { Literal::neg(v - 1) } else { Literal::pos(v - 1) })
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    Cnf::new(arity, clauses).map_err(|e| Error::parse(line, e.to_string()))
}

pub fn parse_boolean_realizer(text: &str) -> Result<BooleanRealizer> {
    let mut lines = Lines::new(text);
    let (hn, h) = lines.header("b", 1)?;
    let d = h[0];
    let orders = (0..d).map(|_| order_line(&mut lines)).collect::<Result<Vec<_>>>()?;
    let (n, l) = lines.line("formula line")?;
    let phi: BooleanFormula = if let Some(body) = l.strip_prefix("f ").or_else(|| (l == "f").then_some("")) {
        parse_cnf(n, d, body)?.into()
    } else {
        let bits = l
            .chars()
            .filter(|c| !c.is_whitespace())
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                _ => Err(Error::parse(n, format!("`{c}` in truth table"))),
            })
            .collect::<Result<Vec<_>>>()?;
        TruthTable::new(d, &bits).map_err(|e| Error::parse(n, e.to_string()))?.into()
    };
    lines.finish()?;
    BooleanRealizer::new(orders, phi).map_err(|e| Error::parse(hn, e.to_string()))
}

pub fn write_boolean_realizer(br: &BooleanRealizer) -> String {
    let mut out = format!("b {}\n", br.size());
    for o in br.orders() {
        write_seq(&mut out, o.seq());
    }
    match br.phi() {
        BooleanFormula::Table(t) => {
            let _ = writeln!(out, "{}", t.to_bit_string());
        }
        BooleanFormula::Cnf(c) => {
            let clauses: Vec<String> = c
                .clauses()
                .iter()
                .map(|cl| {
                    cl.iter()
                        .map(|l| format!("{}{}", if l.negated { "-" } else { "" }, l.var + 1))
                        .collect::<Vec<_>>()
                        .join(" ")
                })
                .collect();
            let _ = writeln!(out, "f {}", clauses.join(" ; "));
        }
    }
    out
}

pub fn parse_local_realizer(text: &str) -> Result<LocalRealizer> {
    parse_ple_list(text).map(LocalRealizer::new)
}

/// The members of a local-realizer file in file order, without sorting.
pub fn parse_ple_list(text: &str) -> Result<Vec<PartialLinearExtension>> {
    let mut lines = Lines::new(text);
    let (_, h) = lines.header("l", 1)?;
    let ples = (0..h[0])
        .map(|_| {
            let (n, l) = lines.line("partial linear extension")?;
            let nums = numbers(n, l.split_whitespace())?;
            let (&k, ids) = nums.split_first().ok_or_else(|| Error::parse(n, "empty line"))?;
            if ids.len() != k {
                return Err(Error::parse(n, format!("length {k} but {} ids", ids.len())));
            }
            PartialLinearExtension::new(ids.to_vec()).map_err(|e| Error::parse(n, e.to_string()))
        })
        .collect::<Result<Vec<_>>>()?;
    lines.finish()?;
    Ok(ples)
}

pub fn write_local_realizer(lr: &LocalRealizer) -> String {
    write_ple_list(lr.ples())
}

pub fn write_ple_list(ples: &[PartialLinearExtension]) -> String {
    let mut out = format!("l {}\n", ples.len());
    for q in ples {
        let mut line = vec![q.len()];
        line.extend_from_slice(q.seq());
        write_seq(&mut out, &line);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{incidence_poset, standard_example};

    #[test]
    fn poset_with_comments_and_labels() {
        let text = "# S_2\np 4 2\ne 0 3   # a1 < b2\n\ne 1 2\nl 0 a1\nl 3 b 2\n";
        let p = parse_poset(text).unwrap();
        assert_eq!(p.strict_pair_count(), 2);
        assert_eq!(p.label(3), Some("b 2"));
        assert_eq!(parse_poset(&write_poset(&p)).unwrap(), p);
    }

    #[test]
    fn poset_errors() {
        assert!(matches!(parse_poset("p 2 2\ne 0 1\ne 1 0\n"), Err(Error::CycleDetected(_))));
        assert!(matches!(parse_poset("p 2 1\n"), Err(Error::Parse { .. })));
        assert!(matches!(parse_poset("p 2 1\ne 0 5\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_poset("q 2 0\n"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse_poset("p 2 0\nx\n"), Err(Error::Parse { line: 2, .. })));
    }

    #[test]
    fn non_cover_lines_are_closed() {
        let p = parse_poset("p 3 3\ne 0 1\ne 1 2\ne 0 2\n").unwrap();
        assert_eq!(write_poset(&p), "p 3 2\ne 0 1\ne 1 2\n");
    }

    #[test]
    fn certificates_round_trip() {
        let s4 = standard_example(4).unwrap();
        let text = write_realizer(&s4.realizer);
        assert_eq!(parse_realizer(&text).unwrap(), s4.realizer);
        let br = s4.boolean.unwrap();
        let text = write_boolean_realizer(&br);
        assert!(text.ends_with("0000000000000111\n"));
        assert_eq!(parse_boolean_realizer(&text).unwrap(), br);
        let lr = s4.local.unwrap();
        assert_eq!(parse_local_realizer(&write_local_realizer(&lr)).unwrap(), lr);
        let p5 = incidence_poset(5).unwrap();
        assert_eq!(parse_boolean_realizer(&write_boolean_realizer(&p5.boolean)).unwrap(), p5.boolean);
    }

    #[test]
    fn cnf_line() {
        let br = parse_boolean_realizer("b 3\n0 1\n1 0\n0 1\nf 1 ; 2 -3\n").unwrap();
        assert!(matches!(br.phi(), BooleanFormula::Cnf(_)));
        assert!(br.phi().eval(&[true, false, false]));
        assert!(!br.phi().eval(&[true, false, true]));
        assert_eq!(write_boolean_realizer(&br), "b 3\n0 1\n1 0\n0 1\nf 1 ; 2 -3\n");
        assert!(parse_boolean_realizer("b 1\n0\nf 2\n").is_err());
    }

    #[test]
    fn malformed_certificates() {
        assert!(matches!(parse_realizer("r 1\n0 0\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_boolean_realizer("b 1\n0 1\n101\n"), Err(Error::Parse { line: 3, .. })));
        assert!(matches!(parse_local_realizer("l 1\n3 0 1\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_local_realizer("l 2\n1 0\n"), Err(Error::Parse { .. })));
    }

    #[test]
    fn digraph_round_trip() {
        let g = parse_digraph("p 3 2\ne 0 1\ne 2 1\n").unwrap();
        assert_eq!(g.arc_count(), 2);
        assert_eq!(write_digraph(&g), "p 3 2\ne 0 1\ne 2 1\n");
    }
}
