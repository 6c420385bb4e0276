//! Line-oriented text formats.
//!
//! ```text
//! # C4
//! p 4
//! e 1 2        # graph edge; digraphs use "a u v"
//! v 1 6        # vertex 1 gets label 6
//! e 1 5        # in a labeling: edge 1 gets label 5
//! ```
//!
//! A graph file holds `p` and `e` lines; a labeling file `v` and `e` lines;
//! a labeled digraph file `p`, `a`, `v` and `e` lines.

use std::fmt::Write;

use crate::error::{Error, Result};
use crate::graph::{Digraph, Graph};
use crate::labeling::TotalLabeling;
use crate::product::LabeledDigraph;

struct Line<'a> {
    number: usize,
    tag: &'a str,
    args: Vec<&'a str>,
}

fn lines(text: &str) -> impl Iterator<Item = Line<'_>> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let body = raw.split('#').next().unwrap_or("").trim();
        let mut words = body.split_whitespace();
        let tag = words.next()?;
        Some(Line {
            number: i + 1,
            tag,
            args: words.collect(),
        })
    })
}

fn err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

impl Line<'_> {
    fn ints<const N: usize>(&self) -> Result<[usize; N]> {
        if self.args.len() != N {
            return Err(err(
                self.number,
                format!("'{}' expects {N} integers, got {}", self.tag, self.args.len()),
            ));
        }
        let mut out = [0; N];
        for (slot, word) in out.iter_mut().zip(&self.args) {
            *slot = word
                .parse()
                .map_err(|_| err(self.number, format!("not a non-negative integer: {word:?}")))?;
        }
        Ok(out)
    }
}

#[derive(Default)]
struct Parsed {
    p: Option<usize>,
    pairs: Vec<(usize, usize)>,
    vertex_labels: Vec<(usize, usize, usize)>,
    edge_labels: Vec<(usize, usize, usize)>,
}

/// `pair_tag` is the tag of structural lines (`e` or `a`); with
/// `labels`, `v` and `e` lines are read as labels.
fn parse(text: &str, pair_tag: Option<&str>, labels: bool) -> Result<Parsed> {
    let mut out = Parsed::default();
    for line in lines(text) {
        match line.tag {
            "p" if pair_tag.is_some() => {
                let [p] = line.ints()?;
                if out.p.replace(p).is_some() {
                    return Err(err(line.number, "duplicate 'p' line"));
                }
            }
            tag if Some(tag) == pair_tag => {
                if out.p.is_none() {
                    return Err(err(line.number, "edge before 'p' line"));
                }
                let [u, v] = line.ints()?;
                let p = out.p.unwrap_or(0);
                if u == 0 || v == 0 || u > p || v > p {
                    return Err(err(line.number, format!("endpoint outside [1, {p}]")));
                }
                out.pairs.push((u, v));
            }
            "v" if labels => {
                let [v, l] = line.ints()?;
                out.vertex_labels.push((line.number, v, l));
            }
            "e" if labels => {
                let [e, l] = line.ints()?;
                out.edge_labels.push((line.number, e, l));
            }
            other => return Err(err(line.number, format!("unexpected line tag {other:?}"))),
        }
    }
    if pair_tag.is_some() && out.p.is_none() {
        return Err(err(0, "missing 'p' line"));
    }
    Ok(out)
}

fn fill(entries: &[(usize, usize, usize)], len: usize, what: &str) -> Result<Vec<usize>> {
    let mut out = vec![0; len];
    for &(line, index, label) in entries {
        if index == 0 || index > len {
            return Err(err(line, format!("{what} {index} outside [1, {len}]")));
        }
        if std::mem::replace(&mut out[index - 1], label) != 0 {
            return Err(err(line, format!("{what} {index} labeled twice")));
        }
    }
    if let Some(missing) = out.iter().position(|&l| l == 0) {
        return Err(err(0, format!("{what} {} has no label", missing + 1)));
    }
    Ok(out)
}

pub fn parse_graph(text: &str) -> Result<Graph> {
    let parsed = parse(text, Some("e"), false)?;
    Graph::new(parsed.p.unwrap_or(0), parsed.pairs)
}

pub fn parse_digraph(text: &str) -> Result<Digraph> {
    let parsed = parse(text, Some("a"), false)?;
    Digraph::new(parsed.p.unwrap_or(0), parsed.pairs)
}

/// Labels for a graph with `p` vertices and `q` edges. Shape is checked
/// here; bijectivity is left to the labeling checks.
pub fn parse_labeling(text: &str, p: usize, q: usize) -> Result<TotalLabeling> {
    let parsed = parse(text, None, true)?;
    Ok(TotalLabeling::new(
        fill(&parsed.vertex_labels, p, "vertex")?,
        fill(&parsed.edge_labels, q, "edge")?,
    ))
}

pub fn parse_labeled_digraph(text: &str) -> Result<LabeledDigraph> {
    let parsed = parse(text, Some("a"), true)?;
    let d = Digraph::new(parsed.p.unwrap_or(0), parsed.pairs)?;
    let labeling = TotalLabeling::new(
        fill(&parsed.vertex_labels, d.p(), "vertex")?,
        fill(&parsed.edge_labels, d.q(), "edge")?,
    );
    LabeledDigraph::new(d, labeling)
}

/// Arc-to-member map: lines `<arc-index> <member-index>`, both 1-based.
/// Returns 0-based member indices by arc.
pub fn parse_assignment(text: &str, arcs: usize) -> Result<Vec<usize>> {
    let mut out = vec![usize::MAX; arcs];
    for line in lines(text) {
        let arc: usize = line
            .tag
            .parse()
            .map_err(|_| err(line.number, format!("not an arc index: {:?}", line.tag)))?;
        let [member] = line.ints()?;
        if arc == 0 || arc > arcs || member == 0 {
            return Err(err(line.number, "arc or member index out of range"));
        }
        if std::mem::replace(&mut out[arc - 1], member - 1) != usize::MAX {
            return Err(err(line.number, format!("arc {arc} assigned twice")));
        }
    }
    if let Some(missing) = out.iter().position(|&m| m == usize::MAX) {
        return Err(err(0, format!("arc {} is not assigned", missing + 1)));
    }
    Ok(out)
}

pub fn write_graph(g: &Graph) -> String {
    let mut s = format!("p {}\n", g.p());
    for &(u, v) in g.edges() {
        writeln!(s, "e {u} {v}").unwrap();
    }
    s
}

pub fn write_digraph(d: &Digraph) -> String {
    let mut s = format!("p {}\n", d.p());
    for &(u, v) in d.arcs() {
        writeln!(s, "a {u} {v}").unwrap();
    }
    s
}

pub fn write_labeling(f: &TotalLabeling) -> String {
    let mut s = String::new();
    for (i, l) in f.vertex_labels.iter().enumerate() {
        writeln!(s, "v {} {l}", i + 1).unwrap();
    }
    for (i, l) in f.edge_labels.iter().enumerate() {
        writeln!(s, "e {} {l}", i + 1).unwrap();
    }
    s
}

pub fn write_labeled_digraph(f: &LabeledDigraph) -> String {
    write_digraph(&f.digraph) + &write_labeling(&f.labeling)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{mk_crown, mk_cycle};
    use crate::product::star_loop_labeling;

    #[test]
    fn graph_text() {
        let g = parse_graph("# square\np 4\ne 1 2\ne 2 3 # mid\n\ne 3 4\ne 4 1\n").unwrap();
        assert_eq!(g, mk_cycle(4).unwrap());
        let loops = parse_graph("p 1\ne 1 1\n").unwrap();
        assert!(loops.has_loops());
        let crown = mk_crown(4, 2).unwrap();
        assert_eq!(parse_graph(&write_graph(&crown)).unwrap(), crown);
    }

    #[test]
    fn graph_errors_carry_lines() {
        assert_eq!(
            parse_graph("p 3\ne 1 4\n").unwrap_err(),
            Error::Parse { line: 2, message: "endpoint outside [1, 3]".into() }
        );
        assert!(matches!(parse_graph("p 3\ne 1\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_graph("e 1 2\n"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse_graph("p 2\nx 1 2\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_graph("p 2\ne 1 -2\n"), Err(Error::Parse { line: 2, .. })));
        assert!(parse_graph("").is_err());
    }

    #[test]
    fn labeling_text() {
        let f = parse_labeling("v 1 1\nv 2 6\nv 3 2\nv 4 3\ne 1 5\ne 2 4\ne 3 7\ne 4 8\n", 4, 4).unwrap();
        assert_eq!(f.vertex_labels, vec![1, 6, 2, 3]);
        assert_eq!(parse_labeling(&write_labeling(&f), 4, 4).unwrap(), f);
        assert!(parse_labeling("v 1 1\n", 2, 0).is_err());
        assert!(matches!(
            parse_labeling("v 1 1\nv 1 2\n", 2, 0),
            Err(Error::Parse { line: 2, .. })
        ));
    }

    #[test]
    fn labeled_digraph_text() {
        let f = star_loop_labeling(3, 2).unwrap();
        let text = write_labeled_digraph(&f);
        assert_eq!(parse_labeled_digraph(&text).unwrap(), f);
    }

    #[test]
    fn assignment_text() {
        assert_eq!(parse_assignment("1 1\n2 2\n3 1\n", 3).unwrap(), vec![0, 1, 0]);
        assert!(parse_assignment("1 1\n", 2).is_err());
        assert!(parse_assignment("1 1\n1 2\n", 1).is_err());
    }
}
