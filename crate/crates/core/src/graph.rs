//! Graph and digraph value types.
//!
//! Vertices are always named `1..=p`. Edges (arcs) are kept in insertion
//! order and addressed by their 1-based position, so parallel edges and
//! loops can be labeled independently.

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A finite undirected multigraph; loops and parallel edges are allowed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Graph {
    p: usize,
    edges: Vec<(usize, usize)>,
}

/// A finite directed multigraph; loops and parallel arcs are allowed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Digraph {
    p: usize,
    arcs: Vec<(usize, usize)>,
}

/// The two stable sets of a bipartite graph, each sorted ascending.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bipartition {
    pub x: Vec<usize>,
    pub y: Vec<usize>,
}

fn check_endpoints(p: usize, pairs: &[(usize, usize)]) -> Result<()> {
    for (i, &(u, v)) in pairs.iter().enumerate() {
        if u == 0 || v == 0 || u > p || v > p {
            return Err(Error::InvalidGraph(format!(
                "edge {} = ({u}, {v}) has an endpoint outside [1, {p}]",
                i + 1
            )));
        }
    }
    Ok(())
}

impl Graph {
    pub fn new(p: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        check_endpoints(p, &edges)?;
        Ok(Self { p, edges })
    }

    pub fn empty(p: usize) -> Self {
        Self { p, edges: Vec::new() }
    }

    /// Order.
    pub fn p(&self) -> usize {
        self.p
    }

    /// Size.
    pub fn q(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Endpoints of the 1-based edge `index`.
    pub fn edge(&self, index: usize) -> (usize, usize) {
        self.edges[index - 1]
    }

    /// Number of incident edge ends; a loop counts twice.
    pub fn degree(&self, v: usize) -> usize {
        self.edges
            .iter()
            .map(|&(a, b)| usize::from(a == v) + usize::from(b == v))
            .sum()
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.p];
        for &(a, b) in &self.edges {
            deg[a - 1] += 1;
            deg[b - 1] += 1;
        }
        deg
    }

    pub fn has_loops(&self) -> bool {
        self.edges.iter().any(|&(a, b)| a == b)
    }

    /// No loops and no parallel edges.
    pub fn is_simple(&self) -> bool {
        if self.has_loops() {
            return false;
        }
        let mut seen: Vec<(usize, usize)> = self.edges.iter().map(|&e| normalize(e)).collect();
        seen.sort_unstable();
        seen.windows(2).all(|w| w[0] != w[1])
    }

    /// Sorted list of normalized edges; equal for graphs with the same
    /// edge multiset regardless of edge order or orientation of pairs.
    pub fn edge_multiset(&self) -> Vec<(usize, usize)> {
        let mut edges: Vec<_> = self.edges.iter().map(|&e| normalize(e)).collect();
        edges.sort_unstable();
        edges
    }

    /// Edge multiplicities, `adj[u-1][v-1]`; a loop adds one to the diagonal.
    pub fn adjacency_counts(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![vec![0; self.p]; self.p];
        for &(a, b) in &self.edges {
            adj[a - 1][b - 1] += 1;
            if a != b {
                adj[b - 1][a - 1] += 1;
            }
        }
        adj
    }

    /// Neighbour lists (with repetition for parallel edges).
    pub fn neighbours(&self) -> Vec<Vec<usize>> {
        let mut nbrs = vec![Vec::new(); self.p];
        for &(a, b) in &self.edges {
            nbrs[a - 1].push(b);
            if a != b {
                nbrs[b - 1].push(a);
            }
        }
        nbrs
    }

    /// Orients edge `i` as `(u, v)` if `forward[i]`, `(v, u)` otherwise.
    pub fn orient(&self, forward: &[bool]) -> Digraph {
        let arcs = self
            .edges
            .iter()
            .zip(forward)
            .map(|(&(a, b), &fw)| if fw { (a, b) } else { (b, a) })
            .collect();
        Digraph { p: self.p, arcs }
    }

    /// Orients every edge as it is stored.
    pub fn as_stored_orientation(&self) -> Digraph {
        Digraph {
            p: self.p,
            arcs: self.edges.clone(),
        }
    }
}

pub(crate) fn normalize((a, b): (usize, usize)) -> (usize, usize) {
    if a <= b {
        (a, b)
    } else {
        (b, a)
    }
}

impl Digraph {
    pub fn new(p: usize, arcs: Vec<(usize, usize)>) -> Result<Self> {
        check_endpoints(p, &arcs)?;
        Ok(Self { p, arcs })
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn q(&self) -> usize {
        self.arcs.len()
    }

    pub fn arcs(&self) -> &[(usize, usize)] {
        &self.arcs
    }

    /// Forgets orientation; arc `i` becomes edge `i`.
    pub fn underlying(&self) -> Graph {
        Graph {
            p: self.p,
            edges: self.arcs.clone(),
        }
    }
}

/// `und(D)`.
pub fn underlying(d: &Digraph) -> Graph {
    d.underlying()
}

/// The cycle `C_m` with edges `{i, i+1}` and `{m, 1}`.
pub fn mk_cycle(m: usize) -> Result<Graph> {
    if m < 3 {
        return Err(Error::InvalidGraph(format!("cycle needs m >= 3, got {m}")));
    }
    let edges = (1..=m).map(|i| (i, i % m + 1)).collect();
    Ok(Graph { p: m, edges })
}

/// `C_m` with every edge oriented `i -> i+1`.
pub fn mk_directed_cycle(m: usize) -> Result<Digraph> {
    Ok(mk_cycle(m)?.as_stored_orientation())
}

/// `K_{1,n}^l`: vertex 1 is the centre, leaves are `2..=n+1`, the loop
/// `{1,1}` is the last edge.
pub fn mk_star_with_loop(n: usize) -> Result<Graph> {
    if n < 1 {
        return Err(Error::InvalidGraph("star needs n >= 1".into()));
    }
    let mut edges: Vec<_> = (1..=n).map(|k| (1, k + 1)).collect();
    edges.push((1, 1));
    Ok(Graph { p: n + 1, edges })
}

/// The corona `C_m ⊙ K̄_n`. Cycle vertices are `1..=m`; vertex
/// `m + (i-1)n + j` is the `j`-th pendant of cycle vertex `i`. Cycle edges
/// come first, then the pendant edges in vertex order.
pub fn mk_crown(m: usize, n: usize) -> Result<Graph> {
    if n < 1 {
        return Err(Error::InvalidGraph("crown needs n >= 1".into()));
    }
    let mut g = mk_cycle(m)?;
    g.p = m * (n + 1);
    for i in 1..=m {
        for j in 1..=n {
            g.edges.push((i, m + (i - 1) * n + j));
        }
    }
    Ok(g)
}

/// `K_{s,t}` with `X = [1,s]`, `Y = [s+1, s+t]`; edges in row-major order.
pub fn mk_complete_bipartite(s: usize, t: usize) -> Result<Graph> {
    if s < 1 || t < 1 {
        return Err(Error::InvalidGraph("complete bipartite needs s, t >= 1".into()));
    }
    let edges = (1..=s)
        .flat_map(|x| (s + 1..=s + t).map(move |y| (x, y)))
        .collect();
    Ok(Graph { p: s + t, edges })
}

/// Two-colouring by breadth-first search. The first vertex of every
/// component (in vertex order) goes to `X`. `None` for graphs with a loop
/// or an odd cycle.
pub fn bipartition(g: &Graph) -> Option<Bipartition> {
    if g.has_loops() {
        return None;
    }
    let nbrs = g.neighbours();
    let mut side: Vec<Option<bool>> = vec![None; g.p];
    let mut queue = VecDeque::new();
    for start in 0..g.p {
        if side[start].is_some() {
            continue;
        }
        side[start] = Some(false);
        queue.push_back(start);
        while let Some(u) = queue.pop_front() {
            let s = side[u].unwrap();
            for &w in &nbrs[u] {
                match side[w - 1] {
                    None => {
                        side[w - 1] = Some(!s);
                        queue.push_back(w - 1);
                    }
                    Some(t) if t == s => return None,
                    Some(_) => {}
                }
            }
        }
    }
    let (mut x, mut y) = (Vec::new(), Vec::new());
    for (i, s) in side.into_iter().enumerate() {
        if s == Some(false) {
            x.push(i + 1);
        } else {
            y.push(i + 1);
        }
    }
    Some(Bipartition { x, y })
}

impl Bipartition {
    pub fn contains_x(&self, v: usize) -> bool {
        self.x.binary_search(&v).is_ok()
    }

    /// Sides are disjoint, cover `[1,p]`, and every edge crosses.
    pub fn is_valid_for(&self, g: &Graph) -> bool {
        let mut all: Vec<usize> = self.x.iter().chain(&self.y).copied().collect();
        all.sort_unstable();
        if all != (1..=g.p()).collect::<Vec<_>>() {
            return false;
        }
        g.edges()
            .iter()
            .all(|&(a, b)| self.contains_x(a) != self.contains_x(b))
    }
}
