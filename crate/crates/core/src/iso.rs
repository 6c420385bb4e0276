//! Small exact isomorphism search between multigraphs, and transport of
//! total labelings along a vertex bijection.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::graph::{normalize, Graph};
use crate::labeling::TotalLabeling;

/// Finds a bijection `phi` with `phi[v-1]` the image of vertex `v`, such
/// that edge multiplicities (loops included) are preserved.
pub fn find_isomorphism(a: &Graph, b: &Graph) -> Option<Vec<usize>> {
    if a.p() != b.p() || a.q() != b.q() {
        return None;
    }
    let (deg_a, deg_b) = (a.degrees(), b.degrees());
    let mut sa = deg_a.clone();
    let mut sb = deg_b.clone();
    sa.sort_unstable();
    sb.sort_unstable();
    if sa != sb {
        return None;
    }
    let (adj_a, adj_b) = (a.adjacency_counts(), b.adjacency_counts());

    // Connected order: each vertex after the first in its component has an
    // already-placed neighbour, which makes the adjacency check bite early.
    let nbrs = a.neighbours();
    let mut order = Vec::with_capacity(a.p());
    let mut placed = vec![false; a.p()];
    let mut by_degree: Vec<usize> = (0..a.p()).collect();
    by_degree.sort_by_key(|&v| std::cmp::Reverse(deg_a[v]));
    for &start in &by_degree {
        if placed[start] {
            continue;
        }
        placed[start] = true;
        let mut head = order.len();
        order.push(start);
        while head < order.len() {
            let u = order[head];
            head += 1;
            for &w in &nbrs[u] {
                if !placed[w - 1] {
                    placed[w - 1] = true;
                    order.push(w - 1);
                }
            }
        }
    }

    let mut map = vec![usize::MAX; a.p()];
    let mut used = vec![false; b.p()];
    let ctx = IsoCtx {
        order: &order,
        deg_a: &deg_a,
        deg_b: &deg_b,
        adj_a: &adj_a,
        adj_b: &adj_b,
    };
    if ctx.extend(0, &mut map, &mut used) {
        Some(map.into_iter().map(|v| v + 1).collect())
    } else {
        None
    }
}

struct IsoCtx<'a> {
    order: &'a [usize],
    deg_a: &'a [usize],
    deg_b: &'a [usize],
    adj_a: &'a [Vec<usize>],
    adj_b: &'a [Vec<usize>],
}

impl IsoCtx<'_> {
    fn extend(&self, depth: usize, map: &mut [usize], used: &mut [bool]) -> bool {
        let Some(&u) = self.order.get(depth) else {
            return true;
        };
        for cand in 0..used.len() {
            if used[cand]
                || self.deg_b[cand] != self.deg_a[u]
                || self.adj_b[cand][cand] != self.adj_a[u][u]
            {
                continue;
            }
            let consistent = self.order[..depth]
                .iter()
                .all(|&w| self.adj_a[u][w] == self.adj_b[cand][map[w]]);
            if !consistent {
                continue;
            }
            map[u] = cand;
            used[cand] = true;
            if self.extend(depth + 1, map, used) {
                return true;
            }
            used[cand] = false;
        }
        map[u] = usize::MAX;
        false
    }
}

/// Checks that `phi` maps the edge multiset of `a` exactly onto that of `b`.
pub fn is_isomorphism(a: &Graph, b: &Graph, phi: &[usize]) -> bool {
    if a.p() != b.p() || phi.len() != a.p() {
        return false;
    }
    let mut seen = vec![false; b.p()];
    for &v in phi {
        if v == 0 || v > b.p() || std::mem::replace(&mut seen[v - 1], true) {
            return false;
        }
    }
    let mut mapped: Vec<_> = a
        .edges()
        .iter()
        .map(|&(u, v)| normalize((phi[u - 1], phi[v - 1])))
        .collect();
    mapped.sort_unstable();
    mapped == b.edge_multiset()
}

/// Moves a labeling of `a` onto `b` along the isomorphism `phi`. Parallel
/// edges are matched in index order.
pub fn transport_labeling(
    a: &Graph,
    b: &Graph,
    phi: &[usize],
    f: &TotalLabeling,
) -> Result<TotalLabeling> {
    if !is_isomorphism(a, b, phi) {
        return Err(Error::InvalidGraph("map is not an isomorphism".into()));
    }
    let mut vertex_labels = vec![0; b.p()];
    for (v, &img) in phi.iter().enumerate() {
        vertex_labels[img - 1] = f.vertex_labels[v];
    }
    let mut slots: HashMap<(usize, usize), Vec<usize>> = HashMap::new();
    for (i, &e) in b.edges().iter().enumerate().rev() {
        slots.entry(normalize(e)).or_default().push(i);
    }
    let mut edge_labels = vec![0; b.q()];
    for (i, &(u, v)) in a.edges().iter().enumerate() {
        let key = normalize((phi[u - 1], phi[v - 1]));
        let j = slots
            .get_mut(&key)
            .and_then(Vec::pop)
            .expect("isomorphism checked above");
        edge_labels[j] = f.edge_labels[i];
    }
    Ok(TotalLabeling {
        vertex_labels,
        edge_labels,
    })
}
