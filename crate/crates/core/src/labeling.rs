//! Total labelings and the edge-magic / super edge-magic checks.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// A bijection `V ∪ E -> [1, p+q]`, stored as vertex labels (by vertex)
/// and edge labels (by edge index).
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TotalLabeling {
    pub vertex_labels: Vec<usize>,
    pub edge_labels: Vec<usize>,
}

/// A bijection `V -> [1, p]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexLabeling {
    pub vertex_labels: Vec<usize>,
}

impl TotalLabeling {
    pub fn new(vertex_labels: Vec<usize>, edge_labels: Vec<usize>) -> Self {
        Self {
            vertex_labels,
            edge_labels,
        }
    }

    /// Shape matches `g` and the labels are exactly `[1, p+q]`.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        if self.vertex_labels.len() != g.p() || self.edge_labels.len() != g.q() {
            return Err(Error::InvalidLabeling(format!(
                "expected {} vertex and {} edge labels, got {} and {}",
                g.p(),
                g.q(),
                self.vertex_labels.len(),
                self.edge_labels.len()
            )));
        }
        check_permutation(
            self.vertex_labels.iter().chain(&self.edge_labels),
            g.p() + g.q(),
        )
    }

    /// Vertex labels are exactly `[1, p]`.
    pub fn is_super(&self) -> bool {
        let p = self.vertex_labels.len();
        self.vertex_labels.iter().all(|&l| (1..=p).contains(&l))
    }

    /// Largest label that can appear, `p + q`.
    pub fn size(&self) -> usize {
        self.vertex_labels.len() + self.edge_labels.len()
    }
}

impl VertexLabeling {
    pub fn new(vertex_labels: Vec<usize>) -> Self {
        Self { vertex_labels }
    }

    pub fn validate(&self, g: &Graph) -> Result<()> {
        if self.vertex_labels.len() != g.p() {
            return Err(Error::InvalidLabeling(format!(
                "expected {} vertex labels, got {}",
                g.p(),
                self.vertex_labels.len()
            )));
        }
        check_permutation(self.vertex_labels.iter(), g.p())
    }
}

fn check_permutation<'a>(labels: impl Iterator<Item = &'a usize>, n: usize) -> Result<()> {
    let mut seen = vec![false; n + 1];
    for &l in labels {
        if l == 0 || l > n {
            return Err(Error::InvalidLabeling(format!("label {l} outside [1, {n}]")));
        }
        if std::mem::replace(&mut seen[l], true) {
            return Err(Error::InvalidLabeling(format!("label {l} used twice")));
        }
    }
    Ok(())
}

/// The common edge sum `f(u) + f(e) + f(v)` (a loop at `v` contributes
/// `2 f(v) + f(e)`), or `None` if the sums differ or there are no edges.
pub fn valence_of(g: &Graph, f: &TotalLabeling) -> Result<Option<usize>> {
    f.validate(g)?;
    let mut sums = g
        .edges()
        .iter()
        .zip(&f.edge_labels)
        .map(|(&(u, v), &e)| f.vertex_labels[u - 1] + e + f.vertex_labels[v - 1]);
    let Some(first) = sums.next() else {
        return Ok(None);
    };
    Ok(sums.all(|s| s == first).then_some(first))
}

/// As [`valence_of`], additionally requiring `f(V) = [1, p]`.
pub fn is_super_edge_magic(g: &Graph, f: &TotalLabeling) -> Result<Option<usize>> {
    let k = valence_of(g, f)?;
    Ok(k.filter(|_| f.is_super()))
}

/// Endpoint-label sums per edge, in edge order; a loop gives `2 g(v)`.
pub fn induced_sums(g: &Graph, labels: &VertexLabeling) -> Result<Vec<usize>> {
    labels.validate(g)?;
    Ok(sums_unchecked(g, &labels.vertex_labels))
}

pub(crate) fn sums_unchecked(g: &Graph, vertex_labels: &[usize]) -> Vec<usize> {
    g.edges()
        .iter()
        .map(|&(u, v)| vertex_labels[u - 1] + vertex_labels[v - 1])
        .collect()
}

/// If the induced sums are `q` distinct consecutive integers, the unique
/// super edge-magic extension: the edge with sum `s` gets
/// `p + q + min S - s`, and the valence is `p + q + min S`.
pub fn extend_vertex_labeling(g: &Graph, labels: &VertexLabeling) -> Result<Option<TotalLabeling>> {
    let sums = induced_sums(g, labels)?;
    let Some(&min) = sums.iter().min() else {
        return Ok(None);
    };
    let q = g.q();
    let mut hit = vec![false; q];
    for &s in &sums {
        let off = s - min;
        if off >= q || std::mem::replace(&mut hit[off], true) {
            return Ok(None);
        }
    }
    let top = g.p() + q + min;
    Ok(Some(TotalLabeling {
        vertex_labels: labels.vertex_labels.clone(),
        edge_labels: sums.iter().map(|&s| top - s).collect(),
    }))
}

/// `x -> p + q + 1 - f(x)`; maps valence `k` to `3(p+q+1) - k`.
pub fn complement(g: &Graph, f: &TotalLabeling) -> Result<TotalLabeling> {
    f.validate(g)?;
    let top = g.p() + g.q() + 1;
    Ok(TotalLabeling {
        vertex_labels: f.vertex_labels.iter().map(|&l| top - l).collect(),
        edge_labels: f.edge_labels.iter().map(|&l| top - l).collect(),
    })
}
