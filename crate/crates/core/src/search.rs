//! Exhaustive valence spectra by backtracking.
//!
//! For a fixed candidate valence `k`, vertices are labeled one at a time
//! (highest degree first). As soon as both ends of an edge carry labels,
//! its label is forced to `k - f(u) - f(v)`; the branch dies if that value
//! is out of range or already taken. Candidates are independent and are
//! searched in parallel.

use std::collections::{BTreeMap, BTreeSet};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::intervals::{em_interval, sem_interval, IntervalReport};
use crate::labeling::TotalLabeling;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SpectrumKind {
    /// Super edge-magic: vertex labels `[1, p]`.
    Sem,
    /// Edge-magic.
    Em,
}

impl std::str::FromStr for SpectrumKind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "sem" => Ok(Self::Sem),
            "em" => Ok(Self::Em),
            other => Err(format!("unknown kind {other:?}, expected sem or em")),
        }
    }
}

#[derive(Debug, Clone)]
pub struct SearchConfig {
    /// Largest `p + q` the search accepts.
    pub cap: usize,
    /// Forces the first vertex in search order to carry the smallest vertex
    /// label. Only sound when the automorphism group is vertex transitive.
    pub break_symmetry: bool,
    pub parallel: bool,
}

impl Default for SearchConfig {
    fn default() -> Self {
        Self {
            cap: 16,
            break_symmetry: false,
            parallel: true,
        }
    }
}

impl SearchConfig {
    pub fn with_cap(cap: usize) -> Self {
        Self {
            cap,
            ..Self::default()
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SpectrumReport {
    pub kind: SpectrumKind,
    pub interval: IntervalReport,
    pub achieved: BTreeSet<usize>,
    pub witnesses: BTreeMap<usize, TotalLabeling>,
    pub perfect: bool,
}

/// Per-valence search state. `closing[t]` lists the edges whose later
/// endpoint (in search order) is `order[t]`, with the other endpoint.
struct Backtracker<'g> {
    order: Vec<usize>,
    closing: Vec<Vec<(usize, usize)>>,
    vertex_range: (usize, usize),
    edge_range: (usize, usize),
    break_symmetry: bool,
    graph: &'g Graph,
}

struct State {
    k: usize,
    used: Vec<bool>,
    vertex: Vec<usize>,
    edge: Vec<usize>,
}

impl<'g> Backtracker<'g> {
    fn new(g: &'g Graph, kind: SpectrumKind, break_symmetry: bool) -> Self {
        let (p, q) = (g.p(), g.q());
        let deg = g.degrees();
        let mut order: Vec<usize> = (0..p).collect();
        order.sort_by_key(|&v| std::cmp::Reverse(deg[v]));
        let mut position = vec![0; p];
        for (t, &v) in order.iter().enumerate() {
            position[v] = t;
        }
        let mut closing = vec![Vec::new(); p];
        for (i, &(a, b)) in g.edges().iter().enumerate() {
            let (a, b) = (a - 1, b - 1);
            let (late, early) = if position[a] >= position[b] { (a, b) } else { (b, a) };
            closing[position[late]].push((i, early));
        }
        let (vertex_range, edge_range) = match kind {
            SpectrumKind::Em => ((1, p + q), (1, p + q)),
            SpectrumKind::Sem => ((1, p), (p + 1, p + q)),
        };
        Self {
            order,
            closing,
            vertex_range,
            edge_range,
            break_symmetry,
            graph: g,
        }
    }

    fn solve(&self, k: usize) -> Option<TotalLabeling> {
        let n = self.graph.p() + self.graph.q();
        let mut st = State {
            k,
            used: vec![false; n + 1],
            vertex: vec![0; self.graph.p()],
            edge: vec![0; self.graph.q()],
        };
        self.descend(0, &mut st).then_some(TotalLabeling {
            vertex_labels: st.vertex,
            edge_labels: st.edge,
        })
    }

    fn descend(&self, t: usize, st: &mut State) -> bool {
        let Some(&v) = self.order.get(t) else {
            return true;
        };
        let (lo, hi) = self.vertex_range;
        let lo = if self.break_symmetry && t > 0 {
            lo.max(st.vertex[self.order[0]] + 1)
        } else {
            lo
        };
        for label in lo..=hi {
            if st.used[label] {
                continue;
            }
            st.used[label] = true;
            st.vertex[v] = label;
            let forced = self.force_edges(t, st);
            if forced == self.closing[t].len() && self.descend(t + 1, st) {
                return true;
            }
            for &(e, _) in &self.closing[t][..forced] {
                st.used[st.edge[e]] = false;
                st.edge[e] = 0;
            }
            st.used[label] = false;
        }
        st.vertex[v] = 0;
        false
    }

    /// Labels the edges closed by `order[t]`; returns how many succeeded
    /// before the first conflict.
    fn force_edges(&self, t: usize, st: &mut State) -> usize {
        let v = self.order[t];
        let (lo, hi) = self.edge_range;
        for (done, &(e, other)) in self.closing[t].iter().enumerate() {
            let ends = st.vertex[v] + st.vertex[other];
            let ok = st.k > ends && {
                let label = st.k - ends;
                (lo..=hi).contains(&label) && !st.used[label]
            };
            if !ok {
                return done;
            }
            let label = st.k - ends;
            st.used[label] = true;
            st.edge[e] = label;
        }
        self.closing[t].len()
    }
}

fn check_budget(g: &Graph, cfg: &SearchConfig) -> Result<()> {
    if g.q() == 0 {
        return Err(Error::NoEdges);
    }
    let size = g.p() + g.q();
    if size > cfg.cap {
        return Err(Error::BudgetExceeded { size, cap: cfg.cap });
    }
    Ok(())
}

fn interval_for(g: &Graph, kind: SpectrumKind) -> Result<IntervalReport> {
    match kind {
        SpectrumKind::Em => em_interval(g),
        SpectrumKind::Sem => sem_interval(g),
    }
}

/// A labeling of the requested kind with valence `k`, if one exists.
pub fn find_labeling(
    g: &Graph,
    kind: SpectrumKind,
    k: usize,
    cfg: &SearchConfig,
) -> Result<Option<TotalLabeling>> {
    check_budget(g, cfg)?;
    Ok(Backtracker::new(g, kind, cfg.break_symmetry).solve(k))
}

/// The labeling of smallest valence, if `g` admits any of this kind.
pub fn first_labeling(
    g: &Graph,
    kind: SpectrumKind,
    cfg: &SearchConfig,
) -> Result<Option<(usize, TotalLabeling)>> {
    check_budget(g, cfg)?;
    let interval = interval_for(g, kind)?;
    let bt = Backtracker::new(g, kind, cfg.break_symmetry);
    Ok(interval
        .values()
        .find_map(|k| bt.solve(k).map(|f| (k, f))))
}

/// Every achievable valence of the given kind, one witness each.
pub fn spectrum(g: &Graph, kind: SpectrumKind, cfg: &SearchConfig) -> Result<SpectrumReport> {
    check_budget(g, cfg)?;
    let interval = interval_for(g, kind)?;
    let bt = Backtracker::new(g, kind, cfg.break_symmetry);
    let candidates: Vec<usize> = interval.values().collect();
    let found: Vec<(usize, Option<TotalLabeling>)> = if cfg.parallel {
        candidates.par_iter().map(|&k| (k, bt.solve(k))).collect()
    } else {
        candidates.iter().map(|&k| (k, bt.solve(k))).collect()
    };
    let witnesses: BTreeMap<usize, TotalLabeling> = found
        .into_iter()
        .filter_map(|(k, f)| f.map(|f| (k, f)))
        .collect();
    let achieved: BTreeSet<usize> = witnesses.keys().copied().collect();
    let perfect = !interval.is_empty() && achieved.len() == interval.len();
    Ok(SpectrumReport {
        kind,
        interval,
        achieved,
        witnesses,
        perfect,
    })
}

/// `τ_G` with witnesses.
pub fn em_spectrum(g: &Graph, cfg: &SearchConfig) -> Result<SpectrumReport> {
    spectrum(g, SpectrumKind::Em, cfg)
}

/// `σ_G` with witnesses.
pub fn sem_spectrum(g: &Graph, cfg: &SearchConfig) -> Result<SpectrumReport> {
    spectrum(g, SpectrumKind::Sem, cfg)
}

pub fn is_perfect_em(g: &Graph, cfg: &SearchConfig) -> Result<bool> {
    Ok(em_spectrum(g, cfg)?.perfect)
}

pub fn is_perfect_sem(g: &Graph, cfg: &SearchConfig) -> Result<bool> {
    Ok(sem_spectrum(g, cfg)?.perfect)
}

/// The valence a labeling of this kind is mapped to by the natural
/// involution: the complement `x -> p+q+1-x` for edge-magic labelings,
/// and `g(v) -> p+1-g(v)` on vertices for super edge-magic ones.
pub fn mirror_valence(g: &Graph, kind: SpectrumKind, k: usize) -> usize {
    let (p, q) = (g.p(), g.q());
    match kind {
        SpectrumKind::Em => 3 * (p + q + 1) - k,
        SpectrumKind::Sem => 4 * p + q + 3 - k,
    }
}
