//! Ordered 2-decompositions of bipartite graphs and the `S_{2n}` graphs
//! built from them.
//!
//! `S_{2n}(G; H1, H2)` adds `n` copies of each side of `G`; copy `k` of `y`
//! is joined to `x` for every edge `xy` of `H1`, and copy `k` of `x` is
//! joined to `y` for every edge `xy` of `H2`. Orienting `H1` from `X` to
//! `Y` and `H2` from `Y` to `X` turns `G` into a digraph whose product with
//! `K⃗_{1,n}^l` has `S_{2n}` as underlying graph, so every edge-magic
//! labeling of `G` induces one of `S_{2n}`.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{bipartition, normalize, Bipartition, Digraph, Graph};
use crate::iso::transport_labeling;
use crate::labeling::{is_super_edge_magic, valence_of, TotalLabeling};
use crate::product::{induced_labeling_spk, star_loop_labeling, tensor_h, ArcAssignment, LabeledDigraph};
use crate::search::{spectrum, SearchConfig, SpectrumKind};

/// An ordered split `(H1, H2)` of the edges of `base`, by 1-based edge index.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Decomposition {
    #[serde(skip)]
    pub base: Graph,
    pub part1_edges: BTreeSet<usize>,
    pub part2_edges: BTreeSet<usize>,
}

/// True iff the two index sets partition `[1, q]`.
pub fn check_decomposition(g: &Graph, part1: &BTreeSet<usize>, part2: &BTreeSet<usize>) -> bool {
    part1.is_disjoint(part2)
        && part1.len() + part2.len() == g.q()
        && part1.iter().chain(part2).all(|&i| (1..=g.q()).contains(&i))
}

impl Decomposition {
    pub fn new(g: &Graph, part1: BTreeSet<usize>, part2: BTreeSet<usize>) -> Result<Self> {
        if !check_decomposition(g, &part1, &part2) {
            return Err(Error::InvalidDecomposition(
                "edge sets do not partition the edges".into(),
            ));
        }
        Ok(Self {
            base: g.clone(),
            part1_edges: part1,
            part2_edges: part2,
        })
    }

    /// `H2` is everything not in `part1`.
    pub fn from_part1(g: &Graph, part1: impl IntoIterator<Item = usize>) -> Result<Self> {
        let part1: BTreeSet<usize> = part1.into_iter().collect();
        let part2 = (1..=g.q()).filter(|i| !part1.contains(i)).collect();
        Self::new(g, part1, part2)
    }

    pub fn in_part1(&self, edge: usize) -> bool {
        self.part1_edges.contains(&edge)
    }
}

/// Arc `i` is `(x, y)` when edge `i` is in `H1` and `(y, x)` when in `H2`.
pub fn orient_for_decomposition(g: &Graph, bip: &Bipartition, d: &Decomposition) -> Result<Digraph> {
    if !bip.is_valid_for(g) {
        return Err(Error::NotBipartite);
    }
    if !check_decomposition(g, &d.part1_edges, &d.part2_edges) {
        return Err(Error::InvalidDecomposition("not a partition of the edges".into()));
    }
    let forward: Vec<bool> = g
        .edges()
        .iter()
        .enumerate()
        .map(|(i, &(u, _))| bip.contains_x(u) == d.in_part1(i + 1))
        .collect();
    Ok(g.orient(&forward))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Side {
    X,
    Y,
}

/// Which vertex of `G` a vertex of `S_{2n}` copies; `copy == 0` is the
/// original.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct VertexRole {
    pub side: Side,
    pub copy: usize,
    pub original: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct S2nGraph {
    pub graph: Graph,
    pub n: usize,
    pub roles: Vec<VertexRole>,
}

/// Vertex number of copy `k` of `v` (copy 0 is `v` itself).
pub fn copy_vertex(p: usize, v: usize, k: usize) -> usize {
    k * p + v
}

fn require_s2n_input(g: &Graph, bip: &Bipartition, d: &Decomposition, n: usize) -> Result<()> {
    if !g.is_simple() {
        return Err(Error::NotSimple);
    }
    if !bip.is_valid_for(g) {
        return Err(Error::NotBipartite);
    }
    if !check_decomposition(g, &d.part1_edges, &d.part2_edges) {
        return Err(Error::InvalidDecomposition("not a partition of the edges".into()));
    }
    if n < 1 {
        return Err(Error::InvalidGraph("S_2n needs n >= 1".into()));
    }
    Ok(())
}

/// Builds `S_{2n}(G; H1, H2)`. Originals keep `1..=p`; copy `k` of `v` is
/// `k p + v`. Edges: those of `G`, then for each `k` the copy edges in
/// edge-index order.
pub fn build_s2n(g: &Graph, bip: &Bipartition, d: &Decomposition, n: usize) -> Result<S2nGraph> {
    require_s2n_input(g, bip, d, n)?;
    let p = g.p();
    let mut edges = g.edges().to_vec();
    for k in 1..=n {
        for (i, &(u, v)) in g.edges().iter().enumerate() {
            let (x, y) = if bip.contains_x(u) { (u, v) } else { (v, u) };
            edges.push(if d.in_part1(i + 1) {
                (x, copy_vertex(p, y, k))
            } else {
                (copy_vertex(p, x, k), y)
            });
        }
    }
    let roles = (0..=n)
        .flat_map(|copy| {
            (1..=p).map(move |original| VertexRole {
                side: if bip.contains_x(original) { Side::X } else { Side::Y },
                copy,
                original,
            })
        })
        .collect();
    Ok(S2nGraph {
        graph: Graph::new((n + 1) * p, edges)?,
        n,
        roles,
    })
}

/// `K⃗_{1,n}^l` with vertex set `[1, n+1]` and arcs `(1, k)`.
pub fn star_loop_digraph(n: usize) -> Digraph {
    Digraph::new(n + 1, (1..=n + 1).map(|k| (1, k)).collect()).expect("valid star")
}

/// The vertex map `(v, 1) -> v`, `(v, k+1) -> v^k` on the product of a
/// digraph of order `p` with `K⃗_{1,n}^l`, as `phi[idx-1]` for the product
/// vertex numbered `idx = (n+1)(v-1) + i`. `centre` is the member vertex
/// playing the role of `1`; the remaining ones map to copies in ascending
/// order.
pub fn lemma_map(p: usize, n: usize, centre: usize) -> Vec<usize> {
    let leaves: Vec<usize> = (1..=n + 1).filter(|&i| i != centre).collect();
    let mut phi = vec![0; p * (n + 1)];
    for v in 1..=p {
        phi[(n + 1) * (v - 1) + centre - 1] = v;
        for (t, &leaf) in leaves.iter().enumerate() {
            phi[(n + 1) * (v - 1) + leaf - 1] = copy_vertex(p, v, t + 1);
        }
    }
    phi
}

/// Does `phi` carry the edge multiset of `source` exactly onto `target`?
pub fn map_carries(source: &Graph, target: &Graph, phi: &[usize]) -> bool {
    crate::iso::is_isomorphism(source, target, phi)
}

/// Checks, edge for edge, that the explicit map sends
/// `und(G⃗ ⊗ K⃗_{1,n}^l)` onto `S_{2n}(G; H1, H2)`.
pub fn verify_s2n_iso(g: &Graph, bip: &Bipartition, d: &Decomposition, n: usize) -> Result<bool> {
    let s2n = build_s2n(g, bip, d, n)?;
    let oriented = orient_for_decomposition(g, bip, d)?;
    let product = tensor_h(&oriented, &[star_loop_digraph(n)], &vec![0; oriented.q()])?;
    Ok(map_carries(&product.underlying(), &s2n.graph, &lemma_map(g.p(), n, 1)))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct S2nLabeling {
    pub s2n: S2nGraph,
    pub labeling: TotalLabeling,
    pub predicted_valence: usize,
    pub verified_valence: Option<usize>,
    pub is_super: bool,
}

/// Carries the labeling induced on `G⃗ ⊗ K⃗_{1,n}^l` (with the star labeled
/// `f_r`) over to `S_{2n}` and re-verifies it there.
pub fn s2n_induced_labeling(
    g: &Graph,
    bip: &Bipartition,
    d: &Decomposition,
    n: usize,
    f: &TotalLabeling,
    r: usize,
) -> Result<S2nLabeling> {
    let s2n = build_s2n(g, bip, d, n)?;
    let oriented = orient_for_decomposition(g, bip, d)?;
    let factor = LabeledDigraph::new(oriented, f.clone())?;
    let member = star_loop_labeling(n, r)?;
    let h = ArcAssignment::constant(member, factor.digraph.q());
    let prod = induced_labeling_spk(&factor, &h)?;
    // the normalized star has its centre at vertex r
    let phi = lemma_map(g.p(), n, r);
    let labeling = transport_labeling(&prod.graph(), &s2n.graph, &phi, &prod.labeling)?;
    let verified_valence = valence_of(&s2n.graph, &labeling)?;
    let is_super = is_super_edge_magic(&s2n.graph, &labeling)?.is_some();
    Ok(S2nLabeling {
        s2n,
        labeling,
        predicted_valence: prod.predicted_valence,
        verified_valence,
        is_super,
    })
}

/// All ordered splits in binary-counting order: bit `i` of the counter
/// puts edge `i+1` in `H1`.
pub fn enumerate_2_decompositions(
    g: &Graph,
    include_empty: bool,
    cap: usize,
) -> Result<impl Iterator<Item = Decomposition> + '_> {
    let q = g.q();
    if q > cap || q >= usize::BITS as usize {
        return Err(Error::BudgetExceeded { size: q, cap });
    }
    let full = (1usize << q) - 1;
    Ok((0..=full)
        .filter(move |&mask| include_empty || (mask != 0 && mask != full))
        .map(move |mask| {
            let (part1, part2): (BTreeSet<usize>, BTreeSet<usize>) =
                (1..=q).partition(|&i| mask >> (i - 1) & 1 == 1);
            Decomposition {
                base: g.clone(),
                part1_edges: part1,
                part2_edges: part2,
            }
        }))
}

/// Default edge cap for [`enumerate_2_decompositions`].
pub const DEFAULT_SPLIT_CAP: usize = 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum TestVerdict {
    NoObstruction,
    Obstruction,
    NotApplicable,
    Inconclusive,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ObstructionTest {
    pub name: &'static str,
    pub verdict: TestVerdict,
    pub detail: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    NotS2nInstance,
    Obstruction,
    NoObstruction,
    Inconclusive,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ObstructionReport {
    pub verdict: Verdict,
    /// `H1` and `H2` as read off the copies, normalized and sorted.
    pub h1: Vec<(usize, usize)>,
    pub h2: Vec<(usize, usize)>,
    /// Whether `H1 ⊕ H2` is literally the edge multiset of `G`.
    pub partitions_edges: bool,
    pub tests: Vec<ObstructionTest>,
    pub reason: Option<String>,
}

/// Reads `H1`/`H2` off a candidate `G*` whose vertex `v` is declared to be
/// copy `roles[v-1].0` of vertex `roles[v-1].1` of `G`, then applies the
/// three contrapositive tests: existence of labelings, `|σ|` growth and
/// `|τ|` growth. Copies must correspond to originals by index.
pub fn obstruction_report(
    gstar: &Graph,
    roles: &[(usize, usize)],
    g: &Graph,
    n: usize,
    cfg: &SearchConfig,
) -> Result<ObstructionReport> {
    let p = g.p();
    if n < 1 {
        return Err(Error::MalformedPartition("n must be at least 1".into()));
    }
    if roles.len() != gstar.p() || gstar.p() != (n + 1) * p {
        return Err(Error::MalformedPartition(format!(
            "expected {} vertices with roles, got {} roles for {} vertices",
            (n + 1) * p,
            roles.len(),
            gstar.p()
        )));
    }
    let mut seen = vec![false; (n + 1) * p];
    for (v, &(copy, orig)) in roles.iter().enumerate() {
        if copy > n || orig == 0 || orig > p {
            return Err(Error::MalformedPartition(format!(
                "vertex {} has role ({copy}, {orig}) outside copies [0, {n}] x [1, {p}]",
                v + 1
            )));
        }
        if std::mem::replace(&mut seen[copy * p + orig - 1], true) {
            return Err(Error::MalformedPartition(format!(
                "role ({copy}, {orig}) assigned twice"
            )));
        }
    }
    let bip = bipartition(g).ok_or(Error::NotBipartite)?;

    let not_instance = |reason: String| ObstructionReport {
        verdict: Verdict::NotS2nInstance,
        h1: Vec::new(),
        h2: Vec::new(),
        partitions_edges: false,
        tests: Vec::new(),
        reason: Some(reason),
    };

    let mut base = Vec::new();
    let mut h1_by_copy = vec![Vec::new(); n + 1];
    let mut h2_by_copy = vec![Vec::new(); n + 1];
    for &(a, b) in gstar.edges() {
        let (ra, rb) = (roles[a - 1], roles[b - 1]);
        match (ra.0, rb.0) {
            (0, 0) => base.push(normalize((ra.1, rb.1))),
            (0, k) | (k, 0) if k > 0 => {
                let (orig0, origk) = if ra.0 == 0 { (ra.1, rb.1) } else { (rb.1, ra.1) };
                match (bip.contains_x(orig0), bip.contains_x(origk)) {
                    (true, false) => h1_by_copy[k].push(normalize((orig0, origk))),
                    (false, true) => h2_by_copy[k].push(normalize((orig0, origk))),
                    _ => {
                        return Ok(not_instance(format!(
                            "edge {{{a}, {b}}} joins two copies of the same side"
                        )))
                    }
                }
            }
            _ => {
                return Ok(not_instance(format!(
                    "edge {{{a}, {b}}} joins two non-original copies"
                )))
            }
        }
    }
    base.sort_unstable();
    if base != g.edge_multiset() {
        return Ok(not_instance("original vertices do not induce G".into()));
    }
    for list in h1_by_copy.iter_mut().chain(h2_by_copy.iter_mut()) {
        list.sort_unstable();
    }
    if h1_by_copy[1..].windows(2).any(|w| w[0] != w[1]) || h2_by_copy[1..].windows(2).any(|w| w[0] != w[1]) {
        return Ok(not_instance("copies do not all carry the same H1 and H2".into()));
    }
    let (h1, h2) = (h1_by_copy.swap_remove(1), h2_by_copy.swap_remove(1));
    let mut union: Vec<_> = h1.iter().chain(&h2).copied().collect();
    union.sort_unstable();
    let partitions_edges = union == g.edge_multiset();

    let tests = spectral_tests(gstar, g, n, cfg);
    let verdict = if tests.iter().any(|t| t.verdict == TestVerdict::Obstruction) {
        Verdict::Obstruction
    } else if tests.iter().any(|t| t.verdict == TestVerdict::Inconclusive) {
        Verdict::Inconclusive
    } else {
        Verdict::NoObstruction
    };
    Ok(ObstructionReport {
        verdict,
        h1,
        h2,
        partitions_edges,
        tests,
        reason: None,
    })
}

fn spectral_tests(gstar: &Graph, g: &Graph, n: usize, cfg: &SearchConfig) -> Vec<ObstructionTest> {
    let spec = |graph: &Graph, kind| spectrum(graph, kind, cfg).ok().map(|r| r.achieved.len());
    let (tau_g, sigma_g) = (spec(g, SpectrumKind::Em), spec(g, SpectrumKind::Sem));
    let (tau_s, sigma_s) = (spec(gstar, SpectrumKind::Em), spec(gstar, SpectrumKind::Sem));

    let inconclusive = |name| ObstructionTest {
        name,
        verdict: TestVerdict::Inconclusive,
        detail: "spectrum beyond search budget".into(),
    };
    let not_applicable = |name, why: &str| ObstructionTest {
        name,
        verdict: TestVerdict::NotApplicable,
        detail: why.into(),
    };
    let judge = |name, holds: bool, detail: String| ObstructionTest {
        name,
        verdict: if holds {
            TestVerdict::NoObstruction
        } else {
            TestVerdict::Obstruction
        },
        detail,
    };

    let existence = match (tau_g, tau_s, sigma_g, sigma_s) {
        (Some(tg), Some(ts), Some(sg), Some(ss)) => {
            if tg == 0 {
                not_applicable("labeling_existence", "G is not edge-magic")
            } else {
                let em_ok = ts > 0;
                let sem_ok = sg == 0 || ss > 0;
                judge(
                    "labeling_existence",
                    em_ok && sem_ok,
                    format!("G*: edge-magic {em_ok}, super edge-magic carried over {sem_ok}"),
                )
            }
        }
        _ => inconclusive("labeling_existence"),
    };
    let sem_growth = match (sigma_g, sigma_s) {
        (Some(0), _) => not_applicable("sigma_growth", "G is not super edge-magic"),
        (Some(sg), Some(ss)) => judge(
            "sigma_growth",
            ss >= (n + 1) * sg,
            format!("|sigma(G*)| = {ss}, required >= {}", (n + 1) * sg),
        ),
        _ => inconclusive("sigma_growth"),
    };
    let em_growth = match (tau_g, tau_s) {
        (Some(0), _) => not_applicable("tau_growth", "G is not edge-magic"),
        (Some(tg), Some(ts)) => judge(
            "tau_growth",
            ts >= (n + 1) * tg + 2,
            format!("|tau(G*)| = {ts}, required >= {}", (n + 1) * tg + 2),
        ),
        _ => inconclusive("tau_growth"),
    };
    vec![existence, sem_growth, em_growth]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{mk_complete_bipartite, mk_cycle};
    use crate::search::first_labeling;

    fn c4_split() -> (Graph, Bipartition, Decomposition) {
        let g = mk_cycle(4).unwrap();
        let bip = bipartition(&g).unwrap();
        let d = Decomposition::from_part1(&g, [1, 3]).unwrap();
        (g, bip, d)
    }

    #[test]
    fn decomposition_checks() {
        let k33 = mk_complete_bipartite(3, 3).unwrap();
        // perfect matching {x1y1, x2y2, x3y3} is edges 1, 5, 9
        let matching: BTreeSet<usize> = [1, 5, 9].into();
        let rest: BTreeSet<usize> = (1..=9).filter(|i| !matching.contains(i)).collect();
        assert!(check_decomposition(&k33, &rest, &matching));
        assert!(!check_decomposition(&k33, &[1, 2, 5].into(), &(2..=9).collect()));
        assert!(!check_decomposition(&k33, &[1].into(), &(3..=9).collect()));
    }

    #[test]
    fn orientation_follows_parts() {
        let (g, bip, d) = c4_split();
        let o = orient_for_decomposition(&g, &bip, &d).unwrap();
        assert_eq!(o.arcs(), &[(1, 2), (2, 3), (3, 4), (4, 1)]);
        let all_h1 = Decomposition::from_part1(&g, 1..=4).unwrap();
        let o = orient_for_decomposition(&g, &bip, &all_h1).unwrap();
        assert!(o.arcs().iter().all(|&(u, _)| bip.contains_x(u)));
        let k33 = mk_complete_bipartite(3, 3).unwrap();
        let kb = bipartition(&k33).unwrap();
        let split = Decomposition::from_part1(&k33, [2, 3, 4, 6, 7, 8]).unwrap();
        let o = orient_for_decomposition(&k33, &kb, &split).unwrap();
        assert_eq!(o.underlying().edge_multiset(), k33.edge_multiset());
        assert!(o.arcs().iter().any(|&(u, _)| !kb.contains_x(u)));
    }

    #[test]
    fn s2n_sizes() {
        let k33 = mk_complete_bipartite(3, 3).unwrap();
        let bip = bipartition(&k33).unwrap();
        let d = Decomposition::from_part1(&k33, [1, 5, 9]).unwrap();
        let s = build_s2n(&k33, &bip, &d, 1).unwrap();
        assert_eq!((s.graph.p(), s.graph.q()), (12, 18));
        let s = build_s2n(&k33, &bip, &d, 2).unwrap();
        assert_eq!((s.graph.p(), s.graph.q()), (18, 27));
        let (g, bip, d) = c4_split();
        let s = build_s2n(&g, &bip, &d, 1).unwrap();
        assert_eq!((s.graph.p(), s.graph.q()), (8, 8));
    }

    #[test]
    fn s2n_rejects_bad_input() {
        let c3 = mk_cycle(3).unwrap();
        let fake = Bipartition { x: vec![1], y: vec![2, 3] };
        let d = Decomposition::from_part1(&c3, [1]).unwrap();
        assert_eq!(build_s2n(&c3, &fake, &d, 1).unwrap_err(), Error::NotBipartite);
        let multi = Graph::new(2, vec![(1, 2), (1, 2)]).unwrap();
        let bip = Bipartition { x: vec![1], y: vec![2] };
        let d = Decomposition::from_part1(&multi, [1]).unwrap();
        assert_eq!(build_s2n(&multi, &bip, &d, 1).unwrap_err(), Error::NotSimple);
    }

    #[test]
    fn s2n_degrees() {
        for g in [mk_cycle(6).unwrap(), mk_complete_bipartite(2, 3).unwrap()] {
            let bip = bipartition(&g).unwrap();
            for d in enumerate_2_decompositions(&g, false, 20).unwrap().step_by(7) {
                for n in 1..=3 {
                    let s = build_s2n(&g, &bip, &d, n).unwrap();
                    let deg = s.graph.degrees();
                    let part_deg = |part: &BTreeSet<usize>, v: usize| {
                        part.iter().filter(|&&i| {
                            let (a, b) = g.edge(i);
                            a == v || b == v
                        }).count()
                    };
                    for v in 1..=g.p() {
                        let (own, other) = if bip.contains_x(v) {
                            (&d.part1_edges, &d.part2_edges)
                        } else {
                            (&d.part2_edges, &d.part1_edges)
                        };
                        assert_eq!(deg[v - 1], g.degree(v) + n * part_deg(own, v));
                        for k in 1..=n {
                            assert_eq!(deg[copy_vertex(g.p(), v, k) - 1], part_deg(other, v));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn lemma_map_examples() {
        let (g, bip, d) = c4_split();
        assert!(verify_s2n_iso(&g, &bip, &d, 1).unwrap());
        let k2 = mk_complete_bipartite(1, 1).unwrap();
        let kb = bipartition(&k2).unwrap();
        let d = Decomposition::new(&k2, [1].into(), BTreeSet::new()).unwrap();
        assert!(verify_s2n_iso(&k2, &kb, &d, 1).unwrap());
    }

    #[test]
    fn perturbed_target_is_rejected() {
        let (g, bip, d) = c4_split();
        let s = build_s2n(&g, &bip, &d, 1).unwrap();
        let oriented = orient_for_decomposition(&g, &bip, &d).unwrap();
        let product = tensor_h(&oriented, &[star_loop_digraph(1)], &[0; 4]).unwrap().underlying();
        let phi = lemma_map(4, 1, 1);
        assert!(map_carries(&product, &s.graph, &phi));
        let mut edges = s.graph.edges().to_vec();
        let last = edges.len() - 1;
        edges[last] = (edges[last].0, if edges[last].1 == 5 { 6 } else { 5 });
        let moved = Graph::new(s.graph.p(), edges).unwrap();
        assert!(!map_carries(&product, &moved, &phi));
    }

    #[test]
    fn split_counts() {
        let g = Graph::new(2, vec![(1, 2), (1, 2), (1, 2)]).unwrap();
        assert_eq!(enumerate_2_decompositions(&g, true, 20).unwrap().count(), 8);
        assert_eq!(enumerate_2_decompositions(&g, false, 20).unwrap().count(), 6);
        let c4 = mk_cycle(4).unwrap();
        assert_eq!(enumerate_2_decompositions(&c4, true, 20).unwrap().count(), 16);
        let k2 = mk_complete_bipartite(1, 1).unwrap();
        assert_eq!(enumerate_2_decompositions(&k2, false, 20).unwrap().count(), 0);
        assert!(enumerate_2_decompositions(&c4, true, 3).is_err());
        let first = enumerate_2_decompositions(&c4, true, 20).unwrap().nth(1).unwrap();
        assert_eq!(first.part1_edges, [1].into());
    }

    #[test]
    fn induced_s2n_labeling_verifies() {
        let (g, bip, d) = c4_split();
        let cfg = SearchConfig::default();
        let (k, f) = first_labeling(&g, SpectrumKind::Em, &cfg).unwrap().unwrap();
        for r in 1..=2 {
            let out = s2n_induced_labeling(&g, &bip, &d, 1, &f, r).unwrap();
            assert_eq!(out.verified_valence, Some(out.predicted_valence));
            assert_eq!(out.predicted_valence, 2 * (k - 3) + (r + 1) + 2);
        }
    }

    fn roles_of(s: &S2nGraph) -> Vec<(usize, usize)> {
        s.roles.iter().map(|r| (r.copy, r.original)).collect()
    }

    #[test]
    fn obstruction_on_valid_instance() {
        let (g, bip, d) = c4_split();
        let s = build_s2n(&g, &bip, &d, 1).unwrap();
        let rep = obstruction_report(&s.graph, &roles_of(&s), &g, 1, &SearchConfig::default()).unwrap();
        assert_eq!(rep.verdict, Verdict::NoObstruction);
        assert!(rep.partitions_edges);
        assert!(rep
            .tests
            .iter()
            .all(|t| matches!(t.verdict, TestVerdict::NoObstruction | TestVerdict::NotApplicable)));
    }

    #[test]
    fn obstruction_on_extra_cross_edge() {
        let (g, bip, d) = c4_split();
        let s = build_s2n(&g, &bip, &d, 1).unwrap();
        let mut edges = s.graph.edges().to_vec();
        edges.push((5, 7)); // two copies of X
        let bad = Graph::new(8, edges).unwrap();
        let rep = obstruction_report(&bad, &roles_of(&s), &g, 1, &SearchConfig::default()).unwrap();
        assert_eq!(rep.verdict, Verdict::NotS2nInstance);
    }

    #[test]
    fn obstruction_inconclusive_on_budget() {
        let (g, bip, d) = c4_split();
        let s = build_s2n(&g, &bip, &d, 1).unwrap();
        let rep = obstruction_report(&s.graph, &roles_of(&s), &g, 1, &SearchConfig::with_cap(10)).unwrap();
        assert_eq!(rep.verdict, Verdict::Inconclusive);
    }

    #[test]
    fn obstruction_malformed_partition() {
        let (g, bip, d) = c4_split();
        let s = build_s2n(&g, &bip, &d, 1).unwrap();
        let mut roles = roles_of(&s);
        roles[0] = roles[1];
        assert!(matches!(
            obstruction_report(&s.graph, &roles, &g, 1, &SearchConfig::default()),
            Err(Error::MalformedPartition(_))
        ));
    }
}
