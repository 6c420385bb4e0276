//! The `⊗_h` product of a digraph with a family of labeled digraphs, and
//! the labelings it induces.
//!
//! Both induced labelings work on digraphs whose vertices are named after
//! their labels. [`LabeledDigraph::normalized`] performs that renaming and
//! keeps the permutation so results can be mapped back.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Digraph, Graph};
use crate::labeling::{
    extend_vertex_labeling, is_super_edge_magic, sums_unchecked, valence_of, TotalLabeling,
    VertexLabeling,
};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LabeledDigraph {
    pub digraph: Digraph,
    pub labeling: TotalLabeling,
}

impl LabeledDigraph {
    pub fn new(digraph: Digraph, labeling: TotalLabeling) -> Result<Self> {
        labeling.validate(&digraph.underlying())?;
        Ok(Self { digraph, labeling })
    }

    pub fn underlying(&self) -> Graph {
        self.digraph.underlying()
    }

    /// Renames vertex `v` to the rank of its label among all vertex labels
    /// (so a super edge-magic digraph ends up with vertex `i` labeled `i`).
    /// Returns the renamed digraph and `rename[v-1]`, the new name of `v`.
    pub fn normalized(&self) -> (LabeledDigraph, Vec<usize>) {
        let p = self.digraph.p();
        let mut by_label: Vec<usize> = (0..p).collect();
        by_label.sort_by_key(|&v| self.labeling.vertex_labels[v]);
        let mut rename = vec![0; p];
        for (rank, &v) in by_label.iter().enumerate() {
            rename[v] = rank + 1;
        }
        let arcs = self
            .digraph
            .arcs()
            .iter()
            .map(|&(a, b)| (rename[a - 1], rename[b - 1]))
            .collect();
        let vertex_labels = by_label
            .iter()
            .map(|&v| self.labeling.vertex_labels[v])
            .collect();
        let out = LabeledDigraph {
            digraph: Digraph::new(p, arcs).expect("renaming preserves endpoints"),
            labeling: TotalLabeling::new(vertex_labels, self.labeling.edge_labels.clone()),
        };
        (out, rename)
    }
}

/// `h: E(D) -> Γ`, with `assignment[i]` the (0-based) family index used
/// for arc `i+1` of `D`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArcAssignment {
    pub family: Vec<LabeledDigraph>,
    pub assignment: Vec<usize>,
}

impl ArcAssignment {
    /// Every arc of a digraph with `arcs` arcs goes to `member`.
    pub fn constant(member: LabeledDigraph, arcs: usize) -> Self {
        Self {
            family: vec![member],
            assignment: vec![0; arcs],
        }
    }

    pub fn digraphs(&self) -> Vec<Digraph> {
        self.family.iter().map(|m| m.digraph.clone()).collect()
    }

    pub fn tensor(&self, d: &Digraph) -> Result<Digraph> {
        tensor_h(d, &self.digraphs(), &self.assignment)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum FamilyClass {
    /// `S_p^k`: super edge-magic, `|V| = |E| = p`, minimum induced sum `k`.
    Spk { p: usize, k: usize },
    /// `T_σ^q` over a common vertex set of size `p`.
    Tq { q: usize, sigma: usize, p: usize },
}

/// `D ⊗_h Γ`. Vertex `(a, i)` is numbered `p_Γ (a-1) + i`; arcs are listed
/// by arc of `D`, then by arc of the assigned member.
pub fn tensor_h(d: &Digraph, family: &[Digraph], assignment: &[usize]) -> Result<Digraph> {
    if assignment.len() != d.q() {
        return Err(Error::Assignment(format!(
            "{} arcs but {} assignments",
            d.q(),
            assignment.len()
        )));
    }
    let Some(first) = family.first() else {
        return Err(Error::Assignment("empty family".into()));
    };
    let width = first.p();
    if let Some(bad) = family.iter().position(|m| m.p() != width) {
        return Err(Error::Assignment(format!(
            "member {} has {} vertices, member 1 has {width}",
            bad + 1,
            family[bad].p()
        )));
    }
    let mut arcs = Vec::new();
    for (e, (&(a, b), &m)) in d.arcs().iter().zip(assignment).enumerate() {
        let member = family.get(m).ok_or_else(|| {
            Error::Assignment(format!("arc {} assigned to missing member {}", e + 1, m + 1))
        })?;
        for &(i, j) in member.arcs() {
            arcs.push((width * (a - 1) + i, width * (b - 1) + j));
        }
    }
    Digraph::new(d.p() * width, arcs)
}

/// `(p, k)` if `f` is super edge-magic with `|V| = |E| = p` and minimum
/// induced sum `k`.
pub fn in_spk(f: &LabeledDigraph) -> Option<(usize, usize)> {
    let g = f.underlying();
    if g.p() != g.q() || g.q() == 0 {
        return None;
    }
    is_super_edge_magic(&g, &f.labeling).ok().flatten()?;
    let k = sums_unchecked(&g, &f.labeling.vertex_labels).into_iter().min()?;
    Some((g.p(), k))
}

/// `(q, σ)` if `f` is edge-magic with `q` arcs and valence `σ`.
pub fn in_tq(f: &LabeledDigraph) -> Option<(usize, usize)> {
    let g = f.underlying();
    let sigma = valence_of(&g, &f.labeling).ok().flatten()?;
    Some((g.q(), sigma))
}

pub fn classify(f: &LabeledDigraph) -> Vec<FamilyClass> {
    let mut out = Vec::new();
    if let Some((p, k)) = in_spk(f) {
        out.push(FamilyClass::Spk { p, k });
    }
    if let Some((q, sigma)) = in_tq(f) {
        out.push(FamilyClass::Tq {
            q,
            sigma,
            p: f.digraph.p(),
        });
    }
    out
}

/// A product together with the labeling induced on its underlying graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InducedProduct {
    pub digraph: Digraph,
    pub labeling: TotalLabeling,
    pub predicted_valence: usize,
    /// How the first factor's vertices were renamed before the product.
    pub factor_renaming: Vec<usize>,
    /// Per family member, how its vertices were renamed.
    pub member_renaming: Vec<Vec<usize>>,
}

impl InducedProduct {
    pub fn graph(&self) -> Graph {
        self.digraph.underlying()
    }

    /// Recomputes the valence from scratch.
    pub fn verified_valence(&self) -> Result<Option<usize>> {
        valence_of(&self.graph(), &self.labeling)
    }
}

fn common<T: PartialEq + Copy + std::fmt::Debug>(values: &[T], what: &str) -> Result<T> {
    let first = values[0];
    match values.iter().position(|v| *v != first) {
        None => Ok(first),
        Some(i) => Err(Error::MixedFamily(format!(
            "member 1 has {what} {first:?}, member {} has {:?}",
            i + 1,
            values[i]
        ))),
    }
}

/// Labeling of `und(D ⊗_h S_p^k)` induced by an edge-magic labeling `f` of
/// `D`: vertex `(a, i)` gets `p(f(a)-1) + i` and the arc from arc `e` of `D`
/// and arc `(i, j)` of the member gets `p(f(e)-1) + k + p - (i+j)`. The
/// valence is `p(val(f) - 3) + k + p`; super edge-magic `f` gives a super
/// edge-magic result.
pub fn induced_labeling_spk(d: &LabeledDigraph, h: &ArcAssignment) -> Result<InducedProduct> {
    let val_f = valence_of(&d.underlying(), &d.labeling)?
        .ok_or_else(|| Error::NotInClass("first factor is not edge-magic".into()))?;
    if h.family.is_empty() {
        return Err(Error::Assignment("empty family".into()));
    }
    let classes = h
        .family
        .iter()
        .enumerate()
        .map(|(i, m)| {
            in_spk(m).ok_or_else(|| Error::NotInClass(format!("member {} is not in any S_p^k", i + 1)))
        })
        .collect::<Result<Vec<_>>>()?;
    let (p, k) = common(&classes, "(p, k)")?;

    let (members, member_renaming): (Vec<Digraph>, Vec<Vec<usize>>) = h
        .family
        .iter()
        .map(|m| {
            let (norm, rename) = m.normalized();
            (norm.digraph, rename)
        })
        .unzip();
    let digraph = tensor_h(&d.digraph, &members, &h.assignment)?;

    let f = &d.labeling;
    let vertex_labels = (0..digraph.p())
        .map(|idx| {
            let (a, i) = (idx / p, idx % p + 1);
            p * (f.vertex_labels[a] - 1) + i
        })
        .collect();
    let mut edge_labels = Vec::with_capacity(digraph.q());
    for (e, &m) in h.assignment.iter().enumerate() {
        let fe = f.edge_labels[e];
        for &(i, j) in members[m].arcs() {
            edge_labels.push(p * (fe - 1) + (k + p) - (i + j));
        }
    }
    Ok(InducedProduct {
        digraph,
        labeling: TotalLabeling::new(vertex_labels, edge_labels),
        predicted_valence: p * (val_f - 3) + k + p,
        factor_renaming: (1..=d.digraph.p()).collect(),
        member_renaming,
    })
}

/// Edge-magic labeling of `und(D ⊗_h T_σ^q)` for `D ∈ S_n^k`: vertex
/// `(i, a)` gets `(p+q)(i-1) + a` and arc `((i,a),(j,b))` gets
/// `(p+q)(k+n-(i+j)-1) + σ - (a+b)`, where `i, j` are labels in `D` and
/// `a, b` labels in the member. The valence is `(p+q)(k+n-3) + σ`.
///
/// All members must share the same set of vertex labels.
pub fn induced_labeling_tq(d: &LabeledDigraph, h: &ArcAssignment) -> Result<InducedProduct> {
    let (n, k) = in_spk(d)
        .ok_or_else(|| Error::NotInClass("first factor is not in any S_n^k".into()))?;
    if h.family.is_empty() {
        return Err(Error::Assignment("empty family".into()));
    }
    let classes = h
        .family
        .iter()
        .enumerate()
        .map(|(i, m)| {
            in_tq(m)
                .map(|(q, sigma)| (q, sigma, m.digraph.p()))
                .ok_or_else(|| Error::NotInClass(format!("member {} is not edge-magic", i + 1)))
        })
        .collect::<Result<Vec<_>>>()?;
    let (q, sigma, p) = common(&classes, "(q, sigma, p)")?;

    let normalized: Vec<(LabeledDigraph, Vec<usize>)> =
        h.family.iter().map(LabeledDigraph::normalized).collect();
    let vertex_set = normalized[0].0.labeling.vertex_labels.clone();
    if let Some(bad) = normalized
        .iter()
        .position(|(m, _)| m.labeling.vertex_labels != vertex_set)
    {
        return Err(Error::MixedFamily(format!(
            "member {} has a different vertex label set than member 1",
            bad + 1
        )));
    }
    let (d_norm, factor_renaming) = d.normalized();
    let members: Vec<Digraph> = normalized.iter().map(|(m, _)| m.digraph.clone()).collect();
    let digraph = tensor_h(&d_norm.digraph, &members, &h.assignment)?;

    let block = p + q;
    let vertex_labels = (0..digraph.p())
        .map(|idx| {
            let (i, a) = (idx / p + 1, vertex_set[idx % p]);
            block * (i - 1) + a
        })
        .collect();
    let mut edge_labels = Vec::with_capacity(digraph.q());
    for (&(i, j), &m) in d_norm.digraph.arcs().iter().zip(&h.assignment) {
        for &(a, b) in members[m].arcs() {
            let (a, b) = (vertex_set[a - 1], vertex_set[b - 1]);
            edge_labels.push(block * (k + n - (i + j) - 1) + (sigma - (a + b)));
        }
    }
    Ok(InducedProduct {
        digraph,
        labeling: TotalLabeling::new(vertex_labels, edge_labels),
        predicted_valence: block * (k + n - 3) + sigma,
        factor_renaming,
        member_renaming: normalized.into_iter().map(|(_, r)| r).collect(),
    })
}

/// `K⃗_{1,n}^l` (arcs `(1,k)` for `k in [1, n+1]`, the first being the loop)
/// with the centre labeled `r`, the leaves labeled `[1, n+1] \ {r}` in
/// ascending order, and the super edge-magic edge labels this forces.
pub fn star_loop_labeling(n: usize, r: usize) -> Result<LabeledDigraph> {
    if n < 1 {
        return Err(Error::InvalidGraph("star needs n >= 1".into()));
    }
    if !(1..=n + 1).contains(&r) {
        return Err(Error::InvalidLabeling(format!(
            "centre label {r} outside [1, {}]",
            n + 1
        )));
    }
    let digraph = Digraph::new(n + 1, (1..=n + 1).map(|k| (1, k)).collect())?;
    let mut vertex_labels = vec![r];
    vertex_labels.extend((1..=n + 1).filter(|&l| l != r));
    let labeling = extend_vertex_labeling(&digraph.underlying(), &VertexLabeling::new(vertex_labels))?
        .expect("star with loop sums are consecutive");
    Ok(LabeledDigraph { digraph, labeling })
}

/// Valences of `G⃗ ⊗ K⃗_{1,n}^l` guaranteed by the two induced labelings,
/// given the magic set of `G`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PredictedValences {
    /// `(n+1)(v-2) + r + 1` for `v ∈ τ_G`, `r ∈ [1, n+1]`.
    pub spk_rule: BTreeSet<usize>,
    /// `(p+q)(n+r-1) + v` for `v ∈ τ_G` and the chosen `r`.
    pub tq_rule: BTreeSet<usize>,
    pub valences: BTreeSet<usize>,
    /// `(n+1)|τ_G| + 2`.
    pub lower_bound: usize,
    /// `β - α < (α - (p+q+2)) n` for the extreme valences `α`, `β`.
    pub sharper_condition: bool,
    /// `(n+3)|τ_G|`, meaningful when `sharper_condition` holds.
    pub sharper_bound: usize,
}

/// `tq_all_r` widens the second rule from `r ∈ {1, n+1}` to every `r`.
pub fn predicted_valences_report(
    p: usize,
    q: usize,
    tau: &BTreeSet<usize>,
    n: usize,
    tq_all_r: bool,
) -> Result<PredictedValences> {
    let (Some(&alpha), Some(&beta)) = (tau.first(), tau.last()) else {
        return Err(Error::NotInClass("magic set is empty or unavailable".into()));
    };
    let spk_rule: BTreeSet<usize> = tau
        .iter()
        .flat_map(|&v| (1..=n + 1).map(move |r| (n + 1) * (v - 2) + r + 1))
        .collect();
    let rs: Vec<usize> = if tq_all_r {
        (1..=n + 1).collect()
    } else {
        vec![1, n + 1]
    };
    let tq_rule: BTreeSet<usize> = tau
        .iter()
        .flat_map(|&v| rs.iter().map(move |&r| (p + q) * (n + r - 1) + v))
        .collect();
    let valences = spk_rule.union(&tq_rule).copied().collect();
    let sharper_condition =
        alpha > p + q + 2 && beta - alpha < (alpha - (p + q + 2)) * n;
    Ok(PredictedValences {
        spk_rule,
        tq_rule,
        valences,
        lower_bound: (n + 1) * tau.len() + 2,
        sharper_condition,
        sharper_bound: (n + 3) * tau.len(),
    })
}
