//! End-to-end pipelines for the worked examples: the magic set of `C_4`,
//! all valences of the crown `C_4 ⊙ K̄_2`, perfection of `K_{1,n}^l`, and an
//! edge-magic labeling of `S_2(K_{3,3}; H1, H2)`.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::decomp::{s2n_induced_labeling, Decomposition, S2nLabeling};
use crate::error::{Error, Result};
use crate::graph::{bipartition, mk_complete_bipartite, mk_crown, mk_cycle, mk_directed_cycle, mk_star_with_loop, Graph};
use crate::intervals::{em_interval, sem_interval, IntervalReport};
use crate::iso::{find_isomorphism, transport_labeling};
use crate::labeling::{valence_of, TotalLabeling};
use crate::product::{
    induced_labeling_spk, induced_labeling_tq, star_loop_labeling, ArcAssignment, InducedProduct,
    LabeledDigraph,
};
use crate::search::{em_spectrum, first_labeling, sem_spectrum, SearchConfig, SpectrumKind, SpectrumReport};

/// The four edge-magic labelings of `C_4` (vertices around the cycle,
/// then edges `{1,2}, {2,3}, {3,4}, {4,1}`) with valences 12 to 15.
pub fn c4_labelings() -> Vec<(&'static str, TotalLabeling)> {
    vec![
        ("alpha", TotalLabeling::new(vec![1, 6, 2, 3], vec![5, 4, 7, 8])),
        ("beta", TotalLabeling::new(vec![1, 5, 2, 8], vec![7, 6, 3, 4])),
        ("gamma", TotalLabeling::new(vec![1, 8, 4, 7], vec![5, 2, 3, 6])),
        ("delta", TotalLabeling::new(vec![8, 3, 7, 6], vec![4, 5, 2, 1])),
    ]
}

pub fn c4_spectrum(cfg: &SearchConfig) -> Result<SpectrumReport> {
    em_spectrum(&mk_cycle(4)?, cfg)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Route {
    /// `C⃗_m ⊗ K⃗_{1,n}^l` with the star as the `S_p^k` member.
    Spk,
    /// `K⃗_{1,n}^l ⊗ C⃗_m` with the cycle as the `T_σ^q` member.
    Tq,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CrownEntry {
    pub route: Route,
    pub cycle_labeling: String,
    pub cycle_valence: usize,
    pub r: usize,
    pub predicted: usize,
    /// Valence re-computed on the crown itself after transport.
    pub verified: Option<usize>,
    pub labeling: TotalLabeling,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CrownCertificate {
    pub m: usize,
    pub n: usize,
    pub interval: IntervalReport,
    pub entries: Vec<CrownEntry>,
    pub valences: BTreeSet<usize>,
    pub all_verified: bool,
    pub perfect: bool,
}

fn onto_crown(prod: &InducedProduct, crown: &Graph) -> Result<(TotalLabeling, Option<usize>)> {
    let source = prod.graph();
    let phi = find_isomorphism(&source, crown).ok_or_else(|| {
        Error::InvalidGraph("product is not isomorphic to the crown".into())
    })?;
    let labeling = transport_labeling(&source, crown, &phi, &prod.labeling)?;
    let verified = valence_of(crown, &labeling)?;
    Ok((labeling, verified))
}

/// Builds edge-magic labelings of `C_m ⊙ K̄_n` from edge-magic labelings of
/// `C_m` through both product routes, moves each onto the crown by an
/// explicit isomorphism and re-verifies it there. The `S_p^k` route uses
/// every centre label `r`, the `T_σ^q` route `r ∈ tq_r` (the extreme
/// labels when `None`).
pub fn crown_certificate(
    named: &[(&str, TotalLabeling)],
    m: usize,
    n: usize,
    tq_r: Option<&[usize]>,
) -> Result<CrownCertificate> {
    let crown = mk_crown(m, n)?;
    let cycle = mk_directed_cycle(m)?;
    let default_r = [1, n + 1];
    let tq_r = tq_r.unwrap_or(&default_r);
    let mut entries = Vec::new();
    for (name, g) in named {
        let factor = LabeledDigraph::new(cycle.clone(), g.clone())?;
        let cycle_valence = valence_of(&factor.underlying(), g)?
            .ok_or_else(|| Error::InvalidLabeling(format!("{name} is not edge-magic")))?;
        for r in 1..=n + 1 {
            let h = ArcAssignment::constant(star_loop_labeling(n, r)?, m);
            let prod = induced_labeling_spk(&factor, &h)?;
            let (labeling, verified) = onto_crown(&prod, &crown)?;
            entries.push(CrownEntry {
                route: Route::Spk,
                cycle_labeling: name.to_string(),
                cycle_valence,
                r,
                predicted: prod.predicted_valence,
                verified,
                labeling,
            });
        }
        for &r in tq_r {
            let star = star_loop_labeling(n, r)?;
            let h = ArcAssignment::constant(factor.clone(), star.digraph.q());
            let prod = induced_labeling_tq(&star, &h)?;
            let (labeling, verified) = onto_crown(&prod, &crown)?;
            entries.push(CrownEntry {
                route: Route::Tq,
                cycle_labeling: name.to_string(),
                cycle_valence,
                r,
                predicted: prod.predicted_valence,
                verified,
                labeling,
            });
        }
    }
    let interval = em_interval(&crown)?;
    let all_verified = entries.iter().all(|e| e.verified == Some(e.predicted));
    let valences: BTreeSet<usize> = entries.iter().filter_map(|e| e.verified).collect();
    let perfect = all_verified && !interval.is_empty() && interval.values().all(|k| valences.contains(&k));
    Ok(CrownCertificate {
        m,
        n,
        interval,
        entries,
        valences,
        all_verified,
        perfect,
    })
}

/// The 20 valences of `C_4 ⊙ K̄_2`.
pub fn c4_crown(_cfg: &SearchConfig) -> Result<CrownCertificate> {
    crown_certificate(&c4_labelings(), 4, 2, None)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StarLoopEntry {
    pub n: usize,
    pub interval: IntervalReport,
    pub achieved: BTreeSet<usize>,
    pub perfect: bool,
}

/// `σ` and `I` of `K_{1,n}^l` for `n = 1..=max_n`.
pub fn star_loop_perfect(max_n: usize, cfg: &SearchConfig) -> Result<Vec<StarLoopEntry>> {
    (1..=max_n)
        .map(|n| {
            let g = mk_star_with_loop(n)?;
            let report = sem_spectrum(&g, cfg)?;
            Ok(StarLoopEntry {
                n,
                interval: sem_interval(&g)?,
                perfect: report.perfect,
                achieved: report.achieved,
            })
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct S2Example {
    pub base_labeling: TotalLabeling,
    pub base_valence: usize,
    pub h1: BTreeSet<usize>,
    pub h2: BTreeSet<usize>,
    pub result: S2nLabeling,
}

/// Searches an edge-magic labeling of `K_{3,3}`, splits off the perfect
/// matching `{x1y1, x2y2, x3y3}` as `H2` and builds the induced labeling of
/// `S_2(K_{3,3}; H1, H2)`.
pub fn s2_k33(cfg: &SearchConfig) -> Result<S2Example> {
    let g = mk_complete_bipartite(3, 3)?;
    let bip = bipartition(&g).ok_or(Error::NotBipartite)?;
    let (base_valence, base_labeling) = first_labeling(&g, SpectrumKind::Em, cfg)?
        .ok_or_else(|| Error::InvalidGraph("no edge-magic labeling found".into()))?;
    let d = Decomposition::from_part1(&g, [2, 3, 4, 6, 7, 8])?;
    let result = s2n_induced_labeling(&g, &bip, &d, 1, &base_labeling, 1)?;
    Ok(S2Example {
        base_labeling,
        base_valence,
        h1: d.part1_edges,
        h2: d.part2_edges,
        result,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn c4_labelings_have_expected_valences() {
        let c4 = mk_cycle(4).unwrap();
        let vals: Vec<_> = c4_labelings()
            .iter()
            .map(|(_, f)| valence_of(&c4, f).unwrap().unwrap())
            .collect();
        assert_eq!(vals, vec![12, 13, 14, 15]);
    }

    #[test]
    fn crown_has_twenty_valences() {
        let cert = c4_crown(&SearchConfig::default()).unwrap();
        assert_eq!(cert.entries.len(), 20);
        assert!(cert.all_verified);
        assert_eq!(cert.valences, (28..=47).collect());
        assert!(cert.perfect);
    }

    #[test]
    fn k33_example() {
        let ex = s2_k33(&SearchConfig::default()).unwrap();
        assert_eq!(ex.result.verified_valence, Some(ex.result.predicted_valence));
        assert_eq!(ex.result.s2n.graph.q(), 18);
    }
}
