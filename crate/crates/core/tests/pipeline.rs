use std::collections::BTreeSet;

use proptest::prelude::*;

use edge_magic::decomp::{build_s2n, enumerate_2_decompositions, obstruction_report, Verdict};
use edge_magic::graph::{bipartition, mk_complete_bipartite, mk_directed_cycle};
use edge_magic::iso::transport_labeling;
use edge_magic::labeling::{complement, valence_of};
use edge_magic::product::{induced_labeling_spk, star_loop_labeling, ArcAssignment, LabeledDigraph};
use edge_magic::repro::c4_labelings;
use edge_magic::search::SearchConfig;
use edge_magic::{Digraph, Graph};

#[test]
fn obstruction_report_recovers_every_split() {
    let g = mk_complete_bipartite(2, 2).unwrap();
    let bip = bipartition(&g).unwrap();
    let cfg = SearchConfig::default();
    for d in enumerate_2_decompositions(&g, false, 20).unwrap() {
        let s = build_s2n(&g, &bip, &d, 1).unwrap();
        let roles: Vec<_> = s.roles.iter().map(|r| (r.copy, r.original)).collect();
        let rep = obstruction_report(&s.graph, &roles, &g, 1, &cfg).unwrap();
        assert_ne!(rep.verdict, Verdict::NotS2nInstance);
        assert_ne!(rep.verdict, Verdict::Obstruction);
        assert!(rep.partitions_edges);
        let h1: BTreeSet<_> = d.part1_edges.iter().map(|&i| g.edge(i)).collect();
        assert_eq!(rep.h1.iter().copied().collect::<BTreeSet<_>>(), h1);
    }
}

fn relabel_cycle(perm: &[usize]) -> (Graph, Vec<usize>) {
    let c4 = mk_directed_cycle(4).unwrap();
    let arcs = c4.arcs().iter().map(|&(u, v)| (perm[u - 1], perm[v - 1])).collect();
    (Digraph::new(4, arcs).unwrap().underlying(), perm.to_vec())
}

proptest! {
    #[test]
    fn product_valence_ignores_factor_naming(
        perm in Just(vec![1usize, 2, 3, 4]).prop_shuffle(),
        which in 0usize..4,
        r in 1usize..=3,
        flip in any::<bool>(),
    ) {
        let c4 = mk_directed_cycle(4).unwrap();
        let (_, mut f) = c4_labelings().swap_remove(which);
        if flip {
            f = complement(&c4.underlying(), &f).unwrap();
        }
        let val = valence_of(&c4.underlying(), &f).unwrap().unwrap();
        let (target, phi) = relabel_cycle(&perm);
        let moved = transport_labeling(&c4.underlying(), &target, &phi, &f).unwrap();
        let arcs = c4.arcs().iter().map(|&(u, v)| (perm[u - 1], perm[v - 1])).collect();
        let d = LabeledDigraph::new(Digraph::new(4, arcs).unwrap(), moved).unwrap();
        let h = ArcAssignment::constant(star_loop_labeling(2, r).unwrap(), 4);
        let prod = induced_labeling_spk(&d, &h).unwrap();
        prop_assert_eq!(prod.predicted_valence, 3 * (val - 3) + (r + 1) + 3);
        prop_assert_eq!(valence_of(&prod.graph(), &prod.labeling).unwrap(), Some(prod.predicted_valence));
    }
}
