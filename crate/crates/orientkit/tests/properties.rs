mod common;

use std::collections::{BTreeMap, BTreeSet};

use orientkit::connectivity::{
    arc_connectivity, edge_connectivity, is_2vc_in, is_2vertex_connected, is_strongly_connected, two_paths_from_set,
    two_paths_to_set, Connectivity,
};
use orientkit::graph::{apply_orientation, blow_up, double_cycle, Digraph, Graph, LinkId, MixedGraph, VertexId};
use orientkit::harness::{sample, CorpusSpec, Filter};
use orientkit::nae::NaeInstance;
use orientkit::reduction::reduce;
use orientkit::search::{
    exact_orientation_search, exact_orientation_search_with, robbins_orientation, thomassen_predicate,
    SearchOptions, Status, Target,
};
use orientkit::torient::{build_blowup, claim1_check, construct_2t_orientation, huoh_predicate};
use proptest::prelude::*;

use common::*;

fn pairs(n: usize, max_m: usize) -> impl Strategy<Value = Vec<(usize, usize)>> {
    let max_m = if n < 2 { 0 } else { max_m };
    prop::collection::vec((0..n, 1..n.max(2)), 0..=max_m)
        .prop_map(move |v| v.into_iter().map(|(a, d)| (a, (a + d) % n)).collect())
}

fn graphs(n_min: usize, n_max: usize, m_max: usize) -> impl Strategy<Value = Graph> {
    (n_min..=n_max).prop_flat_map(move |n| pairs(n, m_max).prop_map(move |p| graph_from(n, &p)))
}

fn digraphs(n_min: usize, n_max: usize, m_max: usize) -> impl Strategy<Value = Digraph> {
    (n_min..=n_max)
        .prop_flat_map(move |n| pairs(n, m_max).prop_map(move |p| Digraph::try_from(mixed_from(n, &[], &p)).unwrap()))
}

fn mixed(n_min: usize, n_max: usize, e_max: usize, a_max: usize) -> impl Strategy<Value = MixedGraph> {
    (n_min..=n_max).prop_flat_map(move |n| (pairs(n, e_max), pairs(n, a_max)).prop_map(move |(e, a)| mixed_from(n, &e, &a)))
}

fn subset(n: usize, bits: u32) -> BTreeSet<VertexId> {
    (0..n).filter(|&i| bits >> i & 1 == 1).map(|i| VertexId(i as u32)).collect()
}

fn instances(max_vars: usize, max_clauses: usize) -> impl Strategy<Value = NaeInstance> {
    (3..=max_vars).prop_flat_map(move |n| {
        prop::collection::vec(prop::sample::subsequence((0..n).collect::<Vec<_>>(), 3).prop_shuffle(), 1..=max_clauses)
            .prop_map(|clauses| {
                let mut used: Vec<usize> = clauses.iter().flatten().copied().collect();
                used.sort_unstable();
                used.dedup();
                let clauses =
                    clauses.iter().map(|c| [0, 1, 2].map(|i| used.binary_search(&c[i]).unwrap())).collect();
                NaeInstance::new(used.len(), clauses).unwrap()
            })
    })
}

fn finite(c: Connectivity) -> Option<u32> {
    match c {
        Connectivity::Finite(k) => Some(k),
        Connectivity::Infinite => None,
    }
}

fn corpus(seed: u64, filter: Filter) -> CorpusSpec {
    CorpusSpec { count: 1, n_range: (2, 6), m_range: (1, 14), seed, filter }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn cut_counts_are_symmetric(g in mixed(2, 7, 10, 10), bits in any::<u32>()) {
        let n = g.vertex_count();
        let side: Vec<bool> = (0..n).map(|i| bits >> i & 1 == 1).collect();
        let other: Vec<bool> = side.iter().map(|b| !b).collect();
        let (c, d) = (g.cut_counts(&side), g.cut_counts(&other));
        prop_assert_eq!(c.edges, d.edges);
        prop_assert_eq!(c.arcs_in, d.arcs_out);
        let crossing = g.arcs().iter().filter(|a| side[a.tail.index()] != side[a.head.index()]).count() as u32;
        prop_assert_eq!(c.arcs_in + c.arcs_out, crossing);
    }

    #[test]
    fn orientation_keeps_vertices_and_links(g in mixed(2, 6, 8, 6), k in any::<u64>()) {
        let o = nth_orientation(&g, k);
        let d = apply_orientation(&g, &o).unwrap();
        prop_assert_eq!(d.names(), g.names());
        prop_assert_eq!(d.arcs().len(), g.arcs().len() + g.edges().len());
    }

    #[test]
    fn edge_connectivity_matches_cut_enumeration(g in graphs(1, 8, 16)) {
        let cut = edge_connectivity(&g);
        prop_assert_eq!(finite(cut.value), brute_edge_cut(&g));
        if let Some(w) = cut.witness {
            prop_assert!(w.is_valid_for(&g));
        }
    }

    #[test]
    fn arc_connectivity_matches_cut_enumeration(d in digraphs(1, 8, 20)) {
        let cut = arc_connectivity(&d);
        prop_assert_eq!(finite(cut.value), brute_arc_cut(&d));
        if let Some(w) = cut.witness {
            prop_assert!(w.is_valid_for(&d));
        }
    }

    #[test]
    fn deletion_and_path_forms_agree(d in digraphs(3, 7, 26)) {
        let all: BTreeSet<VertexId> = d.vertices().collect();
        let deletion = is_2vertex_connected(&d);
        prop_assert_eq!(deletion, brute_2vc(&d));
        prop_assert_eq!(deletion, is_2vc_in(&d, &all).unwrap());
        prop_assert_eq!(is_strongly_connected(&d), brute_strong(&d, None));
    }

    #[test]
    fn fan_paths_extend_two_vertex_connectivity(d in digraphs(3, 7, 28), bits in any::<u32>(), pick in any::<prop::sample::Index>()) {
        let n = d.vertex_count();
        let x = subset(n, bits);
        let outside: Vec<VertexId> = d.vertices().filter(|v| !x.contains(v)).collect();
        prop_assume!(!outside.is_empty() && x.len() >= 2);
        let v = outside[pick.index(outside.len())];
        prop_assume!(is_2vc_in(&d, &x).unwrap());
        if two_paths_to_set(&d, v, &x).unwrap() && two_paths_from_set(&d, &x, v).unwrap() {
            let mut bigger = x.clone();
            bigger.insert(v);
            prop_assert!(is_2vc_in(&d, &bigger).unwrap());
        }
    }

    #[test]
    fn contraction_keeps_strong_connectivity(d in digraphs(2, 7, 20), bits in 1u32..) {
        prop_assume!(is_strongly_connected(&d));
        let set = subset(d.vertex_count(), bits);
        prop_assume!(!set.is_empty());
        let c = d.contract(&set, "merged").unwrap();
        prop_assert!(is_strongly_connected(&c));
        let before: BTreeSet<LinkId> = d.arcs().iter().map(|a| a.id).collect();
        let after: Vec<LinkId> = c.arcs().iter().map(|a| a.id).collect();
        let distinct: BTreeSet<LinkId> = after.iter().copied().collect();
        prop_assert_eq!(distinct.len(), after.len());
        prop_assert!(distinct.is_subset(&before));
    }

    #[test]
    fn robbins_orients_exactly_the_bridgeless(g in graphs(2, 8, 16)) {
        let two_ec = brute_edge_cut(&g).is_none_or(|k| k >= 2);
        match robbins_orientation(&g) {
            Ok(o) => {
                prop_assert!(two_ec);
                prop_assert!(brute_strong(&apply_orientation(&g, &o).unwrap(), None));
            }
            Err(w) => {
                prop_assert!(!two_ec);
                prop_assert!(w.is_valid_for(&g) && w.value < 2);
            }
        }
    }

    #[test]
    fn search_on_graphs_matches_characterisations(g in graphs(2, 6, 11)) {
        let lambda = brute_edge_cut(&g);
        for (target, want) in [
            (Target::Strong, lambda.is_none_or(|k| k >= 2)),
            (Target::TwoArc, lambda.is_none_or(|k| k >= 4)),
        ] {
            let out = exact_orientation_search(&g, &target, 10_000_000).unwrap();
            prop_assert_eq!(out.status == Status::Found, want, "{}", target.name());
        }
        if g.vertex_count() >= 3 {
            let out = exact_orientation_search(&g, &Target::TwoVertex, 10_000_000).unwrap();
            prop_assert_eq!(out.status == Status::Found, thomassen_predicate(&g).is_ok());
        }
    }

    #[test]
    fn pruning_never_changes_the_answer(g in mixed(2, 6, 12, 6), bits in any::<u32>()) {
        let t = subset(g.vertex_count(), bits);
        let leaves = 1u64 << g.edges().len();
        let brute_strong_exists = (0..leaves).any(|k| brute_strong(&apply_orientation(&g, &nth_orientation(&g, k)).unwrap(), None));
        let brute_2vc_exists = (0..leaves).any(|k| brute_2vc(&apply_orientation(&g, &nth_orientation(&g, k)).unwrap()));
        for target in [Target::Strong, Target::TwoArc, Target::TwoVertex, Target::TwoT(t)] {
            let pruned = exact_orientation_search(&g, &target, 10_000_000).unwrap();
            let plain = exact_orientation_search_with(&g, &target, 10_000_000, SearchOptions::unpruned()).unwrap();
            prop_assert_eq!(pruned.status, plain.status, "{}", target.name());
            for out in [&pruned, &plain] {
                if let Some(o) = &out.orientation {
                    prop_assert!(target.holds(&apply_orientation(&g, o).unwrap()));
                }
            }
            match target {
                Target::Strong => prop_assert_eq!(pruned.status == Status::Found, brute_strong_exists),
                Target::TwoVertex => prop_assert_eq!(pruned.status == Status::Found, brute_2vc_exists),
                _ => {}
            }
        }
    }

    #[test]
    fn blow_up_keeps_four_edge_connectivity(seed in any::<u64>(), k in 3usize..=5, pick in any::<prop::sample::Index>(), slots in prop::collection::vec(any::<prop::sample::Index>(), 14)) {
        let g = sample(&corpus(seed, Filter::Lambda4), 0).unwrap().graph;
        let v = VertexId(pick.index(g.vertex_count()) as u32);
        let h = double_cycle(k).unwrap();
        let attach: BTreeMap<u32, VertexId> = g
            .edges()
            .iter()
            .filter(|e| e.touches(v))
            .zip(&slots)
            .map(|(e, s)| (e.id, VertexId(s.index(k) as u32)))
            .collect();
        let b = blow_up(&g, v, &h, &attach).unwrap();
        prop_assert!(edge_connectivity(&b).value.at_least(4));
        for u in h.vertices() {
            let gained = attach.values().filter(|&&w| w == u).count();
            let id = b.id(h.name(u)).unwrap();
            prop_assert_eq!(b.edge_degree(id), h.edge_degree(u) + gained);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn blow_up_of_admissible_pair_meets_claim1(seed in any::<u64>()) {
        let s = sample(&corpus(seed, Filter::Huoh), 0).unwrap();
        let (h, _) = build_blowup(&s.graph, &s.t).unwrap();
        prop_assert!(claim1_check(&h).is_ok());
    }

    #[test]
    fn construction_is_monotone_in_t(seed in any::<u64>(), bits in any::<u32>()) {
        let s = sample(&corpus(seed, Filter::Huoh), 0).unwrap();
        let full = construct_2t_orientation(&s.graph, &s.t, 10_000_000).unwrap();
        prop_assert_eq!(full.status, Status::Found);
        let smaller: BTreeSet<VertexId> = s.t.iter().enumerate().filter(|(i, _)| bits >> i & 1 == 1).map(|(_, &v)| v).collect();
        prop_assert!(huoh_predicate(&s.graph, &smaller).unwrap().is_ok());
        let sub = construct_2t_orientation(&s.graph, &smaller, 10_000_000).unwrap();
        prop_assert_eq!(sub.status, Status::Found);
    }

    #[test]
    fn assignment_round_trip_and_lemma1(phi in instances(7, 6), bits in any::<u32>()) {
        let art = reduce(&phi).unwrap();
        let f: Vec<bool> = (0..phi.num_vars()).map(|i| bits >> i & 1 == 1).collect();
        let o = art.assignment_to_orientation(&f).unwrap();
        prop_assert_eq!(art.orientation_to_assignment(&o).unwrap(), f.clone());
        let report = art.lemma1_check(&o).unwrap();
        prop_assert!(report.holds[0] && report.holds[1]);
        let feasible = phi.is_feasible(&f);
        prop_assert_eq!(report.holds[2], feasible);
        prop_assert_eq!(brute_2vc(&apply_orientation(&art.graph, &o).unwrap()), feasible);
    }

    #[test]
    fn gadget_counts_and_degrees(phi in instances(9, 10)) {
        let art = reduce(&phi).unwrap();
        let g = &art.graph;
        let pairs = 3 * phi.clauses().len();
        let cycle_edges: usize = phi.occurrences().iter().map(|&mu| 3 * mu + 1).sum();
        prop_assert_eq!(g.vertex_count(), 3 + phi.clauses().len() + 4 * pairs);
        prop_assert_eq!(g.arcs().len(), 6 + 2 * phi.clauses().len() + 6 * pairs);
        prop_assert_eq!(g.edges().len(), pairs + cycle_edges);

        let signature = |v: VertexId| {
            let arcs_in = g.arcs().iter().filter(|a| a.head == v).count();
            let arcs_out = g.arcs().iter().filter(|a| a.tail == v).count();
            (arcs_in, arcs_out, g.edge_degree(v))
        };
        for gv in art.gadget.values() {
            for v in [gv.t, gv.w, gv.y] {
                prop_assert_eq!(signature(v), (1, 1, 2));
            }
        }
        for &z in &art.z_of {
            prop_assert_eq!(signature(z), (1, 1, 3));
        }
        for (x, seq) in art.cycle_seq.iter().enumerate() {
            prop_assert_eq!(seq[0], art.r);
            prop_assert_eq!(seq.len(), 3 * phi.occurrences()[x] + 1);
        }
    }
}
