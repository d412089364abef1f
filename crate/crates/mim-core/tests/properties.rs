//! Randomized invariants: structural laws of the graph type, agreement of
//! the fast K+S split with brute force, decomposition round trips, and
//! differential checks of the solver against the exponential oracle.

use proptest::collection::vec;
use proptest::prelude::*;

use mim_core::format::{parse_graph, write_graph};
use mim_core::generate::{gen_graph, GenConfig};
use mim_core::oracle::{brute_force_ks_split, brute_force_mim};
use mim_core::{
    decompose, ks_split, max_induced_matching, reconstruct, validate_tree, BipartiteGraph, Color,
    InducedMatching,
};

fn build_graph(n: usize, color_bits: &[bool], edge_bits: &[bool]) -> BipartiteGraph {
    let colors: Vec<Color> = color_bits[..n]
        .iter()
        .map(|&b| if b { Color::Black } else { Color::White })
        .collect();
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if colors[u] != colors[v] && edge_bits[u * n + v] {
                edges.push((u, v));
            }
        }
    }
    BipartiteGraph::new(n, colors, &edges).unwrap()
}

fn arb_graph(max_n: usize) -> impl Strategy<Value = BipartiteGraph> {
    (1..=max_n).prop_flat_map(move |n| {
        (vec(any::<bool>(), n), vec(any::<bool>(), n * n))
            .prop_map(move |(colors, edges)| build_graph(n, &colors, &edges))
    })
}

/// Definition-level induced matching check, independent of the library's:
/// every pair is an edge, vertices are distinct, and no single edge of the
/// graph touches two different matching pairs.
fn quadratic_induced_check(g: &BipartiteGraph, m: &InducedMatching) -> bool {
    let pairs = m.pairs();
    for &(u, v) in pairs {
        if u >= g.vertex_count() || v >= g.vertex_count() {
            return false;
        }
        if !g.edges().contains(&(u, v)) && !g.edges().contains(&(v, u)) {
            return false;
        }
    }
    let mut used = std::collections::HashSet::new();
    for &(u, v) in pairs {
        if !used.insert(u) || !used.insert(v) {
            return false;
        }
    }
    for &(x, y) in g.edges() {
        let touched = pairs
            .iter()
            .filter(|&&(a, b)| x == a || x == b || y == a || y == b)
            .count();
        if touched > 1 {
            return false;
        }
    }
    true
}

proptest! {
    #[test]
    fn bicomplement_involution_and_edge_count(g in arb_graph(10)) {
        let co = g.bicomplement();
        prop_assert_eq!(g.edge_count() + co.edge_count(), g.black_count() * g.white_count());
        prop_assert_eq!(co.bicomplement(), g);
    }

    #[test]
    fn components_and_twin_classes_partition(g in arb_graph(10)) {
        for parts in [g.connected_components(), g.twin_classes(), g.co_components()] {
            let total: usize = parts.iter().map(|p| p.len()).sum();
            prop_assert_eq!(total, g.vertex_count());
            let mut all: Vec<usize> = parts.iter().flat_map(|p| p.iter()).collect();
            all.sort_unstable();
            prop_assert!(all.windows(2).all(|w| w[0] < w[1]));
            prop_assert!(parts.iter().all(|p| !p.is_empty()));
        }
    }

    #[test]
    fn co_components_agree_with_materialized_bicomplement(g in arb_graph(9)) {
        prop_assert_eq!(g.co_components(), g.bicomplement().connected_components());
    }

    #[test]
    fn induced_matching_check_matches_definition(
        g in arb_graph(8),
        picks in vec(any::<prop::sample::Index>(), 0..5)
    ) {
        if g.edge_count() == 0 {
            return Ok(());
        }
        let pairs: Vec<(usize, usize)> = picks
            .iter()
            .map(|ix| g.edges()[ix.index(g.edge_count())])
            .collect();
        let m = InducedMatching::new(pairs);
        prop_assert_eq!(g.is_induced_matching(&m), quadratic_induced_check(&g, &m));
    }

    #[test]
    fn ks_split_agrees_with_brute_force(g in arb_graph(8)) {
        if g.vertex_count() < 2 {
            return Ok(());
        }
        let fast = ks_split(&g).unwrap();
        let brute = brute_force_ks_split(&g).unwrap();
        prop_assert_eq!(fast.is_some(), brute.is_some());
        if let Some(parts) = fast {
            // Each returned part must be indecomposable again.
            for part in &parts {
                if part.len() >= 2 {
                    let (sub, _) = g.induced_subgraph(part).unwrap();
                    prop_assert_eq!(ks_split(&sub).unwrap(), None);
                }
            }
            // Every prefix must satisfy the associated-partition conditions.
            let flat: Vec<usize> = parts.iter().flat_map(|p| p.iter()).collect();
            let mut boundary = 0;
            for part in &parts[..parts.len() - 1] {
                boundary += part.len();
                let (v1, v2) = flat.split_at(boundary);
                for &a in v1 {
                    for &b in v2 {
                        match (g.color(a), g.color(b)) {
                            (Color::Black, Color::White) => prop_assert!(g.has_edge(a, b)),
                            (Color::White, Color::Black) => prop_assert!(!g.has_edge(a, b)),
                            _ => {}
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn generated_instances_round_trip(seed in 0u64..500, n in 1usize..120) {
        let g = gen_graph(&GenConfig::new(seed, n)).unwrap();
        let tree = decompose(&g).unwrap();
        prop_assert_eq!(reconstruct(&tree, g.colors()).unwrap(), g.clone());
        prop_assert!(validate_tree(&tree, g.colors()).is_ok());
    }

    #[test]
    fn solver_matches_oracle_on_generated_instances(seed in 0u64..300, n in 1usize..14) {
        let g = gen_graph(&GenConfig::new(seed, n)).unwrap();
        let fast = max_induced_matching(&g).unwrap();
        let slow = brute_force_mim(&g).unwrap();
        prop_assert_eq!(fast.len(), slow.len());
        prop_assert!(g.is_induced_matching(&fast));
    }

    #[test]
    fn graph_format_round_trips(g in arb_graph(12)) {
        let text = write_graph(&g);
        prop_assert_eq!(parse_graph(&text).unwrap(), g);
    }

    #[test]
    fn skew_star_detection_is_permutation_invariant(
        g in arb_graph(9),
        perm_seed in any::<u64>()
    ) {
        use mim_core::oracle::contains_star123;
        use rand::prelude::*;
        use rand_chacha::ChaCha8Rng;

        let n = g.vertex_count();
        let mut perm: Vec<usize> = (0..n).collect();
        perm.shuffle(&mut ChaCha8Rng::seed_from_u64(perm_seed));
        let mut colors = vec![Color::Black; n];
        for v in 0..n {
            colors[perm[v]] = g.color(v);
        }
        let edges: Vec<(usize, usize)> = g
            .edges()
            .iter()
            .map(|&(a, b)| (perm[a], perm[b]))
            .collect();
        let h = BipartiteGraph::new(n, colors, &edges).unwrap();
        prop_assert_eq!(
            contains_star123(&g).unwrap().is_some(),
            contains_star123(&h).unwrap().is_some()
        );
    }
}
