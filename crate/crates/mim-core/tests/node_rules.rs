//! Per-node ground-truth checks: re-derives the solver's annotation at every
//! tree node with the public combine operations and validates each one
//! against the brute-force oracle on the node's induced subgraph.
//!
//! At a series node the matching size must equal max(2, best child); at a
//! K+S node it must equal the best non-vertex child (or be at most 1 with
//! vertex children only); auxiliary pairs must always be non-adjacent and
//! bichromatic.

use mim_core::generate::{gen_graph, GenConfig};
use mim_core::oracle::brute_force_mim;
use mim_core::solver::{combine_ks, combine_parallel, combine_prime, combine_series, NodeAnnotation};
use mim_core::{decompose, BipartiteGraph, Color, DecompNode, NodeKind};

fn annotate(node: &DecompNode, g: &BipartiteGraph) -> NodeAnnotation {
    let children: Vec<NodeAnnotation> = node.children.iter().map(|c| annotate(c, g)).collect();
    let ann = match &node.kind {
        NodeKind::Leaf(_) | NodeKind::PPrime => {
            let v = node.vertices.min_id();
            let mut ann = NodeAnnotation::default();
            match g.color(v) {
                Color::Black => ann.some_black = Some(v),
                Color::White => ann.some_white = Some(v),
            }
            ann
        }
        NodeKind::Parallel => combine_parallel(children.clone()),
        NodeKind::Series => combine_series(children.clone()).expect("aux pairs present"),
        NodeKind::KPlusS => {
            let tagged = children
                .clone()
                .into_iter()
                .zip(&node.children)
                .map(|(a, c)| (a, c.is_leaf()))
                .collect();
            combine_ks(tagged)
        }
        NodeKind::Prime(shape) => combine_prime(shape, g.colors()),
    };

    // Ground truth for this node's induced subgraph, in original ids.
    let (sub, orig) = g.induced_subgraph(&node.vertices).unwrap();
    let truth = brute_force_mim(&sub).unwrap().len();
    assert_eq!(
        ann.matching.len(),
        truth,
        "node {:?} over {}: rule gives {}, oracle {}",
        node.kind,
        node.vertices,
        ann.matching.len(),
        truth
    );
    let _ = orig;

    // Node-type identities.
    let best_child = children.iter().map(|c| c.matching.len()).max().unwrap_or(0);
    match &node.kind {
        NodeKind::Series => assert_eq!(ann.matching.len(), best_child.max(2)),
        NodeKind::KPlusS => {
            let non_vertex_best = children
                .iter()
                .zip(&node.children)
                .filter(|(_, c)| !c.is_leaf())
                .map(|(a, _)| a.matching.len())
                .max();
            match non_vertex_best {
                Some(best) => assert_eq!(ann.matching.len(), best),
                None => assert!(ann.matching.len() <= 1),
            }
        }
        _ => {}
    }

    // Auxiliary pairs must be bichromatic and non-adjacent.
    if let Some((b, w)) = ann.aux_pair {
        assert_eq!(g.color(b), Color::Black);
        assert_eq!(g.color(w), Color::White);
        assert!(!g.has_edge(b, w), "aux pair ({b}, {w}) is adjacent");
        assert!(node.vertices.contains(b) && node.vertices.contains(w));
    }
    ann
}

#[test]
fn node_rules_match_the_oracle_on_small_instances() {
    for seed in 0..250u64 {
        let n = 2 + (seed as usize * 3) % 13; // 2..=14
        let g = gen_graph(&GenConfig::new(seed, n)).unwrap();
        let tree = decompose(&g).unwrap();
        annotate(&tree, &g);
    }
}
