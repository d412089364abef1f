//! Maximum induced matching over the canonical decomposition tree.
//!
//! A single post-order pass annotates every node with a maximum induced
//! matching of its induced subgraph and, when that matching has at most one
//! edge, with an auxiliary non-adjacent black/white pair. Series nodes whose
//! children all have small matchings consume the auxiliary pairs of two
//! children to build a crossing matching of size 2; every other node either
//! concatenates (parallel) or adopts a best child (series, K+S) or reads the
//! answer off the prime shape directly. The work per node is proportional to
//! its child count, so the whole traversal is linear in the tree size.

use crate::decompose::{decompose, DecompNode, DecomposeError, NodeKind, PrimeShape, ShapeForm};
use crate::graph::{BipartiteGraph, Color};
use crate::matching::InducedMatching;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SolveError {
    #[error("series child with a small matching lacks its auxiliary pair")]
    MissingAuxPair,
    #[error("malformed decomposition tree: {0}")]
    MalformedTree(String),
}

/// Errors of the full pipeline (decompose + solve + validation).
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum MimError {
    #[error(transparent)]
    Decompose(#[from] DecomposeError),
    #[error(transparent)]
    Solve(#[from] SolveError),
    #[error("internal invariant violated: solver produced an invalid matching")]
    InternalInvariant,
}

/// Solver state attached to a tree node.
///
/// `aux_pair` is a non-adjacent `(black, white)` pair inside the node,
/// present whenever the matching has at most one edge and such a pair
/// exists. `some_black` / `some_white` record an arbitrary vertex of each
/// color below the node; they make cross-child assembly O(1).
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct NodeAnnotation {
    pub matching: InducedMatching,
    pub aux_pair: Option<(usize, usize)>,
    pub some_black: Option<usize>,
    pub some_white: Option<usize>,
}

/// Operation counters for the traversal; the bench harness asserts they stay
/// linear in the tree size.
#[derive(Debug, Clone, Copy, Default)]
pub struct SolveStats {
    pub nodes: usize,
    /// Child links plus scan steps plus matched pairs moved or emitted.
    pub combine_work: usize,
}

fn leaf_annotation(v: usize, color: Color) -> NodeAnnotation {
    let (some_black, some_white) = match color {
        Color::Black => (Some(v), None),
        Color::White => (None, Some(v)),
    };
    NodeAnnotation {
        matching: InducedMatching::empty(),
        aux_pair: None,
        some_black,
        some_white,
    }
}

fn pprime_annotation(node: &DecompNode, colors: &[Color]) -> NodeAnnotation {
    let v = node.vertices.min_id();
    leaf_annotation(v, colors[v])
}

fn merge_color_witnesses(children: &[NodeAnnotation]) -> (Option<usize>, Option<usize>) {
    let some_black = children.iter().find_map(|c| c.some_black);
    let some_white = children.iter().find_map(|c| c.some_white);
    (some_black, some_white)
}

fn best_child_index<F>(children: &[NodeAnnotation], eligible: F) -> Option<usize>
where
    F: Fn(usize) -> bool,
{
    let mut best: Option<usize> = None;
    for (i, child) in children.iter().enumerate() {
        if !eligible(i) {
            continue;
        }
        match best {
            Some(b) if children[b].matching.len() >= child.matching.len() => {}
            _ => best = Some(i),
        }
    }
    best
}

/// Parallel rule: the union of the children's matchings. Disjoint components
/// cannot interact, so concatenation in child order is already maximum.
pub fn combine_parallel(mut children: Vec<NodeAnnotation>) -> NodeAnnotation {
    let (some_black, some_white) = merge_color_witnesses(&children);
    let total: usize = children.iter().map(|c| c.matching.len()).sum();
    let mut aux_pair = None;
    if total <= 1 {
        // Only reachable through degenerate trees: canonical parallel
        // children each contain an edge. Inherit or assemble a pair across
        // two children (cross-component pairs are never adjacent).
        aux_pair = children.iter().find_map(|c| c.aux_pair);
        if aux_pair.is_none() {
            'outer: for (i, ci) in children.iter().enumerate() {
                if let Some(b) = ci.some_black {
                    for (j, cj) in children.iter().enumerate() {
                        if i != j {
                            if let Some(w) = cj.some_white {
                                aux_pair = Some((b, w));
                                break 'outer;
                            }
                        }
                    }
                }
            }
        }
    }
    let mut matching = InducedMatching::empty();
    for child in &mut children {
        matching.extend_from(std::mem::take(&mut child.matching));
    }
    NodeAnnotation {
        matching,
        aux_pair,
        some_black,
        some_white,
    }
}

/// Series rule: adopt the largest child matching when one has two or more
/// edges; otherwise build the size-2 crossing matching {v1 v4, v3 v2} from
/// the auxiliary pairs of two children. Across series children every
/// black/white pair is an edge, so the cross pairs are edges and the
/// within-child non-adjacencies keep the result induced.
pub fn combine_series(mut children: Vec<NodeAnnotation>) -> Result<NodeAnnotation, SolveError> {
    let (some_black, some_white) = merge_color_witnesses(&children);
    let best = best_child_index(&children, |_| true)
        .ok_or_else(|| SolveError::MalformedTree("series node without children".into()))?;
    let matching = if children[best].matching.len() >= 2 {
        std::mem::take(&mut children[best].matching)
    } else {
        let mut pairs = children.iter().filter_map(|c| c.aux_pair);
        let (v1, v2) = pairs.next().ok_or(SolveError::MissingAuxPair)?;
        let (v3, v4) = pairs.next().ok_or(SolveError::MissingAuxPair)?;
        InducedMatching::new(vec![(v1, v4), (v3, v2)])
    };
    Ok(NodeAnnotation {
        matching,
        aux_pair: None,
        some_black,
        some_white,
    })
}

/// K+S rule. Children come in the split order V1..Vk with a flag marking
/// single-vertex children. With a non-vertex child present, adopt the best
/// non-vertex child's matching. With vertex children only, the matching is a
/// single edge (the first black followed by a later white along the order)
/// or empty. Whenever the result has at most one edge, the auxiliary pair is
/// the first white followed by a later black, which the split order
/// guarantees to be non-adjacent.
pub fn combine_ks(mut children: Vec<(NodeAnnotation, bool)>) -> NodeAnnotation {
    let anns: Vec<NodeAnnotation> = children.iter().map(|(a, _)| a.clone()).collect();
    let (some_black, some_white) = merge_color_witnesses(&anns);
    let all_vertices = children.iter().all(|&(_, is_vertex)| is_vertex);
    let matching = if all_vertices {
        let mut first_black = None;
        let mut edge = None;
        for (ann, _) in &children {
            if first_black.is_none() {
                first_black = ann.some_black;
            } else if let Some(w) = ann.some_white {
                edge = Some((first_black.unwrap(), w));
                break;
            }
        }
        match edge {
            Some((b, w)) => InducedMatching::new(vec![(b, w)]),
            None => InducedMatching::empty(),
        }
    } else {
        let best = best_child_index(&anns, |i| !children[i].1).expect("non-vertex child exists");
        std::mem::take(&mut children[best].0.matching)
    };

    let mut aux_pair = None;
    if matching.len() <= 1 {
        let mut first_white = None;
        for (ann, _) in &children {
            if first_white.is_none() {
                first_white = ann.some_white;
            } else if let Some(b) = ann.some_black {
                aux_pair = Some((b, first_white.unwrap()));
                break;
            }
        }
    }
    NodeAnnotation {
        matching,
        aux_pair,
        some_black,
        some_white,
    }
}

/// Prime rule. One representative per class (the smallest id); extended
/// paths match classes (1,2), (4,5), (7,8), ... up to floor((k+1)/3) pairs,
/// extended cycles the same pattern up to floor(k/3), and the bicomplemented
/// forms pair classes (1,4) and (2,5), which are joined there because they
/// sit more than one step apart on the underlying path or cycle.
pub fn combine_prime(shape: &PrimeShape, colors: &[Color]) -> NodeAnnotation {
    let reps: Vec<usize> = shape.classes.iter().map(|c| c.min_id()).collect();
    let k = reps.len();
    let oriented = |u: usize, v: usize| match colors[u] {
        Color::Black => (u, v),
        Color::White => (v, u),
    };
    let pair_count = match shape.form {
        ShapeForm::Ep => (k + 1) / 3,
        ShapeForm::Ec => k / 3,
        ShapeForm::EpBip | ShapeForm::EcBip => 2,
    };
    let matching: InducedMatching = match shape.form {
        ShapeForm::Ep | ShapeForm::Ec => (0..pair_count)
            .map(|i| oriented(reps[3 * i], reps[3 * i + 1]))
            .collect(),
        ShapeForm::EpBip | ShapeForm::EcBip => vec![
            oriented(reps[0], reps[3]),
            oriented(reps[1], reps[4]),
        ]
        .into_iter()
        .collect(),
    };
    let some_black = reps.iter().copied().find(|&v| colors[v] == Color::Black);
    let some_white = reps.iter().copied().find(|&v| colors[v] == Color::White);
    NodeAnnotation {
        matching,
        aux_pair: None,
        some_black,
        some_white,
    }
}

/// Runs the post-order traversal and returns a maximum induced matching of
/// `g`. Expects `tree` to be the canonical decomposition tree of `g`.
pub fn solve(tree: &DecompNode, g: &BipartiteGraph) -> Result<InducedMatching, SolveError> {
    solve_with_stats(tree, g).map(|(m, _)| m)
}

/// Like [`solve`], additionally reporting operation counters.
pub fn solve_with_stats(
    tree: &DecompNode,
    g: &BipartiteGraph,
) -> Result<(InducedMatching, SolveStats), SolveError> {
    let colors = g.colors();
    let mut stats = SolveStats::default();

    struct Frame<'t> {
        node: &'t DecompNode,
        next: usize,
        acc: Vec<NodeAnnotation>,
    }

    let mut stack = vec![Frame {
        node: tree,
        next: 0,
        acc: Vec::new(),
    }];
    let mut finished: Option<NodeAnnotation> = None;

    while let Some(frame) = stack.last_mut() {
        if frame.next < frame.node.children.len() {
            let child = &frame.node.children[frame.next];
            frame.next += 1;
            match child.kind {
                NodeKind::Leaf(v) => {
                    stats.nodes += 1;
                    frame.acc.push(leaf_annotation(v, colors[v]));
                }
                NodeKind::PPrime => {
                    stats.nodes += child.node_count();
                    frame.acc.push(pprime_annotation(child, colors));
                }
                _ => stack.push(Frame {
                    node: child,
                    next: 0,
                    acc: Vec::new(),
                }),
            }
            continue;
        }

        let frame = stack.pop().expect("frame present");
        stats.nodes += 1;
        let children = frame.acc;
        let ann = match &frame.node.kind {
            NodeKind::Leaf(v) => leaf_annotation(*v, colors[*v]),
            NodeKind::PPrime => pprime_annotation(frame.node, colors),
            kind => {
                if children.len() < 2 {
                    return Err(SolveError::MalformedTree(
                        "internal node with fewer than 2 children".into(),
                    ));
                }
                stats.combine_work += children.len();
                match kind {
                    NodeKind::Parallel => {
                        let ann = combine_parallel(children);
                        stats.combine_work += ann.matching.len();
                        ann
                    }
                    NodeKind::Series => combine_series(children)?,
                    NodeKind::KPlusS => {
                        let tagged = children
                            .into_iter()
                            .zip(&frame.node.children)
                            .map(|(ann, child)| (ann, child.is_leaf()))
                            .collect();
                        combine_ks(tagged)
                    }
                    NodeKind::Prime(shape) => {
                        stats.combine_work += shape.k();
                        combine_prime(shape, colors)
                    }
                    NodeKind::Leaf(_) | NodeKind::PPrime => unreachable!(),
                }
            }
        };
        match stack.last_mut() {
            Some(parent) => parent.acc.push(ann),
            None => finished = Some(ann),
        }
    }

    let ann = finished.ok_or_else(|| SolveError::MalformedTree("empty tree".into()))?;
    Ok((ann.matching, stats))
}

/// Full pipeline: decompose, solve, and validate the result before
/// returning it.
pub fn max_induced_matching(g: &BipartiteGraph) -> Result<InducedMatching, MimError> {
    if g.vertex_count() == 0 {
        return Ok(InducedMatching::empty());
    }
    let tree = decompose(g)?;
    let matching = solve(&tree, g)?;
    if !g.is_induced_matching(&matching) {
        return Err(MimError::InternalInvariant);
    }
    Ok(matching)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::VertexSet;

    fn graph(colors: &[Color], edges: &[(usize, usize)]) -> BipartiteGraph {
        BipartiteGraph::new(colors.len(), colors.to_vec(), edges).unwrap()
    }

    fn path(n: usize) -> BipartiteGraph {
        let colors: Vec<Color> = (0..n)
            .map(|i| if i % 2 == 0 { Color::Black } else { Color::White })
            .collect();
        let edges: Vec<(usize, usize)> = (0..n.saturating_sub(1)).map(|i| (i, i + 1)).collect();
        graph(&colors, &edges)
    }

    fn ann(pairs: &[(usize, usize)], aux: Option<(usize, usize)>) -> NodeAnnotation {
        NodeAnnotation {
            matching: InducedMatching::new(pairs.to_vec()),
            aux_pair: aux,
            some_black: pairs.first().map(|p| p.0).or(aux.map(|a| a.0)),
            some_white: pairs.first().map(|p| p.1).or(aux.map(|a| a.1)),
        }
    }

    #[test]
    fn solve_p7_finds_two_pairs() {
        let g = path(7);
        let tree = decompose(&g).unwrap();
        let m = solve(&tree, &g).unwrap();
        assert_eq!(m.len(), 2);
        assert!(g.is_induced_matching(&m));
        assert_eq!(m.pairs(), &[(0, 1), (4, 3)]);
    }

    #[test]
    fn solve_single_vertex_is_empty() {
        let g = graph(&[Color::Black], &[]);
        let tree = decompose(&g).unwrap();
        assert!(solve(&tree, &g).unwrap().is_empty());
    }

    #[test]
    fn max_induced_matching_of_k2() {
        let g = graph(&[Color::Black, Color::White], &[(0, 1)]);
        assert_eq!(max_induced_matching(&g).unwrap().len(), 1);
    }

    #[test]
    fn max_induced_matching_of_edgeless_graph() {
        let g = graph(&[Color::Black, Color::White, Color::Black], &[]);
        assert!(max_induced_matching(&g).unwrap().is_empty());
    }

    #[test]
    fn parallel_concatenates_children() {
        let out = combine_parallel(vec![ann(&[(0, 1)], None), ann(&[(2, 3)], None)]);
        assert_eq!(out.matching.pairs(), &[(0, 1), (2, 3)]);
        let out = combine_parallel(vec![
            ann(&[(0, 1), (2, 3)], None),
            ann(&[(4, 5), (6, 7), (8, 9)], None),
        ]);
        assert_eq!(out.matching.len(), 5);
    }

    #[test]
    fn series_crosses_aux_pairs_when_children_are_small() {
        let c1 = ann(&[(1, 2)], Some((1, 0)));
        let c2 = ann(&[(5, 6)], Some((5, 4)));
        let out = combine_series(vec![c1, c2]).unwrap();
        assert_eq!(out.matching.pairs(), &[(1, 4), (5, 0)]);
    }

    #[test]
    fn series_adopts_a_large_child() {
        let c1 = ann(&[(0, 1)], Some((0, 3)));
        let c2 = ann(&[(4, 5), (6, 7), (8, 9), (10, 11), (12, 13)], None);
        let out = combine_series(vec![c1, c2]).unwrap();
        assert_eq!(out.matching.len(), 5);
        assert_eq!(out.matching.pairs()[0], (4, 5));
    }

    #[test]
    fn series_tie_goes_to_the_first_child() {
        let c1 = ann(&[(0, 1), (2, 3)], None);
        let c2 = ann(&[(4, 5), (6, 7)], None);
        let out = combine_series(vec![c1, c2]).unwrap();
        assert_eq!(out.matching.pairs(), &[(0, 1), (2, 3)]);
    }

    #[test]
    fn series_without_aux_pairs_fails() {
        let c1 = ann(&[(0, 1)], None);
        let c2 = ann(&[(2, 3)], None);
        assert_eq!(
            combine_series(vec![c1, c2]).unwrap_err(),
            SolveError::MissingAuxPair
        );
    }

    fn leaf_ann(v: usize, color: Color) -> (NodeAnnotation, bool) {
        (super::leaf_annotation(v, color), true)
    }

    #[test]
    fn ks_over_k22_vertices_takes_one_edge_and_no_aux() {
        // Split order of K2,2: blacks 0, 1 then whites 2, 3.
        let out = combine_ks(vec![
            leaf_ann(0, Color::Black),
            leaf_ann(1, Color::Black),
            leaf_ann(2, Color::White),
            leaf_ann(3, Color::White),
        ]);
        assert_eq!(out.matching.pairs(), &[(0, 2)]);
        assert_eq!(out.aux_pair, None);
    }

    #[test]
    fn ks_over_p3_vertices_has_no_aux() {
        // Split order of P3 (b1 - w - b2): ({b1}, {b2}, {w}).
        let out = combine_ks(vec![
            leaf_ann(0, Color::Black),
            leaf_ann(2, Color::Black),
            leaf_ann(1, Color::White),
        ]);
        assert_eq!(out.matching.pairs(), &[(0, 1)]);
        assert_eq!(out.aux_pair, None);
    }

    #[test]
    fn ks_chain_of_four_exposes_aux() {
        // Order (b, w, b', w'): white 1 precedes black 2, so (2, 1) is the
        // guaranteed non-adjacent pair.
        let out = combine_ks(vec![
            leaf_ann(0, Color::Black),
            leaf_ann(1, Color::White),
            leaf_ann(2, Color::Black),
            leaf_ann(3, Color::White),
        ]);
        assert_eq!(out.matching.pairs(), &[(0, 1)]);
        assert_eq!(out.aux_pair, Some((2, 1)));
    }

    #[test]
    fn ks_adopts_best_non_vertex_child() {
        let sub = ann(&[(4, 5), (6, 7)], None);
        let out = combine_ks(vec![(sub, false), leaf_ann(0, Color::Black)]);
        assert_eq!(out.matching.len(), 2);
    }

    #[test]
    fn ks_over_monochromatic_vertices_is_empty() {
        let out = combine_ks(vec![leaf_ann(0, Color::Black), leaf_ann(1, Color::Black)]);
        assert!(out.matching.is_empty());
        assert_eq!(out.aux_pair, None);
    }

    fn singleton_shape(form: ShapeForm, k: usize) -> PrimeShape {
        PrimeShape {
            form,
            classes: (0..k).map(VertexSet::singleton).collect(),
        }
    }

    fn alternating(k: usize) -> Vec<Color> {
        (0..k)
            .map(|i| if i % 2 == 0 { Color::Black } else { Color::White })
            .collect()
    }

    #[test]
    fn prime_extended_path_of_seven() {
        let out = combine_prime(&singleton_shape(ShapeForm::Ep, 7), &alternating(7));
        assert_eq!(out.matching.pairs(), &[(0, 1), (4, 3)]);
    }

    #[test]
    fn prime_extended_cycle_of_twelve() {
        let out = combine_prime(&singleton_shape(ShapeForm::Ec, 12), &alternating(12));
        assert_eq!(out.matching.len(), 4);
        assert_eq!(out.matching.pairs()[..2], [(0, 1), (4, 3)]);
    }

    #[test]
    fn prime_bicomplemented_path_of_seven() {
        let out = combine_prime(&singleton_shape(ShapeForm::EpBip, 7), &alternating(7));
        assert_eq!(out.matching.pairs(), &[(0, 3), (4, 1)]);
    }

    #[test]
    fn series_cross_construction_end_to_end() {
        // Two copies of (isolated white, K2, isolated black) joined in
        // series: each co-component has a matching of size 1 plus an
        // auxiliary pair, so the answer is the crossing matching of size 2.
        let colors = [
            Color::White, Color::Black, Color::White, Color::Black,
            Color::White, Color::Black, Color::White, Color::Black,
        ];
        let edges = [
            (1, 2), (5, 6),
            (1, 4), (1, 6), (3, 4), (3, 6),
            (5, 0), (5, 2), (7, 0), (7, 2),
        ];
        let g = graph(&colors, &edges);
        let tree = decompose(&g).unwrap();
        assert!(matches!(tree.kind, NodeKind::Series));
        assert_eq!(tree.children.len(), 2);
        let m = solve(&tree, &g).unwrap();
        assert_eq!(m.len(), 2);
        assert!(g.is_induced_matching(&m));
    }

    #[test]
    fn stats_are_linear_in_tree_size() {
        let g = path(61);
        let tree = decompose(&g).unwrap();
        let (_, stats) = solve_with_stats(&tree, &g).unwrap();
        assert_eq!(stats.nodes, tree.node_count());
        assert!(stats.combine_work <= 4 * tree.node_count());
    }
}
