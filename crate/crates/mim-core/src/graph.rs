//! Bipartite graph representation with black/white vertex classes.
//!
//! Vertices are dense ids `0..n`. Every edge joins a black vertex to a white
//! vertex; edges are stored normalized as `(black, white)`. Graphs are
//! immutable after construction, so they can be shared freely across threads.

use std::collections::HashMap;

use crate::matching::InducedMatching;

/// Vertex color. Every vertex has exactly one.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Color {
    Black,
    White,
}

impl Color {
    pub fn flip(self) -> Color {
        match self {
            Color::Black => Color::White,
            Color::White => Color::Black,
        }
    }

    pub fn letter(self) -> char {
        match self {
            Color::Black => 'B',
            Color::White => 'W',
        }
    }
}

/// Errors raised while building or querying a [`BipartiteGraph`].
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GraphError {
    #[error("edge ({0}, {1}) joins two vertices of the same color")]
    MonochromaticEdge(usize, usize),
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),
    #[error("vertex index {0} out of range (n = {1})")]
    BadIndex(usize, usize),
    #[error("expected {expected} colors, got {got}")]
    ColorCountMismatch { expected: usize, got: usize },
}

/// An ordered set of vertex ids (sorted ascending, no duplicates).
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct VertexSet(Vec<usize>);

impl VertexSet {
    pub fn new(mut ids: Vec<usize>) -> Self {
        ids.sort_unstable();
        ids.dedup();
        VertexSet(ids)
    }

    /// Wraps a vector that is already sorted and duplicate-free.
    pub(crate) fn from_sorted(ids: Vec<usize>) -> Self {
        debug_assert!(ids.windows(2).all(|w| w[0] < w[1]));
        VertexSet(ids)
    }

    pub fn singleton(v: usize) -> Self {
        VertexSet(vec![v])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    /// Smallest contained id; panics on an empty set.
    pub fn min_id(&self) -> usize {
        self.0[0]
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        VertexSet::new(iter.into_iter().collect())
    }
}

impl std::fmt::Display for VertexSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

/// Immutable bipartite graph. The single source of truth for edges.
///
/// Adjacency is kept both as per-vertex sorted neighbor lists (for `has_edge`
/// via binary search) and as a sorted `(black, white)` edge list (for
/// iteration); the constructor guarantees the two views agree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BipartiteGraph {
    colors: Vec<Color>,
    adj: Vec<Vec<usize>>,
    edges: Vec<(usize, usize)>,
}

impl BipartiteGraph {
    /// Builds a validated graph. Edge endpoints may be given in either order;
    /// they are normalized to `(black, white)`.
    pub fn new(
        n: usize,
        colors: Vec<Color>,
        edge_list: &[(usize, usize)],
    ) -> Result<Self, GraphError> {
        if colors.len() != n {
            return Err(GraphError::ColorCountMismatch {
                expected: n,
                got: colors.len(),
            });
        }
        let mut edges = Vec::with_capacity(edge_list.len());
        for &(u, v) in edge_list {
            if u >= n {
                return Err(GraphError::BadIndex(u, n));
            }
            if v >= n {
                return Err(GraphError::BadIndex(v, n));
            }
            if colors[u] == colors[v] {
                return Err(GraphError::MonochromaticEdge(u, v));
            }
            let (b, w) = if colors[u] == Color::Black {
                (u, v)
            } else {
                (v, u)
            };
            edges.push((b, w));
        }
        edges.sort_unstable();
        if let Some(win) = edges.windows(2).find(|win| win[0] == win[1]) {
            return Err(GraphError::DuplicateEdge(win[0].0, win[0].1));
        }
        let mut adj = vec![Vec::new(); n];
        for &(b, w) in &edges {
            adj[b].push(w);
            adj[w].push(b);
        }
        for nbrs in &mut adj {
            nbrs.sort_unstable();
        }
        Ok(BipartiteGraph { colors, adj, edges })
    }

    pub fn vertex_count(&self) -> usize {
        self.colors.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn color(&self, v: usize) -> Color {
        self.colors[v]
    }

    pub fn colors(&self) -> &[Color] {
        &self.colors
    }

    /// Sorted `(black, white)` edge list.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Sorted neighbor list of `v`.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    pub fn vertices(&self) -> impl Iterator<Item = usize> {
        0..self.vertex_count()
    }

    pub fn blacks(&self) -> impl Iterator<Item = usize> + '_ {
        self.vertices().filter(|&v| self.colors[v] == Color::Black)
    }

    pub fn whites(&self) -> impl Iterator<Item = usize> + '_ {
        self.vertices().filter(|&v| self.colors[v] == Color::White)
    }

    pub fn black_count(&self) -> usize {
        self.blacks().count()
    }

    pub fn white_count(&self) -> usize {
        self.whites().count()
    }

    /// The bipartite complement: same vertices and colors, edge set
    /// `B x W` minus the original edges.
    pub fn bicomplement(&self) -> BipartiteGraph {
        let blacks: Vec<usize> = self.blacks().collect();
        let mut edges = Vec::new();
        for &b in &blacks {
            for w in self.whites() {
                if !self.has_edge(b, w) {
                    edges.push((b, w));
                }
            }
        }
        BipartiteGraph::new(self.vertex_count(), self.colors.clone(), &edges)
            .expect("complement of a valid graph is valid")
    }

    /// Connected components, ordered by smallest contained vertex id.
    pub fn connected_components(&self) -> Vec<VertexSet> {
        let n = self.vertex_count();
        let mut seen = vec![false; n];
        let mut comps = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut comp = Vec::new();
            let mut queue = vec![start];
            seen[start] = true;
            while let Some(v) = queue.pop() {
                comp.push(v);
                for &u in &self.adj[v] {
                    if !seen[u] {
                        seen[u] = true;
                        queue.push(u);
                    }
                }
            }
            comps.push(VertexSet::new(comp));
        }
        // BFS from increasing start ids already yields min-id order.
        comps
    }

    /// Connected components of the bicomplement, computed without
    /// materializing it. BFS over non-neighbors uses an unvisited pool so the
    /// total cost stays near O(n + m) even when the complement is dense.
    pub fn co_components(&self) -> Vec<VertexSet> {
        let n = self.vertex_count();
        let mut unvisited_black: Vec<usize> = self.blacks().collect();
        let mut unvisited_white: Vec<usize> = self.whites().collect();
        let mut seen = vec![false; n];
        let mut comps = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            match self.colors[start] {
                Color::Black => unvisited_black.retain(|&v| v != start),
                Color::White => unvisited_white.retain(|&v| v != start),
            }
            let mut comp = Vec::new();
            let mut queue = vec![start];
            while let Some(v) = queue.pop() {
                comp.push(v);
                let pool = match self.colors[v] {
                    Color::Black => &mut unvisited_white,
                    Color::White => &mut unvisited_black,
                };
                let mut i = 0;
                while i < pool.len() {
                    let u = pool[i];
                    if self.has_edge(v, u) {
                        i += 1;
                    } else {
                        pool.swap_remove(i);
                        seen[u] = true;
                        queue.push(u);
                    }
                }
            }
            comps.push(VertexSet::new(comp));
        }
        comps
    }

    /// Subgraph induced by `s`, with local ids `0..s.len()`. The second
    /// component maps each local id back to the original id.
    pub fn induced_subgraph(
        &self,
        s: &VertexSet,
    ) -> Result<(BipartiteGraph, Vec<usize>), GraphError> {
        let n = self.vertex_count();
        let orig: Vec<usize> = s.iter().collect();
        for &v in &orig {
            if v >= n {
                return Err(GraphError::BadIndex(v, n));
            }
        }
        let mut local = HashMap::with_capacity(orig.len());
        for (i, &v) in orig.iter().enumerate() {
            local.insert(v, i);
        }
        let colors: Vec<Color> = orig.iter().map(|&v| self.colors[v]).collect();
        let mut edges = Vec::new();
        for (i, &v) in orig.iter().enumerate() {
            if self.colors[v] != Color::Black {
                continue;
            }
            for &w in &self.adj[v] {
                if let Some(&j) = local.get(&w) {
                    edges.push((i, j));
                }
            }
        }
        let g = BipartiteGraph::new(orig.len(), colors, &edges)?;
        Ok((g, orig))
    }

    /// Partition of the vertex set into maximal twin classes: `u` and `v`
    /// share a class iff they have the same color and the same neighborhood.
    /// Classes are ordered by smallest member id.
    pub fn twin_classes(&self) -> Vec<VertexSet> {
        let mut groups: HashMap<(Color, &[usize]), Vec<usize>> = HashMap::new();
        for v in 0..self.vertex_count() {
            groups
                .entry((self.colors[v], self.adj[v].as_slice()))
                .or_default()
                .push(v);
        }
        let mut classes: Vec<VertexSet> = groups.into_values().map(VertexSet::new).collect();
        classes.sort_by_key(|c| c.min_id());
        classes
    }

    /// True iff `m` is an induced matching of this graph: every pair is an
    /// edge, no vertex repeats, and no edge of the graph connects endpoints
    /// of two different matching pairs.
    pub fn is_induced_matching(&self, m: &InducedMatching) -> bool {
        let mut used = Vec::with_capacity(2 * m.len());
        for &(u, v) in m.pairs() {
            if u >= self.vertex_count() || v >= self.vertex_count() || !self.has_edge(u, v) {
                return false;
            }
            used.push(u);
            used.push(v);
        }
        let count = used.len();
        used.sort_unstable();
        used.dedup();
        if used.len() != count {
            return false;
        }
        let pairs = m.pairs();
        for (i, &(a, b)) in pairs.iter().enumerate() {
            for &(c, d) in &pairs[i + 1..] {
                if self.has_edge(a, d) || self.has_edge(c, b) {
                    return false;
                }
            }
        }
        true
    }

    /// All vertices as one set.
    pub fn full_vertex_set(&self) -> VertexSet {
        VertexSet::from_sorted(self.vertices().collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Path on n vertices with alternating colors starting black.
    pub(crate) fn path(n: usize) -> BipartiteGraph {
        let colors = (0..n)
            .map(|i| if i % 2 == 0 { Color::Black } else { Color::White })
            .collect();
        let edges: Vec<(usize, usize)> = (0..n.saturating_sub(1)).map(|i| (i, i + 1)).collect();
        BipartiteGraph::new(n, colors, &edges).unwrap()
    }

    fn k22() -> BipartiteGraph {
        BipartiteGraph::new(
            4,
            vec![Color::Black, Color::Black, Color::White, Color::White],
            &[(0, 2), (0, 3), (1, 2), (1, 3)],
        )
        .unwrap()
    }

    #[test]
    fn builds_k2() {
        let g = BipartiteGraph::new(2, vec![Color::Black, Color::White], &[(0, 1)]).unwrap();
        assert_eq!(g.vertex_count(), 2);
        assert_eq!(g.edges(), &[(0, 1)]);
        assert!(g.has_edge(0, 1));
        assert!(g.has_edge(1, 0));
    }

    #[test]
    fn builds_single_vertex() {
        let g = BipartiteGraph::new(1, vec![Color::Black], &[]).unwrap();
        assert_eq!(g.vertex_count(), 1);
        assert_eq!(g.edge_count(), 0);
    }

    #[test]
    fn rejects_monochromatic_edge() {
        let err = BipartiteGraph::new(2, vec![Color::Black, Color::Black], &[(0, 1)]).unwrap_err();
        assert_eq!(err, GraphError::MonochromaticEdge(0, 1));
    }

    #[test]
    fn rejects_duplicate_edge_even_when_reversed() {
        let err = BipartiteGraph::new(
            2,
            vec![Color::Black, Color::White],
            &[(0, 1), (1, 0)],
        )
        .unwrap_err();
        assert_eq!(err, GraphError::DuplicateEdge(0, 1));
    }

    #[test]
    fn rejects_bad_index() {
        let err = BipartiteGraph::new(2, vec![Color::Black, Color::White], &[(0, 5)]).unwrap_err();
        assert_eq!(err, GraphError::BadIndex(5, 2));
    }

    #[test]
    fn normalizes_edge_order() {
        let g = BipartiteGraph::new(2, vec![Color::White, Color::Black], &[(0, 1)]).unwrap();
        assert_eq!(g.edges(), &[(1, 0)]);
    }

    #[test]
    fn bicomplement_of_k2_is_edgeless() {
        let g = BipartiteGraph::new(2, vec![Color::Black, Color::White], &[(0, 1)]).unwrap();
        assert_eq!(g.bicomplement().edge_count(), 0);
    }

    #[test]
    fn bicomplement_is_involution() {
        let g = path(7);
        assert_eq!(g.bicomplement().bicomplement(), g);
    }

    #[test]
    fn bicomplement_edge_count_of_p7() {
        // P7 has 4 blacks and 3 whites: 12 bichromatic pairs, 6 path edges.
        let g = path(7);
        assert_eq!(g.black_count() * g.white_count(), 12);
        assert_eq!(g.bicomplement().edge_count(), 12 - 6);
    }

    #[test]
    fn components_of_2k2() {
        let g = BipartiteGraph::new(
            4,
            vec![Color::Black, Color::White, Color::Black, Color::White],
            &[(0, 1), (2, 3)],
        )
        .unwrap();
        let comps = g.connected_components();
        assert_eq!(comps, vec![VertexSet::new(vec![0, 1]), VertexSet::new(vec![2, 3])]);
    }

    #[test]
    fn connected_p7_is_one_component() {
        assert_eq!(path(7).connected_components().len(), 1);
    }

    #[test]
    fn edgeless_graph_components_are_singletons() {
        let g = BipartiteGraph::new(
            3,
            vec![Color::Black, Color::White, Color::Black],
            &[],
        )
        .unwrap();
        assert_eq!(g.connected_components().len(), 3);
    }

    #[test]
    fn co_components_match_explicit_bicomplement() {
        for g in [path(5), path(6), path(7), k22()] {
            assert_eq!(g.co_components(), g.bicomplement().connected_components());
        }
    }

    #[test]
    fn induced_subgraph_single_vertex() {
        let g = BipartiteGraph::new(2, vec![Color::Black, Color::White], &[(0, 1)]).unwrap();
        let (sub, orig) = g.induced_subgraph(&VertexSet::singleton(0)).unwrap();
        assert_eq!(sub.vertex_count(), 1);
        assert_eq!(sub.color(0), Color::Black);
        assert_eq!(orig, vec![0]);
    }

    #[test]
    fn induced_subgraph_identity() {
        let g = path(7);
        let (sub, _) = g.induced_subgraph(&g.full_vertex_set()).unwrap();
        assert_eq!(sub, g);
    }

    #[test]
    fn induced_subgraph_of_p7_is_2k2() {
        // Path vertices v1 v2 v4 v5 in 0-based ids: {0, 1, 3, 4}.
        let g = path(7);
        let (sub, orig) = g.induced_subgraph(&VertexSet::new(vec![0, 1, 3, 4])).unwrap();
        assert_eq!(orig, vec![0, 1, 3, 4]);
        assert_eq!(sub.edge_count(), 2);
        assert_eq!(sub.connected_components().len(), 2);
    }

    #[test]
    fn induced_subgraph_rejects_bad_ids() {
        let g = path(3);
        assert!(matches!(
            g.induced_subgraph(&VertexSet::new(vec![0, 9])),
            Err(GraphError::BadIndex(9, 3))
        ));
    }

    #[test]
    fn twin_classes_of_k22() {
        let classes = k22().twin_classes();
        assert_eq!(classes, vec![VertexSet::new(vec![0, 1]), VertexSet::new(vec![2, 3])]);
    }

    #[test]
    fn twin_classes_of_p7_are_singletons() {
        let classes = path(7).twin_classes();
        assert_eq!(classes.len(), 7);
        assert!(classes.iter().all(|c| c.len() == 1));
    }

    #[test]
    fn induced_matching_examples_on_p7() {
        let g = path(7);
        // v1v2 and v4v5 in 0-based ids: (0,1) and (4,3) normalized.
        let ok = InducedMatching::new(vec![(0, 1), (4, 3)]);
        assert!(g.is_induced_matching(&ok));
        // v1v2 and v3v4 are joined by the path edge v2v3.
        let bad = InducedMatching::new(vec![(0, 1), (2, 3)]);
        assert!(!g.is_induced_matching(&bad));
        assert!(g.is_induced_matching(&InducedMatching::empty()));
    }

    #[test]
    fn induced_matching_rejects_repeated_vertex() {
        let g = k22();
        let m = InducedMatching::new(vec![(0, 2), (0, 3)]);
        assert!(!g.is_induced_matching(&m));
    }
}
