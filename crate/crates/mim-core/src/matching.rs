//! Induced matchings as lists of `(black, white)` vertex pairs.

/// A set of edges, stored as `(black, white)` pairs. Produced by the solver
/// and the oracle; validated against a graph with
/// [`BipartiteGraph::is_induced_matching`](crate::BipartiteGraph::is_induced_matching).
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct InducedMatching {
    pairs: Vec<(usize, usize)>,
}

impl InducedMatching {
    pub fn new(pairs: Vec<(usize, usize)>) -> Self {
        InducedMatching { pairs }
    }

    pub fn empty() -> Self {
        InducedMatching { pairs: Vec::new() }
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    pub fn push(&mut self, black: usize, white: usize) {
        self.pairs.push((black, white));
    }

    pub fn extend_from(&mut self, other: InducedMatching) {
        self.pairs.extend(other.pairs);
    }

    pub fn into_pairs(self) -> Vec<(usize, usize)> {
        self.pairs
    }
}

impl FromIterator<(usize, usize)> for InducedMatching {
    fn from_iter<T: IntoIterator<Item = (usize, usize)>>(iter: T) -> Self {
        InducedMatching {
            pairs: iter.into_iter().collect(),
        }
    }
}
