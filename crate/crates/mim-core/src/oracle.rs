//! Exponential-time ground truth, used by tests and the `oracle` CLI
//! subcommand. Every function carries a hard size guard and refuses larger
//! inputs instead of running unbounded.

use crate::graph::{BipartiteGraph, Color, VertexSet};
use crate::matching::InducedMatching;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum OracleError {
    #[error("input too large for the oracle: {0} (limit {1})")]
    TooLarge(usize, usize),
}

const MAX_ORACLE_EDGES: usize = 64;
const MAX_STAR_VERTICES: usize = 14;
const MAX_SPLIT_VERTICES: usize = 8;

/// Exact maximum induced matching by branch and bound over the edge list.
///
/// Edges are taken in ascending id order; a branch is cut as soon as the
/// remaining compatible edges cannot beat the incumbent. The witness is the
/// first maximum encountered, which makes it deterministic.
pub fn brute_force_mim(g: &BipartiteGraph) -> Result<InducedMatching, OracleError> {
    let m = g.edge_count();
    if m > MAX_ORACLE_EDGES {
        return Err(OracleError::TooLarge(m, MAX_ORACLE_EDGES));
    }
    let edges = g.edges();
    // compat[i] has bit j set iff edges i and j can coexist in an induced
    // matching: disjoint endpoints and no edge of g across them.
    let mut compat = vec![0u64; m];
    for i in 0..m {
        let (a, b) = edges[i];
        for j in i + 1..m {
            let (c, d) = edges[j];
            let ok = a != c && b != d && !g.has_edge(a, d) && !g.has_edge(c, b);
            if ok {
                compat[i] |= 1 << j;
                compat[j] |= 1 << i;
            }
        }
    }

    let mut best: Vec<usize> = Vec::new();
    let mut current: Vec<usize> = Vec::new();
    let all = if m == 64 { u64::MAX } else { (1u64 << m) - 1 };
    search(all, &compat, &mut current, &mut best);
    Ok(best.iter().map(|&i| edges[i]).collect())
}

fn search(candidates: u64, compat: &[u64], current: &mut Vec<usize>, best: &mut Vec<usize>) {
    if current.len() > best.len() {
        *best = current.clone();
    }
    let mut rest = candidates;
    while rest != 0 {
        if current.len() + rest.count_ones() as usize <= best.len() {
            return;
        }
        let i = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        current.push(i);
        search(rest & compat[i], compat, current, best);
        current.pop();
    }
}

/// Searches for an induced skew star: the 7-vertex tree made of paths of
/// lengths 1, 2 and 3 hanging off a common center. Returns the vertex set of
/// the first occurrence in lexicographic subset order.
pub fn contains_star123(g: &BipartiteGraph) -> Result<Option<VertexSet>, OracleError> {
    let n = g.vertex_count();
    if n > MAX_STAR_VERTICES {
        return Err(OracleError::TooLarge(n, MAX_STAR_VERTICES));
    }
    if n < 7 {
        return Ok(None);
    }
    let mut subset: Vec<usize> = (0..7).collect();
    loop {
        if induces_star123(g, &subset) {
            return Ok(Some(VertexSet::new(subset)));
        }
        // Next 7-subset in lexicographic order.
        let mut i = 6;
        loop {
            if subset[i] < n - (7 - i) {
                subset[i] += 1;
                for j in i + 1..7 {
                    subset[j] = subset[j - 1] + 1;
                }
                break;
            }
            if i == 0 {
                return Ok(None);
            }
            i -= 1;
        }
    }
}

fn induces_star123(g: &BipartiteGraph, vs: &[usize]) -> bool {
    let mut adj = [[false; 7]; 7];
    let mut deg = [0usize; 7];
    let mut edge_count = 0;
    for i in 0..7 {
        for j in i + 1..7 {
            if g.has_edge(vs[i], vs[j]) {
                adj[i][j] = true;
                adj[j][i] = true;
                deg[i] += 1;
                deg[j] += 1;
                edge_count += 1;
            }
        }
    }
    if edge_count != 6 {
        return false;
    }
    let mut sorted = deg;
    sorted.sort_unstable();
    if sorted != [1, 1, 1, 2, 2, 2, 3] {
        return false;
    }
    let center = (0..7).find(|&i| deg[i] == 3).unwrap();
    let nbrs: Vec<usize> = (0..7).filter(|&i| adj[center][i]).collect();
    let leaf_arms: Vec<usize> = nbrs.iter().copied().filter(|&i| deg[i] == 1).collect();
    let mid_arms: Vec<usize> = nbrs.iter().copied().filter(|&i| deg[i] == 2).collect();
    if leaf_arms.len() != 1 || mid_arms.len() != 2 {
        return false;
    }
    let other_of = |v: usize, not: usize| (0..7).find(|&u| adj[v][u] && u != not);
    // One middle arm continues one more step (b1 - b2), the other two more
    // (c1 - c2 - c3). Try both assignments.
    for (b1, c1) in [(mid_arms[0], mid_arms[1]), (mid_arms[1], mid_arms[0])] {
        let Some(b2) = other_of(b1, center) else { continue };
        let Some(c2) = other_of(c1, center) else { continue };
        if deg[b2] != 1 || deg[c2] != 2 {
            continue;
        }
        let Some(c3) = other_of(c2, c1) else { continue };
        if deg[c3] == 1 {
            return true;
        }
    }
    false
}

/// Finds any associated partition (V1, V2) by enumerating all bipartitions,
/// or `None` when no split exists. Used to validate `ks_split`.
pub fn brute_force_ks_split(
    g: &BipartiteGraph,
) -> Result<Option<(VertexSet, VertexSet)>, OracleError> {
    let n = g.vertex_count();
    if n > MAX_SPLIT_VERTICES {
        return Err(OracleError::TooLarge(n, MAX_SPLIT_VERTICES));
    }
    if n < 2 {
        return Ok(None);
    }
    for mask in 1u32..(1 << n) - 1 {
        let v1: Vec<usize> = (0..n).filter(|&v| mask & (1 << v) != 0).collect();
        let v2: Vec<usize> = (0..n).filter(|&v| mask & (1 << v) == 0).collect();
        let mut ok = true;
        'check: for &a in &v1 {
            for &b in &v2 {
                match (g.color(a), g.color(b)) {
                    (Color::Black, Color::White) if !g.has_edge(a, b) => {
                        ok = false;
                        break 'check;
                    }
                    (Color::White, Color::Black) if g.has_edge(a, b) => {
                        ok = false;
                        break 'check;
                    }
                    _ => {}
                }
            }
        }
        if ok {
            return Ok(Some((VertexSet::new(v1), VertexSet::new(v2))));
        }
    }
    Ok(None)
}
