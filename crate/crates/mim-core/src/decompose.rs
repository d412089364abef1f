//! Canonical decomposition of bipartite graphs.
//!
//! The tree is built by recursive application of three splits, tried in a
//! fixed order: the K+S split, the parallel split (connected components) and
//! the series split (components of the bicomplement). What remains is an
//! indecomposable (prime) node, which for bipartite Star123-free graphs is
//! always an extended path, an extended cycle, or the bicomplement of one of
//! those, with at least 7 monochromatic classes. Anything else makes the
//! whole graph fall outside the class, which is reported as
//! [`DecomposeError::NotStar123Free`].

use std::fmt::Write as _;

use crate::graph::{BipartiteGraph, Color, GraphError, VertexSet};

/// Shape of a prime node: extended path / extended cycle, or the
/// bicomplement of one.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ShapeForm {
    Ep,
    Ec,
    EpBip,
    EcBip,
}

impl ShapeForm {
    pub fn name(self) -> &'static str {
        match self {
            ShapeForm::Ep => "EP",
            ShapeForm::Ec => "EC",
            ShapeForm::EpBip => "EPBIP",
            ShapeForm::EcBip => "ECBIP",
        }
    }

    pub fn is_cycle(self) -> bool {
        matches!(self, ShapeForm::Ec | ShapeForm::EcBip)
    }

    pub fn is_bicomplemented(self) -> bool {
        matches!(self, ShapeForm::EpBip | ShapeForm::EcBip)
    }
}

/// Classification of a prime node: the form plus the monochromatic classes
/// V1..Vk listed in path/cycle order (for the bicomplemented forms, in the
/// order of the underlying path/cycle of the bicomplement).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimeShape {
    pub form: ShapeForm,
    pub classes: Vec<VertexSet>,
}

impl PrimeShape {
    pub fn k(&self) -> usize {
        self.classes.len()
    }
}

/// Node label of the decomposition tree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NodeKind {
    /// A single vertex of the graph.
    Leaf(usize),
    /// Parallel node: children are the connected components.
    Parallel,
    /// Series node: children are the components of the bicomplement.
    Series,
    /// K+S node: children are the ordered K+S components V1..Vk.
    KPlusS,
    /// Prime node with its shape classification.
    Prime(PrimeShape),
    /// One monochromatic class of size > 1 under a prime node.
    PPrime,
}

/// A node of the canonical decomposition tree. `vertices` is the set of
/// graph vertices below this node (in original graph ids); children vertex
/// sets partition it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecompNode {
    pub kind: NodeKind,
    pub children: Vec<DecompNode>,
    pub vertices: VertexSet,
}

impl DecompNode {
    pub fn leaf(v: usize) -> Self {
        DecompNode {
            kind: NodeKind::Leaf(v),
            children: Vec::new(),
            vertices: VertexSet::singleton(v),
        }
    }

    pub fn is_leaf(&self) -> bool {
        matches!(self.kind, NodeKind::Leaf(_))
    }

    /// Total node count of the subtree (internal nodes plus leaves).
    pub fn node_count(&self) -> usize {
        1 + self.children.iter().map(DecompNode::node_count).sum::<usize>()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DecomposeError {
    #[error("cannot decompose a graph with no vertices")]
    EmptyGraph,
    #[error("K+S split needs at least 2 vertices")]
    TooSmall,
    #[error("graph is not bipartite Star123-free (prime subgraph on vertices {0} has no admissible shape)")]
    NotStar123Free(VertexSet),
    #[error("malformed decomposition tree: {0}")]
    MalformedTree(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Computes the K+S decomposition V1..Vk of `g`, or `None` when `g` admits
/// no such split.
///
/// Every prefix union V1..Vi of the returned order is an associated
/// partition: all edges are present from its black vertices to the white
/// vertices of the rest, and none from its white vertices to the black
/// vertices of the rest. No returned part splits any further.
///
/// The order is the reverse topological order of the strongly connected
/// components of the implication digraph that has an arc b -> w for every
/// bichromatic non-edge and w -> b for every edge; ties between incomparable
/// components are broken by smallest vertex id. That digraph is never built:
/// its condensation is a chain except for runs of equal-degree same-color
/// singletons, so sorting blacks by descending degree, whites by ascending
/// degree (ids break ties) and merging the two lists with single edge probes
/// yields a linear order in which the components are consecutive segments.
/// The segment boundaries are exactly the positions where the prefix
/// conditions hold, which one incremental scan finds in O(n + m).
pub fn ks_split(g: &BipartiteGraph) -> Result<Option<Vec<VertexSet>>, DecomposeError> {
    let n = g.vertex_count();
    if n < 2 {
        return Err(DecomposeError::TooSmall);
    }

    let mut blacks: Vec<usize> = g.blacks().collect();
    let mut whites: Vec<usize> = g.whites().collect();
    blacks.sort_by(|&a, &b| g.degree(b).cmp(&g.degree(a)).then(a.cmp(&b)));
    whites.sort_by(|&a, &b| g.degree(a).cmp(&g.degree(b)).then(a.cmp(&b)));

    let mut order = Vec::with_capacity(n);
    let (mut bi, mut wi) = (0, 0);
    while bi < blacks.len() && wi < whites.len() {
        if g.has_edge(blacks[bi], whites[wi]) {
            order.push(blacks[bi]);
            bi += 1;
        } else {
            order.push(whites[wi]);
            wi += 1;
        }
    }
    order.extend_from_slice(&blacks[bi..]);
    order.extend_from_slice(&whites[wi..]);

    // Incremental prefix check. e_bw counts edges from prefix blacks to
    // suffix whites, e_wb edges from prefix whites to suffix blacks.
    let total_whites = whites.len();
    let mut in_prefix = vec![false; n];
    let (mut b_pre, mut w_pre) = (0usize, 0usize);
    let (mut e_bw, mut e_wb) = (0usize, 0usize);
    let mut cuts = Vec::new();
    for (pos, &v) in order.iter().enumerate() {
        match g.color(v) {
            Color::Black => {
                b_pre += 1;
                for &w in g.neighbors(v) {
                    if in_prefix[w] {
                        e_wb -= 1;
                    } else {
                        e_bw += 1;
                    }
                }
            }
            Color::White => {
                w_pre += 1;
                for &b in g.neighbors(v) {
                    if in_prefix[b] {
                        e_bw -= 1;
                    } else {
                        e_wb += 1;
                    }
                }
            }
        }
        in_prefix[v] = true;
        let w_suf = total_whites - w_pre;
        if pos + 1 < n && e_wb == 0 && e_bw == b_pre * w_suf {
            cuts.push(pos + 1);
        }
    }

    if cuts.is_empty() {
        return Ok(None);
    }
    let mut parts = Vec::with_capacity(cuts.len() + 1);
    let mut start = 0;
    for &cut in cuts.iter().chain(std::iter::once(&n)) {
        parts.push(VertexSet::new(order[start..cut].to_vec()));
        start = cut;
    }
    Ok(Some(parts))
}

/// Builds the canonical decomposition tree of `g`.
///
/// Split precedence is K+S, then parallel, then series, then prime; a graph
/// with an isolated or universal vertex always takes the K+S branch, so no
/// leaf ever hangs under a parallel or series node.
pub fn decompose(g: &BipartiteGraph) -> Result<DecompNode, DecomposeError> {
    if g.vertex_count() == 0 {
        return Err(DecomposeError::EmptyGraph);
    }
    let orig: Vec<usize> = g.vertices().collect();
    decompose_rec(g, &orig, true)
}

fn decompose_rec(
    g: &BipartiteGraph,
    orig: &[usize],
    try_ks: bool,
) -> Result<DecompNode, DecomposeError> {
    let n = g.vertex_count();
    if n == 1 {
        return Ok(DecompNode::leaf(orig[0]));
    }

    if try_ks {
        if let Some(parts) = ks_split(g)? {
            let mut children = Vec::with_capacity(parts.len());
            for part in &parts {
                children.push(decompose_part(g, orig, part, false)?);
            }
            let vertices = VertexSet::new(orig.to_vec());
            return Ok(DecompNode {
                kind: NodeKind::KPlusS,
                children,
                vertices,
            });
        }
    }

    let comps = g.connected_components();
    if comps.len() >= 2 {
        let mut children = Vec::with_capacity(comps.len());
        for comp in &comps {
            debug_assert!(comp.len() >= 2, "isolated vertex survived the K+S test");
            children.push(decompose_part(g, orig, comp, true)?);
        }
        return Ok(DecompNode {
            kind: NodeKind::Parallel,
            children,
            vertices: VertexSet::new(orig.to_vec()),
        });
    }

    let co_comps = g.co_components();
    if co_comps.len() >= 2 {
        let mut children = Vec::with_capacity(co_comps.len());
        for comp in &co_comps {
            debug_assert!(comp.len() >= 2, "universal vertex survived the K+S test");
            children.push(decompose_part(g, orig, comp, true)?);
        }
        return Ok(DecompNode {
            kind: NodeKind::Series,
            children,
            vertices: VertexSet::new(orig.to_vec()),
        });
    }

    // Connected, co-connected and K+S-indecomposable: a prime node.
    let shape = match classify_prime(g) {
        Ok(shape) => shape,
        Err(DecomposeError::NotStar123Free(local)) => {
            let global: VertexSet = local.iter().map(|v| orig[v]).collect();
            return Err(DecomposeError::NotStar123Free(global));
        }
        Err(e) => return Err(e),
    };
    let classes: Vec<VertexSet> = shape
        .classes
        .iter()
        .map(|c| c.iter().map(|v| orig[v]).collect())
        .collect();
    let children = classes
        .iter()
        .map(|class| {
            if class.len() == 1 {
                DecompNode::leaf(class.min_id())
            } else {
                DecompNode {
                    kind: NodeKind::PPrime,
                    children: class.iter().map(DecompNode::leaf).collect(),
                    vertices: class.clone(),
                }
            }
        })
        .collect();
    Ok(DecompNode {
        kind: NodeKind::Prime(PrimeShape {
            form: shape.form,
            classes,
        }),
        children,
        vertices: VertexSet::new(orig.to_vec()),
    })
}

fn decompose_part(
    g: &BipartiteGraph,
    orig: &[usize],
    part: &VertexSet,
    try_ks: bool,
) -> Result<DecompNode, DecomposeError> {
    if part.len() == 1 {
        return Ok(DecompNode::leaf(orig[part.min_id()]));
    }
    let (sub, local_ids) = g.induced_subgraph(part)?;
    let sub_orig: Vec<usize> = local_ids.iter().map(|&v| orig[v]).collect();
    decompose_rec(&sub, &sub_orig, try_ks)
}

/// Classifies a prime graph: must be connected, co-connected and
/// K+S-indecomposable (the `decompose` recursion guarantees this).
///
/// The quotient by twin classes is tested, in order, for being a chordless
/// path, a chordless cycle, or the bicomplement of one of those, always with
/// at least 7 classes. Class ids refer to the input graph's own vertex ids.
pub fn classify_prime(g: &BipartiteGraph) -> Result<PrimeShape, DecomposeError> {
    let classes = g.twin_classes();
    let k = classes.len();
    let reps: VertexSet = classes.iter().map(VertexSet::min_id).collect();
    let (q, _) = g.induced_subgraph(&reps)?;
    // Quotient vertex i corresponds to classes[i]: both run in ascending
    // order of the class representative.

    if k >= 7 {
        if let Some(order) = path_order(&q) {
            return Ok(shape_from_order(ShapeForm::Ep, &classes, &order));
        }
        if let Some(order) = cycle_order(&q) {
            return Ok(shape_from_order(ShapeForm::Ec, &classes, &order));
        }
        if co_degrees_plausible(&q) {
            let qc = q.bicomplement();
            if let Some(order) = path_order(&qc) {
                return Ok(shape_from_order(ShapeForm::EpBip, &classes, &order));
            }
            if let Some(order) = cycle_order(&qc) {
                return Ok(shape_from_order(ShapeForm::EcBip, &classes, &order));
            }
        }
    }
    Err(DecomposeError::NotStar123Free(g.full_vertex_set()))
}

fn shape_from_order(form: ShapeForm, classes: &[VertexSet], order: &[usize]) -> PrimeShape {
    PrimeShape {
        form,
        classes: order.iter().map(|&i| classes[i].clone()).collect(),
    }
}

/// Degree screen before materializing the bicomplement of the quotient: a
/// path needs exactly two co-degree-1 vertices and the rest co-degree 2, a
/// cycle needs co-degree 2 everywhere.
fn co_degrees_plausible(q: &BipartiteGraph) -> bool {
    let bc = q.black_count();
    let wc = q.white_count();
    let (mut ones, mut twos) = (0usize, 0usize);
    for v in q.vertices() {
        let opp = match q.color(v) {
            Color::Black => wc,
            Color::White => bc,
        };
        match opp - q.degree(v) {
            1 => ones += 1,
            2 => twos += 1,
            _ => return false,
        }
    }
    let k = q.vertex_count();
    (ones == 2 && twos == k - 2) || (ones == 0 && twos == k)
}

/// If `q` is a chordless path, returns its vertices in path order,
/// canonically oriented: the endpoint with the smaller id comes first.
fn path_order(q: &BipartiteGraph) -> Option<Vec<usize>> {
    let k = q.vertex_count();
    if k < 2 || q.edge_count() != k - 1 {
        return None;
    }
    let mut ends = Vec::new();
    for v in q.vertices() {
        match q.degree(v) {
            1 => ends.push(v),
            2 => {}
            _ => return None,
        }
    }
    if ends.len() != 2 {
        return None;
    }
    let order = walk_from(q, ends[0].min(ends[1]), None);
    (order.len() == k).then_some(order)
}

/// If `q` is a chordless cycle, returns its vertices in cyclic order starting
/// from the smallest id, walking toward its smaller-id neighbor.
fn cycle_order(q: &BipartiteGraph) -> Option<Vec<usize>> {
    let k = q.vertex_count();
    if k < 3 || q.edge_count() != k {
        return None;
    }
    if q.vertices().any(|v| q.degree(v) != 2) {
        return None;
    }
    let start = 0;
    let next = *q.neighbors(start).iter().min().unwrap();
    let order = walk_from(q, start, Some(next));
    (order.len() == k).then_some(order)
}

fn walk_from(q: &BipartiteGraph, start: usize, forced_next: Option<usize>) -> Vec<usize> {
    let mut order = vec![start];
    let mut seen = vec![false; q.vertex_count()];
    seen[start] = true;
    let mut cur = start;
    if let Some(next) = forced_next {
        seen[next] = true;
        order.push(next);
        cur = next;
    }
    loop {
        let mut advanced = false;
        for &u in q.neighbors(cur) {
            if !seen[u] {
                seen[u] = true;
                order.push(u);
                cur = u;
                advanced = true;
                break;
            }
        }
        if !advanced {
            return order;
        }
    }
}

/// Rebuilds the unique graph encoded by a decomposition tree. `colors[v]`
/// gives the color of leaf vertex `v`; the tree must cover ids
/// `0..colors.len()` exactly once.
pub fn reconstruct(tree: &DecompNode, colors: &[Color]) -> Result<BipartiteGraph, DecomposeError> {
    let n = colors.len();
    if tree.vertices.len() != n || tree.vertices.iter().any(|v| v >= n) {
        return Err(DecomposeError::MalformedTree(format!(
            "tree covers {} vertices, colors describe {}",
            tree.vertices.len(),
            n
        )));
    }
    let mut edges = Vec::new();
    collect_edges(tree, colors, &mut edges)?;
    BipartiteGraph::new(n, colors.to_vec(), &edges).map_err(|e| {
        DecomposeError::MalformedTree(format!("tree does not encode a bipartite graph: {e}"))
    })
}

fn color_split(set: &VertexSet, colors: &[Color]) -> (Vec<usize>, Vec<usize>) {
    let mut blacks = Vec::new();
    let mut whites = Vec::new();
    for v in set.iter() {
        match colors[v] {
            Color::Black => blacks.push(v),
            Color::White => whites.push(v),
        }
    }
    (blacks, whites)
}

fn check_children_partition(node: &DecompNode) -> Result<(), DecomposeError> {
    if node.children.len() < 2 {
        return Err(DecomposeError::MalformedTree(
            "internal node with fewer than 2 children".into(),
        ));
    }
    let merged: VertexSet = node.children.iter().flat_map(|c| c.vertices.iter()).collect();
    let total: usize = node.children.iter().map(|c| c.vertices.len()).sum();
    if merged.len() != total || merged != node.vertices {
        return Err(DecomposeError::MalformedTree(
            "children do not partition the node's vertex set".into(),
        ));
    }
    Ok(())
}

fn collect_edges(
    node: &DecompNode,
    colors: &[Color],
    edges: &mut Vec<(usize, usize)>,
) -> Result<(), DecomposeError> {
    match &node.kind {
        NodeKind::Leaf(v) => {
            if !node.children.is_empty() || node.vertices.as_slice() != [*v] {
                return Err(DecomposeError::MalformedTree("bad leaf node".into()));
            }
        }
        NodeKind::PPrime => {
            check_children_partition(node)?;
            let first = node.vertices.min_id();
            if !node.children.iter().all(DecompNode::is_leaf)
                || node.vertices.iter().any(|v| colors[v] != colors[first])
            {
                return Err(DecomposeError::MalformedTree(
                    "P' node must hold leaves of one color".into(),
                ));
            }
        }
        NodeKind::Parallel => {
            check_children_partition(node)?;
            for child in &node.children {
                collect_edges(child, colors, edges)?;
            }
        }
        NodeKind::Series => {
            check_children_partition(node)?;
            for child in &node.children {
                collect_edges(child, colors, edges)?;
            }
            // All bichromatic pairs across distinct children are edges.
            for (i, a) in node.children.iter().enumerate() {
                let (blacks, _) = color_split(&a.vertices, colors);
                for (j, b) in node.children.iter().enumerate() {
                    if i == j {
                        continue;
                    }
                    let (_, whites) = color_split(&b.vertices, colors);
                    for &x in &blacks {
                        for &y in &whites {
                            edges.push((x, y));
                        }
                    }
                }
            }
        }
        NodeKind::KPlusS => {
            check_children_partition(node)?;
            for child in &node.children {
                collect_edges(child, colors, edges)?;
            }
            // For i < j: every black of Vi is joined to every white of Vj.
            for (i, a) in node.children.iter().enumerate() {
                let (blacks, _) = color_split(&a.vertices, colors);
                if blacks.is_empty() {
                    continue;
                }
                for b in &node.children[i + 1..] {
                    let (_, whites) = color_split(&b.vertices, colors);
                    for &x in &blacks {
                        for &y in &whites {
                            edges.push((x, y));
                        }
                    }
                }
            }
        }
        NodeKind::Prime(shape) => {
            check_children_partition(node)?;
            let k = shape.k();
            if k != node.children.len() {
                return Err(DecomposeError::MalformedTree(
                    "prime node children do not match its classes".into(),
                ));
            }
            for (child, class) in node.children.iter().zip(&shape.classes) {
                if &child.vertices != class {
                    return Err(DecomposeError::MalformedTree(
                        "prime node children do not match its classes".into(),
                    ));
                }
                collect_edges(child, colors, edges)?;
            }
            if k < 7 {
                return Err(DecomposeError::MalformedTree(
                    "prime node needs at least 7 classes".into(),
                ));
            }
            for class in &shape.classes {
                let first = class.min_id();
                if class.iter().any(|v| colors[v] != colors[first]) {
                    return Err(DecomposeError::MalformedTree(
                        "prime class is not monochromatic".into(),
                    ));
                }
            }
            for i in 0..k - 1 {
                let a = shape.classes[i].min_id();
                let b = shape.classes[i + 1].min_id();
                if colors[a] == colors[b] {
                    return Err(DecomposeError::MalformedTree(
                        "consecutive prime classes share a color".into(),
                    ));
                }
            }
            if shape.form.is_cycle() {
                let a = shape.classes[k - 1].min_id();
                let b = shape.classes[0].min_id();
                if colors[a] == colors[b] {
                    return Err(DecomposeError::MalformedTree(
                        "cycle classes do not alternate colors".into(),
                    ));
                }
            }
            let consecutive =
                |i: usize, j: usize| j == i + 1 || (shape.form.is_cycle() && i == 0 && j == k - 1);
            if shape.form.is_bicomplemented() {
                // Join every bichromatic pair of classes except the
                // consecutive ones of the underlying path/cycle.
                for i in 0..k {
                    for j in i + 1..k {
                        if consecutive(i, j) {
                            continue;
                        }
                        let ci = shape.classes[i].min_id();
                        let cj = shape.classes[j].min_id();
                        if colors[ci] == colors[cj] {
                            continue;
                        }
                        join_classes(&shape.classes[i], &shape.classes[j], edges);
                    }
                }
            } else {
                for i in 0..k {
                    for j in i + 1..k {
                        if consecutive(i, j) {
                            join_classes(&shape.classes[i], &shape.classes[j], edges);
                        }
                    }
                }
            }
        }
    }
    Ok(())
}

fn join_classes(a: &VertexSet, b: &VertexSet, edges: &mut Vec<(usize, usize)>) {
    for x in a.iter() {
        for y in b.iter() {
            edges.push((x, y));
        }
    }
}

/// Checks the structural rules of a decomposition tree: leaves have no
/// children, internal nodes have at least two, children partition their
/// parent, no leaf sits under a parallel or series node, and P' nodes appear
/// only under prime nodes (holding same-color leaves).
pub fn validate_tree(tree: &DecompNode, colors: &[Color]) -> Result<(), String> {
    validate_node(tree, colors, None)
}

fn validate_node(
    node: &DecompNode,
    colors: &[Color],
    parent: Option<&NodeKind>,
) -> Result<(), String> {
    match &node.kind {
        NodeKind::Leaf(v) => {
            if !node.children.is_empty() {
                return Err(format!("leaf {v} has children"));
            }
            if matches!(parent, Some(NodeKind::Parallel) | Some(NodeKind::Series)) {
                return Err(format!("leaf {v} under a parallel or series node"));
            }
        }
        NodeKind::PPrime => {
            if !matches!(parent, Some(NodeKind::Prime(_))) {
                return Err("P' node outside a prime node".into());
            }
            check_children_partition(node).map_err(|e| e.to_string())?;
            let first = node.vertices.min_id();
            if !node.children.iter().all(DecompNode::is_leaf) {
                return Err("P' node with a non-leaf child".into());
            }
            if node.vertices.iter().any(|v| colors[v] != colors[first]) {
                return Err("P' node mixes colors".into());
            }
        }
        NodeKind::Parallel | NodeKind::Series | NodeKind::KPlusS => {
            check_children_partition(node).map_err(|e| e.to_string())?;
        }
        NodeKind::Prime(shape) => {
            check_children_partition(node).map_err(|e| e.to_string())?;
            if shape.k() < 7 {
                return Err(format!("prime node with k = {} < 7", shape.k()));
            }
            if shape.k() != node.children.len() {
                return Err("prime node children disagree with its classes".into());
            }
        }
    }
    for child in &node.children {
        validate_node(child, colors, Some(&node.kind))?;
    }
    Ok(())
}

/// Indented text rendering: one node per line, two spaces per depth level.
pub fn render_tree(tree: &DecompNode, colors: &[Color]) -> String {
    let mut out = String::new();
    render_node(tree, colors, 0, &mut out);
    out
}

fn node_label(node: &DecompNode, colors: &[Color]) -> String {
    match &node.kind {
        NodeKind::Leaf(v) => format!("leaf {} {}", v, colors[*v].letter()),
        NodeKind::Parallel => format!("P({})", node.children.len()),
        NodeKind::Series => format!("S({})", node.children.len()),
        NodeKind::KPlusS => format!("KS(k={})", node.children.len()),
        NodeKind::Prime(shape) => format!("N({},k={})", shape.form.name(), shape.k()),
        NodeKind::PPrime => format!("P'(|V|={})", node.vertices.len()),
    }
}

fn render_node(node: &DecompNode, colors: &[Color], depth: usize, out: &mut String) {
    for _ in 0..depth {
        out.push_str("  ");
    }
    out.push_str(&node_label(node, colors));
    out.push('\n');
    for child in &node.children {
        render_node(child, colors, depth + 1, out);
    }
}

/// DOT rendering of the tree, edges in child order.
pub fn tree_to_dot(tree: &DecompNode, colors: &[Color]) -> String {
    let mut out = String::from("digraph decomposition {\n");
    let mut counter = 0;
    dot_node(tree, colors, &mut counter, &mut out);
    out.push_str("}\n");
    out
}

fn dot_node(node: &DecompNode, colors: &[Color], counter: &mut usize, out: &mut String) -> usize {
    let id = *counter;
    *counter += 1;
    let _ = writeln!(out, "  n{} [label=\"{}\"];", id, node_label(node, colors));
    for child in &node.children {
        let cid = dot_node(child, colors, counter, out);
        let _ = writeln!(out, "  n{id} -> n{cid};");
    }
    id
}
