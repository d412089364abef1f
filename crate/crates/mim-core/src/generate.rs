//! Seeded random generation of bipartite Star123-free graphs.
//!
//! Instances are sampled as decomposition trees over the four composition
//! operators and then materialized through [`reconstruct`], so membership in
//! the class holds by construction. Series, K+S and prime nodes are only
//! chosen once the sub-budget is small; larger budgets split into parallel
//! components, which keeps edge counts near-linear in the vertex count and
//! makes instances of different sizes mixtures of the same component
//! distribution. A fixed seed yields a byte-identical instance.

use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

use crate::decompose::{reconstruct, DecompNode, NodeKind, PrimeShape, ShapeForm};
use crate::graph::{BipartiteGraph, Color, VertexSet};

/// Budget above which only parallel splits and sparse prime shapes are
/// sampled, so that dense joins stay small.
const DENSE_CAP: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OpWeights {
    pub p: f64,
    pub s: f64,
    pub ks: f64,
    pub n: f64,
}

impl Default for OpWeights {
    fn default() -> Self {
        OpWeights {
            p: 0.25,
            s: 0.25,
            ks: 0.3,
            n: 0.2,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct GenConfig {
    pub seed: u64,
    pub target_n: usize,
    pub op_weights: OpWeights,
    /// Inclusive range for prime-node class sizes.
    pub class_size_range: (usize, usize),
    pub max_depth: usize,
}

impl GenConfig {
    pub fn new(seed: u64, target_n: usize) -> Self {
        GenConfig {
            seed,
            target_n,
            op_weights: OpWeights::default(),
            class_size_range: (1, 3),
            max_depth: 12,
        }
    }

    fn validate(&self) -> Result<(), GenError> {
        if self.target_n < 1 {
            return Err(GenError::BudgetTooSmall);
        }
        let w = &self.op_weights;
        let weights = [w.p, w.s, w.ks, w.n];
        if weights.iter().any(|&x| x < 0.0 || !x.is_finite()) {
            return Err(GenError::BadConfig("negative or non-finite op weight".into()));
        }
        if weights.iter().sum::<f64>() == 0.0 {
            return Err(GenError::BadConfig("all op weights are zero".into()));
        }
        let (lo, hi) = self.class_size_range;
        if lo < 1 || lo > hi {
            return Err(GenError::BadConfig("bad class size range".into()));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GenError {
    #[error("vertex budget must be at least 1")]
    BudgetTooSmall,
    #[error("bad shape parameters: {0}")]
    BadShapeParams(String),
    #[error("bad generator config: {0}")]
    BadConfig(String),
}

/// Samples a decomposition tree within the vertex budget and returns it with
/// the leaf colors. Vertex ids are assigned in tree order, 0..target_n.
pub fn gen_tree(cfg: &GenConfig) -> Result<(DecompNode, Vec<Color>), GenError> {
    cfg.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut colors = Vec::with_capacity(cfg.target_n);
    let tree = sample_node(cfg, cfg.target_n, 0, &mut rng, &mut colors);
    debug_assert_eq!(colors.len(), cfg.target_n);
    Ok((tree, colors))
}

/// Samples a tree and materializes the graph it encodes.
pub fn gen_graph(cfg: &GenConfig) -> Result<BipartiteGraph, GenError> {
    let (tree, colors) = gen_tree(cfg)?;
    Ok(reconstruct(&tree, &colors).expect("sampled tree is well-formed"))
}

#[derive(Clone, Copy, PartialEq)]
enum Op {
    Parallel,
    Series,
    KPlusS,
    Prime,
}

fn sample_node(
    cfg: &GenConfig,
    budget: usize,
    depth: usize,
    rng: &mut ChaCha8Rng,
    colors: &mut Vec<Color>,
) -> DecompNode {
    debug_assert!(budget >= 1);
    if budget == 1 {
        return new_leaf(random_color(rng), colors);
    }
    if depth >= cfg.max_depth && budget <= DENSE_CAP {
        return ks_of_leaves(budget, rng, colors);
    }

    let (lo, _) = cfg.class_size_range;
    let w = &cfg.op_weights;
    let mut ops: Vec<(Op, f64)> = Vec::with_capacity(4);
    if budget > DENSE_CAP {
        // Everything except a disjoint union would join or chain blocks of
        // this size; splitting in parallel keeps components bounded and the
        // edge count near-linear.
        ops.push((Op::Parallel, 1.0));
    } else {
        if budget >= 4 {
            ops.push((Op::Parallel, w.p));
            ops.push((Op::Series, w.s));
        }
        ops.push((Op::KPlusS, w.ks));
        if budget >= 7 * lo {
            ops.push((Op::Prime, w.n));
        }
    }
    debug_assert!(!ops.is_empty(), "K+S or parallel is always feasible");

    let total: f64 = ops.iter().map(|&(_, x)| x).sum();
    let op = if total > 0.0 {
        let mut roll = rng.gen::<f64>() * total;
        let mut chosen = ops[0].0;
        for &(op, weight) in &ops {
            if roll < weight {
                chosen = op;
                break;
            }
            roll -= weight;
        }
        chosen
    } else {
        // The configured weights rule out every feasible operator here;
        // fall back to a uniform choice among the feasible ones.
        ops[rng.gen_range(0..ops.len())].0
    };

    match op {
        Op::Parallel => {
            let parts = split_budget(budget, 2, rng);
            internal_node(NodeKind::Parallel, parts, cfg, depth, rng, colors)
        }
        Op::Series => {
            let parts = split_budget(budget, 2, rng);
            internal_node(NodeKind::Series, parts, cfg, depth, rng, colors)
        }
        Op::KPlusS => {
            let max_parts = budget.min(10);
            let count = rng.gen_range(2..=max_parts);
            let parts = composition(budget, count, 1, rng);
            internal_node(NodeKind::KPlusS, parts, cfg, depth, rng, colors)
        }
        Op::Prime => sample_prime(cfg, budget, rng, colors),
    }
}

fn new_leaf(color: Color, colors: &mut Vec<Color>) -> DecompNode {
    let id = colors.len();
    colors.push(color);
    DecompNode::leaf(id)
}

/// Terminal fallback: a K+S chain of single vertices with random colors.
fn ks_of_leaves(budget: usize, rng: &mut ChaCha8Rng, colors: &mut Vec<Color>) -> DecompNode {
    let children: Vec<DecompNode> = (0..budget).map(|_| new_leaf(random_color(rng), colors)).collect();
    let vertices: VertexSet = children.iter().flat_map(|c| c.vertices.iter()).collect();
    DecompNode {
        kind: NodeKind::KPlusS,
        children,
        vertices,
    }
}

fn internal_node(
    kind: NodeKind,
    parts: Vec<usize>,
    cfg: &GenConfig,
    depth: usize,
    rng: &mut ChaCha8Rng,
    colors: &mut Vec<Color>,
) -> DecompNode {
    let children: Vec<DecompNode> = parts
        .into_iter()
        .map(|part| sample_node(cfg, part, depth + 1, rng, colors))
        .collect();
    let vertices: VertexSet = children.iter().flat_map(|c| c.vertices.iter()).collect();
    DecompNode {
        kind,
        children,
        vertices,
    }
}

/// Splits `budget` into at least two parts of size >= `min_part`. Parts
/// above the dense cap are carved off so that large budgets fan out wide.
fn split_budget(budget: usize, min_part: usize, rng: &mut ChaCha8Rng) -> Vec<usize> {
    debug_assert!(budget >= 2 * min_part);
    if budget > 2 * DENSE_CAP {
        let mut parts = Vec::new();
        let mut rest = budget;
        while rest > DENSE_CAP {
            let mut chunk = rng.gen_range(min_part..=DENSE_CAP);
            if rest - chunk < min_part {
                chunk = rest;
            }
            parts.push(chunk.min(rest));
            rest -= parts.last().copied().unwrap();
        }
        if rest > 0 {
            if rest < min_part {
                // Merge the remainder into the previous chunk.
                *parts.last_mut().unwrap() += rest;
            } else {
                parts.push(rest);
            }
        }
        debug_assert!(parts.len() >= 2);
        return parts;
    }
    let max_parts = budget / min_part;
    let count = rng.gen_range(2..=max_parts.max(2));
    composition(budget, count.min(max_parts), min_part, rng)
}

/// Random composition of `budget` into exactly `count` parts, each at least
/// `min_part`.
fn composition(budget: usize, count: usize, min_part: usize, rng: &mut ChaCha8Rng) -> Vec<usize> {
    debug_assert!(budget >= count * min_part);
    let mut parts = vec![min_part; count];
    let mut extra = budget - count * min_part;
    while extra > 0 {
        parts[rng.gen_range(0..count)] += 1;
        extra -= 1;
    }
    parts
}

fn sample_prime(
    cfg: &GenConfig,
    budget: usize,
    rng: &mut ChaCha8Rng,
    colors: &mut Vec<Color>,
) -> DecompNode {
    let (lo, hi) = cfg.class_size_range;
    // k must satisfy k*lo <= budget <= k*hi so the class sizes can consume
    // the budget exactly.
    let k_max = budget / lo;
    let k_min_exact = budget.div_ceil(hi).max(7);
    let mut forms: Vec<ShapeForm> = Vec::new();
    if k_min_exact <= k_max {
        forms.push(ShapeForm::Ep);
        if budget <= DENSE_CAP {
            forms.push(ShapeForm::EpBip);
        }
    }
    // Cycles additionally need an even class count.
    let has_even_k = (k_min_exact.max(8)..=k_max).any(|k| k % 2 == 0);
    if has_even_k {
        forms.push(ShapeForm::Ec);
        if budget <= DENSE_CAP {
            forms.push(ShapeForm::EcBip);
        }
    }
    if forms.is_empty() {
        // No shape fits the budget exactly; fall back to a K+S chain.
        return ks_of_leaves(budget, rng, colors);
    }
    let form = forms[rng.gen_range(0..forms.len())];
    let k = loop {
        let k_min = if form.is_cycle() {
            k_min_exact.max(8)
        } else {
            k_min_exact
        };
        let k = rng.gen_range(k_min..=k_max);
        if !form.is_cycle() || k % 2 == 0 {
            break k;
        }
    };
    let mut sizes = vec![lo; k];
    let mut extra = budget - k * lo;
    while extra > 0 {
        let i = rng.gen_range(0..k);
        if sizes[i] < hi {
            sizes[i] += 1;
            extra -= 1;
        }
    }
    let first_color = random_color(rng);
    prime_node(form, &sizes, first_color, colors)
}

/// Builds a prime node over fresh ids with the given class sizes. Classes
/// alternate colors starting from `first_color`.
fn prime_node(
    form: ShapeForm,
    sizes: &[usize],
    first_color: Color,
    colors: &mut Vec<Color>,
) -> DecompNode {
    let mut classes = Vec::with_capacity(sizes.len());
    let mut children = Vec::with_capacity(sizes.len());
    let mut color = first_color;
    for &size in sizes {
        let start = colors.len();
        for _ in 0..size {
            colors.push(color);
        }
        let class = VertexSet::new((start..start + size).collect());
        classes.push(class.clone());
        if size == 1 {
            children.push(DecompNode::leaf(start));
        } else {
            children.push(DecompNode {
                kind: NodeKind::PPrime,
                children: class.iter().map(DecompNode::leaf).collect(),
                vertices: class,
            });
        }
        color = color.flip();
    }
    let vertices: VertexSet = classes.iter().flat_map(|c| c.iter()).collect();
    DecompNode {
        kind: NodeKind::Prime(PrimeShape { form, classes }),
        children,
        vertices,
    }
}

fn random_color<R: Rng>(rng: &mut R) -> Color {
    if rng.gen::<bool>() {
        Color::Black
    } else {
        Color::White
    }
}

/// Builds a pure extended path/cycle (or bicomplement) instance with the
/// given class sizes. The seed only picks the color of the first class.
pub fn gen_shape(
    form: ShapeForm,
    k: usize,
    class_sizes: &[usize],
    seed: u64,
) -> Result<BipartiteGraph, GenError> {
    if k < 7 {
        return Err(GenError::BadShapeParams(format!("k = {k} < 7")));
    }
    if form.is_cycle() && k % 2 != 0 {
        return Err(GenError::BadShapeParams(format!(
            "a cycle of {k} monochromatic classes cannot alternate colors"
        )));
    }
    if class_sizes.len() != k {
        return Err(GenError::BadShapeParams(format!(
            "expected {k} class sizes, got {}",
            class_sizes.len()
        )));
    }
    if class_sizes.iter().any(|&s| s == 0) {
        return Err(GenError::BadShapeParams("empty class".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let first_color = random_color(&mut rng);
    let mut colors = Vec::new();
    let tree = prime_node(form, class_sizes, first_color, &mut colors);
    Ok(reconstruct(&tree, &colors).expect("shape tree is well-formed"))
}

/// Small random bipartite graph with a planted induced skew star: the
/// 7-vertex pattern plus a few extra vertices and random edges that never
/// run between two pattern vertices, so the plant stays induced.
pub fn gen_adversarial(seed: u64) -> BipartiteGraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let extras = rng.gen_range(0..=5usize);
    let n = 7 + extras;
    let mut ids: Vec<usize> = (0..n).collect();
    ids.shuffle(&mut rng);
    // Roles: center, a1, b1, b2, c1, c2, c3 at distances 0,1,1,2,1,2,3.
    let slot = &ids[..7];
    let center_color = random_color(&mut rng);
    let dist = [0usize, 1, 1, 2, 1, 2, 3];
    let mut colors = vec![Color::Black; n];
    for v in 0..n {
        colors[v] = random_color(&mut rng);
    }
    for (role, &v) in slot.iter().enumerate() {
        colors[v] = if dist[role] % 2 == 0 {
            center_color
        } else {
            center_color.flip()
        };
    }
    let mut edges = vec![
        (slot[0], slot[1]),
        (slot[0], slot[2]),
        (slot[2], slot[3]),
        (slot[0], slot[4]),
        (slot[4], slot[5]),
        (slot[5], slot[6]),
    ];
    let in_pattern = |v: usize| slot.contains(&v);
    for u in 0..n {
        for v in u + 1..n {
            if colors[u] == colors[v] || (in_pattern(u) && in_pattern(v)) {
                continue;
            }
            if rng.gen::<f64>() < 0.3 {
                edges.push((u, v));
            }
        }
    }
    BipartiteGraph::new(n, colors, &edges).expect("planted graph is valid")
}
