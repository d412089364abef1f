//! `mim` — canonical decomposition and maximum induced matching for
//! bipartite Star123-free graphs.
//!
//! Exit codes: 0 success, 1 usage/IO/format error, 2 input graph not
//! Star123-free, 3 check or verification failure. Results go to stdout,
//! diagnostics to stderr.

use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};
use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

use mim_core::format::{parse_graph, parse_matching, write_graph, write_matching};
use mim_core::generate::{gen_graph, gen_shape, GenConfig};
use mim_core::oracle::brute_force_mim;
use mim_core::{
    decompose, max_induced_matching, render_tree, solve, tree_to_dot, BipartiteGraph, Color,
    DecomposeError, InducedMatching, MimError, ShapeForm,
};

const EXIT_FORMAT: u8 = 1;
const EXIT_NOT_IN_CLASS: u8 = 2;
const EXIT_CHECK_FAILED: u8 = 3;

#[derive(Parser)]
#[command(name = "mim", version, about = "Maximum induced matching in bipartite Star123-free graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the canonical decomposition tree of a graph file
    Decompose {
        path: PathBuf,
        /// Emit the tree in DOT format instead of indented text
        #[arg(long)]
        dot: bool,
    },
    /// Compute a maximum induced matching of a graph file
    Solve {
        path: PathBuf,
        /// Re-validate the matching and compare against the brute-force
        /// oracle when the input is small enough
        #[arg(long)]
        verify: bool,
    },
    /// Check that a matching file is a valid induced matching of a graph
    Check {
        graph: PathBuf,
        matching: PathBuf,
    },
    /// Exact brute-force maximum induced matching (small inputs only)
    Oracle { path: PathBuf },
    /// Generate a Star123-free instance and print it in the graph format
    Gen {
        #[arg(long)]
        seed: u64,
        /// Vertex count of the instance
        #[arg(long)]
        n: usize,
        /// Generate a pure shape instead of a random decomposition tree
        #[arg(long, value_enum)]
        shape: Option<ShapeArg>,
        /// Class count for --shape
        #[arg(long, requires = "shape")]
        k: Option<usize>,
        /// Largest class size for --shape
        #[arg(long = "class-max", requires = "shape", default_value_t = 1)]
        class_max: usize,
    },
    /// Time decompose and solve on generated instances
    Bench {
        /// Instance vertex counts, comma separated
        #[arg(long, value_delimiter = ',', default_value = "1000,10000,100000")]
        sizes: Vec<usize>,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        /// Timing repetitions per instance (best-of)
        #[arg(long, default_value_t = 3)]
        repeats: usize,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ShapeArg {
    Ep,
    Ec,
    Epbip,
    Ecbip,
}

impl From<ShapeArg> for ShapeForm {
    fn from(s: ShapeArg) -> ShapeForm {
        match s {
            ShapeArg::Ep => ShapeForm::Ep,
            ShapeArg::Ec => ShapeForm::Ec,
            ShapeArg::Epbip => ShapeForm::EpBip,
            ShapeArg::Ecbip => ShapeForm::EcBip,
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            print!("{e}");
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            eprint!("{e}");
            return ExitCode::from(EXIT_FORMAT);
        }
    };
    match cli.command {
        Command::Decompose { path, dot } => cmd_decompose(&path, dot),
        Command::Solve { path, verify } => cmd_solve(&path, verify),
        Command::Check { graph, matching } => cmd_check(&graph, &matching),
        Command::Oracle { path } => cmd_oracle(&path),
        Command::Gen {
            seed,
            n,
            shape,
            k,
            class_max,
        } => cmd_gen(seed, n, shape, k, class_max),
        Command::Bench {
            sizes,
            seed,
            repeats,
        } => cmd_bench(&sizes, seed, repeats),
    }
}

fn load_graph(path: &Path) -> Result<BipartiteGraph, ExitCode> {
    let text = std::fs::read_to_string(path).map_err(|e| {
        eprintln!("{}: {e}", path.display());
        ExitCode::from(EXIT_FORMAT)
    })?;
    parse_graph(&text).map_err(|e| {
        eprintln!("{}:{e}", path.display());
        ExitCode::from(EXIT_FORMAT)
    })
}

fn report_not_in_class(e: &DecomposeError) -> ExitCode {
    eprintln!("{e}");
    ExitCode::from(EXIT_NOT_IN_CLASS)
}

fn cmd_decompose(path: &Path, dot: bool) -> ExitCode {
    let g = match load_graph(path) {
        Ok(g) => g,
        Err(code) => return code,
    };
    match decompose(&g) {
        Ok(tree) => {
            if dot {
                print!("{}", tree_to_dot(&tree, g.colors()));
            } else {
                print!("{}", render_tree(&tree, g.colors()));
            }
            ExitCode::SUCCESS
        }
        Err(e @ DecomposeError::NotStar123Free(_)) => report_not_in_class(&e),
        Err(e) => {
            eprintln!("{e}");
            ExitCode::from(EXIT_FORMAT)
        }
    }
}

fn cmd_solve(path: &Path, verify: bool) -> ExitCode {
    let g = match load_graph(path) {
        Ok(g) => g,
        Err(code) => return code,
    };
    let matching = match max_induced_matching(&g) {
        Ok(m) => m,
        Err(MimError::Decompose(e @ DecomposeError::NotStar123Free(_))) => {
            return report_not_in_class(&e)
        }
        Err(e) => {
            eprintln!("{e}");
            return ExitCode::from(EXIT_FORMAT);
        }
    };
    if verify {
        if !g.is_induced_matching(&matching) {
            eprintln!("verification failed: solver output is not an induced matching");
            return ExitCode::from(EXIT_CHECK_FAILED);
        }
        match brute_force_mim(&g) {
            Ok(reference) => {
                if reference.len() != matching.len() {
                    eprintln!(
                        "verification failed: solver found {} pairs, oracle {}",
                        matching.len(),
                        reference.len()
                    );
                    return ExitCode::from(EXIT_CHECK_FAILED);
                }
            }
            Err(e) => eprintln!("oracle comparison skipped: {e}"),
        }
    }
    print!("{}", write_matching(&matching));
    ExitCode::SUCCESS
}

/// Normalizes parsed pairs to (black, white) against the graph's colors.
/// Pairs joining two same-colored vertices are left as-is and fail the
/// validity check downstream.
fn orient_matching(g: &BipartiteGraph, m: InducedMatching) -> InducedMatching {
    m.into_pairs()
        .into_iter()
        .map(|(u, v)| {
            let n = g.vertex_count();
            if u < n && v < n && g.color(u) == Color::White && g.color(v) == Color::Black {
                (v, u)
            } else {
                (u, v)
            }
        })
        .collect()
}

fn cmd_check(graph_path: &Path, matching_path: &Path) -> ExitCode {
    let g = match load_graph(graph_path) {
        Ok(g) => g,
        Err(code) => return code,
    };
    let text = match std::fs::read_to_string(matching_path) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("{}: {e}", matching_path.display());
            return ExitCode::from(EXIT_FORMAT);
        }
    };
    let matching = match parse_matching(&text) {
        Ok(m) => orient_matching(&g, m),
        Err(e) => {
            eprintln!("{}:{e}", matching_path.display());
            return ExitCode::from(EXIT_FORMAT);
        }
    };
    match find_violation(&g, &matching) {
        None => {
            println!("valid");
            ExitCode::SUCCESS
        }
        Some(reason) => {
            println!("invalid: {reason}");
            ExitCode::from(EXIT_CHECK_FAILED)
        }
    }
}

fn find_violation(g: &BipartiteGraph, m: &InducedMatching) -> Option<String> {
    let n = g.vertex_count();
    let pairs = m.pairs();
    for &(u, v) in pairs {
        if u >= n || v >= n {
            return Some(format!("pair ({u}, {v}) is out of range"));
        }
        if !g.has_edge(u, v) {
            return Some(format!("pair ({u}, {v}) is not an edge"));
        }
    }
    let mut seen = std::collections::HashSet::new();
    for &(u, v) in pairs {
        for x in [u, v] {
            if !seen.insert(x) {
                return Some(format!("vertex {x} is used by two pairs"));
            }
        }
    }
    for (i, &(a, b)) in pairs.iter().enumerate() {
        for &(c, d) in &pairs[i + 1..] {
            if g.has_edge(a, d) {
                return Some(format!(
                    "edge ({a}, {d}) connects pairs ({a}, {b}) and ({c}, {d})"
                ));
            }
            if g.has_edge(c, b) {
                return Some(format!(
                    "edge ({c}, {b}) connects pairs ({a}, {b}) and ({c}, {d})"
                ));
            }
        }
    }
    None
}

fn cmd_oracle(path: &Path) -> ExitCode {
    let g = match load_graph(path) {
        Ok(g) => g,
        Err(code) => return code,
    };
    match brute_force_mim(&g) {
        Ok(m) => {
            print!("{}", write_matching(&m));
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("{e}");
            ExitCode::from(EXIT_FORMAT)
        }
    }
}

fn cmd_gen(seed: u64, n: usize, shape: Option<ShapeArg>, k: Option<usize>, class_max: usize) -> ExitCode {
    let result = match shape {
        None => {
            let cfg = GenConfig::new(seed, n);
            let header = format!(
                "# mim gen --seed {seed} --n {n}\n# op-weights p={} s={} ks={} n={} class-size-range {}..{} max-depth {}\n",
                cfg.op_weights.p,
                cfg.op_weights.s,
                cfg.op_weights.ks,
                cfg.op_weights.n,
                cfg.class_size_range.0,
                cfg.class_size_range.1,
                cfg.max_depth
            );
            gen_graph(&cfg).map(|g| (header, g)).map_err(|e| e.to_string())
        }
        Some(shape) => {
            let Some(k) = k else {
                eprintln!("--shape requires --k");
                return ExitCode::from(EXIT_FORMAT);
            };
            gen_shape_sized(shape.into(), k, n, class_max, seed)
                .map(|g| {
                    let name = match shape {
                        ShapeArg::Ep => "ep",
                        ShapeArg::Ec => "ec",
                        ShapeArg::Epbip => "epbip",
                        ShapeArg::Ecbip => "ecbip",
                    };
                    (
                        format!(
                            "# mim gen --seed {seed} --n {n} --shape {name} --k {k} --class-max {class_max}\n"
                        ),
                        g,
                    )
                })
        }
    };
    match result {
        Ok((header, g)) => {
            print!("{header}{}", write_graph(&g));
            ExitCode::SUCCESS
        }
        Err(msg) => {
            eprintln!("{msg}");
            ExitCode::from(EXIT_FORMAT)
        }
    }
}

/// Distributes `n` vertices over `k` classes with sizes in 1..=class_max,
/// then builds the pure shape.
fn gen_shape_sized(
    form: ShapeForm,
    k: usize,
    n: usize,
    class_max: usize,
    seed: u64,
) -> Result<BipartiteGraph, String> {
    if class_max < 1 {
        return Err("--class-max must be at least 1".into());
    }
    if n < k || n > k * class_max {
        return Err(format!(
            "cannot spread {n} vertices over {k} classes of size 1..={class_max}"
        ));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut sizes = vec![1usize; k];
    let mut extra = n - k;
    while extra > 0 {
        let i = rng.gen_range(0..k);
        if sizes[i] < class_max {
            sizes[i] += 1;
            extra -= 1;
        }
    }
    gen_shape(form, k, &sizes, seed).map_err(|e| e.to_string())
}

fn best_time<F: FnMut()>(repeats: usize, mut f: F) -> Duration {
    let mut best = Duration::MAX;
    for _ in 0..repeats.max(1) {
        let t = Instant::now();
        f();
        best = best.min(t.elapsed());
    }
    best
}

fn cmd_bench(sizes: &[usize], seed: u64, repeats: usize) -> ExitCode {
    if sizes.is_empty() {
        eprintln!("--sizes must name at least one instance size");
        return ExitCode::from(EXIT_FORMAT);
    }
    println!(
        "{:>10} {:>10} {:>14} {:>14} {:>16}",
        "n", "tree-nodes", "decompose-us", "solve-us", "solve-ns/node"
    );
    for &n in sizes {
        let cfg = GenConfig::new(seed, n);
        let g = match gen_graph(&cfg) {
            Ok(g) => g,
            Err(e) => {
                eprintln!("{e}");
                return ExitCode::from(EXIT_FORMAT);
            }
        };
        let tree = match decompose(&g) {
            Ok(t) => t,
            Err(e) => {
                eprintln!("generated instance failed to decompose: {e}");
                return ExitCode::from(EXIT_FORMAT);
            }
        };
        let decompose_time = best_time(repeats, || {
            std::hint::black_box(decompose(&g).expect("decomposes"));
        });
        let solve_time = best_time(repeats, || {
            std::hint::black_box(solve(&tree, &g).expect("solves"));
        });
        let nodes = tree.node_count();
        println!(
            "{:>10} {:>10} {:>14.1} {:>14.1} {:>16.2}",
            n,
            nodes,
            decompose_time.as_secs_f64() * 1e6,
            solve_time.as_secs_f64() * 1e6,
            solve_time.as_secs_f64() * 1e9 / nodes as f64
        );
    }
    ExitCode::SUCCESS
}
