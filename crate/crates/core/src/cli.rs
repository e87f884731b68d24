//! Command-line front end. [`run`] returns the exit code and everything that
//! would go to standard output; the binary just prints it.
//!
//! Exit codes: 0 solved or valid, 1 NO or invalid, 2 usage or input error.

use std::collections::BTreeSet;
use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};

use crate::formats::{
    parse_ecg, parse_hss, parse_solution, write_hss, write_solution, EcgDocument, SolutionFile,
};
use crate::generators::{
    from_hitting_set, phs_to_simfvs, psi_to_phs, random_instance, random_partitioned, random_psi,
    random_set_system, RandomSpec,
};
use crate::graph::{EdgeColoredGraph, VertexId};
use crate::kernel::{kernelize_with, KernelConfig, Threshold};
use crate::oracle::{brute_force_min_simfvs, verify_solution, OracleError};
use crate::reductions::{reduce_exhaustive, ReductionTrace};
use crate::solver::{solve_with, SolverConfig};

#[derive(Debug, Parser)]
#[command(
    name = "simfvs",
    version,
    about = "Simultaneous feedback vertex set on edge-colored multigraphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Decide whether at most k vertices break every monochromatic cycle.
    Solve {
        input: PathBuf,
        #[arg(short)]
        k: usize,
        /// Matching base case and the two-color measure (two colors only).
        #[arg(long)]
        alpha2: bool,
        /// Try compression subsets in parallel.
        #[arg(long)]
        parallel: bool,
        /// Print search statistics as comment lines.
        #[arg(long)]
        stats: bool,
    },
    /// Reduce to an equivalent kernel.
    Kernelize {
        input: PathBuf,
        #[arg(short)]
        k: usize,
        /// Only certify vertices of degree at least 3k(k+4).
        #[arg(long)]
        quadratic_threshold: bool,
        /// Skip the path phase.
        #[arg(long)]
        no_unravel: bool,
    },
    /// Apply the cleanup rules R1-R5 only.
    Reduce {
        input: PathBuf,
        #[arg(short)]
        k: usize,
    },
    /// Build instances.
    Generate {
        #[command(subcommand)]
        what: Generate,
    },
    /// Check a solution file against a graph.
    Verify { graph: PathBuf, solution: PathBuf },
    /// Exhaustive minimum, for small graphs.
    Oracle {
        input: PathBuf,
        /// Answer the decision question for this budget.
        #[arg(short)]
        k: Option<usize>,
    },
}

#[derive(Debug, Subcommand)]
enum Generate {
    /// Graph from a hitting set instance, one color per set.
    Hs {
        /// A `.hss` file; its sets are taken regardless of grouping.
        input: Option<PathBuf>,
        #[arg(long, default_value_t = 4)]
        universe: usize,
        #[arg(long, default_value_t = 3)]
        sets: usize,
        #[arg(long, default_value_t = 2)]
        max_size: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Graph from a partitioned hitting set instance, one color per group.
    Phs {
        input: Option<PathBuf>,
        #[arg(long, default_value_t = 4)]
        universe: usize,
        #[arg(long, default_value_t = 2)]
        groups: usize,
        #[arg(long, default_value_t = 2)]
        max_size: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Partitioned hitting set from a random partitioned subgraph isomorphism instance.
    Psi {
        #[arg(long, default_value_t = 2)]
        pattern_vertices: usize,
        #[arg(long, default_value_t = 1)]
        pattern_edges: usize,
        #[arg(long, default_value_t = 2)]
        class_size: usize,
        #[arg(long, default_value_t = 2)]
        host_edges: usize,
        /// Guarantee an embedding.
        #[arg(long)]
        plant: bool,
        /// Emit the final graph instead of the set system.
        #[arg(long)]
        graph: bool,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Random multigraph.
    Random {
        #[arg(long, default_value_t = 10)]
        n: usize,
        #[arg(long, default_value_t = 2)]
        alpha: usize,
        #[arg(long, default_value_t = 12)]
        edges: usize,
        /// Plant a solution of this size.
        #[arg(long)]
        planted: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

struct Failure(i32, String);

impl Failure {
    fn input(msg: impl std::fmt::Display) -> Self {
        Failure(2, format!("error: {msg}\n"))
    }
}

/// Parses `args` (program name first) and executes the command.
pub fn run<I, T>(args: I) -> (i32, String)
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            return (code, e.render().to_string());
        }
    };
    match execute(cli.command) {
        Ok(out) => out,
        Err(Failure(code, msg)) => (code, msg),
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::input(format!("{}: {e}", path.display())))
}

fn read_graph(path: &Path) -> Result<EdgeColoredGraph, Failure> {
    parse_ecg(&read(path)?).map_err(|e| Failure::input(format!("{}: {e}", path.display())))
}

fn rule_summary(trace: &ReductionTrace) -> String {
    let counts = trace.counts();
    let parts: Vec<String> = counts
        .iter()
        .enumerate()
        .map(|(i, n)| format!("R{}={n}", i + 1))
        .collect();
    parts.join(" ")
}

fn id_list(ids: impl IntoIterator<Item = VertexId>) -> String {
    ids.into_iter()
        .map(|v| (v + 1).to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

/// `.ecg` text for a reduced graph, preceded by comments on budget, forced
/// vertices, rule counts and the input id of every output vertex.
fn reduced_output(
    g: &EdgeColoredGraph,
    k: usize,
    forced: &BTreeSet<VertexId>,
    trace: &ReductionTrace,
) -> String {
    let (mut doc, map) = EcgDocument::from_graph(g);
    let origins = map
        .iter()
        .map(|&v| g.origin(v).expect("live vertex").original());
    doc.comments = vec![
        format!("k {k}"),
        format!("forced {}", id_list(forced.iter().copied())),
        format!("rules {}", rule_summary(trace)),
        format!("ids {}", id_list(origins)),
    ];
    for c in &mut doc.comments {
        *c = c.trim_end().to_string();
    }
    doc.serialize()
}

fn execute(command: Command) -> Result<(i32, String), Failure> {
    match command {
        Command::Solve {
            input,
            k,
            alpha2,
            parallel,
            stats,
        } => {
            let g = read_graph(&input)?;
            let mut config = if alpha2 {
                if g.alpha() != 2 {
                    return Err(Failure::input("--alpha2 needs a two-color graph"));
                }
                SolverConfig::alpha2()
            } else {
                SolverConfig::default()
            };
            config.parallel = parallel;
            let report = solve_with(&g, k, &config);
            let mut out = String::new();
            if stats {
                let s = &report.stats;
                let _ = writeln!(out, "c nodes {}", s.nodes);
                let _ = writeln!(out, "c compressions {}", s.compressions);
                let _ = writeln!(out, "c base_calls {}", s.base_calls);
                let _ = writeln!(out, "c branch_edges {}", s.total_branch_edges());
                let _ = writeln!(out, "c measure_violations {}", s.violation_count);
            }
            let code = match report.solution {
                Some(sol) => {
                    out.push_str(&write_solution(&SolutionFile::Yes(sol)));
                    0
                }
                None => {
                    out.push_str(&write_solution(&SolutionFile::No));
                    1
                }
            };
            Ok((code, out))
        }
        Command::Kernelize {
            input,
            k,
            quadratic_threshold,
            no_unravel,
        } => {
            let g = read_graph(&input)?;
            let config = KernelConfig {
                threshold: if quadratic_threshold {
                    Threshold::Quadratic
                } else {
                    Threshold::Certificate
                },
                unravel: !no_unravel,
                ..KernelConfig::default()
            };
            let ker = kernelize_with(&g, k, &config);
            let mut out = String::new();
            if ker.is_no() {
                out.push_str("c no\n");
            }
            let s = &ker.stats;
            let _ = writeln!(
                out,
                "c certificates {} h_max {} neither {}",
                s.certificates, s.h_max, s.neither
            );
            out.push_str(&reduced_output(&ker.graph, ker.k, &ker.forced, &ker.trace));
            Ok((if ker.is_no() { 1 } else { 0 }, out))
        }
        Command::Reduce { input, k } => {
            let g = read_graph(&input)?;
            match reduce_exhaustive(&g, k, &BTreeSet::new()) {
                Ok(r) => Ok((0, reduced_output(&r.graph, r.k, &r.forced, &r.trace))),
                Err(e) => Ok((1, format!("c {e}\ns no\n"))),
            }
        }
        Command::Verify { graph, solution } => {
            let g = read_graph(&graph)?;
            let sol = parse_solution(&read(&solution)?)
                .map_err(|e| Failure::input(format!("{}: {e}", solution.display())))?;
            match sol {
                SolutionFile::No => Ok((1, "invalid: the file claims no solution\n".to_string())),
                SolutionFile::Yes(s) => match verify_solution(&g, &s) {
                    Ok(true) => Ok((0, format!("valid: {} vertices\n", s.len()))),
                    Ok(false) => Ok((1, "invalid: a monochromatic cycle survives\n".to_string())),
                    Err(e) => Ok((1, format!("invalid: {e}\n"))),
                },
            }
        }
        Command::Oracle { input, k } => {
            let g = read_graph(&input)?;
            let cap = k.unwrap_or(g.num_vertices());
            let res = match brute_force_min_simfvs(&g, cap, &BTreeSet::new()) {
                Ok(r) => r,
                Err(e @ OracleError::TooLarge(_)) => return Err(Failure::input(e)),
                Err(e) => return Err(Failure::input(e)),
            };
            let mut out = String::new();
            match (&res.min_size, &res.witness) {
                (Some(m), Some(w)) => {
                    let _ = writeln!(out, "c min {m}");
                    out.push_str(&write_solution(&SolutionFile::Yes(w.clone())));
                    Ok((0, out))
                }
                _ => {
                    let _ = writeln!(out, "c min > {cap}");
                    out.push_str(&write_solution(&SolutionFile::No));
                    Ok((1, out))
                }
            }
        }
        Command::Generate { what } => generate(what),
    }
}

fn generate(what: Generate) -> Result<(i32, String), Failure> {
    let ecg = |g: &EdgeColoredGraph, comment: String| {
        let (mut doc, _) = EcgDocument::from_graph(g);
        doc.comments.push(comment);
        doc.serialize()
    };
    match what {
        Generate::Hs {
            input,
            universe,
            sets,
            max_size,
            seed,
        } => {
            let sys = match input {
                Some(p) => parse_hss(&read(&p)?)
                    .map_err(|e| Failure::input(format!("{}: {e}", p.display())))?,
                None => random_set_system(universe, sets, max_size, seed),
            };
            let enc = from_hitting_set(&sys).map_err(Failure::input)?;
            let comment = format!(
                "hitting set, elements at {}",
                id_list(enc.element_vertex.iter().copied())
            );
            Ok((0, ecg(&enc.graph, comment)))
        }
        Generate::Phs {
            input,
            universe,
            groups,
            max_size,
            seed,
        } => {
            let sys = match input {
                Some(p) => parse_hss(&read(&p)?)
                    .map_err(|e| Failure::input(format!("{}: {e}", p.display())))?,
                None => random_partitioned(universe, groups, max_size, seed),
            };
            let enc = phs_to_simfvs(&sys).map_err(Failure::input)?;
            let comment = format!(
                "partitioned hitting set, elements at {}",
                id_list(enc.element_vertex.iter().copied())
            );
            Ok((0, ecg(&enc.graph, comment)))
        }
        Generate::Psi {
            pattern_vertices,
            pattern_edges,
            class_size,
            host_edges,
            plant,
            graph,
            seed,
        } => {
            let psi = random_psi(
                pattern_vertices,
                pattern_edges,
                class_size,
                host_edges,
                plant,
                seed,
            );
            let red = psi_to_phs(&psi).map_err(Failure::input)?;
            let k = red.system.k;
            if graph {
                let enc = phs_to_simfvs(&red.system).map_err(Failure::input)?;
                Ok((0, ecg(&enc.graph, format!("k {k}"))))
            } else {
                Ok((0, format!("c k {k}\n{}", write_hss(&red.system))))
            }
        }
        Generate::Random {
            n,
            alpha,
            edges,
            planted,
            seed,
        } => {
            let inst = random_instance(&RandomSpec {
                n,
                alpha,
                edges_per_color: edges,
                planted,
                seed,
            });
            let comment = match &inst.planted {
                Some(s) => format!("planted {}", id_list(s.iter().copied())),
                None => format!("seed {seed}"),
            };
            Ok((0, ecg(&inst.graph, comment.trim_end().to_string())))
        }
    }
}
