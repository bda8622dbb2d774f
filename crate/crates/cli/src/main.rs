//! Command-line frontend: refinement comparisons, species counting, family
//! enumeration, verification suites, directed-graph tools, and instance
//! normalization. Data goes to standard output (or `--out`); human-readable
//! summaries go to the diagnostic stream. Output is byte-identical for
//! identical inputs and flags.

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use hypercr::digraphs::{count_dihom, distinguish_by_a3, tensor_product, transitive_tournament};
use hypercr::enumerate::{
    enum_berge_acyclic, enum_berge_acyclic_with, enum_dags_a3, enum_digraphs, enum_hypergraphs,
};
use hypercr::homcount::{count, count_hom_cgraph, CountKind};
use hypercr::hypergraph::{Digraph, Hypergraph};
use hypercr::instance::{parse_instances, to_json, Instance};
use hypercr::refine::{distinguishes_cgraphs, distinguishes_hypergraphs, DistinguishResult};
use hypercr::verify::{
    check_hom_decomposition, check_hom_equivalence, check_inhom_decomposition,
    check_inhom_equivalence, check_loc_inj_decomposition, check_simple_equivalence,
    check_triangularity, default_pattern_budget, desk_suite, recover_edge_size_counts,
    CheckReport, DeskConfig, TriangularSpecies,
};
use num_bigint::BigUint;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

#[derive(Parser)]
#[command(name = "hypercr", version, about = "Exact hypergraph refinement and counting tools")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum OwnColorFlag {
    On,
    Off,
}

#[derive(Clone, Copy, ValueEnum)]
enum KindFlag {
    Hom,
    Inhom,
    Loinjinhom,
    Loinjhom,
    Lomehom,
    Leafaddinhom,
    Aut,
}

impl KindFlag {
    fn kind(self) -> CountKind {
        match self {
            KindFlag::Hom => CountKind::hom(),
            KindFlag::Inhom => CountKind::inhom(),
            KindFlag::Loinjinhom => CountKind::lo_inj_inhom(),
            KindFlag::Loinjhom => CountKind::lo_inj_hom(),
            KindFlag::Lomehom => CountKind::lo_me_hom(),
            KindFlag::Leafaddinhom => CountKind::leaf_add_inhom(),
            KindFlag::Aut => CountKind::aut(),
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyFlag {
    /// Connected Berge-acyclic hypergraphs up to a weight bound.
    Ba,
    /// Berge-acyclic hypergraphs with a fixed edge count and edge-size cap.
    BaBounded,
    /// General hypergraphs within vertex/edge bounds.
    Hypergraphs,
    /// Digraphs up to a vertex bound.
    Digraphs,
    /// Digraphs admitting a homomorphism into the 3-vertex transitive
    /// tournament.
    DagsA3,
}

#[derive(Args)]
struct OutputArg {
    /// Write data to this path instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Compare two instances under color refinement.
    Cr {
        a: PathBuf,
        b: PathBuf,
        /// Include each vertex's previous color during graph refinement.
        #[arg(long = "own-color", value_enum, default_value = "on")]
        own_color: OwnColorFlag,
        #[command(flatten)]
        output: OutputArg,
    },
    /// Count mapping pairs of a species between two instances.
    Hom {
        #[arg(long, value_enum)]
        kind: KindFlag,
        f: PathBuf,
        /// Target instance; defaults to the source for `--kind aut`.
        g: Option<PathBuf>,
        #[command(flatten)]
        output: OutputArg,
    },
    /// Emit an isomorph-free family as JSON lines.
    Enumerate {
        #[arg(long, value_enum)]
        family: FamilyFlag,
        #[arg(long = "max-weight", default_value_t = 4)]
        max_weight: usize,
        #[arg(long = "max-v", default_value_t = 3)]
        max_v: usize,
        #[arg(long = "max-e", default_value_t = 2)]
        max_e: usize,
        #[arg(long = "max-edge-size", default_value_t = 3)]
        max_edge_size: usize,
        /// Edge count for the bounded Berge-acyclic family.
        #[arg(long, default_value_t = 1)]
        edges: usize,
        #[arg(long)]
        simple: bool,
        #[arg(long)]
        connected: bool,
        #[command(flatten)]
        output: OutputArg,
    },
    /// Run a named check or a whole verification suite.
    Verify {
        /// Suite name; `desk` runs every exhaustive desk-scale sweep.
        #[arg(long)]
        suite: Option<String>,
        /// Named check to run on the given instance files.
        #[arg(long)]
        check: Option<String>,
        instances: Vec<PathBuf>,
        #[arg(long, default_value_t = 1)]
        workers: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Pattern-weight budget for witness searches.
        #[arg(long)]
        budget: Option<usize>,
        /// Family weight bound for triangularity checks.
        #[arg(long = "max-weight", default_value_t = 5)]
        max_weight: usize,
        #[command(flatten)]
        output: OutputArg,
    },
    /// Directed-graph tools.
    Dag {
        #[command(subcommand)]
        op: DagOp,
    },
    /// Validate and normalize instance files.
    Fmt {
        files: Vec<PathBuf>,
        #[command(flatten)]
        output: OutputArg,
    },
}

#[derive(Subcommand)]
enum DagOp {
    /// Tensor product of two digraphs.
    Tensor {
        g: PathBuf,
        h: PathBuf,
        #[command(flatten)]
        output: OutputArg,
    },
    /// The transitive tournament on `n` vertices.
    Tournament {
        n: usize,
        #[command(flatten)]
        output: OutputArg,
    },
    /// Count digraph homomorphisms.
    Hom {
        f: PathBuf,
        g: PathBuf,
        #[command(flatten)]
        output: OutputArg,
    },
    /// Search small tournament-mappable patterns separating two digraphs.
    A3Distinguish {
        g: PathBuf,
        h: PathBuf,
        #[arg(long = "max-pattern-v", default_value_t = 4)]
        max_pattern_v: usize,
        #[command(flatten)]
        output: OutputArg,
    },
}

fn main() {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => std::process::exit(code),
        Err(error) => {
            eprintln!("error: {error:#}");
            std::process::exit(2);
        }
    }
}

fn write_output(output: &OutputArg, data: &str) -> Result<()> {
    match &output.out {
        Some(path) => fs::write(path, data).with_context(|| format!("writing {}", path.display())),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(data.as_bytes())?;
            Ok(())
        }
    }
}

fn load_one(path: &Path) -> Result<Instance> {
    let body = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let mut instances = parse_instances(&body).with_context(|| format!("parsing {}", path.display()))?;
    if instances.len() != 1 {
        bail!("{} holds {} instances, expected exactly one", path.display(), instances.len());
    }
    Ok(instances.remove(0))
}

fn load_hypergraph(path: &Path) -> Result<Hypergraph> {
    match load_one(path)? {
        Instance::Hypergraph(g) => Ok(g),
        other => bail!("{} is a {}, expected a hypergraph", path.display(), other.type_name()),
    }
}

fn load_digraph(path: &Path) -> Result<Digraph> {
    match load_one(path)? {
        Instance::Digraph(g) => Ok(g),
        other => bail!("{} is a {}, expected a digraph", path.display(), other.type_name()),
    }
}

fn verdict_json(result: &DistinguishResult) -> String {
    match result.round {
        Some(round) => format!(
            "{{\"distinguished\":{},\"round\":{}}}\n",
            result.distinguished, round
        ),
        None => format!("{{\"distinguished\":{}}}\n", result.distinguished),
    }
}

fn run(cli: Cli) -> Result<i32> {
    match cli.command {
        Command::Cr { a, b, own_color, output } => {
            let ia = load_one(&a)?;
            let ib = load_one(&b)?;
            let result = match (&ia, &ib) {
                (Instance::Hypergraph(g), Instance::Hypergraph(h)) => {
                    distinguishes_hypergraphs(g, h)
                }
                (Instance::CGraph(g), Instance::CGraph(h)) => {
                    distinguishes_cgraphs(g, h, matches!(own_color, OwnColorFlag::On))
                }
                _ => bail!(
                    "instance types differ: {} vs {}",
                    ia.type_name(),
                    ib.type_name()
                ),
            };
            write_output(&output, &verdict_json(&result))?;
            eprintln!(
                "{}",
                if result.distinguished {
                    format!("distinguished at round {}", result.round.expect("round set"))
                } else {
                    "not distinguished".to_string()
                }
            );
            Ok(0)
        }
        Command::Hom { kind, f, g, output } => {
            let value: BigUint = match kind {
                KindFlag::Aut => {
                    let source = load_hypergraph(&f)?;
                    if let Some(g) = g {
                        let target = load_hypergraph(&g)?;
                        if source != target {
                            bail!("automorphism counting takes a single instance");
                        }
                    }
                    count(CountKind::aut(), &source, &source)?
                }
                _ => {
                    let g = g.ok_or_else(|| anyhow!("this species needs a target instance"))?;
                    match (load_one(&f)?, load_one(&g)?) {
                        (Instance::Hypergraph(src), Instance::Hypergraph(dst)) => {
                            count(kind.kind(), &src, &dst)?
                        }
                        (Instance::CGraph(src), Instance::CGraph(dst)) => {
                            if !matches!(kind, KindFlag::Hom) {
                                bail!("colored graphs support --kind hom only");
                            }
                            count_hom_cgraph(&src, &dst)?
                        }
                        (a, b) => bail!(
                            "unsupported instance combination: {} vs {}",
                            a.type_name(),
                            b.type_name()
                        ),
                    }
                }
            };
            write_output(&output, &format!("{value}\n"))?;
            Ok(0)
        }
        Command::Enumerate {
            family,
            max_weight,
            max_v,
            max_e,
            max_edge_size,
            edges,
            simple,
            connected,
            output,
        } => {
            let mut lines = String::new();
            match family {
                FamilyFlag::Ba => {
                    for g in enum_berge_acyclic(max_weight).iter() {
                        lines.push_str(&to_json(&Instance::Hypergraph(g.clone())));
                        lines.push('\n');
                    }
                }
                FamilyFlag::BaBounded => {
                    for g in enum_berge_acyclic_with(edges, max_edge_size).iter() {
                        lines.push_str(&to_json(&Instance::Hypergraph(g.clone())));
                        lines.push('\n');
                    }
                }
                FamilyFlag::Hypergraphs => {
                    for g in enum_hypergraphs(max_v, max_e, max_edge_size, simple, connected).iter()
                    {
                        lines.push_str(&to_json(&Instance::Hypergraph(g.clone())));
                        lines.push('\n');
                    }
                }
                FamilyFlag::Digraphs => {
                    for d in enum_digraphs(max_v).iter() {
                        lines.push_str(&to_json(&Instance::Digraph(d.clone())));
                        lines.push('\n');
                    }
                }
                FamilyFlag::DagsA3 => {
                    for d in enum_dags_a3(max_v).iter() {
                        lines.push_str(&to_json(&Instance::Digraph(d.clone())));
                        lines.push('\n');
                    }
                }
            }
            write_output(&output, &lines)?;
            Ok(0)
        }
        Command::Verify {
            suite,
            check,
            instances,
            workers,
            seed,
            budget,
            max_weight,
            output,
        } => {
            let reports = match (suite.as_deref(), check.as_deref()) {
                (Some("desk"), None) => desk_suite(&DeskConfig { workers, seed }),
                (Some(other), None) => bail!("unknown suite '{other}' (expected: desk)"),
                (None, Some(name)) => {
                    run_named_check(name, &instances, budget, max_weight)?
                }
                _ => bail!("pass exactly one of --suite or --check"),
            };
            let mut lines = String::new();
            let mut all_ok = true;
            for report in &reports {
                all_ok &= report.ok;
                lines.push_str(&serde_json::to_string(report)?);
                lines.push('\n');
            }
            write_output(&output, &lines)?;
            for report in &reports {
                eprintln!(
                    "{} {}: {}",
                    if report.ok { "ok  " } else { "FAIL" },
                    report.check,
                    report.detail.as_deref().unwrap_or("")
                );
            }
            Ok(if all_ok { 0 } else { 1 })
        }
        Command::Dag { op } => run_dag(op),
        Command::Fmt { files, output } => {
            let mut lines = String::new();
            for path in &files {
                let body = fs::read_to_string(path)
                    .with_context(|| format!("reading {}", path.display()))?;
                let instances = parse_instances(&body)
                    .with_context(|| format!("parsing {}", path.display()))?;
                for instance in &instances {
                    lines.push_str(&to_json(instance));
                    lines.push('\n');
                }
            }
            write_output(&output, &lines)?;
            Ok(0)
        }
    }
}

fn two_hypergraphs(instances: &[PathBuf]) -> Result<(Hypergraph, Hypergraph)> {
    if instances.len() != 2 {
        bail!("this check takes exactly two hypergraph instances");
    }
    Ok((load_hypergraph(&instances[0])?, load_hypergraph(&instances[1])?))
}

fn run_named_check(
    name: &str,
    instances: &[PathBuf],
    budget: Option<usize>,
    max_weight: usize,
) -> Result<Vec<CheckReport>> {
    let mut reports = Vec::new();
    match name {
        "decomposition-inhom" | "decomposition-hom" | "decomposition-loinj" => {
            let (g, h) = two_hypergraphs(instances)?;
            let report = match name {
                "decomposition-inhom" => check_inhom_decomposition(&g, &h)?,
                "decomposition-hom" => check_hom_decomposition(&g, &h)?,
                _ => check_loc_inj_decomposition(&g, &h)?,
            };
            reports.push(CheckReport {
                check: name.to_string(),
                instances: Some(format!("{};{}", instances[0].display(), instances[1].display())),
                ok: report.ok,
                witness: None,
                detail: Some(format!(
                    "lhs={} rhs={} family={}",
                    report.lhs, report.rhs, report.family_size
                )),
            });
        }
        "hom-equivalence" | "inhom-equivalence" => {
            let (g, h) = two_hypergraphs(instances)?;
            let budget = budget.unwrap_or_else(|| default_pattern_budget(&g, &h));
            let report = if name == "hom-equivalence" {
                check_hom_equivalence(&g, &h, budget)
            } else {
                check_inhom_equivalence(&g, &h, budget)
            };
            reports.push(CheckReport {
                check: name.to_string(),
                instances: Some(format!("{};{}", instances[0].display(), instances[1].display())),
                ok: report.consistent && !report.budget_exhausted,
                witness: report.witness.map(|w| to_json(&Instance::Hypergraph(w))),
                detail: Some(format!(
                    "distinguished={} round={:?} budget={}",
                    report.distinguished, report.round, report.budget
                )),
            });
        }
        "simple-equivalence" => {
            let (g, h) = two_hypergraphs(instances)?;
            let budget = budget.unwrap_or_else(|| default_pattern_budget(&g, &h));
            let (hom_rep, inhom_rep) = check_simple_equivalence(&g, &h, budget)?;
            for (label, report) in [("hom", hom_rep), ("inhom", inhom_rep)] {
                reports.push(CheckReport {
                    check: format!("simple-equivalence-{label}"),
                    instances: Some(format!(
                        "{};{}",
                        instances[0].display(),
                        instances[1].display()
                    )),
                    ok: report.consistent && !report.budget_exhausted,
                    witness: report.witness.map(|w| to_json(&Instance::Hypergraph(w))),
                    detail: Some(format!(
                        "distinguished={} round={:?} budget={}",
                        report.distinguished, report.round, report.budget
                    )),
                });
            }
        }
        "edge-size-recovery" => {
            if instances.len() != 1 {
                bail!("this check takes exactly one hypergraph instance");
            }
            let g = load_hypergraph(&instances[0])?;
            let n = g.vertex_count();
            let inhom_bk: Vec<BigUint> = (1..=n)
                .map(|k| {
                    let bk = Hypergraph::single_edge(k).expect("k >= 1");
                    count(CountKind::inhom(), &bk, &g).expect("no preconditions")
                })
                .collect();
            let (counts, total) = recover_edge_size_counts(&inhom_bk, n)?;
            let mut true_counts = vec![BigUint::from(0u32); n];
            for e in g.edges() {
                true_counts[e.len() - 1] += BigUint::from(1u32);
            }
            let ok = counts == true_counts && total == BigUint::from(g.edge_count());
            reports.push(CheckReport {
                check: name.to_string(),
                instances: Some(instances[0].display().to_string()),
                ok,
                witness: None,
                detail: Some(format!("recovered={counts:?} total={total}")),
            });
        }
        "triangularity" => {
            let family = enum_berge_acyclic(max_weight);
            for species in [TriangularSpecies::LoMeHom, TriangularSpecies::LeafAddInHom] {
                let report = check_triangularity(&family, species)?;
                reports.push(CheckReport {
                    check: format!("triangularity-{species:?}"),
                    instances: None,
                    ok: report.ok,
                    witness: None,
                    detail: Some(format!(
                        "{} pairs, {} violations",
                        report.checked_pairs,
                        report.violations.len()
                    )),
                });
            }
        }
        other => bail!("unknown check '{other}'"),
    }
    Ok(reports)
}

fn run_dag(op: DagOp) -> Result<i32> {
    match op {
        DagOp::Tensor { g, h, output } => {
            let product = tensor_product(&load_digraph(&g)?, &load_digraph(&h)?);
            write_output(&output, &format!("{}\n", to_json(&Instance::Digraph(product))))?;
            Ok(0)
        }
        DagOp::Tournament { n, output } => {
            let t = transitive_tournament(n);
            write_output(&output, &format!("{}\n", to_json(&Instance::Digraph(t))))?;
            Ok(0)
        }
        DagOp::Hom { f, g, output } => {
            let value = count_dihom(&load_digraph(&f)?, &load_digraph(&g)?);
            write_output(&output, &format!("{value}\n"))?;
            Ok(0)
        }
        DagOp::A3Distinguish { g, h, max_pattern_v, output } => {
            let report = distinguish_by_a3(&load_digraph(&g)?, &load_digraph(&h)?, max_pattern_v);
            let witness = report
                .witness
                .as_ref()
                .map(|w| to_json(&Instance::Digraph(w.clone())))
                .unwrap_or_else(|| "null".to_string());
            write_output(
                &output,
                &format!(
                    "{{\"isomorphic\":{},\"consistent\":{},\"budget_exhausted\":{},\"witness\":{}}}\n",
                    report.isomorphic, report.consistent, report.budget_exhausted, witness
                ),
            )?;
            Ok(if report.consistent && !report.budget_exhausted { 0 } else { 1 })
        }
    }
}
