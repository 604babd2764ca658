//! Command-line driver for the two-graph engine: enumerate class catalogs,
//! classify bitangent subsets, identify explicit vector lists, and re-run the
//! structural verifications.
//!
//! Output discipline: the result — one JSON document, one table, or DOT
//! source — goes to stdout (or `--out`); everything else (progress, timings,
//! self-check diagnostics) goes to stderr. JSON output is byte-identical
//! across runs and worker counts.
//!
//! Exit codes: 0 on success, 1 when a verification or self-check fails, 2 for
//! usage and input errors.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use twograph::{
    classify_subsets, enumerate_classes, graph_from_vectors, parse_vector_list,
    reduction_bound_report, verify_excluded_by_subgraph, verify_switching_parity,
    verify_unique_tetrad, verify_witness_lists, BitangentModel, ClassCatalog, LemmaReport,
    TwoGraph, CLASS_COUNTS,
};

#[derive(Parser)]
#[command(
    name = "twograph",
    version,
    about = "Two-graph catalogs and the switching classes of bitangent subsets",
    arg_required_else_help = true
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format; `dot` applies to enumerate and realize only.
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    format: Format,

    /// Write the result here instead of stdout. For `enumerate --format dot`
    /// this names a directory, one file per class.
    #[arg(long, global = true, value_name = "PATH")]
    out: Option<PathBuf>,

    /// Threads for the parallel scans; 0 picks one per CPU.
    #[arg(long, global = true, default_value_t = 0, value_name = "N")]
    workers: usize,

    /// Seed for the randomized verifications.
    #[arg(long, global = true, default_value_t = 0, value_name = "N")]
    seed: u64,

    /// Recompute catalogs, ignoring and not touching the cache.
    #[arg(long, global = true)]
    no_cache: bool,

    /// Catalog cache directory (default: a `twograph-cache` dir under the
    /// system temp directory).
    #[arg(long, global = true, value_name = "PATH")]
    cache_dir: Option<PathBuf>,

    /// Damage the bitangent model before running, so the verifications must
    /// report failure. Negative control for the test suite.
    #[arg(long, global = true, hide = true)]
    corrupt_model: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Enumerate all two-graph classes on n vertices.
    ///
    /// For n <= 7 the class count is cross-checked against the known values
    /// 2, 3, 7, 16, 54; a mismatch exits 1. The n = 8 count is printed as
    /// computed, without a cross-check.
    Enumerate {
        /// Number of vertices, 3..=8.
        #[arg(long)]
        n: usize,
    },
    /// Classify every n-subset of the 28 bitangents by two-graph class.
    ///
    /// Exits 1 if n is 5 or 6 and the number of realizable classes is not
    /// the established 5 (of 7) or 9 (of 16).
    Classify {
        /// Subset size, 3..=7.
        #[arg(long)]
        n: usize,
    },
    /// Identify the two-graph class of an explicit signed vector list.
    Realize {
        /// 3 to 8 vectors like `u18` or `-u15`; commas between tokens are
        /// fine. Negated vectors start with `-`, so flags must come first.
        #[arg(required = true, num_args = 1.., allow_hyphen_values = true)]
        vectors: Vec<String>,
    },
    /// Re-run the structural verifications behind the classification.
    Verify {
        /// Which check to run.
        #[arg(long, value_enum, default_value_t = Which::All)]
        which: Which,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Table,
    Dot,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Which {
    /// Every check below, in order.
    All,
    /// Each syzygetic triple completes to exactly one syzygetic tetrad.
    UniqueTetrad,
    /// The triple-degree counting bound behind the size reduction.
    Reduction,
    /// Unrealizable 6-classes are exactly those forced out by a 5-subclass.
    Exclusions,
    /// The published witness lists land in their stated classes.
    Examples,
    /// Switching invariance, validity, and sign-flip independence.
    Parity,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli) -> Result<ExitCode> {
    if cli.workers > 0 {
        rayon::ThreadPoolBuilder::new()
            .num_threads(cli.workers)
            .build_global()
            .context("could not size the worker pool")?;
    }
    match cli.command {
        Command::Enumerate { n } => cmd_enumerate(cli, n),
        Command::Classify { n } => cmd_classify(cli, n),
        Command::Realize { ref vectors } => cmd_realize(cli, vectors),
        Command::Verify { which } => cmd_verify(cli, which),
    }
}

// ---------------------------------------------------------------------------
// Catalog cache

/// Load the n-vertex catalog, preferring the cache. Cached files are named by
/// engine version and n; [`ClassCatalog::from_json`] re-verifies every entry,
/// so a stale or damaged file falls back to recomputation (with a note on
/// stderr) and is overwritten.
fn load_catalog(cli: &Cli, n: usize) -> Result<ClassCatalog> {
    let dir = cli
        .cache_dir
        .clone()
        .unwrap_or_else(|| std::env::temp_dir().join("twograph-cache"));
    let path = dir.join(format!(
        "catalog-v{}-n{}.json",
        env!("CARGO_PKG_VERSION"),
        n
    ));
    if !cli.no_cache {
        if let Ok(text) = fs::read_to_string(&path) {
            let cached = serde_json::from_str::<Value>(&text)
                .map_err(|e| anyhow!("{e}"))
                .and_then(|v| ClassCatalog::from_json(&v).map_err(|e| anyhow!("{e}")));
            match cached {
                Ok(catalog) if catalog.n() == n => return Ok(catalog),
                Ok(_) => eprintln!(
                    "note: cache {} holds a different n; recomputing",
                    path.display()
                ),
                Err(e) => eprintln!(
                    "note: cache {} failed verification ({e}); recomputing",
                    path.display()
                ),
            }
        }
    }
    let start = Instant::now();
    let catalog = enumerate_classes(n)?;
    eprintln!(
        "enumerated {} classes on {} vertices in {:.1?}",
        catalog.len(),
        n,
        start.elapsed()
    );
    if !cli.no_cache {
        fs::create_dir_all(&dir)
            .with_context(|| format!("could not create cache dir {}", dir.display()))?;
        fs::write(&path, catalog.to_json().to_string())
            .with_context(|| format!("could not write cache {}", path.display()))?;
    }
    Ok(catalog)
}

fn model(cli: &Cli) -> BitangentModel {
    let mut m = BitangentModel::new();
    if cli.corrupt_model {
        eprintln!("note: bitangent model corrupted on request");
        m.poison_first_triple();
    }
    m
}

// ---------------------------------------------------------------------------
// Output plumbing

/// Emit a finished document to `--out` or stdout.
fn emit(cli: &Cli, text: &str) -> Result<()> {
    match &cli.out {
        Some(path) => {
            let data = if text.ends_with('\n') {
                text.to_string()
            } else {
                format!("{text}\n")
            };
            fs::write(path, data).with_context(|| format!("could not write {}", path.display()))?;
        }
        None => println!("{text}"),
    }
    Ok(())
}

fn emit_json(cli: &Cli, value: &Value) -> Result<()> {
    emit(cli, &value.to_string())
}

/// `v1v2 v3v4`-style rendering of an edge list; `-` when empty.
fn edge_tokens(edges: &[(usize, usize)]) -> String {
    if edges.is_empty() {
        return "-".to_string();
    }
    edges
        .iter()
        .map(|&(i, j)| format!("v{}v{}", i + 1, j + 1))
        .collect::<Vec<_>>()
        .join(" ")
}

/// File-safe name for a class label: `(6,8)_1` becomes `6-8_1`.
fn label_file_stem(label: &str) -> String {
    label
        .chars()
        .filter_map(|c| match c {
            '(' | ')' => None,
            ',' => Some('-'),
            c => Some(c),
        })
        .collect()
}

// ---------------------------------------------------------------------------
// enumerate

fn cmd_enumerate(cli: &Cli, n: usize) -> Result<ExitCode> {
    if !(3..=8).contains(&n) {
        bail!("enumerate covers 3..=8 vertices, got {n}");
    }
    let catalog = load_catalog(cli, n)?;

    // Tripwire against a silently broken sweep; n = 8 has no entry to check
    // against and is reported as computed.
    let checked = n <= 7;
    if checked && catalog.len() as u64 != CLASS_COUNTS[n] {
        eprintln!(
            "self-check failed: {} classes on {} vertices, expected {}",
            catalog.len(),
            n,
            CLASS_COUNTS[n]
        );
        return Ok(ExitCode::from(1));
    }
    if !checked {
        eprintln!(
            "note: {} classes on {} vertices as computed; no cross-check at this size",
            catalog.len(),
            n
        );
    }

    match cli.format {
        Format::Json => emit_json(cli, &catalog.to_json())?,
        Format::Table => {
            let mut t = format!(
                "two-graph classes on {} vertices: {}{}\n",
                n,
                catalog.len(),
                if checked { "" } else { " (computed)" }
            );
            t.push_str(&format!(
                "{:<10} {:>7}  {:<6} representative\n",
                "label", "|delta|", "key"
            ));
            for c in catalog.classes() {
                t.push_str(&format!(
                    "{:<10} {:>7}  {:<6} {}\n",
                    c.label,
                    c.delta_count,
                    c.key.hex(),
                    edge_tokens(&c.representative.edges()),
                ));
            }
            emit(cli, &t)?;
        }
        Format::Dot => {
            let dir = cli
                .out
                .as_deref()
                .ok_or_else(|| anyhow!("--format dot on a whole catalog needs --out DIRECTORY"))?;
            fs::create_dir_all(dir)
                .with_context(|| format!("could not create {}", dir.display()))?;
            for c in catalog.classes() {
                let path = dir.join(format!("{}.dot", label_file_stem(&c.label)));
                fs::write(&path, c.representative.to_dot(&c.label))
                    .with_context(|| format!("could not write {}", path.display()))?;
            }
            eprintln!("wrote {} graphs to {}", catalog.len(), dir.display());
        }
    }
    Ok(ExitCode::SUCCESS)
}

// ---------------------------------------------------------------------------
// classify

fn cmd_classify(cli: &Cli, n: usize) -> Result<ExitCode> {
    if !(3..=7).contains(&n) {
        bail!("classify covers subset sizes 3..=7, got {n}");
    }
    let catalog = load_catalog(cli, n)?;
    let m = model(cli);

    let start = Instant::now();
    let report = match classify_subsets(n, &catalog, &m) {
        Ok(r) => r,
        Err(e) => {
            // A scan that meets a triple set outside the catalog means the
            // engine's own invariants are broken — that is a verification
            // failure, not a usage problem.
            eprintln!("classification failed: {e}");
            return Ok(ExitCode::from(1));
        }
    };
    eprintln!(
        "classified {} {}-subsets in {:.1?}",
        report.total_subsets,
        n,
        start.elapsed()
    );

    match cli.format {
        Format::Json => emit_json(cli, &report.to_json())?,
        Format::Table => {
            let realizable = report.classes.iter().filter(|c| c.realizable).count();
            let mut t = format!(
                "{}-subsets of the 28 bitangents: {} across {} classes, {} realizable\n",
                n,
                report.total_subsets,
                report.classes.len(),
                realizable
            );
            t.push_str(&format!(
                "{:<10} {:>7} {:>9}  witness\n",
                "label", "|delta|", "subsets"
            ));
            for c in &report.classes {
                let witness = match &c.witness {
                    Some(pairs) => pairs
                        .iter()
                        .map(|&(j, k)| format!("u{j}{k}"))
                        .collect::<Vec<_>>()
                        .join(" "),
                    None => "-".to_string(),
                };
                t.push_str(&format!(
                    "{:<10} {:>7} {:>9}  {}\n",
                    c.label, c.delta_count, c.count, witness
                ));
            }
            emit(cli, &t)?;
        }
        Format::Dot => bail!("--format dot does not apply to classify"),
    }

    // The published classification this tool exists to reproduce.
    let expected = match n {
        5 => Some(5),
        6 => Some(9),
        _ => None,
    };
    if let Some(want) = expected {
        let got = report.classes.iter().filter(|c| c.realizable).count();
        if got != want {
            eprintln!("self-check failed: {got} realizable classes at n = {n}, expected {want}");
            return Ok(ExitCode::from(1));
        }
    }
    Ok(ExitCode::SUCCESS)
}

// ---------------------------------------------------------------------------
// realize

fn cmd_realize(cli: &Cli, tokens: &[String]) -> Result<ExitCode> {
    // Negated vectors look like flags, so the vector list swallows the rest
    // of the command line; catch a stray option and say what happened.
    if let Some(flag) = tokens.iter().find(|t| t.starts_with("--")) {
        bail!("found {flag} after the vector list; options go before the vectors");
    }
    let vectors = parse_vector_list(&tokens.join(" ")).map_err(|e| anyhow!("{e}"))?;
    if !(3..=8).contains(&vectors.len()) {
        bail!("realize takes 3 to 8 vectors, got {}", vectors.len());
    }
    let graph = graph_from_vectors(&vectors).map_err(|e| anyhow!("{e}"))?;
    let tg = TwoGraph::from_graph(&graph);
    let catalog = load_catalog(cli, vectors.len())?;
    let class = catalog.class_of(&tg).map_err(|e| anyhow!("{e}"))?;

    let names: Vec<String> = vectors.iter().map(|v| v.to_string()).collect();
    match cli.format {
        Format::Json => {
            let doc = json!({
                "vectors": names,
                "n": vectors.len(),
                "edges": graph.edges(),
                "delta_triples": tg.triples(),
                "delta_count": tg.triples().len(),
                "label": class.label,
                "key_hex": class.key.hex(),
            });
            emit_json(cli, &doc)?;
        }
        Format::Table => {
            let triples = tg.triples();
            let delta = if triples.is_empty() {
                "{}".to_string()
            } else {
                format!(
                    "{{{}}}",
                    triples
                        .iter()
                        .map(|&(i, j, k)| format!("v{}v{}v{}", i + 1, j + 1, k + 1))
                        .collect::<Vec<_>>()
                        .join(", ")
                )
            };
            let t = format!(
                "vectors: {}\ngraph: {}\ndelta: {} ({} triples)\nclass: {}\n",
                names.join(" "),
                edge_tokens(&graph.edges()),
                delta,
                triples.len(),
                class.label
            );
            emit(cli, &t)?;
        }
        Format::Dot => emit(cli, &graph.to_dot(&class.label))?,
    }
    Ok(ExitCode::SUCCESS)
}

// ---------------------------------------------------------------------------
// verify

fn cmd_verify(cli: &Cli, which: Which) -> Result<ExitCode> {
    let m = model(cli);
    let needs_catalogs = matches!(which, Which::All | Which::Exclusions | Which::Examples);
    let catalogs = if needs_catalogs {
        Some((load_catalog(cli, 5)?, load_catalog(cli, 6)?))
    } else {
        None
    };

    let mut reports: Vec<LemmaReport> = Vec::new();
    let mut run_check = |report: twograph::Result<LemmaReport>| match report {
        Ok(r) => {
            eprintln!(
                "{}: {} in {:.1?} over {} instances",
                r.id,
                if r.pass() { "pass" } else { "FAIL" },
                r.elapsed,
                r.instances
            );
            reports.push(r);
            Ok(())
        }
        Err(e) => Err(e),
    };

    let outcome: twograph::Result<()> = (|| {
        if matches!(which, Which::All | Which::UniqueTetrad) {
            run_check(Ok(verify_unique_tetrad(&m)))?;
        }
        if matches!(which, Which::All | Which::Reduction) {
            run_check(Ok(reduction_bound_report(cli.seed)))?;
        }
        if let Some((cat5, cat6)) = &catalogs {
            if matches!(which, Which::All | Which::Exclusions) {
                run_check(verify_excluded_by_subgraph(cat6, cat5))?;
            }
            if matches!(which, Which::All | Which::Examples) {
                run_check(verify_witness_lists(&m, cat5, cat6))?;
            }
        }
        if matches!(which, Which::All | Which::Parity) {
            run_check(Ok(verify_switching_parity(&m, cli.seed)))?;
        }
        Ok(())
    })();
    if let Err(e) = outcome {
        // A check that cannot even finish is a failed verification.
        eprintln!("verification errored: {e}");
        return Ok(ExitCode::from(1));
    }

    let pass = reports.iter().all(LemmaReport::pass);
    match cli.format {
        Format::Json => {
            let doc = json!({
                "pass": pass,
                "reports": reports.iter().map(LemmaReport::to_json).collect::<Vec<_>>(),
            });
            emit_json(cli, &doc)?;
        }
        Format::Table => {
            let mut t = String::new();
            for r in &reports {
                t.push_str(&format!(
                    "{:<18} {:<4} {:>6} instances{}\n",
                    r.id,
                    if r.pass() { "pass" } else { "FAIL" },
                    r.instances,
                    if r.violations.is_empty() {
                        String::new()
                    } else {
                        format!("  ({} violations)", r.violations.len())
                    }
                ));
                for v in r.violations.iter().take(5) {
                    t.push_str(&format!("  {v}\n"));
                }
            }
            t.push_str(if pass {
                "all checks passed\n"
            } else {
                "CHECKS FAILED\n"
            });
            emit(cli, &t)?;
        }
        Format::Dot => bail!("--format dot does not apply to verify"),
    }
    Ok(if pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}
