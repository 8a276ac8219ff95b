//! Command-line front end: exact `h(w)`, configuration listings, table
//! reproduction, conjecture verification, and degeneracy graphs.
//!
//! Data goes to stdout and is byte-stable across runs; progress and timing
//! go to stderr. Exit codes: 0 success, 1 a theorem-backed verification
//! found a counterexample, 2 usage error.

use std::io::Write as _;
use std::process::ExitCode;
use std::str::FromStr;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};

use arcword::rep::{self, HOptions, Method};
use arcword::word::Word;
use arcword::{arc, degeneracy, table};

#[derive(Parser)]
#[command(
    name = "arcword",
    about = "Exact trivial-submodule dimensions and arc combinatorics for quantum affine sl2 words"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute h(w) with bounds and the method used.
    H {
        /// Word: compact digits ("020242") or comma-separated ("0,2,-2").
        word: String,
        /// Only apply the fast rules; report unknown if none closes the word.
        #[arg(long)]
        rules_only: bool,
        /// Run the exact symbolic elimination unconditionally.
        #[arg(long)]
        certify: bool,
        /// Lift the default length cap (memory grows quickly).
        #[arg(long)]
        force: bool,
    },
    /// List arc configurations of a word.
    Confs {
        word: String,
        #[arg(long, value_enum, default_value_t = ConfClass::All)]
        class: ConfClass,
    },
    /// Classification table for one even length.
    Table {
        #[arg(long)]
        length: usize,
        /// Restrict to conf-connected classes.
        #[arg(long)]
        conf_connected: bool,
        /// Emit JSON instead of CSV.
        #[arg(long)]
        json: bool,
        /// Emit CSV (the default).
        #[arg(long, conflicts_with = "json")]
        csv: bool,
        /// Lift the default length cap of 12.
        #[arg(long)]
        force: bool,
    },
    /// Run a verification suite over all conf-connected words up to a length.
    Verify {
        /// One of: sandwich, slide-invariance, vertex-over, pivots-steady,
        /// deg-std-onto.
        id: String,
        #[arg(long, default_value_t = 6)]
        max_length: usize,
    },
    /// Degeneracy graph on 2n points.
    Dg {
        #[arg(long)]
        n: usize,
        /// Print the cyclic orbit decomposition.
        #[arg(long)]
        orbits: bool,
        #[arg(long, value_enum, default_value_t = DgFormat::Summary)]
        format: DgFormat,
        /// Lift the default cap n <= 4.
        #[arg(long)]
        force: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ConfClass {
    All,
    Catalan,
    Irr,
    Steady,
    Standard,
}

#[derive(Clone, Copy, ValueEnum)]
enum DgFormat {
    Summary,
    Dot,
    Json,
}

fn parse_word(s: &str) -> Result<Word, ExitCode> {
    Word::from_str(s).map_err(|e| {
        eprintln!("error: {e}");
        ExitCode::from(2)
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(code) => code,
    }
}

fn run(cli: Cli) -> Result<ExitCode, ExitCode> {
    match cli.command {
        Command::H {
            word,
            rules_only,
            certify,
            force,
        } => {
            let w = parse_word(&word)?;
            let start = Instant::now();
            if let Some((h, rule)) = rep::h_rules(&w) {
                if !certify {
                    println!("h({w}) = {h}");
                    println!("method: rule:{rule}");
                    if w.len() % 2 == 0 && w.len() <= rep::DEFAULT_LEN_CAP {
                        let lo = arc::irreducible_configs(&w).len();
                        let hi = arc::steady_configs(&w).len();
                        println!("bounds: {lo} <= h <= {hi}");
                    }
                    eprintln!("time: {:?}", start.elapsed());
                    return Ok(ExitCode::SUCCESS);
                }
            } else if rules_only {
                println!("h({w}) = unknown");
                println!("method: rules exhausted");
                eprintln!("time: {:?}", start.elapsed());
                return Ok(ExitCode::SUCCESS);
            }
            let report = rep::h_report(&w, &HOptions { certify, force }).map_err(|e| {
                eprintln!("error: {e}");
                ExitCode::from(2)
            })?;
            println!("h({w}) = {}", report.h);
            let method = match report.method {
                Method::OddLength => "odd-length",
                Method::Rule(r) => r,
                Method::Specialized => "specialized",
                Method::Symbolic => "symbolic",
            };
            println!("method: {method}");
            println!(
                "bounds: {} <= h <= {}   |Conf| = {}",
                report.lower, report.upper, report.conf_count
            );
            eprintln!("time: {:?}", start.elapsed());
            Ok(ExitCode::SUCCESS)
        }
        Command::Confs { word, class } => {
            let w = parse_word(&word)?;
            let configs = match class {
                ConfClass::All => arc::all_configs(&w),
                ConfClass::Catalan => arc::catalan_configs(&w),
                ConfClass::Irr => arc::irreducible_configs(&w),
                ConfClass::Steady => arc::steady_configs(&w),
                ConfClass::Standard => arc::standard_config(&w).into_iter().collect(),
            };
            println!("{} configurations", configs.len());
            for c in configs {
                println!("{c}");
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Table {
            length,
            conf_connected,
            json,
            csv,
            force,
        } => {
            if length % 2 != 0 {
                eprintln!("error: table length must be even");
                return Err(ExitCode::from(2));
            }
            if length > 12 && !force {
                eprintln!("error: table length {length} exceeds the default cap 12");
                return Err(ExitCode::from(2));
            }
            let start = Instant::now();
            let rows = cached_table(length, conf_connected);
            eprintln!(
                "{} classes at length {length} in {:?}",
                rows.len(),
                start.elapsed()
            );
            if json {
                let v = table::rows_to_json(length, conf_connected, &rows);
                println!("{}", serde_json::to_string_pretty(&v).unwrap());
            } else {
                print!("{}", table::rows_to_csv(&rows));
            }
            let _ = csv;
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { id, max_length } => {
            let report = match id.as_str() {
                "sandwich" => {
                    check_cap(max_length, 10)?;
                    table::verify_sandwich(max_length)
                }
                "slide-invariance" => {
                    check_cap(max_length, 10)?;
                    table::verify_slide_invariance(max_length)
                }
                "vertex-over" => {
                    check_cap(max_length, 12)?;
                    table::verify_vertex_over(max_length)
                }
                "pivots-steady" => {
                    check_cap(max_length, 8)?;
                    table::verify_pivots_steady(max_length).map_err(internal)?
                }
                "deg-std-onto" => {
                    check_cap(max_length, 8)?;
                    table::verify_deg_std_onto(max_length).map_err(internal)?
                }
                other => {
                    eprintln!("error: unknown verification id '{other}'");
                    return Err(ExitCode::from(2));
                }
            };
            println!(
                "{}: checked {} words up to length {max_length}",
                report.id, report.checked
            );
            println!("counterexamples: {}", report.counterexamples.len());
            for c in &report.counterexamples {
                println!("  {c}");
            }
            if report.theorem_backed && !report.counterexamples.is_empty() {
                return Ok(ExitCode::from(1));
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Dg {
            n,
            orbits,
            format,
            force,
        } => {
            let g = degeneracy::degeneracy_graph(n, force).map_err(|e| {
                eprintln!("error: {e}");
                ExitCode::from(2)
            })?;
            match format {
                DgFormat::Dot => print!("{}", g.to_dot()),
                DgFormat::Json => {
                    println!("{}", serde_json::to_string_pretty(&g.to_json()).unwrap())
                }
                DgFormat::Summary => {
                    println!(
                        "DG({}) has {} vertices, {} edges",
                        2 * n,
                        g.vertices.len(),
                        g.edges.len()
                    );
                    for (dim, sizes) in g.orbit_sizes_by_dim().iter().rev() {
                        println!(
                            "dim {dim}: {} vertices in {} orbits",
                            sizes.iter().sum::<usize>(),
                            sizes.len()
                        );
                    }
                    if orbits {
                        for (dim, sizes) in g.orbit_sizes_by_dim().iter().rev() {
                            println!("dim {dim} orbit sizes: {sizes:?}");
                        }
                        let mut seen = std::collections::BTreeSet::new();
                        for k in 0..g.vertices.len() {
                            if g.vertices[k].dim() == 1 && seen.insert(g.orbits[k]) {
                                println!(
                                    "1-dim orbit of {}: h = {}",
                                    g.vertices[k].generic_word(),
                                    g.h_labels[k]
                                );
                            }
                        }
                    }
                }
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn check_cap(len: usize, cap: usize) -> Result<(), ExitCode> {
    if len > cap {
        eprintln!("error: max length {len} exceeds the cap {cap} for this check");
        return Err(ExitCode::from(2));
    }
    Ok(())
}

fn internal(e: arcword::Error) -> ExitCode {
    eprintln!("error: {e}");
    ExitCode::from(2)
}

/// Table rows, memoized in `ARCWORD_CACHE_DIR` when that variable is set.
fn cached_table(length: usize, conf_connected: bool) -> Vec<table::TableRow> {
    let Ok(dir) = std::env::var("ARCWORD_CACHE_DIR") else {
        return table::build_table(length, conf_connected);
    };
    let path = std::path::Path::new(&dir).join(format!(
        "table-{length}-{}.json",
        if conf_connected { "cc" } else { "all" }
    ));
    if let Ok(text) = std::fs::read_to_string(&path) {
        if let Ok(v) = serde_json::from_str::<serde_json::Value>(&text) {
            if let Some(rows) = decode_rows(&v) {
                eprintln!("loaded cached table from {}", path.display());
                return rows;
            }
        }
    }
    let rows = table::build_table(length, conf_connected);
    if std::fs::create_dir_all(&dir).is_ok() {
        if let Ok(mut f) = std::fs::File::create(&path) {
            let v = table::rows_to_json(length, conf_connected, &rows);
            let _ = writeln!(f, "{}", serde_json::to_string(&v).unwrap());
        }
    }
    rows
}

fn decode_rows(v: &serde_json::Value) -> Option<Vec<table::TableRow>> {
    let rows = v.get("rows")?.as_array()?;
    let mut out = Vec::with_capacity(rows.len());
    for r in rows {
        out.push(table::TableRow {
            word: Word::from_str(r.get("word")?.as_str()?).ok()?,
            h: r.get("h")?.as_u64()? as usize,
            conf_count: r.get("conf_count")?.as_u64()? as usize,
            poly: r
                .get("poly")?
                .as_array()?
                .iter()
                .map(|c| c.as_i64())
                .collect::<Option<Vec<i64>>>()?,
        });
    }
    Some(out)
}
