//! Command-line front end: every solver computation behind one binary with
//! machine-readable JSON output and a persistent result cache.
//!
//! Exit codes: 0 success, 2 invalid input, 3 resource cap exceeded,
//! 4 internal inconsistency (a certificate failed re-validation).

use clap::{Parser, Subcommand, ValueEnum};
use guessnum_cli::report;
use guessnum::entropy;
use guessnum::error::Error;
use guessnum::extremal::{self, parse_threshold, GnCache, SatVerdict, Session};
use guessnum::graph::{self, Graph};
use guessnum::guessing::{max_code, GuessingInstance};
use guessnum::invariants;
use report::{Caps, GraphEcho, Params, Report};
use serde_json::{json, Value};
use std::path::PathBuf;
use std::time::Instant;

#[derive(Parser)]
#[command(name = "guessnum", version, about = "Exact and bounded guessing numbers of graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Bypass the result cache entirely.
    #[arg(long, global = true)]
    no_cache: bool,
    /// Cache file path (overrides GN_CACHE; default ./gncache.jsonl).
    #[arg(long, global = true)]
    cache: Option<PathBuf>,
    /// Suppress progress lines on standard error.
    #[arg(long, global = true)]
    quiet: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Exact guessing number of a graph, with sandwich bounds and witnesses.
    Gn {
        /// graph6 string, edge list ("n; u v; ..."), or a file with either.
        graph: String,
        #[arg(long, default_value_t = 2)]
        s: u32,
    },
    /// Alphabet-independent entropy LP upper bound, exact rational.
    Entropy {
        graph: String,
        /// Write the LP in plain-text LP format to this path.
        #[arg(long)]
        dump_lp: Option<PathBuf>,
    },
    /// Extremal number: max edges over graphs on n vertices with gn < a.
    Ex {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 2)]
        s: u32,
        #[arg(long)]
        a: String,
    },
    /// Saturation number: min edges over (gn >= a)-saturated graphs.
    Sat {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 2)]
        s: u32,
        #[arg(long)]
        a: String,
    },
    /// Saturation verdict with per-edge certificates.
    CheckSaturated {
        graph: String,
        #[arg(long, default_value_t = 2)]
        s: u32,
        #[arg(long)]
        a: String,
    },
    /// Emit a named construction as graph6 (raw, no JSON).
    Construct {
        #[arg(long, value_enum)]
        kind: ConstructKind,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: Option<usize>,
    },
    /// Minimal forbidden family for gn >= a, up to n_cap vertices.
    Family {
        #[arg(long, default_value_t = 2)]
        s: u32,
        #[arg(long)]
        a: String,
        #[arg(long)]
        ncap: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ConstructKind {
    /// K_{ceil(a)-1} joined with an independent set.
    Extremal,
    /// K*_{a,a} plus isolated vertices.
    Kstar,
    /// b dominating vertices over K*_{a-b,a-b} plus isolated vertices.
    Spectrum,
}

enum Output {
    Report(Box<Report>),
    Raw(String),
}

fn main() {
    let cli = Cli::parse();
    match run(cli) {
        Ok(Output::Report(report)) => {
            println!("{}", serde_json::to_string_pretty(&*report).expect("report serializes"));
        }
        Ok(Output::Raw(text)) => println!("{text}"),
        Err(err) => {
            eprintln!("error: {err}");
            let code = match err {
                Error::InvalidInput(_) => 2,
                Error::ResourceLimit(_) => 3,
                Error::Internal(_) => 4,
            };
            std::process::exit(code);
        }
    }
}

fn run(cli: Cli) -> Result<Output, Error> {
    let cache_echo;
    let mut session = if cli.no_cache {
        cache_echo = "disabled".to_string();
        Session::new()
    } else {
        let path = cli
            .cache
            .clone()
            .or_else(|| std::env::var_os("GN_CACHE").map(PathBuf::from))
            .unwrap_or_else(|| PathBuf::from("./gncache.jsonl"));
        cache_echo = path.display().to_string();
        Session::with_cache(GnCache::at_path(&path)?)
    };
    if !cli.quiet {
        session.set_progress(|msg| eprintln!("# {msg}"));
    }
    let start = Instant::now();

    match cli.command {
        Command::Gn { graph, s } => {
            let g = parse_graph(&graph)?;
            let info = session.gn_info(&g, s, true)?;
            let gn = info
                .exact_gn()
                .ok_or_else(|| Error::internal("exact guessing number missing after search"))?;
            let (alpha, independent_set) = invariants::independence_number(&g);
            let (_, cover) = invariants::clique_cover(&g);
            cover.validate(&g)?;

            // code witness, when the coloring space is small enough to carry one
            let code_value = match GuessingInstance::new(g.clone(), s) {
                Ok(inst) => match max_code(&inst) {
                    Ok(code) => {
                        code.validate(&inst)?;
                        if code.size() as u64 != gn.max_fixed_points {
                            return Err(Error::internal("code witness size disagrees with cache"));
                        }
                        json!(code.words.iter().map(|w| w.colors.clone()).collect::<Vec<_>>())
                    }
                    Err(Error::ResourceLimit(why)) => json!({"omitted": why}),
                    Err(e) => return Err(e),
                },
                Err(Error::ResourceLimit(why)) => json!({"omitted": why}),
                Err(e) => return Err(e),
            };

            Ok(Output::Report(Box::new(Report {
                command: "gn".into(),
                input: Some(echo(&g)),
                params: Params {
                    s: Some(s),
                    cache: cache_echo,
                    caps: Caps::default(),
                    ..Default::default()
                },
                results: json!({
                    "gn": report::guessing_number(&gn),
                    "gn_lower": info.n - info.cp,
                    "gn_upper": info.n - info.alpha,
                    "alpha": info.alpha,
                    "cp": info.cp,
                }),
                certificates: json!({
                    "independent_set": independent_set,
                    "clique_cover": cover.classes,
                    "code": code_value,
                    "alpha_matches": alpha == info.alpha,
                }),
                timing_ms: start.elapsed().as_millis() as u64,
            })))
        }

        Command::Entropy { graph, dump_lp } => {
            let g = parse_graph(&graph)?;
            let model = entropy::build_lp(&g)?;
            if let Some(path) = dump_lp {
                std::fs::write(&path, entropy::write_lp_format(&model))
                    .map_err(|e| Error::invalid(format!("cannot write {}: {e}", path.display())))?;
            }
            let (optimum, certificate) = entropy::solve_lp(&model)?;
            certificate.validate(&g)?;
            let counts = model.counts();
            let full = (1u32 << g.n()) - 1;
            let h_values: Vec<Value> = (1..=full)
                .map(|set| json!({"set": set, "h": report::big_rational(certificate.value(set))}))
                .collect();
            Ok(Output::Report(Box::new(Report {
                command: "entropy".into(),
                input: Some(echo(&g)),
                params: Params { cache: cache_echo, caps: Caps::default(), ..Default::default() },
                results: json!({
                    "optimum": report::big_rational(&optimum),
                    "set_variables": counts.set_variables,
                    "monotonicity_rows": counts.monotonicity,
                    "submodularity_rows": counts.submodularity,
                    "cap_rows": counts.caps,
                    "determination_equalities": counts.determination,
                    "solver_variables": model.solver_variables(),
                    "solver_rows": model.solver_rows(),
                }),
                certificates: json!({ "entropy_vector": h_values }),
                timing_ms: start.elapsed().as_millis() as u64,
            })))
        }

        Command::Ex { n, s, a } => {
            let a = parse_threshold(&a)?;
            let (edges, family) = session.ex_search(n, s, a)?;
            Ok(Output::Report(Box::new(Report {
                command: "ex".into(),
                input: None,
                params: Params {
                    s: Some(s),
                    a: Some(report::rational(a)),
                    n: Some(n),
                    cache: cache_echo,
                    caps: Caps::default(),
                    ..Default::default()
                },
                results: json!({
                    "edges": edges,
                    "family": family.iter().map(|f| f.as_str()).collect::<Vec<_>>(),
                }),
                certificates: Value::Null,
                timing_ms: start.elapsed().as_millis() as u64,
            })))
        }

        Command::Sat { n, s, a } => {
            let a = parse_threshold(&a)?;
            let (edges, family) = session.sat_search(n, s, a)?;
            Ok(Output::Report(Box::new(Report {
                command: "sat".into(),
                input: None,
                params: Params {
                    s: Some(s),
                    a: Some(report::rational(a)),
                    n: Some(n),
                    cache: cache_echo,
                    caps: Caps::default(),
                    ..Default::default()
                },
                results: json!({
                    "edges": edges,
                    "family": family.iter().map(|f| f.as_str()).collect::<Vec<_>>(),
                }),
                certificates: Value::Null,
                timing_ms: start.elapsed().as_millis() as u64,
            })))
        }

        Command::CheckSaturated { graph, s, a } => {
            let g = parse_graph(&graph)?;
            let a = parse_threshold(&a)?;
            let sat = session.is_gn_saturated(&g, s, a)?;
            sat.validate()?;
            let verdict = match sat.verdict {
                SatVerdict::Saturated => "saturated",
                SatVerdict::NotSaturated => "not_saturated",
                SatVerdict::Unknown => "unknown",
            };
            Ok(Output::Report(Box::new(Report {
                command: "check-saturated".into(),
                input: Some(echo(&g)),
                params: Params {
                    s: Some(s),
                    a: Some(report::rational(a)),
                    cache: cache_echo,
                    caps: Caps::default(),
                    ..Default::default()
                },
                results: json!({
                    "verdict": verdict,
                    "reason": sat.reason,
                    "gn_exact": sat.gn.exact,
                    "gn_lower": sat.gn.n - sat.gn.cp,
                    "gn_upper": sat.gn.n - sat.gn.alpha,
                }),
                certificates: serde_json::to_value(&sat.per_nonedge)
                    .map_err(|e| Error::internal(format!("certificate serialization failed: {e}")))?,
                timing_ms: start.elapsed().as_millis() as u64,
            })))
        }

        Command::Construct { kind, n, a, b } => {
            let graph = match kind {
                ConstructKind::Extremal => {
                    extremal::extremal_construction(n, parse_threshold(&a)?)?
                }
                ConstructKind::Kstar => extremal::saturation_construction(n, parse_int(&a)?)?,
                ConstructKind::Spectrum => {
                    let b = b.ok_or_else(|| Error::invalid("spectrum construction needs --b"))?;
                    extremal::spectrum_construction(n, parse_int(&a)?, b)?
                }
            };
            Ok(Output::Raw(graph::encode_graph6(&graph)))
        }

        Command::Family { s, a, ncap } => {
            let a = parse_threshold(&a)?;
            let family = session.minimal_forbidden_family(s, a, ncap)?;
            let order_bound = match u32::try_from(a.ceil().to_integer()) {
                Ok(a_int) => extremal::forbidden_order_bound(s, a_int)
                    .map(|b| Value::String(b.to_string()))
                    .unwrap_or(Value::Null),
                Err(_) => Value::Null,
            };
            Ok(Output::Report(Box::new(Report {
                command: "family".into(),
                input: None,
                params: Params {
                    s: Some(s),
                    a: Some(report::rational(a)),
                    n_cap: Some(ncap),
                    cache: cache_echo,
                    caps: Caps::default(),
                    ..Default::default()
                },
                results: json!({
                    "members": family.members.iter().map(|f| f.as_str()).collect::<Vec<_>>(),
                    "complete": family.complete,
                    "order_bound": order_bound,
                }),
                certificates: Value::Null,
                timing_ms: start.elapsed().as_millis() as u64,
            })))
        }
    }
}

fn echo(g: &Graph) -> GraphEcho {
    GraphEcho { graph6: graph::encode_graph6(g), n: g.n(), m: g.m() }
}

fn parse_int(text: &str) -> Result<usize, Error> {
    text.trim()
        .parse::<usize>()
        .map_err(|_| Error::invalid(format!("expected an integer, got {text:?}")))
}

/// Accept a graph6 string, an inline edge list, or a path to a file holding
/// either format.
fn parse_graph(arg: &str) -> Result<Graph, Error> {
    let content = if std::path::Path::new(arg).is_file() {
        std::fs::read_to_string(arg).map_err(|e| Error::invalid(format!("cannot read {arg}: {e}")))?
    } else {
        arg.to_string()
    };
    let trimmed = content.trim();
    match graph::decode_graph6(trimmed) {
        Ok(g) => Ok(g),
        Err(g6_err) => match graph::parse_edge_list(trimmed) {
            Ok(g) => Ok(g),
            Err(_) => Err(Error::invalid(format!(
                "input is neither graph6 ({g6_err}) nor an edge list"
            ))),
        },
    }
}
