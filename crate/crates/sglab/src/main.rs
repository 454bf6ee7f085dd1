use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use sglab::io::{read_graph6, read_sg_file, write_sg};
use sglab::verify::{Claim, ClaimParams, FalsifyParams, Status, TheoremReport, Verifier};
use sglab_core::constructions::{
    build_c3minus_k, build_cycle, build_g_st, build_h_na, build_path, complete_signed, HnaSigns,
    HnaVariant,
};
use sglab_core::spectral::{
    char_poly, eigenvalues, hong_bound, motzkin_straus_bound, stanic_bound, wyq_bound,
    CHAR_POLY_LIMIT,
};
use sglab_core::{
    find_negative_cycle_of_length, frustration_index, Edge, Sign, SignedGraph, VertexSet,
};

#[derive(Parser)]
#[command(
    name = "sglab",
    version,
    about = "Signed-graph constructions, checks and verification sweeps"
)]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Worker threads for verification sweeps.
    #[arg(long, env = "SGLAB_JOBS", global = true, value_parser = clap::value_parser!(u32).range(1..))]
    jobs: Option<u32>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Build a graph family and write it as .sg.
    Construct(ConstructArgs),
    /// Test whether a graph has no negative cycle of the given length.
    Check {
        #[arg(long)]
        ell: usize,
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// Eigenvalues, spectral radius and characteristic polynomial.
    Spectrum {
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// Evaluate the spectral bounds.
    Bounds {
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// Exact frustration index.
    Frustration {
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// Run one verification claim and emit its report.
    Verify(VerifyArgs),
    /// Hill-climbing search against the edge bound.
    Search(SearchArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Family {
    C3k,
    Gst,
    Hna,
    Complete,
    Path,
    Cycle,
}

#[derive(Args)]
struct ConstructArgs {
    #[arg(long, value_enum)]
    family: Family,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    s: Option<usize>,
    #[arg(long)]
    t: Option<usize>,
    #[arg(long)]
    a: Option<usize>,
    /// H_{n,a} attachment variant: 1 all negative, 2 all positive, 3 mixed.
    #[arg(long, value_parser = clap::value_parser!(u8).range(1..=3))]
    variant: Option<u8>,
    /// Clique vertices with negative attachment for variant 3, e.g. `5,6`.
    #[arg(long, value_delimiter = ',')]
    attach: Vec<usize>,
    /// Negative edges, e.g. `0-1,2-3` (complete graphs and the H_{n,a} clique).
    #[arg(long, value_delimiter = ',', value_parser = parse_edge)]
    negative: Vec<Edge>,
    /// Edge signs for paths and cycles, e.g. `++-`.
    #[arg(long, allow_hyphen_values = true)]
    signs: Option<String>,
    /// Sign of the closing edge uv of H_{n,a}.
    #[arg(long, allow_hyphen_values = true)]
    endpoint_sign: Option<char>,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long)]
    claim: String,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    a: Option<usize>,
    #[arg(long)]
    nmax: Option<usize>,
    #[arg(long)]
    trials: Option<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    budget: Option<u64>,
    #[arg(long)]
    restarts: Option<u32>,
    #[arg(long)]
    from_construction: bool,
    /// Underlying graphs in graph6 format, one per line.
    #[arg(long)]
    graphs: Option<PathBuf>,
    #[arg(long)]
    no_timestamp: bool,
    /// Also write the JSON report here.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct SearchArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    k: usize,
    #[arg(long, default_value_t = 1_000_000)]
    budget: u64,
    #[arg(long, default_value_t = 20)]
    restarts: u32,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    from_construction: bool,
    /// Skip the from-scratch re-check of every accepted state.
    #[arg(long)]
    no_audit: bool,
    #[arg(long)]
    no_timestamp: bool,
    #[arg(long)]
    out: Option<PathBuf>,
}

fn parse_edge(s: &str) -> Result<Edge, String> {
    let (u, v) = s
        .split_once('-')
        .ok_or_else(|| format!("edge {s:?} is not `u-v`"))?;
    let u: usize = u
        .trim()
        .parse()
        .map_err(|_| format!("bad vertex in {s:?}"))?;
    let v: usize = v
        .trim()
        .parse()
        .map_err(|_| format!("bad vertex in {s:?}"))?;
    if u == v {
        return Err(format!("edge {s:?} is a loop"));
    }
    Ok(Edge::new(u, v))
}

fn parse_sign(c: char) -> Result<Sign, Failure> {
    match c {
        '+' => Ok(Sign::Positive),
        '-' => Ok(Sign::Negative),
        _ => Err(Failure::Usage(format!("bad sign {c:?}"))),
    }
}

enum Failure {
    /// Exit 1: a check failed or a claim was contradicted.
    Check,
    /// Exit 2: bad arguments or input files.
    Usage(String),
}

impl<E: std::error::Error> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Check) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn load(path: &Path) -> Result<SignedGraph, Failure> {
    read_sg_file(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn jobs(cli: &Cli) -> usize {
    cli.jobs
        .map(|j| j as usize)
        .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, usize::from))
}

fn run(cli: &Cli) -> Result<(), Failure> {
    match &cli.command {
        Command::Construct(args) => {
            let g = construct(args)?;
            let text = write_sg(&g);
            match &args.out {
                Some(path) => {
                    std::fs::write(path, text)?;
                    emit(
                        cli.format,
                        &json!({
                            "wrote": path.display().to_string(),
                            "n": g.order(),
                            "edges": g.size(),
                            "negative_edges": g.negative_edge_count(),
                        }),
                    );
                }
                None => print!("{text}"),
            }
            Ok(())
        }
        Command::Check { ell, input } => {
            let g = load(input)?;
            let cycle = find_negative_cycle_of_length(&g, *ell)?;
            emit(
                cli.format,
                &json!({
                    "ell": ell,
                    "free": cycle.is_none(),
                    "witness": cycle.as_ref().map(|c| c.canonical().vertices().to_vec()),
                }),
            );
            if cycle.is_some() {
                return Err(Failure::Check);
            }
            Ok(())
        }
        Command::Spectrum { input } => {
            let g = load(input)?;
            let spec = eigenvalues(&g);
            let poly = (g.order() <= CHAR_POLY_LIMIT)
                .then(|| char_poly(&g))
                .transpose()?;
            emit(
                cli.format,
                &json!({
                    "n": g.order(),
                    "eigenvalues": spec.eigenvalues.iter().map(|&x| significant(x)).collect::<Vec<_>>(),
                    "rho": significant(spec.rho),
                    "char_poly": poly.as_ref().map(|p| p.coeffs.iter().map(i128::to_string).collect::<Vec<_>>()),
                    "char_poly_text": poly.as_ref().map(ToString::to_string),
                }),
            );
            Ok(())
        }
        Command::Bounds { input } => {
            let g = load(input)?;
            let mut reports = Vec::new();
            let mut ok = true;
            let results = [
                ("hong", hong_bound(&g)),
                ("stanic", stanic_bound(&g)),
                ("wyq", wyq_bound(&g)),
                ("motzkin-straus", motzkin_straus_bound(&g.underlying())),
            ];
            for (name, r) in results {
                reports.push(match r {
                    Ok(b) => {
                        ok &= b.satisfied;
                        json!({
                            "name": name,
                            "value": b.value,
                            "quantity": b.quantity,
                            "slack": b.slack,
                            "satisfied": b.satisfied,
                        })
                    }
                    Err(e) => json!({ "name": name, "not_applicable": e.to_string() }),
                });
            }
            emit(cli.format, &json!({ "bounds": reports }));
            if !ok {
                return Err(Failure::Check);
            }
            Ok(())
        }
        Command::Frustration { input } => {
            let g = load(input)?;
            emit(
                cli.format,
                &json!({ "frustration_index": frustration_index(&g)? }),
            );
            Ok(())
        }
        Command::Verify(args) => {
            let claim = Claim::from_id(&args.claim).ok_or_else(|| {
                let ids: Vec<&str> = Claim::ALL.iter().map(|c| c.id()).collect();
                Failure::Usage(format!(
                    "unknown claim {:?}; expected one of {}",
                    args.claim,
                    ids.join(", ")
                ))
            })?;
            let graphs = match &args.graphs {
                Some(path) => Some(
                    read_graph6(path)
                        .map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?,
                ),
                None => None,
            };
            let params = ClaimParams {
                n: args.n,
                k: args.k,
                a: args.a,
                nmax: args.nmax,
                trials: args.trials,
                seed: Some(args.seed),
                budget: args.budget,
                restarts: args.restarts,
                from_construction: args.from_construction,
                graphs,
            };
            let verifier = verifier(cli, args.no_timestamp);
            let report = verifier.run(claim, &params)?;
            finish_report(cli.format, &report, args.out.as_deref())
        }
        Command::Search(args) => {
            let verifier = verifier(cli, args.no_timestamp);
            let report = verifier.falsify(&FalsifyParams {
                n: args.n,
                k: args.k,
                budget: args.budget,
                restarts: args.restarts,
                seed: args.seed,
                from_construction: args.from_construction,
                audit: !args.no_audit,
            });
            finish_report(cli.format, &report, args.out.as_deref())
        }
    }
}

fn verifier(cli: &Cli, no_timestamp: bool) -> Verifier {
    let v = Verifier::new(jobs(cli));
    if no_timestamp {
        v.without_timestamps()
    } else {
        v
    }
}

fn finish_report(
    format: Format,
    report: &TheoremReport,
    out: Option<&Path>,
) -> Result<(), Failure> {
    let text = report.to_json();
    if let Some(path) = out {
        std::fs::write(path, format!("{text}\n"))?;
    }
    match format {
        Format::Json => println!("{text}"),
        Format::Text => emit(Format::Text, &serde_json::to_value(report).unwrap()),
    }
    if report.status == Status::Fail {
        return Err(Failure::Check);
    }
    Ok(())
}

fn construct(args: &ConstructArgs) -> Result<SignedGraph, Failure> {
    let need = |v: Option<usize>, name: &str| {
        v.ok_or_else(|| Failure::Usage(format!("this family needs --{name}")))
    };
    let signs = |len: usize| -> Result<Vec<Sign>, Failure> {
        match &args.signs {
            None => Ok(vec![Sign::Positive; len]),
            Some(s) => {
                let v: Vec<Sign> = s.chars().map(parse_sign).collect::<Result<_, _>>()?;
                if v.len() != len {
                    return Err(Failure::Usage(format!(
                        "--signs needs {len} characters, got {}",
                        v.len()
                    )));
                }
                Ok(v)
            }
        }
    };
    Ok(match args.family {
        Family::C3k => build_c3minus_k(need(args.n, "n")?)?,
        Family::Gst => build_g_st(need(args.s, "s")?, need(args.t, "t")?)?,
        Family::Complete => complete_signed(need(args.n, "n")?, &args.negative)?,
        Family::Path => {
            let n = need(args.n, "n")?;
            build_path(n, &signs(n.saturating_sub(1))?)?
        }
        Family::Cycle => {
            let n = need(args.n, "n")?;
            build_cycle(n, &signs(n)?)?
        }
        Family::Hna => {
            let (n, a) = (need(args.n, "n")?, need(args.a, "a")?);
            let variant = match args.variant.unwrap_or(2) {
                1 => HnaVariant::AllNegative,
                2 => HnaVariant::AllPositive,
                _ => HnaVariant::Mixed(VertexSet::from_vertices(n, args.attach.iter().copied())?),
            };
            let hna_signs = HnaSigns {
                clique_negative: args.negative.clone(),
                endpoint_edge: args.endpoint_sign.map(parse_sign).transpose()?,
            };
            build_h_na(n, a, &variant, &hna_signs)?
        }
    })
}

/// Rounds to 12 significant digits.
fn significant(x: f64) -> f64 {
    format!("{x:.11e}").parse().unwrap()
}

/// Prints `value` as pretty JSON, or as `key: value` lines for text output.
fn emit(format: Format, value: &Value) {
    match format {
        Format::Json => println!("{}", serde_json::to_string_pretty(value).unwrap()),
        Format::Text => {
            let Value::Object(map) = value else {
                println!("{value}");
                return;
            };
            for (key, v) in map {
                match v {
                    Value::Null => {}
                    Value::String(s) if !s.contains('\n') => println!("{key}: {s}"),
                    Value::Array(items) if key == "witnesses" => {
                        println!("{key}: {}", items.len());
                        for w in items {
                            println!(
                                "  - {}",
                                w.get("label").and_then(Value::as_str).unwrap_or("")
                            );
                        }
                    }
                    Value::Array(items)
                        if items.iter().all(|i| !i.is_object() && !i.is_array()) =>
                    {
                        let parts: Vec<String> = items.iter().map(scalar).collect();
                        println!("{key}: {}", parts.join(" "));
                    }
                    _ => println!("{key}: {v}"),
                }
            }
        }
    }
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}
