//! `dtour`: batch front end for the `dtournament` library.
//!
//! Exit codes: 0 success or property holds, 1 property fails (witness on
//! stdout), 2 usage, input or I/O error, 3 instance too large.

use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use dtournament::census::{self, CensusOptions, Predicate};
use dtournament::collapse::{self, Strategy};
use dtournament::cycles;
use dtournament::extraction;
use dtournament::fixtures;
use dtournament::geometry::{self, ChamberOrCycle, ChamberPoint, PointConfiguration};
use dtournament::{Error, Tournament};

#[derive(Parser)]
#[command(name = "dtour", version, about = "High-dimensional tournament toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide a property of a tournament read from FILE (or stdin).
    Check {
        #[arg(long, value_enum)]
        property: Property,
        #[command(flatten)]
        input: Input,
        /// Face cap for the exhaustive searches.
        #[arg(long)]
        cap: Option<usize>,
    },
    /// Greedy acyclic subtournament; prints the trace as JSON lines.
    Extract {
        #[command(flatten)]
        input: Input,
    },
    /// Exhaustive maximum acyclic vertex set.
    MaxAcyclic {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value_t = extraction::DEFAULT_MAX_ACYCLIC_CAP)]
        cap: usize,
    },
    /// Count classes over all complete tournaments on [1, n].
    Census {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: usize,
        /// Comma-separated subset of: acyclic, collapsible, zero-one-acyclic,
        /// k2cycle-free, realizable.
        #[arg(long, value_delimiter = ',')]
        predicates: Option<Vec<String>>,
        #[arg(long)]
        threads: Option<usize>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[arg(long, default_value_t = census::DEFAULT_BUDGET)]
        budget: u64,
        /// Random configurations behind the realizable count.
        #[arg(long, default_value_t = census::DEFAULT_REALIZABLE_SAMPLES)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// List fixtures with their property tables, or emit one.
    Gallery {
        #[arg(long)]
        name: Option<String>,
    },
    /// Uniform random complete tournament.
    Random {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: usize,
        #[arg(long)]
        seed: u64,
    },
    /// Orientation induced by a point configuration.
    Realize {
        #[arg(long)]
        points: PathBuf,
    },
    /// Convert between tournaments and chamber points.
    Chamber(ChamberArgs),
    /// Color (d+2)-subsets of a random tournament by cyclicity.
    Ramsey {
        /// N D SEED
        #[arg(long, num_args = 3, value_names = ["N", "D", "SEED"])]
        demo: Vec<u64>,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct ChamberArgs {
    /// Tournament FILE to a chamber point (or its cycle).
    #[arg(long, value_name = "FILE")]
    to_point: Option<PathBuf>,
    /// Chamber point FILE to a tournament.
    #[arg(long, value_name = "FILE")]
    from_point: Option<PathBuf>,
}

#[derive(Args)]
struct Input {
    /// Tournament JSON; `-` or absent reads stdin.
    file: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Property {
    Acyclic,
    Collapsible,
    ZeroOneAcyclic,
    K2cycleFree,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

enum Failure {
    Usage(String),
    TooLarge(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::TooLarge { .. } => Failure::TooLarge(e.to_string()),
            e => Failure::Usage(e.to_string()),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

/// Stdout text and whether the checked property holds.
struct Output {
    text: String,
    holds: bool,
}

impl Output {
    fn ok(v: Value) -> Self {
        Output::verdict(v, true)
    }

    fn verdict(v: Value, holds: bool) -> Self {
        let mut text = serde_json::to_string_pretty(&v).expect("value serializes");
        text.push('\n');
        Output { text, holds }
    }
}

fn read_text(path: Option<&PathBuf>) -> Result<String, Failure> {
    match path {
        Some(p) if p.as_os_str() != "-" => {
            fs::read_to_string(p).map_err(|e| Failure::Usage(format!("{}: {e}", p.display())))
        }
        _ => {
            let mut s = String::new();
            io::stdin().read_to_string(&mut s)?;
            Ok(s)
        }
    }
}

/// Accepts a bare tournament document or any object with a `tournament`
/// field, such as a single gallery entry.
fn read_tournament(path: Option<&PathBuf>) -> Result<Tournament, Failure> {
    let text = read_text(path)?;
    let value: Value = serde_json::from_str(&text).map_err(|e| Failure::Usage(format!("parse error: {e}")))?;
    let inner = match value.get("tournament") {
        Some(t) => t.to_string(),
        None => text,
    };
    Ok(Tournament::from_json(&inner)?)
}

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("value serializes")
}

fn check(t: &Tournament, property: Property, cap: Option<usize>) -> Result<Output, Failure> {
    Ok(match property {
        Property::Acyclic => {
            let verdict = cycles::is_acyclic(t);
            let cert: Value = serde_json::from_str(&verdict.to_json()).expect("certificate json");
            let holds = verdict.is_acyclic();
            Output::verdict(
                json!({ "property": "acyclic", "holds": holds, "certificate": cert }),
                holds,
            )
        }
        Property::Collapsible => {
            let cap = cap.unwrap_or(collapse::DEFAULT_COLLAPSE_CAP);
            match collapse::is_collapsible_exact(t, cap)? {
                Some(w) => Output::ok(json!({ "property": "collapsible", "holds": true, "witness": to_value(&w) })),
                None => {
                    let g = collapse::greedy_collapse(t, Strategy::Lexicographic);
                    Output::verdict(
                        json!({
                            "property": "collapsible",
                            "holds": false,
                            "residue": to_value(&g.residue),
                        }),
                        false,
                    )
                }
            }
        }
        Property::ZeroOneAcyclic => {
            let cap = cap.unwrap_or(cycles::DEFAULT_ZERO_ONE_CAP);
            match cycles::find_zero_one_cycle(t, cap)? {
                None => Output::ok(json!({ "property": "zero-one-acyclic", "holds": true })),
                Some(z) => Output::verdict(
                    json!({ "property": "zero-one-acyclic", "holds": false, "witness": to_value(&z) }),
                    false,
                ),
            }
        }
        Property::K2cycleFree => {
            if !t.is_complete() {
                return Err(Error::Incomplete.into());
            }
            let k = t.d() + 2;
            let mut found = Vec::new();
            if t.n() >= k {
                for u in dtournament::face::subsets(t.n(), k) {
                    if cycles::is_d_plus_2_cycle(t, &u)? {
                        found.push(u);
                    }
                }
            }
            let holds = found.is_empty();
            Output::verdict(
                json!({ "property": "k2cycle-free", "holds": holds, "cycles": found }),
                holds,
            )
        }
    })
}

fn run(cli: Cli) -> Result<Output, Failure> {
    match cli.command {
        Command::Check { property, input, cap } => {
            let t = read_tournament(input.file.as_ref())?;
            check(&t, property, cap)
        }
        Command::Extract { input } => {
            let t = read_tournament(input.file.as_ref())?;
            let (_, trace) = extraction::extract_acyclic_sub(&t)?;
            Ok(Output {
                text: trace.to_json_lines(),
                holds: true,
            })
        }
        Command::MaxAcyclic { input, cap } => {
            let t = read_tournament(input.file.as_ref())?;
            let k = extraction::max_acyclic_subtournament(&t, cap)?;
            Ok(Output::ok(json!({ "vertices": k, "size": k.len() })))
        }
        Command::Census {
            n,
            d,
            predicates,
            threads,
            format,
            budget,
            samples,
            seed,
        } => {
            let predicates = match predicates {
                None => Predicate::ALL.to_vec(),
                Some(names) => names
                    .iter()
                    .map(|s| s.trim().parse::<Predicate>())
                    .collect::<Result<Vec<_>, _>>()?,
            };
            let opts = CensusOptions {
                predicates,
                threads,
                budget,
                realizable_samples: samples,
                seed,
                degree_sequences: true,
            };
            let report = census::enumerate(n, d, &opts)?;
            Ok(match format {
                Format::Json => Output::ok(to_value(&report)),
                Format::Csv => Output {
                    text: report.to_csv(),
                    holds: true,
                },
            })
        }
        Command::Gallery { name } => {
            let entry = |f: &fixtures::Fixture| -> Result<(Value, bool), Failure> {
                let outcomes = f.evaluate()?;
                let pass = outcomes.iter().all(|o| o.pass);
                Ok((
                    json!({
                        "name": f.name,
                        "summary": f.summary,
                        "tournament": to_value(&f.tournament),
                        "properties": to_value(&outcomes),
                    }),
                    pass,
                ))
            };
            match name {
                Some(n) => {
                    let (v, pass) = entry(&fixtures::fixture(&n)?)?;
                    Ok(Output::verdict(v, pass))
                }
                None => {
                    let mut all = Vec::new();
                    let mut pass = true;
                    for f in fixtures::gallery()? {
                        let (v, p) = entry(&f)?;
                        all.push(v);
                        pass &= p;
                    }
                    Ok(Output::verdict(Value::Array(all), pass))
                }
            }
        }
        Command::Random { n, d, seed } => Ok(Output::ok(to_value(&Tournament::random(n, d, seed)?))),
        Command::Realize { points } => {
            let cfg = PointConfiguration::from_json(&read_text(Some(&points))?)?;
            Ok(Output::ok(to_value(&geometry::orient_from_points(&cfg)?)))
        }
        Command::Chamber(args) => match (args.to_point, args.from_point) {
            (Some(path), None) => {
                let t = read_tournament(Some(&path))?;
                match geometry::tournament_to_chamber_point(&t)? {
                    ChamberOrCycle::Chamber(x) => Ok(Output::ok(
                        serde_json::from_str(&x.to_json()).expect("chamber json"),
                    )),
                    ChamberOrCycle::Cycle(c) => Ok(Output::verdict(to_value(&c), false)),
                }
            }
            (None, Some(path)) => {
                let x = ChamberPoint::from_json(&read_text(Some(&path))?)?;
                Ok(Output::ok(to_value(&geometry::chamber_to_tournament(&x)?)))
            }
            _ => Err(Failure::Usage("give exactly one of --to-point, --from-point".into())),
        },
        Command::Ramsey { demo } => {
            let [n, d, seed] = demo[..] else {
                return Err(Failure::Usage("--demo takes N D SEED".into()));
            };
            let r = extraction::ramsey_demo(n as usize, d as usize, seed)?;
            Ok(Output::ok(to_value(&r)))
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(out) => {
            let mut stdout = io::stdout().lock();
            if stdout.write_all(out.text.as_bytes()).is_err() {
                return ExitCode::from(2);
            }
            ExitCode::from(if out.holds { 0 } else { 1 })
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("{}", json!({ "error": msg }));
            ExitCode::from(2)
        }
        Err(Failure::TooLarge(msg)) => {
            eprintln!("{}", json!({ "error": msg }));
            ExitCode::from(3)
        }
    }
}
