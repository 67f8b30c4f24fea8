//! Command-line interface: span ranks, membership verdicts, cocharacter
//! tables, Kostka coefficients, witness-algebra evaluation, implication
//! graphs, and the full verification run. Exit code 0 means every check
//! passed (for `member`, that the target is a consequence).

use clap::{Args, Parser, Subcommand};
use pivar::exprio;
use pivar::freealg::{MultiDegree, Polynomial};
use pivar::models::{self, Algebra, Assignment};
use pivar::partitions::{kostka, Partition};
use pivar::scenarios::{self, CaseId};
use pivar::tideal::{self, DegreeCap, IdealPresentation};
use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

#[derive(Parser)]
#[command(
    name = "pivar",
    version,
    about = "Exact T-ideal computations for polynomial identities"
)]
struct Cli {
    /// Total-degree cap for consequence enumeration (also settable via
    /// PIVAR_DEGREE_CAP).
    #[arg(long, global = true)]
    degree_cap: Option<u32>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct IdealArgs {
    /// File with one identity per line ('#' comments).
    #[arg(long)]
    ideal: Option<PathBuf>,
    /// Inline identity; repeatable.
    #[arg(long = "expr")]
    exprs: Vec<String>,
}

impl IdealArgs {
    fn polynomials(&self) -> Result<Vec<Polynomial>, String> {
        let mut polys = Vec::new();
        if let Some(path) = &self.ideal {
            let text = std::fs::read_to_string(path)
                .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
            polys.extend(exprio::parse_ideal_file(&text).map_err(|e| e.to_string())?);
        }
        for source in &self.exprs {
            polys.push(exprio::parse(source).map_err(|e| e.to_string())?);
        }
        if polys.is_empty() {
            return Err("no generators: pass --ideal FILE or --expr STR".into());
        }
        Ok(polys)
    }

    fn presentation(&self, cap: &DegreeCap) -> Result<IdealPresentation, String> {
        IdealPresentation::new(&self.polynomials()?, cap).map_err(|e| e.to_string())
    }
}

#[derive(Subcommand)]
enum Command {
    /// Cocharacter multiplicities of the multilinear part modulo the ideal.
    Cocharacter {
        #[command(flatten)]
        ideal: IdealArgs,
        #[arg(long)]
        n: u32,
        #[arg(long)]
        max_parts: Option<usize>,
        #[arg(long)]
        json: bool,
    },
    /// Row-reduced consequence span in one multidegree.
    Span {
        #[command(flatten)]
        ideal: IdealArgs,
        /// Comma-separated degrees, e.g. 2,1,1,1.
        #[arg(long)]
        multidegree: String,
        #[arg(long)]
        json: bool,
    },
    /// Does the target lie in the T-ideal? Exit 0 iff it does.
    Member {
        #[command(flatten)]
        ideal: IdealArgs,
        #[arg(long)]
        target: String,
    },
    /// Kostka coefficient for a shape and content.
    Kostka {
        #[arg(long)]
        shape: String,
        #[arg(long)]
        content: String,
    },
    /// Build, certify and emit one case's implication graph as DOT.
    Lattice {
        #[arg(long)]
        case: String,
        #[arg(long)]
        n_max: Option<u32>,
        /// Output path for the DOT text.
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Run the verification suites (all cases, or one with --case).
    VerifyPaper {
        #[arg(long)]
        case: Option<String>,
        #[arg(long)]
        n_max: Option<u32>,
        /// Also sweep the parameter grid of the parameterized case.
        #[arg(long)]
        sweep: bool,
        /// Write the full claims manifest as JSON to this path.
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Evaluate an expression in a witness algebra.
    Eval {
        /// A1, B1, B2, kx:N, or a JSON structure-constant file.
        #[arg(long)]
        algebra: String,
        #[arg(long)]
        expr: String,
        /// Assignment like "x=a,y=b" over the algebra's basis labels.
        #[arg(long)]
        assign: String,
    },
}

fn parse_csv(text: &str) -> Result<Vec<u32>, String> {
    text.split(',')
        .map(|p| {
            p.trim()
                .parse::<u32>()
                .map_err(|e| format!("bad entry '{p}': {e}"))
        })
        .collect()
}

fn load_algebra(name: &str) -> Result<Algebra, String> {
    if name.ends_with(".json") || name.contains('/') {
        let text = std::fs::read_to_string(name).map_err(|e| format!("cannot read {name}: {e}"))?;
        Algebra::from_json(name, &text).map_err(|e| e.to_string())
    } else {
        Algebra::builtin(name).map_err(|e| e.to_string())
    }
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    let mut cap = DegreeCap::default();
    if let Ok(text) = std::env::var("PIVAR_DEGREE_CAP") {
        cap.total_degree = text
            .parse()
            .map_err(|e| format!("bad PIVAR_DEGREE_CAP: {e}"))?;
    }
    if let Some(limit) = cli.degree_cap {
        cap.total_degree = limit;
    }

    match cli.command {
        Command::Cocharacter {
            ideal,
            n,
            max_parts,
            json,
        } => {
            let presentation = ideal.presentation(&cap)?;
            let table =
                tideal::cocharacter(&presentation, n, max_parts.unwrap_or(n as usize), &cap)
                    .map_err(|e| e.to_string())?;
            if json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&table.to_json()).unwrap()
                );
            } else {
                for (shape, multiplicity) in table.entries() {
                    println!("{shape}: {multiplicity}");
                }
                println!("total dimension: {}", table.total_dimension());
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Span {
            ideal,
            multidegree,
            json,
        } => {
            let presentation = ideal.presentation(&cap)?;
            let degrees = parse_csv(&multidegree)?;
            let k = MultiDegree::new(degrees);
            let span = tideal::consequence_basis(&presentation, k.len(), &k, &cap)
                .map_err(|e| e.to_string())?;
            if json {
                println!("{}", serde_json::to_string_pretty(&span.to_json()).unwrap());
            } else {
                println!(
                    "multidegree {k}: ambient dim {}, rank {}",
                    span.ambient_dim(),
                    span.rank()
                );
                for row in span.row_polynomials() {
                    println!("  {}", exprio::print(&row));
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Member { ideal, target } => {
            let presentation = ideal.presentation(&cap)?;
            let target = exprio::parse(&target).map_err(|e| e.to_string())?;
            let verdict =
                tideal::contains(&presentation, &target, &cap).map_err(|e| e.to_string())?;
            println!("{verdict}");
            Ok(if verdict {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Command::Kostka { shape, content } => {
            let shape = Partition::new(parse_csv(&shape)?).map_err(|e| e.to_string())?;
            let content = MultiDegree::new(parse_csv(&content)?);
            let value = kostka(&shape, &content).map_err(|e| e.to_string())?;
            println!("{value}");
            Ok(ExitCode::SUCCESS)
        }
        Command::Lattice { case, n_max, dot } => {
            let case = CaseId::from_str(&case).map_err(|e| e.to_string())?;
            let n_max = n_max.unwrap_or(5);
            let (graph, claims) =
                scenarios::implication_graph(case, n_max, &cap).map_err(|e| e.to_string())?;
            let report = scenarios::Report {
                scenario: format!("graph-{case}"),
                claims,
                elapsed: std::time::Duration::ZERO,
            };
            let text = graph.to_dot();
            match dot {
                Some(path) => std::fs::write(&path, &text)
                    .map_err(|e| format!("cannot write {}: {e}", path.display()))?,
                None => print!("{text}"),
            }
            eprint!("{}", report.render_text());
            Ok(if report.passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Command::VerifyPaper {
            case,
            n_max,
            sweep,
            json,
        } => {
            let filter = match case {
                Some(text) => Some(CaseId::from_str(&text).map_err(|e| e.to_string())?),
                None => None,
            };
            let report =
                scenarios::verify_paper(filter, n_max, &cap, sweep).map_err(|e| e.to_string())?;
            print!("{}", report.render_text());
            if let Some(path) = json {
                std::fs::write(
                    &path,
                    serde_json::to_string_pretty(&report.to_json()).unwrap(),
                )
                .map_err(|e| format!("cannot write {}: {e}", path.display()))?;
            }
            Ok(if report.passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Command::Eval {
            algebra,
            expr,
            assign,
        } => {
            let algebra = load_algebra(&algebra)?;
            let f = exprio::parse(&expr).map_err(|e| e.to_string())?;
            let assignment = Assignment::parse(&algebra, &assign).map_err(|e| e.to_string())?;
            let value = models::evaluate(&f, &algebra, &assignment).map_err(|e| e.to_string())?;
            println!("{}", algebra.format_element(&value));
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}
