//! `fillings`: command-line access to the fillings-core library.
//!
//! Exit status: 0 success, 1 invalid input or domain error, 2 budget
//! exceeded, 3 a `verify` suite failed.

mod patterns;
mod verify;

use std::fmt::Write as _;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use serde_json::{json, Value};

use fillings::combinatorics::motzkin_numbers;
use fillings::enumeration::{alternating_count, count_fillings, distribution, Budget, Stat};
use fillings::filling::standard_two_column;
use fillings::io::{dist_to_json, format_filling, parse_filling, series_to_json};
use fillings::paths::{gamma_bij, gamma_bij_inv, theta, theta_inv, EPath, Motzkin2Path, RowArray};
use fillings::poset::{full_count_set, is_degenerate, ClosedForm};
use fillings::series::{build_a, build_d, build_even, build_n, build_odd, FullSeq};
use fillings::{Error, Pattern, PatternSet, Result};

use crate::patterns::{compact, resolve, resolve_set};

#[derive(Parser)]
#[command(
    name = "fillings",
    version,
    about = "Consecutive patterns in column-increasing fillings"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Number of fillings of the k x n rectangle.
    Count {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        n: usize,
    },
    /// Distribution of a match statistic, as a JSON array of decimal strings.
    Dist {
        /// Built-in pattern name or pattern file; repeat for a set.
        #[arg(long = "pattern", required = true, num_args = 1..)]
        patterns: Vec<String>,
        /// Defaults to the pattern height.
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "mch")]
        stat: StatArg,
    },
    /// Truncated generating function as JSON.
    Gf {
        #[arg(long, value_enum)]
        which: Which,
        #[arg(long = "pattern", required = true, num_args = 1..)]
        patterns: Vec<String>,
        #[arg(long, default_value_t = 8)]
        order: usize,
    },
    /// Number of fillings with a match at every start.
    Full {
        #[arg(long = "pattern", required = true, num_args = 1..)]
        patterns: Vec<String>,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "poset")]
        method: Method,
    },
    /// Alternating counts for lengths 1..=nmax.
    Alt {
        #[arg(long = "pattern", required = true, num_args = 1..)]
        patterns: Vec<String>,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        nmax: usize,
    },
    /// Standard tableaux with k rows: degeneracy and Motzkin word of each.
    Classify {
        #[arg(long)]
        k: usize,
    },
    /// Apply a path bijection or its inverse.
    Bijection {
        #[arg(long, value_enum)]
        which: Bij,
        #[arg(long, value_enum, default_value = "fwd")]
        dir: Dir,
        /// A path word, a built-in pattern name, inline array text, or a file.
        #[arg(long)]
        input: String,
    },
    /// Check a family of identities against exhaustive enumeration.
    Verify {
        #[arg(long, value_enum)]
        suite: verify::Suite,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        nmax: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum StatArg {
    Mch,
    Nlap,
    Even2,
}

#[derive(Clone, Copy, ValueEnum)]
enum Which {
    #[value(name = "D")]
    D,
    #[value(name = "A")]
    A,
    #[value(name = "N")]
    N,
    Even,
    Odd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Poset,
    Brute,
    Closed,
}

#[derive(Clone, Copy, ValueEnum)]
enum Bij {
    Theta,
    Gamma,
}

#[derive(Clone, Copy, ValueEnum)]
enum Dir {
    Fwd,
    Inv,
}

enum Failure {
    Domain(Error),
    Budget(Error),
    Verify,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if e.is_budget() {
            Failure::Budget(e)
        } else {
            Failure::Domain(e)
        }
    }
}

fn budget_from_env() -> Result<Budget> {
    let mut b = Budget::default();
    if let Ok(v) = std::env::var("FILLINGS_BUDGET") {
        b.max_fillings = v
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("FILLINGS_BUDGET={v:?} is not an integer")))?;
    }
    if let Ok(v) = std::env::var("FILLINGS_STATE_BUDGET") {
        b.max_states = v
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("FILLINGS_STATE_BUDGET={v:?} is not an integer")))?;
    }
    Ok(b)
}

fn height(set: &PatternSet, k: Option<usize>) -> Result<usize> {
    match k {
        Some(k) if k != set.rows() => Err(Error::DimensionMismatch(format!(
            "--k {k} but the patterns have {} rows",
            set.rows()
        ))),
        _ => Ok(set.rows()),
    }
}

fn full_values(set: &PatternSet, len: usize, budget: &Budget) -> Result<FullSeq> {
    let values = (1..=len)
        .map(|n| full_count_set(set, n, budget))
        .collect::<Result<Vec<_>>>()?;
    Ok(FullSeq::new(values))
}

fn single(set: &PatternSet) -> Option<&Pattern> {
    (set.len() == 1).then(|| set.iter().next().expect("nonempty"))
}

fn closed_form(set: &PatternSet, n: usize) -> Result<BigUint> {
    let k = set.rows();
    let n64 = n as u64;
    if set.cols() == 2 && *set == PatternSet::standard(k) {
        return Ok(ClosedForm::StHook {
            k: k as u64,
            n: n64,
        }
        .value());
    }
    let p = single(set).ok_or_else(|| Error::Unsupported("no closed form for this set".into()))?;
    let cols: Vec<&[u32]> = p.as_filling().columns().collect();
    let form = match cols.as_slice() {
        [[1, 3], [2, 4]] => ClosedForm::CatalanShifted { n: n64 },
        [[1, 3, 4], [2, 5, 6]] | [[1, 2, 5], [3, 4, 6]] => {
            ClosedForm::TernaryCatalanShifted { n: n64 }
        }
        _ if p.cols() == 2 && p.is_standard() && is_degenerate(p)? => {
            return Ok(BigUint::from(1u32))
        }
        _ => {
            return Err(Error::Unsupported(format!(
                "no closed form known for {}",
                compact(p)
            )))
        }
    };
    Ok(form.value())
}

fn parse_row_array(text: &str) -> Result<RowArray> {
    let rows: Vec<Vec<u32>> = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .skip(1)
        .map(|l| {
            l.split_whitespace()
                .map(|t| {
                    t.parse()
                        .map_err(|_| Error::Parse(format!("bad entry {t:?}")))
                })
                .collect()
        })
        .collect::<Result<_>>()?;
    match rows.as_slice() {
        [top, bottom] => Ok(RowArray {
            bottom: bottom.clone(),
            top: top.clone(),
        }),
        _ => Err(Error::Parse("expected a header and two rows".into())),
    }
}

/// A path word, or the contents of a file when `input` names one.
fn read_input(input: &str) -> Result<String> {
    let path = std::path::Path::new(input);
    if path.is_file() {
        return std::fs::read_to_string(path)
            .map_err(|e| Error::Parse(format!("reading {input}: {e}")));
    }
    Ok(input.replace("\\n", "\n"))
}

fn row_array_json(arr: &RowArray) -> Value {
    json!({ "bottom": arr.bottom, "top": arr.top })
}

fn run(cmd: Command) -> std::result::Result<String, Failure> {
    let budget = budget_from_env()?;
    let out = match cmd {
        Command::Count { k, n } => format!("{}\n", count_fillings(k, n)),
        Command::Dist {
            patterns,
            k,
            n,
            stat,
        } => {
            let set = resolve_set(&patterns)?;
            let k = height(&set, k)?;
            let stat = match stat {
                StatArg::Mch => Stat::Mch,
                StatArg::Nlap => Stat::Nlap,
                StatArg::Even2 => Stat::Even2,
            };
            format!(
                "{}\n",
                dist_to_json(&distribution(k, n, &set, stat, &budget)?)
            )
        }
        Command::Gf {
            which,
            patterns,
            order,
        } => {
            let set = resolve_set(&patterns)?;
            let k = set.rows();
            let full = full_values(&set, order, &budget)?;
            let series = match which {
                Which::D => build_d(k, &full, order)?,
                Which::A => build_a(k, &full, order)?,
                Which::N => build_n(k, &build_a(k, &full, order)?)?,
                Which::Even => build_even(k, &full, order)?,
                Which::Odd => build_odd(k, &full, order)?,
            };
            format!("{}\n", series_to_json(&series))
        }
        Command::Full {
            patterns,
            n,
            method,
        } => {
            let set = resolve_set(&patterns)?;
            let value = match method {
                Method::Poset => full_count_set(&set, n, &budget)?,
                Method::Brute => fillings::enumeration::full_bruteforce(&set, n, &budget)?,
                Method::Closed => closed_form(&set, n)?,
            };
            format!("{value}\n")
        }
        Command::Alt { patterns, k, nmax } => {
            let set = resolve_set(&patterns)?;
            let k = height(&set, k)?;
            let mut out = String::new();
            for n in 1..=nmax {
                let _ = writeln!(out, "{n} {}", alternating_count(k, n, &set, &budget)?);
            }
            out
        }
        Command::Classify { k } => {
            if k == 0 {
                return Err(Error::OutOfRange("k must be positive".into()).into());
            }
            let mut out = String::new();
            let mut degenerate = 0usize;
            for p in standard_two_column(k) {
                let deg = is_degenerate(&p)?;
                degenerate += usize::from(deg);
                let word = gamma_bij(&p)?.to_string();
                let word = if word.is_empty() {
                    "-".to_string()
                } else {
                    word
                };
                let tag = if deg { "degenerate" } else { "nondegenerate" };
                let _ = writeln!(out, "{} {word} {tag}", compact(&p));
            }
            let motzkin = &motzkin_numbers(k)[k - 1];
            let _ = writeln!(
                out,
                "degenerate {degenerate} of {}; Motzkin M_{} = {motzkin}",
                standard_two_column(k).len(),
                k - 1
            );
            out
        }
        Command::Bijection { which, dir, input } => {
            let text = read_input(&input)?;
            let value = match (which, dir) {
                (Bij::Theta, Dir::Fwd) => {
                    let path: EPath = text.parse()?;
                    let arr = theta(&path);
                    let mut v = row_array_json(&arr);
                    v["dyck"] = json!(path.is_dyck());
                    v
                }
                (Bij::Theta, Dir::Inv) => {
                    let arr = parse_row_array(&text)?;
                    json!({ "path": theta_inv(&arr)?.to_string() })
                }
                (Bij::Gamma, Dir::Fwd) => {
                    let p = match resolve(text.trim()) {
                        Ok(ps) if ps.len() == 1 => ps.into_iter().next().expect("one"),
                        _ => Pattern::new(parse_filling(&text)?)?,
                    };
                    json!({ "path": gamma_bij(&p)?.to_string() })
                }
                (Bij::Gamma, Dir::Inv) => {
                    let word = text.trim();
                    let path: Motzkin2Path = if word == "-" {
                        "".parse()?
                    } else {
                        word.parse()?
                    };
                    let p = gamma_bij_inv(&path)?;
                    json!({ "pattern": format_filling(p.as_filling()) })
                }
            };
            format!("{value}\n")
        }
        Command::Verify { suite, k, nmax } => match verify::run(suite, k, nmax, &budget)? {
            verify::Outcome::Pass(checks) => format!("PASS ({checks} checks)\n"),
            verify::Outcome::Fail(msg) => {
                println!("FAIL: {msg}");
                return Err(Failure::Verify);
            }
        },
    };
    Ok(out)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match run(cli.command) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::Domain(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
        Err(Failure::Budget(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
        Err(Failure::Verify) => ExitCode::from(3),
    }
}
