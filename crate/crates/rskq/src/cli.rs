//! Command-line front end.
//!
//! Subcommands: `rsk`, `inv-rsk`, `width`, `tableaux`, `invariants`, `d`,
//! `gamma`, `char`, `shuffle`, `verify`. Multisegments use the text
//! grammar `2*[1,1]+[2,3]`; `-` reads the input argument from stdin.
//! `--json` switches every command to a canonical JSON schema. Exit codes:
//! 0 success, 2 parse error, 3 domain error, 4 verification failure.

use std::fmt::Write as _;
use std::io::Read;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::characters::{
    gamma_char, kr_char, ladder_char, segment_char, shuffle, sigma_char, GradedCharacter,
};
use crate::error::Error;
use crate::invariants::{d_of_m, pair_report};
use crate::multisegments::{LadderMultisegment, Multisegment};
use crate::rsk::{compose_ladders, gamma_descriptor, rsk_transform, tableaux};
use crate::verify::{run_all, GridSpec};

#[derive(Parser)]
#[command(
    name = "rskq",
    about = "Transforms, graded invariants and shuffle characters of multisegments",
    disable_help_subcommand = true
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Peel a multisegment into its full ladder sequence
    Rsk {
        /// Multisegment, e.g. "[1,3]+[2,2]" (or "-" for stdin)
        input: String,
        #[arg(long)]
        json: bool,
    },
    /// Rebuild the multisegment of a ladder sequence
    #[command(name = "inv-rsk")]
    InvRsk {
        /// Ladder sequence as printed by `rsk`, e.g. "([2,3]) ; ([1,2])"
        input: String,
        #[arg(long)]
        json: bool,
    },
    /// Minimal number of ladders summing to a multisegment
    Width {
        input: String,
        #[arg(long)]
        json: bool,
    },
    /// The pair of inverted semistandard tableaux of a multisegment
    Tableaux {
        input: String,
        #[arg(long)]
        json: bool,
    },
    /// Counting invariants of a permissible (ladder, multisegment) pair
    Invariants {
        /// The ladder and the multisegment
        #[arg(long, num_args = 2, value_names = ["LADDER", "MSEG"], required = true)]
        pair: Vec<String>,
        #[arg(long)]
        json: bool,
    },
    /// The normalization shift of the transform product
    D {
        input: String,
        #[arg(long)]
        json: bool,
    },
    /// The ladder factors and shift of the normalized transform product
    Gamma {
        input: String,
        #[arg(long)]
        json: bool,
    },
    /// A graded character of the multisegment
    Char {
        input: String,
        /// Which character to compute
        #[arg(long, value_enum, default_value_t = CharKind::Kr)]
        kind: CharKind,
        #[arg(long)]
        json: bool,
    },
    /// Shuffle the proper standard characters of two multisegments
    Shuffle {
        left: String,
        right: String,
        #[arg(long)]
        json: bool,
    },
    /// Run the exhaustive verification battery
    Verify {
        /// Grid bounds, e.g. "window=0..3,maxsegs=4,maxmult=2"
        #[arg(long)]
        grid: Option<String>,
        /// Height cap for the character sweeps
        #[arg(long)]
        cap: Option<u32>,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum CharKind {
    /// Proper standard product character
    Kr,
    /// Normalized transform product character
    Gamma,
    /// Indicator product character
    Sigma,
    /// Homogeneous character (input must be a ladder)
    Ladder,
    /// Segment character (input must be a single segment)
    Segment,
}

#[derive(Debug)]
struct Failure {
    code: i32,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        let code = match e {
            Error::Parse(_) => 2,
            _ => 3,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

/// Parse arguments, execute, print. Returns the process exit code.
pub fn run(args: Vec<String>) -> i32 {
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match execute(cli.command) {
        Ok((output, code)) => {
            println!("{output}");
            code
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            f.code
        }
    }
}

fn read_input(raw: &str) -> Result<String, Failure> {
    if raw == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| Failure {
                code: 2,
                message: format!("cannot read stdin: {e}"),
            })?;
        Ok(buf.trim().to_string())
    } else {
        Ok(raw.to_string())
    }
}

fn parse_mseg(raw: &str) -> Result<Multisegment, Failure> {
    Ok(Multisegment::parse(&read_input(raw)?)?)
}

fn parse_nonzero(raw: &str) -> Result<Multisegment, Failure> {
    let m = parse_mseg(raw)?;
    if m.is_zero() {
        return Err(Failure::from(Error::ZeroMultisegment));
    }
    Ok(m)
}

fn parse_ladder(raw: &str) -> Result<LadderMultisegment, Failure> {
    let m = parse_nonzero(raw)?;
    m.as_ladder().ok_or(Failure {
        code: 3,
        message: format!("`{m}` is not a ladder multisegment"),
    })
}

/// Parse a `rsk`-style ladder sequence: multisegments wrapped in
/// parentheses, separated by `;`.
fn parse_ladder_sequence(raw: &str) -> Result<Vec<LadderMultisegment>, Failure> {
    let input = read_input(raw)?;
    let mut out = Vec::new();
    for piece in input.split(';') {
        let piece = piece.trim();
        let piece = piece
            .strip_prefix('(')
            .and_then(|p| p.strip_suffix(')'))
            .unwrap_or(piece);
        out.push(parse_ladder(piece)?);
    }
    Ok(out)
}

fn ladder_line(ladders: &[LadderMultisegment]) -> String {
    ladders
        .iter()
        .map(|l| format!("({l})"))
        .collect::<Vec<_>>()
        .join(" ; ")
}

fn shape_string(shape: &[usize]) -> String {
    let inner = shape
        .iter()
        .map(usize::to_string)
        .collect::<Vec<_>>()
        .join(",");
    format!("({inner})")
}

fn json_string<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("serialization is infallible")
}

fn character_text(ch: &GradedCharacter) -> String {
    let mut out = String::new();
    for (w, p) in ch.terms() {
        let _ = writeln!(out, "{p} \u{b7} {w}");
    }
    out.trim_end().to_string()
}

fn execute(command: Command) -> Result<(String, i32), Failure> {
    match command {
        Command::Rsk { input, json } => {
            let m = parse_nonzero(&input)?;
            let ladders = rsk_transform(&m)?;
            let shape: Vec<usize> = ladders.iter().map(LadderMultisegment::len).collect();
            if json {
                #[derive(Serialize)]
                struct Out {
                    ladders: Vec<String>,
                    shape: Vec<usize>,
                }
                let out = Out {
                    ladders: ladders.iter().map(|l| l.to_string()).collect(),
                    shape,
                };
                Ok((json_string(&out), 0))
            } else {
                Ok((
                    format!("{}\nshape={}", ladder_line(&ladders), shape_string(&shape)),
                    0,
                ))
            }
        }
        Command::InvRsk { input, json } => {
            let ladders = parse_ladder_sequence(&input)?;
            let m = compose_ladders(&ladders)?;
            if json {
                #[derive(Serialize)]
                struct Out {
                    multisegment: String,
                }
                Ok((
                    json_string(&Out {
                        multisegment: m.canonical_string(),
                    }),
                    0,
                ))
            } else {
                Ok((m.canonical_string(), 0))
            }
        }
        Command::Width { input, json } => {
            let m = parse_nonzero(&input)?;
            let width = m.width()?;
            if json {
                #[derive(Serialize)]
                struct Out {
                    width: u32,
                }
                Ok((json_string(&Out { width }), 0))
            } else {
                Ok((width.to_string(), 0))
            }
        }
        Command::Tableaux { input, json } => {
            let m = parse_nonzero(&input)?;
            let t = tableaux(&m)?;
            if json {
                Ok((json_string(&t), 0))
            } else {
                let mut out = format!("shape={}", shape_string(&t.shape));
                for (name, rows) in [("P", &t.p), ("Q", &t.q)] {
                    let _ = write!(out, "\n{name}:");
                    for row in rows {
                        let line = row.iter().map(i32::to_string).collect::<Vec<_>>().join(" ");
                        let _ = write!(out, "\n{line}");
                    }
                }
                Ok((out, 0))
            }
        }
        Command::Invariants { pair, json } => {
            let ladder = parse_ladder(&pair[0])?;
            let m = parse_mseg(&pair[1])?;
            let report = pair_report(&ladder, &m)?;
            if json {
                Ok((json_string(&report), 0))
            } else {
                Ok((
                    format!(
                        "C={} D={} kappa={} lambda_tilde={} d={} normal={}",
                        report.c,
                        report.d_count,
                        report.kappa,
                        report.lambda_tilde,
                        report.d,
                        report.normal
                    ),
                    0,
                ))
            }
        }
        Command::D { input, json } => {
            let m = parse_nonzero(&input)?;
            let d = d_of_m(&m)?;
            if json {
                #[derive(Serialize)]
                struct Out {
                    d: i64,
                }
                Ok((json_string(&Out { d }), 0))
            } else {
                Ok((d.to_string(), 0))
            }
        }
        Command::Gamma { input, json } => {
            let m = parse_nonzero(&input)?;
            let (ladders, shift) = gamma_descriptor(&m)?;
            if json {
                #[derive(Serialize)]
                struct Out {
                    ladders: Vec<String>,
                    shift: i64,
                }
                let out = Out {
                    ladders: ladders.iter().map(|l| l.to_string()).collect(),
                    shift,
                };
                Ok((json_string(&out), 0))
            } else {
                Ok((format!("{}\nshift={shift}", ladder_line(&ladders)), 0))
            }
        }
        Command::Char { input, kind, json } => {
            // read the argument once so `-` works for every kind
            let raw = read_input(&input)?;
            let m = parse_nonzero(&raw)?;
            let ch = match kind {
                CharKind::Kr => kr_char(&m),
                CharKind::Gamma => gamma_char(&m)?,
                CharKind::Sigma => sigma_char(&m)?,
                CharKind::Ladder => ladder_char(&parse_ladder(&raw)?),
                CharKind::Segment => {
                    let segs: Vec<_> = m.iter_segments().collect();
                    match segs.as_slice() {
                        [only] => segment_char(*only),
                        _ => {
                            return Err(Failure {
                                code: 3,
                                message: format!("`{m}` is not a single segment"),
                            })
                        }
                    }
                }
            };
            if json {
                Ok((json_string(&ch), 0))
            } else {
                Ok((character_text(&ch), 0))
            }
        }
        Command::Shuffle { left, right, json } => {
            let a = kr_char(&parse_nonzero(&left)?);
            let b = kr_char(&parse_nonzero(&right)?);
            let ch = shuffle(&a, &b);
            if json {
                Ok((json_string(&ch), 0))
            } else {
                Ok((character_text(&ch), 0))
            }
        }
        Command::Verify { grid, cap, json } => {
            let spec = match grid {
                Some(g) => GridSpec::parse(&g)?,
                None => GridSpec::default(),
            };
            let reports = run_all(spec, cap.unwrap_or(5));
            let all_pass = reports.iter().all(|r| r.passed());
            let code = if all_pass { 0 } else { 4 };
            if json {
                #[derive(Serialize)]
                struct Out<'a> {
                    grid: &'a GridSpec,
                    pass: bool,
                    checks: &'a [crate::verify::CheckReport],
                }
                Ok((
                    json_string(&Out {
                        grid: &spec,
                        pass: all_pass,
                        checks: &reports,
                    }),
                    code,
                ))
            } else {
                let mut out = String::new();
                for r in &reports {
                    let _ = writeln!(out, "{}", r.line());
                }
                let _ = write!(
                    out,
                    "{}",
                    if all_pass {
                        "all checks passed"
                    } else {
                        "FAILURES PRESENT"
                    }
                );
                Ok((out, code))
            }
        }
    }
}
