//! The `locgenus` command line.
//!
//! Output is line-oriented text; multi-line outputs end in a `result:` or
//! `count:` line. `--json` prints the same data as one JSON object. Failures
//! print an `error:` line on stderr and exit with 2 (parse), 3 (domain) or
//! 4 (resource guard).

use clap::{Args, Parser, Subcommand};
use num_bigint::BigInt;
use serde_json::{json, Value};

use crate::arith::{Factorizer, PAdicApprox, Prime, Rat, DEFAULT_PRECISION, DEFAULT_PRIME_BOUND};
use crate::connecting::beta;
use crate::error::{Error, ErrorKind, Result};
use crate::genus::{
    assemble_global, classify_postnikov_genus, classify_rational_genus, classifying_map_class,
    cp_fake_descriptor, enumerate_postnikov_genus, finite_complex_genus_verdict, homotopy_groups,
    is_n_minus_1_connected, FiniteComplex, GenusFunctor, NPlus, RationalGenusElement,
};
use crate::rankone::{similar, type_of, RankOneGroup};
use crate::text::{parse_descriptor, parse_heights, parse_nplus_sequence, print_descriptor, print_type};

#[derive(Debug, Parser)]
#[command(name = "locgenus", version, about = "Localization genus computations for odd spheres")]
pub struct Cli {
    /// Emit a single JSON object instead of text.
    #[arg(long, global = true)]
    json: bool,

    /// Largest prime used when factoring denominators.
    #[arg(long, global = true, default_value_t = DEFAULT_PRIME_BOUND)]
    prime_bound: u64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Types of height sequences.
    #[command(subcommand, name = "type")]
    Type(TypeCommand),
    /// Rank-one subgroups of ℚ.
    #[command(subcommand)]
    Group(GroupCommand),
    /// Genus computations.
    #[command(subcommand)]
    Genus(GenusCommand),
    /// p-adic classifying-map classes.
    #[command(subcommand)]
    Padic(PadicCommand),
    /// Genus triviality verdict for a catalogued finite complex.
    Verdict {
        /// S^n, CP^n, S^2xS^5 or CP^2xS^3.
        complex: String,
        /// neisendorfer or postnikov:N.
        #[arg(long)]
        functor: String,
    },
}

#[derive(Debug, Subcommand)]
enum TypeCommand {
    /// Canonical representative of the type of a height sequence.
    Canon { heights: String },
    /// Whether two height sequences are similar.
    Similar { first: String, second: String },
}

#[derive(Debug, Subcommand)]
enum GroupCommand {
    /// Membership of a rational in the group with the given heights.
    Member { rational: String, heights: String },
    /// Whether the group is a group of pseudo-integers.
    Pseudo { heights: String },
}

#[derive(Debug, Subcommand)]
enum GenusCommand {
    /// Extended rationalization genus element with kernel of the given heights.
    Rational {
        heights: String,
        #[arg(long)]
        dim: u32,
    },
    /// Extended Postnikov genus of S^n.
    #[command(subcommand)]
    Postnikov(PostnikovCommand),
    /// Fake complex projective space from per-prime degree exponents.
    Cp {
        #[arg(long = "n")]
        n: u32,
        exponents: String,
    },
}

#[derive(Debug, Subcommand)]
enum PostnikovCommand {
    /// Recover a descriptor from the cohomology of its fake sphere.
    Fingerprint {
        descriptor: String,
        #[arg(long)]
        dim: u32,
    },
    /// List descriptors supported on small primes.
    Enumerate(EnumerateArgs),
}

#[derive(Debug, Args)]
struct EnumerateArgs {
    #[arg(long)]
    dim: u32,
    #[arg(long)]
    primes: u64,
    #[arg(long)]
    max: u32,
}

#[derive(Debug, Subcommand)]
enum PadicCommand {
    /// ℕ₊ class of a p-adic integer given as an integer or `zero`.
    Class {
        prime: u64,
        #[arg(allow_negative_numbers = true)]
        value: String,
        #[arg(long, default_value_t = DEFAULT_PRECISION)]
        precision: u32,
        #[arg(long, default_value_t = 3)]
        dim: u32,
    },
}

/// Captured result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

pub fn exit_code(kind: ErrorKind) -> i32 {
    match kind {
        ErrorKind::Parse => 2,
        ErrorKind::Domain => 3,
        ErrorKind::Resource => 4,
    }
}

/// Text lines and the equivalent JSON.
struct Report {
    lines: Vec<String>,
    json: Value,
}

impl Report {
    fn single(line: impl Into<String>, json: Value) -> Self {
        Report {
            lines: vec![line.into()],
            json,
        }
    }
}

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let rendered = e.render().to_string();
            return if code == 0 {
                Outcome {
                    stdout: rendered,
                    stderr: String::new(),
                    code,
                }
            } else {
                Outcome {
                    stdout: String::new(),
                    stderr: rendered,
                    code: 2,
                }
            };
        }
    };
    match execute(&cli) {
        Ok(report) => {
            let stdout = if cli.json {
                format!("{}\n", report.json)
            } else {
                report.lines.iter().map(|l| format!("{l}\n")).collect()
            };
            Outcome {
                stdout,
                stderr: String::new(),
                code: 0,
            }
        }
        Err(e) => Outcome {
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
            code: exit_code(e.kind()),
        },
    }
}

fn execute(cli: &Cli) -> Result<Report> {
    let factorizer = if cli.prime_bound == DEFAULT_PRIME_BOUND {
        Factorizer::default()
    } else {
        Factorizer::with_bound(cli.prime_bound)
    };
    match &cli.command {
        Command::Type(TypeCommand::Canon { heights }) => {
            let t = print_type(&type_of(&parse_heights(heights)?));
            Ok(Report::single(t.clone(), json!({ "type": t })))
        }
        Command::Type(TypeCommand::Similar { first, second }) => {
            let s = similar(&parse_heights(first)?, &parse_heights(second)?);
            Ok(Report::single(s.to_string(), json!({ "similar": s })))
        }
        Command::Group(GroupCommand::Member { rational, heights }) => {
            let q: Rat = rational.parse()?;
            let a = RankOneGroup::new(parse_heights(heights)?);
            let m = a.contains_with(&q, &factorizer)?;
            Ok(Report::single(m.to_string(), json!({ "member": m })))
        }
        Command::Group(GroupCommand::Pseudo { heights }) => {
            let a = RankOneGroup::new(parse_heights(heights)?);
            let b = a.is_pseudo_integers();
            Ok(Report::single(b.to_string(), json!({ "pseudo_integers": b })))
        }
        Command::Genus(GenusCommand::Rational { heights, dim }) => {
            let a = RankOneGroup::new(parse_heights(heights)?);
            let y = RationalGenusElement::new(*dim, beta(&a))?;
            let class = print_type(&classify_rational_genus(&y));
            let groups = homotopy_groups(&y);
            let pi_n = print_type(&groups.pi_n);
            let torsion = groups.pi_n_minus_1.to_string();
            let connected = is_n_minus_1_connected(&y);
            let verdict = if connected {
                "(n-1)-connected"
            } else {
                "not (n-1)-connected"
            };
            Ok(Report {
                lines: vec![
                    format!("dimension: {dim}"),
                    format!("class: {class}"),
                    format!("pi_n type: {pi_n}"),
                    format!("pi_(n-1) primes: {torsion}"),
                    format!("result: {verdict}"),
                ],
                json: json!({
                    "dimension": dim,
                    "class": class,
                    "pi_n_type": pi_n,
                    "pi_n_minus_1_primes": torsion,
                    "n_minus_1_connected": connected,
                }),
            })
        }
        Command::Genus(GenusCommand::Postnikov(PostnikovCommand::Fingerprint { descriptor, dim })) => {
            let k = parse_descriptor(descriptor, *dim)?;
            let y = assemble_global(*dim, &k)?;
            let recovered = print_descriptor(&classify_postnikov_genus(&y)?);
            Ok(Report::single(
                recovered.clone(),
                json!({ "dimension": dim, "descriptor": recovered }),
            ))
        }
        Command::Genus(GenusCommand::Postnikov(PostnikovCommand::Enumerate(args))) => {
            let all = enumerate_postnikov_genus(args.dim, args.primes, args.max)?;
            let listed: Vec<String> = all.iter().map(print_descriptor).collect();
            let mut lines = listed.clone();
            lines.push(format!("count: {}", listed.len()));
            Ok(Report {
                json: json!({
                    "dimension": args.dim,
                    "descriptors": listed,
                    "count": listed.len(),
                }),
                lines,
            })
        }
        Command::Genus(GenusCommand::Cp { n, exponents }) => {
            let k = cp_fake_descriptor(*n, &parse_nplus_sequence(exponents)?)?;
            let text = print_descriptor(&k);
            Ok(Report::single(
                text.clone(),
                json!({ "dimension": k.dimension(), "descriptor": text }),
            ))
        }
        Command::Padic(PadicCommand::Class {
            prime,
            value,
            precision,
            dim,
        }) => {
            let p = Prime::new(*prime)?;
            let z = if value == "zero" {
                PAdicApprox::zero(p, *precision)?
            } else {
                let v: BigInt = value
                    .parse()
                    .map_err(|_| Error::Parse {
                        position: 0,
                        message: format!("expected an integer or `zero`, found {value:?}"),
                    })?;
                PAdicApprox::from_integer(p, *precision, &v)?
            };
            let class = classifying_map_class(*dim, p, &z)?;
            let json_class = match class {
                NPlus::Nat(k) => json!(k),
                NPlus::Star => json!("*"),
            };
            Ok(Report::single(class.to_string(), json!({ "class": json_class })))
        }
        Command::Verdict { complex, functor } => {
            let x: FiniteComplex = complex.parse()?;
            let f: GenusFunctor = functor.parse()?;
            let v = finite_complex_genus_verdict(x, f).to_string();
            Ok(Report::single(
                v.clone(),
                json!({ "complex": x.to_string(), "functor": f.to_string(), "verdict": v }),
            ))
        }
    }
}
