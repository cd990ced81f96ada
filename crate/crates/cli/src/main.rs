use std::io::Read;
use std::process::ExitCode;

use arfcurve::*;
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

/// Arf semigroups, multiplicity trees and character vectors of curves.
///
/// INPUT arguments are a file path, `-` for stdin, or an inline JSON literal.
#[derive(Parser)]
#[command(name = "arfcurve", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Arf closure of the numerical semigroup generated by the arguments.
    Closure {
        #[arg(required = true)]
        generators: Vec<u64>,
    },
    /// Multiplicity sequence of an Arf numerical semigroup.
    Seq { input: String },
    /// Arf semigroup of a multiplicity sequence (entries or a `{"prefix":…}` literal).
    Unseq {
        #[arg(required = true)]
        entries: Vec<String>,
    },
    /// Arf characters of an Arf numerical semigroup, or of the Arf closure of generators.
    Characters {
        #[arg(required = true)]
        input: Vec<String>,
    },
    /// Good, local and Arf checks for a semigroup literal in ℕ^d.
    Check { input: String },
    #[command(subcommand)]
    Tree(TreeCommand),
    #[command(subcommand)]
    Chars(CharsCommand),
    #[command(subcommand)]
    Curve(CurveCommand),
}

#[derive(Subcommand)]
enum TreeCommand {
    /// Multiplicity tree of an Arf semigroup.
    FromSemigroup {
        input: String,
        #[command(flatten)]
        format: FormatArg,
    },
    /// Semigroup of a multiplicity tree.
    ToSemigroup { input: String },
    /// Tree of the intersection of two tree semigroups.
    Intersect {
        a: String,
        b: String,
        #[command(flatten)]
        format: FormatArg,
    },
    /// Draws a tree.
    Render {
        input: String,
        #[arg(long, value_enum, default_value_t = Format::Ascii)]
        format: Format,
    },
}

#[derive(Subcommand)]
enum CharsCommand {
    /// Character vectors of an Arf semigroup.
    Build {
        semigroup: String,
        /// Witness node LEVEL:BRANCH (branch counted from 1) for branching nodes without one.
        #[arg(long = "witness-node", value_parser = parse_witness)]
        witness: Vec<WitnessNode>,
    },
    /// Drops vectors not needed to determine the semigroup.
    Reduce { vectors: String, semigroup: String },
    /// Smallest Arf semigroup containing the vectors.
    Closure {
        vectors: String,
        #[command(flatten)]
        format: FormatArg,
    },
}

#[derive(Subcommand)]
enum CurveCommand {
    /// Multiplicity tree of a curve, branches in canonical order.
    Tree {
        input: String,
        #[command(flatten)]
        truncation: TruncationArg,
        #[command(flatten)]
        format: FormatArg,
    },
    /// Value semigroup of the Arf closure, in the curve's branch order.
    Semigroup {
        input: String,
        #[command(flatten)]
        truncation: TruncationArg,
    },
    /// Whether two curves have the same multiplicity tree.
    Equiv {
        a: String,
        b: String,
        #[command(flatten)]
        truncation: TruncationArg,
    },
    /// Values of nonzerodivisors inside the box [0, bound].
    Values {
        input: String,
        /// Box corner "a,b,…"; defaults to 10 on every branch.
        #[arg(long, value_parser = parse_bound)]
        bound: Option<Bound>,
        #[command(flatten)]
        truncation: TruncationArg,
    },
}

#[derive(Args)]
struct TruncationArg {
    /// Series precision, overriding the literal's own.
    #[arg(long)]
    truncation: Option<usize>,
}

#[derive(Args)]
struct FormatArg {
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Ascii,
    Dot,
}

fn parse_witness(s: &str) -> std::result::Result<WitnessNode, String> {
    let (level, branch) = s.split_once(':').ok_or("expected LEVEL:BRANCH")?;
    let level = level.trim().parse().map_err(|_| format!("bad level '{level}'"))?;
    let branch: usize = branch.trim().parse().map_err(|_| format!("bad branch '{branch}'"))?;
    if branch == 0 {
        return Err("branches are counted from 1".into());
    }
    Ok(WitnessNode { level, branch: branch - 1 })
}

#[derive(Clone)]
struct Bound(Vec<u64>);

fn parse_bound(s: &str) -> std::result::Result<Bound, String> {
    s.split(',')
        .map(|x| x.trim().parse().map_err(|_| format!("bad bound entry '{x}'")))
        .collect::<std::result::Result<_, _>>()
        .map(Bound)
}

fn read_input(arg: &str) -> Result<Value> {
    let text = if arg == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| Error::Format(format!("cannot read stdin: {e}")))?;
        s
    } else if std::path::Path::new(arg).is_file() {
        std::fs::read_to_string(arg).map_err(|e| Error::Format(format!("cannot read {arg}: {e}")))?
    } else if arg.trim_start().starts_with('{') {
        arg.to_string()
    } else {
        return Err(Error::Format(format!("'{arg}' is neither a file nor a JSON literal")));
    };
    serde_json::from_str(&text).map_err(|e| Error::Parse {
        position: e.column().saturating_sub(1),
        message: format!("{arg}: {e}"),
    })
}

fn load<T: Json>(arg: &str) -> Result<T> {
    T::from_json(&read_input(arg)?)
}

fn load_curve(arg: &str, truncation: &TruncationArg) -> Result<CurveAlgebra> {
    let spec = CurveSpec::from_json(&read_input(arg)?)?;
    spec.build_with_truncation(truncation.truncation.unwrap_or(spec.truncation))
}

/// Integers given directly, or one INPUT literal.
fn integers(args: &[String]) -> Option<Vec<u64>> {
    args.iter().map(|a| a.parse().ok()).collect()
}

fn single(args: &[String]) -> Result<&str> {
    match args {
        [one] => Ok(one),
        _ => Err(Error::Format("expected integers or a single INPUT".into())),
    }
}

fn tree_output(t: &MultiplicityTree, format: Format) -> String {
    match format {
        Format::Json => compact(&t.to_json()),
        Format::Ascii => t.render_ascii().trim_end().to_string(),
        Format::Dot => t.render_dot().trim_end().to_string(),
    }
}

fn compact(v: &Value) -> String {
    serde_json::to_string(v).expect("values serialize")
}

fn run(cli: Cli) -> Result<String> {
    Ok(match cli.command {
        Command::Closure { generators } => compact(&arf_closure(&generators)?.to_json()),
        Command::Seq { input } => {
            let s: NumericalSemigroup = load(&input)?;
            compact(&s.to_sequence()?.to_json())
        }
        Command::Unseq { entries } => {
            let seq = match integers(&entries) {
                Some(v) => MultiplicitySequence::new(
                    v.into_iter()
                        .map(|e| u32::try_from(e).map_err(|_| Error::Format("sequence entry too large".into())))
                        .collect::<Result<_>>()?,
                )?,
                None => load(single(&entries)?)?,
            };
            compact(&seq_to_semigroup(&seq).to_json())
        }
        Command::Characters { input } => {
            let s = match integers(&input) {
                Some(g) => arf_closure(&g)?,
                None => load(single(&input)?)?,
            };
            compact(&s.arf_characters()?.to_json())
        }
        Command::Check { input } => {
            let report = match GoodSemigroup::from_json(&read_input(&input)?) {
                Ok(s) => {
                    let good = s.check_good();
                    let mut r = json!({
                        "good": good.is_ok(),
                        "local": s.is_local(),
                        "arf": good.is_ok() && s.is_arf_good(),
                    });
                    if let Err(v) = good {
                        r["violation"] = json!(v.to_string());
                    }
                    r
                }
                Err(Error::NotGood(why)) => json!({"good": false, "local": false, "arf": false, "violation": why}),
                Err(e) => return Err(e),
            };
            compact(&report)
        }
        Command::Tree(t) => match t {
            TreeCommand::FromSemigroup { input, format } => {
                let s: GoodSemigroup = load(&input)?;
                tree_output(&MultiplicityTree::from_semigroup(&s)?, format.format)
            }
            TreeCommand::ToSemigroup { input } => {
                let t: MultiplicityTree = load(&input)?;
                compact(&t.to_semigroup()?.to_json())
            }
            TreeCommand::Intersect { a, b, format } => {
                let a: MultiplicityTree = load(&a)?;
                let b: MultiplicityTree = load(&b)?;
                tree_output(&a.intersection(&b)?, format.format)
            }
            TreeCommand::Render { input, format } => {
                let t: MultiplicityTree = load(&input)?;
                tree_output(&t, format)
            }
        },
        Command::Chars(c) => match c {
            CharsCommand::Build { semigroup, witness } => {
                let s: GoodSemigroup = load(&semigroup)?;
                compact(&build_character_vectors_with(&s, &witness)?.to_json())
            }
            CharsCommand::Reduce { vectors, semigroup } => {
                let v: CharacterVectorSet = load(&vectors)?;
                let s: GoodSemigroup = load(&semigroup)?;
                compact(&reduce_characters(&v, &s)?.to_json())
            }
            CharsCommand::Closure { vectors, format } => {
                let v: CharacterVectorSet = load(&vectors)?;
                match format.format {
                    Format::Json => compact(&smallest_arf_containing(&v)?.to_json()),
                    f => tree_output(&smallest_arf_tree(&v)?, f),
                }
            }
        },
        Command::Curve(c) => match c {
            CurveCommand::Tree { input, truncation, format } => {
                let curve = load_curve(&input, &truncation)?;
                tree_output(&curve.multiplicity_tree()?.tree.canonical_form().0, format.format)
            }
            CurveCommand::Semigroup { input, truncation } => {
                let curve = load_curve(&input, &truncation)?;
                compact(&curve.arf_closure_value_semigroup()?.to_json())
            }
            CurveCommand::Equiv { a, b, truncation } => {
                let a = load_curve(&a, &truncation)?;
                let b = load_curve(&b, &truncation)?;
                compact(&json!({"equivalent": curves_equivalent(&a, &b)?}))
            }
            CurveCommand::Values { input, bound, truncation } => {
                let curve = load_curve(&input, &truncation)?;
                let bound = bound.map_or_else(|| vec![10; curve.d()], |b| b.0);
                let values = curve.value_set(&bound)?;
                compact(&json!({"bound": bound, "values": values}))
            }
        },
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(out) => {
            println!("{out}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(if e.is_parse() { 2 } else { 1 })
        }
    }
}
