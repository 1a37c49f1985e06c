//! Argument parsing and dispatch for the `weylwords` binary.
//!
//! Exit codes: `0` success or a true verdict, `1` a false verdict, `2` usage
//! or domain error, `3` resource limit reached.

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use num_rational::BigRational;
use serde_json::{json, Value};

use weylwords::downup::{du_normal_order, DownUpElement, DownUpParams};
use weylwords::enumeration::{
    brute_force_cdyck_counts, brute_force_class_counts, count_classes, count_classes_cdyck,
    describe_ratio, parse_ratio, ratio_as_positive_int, total_classes, CountTable,
};
use weylwords::equivalence::{canonical_form, equivalent};
use weylwords::percolation::{mean_size_series, wet_probability};
use weylwords::rewrite::{class_size, equivalence_class, MoveSet};
use weylwords::weyl::{
    ferrers_board, normal_order, rook_equivalent, rook_numbers, tensor_equivalent, WeylElement,
};
use weylwords::{Error, Word};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FALSE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_RESOURCE: i32 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "weylwords",
    version,
    about = "D/U words in the Weyl algebra DU - UD = 1"
)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Plain, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Plain,
    Json,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Moves {
    Commute,
    Flip,
    Irreducible,
}

impl From<Moves> for MoveSet {
    fn from(m: Moves) -> Self {
        match m {
            Moves::Commute => MoveSet::BalancedCommutation,
            Moves::Flip => MoveSet::BalancedFlip,
            Moves::Irreducible => MoveSet::IrreducibleCommutation,
        }
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Decide whether two words are equivalent.
    Check { u: String, v: String },
    /// Print the canonical representative of a word's class.
    Canon { w: String },
    /// List the class of a word by exhaustive rewriting.
    Class {
        w: String,
        #[arg(long, value_enum, default_value_t = Moves::Commute)]
        moves: Moves,
        #[arg(long, default_value_t = 100_000)]
        cap: usize,
    },
    /// Print the size of a word's class from the closed form.
    Size { w: String },
    /// Print the normal-ordered expansion, one `U^j D^i : coeff` line per term.
    Expand { w: String },
    /// Print a word's Ferrers board and its rook numbers.
    Rook { w: String },
    /// Decide whether two words have rook-equivalent boards.
    Rookcheck { u: String, v: String },
    /// Decide equality of tensor products given as "U1,V1;U2,V2;...".
    Tensor { pairs: String },
    /// Class counts: the total for length n, or a(n,k) when k is given.
    Count {
        n: u64,
        k: Option<u64>,
        /// Restrict to c-Dyck words; fractions need --brute.
        #[arg(long)]
        c: Option<String>,
        /// Count by exhaustive enumeration.
        #[arg(long)]
        brute: bool,
        /// Print the whole row instead of its sum.
        #[arg(long)]
        row: bool,
    },
    /// Print the count table for lengths 0..=N.
    Table {
        max_n: usize,
        #[arg(long)]
        c: Option<u32>,
    },
    /// Mean cluster size series S(p) for directed percolation.
    Perc {
        #[arg(long)]
        order: usize,
        #[arg(long)]
        wall: bool,
    },
    /// Probability that site (t, x) is wet, as coefficients of p^0, p^1, ...
    PercSite {
        t: usize,
        #[arg(allow_hyphen_values = true)]
        x: i64,
        #[arg(long)]
        order: usize,
        #[arg(long)]
        wall: bool,
    },
    /// Normal form in the down-up algebra.
    Downup {
        w: String,
        #[arg(long)]
        params: String,
    },
    /// Decide equality in the down-up algebra.
    DownupCheck {
        u: String,
        v: String,
        #[arg(long)]
        params: String,
    },
}

/// Exit code and the text destined for stdout and stderr.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            code: EXIT_OK,
            stdout,
            stderr: String::new(),
        }
    }

    fn verdict(holds: bool, stdout: String) -> Self {
        Outcome {
            code: if holds { EXIT_OK } else { EXIT_FALSE },
            stdout,
            stderr: String::new(),
        }
    }

    fn error(e: &Error) -> Self {
        let code = match e {
            Error::Resource { .. } => EXIT_RESOURCE,
            _ => EXIT_USAGE,
        };
        Outcome {
            code,
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        }
    }
}

/// Parses `argv` (program name first) and runs the command.
pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome {
                    code: EXIT_USAGE,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                Outcome::ok(text)
            };
        }
    };
    match dispatch(cli.command, cli.format) {
        Ok(o) => o,
        Err(e) => Outcome::error(&e),
    }
}

fn word(s: &str) -> Result<Word, Error> {
    s.parse()
}

fn emit(format: Format, plain: String, value: Value) -> String {
    match format {
        Format::Plain => plain + "\n",
        Format::Json => value.to_string() + "\n",
    }
}

fn strs<T: ToString>(xs: &[T]) -> Vec<String> {
    xs.iter().map(ToString::to_string).collect()
}

fn joined<T: ToString>(xs: &[T]) -> String {
    strs(xs).join(" ")
}

fn element_json(e: &WeylElement) -> Value {
    let terms: Vec<Value> = e
        .terms()
        .rev()
        .map(|((j, i), c)| json!({"u": j, "d": i, "coeff": c.to_string()}))
        .collect();
    json!({ "terms": terms })
}

fn downup_json(e: &DownUpElement) -> Value {
    let terms: Vec<Value> = e
        .terms()
        .map(|(w, c)| json!({"word": w.to_string(), "coeff": ratio_string(c)}))
        .collect();
    json!({ "terms": terms })
}

fn ratio_string(c: &BigRational) -> String {
    describe_ratio(c)
}

fn parse_pairs(text: &str) -> Result<Vec<(Word, Word)>, Error> {
    let text = text.trim();
    if text.is_empty() {
        return Ok(Vec::new());
    }
    text.split(';')
        .map(|pair| {
            let (u, v) = pair
                .split_once(',')
                .ok_or_else(|| Error::Domain(format!("pair {pair:?} is not of the form U,V")))?;
            Ok((word(u.trim())?, word(v.trim())?))
        })
        .collect()
}

fn verdict_text(holds: bool) -> &'static str {
    if holds {
        "EQUIVALENT"
    } else {
        "DIFFERENT"
    }
}

fn dispatch(cmd: Command, format: Format) -> Result<Outcome, Error> {
    Ok(match cmd {
        Command::Check { u, v } => {
            let (u, v) = (word(&u)?, word(&v)?);
            let holds = equivalent(&u, &v);
            let out = emit(
                format,
                verdict_text(holds).into(),
                json!({"u": u.to_string(), "v": v.to_string(), "equivalent": holds}),
            );
            Outcome::verdict(holds, out)
        }
        Command::Canon { w } => {
            let w = word(&w)?;
            let c = canonical_form(&w);
            Outcome::ok(emit(
                format,
                c.to_string(),
                json!({"word": w.to_string(), "canonical": c.to_string()}),
            ))
        }
        Command::Class { w, moves, cap } => {
            let w = word(&w)?;
            let class = equivalence_class(&w, moves.into(), cap)?;
            let members: Vec<String> = class.members.iter().map(ToString::to_string).collect();
            Outcome::ok(emit(
                format,
                members.join("\n"),
                json!({
                    "word": w.to_string(),
                    "representative": class.representative.to_string(),
                    "size": members.len(),
                    "members": members,
                }),
            ))
        }
        Command::Size { w } => {
            let w = word(&w)?;
            let s = class_size(&w);
            Outcome::ok(emit(
                format,
                s.to_string(),
                json!({"word": w.to_string(), "size": s.to_string()}),
            ))
        }
        Command::Expand { w } => {
            let w = word(&w)?;
            let e = normal_order(&w);
            Outcome::ok(emit(format, e.to_string(), element_json(&e)))
        }
        Command::Rook { w } => {
            let w = word(&w)?;
            let b = ferrers_board(&w);
            let r = rook_numbers(&b, w.count_u().min(w.count_d()));
            let plain = format!("board: {}\nrook: {}", joined(b.col_heights()), joined(&r));
            Outcome::ok(emit(
                format,
                plain,
                json!({"board": b.col_heights(), "rook_numbers": strs(&r)}),
            ))
        }
        Command::Rookcheck { u, v } => {
            let (u, v) = (word(&u)?, word(&v)?);
            let holds = rook_equivalent(&u, &v);
            Outcome::verdict(
                holds,
                emit(format, holds.to_string(), json!({"rook_equivalent": holds})),
            )
        }
        Command::Tensor { pairs } => {
            let pairs = parse_pairs(&pairs)?;
            let holds = tensor_equivalent(&pairs);
            Outcome::verdict(
                holds,
                emit(format, holds.to_string(), json!({"equivalent": holds})),
            )
        }
        Command::Count {
            n,
            k,
            c,
            brute,
            row,
        } => count(n, k, c.as_deref(), brute, row, format)?,
        Command::Table { max_n, c } => {
            let table = match c {
                None => CountTable::classes(max_n),
                Some(c) => CountTable::cdyck(max_n, c)?,
            };
            let rows: Vec<Value> = (0..=max_n)
                .map(|n| json!({"n": n, "row": strs(&table.row(n)), "sum": table.row_sum(n).to_string()}))
                .collect();
            let plain = table.to_string();
            Outcome::ok(emit(
                format,
                plain.trim_end().to_string(),
                json!({"rows": rows}),
            ))
        }
        Command::Perc { order, wall } => {
            let s = mean_size_series(order, wall)?;
            Outcome::ok(emit(
                format,
                joined(&s),
                json!({"order": order, "wall": wall, "coeffs": strs(&s)}),
            ))
        }
        Command::PercSite { t, x, order, wall } => {
            let p = wet_probability(t, x, order, wall)?;
            Outcome::ok(emit(
                format,
                joined(p.coeffs()),
                json!({"t": t, "x": x, "order": order, "wall": wall, "coeffs": strs(p.coeffs())}),
            ))
        }
        Command::Downup { w, params } => {
            let w = word(&w)?;
            let params = DownUpParams::parse(&params)?;
            let e = du_normal_order(&w, &params);
            Outcome::ok(emit(format, e.to_string(), downup_json(&e)))
        }
        Command::DownupCheck { u, v, params } => {
            let (u, v) = (word(&u)?, word(&v)?);
            let params = DownUpParams::parse(&params)?;
            let holds = du_normal_order(&u, &params) == du_normal_order(&v, &params);
            Outcome::verdict(
                holds,
                emit(
                    format,
                    verdict_text(holds).into(),
                    json!({"u": u.to_string(), "v": v.to_string(), "params": params.to_string(), "equivalent": holds}),
                ),
            )
        }
    })
}

fn count(
    n: u64,
    k: Option<u64>,
    c: Option<&str>,
    brute: bool,
    row: bool,
    format: Format,
) -> Result<Outcome, Error> {
    let ratio = c.map(parse_ratio).transpose()?;
    let values: Vec<BigUint> = match (&ratio, brute) {
        (None, false) => (0..=n)
            .map(|k| count_classes(n as i64, k as i64))
            .collect::<Result<_, _>>()?,
        (None, true) => brute_force_class_counts(n as usize)?,
        (Some(r), true) => brute_force_cdyck_counts(n as usize, r)?,
        (Some(r), false) => {
            let c = ratio_as_positive_int(r).ok_or_else(|| {
                Error::Domain(format!(
                    "closed form needs a positive integer c, got {}; use --brute",
                    describe_ratio(r)
                ))
            })?;
            let top = n / (c as u64 + 1);
            (0..=top)
                .map(|k| count_classes_cdyck(n as i64, k as i64, c))
                .collect::<Result<_, _>>()?
        }
    };
    let total: BigUint = values.iter().sum();
    let shown = match k {
        Some(k) => {
            if k > n {
                return Err(Error::Domain(format!("need k ≤ n, got n={n}, k={k}")));
            }
            values.get(k as usize).cloned().unwrap_or_default()
        }
        None => total.clone(),
    };
    if ratio.is_none() && !brute && k.is_none() {
        debug_assert_eq!(shown, total_classes(n));
    }
    let plain = if row && k.is_none() {
        joined(&values)
    } else {
        shown.to_string()
    };
    let c_json = ratio.as_ref().map(describe_ratio);
    Ok(Outcome::ok(emit(
        format,
        plain,
        json!({
            "n": n,
            "k": k,
            "c": c_json,
            "brute": brute,
            "value": shown.to_string(),
            "row": strs(&values),
        }),
    )))
}
