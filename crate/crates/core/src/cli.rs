//! Command-line front end.
//!
//! [`run`] parses an argument vector, dispatches to the library and returns
//! a [`CliResponse`]; the binary only prints it and exits with its code.

use std::collections::BTreeMap;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde_json::{json, Value};

use crate::error::Error;
use crate::exact_math::hockey_stick_sides;
use crate::icn_modules::{
    dim_principal_incl_excl, dim_principal_iterative, dim_submodule, dim_submodule_by,
    dim_submodule_oracle, downset, parse_elements, reduced_support, ModuleVector, Subset,
};
use crate::lattice_paths::{
    count_below_decreasing_iterative, count_below_increasing_determinant, count_below_oracle,
    enumerate_below, verify_identity_cor34, verify_identity_cor35, Direction, HeightSequence,
    IdentityCheck,
};
use crate::rook_monoid::{compose, enumerate_icn, format_two_line, parse_two_line};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Ok,
    UsageError,
    DomainError,
}

impl Status {
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Ok => 0,
            Status::UsageError => 1,
            Status::DomainError => 2,
        }
    }
}

/// What a command printed and how it ended.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliResponse {
    pub status: Status,
    pub stdout: String,
    pub stderr: String,
}

impl CliResponse {
    fn ok(stdout: String) -> Self {
        CliResponse {
            status: Status::Ok,
            stdout,
            stderr: String::new(),
        }
    }

    fn fail(status: Status, stderr: String) -> Self {
        CliResponse {
            status,
            stdout: String::new(),
            stderr,
        }
    }

    pub fn exit_code(&self) -> i32 {
        self.status.exit_code()
    }
}

#[derive(Parser, Debug)]
#[command(
    name = "lattice-rook",
    version,
    about = "Exact lattice path counts and IC_n module dimensions"
)]
struct Cli {
    /// Emit a JSON document instead of plain text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum DirArg {
    #[value(alias = "decreasing")]
    Dec,
    #[value(alias = "increasing")]
    Inc,
}

impl DirArg {
    fn direction(self) -> Direction {
        match self {
            DirArg::Dec => Direction::Decreasing,
            DirArg::Inc => Direction::Increasing,
        }
    }

    fn label(self) -> &'static str {
        match self {
            DirArg::Dec => "dec",
            DirArg::Inc => "inc",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    Auto,
    Iterative,
    Determinant,
    Oracle,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum IdentityArg {
    Cor34,
    Cor35,
    HockeyStick,
}

impl IdentityArg {
    fn label(self) -> &'static str {
        match self {
            IdentityArg::Cor34 => "cor34",
            IdentityArg::Cor35 => "cor35",
            IdentityArg::HockeyStick => "hockey-stick",
        }
    }
}

/// Comma-separated heights such as `4,3,3,1,1`.
#[derive(Clone, Debug)]
struct Heights(Vec<u64>);

/// Comma-separated subset elements; empty text is the empty set.
#[derive(Clone, Debug)]
struct Elements(Vec<usize>);

fn parse_heights(text: &str) -> Result<Heights, String> {
    text.split(',')
        .map(|t| {
            t.trim()
                .parse::<u64>()
                .map_err(|_| format!("invalid height '{}'", t.trim()))
        })
        .collect::<Result<_, _>>()
        .map(Heights)
}

fn parse_set(text: &str) -> Result<Elements, String> {
    parse_elements(text)
        .map(Elements)
        .map_err(|e| e.to_string())
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Count monotone paths below a height sequence.
    PathsCount {
        #[arg(long, value_enum)]
        dir: DirArg,
        #[arg(long, value_parser = parse_heights)]
        heights: Heights,
        #[arg(long, value_enum, default_value = "auto")]
        method: MethodArg,
        /// Also run the DP oracle and fail on disagreement.
        #[arg(long)]
        check: bool,
    },
    /// List the height sequences below a boundary.
    PathsList {
        #[arg(long, value_enum)]
        dir: DirArg,
        #[arg(long, value_parser = parse_heights)]
        heights: Heights,
        #[arg(long, default_value_t = 1000)]
        cap: usize,
    },
    /// Dimension of the principal submodule generated by v_S.
    DimSubset {
        #[arg(long)]
        n: usize,
        /// Comma-separated elements; empty for the empty set.
        #[arg(long, value_parser = parse_set, allow_hyphen_values = true)]
        set: Elements,
        #[arg(long, value_enum, default_value = "auto")]
        method: MethodArg,
        #[arg(long)]
        check: bool,
    },
    /// Dimension of the submodule generated by a vector.
    DimVector {
        #[arg(long)]
        n: usize,
        /// Terms like "1:{};-2:{1};3/2:{4,7}".
        #[arg(long, allow_hyphen_values = true)]
        vector: String,
        #[arg(long, value_enum, default_value = "auto")]
        method: MethodArg,
        #[arg(long)]
        check: bool,
    },
    /// Reduced support and reduced form of a vector.
    Reduce {
        #[arg(long)]
        n: usize,
        #[arg(long, allow_hyphen_values = true)]
        vector: String,
    },
    /// Number of elements of IC_n.
    MonoidSize {
        #[arg(long)]
        n: usize,
    },
    /// Elements of IC_n in two-line notation.
    MonoidList {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 1000)]
        cap: usize,
    },
    /// Composite f∘g of two partial injections (g applied first).
    MonoidCompose {
        #[arg(long)]
        n: usize,
        #[arg(long, allow_hyphen_values = true)]
        f: String,
        #[arg(long, allow_hyphen_values = true)]
        g: String,
    },
    /// Evaluate both sides of an identity.
    Verify {
        #[arg(long, value_enum)]
        identity: IdentityArg,
        #[arg(long, value_parser = parse_heights)]
        heights: Option<Heights>,
        #[arg(long)]
        k: Option<u64>,
        #[arg(long)]
        a: Option<u64>,
        #[arg(long)]
        b: Option<u64>,
        #[arg(long)]
        p: Option<u64>,
    },
}

/// A command result before rendering.
#[derive(Clone, Debug, PartialEq)]
pub enum Outcome {
    Value {
        input: Value,
        method: Option<String>,
        value: String,
        details: BTreeMap<String, Value>,
    },
    Listing {
        input: Option<Value>,
        items: Vec<Value>,
        truncated: bool,
    },
    Identity {
        input: Value,
        lhs: BigInt,
        rhs: BigInt,
        equal: bool,
    },
}

/// Compact JSON with keys in sorted order and integers as decimal strings.
pub fn render_json(outcome: &Outcome) -> String {
    let mut doc = serde_json::Map::new();
    match outcome {
        Outcome::Value {
            input,
            method,
            value,
            details,
        } => {
            doc.insert("input".into(), input.clone());
            if let Some(m) = method {
                doc.insert("method".into(), json!(m));
            }
            doc.insert("value".into(), json!(value));
            for (k, v) in details {
                doc.insert(k.clone(), v.clone());
            }
        }
        Outcome::Listing {
            input,
            items,
            truncated,
        } => {
            if let Some(input) = input {
                doc.insert("input".into(), input.clone());
            }
            doc.insert("items".into(), Value::Array(items.clone()));
            doc.insert("truncated".into(), json!(truncated));
        }
        Outcome::Identity {
            input,
            lhs,
            rhs,
            equal,
        } => {
            doc.insert("input".into(), input.clone());
            doc.insert("lhs".into(), json!(lhs.to_string()));
            doc.insert("rhs".into(), json!(rhs.to_string()));
            doc.insert("equal".into(), json!(equal));
        }
    }
    Value::Object(doc).to_string()
}

fn plain_item(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Array(xs) => xs.iter().map(plain_item).collect::<Vec<_>>().join(","),
        other => other.to_string(),
    }
}

/// Plain text: the value on the first line, one list item per line, or
/// `lhs`/`rhs`/`equal` lines for identities.
pub fn render_text(outcome: &Outcome) -> String {
    let mut out = String::new();
    match outcome {
        Outcome::Value { value, details, .. } => {
            out.push_str(value);
            out.push('\n');
            for (k, v) in details {
                out.push_str(&format!("{k}: {}\n", plain_item(v)));
            }
        }
        Outcome::Listing {
            items, truncated, ..
        } => {
            for item in items {
                out.push_str(&plain_item(item));
                out.push('\n');
            }
            if *truncated {
                out.push_str("... (truncated)\n");
            }
        }
        Outcome::Identity {
            lhs, rhs, equal, ..
        } => {
            out.push_str(&format!("lhs: {lhs}\nrhs: {rhs}\nequal: {equal}\n"));
        }
    }
    out
}

enum Failure {
    Usage(String),
    Domain(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if e.is_parse() {
            Failure::Usage(e.to_string())
        } else {
            Failure::Domain(e.to_string())
        }
    }
}

/// Runs one command. `argv[0]` is the program name, as in `std::env::args`.
pub fn run<I, T>(argv: I) -> CliResponse
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => CliResponse::ok(text),
                _ => CliResponse::fail(Status::UsageError, text),
            };
        }
    };
    match dispatch(cli.command) {
        Ok(outcome) => CliResponse::ok(if cli.json {
            let mut s = render_json(&outcome);
            s.push('\n');
            s
        } else {
            render_text(&outcome)
        }),
        Err(Failure::Usage(msg)) => {
            CliResponse::fail(Status::UsageError, format!("error: {msg}\n"))
        }
        Err(Failure::Domain(msg)) => {
            CliResponse::fail(Status::DomainError, format!("error: {msg}\n"))
        }
    }
}

fn value(input: Value, method: Option<&str>, value: String) -> Outcome {
    Outcome::Value {
        input,
        method: method.map(str::to_string),
        value,
        details: BTreeMap::new(),
    }
}

fn check_against(method: &str, got: &BigInt, oracle: &BigInt) -> Result<(), Failure> {
    if got != oracle {
        return Err(Failure::Domain(format!(
            "check failed: {method} gave {got}, oracle gave {oracle}"
        )));
    }
    Ok(())
}

fn dispatch(command: Command) -> Result<Outcome, Failure> {
    match command {
        Command::PathsCount {
            dir,
            heights,
            method,
            check,
        } => {
            let heights = heights.0;
            let input = json!({"dir": dir.label(), "heights": heights});
            let h = HeightSequence::new(dir.direction(), heights)?;
            let method = match (method, dir) {
                (MethodArg::Auto, DirArg::Dec) => MethodArg::Iterative,
                (MethodArg::Auto, DirArg::Inc) => MethodArg::Determinant,
                (m, _) => m,
            };
            let (name, count) = match (method, dir) {
                (MethodArg::Iterative, DirArg::Dec) => {
                    ("iterative", count_below_decreasing_iterative(&h)?)
                }
                (MethodArg::Iterative, DirArg::Inc) => (
                    "iterative",
                    count_below_decreasing_iterative(&h.reversed())?,
                ),
                (MethodArg::Determinant, DirArg::Inc) => {
                    ("determinant", count_below_increasing_determinant(&h)?)
                }
                (MethodArg::Determinant, DirArg::Dec) => (
                    "determinant",
                    count_below_increasing_determinant(&h.reversed())?,
                ),
                _ => ("oracle", count_below_oracle(&h)),
            };
            if check {
                check_against(name, &count, &count_below_oracle(&h))?;
            }
            Ok(value(input, Some(name), count.to_string()))
        }
        Command::PathsList { dir, heights, cap } => {
            let heights = heights.0;
            let input = json!({"cap": cap, "dir": dir.label(), "heights": heights});
            let h = HeightSequence::new(dir.direction(), heights)?;
            let listing = enumerate_below(&h, cap)?;
            Ok(Outcome::Listing {
                input: Some(input),
                items: listing.items.iter().map(|s| json!(s.heights())).collect(),
                truncated: listing.truncated,
            })
        }
        Command::DimSubset {
            n,
            set,
            method,
            check,
        } => {
            let set = set.0;
            let input = json!({"n": n, "set": set});
            let s = Subset::new(n, set)?;
            let oracle = || BigInt::from(downset(&s).len());
            let (name, dim) = match method {
                MethodArg::Auto | MethodArg::Iterative => {
                    ("iterative", dim_principal_iterative(&s))
                }
                MethodArg::Determinant => ("determinant", dim_principal_incl_excl(&s)?),
                MethodArg::Oracle => ("oracle", oracle()),
            };
            if check {
                check_against(name, &dim, &oracle())?;
            }
            Ok(value(input, Some(name), dim.to_string()))
        }
        Command::DimVector {
            n,
            vector,
            method,
            check,
        } => {
            let v = ModuleVector::parse(&vector, n)?;
            let input = json!({"n": n, "vector": v.to_string()});
            let (name, dim) = match method {
                MethodArg::Auto | MethodArg::Iterative => ("iterative", dim_submodule(&v)?),
                MethodArg::Determinant => (
                    "determinant",
                    dim_submodule_by(&v, dim_principal_incl_excl)?,
                ),
                MethodArg::Oracle => ("oracle", dim_submodule_oracle(&v)?),
            };
            if check {
                check_against(name, &dim, &dim_submodule_oracle(&v)?)?;
            }
            Ok(value(input, Some(name), dim.to_string()))
        }
        Command::Reduce { n, vector } => {
            let v = ModuleVector::parse(&vector, n)?;
            let input = json!({"n": n, "vector": v.to_string()});
            let red = reduced_support(&v);
            let supp: Vec<Value> = red
                .reduced_support()
                .iter()
                .map(|s| json!(s.to_string()))
                .collect();
            let mut details = BTreeMap::new();
            details.insert("reduced_support".to_string(), Value::Array(supp));
            Ok(Outcome::Value {
                input,
                method: None,
                value: red.generator().to_string(),
                details,
            })
        }
        Command::MonoidSize { n } => {
            let size = enumerate_icn(n)?.len();
            Ok(value(json!({"n": n}), None, size.to_string()))
        }
        Command::MonoidList { n, cap } => {
            if cap == 0 {
                return Err(Failure::Domain("cap must be positive".into()));
            }
            let all = enumerate_icn(n)?;
            let truncated = all.len() > cap;
            Ok(Outcome::Listing {
                input: Some(json!({"cap": cap, "n": n})),
                items: all
                    .iter()
                    .take(cap)
                    .map(|f| json!(format_two_line(f)))
                    .collect(),
                truncated,
            })
        }
        Command::MonoidCompose { n, f, g } => {
            let fm = parse_two_line(&f, n)?;
            let gm = parse_two_line(&g, n)?;
            let h = compose(&fm, &gm)?;
            let input = json!({"f": format_two_line(&fm), "g": format_two_line(&gm), "n": n});
            let mut details = BTreeMap::new();
            details.insert("in_icn".to_string(), json!(h.is_icn()));
            Ok(Outcome::Value {
                input,
                method: None,
                value: format_two_line(&h),
                details,
            })
        }
        Command::Verify {
            identity,
            heights,
            k,
            a,
            b,
            p,
        } => {
            let missing = |flag: &str| {
                Failure::Usage(format!("--identity {} requires --{flag}", identity.label()))
            };
            let (input, check) = match identity {
                IdentityArg::Cor34 => {
                    let heights = heights.ok_or_else(|| missing("heights"))?.0;
                    let input = json!({"heights": heights, "identity": identity.label()});
                    let h = HeightSequence::decreasing(heights)?;
                    (input, verify_identity_cor34(&h)?)
                }
                IdentityArg::Cor35 => {
                    let k = k.ok_or_else(|| missing("k"))?;
                    let input = json!({"identity": identity.label(), "k": k});
                    (input, verify_identity_cor35(k)?)
                }
                IdentityArg::HockeyStick => {
                    let a = a.ok_or_else(|| missing("a"))?;
                    let b = b.ok_or_else(|| missing("b"))?;
                    let p = p.ok_or_else(|| missing("p"))?;
                    let input = json!({"a": a, "b": b, "identity": identity.label(), "p": p});
                    let (lhs, rhs) = hockey_stick_sides(a, b, p);
                    (input, IdentityCheck::new(lhs, rhs))
                }
            };
            Ok(Outcome::Identity {
                input,
                lhs: check.lhs,
                rhs: check.rhs,
                equal: check.equal,
            })
        }
    }
}
