//! Command-line front end: text parsing, solver routing and report output.
//!
//! Monoids are written as `;`-separated `x,y` pairs (`"0,1;11,10;10,3"`) and
//! vectors as a single pair (`"199,119"`); whitespace is ignored. Every query
//! is answered in the coordinates it was asked in: the target is carried
//! through the normalizing transform and factorizations are reported with
//! multiplicities in the original generator order.

use std::ffi::OsString;
use std::fmt::Write as _;

use clap::{Args, Parser, Subcommand};
use num_bigint::BigInt;
use serde_json::{json, Map, Value};

use crate::asymptotics::{rho_limit, scan_csv, scan_multiples, LimitLFT, ScanRow};
use crate::error::{Error, Result};
use crate::factorization::Factorization;
use crate::intlin::UniMat2;
use crate::monoid::{canonicalize, redundant_generator, Canonical, RawMonoid};
use crate::oracle::{elasticity_oracle, enumerate_factorizations, FactorizationSet};
use crate::ratq::{ExtRat, Vec2};
use crate::solve2::{elasticity2, member2, Membership2, Reason2};
use crate::solve3::{
    elasticity3, extreme_factorizations, member3_general, member3_star, Branch, Membership3,
    Reason3,
};

// ---------------------------------------------------------------------------
// text formats

fn syntax(offset: usize, message: impl Into<String>) -> Error {
    Error::Syntax {
        offset,
        message: message.into(),
    }
}

fn parse_uint(text: &str, base: usize) -> Result<BigInt> {
    let start = base + (text.len() - text.trim_start().len());
    let t = text.trim();
    if t.is_empty() {
        return Err(syntax(start, "expected a nonnegative integer"));
    }
    if let Some(pos) = t.find(|ch: char| !ch.is_ascii_digit()) {
        return Err(syntax(
            start + pos,
            format!("unexpected character in {t:?}"),
        ));
    }
    Ok(t.parse().expect("digits only"))
}

fn parse_pair(text: &str, base: usize) -> Result<Vec2> {
    let Some((x, y)) = text.split_once(',') else {
        return Err(syntax(
            base,
            format!("expected x,y but found {:?}", text.trim()),
        ));
    };
    let x = parse_uint(x, base)?;
    let y = parse_uint(y, base + x_len(text) + 1)?;
    Ok(Vec2::new(x, y).expect("parsed nonnegative"))
}

fn x_len(pair: &str) -> usize {
    pair.find(',').unwrap_or(pair.len())
}

/// Parses `"x,y"`.
pub fn parse_vector(text: &str) -> Result<Vec2> {
    parse_pair(text, 0)
}

/// Parses any number (at least one) of `;`-separated pairs.
pub fn parse_generators(text: &str) -> Result<Vec<Vec2>> {
    let mut gens = Vec::new();
    let mut offset = 0;
    for segment in text.split(';') {
        let g = parse_pair(segment, offset)?;
        if g.is_zero() {
            return Err(Error::ZeroGenerator);
        }
        if gens.contains(&g) {
            return Err(Error::DuplicateGenerator(g.to_string()));
        }
        gens.push(g);
        offset += segment.len() + 1;
    }
    Ok(gens)
}

/// Parses a monoid with 2 or 3 generators.
pub fn parse_monoid(text: &str) -> Result<RawMonoid> {
    RawMonoid::new(parse_generators(text)?)
}

// ---------------------------------------------------------------------------
// command line

#[derive(Debug, Parser)]
#[command(
    name = "affine-elasticity",
    version,
    about = "Membership, factorizations and elasticity in affine monoids of the plane"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: CliCommand,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct OutputArgs {
    /// Emit a JSON report.
    #[arg(long, global = true, conflicts_with = "csv")]
    pub json: bool,
    /// Emit CSV.
    #[arg(long, global = true)]
    pub csv: bool,
    /// Print decimal approximations next to exact rationals.
    #[arg(long, global = true)]
    pub approx: bool,
    /// Skip the check that no generator is redundant.
    #[arg(long = "no-minimality-check", global = true)]
    pub no_minimality_check: bool,
}

#[derive(Debug, Args)]
pub struct Target {
    /// Generators, e.g. "0,1;11,10;10,3".
    pub monoid: String,
    /// Element, e.g. "199,119".
    pub vector: String,
}

#[derive(Debug, Subcommand)]
pub enum CliCommand {
    /// Decide membership.
    Check(Target),
    /// List factorizations.
    Factorize {
        #[command(flatten)]
        target: Target,
        /// Every factorization (default).
        #[arg(long, conflicts_with = "extremes")]
        all: bool,
        /// Only the shortest and longest factorizations.
        #[arg(long)]
        extremes: bool,
    },
    /// Elasticity max L(s) / min L(s).
    Elasticity(Target),
    /// Limit of the elasticity of k*s as k grows.
    Limit(Target),
    /// Exact elasticity of k*s for k = 1..=N next to the limit.
    Scan {
        #[command(flatten)]
        target: Target,
        #[arg(long = "k-max")]
        k_max: u64,
    },
    /// Brute-force enumeration over any number of generators.
    Oracle(Target),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Command {
    Check,
    Factorize,
    Elasticity,
    Limit,
    Scan,
    Oracle,
}

impl Command {
    pub fn as_str(&self) -> &'static str {
        match self {
            Command::Check => "check",
            Command::Factorize => "factorize",
            Command::Elasticity => "elasticity",
            Command::Limit => "limit",
            Command::Scan => "scan",
            Command::Oracle => "oracle",
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Format {
    #[default]
    Text,
    Json,
    Csv,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Options {
    pub k_max: u64,
    pub extremes_only: bool,
    pub format: Format,
    pub approx: bool,
    pub check_minimality: bool,
}

impl Default for Options {
    fn default() -> Self {
        Options {
            k_max: 1,
            extremes_only: false,
            format: Format::Text,
            approx: false,
            check_minimality: true,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Query {
    pub command: Command,
    pub monoid_text: String,
    pub vector_text: String,
    pub options: Options,
}

impl Query {
    pub fn new(command: Command, monoid: &str, vector: &str) -> Query {
        Query {
            command,
            monoid_text: monoid.to_string(),
            vector_text: vector.to_string(),
            options: Options::default(),
        }
    }

    pub fn from_cli(cli: Cli) -> Query {
        let mut options = Options {
            approx: cli.output.approx,
            check_minimality: !cli.output.no_minimality_check,
            format: if cli.output.json {
                Format::Json
            } else if cli.output.csv {
                Format::Csv
            } else {
                Format::Text
            },
            ..Options::default()
        };
        let (command, target) = match cli.command {
            CliCommand::Check(t) => (Command::Check, t),
            CliCommand::Factorize {
                target, extremes, ..
            } => {
                options.extremes_only = extremes;
                (Command::Factorize, target)
            }
            CliCommand::Elasticity(t) => (Command::Elasticity, t),
            CliCommand::Limit(t) => (Command::Limit, t),
            CliCommand::Scan { target, k_max } => {
                options.k_max = k_max;
                (Command::Scan, target)
            }
            CliCommand::Oracle(t) => (Command::Oracle, t),
        };
        Query {
            command,
            monoid_text: target.monoid,
            vector_text: target.vector,
            options,
        }
    }
}

// ---------------------------------------------------------------------------
// reports

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Solver {
    Dim2Theorem,
    Dim3StarTheorem,
    Dim3General,
    Oracle,
}

impl Solver {
    pub fn as_str(&self) -> &'static str {
        match self {
            Solver::Dim2Theorem => "dim2-theorem",
            Solver::Dim3StarTheorem => "dim3-star-theorem",
            Solver::Dim3General => "dim3-general",
            Solver::Oracle => "oracle",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonoidInfo {
    pub generators: Vec<Vec2>,
    pub canonical: Vec<Vec2>,
    pub star: Option<bool>,
    pub transform: UniMat2,
    /// `order[i]` is the input position of canonical generator `i`.
    pub order: Vec<usize>,
    /// The query vector in canonical coordinates, if it stays in the quadrant.
    pub image: Option<Vec2>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    Membership {
        member: bool,
        reason: Option<&'static str>,
        factorization: Option<Factorization>,
    },
    Factorizations {
        all: Vec<Factorization>,
    },
    Extremes {
        shortest: Factorization,
        longest: Factorization,
        t_max: Option<BigInt>,
        branch: Option<Branch>,
    },
    Elasticity {
        value: ExtRat,
        min_length: BigInt,
        max_length: BigInt,
    },
    Limit {
        value: ExtRat,
        lft: LimitLFT,
        branch: Branch,
    },
    Scan {
        rows: Vec<ScanRow>,
    },
    Oracle {
        set: FactorizationSet,
        elasticity: Option<ExtRat>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Report {
    pub command: Command,
    pub monoid: MonoidInfo,
    pub input: Vec2,
    pub solver_used: Solver,
    pub result: Outcome,
}

impl Report {
    pub fn exit_code(&self) -> i32 {
        match &self.result {
            Outcome::Membership { member: false, .. } => 1,
            Outcome::Factorizations { all } if all.is_empty() => 1,
            Outcome::Oracle { set, .. } if !set.is_member() => 1,
            _ => 0,
        }
    }

    pub fn is_member(&self) -> Option<bool> {
        match &self.result {
            Outcome::Membership { member, .. } => Some(*member),
            Outcome::Factorizations { all } => Some(!all.is_empty()),
            Outcome::Oracle { set, .. } => Some(set.is_member()),
            Outcome::Extremes { .. }
            | Outcome::Elasticity { .. }
            | Outcome::Limit { .. }
            | Outcome::Scan { .. } => Some(true),
        }
    }

    pub fn elasticity(&self) -> Option<&ExtRat> {
        match &self.result {
            Outcome::Elasticity { value, .. } | Outcome::Limit { value, .. } => Some(value),
            Outcome::Oracle { elasticity, .. } => elasticity.as_ref(),
            _ => None,
        }
    }
}

/// Exit code for a failed query: 1 when the failure is non-membership, 2
/// for anything about the input itself.
pub fn error_exit_code(e: &Error) -> i32 {
    match e {
        Error::NotMember => 1,
        _ => 2,
    }
}

// ---------------------------------------------------------------------------
// routing

fn reason2(r: Reason2) -> &'static str {
    match r {
        Reason2::PhiOutOfRange => "PhiOutOfRange",
        Reason2::DivisibilityFails => "DivisibilityFails",
    }
}

fn reason3(r: Reason3) -> &'static str {
    match r {
        Reason3::PhiOutOfRange => "PhiOutOfRange",
        Reason3::XNotRepresentable => "XNotRepresentable",
    }
}

fn not_member(reason: &'static str) -> Outcome {
    Outcome::Membership {
        member: false,
        reason: Some(reason),
        factorization: None,
    }
}

/// Answers a query. Errors are input problems, or non-membership for
/// commands that need a member.
pub fn run(query: &Query) -> Result<Report> {
    let s = parse_vector(&query.vector_text)?;
    if query.command == Command::Oracle {
        return run_oracle(query, s);
    }

    let raw = parse_monoid(&query.monoid_text)?;
    let canon = canonicalize(&raw)?;
    if query.options.check_minimality {
        if let Some(g) = redundant_generator(&canon) {
            let original = canon.transform().inverse().apply_vec(&g).unwrap_or(g);
            return Err(Error::NotMinimallyGenerated(original.to_string()));
        }
    }
    let image = canon.to_canonical(&s);
    let monoid = MonoidInfo {
        generators: raw.gens().to_vec(),
        canonical: canon.generators(),
        star: canon.star(),
        transform: canon.transform().clone(),
        order: canon.order().to_vec(),
        image: image.clone(),
    };
    let positions = canon.original_positions();
    let to_input_order = |f: Factorization| f.permuted(&positions);

    let (solver_used, result) = match (&canon, image) {
        (Canonical::Dim2(_), None) => (Solver::Dim2Theorem, None),
        (Canonical::Dim3(m), None) => (
            if m.star() {
                Solver::Dim3StarTheorem
            } else {
                Solver::Dim3General
            },
            None,
        ),
        (Canonical::Dim2(m), Some(t)) => {
            let r = match query.command {
                Command::Check | Command::Factorize => match member2(m, &t) {
                    Membership2::Member(f) if query.command == Command::Check => {
                        Outcome::Membership {
                            member: true,
                            reason: None,
                            factorization: Some(to_input_order(f)),
                        }
                    }
                    Membership2::Member(f) if query.options.extremes_only => {
                        let f = to_input_order(f);
                        Outcome::Extremes {
                            shortest: f.clone(),
                            longest: f,
                            t_max: None,
                            branch: None,
                        }
                    }
                    Membership2::Member(f) => Outcome::Factorizations {
                        all: vec![to_input_order(f)],
                    },
                    Membership2::NotMember(r) => not_member(reason2(r)),
                },
                Command::Elasticity => {
                    let value = elasticity2(m, &t)?;
                    let Membership2::Member(f) = member2(m, &t) else {
                        unreachable!("elasticity2 succeeded")
                    };
                    Outcome::Elasticity {
                        value,
                        min_length: f.length().clone(),
                        max_length: f.length().clone(),
                    }
                }
                Command::Limit | Command::Scan => return Err(Error::StarRequired),
                Command::Oracle => unreachable!(),
            };
            (Solver::Dim2Theorem, Some(r))
        }
        (Canonical::Dim3(m), Some(t)) if m.star() => {
            let r = match query.command {
                Command::Check => match member3_star(m, &t)? {
                    Membership3::Member(f) => Outcome::Membership {
                        member: true,
                        reason: None,
                        factorization: Some(to_input_order(f)),
                    },
                    Membership3::NotMember(r) => not_member(reason3(r)),
                },
                Command::Factorize if query.options.extremes_only => match member3_star(m, &t)? {
                    Membership3::NotMember(r) => not_member(reason3(r)),
                    Membership3::Member(f) if t.is_zero() => Outcome::Extremes {
                        shortest: to_input_order(f.clone()),
                        longest: to_input_order(f),
                        t_max: None,
                        branch: None,
                    },
                    Membership3::Member(_) => {
                        let e = extreme_factorizations(m, &t)?;
                        Outcome::Extremes {
                            shortest: to_input_order(e.shortest().clone()),
                            longest: to_input_order(e.longest().clone()),
                            t_max: Some(e.t_max.clone()),
                            branch: Some(e.branch),
                        }
                    }
                },
                Command::Factorize => {
                    // the full list is the general walk; it is exact with or
                    // without bc - ad = 1
                    let all = member3_general(m, &t);
                    let r = Outcome::Factorizations {
                        all: all.into_iter().map(to_input_order).collect(),
                    };
                    return Ok(Report {
                        command: query.command,
                        monoid,
                        input: s,
                        solver_used: Solver::Dim3General,
                        result: r,
                    });
                }
                Command::Elasticity => {
                    let e = extreme_factorizations(m, &t)?;
                    Outcome::Elasticity {
                        value: elasticity3(m, &t)?,
                        min_length: e.min_length().clone(),
                        max_length: e.max_length().clone(),
                    }
                }
                Command::Limit => {
                    let (lft, value) = rho_limit(m, &t)?;
                    Outcome::Limit {
                        value,
                        lft,
                        branch: Branch::of(m, &t),
                    }
                }
                Command::Scan => Outcome::Scan {
                    rows: scan_multiples(m, &t, query.options.k_max)?,
                },
                Command::Oracle => unreachable!(),
            };
            (Solver::Dim3StarTheorem, Some(r))
        }
        (Canonical::Dim3(m), Some(t)) => match query.command {
            Command::Check | Command::Factorize => {
                let all: Vec<Factorization> = member3_general(m, &t)
                    .into_iter()
                    .map(to_input_order)
                    .collect();
                let r = if all.is_empty() {
                    not_member("NoFactorization")
                } else if query.command == Command::Check {
                    Outcome::Membership {
                        member: true,
                        reason: None,
                        factorization: all.first().cloned(),
                    }
                } else if query.options.extremes_only {
                    let shortest = all.iter().min_by_key(|f| f.length().clone()).unwrap();
                    let longest = all.iter().max_by_key(|f| f.length().clone()).unwrap();
                    Outcome::Extremes {
                        shortest: shortest.clone(),
                        longest: longest.clone(),
                        t_max: None,
                        branch: None,
                    }
                } else {
                    Outcome::Factorizations { all }
                };
                (Solver::Dim3General, Some(r))
            }
            Command::Elasticity => {
                let gens = m.generators();
                let value = elasticity_oracle(&gens, &t)?;
                let set = enumerate_factorizations(&gens, &t)?;
                let r = Outcome::Elasticity {
                    value,
                    min_length: set.lengths.first().cloned().unwrap_or_default(),
                    max_length: set.lengths.last().cloned().unwrap_or_default(),
                };
                (Solver::Oracle, Some(r))
            }
            Command::Limit | Command::Scan => return Err(Error::StarRequired),
            Command::Oracle => unreachable!(),
        },
    };

    let result = match result {
        Some(r) => r,
        // the image left the quadrant: outside the cone of the generators
        None => match query.command {
            Command::Check | Command::Factorize => not_member("PhiOutOfRange"),
            Command::Limit | Command::Scan if canon.star() != Some(true) => {
                return Err(Error::StarRequired)
            }
            _ => return Err(Error::NotMember),
        },
    };
    Ok(Report {
        command: query.command,
        monoid,
        input: s,
        solver_used,
        result,
    })
}

fn run_oracle(query: &Query, s: Vec2) -> Result<Report> {
    let gens = parse_generators(&query.monoid_text)?;
    let set = enumerate_factorizations(&gens, &s)?;
    let elasticity = if set.is_member() && !s.is_zero() {
        Some(elasticity_oracle(&gens, &s)?)
    } else {
        None
    };
    let n = gens.len();
    Ok(Report {
        command: Command::Oracle,
        monoid: MonoidInfo {
            canonical: gens.clone(),
            generators: gens,
            star: None,
            transform: UniMat2::identity(),
            order: (0..n).collect(),
            image: Some(s.clone()),
        },
        input: s,
        solver_used: Solver::Oracle,
        result: Outcome::Oracle { set, elasticity },
    })
}

// ---------------------------------------------------------------------------
// rendering

/// Exact integers as JSON numbers of any size.
fn int(n: &BigInt) -> Value {
    Value::Number(n.to_string().parse().expect("decimal integer"))
}

fn vec_json(v: &Vec2) -> Value {
    json!([int(v.x()), int(v.y())])
}

fn fact_json(f: &Factorization) -> Value {
    json!({
        "mults": f.mults().iter().map(int).collect::<Vec<_>>(),
        "length": int(f.length()),
    })
}

fn rat_json(obj: &mut Map<String, Value>, key: &str, r: &ExtRat, approx: bool) {
    obj.insert(key.to_string(), Value::String(r.to_string()));
    if approx {
        obj.insert(format!("{key}_approx"), json!(r.to_f64()));
    }
}

fn transform_json(u: &UniMat2) -> Value {
    Value::Array(
        u.rows()
            .iter()
            .map(|row| Value::Array(row.iter().map(int).collect()))
            .collect(),
    )
}

pub fn report_json(report: &Report, approx: bool) -> Value {
    let m = &report.monoid;
    let mut result = Map::new();
    match &report.result {
        Outcome::Membership {
            member,
            reason,
            factorization,
        } => {
            result.insert("verdict".into(), json!(verdict(*member)));
            if let Some(r) = reason {
                result.insert("reason".into(), json!(r));
            }
            if let Some(f) = factorization {
                result.insert("factorization".into(), fact_json(f));
            }
        }
        Outcome::Factorizations { all } => {
            result.insert("verdict".into(), json!(verdict(!all.is_empty())));
            result.insert(
                "factorizations".into(),
                Value::Array(all.iter().map(fact_json).collect()),
            );
            let mut lengths: Vec<&BigInt> = all.iter().map(|f| f.length()).collect();
            lengths.sort();
            result.insert(
                "lengths".into(),
                Value::Array(lengths.into_iter().map(int).collect()),
            );
        }
        Outcome::Extremes {
            shortest,
            longest,
            t_max,
            branch,
        } => {
            result.insert("verdict".into(), json!("member"));
            result.insert("shortest".into(), fact_json(shortest));
            result.insert("longest".into(), fact_json(longest));
            if let Some(t) = t_max {
                result.insert("t_max".into(), int(t));
            }
            if let Some(b) = branch {
                result.insert("branch".into(), json!(b.as_str()));
            }
        }
        Outcome::Elasticity {
            value,
            min_length,
            max_length,
        } => {
            result.insert("verdict".into(), json!("member"));
            rat_json(&mut result, "elasticity", value, approx);
            result.insert("min_length".into(), int(min_length));
            result.insert("max_length".into(), int(max_length));
        }
        Outcome::Limit { value, lft, branch } => {
            result.insert("verdict".into(), json!("member"));
            rat_json(&mut result, "limit", value, approx);
            result.insert("tau".into(), json!(lft.tau));
            result.insert("branch".into(), json!(branch.as_str()));
            result.insert(
                "lft".into(),
                json!({
                    "num_x": int(&lft.num_x),
                    "num_y": int(&lft.num_y),
                    "den_x": int(&lft.den_x),
                    "den_y": int(&lft.den_y),
                }),
            );
        }
        Outcome::Scan { rows } => {
            let rows: Vec<Value> = rows
                .iter()
                .map(|r| {
                    let mut o = Map::new();
                    o.insert("k".into(), json!(r.k));
                    rat_json(&mut o, "rho_exact", &r.rho_exact, approx);
                    rat_json(&mut o, "rho_limit", &r.rho_limit, approx);
                    rat_json(&mut o, "gap", &r.gap, approx);
                    Value::Object(o)
                })
                .collect();
            result.insert("rows".into(), Value::Array(rows));
        }
        Outcome::Oracle { set, elasticity } => {
            result.insert("verdict".into(), json!(verdict(set.is_member())));
            result.insert(
                "factorizations".into(),
                Value::Array(set.facts.iter().map(fact_json).collect()),
            );
            result.insert(
                "lengths".into(),
                Value::Array(set.lengths.iter().map(int).collect()),
            );
            if let Some(e) = elasticity {
                rat_json(&mut result, "elasticity", e, approx);
            }
        }
    }
    json!({
        "command": report.command.as_str(),
        "monoid": {
            "generators": m.generators.iter().map(vec_json).collect::<Vec<_>>(),
            "canonical": m.canonical.iter().map(vec_json).collect::<Vec<_>>(),
            "star": m.star,
            "transform": transform_json(&m.transform),
            "order": m.order,
            "image": m.image.as_ref().map(vec_json),
        },
        "input": vec_json(&report.input),
        "result": Value::Object(result),
        "solver_used": report.solver_used.as_str(),
    })
}

pub fn error_json(command: Option<Command>, e: &Error) -> Value {
    json!({
        "command": command.map(|c| c.as_str()),
        "error": { "code": e.code(), "message": e.to_string() },
    })
}

fn verdict(member: bool) -> &'static str {
    if member {
        "member"
    } else {
        "not_member"
    }
}

fn rat_text(r: &ExtRat, approx: bool) -> String {
    if approx {
        format!("{r} (~{:.6})", r.to_f64())
    } else {
        r.to_string()
    }
}

fn mults_text(f: &Factorization) -> String {
    let parts: Vec<String> = f.mults().iter().map(ToString::to_string).collect();
    parts.join(",")
}

pub fn report_text(report: &Report, approx: bool) -> String {
    let m = &report.monoid;
    let mut out = String::new();
    let gens: Vec<String> = m.generators.iter().map(|g| format!("({g})")).collect();
    let canon: Vec<String> = m.canonical.iter().map(|g| format!("({g})")).collect();
    writeln!(out, "monoid: {}", gens.join(" ")).unwrap();
    if report.command != Command::Oracle {
        writeln!(out, "canonical: {}", canon.join(" ")).unwrap();
        if !m.transform.is_identity() {
            writeln!(out, "transform: {}", m.transform).unwrap();
        }
        if let Some(star) = m.star {
            writeln!(out, "bc-ad=1: {}", if star { "yes" } else { "no" }).unwrap();
        }
    }
    writeln!(out, "input: ({})", report.input).unwrap();
    writeln!(out, "solver: {}", report.solver_used.as_str()).unwrap();
    match &report.result {
        Outcome::Membership {
            member,
            reason,
            factorization,
        } => {
            writeln!(out, "verdict: {}", verdict(*member)).unwrap();
            if let Some(r) = reason {
                writeln!(out, "reason: {r}").unwrap();
            }
            if let Some(f) = factorization {
                writeln!(out, "factorization: {f}").unwrap();
            }
        }
        Outcome::Factorizations { all } => {
            writeln!(out, "verdict: {}", verdict(!all.is_empty())).unwrap();
            for f in all {
                writeln!(out, "factorization: {f}").unwrap();
            }
        }
        Outcome::Extremes {
            shortest,
            longest,
            t_max,
            branch,
        } => {
            writeln!(out, "shortest: {shortest}").unwrap();
            writeln!(out, "longest: {longest}").unwrap();
            if let (Some(t), Some(b)) = (t_max, branch) {
                writeln!(out, "t_max: {t} ({} the middle slope)", b.as_str()).unwrap();
            }
        }
        Outcome::Elasticity {
            value,
            min_length,
            max_length,
        } => {
            writeln!(out, "lengths: {min_length}..{max_length}").unwrap();
            writeln!(out, "elasticity: {}", rat_text(value, approx)).unwrap();
        }
        Outcome::Limit { value, lft, branch } => {
            writeln!(out, "branch: {} the middle slope", branch.as_str()).unwrap();
            writeln!(out, "map: {lft}").unwrap();
            writeln!(out, "limit: {}", rat_text(value, approx)).unwrap();
        }
        Outcome::Scan { rows } => {
            for r in rows {
                writeln!(
                    out,
                    "k={} rho={} limit={} gap={}",
                    r.k,
                    rat_text(&r.rho_exact, approx),
                    rat_text(&r.rho_limit, approx),
                    rat_text(&r.gap, approx)
                )
                .unwrap();
            }
        }
        Outcome::Oracle { set, elasticity } => {
            writeln!(out, "verdict: {}", verdict(set.is_member())).unwrap();
            for f in &set.facts {
                writeln!(out, "factorization: {f}").unwrap();
            }
            if let Some(e) = elasticity {
                writeln!(out, "elasticity: {}", rat_text(e, approx)).unwrap();
            }
        }
    }
    out
}

pub fn report_csv(report: &Report) -> String {
    let mut out = String::new();
    match &report.result {
        Outcome::Scan { rows } => return scan_csv(rows),
        Outcome::Factorizations { all } => {
            out.push_str("mults,length\n");
            for f in all {
                writeln!(out, "\"{}\",{}", mults_text(f), f.length()).unwrap();
            }
        }
        Outcome::Oracle { set, .. } => {
            out.push_str("mults,length\n");
            for f in &set.facts {
                writeln!(out, "\"{}\",{}", mults_text(f), f.length()).unwrap();
            }
        }
        Outcome::Extremes {
            shortest, longest, ..
        } => {
            out.push_str("which,mults,length\n");
            writeln!(
                out,
                "shortest,\"{}\",{}",
                mults_text(shortest),
                shortest.length()
            )
            .unwrap();
            writeln!(
                out,
                "longest,\"{}\",{}",
                mults_text(longest),
                longest.length()
            )
            .unwrap();
        }
        Outcome::Membership {
            member,
            reason,
            factorization,
        } => {
            out.push_str("verdict,reason,mults\n");
            writeln!(
                out,
                "{},{},\"{}\"",
                verdict(*member),
                reason.unwrap_or(""),
                factorization.as_ref().map(mults_text).unwrap_or_default()
            )
            .unwrap();
        }
        Outcome::Elasticity {
            value,
            min_length,
            max_length,
        } => {
            out.push_str("elasticity,min_length,max_length\n");
            writeln!(out, "{value},{min_length},{max_length}").unwrap();
        }
        Outcome::Limit { value, lft, branch } => {
            out.push_str("limit,tau,branch\n");
            writeln!(out, "{value},{},{}", lft.tau, branch.as_str()).unwrap();
        }
    }
    out
}

pub fn render(report: &Report, options: &Options) -> String {
    match options.format {
        Format::Text => report_text(report, options.approx),
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&report_json(report, options.approx))
                .expect("json values serialize");
            s.push('\n');
            s
        }
        Format::Csv => report_csv(report),
    }
}

/// What one invocation printed and how it exited.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Invocation {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Parses arguments, answers the query and renders it.
pub fn execute<I, T>(args: I) -> Invocation
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let (stdout, stderr) = if code == 0 {
                (text, String::new())
            } else {
                (String::new(), text)
            };
            return Invocation {
                code,
                stdout,
                stderr,
            };
        }
    };
    let query = Query::from_cli(cli);
    match run(&query) {
        Ok(report) => Invocation {
            code: report.exit_code(),
            stdout: render(&report, &query.options),
            stderr: String::new(),
        },
        Err(e) => {
            let code = error_exit_code(&e);
            if query.options.format == Format::Json {
                let mut stdout = serde_json::to_string_pretty(&error_json(Some(query.command), &e))
                    .expect("json values serialize");
                stdout.push('\n');
                Invocation {
                    code,
                    stdout,
                    stderr: String::new(),
                }
            } else {
                Invocation {
                    code,
                    stdout: String::new(),
                    stderr: format!("error [{}]: {e}\n", e.code()),
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratq::vec2;

    #[test]
    fn parse_monoid_examples() {
        assert_eq!(parse_monoid("0,1;11,10;10,3").unwrap().gens().len(), 3);
        assert_eq!(
            parse_monoid("0,1 ; 3,2").unwrap().gens(),
            &[vec2(0, 1), vec2(3, 2)]
        );
        assert_eq!(parse_monoid("0,0;1,1"), Err(Error::ZeroGenerator));
        assert!(matches!(
            parse_monoid("1,1;1,1"),
            Err(Error::DuplicateGenerator(_))
        ));
    }

    #[test]
    fn syntax_errors_are_positional() {
        let offset = |text: &str| match parse_generators(text) {
            Err(Error::Syntax { offset, .. }) => offset,
            other => panic!("{other:?}"),
        };
        assert_eq!(offset("0,1;1x,2"), 5);
        assert_eq!(offset("0,1;;1,2"), 4);
        assert_eq!(offset("0,1;3,-2"), 6);
        assert_eq!(offset(" 7 "), 0);
        assert_eq!(offset("0,1; 2,"), 7);
    }

    #[test]
    fn parse_vector_examples() {
        assert_eq!(parse_vector(" 199 , 119 ").unwrap(), vec2(199, 119));
        assert!(parse_vector("199").is_err());
        assert_eq!("6,13".parse::<Vec2>().unwrap(), vec2(6, 13));
    }

    #[test]
    fn routes_and_exit_codes() {
        let r = run(&Query::new(Command::Check, "0,1;11,10;10,3", "199,119")).unwrap();
        assert_eq!(r.solver_used, Solver::Dim3General);
        assert_eq!(r.exit_code(), 1);

        let r = run(&Query::new(Command::Elasticity, "0,1;1,2;3,5", "6,13")).unwrap();
        assert_eq!(r.solver_used, Solver::Dim3StarTheorem);
        assert_eq!(r.elasticity(), Some(&ExtRat::new(7, 5).unwrap()));
        assert_eq!(r.exit_code(), 0);

        let r = run(&Query::new(Command::Check, "0,1;3,2", "6,5")).unwrap();
        assert_eq!(r.solver_used, Solver::Dim2Theorem);

        let e = run(&Query::new(Command::Limit, "0,1;11,10;10,3", "199,120")).unwrap_err();
        assert_eq!(e, Error::StarRequired);
        assert_eq!(error_exit_code(&e), 2);

        let e = run(&Query::new(Command::Elasticity, "0,1;1,2;3,5", "6,9")).unwrap_err();
        assert_eq!(error_exit_code(&e), 1);
    }

    #[test]
    fn strict_minimality() {
        let e = run(&Query::new(Command::Check, "0,1;1,2;1,1", "2,3")).unwrap_err();
        assert!(matches!(e, Error::NotMinimallyGenerated(_)));
        let mut q = Query::new(Command::Check, "0,1;1,2;1,1", "2,3");
        q.options.check_minimality = false;
        assert!(run(&q).is_ok());
    }

    #[test]
    fn outside_cone_after_transform() {
        // (2,1),(3,1) normalizes with a shear; (1,5) maps to (-9, 5)
        let r = run(&Query::new(Command::Check, "2,1;3,1", "1,5")).unwrap();
        assert_eq!(r.monoid.image, None);
        assert_eq!(r.is_member(), Some(false));
    }
}
