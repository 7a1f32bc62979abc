//! Command-line front end: `generate`, `compute`, `verify` and `report`.

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use crate::arith::{self, Rational};
use crate::error::{Error, Result};
use crate::flag::{self, FlagVector};
use crate::laurent::LaurentPoly;
use crate::nc::{self, NCPoly};
use crate::poset::{self, Poset};
use crate::toric;
use crate::verify::{self, Suite};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "toric-poset", version, about = "Flag vectors, cd-index and toric polynomials of graded posets")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Table,
}

#[derive(Debug, Args)]
pub struct Common {
    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "json", global = true)]
    pub format: Format,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Emit a poset from a named family as JSON.
    Generate {
        /// boolean, cube, crosspolytope, polygon, chain, or dual-of:<file>
        family: String,
        param: Option<u32>,
        #[command(flatten)]
        common: Common,
    },
    /// Compute invariants of a poset.
    Compute {
        /// A poset file or a family shorthand such as `cube3`.
        target: Option<String>,
        /// Any of flag-f, flag-h, flag-L, ab-index, cd-index, toric-f,
        /// toric-g, toric-h, st, f-vector.
        what: Vec<String>,
        #[arg(long)]
        input: Option<PathBuf>,
        /// Refuse posets of larger rank.
        #[arg(long)]
        max_rank: Option<u32>,
        #[command(flatten)]
        common: Common,
    },
    /// Run a verification suite; exits 1 if any identity fails.
    Verify {
        suite: Option<String>,
        max_n: Option<u32>,
        #[arg(long = "suite", id = "suite_flag")]
        suite_flag: Option<String>,
        /// Size parameter of the suite.
        #[arg(long)]
        max_rank: Option<u32>,
        #[command(flatten)]
        common: Common,
    },
    /// Structural summary of a poset with every invariant that applies.
    Report {
        target: Option<String>,
        #[arg(long)]
        input: Option<PathBuf>,
        #[arg(long)]
        max_rank: Option<u32>,
        #[command(flatten)]
        common: Common,
    },
}

/// Parses `args` and runs; returns the process exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
        }
    };
    match run(&cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            EXIT_INPUT
        }
    }
}

/// Executes a parsed command, writing its output.
pub fn run(cmd: &Command) -> Result<i32> {
    let (out, common, code) = match cmd {
        Command::Generate { family, param, common } => {
            let p = generate(family, *param)?;
            let text = match common.format {
                Format::Json => render_json(&p.to_json()),
                Format::Table => poset_table(&p),
            };
            (text, common, EXIT_OK)
        }
        Command::Compute { target, what, input, max_rank, common } => {
            // With --input every positional names an invariant.
            let (target, mut what): (Option<&str>, Vec<&str>) = match input {
                Some(_) => (None, target.iter().chain(what).map(String::as_str).collect()),
                None => (target.as_deref(), what.iter().map(String::as_str).collect()),
            };
            let p = load_target(target, input.as_deref(), *max_rank)?;
            if what.is_empty() {
                what.push("st");
            }
            let v = compute(&p, &what)?;
            (format_value(&v, common.format), common, EXIT_OK)
        }
        Command::Verify { suite, max_n, suite_flag, max_rank, common } => {
            let name = suite_flag.as_deref().or(suite.as_deref()).unwrap_or("all");
            let suite = Suite::from_str(name)?;
            let report = verify::run(suite, max_rank.or(*max_n))?;
            let text = match common.format {
                Format::Json => render_json(&report.to_json()),
                Format::Table => verify_table(&report),
            };
            let code = if report.passed() { EXIT_OK } else { EXIT_VERIFY_FAILED };
            (text, common, code)
        }
        Command::Report { target, input, max_rank, common } => {
            let p = load_target(target.as_deref(), input.as_deref(), *max_rank)?;
            (format_value(&report(&p), common.format), common, EXIT_OK)
        }
    };
    emit(&out, common.output.as_deref())?;
    Ok(code)
}

fn emit(text: &str, path: Option<&Path>) -> Result<()> {
    let res = match path {
        Some(p) => fs::write(p, text),
        None => io::stdout().lock().write_all(text.as_bytes()),
    };
    res.map_err(|e| Error::Input(format!("cannot write output: {e}")))
}

/// Pretty JSON with a trailing newline; object keys are already sorted.
pub fn render_json(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values serialise");
    s.push('\n');
    s
}

/// Builds a family member, e.g. `("cube", Some(3))`, or the dual of a poset
/// file via `dual-of:<file>`.
pub fn generate(family: &str, param: Option<u32>) -> Result<Poset> {
    if let Some(path) = family.strip_prefix("dual-of:") {
        return read_poset(Path::new(path))?.dual();
    }
    let need = |what: &str| param.ok_or_else(|| Error::Input(format!("family `{what}` needs a size parameter")));
    match family {
        "boolean" => poset::boolean_algebra(need(family)?),
        "cube" => poset::cube_lattice(need(family)?),
        "crosspolytope" | "cross-polytope" => poset::cross_polytope_lattice(need(family)?),
        "polygon" => poset::polygon_lattice(need(family)?),
        "chain" => poset::chain(need(family)?),
        other => Err(Error::Input(format!("unknown family `{other}`"))),
    }
}

/// Splits `cube3` into `("cube", 3)`.
fn parse_shorthand(s: &str) -> Option<(&str, u32)> {
    let digits = s.find(|c: char| c.is_ascii_digit())?;
    let (fam, num) = s.split_at(digits);
    Some((fam, num.parse().ok()?))
}

pub fn read_poset(path: &Path) -> Result<Poset> {
    let text = fs::read_to_string(path).map_err(|e| Error::Input(format!("cannot read {}: {e}", path.display())))?;
    let v: Value = serde_json::from_str(&text).map_err(|e| Error::Input(format!("{}: {e}", path.display())))?;
    Poset::from_json(&v)
}

fn load_target(target: Option<&str>, input: Option<&Path>, max_rank: Option<u32>) -> Result<Poset> {
    let p = match (input, target) {
        (Some(path), _) => read_poset(path)?,
        (None, Some(t)) if Path::new(t).is_file() => read_poset(Path::new(t))?,
        (None, Some(t)) => match parse_shorthand(t) {
            Some((fam, n)) => generate(fam, Some(n))?,
            None => generate(t, None)?,
        },
        (None, None) => return Err(Error::Input("no poset given; pass a file, a family like cube3, or --input".into())),
    };
    if let Some(m) = max_rank {
        if p.max_rank() > m {
            return Err(Error::ParameterOutOfRange(format!("poset has rank {} > --max-rank {m}", p.max_rank())));
        }
    }
    Ok(p)
}

/// Integer coefficients as numbers, others as `[num, den]`.
fn coeff_json(c: &Rational) -> Value {
    match arith::to_integer(c) {
        Some(i) => arith::int_to_json(&i),
        None => arith::rational_to_json(c),
    }
}

fn nc_json(p: &NCPoly) -> Value {
    Value::Object(p.terms().map(|(w, c)| (w.to_string(), coeff_json(c))).collect())
}

fn flag_json(f: &FlagVector) -> Value {
    let values: Map<String, Value> = (0..=f.full_set())
        .map(|s| (verify::set_string(s), coeff_json(f.get(s))))
        .collect();
    json!({ "n": f.n(), "values": values })
}

fn ints_json(v: &[num_bigint::BigInt]) -> Value {
    Value::Array(v.iter().map(arith::int_to_json).collect())
}

/// Evaluates each requested invariant of `p`.
pub fn compute(p: &Poset, what: &[&str]) -> Result<Value> {
    let mut out = Map::new();
    for &w in what {
        let v = match w {
            "flag-f" => flag_json(&flag::flag_f(p)?),
            "flag-h" => flag_json(&flag::h_from_f(&flag::flag_f(p)?)?),
            "flag-L" | "flag-l" => flag_json(&flag::l_from_f(&flag::flag_f(p)?)?),
            "ab-index" => nc_json(&nc::ab_index_of(p)?),
            "cd-index" => nc_json(&nc::cd_index(p)?),
            "toric-f" => toric::stanley_f_g(p)?.f.to_json(),
            "toric-g" => toric::stanley_f_g(p)?.g.to_json(),
            "toric-h" => ints_json(&toric::toric_h_vector(&toric::stanley_f_g(p)?)),
            "st" => toric::short_toric(p)?.poly.to_json(),
            "f-vector" => json!(p.f_vector().entries),
            other => return Err(Error::Input(format!("unknown invariant `{other}`"))),
        };
        out.insert(w.to_string(), v);
    }
    Ok(Value::Object(out))
}

/// Structure of `p` plus every invariant that applies, each tagged with the
/// route that produced it.
pub fn report(p: &Poset) -> Value {
    let graded = p.is_graded();
    let eulerian = p.is_eulerian();
    let mut v = json!({
        "elements": p.len(),
        "f_vector": p.f_vector().entries,
        "max_rank": p.max_rank(),
        "longest_chain": p.max_rank(),
        "rank_gaps": Vec::<u32>::new(),
        "graded": graded,
        "eulerian": eulerian,
        "lower_eulerian": p.is_lower_eulerian(),
        "simplicial": p.is_simplicial().unwrap_or(false),
        "dual_simplicial": p.is_dual_simplicial().unwrap_or(false),
    });
    if let Some((u, w)) = p.eulerian_witness() {
        v["eulerian_witness"] = json!([p.name(u), p.name(w)]);
    }
    let mut inv = Map::new();
    if let Ok(st) = toric::short_toric(p) {
        inv.insert("st".into(), json!({ "route": "rank recurrence", "n": st.n, "value": st.poly.to_json() }));
    }
    if eulerian {
        if let Ok(phi) = nc::cd_index(p) {
            inv.insert("cd-index".into(), json!({ "route": "flag h-vector rewriting", "value": nc_json(&phi) }));
        }
        if let Ok(pair) = toric::stanley_f_g(p) {
            inv.insert("toric-f".into(), json!({ "route": "intertwined f/g recurrence", "n": pair.n, "value": pair.f.to_json() }));
            inv.insert("toric-g".into(), json!({ "route": "intertwined f/g recurrence", "value": pair.g.to_json() }));
            inv.insert("toric-h".into(), json!({ "route": "intertwined f/g recurrence", "value": ints_json(&toric::toric_h_vector(&pair)) }));
        }
    } else if let Ok(f) = toric::f_lower_eulerian(p) {
        inv.insert("toric-f".into(), json!({ "route": "lower Eulerian sum over elements", "value": f.to_json() }));
    }
    v["invariants"] = Value::Object(inv);
    v
}

fn format_value(v: &Value, format: Format) -> String {
    match format {
        Format::Json => render_json(v),
        Format::Table => {
            let mut s = String::new();
            if let Value::Object(m) = v {
                for (k, val) in m {
                    s.push_str(&format!("{k:<16} {}\n", table_cell(val)));
                }
            }
            s
        }
    }
}

/// Polynomial triples render as polynomials; other values as compact JSON.
fn table_cell(v: &Value) -> String {
    if let Ok(p) = LaurentPoly::from_json(v) {
        if v.as_array().is_some_and(|a| !a.is_empty()) {
            return p.to_string();
        }
    }
    if let Some(inner) = v.get("value") {
        return table_cell(inner);
    }
    v.to_string()
}

fn poset_table(p: &Poset) -> String {
    let mut s = String::new();
    for r in 0..=p.max_rank() {
        let names: Vec<&str> = p.elements_of_rank(r).map(|i| p.name(i)).collect();
        s.push_str(&format!("rank {r}: {}\n", names.join(" ")));
    }
    s
}

fn verify_table(r: &verify::Report) -> String {
    let mut s = String::new();
    for suite in &r.suites {
        for c in &suite.checks {
            let status = if c.holds() { "PASS" } else { "FAIL" };
            s.push_str(&format!("{:<16} {:<28} {status} {:>6} cases  {}\n", suite.suite.name(), c.id, c.cases, c.anchor));
        }
    }
    s
}
