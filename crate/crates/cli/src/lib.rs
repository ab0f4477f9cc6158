//! Command-line frontend. [`run`] parses an argument vector, executes one
//! library operation and returns the exit code with the text destined for
//! stdout and stderr, so the binary and the tests share a single path.
//!
//! Exit codes: 0 when the operation succeeded and any checked bound holds,
//! 1 when a bound or a precondition of the underlying theorem fails, 2 for
//! malformed input.

use std::path::PathBuf;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use multinull::apps::{self, BoundReport, CoverVerdict, SuiteSummary};
use multinull::certificates::{self, WitnessMethod};
use multinull::divdiff;
use multinull::ideal::{self, Membership};
use multinull::json::{self as mjson, HyperplanesJson, MultisetPairJson, VectorPairJson};
use multinull::{Error, ExponentVector, FieldElement, FieldSpec, MultiPoly, Multiset, MultisetGrid};

pub const SCHEMA: &str = "multinull/1";

#[derive(Parser, Debug)]
#[command(name = "multinull", version, about = "Exact multiset Nullstellensatz toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Emit a schema-versioned JSON object instead of aligned text.
    #[arg(long, global = true)]
    json: bool,
    /// Scan points and instances in parallel. Output is unchanged.
    #[arg(long, global = true)]
    parallel: bool,
}

#[derive(Args, Debug)]
#[command(group(ArgGroup::new("grid_source").required(true).args(["grid", "grid_inline"])))]
struct GridArgs {
    /// Grid JSON file.
    #[arg(long, value_name = "PATH")]
    grid: Option<PathBuf>,
    /// Grid JSON given inline.
    #[arg(long, value_name = "JSON")]
    grid_inline: Option<String>,
    /// Expected field (`prime:P` or `rational`); must match the grid.
    #[arg(long, value_name = "FIELD")]
    field: Option<String>,
}

#[derive(Args, Debug)]
struct PolyArg {
    /// Polynomial in x1..xn, e.g. "x1^2*x2 - 3".
    #[arg(long, value_name = "EXPR")]
    poly: String,
}

#[derive(Args, Debug)]
struct PairArgs {
    /// Multiset as `value:mult,...`, e.g. "0:2,3:1".
    #[arg(long, value_name = "MULTISET", requires = "b")]
    a: Option<String>,
    #[arg(long, value_name = "MULTISET", requires = "a")]
    b: Option<String>,
    /// Field for `--a`/`--b`.
    #[arg(long, value_name = "FIELD")]
    field: Option<String>,
    /// JSON file `{"field":..,"a":[..],"b":[..]}`.
    #[arg(long, value_name = "PATH", conflicts_with_all = ["a", "input_inline"])]
    input: Option<PathBuf>,
    #[arg(long, value_name = "JSON", conflicts_with = "a")]
    input_inline: Option<String>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum MemberMethod {
    Remainder,
    Pointwise,
    Both,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum WitnessArg {
    Exhaustive,
    Divdiff,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum BracketMethod {
    Def,
    Rec,
    Both,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Remainder and cofactors of a polynomial modulo the grid ideal.
    Reduce {
        #[command(flatten)]
        grid: GridArgs,
        #[command(flatten)]
        poly: PolyArg,
    },
    /// Membership in the grid ideal.
    Member {
        #[command(flatten)]
        grid: GridArgs,
        #[command(flatten)]
        poly: PolyArg,
        #[arg(long, value_enum, default_value = "remainder")]
        method: MemberMethod,
    },
    /// A point and Hasse coefficient at which the polynomial does not vanish.
    Witness {
        #[command(flatten)]
        grid: GridArgs,
        #[command(flatten)]
        poly: PolyArg,
        /// Exponent of the top monomial, e.g. "1,1".
        #[arg(long, value_name = "T")]
        t: String,
        #[arg(long, value_enum, default_value = "exhaustive")]
        method: WitnessArg,
    },
    /// Factor the remainder when the polynomial vanishes outside a sub-grid.
    Punctured {
        #[command(flatten)]
        grid: GridArgs,
        #[command(flatten)]
        poly: PolyArg,
        /// Sub-grid JSON file.
        #[arg(long, value_name = "PATH", conflicts_with = "sub_inline", required_unless_present = "sub_inline")]
        sub: Option<PathBuf>,
        #[arg(long, value_name = "JSON")]
        sub_inline: Option<String>,
    },
    /// Generalized divided difference of a polynomial over the grid.
    Divdiff {
        #[command(flatten)]
        grid: GridArgs,
        #[command(flatten)]
        poly: PolyArg,
        #[arg(long, value_enum, default_value = "both")]
        method: BracketMethod,
    },
    /// Coefficients of the divided-difference relation.
    Alpha {
        #[command(flatten)]
        grid: GridArgs,
    },
    /// Check the divided-difference relation for one polynomial.
    CheckRelation {
        #[command(flatten)]
        grid: GridArgs,
        #[command(flatten)]
        poly: PolyArg,
    },
    /// Verify a hyperplane cover of the nonzero grid points.
    CoverCheck {
        #[command(flatten)]
        grid: GridArgs,
        /// JSON file `{"hyperplanes": [[c0, c1, ..., cn], ...]}`.
        #[arg(long, value_name = "PATH", conflicts_with = "hyperplanes_inline", required_unless_present = "hyperplanes_inline")]
        hyperplanes: Option<PathBuf>,
        #[arg(long, value_name = "JSON")]
        hyperplanes_inline: Option<String>,
    },
    /// The sharp hyperplane cover of a grid.
    CoverExtremal {
        #[command(flatten)]
        grid: GridArgs,
    },
    /// Multiset sumset in F_p.
    Sumset {
        #[command(flatten)]
        pair: PairArgs,
    },
    /// Cauchy-Davenport bound for a pair, or over all small pairs.
    CdCheck {
        #[command(flatten)]
        pair: PairArgs,
        /// Check every pair of multisets of F_p up to --max-size.
        #[arg(long, requires = "p", conflicts_with_all = ["a", "input", "input_inline"])]
        exhaustive: bool,
        #[arg(long)]
        p: Option<u64>,
        #[arg(long, default_value_t = 4)]
        max_size: usize,
    },
    /// Value-set multiset of a polynomial on the grid.
    Valueset {
        #[command(flatten)]
        grid: GridArgs,
        #[command(flatten)]
        poly: PolyArg,
    },
    /// Value-set bound for a_1 x_1^k + ... + a_n x_n^k + g.
    SunCheck {
        #[command(flatten)]
        grid: GridArgs,
        /// Coefficients a_1..a_n, e.g. "1,2".
        #[arg(long, value_name = "A")]
        a: String,
        #[arg(long)]
        k: u32,
        /// Lower-degree part g.
        #[arg(long, value_name = "EXPR", default_value = "0")]
        g: String,
    },
    /// The Hopf-Stiefel number beta_p(r, s).
    HopfStiefel {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        r: u64,
        #[arg(long)]
        s: u64,
    },
    /// Eliahou-Kervaire bound for vector multisets, or over all small pairs.
    EkCheck {
        /// JSON file `{"p":..,"dim":..,"a":[..],"b":[..]}`.
        #[arg(long, value_name = "PATH", conflicts_with = "input_inline")]
        input: Option<PathBuf>,
        #[arg(long, value_name = "JSON")]
        input_inline: Option<String>,
        #[arg(long, requires_all = ["p", "dim"], conflicts_with_all = ["input", "input_inline"])]
        exhaustive: bool,
        #[arg(long)]
        p: Option<u64>,
        #[arg(long)]
        dim: Option<usize>,
        #[arg(long, default_value_t = 3)]
        max_size: usize,
    },
}

/// Result of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

struct Report {
    fields: Vec<(String, Value)>,
    /// Set when a checked bound fails.
    violation: Option<String>,
}

impl Report {
    fn new() -> Self {
        Report {
            fields: Vec::new(),
            violation: None,
        }
    }

    fn put(&mut self, key: impl Into<String>, value: impl Into<Value>) -> &mut Self {
        self.fields.push((key.into(), value.into()));
        self
    }
}

pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                return Outcome {
                    code: 0,
                    stdout: e.to_string(),
                    stderr: String::new(),
                };
            }
            return input_error(&first_line(&e.to_string()));
        }
    };
    let name = command_name(&cli.command);
    match execute(&cli.command, cli.parallel) {
        Ok(report) => {
            let stdout = if cli.json {
                render_json(name, &report)
            } else {
                render_text(&report)
            };
            match report.violation {
                None => Outcome {
                    code: 0,
                    stdout,
                    stderr: String::new(),
                },
                Some(msg) => Outcome {
                    code: 1,
                    stdout,
                    stderr: format!("error: {msg}\n"),
                },
            }
        }
        Err(e) if e.is_input_error() => input_error(&e.to_string()),
        Err(e) => Outcome {
            code: 1,
            stdout: String::new(),
            stderr: format!("error: {}\n", first_line(&e.to_string())),
        },
    }
}

fn first_line(s: &str) -> String {
    let line = s.lines().find(|l| !l.trim().is_empty()).unwrap_or("");
    line.trim_start_matches("error:").trim().to_string()
}

fn input_error(msg: &str) -> Outcome {
    Outcome {
        code: 2,
        stdout: String::new(),
        stderr: format!("error: {}\n", first_line(msg)),
    }
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Reduce { .. } => "reduce",
        Command::Member { .. } => "member",
        Command::Witness { .. } => "witness",
        Command::Punctured { .. } => "punctured",
        Command::Divdiff { .. } => "divdiff",
        Command::Alpha { .. } => "alpha",
        Command::CheckRelation { .. } => "check-relation",
        Command::CoverCheck { .. } => "cover-check",
        Command::CoverExtremal { .. } => "cover-extremal",
        Command::Sumset { .. } => "sumset",
        Command::CdCheck { .. } => "cd-check",
        Command::Valueset { .. } => "valueset",
        Command::SunCheck { .. } => "sun-check",
        Command::HopfStiefel { .. } => "hopf-stiefel",
        Command::EkCheck { .. } => "ek-check",
    }
}

// ---------------------------------------------------------------------------
// input helpers

type Res<T> = multinull::Result<T>;

fn read_source(path: Option<&PathBuf>, inline: Option<&String>, what: &str) -> Res<String> {
    match (path, inline) {
        (Some(p), _) => std::fs::read_to_string(p)
            .map_err(|e| Error::InvalidInput(format!("cannot read {what} {}: {e}", p.display()))),
        (None, Some(s)) => Ok(s.clone()),
        (None, None) => Err(Error::InvalidInput(format!("missing {what}"))),
    }
}

fn parse_field(text: &str) -> Res<FieldSpec> {
    text.parse()
}

fn load_grid(args: &GridArgs) -> Res<MultisetGrid> {
    let text = read_source(args.grid.as_ref(), args.grid_inline.as_ref(), "grid")?;
    let grid = mjson::parse_grid(&text)?;
    if let Some(f) = &args.field {
        let spec = parse_field(f)?;
        if spec != grid.spec() {
            return Err(Error::FieldMismatch(spec.to_string(), grid.spec().to_string()));
        }
    }
    Ok(grid)
}

fn load_poly(text: &str, grid: &MultisetGrid) -> Res<MultiPoly> {
    multinull::parse_poly(text, grid.arity(), grid.spec())
}

fn parse_list<T>(text: &str, what: &str, item: impl Fn(&str) -> Res<T>) -> Res<Vec<T>> {
    if text.trim().is_empty() {
        return Err(Error::InvalidInput(format!("empty {what}")));
    }
    text.split(',').map(|s| item(s.trim())).collect()
}

fn parse_exponent(text: &str) -> Res<ExponentVector> {
    let v = parse_list(text, "exponent", |s| {
        s.parse::<u32>()
            .map_err(|_| Error::InvalidInput(format!("bad exponent entry {s:?}")))
    })?;
    Ok(ExponentVector::new(v))
}

fn load_pair(args: &PairArgs) -> Res<(Multiset, Multiset)> {
    if let (Some(a), Some(b)) = (&args.a, &args.b) {
        let field = args
            .field
            .as_deref()
            .ok_or_else(|| Error::InvalidInput("--a/--b need --field".to_string()))?;
        let spec = parse_field(field)?;
        return Ok((mjson::parse_multiset_compact(a, spec)?, mjson::parse_multiset_compact(b, spec)?));
    }
    let text = read_source(args.input.as_ref(), args.input_inline.as_ref(), "multiset pair (--a/--b or --input)")?;
    let (a, b) = mjson::from_str::<MultisetPairJson>(&text)?.to_pair()?;
    if let Some(f) = &args.field {
        let spec = parse_field(f)?;
        if spec != a.spec() {
            return Err(Error::FieldMismatch(spec.to_string(), a.spec().to_string()));
        }
    }
    Ok((a, b))
}

// ---------------------------------------------------------------------------
// value helpers

fn el(e: &FieldElement) -> Value {
    Value::String(e.to_string())
}

fn point(coords: &[FieldElement]) -> Value {
    Value::Array(coords.iter().map(el).collect())
}

fn exponent(u: &ExponentVector) -> Value {
    json!(u.as_slice())
}

fn multiset(m: &Multiset) -> Value {
    Value::Array(
        m.iter()
            .map(|(v, k)| json!({"value": v.to_string(), "mult": k}))
            .collect(),
    )
}

fn poly(p: &MultiPoly) -> Value {
    Value::String(p.to_string())
}

fn bound(r: &mut Report, b: &BoundReport, what: &str) {
    r.put("lhs", b.lhs).put("rhs", b.rhs).put("holds", b.holds);
    if !b.holds {
        r.violation = Some(format!("{what} violated: lhs {} < rhs {}", b.lhs, b.rhs));
    }
}

fn suite(r: &mut Report, prefix: &str, s: &SuiteSummary) {
    let key = |k: &str| if prefix.is_empty() { k.to_string() } else { format!("{prefix}_{k}") };
    r.put(key("cases"), s.cases)
        .put(key("failures"), s.failures)
        .put(key("tight"), s.tight)
        .put(key("tight_examples"), json!(s.tight_examples));
    if let Some(f) = &s.first_failure {
        r.put(key("first_failure"), f.clone());
        r.violation.get_or_insert(format!("bound violated at {f}"));
    }
}

// ---------------------------------------------------------------------------
// dispatch

fn execute(cmd: &Command, parallel: bool) -> Res<Report> {
    let mut r = Report::new();
    match cmd {
        Command::Reduce { grid, poly: p } => {
            let g = load_grid(grid)?;
            let f = load_poly(&p.poly, &g)?;
            let red = ideal::reduce(&f, &g)?;
            red.verify(&f, &g)?;
            r.put("remainder", poly(&red.remainder));
            for (i, h) in red.cofactors.iter().enumerate() {
                r.put(format!("h{}", i + 1), poly(h));
            }
        }
        Command::Member { grid, poly: p, method } => {
            let g = load_grid(grid)?;
            let f = load_poly(&p.poly, &g)?;
            match method {
                MemberMethod::Remainder => {
                    r.put("member", ideal::grid_member(&f, &g, Membership::Remainder)?);
                }
                MemberMethod::Pointwise => {
                    r.put("member", ideal::grid_member(&f, &g, Membership::Pointwise)?);
                }
                MemberMethod::Both => {
                    let a = ideal::grid_member(&f, &g, Membership::Remainder)?;
                    let b = ideal::grid_member(&f, &g, Membership::Pointwise)?;
                    r.put("member", a).put("remainder", a).put("pointwise", b);
                    if a != b {
                        r.violation = Some("membership methods disagree".to_string());
                    }
                }
            }
        }
        Command::Witness { grid, poly: p, t, method } => {
            let g = load_grid(grid)?;
            let f = load_poly(&p.poly, &g)?;
            let t = parse_exponent(t)?;
            let m = match method {
                WitnessArg::Exhaustive => WitnessMethod::Exhaustive,
                WitnessArg::Divdiff => WitnessMethod::DividedDifference,
            };
            let w = certificates::nonvanish_witness_with(&f, &g, &t, m, parallel)?;
            r.put("point", point(&w.point))
                .put("exponent", exponent(&w.exponent))
                .put("value", el(&w.value));
        }
        Command::Punctured {
            grid,
            poly: p,
            sub,
            sub_inline,
        } => {
            let g = load_grid(grid)?;
            let f = load_poly(&p.poly, &g)?;
            let d = mjson::parse_grid(&read_source(sub.as_ref(), sub_inline.as_ref(), "sub-grid")?)?;
            let res = certificates::punctured_decompose_with(&f, &g, &d, parallel)?;
            r.put("remainder", poly(&res.remainder))
                .put("quotient", poly(&res.quotient))
                .put("divisor", poly(&res.divisor))
                .put("degree", f.degree().to_string())
                .put("degree_bound", res.degree_bound)
                .put(
                    "punctured_points",
                    Value::Array(res.punctured_points.iter().map(|p| point(&p.coords)).collect()),
                );
        }
        Command::Divdiff { grid, poly: p, method } => {
            let g = load_grid(grid)?;
            let f = load_poly(&p.poly, &g)?;
            match method {
                BracketMethod::Def => {
                    r.put("value", el(&divdiff::bracket_def(&f, &g)?));
                }
                BracketMethod::Rec => {
                    r.put("value", el(&divdiff::bracket_rec(&f, &g)?));
                }
                BracketMethod::Both => {
                    let a = divdiff::bracket_def(&f, &g)?;
                    let b = divdiff::bracket_rec(&f, &g)?;
                    r.put("value", el(&a)).put("recursive", el(&b));
                    if a != b {
                        r.violation = Some("definition and recursion disagree".to_string());
                    }
                }
            }
        }
        Command::Alpha { grid } => {
            let g = load_grid(grid)?;
            let table = divdiff::alpha_table(&g)?;
            r.put("top", exponent(&g.top_exponent()));
            r.put("entries", table.len());
            let rows: Vec<Value> = table
                .iter()
                .map(|(s, u, a)| json!({"point": point(s), "exponent": exponent(u), "alpha": el(a)}))
                .collect();
            r.put("alpha", Value::Array(rows));
        }
        Command::CheckRelation { grid, poly: p } => {
            let g = load_grid(grid)?;
            let f = load_poly(&p.poly, &g)?;
            let table = divdiff::alpha_table(&g)?;
            let holds = table.check_relation(&f)?;
            r.put("coefficient", el(&f.coeff_of(&g.top_exponent())))
                .put("combination", el(&table.apply(&f)?))
                .put("holds", holds);
            if !holds {
                r.violation = Some("linear relation does not hold".to_string());
            }
        }
        Command::CoverCheck {
            grid,
            hyperplanes,
            hyperplanes_inline,
        } => {
            let g = load_grid(grid)?;
            let text = read_source(hyperplanes.as_ref(), hyperplanes_inline.as_ref(), "hyperplanes")?;
            let hs = mjson::from_str::<HyperplanesJson>(&text)?.to_hyperplanes(g.spec())?;
            let rep = apps::cover_verify(&hs, &g)?;
            let verdict = match &rep.verdict {
                CoverVerdict::ValidCover => "valid_cover",
                CoverVerdict::OriginViolated => "origin_violated",
                CoverVerdict::Undercovered(_) => "undercovered",
            };
            r.put("verdict", verdict)
                .put("k", rep.k)
                .put("bound", rep.bound)
                .put("meets_bound", rep.meets_bound)
                .put("origin_covered", rep.origin_covered);
            if let CoverVerdict::Undercovered(pts) = &rep.verdict {
                r.put("undercovered", Value::Array(pts.iter().map(|p| point(p)).collect()));
            }
            r.put(
                "proportional_duplicates",
                json!(rep
                    .proportional_duplicates
                    .iter()
                    .map(|(a, b)| [a + 1, b + 1])
                    .collect::<Vec<_>>()),
            );
            let pts: Vec<Value> = rep
                .points
                .iter()
                .map(|p| json!({"point": point(&p.point), "required": p.required, "achieved": p.achieved}))
                .collect();
            r.put("points", Value::Array(pts));
            r.violation = match rep.verdict {
                CoverVerdict::ValidCover if !rep.meets_bound => Some(format!(
                    "valid cover with {} hyperplanes is below the bound {}",
                    rep.k, rep.bound
                )),
                CoverVerdict::ValidCover => None,
                CoverVerdict::OriginViolated => Some("a hyperplane passes through the origin".to_string()),
                CoverVerdict::Undercovered(ref p) => {
                    Some(format!("{} grid points are covered too few times", p.len()))
                }
            };
        }
        Command::CoverExtremal { grid } => {
            let g = load_grid(grid)?;
            let hs = apps::cover_extremal(&g)?;
            let rep = apps::cover_verify(&hs, &g)?;
            r.put("k", rep.k)
                .put("bound", rep.bound)
                .put("hyperplanes", json!(mjson::hyperplanes_to_json(&hs)))
                .put(
                    "polynomials",
                    Value::Array(hs.iter().map(|h| poly(&h.to_poly())).collect()),
                );
            if rep.verdict != CoverVerdict::ValidCover || rep.k != rep.bound {
                r.violation = Some("extremal cover failed verification".to_string());
            }
        }
        Command::Sumset { pair } => {
            let (a, b) = load_pair(pair)?;
            let s = apps::sumset_multiset(&a, &b)?;
            r.put("size", s.size())
                .put("deg", apps::multiset_deg(&s))
                .put("sumset", multiset(&s));
        }
        Command::CdCheck {
            pair,
            exhaustive,
            p,
            max_size,
        } => {
            if *exhaustive {
                let p = p.expect("clap requires --p");
                let (cd, deg) = apps::cd_suite(p, *max_size, parallel)?;
                r.put("p", p).put("max_size", *max_size);
                suite(&mut r, "", &cd);
                suite(&mut r, "deg", &deg);
            } else {
                let (a, b) = load_pair(pair)?;
                let rep = apps::cd_check(&a, &b)?;
                bound(&mut r, &rep, "Cauchy-Davenport bound");
                r.put("tight", rep.is_tight());
                let deg = apps::deg_check(&a, &b)?;
                r.put("deg_lhs", deg.lhs)
                    .put("deg_rhs", deg.rhs)
                    .put("deg_holds", deg.holds);
                if !deg.holds {
                    r.violation.get_or_insert("degree inequality violated".to_string());
                }
            }
        }
        Command::Valueset { grid, poly: p } => {
            let g = load_grid(grid)?;
            let f = load_poly(&p.poly, &g)?;
            let v = apps::value_set_multiset(&f, &g)?;
            r.put("size", v.size()).put("value_set", multiset(&v));
        }
        Command::SunCheck { grid, a, k, g: gtext } => {
            let g = load_grid(grid)?;
            let spec = g.spec();
            let coeffs = parse_list(a, "coefficient list", |s| spec.parse_element(s))?;
            let low = load_poly(gtext, &g)?;
            let rep = apps::sun_check(&coeffs, *k, &low, &g)?;
            r.put("poly", poly(&rep.poly));
            bound(&mut r, &rep.bound, "value-set bound");
            r.put("value_set", multiset(&rep.value_set));
        }
        Command::HopfStiefel { p, r: rr, s } => {
            r.put("beta", apps::hopf_stiefel(*p, *rr, *s)?);
        }
        Command::EkCheck {
            input,
            input_inline,
            exhaustive,
            p,
            dim,
            max_size,
        } => {
            if *exhaustive {
                let (p, dim) = (p.expect("clap requires --p"), dim.expect("clap requires --dim"));
                let s = apps::ek_suite(p, dim, *max_size, parallel)?;
                r.put("p", p).put("dim", dim).put("max_size", *max_size);
                suite(&mut r, "", &s);
            } else {
                let text = read_source(input.as_ref(), input_inline.as_ref(), "vector multiset pair (--input)")?;
                let (a, b) = mjson::from_str::<VectorPairJson>(&text)?.to_pair()?;
                let rep = apps::ek_check(&a, &b)?;
                bound(&mut r, &rep, "Eliahou-Kervaire bound");
                let sum = a.sumset(&b)?;
                r.put("sumset", json!(mjson::vector_multiset_to_json(&sum)));
            }
        }
    }
    Ok(r)
}

// ---------------------------------------------------------------------------
// rendering

fn render_json(command: &str, report: &Report) -> String {
    let mut result = Map::new();
    for (k, v) in &report.fields {
        result.insert(k.clone(), v.clone());
    }
    let doc = json!({
        "schema": SCHEMA,
        "command": command,
        "status": if report.violation.is_some() { "violated" } else { "ok" },
        "result": Value::Object(result),
    });
    let mut s = serde_json::to_string_pretty(&doc).expect("plain data serializes");
    s.push('\n');
    s
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => "-".to_string(),
        Value::Array(items) => format!("[{}]", items.iter().map(scalar).collect::<Vec<_>>().join(", ")),
        Value::Object(m) => m
            .iter()
            .map(|(k, v)| format!("{k}={}", scalar(v)))
            .collect::<Vec<_>>()
            .join("  "),
        other => other.to_string(),
    }
}

fn render_text(report: &Report) -> String {
    let width = report.fields.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
    let mut out = String::new();
    for (k, v) in &report.fields {
        match v {
            Value::Array(items) if items.iter().any(|i| i.is_object() || i.is_array()) => {
                out.push_str(&format!("{k:<width$}  ({})\n", items.len()));
                for item in items {
                    out.push_str(&format!("  {}\n", scalar(item)));
                }
            }
            _ => out.push_str(&format!("{k:<width$}  {}\n", scalar(v))),
        }
    }
    out
}
