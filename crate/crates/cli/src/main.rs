use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use num_bigint::BigInt;
use serde_json::{json, Map, Value};

use cypres::cosets::DEFAULT_MAX_COSETS;
use cypres::invariants::abelianization;
use cypres::jfamily::{
    a_closed_form, canonical_form, classify, fibonacci_subgroup, is_aspherical, is_isomorphic,
    prime_families, Primality, PrimeFamily, StructureReport,
};
use cypres::presentation::{
    build_derived_presentation, build_refined_derived_presentation, parse_presentation,
    parse_word, print_presentation,
};
use cypres::verify::{sweep, SweepConfig};
use cypres::{enumerate, AbelianGroup, CosetOutcome, Error, JParams, Order};

const MAX_COSETS_ENV: &str = "CYPRES_MAX_COSETS";

#[derive(Parser)]
#[command(name = "cypres", version, about = "Exact invariants of the groups J_n(m,k)")]
struct Cli {
    /// JSON output (the default).
    #[arg(long, global = true, conflicts_with = "plain")]
    json: bool,
    /// Human-readable output.
    #[arg(long, global = true)]
    plain: bool,
    /// Leave out the timing field so output is byte-stable.
    #[arg(long, global = true)]
    no_timing: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Nmk {
    n: u32,
    #[arg(allow_negative_numbers = true)]
    m: i64,
    #[arg(allow_negative_numbers = true)]
    k: i64,
}

impl Nmk {
    fn params(&self) -> Result<JParams, Error> {
        JParams::new(self.n, self.m, self.k)
    }

    fn json(&self) -> Value {
        json!({ "n": self.n, "m": self.m, "k": self.k })
    }
}

#[derive(Subcommand)]
enum Command {
    /// Order of J_n(m,k).
    Order(Nmk),
    /// Structure of J_n(m,k) and of its derived subgroup.
    Classify(Nmk),
    /// Decide J_n(m1,k1) = J_n(m2,k2).
    #[command(allow_negative_numbers = true)]
    Iso {
        n: u32,
        m1: i64,
        k1: i64,
        m2: i64,
        k2: i64,
    },
    /// Canonical representative of the isomorphism class.
    Canonical(Nmk),
    /// Whether the relative presentation is aspherical.
    Aspherical(Nmk),
    /// Presentation of the derived subgroup.
    Derived {
        #[command(flatten)]
        params: Nmk,
        /// Use the presentation with the power relators made explicit.
        #[arg(long)]
        refined: bool,
    },
    /// Invariant factors of the abelianization of a presentation file.
    Abelianization { file: PathBuf },
    /// Todd-Coxeter enumeration over a presentation file.
    Enumerate {
        file: PathBuf,
        /// Subgroup generator, as a word; repeat for several.
        #[arg(long = "subgroup", allow_hyphen_values = true)]
        subgroup: Vec<String>,
        #[arg(long)]
        max_cosets: Option<usize>,
    },
    /// Cross-check every route over a parameter sweep.
    Verify {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        m_max: i64,
        /// Enumerate cosets for groups of at most this order.
        #[arg(long, default_value_t = 50_000)]
        max_order: u64,
        #[arg(long)]
        max_cosets: Option<usize>,
        /// Also sweep cells with gcd(m,k) > 1.
        #[arg(long)]
        include_non_coprime: bool,
    },
    /// Members of a prime family with their witnesses.
    Primes {
        #[arg(long)]
        family: String,
        #[arg(long)]
        max_index: u32,
    },
}

struct Output {
    command: &'static str,
    params: Value,
    results: Map<String, Value>,
    provenance: Vec<&'static str>,
    plain: Option<String>,
    code: u8,
}

impl Output {
    fn new(command: &'static str, params: Value) -> Self {
        Output {
            command,
            params,
            results: Map::new(),
            provenance: Vec::new(),
            plain: None,
            code: 0,
        }
    }

    fn set(&mut self, key: &str, v: impl Into<Value>) {
        self.results.insert(key.to_string(), v.into());
    }
}

/// Machine integers as JSON numbers, anything wider as a decimal string.
fn int(v: &BigInt) -> Value {
    match i64::try_from(v) {
        Ok(x) => json!(x),
        Err(_) => json!(v.to_string()),
    }
}

fn order(o: &Order) -> Value {
    match o {
        Order::Finite(v) => int(v),
        Order::Infinite { .. } => json!("infinite"),
    }
}

fn triple(p: &JParams) -> Value {
    json!([p.n, p.m, p.k])
}

fn opt_int(v: &Option<BigInt>) -> Value {
    v.as_ref().map_or(Value::Null, int)
}

/// Cyclic factor orders, with `0` for each infinite cyclic factor.
fn factors(g: &AbelianGroup) -> Value {
    let mut v: Vec<Value> = vec![json!(0); g.free_rank];
    v.extend(g.invariant_factors.iter().map(int));
    Value::Array(v)
}

fn max_cosets(flag: Option<usize>) -> Result<usize, Error> {
    if let Some(m) = flag {
        return Ok(m);
    }
    match std::env::var(MAX_COSETS_ENV) {
        Ok(s) => s.trim().parse().map_err(|_| {
            Error::InvalidInput(format!("{MAX_COSETS_ENV} must be a positive integer, got `{s}`"))
        }),
        Err(_) => Ok(DEFAULT_MAX_COSETS),
    }
}

fn read_presentation(path: &Path) -> Result<cypres::GroupPresentation, Error> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::InvalidInput(format!("{}: {e}", path.display())))?;
    parse_presentation(&text).map_err(|e| match e {
        Error::Syntax { line, column, message } => Error::Syntax {
            line,
            column,
            message: format!("{}: {message}", path.display()),
        },
        other => other,
    })
}

/// Order and a-value, with the closed form checked against the resultant.
fn structure(out: &mut Output, r: &StructureReport) -> Result<(), Error> {
    out.set("normalized", triple(&r.params));
    out.set("order", order(&r.order));
    out.set("a_value", opt_int(&r.a_value));
    out.set("structure", r.structure.name());
    out.provenance.push("resultant");
    if r.params.m != 0 && r.params.is_coprime() {
        let closed = a_closed_form(&r.params)?;
        out.provenance.push("closed-form");
        if r.a_value.as_ref() != Some(&closed) {
            out.code = 1;
            out.set(
                "disagreement",
                format!(
                    "{}: closed form gives a = {closed}, resultant gives {}",
                    r.params,
                    r.a_value.as_ref().map_or("none".to_string(), BigInt::to_string)
                ),
            );
        }
    }
    Ok(())
}

fn run(cmd: &Command) -> Result<Output, Error> {
    Ok(match cmd {
        Command::Order(a) => {
            let mut out = Output::new("order", a.json());
            let r = classify(&a.params()?)?;
            structure(&mut out, &r)?;
            out
        }
        Command::Classify(a) => {
            let mut out = Output::new("classify", a.json());
            let r = classify(&a.params()?)?;
            structure(&mut out, &r)?;
            out.set("derived", r.derived_invariants.as_ref().map_or(Value::Null, factors));
            out.set("d", r.d);
            out.set("j2_free_rank", opt_int(&r.j2_free_rank));
            out.set("free_factor", r.free_factor.as_ref().map_or(Value::Null, triple));
            out.set("free_factor_order", opt_int(&r.free_factor_order));
            let fib = match fibonacci_subgroup(&r.params) {
                Ok(f) => json!({ "group": f.params.to_string(), "order": int(&f.order) }),
                Err(Error::Unsupported(_)) => Value::Null,
                Err(e) => return Err(e),
            };
            out.set("fibonacci_subgroup", fib);
            out.provenance.push("structure-rules");
            out
        }
        Command::Iso { n, m1, k1, m2, k2 } => {
            let params = json!({ "n": n, "m1": m1, "k1": k1, "m2": m2, "k2": k2 });
            let mut out = Output::new("iso", params);
            let v = is_isomorphic(&JParams::new(*n, *m1, *k1)?, &JParams::new(*n, *m2, *k2)?)?;
            out.set("isomorphic", v.isomorphic);
            out.set("reason", v.reason);
            out.provenance.push("isomorphism-criterion");
            out
        }
        Command::Canonical(a) => {
            let mut out = Output::new("canonical", a.json());
            let c = canonical_form(&a.params()?)?;
            out.set("canonical", triple(&c));
            out.provenance.push("isomorphism-criterion");
            out
        }
        Command::Aspherical(a) => {
            let mut out = Output::new("aspherical", a.json());
            let v = is_aspherical(&a.params()?);
            out.set("aspherical", v);
            out.provenance.push("asphericity-criterion");
            out.plain = Some(v.to_string());
            out
        }
        Command::Derived { params: a, refined } => {
            let mut params = a.json();
            params["refined"] = json!(refined);
            let mut out = Output::new("derived", params);
            let p = a.params()?;
            let pres = if *refined {
                build_refined_derived_presentation(&p)?
            } else {
                build_derived_presentation(&p)?.to_presentation()
            };
            let text = print_presentation(&pres);
            out.set("generators", pres.generators().len());
            out.set("relators", pres.relators().len());
            out.set("presentation", text.clone());
            out.provenance.push(if *refined { "refined-derived" } else { "derived" });
            out.plain = Some(text);
            out
        }
        Command::Abelianization { file } => {
            let mut out = Output::new("abelianization", json!({ "file": file.display().to_string() }));
            let ab = abelianization(&read_presentation(file)?);
            out.set("factors", Value::Array(ab.invariant_factors.iter().map(int).collect()));
            out.set("free_rank", ab.free_rank);
            out.set("order", order(&ab.order()));
            out.provenance.push("snf");
            out
        }
        Command::Enumerate { file, subgroup, max_cosets: flag } => {
            let limit = max_cosets(*flag)?;
            let params = json!({
                "file": file.display().to_string(),
                "subgroup": subgroup,
                "max_cosets": limit,
            });
            let mut out = Output::new("enumerate", params);
            let pres = read_presentation(file)?;
            let words = subgroup
                .iter()
                .map(|w| parse_word(&pres, w))
                .collect::<Result<Vec<_>, _>>()?;
            match enumerate(&pres, &words, limit)? {
                CosetOutcome::Index(i) => out.set("index", i),
                CosetOutcome::Exceeded { .. } => out.set("index", "exceeded"),
            }
            out.provenance.push("todd-coxeter");
            out
        }
        Command::Verify { n, m_max, max_order, max_cosets: flag, include_non_coprime } => {
            let mut cfg = SweepConfig::new(*n, *m_max);
            cfg.max_order = *max_order;
            cfg.max_cosets = max_cosets(*flag)?;
            cfg.include_non_coprime = *include_non_coprime;
            let params = json!({
                "n": n,
                "m_max": m_max,
                "max_order": max_order,
                "max_cosets": cfg.max_cosets,
                "include_non_coprime": include_non_coprime,
            });
            let mut out = Output::new("verify", params);
            let report = sweep(&cfg)?;
            let bad: Vec<Value> = report
                .disagreements()
                .iter()
                .map(|d| json!({ "params": triple(&d.params), "check": d.check, "detail": d.detail }))
                .collect();
            let summary = if report.passed() {
                format!("all {n}-family checks passed: {} cases", report.cases.len())
            } else {
                out.code = 1;
                format!("{} disagreements in {} cases", bad.len(), report.cases.len())
            };
            let mut plain = vec![summary.clone()];
            plain.extend(report.disagreements().iter().map(|d| format!("{}: {}: {}", d.params, d.check, d.detail)));
            out.set("cases", report.cases.len());
            out.set("checks", report.checks());
            out.set("enumerated", report.enumerated());
            out.set("passed", report.passed());
            out.set("disagreements", Value::Array(bad));
            out.set("summary", summary);
            out.provenance.extend(["resultant", "closed-form", "snf", "todd-coxeter"]);
            out.plain = Some(plain.join("\n"));
            out
        }
        Command::Primes { family, max_index } => {
            let fam: PrimeFamily = family.parse()?;
            let label = match fam {
                PrimeFamily::GaussianMersenne => "GM",
                PrimeFamily::Mersenne => "M",
                PrimeFamily::FourMinusThree => "FMT",
            };
            let params = json!({ "family": fam.name(), "max_index": max_index });
            let mut out = Output::new("primes", params);
            let entries = prime_families(fam, *max_index)?;
            let mut plain = Vec::new();
            let rows: Vec<Value> = entries
                .iter()
                .map(|e| {
                    let primality = match e.primality {
                        Primality::Prime => "prime",
                        Primality::Composite => "composite",
                        Primality::ProbablePrime => "probable-prime",
                    };
                    let witness = e.witness_params.as_ref().map_or(String::new(), |w| format!("  {w}"));
                    plain.push(format!("{label}_{} = {}  {primality}{witness}", e.index, e.value));
                    json!({
                        "index": e.index,
                        "value": int(&e.value),
                        "primality": primality,
                        "witness": e.witness_params.as_ref().map_or(Value::Null, triple),
                        "witness_a": opt_int(&e.witness_a),
                    })
                })
                .collect();
            out.set("rows", Value::Array(rows));
            out.provenance.extend(["miller-rabin", "resultant"]);
            out.plain = Some(plain.join("\n"));
            out
        }
    })
}

fn render_plain(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Array(items) => {
            let parts: Vec<String> = items.iter().map(render_plain).collect();
            format!("[{}]", parts.join(", "))
        }
        Value::Null => "-".into(),
        other => other.to_string(),
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Unsupported(_) => 3,
        Error::Internal(_) | Error::CosetLimit { .. } => 1,
        _ => 2,
    }
}

fn error_kind(e: &Error) -> &'static str {
    match e {
        Error::InvalidInput(_) => "invalid-input",
        Error::DegenerateInput(_) => "degenerate-input",
        Error::Unsupported(_) => "unsupported",
        Error::Internal(_) => "internal",
        Error::Syntax { .. } => "syntax",
        Error::UndeclaredGenerator { .. } => "undeclared-generator",
        Error::CosetLimit { .. } => "coset-limit",
    }
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Order(_) => "order",
        Command::Classify(_) => "classify",
        Command::Iso { .. } => "iso",
        Command::Canonical(_) => "canonical",
        Command::Aspherical(_) => "aspherical",
        Command::Derived { .. } => "derived",
        Command::Abelianization { .. } => "abelianization",
        Command::Enumerate { .. } => "enumerate",
        Command::Verify { .. } => "verify",
        Command::Primes { .. } => "primes",
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    let result = run(&cli.command);
    let elapsed = start.elapsed().as_secs_f64() * 1e3;

    let out = match result {
        Ok(out) => out,
        Err(e) => {
            eprintln!("error: {e}");
            if !cli.plain {
                let v = json!({
                    "command": command_name(&cli.command),
                    "error": { "kind": error_kind(&e), "message": e.to_string() },
                });
                println!("{}", serde_json::to_string_pretty(&v).expect("json"));
            }
            return ExitCode::from(exit_code(&e));
        }
    };

    if cli.plain {
        match &out.plain {
            Some(text) => println!("{text}"),
            None => {
                for (k, v) in &out.results {
                    println!("{k}: {}", render_plain(v));
                }
            }
        }
    } else {
        let mut doc = Map::new();
        doc.insert("command".into(), json!(out.command));
        doc.insert("params".into(), out.params);
        doc.insert("results".into(), Value::Object(out.results));
        doc.insert("provenance".into(), json!(out.provenance));
        if !cli.no_timing {
            doc.insert("timing_ms".into(), json!((elapsed * 1e3).round() / 1e3));
        }
        println!("{}", serde_json::to_string_pretty(&Value::Object(doc)).expect("json"));
    }
    ExitCode::from(out.code)
}
