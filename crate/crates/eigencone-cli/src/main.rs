//! Command-line interface: membership tests, facet and extremal-ray
//! enumeration, induction, and the verification suite. All numeric output
//! is exact; rationals print as `p/q`.

use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use eigencone::cone::{
    enumerate_facets, violated_facets, FacetDescriptor, DEFAULT_BUDGET,
};
use eigencone::ratlinalg::Rational;
use eigencone::rays::{
    all_extremal_rays, all_extremal_rays_with_diagnostics, facet_ray_candidates, induct_terms,
    is_extremal, Provenance, ProductPoint, Ray,
};
use eigencone::schubert::SchubertIndex;
use eigencone::verify::run_suite;
use eigencone::weights::{DominantWeight, KappaPoint, KappaTuple};

#[derive(Parser)]
#[command(
    name = "eigencone",
    version,
    about = "Exact computations in Hermitian eigenvalue cones",
    propagate_version = true
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct CommonFlags {
    /// Emit a machine-readable JSON record instead of the human table.
    #[arg(long)]
    json: bool,
    /// Candidate-tuple ceiling for facet enumeration; overrides the
    /// EIGENCONE_BUDGET environment variable.
    #[arg(long)]
    budget: Option<u64>,
}

#[derive(Subcommand)]
enum Command {
    /// Decide membership of an s-tuple in the eigencone.
    Member {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        s: u32,
        /// Weight vectors: comma-separated integers, vectors separated by
        /// semicolons, e.g. "2,1,1,0;1,1,0,0;1,1,0,0".
        #[arg(long)]
        weights: Option<String>,
        /// Trace-zero vectors with rational entries "p/q", same separators.
        #[arg(long)]
        kappa: Option<String>,
        #[command(flatten)]
        common: CommonFlags,
    },
    /// List the regular facets of the cone.
    Facets {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        s: u32,
        /// Restrict to facets of one Grassmannian rank.
        #[arg(long)]
        r: Option<u32>,
        #[command(flatten)]
        common: CommonFlags,
    },
    /// Enumerate the extremal rays of the cone.
    Rays {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        s: u32,
        /// Restrict to one facet's candidates, e.g. "r=2;I1=2,3;I2=2,4;I3=2,4".
        #[arg(long)]
        facet: Option<String>,
        /// Also report candidates rejected by the extremality test.
        #[arg(long)]
        diagnostics: bool,
        #[command(flatten)]
        common: CommonFlags,
    },
    /// Induct a product-cone point through a facet.
    Induct {
        /// Facet descriptor, e.g. "r=3;I1=3,7,8;I2=3,6,9;I3=3,6,9".
        #[arg(long)]
        facet: String,
        /// Ambient dimension; inferred from --left/--right when omitted.
        #[arg(long)]
        n: Option<u32>,
        /// Weight vectors for the rank-r factor.
        #[arg(long)]
        left: String,
        /// Weight vectors for the rank-(n-r) factor.
        #[arg(long)]
        right: String,
        #[command(flatten)]
        common: CommonFlags,
    },
    /// Run the verification suite.
    Verify {
        /// Run a single check by id.
        #[arg(long)]
        only: Option<String>,
        #[arg(long)]
        json: bool,
    },
}

fn main() -> ExitCode {
    // Die quietly when a downstream pipe closes instead of panicking on
    // the failed write.
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

type CmdResult = Result<ExitCode, String>;

fn budget_from(common: &CommonFlags) -> Result<u64, String> {
    if let Some(b) = common.budget {
        return Ok(b);
    }
    match std::env::var("EIGENCONE_BUDGET") {
        Ok(v) => v
            .parse::<u64>()
            .map_err(|_| format!("EIGENCONE_BUDGET is not an integer: {v:?}")),
        Err(_) => Ok(DEFAULT_BUDGET),
    }
}

fn run(cli: Cli) -> CmdResult {
    match cli.command {
        Command::Member {
            n,
            s,
            weights,
            kappa,
            common,
        } => cmd_member(n, s, weights, kappa, &common),
        Command::Facets { n, s, r, common } => cmd_facets(n, s, r, &common),
        Command::Rays {
            n,
            s,
            facet,
            diagnostics,
            common,
        } => cmd_rays(n, s, facet, diagnostics, &common),
        Command::Induct {
            facet,
            n,
            left,
            right,
            common,
        } => cmd_induct(&facet, n, &left, &right, &common),
        Command::Verify { only, json } => cmd_verify(only.as_deref(), json),
    }
}

// ---------------------------------------------------------------- parsing

fn parse_rational(text: &str) -> Result<Rational, String> {
    Rational::from_str(text.trim()).map_err(|_| format!("malformed rational {text:?}"))
}

fn parse_weight_tuple(text: &str, n: u32, s: u32) -> Result<Vec<DominantWeight>, String> {
    let vectors: Vec<&str> = text.split(';').collect();
    if vectors.len() != s as usize {
        return Err(format!("expected {s} weight vectors, got {}", vectors.len()));
    }
    vectors
        .iter()
        .map(|v| {
            let entries = v
                .split(',')
                .map(|e| {
                    e.trim()
                        .parse::<i64>()
                        .map_err(|_| format!("malformed weight entry {e:?}"))
                })
                .collect::<Result<Vec<i64>, String>>()?;
            if entries.len() != n as usize {
                return Err(format!(
                    "weight vector {v:?} has {} entries, expected {n}",
                    entries.len()
                ));
            }
            DominantWeight::new(&entries).map_err(|e| e.to_string())
        })
        .collect()
}

fn parse_kappa_tuple(text: &str, n: u32, s: u32) -> Result<KappaTuple, String> {
    let vectors: Vec<&str> = text.split(';').collect();
    if vectors.len() != s as usize {
        return Err(format!("expected {s} vectors, got {}", vectors.len()));
    }
    let points = vectors
        .iter()
        .map(|v| {
            let entries = v
                .split(',')
                .map(parse_rational)
                .collect::<Result<Vec<Rational>, String>>()?;
            if entries.len() != n as usize {
                return Err(format!(
                    "vector {v:?} has {} entries, expected {n}",
                    entries.len()
                ));
            }
            KappaPoint::new(entries).map_err(|e| e.to_string())
        })
        .collect::<Result<Vec<KappaPoint>, String>>()?;
    KappaTuple::new(points).map_err(|e| e.to_string())
}

/// Parses "r=2;I1=2,3;I2=2,4;I3=2,4" into index sets; `n` fixes the
/// ambient Grassmannian.
fn parse_facet(text: &str, n: u32) -> Result<FacetDescriptor, String> {
    let mut fields = text.split(';');
    let r_field = fields.next().ok_or("empty facet descriptor")?;
    let r = r_field
        .strip_prefix("r=")
        .ok_or_else(|| format!("facet descriptor must start with r=..., got {r_field:?}"))?
        .trim()
        .parse::<u32>()
        .map_err(|_| format!("malformed rank in {r_field:?}"))?;
    let mut indices = Vec::new();
    for (j, field) in (1..).zip(fields) {
        let prefix = format!("I{j}=");
        let body = field
            .strip_prefix(&prefix)
            .ok_or_else(|| format!("expected {prefix}... in facet descriptor, got {field:?}"))?;
        let elements = body
            .split(',')
            .map(|e| {
                e.trim()
                    .parse::<u32>()
                    .map_err(|_| format!("malformed index entry {e:?}"))
            })
            .collect::<Result<Vec<u32>, String>>()?;
        if elements.len() != r as usize {
            return Err(format!("index set {body:?} does not have {r} elements"));
        }
        indices.push(SchubertIndex::new(n, elements).map_err(|e| e.to_string())?);
    }
    if indices.is_empty() {
        return Err("facet descriptor names no index sets".into());
    }
    FacetDescriptor::new(indices).map_err(|e| e.to_string())
}

// ------------------------------------------------------------- rendering

fn rational_strings(point: &KappaPoint) -> Vec<String> {
    point.entries().iter().map(ToString::to_string).collect()
}

fn kappa_json(tuple: &KappaTuple) -> Value {
    Value::Array(
        tuple
            .points()
            .iter()
            .map(|p| json!(rational_strings(p)))
            .collect(),
    )
}

fn weights_json(weights: &[DominantWeight]) -> Value {
    Value::Array(weights.iter().map(|w| json!(w.entries())).collect())
}

fn provenance_json(p: &Provenance) -> Value {
    match p {
        Provenance::Basic { facet, j0, a0 } => json!({
            "kind": "basic",
            "facet": facet.to_string(),
            "j0": j0,
            "a0": a0,
        }),
        Provenance::Induced { facet, left, right } => json!({
            "kind": "induced",
            "facet": facet.to_string(),
            "left": weights_json(left),
            "right": weights_json(right),
        }),
        Provenance::Imported => json!({ "kind": "imported" }),
    }
}

fn ray_json(ray: &Ray) -> Value {
    json!({
        "weight_tuple": weights_json(ray.weight_tuple()),
        "kappa_tuple": kappa_json(ray.direction()),
        "provenance": provenance_json(ray.provenance()),
    })
}

fn print_record(command: &str, parameters: Value, result: Value) {
    let record = json!({
        "schema_version": "1",
        "command": command,
        "parameters": parameters,
        "result": result,
    });
    println!("{record}");
}

fn kappa_line(tuple: &KappaTuple) -> String {
    tuple
        .points()
        .iter()
        .map(|p| format!("({})", rational_strings(p).join(",")))
        .collect::<Vec<_>>()
        .join(" ")
}

fn provenance_line(p: &Provenance) -> String {
    match p {
        Provenance::Basic { facet, j0, a0 } => format!("basic[{facet}; j0={j0}, a0={a0}]"),
        Provenance::Induced { facet, left, right } => {
            let fmt = |ws: &[DominantWeight]| {
                ws.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
            };
            format!("induced[{facet}; left={}; right={}]", fmt(left), fmt(right))
        }
        Provenance::Imported => "imported".into(),
    }
}

// -------------------------------------------------------------- commands

fn cmd_member(
    n: u32,
    s: u32,
    weights: Option<String>,
    kappa_text: Option<String>,
    common: &CommonFlags,
) -> CmdResult {
    let budget = budget_from(common)?;
    let (tuple, parameters) = match (weights, kappa_text) {
        (Some(w), None) => {
            let parsed = parse_weight_tuple(&w, n, s)?;
            let tuple = KappaTuple::from_weights(&parsed).map_err(|e| e.to_string())?;
            (tuple, json!({ "n": n, "s": s, "weights": weights_json(&parsed), "budget": budget }))
        }
        (None, Some(k)) => {
            let tuple = parse_kappa_tuple(&k, n, s)?;
            (
                tuple.clone(),
                json!({ "n": n, "s": s, "kappa": kappa_json(&tuple), "budget": budget }),
            )
        }
        _ => return Err("provide exactly one of --weights or --kappa".into()),
    };
    let violations = violated_facets(&tuple, budget).map_err(|e| e.to_string())?;
    let member = violations.is_empty();
    if common.json {
        let violated: Vec<Value> = violations
            .iter()
            .map(|(f, v)| json!({ "facet": f.to_string(), "value": v.to_string() }))
            .collect();
        print_record(
            "member",
            parameters,
            json!({ "member": member, "violated": violated }),
        );
    } else if member {
        println!("member: {}", kappa_line(&tuple));
    } else {
        println!("non-member: {}", kappa_line(&tuple));
        for (facet, value) in &violations {
            println!("  violates {facet} with value {value}");
        }
    }
    Ok(ExitCode::from(u8::from(!member)))
}

fn cmd_facets(n: u32, s: u32, r: Option<u32>, common: &CommonFlags) -> CmdResult {
    let budget = budget_from(common)?;
    let facets = enumerate_facets(n, s, budget).map_err(|e| e.to_string())?;
    let selected: Vec<&FacetDescriptor> = facets
        .iter()
        .filter(|f| r.is_none_or(|r| f.r() == r))
        .collect();
    if common.json {
        let list: Vec<Value> = selected
            .iter()
            .map(|f| {
                json!({
                    "r": f.r(),
                    "indices": f.indices().iter().map(|i| i.elements()).collect::<Vec<_>>(),
                    "descriptor": f.to_string(),
                    "q": f.q(),
                })
            })
            .collect();
        print_record(
            "facets",
            json!({ "n": n, "s": s, "r": r, "budget": budget }),
            json!({ "count": list.len(), "facets": list }),
        );
    } else {
        println!("{} facets of Gamma_{n}({s})", selected.len());
        for f in &selected {
            println!("  {f}  q={}", f.q());
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_rays(
    n: u32,
    s: u32,
    facet_text: Option<String>,
    diagnostics: bool,
    common: &CommonFlags,
) -> CmdResult {
    let budget = budget_from(common)?;
    let (accepted, rejected): (Vec<Ray>, Vec<Ray>) = if let Some(text) = facet_text.as_deref() {
        let facet = parse_facet(text, n)?;
        if facet.s() != s {
            return Err(format!("facet names {} index sets, --s is {s}", facet.s()));
        }
        let r = facet.r();
        let left = all_extremal_rays(r, s, budget).map_err(|e| e.to_string())?;
        let right = all_extremal_rays(n - r, s, budget).map_err(|e| e.to_string())?;
        let candidates =
            facet_ray_candidates(&facet, &left, &right).map_err(|e| e.to_string())?;
        let mut accepted = Vec::new();
        let mut rejected = Vec::new();
        let mut seen = std::collections::BTreeSet::new();
        for ray in candidates {
            if !seen.insert(ray.key()) {
                continue;
            }
            if is_extremal(ray.direction(), budget).map_err(|e| e.to_string())? {
                accepted.push(ray);
            } else {
                rejected.push(ray);
            }
        }
        (accepted, rejected)
    } else {
        let (a, r) =
            all_extremal_rays_with_diagnostics(n, s, budget).map_err(|e| e.to_string())?;
        (a.to_vec(), r.to_vec())
    };

    if common.json {
        let mut result = json!({
            "count": accepted.len(),
            "rays": accepted.iter().map(ray_json).collect::<Vec<_>>(),
        });
        if diagnostics {
            result["rejected"] = Value::Array(rejected.iter().map(ray_json).collect());
        }
        print_record(
            "rays",
            json!({ "n": n, "s": s, "facet": facet_text, "diagnostics": diagnostics, "budget": budget }),
            result,
        );
    } else {
        println!("{} extremal rays", accepted.len());
        for ray in &accepted {
            println!("  {ray}  kappa={}  {}", kappa_line(ray.direction()), provenance_line(ray.provenance()));
        }
        if diagnostics {
            println!("{} rejected candidates", rejected.len());
            for ray in &rejected {
                println!("  {ray}  {}", provenance_line(ray.provenance()));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_induct(
    facet_text: &str,
    n_flag: Option<u32>,
    left_text: &str,
    right_text: &str,
    common: &CommonFlags,
) -> CmdResult {
    let budget = budget_from(common)?;
    // Infer the geometry from the inputs before the facet can be parsed.
    let s = left_text.split(';').count() as u32;
    if right_text.split(';').count() as u32 != s {
        return Err("--left and --right must list the same number of vectors".into());
    }
    let r = left_text
        .split(';')
        .next()
        .map(|v| v.split(',').count() as u32)
        .unwrap_or(0);
    let n_minus_r = right_text
        .split(';')
        .next()
        .map(|v| v.split(',').count() as u32)
        .unwrap_or(0);
    let n = r + n_minus_r;
    if let Some(expected) = n_flag {
        if expected != n {
            return Err(format!(
                "--n {expected} contradicts the factors: {r} + {n_minus_r} = {n}"
            ));
        }
    }
    let facet = parse_facet(facet_text, n)?;
    if facet.s() != s {
        return Err(format!(
            "facet names {} index sets, inputs have {s}",
            facet.s()
        ));
    }
    if facet.r() != r {
        return Err(format!(
            "facet rank {} does not match left vectors of length {r}",
            facet.r()
        ));
    }

    let left_weights = parse_weight_tuple(left_text, r, s)?;
    let right_weights = parse_weight_tuple(right_text, n_minus_r, s)?;
    let left = KappaTuple::from_weights(&left_weights).map_err(|e| e.to_string())?;
    let right = KappaTuple::from_weights(&right_weights).map_err(|e| e.to_string())?;
    for (label, tuple) in [("left", &left), ("right", &right)] {
        if tuple.n() >= 2 {
            let member =
                eigencone::cone::is_member(tuple, budget).map_err(|e| e.to_string())?;
            if !member {
                return Err(format!("--{label} is not a member of its eigencone"));
            }
        }
    }
    let point = ProductPoint::new(left, right).map_err(|e| e.to_string())?;
    let naive = eigencone::rays::naive_induct(&facet, &point).map_err(|e| e.to_string())?;
    let (total, terms) = induct_terms(&facet, &point).map_err(|e| e.to_string())?;
    let primitive: Option<Ray> = if total.is_zero() {
        None
    } else {
        Some(
            Ray::from_direction(
                &total,
                Provenance::Induced {
                    facet: facet.clone(),
                    left: left_weights.clone(),
                    right: right_weights.clone(),
                },
            )
            .map_err(|e| e.to_string())?,
        )
    };

    if common.json {
        let corrections: Vec<Value> = terms
            .iter()
            .map(|t| {
                json!({
                    "i": t.i,
                    "b": t.b,
                    "gap": t.gap.to_string(),
                    "class_weights": weights_json(&t.class_weights),
                })
            })
            .collect();
        let mut result = json!({
            "naive": kappa_json(&naive),
            "corrections": corrections,
            "result_kappa": kappa_json(&total),
        });
        if let Some(ray) = &primitive {
            result["result_weights"] = weights_json(ray.weight_tuple());
        }
        print_record(
            "induct",
            json!({
                "facet": facet.to_string(),
                "n": n,
                "left": weights_json(&left_weights),
                "right": weights_json(&right_weights),
                "budget": budget,
            }),
            result,
        );
    } else {
        println!("naive: {}", kappa_line(&naive));
        for t in &terms {
            let class = t
                .class_weights
                .iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
                .join(" ");
            println!("  + ({}) * [D at i={}, b={}] = ({class})", t.gap, t.i, t.b);
        }
        println!("result kappa: {}", kappa_line(&total));
        match &primitive {
            Some(ray) => println!("result weights: {ray}"),
            None => println!("result weights: zero"),
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify(only: Option<&str>, json: bool) -> CmdResult {
    let Some(outcomes) = run_suite(only) else {
        return Err(format!(
            "unknown check id {:?}; known ids: {}",
            only.unwrap_or(""),
            eigencone::verify::check_ids().join(", ")
        ));
    };
    let all_passed = outcomes.iter().all(|o| o.passed);
    if json {
        let checks: Vec<Value> = outcomes
            .iter()
            .map(|o| {
                json!({
                    "id": o.id,
                    "title": o.title,
                    "passed": o.passed,
                    "elapsed_ms": o.elapsed.as_millis() as u64,
                    "limit_ms": o.limit.map(|l| l.as_millis() as u64),
                    "details": o.details,
                })
            })
            .collect();
        print_record(
            "verify",
            json!({ "only": only }),
            json!({ "passed": all_passed, "checks": checks }),
        );
    } else {
        for o in &outcomes {
            let status = if o.passed { "PASS" } else { "FAIL" };
            println!("{status} {:<22} {:>8.2?}  {}", o.id, o.elapsed, o.title);
            for line in &o.details {
                println!("       {line}");
            }
        }
        println!(
            "{} of {} checks passed",
            outcomes.iter().filter(|o| o.passed).count(),
            outcomes.len()
        );
    }
    Ok(if all_passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    })
}
