//! Command-line front end: family specification files, the subcommands and
//! their JSON output.
//!
//! A specification file has one `key = value` pair per line. Lists are
//! written as JSON arrays, rationals as numbers or `"p/q"` strings, and `#`
//! starts a comment. Every command returns its output text or a
//! [`CliError`] carrying the process exit code.

mod spec;

use serde_json::{json, Value};

use crate::construct::{build, ConstructError, ExceptionalFamily};
use crate::darboux::{cdt_step, rdt_step, DarbouxError, OperatorRG};
use crate::diagrams::{decode, encode, CellChange, DiagramError, ParamError, SpectralDiagram};
use crate::exactmath::rational::{fmt_q, parse_q, Rational};
use crate::exactmath::{Poly, RatFun};
use crate::classical::{IndexSet, NormValue};
use crate::verify::{check_flip, diagram_of_operator, run_checks, CHECK_NAMES};

pub use spec::{format_spec, parse_spec, FamilySpec};

/// Exit code for a failed verification.
pub const EXIT_VERIFY: i32 = 1;
/// Exit code for an unreadable specification or diagram file.
pub const EXIT_PARSE: i32 = 2;
/// Exit code for parameters that do not define a family.
pub const EXIT_PARAMS: i32 = 3;
/// Exit code for a Darboux step that cannot be taken.
pub const EXIT_STEP: i32 = 4;
/// Exit code for a diagram that is not a spectral diagram.
pub const EXIT_DIAGRAM: i32 = 5;

/// A failed command: the message for standard error and the exit code.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("{message}")]
pub struct CliError {
    pub code: i32,
    pub message: String,
}

impl CliError {
    pub fn new(code: i32, message: impl Into<String>) -> CliError {
        CliError {
            code,
            message: message.into(),
        }
    }
}

impl From<ConstructError> for CliError {
    fn from(e: ConstructError) -> CliError {
        let msg = match &e {
            ConstructError::Param(ParamError::DegenerateDeformation(m)) => format!("DegenerateDeformation: {m}"),
            ConstructError::Param(ParamError::InvalidParams(m)) => format!("InvalidParams: {m}"),
            other => other.to_string(),
        };
        CliError::new(EXIT_PARAMS, msg)
    }
}

impl From<ParamError> for CliError {
    fn from(e: ParamError) -> CliError {
        ConstructError::Param(e).into()
    }
}

impl From<DarbouxError> for CliError {
    fn from(e: DarbouxError) -> CliError {
        CliError::new(EXIT_STEP, e.to_string())
    }
}

impl From<DiagramError> for CliError {
    fn from(e: DiagramError) -> CliError {
        match e {
            DiagramError::Parse(m) => CliError::new(EXIT_PARSE, format!("parse error: {m}")),
            other => CliError::new(EXIT_DIAGRAM, other.to_string()),
        }
    }
}

/// A rational as a JSON string `"p/q"`, or `"p"` for integers.
pub fn rational_json(x: &Rational) -> Value {
    Value::String(fmt_q(x))
}

/// Ascending coefficients of a polynomial.
pub fn poly_json(p: &Poly) -> Value {
    Value::Array(p.coeffs().iter().map(rational_json).collect())
}

/// Inverse of [`rational_json`].
pub fn parse_rational_json(v: &Value) -> Option<Rational> {
    match v {
        Value::String(s) => parse_q(s),
        Value::Number(n) => n.as_i64().map(crate::exactmath::rational::q),
        _ => None,
    }
}

/// Inverse of [`poly_json`].
pub fn parse_poly_json(v: &Value) -> Option<Poly> {
    let cs = v.as_array()?.iter().map(parse_rational_json).collect::<Option<Vec<_>>>()?;
    Some(Poly::new(cs))
}

/// The rational function of a `{"num": [...], "den": [...]}` object.
pub fn parse_ratfun_json(v: &Value) -> Option<RatFun> {
    Some(RatFun::new(parse_poly_json(v.get("num")?)?, parse_poly_json(v.get("den")?)?))
}

fn index_set_json(s: &IndexSet) -> Value {
    json!({
        "finite": s.finite_part().iter().collect::<Vec<_>>(),
        "from": s.tail(),
    })
}

fn operator_json(op: &OperatorRG) -> Value {
    json!({
        "alpha": rational_json(&op.alpha),
        "beta": rational_json(&op.beta),
        "eps": rational_json(&op.eps),
        "tau": poly_json(&op.tau),
        "deg_tau": op.tau.deg_i64(),
    })
}

fn norm_json(i: i64, n: &NormValue) -> Value {
    json!({"i": i, "coeff": rational_json(&n.coeff), "base": n.base.name()})
}

/// The construction document of a family over its first `window` indices.
pub fn family_json(fam: &ExceptionalFamily, window: usize) -> Result<Value, CliError> {
    let sets = fam.index_sets();
    let index_sets: serde_json::Map<String, Value> = (1..=4u8)
        .map(|iota| {
            (
                format!("I{iota}"),
                json!({
                    "minus": index_set_json(sets.minus(iota)),
                    "plus": index_set_json(sets.plus(iota)),
                }),
            )
        })
        .collect();
    let mut pis = Vec::new();
    let mut norms = Vec::new();
    for i in fam.window(window) {
        let f = fam.pi(i)?;
        pis.push(json!({"i": i, "num": poly_json(f.num()), "den": poly_json(f.den())}));
        norms.push(norm_json(i, &fam.norm(i)?));
    }
    let mut doc = operator_json(&fam.op);
    let obj = doc.as_object_mut().expect("object");
    obj.insert("class".into(), Value::String(fam.tag().name().into()));
    obj.insert("index_sets".into(), Value::Object(index_sets));
    obj.insert("pi".into(), Value::Array(pis));
    obj.insert("norms".into(), Value::Array(norms));
    Ok(doc)
}

fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("serializable") + "\n"
}

fn load(spec_text: &str, window: Option<usize>) -> Result<(ExceptionalFamily, usize), CliError> {
    let spec = parse_spec(spec_text)?;
    let fam = build(&spec.params)?;
    Ok((fam, window.unwrap_or(spec.window)))
}

/// `construct`: the JSON document of the family.
pub fn cmd_construct(spec_text: &str, window: Option<usize>) -> Result<String, CliError> {
    let (fam, w) = load(spec_text, window)?;
    Ok(pretty(&family_json(&fam, w)?))
}

/// Split a comma-separated list of check names, rejecting unknown ones.
pub fn parse_checks(list: &str) -> Result<Vec<String>, CliError> {
    let names: Vec<String> = list.split(',').map(|s| s.trim().to_string()).filter(|s| !s.is_empty()).collect();
    for n in &names {
        if !CHECK_NAMES.contains(&n.as_str()) {
            return Err(CliError::new(
                EXIT_PARSE,
                format!("unknown check {n:?}; expected some of {}", CHECK_NAMES.join(",")),
            ));
        }
    }
    Ok(names)
}

/// Checks run when none are requested.
pub const DEFAULT_CHECKS: &[&str] = &["eigen", "ortho", "norm", "regularity", "flips"];

/// `verify`: the report and whether every check passed.
pub fn cmd_verify(spec_text: &str, window: Option<usize>, checks: &[String], as_json: bool) -> Result<(String, bool), CliError> {
    let (fam, w) = load(spec_text, window)?;
    let names: Vec<&str> = if checks.is_empty() {
        DEFAULT_CHECKS.to_vec()
    } else {
        checks.iter().map(String::as_str).collect()
    };
    let results = run_checks(&fam, w, &names);
    let all = results.iter().all(|(_, v)| v.pass);
    let text = if as_json {
        let items: Vec<Value> = results
            .iter()
            .map(|(n, v)| json!({"check": n, "pass": v.pass, "witness": v.witness}))
            .collect();
        pretty(&json!({
            "family": fam.params.describe(),
            "window": w,
            "checks": items,
            "pass": all,
        }))
    } else {
        let mut s = format!("{}\n", fam.params.describe());
        for (n, v) in &results {
            s.push_str(&format!("{n}: {v}\n"));
        }
        s.push_str(if all { "all checks passed\n" } else { "some checks FAILED\n" });
        s
    };
    Ok((text, all))
}

/// `render`: the spectral diagram with index rulers.
pub fn cmd_render(spec_text: &str, window: Option<usize>) -> Result<String, CliError> {
    let spec = parse_spec(spec_text)?;
    let (d, _) = encode(&spec.params)?;
    Ok(d.render(window.unwrap_or(spec.window) as i64))
}

fn change_json(c: &CellChange) -> Value {
    json!({
        "row": c.row.name(),
        "cell": if c.k == i64::MAX { Value::String("tail".into()) } else { json!(c.k) },
        "before": c.before.ascii(),
        "after": c.after.ascii(),
    })
}

/// `rdt`: one Darboux step (or a confluent pair of steps) from the family's
/// operator, with the resulting operator and the diagram change.
pub fn cmd_rdt(spec_text: &str, window: Option<usize>, iota: u8, k: i64, cdt: Option<&Rational>) -> Result<String, CliError> {
    if !(1..=4).contains(&iota) {
        return Err(CliError::new(EXIT_PARSE, format!("--type must be 1..4, got {iota}")));
    }
    let (fam, w) = load(spec_text, window)?;
    let w = w as i64;
    let op = &fam.op;
    let before = diagram_of_operator(op, -w, w);
    let (to, step, intertwiner, changes) = match cdt {
        None => {
            let s = rdt_step(op, iota, k)?;
            let after = diagram_of_operator(&s.to, -w - 2, w + 2);
            let verdict = check_flip(&before, iota, &after);
            if !verdict.pass {
                return Err(CliError::new(EXIT_STEP, format!("the step is not a single flip: {}", verdict.witness)));
            }
            let changes = before.realigned(iota).changes(&after);
            let desc = format!("A[y] = Wr[phi, y] / phi with phi = {}", s.seed.to_string_x());
            let step = json!({"kind": "rdt", "type": iota, "index": k, "lambda": rational_json(&s.lambda)});
            (s.to, step, desc, changes)
        }
        Some(t) => {
            let c = cdt_step(op, iota, k, t)?;
            let after = diagram_of_operator(c.to(), -w, w);
            let changes = before.changes(&after);
            let desc = format!(
                "A = A2 A1, A1[y] = Wr[phi, y] / phi with phi = {}, A2 seeded by (rho + t) / phi with rho = {}",
                c.first.seed.to_string_x(),
                c.rho.to_string_x()
            );
            let step = json!({
                "kind": "cdt",
                "type": iota,
                "index": k,
                "t": rational_json(t),
                "lambda": rational_json(&c.first.lambda),
            });
            (c.to().clone(), step, desc, changes)
        }
    };
    let doc = json!({
        "from": operator_json(op),
        "to": operator_json(&to),
        "gauge_equal_to_source": to.gauge_equal(op),
        "step": step,
        "flip": changes.iter().map(change_json).collect::<Vec<_>>(),
        "intertwiner": intertwiner,
    });
    Ok(pretty(&doc))
}

/// `decode`: the canonical specification of a rendered diagram.
pub fn cmd_decode(diagram_text: &str) -> Result<String, CliError> {
    let d = SpectralDiagram::parse(diagram_text)?;
    let p = decode(&d)?;
    Ok(format_spec(&p, crate::construct::DEFAULT_WINDOW))
}

/// Parse a rational given on the command line.
pub fn parse_rational_arg(s: &str) -> Result<Rational, CliError> {
    parse_q(s.trim()).ok_or_else(|| CliError::new(EXIT_PARSE, format!("not a rational number: {s:?}")))
}
