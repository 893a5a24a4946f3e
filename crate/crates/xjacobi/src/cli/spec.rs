//! Reading and writing family specification files.

use std::collections::{BTreeMap, BTreeSet};

use serde_json::Value;

use crate::classical::ClassTag;
use crate::construct::DEFAULT_WINDOW;
use crate::diagrams::DiagramParams;
use crate::exactmath::rational::{fmt_q, parse_q, q, Rational};

use super::{CliError, EXIT_PARSE};

/// A parsed specification: the family parameters and the index window.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilySpec {
    pub params: DiagramParams,
    pub window: usize,
}

fn class_keys(tag: ClassTag) -> &'static [&'static str] {
    match tag {
        ClassTag::G | ClassTag::B => &["K1", "K3", "K4"],
        ClassTag::C | ClassTag::CB => &["K1", "K2", "K3", "K4"],
        ClassTag::A => &["K", "L"],
        ClassTag::D => &["K", "L1", "L3", "L4", "t"],
    }
}

fn err(line: usize, msg: impl std::fmt::Display) -> CliError {
    CliError::new(EXIT_PARSE, format!("line {line}: {msg}"))
}

fn rational_value(v: &Value) -> Option<Rational> {
    match v {
        Value::String(s) => parse_q(s.trim()),
        Value::Number(n) => n.as_i64().map(q),
        _ => None,
    }
}

fn parse_rational(line: usize, s: &str) -> Result<Rational, CliError> {
    let t = s.trim().trim_matches('"');
    parse_q(t).ok_or_else(|| err(line, format!("not a rational number: {s}")))
}

fn parse_list(line: usize, s: &str) -> Result<Vec<Value>, CliError> {
    match serde_json::from_str::<Value>(s) {
        Ok(Value::Array(v)) => Ok(v),
        Ok(_) => Err(err(line, format!("expected a list such as [1, 2], got {s}"))),
        Err(e) => Err(err(line, format!("malformed list {s}: {e}"))),
    }
}

fn parse_index_list(line: usize, s: &str) -> Result<Vec<i64>, CliError> {
    parse_list(line, s)?
        .iter()
        .map(|v| v.as_i64().ok_or_else(|| err(line, format!("{v} is not an integer index"))))
        .collect()
}

fn parse_rational_list(line: usize, s: &str) -> Result<Vec<Rational>, CliError> {
    parse_list(line, s)?
        .iter()
        .map(|v| rational_value(v).ok_or_else(|| err(line, format!("{v} is not a rational number"))))
        .collect()
}

/// Parse the text of a specification file.
pub fn parse_spec(text: &str) -> Result<FamilySpec, CliError> {
    let mut entries: BTreeMap<String, (usize, String)> = BTreeMap::new();
    for (n, raw) in text.lines().enumerate() {
        let line = n + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let (k, v) = content
            .split_once('=')
            .ok_or_else(|| err(line, format!("expected `key = value`, got {content:?}")))?;
        let key = k.trim().to_string();
        if entries.insert(key.clone(), (line, v.trim().to_string())).is_some() {
            return Err(err(line, format!("duplicate key {key}")));
        }
    }
    let take = |key: &str| entries.get(key).cloned();
    let (cl, class) = take("class").ok_or_else(|| CliError::new(EXIT_PARSE, "missing key `class`"))?;
    let tag = ClassTag::parse(class.trim_matches('"')).ok_or_else(|| err(cl, format!("unknown class {class}")))?;
    let allowed: BTreeSet<&str> = ["class", "a", "b", "window"].iter().chain(class_keys(tag)).copied().collect();
    for (key, (line, _)) in &entries {
        if !allowed.contains(key.as_str()) {
            return Err(err(*line, format!("key {key} does not belong to class {tag}")));
        }
    }
    let rat = |key: &str| -> Result<Rational, CliError> {
        let (line, v) = take(key).ok_or_else(|| CliError::new(EXIT_PARSE, format!("missing key `{key}`")))?;
        parse_rational(line, &v)
    };
    let list = |key: &str| -> Result<BTreeSet<i64>, CliError> {
        match take(key) {
            Some((line, v)) => Ok(parse_index_list(line, &v)?.into_iter().collect()),
            None => Ok(BTreeSet::new()),
        }
    };
    let mut p = DiagramParams {
        tag: Some(tag),
        a: rat("a")?,
        b: rat("b")?,
        ..Default::default()
    };
    match tag {
        ClassTag::G | ClassTag::B | ClassTag::C | ClassTag::CB => {
            p.k1 = list("K1")?;
            p.k2 = list("K2")?;
            p.k3 = list("K3")?;
            p.k4 = list("K4")?;
        }
        ClassTag::A => {
            p.k = list("K")?;
            p.l = list("L")?;
        }
        ClassTag::D => {
            p.k = list("K")?;
            p.l3 = list("L3")?;
            p.l4 = list("L4")?;
            let l1 = match take("L1") {
                Some((line, v)) => parse_index_list(line, &v)?,
                None => Vec::new(),
            };
            let (tl, ts) = match take("t") {
                Some((line, v)) => (line, parse_rational_list(line, &v)?),
                None => (0, Vec::new()),
            };
            if ts.len() != l1.len() {
                return Err(err(tl, format!("t has {} entries but L1 has {}", ts.len(), l1.len())));
            }
            p.l1 = l1.into_iter().zip(ts).collect();
        }
    }
    let window = match take("window") {
        Some((line, v)) => match v.parse::<usize>() {
            Ok(w) if w > 0 => w,
            _ => return Err(err(line, format!("window must be a positive integer, got {v}"))),
        },
        None => DEFAULT_WINDOW,
    };
    Ok(FamilySpec { params: p, window })
}

fn list_text(s: &BTreeSet<i64>) -> String {
    let v: Vec<String> = s.iter().map(|n| n.to_string()).collect();
    format!("[{}]", v.join(", "))
}

/// The specification file text of a parameter set.
pub fn format_spec(p: &DiagramParams, window: usize) -> String {
    let tag = p.tag();
    let mut out = format!("class = {tag}\na = {}\nb = {}\n", fmt_q(&p.a), fmt_q(&p.b));
    let mut put = |k: &str, v: String| out.push_str(&format!("{k} = {v}\n"));
    match tag {
        ClassTag::G | ClassTag::B => {
            put("K1", list_text(&p.k1));
            put("K3", list_text(&p.k3));
            put("K4", list_text(&p.k4));
        }
        ClassTag::C | ClassTag::CB => {
            put("K1", list_text(&p.k1));
            put("K2", list_text(&p.k2));
            put("K3", list_text(&p.k3));
            put("K4", list_text(&p.k4));
        }
        ClassTag::A => {
            put("K", list_text(&p.k));
            put("L", list_text(&p.l));
        }
        ClassTag::D => {
            put("K", list_text(&p.k));
            put("L1", list_text(&p.l1_set()));
            let ts: Vec<String> = p.l1.values().map(|t| format!("\"{}\"", fmt_q(t))).collect();
            put("t", format!("[{}]", ts.join(", ")));
            put("L3", list_text(&p.l3));
            put("L4", list_text(&p.l4));
        }
    }
    put("window", window.to_string());
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::rational::qf;

    #[test]
    fn parses_the_deformed_family() {
        let s = parse_spec("# example\nclass = D\na = 0\nb = 0\nK = [1]\nL1 = [0]  # deformed\nt = [\"3/2\"]\nwindow = 5\n").unwrap();
        assert_eq!(s.params, DiagramParams::d(q(0), q(0), &[1], &[(0, qf(3, 2))], &[], &[]));
        assert_eq!(s.window, 5);
        assert_eq!(parse_spec(&format_spec(&s.params, 5)).unwrap(), s);
    }

    #[test]
    fn errors_name_the_line() {
        let e = parse_spec("class = G\na = 1/3\nb = 1/5\nL = [1]\n").unwrap_err();
        assert!(e.message.starts_with("line 4"), "{}", e.message);
        let e = parse_spec("class = G\na = x\n").unwrap_err();
        assert!(e.message.starts_with("line 2"), "{}", e.message);
        let e = parse_spec("class = D\na = 0\nb = 0\nL1 = [0, 1]\nt = [1]\n").unwrap_err();
        assert!(e.message.contains("t has 1"), "{}", e.message);
    }
}
