//! Rendering of exact values as text and JSON.

use serde_json::{json, Value};
use stabkit::chow::ChernVector;
use stabkit::knum::{KClassC0, KClassKu};
use stabkit::numerics::{parse_rational, to_f64, QuadExt, Rational};

use crate::error::{CliError, CliResult};

/// Exact fraction, followed by a decimal when `float` is set.
pub fn rat(r: &Rational, float: bool) -> String {
    if float {
        format!("{r} ({})", to_f64(r))
    } else {
        r.to_string()
    }
}

pub fn quad(q: &QuadExt, float: bool) -> String {
    if float && !q.is_rational() {
        format!("{q} ({})", q.to_f64())
    } else {
        q.to_string()
    }
}

pub fn chern(v: &ChernVector) -> Vec<String> {
    (0..=v.variety().dim())
        .map(|k| v.ch(k).to_string())
        .collect()
}

pub fn c0_json(k: &KClassC0) -> Value {
    json!({ "basis": "clifford", "coeffs": k.coeffs })
}

pub fn ku_json(k: &KClassKu) -> Value {
    json!({ "basis": k.basis.name(), "coeffs": [k.a, k.b] })
}

pub fn parse_rat(s: &str, what: &str) -> CliResult<Rational> {
    parse_rational(s.trim())
        .ok_or_else(|| CliError::Usage(format!("{what}: cannot parse '{s}' as a rational")))
}

/// `a,b,c,...` of rationals.
pub fn parse_rat_list(s: &str, n: usize, what: &str) -> CliResult<Vec<Rational>> {
    let v = s
        .split(',')
        .map(|x| parse_rat(x, what))
        .collect::<CliResult<Vec<_>>>()?;
    if v.len() != n {
        return Err(CliError::Usage(format!(
            "{what}: expected {n} comma-separated values, got {}",
            v.len()
        )));
    }
    Ok(v)
}

pub fn matrix_text(labels: &[String], rows: &[Vec<String>]) -> String {
    let width = rows
        .iter()
        .flatten()
        .chain(labels)
        .map(|s| s.chars().count())
        .max()
        .unwrap_or(1);
    let mut out = String::new();
    out.push_str(&format!("{:>w$}", "", w = width));
    for l in labels {
        out.push_str(&format!("  {l:>width$}"));
    }
    out.push('\n');
    for (l, r) in labels.iter().zip(rows) {
        out.push_str(&format!("{l:>width$}"));
        for x in r {
            out.push_str(&format!("  {x:>width$}"));
        }
        out.push('\n');
    }
    out
}
