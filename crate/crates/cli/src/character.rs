//! Character specifications: builtin names, lattice coordinates or raw Chern vectors.

use std::path::Path;

use serde::Deserialize;
use serde_json::{json, Value};
use stabkit::chow::{ChernVector, Variety, P2, P3, Y5};
use stabkit::knum::{kappa_bar, KClassC0, KClassKu, KuBasis};

use crate::error::{CliError, CliResult};
use crate::format;

/// Builtin character names, in listing order.
pub const BUILTINS: [&str; 7] = ["C0", "C1", "kappa1", "P_Pi", "F_Pi", "K_Pi", "psi_P_Pi"];

/// A resolved character with the lattice coordinates it was given in.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Character {
    pub label: String,
    pub ch: ChernVector,
    pub clifford: Option<KClassC0>,
    pub ku: Option<KClassKu>,
}

#[derive(Deserialize)]
#[serde(untagged)]
enum Spec {
    Builtin { builtin: String },
    Lattice { basis: String, coeffs: Vec<i64> },
    Raw { variety: String, ch: Vec<Value> },
}

impl Character {
    fn from_c0(label: &str, k: KClassC0) -> Self {
        Character {
            label: label.into(),
            ch: k.ch(),
            clifford: Some(k),
            ku: None,
        }
    }

    fn from_ku(label: &str, k: KClassKu) -> Self {
        let clifford = (k.basis == KuBasis::KappaBar).then(|| k.to_c0().expect("kappabar class"));
        Character {
            label: label.into(),
            ch: k.ch(),
            clifford,
            ku: Some(k),
        }
    }

    pub fn to_json(&self) -> Value {
        let lattice = match (&self.clifford, &self.ku) {
            (_, Some(k)) => format::ku_json(k),
            (Some(k), None) => format::c0_json(k),
            (None, None) => Value::Null,
        };
        json!({
            "label": self.label,
            "variety": self.ch.variety().to_string(),
            "ch": format::chern(&self.ch),
            "lattice": lattice,
        })
    }
}

pub fn builtin(name: &str) -> Option<Character> {
    Some(match name {
        "C0" => Character::from_c0(name, KClassC0::basis(0)),
        "C1" => Character::from_c0(name, KClassC0::basis(1)),
        "kappa1" | "F_Pi" => Character::from_ku(name, KClassKu::kappa(1, 0)),
        "P_Pi" => Character::from_ku(name, KClassKu::kappa(0, 1)),
        "K_Pi" => Character::from_ku(name, KClassKu::kappa(1, -1)),
        "psi_P_Pi" => Character::from_c0(name, kappa_bar(2).scale(-1)),
        _ => return None,
    })
}

fn variety(name: &str) -> CliResult<Variety> {
    match name {
        "P2" => Ok(P2),
        "P3" => Ok(P3),
        "Y" | "Y5" => Ok(Y5),
        _ => Err(CliError::Usage(format!(
            "unknown variety '{name}' (expected P2, P3 or Y5)"
        ))),
    }
}

fn from_spec(spec: Spec) -> CliResult<Character> {
    match spec {
        Spec::Builtin { builtin: name } => lookup(&name),
        Spec::Lattice { basis, coeffs } => match (basis.as_str(), coeffs.as_slice()) {
            ("clifford", &[a, b, c, d]) => {
                let k = KClassC0::new([a, b, c, d]);
                Ok(Character::from_c0(&k.to_string(), k))
            }
            ("kappa", &[a, b]) => Ok(Character::from_ku(&format!("kappa{}", KClassKu::kappa(a, b)), KClassKu::kappa(a, b))),
            ("kappabar", &[a, b]) => {
                let k = KClassKu::kappa_bar(a, b);
                Ok(Character::from_ku(&format!("kappabar{k}"), k))
            }
            _ => Err(CliError::Usage(format!(
                "basis '{basis}' with {} coefficients (clifford takes 4, kappa and kappabar take 2)",
                coeffs.len()
            ))),
        },
        Spec::Raw { variety: name, ch } => {
            let x = variety(&name)?;
            if ch.len() != x.dim() + 1 {
                return Err(CliError::Usage(format!("{name} needs {} Chern coefficients", x.dim() + 1)));
            }
            let coeffs = ch
                .iter()
                .map(|v| match v {
                    Value::String(s) => format::parse_rat(s, "ch"),
                    Value::Number(n) => format::parse_rat(&n.to_string(), "ch"),
                    other => Err(CliError::Usage(format!("ch entry {other} is not a number"))),
                })
                .collect::<CliResult<Vec<_>>>()?;
            let ch = ChernVector::from_coeffs(x, coeffs);
            Ok(Character { label: format!("{ch}"), ch, clifford: None, ku: None })
        }
    }
}

fn lookup(name: &str) -> CliResult<Character> {
    builtin(name).ok_or_else(|| {
        CliError::Usage(format!(
            "unknown character '{name}' (builtins: {})",
            BUILTINS.join(", ")
        ))
    })
}

/// Builtin name, inline JSON, or `@path` to a JSON file.
pub fn parse(s: &str) -> CliResult<Character> {
    let s = s.trim();
    if let Some(path) = s.strip_prefix('@') {
        let text = std::fs::read_to_string(Path::new(path)).map_err(|e| CliError::io(path, e))?;
        return parse_json(&text);
    }
    if s.starts_with('{') {
        return parse_json(s);
    }
    lookup(s)
}

fn parse_json(text: &str) -> CliResult<Character> {
    let spec: Spec =
        serde_json::from_str(text).map_err(|e| CliError::Usage(format!("character JSON: {e}")))?;
    from_spec(spec)
}

/// The character must carry Clifford lattice coordinates on P³.
pub fn require_clifford(c: &Character) -> CliResult<KClassC0> {
    if let Some(k) = c.clifford {
        return Ok(k);
    }
    if c.ch.variety() == P3 {
        return KClassC0::from_ch(&c.ch).map_err(CliError::from);
    }
    Err(CliError::Usage(format!(
        "{} lives on {}; this command needs a class on P3",
        c.label,
        c.ch.variety()
    )))
}

#[cfg(test)]
mod tests {
    use super::*;
    use stabkit::chow::{ch_kappa1, ch_kappa2};

    #[test]
    fn builtins_resolve() {
        for name in BUILTINS {
            assert_eq!(parse(name).unwrap().label, name);
        }
        assert_eq!(
            parse("psi_P_Pi").unwrap().clifford,
            Some(KClassC0::new([1, -4, 4, -1]))
        );
        assert_eq!(parse("kappa1").unwrap().ch, ch_kappa1());
        assert_eq!(parse("P_Pi").unwrap().ch, ch_kappa2());
        assert!(matches!(parse("nope"), Err(CliError::Usage(_))));
    }

    #[test]
    fn json_forms() {
        let c = parse(r#"{"basis":"clifford","coeffs":[0,1,0,0]}"#).unwrap();
        assert_eq!(c.ch, builtin("C0").unwrap().ch);
        let k = parse(r#"{"basis":"kappabar","coeffs":[0,-1]}"#).unwrap();
        assert_eq!(k.clifford, builtin("psi_P_Pi").unwrap().clifford);
        let coeffs = format::chern(&builtin("C0").unwrap().ch);
        let raw = parse(&json!({ "variety": "P3", "ch": coeffs }).to_string()).unwrap();
        assert_eq!(require_clifford(&raw).unwrap(), KClassC0::basis(0));
        assert!(parse(r#"{"variety":"P3","ch":[1,2]}"#).is_err());
        assert!(matches!(
            parse("@/nonexistent/x.json"),
            Err(CliError::Io { .. })
        ));
        assert!(require_clifford(&builtin("kappa1").unwrap()).is_err());
    }
}
