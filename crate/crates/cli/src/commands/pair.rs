//! Gram matrices of the Euler pairing in the standard bases.

use serde_json::json;
use stabkit::chow::{ch_kappa1, ch_kappa2, euler_pairing, euler_pairing_c0};
use stabkit::knum::{euler_c0, kappa_bar};
use stabkit::numerics::{det, int, Rational};

use super::Output;
use crate::error::{CliError, CliResult};
use crate::format;

pub const BASES: [&str; 4] = ["clifford3", "clifford2", "kappaY", "kappabar"];

/// Labels and Gram matrix `χ(eᵢ, eⱼ)` of a named basis.
pub fn gram(basis: &str) -> CliResult<(Vec<String>, Vec<Vec<Rational>>)> {
    let clifford = |range: std::ops::RangeInclusive<i64>, m: usize| {
        let labels = range.clone().map(|j| format!("C{j}")).collect();
        let rows = range
            .clone()
            .map(|i| range.clone().map(|j| euler_pairing_c0(i, j, m)).collect())
            .collect();
        (labels, rows)
    };
    Ok(match basis {
        "clifford3" => clifford(-1..=2, 3),
        "clifford2" => clifford(0..=2, 2),
        "kappaY" => {
            let k = [ch_kappa1(), ch_kappa2()];
            let rows = k
                .iter()
                .map(|u| k.iter().map(|w| euler_pairing(u, w)).collect())
                .collect::<Result<_, _>>()?;
            (vec!["kappa1".into(), "kappa2".into()], rows)
        }
        "kappabar" => {
            let k = [kappa_bar(1), kappa_bar(2)];
            let rows = k
                .iter()
                .map(|u| k.iter().map(|w| int(euler_c0(u, w))).collect())
                .collect();
            (vec!["kappabar1".into(), "kappabar2".into()], rows)
        }
        _ => {
            return Err(CliError::Usage(format!(
                "unknown basis '{basis}' (expected one of {})",
                BASES.join(", ")
            )))
        }
    })
}

pub fn run(basis: &str, float: bool) -> CliResult<Output> {
    let (labels, m) = gram(basis)?;
    let d = det(&m);
    let unimodular = d == int(1) || d == int(-1);
    let cells: Vec<Vec<String>> = m
        .iter()
        .map(|r| r.iter().map(|x| format::rat(x, float)).collect())
        .collect();
    let mut text = format!("Euler pairing chi(row, column), basis {basis}\n");
    text.push_str(&format::matrix_text(&labels, &cells));
    text.push_str(&format!(
        "det = {}{}\n",
        format::rat(&d, float),
        if unimodular { " (unimodular)" } else { "" }
    ));
    let json = json!({
        "basis": basis,
        "labels": labels,
        "matrix": m.iter().map(|r| r.iter().map(|x| x.to_string()).collect::<Vec<_>>()).collect::<Vec<_>>(),
        "det": d.to_string(),
        "unimodular": unimodular,
    });
    Ok(Output { text, json })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn clifford_bases() {
        let (_, m) = gram("clifford3").unwrap();
        assert_eq!(det(&m), int(1));
        let out = run("clifford2", false).unwrap();
        assert_eq!(out.json["matrix"][0], json!(["2", "3", "6"]));
        assert_eq!(out.json["det"], "8");
        let ky = run("kappaY", false).unwrap();
        assert_eq!(ky.json["matrix"], json!([["-1", "-1"], ["0", "-1"]]));
        assert_eq!(
            run("kappabar", false).unwrap().json["matrix"],
            ky.json["matrix"]
        );
        assert!(matches!(run("bogus", false), Err(CliError::Usage(_))));
    }
}
