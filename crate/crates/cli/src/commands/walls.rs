//! Wall search for a class on P³, with CSV, JSON and SVG artifacts.

use std::collections::BTreeMap;
use std::path::Path;

use serde_json::{json, Value};
use stabkit::numerics::Rational;
use stabkit::tilt::SurdPoint;
use stabkit::walls::{
    destabilizer_search, numerical_wall_line, wall_scan, DestabCandidate, WallLine, Window,
};

use super::Output;
use crate::character::{require_clifford, Character};
use crate::error::{CliError, CliResult};
use crate::format;
use crate::plot::{self, XiEtaFigure};

/// One wall with the splits realizing it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WallEntry {
    pub line: WallLine,
    pub endpoints: (SurdPoint, SurdPoint),
    pub hits: Vec<(Rational, Rational, DestabCandidate)>,
}

/// Everything `walls` produces.
#[derive(Clone, Debug, PartialEq)]
pub struct WallsRun {
    pub output: Output,
    pub csv: String,
    pub svg: String,
}

pub const CSV_HEADER: [&str; 6] = [
    "beta",
    "alpha_sq",
    "sub_coeffs",
    "quot_coeffs",
    "delta_sub",
    "delta_quot",
];

fn coeffs(k: &stabkit::knum::KClassC0) -> String {
    k.coeffs
        .iter()
        .map(|c| c.to_string())
        .collect::<Vec<_>>()
        .join(";")
}

/// Walls crossing the vertical line `β`, or meeting `window` when one is given.
pub fn find(
    c: &Character,
    beta: &Rational,
    bound: i64,
    window: Option<&Window>,
) -> CliResult<Vec<WallEntry>> {
    require_clifford(c)?;
    if let Some(w) = window {
        let report = wall_scan(&c.ch, w, bound)?;
        return Ok(report
            .walls
            .into_iter()
            .zip(report.hits)
            .map(|(wall, hits)| WallEntry {
                line: wall.line,
                endpoints: wall.endpoints,
                hits: hits
                    .into_iter()
                    .map(|h| (h.beta, h.alpha_sq, h.candidate))
                    .collect(),
            })
            .collect());
    }
    let mut grouped: BTreeMap<(Rational, WallLine), WallEntry> = BTreeMap::new();
    for (alpha_sq, cand) in destabilizer_search(&c.ch, beta, bound)? {
        let wall = numerical_wall_line(&c.ch, &cand.sub.ch())?;
        grouped
            .entry((alpha_sq.clone(), wall.line.clone()))
            .or_insert_with(|| WallEntry {
                line: wall.line,
                endpoints: wall.endpoints,
                hits: Vec::new(),
            })
            .hits
            .push((beta.clone(), alpha_sq, cand));
    }
    Ok(grouped.into_values().collect())
}

fn csv_text(walls: &[WallEntry]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(CSV_HEADER).expect("in-memory write");
    for (b, a, c) in walls.iter().flat_map(|e| &e.hits) {
        let r = &c.constraints_report;
        let row = [
            b.to_string(),
            a.to_string(),
            coeffs(&c.sub),
            coeffs(&c.quotient),
            r.delta_sub.to_string(),
            r.delta_quot.to_string(),
        ];
        w.write_record(&row).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("CSV is UTF-8")
}

fn point_json(p: &SurdPoint) -> Value {
    json!([p.xi.to_string(), p.eta.to_string()])
}

pub fn run(
    c: &Character,
    beta: &Rational,
    bound: i64,
    window: Option<&Window>,
    plot_window: &Window,
    float: bool,
) -> CliResult<WallsRun> {
    let walls = find(c, beta, bound, window)?;
    let scope = match window {
        Some(w) => format!(
            "window xi in [{}, {}], eta in [{}, {}]",
            w.xi_lo, w.xi_hi, w.eta_lo, w.eta_hi
        ),
        None => format!("beta = {}", format::rat(beta, float)),
    };
    let mut text = format!(
        "{} wall(s) for {} at {scope}, bound {bound}\n",
        walls.len(),
        c.label
    );
    for (i, e) in walls.iter().enumerate() {
        let (_, a, _) = &e.hits[0];
        text.push_str(&format!(
            "wall {i}: {}  alpha^2 = {}  endpoints ({}, {}) and ({}, {})\n",
            e.line,
            format::rat(a, float),
            format::quad(&e.endpoints.0.xi, float),
            format::quad(&e.endpoints.0.eta, float),
            format::quad(&e.endpoints.1.xi, float),
            format::quad(&e.endpoints.1.eta, float),
        ));
        for (b, a, cand) in &e.hits {
            let r = &cand.constraints_report;
            text.push_str(&format!(
                "  beta {} alpha^2 {}: sub {} quotient {} Delta {} / {}\n",
                format::rat(b, float),
                format::rat(a, float),
                cand.sub,
                cand.quotient,
                format::rat(&r.delta_sub, float),
                format::rat(&r.delta_quot, float),
            ));
        }
    }
    let walls_json: Vec<Value> = walls
        .iter()
        .map(|e| {
            json!({
                "line": e.line.to_string(),
                "endpoints": [point_json(&e.endpoints.0), point_json(&e.endpoints.1)],
                "realizers": e.hits.iter().map(|(b, a, cand)| json!({
                    "beta": b.to_string(),
                    "alpha_sq": a.to_string(),
                    "sub": format::c0_json(&cand.sub),
                    "quotient": format::c0_json(&cand.quotient),
                    "delta_sub": cand.constraints_report.delta_sub.to_string(),
                    "delta_quot": cand.constraints_report.delta_quot.to_string(),
                    "active": cand.constraints_report.active(),
                })).collect::<Vec<_>>(),
            })
        })
        .collect();
    let json = json!({
        "target": c.to_json(),
        "beta": beta.to_string(),
        "bound": bound,
        "window": window.map(|w| [w.xi_lo.to_string(), w.xi_hi.to_string(), w.eta_lo.to_string(), w.eta_hi.to_string()]),
        "walls": walls_json,
    });
    let mut fig = XiEtaFigure::new(plot_window.clone());
    fig.add_character(c)?;
    for (i, e) in walls.iter().enumerate() {
        fig.add_wall(format!("W{i}"), &e.endpoints);
    }
    Ok(WallsRun {
        output: Output { text, json },
        csv: csv_text(&walls),
        svg: plot::render_xieta(&fig),
    })
}

/// Writes `walls.csv`, `walls.json` and `walls.svg` into `dir`.
pub fn write_artifacts(run: &WallsRun, dir: &Path) -> CliResult<()> {
    std::fs::create_dir_all(dir).map_err(|e| CliError::io(dir, e))?;
    let json = run.output.render(true);
    for (name, body) in [
        ("walls.csv", &run.csv),
        ("walls.json", &json),
        ("walls.svg", &run.svg),
    ] {
        let path = dir.join(name);
        std::fs::write(&path, body).map_err(|e| CliError::io(&path, e))?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::character::builtin;
    use crate::plot::default_xieta_window;
    use stabkit::numerics::rat;

    #[test]
    fn torsion_has_one_wall() {
        let r = run(
            &builtin("psi_P_Pi").unwrap(),
            &rat(-5, 4),
            5,
            None,
            &default_xieta_window(),
            false,
        )
        .unwrap();
        let walls = r.output.json["walls"].as_array().unwrap();
        assert_eq!(walls.len(), 1);
        assert!(walls[0]["realizers"]
            .as_array()
            .unwrap()
            .iter()
            .all(|h| h["alpha_sq"] == "1/16"));
        assert!(r
            .csv
            .starts_with("beta,alpha_sq,sub_coeffs,quot_coeffs,delta_sub,delta_quot\n"));
        assert!(r.csv.contains("-5/4,1/16,0;0;1;0,1;-4;3;-1,0,0\n"));
    }

    #[test]
    fn clifford_sheaf_has_none() {
        let r = run(
            &builtin("C1").unwrap(),
            &rat(-5, 4),
            3,
            None,
            &default_xieta_window(),
            false,
        )
        .unwrap();
        assert_eq!(r.output.json["walls"], json!([]));
        assert!(run(
            &builtin("kappa1").unwrap(),
            &rat(-5, 4),
            3,
            None,
            &default_xieta_window(),
            false
        )
        .is_err());
    }
}
