//! Deterministic hand-written SVG figures.

use std::fmt::Write;

use stabkit::chow::{ch_plane_ideal, P3};
use stabkit::knum::{project_ku_y, KClassKu};
use stabkit::numerics::{rat, to_f64, Rational};
use stabkit::tilt::{v_point, SurdPoint, VPoint};
use stabkit::walls::Window;

use crate::character::Character;
use crate::error::{CliError, CliResult};

const WIDTH: f64 = 640.0;
const HEIGHT: f64 = 480.0;
const MARGIN: f64 = 40.0;

/// Fixed three-decimal rendering without a negative zero.
fn n(x: f64) -> String {
    let s = format!("{x:.3}");
    if s == "-0.000" {
        "0.000".into()
    } else {
        s
    }
}

fn header(out: &mut String, title: &str) {
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {w} {h}" width="{w}" height="{h}" font-family="serif" font-size="13">"#,
        w = WIDTH,
        h = HEIGHT
    );
    let _ = writeln!(out, "<title>{title}</title>");
    out.push_str(
        "<defs><marker id=\"arrow\" viewBox=\"0 0 10 10\" refX=\"9\" refY=\"5\" markerWidth=\"6\" markerHeight=\"6\" orient=\"auto\">\
         <path d=\"M0,0 L10,5 L0,10 z\"/></marker></defs>\n",
    );
    let _ = writeln!(
        out,
        r#"<rect x="0" y="0" width="{WIDTH}" height="{HEIGHT}" fill="white"/>"#
    );
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
}

/// Viewport coordinates `(ξ, η)`.
pub type Point = (f64, f64);

/// `(ξ, η)` plane with `Γ`, character points, the ray `ℓ₀` and walls.
#[derive(Clone, Debug, PartialEq)]
pub struct XiEtaFigure {
    pub window: Window,
    pub points: Vec<(String, VPoint)>,
    pub ray_ell0: bool,
    pub walls: Vec<(String, Point, Point)>,
}

/// `ξ ∈ [−1/2, 1/2]`, `η ∈ [−1/32, 3/16]`.
pub fn default_xieta_window() -> Window {
    Window {
        xi_lo: rat(-1, 2),
        xi_hi: rat(1, 2),
        eta_lo: rat(-1, 32),
        eta_hi: rat(3, 16),
    }
}

impl XiEtaFigure {
    pub fn new(window: Window) -> Self {
        XiEtaFigure {
            window,
            points: Vec::new(),
            ray_ell0: false,
            walls: Vec::new(),
        }
    }

    pub fn add_character(&mut self, c: &Character) -> CliResult<()> {
        if c.ch.variety() != P3 {
            return Err(CliError::Usage(format!(
                "{} lives on {}; the (xi, eta) plane is for classes on P3",
                c.label,
                c.ch.variety()
            )));
        }
        self.points.push((c.label.clone(), v_point(&c.ch)?));
        Ok(())
    }

    pub fn add_wall(&mut self, label: String, ends: &(SurdPoint, SurdPoint)) {
        let f = |p: &SurdPoint| (p.xi.to_f64(), p.eta.to_f64());
        self.walls.push((label, f(&ends.0), f(&ends.1)));
    }

    fn map(&self, xi: f64, eta: f64) -> (f64, f64) {
        let w = &self.window;
        let (x0, x1) = (to_f64(&w.xi_lo), to_f64(&w.xi_hi));
        let (y0, y1) = (to_f64(&w.eta_lo), to_f64(&w.eta_hi));
        let x = MARGIN + (xi - x0) / (x1 - x0) * (WIDTH - 2.0 * MARGIN);
        let y = HEIGHT - MARGIN - (eta - y0) / (y1 - y0) * (HEIGHT - 2.0 * MARGIN);
        (x, y)
    }
}

/// Parses `xi_lo,xi_hi,eta_lo,eta_hi`.
pub fn parse_window(s: &str) -> CliResult<Window> {
    let v = crate::format::parse_rat_list(s, 4, "window")?;
    let w = Window {
        xi_lo: v[0].clone(),
        xi_hi: v[1].clone(),
        eta_lo: v[2].clone(),
        eta_hi: v[3].clone(),
    };
    if w.is_empty() {
        return Err(CliError::Usage(format!("window '{s}' is empty")));
    }
    Ok(w)
}

pub fn render_xieta(fig: &XiEtaFigure) -> String {
    let w = &fig.window;
    let mut out = String::new();
    header(&mut out, "(xi, eta) plane");
    let (left, right) = (MARGIN, WIDTH - MARGIN);
    let (top, bottom) = (MARGIN, HEIGHT - MARGIN);
    let _ = writeln!(
        out,
        r#"<clipPath id="plot"><rect x="{}" y="{}" width="{}" height="{}"/></clipPath>"#,
        n(left),
        n(top),
        n(right - left),
        n(bottom - top)
    );
    let _ = writeln!(
        out,
        r##"<rect x="{}" y="{}" width="{}" height="{}" fill="none" stroke="#999"/>"##,
        n(left),
        n(top),
        n(right - left),
        n(bottom - top)
    );
    let zero = Rational::from_integer(0.into());
    if w.xi_lo <= zero && zero <= w.xi_hi {
        let (x, _) = fig.map(0.0, 0.0);
        let _ = writeln!(
            out,
            r##"<line x1="{0}" y1="{1}" x2="{0}" y2="{2}" stroke="#666"/>"##,
            n(x),
            n(bottom),
            n(top)
        );
    }
    if w.eta_lo <= zero && zero <= w.eta_hi {
        let (_, y) = fig.map(0.0, 0.0);
        let _ = writeln!(
            out,
            r##"<line x1="{1}" y1="{0}" x2="{2}" y2="{0}" stroke="#666"/>"##,
            n(y),
            n(left),
            n(right)
        );
    }
    let _ = writeln!(
        out,
        r#"<text x="{}" y="{}" text-anchor="end">ξ</text>"#,
        n(right),
        n(bottom + 20.0)
    );
    let _ = writeln!(
        out,
        r#"<text x="{}" y="{}">η</text>"#,
        n(left - 25.0),
        n(top)
    );

    let (a, b) = (&w.xi_lo, &w.xi_hi);
    let half = rat(1, 2);
    let p0 = fig.map(to_f64(a), to_f64(&(a * a * &half)));
    let p2 = fig.map(to_f64(b), to_f64(&(b * b * &half)));
    let c = fig.map(to_f64(&((a + b) * &half)), to_f64(&(a * b * &half)));
    let _ = writeln!(
        out,
        r#"<path d="M{},{} Q{},{} {},{}" fill="none" stroke="black" stroke-width="1.5" clip-path="url(#plot)"/>"#,
        n(p0.0),
        n(p0.1),
        n(c.0),
        n(c.1),
        n(p2.0),
        n(p2.1)
    );
    let _ = writeln!(
        out,
        r#"<text x="{}" y="{}">Γ</text>"#,
        n(p2.0 - 18.0),
        n(p2.1 + 16.0)
    );

    if fig.ray_ell0 {
        let start = fig.map(-0.25, 1.0 / 32.0);
        let end = fig.map(to_f64(a).min(-0.25), 1.0 / 32.0);
        let _ = writeln!(
            out,
            r#"<line x1="{}" y1="{}" x2="{}" y2="{}" stroke="black" stroke-dasharray="4 3" clip-path="url(#plot)"/>"#,
            n(start.0),
            n(start.1),
            n(end.0),
            n(end.1)
        );
        let _ = writeln!(
            out,
            r#"<text x="{}" y="{}">ℓ₀</text>"#,
            n((start.0 + end.0) / 2.0),
            n(start.1 - 6.0)
        );
    }

    for (label, e1, e2) in &fig.walls {
        let (x1, y1) = fig.map(e1.0, e1.1);
        let (x2, y2) = fig.map(e2.0, e2.1);
        let _ = writeln!(
            out,
            r##"<line x1="{}" y1="{}" x2="{}" y2="{}" stroke="#1f4e9a" stroke-width="1.2" clip-path="url(#plot)"/>"##,
            n(x1),
            n(y1),
            n(x2),
            n(y2)
        );
        let _ = writeln!(
            out,
            r##"<text x="{}" y="{}" fill="#1f4e9a">{}</text>"##,
            n((x1 + x2) / 2.0),
            n((y1 + y2) / 2.0 - 5.0),
            escape(label)
        );
    }

    let mut notes = Vec::new();
    for (label, p) in &fig.points {
        match p {
            VPoint::Finite { xi, eta } => {
                let (x, y) = fig.map(to_f64(xi), to_f64(eta));
                let _ = writeln!(
                    out,
                    r#"<circle cx="{}" cy="{}" r="3" fill="black"/>"#,
                    n(x),
                    n(y)
                );
                let _ = writeln!(
                    out,
                    r#"<text x="{}" y="{}">{} ({}, {})</text>"#,
                    n(x + 5.0),
                    n(y - 6.0),
                    escape(label),
                    xi,
                    eta
                );
            }
            VPoint::Infinite { slope: Some(m) } => {
                notes.push(format!("{label}: point at infinity, direction slope {m}"))
            }
            VPoint::Infinite { slope: None } => {
                notes.push(format!("{label}: point at infinity, vertical direction"))
            }
        }
    }
    for (i, note) in notes.iter().enumerate() {
        let _ = writeln!(
            out,
            r#"<text x="{}" y="{}">{}</text>"#,
            n(left),
            n(HEIGHT - 8.0 - 15.0 * (notes.len() - 1 - i) as f64),
            escape(note)
        );
    }
    out.push_str("</svg>\n");
    out
}

fn ku_name(v: &KClassKu) -> String {
    let mut terms: Vec<(i64, &str)> = [(v.a, "κ₁"), (v.b, "κ₂")]
        .into_iter()
        .filter(|t| t.0 != 0)
        .collect();
    terms.sort_by_key(|t| t.0 < 0);
    if terms.is_empty() {
        return "0".into();
    }
    let mut s = String::new();
    for (i, (c, name)) in terms.iter().enumerate() {
        let mag = if c.abs() == 1 {
            name.to_string()
        } else {
            format!("{}{name}", c.abs())
        };
        let sep = match (i, *c < 0) {
            (0, true) => "−",
            (0, false) => "",
            (_, true) => " − ",
            (_, false) => " + ",
        };
        s.push_str(sep);
        s.push_str(&mag);
    }
    s
}

/// Labelled classes of the hexagon figure, from the projection pipeline.
pub fn hexagon_labels() -> CliResult<Vec<(KClassKu, String)>> {
    let ip = ch_plane_ideal();
    let p_pi = project_ku_y(&ip)?;
    let l_ip1 = project_ku_y(&ip.twist(1))?;
    let f_pi = l_ip1.neg();
    let k_pi = project_ku_y(&ip.twist(-1))?;
    let mut labels = vec![
        (f_pi, format!("{} = [F_Π]", ku_name(&f_pi))),
        (p_pi, format!("{} = [P_Π]", ku_name(&p_pi))),
        (l_ip1, format!("{} = [L_O I_Π(1)]", ku_name(&l_ip1))),
        (k_pi, format!("{} = [K_Π]", ku_name(&k_pi))),
    ];
    for v in [
        KClassKu::kappa(-1, 1),
        KClassKu::kappa(0, -1),
        KClassKu::kappa(1, 1),
    ] {
        if labels.iter().all(|(w, _)| *w != v) {
            labels.push((v, ku_name(&v)));
        }
    }
    labels.sort_by_key(|(v, _)| (v.b, v.a));
    Ok(labels)
}

/// Hexagonal picture of the rank-2 lattice with the Serre and rotation arcs.
pub fn render_hexagon() -> CliResult<String> {
    let s3 = 3f64.sqrt() / 2.0;
    let scale = 110.0;
    let (ox, oy) = (170.0, 300.0);
    let pos = |a: i64, b: i64| {
        (
            ox + scale * (a as f64 + b as f64 / 2.0),
            oy - scale * (b as f64 * s3),
        )
    };
    let mut out = String::new();
    header(&mut out, "hexagonal lattice");
    for (a, b) in [(3, 0), (0, 2), (-2, 2)] {
        let (x, y) = pos(a, b);
        let _ = writeln!(
            out,
            r#"<line x1="{}" y1="{}" x2="{}" y2="{}" stroke="black" stroke-dasharray="5 4"/>"#,
            n(ox),
            n(oy),
            n(x),
            n(y)
        );
    }
    let (x, y) = pos(3, 0);
    let _ = writeln!(
        out,
        r#"<text x="{}" y="{}">κ₁-axis</text>"#,
        n(x + 8.0),
        n(y - 8.0)
    );
    let (x, y) = pos(0, 2);
    let _ = writeln!(
        out,
        r#"<text x="{}" y="{}">κ₂-axis</text>"#,
        n(x + 8.0),
        n(y - 8.0)
    );
    for (r, deg, label) in [(0.666, 60.0f64, "S"), (0.233, 120.0f64, "O")] {
        let t = deg.to_radians();
        let (x0, y0) = (ox + scale * r, oy);
        let (x1, y1) = (ox + scale * r * t.cos(), oy - scale * r * t.sin());
        let _ = writeln!(
            out,
            r#"<path d="M{},{} A{},{} 0 0 0 {},{}" fill="none" stroke="black" stroke-width="0.8" marker-end="url(#arrow)"/>"#,
            n(x0),
            n(y0),
            n(scale * r),
            n(scale * r),
            n(x1),
            n(y1)
        );
        let mid = t / 2.0;
        let _ = writeln!(
            out,
            r#"<text x="{}" y="{}" font-style="italic">{label}</text>"#,
            n(ox + scale * (r + 0.08) * mid.cos()),
            n(oy - scale * (r + 0.08) * mid.sin())
        );
    }
    for b in -1..=2 {
        for a in -3..=4 {
            let (x, y) = pos(a, b);
            if (ox - 1.05 * scale..=ox + 3.55 * scale).contains(&x) {
                let _ = writeln!(
                    out,
                    r#"<circle cx="{}" cy="{}" r="3" fill="black"/>"#,
                    n(x),
                    n(y)
                );
            }
        }
    }
    for (v, label) in hexagon_labels()? {
        let (x, y) = pos(v.a, v.b);
        let dy = if v.b < 0 || (v.b == 0 && v.a != 0) {
            18.0
        } else {
            -10.0
        };
        let _ = writeln!(
            out,
            r#"<text x="{}" y="{}" text-anchor="middle" class="label">{}</text>"#,
            n(x),
            n(y + dy),
            escape(&label)
        );
    }
    out.push_str("</svg>\n");
    Ok(out)
}
