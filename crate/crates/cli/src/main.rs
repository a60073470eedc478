//! `stabkit` command-line entry point.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use stabkit::numerics::Rational;
use stabkit::tilt::beta0;
use stabkit_cli::commands::{pair, pick, tilt, walls};
use stabkit_cli::config::Config;
use stabkit_cli::format::parse_rat;
use stabkit_cli::plot::{self, XiEtaFigure};
use stabkit_cli::{character, verify, CliError, CliResult};

#[derive(Parser)]
#[command(
    name = "stabkit",
    version,
    about = "Exact stability-condition computations for a cubic fivefold and its Clifford model"
)]
struct Cli {
    /// TOML file overriding `bound`, `beta`, `window` and `plot_window`.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Print JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Add decimal renderings next to exact fractions.
    #[arg(long, global = true)]
    float: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Gram matrix of the Euler pairing.
    Pair {
        /// clifford3, clifford2, kappaY or kappabar.
        #[arg(long)]
        basis: String,
    },
    /// Tilt charge, slope and plane point of a character.
    Tilt {
        #[arg(long = "char")]
        character: String,
        #[arg(long = "alpha-sq", allow_hyphen_values = true)]
        alpha_sq: String,
        #[arg(long, allow_hyphen_values = true)]
        beta: Option<String>,
    },
    /// Walls of a class on P3 along a vertical line or inside a window.
    Walls {
        #[arg(long = "char")]
        character: String,
        #[arg(long, allow_hyphen_values = true)]
        beta: Option<String>,
        #[arg(long)]
        bound: Option<i64>,
        /// xi_lo,xi_hi,eta_lo,eta_hi
        #[arg(long, allow_hyphen_values = true)]
        window: Option<String>,
        /// Directory for walls.csv, walls.json and walls.svg.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// SVG figure: hexagon or xieta.
    Plot {
        figure: String,
        /// Characters to mark in the (xi, eta) plane.
        #[arg(long, value_delimiter = ',')]
        points: Vec<String>,
        /// `ell0` draws the ray l0.
        #[arg(long)]
        ray: Option<String>,
        /// Character whose walls are drawn.
        #[arg(long = "walls-of")]
        walls_of: Option<String>,
        #[arg(long)]
        bound: Option<i64>,
        /// Viewport xi_lo,xi_hi,eta_lo,eta_hi.
        #[arg(long, allow_hyphen_values = true)]
        window: Option<String>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run every verification check.
    Verify {
        /// Also write the JSON report here.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Pick decomposition tree of a primitive class.
    #[command(allow_negative_numbers = true)]
    Pick {
        a: i64,
        b: i64,
        /// kappa or kappabar.
        #[arg(long, default_value = "kappa")]
        basis: String,
    },
}

fn write_file(path: &PathBuf, body: &str) -> CliResult<()> {
    std::fs::write(path, body).map_err(|e| CliError::io(path, e))
}

fn beta_of(flag: Option<String>, cfg: &Config) -> CliResult<Rational> {
    match flag.or_else(|| cfg.beta.clone()) {
        Some(s) => parse_rat(&s, "beta"),
        None => Ok(beta0()),
    }
}

fn run(cli: Cli) -> CliResult<String> {
    let cfg = match &cli.config {
        Some(p) => Config::load(p)?,
        None => Config::default(),
    };
    let plot_window = match &cfg.plot_window {
        Some(w) => plot::parse_window(w)?,
        None => plot::default_xieta_window(),
    };
    match cli.command {
        Command::Pair { basis } => Ok(pair::run(&basis, cli.float)?.render(cli.json)),
        Command::Tilt {
            character,
            alpha_sq,
            beta,
        } => {
            let c = character::parse(&character)?;
            let a = parse_rat(&alpha_sq, "alpha-sq")?;
            Ok(tilt::run(&c, &a, &beta_of(beta, &cfg)?, cli.float)?.render(cli.json))
        }
        Command::Walls {
            character,
            beta,
            bound,
            window,
            out,
        } => {
            let c = character::parse(&character)?;
            let bound = bound.or(cfg.bound).unwrap_or(5);
            let window = window
                .or(cfg.window.clone())
                .map(|w| plot::parse_window(&w))
                .transpose()?;
            let r = walls::run(
                &c,
                &beta_of(beta, &cfg)?,
                bound,
                window.as_ref(),
                &plot_window,
                cli.float,
            )?;
            if let Some(dir) = out {
                walls::write_artifacts(&r, &dir)?;
            }
            Ok(r.output.render(cli.json))
        }
        Command::Plot {
            figure,
            points,
            ray,
            walls_of,
            bound,
            window,
            out,
        } => {
            let svg = match figure.as_str() {
                "hexagon" => plot::render_hexagon()?,
                "xieta" => {
                    let view = match window {
                        Some(w) => plot::parse_window(&w)?,
                        None => plot_window,
                    };
                    let mut fig = XiEtaFigure::new(view);
                    for p in &points {
                        fig.add_character(&character::parse(p)?)?;
                    }
                    match ray.as_deref() {
                        None => {}
                        Some("ell0") => fig.ray_ell0 = true,
                        Some(other) => {
                            return Err(CliError::Usage(format!(
                                "unknown ray '{other}' (expected ell0)"
                            )))
                        }
                    }
                    if let Some(w) = walls_of {
                        let c = character::parse(&w)?;
                        let bound = bound.or(cfg.bound).unwrap_or(5);
                        let scan = fig.window.clone();
                        for (i, e) in walls::find(&c, &beta0(), bound, Some(&scan))?
                            .iter()
                            .enumerate()
                        {
                            fig.add_wall(format!("W{i}"), &e.endpoints);
                        }
                    }
                    plot::render_xieta(&fig)
                }
                other => {
                    return Err(CliError::Usage(format!(
                        "unknown figure '{other}' (expected hexagon or xieta)"
                    )))
                }
            };
            match out {
                Some(path) => {
                    write_file(&path, &svg)?;
                    Ok(String::new())
                }
                None => Ok(svg),
            }
        }
        Command::Verify { out } => {
            let report = verify::run();
            let json = serde_json::to_string_pretty(&report).expect("report serializes") + "\n";
            if let Some(path) = out {
                write_file(&path, &json)?;
            }
            let text = if cli.json { json } else { report.text() };
            if report.failures > 0 {
                print!("{text}");
                return Err(CliError::Checks(report.failures));
            }
            Ok(text)
        }
        Command::Pick { a, b, basis } => Ok(pick::run(a, b, &basis)?.render(cli.json)),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(text) => {
            print!("{text}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
