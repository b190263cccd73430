//! Command-line front end. [`run`] does all the work and returns captured
//! output plus an exit code, so the binary stays a thin shell and the
//! commands can be tested in-process.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use crate::empirical::{self, builtin_dataset, validate, MeasurementRecord};
use crate::error::Error;
use crate::model::{self, PuzzleSpec, SQRT_3};
use crate::plot::PlotSpec;
use crate::sim::{self, ratio_statistics, run_batch, SimParams, SimResult, Strategy};

/// Process exit codes.
pub mod exit {
    pub const SUCCESS: i32 = 0;
    pub const DOES_NOT_FIT: i32 = 2;
    pub const USAGE: i32 = 64;
    pub const DATA: i32 = 65;
    pub const IO: i32 = 66;
}

pub const RESULTS_CSV_HEADER: &str =
    "seed,pieces,hull_area_cm2,ellipse_area_cm2,major_cm,minor_cm,ratio_hull,ratio_ellipse";

#[derive(Debug, Parser)]
#[command(
    name = "jigsaw",
    version,
    about = "Table space needed by an unassembled jigsaw puzzle"
)]
pub struct Cli {
    /// Do not print the version banner on stderr.
    #[arg(long, global = true)]
    pub no_banner: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Predict the spread area from the assembled size.
    Predict(PredictArgs),
    /// Generate piece layouts and measure their spread.
    Simulate(SimulateArgs),
    /// Compare measured puzzles with the prediction.
    Validate(ValidateArgs),
    /// Draw measured against predicted areas as SVG.
    Plot(PlotArgs),
}

#[derive(Debug, Args)]
#[command(allow_negative_numbers = true)]
pub struct PredictArgs {
    /// Assembled area in cm².
    #[arg(long)]
    pub area: Option<f64>,
    /// Assembled width in cm.
    #[arg(long)]
    pub width: Option<f64>,
    /// Assembled height in cm.
    #[arg(long)]
    pub height: Option<f64>,
    /// Number of pieces; enables the per-piece breakdown.
    #[arg(long)]
    pub pieces: Option<u64>,
    /// Table size as WIDTHxHEIGHT in cm, e.g. 90x70.
    #[arg(long, value_parser = parse_table)]
    pub table: Option<(f64, f64)>,
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Args)]
#[command(allow_negative_numbers = true)]
pub struct SimulateArgs {
    #[arg(long)]
    pub pieces: usize,
    /// Assembled area in cm²; sets the piece size.
    #[arg(long)]
    pub area: f64,
    #[arg(long, default_value = "greedy-radial", value_parser = ["hex", "greedy-radial", "grid"])]
    pub strategy: String,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Number of seeds to run, starting at --seed.
    #[arg(long, default_value_t = 1)]
    pub runs: usize,
    /// Directions tried per piece (greedy-radial).
    #[arg(long, default_value_t = 64)]
    pub candidate_angles: usize,
    /// March step as a fraction of the piece diagonal (greedy-radial).
    #[arg(long, default_value_t = 0.05)]
    pub radial_step: f64,
    /// Displacement scale in [0, 1) (hex).
    #[arg(long, default_value_t = 0.0)]
    pub jitter: f64,
    /// Gap between pieces in cm (grid).
    #[arg(long, default_value_t = 0.0)]
    pub gap: f64,
    /// Write an SVG of the last run's layout.
    #[arg(long)]
    pub svg: Option<PathBuf>,
    /// Write one CSV row of measurements per run.
    #[arg(long)]
    pub csv: Option<PathBuf>,
    /// Write the last run's piece positions as CSV.
    #[arg(long)]
    pub layout_csv: Option<PathBuf>,
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Args)]
pub struct ValidateArgs {
    /// Measurement CSV; defaults to the bundled dataset.
    #[arg(long)]
    pub data: Option<PathBuf>,
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Args)]
pub struct PlotArgs {
    /// Measurement CSV; defaults to the bundled dataset.
    #[arg(long)]
    pub data: Option<PathBuf>,
    /// Output SVG path.
    #[arg(long)]
    pub out: PathBuf,
}

/// Parses `WIDTHxHEIGHT`. Only the syntax is checked here; the numbers are
/// range-checked by the model.
pub fn parse_table(s: &str) -> Result<(f64, f64), String> {
    let (w, h) = s
        .split_once(['x', 'X'])
        .ok_or_else(|| format!("expected WIDTHxHEIGHT, got `{s}`"))?;
    let num = |t: &str| -> Result<f64, String> {
        let v: f64 = t
            .trim()
            .parse()
            .map_err(|_| format!("`{t}` is not a decimal number"))?;
        if v.is_finite() {
            Ok(v)
        } else {
            Err(format!("`{t}` is not finite"))
        }
    };
    Ok((num(w)?, num(h)?))
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Style {
    pub color: bool,
}

impl Style {
    /// ANSI styling only for terminals, and never when `NO_COLOR` is set.
    pub fn detect() -> Self {
        use std::io::IsTerminal;
        let no_color = std::env::var_os("NO_COLOR").is_some_and(|v| !v.is_empty());
        Self {
            color: !no_color && std::io::stdout().is_terminal(),
        }
    }

    fn paint(&self, text: &str, code: &str) -> String {
        if self.color {
            format!("\x1b[{code}m{text}\x1b[0m")
        } else {
            text.to_string()
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    App(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::App(e)
    }
}

impl Failure {
    fn code(&self) -> i32 {
        match self {
            Failure::Usage(_) => exit::USAGE,
            Failure::App(Error::Io { .. }) => exit::IO,
            Failure::App(_) => exit::DATA,
        }
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, style: Style) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => Outcome {
                    stdout: text,
                    stderr: String::new(),
                    code: exit::SUCCESS,
                },
                _ => Outcome {
                    stdout: String::new(),
                    stderr: text,
                    code: exit::USAGE,
                },
            };
        }
    };

    let mut stderr = String::new();
    if !cli.no_banner {
        let _ = writeln!(
            stderr,
            "{} {}",
            env!("CARGO_PKG_NAME"),
            env!("CARGO_PKG_VERSION")
        );
    }
    let result = match &cli.command {
        Command::Predict(a) => cmd_predict(a, style),
        Command::Simulate(a) => cmd_simulate(a),
        Command::Validate(a) => cmd_validate(a),
        Command::Plot(a) => cmd_plot(a),
    };
    match result {
        Ok((stdout, code)) => Outcome {
            stdout,
            stderr,
            code,
        },
        Err(f) => {
            let code = f.code();
            match f {
                Failure::Usage(msg) => {
                    let _ = writeln!(stderr, "error: {msg}");
                }
                Failure::App(e) => {
                    let _ = writeln!(stderr, "error: {e}");
                }
            }
            Outcome {
                stdout: String::new(),
                stderr,
                code,
            }
        }
    }
}

type CmdResult = Result<(String, i32), Failure>;

fn cmd_predict(a: &PredictArgs, style: Style) -> CmdResult {
    let area = match (a.area, a.width, a.height) {
        (Some(_), None, None) | (None, Some(_), Some(_)) => {
            PuzzleSpec::new(a.pieces.unwrap_or(1), a.area, a.width, a.height)?
        }
        (Some(_), _, _) => {
            return Err(Failure::Usage(
                "give either --area or --width/--height, not both".into(),
            ))
        }
        (None, _, _) => {
            return Err(Failure::Usage(
                "need --area, or both --width and --height".into(),
            ))
        }
    };
    let spec = area;
    let breakdown = a
        .pieces
        .map(|_| model::model_breakdown(&spec))
        .transpose()?;
    let required = model::unassembled_area(spec.assembled_area())?;
    let fit = a
        .table
        .map(|(w, h)| model::table_fits(&spec, w, h))
        .transpose()?;
    let code = match fit {
        Some(f) if !f.fits => exit::DOES_NOT_FIT,
        _ => exit::SUCCESS,
    };

    if a.json {
        let value = json!({
            "assembled_area": spec.assembled_area(),
            "assembled_width": spec.assembled_width(),
            "assembled_height": spec.assembled_height(),
            "pieces": a.pieces,
            "unassembled_area": required,
            "ratio": SQRT_3,
            "breakdown": breakdown,
            "table": fit,
        });
        return Ok((to_json(&value), code));
    }

    let mut s = String::new();
    if let (Some(w), Some(h)) = (spec.assembled_width(), spec.assembled_height()) {
        let _ = writeln!(s, "assembled size       {w} x {h} cm");
    }
    let _ = writeln!(s, "assembled area       {:.1} cm2", spec.assembled_area());
    let _ = writeln!(s, "unassembled area     {required:.1} cm2");
    let _ = writeln!(s, "spread ratio         {SQRT_3:.4}");
    if let Some(b) = breakdown {
        let _ = writeln!(s, "pieces               {}", spec.pieces());
        let _ = writeln!(s, "piece area           {:.1} cm2", b.piece_area);
        let _ = writeln!(s, "piece edge           {:.2} cm", b.piece_edge);
        let _ = writeln!(s, "circle diameter      {:.2} cm", b.circle_diameter);
        let _ = writeln!(s, "hexagon area         {:.1} cm2", b.hexagon_area);
        let _ = writeln!(s, "per-piece spread     {:.1} cm2", b.per_piece_spread_area);
    }
    if let (Some(f), Some((w, h))) = (fit, a.table) {
        let _ = writeln!(
            s,
            "table                {w} x {h} cm = {:.1} cm2",
            f.table_area
        );
        let verdict = if f.fits {
            style.paint("fits", "32")
        } else {
            style.paint("does not fit", "31")
        };
        let _ = writeln!(
            s,
            "verdict              {verdict} (margin {:.1} cm2)",
            f.margin
        );
    }
    Ok((s, code))
}

fn cmd_simulate(a: &SimulateArgs) -> CmdResult {
    let strategy: Strategy = a.strategy.parse()?;
    let params = SimParams {
        strategy,
        seed: a.seed,
        candidate_angles: a.candidate_angles,
        radial_step: a.radial_step,
        jitter: a.jitter,
        grid_gap: a.gap,
    };
    let results = run_batch(a.pieces, a.area, &params, a.runs)?;
    let stats = ratio_statistics(&results)?;

    if a.svg.is_some() || a.layout_csv.is_some() {
        let last = SimParams {
            seed: results.last().map_or(a.seed, |r| r.seed),
            ..params
        };
        let layout = sim::generate(a.pieces, a.area, &last)?;
        if let Some(path) = &a.svg {
            write_file(path, layout.to_svg().as_bytes())?;
        }
        if let Some(path) = &a.layout_csv {
            let mut buf = Vec::new();
            layout.write_csv(&mut buf)?;
            write_file(path, &buf)?;
        }
    }
    if let Some(path) = &a.csv {
        write_file(path, results_csv(&results).as_bytes())?;
    }

    if a.json {
        let value = json!({
            "strategy": strategy,
            "pieces": a.pieces,
            "assembled_area": a.area,
            "sqrt3": SQRT_3,
            "statistics": stats,
            "runs": results,
        });
        return Ok((to_json(&value), exit::SUCCESS));
    }

    let mut s = String::new();
    let last_seed = a.seed.wrapping_add(a.runs as u64 - 1);
    let _ = writeln!(
        s,
        "{strategy}: {} pieces, assembled area {:.1} cm2, {} run(s), seeds {}..={}",
        a.pieces, a.area, stats.runs, a.seed, last_seed
    );
    let _ = writeln!(
        s,
        "{:<15} {:>8} {:>8} {:>8} {:>8}",
        "", "mean", "std", "min", "max"
    );
    for (name, sum) in [("ellipse ratio", stats.ellipse), ("hull ratio", stats.hull)] {
        let _ = writeln!(
            s,
            "{name:<15} {:>8.4} {:>8.4} {:>8.4} {:>8.4}",
            sum.mean, sum.stddev, sum.min, sum.max
        );
    }
    let _ = writeln!(s, "{:<15} {:>8.4}", "model sqrt(3)", SQRT_3);
    Ok((s, exit::SUCCESS))
}

fn results_csv(results: &[SimResult]) -> String {
    let mut s = String::from(RESULTS_CSV_HEADER);
    s.push('\n');
    for r in results {
        let _ = writeln!(
            s,
            "{},{},{},{},{},{},{},{}",
            r.seed,
            r.pieces,
            r.hull_area,
            r.ellipse_area,
            r.extents.major,
            r.extents.minor,
            r.spread_ratio_hull,
            r.spread_ratio_ellipse
        );
    }
    s
}

fn load_records(path: Option<&Path>) -> Result<Vec<MeasurementRecord>, Failure> {
    match path {
        None => Ok(builtin_dataset()),
        Some(p) => {
            let file = fs::File::open(p).map_err(|source| Error::Io {
                path: p.to_path_buf(),
                source,
            })?;
            Ok(empirical::read_csv(file)?)
        }
    }
}

fn cmd_validate(a: &ValidateArgs) -> CmdResult {
    let records = load_records(a.data.as_deref())?;
    let report = validate(&records)?;
    let out = if a.json {
        report.to_json()
    } else {
        report.to_text()
    };
    Ok((out, exit::SUCCESS))
}

fn cmd_plot(a: &PlotArgs) -> CmdResult {
    let records = load_records(a.data.as_deref())?;
    let report = validate(&records)?;
    let svg = PlotSpec::from_report(&report).render_svg()?;
    write_file(&a.out, svg.as_bytes())?;
    Ok((
        format!("wrote {} ({} points)\n", a.out.display(), report.rows.len()),
        exit::SUCCESS,
    ))
}

fn write_file(path: &Path, bytes: &[u8]) -> Result<(), Failure> {
    fs::write(path, bytes).map_err(|source| {
        Failure::App(Error::Io {
            path: path.to_path_buf(),
            source,
        })
    })
}

fn to_json(value: &serde_json::Value) -> String {
    serde_json::to_string_pretty(value).expect("json value serializes") + "\n"
}

#[cfg(test)]
mod tests {
    use super::*;

    fn go(args: &[&str]) -> Outcome {
        run(
            std::iter::once("jigsaw").chain(args.iter().copied()),
            Style::default(),
        )
    }

    #[test]
    fn table_grammar() {
        assert_eq!(parse_table("90x70"), Ok((90.0, 70.0)));
        assert_eq!(parse_table("1.5X2"), Ok((1.5, 2.0)));
        assert!(parse_table("90*70").is_err());
        assert!(parse_table("x70").is_err());
        assert!(parse_table("90x").is_err());
        assert!(parse_table("infx2").is_err());
    }

    #[test]
    fn predict_area() {
        let o = go(&["predict", "--area", "1", "--json"]);
        assert_eq!(o.code, exit::SUCCESS);
        let v: serde_json::Value = serde_json::from_str(&o.stdout).unwrap();
        assert!((v["unassembled_area"].as_f64().unwrap() - 1.732_050_8).abs() < 1e-7);
    }

    #[test]
    fn predict_dims_text() {
        let o = go(&[
            "--no-banner",
            "predict",
            "--width",
            "50.2",
            "--height",
            "69.0",
        ]);
        assert_eq!(o.code, 0);
        assert!(
            o.stdout.contains("unassembled area     5999.5 cm2"),
            "{}",
            o.stdout
        );
        assert!(o.stderr.is_empty());
    }

    #[test]
    fn predict_table_exit_codes() {
        let o = go(&["predict", "--area", "3463.8", "--table", "90x70"]);
        assert_eq!(o.code, exit::SUCCESS);
        assert!(o.stdout.contains("margin 300.5"), "{}", o.stdout);
        let o = go(&["predict", "--area", "1", "--table", "1x1"]);
        assert_eq!(o.code, exit::DOES_NOT_FIT);
        assert!(o.stdout.contains("does not fit"));
    }

    #[test]
    fn predict_usage_and_data_errors() {
        assert_eq!(go(&["predict"]).code, exit::USAGE);
        assert_eq!(go(&["predict", "--width", "3"]).code, exit::USAGE);
        assert_eq!(
            go(&["predict", "--area", "3", "--width", "1", "--height", "3"]).code,
            exit::USAGE
        );
        assert_eq!(go(&["predict", "--area", "abc"]).code, exit::USAGE);
        assert_eq!(
            go(&["predict", "--area", "1", "--table", "9by7"]).code,
            exit::USAGE
        );
        assert_eq!(go(&["bogus"]).code, exit::USAGE);
        assert_eq!(go(&["predict", "--area", "-1"]).code, exit::DATA);
        assert_eq!(go(&["predict", "--area", "0"]).code, exit::DATA);
        assert_eq!(
            go(&["predict", "--area", "1", "--pieces", "0"]).code,
            exit::DATA
        );
        assert_eq!(
            go(&["predict", "--area", "1", "--table", "0x5"]).code,
            exit::DATA
        );
    }

    #[test]
    fn help_and_version_succeed() {
        assert_eq!(go(&["--help"]).code, 0);
        assert_eq!(go(&["--version"]).code, 0);
    }

    #[test]
    fn banner_on_stderr_only() {
        let o = go(&["validate"]);
        assert!(o.stderr.starts_with("jigsaw-spread "));
        assert_eq!(o.stdout, go(&["--no-banner", "validate"]).stdout);
    }

    #[test]
    fn predict_breakdown() {
        let o = go(&["predict", "--area", "3463.8", "--pieces", "1008"]);
        assert!(
            o.stdout.contains("circle diameter      2.62 cm"),
            "{}",
            o.stdout
        );
    }

    #[test]
    fn simulate_grid() {
        let o = go(&[
            "simulate",
            "--pieces",
            "4",
            "--area",
            "4",
            "--strategy",
            "grid",
            "--json",
        ]);
        assert_eq!(o.code, 0, "{}", o.stderr);
        let v: serde_json::Value = serde_json::from_str(&o.stdout).unwrap();
        let r = v["statistics"]["hull"]["mean"].as_f64().unwrap();
        assert!((r - 1.0).abs() < 1e-9);
    }

    #[test]
    fn simulate_errors() {
        assert_eq!(
            go(&[
                "simulate",
                "--pieces",
                "4",
                "--area",
                "4",
                "--strategy",
                "blob"
            ])
            .code,
            exit::USAGE
        );
        assert_eq!(
            go(&["simulate", "--pieces", "0", "--area", "4"]).code,
            exit::DATA
        );
        assert_eq!(
            go(&["simulate", "--pieces", "4", "--area", "-4"]).code,
            exit::DATA
        );
        assert_eq!(
            go(&["simulate", "--pieces", "4", "--area", "4", "--runs", "0"]).code,
            exit::DATA
        );
        assert_eq!(
            go(&[
                "simulate",
                "--pieces",
                "4",
                "--area",
                "4",
                "--strategy",
                "hex",
                "--jitter",
                "1.5"
            ])
            .code,
            exit::DATA
        );
    }

    #[test]
    fn results_csv_format() {
        let o = go(&[
            "simulate",
            "--pieces",
            "4",
            "--area",
            "4",
            "--strategy",
            "grid",
            "--json",
        ]);
        assert_eq!(o.code, 0);
        let r = run_batch(4, 4.0, &SimParams::new(Strategy::Grid), 2).unwrap();
        let text = results_csv(&r);
        let mut lines = text.lines();
        assert_eq!(lines.next(), Some(RESULTS_CSV_HEADER));
        assert_eq!(lines.count(), 2);
    }

    #[test]
    fn validate_missing_file_is_io_error() {
        let o = go(&["validate", "--data", "/nonexistent/table.csv"]);
        assert_eq!(o.code, exit::IO);
    }

    #[test]
    fn plot_unwritable_path_is_io_error() {
        let o = go(&["plot", "--out", "/nonexistent-dir/plot.svg"]);
        assert_eq!(o.code, exit::IO);
    }
}
