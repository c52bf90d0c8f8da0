//! Command-line front end.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::error::ErrorKind;
use clap::Parser;

use crate::error::Error;
use crate::minimizer::{minimize_observed, oracle_min, MinimizationReport, DEFAULT_ORACLE_CAP};
use crate::report::emit_json;
use crate::representative::build_initial;
use crate::svg::{emit_svg, RenderSpec};
use crate::words::{
    cyclic_reduce, parse_cyclic_word, parse_surface_word, surface_invariants, CyclicWord,
    SurfaceWord,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_INVALID_INPUT: i32 = 2;
pub const EXIT_ORACLE_CAP: i32 = 3;

/// Finds a representative with minimal self-intersection for a free
/// homotopy class on a surface with boundary.
#[derive(Debug, Parser)]
#[command(name = "curvemin", version)]
pub struct Args {
    /// Surface word, e.g. abAB (uppercase = inverse)
    #[arg(long)]
    pub surface: String,
    /// Curve word over the surface generators, e.g. bbAAA
    #[arg(long)]
    pub word: String,
    /// Write the minimization report as JSON
    #[arg(long, value_name = "PATH")]
    pub json: Option<PathBuf>,
    /// Draw the minimal representative as SVG
    #[arg(long, value_name = "PATH")]
    pub svg: Option<PathBuf>,
    /// Draw the starting representative as SVG
    #[arg(long, value_name = "PATH")]
    pub svg_initial: Option<PathBuf>,
    /// Cross-check the result by exhaustive search over edge orderings
    #[arg(long)]
    pub verify_oracle: bool,
    /// Largest number of orderings the exhaustive search may visit
    #[arg(long, value_name = "N", default_value_t = DEFAULT_ORACLE_CAP)]
    pub oracle_cap: u128,
    /// Log every bigon found and every removal
    #[arg(long)]
    pub trace: bool,
}

fn read_word(text: &str, surface: &SurfaceWord, err: &mut dyn Write) -> Result<CyclicWord, String> {
    match parse_cyclic_word(text, surface) {
        Ok(w) => Ok(w),
        Err(Error::NotReduced(..)) => match cyclic_reduce(text, surface) {
            Ok(Some(w)) => {
                let _ = writeln!(err, "note: {text} is not cyclically reduced; using {w}");
                Ok(w)
            }
            Ok(None) => {
                let _ = writeln!(err, "note: {text} is not cyclically reduced");
                Err("word is trivial".to_string())
            }
            Err(e) => Err(e.to_string()),
        },
        Err(e) => Err(e.to_string()),
    }
}

fn write_file(path: &Path, bytes: &[u8], err: &mut dyn Write) -> bool {
    match std::fs::write(path, bytes) {
        Ok(()) => true,
        Err(e) => {
            let _ = writeln!(err, "error: cannot write {}: {e}", path.display());
            false
        }
    }
}

fn summary(report: &MinimizationReport, out: &mut dyn Write) -> std::io::Result<()> {
    let inv = surface_invariants(&report.surface);
    writeln!(
        out,
        "surface: {} (genus {}, {} boundary component{}, euler characteristic {})",
        report.surface,
        inv.genus,
        inv.boundary_components,
        if inv.boundary_components == 1 {
            ""
        } else {
            "s"
        },
        inv.euler_characteristic
    )?;
    writeln!(out, "word: {} (length {})", report.word, report.word.len())?;
    writeln!(out, "initial self-intersections: {}", report.initial_count)?;
    writeln!(
        out,
        "removals: {} (improper bigons skipped: {})",
        report.steps.len(),
        report.skipped_improper
    )?;
    writeln!(out, "minimal self-intersections: {}", report.final_count)?;
    let points: Vec<String> = report
        .final_points
        .derived()
        .iter()
        .map(|p| p.to_string())
        .collect();
    writeln!(out, "P: {}", points.join(" "))?;
    let segments: Vec<String> = report
        .final_segments
        .segments()
        .iter()
        .map(|w| w.to_string())
        .collect();
    writeln!(out, "C: {}", segments.join(" "))
}

/// Runs the command line and returns the process exit code.
pub fn run_cli<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args = match Args::try_parse_from(args) {
        Ok(a) => a,
        Err(e) => {
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{e}");
                    EXIT_INVALID_INPUT
                }
            };
        }
    };

    let surface = match parse_surface_word(&args.surface) {
        Ok(s) => s,
        Err(e) => {
            let _ = writeln!(err, "error: invalid surface word: {e}");
            return EXIT_INVALID_INPUT;
        }
    };
    let word = match read_word(&args.word, &surface, err) {
        Ok(w) => w,
        Err(msg) => {
            let _ = writeln!(err, "error: {msg}");
            return EXIT_INVALID_INPUT;
        }
    };

    let (p, c) = build_initial(&surface, &word);
    if let Some(path) = &args.svg_initial {
        if !write_file(
            path,
            &emit_svg(&surface, &p, &c, &RenderSpec::default()),
            err,
        ) {
            return EXIT_FAILURE;
        }
    }

    let mut log = Vec::new();
    let result = minimize_observed(&surface, &word, p, c, &mut |e| {
        if args.trace {
            log.push(format!(
                "bigon from pair {:?} {}: {} -> {}",
                e.pair, e.direction, e.bigon, e.class
            ));
        }
    });
    let report = match result {
        Ok(r) => r,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return EXIT_FAILURE;
        }
    };

    if args.trace {
        for line in &log {
            let _ = writeln!(out, "trace: {line}");
        }
        for (n, step) in report.steps.iter().enumerate() {
            let swaps: Vec<String> = step
                .swaps
                .iter()
                .map(|(a, b)| format!("{a}<->{b}"))
                .collect();
            let _ = writeln!(
                out,
                "step {}: {} swap {}: {} -> {}",
                n + 1,
                step.class,
                swaps.join(", "),
                step.count_before,
                step.count_after
            );
        }
    }
    if summary(&report, out).is_err() {
        return EXIT_FAILURE;
    }

    if let Some(path) = &args.json {
        if !write_file(path, &emit_json(&report), err) {
            return EXIT_FAILURE;
        }
    }
    if let Some(path) = &args.svg {
        let svg = emit_svg(
            &surface,
            &report.final_points,
            &report.final_segments,
            &RenderSpec::default(),
        );
        if !write_file(path, &svg, err) {
            return EXIT_FAILURE;
        }
    }

    if args.verify_oracle {
        match oracle_min(&surface, &word, args.oracle_cap) {
            Ok(m) if m == report.final_count => {
                let _ = writeln!(out, "oracle agrees: {m}");
            }
            Ok(m) => {
                let _ = writeln!(
                    err,
                    "error: oracle disagrees: minimize found {}, oracle found {m}",
                    report.final_count
                );
                return EXIT_FAILURE;
            }
            Err(e @ Error::SearchSpaceTooLarge { .. }) => {
                let _ = writeln!(err, "error: {e}");
                return EXIT_ORACLE_CAP;
            }
            Err(e) => {
                let _ = writeln!(err, "error: {e}");
                return EXIT_FAILURE;
            }
        }
    }
    EXIT_OK
}
