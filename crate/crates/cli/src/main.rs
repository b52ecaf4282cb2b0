//! `lpm-toric`: bases, polytopes and toric polynomials of lattice path
//! matroids, plus the closed-form and identity sweeps.
//!
//! Exit status is 0 when every asserted comparison passed, 1 when one
//! failed, and 2 on invalid input or a cap violation.

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use lpm_toric::verify::{self, OutputFormat, SweepConfig, VerificationReport};
use lpm_toric::{Caps, HookShape};
use serde_json::Value;

/// Worker threads for sweeps and facet search; defaults to all cores.
const THREADS_ENV: &str = "LPM_TORIC_THREADS";

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Debug, Parser)]
#[command(name = "lpm-toric", version, about)]
struct Cli {
    #[arg(long, value_enum, default_value = "json", global = true)]
    format: Format,

    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    /// Maximum number of vertices (bases) to materialise.
    #[arg(long, default_value_t = Caps::default().max_vertices, global = true)]
    cap_vertices: usize,

    /// Maximum number of face lattice elements.
    #[arg(long, default_value_t = Caps::default().max_faces, global = true)]
    cap_faces: usize,

    /// Omit wall-clock timings so reports are byte-for-byte reproducible.
    #[arg(long, global = true)]
    no_timings: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Enumerate the bases of the matroid between two paths.
    Bases { upper: String, lower: String },
    /// Run the polytope and toric pipeline for two paths or a hook.
    Toric {
        #[arg(required_unless_present = "hook")]
        upper: Option<String>,
        #[arg(required_unless_present = "hook")]
        lower: Option<String>,
        /// Use the hook shape ALPHA BETA instead of explicit paths.
        #[arg(long, num_args = 2, value_names = ["ALPHA", "BETA"], conflicts_with_all = ["upper", "lower"])]
        hook: Option<Vec<usize>>,
    },
    /// Compare the geometric pipeline with the hook closed forms.
    VerifyHooks {
        #[arg(long, default_value_t = 4)]
        alpha_max: usize,
    },
    /// Sweep the binomial identities and coefficient formulas.
    Identities {
        #[arg(long, default_value_t = 8)]
        m_max: usize,
        #[arg(long, default_value_t = 8)]
        n_max: usize,
    },
    /// Compare a border strip's toric g with the triple-product candidate.
    BorderStrip { a: usize, b: usize, c: usize },
}

fn caps(cli: &Cli) -> Caps {
    Caps {
        max_vertices: cli.cap_vertices,
        max_faces: cli.cap_faces,
        ..Caps::default()
    }
}

fn configure_threads() -> Result<()> {
    if let Ok(raw) = std::env::var(THREADS_ENV) {
        let n: usize = raw
            .parse()
            .with_context(|| format!("{THREADS_ENV} must be a positive integer, got {raw:?}"))?;
        if n == 0 {
            bail!("{THREADS_ENV} must be positive");
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()?;
    }
    Ok(())
}

/// Flat `key,value` CSV for a JSON object.
fn object_csv(v: &Value) -> String {
    let mut s = String::from("key,value\n");
    if let Value::Object(map) = v {
        for (k, val) in map {
            let cell = val.to_string();
            let cell = if cell.contains([',', '"', '\n']) {
                format!("\"{}\"", cell.replace('"', "\"\""))
            } else {
                cell
            };
            s.push_str(&format!("{k},{cell}\n"));
        }
    }
    s
}

fn render_value(v: &Value, format: Format) -> Result<String> {
    Ok(match format {
        Format::Json => serde_json::to_string_pretty(v)? + "\n",
        Format::Csv => object_csv(v),
    })
}

fn render_report(r: &VerificationReport, format: Format, with_timings: bool) -> Result<String> {
    Ok(match format {
        Format::Json => serde_json::to_string_pretty(&r.to_json(with_timings))? + "\n",
        Format::Csv => r.to_csv()?,
    })
}

fn emit(cli: &Cli, text: &str) -> Result<()> {
    match &cli.out {
        Some(path) => {
            std::fs::write(path, text).with_context(|| format!("writing {}", path.display()))
        }
        None => {
            std::io::stdout().write_all(text.as_bytes())?;
            Ok(())
        }
    }
}

fn report_failures(r: &VerificationReport) -> bool {
    let s = r.summary();
    eprintln!(
        "{} asserted, {} passed, {} failed, {} informational",
        s.asserted, s.passed, s.failed, s.informational
    );
    for f in r.failures() {
        eprintln!("MISMATCH {f}");
    }
    s.failed == 0
}

fn run(cli: &Cli) -> Result<bool> {
    let caps = caps(cli);
    let with_timings = !cli.no_timings;
    match &cli.command {
        Command::Bases { upper, lower } => {
            let v = verify::cmd_bases(upper, lower, &caps)?;
            emit(cli, &render_value(&v, cli.format)?)?;
            Ok(true)
        }
        Command::Toric { upper, lower, hook } => {
            let (upper, lower) = match hook.as_deref() {
                Some(&[a, b]) => {
                    let pair = HookShape::new(a, b)?.path_pair();
                    (pair.upper().to_string(), pair.lower().to_string())
                }
                _ => (
                    upper.clone().unwrap_or_default(),
                    lower.clone().unwrap_or_default(),
                ),
            };
            let (v, ok) = verify::cmd_toric(&upper, &lower, &caps)?;
            emit(cli, &render_value(&v, cli.format)?)?;
            Ok(ok)
        }
        Command::VerifyHooks { alpha_max } => {
            let config = SweepConfig {
                alpha_max: *alpha_max,
                beta_max: *alpha_max,
                caps,
                format: format_tag(cli.format),
                out: cli.out.clone(),
                ..SweepConfig::default()
            };
            let r = verify::verify_hooks(&config)?;
            emit(cli, &render_report(&r, cli.format, with_timings)?)?;
            Ok(report_failures(&r))
        }
        Command::Identities { m_max, n_max } => {
            let config = SweepConfig {
                m_max: *m_max,
                n_max: *n_max,
                caps,
                format: format_tag(cli.format),
                out: cli.out.clone(),
                ..SweepConfig::default()
            };
            let r = verify::verify_identities(&config)?;
            emit(cli, &render_report(&r, cli.format, with_timings)?)?;
            Ok(report_failures(&r))
        }
        Command::BorderStrip { a, b, c } => {
            let (v, ok) = verify::border_strip(*a, *b, *c, &caps)?;
            emit(cli, &render_value(&v, cli.format)?)?;
            Ok(ok)
        }
    }
}

fn format_tag(f: Format) -> OutputFormat {
    match f {
        Format::Json => OutputFormat::Json,
        Format::Csv => OutputFormat::Csv,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = configure_threads().and_then(|()| run(&cli));
    match outcome {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
