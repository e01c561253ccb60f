//! The `azvd` command.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::io::{Read, Write};
use std::net::{IpAddr, SocketAddr};
use std::path::{Path, PathBuf};

use azvd_core::{coverage_check, validate_catalog};
use clap::{Parser, Subcommand};
use serde_json::json;

use crate::api::{compile_text, render_svg, synthesize_text, ApiError};
use crate::formats::{load_catalog_dir, load_diagram, save_diagram, Bundle};
use crate::shipped;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "azvd", version, about = "Render, compile and synthesize AZVD diagrams")]
struct Cli {
    /// Catalog directory (catalog.json, layouts/, assets/, registry.json).
    /// Defaults to the shipped catalog.
    #[arg(long, global = true, env = "AZVD_CATALOG", value_name = "DIR")]
    catalog: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Draw a diagram as SVG. Empty slots are drawn as placeholders.
    Render {
        /// Diagram file, or `-` for standard input.
        diagram: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Print the AZee expression of a complete diagram.
    Compile {
        diagram: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Build a diagram for an AZee expression.
    Synthesize {
        /// AZee text file, or `-` for standard input.
        azee: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
        /// Layout to use for a template, as TEMPLATE=LAYOUT.
        #[arg(long = "variant", value_name = "TEMPLATE=LAYOUT", value_parser = parse_variant)]
        variants: Vec<(String, String)>,
    },
    /// Validate the catalog against the registry.
    CheckCatalog {
        #[arg(long)]
        json: bool,
    },
    /// Round-trip every rule and constant, and compare variants.
    Coverage {
        #[arg(long)]
        json: bool,
    },
    /// Run the HTTP service.
    Serve {
        #[arg(long, default_value_t = 8080)]
        port: u16,
        #[arg(long, default_value = "127.0.0.1")]
        host: IpAddr,
    },
}

fn parse_variant(s: &str) -> Result<(String, String), String> {
    match s.split_once('=') {
        Some((t, l)) if !t.is_empty() && !l.is_empty() => Ok((t.into(), l.into())),
        _ => Err(format!("expected TEMPLATE=LAYOUT, got {s:?}")),
    }
}

/// Outcome of a command: exit code, with the diagnostic for failures.
enum Failure {
    Usage(String),
    Invalid(String),
}

impl From<ApiError> for Failure {
    fn from(e: ApiError) -> Self {
        match &e.location {
            Some(at) => Failure::Invalid(format!("{e} (at {at})")),
            None => Failure::Invalid(e.to_string()),
        }
    }
}

/// Runs the command line `args` (program name first).
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            return code;
        }
    };
    match execute(cli, out) {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "azvd: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Invalid(msg)) => {
            let _ = writeln!(err, "azvd: {msg}");
            EXIT_INVALID
        }
    }
}

fn load_bundle(dir: Option<&Path>) -> Result<Bundle, Failure> {
    match dir {
        Some(dir) => load_catalog_dir(dir).map_err(|e| Failure::Usage(format!("catalog {}: {e}", dir.display()))),
        None => Ok(shipped::bundle().clone()),
    }
}

fn read_input(path: &Path) -> Result<String, Failure> {
    let mut text = String::new();
    let result = if path == Path::new("-") {
        std::io::stdin().read_to_string(&mut text).map(|_| ())
    } else {
        std::fs::read_to_string(path).map(|t| text = t)
    };
    result.map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    Ok(text)
}

fn write_output(path: Option<&Path>, text: &str, out: &mut dyn Write) -> Result<(), Failure> {
    match path {
        Some(p) => std::fs::write(p, text).map_err(|e| Failure::Usage(format!("{}: {e}", p.display()))),
        None => out.write_all(text.as_bytes()).map_err(|e| Failure::Usage(e.to_string())),
    }
}

fn execute(cli: Cli, out: &mut dyn Write) -> Result<i32, Failure> {
    let bundle = load_bundle(cli.catalog.as_deref())?;
    let cat = &bundle.catalog;
    match cli.command {
        Command::Render { diagram, output } => {
            let d = load_diagram(&read_input(&diagram)?, cat).map_err(ApiError::from)?;
            write_output(output.as_deref(), &render_svg(&d, cat)?, out)?;
        }
        Command::Compile { diagram, output } => {
            let d = load_diagram(&read_input(&diagram)?, cat).map_err(ApiError::from)?;
            write_output(output.as_deref(), &compile_text(&d, cat)?, out)?;
        }
        Command::Synthesize { azee, output, variants } => {
            let variants: BTreeMap<_, _> = variants.into_iter().collect();
            let d = synthesize_text(&read_input(&azee)?, cat, &bundle.registry, &variants)?;
            write_output(output.as_deref(), &save_diagram(&d), out)?;
        }
        Command::CheckCatalog { json } => {
            let report = validate_catalog(cat, &bundle.registry);
            let text = if json {
                let issues: Vec<_> = report
                    .issues
                    .iter()
                    .map(|i| json!({"code": i.code(), "message": i.to_string()}))
                    .collect();
                format!("{:#}\n", json!({"clean": report.is_clean(), "issues": issues}))
            } else if report.is_clean() {
                format!(
                    "catalog ok: {} layouts, {} templates, {} rules\n",
                    cat.layouts().len(),
                    cat.templates().len(),
                    bundle.registry.len()
                )
            } else {
                report.issues.iter().map(|i| format!("{}: {i}\n", i.code())).collect()
            };
            write_output(None, &text, out)?;
            return Ok(if report.is_clean() { EXIT_OK } else { EXIT_INVALID });
        }
        Command::Coverage { json } => {
            let report = coverage_check(&bundle.registry, cat);
            let text = if json {
                let probes = |ps: &[azvd_core::compiler::ProbeResult]| -> Vec<serde_json::Value> {
                    ps.iter()
                        .map(|p| json!({"subject": p.subject, "passed": p.passed(), "failure": p.failure}))
                        .collect()
                };
                let variants: Vec<_> = report
                    .variants
                    .iter()
                    .map(|v| {
                        json!({"template": v.template, "layout": v.layout, "passed": v.failure.is_none(), "failure": v.failure})
                    })
                    .collect();
                format!(
                    "{:#}\n",
                    json!({
                        "clean": report.is_clean(),
                        "rules": probes(&report.rules),
                        "constants": probes(&report.constants),
                        "variants": variants,
                    })
                )
            } else {
                let mut text = String::new();
                for p in report.rules.iter().chain(&report.constants) {
                    match &p.failure {
                        None => text.push_str(&format!("pass {}\n", p.subject)),
                        Some(f) => text.push_str(&format!("FAIL {}: {f}\n", p.subject)),
                    }
                }
                for v in &report.variants {
                    match &v.failure {
                        None => text.push_str(&format!("pass {}/{}\n", v.template, v.layout)),
                        Some(f) => text.push_str(&format!("FAIL {}/{}: {f}\n", v.template, v.layout)),
                    }
                }
                text
            };
            write_output(None, &text, out)?;
            return Ok(if report.is_clean() { EXIT_OK } else { EXIT_INVALID });
        }
        Command::Serve { port, host } => {
            let runtime = tokio::runtime::Runtime::new().map_err(|e| Failure::Usage(e.to_string()))?;
            runtime
                .block_on(crate::server::serve(bundle, SocketAddr::new(host, port)))
                .map_err(|e| Failure::Usage(e.to_string()))?;
        }
    }
    Ok(EXIT_OK)
}
