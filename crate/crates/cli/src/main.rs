//! `knotvol`: analyze reduced alternating link diagrams and report
//! hyperbolic-volume upper bounds.

mod report;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;

use knotvol::diagram::LinkDiagram;
use knotvol::jones::CABLE_BUDGET;
use knotvol::knotbase::{bundled_table, load_table, KnotTable};

use report::{analyze_diagram, render_text, summary_header, summary_row, AnalyzeOptions, Outcome};

#[derive(Parser)]
#[command(name = "knotvol", version, about = "Volume bounds for alternating links")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Analyze one diagram: a PD file path or a knot-table name.
    Analyze {
        /// PD file, or a name found in the knot table.
        input: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        /// Also compute the n=3 colored Jones polynomial via 2-cabling.
        #[arg(long)]
        color3: bool,
        /// Base-crossing budget for the n=3 computation.
        #[arg(long, default_value_t = CABLE_BUDGET)]
        max_crossings: usize,
        /// Knot table used for name lookups and reference volumes.
        #[arg(long)]
        table: Option<PathBuf>,
        /// Write the report here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Analyze every table entry; write per-knot reports and a summary.
    Batch {
        /// Knot table (CSV); defaults to the bundled table.
        #[arg(long)]
        table: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        #[arg(long)]
        color3: bool,
        /// Entries above this base-crossing count skip the n=3 polynomial.
        #[arg(long, default_value_t = CABLE_BUDGET)]
        max_crossings: usize,
        /// Concurrent workers.
        #[arg(long)]
        jobs: Option<usize>,
        /// Output directory for reports and summary.csv.
        #[arg(long, default_value = "reports")]
        out: PathBuf,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Analyze { input, format, color3, max_crossings, table, out } => {
            match cmd_analyze(&input, format, color3, max_crossings, table.as_deref(), out.as_deref()) {
                Ok(code) => code,
                Err(e) => {
                    eprintln!("error: {e:#}");
                    ExitCode::from(1)
                }
            }
        }
        Command::Batch { table, format, color3, max_crossings, jobs, out } => {
            match cmd_batch(table.as_deref(), format, color3, max_crossings, jobs, &out) {
                Ok(code) => code,
                Err(e) => {
                    eprintln!("error: {e:#}");
                    ExitCode::from(1)
                }
            }
        }
    }
}

fn resolve_table(path: Option<&Path>) -> Result<KnotTable> {
    match path {
        Some(p) => load_table(p).with_context(|| format!("loading table {}", p.display())),
        None => Ok(bundled_table()),
    }
}

/// Resolve the analyze input: an existing file is parsed as PD text, any
/// other string is looked up in the table.
fn resolve_input(input: &str, table: &KnotTable) -> Result<(Option<String>, LinkDiagram, Option<f64>)> {
    let path = Path::new(input);
    if path.exists() {
        let text = std::fs::read_to_string(path)
            .with_context(|| format!("reading {}", path.display()))?;
        let d = LinkDiagram::parse_pd(&text).map_err(|e| anyhow!("parsing {input}: {e}"))?;
        let name = path
            .file_stem()
            .map(|s| s.to_string_lossy().into_owned());
        Ok((name, d, None))
    } else if let Some(record) = table.find(input) {
        let d = record
            .diagram()
            .map_err(|e| anyhow!("table entry {input}: {e}"))?;
        Ok((Some(record.name.clone()), d, record.reference_volume))
    } else {
        Err(anyhow!(
            "`{input}` is neither a readable file nor a name in the knot table"
        ))
    }
}

fn cmd_analyze(
    input: &str,
    format: Format,
    color3: bool,
    max_crossings: usize,
    table: Option<&Path>,
    out: Option<&Path>,
) -> Result<ExitCode> {
    let table = resolve_table(table)?;
    let (name, diagram, reference) = resolve_input(input, &table)?;
    let opts = AnalyzeOptions { color3, max_crossings };
    let outcome = analyze_diagram(name.as_deref(), &diagram, reference, &opts);
    let (report, code) = match outcome {
        Outcome::Ok(r) => (r, ExitCode::SUCCESS),
        Outcome::Rejected(r) => (r, ExitCode::from(2)),
        Outcome::Resource(msg) => {
            eprintln!("resource limit: {msg}");
            return Ok(ExitCode::from(3));
        }
    };
    let rendered = match format {
        Format::Json => serde_json::to_string_pretty(&*report)? + "\n",
        Format::Text => render_text(&report),
        Format::Csv => {
            let display = report.name.clone().unwrap_or_else(|| input.to_string());
            let status = if code == ExitCode::SUCCESS { "ok" } else { "rejected" };
            format!("{}\n{}\n", summary_header(), summary_row(&display, status, Some(&report)))
        }
    };
    match out {
        Some(path) => write_atomic(path, rendered.as_bytes())?,
        None => print!("{rendered}"),
    }
    if code != ExitCode::SUCCESS {
        eprintln!(
            "validation rejected: {}",
            report.validation.messages.join("; ")
        );
    }
    Ok(code)
}

struct BatchRow {
    name: String,
    status: String,
    report: Option<report::ReportDocument>,
    failed: bool,
    unsound: bool,
    residual_bad: bool,
}

fn cmd_batch(
    table: Option<&Path>,
    format: Format,
    color3: bool,
    max_crossings: usize,
    jobs: Option<usize>,
    out: &Path,
) -> Result<ExitCode> {
    let table = resolve_table(table)?;
    std::fs::create_dir_all(out)
        .with_context(|| format!("creating output directory {}", out.display()))?;
    if let Some(n) = jobs {
        rayon::ThreadPoolBuilder::new()
            .num_threads(n.max(1))
            .build_global()
            .ok();
    }

    let mut rows: Vec<BatchRow> = table
        .records
        .par_iter()
        .map(|record| {
            let diagram = match record.diagram() {
                Ok(d) => d,
                Err(e) => {
                    return BatchRow {
                        name: record.name.clone(),
                        status: format!("parse-error: {e}"),
                        report: None,
                        failed: true,
                        unsound: false,
                        residual_bad: false,
                    }
                }
            };
            // Over-budget entries skip the n=3 polynomial instead of failing.
            let opts = AnalyzeOptions {
                color3: color3 && diagram.crossing_count() <= max_crossings,
                max_crossings,
            };
            let outcome = analyze_diagram(
                Some(&record.name),
                &diagram,
                record.reference_volume,
                &opts,
            );
            match outcome {
                Outcome::Ok(r) => {
                    let unsound = r.warnings.iter().any(|w| w.contains("below the reference"));
                    let residual_bad = r
                        .prop31_residuals
                        .as_ref()
                        .map(|x| !x.all_computed_zero)
                        .unwrap_or(false);
                    BatchRow {
                        name: record.name.clone(),
                        status: "ok".to_string(),
                        report: Some(*r),
                        failed: false,
                        unsound,
                        residual_bad,
                    }
                }
                Outcome::Rejected(r) => BatchRow {
                    name: record.name.clone(),
                    status: "rejected".to_string(),
                    report: Some(*r),
                    failed: false,
                    unsound: false,
                    residual_bad: false,
                },
                Outcome::Resource(msg) => BatchRow {
                    name: record.name.clone(),
                    status: format!("resource: {msg}"),
                    report: None,
                    failed: true,
                    unsound: false,
                    residual_bad: false,
                },
            }
        })
        .collect();
    // Table parse failures are enumerated alongside analysis failures.
    for err in &table.errors {
        rows.push(BatchRow {
            name: err.split(':').next().unwrap_or("?").to_string(),
            status: format!("table-error: {err}"),
            report: None,
            failed: true,
            unsound: false,
            residual_bad: false,
        });
    }

    let mut summary = String::from(summary_header());
    summary.push('\n');
    for row in &rows {
        if let Some(r) = &row.report {
            let body = match format {
                Format::Json | Format::Csv => serde_json::to_string_pretty(r)? + "\n",
                Format::Text => render_text(r),
            };
            let ext = if format == Format::Text { "txt" } else { "json" };
            write_atomic(&out.join(format!("{}.{ext}", row.name)), body.as_bytes())?;
        }
        summary.push_str(&summary_row(&row.name, &row.status, row.report.as_ref()));
        summary.push('\n');
    }
    write_atomic(&out.join("summary.csv"), summary.as_bytes())?;

    let failures = rows.iter().filter(|r| r.failed).count();
    let unsound = rows.iter().filter(|r| r.unsound).count();
    let residual_bad = rows.iter().filter(|r| r.residual_bad).count();
    println!(
        "batch: {} entries, {} failed, {} with nonzero residuals, {} with unsound bounds",
        rows.len(),
        failures,
        residual_bad,
        unsound
    );
    if failures > 0 || unsound > 0 || residual_bad > 0 {
        Ok(ExitCode::from(1))
    } else {
        Ok(ExitCode::SUCCESS)
    }
}

fn write_atomic(path: &Path, bytes: &[u8]) -> Result<()> {
    let tmp = path.with_extension("tmp");
    std::fs::write(&tmp, bytes).with_context(|| format!("writing {}", tmp.display()))?;
    std::fs::rename(&tmp, path).with_context(|| format!("renaming into {}", path.display()))?;
    Ok(())
}
