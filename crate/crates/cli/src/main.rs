//! `regbound`: interlacing bounds on the algebraic connectivity of regular
//! graphs, from edge-list files or generated families.
//!
//! Exit codes: 0 ok, 2 input error, 3 hypothesis violation, 4 numeric failure.

mod output;
mod sweep;

use std::fs::{self, File};
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use thiserror::Error;

use regbound_core::bounds::{self, BoundError, Branch};
use regbound_core::linalg::SPECTRAL_TOL;
use regbound_core::srg::{self, SrgError};
use regbound_core::Graph;

use output::sig10;
use sweep::{Family, SweepParams};

#[derive(Debug, Parser)]
#[command(name = "regbound", version, about)]
struct Cli {
    /// Tolerance for checking bounds against exact values.
    #[arg(long, global = true, default_value_t = SPECTRAL_TOL)]
    tol: f64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Per-vertex bounds, ρ(G) and the upper bound δ − ρ(G).
    Bound { file: PathBuf },
    /// CSV row comparing the bound, vertex connectivity and the exact value.
    Compare { file: PathBuf },
    /// Strongly regular parameters, spectrum and neighbourhood checks.
    Srg { file: PathBuf },
    /// One comparison row per generated graph.
    Sweep {
        #[arg(long, value_enum)]
        family: Family,
        #[arg(long, value_parser = sweep::parse_values)]
        v: Option<sweep::Values>,
        #[arg(long, value_parser = sweep::parse_values)]
        delta: Option<sweep::Values>,
        #[arg(long, value_parser = sweep::parse_values)]
        alpha: Option<sweep::Values>,
        #[arg(long, value_parser = sweep::parse_values)]
        m: Option<sweep::Values>,
        /// Graphs per (v, delta) pair for random families.
        #[arg(long, default_value_t = 1)]
        count: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error("{0}")]
    Hypothesis(String),
    #[error("{0}")]
    Numeric(String),
    #[error("i/o: {0}")]
    Io(#[from] io::Error),
    #[error("csv: {0}")]
    Csv(#[from] csv::Error),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            Self::Input(_) | Self::Io(_) | Self::Csv(_) => 2,
            Self::Hypothesis(_) => 3,
            Self::Numeric(_) => 4,
        }
    }
}

impl From<BoundError> for CliError {
    fn from(e: BoundError) -> Self {
        match e {
            BoundError::NotRegular
            | BoundError::BoundNotApplicable { .. }
            | BoundError::GraphDisconnected
            | BoundError::InvalidParams { .. } => Self::Hypothesis(e.to_string()),
            BoundError::InvalidArgument(_) | BoundError::Graph(_) => Self::Input(e.to_string()),
            BoundError::SoundnessViolation { .. } | BoundError::Linalg(_) => {
                Self::Numeric(e.to_string())
            }
        }
    }
}

impl From<SrgError> for CliError {
    fn from(e: SrgError) -> Self {
        match e {
            SrgError::GraphDisconnected => Self::Hypothesis(e.to_string()),
            _ => Self::Input(e.to_string()),
        }
    }
}

fn read_graph(path: &Path) -> Result<Graph, CliError> {
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    Graph::parse_edge_list(&text).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

fn graph_name(path: &Path) -> String {
    path.file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| path.display().to_string())
}

fn cmd_bound(path: &Path, out: &mut impl Write) -> Result<(), CliError> {
    let g = read_graph(path)?;
    let report = bounds::rho(&g)?;
    writeln!(
        out,
        "{}: v={} delta={}",
        graph_name(path),
        report.v,
        report.degree
    )?;
    writeln!(
        out,
        "{:>6}  {:<12}  {:<24}  {:>14}  branch",
        "vertex", "G_u", "components (size:avg)", "bound"
    )?;
    for b in &report.vertices {
        let comps = b
            .components
            .iter()
            .map(|c| format!("{}:{}", c.size, c.average_degree))
            .collect::<Vec<_>>()
            .join(" ");
        let (kind, branch) = match (b.neighbourhood_connected, b.branch) {
            (true, _) => ("connected", "xi = F(avg)".to_string()),
            (false, Branch::AverageDegree) => {
                ("disconnected", format!("eta = avg of C{}", b.component))
            }
            (false, Branch::BoundFunction) => {
                ("disconnected", format!("eta = F(avg of C{})", b.component))
            }
        };
        writeln!(
            out,
            "{:>6}  {:<12}  {:<24}  {:>14}  {branch}",
            b.vertex,
            kind,
            comps,
            sig10(b.value)
        )?;
    }
    writeln!(out, "rho = {}", sig10(report.rho))?;
    writeln!(out, "bound = {}", sig10(report.upper_bound))?;
    Ok(())
}

fn cmd_compare(path: &Path, tol: f64, out: &mut impl Write) -> Result<(), CliError> {
    let g = read_graph(path)?;
    let cmp = bounds::comparison(&g)?;
    let mut w = output::csv_writer(&mut *out);
    w.write_record(output::COMPARISON_HEADER)?;
    w.write_record(output::comparison_fields(&graph_name(path), &cmp))?;
    w.flush()?;
    drop(w);
    // The row is printed either way so a violation can be inspected.
    cmp.check(tol)?;
    Ok(())
}

fn pass(b: bool) -> &'static str {
    if b {
        "pass"
    } else {
        "fail"
    }
}

fn cmd_srg(path: &Path, out: &mut impl Write) -> Result<(), CliError> {
    let g = read_graph(path)?;
    let Some(p) = srg::detect_srg(&g)? else {
        writeln!(out, "{}: not strongly regular", graph_name(path))?;
        return Ok(());
    };
    writeln!(out, "{}: strongly regular {p}", graph_name(path))?;
    let spec = srg::srg_spectrum(&p)?;
    writeln!(
        out,
        "spectrum: {} (x1), {} (x{}), {} (x{})",
        p.degree,
        sig10(spec.eigenvalues[0]),
        spec.multiplicities[0],
        sig10(spec.eigenvalues[1]),
        spec.multiplicities[1]
    )?;
    writeln!(
        out,
        "neighbourhoods lambda-regular: {}",
        pass(srg::neighbourhood_regular_check(&g, &p)?)
    )?;
    if srg::neighbourhood_connectivity_condition(&p) {
        let all = (0..g.order()).all(|u| {
            g.neighbourhood_graph(u)
                .is_ok_and(|(gu, _)| gu.is_connected())
        });
        writeln!(
            out,
            "neighbourhoods connected (lambda > nu2): {}",
            pass(all)
        )?;
    } else {
        writeln!(
            out,
            "neighbourhoods connected (lambda > nu2): not applicable"
        )?;
    }
    let div = srg::component_divisibility_check(&g, &p)?;
    if div.applicable {
        writeln!(
            out,
            "component sizes divisible by lambda+1 (lambda = nu2): {} {:?}",
            pass(div.holds),
            div.component_sizes
        )?;
    } else {
        writeln!(
            out,
            "component sizes divisible by lambda+1 (lambda = nu2): not applicable"
        )?;
    }
    let cert = srg::maximality_certificate(&p);
    writeln!(
        out,
        "maximality: {} (lambda >= nu2: {}, v <= 2delta - lambda: {})",
        if cert.certified {
            "certified"
        } else {
            "not certified"
        },
        cert.condition_lambda,
        cert.condition_v
    )?;
    Ok(())
}

fn run(cli: Cli) -> Result<(), CliError> {
    if !(cli.tol.is_finite() && cli.tol > 0.0) {
        return Err(CliError::Input(format!(
            "--tol must be positive, got {}",
            cli.tol
        )));
    }
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match cli.command {
        Command::Bound { file } => cmd_bound(&file, &mut out),
        Command::Compare { file } => cmd_compare(&file, cli.tol, &mut out),
        Command::Srg { file } => cmd_srg(&file, &mut out),
        Command::Sweep {
            family,
            v,
            delta,
            alpha,
            m,
            count,
            seed,
            out: path,
        } => {
            let list = |x: Option<sweep::Values>| x.map(|x| x.0);
            let params = SweepParams {
                v: list(v),
                delta: list(delta),
                alpha: list(alpha),
                m: list(m),
                count,
                seed,
            };
            let specs = sweep::expand(family, &params)?;
            let file = File::create(&path)
                .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
            sweep::write_sweep(&specs, cli.tol, BufWriter::new(file))?;
            writeln!(out, "wrote {} rows to {}", specs.len(), path.display())?;
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
