//! The `hoffman-limits` command line.

mod commands;
pub mod expr;
pub mod report;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand};

use crate::convergence::Family;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::limits::FormulaTag;
use crate::roots::RootConfig;
use crate::spectral::DEFAULT_TOL;
use crate::verify::Suite;

pub use expr::parse_graph;
pub use report::{format_real, Cell, Format, Report, Series};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "hoffman-limits", version, about = "Limit points of A_alpha spectral radii")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    #[arg(long, global = true, value_enum, default_value_t = Format::Csv)]
    pub format: Format,

    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,

    /// Tolerance for eigenvalue and root computations.
    #[arg(long, global = true)]
    pub tol: Option<f64>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// A_alpha spectral radius of one graph, with its degree bounds.
    Radius {
        /// `path:5`, `cycle:7`, `star:3`, `wheel5`, `p2:4,6`, `lollipop:9`,
        /// `dsnake:8` or `n; u-v,...`.
        graph: String,
        #[arg(long, value_delimiter = ',', default_value = "0")]
        alpha: Vec<f64>,
    },
    /// Terms of a limit-point sequence and the limit they approach.
    Table {
        /// classic, versionI, versionII, new or laplacian.
        kind: FormulaTag,
        #[arg(long, default_value_t = 10)]
        n_max: usize,
        #[arg(long, value_delimiter = ',', default_value = "0")]
        alpha: Vec<f64>,
    },
    /// Psi by root finding and closed form, with omega1 and omega2.
    Psi {
        /// Defaults to 0, 0.05, ..., 0.95.
        #[arg(long, value_delimiter = ',')]
        alpha: Vec<f64>,
    },
    /// Radii of a growing family against its limit.
    Convergence {
        /// p2nn, p2mn, k13 or p5u.
        family: Family,
        #[arg(long, value_delimiter = ',', default_value = "0")]
        alpha: Vec<f64>,
        #[arg(long, value_delimiter = ',', default_value = "10,20,50,100,200,400,800")]
        sizes: Vec<usize>,
        /// The fixed path order for p2mn.
        #[arg(long)]
        n_fixed: Option<usize>,
    },
    /// Seeded property suites.
    Verify {
        /// lemmas, identities, bipartite or all.
        suite: Suite,
        #[arg(long, default_value_t = 2024)]
        seed: u64,
        #[arg(long, default_value_t = 200)]
        trials: usize,
    },
}

/// A command with every flag validated.
#[derive(Debug)]
enum Plan {
    Radius { expr: String, graph: Graph, alphas: Vec<f64> },
    Table { tag: FormulaTag, n_max: usize, alphas: Vec<f64> },
    Psi { alphas: Vec<f64> },
    Convergence { family: Family, alphas: Vec<f64>, sizes: Vec<usize>, n_fixed: Option<usize> },
    Verify { suite: Suite, seed: u64, trials: usize },
}

fn usage(message: impl Into<String>) -> Error {
    Error::Domain(message.into())
}

fn check_alphas(alphas: &[f64], closed: bool) -> Result<()> {
    let range = if closed { "[0, 1]" } else { "[0, 1)" };
    for &a in alphas {
        let ok = if closed { (0.0..=1.0).contains(&a) } else { (0.0..1.0).contains(&a) };
        if !ok {
            return Err(Error::InvalidAlpha { alpha: a, range });
        }
    }
    if alphas.is_empty() {
        return Err(usage("--alpha needs at least one value"));
    }
    Ok(())
}

fn default_psi_grid() -> Vec<f64> {
    (0..20).map(|i| i as f64 / 20.0).collect()
}

fn plan(cli: &Cli) -> Result<Plan> {
    if let Some(t) = cli.tol {
        if !(t.is_finite() && t > 0.0) {
            return Err(usage(format!("--tol must be positive, got {t}")));
        }
    }
    Ok(match &cli.command {
        Command::Radius { graph, alpha } => {
            check_alphas(alpha, true)?;
            Plan::Radius {
                expr: graph.clone(),
                graph: parse_graph(graph)?,
                alphas: alpha.clone(),
            }
        }
        Command::Table { kind, n_max, alpha } => {
            check_alphas(alpha, false)?;
            Plan::Table { tag: *kind, n_max: *n_max, alphas: alpha.clone() }
        }
        Command::Psi { alpha } => {
            let alphas = if alpha.is_empty() { default_psi_grid() } else { alpha.clone() };
            check_alphas(&alphas, true)?;
            Plan::Psi { alphas }
        }
        Command::Convergence { family, alpha, sizes, n_fixed } => {
            check_alphas(alpha, false)?;
            if sizes.is_empty() || sizes.windows(2).any(|w| w[0] >= w[1]) {
                return Err(usage("--sizes must be a non-empty strictly ascending list"));
            }
            if *family == Family::P2mn && n_fixed.is_none() {
                return Err(usage("p2mn needs --n-fixed"));
            }
            if *n_fixed == Some(0) {
                return Err(usage("--n-fixed must be at least 1"));
            }
            family.graph(*sizes.last().expect("non-empty"), *n_fixed)?;
            Plan::Convergence {
                family: *family,
                alphas: alpha.clone(),
                sizes: sizes.clone(),
                n_fixed: *n_fixed,
            }
        }
        Command::Verify { suite, seed, trials } => {
            if *trials == 0 {
                return Err(usage("--trials must be at least 1"));
            }
            Plan::Verify { suite: *suite, seed: *seed, trials: *trials }
        }
    })
}

fn config_echo(cli: &Cli, plan: &Plan) -> Vec<(&'static str, Cell)> {
    let list = |xs: &[f64]| Cell::Text(xs.iter().map(|x| format_real(*x)).collect::<Vec<_>>().join(","));
    let mut c = match plan {
        Plan::Radius { expr, alphas, .. } => vec![("graph", expr.as_str().into()), ("alpha", list(alphas))],
        Plan::Table { tag, n_max, alphas } => vec![
            ("kind", tag.as_str().into()),
            ("n_max", (*n_max).into()),
            ("alpha", list(alphas)),
        ],
        Plan::Psi { alphas } => vec![("alpha", list(alphas))],
        Plan::Convergence { family, alphas, sizes, n_fixed } => vec![
            ("family", family.as_str().into()),
            ("alpha", list(alphas)),
            (
                "sizes",
                sizes.iter().map(usize::to_string).collect::<Vec<_>>().join(",").into(),
            ),
            ("n_fixed", n_fixed.map_or(Cell::Empty, Cell::from)),
        ],
        Plan::Verify { suite, seed, trials } => vec![
            ("suite", suite.to_string().into()),
            ("seed", Cell::Int(*seed)),
            ("trials", (*trials).into()),
        ],
    };
    c.push(("tol", cli.tol.map_or(Cell::text("default"), Cell::Real)));
    c
}

fn execute(cli: &Cli, plan: &Plan) -> Result<Report> {
    let tol = cli.tol.unwrap_or(DEFAULT_TOL);
    let mut cfg = RootConfig::default();
    if let Some(t) = cli.tol {
        cfg.tol = t;
    }
    let mut report = match plan {
        Plan::Radius { expr, graph, alphas } => commands::radius(expr, graph, alphas, tol)?,
        Plan::Table { tag, n_max, alphas } => commands::table(*tag, *n_max, alphas, &cfg)?,
        Plan::Psi { alphas } => commands::psi_rows(alphas, &cfg)?,
        Plan::Convergence { family, alphas, sizes, n_fixed } => {
            commands::convergence(*family, alphas, sizes, *n_fixed, tol, &cfg)?
        }
        Plan::Verify { suite, seed, trials } => commands::verify(*suite, *seed, *trials)?,
    };
    report.config = config_echo(cli, plan);
    Ok(report)
}

/// Parses an already-split command line and builds its report. Usage errors
/// come back as `Err` with exit code 2, computation errors with exit code 1.
pub fn build_report(cli: &Cli) -> std::result::Result<Report, (i32, Error)> {
    let plan = plan(cli).map_err(|e| (EXIT_USAGE, e))?;
    execute(cli, &plan).map_err(|e| (EXIT_FAILURE, e))
}

/// Runs the command line `args` (program name first) and returns the exit
/// code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            if code == EXIT_OK {
                let _ = write!(stdout, "{}", e.render());
            } else {
                let _ = write!(stderr, "{}", e.render());
            }
            return code;
        }
    };
    let report = match build_report(&cli) {
        Ok(r) => r,
        Err((code, e)) => {
            let _ = writeln!(stderr, "error: {e}");
            return code;
        }
    };
    let text = match report.render(cli.format) {
        Ok(t) => t,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            return EXIT_FAILURE;
        }
    };
    let written = match &cli.out {
        Some(path) => std::fs::write(path, &text),
        None => stdout.write_all(text.as_bytes()),
    };
    if let Err(e) = written {
        let _ = writeln!(stderr, "error: {e}");
        return EXIT_FAILURE;
    }
    if report.failed {
        EXIT_FAILURE
    } else {
        EXIT_OK
    }
}
