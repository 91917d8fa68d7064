use crate::convergence::{run_convergence, Family};
use crate::error::Result;
use crate::graph::Graph;
use crate::limits::{omega1, omega2, psi, psi_closed_form, FormulaTag};
use crate::roots::RootConfig;
use crate::spectral::{alpha_radius, radius_bounds};
use crate::verify::{run_suite, Suite};

use super::report::{Cell, Report, Series};

pub fn radius(expr: &str, g: &Graph, alphas: &[f64], tol: f64) -> Result<Report> {
    let mut report = Report::new(
        "radius",
        vec!["graph", "vertices", "edges", "alpha", "rho", "lower", "upper"],
    );
    let mut series = Series {
        name: format!("rho {expr}"),
        points: Vec::new(),
    };
    for &alpha in alphas {
        let rho = alpha_radius(g, alpha, tol)?;
        let (lo, hi) = radius_bounds(g, alpha);
        report.push(vec![
            expr.into(),
            g.n_vertices().into(),
            g.n_edges().into(),
            alpha.into(),
            rho.into(),
            lo.into(),
            hi.into(),
        ]);
        series.points.push((alpha, rho));
    }
    report.series.push(series);
    Ok(report)
}

/// Column names for the root and the limit point of each sequence.
fn table_columns(tag: FormulaTag) -> (&'static str, &'static str) {
    match tag {
        FormulaTag::Classic => ("beta", "eta"),
        FormulaTag::VersionI => ("gamma", "eta"),
        FormulaTag::VersionII => ("gamma_tilde", "eta"),
        FormulaTag::New => ("delta", "zeta"),
        FormulaTag::Laplacian => ("theta", "xi"),
    }
}

/// Sequence terms for each distinct effective `α`, each followed by a
/// `limit` row. Failed terms are kept as annotated rows.
pub fn table(tag: FormulaTag, n_max: usize, alphas: &[f64], cfg: &RootConfig) -> Result<Report> {
    let (root, value) = table_columns(tag);
    let mut report = Report::new(
        "table",
        vec!["n", "alpha", root, value, "deficit", "note"],
    );
    let mut effective: Vec<f64> = Vec::new();
    for &a in alphas {
        let e = tag.effective_alpha(a);
        if !effective.contains(&e) {
            effective.push(e);
        }
    }
    for alpha in effective {
        let limit = tag.limit(alpha, cfg)?;
        let mut values = Series {
            name: format!("{value} alpha={}", super::report::format_real(alpha)),
            points: Vec::new(),
        };
        let mut deficits = Series {
            name: format!("deficit alpha={}", super::report::format_real(alpha)),
            points: Vec::new(),
        };
        for n in tag.first_index()..=n_max {
            match tag.term(n, alpha, cfg) {
                Ok(row) => {
                    // the deficit resolves η < limit; η itself may round onto it
                    let rounding = 4.0 * f64::EPSILON * limit;
                    let note = if row.deficit > 0.0 && row.eta - limit <= rounding {
                        Cell::Empty
                    } else {
                        report.failed = true;
                        Cell::text("not below the limit")
                    };
                    report.push(vec![
                        n.into(),
                        alpha.into(),
                        row.gamma.into(),
                        row.eta.into(),
                        row.deficit.into(),
                        note,
                    ]);
                    values.points.push((n as f64, row.eta));
                    deficits.points.push((n as f64, row.deficit));
                }
                Err(e) => {
                    report.failed = true;
                    report.push(vec![
                        n.into(),
                        alpha.into(),
                        Cell::Empty,
                        Cell::Empty,
                        Cell::Empty,
                        e.to_string().into(),
                    ]);
                }
            }
        }
        report.push(vec![
            "limit".into(),
            alpha.into(),
            Cell::Empty,
            limit.into(),
            Cell::Empty,
            Cell::Empty,
        ]);
        report.series.push(values);
        report.series.push(deficits);
    }
    Ok(report)
}

pub fn psi_rows(alphas: &[f64], cfg: &RootConfig) -> Result<Report> {
    let mut report = Report::new(
        "psi",
        vec!["alpha", "psi", "psi_closed_form", "difference", "omega1", "omega2", "note"],
    );
    let names = ["psi", "psi_closed_form", "omega1", "omega2"];
    let mut series: Vec<Series> = names
        .iter()
        .map(|n| Series {
            name: n.to_string(),
            points: Vec::new(),
        })
        .collect();
    for &alpha in alphas {
        let root = psi(alpha, cfg)?;
        let mut notes = Vec::new();
        let mut keep = |r: Result<f64>, what: &str| match r {
            Ok(v) => Some(v),
            Err(e) => {
                notes.push(format!("{what}: {e}"));
                None
            }
        };
        let closed = keep(psi_closed_form(alpha), "closed form");
        let w1 = keep(omega1(alpha), "omega1");
        let w2 = keep(omega2(alpha, cfg), "omega2");
        let diff = closed.map(|c| (c - root).abs());
        for (s, v) in series.iter_mut().zip([Some(root), closed, w1, w2]) {
            if let Some(v) = v {
                s.points.push((alpha, v));
            }
        }
        report.push(vec![
            alpha.into(),
            root.into(),
            Cell::real_or_empty(closed),
            Cell::real_or_empty(diff),
            Cell::real_or_empty(w1),
            Cell::real_or_empty(w2),
            if notes.is_empty() { Cell::Empty } else { notes.join("; ").into() },
        ]);
    }
    report.series = series;
    Ok(report)
}

pub fn convergence(
    family: Family,
    alphas: &[f64],
    sizes: &[usize],
    n_fixed: Option<usize>,
    tol: f64,
    cfg: &RootConfig,
) -> Result<Report> {
    let mut report = Report::new(
        "convergence",
        vec!["family", "alpha", "size", "order", "rho", "target", "gap", "log10_gap", "violation"],
    );
    for &alpha in alphas {
        let rows = run_convergence(family, alpha, sizes, n_fixed, tol, cfg)?;
        let label = super::report::format_real(alpha);
        let mut rho = Series {
            name: format!("rho {family} alpha={label}"),
            points: Vec::new(),
        };
        let mut gap = Series {
            name: format!("gap {family} alpha={label}"),
            points: Vec::new(),
        };
        for r in rows {
            rho.points.push((r.size as f64, r.rho));
            gap.points.push((r.size as f64, r.gap));
            let violation = match r.violation {
                Some(v) => {
                    report.failed = true;
                    Cell::Text(v)
                }
                None => Cell::Empty,
            };
            report.push(vec![
                family.as_str().into(),
                alpha.into(),
                r.size.into(),
                r.order.into(),
                r.rho.into(),
                r.target.into(),
                r.gap.into(),
                Cell::real_or_empty(r.log10_gap),
                violation,
            ]);
        }
        report.series.push(rho);
        report.series.push(gap);
    }
    Ok(report)
}

pub fn verify(suite: Suite, seed: u64, trials: usize) -> Result<Report> {
    let mut report = Report::new(
        "verify",
        vec![
            "suite",
            "property",
            "checks",
            "resolved_by_bound",
            "max_residual",
            "failures",
            "status",
            "counterexamples",
        ],
    );
    let mut failures = Series {
        name: "failures per property".to_string(),
        points: Vec::new(),
    };
    for (i, r) in run_suite(suite, seed, trials)?.into_iter().enumerate() {
        let passed = r.passed();
        if !passed {
            report.failed = true;
        }
        failures.points.push((i as f64, r.failures.len() as f64));
        let counterexamples = if passed {
            Cell::Empty
        } else {
            Cell::Json(serde_json::to_value(&r.failures).expect("counterexamples serialize"))
        };
        report.push(vec![
            r.suite.into(),
            r.property.into(),
            r.checks.into(),
            r.resolved_by_bound.into(),
            Cell::real_or_empty(r.max_residual),
            r.failures.len().into(),
            if passed { "PASS" } else { "FAIL" }.into(),
            counterexamples,
        ]);
    }
    report.series.push(failures);
    Ok(report)
}
