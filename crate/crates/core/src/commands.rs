//! Report builders behind the command-line front end.
//!
//! Exit-code contract: [`EXIT_PASS`] when every required check passes,
//! [`EXIT_FAIL`] when one fails, [`EXIT_INPUT`] for any input or
//! configuration error.

use serde::Serialize;

use crate::birep::{lie_cartan_residual, Algebra};
use crate::charge::identity_ledger;
use crate::config::RunConfig;
use crate::error::{Error, Result};
use crate::finite_loop::{birep_axiom_residual_table, classify, parse_table, LoopClassification};
use crate::octonion::ChartPoint;
use crate::report::{Report, ReportEntry, REPORT_VERSION};
use crate::sampling::{random_chart_point, stream_rng};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

/// Stream of the configured seed that chart points are drawn from.
const POINT_STREAM: u64 = 1 << 32;
/// Give up after this many ill-conditioned draws per requested sample.
const MAX_RESAMPLES_PER_SAMPLE: usize = 100;

pub const LIE_CARTAN_TAGS: [&str; 2] = [
    "[S'_j,S'_k] = c_jk^n(g) S'_n - 2[S'_j,T'_k]",
    "[T'_j,T'_k] = -c_jk^n(g) T'_n - 2[T'_j,S'_k]",
];

pub fn exit_code<T>(outcome: &Result<T>, passed: impl Fn(&T) -> bool) -> i32 {
    match outcome {
        Ok(v) if passed(v) => EXIT_PASS,
        Ok(_) => EXIT_FAIL,
        Err(_) => EXIT_INPUT,
    }
}

pub fn validate_config(cfg: &RunConfig) -> Result<()> {
    if !(cfg.radius > 0.0 && cfg.radius < 1.0) {
        return Err(Error::Range(format!("chart radius {} must lie in (0, 1)", cfg.radius)));
    }
    if cfg.samples == 0 {
        return Err(Error::Domain("sample count must be positive".into()));
    }
    if !(cfg.fd_step.is_finite() && cfg.fd_step > 0.0) {
        return Err(Error::Domain(format!("finite-difference step {} must be positive", cfg.fd_step)));
    }
    if let Some((name, tol)) = cfg.tolerances.iter().find(|(_, t)| !(t.is_finite() && **t > 0.0)) {
        return Err(Error::Domain(format!("tolerance for {name} must be positive, got {tol}")));
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TableReport {
    pub version: u32,
    pub command: &'static str,
    pub order: usize,
    pub classification: LoopClassification,
    /// Number of `(g, h)` pairs violating either birepresentation axiom for
    /// the regular permutation representation.
    pub birep_axiom_defect: usize,
}

impl TableReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let c = &self.classification;
        let flag = |name: &str, f: &crate::finite_loop::Flag| match &f.counterexample {
            Some(cx) if !f.holds => format!("{name}: false ({:?} fails at {:?})\n", cx.law, cx.elements),
            _ => format!("{name}: {}\n", f.holds),
        };
        let mut out = format!("order: {}\n", self.order);
        out += &flag("quasigroup", &c.is_quasigroup);
        out += &flag("loop", &c.is_loop);
        out += &flag("moufang", &c.is_moufang);
        out += &flag("group", &c.is_group);
        out += &flag("flexible", &c.is_flexible);
        out += &format!("birep axiom defect: {}\n", self.birep_axiom_defect);
        out
    }
}

pub fn check_table(text: &str) -> Result<TableReport> {
    let table = parse_table(text)?;
    Ok(TableReport {
        version: REPORT_VERSION,
        command: "check-table",
        order: table.order(),
        classification: classify(&table),
        birep_axiom_defect: birep_axiom_residual_table(&table),
    })
}

/// Lie–Cartan residuals of the octonion pipeline at `cfg.samples` random chart
/// points. Ill-conditioned draws are discarded and counted.
pub fn lie_cartan_report(cfg: &RunConfig) -> Result<Report> {
    validate_config(cfg)?;
    let algebra = Algebra::Octonion;
    let diff = cfg.diff();
    let mut rng = stream_rng(cfg.seed, POINT_STREAM);
    let (mut worst_s, mut worst_t) = (0.0f64, 0.0f64);
    let mut resamples = 0usize;
    let mut accepted = 0usize;
    while accepted < cfg.samples {
        let g = random_chart_point(&mut rng, algebra.tangent_dim(), cfg.radius);
        match lie_cartan_residual(algebra, &g, &diff) {
            Ok((s, t)) => {
                worst_s = worst_s.max(s);
                worst_t = worst_t.max(t);
                accepted += 1;
            }
            Err(Error::Conditioning { cond }) => {
                resamples += 1;
                if resamples > MAX_RESAMPLES_PER_SAMPLE * cfg.samples {
                    return Err(Error::Conditioning { cond });
                }
            }
            Err(e) => return Err(e),
        }
    }
    let tol = cfg.tolerance("lie_cartan", crate::config::DEFAULT_LIE_CARTAN_TOL);
    let entries = vec![
        ReportEntry::new("lie_cartan_first", LIE_CARTAN_TAGS[0], true, worst_s, tol, cfg.samples),
        ReportEntry::new("lie_cartan_second", LIE_CARTAN_TAGS[1], true, worst_t, tol, cfg.samples),
    ];
    let mut report = Report::new(cfg.clone(), entries);
    report
        .diagnostics
        .insert("conditioning_resamples".into(), resamples as f64);
    Ok(report)
}

/// The ledger point: `cfg.point` if set, otherwise a seeded random draw.
pub fn ledger_point(cfg: &RunConfig) -> Result<ChartPoint> {
    let r = cfg.algebra.tangent_dim();
    match &cfg.point {
        Some(x) => {
            if x.len() != r {
                return Err(Error::Dimension {
                    expected: r,
                    found: x.len(),
                });
            }
            ChartPoint::new(x.clone())
        }
        None => Ok(random_chart_point(&mut stream_rng(cfg.seed, POINT_STREAM), r, cfg.radius)),
    }
}

pub fn charge_ledger_report(cfg: &RunConfig) -> Result<Report> {
    validate_config(cfg)?;
    let g = ledger_point(cfg)?;
    let ledger = identity_ledger(cfg.algebra, &g, cfg.samples, cfg.seed, &cfg.diff(), &|name, d| {
        cfg.tolerance(name, d)
    })?;
    let mut echoed = cfg.clone();
    echoed.point = Some(ledger.point.clone());
    let mut report = Report::new(echoed, ledger.entries);
    report.conventions = ledger.conventions;
    Ok(report)
}
