//! The acceptance suite run by `selftest`.
//!
//! Each criterion draws from its own stream of the configured seed, so
//! criteria are reproducible independently of each other.

use num_complex::Complex64;
use serde::Serialize;

use crate::birep::{
    basis_commutator_constants, birep_axiom_residual, classical_lie_cartan_residual, commutator,
    derivative_generators, generators, lie_cartan_residual, structure_functions,
    tangent_structure_constants, Algebra, SquareMatrix,
};
use crate::charge::{charges_from_frame, identity_ledger, yamagutian, Identity};
use crate::commands::{charge_ledger_report, exit_code, lie_cartan_report, EXIT_INPUT};
use crate::config::RunConfig;
use crate::error::Result;
use crate::finite_loop::{
    birep_axiom_residual_table, cyclic_group, octonion_loop_16, parse_table, quaternion_group_8,
};
use crate::fock::{bilinear, fock_build, FockOperator};
use crate::malcev::{jacobiator, malcev_residual, StructureTensor, TangentVector};
use crate::numdiff::DiffConfig;
use crate::octonion::{ChartPoint, MulTable};
use crate::report::{Comparison, Report, ReportEntry};
use crate::sampling::{random_chart_point, random_matrix, random_tangent, random_unit_octonion, stream_rng};

/// A table that fails to parse: the declared order promises three rows.
pub const MALFORMED_TABLE: &str = "3\n0 1 2\n1 2 0\n";

pub const CRITERIA: [(u8, &str); 10] = [
    (1, "moufang_identity"),
    (2, "birepresentation_axioms"),
    (3, "tangent_structure_constants"),
    (4, "malcev_identity"),
    (5, "maurer_cartan_initial_condition"),
    (6, "lie_cartan_relations"),
    (7, "classical_lie_cartan_limit"),
    (8, "fock_transport"),
    (9, "yamagutian_ledger"),
    (10, "determinism"),
];

#[derive(Debug, Clone)]
pub struct SelftestOptions {
    pub seed: u64,
    pub table: MulTable,
    pub diff: DiffConfig,
    pub radius: f64,
}

impl Default for SelftestOptions {
    fn default() -> Self {
        let cfg = RunConfig::default();
        SelftestOptions {
            seed: cfg.seed,
            table: MulTable::STANDARD,
            diff: cfg.diff(),
            radius: cfg.radius,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CriterionResult {
    pub id: u8,
    pub name: &'static str,
    pub pass: bool,
    pub checks: Vec<ReportEntry>,
}

impl CriterionResult {
    fn new(id: u8, checks: Vec<ReportEntry>) -> Self {
        let name = CRITERIA[usize::from(id) - 1].1;
        CriterionResult {
            id,
            name,
            pass: checks.iter().all(|c| c.pass),
            checks,
        }
    }

    pub fn first_failure(&self) -> Option<&ReportEntry> {
        self.checks.iter().find(|c| !c.pass)
    }

    pub fn summary_line(&self) -> String {
        let worst = self
            .first_failure()
            .or_else(|| self.checks.first())
            .map(|c| format!("{} = {:.3e} (bound {:.1e})", c.name, c.max_residual, c.tolerance))
            .unwrap_or_default();
        format!(
            "criterion {:>2} {:<32} {}  {}",
            self.id,
            self.name,
            if self.pass { "PASS" } else { "FAIL" },
            worst
        )
    }
}

fn below(name: &str, tag: &str, value: f64, bound: f64, samples: usize) -> ReportEntry {
    ReportEntry::new(name, tag, true, value, bound, samples)
}

fn exact(name: &str, tag: &str, value: f64, samples: usize) -> ReportEntry {
    ReportEntry::compare(name, tag, true, value, Comparison::Equal, 0.0, samples)
}

fn criterion_moufang(opts: &SelftestOptions) -> Vec<ReportEntry> {
    const N: usize = 10_000;
    let mut rng = stream_rng(opts.seed, 1);
    let worst = (0..N)
        .map(|_| {
            let (a, g, h) = (
                random_unit_octonion(&mut rng),
                random_unit_octonion(&mut rng),
                random_unit_octonion(&mut rng),
            );
            opts.table.moufang_residual(&a, &g, &h)
        })
        .fold(0.0, f64::max);
    vec![below("moufang_residual", "(ag)(ha) = (a(gh))a", worst, 1e-12, N)]
}

fn criterion_birep(opts: &SelftestOptions) -> Result<Vec<ReportEntry>> {
    const N: usize = 1_000;
    let mut rng = stream_rng(opts.seed, 2);
    let worst = (0..N)
        .map(|_| {
            let (g, h) = (random_unit_octonion(&mut rng), random_unit_octonion(&mut rng));
            birep_axiom_residual(&opts.table, &g, &h)
        })
        .fold(0.0, f64::max);
    let mut tables = vec![("octonion_loop_16", octonion_loop_16()), ("quaternion_group_8", quaternion_group_8())];
    for n in 1..=8 {
        tables.push(("cyclic_group", cyclic_group(n)?));
    }
    let defect: usize = tables.iter().map(|(_, t)| birep_axiom_residual_table(t)).sum();
    Ok(vec![
        below("continuous_axioms", "T_g S_g S_h = S_gh T_g; S_g T_g T_h = T_hg S_g", worst, 1e-12, N),
        exact(
            "discrete_axioms",
            "regular permutation representation of builtin loops and groups",
            defect as f64,
            tables.len(),
        ),
    ])
}

fn criterion_tangent(_: &SelftestOptions) -> Result<Vec<ReportEntry>> {
    let tc = tangent_structure_constants(Algebra::Octonion)?;
    let oracle = basis_commutator_constants(Algebra::Octonion);
    let e = |i: usize| TangentVector::basis(7, i - 1);
    let jac = jacobiator(&tc.tensor, &e(1), &e(2), &e(4))?.norm();
    Ok(vec![
        below("raw_asymmetry", "c_jk^i + c_kj^i before symmetrization", tc.raw_asymmetry, 1e-7, 1),
        below("basis_commutator_oracle", "c = 2f from e_j e_k - e_k e_j", tc.tensor.max_abs_diff(&oracle), 1e-6, 1),
        ReportEntry::compare("jacobi_failure_witness", "|J(e_1,e_2,e_4)|", true, jac, Comparison::AtLeast, 1.0, 1),
    ])
}

fn worst_malcev(c: &StructureTensor, rng: &mut crate::sampling::SampleRng, n: usize) -> Result<f64> {
    let mut worst = 0.0f64;
    for _ in 0..n {
        let r = c.dim();
        let (x, y, z) = (random_tangent(rng, r), random_tangent(rng, r), random_tangent(rng, r));
        worst = worst.max(malcev_residual(c, &x, &y, &z)?);
    }
    Ok(worst)
}

fn criterion_malcev(opts: &SelftestOptions) -> Result<Vec<ReportEntry>> {
    const TRIPLES: usize = 1_000;
    const POINTS: usize = 10;
    const TRIPLES_PER_POINT: usize = 100;
    let mut rng = stream_rng(opts.seed, 4);
    let tag = "[J(x,y,z),x] = J(x,y,[x,z])";
    let at_unit = worst_malcev(&tangent_structure_constants(Algebra::Octonion)?.tensor, &mut rng, TRIPLES)?;
    let mut at_points = 0.0f64;
    for _ in 0..POINTS {
        let g = random_chart_point(&mut rng, 7, opts.radius);
        let c = structure_functions(Algebra::Octonion, &g, &opts.diff)?.tensor;
        at_points = at_points.max(worst_malcev(&c, &mut rng, TRIPLES_PER_POINT)?);
    }
    Ok(vec![
        below("malcev_at_unit", tag, at_unit, 1e-6, TRIPLES),
        below("malcev_at_points", tag, at_points, 1e-5, POINTS * TRIPLES_PER_POINT),
    ])
}

fn criterion_initial_condition(opts: &SelftestOptions) -> Result<Vec<ReportEntry>> {
    let at_e = structure_functions(Algebra::Octonion, &ChartPoint::identity(7), &opts.diff)?;
    let tc = tangent_structure_constants(Algebra::Octonion)?;
    Ok(vec![below(
        "structure_functions_at_unit",
        "c_jk^n(e) = c_jk^n",
        at_e.tensor.max_abs_diff(&tc.tensor),
        1e-5,
        1,
    )])
}

fn criterion_lie_cartan(opts: &SelftestOptions) -> Result<Vec<ReportEntry>> {
    const N: usize = 20;
    let mut rng = stream_rng(opts.seed, 6);
    let (mut first, mut second) = (0.0f64, 0.0f64);
    for _ in 0..N {
        let g = random_chart_point(&mut rng, 7, opts.radius);
        let (s, t) = lie_cartan_residual(Algebra::Octonion, &g, &opts.diff)?;
        first = first.max(s);
        second = second.max(t);
    }
    Ok(vec![
        below("first_relation", crate::commands::LIE_CARTAN_TAGS[0], first, 1e-6, N),
        below("second_relation", crate::commands::LIE_CARTAN_TAGS[1], second, 1e-6, N),
    ])
}

fn criterion_classical(_: &SelftestOptions) -> Result<Vec<ReportEntry>> {
    let gens = generators(Algebra::Quaternion);
    let c = tangent_structure_constants(Algebra::Quaternion)?.tensor;
    Ok(vec![below(
        "quaternionic_restriction",
        "[S_j,S_k] - c S_n = [T_j,T_k] + c T_n = [S_j,T_k] = 0",
        classical_lie_cartan_residual(&gens, &c),
        1e-9,
        1,
    )])
}

fn car_defect(n: usize) -> Result<f64> {
    let modes = fock_build(n)?;
    let dim = modes.dim();
    let identity = FockOperator::identity(dim);
    let mut worst = 0.0f64;
    for a in 0..n {
        for b in 0..n {
            let mut mixed = modes.a[a].anticommutator(&modes.a_dag[b]);
            if a == b {
                mixed.add_scaled(&identity, Complex64::new(-1.0, 0.0));
            }
            worst = worst
                .max(mixed.max_abs())
                .max(modes.a[a].anticommutator(&modes.a[b]).max_abs());
        }
    }
    Ok(worst)
}

/// `‖F − (−B(R))‖` where `R` is a matrix-level Lie–Cartan residual and `F` the
/// same residual among the charges; the phase `i` turns `[iB(X), iB(Y)]`
/// into `−B([X, Y])`.
fn transport_defect(g: &ChartPoint, diff: &DiffConfig) -> Result<(f64, f64)> {
    let algebra = Algebra::Octonion;
    let frame = derivative_generators(algebra, g)?;
    let c = structure_functions(algebra, g, diff)?.tensor;
    let charges = charges_from_frame(&frame)?;
    let (s, t) = (&frame.s_prime, &frame.t_prime);
    let (sigma, tau) = (&charges.sigma, &charges.tau);
    let i = Complex64::new(0.0, 1.0);
    let r = frame.dim();
    let (mut defect, mut gap) = (0.0f64, 0.0f64);
    for j in 0..r {
        for k in 0..r {
            let contract = |family: &[SquareMatrix]| {
                let mut m = SquareMatrix::zeros(8, 8);
                for p in 0..r {
                    m += &family[p] * c.get(j, k, p);
                }
                m
            };
            let m1 = commutator(&s[j], &s[k]) - contract(s) + commutator(&s[j], &t[k]) * 2.0;
            let m2 = commutator(&t[j], &t[k]) + contract(t) + commutator(&t[j], &s[k]) * 2.0;

            let mut f1 = sigma[j].commutator(&sigma[k]);
            let mut f2 = tau[j].commutator(&tau[k]);
            for p in 0..r {
                f1.add_scaled(&sigma[p], -i * c.get(j, k, p));
                f2.add_scaled(&tau[p], i * c.get(j, k, p));
            }
            f1.add_scaled(&sigma[j].commutator(&tau[k]), Complex64::new(2.0, 0.0));
            f2.add_scaled(&tau[j].commutator(&sigma[k]), Complex64::new(2.0, 0.0));

            for (f, m) in [(f1, m1), (f2, m2)] {
                let mut diff = f.clone();
                diff.add_scaled(&bilinear(&m)?, Complex64::new(1.0, 0.0));
                defect = defect.max(diff.max_abs());
                gap = gap.max((f.max_abs() - bilinear(&m)?.max_abs()).abs());
            }
        }
    }
    Ok((defect, gap))
}

fn criterion_fock(opts: &SelftestOptions) -> Result<Vec<ReportEntry>> {
    const PAIRS: usize = 100;
    const POINTS: usize = 3;
    let mut rng = stream_rng(opts.seed, 8);
    let mut hom = 0.0f64;
    for _ in 0..PAIRS {
        let (a, b) = (random_matrix(&mut rng, 8), random_matrix(&mut rng, 8));
        let lhs = bilinear(&a)?.commutator(&bilinear(&b)?);
        hom = hom.max((&lhs - &bilinear(&commutator(&a, &b))?).max_abs());
    }
    let (mut defect, mut gap) = (0.0f64, 0.0f64);
    for _ in 0..POINTS {
        let g = random_chart_point(&mut rng, 7, opts.radius);
        let (d, r) = transport_defect(&g, &opts.diff)?;
        defect = defect.max(d);
        gap = gap.max(r);
    }
    Ok(vec![
        exact("car_defect", "{a_A,a_B^dag} = delta_AB, {a_A,a_B} = 0 on 8 modes", car_defect(8)?, 64),
        below("bilinear_homomorphism", "[B(A),B(B)] = B([A,B])", hom, 1e-12, PAIRS),
        below(
            "charge_vs_matrix_operator",
            "charge Lie-Cartan residual operator = -B(matrix residual)",
            defect,
            1e-10,
            POINTS,
        ),
        below("charge_vs_matrix_residual", "|charge residual| - |matrix residual|", gap, 1e-10, POINTS),
    ])
}

fn criterion_ledger(opts: &SelftestOptions) -> Result<Vec<ReportEntry>> {
    let mut rng = stream_rng(opts.seed, 9);
    let antisym = yamagutian(Algebra::Octonion, &ChartPoint::identity(7), &opts.diff)?.antisymmetry_residual();

    let g = random_chart_point(&mut rng, 7, opts.radius);
    let ledger = identity_ledger(Algebra::Octonion, &g, 32, opts.seed, &opts.diff, &|_, d| d)?;
    let mut missing = 0usize;
    for id in Identity::ALL {
        let count = ledger.entries.iter().filter(|e| e.name == id.name()).count();
        if count != 1 {
            missing += 1;
        }
    }
    for (name, label) in [
        ("split_tt", "printed_lhs"),
        ("reductivity_t", "printed_rhs"),
        ("reductivity_s", "yamaguti_printed"),
        ("reductivity_t", "yamaguti_printed"),
        ("yamagutian_lie_closure", "yamaguti_printed"),
    ] {
        let present = ledger
            .entry(name)
            .is_some_and(|e| e.variants.iter().any(|v| v.label == label && v.max_residual.is_finite()));
        if !present {
            missing += 1;
        }
    }
    missing += ledger.entries.iter().filter(|e| !e.max_residual.is_finite()).count();
    let required_failures = ledger.entries.iter().filter(|e| e.required && !e.pass).count();

    let q = random_chart_point(&mut rng, 3, opts.radius);
    let quaternion = identity_ledger(Algebra::Quaternion, &q, 32, opts.seed, &opts.diff, &|_, d| d)?;
    let worst_q = quaternion.entries.iter().map(|e| e.max_residual).fold(0.0, f64::max);
    let q_failures = quaternion.entries.iter().filter(|e| !e.pass).count();

    Ok(vec![
        below("antisymmetry_at_unit", "Y_jk + Y_kj = 0 at g = e", antisym, 1e-9, 1),
        exact("ledger_completeness", "every identity once, printed variants present", missing as f64, 1),
        exact("ledger_required_failures", "required entries at a random point", required_failures as f64, 1),
        below("quaternionic_ledger_max", "all entries in the associative limit", worst_q, 1e-9, 1),
        exact("quaternionic_ledger_failures", "entries failing in the associative limit", q_failures as f64, 1),
    ])
}

fn criterion_determinism(opts: &SelftestOptions) -> Result<Vec<ReportEntry>> {
    let ledger_cfg = RunConfig {
        command: "charge-ledger".into(),
        seed: opts.seed,
        ..RunConfig::default()
    };
    let scan_cfg = RunConfig {
        command: "lie-cartan".into(),
        seed: opts.seed,
        samples: 3,
        ..RunConfig::default()
    };
    let run = || -> Result<String> {
        Ok(charge_ledger_report(&ledger_cfg)?.to_json() + &lie_cartan_report(&scan_cfg)?.to_json())
    };
    let (first, second) = (run()?, run()?);
    let differing = first.bytes().zip(second.bytes()).filter(|(a, b)| a != b).count()
        + first.len().abs_diff(second.len());
    let code = exit_code(&parse_table(MALFORMED_TABLE), |_| true);
    Ok(vec![
        exact("report_byte_difference", "identical reports for identical seeds", differing as f64, 2),
        exact(
            "malformed_fixture_exit_code",
            "malformed table maps to the input-error exit code",
            f64::from(code - EXIT_INPUT),
            1,
        ),
    ])
}

pub fn run_criterion(id: u8, opts: &SelftestOptions) -> Result<CriterionResult> {
    let checks = match id {
        1 => criterion_moufang(opts),
        2 => criterion_birep(opts)?,
        3 => criterion_tangent(opts)?,
        4 => criterion_malcev(opts)?,
        5 => criterion_initial_condition(opts)?,
        6 => criterion_lie_cartan(opts)?,
        7 => criterion_classical(opts)?,
        8 => criterion_fock(opts)?,
        9 => criterion_ledger(opts)?,
        10 => criterion_determinism(opts)?,
        _ => {
            return Err(crate::error::Error::OutOfRange {
                index: usize::from(id),
                size: CRITERIA.len() + 1,
            })
        }
    };
    Ok(CriterionResult::new(id, checks))
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SelftestReport {
    #[serde(flatten)]
    pub report: Report,
    pub criteria: Vec<CriterionSummary>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CriterionSummary {
    pub id: u8,
    pub name: &'static str,
    pub pass: bool,
}

impl SelftestReport {
    pub fn pass(&self) -> bool {
        self.criteria.iter().all(|c| c.pass)
    }

    pub fn first_failure(&self) -> Option<&CriterionSummary> {
        self.criteria.iter().find(|c| !c.pass)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

/// Runs every criterion; check entries are named `<criterion>.<check>`.
pub fn selftest(cfg: &RunConfig, table: MulTable) -> Result<(SelftestReport, Vec<CriterionResult>)> {
    let opts = SelftestOptions {
        seed: cfg.seed,
        table,
        diff: cfg.diff(),
        radius: cfg.radius,
    };
    let results = CRITERIA
        .iter()
        .map(|&(id, _)| run_criterion(id, &opts))
        .collect::<Result<Vec<_>>>()?;
    let entries = results
        .iter()
        .flat_map(|r| {
            r.checks.iter().map(move |c| ReportEntry {
                name: format!("{}.{}", r.name, c.name),
                ..c.clone()
            })
        })
        .collect();
    let criteria = results
        .iter()
        .map(|r| CriterionSummary {
            id: r.id,
            name: r.name,
            pass: r.pass,
        })
        .collect();
    Ok((
        SelftestReport {
            report: Report::new(cfg.clone(), entries),
            criteria,
        },
        results,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn malformed_fixture_does_not_parse() {
        assert!(parse_table(MALFORMED_TABLE).is_err());
    }

    #[test]
    fn perturbed_table_fails_moufang() {
        let opts = SelftestOptions {
            table: MulTable::perturbed(),
            ..SelftestOptions::default()
        };
        assert!(!CriterionResult::new(1, criterion_moufang(&opts)).pass);
    }

    #[test]
    fn unknown_criterion_is_an_error() {
        assert!(run_criterion(11, &SelftestOptions::default()).is_err());
    }

    #[test]
    fn classical_limit_passes() {
        assert!(run_criterion(7, &SelftestOptions::default()).unwrap().pass);
    }
}
