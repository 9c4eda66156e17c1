//! Noether charge densities of the octonion birepresentation realized on a
//! single-mode fermionic Fock space, and the ledger of charge-algebra
//! identities.
//!
//! Field components map to modes, `u^A ↦ a_A`, and the spatial delta
//! collapses to one mode, so a density `p·M·u` is the fermion bilinear
//! `Σ a_A† M_{AB} a_B` times a scalar phase. One phase, [`DENSITY_PHASE`]
//! `= i`, is used for every family:
//!
//! ```text
//! s_j = i·B(S'_j)    t_j = i·B(T'_j)    Y_jk = i·B(Y_jk)
//! ```
//!
//! It is the phase under which `[s_j, s_k] = i c s_p − 2[s_j, t_k]`
//! reproduces the matrix relation `[S'_j, S'_k] = c S'_n − 2[S'_j, T'_k]`.
//! Because `B` is a Lie homomorphism, every identity can be checked both on
//! the `n×n` defining matrices (multiplied by the same phase) and on the
//! `2ⁿ×2ⁿ` Fock operators; the ledger does both.
//!
//! The matrix-level Yamagutian is
//! `Y_jk = −[S'_j, T'_k] + (1/3) c_{jk}^p(g) (S'_p − T'_p)`.

use nalgebra::DMatrix;
use num_complex::Complex64;
use rand::Rng;

use crate::birep::{derivative_generators, structure_functions, Algebra, GeneratorFrame, SquareMatrix};
use crate::error::Result;
use crate::fock::{bilinear, bilinear_complex, FockOperator};
use crate::malcev::{yamaguti_tensor, yamaguti_tensor_printed, StructureTensor, YamagutiTensor};
use crate::numdiff::DiffConfig;
use crate::octonion::ChartPoint;
use crate::report::{ReportEntry, VariantResidual};
use crate::sampling::stream_rng;

pub const DENSITY_PHASE: Complex64 = Complex64::new(0.0, 1.0);

/// Tolerance for the required ledger entries.
pub const REQUIRED_TOL: f64 = 1e-8;
/// Tolerance reported against for exploratory entries.
pub const EXPLORATORY_TOL: f64 = 1e-8;
/// Tolerance of every entry in the associative (quaternion) limit.
pub const ASSOCIATIVE_TOL: f64 = 1e-9;

#[derive(Debug, Clone)]
pub struct ChargeFamily {
    pub g: ChartPoint,
    pub sigma: Vec<FockOperator>,
    pub tau: Vec<FockOperator>,
}

pub fn charges_from_frame(frame: &GeneratorFrame) -> Result<ChargeFamily> {
    let lift = |m: &SquareMatrix| Ok(bilinear(m)?.scale(DENSITY_PHASE));
    Ok(ChargeFamily {
        g: frame.g.clone(),
        sigma: frame.s_prime.iter().map(lift).collect::<Result<_>>()?,
        tau: frame.t_prime.iter().map(lift).collect::<Result<_>>()?,
    })
}

pub fn charges(algebra: Algebra, g: &ChartPoint) -> Result<ChargeFamily> {
    charges_from_frame(&derivative_generators(algebra, g)?)
}

#[derive(Debug, Clone)]
pub struct YamagutianFrame {
    pub g: ChartPoint,
    /// `y[j][k]` is the matrix-level `Y_jk`.
    pub y: Vec<Vec<SquareMatrix>>,
}

impl YamagutianFrame {
    /// `i·B(Y_jk)`.
    pub fn fock(&self, j: usize, k: usize) -> Result<FockOperator> {
        Ok(bilinear(&self.y[j][k])?.scale(DENSITY_PHASE))
    }

    /// `max_{j,k} ‖Y_jk + Y_kj‖_max`.
    pub fn antisymmetry_residual(&self) -> f64 {
        let r = self.y.len();
        let mut worst = 0.0f64;
        for j in 0..r {
            for k in 0..r {
                worst = worst.max((&self.y[j][k] + &self.y[k][j]).amax());
            }
        }
        worst
    }
}

pub fn yamagutian_with(frame: &GeneratorFrame, c: &StructureTensor) -> YamagutianFrame {
    let (s, t) = (&frame.s_prime, &frame.t_prime);
    let r = frame.dim();
    let y = (0..r)
        .map(|j| {
            (0..r)
                .map(|k| {
                    let mut m = -(&s[j] * &t[k] - &t[k] * &s[j]);
                    for p in 0..r {
                        m += (&s[p] - &t[p]) * (c.get(j, k, p) / 3.0);
                    }
                    m
                })
                .collect()
        })
        .collect();
    YamagutianFrame { g: frame.g.clone(), y }
}

pub fn yamagutian(algebra: Algebra, g: &ChartPoint, cfg: &DiffConfig) -> Result<YamagutianFrame> {
    let c = structure_functions(algebra, g, cfg)?;
    let frame = derivative_generators(algebra, g)?;
    Ok(yamagutian_with(&frame, &c.tensor))
}

/// Operations the identity checks need, shared by the matrix and Fock levels.
pub trait ChargeOperator: Clone {
    fn commutator(&self, other: &Self) -> Self;
    fn add_scaled(&mut self, other: &Self, coeff: Complex64);
    fn zero_like(&self) -> Self;
    fn max_abs(&self) -> f64;
}

impl ChargeOperator for DMatrix<Complex64> {
    fn commutator(&self, other: &Self) -> Self {
        self * other - other * self
    }
    fn add_scaled(&mut self, other: &Self, coeff: Complex64) {
        *self += other * coeff;
    }
    fn zero_like(&self) -> Self {
        DMatrix::zeros(self.nrows(), self.ncols())
    }
    fn max_abs(&self) -> f64 {
        self.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }
}

impl ChargeOperator for FockOperator {
    fn commutator(&self, other: &Self) -> Self {
        FockOperator::commutator(self, other)
    }
    fn add_scaled(&mut self, other: &Self, coeff: Complex64) {
        FockOperator::add_scaled(self, other, coeff)
    }
    fn zero_like(&self) -> Self {
        FockOperator::zeros(self.dim())
    }
    fn max_abs(&self) -> f64 {
        FockOperator::max_abs(self)
    }
}

/// Charge densities `s_j, t_j, Y_jk` at one realization level.
#[derive(Debug, Clone)]
pub struct Densities<D> {
    pub s: Vec<D>,
    pub t: Vec<D>,
    pub y: Vec<Vec<D>>,
}

impl<D: ChargeOperator> Densities<D> {
    pub fn dim(&self) -> usize {
        self.s.len()
    }
}

fn phased(m: &SquareMatrix) -> DMatrix<Complex64> {
    m.map(|x| DENSITY_PHASE * x)
}

pub fn matrix_densities(frame: &GeneratorFrame, y: &YamagutianFrame) -> Densities<DMatrix<Complex64>> {
    Densities {
        s: frame.s_prime.iter().map(phased).collect(),
        t: frame.t_prime.iter().map(phased).collect(),
        y: y.y.iter().map(|row| row.iter().map(phased).collect()).collect(),
    }
}

pub fn fock_densities(frame: &GeneratorFrame, y: &YamagutianFrame) -> Result<Densities<FockOperator>> {
    let lift = |m: &SquareMatrix| bilinear_complex(&phased(m));
    Ok(Densities {
        s: frame.s_prime.iter().map(lift).collect::<Result<_>>()?,
        t: frame.t_prime.iter().map(lift).collect::<Result<_>>()?,
        y: y.y
            .iter()
            .map(|row| row.iter().map(lift).collect::<Result<_>>())
            .collect::<Result<_>>()?,
    })
}

/// The identities tracked by the ledger.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Identity {
    /// `[S'_j,S'_k] = c S'_n − 2[S'_j,T'_k]`, `[T'_j,T'_k] = −c T'_n − 2[T'_j,S'_k]`.
    LieCartan,
    /// The same relations for the Fock-space charges.
    ChargeAlgebra,
    /// `[s_j, t_k] = [t_j, s_k]`.
    AssociatorSymmetry,
    /// `[s_j, s_k] = i(2Y_jk + ⅓c s + ⅔c t)`.
    SplitSS,
    /// `[s_j, t_k] = i(−Y_jk + ⅓c s − ⅓c t)`.
    YamagutianDefinition,
    /// `[t_j, t_k] = i(2Y_jk − ⅔c s − ⅓c t)`.
    SplitTT,
    /// `Y_jk + Y_kj = 0`.
    YamagutianAntisymmetry,
    /// `c_jk^p Y_pl + c_kl^p Y_pj + c_lj^p Y_pk = 0`.
    YamagutianCyclic,
    /// `[Y_jk, s_n] = i d_jkn^p s_p`.
    ReductivityS,
    /// `[Y_jk, t_n] = i d_jkn^p t_p`.
    ReductivityT,
    /// `[Y_jk, Y_ln] = i(d_jkl^p Y_pn + d_jkn^p Y_lp)`.
    YamagutianClosure,
}

impl Identity {
    pub const ALL: [Identity; 11] = [
        Identity::LieCartan,
        Identity::ChargeAlgebra,
        Identity::AssociatorSymmetry,
        Identity::SplitSS,
        Identity::YamagutianDefinition,
        Identity::SplitTT,
        Identity::YamagutianAntisymmetry,
        Identity::YamagutianCyclic,
        Identity::ReductivityS,
        Identity::ReductivityT,
        Identity::YamagutianClosure,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Identity::LieCartan => "lie_cartan_relations",
            Identity::ChargeAlgebra => "charge_algebra_birepresentation",
            Identity::AssociatorSymmetry => "associator_symmetry",
            Identity::SplitSS => "split_ss",
            Identity::YamagutianDefinition => "yamagutian_definition",
            Identity::SplitTT => "split_tt",
            Identity::YamagutianAntisymmetry => "yamagutian_antisymmetry",
            Identity::YamagutianCyclic => "yamagutian_cyclic",
            Identity::ReductivityS => "reductivity_s",
            Identity::ReductivityT => "reductivity_t",
            Identity::YamagutianClosure => "yamagutian_lie_closure",
        }
    }

    pub fn tag(self) -> &'static str {
        match self {
            Identity::LieCartan => {
                "[S'_j,S'_k] = c_jk^n(g) S'_n - 2[S'_j,T'_k]; [T'_j,T'_k] = -c_jk^n(g) T'_n - 2[T'_j,S'_k]"
            }
            Identity::ChargeAlgebra => {
                "[s_j,s_k] = i c_jk^p s_p - 2[s_j,t_k]; [t_j,t_k] = -i c_jk^p t_p - 2[t_j,s_k] (Fock charges)"
            }
            Identity::AssociatorSymmetry => "[s_j,t_k] = [t_j,s_k]",
            Identity::SplitSS => "[s_j,s_k] = i(2Y_jk + 1/3 c_jk^p s_p + 2/3 c_jk^p t_p)",
            Identity::YamagutianDefinition => "[s_j,t_k] = i(-Y_jk + 1/3 c_jk^p s_p - 1/3 c_jk^p t_p)",
            Identity::SplitTT => "[t_j,t_k] = i(2Y_jk - 2/3 c_jk^p s_p - 1/3 c_jk^p t_p)",
            Identity::YamagutianAntisymmetry => "Y_jk + Y_kj = 0",
            Identity::YamagutianCyclic => "c_jk^p Y_pl + c_kl^p Y_pj + c_lj^p Y_pk = 0",
            Identity::ReductivityS => "[Y_jk, s_n] = i d_jkn^p s_p",
            Identity::ReductivityT => "[Y_jk, t_n] = i d_jkn^p t_p",
            Identity::YamagutianClosure => "[Y_jk, Y_ln] = i(d_jkl^p Y_pn + d_jkn^p Y_lp)",
        }
    }

    pub fn arity(self) -> usize {
        match self {
            Identity::YamagutianCyclic | Identity::ReductivityS | Identity::ReductivityT => 3,
            Identity::YamagutianClosure => 4,
            _ => 2,
        }
    }

    /// Required identities follow from the definitions alone; the rest are
    /// measured and reported. In the associative limit all are required.
    pub fn required(self, algebra: Algebra) -> bool {
        algebra == Algebra::Quaternion
            || matches!(
                self,
                Identity::LieCartan
                    | Identity::ChargeAlgebra
                    | Identity::AssociatorSymmetry
                    | Identity::YamagutianAntisymmetry
            )
    }
}

/// Alternative readings evaluated alongside the primary form.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Reading {
    Primary,
    /// `split_tt` with `[t_j, s_k]` on the left; `reductivity_t` with the
    /// `s` family on the right.
    Printed,
}

fn i_times(x: f64) -> Complex64 {
    DENSITY_PHASE * x
}

/// Residual `‖LHS − RHS‖_max` of `identity` at the index tuple `idx`.
pub fn identity_residual<D: ChargeOperator>(
    identity: Identity,
    reading: Reading,
    dens: &Densities<D>,
    c: &StructureTensor,
    d: &YamagutiTensor,
    idx: &[usize],
) -> f64 {
    let r = dens.dim();
    let (s, t, y) = (&dens.s, &dens.t, &dens.y);
    let one = Complex64::new(1.0, 0.0);
    // acc += Σ_p coeff(p) · family[p]
    let add_family = |acc: &mut D, family: &[D], coeff: &dyn Fn(usize) -> Complex64| {
        for (p, op) in family.iter().enumerate() {
            let w = coeff(p);
            if w != Complex64::new(0.0, 0.0) {
                acc.add_scaled(op, w);
            }
        }
    };
    match identity {
        Identity::LieCartan | Identity::ChargeAlgebra => {
            let (j, k) = (idx[0], idx[1]);
            let mut first = s[j].commutator(&s[k]);
            add_family(&mut first, s, &|p| -i_times(c.get(j, k, p)));
            first.add_scaled(&s[j].commutator(&t[k]), one * 2.0);
            let mut second = t[j].commutator(&t[k]);
            add_family(&mut second, t, &|p| i_times(c.get(j, k, p)));
            second.add_scaled(&t[j].commutator(&s[k]), one * 2.0);
            first.max_abs().max(second.max_abs())
        }
        Identity::AssociatorSymmetry => {
            let (j, k) = (idx[0], idx[1]);
            let mut m = s[j].commutator(&t[k]);
            m.add_scaled(&t[j].commutator(&s[k]), -one);
            m.max_abs()
        }
        Identity::SplitSS | Identity::YamagutianDefinition | Identity::SplitTT => {
            let (j, k) = (idx[0], idx[1]);
            let (lhs, y_coeff, s_coeff, t_coeff) = match (identity, reading) {
                (Identity::SplitSS, _) => (s[j].commutator(&s[k]), 2.0, 1.0 / 3.0, 2.0 / 3.0),
                (Identity::YamagutianDefinition, _) => {
                    (s[j].commutator(&t[k]), -1.0, 1.0 / 3.0, -1.0 / 3.0)
                }
                (_, Reading::Primary) => (t[j].commutator(&t[k]), 2.0, -2.0 / 3.0, -1.0 / 3.0),
                (_, Reading::Printed) => (t[j].commutator(&s[k]), 2.0, -2.0 / 3.0, -1.0 / 3.0),
            };
            let mut m = lhs;
            m.add_scaled(&y[j][k], -i_times(y_coeff));
            add_family(&mut m, s, &|p| -i_times(s_coeff * c.get(j, k, p)));
            add_family(&mut m, t, &|p| -i_times(t_coeff * c.get(j, k, p)));
            m.max_abs()
        }
        Identity::YamagutianAntisymmetry => {
            let (j, k) = (idx[0], idx[1]);
            let mut m = y[j][k].clone();
            m.add_scaled(&y[k][j], one);
            m.max_abs()
        }
        Identity::YamagutianCyclic => {
            let (j, k, l) = (idx[0], idx[1], idx[2]);
            let mut m = y[0][0].zero_like();
            for p in 0..r {
                for (a, b, other) in [(j, k, l), (k, l, j), (l, j, k)] {
                    let w = c.get(a, b, p);
                    if w != 0.0 {
                        m.add_scaled(&y[p][other], one * w);
                    }
                }
            }
            m.max_abs()
        }
        Identity::ReductivityS | Identity::ReductivityT => {
            let (j, k, n) = (idx[0], idx[1], idx[2]);
            let (lhs, rhs) = match (identity, reading) {
                (Identity::ReductivityS, _) => (s, s),
                (_, Reading::Primary) => (t, t),
                (_, Reading::Printed) => (t, s),
            };
            let mut m = y[j][k].commutator(&lhs[n]);
            add_family(&mut m, rhs, &|p| -i_times(d.get(j, k, n, p)));
            m.max_abs()
        }
        Identity::YamagutianClosure => {
            let (j, k, l, n) = (idx[0], idx[1], idx[2], idx[3]);
            let mut m = y[j][k].commutator(&y[l][n]);
            for p in 0..r {
                let (a, b) = (d.get(j, k, l, p), d.get(j, k, n, p));
                if a != 0.0 {
                    m.add_scaled(&y[p][n], -i_times(a));
                }
                if b != 0.0 {
                    m.add_scaled(&y[l][p], -i_times(b));
                }
            }
            m.max_abs()
        }
    }
}

fn all_tuples(r: usize, arity: usize) -> Vec<Vec<usize>> {
    (0..r.pow(arity as u32))
        .map(|mut code| {
            let mut tuple = vec![0; arity];
            for slot in tuple.iter_mut().rev() {
                *slot = code % r;
                code /= r;
            }
            tuple
        })
        .collect()
}

fn max_over<D: ChargeOperator>(
    identity: Identity,
    reading: Reading,
    dens: &Densities<D>,
    c: &StructureTensor,
    d: &YamagutiTensor,
    tuples: &[Vec<usize>],
) -> f64 {
    tuples
        .iter()
        .map(|idx| identity_residual(identity, reading, dens, c, d, idx))
        .fold(0.0, f64::max)
}

/// Everything the ledger evaluates at one point.
struct LedgerPoint {
    frame: GeneratorFrame,
    c: StructureTensor,
    d: YamagutiTensor,
    d_printed: YamagutiTensor,
    matrix: Densities<DMatrix<Complex64>>,
}

impl LedgerPoint {
    fn new(algebra: Algebra, g: &ChartPoint, cfg: &DiffConfig) -> Result<Self> {
        let c = structure_functions(algebra, g, cfg)?.tensor;
        let frame = derivative_generators(algebra, g)?;
        let y = yamagutian_with(&frame, &c);
        let matrix = matrix_densities(&frame, &y);
        Ok(LedgerPoint {
            d: yamaguti_tensor(&c),
            d_printed: yamaguti_tensor_printed(&c),
            c,
            matrix,
            frame,
        })
    }

    fn fock(&self) -> Result<Densities<FockOperator>> {
        let y = yamagutian_with(&self.frame, &self.c);
        fock_densities(&self.frame, &y)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct IdentityReport {
    pub algebra: Algebra,
    pub point: Vec<f64>,
    pub entries: Vec<ReportEntry>,
    pub conventions: Vec<String>,
}

impl IdentityReport {
    pub fn entry(&self, name: &str) -> Option<&ReportEntry> {
        self.entries.iter().find(|e| e.name == name)
    }

    pub fn required_pass(&self) -> bool {
        self.entries.iter().filter(|e| e.required).all(|e| e.pass)
    }
}

pub fn conventions() -> Vec<String> {
    vec![
        "densities: s_j = i B(S'_j), t_j = i B(T'_j), Y_jk = i B(Y_jk) with B(M) = sum_AB a_A^dag M_AB a_B; matrix level uses i M".into(),
        "single spatial mode: the delta factor of every equal-time commutator is 1".into(),
        "Y_jk = -[S'_j,T'_k] + 1/3 c_jk^p(g) (S'_p - T'_p)".into(),
        "c = structure functions c_jk^n(g) at the ledger point".into(),
        "6 d_jkn^p = c_js^p c_kn^s - c_ks^p c_jn^s + c_sn^p c_jk^s; variant yamaguti_printed uses trace(c_.n^.) c_jk^p as last term".into(),
        "split_tt variant printed_lhs puts [t_j,s_k] on the left; reductivity_t variant printed_rhs reads [Y_jk,t_n] = i d_jkn^p s_p".into(),
        "associator_symmetry and yamagutian_antisymmetry gate at the unit; variant at_point is the value at g".into(),
        "residual norm: largest entry modulus; matrix level exhaustive over indices, Fock level on seeded samples".into(),
    ]
}

fn sample_tuples(r: usize, arity: usize, samples: usize, seed: u64, stream: u64) -> Vec<Vec<usize>> {
    let total = r.pow(arity as u32);
    if samples >= total {
        return all_tuples(r, arity);
    }
    let mut rng = stream_rng(seed, stream);
    (0..samples)
        .map(|_| (0..arity).map(|_| rng.random_range(0..r)).collect())
        .collect()
}

/// Evaluates every identity at `g`, on the defining matrices (all index
/// tuples) and on Fock charges (`samples` seeded tuples per identity; the
/// charge-algebra entry always uses all pairs).
pub fn identity_ledger(
    algebra: Algebra,
    g: &ChartPoint,
    samples: usize,
    seed: u64,
    cfg: &DiffConfig,
    tolerance: &dyn Fn(&str, f64) -> f64,
) -> Result<IdentityReport> {
    let r = algebra.tangent_dim();
    let here = LedgerPoint::new(algebra, g, cfg)?;
    let unit = if g.is_identity() {
        None
    } else {
        Some(LedgerPoint::new(algebra, &ChartPoint::identity(r), cfg)?)
    };
    let unit_ref = unit.as_ref().unwrap_or(&here);
    let fock = here.fock()?;
    let unit_fock = match &unit {
        Some(u) => Some(u.fock()?),
        None => None,
    };
    let unit_fock_ref = unit_fock.as_ref().unwrap_or(&fock);

    let mut entries = Vec::with_capacity(Identity::ALL.len());
    for (stream, identity) in Identity::ALL.into_iter().enumerate() {
        let arity = identity.arity();
        let matrix_tuples = all_tuples(r, arity);
        let fock_tuples = if identity == Identity::ChargeAlgebra {
            all_tuples(r, arity)
        } else {
            sample_tuples(r, arity, samples, seed, stream as u64)
        };
        let gate_at_unit = matches!(
            identity,
            Identity::AssociatorSymmetry | Identity::YamagutianAntisymmetry
        );
        let (pt, pt_fock) = if gate_at_unit {
            (unit_ref, unit_fock_ref)
        } else {
            (&here, &fock)
        };

        let (matrix_res, fock_res, n) = match identity {
            Identity::LieCartan => (
                max_over(identity, Reading::Primary, &pt.matrix, &pt.c, &pt.d, &matrix_tuples),
                None,
                matrix_tuples.len(),
            ),
            Identity::ChargeAlgebra => (
                0.0,
                Some(max_over(identity, Reading::Primary, pt_fock, &pt.c, &pt.d, &fock_tuples)),
                fock_tuples.len(),
            ),
            _ => (
                max_over(identity, Reading::Primary, &pt.matrix, &pt.c, &pt.d, &matrix_tuples),
                Some(max_over(identity, Reading::Primary, pt_fock, &pt.c, &pt.d, &fock_tuples)),
                matrix_tuples.len() + fock_tuples.len(),
            ),
        };
        let value = matrix_res.max(fock_res.unwrap_or(0.0));
        let required = identity.required(algebra);
        let default_tol = match (algebra, required) {
            (Algebra::Quaternion, _) => ASSOCIATIVE_TOL,
            (_, true) => REQUIRED_TOL,
            (_, false) => EXPLORATORY_TOL,
        };
        let tol = tolerance(identity.name(), default_tol);
        let mut entry = ReportEntry::new(identity.name(), identity.tag(), required, value, tol, n);
        if identity != Identity::ChargeAlgebra {
            entry.matrix_residual = Some(matrix_res);
        }
        entry.fock_residual = fock_res;

        let mut variant = |label: &str, v: f64| {
            entry.variants.push(VariantResidual {
                label: label.to_string(),
                max_residual: v,
            })
        };
        if gate_at_unit {
            variant(
                "at_point",
                max_over(identity, Reading::Primary, &here.matrix, &here.c, &here.d, &matrix_tuples),
            );
        }
        if matches!(identity, Identity::SplitTT | Identity::ReductivityT) {
            variant(
                if identity == Identity::SplitTT { "printed_lhs" } else { "printed_rhs" },
                max_over(identity, Reading::Printed, &here.matrix, &here.c, &here.d, &matrix_tuples),
            );
        }
        if matches!(
            identity,
            Identity::ReductivityS | Identity::ReductivityT | Identity::YamagutianClosure
        ) {
            variant(
                "yamaguti_printed",
                max_over(identity, Reading::Primary, &here.matrix, &here.c, &here.d_printed, &matrix_tuples),
            );
        }
        entries.push(entry);
    }

    Ok(IdentityReport {
        algebra,
        point: g.coords().to_vec(),
        entries,
        conventions: conventions(),
    })
}
