//! The regular birepresentation of the unit-octonion loop and the
//! generalized Lie–Cartan machinery built on it.
//!
//! For a loop point `g`, `S_g` is the matrix of `a ↦ g·a` and `T_g` that of
//! `a ↦ a·g` in the basis `e_0, …, e_7`. Their derivatives at the unit are
//! the generators `S_j, T_j`, and the derivative generators are
//! `S'_j(g) = T_g S_j T_g⁻¹`, `T'_j(g) = S_g⁻¹ T_j S_g`.
//!
//! Structure functions `c_{jk}^n(g)` are obtained from the auxiliary
//! functions `v_j^n(g) = ∂(gh)^n/∂h^j |_{h=e}` by solving
//!
//! ```text
//! v_j^n ∂_n v_k^i − v_k^n ∂_n v_j^i = c_{jk}^n(g) v_n^i
//! ```
//!
//! for each pair `(j, k)`, with `∂_n v` taken by Richardson-extrapolated
//! central differences in chart coordinates.
//!
//! Every routine is parameterized by [`Algebra`], so the same pipeline runs
//! on the quaternion subalgebra (4×4 matrices, three generators), where the
//! birepresentation is associative and the classical relations apply.

use nalgebra::DMatrix;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::malcev::StructureTensor;
use crate::numdiff::{central_derivative, mixed_second_derivative, DiffConfig};
use crate::octonion::{loop_commutator, ChartPoint, MulTable, Octonion};

pub type SquareMatrix = DMatrix<f64>;

/// Largest condition number of `v(g)` accepted by the Maurer–Cartan solve.
pub const MAX_CONDITION: f64 = 1e6;

/// Steps of the mixed second difference for tangent structure constants.
pub const TANGENT_STEPS: [f64; 2] = [1e-2, 1e-3];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Algebra {
    Octonion,
    /// The associative subalgebra spanned by `e_0, …, e_3`.
    Quaternion,
}

impl Algebra {
    /// Dimension `n` of the carrier space (matrix size).
    pub fn carrier_dim(self) -> usize {
        match self {
            Algebra::Octonion => 8,
            Algebra::Quaternion => 4,
        }
    }

    /// Dimension `r` of the loop (number of generators).
    pub fn tangent_dim(self) -> usize {
        self.carrier_dim() - 1
    }

    pub fn name(self) -> &'static str {
        match self {
            Algebra::Octonion => "octonion",
            Algebra::Quaternion => "quaternion",
        }
    }

    fn check_point(self, g: &ChartPoint) -> Result<()> {
        if g.dim() != self.tangent_dim() {
            return Err(Error::Dimension {
                expected: self.tangent_dim(),
                found: g.dim(),
            });
        }
        Ok(())
    }
}

/// Matrix of `a ↦ q·a` on the first `n` basis vectors.
pub fn left_matrix(q: &Octonion, n: usize) -> SquareMatrix {
    translation_matrix(n, |a| *q * a)
}

/// Matrix of `a ↦ a·q` on the first `n` basis vectors.
pub fn right_matrix(q: &Octonion, n: usize) -> SquareMatrix {
    translation_matrix(n, |a| a * *q)
}

fn translation_matrix(n: usize, f: impl Fn(Octonion) -> Octonion) -> SquareMatrix {
    let mut m = SquareMatrix::zeros(n, n);
    for col in 0..n {
        let image = f(Octonion::unit(col));
        for row in 0..n {
            m[(row, col)] = image[row];
        }
    }
    m
}

/// `(S_g, T_g)`.
pub fn left_right_matrices(algebra: Algebra, g: &ChartPoint) -> Result<(SquareMatrix, SquareMatrix)> {
    algebra.check_point(g)?;
    let q = g.lift();
    let n = algebra.carrier_dim();
    Ok((left_matrix(&q, n), right_matrix(&q, n)))
}

/// Largest residual of `T_g S_g S_h = S_{gh} T_g` and `S_g T_g T_h = T_{hg} S_g`
/// for unit octonions `g, h`, using products from `table`.
pub fn birep_axiom_residual(table: &MulTable, g: &Octonion, h: &Octonion) -> f64 {
    let left = |q: &Octonion| translation_matrix(8, |a| table.mul(q, &a));
    let right = |q: &Octonion| translation_matrix(8, |a| table.mul(&a, q));
    let (sg, tg, sh, th) = (left(g), right(g), left(h), right(h));
    let first = &tg * &sg * &sh - left(&table.mul(g, h)) * &tg;
    let second = &sg * &tg * &th - right(&table.mul(h, g)) * &sg;
    first.norm().max(second.norm())
}

#[derive(Debug, Clone, PartialEq)]
pub struct Generators {
    pub s: Vec<SquareMatrix>,
    pub t: Vec<SquareMatrix>,
}

/// Closed form: `S_j` and `T_j` are left and right multiplication by `e_j`,
/// since the chart's tangent at the unit along `x^j` is `e_j`.
pub fn generators(algebra: Algebra) -> Generators {
    let n = algebra.carrier_dim();
    let units = (1..n).map(Octonion::unit);
    Generators {
        s: units.clone().map(|u| left_matrix(&u, n)).collect(),
        t: units.map(|u| right_matrix(&u, n)).collect(),
    }
}

/// Generators by central differences of [`left_right_matrices`] at the unit.
pub fn generators_fd(algebra: Algebra, cfg: &DiffConfig) -> Result<Generators> {
    let r = algebra.tangent_dim();
    let n = algebra.carrier_dim();
    let origin = vec![0.0; r];
    let mut s = Vec::with_capacity(r);
    let mut t = Vec::with_capacity(r);
    for j in 0..r {
        let flat = central_derivative(
            |x| {
                let (sg, tg) = left_right_matrices(algebra, &ChartPoint::new(x.to_vec())?)?;
                Ok(sg.iter().chain(tg.iter()).copied().collect())
            },
            &origin,
            j,
            cfg,
        )?;
        s.push(SquareMatrix::from_column_slice(n, n, &flat[..n * n]));
        t.push(SquareMatrix::from_column_slice(n, n, &flat[n * n..]));
    }
    Ok(Generators { s, t })
}

#[derive(Debug, Clone, PartialEq)]
pub struct GeneratorFrame {
    pub g: ChartPoint,
    pub s_prime: Vec<SquareMatrix>,
    pub t_prime: Vec<SquareMatrix>,
}

impl GeneratorFrame {
    pub fn dim(&self) -> usize {
        self.s_prime.len()
    }
}

fn invert(m: &SquareMatrix) -> Result<SquareMatrix> {
    m.clone()
        .try_inverse()
        .ok_or_else(|| Error::Domain("translation matrix is singular".into()))
}

pub fn derivative_generators(algebra: Algebra, g: &ChartPoint) -> Result<GeneratorFrame> {
    let (sg, tg) = left_right_matrices(algebra, g)?;
    let (sg_inv, tg_inv) = (invert(&sg)?, invert(&tg)?);
    let gens = generators(algebra);
    Ok(GeneratorFrame {
        g: g.clone(),
        s_prime: gens.s.iter().map(|sj| &tg * sj * &tg_inv).collect(),
        t_prime: gens.t.iter().map(|tj| &sg_inv * tj * &sg).collect(),
    })
}

#[derive(Debug, Clone, PartialEq)]
pub struct AuxiliaryMatrix {
    pub g: ChartPoint,
    /// `v[(j, n)] = v_j^n(g)`.
    pub v: SquareMatrix,
    /// Ratio of extreme singular values.
    pub cond: f64,
}

fn aux_closed_form(algebra: Algebra, x: &[f64]) -> Result<SquareMatrix> {
    let r = algebra.tangent_dim();
    let q = ChartPoint::new(x.to_vec())?.lift();
    let mut v = SquareMatrix::zeros(r, r);
    for j in 0..r {
        let image = q * Octonion::unit(j + 1);
        for n in 0..r {
            v[(j, n)] = image[n + 1];
        }
    }
    Ok(v)
}

pub fn condition_number(m: &SquareMatrix) -> f64 {
    let sv = m.clone().singular_values();
    let max = sv.iter().copied().fold(0.0, f64::max);
    let min = sv.iter().copied().fold(f64::INFINITY, f64::min);
    if min == 0.0 {
        f64::INFINITY
    } else {
        max / min
    }
}

/// Closed form: `v_j^n(g)` is the `n`-th imaginary component of `g·e_j`.
pub fn auxiliary_matrix(algebra: Algebra, g: &ChartPoint) -> Result<AuxiliaryMatrix> {
    algebra.check_point(g)?;
    let v = aux_closed_form(algebra, g.coords())?;
    let cond = condition_number(&v);
    Ok(AuxiliaryMatrix {
        g: g.clone(),
        v,
        cond,
    })
}

/// `v(g)` by central differences of `h ↦ gh` in the chart at `h = e`.
pub fn auxiliary_matrix_fd(algebra: Algebra, g: &ChartPoint, cfg: &DiffConfig) -> Result<SquareMatrix> {
    algebra.check_point(g)?;
    let r = algebra.tangent_dim();
    let q = g.lift();
    let mut v = SquareMatrix::zeros(r, r);
    for j in 0..r {
        let col = central_derivative(
            |y| {
                let h = ChartPoint::new(y.to_vec())?.lift();
                Ok((q * h).imag()[..r].to_vec())
            },
            &vec![0.0; r],
            j,
            cfg,
        )?;
        for n in 0..r {
            v[(j, n)] = col[n];
        }
    }
    Ok(v)
}

#[derive(Debug, Clone, PartialEq)]
pub struct StructureFunctions {
    pub tensor: StructureTensor,
    /// Largest `|c_jk^n + c_kj^n|` before antisymmetrization.
    pub raw_asymmetry: f64,
    pub cond: f64,
}

pub fn structure_functions(algebra: Algebra, g: &ChartPoint, cfg: &DiffConfig) -> Result<StructureFunctions> {
    let aux = auxiliary_matrix(algebra, g)?;
    // NaN counts as ill-conditioned
    if !(aux.cond < MAX_CONDITION) {
        return Err(Error::Conditioning { cond: aux.cond });
    }
    let r = algebra.tangent_dim();
    let x = g.coords();

    // dv[n][(k, i)] = ∂v_k^i/∂g^n
    let dv: Vec<SquareMatrix> = (0..r)
        .map(|n| {
            let flat = central_derivative(
                |y| Ok(aux_closed_form(algebra, y)?.as_slice().to_vec()),
                x,
                n,
                cfg,
            )?;
            Ok(SquareMatrix::from_column_slice(r, r, &flat))
        })
        .collect::<Result<_>>()?;

    let lu = aux.v.transpose().full_piv_lu();
    let mut raw = vec![0.0; r * r * r];
    for j in 0..r {
        for k in 0..r {
            let lhs = nalgebra::DVector::from_fn(r, |i, _| {
                (0..r)
                    .map(|n| aux.v[(j, n)] * dv[n][(k, i)] - aux.v[(k, n)] * dv[n][(j, i)])
                    .sum::<f64>()
            });
            let sol = lu
                .solve(&lhs)
                .ok_or(Error::Conditioning { cond: f64::INFINITY })?;
            raw[(j * r + k) * r..(j * r + k + 1) * r].copy_from_slice(sol.as_slice());
        }
    }
    let (tensor, raw_asymmetry) = StructureTensor::antisymmetrized(r, |j, k, i| raw[(j * r + k) * r + i]);
    Ok(StructureFunctions {
        tensor,
        raw_asymmetry,
        cond: aux.cond,
    })
}

#[derive(Debug, Clone, PartialEq)]
pub struct TangentConstants {
    pub tensor: StructureTensor,
    pub raw_asymmetry: f64,
}

/// Mixed second derivative of `(g, h) ↦ ghg⁻¹h⁻¹` at the unit, steps
/// [`TANGENT_STEPS`] combined by Richardson extrapolation.
pub fn tangent_structure_constants(algebra: Algebra) -> Result<TangentConstants> {
    let r = algebra.tangent_dim();
    let mut raw = vec![0.0; r * r * r];
    for j in 0..r {
        for k in 0..r {
            let d = mixed_second_derivative(
                |a, b| {
                    let mut gx = vec![0.0; r];
                    let mut hx = vec![0.0; r];
                    gx[j] = a;
                    hx[k] = b;
                    let comm = loop_commutator(&ChartPoint::new(gx)?, &ChartPoint::new(hx)?)?;
                    Ok(comm.coords().to_vec())
                },
                &TANGENT_STEPS,
            )?;
            raw[(j * r + k) * r..(j * r + k + 1) * r].copy_from_slice(&d);
        }
    }
    let (tensor, raw_asymmetry) = StructureTensor::antisymmetrized(r, |j, k, i| raw[(j * r + k) * r + i]);
    Ok(TangentConstants {
        tensor,
        raw_asymmetry,
    })
}

/// Commutator constants of the basis units, `e_j e_k − e_k e_j = Σ_i C_{jk}^i e_i`,
/// read directly off the multiplication table.
pub fn basis_commutator_constants(algebra: Algebra) -> StructureTensor {
    let r = algebra.tangent_dim();
    let table = MulTable::STANDARD;
    let f = |j: usize, k: usize, i: usize| {
        let (sign, idx) = table.entry(j + 1, k + 1);
        if idx == i + 1 {
            f64::from(sign)
        } else {
            0.0
        }
    };
    StructureTensor::from_fn(r, |j, k, i| f(j, k, i) - f(k, j, i))
        .expect("basis commutators are antisymmetric")
}

pub fn commutator(a: &SquareMatrix, b: &SquareMatrix) -> SquareMatrix {
    a * b - b * a
}

fn contract(c: &StructureTensor, j: usize, k: usize, family: &[SquareMatrix]) -> SquareMatrix {
    let n = family[0].nrows();
    family
        .iter()
        .enumerate()
        .fold(SquareMatrix::zeros(n, n), |acc, (p, m)| acc + m * c.get(j, k, p))
}

/// Frobenius residuals of the two generalized Lie–Cartan relations
/// `[S'_j, S'_k] = c_{jk}^n S'_n − 2[S'_j, T'_k]` and
/// `[T'_j, T'_k] = −c_{jk}^n T'_n − 2[T'_j, S'_k]`, maximized over `(j, k)`.
pub fn lie_cartan_residual_with(frame: &GeneratorFrame, c: &StructureTensor) -> (f64, f64) {
    let (s, t) = (&frame.s_prime, &frame.t_prime);
    let r = frame.dim();
    let mut res = (0.0f64, 0.0f64);
    for j in 0..r {
        for k in 0..r {
            let first = commutator(&s[j], &s[k]) - contract(c, j, k, s) + commutator(&s[j], &t[k]) * 2.0;
            let second = commutator(&t[j], &t[k]) + contract(c, j, k, t) + commutator(&t[j], &s[k]) * 2.0;
            res.0 = res.0.max(first.norm());
            res.1 = res.1.max(second.norm());
        }
    }
    res
}

pub fn lie_cartan_residual(algebra: Algebra, g: &ChartPoint, cfg: &DiffConfig) -> Result<(f64, f64)> {
    let c = structure_functions(algebra, g, cfg)?;
    let frame = derivative_generators(algebra, g)?;
    Ok(lie_cartan_residual_with(&frame, &c.tensor))
}

/// Largest Frobenius residual of the associative relations
/// `[S_j, S_k] − c S_n`, `[T_j, T_k] + c T_n` and `[S_j, T_k]`.
pub fn classical_lie_cartan_residual(gens: &Generators, c: &StructureTensor) -> f64 {
    let r = gens.s.len();
    let mut worst = 0.0f64;
    for j in 0..r {
        for k in 0..r {
            let a = commutator(&gens.s[j], &gens.s[k]) - contract(c, j, k, &gens.s);
            let b = commutator(&gens.t[j], &gens.t[k]) + contract(c, j, k, &gens.t);
            let m = commutator(&gens.s[j], &gens.t[k]);
            worst = worst.max(a.norm()).max(b.norm()).max(m.norm());
        }
    }
    worst
}

/// `max_{j,k} ‖[S_j, T_k] + [S_k, T_j]‖`, the linearized flexible law.
pub fn flexibility_residual(gens: &Generators) -> f64 {
    let r = gens.s.len();
    let mut worst = 0.0f64;
    for j in 0..r {
        for k in 0..r {
            let m = commutator(&gens.s[j], &gens.t[k]) + commutator(&gens.s[k], &gens.t[j]);
            worst = worst.max(m.norm());
        }
    }
    worst
}
