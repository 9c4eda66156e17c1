//! Octonion arithmetic and the unit-octonion Moufang loop.
//!
//! The basis is fixed by Cayley–Dickson doubling of the quaternions,
//! `(a, b)(c, d) = (ac − d̄b, da + bc̄)`, with `e_1, e_2, e_3 = i, j, k`,
//! `e_4 = (0, 1)` and `e_5 = e_1 e_4`, `e_6 = e_2 e_4`, `e_7 = e_3 e_4`.
//! The resulting table is stored exactly as signed index pairs.
//!
//! Near the identity the unit sphere is charted by its imaginary part:
//! `x ↦ (√(1 − ‖x‖²), x)`. A [`ChartPoint`] may have fewer than seven
//! coordinates; missing components are zero, which is how the quaternionic
//! subloop is addressed.

use std::fmt;
use std::ops::{Add, AddAssign, Index, Mul, Neg, Sub};

use crate::error::{Error, Result};

/// Number of imaginary units.
pub const IMAGINARY_DIM: usize = 7;

/// `STANDARD[a][b] = (sign, c)` means `e_a e_b = sign · e_c`.
const STANDARD: [[(i8, u8); 8]; 8] = [
    [(1, 0), (1, 1), (1, 2), (1, 3), (1, 4), (1, 5), (1, 6), (1, 7)],
    [(1, 1), (-1, 0), (1, 3), (-1, 2), (1, 5), (-1, 4), (-1, 7), (1, 6)],
    [(1, 2), (-1, 3), (-1, 0), (1, 1), (1, 6), (1, 7), (-1, 4), (-1, 5)],
    [(1, 3), (1, 2), (-1, 1), (-1, 0), (1, 7), (-1, 6), (1, 5), (-1, 4)],
    [(1, 4), (-1, 5), (-1, 6), (-1, 7), (-1, 0), (1, 1), (1, 2), (1, 3)],
    [(1, 5), (1, 4), (-1, 7), (1, 6), (-1, 1), (-1, 0), (-1, 3), (1, 2)],
    [(1, 6), (1, 7), (1, 4), (-1, 5), (-1, 2), (1, 3), (-1, 0), (-1, 1)],
    [(1, 7), (-1, 6), (1, 5), (1, 4), (-1, 3), (-1, 2), (1, 1), (-1, 0)],
];

/// Basis multiplication table as signed index pairs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MulTable {
    entries: [[(i8, u8); 8]; 8],
}

impl MulTable {
    pub const STANDARD: MulTable = MulTable { entries: STANDARD };

    /// The standard table with the sign of `e_1 e_2` flipped (but not `e_2 e_1`).
    ///
    /// Used by mutation probes: the result is still bilinear and unital but
    /// no longer alternative, so Moufang checks must fail on it.
    pub fn perturbed() -> Self {
        let mut entries = STANDARD;
        entries[1][2].0 = -entries[1][2].0;
        MulTable { entries }
    }

    pub fn entry(&self, a: usize, b: usize) -> (i8, usize) {
        let (sign, c) = self.entries[a][b];
        (sign, c as usize)
    }

    pub fn mul(&self, a: &Octonion, b: &Octonion) -> Octonion {
        let mut out = [0.0; 8];
        for (i, &ai) in a.coeff.iter().enumerate() {
            if ai == 0.0 {
                continue;
            }
            for (j, &bj) in b.coeff.iter().enumerate() {
                let (sign, k) = self.entries[i][j];
                out[k as usize] += f64::from(sign) * ai * bj;
            }
        }
        Octonion { coeff: out }
    }

    pub fn associator(&self, a: &Octonion, b: &Octonion, c: &Octonion) -> Octonion {
        self.mul(&self.mul(a, b), c) - self.mul(a, &self.mul(b, c))
    }

    /// `‖(ag)(ha) − (a(gh))a‖`.
    pub fn moufang_residual(&self, a: &Octonion, g: &Octonion, h: &Octonion) -> f64 {
        let lhs = self.mul(&self.mul(a, g), &self.mul(h, a));
        let rhs = self.mul(&self.mul(a, &self.mul(g, h)), a);
        (lhs - rhs).norm()
    }
}

impl Default for MulTable {
    fn default() -> Self {
        Self::STANDARD
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Octonion {
    /// `coeff[0]` is the real part, `coeff[i]` the component along `e_i`.
    pub coeff: [f64; 8],
}

impl Octonion {
    pub const ONE: Octonion = Octonion {
        coeff: [1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0],
    };
    pub const ZERO: Octonion = Octonion { coeff: [0.0; 8] };

    pub fn new(coeff: [f64; 8]) -> Self {
        Octonion { coeff }
    }

    /// Basis unit `e_i`, with `e_0 = 1`.
    pub fn unit(i: usize) -> Self {
        let mut coeff = [0.0; 8];
        coeff[i] = 1.0;
        Octonion { coeff }
    }

    pub fn real(&self) -> f64 {
        self.coeff[0]
    }

    pub fn imag(&self) -> [f64; 7] {
        let mut out = [0.0; 7];
        out.copy_from_slice(&self.coeff[1..]);
        out
    }

    pub fn conj(&self) -> Self {
        let mut coeff = self.coeff.map(|c| -c);
        coeff[0] = self.coeff[0];
        Octonion { coeff }
    }

    pub fn norm_sqr(&self) -> f64 {
        self.coeff.iter().map(|c| c * c).sum()
    }

    pub fn norm(&self) -> f64 {
        self.norm_sqr().sqrt()
    }

    pub fn scale(&self, s: f64) -> Self {
        Octonion {
            coeff: self.coeff.map(|c| c * s),
        }
    }

    /// Two-sided inverse `q̄ / ‖q‖²`.
    pub fn inverse(&self) -> Result<Self> {
        let n2 = self.norm_sqr();
        if n2 == 0.0 || !n2.is_finite() {
            return Err(Error::Domain("octonion with zero norm has no inverse".into()));
        }
        Ok(self.conj().scale(1.0 / n2))
    }

    pub fn normalized(&self) -> Result<Self> {
        let n = self.norm();
        if n == 0.0 {
            return Err(Error::Domain("cannot normalize the zero octonion".into()));
        }
        Ok(self.scale(1.0 / n))
    }

    /// True if every component at index ≥ 4 vanishes.
    pub fn is_quaternionic(&self) -> bool {
        self.coeff[4..].iter().all(|&c| c == 0.0)
    }
}

impl Index<usize> for Octonion {
    type Output = f64;
    fn index(&self, i: usize) -> &f64 {
        &self.coeff[i]
    }
}

impl Add for Octonion {
    type Output = Octonion;
    fn add(self, rhs: Octonion) -> Octonion {
        let mut coeff = self.coeff;
        for (c, r) in coeff.iter_mut().zip(rhs.coeff) {
            *c += r;
        }
        Octonion { coeff }
    }
}

impl AddAssign for Octonion {
    fn add_assign(&mut self, rhs: Octonion) {
        *self = *self + rhs;
    }
}

impl Sub for Octonion {
    type Output = Octonion;
    fn sub(self, rhs: Octonion) -> Octonion {
        self + (-rhs)
    }
}

impl Neg for Octonion {
    type Output = Octonion;
    fn neg(self) -> Octonion {
        Octonion {
            coeff: self.coeff.map(|c| -c),
        }
    }
}

impl Mul for Octonion {
    type Output = Octonion;
    fn mul(self, rhs: Octonion) -> Octonion {
        MulTable::STANDARD.mul(&self, &rhs)
    }
}

impl Mul<f64> for Octonion {
    type Output = Octonion;
    fn mul(self, rhs: f64) -> Octonion {
        self.scale(rhs)
    }
}

impl fmt::Display for Octonion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.coeff[0])?;
        for (i, c) in self.coeff.iter().enumerate().skip(1) {
            write!(f, " {:+}e{}", c, i)?;
        }
        Ok(())
    }
}

pub fn oct_mul(a: &Octonion, b: &Octonion) -> Octonion {
    MulTable::STANDARD.mul(a, b)
}

pub fn oct_inverse(q: &Octonion) -> Result<Octonion> {
    q.inverse()
}

/// `(ab)c − a(bc)`.
pub fn associator(a: &Octonion, b: &Octonion, c: &Octonion) -> Octonion {
    MulTable::STANDARD.associator(a, b, c)
}

pub fn moufang_residual(a: &Octonion, g: &Octonion, h: &Octonion) -> f64 {
    MulTable::STANDARD.moufang_residual(a, g, h)
}

/// Imaginary-part coordinates of a unit octonion on the upper hemisphere.
#[derive(Debug, Clone, PartialEq)]
pub struct ChartPoint {
    coords: Vec<f64>,
}

impl ChartPoint {
    pub fn new(coords: Vec<f64>) -> Result<Self> {
        if coords.len() > IMAGINARY_DIM {
            return Err(Error::Dimension {
                expected: IMAGINARY_DIM,
                found: coords.len(),
            });
        }
        if coords.iter().any(|c| !c.is_finite()) {
            return Err(Error::Range("chart coordinates must be finite".into()));
        }
        let r2: f64 = coords.iter().map(|c| c * c).sum();
        if r2 >= 1.0 {
            return Err(Error::Range(format!(
                "chart point has ‖x‖² = {r2} outside the open unit ball"
            )));
        }
        Ok(ChartPoint { coords })
    }

    /// The identity element `e` in an `r`-dimensional chart.
    pub fn identity(dim: usize) -> Self {
        ChartPoint {
            coords: vec![0.0; dim],
        }
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[f64] {
        &self.coords
    }

    pub fn norm(&self) -> f64 {
        self.coords.iter().map(|c| c * c).sum::<f64>().sqrt()
    }

    pub fn is_identity(&self) -> bool {
        self.coords.iter().all(|&c| c == 0.0)
    }

    /// `(√(1 − ‖x‖²), x)`, padded with zeros up to seven imaginary parts.
    pub fn lift(&self) -> Octonion {
        let mut coeff = [0.0; 8];
        let r2: f64 = self.coords.iter().map(|c| c * c).sum();
        coeff[0] = (1.0 - r2).sqrt();
        coeff[1..=self.coords.len()].copy_from_slice(&self.coords);
        Octonion { coeff }
    }

    /// Chart coordinates of `q`, keeping the first `dim` imaginary parts.
    ///
    /// The discarded imaginary parts are not checked; callers working in a
    /// subalgebra guarantee they vanish.
    pub fn project(q: &Octonion, dim: usize) -> Result<Self> {
        if dim > IMAGINARY_DIM {
            return Err(Error::Dimension {
                expected: IMAGINARY_DIM,
                found: dim,
            });
        }
        if !(q.real() > 0.0) {
            return Err(Error::Range(format!(
                "real part {} is not positive; point lies outside the chart",
                q.real()
            )));
        }
        Ok(ChartPoint {
            coords: q.coeff[1..=dim].to_vec(),
        })
    }
}

pub fn chart_lift(x: &ChartPoint) -> Octonion {
    x.lift()
}

pub fn chart_project(q: &Octonion, dim: usize) -> Result<ChartPoint> {
    ChartPoint::project(q, dim)
}

/// Chart coordinates of `((gh)g⁻¹)h⁻¹`.
pub fn loop_commutator(g: &ChartPoint, h: &ChartPoint) -> Result<ChartPoint> {
    let dim = g.dim().max(h.dim());
    let (gq, hq) = (g.lift(), h.lift());
    let value = loop_commutator_octonion(&gq, &hq)?;
    ChartPoint::project(&value, dim)
}

pub fn loop_commutator_octonion(g: &Octonion, h: &Octonion) -> Result<Octonion> {
    let (gi, hi) = (g.inverse()?, h.inverse()?);
    Ok(((*g * *h) * gi) * hi)
}

/// The five bracketings of the product `abcd`, in the order
/// `((ab)c)d, (a(bc))d, (ab)(cd), a((bc)d), a(b(cd))`.
pub fn product_bracketings(a: &Octonion, b: &Octonion, c: &Octonion, d: &Octonion) -> [Octonion; 5] {
    let (a, b, c, d) = (*a, *b, *c, *d);
    [
        ((a * b) * c) * d,
        (a * (b * c)) * d,
        (a * b) * (c * d),
        a * ((b * c) * d),
        a * (b * (c * d)),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(i: usize) -> Octonion {
        Octonion::unit(i)
    }

    #[test]
    fn unit_products() {
        assert_eq!(e(1) * e(2), e(3));
        assert_eq!(e(1) * e(1), -Octonion::ONE);
        assert_eq!(e(1) * e(4), e(5));
        assert_eq!(e(2) * e(4), e(6));
        assert_eq!(e(3) * e(4), e(7));
        for i in 1..8 {
            assert_eq!(e(i) * e(i), -Octonion::ONE);
        }
    }

    #[test]
    fn one_is_two_sided_unit() {
        let q = Octonion::new([0.3, -1.0, 2.0, 0.5, 0.0, 1.5, -0.25, 4.0]);
        assert_eq!(q * Octonion::ONE, q);
        assert_eq!(Octonion::ONE * q, q);
    }

    #[test]
    fn inverse_of_units() {
        assert_eq!(Octonion::ONE.inverse().unwrap(), Octonion::ONE);
        assert_eq!(e(5).inverse().unwrap(), -e(5));
        assert!(matches!(Octonion::ZERO.inverse(), Err(Error::Domain(_))));
    }

    #[test]
    fn associator_witnesses() {
        assert_eq!(associator(&e(1), &e(2), &e(3)), Octonion::ZERO);
        assert_eq!(associator(&e(1), &e(1), &e(4)), Octonion::ZERO);
        let a = associator(&e(1), &e(2), &e(4));
        assert!((a.norm() - 2.0).abs() < 1e-15);
    }

    #[test]
    fn moufang_on_basis() {
        assert_eq!(moufang_residual(&Octonion::ONE, &e(3), &e(6)), 0.0);
        assert_eq!(moufang_residual(&e(1), &e(2), &e(4)), 0.0);
    }

    #[test]
    fn perturbed_table_breaks_alternativity() {
        let t = MulTable::perturbed();
        let a = e(1) + e(2);
        assert!(t.associator(&a, &a, &e(3)).norm() > 0.5);
    }

    #[test]
    fn chart_identity_and_range() {
        assert_eq!(ChartPoint::identity(7).lift(), Octonion::ONE);
        assert!(ChartPoint::new(vec![1.0, 0.0]).is_err());
        assert!(ChartPoint::new(vec![0.1; 8]).is_err());
        assert!(ChartPoint::project(&(-Octonion::ONE), 7).is_err());
    }

    #[test]
    fn commutator_with_identity_and_self() {
        let x = ChartPoint::new(vec![0.1, -0.2, 0.05, 0.3, 0.0, 0.1, -0.1]).unwrap();
        let zero = ChartPoint::identity(7);
        let c = loop_commutator(&x, &zero).unwrap();
        assert!(c.norm() < 1e-15);
        let c = loop_commutator(&x, &x).unwrap();
        assert!(c.norm() < 1e-15);
    }

    #[test]
    fn commutator_first_order_direction() {
        // ghg⁻¹h⁻¹ ≈ 1 + [x, y] for small imaginary x, y.
        let t = 1e-3;
        let mut gx = vec![0.0; 7];
        gx[0] = t;
        let mut hx = vec![0.0; 7];
        hx[1] = t;
        let c = loop_commutator(
            &ChartPoint::new(gx).unwrap(),
            &ChartPoint::new(hx).unwrap(),
        )
        .unwrap();
        let coords = c.coords();
        assert!((coords[2] / (t * t) - 2.0).abs() < 1e-5);
        for (i, v) in coords.iter().enumerate() {
            if i != 2 {
                // third order in t
                assert!(v.abs() < 3.0 * t * t * t);
            }
        }
    }

    #[test]
    fn commutator_leaving_chart_is_range_error() {
        // g = e_1-ish, h = e_2-ish: ghg⁻¹h⁻¹ ≈ −1.
        let a = 0.999_999;
        let g = ChartPoint::new(vec![a, 0.0]).unwrap();
        let h = ChartPoint::new(vec![0.0, a]).unwrap();
        assert!(matches!(loop_commutator(&g, &h), Err(Error::Range(_))));
    }
}
