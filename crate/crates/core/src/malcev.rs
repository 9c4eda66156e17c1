//! Structure tensors of anticommutative algebras: brackets, the Jacobiator,
//! the Mal'tsev identity and Yamaguti functions.
//!
//! Indices are zero-based in code; `c.get(j, k, i)` is the coefficient of
//! basis vector `i` in `[e_j, e_k]`.

use std::ops::{Add, Sub};

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
pub struct TangentVector(pub Vec<f64>);

impl TangentVector {
    pub fn zeros(r: usize) -> Self {
        TangentVector(vec![0.0; r])
    }

    pub fn basis(r: usize, i: usize) -> Self {
        let mut v = vec![0.0; r];
        v[i] = 1.0;
        TangentVector(v)
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn norm(&self) -> f64 {
        self.0.iter().map(|x| x * x).sum::<f64>().sqrt()
    }

    pub fn scale(&self, s: f64) -> Self {
        TangentVector(self.0.iter().map(|x| x * s).collect())
    }
}

impl Add for &TangentVector {
    type Output = TangentVector;
    fn add(self, rhs: &TangentVector) -> TangentVector {
        TangentVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &TangentVector {
    type Output = TangentVector;
    fn sub(self, rhs: &TangentVector) -> TangentVector {
        TangentVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

/// Rank-3 array `c_{jk}^i`, antisymmetric in `(j, k)` as stored.
#[derive(Debug, Clone, PartialEq)]
pub struct StructureTensor {
    r: usize,
    c: Vec<f64>,
}

impl StructureTensor {
    pub fn zeros(r: usize) -> Self {
        StructureTensor {
            r,
            c: vec![0.0; r * r * r],
        }
    }

    /// Antisymmetrizes `raw(j, k, i)` by averaging with `−raw(k, j, i)`;
    /// also returns the largest raw asymmetry `|raw_jk^i + raw_kj^i|`.
    pub fn antisymmetrized(r: usize, raw: impl Fn(usize, usize, usize) -> f64) -> (Self, f64) {
        let mut t = StructureTensor::zeros(r);
        let mut asym: f64 = 0.0;
        for j in 0..r {
            for k in j..r {
                for i in 0..r {
                    let (a, b) = (raw(j, k, i), raw(k, j, i));
                    asym = asym.max((a + b).abs());
                    t.set_pair(j, k, i, 0.5 * (a - b));
                }
            }
        }
        (t, asym)
    }

    /// The tensor of an algebra with `[e_j, e_k] = Σ_i f(j, k, i) e_i`,
    /// checked for exact antisymmetry.
    pub fn from_fn(r: usize, f: impl Fn(usize, usize, usize) -> f64) -> Result<Self> {
        let (t, asym) = Self::antisymmetrized(r, &f);
        if asym != 0.0 {
            return Err(Error::Domain(format!(
                "structure constants are not antisymmetric (max |c_jk + c_kj| = {asym:e})"
            )));
        }
        Ok(t)
    }

    /// `su(2)` in the normalization `c_{jk}^i = 2ε_{jki}`, matching the
    /// quaternion commutators `[e_j, e_k] = 2ε_{jki} e_i`.
    pub fn su2() -> Self {
        Self::from_fn(3, |j, k, i| 2.0 * levi_civita(j, k, i)).expect("ε is antisymmetric")
    }

    pub fn dim(&self) -> usize {
        self.r
    }

    #[inline]
    pub fn get(&self, j: usize, k: usize, i: usize) -> f64 {
        self.c[(j * self.r + k) * self.r + i]
    }

    /// Sets `c_{jk}^i = value` and `c_{kj}^i = −value`.
    pub fn set_pair(&mut self, j: usize, k: usize, i: usize, value: f64) {
        let r = self.r;
        if j == k {
            self.c[(j * r + k) * r + i] = 0.0;
        } else {
            self.c[(j * r + k) * r + i] = value;
            self.c[(k * r + j) * r + i] = -value;
        }
    }

    pub fn max_abs_diff(&self, other: &StructureTensor) -> f64 {
        self.c
            .iter()
            .zip(&other.c)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }

    fn check(&self, v: &TangentVector) -> Result<()> {
        if v.dim() != self.r {
            return Err(Error::Dimension {
                expected: self.r,
                found: v.dim(),
            });
        }
        Ok(())
    }

    /// Restriction to the first `dim` basis vectors. The caller asserts that
    /// they span a subalgebra.
    pub fn restrict(&self, dim: usize) -> Self {
        let mut t = StructureTensor::zeros(dim);
        for j in 0..dim {
            for k in 0..dim {
                for i in 0..dim {
                    t.c[(j * dim + k) * dim + i] = self.get(j, k, i);
                }
            }
        }
        t
    }

    fn bracket_unchecked(&self, x: &[f64], y: &[f64]) -> TangentVector {
        let r = self.r;
        let mut out = vec![0.0; r];
        for j in 0..r {
            if x[j] == 0.0 {
                continue;
            }
            for k in 0..r {
                let w = x[j] * y[k];
                if w == 0.0 {
                    continue;
                }
                let base = (j * r + k) * r;
                for (i, o) in out.iter_mut().enumerate() {
                    *o += self.c[base + i] * w;
                }
            }
        }
        TangentVector(out)
    }
}

fn levi_civita(i: usize, j: usize, k: usize) -> f64 {
    match (i, j, k) {
        (0, 1, 2) | (1, 2, 0) | (2, 0, 1) => 1.0,
        (0, 2, 1) | (2, 1, 0) | (1, 0, 2) => -1.0,
        _ => 0.0,
    }
}

/// `[x, y]^i = c_{jk}^i x^j y^k`.
pub fn bracket(c: &StructureTensor, x: &TangentVector, y: &TangentVector) -> Result<TangentVector> {
    c.check(x)?;
    c.check(y)?;
    Ok(c.bracket_unchecked(&x.0, &y.0))
}

/// `[x, [y, z]] + [y, [z, x]] + [z, [x, y]]`.
pub fn jacobiator(
    c: &StructureTensor,
    x: &TangentVector,
    y: &TangentVector,
    z: &TangentVector,
) -> Result<TangentVector> {
    let a = bracket(c, x, &bracket(c, y, z)?)?;
    let b = bracket(c, y, &bracket(c, z, x)?)?;
    let d = bracket(c, z, &bracket(c, x, y)?)?;
    Ok(&(&a + &b) + &d)
}

/// `‖[J(x, y, z), x] − J(x, y, [x, z])‖`.
pub fn malcev_residual(
    c: &StructureTensor,
    x: &TangentVector,
    y: &TangentVector,
    z: &TangentVector,
) -> Result<f64> {
    let lhs = bracket(c, &jacobiator(c, x, y, z)?, x)?;
    let rhs = jacobiator(c, x, y, &bracket(c, x, z)?)?;
    Ok((&lhs - &rhs).norm())
}

/// Rank-4 array `d_{jkn}^p`.
#[derive(Debug, Clone, PartialEq)]
pub struct YamagutiTensor {
    r: usize,
    d: Vec<f64>,
}

impl YamagutiTensor {
    pub fn dim(&self) -> usize {
        self.r
    }

    #[inline]
    pub fn get(&self, j: usize, k: usize, n: usize, p: usize) -> f64 {
        let r = self.r;
        self.d[((j * r + k) * r + n) * r + p]
    }

    /// `d(x, y)z` with components `d_{jkn}^p x^j y^k z^n`.
    pub fn apply(&self, x: &TangentVector, y: &TangentVector, z: &TangentVector) -> TangentVector {
        let r = self.r;
        let mut out = vec![0.0; r];
        for j in 0..r {
            for k in 0..r {
                for n in 0..r {
                    let w = x.0[j] * y.0[k] * z.0[n];
                    if w == 0.0 {
                        continue;
                    }
                    for (p, o) in out.iter_mut().enumerate() {
                        *o += self.get(j, k, n, p) * w;
                    }
                }
            }
        }
        TangentVector(out)
    }

    pub fn max_abs_diff(&self, other: &YamagutiTensor) -> f64 {
        self.d
            .iter()
            .zip(&other.d)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }

    fn build(c: &StructureTensor, last: impl Fn(usize, usize, usize, usize) -> f64) -> Self {
        let r = c.dim();
        let mut d = vec![0.0; r * r * r * r];
        for j in 0..r {
            for k in 0..r {
                for n in 0..r {
                    for p in 0..r {
                        let mut acc = last(j, k, n, p);
                        for s in 0..r {
                            acc += c.get(j, s, p) * c.get(k, n, s) - c.get(k, s, p) * c.get(j, n, s);
                        }
                        d[((j * r + k) * r + n) * r + p] = acc / 6.0;
                    }
                }
            }
        }
        YamagutiTensor { r, d }
    }
}

/// `6 d_{jkn}^p = c_{js}^p c_{kn}^s − c_{ks}^p c_{jn}^s + c_{sn}^p c_{jk}^s`,
/// i.e. `6 d(x, y)z = [x, [y, z]] − [y, [x, z]] + [[x, y], z]`.
pub fn yamaguti_tensor(c: &StructureTensor) -> YamagutiTensor {
    let r = c.dim();
    YamagutiTensor::build(c, |j, k, n, p| (0..r).map(|s| c.get(s, n, p) * c.get(j, k, s)).sum())
}

/// The variant whose last term reads `c_{pn}^p c_{jk}^s` literally; the
/// repeated `p` is taken as the trace `Σ_q c_{qn}^q` and the dangling `s` is
/// identified with the free index `p`.
pub fn yamaguti_tensor_printed(c: &StructureTensor) -> YamagutiTensor {
    let r = c.dim();
    let trace: Vec<f64> = (0..r)
        .map(|n| (0..r).map(|q| c.get(q, n, q)).sum())
        .collect();
    YamagutiTensor::build(c, |j, k, n, p| trace[n] * c.get(j, k, p))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(r: usize, i: usize) -> TangentVector {
        TangentVector::basis(r, i)
    }

    #[test]
    fn su2_is_lie() {
        let c = StructureTensor::su2();
        let x = TangentVector(vec![0.3, -1.2, 0.7]);
        let y = TangentVector(vec![1.1, 0.4, -0.5]);
        let z = TangentVector(vec![-0.2, 0.9, 2.0]);
        assert!(jacobiator(&c, &x, &y, &z).unwrap().norm() < 1e-14);
        assert!(malcev_residual(&c, &x, &y, &z).unwrap() < 1e-14);
        assert_eq!(bracket(&c, &e(3, 0), &e(3, 1)).unwrap(), e(3, 2).scale(2.0));
    }

    #[test]
    fn bracket_antisymmetry_and_repeats() {
        let c = StructureTensor::su2();
        let x = TangentVector(vec![0.3, -1.2, 0.7]);
        let y = TangentVector(vec![1.1, 0.4, -0.5]);
        assert!(bracket(&c, &x, &x).unwrap().norm() < 1e-15);
        let s = &bracket(&c, &x, &y).unwrap() + &bracket(&c, &y, &x).unwrap();
        assert!(s.norm() < 1e-15);
        assert!(jacobiator(&c, &x, &x, &y).unwrap().norm() < 1e-14);
    }

    #[test]
    fn dimension_mismatch() {
        let c = StructureTensor::su2();
        let err = bracket(&c, &TangentVector::zeros(3), &TangentVector::zeros(4)).unwrap_err();
        assert_eq!(err, Error::Dimension { expected: 3, found: 4 });
    }

    #[test]
    fn from_fn_rejects_asymmetric() {
        assert!(StructureTensor::from_fn(2, |j, k, _| (j + 2 * k) as f64).is_err());
    }

    #[test]
    fn yamaguti_lie_limit() {
        let c = StructureTensor::su2();
        let d = yamaguti_tensor(&c);
        for j in 0..3 {
            for k in 0..3 {
                for n in 0..3 {
                    for p in 0..3 {
                        let expect: f64 =
                            (0..3).map(|s| c.get(j, k, s) * c.get(s, n, p)).sum::<f64>() / 3.0;
                        assert!((d.get(j, k, n, p) - expect).abs() < 1e-15);
                        assert!((d.get(j, k, n, p) + d.get(k, j, n, p)).abs() < 1e-15);
                    }
                }
            }
        }
    }

    #[test]
    fn printed_yamaguti_differs_in_lie_limit() {
        // su(2) is traceless, so the printed form keeps only the first two
        // terms: half of the corrected coefficient.
        let c = StructureTensor::su2();
        let (d, dp) = (yamaguti_tensor(&c), yamaguti_tensor_printed(&c));
        assert!((d.get(0, 1, 0, 1) - 4.0 / 3.0).abs() < 1e-15);
        assert!((d.get(0, 1, 0, 1) - 2.0 * dp.get(0, 1, 0, 1)).abs() < 1e-15);
        assert!(d.max_abs_diff(&dp) > 0.5);
    }

    #[test]
    fn yamaguti_apply_matches_bracket_form() {
        let c = StructureTensor::su2();
        let d = yamaguti_tensor(&c);
        let x = TangentVector(vec![0.3, -1.2, 0.7]);
        let y = TangentVector(vec![1.1, 0.4, -0.5]);
        let z = TangentVector(vec![-0.2, 0.9, 2.0]);
        let b = |u: &TangentVector, v: &TangentVector| bracket(&c, u, v).unwrap();
        let six = &(&b(&x, &b(&y, &z)) - &b(&y, &b(&x, &z))) + &b(&b(&x, &y), &z);
        let diff = &d.apply(&x, &y, &z).scale(6.0) - &six;
        assert!(diff.norm() < 1e-13);
    }
}
