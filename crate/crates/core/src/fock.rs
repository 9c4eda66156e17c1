//! Fermionic Fock space on `n` modes via the Jordan–Wigner construction.
//!
//! Basis state `s` is the occupation bit string of the modes, mode `A`
//! occupying bit `A`. The annihilator acts as
//! `a_A |s⟩ = (−1)^{#occupied modes below A} |s − 2^A⟩` when mode `A` is
//! occupied and as zero otherwise.

use std::ops::{Add, Mul, Sub};

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::error::{Error, Result};

pub const MAX_MODES: usize = 12;

/// Sparse complex `2ⁿ × 2ⁿ` operator in row-compressed form.
#[derive(Debug, Clone, PartialEq)]
pub struct FockOperator {
    dim: usize,
    /// Per row, `(column, value)` sorted by column, with no explicit zeros.
    rows: Vec<Vec<(usize, Complex64)>>,
}

impl FockOperator {
    pub fn zeros(dim: usize) -> Self {
        FockOperator {
            dim,
            rows: vec![Vec::new(); dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        FockOperator {
            dim,
            rows: (0..dim).map(|i| vec![(i, Complex64::new(1.0, 0.0))]).collect(),
        }
    }

    /// Sums duplicate entries and drops exact zeros.
    pub fn from_triplets(dim: usize, triplets: impl IntoIterator<Item = (usize, usize, Complex64)>) -> Self {
        let mut rows: Vec<Vec<(usize, Complex64)>> = vec![Vec::new(); dim];
        for (i, j, v) in triplets {
            rows[i].push((j, v));
        }
        for row in &mut rows {
            row.sort_by_key(|&(j, _)| j);
            let mut merged: Vec<(usize, Complex64)> = Vec::with_capacity(row.len());
            for &(j, v) in row.iter() {
                match merged.last_mut() {
                    Some((lj, lv)) if *lj == j => *lv += v,
                    _ => merged.push((j, v)),
                }
            }
            merged.retain(|(_, v)| *v != Complex64::new(0.0, 0.0));
            *row = merged;
        }
        FockOperator { dim, rows }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn nnz(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn get(&self, i: usize, j: usize) -> Complex64 {
        self.rows[i]
            .binary_search_by_key(&j, |&(c, _)| c)
            .map(|pos| self.rows[i][pos].1)
            .unwrap_or_default()
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, Complex64)> + '_ {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(i, row)| row.iter().map(move |&(j, v)| (i, j, v)))
    }

    pub fn scale(&self, s: Complex64) -> Self {
        FockOperator::from_triplets(self.dim, self.entries().map(|(i, j, v)| (i, j, v * s)))
    }

    /// Conjugate transpose.
    pub fn dagger(&self) -> Self {
        FockOperator::from_triplets(self.dim, self.entries().map(|(i, j, v)| (j, i, v.conj())))
    }

    /// `self += coeff · other`.
    pub fn add_scaled(&mut self, other: &FockOperator, coeff: Complex64) {
        assert_eq!(self.dim, other.dim, "operator dimensions differ");
        if coeff == Complex64::new(0.0, 0.0) {
            return;
        }
        for (row, orow) in self.rows.iter_mut().zip(&other.rows) {
            if orow.is_empty() {
                continue;
            }
            let mut merged = Vec::with_capacity(row.len() + orow.len());
            let (mut a, mut b) = (row.iter().peekable(), orow.iter().peekable());
            loop {
                match (a.peek(), b.peek()) {
                    (Some(&&(ja, va)), Some(&&(jb, vb))) => {
                        if ja < jb {
                            merged.push((ja, va));
                            a.next();
                        } else if jb < ja {
                            merged.push((jb, vb * coeff));
                            b.next();
                        } else {
                            merged.push((ja, va + vb * coeff));
                            a.next();
                            b.next();
                        }
                    }
                    (Some(&&e), None) => {
                        merged.push(e);
                        a.next();
                    }
                    (None, Some(&&(jb, vb))) => {
                        merged.push((jb, vb * coeff));
                        b.next();
                    }
                    (None, None) => break,
                }
            }
            merged.retain(|(_, v)| *v != Complex64::new(0.0, 0.0));
            *row = merged;
        }
    }

    pub fn matmul(&self, other: &FockOperator) -> FockOperator {
        assert_eq!(self.dim, other.dim, "operator dimensions differ");
        let mut scratch = vec![Complex64::new(0.0, 0.0); self.dim];
        let mut touched = vec![false; self.dim];
        let mut cols = Vec::new();
        let mut rows = Vec::with_capacity(self.dim);
        for row in &self.rows {
            for &(k, v) in row {
                for &(j, w) in &other.rows[k] {
                    if !touched[j] {
                        touched[j] = true;
                        cols.push(j);
                    }
                    scratch[j] += v * w;
                }
            }
            cols.sort_unstable();
            let mut out = Vec::with_capacity(cols.len());
            for &j in &cols {
                if scratch[j] != Complex64::new(0.0, 0.0) {
                    out.push((j, scratch[j]));
                }
                scratch[j] = Complex64::new(0.0, 0.0);
                touched[j] = false;
            }
            cols.clear();
            rows.push(out);
        }
        FockOperator { dim: self.dim, rows }
    }

    /// `[A, B] = AB − BA`.
    pub fn commutator(&self, other: &FockOperator) -> FockOperator {
        let mut out = self.matmul(other);
        out.add_scaled(&other.matmul(self), Complex64::new(-1.0, 0.0));
        out
    }

    /// `{A, B} = AB + BA`.
    pub fn anticommutator(&self, other: &FockOperator) -> FockOperator {
        let mut out = self.matmul(other);
        out.add_scaled(&other.matmul(self), Complex64::new(1.0, 0.0));
        out
    }

    /// Largest entry modulus.
    pub fn max_abs(&self) -> f64 {
        self.entries().map(|(_, _, v)| v.norm()).fold(0.0, f64::max)
    }

    pub fn to_dense(&self) -> DMatrix<Complex64> {
        let mut m = DMatrix::zeros(self.dim, self.dim);
        for (i, j, v) in self.entries() {
            m[(i, j)] = v;
        }
        m
    }
}

impl Add for &FockOperator {
    type Output = FockOperator;
    fn add(self, rhs: &FockOperator) -> FockOperator {
        let mut out = self.clone();
        out.add_scaled(rhs, Complex64::new(1.0, 0.0));
        out
    }
}

impl Sub for &FockOperator {
    type Output = FockOperator;
    fn sub(self, rhs: &FockOperator) -> FockOperator {
        let mut out = self.clone();
        out.add_scaled(rhs, Complex64::new(-1.0, 0.0));
        out
    }
}

impl Mul for &FockOperator {
    type Output = FockOperator;
    fn mul(self, rhs: &FockOperator) -> FockOperator {
        self.matmul(rhs)
    }
}

/// Annihilation and creation operators of all modes.
#[derive(Debug, Clone)]
pub struct FockModes {
    pub a: Vec<FockOperator>,
    pub a_dag: Vec<FockOperator>,
}

impl FockModes {
    pub fn modes(&self) -> usize {
        self.a.len()
    }

    pub fn dim(&self) -> usize {
        1 << self.modes()
    }
}

fn check_modes(n: usize) -> Result<()> {
    if n == 0 || n > MAX_MODES {
        return Err(Error::OutOfRange {
            index: n,
            size: MAX_MODES + 1,
        });
    }
    Ok(())
}

#[inline]
fn jw_sign(state: usize, mode: usize) -> f64 {
    if (state & ((1 << mode) - 1)).count_ones().is_multiple_of(2) {
        1.0
    } else {
        -1.0
    }
}

pub fn fock_build(n: usize) -> Result<FockModes> {
    check_modes(n)?;
    let dim = 1usize << n;
    let a: Vec<FockOperator> = (0..n)
        .map(|mode| {
            FockOperator::from_triplets(
                dim,
                (0..dim)
                    .filter(|s| s & (1 << mode) != 0)
                    .map(|s| (s ^ (1 << mode), s, Complex64::new(jw_sign(s, mode), 0.0))),
            )
        })
        .collect();
    let a_dag = a.iter().map(FockOperator::dagger).collect();
    Ok(FockModes { a, a_dag })
}

/// `Σ_{AB} a_A† M_{AB} a_B` for a complex coefficient matrix.
pub fn bilinear_complex(m: &DMatrix<Complex64>) -> Result<FockOperator> {
    let n = m.nrows();
    if m.ncols() != n {
        return Err(Error::Dimension {
            expected: n,
            found: m.ncols(),
        });
    }
    check_modes(n)?;
    let dim = 1usize << n;
    let mut triplets = Vec::new();
    for s in 0..dim {
        for b in (0..n).filter(|b| s & (1 << b) != 0) {
            let s1 = s ^ (1 << b);
            let sign1 = jw_sign(s, b);
            for a in (0..n).filter(|a| s1 & (1 << a) == 0) {
                let coeff = m[(a, b)];
                if coeff == Complex64::new(0.0, 0.0) {
                    continue;
                }
                let s2 = s1 | (1 << a);
                triplets.push((s2, s, coeff * (sign1 * jw_sign(s1, a))));
            }
        }
    }
    Ok(FockOperator::from_triplets(dim, triplets))
}

/// `Σ_{AB} a_A† M_{AB} a_B` for a real coefficient matrix.
pub fn bilinear(m: &DMatrix<f64>) -> Result<FockOperator> {
    bilinear_complex(&m.map(|x| Complex64::new(x, 0.0)))
}

/// True if every nonzero entry connects states of equal particle number.
pub fn conserves_number(op: &FockOperator) -> bool {
    op.entries().all(|(i, j, _)| i.count_ones() == j.count_ones())
}
