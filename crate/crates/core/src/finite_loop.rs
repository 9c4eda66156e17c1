//! Finite loops given by Cayley tables.
//!
//! Element `0` is always the unit. Tables are read from and written to a
//! plain text format:
//!
//! ```text
//! # optional comment lines
//! 2
//! 0 1
//! 1 0
//! ```
//!
//! The first non-comment token is the order `n`, followed by `n` rows of `n`
//! integers; the entry at row `g`, column `h` is the product `g·h`.

use std::fmt::Write as _;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::octonion::{MulTable, Octonion};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CayleyTable {
    n: usize,
    entries: Vec<usize>,
}

impl CayleyTable {
    /// Builds a table and checks every loop invariant: Latin square,
    /// two-sided unit `0`, two-sided inverses.
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self> {
        let table = Self::from_rows_shape_checked(rows)?;
        table.validate()?;
        Ok(table)
    }

    /// Builds a table checking only its shape and entry range, so that
    /// quasigroups and arbitrary magmas can still be classified.
    pub fn from_rows_shape_checked(rows: Vec<Vec<usize>>) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::Validation {
                row: 0,
                column: 0,
                message: "table must have at least one element".into(),
            });
        }
        let mut entries = Vec::with_capacity(n * n);
        for (g, row) in rows.into_iter().enumerate() {
            if row.len() != n {
                return Err(Error::Validation {
                    row: g,
                    column: row.len().min(n),
                    message: format!("row has {} entries, expected {n}", row.len()),
                });
            }
            for (h, &v) in row.iter().enumerate() {
                if v >= n {
                    return Err(Error::Validation {
                        row: g,
                        column: h,
                        message: format!("entry {v} outside [0, {n})"),
                    });
                }
            }
            entries.extend(row);
        }
        Ok(CayleyTable { n, entries })
    }

    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn mul(&self, g: usize, h: usize) -> usize {
        self.entries[g * self.n + h]
    }

    pub fn row(&self, g: usize) -> &[usize] {
        &self.entries[g * self.n..(g + 1) * self.n]
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        (0..self.n).map(|g| self.row(g).to_vec()).collect()
    }

    /// Two-sided inverse of `g`, if it exists.
    pub fn inverse(&self, g: usize) -> Option<usize> {
        (0..self.n).find(|&h| self.mul(g, h) == 0 && self.mul(h, g) == 0)
    }

    /// Reports the first offending cell in row-major order.
    pub fn validate(&self) -> Result<()> {
        if let Some(cx) = latin_failure(self) {
            let [a, _, c] = cx.elements;
            let (row, column) = match cx.law {
                Law::LatinRow => (a, c),
                _ => (c, a),
            };
            return Err(Error::Validation {
                row,
                column,
                message: format!("{} repeats an entry", cx.law.describe()),
            });
        }
        for j in 0..self.n {
            if self.mul(0, j) != j {
                return Err(Error::Validation {
                    row: 0,
                    column: j,
                    message: format!("element 0 is not a left unit: 0·{j} = {}", self.mul(0, j)),
                });
            }
            if self.mul(j, 0) != j {
                return Err(Error::Validation {
                    row: j,
                    column: 0,
                    message: format!("element 0 is not a right unit: {j}·0 = {}", self.mul(j, 0)),
                });
            }
        }
        for g in 0..self.n {
            if self.inverse(g).is_none() {
                let column = (0..self.n).find(|&h| self.mul(g, h) == 0).unwrap_or(0);
                return Err(Error::Validation {
                    row: g,
                    column,
                    message: format!("element {g} has no two-sided inverse"),
                });
            }
        }
        Ok(())
    }

    pub fn serialize(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{}", self.n);
        for g in 0..self.n {
            let row: Vec<String> = self.row(g).iter().map(|v| v.to_string()).collect();
            let _ = writeln!(out, "{}", row.join(" "));
        }
        out
    }

    /// Conjugates the table by a permutation of the non-unit elements:
    /// the new product is `p(p⁻¹(g)·p⁻¹(h))`. `perm[0]` must be `0`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Self> {
        let n = self.n;
        if perm.len() != n {
            return Err(Error::Dimension {
                expected: n,
                found: perm.len(),
            });
        }
        let mut inv = vec![usize::MAX; n];
        for (i, &p) in perm.iter().enumerate() {
            if p >= n || inv[p] != usize::MAX {
                return Err(Error::Domain("relabeling is not a permutation".into()));
            }
            inv[p] = i;
        }
        if perm[0] != 0 {
            return Err(Error::Domain("relabeling must fix the unit".into()));
        }
        let rows = (0..n)
            .map(|g| (0..n).map(|h| perm[self.mul(inv[g], inv[h])]).collect())
            .collect();
        CayleyTable::from_rows_shape_checked(rows)
    }
}

/// Largest order accepted by the parser.
pub const MAX_ORDER: usize = 4096;

/// Parses and fully validates a table in the text format.
pub fn parse_table(text: &str) -> Result<CayleyTable> {
    let rows = parse_rows(text)?;
    CayleyTable::new(rows)
}

/// Parses the text format, checking only shape and range.
pub fn parse_rows(text: &str) -> Result<Vec<Vec<usize>>> {
    let mut tokens = text
        .lines()
        .enumerate()
        .filter(|(_, line)| !line.trim_start().starts_with('#'))
        .flat_map(|(i, line)| {
            let base = line.as_ptr() as usize;
            line.split_whitespace()
                .map(move |tok| (i + 1, tok.as_ptr() as usize - base + 1, tok))
        });

    let (line, column, tok) = tokens.next().ok_or(Error::Parse {
        line: 1,
        column: 1,
        message: "missing table order".into(),
    })?;
    let n: usize = tok.parse().map_err(|_| Error::Parse {
        line,
        column,
        message: format!("invalid table order {tok:?}"),
    })?;
    if n == 0 || n > MAX_ORDER {
        return Err(Error::Parse {
            line,
            column,
            message: format!("table order must be in 1..={MAX_ORDER}"),
        });
    }
    let mut last_line = line;

    let mut rows = vec![Vec::with_capacity(n); n];
    let mut row_line = vec![0usize; n];
    for (idx, slot) in (0..n * n).map(|i| (i, i / n)) {
        let (line, column, tok) = tokens.next().ok_or_else(|| Error::Parse {
            line: last_line + 1,
            column: 1,
            message: format!(
                "expected {} entries, found {idx} (table truncated)",
                n * n
            ),
        })?;
        if idx % n == 0 {
            if slot > 0 && line == row_line[slot - 1] {
                return Err(Error::Parse {
                    line,
                    column,
                    message: format!("row {} has more than {n} entries", slot - 1),
                });
            }
            row_line[slot] = line;
        } else if line != row_line[slot] {
            return Err(Error::Parse {
                line,
                column,
                message: format!("row {slot} has fewer than {n} entries"),
            });
        }
        let v: usize = tok.parse().map_err(|_| Error::Parse {
            line,
            column,
            message: format!("invalid entry {tok:?}"),
        })?;
        if v >= n {
            return Err(Error::Parse {
                line,
                column,
                message: format!("entry {v} outside [0, {n})"),
            });
        }
        rows[slot].push(v);
        last_line = line;
    }
    if let Some((line, column, tok)) = tokens.next() {
        return Err(Error::Parse {
            line,
            column,
            message: format!("unexpected trailing token {tok:?}"),
        });
    }
    Ok(rows)
}

/// The identity whose failure a [`Counterexample`] witnesses.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Law {
    /// Elements `[g, h1, h2]` with `g·h1 = g·h2`, `h1 < h2`.
    LatinRow,
    /// Elements `[h, g1, g2]` with `g1·h = g2·h`, `g1 < g2`.
    LatinColumn,
    /// Elements `[j, 0, 0]` with `0·j ≠ j` or `j·0 ≠ j`.
    Unit,
    /// `(ab)a = a(ba)` fails for `[a, b, 0]`.
    Flexible,
    /// `(ag)(ha) = (a(gh))a` fails for `[a, g, h]`.
    Moufang,
    /// `(ab)c = a(bc)` fails for `[a, b, c]`.
    Associative,
}

impl Law {
    fn describe(self) -> &'static str {
        match self {
            Law::LatinRow => "row",
            Law::LatinColumn => "column",
            Law::Unit => "unit",
            Law::Flexible => "flexible law",
            Law::Moufang => "Moufang identity",
            Law::Associative => "associativity",
        }
    }

    /// True if the law fails at `elements` in `t`.
    pub fn fails_at(self, t: &CayleyTable, elements: [usize; 3]) -> bool {
        let [a, b, c] = elements;
        let m = |x, y| t.mul(x, y);
        match self {
            Law::LatinRow => b < c && m(a, b) == m(a, c),
            Law::LatinColumn => b < c && m(b, a) == m(c, a),
            Law::Unit => m(0, a) != a || m(a, 0) != a,
            Law::Flexible => m(m(a, b), a) != m(a, m(b, a)),
            Law::Moufang => m(m(a, b), m(c, a)) != m(m(a, m(b, c)), a),
            Law::Associative => m(m(a, b), c) != m(a, m(b, c)),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub law: Law,
    pub elements: [usize; 3],
}

impl Counterexample {
    /// Re-evaluates the witnessed law; true if it still fails.
    pub fn replay(&self, t: &CayleyTable) -> bool {
        self.law.fails_at(t, self.elements)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Flag {
    pub holds: bool,
    pub counterexample: Option<Counterexample>,
}

impl Flag {
    fn from_failure(cx: Option<Counterexample>) -> Self {
        Flag {
            holds: cx.is_none(),
            counterexample: cx,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LoopClassification {
    pub is_quasigroup: Flag,
    pub is_loop: Flag,
    pub is_moufang: Flag,
    pub is_group: Flag,
    pub is_flexible: Flag,
}

fn first_triple(n: usize, law: Law, t: &CayleyTable) -> Option<Counterexample> {
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if law.fails_at(t, [a, b, c]) {
                    return Some(Counterexample {
                        law,
                        elements: [a, b, c],
                    });
                }
            }
        }
    }
    None
}

fn latin_failure(t: &CayleyTable) -> Option<Counterexample> {
    first_triple(t.n, Law::LatinRow, t).or_else(|| first_triple(t.n, Law::LatinColumn, t))
}

fn unit_failure(t: &CayleyTable) -> Option<Counterexample> {
    (0..t.n)
        .map(|j| Counterexample {
            law: Law::Unit,
            elements: [j, 0, 0],
        })
        .find(|cx| cx.replay(t))
}

fn flexible_failure(t: &CayleyTable) -> Option<Counterexample> {
    let n = t.n;
    (0..n)
        .flat_map(|a| (0..n).map(move |b| [a, b, 0]))
        .map(|elements| Counterexample {
            law: Law::Flexible,
            elements,
        })
        .find(|cx| cx.replay(t))
}

/// Exhaustive classification. Counterexamples are lexicographically minimal;
/// the identity-based flags additionally require a loop, and inherit the loop
/// counterexample when that fails.
pub fn classify(t: &CayleyTable) -> LoopClassification {
    let n = t.n;
    let latin = latin_failure(t);
    let loop_cx = latin.or_else(|| unit_failure(t));
    let within_loop = |cx: Option<Counterexample>| loop_cx.or(cx);
    LoopClassification {
        is_quasigroup: Flag::from_failure(latin),
        is_loop: Flag::from_failure(loop_cx),
        is_moufang: Flag::from_failure(within_loop(first_triple(n, Law::Moufang, t))),
        is_group: Flag::from_failure(within_loop(first_triple(n, Law::Associative, t))),
        is_flexible: Flag::from_failure(within_loop(flexible_failure(t))),
    }
}

/// A permutation matrix stored by its column images: column `x` has its
/// single `1` in row `images[x]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PermutationMatrix {
    images: Vec<usize>,
}

impl PermutationMatrix {
    pub fn identity(n: usize) -> Self {
        PermutationMatrix {
            images: (0..n).collect(),
        }
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn apply(&self, x: usize) -> usize {
        self.images[x]
    }

    /// Matrix product `self · other`.
    pub fn compose(&self, other: &PermutationMatrix) -> PermutationMatrix {
        PermutationMatrix {
            images: other.images.iter().map(|&x| self.images[x]).collect(),
        }
    }

    pub fn to_dense(&self) -> Vec<Vec<u8>> {
        let n = self.images.len();
        let mut m = vec![vec![0u8; n]; n];
        for (col, &row) in self.images.iter().enumerate() {
            m[row][col] = 1;
        }
        m
    }

    /// Number of columns in which two permutation matrices differ.
    pub fn defect(&self, other: &PermutationMatrix) -> usize {
        self.images
            .iter()
            .zip(&other.images)
            .filter(|(a, b)| a != b)
            .count()
    }
}

/// Left translation `S_g: h ↦ gh` and right translation `T_g: h ↦ hg`.
pub fn translations(t: &CayleyTable, g: usize) -> Result<(PermutationMatrix, PermutationMatrix)> {
    if g >= t.n {
        return Err(Error::OutOfRange { index: g, size: t.n });
    }
    let s = PermutationMatrix {
        images: (0..t.n).map(|h| t.mul(g, h)).collect(),
    };
    let r = PermutationMatrix {
        images: (0..t.n).map(|h| t.mul(h, g)).collect(),
    };
    Ok((s, r))
}

/// Largest column defect over all pairs `(g, h)` of the two axioms
/// `T_g S_g S_h = S_{gh} T_g` and `S_g T_g T_h = T_{hg} S_g`.
pub fn birep_axiom_residual_table(t: &CayleyTable) -> usize {
    let n = t.n;
    let trans: Vec<_> = (0..n)
        .map(|g| translations(t, g).expect("index in range"))
        .collect();
    let mut worst = 0;
    for g in 0..n {
        let (sg, tg) = &trans[g];
        for h in 0..n {
            let (sh, th) = &trans[h];
            let lhs = tg.compose(sg).compose(sh);
            let rhs = trans[t.mul(g, h)].0.compose(tg);
            worst = worst.max(lhs.defect(&rhs));
            let lhs = sg.compose(tg).compose(th);
            let rhs = trans[t.mul(h, g)].1.compose(sg);
            worst = worst.max(lhs.defect(&rhs));
        }
    }
    worst
}

pub fn cyclic_group(n: usize) -> Result<CayleyTable> {
    if n == 0 {
        return Err(Error::Domain("cyclic group order must be at least 1".into()));
    }
    CayleyTable::new((0..n).map(|g| (0..n).map(|h| (g + h) % n).collect()).collect())
}

/// Signed basis loop: index `i < half` is `+e_i`, index `i + half` is `−e_i`.
fn signed_basis_loop(half: usize) -> CayleyTable {
    let table = MulTable::STANDARD;
    let rows = (0..2 * half)
        .map(|g| {
            (0..2 * half)
                .map(|h| {
                    let (sign, k) = table.entry(g % half, h % half);
                    let negative = (sign < 0) ^ (g >= half) ^ (h >= half);
                    k + if negative { half } else { 0 }
                })
                .collect()
        })
        .collect();
    CayleyTable::new(rows).expect("signed basis loop is a valid loop")
}

/// `{±1, ±e_1, ±e_2, ±e_3}`: index `i` is `+e_i`, `i + 4` is `−e_i`.
pub fn quaternion_group_8() -> CayleyTable {
    signed_basis_loop(4)
}

/// `{±1, ±e_1, …, ±e_7}`: index `i` is `+e_i`, `i + 8` is `−e_i`.
pub fn octonion_loop_16() -> CayleyTable {
    signed_basis_loop(8)
}

/// The octonion represented by an element of [`octonion_loop_16`].
pub fn octonion_loop_element(index: usize) -> Octonion {
    let o = Octonion::unit(index % 8);
    if index >= 8 {
        -o
    } else {
        o
    }
}

/// The lexicographically first order-5 loop with two-sided inverses that is
/// not associative. Every element is its own inverse.
pub fn nonassociative_loop_5() -> CayleyTable {
    CayleyTable::new(vec![
        vec![0, 1, 2, 3, 4],
        vec![1, 0, 3, 4, 2],
        vec![2, 4, 0, 1, 3],
        vec![3, 2, 4, 0, 1],
        vec![4, 3, 1, 2, 0],
    ])
    .expect("fixture is a loop")
}
