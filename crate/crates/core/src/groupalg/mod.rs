//! Integer matrices, Smith normal form and abelianization of triangle
//! groups.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::presentation::TrianglePresentation;

#[derive(Clone, PartialEq, Eq)]
pub struct IntegerMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntegerMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntegerMatrix {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    /// Panics if the rows have different lengths.
    pub fn from_rows<T: Into<BigInt> + Clone>(rows: &[Vec<T>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        let mut m = Self::zeros(rows.len(), cols);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), cols, "ragged matrix");
            for (j, v) in row.iter().enumerate() {
                m[(i, j)] = v.clone().into();
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn mul(&self, other: &IntegerMatrix) -> IntegerMatrix {
        assert_eq!(self.cols, other.rows);
        let mut out = IntegerMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn transpose(&self) -> IntegerMatrix {
        let mut t = IntegerMatrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a != b {
            for i in 0..self.rows {
                self.data.swap(i * self.cols + a, i * self.cols + b);
            }
        }
    }

    /// row[dst] -= f * row[src]
    fn sub_row(&mut self, dst: usize, src: usize, f: &BigInt) {
        if f.is_zero() {
            return;
        }
        for j in 0..self.cols {
            let v = &self.data[src * self.cols + j] * f;
            self.data[dst * self.cols + j] -= v;
        }
    }

    /// col[dst] -= f * col[src]
    fn sub_col(&mut self, dst: usize, src: usize, f: &BigInt) {
        if f.is_zero() {
            return;
        }
        for i in 0..self.rows {
            let v = &self.data[i * self.cols + src] * f;
            self.data[i * self.cols + dst] -= v;
        }
    }

    fn negate_row(&mut self, r: usize) {
        for j in 0..self.cols {
            let v = std::mem::take(&mut self.data[r * self.cols + j]);
            self.data[r * self.cols + j] = -v;
        }
    }
}

impl std::ops::Index<(usize, usize)> for IntegerMatrix {
    type Output = BigInt;
    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for IntegerMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Debug for IntegerMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "IntegerMatrix {}x{}", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// Abelianized relators: one row per rotation orbit, holding the exponent
/// sum of `a_x a_y a_z`.
pub fn relation_matrix(t: &TrianglePresentation, n: usize) -> IntegerMatrix {
    let reps = t.orbit_representatives();
    let mut m = IntegerMatrix::zeros(reps.len(), n);
    for (i, tr) in reps.iter().enumerate() {
        for &x in tr {
            m[(i, x)] += 1;
        }
    }
    m
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmithForm {
    /// Diagonal entries, `min(rows, cols)` of them, each dividing the next
    /// (zeros last).
    pub diagonal: Vec<BigInt>,
    /// `(U, V)` with `U·M·V = D`, when requested.
    pub transforms: Option<(IntegerMatrix, IntegerMatrix)>,
}

/// Smith normal form by row and column reduction. The pivot is always the
/// nonzero entry of least absolute value in the remaining block, ties broken
/// by lowest `(row, col)`.
pub fn smith_normal_form(m: &IntegerMatrix, with_transforms: bool) -> SmithForm {
    let mut a = m.clone();
    let (rows, cols) = (a.rows, a.cols);
    let mut u = with_transforms.then(|| IntegerMatrix::identity(rows));
    let mut v = with_transforms.then(|| IntegerMatrix::identity(cols));
    let steps = rows.min(cols);

    for t in 0..steps {
        while let Some((pi, pj)) = smallest_entry(&a, t) {
            a.swap_rows(t, pi);
            a.swap_cols(t, pj);
            if let Some(u) = u.as_mut() {
                u.swap_rows(t, pi);
            }
            if let Some(v) = v.as_mut() {
                v.swap_cols(t, pj);
            }
            let p = a[(t, t)].clone();
            let mut clean = true;
            for i in t + 1..rows {
                if a[(i, t)].is_zero() {
                    continue;
                }
                let q = a[(i, t)].div_floor(&p);
                a.sub_row(i, t, &q);
                if let Some(u) = u.as_mut() {
                    u.sub_row(i, t, &q);
                }
                clean &= a[(i, t)].is_zero();
            }
            for j in t + 1..cols {
                if a[(t, j)].is_zero() {
                    continue;
                }
                let q = a[(t, j)].div_floor(&p);
                a.sub_col(j, t, &q);
                if let Some(v) = v.as_mut() {
                    v.sub_col(j, t, &q);
                }
                clean &= a[(t, j)].is_zero();
            }
            if !clean {
                continue;
            }
            // pivot must divide the rest of the block
            let bad = (t + 1..rows).find(|&i| (t + 1..cols).any(|j| !a[(i, j)].is_multiple_of(&p)));
            match bad {
                Some(i) => {
                    // row t += row i, then reduce again
                    let minus_one = -BigInt::one();
                    a.sub_row(t, i, &minus_one);
                    if let Some(u) = u.as_mut() {
                        u.sub_row(t, i, &minus_one);
                    }
                }
                None => break,
            }
        }
        if a[(t, t)].is_negative() {
            a.negate_row(t);
            if let Some(u) = u.as_mut() {
                u.negate_row(t);
            }
        }
    }
    let diagonal = (0..steps).map(|i| a[(i, i)].clone()).collect();
    SmithForm {
        diagonal,
        transforms: u.zip(v),
    }
}

fn smallest_entry(a: &IntegerMatrix, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for i in t..a.rows {
        for j in t..a.cols {
            let x = &a[(i, j)];
            if x.is_zero() {
                continue;
            }
            if best.is_none_or(|(bi, bj)| x.abs() < a[(bi, bj)].abs()) {
                best = Some((i, j));
                if x.abs().is_one() {
                    return best;
                }
            }
        }
    }
    best
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AbelianDecomposition {
    /// `d_1 | d_2 | …`, each greater than one.
    pub invariant_factors: Vec<BigInt>,
    pub free_rank: usize,
}

impl AbelianDecomposition {
    pub fn is_trivial(&self) -> bool {
        self.invariant_factors.is_empty() && self.free_rank == 0
    }

    /// Order of the torsion part.
    pub fn torsion_order(&self) -> BigInt {
        self.invariant_factors.iter().product()
    }
}

impl fmt::Display for AbelianDecomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = self
            .invariant_factors
            .iter()
            .map(|d| format!("Z/{d}"))
            .collect();
        if self.free_rank > 0 {
            parts.push(if self.free_rank == 1 {
                "Z".into()
            } else {
                format!("Z^{}", self.free_rank)
            });
        }
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

/// `Γ / [Γ, Γ]` for the group with generators `a_0..a_{n-1}` and the
/// relators of `t`.
pub fn abelianization(t: &TrianglePresentation, n: usize) -> AbelianDecomposition {
    let m = relation_matrix(t, n);
    let snf = smith_normal_form(&m, false);
    let rank = snf.diagonal.iter().filter(|d| !d.is_zero()).count();
    let invariant_factors = snf
        .diagonal
        .into_iter()
        .filter(|d| !d.is_zero() && !d.is_one())
        .collect();
    AbelianDecomposition {
        invariant_factors,
        free_rank: n - rank,
    }
}
