use std::fmt;

use super::poly::LaurentPoly;
use super::ring::Ring;
use crate::combinatorics::SubsetIdx;
use crate::error::{usage, Error, Result};

/// Environment variable overriding the size cap of [`det_cofactor`].
pub const ORACLE_BOUND_ENV: &str = "COMPOUND_DET_ORACLE_BOUND";
pub const DEFAULT_ORACLE_BOUND: usize = 6;

/// Dense row-major matrix over a [`Ring`].
#[derive(Clone, PartialEq)]
pub struct Matrix<R: Ring> {
    rows: usize,
    cols: usize,
    ctx: R::Ctx,
    entries: Vec<R>,
}

pub type PolyMatrix = Matrix<LaurentPoly>;

impl<R: Ring> Matrix<R> {
    pub fn new(rows: usize, cols: usize, ctx: R::Ctx, entries: Vec<R>) -> Result<Self> {
        if entries.len() != rows * cols {
            return usage(format!(
                "{} entries supplied for a {rows}x{cols} matrix",
                entries.len()
            ));
        }
        if let Some(bad) = entries.iter().find(|e| e.ctx() != ctx) {
            return usage(format!("entry {bad:?} does not live in the matrix ring"));
        }
        Ok(Matrix {
            rows,
            cols,
            ctx,
            entries,
        })
    }

    /// Builds a matrix from 0-based `(row, col) -> entry`.
    pub fn from_fn(rows: usize, cols: usize, ctx: R::Ctx, mut f: impl FnMut(usize, usize) -> R) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        Matrix {
            rows,
            cols,
            ctx,
            entries,
        }
    }

    pub fn from_rows(ctx: R::Ctx, rows: Vec<Vec<R>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return usage("ragged rows");
        }
        Self::new(r, c, ctx, rows.into_iter().flatten().collect())
    }

    pub fn identity(n: usize, ctx: R::Ctx) -> Self {
        Self::from_fn(n, n, ctx, |i, j| if i == j { R::one_in(ctx) } else { R::zero_in(ctx) })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn ctx(&self) -> R::Ctx {
        self.ctx
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    /// Entry at 0-based `(i, j)`.
    pub fn get(&self, i: usize, j: usize) -> &R {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: R) {
        self.entries[i * self.cols + j] = value;
    }

    pub fn row(&self, i: usize) -> &[R] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn entries(&self) -> &[R] {
        &self.entries
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn swap_cols(&mut self, a: usize, b: usize) {
        for i in 0..self.rows {
            self.entries.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, self.ctx, |i, j| self.get(j, i).clone())
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return usage(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            ));
        }
        Ok(Self::from_fn(self.rows, other.cols, self.ctx, |i, j| {
            (0..self.cols).fold(R::zero_in(self.ctx), |acc, k| {
                acc.add(&self.get(i, k).mul(other.get(k, j)))
            })
        }))
    }

    pub fn map<S: Ring>(&self, ctx: S::Ctx, f: impl Fn(&R) -> S) -> Matrix<S> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            ctx,
            entries: self.entries.iter().map(f).collect(),
        }
    }

    pub fn try_map<S: Ring>(&self, ctx: S::Ctx, f: impl Fn(&R) -> Result<S>) -> Result<Matrix<S>> {
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            ctx,
            entries: self.entries.iter().map(f).collect::<Result<_>>()?,
        })
    }

    /// The submatrix `A^I_J` on the (1-based) row set `rows` and column set
    /// `cols`, in increasing index order. The two sets may differ in size.
    pub fn minor(&self, rows: &SubsetIdx, cols: &SubsetIdx) -> Result<Self> {
        if let Some(&r) = rows.elements().iter().find(|&&r| r == 0 || r > self.rows) {
            return usage(format!("row index {r} outside 1..={}", self.rows));
        }
        if let Some(&c) = cols.elements().iter().find(|&&c| c == 0 || c > self.cols) {
            return usage(format!("column index {c} outside 1..={}", self.cols));
        }
        let (ri, ci) = (rows.elements(), cols.elements());
        Ok(Self::from_fn(ri.len(), ci.len(), self.ctx, |i, j| {
            self.get(ri[i] - 1, ci[j] - 1).clone()
        }))
    }

    /// `det A^I_J`, by cofactor expansion up to size 4 and fraction-free
    /// elimination beyond.
    pub fn minor_det(&self, rows: &SubsetIdx, cols: &SubsetIdx) -> Result<R> {
        if rows.len() != cols.len() {
            return usage("minor determinant needs |I| = |J|");
        }
        let sub = self.minor(rows, cols)?;
        if sub.rows <= 4 {
            det_cofactor_bounded(&sub, 4)
        } else {
            det_fraction_free(&sub)
        }
    }
}

impl<R: Ring> fmt::Debug for Matrix<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(Ring::canonical).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

/// Current oracle size cap: `COMPOUND_DET_ORACLE_BOUND` if set and valid,
/// otherwise 6.
pub fn oracle_bound() -> usize {
    std::env::var(ORACLE_BOUND_ENV)
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_ORACLE_BOUND)
}

/// Permutation expansion `sum_sigma sgn(sigma) prod_i m[i, sigma(i)]`,
/// capped at [`oracle_bound`].
pub fn det_cofactor<R: Ring>(m: &Matrix<R>) -> Result<R> {
    det_cofactor_bounded(m, oracle_bound())
}

pub fn det_cofactor_bounded<R: Ring>(m: &Matrix<R>, bound: usize) -> Result<R> {
    if !m.is_square() {
        return usage(format!("determinant of a non-square {}x{} matrix", m.rows, m.cols));
    }
    if m.rows > bound {
        return Err(Error::Capability(format!(
            "cofactor oracle limited to size {bound}, got {}",
            m.rows
        )));
    }
    let n = m.rows;
    let mut perm: Vec<usize> = Vec::with_capacity(n);
    let mut used = vec![false; n];
    let mut total = R::zero_in(m.ctx);
    expand(m, 0, &mut perm, &mut used, &R::one_in(m.ctx), &mut total);
    Ok(total)
}

fn expand<R: Ring>(
    m: &Matrix<R>,
    row: usize,
    perm: &mut Vec<usize>,
    used: &mut [bool],
    partial: &R,
    total: &mut R,
) {
    let n = m.rows;
    if row == n {
        let inversions = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .filter(|&(i, j)| perm[i] > perm[j])
            .count();
        *total = if inversions % 2 == 0 {
            total.add(partial)
        } else {
            total.sub(partial)
        };
        return;
    }
    for col in 0..n {
        if used[col] {
            continue;
        }
        let entry = m.get(row, col);
        if entry.vanishes() {
            continue;
        }
        used[col] = true;
        perm.push(col);
        expand(m, row + 1, perm, used, &partial.mul(entry), total);
        perm.pop();
        used[col] = false;
    }
}

/// Bareiss fraction-free elimination. Pivots on the first nonzero entry of
/// the current column; every division is exact in an integral domain.
pub fn det_fraction_free<R: Ring>(m: &Matrix<R>) -> Result<R> {
    if !m.is_square() {
        return usage(format!("determinant of a non-square {}x{} matrix", m.rows, m.cols));
    }
    let n = m.rows;
    let ctx = m.ctx;
    if n == 0 {
        return Ok(R::one_in(ctx));
    }
    let mut a = m.clone();
    let mut negate = false;
    let mut prev = R::one_in(ctx);
    for k in 0..n - 1 {
        let Some(p) = (k..n).find(|&i| !a.get(i, k).vanishes()) else {
            return Ok(R::zero_in(ctx));
        };
        if p != k {
            a.swap_rows(p, k);
            negate = !negate;
        }
        let pivot = a.get(k, k).clone();
        for i in k + 1..n {
            let lead = a.get(i, k).clone();
            for j in k + 1..n {
                let num = a.get(i, j).mul(&pivot).sub(&lead.mul(a.get(k, j)));
                let value = if num.vanishes() { num } else { num.div_exact(&prev)? };
                a.set(i, j, value);
            }
            a.set(i, k, R::zero_in(ctx));
        }
        prev = pivot;
    }
    let det = a.get(n - 1, n - 1).clone();
    Ok(if negate { det.neg() } else { det })
}

/// The default determinant: fraction-free elimination.
pub fn determinant<R: Ring>(m: &Matrix<R>) -> Result<R> {
    det_fraction_free(m)
}
