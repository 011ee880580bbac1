//! Dense square matrices over an exact field, with the shape predicates and
//! primitive-idempotent construction the canonical forms rely on.
//!
//! Rows and columns are indexed `0..=d`; a matrix of diameter `d` is
//! `(d+1) x (d+1)`. Matrices are immutable values: every operation returns a
//! fresh matrix.

use std::fmt;
use std::ops::{Add, Mul, Sub};

use crate::field::Field;

/// Errors from matrix-level operations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MatrixError {
    SizeMismatch,
    /// A diagonal conjugation scale was zero.
    ZeroScale,
    /// The supplied eigenvalue list is not the exact spectrum: one of the
    /// spectral-projector identities failed.
    NotMultiplicityFree,
    /// Entries from different fields in one matrix.
    FieldMismatch,
}

impl fmt::Display for MatrixError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MatrixError::SizeMismatch => write!(f, "matrix dimensions do not match"),
            MatrixError::ZeroScale => write!(f, "diagonal conjugation requires nonzero scales"),
            MatrixError::NotMultiplicityFree => {
                write!(f, "matrix is not multiplicity-free over the given eigenvalues")
            }
            MatrixError::FieldMismatch => write!(f, "matrix entries belong to different fields"),
        }
    }
}

impl std::error::Error for MatrixError {}

/// A dense square matrix over the field `F`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix<F> {
    dim: usize,
    data: Vec<F>,
}

/// Which structural shapes a matrix has. The flags are consistent:
/// diagonal implies both bidiagonal flags, which imply tridiagonal.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ShapeReport {
    pub diagonal: bool,
    pub lower_bidiagonal: bool,
    pub upper_bidiagonal: bool,
    pub tridiagonal: bool,
    /// Tridiagonal with every subdiagonal and superdiagonal entry nonzero.
    pub irreducible_tridiagonal: bool,
}

impl<F: Field> Matrix<F> {
    /// Builds a matrix from rows; all rows must have the same length as the
    /// row count and all entries must share a field.
    pub fn from_rows(rows: Vec<Vec<F>>) -> Result<Self, MatrixError> {
        let dim = rows.len();
        if dim == 0 || rows.iter().any(|r| r.len() != dim) {
            return Err(MatrixError::SizeMismatch);
        }
        let data: Vec<F> = rows.into_iter().flatten().collect();
        let ctx = data[0].ctx();
        if data.iter().any(|x| x.ctx() != ctx) {
            return Err(MatrixError::FieldMismatch);
        }
        Ok(Matrix { dim, data })
    }

    pub fn zero(dim: usize, ctx: &F::Ctx) -> Self {
        assert!(dim > 0);
        Matrix {
            dim,
            data: vec![F::zero(ctx); dim * dim],
        }
    }

    pub fn identity(dim: usize, ctx: &F::Ctx) -> Self {
        let mut m = Matrix::zero(dim, ctx);
        for i in 0..dim {
            *m.at_mut(i, i) = F::one(ctx);
        }
        m
    }

    pub fn diagonal(entries: &[F]) -> Self {
        assert!(!entries.is_empty());
        let ctx = entries[0].ctx();
        let mut m = Matrix::zero(entries.len(), &ctx);
        for (i, e) in entries.iter().enumerate() {
            *m.at_mut(i, i) = e.clone();
        }
        m
    }

    /// The side length, `d + 1`.
    pub fn dim(&self) -> usize {
        self.dim
    }

    /// The diameter `d`.
    pub fn d(&self) -> usize {
        self.dim - 1
    }

    pub fn ctx(&self) -> F::Ctx {
        self.data[0].ctx()
    }

    pub fn at(&self, row: usize, col: usize) -> &F {
        assert!(row < self.dim && col < self.dim);
        &self.data[row * self.dim + col]
    }

    pub fn at_mut(&mut self, row: usize, col: usize) -> &mut F {
        assert!(row < self.dim && col < self.dim);
        &mut self.data[row * self.dim + col]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[F]> {
        self.data.chunks(self.dim)
    }

    pub fn diagonal_entries(&self) -> Vec<F> {
        (0..self.dim).map(|i| self.at(i, i).clone()).collect()
    }

    pub fn checked_add(&self, rhs: &Self) -> Result<Self, MatrixError> {
        if self.dim != rhs.dim {
            return Err(MatrixError::SizeMismatch);
        }
        if self.ctx() != rhs.ctx() {
            return Err(MatrixError::FieldMismatch);
        }
        Ok(self.zip_entries(rhs, |a, b| a + b))
    }

    pub fn checked_sub(&self, rhs: &Self) -> Result<Self, MatrixError> {
        if self.dim != rhs.dim {
            return Err(MatrixError::SizeMismatch);
        }
        if self.ctx() != rhs.ctx() {
            return Err(MatrixError::FieldMismatch);
        }
        Ok(self.zip_entries(rhs, |a, b| a - b))
    }

    pub fn checked_mul(&self, rhs: &Self) -> Result<Self, MatrixError> {
        if self.dim != rhs.dim {
            return Err(MatrixError::SizeMismatch);
        }
        if self.ctx() != rhs.ctx() {
            return Err(MatrixError::FieldMismatch);
        }
        let ctx = self.ctx();
        let mut out = Matrix::zero(self.dim, &ctx);
        for i in 0..self.dim {
            for j in 0..self.dim {
                let mut acc = F::zero(&ctx);
                for k in 0..self.dim {
                    acc = acc + self.at(i, k).clone() * rhs.at(k, j).clone();
                }
                *out.at_mut(i, j) = acc;
            }
        }
        Ok(out)
    }

    fn zip_entries(&self, rhs: &Self, f: impl Fn(F, F) -> F) -> Self {
        Matrix {
            dim: self.dim,
            data: self
                .data
                .iter()
                .zip(rhs.data.iter())
                .map(|(a, b)| f(a.clone(), b.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, s: &F) -> Self {
        Matrix {
            dim: self.dim,
            data: self.data.iter().map(|x| x.clone() * s.clone()).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    /// Structural classification of the nonzero entries.
    pub fn shape(&self) -> ShapeReport {
        let d = self.d();
        let mut diagonal = true;
        let mut lower_bidiagonal = true;
        let mut upper_bidiagonal = true;
        let mut tridiagonal = true;
        for i in 0..=d {
            for j in 0..=d {
                if self.at(i, j).is_zero() {
                    continue;
                }
                if i != j {
                    diagonal = false;
                }
                if !(i == j || i == j + 1) {
                    lower_bidiagonal = false;
                }
                if !(i == j || j == i + 1) {
                    upper_bidiagonal = false;
                }
                if i.abs_diff(j) > 1 {
                    tridiagonal = false;
                }
            }
        }
        let irreducible_tridiagonal = tridiagonal
            && (1..=d).all(|i| !self.at(i, i - 1).is_zero() && !self.at(i - 1, i).is_zero());
        ShapeReport {
            diagonal,
            lower_bidiagonal,
            upper_bidiagonal,
            tridiagonal,
            irreducible_tridiagonal,
        }
    }

    /// The common row sum if all rows sum to the same scalar.
    pub fn constant_row_sum(&self) -> Option<F> {
        let ctx = self.ctx();
        let mut sums = self.rows().map(|row| {
            row.iter()
                .fold(F::zero(&ctx), |acc, x| acc + x.clone())
        });
        let first = sums.next().expect("matrices are nonempty");
        if sums.all(|s| s == first) {
            Some(first)
        } else {
            None
        }
    }

    /// Conjugation by the invertible diagonal matrix with the given entries:
    /// returns `D * self * D^{-1}`. Preserves the diagonal and all products
    /// of opposite off-diagonal pairs.
    pub fn diag_conjugate(&self, scales: &[F]) -> Result<Self, MatrixError> {
        if scales.len() != self.dim {
            return Err(MatrixError::SizeMismatch);
        }
        if scales.iter().any(|s| s.is_zero()) {
            return Err(MatrixError::ZeroScale);
        }
        let mut out = self.clone();
        for i in 0..self.dim {
            for j in 0..self.dim {
                *out.at_mut(i, j) =
                    scales[i].clone() * self.at(i, j).clone() / scales[j].clone();
            }
        }
        Ok(out)
    }

    /// Spectral projectors of a multiplicity-free matrix with the given
    /// eigenvalue ordering:
    ///
    /// ```text
    /// E_i = prod_{j != i} (A - theta_j I) / (theta_i - theta_j)
    /// ```
    ///
    /// The construction is verified a posteriori: the projectors must satisfy
    /// `A E_i = theta_i E_i`, `E_i E_j = delta_ij E_i`, `sum E_i = I` and
    /// `A = sum theta_i E_i`, otherwise the eigenvalues were not the exact
    /// spectrum and `NotMultiplicityFree` is returned.
    pub fn primitive_idempotents(&self, eigs: &[F]) -> Result<Vec<Matrix<F>>, MatrixError> {
        let n = self.dim;
        if eigs.len() != n {
            return Err(MatrixError::SizeMismatch);
        }
        if !pairwise_distinct(eigs) {
            return Err(MatrixError::NotMultiplicityFree);
        }
        let ctx = self.ctx();
        let identity = Matrix::identity(n, &ctx);
        let mut projectors = Vec::with_capacity(n);
        for i in 0..n {
            let mut acc = identity.clone();
            for (j, theta_j) in eigs.iter().enumerate() {
                if j == i {
                    continue;
                }
                let shifted = self
                    .checked_sub(&identity.scale(theta_j))
                    .expect("same dimension");
                let denom = eigs[i].clone() - theta_j.clone();
                acc = acc
                    .checked_mul(&shifted)
                    .expect("same dimension")
                    .scale(&denom.inv().expect("eigenvalues are distinct"));
            }
            projectors.push(acc);
        }
        // a-posteriori verification of the four projector identities
        let mut sum = Matrix::zero(n, &ctx);
        let mut recombined = Matrix::zero(n, &ctx);
        for (i, e) in projectors.iter().enumerate() {
            let ae = self.checked_mul(e).expect("same dimension");
            if ae != e.scale(&eigs[i]) {
                return Err(MatrixError::NotMultiplicityFree);
            }
            for (j, f) in projectors.iter().enumerate() {
                let prod = e.checked_mul(f).expect("same dimension");
                let expected = if i == j { e.clone() } else { Matrix::zero(n, &ctx) };
                if prod != expected {
                    return Err(MatrixError::NotMultiplicityFree);
                }
            }
            sum = sum.checked_add(e).expect("same dimension");
            recombined = recombined
                .checked_add(&e.scale(&eigs[i]))
                .expect("same dimension");
        }
        if sum != identity || recombined != *self {
            return Err(MatrixError::NotMultiplicityFree);
        }
        Ok(projectors)
    }
}

pub(crate) fn pairwise_distinct<F: PartialEq>(xs: &[F]) -> bool {
    for i in 0..xs.len() {
        for j in (i + 1)..xs.len() {
            if xs[i] == xs[j] {
                return false;
            }
        }
    }
    true
}

impl<F: Field> Add for &Matrix<F> {
    type Output = Matrix<F>;
    fn add(self, rhs: &Matrix<F>) -> Matrix<F> {
        self.checked_add(rhs).expect("matrix addition shape")
    }
}

impl<F: Field> Sub for &Matrix<F> {
    type Output = Matrix<F>;
    fn sub(self, rhs: &Matrix<F>) -> Matrix<F> {
        self.checked_sub(rhs).expect("matrix subtraction shape")
    }
}

impl<F: Field> Mul for &Matrix<F> {
    type Output = Matrix<F>;
    fn mul(self, rhs: &Matrix<F>) -> Matrix<F> {
        self.checked_mul(rhs).expect("matrix multiplication shape")
    }
}

impl<F: Field> fmt::Display for Matrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in self.rows() {
            let cells: Vec<String> = row.iter().map(|x| x.to_string()).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}
