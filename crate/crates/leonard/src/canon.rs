//! The four canonical-form constructors and the matrix-pair shape
//! predicates.
//!
//! A valid parameter array determines two matrix realizations of its Leonard
//! pair: the LB-UB form (lower bidiagonal with unit subdiagonal, upper
//! bidiagonal) and the TD-D form (irreducible tridiagonal with constant row
//! sum `theta_0`, diagonal). Both constructors are bijections from parameter
//! arrays to canonical pairs, so each pair caches its source array.

use crate::field::Field;
use crate::matrix::Matrix;
use crate::parray::{ArrayError, ParameterArray};

/// Which canonical form a pair is in.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Form {
    LbUb,
    TdD,
}

/// A matrix pair in canonical form together with the array it came from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CanonicalPair<F> {
    pub a: Matrix<F>,
    pub a_star: Matrix<F>,
    pub form: Form,
    pub source: ParameterArray<F>,
}

/// The LB-UB realization: `a` is lower bidiagonal with diagonal
/// `theta_0..theta_d` and unit subdiagonal; `a_star` is upper bidiagonal
/// with diagonal `theta*_0..theta*_d` and superdiagonal
/// `varphi_1..varphi_d`.
pub fn lb_ub<F: Field>(p: &ParameterArray<F>) -> Result<CanonicalPair<F>, ArrayError> {
    if !p.validate().valid() {
        return Err(ArrayError::InvalidInput);
    }
    let d = p.d();
    let ctx = p.ctx();
    let mut a = Matrix::zero(d + 1, &ctx);
    let mut a_star = Matrix::zero(d + 1, &ctx);
    for i in 0..=d {
        *a.at_mut(i, i) = p.theta()[i].clone();
        *a_star.at_mut(i, i) = p.theta_star()[i].clone();
    }
    for i in 1..=d {
        *a.at_mut(i, i - 1) = F::one(&ctx);
        *a_star.at_mut(i - 1, i) = p.varphi_at(i);
    }
    Ok(CanonicalPair {
        a,
        a_star,
        form: Form::LbUb,
        source: p.clone(),
    })
}

/// Diagonal entry of the TD realization; the boundary terms vanish because
/// `varphi_0 = varphi_{d+1} = 0`.
pub(crate) fn td_diagonal_entry<F: Field>(p: &ParameterArray<F>, i: usize) -> F {
    let d = p.d();
    let ts = p.theta_star();
    let mut value = p.theta()[i].clone();
    if i >= 1 {
        value = value + p.varphi_at(i) / (ts[i].clone() - ts[i - 1].clone());
    }
    if i < d {
        value = value + p.varphi_at(i + 1) / (ts[i].clone() - ts[i + 1].clone());
    }
    value
}

/// Superdiagonal entry `(i-1, i)` of the TD realization, `1 <= i <= d`.
pub(crate) fn td_superdiagonal_entry<F: Field>(p: &ParameterArray<F>, i: usize) -> F {
    let ts = p.theta_star();
    let ctx = p.ctx();
    let mut num = F::one(&ctx);
    for h in 0..i.saturating_sub(1) {
        num = num * (ts[i - 1].clone() - ts[h].clone());
    }
    let mut den = F::one(&ctx);
    for h in 0..i {
        den = den * (ts[i].clone() - ts[h].clone());
    }
    p.varphi_at(i) * num / den
}

/// Subdiagonal entry `(i, i-1)` of the TD realization, `1 <= i <= d`.
pub(crate) fn td_subdiagonal_entry<F: Field>(p: &ParameterArray<F>, i: usize) -> F {
    let d = p.d();
    let ts = p.theta_star();
    let ctx = p.ctx();
    let mut num = F::one(&ctx);
    for h in (i + 1)..=d {
        num = num * (ts[i].clone() - ts[h].clone());
    }
    let mut den = F::one(&ctx);
    for h in i..=d {
        den = den * (ts[i - 1].clone() - ts[h].clone());
    }
    p.phi_at(i) * num / den
}

/// Right-hand side of the off-diagonal product criterion at row `i`:
///
/// ```text
/// varphi_i phi_i  prod_{h=0}^{i-2} (th*_{i-1}-th*_h)   prod_{h=i+1}^{d} (th*_i-th*_h)
///                 ----------------------------------- -------------------------------
///                 prod_{h=0}^{i-1} (th*_i-th*_h)       prod_{h=i}^{d} (th*_{i-1}-th*_h)
/// ```
///
/// Evaluated literally, independently of the entry constructors above.
pub(crate) fn cross_product_rhs<F: Field>(p: &ParameterArray<F>, i: usize) -> F {
    let d = p.d();
    let ts = p.theta_star();
    let ctx = p.ctx();
    let mut value = p.varphi_at(i) * p.phi_at(i);
    let mut num = F::one(&ctx);
    let mut den = F::one(&ctx);
    for h in 0..=d {
        if h + 2 <= i {
            num = num * (ts[i - 1].clone() - ts[h].clone());
        }
        if h < i {
            den = den * (ts[i].clone() - ts[h].clone());
        }
        if h > i {
            num = num * (ts[i].clone() - ts[h].clone());
        }
        if h >= i {
            den = den * (ts[i - 1].clone() - ts[h].clone());
        }
    }
    value = value * num / den;
    value
}

/// The TD-D realization: `a` is irreducible tridiagonal with constant row
/// sum `theta_0`; `a_star = diag(theta*_0, ..., theta*_d)`.
pub fn td_d<F: Field>(p: &ParameterArray<F>) -> Result<CanonicalPair<F>, ArrayError> {
    if !p.validate().valid() {
        return Err(ArrayError::InvalidInput);
    }
    let d = p.d();
    let ctx = p.ctx();
    let mut a = Matrix::zero(d + 1, &ctx);
    for i in 0..=d {
        *a.at_mut(i, i) = td_diagonal_entry(p, i);
    }
    for i in 1..=d {
        *a.at_mut(i - 1, i) = td_superdiagonal_entry(p, i);
        *a.at_mut(i, i - 1) = td_subdiagonal_entry(p, i);
    }
    let a_star = Matrix::diagonal(p.theta_star());
    Ok(CanonicalPair {
        a,
        a_star,
        form: Form::TdD,
        source: p.clone(),
    })
}

/// Shape-only predicate for the LB-UB canonical form: `a` lower bidiagonal
/// with unit subdiagonal, `a_star` upper bidiagonal. Whether the pair is an
/// actual Leonard pair is decided by recognition.
pub fn is_lbub_canonical<F: Field>(a: &Matrix<F>, a_star: &Matrix<F>) -> bool {
    if a.dim() != a_star.dim() {
        return false;
    }
    let ctx = a.ctx();
    let one = F::one(&ctx);
    a.shape().lower_bidiagonal
        && a_star.shape().upper_bidiagonal
        && (1..=a.d()).all(|i| *a.at(i, i - 1) == one)
}

/// Shape-only predicate for the TD-D canonical form: `a` tridiagonal with
/// some constant row sum, `a_star` diagonal with distinct diagonal entries.
pub fn is_tdd_canonical_shape<F: Field>(a: &Matrix<F>, a_star: &Matrix<F>) -> bool {
    if a.dim() != a_star.dim() {
        return false;
    }
    a.shape().tridiagonal
        && a_star.shape().diagonal
        && crate::matrix::pairwise_distinct(&a_star.diagonal_entries())
        && a.constant_row_sum().is_some()
}

/// Consistency between the TD entry constructors and the off-diagonal
/// product criterion: for every valid array the product of opposite
/// off-diagonal entries equals the literal criterion value at each row.
/// True for every valid array with `d >= 1`.
pub fn cross_product_check<F: Field>(p: &ParameterArray<F>) -> Result<bool, ArrayError> {
    if p.d() < 1 {
        return Err(ArrayError::InvalidInput);
    }
    let pair = td_d(p)?;
    for i in 1..=p.d() {
        let lhs = pair.a.at(i, i - 1).clone() * pair.a.at(i - 1, i).clone();
        if lhs != cross_product_rhs(p, i) {
            return Ok(false);
        }
    }
    Ok(true)
}
