//! Deciding whether a matrix pair is a Leonard pair in the two supported
//! shapes, extracting its designated parameter arrays, and independently
//! verifying pairs through the spectral-projector adjacency pattern.
//!
//! The LB-UB recognizer reads the array straight off the matrix entries.
//! The TD-D recognizer first recovers the extreme eigenvalues as roots of a
//! quadratic, then rebuilds the interior of the array by recursion, and
//! finally verifies the candidate against the actual matrix entries.

use std::fmt;

use crate::canon::{cross_product_rhs, td_diagonal_entry};
use crate::field::{solve_quadratic, Field, FieldError, QuadraticRoots};
use crate::matrix::{pairwise_distinct, Matrix, MatrixError};
use crate::parray::{inversion_partial_sums, ParameterArray};

/// Structured reasons a pair is not recognized.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RejectReason {
    /// The matrices do not have the required shapes or sizes.
    BadShape,
    /// The diagonal of the would-be dual matrix has a repeated entry.
    RepeatedDualEigenvalue,
    /// The extreme-eigenvalue quadratic has no roots in the field.
    QuadraticNoRootsInField,
    /// The extreme-eigenvalue quadratic has a double root.
    QuadraticDoubleRoot,
    /// The split-sequence recursion fails to close on the endpoint value.
    RecursionInconsistent,
    /// The assembled sequence fails the classification conditions.
    ValidationFailed,
    /// The candidate array does not reproduce the matrix entries.
    EntryMismatch,
    /// A would-be off-diagonal product is zero.
    ZeroOffdiagonal,
}

impl fmt::Display for RejectReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            RejectReason::BadShape => "BadShape",
            RejectReason::RepeatedDualEigenvalue => "RepeatedDualEigenvalue",
            RejectReason::QuadraticNoRootsInField => "QuadraticNoRootsInField",
            RejectReason::QuadraticDoubleRoot => "QuadraticDoubleRoot",
            RejectReason::RecursionInconsistent => "RecursionInconsistent",
            RejectReason::ValidationFailed => "ValidationFailed",
            RejectReason::EntryMismatch => "EntryMismatch",
            RejectReason::ZeroOffdiagonal => "ZeroOffdiagonal",
        };
        write!(f, "{s}")
    }
}

/// Outcome of recognition. `arrays` holds the designated parameter arrays
/// found: one for LB-UB, up to two for TD-D (closed under reversal of the
/// eigenvalue sequence with swapped split sequences).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RecognitionReport<F> {
    pub arrays: Vec<ParameterArray<F>>,
    pub reject_reason: Option<RejectReason>,
}

impl<F> RecognitionReport<F> {
    pub fn accepted(&self) -> bool {
        !self.arrays.is_empty()
    }

    fn reject(reason: RejectReason) -> Self {
        RecognitionReport {
            arrays: Vec::new(),
            reject_reason: Some(reason),
        }
    }

    fn accept(arrays: Vec<ParameterArray<F>>) -> Self {
        RecognitionReport {
            arrays,
            reject_reason: None,
        }
    }
}

/// Working scalars of the TD-D procedure: the quadratic normalizers and the
/// partial-sum sequence over the dual eigenvalues, with `vartheta_0 = 0`,
/// `vartheta_1 = 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RecognitionWork<F> {
    pub epsilon: F,
    pub alpha: F,
    pub vartheta: Vec<F>,
}

/// Recognizes a (lower bidiagonal, upper bidiagonal) pair.
///
/// The diagonals are the eigenvalue data, the products
/// `a_{i,i-1} a*_{i-1,i}` are the first split sequence, and the second
/// split sequence follows from the classification conditions. Exactly one
/// array is returned on acceptance: the designated one.
pub fn recognize_lbub<F: Field>(a: &Matrix<F>, a_star: &Matrix<F>) -> RecognitionReport<F> {
    if a.dim() != a_star.dim() || a.ctx() != a_star.ctx() {
        return RecognitionReport::reject(RejectReason::BadShape);
    }
    if !a.shape().lower_bidiagonal || !a_star.shape().upper_bidiagonal {
        return RecognitionReport::reject(RejectReason::BadShape);
    }
    let d = a.d();
    let theta = a.diagonal_entries();
    let theta_star = a_star.diagonal_entries();
    let varphi: Vec<F> = (1..=d)
        .map(|i| a.at(i, i - 1).clone() * a_star.at(i - 1, i).clone())
        .collect();
    if varphi.iter().any(|v| v.is_zero()) {
        return RecognitionReport::reject(RejectReason::ZeroOffdiagonal);
    }
    if !pairwise_distinct(&theta) || !pairwise_distinct(&theta_star) {
        return RecognitionReport::reject(RejectReason::ValidationFailed);
    }
    let phi = match second_split_from_first(&theta, &theta_star, &varphi) {
        Some(phi) => phi,
        None => return RecognitionReport::reject(RejectReason::ValidationFailed),
    };
    let p = ParameterArray::new(theta, theta_star, varphi, phi).expect("lengths by construction");
    if p.validate().valid() {
        RecognitionReport::accept(vec![p])
    } else {
        RecognitionReport::reject(RejectReason::ValidationFailed)
    }
}

/// `phi_i = varphi_1 S_i + (theta*_i - theta*_0)(theta_{d-i+1} - theta_0)`,
/// the fourth classification condition solved for the second split sequence.
fn second_split_from_first<F: Field>(
    theta: &[F],
    theta_star: &[F],
    varphi: &[F],
) -> Option<Vec<F>> {
    let d = theta.len() - 1;
    if d == 0 {
        return Some(Vec::new());
    }
    let sums = inversion_partial_sums(theta)?;
    Some(
        (1..=d)
            .map(|i| {
                varphi[0].clone() * sums[i].clone()
                    + (theta_star[i].clone() - theta_star[0].clone())
                        * (theta[d - i + 1].clone() - theta[0].clone())
            })
            .collect(),
    )
}

/// The quadratic normalizers for the TD-D procedure.
///
/// For `d = 1`, `epsilon = 1` and `alpha = a_{11}`. For `d >= 2`,
///
/// ```text
/// epsilon = prod_{h=2}^{d} (theta*_1 - theta*_h) / (theta*_0 - theta*_h)
/// alpha   = a_11 (th*_1-th*_2)/(th*_0-th*_2)
///         - a_00 (th*_1-th*_d)/(th*_0-th*_2) (th*_0-th*_1)/(th*_0-th*_d)
///         + a_dd (th*_{d-1}-th*_d)/(th*_0-th*_2) (th*_0-th*_1)/(th*_0-th*_d)
/// ```
pub fn compute_eps_alpha<F: Field>(
    a: &Matrix<F>,
    theta_star: &[F],
) -> Result<RecognitionWork<F>, RejectReason> {
    let d = a.d();
    assert!(d >= 1, "the quadratic normalizers require d >= 1");
    assert_eq!(theta_star.len(), d + 1);
    if !pairwise_distinct(theta_star) {
        return Err(RejectReason::RepeatedDualEigenvalue);
    }
    let ctx = a.ctx();
    let vartheta = inversion_partial_sums(theta_star).expect("distinct endpoints");
    if d == 1 {
        return Ok(RecognitionWork {
            epsilon: F::one(&ctx),
            alpha: a.at(1, 1).clone(),
            vartheta,
        });
    }
    let ts = theta_star;
    let mut epsilon = F::one(&ctx);
    for h in 2..=d {
        epsilon = epsilon * (ts[1].clone() - ts[h].clone()) / (ts[0].clone() - ts[h].clone());
    }
    let ratio01 =
        (ts[0].clone() - ts[1].clone()) / (ts[0].clone() - ts[d].clone());
    let span02 = ts[0].clone() - ts[2].clone();
    let alpha = a.at(1, 1).clone() * (ts[1].clone() - ts[2].clone()) / span02.clone()
        - a.at(0, 0).clone() * (ts[1].clone() - ts[d].clone()) / span02.clone() * ratio01.clone()
        + a.at(d, d).clone() * (ts[d - 1].clone() - ts[d].clone()) / span02 * ratio01;
    Ok(RecognitionWork {
        epsilon,
        alpha,
        vartheta,
    })
}

/// Recognizes a (tridiagonal, diagonal) pair.
///
/// No constant row sum is required of the input: the verification step uses
/// only the diagonal and the products of opposite off-diagonal entries,
/// which are diagonal-conjugation invariants. Both orderings of the
/// recovered extreme eigenvalues are attempted and every surviving array is
/// returned; when the input does have a constant row sum it equals
/// `theta_0` of one returned array and `theta_d` of the other.
///
/// The only error is `CharTwoUnsupported`, from the quadratic step over
/// GF(2); every other failure is reported in the `reject_reason`.
pub fn recognize_tdd<F: Field>(
    a: &Matrix<F>,
    a_star: &Matrix<F>,
) -> Result<RecognitionReport<F>, FieldError> {
    if a.dim() != a_star.dim() || a.ctx() != a_star.ctx() {
        return Ok(RecognitionReport::reject(RejectReason::BadShape));
    }
    if !a.shape().tridiagonal || !a_star.shape().diagonal {
        return Ok(RecognitionReport::reject(RejectReason::BadShape));
    }
    let d = a.d();
    let theta_star = a_star.diagonal_entries();
    if !pairwise_distinct(&theta_star) {
        return Ok(RecognitionReport::reject(
            RejectReason::RepeatedDualEigenvalue,
        ));
    }
    if d == 0 {
        let p = ParameterArray::new(
            vec![a.at(0, 0).clone()],
            vec![theta_star[0].clone()],
            vec![],
            vec![],
        )
        .expect("lengths by construction");
        return Ok(RecognitionReport::accept(vec![p]));
    }
    let work = match compute_eps_alpha(a, &theta_star) {
        Ok(work) => work,
        Err(reason) => return Ok(RecognitionReport::reject(reason)),
    };
    let ctx = a.ctx();
    let alpha_over_eps = work.alpha.clone() / work.epsilon.clone();
    let corner = a.at(1, 0).clone() * a.at(0, 1).clone() / work.epsilon.clone();
    let one = F::one(&ctx);
    let b = -(a.at(0, 0).clone() + alpha_over_eps.clone());
    let c = a.at(0, 0).clone() * alpha_over_eps - corner;
    let (root_lo, root_hi) = match solve_quadratic(&one, &b, &c)? {
        QuadraticRoots::None => {
            return Ok(RecognitionReport::reject(
                RejectReason::QuadraticNoRootsInField,
            ))
        }
        QuadraticRoots::Double(_) => {
            return Ok(RecognitionReport::reject(RejectReason::QuadraticDoubleRoot))
        }
        QuadraticRoots::Distinct(r, s) => (r, s),
    };
    let mut arrays = Vec::new();
    let mut first_failure = None;
    for (theta_0, theta_d) in [
        (root_lo.clone(), root_hi.clone()),
        (root_hi, root_lo),
    ] {
        match extract_ordering(a, &theta_star, &work.vartheta, theta_0, theta_d) {
            Ok(p) => arrays.push(p),
            Err(reason) => {
                first_failure.get_or_insert(reason);
            }
        }
    }
    if arrays.is_empty() {
        Ok(RecognitionReport::reject(
            first_failure.expect("both orderings failed"),
        ))
    } else {
        Ok(RecognitionReport::accept(arrays))
    }
}

/// Rebuilds the full parameter array for one ordering of the extreme
/// eigenvalues and verifies it against the matrix entries.
fn extract_ordering<F: Field>(
    a: &Matrix<F>,
    theta_star: &[F],
    vartheta: &[F],
    theta_0: F,
    theta_d: F,
) -> Result<ParameterArray<F>, RejectReason> {
    let d = a.d();
    let ts = theta_star;
    let a00 = a.at(0, 0).clone();
    let add = a.at(d, d).clone();

    // endpoint split values
    let varphi_1 = (a00.clone() - theta_0.clone()) * (ts[0].clone() - ts[1].clone());
    let varphi_d_end = (add.clone() - theta_d.clone()) * (ts[d].clone() - ts[d - 1].clone());
    let phi_1 = (a00.clone() - theta_d.clone()) * (ts[0].clone() - ts[1].clone());
    let phi_d = (add - theta_0.clone()) * (ts[d].clone() - ts[d - 1].clone());

    let mut varphi = vec![varphi_1.clone(); d];
    if d >= 2 {
        // forward recursion for the interior; the final step must reproduce
        // the endpoint value computed above
        let span = theta_0.clone() - theta_d.clone();
        for i in 1..=(d - 1) {
            let slope = (varphi[i - 1].clone() - phi_d.clone() * vartheta[i].clone())
                / (ts[i - 1].clone() - ts[d].clone())
                + span.clone();
            let next = phi_1.clone() * vartheta[i + 1].clone()
                + (ts[i + 1].clone() - ts[0].clone()) * slope;
            if i + 1 == d {
                if next != varphi_d_end {
                    return Err(RejectReason::RecursionInconsistent);
                }
                varphi[d - 1] = varphi_d_end.clone();
            } else {
                varphi[i] = next;
            }
        }
    }

    // interior eigenvalues
    let mut theta = vec![theta_0.clone(); d + 1];
    theta[d] = theta_d.clone();
    for i in 1..d {
        theta[i] = theta_0.clone()
            + (varphi[i - 1].clone() - phi_d.clone() * vartheta[i].clone())
                / (ts[i - 1].clone() - ts[d].clone());
    }
    if !pairwise_distinct(&theta) {
        return Err(RejectReason::ValidationFailed);
    }

    // interior of the second split sequence; for d = 1 the single entry is
    // the first endpoint value and the entry verification below pins it
    let mut phi = vec![phi_1.clone(); d];
    if d >= 2 {
        phi[d - 1] = phi_d.clone();
    }
    if d >= 3 {
        let sums = inversion_partial_sums(&theta).expect("distinct endpoints");
        for i in 2..d {
            phi[i - 1] = varphi_1.clone() * sums[i].clone()
                + (ts[i].clone() - ts[0].clone()) * (theta[d - i + 1].clone() - theta_0.clone());
        }
    }

    let p = ParameterArray::new(theta, theta_star.to_vec(), varphi, phi)
        .expect("lengths by construction");
    if !p.validate().valid() {
        return Err(RejectReason::ValidationFailed);
    }

    // verify against the actual matrix: diagonal entries and off-diagonal
    // products must match the TD realization of the candidate array
    for i in 0..=d {
        if *a.at(i, i) != td_diagonal_entry(&p, i) {
            return Err(RejectReason::EntryMismatch);
        }
    }
    for i in 1..=d {
        let product = a.at(i, i - 1).clone() * a.at(i - 1, i).clone();
        if product != cross_product_rhs(&p, i) {
            return Err(RejectReason::EntryMismatch);
        }
    }
    Ok(p)
}

/// The brute-force Leonard-pair verifier.
///
/// Builds the spectral projectors of both matrices from the claimed spectra
/// and checks the adjacency pattern in both directions: `E_i A* E_j` (and
/// `E*_i A E*_j`) must vanish exactly when `|i-j| > 1` and must not vanish
/// when `|i-j| = 1`.
pub fn verify_leonard_oracle<F: Field>(
    a: &Matrix<F>,
    a_star: &Matrix<F>,
    theta: &[F],
    theta_star: &[F],
) -> Result<bool, MatrixError> {
    let e = a.primitive_idempotents(theta)?;
    let e_star = a_star.primitive_idempotents(theta_star)?;
    Ok(adjacency_pattern(&e, a_star) && adjacency_pattern(&e_star, a))
}

fn adjacency_pattern<F: Field>(projectors: &[Matrix<F>], mid: &Matrix<F>) -> bool {
    let n = projectors.len();
    for i in 0..n {
        let left = projectors[i].checked_mul(mid).expect("same dimension");
        for (j, right) in projectors.iter().enumerate() {
            if i.abs_diff(j) == 0 {
                continue;
            }
            let block = left.checked_mul(right).expect("same dimension");
            let want_zero = i.abs_diff(j) > 1;
            if want_zero != block.is_zero() {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::{lb_ub, td_d};
    use crate::parray::{krawtchouk_array, D4Gen};
    use num_bigint::BigInt;
    use num_rational::BigRational;

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    fn qm(rows: &[&[i64]]) -> Matrix<BigRational> {
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&n| q(n)).collect()).collect())
            .unwrap()
    }

    fn half(n: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(2))
    }

    #[test]
    fn lbub_example_d2() {
        let a = qm(&[&[2, 0, 0], &[-1, 0, 0], &[0, -2, -2]]);
        let a_star = qm(&[&[2, 4, 0], &[0, 0, 2], &[0, 0, -2]]);
        let report = recognize_lbub(&a, &a_star);
        assert!(report.accepted());
        assert_eq!(report.arrays, vec![krawtchouk_array(2, &()).unwrap()]);
    }

    #[test]
    fn lbub_d0() {
        let a = Matrix::diagonal(&[q(5)]);
        let a_star = Matrix::diagonal(&[q(7)]);
        let report = recognize_lbub(&a, &a_star);
        assert!(report.accepted());
        assert_eq!(report.arrays[0].theta(), &[q(5)]);
        assert_eq!(report.arrays[0].theta_star(), &[q(7)]);
    }

    #[test]
    fn lbub_qracah_golden() {
        // lower/upper bidiagonal realization of the q-Racah family:
        // a_{i,i-1} = (1 - q^-i)(1 - r1 q^i), a*_{i-1,i} = (q^-d - q^{1-i})(1 - r2 q^i)
        use crate::field::pow_i64;
        use crate::parray::qracah_array;
        let d = 3usize;
        let di = d as i64;
        let qv = q(2);
        let (s, s_star, r1) = (q(1), q(1), q(1));
        let r2 = pow_i64(&qv, di + 1);
        let one = q(1);
        let mut a = Matrix::zero(d + 1, &());
        let mut a_star = Matrix::zero(d + 1, &());
        for i in 0..=di {
            *a.at_mut(i as usize, i as usize) = pow_i64(&qv, -i) + s.clone() * pow_i64(&qv, i + 1);
            *a_star.at_mut(i as usize, i as usize) =
                pow_i64(&qv, -i) + s_star.clone() * pow_i64(&qv, i + 1);
        }
        for i in 1..=di {
            *a.at_mut(i as usize, i as usize - 1) =
                (one.clone() - pow_i64(&qv, -i)) * (one.clone() - r1.clone() * pow_i64(&qv, i));
            *a_star.at_mut(i as usize - 1, i as usize) = (pow_i64(&qv, -di)
                - pow_i64(&qv, 1 - i))
                * (one.clone() - r2.clone() * pow_i64(&qv, i));
        }
        let report = recognize_lbub(&a, &a_star);
        assert!(report.accepted());
        assert_eq!(
            report.arrays,
            vec![qracah_array(d, qv, s, s_star, r1, r2).unwrap()]
        );
    }

    #[test]
    fn lbub_zero_offdiagonal() {
        let a = qm(&[&[1, 0], &[0, -1]]);
        let a_star = qm(&[&[1, 3], &[0, -1]]);
        let report = recognize_lbub(&a, &a_star);
        assert_eq!(report.reject_reason, Some(RejectReason::ZeroOffdiagonal));
    }

    #[test]
    fn lbub_roundtrip() {
        for d in 0..=6 {
            let p = krawtchouk_array::<BigRational>(d, &()).unwrap();
            let pair = lb_ub(&p).unwrap();
            let report = recognize_lbub(&pair.a, &pair.a_star);
            assert_eq!(report.arrays, vec![p]);
        }
    }

    #[test]
    fn eps_alpha_examples() {
        // zero-diagonal tridiagonal with dual eigenvalues (2, 0, -2)
        let a = qm(&[&[0, 2, 0], &[1, 0, 1], &[0, 2, 0]]);
        let work = compute_eps_alpha(&a, &[q(2), q(0), q(-2)]).unwrap();
        assert_eq!(work.epsilon, half(1));
        assert_eq!(work.alpha, q(0));
        assert_eq!(work.vartheta, vec![q(0), q(1), q(1)]);

        let a1 = qm(&[&[0, 1], &[1, 0]]);
        let work = compute_eps_alpha(&a1, &[q(1), q(-1)]).unwrap();
        assert_eq!(work.epsilon, q(1));
        assert_eq!(work.alpha, q(0));
    }

    #[test]
    fn tdd_example_d1() {
        let a = qm(&[&[0, 1], &[1, 0]]);
        let a_star = Matrix::diagonal(&[q(1), q(-1)]);
        let report = recognize_tdd(&a, &a_star).unwrap();
        assert!(report.accepted());
        let p = krawtchouk_array::<BigRational>(1, &()).unwrap();
        let pd = p.d4_act(&[D4Gen::DDown]).unwrap();
        assert_eq!(report.arrays.len(), 2);
        assert!(report.arrays.contains(&p));
        assert!(report.arrays.contains(&pd));
    }

    #[test]
    fn tdd_example_d2() {
        let a = qm(&[&[0, 2, 0], &[1, 0, 1], &[0, 2, 0]]);
        let a_star = Matrix::diagonal(&[q(2), q(0), q(-2)]);
        let report = recognize_tdd(&a, &a_star).unwrap();
        assert!(report.accepted());
        let p = krawtchouk_array::<BigRational>(2, &()).unwrap();
        let pd = p.d4_act(&[D4Gen::DDown]).unwrap();
        assert!(report.arrays.contains(&p));
        assert!(report.arrays.contains(&pd));
    }

    #[test]
    fn tdd_d0() {
        let a = Matrix::diagonal(&[q(5)]);
        let a_star = Matrix::diagonal(&[q(7)]);
        let report = recognize_tdd(&a, &a_star).unwrap();
        assert!(report.accepted());
        assert_eq!(report.arrays.len(), 1);
    }

    #[test]
    fn tdd_perturbed_quadratic() {
        // changing a_{01} from 2 to 3 turns the quadratic into x^2 - 6,
        // which has no rational roots
        let a = qm(&[&[0, 3, 0], &[1, 0, 1], &[0, 2, 0]]);
        let a_star = Matrix::diagonal(&[q(2), q(0), q(-2)]);
        let report = recognize_tdd(&a, &a_star).unwrap();
        assert_eq!(
            report.reject_reason,
            Some(RejectReason::QuadraticNoRootsInField)
        );
    }

    #[test]
    fn tdd_repeated_dual() {
        let a = qm(&[&[0, 1], &[1, 0]]);
        let a_star = Matrix::diagonal(&[q(3), q(3)]);
        let report = recognize_tdd(&a, &a_star).unwrap();
        assert_eq!(
            report.reject_reason,
            Some(RejectReason::RepeatedDualEigenvalue)
        );
    }

    #[test]
    fn tdd_bad_shape() {
        let a = qm(&[&[0, 0, 1], &[0, 0, 0], &[1, 0, 0]]);
        let a_star = Matrix::diagonal(&[q(1), q(2), q(3)]);
        let report = recognize_tdd(&a, &a_star).unwrap();
        assert_eq!(report.reject_reason, Some(RejectReason::BadShape));
    }

    #[test]
    fn oracle_accepts_krawtchouk() {
        let a = qm(&[&[0, 2, 0], &[1, 0, 1], &[0, 2, 0]]);
        let a_star = Matrix::diagonal(&[q(2), q(0), q(-2)]);
        let theta = vec![q(2), q(0), q(-2)];
        assert!(verify_leonard_oracle(&a, &a_star, &theta, &theta).unwrap());
    }

    #[test]
    fn oracle_rejects_commuting_diagonals() {
        let a = Matrix::diagonal(&[q(1), q(2)]);
        let a_star = Matrix::diagonal(&[q(3), q(4)]);
        assert!(!verify_leonard_oracle(&a, &a_star, &[q(1), q(2)], &[q(3), q(4)]).unwrap());
    }

    #[test]
    fn oracle_d0() {
        let a = Matrix::diagonal(&[q(5)]);
        let a_star = Matrix::diagonal(&[q(7)]);
        assert!(verify_leonard_oracle(&a, &a_star, &[q(5)], &[q(7)]).unwrap());
    }

    #[test]
    fn conjugation_invariance() {
        let p = krawtchouk_array::<BigRational>(3, &()).unwrap();
        let pair = td_d(&p).unwrap();
        let scales = vec![q(1), q(3), half(5), q(-2)];
        let conj = pair.a.diag_conjugate(&scales).unwrap();
        let report = recognize_tdd(&conj, &pair.a_star).unwrap();
        let base = recognize_tdd(&pair.a, &pair.a_star).unwrap();
        assert!(report.accepted());
        assert_eq!(report.arrays, base.arrays);
    }
}
