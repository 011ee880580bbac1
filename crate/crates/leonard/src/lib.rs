//! Exact-arithmetic construction, recognition, normalization and
//! cross-verification of Leonard pairs: pairs of matrices that are
//! tridiagonal/diagonal in each other's eigenbases.
//!
//! A Leonard system is classified up to isomorphism by its parameter array
//! `(theta_i, theta*_i; varphi_j, phi_j)`. This crate implements the array
//! machinery ([`parray`]), the LB-UB and TD-D canonical matrix forms
//! ([`canon`]), recognition procedures that recover the array from a matrix
//! pair ([`recognize`]), and the transition matrices between the canonical
//! bases with their hypergeometric specializations ([`transition`]).
//!
//! Core types are generic over the [`field::Field`] scalar trait; the two
//! built-in instantiations are arbitrary-precision rationals and GF(p).
//!
//! ```
//! use leonard::{krawtchouk_array, recognize_tdd, td_d, BigRational, D4Gen};
//!
//! // build a family array, realize it as a (tridiagonal, diagonal) pair,
//! // and recover it by recognition
//! let p = krawtchouk_array::<BigRational>(3, &()).unwrap();
//! let pair = td_d(&p).unwrap();
//! let report = recognize_tdd(&pair.a, &pair.a_star).unwrap();
//! assert!(report.accepted());
//! assert!(report.arrays.contains(&p));
//! assert!(report.arrays.contains(&p.d4_act(&[D4Gen::DDown]).unwrap()));
//! ```

pub mod canon;
pub mod field;
pub mod fixtures;
pub mod matrix;
pub mod parray;
pub mod recognize;
pub mod transition;

pub use canon::{
    cross_product_check, is_lbub_canonical, is_tdd_canonical_shape, lb_ub, td_d, CanonicalPair,
    Form,
};
pub use field::{
    arith, solve_quadratic, BinOp, Field, FieldError, FieldSpec, Fp, FpCtx, QuadraticRoots,
};
pub use matrix::{Matrix, MatrixError, ShapeReport};
pub use parray::{
    krawtchouk_array, qracah_array, ArrayError, Condition, D4Gen, ParameterArray, QRacahParams,
    ValidationReport, Violation,
};
pub use recognize::{
    compute_eps_alpha, recognize_lbub, recognize_tdd, verify_leonard_oracle, RecognitionReport,
    RecognitionWork, RejectReason,
};
pub use transition::{
    hyper_2f1, hyper_4phi3, intertwine_check, pochhammer, q_pochhammer, qracah_weights, script_p,
    script_p_full, transition_matrices, weights, TransitionData,
};

pub use num_rational::BigRational;

/// Dense matrix over the rationals.
pub type RationalMatrix = Matrix<BigRational>;
/// Parameter array over the rationals.
pub type RationalParameterArray = ParameterArray<BigRational>;
/// Dense matrix over GF(p).
pub type PrimeMatrix = Matrix<Fp>;
/// Parameter array over GF(p).
pub type PrimeParameterArray = ParameterArray<Fp>;

#[cfg(test)]
mod thread_safety {
    use super::*;

    fn assert_send_sync<T: Send + Sync>() {}

    #[test]
    fn values_are_shareable() {
        assert_send_sync::<RationalMatrix>();
        assert_send_sync::<RationalParameterArray>();
        assert_send_sync::<PrimeMatrix>();
        assert_send_sync::<PrimeParameterArray>();
        assert_send_sync::<RecognitionReport<BigRational>>();
        assert_send_sync::<TransitionData<Fp>>();
    }
}
