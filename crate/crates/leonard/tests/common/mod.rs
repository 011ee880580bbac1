//! Shared generators for the property and acceptance suites.

use leonard::fixtures::{krawtchouk_fixture, qracah_prime_params, qracah_rational_params};
use leonard::{BigRational, D4Gen, Field, Fp, FpCtx, ParameterArray, QRacahParams};
use proptest::prelude::*;

pub fn q(n: i64) -> BigRational {
    Field::from_i64(&(), n)
}

pub fn qr(n: i64, d: i64) -> BigRational {
    q(n) / q(d)
}

pub fn arb_rational() -> impl Strategy<Value = BigRational> {
    (-12i64..=12, 1i64..=6).prop_map(|(n, d)| qr(n, d))
}

pub fn arb_nonzero_rational() -> impl Strategy<Value = BigRational> {
    arb_rational().prop_filter("nonzero", |x| !x.is_zero())
}

pub fn arb_d4_word() -> impl Strategy<Value = Vec<D4Gen>> {
    prop::collection::vec(
        prop_oneof![Just(D4Gen::Star), Just(D4Gen::Down), Just(D4Gen::DDown)],
        0..4,
    )
}

/// A random valid array over the rationals: a family fixture moved around
/// its dihedral orbit and rescaled by a random affine map.
pub fn arb_valid_rational_array() -> impl Strategy<Value = ParameterArray<BigRational>> {
    (
        0usize..=5,
        any::<bool>(),
        arb_d4_word(),
        arb_nonzero_rational(),
        arb_rational(),
        arb_nonzero_rational(),
        arb_rational(),
    )
        .prop_map(|(d, use_qracah, word, alpha, beta, alpha_star, beta_star)| {
            let base = if use_qracah {
                qracah_rational_params(d).array().expect("fixture params")
            } else {
                krawtchouk_fixture(d, &())
            };
            base.d4_act(&word)
                .expect("fixtures are valid")
                .affine(&alpha, &beta, &alpha_star, &beta_star)
                .expect("nonzero scales")
        })
}

pub fn gf13() -> FpCtx {
    FpCtx::new(13).unwrap()
}

/// Diameters over GF(13) for which the q-Racah scan succeeds.
pub fn gf13_qracah_params(d: usize) -> Option<QRacahParams<Fp>> {
    qracah_prime_params(d, &gf13())
}

pub fn arb_valid_gf13_array() -> impl Strategy<Value = ParameterArray<Fp>> {
    (
        0usize..=6,
        any::<bool>(),
        arb_d4_word(),
        1u64..=12,
        0u64..=12,
        1u64..=12,
        0u64..=12,
    )
        .prop_map(|(d, use_qracah, word, alpha, beta, alpha_star, beta_star)| {
            let ctx = gf13();
            let base = match (use_qracah, gf13_qracah_params(d)) {
                (true, Some(params)) => params.array().expect("scanned params"),
                _ => krawtchouk_fixture(d, &ctx),
            };
            base.d4_act(&word)
                .expect("fixtures are valid")
                .affine(
                    &Fp::new(&ctx, alpha),
                    &Fp::new(&ctx, beta),
                    &Fp::new(&ctx, alpha_star),
                    &Fp::new(&ctx, beta_star),
                )
                .expect("nonzero scales")
        })
}
