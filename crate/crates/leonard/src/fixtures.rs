//! Built-in fixture arrays for the self-test command and the test suites.

use num_rational::BigRational;

use crate::field::{pow_i64, Field, Fp, FpCtx};
use crate::parray::{krawtchouk_array, ParameterArray, QRacahParams};

/// The Krawtchouk array of diameter `d`; panics when the characteristic is
/// too small, so callers pick admissible fields.
pub fn krawtchouk_fixture<F: Field>(d: usize, ctx: &F::Ctx) -> ParameterArray<F> {
    krawtchouk_array(d, ctx).expect("fixture characteristic admits this diameter")
}

/// The standard rational q-Racah parameters `(q, s, s*, r1, r2) =
/// (2, 1, 1, 1, 2^{d+1})`, admissible for every diameter.
pub fn qracah_rational_params(d: usize) -> QRacahParams<BigRational> {
    let two: BigRational = Field::from_i64(&(), 2);
    QRacahParams {
        d,
        q: two.clone(),
        s: Field::one(&()),
        s_star: Field::one(&()),
        r1: Field::one(&()),
        r2: pow_i64(&two, d as i64 + 1),
    }
}

/// Scans GF(p) for admissible q-Racah parameters of diameter `d`.
///
/// Beyond the admissibility clauses themselves, the scan insists that
/// `s q^m != 1` and `s* q^m != 1` for m in {1, 2d+1}, so the closed-form
/// weight expressions are well defined on the fixture. Returns the first
/// hit in scan order, or `None` when the field admits no such parameters
/// (small multiplicative groups rule out large diameters).
pub fn qracah_prime_params(d: usize, ctx: &FpCtx) -> Option<QRacahParams<Fp>> {
    let p = ctx.modulus();
    let one = Fp::one(ctx);
    for q_raw in 2..p {
        let q = Fp::new(ctx, q_raw);
        for s_raw in 1..p {
            let s = Fp::new(ctx, s_raw);
            for s_star_raw in 1..p {
                let s_star = Fp::new(ctx, s_star_raw);
                for r1_raw in 1..p {
                    let r1 = Fp::new(ctx, r1_raw);
                    let r2 = s * s_star * pow_i64(&q, d as i64 + 1) / r1;
                    if r2.is_zero() {
                        continue;
                    }
                    let params = QRacahParams {
                        d,
                        q,
                        s,
                        s_star,
                        r1,
                        r2,
                    };
                    if params.array().is_err() {
                        continue;
                    }
                    let degenerate = [1i64, 2 * d as i64 + 1].iter().any(|&m| {
                        s * pow_i64(&q, m) == one || s_star * pow_i64(&q, m) == one
                    });
                    if degenerate {
                        continue;
                    }
                    return Some(params);
                }
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_qracah_params_are_admissible() {
        for d in 0..=8 {
            let params = qracah_rational_params(d);
            let p = params.array().unwrap();
            assert!(p.validate().valid());
        }
    }

    #[test]
    fn gf13_scan_finds_small_diameters() {
        let gf13 = FpCtx::new(13).unwrap();
        for d in 1..=3 {
            let params = qracah_prime_params(d, &gf13).expect("GF(13) admits small diameters");
            assert!(params.array().unwrap().validate().valid());
        }
    }
}
