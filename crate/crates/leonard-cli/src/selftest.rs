//! The built-in invariant suite: runs the roundtrip, oracle, dihedral,
//! derived-identity and transition checks on the fixture families and
//! reports one line per invariant.

use leonard::fixtures::{krawtchouk_fixture, qracah_prime_params, qracah_rational_params};
use leonard::*;

struct Outcome {
    name: &'static str,
    failures: Vec<String>,
}

fn check<F: Field>(label: &str, p: &ParameterArray<F>, corrupt: bool, results: &mut [Outcome]) {
    let d = p.d();
    let record = |results: &mut [Outcome], idx: usize, ok: bool, label: &str| {
        if !ok {
            results[idx].failures.push(label.to_string());
        }
    };

    record(results, 0, p.validate().valid(), label);

    let lu = lb_ub(p).expect("fixture is valid");
    let lbub_ok = recognize_lbub(&lu.a, &lu.a_star).arrays == vec![p.clone()];
    record(results, 1, lbub_ok, label);

    let td = td_d(p).expect("fixture is valid");
    let mut a = td.a.clone();
    if corrupt {
        let bump = F::one(&a.ctx());
        *a.at_mut(0, 0) = a.at(0, 0).clone() + bump;
    }
    let tdd_ok = match recognize_tdd(&a, &td.a_star) {
        Err(_) => false,
        Ok(report) => {
            if d == 0 {
                report.arrays == vec![p.clone()]
            } else {
                let pd = p.d4_act(&[D4Gen::DDown]).expect("valid");
                report.arrays.len() == 2
                    && report.arrays.contains(p)
                    && report.arrays.contains(&pd)
            }
        }
    };
    record(results, 2, tdd_ok, label);

    let oracle_ok = verify_leonard_oracle(&td.a, &td.a_star, p.theta(), p.theta_star())
        == Ok(true)
        && verify_leonard_oracle(&lu.a, &lu.a_star, p.theta(), p.theta_star()) == Ok(true);
    record(results, 3, oracle_ok, label);

    use D4Gen::*;
    let act = |word: &[D4Gen]| p.d4_act(word).expect("valid");
    let d4_ok = act(&[Star, Star]) == *p
        && act(&[Down, Down]) == *p
        && act(&[DDown, DDown]) == *p
        && act(&[DDown, Star]) == act(&[Star, Down])
        && act(&[Down, Star]) == act(&[Star, DDown])
        && act(&[Down, DDown]) == act(&[DDown, Down]);
    record(results, 4, d4_ok, label);

    let derived_ok = d == 0 || p.derived_identities() == Ok(true);
    record(results, 5, derived_ok, label);

    let transition_ok = match transition_matrices(p) {
        Err(_) => false,
        Ok(data) => {
            let ctx = p.ctx();
            let one = F::one(&ctx);
            let first_cols =
                (0..=d).all(|i| *data.p_mat.at(i, 0) == one && *data.p_star_mat.at(i, 0) == one);
            let product = data.p_mat.checked_mul(&data.p_star_mat).expect("same size");
            first_cols
                && product == Matrix::identity(d + 1, &ctx).scale(&data.nu)
                && intertwine_check(p) == Ok(true)
        }
    };
    record(results, 6, transition_ok, label);
}

/// Runs every invariant over the built-in fixtures; prints one line per
/// invariant and returns the process exit code. `corrupt` perturbs one TD
/// matrix entry to demonstrate a failing run.
pub fn run(corrupt: bool) -> i32 {
    let mut results = [
        Outcome { name: "validate", failures: vec![] },
        Outcome { name: "roundtrip-lbub", failures: vec![] },
        Outcome { name: "roundtrip-tdd", failures: vec![] },
        Outcome { name: "oracle-agreement", failures: vec![] },
        Outcome { name: "d4-relations", failures: vec![] },
        Outcome { name: "derived-identities", failures: vec![] },
        Outcome { name: "transition-identities", failures: vec![] },
    ];

    for d in 1..=6usize {
        let p = krawtchouk_fixture::<BigRational>(d, &());
        // corruption targets a single fixture so exactly one invariant trips
        let corrupt_here = corrupt && d == 2;
        check(&format!("krawtchouk d={d} rational"), &p, corrupt_here, &mut results);
    }
    let gf13 = FpCtx::new(13).unwrap();
    for d in 1..=6usize {
        let p = krawtchouk_fixture::<Fp>(d, &gf13);
        check(&format!("krawtchouk d={d} gf(13)"), &p, false, &mut results);
    }
    for d in 1..=3usize {
        let p = qracah_rational_params(d).array().expect("admissible");
        check(&format!("q-racah d={d} rational"), &p, false, &mut results);
    }
    for d in 1..=2usize {
        if let Some(params) = qracah_prime_params(d, &gf13) {
            let p = params.array().expect("scanned");
            check(&format!("q-racah d={d} gf(13)"), &p, false, &mut results);
        }
    }

    let mut code = 0;
    for outcome in &results {
        if outcome.failures.is_empty() {
            println!("{}: pass", outcome.name);
        } else {
            code = 1;
            println!("{}: FAIL ({})", outcome.name, outcome.failures.join(", "));
        }
    }
    code
}
