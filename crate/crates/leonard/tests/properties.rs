//! Property tests for the algebraic invariants: field axioms, the dihedral
//! action, canonical-form guarantees, recognition roundtrips and the
//! transition identities.

mod common;

use common::*;
use leonard::*;
use proptest::prelude::*;

// ---------------------------------------------------------------------------
// field axioms
// ---------------------------------------------------------------------------

fn arb_fp13() -> impl Strategy<Value = Fp> {
    (0u64..13).prop_map(|v| Fp::new(&gf13(), v))
}

macro_rules! field_axioms {
    ($name:ident, $strategy:expr) => {
        proptest! {
            #[test]
            fn $name((a, b, c) in ($strategy, $strategy, $strategy)) {
                let ctx = a.ctx();
                prop_assert_eq!(a.clone() + b.clone(), b.clone() + a.clone());
                prop_assert_eq!(a.clone() * b.clone(), b.clone() * a.clone());
                prop_assert_eq!(
                    (a.clone() + b.clone()) + c.clone(),
                    a.clone() + (b.clone() + c.clone())
                );
                prop_assert_eq!(
                    (a.clone() * b.clone()) * c.clone(),
                    a.clone() * (b.clone() * c.clone())
                );
                prop_assert_eq!(
                    a.clone() * (b.clone() + c.clone()),
                    a.clone() * b.clone() + a.clone() * c.clone()
                );
                prop_assert_eq!(a.clone() + (-a.clone()), Field::zero(&ctx));
                if !b.is_zero() {
                    prop_assert_eq!(b.clone() * b.inv().unwrap(), Field::one(&ctx));
                }
            }
        }
    };
}

field_axioms!(rational_field_axioms, arb_rational());
field_axioms!(gf13_field_axioms, arb_fp13());

// ---------------------------------------------------------------------------
// quadratic solver
// ---------------------------------------------------------------------------

proptest! {
    #[test]
    fn quadratic_roots_satisfy_equation(
        a in arb_nonzero_rational(),
        b in arb_rational(),
        c in arb_rational(),
    ) {
        let roots = solve_quadratic(&a, &b, &c).unwrap();
        for r in roots.roots() {
            let value = a.clone() * r.clone() * r.clone() + b.clone() * r.clone() + c.clone();
            prop_assert!(value.is_zero());
        }
        if let QuadraticRoots::Distinct(r, s) = roots {
            prop_assert_eq!(r.clone() + s.clone(), -(b.clone() / a.clone()));
            prop_assert_eq!(r * s, c / a);
        }
    }

    #[test]
    fn quadratic_roots_satisfy_equation_gf13(
        a in (1u64..13).prop_map(|v| Fp::new(&gf13(), v)),
        b in arb_fp13(),
        c in arb_fp13(),
    ) {
        let roots = solve_quadratic(&a, &b, &c).unwrap();
        for r in roots.roots() {
            prop_assert!((a * *r * *r + b * *r + c).is_zero());
        }
        if let QuadraticRoots::Distinct(r, s) = roots {
            prop_assert_eq!(r + s, -(b / a));
            prop_assert_eq!(r * s, c / a);
        }
    }

    #[test]
    fn quadratic_recovers_constructed_roots(
        r in arb_rational(),
        s in arb_rational(),
        scale in arb_nonzero_rational(),
    ) {
        // scale (x - r)(x - s)
        let b = -(r.clone() + s.clone()) * scale.clone();
        let c = r.clone() * s.clone() * scale.clone();
        let roots = solve_quadratic(&scale, &b, &c).unwrap();
        match roots {
            QuadraticRoots::None => prop_assert!(false, "constructed roots must be found"),
            QuadraticRoots::Double(x) => {
                prop_assert_eq!(&r, &s);
                prop_assert_eq!(x, r);
            }
            QuadraticRoots::Distinct(x, y) => {
                let (lo, hi) = if r <= s { (r, s) } else { (s, r) };
                prop_assert_eq!((x, y), (lo, hi));
            }
        }
    }
}

// ---------------------------------------------------------------------------
// matrices
// ---------------------------------------------------------------------------

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn idempotents_verify_on_conjugated_td(p in arb_valid_rational_array(), seed in 1i64..100) {
        let pair = td_d(&p).unwrap();
        // conjugate by an arbitrary nonzero diagonal; spectrum is unchanged
        let scales: Vec<BigRational> =
            (0..=p.d()).map(|i| q(seed + i as i64)).collect();
        let conj = pair.a.diag_conjugate(&scales).unwrap();
        let es = conj.primitive_idempotents(p.theta()).unwrap();
        prop_assert_eq!(es.len(), p.d() + 1);
    }

    #[test]
    fn conjugation_preserves_diagonal_and_cross_products(
        p in arb_valid_rational_array(),
        seed in 1i64..50,
    ) {
        let a = td_d(&p).unwrap().a;
        let scales: Vec<BigRational> = (0..=p.d()).map(|i| qr(seed, 1 + i as i64)).collect();
        let b = a.diag_conjugate(&scales).unwrap();
        for i in 0..=p.d() {
            prop_assert_eq!(b.at(i, i), a.at(i, i));
            if i >= 1 {
                prop_assert_eq!(
                    b.at(i, i - 1).clone() * b.at(i - 1, i).clone(),
                    a.at(i, i - 1).clone() * a.at(i - 1, i).clone()
                );
            }
        }
    }
}

// ---------------------------------------------------------------------------
// dihedral action and derived identities
// ---------------------------------------------------------------------------

fn d4_relations_hold<F: Field>(p: &ParameterArray<F>) -> bool {
    use D4Gen::*;
    let act = |word: &[D4Gen]| p.d4_act(word).expect("valid input");
    act(&[Star, Star]) == *p
        && act(&[Down, Down]) == *p
        && act(&[DDown, DDown]) == *p
        && act(&[DDown, Star]) == act(&[Star, Down])
        && act(&[Down, Star]) == act(&[Star, DDown])
        && act(&[Down, DDown]) == act(&[DDown, Down])
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn d4_relations_rational(p in arb_valid_rational_array()) {
        prop_assert!(d4_relations_hold(&p));
    }

    #[test]
    fn d4_relations_gf13(p in arb_valid_gf13_array()) {
        prop_assert!(d4_relations_hold(&p));
    }

    #[test]
    fn d4_images_stay_valid(p in arb_valid_rational_array(), word in arb_d4_word()) {
        let moved = p.d4_act(&word).unwrap();
        prop_assert!(moved.validate().valid());
    }

    #[test]
    fn orbit_size(p in arb_valid_rational_array()) {
        use D4Gen::*;
        let orbit = [
            p.clone(),
            p.d4_act(&[Down]).unwrap(),
            p.d4_act(&[DDown]).unwrap(),
            p.d4_act(&[Down, DDown]).unwrap(),
        ];
        if p.d() == 0 {
            prop_assert!(orbit.iter().all(|x| *x == p));
        } else {
            for i in 0..4 {
                for j in (i + 1)..4 {
                    prop_assert_ne!(&orbit[i], &orbit[j]);
                }
            }
        }
    }

    #[test]
    fn derived_identities_on_valid_arrays(p in arb_valid_rational_array()) {
        if p.d() >= 1 {
            prop_assert!(p.derived_identities().unwrap());
        }
    }

    #[test]
    fn affine_composes(
        p in arb_valid_rational_array(),
        a in arb_nonzero_rational(),
        b in arb_rational(),
        a2 in arb_nonzero_rational(),
        b2 in arb_rational(),
        c in arb_nonzero_rational(),
        e in arb_rational(),
        c2 in arb_nonzero_rational(),
        e2 in arb_rational(),
    ) {
        let twice = p
            .affine(&a, &b, &a2, &b2)
            .unwrap()
            .affine(&c, &e, &c2, &e2)
            .unwrap();
        let once = p
            .affine(
                &(c.clone() * a.clone()),
                &(c.clone() * b.clone() + e.clone()),
                &(c2.clone() * a2.clone()),
                &(c2.clone() * b2.clone() + e2.clone()),
            )
            .unwrap();
        prop_assert_eq!(twice, once);
    }
}

// ---------------------------------------------------------------------------
// canonical forms and recognition
// ---------------------------------------------------------------------------

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn td_row_sum_and_irreducibility(p in arb_valid_rational_array()) {
        let pair = td_d(&p).unwrap();
        prop_assert_eq!(pair.a.constant_row_sum(), Some(p.theta()[0].clone()));
        if p.d() >= 1 {
            prop_assert!(pair.a.shape().irreducible_tridiagonal);
            prop_assert!(cross_product_check(&p).unwrap());
        }
    }

    #[test]
    fn tdd_of_ddown_shares_invariants(p in arb_valid_rational_array()) {
        if p.d() >= 1 {
            let pd = p.d4_act(&[D4Gen::DDown]).unwrap();
            let a = td_d(&p).unwrap();
            let b = td_d(&pd).unwrap();
            prop_assert_eq!(&a.a_star, &b.a_star);
            prop_assert_eq!(
                b.a.constant_row_sum(),
                Some(p.theta()[p.d()].clone())
            );
            for i in 1..=p.d() {
                prop_assert_eq!(
                    a.a.at(i, i - 1).clone() * a.a.at(i - 1, i).clone(),
                    b.a.at(i, i - 1).clone() * b.a.at(i - 1, i).clone()
                );
            }
        }
    }

    #[test]
    fn lbub_roundtrip_rational(p in arb_valid_rational_array()) {
        let pair = lb_ub(&p).unwrap();
        prop_assert!(is_lbub_canonical(&pair.a, &pair.a_star));
        let report = recognize_lbub(&pair.a, &pair.a_star);
        prop_assert_eq!(report.arrays, vec![p]);
    }

    #[test]
    fn tdd_roundtrip_rational(p in arb_valid_rational_array()) {
        let pair = td_d(&p).unwrap();
        let report = recognize_tdd(&pair.a, &pair.a_star).unwrap();
        prop_assert!(report.accepted());
        if p.d() == 0 {
            prop_assert_eq!(report.arrays, vec![p]);
        } else {
            let pd = p.d4_act(&[D4Gen::DDown]).unwrap();
            prop_assert_eq!(report.arrays.len(), 2);
            prop_assert!(report.arrays.contains(&p));
            prop_assert!(report.arrays.contains(&pd));
        }
    }

    #[test]
    fn lbub_roundtrip_gf13(p in arb_valid_gf13_array()) {
        let pair = lb_ub(&p).unwrap();
        let report = recognize_lbub(&pair.a, &pair.a_star);
        prop_assert_eq!(report.arrays, vec![p]);
    }

    #[test]
    fn tdd_roundtrip_gf13(p in arb_valid_gf13_array()) {
        let pair = td_d(&p).unwrap();
        let report = recognize_tdd(&pair.a, &pair.a_star).unwrap();
        prop_assert!(report.accepted());
        if p.d() == 0 {
            prop_assert_eq!(report.arrays, vec![p]);
        } else {
            let pd = p.d4_act(&[D4Gen::DDown]).unwrap();
            prop_assert!(report.arrays.contains(&p));
            prop_assert!(report.arrays.contains(&pd));
        }
    }

    #[test]
    fn recognition_is_conjugation_invariant(
        p in arb_valid_rational_array(),
        seed in 1i64..40,
    ) {
        let pair = td_d(&p).unwrap();
        let scales: Vec<BigRational> =
            (0..=p.d()).map(|i| qr(seed + 2 * i as i64, 1 + i as i64)).collect();
        let conj = pair.a.diag_conjugate(&scales).unwrap();
        let base = recognize_tdd(&pair.a, &pair.a_star).unwrap();
        let moved = recognize_tdd(&conj, &pair.a_star).unwrap();
        prop_assert_eq!(base.arrays, moved.arrays);
    }

    #[test]
    fn both_canonical_pairs_pass_the_oracle(p in arb_valid_rational_array()) {
        let lu = lb_ub(&p).unwrap();
        let td = td_d(&p).unwrap();
        prop_assert!(
            verify_leonard_oracle(&lu.a, &lu.a_star, p.theta(), p.theta_star()).unwrap()
        );
        prop_assert!(
            verify_leonard_oracle(&td.a, &td.a_star, p.theta(), p.theta_star()).unwrap()
        );
    }
}

// ---------------------------------------------------------------------------
// transition identities
// ---------------------------------------------------------------------------

fn transition_invariants_hold<F: Field>(p: &ParameterArray<F>) -> bool {
    let data = transition_matrices(p).unwrap();
    let d = p.d();
    let ctx = p.ctx();
    let one = F::one(&ctx);
    for i in 0..=d {
        if *data.p_mat.at(i, 0) != one || *data.p_star_mat.at(i, 0) != one {
            return false;
        }
    }
    if data.k[0] != one || data.k_star[0] != one {
        return false;
    }
    let product = data.p_mat.checked_mul(&data.p_star_mat).unwrap();
    let expect = Matrix::identity(d + 1, &ctx).scale(&data.nu);
    product == expect && intertwine_check(p).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn transition_invariants_rational(p in arb_valid_rational_array()) {
        prop_assert!(transition_invariants_hold(&p));
    }

    #[test]
    fn transition_invariants_gf13(p in arb_valid_gf13_array()) {
        prop_assert!(transition_invariants_hold(&p));
    }

    #[test]
    fn script_p_truncation_and_duality(p in arb_valid_rational_array()) {
        let dual = p.d4_act(&[D4Gen::Star]).unwrap();
        for i in 0..=p.d() {
            for j in 0..=p.d() {
                let value = script_p(&p, i, j);
                prop_assert_eq!(value.clone(), script_p_full(&p, i, j));
                prop_assert_eq!(value, script_p(&dual, j, i));
            }
        }
    }
}
