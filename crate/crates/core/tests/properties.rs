//! Randomized algebraic invariants for the polynomial ring, the q-object
//! builders, and the congruence checker.

use num_bigint::BigInt;
use num_integer::binomial;
use proptest::prelude::*;
use qcong_core::congruence::{check_congruence, phi_reduce, Verdict};
use qcong_core::qkit::{poch_qq, q_binom, q_binom_quotient, q_binom_recurrence, q_fermat_quotient, q_int, q_modulus};
use qcong_core::theorems::{build_q, StatementId};
use qcong_core::{IntPoly, ModPoly, RatFunc, Rational};

fn arb_poly(max_len: usize) -> impl Strategy<Value = IntPoly> {
    prop::collection::vec(-50i64..=50, 0..=max_len).prop_map(|v| IntPoly::from_i64_coeffs(&v))
}

fn arb_nonzero_poly(max_len: usize) -> impl Strategy<Value = IntPoly> {
    arb_poly(max_len).prop_filter("nonzero", |f| !f.is_zero())
}

fn arb_monic(max_deg: usize) -> impl Strategy<Value = IntPoly> {
    (1..=max_deg, prop::collection::vec(-9i64..=9, 0..=max_deg)).prop_map(|(d, mut v)| {
        v.truncate(d);
        v.resize(d, 0);
        v.push(1);
        IntPoly::from_i64_coeffs(&v)
    })
}

fn arb_point() -> impl Strategy<Value = Rational> {
    (-40i64..=40, 1i64..=24).prop_map(|(n, d)| Rational::new(BigInt::from(n), BigInt::from(d)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn addition_commutes(a in arb_poly(20), b in arb_poly(20)) {
        prop_assert_eq!(&a + &b, &b + &a);
    }

    #[test]
    fn multiplication_commutes(a in arb_poly(20), b in arb_poly(20)) {
        prop_assert_eq!(&a * &b, &b * &a);
    }

    #[test]
    fn multiplication_associates(a in arb_poly(12), b in arb_poly(12), c in arb_poly(12)) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
    }

    #[test]
    fn multiplication_distributes(a in arb_poly(16), b in arb_poly(16), c in arb_poly(16)) {
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
    }

    #[test]
    fn product_degrees_add(a in arb_nonzero_poly(16), b in arb_nonzero_poly(16)) {
        let expected = a.degree().unwrap() + b.degree().unwrap();
        prop_assert_eq!((&a * &b).degree(), Some(expected));
    }

    #[test]
    fn evaluation_is_a_ring_map(a in arb_poly(16), b in arb_poly(16), x in arb_point()) {
        prop_assert_eq!((&a * &b).evaluate(&x), a.evaluate(&x) * b.evaluate(&x));
        prop_assert_eq!((&a + &b).evaluate(&x), a.evaluate(&x) + b.evaluate(&x));
    }

    #[test]
    fn monic_division_reconstructs(a in arb_poly(18), d in arb_monic(8)) {
        let (quot, rem) = a.monic_divrem(&d).unwrap();
        prop_assert_eq!(&(&quot * &d) + &rem, a);
        if let Some(rd) = rem.degree() {
            prop_assert!(rd < d.degree().unwrap());
        }
    }

    #[test]
    fn exact_division_inverts_multiplication(a in arb_poly(16), b in arb_nonzero_poly(16)) {
        prop_assert_eq!((&a * &b).div_exact(&b), Some(a));
    }

    #[test]
    fn binomial_factor_passes_agree_with_generic_mul(a in arb_poly(24), d in 1usize..=9) {
        let minus = IntPoly::one_minus_q_pow(d);
        let plus = &IntPoly::from_i64_coeffs(&[2]) - &minus;
        prop_assert_eq!(a.mul_by_one_minus_q_pow(d), &a * &minus);
        prop_assert_eq!(a.mul_by_one_plus_q_pow(d), &a * &plus);
        prop_assert_eq!(a.mul_by_one_minus_q_pow(d).div_by_one_minus_q_pow(d), Some(a));
    }

    #[test]
    fn inexact_strided_division_is_rejected(a in arb_poly(20), d in 1usize..=9, c in 1i64..=50) {
        // anything divisible by 1 - q^d vanishes at q = 1, and this does not
        let f = &a.mul_by_one_minus_q_pow(d) + &IntPoly::constant_i64(c);
        prop_assert_eq!(f.div_by_one_minus_q_pow(d), None);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn modular_image_is_a_ring_map(a in arb_poly(16), b in arb_poly(16)) {
        let p = 1_000_003;
        let image = |f: &IntPoly| ModPoly::from_int_poly(f, p);
        prop_assert_eq!(image(&(&a * &b)), image(&a).mul(&image(&b)));
        prop_assert_eq!(image(&(&a + &b)), image(&a).add(&image(&b)));
    }

    #[test]
    fn rational_normalization_preserves_value(
        a in arb_poly(10),
        b in arb_nonzero_poly(10),
        x in arb_point(),
    ) {
        let f = RatFunc::new(a, b).unwrap();
        let n = f.normalized();
        prop_assert_eq!(&n, &n.normalized());
        if let (Ok(u), Ok(v)) = (f.evaluate(&x), n.evaluate(&x)) {
            prop_assert_eq!(u, v);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn pochhammer_prefixes_divide(a in 0u64..=20, b in 0u64..=20) {
        let whole = poch_qq(a + b);
        let tail = whole.div_exact(&poch_qq(a));
        prop_assert!(tail.is_some());
        prop_assert_eq!(&poch_qq(a) * &tail.unwrap(), whole);
    }

    #[test]
    fn gaussian_binomials_are_symmetric(n in 0u64..=24, m in 0u64..=24, s in 1u64..=3) {
        prop_assume!(m <= n);
        prop_assert_eq!(q_binom(n, m, s), q_binom(n, n - m, s));
    }

    #[test]
    fn gaussian_binomial_routes_agree(n in 0u64..=24, m in 0u64..=24, s in 1u64..=3) {
        prop_assume!(m <= n);
        prop_assert_eq!(q_binom_recurrence(n, m, s), q_binom_quotient(n, m, s));
    }

    #[test]
    fn gaussian_binomial_counts_at_one(n in 0u64..=24, m in 0u64..=24) {
        prop_assume!(m <= n);
        prop_assert_eq!(q_binom(n, m, 1).eval_one(), binomial(BigInt::from(n), BigInt::from(m)));
    }

    #[test]
    fn q_integers_factor_multiplicatively(a in 1u64..=40, b in 1u64..=40) {
        let lifted = q_int(a).dilate(b as usize);
        prop_assert_eq!(&lifted * &q_int(b), q_int(a * b));
    }

    #[test]
    fn fermat_quotient_satisfies_its_defining_equation(
        p in prop::sample::select(vec![3u64, 5, 7, 11, 13]),
        m in 1u64..=8,
    ) {
        prop_assume!(m % p != 0);
        let quotient = q_fermat_quotient(p, m).unwrap();
        let mut product = IntPoly::one();
        for j in 1..p {
            product = &product * &q_int(m).dilate(j as usize);
        }
        prop_assert_eq!(product, &IntPoly::one() + &(&q_int(p) * &quotient));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn witnesses_reconstruct_the_difference(
        id in prop::sample::select(vec![StatementId::Wolstq, StatementId::L21a, StatementId::Lehmerq]),
        p in prop::sample::select(vec![3u64, 5, 7, 11]),
    ) {
        let (lhs, rhs, modulus) = build_q(id, p, None).unwrap();
        match check_congruence(&lhs, &rhs, &modulus).unwrap() {
            Verdict::Holds { witness } => {
                let reconstructed = &witness * &RatFunc::from_poly(modulus.poly().clone());
                prop_assert_eq!(&lhs - &rhs, reconstructed);
            }
            Verdict::Violated { .. } => prop_assert!(false, "expected {} to hold at p={}", id, p),
        }
    }

    #[test]
    fn perturbed_sides_are_rejected(
        id in prop::sample::select(vec![StatementId::Wolstq, StatementId::L21a, StatementId::C24]),
        p in prop::sample::select(vec![3u64, 5, 7, 11]),
    ) {
        let m = if id == StatementId::C24 { Some(3) } else { None };
        let (lhs, rhs, modulus) = build_q(id, p, m).unwrap();
        let bump = &IntPoly::one_minus_q_pow(1) * &modulus.phi().pow(modulus.k() - 1);
        let bumped = &rhs + &RatFunc::from_poly(bump);
        let verdict = check_congruence(&lhs, &bumped, &modulus).unwrap();
        let rejected = matches!(verdict, Verdict::Violated { .. });
        prop_assert!(rejected);
    }

    #[test]
    fn congruences_descend_to_lower_modulus_powers(
        id in prop::sample::select(vec![StatementId::Wolstq, StatementId::Lehmerq, StatementId::L24]),
        p in prop::sample::select(vec![5u64, 7, 11]),
    ) {
        let (lhs, rhs, modulus) = build_q(id, p, None).unwrap();
        let weaker = q_modulus(p, modulus.k() - 1).unwrap();
        let strong = matches!(check_congruence(&lhs, &rhs, &modulus).unwrap(), Verdict::Holds { .. });
        let weak = matches!(check_congruence(&lhs, &rhs, &weaker).unwrap(), Verdict::Holds { .. });
        prop_assert!(strong);
        prop_assert!(weak);
    }

    #[test]
    fn phi_reduction_is_idempotent_and_value_preserving(
        a in arb_nonzero_poly(4),
        b in arb_nonzero_poly(4),
        extra in 0u32..=2,
        d in 0u32..=2,
        x in arb_point(),
    ) {
        // a and b stay below the degree of the p = 5 cyclotomic factor, so
        // the valuations of numerator and denominator are exactly d + extra
        // and d, and the reduction must always succeed.
        let modulus = q_modulus(5, 2).unwrap();
        let phi = modulus.phi().clone();
        let num = &a * &phi.pow(d + extra);
        let den = &b * &phi.pow(d);
        let f = RatFunc::new(num, den).unwrap();
        let reduced = phi_reduce(&f, &modulus).unwrap();
        prop_assert_eq!(&reduced, &phi_reduce(&reduced, &modulus).unwrap());
        if let (Ok(u), Ok(v)) = (f.evaluate(&x), reduced.evaluate(&x)) {
            prop_assert_eq!(u, v);
        }
    }

    #[test]
    fn phi_reduction_rejects_unremovable_denominator_factors(
        a in arb_nonzero_poly(4),
        b in arb_nonzero_poly(4),
        d in 1u32..=2,
    ) {
        let modulus = q_modulus(5, 2).unwrap();
        let den = &b * &modulus.phi().pow(d);
        let f = RatFunc::new(a, den).unwrap();
        prop_assert!(phi_reduce(&f, &modulus).is_err());
    }
}
