//! Property tests for the exact arithmetic kernels: univariate `K[z]`
//! division and gcd, and rational root extraction.

use proptest::prelude::*;

use tamecheck_core::field::Field;
use tamecheck_core::rational::{rat, rational_nth_root, Rational};
use tamecheck_core::zpoly::ZPoly;

fn arb_rat() -> impl Strategy<Value = Rational> {
    (-6i64..=6, 1i64..=4).prop_map(|(n, d)| rat(n, d))
}

fn arb_zpoly() -> impl Strategy<Value = ZPoly> {
    prop::collection::vec(arb_rat(), 0..6).prop_map(ZPoly::from_coeffs)
}

proptest! {
    #[test]
    fn division_recomposes(a in arb_zpoly(), b in arb_zpoly()) {
        prop_assume!(!b.is_zero());
        let (q, r) = a.div_rem(&b);
        prop_assert_eq!((&q * &b) + r.clone(), a);
        if !r.is_zero() {
            prop_assert!(r.degree() < b.degree());
        }
    }

    #[test]
    fn gcd_divides_both_arguments(a in arb_zpoly(), b in arb_zpoly()) {
        prop_assume!(!a.is_zero() || !b.is_zero());
        let g = a.gcd(&b);
        prop_assert!(!g.is_zero());
        prop_assert!(a.div_rem(&g).1.is_zero());
        prop_assert!(b.div_rem(&g).1.is_zero());
    }

    #[test]
    fn derivative_satisfies_the_product_rule(a in arb_zpoly(), b in arb_zpoly()) {
        let lhs = (&a * &b).derivative();
        let rhs = (&a.derivative() * &b) + (&a * &b.derivative());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn nth_root_inverts_powers(x in arb_rat(), d in 1u32..=4) {
        let mut pow = Rational::one();
        for _ in 0..d {
            pow = pow * x.clone();
        }
        let root = rational_nth_root(&pow, d).expect("a perfect power has a root");
        let mut back = Rational::one();
        for _ in 0..d {
            back = back * root.clone();
        }
        prop_assert_eq!(back, pow);
    }
}
