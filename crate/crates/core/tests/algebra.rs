use std::cmp::Ordering;

use hodge_core::algebra::rational::{int, rat};
use hodge_core::algebra::{enumerate_monomials, monomial_count, parse_polynomial, Monomial, MonomialOrder, NuPoly, Polynomial, Rational};
use proptest::prelude::*;

const N: usize = 3;

fn arb_monomial(max: u32) -> impl Strategy<Value = Monomial> {
    prop::collection::vec(0..=max, N).prop_map(|e| Monomial::from_slice(&e))
}

fn arb_poly() -> impl Strategy<Value = Polynomial> {
    prop::collection::vec((arb_monomial(3), -9i64..10, 1i64..4), 0..6)
        .prop_map(|ts| Polynomial::from_terms(N, ts.into_iter().map(|(m, a, b)| (m, rat(a, b)))))
}

fn arb_form(d: u32) -> impl Strategy<Value = Polynomial> {
    let ms = enumerate_monomials(N, d, &MonomialOrder::grevlex());
    prop::collection::vec((0..ms.len(), -5i64..6), 1..6).prop_map(move |ts| {
        Polynomial::from_terms(N, ts.into_iter().map(|(i, c)| (ms[i].clone(), int(c))))
    })
}

fn arb_nu_poly() -> impl Strategy<Value = NuPoly> {
    prop::collection::vec(-6i64..7, 0..5).prop_map(|cs| NuPoly::from_coeffs(cs.into_iter().map(int).collect()))
}

#[test]
fn grevlex_reference_order() {
    let o = MonomialOrder::grevlex();
    let ms = enumerate_monomials(3, 2, &o);
    let shown: Vec<String> = ms.iter().map(|m| m.to_string()).collect();
    assert_eq!(shown, ["x0^2", "x0*x1", "x1^2", "x0*x2", "x1*x2", "x2^2"]);
    let g = MonomialOrder::grlex();
    let shown: Vec<String> = enumerate_monomials(3, 2, &g).iter().map(|m| m.to_string()).collect();
    assert_eq!(shown, ["x0^2", "x0*x1", "x0*x2", "x1^2", "x1*x2", "x2^2"]);
}

#[test]
fn monomial_counts() {
    assert_eq!(monomial_count(4, 5), 56);
    assert_eq!(monomial_count(6, 12), 6188);
    assert_eq!(enumerate_monomials(5, 4, &MonomialOrder::grevlex()).len(), 70);
}

#[test]
fn grammar_example_parses() {
    let p = parse_polynomial("x0*x1*(x0^4+x1^4+x2^2*x3^2) + x4*x2^5", None).unwrap();
    assert_eq!(p.homogeneous_degree(), Some(6));
    assert_eq!(p.to_string(), "x0^5*x1 + x0*x1^5 + x0*x1*x2^2*x3^2 + x2^5*x4");
}

proptest! {
    #[test]
    fn ring_axioms(p in arb_poly(), q in arb_poly(), r in arb_poly()) {
        prop_assert_eq!(&p + &q, &q + &p);
        prop_assert_eq!(&p * &q, &q * &p);
        prop_assert_eq!(&p * &(&q + &r), &(&p * &q) + &(&p * &r));
        prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
        prop_assert!((&p - &p).is_zero());
    }

    #[test]
    fn leibniz_rule(p in arb_poly(), q in arb_poly(), v in 0..N) {
        let lhs = (&p * &q).partial_derivative(v);
        let rhs = &(&p.partial_derivative(v) * &q) + &(&p * &q.partial_derivative(v));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn euler_identity(f in arb_form(4)) {
        let d = f.homogeneous_degree().unwrap_or(4);
        let mut sum = Polynomial::zero(N);
        for v in 0..N {
            sum = &sum + &(&Polynomial::var(N, v) * &f.partial_derivative(v));
        }
        prop_assert_eq!(sum, f.scale(&int(d as i64)));
    }

    #[test]
    fn orders_are_multiplicative_and_graded(a in arb_monomial(4), b in arb_monomial(4), c in arb_monomial(4)) {
        for o in [MonomialOrder::grevlex(), MonomialOrder::grlex()] {
            let ab = o.cmp(&a, &b);
            prop_assert_eq!(o.cmp(&a.mul(&c), &b.mul(&c)), ab);
            prop_assert_eq!(o.cmp(&b, &a), ab.reverse());
            if a.degree() != b.degree() {
                prop_assert_eq!(ab, a.degree().cmp(&b.degree()));
            }
            prop_assert!(o.cmp(&a, &a) == Ordering::Equal);
        }
    }

    #[test]
    fn lcm_and_division(a in arb_monomial(4), b in arb_monomial(4)) {
        let l = a.lcm(&b);
        prop_assert!(a.divides(&l) && b.divides(&l));
        prop_assert_eq!(l.div(&a).unwrap().mul(&a), l.clone());
        prop_assert_eq!(a.is_coprime(&b), l == a.mul(&b));
    }

    #[test]
    fn roundtrip_through_text(p in arb_poly()) {
        prop_assert_eq!(parse_polynomial(&p.to_string(), Some(N)).unwrap(), p);
    }

    #[test]
    fn nu_poly_division(a in arb_nu_poly(), b in arb_nu_poly(), x in -5i64..6) {
        prop_assume!(!b.is_zero());
        let (q, r) = a.div_rem(&b);
        prop_assert!(r.degree() < b.degree() || r.is_zero());
        let x = int(x);
        let lhs = a.eval(&x);
        let rhs: Rational = q.eval(&x) * b.eval(&x) + r.eval(&x);
        prop_assert_eq!(lhs, rhs);
        let g = a.gcd(&b);
        prop_assert!(a.rem(&g).is_zero() && b.rem(&g).is_zero());
    }
}
