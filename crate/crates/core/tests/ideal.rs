use std::sync::Arc;

use hodge_core::algebra::rational::int;
use hodge_core::algebra::{enumerate_monomials, parse_polynomial, parse_polynomial_list, Monomial, MonomialOrder, Polynomial};
use hodge_core::ideal::hilbert::{artinian_hilbert_vector, hilbert_numerator, hilbert_value};
use hodge_core::ideal::*;
use proptest::prelude::*;

const N: usize = 3;

fn arb_form(d: u32) -> impl Strategy<Value = Polynomial> {
    let ms = enumerate_monomials(N, d, &MonomialOrder::grevlex());
    prop::collection::vec((0..ms.len(), -3i64..4), 1..4).prop_map(move |ts| {
        Polynomial::from_terms(N, ts.into_iter().map(|(i, c)| (ms[i].clone(), int(c))))
    })
}

fn arb_ideal() -> impl Strategy<Value = Vec<Polynomial>> {
    prop::collection::vec((1u32..=4).prop_flat_map(arb_form), 1..4)
        .prop_map(|gs| gs.into_iter().filter(|g| !g.is_zero()).collect())
}

fn model(gens: Vec<Polynomial>) -> IdealModel {
    IdealModel::new(N, gens, &MonomialOrder::grevlex()).unwrap()
}

#[test]
fn twisted_cubic_basis() {
    let gens = parse_polynomial_list("x0*x2 - x1^2, x1*x3 - x2^2, x0*x3 - x1*x2", Some(4)).unwrap();
    let gb = GroebnerBasis::compute(&gens, &MonomialOrder::grevlex());
    assert!(gb.is_reduced());
    assert!(gb.satisfies_buchberger_criterion());
    assert_eq!(gb.len(), 3);
    let m = IdealModel::new(4, gens, &MonomialOrder::grevlex()).unwrap();
    // Hilbert polynomial 3t + 1
    for t in 0..8 {
        assert_eq!(m.hilbert_function(t), 3 * t as u64 + 1);
        assert_eq!(m.hilbert_function_degreewise(t), 3 * t as u64 + 1);
    }
}

#[test]
fn hilbert_series_of_coordinate_box() {
    let gens: Vec<Monomial> = (0..4).map(|v| Monomial::var(4, v).with_exp(v, 3)).collect();
    let v = artinian_hilbert_vector(&gens, 4).unwrap();
    assert_eq!(v, vec![1, 4, 10, 16, 19, 16, 10, 4, 1]);
    let num = hilbert_numerator(&[Monomial::from_slice(&[1, 1, 0])]);
    assert_eq!(hilbert_value(&num, 3, 4), 15 - 6);
}

#[test]
fn fermat_jacobian_ring_is_a_box() {
    let f = parse_polynomial("x0^5 + x1^5 + x2^5 + x3^5", Some(4)).unwrap();
    let cert = is_smooth(&f).unwrap();
    assert!(cert.smooth);
    let j = jacobian_ideal(&f, &MonomialOrder::grevlex()).unwrap();
    let v = j.artinian_hilbert_vector().unwrap();
    assert_eq!(v.len(), 13);
    assert_eq!(v.iter().sum::<u64>(), 256);
    assert_eq!(v[6], 44);
}

#[test]
fn singular_surfaces_are_detected() {
    // a quintic containing the line V(x0, x1) doubly: singular along it
    let f = parse_polynomial("x0^2*x2^3 + x1^2*x3^3 + x0*x1*x2*x3^2", Some(4)).unwrap();
    let c = is_smooth(&f).unwrap();
    assert!(!c.smooth);
    assert!(c.obstruction.is_some());
    let g = parse_polynomial("x0^3 + x1^3 + x2^3", Some(4)).unwrap();
    assert!(!is_smooth(&g).unwrap().smooth);
}

#[test]
fn degreewise_span_matches_membership() {
    let gens = parse_polynomial_list("x0^2 - x1*x2, x1^3", Some(3)).unwrap();
    let m = model(gens.clone());
    let span = m.span(4);
    let p = &gens[0] * &parse_polynomial("x0^2 + x2^2", Some(3)).unwrap();
    assert!(span.contains(&p));
    assert!(m.contains(&p));
    assert_eq!(span.codim() as u64, m.hilbert_function(4));
}

#[test]
fn intersection_of_coordinate_ideals() {
    let a = Arc::new(model(parse_polynomial_list("x0, x1", Some(3)).unwrap()));
    let b = Arc::new(model(parse_polynomial_list("x1, x2", Some(3)).unwrap()));
    let gb = intersection_by_elimination(&a, &b);
    let mut leads: Vec<String> = gb.leading_monomials().iter().map(|m| m.to_string()).collect();
    leads.sort();
    assert_eq!(leads, ["x0*x2", "x1"]);
    let cap = IdealModel::intersection(a.clone(), b.clone());
    for t in 0..5 {
        assert_eq!(cap.hilbert_function_gb(t), cap.hilbert_function_degreewise(t));
        assert_eq!(ideal_intersection_degreewise(&a, &b, t).codim() as u64, cap.hilbert_function_gb(t));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn groebner_basis_invariants(gens in arb_ideal()) {
        prop_assume!(!gens.is_empty());
        let gb = GroebnerBasis::compute_in(N, &gens, &MonomialOrder::grevlex());
        prop_assert!(gb.satisfies_buchberger_criterion());
        prop_assert!(gb.is_reduced());
        for g in &gens {
            prop_assert!(gb.contains(g));
        }
        let gb2 = GroebnerBasis::compute_in(N, &gb.polynomials(), &MonomialOrder::grevlex());
        prop_assert_eq!(gb2.polynomials(), gb.polynomials());
    }

    #[test]
    fn hilbert_functions_agree(gens in arb_ideal()) {
        prop_assume!(!gens.is_empty());
        let m = model(gens);
        for t in 0..=7 {
            prop_assert_eq!(m.hilbert_function_gb(t), m.hilbert_function_degreewise(t));
        }
    }

    #[test]
    fn hilbert_function_does_not_depend_on_order(gens in arb_ideal()) {
        prop_assume!(!gens.is_empty());
        let a = model(gens);
        let b = a.with_order(&MonomialOrder::grlex());
        for t in 0..=6 {
            prop_assert_eq!(a.hilbert_function_gb(t), b.hilbert_function_gb(t));
        }
    }

    #[test]
    fn intersections_agree(g1 in arb_ideal(), g2 in arb_ideal()) {
        prop_assume!(!g1.is_empty() && !g2.is_empty());
        let (a, b) = (Arc::new(model(g1)), Arc::new(model(g2)));
        let gb = intersection_by_elimination(&a, &b);
        for p in gb.polynomials() {
            prop_assert!(a.contains(&p) && b.contains(&p));
        }
        let cap = IdealModel::intersection(a, b);
        for t in 0..=6 {
            prop_assert_eq!(cap.hilbert_function_gb(t), cap.hilbert_function_degreewise(t));
        }
    }

    #[test]
    fn modular_smoothness_is_sound(f in arb_form(3)) {
        prop_assume!(!f.is_zero());
        let m = is_smooth_modular(&f).unwrap();
        let q = is_smooth(&f).unwrap();
        if m.smooth {
            prop_assert!(q.smooth);
        }
        if q.smooth {
            let j = jacobian_ideal(&f, &MonomialOrder::grevlex()).unwrap();
            prop_assert_eq!(j.hilbert_function(4), 0);
            prop_assert_eq!(j.artinian_hilbert_vector().unwrap(), vec![1, 3, 3, 1]);
        }
    }
}
