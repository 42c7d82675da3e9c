use hodge_core::algebra::{parse_polynomial, parse_polynomial_list, rational::int, MonomialOrder, Polynomial};
use hodge_core::hodge::*;
use hodge_core::ideal::IdealModel;
use hodge_core::Error;

fn poly(s: &str, n: usize) -> Polynomial {
    parse_polynomial(s, Some(n)).unwrap()
}

fn dan_f(d: u32) -> Polynomial {
    poly(
        &format!(
            "x0*x1*(x0^{a} + x1^{a} + x2^{a}) + x3*(x0^{b} + x1^{b} + x2^{b} + x3^{b})",
            a = d - 2,
            b = d - 1
        ),
        4,
    )
}

fn x26() -> Polynomial {
    poly("x0*x1*(x0^4 + x1^4 + x2^2*x3^2) + x4*x2^5 + x4^6 + x5*x3^5 + x5^6", 6)
}

fn x24() -> Polynomial {
    poly("x0*x1*(x0^2 + x1^2 + x3^2) + x4*x2^3 + x4^4 + x5*x3^3 + x5^4", 6)
}

/// Coefficients of `(1 + q + ... + q^(e-1))^m`.
fn box_series(e: usize, m: usize) -> Vec<u64> {
    let mut acc = vec![1u64];
    for _ in 0..m {
        let mut next = vec![0u64; acc.len() + e - 1];
        for (i, c) in acc.iter().enumerate() {
            for j in 0..e {
                next[i + j] += c;
            }
        }
        acc = next;
    }
    acc
}

#[test]
fn dan_first_ideal_matches_listed_generators() {
    for d in 5..=7 {
        let f = dan_f(d);
        let plane = LinearSpacePlane::coordinate(4, &[0, 3]).unwrap();
        let dec = plane_decomposition(&f, &plane).unwrap();
        assert_eq!(dec.expand(), f);
        let a = associated_ideal_from_decomposition(&dec).unwrap();
        assert_eq!(a.socle_degree, 2 * (d - 2));
        let listed = IdealModel::new(
            4,
            parse_polynomial_list(
                &format!("x0, x3, x1*(x0^{a} + x1^{a} + x2^{a}), x0^{b} + x1^{b} + x2^{b} + x3^{b}", a = d - 2, b = d - 1),
                Some(4),
            )
            .unwrap(),
            &MonomialOrder::grevlex(),
        )
        .unwrap();
        assert_eq!(listed.groebner().polynomials(), a.ideal.groebner().polynomials());
        let report = check_gorenstein(&a).unwrap();
        assert_eq!(report.hilbert[a.socle_degree as usize], 1);
        assert_eq!(report.hilbert[0], 1);
        assert!(jacobian_contained(&f, &a));
        assert!(jacobian_contained_in_degree(&f, &a, d).unwrap());
    }
}

#[test]
fn x26_first_ideal_is_a_box() {
    let f = x26();
    let plane = LinearSpacePlane::coordinate(6, &[0, 4, 5]).unwrap();
    let a = associated_ideal_from_decomposition(&plane_decomposition(&f, &plane).unwrap()).unwrap();
    let report = check_gorenstein(&a).unwrap();
    assert_eq!(report.hilbert, box_series(5, 3));
    assert_eq!(report.hilbert.iter().sum::<u64>(), 125);
    assert_eq!(report.hilbert[12], 1);
    let listed = IdealModel::new(
        6,
        parse_polynomial_list("x0, x4, x5, x1^5 + x1*x2^2*x3^2, x2^5, x3^5", Some(6)).unwrap(),
        &MonomialOrder::grevlex(),
    )
    .unwrap();
    assert_eq!(listed.groebner().polynomials(), a.ideal.groebner().polynomials());
}

#[test]
fn degree_range_and_regularity_are_enforced() {
    // quadric: d = 2 < 2 + 2/k
    let f = poly("x0*x1 + x2*x3", 4);
    let plane = LinearSpacePlane::coordinate(4, &[0, 2]).unwrap();
    let dec = plane_decomposition(&f, &plane).unwrap();
    assert!(matches!(associated_ideal_from_decomposition(&dec), Err(Error::Precondition(_))));
    // x0*x1^4 + x2*x1^4 vanishes on V(x0, x2) but the cofactors share x1
    let g = poly("x0*x1^4 + x2*x1^4", 4);
    let dec = plane_decomposition(&g, &plane).unwrap();
    assert!(matches!(associated_ideal_from_decomposition(&dec), Err(Error::NotRegular(_))));
}

fn cross_check(f: &Polynomial, plane: &LinearSpacePlane) {
    let dec = plane_decomposition(f, plane).unwrap();
    let a = associated_ideal_from_decomposition(&dec).unwrap();
    let ring = JacobianRing::new(f).unwrap();
    let rep = representative_from_ideal(&ring, &a).unwrap();
    let b = associated_ideal_in(&ring, &rep).unwrap();
    check_gorenstein(&b).unwrap();
    for t in 0..=a.socle_degree + 1 {
        assert!(a.ideal.span(t).same_space(&b.ideal.span(t)), "degree {t}");
    }
    // scaling the representative changes nothing
    let c = associated_ideal_in(&ring, &rep.scale(&int(-7))).unwrap();
    for t in 0..=a.socle_degree {
        assert!(c.ideal.span(t).same_space(&b.ideal.span(t)));
    }
    // the cofactor determinant has the same perp
    let det = plane_representative(&dec).unwrap();
    let e = associated_ideal_in(&ring, &det).unwrap();
    for t in 0..=a.socle_degree {
        assert!(e.ideal.span(t).same_space(&a.ideal.span(t)), "determinant, degree {t}");
    }
}

#[test]
fn general_construction_agrees_for_curves_on_quintic_surfaces() {
    cross_check(&dan_f(5), &LinearSpacePlane::coordinate(4, &[0, 3]).unwrap());
}

#[test]
fn general_construction_agrees_for_planes_on_quartic_fourfolds() {
    cross_check(&x24(), &LinearSpacePlane::coordinate(6, &[0, 4, 5]).unwrap());
}

#[test]
fn trivial_and_mismatched_representatives() {
    let f = dan_f(5);
    let ring = JacobianRing::new(&f).unwrap();
    let in_j = &f.partial_derivative(0) * &poly("x1^2", 4);
    assert!(matches!(associated_ideal_in(&ring, &in_j), Err(Error::TrivialClass)));
    assert!(matches!(associated_ideal_in(&ring, &poly("x0^2", 4)), Err(Error::DegreeMismatch { .. })));
    let singular = poly("x0^5 + x1^5 + x2^5", 4);
    assert!(matches!(associated_ideal_general(&singular, &poly("x0^6", 4)), Err(Error::Singular(_))));
}

#[test]
fn tangent_codims() {
    let f = dan_f(5);
    let a1 = associated_ideal_from_decomposition(&plane_decomposition(&f, &LinearSpacePlane::coordinate(4, &[0, 3]).unwrap()).unwrap()).unwrap();
    let a2 = associated_ideal_from_decomposition(&plane_decomposition(&f, &LinearSpacePlane::coordinate(4, &[1, 3]).unwrap()).unwrap()).unwrap();
    assert_eq!(joint_tangent_codim(&[&a1, &a2], 5), 4);
    assert_eq!(joint_tangent_codim(&[&a1, &a1], 5), tangent_codim(&a1, 5).value);
    assert!(!tangent_codim(&a1, 5).identified);
    assert!(identification_holds(2, 6) && !identification_holds(2, 3));
}
