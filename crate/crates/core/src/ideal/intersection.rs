use std::sync::Arc;

use num_traits::One;

use super::groebner::GroebnerBasis;
use super::model::IdealModel;
use super::span::DegreeSpan;
use crate::algebra::{MonomialOrder, OrderKind, Polynomial, Rational};

/// `(I ∩ I')_t` by linear algebra in `S_t`.
pub fn ideal_intersection_degreewise(a: &IdealModel, b: &IdealModel, t: u32) -> Arc<DegreeSpan> {
    a.span(t).intersect(&b.span(t)).into()
}

/// Gröbner basis of `I ∩ I'` via `(u I + (1 - u) I') ∩ S` with an extra
/// variable `u` eliminated first.
pub fn intersection_by_elimination(a: &IdealModel, b: &IdealModel) -> GroebnerBasis {
    let n = a.nvars();
    let ga = a.groebner().polynomials();
    let gb = b.groebner().polynomials();
    let u = Polynomial::var(n + 1, n);
    let one_minus_u = &Polynomial::constant(n + 1, Rational::one()) - &u;
    let mut gens: Vec<Polynomial> = ga.iter().map(|g| &u * &g.extend_to(n + 1)).collect();
    gens.extend(gb.iter().map(|g| &one_minus_u * &g.extend_to(n + 1)));
    let base = a.order();
    let rest: Vec<usize> = match &base.vars {
        Some(v) => v.clone(),
        None => (0..n).collect(),
    };
    let inner = match base.kind {
        OrderKind::GradedReverseLex | OrderKind::GradedLex => base.kind,
        OrderKind::Elimination { .. } => OrderKind::GradedReverseLex,
    };
    let mut vars = vec![n];
    vars.extend(&rest);
    let elim = MonomialOrder::with_vars(OrderKind::Elimination { block: 1 }, vars);
    let full = GroebnerBasis::compute_in(n + 1, &gens, &elim);
    let kept: Vec<Polynomial> = full
        .polynomials()
        .into_iter()
        .filter(|p| p.terms().all(|(m, _)| m.exp(n) == 0))
        .map(|p| p.restrict_to(n))
        .collect();
    // the survivors already form a Gröbner basis; recompute to get the
    // reduced basis for the original order
    let order = MonomialOrder {
        kind: inner,
        vars: base.vars.clone(),
    };
    GroebnerBasis::compute_in(n, &kept, &order)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::parse_polynomial_list;

    #[test]
    fn elimination_matches_monomial_intersection() {
        let o = MonomialOrder::grevlex();
        let a = IdealModel::new(3, parse_polynomial_list("x0^2, x1", Some(3)).unwrap(), &o).unwrap();
        let b = IdealModel::new(3, parse_polynomial_list("x0, x2^2", Some(3)).unwrap(), &o).unwrap();
        let g = intersection_by_elimination(&a, &b);
        // <x0^2, x0*x1 ... > : lcm-wise intersection of monomial ideals
        let expect = parse_polynomial_list("x0^2, x0*x1, x1*x2^2", Some(3)).unwrap();
        assert_eq!(g.len(), 3);
        for e in &expect {
            assert!(g.contains(e));
        }
    }
}
