use serde::Serialize;

use super::associated::AssociatedIdeal;
use crate::algebra::Polynomial;
use crate::ideal::jacobian_ideal;

/// `codim_{S_d} I_d`, with a flag telling whether it is known to be the
/// codimension of the tangent space of the Hodge locus (`k >= 2` and
/// `d != 2 + 2/k`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct TangentCodim {
    pub value: u64,
    pub identified: bool,
}

pub fn identification_holds(k: usize, d: u32) -> bool {
    k >= 2 && (k as u64) * (d as u64 - 2) != 2
}

pub fn tangent_codim(a: &AssociatedIdeal, d: u32) -> TangentCodim {
    TangentCodim {
        value: a.ideal.hilbert_function(d),
        identified: identification_holds(a.k, d),
    }
}

/// Codimension of `I_1,d ∩ ... ∩ I_r,d` in `S_d`.
pub fn joint_tangent_codim(ideals: &[&AssociatedIdeal], d: u32) -> u64 {
    let Some((first, rest)) = ideals.split_first() else {
        return 0;
    };
    let mut span = first.ideal.span(d);
    for a in rest {
        assert_eq!(a.nvars(), first.nvars(), "ideals live in different rings");
        span = span.intersect(&a.ideal.span(d)).into();
    }
    span.codim() as u64
}

/// `J ⊆ I`: every partial derivative reduces to zero modulo `I`.
pub fn jacobian_contained(f: &Polynomial, a: &AssociatedIdeal) -> bool {
    (0..f.nvars()).all(|v| a.ideal.contains(&f.partial_derivative(v)))
}

/// `J_t ⊆ I_t`, by linear algebra in `S_t`.
pub fn jacobian_contained_in_degree(f: &Polynomial, a: &AssociatedIdeal, t: u32) -> crate::Result<bool> {
    let j = jacobian_ideal(f, a.ideal.order())?;
    Ok(a.ideal.span(t).contains_span(&j.span(t)))
}
