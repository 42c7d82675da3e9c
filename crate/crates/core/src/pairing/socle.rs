use std::collections::HashMap;
use std::sync::RwLock;

use num_traits::Zero;

use crate::algebra::{Monomial, Polynomial, Rational};
use crate::error::{Error, Result};
use crate::hodge::AssociatedIdeal;

/// The basis monomial of `(S/I)_s`: the unique standard monomial of the
/// socle degree.
pub fn socle_generator(a: &AssociatedIdeal) -> Result<Monomial> {
    let basis = a.ideal.quotient_basis(a.socle_degree);
    if basis.len() != 1 {
        return Err(Error::NotGorenstein {
            degree: a.socle_degree,
            reason: format!("(S/I)_s has dimension {}", basis.len()),
        });
    }
    Ok(basis.monomials[0])
}

/// `psi(p, q) = sigma(NF(p q))`, where `sigma` reads off the coefficient of
/// the socle monomial.
pub struct SoclePairing {
    pub ideal: AssociatedIdeal,
    pub socle: Monomial,
    cache: RwLock<HashMap<Monomial, Rational>>,
}

impl SoclePairing {
    pub fn new(a: &AssociatedIdeal) -> Result<Self> {
        Ok(SoclePairing {
            socle: socle_generator(a)?,
            ideal: a.clone(),
            cache: RwLock::new(HashMap::new()),
        })
    }

    pub fn socle_degree(&self) -> u32 {
        self.ideal.socle_degree
    }

    /// `sigma` on a monomial of degree `s`.
    pub fn sigma_monomial(&self, m: &Monomial) -> Rational {
        if let Some(v) = self.cache.read().expect("lock").get(m) {
            return v.clone();
        }
        let v = self
            .ideal
            .ideal
            .groebner()
            .normal_form_monomial(m)
            .into_iter()
            .find(|(u, _)| u == &self.socle)
            .map(|(_, c)| c)
            .unwrap_or_else(Rational::zero);
        self.cache.write().expect("lock").insert(*m, v.clone());
        v
    }

    /// `psi` on two monomials.
    pub fn monomial_value(&self, a: &Monomial, b: &Monomial) -> Rational {
        self.sigma_monomial(&a.mul(b))
    }
}

/// `psi(p, q)` for `deg p + deg q = s`.
pub fn pairing_value(pairing: &SoclePairing, p: &Polynomial, q: &Polynomial) -> Result<Rational> {
    let s = pairing.socle_degree();
    if p.is_zero() || q.is_zero() {
        return Ok(Rational::zero());
    }
    match (p.homogeneous_degree(), q.homogeneous_degree()) {
        (Some(a), Some(b)) if a + b == s => {}
        (Some(a), Some(b)) => return Err(Error::DegreeMismatch { expected: s, got: a + b }),
        _ => return Err(Error::Precondition("pairing arguments must be homogeneous".into())),
    }
    let mut acc = Rational::zero();
    for (a, x) in p.terms() {
        for (b, y) in q.terms() {
            let v = pairing.monomial_value(a, b);
            if !v.is_zero() {
                acc += x * y * v;
            }
        }
    }
    Ok(acc)
}
