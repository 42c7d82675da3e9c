use std::collections::HashMap;
use std::sync::Arc;

use num_traits::Zero;
use serde::Serialize;

use super::plane::PlaneDecomposition;
use crate::algebra::{Monomial, MonomialOrder, Polynomial, Rational};
use crate::error::{Error, Result};
use crate::ideal::IdealModel;
use crate::linalg::Matrix;

/// The Artinian Gorenstein ideal `I(gamma)` of a Hodge class of a
/// `k`-dimensional cycle on a degree `d` hypersurface.
#[derive(Clone, Debug)]
pub struct AssociatedIdeal {
    pub ideal: Arc<IdealModel>,
    pub k: usize,
    pub d: u32,
    /// `(k+1)(d-2)`.
    pub socle_degree: u32,
    /// The standard monomial spanning `(S/I)_s`.
    pub socle_generator: Monomial,
}

impl AssociatedIdeal {
    pub fn nvars(&self) -> usize {
        self.ideal.nvars()
    }

    /// Coefficient of the socle monomial in the normal form of a degree `s`
    /// polynomial: the functional `(S/I)_s -> Q`.
    pub fn socle_coefficient(&self, p: &Polynomial) -> Rational {
        self.ideal.normal_form(p).coeff(&self.socle_generator)
    }

    /// Same functional on a single monomial.
    pub fn socle_coefficient_monomial(&self, m: &Monomial) -> Rational {
        self.ideal
            .groebner()
            .normal_form_monomial(m)
            .into_iter()
            .find(|(u, _)| u == &self.socle_generator)
            .map(|(_, c)| c)
            .unwrap_or_else(Rational::zero)
    }

    /// Hilbert function of `S/I` in degrees `0..=s`.
    pub fn hilbert_vector(&self) -> Vec<u64> {
        self.ideal.hilbert_vector(self.socle_degree)
    }
}

/// `d >= 2 + 2/k`, i.e. `k(d-2) >= 2`.
pub fn check_degree_range(k: usize, d: u32) -> Result<()> {
    if k == 0 || (k as u64) * (d.saturating_sub(2) as u64) < 2 {
        return Err(Error::Precondition(format!("(k, d) = ({k}, {d}) violates d >= 2 + 2/k")));
    }
    Ok(())
}

/// `<l_0, ..., l_k, g_0, ..., g_k>`, checked to be a complete intersection
/// through the length `(d-1)^(k+1)` of its Artinian quotient.
pub fn associated_ideal_from_decomposition(dec: &PlaneDecomposition) -> Result<AssociatedIdeal> {
    associated_ideal_with_order(dec, &MonomialOrder::grevlex())
}

/// [`associated_ideal_from_decomposition`] for another monomial order.
pub fn associated_ideal_with_order(dec: &PlaneDecomposition, order: &MonomialOrder) -> Result<AssociatedIdeal> {
    let k = dec.plane.k();
    let n = dec.plane.nvars();
    let d = dec
        .cofactors
        .iter()
        .find_map(Polynomial::homogeneous_degree)
        .map(|e| e + 1)
        .ok_or_else(|| Error::NotRegular("all cofactors vanish".into()))?;
    check_degree_range(k, d)?;
    let mut gens: Vec<Polynomial> = dec.forms().to_vec();
    gens.extend(dec.cofactors.iter().cloned());
    let ideal = IdealModel::new(n, gens, order)?;
    let h = ideal
        .artinian_hilbert_vector()
        .ok_or_else(|| Error::NotRegular("the quotient is not Artinian".into()))?;
    let length: u64 = h.iter().sum();
    let expected = (d as u64 - 1).pow(k as u32 + 1);
    if length != expected {
        return Err(Error::NotRegular(format!("quotient length {length}, expected {expected}")));
    }
    let s = (k as u32 + 1) * (d - 2);
    if h.len() as u32 != s + 1 || h[s as usize] != 1 {
        return Err(Error::NotGorenstein {
            degree: s,
            reason: format!("Hilbert vector {h:?} does not end with a one-dimensional piece in degree {s}"),
        });
    }
    let socle_generator = ideal.quotient_basis(s).monomials[0];
    Ok(AssociatedIdeal {
        ideal: Arc::new(ideal),
        k,
        d,
        socle_degree: s,
        socle_generator,
    })
}

/// Outcome of [`check_gorenstein`].
#[derive(Clone, Debug, Serialize)]
pub struct GorensteinReport {
    pub socle_degree: u32,
    pub hilbert: Vec<u64>,
    /// Rank of the pairing `(S/I)_t x (S/I)_{s-t} -> (S/I)_s` for each `t`.
    pub pairing_ranks: Vec<usize>,
}

/// Checks `h(t) = h(s-t)`, `h(s) = 1`, `h(s+1) = 0` and full rank of every
/// multiplication pairing into the socle.
pub fn check_gorenstein(a: &AssociatedIdeal) -> Result<GorensteinReport> {
    let s = a.socle_degree;
    let hilbert = a.hilbert_vector();
    let fail = |degree: u32, reason: String| Err(Error::NotGorenstein { degree, reason });
    if hilbert[s as usize] != 1 {
        return fail(s, format!("h(s) = {}", hilbert[s as usize]));
    }
    if a.ideal.hilbert_function(s + 1) != 0 {
        return fail(s + 1, "quotient does not vanish above the socle degree".into());
    }
    for t in 0..=s {
        if hilbert[t as usize] != hilbert[(s - t) as usize] {
            return fail(t, format!("h({t}) = {} but h({}) = {}", hilbert[t as usize], s - t, hilbert[(s - t) as usize]));
        }
    }
    let bases: Vec<Vec<Monomial>> = (0..=s).map(|t| a.ideal.quotient_basis(t).monomials).collect();
    let mut sigma: HashMap<Monomial, Rational> = HashMap::new();
    let mut pairing_ranks = Vec::with_capacity(s as usize + 1);
    for t in 0..=s {
        let (rows, cols) = (&bases[t as usize], &bases[(s - t) as usize]);
        let mut m = Matrix::zeros(rows.len(), cols.len());
        for (i, r) in rows.iter().enumerate() {
            for (j, c) in cols.iter().enumerate() {
                let p = r.mul(c);
                let v = sigma.entry(p).or_insert_with(|| a.socle_coefficient_monomial(&p)).clone();
                m.set(i, j, v);
            }
        }
        let rank = m.rank();
        if rank != rows.len() {
            return fail(t, format!("pairing with degree {} has rank {rank} < {}", s - t, rows.len()));
        }
        pairing_ranks.push(rank);
    }
    Ok(GorensteinReport {
        socle_degree: s,
        hilbert,
        pairing_ranks,
    })
}
