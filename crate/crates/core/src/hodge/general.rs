use std::collections::HashMap;
use std::sync::{Arc, RwLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;

use super::associated::{check_degree_range, AssociatedIdeal};

use crate::algebra::{enumerate_monomials, Fp, Monomial, MonomialOrder, Polynomial, Rational};
use crate::error::{Error, Result};
use crate::ideal::{is_smooth, jacobian_ideal, DegreeSpan, IdealModel, MonomialBasis};
use crate::linalg::{crt, primes_below_2_31, rational_reconstruction, row_mod, Matrix, ModEchelon, SparseRow};

/// `S/J` for a smooth hypersurface, with its socle functional `sigma` on
/// `S_T`, `T = (d-2)n`.
///
/// `J_T` is a hyperplane of `S_T`. Its annihilator is computed modulo many
/// word-size primes, lifted by Chinese remaindering and rational
/// reconstruction, and accepted only once it vanishes exactly on every
/// spanning row `x^a df/dx_i` of `J_T`.
pub struct JacobianRing {
    pub f: Polynomial,
    pub d: u32,
    pub ideal: IdealModel,
    /// `(d-2)n`.
    pub top: u32,
    /// Monomial with `sigma = 1`; its class spans `(S/J)_T`.
    pub socle: Monomial,
    top_basis: Arc<MonomialBasis>,
    sigma: Vec<Rational>,
    hilbert: Vec<u64>,
    standard: RwLock<HashMap<u32, Vec<Monomial>>>,
}

/// `(1 + q + ... + q^{d-2})^n` up to degree `top`.
fn complete_intersection_hilbert(n: usize, d: u32, top: u32) -> Vec<u64> {
    let mut h = vec![0u64; top as usize + 1];
    h[0] = 1;
    for _ in 0..n {
        let mut next = vec![0u64; h.len()];
        for (i, &c) in h.iter().enumerate() {
            for j in 0..=(d as usize - 2) {
                if i + j < next.len() {
                    next[i + j] += c;
                }
            }
        }
        h = next;
    }
    h
}

/// Rows `x^a df/dx_i` spanning `J_t`, sorted by leading column.
fn jacobian_rows(gens: &[Polynomial], basis: &MonomialBasis, d: u32) -> Vec<SparseRow> {
    let t = basis.degree;
    if t + 1 < d {
        return Vec::new();
    }
    let shifts = enumerate_monomials(basis.nvars, t + 1 - d, &basis.order);
    let mut rows: Vec<SparseRow> = gens
        .iter()
        .flat_map(|g| shifts.iter().map(move |a| basis.row_of(&g.mul_monomial(a))))
        .filter(|r| !r.is_empty())
        .collect();
    rows.sort_by_key(|r| r[0].0);
    rows
}

/// Annihilator modulo `p` using only the rows listed in `keep` (all rows
/// when `None`); also returns the rows that were independent.
fn annihilator_mod(rows: &[SparseRow], keep: Option<&[usize]>, ncols: usize, p: u64) -> Option<(usize, Vec<u64>, Vec<usize>)> {
    let mut e = ModEchelon::new(p);
    let mut independent = Vec::new();
    let indices: Vec<usize> = match keep {
        Some(k) => k.to_vec(),
        None => (0..rows.len()).collect(),
    };
    for i in indices {
        if e.insert(row_mod(&rows[i], p)?) {
            independent.push(i);
        }
    }
    let (free, vals) = e.annihilator(ncols)?;
    Some((free, vals, independent))
}

/// Exact annihilator of the row span, normalized to 1 on its free column.
fn annihilator_multimodular(rows: &[SparseRow], ncols: usize) -> Option<(usize, Vec<Rational>)> {
    let batch_size = rayon::current_num_threads().max(1);
    let mut primes = primes_below_2_31();
    let mut first: Option<(usize, Vec<usize>)> = None;
    let mut residues: Vec<BigInt> = vec![BigInt::zero(); ncols];
    let mut modulus = BigInt::one();
    let probes = [0, ncols / 2, ncols - 1];
    for _ in 0..4096 / batch_size {
        let batch: Vec<u64> = primes.by_ref().take(batch_size).collect();
        let keep = first.as_ref().map(|(_, k)| k.as_slice());
        let images: Vec<_> = batch.par_iter().map(|&p| annihilator_mod(rows, keep, ncols, p)).collect();
        for (p, image) in batch.into_iter().zip(images) {
            let Some((c, vals, independent)) = image else { continue };
            // a prime where the free column moves is unlucky
            if first.get_or_insert((c, independent)).0 != c {
                continue;
            }
            for (r, v) in residues.iter_mut().zip(&vals) {
                *r = crt(r, &modulus, *v, p);
            }
            modulus *= BigInt::from(p);
        }
        if first.is_none() || probes.iter().any(|&i| rational_reconstruction(&residues[i], &modulus).is_none()) {
            continue;
        }
        let Some(sigma) = residues
            .iter()
            .map(|r| rational_reconstruction(r, &modulus))
            .collect::<Option<Vec<Rational>>>()
        else {
            continue;
        };
        let exact = rows
            .par_iter()
            .all(|r| r.iter().fold(Rational::zero(), |acc, (c, x)| acc + x * &sigma[*c]).is_zero());
        if exact {
            return first.map(|(c, _)| (c, sigma));
        }
    }
    None
}

impl JacobianRing {
    pub fn new(f: &Polynomial) -> Result<Self> {
        let cert = is_smooth(f)?;
        if !cert.smooth {
            return Err(Error::Singular(cert.obstruction.unwrap_or_default()));
        }
        let d = f.homogeneous_degree().expect("checked by is_smooth");
        let n = f.nvars();
        let order = MonomialOrder::grevlex();
        let ideal = jacobian_ideal(f, &order)?;
        let top = (d - 2) * n as u32;
        let gens: Vec<Polynomial> = (0..n).map(|v| f.partial_derivative(v)).collect();
        let top_basis = Arc::new(MonomialBasis::new(n, top, &order));
        let rows = jacobian_rows(&gens, &top_basis, d);
        let (free, sigma) = annihilator_multimodular(&rows, top_basis.len())
            .ok_or_else(|| Error::Singular(format!("J_{top} is not a hyperplane of S_{top}")))?;
        Ok(JacobianRing {
            f: f.clone(),
            d,
            socle: top_basis.monomial(free),
            ideal,
            top,
            top_basis,
            sigma,
            hilbert: complete_intersection_hilbert(n, d, top + 1),
            standard: RwLock::new(HashMap::new()),
        })
    }

    pub fn nvars(&self) -> usize {
        self.f.nvars()
    }

    /// Remainder modulo `J` on the standard monomials of the Gröbner basis.
    pub fn reduce(&self, p: &Polynomial) -> Polynomial {
        self.ideal.normal_form(p)
    }

    /// Monomials whose classes form a basis of `(S/J)_t`. Chosen as the
    /// non-pivot columns of `J_t` modulo a prime; when their number is
    /// `h_J(t)` they are independent modulo `J_t` over `Q` as well.
    pub fn standard_monomials(&self, t: u32) -> Vec<Monomial> {
        if let Some(v) = self.standard.read().expect("lock").get(&t) {
            return v.clone();
        }
        let n = self.nvars();
        let basis = MonomialBasis::new(n, t, &MonomialOrder::grevlex());
        let gens: Vec<Polynomial> = (0..n).map(|v| self.f.partial_derivative(v)).collect();
        let expected = self.hilbert.get(t as usize).copied().unwrap_or(0) as usize;
        let mut e = ModEchelon::new(Fp::P);
        let modular = jacobian_rows(&gens, &basis, self.d)
            .iter()
            .try_for_each(|r| row_mod(r, Fp::P).map(|m| {
                e.insert(m);
            }))
            .map(|()| (0..basis.len()).filter(|c| !e.is_pivot(*c)).map(|c| basis.monomial(c)).collect::<Vec<_>>())
            .filter(|v| v.len() == expected);
        let v = modular.unwrap_or_else(|| self.ideal.span(t).standard_monomials());
        self.standard.write().expect("lock").insert(t, v.clone());
        v
    }

    /// Socle coefficient of a monomial of degree `top`.
    pub fn sigma(&self, m: &Monomial) -> Rational {
        let i = self.top_basis.position(m).expect("monomial of the top degree");
        self.sigma[i].clone()
    }

    /// `sigma(p * q)` for polynomials with `deg p + deg q = top`.
    pub fn pairing(&self, p: &Polynomial, q: &Polynomial) -> Rational {
        let mut acc = Rational::zero();
        for (a, x) in p.terms() {
            for (b, y) in q.terms() {
                acc += x * y * self.sigma(&a.mul(b));
            }
        }
        acc
    }
}

/// `I(gamma)` from a representative `f_gamma` of degree `s = (k+1)(d-2)`:
/// `W = f_gamma^perp` in `S_s` under the socle pairing of `S/J`, then the
/// largest ideal with `I_s = W`, namely `I_t = {h : h S_{s-t} ⊆ W}`.
pub fn associated_ideal_general(f: &Polynomial, f_gamma: &Polynomial) -> Result<AssociatedIdeal> {
    let ring = JacobianRing::new(f)?;
    associated_ideal_in(&ring, f_gamma)
}

/// [`associated_ideal_general`] with a prepared Jacobian ring.
pub fn associated_ideal_in(ring: &JacobianRing, f_gamma: &Polynomial) -> Result<AssociatedIdeal> {
    let n = ring.nvars();
    if n % 2 != 0 {
        return Err(Error::Precondition(format!("{n} variables; need an odd-dimensional projective space")));
    }
    let k = n / 2 - 1;
    let d = ring.d;
    check_degree_range(k, d)?;
    let s = (k as u32 + 1) * (d - 2);
    match f_gamma.homogeneous_degree() {
        Some(e) if e == s => {}
        Some(e) => return Err(Error::DegreeMismatch { expected: s, got: e }),
        None if f_gamma.is_zero() => return Err(Error::TrivialClass),
        None => return Err(Error::Precondition("f_gamma must be homogeneous".into())),
    }
    let order = MonomialOrder::grevlex();
    let top_basis = Arc::new(MonomialBasis::new(n, s, &order));
    // phi(m) = sigma(m f_gamma) on the monomials of S_s; it vanishes exactly
    // when f_gamma lies in J, the pairing being perfect
    let phi: Vec<Rational> = top_basis
        .monomials()
        .par_iter()
        .map(|m| f_gamma.terms().fold(Rational::zero(), |acc, (u, c)| acc + c * ring.sigma(&m.mul(u))))
        .collect();
    if phi.iter().all(Zero::is_zero) {
        return Err(Error::TrivialClass);
    }
    let pieces: Vec<Arc<DegreeSpan>> = (0..=s)
        .into_par_iter()
        .map(|t| Arc::new(ancestor_piece(&phi, &top_basis, t, &order)))
        .collect();
    let gens: Vec<Polynomial> = (0..n).map(|v| ring.f.partial_derivative(v)).collect();
    let inside = jacobian_rows(&gens, &pieces[s as usize].basis().clone(), d)
        .into_iter()
        .all(|r| pieces[s as usize].reduce_row(r).is_empty());
    if !inside {
        return Err(Error::Precondition("J_s is not contained in the perp of f_gamma".into()));
    }
    let mut gens: Vec<Polynomial> = pieces[0].polynomials();
    for t in 1..=s + 1 {
        let basis = Arc::new(MonomialBasis::new(n, t, &order));
        let target = if t <= s {
            pieces[t as usize].clone()
        } else {
            Arc::new(DegreeSpan::full(basis.clone()))
        };
        let product = DegreeSpan::next_degree(&pieces[t as usize - 1], basis, &[]);
        gens.extend(product.complement_in(&target));
    }
    let ideal = IdealModel::new(n, gens, &order)?;
    let h = ideal.hilbert_function(s);
    if h != 1 || ideal.hilbert_function(s + 1) != 0 {
        return Err(Error::NotGorenstein {
            degree: s,
            reason: format!("ancestor ideal has h(s) = {h}"),
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

/// `I_t = {h in S_t : phi(h u) = 0 for all u in S_{s-t}}`, the kernel of the
/// catalecticant map of `phi`.
fn ancestor_piece(phi: &[Rational], top: &MonomialBasis, t: u32, order: &MonomialOrder) -> DegreeSpan {
    let n = top.nvars;
    let s = top.degree;
    let rows = Arc::new(MonomialBasis::new(n, t, order));
    let cols = MonomialBasis::new(n, s - t, order);
    DegreeSpan::kernel(rows.clone(), cols.len(), |i| {
        let m = rows.monomial(i);
        let row: SparseRow = cols
            .monomials()
            .iter()
            .enumerate()
            .filter_map(|(j, u)| {
                let v = &phi[top.position(&m.mul(u)).expect("degree s monomial")];
                (!v.is_zero()).then(|| (j, v.clone()))
            })
            .collect();
        row
    })
}

/// A representative `f_gamma`, up to scale, whose perp is `I_s`: the unique
/// (up to scale) element of `(S/J)_s` pairing to zero with every element of
/// `I_s`.
pub fn representative_from_ideal(ring: &JacobianRing, a: &AssociatedIdeal) -> Result<Polynomial> {
    let s = a.socle_degree;
    let std = ring.standard_monomials(s);
    let w = a.ideal.span(s).polynomials();
    let rows: Vec<Vec<Rational>> = w
        .iter()
        .map(|p| std.iter().map(|b| ring.pairing(p, &Polynomial::monomial(*b))).collect())
        .collect();
    let kernel = Matrix::from_rows(rows).right_kernel();
    if kernel.len() != 1 {
        return Err(Error::NotGorenstein {
            degree: s,
            reason: format!("the annihilator of I_s in (S/J)_s has dimension {}", kernel.len()),
        });
    }
    Ok(Polynomial::from_terms(ring.nvars(), std.iter().copied().zip(kernel[0].iter().cloned())))
}

/// For `f = sum x_{v_i} g_i` with a coordinate plane `V(x_{v_0}, ..., x_{v_k})`,
/// the determinant of `dg_i/dx_j` over the remaining variables. It has
/// degree `(k+1)(d-2)` and represents the class of the plane up to scale.
pub fn plane_representative(dec: &super::plane::PlaneDecomposition) -> Result<Polynomial> {
    let n = dec.plane.nvars();
    let mut cut = Vec::with_capacity(dec.forms().len());
    for l in dec.forms() {
        let mut terms = l.terms();
        match (terms.next(), terms.next()) {
            (Some((m, _)), None) => cut.push((0..n).find(|&v| m.exp(v) == 1).expect("linear monomial")),
            _ => return Err(Error::Precondition(format!("{l} is not a coordinate form"))),
        }
    }
    let free: Vec<usize> = (0..n).filter(|v| !cut.contains(v)).collect();
    let m: Vec<Vec<Polynomial>> = dec
        .cofactors
        .iter()
        .map(|g| free.iter().map(|&v| g.partial_derivative(v)).collect())
        .collect();
    Ok(determinant(&m))
}

/// Laplace expansion along the first row.
fn determinant(m: &[Vec<Polynomial>]) -> Polynomial {
    match m.len() {
        0 => unreachable!("empty matrix"),
        1 => m[0][0].clone(),
        len => {
            let mut acc = Polynomial::zero(m[0][0].nvars());
            for j in 0..len {
                let minor: Vec<Vec<Polynomial>> = m[1..]
                    .iter()
                    .map(|r| r.iter().enumerate().filter(|(c, _)| *c != j).map(|(_, p)| p.clone()).collect())
                    .collect();
                let term = &m[0][j] * &determinant(&minor);
                acc = if j % 2 == 0 { &acc + &term } else { &acc - &term };
            }
            acc
        }
    }
}
