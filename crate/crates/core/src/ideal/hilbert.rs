//! Hilbert series of monomial ideals.
//!
//! The numerator `N(q)` of `HS(S/I) = N(q) / (1-q)^n` is computed with the
//! pivot recursion `N(I) = N(I + <p>) + q^deg(p) N(I : p)` where `p` is a
//! power of the most frequent variable; ideals generated by pairwise coprime
//! monomials are base cases with `N = prod (1 - q^deg m)`.

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use crate::algebra::{binomial, Monomial};

/// Polynomial in `q` with integer coefficients, lowest degree first.
pub type Numerator = Vec<i128>;

fn add_into(acc: &mut Numerator, p: &Numerator, shift: usize) {
    if acc.len() < p.len() + shift {
        acc.resize(p.len() + shift, 0);
    }
    for (i, c) in p.iter().enumerate() {
        acc[i + shift] += c;
    }
}

fn minimalize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_by_key(|m| m.degree());
    gens.dedup();
    let mut out: Vec<Monomial> = Vec::with_capacity(gens.len());
    for m in gens {
        if !out.iter().any(|g| g.divides(&m)) {
            out.push(m);
        }
    }
    out
}

fn numerator_rec(gens: Vec<Monomial>) -> Numerator {
    if gens.is_empty() {
        return vec![1];
    }
    if gens.iter().any(|m| m.is_one()) {
        return vec![0];
    }
    let pairwise_coprime = gens
        .iter()
        .enumerate()
        .all(|(i, a)| gens[i + 1..].iter().all(|b| a.is_coprime(b)));
    if pairwise_coprime {
        let mut acc: Numerator = vec![1];
        for m in &gens {
            let d = m.degree() as usize;
            let mut next = vec![0i128; acc.len() + d];
            for (i, c) in acc.iter().enumerate() {
                next[i] += c;
                next[i + d] -= c;
            }
            acc = next;
        }
        return acc;
    }
    let n = gens[0].nvars();
    let is_pure = |m: &Monomial| (0..n).filter(|&v| m.exp(v) > 0).count() == 1;
    // most frequent variable; it is shared by two generators
    let mut freq = vec![0usize; n];
    for m in &gens {
        for (v, f) in freq.iter_mut().enumerate() {
            if m.exp(v) > 0 {
                *f += 1;
            }
        }
    }
    let var = (0..n).max_by_key(|&v| (freq[v], std::cmp::Reverse(v))).expect("variables");
    // exponents from mixed generators stay below any pure power of `var`, so
    // the pivot is not in the ideal and both branches grow the ideal
    let mut exps: Vec<u32> = gens
        .iter()
        .filter(|m| !is_pure(m))
        .map(|m| m.exp(var))
        .filter(|&e| e > 0)
        .collect();
    exps.sort_unstable();
    let e = exps[exps.len() / 2];
    let pivot = Monomial::one(n).with_exp(var, e);

    let mut sum = gens.clone();
    sum.push(pivot);
    let sum = minimalize(sum);
    let colon = minimalize(
        gens.iter()
            .map(|m| m.with_exp(var, m.exp(var).saturating_sub(e)))
            .collect(),
    );
    let mut acc = numerator_rec(sum);
    add_into(&mut acc, &numerator_rec(colon), e as usize);
    acc
}

/// Numerator of the Hilbert series of `S / <gens>`.
pub fn hilbert_numerator(gens: &[Monomial]) -> Numerator {
    let mut n = numerator_rec(minimalize(gens.to_vec()));
    while n.len() > 1 && n.last() == Some(&0) {
        n.pop();
    }
    n
}

/// `dim (S / <gens>)_t` in `nvars` variables, from the series numerator.
pub fn hilbert_value(numerator: &Numerator, nvars: usize, t: u32) -> u64 {
    let mut acc = BigInt::zero();
    for (i, c) in numerator.iter().enumerate() {
        if i as u32 > t || *c == 0 {
            continue;
        }
        let k = (t - i as u32) as u64;
        let b = if nvars == 0 {
            u64::from(k == 0)
        } else {
            binomial(k + nvars as u64 - 1, nvars as u64 - 1)
        };
        acc += BigInt::from(*c) * BigInt::from(b);
    }
    acc.to_u64().expect("Hilbert function is a nonnegative count")
}

/// If `S/<gens>` is Artinian, its Hilbert function as a list ending at the
/// last nonzero value; `None` otherwise.
pub fn artinian_hilbert_vector(gens: &[Monomial], nvars: usize) -> Option<Vec<u64>> {
    let has_power = |v: usize| {
        gens.iter()
            .any(|m| m.exp(v) > 0 && (0..nvars).all(|w| w == v || m.exp(w) == 0))
    };
    if !(0..nvars).all(has_power) {
        return None;
    }
    let num = hilbert_numerator(gens);
    // the series is a polynomial of degree at most deg(N) - n
    let top = num.len().saturating_sub(1).saturating_sub(nvars) as u32;
    let mut v: Vec<u64> = (0..=top).map(|t| hilbert_value(&num, nvars, t)).collect();
    while v.last() == Some(&0) {
        v.pop();
    }
    Some(v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{enumerate_monomials, MonomialOrder};

    fn brute(gens: &[Monomial], nvars: usize, t: u32) -> u64 {
        enumerate_monomials(nvars, t, &MonomialOrder::grevlex())
            .into_iter()
            .filter(|m| !gens.iter().any(|g| g.divides(m)))
            .count() as u64
    }

    #[test]
    fn complete_intersection_of_powers() {
        let gens: Vec<Monomial> = (0..3).map(|v| Monomial::one(3).with_exp(v, 5)).collect();
        let v = artinian_hilbert_vector(&gens, 3).unwrap();
        assert_eq!(v.iter().sum::<u64>(), 125);
        assert_eq!(v.len(), 13);
        assert_eq!(v[6], 19);
    }

    #[test]
    fn agrees_with_enumeration() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for _ in 0..40 {
            let gens: Vec<Monomial> = (0..rng.gen_range(1..6))
                .map(|_| Monomial::from_slice(&(0..4).map(|_| rng.gen_range(0..4)).collect::<Vec<_>>()))
                .filter(|m| !m.is_one())
                .collect();
            let num = hilbert_numerator(&gens);
            for t in 0..8 {
                assert_eq!(hilbert_value(&num, 4, t), brute(&gens, 4, t));
            }
        }
    }

    #[test]
    fn non_artinian() {
        let gens = vec![Monomial::from_slice(&[2, 0])];
        assert!(artinian_hilbert_vector(&gens, 2).is_none());
        assert_eq!(hilbert_value(&hilbert_numerator(&gens), 2, 5), 2);
    }
}
