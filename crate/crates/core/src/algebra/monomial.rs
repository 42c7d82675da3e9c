use std::fmt;

use super::order::MonomialOrder;
use crate::error::AlgebraError;

/// Largest ambient ring supported: `x0 .. x23`.
pub const MAX_VARS: usize = 24;

/// Dense exponent vector over at most [`MAX_VARS`] variables.
///
/// Exponents are stored as `u8`; the total degree is cached. The derived
/// `Ord` is a fixed canonical order (degree first) used for storage only;
/// algorithms that need a term order take a [`MonomialOrder`].
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    deg: u16,
    len: u8,
    exps: [u8; MAX_VARS],
}

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        assert!(nvars <= MAX_VARS, "at most {MAX_VARS} variables supported");
        Monomial {
            deg: 0,
            len: nvars as u8,
            exps: [0; MAX_VARS],
        }
    }

    pub fn var(nvars: usize, index: usize) -> Self {
        assert!(index < nvars, "variable x{index} out of range for {nvars} variables");
        let mut m = Self::one(nvars);
        m.exps[index] = 1;
        m.deg = 1;
        m
    }

    pub fn from_exponents(exps: &[u32]) -> Result<Self, AlgebraError> {
        if exps.len() > MAX_VARS {
            return Err(AlgebraError::TooManyVariables(exps.len()));
        }
        let mut m = Self::one(exps.len());
        for (i, &e) in exps.iter().enumerate() {
            m.exps[i] = u8::try_from(e).map_err(|_| AlgebraError::ExponentOverflow(e))?;
            m.deg += e as u16;
        }
        Ok(m)
    }

    /// Convenience constructor for literals in tests and scenario builders.
    pub fn from_slice(exps: &[u32]) -> Self {
        Self::from_exponents(exps).expect("valid exponent vector")
    }

    #[inline]
    pub fn nvars(&self) -> usize {
        self.len as usize
    }

    #[inline]
    pub fn degree(&self) -> u32 {
        self.deg as u32
    }

    #[inline]
    pub fn exp(&self, i: usize) -> u32 {
        self.exps[i] as u32
    }

    #[inline]
    pub fn exponents(&self) -> &[u8] {
        &self.exps[..self.len as usize]
    }

    pub fn is_one(&self) -> bool {
        self.deg == 0
    }

    #[inline]
    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.len, other.len);
        let mut out = *self;
        for i in 0..self.len as usize {
            out.exps[i] = self.exps[i]
                .checked_add(other.exps[i])
                .expect("monomial exponent overflow (max 255)");
        }
        out.deg = self.deg + other.deg;
        out
    }

    /// True when `self` divides `other` componentwise.
    #[inline]
    pub fn divides(&self, other: &Monomial) -> bool {
        if self.deg > other.deg {
            return false;
        }
        self.exps[..self.len as usize]
            .iter()
            .zip(&other.exps[..self.len as usize])
            .all(|(a, b)| a <= b)
    }

    /// `self / other`, defined iff `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        if !other.divides(self) {
            return None;
        }
        let mut out = *self;
        for i in 0..self.len as usize {
            out.exps[i] -= other.exps[i];
        }
        out.deg = self.deg - other.deg;
        Some(out)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let mut out = *self;
        let mut deg = 0u16;
        for i in 0..self.len as usize {
            out.exps[i] = self.exps[i].max(other.exps[i]);
            deg += out.exps[i] as u16;
        }
        out.deg = deg;
        out
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exponents()
            .iter()
            .zip(other.exponents())
            .all(|(&a, &b)| a == 0 || b == 0)
    }

    /// Bitmask of variables with positive exponent (divisibility prefilter).
    #[inline]
    pub fn support_mask(&self) -> u32 {
        let mut mask = 0u32;
        for (i, &e) in self.exponents().iter().enumerate() {
            if e > 0 {
                mask |= 1 << i;
            }
        }
        mask
    }

    /// Same exponents in a ring with `nvars` variables (new ones get exponent 0).
    pub fn extend_to(&self, nvars: usize) -> Monomial {
        assert!(nvars >= self.nvars() && nvars <= MAX_VARS);
        let mut out = *self;
        out.len = nvars as u8;
        out
    }

    /// Same exponents in a ring with fewer variables; the dropped ones must
    /// have exponent 0.
    pub fn restrict_to(&self, nvars: usize) -> Monomial {
        assert!(nvars <= self.nvars());
        assert!(self.exps[nvars..self.len as usize].iter().all(|&e| e == 0), "restricted variable occurs");
        let mut out = *self;
        out.len = nvars as u8;
        out
    }

    pub fn with_exp(&self, i: usize, e: u32) -> Monomial {
        let mut out = *self;
        out.deg = out.deg - out.exps[i] as u16 + e as u16;
        out.exps[i] = u8::try_from(e).expect("monomial exponent overflow (max 255)");
        out
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (i, &e) in self.exponents().iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "x{i}")?;
            } else {
                write!(f, "x{i}^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// All monomials of exactly `degree` in `nvars` variables, largest first
/// with respect to `order`.
pub fn enumerate_monomials(nvars: usize, degree: u32, order: &MonomialOrder) -> Vec<Monomial> {
    let mut out = Vec::new();
    if nvars == 0 {
        return out;
    }
    let mut cur = Monomial::one(nvars);
    fill(&mut out, &mut cur, 0, degree);
    out.sort_unstable_by(|a, b| order.cmp(b, a));
    out
}

fn fill(out: &mut Vec<Monomial>, cur: &mut Monomial, var: usize, remaining: u32) {
    let n = cur.nvars();
    if var == n - 1 {
        *cur = cur.with_exp(var, remaining);
        out.push(*cur);
        *cur = cur.with_exp(var, 0);
        return;
    }
    for e in (0..=remaining).rev() {
        *cur = cur.with_exp(var, e);
        fill(out, cur, var + 1, remaining - e);
    }
    *cur = cur.with_exp(var, 0);
}

/// Number of monomials of degree `degree` in `nvars` variables.
pub fn monomial_count(nvars: usize, degree: u32) -> u64 {
    if nvars == 0 {
        return u64::from(degree == 0);
    }
    binomial(nvars as u64 + degree as u64 - 1, degree as u64)
}

pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc as u64
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn enumeration_counts() {
        let order = MonomialOrder::default();
        assert_eq!(enumerate_monomials(2, 0, &order), vec![Monomial::one(2)]);
        assert_eq!(enumerate_monomials(4, 2, &order).len(), 10);
        assert_eq!(enumerate_monomials(6, 6, &order).len(), 462);
    }

    #[test]
    fn enumeration_is_sorted_and_unique() {
        let order = MonomialOrder::default();
        let ms = enumerate_monomials(5, 4, &order);
        for w in ms.windows(2) {
            assert_eq!(order.cmp(&w[0], &w[1]), std::cmp::Ordering::Greater);
        }
    }

    #[test]
    fn division_roundtrip() {
        let a = Monomial::from_slice(&[2, 1, 0, 3]);
        let b = Monomial::from_slice(&[1, 1, 0, 1]);
        let q = a.div(&b).unwrap();
        assert_eq!(q.mul(&b), a);
        assert!(b.div(&a).is_none());
        assert_eq!(q.degree(), a.degree() - b.degree());
    }

    #[test]
    fn display() {
        assert_eq!(Monomial::from_slice(&[1, 0, 2]).to_string(), "x0*x2^2");
        assert_eq!(Monomial::one(3).to_string(), "1");
    }
}
