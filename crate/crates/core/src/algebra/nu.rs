//! Scalars depending on the free parameter `nu`.
//!
//! [`NuPoly`] is the workhorse: Gram entries are `a + b*nu` and fraction-free
//! elimination keeps everything polynomial. [`NuFraction`] exists for the few
//! places that genuinely divide (generic kernels over `Q(nu)`).

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

use super::rational::{format_rational, Rational};
use crate::error::AlgebraError;

/// Polynomial in `nu` with rational coefficients, lowest degree first, no
/// trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct NuPoly {
    coeffs: Vec<Rational>,
}

impl NuPoly {
    pub fn zero() -> Self {
        NuPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// The parameter itself.
    pub fn nu() -> Self {
        Self::from_coeffs(vec![Rational::zero(), Rational::one()])
    }

    /// `a + b*nu`.
    pub fn linear(a: Rational, b: Rational) -> Self {
        Self::from_coeffs(vec![a, b])
    }

    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        NuPoly { coeffs }
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// Degree; `None` for zero.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Rational {
        self.coeffs.last().cloned().unwrap_or_else(Rational::zero)
    }

    pub fn eval(&self, nu: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * nu + c;
        }
        acc
    }

    pub fn scale(&self, c: &Rational) -> NuPoly {
        NuPoly::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn monic(&self) -> NuPoly {
        if self.is_zero() {
            return self.clone();
        }
        self.scale(&(Rational::one() / self.leading()))
    }

    pub fn derivative(&self) -> NuPoly {
        NuPoly::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * Rational::from_integer((i as i64).into()))
                .collect(),
        )
    }

    /// Euclidean division; panics on division by zero.
    pub fn div_rem(&self, d: &NuPoly) -> (NuPoly, NuPoly) {
        assert!(!d.is_zero(), "division by the zero polynomial");
        let dd = d.coeffs.len() - 1;
        let lc_inv = Rational::one() / d.leading();
        let mut r = self.coeffs.clone();
        if r.len() <= dd {
            return (NuPoly::zero(), self.clone());
        }
        let mut q = vec![Rational::zero(); r.len() - dd];
        for i in (0..q.len()).rev() {
            let c = &r[i + dd] * &lc_inv;
            if !c.is_zero() {
                for (j, dc) in d.coeffs.iter().enumerate() {
                    r[i + j] -= &c * dc;
                }
            }
            q[i] = c;
        }
        r.truncate(dd);
        (NuPoly::from_coeffs(q), NuPoly::from_coeffs(r))
    }

    /// `self / d`, or `None` when `d` does not divide `self`.
    pub fn exact_div(&self, d: &NuPoly) -> Option<NuPoly> {
        let (q, r) = self.div_rem(d);
        r.is_zero().then_some(q)
    }

    pub fn rem(&self, d: &NuPoly) -> NuPoly {
        self.div_rem(d).1
    }

    /// Monic gcd (zero only if both inputs are zero).
    pub fn gcd(&self, other: &NuPoly) -> NuPoly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// `(g, s, t)` with `s*self + t*other = g = gcd(self, other)`, `g` monic.
    pub fn ext_gcd(&self, other: &NuPoly) -> (NuPoly, NuPoly, NuPoly) {
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (NuPoly::one(), NuPoly::zero());
        let (mut t0, mut t1) = (NuPoly::zero(), NuPoly::one());
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1);
            r0 = std::mem::replace(&mut r1, r);
            let s = &s0 - &(&q * &s1);
            s0 = std::mem::replace(&mut s1, s);
            let t = &t0 - &(&q * &t1);
            t0 = std::mem::replace(&mut t1, t);
        }
        if r0.is_zero() {
            return (r0, s0, t0);
        }
        let inv = Rational::one() / r0.leading();
        (r0.scale(&inv), s0.scale(&inv), t0.scale(&inv))
    }

    /// Squarefree part (monic).
    pub fn squarefree(&self) -> NuPoly {
        if self.degree().unwrap_or(0) == 0 {
            return NuPoly::one();
        }
        let g = self.gcd(&self.derivative());
        self.exact_div(&g).expect("gcd divides").monic()
    }

    pub fn pow(&self, e: u32) -> NuPoly {
        let mut acc = NuPoly::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Normalizes the sign so that the leading coefficient is positive.
    pub fn abs_sign(&self) -> NuPoly {
        if self.leading().is_negative() {
            -self
        } else {
            self.clone()
        }
    }
}

impl fmt::Display for NuPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let a = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            first = false;
            let mono = match i {
                0 => String::new(),
                1 => "nu".to_string(),
                _ => format!("nu^{i}"),
            };
            if i == 0 {
                write!(f, "{}", format_rational(&a))?;
            } else if a.is_one() {
                write!(f, "{mono}")?;
            } else {
                write!(f, "{}*{mono}", format_rational(&a))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for NuPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Serialize for NuPoly {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl Add for &NuPoly {
    type Output = NuPoly;
    fn add(self, rhs: &NuPoly) -> NuPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        NuPoly::from_coeffs((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &NuPoly {
    type Output = NuPoly;
    fn sub(self, rhs: &NuPoly) -> NuPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        NuPoly::from_coeffs((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &NuPoly {
    type Output = NuPoly;
    fn mul(self, rhs: &NuPoly) -> NuPoly {
        if self.is_zero() || rhs.is_zero() {
            return NuPoly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        NuPoly::from_coeffs(out)
    }
}

impl Neg for &NuPoly {
    type Output = NuPoly;
    fn neg(self) -> NuPoly {
        NuPoly::from_coeffs(self.coeffs.iter().map(|c| -c.clone()).collect())
    }
}

/// Element of `Q(nu)`, kept reduced with a monic denominator.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct NuFraction {
    num: NuPoly,
    den: NuPoly,
}

impl NuFraction {
    pub fn new(num: NuPoly, den: NuPoly) -> Result<Self, AlgebraError> {
        if den.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(Self::from_poly(NuPoly::zero()));
        }
        let g = num.gcd(&den);
        let num = num.exact_div(&g).expect("gcd divides");
        let den = den.exact_div(&g).expect("gcd divides");
        let lc = den.leading();
        Ok(NuFraction {
            num: num.scale(&(Rational::one() / &lc)),
            den: den.scale(&(Rational::one() / lc)),
        })
    }

    pub fn from_poly(p: NuPoly) -> Self {
        NuFraction { num: p, den: NuPoly::one() }
    }

    pub fn numer(&self) -> &NuPoly {
        &self.num
    }

    pub fn denom(&self) -> &NuPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn eval(&self, nu: &Rational) -> Result<Rational, AlgebraError> {
        let d = self.den.eval(nu);
        if d.is_zero() {
            return Err(AlgebraError::Pole(format_rational(nu)));
        }
        Ok(self.num.eval(nu) / d)
    }

    pub fn add(&self, o: &NuFraction) -> NuFraction {
        NuFraction::new(&(&self.num * &o.den) + &(&o.num * &self.den), &self.den * &o.den).expect("nonzero denominator")
    }

    pub fn sub(&self, o: &NuFraction) -> NuFraction {
        NuFraction::new(&(&self.num * &o.den) - &(&o.num * &self.den), &self.den * &o.den).expect("nonzero denominator")
    }

    pub fn mul(&self, o: &NuFraction) -> NuFraction {
        NuFraction::new(&self.num * &o.num, &self.den * &o.den).expect("nonzero denominator")
    }

    pub fn div(&self, o: &NuFraction) -> Result<NuFraction, AlgebraError> {
        NuFraction::new(&self.num * &o.den, &self.den * &o.num)
    }
}

impl fmt::Display for NuFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == NuPoly::one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

/// A coefficient value: either a plain rational or a function of `nu`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Scalar {
    Rational(Rational),
    Nu(NuFraction),
}

impl Scalar {
    /// Specializes `nu` to `nu0`.
    pub fn evaluate(&self, nu0: &Rational) -> Result<Rational, AlgebraError> {
        match self {
            Scalar::Rational(q) => Ok(q.clone()),
            Scalar::Nu(f) => f.eval(nu0),
        }
    }
}

impl From<NuPoly> for Scalar {
    fn from(p: NuPoly) -> Self {
        Scalar::Nu(NuFraction::from_poly(p))
    }
}

impl From<Rational> for Scalar {
    fn from(q: Rational) -> Self {
        Scalar::Rational(q)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::{int, rat};

    fn nu_nu1() -> NuPoly {
        &NuPoly::nu() * &(&NuPoly::nu() + &NuPoly::one())
    }

    #[test]
    fn evaluations() {
        assert_eq!(nu_nu1().eval(&int(-1)), int(0));
        assert_eq!(NuPoly::nu().eval(&int(0)), int(0));
        let p = &NuPoly::nu().pow(2) + &NuPoly::one();
        assert_eq!(p.eval(&int(2)), int(5));
    }

    #[test]
    fn evaluation_is_a_ring_morphism() {
        let a = NuPoly::linear(rat(1, 2), int(3));
        let b = NuPoly::from_coeffs(vec![int(-1), int(0), rat(2, 7)]);
        for x in [int(-3), rat(5, 4), int(0)] {
            assert_eq!((&a * &b).eval(&x), a.eval(&x) * b.eval(&x));
            assert_eq!((&a + &b).eval(&x), a.eval(&x) + b.eval(&x));
        }
    }

    #[test]
    fn pole_is_reported() {
        let f = NuFraction::new(NuPoly::one(), NuPoly::nu()).unwrap();
        assert!(matches!(Scalar::Nu(f).evaluate(&int(0)), Err(AlgebraError::Pole(_))));
    }

    #[test]
    fn division_and_gcd() {
        let p = nu_nu1();
        assert_eq!(p.exact_div(&NuPoly::nu()).unwrap(), &NuPoly::nu() + &NuPoly::one());
        assert!(p.exact_div(&(&NuPoly::nu() - &NuPoly::one())).is_none());
        assert_eq!(p.gcd(&(&NuPoly::nu() * &NuPoly::nu())), NuPoly::nu());
        let sq = &p * &NuPoly::nu();
        assert_eq!(sq.squarefree(), p);
        let (g, s, t) = p.ext_gcd(&(&NuPoly::nu() - &NuPoly::one()));
        assert_eq!(g, NuPoly::one());
        assert_eq!(&(&s * &p) + &(&t * &(&NuPoly::nu() - &NuPoly::one())), NuPoly::one());
    }

    #[test]
    fn display() {
        assert_eq!(nu_nu1().to_string(), "nu^2 + nu");
        assert_eq!(NuPoly::linear(int(1), int(-1)).to_string(), "-nu + 1");
    }
}
