//! Coefficient fields: `Q` and the prime field `GF(2^31 - 1)`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use super::Rational;

/// Exact coefficient field.
pub trait Field: Clone + PartialEq + std::fmt::Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn is_one(&self) -> bool;
    fn add_assign(&mut self, other: &Self);
    fn neg(&self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn inv(&self) -> Self;
}

impl Field for Rational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn is_one(&self) -> bool {
        One::is_one(self)
    }
    fn add_assign(&mut self, other: &Self) {
        *self += other;
    }
    fn neg(&self) -> Self {
        -self
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn inv(&self) -> Self {
        self.recip()
    }
}

/// Residues modulo the prime `2^31 - 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Fp(u32);

impl Fp {
    pub const P: u64 = 2_147_483_647;

    /// Image of a rational number; `None` when `P` divides the denominator.
    pub fn from_rational(r: &Rational) -> Option<Fp> {
        let p = BigInt::from(Self::P);
        let den = r.denom().mod_floor(&p).to_u64().expect("small residue");
        if den == 0 {
            return None;
        }
        let num = r.numer().mod_floor(&p).to_u64().expect("small residue");
        Some(Fp(num as u32).mul(&Fp(den as u32).inv()))
    }

    pub fn value(self) -> u32 {
        self.0
    }
}

impl Field for Fp {
    fn zero() -> Self {
        Fp(0)
    }
    fn one() -> Self {
        Fp(1)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
    fn is_one(&self) -> bool {
        self.0 == 1
    }
    fn add_assign(&mut self, other: &Self) {
        self.0 = ((self.0 as u64 + other.0 as u64) % Self::P) as u32;
    }
    fn neg(&self) -> Self {
        Fp(((Self::P - self.0 as u64) % Self::P) as u32)
    }
    fn mul(&self, other: &Self) -> Self {
        Fp((self.0 as u64 * other.0 as u64 % Self::P) as u32)
    }
    fn inv(&self) -> Self {
        assert!(self.0 != 0, "inverse of zero");
        let (mut base, mut e, mut acc) = (self.0 as u64, Self::P - 2, 1u64);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base % Self::P;
            }
            base = base * base % Self::P;
            e >>= 1;
        }
        Fp(acc as u32)
    }
}

