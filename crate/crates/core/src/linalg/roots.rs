//! Exact root finding for univariate polynomials over `Q`.
//!
//! Real roots are isolated with Sturm sequences and bisection over exact
//! rationals. Rational roots are then recognized without integer
//! factorization: for a primitive integer polynomial with leading
//! coefficient `a`, every rational root `r` has `a*r` integral, so an
//! isolating interval of width below `1/|a|` contains at most one candidate.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::algebra::rational::format_rational;
use crate::algebra::{NuPoly, Rational};

fn sturm_sequence(p: &NuPoly) -> Vec<NuPoly> {
    let mut seq = vec![p.clone(), p.derivative()];
    loop {
        let n = seq.len();
        if seq[n - 1].is_zero() {
            seq.pop();
            break;
        }
        let r = seq[n - 2].rem(&seq[n - 1]);
        if r.is_zero() {
            break;
        }
        seq.push(-&r);
    }
    seq
}

fn variations(seq: &[NuPoly], x: &Rational) -> usize {
    let mut count = 0;
    let mut last: Option<bool> = None;
    for s in seq {
        let v = s.eval(x);
        if v.is_zero() {
            continue;
        }
        let pos = v.is_positive();
        if last.is_some_and(|l| l != pos) {
            count += 1;
        }
        last = Some(pos);
    }
    count
}

/// Strict bound on the absolute value of every root.
fn cauchy_bound(p: &NuPoly) -> Rational {
    let lc = p.leading();
    let deg = p.degree().unwrap_or(0);
    let mut m = Rational::zero();
    for c in &p.coeffs()[..deg] {
        let r = (c / &lc).abs();
        if r > m {
            m = r;
        }
    }
    m + Rational::one()
}

/// Where a real root lies.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RealRoot {
    Exact(Rational),
    /// Exactly one root in the open interval `(lo, hi)`.
    Interval(Rational, Rational),
}

impl Serialize for RealRoot {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            RealRoot::Exact(q) => s.serialize_str(&format_rational(q)),
            RealRoot::Interval(a, b) => s.serialize_str(&format!("({}, {})", format_rational(a), format_rational(b))),
        }
    }
}

/// Isolates the distinct real roots of `p` (any nonzero polynomial), in
/// increasing order.
pub fn isolate_real_roots(p: &NuPoly) -> Vec<RealRoot> {
    let p = p.squarefree();
    if p.degree().unwrap_or(0) == 0 {
        return Vec::new();
    }
    let seq = sturm_sequence(&p);
    let b = cauchy_bound(&p);
    let mut out = Vec::new();
    let mut stack = vec![(-b.clone(), b)];
    // endpoints on the stack are never roots
    while let Some((lo, hi)) = stack.pop() {
        let n = variations(&seq, &lo) - variations(&seq, &hi);
        if n == 0 {
            continue;
        }
        if n == 1 {
            out.push(RealRoot::Interval(lo, hi));
            continue;
        }
        let two = Rational::from_integer(2.into());
        let mid = (&lo + &hi) / &two;
        if !p.eval(&mid).is_zero() {
            stack.push((mid.clone(), hi));
            stack.push((lo, mid));
            continue;
        }
        out.push(RealRoot::Exact(mid.clone()));
        let mut delta = (&hi - &lo) / Rational::from_integer(4.into());
        loop {
            let a = &mid - &delta;
            let c = &mid + &delta;
            if !p.eval(&a).is_zero()
                && !p.eval(&c).is_zero()
                && variations(&seq, &a) - variations(&seq, &c) == 1
            {
                stack.push((c, hi.clone()));
                stack.push((lo.clone(), a));
                break;
            }
            delta /= &two;
        }
    }
    out.sort_by(|x, y| root_key(x).cmp(root_key(y)));
    out
}

fn root_key(r: &RealRoot) -> &Rational {
    match r {
        RealRoot::Exact(q) | RealRoot::Interval(q, _) => q,
    }
}

/// Primitive integer multiple of `p` (positive leading coefficient).
fn integer_primitive(p: &NuPoly) -> Vec<BigInt> {
    let lcm = p.coeffs().iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = p.coeffs().iter().map(|c| (c * Rational::from_integer(lcm.clone())).to_integer()).collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    let sign = if ints.last().is_some_and(|c| c.is_negative()) { -BigInt::one() } else { BigInt::one() };
    ints.into_iter().map(|c| c / &g * &sign).collect()
}

/// All rational roots of `p`, increasing.
pub fn rational_roots(p: &NuPoly) -> Vec<Rational> {
    let sf = p.squarefree();
    if sf.degree().unwrap_or(0) == 0 {
        return Vec::new();
    }
    let lead = integer_primitive(&sf).last().cloned().expect("nonzero").abs();
    let lead_q = Rational::from_integer(lead.clone());
    let two = Rational::from_integer(2.into());
    let mut out = Vec::new();
    for root in isolate_real_roots(&sf) {
        match root {
            RealRoot::Exact(q) => out.push(q),
            RealRoot::Interval(mut lo, mut hi) => {
                let width_limit = Rational::one() / &lead_q;
                let mut found = None;
                while &hi - &lo >= width_limit {
                    let mid = (&lo + &hi) / &two;
                    let v = sf.eval(&mid);
                    if v.is_zero() {
                        found = Some(mid);
                        break;
                    }
                    if v.is_positive() == sf.eval(&lo).is_positive() {
                        lo = mid;
                    } else {
                        hi = mid;
                    }
                }
                if found.is_none() {
                    // the only integer that can equal lead*root
                    let m = (&hi * &lead_q).floor();
                    let cand = m / &lead_q;
                    if cand > lo && cand < hi && sf.eval(&cand).is_zero() {
                        found = Some(cand);
                    }
                }
                out.extend(found);
            }
        }
    }
    out.sort();
    out
}

/// Splits the squarefree part of `p` into its rational roots and the monic
/// factor carrying all irrational roots.
pub fn split_rational(p: &NuPoly) -> (Vec<Rational>, NuPoly) {
    let mut rest = p.squarefree();
    let roots = rational_roots(&rest);
    for r in &roots {
        let lin = NuPoly::linear(-r.clone(), Rational::one());
        rest = rest.exact_div(&lin).expect("rational root divides");
    }
    (roots, rest.monic())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::{int, rat};

    fn from_roots(rs: &[Rational]) -> NuPoly {
        rs.iter().fold(NuPoly::one(), |acc, r| &acc * &NuPoly::linear(-r.clone(), int(1)))
    }

    #[test]
    fn rational_roots_are_found() {
        let p = from_roots(&[int(0), int(-1), rat(3, 7), rat(-5, 2)]);
        assert_eq!(rational_roots(&p), vec![rat(-5, 2), int(-1), int(0), rat(3, 7)]);
        let doubled = &p * &p;
        assert_eq!(rational_roots(&doubled).len(), 4);
    }

    #[test]
    fn irrational_roots_are_isolated() {
        // (nu^2 - 2)(nu - 1/3)
        let q = NuPoly::from_coeffs(vec![int(-2), int(0), int(1)]);
        let p = &q * &NuPoly::linear(rat(-1, 3), int(1));
        let (roots, rest) = split_rational(&p);
        assert_eq!(roots, vec![rat(1, 3)]);
        assert_eq!(rest, q);
        let iso = isolate_real_roots(&rest);
        assert_eq!(iso.len(), 2);
        for r in iso {
            if let RealRoot::Interval(a, b) = r {
                assert!(rest.eval(&a).is_positive() != rest.eval(&b).is_positive());
            }
        }
        // no real roots
        let c = NuPoly::from_coeffs(vec![int(1), int(0), int(1)]);
        assert!(isolate_real_roots(&c).is_empty());
    }
}
