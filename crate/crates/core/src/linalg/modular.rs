//! Sparse elimination modulo word-size primes, Chinese remaindering and
//! rational reconstruction.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::algebra::{Fp, Rational};

use super::sparse::SparseRow;

pub type ModRow = Vec<(usize, u64)>;

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    acc
}

pub fn inv_mod(a: u64, p: u64) -> u64 {
    assert!(a % p != 0, "inverse of zero");
    pow_mod(a, p - 2, p)
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for q in [2u64, 3, 5, 7] {
        if n % q == 0 {
            return n == q;
        }
    }
    let (mut d, mut r) = (n - 1, 0);
    while d % 2 == 0 {
        d /= 2;
        r += 1;
    }
    // deterministic for n < 3 215 031 751
    'witness: for a in [2u64, 3, 5, 7] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..r {
            x = x * x % n;
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Primes below `2^31`, largest first.
pub fn primes_below_2_31() -> impl Iterator<Item = u64> {
    (1u64 << 30..1u64 << 31).rev().filter(|&n| is_prime(n))
}

/// Image of a rational number mod `p`; `None` when `p` divides the denominator.
pub fn rational_mod(q: &Rational, p: u64) -> Option<u64> {
    let pb = BigInt::from(p);
    let den = q.denom().mod_floor(&pb).to_u64().expect("small residue");
    if den == 0 {
        return None;
    }
    let num = q.numer().mod_floor(&pb).to_u64().expect("small residue");
    Some(num * inv_mod(den, p) % p)
}

fn sub_scaled(a: &[(usize, u64)], c: u64, b: &[(usize, u64)], p: u64) -> ModRow {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        if j == b.len() || (i < a.len() && a[i].0 < b[j].0) {
            out.push(a[i]);
            i += 1;
        } else if i == a.len() || b[j].0 < a[i].0 {
            out.push((b[j].0, (p - c * b[j].1 % p) % p));
            j += 1;
        } else {
            let v = (a[i].1 + p - c * b[j].1 % p) % p;
            if v != 0 {
                out.push((a[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// Row echelon form modulo a prime `p < 2^32`; rows are monic in their pivot,
/// column 0 is the most significant.
#[derive(Clone, Debug)]
pub struct ModEchelon {
    p: u64,
    rows: Vec<ModRow>,
    pivot_row: HashMap<usize, usize>,
}

impl ModEchelon {
    pub fn new(p: u64) -> Self {
        ModEchelon {
            p,
            rows: Vec::new(),
            pivot_row: HashMap::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_pivot(&self, col: usize) -> bool {
        self.pivot_row.contains_key(&col)
    }

    /// Inserts a row; returns whether it was independent of the rows so far.
    pub fn insert(&mut self, mut row: ModRow) -> bool {
        while let Some(&(c, v)) = row.first() {
            match self.pivot_row.get(&c) {
                Some(&r) => row = sub_scaled(&row, v, &self.rows[r], self.p),
                None => break,
            }
        }
        let Some(&(c, v)) = row.first() else {
            return false;
        };
        let inv = inv_mod(v, self.p);
        for e in row.iter_mut() {
            e.1 = e.1 * inv % self.p;
        }
        self.pivot_row.insert(c, self.rows.len());
        self.rows.push(row);
        true
    }

    /// For a span of codimension one in `ncols` columns: the functional that
    /// vanishes on it and takes the value 1 on the unique non-pivot column.
    pub fn annihilator(&self, ncols: usize) -> Option<(usize, Vec<u64>)> {
        if self.rank() + 1 != ncols {
            return None;
        }
        let free = (0..ncols).find(|c| !self.is_pivot(*c))?;
        let mut val = vec![0u64; ncols];
        val[free] = 1;
        // least significant pivots first: every other entry of a row sits in a
        // later column, already solved
        for c in (0..ncols).rev() {
            if let Some(&r) = self.pivot_row.get(&c) {
                let mut acc = 0u64;
                for &(j, x) in &self.rows[r][1..] {
                    acc = (acc + x * val[j]) % self.p;
                }
                val[c] = (self.p - acc) % self.p;
            }
        }
        Some((free, val))
    }
}

/// Image of a rational row modulo `p`.
pub fn row_mod(row: &SparseRow, p: u64) -> Option<ModRow> {
    let mut out = Vec::with_capacity(row.len());
    for (c, x) in row {
        let v = rational_mod(x, p)?;
        if v != 0 {
            out.push((*c, v));
        }
    }
    Some(out)
}

/// Indices of a subset of `rows` that is independent modulo `2^31 - 1`,
/// hence over `Q`, chosen greedily in order; `None` if some entry has no
/// image mod `p`.
pub fn independent_rows_mod_p(rows: &[SparseRow]) -> Option<Vec<usize>> {
    let mut e = ModEchelon::new(Fp::P);
    let mut keep = Vec::new();
    for (i, r) in rows.iter().enumerate() {
        if e.insert(row_mod(r, Fp::P)?) {
            keep.push(i);
        }
    }
    Some(keep)
}

/// `x ≡ a (mod m)`, `x ≡ b (mod p)` with `0 <= x < m p`.
pub fn crt(a: &BigInt, m: &BigInt, b: u64, p: u64) -> BigInt {
    let a_mod_p = a.mod_floor(&BigInt::from(p)).to_u64().expect("small residue");
    let m_mod_p = m.mod_floor(&BigInt::from(p)).to_u64().expect("small residue");
    let t = (b + p - a_mod_p) % p * inv_mod(m_mod_p, p) % p;
    a + m * BigInt::from(t)
}

/// The rational `n/d` with `|n|, d <= sqrt(m/2)` and `n ≡ a d (mod m)`, if
/// one exists.
pub fn rational_reconstruction(a: &BigInt, m: &BigInt) -> Option<Rational> {
    let bound = (m / BigInt::from(2)).sqrt();
    let (mut r0, mut r1) = (m.clone(), a.mod_floor(m));
    let (mut t0, mut t1) = (BigInt::zero(), BigInt::one());
    while r1 > bound {
        let q = &r0 / &r1;
        let r2 = &r0 - &q * &r1;
        let t2 = &t0 - &q * &t1;
        r0 = std::mem::replace(&mut r1, r2);
        t0 = std::mem::replace(&mut t1, t2);
    }
    if t1.is_zero() || t1.abs() > bound {
        return None;
    }
    let q = Rational::new(r1, t1);
    // the reconstruction must really reduce to a
    (rational_mod_big(&q, m) == Some(a.mod_floor(m))).then_some(q)
}

fn rational_mod_big(q: &Rational, m: &BigInt) -> Option<BigInt> {
    let den = q.denom().mod_floor(m);
    let g = den.extended_gcd(m);
    if !g.gcd.is_one() {
        return None;
    }
    Some((q.numer() * g.x).mod_floor(m))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::{int, rat};

    #[test]
    fn picks_independent_rows() {
        let rows: Vec<SparseRow> = vec![
            vec![(0, int(1)), (1, int(2))],
            vec![(0, int(2)), (1, int(4))],
            vec![(1, rat(1, 3)), (2, int(1))],
            vec![(0, int(1)), (1, rat(7, 3)), (2, int(1))],
        ];
        assert_eq!(independent_rows_mod_p(&rows), Some(vec![0, 2]));
        let bad = vec![vec![(0, rat(1, Fp::P as i64))]];
        assert_eq!(independent_rows_mod_p(&bad), None);
    }

    #[test]
    fn primes_and_reconstruction() {
        let ps: Vec<u64> = primes_below_2_31().take(3).collect();
        assert_eq!(ps[0], 2_147_483_647);
        assert!(ps.iter().all(|&p| is_prime(p)));
        let q = rat(-123_456_789, 987_654_321);
        let (mut a, mut m) = (BigInt::zero(), BigInt::one());
        for &p in &ps {
            a = crt(&a, &m, rational_mod(&q, p).unwrap(), p);
            m *= BigInt::from(p);
        }
        assert_eq!(rational_reconstruction(&a, &m), Some(q));
    }

    #[test]
    fn annihilator_of_hyperplane() {
        let p = 101;
        let mut e = ModEchelon::new(p);
        // x0 + 2 x2 and x1 - x2: the annihilator is (-2, 1, 1)
        e.insert(vec![(0, 1), (2, 2)]);
        e.insert(vec![(1, 1), (2, p - 1)]);
        let (free, v) = e.annihilator(3).unwrap();
        assert_eq!(free, 2);
        assert_eq!(v, vec![p - 2, 1, 1]);
    }
}
