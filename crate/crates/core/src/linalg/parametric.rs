//! Matrices over `Q[nu]`: fraction-free elimination, specialization, and rank
//! over `Q[nu]/(q)` for squarefree `q`.

use super::dense::Matrix;
use crate::algebra::{NuFraction, NuPoly, Rational};

pub type NuMatrix = Vec<Vec<NuPoly>>;

pub fn ncols(m: &NuMatrix) -> usize {
    m.first().map_or(0, Vec::len)
}

/// Result of fraction-free (Bareiss) elimination.
#[derive(Clone, Debug)]
pub struct BareissOutcome {
    /// Rank over `Q(nu)`.
    pub rank: usize,
    /// Successive pivots; pivot `i` is the leading `(i+1) x (i+1)` minor of
    /// the row/column-permuted matrix.
    pub pivots: Vec<NuPoly>,
    pub row_perm: Vec<usize>,
    pub col_perm: Vec<usize>,
}

impl BareissOutcome {
    /// A nonzero `rank x rank` minor (1 for rank 0). The rank can only drop at
    /// its roots.
    pub fn top_minor(&self) -> NuPoly {
        self.pivots.last().cloned().unwrap_or_else(NuPoly::one)
    }
}

/// Fraction-free elimination with complete pivoting, preferring pivots of
/// lowest `nu`-degree.
pub fn bareiss(m: &NuMatrix) -> BareissOutcome {
    let rows = m.len();
    let cols = ncols(m);
    let mut a = m.clone();
    let mut row_perm: Vec<usize> = (0..rows).collect();
    let mut col_perm: Vec<usize> = (0..cols).collect();
    let mut prev = NuPoly::one();
    let mut pivots = Vec::new();
    let mut r = 0;
    while r < rows.min(cols) {
        let mut best: Option<(usize, usize, usize)> = None;
        for i in r..rows {
            for j in r..cols {
                if let Some(d) = a[i][j].degree() {
                    if best.is_none_or(|(_, _, bd)| d < bd) {
                        best = Some((i, j, d));
                    }
                }
            }
            if best.is_some_and(|(_, _, d)| d == 0) {
                break;
            }
        }
        let Some((pi, pj, _)) = best else { break };
        a.swap(r, pi);
        row_perm.swap(r, pi);
        if pj != r {
            for row in a.iter_mut() {
                row.swap(r, pj);
            }
            col_perm.swap(r, pj);
        }
        let piv = a[r][r].clone();
        for i in r + 1..rows {
            let air = a[i][r].clone();
            for j in r + 1..cols {
                let num = &(&piv * &a[i][j]) - &(&air * &a[r][j]);
                a[i][j] = num.exact_div(&prev).expect("Bareiss division is exact");
            }
            a[i][r] = NuPoly::zero();
        }
        pivots.push(piv.clone());
        prev = piv;
        r += 1;
    }
    BareissOutcome {
        rank: r,
        pivots,
        row_perm,
        col_perm,
    }
}

pub fn specialize(m: &NuMatrix, nu: &Rational) -> Matrix {
    Matrix::from_rows(m.iter().map(|row| row.iter().map(|e| e.eval(nu)).collect()).collect())
}

pub fn rank_at(m: &NuMatrix, nu: &Rational) -> usize {
    if m.is_empty() {
        return 0;
    }
    specialize(m, nu).rank()
}

fn mul_mod(a: &NuPoly, b: &NuPoly, q: &NuPoly) -> NuPoly {
    (a * b).rem(q)
}

/// Rank of `m` over `Q[nu]/(q)` for squarefree `q` of positive degree.
///
/// `q` need not be irreducible: whenever a pivot candidate shares a proper
/// factor with `q`, the computation splits along that factor. The result is
/// a list of pairwise coprime factors of `q` (product `q`, all monic) with the
/// rank at every root of that factor.
pub fn rank_modulo(m: &NuMatrix, q: &NuPoly) -> Vec<(NuPoly, usize)> {
    let q = q.monic();
    assert!(q.degree().is_some_and(|d| d >= 1), "modulus must have positive degree");
    let rows = m.len();
    let cols = ncols(m);
    let mut a: NuMatrix = m.iter().map(|row| row.iter().map(|e| e.rem(&q)).collect()).collect();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        let (g, s, _) = a[p][c].ext_gcd(&q);
        if g.degree() != Some(0) {
            let other = q.exact_div(&g).expect("gcd divides modulus");
            let mut out = rank_modulo(m, &g);
            out.extend(rank_modulo(m, &other));
            return out;
        }
        a.swap(r, p);
        // s is the inverse of the pivot modulo q
        let pivot_row: Vec<NuPoly> = a[r].iter().map(|e| mul_mod(e, &s, &q)).collect();
        a[r] = pivot_row;
        for i in 0..rows {
            if i == r || a[i][c].is_zero() {
                continue;
            }
            let f = a[i][c].clone();
            for j in c..cols {
                if a[r][j].is_zero() {
                    continue;
                }
                let v = &a[i][j] - &mul_mod(&f, &a[r][j], &q);
                a[i][j] = v.rem(&q);
            }
        }
        r += 1;
    }
    vec![(q, r)]
}

/// Left kernel over `Q(nu)`: basis of `{ w : w^T M = 0 }`.
pub fn generic_left_kernel(m: &NuMatrix) -> Vec<Vec<NuFraction>> {
    let rows = m.len();
    let cols = ncols(m);
    // row-reduce the transpose over Q(nu)
    let mut t: Vec<Vec<NuFraction>> = (0..cols)
        .map(|j| (0..rows).map(|i| NuFraction::from_poly(m[i][j].clone())).collect())
        .collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..rows {
        if r == cols {
            break;
        }
        let Some(p) = (r..cols).find(|&i| !t[i][c].is_zero()) else {
            continue;
        };
        t.swap(r, p);
        let inv = NuFraction::from_poly(NuPoly::one()).div(&t[r][c]).expect("nonzero pivot");
        for j in c..rows {
            t[r][j] = t[r][j].mul(&inv);
        }
        for i in 0..cols {
            if i == r || t[i][c].is_zero() {
                continue;
            }
            let f = t[i][c].clone();
            for j in c..rows {
                let v = t[i][j].sub(&f.mul(&t[r][j]));
                t[i][j] = v;
            }
        }
        pivots.push(c);
        r += 1;
    }
    let zero = NuFraction::from_poly(NuPoly::zero());
    let mut basis = Vec::new();
    for free in (0..rows).filter(|c| !pivots.contains(c)) {
        let mut w = vec![zero.clone(); rows];
        w[free] = NuFraction::from_poly(NuPoly::one());
        for (i, &p) in pivots.iter().enumerate() {
            w[p] = zero.sub(&t[i][free]);
        }
        basis.push(w);
    }
    basis
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::int;

    fn c(n: i64) -> NuPoly {
        NuPoly::constant(int(n))
    }

    fn nu() -> NuPoly {
        NuPoly::nu()
    }

    fn three_by_three() -> NuMatrix {
        vec![
            vec![c(0), c(1), nu()],
            vec![c(1), c(-1), c(0)],
            vec![nu(), c(0), -&nu()],
        ]
    }

    #[test]
    fn bareiss_determinant() {
        let out = bareiss(&three_by_three());
        assert_eq!(out.rank, 3);
        // determinant nu^2 + nu up to the sign of the permutation
        let det = out.top_minor().abs_sign();
        assert_eq!(det, &(&nu() * &nu()) + &nu());
    }

    #[test]
    fn rank_at_roots() {
        let m = three_by_three();
        assert_eq!(rank_at(&m, &int(0)), 2);
        assert_eq!(rank_at(&m, &int(-1)), 2);
        assert_eq!(rank_at(&m, &int(3)), 3);
    }

    #[test]
    fn modular_rank_splits() {
        let m = three_by_three();
        let q = &(&nu() * &nu()) + &nu();
        let parts = rank_modulo(&m, &q);
        assert!(parts.iter().all(|(_, r)| *r == 2));
        let prod = parts.iter().fold(NuPoly::one(), |acc, (f, _)| &acc * f);
        assert_eq!(prod, q);
        // forcing a split: the pivot in column 0 is nu itself
        let m2 = vec![vec![nu(), c(1)], vec![c(0), nu()]];
        let mut parts = rank_modulo(&m2, &q);
        parts.sort_by_key(|(f, _)| f.coeff(0).clone());
        assert_eq!(parts, vec![(nu(), 1), (&nu() + &c(1), 2)]);
        // an irreducible quadratic not dividing the determinant keeps full rank
        let q2 = &(&nu() * &nu()) - &c(2);
        assert_eq!(rank_modulo(&m, &q2), vec![(q2.monic(), 3)]);
    }

    #[test]
    fn generic_kernel_of_wide_and_tall() {
        // rows (1, nu), (nu, nu^2): left kernel spanned by (nu, -1)
        let m = vec![vec![c(1), nu()], vec![nu(), &nu() * &nu()]];
        let k = generic_left_kernel(&m);
        assert_eq!(k.len(), 1);
        for j in 0..2 {
            let s = k[0][0]
                .mul(&NuFraction::from_poly(m[0][j].clone()))
                .add(&k[0][1].mul(&NuFraction::from_poly(m[1][j].clone())));
            assert!(s.is_zero());
        }
    }
}
