//! Graded pieces `I_t` as reduced echelon forms inside the monomial basis of
//! `S_t`, computed by linear algebra only.

use std::collections::HashMap;
use std::sync::Arc;

use num_traits::{One, Zero};

use crate::algebra::{enumerate_monomials, Monomial, MonomialOrder, Polynomial, Rational};
use crate::linalg::modular::independent_rows_mod_p;
use crate::linalg::sparse::{SparseEchelon, SparseRow};

/// Monomials of one degree, largest first, with their positions.
#[derive(Debug)]
pub struct MonomialBasis {
    pub nvars: usize,
    pub degree: u32,
    pub order: MonomialOrder,
    monomials: Vec<Monomial>,
    position: HashMap<Monomial, usize>,
}

impl MonomialBasis {
    pub fn new(nvars: usize, degree: u32, order: &MonomialOrder) -> Self {
        let monomials = enumerate_monomials(nvars, degree, order);
        let position = monomials.iter().enumerate().map(|(i, m)| (*m, i)).collect();
        MonomialBasis {
            nvars,
            degree,
            order: order.clone(),
            monomials,
            position,
        }
    }

    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }

    pub fn monomials(&self) -> &[Monomial] {
        &self.monomials
    }

    pub fn position(&self, m: &Monomial) -> Option<usize> {
        self.position.get(m).copied()
    }

    pub fn monomial(&self, i: usize) -> Monomial {
        self.monomials[i]
    }

    /// Coordinates of a homogeneous polynomial of this degree.
    pub fn row_of(&self, p: &Polynomial) -> SparseRow {
        let mut row: SparseRow = p
            .terms()
            .map(|(m, c)| (self.position(m).expect("polynomial of the basis degree"), c.clone()))
            .collect();
        row.sort_by_key(|e| e.0);
        row
    }

    pub fn poly_of(&self, row: &[(usize, Rational)]) -> Polynomial {
        Polynomial::from_terms(self.nvars, row.iter().map(|(i, c)| (self.monomials[*i], c.clone())))
    }
}

/// `I_t` in reduced echelon form. Pivot columns are leading monomials; the
/// remaining columns are the standard monomials of degree `t`.
#[derive(Debug)]
pub struct DegreeSpan {
    basis: Arc<MonomialBasis>,
    echelon: SparseEchelon,
}

impl DegreeSpan {
    pub fn from_rows(basis: Arc<MonomialBasis>, rows: impl IntoIterator<Item = SparseRow>) -> Self {
        let mut echelon = SparseEchelon::new();
        for r in rows {
            if !r.is_empty() {
                echelon.insert(r);
            }
        }
        echelon.make_reduced();
        DegreeSpan { basis, echelon }
    }

    pub fn from_polynomials<'a>(basis: Arc<MonomialBasis>, polys: impl IntoIterator<Item = &'a Polynomial>) -> Self {
        let rows: Vec<SparseRow> = polys.into_iter().map(|p| basis.row_of(p)).collect();
        Self::from_rows(basis, rows)
    }

    /// `I_t` from `I_{t-1}` and the generators of degree `t`:
    /// `I_t = x_0 I_{t-1} + ... + x_n I_{t-1} + <gens>_t`.
    pub fn next_degree(prev: &DegreeSpan, basis: Arc<MonomialBasis>, gens: &[&Polynomial]) -> Self {
        let rows = Self::next_degree_candidates(prev, &basis, gens);
        Self::from_rows(basis, rows)
    }

    /// [`DegreeSpan::next_degree`] for a span whose dimension is known in
    /// advance. Rows independent modulo a prime are independent over `Q`, so
    /// when a greedy selection modulo `p` reaches `dim` rows only those are
    /// eliminated over `Q`; otherwise all candidates are.
    pub fn next_degree_of_dim(prev: &DegreeSpan, basis: Arc<MonomialBasis>, gens: &[&Polynomial], dim: usize) -> Self {
        let rows = Self::next_degree_candidates(prev, &basis, gens);
        match independent_rows_mod_p(&rows) {
            Some(keep) if keep.len() == dim => {
                let mut rows = rows;
                let kept: Vec<SparseRow> = keep.into_iter().map(|i| std::mem::take(&mut rows[i])).collect();
                Self::from_rows(basis, kept)
            }
            _ => Self::from_rows(basis, rows),
        }
    }

    fn next_degree_candidates(prev: &DegreeSpan, basis: &MonomialBasis, gens: &[&Polynomial]) -> Vec<SparseRow> {
        let n = basis.nvars;
        let mut out: Vec<SparseRow> = gens.iter().map(|g| basis.row_of(g)).collect();
        let lower = &prev.basis;
        // images of S_{t-1} columns under each variable
        let shift: Vec<Vec<usize>> = (0..n)
            .map(|v| {
                let x = Monomial::var(n, v);
                lower
                    .monomials()
                    .iter()
                    .map(|m| basis.position(&m.mul(&x)).expect("degree t monomial"))
                    .collect()
            })
            .collect();
        // candidates sorted by target pivot so that each new pivot is met first
        // by an unreduced row
        let mut cands: Vec<(usize, usize, usize)> = Vec::new();
        for (r, row) in prev.echelon.rows().iter().enumerate() {
            for (v, map) in shift.iter().enumerate() {
                cands.push((map[row[0].0], r, v));
            }
        }
        cands.sort_unstable();
        out.extend(cands.into_iter().map(|(_, r, v)| {
            let map = &shift[v];
            prev.echelon.rows()[r].iter().map(|(c, x)| (map[*c], x.clone())).collect::<SparseRow>()
        }));
        out
    }

    pub fn basis(&self) -> &Arc<MonomialBasis> {
        &self.basis
    }

    pub fn degree(&self) -> u32 {
        self.basis.degree
    }

    /// `dim I_t`.
    pub fn dim(&self) -> usize {
        self.echelon.rank()
    }

    /// `dim (S/I)_t`.
    pub fn codim(&self) -> usize {
        self.basis.len() - self.echelon.rank()
    }

    pub fn rows(&self) -> &[SparseRow] {
        self.echelon.rows()
    }

    pub fn polynomials(&self) -> Vec<Polynomial> {
        self.rows().iter().map(|r| self.basis.poly_of(r)).collect()
    }

    pub fn is_pivot(&self, col: usize) -> bool {
        self.echelon.is_pivot(col)
    }

    /// Leading monomials of `I_t`, largest first.
    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.rows().iter().map(|r| self.basis.monomial(r[0].0)).collect()
    }

    /// Monomials of degree `t` outside the leading-term set, largest first.
    pub fn standard_monomials(&self) -> Vec<Monomial> {
        (0..self.basis.len())
            .filter(|&c| !self.echelon.is_pivot(c))
            .map(|c| self.basis.monomial(c))
            .collect()
    }

    /// Remainder of a row modulo `I_t`: supported on standard columns.
    pub fn reduce_row(&self, row: SparseRow) -> SparseRow {
        if row.is_empty() {
            return row;
        }
        self.echelon.reduce(row)
    }

    /// Remainder of the monomial in column `col`.
    pub fn reduce_column(&self, col: usize) -> SparseRow {
        match self.echelon.row_for_pivot(col) {
            Some(r) => r[1..].iter().map(|(c, x)| (*c, -x.clone())).collect(),
            None => vec![(col, Rational::one())],
        }
    }

    pub fn contains(&self, p: &Polynomial) -> bool {
        p.is_zero() || self.reduce_row(self.basis.row_of(p)).is_empty()
    }

    pub fn contains_span(&self, other: &DegreeSpan) -> bool {
        other.rows().iter().all(|r| self.reduce_row(r.clone()).is_empty())
    }

    pub fn same_space(&self, other: &DegreeSpan) -> bool {
        self.dim() == other.dim() && self.contains_span(other)
    }

    /// `(I + I')_t`.
    pub fn sum(&self, other: &DegreeSpan) -> DegreeSpan {
        let rows = self.rows().iter().chain(other.rows()).cloned();
        DegreeSpan::from_rows(self.basis.clone(), rows.collect::<Vec<_>>())
    }

    /// `(I ∩ I')_t` as the kernel of `S_t -> (S/I)_t ⊕ (S/I')_t`.
    pub fn intersect(&self, other: &DegreeSpan) -> DegreeSpan {
        let n = self.basis.len();
        let std_a: HashMap<usize, usize> = (0..n)
            .filter(|&c| !self.is_pivot(c))
            .enumerate()
            .map(|(i, c)| (c, i))
            .collect();
        let std_b: HashMap<usize, usize> = (0..n)
            .filter(|&c| !other.is_pivot(c))
            .enumerate()
            .map(|(i, c)| (c, i + std_a.len()))
            .collect();
        DegreeSpan::kernel(self.basis.clone(), std_a.len() + std_b.len(), |col| {
            let mut row: SparseRow = Vec::new();
            for (c, x) in self.reduce_column(col) {
                row.push((std_a[&c], x));
            }
            for (c, x) in other.reduce_column(col) {
                row.push((std_b[&c], x));
            }
            row.sort_by_key(|e| e.0);
            row
        })
    }

    /// Kernel of the linear map `S_t -> Q^target_dim` sending the monomial in
    /// column `c` to `image(c)`.
    ///
    /// Monomials are processed from the smallest up; a monomial is standard
    /// for the kernel exactly when its image is independent of the images of
    /// smaller monomials, and every dependent monomial yields the reduced
    /// echelon row of the kernel with that pivot.
    pub fn kernel(basis: Arc<MonomialBasis>, target_dim: usize, image: impl Fn(usize) -> SparseRow) -> DegreeSpan {
        let n = basis.len();
        let tag0 = target_dim;
        let mut img = SparseEchelon::new();
        let mut kernel: Vec<SparseRow> = Vec::new();
        for col in (0..n).rev() {
            let mut row = image(col);
            row.push((tag0 + col, Rational::one()));
            let rest = img.top_reduce(row);
            if rest[0].0 < tag0 {
                img.insert(rest);
            } else {
                let inv = Rational::one() / &rest[0].1;
                let mut k: SparseRow = rest.into_iter().map(|(c, x)| (c - tag0, x * &inv)).collect();
                k.sort_by_key(|e| e.0);
                kernel.push(k);
            }
        }
        let mut echelon = SparseEchelon::new();
        for k in kernel {
            echelon.insert(k);
        }
        echelon.make_reduced();
        DegreeSpan { basis, echelon }
    }

    /// The whole space `S_t`.
    pub fn full(basis: Arc<MonomialBasis>) -> DegreeSpan {
        let rows: Vec<SparseRow> = (0..basis.len()).map(|c| vec![(c, Rational::one())]).collect();
        let mut echelon = SparseEchelon::new();
        for r in rows {
            echelon.insert(r);
        }
        echelon.make_reduced();
        DegreeSpan { basis, echelon }
    }

    /// A complement of this span inside `sup` (which must contain it): the
    /// standard monomials of `self` that are leading monomials of `sup`,
    /// together with the rows of `sup` having those pivots.
    pub fn complement_in(&self, sup: &DegreeSpan) -> Vec<Polynomial> {
        sup.rows()
            .iter()
            .filter(|r| !self.is_pivot(r[0].0))
            .map(|r| self.basis.poly_of(r))
            .collect()
    }
}

/// Coefficient vector helper: the entry of `row` at `col`, or zero.
pub fn entry(row: &[(usize, Rational)], col: usize) -> Rational {
    row.binary_search_by_key(&col, |e| e.0)
        .map(|i| row[i].1.clone())
        .unwrap_or_else(|_| Rational::zero())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::parse_polynomial_list;

    fn span(gens: &str, n: usize, t: u32) -> DegreeSpan {
        let order = MonomialOrder::grevlex();
        let gens = parse_polynomial_list(gens, Some(n)).unwrap();
        let mut cur = DegreeSpan::from_rows(Arc::new(MonomialBasis::new(n, 0, &order)), Vec::new());
        let zero: Vec<&Polynomial> = gens.iter().filter(|g| g.homogeneous_degree() == Some(0)).collect();
        if !zero.is_empty() {
            cur = DegreeSpan::from_polynomials(cur.basis().clone(), zero);
        }
        for d in 1..=t {
            let g: Vec<&Polynomial> = gens.iter().filter(|g| g.homogeneous_degree() == Some(d)).collect();
            cur = DegreeSpan::next_degree(&cur, Arc::new(MonomialBasis::new(n, d, &order)), &g);
        }
        cur
    }

    #[test]
    fn dims_of_simple_ideals() {
        // <x0^2, x1^2> in 2 variables: quotient 1,2,1,0
        let dims: Vec<usize> = (0..4).map(|t| span("x0^2, x1^2", 2, t).codim()).collect();
        assert_eq!(dims, vec![1, 2, 1, 0]);
        let s = span("x0*x2 - x1^2, x1*x3 - x2^2, x0*x3 - x1*x2", 4, 3);
        // twisted cubic: h(t) = 3t + 1
        assert_eq!(s.codim(), 10);
    }

    #[test]
    fn intersection_inclusion_exclusion() {
        let a = span("x0, x1^2", 3, 3);
        let b = span("x1, x2^3", 3, 3);
        let i = a.intersect(&b);
        let s = a.sum(&b);
        assert_eq!(i.dim() + s.dim(), a.dim() + b.dim());
        for p in i.polynomials() {
            assert!(a.contains(&p) && b.contains(&p));
        }
        let self_int = a.intersect(&a);
        assert!(self_int.same_space(&a));
    }
}
