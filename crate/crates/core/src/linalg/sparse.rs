//! Sparse row echelon forms over `Q`.
//!
//! Columns are ordered by significance: column 0 is the most significant, so
//! the pivot of a row is its first stored entry.

use std::collections::HashMap;

use num_traits::{One, Zero};

use crate::algebra::Rational;

pub type SparseRow = Vec<(usize, Rational)>;

/// `a - c * b` for rows sorted by column.
pub fn sub_scaled(a: &[(usize, Rational)], c: &Rational, b: &[(usize, Rational)]) -> SparseRow {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        if j == b.len() || (i < a.len() && a[i].0 < b[j].0) {
            out.push(a[i].clone());
            i += 1;
        } else if i == a.len() || b[j].0 < a[i].0 {
            out.push((b[j].0, -(c * &b[j].1)));
            j += 1;
        } else {
            let v = &a[i].1 - c * &b[j].1;
            if !v.is_zero() {
                out.push((a[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

fn normalize(row: &mut SparseRow) {
    let inv = Rational::one() / &row[0].1;
    if !inv.is_one() {
        for e in row.iter_mut() {
            e.1 *= &inv;
        }
    }
}

/// Echelon form built by top-reduction: every stored row has a distinct
/// pivot with coefficient 1. Call [`SparseEchelon::make_reduced`] to reach
/// the reduced echelon form.
#[derive(Clone, Debug, Default)]
pub struct SparseEchelon {
    rows: Vec<SparseRow>,
    pivot_row: HashMap<usize, usize>,
    reduced: bool,
}

impl SparseEchelon {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[SparseRow] {
        &self.rows
    }

    pub fn is_pivot(&self, col: usize) -> bool {
        self.pivot_row.contains_key(&col)
    }

    pub fn row_for_pivot(&self, col: usize) -> Option<&SparseRow> {
        self.pivot_row.get(&col).map(|&r| &self.rows[r])
    }

    pub fn pivots(&self) -> impl Iterator<Item = usize> + '_ {
        self.rows.iter().map(|r| r[0].0)
    }

    /// Reduces the leading entry until it is not a pivot; returns the remainder.
    pub fn top_reduce(&self, mut row: SparseRow) -> SparseRow {
        while let Some((c, v)) = row.first() {
            match self.pivot_row.get(c) {
                Some(&r) => {
                    let v = v.clone();
                    row = sub_scaled(&row, &v, &self.rows[r]);
                }
                None => break,
            }
        }
        row
    }

    /// Reduces every entry that sits on a pivot column.
    pub fn reduce(&self, mut row: SparseRow) -> SparseRow {
        let mut start = 0;
        loop {
            let hit = row[start..].iter().position(|(c, _)| self.pivot_row.contains_key(c));
            match hit {
                None => return row,
                Some(off) => {
                    let k = start + off;
                    let (c, v) = row[k].clone();
                    row = sub_scaled(&row, &v, &self.rows[self.pivot_row[&c]]);
                    // entries before k are untouched; the pivot row only reaches columns >= c
                    start = k;
                }
            }
        }
    }

    /// Inserts a row; returns the new pivot column, or `None` if the row was
    /// already in the span.
    pub fn insert(&mut self, row: SparseRow) -> Option<usize> {
        let mut row = self.top_reduce(row);
        if row.is_empty() {
            return None;
        }
        normalize(&mut row);
        let c = row[0].0;
        self.pivot_row.insert(c, self.rows.len());
        self.rows.push(row);
        self.reduced = false;
        Some(c)
    }

    /// Brings the rows to reduced echelon form and sorts them by pivot.
    pub fn make_reduced(&mut self) {
        if self.reduced {
            return;
        }
        let mut order: Vec<usize> = (0..self.rows.len()).collect();
        order.sort_by_key(|&r| std::cmp::Reverse(self.rows[r][0].0));
        // process from the least significant pivot upward: every row touched
        // during a substitution is already fully reduced
        for &r in &order {
            let row = std::mem::take(&mut self.rows[r]);
            let (head, tail) = row.split_at(1);
            let mut acc: SparseRow = head.to_vec();
            let mut rest: SparseRow = tail.to_vec();
            loop {
                let hit = rest.iter().position(|(c, _)| self.pivot_row.contains_key(c));
                match hit {
                    None => break,
                    Some(k) => {
                        let (c, v) = rest[k].clone();
                        let prow = &self.rows[self.pivot_row[&c]];
                        rest = sub_scaled(&rest, &v, prow);
                    }
                }
            }
            acc.extend(rest);
            self.rows[r] = acc;
        }
        let mut rows = std::mem::take(&mut self.rows);
        rows.sort_by_key(|r| r[0].0);
        self.pivot_row = rows.iter().enumerate().map(|(i, r)| (r[0].0, i)).collect();
        self.rows = rows;
        self.reduced = true;
    }

    pub fn into_rows(mut self) -> Vec<SparseRow> {
        self.make_reduced();
        self.rows
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::int;

    fn row(v: &[(usize, i64)]) -> SparseRow {
        v.iter().map(|&(c, x)| (c, int(x))).collect()
    }

    #[test]
    fn rank_and_reduction() {
        let mut e = SparseEchelon::new();
        assert_eq!(e.insert(row(&[(0, 1), (1, 1)])), Some(0));
        assert_eq!(e.insert(row(&[(1, 1), (2, 1)])), Some(1));
        assert_eq!(e.insert(row(&[(0, 1), (2, -1)])), None);
        assert_eq!(e.insert(row(&[(0, 2), (1, 2)])), None);
        assert_eq!(e.rank(), 2);
        e.make_reduced();
        assert_eq!(e.rows()[0], row(&[(0, 1), (2, -1)]));
        assert_eq!(e.rows()[1], row(&[(1, 1), (2, 1)]));
        assert_eq!(e.reduce(row(&[(0, 1), (1, 1), (2, 5)])), row(&[(2, 5)]));
    }
}
