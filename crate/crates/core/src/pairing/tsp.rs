use num_traits::Zero;
use rayon::prelude::*;
use serde::Serialize;

use super::socle::{pairing_value, SoclePairing};
use crate::algebra::rational::format_rational;
use crate::algebra::{Polynomial, Rational};
use crate::error::{Error, Result};
use crate::hodge::AssociatedIdeal;
use crate::linalg::{Matrix, SparseEchelon, SparseRow};

/// Outcome of the sufficient criterion: the multiplication pairing
/// `((I_1+I_2)/I_2)_d x ((I_1+I_2)/I_2)_e -> (S/I_2)_s`, `e = kd-2k-2`, has
/// zero left kernel.
#[derive(Clone, Debug, Serialize)]
pub struct TspOutcome {
    pub d: u32,
    pub k: usize,
    /// `kd - 2k - 2`, possibly negative.
    pub col_degree: i64,
    /// `d <= kd - 2k - 2`; otherwise the criterion does not apply.
    pub feasible: bool,
    pub rows: usize,
    pub cols: usize,
    pub rank: usize,
    /// `Some(true)` when the left kernel is zero.
    pub zero_left_kernel: Option<bool>,
    /// A left kernel vector in the row basis, when there is one.
    #[serde(serialize_with = "serialize_witness")]
    pub witness: Option<Vec<Rational>>,
}

fn serialize_witness<S: serde::Serializer>(w: &Option<Vec<Rational>>, s: S) -> std::result::Result<S::Ok, S::Error> {
    match w {
        None => s.serialize_none(),
        Some(v) => s.collect_seq(v.iter().map(format_rational)),
    }
}

impl TspOutcome {
    pub fn holds(&self) -> bool {
        self.zero_left_kernel == Some(true)
    }
}

/// Representatives of a basis of `((I_1+I_2)/I_2)_t`.
fn quotient_basis_of_sum(a1: &AssociatedIdeal, a2: &AssociatedIdeal, t: u32) -> Vec<Polynomial> {
    let i2 = a2.ideal.span(t);
    let sum = a1.ideal.span(t).sum(&i2);
    i2.complement_in(&sum)
}

pub fn tsp_criterion(a1: &AssociatedIdeal, a2: &AssociatedIdeal, d: u32, k: usize) -> Result<TspOutcome> {
    if a1.nvars() != a2.nvars() || a2.socle_degree != (k as u32 + 1) * (d.saturating_sub(2)) {
        return Err(Error::DegreeMismatch {
            expected: (k as u32 + 1) * d.saturating_sub(2),
            got: a2.socle_degree,
        });
    }
    let e = (k as i64) * (d as i64) - 2 * (k as i64) - 2;
    let mut out = TspOutcome {
        d,
        k,
        col_degree: e,
        feasible: (d as i64) <= e,
        rows: 0,
        cols: 0,
        rank: 0,
        zero_left_kernel: None,
        witness: None,
    };
    if !out.feasible {
        return Ok(out);
    }
    let psi = SoclePairing::new(a2)?;
    let rows = quotient_basis_of_sum(a1, a2, d);
    let cols = quotient_basis_of_sum(a1, a2, e as u32);
    let matrix: Vec<Vec<Rational>> = rows
        .par_iter()
        .map(|r| cols.iter().map(|c| pairing_value(&psi, r, c)).collect::<Result<Vec<_>>>())
        .collect::<Result<_>>()?;
    let mut echelon = SparseEchelon::new();
    for row in &matrix {
        let sparse: SparseRow = row.iter().enumerate().filter(|(_, v)| !v.is_zero()).map(|(j, v)| (j, v.clone())).collect();
        if !sparse.is_empty() {
            echelon.insert(sparse);
        }
    }
    out.rows = rows.len();
    out.cols = cols.len();
    out.rank = echelon.rank();
    let zero = out.rank == out.rows;
    out.zero_left_kernel = Some(zero);
    if !zero {
        let m = Matrix::from_rows(matrix);
        let w = m.left_kernel().into_iter().next().expect("rank deficiency gives a kernel vector");
        assert!(m.left_mul(&w).iter().all(Zero::is_zero));
        out.witness = Some(w);
    }
    Ok(out)
}
