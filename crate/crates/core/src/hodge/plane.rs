use num_traits::{One, Zero};
use serde::Serialize;

use crate::algebra::{parse_polynomial_list, Polynomial, Rational};
use crate::error::{Error, Result};
use crate::linalg::Matrix;

/// A `k`-dimensional linear space `V(l_0, ..., l_k)` in `P^{2k+1}`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct LinearSpacePlane {
    #[serde(serialize_with = "serialize_polys")]
    forms: Vec<Polynomial>,
    k: usize,
}

pub(crate) fn serialize_polys<S: serde::Serializer>(ps: &[Polynomial], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(ps.iter().map(|p| p.to_string()))
}

impl std::fmt::Display for LinearSpacePlane {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let forms: Vec<String> = self.forms.iter().map(|l| l.to_string()).collect();
        write!(f, "V({})", forms.join(", "))
    }
}

impl LinearSpacePlane {
    pub fn new(forms: Vec<Polynomial>) -> Result<Self> {
        if forms.is_empty() {
            return Err(Error::Precondition("a linear space needs at least one form".into()));
        }
        let n = forms[0].nvars();
        let mut rows = Vec::with_capacity(forms.len());
        for l in &forms {
            if l.nvars() != n {
                return Err(crate::error::AlgebraError::VariableCountMismatch(n, l.nvars()).into());
            }
            rows.push(
                l.linear_coefficients()
                    .ok_or_else(|| Error::Precondition(format!("{l} is not a linear form")))?,
            );
        }
        let k = forms.len() - 1;
        if n != 2 * k + 2 {
            return Err(Error::Precondition(format!(
                "{} forms cut a {k}-dimensional space only in P^{}, not in P^{}",
                forms.len(),
                2 * k + 1,
                n.saturating_sub(1)
            )));
        }
        if Matrix::from_rows(rows).rank() != forms.len() {
            return Err(Error::DependentForms);
        }
        Ok(LinearSpacePlane { forms, k })
    }

    /// `V(x_{v_0}, ..., x_{v_k})`.
    pub fn coordinate(nvars: usize, vars: &[usize]) -> Result<Self> {
        Self::new(vars.iter().map(|&v| Polynomial::var(nvars, v)).collect())
    }

    /// Parses a comma separated list of linear forms.
    pub fn parse(s: &str, nvars: usize) -> Result<Self> {
        Self::new(parse_polynomial_list(s, Some(nvars))?)
    }

    pub fn forms(&self) -> &[Polynomial] {
        &self.forms
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn nvars(&self) -> usize {
        self.forms[0].nvars()
    }
}

/// `f = sum l_i g_i` for a linear space contained in `V(f)`.
#[derive(Clone, Debug, Serialize)]
pub struct PlaneDecomposition {
    pub plane: LinearSpacePlane,
    #[serde(serialize_with = "serialize_polys")]
    pub cofactors: Vec<Polynomial>,
}

impl PlaneDecomposition {
    pub fn forms(&self) -> &[Polynomial] {
        self.plane.forms()
    }

    /// `sum l_i g_i`.
    pub fn expand(&self) -> Polynomial {
        let n = self.plane.nvars();
        self.forms()
            .iter()
            .zip(&self.cofactors)
            .fold(Polynomial::zero(n), |acc, (l, g)| &acc + &(l * g))
    }
}

/// Cofactors `g_i` with `f = sum l_i g_i`.
///
/// Coordinates `y` with `y_i = l_i` for `i <= k` (completed by unit vectors)
/// turn `f` into `F(y)`; `g_i` collects the terms of `F` divisible by `y_i`
/// but by no earlier `y_j`, divided by `y_i`, and written back in `x`. A
/// nonzero leftover means the space is not contained in `V(f)`.
pub fn plane_decomposition(f: &Polynomial, plane: &LinearSpacePlane) -> Result<PlaneDecomposition> {
    let n = plane.nvars();
    if f.nvars() != n {
        return Err(crate::error::AlgebraError::VariableCountMismatch(n, f.nvars()).into());
    }
    let d = f
        .homogeneous_degree()
        .ok_or_else(|| Error::Precondition("f must be homogeneous and nonzero".into()))?;
    let rows: Vec<Vec<Rational>> = plane
        .forms()
        .iter()
        .map(|l| l.linear_coefficients().expect("checked linear"))
        .collect();
    let mut echelon = Matrix::from_rows(rows.clone());
    let pivots = echelon.rref();
    let mut m = rows;
    for c in (0..n).filter(|c| !pivots.contains(c)) {
        let mut e = vec![Rational::zero(); n];
        e[c] = Rational::one();
        m.push(e);
    }
    let m = Matrix::from_rows(m);
    // x = M^{-1} y, column by column
    let mut inv_cols = Vec::with_capacity(n);
    for j in 0..n {
        let mut e = vec![Rational::zero(); n];
        e[j] = Rational::one();
        inv_cols.push(m.solve(&e).ok_or(Error::DependentForms)?);
    }
    let x_in_y: Vec<Polynomial> = (0..n)
        .map(|i| Polynomial::from_terms(n, (0..n).map(|j| (crate::algebra::Monomial::var(n, j), inv_cols[j][i].clone()))))
        .collect();
    let y_in_x: Vec<Polynomial> = (0..n)
        .map(|i| Polynomial::from_terms(n, (0..n).map(|j| (crate::algebra::Monomial::var(n, j), m.get(i, j).clone()))))
        .collect();
    let mut rest = f.substitute(&x_in_y);
    let mut cofactors = Vec::with_capacity(plane.k() + 1);
    for i in 0..=plane.k() {
        let (quot, r) = rest.split_by_var(i);
        cofactors.push(quot.substitute(&y_in_x));
        rest = r;
    }
    if !rest.is_zero() {
        return Err(Error::NotContained {
            remainder: rest.substitute(&y_in_x).to_string(),
        });
    }
    let dec = PlaneDecomposition {
        plane: plane.clone(),
        cofactors,
    };
    if &dec.expand() != f {
        return Err(Error::Precondition(format!("re-expansion of the degree {d} decomposition differs from f")));
    }
    Ok(dec)
}
