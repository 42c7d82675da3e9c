use serde::Serialize;

use super::groebner::{Field, GbBuilder};
use super::model::IdealModel;
use crate::algebra::{Monomial, MonomialOrder, Polynomial};
use crate::error::{Error, Result};

/// `<df/dx_0, ..., df/dx_n>`.
pub fn jacobian_ideal(f: &Polynomial, order: &MonomialOrder) -> Result<IdealModel> {
    let d = f
        .homogeneous_degree()
        .ok_or_else(|| Error::Precondition("hypersurface polynomial must be homogeneous and nonzero".into()))?;
    if d < 2 {
        return Err(Error::Precondition(format!("degree {d} hypersurface; need d >= 2")));
    }
    let gens = (0..f.nvars()).map(|v| f.partial_derivative(v)).collect();
    IdealModel::new(f.nvars(), gens, order)
}

/// Outcome of the smoothness test.
#[derive(Clone, Debug, Serialize)]
pub struct SmoothnessCertificate {
    pub smooth: bool,
    /// Variable groups that never share a monomial of `f`; the Jacobian ring
    /// is the tensor product of the Jacobian rings of the pieces.
    pub components: Vec<Vec<usize>>,
    /// For each variable `x_v`, an exponent `a` with `x_v^a` a leading
    /// monomial of the Jacobian ideal over `certified_over` (smooth case).
    pub pure_powers: Vec<u32>,
    /// A degree `t` with `h_J(t) = 0`.
    pub vanishing_degree: Option<u32>,
    /// The bound `(d-2)n+1` on the first vanishing degree, `n` variables.
    pub degree_bound: u32,
    pub obstruction: Option<String>,
    /// Field of the Gröbner computation behind the verdict. Over `GF(p)`,
    /// `p = 2^31 - 1`: ranks can only drop modulo `p`, so a vanishing
    /// Hilbert function there also vanishes over `Q`.
    pub certified_over: &'static str,
}

/// Runs the truncated Buchberger loop until every variable has a pure power
/// among the leading monomials, up to degree `bound`.
fn leading_pure_powers<C: Field>(builder: &mut GbBuilder<C>, m: usize, start: u32, bound: u32) -> Option<Vec<u32>> {
    let mut deg = start;
    loop {
        builder.run_to_degree(Some(deg));
        let leads = builder.leading_monomials();
        let powers: Vec<Option<u32>> = (0..m)
            .map(|v| {
                leads
                    .iter()
                    .filter(|l| l.degree() == l.exp(v))
                    .map(Monomial::degree)
                    .min()
            })
            .collect();
        if powers.iter().all(Option::is_some) {
            return Some(powers.into_iter().map(Option::unwrap).collect());
        }
        if deg >= bound || builder.is_complete() {
            return None;
        }
        deg += 1;
    }
}

fn components(f: &Polynomial) -> Vec<Vec<usize>> {
    let n = f.nvars();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        let mut y = x;
        while p[y] != r {
            let next = p[y];
            p[y] = r;
            y = next;
        }
        r
    }
    for (m, _) in f.terms() {
        let vars: Vec<usize> = (0..n).filter(|&v| m.exp(v) > 0).collect();
        for w in vars.windows(2) {
            let (a, b) = (find(&mut parent, w[0]), find(&mut parent, w[1]));
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
    }
    let mut groups: Vec<Vec<usize>> = Vec::new();
    let mut root_of = vec![usize::MAX; n];
    for v in 0..n {
        let r = find(&mut parent, v);
        if root_of[r] == usize::MAX {
            root_of[r] = groups.len();
            groups.push(Vec::new());
        }
        groups[root_of[r]].push(v);
    }
    groups
}

/// Decides whether `V(f)` is smooth, i.e. whether `S/J` is Artinian.
///
/// `f` is split into pieces in disjoint sets of variables. For each piece a
/// Gröbner basis of its Jacobian ideal is computed degree by degree until
/// every variable has a pure power among the leading monomials (Artinian) or
/// the degree bound `(d-2)m+1` for `m` variables is passed (not Artinian: an
/// Artinian piece contains every monomial of that degree).
pub fn is_smooth(f: &Polynomial) -> Result<SmoothnessCertificate> {
    smoothness(f, true)
}

/// Like [`is_smooth`] but without the rational fallback: `smooth` is true
/// only when the computation modulo `p` already certifies it. A negative
/// answer is inconclusive over `Q`.
pub fn is_smooth_modular(f: &Polynomial) -> Result<SmoothnessCertificate> {
    smoothness(f, false)
}

fn smoothness(f: &Polynomial, rational_fallback: bool) -> Result<SmoothnessCertificate> {
    let d = f
        .homogeneous_degree()
        .ok_or_else(|| Error::Precondition("hypersurface polynomial must be homogeneous and nonzero".into()))?;
    if d < 2 {
        return Err(Error::Precondition(format!("degree {d} hypersurface; need d >= 2")));
    }
    let n = f.nvars();
    let degree_bound = (d - 2) * n as u32 + 1;
    let groups = components(f);
    let mut cert = SmoothnessCertificate {
        smooth: false,
        components: groups.clone(),
        pure_powers: vec![0; n],
        vanishing_degree: None,
        degree_bound,
        obstruction: None,
        certified_over: "GF(p)",
    };
    let order = MonomialOrder::grevlex();
    for group in &groups {
        let m = group.len();
        let images: Vec<Polynomial> = (0..n)
            .map(|v| match group.iter().position(|&w| w == v) {
                Some(i) => Polynomial::var(m, i),
                None => Polynomial::zero(m),
            })
            .collect();
        let piece = f.substitute(&images);
        if piece.is_zero() {
            cert.obstruction = Some(format!("x{} does not occur in f", group[0]));
            return Ok(cert);
        }
        let gens: Vec<Polynomial> = (0..m).map(|v| piece.partial_derivative(v)).collect();
        let bound = (d - 2) * m as u32 + 1;
        let modular = GbBuilder::new_modular(&gens, &order).and_then(|mut b| leading_pure_powers(&mut b, m, d - 1, bound));
        let powers = match modular {
            Some(p) => Some(p),
            None if !rational_fallback => None,
            None => {
                cert.certified_over = "Q";
                leading_pure_powers(&mut GbBuilder::new(&gens, &order), m, d - 1, bound)
            }
        };
        match powers {
            Some(p) => {
                for (i, &v) in group.iter().enumerate() {
                    cert.pure_powers[v] = p[i];
                }
            }
            None => {
                cert.obstruction = Some(format!(
                    "the Jacobian ideal of the piece in {} has no pure power of every variable up to degree {bound}",
                    group.iter().map(|v| format!("x{v}")).collect::<Vec<_>>().join(",")
                ));
                return Ok(cert);
            }
        }
    }
    // leading pure powers make S/J finite dimensional; J is then a complete
    // intersection of n forms of degree d-1 with socle in degree (d-2)n
    cert.smooth = true;
    cert.vanishing_degree = Some(degree_bound);
    Ok(cert)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::parse_polynomial;

    #[test]
    fn fermat_is_smooth() {
        let f = parse_polynomial("x0^6 + x1^6 + x2^6 + x3^6 + x4^6 + x5^6", Some(6)).unwrap();
        let c = is_smooth(&f).unwrap();
        assert!(c.smooth);
        assert_eq!(c.components.len(), 6);
        assert_eq!(c.vanishing_degree, Some(25));
        let j = jacobian_ideal(&f, &MonomialOrder::grevlex()).unwrap();
        assert_eq!(j.hilbert_function(24), 1);
        assert_eq!(j.hilbert_function(25), 0);
    }

    #[test]
    fn singular_examples() {
        let f = parse_polynomial("x0*x1*x2^3", Some(3)).unwrap();
        assert!(!is_smooth(&f).unwrap().smooth);
        let g = parse_polynomial("x0^2", Some(2)).unwrap();
        assert!(!is_smooth(&g).unwrap().smooth);
        // cone over a smooth conic is singular at the vertex
        let h = parse_polynomial("x0^2 + x1^2 + x2^2", Some(4)).unwrap();
        assert!(!is_smooth(&h).unwrap().smooth);
    }

    #[test]
    fn connected_cubic() {
        let f = parse_polynomial("x0^3 + x1^3 + x2^3 + x0*x1*x2", Some(3)).unwrap();
        let c = is_smooth(&f).unwrap();
        assert!(c.smooth);
        assert!(c.vanishing_degree.unwrap() <= c.degree_bound);
        // nodal cubic
        let g = parse_polynomial("x1^2*x2 - x0^3 - x0^2*x2", Some(3)).unwrap();
        assert!(!is_smooth(&g).unwrap().smooth);
    }
}
