use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::config::{Family, ScenarioConfig};
use crate::algebra::{enumerate_monomials, parse_polynomial, parse_polynomial_list, MonomialOrder, Polynomial, Rational};
use crate::error::{Error, Result};
use crate::hodge::LinearSpacePlane;
use crate::ideal::{is_smooth, is_smooth_modular, SmoothnessCertificate};

/// Hypersurface and the two linear spaces on it.
#[derive(Clone, Debug, Serialize)]
pub struct BuiltScenario {
    #[serde(serialize_with = "serialize_poly")]
    pub f: Polynomial,
    pub plane1: LinearSpacePlane,
    pub plane2: LinearSpacePlane,
    pub k: usize,
    pub d: u32,
    pub smoothness: SmoothnessCertificate,
    /// Remarks about how the input was chosen.
    pub notes: Vec<String>,
    /// `(g, h)` with `f = x0 x1 g + x3 h` for the Dan family.
    #[serde(skip)]
    pub dan_gh: Option<(Polynomial, Polynomial)>,
}

fn serialize_poly<S: serde::Serializer>(p: &Polynomial, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(p)
}

fn poly(s: &str, n: usize) -> Polynomial {
    parse_polynomial(s, Some(n)).expect("built-in polynomial parses")
}

fn sum_of(terms: impl IntoIterator<Item = String>) -> String {
    terms.into_iter().collect::<Vec<_>>().join(" + ")
}

/// `(g, h)` for the default Dan surface: Fermat terms plus one mixing
/// monomial in each.
pub fn dan_default_gh(d: u32) -> (Polynomial, Polynomial) {
    let g = format!("x0^{e} + x1^{e} + x2^{e} + x0*x2^{m}", e = d - 2, m = d - 3);
    let h = format!("x0^{e} + x1^{e} + x2^{e} + x3^{e} + x1*x2^{m}", e = d - 1, m = d - 2);
    (poly(&g, 4), poly(&h, 4))
}

fn dan_from_gh(g: &Polynomial, h: &Polynomial) -> Polynomial {
    let x0x1 = poly("x0*x1", 4);
    let x3 = poly("x3", 4);
    &(&x0x1 * g) + &(&x3 * h)
}

/// Fermat `(g, h)` with a few random monomials of coefficient in
/// `[-3, 3]`, redrawn until smoothness is certified modulo `p`.
fn dan_random_gh(d: u32, seed: u64) -> Result<(Polynomial, Polynomial, u32)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let order = MonomialOrder::grevlex();
    let gm = enumerate_monomials(4, d - 2, &order);
    let hm = enumerate_monomials(4, d - 1, &order);
    let fermat = |e: u32, vars: usize| poly(&sum_of((0..vars).map(|v| format!("x{v}^{e}"))), 4);
    for attempt in 1..=64 {
        let mut g = fermat(d - 2, 3);
        let mut h = fermat(d - 1, 4);
        for _ in 0..3 {
            let c = loop {
                let c: i64 = rng.gen_range(-3..=3);
                if c != 0 {
                    break c;
                }
            };
            g.add_term(gm[rng.gen_range(0..gm.len())].clone(), Rational::from_integer(c.into()));
            let c: i64 = rng.gen_range(1..=3) * if rng.gen_bool(0.5) { 1 } else { -1 };
            h.add_term(hm[rng.gen_range(0..hm.len())].clone(), Rational::from_integer(c.into()));
        }
        if is_smooth_modular(&dan_from_gh(&g, &h))?.smooth {
            return Ok((g, h, attempt));
        }
    }
    Err(Error::Precondition(format!("no smooth random (g, h) found for seed {seed}")))
}

/// The `X_{k,d}` polynomial in `2k+2` variables.
pub fn x_kd_polynomial(k: usize, d: u32) -> Polynomial {
    let n = 2 * k + 2;
    let mut terms = vec![
        format!("x0*x1*(x0^{a} + x1^{a} + x2^{b}*x3^2)", a = d - 2, b = d - 4),
        format!("x4*x2^{}", d - 1),
        format!("x4^{d}"),
        format!("x5*x3^{}", d - 1),
        format!("x5^{d}"),
    ];
    for j in 3..=k {
        terms.push(format!("x{}^{d}", 2 * j + 1));
        terms.push(format!("x{}*x{}^{}", 2 * j + 1, 2 * j, d - 1));
    }
    poly(&sum_of(terms), n)
}

/// Variables cut out by the first `X_{k,d}` plane: `x0, x4, x5, x7, ..., x_{2k+1}`;
/// the second plane uses `x1` in place of `x0`.
pub fn x_kd_plane_vars(k: usize, first: usize) -> Vec<usize> {
    let mut v = vec![first, 4, 5];
    v.extend((3..=k).map(|j| 2 * j + 1));
    v
}

/// The low degree polynomials in `P^7` (`d = 4, 5`) and `P^11` (`d = 3`).
pub fn lowdeg_polynomial(k: usize, d: u32) -> Polynomial {
    let n = 2 * k + 2;
    let inner = if d == 3 {
        sum_of((0..=k + 1).map(|i| format!("x{i}")))
    } else {
        sum_of((0..=k + 1).map(|i| format!("x{i}^{}", d - 2)))
    };
    let mut terms = vec![format!("x0*x1*({inner})")];
    for j in k + 2..n {
        terms.push(format!("x{j}*(x{}^{e} + x{j}^{e})", j - k, e = d - 1));
    }
    poly(&sum_of(terms), n)
}

fn lowdeg_plane_vars(k: usize, first: usize) -> Vec<usize> {
    let mut v = vec![first];
    v.extend(k + 2..2 * k + 2);
    v
}

fn parse_plane(s: &str) -> Result<LinearSpacePlane> {
    let forms = parse_polynomial_list(s, None)?;
    if forms.is_empty() {
        return Err(Error::Precondition("empty plane".into()));
    }
    LinearSpacePlane::parse(s, 2 * forms.len())
}

/// `f` and the two planes of the configured family, with `f` checked smooth.
pub fn build_scenario(cfg: &ScenarioConfig) -> Result<BuiltScenario> {
    cfg.validate()?;
    let (k, d) = (cfg.k, cfg.d);
    let mut notes = Vec::new();
    let mut dan_gh = None;
    let (f, plane1, plane2, k, d) = match cfg.family {
        Family::DanK1 => {
            let (g, h) = if cfg.seed == 1 {
                notes.push("g, h: Fermat sums plus x0*x2^(d-3) in g and x1*x2^(d-2) in h".into());
                dan_default_gh(d)
            } else {
                let (g, h, attempt) = dan_random_gh(d, cfg.seed)?;
                notes.push(format!("g, h: Fermat sums with random terms, seed {}, draw {attempt}", cfg.seed));
                (g, h)
            };
            notes.push(format!("g = {g}"));
            notes.push(format!("h = {h}"));
            let f = dan_from_gh(&g, &h);
            dan_gh = Some((g, h));
            (f, LinearSpacePlane::coordinate(4, &[0, 3])?, LinearSpacePlane::coordinate(4, &[1, 3])?, k, d)
        }
        Family::XKd => {
            let n = 2 * k + 2;
            notes.push("second plane: x1 in place of x0, so that x1 lies in I_2".into());
            (
                x_kd_polynomial(k, d),
                LinearSpacePlane::coordinate(n, &x_kd_plane_vars(k, 0))?,
                LinearSpacePlane::coordinate(n, &x_kd_plane_vars(k, 1))?,
                k,
                d,
            )
        }
        Family::LowdegD4K3 | Family::LowdegD5K3 | Family::LowdegD3K5 => {
            let n = 2 * k + 2;
            (
                lowdeg_polynomial(k, d),
                LinearSpacePlane::coordinate(n, &lowdeg_plane_vars(k, 0))?,
                LinearSpacePlane::coordinate(n, &lowdeg_plane_vars(k, 1))?,
                k,
                d,
            )
        }
        Family::Custom => {
            let input = cfg.custom.as_ref().expect("validated");
            let plane1 = parse_plane(&input.plane1)?;
            let plane2 = parse_plane(&input.plane2)?;
            if plane1.k() != plane2.k() {
                return Err(Error::Precondition(format!(
                    "planes of different dimensions {} and {}",
                    plane1.k(),
                    plane2.k()
                )));
            }
            let k = plane1.k();
            let f = parse_polynomial(&input.f, Some(2 * k + 2))?;
            let d = f
                .homogeneous_degree()
                .ok_or_else(|| Error::Precondition("f must be homogeneous and nonzero".into()))?;
            crate::hodge::check_degree_range(k, d)?;
            (f, plane1, plane2, k, d)
        }
    };
    let smoothness = is_smooth(&f)?;
    if !smoothness.smooth {
        return Err(Error::Singular(
            smoothness.obstruction.clone().unwrap_or_else(|| "Jacobian ring is not Artinian".into()),
        ));
    }
    Ok(BuiltScenario {
        f,
        plane1,
        plane2,
        k,
        d,
        smoothness,
        notes,
        dan_gh,
    })
}
