use std::collections::BTreeSet;
use std::sync::Arc;
use std::time::{Duration, Instant};

use num_traits::Zero;
use serde::Serialize;

use super::build::{build_scenario, BuiltScenario};
use super::config::{Family, ScenarioConfig};
use crate::algebra::rational::{format_rational, int};
use crate::algebra::{enumerate_monomials, monomial_count, Monomial, MonomialOrder, NuPoly, Polynomial, Rational};
use crate::error::{Error, Result};
use crate::hodge::{
    associated_ideal_in, associated_ideal_with_order, check_gorenstein, jacobian_contained_in_degree, joint_tangent_codim,
    plane_decomposition, plane_representative, tangent_codim, AssociatedIdeal, GorensteinReport, JacobianRing,
    PlaneDecomposition, TangentCodim,
};
use crate::ideal::{ideal_intersection_degreewise, IdealModel};
use crate::pairing::{excess_report, gram_matrix, tsp_criterion, BlockShape, CriticalNu, ExcessReport, GramReport, TspOutcome, Verdict};

pub const SCHEMA_VERSION: u32 = 1;

/// Largest `dim S_T`, `T` the top degree of the Jacobian ring, for which the
/// oracle run repeats the general associated ideal construction.
pub const GENERAL_ORACLE_CAP: u64 = 1_000;

#[derive(Clone, Debug, Serialize)]
pub struct Engine {
    pub name: &'static str,
    pub version: &'static str,
}

#[derive(Clone, Debug, Serialize)]
pub struct IdealSummary {
    pub name: String,
    pub generators: Vec<String>,
    pub socle_degree: u32,
    pub socle_generator: String,
    /// `h(0), ..., h(s)`.
    pub hilbert: Vec<u64>,
    pub length: u64,
    pub gorenstein: Option<GorensteinReport>,
    pub tangent_codim: TangentCodim,
    /// `J_d ⊆ I_d`.
    pub jacobian_in_degree_d: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct HilbertRow {
    pub t: u32,
    pub i1: u64,
    pub i2: u64,
    pub sum: u64,
    /// `h_1 + h_2 - h_sum`.
    pub intersection: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum OracleStatus {
    Agree,
    Disagree,
    Skipped,
}

#[derive(Clone, Debug, Serialize)]
pub struct OracleCheck {
    pub name: String,
    pub status: OracleStatus,
    pub detail: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

/// Everything a scenario run produces. Contains no timings, so equal
/// configurations give byte-identical serializations.
#[derive(Clone, Debug, Serialize)]
pub struct ReportDocument {
    pub schema_version: u32,
    pub engine: Engine,
    pub config: ScenarioConfig,
    pub scenario: BuiltScenario,
    pub ideals: Vec<IdealSummary>,
    pub hilbert_table: Vec<HilbertRow>,
    /// `h_{I_1 ∩ I_2}` at selected degrees, by linear algebra in `S_t`.
    pub intersection_degreewise: Vec<(u32, u64)>,
    pub joint_codim: u64,
    pub gram: Option<GramReport>,
    pub excess: Option<ExcessReport>,
    pub tsp: TspOutcome,
    pub oracle: Vec<OracleCheck>,
    pub checks: Vec<Check>,
    /// Facts the run relies on or leaves open, as opposed to ones it computed.
    pub remarks: Vec<String>,
    pub passed: bool,
}

impl ReportDocument {
    pub fn failed_checks(&self) -> Vec<&Check> {
        self.checks.iter().filter(|c| !c.passed).collect()
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn critical_values(&self) -> Vec<Rational> {
        self.gram.as_ref().map(GramReport::rational_critical_values).unwrap_or_default()
    }
}

/// Wall clock per stage, reported apart from the document.
#[derive(Clone, Debug, Default)]
pub struct StageTimings(pub Vec<(String, Duration)>);

impl StageTimings {
    fn time<T>(&mut self, stage: &str, f: impl FnOnce() -> Result<T>) -> Result<T> {
        let start = Instant::now();
        let out = f().map_err(|e| e.at_stage(stage));
        self.0.push((stage.to_string(), start.elapsed()));
        out
    }
}

struct Checks(Vec<Check>);

impl Checks {
    fn add(&mut self, name: &str, passed: bool, detail: impl Into<String>) {
        self.0.push(Check {
            name: name.to_string(),
            passed,
            detail: detail.into(),
        });
    }
}

pub fn run_scenario(cfg: &ScenarioConfig) -> Result<ReportDocument> {
    run_scenario_timed(cfg).map(|(doc, _)| doc)
}

pub fn run_scenario_timed(cfg: &ScenarioConfig) -> Result<(ReportDocument, StageTimings)> {
    let mut timings = StageTimings::default();
    let built = timings.time("build", || build_scenario(cfg))?;
    let (k, d) = (built.k, built.d);
    let order = cfg.order.order();
    let (dec1, dec2) = timings.time("decomposition", || {
        Ok((plane_decomposition(&built.f, &built.plane1)?, plane_decomposition(&built.f, &built.plane2)?))
    })?;
    let (a1, a2) = timings.time("associated-ideal", || {
        Ok((associated_ideal_with_order(&dec1, &order)?, associated_ideal_with_order(&dec2, &order)?))
    })?;
    let s = a1.socle_degree;
    let e = k as i64 * d as i64 - 2 * k as i64 - 2;
    let mut checks = Checks(Vec::new());

    let ideals = timings.time("gorenstein", || {
        [("I1", &a1), ("I2", &a2)]
            .into_iter()
            .map(|(name, a)| summarize(name, a, &built, &mut checks))
            .collect::<Result<Vec<_>>>()
    })?;

    let sum = timings.time("hilbert", || Ok(Arc::new(a1.ideal.sum(&a2.ideal)?)))?;
    let hilbert_table: Vec<HilbertRow> = (0..=s)
        .map(|t| {
            let (i1, i2, hs) = (a1.ideal.hilbert_function(t), a2.ideal.hilbert_function(t), sum.hilbert_function(t));
            HilbertRow {
                t,
                i1,
                i2,
                sum: hs,
                intersection: i1 + i2 - hs,
            }
        })
        .collect();
    let mut probe: BTreeSet<u32> = [d].into();
    if e >= 0 {
        probe.insert(e as u32);
    }
    let intersection_degreewise: Vec<(u32, u64)> = timings.time("intersection", || {
        Ok(probe
            .iter()
            .map(|&t| (t, ideal_intersection_degreewise(&a1.ideal, &a2.ideal, t).codim() as u64))
            .collect())
    })?;
    for &(t, h) in &intersection_degreewise {
        let ie = hilbert_table[t as usize].intersection;
        checks.add(
            &format!("intersection-inclusion-exclusion-{t}"),
            h == ie,
            format!("degreewise {h}, inclusion-exclusion {ie}"),
        );
    }
    let joint_codim = joint_tangent_codim(&[&a1, &a2], d);

    let (gram, excess) = if e >= 0 {
        let g = timings.time("gram", || gram_matrix(&a1, &a2, d, e as u32))?;
        let x = timings.time("excess", || Ok(excess_report(&g, joint_codim, &cfg.nu_samples)))?;
        (Some(g), Some(x))
    } else {
        (None, None)
    };
    let tsp = timings.time("tsp", || tsp_criterion(&a1, &a2, d, k))?;

    let oracle = if cfg.oracle_checks {
        timings.time("oracle", || oracle_checks(&built, &dec1, &dec2, &a1, &a2, &sum))?
    } else {
        Vec::new()
    };
    for o in &oracle {
        checks.add(&format!("oracle-{}", o.name), o.status != OracleStatus::Disagree, o.detail.clone());
    }

    timings.time("assertions", || {
        family_checks(cfg.family, &built, &a1, &a2, gram.as_ref(), excess.as_ref(), &tsp, &intersection_degreewise, &mut checks);
        Ok(())
    })?;
    let remarks = timings.time("remarks", || remarks(cfg.family, &built, &a2, &sum, &mut checks))?;

    let passed = checks.0.iter().all(|c| c.passed);
    let doc = ReportDocument {
        schema_version: SCHEMA_VERSION,
        engine: Engine {
            name: env!("CARGO_PKG_NAME"),
            version: env!("CARGO_PKG_VERSION"),
        },
        config: cfg.clone(),
        scenario: built,
        ideals,
        hilbert_table,
        intersection_degreewise,
        joint_codim,
        gram,
        excess,
        tsp,
        oracle,
        checks: checks.0,
        remarks,
        passed,
    };
    Ok((doc, timings))
}

fn same_ideal(model: &IdealModel, gens: &[Polynomial]) -> Result<bool> {
    if !gens.iter().all(|g| model.contains(g)) {
        return Ok(false);
    }
    let other = IdealModel::new(model.nvars(), gens.to_vec(), model.order())?;
    Ok(model.groebner().polynomials().iter().all(|g| other.contains(g)))
}

fn remarks(family: Family, built: &BuiltScenario, a2: &AssociatedIdeal, sum: &IdealModel, checks: &mut Checks) -> Result<Vec<String>> {
    let mut out = vec!["smoothness of the Hodge locus of the pair is not checked; only tangent codimensions are computed".to_string()];
    if built.k * built.d as usize >= 2 * built.k + 2 {
        out.push("nu is a free parameter; the injective map from lambda to nu is not known explicitly and no lambda value is computed".into());
    }
    match family {
        Family::XKd => out.push("nu = 0 and nu = -1 are taken to correspond to lambda = 0 and lambda = 1; this is not computed".into()),
        Family::LowdegD4K3 | Family::LowdegD5K3 | Family::LowdegD3K5 => {
            out.push("the critical nu listed are those of this Gram matrix, not a claimed complete list of exceptional parameters".into())
        }
        Family::DanK1 => {
            if let Some((g, h)) = &built.dan_gh {
                let n = built.f.nvars();
                let x = |i| Polynomial::var(n, i);
                let x0g = &x(0) * g;
                let with_x3 = same_ideal(&a2.ideal, &[x(1), x(3), x0g.clone(), h.clone()])?;
                let with_x2 = same_ideal(&a2.ideal, &[x(1), x(2), x0g, h.clone()])?;
                out.push(format!("I2 equals <x1, x3, x0*g, h>: {with_x3}; I2 equals <x1, x2, x0*g, h>: {with_x2}"));
                let top = Polynomial::monomial(Monomial::var(n, 2).with_exp(2, built.d - 1));
                let sum_ok = same_ideal(sum, &[x(0), x(1), x(3), top])?;
                checks.add("dan-sum-ideal", sum_ok, format!("I1 + I2 = <x0, x1, x3, x2^{}>", built.d - 1));
            }
        }
        Family::Custom => {}
    }
    Ok(out)
}

fn summarize(name: &str, a: &AssociatedIdeal, built: &BuiltScenario, checks: &mut Checks) -> Result<IdealSummary> {
    let gorenstein = match check_gorenstein(a) {
        Ok(r) => {
            checks.add(&format!("gorenstein-{name}"), true, "symmetric, one dimensional socle, perfect pairings");
            Some(r)
        }
        Err(Error::NotGorenstein { degree, reason }) => {
            checks.add(&format!("gorenstein-{name}"), false, format!("degree {degree}: {reason}"));
            None
        }
        Err(e) => return Err(e),
    };
    let jac = jacobian_contained_in_degree(&built.f, a, built.d)?;
    checks.add(&format!("jacobian-in-{name}"), jac, format!("J_{d} in {name}_{d}", d = built.d));
    let hilbert = a.hilbert_vector();
    Ok(IdealSummary {
        name: name.to_string(),
        generators: a
            .ideal
            .generators()
            .map(|g| g.iter().map(|p| p.to_string()).collect())
            .unwrap_or_default(),
        socle_degree: a.socle_degree,
        socle_generator: a.socle_generator.to_string(),
        length: hilbert.iter().sum(),
        hilbert,
        gorenstein,
        tangent_codim: tangent_codim(a, built.d),
        jacobian_in_degree_d: jac,
    })
}

fn agreement(name: &str, mismatch: Option<String>, ok: String) -> OracleCheck {
    OracleCheck {
        name: name.to_string(),
        status: if mismatch.is_some() { OracleStatus::Disagree } else { OracleStatus::Agree },
        detail: mismatch.unwrap_or(ok),
    }
}

fn oracle_checks(
    built: &BuiltScenario,
    dec1: &PlaneDecomposition,
    dec2: &PlaneDecomposition,
    a1: &AssociatedIdeal,
    a2: &AssociatedIdeal,
    sum: &Arc<IdealModel>,
) -> Result<Vec<OracleCheck>> {
    let s = a1.socle_degree;
    let mut out = Vec::new();
    for (name, ideal) in [("I1", &a1.ideal), ("I2", &a2.ideal), ("I1+I2", sum)] {
        let mismatch = (0..=s).find_map(|t| {
            let (g, l) = (ideal.hilbert_function_gb(t), ideal.hilbert_function_degreewise(t));
            (g != l).then(|| format!("degree {t}: Groebner {g}, linear algebra {l}"))
        });
        out.push(agreement(
            &format!("hilbert-{name}"),
            mismatch,
            format!("Groebner and degreewise Hilbert functions agree in degrees 0..={s}"),
        ));
        ideal.forget_spans_below(s + 2);
    }

    let cap = IdealModel::intersection(a1.ideal.clone(), a2.ideal.clone());
    let mismatch = (0..=s).find_map(|t| {
        let (g, l) = (cap.hilbert_function_gb(t), cap.hilbert_function_degreewise(t));
        (g != l).then(|| format!("degree {t}: elimination {g}, degreewise {l}"))
    });
    out.push(agreement(
        "intersection",
        mismatch,
        format!("elimination and degreewise intersections agree in degrees 0..={s}"),
    ));

    let n = built.f.nvars();
    let top = (built.d - 2) * n as u32;
    let size = monomial_count(n, top);
    if size > GENERAL_ORACLE_CAP {
        out.push(OracleCheck {
            name: "general-construction".into(),
            status: OracleStatus::Skipped,
            detail: format!("dim S_{top} = {size} exceeds the cap {GENERAL_ORACLE_CAP}"),
        });
        return Ok(out);
    }
    let ring = JacobianRing::new(&built.f)?;
    for (name, dec, a) in [("I1", dec1, a1), ("I2", dec2, a2)] {
        let rep = match plane_representative(dec) {
            Ok(r) => r,
            Err(e) if e.is_precondition() => {
                out.push(OracleCheck {
                    name: format!("general-construction-{name}"),
                    status: OracleStatus::Skipped,
                    detail: e.to_string(),
                });
                continue;
            }
            Err(e) => return Err(e),
        };
        let g = associated_ideal_in(&ring, &rep)?;
        let mismatch = (0..=s + 1).find_map(|t| (!g.ideal.span(t).same_space(&a.ideal.span(t))).then(|| format!("graded pieces differ in degree {t}")));
        out.push(agreement(
            &format!("general-construction-{name}"),
            mismatch,
            format!("general and shortcut constructions agree in degrees 0..={}", s + 1),
        ));
    }
    Ok(out)
}

/// Monomials of degree `t` in `vars` with every exponent at most `bound`.
pub fn box_monomials(nvars: usize, vars: &[usize], bound: u32, t: u32) -> BTreeSet<Monomial> {
    let sub = enumerate_monomials(vars.len(), t, &MonomialOrder::grevlex());
    sub.into_iter()
        .filter(|m| (0..vars.len()).all(|i| m.exp(i) <= bound))
        .map(|m| {
            let mut out = Monomial::one(nvars);
            for (i, &v) in vars.iter().enumerate() {
                out = out.with_exp(v, m.exp(i));
            }
            out
        })
        .collect()
}

/// Variables of the quotient basis of `S/I_j` for `X_{k,d}`: `x1` (or `x0`),
/// `x2`, `x3`, `x6`, `x8`, ..., `x_{2k}`.
pub fn x_kd_box_vars(k: usize, first: usize) -> Vec<usize> {
    let mut v = vec![first, 2, 3];
    v.extend((3..=k).map(|j| 2 * j));
    v
}

fn is_nu_times_nu_plus_one(p: &NuPoly) -> bool {
    p.degree() == Some(2) && p.coeff(0).is_zero() && !p.coeff(1).is_zero() && p.coeff(1) == p.coeff(2)
}

fn fmt_values(v: &[Rational]) -> String {
    format!("{{{}}}", v.iter().map(format_rational).collect::<Vec<_>>().join(", "))
}

#[allow(clippy::too_many_arguments)]
fn family_checks(
    family: Family,
    built: &BuiltScenario,
    a1: &AssociatedIdeal,
    a2: &AssociatedIdeal,
    gram: Option<&GramReport>,
    excess: Option<&ExcessReport>,
    tsp: &TspOutcome,
    degreewise: &[(u32, u64)],
    checks: &mut Checks,
) {
    let (k, d) = (built.k, built.d);
    let h_cap = |t: u32| degreewise.iter().find(|(u, _)| *u == t).map(|(_, h)| *h);
    match family {
        Family::DanK1 => {
            let lo = h_cap(d - 4);
            checks.add("dan-h-cap-d-4", lo == Some(2 * d as u64 - 7), format!("h(d-4) = {lo:?}, expected {}", 2 * d - 7));
            let hi = h_cap(d);
            checks.add("dan-h-cap-d", hi == Some(2 * d as u64 - 6), format!("h(d) = {hi:?}, expected {}", 2 * d - 6));
            if let (Some(g), Some(x)) = (gram, excess) {
                checks.add(
                    "dan-gram-size",
                    g.nrows() as u32 == 2 * d - 6 && g.ncols() as u32 == 2 * d - 7,
                    format!("{} x {}", g.nrows(), g.ncols()),
                );
                checks.add(
                    "dan-generic-left-kernel",
                    g.generic_rank < g.nrows(),
                    format!("generic rank {} < {} rows", g.generic_rank, g.nrows()),
                );
                let all = x.samples.iter().all(|s| s.verdict == Verdict::Excess);
                checks.add("dan-excess-at-samples", all, "left kernel at every sampled nu");
                let bound = x.samples.iter().all(|s| s.combined_codim <= 2 * d as u64 - 5);
                checks.add("dan-combined-codim", bound, format!("combined codimension at most {}", 2 * d - 5));
            }
        }
        Family::XKd => {
            let bound = d - 2;
            let expect = (d as u64 - 1).pow(k as u32 + 1);
            let n = built.f.nvars();
            let s = a1.socle_degree;
            for (name, a, first) in [("I1", a1, 1usize), ("I2", a2, 0usize)] {
                let len: u64 = a.hilbert_vector().iter().sum();
                checks.add(&format!("xkd-length-{name}"), len == expect, format!("|S/{name}| = {len}, expected {expect}"));
                let vars = x_kd_box_vars(k, first);
                let bad = (0..=s).find(|&t| {
                    let qb: BTreeSet<Monomial> = a.ideal.quotient_basis(t).monomials.into_iter().collect();
                    qb != box_monomials(n, &vars, bound, t)
                });
                checks.add(
                    &format!("xkd-quotient-basis-{name}"),
                    bad.is_none(),
                    match bad {
                        None => "standard monomials are the exponent box in every degree".into(),
                        Some(t) => format!("standard monomials differ from the exponent box in degree {t}"),
                    },
                );
                let socle = box_monomials(n, &vars, bound, s).into_iter().next();
                checks.add(
                    &format!("xkd-socle-{name}"),
                    socle.as_ref() == Some(&a.socle_generator),
                    format!("socle {}", a.socle_generator),
                );
            }
            if let (Some(g), Some(x)) = (gram, excess) {
                let slice = |t: u32| -> BTreeSet<Monomial> {
                    let mut b = box_monomials(n, &x_kd_box_vars(k, 1), bound, t);
                    b.extend(box_monomials(n, &x_kd_box_vars(k, 0), bound, t));
                    b
                };
                let c1 = slice(d);
                let c2 = slice(g.col_degree);
                let rows: BTreeSet<Monomial> = g.rows.iter().cloned().collect();
                let cols: BTreeSet<Monomial> = g.cols.iter().cloned().collect();
                checks.add(
                    "xkd-gram-bases",
                    rows == c1 && cols == c2,
                    format!("{} rows, {} columns; boxes give {} and {}", rows.len(), cols.len(), c1.len(), c2.len()),
                );
                checks.add("xkd-no-zero-rows", g.zero_rows == 0, format!("{} zero rows", g.zero_rows));
                let census = g.shape_census();
                let four = [BlockShape::One, BlockShape::Nu, BlockShape::OneNu, BlockShape::Triangle];
                checks.add(
                    "xkd-block-shapes",
                    four.iter().all(|b| census.contains_key(b)) && !census.contains_key(&BlockShape::Other),
                    census.iter().map(|(b, c)| format!("{b}: {c}")).collect::<Vec<_>>().join(", "),
                );
                let dets = g
                    .blocks
                    .iter()
                    .filter(|b| b.shape == BlockShape::Triangle)
                    .all(|b| b.determinant.as_ref().is_some_and(is_nu_times_nu_plus_one));
                checks.add("xkd-triangle-determinant", dets, "3x3 determinants are c nu(nu+1)");
                checks.add(
                    "xkd-generic-rank",
                    g.generic_rank == c1.len(),
                    format!("generic rank {}, |C1| = {}", g.generic_rank, c1.len()),
                );
                let crit = g.rational_critical_values();
                let only_rational = g.critical.iter().all(|c| matches!(c.nu, CriticalNu::Rational(_)));
                checks.add(
                    "xkd-critical-values",
                    only_rational && crit == vec![int(-1), int(0)],
                    format!("critical nu {}", fmt_values(&crit)),
                );
                let verdicts = x
                    .samples
                    .iter()
                    .all(|s| (s.verdict == Verdict::Excess) == (s.nu.is_zero() || s.nu == int(-1)));
                checks.add("xkd-verdicts", verdicts, "excess exactly at nu in {0, -1}");
            }
        }
        Family::LowdegD4K3 | Family::LowdegD5K3 | Family::LowdegD3K5 => {
            checks.add(
                "lowdeg-criterion",
                tsp.holds(),
                format!("pairing {} x {} of rank {}", tsp.rows, tsp.cols, tsp.rank),
            );
        }
        Family::Custom => {}
    }
}
