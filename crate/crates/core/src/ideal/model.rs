use std::collections::BTreeMap;
use std::fmt;
use std::sync::{Arc, OnceLock, RwLock};

use serde::Serialize;

use super::groebner::GroebnerBasis;
use super::hilbert::{hilbert_numerator, hilbert_value, Numerator};
use super::intersection::intersection_by_elimination;
use super::span::{DegreeSpan, MonomialBasis};
use crate::algebra::{Monomial, MonomialOrder, Polynomial};
use crate::error::{Error, Result};

/// Standard monomials of one degree, largest first.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QuotientBasis {
    pub degree: u32,
    #[serde(serialize_with = "serialize_monomials")]
    pub monomials: Vec<Monomial>,
}

fn serialize_monomials<S: serde::Serializer>(ms: &[Monomial], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(ms.iter().map(|m| m.to_string()))
}

impl QuotientBasis {
    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }
}

enum Source {
    Generators(Vec<Polynomial>),
    Intersection(Arc<IdealModel>, Arc<IdealModel>),
}

/// A homogeneous ideal of `Q[x0..x_{n-1}]` with lazily computed Gröbner basis
/// and graded pieces.
///
/// Caches are filled compute-then-publish: concurrent callers may compute the
/// same value, and whichever finishes first is kept.
pub struct IdealModel {
    nvars: usize,
    order: MonomialOrder,
    source: Source,
    gb: OnceLock<GroebnerBasis>,
    numerator: OnceLock<Numerator>,
    spans: RwLock<BTreeMap<u32, Arc<DegreeSpan>>>,
    bases: RwLock<BTreeMap<u32, Arc<MonomialBasis>>>,
}

impl fmt::Debug for IdealModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.source {
            Source::Generators(g) => f.debug_struct("IdealModel").field("generators", g).finish(),
            Source::Intersection(..) => f.write_str("IdealModel(intersection)"),
        }
    }
}

impl IdealModel {
    pub fn new(nvars: usize, gens: Vec<Polynomial>, order: &MonomialOrder) -> Result<Self> {
        for g in &gens {
            if g.nvars() != nvars {
                return Err(crate::error::AlgebraError::VariableCountMismatch(nvars, g.nvars()).into());
            }
            if !g.is_homogeneous() {
                return Err(Error::Precondition(format!("generator {g} is not homogeneous")));
            }
        }
        let gens = gens.into_iter().filter(|g| !g.is_zero()).collect();
        Ok(Self::build(nvars, Source::Generators(gens), order))
    }

    /// The ideal of `S` spanned degreewise by `I ∩ I'`.
    pub fn intersection(a: Arc<IdealModel>, b: Arc<IdealModel>) -> Self {
        assert_eq!(a.nvars, b.nvars, "ideals live in different rings");
        let order = a.order.clone();
        Self::build(a.nvars, Source::Intersection(a, b), &order)
    }

    fn build(nvars: usize, source: Source, order: &MonomialOrder) -> Self {
        IdealModel {
            nvars,
            order: order.clone(),
            source,
            gb: OnceLock::new(),
            numerator: OnceLock::new(),
            spans: RwLock::new(BTreeMap::new()),
            bases: RwLock::new(BTreeMap::new()),
        }
    }

    /// Same ideal under another monomial order (fresh caches).
    pub fn with_order(&self, order: &MonomialOrder) -> IdealModel {
        let source = match &self.source {
            Source::Generators(g) => Source::Generators(g.clone()),
            Source::Intersection(a, b) => Source::Intersection(Arc::new(a.with_order(order)), Arc::new(b.with_order(order))),
        };
        Self::build(self.nvars, source, order)
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    /// Generators, when the ideal was given by generators.
    pub fn generators(&self) -> Option<&[Polynomial]> {
        match &self.source {
            Source::Generators(g) => Some(g),
            Source::Intersection(..) => None,
        }
    }

    pub fn is_intersection(&self) -> bool {
        matches!(self.source, Source::Intersection(..))
    }

    /// Reduced Gröbner basis; for intersections it comes from elimination.
    pub fn groebner(&self) -> &GroebnerBasis {
        self.gb.get_or_init(|| match &self.source {
            Source::Generators(g) => GroebnerBasis::compute_in(self.nvars, g, &self.order),
            Source::Intersection(a, b) => intersection_by_elimination(a, b),
        })
    }

    pub fn normal_form(&self, p: &Polynomial) -> Polynomial {
        self.groebner().normal_form(p)
    }

    pub fn contains(&self, p: &Polynomial) -> bool {
        match &self.source {
            Source::Generators(_) => self.groebner().contains(p),
            Source::Intersection(a, b) => a.contains(p) && b.contains(p),
        }
    }

    fn numerator(&self) -> &Numerator {
        self.numerator.get_or_init(|| hilbert_numerator(self.groebner().leading_monomials()))
    }

    /// `dim (S/I)_t`: from the Gröbner basis for ideals given by generators,
    /// from the degreewise span for intersections.
    pub fn hilbert_function(&self, t: u32) -> u64 {
        match &self.source {
            Source::Generators(_) => self.hilbert_function_gb(t),
            Source::Intersection(..) => self.hilbert_function_degreewise(t),
        }
    }

    pub fn hilbert_function_gb(&self, t: u32) -> u64 {
        hilbert_value(self.numerator(), self.nvars, t)
    }

    pub fn hilbert_function_degreewise(&self, t: u32) -> u64 {
        self.span(t).codim() as u64
    }

    /// Hilbert function for `t = 0..=max`.
    pub fn hilbert_vector(&self, max: u32) -> Vec<u64> {
        (0..=max).map(|t| self.hilbert_function(t)).collect()
    }

    /// If the quotient is Artinian, its full Hilbert function.
    pub fn artinian_hilbert_vector(&self) -> Option<Vec<u64>> {
        super::hilbert::artinian_hilbert_vector(self.groebner().leading_monomials(), self.nvars)
    }

    pub fn monomial_basis(&self, t: u32) -> Arc<MonomialBasis> {
        if let Some(b) = self.bases.read().expect("lock").get(&t) {
            return b.clone();
        }
        let b = Arc::new(MonomialBasis::new(self.nvars, t, &self.order));
        self.bases.write().expect("lock").entry(t).or_insert(b).clone()
    }

    fn cached_span(&self, t: u32) -> Option<Arc<DegreeSpan>> {
        self.spans.read().expect("lock").get(&t).cloned()
    }

    fn publish_span(&self, t: u32, s: DegreeSpan) -> Arc<DegreeSpan> {
        self.spans.write().expect("lock").entry(t).or_insert_with(|| Arc::new(s)).clone()
    }

    /// `I_t` by linear algebra (no Gröbner basis involved).
    pub fn span(&self, t: u32) -> Arc<DegreeSpan> {
        if let Some(s) = self.cached_span(t) {
            return s;
        }
        let s = match &self.source {
            Source::Generators(gens) => {
                let of_degree = |d: u32| -> Vec<&Polynomial> { gens.iter().filter(|g| g.homogeneous_degree() == Some(d)).collect() };
                if t == 0 {
                    DegreeSpan::from_polynomials(self.monomial_basis(0), of_degree(0))
                } else {
                    let prev = self.span(t - 1);
                    DegreeSpan::next_degree(&prev, self.monomial_basis(t), &of_degree(t))
                }
            }
            Source::Intersection(a, b) => a.span(t).intersect(&b.span(t)),
        };
        self.publish_span(t, s)
    }

    /// Drops cached graded pieces of degree below `t`.
    pub fn forget_spans_below(&self, t: u32) {
        self.spans.write().expect("lock").retain(|&d, _| d >= t);
    }

    /// Standard monomials of degree `t` for the active order.
    pub fn quotient_basis(&self, t: u32) -> QuotientBasis {
        let monomials = match &self.source {
            Source::Generators(_) => standard_monomials(self.groebner(), self.nvars, t, &self.order),
            Source::Intersection(..) => self.span(t).standard_monomials(),
        };
        QuotientBasis { degree: t, monomials }
    }

    /// `I + I'`, from concatenated generators.
    pub fn sum(&self, other: &IdealModel) -> Result<IdealModel> {
        let (Some(a), Some(b)) = (self.generators(), other.generators()) else {
            return Err(Error::Precondition("ideal sum needs ideals given by generators".into()));
        };
        let gens = a.iter().chain(b).cloned().collect();
        IdealModel::new(self.nvars, gens, &self.order)
    }
}

/// Monomials of degree `t` not divisible by any leading monomial of `gb`,
/// largest first. Enumeration prunes every partial exponent vector that is
/// already divisible.
pub fn standard_monomials(gb: &GroebnerBasis, nvars: usize, t: u32, order: &MonomialOrder) -> Vec<Monomial> {
    let leads = gb.leading_monomials();
    let mut out = Vec::new();
    if nvars == 0 {
        return out;
    }
    let mut cur = Monomial::one(nvars);
    walk(leads, &mut cur, 0, t, &mut out);
    out.sort_unstable_by(|a, b| order.cmp(b, a));
    out
}

fn walk(leads: &[Monomial], cur: &mut Monomial, var: usize, remaining: u32, out: &mut Vec<Monomial>) {
    let n = cur.nvars();
    let blocked = |m: &Monomial| leads.iter().any(|l| l.divides(m));
    if var == n - 1 {
        let m = cur.with_exp(var, remaining);
        if !blocked(&m) {
            out.push(m);
        }
        return;
    }
    for e in 0..=remaining {
        let m = cur.with_exp(var, e);
        if blocked(&m) {
            break;
        }
        *cur = m;
        walk(leads, cur, var + 1, remaining - e, out);
    }
    *cur = cur.with_exp(var, 0);
}
