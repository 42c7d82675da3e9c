//! Buchberger's algorithm with the sugar selection strategy and the
//! Gebauer–Möller pair criteria.

use std::collections::{BTreeSet, BinaryHeap, HashMap};

use num_traits::One;

pub use crate::algebra::{Field, Fp};
use crate::algebra::{Monomial, MonomialOrder, OrderKey, Polynomial, Rational};

/// Terms sorted from the largest monomial down.
pub(crate) type Terms<C = Rational> = Vec<(Monomial, C)>;

/// Scratch polynomial for reductions: coefficients by monomial plus a max-heap
/// of candidate leading monomials (possibly stale).
struct Work<'a, C = Rational> {
    order: &'a MonomialOrder,
    coeffs: HashMap<Monomial, C>,
    heap: BinaryHeap<(OrderKey, Monomial)>,
}

impl<'a, C: Field> Work<'a, C> {
    fn new(order: &'a MonomialOrder) -> Self {
        Work {
            order,
            coeffs: HashMap::new(),
            heap: BinaryHeap::new(),
        }
    }

    fn add(&mut self, m: Monomial, c: C) {
        if c.is_zero() {
            return;
        }
        use std::collections::hash_map::Entry;
        match self.coeffs.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
                self.heap.push((self.order.key(&m), m));
            }
            Entry::Occupied(mut o) => {
                o.get_mut().add_assign(&c);
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn pop_max(&mut self) -> Option<(Monomial, C)> {
        while let Some((_, m)) = self.heap.pop() {
            if let Some(c) = self.coeffs.remove(&m) {
                return Some((m, c));
            }
        }
        None
    }
}

/// Leading monomials with support masks for fast divisibility screening.
#[derive(Clone, Debug, Default)]
struct LeadIndex {
    leads: Vec<Monomial>,
    masks: Vec<u32>,
    active: Vec<bool>,
}

impl LeadIndex {
    fn push(&mut self, m: Monomial) {
        self.leads.push(m);
        self.masks.push(m.support_mask());
        self.active.push(true);
    }

    fn find_divisor(&self, m: &Monomial) -> Option<usize> {
        let mask = m.support_mask();
        (0..self.leads.len()).find(|&i| self.active[i] && self.masks[i] & !mask == 0 && self.leads[i].divides(m))
    }
}

/// Fully reduces the terms already loaded into `work` modulo monic `polys`.
fn reduce_work<C: Field>(mut work: Work<'_, C>, polys: &[Terms<C>], index: &LeadIndex) -> Terms<C> {
    let mut out = Vec::new();
    while let Some((m, c)) = work.pop_max() {
        match index.find_divisor(&m) {
            Some(i) => {
                let q = m.div(&polys[i][0].0).expect("lead divides");
                for (gm, gc) in &polys[i][1..] {
                    work.add(gm.mul(&q), c.mul(gc).neg());
                }
            }
            None => out.push((m, c)),
        }
    }
    out
}

fn make_monic<C: Field>(t: &mut Terms<C>) {
    if let Some((_, c)) = t.first() {
        if !c.is_one() {
            let inv = c.inv();
            for e in t.iter_mut() {
                e.1 = e.1.mul(&inv);
            }
        }
    }
}

fn sugar_of<C>(t: &Terms<C>) -> u32 {
    t.iter().map(|(m, _)| m.degree()).max().unwrap_or(0)
}

/// Incremental Buchberger state. Pairs and generators are processed in order
/// of increasing sugar; for homogeneous input the sugar of a pair is the
/// degree of its lcm, so [`GbBuilder::run_to_degree`] yields a basis that is
/// correct in all degrees up to the bound.
///
/// The coefficient field defaults to the rationals; over [`Fp`] the builder
/// is used for fast modular certificates.
pub struct GbBuilder<C: Field = Rational> {
    order: MonomialOrder,
    nvars: usize,
    polys: Vec<Terms<C>>,
    sugar: Vec<u32>,
    index: LeadIndex,
    pairs: BTreeSet<(u32, OrderKey, usize, usize)>,
    pending: Vec<(u32, Terms<C>)>,
    unit: bool,
}

impl GbBuilder<Rational> {
    pub fn new(gens: &[Polynomial], order: &MonomialOrder) -> Self {
        let nvars = gens.first().map_or(0, Polynomial::nvars);
        let terms = gens.iter().filter(|g| !g.is_zero()).map(|g| g.sorted_terms(order)).collect();
        Self::from_terms(nvars, terms, order)
    }

    /// Completes the computation and returns the reduced basis.
    pub fn finish(mut self) -> GroebnerBasis {
        self.run_to_degree(None);
        self.reduced()
    }

    /// Reduced basis of what has been computed so far.
    pub fn reduced(&self) -> GroebnerBasis {
        GroebnerBasis::from_parts(self.order.clone(), self.nvars, self.reduced_terms())
    }
}

impl GbBuilder<Fp> {
    /// Builder for the reductions of `gens` modulo [`Fp::P`]; `None` when a
    /// coefficient has no image or a leading coefficient vanishes.
    pub fn new_modular(gens: &[Polynomial], order: &MonomialOrder) -> Option<Self> {
        let nvars = gens.first().map_or(0, Polynomial::nvars);
        let mut terms = Vec::new();
        for g in gens.iter().filter(|g| !g.is_zero()) {
            let t: Option<Terms<Fp>> = g
                .sorted_terms(order)
                .iter()
                .map(|(m, c)| Fp::from_rational(c).map(|x| (*m, x)))
                .collect();
            let t: Terms<Fp> = t?.into_iter().filter(|e| !e.1.is_zero()).collect();
            if t.first().map(|e| e.0) != g.leading_term(order).map(|e| e.0) {
                return None;
            }
            terms.push(t);
        }
        Some(Self::from_terms(nvars, terms, order))
    }
}

impl<C: Field> GbBuilder<C> {
    fn from_terms(nvars: usize, terms: Vec<Terms<C>>, order: &MonomialOrder) -> Self {
        let mut pending: Vec<(u32, Terms<C>)> = terms.into_iter().map(|t| (sugar_of(&t), t)).collect();
        // stable order: by sugar, then by leading term, largest first among ties
        pending.sort_by(|a, b| b.0.cmp(&a.0).then_with(|| order.key(&a.1[0].0).cmp(&order.key(&b.1[0].0))));
        GbBuilder {
            order: order.clone(),
            nvars,
            polys: Vec::new(),
            sugar: Vec::new(),
            index: LeadIndex::default(),
            pairs: BTreeSet::new(),
            pending,
            unit: false,
        }
    }

    pub fn is_unit(&self) -> bool {
        self.unit
    }

    /// Smallest sugar among unprocessed generators and pairs.
    pub fn next_sugar(&self) -> Option<u32> {
        let g = self.pending.last().map(|p| p.0);
        let p = self.pairs.first().map(|p| p.0);
        match (g, p) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (a, b) => a.or(b),
        }
    }

    pub fn is_complete(&self) -> bool {
        self.unit || self.next_sugar().is_none()
    }

    /// Leading monomials of the current (not necessarily reduced) basis.
    pub fn leading_monomials(&self) -> Vec<Monomial> {
        (0..self.polys.len())
            .filter(|&i| self.index.active[i])
            .map(|i| self.index.leads[i])
            .collect()
    }

    /// Processes everything with sugar at most `bound` (all of it for `None`).
    pub fn run_to_degree(&mut self, bound: Option<u32>) {
        while !self.unit {
            let Some(s) = self.next_sugar() else { break };
            if bound.is_some_and(|b| s > b) {
                break;
            }
            let gen_first = self.pending.last().is_some_and(|p| p.0 == s);
            let work = if gen_first {
                let (s, t) = self.pending.pop().expect("pending generator");
                let mut w = Work::new(&self.order);
                for (m, c) in t {
                    w.add(m, c);
                }
                (s, w)
            } else {
                let (s, _, i, j) = self.pairs.pop_first().expect("pending pair");
                (s, self.spoly_work(i, j))
            };
            let (s, w) = work;
            let mut h = reduce_work(w, &self.polys, &self.index);
            if h.is_empty() {
                continue;
            }
            make_monic(&mut h);
            if h[0].0.is_one() {
                self.unit = true;
                self.polys = vec![h];
                self.sugar = vec![0];
                self.index = LeadIndex::default();
                self.index.push(Monomial::one(self.nvars));
                self.pairs.clear();
                self.pending.clear();
                break;
            }
            self.insert(h, s);
        }
    }

    fn spoly_work(&self, i: usize, j: usize) -> Work<'_, C> {
        let (li, lj) = (self.index.leads[i], self.index.leads[j]);
        let l = li.lcm(&lj);
        let qi = l.div(&li).expect("lcm");
        let qj = l.div(&lj).expect("lcm");
        let mut w = Work::new(&self.order);
        for (m, c) in &self.polys[i][1..] {
            w.add(m.mul(&qi), c.clone());
        }
        for (m, c) in &self.polys[j][1..] {
            w.add(m.mul(&qj), c.neg());
        }
        w
    }

    fn insert(&mut self, h: Terms<C>, sugar: u32) {
        let lh = h[0].0;
        let hidx = self.polys.len();
        // candidate pairs (h, g)
        let cands: Vec<(usize, Monomial)> = (0..hidx)
            .filter(|&g| self.index.active[g])
            .map(|g| (g, lh.lcm(&self.index.leads[g])))
            .collect();
        let mut kept: Vec<(usize, Monomial)> = Vec::new();
        for (pos, &(g, l)) in cands.iter().enumerate() {
            let coprime = lh.is_coprime(&self.index.leads[g]);
            let dominated = cands[pos + 1..].iter().any(|(_, l2)| l2.divides(&l)) || kept.iter().any(|(_, l2)| l2.divides(&l));
            if coprime || !dominated {
                kept.push((g, l));
            }
        }
        kept.retain(|&(g, _)| !lh.is_coprime(&self.index.leads[g]));
        let leads = &self.index.leads;
        self.pairs.retain(|&(_, _, i, j)| {
            let l = leads[i].lcm(&leads[j]);
            !(lh.divides(&l) && leads[i].lcm(&lh) != l && leads[j].lcm(&lh) != l)
        });
        for (g, l) in kept {
            let s = (sugar + l.degree() - lh.degree()).max(self.sugar[g] + l.degree() - self.index.leads[g].degree());
            self.pairs.insert((s, self.order.key(&l), g, hidx));
        }
        for g in 0..hidx {
            if self.index.active[g] && lh.divides(&self.index.leads[g]) {
                self.index.active[g] = false;
            }
        }
        self.polys.push(h);
        self.sugar.push(sugar);
        self.index.push(lh);
    }

    fn reduced_terms(&self) -> Vec<Terms<C>> {
        // active leading monomials are pairwise non-divisible
        let mut keep: Vec<usize> = (0..self.polys.len()).filter(|&i| self.index.active[i]).collect();
        keep.sort_by_key(|&i| self.order.key(&self.index.leads[i]));
        let mut index = LeadIndex::default();
        let mut polys: Vec<Terms<C>> = Vec::new();
        for &i in &keep {
            index.push(self.index.leads[i]);
            polys.push(self.polys[i].clone());
        }
        let mut out = Vec::with_capacity(polys.len());
        for k in 0..polys.len() {
            let mut w = Work::new(&self.order);
            for (m, c) in &polys[k][1..] {
                w.add(*m, c.clone());
            }
            index.active[k] = false;
            let tail = reduce_work(w, &polys, &index);
            index.active[k] = true;
            let mut t = vec![polys[k][0].clone()];
            t.extend(tail);
            out.push(t);
        }
        out
    }
}

/// A reduced Gröbner basis: monic elements sorted by increasing leading term.
#[derive(Clone, Debug)]
pub struct GroebnerBasis {
    order: MonomialOrder,
    nvars: usize,
    terms: Vec<Terms>,
    index: LeadIndexFrozen,
}

#[derive(Clone, Debug)]
struct LeadIndexFrozen(LeadIndex);

impl GroebnerBasis {
    fn from_parts(order: MonomialOrder, nvars: usize, terms: Vec<Terms>) -> Self {
        let mut index = LeadIndex::default();
        for t in &terms {
            index.push(t[0].0);
        }
        GroebnerBasis {
            order,
            nvars,
            terms,
            index: LeadIndexFrozen(index),
        }
    }

    /// Reduced Gröbner basis of the ideal generated by `gens`.
    pub fn compute(gens: &[Polynomial], order: &MonomialOrder) -> Self {
        GbBuilder::new(gens, order).finish()
    }

    /// Like [`GroebnerBasis::compute`], with the ambient variable count given
    /// explicitly (needed when `gens` is empty).
    pub fn compute_in(nvars: usize, gens: &[Polynomial], order: &MonomialOrder) -> Self {
        let mut b = GbBuilder::new(gens, order);
        b.nvars = nvars;
        b.finish()
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.terms.first().is_some_and(|t| t[0].0.is_one())
    }

    pub fn polynomials(&self) -> Vec<Polynomial> {
        self.terms
            .iter()
            .map(|t| Polynomial::from_terms(self.nvars, t.iter().cloned()))
            .collect()
    }

    pub fn leading_monomials(&self) -> &[Monomial] {
        &self.index.0.leads
    }

    pub fn is_standard(&self, m: &Monomial) -> bool {
        self.index.0.find_divisor(m).is_none()
    }

    pub fn normal_form(&self, p: &Polynomial) -> Polynomial {
        let mut w = Work::new(&self.order);
        for (m, c) in p.terms() {
            w.add(*m, c.clone());
        }
        let t = reduce_work(w, &self.terms, &self.index.0);
        Polynomial::from_terms(p.nvars(), t)
    }

    /// Normal form of a single monomial, as sorted terms.
    pub fn normal_form_monomial(&self, m: &Monomial) -> Vec<(Monomial, Rational)> {
        if self.is_standard(m) {
            return vec![(*m, <Rational as One>::one())];
        }
        let mut w = Work::new(&self.order);
        w.add(*m, <Rational as One>::one());
        reduce_work(w, &self.terms, &self.index.0)
    }

    pub fn contains(&self, p: &Polynomial) -> bool {
        self.normal_form(p).is_zero()
    }

    /// Checks Buchberger's criterion directly: every S-polynomial of two
    /// basis elements with non-coprime leading terms reduces to zero.
    pub fn satisfies_buchberger_criterion(&self) -> bool {
        let n = self.terms.len();
        for i in 0..n {
            for j in i + 1..n {
                let (li, lj) = (self.terms[i][0].0, self.terms[j][0].0);
                if li.is_coprime(&lj) {
                    continue;
                }
                let l = li.lcm(&lj);
                let (qi, qj) = (l.div(&li).expect("lcm"), l.div(&lj).expect("lcm"));
                let mut w = Work::new(&self.order);
                for (m, c) in &self.terms[i][1..] {
                    w.add(m.mul(&qi), c.clone());
                }
                for (m, c) in &self.terms[j][1..] {
                    w.add(m.mul(&qj), -c.clone());
                }
                if !reduce_work(w, &self.terms, &self.index.0).is_empty() {
                    return false;
                }
            }
        }
        true
    }

    /// True when the basis is reduced: monic, and no term of any element is
    /// divisible by the leading monomial of another.
    pub fn is_reduced(&self) -> bool {
        let leads = &self.index.0.leads;
        self.terms.iter().enumerate().all(|(i, t)| {
            One::is_one(&t[0].1)
                && t.iter()
                    .all(|(m, _)| leads.iter().enumerate().all(|(j, l)| j == i || !l.divides(m)))
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::parse_polynomial_list;

    fn gb(s: &str, n: usize) -> GroebnerBasis {
        GroebnerBasis::compute_in(n, &parse_polynomial_list(s, Some(n)).unwrap(), &MonomialOrder::grevlex())
    }

    #[test]
    fn monomial_ideal_is_fixed() {
        let g = gb("x0, x1", 3);
        assert_eq!(g.len(), 2);
        assert!(g.is_reduced());
    }

    #[test]
    fn zero_ideal_is_empty() {
        let g = gb("x0^2 - x0^2", 2);
        assert!(g.is_empty());
        assert!(!g.is_unit());
    }

    #[test]
    fn twisted_cubic() {
        let g = gb("x0*x2 - x1^2, x1*x3 - x2^2, x0*x3 - x1*x2", 4);
        assert_eq!(g.len(), 3);
        assert!(g.satisfies_buchberger_criterion());
        assert!(g.is_reduced());
    }

    #[test]
    fn unit_detection() {
        let g = gb("x0 + 1, x0", 1);
        assert!(g.is_unit());
    }

    #[test]
    fn generators_reduce_to_zero() {
        let gens = parse_polynomial_list("x0^3 - 2*x0*x1, x0^2*x1 - 2*x1^2 + x0", Some(2)).unwrap();
        let g = GroebnerBasis::compute(&gens, &MonomialOrder::grlex());
        assert!(g.satisfies_buchberger_criterion());
        for f in &gens {
            assert!(g.contains(f));
        }
        // the classical example has basis {x^2, xy, y^2 - x/2}
        assert_eq!(g.len(), 3);
    }
}
