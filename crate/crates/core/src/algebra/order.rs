use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use super::monomial::Monomial;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum OrderKind {
    GradedReverseLex,
    GradedLex,
    /// Block order: the first `block` variables of the sequence are compared
    /// first (graded reverse lex on the block), the rest break ties the same way.
    /// Any polynomial whose leading term avoids the block lies entirely outside it.
    Elimination { block: usize },
}

const KEY_LEN: usize = super::monomial::MAX_VARS + 2;

/// Precomputed comparison key for one monomial under one order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct OrderKey([u16; KEY_LEN]);

/// A term order on monomials.
///
/// `vars` lists the variables from most to least significant; `None` means
/// `x0 > x1 > ... > x_{n-1}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MonomialOrder {
    pub kind: OrderKind,
    pub vars: Option<Vec<usize>>,
}

impl Default for MonomialOrder {
    fn default() -> Self {
        MonomialOrder::grevlex()
    }
}

impl MonomialOrder {
    pub fn grevlex() -> Self {
        MonomialOrder {
            kind: OrderKind::GradedReverseLex,
            vars: None,
        }
    }

    pub fn grlex() -> Self {
        MonomialOrder {
            kind: OrderKind::GradedLex,
            vars: None,
        }
    }

    pub fn with_vars(kind: OrderKind, vars: Vec<usize>) -> Self {
        MonomialOrder {
            kind,
            vars: Some(vars),
        }
    }

    pub fn name(&self) -> String {
        let base = match self.kind {
            OrderKind::GradedReverseLex => "grevlex".to_string(),
            OrderKind::GradedLex => "grlex".to_string(),
            OrderKind::Elimination { block } => format!("elim{block}"),
        };
        match &self.vars {
            None => base,
            Some(v) => format!(
                "{base}[{}]",
                v.iter().map(|i| format!("x{i}")).collect::<Vec<_>>().join(">")
            ),
        }
    }

    #[inline]
    fn var_at(&self, pos: usize) -> usize {
        match &self.vars {
            None => pos,
            Some(v) => v[pos],
        }
    }

    #[inline]
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self.kind {
            OrderKind::GradedReverseLex => {
                let c = a.degree().cmp(&b.degree());
                if c != Ordering::Equal {
                    return c;
                }
                self.revlex_tail(a, b, 0, a.nvars())
            }
            OrderKind::GradedLex => {
                let c = a.degree().cmp(&b.degree());
                if c != Ordering::Equal {
                    return c;
                }
                for pos in 0..a.nvars() {
                    let v = self.var_at(pos);
                    let c = a.exp(v).cmp(&b.exp(v));
                    if c != Ordering::Equal {
                        return c;
                    }
                }
                Ordering::Equal
            }
            OrderKind::Elimination { block } => {
                let bd = |m: &Monomial| (0..block).map(|p| m.exp(self.var_at(p))).sum::<u32>();
                let c = bd(a).cmp(&bd(b));
                if c != Ordering::Equal {
                    return c;
                }
                let c = self.revlex_tail(a, b, 0, block);
                if c != Ordering::Equal {
                    return c;
                }
                let c = a.degree().cmp(&b.degree());
                if c != Ordering::Equal {
                    return c;
                }
                self.revlex_tail(a, b, block, a.nvars())
            }
        }
    }

    /// Reverse-lex comparison over sequence positions `lo..hi`: the monomial
    /// with the smaller exponent in the last differing variable is larger.
    #[inline]
    fn revlex_tail(&self, a: &Monomial, b: &Monomial, lo: usize, hi: usize) -> Ordering {
        for pos in (lo..hi).rev() {
            let v = self.var_at(pos);
            let (ea, eb) = (a.exp(v), b.exp(v));
            if ea != eb {
                return eb.cmp(&ea);
            }
        }
        Ordering::Equal
    }

    /// A key whose natural ordering agrees with [`MonomialOrder::cmp`].
    pub fn key(&self, m: &Monomial) -> OrderKey {
        let n = m.nvars();
        let mut k = [0u16; KEY_LEN];
        let mut at = 0;
        let mut push = |v: u16| {
            k[at] = v;
            at += 1;
        };
        match self.kind {
            OrderKind::GradedReverseLex => {
                push(m.degree() as u16);
                for pos in (0..n).rev() {
                    push(255 - m.exp(self.var_at(pos)) as u16);
                }
            }
            OrderKind::GradedLex => {
                push(m.degree() as u16);
                for pos in 0..n {
                    push(m.exp(self.var_at(pos)) as u16);
                }
            }
            OrderKind::Elimination { block } => {
                push((0..block).map(|p| m.exp(self.var_at(p))).sum::<u32>() as u16);
                for pos in (0..block).rev() {
                    push(255 - m.exp(self.var_at(pos)) as u16);
                }
                push(m.degree() as u16);
                for pos in (block..n).rev() {
                    push(255 - m.exp(self.var_at(pos)) as u16);
                }
            }
        }
        OrderKey(k)
    }

    pub fn max<'a>(&self, a: &'a Monomial, b: &'a Monomial) -> &'a Monomial {
        if self.cmp(a, b) == Ordering::Less {
            b
        } else {
            a
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grevlex_prefers_fewer_trailing_variables() {
        let o = MonomialOrder::grevlex();
        // x1^5 vs x1*x2^2*x3^2 in 6 variables: the latter carries x3.
        let a = Monomial::from_slice(&[0, 5, 0, 0, 0, 0]);
        let b = Monomial::from_slice(&[0, 1, 2, 2, 0, 0]);
        assert_eq!(o.cmp(&a, &b), Ordering::Greater);
        assert_eq!(MonomialOrder::grlex().cmp(&a, &b), Ordering::Greater);
    }

    #[test]
    fn grevlex_textbook_example() {
        // x^2 y z^2 < x y^3 z  (x > y > z) in grevlex? Both degree 5; last
        // variable z: 2 vs 1, so the first is smaller.
        let o = MonomialOrder::grevlex();
        let a = Monomial::from_slice(&[2, 1, 2]);
        let b = Monomial::from_slice(&[1, 3, 1]);
        assert_eq!(o.cmp(&a, &b), Ordering::Less);
    }

    #[test]
    fn elimination_block_dominates() {
        let o = MonomialOrder::with_vars(OrderKind::Elimination { block: 1 }, vec![2, 0, 1]);
        let with_u = Monomial::from_slice(&[0, 0, 1]);
        let high = Monomial::from_slice(&[5, 5, 0]);
        assert_eq!(o.cmp(&with_u, &high), Ordering::Greater);
    }

    #[test]
    fn keys_agree_with_cmp() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        let orders = [
            MonomialOrder::grevlex(),
            MonomialOrder::grlex(),
            MonomialOrder::with_vars(OrderKind::GradedReverseLex, vec![3, 1, 0, 2]),
            MonomialOrder::with_vars(OrderKind::Elimination { block: 1 }, vec![3, 0, 1, 2]),
        ];
        for _ in 0..500 {
            let a: Vec<u32> = (0..4).map(|_| rng.gen_range(0..4)).collect();
            let b: Vec<u32> = (0..4).map(|_| rng.gen_range(0..4)).collect();
            let (a, b) = (Monomial::from_slice(&a), Monomial::from_slice(&b));
            for o in &orders {
                assert_eq!(o.key(&a).cmp(&o.key(&b)), o.cmp(&a, &b));
            }
        }
    }

    #[test]
    fn permuted_order() {
        let o = MonomialOrder::with_vars(OrderKind::GradedLex, vec![1, 0]);
        let a = Monomial::from_slice(&[1, 0]);
        let b = Monomial::from_slice(&[0, 1]);
        assert_eq!(o.cmp(&a, &b), Ordering::Less);
    }
}
