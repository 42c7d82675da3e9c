use serde::Serialize;

use super::gram::{CriticalValue, GramReport};
use crate::algebra::rational::format_rational;
use crate::algebra::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING-KEBAB-CASE")]
pub enum Verdict {
    Excess,
    NoExcess,
}

#[derive(Clone, Debug, Serialize)]
pub struct ExcessSample {
    #[serde(serialize_with = "serialize_rational")]
    pub nu: Rational,
    pub rank: usize,
    /// Left kernel dimension, `rows - rank(nu)`.
    pub excess: usize,
    /// `codim (I_1 ∩ I_2)_d - excess`: codimension of the degree `d` piece of
    /// the ideal of the combined class.
    pub combined_codim: u64,
    pub verdict: Verdict,
}

fn serialize_rational<S: serde::Serializer>(q: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&format_rational(q))
}

#[derive(Clone, Debug, Serialize)]
pub struct ExcessReport {
    /// `h_{I_1 ∩ I_2}(d)`.
    pub joint_codim: u64,
    pub rows: usize,
    pub generic_rank: usize,
    /// Left kernel dimension over `Q(nu)`.
    pub generic_excess: usize,
    pub samples: Vec<ExcessSample>,
    pub critical: Vec<CriticalValue>,
}

pub fn excess_report(gram: &GramReport, joint_codim: u64, nus: &[Rational]) -> ExcessReport {
    let rows = gram.nrows();
    let samples = nus
        .iter()
        .map(|nu| {
            let rank = gram.rank_at(nu);
            let excess = rows - rank;
            ExcessSample {
                nu: nu.clone(),
                rank,
                excess,
                combined_codim: joint_codim - excess as u64,
                verdict: if excess > 0 { Verdict::Excess } else { Verdict::NoExcess },
            }
        })
        .collect();
    ExcessReport {
        joint_codim,
        rows,
        generic_rank: gram.generic_rank,
        generic_excess: rows - gram.generic_rank,
        samples,
        critical: gram.critical.clone(),
    }
}
