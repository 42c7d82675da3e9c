use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::algebra::rational::{format_rational, int, parse_rational, rat};
use crate::algebra::{MonomialOrder, Rational};
use crate::error::{Error, Result};
use crate::hodge::check_degree_range;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    /// Curves on surfaces: `f = x0 x1 g + x3 h`, lines `V(x0,x3)`, `V(x1,x3)`.
    DanK1,
    /// The family `X_{k,d}` with two `k`-planes meeting in codimension one.
    XKd,
    LowdegD4K3,
    LowdegD5K3,
    LowdegD3K5,
    /// User supplied hypersurface and planes.
    Custom,
}

impl Family {
    pub const ALL: [Family; 6] = [
        Family::DanK1,
        Family::XKd,
        Family::LowdegD4K3,
        Family::LowdegD5K3,
        Family::LowdegD3K5,
        Family::Custom,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::DanK1 => "dan-k1",
            Family::XKd => "x-kd",
            Family::LowdegD4K3 => "lowdeg-d4k3",
            Family::LowdegD5K3 => "lowdeg-d5k3",
            Family::LowdegD3K5 => "lowdeg-d3k5",
            Family::Custom => "custom",
        }
    }

    /// `(k, d)` for the families with fixed parameters.
    pub fn fixed_parameters(self) -> Option<(usize, u32)> {
        match self {
            Family::LowdegD4K3 => Some((3, 4)),
            Family::LowdegD5K3 => Some((3, 5)),
            Family::LowdegD3K5 => Some((5, 3)),
            _ => None,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| Error::Precondition(format!("unknown family '{s}'")))
    }
}

impl Serialize for Family {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum OrderChoice {
    Grevlex,
    Grlex,
}

impl OrderChoice {
    pub fn order(self) -> MonomialOrder {
        match self {
            OrderChoice::Grevlex => MonomialOrder::grevlex(),
            OrderChoice::Grlex => MonomialOrder::grlex(),
        }
    }
}

impl FromStr for OrderChoice {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "grevlex" => Ok(OrderChoice::Grevlex),
            "grlex" => Ok(OrderChoice::Grlex),
            _ => Err(Error::Precondition(format!("unknown monomial order '{s}'"))),
        }
    }
}

/// Hypersurface and planes for the custom family, in the polynomial grammar.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CustomInput {
    pub f: String,
    pub plane1: String,
    pub plane2: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct ScenarioConfig {
    pub family: Family,
    pub k: usize,
    pub d: u32,
    #[serde(serialize_with = "serialize_rationals")]
    pub nu_samples: Vec<Rational>,
    pub seed: u64,
    pub oracle_checks: bool,
    pub order: OrderChoice,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub custom: Option<CustomInput>,
}

fn serialize_rationals<S: Serializer>(v: &[Rational], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(format_rational))
}

/// `{-2, -1, 0, 1/3, 1, 2, 5}`.
pub fn default_nu_samples() -> Vec<Rational> {
    vec![int(-2), int(-1), int(0), rat(1, 3), int(1), int(2), int(5)]
}

/// Comma separated rationals such as `-1,0,1/3`.
pub fn parse_nu_list(s: &str) -> Result<Vec<Rational>> {
    s.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| parse_rational(t).map_err(Error::from))
        .collect()
}

impl ScenarioConfig {
    pub fn new(family: Family, k: usize, d: u32) -> Self {
        ScenarioConfig {
            family,
            k,
            d,
            nu_samples: default_nu_samples(),
            seed: 1,
            oracle_checks: false,
            order: OrderChoice::Grevlex,
            custom: None,
        }
    }

    /// A family with fixed `(k, d)`.
    pub fn fixed(family: Family) -> Self {
        let (k, d) = family.fixed_parameters().expect("family with fixed parameters");
        Self::new(family, k, d)
    }

    pub fn custom(input: CustomInput) -> Self {
        let mut c = Self::new(Family::Custom, 0, 0);
        c.custom = Some(input);
        c
    }

    pub fn with_nus(mut self, nus: Vec<Rational>) -> Self {
        self.nu_samples = nus;
        self
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    pub fn with_oracle(mut self, on: bool) -> Self {
        self.oracle_checks = on;
        self
    }

    pub fn with_order(mut self, order: OrderChoice) -> Self {
        self.order = order;
        self
    }

    /// Checks the family's hypotheses on `(k, d)`.
    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::Precondition(msg));
        match self.family {
            Family::DanK1 => {
                if self.k != 1 || self.d < 5 {
                    return bad(format!("dan-k1 needs k = 1 and d >= 5, got k = {}, d = {}", self.k, self.d));
                }
            }
            Family::XKd => {
                if self.k < 2 || self.d < 6 {
                    return bad(format!("x-kd needs k >= 2 and d >= 6, got k = {}, d = {}", self.k, self.d));
                }
                if 2 * self.k + 2 > crate::algebra::MAX_VARS {
                    return bad(format!("k = {} needs more than {} variables", self.k, crate::algebra::MAX_VARS));
                }
            }
            Family::LowdegD4K3 | Family::LowdegD5K3 | Family::LowdegD3K5 => {
                let (k, d) = self.family.fixed_parameters().expect("fixed");
                if (self.k, self.d) != (k, d) {
                    return bad(format!("{} has k = {k}, d = {d}; got k = {}, d = {}", self.family, self.k, self.d));
                }
            }
            Family::Custom => {
                if self.custom.is_none() {
                    return bad("the custom family needs a hypersurface and two planes".into());
                }
                return Ok(());
            }
        }
        check_degree_range(self.k, self.d)
    }
}
