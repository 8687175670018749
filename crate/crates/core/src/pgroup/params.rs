use serde::{Deserialize, Serialize};
use std::fmt;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Family {
    /// `Γ_{n,m,ε}`.
    Gamma,
    /// `Γ_n^{(4(r))}`: `a1^2 = a2^2 = c12`, `a3^{2^n} = c13`, all
    /// commutators central of order 2.
    Gamma4r,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GroupParams {
    pub n: u32,
    pub m: u32,
    pub eps: u8,
    pub family: Family,
}

/// Largest `n + m` accepted; keeps group orders at most `2^16`.
pub const MAX_LOG_ORDER: u32 = 16;

impl GroupParams {
    pub fn gamma(n: u32, m: u32, eps: u8) -> Result<Self> {
        Self {
            n,
            m,
            eps,
            family: Family::Gamma,
        }
        .validated()
    }

    pub fn gamma4r(n: u32) -> Result<Self> {
        Self {
            n,
            m: 1,
            eps: 1,
            family: Family::Gamma4r,
        }
        .validated()
    }

    pub fn validated(self) -> Result<Self> {
        if self.n < 1 || self.m < 1 {
            return Err(Error::InvalidParams(format!("need n, m >= 1, got {self}")));
        }
        if self.eps > 1 {
            return Err(Error::InvalidParams(format!("eps must be 0 or 1, got {}", self.eps)));
        }
        if self.family == Family::Gamma4r && (self.m != 1 || self.eps != 1) {
            return Err(Error::InvalidParams(format!("{self} requires m = 1 and eps = 1")));
        }
        if self.log_order() > MAX_LOG_ORDER {
            return Err(Error::InvalidParams(format!(
                "order 2^{} exceeds 2^{MAX_LOG_ORDER}",
                self.log_order()
            )));
        }
        Ok(self)
    }

    pub fn log_order(&self) -> u32 {
        match self.family {
            Family::Gamma => self.n + self.m + 3,
            Family::Gamma4r => self.n + 4,
        }
    }

    pub fn order(&self) -> usize {
        1 << self.log_order()
    }
}

impl fmt::Display for GroupParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.family {
            Family::Gamma => write!(f, "Gamma_{{{},{},{}}}", self.n, self.m, self.eps),
            Family::Gamma4r => write!(f, "Gamma4r_{}", self.n),
        }
    }
}

/// Deliberate corruptions of the rewrite rules, used to show that the
/// checks built on the engine can fail.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize, Default)]
pub enum Mutation {
    #[default]
    None,
    /// `c13` commutes with `a3` instead of being inverted by it.
    A3CentralizesC13,
    /// `a3 a1 = a1 a3 c13` instead of `a1 a3 c13^{-1}`.
    FlipA3A1,
}
