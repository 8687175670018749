use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;

/// Invariant factors of a finite abelian 2-group, stored nonincreasing.
///
/// Displayed in the ascending `(2,2,4)` style used for class groups; the
/// serialized form is the nonincreasing integer array.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize, Default)]
#[serde(transparent)]
pub struct AbelianType(Vec<u64>);

impl AbelianType {
    pub fn trivial() -> Self {
        Self(Vec::new())
    }

    /// Builds a type from invariant factors in any order. Factors equal to 1
    /// are dropped. Returns `None` unless every factor is a power of two.
    pub fn new(mut parts: Vec<u64>) -> Option<Self> {
        parts.retain(|&p| p != 1);
        if parts.iter().any(|p| !p.is_power_of_two()) {
            return None;
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Some(Self(parts))
    }

    /// Recovers the type from `counts[k] = #{x : x^(2^k) = 1}`, `k = 0, 1, ...`,
    /// with the last entry equal to the group order.
    pub fn from_power_counts(counts: &[u64]) -> Self {
        let logs: Vec<u32> = counts.iter().map(|c| c.trailing_zeros()).collect();
        // Number of cyclic factors of order >= 2^k is logs[k] - logs[k-1].
        let at_least: Vec<u32> = logs.windows(2).map(|w| w[1] - w[0]).collect();
        let mut parts = Vec::new();
        for (k, &cnt) in at_least.iter().enumerate() {
            let next = at_least.get(k + 1).copied().unwrap_or(0);
            for _ in 0..cnt - next {
                parts.push(1u64 << (k + 1));
            }
        }
        Self::new(parts).expect("powers of two")
    }

    pub fn parts(&self) -> &[u64] {
        &self.0
    }

    pub fn order(&self) -> u64 {
        self.0.iter().product()
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn exponent(&self) -> u64 {
        self.0.first().copied().unwrap_or(1)
    }
}

impl fmt::Display for AbelianType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().rev().map(u64::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl FromStr for AbelianType {
    type Err = String;

    /// Parses `(2,2,4)`, `2,2,4` or `()`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let inner = s.trim().trim_start_matches('(').trim_end_matches(')');
        if inner.trim().is_empty() {
            return Ok(Self::trivial());
        }
        let parts = inner
            .split(',')
            .map(|p| p.trim().parse::<u64>().map_err(|e| e.to_string()))
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(parts).ok_or_else(|| format!("not a 2-group type: {s}"))
    }
}

/// Shorthand used throughout the tests: `abelian![2, 2, 4]`.
#[macro_export]
macro_rules! abelian {
    ($($p:expr),* $(,)?) => {
        $crate::AbelianType::new(vec![$($p as u64),*]).expect("2-power parts")
    };
}
