//! Kuroda's class number formula in the five shapes needed here, and the
//! predictions it yields for the unramified quadratic extensions and the
//! genus field of a Type (4p) field.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum KurodaLayout {
    /// Biquadratic over Q, complex: `h = q/2 * h1 h2 h3`.
    V4OverQComplex,
    /// Biquadratic over Q, real: `h = q/4 * h1 h2 h3`.
    V4OverQReal,
    /// `V4`-extension of an imaginary quadratic base:
    /// `h = q/4 * h1 h2 h3 / h(k)^2`.
    V4OverK,
    /// Real triquadratic: `h = q/2^9 * prod of 7`.
    Deg8OverQReal,
    /// Complex quartic-multiquadratic of degree 16: `h = q/2^16 * prod of 15`.
    Deg16OverQComplex,
}

impl KurodaLayout {
    pub fn power(self) -> u32 {
        match self {
            Self::V4OverQComplex => 1,
            Self::V4OverQReal | Self::V4OverK => 2,
            Self::Deg8OverQReal => 9,
            Self::Deg16OverQComplex => 16,
        }
    }

    pub fn subfield_count(self) -> usize {
        match self {
            Self::V4OverQComplex | Self::V4OverQReal | Self::V4OverK => 3,
            Self::Deg8OverQReal => 7,
            Self::Deg16OverQComplex => 15,
        }
    }
}

/// Evaluates the formula exactly. `base_h2` is only read for
/// [`KurodaLayout::V4OverK`].
pub fn kuroda_h2(layout: KurodaLayout, subfield_h2: &[u64], q_index: u64, base_h2: u64) -> Result<u64> {
    if subfield_h2.len() != layout.subfield_count() {
        return Err(Error::InvalidParams(format!(
            "{layout:?} takes {} subfields, got {}",
            layout.subfield_count(),
            subfield_h2.len()
        )));
    }
    let all = subfield_h2.iter().chain([&q_index, &base_h2]);
    if let Some(bad) = all.clone().find(|v| !v.is_power_of_two()) {
        return Err(Error::InvalidParams(format!("{bad} is not a power of 2")));
    }
    let mut num: u128 = q_index as u128;
    for h in subfield_h2 {
        num = num
            .checked_mul(*h as u128)
            .ok_or_else(|| Error::InvalidParams("product overflows".into()))?;
    }
    let mut den: u128 = 1u128 << layout.power();
    if layout == KurodaLayout::V4OverK {
        den *= (base_h2 as u128) * (base_h2 as u128);
    }
    if !num.is_multiple_of(den) {
        return Err(Error::NonIntegralResult {
            numerator: num,
            denominator: den,
        });
    }
    Ok((num / den) as u64)
}

/// A quadratic field `Q(sqrt(r))` with `r` a product of a subset of
/// `{-1, p, q, q'}`, stored as a bitmask in that order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Radicand(pub u8);

impl Radicand {
    pub const MINUS_ONE: u8 = 1;
    pub const P: u8 = 2;
    pub const Q: u8 = 4;
    pub const QPRIME: u8 = 8;
    /// `-pqq'`, the base field `k`.
    pub const BASE: Radicand = Radicand(15);

    /// The third quadratic subfield of `Q(sqrt(self), sqrt(other))`.
    pub fn times(self, other: Radicand) -> Radicand {
        Radicand(self.0 ^ other.0)
    }

    /// The squarefree integer for concrete primes.
    pub fn value(self, p: i64, q: i64, qprime: i64) -> i64 {
        let mut v = 1;
        for (bit, x) in [(Self::MINUS_ONE, -1), (Self::P, p), (Self::Q, q), (Self::QPRIME, qprime)] {
            if self.0 & bit != 0 {
                v *= x;
            }
        }
        v
    }

    pub fn label(self) -> String {
        if self.0 == Self::MINUS_ONE {
            return "-1".into();
        }
        let mut s = String::new();
        if self.0 & Self::MINUS_ONE != 0 {
            s.push('-');
        }
        for (bit, name) in [(Self::P, "p"), (Self::Q, "q"), (Self::QPRIME, "q'")] {
            if self.0 & bit != 0 {
                s.push_str(name);
            }
        }
        s
    }

    /// All 15 nontrivial radicands.
    pub fn all() -> impl Iterator<Item = Radicand> {
        (1u8..16).map(Radicand)
    }

    pub fn is_real(self) -> bool {
        self.0 & Self::MINUS_ONE == 0
    }
}

/// 2-class number of `Q(sqrt(r))` for a Type (4p) field with
/// `h_2(k) = 2^(n+2)` and `h_2(-p) = 2^mu`.
pub fn quadratic_h2(r: Radicand, n: u32, mu: u32) -> u64 {
    const M: u8 = Radicand::MINUS_ONE;
    const P: u8 = Radicand::P;
    const Q: u8 = Radicand::Q;
    const QP: u8 = Radicand::QPRIME;
    match r.0 {
        x if x == M | P => 1 << mu,
        x if x == M | P | Q || x == M | P | QP => 2,
        x if x == M | Q | QP => 4,
        x if x == P | Q || x == P | QP || x == P | Q | QP => 2,
        x if x == M | P | Q | QP => 1 << (n + 2),
        _ => 1,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Table1Row {
    pub j: usize,
    /// `k(sqrt(r))`.
    pub radicand: Radicand,
    pub field: String,
    pub unit_group: String,
    pub norm_group: String,
    /// `2 (E_k : N E_{k_j})`.
    pub kappa_order: u64,
    pub h2: u64,
    /// Generators of the capitulation kernel as stated, not derived.
    pub kappa: String,
}

struct Table1Spec {
    radicand: u8,
    unit_group: &'static str,
    norm_group_order: u64,
    kappa: &'static str,
}

const TABLE1: [Table1Spec; 7] = [
    Table1Spec { radicand: Radicand::MINUS_ONE | Radicand::P, unit_group: "<-1, eps_qq'>", norm_group_order: 1, kappa: "<[p],[q]>" },
    Table1Spec { radicand: Radicand::P, unit_group: "<-1, eps_p>", norm_group_order: 2, kappa: "<[p]>" },
    Table1Spec { radicand: Radicand::MINUS_ONE, unit_group: "<i, eps_pqq'>", norm_group_order: 1, kappa: "<[2],[p]>" },
    Table1Spec { radicand: Radicand::MINUS_ONE | Radicand::Q, unit_group: "<zeta_q, eps_pq'>", norm_group_order: 1, kappa: "<[2],[q]>" },
    Table1Spec { radicand: Radicand::MINUS_ONE | Radicand::QPRIME, unit_group: "<zeta_q', eps_pq>", norm_group_order: 1, kappa: "<[2],[pq]>" },
    Table1Spec { radicand: Radicand::Q, unit_group: "<-1, eps_q>", norm_group_order: 1, kappa: "<[2],[q]>" },
    Table1Spec { radicand: Radicand::QPRIME, unit_group: "<-1, eps_q'>", norm_group_order: 1, kappa: "<[2],[pq]>" },
];

/// The seven unramified quadratic extensions `k_j = k(sqrt(r_j))` with their
/// predicted 2-class numbers. Each is a complex `V4` over Q with unit index 1.
pub fn table1_predictions(n: u32, mu: u32) -> Result<Vec<Table1Row>> {
    if n < 2 || mu < 2 {
        return Err(Error::InvalidParams(format!("need n, mu >= 2, got ({n}, {mu})")));
    }
    TABLE1
        .iter()
        .enumerate()
        .map(|(i, spec)| {
            let r = Radicand(spec.radicand);
            let subs = [Radicand::BASE, r, r.times(Radicand::BASE)];
            let h: Vec<u64> = subs.iter().map(|s| quadratic_h2(*s, n, mu)).collect();
            let h2 = kuroda_h2(KurodaLayout::V4OverQComplex, &h, 1, 1)?;
            // E_k = {±1}
            let kappa_order = 2 * (2 / spec.norm_group_order);
            Ok(Table1Row {
                j: i + 1,
                radicand: r,
                field: format!("k(sqrt({}))", r.label()),
                unit_group: spec.unit_group.to_string(),
                norm_group: if spec.norm_group_order == 1 { "1".into() } else { "<-1>".into() },
                kappa_order,
                h2,
                kappa: spec.kappa.to_string(),
            })
        })
        .collect()
}

/// Unit index of the maximal real subfield `Q(sqrt p, sqrt q, sqrt q')`.
pub const Q_INDEX_REAL_DEG8: u64 = 1 << 6;
/// Hasse unit index of the genus field over its real subfield.
pub const HASSE_INDEX_GENUS: u64 = 2;

/// `h_2` of the maximal real subfield of the genus field.
pub fn genus_real_subfield_h2(n: u32, mu: u32) -> Result<u64> {
    let h: Vec<u64> = Radicand::all()
        .filter(|r| r.is_real())
        .map(|r| quadratic_h2(r, n, mu))
        .collect();
    kuroda_h2(KurodaLayout::Deg8OverQReal, &h, Q_INDEX_REAL_DEG8, 1)
}

/// `h_2(k_gen)` through the degree-16 formula.
pub fn genus_field_h2(n: u32, mu: u32) -> Result<u64> {
    if n < 2 || mu < 2 {
        return Err(Error::InvalidParams(format!("need n, mu >= 2, got ({n}, {mu})")));
    }
    let h: Vec<u64> = Radicand::all().map(|r| quadratic_h2(r, n, mu)).collect();
    kuroda_h2(
        KurodaLayout::Deg16OverQComplex,
        &h,
        HASSE_INDEX_GENUS * Q_INDEX_REAL_DEG8,
        1,
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kuroda_examples() {
        assert_eq!(kuroda_h2(KurodaLayout::V4OverQComplex, &[16, 4, 1], 1, 1).unwrap(), 32);
        assert_eq!(kuroda_h2(KurodaLayout::V4OverQReal, &[1, 1, 1], 4, 1).unwrap(), 1);
        assert_eq!(
            kuroda_h2(KurodaLayout::Deg8OverQReal, &[1, 1, 1, 2, 2, 1, 2], 64, 1).unwrap(),
            1
        );
        assert!(matches!(
            kuroda_h2(KurodaLayout::Deg8OverQReal, &[1; 7], 64, 1),
            Err(Error::NonIntegralResult { .. })
        ));
        assert!(kuroda_h2(KurodaLayout::V4OverQReal, &[1, 1], 4, 1).is_err());
        assert!(kuroda_h2(KurodaLayout::V4OverQReal, &[1, 3, 1], 4, 1).is_err());
    }

    #[test]
    fn v4_over_k_divides_by_base() {
        // 4 * 32 * 16 * 16 / (4 * 16^2) = 32
        assert_eq!(kuroda_h2(KurodaLayout::V4OverK, &[32, 16, 16], 4, 16).unwrap(), 32);
    }

    #[test]
    fn table1_n2_mu2() {
        let rows = table1_predictions(2, 2).unwrap();
        let h: Vec<u64> = rows.iter().map(|r| r.h2).collect();
        assert_eq!(h, vec![32, 32, 16, 16, 16, 16, 16]);
        let k: Vec<u64> = rows.iter().map(|r| r.kappa_order).collect();
        assert_eq!(k, vec![4, 2, 4, 4, 4, 4, 4]);
        assert_eq!(rows[0].field, "k(sqrt(-p))");
        assert_eq!(rows[4].field, "k(sqrt(-q'))");
    }

    #[test]
    fn table1_closed_form() {
        for n in 2..8 {
            for mu in 2..8 {
                let rows = table1_predictions(n, mu).unwrap();
                assert_eq!(rows[0].h2, 1 << (n + 1 + mu));
                assert_eq!(rows[1].h2, 1 << (n + 3));
                assert!(rows[2..].iter().all(|r| r.h2 == 1 << (n + 2)));
            }
        }
        assert!(table1_predictions(1, 2).is_err());
    }

    #[test]
    fn genus_field() {
        assert_eq!(genus_real_subfield_h2(2, 2).unwrap(), 1);
        assert_eq!(genus_field_h2(2, 2).unwrap(), 16);
        assert_eq!(genus_field_h2(3, 2).unwrap(), 32);
        assert_eq!(genus_field_h2(2, 3).unwrap(), 32);
        for n in 2..10 {
            for mu in 2..10 {
                assert_eq!(genus_field_h2(n, mu).unwrap(), 1 << (n + mu));
            }
        }
    }

    #[test]
    fn radicand_labels() {
        assert_eq!(Radicand::BASE.label(), "-pqq'");
        assert_eq!(Radicand(Radicand::P).times(Radicand::BASE).label(), "-qq'");
        assert_eq!(Radicand::BASE.value(17, 3, 11), -561);
    }
}
