//! Real quadratic side: reduced indefinite forms, their cycles under `rho`,
//! narrow and wide class numbers, and fundamental units by continued
//! fractions.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use std::collections::HashSet;

use super::form::{compose_unreduced, reduce_indefinite, rho, QuadForm};
use crate::arith::{is_fundamental, isqrt, two_power_part};
use crate::error::{Error, Result};

/// Fundamental solution of `x^2 - d y^2 = ±4`, i.e. the unit
/// `(x + y sqrt(d)) / 2` of the maximal order of discriminant `d`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Unit {
    pub x: BigInt,
    pub y: BigInt,
    /// `±1`.
    pub norm: i32,
    /// Length of the continued-fraction period that produced it.
    pub period: usize,
}

impl Unit {
    /// `x^2 - d y^2 == 4 * norm`.
    pub fn satisfies(&self, d: i64) -> bool {
        let lhs = &self.x * &self.x - BigInt::from(d) * &self.y * &self.y;
        lhs == BigInt::from(4 * self.norm)
    }
}

/// All primitive reduced indefinite forms of discriminant `d > 0`.
pub fn reduced_indefinite_forms(d: i64) -> Vec<QuadForm> {
    let s = isqrt(d as u128) as i64;
    let mut out = Vec::new();
    let mut b = if (s - d).rem_euclid(2) == 0 { s } else { s - 1 };
    while b > 0 {
        let n = (d - b * b) / 4; // = -a c > 0
        let mut a = 1;
        while a <= n {
            if n % a == 0 {
                for signed in [a, -a] {
                    let f = QuadForm::new(signed, b, -n / signed);
                    if f.is_reduced_indefinite() && f.is_primitive() {
                        out.push(f);
                    }
                }
            }
            a += 1;
            // |a| is bounded by (s + b) / 2
            if 2 * a > s + b {
                break;
            }
        }
        b -= 2;
    }
    out
}

/// The `rho`-cycle through a reduced form.
pub fn cycle_of(f: QuadForm) -> Vec<QuadForm> {
    let start = reduce_indefinite(f);
    let mut out = vec![start];
    let mut g = rho(start);
    while g != start {
        out.push(g);
        g = rho(g);
    }
    out
}

/// Partition of the reduced forms into cycles; one cycle per narrow class.
/// The principal cycle comes first.
pub fn narrow_cycles(d: i64) -> Vec<Vec<QuadForm>> {
    let principal = QuadForm::principal(d);
    let mut forms = reduced_indefinite_forms(d);
    forms.sort_unstable();
    let mut seen = HashSet::new();
    let mut cycles = vec![cycle_of(principal)];
    seen.extend(cycles[0].iter().copied());
    for f in forms {
        if seen.contains(&f) {
            continue;
        }
        let c = cycle_of(f);
        seen.extend(c.iter().copied());
        cycles.push(c);
    }
    cycles
}

pub fn narrow_class_number(d: i64) -> u64 {
    narrow_cycles(d).len() as u64
}

pub(crate) fn is_principal_indefinite(f: &QuadForm, narrow: bool) -> bool {
    let d = f.disc();
    let principal = QuadForm::principal(d);
    let r = reduce_indefinite(*f);
    let cycle = cycle_of(principal);
    if cycle.contains(&r) {
        return true;
    }
    if narrow {
        return false;
    }
    let neg = QuadForm::new(-principal.a, principal.b, -principal.c);
    cycle_of(neg).contains(&r)
}

/// Equivalent form with positive leading coefficient.
fn positive_lead(f: QuadForm) -> QuadForm {
    if f.a > 0 {
        return f;
    }
    let r = reduce_indefinite(f);
    if r.a > 0 {
        r
    } else {
        rho(r)
    }
}

/// Composition of indefinite forms (narrow classes), reduced.
pub fn compose_indefinite(f: QuadForm, g: QuadForm) -> QuadForm {
    assert_eq!(f.disc(), g.disc(), "discriminant mismatch");
    reduce_indefinite(compose_unreduced(positive_lead(f), positive_lead(g)))
}

/// Fundamental unit of the maximal order of discriminant `d > 0`, from the
/// purely periodic expansion of `(b + sqrt(d)) / 2` where `b` is the largest
/// integer below `sqrt(d)` with `b ≡ d mod 2`.
pub fn fundamental_unit(d: i64) -> Result<Unit> {
    if d <= 0 || !is_fundamental(d) {
        return Err(Error::NotFundamental(d));
    }
    let s = isqrt(d as u128) as i64;
    let b = if (s - d).rem_euclid(2) == 0 { s } else { s - 1 };
    let (mut p, mut q) = (b, 2i64);
    // q_{k-1}, q_{k-2} of the convergents
    let (mut q_prev, mut q_prev2) = (BigInt::one(), BigInt::zero());
    let mut period = 0usize;
    loop {
        let a = (p + s) / q;
        p = a * q - p;
        q = (d - p * p) / q;
        period += 1;
        if q == 2 {
            break;
        }
        // advance convergent denominators with the next partial quotient
        let a_next = (p + s) / q;
        let q_next = BigInt::from(a_next) * &q_prev + &q_prev2;
        q_prev2 = std::mem::replace(&mut q_prev, q_next);
    }
    let x = &q_prev * BigInt::from(b) + BigInt::from(2) * &q_prev2;
    let norm = if period.is_multiple_of(2) { 1 } else { -1 };
    Ok(Unit {
        x,
        y: q_prev,
        norm,
        period,
    })
}

/// 2-part of the ordinary (wide) class number of discriminant `d > 0`.
pub fn wide_h2(d: i64) -> Result<u64> {
    wide_h2_with_bound(d, super::classgroup::DEFAULT_CLASS_BOUND)
}

pub fn wide_h2_with_bound(d: i64, bound: u64) -> Result<u64> {
    if d <= 0 || !is_fundamental(d) {
        return Err(Error::NotFundamental(d));
    }
    if d as u64 > bound {
        return Err(Error::BoundExceeded {
            value: d as u128,
            bound: bound as u128,
        });
    }
    let narrow = narrow_class_number(d);
    let unit = fundamental_unit(d)?;
    let wide = if unit.norm == 1 { narrow / 2 } else { narrow };
    Ok(two_power_part(wide))
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Smallest `y >= 1` with `d y^2 ± 4` a perfect square.
    fn brute_unit(d: i64) -> (i64, i64, i32) {
        for y in 1..1_000_000i64 {
            for (sign, norm) in [(-4, -1), (4, 1)] {
                let t = d * y * y + sign;
                if t > 0 && crate::arith::is_square(t) {
                    return (isqrt(t as u128) as i64, y, norm);
                }
            }
        }
        unreachable!("unit too large for brute force")
    }

    #[test]
    fn unit_examples() {
        let u = fundamental_unit(17).unwrap();
        assert_eq!((u.x.clone(), u.y.clone(), u.norm), (8.into(), 2.into(), -1));
        let u = fundamental_unit(8).unwrap();
        assert_eq!((u.x.clone(), u.y.clone(), u.norm), (2.into(), 1.into(), -1));
        // 50 + 7 sqrt(51) = (100 + 7 sqrt(204)) / 2
        let u = fundamental_unit(204).unwrap();
        assert_eq!((u.x.clone(), u.y.clone(), u.norm), (100.into(), 7.into(), 1));
        assert!(u.satisfies(204));
    }

    #[test]
    fn unit_matches_brute_force() {
        for d in (5..240).filter(|&d| is_fundamental(d)) {
            let u = fundamental_unit(d).unwrap();
            let (x, y, norm) = brute_unit(d);
            assert_eq!(u.x, BigInt::from(x), "d = {d}");
            assert_eq!(u.y, BigInt::from(y), "d = {d}");
            assert_eq!(u.norm, norm, "d = {d}");
        }
    }

    #[test]
    fn units_satisfy_pell() {
        for d in (5..10_000).filter(|&d| is_fundamental(d)) {
            let u = fundamental_unit(d).unwrap();
            assert!(u.satisfies(d), "d = {d}");
            assert_eq!(u.norm, if u.period.is_multiple_of(2) { 1 } else { -1 });
        }
    }

    #[test]
    fn narrow_class_numbers() {
        // h+(12) = 2, h(12) = 1; h+(5) = 1; h+(60) = 4 (narrow Cl(60) = (2,2))
        assert_eq!(narrow_class_number(5), 1);
        assert_eq!(narrow_class_number(12), 2);
        assert_eq!(narrow_class_number(60), 4);
        assert_eq!(wide_h2(12).unwrap(), 1);
        assert_eq!(wide_h2(60).unwrap(), 2);
    }

    #[test]
    fn wide_h2_examples() {
        assert_eq!(wide_h2(204).unwrap(), 2);
        assert_eq!(wide_h2(8).unwrap(), 1);
        assert_eq!(wide_h2(561).unwrap(), 2);
        assert!(matches!(wide_h2(-4), Err(Error::NotFundamental(-4))));
    }

    #[test]
    fn cycles_partition_reduced_forms() {
        for d in [5i64, 13, 21, 60, 204, 561, 1001] {
            let forms = reduced_indefinite_forms(d);
            let total: usize = narrow_cycles(d).iter().map(Vec::len).sum();
            assert_eq!(total, forms.len(), "d = {d}");
        }
    }
}
