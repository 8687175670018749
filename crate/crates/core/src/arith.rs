//! Exact integer utilities: Kronecker symbols, trial-division factoring,
//! primality and the decomposition of fundamental discriminants into prime
//! discriminants.

use serde::{Deserialize, Serialize};
use std::fmt;

use crate::error::{Error, Result};

/// Default ceiling for [`factor`]: trial division is only meant for the
/// small discriminants this crate works with.
pub const DEFAULT_FACTOR_BOUND: u64 = 1 << 40;

/// Kronecker symbol `(a/n)` over the full domain, including `n <= 0`.
pub fn kronecker(a: i64, n: i64) -> i32 {
    if n == 0 {
        return if a == 1 || a == -1 { 1 } else { 0 };
    }
    let mut result = 1i32;
    let mut n = n as i128;
    let a = a as i128;
    if n < 0 {
        n = -n;
        if a < 0 {
            result = -result;
        }
    }
    let twos = n.trailing_zeros();
    if twos > 0 {
        if a % 2 == 0 {
            return 0;
        }
        if twos % 2 == 1 && matches!(a.rem_euclid(8), 3 | 5) {
            result = -result;
        }
        n >>= twos;
    }
    result * jacobi(a.rem_euclid(n), n)
}

/// Jacobi symbol for odd positive `n` and `0 <= a < n`.
fn jacobi(mut a: i128, mut n: i128) -> i32 {
    debug_assert!(n > 0 && n % 2 == 1);
    let mut result = 1;
    while a != 0 {
        while a % 2 == 0 {
            a /= 2;
            if matches!(n % 8, 3 | 5) {
                result = -result;
            }
        }
        std::mem::swap(&mut a, &mut n);
        if a % 4 == 3 && n % 4 == 3 {
            result = -result;
        }
        a %= n;
    }
    if n == 1 {
        result
    } else {
        0
    }
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Deterministic Miller-Rabin for all `u64`.
pub fn is_prime(n: u64) -> bool {
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    if n < 2 {
        return false;
    }
    for &p in &BASES {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for &a in &BASES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Prime factors of `n` with multiplicity, ascending.
pub fn factor(n: u64) -> Result<Vec<u64>> {
    factor_bounded(n, DEFAULT_FACTOR_BOUND)
}

pub fn factor_bounded(mut n: u64, bound: u64) -> Result<Vec<u64>> {
    if n > bound {
        return Err(Error::BoundExceeded {
            value: n as u128,
            bound: bound as u128,
        });
    }
    let mut out = Vec::new();
    while n.is_multiple_of(2) && n > 0 {
        out.push(2);
        n /= 2;
    }
    let mut p = 3u64;
    while p * p <= n {
        if is_prime(n) {
            break;
        }
        while n.is_multiple_of(p) {
            out.push(p);
            n /= p;
        }
        p += 2;
    }
    if n > 1 {
        out.push(n);
    }
    Ok(out)
}

pub fn is_squarefree(n: u64) -> bool {
    match factor(n) {
        Ok(f) => f.windows(2).all(|w| w[0] != w[1]),
        Err(_) => false,
    }
}

/// `d ≡ 1 mod 4` squarefree, or `d ≡ 8, 12 mod 16` with `d/4` squarefree.
pub fn is_fundamental(d: i64) -> bool {
    if d == 0 || d == 1 {
        return false;
    }
    match d.rem_euclid(16) {
        8 | 12 => is_squarefree((d / 4).unsigned_abs()),
        r if r % 4 == 1 => is_squarefree(d.unsigned_abs()),
        _ => false,
    }
}

/// Largest `s` with `s*s <= n`.
pub fn isqrt(n: u128) -> u128 {
    if n < 2 {
        return n;
    }
    let mut x = (n as f64).sqrt() as u128;
    while x * x > n {
        x -= 1;
    }
    while (x + 1) * (x + 1) <= n {
        x += 1;
    }
    x
}

pub fn is_square(n: i64) -> bool {
    n >= 0 && {
        let s = isqrt(n as u128);
        s * s == n as u128
    }
}

/// A fundamental discriminant divisible by exactly one prime: `-4`, `±8`,
/// or `p* = (-1)^((p-1)/2) p` for an odd prime `p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct PrimeDiscriminant(i64);

impl PrimeDiscriminant {
    pub fn new(value: i64) -> Option<Self> {
        Self::is_prime_discriminant(value).then_some(Self(value))
    }

    pub fn is_prime_discriminant(value: i64) -> bool {
        match value {
            -4 | 8 | -8 => true,
            v => {
                let p = v.unsigned_abs();
                p % 2 == 1 && v.rem_euclid(4) == 1 && is_prime(p)
            }
        }
    }

    /// `p*` for an odd prime.
    pub fn from_odd_prime(p: u64) -> Self {
        let p = p as i64;
        Self(if p % 4 == 1 { p } else { -p })
    }

    pub fn value(self) -> i64 {
        self.0
    }

    pub fn prime(self) -> u64 {
        match self.0 {
            -4 | 8 | -8 => 2,
            v => v.unsigned_abs(),
        }
    }
}

impl fmt::Display for PrimeDiscriminant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// The unique factorization of a fundamental discriminant into prime
/// discriminants, ordered by the underlying prime.
pub fn prime_discriminants(d: i64) -> Result<Vec<PrimeDiscriminant>> {
    if !is_fundamental(d) {
        return Err(Error::NotFundamental(d));
    }
    let mut primes = factor(d.unsigned_abs())?;
    primes.dedup();
    let mut out = Vec::with_capacity(primes.len());
    let mut odd_product = 1i64;
    for &p in primes.iter().filter(|&&p| p != 2) {
        let pd = PrimeDiscriminant::from_odd_prime(p);
        odd_product *= pd.value();
        out.push(pd);
    }
    if d % 2 == 0 {
        let two = d / odd_product;
        let pd = PrimeDiscriminant::new(two).ok_or(Error::NotFundamental(d))?;
        out.insert(0, pd);
    }
    Ok(out)
}

/// Fundamental discriminant of `Q(sqrt(x))` for a squarefree `x != 0, 1`.
pub fn field_discriminant(x: i64) -> i64 {
    if x.rem_euclid(4) == 1 {
        x
    } else {
        4 * x
    }
}

/// Exponent `k` with `2^k == v`, if `v` is a power of two.
pub fn log2_exact(v: u64) -> Option<u32> {
    v.is_power_of_two().then(|| v.trailing_zeros())
}

/// Largest power of two dividing `v` (`v > 0`).
pub fn two_power_part(v: u64) -> u64 {
    1 << v.trailing_zeros()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn euler(a: i64, p: i64) -> i32 {
        let r = pow_mod(a.rem_euclid(p) as u64, ((p - 1) / 2) as u64, p as u64);
        match r {
            0 => 0,
            1 => 1,
            _ => -1,
        }
    }

    #[test]
    fn kronecker_examples() {
        assert_eq!(kronecker(17, 3), -1);
        for a in [-7, 0, 5, 1234] {
            assert_eq!(kronecker(a, 1), 1);
        }
        // -2244 = -4 * 17 * 3 * 11
        assert_eq!(kronecker(17, 3), -1);
        assert_eq!(kronecker(17, 11), -1);
        assert_eq!(kronecker(-3, 11), -1);
    }

    #[test]
    fn kronecker_extended_domain() {
        assert_eq!(kronecker(1, 0), 1);
        assert_eq!(kronecker(2, 0), 0);
        assert_eq!(kronecker(-5, -1), -1);
        assert_eq!(kronecker(5, -1), 1);
        assert_eq!(kronecker(3, 2), -1);
        assert_eq!(kronecker(7, 2), 1);
        assert_eq!(kronecker(4, 2), 0);
        assert_eq!(kronecker(-3, 8), -1);
    }

    #[test]
    fn kronecker_matches_euler_criterion() {
        for p in (3..1000).filter(|&p| is_prime(p as u64)) {
            for a in 0..p {
                assert_eq!(kronecker(a, p), euler(a, p), "({a}/{p})");
            }
        }
    }

    #[test]
    fn factor_examples() {
        assert_eq!(factor(2244).unwrap(), vec![2, 2, 3, 11, 17]);
        assert!(factor(1).unwrap().is_empty());
        assert_eq!(factor(1886244 / 4).unwrap(), vec![3, 19, 8273]);
        assert!(matches!(
            factor_bounded(1000, 999),
            Err(Error::BoundExceeded { .. })
        ));
    }

    #[test]
    fn primality() {
        let small: Vec<u64> = (0..60).filter(|&n| is_prime(n)).collect();
        assert_eq!(
            small,
            vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59]
        );
        assert!(is_prime(8273));
        assert!(!is_prime(3215031751)); // strong pseudoprime to bases 2,3,5,7
        assert!(is_prime((1 << 61) - 1));
    }

    #[test]
    fn fundamental_discriminants() {
        for d in [-3, -4, -7, -8, 5, 8, 12, -68, -2244, 204, 561] {
            assert!(is_fundamental(d), "{d}");
        }
        for d in [0, 1, -1, -12 * 4, 9, -16, 16, -75, 28 * 4] {
            assert!(!is_fundamental(d), "{d}");
        }
    }

    #[test]
    fn prime_discriminant_examples() {
        let v = |d| -> Vec<i64> {
            prime_discriminants(d)
                .unwrap()
                .into_iter()
                .map(PrimeDiscriminant::value)
                .collect()
        };
        assert_eq!(v(-2244), vec![-4, -3, -11, 17]);
        assert_eq!(v(17), vec![17]);
        assert_eq!(v(-3), vec![-3]);
        assert_eq!(v(-8 * 3), vec![8, -3]);
        assert_eq!(v(-8 * 5), vec![-8, 5]);
        assert_eq!(v(204), vec![-4, -3, 17]);
        assert!(matches!(prime_discriminants(-16), Err(Error::NotFundamental(-16))));
    }

    #[test]
    fn field_discriminants() {
        assert_eq!(field_discriminant(-1), -4);
        assert_eq!(field_discriminant(-17), -68);
        assert_eq!(field_discriminant(17), 17);
        assert_eq!(field_discriminant(51), 204);
        assert_eq!(field_discriminant(-51), -51);
    }
}
