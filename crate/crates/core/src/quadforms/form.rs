use serde::{Deserialize, Serialize};
use std::fmt;

use crate::arith::{is_square, isqrt, kronecker};
use crate::error::{Error, Result};

/// Binary quadratic form `a x^2 + b xy + c y^2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct QuadForm {
    pub a: i64,
    pub b: i64,
    pub c: i64,
}

impl fmt::Display for QuadForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.a, self.b, self.c)
    }
}

fn gcd(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// `(g, u, v)` with `u a + v b = g = gcd(a, b) >= 0`.
fn xgcd(a: i128, b: i128) -> (i128, i128, i128) {
    let (mut r0, mut r1) = (a, b);
    let (mut s0, mut s1) = (1i128, 0i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0.div_euclid(r1);
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    if r0 < 0 {
        (-r0, -s0, -t0)
    } else {
        (r0, s0, t0)
    }
}

fn narrow(v: i128) -> i64 {
    i64::try_from(v).expect("form coefficient overflow")
}

impl QuadForm {
    pub const fn new(a: i64, b: i64, c: i64) -> Self {
        Self { a, b, c }
    }

    pub fn disc(&self) -> i64 {
        narrow(self.b as i128 * self.b as i128 - 4 * self.a as i128 * self.c as i128)
    }

    /// Builds `(a, b, (b^2 - d) / 4a)`, if integral.
    pub fn from_ab(d: i64, a: i64, b: i64) -> Option<Self> {
        let num = b as i128 * b as i128 - d as i128;
        let den = 4 * a as i128;
        (den != 0 && num % den == 0).then(|| Self::new(a, b, narrow(num / den)))
    }

    /// The principal form of discriminant `d`.
    pub fn principal(d: i64) -> Self {
        if d < 0 {
            let b = d.rem_euclid(2);
            Self::from_ab(d, 1, b).expect("principal form")
        } else {
            principal_reduced_indefinite(d)
        }
    }

    pub fn is_primitive(&self) -> bool {
        gcd(gcd(self.a as i128, self.b as i128), self.c as i128) == 1
    }

    pub fn eval(&self, x: i64, y: i64) -> i128 {
        let (x, y) = (x as i128, y as i128);
        self.a as i128 * x * x + self.b as i128 * x * y + self.c as i128 * y * y
    }

    /// Form of the inverse class.
    pub fn inverse(&self) -> Self {
        Self::new(self.a, -self.b, self.c)
    }

    /// Image under `(x, y) -> (p x + q y, r x + s y)`.
    pub fn transform(&self, p: i64, q: i64, r: i64, s: i64) -> Self {
        let (a, b, c) = (self.a as i128, self.b as i128, self.c as i128);
        let (p, q, r, s) = (p as i128, q as i128, r as i128, s as i128);
        Self::new(
            narrow(a * p * p + b * p * r + c * r * r),
            narrow(2 * a * p * q + b * (p * s + q * r) + 2 * c * r * s),
            narrow(a * q * q + b * q * s + c * s * s),
        )
    }

    /// Reduced positive definite form: `|b| <= a <= c`, `b >= 0` when
    /// `|b| = a` or `a = c`.
    pub fn is_reduced_definite(&self) -> bool {
        self.a > 0
            && self.b.abs() <= self.a
            && self.a <= self.c
            && !(self.b < 0 && (self.b.abs() == self.a || self.a == self.c))
    }

    /// Reduced indefinite form: `|sqrt(D) - 2|a|| < b < sqrt(D)`.
    pub fn is_reduced_indefinite(&self) -> bool {
        let d = self.disc();
        if d <= 0 {
            return false;
        }
        let s = isqrt(d as u128) as i64;
        let a2 = 2 * self.a.abs();
        self.b > 0 && self.b <= s && a2 - self.b <= s && s < a2 + self.b
    }
}

/// Reduction: the unique reduced representative for negative discriminants,
/// a reduced form of the same cycle for positive ones.
pub fn reduce(f: QuadForm) -> Result<QuadForm> {
    let d = f.disc();
    if is_square(d) {
        return Err(Error::SquareDiscriminant(d));
    }
    Ok(if d < 0 {
        reduce_definite(f)
    } else {
        reduce_indefinite(f)
    })
}

pub(crate) fn reduce_definite(f: QuadForm) -> QuadForm {
    let (mut a, mut b, mut c) = (f.a as i128, f.b as i128, f.c as i128);
    if a < 0 {
        // Negative definite input: work with the positive definite twin.
        (a, b, c) = (-a, -b, -c);
    }
    loop {
        if !(-a < b && b <= a) {
            let r = (a - b).div_euclid(2 * a);
            c += r * (a * r + b);
            b += 2 * a * r;
        }
        if a > c {
            (a, b, c) = (c, -b, a);
            continue;
        }
        if a == c && b < 0 {
            b = -b;
        }
        break;
    }
    QuadForm::new(narrow(a), narrow(b), narrow(c))
}

/// `b' ≡ b mod 2|a|` chosen in the indefinite normalization window.
fn indefinite_normal_b(a: i64, b: i64, s: i64) -> i64 {
    let m = 2 * a.abs();
    if a.abs() <= s {
        s - (s - b).rem_euclid(m)
    } else {
        let r = b.rem_euclid(m);
        if r > a.abs() {
            r - m
        } else {
            r
        }
    }
}

/// The reduction operator `rho` on indefinite forms.
pub fn rho(f: QuadForm) -> QuadForm {
    let d = f.disc();
    let s = isqrt(d as u128) as i64;
    let a = f.c;
    let b = indefinite_normal_b(a, -f.b, s);
    QuadForm::from_ab(d, a, b).expect("rho keeps the discriminant")
}

pub(crate) fn reduce_indefinite(mut f: QuadForm) -> QuadForm {
    let d = f.disc();
    let s = isqrt(d as u128) as i64;
    // normalize first, then iterate rho
    let b = indefinite_normal_b(f.a, f.b, s);
    f = QuadForm::from_ab(d, f.a, b).expect("normalization keeps the discriminant");
    while !f.is_reduced_indefinite() {
        f = rho(f);
    }
    f
}

fn principal_reduced_indefinite(d: i64) -> QuadForm {
    let s = isqrt(d as u128) as i64;
    let b = if (s - d).rem_euclid(2) == 0 { s } else { s - 1 };
    QuadForm::from_ab(d, 1, b).expect("principal form")
}

/// Composition of positive definite forms of equal discriminant, returning the
/// reduced product.
pub fn compose(f: QuadForm, g: QuadForm) -> Result<QuadForm> {
    let (d1, d2) = (f.disc(), g.disc());
    if d1 != d2 {
        return Err(Error::DiscriminantMismatch {
            left: d1,
            right: d2,
        });
    }
    Ok(reduce_definite(compose_unreduced(f, g)))
}

/// Classical composition through a common united pair (Shanks' arrangement):
/// solves the simultaneous congruences for the middle coefficient with
/// extended gcds.
pub(crate) fn compose_unreduced(f: QuadForm, g: QuadForm) -> QuadForm {
    let (f, g) = if f.a > g.a { (g, f) } else { (f, g) };
    let (a1, b1) = (f.a as i128, f.b as i128);
    let (a2, b2, c2) = (g.a as i128, g.b as i128, g.c as i128);
    let s = (b1 + b2) / 2;
    let n = b2 - s;

    let (y1, d) = if a2 % a1 == 0 {
        (0, a1)
    } else {
        let (d, u, _v) = xgcd(a2, a1);
        (u, d)
    };
    let (x2, y2, d1) = if s % d == 0 {
        (0, -1, d)
    } else {
        let (d1, u, v) = xgcd(s, d);
        (u, -v, d1)
    };
    let v1 = a1 / d1;
    let v2 = a2 / d1;
    let r = (y1 * y2 * n - x2 * c2).rem_euclid(v1);
    let b3 = b2 + 2 * v2 * r;
    let a3 = v1 * v2;
    let c3 = (c2 * d1 + r * (b2 + v2 * r)) / v1;
    QuadForm::new(narrow(a3), narrow(b3), narrow(c3))
}

/// `(ℓ, b, c)` with the smallest `b >= 0`, `b ≡ d mod 2`, `b^2 ≡ d mod 4ℓ`:
/// a form attached to a prime ideal above a ramified or split prime `ℓ`.
pub fn prime_form(d: i64, ell: i64) -> Result<QuadForm> {
    if kronecker(d, ell) == -1 {
        return Err(Error::InertPrime {
            disc: d,
            prime: ell,
        });
    }
    let parity = d.rem_euclid(2);
    (0..=2 * ell)
        .filter(|b| b % 2 == parity)
        .find_map(|b| QuadForm::from_ab(d, ell, b))
        .ok_or(Error::InertPrime {
            disc: d,
            prime: ell,
        })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::{HashSet, VecDeque};

    /// Breadth-first search over words in the SL2(Z) generators `S`, `T`,
    /// `T^-1` applied to `f`, up to `depth` letters.
    fn sl2_orbit(f: QuadForm, depth: usize) -> HashSet<QuadForm> {
        let mut seen = HashSet::from([f]);
        let mut queue = VecDeque::from([(f, 0)]);
        while let Some((g, k)) = queue.pop_front() {
            if k == depth {
                continue;
            }
            for h in [
                g.transform(0, -1, 1, 0),
                g.transform(1, 1, 0, 1),
                g.transform(1, -1, 0, 1),
            ] {
                if h.a.abs() < 1000 && h.c.abs() < 1000 && seen.insert(h) {
                    queue.push_back((h, k + 1));
                }
            }
        }
        seen
    }

    #[test]
    fn reduce_examples() {
        let r = reduce(QuadForm::new(17, 30, 14)).unwrap();
        assert_eq!(r.disc(), -52);
        assert!(r.is_reduced_definite());
        assert!(r.a * r.a * 3 <= 52);
        assert_eq!(reduce(QuadForm::new(1, 0, 17)).unwrap(), QuadForm::new(1, 0, 17));
        assert_eq!(reduce(QuadForm::new(9, -2, 2)).unwrap(), QuadForm::new(2, 2, 9));
        assert!(sl2_orbit(QuadForm::new(9, -2, 2), 6).contains(&QuadForm::new(2, 2, 9)));
        assert!(matches!(
            reduce(QuadForm::new(1, 2, 0)),
            Err(Error::SquareDiscriminant(4))
        ));
    }

    #[test]
    fn reduce_is_idempotent() {
        for f in [QuadForm::new(17, 30, 14), QuadForm::new(101, 77, 23), QuadForm::new(3, 1, -5)] {
            let r = reduce(f).unwrap();
            assert_eq!(r.disc(), f.disc());
            assert_eq!(reduce(r).unwrap(), r);
        }
    }

    #[test]
    fn compose_examples() {
        let d = -68;
        let g = QuadForm::new(3, 2, 6);
        assert_eq!(compose(QuadForm::principal(d), g).unwrap(), g);
        assert_eq!(
            compose(QuadForm::new(2, 2, 9), QuadForm::new(2, 2, 9)).unwrap(),
            QuadForm::new(1, 0, 17)
        );
        assert_eq!(compose(g, g).unwrap(), QuadForm::new(2, 2, 9));
        assert!(matches!(
            compose(g, QuadForm::new(1, 1, 1)),
            Err(Error::DiscriminantMismatch { .. })
        ));
    }

    #[test]
    fn prime_form_examples() {
        assert_eq!(prime_form(-68, 2).unwrap(), QuadForm::new(2, 2, 9));
        assert_eq!(prime_form(-68, 17).unwrap(), QuadForm::new(17, 0, 1));
        assert_eq!(reduce(prime_form(-68, 17).unwrap()).unwrap(), QuadForm::new(1, 0, 17));
        assert_eq!(kronecker(-2244, 7), -1);
        assert!(matches!(prime_form(-2244, 7), Err(Error::InertPrime { .. })));
        for ell in [2, 3, 11, 17] {
            let f = prime_form(-2244, ell).unwrap();
            assert_eq!(f.disc(), -2244);
            assert_eq!(f.a, ell);
        }
    }

    #[test]
    fn indefinite_reduction_lands_in_window() {
        for d in [5i64, 8, 12, 13, 17, 21, 204, 561, 1001] {
            for (a, b) in [(1, 1), (3, 5), (-7, 3), (11, 9)] {
                let Some(f) = QuadForm::from_ab(d, a, b) else {
                    continue;
                };
                let r = reduce(f).unwrap();
                assert!(r.is_reduced_indefinite(), "{f} -> {r}");
                assert_eq!(r.disc(), d);
                assert!(rho(r).is_reduced_indefinite());
            }
        }
        assert!(QuadForm::principal(17).is_reduced_indefinite());
        assert!(QuadForm::principal(204).is_reduced_indefinite());
    }
}
