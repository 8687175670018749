//! Genus characters, the square 2-torsion of explicit class groups, and the
//! principality lemma for the real quadratic subfields.

use serde::{Deserialize, Serialize};

use crate::arith::{field_discriminant, is_prime, kronecker, prime_discriminants, PrimeDiscriminant};
use crate::error::{Error, Result};
use crate::quadforms::{
    class_group_with_bound, compose, compose_indefinite, is_narrow_principal, is_principal,
    prime_form, wide_h2, QuadForm, DEFAULT_CLASS_BOUND,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct GenusCharacterValue {
    pub character: PrimeDiscriminant,
    pub value: i32,
}

fn gcd(mut a: i128, mut b: i128) -> i128 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a.abs()
}

/// A nonzero value represented by `f` and coprime to its discriminant.
pub fn coprime_value(f: &QuadForm) -> i64 {
    let d = f.disc() as i128;
    let mut r = 1i64;
    loop {
        for x in -r..=r {
            for y in -r..=r {
                // only the boundary of the box is new
                if x.abs() != r && y.abs() != r {
                    continue;
                }
                let v = f.eval(x, y);
                if v != 0 && gcd(v, d) == 1 {
                    return v as i64;
                }
            }
        }
        r += 1;
    }
}

/// `chi_{d_i}` on the class of `f`.
pub fn chi_eval(d: i64, d_i: PrimeDiscriminant, f: &QuadForm) -> Result<i32> {
    if f.disc() != d {
        return Err(Error::DiscriminantMismatch {
            left: d,
            right: f.disc(),
        });
    }
    if !prime_discriminants(d)?.contains(&d_i) {
        return Err(Error::InvalidParams(format!("{d_i} does not divide {d}")));
    }
    Ok(kronecker(d_i.value(), coprime_value(f)))
}

/// All genus characters of `d` on the class of `f`.
pub fn genus_characters(d: i64, f: &QuadForm) -> Result<Vec<GenusCharacterValue>> {
    if f.disc() != d {
        return Err(Error::DiscriminantMismatch {
            left: d,
            right: f.disc(),
        });
    }
    let v = coprime_value(f);
    Ok(prime_discriminants(d)?
        .into_iter()
        .map(|c| GenusCharacterValue {
            character: c,
            value: kronecker(c.value(), v),
        })
        .collect())
}

/// `Cl(d)^2 ∩ Cl(d)[2]` by direct enumeration, identity first.
pub fn square_2torsion(d: i64) -> Result<Vec<QuadForm>> {
    square_2torsion_with_bound(d, DEFAULT_CLASS_BOUND)
}

pub fn square_2torsion_with_bound(d: i64, bound: u64) -> Result<Vec<QuadForm>> {
    if d >= 0 {
        return Err(Error::NotImaginary(d));
    }
    let g = class_group_with_bound(d, bound)?;
    let mut squares: Vec<QuadForm> = g
        .classes
        .iter()
        .map(|f| compose(*f, *f).expect("same discriminant"))
        .collect();
    squares.sort_unstable();
    squares.dedup();
    let id = g.identity();
    let mut out: Vec<QuadForm> = g
        .two_torsion()
        .into_iter()
        .filter(|f| squares.binary_search(f).is_ok())
        .collect();
    out.sort_by_key(|f| (*f != id, *f));
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Lemma1Case {
    /// `d_F = 4qp`; the prime above 2 is principal.
    TwoAbove { q: u64, p: u64 },
    /// `d_F = pqq'`; the prime above `p` is principal.
    PAbove { p: u64, q: u64, qprime: u64 },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Lemma1Report {
    pub case: Lemma1Case,
    pub disc: i64,
    pub wide_h2: u64,
    pub designated_prime: u64,
    pub prime_principal: bool,
    /// Product of the ramified primes: narrowly principal with all
    /// characters trivial.
    pub product_narrow_principal: bool,
    pub holds: bool,
}

fn preconditions(case: &Lemma1Case) -> Vec<String> {
    let mut bad = Vec::new();
    let mut need = |ok: bool, what: String| {
        if !ok {
            bad.push(what);
        }
    };
    match *case {
        Lemma1Case::TwoAbove { q, p } => {
            need(is_prime(q), format!("{q} is not prime"));
            need(is_prime(p), format!("{p} is not prime"));
            need(q % 8 == 3, format!("q = {q} is not 3 mod 8"));
            need(p % 8 == 1, format!("p = {p} is not 1 mod 8"));
            need(kronecker(p as i64, q as i64) == -1, format!("({p}/{q}) != -1"));
        }
        Lemma1Case::PAbove { p, q, qprime } => {
            for x in [p, q, qprime] {
                need(is_prime(x), format!("{x} is not prime"));
            }
            need(q != qprime, format!("q = q' = {q}"));
            need(p % 4 == 1, format!("p = {p} is not 1 mod 4"));
            need(q % 4 == 3, format!("q = {q} is not 3 mod 4"));
            need(qprime % 4 == 3, format!("q' = {qprime} is not 3 mod 4"));
            need(kronecker(p as i64, q as i64) == -1, format!("({p}/{q}) != -1"));
            need(
                kronecker(p as i64, qprime as i64) == -1,
                format!("({p}/{qprime}) != -1"),
            );
        }
    }
    bad
}

/// Checks that the real quadratic field of the given shape has `h_2 = 2` and
/// that its designated ramified prime is principal in the wide sense.
pub fn lemma1_check(case: Lemma1Case) -> Result<Lemma1Report> {
    let bad = preconditions(&case);
    if !bad.is_empty() {
        return Err(Error::PreconditionViolated(bad));
    }
    let (disc, designated, ramified): (i64, u64, Vec<u64>) = match case {
        Lemma1Case::TwoAbove { q, p } => (field_discriminant((q * p) as i64), 2, vec![2, q, p]),
        Lemma1Case::PAbove { p, q, qprime } => {
            (field_discriminant((p * q * qprime) as i64), p, vec![p, q, qprime])
        }
    };
    let h2 = wide_h2(disc)?;
    let pf = prime_form(disc, designated as i64)?;
    let prime_principal = is_principal(disc, &pf)?;
    let mut prod = QuadForm::principal(disc);
    for ell in &ramified {
        prod = compose_indefinite(prod, prime_form(disc, *ell as i64)?);
    }
    let chars_trivial = genus_characters(disc, &prod)?.iter().all(|c| c.value == 1);
    let product_narrow_principal = chars_trivial && is_narrow_principal(disc, &prod)?;
    Ok(Lemma1Report {
        case,
        disc,
        wide_h2: h2,
        designated_prime: designated,
        prime_principal,
        product_narrow_principal,
        holds: h2 == 2 && prime_principal,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quadforms::class_group;

    #[test]
    fn principal_form_is_in_principal_genus() {
        for d in [-68i64, -2244, 204, 561] {
            let chars = genus_characters(d, &QuadForm::principal(d)).unwrap();
            assert!(chars.iter().all(|c| c.value == 1), "d = {d}");
        }
    }

    #[test]
    fn two_p_class_in_principal_genus() {
        let d = -2244;
        let f = compose(prime_form(d, 2).unwrap(), prime_form(d, 17).unwrap()).unwrap();
        for c in prime_discriminants(d).unwrap() {
            assert_eq!(chi_eval(d, c, &f).unwrap(), 1);
        }
    }

    #[test]
    fn chi_independent_of_value() {
        // evaluate on every represented coprime value in a box
        let d = -2244;
        for f in class_group(d).unwrap().classes {
            for c in prime_discriminants(d).unwrap() {
                let want = chi_eval(d, c, &f).unwrap();
                for x in -6..=6 {
                    for y in -6..=6 {
                        let v = f.eval(x, y);
                        if v != 0 && gcd(v, d as i128) == 1 {
                            assert_eq!(kronecker(c.value(), v as i64), want);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn chi_rejects_foreign_character() {
        let f = QuadForm::principal(-68);
        let bad = PrimeDiscriminant::new(-3).unwrap();
        assert!(chi_eval(-68, bad, &f).is_err());
    }

    #[test]
    fn square_torsion_examples() {
        assert_eq!(square_2torsion(-4).unwrap(), vec![QuadForm::new(1, 0, 1)]);
        assert_eq!(
            square_2torsion(-68).unwrap(),
            vec![QuadForm::new(1, 0, 17), QuadForm::new(2, 2, 9)]
        );
        let d = -2244;
        let sq = square_2torsion(d).unwrap();
        let two_p = compose(prime_form(d, 2).unwrap(), prime_form(d, 17).unwrap()).unwrap();
        assert_eq!(sq.len(), 2);
        assert_eq!(sq[1], two_p);
    }

    #[test]
    fn lemma1_examples() {
        let r = lemma1_check(Lemma1Case::TwoAbove { q: 3, p: 17 }).unwrap();
        assert_eq!(r.disc, 204);
        assert!(r.holds && r.product_narrow_principal);
        let r = lemma1_check(Lemma1Case::PAbove { p: 17, q: 3, qprime: 11 }).unwrap();
        assert_eq!(r.disc, 561);
        assert!(r.holds);
        assert!(matches!(
            lemma1_check(Lemma1Case::TwoAbove { q: 3, p: 13 }),
            Err(Error::PreconditionViolated(_))
        ));
    }
}
