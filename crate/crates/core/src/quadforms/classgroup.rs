use serde::{Deserialize, Serialize};
use std::collections::HashMap;

use super::form::{compose, reduce_definite, QuadForm};
use super::real::{is_principal_indefinite, narrow_cycles};
use crate::abelian::AbelianType;
use crate::arith::{is_fundamental, two_power_part};
use crate::error::{Error, Result};

/// Default ceiling on `|d|` for class-group enumeration.
pub const DEFAULT_CLASS_BOUND: u64 = 10_000_000;

/// Class group of a fundamental discriminant.
///
/// For `d < 0` the classes are the reduced forms and the group law is
/// available. For `d > 0` the classes are one reduced form per cycle (the
/// narrow class group) and only the count is meaningful.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ClassGroup {
    pub disc: i64,
    pub classes: Vec<QuadForm>,
    /// Type of the 2-Sylow subgroup; negative discriminants only.
    pub abelian_type: Option<AbelianType>,
    pub h: u64,
    #[serde(skip)]
    index: HashMap<QuadForm, usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwoPart {
    pub h2: u64,
    /// `None` for positive discriminants.
    pub abelian_type: Option<AbelianType>,
}

pub fn class_group(d: i64) -> Result<ClassGroup> {
    class_group_with_bound(d, DEFAULT_CLASS_BOUND)
}

pub fn class_group_with_bound(d: i64, bound: u64) -> Result<ClassGroup> {
    if !is_fundamental(d) {
        return Err(Error::NotFundamental(d));
    }
    if d.unsigned_abs() > bound {
        return Err(Error::BoundExceeded {
            value: d.unsigned_abs() as u128,
            bound: bound as u128,
        });
    }
    if d < 0 {
        Ok(ClassGroup::definite(d))
    } else {
        let classes = narrow_cycles(d).into_iter().map(|c| c[0]).collect::<Vec<_>>();
        Ok(ClassGroup {
            disc: d,
            h: classes.len() as u64,
            index: HashMap::new(),
            classes,
            abelian_type: None,
        })
    }
}

/// All primitive reduced positive definite forms of discriminant `d < 0`,
/// principal form first.
pub fn reduced_forms(d: i64) -> Vec<QuadForm> {
    let mut out = Vec::new();
    let mut a = 1i64;
    while 3 * a * a <= -d {
        for b in -a + 1..=a {
            if (b - d).rem_euclid(2) != 0 {
                continue;
            }
            let Some(f) = QuadForm::from_ab(d, a, b) else {
                continue;
            };
            if f.c < a || (b < 0 && f.c == a) || !f.is_primitive() {
                continue;
            }
            out.push(f);
        }
        a += 1;
    }
    out
}

impl ClassGroup {
    fn definite(d: i64) -> Self {
        let classes = reduced_forms(d);
        let index = classes.iter().enumerate().map(|(i, f)| (*f, i)).collect();
        let mut g = Self {
            disc: d,
            h: classes.len() as u64,
            classes,
            abelian_type: None,
            index,
        };
        g.abelian_type = Some(g.sylow2_type());
        g
    }

    pub fn is_definite(&self) -> bool {
        self.disc < 0
    }

    pub fn identity(&self) -> QuadForm {
        self.classes[0]
    }

    /// Index of the class of `f`, which must have this discriminant.
    pub fn index_of(&self, f: &QuadForm) -> Result<usize> {
        if f.disc() != self.disc {
            return Err(Error::DiscriminantMismatch {
                left: self.disc,
                right: f.disc(),
            });
        }
        let r = reduce_definite(*f);
        Ok(*self.index.get(&r).expect("reduced form is enumerated"))
    }

    pub fn mul(&self, f: &QuadForm, g: &QuadForm) -> Result<QuadForm> {
        compose(*f, *g)
    }

    pub fn pow(&self, f: &QuadForm, mut e: u64) -> QuadForm {
        let mut acc = self.identity();
        let mut base = reduce_definite(*f);
        while e > 0 {
            if e & 1 == 1 {
                acc = compose(acc, base).expect("same discriminant");
            }
            base = compose(base, base).expect("same discriminant");
            e >>= 1;
        }
        acc
    }

    pub fn order_of(&self, f: &QuadForm) -> u64 {
        let id = self.identity();
        let mut x = reduce_definite(*f);
        let mut k = 1;
        while x != id {
            x = compose(x, *f).expect("same discriminant");
            k += 1;
        }
        k
    }

    /// Full multiplication table on class indices.
    pub fn composition_table(&self) -> Vec<Vec<usize>> {
        self.classes
            .iter()
            .map(|f| {
                self.classes
                    .iter()
                    .map(|g| self.index[&compose(*f, *g).expect("same discriminant")])
                    .collect()
            })
            .collect()
    }

    /// Classes of order at most two.
    pub fn two_torsion(&self) -> Vec<QuadForm> {
        let id = self.identity();
        self.classes
            .iter()
            .copied()
            .filter(|f| compose(*f, *f).expect("same discriminant") == id)
            .collect()
    }

    fn sylow2_type(&self) -> AbelianType {
        let h2 = two_power_part(self.h);
        let odd = self.h / h2;
        let mut sylow: Vec<QuadForm> = self.classes.iter().map(|f| self.pow(f, odd)).collect();
        sylow.sort_unstable();
        sylow.dedup();
        debug_assert_eq!(sylow.len() as u64, h2);
        let id = self.identity();
        let mut counts = vec![1u64];
        // powers[i] = sylow[i]^(2^k)
        let mut powers = sylow;
        while *counts.last().unwrap() < h2 {
            for f in powers.iter_mut() {
                *f = compose(*f, *f).expect("same discriminant");
            }
            counts.push(powers.iter().filter(|f| **f == id).count() as u64);
        }
        AbelianType::from_power_counts(&counts)
    }

    /// Whether `f` lies in the principal class: wide sense for positive
    /// discriminants.
    pub fn is_principal(&self, f: &QuadForm) -> Result<bool> {
        is_principal(self.disc, f)
    }
}

pub fn two_part(g: &ClassGroup) -> TwoPart {
    TwoPart {
        h2: two_power_part(g.h),
        abelian_type: g.abelian_type.clone(),
    }
}

/// Principality of the class of `f`: reduce-and-compare for negative
/// discriminants, membership in the cycle of `±` the principal form (wide
/// sense) for positive ones.
pub fn is_principal(d: i64, f: &QuadForm) -> Result<bool> {
    if f.disc() != d {
        return Err(Error::DiscriminantMismatch {
            left: d,
            right: f.disc(),
        });
    }
    if d < 0 {
        Ok(reduce_definite(*f) == QuadForm::principal(d))
    } else {
        Ok(is_principal_indefinite(f, false))
    }
}

/// Principality in the narrow sense (positive discriminants).
pub fn is_narrow_principal(d: i64, f: &QuadForm) -> Result<bool> {
    if d < 0 {
        return is_principal(d, f);
    }
    if f.disc() != d {
        return Err(Error::DiscriminantMismatch {
            left: d,
            right: f.disc(),
        });
    }
    Ok(is_principal_indefinite(f, true))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::abelian;
    use crate::quadforms::prime_form;

    #[test]
    fn class_group_minus_68() {
        let g = class_group(-68).unwrap();
        assert_eq!(g.h, 4);
        assert_eq!(
            g.classes,
            vec![
                QuadForm::new(1, 0, 17),
                QuadForm::new(2, 2, 9),
                QuadForm::new(3, -2, 6),
                QuadForm::new(3, 2, 6),
            ]
        );
        assert_eq!(g.abelian_type, Some(abelian![4]));
        let tp = two_part(&g);
        assert_eq!(tp.h2, 4);
    }

    #[test]
    fn small_class_groups() {
        assert_eq!(class_group(-4).unwrap().h, 1);
        assert_eq!(class_group(-3).unwrap().h, 1);
        let tp = two_part(&class_group(-4).unwrap());
        assert_eq!(tp.h2, 1);
        assert_eq!(tp.abelian_type, Some(AbelianType::trivial()));
        assert_eq!(class_group(-23).unwrap().h, 3);
        assert_eq!(class_group(-4 * 5).unwrap().h, 2);
    }

    #[test]
    fn class_group_minus_2244() {
        let g = class_group(-2244).unwrap();
        let tp = two_part(&g);
        assert_eq!(tp.h2, 16);
        assert_eq!(tp.abelian_type, Some(abelian![2, 2, 4]));
    }

    #[test]
    fn class_group_errors() {
        assert!(matches!(class_group(-16), Err(Error::NotFundamental(_))));
        assert!(matches!(
            class_group_with_bound(-2244, 1000),
            Err(Error::BoundExceeded { .. })
        ));
    }

    #[test]
    fn principality_definite() {
        assert!(is_principal(-68, &QuadForm::new(1, 0, 17)).unwrap());
        assert!(!is_principal(-68, &QuadForm::new(2, 2, 9)).unwrap());
        assert!(matches!(
            is_principal(-68, &QuadForm::new(1, 1, 1)),
            Err(Error::DiscriminantMismatch { .. })
        ));
    }

    #[test]
    fn principality_lemma_one_disc_204() {
        // d = 4 * 3 * 17: the prime above 2 is principal (wide sense) and the
        // product of the primes above 2, 3, 17 is narrowly principal.
        let d = 204;
        let two = prime_form(d, 2).unwrap();
        assert!(is_principal(d, &two).unwrap());
        let q = prime_form(d, 3).unwrap();
        let p = prime_form(d, 17).unwrap();
        let prod = super::super::real::compose_indefinite(
            super::super::real::compose_indefinite(two, q),
            p,
        );
        assert!(is_narrow_principal(d, &prod).unwrap());
    }

    #[test]
    fn orders_and_torsion() {
        let g = class_group(-68).unwrap();
        assert_eq!(g.order_of(&QuadForm::new(3, 2, 6)), 4);
        assert_eq!(g.order_of(&QuadForm::new(2, 2, 9)), 2);
        assert_eq!(g.two_torsion().len(), 2);
    }
}
