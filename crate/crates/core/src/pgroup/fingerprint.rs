use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

use super::finite::FiniteGroup;
use super::subgroup::{
    abelian_type_of, abelianization, center, derived_subgroup, lower_central_series,
    maximal_subgroups_of, subgroups_of_index4, trivial, whole,
};
use crate::abelian::AbelianType;

/// Isomorphism invariants of a finite 2-group.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Fingerprint {
    pub order: u64,
    pub abelianization: AbelianType,
    /// `None` when `G'` is not abelian.
    pub derived_type: Option<AbelianType>,
    pub exponent: u64,
    pub center_order: u64,
    pub lcs_orders: Vec<u64>,
    /// Abelianizations of the index-2 subgroups, sorted.
    pub sub_index2: Vec<AbelianType>,
    /// `(abelianization, normal)` for the index-4 subgroups, sorted.
    pub sub_index4: Vec<(AbelianType, bool)>,
    pub elt_order_histogram: BTreeMap<u64, u64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Distinction {
    Distinct,
    NotDistinguished,
}

impl std::fmt::Display for Distinction {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Distinction::Distinct => "distinct",
            Distinction::NotDistinguished => "not distinguished",
        })
    }
}

pub fn fingerprint<G: FiniteGroup + ?Sized>(g: &G) -> Fingerprint {
    let all = whole(g);
    let d = derived_subgroup(g, &all);
    let derived_type = abelian_type_of(g, &d, &trivial(g)).ok();
    let mut hist = BTreeMap::new();
    for x in g.elements() {
        *hist.entry(g.element_order(x)).or_insert(0) += 1;
    }
    let exponent = hist.keys().copied().max().unwrap_or(1);
    let mut sub_index2: Vec<AbelianType> = if g.order() > 1 {
        maximal_subgroups_of(g, &all)
            .subgroups
            .iter()
            .map(|(_, h)| abelianization(g, h))
            .collect()
    } else {
        Vec::new()
    };
    sub_index2.sort();
    let mut sub_index4: Vec<(AbelianType, bool)> = if g.order() >= 4 {
        subgroups_of_index4(g)
            .iter()
            .map(|(h, normal)| (abelianization(g, h), *normal))
            .collect()
    } else {
        Vec::new()
    };
    sub_index4.sort();
    Fingerprint {
        order: g.order() as u64,
        abelianization: abelian_type_of(g, &all, &d).expect("G' is normal"),
        derived_type,
        exponent,
        center_order: center(g).order() as u64,
        lcs_orders: lower_central_series(g).iter().map(|s| s.order() as u64).collect(),
        sub_index2,
        sub_index4,
        elt_order_histogram: hist,
    }
}

pub fn distinguish<A: FiniteGroup + ?Sized, B: FiniteGroup + ?Sized>(a: &A, b: &B) -> Distinction {
    if fingerprint(a) == fingerprint(b) {
        Distinction::NotDistinguished
    } else {
        Distinction::Distinct
    }
}

/// Extends `gens(a)[i] -> images[i]` to a map on all of `a` by walking
/// words; returns it when it is a well-defined bijective homomorphism.
pub fn generator_isomorphism<A: FiniteGroup + ?Sized, B: FiniteGroup + ?Sized>(
    a: &A,
    b: &B,
    images: &[u32],
) -> Option<Vec<u32>> {
    let gens = a.generators();
    if gens.len() != images.len() || a.order() != b.order() {
        return None;
    }
    let mut phi = vec![u32::MAX; a.order()];
    phi[a.identity() as usize] = b.identity();
    let mut queue = vec![a.identity()];
    let mut i = 0;
    while i < queue.len() {
        let x = queue[i];
        i += 1;
        for (&g, &img) in gens.iter().zip(images) {
            let y = a.mul(x, g);
            let v = b.mul(phi[x as usize], img);
            match phi[y as usize] {
                u32::MAX => {
                    phi[y as usize] = v;
                    queue.push(y);
                }
                w if w != v => return None,
                _ => {}
            }
        }
    }
    let mut hit = vec![false; b.order()];
    for &v in &phi {
        if v == u32::MAX || std::mem::replace(&mut hit[v as usize], true) {
            return None;
        }
    }
    Some(phi)
}

/// Abelianizations of the nonnormal index-4 subgroups, sorted.
pub fn nonnormal_index4_types<G: FiniteGroup + ?Sized>(g: &G) -> Vec<AbelianType> {
    let mut v: Vec<AbelianType> = subgroups_of_index4(g)
        .iter()
        .filter(|(_, normal)| !normal)
        .map(|(h, _)| abelianization(g, h))
        .collect();
    v.sort();
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pgroup::{GroupParams, PGroup};

    #[test]
    fn self_not_distinguished() {
        let g = PGroup::new(GroupParams::gamma(2, 2, 1).unwrap()).unwrap();
        assert_eq!(distinguish(&g, &g), Distinction::NotDistinguished);
        let f = fingerprint(&g);
        assert_eq!(f.order, 128);
        assert_eq!(f.elt_order_histogram.values().sum::<u64>(), 128);
        assert_eq!(f.sub_index2.len(), 7);
    }

    #[test]
    fn isomorphism_certificates() {
        let g = PGroup::new(GroupParams::gamma(2, 2, 1).unwrap()).unwrap();
        assert!(generator_isomorphism(&g, &g, &g.generators()).is_some());
        let swapped = [g.a2(), g.a1(), g.a3()];
        assert!(generator_isomorphism(&g, &g, &swapped).is_none());
        let a = PGroup::new(GroupParams::gamma(1, 1, 0).unwrap()).unwrap();
        let b = PGroup::new(GroupParams::gamma(1, 1, 1).unwrap()).unwrap();
        assert!(generator_isomorphism(&a, &b, &b.generators()).is_none());
    }

    #[test]
    fn small_eps_pair_distinct() {
        let a = PGroup::new(GroupParams::gamma(1, 1, 0).unwrap()).unwrap();
        let b = PGroup::new(GroupParams::gamma(1, 1, 1).unwrap()).unwrap();
        assert_eq!(distinguish(&a, &b), Distinction::Distinct);
    }
}
