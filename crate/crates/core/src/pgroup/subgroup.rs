//! Subgroups as explicit element sets.

use std::collections::{HashMap, HashSet, VecDeque};

use super::finite::{FiniteGroup, TableGroup};
use crate::abelian::AbelianType;
use crate::error::{Error, Result};

#[derive(Debug, Clone)]
pub struct Subgroup {
    elements: Vec<u32>,
    generators: Vec<u32>,
    member: Vec<u64>,
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        self.elements == other.elements
    }
}

impl Eq for Subgroup {}

impl Subgroup {
    fn from_parts(group_order: usize, mut elements: Vec<u32>, generators: Vec<u32>) -> Self {
        elements.sort_unstable();
        let mut member = vec![0u64; group_order.div_ceil(64)];
        for &x in &elements {
            member[x as usize / 64] |= 1 << (x % 64);
        }
        Self {
            elements,
            generators,
            member,
        }
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, x: u32) -> bool {
        self.member
            .get(x as usize / 64)
            .is_some_and(|w| w >> (x % 64) & 1 == 1)
    }

    /// Sorted element list.
    pub fn elements(&self) -> &[u32] {
        &self.elements
    }

    pub fn generators(&self) -> &[u32] {
        &self.generators
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        self.elements.iter().all(|&x| other.contains(x))
    }
}

/// Subgroup generated by `gens`.
pub fn closure<G: FiniteGroup + ?Sized>(g: &G, gens: &[u32]) -> Subgroup {
    let id = g.identity();
    let mut gens: Vec<u32> = gens.iter().copied().filter(|&x| x != id).collect();
    gens.sort_unstable();
    gens.dedup();
    let mut seen = vec![false; g.order()];
    seen[id as usize] = true;
    let mut elements = vec![id];
    let mut queue = VecDeque::from([id]);
    while let Some(x) = queue.pop_front() {
        for &s in &gens {
            let y = g.mul(x, s);
            if !seen[y as usize] {
                seen[y as usize] = true;
                elements.push(y);
                queue.push_back(y);
            }
        }
    }
    Subgroup::from_parts(g.order(), elements, gens)
}

pub fn trivial<G: FiniteGroup + ?Sized>(g: &G) -> Subgroup {
    closure(g, &[])
}

pub fn whole<G: FiniteGroup + ?Sized>(g: &G) -> Subgroup {
    closure(g, &g.generators())
}

/// Smallest subgroup containing `h` and `extra`.
pub fn join<G: FiniteGroup + ?Sized>(g: &G, h: &Subgroup, extra: &[u32]) -> Subgroup {
    let mut gens = h.generators.clone();
    gens.extend(extra.iter().copied().filter(|&x| !h.contains(x)));
    closure(g, &gens)
}

/// Normal closure of `gens` inside `ambient` (given by its generators).
pub fn normal_closure<G: FiniteGroup + ?Sized>(g: &G, ambient: &Subgroup, gens: &[u32]) -> Subgroup {
    let mut h = closure(g, gens);
    loop {
        let mut extra = Vec::new();
        for &x in h.generators() {
            for &a in ambient.generators() {
                let y = g.conj(x, a);
                if !h.contains(y) && !extra.contains(&y) {
                    extra.push(y);
                }
            }
        }
        if extra.is_empty() {
            return h;
        }
        h = join(g, &h, &extra);
    }
}

/// Whether `n` is normalized by every generator of `h`.
pub fn is_normal<G: FiniteGroup + ?Sized>(g: &G, n: &Subgroup, h: &Subgroup) -> bool {
    n.generators()
        .iter()
        .all(|&x| h.generators().iter().all(|&a| n.contains(g.conj(x, a))))
}

/// `[H, H]` as the normal closure in `H` of commutators of generators.
pub fn derived_subgroup<G: FiniteGroup + ?Sized>(g: &G, h: &Subgroup) -> Subgroup {
    let gens = h.generators();
    let mut comms = Vec::new();
    for (i, &x) in gens.iter().enumerate() {
        for &y in &gens[i + 1..] {
            comms.push(g.comm(x, y));
        }
    }
    normal_closure(g, h, &comms)
}

/// `[H, H]` from all pairs of elements; quadratic, for cross-checks.
pub fn derived_subgroup_all_pairs<G: FiniteGroup + ?Sized>(g: &G, h: &Subgroup) -> Subgroup {
    let mut comms: HashSet<u32> = HashSet::new();
    for &x in h.elements() {
        for &y in h.elements() {
            comms.insert(g.comm(x, y));
        }
    }
    let comms: Vec<u32> = comms.into_iter().collect();
    closure(g, &comms)
}

/// `[N, G]` for `N` normal in `G`.
pub fn commutator_with_group<G: FiniteGroup + ?Sized>(g: &G, n: &Subgroup) -> Subgroup {
    let all = whole(g);
    let mut comms = Vec::new();
    for &x in n.generators() {
        for &a in all.generators() {
            comms.push(g.comm(x, a));
        }
    }
    normal_closure(g, &all, &comms)
}

/// `G_1 = G, G_{i+1} = [G_i, G]`, ending with the first trivial term.
pub fn lower_central_series<G: FiniteGroup + ?Sized>(g: &G) -> Vec<Subgroup> {
    let mut series = vec![whole(g)];
    loop {
        let last = series.last().expect("nonempty");
        if last.order() == 1 {
            return series;
        }
        let next = commutator_with_group(g, last);
        if next.order() == last.order() {
            // not nilpotent; cannot happen for p-groups
            return series;
        }
        series.push(next);
    }
}

pub fn center<G: FiniteGroup + ?Sized>(g: &G) -> Subgroup {
    let gens = g.generators();
    let z: Vec<u32> = g
        .elements()
        .filter(|&x| gens.iter().all(|&a| g.mul(x, a) == g.mul(a, x)))
        .collect();
    let order = g.order();
    let gens = z.clone();
    Subgroup::from_parts(order, z, gens)
}

/// Invariant factors of `h / n`.
pub fn abelian_type_of<G: FiniteGroup + ?Sized>(g: &G, h: &Subgroup, n: &Subgroup) -> Result<AbelianType> {
    if !n.is_subgroup_of(h) || !is_normal(g, n, h) {
        return Err(Error::NotNormal);
    }
    let gens = h.generators();
    for &x in gens {
        for &y in gens {
            if !n.contains(g.comm(x, y)) {
                return Err(Error::NonAbelianQuotient);
            }
        }
    }
    let index = (h.order() / n.order()) as u64;
    let mut powers: Vec<u32> = h.elements().to_vec();
    let mut counts = vec![1u64];
    while *counts.last().expect("nonempty") < index {
        for x in powers.iter_mut() {
            *x = g.mul(*x, *x);
        }
        let hits = powers.iter().filter(|&&x| n.contains(x)).count();
        counts.push((hits / n.order()) as u64);
    }
    Ok(AbelianType::from_power_counts(&counts))
}

/// `H / H'`.
pub fn abelianization<G: FiniteGroup + ?Sized>(g: &G, h: &Subgroup) -> AbelianType {
    let d = derived_subgroup(g, h);
    abelian_type_of(g, h, &d).expect("H' is normal with abelian quotient")
}

/// Frattini subgroup of a 2-group: generated by squares.
pub fn frattini<G: FiniteGroup + ?Sized>(g: &G, h: &Subgroup) -> Subgroup {
    let squares: HashSet<u32> = h.elements().iter().map(|&x| g.mul(x, x)).collect();
    let mut squares: Vec<u32> = squares.into_iter().collect();
    squares.sort_unstable();
    // reduce to a small generating set
    let mut phi = trivial(g);
    let mut gens = Vec::new();
    for s in squares {
        if !phi.contains(s) {
            gens.push(s);
            phi = closure(g, &gens);
        }
    }
    phi
}

/// Index-2 subgroups of a 2-group `h`, each tagged with its functional on
/// `h / Φ(h)` in the basis chosen greedily from `h`'s generators.
#[derive(Debug, Clone)]
pub struct MaximalSubgroups {
    pub basis: Vec<u32>,
    /// `(functional, subgroup)`; bit `i` of the functional pairs with
    /// `basis[i]`.
    pub subgroups: Vec<(u32, Subgroup)>,
}

pub fn maximal_subgroups_of<G: FiniteGroup + ?Sized>(g: &G, h: &Subgroup) -> MaximalSubgroups {
    let phi = frattini(g, h);
    let mut basis = Vec::new();
    let mut span = phi.clone();
    let candidates = h.generators().iter().chain(h.elements().iter());
    for &x in candidates {
        if span.order() == h.order() {
            break;
        }
        if !span.contains(x) {
            basis.push(x);
            span = join(g, &span, &[x]);
        }
    }
    let r = basis.len();
    // label every element by its coordinates mod Φ
    let mut coords: HashMap<u32, u32> = HashMap::with_capacity(h.order());
    for mask in 0u32..(1 << r) {
        let mut rep = g.identity();
        for (i, &b) in basis.iter().enumerate() {
            if mask >> i & 1 == 1 {
                rep = g.mul(rep, b);
            }
        }
        for &f in phi.elements() {
            coords.insert(g.mul(rep, f), mask);
        }
    }
    let mut subgroups = Vec::new();
    for functional in 1u32..(1 << r) {
        let elements: Vec<u32> = h
            .elements()
            .iter()
            .copied()
            .filter(|x| (coords[x] & functional).count_ones().is_multiple_of(2))
            .collect();
        // generators: Φ plus lifts of a kernel basis
        let mut gens = phi.generators().to_vec();
        let pivot = functional.trailing_zeros() as usize;
        for i in 0..r {
            if i == pivot {
                continue;
            }
            let x = if functional >> i & 1 == 1 {
                g.mul(basis[i], basis[pivot])
            } else {
                basis[i]
            };
            gens.push(x);
        }
        subgroups.push((functional, Subgroup::from_parts(g.order(), elements, gens)));
    }
    MaximalSubgroups { basis, subgroups }
}

/// All index-4 subgroups of the 2-group `g`, with a normality flag.
pub fn subgroups_of_index4<G: FiniteGroup + ?Sized>(g: &G) -> Vec<(Subgroup, bool)> {
    let all = whole(g);
    let mut seen: HashSet<Vec<u32>> = HashSet::new();
    let mut out = Vec::new();
    for (_, m) in maximal_subgroups_of(g, &all).subgroups {
        for (_, k) in maximal_subgroups_of(g, &m).subgroups {
            if seen.insert(k.elements.clone()) {
                let normal = is_normal(g, &k, &all);
                out.push((k, normal));
            }
        }
    }
    out
}

/// `g / n` as a table group; cosets are numbered with the identity first.
pub fn quotient_group<G: FiniteGroup + ?Sized>(g: &G, n: &Subgroup) -> Result<TableGroup> {
    let all = whole(g);
    if !is_normal(g, n, &all) {
        return Err(Error::NotNormal);
    }
    let mut coset_of = vec![u32::MAX; g.order()];
    let mut reps = Vec::new();
    for x in g.elements() {
        if coset_of[x as usize] != u32::MAX {
            continue;
        }
        let id = reps.len() as u32;
        reps.push(x);
        for &y in n.elements() {
            coset_of[g.mul(x, y) as usize] = id;
        }
    }
    let k = reps.len();
    let mut table = vec![0u32; k * k];
    for (i, &x) in reps.iter().enumerate() {
        for (j, &y) in reps.iter().enumerate() {
            table[i * k + j] = coset_of[g.mul(x, y) as usize];
        }
    }
    let gens = g.generators().iter().map(|&a| coset_of[a as usize]).collect();
    Ok(TableGroup::new(k, table, gens))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::abelian;
    use crate::pgroup::{GroupParams, PGroup};

    fn g(n: u32, m: u32, eps: u8) -> PGroup {
        PGroup::new(GroupParams::gamma(n, m, eps).unwrap()).unwrap()
    }

    #[test]
    fn whole_group_is_generated() {
        for (n, m, eps) in [(1, 1, 0), (2, 2, 1), (3, 2, 0), (2, 4, 1)] {
            let g = g(n, m, eps);
            assert_eq!(whole(&g).order(), g.order());
        }
    }

    #[test]
    fn derived_matches_all_pairs() {
        for (n, m, eps) in [(1, 1, 0), (1, 1, 1), (2, 2, 0), (2, 2, 1), (3, 2, 1)] {
            let g = g(n, m, eps);
            let all = whole(&g);
            assert_eq!(derived_subgroup(&g, &all), derived_subgroup_all_pairs(&g, &all));
            for (_, h) in maximal_subgroups_of(&g, &all).subgroups {
                assert_eq!(derived_subgroup(&g, &h), derived_subgroup_all_pairs(&g, &h));
            }
        }
    }

    #[test]
    fn lcs_matches_all_pairs() {
        let g = g(2, 3, 1);
        let series = lower_central_series(&g);
        for w in series.windows(2) {
            let mut comms = HashSet::new();
            for &x in w[0].elements() {
                for y in g.elements() {
                    comms.insert(g.comm(x, y));
                }
            }
            let comms: Vec<u32> = comms.into_iter().collect();
            assert_eq!(closure(&g, &comms), w[1]);
        }
    }

    #[test]
    fn abelianization_and_derived() {
        let g = g(2, 2, 1);
        let all = whole(&g);
        let d = derived_subgroup(&g, &all);
        assert_eq!(abelian_type_of(&g, &all, &d).unwrap(), abelian![2, 2, 4]);
        assert_eq!(abelian_type_of(&g, &d, &trivial(&g)).unwrap(), abelian![2, 4]);
        assert!(matches!(
            abelian_type_of(&g, &all, &trivial(&g)),
            Err(Error::NonAbelianQuotient)
        ));
        let a1 = closure(&g, &[g.a1()]);
        assert!(matches!(abelian_type_of(&g, &all, &a1), Err(Error::NotNormal)));
    }

    #[test]
    fn seven_maximal_subgroups() {
        let g = g(2, 2, 1);
        let ms = maximal_subgroups_of(&g, &whole(&g));
        assert_eq!(ms.basis, vec![g.a1(), g.a2(), g.a3()]);
        assert_eq!(ms.subgroups.len(), 7);
        for (_, h) in &ms.subgroups {
            assert_eq!(h.order(), 64);
            // stored generators generate the stored element set
            assert_eq!(&closure(&g, h.generators()), h);
        }
    }

    #[test]
    fn index4_subgroups() {
        let g = g(2, 2, 1);
        let subs = subgroups_of_index4(&g);
        assert!(subs.iter().all(|(k, _)| k.order() == 32));
        assert!(subs.iter().any(|(_, n)| !n));
    }

    #[test]
    fn quotients() {
        let g = g(2, 2, 1);
        let all = whole(&g);
        let q = quotient_group(&g, &all).unwrap();
        assert_eq!(q.order(), 1);
        let d = derived_subgroup(&g, &all);
        let q = quotient_group(&g, &d).unwrap();
        assert_eq!(q.order(), 16);
        let qa = whole(&q);
        assert_eq!(abelian_type_of(&q, &qa, &trivial(&q)).unwrap(), abelian![2, 2, 4]);
        let a1 = closure(&g, &[g.a1()]);
        assert!(matches!(quotient_group(&g, &a1), Err(Error::NotNormal)));
    }

    #[test]
    fn center_is_central() {
        let g = g(2, 2, 1);
        let z = center(&g);
        for &x in z.elements() {
            for y in g.elements() {
                assert_eq!(g.mul(x, y), g.mul(y, x));
            }
        }
    }
}
