//! Transfer from a group `K` to an index-2 subgroup `H`, valued in `H/H'`.

use super::finite::FiniteGroup;
use super::subgroup::{closure, derived_subgroup, Subgroup};
use crate::error::{Error, Result};

/// Transfer `K/K' -> H/H'` for `(K : H) = 2`.
#[derive(Debug, Clone)]
pub struct Transfer {
    k: Subgroup,
    h: Subgroup,
    h_derived: Subgroup,
    z: u32,
}

#[derive(Debug, Clone)]
pub struct TransferKernel {
    /// Order of the kernel as a subgroup of `K/K'`.
    pub order: usize,
    /// Preimage of the kernel in `K`; contains `K'`.
    pub preimage: Subgroup,
    pub k_derived: Subgroup,
}

impl Transfer {
    pub fn new<G: FiniteGroup + ?Sized>(g: &G, k: &Subgroup, h: &Subgroup) -> Result<Self> {
        if !h.is_subgroup_of(k) || k.order() != 2 * h.order() {
            return Err(Error::IndexNotTwo(k.order() / h.order().max(1)));
        }
        let z = *k
            .elements()
            .iter()
            .find(|&&x| !h.contains(x))
            .expect("index two");
        Ok(Self {
            k: k.clone(),
            h: h.clone(),
            h_derived: derived_subgroup(g, h),
            z,
        })
    }

    pub fn h_derived(&self) -> &Subgroup {
        &self.h_derived
    }

    /// Canonical representative of `x H'`.
    pub fn coset_rep<G: FiniteGroup + ?Sized>(&self, g: &G, x: u32) -> u32 {
        self.h_derived
            .elements()
            .iter()
            .map(|&d| g.mul(x, d))
            .min()
            .expect("nonempty")
    }

    /// `x^2 [x, z] H'` for `x` in `H`, `x^2 H'` otherwise, with the coset
    /// representative `z` supplied.
    pub fn apply_with<G: FiniteGroup + ?Sized>(&self, g: &G, z: u32, x: u32) -> Result<u32> {
        if !self.k.contains(x) {
            return Err(Error::ElementOutsideK);
        }
        if !self.k.contains(z) || self.h.contains(z) {
            return Err(Error::InvalidParams("z must lie in K but not in H".into()));
        }
        let sq = g.mul(x, x);
        let v = if self.h.contains(x) {
            g.mul(sq, g.comm(x, z))
        } else {
            sq
        };
        Ok(self.coset_rep(g, v))
    }

    pub fn apply<G: FiniteGroup + ?Sized>(&self, g: &G, x: u32) -> Result<u32> {
        self.apply_with(g, self.z, x)
    }

    /// Whether `t(x) = y H'`.
    pub fn maps_to<G: FiniteGroup + ?Sized>(&self, g: &G, x: u32, y: u32) -> Result<bool> {
        Ok(self.apply(g, x)? == self.coset_rep(g, y))
    }

    pub fn kernel<G: FiniteGroup + ?Sized>(&self, g: &G) -> TransferKernel {
        let id_rep = self.coset_rep(g, g.identity());
        let pre: Vec<u32> = self
            .k
            .elements()
            .iter()
            .copied()
            .filter(|&x| self.apply(g, x).expect("x in K") == id_rep)
            .collect();
        let preimage = closure(g, &pre);
        debug_assert_eq!(preimage.order(), pre.len());
        let k_derived = derived_subgroup(g, &self.k);
        TransferKernel {
            order: preimage.order() / k_derived.order(),
            preimage,
            k_derived,
        }
    }
}

pub fn transfer<G: FiniteGroup + ?Sized>(g: &G, k: &Subgroup, h: &Subgroup, x: u32) -> Result<u32> {
    Transfer::new(g, k, h)?.apply(g, x)
}

pub fn transfer_kernel<G: FiniteGroup + ?Sized>(g: &G, k: &Subgroup, h: &Subgroup) -> Result<TransferKernel> {
    Ok(Transfer::new(g, k, h)?.kernel(g))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pgroup::subgroup::{maximal_subgroups_of, whole};
    use crate::pgroup::{GroupParams, PGroup};

    #[test]
    fn independent_of_z_and_homomorphic() {
        let g = PGroup::new(GroupParams::gamma(2, 2, 1).unwrap()).unwrap();
        let all = whole(&g);
        for (_, h) in maximal_subgroups_of(&g, &all).subgroups {
            let t = Transfer::new(&g, &all, &h).unwrap();
            let zs: Vec<u32> = g.elements().filter(|&z| !h.contains(z)).step_by(7).collect();
            for x in g.elements().step_by(3) {
                let v = t.apply(&g, x).unwrap();
                for &z in &zs {
                    assert_eq!(t.apply_with(&g, z, x).unwrap(), v);
                }
                for y in g.elements().step_by(11) {
                    let lhs = t.apply(&g, g.mul(x, y)).unwrap();
                    let rhs = t.coset_rep(&g, g.mul(v, t.apply(&g, y).unwrap()));
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }

    #[test]
    fn errors() {
        let g = PGroup::new(GroupParams::gamma(2, 2, 1).unwrap()).unwrap();
        let all = whole(&g);
        let c = closure(&g, &[g.c12()]);
        assert!(matches!(Transfer::new(&g, &all, &c), Err(Error::IndexNotTwo(_))));
        let ms = maximal_subgroups_of(&g, &all).subgroups;
        let (_, h) = &ms[0];
        let (_, k2) = &maximal_subgroups_of(&g, h).subgroups[0];
        let t = Transfer::new(&g, h, k2).unwrap();
        let outside = g.elements().find(|&x| !h.contains(x)).unwrap();
        assert!(matches!(t.apply(&g, outside), Err(Error::ElementOutsideK)));
        assert_eq!(t.apply(&g, 0).unwrap(), t.coset_rep(&g, 0));
    }
}
