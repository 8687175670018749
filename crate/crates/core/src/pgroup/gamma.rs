//! The seven maximal subgroups `H_1, ..., H_7` of `Γ_{n,m,ε}` in their
//! customary order, and `H_gen = G^2`.

use serde::{Deserialize, Serialize};

use super::engine::PGroup;
use super::finite::FiniteGroup;
use super::params::Family;
use super::subgroup::{closure, frattini, maximal_subgroups_of, whole, Subgroup};
use super::transfer::{Transfer, TransferKernel};
use crate::abelian::AbelianType;
use crate::error::{Error, Result};

/// Functional on `(a1, a2, a3) mod Φ` whose kernel is `H_j`, bit `i` for `a_{i+1}`.
pub const FUNCTIONALS: [u32; 7] = [0b100, 0b001, 0b101, 0b010, 0b011, 0b110, 0b111];

/// `H_1, ..., H_7`:
/// `<a1, a2, a3^2>`, `<a2, a3>`, `<a1 a3, a2>`, `<a1, a3>`, `<a1 a2, a3>`,
/// `<a2 a3, a1>`, `<a1 a2, a2 a3>`, each together with `Φ(G)`.
pub fn maximal_subgroups(g: &PGroup) -> Result<Vec<Subgroup>> {
    let ms = maximal_subgroups_of(g, &whole(g));
    if ms.basis.len() != 3 {
        return Err(Error::RankMismatch(ms.basis.len()));
    }
    debug_assert_eq!(ms.basis, g.generators());
    Ok(FUNCTIONALS
        .iter()
        .map(|f| {
            ms.subgroups
                .iter()
                .find(|(g, _)| g == f)
                .map(|(_, h)| h.clone())
                .expect("all seven functionals present")
        })
        .collect())
}

/// `H_gen = G^2 = <a3^2, c13, c12>`.
pub fn h_gen(g: &PGroup) -> Subgroup {
    closure(g, &[g.pow(g.a3(), 2), g.c13(), g.c12()])
}

/// `Φ(G)` computed from squares; equals [`h_gen`].
pub fn frattini_subgroup(g: &PGroup) -> Subgroup {
    frattini(g, &whole(g))
}

fn require_gamma(g: &PGroup, min_n: u32, min_m: u32) -> Result<()> {
    let p = g.params();
    if p.family != Family::Gamma || p.n < min_n || p.m < min_m {
        return Err(Error::InvalidParams(format!(
            "{p}: need Gamma with n >= {min_n}, m >= {min_m}"
        )));
    }
    Ok(())
}

/// Generators of `H_j'` as tabulated, `μ = m`:
/// `<c12>`, `<c13^2>`, `<c12, c13^2>`, `<c13>`, `<c13>`, `<c12 c13, c13^2>` twice.
pub fn expected_derived_generators(g: &PGroup) -> Result<[Vec<u32>; 7]> {
    require_gamma(g, 1, 2)?;
    let (c12, c13) = (g.c12(), g.c13());
    let c13sq = g.c13_pow(2);
    let c12c13 = g.mul(c12, c13);
    Ok([
        vec![c12, g.c13_pow(1 << g.params().m)],
        vec![c13sq],
        vec![c12, c13sq],
        vec![c13],
        vec![c13],
        vec![c12c13, c13sq],
        vec![c12c13, c13sq],
    ])
}

/// The three arguments `a1`, `a2`, `a3^(2^(n-1))` of the transfer table.
pub fn transfer_arguments(g: &PGroup) -> [u32; 3] {
    let half = 1u64 << (g.params().n - 1);
    [g.a1(), g.a2(), g.pow(g.a3(), half)]
}

/// Values `t_j(a1)`, `t_j(a2)`, `t_j(a3^(2^(n-1)))` modulo `H_j'` predicted
/// from the exponents `2u1 = 0`, `2u2 = 2^(m-1) ε`, `2u3 = 2^(m-1)`, `v1 = 0`.
pub fn expected_transfer_values(g: &PGroup) -> Result<[[u32; 3]; 7]> {
    require_gamma(g, 1, 2)?;
    let p = g.params();
    let half = 1i64 << (p.m - 1);
    let (c12, c13, id) = (g.c12(), g.c13(), g.identity());
    Ok([
        [id, g.c13_pow(half * p.eps as i64), g.c13_pow(half)],
        [c13, c12, c12],
        [c13, id, id],
        [c12, id, c12],
        [id, id, c12],
        [id, id, c12],
        [c13, id, c12],
    ])
}

/// Generators of `ker t_j` modulo `G'` for `j = 2..7`; `ker t_1` is left open.
pub fn expected_kernel_generators(g: &PGroup) -> Result<[Vec<u32>; 6]> {
    require_gamma(g, 1, 2)?;
    let [a1, a2, a3h] = transfer_arguments(g);
    let m = |x, y| g.mul(x, y);
    Ok([
        vec![m(a2, a3h)],
        vec![a2, a3h],
        vec![a2, m(a1, a3h)],
        vec![a1, a2],
        vec![a1, a2],
        vec![a2, m(a1, a3h)],
    ])
}

/// Kernel of the transfer `H_2/H_2' -> A/A'` with `A = H_1 ∩ H_2`.
pub fn lemma5_kernel(g: &PGroup) -> Result<TransferKernel> {
    let hs = maximal_subgroups(g)?;
    let a: Vec<u32> = hs[1].elements().iter().copied().filter(|&x| hs[0].contains(x)).collect();
    let a = closure(g, &a);
    Ok(Transfer::new(g, &hs[1], &a)?.kernel(g))
}

/// Closed-form abelianizations of the subgroups fixing the intermediate fields.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Corollary2 {
    pub h1: AbelianType,
    pub h2: AbelianType,
    pub h3: AbelianType,
    /// Shared by `H_4, ..., H_7`.
    pub h4_7: AbelianType,
    pub h_gen: AbelianType,
    pub derived: AbelianType,
}

fn ab(parts: &[u64]) -> AbelianType {
    AbelianType::new(parts.to_vec()).expect("powers of two")
}

pub fn corollary2(n: u32, m: u32) -> Corollary2 {
    let (pn, pm) = (1u64 << n, 1u64 << m);
    let h1 = if m + 1 >= n {
        ab(&[2, 2 * pm, pn / 2])
    } else {
        ab(&[2, pm, pn])
    };
    Corollary2 {
        h1,
        h2: ab(&[2, 2, 2 * pn]),
        h3: ab(&[2, 2, pn]),
        h4_7: ab(&[2, 2 * pn]),
        h_gen: ab(&[pn, pm]),
        derived: ab(&[2, pm]),
    }
}

/// The same invariants read off the engine.
pub fn corollary2_engine(g: &PGroup) -> Result<Corollary2> {
    use super::subgroup::{abelian_type_of, abelianization, derived_subgroup, trivial};
    let hs = maximal_subgroups(g)?;
    let tail: Vec<AbelianType> = hs[3..].iter().map(|h| abelianization(g, h)).collect();
    if tail.iter().any(|t| *t != tail[0]) {
        return Err(Error::InvalidParams(format!(
            "H_4..H_7 abelianizations differ: {}",
            tail.iter().map(|t| t.to_string()).collect::<Vec<_>>().join(" ")
        )));
    }
    let d = derived_subgroup(g, &whole(g));
    Ok(Corollary2 {
        h1: abelianization(g, &hs[0]),
        h2: abelianization(g, &hs[1]),
        h3: abelianization(g, &hs[2]),
        h4_7: tail[0].clone(),
        h_gen: abelianization(g, &h_gen(g)),
        derived: abelian_type_of(g, &d, &trivial(g))?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pgroup::GroupParams;

    #[test]
    fn labeled_generators() {
        let g = PGroup::new(GroupParams::gamma(2, 2, 1).unwrap()).unwrap();
        let hs = maximal_subgroups(&g).unwrap();
        let (a1, a2, a3) = (g.a1(), g.a2(), g.a3());
        let m = |x, y| g.mul(x, y);
        let pairs = [
            (a1, a2),
            (a2, a3),
            (m(a1, a3), a2),
            (a1, a3),
            (m(a1, a2), a3),
            (m(a2, a3), a1),
            (m(a1, a2), m(a2, a3)),
        ];
        for (j, (h, (x, y))) in hs.iter().zip(pairs).enumerate() {
            assert!(h.contains(x) && h.contains(y), "H_{}", j + 1);
        }
        assert!(!hs[0].contains(a3));
        assert_eq!(h_gen(&g), frattini_subgroup(&g));
        assert_eq!(h_gen(&g).order(), 16);
    }

    #[test]
    fn small_tables() {
        use crate::pgroup::subgroup::derived_subgroup;
        for eps in 0..=1 {
            let g = PGroup::new(GroupParams::gamma(2, 2, eps).unwrap()).unwrap();
            let hs = maximal_subgroups(&g).unwrap();
            let want = expected_derived_generators(&g).unwrap();
            for (h, gens) in hs.iter().zip(want.iter()) {
                assert_eq!(derived_subgroup(&g, h), closure(&g, gens));
            }
            assert_eq!(lemma5_kernel(&g).unwrap().order, if eps == 0 { 8 } else { 4 });
        }
        let g = PGroup::new(GroupParams::gamma(2, 2, 1).unwrap()).unwrap();
        assert_eq!(corollary2_engine(&g).unwrap(), corollary2(2, 2));
    }
}
