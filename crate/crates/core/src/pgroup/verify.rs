//! Consistency checks of the collection engine that do not trust it.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use std::collections::HashSet;

use super::engine::PGroup;
use super::finite::FiniteGroup;
use super::params::Family;
use super::subgroup::{derived_subgroup, whole};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyCheck {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub group: String,
    pub seed: u64,
    pub samples: usize,
    pub checks: Vec<VerifyCheck>,
}

impl VerifyReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    fn push(&mut self, name: &str, pass: bool, detail: String) {
        self.checks.push(VerifyCheck {
            name: name.to_string(),
            pass,
            detail,
        });
    }
}

pub const DEFAULT_SAMPLES: usize = 10_000;

/// Relations computed from commutators of the generators.
fn relations(g: &PGroup) -> Vec<(&'static str, bool)> {
    let p = g.params();
    let (a1, a2, a3) = (g.a1(), g.a2(), g.a3());
    let c12 = g.comm(a1, a2);
    let c13 = g.comm(a1, a3);
    let c23 = g.comm(a2, a3);
    let id = g.identity();
    let pow = |x, k: u64| g.pow(x, k);
    let big_n = 1u64 << p.n;
    match p.family {
        Family::Gamma => {
            let half = 1u64 << (p.m - 1);
            vec![
                ("c12 letter = [a1,a2]", c12 == g.c12()),
                ("c13 letter = [a1,a3]", c13 == g.c13()),
                ("a1^2 = c13^-1", pow(a1, 2) == g.inv(c13)),
                ("a2^2 = c13^(2^(m-1) eps)", pow(a2, 2) == pow(c13, half * p.eps as u64)),
                ("a3^(2^n) = c12 c13^(2^(m-1))", pow(a3, big_n) == g.mul(c12, pow(c13, half))),
                ("c23 = 1", c23 == id),
                ("c12^2 = 1", pow(c12, 2) == id),
                ("c13^(2^m) = 1", pow(c13, 1 << p.m) == id),
            ]
        }
        Family::Gamma4r => {
            let central = |x: u32| g.generators().iter().all(|&a| g.mul(x, a) == g.mul(a, x));
            vec![
                ("a1^2 = c12", pow(a1, 2) == c12),
                ("a2^2 = c12", pow(a2, 2) == c12),
                ("a3^(2^n) = c13", pow(a3, big_n) == c13),
                ("c23 = 1", c23 == id),
                ("c12^2 = 1", pow(c12, 2) == id),
                ("c13^2 = 1", pow(c13, 2) == id),
                ("c12, c13 central", central(c12) && central(c13)),
            ]
        }
    }
}

/// Runs the relation, normal-form, associativity and commutator-identity
/// checks with a seeded sample of `samples` triples.
pub fn verify_presentation(g: &PGroup, seed: u64, samples: usize) -> VerifyReport {
    let mut report = VerifyReport {
        group: g.params().to_string(),
        seed,
        samples,
        checks: Vec::new(),
    };

    let rels = relations(g);
    let failed: Vec<&str> = rels.iter().filter(|(_, ok)| !ok).map(|(n, _)| *n).collect();
    report.push(
        "relations",
        failed.is_empty(),
        if failed.is_empty() {
            format!("{} relations hold", rels.len())
        } else {
            format!("failed: {}", failed.join("; "))
        },
    );

    // every normal-form word evaluated through the engine, not by encoding
    let (a1, a2, a3, c12, c13) = (g.a1(), g.a2(), g.a3(), g.c12(), g.c13());
    let p = g.params();
    let m_range = match p.family {
        Family::Gamma => 1u64 << p.m,
        Family::Gamma4r => 2,
    };
    let mut words = HashSet::new();
    for e1 in 0..2 {
        for e2 in 0..2 {
            for e3 in 0..(1u64 << p.n) {
                for f1 in 0..2 {
                    for f2 in 0..m_range {
                        let x = [
                            g.pow(a1, e1),
                            g.pow(a2, e2),
                            g.pow(a3, e3),
                            g.pow(c12, f1),
                            g.pow(c13, f2),
                        ]
                        .into_iter()
                        .fold(g.identity(), |acc, y| g.mul(acc, y));
                        words.insert(x);
                    }
                }
            }
        }
    }
    let generated = whole(g).order();
    report.push(
        "normal forms",
        words.len() == p.order() && generated == p.order(),
        format!(
            "{} distinct words, <a1,a2,a3> of order {generated}, expected {}",
            words.len(),
            p.order()
        ),
    );

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = g.order() as u32;
    let mut draw = || -> [u32; 3] { [0; 3].map(|_| rng.random_range(0..n)) };
    let triples: Vec<[u32; 3]> = (0..samples).map(|_| draw()).collect();

    let bad = triples
        .iter()
        .filter(|[x, y, z]| g.mul(g.mul(*x, *y), *z) != g.mul(*x, g.mul(*y, *z)))
        .count();
    report.push("associativity", bad == 0, format!("{bad} of {samples} triples fail"));

    let all = whole(g);
    let d = derived_subgroup(g, &all);
    let metabelian = d
        .generators()
        .iter()
        .all(|&x| d.generators().iter().all(|&y| g.mul(x, y) == g.mul(y, x)));
    report.push("metabelian", metabelian, format!("|G'| = {}", d.order()));

    let c3 = |x, y, z| g.comm(g.comm(x, y), z);
    let mut bad_expand = 0;
    let mut bad_hall_witt = 0;
    let mut bad_witt = 0;
    for &[x, y, z] in &triples {
        // [xy, z] = [x, z][x, z, y][y, z] and [x, yz] = [x, z][x, y][x, y, z]
        let lhs = g.comm(g.mul(x, y), z);
        let rhs = g.mul(g.mul(g.comm(x, z), c3(x, z, y)), g.comm(y, z));
        let lhs2 = g.comm(x, g.mul(y, z));
        let rhs2 = g.mul(g.mul(g.comm(x, z), g.comm(x, y)), c3(x, y, z));
        if lhs != rhs || lhs2 != rhs2 || g.comm(x, y) != g.inv(g.comm(y, x)) {
            bad_expand += 1;
        }
        let hw = [
            g.conj(c3(x, g.inv(y), z), y),
            g.conj(c3(y, g.inv(z), x), z),
            g.conj(c3(z, g.inv(x), y), x),
        ]
        .into_iter()
        .fold(g.identity(), |acc, w| g.mul(acc, w));
        if hw != g.identity() {
            bad_hall_witt += 1;
        }
        let w = g.mul(g.mul(c3(x, y, z), c3(y, z, x)), c3(z, x, y));
        if w != g.identity() {
            bad_witt += 1;
        }
    }
    report.push(
        "commutator expansion",
        bad_expand == 0,
        format!("{bad_expand} of {samples} triples fail"),
    );
    report.push(
        "Hall-Witt identity",
        bad_hall_witt == 0,
        format!("{bad_hall_witt} of {samples} triples fail"),
    );
    report.push(
        "Witt congruence",
        bad_witt == 0,
        format!("{bad_witt} of {samples} triples fail"),
    );

    // the same identities on the generators themselves
    let gens = [a1, a2, a3];
    let c = |i: usize, j: usize| g.comm(gens[i], gens[j]);
    let cc = |i: usize, j: usize, l: usize| c3(gens[i], gens[j], gens[l]);
    let mut bad_gen = Vec::new();
    for i in 0..3 {
        for j in 0..3 {
            for l in 0..3 {
                let ok = g.comm(g.mul(gens[i], gens[j]), gens[l])
                    == g.mul(g.mul(c(i, l), c(j, l)), cc(i, l, j))
                    && g.comm(gens[i], g.mul(gens[j], gens[l]))
                        == g.mul(g.mul(c(i, j), c(i, l)), cc(i, j, l))
                    && cc(i, j, l) == g.inv(cc(j, i, l))
                    && g.mul(g.mul(cc(i, j, l), cc(j, l, i)), cc(l, i, j)) == g.identity();
                if !ok {
                    bad_gen.push(format!("({},{},{})", i + 1, j + 1, l + 1));
                }
            }
        }
    }
    report.push(
        "generator commutator identities",
        bad_gen.is_empty(),
        if bad_gen.is_empty() {
            "27 index triples".into()
        } else {
            format!("failed at {}", bad_gen.join(" "))
        },
    );

    // c13 inverted by a3: [c13, a3] = c13^-2
    if p.family == Family::Gamma {
        let ok = g.comm(c13, a3) == g.c13_pow(-2);
        report.push("[c13, a3] = c13^-2", ok, String::new());
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pgroup::{GroupParams, Mutation};

    #[test]
    fn passes_on_small_grid() {
        for n in 1..=3 {
            for m in 1..=3 {
                for eps in 0..=1 {
                    let g = PGroup::new(GroupParams::gamma(n, m, eps).unwrap()).unwrap();
                    let r = verify_presentation(&g, 7, 2000);
                    assert!(r.all_pass(), "{:?}", r);
                }
            }
        }
        for n in 1..=4 {
            let g = PGroup::new(GroupParams::gamma4r(n).unwrap()).unwrap();
            assert!(verify_presentation(&g, 7, 2000).all_pass());
        }
    }

    #[test]
    fn mutations_are_caught() {
        let p = GroupParams::gamma(2, 2, 1).unwrap();
        let g = PGroup::with_mutation(p, Mutation::FlipA3A1).unwrap();
        let r = verify_presentation(&g, 1, 1000);
        let rel = r.checks.iter().find(|c| c.name == "relations").unwrap();
        assert!(!rel.pass);
        let g = PGroup::with_mutation(p, Mutation::A3CentralizesC13).unwrap();
        assert!(!verify_presentation(&g, 1, 1000).all_pass());
    }
}
