//! Property tests against independent oracles.

use std::collections::BTreeSet;

use proptest::prelude::*;

use classtower::arith::{factor, is_fundamental, is_prime, isqrt, kronecker};
use classtower::genus::genus_characters;
use classtower::pgroup::{FiniteGroup, GroupParams, PGroup};
use classtower::quadforms::{class_group, compose, reduce, QuadForm};
use classtower::tower::scan;

fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut r = 1u64;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            r = (r as u128 * b as u128 % m as u128) as u64;
        }
        b = (b as u128 * b as u128 % m as u128) as u64;
        e >>= 1;
    }
    r
}

fn trial_prime(n: u64) -> bool {
    n >= 2 && (2..).take_while(|k| k * k <= n).all(|k| !n.is_multiple_of(k))
}

fn neg_fundamental() -> impl Strategy<Value = i64> {
    (3i64..20_000).prop_map(|x| -x).prop_filter("fundamental", |&d| is_fundamental(d))
}

/// Class number from the analytic formula `h = -(w / 2|d|) Σ_{x<|d|} x (d/x)`.
fn dirichlet_h(d: i64) -> i64 {
    let n = -d;
    let w = match d {
        -3 => 6,
        -4 => 4,
        _ => 2,
    };
    let s: i64 = (1..n).map(|x| x * kronecker(d, x) as i64).sum();
    -w * s / (2 * n)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn kronecker_matches_euler(a in -10_000i64..10_000, idx in 0usize..200) {
        let p = (3u64..).filter(|&k| trial_prime(k)).nth(idx).unwrap();
        let r = a.rem_euclid(p as i64) as u64;
        let want = match pow_mod(r, (p - 1) / 2, p) {
            0 => 0,
            1 => 1,
            _ => -1,
        };
        prop_assert_eq!(kronecker(a, p as i64), want);
    }

    #[test]
    fn kronecker_multiplicative(a in -500i64..500, b in -500i64..500, n in 1i64..5000) {
        prop_assert_eq!(kronecker(a * b, n), kronecker(a, n) * kronecker(b, n));
    }

    #[test]
    fn factor_is_prime_factorization(n in 1u64..10_000_000) {
        let fs = factor(n).unwrap();
        prop_assert_eq!(fs.iter().product::<u64>(), n);
        prop_assert!(fs.iter().all(|&p| trial_prime(p)));
        prop_assert!(fs.windows(2).all(|w| w[0] <= w[1]));
        prop_assert_eq!(is_prime(n), trial_prime(n));
    }

    #[test]
    fn isqrt_floor(n in 0u128..u64::MAX as u128) {
        let r = isqrt(n);
        prop_assert!(r * r <= n && (r + 1) * (r + 1) > n);
    }

    #[test]
    fn fundamental_definition(d in -20_000i64..20_000) {
        let sqfree = |x: i64| (2..).take_while(|k: &i64| k * k <= x.abs()).all(|k| x % (k * k) != 0);
        let want = d != 0 && d != 1 && match d.rem_euclid(4) {
            1 => sqfree(d),
            0 => {
                let e = d / 4;
                matches!(e.rem_euclid(4), 2 | 3) && sqfree(e)
            }
            _ => false,
        };
        prop_assert_eq!(is_fundamental(d), want);
    }

    #[test]
    fn reduction_is_class_invariant(d in neg_fundamental(), i in 0usize..1000, steps in proptest::collection::vec(-4i64..5, 1..6)) {
        let cg = class_group(d).unwrap();
        let f = cg.classes[i % cg.classes.len()];
        // the word T^k1 S T^k2 S ... in SL_2(Z)
        let (mut p, mut q, mut r, mut s) = (1i64, 0i64, 0i64, 1i64);
        for k in steps {
            (q, s) = (q + k * p, s + k * r);
            (p, q, r, s) = (q, -p, s, -r);
        }
        prop_assert_eq!(p * s - q * r, 1);
        let g = f.transform(p, q, r, s);
        prop_assert_eq!(g.disc(), d);
        let rg = reduce(g).unwrap();
        prop_assert!(rg.is_reduced_definite());
        prop_assert_eq!(rg, f);
    }

    #[test]
    fn composition_is_abelian_group_law(d in neg_fundamental(), i in 0usize..1000, j in 0usize..1000, k in 0usize..1000) {
        let cg = class_group(d).unwrap();
        let h = cg.classes.len();
        let (f, g, e) = (cg.classes[i % h], cg.classes[j % h], cg.classes[k % h]);
        let one = QuadForm::principal(d);
        prop_assert_eq!(compose(f, g).unwrap(), compose(g, f).unwrap());
        prop_assert_eq!(compose(compose(f, g).unwrap(), e).unwrap(), compose(f, compose(g, e).unwrap()).unwrap());
        prop_assert_eq!(compose(f, one).unwrap(), f);
        prop_assert_eq!(compose(f, reduce(f.inverse()).unwrap()).unwrap(), one);
    }

    #[test]
    fn class_number_matches_analytic_formula(d in neg_fundamental()) {
        prop_assert_eq!(class_group(d).unwrap().h as i64, dirichlet_h(d));
    }

    #[test]
    fn genus_characters_count_and_product(d in neg_fundamental()) {
        let cg = class_group(d).unwrap();
        let mut genera = BTreeSet::new();
        let mut t = 0;
        for f in &cg.classes {
            let chars = genus_characters(d, f).unwrap();
            t = chars.len();
            prop_assert_eq!(chars.iter().map(|c| c.value).product::<i32>(), 1);
            genera.insert(chars.iter().map(|c| c.value).collect::<Vec<_>>());
        }
        prop_assert_eq!(genera.len(), 1usize << (t - 1));
        let two_rank = cg.abelian_type.as_ref().unwrap().rank();
        prop_assert_eq!(two_rank, t - 1);
    }

    #[test]
    fn engine_is_a_group(n in 1u32..5, m in 1u32..5, eps in 0u8..2, x in any::<u32>(), y in any::<u32>(), z in any::<u32>()) {
        let g = PGroup::new(GroupParams::gamma(n, m, eps).unwrap()).unwrap();
        let ord = g.order() as u32;
        let (x, y, z) = (x % ord, y % ord, z % ord);
        prop_assert_eq!(g.mul(g.mul(x, y), z), g.mul(x, g.mul(y, z)));
        prop_assert_eq!(g.mul(x, g.inv(x)), g.identity());
        prop_assert_eq!(g.mul(g.identity(), x), x);
        prop_assert_eq!(g.encode(&g.decode(x)), x);
        prop_assert!(g.element_order(x).is_power_of_two());
        prop_assert_eq!(g.pow(x, 1 << (n + m + 3)), g.identity());
    }
}

#[test]
fn scan_is_independent_of_thread_count() {
    let run = |threads| {
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .unwrap()
            .install(|| scan(-12_000, -1).unwrap())
    };
    let one = run(1);
    assert!(one.iter().any(|r| r.classification.d == -2244));
    assert_eq!(one, run(4));
    assert!(one.windows(2).all(|w| w[0].classification.d > w[1].classification.d));
}
