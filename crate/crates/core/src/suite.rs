//! The verification suite: one entry per acceptance criterion.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::collections::hash_map::Entry;
use std::collections::HashMap;

use crate::abelian::AbelianType;
use crate::arith::{is_fundamental, two_power_part};
use crate::error::Result;
use crate::genus::{genus_characters, lemma1_check, square_2torsion, Lemma1Case};
use crate::kuroda::{genus_field_h2, table1_predictions};
use crate::pgroup::gamma::{
    corollary2, corollary2_engine, expected_derived_generators, expected_kernel_generators,
    expected_transfer_values, lemma5_kernel, maximal_subgroups, transfer_arguments,
};
use crate::pgroup::{
    abelian_type_of, closure, derived_subgroup, distinguish, lower_central_series,
    generator_isomorphism, nonnormal_index4_types, quotient_group, trivial, verify_presentation, whole, Distinction,
    FiniteGroup, GroupParams, Mutation, PGroup, Transfer, DEFAULT_SAMPLES,
};
use crate::quadforms::{class_group, compose, prime_form, reduce};
use crate::tower::{classify, crosscheck_with_bound, invariants_with_bound, predict_with_bound, scan_with_bound, Check, FieldKind};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteConfig {
    /// Extends the grid to every `2 <= n, m <= grid` on top of `n + m <= 8`.
    pub grid: Option<u32>,
    pub seed: u64,
    pub samples: usize,
    pub class_bound: u64,
    /// `|d|` limit for the class-group axiom sweep.
    pub axiom_bound: i64,
    pub mutation: Mutation,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            grid: None,
            seed: 0,
            samples: DEFAULT_SAMPLES,
            class_bound: 2_000_000,
            axiom_bound: 20_000,
            mutation: Mutation::None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CriterionResult {
    pub id: u8,
    pub anchor: String,
    pub title: String,
    pub pass: bool,
    pub lines: Vec<Check>,
}

impl CriterionResult {
    fn new(id: u8, anchor: &str, title: &str, lines: Vec<Check>) -> Self {
        CriterionResult {
            id,
            anchor: anchor.into(),
            title: title.into(),
            pass: !lines.is_empty() && lines.iter().all(|c| c.pass),
            lines,
        }
    }

    fn failed(id: u8, anchor: &str, title: &str, err: crate::error::Error) -> Self {
        CriterionResult::new(id, anchor, title, vec![Check::new("evaluation", anchor, "ok".to_string(), err.to_string())])
    }
}

/// `(n, m)` with `2 <= n, m` and `n + m <= 8`, plus the square extension.
pub fn grid_points(grid: Option<u32>) -> Vec<(u32, u32)> {
    let mut pts = Vec::new();
    let top = grid.unwrap_or(0).max(6);
    for n in 2..=top {
        for m in 2..=top {
            if n + m <= 8 || grid.is_some_and(|g| n <= g && m <= g) {
                pts.push((n, m));
            }
        }
    }
    pts
}

fn ab(parts: &[u64]) -> AbelianType {
    AbelianType::new(parts.to_vec()).expect("powers of two")
}

fn group(cfg: &SuiteConfig, n: u32, m: u32, eps: u8) -> Result<PGroup> {
    PGroup::with_mutation(GroupParams::gamma(n, m, eps)?, cfg.mutation)
}

fn grid_eps(cfg: &SuiteConfig) -> Vec<(u32, u32, u8)> {
    grid_points(cfg.grid)
        .into_iter()
        .flat_map(|(n, m)| [(n, m, 0), (n, m, 1)])
        .collect()
}

fn per_point<F>(cfg: &SuiteConfig, f: F) -> Result<Vec<Check>>
where
    F: Fn(&PGroup, u32, u32, u8) -> Result<Vec<Check>> + Sync,
{
    let chunks: Vec<Vec<Check>> = grid_eps(cfg)
        .par_iter()
        .map(|&(n, m, eps)| f(&group(cfg, n, m, eps)?, n, m, eps))
        .collect::<Result<_>>()?;
    Ok(chunks.into_iter().flatten().collect())
}

fn c1_realization(cfg: &SuiteConfig) -> Result<Vec<Check>> {
    per_point(cfg, |g, n, m, eps| {
        let name = format!("Gamma_{{{n},{m},{eps}}}");
        let all = whole(g);
        let d = derived_subgroup(g, &all);
        Ok(vec![
            Check::new(format!("{name} order"), "Theorem 1", 1u64 << (n + m + 3), g.order() as u64),
            Check::new(
                format!("{name} G/G'"),
                "Theorem 1",
                ab(&[2, 2, 1 << n]).to_string(),
                abelian_type_of(g, &all, &d)?.to_string(),
            ),
            Check::new(
                format!("{name} G'"),
                "Theorem 1",
                ab(&[2, 1 << m]).to_string(),
                abelian_type_of(g, &d, &trivial(g))?.to_string(),
            ),
        ])
    })
}

fn c2_lcs(cfg: &SuiteConfig) -> Result<Vec<Check>> {
    per_point(cfg, |g, n, m, eps| {
        let name = format!("Gamma_{{{n},{m},{eps}}}");
        let lcs = lower_central_series(g);
        let mut out = vec![Check::new(format!("{name} class"), "Lemma 3", m as usize + 1, lcs.len() - 1)];
        for j in 3..=(m as usize + 2) {
            let want = closure(g, &[g.c13_pow(1 << (j - 2))]);
            let ok = lcs.get(j - 1).is_some_and(|s| *s == want);
            out.push(Check::new(format!("{name} G_{j} = <c13^{}>", 1 << (j - 2)), "Lemma 3", true, ok));
        }
        Ok(out)
    })
}

fn c3_tables(cfg: &SuiteConfig) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for (n, m) in [(2, 2), (3, 2)] {
        for eps in 0..=1 {
            let g = group(cfg, n, m, eps)?;
            let name = format!("Gamma_{{{n},{m},{eps}}}");
            let hs = maximal_subgroups(&g)?;
            let all = whole(&g);
            let derived = expected_derived_generators(&g)?;
            let values = expected_transfer_values(&g)?;
            let kernels = expected_kernel_generators(&g)?;
            let args = transfer_arguments(&g);
            for (j, h) in hs.iter().enumerate() {
                out.push(Check::new(
                    format!("{name} H_{}'", j + 1),
                    "Table 3",
                    true,
                    derived_subgroup(&g, h) == closure(&g, &derived[j]),
                ));
                let t = Transfer::new(&g, &all, h)?;
                for (i, label) in ["a1", "a2", "a3^(2^(n-1))"].iter().enumerate() {
                    out.push(Check::new(
                        format!("{name} t_{}({label})", j + 1),
                        "Table 4",
                        true,
                        t.maps_to(&g, args[i], values[j][i])?,
                    ));
                }
                if j >= 1 {
                    let ker = t.kernel(&g);
                    let mut gens = kernels[j - 1].clone();
                    gens.extend_from_slice(ker.k_derived.generators());
                    out.push(Check::new(
                        format!("{name} ker t_{}", j + 1),
                        "Section 4 kernels",
                        true,
                        closure(&g, &gens) == ker.preimage,
                    ));
                }
            }
        }
    }
    Ok(out)
}

fn c4_lemma5(cfg: &SuiteConfig) -> Result<Vec<Check>> {
    per_point(cfg, |g, n, m, eps| {
        Ok(vec![Check::new(
            format!("Gamma_{{{n},{m},{eps}}} |ker t|"),
            "Lemma 5",
            if eps == 0 { 8 } else { 4 },
            lemma5_kernel(g)?.order,
        )])
    })
}

fn c5_corollary2(cfg: &SuiteConfig) -> Result<Vec<Check>> {
    per_point(cfg, |g, n, m, eps| {
        let name = format!("Gamma_{{{n},{m},{eps}}}");
        let closed = corollary2(n, m);
        let engine = corollary2_engine(g)?;
        let rows = [
            ("H_1", &closed.h1, &engine.h1),
            ("H_2", &closed.h2, &engine.h2),
            ("H_3", &closed.h3, &engine.h3),
            ("H_4..7", &closed.h4_7, &engine.h4_7),
            ("H_gen", &closed.h_gen, &engine.h_gen),
            ("G'", &closed.derived, &engine.derived),
        ];
        Ok(rows
            .iter()
            .map(|(s, c, e)| Check::new(format!("{name} {s}"), "Corollary 2", c.to_string(), e.to_string()))
            .collect())
    })
}

fn multiset(types: &[AbelianType]) -> String {
    types.iter().map(|t| t.to_string()).collect::<Vec<_>>().join(" ")
}

fn c6_separation(cfg: &SuiteConfig) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    let g0 = group(cfg, 2, 2, 0)?;
    let g1 = group(cfg, 2, 2, 1)?;
    // two subgroups of each listed type
    let printed = |ts: [&[u64]; 4]| {
        let mut v: Vec<AbelianType> = ts.iter().flat_map(|t| [ab(t), ab(t)]).collect();
        v.sort();
        v
    };
    let t305 = printed([&[2, 2, 8], &[2, 8], &[4, 4], &[2, 8]]);
    let t306 = printed([&[2, 2, 4], &[2, 8], &[4, 8], &[2, 8]]);
    out.push(Check::new("Gamma_{2,2,0} nonnormal index 4", "Examples [128,305]", multiset(&t305), multiset(&nonnormal_index4_types(&g0))));
    out.push(Check::new("Gamma_{2,2,1} nonnormal index 4", "Examples [128,306]", multiset(&t306), multiset(&nonnormal_index4_types(&g1))));
    out.push(Check::new("Gamma_{2,2,0} vs Gamma_{2,2,1}", "Examples", Distinction::Distinct, distinguish(&g0, &g1)));

    let h0 = group(cfg, 1, 1, 0)?;
    let h1 = group(cfg, 1, 1, 1)?;
    out.push(Check::new("|Gamma_{1,1,e}|", "Prop. PS1", "32 32".to_string(), format!("{} {}", h0.order(), h1.order())));
    out.push(Check::new("Gamma_{1,1,0} vs Gamma_{1,1,1}", "Prop. PS1", Distinction::Distinct, distinguish(&h0, &h1)));

    for m in [2, 3] {
        let mut quotients = Vec::new();
        for eps in 0..=1 {
            let g = group(cfg, 1, m, eps)?;
            let lcs = lower_central_series(&g);
            let g4 = lcs.get(3).cloned().unwrap_or_else(|| trivial(&g));
            quotients.push(quotient_group(&g, &g4)?);
        }
        out.push(Check::new(
            format!("|Gamma_{{1,{m},e}}/Gamma_4|"),
            "Prop. PS2",
            "64 64".to_string(),
            format!("{} {}", quotients[0].order(), quotients[1].order()),
        ));
        let verdict = distinguish(&quotients[0], &quotients[1]);
        let mut computed = verdict.to_string();
        if verdict == Distinction::NotDistinguished
            && generator_isomorphism(&quotients[0], &quotients[1], &quotients[1].generators()).is_some()
        {
            computed.push_str("; a_i -> a_i is an isomorphism");
        }
        out.push(Check {
            name: format!("Gamma_{{1,{m},0}}/Gamma_4 vs Gamma_{{1,{m},1}}/Gamma_4"),
            anchor: "Prop. PS2".into(),
            expected: Distinction::Distinct.to_string(),
            pass: verdict == Distinction::Distinct,
            computed,
        });
    }
    Ok(out)
}

fn c7_lemma7(cfg: &SuiteConfig) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for n in 2..=5 {
        let g = group(cfg, n, 1, 0)?;
        let hs = maximal_subgroups(&g)?;
        // H = <a2 a3, a1, c12, c13>
        let h = closure(&g, &[g.mul(g.a2(), g.a3()), g.a1(), g.c12(), g.c13()]);
        out.push(Check::new(format!("Gamma_{{{n},1,0}} H = H_6"), "Lemma 7", true, h == hs[5]));
        let ker = Transfer::new(&g, &whole(&g), &h)?.kernel(&g);
        out.push(Check::new(format!("Gamma_{{{n},1,0}} |ker t_H|"), "Lemma 7", 8, ker.order));
    }
    Ok(out)
}

/// Closing table rows `(d, p, q, q', m, n)`.
pub const CLOSING_TABLE: [(i64, i64, i64, i64, u32, u32); 15] = [
    (-2244, 17, 3, 11, 2, 2),
    (-21828, 17, 3, 107, 2, 3),
    (-5412, 41, 3, 11, 3, 2),
    (-37092, 281, 3, 11, 2, 4),
    (-9348, 41, 19, 3, 3, 3),
    (-255972, 257, 3, 83, 4, 2),
    (-101796, 17, 499, 3, 2, 5),
    (-25764, 113, 19, 3, 3, 4),
    (-132612, 257, 43, 3, 4, 3),
    (-75108, 569, 3, 11, 5, 2),
    (-169796, 17, 11, 227, 2, 6),
    (-78276, 593, 3, 11, 3, 5),
    (-329988, 257, 3, 107, 4, 4),
    (-106788, 809, 3, 11, 5, 3),
    (-1886244, 8273, 19, 3, 6, 2),
];

/// `(d, p, q, q')`.
pub type FieldRow = (i64, i64, i64, i64);

/// Field lists of the examples: `(n, m, |d| limit, rows)`.
pub const FIELD_LISTS: [(u32, u32, i64, &[FieldRow]); 3] = [
    (2, 2, 50_000, &[(-2244, 17, 3, 11), (-20292, 89, 19, 3), (-26724, 17, 3, 131), (-30756, 233, 3, 11), (-33252, 17, 163, 3), (-46308, 17, 3, 227)]),
    (3, 2, 100_000, &[(-21828, 17, 3, 107), (-28356, 17, 3, 139), (-91428, 401, 3, 19), (-97988, 17, 11, 131)]),
    (2, 3, 100_000, &[(-5412, 41, 3, 11), (-34276, 41, 11, 19), (-58308, 113, 3, 43), (-70692, 137, 3, 43), (-88068, 41, 3, 179), (-90852, 113, 3, 67)]),
];

/// Printed `Cl(k(sqrt(-p)))` for the rows with `m < n - 1`.
pub const MINUS_P_CLASS_GROUPS: [(i64, [u64; 3]); 3] = [(-37092, [2, 4, 80]), (-101796, [2, 4, 32]), (-169796, [2, 4, 64])];

fn c8_fields(cfg: &SuiteConfig) -> Result<Vec<Check>> {
    let bound = cfg.class_bound;
    let rows: Vec<Vec<Check>> = CLOSING_TABLE
        .par_iter()
        .map(|&(d, p, q, qp, m, n)| {
            let c = classify(d)?;
            let inv = invariants_with_bound(d, bound)?;
            Ok(vec![
                Check::new(format!("{d} kind"), "closing table", FieldKind::Type4p.label(), c.kind.label()),
                Check::new(format!("{d} (p,q,q')"), "closing table", format!("{:?}", [p, q, qp]), format!("{:?}", c.primes)),
                Check::new(format!("{d} (m,n)"), "closing table", format!("({m},{n})"), format!("({},{})", inv.m, inv.n)),
            ])
        })
        .collect::<Result<_>>()?;
    let mut out: Vec<Check> = rows.into_iter().flatten().collect();

    let mut scans = HashMap::new();
    for (n, m, limit, list) in FIELD_LISTS {
        if let Entry::Vacant(e) = scans.entry(limit) {
            e.insert(scan_with_bound(-limit, -1, bound)?);
        }
        let found = &scans[&limit];
        // the lists print q < q', not the (ET) labeling
        let unordered = |d: i64, p: i64, q: i64, qp: i64| (d, p, q.min(qp), q.max(qp));
        let got: Vec<_> = found
            .iter()
            .filter(|r| r.classification.kind == FieldKind::Type4p && r.n == n && r.m == m)
            .map(|r| {
                let pr = &r.classification.primes;
                unordered(r.classification.d, pr[0], pr[1], pr[2])
            })
            .collect();
        let want: Vec<_> = list.iter().map(|&(d, p, q, qp)| unordered(d, p, q, qp)).collect();
        out.push(Check::new(
            format!("Type 4p, (n,m) = ({n},{m}), d > -{limit}"),
            "Examples field list",
            format!("{want:?}"),
            format!("{got:?}"),
        ));
    }

    for (d, printed) in MINUS_P_CLASS_GROUPS {
        let r = predict_with_bound(d, bound)?;
        let two: Vec<u64> = printed.iter().map(|&x| two_power_part(x)).collect();
        out.push(Check::new(
            format!("{d} Cl_2(k(sqrt(-p)))"),
            "Corollary 2 / closing table",
            ab(&two).to_string(),
            r.extensions[0].closed_form.to_string(),
        ));
    }
    Ok(out)
}

/// Printed 2-class groups of `k(sqrt(m))` for `m = -1, -q, q, -q', q', p, -p`.
pub const SEVEN_EXTENSIONS: [(i64, [&[u64]; 7]); 3] = [
    (-2244, [&[2, 2, 4], &[2, 8], &[2, 8], &[2, 8], &[2, 8], &[2, 2, 8], &[2, 2, 8]]),
    (-21828, [&[2, 2, 8], &[2, 16], &[2, 16], &[2, 16], &[2, 16], &[2, 2, 16], &[2, 4, 8]]),
    (-5412, [&[2, 2, 4], &[2, 8], &[2, 8], &[2, 8], &[2, 8], &[2, 2, 8], &[2, 2, 16]]),
];

/// Position of each Table-1 field in the printed `m` order.
const PRINTED_POSITION: [usize; 7] = [6, 5, 0, 1, 3, 2, 4];

fn c9_number_theory(cfg: &SuiteConfig) -> Result<Vec<Check>> {
    let d = -2244;
    let mut out = Vec::new();
    let t1 = table1_predictions(2, 2)?;
    let (_, printed) = SEVEN_EXTENSIONS[0];
    out.push(Check::new(
        "Table 1 h_2 vs printed class-group orders",
        "Table 1 / Examples",
        format!("{:?}", PRINTED_POSITION.map(|i| ab(printed[i]).order())),
        format!("{:?}", t1.iter().map(|r| r.h2).collect::<Vec<_>>()),
    ));
    for (e, printed) in SEVEN_EXTENSIONS {
        let r = predict_with_bound(e, cfg.class_bound)?;
        for (j, i) in PRINTED_POSITION.iter().enumerate() {
            out.push(Check::new(
                format!("{e} {}", r.extensions[j].field),
                "Corollary 2 / Examples",
                ab(printed[*i]).to_string(),
                r.extensions[j].closed_form.to_string(),
            ));
        }
    }

    let sq = square_2torsion(d)?;
    let two_p = reduce(compose(prime_form(d, 2)?, prime_form(d, 17)?)?)?;
    out.push(Check::new("Cl_2(k)^2 ∩ Cl_2(k)[2] = <[2p]>", "(E1)", format!("2 classes, {two_p}"), format!("{} classes, {}", sq.len(), sq.last().expect("identity"))));
    out.push(Check::new("h_2(k_gen)", "Prop. 1 / Examples", 16, genus_field_h2(2, 2)?));
    out.push(Check::new("Cl_2(k_gen)", "Examples", "(4,4)".to_string(), corollary2(2, 2).h_gen.to_string()));
    for (name, case) in [
        ("Lemma 1 (3, 17)", Lemma1Case::TwoAbove { q: 3, p: 17 }),
        ("Lemma 1 (17, 3, 11)", Lemma1Case::PAbove { p: 17, q: 3, qprime: 11 }),
    ] {
        out.push(Check::new(name, "Lemma 1", true, lemma1_check(case)?.holds));
    }
    let g = group(cfg, 2, 2, 1)?;
    let all = whole(&g);
    let kernels: Vec<usize> = maximal_subgroups(&g)?
        .iter()
        .map(|h| Transfer::new(&g, &all, h).map(|t| t.kernel(&g).order))
        .collect::<Result<_>>()?;
    out.push(Check::new(
        "#κ_j vs |ker t_j|",
        "Table 1 / Section 4",
        format!("{:?}", t1.iter().map(|r| r.kappa_order as usize).collect::<Vec<_>>()),
        format!("{kernels:?}"),
    ));
    let full = crosscheck_with_bound(d, cfg.class_bound)?;
    let failing: Vec<&str> = full.checks.iter().filter(|c| !c.pass).map(|c| c.name.as_str()).collect();
    out.push(Check::new("crosscheck -2244", "crosscheck", String::new(), failing.join("; ")));
    Ok(out)
}

/// Generating set of a table group given by rows.
fn table_generators(table: &[Vec<usize>]) -> Vec<usize> {
    let h = table.len();
    let mut inside = vec![false; h];
    inside[0] = true;
    let mut members = vec![0usize];
    let mut gens = Vec::new();
    for x in 0..h {
        if inside[x] {
            continue;
        }
        gens.push(x);
        let mut i = 0;
        members.push(x);
        inside[x] = true;
        while i < members.len() {
            for &gg in &gens {
                let y = table[members[i]][gg];
                if !inside[y] {
                    inside[y] = true;
                    members.push(y);
                }
            }
            i += 1;
        }
    }
    gens
}

/// Identity, Latin square and associativity on generators (Light's test).
pub fn table_is_group(table: &[Vec<usize>]) -> bool {
    let h = table.len();
    let perm = |it: Vec<usize>| {
        let mut seen = vec![false; h];
        it.into_iter().all(|x| x < h && !std::mem::replace(&mut seen[x], true))
    };
    let identity = (0..h).all(|x| table[0][x] == x && table[x][0] == x);
    let latin = (0..h).all(|x| perm(table[x].clone()) && perm((0..h).map(|y| table[y][x]).collect()));
    let gens = table_generators(table);
    let assoc = gens.iter().all(|&g| {
        (0..h).all(|x| (0..h).all(|y| table[table[x][y]][g] == table[x][table[y][g]]))
    });
    identity && latin && assoc
}

fn c10_oracles(cfg: &SuiteConfig) -> Result<Vec<Check>> {
    let mut out = per_point(cfg, |g, n, m, eps| {
        let r = verify_presentation(g, cfg.seed, cfg.samples);
        let failed: Vec<String> = r.checks.iter().filter(|c| !c.pass).map(|c| format!("{}: {}", c.name, c.detail)).collect();
        Ok(vec![Check::new(
            format!("verify Gamma_{{{n},{m},{eps}}} (seed {})", cfg.seed),
            "Appendix Prop. 3",
            String::new(),
            failed.join("; "),
        )])
    })?;
    let discs: Vec<i64> = (-cfg.axiom_bound..=-3).filter(|&d| is_fundamental(d)).collect();
    let results: Vec<(i64, bool, bool)> = discs
        .par_iter()
        .map(|&d| {
            let cg = class_group(d)?;
            let axioms = table_is_group(&cg.composition_table());
            let mut genus = true;
            for f in &cg.classes {
                let prod: i32 = genus_characters(d, f)?.iter().map(|c| c.value).product();
                genus &= prod == 1;
            }
            Ok((d, axioms, genus))
        })
        .collect::<Result<_>>()?;
    let bad_axioms: Vec<i64> = results.iter().filter(|r| !r.1).map(|r| r.0).collect();
    let bad_genus: Vec<i64> = results.iter().filter(|r| !r.2).map(|r| r.0).collect();
    out.push(Check::new(
        format!("class-group axioms, {} discriminants with |d| <= {}", discs.len(), cfg.axiom_bound),
        "oracle",
        "[]".to_string(),
        format!("{bad_axioms:?}"),
    ));
    out.push(Check::new(
        "product of genus characters is +1 on every class",
        "oracle",
        "[]".to_string(),
        format!("{bad_genus:?}"),
    ));
    Ok(out)
}

pub const CRITERIA: [(u8, &str, &str); 10] = [
    (1, "Theorem 1", "group realization"),
    (2, "Lemma 3", "lower central series"),
    (3, "Tables 2-4", "commutator subgroups, transfers and kernels"),
    (4, "Lemma 5", "transfer kernel from H_2 to H_1 ∩ H_2"),
    (5, "Corollary 2", "intermediate 2-class groups"),
    (6, "Examples", "separation by fingerprints"),
    (7, "Lemma 7", "kernel of order 8 in Gamma_{n,1,0}"),
    (8, "Field tables", "classification and invariants of the listed fields"),
    (9, "Table 1", "number-theory cross-checks on d = -2244"),
    (10, "Oracles", "presentation, class-group and genus oracles"),
];

pub fn run_criterion(id: u8, cfg: &SuiteConfig) -> CriterionResult {
    let (_, anchor, title) = CRITERIA[(id - 1) as usize];
    let lines = match id {
        1 => c1_realization(cfg),
        2 => c2_lcs(cfg),
        3 => c3_tables(cfg),
        4 => c4_lemma5(cfg),
        5 => c5_corollary2(cfg),
        6 => c6_separation(cfg),
        7 => c7_lemma7(cfg),
        8 => c8_fields(cfg),
        9 => c9_number_theory(cfg),
        _ => c10_oracles(cfg),
    };
    match lines {
        Ok(lines) => CriterionResult::new(id, anchor, title, lines),
        Err(e) => CriterionResult::failed(id, anchor, title, e),
    }
}

/// Lines that cannot pass as stated: the quotients by `Γ_4` coincide for
/// `m >= 3` because `a2^2 = c13^(2^(m-1) ε)` already lies in `Γ_4 = <c13^4>`.
pub const KNOWN_UNATTAINABLE: [(u8, &str); 1] = [(6, "Gamma_{1,3,0}/Gamma_4 vs Gamma_{1,3,1}/Gamma_4")];

pub fn run_suite(cfg: &SuiteConfig) -> Vec<CriterionResult> {
    (1..=10).map(|id| run_criterion(id, cfg)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_grid() {
        let pts = grid_points(None);
        assert_eq!(pts.len(), 15);
        assert!(pts.iter().all(|&(n, m)| n >= 2 && m >= 2 && n + m <= 8));
        assert!(grid_points(Some(5)).contains(&(5, 5)));
    }

    #[test]
    fn light_test_rejects_nonassociative() {
        let z3 = vec![vec![0, 1, 2], vec![1, 2, 0], vec![2, 0, 1]];
        assert!(table_is_group(&z3));
        // a Latin square with identity that is not a group (order 5 loop)
        let loop5 = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 4, 0, 1, 3],
            vec![3, 2, 4, 0, 1],
            vec![4, 3, 1, 2, 0],
        ];
        assert!(!table_is_group(&loop5));
    }
}
