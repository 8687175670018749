//! Field classification, tower invariants, predictions and the
//! number-theory/group-theory cross-check.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::fmt::Display;

use crate::abelian::AbelianType;
use crate::arith::{field_discriminant, is_fundamental, kronecker, log2_exact, prime_discriminants};
use crate::error::{Error, Result};
use crate::genus::{lemma1_check, square_2torsion_with_bound, Lemma1Case};
use crate::kuroda::{genus_field_h2, kuroda_h2, quadratic_h2, table1_predictions, KurodaLayout, Radicand};
use crate::pgroup::gamma::{corollary2, corollary2_engine, lemma5_kernel, maximal_subgroups, transfer_arguments};
use crate::pgroup::{
    abelianization, fingerprint, whole, FiniteGroup, GroupParams, PGroup, Transfer, MAX_LOG_ORDER,
};
use crate::quadforms::{class_group_with_bound, compose, prime_form, reduce, two_part, wide_h2_with_bound, DEFAULT_CLASS_BOUND};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum FieldKind {
    Type4p,
    Type4r,
    TypePS1,
    Other,
}

impl FieldKind {
    pub fn label(self) -> &'static str {
        match self {
            FieldKind::Type4p => "4p",
            FieldKind::Type4r => "4r",
            FieldKind::TypePS1 => "PS1",
            FieldKind::Other => "other",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessCheck {
    pub condition: String,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldClassification {
    pub d: i64,
    pub kind: FieldKind,
    /// `[p, q, q']` for Types 4p/4r, `[d1, d2, d3, d4]` for PS1, the prime
    /// discriminants otherwise.
    pub primes: Vec<i64>,
    pub witness: Vec<WitnessCheck>,
}

impl FieldClassification {
    /// `(p, q, q')` for Types 4p and 4r.
    pub fn pqq(&self) -> Option<(i64, i64, i64)> {
        match self.kind {
            FieldKind::Type4p | FieldKind::Type4r => Some((self.primes[0], self.primes[1], self.primes[2])),
            _ => None,
        }
    }
}

fn witness(condition: String, pass: bool) -> WitnessCheck {
    WitnessCheck { condition, pass }
}

fn et_conditions(p: i64, q: i64, qp: i64) -> Vec<WitnessCheck> {
    vec![
        witness(format!("q = {q} = 3 mod 8"), q % 8 == 3),
        witness(format!("q' = {qp} = 3 mod 8"), qp % 8 == 3),
        witness(format!("({p}/{q}) = -1"), kronecker(p, q) == -1),
        witness(format!("({p}/{qp}) = -1"), kronecker(p, qp) == -1),
        witness(format!("(-{q}/{qp}) = -1"), kronecker(-q, qp) == -1),
    ]
}

fn classify_pqq(d: i64, pds: &[i64]) -> Option<FieldClassification> {
    if pds.len() != 4 || !pds.contains(&-4) {
        return None;
    }
    let pos: Vec<i64> = pds.iter().copied().filter(|&x| x > 0).collect();
    let neg: Vec<i64> = pds.iter().copied().filter(|&x| x < 0 && x != -4).collect();
    if pos.len() != 1 || neg.len() != 2 {
        return None;
    }
    let p = pos[0];
    let mut tried = Vec::new();
    for (q, qp) in [(-neg[0], -neg[1]), (-neg[1], -neg[0])] {
        let mut w = et_conditions(p, q, qp);
        let kind = match p % 8 {
            1 => FieldKind::Type4p,
            5 => FieldKind::Type4r,
            _ => FieldKind::Other,
        };
        w.insert(0, witness(format!("p = {p} = 1 or 5 mod 8"), kind != FieldKind::Other));
        if w.iter().all(|c| c.pass) {
            return Some(FieldClassification {
                d,
                kind,
                primes: vec![p, q, qp],
                witness: w,
            });
        }
        tried.extend(w.into_iter().map(|c| WitnessCheck {
            condition: format!("[q={q}, q'={qp}] {}", c.condition),
            pass: c.pass,
        }));
    }
    Some(FieldClassification {
        d,
        kind: FieldKind::Other,
        primes: pds.to_vec(),
        witness: tried,
    })
}

fn prime_of(di: i64) -> i64 {
    match di {
        -4 => 2,
        8 | -8 => 2,
        x => x.abs(),
    }
}

fn classify_ps1(d: i64, pds: &[i64]) -> Option<FieldClassification> {
    if pds.len() != 4 {
        return None;
    }
    let mut neg: Vec<i64> = pds.iter().copied().filter(|&x| x < 0).collect();
    let pos: Vec<i64> = pds.iter().copied().filter(|&x| x > 0).collect();
    if neg.len() != 3 || pos.len() != 1 {
        return None;
    }
    neg.sort_unstable();
    let d4 = pos[0];
    let p4 = prime_of(d4);
    let mod8 = witness(format!("d = {} mod 8, not 4", d.rem_euclid(8)), d.rem_euclid(8) != 4);
    let perms = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
    let mut tried = vec![mod8.clone()];
    for perm in perms {
        let [d1, d2, d3] = perm.map(|i| neg[i]);
        let (p1, p2, p3) = (prime_of(d1), prime_of(d2), prime_of(d3));
        let mut w = vec![mod8.clone()];
        for dj in [d1, d2, d3] {
            w.push(witness(format!("({dj}/{p4}) = -1"), kronecker(dj, p4) == -1));
        }
        w.push(witness(format!("({d1}/{p2}) = -1"), kronecker(d1, p2) == -1));
        w.push(witness(format!("({d2}/{p3}) = -1"), kronecker(d2, p3) == -1));
        w.push(witness(format!("({d3}/{p1}) = -1"), kronecker(d3, p1) == -1));
        if w.iter().all(|c| c.pass) {
            return Some(FieldClassification {
                d,
                kind: FieldKind::TypePS1,
                primes: vec![d1, d2, d3, d4],
                witness: w,
            });
        }
        tried.extend(w.into_iter().skip(1).map(|c| WitnessCheck {
            condition: format!("[{d1},{d2},{d3}] {}", c.condition),
            pass: c.pass,
        }));
    }
    Some(FieldClassification {
        d,
        kind: FieldKind::Other,
        primes: pds.to_vec(),
        witness: tried,
    })
}

pub fn classify(d: i64) -> Result<FieldClassification> {
    if d >= 0 {
        return Err(Error::NotImaginary(d));
    }
    if !is_fundamental(d) {
        return Err(Error::NotFundamental(d));
    }
    let pds: Vec<i64> = prime_discriminants(d)?.iter().map(|x| x.value()).collect();
    let shape = classify_pqq(d, &pds).or_else(|| classify_ps1(d, &pds));
    Ok(shape.unwrap_or(FieldClassification {
        d,
        kind: FieldKind::Other,
        primes: pds.clone(),
        witness: vec![witness(
            format!("{} prime discriminants, shape -4pqq' or d1d2d3d4", pds.len()),
            false,
        )],
    }))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Invariants {
    pub n: u32,
    pub m: u32,
    /// Equal to `m`; kept under both names.
    pub mu: u32,
    pub h2_k: u64,
    pub h2_minus4p: u64,
    pub cl2_k: AbelianType,
}

fn supported(d: i64) -> Result<FieldClassification> {
    let c = classify(d)?;
    match c.kind {
        FieldKind::Type4p | FieldKind::Type4r => Ok(c),
        _ => Err(Error::UnsupportedKind(d)),
    }
}

fn invariants_of(c: &FieldClassification, bound: u64) -> Result<Invariants> {
    let d = c.d;
    let (p, _, _) = c.pqq().ok_or(Error::UnsupportedKind(d))?;
    let t = two_part(&class_group_with_bound(d, bound)?);
    let ty = t.abelian_type.expect("definite");
    let mismatch = || Error::StructureMismatch {
        disc: d,
        found: ty.to_string(),
    };
    let parts = ty.parts();
    if parts.len() != 3 || parts[1] != 2 || parts[2] != 2 {
        return Err(mismatch());
    }
    let n = log2_exact(parts[0]).ok_or_else(mismatch)?;
    if c.kind == FieldKind::Type4p && n < 2 {
        return Err(mismatch());
    }
    let h2_minus4p = two_part(&class_group_with_bound(-4 * p, bound)?).h2;
    let m = log2_exact(h2_minus4p).expect("power of two");
    Ok(Invariants {
        n,
        m,
        mu: m,
        h2_k: t.h2,
        h2_minus4p,
        cl2_k: ty,
    })
}

pub fn invariants(d: i64) -> Result<Invariants> {
    invariants_with_bound(d, DEFAULT_CLASS_BOUND)
}

pub fn invariants_with_bound(d: i64, bound: u64) -> Result<Invariants> {
    invariants_of(&supported(d)?, bound)
}

/// A single comparison line.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    /// Where the expected value comes from, e.g. `Table 1` or `Lemma 5`.
    pub anchor: String,
    pub expected: String,
    pub computed: String,
    pub pass: bool,
}

impl Check {
    pub fn new<T: PartialEq + Display>(name: impl Into<String>, anchor: &str, expected: T, computed: T) -> Self {
        Check {
            name: name.into(),
            anchor: anchor.to_string(),
            pass: expected == computed,
            expected: expected.to_string(),
            computed: computed.to_string(),
        }
    }
}

/// One intermediate field with its predicted 2-class group.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtensionRow {
    /// `1..=7` for the unramified quadratic extensions; 0 for `k_gen`.
    pub j: usize,
    pub field: String,
    /// Predicted 2-class number from the unit-index argument, when tabulated.
    pub h2: Option<u64>,
    pub closed_form: AbelianType,
    /// The matching subgroup abelianization read off the engine.
    pub engine: Option<AbelianType>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TowerReport {
    pub classification: FieldClassification,
    pub n: u32,
    pub m: u32,
    pub mu: u32,
    pub h2_k: u64,
    pub h2_minus4p: u64,
    pub predicted_group: GroupParams,
    pub extensions: Vec<ExtensionRow>,
    pub checks: Vec<Check>,
}

impl TowerReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}

fn predicted_params(kind: FieldKind, inv: &Invariants) -> GroupParams {
    let m = if kind == FieldKind::Type4p { inv.m } else { 1 };
    GroupParams {
        n: inv.n,
        m,
        eps: 1,
        family: crate::pgroup::Family::Gamma,
    }
}

fn engine_for(params: GroupParams) -> Option<PGroup> {
    if params.log_order() > MAX_LOG_ORDER {
        return None;
    }
    PGroup::new(params).ok()
}

fn base_report(c: FieldClassification, inv: Invariants) -> TowerReport {
    let predicted_group = predicted_params(c.kind, &inv);
    TowerReport {
        classification: c,
        n: inv.n,
        m: inv.m,
        mu: inv.mu,
        h2_k: inv.h2_k,
        h2_minus4p: inv.h2_minus4p,
        predicted_group,
        extensions: Vec::new(),
        checks: Vec::new(),
    }
}

/// Table-1 order of the unramified quadratic extensions.
const TABLE1_RADICANDS: [u8; 7] = [
    Radicand::MINUS_ONE | Radicand::P,
    Radicand::P,
    Radicand::MINUS_ONE,
    Radicand::MINUS_ONE | Radicand::Q,
    Radicand::MINUS_ONE | Radicand::QPRIME,
    Radicand::Q,
    Radicand::QPRIME,
];

fn fill_prediction(r: &mut TowerReport, g: Option<&PGroup>) -> Result<()> {
    let (p, q, qp) = r.classification.pqq().expect("supported");
    if r.classification.kind == FieldKind::Type4r {
        r.checks.push(Check::new("h_2(-4p) = 2", "Prop. PS3", 2, r.h2_minus4p));
        if let Some(g) = g {
            let ab = abelianization(g, &whole(g));
            r.checks.push(Check::new(
                "Cl_2(k) = G/G'",
                "Prop. PS3",
                ab.to_string(),
                AbelianType::new(vec![2, 2, 1 << r.n]).expect("2-power").to_string(),
            ));
            let g4r = PGroup::new(GroupParams::gamma4r(r.n)?)?;
            r.checks.push(Check::new(
                "Gamma_{n,1,1} and Gamma4r_n fingerprints agree",
                "Lemma 6",
                true,
                fingerprint(g) == fingerprint(&g4r),
            ));
        }
        return Ok(());
    }
    let cor = corollary2(r.n, r.m);
    let engine = g.map(corollary2_engine).transpose()?;
    let table1 = table1_predictions(r.n, r.mu)?;
    for (i, row) in table1.iter().enumerate() {
        let closed = match i {
            0 => cor.h1.clone(),
            1 => cor.h2.clone(),
            2 => cor.h3.clone(),
            _ => cor.h4_7.clone(),
        };
        let eng = engine.as_ref().map(|e| match i {
            0 => e.h1.clone(),
            1 => e.h2.clone(),
            2 => e.h3.clone(),
            _ => e.h4_7.clone(),
        });
        r.extensions.push(ExtensionRow {
            j: row.j,
            field: format!("k(sqrt({}))", Radicand(TABLE1_RADICANDS[i]).value(p, q, qp)),
            h2: Some(row.h2),
            closed_form: closed,
            engine: eng,
        });
    }
    r.extensions.push(ExtensionRow {
        j: 0,
        field: "k_gen".into(),
        h2: Some(genus_field_h2(r.n, r.mu)?),
        closed_form: cor.h_gen.clone(),
        engine: engine.as_ref().map(|e| e.h_gen.clone()),
    });
    for e in &r.extensions {
        if let Some(eng) = &e.engine {
            r.checks.push(Check::new(
                format!("{} closed form = engine", e.field),
                "Corollary 2",
                e.closed_form.to_string(),
                eng.to_string(),
            ));
        }
        if let Some(h2) = e.h2 {
            r.checks.push(Check::new(
                format!("{} order = h_2", e.field),
                "Corollary 2",
                h2,
                e.closed_form.order(),
            ));
        }
    }
    if let Some(e) = &engine {
        r.checks.push(Check::new("G' = (2, 2^m)", "Corollary 2", cor.derived.to_string(), e.derived.to_string()));
    }
    Ok(())
}

pub fn predict(d: i64) -> Result<TowerReport> {
    predict_with_bound(d, DEFAULT_CLASS_BOUND)
}

pub fn predict_with_bound(d: i64, bound: u64) -> Result<TowerReport> {
    let c = supported(d)?;
    let inv = invariants_of(&c, bound)?;
    let mut r = base_report(c, inv);
    let g = engine_for(r.predicted_group);
    fill_prediction(&mut r, g.as_ref())?;
    Ok(r)
}

fn quadratic_field_h2(disc: i64, bound: u64) -> Result<u64> {
    if disc < 0 {
        Ok(two_part(&class_group_with_bound(disc, bound)?).h2)
    } else {
        wide_h2_with_bound(disc, bound)
    }
}

/// Capitulation order in `k(sqrt p, i)/k(sqrt p)`: `2 (<-1, eps_p> : <-1, eps_p^2>)`.
pub const CAPITULATION_K2: u64 = 4;

/// Capitulation classes `[2]`, `[p]`, `[q]` as bits 1, 2, 4; `[q'] = [pq]`.
const KAPPA_GENERATORS: [&[u8]; 7] = [&[2, 4], &[2], &[1, 2], &[1, 4], &[1, 6], &[1, 4], &[1, 6]];

fn span(gens: &[u8]) -> Vec<u8> {
    let mut out = vec![0u8];
    for &g in gens {
        let more: Vec<u8> = out.iter().map(|x| x ^ g).collect();
        out.extend(more);
    }
    out.sort_unstable();
    out.dedup();
    out
}

fn number_side_checks(r: &mut TowerReport, bound: u64) -> Result<()> {
    let (p, q, qp) = r.classification.pqq().expect("supported");
    let d = r.classification.d;
    let (n, mu) = (r.n, r.mu);
    let table1 = table1_predictions(n, mu)?;
    let base = Radicand::BASE;
    for (i, row) in table1.iter().enumerate() {
        let rad = Radicand(TABLE1_RADICANDS[i]);
        let subs = [base, rad, rad.times(base)];
        let mut actual = Vec::new();
        for s in subs {
            actual.push(quadratic_field_h2(field_discriminant(s.value(p, q, qp)), bound)?);
        }
        let predicted: Vec<u64> = subs.iter().map(|s| quadratic_h2(*s, n, mu)).collect();
        r.checks.push(Check::new(
            format!("k_{} subfield h_2", row.j),
            "Table 1",
            format!("{predicted:?}"),
            format!("{actual:?}"),
        ));
        let via_kuroda = kuroda_h2(KurodaLayout::V4OverQComplex, &actual, 1, 1)?;
        r.checks.push(Check::new(format!("k_{} h_2 via Kuroda", row.j), "Table 1", row.h2, via_kuroda));
    }

    let sq = square_2torsion_with_bound(d, bound)?;
    let two_p = reduce(compose(prime_form(d, 2)?, prime_form(d, p)?)?)?;
    r.checks.push(Check::new(
        "Cl_2(k)^2 ∩ Cl_2(k)[2] = <[2p]>",
        "(E1)",
        format!("[{}, {}]", sq[0], two_p),
        format!("[{}]", sq.iter().map(|f| f.to_string()).collect::<Vec<_>>().join(", ")),
    ));

    for (name, case) in [
        ("Lemma 1 (q, p)", Lemma1Case::TwoAbove { q: q as u64, p: p as u64 }),
        ("Lemma 1 (q', p)", Lemma1Case::TwoAbove { q: qp as u64, p: p as u64 }),
        ("Lemma 1 (p, q, q')", Lemma1Case::PAbove { p: p as u64, q: q as u64, qprime: qp as u64 }),
    ] {
        let rep = lemma1_check(case)?;
        r.checks.push(Check::new(
            format!("{name}: h_2 = 2 and prime principal, disc {}", rep.disc),
            "Lemma 1",
            true,
            rep.holds,
        ));
    }
    Ok(())
}

fn group_side_checks(r: &mut TowerReport, g: &PGroup) -> Result<()> {
    let table1 = table1_predictions(r.n, r.mu)?;
    let hs = maximal_subgroups(g)?;
    let all = whole(g);
    let [_, a2, a3h] = transfer_arguments(g);
    // [2] <-> a2, [p] <-> a2 a3^(2^(n-1)), [2p] <-> a3^(2^(n-1))
    let dictionary = [(1u8, "[2]", a2), (2, "[p]", g.mul(a2, a3h)), (3, "[2p]", a3h)];
    let mut big = 0;
    for (j, (h, row)) in hs.iter().zip(&table1).enumerate() {
        let index = (h.order() / crate::pgroup::derived_subgroup(g, h).order()) as u64;
        if index == 1 << (r.n + 2) {
            big += 1;
        }
        r.checks.push(Check::new(format!("(H_{0} : H_{0}') = h_2(k_{0})", j + 1), "Table 1", row.h2, index));
        let ker = Transfer::new(g, &all, h)?.kernel(g);
        r.checks.push(Check::new(
            format!("#κ_{0} = |ker t_{0}|", j + 1),
            "Table 1",
            row.kappa_order,
            ker.order as u64,
        ));
        let table_span = span(KAPPA_GENERATORS[j]);
        let expected: Vec<&str> = dictionary
            .iter()
            .filter(|(bits, _, _)| table_span.contains(bits))
            .map(|(_, name, _)| *name)
            .collect();
        let computed: Vec<&str> = dictionary
            .iter()
            .filter(|(_, _, x)| ker.preimage.contains(*x))
            .map(|(_, name, _)| *name)
            .collect();
        r.checks.push(Check::new(
            format!("κ_{0} ∩ {{[2],[p],[2p]}} = ker t_{0} ∩ dictionary", j + 1),
            "Table 1",
            expected.join(" "),
            computed.join(" "),
        ));
    }
    r.checks.push(Check::new("maximal subgroups with index 2^(n+2)", "Table 1", 5, big));
    let gen_order = abelianization(g, &crate::pgroup::gamma::h_gen(g)).order();
    r.checks.push(Check::new(
        "h_2(k_gen) = 2^(n+mu)",
        "Prop. 1",
        1u64 << (r.n + r.mu),
        genus_field_h2(r.n, r.mu)?,
    ));
    r.checks.push(Check::new("(H_gen : H_gen') = 2^(n+mu)", "Prop. 2", 1u64 << (r.n + r.mu), gen_order));
    r.checks.push(Check::new(
        "capitulation in k(sqrt p, i)/k(sqrt p) = Lemma 5 kernel",
        "Lemma 5",
        CAPITULATION_K2,
        lemma5_kernel(g)?.order as u64,
    ));
    Ok(())
}

fn type4r_checks(r: &mut TowerReport) -> Result<()> {
    let n = r.n;
    if let Some(g) = engine_for(GroupParams::gamma(n, 1, 1)?) {
        let all = whole(&g);
        let max_ker = maximal_subgroups(&g)?
            .iter()
            .map(|h| Transfer::new(&g, &all, h).map(|t| t.kernel(&g).order))
            .collect::<Result<Vec<_>>>()?
            .into_iter()
            .max()
            .unwrap_or(0);
        r.checks.push(Check::new("max |ker t_j| <= 4 in Gamma_{n,1,1}", "Prop. PS3", true, max_ker <= 4));
    }
    if n >= 2 {
        let g0 = PGroup::new(GroupParams::gamma(n, 1, 0)?)?;
        let hs = maximal_subgroups(&g0)?;
        let ker = Transfer::new(&g0, &whole(&g0), &hs[5])?.kernel(&g0);
        r.checks.push(Check::new("|ker t_H| in Gamma_{n,1,0}", "Lemma 7", 8, ker.order));
    }
    Ok(())
}

pub fn crosscheck(d: i64) -> Result<TowerReport> {
    crosscheck_with_bound(d, DEFAULT_CLASS_BOUND)
}

pub fn crosscheck_with_bound(d: i64, bound: u64) -> Result<TowerReport> {
    let mut r = predict_with_bound(d, bound)?;
    match r.classification.kind {
        FieldKind::Type4p => {
            number_side_checks(&mut r, bound)?;
            if let Some(g) = engine_for(r.predicted_group) {
                group_side_checks(&mut r, &g)?;
            }
        }
        _ => type4r_checks(&mut r)?,
    }
    Ok(r)
}

/// Types 4p and 4r in `[lo, hi]`, descending `d`, with `(n, m)`.
pub fn scan(lo: i64, hi: i64) -> Result<Vec<TowerReport>> {
    scan_with_bound(lo, hi, DEFAULT_CLASS_BOUND)
}

pub fn scan_with_bound(lo: i64, hi: i64, bound: u64) -> Result<Vec<TowerReport>> {
    if lo > hi || hi >= 0 {
        return Ok(Vec::new());
    }
    let mut out: Vec<TowerReport> = (lo..=hi)
        .into_par_iter()
        .filter(|&d| is_fundamental(d))
        .filter_map(|d| match classify(d) {
            Ok(c) if matches!(c.kind, FieldKind::Type4p | FieldKind::Type4r) => Some(c),
            _ => None,
        })
        .map(|c| invariants_of(&c, bound).map(|inv| base_report(c, inv)))
        .collect::<Result<Vec<_>>>()?;
    out.sort_by_key(|r| std::cmp::Reverse(r.classification.d));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn classify_examples() {
        let c = classify(-2244).unwrap();
        assert_eq!((c.kind, c.primes.clone()), (FieldKind::Type4p, vec![17, 3, 11]));
        let c = classify(-2580).unwrap();
        assert_eq!((c.kind, c.primes.clone()), (FieldKind::Type4r, vec![5, 43, 3]));
        assert_eq!(classify(-84).unwrap().kind, FieldKind::Other);
        assert_eq!(classify(-3).unwrap().kind, FieldKind::Other);
        assert_eq!(classify(5), Err(Error::NotImaginary(5)));
        assert_eq!(classify(-12), Err(Error::NotFundamental(-12)));
    }

    #[test]
    fn invariants_examples() {
        for (d, n, m) in [(-2244, 2, 2), (-37092, 4, 2), (-5412, 2, 3)] {
            let inv = invariants(d).unwrap();
            assert_eq!((inv.n, inv.m, inv.mu), (n, m, m), "{d}");
        }
        assert_eq!(invariants(-84), Err(Error::UnsupportedKind(-84)));
    }

    #[test]
    fn crosscheck_2244() {
        let r = crosscheck(-2244).unwrap();
        for c in &r.checks {
            assert!(c.pass, "{c:?}");
        }
        let gen = r.extensions.iter().find(|e| e.j == 0).unwrap();
        assert_eq!(gen.closed_form.to_string(), "(4,4)");
        assert_eq!(gen.h2, Some(16));
    }

    #[test]
    fn crosscheck_type4r() {
        let r = crosscheck(-2580).unwrap();
        assert!(r.all_pass(), "{:?}", r.checks);
        assert_eq!(r.m, 1);
    }

    #[test]
    fn scan_small() {
        assert!(scan(-10, -1).unwrap().is_empty());
        let ds: Vec<i64> = scan(-6000, -1)
            .unwrap()
            .iter()
            .filter(|r| r.classification.kind == FieldKind::Type4p)
            .map(|r| r.classification.d)
            .collect();
        assert!(ds.contains(&-2244) && ds.contains(&-5412));
        assert!(ds.windows(2).all(|w| w[0] > w[1]));
    }
}
