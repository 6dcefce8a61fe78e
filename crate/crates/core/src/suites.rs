//! Property suites shared by the `check` subcommand and the acceptance tests.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use rand::Rng;
use serde::Serialize;

use crate::base_change::{
    bc_type, bc_weight, epsilon_type, epsilon_weight, is_bc_image_type, is_bc_image_weight,
};
use crate::error::Result;
use crate::intersect::{
    disjoint_type, graph_distance, intersect_types, labelled_factors, neighbor_type,
};
use crate::kisin::{
    admissible_set, breuil_mezard_check, classify_cell, dual_transform, generic_matrix,
    global_dimension_identity, polarize, polarized_check, random_coeffs, shapes_of, CoeffRing,
    LaurentMat, Mode, Shape, DEFAULT_TRUNCATION,
};
use crate::lattice::{alpha_of, depth, weyl_act, GlChar, PrimeContext, WeylElt};
use crate::lparams::{
    beta_descended, bc_predicted_check, dl_from_lparam, exponents_of_tau, type_genericity,
    lparam_from_dl, lparam_genericity, predicted_weights, predicted_weights_gl, InertialTypeGl,
    TameLParam,
};
use crate::sample::{self, Rng8};
use crate::weights::{
    all_descended_weights, all_weights_gl, central_character_type, central_character_weight,
    deep_presentation, deep_presentation_gl, descended_type_universe, genericity,
    gl_type_universe, jh_factors, jh_factors_any, jh_factors_gl_any, present_via, present_via_gl,
    DlRepGl, DlRepU, SerreWeightU,
};

#[derive(Clone, Debug)]
pub struct SuiteConfig {
    pub seed: u64,
    /// Overrides the per-row random trial count.
    pub trials: Option<usize>,
    /// Run the exhaustive universes.
    pub exhaustive: bool,
    pub radius: i64,
    pub trunc: usize,
    /// Restrict to rows with this `(p, f)`.
    pub only: Option<(Option<i64>, Option<usize>)>,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            seed: 1,
            trials: None,
            exhaustive: true,
            radius: 2,
            trunc: DEFAULT_TRUNCATION,
            only: None,
        }
    }
}

impl SuiteConfig {
    fn trials(&self, default: usize) -> usize {
        self.trials.unwrap_or(default)
    }

    fn wants(&self, p: i64, f: usize) -> bool {
        match self.only {
            None => true,
            Some((qp, qf)) => qp.is_none_or(|x| x == p) && qf.is_none_or(|x| x == f),
        }
    }

    fn rng(&self, salt: u64) -> Rng8 {
        sample::rng(self.seed.wrapping_mul(1_000_003).wrapping_add(salt))
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Row {
    pub label: String,
    pub checked: u64,
    pub failures: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub vacuous: Option<String>,
}

impl Row {
    fn new(label: impl Into<String>) -> Row {
        Row { label: label.into(), checked: 0, failures: 0, vacuous: None }
    }

    fn vacuous(label: impl Into<String>, why: &str) -> Row {
        Row { vacuous: Some(why.into()), ..Row::new(label) }
    }

    fn record(&mut self, ok: bool) {
        self.checked += 1;
        if !ok {
            self.failures += 1;
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub name: &'static str,
    pub rows: Vec<Row>,
}

impl SuiteReport {
    /// No failures and at least one non-vacuous row with checks.
    pub fn passed(&self) -> bool {
        self.rows.iter().all(|r| r.failures == 0) && self.rows.iter().any(|r| r.checked > 0)
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "PASS" } else { "FAIL" };
        writeln!(f, "{}: {}", self.name, status)?;
        for r in &self.rows {
            match &r.vacuous {
                Some(why) => writeln!(f, "  {}: vacuous ({})", r.label, why)?,
                None => writeln!(f, "  {}: checked={} failures={}", r.label, r.checked, r.failures)?,
            }
        }
        Ok(())
    }
}

pub const SUITES: [&str; 10] = [
    "jh",
    "jh-bc",
    "intersection",
    "squaring",
    "epsilon",
    "predicted-bc",
    "kisin",
    "bm",
    "neighbor-disjoint",
    "dimension",
];

pub fn run(name: &str, cfg: &SuiteConfig) -> Option<SuiteReport> {
    let rep = match name {
        "jh" => jh_suite(cfg),
        "jh-bc" => jh_bc_suite(cfg),
        "intersection" => intersection_suite(cfg, false),
        "squaring" => intersection_suite(cfg, true),
        "epsilon" => epsilon_suite(cfg),
        "predicted-bc" => predicted_bc_suite(cfg),
        "kisin" => kisin_suite(cfg),
        "bm" => bm_suite(cfg),
        "neighbor-disjoint" => neighbor_disjoint_suite(cfg),
        "dimension" => dimension_suite(cfg),
        _ => return None,
    };
    Some(rep)
}

fn ctx(p: i64, f: usize) -> PrimeContext {
    PrimeContext::new(p, f).expect("suite contexts are valid")
}

fn label(p: i64, f: usize) -> String {
    format!("p={p} f={f}")
}

// ------------------------------------------------------------------- jh

fn jh_suite(cfg: &SuiteConfig) -> SuiteReport {
    let mut rows = Vec::new();
    for p in [5, 7, 11] {
        for f in 1..=3 {
            if !cfg.wants(p, f) {
                continue;
            }
            let c = ctx(p, f);
            let mut rng = cfg.rng(p as u64 * 10 + f as u64);
            let mut row = Row::new(label(p, f));
            for _ in 0..cfg.trials(200) {
                let descended = rng.gen();
                let r = sample::deep_rep(&mut rng, &c, 1, descended).expect("1-deep exists");
                let ok = match jh_factors(&r, &c) {
                    Ok(jh) => {
                        let labels: BTreeSet<_> = labelled_factors(&r, &c)
                            .map(|v| v.into_iter().map(|x| x.1).collect())
                            .unwrap_or_default();
                        jh.len() == 1 << f && labels == jh
                    }
                    Err(_) => false,
                };
                row.record(ok);
            }
            rows.push(row);
        }
    }
    SuiteReport { name: "jh", rows }
}

// ---------------------------------------------------------------- jh-bc

fn exchange_holds(r: &DlRepU, x: &SerreWeightU, jh: &BTreeSet<SerreWeightU>, c: &PrimeContext) -> bool {
    let Ok(b) = bc_type(r, c) else { return false };
    let Ok(jh_gl) = jh_factors_gl_any(&b, c) else { return false };
    let Ok(y) = bc_weight(x, c) else { return false };
    jh.contains(x) == jh_gl.contains(&y)
}

fn jh_bc_suite(cfg: &SuiteConfig) -> SuiteReport {
    let mut rows = Vec::new();
    if cfg.exhaustive && cfg.wants(5, 1) {
        let c = ctx(5, 1);
        let mut row = Row::new("p=5 f=1 exhaustive");
        let weights = all_descended_weights(&c);
        for r in generic_descended_types(&c, 1) {
            let Ok(b) = bc_type(&r, &c) else { continue };
            let jh = jh_factors_any(&r, &c).unwrap_or_default();
            let jh_gl = jh_factors_gl_any(&b, &c).unwrap_or_default();
            for x in &weights {
                let y = bc_weight(x, &c).ok();
                row.record(!jh.is_empty() && y.is_some_and(|y| jh.contains(x) == jh_gl.contains(&y)));
            }
        }
        rows.push(row);
    }
    for (p, f) in [(5, 2), (5, 3), (7, 2)] {
        if !cfg.wants(p, f) {
            continue;
        }
        let c = ctx(p, f);
        let mut rng = cfg.rng(200 + p as u64 * 10 + f as u64);
        let mut row = Row::new(label(p, f));
        for _ in 0..cfg.trials(500) {
            let r = sample::deep_rep(&mut rng, &c, 1, true).expect("1-deep exists");
            let jh = jh_factors(&r, &c).unwrap_or_default();
            let x = if rng.gen() && !jh.is_empty() {
                jh.iter().nth(rng.gen_range(0..jh.len())).unwrap().clone()
            } else {
                sample::any_weight(&mut rng, &c, true)
            };
            row.record(!jh.is_empty() && exchange_holds(&r, &x, &jh, &c));
        }
        rows.push(row);
    }
    SuiteReport { name: "jh-bc", rows }
}

/// One presentation per isomorphism class of `n`-generic descended type.
fn generic_descended_types(c: &PrimeContext, n: i64) -> Vec<DlRepU> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for r in descended_type_universe(c) {
        let Ok((deep, d)) = deep_presentation(&r, c) else { continue };
        if d < n {
            continue;
        }
        // base change is injective and even GL classes are determined by exponents
        let Ok(b) = bc_type(&r, c) else { continue };
        let Ok(key) = exponents_of_tau(&b.w, &b.mu, c) else { continue };
        if seen.insert((r.w.length() % 2, key)) {
            out.push(deep);
        }
    }
    out
}

// ------------------------------------------------------- intersections

struct IntersectionRow {
    p: i64,
    f: usize,
    n: i64,
    note: &'static str,
}

const INTERSECTION_ROWS: [IntersectionRow; 4] = [
    IntersectionRow { p: 7, f: 1, n: 2, note: " (2-generic: no 3-deep characters at p=7)" },
    IntersectionRow { p: 7, f: 2, n: 2, note: " (2-generic: no 3-deep characters at p=7)" },
    IntersectionRow { p: 11, f: 2, n: 3, note: "" },
    IntersectionRow { p: 13, f: 2, n: 3, note: " (extra)" },
];

/// A pair of `n`-generic descended types, related by a random `wtilde` most of the time.
fn sample_pair(rng: &mut Rng8, c: &PrimeContext, n: i64) -> (DlRepU, DlRepU) {
    let f = c.f();
    loop {
        let s1 = sample::deep_rep(rng, c, n, true).expect("n-deep exists");
        let s2 = if rng.gen_bool(0.75) {
            let v = WeylElt((0..f).map(|_| rng.gen()).collect());
            let ts = WeylElt(v.0.iter().map(|&x| x && rng.gen()).collect());
            let moved = DlRepU::new(
                s1.w.mul(&v),
                &s1.mu + &weyl_act(&s1.w, &alpha_of(&ts)).expect("lengths agree"),
            );
            let u = sample::weyl(rng, f);
            present_via(&moved, &u, c).map_or(moved, |x| x.0)
        } else {
            sample::deep_rep(rng, c, n, true).expect("n-deep exists")
        };
        if genericity(&s2, c).is_ok_and(|d| d >= n) {
            return (s1, s2);
        }
    }
}

fn intersection_suite(cfg: &SuiteConfig, squaring: bool) -> SuiteReport {
    let mut rows = Vec::new();
    for row_spec in &INTERSECTION_ROWS {
        let (p, f) = (row_spec.p, row_spec.f);
        if !cfg.wants(p, f) {
            continue;
        }
        let c = ctx(p, f);
        let mut rng = cfg.rng(300 + p as u64 * 10 + f as u64);
        let mut row = Row::new(format!("{}{}", label(p, f), row_spec.note));
        let mut hist: BTreeMap<usize, u64> = BTreeMap::new();
        for _ in 0..cfg.trials(100) {
            let (s1, s2) = sample_pair(&mut rng, &c, row_spec.n);
            let (Ok(j1), Ok(j2)) = (jh_factors_any(&s1, &c), jh_factors_any(&s2, &c)) else {
                row.record(false);
                continue;
            };
            let brute = j1.intersection(&j2).count();
            *hist.entry(brute).or_default() += 1;
            let ok = if squaring {
                squaring_holds(&s1, &s2, brute, &c)
            } else {
                match intersect_types(&s1, &s2, &c) {
                    Ok(Some(w)) => {
                        let ones = w.wtilde.iter().filter(|t| **t == crate::intersect::Tilde::One).count();
                        brute == 1 << ones && w.common.iter().all(|x| j1.contains(x) && j2.contains(x))
                    }
                    Ok(None) => brute == 0,
                    Err(_) => false,
                }
            };
            row.record(ok);
        }
        row.label = format!("{} sizes={:?}", row.label, hist);
        rows.push(row);
    }
    if cfg.only.is_none() {
        rows.push(Row::vacuous("p=7 3-generic", "no 3-deep characters exist at p=7"));
    }
    SuiteReport { name: if squaring { "squaring" } else { "intersection" }, rows }
}

fn squaring_holds(s1: &DlRepU, s2: &DlRepU, brute: usize, c: &PrimeContext) -> bool {
    let (Ok(b1), Ok(b2)) = (bc_type(s1, c), bc_type(s2, c)) else { return false };
    let (Ok(g1), Ok(g2)) = (jh_factors_gl_any(&b1, c), jh_factors_gl_any(&b2, c)) else {
        return false;
    };
    g1.intersection(&g2).count() == brute * brute
}

// -------------------------------------------------------------- epsilon

fn epsilon_suite(cfg: &SuiteConfig) -> SuiteReport {
    let mut rows = Vec::new();
    if cfg.exhaustive && cfg.wants(5, 1) {
        let c = ctx(5, 1);
        let images: BTreeSet<_> =
            all_descended_weights(&c).iter().filter_map(|x| bc_weight(x, &c).ok()).collect();
        let mut row = Row::new("p=5 f=1 weights exhaustive");
        for y in all_weights_gl(&c) {
            row.record(weight_epsilon_agrees(&y, &images, &c));
        }
        rows.push(row);
        let exps = bc_exponents(&c);
        let mut row = Row::new("p=5 f=1 types exhaustive (1-generic)");
        for r in gl_type_universe(&c) {
            if deep_presentation_gl(&r, &c).map_or(true, |x| x.1 < 1) {
                continue;
            }
            row.record(type_epsilon_agrees(&r, &exps, &c));
        }
        rows.push(row);
    }
    for (p, f) in [(5, 2)] {
        if !cfg.wants(p, f) {
            continue;
        }
        let c = ctx(p, f);
        let mut rng = cfg.rng(500);
        let images: BTreeSet<_> =
            all_descended_weights(&c).iter().filter_map(|x| bc_weight(x, &c).ok()).collect();
        let exps = bc_exponents(&c);
        let mut wrow = Row::new(format!("{} weights", label(p, f)));
        let mut trow = Row::new(format!("{} types (1-generic)", label(p, f)));
        let total = cfg.trials(500);
        while wrow.checked + trow.checked < total as u64 {
            if rng.gen() {
                let y = if rng.gen() {
                    bc_weight(&sample::any_weight(&mut rng, &c, true), &c).expect("descended")
                } else {
                    random_gl_weight(&mut rng, &c)
                };
                wrow.record(weight_epsilon_agrees(&y, &images, &c));
            } else {
                let r = random_gl_type(&mut rng, &c);
                if deep_presentation_gl(&r, &c).map_or(true, |x| x.1 < 1) {
                    continue;
                }
                trow.record(type_epsilon_agrees(&r, &exps, &c));
            }
        }
        rows.push(wrow);
        rows.push(trow);
    }
    SuiteReport { name: "epsilon", rows }
}

fn random_gl_weight(rng: &mut Rng8, c: &PrimeContext) -> crate::weights::SerreWeightGl {
    let n = 2 * c.f();
    let mu = GlChar(
        (0..n)
            .map(|_| {
                let m = rng.gen_range(-20..=20);
                [m + rng.gen_range(0..c.p()), m]
            })
            .collect(),
    );
    crate::weights::weight_gl(&mu, c).expect("restricted by construction")
}

/// Half base changes of random descended types (re-presented), half arbitrary.
fn random_gl_type(rng: &mut Rng8, c: &PrimeContext) -> DlRepGl {
    let n = 2 * c.f();
    if rng.gen() {
        let r = sample::deep_rep(rng, c, 1, true).expect("1-deep exists");
        if let Ok(b) = bc_type(&r, c) {
            let v = sample::weyl(rng, n);
            return present_via_gl(&b, &v, c).map_or(b, |x| x.0);
        }
    }
    let mut w = sample::weyl(rng, n);
    if w.length() % 2 == 1 {
        w.0[0] ^= true;
    }
    DlRepGl::new(w, sample::gl_char(rng, n, 12))
}

/// Exponent pairs of base changes over every descended type class.
fn bc_exponents(c: &PrimeContext) -> BTreeSet<InertialTypeGl> {
    descended_type_universe(c)
        .iter()
        .filter_map(|u| bc_type(u, c).ok())
        .filter_map(|b| exponents_of_tau(&b.w, &b.mu, c).ok())
        .collect()
}

fn weight_epsilon_agrees(
    y: &crate::weights::SerreWeightGl,
    images: &BTreeSet<crate::weights::SerreWeightGl>,
    c: &PrimeContext,
) -> bool {
    let Ok(e) = epsilon_weight(y, c) else { return false };
    let fixed = e == *y;
    let pre = is_bc_image_weight(y, c);
    let round = pre.as_ref().is_none_or(|x| bc_weight(x, c).ok().as_ref() == Some(y));
    fixed == images.contains(y) && pre.is_some() == fixed && round
}

fn type_epsilon_agrees(r: &DlRepGl, exps: &BTreeSet<InertialTypeGl>, c: &PrimeContext) -> bool {
    let fixed = crate::weights::dl_isomorphic_gl(&epsilon_type(r), r, c);
    // odd-length classes are never base changes
    let in_image = r.w.length().is_multiple_of(2)
        && exponents_of_tau(&r.w, &r.mu, c).is_ok_and(|e| exps.contains(&e));
    let pre = is_bc_image_type(r, c).is_some();
    fixed == in_image && pre == in_image
}

// -------------------------------------------------------- predicted-bc

fn predicted_bc_suite(cfg: &SuiteConfig) -> SuiteReport {
    let mut rows = Vec::new();
    if cfg.exhaustive && cfg.wants(5, 1) {
        let c = ctx(5, 1);
        let q = c.q();
        let nf = (q - 1) / (c.p() - 1);
        let weights = bc_pairs(&c);
        let mut row = Row::new("p=5 f=1 exhaustive");
        let params = (0..c.m())
            .map(|r| TameLParam::ps(r, nf))
            .chain((0..=q).flat_map(|k| (0..=q).map(move |l| TameLParam::irr(k, l, nf))));
        for rho in params {
            if lparam_genericity(&rho, &c).map_or(true, |d| d < 1) {
                continue;
            }
            row.record(predicted_biconditional(&rho, &weights, &c));
        }
        rows.push(row);
    }
    for (p, f) in [(5, 2), (7, 2)] {
        if !cfg.wants(p, f) {
            continue;
        }
        let c = ctx(p, f);
        let mut rng = cfg.rng(600 + p as u64);
        let weights = bc_pairs(&c);
        let mut row = Row::new(label(p, f));
        for _ in 0..cfg.trials(200) {
            let rho = random_generic_lparam(&mut rng, &c, 1);
            let ok = bc_predicted_check(&rho, &c).unwrap_or(false)
                && predicted_biconditional(&rho, &weights, &c);
            row.record(ok);
        }
        rows.push(row);
    }
    SuiteReport { name: "predicted-bc", rows }
}

type BcPair = (SerreWeightU, crate::weights::SerreWeightGl);

/// Every descended weight with its base change.
fn bc_pairs(c: &PrimeContext) -> Vec<BcPair> {
    all_descended_weights(c)
        .into_iter()
        .map(|x| {
            let y = bc_weight(&x, c).expect("descended weights base change");
            (x, y)
        })
        .collect()
}

/// `F in W?` iff `BC(F) in W?_GL` for every weight of the universe.
fn predicted_biconditional(rho: &TameLParam, universe: &[BcPair], c: &PrimeContext) -> bool {
    let (Ok(u), Ok(g)) = (predicted_weights(rho, c), predicted_weights_gl(rho, c)) else {
        return false;
    };
    universe.iter().all(|(x, y)| u.contains(x) == g.contains(y)) && u.len() == 1 << c.f()
}

/// A cyclotomic parameter with `mu` at least `n`-deep.
fn random_generic_lparam(rng: &mut Rng8, c: &PrimeContext, n: i64) -> TameLParam {
    loop {
        let pair = sample::deep_pair(rng, c, n).expect("n-deep exists");
        let Ok(rho) = lparam_from_dl(&pair, c) else { continue };
        if lparam_genericity(&rho, c).is_ok_and(|d| d >= n) {
            return rho;
        }
    }
}

// ---------------------------------------------------------------- kisin

fn kisin_suite(cfg: &SuiteConfig) -> SuiteReport {
    let mut rows = Vec::new();
    let mut rng = cfg.rng(700);
    let n = cfg.trunc;
    let residue = CoeffRing::new(7, 2, 1).expect("small field");
    let deformed = CoeffRing::new(7, 2, 4).expect("small field").with_p_valuation(2);
    for (mode, ring) in [(Mode::Residue, &residue), (Mode::Deformed, &deformed)] {
        for s in Shape::ALL {
            let mut row = Row::new(format!("classify.generic {s:?} {mode:?}"));
            for _ in 0..cfg.trials(500) {
                let c = random_coeffs(s, mode, ring, &mut rng);
                let ok = generic_matrix(s, &c, mode, ring, n)
                    .and_then(|m| classify_cell(&m, ring))
                    .is_ok_and(|t| t == s);
                row.record(ok);
            }
            rows.push(row);
        }
    }
    let mut row = Row::new("dual preserves cell");
    for _ in 0..cfg.trials(500) {
        let (s, m) = random_admissible(&mut rng, &residue, n);
        let ok = dual_transform(&m, &residue)
            .and_then(|d| Ok((classify_cell(&m, &residue)?, classify_cell(&d, &residue)?)))
            .is_ok_and(|(a, b)| a == s && b == s);
        row.record(ok);
    }
    rows.push(row);
    let mut row = Row::new("polarized families are f-periodic");
    for _ in 0..cfg.trials(200) {
        let f = rng.gen_range(1..=3);
        let upper: Vec<LaurentMat> =
            (0..f).map(|_| random_admissible(&mut rng, &residue, n).1).collect();
        let ok = polarize(&upper, &residue).is_ok_and(|fam| {
            let periodic = shapes_of(&fam, &residue)
                .is_ok_and(|sh| (0..f).all(|i| sh[i] == sh[i + f]));
            let mut wrong = fam.clone();
            wrong[0] = wrong[0].neg(&residue);
            polarized_check(&fam, &residue).unwrap_or(false)
                && periodic
                && !polarized_check(&wrong, &residue).unwrap_or(true)
        });
        row.record(ok);
    }
    rows.push(row);
    SuiteReport { name: "kisin", rows }
}

/// `X T Y` with `T` admissible and `X`, `Y` random Iwahori elements.
fn random_admissible(rng: &mut Rng8, ring: &CoeffRing, n: usize) -> (Shape, LaurentMat) {
    let adm = admissible_set(ring, n).expect("truncation is valid");
    let (s, t) = adm[rng.gen_range(0..3)].clone();
    let iwahori = |rng: &mut Rng8| {
        let poly = |rng: &mut Rng8, unit: bool, vdiv: bool| {
            let mut e: Vec<_> = (0..3).map(|_| ring.random(rng)).collect();
            if unit {
                e[0] = ring.random_unit(rng);
            }
            if vdiv {
                e[0] = ring.zero();
            }
            e
        };
        LaurentMat::new(
            ring,
            [
                [poly(rng, true, false), poly(rng, false, false)],
                [poly(rng, false, true), poly(rng, true, false)],
            ],
            n,
        )
        .expect("valid entries")
    };
    let x = iwahori(rng);
    let y = iwahori(rng);
    (s, mat_mul(&mat_mul(&x, &t, ring), &y, ring))
}

fn mat_mul(a: &LaurentMat, b: &LaurentMat, ring: &CoeffRing) -> LaurentMat {
    let n = a.trunc.min(b.trunc);
    let mut out = LaurentMat { entries: Default::default(), trunc: n };
    for i in 0..2 {
        for j in 0..2 {
            let mut acc = vec![ring.zero(); n];
            for k in 0..2 {
                for (d1, x) in a.entries[i][k].iter().enumerate().take(n) {
                    for (d2, y) in b.entries[k][j].iter().enumerate().take(n - d1) {
                        acc[d1 + d2] = ring.add(&acc[d1 + d2], &ring.mul(x, y));
                    }
                }
            }
            out.entries[i][j] = acc;
        }
    }
    out
}

// ------------------------------------------------------------------- bm

fn bm_suite(cfg: &SuiteConfig) -> SuiteReport {
    let mut rows = Vec::new();
    if cfg.wants(7, 1) {
        let c = ctx(7, 1);
        let mut row = Row::new("p=7 f=1 worked pair (wtilde = s): (lhs, e, gl_lhs) = (1, 1, 1)");
        row.record(worked_example(&c).is_ok_and(|r| (r.lhs, r.e, r.gl_lhs, r.ok) == (1, 1, 1, true)));
        rows.push(row);
    }
    for (p, f, n, note) in [
        (7, 1, 2, " (2-generic: no 3-deep characters at p=7)"),
        (7, 2, 2, " (2-generic: no 3-deep characters at p=7)"),
        (11, 1, 3, ""),
        (11, 2, 3, ""),
    ] {
        if !cfg.wants(p, f) {
            continue;
        }
        let c = ctx(p, f);
        let mut rng = cfg.rng(800 + p as u64 * 10 + f as u64);
        let mut row = Row::new(format!("{}{}", label(p, f), note));
        let mut hist: BTreeMap<u64, u64> = BTreeMap::new();
        let mut done = 0;
        while done < cfg.trials(100) {
            let rho = random_generic_lparam(&mut rng, &c, n);
            let Some(tau) = random_type_for(&rho, &mut rng, &c, n) else { continue };
            done += 1;
            let ok = breuil_mezard_check(&rho, &tau, &c).is_ok_and(|r| {
                *hist.entry(r.lhs).or_default() += 1;
                r.ok
            });
            row.record(ok);
        }
        row.label = format!("{} lhs={:?}", row.label, hist);
        rows.push(row);
    }
    SuiteReport { name: "bm", rows }
}

/// The base change exponents of a descended type.
pub fn type_exponents(r: &DlRepU, c: &PrimeContext) -> Result<InertialTypeGl> {
    let b = bc_type(r, c)?;
    exponents_of_tau(&b.w, &b.mu, c)
}

/// `wtilde` applied to the deepest presentation of `beta(V_phi)`.
fn moved_beta(rho: &TameLParam, wt: &[Option<bool>], c: &PrimeContext) -> Result<DlRepU> {
    let r = dl_from_lparam(rho, c)?;
    let b = deep_presentation(&beta_descended(&r, c), c)?.0;
    let v = WeylElt(wt.iter().map(|t| t.is_some()).collect());
    let ts = WeylElt(wt.iter().map(|t| *t == Some(true)).collect());
    Ok(DlRepU::new(b.w.mul(&v), &b.mu + &weyl_act(&b.w, &alpha_of(&ts))?))
}

/// A self-dual type meeting `W?(rho)` three times out of four, else unrelated.
fn random_type_for(
    rho: &TameLParam,
    rng: &mut Rng8,
    c: &PrimeContext,
    n: i64,
) -> Option<InertialTypeGl> {
    let s = if rng.gen_bool(0.75) {
        let wt: Vec<Option<bool>> =
            (0..c.f()).map(|_| if rng.gen() { None } else { Some(rng.gen()) }).collect();
        moved_beta(rho, &wt, c).ok()?
    } else {
        sample::deep_rep(rng, c, n, true)?
    };
    let tau = type_exponents(&s, c).ok()?;
    (type_genericity(&tau, c).ok()? >= n).then_some(tau)
}

/// `V_phi = R_1((3,1,0,0) + eta)` at `p = 7` and the type moved by `wtilde = (s)`.
pub fn worked_example(c: &PrimeContext) -> Result<crate::kisin::BmReport> {
    let (rho, tau) = worked_pair(c)?;
    breuil_mezard_check(&rho, &tau, c)
}

pub fn worked_pair(c: &PrimeContext) -> Result<(TameLParam, InertialTypeGl)> {
    let r = DlRepU::new(
        WeylElt::identity(1),
        crate::lattice::UChar::from_raw(&[[3, 1, 0, 0]]),
    );
    let rho = lparam_from_dl(&r, c)?;
    let tau = type_exponents(&moved_beta(&rho, &[Some(false)], c)?, c)?;
    Ok((rho, tau))
}

// ---------------------------------------------------- neighbor/disjoint

fn neighbor_disjoint_suite(cfg: &SuiteConfig) -> SuiteReport {
    let mut rows = Vec::new();
    for (p, f, n, note) in [
        (7, 2, 2, " (2-generic: no 4-deep characters at p=7)"),
        (11, 2, 4, ""),
        (13, 3, 4, ""),
    ] {
        if !cfg.wants(p, f) {
            continue;
        }
        let c = ctx(p, f);
        let mut rng = cfg.rng(900 + p as u64 * 10 + f as u64);
        let mut row = Row::new(format!("neighbor {}{}", label(p, f), note));
        let mut dists: BTreeMap<usize, u64> = BTreeMap::new();
        while row.checked < cfg.trials(100) as u64 {
            let descended = rng.gen_bool(0.5);
            let r = sample::deep_rep(&mut rng, &c, n, descended).expect("n-deep exists");
            let jh: Vec<_> = jh_factors_any(&r, &c).unwrap_or_default().into_iter().collect();
            if jh.is_empty() {
                row.record(false);
                continue;
            }
            let x = jh[rng.gen_range(0..jh.len())].clone();
            let y = jh[rng.gen_range(0..jh.len())].clone();
            let Ok(d) = graph_distance(&r, &x, &y, &c) else {
                row.record(false);
                continue;
            };
            if d > 2 {
                continue;
            }
            *dists.entry(d).or_default() += 1;
            row.record(neighbor_holds(&r, &x, &y, d, &jh, &c));
        }
        row.label = format!("{} distances={:?}", row.label, dists);
        rows.push(row);
    }
    if cfg.wants(5, 1) && cfg.only.is_none() {
        rows.push(Row::vacuous(
            "disjoint p=5 f=1",
            "no 2-generic types and no 3-deep weights exist at p=5",
        ));
    }
    if cfg.exhaustive && cfg.wants(11, 1) {
        let c = ctx(11, 1);
        let mut row = Row::new(format!("disjoint p=11 f=1 exhaustive, radius {}", cfg.radius));
        let weights: Vec<_> = all_descended_weights(&c)
            .into_iter()
            .filter(|x| crate::weights::descended_rep(x, &c).is_ok_and(|m| depth(&m, &c) >= 3))
            .collect();
        for r in generic_descended_types(&c, 2) {
            let jh = jh_factors_any(&r, &c).unwrap_or_default();
            for x in weights.iter().filter(|x| !jh.contains(x)) {
                row.record(disjoint_holds(&r, x, &jh, cfg.radius, &c));
            }
        }
        rows.push(row);
    }
    for (p, f) in [(11, 2), (13, 2)] {
        if !cfg.wants(p, f) {
            continue;
        }
        let c = ctx(p, f);
        let mut rng = cfg.rng(950 + p as u64);
        let mut row = Row::new(format!("disjoint {} same central character", label(p, f)));
        while row.checked < cfg.trials(100) as u64 {
            let r = sample::deep_rep(&mut rng, &c, 2, true).expect("2-deep exists");
            let Some(x) = sample::deep_weight(&mut rng, &c, 3, true) else { continue };
            let jh = jh_factors_any(&r, &c).unwrap_or_default();
            let same = central_character_type(&r, &c).ok() == central_character_weight(&x, &c).ok();
            if jh.contains(&x) || !same {
                continue;
            }
            row.record(disjoint_holds(&r, &x, &jh, cfg.radius, &c));
        }
        rows.push(row);
    }
    SuiteReport { name: "neighbor-disjoint", rows }
}

fn neighbor_holds(
    r: &DlRepU,
    x: &SerreWeightU,
    y: &SerreWeightU,
    d: usize,
    jh: &[SerreWeightU],
    c: &PrimeContext,
) -> bool {
    let Ok(r2) = neighbor_type(r, x, y, c) else { return false };
    let Ok(jh2) = jh_factors_any(&r2, c) else { return false };
    let common: Vec<_> = jh.iter().filter(|g| jh2.contains(*g)).collect();
    jh2.contains(x)
        && jh2.contains(y)
        && common.len() == 1 << d
        && common
            .iter()
            .all(|g| *g == y || graph_distance(r, x, g, c).is_ok_and(|e| e < d))
}

fn disjoint_holds(
    r: &DlRepU,
    x: &SerreWeightU,
    jh: &BTreeSet<SerreWeightU>,
    radius: i64,
    c: &PrimeContext,
) -> bool {
    let Ok(r2) = disjoint_type(r, x, radius, c) else { return false };
    jh_factors_any(&r2, c).is_ok_and(|jh2| jh2.contains(x) && jh2.is_disjoint(jh))
}

// ------------------------------------------------------------ dimension

fn dimension_suite(cfg: &SuiteConfig) -> SuiteReport {
    let mut rng = cfg.rng(1000);
    let mut row = Row::new("sampled (f_v) tuples");
    for _ in 0..cfg.trials(20) {
        let len = rng.gen_range(1..=6);
        let fs: Vec<usize> = (0..len).map(|_| rng.gen_range(1..=5)).collect();
        let (lhs, rhs) = global_dimension_identity(&fs);
        row.record(lhs == rhs);
    }
    SuiteReport { name: "dimension", rows: vec![row] }
}
