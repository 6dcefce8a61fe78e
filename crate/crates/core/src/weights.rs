//! Serre weights and Deligne-Lusztig data on both sides, with Jordan-Hoelder
//! sets, the beta maps, isomorphism testing and descent.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hnf;
use crate::lattice::{
    self, depth, depth_from_shifted, depth_gl, eta, f_minus_w_matrix, f_minus_w_matrix_gl,
    frobenius, frobenius_gl, from_x0_coords, is_p_restricted, is_p_restricted_gl, phi_inverse,
    phi_inverse_gl, rho, rho_gl, wact, wact_gl, x0_coords, GlChar, PrimeContext, UChar, WeylElt,
};

// ------------------------------------------------------------------ weights

/// A Serre weight of the unitary group, stored as its canonical representative.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct SerreWeightU {
    rep: UChar,
}

impl SerreWeightU {
    pub fn rep(&self) -> &UChar {
        &self.rep
    }
}

fn section_u(xs: &[i64]) -> UChar {
    UChar::from_canonical(xs.iter().map(|&x| [x, 0, 0]).collect())
}

/// The class of a p-restricted character.
pub fn weight(mu: &UChar, ctx: &PrimeContext) -> Result<SerreWeightU> {
    check_len(mu.len(), ctx.f())?;
    if !is_p_restricted(mu, ctx) {
        return Err(Error::NotPRestricted);
    }
    let sec = section_u(&mu.pairings());
    let rest = x0_coords(&(mu - &sec)).expect("remainder has pairing zero");
    let red = ctx.u_weight_lattice().reduce(&rest);
    Ok(SerreWeightU { rep: &sec + &from_x0_coords(&red) })
}

/// Equality of classes decided by lattice membership of the difference.
pub fn weights_equal(x: &SerreWeightU, y: &SerreWeightU, ctx: &PrimeContext) -> bool {
    x.rep.pairings() == y.rep.pairings() && lattice::in_f_minus_1_x0(&(&x.rep - &y.rep), ctx)
}

/// A Serre weight of `GL_2(F_{q^2})`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct SerreWeightGl {
    rep: GlChar,
}

impl SerreWeightGl {
    pub fn rep(&self) -> &GlChar {
        &self.rep
    }
}

pub fn weight_gl(mu: &GlChar, ctx: &PrimeContext) -> Result<SerreWeightGl> {
    check_len(mu.len(), 2 * ctx.f())?;
    if !is_p_restricted_gl(mu, ctx) {
        return Err(Error::NotPRestricted);
    }
    let xs = mu.pairings();
    let rest: Vec<i64> = mu.0.iter().map(|x| x[1]).collect();
    let red = ctx.gl_weight_lattice().reduce(&rest);
    Ok(SerreWeightGl { rep: GlChar(xs.iter().zip(&red).map(|(&x, &m)| [x + m, m]).collect()) })
}

fn boxes(dims: &[i64]) -> Vec<Vec<i64>> {
    let mut out = vec![vec![]];
    for &d in dims {
        out = out
            .into_iter()
            .flat_map(|v| (0..d).map(move |x| [v.clone(), vec![x]].concat()))
            .collect();
    }
    out
}

/// Every Serre weight, one representative per class. Only sensible for small `q`.
pub fn all_weights(ctx: &PrimeContext) -> Vec<SerreWeightU> {
    let f = ctx.f();
    let diag: Vec<i64> = ctx.u_weight_lattice().diagonal().iter().map(|&d| d as i64).collect();
    let mut out = Vec::new();
    for xs in boxes(&vec![ctx.p(); f]) {
        let sec = section_u(&xs);
        for c in boxes(&diag) {
            out.push(SerreWeightU { rep: &sec + &from_x0_coords(&c) });
        }
    }
    out
}

pub fn all_descended_weights(ctx: &PrimeContext) -> Vec<SerreWeightU> {
    all_weights(ctx).into_iter().filter(|x| is_descendable(x, ctx)).collect()
}

pub fn all_weights_gl(ctx: &PrimeContext) -> Vec<SerreWeightGl> {
    let n = 2 * ctx.f();
    let diag: Vec<i64> = ctx.gl_weight_lattice().diagonal().iter().map(|&d| d as i64).collect();
    let mut out = Vec::new();
    for xs in boxes(&vec![ctx.p(); n]) {
        for m in boxes(&diag) {
            let rep = GlChar(xs.iter().zip(&m).map(|(&x, &m)| [x + m, m]).collect());
            out.push(SerreWeightGl { rep });
        }
    }
    out
}

/// Descended presentations `R_w(mu)` covering every class of descended type:
/// all `w`, all pairings in `[0, p)`, and `b_0` over a full residue system.
pub fn descended_type_universe(ctx: &PrimeContext) -> Vec<DlRepU> {
    let f = ctx.f();
    let mut out = Vec::new();
    for w in WeylElt::all(f) {
        for xs in boxes(&vec![ctx.p(); f]) {
            for b0 in 0..ctx.m() {
                let mu = UChar::from_canonical(
                    xs.iter()
                        .enumerate()
                        .map(|(i, &x)| if i == 0 { [x + b0, b0, 0] } else { [x, 0, 0] })
                        .collect(),
                );
                out.push(DlRepU { w: w.clone(), mu });
            }
        }
    }
    out
}

/// GL presentations `R'_w(lambda)`: pairings in `[0, p)` and the first
/// second coordinate over a full residue system. Covers every class whose
/// `w` has even length.
pub fn gl_type_universe(ctx: &PrimeContext) -> Vec<DlRepGl> {
    let n = 2 * ctx.f();
    let mut out = Vec::new();
    for w in WeylElt::all(n) {
        for xs in boxes(&vec![ctx.p(); n]) {
            for m0 in 0..ctx.m() {
                let mu = GlChar(
                    xs.iter()
                        .enumerate()
                        .map(|(i, &x)| if i == 0 { [x + m0, m0] } else { [x, 0] })
                        .collect(),
                );
                out.push(DlRepGl { w: w.clone(), mu });
            }
        }
    }
    out
}

fn check_len(got: usize, expected: usize) -> Result<()> {
    if got != expected {
        return Err(Error::LengthMismatch { expected, got });
    }
    Ok(())
}

// ------------------------------------------------------------ DL data

/// `R_w(mu)` as raw data; isomorphism is [`dl_isomorphic`].
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct DlRepU {
    pub w: WeylElt,
    pub mu: UChar,
}

impl DlRepU {
    pub fn new(w: WeylElt, mu: UChar) -> DlRepU {
        DlRepU { w, mu }
    }
    fn check(&self, ctx: &PrimeContext) -> Result<()> {
        check_len(self.w.len(), ctx.f())?;
        check_len(self.mu.len(), ctx.f())
    }
    /// Depth of `mu - eta` for this presentation.
    pub fn depth(&self, ctx: &PrimeContext) -> i64 {
        depth(&(&self.mu - &eta(self.mu.len())), ctx)
    }
}

/// `R'_w(mu)` on the GL side.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct DlRepGl {
    pub w: WeylElt,
    pub mu: GlChar,
}

impl DlRepGl {
    pub fn new(w: WeylElt, mu: GlChar) -> DlRepGl {
        DlRepGl { w, mu }
    }
    fn check(&self, ctx: &PrimeContext) -> Result<()> {
        check_len(self.w.len(), 2 * ctx.f())?;
        check_len(self.mu.len(), 2 * ctx.f())
    }
    /// Depth of `mu - rho'` for this presentation.
    pub fn depth(&self, ctx: &PrimeContext) -> i64 {
        depth_gl(&(&self.mu - &rho_gl(self.mu.len())), ctx)
    }
}

fn indicator(w: &WeylElt, on_one: [i64; 3], on_s: [i64; 3]) -> UChar {
    UChar::from_canonical(w.0.iter().map(|&s| if s { on_s } else { on_one }).collect())
}

fn indicator_gl(w: &WeylElt, on_one: [i64; 2], on_s: [i64; 2]) -> GlChar {
    GlChar(w.0.iter().map(|&s| if s { on_s } else { on_one }).collect())
}

/// The Jordan-Hoelder factor indexed by `w'`.
pub fn jh_factor(r: &DlRepU, wp: &WeylElt, ctx: &PrimeContext) -> Result<SerreWeightU> {
    let f = ctx.f();
    let p = ctx.p();
    let gamma = indicator(wp, [1, 1, 0], [0, 0, 0]);
    let rho_w = indicator(wp, [0, 0, 0], [1, 0, 0]);
    let eps = indicator(&WeylElt::longest(f).mul(wp), [0, 0, 0], [0, 1, 0]);
    let inner = &r.mu - &wact(&r.w, &phi_inverse(&eps));
    let lam = &(&(&gamma.scale(p) + &wact(wp, &inner)) + &rho_w.scale(p)) - &phi_inverse(&rho(f));
    weight(&lam, ctx)
}

/// The `2^f` constituents of the reduction of `R_w(mu)`; needs `mu - eta` 1-deep.
pub fn jh_factors(r: &DlRepU, ctx: &PrimeContext) -> Result<BTreeSet<SerreWeightU>> {
    r.check(ctx)?;
    let d = r.depth(ctx);
    if d < 1 {
        return Err(Error::DepthTooSmall { required: 1, found: d });
    }
    let mut out = BTreeSet::new();
    for wp in WeylElt::all(ctx.f()) {
        out.insert(jh_factor(r, &wp, ctx)?);
    }
    if out.len() != 1 << ctx.f() {
        return Err(Error::DistinctnessViolated);
    }
    Ok(out)
}

pub fn jh_factor_gl(r: &DlRepGl, wp: &WeylElt, ctx: &PrimeContext) -> Result<SerreWeightGl> {
    let n = 2 * ctx.f();
    let p = ctx.p();
    let gamma = indicator_gl(wp, [1, 1], [0, 0]);
    let rho_w = indicator_gl(wp, [0, 0], [1, 0]);
    let eps = indicator_gl(&WeylElt::longest(n).mul(wp), [0, 0], [0, 1]);
    let inner = &r.mu - &wact_gl(&r.w, &phi_inverse_gl(&eps));
    let lam = &(&(&gamma.scale(p) + &wact_gl(wp, &inner)) + &rho_w.scale(p)) - &rho_gl(n);
    weight_gl(&lam, ctx)
}

/// The `2^{2f}` constituents on the GL side; needs `mu - rho'` 1-deep.
pub fn jh_factors_gl(r: &DlRepGl, ctx: &PrimeContext) -> Result<BTreeSet<SerreWeightGl>> {
    r.check(ctx)?;
    let d = r.depth(ctx);
    if d < 1 {
        return Err(Error::DepthTooSmall { required: 1, found: d });
    }
    let mut out = BTreeSet::new();
    for wp in WeylElt::all(2 * ctx.f()) {
        out.insert(jh_factor_gl(r, &wp, ctx)?);
    }
    if out.len() != 1 << (2 * ctx.f()) {
        return Err(Error::DistinctnessViolated);
    }
    Ok(out)
}

/// `beta(R_w(mu)) = R_{s w}(s(mu - eta) + (p-1) eta)`.
pub fn beta(r: &DlRepU, ctx: &PrimeContext) -> Result<DlRepU> {
    r.check(ctx)?;
    if !is_p_restricted(&r.mu, ctx) {
        return Err(Error::NotPRestricted);
    }
    let f = ctx.f();
    let s = WeylElt::longest(f);
    let e = eta(f);
    let mu = &wact(&s, &(&r.mu - &e)) + &e.scale(ctx.p() - 1);
    Ok(DlRepU { w: s.mul(&r.w), mu })
}

pub fn beta_gl(r: &DlRepGl, ctx: &PrimeContext) -> Result<DlRepGl> {
    r.check(ctx)?;
    if !is_p_restricted_gl(&r.mu, ctx) {
        return Err(Error::NotPRestricted);
    }
    let n = 2 * ctx.f();
    let s = WeylElt::longest(n);
    let rp = rho_gl(n);
    let mu = &wact_gl(&s, &(&r.mu - &rp)) + &rp.scale(ctx.p() - 1);
    Ok(DlRepGl { w: s.mul(&r.w), mu })
}

// ---------------------------------------------------------- isomorphism

/// A pair `(v, mu')` realizing `r2 = R_{v w F(v)^{-1}}(v(mu) + F(mu') - w2(mu'))`.
pub fn dl_witness(r1: &DlRepU, r2: &DlRepU, ctx: &PrimeContext) -> Option<(WeylElt, UChar)> {
    if r1.check(ctx).is_err() || r2.check(ctx).is_err() {
        return None;
    }
    for v in WeylElt::all(ctx.f()) {
        if r1.w.f_conjugate(&v) != r2.w {
            continue;
        }
        let target = &r2.mu - &wact(&v, &r1.mu);
        let a = f_minus_w_matrix(&r2.w, ctx);
        if let Some(x) = hnf::solve_i64(&a, &target.to_flat()) {
            return Some((v, UChar::of_flat(&x)));
        }
    }
    None
}

pub fn dl_isomorphic(r1: &DlRepU, r2: &DlRepU, ctx: &PrimeContext) -> bool {
    dl_witness(r1, r2, ctx).is_some()
}

pub fn dl_isomorphic_gl(r1: &DlRepGl, r2: &DlRepGl, ctx: &PrimeContext) -> bool {
    if r1.check(ctx).is_err() || r2.check(ctx).is_err() {
        return false;
    }
    WeylElt::all(2 * ctx.f()).any(|v| {
        r1.w.f_conjugate(&v) == r2.w && {
            let target = &r2.mu - &wact_gl(&v, &r1.mu);
            hnf::solve(&f_minus_w_matrix_gl(&r2.w, ctx), &target.flat()).is_some()
        }
    })
}

/// Apply the equivalence with data `(v, nu)`.
pub fn re_present(r: &DlRepU, v: &WeylElt, nu: &UChar, ctx: &PrimeContext) -> DlRepU {
    let w2 = r.w.f_conjugate(v);
    let mu = &(&wact(v, &r.mu) + &frobenius(nu, ctx)) - &wact(&w2, nu);
    DlRepU { w: w2, mu }
}

pub fn re_present_gl(r: &DlRepGl, v: &WeylElt, nu: &GlChar, ctx: &PrimeContext) -> DlRepGl {
    let w2 = r.w.f_conjugate(v);
    let mu = &(&wact_gl(v, &r.mu) + &frobenius_gl(nu, ctx)) - &wact_gl(&w2, nu);
    DlRepGl { w: w2, mu }
}

/// Offsets `y` (one per slot) making every `base_i + p y_{i+1} - e_i y_i`
/// land in `[1, p - 1]`, chosen to maximize depth. Given `y_0` the remaining
/// offsets are forced, so only `y_0` is searched.
fn best_carries(base: &[i64], e: &[i64], p: i64) -> Option<(Vec<i64>, i64)> {
    let n = base.len();
    let bound = base.iter().map(|b| b.abs()).max().unwrap_or(0) + p;
    let mut best: Option<(Vec<i64>, i64)> = None;
    for y0 in -bound..=bound {
        let mut y = vec![y0];
        let mut t = Vec::with_capacity(n);
        for i in 0..n {
            // p y_{i+1} = T_i + e_i y_i - base_i for some T_i in [1, p-1]
            let c = e[i] * y[i] - base[i];
            let next = (c + p - 1).div_euclid(p);
            let ti = p * next - c;
            if !(1..p).contains(&ti) {
                break;
            }
            t.push(ti);
            y.push(next);
        }
        if t.len() < n || y[n] != y0 {
            continue;
        }
        let d = depth_from_shifted(&t, p);
        if best.as_ref().is_none_or(|(_, bd)| d > *bd) {
            y.pop();
            best = Some((y, d));
        }
    }
    best
}

fn signs(w: &WeylElt) -> Vec<i64> {
    w.0.iter().map(|&s| if s { -1 } else { 1 }).collect()
}

/// Re-present `r` through `v`, choosing the translation that makes
/// `mu - eta` as deep as possible. Returns the presentation and its depth.
pub fn present_via(r: &DlRepU, v: &WeylElt, ctx: &PrimeContext) -> Option<(DlRepU, i64)> {
    let w2 = r.w.f_conjugate(v);
    let (y, d) = best_carries(&wact(v, &r.mu).pairings(), &signs(&w2), ctx.p())?;
    let nu = UChar::from_canonical(y.iter().map(|&yi| [yi, 0, 0]).collect());
    let out = re_present(r, v, &nu, ctx);
    debug_assert_eq!(out.depth(ctx), d);
    Some((out, d))
}

/// GL analogue of [`present_via`].
pub fn present_via_gl(r: &DlRepGl, v: &WeylElt, ctx: &PrimeContext) -> Option<(DlRepGl, i64)> {
    let w2 = r.w.f_conjugate(v);
    let (y, d) = best_carries(&wact_gl(v, &r.mu).pairings(), &signs(&w2), ctx.p())?;
    let nu = GlChar(y.iter().map(|&yi| [yi, 0]).collect());
    let out = re_present_gl(r, v, &nu, ctx);
    debug_assert_eq!(out.depth(ctx), d);
    Some((out, d))
}

pub fn deep_presentation_gl(r: &DlRepGl, ctx: &PrimeContext) -> Result<(DlRepGl, i64)> {
    r.check(ctx)?;
    let mut best: Option<(DlRepGl, i64)> = None;
    for v in WeylElt::all(2 * ctx.f()) {
        if let Some((cand, d)) = present_via_gl(r, &v, ctx) {
            if best.as_ref().is_none_or(|(_, bd)| d > *bd) {
                best = Some((cand, d));
            }
        }
    }
    Ok(best.unwrap_or_else(|| (r.clone(), r.depth(ctx))))
}

/// Jordan-Hoelder factors computed through a deepest presentation.
pub fn jh_factors_any(r: &DlRepU, ctx: &PrimeContext) -> Result<BTreeSet<SerreWeightU>> {
    jh_factors(&deep_presentation(r, ctx)?.0, ctx)
}

pub fn jh_factors_gl_any(r: &DlRepGl, ctx: &PrimeContext) -> Result<BTreeSet<SerreWeightGl>> {
    jh_factors_gl(&deep_presentation_gl(r, ctx)?.0, ctx)
}

/// The deepest presentation of `r` over all Weyl conjugations (first found on ties).
pub fn deep_presentation(r: &DlRepU, ctx: &PrimeContext) -> Result<(DlRepU, i64)> {
    r.check(ctx)?;
    let mut best: Option<(DlRepU, i64)> = None;
    for v in WeylElt::all(ctx.f()) {
        if let Some((cand, d)) = present_via(r, &v, ctx) {
            if best.as_ref().is_none_or(|(_, bd)| d > *bd) {
                best = Some((cand, d));
            }
        }
    }
    Ok(best.unwrap_or_else(|| (r.clone(), r.depth(ctx))))
}

/// Genericity: the largest `n` with an `n`-deep presentation (`-1` if none).
pub fn genericity(r: &DlRepU, ctx: &PrimeContext) -> Result<i64> {
    Ok(deep_presentation(r, ctx)?.1)
}

/// A deep presentation whose `mu` has `c = d = 0`.
pub fn deep_descended(r: &DlRepU, ctx: &PrimeContext) -> Result<(DlRepU, i64)> {
    let (deep, d) = deep_presentation(r, ctx)?;
    Ok((descend_to_u2(&deep, ctx)?, d))
}

// --------------------------------------------------------------- descent

/// Pairing-zero `x` with `(F - 1) x` cancelling the `c` entries of `mu`.
fn descent_correction(mu: &UChar, ctx: &PrimeContext) -> Result<UChar> {
    let f = ctx.f();
    let p = ctx.p();
    // c-part of (F - 1)(n v): p n_{i+1} - n_i
    let a: Vec<Vec<i64>> = (0..f)
        .map(|i| {
            (0..f)
                .map(|j| {
                    let mut t = 0;
                    if (i + 1) % f == j {
                        t += p;
                    }
                    if i == j {
                        t -= 1;
                    }
                    t
                })
                .collect()
        })
        .collect();
    let b: Vec<i64> = mu.entries().iter().map(|x| -x[2]).collect();
    let n = hnf::solve_i64(&a, &b).ok_or(Error::NotCentrallyTrivial)?;
    let mut coords = vec![0; 2 * f];
    coords[f..].copy_from_slice(&n);
    let x = from_x0_coords(&coords);
    Ok(&frobenius(&x, ctx) - &x)
}

/// An isomorphic presentation with `c = d = 0`, when the central action is trivial.
pub fn descend_to_u2(r: &DlRepU, ctx: &PrimeContext) -> Result<DlRepU> {
    r.check(ctx)?;
    let corr = descent_correction(&r.mu, ctx)?;
    let out = DlRepU { w: r.w.clone(), mu: &r.mu + &corr };
    debug_assert!(out.mu.is_descended());
    Ok(out)
}

/// A representative of the weight with `c = d = 0`.
pub fn descended_rep(x: &SerreWeightU, ctx: &PrimeContext) -> Result<UChar> {
    let corr = descent_correction(&x.rep, ctx).map_err(|_| Error::NotDescended)?;
    Ok(&x.rep + &corr)
}

pub fn is_descendable(x: &SerreWeightU, ctx: &PrimeContext) -> bool {
    descended_rep(x, ctx).is_ok()
}

fn central_of(mu: &UChar, ctx: &PrimeContext) -> i64 {
    let n = ctx.q() as i128 + 1;
    let mut acc: i128 = 0;
    let mut pw: i128 = 1;
    for x in mu.entries() {
        acc = (acc + (x[0] + x[1]) as i128 * pw).rem_euclid(n);
        pw = pw * ctx.p() as i128 % n;
    }
    acc as i64
}

/// `sum (a_i + b_i) p^i mod (q + 1)` on a descended representative.
pub fn central_character_weight(x: &SerreWeightU, ctx: &PrimeContext) -> Result<i64> {
    Ok(central_of(&descended_rep(x, ctx)?, ctx))
}

/// Same normalization for a type given in descended form.
pub fn central_character_type(r: &DlRepU, ctx: &PrimeContext) -> Result<i64> {
    r.check(ctx)?;
    if !r.mu.is_descended() {
        return Err(Error::NotDescended);
    }
    Ok(central_of(&r.mu, ctx))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ch(raw: &[[i64; 4]]) -> UChar {
        UChar::from_raw(raw)
    }

    #[test]
    fn weight_equality_examples() {
        let c = PrimeContext::new(7, 1).unwrap();
        let a = weight(&ch(&[[3, 1, 0, 0]]), &c).unwrap();
        let b = weight(&ch(&[[-5, -7, 0, 0]]), &c).unwrap();
        assert_eq!(a, b);
        assert!(weights_equal(&a, &b, &c));
        let d = weight(&ch(&[[3, 2, 0, 0]]), &c).unwrap();
        assert!(!weights_equal(&a, &d, &c));
        assert_ne!(a, d);
        assert_eq!(weight(&ch(&[[9, 1, 0, 0]]), &c), Err(Error::NotPRestricted));
    }

    #[test]
    fn jh_example() {
        let c = PrimeContext::new(7, 1).unwrap();
        let r = DlRepU::new(WeylElt(vec![false]), ch(&[[3, 1, 0, 0]]));
        let jh = jh_factors(&r, &c).unwrap();
        let expect: BTreeSet<_> = [ch(&[[3, 1, 0, 0]]), ch(&[[8, 4, 0, 0]])]
            .iter()
            .map(|m| weight(m, &c).unwrap())
            .collect();
        assert_eq!(jh, expect);
        let f1 = jh_factor(&r, &WeylElt(vec![false]), &c).unwrap();
        assert_eq!(f1, weight(&ch(&[[3, 1, 0, 0]]), &c).unwrap());
    }

    #[test]
    fn beta_example() {
        let c = PrimeContext::new(7, 1).unwrap();
        let r = DlRepU::new(WeylElt(vec![false]), ch(&[[3, 1, 0, 0]]));
        let b = beta(&r, &c).unwrap();
        assert_eq!(b, DlRepU::new(WeylElt(vec![true]), ch(&[[2, 2, 5, 0]])));
    }

    #[test]
    fn isomorphism_examples() {
        let c = PrimeContext::new(7, 1).unwrap();
        let r = DlRepU::new(WeylElt(vec![false]), ch(&[[3, 1, 0, 0]]));
        assert!(dl_isomorphic(&r, &r, &c));
        let x = ch(&[[0, 0, 1, 0]]);
        let shifted = &r.mu + &(&frobenius(&x, &c) - &x);
        assert!(dl_isomorphic(&r, &DlRepU::new(r.w.clone(), shifted), &c));
        assert!(!dl_isomorphic(&r, &DlRepU::new(r.w.clone(), ch(&[[4, 1, 0, 0]])), &c));
    }

    #[test]
    fn descent_examples() {
        let c = PrimeContext::new(7, 1).unwrap();
        let r = DlRepU::new(WeylElt(vec![true]), ch(&[[0, 4, 0, 0]]));
        assert_eq!(descend_to_u2(&r, &c).unwrap(), r);
        let r = DlRepU::new(WeylElt(vec![false]), ch(&[[3, 1, 6, 0]]));
        let d = descend_to_u2(&r, &c).unwrap();
        assert!(d.mu.is_descended());
        assert!(dl_isomorphic(&r, &d, &c));
        let r = DlRepU::new(WeylElt(vec![true]), ch(&[[2, 2, 5, 0]]));
        assert_eq!(descend_to_u2(&r, &c), Err(Error::NotCentrallyTrivial));
    }

    #[test]
    fn central_character_examples() {
        let c = PrimeContext::new(7, 1).unwrap();
        let z = weight(&UChar::zero(1), &c).unwrap();
        assert_eq!(central_character_weight(&z, &c).unwrap(), 0);
        let x = weight(&ch(&[[3, 1, 0, 0]]), &c).unwrap();
        assert_eq!(central_character_weight(&x, &c).unwrap(), 4);
    }
}
