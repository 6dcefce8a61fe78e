//! Tame L-parameters, inertial types and the predicted weight sets.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::base_change::{bc_char, bc_weight};
use crate::error::{Error, Result};
use crate::lattice::{
    alpha_of, depth, eta, rho_gl, GlChar, PrimeContext, UChar, WeylElt,
};
use crate::weights::{
    beta, beta_gl, deep_descended, deep_presentation, descend_to_u2, dl_isomorphic, jh_factors_any, jh_factors_gl_any, DlRepGl, DlRepU,
    SerreWeightGl, SerreWeightU,
};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum TameLParam {
    Ps {
        r: i64,
        s: i64,
        #[serde(default = "unramified_one")]
        lambda: String,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        nu: Option<String>,
    },
    Irr {
        k: i64,
        l: i64,
        s: i64,
        #[serde(default = "unramified_one")]
        lambda: String,
    },
}

fn unramified_one() -> String {
    "1".into()
}

impl TameLParam {
    pub fn ps(r: i64, s: i64) -> TameLParam {
        TameLParam::Ps { r, s, lambda: "1".into(), nu: Some("1".into()) }
    }

    pub fn irr(k: i64, l: i64, s: i64) -> TameLParam {
        TameLParam::Irr { k, l, s, lambda: "1".into() }
    }

    pub fn s(&self) -> i64 {
        match self {
            TameLParam::Ps { s, .. } | TameLParam::Irr { s, .. } => *s,
        }
    }

    /// Whether the multiplier is the mod `p` cyclotomic character.
    pub fn is_cyclotomic(&self, ctx: &PrimeContext) -> bool {
        let q = ctx.q();
        (self.s() - nf(ctx)).rem_euclid(q - 1) == 0
    }
}

/// `(q - 1) / (p - 1)`.
fn nf(ctx: &PrimeContext) -> i64 {
    (ctx.q() - 1) / (ctx.p() - 1)
}

/// Unordered pair of exponents of `omega_{2f}` on inertia.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct InertialTypeGl {
    exponents: [i64; 2],
}

impl InertialTypeGl {
    pub fn new(a: i64, b: i64, ctx: &PrimeContext) -> InertialTypeGl {
        let m = ctx.m();
        let (a, b) = (a.rem_euclid(m), b.rem_euclid(m));
        InertialTypeGl { exponents: [a.min(b), a.max(b)] }
    }

    pub fn exponents(&self) -> [i64; 2] {
        self.exponents
    }

    fn check_nontrivial(&self) -> Result<()> {
        if self.exponents.contains(&0) {
            return Err(Error::TrivialCharacter);
        }
        Ok(())
    }
}

fn modmul(a: i64, b: i64, m: i64) -> i64 {
    (a as i128 * b as i128).rem_euclid(m as i128) as i64
}

pub fn inertial_exponents(rho: &TameLParam, ctx: &PrimeContext) -> InertialTypeGl {
    let (q, m) = (ctx.q(), ctx.m());
    match *rho {
        TameLParam::Ps { r, s, .. } => {
            InertialTypeGl::new(r, modmul(-q, r, m) + modmul(q + 1, s, m), ctx)
        }
        TameLParam::Irr { k, l, s, .. } => {
            InertialTypeGl::new(s + modmul(1 - q, k, m), s + modmul(1 - q, l, m), ctx)
        }
    }
}

/// `{q a, q b} = {-a, -b}` modulo `q^2 - 1`.
pub fn is_essentially_selfdual(tau: &InertialTypeGl, ctx: &PrimeContext) -> bool {
    is_selfdual_twisted(tau, 0, ctx)
}

/// `{q a, q b} = {chi - a, chi - b}`: self-duality up to the multiplier `omega_{2f}^chi`.
pub fn is_selfdual_twisted(tau: &InertialTypeGl, chi: i64, ctx: &PrimeContext) -> bool {
    let (q, m) = (ctx.q(), ctx.m());
    let [a, b] = tau.exponents;
    let lhs = InertialTypeGl::new(modmul(q, a, m), modmul(q, b, m), ctx);
    lhs == InertialTypeGl::new(chi - a, chi - b, ctx)
}

/// Exponent of the multiplier of a cyclotomic parameter.
pub fn cyclotomic_multiplier(ctx: &PrimeContext) -> i64 {
    modmul(ctx.q() + 1, nf(ctx), ctx.m())
}

/// Base `p` digits of `x mod p^{2f} - 1`, least significant first.
pub fn digits(x: i64, ctx: &PrimeContext) -> Vec<i64> {
    let mut x = x.rem_euclid(ctx.m());
    (0..2 * ctx.f())
        .map(|_| {
            let d = x % ctx.p();
            x /= ctx.p();
            d
        })
        .collect()
}

pub fn is_n_generic_type(tau: &InertialTypeGl, n: i64, ctx: &PrimeContext) -> Result<bool> {
    tau.check_nontrivial()?;
    let (a, b) = (digits(tau.exponents[0], ctx), digits(tau.exponents[1], ctx));
    Ok(a.iter().zip(&b).all(|(x, y)| {
        let d = (x - y).abs();
        n < d && d < ctx.p() - n
    }))
}

/// The rotated exponent whose most significant digit sits at slot `j - 1`.
fn shifted(x: i64, j: usize, ctx: &PrimeContext) -> i64 {
    let d = digits(x, ctx);
    let n = d.len();
    (0..n).rev().fold(0, |acc, i| acc * ctx.p() + d[(i + j) % n])
}

/// `w_j = s` exactly when the second exponent dominates after rotation by `j`.
pub fn orientation(tau: &InertialTypeGl, ctx: &PrimeContext) -> Result<WeylElt> {
    tau.check_nontrivial()?;
    let [a, b] = tau.exponents;
    Ok(WeylElt((0..2 * ctx.f()).map(|j| shifted(b, j, ctx) > shifted(a, j, ctx)).collect()))
}

/// The two `omega_{2f}` exponents of `tau(w, mu)` for a GL-side pair of even
/// parity: conjugate `w` to the identity and read off `sum p^i mu_i`.
pub fn exponents_of_tau(w: &WeylElt, mu: &GlChar, ctx: &PrimeContext) -> Result<InertialTypeGl> {
    let n = 2 * ctx.f();
    if w.len() != n || mu.len() != n {
        return Err(Error::LengthMismatch { expected: n, got: mu.len() });
    }
    if w.length() % 2 == 1 {
        return Err(Error::PreconditionViolated("odd Weyl element".into()));
    }
    let m = ctx.m();
    let (mut a, mut b, mut pw) = (0i64, 0i64, 1i64);
    let mut v = false;
    for i in 0..n {
        if i > 0 {
            v ^= w.0[i];
        }
        let [x, y] = mu.0[i];
        let (x, y) = if v { (y, x) } else { (x, y) };
        a = (a + modmul(x, pw, m)).rem_euclid(m);
        b = (b + modmul(y, pw, m)).rem_euclid(m);
        pw = modmul(pw, ctx.p(), m);
    }
    Ok(InertialTypeGl::new(a, b, ctx))
}

fn standard_w(f: usize, cuspidal: bool) -> WeylElt {
    let mut w = vec![false; f];
    w[0] = cuspidal;
    WeylElt(w)
}

/// Descended `mu` with `sum a_i p^i = a` and `sum b_i p^i = b`.
fn descended_from_sums(a: i64, b: i64, ctx: &PrimeContext) -> UChar {
    let q = ctx.q();
    let split = |x: i64| -> (Vec<i64>, i64) {
        let mut x = x.rem_euclid(q * q - 1);
        let mut lo = Vec::new();
        for _ in 0..ctx.f() {
            lo.push(x % ctx.p());
            x /= ctx.p();
        }
        (lo, x)
    };
    let (alo, ahi) = split(a);
    let (blo, bhi) = split(b);
    let mut e: Vec<[i64; 3]> = alo.iter().zip(&blo).map(|(&x, &y)| [x, y, 0]).collect();
    e[0][0] += ahi * q;
    e[0][1] += bhi * q;
    UChar::from_canonical(e)
}

/// Genericity of `sigma(tau)`, measured on its deepest presentation. One more
/// than the digit-difference bound of [`is_n_generic_type`].
pub fn type_genericity(tau: &InertialTypeGl, ctx: &PrimeContext) -> Result<i64> {
    crate::weights::genericity(&sigma_of_type(tau, ctx)?, ctx)
}

/// The unitary type attached to a self-dual inertial type.
pub fn sigma_of_type(tau: &InertialTypeGl, ctx: &PrimeContext) -> Result<DlRepU> {
    tau.check_nontrivial()?;
    let (q, m) = (ctx.q(), ctx.m());
    let [e1, e2] = tau.exponents;
    let r = if modmul(-q, e1, m) == e2 {
        if e1 == e2 {
            return Err(Error::DegenerateParameter);
        }
        // a - q b = e1
        let (lo, hi) = (e1 % q, e1 / q);
        DlRepU::new(standard_w(ctx.f(), false), descended_from_sums(lo, -hi, ctx))
    } else if e1 % (q - 1) == 0 && e2 % (q - 1) == 0 {
        let a = (-(e1 / (q - 1))).rem_euclid(q + 1);
        let b = (-(e2 / (q - 1))).rem_euclid(q + 1);
        if a == b {
            return Err(Error::DegenerateParameter);
        }
        DlRepU::new(standard_w(ctx.f(), true), descended_from_sums(a, b, ctx))
    } else {
        return Err(Error::NotSelfDual);
    };
    Ok(deep_descended(&r, ctx).map(|x| x.0).unwrap_or(r))
}

/// `R'_1` with the digits of the two exponents.
pub fn sigma_prime_of_type(tau: &InertialTypeGl, ctx: &PrimeContext) -> Result<DlRepGl> {
    tau.check_nontrivial()?;
    if !is_essentially_selfdual(tau, ctx) {
        return Err(Error::NotSelfDual);
    }
    let (a, b) = (digits(tau.exponents[0], ctx), digits(tau.exponents[1], ctx));
    let n = 2 * ctx.f();
    Ok(DlRepGl::new(WeylElt::identity(n), GlChar(a.iter().zip(&b).map(|(&x, &y)| [x, y]).collect())))
}

/// `(mu, -s(mu)) + rho'` for the GL side of `V_phi = R_w(mu + eta)`.
fn gl_packaging(mu: &UChar, ctx: &PrimeContext) -> GlChar {
    &bc_char(mu) + &rho_gl(2 * ctx.f())
}

/// `(w, mu)` with `V_phi(rho) = R_w(mu + eta)` and `mu` descended.
pub fn dl_from_lparam(rho: &TameLParam, ctx: &PrimeContext) -> Result<DlRepU> {
    if !rho.is_cyclotomic(ctx) {
        return Err(Error::NotCyclotomic);
    }
    let (q, f) = (ctx.q(), ctx.f());
    let n_f = nf(ctx);
    let t = (rho.s() - n_f).div_euclid(q - 1);
    let (w, mu) = match *rho {
        TameLParam::Ps { r, .. } => {
            let [e1, e2] = inertial_exponents(rho, ctx).exponents();
            if e1 == e2 {
                return Err(Error::DegenerateParameter);
            }
            let x = (r - (q + 1) * n_f).rem_euclid(ctx.m());
            (standard_w(f, false), descended_from_sums(x % q, -(x / q), ctx))
        }
        TameLParam::Irr { k, l, .. } => {
            if (k - l).rem_euclid(q + 1) == 0 {
                return Err(Error::DegenerateParameter);
            }
            (standard_w(f, true), descended_from_sums(k - t, l - t + n_f, ctx))
        }
    };
    let r = DlRepU::new(w, mu);
    let ww = WeylElt(r.w.0.iter().chain(&r.w.0).copied().collect());
    if exponents_of_tau(&ww, &gl_packaging(&r.mu, ctx), ctx)? != inertial_exponents(rho, ctx) {
        return Err(Error::ConsistencyFailure("inertial exponents".into()));
    }
    Ok(improve(r, ctx))
}

/// The parameter whose `(w, mu)` is the given pair, with `mu` descended.
pub fn lparam_from_dl(r: &DlRepU, ctx: &PrimeContext) -> Result<TameLParam> {
    if !r.mu.is_descended() {
        return Err(Error::NotDescended);
    }
    let (q, m) = (ctx.q(), ctx.m());
    let e = eta(ctx.f());
    let std = crate::base_change::standard_form(&DlRepU::new(r.w.clone(), &r.mu + &e));
    let std = DlRepU::new(std.w, &std.mu - &e);
    let sums = |k: usize| {
        std.mu.entries().iter().rev().fold(0i64, |acc, x| (acc * ctx.p() + x[k]).rem_euclid(m))
    };
    let (a, b) = (sums(0), sums(1));
    let n_f = nf(ctx);
    let rho = if std.w.length() == 0 {
        TameLParam::ps((a + modmul(-q, b, m) + modmul(q + 1, n_f, m)).rem_euclid(m), n_f)
    } else {
        TameLParam::irr(a.rem_euclid(q + 1), (b - n_f).rem_euclid(q + 1), n_f)
    };
    Ok(rho)
}

/// Re-presents `R_w(mu + eta)` so that `mu` is as deep as possible.
fn improve(r: DlRepU, ctx: &PrimeContext) -> DlRepU {
    let e = eta(ctx.f());
    let shifted = DlRepU::new(r.w.clone(), &r.mu + &e);
    let Ok((d, _)) = deep_presentation(&shifted, ctx) else { return r };
    // descend the pair, not the type: `eta` itself is not descended
    match descend_to_u2(&DlRepU::new(d.w, &d.mu - &e), ctx) {
        Ok(pair) if depth(&pair.mu, ctx) > depth(&r.mu, ctx) => pair,
        _ => r,
    }
}

/// Depth of the type `R_w(mu + eta)` whose parameter is `(w, mu)`.
pub fn lparam_genericity(rho: &TameLParam, ctx: &PrimeContext) -> Result<i64> {
    let r = dl_from_lparam(rho, ctx)?;
    Ok(depth(&r.mu, ctx))
}

/// `R_{s w}(s(mu) - sum_{w_i = 1} alpha_i)`, a descended form of `beta(V_phi)`.
pub fn beta_descended(r: &DlRepU, ctx: &PrimeContext) -> DlRepU {
    let f = ctx.f();
    let s = WeylElt::longest(f);
    let ones = WeylElt(r.w.0.iter().map(|&x| !x).collect());
    DlRepU::new(s.mul(&r.w), &crate::lattice::wact(&s, &r.mu) - &alpha_of(&ones))
}

fn checked_param(rho: &TameLParam, ctx: &PrimeContext) -> Result<DlRepU> {
    let r = dl_from_lparam(rho, ctx)?;
    let d = depth(&r.mu, ctx);
    if d < 1 {
        return Err(Error::DepthTooSmall { required: 1, found: d });
    }
    Ok(r)
}

pub fn predicted_weights(rho: &TameLParam, ctx: &PrimeContext) -> Result<BTreeSet<SerreWeightU>> {
    let r = checked_param(rho, ctx)?;
    jh_factors_any(&beta_descended(&r, ctx), ctx)
}

/// `beta(V_phi)` computed directly, for comparison with [`beta_descended`].
pub fn beta_of_vphi(r: &DlRepU, ctx: &PrimeContext) -> Result<DlRepU> {
    beta(&DlRepU::new(r.w.clone(), &r.mu + &eta(ctx.f())), ctx)
}

pub fn predicted_weights_gl(rho: &TameLParam, ctx: &PrimeContext) -> Result<BTreeSet<SerreWeightGl>> {
    let r = checked_param(rho, ctx)?;
    let ww = WeylElt(r.w.0.iter().chain(&r.w.0).copied().collect());
    let vphi = DlRepGl::new(ww, gl_packaging(&r.mu, ctx));
    jh_factors_gl_any(&beta_gl(&vphi, ctx)?, ctx)
}

/// `F in W?(rho)` iff `BC(F) in W?(BC(rho))`, both inclusions.
pub fn bc_predicted_check(rho: &TameLParam, ctx: &PrimeContext) -> Result<bool> {
    let u = predicted_weights(rho, ctx)?;
    let g = predicted_weights_gl(rho, ctx)?;
    let mut images = BTreeSet::new();
    for x in &u {
        images.insert(bc_weight(x, ctx)?);
    }
    if !images.is_subset(&g) {
        return Ok(false);
    }
    // every GL weight that is a base change must come from W?
    for y in &g {
        if let Some(x) = crate::base_change::is_bc_image_weight(y, ctx) {
            if !u.contains(&x) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// The isomorphism class of [`beta_descended`] agrees with `beta(V_phi)`.
pub fn beta_forms_agree(r: &DlRepU, ctx: &PrimeContext) -> Result<bool> {
    Ok(dl_isomorphic(&beta_descended(r, ctx), &beta_of_vphi(r, ctx)?, ctx))
}

/// Twist used by the GL side of the parameter, `w` acting on the packaging.
pub fn gl_vphi(r: &DlRepU, ctx: &PrimeContext) -> DlRepGl {
    let ww = WeylElt(r.w.0.iter().chain(&r.w.0).copied().collect());
    DlRepGl::new(ww, gl_packaging(&r.mu, ctx))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::UChar;

    fn ctx(p: i64, f: usize) -> PrimeContext {
        PrimeContext::new(p, f).unwrap()
    }

    fn rep(w: &[bool], mu: &[[i64; 4]]) -> DlRepU {
        DlRepU::new(WeylElt(w.to_vec()), UChar::from_raw(mu))
    }

    #[test]
    fn exponents_of_families() {
        let c = ctx(7, 1);
        let ps = inertial_exponents(&TameLParam::ps(3, 0), &c);
        assert_eq!(ps.exponents(), [3, 27]);
        let irr = inertial_exponents(&TameLParam::irr(1, 0, 0), &c);
        assert_eq!(irr.exponents(), [0, 42]);
        assert_eq!(is_n_generic_type(&irr, 0, &c).unwrap_err().name(), "TrivialCharacter");
        assert_eq!(inertial_exponents(&TameLParam::ps(0, 0), &c).exponents(), [0, 0]);
    }

    #[test]
    fn self_duality() {
        let c = ctx(7, 1);
        assert!(is_essentially_selfdual(&InertialTypeGl::new(3, -21, &c), &c));
        assert!(is_essentially_selfdual(&InertialTypeGl::new(-6 * 2, -6 * 5, &c), &c));
        assert!(!is_essentially_selfdual(&InertialTypeGl::new(1, 2, &c), &c));
    }

    #[test]
    fn digits_and_genericity() {
        let c = ctx(7, 1);
        assert_eq!(digits(27, &c), vec![6, 3]);
        let tau = InertialTypeGl::new(3 + 6 * 7, 3 * 7, &c);
        assert!(is_n_generic_type(&tau, 2, &c).unwrap());
        assert!(!is_n_generic_type(&tau, 3, &c).unwrap());
    }

    #[test]
    fn sigma_of_principal_series() {
        let c = ctx(7, 1);
        let s = sigma_of_type(&InertialTypeGl::new(3, 27, &c), &c).unwrap();
        assert!(dl_isomorphic(&s, &rep(&[false], &[[3, 0, 0, 0]]), &c));
        let zero = GlChar(vec![[0, 0], [0, 0]]);
        assert_eq!(exponents_of_tau(&WeylElt::identity(2), &zero, &c).unwrap().exponents(), [0, 0]);
    }

    #[test]
    fn beta_of_worked_pair() {
        let c = ctx(7, 1);
        let b = beta_descended(&rep(&[false], &[[3, 1, 0, 0]]), &c);
        assert!(dl_isomorphic(&b, &rep(&[true], &[[0, 4, 0, 0]]), &c));
        let rho = lparam_from_dl(&rep(&[false], &[[3, 1, 0, 0]]), &c).unwrap();
        assert_eq!(predicted_weights(&rho, &c).unwrap(), jh_factors_any(&b, &c).unwrap());
    }

    #[test]
    fn degenerate_parameters() {
        let c = ctx(7, 1);
        assert_eq!(dl_from_lparam(&TameLParam::irr(2, 2, 1), &c).unwrap_err().name(), "DegenerateParameter");
        assert_eq!(dl_from_lparam(&TameLParam::ps(3, 0), &c).unwrap_err().name(), "NotCyclotomic");
    }

    #[test]
    fn lparam_json_round_trip() {
        for rho in [TameLParam::ps(4, 1), TameLParam::irr(2, 5, 1)] {
            let s = serde_json::to_string(&rho).unwrap();
            assert_eq!(serde_json::from_str::<TameLParam>(&s).unwrap(), rho);
        }
        let bare: TameLParam = serde_json::from_str(r#"{"kind":"irr","k":2,"l":5,"s":1}"#).unwrap();
        assert_eq!(bare, TameLParam::irr(2, 5, 1));
    }
}
