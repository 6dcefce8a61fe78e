//! Character lattices of the two tori, Weyl and Frobenius actions, depth,
//! and lattice membership.
//!
//! A unitary-side character is stored per embedding as `(a, b, c)`, the
//! representative of `(a, b, c, d)` with `d = 0`. The raw quadruple
//! `(a, b, c, d)` is identified with `(a - d, b + d, c + d, 0)`.

use std::ops::{Add, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hnf::{self, SquareLattice};

/// The prime `p`, the degree `f`, and the lattices used to canonicalize weights.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimeContext {
    p: i64,
    f: usize,
    q: i64,
    m: i64,
    u_weight_lattice: SquareLattice,
    gl_weight_lattice: SquareLattice,
}

fn is_prime(n: i64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

impl PrimeContext {
    pub fn new(p: i64, f: usize) -> Result<PrimeContext> {
        if p < 3 || !is_prime(p) {
            return Err(Error::InvalidContext(format!("p = {p} is not an odd prime")));
        }
        if f == 0 {
            return Err(Error::InvalidContext("f must be positive".into()));
        }
        let mut q: i64 = 1;
        for _ in 0..f {
            q = q.checked_mul(p).ok_or(Error::Overflow)?;
        }
        let m = q
            .checked_mul(q)
            .filter(|v| *v < (1i64 << 60))
            .ok_or(Error::Overflow)?
            - 1;
        let u_gen = u_x0_image_matrix(p, f);
        let gl_gen = gl_x0_image_matrix(p, 2 * f);
        let u_weight_lattice = SquareLattice::from_generators(&u_gen)
            .ok_or_else(|| Error::ConsistencyFailure("(F-1)X0 is not of full rank".into()))?;
        let gl_weight_lattice = SquareLattice::from_generators(&gl_gen)
            .ok_or_else(|| Error::ConsistencyFailure("(F'-1)X0 is not of full rank".into()))?;
        Ok(PrimeContext { p, f, q, m, u_weight_lattice, gl_weight_lattice })
    }

    pub fn p(&self) -> i64 {
        self.p
    }
    pub fn f(&self) -> usize {
        self.f
    }
    /// `p^f`
    pub fn q(&self) -> i64 {
        self.q
    }
    /// `p^(2f) - 1`
    pub fn m(&self) -> i64 {
        self.m
    }
    pub(crate) fn u_weight_lattice(&self) -> &SquareLattice {
        &self.u_weight_lattice
    }
    pub(crate) fn gl_weight_lattice(&self) -> &SquareLattice {
        &self.gl_weight_lattice
    }
}

// ---------------------------------------------------------------- Weyl group

/// An element of `{1, s}^n`; `true` marks `s`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u8>", into = "Vec<u8>")]
pub struct WeylElt(pub Vec<bool>);

impl TryFrom<Vec<u8>> for WeylElt {
    type Error = String;
    fn try_from(v: Vec<u8>) -> std::result::Result<Self, String> {
        v.into_iter()
            .map(|b| match b {
                0 => Ok(false),
                1 => Ok(true),
                other => Err(format!("Weyl bit must be 0 or 1, got {other}")),
            })
            .collect::<std::result::Result<Vec<_>, _>>()
            .map(WeylElt)
    }
}

impl From<WeylElt> for Vec<u8> {
    fn from(w: WeylElt) -> Vec<u8> {
        w.0.into_iter().map(u8::from).collect()
    }
}

impl WeylElt {
    pub fn identity(n: usize) -> WeylElt {
        WeylElt(vec![false; n])
    }
    /// The element with `s` in every slot.
    pub fn longest(n: usize) -> WeylElt {
        WeylElt(vec![true; n])
    }
    pub fn len(&self) -> usize {
        self.0.len()
    }
    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
    pub fn is_s(&self, i: usize) -> bool {
        self.0[i]
    }
    /// Number of slots equal to `s`.
    pub fn length(&self) -> usize {
        self.0.iter().filter(|b| **b).count()
    }
    pub fn mul(&self, other: &WeylElt) -> WeylElt {
        assert_eq!(self.len(), other.len(), "Weyl length mismatch");
        WeylElt(self.0.iter().zip(&other.0).map(|(a, b)| a ^ b).collect())
    }
    /// Frobenius on `W`: `F(w)_i = w_{i-1}`, i.e. conjugation by the inverse
    /// arithmetic Frobenius, matching `pi(w(mu)) = F(w)(pi(mu))`.
    pub fn frob(&self) -> WeylElt {
        let n = self.len();
        WeylElt((0..n).map(|i| self.0[(i + n - 1) % n]).collect())
    }
    /// `v w F(v)^{-1}`
    pub fn f_conjugate(&self, v: &WeylElt) -> WeylElt {
        v.mul(self).mul(&v.frob())
    }
    /// All `2^n` elements in binary counting order (slot 0 is the low bit).
    pub fn all(n: usize) -> impl Iterator<Item = WeylElt> {
        (0u64..(1u64 << n)).map(move |k| WeylElt((0..n).map(|i| (k >> i) & 1 == 1).collect()))
    }
}

// ------------------------------------------------------- unitary characters

/// An element of the unitary-side character lattice, `d = 0` per embedding.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(from = "Vec<[i64; 4]>", into = "Vec<[i64; 4]>")]
pub struct UChar(Vec<[i64; 3]>);

impl From<Vec<[i64; 4]>> for UChar {
    fn from(raw: Vec<[i64; 4]>) -> UChar {
        UChar::from_raw(&raw)
    }
}

impl From<UChar> for Vec<[i64; 4]> {
    fn from(mu: UChar) -> Vec<[i64; 4]> {
        mu.raw()
    }
}

fn twist(x: [i64; 3]) -> [i64; 3] {
    [-x[1], -x[0], x[2]]
}

fn reflect(x: [i64; 3]) -> [i64; 3] {
    let h = x[0] - x[1] + x[2];
    [x[0] - h, x[1] + h, x[2]]
}

impl UChar {
    pub fn zero(f: usize) -> UChar {
        UChar(vec![[0; 3]; f])
    }
    /// Canonicalize raw quadruples modulo `(z, -z, -z, z)`.
    pub fn from_raw(raw: &[[i64; 4]]) -> UChar {
        UChar(raw.iter().map(|&[a, b, c, d]| [a - d, b + d, c + d]).collect())
    }
    pub fn from_canonical(entries: Vec<[i64; 3]>) -> UChar {
        UChar(entries)
    }
    pub fn raw(&self) -> Vec<[i64; 4]> {
        self.0.iter().map(|&[a, b, c]| [a, b, c, 0]).collect()
    }
    pub fn entries(&self) -> &[[i64; 3]] {
        &self.0
    }
    pub fn len(&self) -> usize {
        self.0.len()
    }
    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
    /// `<mu, alpha_i^vee>`
    pub fn pairing_at(&self, i: usize) -> i64 {
        let [a, b, c] = self.0[i];
        a - b + c
    }
    pub fn pairings(&self) -> Vec<i64> {
        (0..self.len()).map(|i| self.pairing_at(i)).collect()
    }
    pub fn scale(&self, k: i64) -> UChar {
        UChar(self.0.iter().map(|x| [k * x[0], k * x[1], k * x[2]]).collect())
    }
    /// `c = d = 0` in every embedding.
    pub fn is_descended(&self) -> bool {
        self.0.iter().all(|x| x[2] == 0)
    }
    fn flat(&self) -> Vec<i64> {
        self.0.iter().flat_map(|x| x.iter().copied()).collect()
    }
    fn from_flat(v: &[i64]) -> UChar {
        UChar(v.chunks(3).map(|c| [c[0], c[1], c[2]]).collect())
    }
    pub(crate) fn to_flat(&self) -> Vec<i64> {
        self.flat()
    }
    pub(crate) fn of_flat(v: &[i64]) -> UChar {
        UChar::from_flat(v)
    }
}

impl Add for &UChar {
    type Output = UChar;
    fn add(self, o: &UChar) -> UChar {
        assert_eq!(self.len(), o.len(), "character length mismatch");
        UChar(self.0.iter().zip(&o.0).map(|(x, y)| [x[0] + y[0], x[1] + y[1], x[2] + y[2]]).collect())
    }
}

impl Sub for &UChar {
    type Output = UChar;
    fn sub(self, o: &UChar) -> UChar {
        assert_eq!(self.len(), o.len(), "character length mismatch");
        UChar(self.0.iter().zip(&o.0).map(|(x, y)| [x[0] - y[0], x[1] - y[1], x[2] - y[2]]).collect())
    }
}

impl Neg for &UChar {
    type Output = UChar;
    fn neg(self) -> UChar {
        self.scale(-1)
    }
}

/// A unitary-side cocharacter, raw quadruples with `a' - b' = c' - d'`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct UCochar(Vec<[i64; 4]>);

impl UCochar {
    pub fn new(entries: Vec<[i64; 4]>) -> Result<UCochar> {
        for (i, e) in entries.iter().enumerate() {
            if e[0] - e[1] != e[2] - e[3] {
                return Err(Error::InvalidCochar(i));
            }
        }
        Ok(UCochar(entries))
    }
    /// The simple coroot at embedding `i`.
    pub fn alpha_vee(f: usize, i: usize) -> UCochar {
        let mut e = vec![[0; 4]; f];
        e[i] = [1, -1, 1, -1];
        UCochar(e)
    }
    pub fn entries(&self) -> &[[i64; 4]] {
        &self.0
    }
}

pub fn pair(mu: &UChar, lam: &UCochar) -> Result<i64> {
    if mu.len() != lam.0.len() {
        return Err(Error::LengthMismatch { expected: mu.len(), got: lam.0.len() });
    }
    Ok(mu
        .raw()
        .iter()
        .zip(&lam.0)
        .map(|(x, y)| x.iter().zip(y).map(|(a, b)| a * b).sum::<i64>())
        .sum())
}

pub fn eta(f: usize) -> UChar {
    UChar(vec![[0, 0, 1]; f])
}

pub fn rho(f: usize) -> UChar {
    UChar(vec![[1, 0, 0]; f])
}

pub fn alpha(f: usize, i: usize) -> UChar {
    let mut e = vec![[0; 3]; f];
    e[i] = [1, -1, 0];
    UChar(e)
}

/// `alpha_w`: the sum of the simple roots at the slots where `w` is `s`.
pub fn alpha_of(w: &WeylElt) -> UChar {
    UChar(w.0.iter().map(|&s| if s { [1, -1, 0] } else { [0; 3] }).collect())
}

pub fn frobenius(mu: &UChar, ctx: &PrimeContext) -> UChar {
    frob_with(mu, ctx.p())
}

fn frob_with(mu: &UChar, p: i64) -> UChar {
    let f = mu.len();
    UChar(
        (0..f)
            .map(|i| {
                let x = if i + 1 < f { mu.0[i + 1] } else { twist(mu.0[0]) };
                [p * x[0], p * x[1], p * x[2]]
            })
            .collect(),
    )
}

/// The operator `pi` with `F = p pi^{-1}`.
pub fn phi_inverse(mu: &UChar) -> UChar {
    let f = mu.len();
    UChar((0..f).map(|i| if i == 0 { twist(mu.0[f - 1]) } else { mu.0[i - 1] }).collect())
}

pub fn weyl_act(w: &WeylElt, mu: &UChar) -> Result<UChar> {
    if w.len() != mu.len() {
        return Err(Error::LengthMismatch { expected: mu.len(), got: w.len() });
    }
    Ok(UChar(mu.0.iter().zip(&w.0).map(|(x, &s)| if s { reflect(*x) } else { *x }).collect()))
}

/// Infallible variant for internal use where lengths are known to agree.
pub(crate) fn wact(w: &WeylElt, mu: &UChar) -> UChar {
    weyl_act(w, mu).expect("Weyl length mismatch")
}

/// Depth read off the values `<mu + eta, alpha_i^vee>`; `-1` outside the open alcove.
pub fn depth_from_shifted(values: &[i64], p: i64) -> i64 {
    values
        .iter()
        .map(|&y| if y <= 0 || y >= p { -1 } else { y.min(p - y) - 1 })
        .min()
        .unwrap_or(-1)
}

/// Largest `n` with `n < <mu + eta, alpha_i^vee> < p - n` for all `i`, or `-1`.
pub fn depth(mu: &UChar, ctx: &PrimeContext) -> i64 {
    let ys: Vec<i64> = mu.pairings().iter().map(|x| x + 1).collect();
    depth_from_shifted(&ys, ctx.p())
}

pub fn is_n_deep(mu: &UChar, n: i64, ctx: &PrimeContext) -> bool {
    depth(mu, ctx) >= n
}

/// `0 <= <mu, alpha_i^vee> <= p - 1` for all `i`.
pub fn is_p_restricted(mu: &UChar, ctx: &PrimeContext) -> bool {
    mu.pairings().iter().all(|&x| (0..ctx.p()).contains(&x))
}

// Linear operators on the flattened canonical coordinates (3 per slot).

fn operator_matrix(dim: usize, op: impl Fn(&[i64]) -> Vec<i64>) -> Vec<Vec<i64>> {
    let cols: Vec<Vec<i64>> = (0..dim)
        .map(|j| {
            let mut e = vec![0; dim];
            e[j] = 1;
            op(&e)
        })
        .collect();
    (0..dim).map(|i| cols.iter().map(|c| c[i]).collect()).collect()
}

/// Matrix of `F - w` on X*(T).
pub(crate) fn f_minus_w_matrix(w: &WeylElt, ctx: &PrimeContext) -> Vec<Vec<i64>> {
    operator_matrix(3 * w.len(), |v| {
        let mu = UChar::from_flat(v);
        (&frobenius(&mu, ctx) - &wact(w, &mu)).flat()
    })
}

/// Basis of X^0(T) (pairing zero): `u_i = (1,1,0)`, then `v_i = (0,1,1)`.
fn x0_basis(f: usize, j: usize) -> UChar {
    let mut e = vec![[0; 3]; f];
    if j < f {
        e[j] = [1, 1, 0];
    } else {
        e[j - f] = [0, 1, 1];
    }
    UChar(e)
}

/// Coordinates of a pairing-zero character in the basis of [`x0_basis`].
pub(crate) fn x0_coords(mu: &UChar) -> Option<Vec<i64>> {
    if mu.pairings().iter().any(|&x| x != 0) {
        return None;
    }
    let f = mu.len();
    let mut out = vec![0; 2 * f];
    for (i, x) in mu.0.iter().enumerate() {
        out[i] = x[0];
        out[f + i] = x[2];
    }
    Some(out)
}

pub(crate) fn from_x0_coords(c: &[i64]) -> UChar {
    let f = c.len() / 2;
    UChar((0..f).map(|i| [c[i], c[i] + c[f + i], c[f + i]]).collect())
}

fn u_x0_image_matrix(p: i64, f: usize) -> Vec<Vec<i64>> {
    let cols: Vec<Vec<i64>> = (0..2 * f)
        .map(|j| {
            let b = x0_basis(f, j);
            let img = &frob_with(&b, p) - &b;
            x0_coords(&img).expect("F preserves X^0")
        })
        .collect();
    (0..2 * f).map(|i| cols.iter().map(|c| c[i]).collect()).collect()
}

/// Matrix of `(F - 1)` restricted to X^0(T), as a map Z^{2f} -> Z^{3f}.
fn f_minus_1_on_x0(ctx: &PrimeContext) -> Vec<Vec<i64>> {
    let f = ctx.f();
    let cols: Vec<Vec<i64>> = (0..2 * f)
        .map(|j| {
            let b = x0_basis(f, j);
            (&frobenius(&b, ctx) - &b).flat()
        })
        .collect();
    (0..3 * f).map(|i| cols.iter().map(|c| c[i]).collect()).collect()
}

/// Whether `mu` lies in `(F - 1) X^0(T)`, by an exact integer solve.
pub fn in_f_minus_1_x0(mu: &UChar, ctx: &PrimeContext) -> bool {
    hnf::solve(&f_minus_1_on_x0(ctx), &mu.flat()).is_some()
}

/// A preimage `x` in X^0(T) with `(F - 1) x = mu`, if any.
pub fn f_minus_1_x0_preimage(mu: &UChar, ctx: &PrimeContext) -> Option<UChar> {
    let c = hnf::solve_i64(&f_minus_1_on_x0(ctx), &mu.flat())?;
    Some(from_x0_coords(&c))
}

// --------------------------------------------------------- affine Weyl group

/// `t_t w` in the extended affine Weyl group.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AffineElt {
    pub t: UChar,
    pub w: WeylElt,
}

impl AffineElt {
    pub fn identity(f: usize) -> AffineElt {
        AffineElt { t: UChar::zero(f), w: WeylElt::identity(f) }
    }
    /// `(t_a w)(t_b v) = t_{a + w(b)} wv`
    pub fn mul(&self, o: &AffineElt) -> AffineElt {
        AffineElt { t: &self.t + &wact(&self.w, &o.t), w: self.w.mul(&o.w) }
    }
    pub fn inverse(&self) -> AffineElt {
        AffineElt { t: -&wact(&self.w, &self.t), w: self.w.clone() }
    }
    /// `w t_{-nu}` written as `t_{-w(nu)} w`.
    pub fn from_w_then_translation(w: &WeylElt, nu: &UChar) -> AffineElt {
        AffineElt { t: -&wact(w, nu), w: w.clone() }
    }
}

/// Dot action centred at `-eta` with translations scaled by `scale`:
/// `(t_t w) . mu = w(mu + eta) + scale * t - eta`.
pub fn dot_act(x: &AffineElt, mu: &UChar, scale: i64) -> UChar {
    let f = mu.len();
    let e = eta(f);
    &(&wact(&x.w, &(mu + &e)) + &x.t.scale(scale)) - &e
}

/// Membership of `z t_{-p nu}` in the alcove stabilizer: `<nu_i, alpha^vee>`
/// is 0 where `z_i = 1` and 1 where `z_i = s`.
pub fn in_w_plus(z: &WeylElt, nu: &UChar) -> bool {
    (0..z.len()).all(|i| nu.pairing_at(i) == i64::from(z.is_s(i)))
}

// ------------------------------------------------------- GL-side characters

/// An element of X*(T'), one pair per embedding (2f of them).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct GlChar(pub Vec<[i64; 2]>);

impl GlChar {
    pub fn zero(n: usize) -> GlChar {
        GlChar(vec![[0; 2]; n])
    }
    pub fn len(&self) -> usize {
        self.0.len()
    }
    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
    pub fn pairing_at(&self, i: usize) -> i64 {
        self.0[i][0] - self.0[i][1]
    }
    pub fn pairings(&self) -> Vec<i64> {
        (0..self.len()).map(|i| self.pairing_at(i)).collect()
    }
    pub fn scale(&self, k: i64) -> GlChar {
        GlChar(self.0.iter().map(|x| [k * x[0], k * x[1]]).collect())
    }
    pub(crate) fn flat(&self) -> Vec<i64> {
        self.0.iter().flat_map(|x| x.iter().copied()).collect()
    }
    pub(crate) fn from_flat(v: &[i64]) -> GlChar {
        GlChar(v.chunks(2).map(|c| [c[0], c[1]]).collect())
    }
    /// Concatenate two halves `(mu, mu')`.
    pub fn concat(a: &GlChar, b: &GlChar) -> GlChar {
        GlChar(a.0.iter().chain(&b.0).copied().collect())
    }
    pub fn halves(&self) -> (GlChar, GlChar) {
        let h = self.len() / 2;
        (GlChar(self.0[..h].to_vec()), GlChar(self.0[h..].to_vec()))
    }
}

impl Add for &GlChar {
    type Output = GlChar;
    fn add(self, o: &GlChar) -> GlChar {
        assert_eq!(self.len(), o.len(), "character length mismatch");
        GlChar(self.0.iter().zip(&o.0).map(|(x, y)| [x[0] + y[0], x[1] + y[1]]).collect())
    }
}

impl Sub for &GlChar {
    type Output = GlChar;
    fn sub(self, o: &GlChar) -> GlChar {
        assert_eq!(self.len(), o.len(), "character length mismatch");
        GlChar(self.0.iter().zip(&o.0).map(|(x, y)| [x[0] - y[0], x[1] - y[1]]).collect())
    }
}

impl Neg for &GlChar {
    type Output = GlChar;
    fn neg(self) -> GlChar {
        self.scale(-1)
    }
}

pub fn rho_gl(n: usize) -> GlChar {
    GlChar(vec![[1, 0]; n])
}

/// `F'(mu)_i = p mu_{i+1}`, cyclically.
pub fn frobenius_gl(mu: &GlChar, ctx: &PrimeContext) -> GlChar {
    let n = mu.len();
    let p = ctx.p();
    GlChar((0..n).map(|i| [p * mu.0[(i + 1) % n][0], p * mu.0[(i + 1) % n][1]]).collect())
}

pub fn phi_inverse_gl(mu: &GlChar) -> GlChar {
    let n = mu.len();
    GlChar((0..n).map(|i| mu.0[(i + n - 1) % n]).collect())
}

pub fn weyl_act_gl(w: &WeylElt, mu: &GlChar) -> Result<GlChar> {
    if w.len() != mu.len() {
        return Err(Error::LengthMismatch { expected: mu.len(), got: w.len() });
    }
    Ok(GlChar(mu.0.iter().zip(&w.0).map(|(x, &s)| if s { [x[1], x[0]] } else { *x }).collect()))
}

pub(crate) fn wact_gl(w: &WeylElt, mu: &GlChar) -> GlChar {
    weyl_act_gl(w, mu).expect("Weyl length mismatch")
}

/// Depth of `mu` measured against `rho'`: `n < <mu + rho', alpha^vee> < p - n`.
pub fn depth_gl(mu: &GlChar, ctx: &PrimeContext) -> i64 {
    let ys: Vec<i64> = mu.pairings().iter().map(|x| x + 1).collect();
    depth_from_shifted(&ys, ctx.p())
}

pub fn is_p_restricted_gl(mu: &GlChar, ctx: &PrimeContext) -> bool {
    mu.pairings().iter().all(|&x| (0..ctx.p()).contains(&x))
}

fn gl_x0_image_matrix(p: i64, n: usize) -> Vec<Vec<i64>> {
    // column j: (F' - 1) applied to (1,1) at slot j, in (1,1)-coordinates
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let mut v = 0;
                    if (i + 1) % n == j {
                        v += p;
                    }
                    if i == j {
                        v -= 1;
                    }
                    v
                })
                .collect()
        })
        .collect()
}

pub(crate) fn f_minus_w_matrix_gl(w: &WeylElt, ctx: &PrimeContext) -> Vec<Vec<i64>> {
    operator_matrix(2 * w.len(), |v| {
        let mu = GlChar::from_flat(v);
        (&frobenius_gl(&mu, ctx) - &wact_gl(w, &mu)).flat()
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn frobenius_examples() {
        let c7 = PrimeContext::new(7, 1).unwrap();
        assert_eq!(
            frobenius(&UChar::from_raw(&[[1, 0, 0, 0]]), &c7),
            UChar::from_raw(&[[0, -7, 0, 0]])
        );
        assert_eq!(
            frobenius(&UChar::from_raw(&[[0, 0, 1, 1]]), &c7),
            UChar::from_raw(&[[0, 0, 7, 7]])
        );
        let c5 = PrimeContext::new(5, 2).unwrap();
        assert_eq!(
            frobenius(&UChar::from_raw(&[[1, 0, 0, 0], [0, 2, 0, 0]]), &c5),
            UChar::from_raw(&[[0, 10, 0, 0], [0, -5, 0, 0]])
        );
    }

    #[test]
    fn pi_examples() {
        assert_eq!(
            phi_inverse(&UChar::from_raw(&[[0, 1, 0, 0]])),
            UChar::from_raw(&[[-1, 0, 0, 0]])
        );
        assert_eq!(phi_inverse(&rho(1)), UChar::from_raw(&[[0, -1, 0, 0]]));
    }

    #[test]
    fn pairing_examples() {
        let a0 = UCochar::alpha_vee(1, 0);
        assert_eq!(pair(&eta(1), &a0).unwrap(), 1);
        assert_eq!(pair(&UChar::from_raw(&[[3, 1, 0, 0]]), &a0).unwrap(), 2);
        let lam = UCochar::new(vec![[2, 3, 7, 8]]).unwrap();
        assert_eq!(pair(&UChar::from_raw(&[[5, -5, -5, 5]]), &lam).unwrap(), 0);
        assert!(UCochar::new(vec![[1, 0, 0, 0]]).is_err());
    }

    #[test]
    fn depth_examples() {
        let c = PrimeContext::new(7, 1).unwrap();
        assert_eq!(depth(&UChar::from_raw(&[[3, 1, 0, 0]]), &c), 2);
        assert_eq!(depth(&UChar::zero(1), &c), 0);
        assert_eq!(depth(&UChar::from_raw(&[[0, 1, 0, 0]]), &c), -1);
    }

    #[test]
    fn membership_examples() {
        let c = PrimeContext::new(7, 1).unwrap();
        assert!(in_f_minus_1_x0(&UChar::from_raw(&[[-8, -8, 0, 0]]), &c));
        assert!(!in_f_minus_1_x0(&UChar::from_raw(&[[1, 0, 0, 0]]), &c));
        assert!(in_f_minus_1_x0(&UChar::zero(1), &c));
    }

    #[test]
    fn weyl_examples() {
        let s = WeylElt(vec![true]);
        let mu = UChar::from_raw(&[[3, 1, 0, 0]]);
        assert_eq!(weyl_act(&s, &mu).unwrap(), UChar::from_raw(&[[1, 3, 0, 0]]));
        assert_eq!(weyl_act(&s, &UChar::from_raw(&[[2, 2, 4, 4]])).unwrap(), UChar::from_raw(&[[2, 2, 4, 4]]));
    }

    #[test]
    fn dot_action_example() {
        let f = 1;
        let s = WeylElt(vec![true]);
        let x = AffineElt::from_w_then_translation(&s, &eta(f));
        let mu = UChar::from_raw(&[[2, 2, -1, 0]]);
        let got = dot_act(&x, &mu, 7);
        let expect = &wact(&s, &UChar::from_raw(&[[2, 2, -1 + 1 - 7, 0]])) - &eta(f);
        assert_eq!(got, expect);
        assert_eq!(dot_act(&AffineElt::identity(f), &mu, 7), mu);
    }
}
