//! Base change from the unitary side to `GL_2` over the quadratic extension.

use crate::error::{Error, Result};
use crate::hnf;
use crate::lattice::{
    f_minus_w_matrix_gl, wact, wact_gl, GlChar, PrimeContext, UChar, WeylElt,
};
use crate::weights::{
    descended_rep, dl_isomorphic_gl, weight, weight_gl, DlRepGl, DlRepU, SerreWeightGl,
    SerreWeightU,
};

/// `(mu, -s(mu))` for a descended `mu`.
pub fn bc_char(mu: &UChar) -> GlChar {
    let first: Vec<[i64; 2]> = mu.entries().iter().map(|x| [x[0], x[1]]).collect();
    let second: Vec<[i64; 2]> = mu.entries().iter().map(|x| [-x[1], -x[0]]).collect();
    GlChar(first.into_iter().chain(second).collect())
}

/// `-s` applied to a GL half.
fn minus_s(h: &GlChar) -> GlChar {
    GlChar(h.0.iter().map(|x| [-x[1], -x[0]]).collect())
}

fn doubled(w: &WeylElt) -> WeylElt {
    WeylElt(w.0.iter().chain(&w.0).copied().collect())
}

fn to_int(x: i128, m: i128) -> i128 {
    x.rem_euclid(m)
}

fn p_adic_sum(values: impl Iterator<Item = i64>, p: i64, m: i128) -> i128 {
    let mut acc = 0i128;
    let mut pw = 1i128;
    for v in values {
        acc = (acc + v as i128 * pw).rem_euclid(m);
        pw = pw * p as i128 % m;
    }
    acc
}

/// The standard conjugate of a descended type: `w` is moved to `1` (even
/// number of `s`) or to `(s, 1, ..., 1)` (odd), with `mu` transported.
pub fn standard_form(r: &DlRepU) -> DlRepU {
    let f = r.w.len();
    let odd = r.w.length() % 2 == 1;
    let target = if odd {
        let mut t = vec![false; f];
        t[0] = true;
        WeylElt(t)
    } else {
        WeylElt::identity(f)
    };
    let v = WeylElt::all(f)
        .find(|v| r.w.f_conjugate(v) == target)
        .expect("every parity class contains the standard element");
    DlRepU { w: target, mu: wact(&v, &r.mu) }
}

/// Whether the base change of a descended type is irreducible.
pub fn is_irreducible(r: &DlRepU, ctx: &PrimeContext) -> bool {
    let std = standard_form(r);
    let q = ctx.q() as i128;
    let (a_it, b_it) = (
        std.mu.entries().iter().map(|x| x[0]).collect::<Vec<_>>(),
        std.mu.entries().iter().map(|x| x[1]).collect::<Vec<_>>(),
    );
    if std.w.length() == 0 {
        let m = q * q - 1;
        let a = p_adic_sum(a_it.into_iter(), ctx.p(), m);
        let b = p_adic_sum(b_it.into_iter(), ctx.p(), m);
        to_int(a - q * b, m) != to_int(b - q * a, m)
    } else {
        let m = q + 1;
        p_adic_sum(a_it.into_iter(), ctx.p(), m) != p_adic_sum(b_it.into_iter(), ctx.p(), m)
    }
}

/// `BC(R_w(mu)) = R'_{(w,w)}(mu, -s(mu))`.
pub fn bc_type(r: &DlRepU, ctx: &PrimeContext) -> Result<DlRepGl> {
    if r.w.len() != ctx.f() || r.mu.len() != ctx.f() {
        return Err(Error::LengthMismatch { expected: ctx.f(), got: r.mu.len() });
    }
    if !r.mu.is_descended() {
        return Err(Error::NotDescended);
    }
    if !is_irreducible(r, ctx) {
        return Err(Error::NonIrreducibleType);
    }
    Ok(DlRepGl { w: doubled(&r.w), mu: bc_char(&r.mu) })
}

/// `BC(F(mu)) = F'(mu, -s(mu))` computed on a descended representative.
pub fn bc_weight(x: &SerreWeightU, ctx: &PrimeContext) -> Result<SerreWeightGl> {
    let mu = descended_rep(x, ctx)?;
    weight_gl(&bc_char(&mu), ctx)
}

pub fn epsilon_type(r: &DlRepGl) -> DlRepGl {
    let (m1, m2) = r.mu.halves();
    let f = r.w.len() / 2;
    let w = WeylElt(r.w.0[f..].iter().chain(&r.w.0[..f]).copied().collect());
    DlRepGl { w, mu: GlChar::concat(&minus_s(&m2), &minus_s(&m1)) }
}

pub fn epsilon_weight(x: &SerreWeightGl, ctx: &PrimeContext) -> Result<SerreWeightGl> {
    let (m1, m2) = x.rep().halves();
    weight_gl(&GlChar::concat(&minus_s(&m2), &minus_s(&m1)), ctx)
}

/// Matrix of `mu -> (mu, -s(mu))` on descended coordinates `(a_i, b_i)`.
fn bc_matrix(f: usize) -> Vec<Vec<i64>> {
    let mut m = vec![vec![0; 2 * f]; 4 * f];
    for i in 0..f {
        m[2 * i][2 * i] = 1;
        m[2 * i + 1][2 * i + 1] = 1;
        m[2 * (f + i)][2 * i + 1] = -1;
        m[2 * (f + i) + 1][2 * i] = -1;
    }
    m
}

fn descended_from_pairs(v: &[i64]) -> UChar {
    UChar::from_canonical(v.chunks(2).map(|c| [c[0], c[1], 0]).collect())
}

/// The preimage under base change, when `r` is one.
pub fn is_bc_image_type(r: &DlRepGl, ctx: &PrimeContext) -> Option<DlRepU> {
    let f = ctx.f();
    if r.w.len() != 2 * f || r.mu.len() != 2 * f {
        return None;
    }
    if !dl_isomorphic_gl(&epsilon_type(r), r, ctx) {
        return None;
    }
    let j = bc_matrix(f);
    for v in WeylElt::all(2 * f) {
        let u = r.w.f_conjugate(&v);
        if u.0[..f] != u.0[f..] {
            continue;
        }
        // (F' - u) nu - J mu = -v(lambda)
        let a = f_minus_w_matrix_gl(&u, ctx);
        let mut big: Vec<Vec<i64>> = a.clone();
        for (row, jrow) in big.iter_mut().zip(&j) {
            row.extend(jrow.iter().map(|t| -t));
        }
        let rhs: Vec<i64> = wact_gl(&v, &r.mu).flat().iter().map(|t| -t).collect();
        if let Some(x) = hnf::solve_i64(&big, &rhs) {
            let mu = descended_from_pairs(&x[4 * f..]);
            let cand = DlRepU { w: WeylElt(u.0[..f].to_vec()), mu };
            if let Ok(bc) = bc_type(&cand, ctx) {
                if dl_isomorphic_gl(&bc, r, ctx) {
                    return Some(cand);
                }
            }
        }
    }
    None
}

/// The preimage of a GL weight under base change of weights.
pub fn is_bc_image_weight(x: &SerreWeightGl, ctx: &PrimeContext) -> Option<SerreWeightU> {
    let f = ctx.f();
    if epsilon_weight(x, ctx).ok()? != *x {
        return None;
    }
    let xs = x.rep().pairings();
    if xs[..f] != xs[f..] {
        return None;
    }
    // J mu - (F' - 1) B t = lambda, with B the (1,1) basis of X^0(T')
    let n = 2 * f;
    let j = bc_matrix(f);
    let p = ctx.p();
    let mut big = j.clone();
    for (row_idx, row) in big.iter_mut().enumerate() {
        let slot = row_idx / 2;
        for t in 0..n {
            // (F'-1)(1,1)e_t has p at slot t-1 and -1 at slot t
            let mut val = 0;
            if (slot + 1) % n == t {
                val += p;
            }
            if slot == t {
                val -= 1;
            }
            row.push(-val);
        }
    }
    let sol = hnf::solve_i64(&big, &x.rep().flat())?;
    let mu = descended_from_pairs(&sol[..2 * f]);
    let w = weight(&mu, ctx).ok()?;
    (bc_weight(&w, ctx).ok()? == *x).then_some(w)
}

/// `(1 - q) k mod (q^2 - 1)`.
pub fn bc_u1_char(k: i64, ctx: &PrimeContext) -> i64 {
    let q = ctx.q() as i128;
    ((1 - q) * k as i128).rem_euclid(q * q - 1) as i64
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ch(raw: &[[i64; 4]]) -> UChar {
        UChar::from_raw(raw)
    }

    #[test]
    fn bc_examples() {
        let c = PrimeContext::new(7, 1).unwrap();
        let r = DlRepU::new(WeylElt(vec![true]), ch(&[[0, 4, 0, 0]]));
        let b = bc_type(&r, &c).unwrap();
        assert_eq!(b, DlRepGl::new(WeylElt(vec![true, true]), GlChar(vec![[0, 4], [-4, 0]])));
        let r = DlRepU::new(WeylElt(vec![false]), ch(&[[3, 1, 0, 0]]));
        let b = bc_type(&r, &c).unwrap();
        assert_eq!(b, DlRepGl::new(WeylElt(vec![false, false]), GlChar(vec![[3, 1], [-1, -3]])));
        let x = weight(&ch(&[[3, 1, 0, 0]]), &c).unwrap();
        assert_eq!(bc_weight(&x, &c).unwrap(), weight_gl(&GlChar(vec![[3, 1], [-1, -3]]), &c).unwrap());
        let z = weight(&UChar::zero(1), &c).unwrap();
        assert_eq!(bc_weight(&z, &c).unwrap(), weight_gl(&GlChar::zero(2), &c).unwrap());
    }

    #[test]
    fn epsilon_example() {
        let r = DlRepGl::new(WeylElt(vec![false, true]), GlChar(vec![[1, 2], [3, 4]]));
        assert_eq!(
            epsilon_type(&r),
            DlRepGl::new(WeylElt(vec![true, false]), GlChar(vec![[-4, -3], [-2, -1]]))
        );
    }

    #[test]
    fn image_examples() {
        let c = PrimeContext::new(7, 1).unwrap();
        let r = DlRepGl::new(WeylElt(vec![false, false]), GlChar(vec![[1, 0], [0, 0]]));
        assert!(is_bc_image_type(&r, &c).is_none());
        let u = DlRepU::new(WeylElt(vec![false]), ch(&[[3, 1, 0, 0]]));
        let pre = is_bc_image_type(&bc_type(&u, &c).unwrap(), &c).unwrap();
        assert!(crate::weights::dl_isomorphic(&pre, &u, &c));
    }

    #[test]
    fn u1_examples() {
        let c = PrimeContext::new(7, 1).unwrap();
        assert_eq!(bc_u1_char(0, &c), 0);
        assert_eq!(bc_u1_char(1, &c), 42);
    }
}
