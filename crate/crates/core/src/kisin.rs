//! Iwahori cells of `2 x 2` matrices over truncated power series, shapes,
//! polarization, and the deformation-ring bookkeeping.

use std::collections::BTreeSet;

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::intersect::{intersect_types, Tilde, INTERSECT_DEPTH};
use crate::lattice::{depth, PrimeContext};
use crate::lparams::{
    beta_descended, dl_from_lparam, type_genericity, predicted_weights, predicted_weights_gl,
    sigma_of_type, sigma_prime_of_type, InertialTypeGl, TameLParam,
};
use crate::sample::Rng8;
use crate::weights::{jh_factors_any, jh_factors_gl_any};

pub const DEFAULT_TRUNCATION: usize = 8;

// ------------------------------------------------------------ coefficients

/// `F_{p^k}[eps] / (eps^r)` with `p` acting as `eps^e`; `r = 1` is the residue field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoeffRing {
    p: i64,
    k: usize,
    r: usize,
    e: usize,
    /// Monic irreducible of degree `k`, lowest coefficient first, leading 1 omitted.
    modulus: Vec<i64>,
}

/// Element of a [`CoeffRing`]: `r` blocks of `k` prime-field coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Elt(pub Vec<i64>);

fn poly_rem(mut a: Vec<i64>, b: &[i64], p: i64) -> Vec<i64> {
    // b monic
    let db = b.len() - 1;
    while a.len() > db {
        let lead = a.pop().unwrap();
        let off = a.len() - db;
        for (j, bj) in b[..db].iter().enumerate() {
            a[off + j] = (a[off + j] - lead * bj).rem_euclid(p);
        }
    }
    a
}

fn monic_polys(p: i64, d: usize) -> impl Iterator<Item = Vec<i64>> {
    (0..p.pow(d as u32)).map(move |mut n| {
        let mut c: Vec<i64> = (0..d)
            .map(|_| {
                let x = n % p;
                n /= p;
                x
            })
            .collect();
        c.push(1);
        c
    })
}

fn is_irreducible(poly: &[i64], p: i64) -> bool {
    let d = poly.len() - 1;
    (1..=d / 2).all(|e| {
        monic_polys(p, e).all(|g| poly_rem(poly.to_vec(), &g, p).iter().any(|&x| x != 0))
    })
}

impl CoeffRing {
    pub fn new(p: i64, k: usize, r: usize) -> Result<CoeffRing> {
        if k == 0 || r == 0 {
            return Err(Error::InvalidContext("field degree and level must be positive".into()));
        }
        if (p as f64).powi(k as i32) > 1e6 {
            return Err(Error::Overflow);
        }
        let modulus = monic_polys(p, k)
            .find(|m| is_irreducible(m, p))
            .expect("irreducible polynomials exist in every degree");
        Ok(CoeffRing { p, k, r, e: 1, modulus: modulus[..k].to_vec() })
    }

    pub fn residue(p: i64) -> CoeffRing {
        CoeffRing { p, k: 1, r: 1, e: 1, modulus: vec![0] }
    }

    /// Send `p` to `eps^e` instead of `eps`.
    pub fn with_p_valuation(mut self, e: usize) -> CoeffRing {
        self.e = e.max(1);
        self
    }

    pub fn level(&self) -> usize {
        self.r
    }

    pub fn p_valuation(&self) -> usize {
        self.e
    }

    /// `eps^i`, zero once `i >= r`.
    pub fn eps_pow(&self, i: usize) -> Elt {
        let mut x = self.zero();
        if i < self.r {
            x.0[i * self.k] = 1;
        }
        x
    }

    pub fn zero(&self) -> Elt {
        Elt(vec![0; self.k * self.r])
    }

    pub fn from_int(&self, x: i64) -> Elt {
        let mut e = self.zero();
        e.0[0] = x.rem_euclid(self.p);
        e
    }

    /// The image of `p`, which is `eps^e` (zero at level 1).
    pub fn p_elt(&self) -> Elt {
        self.eps_pow(self.e)
    }

    pub fn add(&self, a: &Elt, b: &Elt) -> Elt {
        Elt(a.0.iter().zip(&b.0).map(|(x, y)| (x + y) % self.p).collect())
    }

    pub fn neg(&self, a: &Elt) -> Elt {
        Elt(a.0.iter().map(|x| (self.p - x) % self.p).collect())
    }

    pub fn sub(&self, a: &Elt, b: &Elt) -> Elt {
        self.add(a, &self.neg(b))
    }

    fn field_mul(&self, a: &[i64], b: &[i64]) -> Vec<i64> {
        let mut prod = vec![0i64; 2 * self.k - 1];
        for (i, x) in a.iter().enumerate() {
            for (j, y) in b.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x * y) % self.p;
            }
        }
        let mut m = self.modulus.clone();
        m.push(1);
        let mut out = poly_rem(prod, &m, self.p);
        out.resize(self.k, 0);
        out
    }

    pub fn mul(&self, a: &Elt, b: &Elt) -> Elt {
        let k = self.k;
        let mut out = self.zero();
        for i in 0..self.r {
            for j in 0..self.r - i {
                let pr = self.field_mul(&a.0[i * k..(i + 1) * k], &b.0[j * k..(j + 1) * k]);
                for (t, x) in pr.iter().enumerate() {
                    let idx = (i + j) * k + t;
                    out.0[idx] = (out.0[idx] + x) % self.p;
                }
            }
        }
        out
    }

    pub fn is_zero(&self, a: &Elt) -> bool {
        a.0.iter().all(|&x| x == 0)
    }

    pub fn is_unit(&self, a: &Elt) -> bool {
        a.0[..self.k].iter().any(|&x| x != 0)
    }

    /// Reduction modulo `eps`, as an element of the same ring.
    pub fn reduce(&self, a: &Elt) -> Elt {
        let mut e = self.zero();
        e.0[..self.k].copy_from_slice(&a.0[..self.k]);
        e
    }

    pub fn inv(&self, a: &Elt) -> Result<Elt> {
        if !self.is_unit(a) {
            return Err(Error::ZeroUnit);
        }
        // field inverse of the constant part via x^(p^k - 2)
        let order = self.p.pow(self.k as u32);
        let mut base = a.0[..self.k].to_vec();
        let mut acc = {
            let mut one = vec![0; self.k];
            one[0] = 1;
            one
        };
        let mut e = order - 2;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.field_mul(&acc, &base);
            }
            base = self.field_mul(&base, &base);
            e >>= 1;
        }
        let mut x = self.zero();
        x.0[..self.k].copy_from_slice(&acc);
        // Newton steps x <- x (2 - a x) lift the inverse through eps
        let two = self.from_int(2);
        for _ in 0..self.r {
            x = self.mul(&x, &self.sub(&two, &self.mul(a, &x)));
        }
        Ok(x)
    }

    pub fn random(&self, rng: &mut Rng8) -> Elt {
        Elt((0..self.k * self.r).map(|_| rng.gen_range(0..self.p)).collect())
    }

    pub fn random_unit(&self, rng: &mut Rng8) -> Elt {
        loop {
            let e = self.random(rng);
            if self.is_unit(&e) {
                return e;
            }
        }
    }

    fn check(&self, a: &Elt) -> Result<()> {
        if a.0.len() != self.k * self.r || a.0.iter().any(|&x| !(0..self.p).contains(&x)) {
            return Err(Error::PreconditionViolated("coefficient outside the ring".into()));
        }
        Ok(())
    }
}

// --------------------------------------------------------------- matrices

/// `2 x 2` matrix with entries in `R[v] / (v^n)`; entries lowest degree first.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LaurentMat {
    pub entries: [[Vec<Elt>; 2]; 2],
    pub trunc: usize,
}

fn series_mul(ring: &CoeffRing, a: &[Elt], b: &[Elt], n: usize) -> Vec<Elt> {
    let mut out = vec![ring.zero(); n];
    for (i, x) in a.iter().enumerate().take(n) {
        for (j, y) in b.iter().enumerate().take(n - i) {
            out[i + j] = ring.add(&out[i + j], &ring.mul(x, y));
        }
    }
    out
}

fn series_inv(ring: &CoeffRing, a: &[Elt], n: usize) -> Result<Vec<Elt>> {
    let a0 = a.first().ok_or(Error::ZeroUnit)?;
    let inv0 = ring.inv(a0)?;
    let mut out = vec![ring.zero(); n];
    out[0] = inv0.clone();
    for d in 1..n {
        let mut acc = ring.zero();
        for j in 1..=d.min(a.len() - 1) {
            acc = ring.add(&acc, &ring.mul(&a[j], &out[d - j]));
        }
        out[d] = ring.neg(&ring.mul(&inv0, &acc));
    }
    Ok(out)
}

impl LaurentMat {
    /// Builds a matrix from polynomial entries, padded or cut to `trunc` terms.
    pub fn new(ring: &CoeffRing, entries: [[Vec<Elt>; 2]; 2], trunc: usize) -> Result<LaurentMat> {
        if trunc < 2 {
            return Err(Error::TruncationTooShort);
        }
        let mut entries = entries;
        for e in entries.iter_mut().flatten() {
            for c in e.iter() {
                ring.check(c)?;
            }
            e.resize(trunc, ring.zero());
        }
        Ok(LaurentMat { entries, trunc })
    }

    /// From integer polynomials over the prime field.
    pub fn from_ints(ring: &CoeffRing, e: [[&[i64]; 2]; 2], trunc: usize) -> Result<LaurentMat> {
        let conv = |c: &[i64]| c.iter().map(|&x| ring.from_int(x)).collect::<Vec<_>>();
        LaurentMat::new(
            ring,
            [[conv(e[0][0]), conv(e[0][1])], [conv(e[1][0]), conv(e[1][1])]],
            trunc,
        )
    }

    pub fn det(&self, ring: &CoeffRing) -> Vec<Elt> {
        let [[a, b], [c, d]] = &self.entries;
        let ad = series_mul(ring, a, d, self.trunc);
        let bc = series_mul(ring, b, c, self.trunc);
        ad.iter().zip(&bc).map(|(x, y)| ring.sub(x, y)).collect()
    }

    pub fn neg(&self, ring: &CoeffRing) -> LaurentMat {
        let mut out = self.clone();
        for e in out.entries.iter_mut().flatten() {
            for c in e.iter_mut() {
                *c = ring.neg(c);
            }
        }
        out
    }

    /// Reduction modulo `eps` (that is, modulo `p`).
    pub fn reduce(&self, ring: &CoeffRing) -> LaurentMat {
        let mut out = self.clone();
        for e in out.entries.iter_mut().flatten() {
            for c in e.iter_mut() {
                *c = ring.reduce(c);
            }
        }
        out
    }

    /// Equality modulo `v^n`.
    pub fn agrees_mod(&self, other: &LaurentMat, n: usize) -> bool {
        self.entries
            .iter()
            .flatten()
            .zip(other.entries.iter().flatten())
            .all(|(x, y)| x[..n.min(x.len())] == y[..n.min(y.len())])
    }
}

// ----------------------------------------------------------------- shapes

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Shape {
    #[serde(rename = "t")]
    T,
    #[serde(rename = "tp")]
    Tp,
    #[serde(rename = "w")]
    W,
}

impl Shape {
    pub const ALL: [Shape; 3] = [Shape::T, Shape::Tp, Shape::W];
}

/// The three elements of the admissible set with their matrices.
pub fn admissible_set(ring: &CoeffRing, trunc: usize) -> Result<Vec<(Shape, LaurentMat)>> {
    let (o, one, v): (&[i64], &[i64], &[i64]) = (&[], &[1], &[0, 1]);
    Ok(vec![
        (Shape::T, LaurentMat::from_ints(ring, [[v, o], [o, one]], trunc)?),
        (Shape::Tp, LaurentMat::from_ints(ring, [[one, o], [o, v]], trunc)?),
        (Shape::W, LaurentMat::from_ints(ring, [[o, one], [v, o]], trunc)?),
    ])
}

fn v_valuation(ring: &CoeffRing, s: &[Elt]) -> Option<usize> {
    s.iter().position(|c| !ring.is_zero(c))
}

/// The Iwahori cell of `a`, decided on its reduction modulo `p` and `v`.
pub fn classify_cell(a: &LaurentMat, ring: &CoeffRing) -> Result<Shape> {
    let a = a.reduce(ring);
    if v_valuation(ring, &a.det(ring)) != Some(1) {
        return Err(Error::WrongDeterminantValuation);
    }
    let [[a11, a12], [a21, a22]] = &a.entries;
    if !ring.is_zero(&a21[0]) {
        return Err(Error::NotAdmissible);
    }
    if !ring.is_zero(&a11[0]) {
        Ok(Shape::Tp)
    } else if !ring.is_zero(&a22[0]) {
        Ok(Shape::T)
    } else if !ring.is_zero(&a12[0]) {
        Ok(Shape::W)
    } else {
        Err(Error::NotAdmissible)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Residue,
    Deformed,
}

/// Entries `c_{j,k}`; which ones must be units depends on the shape.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Coeffs {
    pub c11: Elt,
    pub c12: Elt,
    pub c21: Elt,
    pub c22: Elt,
}

/// The gauge-basis matrix of the given shape.
pub fn generic_matrix(
    shape: Shape,
    c: &Coeffs,
    mode: Mode,
    ring: &CoeffRing,
    trunc: usize,
) -> Result<LaurentMat> {
    for x in [&c.c11, &c.c12, &c.c21, &c.c22] {
        ring.check(x)?;
    }
    let starred: &[&Elt] = match shape {
        Shape::T | Shape::Tp => &[&c.c11, &c.c22],
        Shape::W => &[&c.c12, &c.c21],
    };
    if starred.iter().any(|x| !ring.is_unit(x)) {
        return Err(Error::ZeroUnit);
    }
    let z = ring.zero();
    let p = match mode {
        Mode::Residue => ring.zero(),
        Mode::Deformed => ring.p_elt(),
    };
    // (v + p) c as a polynomial
    let e_times = |x: &Elt| vec![ring.mul(&p, x), x.clone()];
    let v_times = |x: &Elt| vec![z.clone(), x.clone()];
    let entries = match (shape, mode) {
        (Shape::T, _) => [[e_times(&c.c11), vec![]], [v_times(&c.c21), vec![c.c22.clone()]]],
        (Shape::Tp, _) => [[vec![c.c11.clone()], vec![c.c12.clone()]], [vec![], e_times(&c.c22)]],
        (Shape::W, Mode::Residue) => [[vec![], vec![c.c12.clone()]], [v_times(&c.c21), vec![]]],
        (Shape::W, Mode::Deformed) => {
            let lhs = ring.mul(&c.c11, &c.c22);
            let rhs = ring.neg(&ring.mul(&p, &ring.mul(&c.c12, &c.c21)));
            if lhs != rhs {
                return Err(Error::RelationViolated);
            }
            [[vec![c.c11.clone()], vec![c.c12.clone()]], [v_times(&c.c21), vec![c.c22.clone()]]]
        }
    };
    LaurentMat::new(ring, entries, trunc)
}

/// Random coefficients valid for `shape` in `mode`.
pub fn random_coeffs(shape: Shape, mode: Mode, ring: &CoeffRing, rng: &mut Rng8) -> Coeffs {
    let mut c = Coeffs {
        c11: ring.random(rng),
        c12: ring.random(rng),
        c21: ring.random(rng),
        c22: ring.random(rng),
    };
    match shape {
        Shape::T | Shape::Tp => {
            c.c11 = ring.random_unit(rng);
            c.c22 = ring.random_unit(rng);
        }
        Shape::W => {
            c.c12 = ring.random_unit(rng);
            c.c21 = ring.random_unit(rng);
        }
    }
    if shape == Shape::W && mode == Mode::Deformed {
        let rhs = ring.neg(&ring.mul(&ring.p_elt(), &ring.mul(&c.c12, &c.c21)));
        let (e, r) = (ring.e, ring.r);
        if r == 1 {
            c.c11 = ring.zero();
            c.c22 = ring.zero();
        } else if e >= 2 {
            // c11 and c22 in the maximal ideal, so the residual shape stays w
            let j = rng.gen_range(1..e.min(r));
            let u = ring.random_unit(rng);
            c.c11 = ring.mul(&ring.eps_pow(j), &u);
            c.c22 = if e >= r {
                ring.mul(&ring.eps_pow(r - j), &ring.random(rng))
            } else {
                ring.mul(
                    &ring.neg(&ring.mul(&ring.eps_pow(e - j), &ring.mul(&c.c12, &c.c21))),
                    &ring.inv(&u).unwrap(),
                )
            };
        } else if ring.is_unit(&c.c11) {
            c.c22 = ring.mul(&rhs, &ring.inv(&c.c11).unwrap());
        } else {
            c.c22 = ring.random_unit(rng);
            c.c11 = ring.mul(&rhs, &ring.inv(&c.c22).unwrap());
        }
    }
    c
}

/// `u^{-1} (a, -b; -c, d)` where `det A = v u`, computed modulo `p`.
pub fn dual_transform(a: &LaurentMat, ring: &CoeffRing) -> Result<LaurentMat> {
    if a.trunc < 2 {
        return Err(Error::TruncationTooShort);
    }
    let det = a.det(ring);
    if !ring.is_zero(&det[0]) || !ring.is_unit(&det[1]) {
        return Err(Error::WrongDeterminantValuation);
    }
    let n = a.trunc;
    let uinv = series_inv(ring, &det[1..], n)?;
    let [[a11, a12], [a21, a22]] = &a.entries;
    let neg = |s: &Vec<Elt>| s.iter().map(|x| ring.neg(x)).collect::<Vec<_>>();
    let scaled = |s: &Vec<Elt>| series_mul(ring, &uinv, s, n);
    Ok(LaurentMat {
        entries: [[scaled(a11), scaled(&neg(a12))], [scaled(&neg(a21)), scaled(a22)]],
        trunc: n,
    })
}

fn polar_sign(i: usize, f: usize) -> bool {
    i == f - 1 || i == 2 * f - 1
}

/// `A^{(i-f)} = +- dual(A^{(i)})` for every `i`, with `-` at `f - 1` and
/// `2f - 1`; compared modulo `v^{N-1}`.
pub fn polarized_check(mats: &[LaurentMat], ring: &CoeffRing) -> Result<bool> {
    let n = mats.len();
    if n == 0 || n % 2 == 1 {
        return Err(Error::LengthMismatch { expected: 2 * (n / 2).max(1), got: n });
    }
    let f = n / 2;
    for (i, m) in mats.iter().enumerate() {
        let mut d = dual_transform(m, ring)?;
        if polar_sign(i, f) {
            d = d.neg(ring);
        }
        let target = &mats[(i + n - f) % n];
        if !target.agrees_mod(&d, m.trunc.min(target.trunc) - 1) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// A polarized family whose upper half is given.
pub fn polarize(upper: &[LaurentMat], ring: &CoeffRing) -> Result<Vec<LaurentMat>> {
    let f = upper.len();
    let mut lower = Vec::with_capacity(f);
    for (j, m) in upper.iter().enumerate() {
        let d = dual_transform(m, ring)?;
        lower.push(if polar_sign(f + j, f) { d.neg(ring) } else { d });
    }
    Ok(lower.into_iter().chain(upper.iter().cloned()).collect())
}

pub fn shapes_of(mats: &[LaurentMat], ring: &CoeffRing) -> Result<Vec<Shape>> {
    mats.iter().map(|m| classify_cell(m, ring)).collect()
}

// ------------------------------------------------------------------ rings

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RingPresentation {
    pub factors: Vec<Shape>,
    pub krull_dim: usize,
    pub mod_p_multiplicity: u64,
    pub is_domain: bool,
    pub presentation_strings: Vec<String>,
}

pub fn presentation_string(s: Shape) -> &'static str {
    match s {
        Shape::T => "O[[c21, x11*, x22*]]",
        Shape::Tp => "O[[c12, x11*, x22*]]",
        Shape::W => "O[[x11, y22, x12*, x21*]]/(x11*y22 + p)",
    }
}

pub fn ring_invariants(shape: &[Shape]) -> RingPresentation {
    let f = shape.len();
    let w = shape.iter().filter(|s| **s == Shape::W).count();
    RingPresentation {
        factors: shape.to_vec(),
        krull_dim: f + 5,
        mod_p_multiplicity: 1 << w,
        is_domain: true,
        presentation_strings: shape.iter().map(|s| presentation_string(*s).to_string()).collect(),
    }
}

/// `sum_v (dim_v - 1) + 5` against `1 + 4 |T| + sum_v f_v` with `|T|` one more
/// than the number of places above `p`.
pub fn global_dimension_identity(fs: &[usize]) -> (usize, usize) {
    let lhs: usize = fs
        .iter()
        .map(|&f| ring_invariants(&vec![Shape::W; f]).krull_dim - 1)
        .sum::<usize>()
        + 5;
    let places = fs.len() + 1;
    (lhs, 1 + 4 * places + fs.iter().sum::<usize>())
}

// --------------------------------------------------------------- BM check

fn shape_of_tilde(t: Tilde) -> Shape {
    match t {
        Tilde::One => Shape::W,
        Tilde::S => Shape::Tp,
        Tilde::Ts => Shape::T,
    }
}

fn check_generic(rho: &TameLParam, tau: &InertialTypeGl, ctx: &PrimeContext) -> Result<()> {
    let r = dl_from_lparam(rho, ctx)?;
    let d = depth(&r.mu, ctx);
    if d < INTERSECT_DEPTH {
        return Err(Error::DepthTooSmall { required: INTERSECT_DEPTH, found: d });
    }
    let d = type_genericity(tau, ctx)?;
    if d < INTERSECT_DEPTH {
        return Err(Error::DepthTooSmall { required: INTERSECT_DEPTH, found: d });
    }
    Ok(())
}

/// Shape read off the intersection of `beta(V_phi)` with `sigma(tau)`.
pub fn infer_shape(
    rho: &TameLParam,
    tau: &InertialTypeGl,
    ctx: &PrimeContext,
) -> Result<Option<Vec<Shape>>> {
    check_generic(rho, tau, ctx)?;
    let r = dl_from_lparam(rho, ctx)?;
    let b = beta_descended(&r, ctx);
    let st = sigma_of_type(tau, ctx)?;
    Ok(intersect_types(&b, &st, ctx)?.map(|w| w.wtilde.into_iter().map(shape_of_tilde).collect()))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BmReport {
    pub lhs: u64,
    pub e: u64,
    pub gl_lhs: u64,
    pub ok: bool,
}

pub fn breuil_mezard_check(
    rho: &TameLParam,
    tau: &InertialTypeGl,
    ctx: &PrimeContext,
) -> Result<BmReport> {
    let shape = infer_shape(rho, tau, ctx)?;
    let wq = predicted_weights(rho, ctx)?;
    let jh = jh_factors_any(&sigma_of_type(tau, ctx)?, ctx)?;
    let lhs = wq.intersection(&jh).count() as u64;
    let wq_gl = predicted_weights_gl(rho, ctx)?;
    let jh_gl: BTreeSet<_> = jh_factors_gl_any(&sigma_prime_of_type(tau, ctx)?, ctx)?;
    let gl_lhs = wq_gl.intersection(&jh_gl).count() as u64;
    let e = shape.as_ref().map_or(0, |s| ring_invariants(s).mod_p_multiplicity);
    let gl_e = shape.as_ref().map_or(0, |s| {
        let doubled: Vec<Shape> = s.iter().chain(s.iter()).copied().collect();
        1u64 << doubled.iter().filter(|x| **x == Shape::W).count()
    });
    let ok = lhs == e && gl_lhs == lhs * lhs && gl_e == e * e;
    Ok(BmReport { lhs, e, gl_lhs, ok })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f7() -> CoeffRing {
        CoeffRing::residue(7)
    }

    #[test]
    fn admissible_matrices() {
        let r = f7();
        let adm = admissible_set(&r, 4).unwrap();
        assert_eq!(adm.len(), 3);
        let w = LaurentMat::from_ints(&r, [[&[], &[1]], [&[0, 1], &[]]], 4).unwrap();
        assert_eq!(adm[2], (Shape::W, w));
        for (s, m) in &adm {
            assert_eq!(classify_cell(m, &r).unwrap(), *s);
        }
    }

    #[test]
    fn classify_examples() {
        let r = f7();
        let m = LaurentMat::from_ints(&r, [[&[0, 3], &[]], [&[0, 5], &[2]]], 4).unwrap();
        assert_eq!(classify_cell(&m, &r).unwrap(), Shape::T);
        let m = LaurentMat::from_ints(&r, [[&[], &[0, 1]], [&[1], &[]]], 4).unwrap();
        assert_eq!(classify_cell(&m, &r), Err(Error::NotAdmissible));
        let m = LaurentMat::from_ints(&r, [[&[1], &[]], [&[], &[1]]], 4).unwrap();
        assert_eq!(classify_cell(&m, &r), Err(Error::WrongDeterminantValuation));
    }

    #[test]
    fn residue_w_matrix() {
        let r = f7();
        let one = r.from_int(1);
        let c = Coeffs { c11: r.zero(), c12: one.clone(), c21: one, c22: r.zero() };
        let m = generic_matrix(Shape::W, &c, Mode::Residue, &r, 4).unwrap();
        assert_eq!(m, LaurentMat::from_ints(&r, [[&[], &[1]], [&[0, 1], &[]]], 4).unwrap());
    }

    #[test]
    fn deformed_w_relation() {
        let r = f7();
        let mk = |a: i64, d: i64| Coeffs {
            c11: r.from_int(a),
            c12: r.from_int(1),
            c21: r.from_int(1),
            c22: r.from_int(d),
        };
        assert!(generic_matrix(Shape::W, &mk(0, 3), Mode::Deformed, &r, 4).is_ok());
        assert_eq!(
            generic_matrix(Shape::W, &mk(1, 1), Mode::Deformed, &r, 4),
            Err(Error::RelationViolated)
        );
        let c = Coeffs { c11: r.zero(), ..mk(0, 0) };
        let c = Coeffs { c12: r.zero(), ..c };
        assert_eq!(generic_matrix(Shape::W, &c, Mode::Residue, &r, 4), Err(Error::ZeroUnit));
    }

    #[test]
    fn dual_examples() {
        let r = f7();
        let w = LaurentMat::from_ints(&r, [[&[], &[1]], [&[0, 1], &[]]], 4).unwrap();
        assert_eq!(dual_transform(&w, &r).unwrap(), w);
        let t = LaurentMat::from_ints(&r, [[&[0, 1], &[]], [&[], &[1]]], 4).unwrap();
        assert_eq!(classify_cell(&dual_transform(&t, &r).unwrap(), &r).unwrap(), Shape::T);
    }

    #[test]
    fn field_extension_inverse() {
        let r = CoeffRing::new(5, 2, 3).unwrap();
        let mut rng = crate::sample::rng(0);
        for _ in 0..50 {
            let a = r.random_unit(&mut rng);
            let b = r.inv(&a).unwrap();
            assert_eq!(r.mul(&a, &b), r.from_int(1));
        }
    }

    #[test]
    fn polarized_f1() {
        let r = f7();
        let a1 = LaurentMat::from_ints(&r, [[&[0, 3], &[]], [&[0, 5], &[2]]], 6).unwrap();
        let a0 = dual_transform(&a1, &r).unwrap().neg(&r);
        let fam = vec![a0.clone(), a1.clone()];
        assert!(polarized_check(&fam, &r).unwrap());
        assert_eq!(shapes_of(&fam, &r).unwrap(), vec![Shape::T, Shape::T]);
        let wrong = vec![dual_transform(&a1, &r).unwrap(), a1];
        assert!(!polarized_check(&wrong, &r).unwrap());
    }

    #[test]
    fn ring_examples() {
        let w = ring_invariants(&[Shape::W]);
        assert_eq!((w.mod_p_multiplicity, w.krull_dim, w.is_domain), (2, 6, true));
        assert_eq!(ring_invariants(&[Shape::T]).mod_p_multiplicity, 1);
        let m = ring_invariants(&[Shape::W, Shape::Tp]);
        assert_eq!((m.mod_p_multiplicity, m.krull_dim), (2, 7));
    }
}
