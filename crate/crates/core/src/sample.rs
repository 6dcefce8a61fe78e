//! Seeded random generators for property checks.

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::lattice::{GlChar, PrimeContext, UChar, WeylElt};
use crate::weights::{weight, DlRepU, SerreWeightU};

pub type Rng8 = ChaCha8Rng;

pub fn rng(seed: u64) -> Rng8 {
    use rand::SeedableRng;
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn weyl(rng: &mut Rng8, n: usize) -> WeylElt {
    WeylElt((0..n).map(|_| rng.gen::<bool>()).collect())
}

/// A character with the given pairings and random pairing-zero part.
pub fn char_with_pairings(rng: &mut Rng8, xs: &[i64], spread: i64, descended: bool) -> UChar {
    UChar::from_canonical(
        xs.iter()
            .map(|&x| {
                let m = rng.gen_range(-spread..=spread);
                let n = if descended { 0 } else { rng.gen_range(-spread..=spread) };
                [x + m, m + n, n]
            })
            .collect(),
    )
}

/// Pairings `x_i` with `n < x_i < p - n`, or `None` when that range is empty.
pub fn deep_pairings(rng: &mut Rng8, ctx: &PrimeContext, n: i64) -> Option<Vec<i64>> {
    let (lo, hi) = (n + 1, ctx.p() - n - 1);
    if lo > hi {
        return None;
    }
    Some((0..ctx.f()).map(|_| rng.gen_range(lo..=hi)).collect())
}

/// `R_w(mu)` with `mu - eta` at least `n`-deep.
pub fn deep_rep(rng: &mut Rng8, ctx: &PrimeContext, n: i64, descended: bool) -> Option<DlRepU> {
    let xs = deep_pairings(rng, ctx, n)?;
    let w = weyl(rng, ctx.f());
    Some(DlRepU::new(w, char_with_pairings(rng, &xs, 6, descended)))
}

/// A parameter pair `(w, mu)` with `mu` descended and at least `n`-deep.
pub fn deep_pair(rng: &mut Rng8, ctx: &PrimeContext, n: i64) -> Option<DlRepU> {
    let (lo, hi) = (n, ctx.p() - n - 2);
    if lo > hi {
        return None;
    }
    let xs: Vec<i64> = (0..ctx.f()).map(|_| rng.gen_range(lo..=hi)).collect();
    let w = weyl(rng, ctx.f());
    Some(DlRepU::new(w, char_with_pairings(rng, &xs, 6, true)))
}

/// A weight `F(mu)` with `mu` at least `n`-deep (pairings in `(n, p - 2 - n)`).
pub fn deep_weight(rng: &mut Rng8, ctx: &PrimeContext, n: i64, descended: bool) -> Option<SerreWeightU> {
    let (lo, hi) = (n, ctx.p() - n - 2);
    if lo > hi {
        return None;
    }
    let xs: Vec<i64> = (0..ctx.f()).map(|_| rng.gen_range(lo..=hi)).collect();
    weight(&char_with_pairings(rng, &xs, 6, descended), ctx).ok()
}

pub fn any_weight(rng: &mut Rng8, ctx: &PrimeContext, descended: bool) -> SerreWeightU {
    let xs: Vec<i64> = (0..ctx.f()).map(|_| rng.gen_range(0..ctx.p())).collect();
    weight(&char_with_pairings(rng, &xs, 6, descended), ctx).expect("restricted by construction")
}

pub fn gl_char(rng: &mut Rng8, n: usize, spread: i64) -> GlChar {
    GlChar((0..n).map(|_| [rng.gen_range(-spread..=spread), rng.gen_range(-spread..=spread)]).collect())
}
