//! Labels, graph distance, intersections of Jordan-Hoelder sets, and the
//! neighbor and disjoint type constructions.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::{alpha_of, depth, eta, phi_inverse, wact, PrimeContext, UChar, WeylElt};
use crate::weights::{
    central_character_type, central_character_weight, deep_presentation, descend_to_u2,
    descended_rep, dl_isomorphic, jh_factors, jh_factors_any, present_via, weight, DlRepU,
    SerreWeightU,
};

/// Depth required of both inputs to [`intersect_types`].
pub const INTERSECT_DEPTH: i64 = 2;
/// Depth required of the input type to [`neighbor_type`].
pub const NEIGHBOR_DEPTH: i64 = 2;
/// Default translation radius for [`disjoint_type`].
pub const DEFAULT_RADIUS: i64 = 3;

/// The translation part `nu` paired with `z` in the alcove stabilizer.
fn standard_nu(z: &WeylElt) -> UChar {
    UChar::from_canonical(z.0.iter().map(|&s| if s { [0, 0, 1] } else { [0; 3] }).collect())
}

/// The weight carrying label `z` for the presentation `(w, mu)`:
/// `s(z(mu + w pi(nu) - p nu)) + (p - 1) eta`.
pub fn weight_with_label(r: &DlRepU, z: &WeylElt, ctx: &PrimeContext) -> Result<SerreWeightU> {
    let f = ctx.f();
    let p = ctx.p();
    let nu = standard_nu(z);
    let inner = &(&r.mu + &wact(&r.w, &phi_inverse(&nu))) - &nu.scale(p);
    let lam = &wact(&WeylElt::longest(f).mul(z), &inner) + &eta(f).scale(p - 1);
    weight(&lam, ctx)
}

/// All factors with their labels, in label order.
pub fn labelled_factors(r: &DlRepU, ctx: &PrimeContext) -> Result<Vec<(WeylElt, SerreWeightU)>> {
    let d = r.depth(ctx);
    if d < 1 {
        return Err(Error::DepthTooSmall { required: 1, found: d });
    }
    WeylElt::all(ctx.f())
        .map(|z| Ok((z.clone(), weight_with_label(r, &z, ctx)?)))
        .collect()
}

/// The label of `x` with respect to the presentation `r` (`mu - eta` 1-deep).
pub fn label(r: &DlRepU, x: &SerreWeightU, ctx: &PrimeContext) -> Result<WeylElt> {
    labelled_factors(r, ctx)?
        .into_iter()
        .find(|(_, y)| y == x)
        .map(|(z, _)| z)
        .ok_or(Error::NotAFactor)
}

/// Number of slots where the labels of `x` and `y` differ.
pub fn graph_distance(
    r: &DlRepU,
    x: &SerreWeightU,
    y: &SerreWeightU,
    ctx: &PrimeContext,
) -> Result<usize> {
    let (r, _) = deep_presentation(r, ctx)?;
    let (zx, zy) = (label(&r, x, ctx)?, label(&r, y, ctx)?);
    Ok(zx.mul(&zy).length())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Tilde {
    #[serde(rename = "1")]
    One,
    #[serde(rename = "s")]
    S,
    #[serde(rename = "ts")]
    Ts,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntersectionWitness {
    pub wtilde: Vec<Tilde>,
    pub pair: DlRepU,
    pub common: BTreeSet<SerreWeightU>,
}

fn require_depth(r: &DlRepU, n: i64, ctx: &PrimeContext) -> Result<DlRepU> {
    let (deep, d) = deep_presentation(r, ctx)?;
    if d < n {
        return Err(Error::DepthTooSmall { required: n, found: d });
    }
    Ok(deep)
}

fn all_tildes(f: usize) -> impl Iterator<Item = Vec<Tilde>> {
    (0..3usize.pow(f as u32)).map(move |mut k| {
        (0..f)
            .map(|_| {
                let t = [Tilde::One, Tilde::S, Tilde::Ts][k % 3];
                k /= 3;
                t
            })
            .collect()
    })
}

/// `t_{mu} w * wtilde` as a new presentation `(w', mu')`.
fn apply_tilde(r: &DlRepU, wt: &[Tilde]) -> DlRepU {
    let v = WeylElt(wt.iter().map(|t| *t != Tilde::One).collect());
    let ts = WeylElt(wt.iter().map(|t| *t == Tilde::Ts).collect());
    DlRepU::new(r.w.mul(&v), &r.mu + &wact(&r.w, &alpha_of(&ts)))
}

/// Labels `z` of the weights shared by `r` and `apply_tilde(r, wt)`.
fn common_labels(wt: &[Tilde]) -> Vec<WeylElt> {
    let f = wt.len();
    WeylElt::all(f)
        .filter(|z| {
            (0..f).all(|i| match wt[i] {
                Tilde::One => true,
                Tilde::S => !z.0[(i + f - 1) % f],
                Tilde::Ts => z.0[(i + f - 1) % f],
            })
        })
        .collect()
}

pub fn intersect_types(
    s1: &DlRepU,
    s2: &DlRepU,
    ctx: &PrimeContext,
) -> Result<Option<IntersectionWitness>> {
    let r1 = require_depth(s1, INTERSECT_DEPTH, ctx)?;
    require_depth(s2, INTERSECT_DEPTH, ctx)?;
    let mut found: Option<IntersectionWitness> = None;
    for wt in all_tildes(ctx.f()) {
        let pair = apply_tilde(&r1, &wt);
        if !dl_isomorphic(&pair, s2, ctx) {
            continue;
        }
        if found.is_some() {
            return Err(Error::AmbiguousWitness);
        }
        let common = common_labels(&wt)
            .iter()
            .map(|z| weight_with_label(&r1, z, ctx))
            .collect::<Result<BTreeSet<_>>>()?;
        let ones = wt.iter().filter(|t| **t == Tilde::One).count();
        if common.len() != 1 << ones {
            return Err(Error::ConsistencyFailure("intersection cardinality".into()));
        }
        found = Some(IntersectionWitness { wtilde: wt, pair, common });
    }
    Ok(found)
}

/// A type sharing exactly the factors of `r` lying between `x` and `y`.
pub fn neighbor_type(
    r: &DlRepU,
    x: &SerreWeightU,
    y: &SerreWeightU,
    ctx: &PrimeContext,
) -> Result<DlRepU> {
    let deep = require_depth(r, NEIGHBOR_DEPTH, ctx)?;
    let f = ctx.f();
    let zx = label(&deep, x, ctx)?;
    let v = WeylElt::longest(f).mul(&zx);
    let (r2, d) = present_via(&deep, &v, ctx).ok_or(Error::DepthTooSmall {
        required: NEIGHBOR_DEPTH,
        found: -1,
    })?;
    if d < 1 {
        return Err(Error::DepthTooSmall { required: 1, found: d });
    }
    let z = label(&r2, y, ctx)?;
    let mu = &r2.mu + &wact(&r2.w, &alpha_of(&z.frob()));
    Ok(DlRepU::new(r2.w.mul(&z.frob()), mu))
}

/// A type containing `x` whose factors avoid those of `r`.
pub fn disjoint_type(
    r: &DlRepU,
    x: &SerreWeightU,
    radius: i64,
    ctx: &PrimeContext,
) -> Result<DlRepU> {
    let f = ctx.f();
    let deep = require_depth(r, 2, ctx)?;
    if !r.mu.is_descended() {
        return Err(Error::PreconditionViolated("type is not descended".into()));
    }
    let lam = descended_rep(x, ctx)
        .map_err(|_| Error::PreconditionViolated("weight is not descended".into()))?;
    if depth(&lam, ctx) < 3 {
        return Err(Error::PreconditionViolated("weight is not 3-deep".into()));
    }
    let jh = jh_factors(&deep, ctx)?;
    if jh.contains(x) {
        return Err(Error::PreconditionViolated("weight is a factor of the type".into()));
    }
    // label 1 forces mu = s(lambda - (p-1) eta)
    let s = WeylElt::longest(f);
    let base = wact(&s, &(&lam - &eta(f).scale(ctx.p() - 1)));
    let cc = central_character_type(&descend_to_u2(&deep, ctx)?, ctx)?;
    if cc != central_character_weight(x, ctx)? {
        return descend_to_u2(&DlRepU::new(deep.w.clone(), base), ctx);
    }
    let mut shifts: Vec<Vec<i64>> = vec![vec![]];
    for _ in 0..f {
        shifts = shifts
            .into_iter()
            .flat_map(|v| (-radius..=radius).map(move |n| [v.clone(), vec![n]].concat()))
            .collect();
    }
    shifts.sort_by_key(|v| (v.iter().map(|n| n.abs()).max(), v.iter().map(|n| n.abs()).sum::<i64>()));
    for nu in shifts {
        let shift = UChar::from_canonical(nu.iter().map(|&n| [n, -n, 0]).collect());
        for w in WeylElt::all(f) {
            let cand = DlRepU::new(w, &base + &shift);
            let Ok(jh2) = jh_factors_any(&cand, ctx) else { continue };
            if jh2.contains(x) && jh2.is_disjoint(&jh) {
                return descend_to_u2(&cand, ctx);
            }
        }
    }
    Err(Error::SearchExhausted { radius })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::UChar;

    fn rep(w: &[bool], mu: &[[i64; 4]]) -> DlRepU {
        DlRepU::new(WeylElt(w.to_vec()), UChar::from_raw(mu))
    }

    #[test]
    fn self_intersection() {
        let c = PrimeContext::new(7, 1).unwrap();
        let s = rep(&[false], &[[3, 1, 1, 0]]);
        let w = intersect_types(&s, &s, &c).unwrap().unwrap();
        assert_eq!(w.wtilde, vec![Tilde::One]);
        assert_eq!(w.common.len(), 2);
    }

    #[test]
    fn rank_one_witnesses() {
        let c = PrimeContext::new(7, 1).unwrap();
        let s = rep(&[false], &[[3, 1, 1, 0]]);
        for (other, t) in [
            (rep(&[true], &[[3, 1, 1, 0]]), Tilde::S),
            (rep(&[true], &[[4, 0, 1, 0]]), Tilde::Ts),
        ] {
            let w = intersect_types(&s, &other, &c).unwrap().unwrap();
            assert_eq!(w.wtilde, vec![t]);
            let brute: BTreeSet<_> = jh_factors_any(&s, &c)
                .unwrap()
                .intersection(&jh_factors_any(&other, &c).unwrap())
                .cloned()
                .collect();
            assert_eq!(w.common, brute);
            assert_eq!(brute.len(), 1);
        }
    }

    #[test]
    fn distances_in_rank_one() {
        let c = PrimeContext::new(7, 1).unwrap();
        let s = rep(&[false], &[[3, 1, 1, 0]]);
        let jh: Vec<_> = jh_factors_any(&s, &c).unwrap().into_iter().collect();
        assert_eq!(graph_distance(&s, &jh[0], &jh[0], &c).unwrap(), 0);
        assert_eq!(graph_distance(&s, &jh[0], &jh[1], &c).unwrap(), 1);
        let n = neighbor_type(&s, &jh[0], &jh[1], &c).unwrap();
        assert_eq!(jh_factors_any(&n, &c).unwrap().intersection(&jh.iter().cloned().collect()).count(), 2);
        let n = neighbor_type(&s, &jh[0], &jh[0], &c).unwrap();
        let common: Vec<_> = jh_factors_any(&n, &c).unwrap().into_iter().filter(|x| jh.contains(x)).collect();
        assert_eq!(common, vec![jh[0].clone()]);
    }
}
