use std::collections::BTreeSet;

use proptest::prelude::*;
use rand::Rng;

use unitary_weights::base_change::{bc_type, bc_weight, epsilon_weight};
use unitary_weights::intersect::{graph_distance, labelled_factors};
use unitary_weights::lattice::{eta, PrimeContext, WeylElt};
use unitary_weights::lparams::{
    beta_forms_agree, dl_from_lparam, exponents_of_tau, lparam_from_dl, lparam_genericity, predicted_weights,
    sigma_of_type, sigma_prime_of_type, InertialTypeGl,
};
use unitary_weights::sample;
use unitary_weights::weights::{
    central_character_type, central_character_weight, descend_to_u2, dl_isomorphic,
    dl_isomorphic_gl, jh_factors, jh_factors_gl_any, present_via, re_present_gl, DlRepGl, DlRepU,
};

fn context() -> impl Strategy<Value = PrimeContext> {
    (prop::sample::select(vec![5i64, 7, 11]), 1usize..=3)
        .prop_map(|(p, f)| PrimeContext::new(p, f).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn jh_is_a_class_invariant(c in context(), seed in any::<u64>()) {
        let mut rng = sample::rng(seed);
        let r = sample::deep_rep(&mut rng, &c, 1, false).unwrap();
        let v = sample::weyl(&mut rng, c.f());
        if let Some((r2, d)) = present_via(&r, &v, &c) {
            prop_assert!(dl_isomorphic(&r, &r2, &c));
            prop_assert!(dl_isomorphic(&r2, &r, &c));
            if d >= 1 {
                prop_assert_eq!(jh_factors(&r, &c).unwrap(), jh_factors(&r2, &c).unwrap());
            }
        }
    }

    #[test]
    fn labels_and_central_characters(c in context(), seed in any::<u64>()) {
        let mut rng = sample::rng(seed);
        let descended = rng.gen();
        let r = sample::deep_rep(&mut rng, &c, 1, descended).unwrap();
        let jh = jh_factors(&r, &c).unwrap();
        let labelled = labelled_factors(&r, &c).unwrap();
        let labels: BTreeSet<_> = labelled.iter().map(|x| x.0.clone()).collect();
        let weights: BTreeSet<_> = labelled.into_iter().map(|x| x.1).collect();
        prop_assert_eq!(labels.len(), 1 << c.f());
        prop_assert_eq!(&weights, &jh);
        if let Ok(d) = descend_to_u2(&r, &c) {
            let cc = central_character_type(&d, &c).unwrap();
            for x in &jh {
                prop_assert_eq!(central_character_weight(x, &c).unwrap(), cc);
            }
        }
    }

    #[test]
    fn graph_distance_is_a_metric(c in context(), seed in any::<u64>()) {
        let mut rng = sample::rng(seed);
        let r = sample::deep_rep(&mut rng, &c, 1, true).unwrap();
        let jh: Vec<_> = jh_factors(&r, &c).unwrap().into_iter().collect();
        let d = |a: usize, b: usize| graph_distance(&r, &jh[a], &jh[b], &c).unwrap();
        for a in 0..jh.len() {
            prop_assert_eq!(d(a, a), 0);
            for b in 0..jh.len() {
                prop_assert_eq!(d(a, b), d(b, a));
                for e in 0..jh.len() {
                    prop_assert!(d(a, e) <= d(a, b) + d(b, e));
                }
            }
        }
    }

    #[test]
    fn exponents_survive_re_presentation(c in context(), seed in any::<u64>()) {
        let mut rng = sample::rng(seed);
        let n = 2 * c.f();
        let mut w = sample::weyl(&mut rng, n);
        if w.length() % 2 == 1 {
            w.0[0] ^= true;
        }
        let r = DlRepGl::new(w, sample::gl_char(&mut rng, n, 9));
        let r2 = re_present_gl(&r, &sample::weyl(&mut rng, n), &sample::gl_char(&mut rng, n, 9), &c);
        prop_assert_eq!(
            exponents_of_tau(&r.w, &r.mu, &c).unwrap(),
            exponents_of_tau(&r2.w, &r2.mu, &c).unwrap()
        );
    }

    #[test]
    fn parameters_round_trip(c in context(), seed in any::<u64>()) {
        let mut rng = sample::rng(seed);
        let pair = sample::deep_pair(&mut rng, &c, 1).unwrap();
        prop_assert!(lparam_genericity(&lparam_from_dl(&pair, &c).unwrap(), &c).unwrap() >= 1);
        let rho = lparam_from_dl(&pair, &c).unwrap();
        let back = dl_from_lparam(&rho, &c).unwrap();
        let shift = |r: &DlRepU| DlRepU::new(r.w.clone(), &r.mu + &eta(c.f()));
        prop_assert!(dl_isomorphic(&shift(&pair), &shift(&back), &c));
        prop_assert!(beta_forms_agree(&back, &c).unwrap());
        prop_assert_eq!(predicted_weights(&rho, &c).unwrap().len(), 1 << c.f());
    }

    #[test]
    fn sigma_prime_is_base_change_of_sigma(c in context(), seed in any::<u64>()) {
        let mut rng = sample::rng(seed);
        let q = c.q();
        let tau = if rng.gen() {
            let x = rng.gen_range(1..c.m());
            InertialTypeGl::new(x, -q * x, &c)
        } else {
            InertialTypeGl::new((1 - q) * rng.gen_range(0..=q), (1 - q) * rng.gen_range(0..=q), &c)
        };
        if let Ok(s) = sigma_of_type(&tau, &c) {
            let b = bc_type(&s, &c).unwrap();
            prop_assert!(dl_isomorphic_gl(&b, &sigma_prime_of_type(&tau, &c).unwrap(), &c));
        }
    }

    #[test]
    fn epsilon_permutes_base_changed_factors(c in context(), seed in any::<u64>()) {
        let mut rng = sample::rng(seed);
        let r = sample::deep_rep(&mut rng, &c, 1, true).unwrap();
        if let Ok(b) = bc_type(&r, &c) {
            let jh_gl = jh_factors_gl_any(&b, &c).unwrap();
            let images: BTreeSet<_> =
                jh_factors(&r, &c).unwrap().iter().map(|x| bc_weight(x, &c).unwrap()).collect();
            for y in &jh_gl {
                let e = epsilon_weight(y, &c).unwrap();
                prop_assert!(jh_gl.contains(&e));
                prop_assert_eq!(epsilon_weight(&e, &c).unwrap(), y.clone());
                prop_assert_eq!(e == *y, images.contains(y));
            }
        }
    }
}

#[test]
fn weyl_group_has_two_to_the_f_elements() {
    assert_eq!(WeylElt::all(3).count(), 8);
}
