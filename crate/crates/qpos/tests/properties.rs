//! Randomized invariants: algebra laws for the polynomial types, skein and
//! symmetry identities for the engines, and the structural facts tying
//! braids, plats, fences, and band representations together.

use proptest::prelude::*;

use qpos::bounds::{
    band_rep_framing, q_lower_from_fence, random_annular_band_reps, random_positive_knot_words,
    subadditivity_check,
};
use qpos::braid::{braid_as_plat, closed_braid_diagram, Band, BandRepresentation, BraidWord};
use qpos::diagram::FramedDiagram;
use qpos::fence::{
    band_rep_to_fence, fence_m, fence_to_band_rep, fence_to_diagram, fence_to_positive_plat,
    fence_writhe, plat_to_fence,
};
use qpos::laurent::{Laurent1, Ring};
use qpos::skein::SkeinEngine;

fn arb_terms() -> impl Strategy<Value = Vec<(i64, i64)>> {
    proptest::collection::vec((-8..8i64, -5..5i64), 0..8)
}

fn arb_poly() -> impl Strategy<Value = Laurent1> {
    arb_terms().prop_map(|ts| Laurent1::from_terms(Ring::Int, 'v', ts).unwrap())
}

fn arb_word() -> impl Strategy<Value = BraidWord> {
    (2..=4usize).prop_flat_map(|n| {
        let letter = (1..n as i32).prop_flat_map(|g| prop_oneof![Just(g), Just(-g)]);
        proptest::collection::vec(letter, 1..=8)
            .prop_map(move |letters| BraidWord::new(n, letters).unwrap())
    })
}

fn arb_band_rep() -> impl Strategy<Value = BandRepresentation> {
    (2..=6usize).prop_flat_map(|n| {
        let band = (1..n, any::<bool>()).prop_flat_map(move |(i, positive)| {
            (i + 1..=n).prop_map(move |j| {
                Band::new(i, j, if positive { 1 } else { -1 }, n).unwrap()
            })
        });
        proptest::collection::vec(band, 1..=8)
            .prop_map(move |bands| BandRepresentation::new(n, bands).unwrap())
    })
}

proptest! {
    // cheap algebra: default case count
    #[test]
    fn laurent_stays_normalized(ts in arb_terms()) {
        let p = Laurent1::from_terms(Ring::Int, 'v', ts.clone()).unwrap();
        prop_assert!(p.terms().all(|(_, c)| c != 0));
        let exps: Vec<i64> = p.terms().map(|(e, _)| e).collect();
        prop_assert!(exps.windows(2).all(|w| w[0] < w[1]));
        let m = Laurent1::from_terms(Ring::Mod2, 'v', ts).unwrap();
        prop_assert!(m.terms().all(|(_, c)| c == 1));
    }

    #[test]
    fn laurent_ring_laws(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
        let ab = a.add(&b).unwrap();
        prop_assert_eq!(&ab, &b.add(&a).unwrap());
        prop_assert_eq!(
            ab.add(&c).unwrap(),
            a.add(&b.add(&c).unwrap()).unwrap()
        );
        prop_assert_eq!(a.mul(&b).unwrap(), b.mul(&a).unwrap());
        prop_assert_eq!(
            a.mul(&b.add(&c).unwrap()).unwrap(),
            a.mul(&b).unwrap().add(&a.mul(&c).unwrap()).unwrap()
        );
        prop_assert!(a.add(&a.neg()).unwrap().is_zero());
    }

    #[test]
    fn laurent_invert_var_is_a_ring_involution(a in arb_poly(), b in arb_poly()) {
        prop_assert_eq!(&a.invert_var().invert_var(), &a);
        prop_assert_eq!(
            a.mul(&b).unwrap().invert_var(),
            a.invert_var().mul(&b.invert_var()).unwrap()
        );
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn simplify_preserves_framing_data(w in arb_word()) {
        let d = closed_braid_diagram(&w);
        let s = d.simplify();
        // removed kinks are the only writhe leak, and they are counted
        prop_assert_eq!(
            d.writhe().unwrap(),
            s.diagram.writhe().unwrap() + s.curls
        );
        prop_assert_eq!(d.components().total(), s.diagram.components().total());
        prop_assert_eq!(
            d.total_linking().unwrap(),
            s.diagram.total_linking().unwrap()
        );
    }

    #[test]
    fn homfly_ignores_simplify_and_reversal(w in arb_word()) {
        let eng = SkeinEngine::new();
        let d = closed_braid_diagram(&w);
        let p = eng.homfly_p(&d).unwrap();
        prop_assert_eq!(&p, &eng.homfly_p(&d.simplify().diagram).unwrap());
        prop_assert_eq!(&p, &eng.homfly_p(&d.reverse_all().unwrap()).unwrap());
    }

    #[test]
    fn kauffman_mirrors_by_inverting_a(w in arb_word()) {
        let eng = SkeinEngine::new();
        let d = closed_braid_diagram(&w);
        let f = eng.kauffman_mod2(&d).unwrap();
        prop_assert_eq!(
            eng.kauffman_mod2(&d.mirror()).unwrap(),
            f.scale_exponents('a', -1).unwrap()
        );
    }

    #[test]
    fn g0_matches_r_on_random_closures(w in arb_word()) {
        let eng = SkeinEngine::new();
        prop_assert!(eng.g0_matches_r(&closed_braid_diagram(&w)).unwrap());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn homfly_satisfies_the_skein_relation_at_every_crossing(w in arb_word()) {
        let eng = SkeinEngine::new();
        let d = closed_braid_diagram(&w);
        let p = eng.homfly_p(&d).unwrap();
        for c in 0..d.n_crossings() {
            let p0 = eng.homfly_p(&d.smooth_oriented(c).unwrap()).unwrap();
            let psw = eng.homfly_p(&d.switch_crossing(c).unwrap()).unwrap();
            let rhs = if d.sign(c).unwrap() > 0 {
                // P(L+) = vz P(L0) + v^2 P(L-)
                p0.mul_monomial((1, 1), 1)
                    .unwrap()
                    .add(&psw.mul_monomial((2, 0), 1).unwrap())
                    .unwrap()
            } else {
                // P(L-) = v^-2 (P(L+) - vz P(L0))
                psw.sub(&p0.mul_monomial((1, 1), 1).unwrap())
                    .unwrap()
                    .mul_monomial((-2, 0), 1)
                    .unwrap()
            };
            prop_assert_eq!(&p, &rhs, "crossing {}", c);
        }
    }
}

fn arb_framed_case() -> impl Strategy<Value = (BraidWord, Vec<i64>)> {
    (2..=3usize).prop_flat_map(|n| {
        let letter = (1..n as i32).prop_flat_map(|g| prop_oneof![Just(g), Just(-g)]);
        proptest::collection::vec(letter, 1..=4).prop_flat_map(move |letters| {
            let w = BraidWord::new(n, letters).unwrap();
            let comps = closed_braid_diagram(&w).components().total();
            proptest::collection::vec(-1..=1i64, comps)
                .prop_map(move |f| (w.clone(), f))
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn framed_polynomial_shifts_by_total_framing((w, framing) in arb_framed_case()) {
        let eng = SkeinEngine::new().with_budgets(48, 10);
        let d = closed_braid_diagram(&w);
        let base = eng
            .framed_polynomial(&FramedDiagram::zero_framed(d.clone()))
            .unwrap();
        let shifted = eng
            .framed_polynomial(&FramedDiagram::new(d, framing.clone()).unwrap())
            .unwrap();
        let phi: i64 = framing.iter().sum();
        prop_assert_eq!(shifted, base.mul_monomial((-2 * phi, 0), 1).unwrap());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn band_rep_to_fence_round_trips(b in arb_band_rep()) {
        let cf = band_rep_to_fence(&b).unwrap();
        let back = fence_to_band_rep(&cf).unwrap();
        prop_assert_eq!(back.to_text(), b.to_text());
    }

    #[test]
    fn expanded_word_keeps_the_band_count_book(b in arb_band_rep()) {
        let w = b.expanded_word();
        prop_assert_eq!(w.exponent_sum(), b.exponent_sum());
        let signed: i64 = b.bands().iter().map(|band| band.sign as i64).sum();
        prop_assert_eq!(b.exponent_sum(), signed);
        // one transposition per band: closure component parity is forced
        let comps = closed_braid_diagram(&w).components().total();
        prop_assert_eq!(
            comps % 2,
            (b.strands() + b.bands().len()) % 2
        );
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn annular_band_reps_frame_like_their_fences(seed in any::<u64>()) {
        for b in random_annular_band_reps(seed, 2, 5) {
            let cf = band_rep_to_fence(&b).unwrap();
            let w = fence_writhe(&cf.fence).unwrap();
            let m = fence_m(&cf.fence).unwrap() as i64;
            prop_assert_eq!(band_rep_framing(&b).unwrap(), w - m);
        }
    }

    #[test]
    fn positive_plat_fence_and_braid_present_one_knot(seed in any::<u64>()) {
        let eng = SkeinEngine::new().with_budgets(24, 10);
        let w = random_positive_knot_words(seed, 1, 4, 6).pop().unwrap();
        let r = eng.r_poly(&closed_braid_diagram(&w)).unwrap();

        let plat = braid_as_plat(&w);
        prop_assert_eq!(&r, &eng.r_poly(&plat.diagram().simplify().diagram).unwrap());

        let fence = plat_to_fence(&plat).unwrap();
        let e = w.exponent_sum();
        let n = w.strands() as i64;
        prop_assert_eq!(q_lower_from_fence(&fence).unwrap(), e - n);
        let core = fence_to_diagram(&fence).unwrap().simplify().diagram;
        prop_assert_eq!(&r, &eng.r_poly(&core).unwrap());

        let replat = fence_to_positive_plat(&fence).unwrap();
        prop_assert_eq!(&r, &eng.r_poly(&replat.diagram().simplify().diagram).unwrap());
    }

    #[test]
    fn fence_sums_stay_subadditive(seed_a in any::<u64>(), seed_b in any::<u64>()) {
        let a = random_positive_knot_words(seed_a, 1, 3, 5).pop().unwrap();
        let b = random_positive_knot_words(seed_b, 1, 3, 5).pop().unwrap();
        let fences = vec![
            plat_to_fence(&braid_as_plat(&a)).unwrap(),
            plat_to_fence(&braid_as_plat(&b)).unwrap(),
        ];
        let rep = subadditivity_check(&fences).unwrap();
        prop_assert!(rep.holds, "lhs {} < rhs {}", rep.lhs, rep.rhs);
    }
}
