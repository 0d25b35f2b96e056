use num_traits::Zero;
use qfkg_core::lattice::{chain, divisor, product};
use qfkg_core::reduction::{
    boolean_carrier, coefficient_slice_check, complement_transform, diagonal_construction,
    extend_via_embedding, interval_restriction, replay_proof,
};
use qfkg_core::rng::SeededRng;
use qfkg_core::search::generate::{random_ad_quadruple, random_selection, Family};
use qfkg_core::{
    birkhoff_embed, check_ad_hypothesis, check_q4ft, check_setminus_lemma, BooleanView,
    FamilySelection, Rational, WeightFunction, WeightQuadruple,
};
use std::sync::Arc;

fn quads(seed: u64, count: usize, max_n: usize) -> Vec<WeightQuadruple> {
    let mut rng = SeededRng::new(seed);
    (0..count)
        .map(|i| {
            let l = boolean_carrier(1 + i % max_n).unwrap();
            random_ad_quadruple(&l, &mut rng, Family::ALL[i % 3]).unwrap()
        })
        .collect()
}

#[test]
fn interval_restrictions_keep_the_hypothesis() {
    for quad in quads(21, 300, 3) {
        let view = BooleanView::of(quad.carrier()).unwrap();
        let full = view.full_mask();
        for f in 0..=full {
            for g in 0..=full {
                if f & !g == 0 {
                    let r = interval_restriction(&quad, f, g).unwrap();
                    assert_eq!(r.carrier().len(), 1 << (g & !f).count_ones());
                    assert!(check_ad_hypothesis(&r).holds());
                }
            }
        }
    }
}

#[test]
fn complement_transform_exchanges_the_hypotheses() {
    let mut rng = SeededRng::new(3);
    for i in 0..400 {
        let l = boolean_carrier(1 + i % 3).unwrap();
        // arbitrary quadruples, so both outcomes occur
        let w = |rng: &mut SeededRng| {
            WeightFunction::from_fn(l.clone(), |_| Rational::from_integer((rng.below(3) as i64).into())).unwrap()
        };
        let quad = WeightQuadruple::new(w(&mut rng), w(&mut rng), w(&mut rng), w(&mut rng)).unwrap();
        let t = complement_transform(&quad).unwrap();
        let setminus = check_setminus_lemma(&quad).unwrap();
        assert_eq!(setminus.hypothesis.holds(), check_ad_hypothesis(&t).holds());
        assert_eq!(complement_transform(&t).unwrap(), quad);
        if setminus.hypothesis.holds() {
            assert!(setminus.conclusion.verdict.holds());
        }
    }
}

#[test]
fn diagonal_construction_satisfies_setminus_hypothesis() {
    for quad in quads(8, 300, 3) {
        let (f, g) = diagonal_construction(&quad).unwrap();
        let l = f.carrier().clone();
        let view = BooleanView::of(&l).unwrap();
        for a in l.elements() {
            for b in l.elements() {
                let (ma, mb) = (view.mask(a), view.mask(b));
                let lhs = f.value(a) * f.value(b);
                let rhs = g.value(view.element(mb & !ma)) * g.value(view.element(ma & !mb));
                assert!(lhs <= rhs);
            }
        }
        let all = FamilySelection::all(&l);
        assert!(f.total(&all) <= g.total(&all));
    }
}

#[test]
fn slice_identity_holds_for_arbitrary_quadruples() {
    let mut rng = SeededRng::new(99);
    for i in 0..60 {
        let l = boolean_carrier(1 + i % 3).unwrap();
        let w = |rng: &mut SeededRng| {
            WeightFunction::from_fn(l.clone(), |_| Rational::from_integer((rng.below(4) as i64).into())).unwrap()
        };
        let quad = WeightQuadruple::new(w(&mut rng), w(&mut rng), w(&mut rng), w(&mut rng)).unwrap();
        let n = 1 + i % 3;
        for k in 0..=2 * n {
            let r = coefficient_slice_check(&quad, k).unwrap();
            assert!(r.identity.holds(), "{}", r.identity);
            assert_eq!(r.slices.len(), 1 << (2 * n));
        }
        // beyond the top degree everything is vacuous and zero
        let r = coefficient_slice_check(&quad, 2 * n + 1).unwrap();
        assert_eq!(r.live_slices().count(), 0);
        assert!(r.lhs.is_zero() && r.rhs.is_zero());
    }
}

#[test]
fn slices_hold_under_the_hypothesis() {
    for quad in quads(17, 150, 3) {
        let n = BooleanView::of(quad.carrier()).unwrap().n();
        for k in 0..=2 * n {
            let r = coefficient_slice_check(&quad, k).unwrap();
            assert!(r.verdict.holds());
            assert!(r.live_slices().all(|s| s.check.as_ref().unwrap().verdict.holds()));
        }
    }
}

#[test]
fn extension_preserves_selected_weights() {
    let l = Arc::new(divisor(12).unwrap());
    let emb = birkhoff_embed(&l).unwrap();
    let w = WeightFunction::from_ints(l.clone(), &[1, 2, 3, 4, 5, 6]).unwrap();
    let sel = FamilySelection::new(&l, [0, 2, 5]).unwrap();
    let ext = extend_via_embedding(&emb, &w, &sel).unwrap();
    assert_eq!(ext.carrier().len(), 8);
    let nonzero: Vec<Rational> = ext.values().iter().filter(|v| !v.is_zero()).cloned().collect();
    assert_eq!(nonzero.len(), 3);
    let total: Rational = ext.values().iter().sum();
    assert_eq!(total, w.total(&sel));
}

#[test]
fn replay_agrees_on_lattices() {
    let mut rng = SeededRng::new(41);
    let carriers = [
        Arc::new(divisor(12).unwrap()),
        Arc::new(chain(4).unwrap()),
        Arc::new(product(&chain(2).unwrap(), &chain(3).unwrap())),
        boolean_carrier(2).unwrap(),
    ];
    for i in 0..60 {
        let l = &carriers[i % carriers.len()];
        let quad = random_ad_quadruple(l, &mut rng, Family::ALL[i % 3]).unwrap();
        let x = random_selection(l, &mut rng);
        let y = random_selection(l, &mut rng);
        let r = replay_proof(&quad, &x, &y).unwrap();
        assert!(r.agrees(), "instance {i}: mismatch at {:?}", r.mismatch);
        assert!(r.embedded_hypothesis.holds());
        assert_eq!(r.direct, check_q4ft(&quad, &x, &y).unwrap());
        for s in &r.slices {
            assert_eq!(s.lhs, r.direct.lhs.coeff(s.k));
            assert_eq!(s.rhs, r.direct.rhs.coeff(s.k));
        }
    }
}
