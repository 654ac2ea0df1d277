mod common;

use common::{ai, magma, magmas_in, pair_domain, tag};
use magma_core::gen::MagmaGen;
use magma_core::kernel::{intersect, member_magma, pr, subset};
use magma_core::relation::{product, weak_member, DEFAULT_FUNCTION_CAP};
use magma_core::{Classification, DomainKind, Magma, MagmaError, Relation, Seeds, WeakProduct};
use proptest::prelude::*;

fn relation_parts() -> impl Strategy<Value = (DomainKind, Vec<(Magma, Magma)>)> {
    pair_domain().prop_flat_map(|d| {
        let pair = (magma(d, 2), magma(d, 2));
        (Just(d), prop::collection::vec(pair, 1..=4))
    })
}

/// Submagmas of single `zᵢ` and of pairwise meets.
fn domain_samples(r: &Relation, seed: u64, n: usize) -> Vec<Magma> {
    let mut g = MagmaGen::new(r.seeds().domain(), seed);
    let zs: Vec<&Magma> = r.intended().iter().map(|(z, _)| z).collect();
    let mut bases: Vec<Magma> = zs.iter().map(|z| (*z).clone()).collect();
    for a in &zs {
        for b in &zs {
            bases.extend(intersect(a, b));
        }
    }
    (0..n).map(|i| g.submagma(&bases[i % bases.len()])).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn function_verdict_matches_slices((d, parts) in relation_parts(), seed in any::<u64>()) {
        let s = Seeds::for_domain(d).unwrap();
        let r = Relation::new(&s, parts).unwrap();
        let is_fun = r.is_function().unwrap();
        if is_fun {
            for z in domain_samples(&r, seed, 60) {
                let slice = r.slice(&z).expect("samples lie in the domain");
                prop_assert_eq!(slice.generator_count(), 1);
                prop_assert_eq!(&r.apply(&z).unwrap(), slice.principal().unwrap());
            }
        } else {
            let cex = r.function_counterexample(DEFAULT_FUNCTION_CAP).unwrap().unwrap();
            let non_principal = r.slice(&cex).is_some_and(|sl| sl.generator_count() > 1);
            prop_assert!(!r.is_semifunction() || non_principal);
        }
    }

    #[test]
    fn slices_and_membership_agree((d, parts) in relation_parts(), seed in any::<u64>()) {
        let s = Seeds::for_domain(d).unwrap();
        let r = Relation::new(&s, parts).unwrap();
        let mut g = MagmaGen::new(d, seed);
        for z in domain_samples(&r, seed, 10) {
            let w = if seed % 2 == 0 { g.magma(2, 2) } else { g.submagma(&r.intended()[0].1) };
            let p = s.pair(&z, &w).unwrap().whole;
            let via_slice = r.slice(&z).is_some_and(|sl| member_magma(&w, &sl));
            prop_assert_eq!(member_magma(&p, r.whole()), via_slice);
            prop_assert!(member_magma(&z, &r.dom()));
        }
    }

    #[test]
    fn product_pairs_are_weak_product_pairs((d, v) in magmas_in(pair_domain(), 4, 3)) {
        let s = Seeds::for_domain(d).unwrap();
        let (x, y) = (pr(&v[0]), pr(&v[1]));
        let prod = product(&s, &x, &y).unwrap();
        let wp = WeakProduct::new(&x, &y).unwrap();
        for (z, w) in [(&v[0], &v[1]), (&v[2], &v[3]), (&v[0], &v[3])] {
            let p = s.pair(z, w).unwrap().whole;
            prop_assert_eq!(member_magma(&p, prod.whole()), weak_member(&s, &p, &wp));
            prop_assert_eq!(weak_member(&s, &p, &wp), subset(z, &v[0]) && subset(w, &v[1]));
        }
        prop_assert_eq!(prod.whole(), &pr(&s.pair(&v[0], &v[1]).unwrap().whole));
    }
}

fn seeds() -> Seeds {
    Seeds::for_domain(DomainKind::TaggedInt).unwrap()
}

#[test]
fn single_pair_is_a_function() {
    let (z, w) = (ai(&[tag(2, 4)]), ai(&[tag(3, 2)]));
    let r = Relation::new(&seeds(), vec![(z.clone(), w.clone())]).unwrap();
    assert!(r.is_function().unwrap());
    assert_eq!(r.apply(&ai(&[tag(2, 1)])).unwrap(), w);
    assert!(matches!(r.apply(&ai(&[tag(5, 0)])), Err(MagmaError::NotInDomain(_))));
}

#[test]
fn same_input_incomparable_outputs_is_not_a_function() {
    let z = ai(&[tag(2, 4)]);
    let r = Relation::new(&seeds(), vec![(z.clone(), ai(&[tag(3, 0)])), (z.clone(), ai(&[tag(4, 0)]))]).unwrap();
    assert!(!r.is_semifunction());
    assert!(!r.is_function().unwrap());
    assert!(matches!(r.apply(&z), Err(MagmaError::NoGreatestImage(_))));
}

#[test]
fn overlapping_inputs_with_incomparable_outputs_clash() {
    let (z1, z2) = (ai(&[tag(2, 3), tag(3, 0)]), ai(&[tag(2, 1), tag(4, 0)]));
    let r = Relation::new(&seeds(), vec![(z1, ai(&[tag(5, 1)])), (z2, ai(&[tag(6, 1)]))]).unwrap();
    assert!(r.is_semifunction());
    assert!(!r.is_function().unwrap());
    let cex = r.function_counterexample(DEFAULT_FUNCTION_CAP).unwrap().unwrap();
    assert_eq!(cex, ai(&[tag(2, 1)]));
}

#[test]
fn incomparable_inputs_with_nested_outputs_give_a_function() {
    let (z1, z2) = (ai(&[tag(2, 3), tag(3, 0)]), ai(&[tag(2, 1), tag(4, 0)]));
    let (w1, w2) = (ai(&[tag(5, 0)]), ai(&[tag(5, 1)]));
    let r = Relation::new(&seeds(), vec![(z1.clone(), w1.clone()), (z2.clone(), w2.clone())]).unwrap();
    assert!(r.is_function().unwrap());
    assert_eq!(r.apply(&intersect(&z1, &z2).unwrap()).unwrap(), w2);
    assert_eq!(r.apply(&z1).unwrap(), w1);
    assert_eq!(r.apply(&z2).unwrap(), w2);
}

#[test]
fn classification_of_elements() {
    let s = seeds();
    let (z, w) = (ai(&[tag(2, 4)]), ai(&[tag(3, 2)]));
    let r = Relation::new(&s, vec![(z.clone(), w.clone())]).unwrap();
    let smaller = s.pair(&ai(&[tag(2, 1)]), &w).unwrap().whole;
    let half = s.first_half(&z).unwrap();
    assert_eq!(r.classify(&s.pair(&z, &w).unwrap().whole), Classification::Intended);
    assert_eq!(r.classify(&smaller), Classification::CollateralPair);
    assert_eq!(r.classify(&half), Classification::CollateralNonPair);
    assert_eq!(r.classify(&s.pair(&w, &z).unwrap().whole), Classification::NotElement);
}

#[test]
fn presentation_limits() {
    assert_eq!(Relation::new(&seeds(), vec![]), Err(MagmaError::EmptyPresentation));
    let pairs: Vec<_> = (0..13).map(|i| (ai(&[tag(2, i)]), ai(&[tag(3, i)]))).collect();
    let r = Relation::new(&seeds(), pairs).unwrap();
    assert_eq!(r.is_function(), Err(MagmaError::PresentationTooLarge(13, 12)));
    assert!(matches!(WeakProduct::new(&ai(&[tag(2, 0)]), &pr(&ai(&[tag(2, 0)]))), Err(MagmaError::KindError(_))));
}
