mod common;

use common::{ai, magmas_in, pair_domain, tag};
use magma_core::kernel::{equal, member_magma, pr, pr_atom, subset, union};
use magma_core::pair::union2_equality_case;
use magma_core::{DomainKind, Magma, MagmaError, Seeds, UnionEqualityCase};
use proptest::prelude::*;

/// The pair built literally from its definition with kernel operations.
fn pair_by_definition(s: &Seeds, x: &Magma, y: &Magma) -> Magma {
    let pr2 = |m: &Magma| pr(&pr(m));
    let half = |m: &Magma, seed| pr(&union(&pr2(m), &pr(&pr_atom(seed))).unwrap());
    union(&half(x, &s.a0()), &half(y, &s.a1())).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(512))]

    #[test]
    fn construction_matches_definition((d, v) in magmas_in(pair_domain(), 2, 3)) {
        let s = Seeds::for_domain(d).unwrap();
        let p = s.pair(&v[0], &v[1]).unwrap();
        prop_assert_eq!(&p.whole, &pair_by_definition(&s, &v[0], &v[1]));
        prop_assert!(s.is_pair(&p.whole));
        prop_assert_eq!(s.extract_pair(&p.whole).unwrap(), (v[0].clone(), v[1].clone()));
    }

    #[test]
    fn pairs_are_equal_iff_components_are((d, v) in magmas_in(pair_domain(), 4, 2)) {
        let s = Seeds::for_domain(d).unwrap();
        let p = s.pair(&v[0], &v[1]).unwrap();
        let q = s.pair(&v[2], &v[3]).unwrap();
        let parts = equal(&v[0], &v[2]) && equal(&v[1], &v[3]);
        prop_assert_eq!(p.same_pair(&q).unwrap(), parts);
        // The diagonal case must also hold when the generator happens to repeat.
        prop_assert!(p.same_pair(&s.pair(&v[0], &v[1]).unwrap()).unwrap());
    }

    #[test]
    fn sub_pairs_are_componentwise((d, v) in magmas_in(pair_domain(), 4, 2)) {
        let s = Seeds::for_domain(d).unwrap();
        let p = s.pair(&v[0], &v[1]).unwrap();
        let q = s.pair(&v[2], &v[3]).unwrap();
        let parts = subset(&v[2], &v[0]) && subset(&v[3], &v[1]);
        prop_assert_eq!(q.sub_pair_of(&p).unwrap(), parts);
        prop_assert_eq!(member_magma(&q.whole, &pr(&p.whole)), parts);
    }

    #[test]
    fn union_cases_agree_with_union_equality((_, v) in magmas_in(common::domain(), 4, 2)) {
        let (x, y, x2, y2) = (&v[0], &v[1], &v[2], &v[3]);
        let case = union2_equality_case(x, y, x2, y2);
        let l = union(&pr(x), &pr(y)).unwrap();
        let r = union(&pr(x2), &pr(y2)).unwrap();
        prop_assert_eq!(case != UnionEqualityCase::Unequal, equal(&l, &r));
        prop_assert!(case.verify(x, y, x2, y2));
    }

    #[test]
    fn tuples_round_trip((d, v) in magmas_in(pair_domain(), 4, 2)) {
        let s = Seeds::for_domain(d).unwrap();
        for n in 2..=4 {
            let t = s.tuple(&v[..n]).unwrap();
            prop_assert_eq!(s.extract_tuple(&t, n).unwrap(), v[..n].to_vec());
        }
    }
}

#[test]
fn pair_shape_is_two_tagged_halves() {
    let s = Seeds::for_domain(DomainKind::TaggedInt).unwrap();
    let p = s.pair(&ai(&[tag(2, 1)]), &ai(&[tag(3, 1)])).unwrap();
    assert_eq!(
        p.whole.to_string(),
        "(mi (mi (ai (at tag 0 0)) (mi (ai (at tag 2 1)))) (mi (ai (at tag 1 0)) (mi (ai (at tag 3 1)))))"
    );
}

#[test]
fn union_case_examples() {
    let t = |v| ai(&[tag(0, v)]);
    let u = ai(&[tag(1, 0)]);
    assert_eq!(union2_equality_case(&t(5), &u, &t(5), &u), UnionEqualityCase::Same);
    assert_eq!(union2_equality_case(&t(5), &u, &u, &t(5)), UnionEqualityCase::Crossed);
    let case = union2_equality_case(&t(5), &t(1), &t(5), &t(2));
    assert_eq!(case.to_string(), "(case III (= x x') (sub y y'))");
    assert_eq!(union2_equality_case(&t(5), &u, &t(4), &u), UnionEqualityCase::Unequal);
}

#[test]
fn seeds_must_be_incomparable() {
    assert!(matches!(Seeds::new(tag(0, 0), tag(0, 3)), Err(MagmaError::ComparableSeeds(..))));
    assert_eq!(Seeds::for_domain(DomainKind::QDup), Err(MagmaError::SeedsUnavailable(DomainKind::QDup)));
}

#[test]
fn halves_and_arbitrary_magmas_are_not_pairs() {
    let s = Seeds::for_domain(DomainKind::TaggedInt).unwrap();
    let x = ai(&[tag(2, 1)]);
    let half = s.first_half(&x).unwrap();
    assert!(!s.is_pair(&half));
    assert!(!s.is_pair(&pr(&x)));
    assert!(matches!(s.extract_pair(&x), Err(MagmaError::NotAPair(_))));
    assert_eq!(s.tuple(&[x]), Err(MagmaError::ArityTooSmall(1)));
}

#[test]
fn pairs_over_different_seeds_do_not_compare() {
    let s = Seeds::for_domain(DomainKind::TaggedInt).unwrap();
    let s2 = Seeds::new(tag(5, 0), tag(6, 0)).unwrap();
    let x = ai(&[tag(2, 1)]);
    let p = s.pair(&x, &x).unwrap();
    let q = s2.pair(&x, &x).unwrap();
    assert_eq!(p.same_pair(&q), Err(MagmaError::SeedMismatch));
}
