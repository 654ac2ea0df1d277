use magma_core::kernel::{intersect, pr, pr_iter_atom, subset, union};
use magma_core::{Atom, MagmaError, Ordinal, Seeds, TailRule, Tower, Variant};
use magma_core::{CountGenFun, DomainKind};

fn tower() -> Tower {
    Tower::new(Seeds::for_domain(DomainKind::TaggedInt).unwrap().a0())
}

#[test]
fn naturals_follow_the_successor_recursion() {
    let t = tower();
    let zero = pr_iter_atom(2, &t.a0());
    assert_eq!(t.nat(0, Variant::Primary).unwrap().value, zero);
    let mut v = zero;
    for n in 1..=8 {
        v = union(&v, &pr(&v)).unwrap();
        assert_eq!(t.nat(n, Variant::Primary).unwrap().value, v, "n = {n}");
    }
}

#[test]
fn order_is_strict_inclusion_exhaustively() {
    let t = tower();
    for m in 0..=8 {
        for n in 0..=8 {
            let (a, b) = (t.nat(m, Variant::Primary).unwrap(), t.nat(n, Variant::Primary).unwrap());
            assert_eq!(t.ord_less(&a, &b).unwrap(), m < n, "{m} < {n}");
            assert_eq!(subset(&a.value, &b.value), m <= n);
        }
    }
}

#[test]
fn alt_naturals_are_pairwise_disjoint() {
    let t = tower();
    for m in 0..=8 {
        for n in 0..=8 {
            let a = t.nat(m, Variant::Alt).unwrap().value;
            let b = t.nat(n, Variant::Alt).unwrap().value;
            assert_eq!(intersect(&a, &b).is_none(), m != n);
        }
        assert_eq!(t.nat(m, Variant::Alt).unwrap().value, pr_iter_atom(m as usize + 2, &t.a0()));
    }
}

#[test]
fn depth_cap_and_variants() {
    let t = tower();
    assert_eq!(t.nat(9, Variant::Primary), Err(MagmaError::DepthCap(9, 8)));
    let wide = Tower::with_cap(t.a0(), 12);
    assert!(wide.nat(12, Variant::Primary).is_ok());
    let (p, a) = (t.nat(1, Variant::Primary).unwrap(), t.nat(2, Variant::Alt).unwrap());
    assert_eq!(t.ord_less(&p, &a), Err(MagmaError::VariantMismatch));
}

#[test]
fn ordinal_sums() {
    let t = tower();
    for a in 0..=4 {
        for b in 0..=4 {
            let s = t.ord_add(Ordinal::finite(a), Ordinal::finite(b)).unwrap();
            assert_eq!(s.sum, Ordinal::finite(a + b));
            assert_eq!(s.concrete, Some(true));
        }
    }
    let s = t.ord_add(Ordinal::new(1, 3), Ordinal::new(2, 1)).unwrap();
    assert_eq!(s.sum, Ordinal::new(3, 1));
    assert_eq!(s.concrete, None);
}

#[test]
fn countably_generated_functions() {
    let s = Seeds::for_domain(DomainKind::TaggedInt).unwrap();
    let t = tower();
    let base = pr(&magma_core::Magma::atom_ideal([Atom::tag(3, 0)]).unwrap());
    let first = magma_core::Magma::atom_ideal([Atom::tag(4, 2)]).unwrap();
    let f = CountGenFun::new(&s, vec![first.clone()], TailRule::PrTower(base.clone())).unwrap();
    assert_eq!(f.image(1).unwrap(), first);
    assert_eq!(f.image(2).unwrap(), pr(&base));
    assert_eq!(f.image(4).unwrap(), pr(&pr(&pr(&base))));
    assert!(matches!(f.image(0), Err(MagmaError::OutOfRange(_))));
    let three = t.nat(3, Variant::Alt).unwrap().value;
    assert_eq!(f.apply(&three).unwrap(), f.image(3).unwrap());
    // 0* is excluded from the domain, as is anything off the tower.
    assert!(matches!(f.apply(&t.nat(0, Variant::Alt).unwrap().value), Err(MagmaError::NotInDomain(_))));
    assert!(matches!(f.apply(&pr(&pr(&base))), Err(MagmaError::NotInDomain(_))));
    let shift = CountGenFun::new(&s, vec![], TailRule::Shift(2)).unwrap();
    assert_eq!(shift.image(3).unwrap(), t.nat(5, Variant::Alt).unwrap().value);
    assert!(f.truncation(8).unwrap().is_function().unwrap());
}
