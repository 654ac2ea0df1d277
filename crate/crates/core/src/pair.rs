//! Magmatic ordered pairs and left-nested tuples.
//!
//! `⟨⟨x,y⟩⟩ = pr(pr²(x) ∪ pr²(a₀)) ∪ pr(pr²(y) ∪ pr²(a₁))` for two fixed
//! incomparable atoms `a₀, a₁`. In canonical form the pair is a magma-ideal
//! with two generators `B₀ = (mi pr(x) pr(a₀))` and `B₁ = (mi pr(y) pr(a₁))`,
//! which makes recognition and extraction a shape check.

use std::fmt;

use crate::domain::{self, Atom, DomainKind};
use crate::error::{MagmaError, Result};
use crate::kernel::{self, equal, pr, subset, union, Magma};

/// The two seed atoms fixed for a session.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Seeds {
    a0: Atom,
    a1: Atom,
    pr_a0: Magma,
    pr_a1: Magma,
}

impl Seeds {
    pub fn new(a0: Atom, a1: Atom) -> Result<Seeds> {
        let a0 = domain::canonical_rep(&a0);
        let a1 = domain::canonical_rep(&a1);
        if domain::compare(&a0, &a1)?.is_some() {
            return Err(MagmaError::ComparableSeeds(a0.to_string(), a1.to_string()));
        }
        Ok(Seeds { a0, a1, pr_a0: kernel::pr_atom(&a0), pr_a1: kernel::pr_atom(&a1) })
    }

    /// The default seeds of a domain; fails for domains without incomparable
    /// atoms.
    pub fn for_domain(kind: DomainKind) -> Result<Seeds> {
        let (a0, a1) = kind.domain().seeds().ok_or(MagmaError::SeedsUnavailable(kind))?;
        Seeds::new(a0, a1)
    }

    pub fn a0(&self) -> Atom {
        self.a0
    }

    pub fn a1(&self) -> Atom {
        self.a1
    }

    pub fn domain(&self) -> DomainKind {
        self.a0.kind()
    }

    fn check_domain(&self, x: &Magma) -> Result<()> {
        if x.domain() == self.domain() {
            Ok(())
        } else {
            Err(MagmaError::DomainMismatch(self.domain(), x.domain()))
        }
    }

    /// `pr(pr²(x) ∪ pr²(seed))`, one half of a pair.
    fn half(&self, x: &Magma, seed: &Atom) -> Magma {
        let tagged =
            union(&kernel::pr_iter(2, x), &kernel::pr_iter_atom(2, seed)).expect("both sides are magma-ideals");
        pr(&tagged)
    }

    /// `pr²(z) ∪ pr²(a₀)` lifted by `pr`: a first-half collateral that is not
    /// a pair.
    pub fn first_half(&self, x: &Magma) -> Result<Magma> {
        self.check_domain(x)?;
        Ok(self.half(x, &self.a0))
    }

    pub fn second_half(&self, y: &Magma) -> Result<Magma> {
        self.check_domain(y)?;
        Ok(self.half(y, &self.a1))
    }

    pub fn pair(&self, x: &Magma, y: &Magma) -> Result<PairView> {
        self.check_domain(x)?;
        self.check_domain(y)?;
        let whole = union(&self.half(x, &self.a0), &self.half(y, &self.a1)).expect("magma-ideals");
        Ok(PairView { first: x.clone(), second: y.clone(), whole, seeds: (self.a0, self.a1) })
    }

    /// Shape-based recognition of canonical pairs.
    pub fn is_pair(&self, m: &Magma) -> bool {
        self.split(m).is_some()
    }

    fn split(&self, m: &Magma) -> Option<(Magma, Magma)> {
        let halves = m.magmas()?;
        if halves.len() != 2 {
            return None;
        }
        let mut first = None;
        let mut second = None;
        for half in halves {
            let gens = half.magmas()?;
            if gens.len() != 2 {
                return None;
            }
            let (tag, body) = if gens[0].atoms().is_some() { (&gens[0], &gens[1]) } else { (&gens[1], &gens[0]) };
            let inner = body.principal()?.clone();
            if *tag == self.pr_a0 {
                if first.replace(inner).is_some() {
                    return None;
                }
            } else if *tag == self.pr_a1 {
                if second.replace(inner).is_some() {
                    return None;
                }
            } else {
                return None;
            }
        }
        Some((first?, second?))
    }

    pub fn extract_pair(&self, m: &Magma) -> Result<(Magma, Magma)> {
        self.split(m).ok_or_else(|| MagmaError::NotAPair(m.to_string()))
    }

    /// `⟨⟨x₁,…,xₙ⟩⟩`, folded to the left.
    pub fn tuple(&self, xs: &[Magma]) -> Result<Magma> {
        if xs.len() < 2 {
            return Err(MagmaError::ArityTooSmall(xs.len()));
        }
        let mut acc = self.pair(&xs[0], &xs[1])?.whole;
        for x in &xs[2..] {
            acc = self.pair(&acc, x)?.whole;
        }
        Ok(acc)
    }

    pub fn extract_tuple(&self, m: &Magma, n: usize) -> Result<Vec<Magma>> {
        if n < 2 {
            return Err(MagmaError::ArityTooSmall(n));
        }
        let mut out = Vec::with_capacity(n);
        let mut cur = m.clone();
        for _ in 0..n - 2 {
            let (head, last) = self.extract_pair(&cur)?;
            out.push(last);
            cur = head;
        }
        let (x, y) = self.extract_pair(&cur)?;
        out.push(y);
        out.push(x);
        out.reverse();
        Ok(out)
    }
}

/// A pair together with its constituents.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairView {
    pub first: Magma,
    pub second: Magma,
    pub whole: Magma,
    seeds: (Atom, Atom),
}

impl PairView {
    pub fn seeds(&self) -> (Atom, Atom) {
        self.seeds
    }

    /// Pair equality; pairs built over different seeds are not comparable.
    pub fn same_pair(&self, other: &PairView) -> Result<bool> {
        if self.seeds != other.seeds {
            return Err(MagmaError::SeedMismatch);
        }
        Ok(equal(&self.whole, &other.whole))
    }

    pub fn sub_pair_of(&self, other: &PairView) -> Result<bool> {
        if self.seeds != other.seeds {
            return Err(MagmaError::SeedMismatch);
        }
        Ok(subset(&self.whole, &other.whole))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Slot {
    First,
    Second,
}

impl Slot {
    fn pick<'a>(self, pair: (&'a Magma, &'a Magma)) -> &'a Magma {
        match self {
            Slot::First => pair.0,
            Slot::Second => pair.1,
        }
    }

    fn other(self) -> Slot {
        match self {
            Slot::First => Slot::Second,
            Slot::Second => Slot::First,
        }
    }
}

/// Which way `pr(x) ∪ pr(y) = pr(x') ∪ pr(y')` holds.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum UnionEqualityCase {
    /// `x = x'` and `y = y'`.
    Same,
    /// `x = y'` and `y = x'`.
    Crossed,
    /// One element of `{x, y}` equals one of `{x', y'}` and the remaining two
    /// are submagmas of it.
    Absorbed {
        left: Slot,
        right: Slot,
    },
    Unequal,
}

impl UnionEqualityCase {
    pub fn tag(&self) -> &'static str {
        match self {
            UnionEqualityCase::Same => "I",
            UnionEqualityCase::Crossed => "II",
            UnionEqualityCase::Absorbed { .. } => "III",
            UnionEqualityCase::Unequal => "unequal",
        }
    }

    /// Re-derive the case's claims through kernel `subset`/`equal` calls.
    pub fn verify(&self, x: &Magma, y: &Magma, x2: &Magma, y2: &Magma) -> bool {
        match *self {
            UnionEqualityCase::Same => equal(x, x2) && equal(y, y2),
            UnionEqualityCase::Crossed => equal(x, y2) && equal(y, x2),
            UnionEqualityCase::Absorbed { left, right } => {
                let top = left.pick((x, y));
                equal(top, right.pick((x2, y2)))
                    && subset(left.other().pick((x, y)), top)
                    && subset(right.other().pick((x2, y2)), top)
            }
            UnionEqualityCase::Unequal => {
                let l = union(&pr(x), &pr(y)).expect("magma-ideals");
                let r = union(&pr(x2), &pr(y2)).expect("magma-ideals");
                !equal(&l, &r)
            }
        }
    }
}

impl fmt::Display for UnionEqualityCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = |s: Slot, primed: bool| match (s, primed) {
            (Slot::First, false) => "x",
            (Slot::Second, false) => "y",
            (Slot::First, true) => "x'",
            (Slot::Second, true) => "y'",
        };
        match self {
            UnionEqualityCase::Absorbed { left, right } => write!(
                f,
                "(case III (= {} {}) (sub {} {}))",
                name(*left, false),
                name(*right, true),
                name(left.other(), false),
                name(right.other(), true)
            ),
            other => write!(f, "(case {})", other.tag()),
        }
    }
}

/// Classify `pr(x) ∪ pr(y) = pr(x') ∪ pr(y')` by the sixteen combinations of
/// the two inclusion case splits.
pub fn union2_equality_case(x: &Magma, y: &Magma, x2: &Magma, y2: &Magma) -> UnionEqualityCase {
    use Slot::{First, Second};
    let s = subset;
    // forward: pr(x) ∪ pr(y) ⊆ pr(x') ∪ pr(y')
    let a = s(x, x2) && s(y, x2);
    let b = s(x, y2) && s(y, y2);
    let c = s(x, x2) && s(y, y2);
    let d = s(x, y2) && s(y, x2);
    // backward
    let a2 = s(x2, x) && s(y2, x);
    let b2 = s(x2, y) && s(y2, y);
    let c2 = s(x2, x) && s(y2, y);
    let d2 = s(x2, y) && s(y2, x);

    if !(a || b || c || d) || !(a2 || b2 || c2 || d2) {
        return UnionEqualityCase::Unequal;
    }
    if c && c2 {
        return UnionEqualityCase::Same;
    }
    if d && d2 {
        return UnionEqualityCase::Crossed;
    }
    // (c)&(d') and (d)&(c') force all four equal.
    if (c && d2) || (d && c2) {
        return UnionEqualityCase::Same;
    }
    let absorbed = |left, right| UnionEqualityCase::Absorbed { left, right };
    let combos = [
        (a && a2, absorbed(First, First)),
        (a && b2, absorbed(Second, First)),
        (a && c2, absorbed(First, First)),
        (a && d2, absorbed(Second, First)),
        (b && a2, absorbed(First, Second)),
        (b && b2, absorbed(Second, Second)),
        (b && c2, absorbed(Second, Second)),
        (b && d2, absorbed(First, Second)),
        (c && a2, absorbed(First, First)),
        (c && b2, absorbed(Second, Second)),
        (d && a2, absorbed(First, Second)),
        (d && b2, absorbed(Second, First)),
    ];
    combos
        .into_iter()
        .find(|(holds, _)| *holds)
        .map(|(_, case)| case)
        .expect("some combination holds when both inclusions do")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::{pr_atom, Kind};

    fn t(tag: i64, v: i64) -> Atom {
        Atom::tag(tag, v)
    }

    fn seeds() -> Seeds {
        Seeds::for_domain(DomainKind::TaggedInt).unwrap()
    }

    #[test]
    fn absorbed_into_second_and_first() {
        // x ⊆ y = x' ⊇ y'
        let m = |v| Magma::atom_ideal([t(0, v)]).unwrap();
        let (x, y, x2, y2) = (m(0), m(3), m(3), m(1));
        let case = union2_equality_case(&x, &y, &x2, &y2);
        assert_eq!(case, UnionEqualityCase::Absorbed { left: Slot::Second, right: Slot::First });
        assert!(case.verify(&x, &y, &x2, &y2));
    }

    #[test]
    fn pair_has_two_distinct_halves() {
        let s = seeds();
        let x = pr_atom(&t(2, 1));
        let p = s.pair(&x, &x).unwrap();
        let halves = p.whole.magmas().unwrap();
        assert_eq!(halves.len(), 2);
        assert!(!equal(&halves[0], &halves[1]));
        assert_eq!(p.whole.kind(), Kind::MagmaIdeal);
    }

    #[test]
    fn pair_shape_and_extraction() {
        let s = seeds();
        let x = pr_atom(&t(2, 1));
        let y = pr(&pr_atom(&t(0, -3)));
        let p = s.pair(&x, &y).unwrap();
        assert!(s.is_pair(&p.whole));
        assert_eq!(s.extract_pair(&p.whole).unwrap(), (x.clone(), y.clone()));
        assert!(!s.is_pair(&pr(&x)));
        assert!(!s.is_pair(&s.first_half(&x).unwrap()));
        assert!(matches!(s.extract_pair(&kernel::pr_iter_atom(5, &t(0, 0))), Err(MagmaError::NotAPair(_))));
    }

    #[test]
    fn qdup_has_no_pairs() {
        assert_eq!(Seeds::for_domain(DomainKind::QDup), Err(MagmaError::SeedsUnavailable(DomainKind::QDup)));
        assert!(matches!(Seeds::new(t(0, 0), t(0, 1)), Err(MagmaError::ComparableSeeds(..))));
    }

    #[test]
    fn pairs_over_different_seeds_refuse_comparison() {
        let s1 = seeds();
        let s2 = Seeds::new(t(0, 0), t(2, 0)).unwrap();
        let x = pr_atom(&t(3, 0));
        let p1 = s1.pair(&x, &x).unwrap();
        let p2 = s2.pair(&x, &x).unwrap();
        assert_eq!(p1.same_pair(&p2), Err(MagmaError::SeedMismatch));
        assert_eq!(p1.same_pair(&p1), Ok(true));
    }

    #[test]
    fn tuples_round_trip() {
        let s = seeds();
        let xs: Vec<Magma> = (0..4).map(|i| pr_atom(&t(2, i))).collect();
        assert_eq!(s.tuple(&xs[..2]).unwrap(), s.pair(&xs[0], &xs[1]).unwrap().whole);
        for n in 2..=4 {
            let m = s.tuple(&xs[..n]).unwrap();
            assert_eq!(s.extract_tuple(&m, n).unwrap(), xs[..n].to_vec());
        }
        assert_eq!(s.tuple(&xs[..1]), Err(MagmaError::ArityTooSmall(1)));
    }

    #[test]
    fn union_case_examples() {
        let x = pr_atom(&t(0, 5));
        let y = pr_atom(&t(1, 5));
        assert_eq!(union2_equality_case(&x, &y, &x, &y), UnionEqualityCase::Same);
        assert_eq!(union2_equality_case(&x, &y, &y, &x), UnionEqualityCase::Crossed);
        let y_small = pr_atom(&t(0, 1));
        let y_small2 = pr_atom(&t(0, 2));
        let case = union2_equality_case(&x, &y_small, &x, &y_small2);
        assert_eq!(case, UnionEqualityCase::Absorbed { left: Slot::First, right: Slot::First });
        assert!(case.verify(&x, &y_small, &x, &y_small2));
        assert_eq!(case.to_string(), "(case III (= x x') (sub y y'))");
        assert_eq!(union2_equality_case(&x, &y, &x, &x), UnionEqualityCase::Unequal);
    }
}
