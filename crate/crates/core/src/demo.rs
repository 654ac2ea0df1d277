//! Named constructions that print a witness with every claim re-checked.

use crate::domain::{Atom, DomainKind};
use crate::error::{MagmaError, Result};
use crate::kernel::{equal, intersect, pr, subset, Element, Magma};
use crate::pair::Seeds;
use crate::relation::Relation;
use crate::separation::{self, Fact, Witness};

pub struct DemoSpec {
    pub name: &'static str,
    /// Names of the optional magma arguments.
    pub params: &'static [&'static str],
    pub summary: &'static str,
}

pub const DEMOS: &[DemoSpec] = &[
    DemoSpec { name: "antisymmetry", params: &[], summary: "collateral pairs of an order relation point both ways" },
    DemoSpec {
        name: "completion-not-functional",
        params: &[],
        summary: "the down-closure of a function graph relates one input to two images",
    },
    DemoSpec {
        name: "example-function",
        params: &[],
        summary: "overlapping domains with nested images still give a function",
    },
    DemoSpec {
        name: "function-clash",
        params: &[],
        summary: "overlapping domains with incomparable images give no function",
    },
    DemoSpec {
        name: "pair-collaterals",
        params: &["x", "y"],
        summary: "a pair contains smaller pairs and non-pair halves",
    },
    DemoSpec {
        name: "replacement-const",
        params: &["u", "y0"],
        summary: "the image of a constant map misses submagmas of its value",
    },
    DemoSpec { name: "replacement-pr", params: &["u"], summary: "the image of pr over a magma is not down-closed" },
];

pub fn find(name: &str) -> Option<&'static DemoSpec> {
    DEMOS.iter().find(|d| d.name == name)
}

fn tag(t: i64, v: i64) -> Atom {
    Atom::tag(t, v)
}

fn ai(atoms: &[Atom]) -> Magma {
    Magma::atom_ideal(atoms.iter().copied()).expect("nonempty")
}

/// Default arguments when none are given. Fixed so the printed output is
/// stable.
fn defaults(name: &str, domain: DomainKind) -> Vec<Magma> {
    let base = match domain {
        DomainKind::TaggedInt => vec![ai(&[tag(2, 3), tag(3, 1)]), ai(&[tag(2, 5)])],
        DomainKind::Plane => vec![ai(&[Atom::plane(2, 1), Atom::plane(1, 2)]), ai(&[Atom::plane(3, 3)])],
        DomainKind::QDup => vec![ai(&[Atom::qdup(1, 2, 0)]), ai(&[Atom::qdup(3, 1, 1)])],
    };
    match name {
        "replacement-pr" => vec![pr(&base[0])],
        "replacement-const" | "pair-collaterals" => base,
        _ => vec![],
    }
}

fn need_seeds(seeds: Option<&Seeds>, domain: DomainKind) -> Result<&Seeds> {
    seeds.ok_or(MagmaError::SeedsUnavailable(domain))
}

/// Run demo `name` with `args`, or with fixed defaults when `args` is empty.
/// `None` for an unknown name.
pub fn run(
    name: &str,
    domain: DomainKind,
    seeds: Option<&Seeds>,
    args: &[Magma],
) -> Option<Result<(Vec<Magma>, Witness)>> {
    let spec = find(name)?;
    let args = if args.is_empty() { defaults(name, domain) } else { args.to_vec() };
    if args.len() != spec.params.len() {
        return Some(Err(MagmaError::OutOfRange(format!(
            "demo {name} takes {} magma arguments, got {}",
            spec.params.len(),
            args.len()
        ))));
    }
    let witness = match name {
        "replacement-pr" => separation::replacement_pr_witness(&args[0]),
        "replacement-const" => Ok(separation::replacement_const_witness(&args[0], &args[1])),
        "completion-not-functional" => need_seeds(seeds, domain).map(separation::completion_not_functional_demo),
        "pair-collaterals" => need_seeds(seeds, domain).and_then(|s| pair_collaterals(s, &args[0], &args[1])),
        "function-clash" => need_seeds(seeds, domain).and_then(function_clash),
        "example-function" => need_seeds(seeds, domain).and_then(example_function),
        "antisymmetry" => need_seeds(seeds, domain).and_then(antisymmetry),
        _ => unreachable!("catalog entry without a constructor"),
    };
    Some(witness.map(|w| (args, w)))
}

fn pair_collaterals(s: &Seeds, x: &Magma, y: &Magma) -> Result<Witness> {
    let p = s.pair(x, y)?.whole;
    let x1 = separation::strict_below(x);
    let q = s.pair(&x1, y)?.whole;
    let half = s.first_half(x)?.principal().expect("halves are principal").clone();
    let member = |m: &Magma| crate::kernel::member_magma(m, &p);
    let facts = vec![
        Fact::new("<<x',y>> is an element of pr(<<x,y>>)", crate::kernel::member_magma(&q, &pr(&p))),
        Fact::new("<<x',y>> is a pair", s.is_pair(&q)),
        Fact::new("<<x',y>> differs from <<x,y>>", !equal(&q, &p)),
        Fact::new("h is an element of <<x,y>>", member(&half)),
        Fact::new("h is not a pair", !s.is_pair(&half)),
    ];
    Ok(Witness {
        name: "pair-collaterals",
        bindings: vec![
            ("x", Element::Magma(x.clone())),
            ("y", Element::Magma(y.clone())),
            ("x'", Element::Magma(x1)),
            ("h", Element::Magma(half)),
        ],
        facts,
    })
}

/// Two seed-domain magmas sharing part of their atoms, and two incomparable
/// images, chosen per domain.
fn clash_fixture(s: &Seeds) -> (Magma, Magma, Magma, Magma) {
    match s.domain() {
        DomainKind::Plane => {
            let p = |x, y| Atom::plane(x, y);
            (ai(&[p(4, 1)]), ai(&[p(1, 4)]), ai(&[p(2, 0)]), ai(&[p(0, 2)]))
        }
        _ => (ai(&[tag(2, 3), tag(3, 0)]), ai(&[tag(2, 1), tag(4, 0)]), ai(&[tag(5, 1)]), ai(&[tag(6, 1)])),
    }
}

fn function_clash(s: &Seeds) -> Result<Witness> {
    let (z1, z2, w1, w2) = clash_fixture(s);
    let r = Relation::new(s, vec![(z1.clone(), w1.clone()), (z2.clone(), w2.clone())])?;
    let meet = intersect(&z1, &z2).expect("fixture overlaps");
    let slice = r.slice(&meet).expect("meet is in the domain");
    let facts = vec![
        Fact::new("w1 and w2 are incomparable", !subset(&w1, &w2) && !subset(&w2, &w1)),
        Fact::new("the slice at z1 ∩ z2 has two maximal images", slice.generator_count() == 2),
        Fact::new("R is not a function", r.is_function() == Ok(false)),
    ];
    Ok(Witness {
        name: "function-clash",
        bindings: vec![
            ("z1", Element::Magma(z1)),
            ("z2", Element::Magma(z2)),
            ("w1", Element::Magma(w1)),
            ("w2", Element::Magma(w2)),
            ("meet", Element::Magma(meet)),
            ("slice", Element::Magma(slice)),
        ],
        facts,
    })
}

fn example_function(s: &Seeds) -> Result<Witness> {
    let (z1, z2, w2, _) = clash_fixture(s);
    let w1 = separation::strict_below(&w2);
    let r = Relation::new(s, vec![(z1.clone(), w1.clone()), (z2.clone(), w2.clone())])?;
    let meet = intersect(&z1, &z2).expect("fixture overlaps");
    let facts = vec![
        Fact::new("z1 and z2 are incomparable", !subset(&z1, &z2) && !subset(&z2, &z1)),
        Fact::new("w1 is strictly inside w2", subset(&w1, &w2) && !equal(&w1, &w2)),
        Fact::new("R is a function", r.is_function() == Ok(true)),
        Fact::new("R(z1 ∩ z2) = w2", r.apply(&meet).as_ref() == Ok(&w2)),
        Fact::new("R(z1) = w1", r.apply(&z1).as_ref() == Ok(&w1)),
    ];
    Ok(Witness {
        name: "example-function",
        bindings: vec![
            ("z1", Element::Magma(z1)),
            ("z2", Element::Magma(z2)),
            ("w1", Element::Magma(w1)),
            ("w2", Element::Magma(w2)),
            ("meet", Element::Magma(meet)),
        ],
        facts,
    })
}

/// One intended pair `z < w` forces `u < v` and `v < u` for distinct
/// `u, v` below both.
fn antisymmetry(s: &Seeds) -> Result<Witness> {
    let (z, w, u, v) = match s.domain() {
        DomainKind::Plane => {
            let p = |x, y| Atom::plane(x, y);
            (ai(&[p(5, 5)]), ai(&[p(7, 7)]), ai(&[p(1, 2)]), ai(&[p(2, 1)]))
        }
        _ => (ai(&[tag(2, 5)]), ai(&[tag(2, 7)]), ai(&[tag(2, 1)]), ai(&[tag(2, 2)])),
    };
    let r = Relation::new(s, vec![(z.clone(), w.clone())])?;
    let uv = s.pair(&u, &v)?.whole;
    let vu = s.pair(&v, &u)?.whole;
    let has = |p: &Magma| crate::kernel::member_magma(p, r.whole());
    let facts = vec![
        Fact::new("z is strictly inside w", subset(&z, &w) && !equal(&z, &w)),
        Fact::new("<<u,v>> is in R", has(&uv)),
        Fact::new("<<v,u>> is in R", has(&vu)),
        Fact::new("u differs from v", !equal(&u, &v)),
    ];
    Ok(Witness {
        name: "antisymmetry",
        bindings: vec![
            ("z", Element::Magma(z)),
            ("w", Element::Magma(w)),
            ("u", Element::Magma(u)),
            ("v", Element::Magma(v)),
        ],
        facts,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_demo_verifies_on_seeded_domains() {
        for d in [DomainKind::TaggedInt, DomainKind::Plane] {
            let s = Seeds::for_domain(d).unwrap();
            for spec in DEMOS {
                let (_, w) = run(spec.name, d, Some(&s), &[]).unwrap().unwrap();
                assert!(w.verified(), "{d} {w}");
            }
        }
    }

    #[test]
    fn seedless_domain() {
        let d = DomainKind::QDup;
        assert!(run("replacement-const", d, None, &[]).unwrap().unwrap().1.verified());
        assert_eq!(run("antisymmetry", d, None, &[]).unwrap().unwrap_err(), MagmaError::SeedsUnavailable(d));
        assert!(run("nope", d, None, &[]).is_none());
    }
}
