//! Seeded property suites behind `magma check`.
//!
//! Each suite checks one family of laws and reports, per property, how many
//! cases ran, how many failed, and the first failure as an expression that
//! `magma eval` can replay. Reports depend only on (seed, cases, depth).

use std::fmt;

use rand::Rng;

use crate::domain::{self, Atom, DomainKind};
use crate::error::{MagmaError, Result};
use crate::gen::MagmaGen;
use crate::kernel::{self, equal, intersect, member_magma, pr, proper_subset, subset, union, Element, Kind, Magma};
use crate::oracle::{self, FiniteUniverse};
use crate::pair::{union2_equality_case, Seeds, UnionEqualityCase};
use crate::relation::{product, weak_member, Classification, Relation, WeakProduct};
use crate::separation::{self, ClassDescriptor, Predicate, Verdict};
use crate::tower::{CountGenFun, TailRule, Tower, Variant};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CheckConfig {
    pub seed: u64,
    pub cases: usize,
    pub depth: usize,
}

impl Default for CheckConfig {
    fn default() -> Self {
        CheckConfig { seed: 7, cases: 500, depth: 3 }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PropertyResult {
    pub name: String,
    pub cases: usize,
    pub failures: usize,
    pub counterexample: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteReport {
    pub suite: String,
    pub config: CheckConfig,
    pub properties: Vec<PropertyResult>,
    pub notes: Vec<String>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.properties.iter().all(|p| p.failures == 0)
    }

    pub fn total_cases(&self) -> usize {
        self.properties.iter().map(|p| p.cases).sum()
    }

    fn check<F>(&mut self, name: impl Into<String>, cases: usize, mut f: F)
    where
        F: FnMut(usize) -> std::result::Result<(), String>,
    {
        let mut failures = 0;
        let mut counterexample = None;
        for i in 0..cases {
            if let Err(cex) = f(i) {
                failures += 1;
                counterexample.get_or_insert(cex);
            }
        }
        self.properties.push(PropertyResult { name: name.into(), cases, failures, counterexample });
    }

    fn fact(&mut self, name: impl Into<String>, holds: bool, detail: impl FnOnce() -> String) {
        let detail = if holds { None } else { Some(detail()) };
        self.properties.push(PropertyResult {
            name: name.into(),
            cases: 1,
            failures: usize::from(!holds),
            counterexample: detail,
        });
    }

    fn note(&mut self, line: impl Into<String>) {
        self.notes.push(line.into());
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = self.config;
        writeln!(f, "suite {} seed={} cases={} depth={}", self.suite, c.seed, c.cases, c.depth)?;
        for p in &self.properties {
            let status = if p.failures == 0 { "PASS" } else { "FAIL" };
            writeln!(f, "  {status} {} {}/{}", p.name, p.cases - p.failures, p.cases)?;
            if let Some(cex) = &p.counterexample {
                writeln!(f, "    counterexample: {cex}")?;
            }
        }
        for n in &self.notes {
            writeln!(f, "  ; {n}")?;
        }
        write!(f, "result {} {}", self.suite, if self.passed() { "PASS" } else { "FAIL" })
    }
}

type SuiteFn = fn(&CheckConfig, &mut SuiteReport) -> Result<()>;

/// Every registered suite, in report order.
pub const SUITES: &[(&str, SuiteFn)] = &[
    ("alt-disjoint", alt_disjoint),
    ("completion-not-functional", completion_not_functional),
    ("countgen", countgen),
    ("disjoint-sufficient", disjoint_sufficient),
    ("dom-ran", dom_ran),
    ("example-function", example_function),
    ("functions", functions),
    ("magmatic-lemma", magmatic_lemma),
    ("mss", mss),
    ("no-minimal", no_minimal),
    ("oracle-functions", oracle_functions),
    ("oracle-kernel", oracle_kernel),
    ("oracle-pairs", oracle_pairs),
    ("oracle-props", oracle_props),
    ("ordinal-order", ordinal_order),
    ("pair-in-pair", pair_in_pair),
    ("pair-theorem", pair_theorem),
    ("pr-injective", pr_injective),
    ("product-weak", product_weak),
    ("replacement-const", replacement_const),
    ("replacement-pr", replacement_pr),
    ("tuples", tuples),
    ("two-one", two_one),
    ("union-legality", union_legality),
    ("union-of-bo", union_of_bo),
];

pub fn suite_names() -> impl Iterator<Item = &'static str> {
    SUITES.iter().map(|(n, _)| *n).chain(std::iter::once("all"))
}

/// Run one suite, or every suite for `all`.
pub fn run(name: &str, config: &CheckConfig) -> Result<Vec<SuiteReport>> {
    let selected: Vec<&(&str, SuiteFn)> = if name == "all" {
        SUITES.iter().collect()
    } else {
        let s = SUITES
            .iter()
            .find(|(n, _)| *n == name)
            .ok_or_else(|| MagmaError::OutOfRange(format!("unknown suite {name:?}")))?;
        vec![s]
    };
    selected
        .into_iter()
        .map(|(n, f)| {
            let mut report =
                SuiteReport { suite: n.to_string(), config: *config, properties: Vec::new(), notes: Vec::new() };
            f(config, &mut report)?;
            Ok(report)
        })
        .collect()
}

const PAIR_DOMAINS: [DomainKind; 2] = [DomainKind::TaggedInt, DomainKind::Plane];

fn seeds_for(d: DomainKind) -> Seeds {
    Seeds::for_domain(d).expect("pair-capable domain")
}

fn width() -> usize {
    2
}

/// A magma structurally related to `x` often enough that both outcomes of
/// an inclusion or equality test are exercised.
fn related(g: &mut MagmaGen, x: &Magma, depth: usize) -> Magma {
    match g.rng().gen_range(0..5) {
        0 => rebuild(x),
        1 | 2 => g.submagma(x),
        3 => g.magma(depth, width()),
        _ => union(x, &g.magma(depth, width())).unwrap_or_else(|_| x.clone()),
    }
}

/// The same magma rebuilt from its generators, so equality cannot lean on
/// pointer identity.
fn rebuild(x: &Magma) -> Magma {
    match x.generators() {
        kernel::Generators::Atoms(a) => Magma::atom_ideal(a.iter().rev().copied()).expect("nonempty"),
        kernel::Generators::Magmas(m) => Magma::magma_ideal(m.iter().rev().map(rebuild)).expect("nonempty"),
    }
}

fn same(x: &Magma, y: &Magma) -> String {
    format!("(eq? {x} {y})")
}

// ---------------------------------------------------------------- kernel

fn pr_injective(c: &CheckConfig, r: &mut SuiteReport) -> Result<()> {
    for d in DomainKind::ALL {
        let mut g = MagmaGen::new(d, c.seed);
        r.check(format!("{d}: pr injective"), c.cases, |_| {
            let x = g.magma(c.depth, width());
            let y = related(&mut g, &x, c.depth);
            if !equal(&pr(&x), &pr(&y)) || equal(&x, &y) {
                Ok(())
            } else {
                Err(same(&pr(&x), &pr(&y)))
            }
        });
        r.check(format!("{d}: pr is an inclusion embedding"), c.cases, |_| {
            let x = g.magma(c.depth, width());
            let y = related(&mut g, &x, c.depth);
            if subset(&x, &y) == subset(&pr(&x), &pr(&y)) {
                Ok(())
            } else {
                Err(format!("(subset? (pr {x}) (pr {y}))"))
            }
        });
        r.check(format!("{d}: pr of an atom is never pr of a magma"), c.cases, |_| {
            let a = g.atom();
            let x = g.magma(c.depth, width());
            if !equal(&kernel::pr_atom(&a), &pr(&x)) {
                Ok(())
            } else {
                Err(format!("(eq? (pr {a}) (pr {x}))"))
            }
        });
        r.check(format!("{d}: pr(a) = pr(b) iff a ~ b"), c.cases, |_| {
            let a = g.atom();
            let b = if g.rng().gen_bool(0.5) { g.atom() } else { equivalent_copy(&a) };
            let eq = domain::equivalent(&a, &b).expect("same domain");
            if equal(&kernel::pr_atom(&a), &kernel::pr_atom(&b)) == eq {
                Ok(())
            } else {
                Err(format!("(eq? (pr {a}) (pr {b}))"))
            }
        });
        r.check(format!("{d}: x is in pr(x)"), c.cases, |_| {
            let x = g.magma(c.depth, width());
            if member_magma(&x, &pr(&x)) {
                Ok(())
            } else {
                Err(format!("(in? {x} (pr {x}))"))
            }
        });
        r.check(format!("{d}: members lie below"), c.cases, |_| {
            let x = g.magma(c.depth, width());
            match g.element_of(&x) {
                Element::Magma(z) if !(kernel::member_magma(&z, &x) && subset(&kernel::pr(&z), &x)) => {
                    Err(format!("(subset? (pr {z}) {x})"))
                }
                Element::Atom(a) if !kernel::member(&Element::Atom(a), &x) => Err(format!("(in? {a} {x})")),
                _ => Ok(()),
            }
        });
        r.check(format!("{d}: canonical form decides equality"), c.cases, |_| {
            let x = g.magma(c.depth, width());
            let y = related(&mut g, &x, c.depth);
            let mutual = subset(&x, &y) && subset(&y, &x);
            if equal(&x, &y) == (x.to_string() == y.to_string()) && equal(&x, &y) == mutual {
                Ok(())
            } else {
                Err(same(&x, &y))
            }
        });
        r.check(format!("{d}: intersection is the greatest lower bound"), c.cases, |_| {
            let x = g.magma(c.depth, width());
            let y = related(&mut g, &x, c.depth);
            let z = g.submagma(&x);
            match intersect(&x, &y) {
                Some(m) => {
                    let lower = subset(&m, &x) && subset(&m, &y);
                    let greatest = !(subset(&z, &y)) || subset(&z, &m);
                    if lower && greatest {
                        Ok(())
                    } else {
                        Err(format!("(inter {x} {y})"))
                    }
                }
                None if subset(&z, &y) => Err(format!("(inter {x} {y})")),
                None => Ok(()),
            }
        });
    }
    Ok(())
}

fn equivalent_copy(a: &Atom) -> Atom {
    match *a {
        Atom::QDup { q, copy } => Atom::QDup { q, copy: 1 - copy },
        other => other,
    }
}

fn union_legality(c: &CheckConfig, r: &mut SuiteReport) -> Result<()> {
    let a = Atom::tag(0, 0);
    let bad = union(&kernel::pr_atom(&a), &kernel::pr_iter_atom(2, &a));
    r.fact("pr(a) ∪ pr(pr(a)) is not a magma", bad == Err(MagmaError::KindMismatch), || {
        format!("(union (pr {a}) (pr (pr {a})))")
    });
    for d in DomainKind::ALL {
        let mut g = MagmaGen::new(d, c.seed);
        r.check(format!("{d}: union kinds"), c.cases, |_| {
            let x = g.magma(c.depth, width());
            let y = g.magma(c.depth, width());
            let expr = format!("(union {x} {y})");
            match (x.kind(), y.kind(), union(&x, &y)) {
                (Kind::AtomIdeal, Kind::AtomIdeal, Ok(u)) if u.kind() == Kind::AtomIdeal => Ok(()),
                (Kind::MagmaIdeal, Kind::MagmaIdeal, Ok(u)) if u.kind() == Kind::MagmaIdeal => Ok(()),
                (kx, ky, Err(MagmaError::KindMismatch)) if kx != ky => Ok(()),
                _ => Err(expr),
            }
        });
        r.check(format!("{d}: union is the least upper bound"), c.cases, |_| {
            let x = g.magma(c.depth, width());
            let y = related(&mut g, &x, c.depth);
            let Ok(u) = union(&x, &y) else { return Ok(()) };
            let both = subset(&x, &u) && subset(&y, &u);
            let idem = equal(&union(&x, &x).expect("same kind"), &x);
            let e = g.element_of(&u);
            let split = kernel::member(&e, &x) || kernel::member(&e, &y);
            if both && idem && split {
                Ok(())
            } else {
                Err(format!("(union {x} {y})"))
            }
        });
    }
    Ok(())
}

/// Three magmas over a domain with shared structure.
fn triple(g: &mut MagmaGen, depth: usize) -> (Magma, Magma, Magma) {
    let x = g.magma(depth, width());
    let y = related(g, &x, depth);
    let z = match g.rng().gen_range(0..4) {
        0 => union(&x, &y).unwrap_or_else(|_| x.clone()),
        1 => x.clone(),
        2 => y.clone(),
        _ => related(g, &x, depth),
    };
    (x, y, z)
}

fn two_one(c: &CheckConfig, r: &mut SuiteReport) -> Result<()> {
    for d in DomainKind::ALL {
        let mut g = MagmaGen::new(d, c.seed);
        r.check(format!("{d}: (i) pr(x) ∪ pr(y) ⊆ pr(z)"), c.cases, |_| {
            let (x, y, z) = triple(&mut g, c.depth);
            let lhs = subset(&union(&pr(&x), &pr(&y)).expect("ideals"), &pr(&z));
            if lhs == (subset(&x, &z) && subset(&y, &z)) {
                Ok(())
            } else {
                Err(format!("(subset? (union (pr {x}) (pr {y})) (pr {z}))"))
            }
        });
        r.check(format!("{d}: (ii) pr(z) ⊆ pr(x) ∪ pr(y)"), c.cases, |_| {
            let (x, y, z0) = triple(&mut g, c.depth);
            let z = if g.rng().gen_bool(0.5) { g.submagma(&x) } else { z0 };
            let lhs = subset(&pr(&z), &union(&pr(&x), &pr(&y)).expect("ideals"));
            if lhs == (subset(&z, &x) || subset(&z, &y)) {
                Ok(())
            } else {
                Err(format!("(subset? (pr {z}) (union (pr {x}) (pr {y})))"))
            }
        });
        r.check(format!("{d}: (iii) pr(x) ∪ pr(y) = pr(z)"), c.cases, |_| {
            let (x, y0, z0) = triple(&mut g, c.depth);
            let y = if g.rng().gen_bool(0.5) { g.submagma(&x) } else { y0 };
            let z = if g.rng().gen_bool(0.5) { rebuild(&x) } else { z0 };
            let lhs = equal(&union(&pr(&x), &pr(&y)).expect("ideals"), &pr(&z));
            let rhs = (subset(&x, &y) && equal(&y, &z)) || (subset(&y, &x) && equal(&x, &z));
            if lhs == rhs {
                Ok(())
            } else {
                Err(format!("(eq? (union (pr {x}) (pr {y})) (pr {z}))"))
            }
        });
        r.check(format!("{d}: (iv) four-case inclusion"), c.cases, |_| {
            let (x, y, x2, y2) = quadruple(&mut g, c.depth);
            let lhs = subset(&union(&pr(&x), &pr(&y)).expect("ideals"), &union(&pr(&x2), &pr(&y2)).expect("ideals"));
            let s = subset;
            let rhs = (s(&x, &x2) && s(&y, &x2))
                || (s(&x, &y2) && s(&y, &y2))
                || (s(&x, &x2) && s(&y, &y2))
                || (s(&x, &y2) && s(&y, &x2));
            if lhs == rhs {
                Ok(())
            } else {
                Err(format!("(subset? (union (pr {x}) (pr {y})) (union (pr {x2}) (pr {y2})))"))
            }
        });
    }
    Ok(())
}

/// `(x, y, x', y')` with the primed pair often built from the unprimed one.
fn quadruple(g: &mut MagmaGen, depth: usize) -> (Magma, Magma, Magma, Magma) {
    let x = g.magma(depth, width());
    let y = if g.rng().gen_bool(0.3) { g.submagma(&x) } else { related(g, &x, depth) };
    let (x2, y2) = match g.rng().gen_range(0..6) {
        0 => (rebuild(&x), rebuild(&y)),
        1 => (rebuild(&y), rebuild(&x)),
        2 => (g.submagma(&x), g.submagma(&y)),
        3 => (rebuild(&x), g.submagma(&x)),
        4 => (related(g, &x, depth), rebuild(&y)),
        _ => (g.magma(depth, width()), g.magma(depth, width())),
    };
    (x, y, x2, y2)
}

fn union_of_bo(c: &CheckConfig, r: &mut SuiteReport) -> Result<()> {
    for d in DomainKind::ALL {
        let mut g = MagmaGen::new(d, c.seed);
        let mut seen = [0usize; 4];
        r.check(format!("{d}: case tag iff union equality, and the case replays"), c.cases, |_| {
            let (x, y, x2, y2) = quadruple(&mut g, c.depth);
            let case = union2_equality_case(&x, &y, &x2, &y2);
            let eq = equal(&union(&pr(&x), &pr(&y)).expect("ideals"), &union(&pr(&x2), &pr(&y2)).expect("ideals"));
            seen[match case {
                UnionEqualityCase::Same => 0,
                UnionEqualityCase::Crossed => 1,
                UnionEqualityCase::Absorbed { .. } => 2,
                UnionEqualityCase::Unequal => 3,
            }] += 1;
            if (case != UnionEqualityCase::Unequal) == eq && case.verify(&x, &y, &x2, &y2) {
                Ok(())
            } else {
                Err(format!("(case= {x} {y} {x2} {y2})"))
            }
        });
        r.note(format!("{d}: cases I={} II={} III={} unequal={}", seen[0], seen[1], seen[2], seen[3]));
    }
    let t = |v| Magma::atom_ideal([Atom::tag(0, v)]).expect("atom");
    // Chains and an incomparable element: every inclusion pattern occurs.
    let mut family: Vec<Magma> = (0..4).map(t).collect();
    family.push(Magma::atom_ideal([Atom::tag(1, 0)]).expect("atom"));
    family.push(Magma::atom_ideal([Atom::tag(0, 1), Atom::tag(1, 0)]).expect("atoms"));
    let n = family.len();
    r.check("small family, exhaustive", n.pow(4), |i| {
        let [x, y, x2, y2] = [i % n, i / n % n, i / n / n % n, i / n / n / n].map(|k| &family[k]);
        let case = union2_equality_case(x, y, x2, y2);
        let eq = equal(&union(&pr(x), &pr(y)).expect("ideals"), &union(&pr(x2), &pr(y2)).expect("ideals"));
        if (case != UnionEqualityCase::Unequal) == eq && case.verify(x, y, x2, y2) {
            Ok(())
        } else {
            Err(format!("(case= {x} {y} {x2} {y2})"))
        }
    });
    let case = union2_equality_case(&t(5), &t(1), &t(5), &t(2));
    r.fact("case III example", matches!(case, UnionEqualityCase::Absorbed { .. }), || case.to_string());
    Ok(())
}

// ---------------------------------------------------------------- pairs

fn pair_theorem(c: &CheckConfig, r: &mut SuiteReport) -> Result<()> {
    for d in PAIR_DOMAINS {
        let s = seeds_for(d);
        let mut g = MagmaGen::new(d, c.seed);
        let mut equal_cases = 0;
        r.check(format!("{d}: pairs equal iff components equal"), c.cases, |_| {
            let (x, y, x2, y2) = quadruple(&mut g, c.depth);
            let p = s.pair(&x, &y).expect("domain").whole;
            let q = s.pair(&x2, &y2).expect("domain").whole;
            let parts = equal(&x, &x2) && equal(&y, &y2);
            equal_cases += usize::from(parts);
            if equal(&p, &q) == parts {
                Ok(())
            } else {
                Err(format!("(eq? (pair {x} {y}) (pair {x2} {y2}))"))
            }
        });
        r.note(format!("{d}: {equal_cases} quadruples with equal components"));
        r.check(format!("{d}: extraction inverts construction"), c.cases, |_| {
            let x = g.magma(c.depth, width());
            let y = g.magma(c.depth, width());
            let p = s.pair(&x, &y).expect("domain");
            let halves = p.whole.magmas().map_or(0, <[Magma]>::len);
            if s.is_pair(&p.whole) && s.extract_pair(&p.whole) == Ok((x.clone(), y.clone())) && halves == 2 {
                Ok(())
            } else {
                Err(format!("(fst (pair {x} {y}))"))
            }
        });
    }
    let mut u = FiniteUniverse::from_spec("tag2x2", 2)?;
    let report = oracle::check_pairs(&mut u)?;
    let lines: Vec<_> = report.lines.iter().filter(|l| l.op == "pair-equal").collect();
    r.check("tag2x2: pair equality on denotations, exhaustive", lines.len(), |i| {
        if lines[i].ok {
            Ok(())
        } else {
            Err(format!("oracle case {}", lines[i].case))
        }
    });
    Ok(())
}

fn pair_in_pair(c: &CheckConfig, r: &mut SuiteReport) -> Result<()> {
    for d in PAIR_DOMAINS {
        let s = seeds_for(d);
        let mut g = MagmaGen::new(d, c.seed);
        r.check(format!("{d}: sub-pair iff componentwise inclusion"), c.cases, |_| {
            let x = g.magma(c.depth, width());
            let y = g.magma(c.depth, width());
            let (x2, y2) = match g.rng().gen_range(0..4) {
                0 => (g.submagma(&x), g.submagma(&y)),
                1 => (g.submagma(&x), g.magma(c.depth, width())),
                2 => (g.magma(c.depth, width()), g.submagma(&y)),
                _ => (related(&mut g, &x, c.depth), related(&mut g, &y, c.depth)),
            };
            let p = s.pair(&x, &y).expect("domain").whole;
            let q = s.pair(&x2, &y2).expect("domain").whole;
            let via_pr = member_magma(&q, &pr(&p));
            let parts = subset(&x2, &x) && subset(&y2, &y);
            if subset(&q, &p) == parts && via_pr == parts {
                Ok(())
            } else {
                Err(format!("(subset? (pair {x2} {y2}) (pair {x} {y}))"))
            }
        });
        r.check(format!("{d}: sub-pairs extract to their own components"), c.cases, |_| {
            let x = g.magma(c.depth, width());
            let y = g.magma(c.depth, width());
            let (x2, y2) = (g.strict_submagma(&x), g.strict_submagma(&y));
            let q = s.pair(&x2, &y2).expect("domain").whole;
            if s.extract_pair(&q) == Ok((x2.clone(), y2.clone())) {
                Ok(())
            } else {
                Err(format!("(fst (pair {x2} {y2}))"))
            }
        });
        r.check(format!("{d}: collateral halves are non-pairs inside the pair"), c.cases, |_| {
            let x = g.magma(c.depth, width());
            let y = g.magma(c.depth, width());
            let p = s.pair(&x, &y).expect("domain").whole;
            let half = |h: Magma| h.principal().expect("halves are principal").clone();
            let h0 = half(s.first_half(&g.submagma(&x)).expect("domain"));
            let h1 = half(s.second_half(&g.submagma(&y)).expect("domain"));
            let inside = member_magma(&h0, &p) && member_magma(&h1, &p);
            if inside && !s.is_pair(&h0) && !s.is_pair(&h1) {
                Ok(())
            } else {
                Err(format!("(pair? {h0})"))
            }
        });
    }
    Ok(())
}

fn tuples(c: &CheckConfig, r: &mut SuiteReport) -> Result<()> {
    for d in PAIR_DOMAINS {
        let s = seeds_for(d);
        let mut g = MagmaGen::new(d, c.seed);
        let depth = c.depth.min(2);
        r.check(format!("{d}: tuples round-trip"), c.cases, |i| {
            let n = 2 + i % 3;
            let xs: Vec<Magma> = (0..n).map(|_| g.magma(depth, width())).collect();
            let t = s.tuple(&xs).expect("arity");
            if s.extract_tuple(&t, n).as_deref() == Ok(&xs[..]) {
                Ok(())
            } else {
                Err(format!("(untuple (tuple {}) {n})", join(&xs)))
            }
        });
        r.check(format!("{d}: triples equal iff components equal"), c.cases, |_| {
            let xs: Vec<Magma> = (0..3).map(|_| g.magma(depth, width())).collect();
            let ys: Vec<Magma> =
                xs.iter().map(|x| if g.rng().gen_bool(0.7) { rebuild(x) } else { related(&mut g, x, depth) }).collect();
            let parts = xs.iter().zip(&ys).all(|(a, b)| equal(a, b));
            let (tx, ty) = (s.tuple(&xs).expect("arity"), s.tuple(&ys).expect("arity"));
            if equal(&tx, &ty) == parts {
                Ok(())
            } else {
                Err(format!("(eq? (tuple {}) (tuple {}))", join(&xs), join(&ys)))
            }
        });
    }
    Ok(())
}

fn join(xs: &[Magma]) -> String {
    xs.iter().map(Magma::to_string).collect::<Vec<_>>().join(" ")
}

// ---------------------------------------------------------------- relations

fn product_weak(c: &CheckConfig, r: &mut SuiteReport) -> Result<()> {
    for d in PAIR_DOMAINS {
        let s = seeds_for(d);
        let mut g = MagmaGen::new(d, c.seed);
        let depth = c.depth.max(2);
        let products = (c.cases / 5).max(1);
        r.check(format!("{d}: product pairs are weak-product pairs"), products, |_| {
            let x = g.magma_ideal(depth, width());
            let y = g.magma_ideal(depth, width());
            let prod = product(&s, &x, &y).expect("magma-ideals");
            let wp = WeakProduct::new(&x, &y).expect("magma-ideals");
            for _ in 0..5 {
                let z = pick_member_or_not(&mut g, &x, depth);
                let w = pick_member_or_not(&mut g, &y, depth);
                let p = s.pair(&z, &w).expect("domain").whole;
                if member_magma(&p, prod.whole()) != weak_member(&s, &p, &wp) {
                    return Err(format!("(in? (pair {z} {w}) (prod {x} {y}))"));
                }
            }
            let half = s.first_half(&x.magmas().expect("ideal")[0]).expect("domain");
            if !member_magma(&half, prod.whole()) || weak_member(&s, &half, &wp) {
                return Err(format!("(classify (prod {x} {y}) {half})"));
            }
            Ok(())
        });
        r.check(format!("{d}: pr of a pair is the product of the pr's"), c.cases, |_| {
            let u = g.magma(depth, width());
            let v = g.magma(depth, width());
            let prod = product(&s, &pr(&u), &pr(&v)).expect("magma-ideals");
            if equal(prod.whole(), &pr(&s.pair(&u, &v).expect("domain").whole)) {
                Ok(())
            } else {
                Err(format!("(eq? (prod (pr {u}) (pr {v})) (pr (pair {u} {v})))"))
            }
        });
    }
    Ok(())
}

/// A submagma of a generator of `x` (so a member), or an arbitrary magma.
fn pick_member_or_not(g: &mut MagmaGen, x: &Magma, depth: usize) -> Magma {
    if g.rng().gen_bool(0.7) {
        match g.element_of(x) {
            Element::Magma(m) => m,
            Element::Atom(_) => unreachable!("magma-ideal"),
        }
    } else {
        g.magma(depth - 1, width())
    }
}

fn random_relation(g: &mut MagmaGen, s: &Seeds, depth: usize, size: usize) -> Relation {
    // A small pool of domain pieces makes overlaps and repeats common.
    let pool: Vec<Magma> = (0..size.max(2)).map(|_| g.magma(depth, width())).collect();
    let pairs = (0..size)
        .map(|_| {
            let z = pool[g.rng_index(pool.len())].clone();
            let z = if g.rng().gen_bool(0.3) { g.submagma(&z) } else { z };
            (z, g.magma(depth, width()))
        })
        .collect();
    Relation::new(s, pairs).expect("nonempty")
}

fn dom_ran(c: &CheckConfig, r: &mut SuiteReport) -> Result<()> {
    for d in PAIR_DOMAINS {
        let s = seeds_for(d);
        let mut g = MagmaGen::new(d, c.seed);
        let depth = c.depth.min(2);
        r.check(format!("{d}: dom and ran are generated by the components"), c.cases, |i| {
            let rel = random_relation(&mut g, &s, depth, 1 + i % 4);
            let (zi, wi) = rel.intended()[g.rng_index(rel.intended().len())].clone();
            let z2 = g.submagma(&zi);
            let w2 = g.submagma(&wi);
            if member_magma(&z2, &rel.dom()) && member_magma(&w2, &rel.ran()) {
                Ok(())
            } else {
                Err(format!("(in? {z2} (dom {rel}))"))
            }
        });
        if d == DomainKind::TaggedInt {
            r.check(format!("{d}: fresh-tag magmas are outside dom"), c.cases, |i| {
                let rel = random_relation(&mut g, &s, depth, 1 + i % 4);
                let z = g.fresh_tag_magma(7, depth);
                if !member_magma(&z, &rel.dom()) {
                    Ok(())
                } else {
                    Err(format!("(in? {z} (dom {rel}))"))
                }
            });
        }
        r.check(format!("{d}: slice membership matches pair membership"), c.cases, |i| {
            let rel = random_relation(&mut g, &s, depth, 1 + i % 4);
            let (zi, wi) = rel.intended()[g.rng_index(rel.intended().len())].clone();
            let z = g.submagma(&zi);
            let w = if g.rng().gen_bool(0.5) { g.submagma(&wi) } else { g.magma(depth, width()) };
            let via_slice = rel.slice(&z).is_some_and(|sl| member_magma(&w, &sl));
            let p = s.pair(&z, &w).expect("domain").whole;
            if via_slice == member_magma(&p, rel.whole()) {
                Ok(())
            } else {
                Err(format!("(slice {rel} {z})"))
            }
        });
        r.check(format!("{d}: sampled elements classify, collateral pairs are sub-pairs"), c.cases, |i| {
            let rel = random_relation(&mut g, &s, depth, 1 + i % 4);
            let e = match g.element_of(rel.whole()) {
                Element::Magma(m) => m,
                Element::Atom(_) => unreachable!("magma-ideal"),
            };
            match rel.classify(&e) {
                Classification::NotElement => Err(format!("(classify {rel} {e})")),
                Classification::CollateralPair => {
                    let (z, w) = s.extract_pair(&e).expect("pair");
                    let under = rel.intended().iter().any(|(zi, wi)| subset(&z, zi) && subset(&w, wi));
                    if under {
                        Ok(())
                    } else {
                        Err(format!("(classify {rel} {e})"))
                    }
                }
                _ => Ok(()),
            }
        });
    }
    Ok(())
}

/// Sampled check: a true verdict has no sampled domain element with a
/// non-principal slice; a false verdict replays its counterexample.
pub fn function_agrees_with_sampling(
    rel: &Relation,
    g: &mut MagmaGen,
    samples: usize,
) -> std::result::Result<(), String> {
    let verdict = rel.is_function().map_err(|e| e.to_string())?;
    if verdict {
        for _ in 0..samples {
            let z = sample_domain_element(rel, g);
            match rel.slice(&z) {
                Some(sl) if sl.generator_count() == 1 => {}
                _ => return Err(format!("(fun? {rel}) but (slice {rel} {z}) has no greatest element")),
            }
        }
        Ok(())
    } else {
        let cex = rel
            .function_counterexample(crate::relation::DEFAULT_FUNCTION_CAP)
            .map_err(|e| e.to_string())?
            .ok_or_else(|| format!("(fun? {rel}) false without counterexample"))?;
        let replayed = !rel.is_semifunction() || rel.slice(&cex).is_some_and(|sl| sl.generator_count() > 1);
        if replayed {
            Ok(())
        } else {
            Err(format!("(slice {rel} {cex})"))
        }
    }
}

/// A domain element: a submagma of one `zᵢ`, or of an intersection of two.
pub fn sample_domain_element(rel: &Relation, g: &mut MagmaGen) -> Magma {
    let n = rel.intended().len();
    let zi = &rel.intended()[g.rng_index(n)].0;
    let base = if g.rng().gen_bool(0.5) {
        let zj = &rel.intended()[g.rng_index(n)].0;
        intersect(zi, zj).unwrap_or_else(|| zi.clone())
    } else {
        zi.clone()
    };
    g.submagma(&base)
}

fn functions(c: &CheckConfig, r: &mut SuiteReport) -> Result<()> {
    for d in PAIR_DOMAINS {
        let s = seeds_for(d);
        let mut g = MagmaGen::new(d, c.seed);
        let depth = c.depth.min(2);
        let mut verdicts = [0usize; 2];
        r.check(format!("{d}: is_function agrees with slice sampling"), c.cases, |i| {
            let rel = random_relation(&mut g, &s, depth, 1 + i % 6);
            verdicts[usize::from(rel.is_function().unwrap_or(false))] += 1;
            function_agrees_with_sampling(&rel, &mut g, 200)
        });
        r.note(format!("{d}: {} functions, {} non-functions", verdicts[1], verdicts[0]));
        r.check(format!("{d}: single pairs are functions with constant value"), c.cases, |_| {
            let z = g.magma(depth, width());
            let w = g.magma(depth, width());
            let rel = Relation::new(&s, vec![(z.clone(), w.clone())]).expect("nonempty");
            let z2 = g.submagma(&z);
            if rel.is_function() == Ok(true) && rel.apply(&z2).as_ref() == Ok(&w) {
                Ok(())
            } else {
                Err(format!("(apply {rel} {z2})"))
            }
        });
        r.check(format!("{d}: overlapping domains with incomparable images clash"), c.cases, |_| {
            let (z1, z2, w1, w2) = clash_configuration(&mut g, depth);
            let rel = Relation::new(&s, vec![(z1, w1), (z2, w2)]).expect("nonempty");
            if rel.is_function() == Ok(false) {
                Ok(())
            } else {
                Err(format!("(fun? {rel})"))
            }
        });
    }
    Ok(())
}

/// `z₁ ∩ z₂ ≠ ∅` and incomparable `w₁, w₂`.
fn clash_configuration(g: &mut MagmaGen, depth: usize) -> (Magma, Magma, Magma, Magma) {
    loop {
        let z1 = g.magma(depth, width());
        let z2 = related(g, &z1, depth);
        let w1 = g.magma(depth, width());
        let w2 = g.magma(depth, width());
        if intersect(&z1, &z2).is_some() && !subset(&w1, &w2) && !subset(&w2, &w1) {
            return (z1, z2, w1, w2);
        }
    }
}

fn disjoint_sufficient(c: &CheckConfig, r: &mut SuiteReport) -> Result<()> {
    let d = DomainKind::TaggedInt;
    let s = seeds_for(d);
    let mut g = MagmaGen::new(d, c.seed);
    let depth = c.depth.min(3);
    r.check("pairwise disjoint domains give functions", c.cases, |i| {
        let n = 1 + i % 6;
        // One private tag per intended pair keeps the zᵢ pairwise disjoint.
        let pairs: Vec<(Magma, Magma)> =
            (0..n).map(|k| (g.fresh_tag_magma(10 + k as i64, 1 + k % depth), g.magma(depth, width()))).collect();
        let rel = Relation::new(&s, pairs.clone()).expect("nonempty");
        if rel.is_function() != Ok(true) {
            return Err(format!("(fun? {rel})"));
        }
        let k = g.rng_index(n);
        let z = g.submagma(&pairs[k].0);
        if rel.apply(&z).as_ref() == Ok(&pairs[k].1) {
            Ok(())
        } else {
            Err(format!("(apply {rel} {z})"))
        }
    });
    r.check("one shared image gives a function despite overlaps", c.cases, |i| {
        let w = g.magma(depth, width());
        let pool = g.magma(depth, width());
        let pairs = (0..1 + i % 5).map(|_| (related(&mut g, &pool, depth), w.clone())).collect();
        let rel = Relation::new(&s, pairs).expect("nonempty");
        if rel.is_function() == Ok(true) {
            Ok(())
        } else {
            Err(format!("(fun? {rel})"))
        }
    });
    Ok(())
}

/// `z₁, z₂` incomparable with nonempty meet, `w₁ ⊊ w₂`.
fn nested_image_configuration(g: &mut MagmaGen, depth: usize) -> (Magma, Magma, Magma, Magma) {
    loop {
        let z1 = g.magma(depth, width());
        let z2 = related(g, &z1, depth);
        if intersect(&z1, &z2).is_none() || subset(&z1, &z2) || subset(&z2, &z1) {
            continue;
        }
        let w2 = g.magma(depth, width());
        let w1 = g.strict_submagma(&w2);
        return (z1, z2, w1, w2);
    }
}

fn example_function(c: &CheckConfig, r: &mut SuiteReport) -> Result<()> {
    let s = seeds_for(DomainKind::TaggedInt);
    let t = |tag, v| Atom::tag(tag, v);
    let ai = |atoms: &[Atom]| Magma::atom_ideal(atoms.iter().copied()).expect("atoms");
    let z1 = ai(&[t(2, 3), t(0, 0)]);
    let z2 = ai(&[t(2, 1), t(1, 0)]);
    let (w1, w2) = (ai(&[t(0, 1)]), ai(&[t(0, 2)]));
    let rel = Relation::new(&s, vec![(z1.clone(), w1), (z2.clone(), w2.clone())])?;
    let meet = intersect(&z1, &z2).expect("overlap");
    r.fact("fixed configuration is a function", rel.is_function() == Ok(true), || format!("(fun? {rel})"));
    r.fact("value on the overlap is the larger image", rel.apply(&meet).as_ref() == Ok(&w2), || {
        format!("(apply {rel} {meet})")
    });
    for d in PAIR_DOMAINS {
        let s = seeds_for(d);
        let mut g = MagmaGen::new(d, c.seed);
        let depth = c.depth.min(2);
        r.check(format!("{d}: random configurations are functions"), c.cases, |_| {
            let (z1, z2, w1, w2) = nested_image_configuration(&mut g, depth);
            let rel = Relation::new(&s, vec![(z1.clone(), w1), (z2.clone(), w2.clone())]).expect("nonempty");
            let meet = intersect(&z1, &z2).expect("overlap");
            if rel.is_function() == Ok(true) && rel.apply(&meet).as_ref() == Ok(&w2) {
                Ok(())
            } else {
                Err(format!("(fun? {rel})"))
            }
        });
    }
    Ok(())
}

// ---------------------------------------------------------------- ordinals

fn ordinal_order(c: &CheckConfig, r: &mut SuiteReport) -> Result<()> {
    let tower = Tower::new(seeds_for(DomainKind::TaggedInt).a0());
    let cap = tower.cap();
    let nats = (0..=cap).map(|n| tower.nat(n, Variant::Primary)).collect::<Result<Vec<_>>>()?;
    let pairs: Vec<(u64, u64)> = (0..=cap).flat_map(|m| (0..=cap).map(move |n| (m, n))).collect();
    r.check("m < n iff nat(m) strictly inside nat(n)", pairs.len(), |i| {
        let (m, n) = pairs[i];
        let less = tower.ord_less(&nats[m as usize], &nats[n as usize]).expect("primary");
        if less == (m < n) {
            Ok(())
        } else {
            Err(format!("(ord< (nat {m}) (nat {n}))"))
        }
    });
    r.check("nat(n+1) is generated by pr(a0) and nat(n)", cap as usize, |i| {
        let n = i + 1;
        let gens = nats[n].value.magmas().expect("ideal");
        let ok = gens.len() == 2 && gens.contains(&kernel::pr_atom(&tower.a0())) && gens.contains(&nats[n - 1].value);
        if ok {
            Ok(())
        } else {
            Err(format!("(nat {n})"))
        }
    });
    r.check("finite sums agree with the successor recursion", pairs.len(), |i| {
        let (a, b) = pairs[i];
        let sum =
            tower.ord_add(crate::ordinal::Ordinal::finite(a), crate::ordinal::Ordinal::finite(b)).expect("finite");
        let concrete_ok = a + b > cap || sum.concrete == Some(true);
        if sum.sum.r == a + b && concrete_ok {
            Ok(())
        } else {
            Err(format!("(ord+ (ord 0 {a}) (ord 0 {b}))"))
        }
    });
    let mut g = MagmaGen::new(DomainKind::TaggedInt, c.seed);
    r.check("notation addition laws", c.cases, |_| {
        let mut ord = || crate::ordinal::Ordinal::new(g.rng().gen_range(0..4), g.rng().gen_range(0..6));
        let (a, b, k) = (ord(), ord(), ord());
        let assoc =
            a.checked_add(b).and_then(|ab| ab.checked_add(k)) == b.checked_add(k).and_then(|bk| a.checked_add(bk));
        let zero = a.checked_add(crate::ordinal::Ordinal::ZERO) == Ok(a);
        let absorb = b.q == 0 || a.checked_add(b).map(|s| s.r) == Ok(b.r);
        if assoc && zero && absorb {
            Ok(())
        } else {
            Err(format!("(ord+ {a} {b})"))
        }
    });
    Ok(())
}

fn alt_disjoint(_c: &CheckConfig, r: &mut SuiteReport) -> Result<()> {
    let tower = Tower::new(seeds_for(DomainKind::TaggedInt).a0());
    let cap = tower.cap();
    let pairs: Vec<(u64, u64)> = (0..=cap).flat_map(|m| (0..=cap).map(move |n| (m, n))).collect();
    r.check("alt naturals meet iff equal", pairs.len(), |i| {
        let (m, n) = pairs[i];
        if tower.alt_disjoint(m, n).expect("within cap") == (m != n) {
            Ok(())
        } else {
            Err(format!("(inter (nat* {m}) (nat* {n}))"))
        }
    });
    r.check("alt natural n has level n+2", cap as usize + 1, |n| {
        let v = tower.nat(n as u64, Variant::Alt).expect("within cap").value;
        if v.level() == crate::ordinal::Ordinal::finite(n as u64 + 2) {
            Ok(())
        } else {
            Err(format!("(level (nat* {n}))"))
        }
    });
    r.check("alt naturals are pairwise incomparable", pairs.len(), |i| {
        let (m, n) = pairs[i];
        let a = tower.nat(m, Variant::Alt).expect("cap").value;
        let b = tower.nat(n, Variant::Alt).expect("cap").value;
        if subset(&a, &b) == (m == n) {
            Ok(())
        } else {
            Err(format!("(subset? (nat* {m}) (nat* {n}))"))
        }
    });
    Ok(())
}

fn countgen(c: &CheckConfig, r: &mut SuiteReport) -> Result<()> {
    let d = DomainKind::TaggedInt;
    let s = seeds_for(d);
    let tower = Tower::new(s.a0());
    let mut g = MagmaGen::new(d, c.seed);
    let depth = c.depth.min(2);
    let base = g.magma(depth, width());
    let prefix: Vec<Magma> = (0..3).map(|_| g.magma(depth, width())).collect();
    let rules = [
        ("constant", TailRule::Constant(base.clone())),
        ("pr-tower", TailRule::PrTower(base.clone())),
        ("shift", TailRule::Shift(3)),
    ];
    for (name, tail) in rules {
        let f = CountGenFun::new(&s, prefix.clone(), tail)?;
        let trunc = f.truncation(8)?;
        r.fact(format!("{name}: truncation is a function"), trunc.is_function() == Ok(true), || {
            format!("(fun? {trunc})")
        });
        r.check(format!("{name}: value at z below n* is y_n"), c.cases.clamp(1, 200), |_| {
            let n = g.rng().gen_range(1..=8u64);
            let top = tower.nat(n, Variant::Alt).expect("cap").value;
            let z = g.submagma(&top);
            let v = f.apply(&z);
            if v == f.image(n) && v == trunc.apply(&z) {
                Ok(())
            } else {
                Err(format!("(cg-apply {f} {z})"))
            }
        });
        let zero = tower.nat(0, Variant::Alt)?.value;
        r.fact(
            format!("{name}: 0* is outside the domain"),
            matches!(f.apply(&zero), Err(MagmaError::NotInDomain(_))),
            || format!("(cg-apply {f} (nat* 0))"),
        );
    }
    Ok(())
}

// ---------------------------------------------------------------- separation

fn random_class(g: &mut MagmaGen, depth: usize) -> ClassDescriptor {
    let n = 1 + g.rng_index(3);
    ClassDescriptor::new((0..n).map(|_| g.magma(depth, width())).collect()).expect("nonempty")
}

fn mss(c: &CheckConfig, r: &mut SuiteReport) -> Result<()> {
    for d in DomainKind::ALL {
        let mut g = MagmaGen::new(d, c.seed);
        let depth = c.depth.max(2);
        let mut empty = 0usize;
        r.check(format!("{d}: separation is a magma with the right members"), c.cases, |_| {
            let (cls, u, v) = loop {
                let cls = random_class(&mut g, depth - 1);
                let root = cls.roots()[0].clone();
                let u = if g.rng().gen_bool(0.5) {
                    Magma::magma_ideal([related(&mut g, &root, depth - 1), g.magma(depth - 1, width())]).expect("gens")
                } else {
                    g.magma_ideal(depth, width())
                };
                match cls.separate(&u) {
                    Some(v) => break (cls, u, v),
                    None => empty += 1,
                }
            };
            let canonical = Magma::magma_ideal(v.magmas().expect("ideal").iter().cloned()).ok() == Some(v.clone());
            if !canonical || !subset(&v, &u) {
                return Err(format!("(separate {cls} {u})"));
            }
            for _ in 0..100 {
                let z = match g.rng().gen_range(0..3) {
                    0 => pick_member_or_not(&mut g, &u, depth),
                    1 => {
                        let k = g.rng_index(cls.roots().len());
                        g.submagma(&cls.roots()[k])
                    }
                    _ => g.magma(depth - 1, width()),
                };
                if member_magma(&z, &v) != (cls.contains(&z) && member_magma(&z, &u)) {
                    return Err(format!("(in? {z} (separate {cls} {u}))"));
                }
            }
            Ok(())
        });
        r.note(format!("{d}: {empty} draws with empty separation skipped"));
    }
    Ok(())
}

fn magmatic_lemma(c: &CheckConfig, r: &mut SuiteReport) -> Result<()> {
    for d in DomainKind::ALL {
        let mut g = MagmaGen::new(d, c.seed);
        r.check(format!("{d}: classes are closed under submagmas"), c.cases, |_| {
            let cls = random_class(&mut g, c.depth);
            let k = g.rng_index(cls.roots().len());
            let x = g.submagma(&cls.roots()[k]);
            let y = g.submagma(&x);
            if cls.contains(&x) && cls.contains(&y) {
                Ok(())
            } else {
                Err(format!("(in-class? {cls} {y})"))
            }
        });
        r.check(format!("{d}: completion as one magma agrees"), c.cases, |_| {
            let cls = random_class(&mut g, c.depth);
            let x = related(&mut g, &cls.roots()[0].clone(), c.depth);
            if cls.contains(&x) == member_magma(&x, &cls.as_magma()) {
                Ok(())
            } else {
                Err(format!("(in-class? {cls} {x})"))
            }
        });
        let cls = random_class(&mut g, c.depth);
        let v = separation::magmatic_condition_sampler(&Predicate::InClass(cls.clone()), c.cases, c.seed);
        r.fact(format!("{d}: class predicate is unrefuted"), matches!(v, Verdict::Unrefuted { .. }), || v.to_string());
        let y0 = g.magma(c.depth, width());
        let v = separation::magmatic_condition_sampler(&Predicate::EqualTo(y0), c.cases, c.seed);
        r.fact(format!("{d}: equality predicate is refuted"), matches!(v, Verdict::Refuted { .. }), || v.to_string());
    }
    for d in PAIR_DOMAINS {
        let v = separation::magmatic_condition_sampler(&Predicate::IsPair(seeds_for(d)), c.cases, c.seed);
        r.fact(format!("{d}: pair predicate is refuted"), matches!(v, Verdict::Refuted { .. }), || v.to_string());
    }
    Ok(())
}

fn replacement_pr(c: &CheckConfig, r: &mut SuiteReport) -> Result<()> {
    let tag = |t, v| Atom::tag(t, v);
    let fixtures = vec![
        pr(&Magma::atom_ideal([tag(0, 0), tag(1, 0)])?),
        pr(&Magma::atom_ideal([Atom::plane(1, 1)])?),
        Magma::atom_ideal([Atom::plane(1, 1)])?,
        kernel::pr_iter(2, &Magma::atom_ideal([tag(0, 2), tag(2, 2)])?),
    ];
    for u in &fixtures {
        let w = separation::replacement_pr_witness(u)?;
        r.fact(format!("fixture {u}"), w.verified(), || w.to_string());
    }
    if let Ok(w) = separation::replacement_pr_witness(&fixtures[0]) {
        r.note(w.to_string().replace('\n', "\n  ; "));
    }
    let chain = kernel::pr_iter_atom(3, &tag(0, 0));
    r.fact(
        "single chain has no incomparable submagmas",
        matches!(separation::replacement_pr_witness(&chain), Err(MagmaError::NoIncomparableSubmagmas(_))),
        || format!("(demo replacement-pr {chain})"),
    );
    let mut g = MagmaGen::new(DomainKind::Plane, c.seed);
    r.check("plane: every random magma admits a witness", c.cases, |_| {
        let u = g.magma(c.depth, width());
        match separation::replacement_pr_witness(&u) {
            Ok(w) if w.verified() => Ok(()),
            _ => Err(format!("(demo replacement-pr {u})")),
        }
    });
    Ok(())
}

fn replacement_const(c: &CheckConfig, r: &mut SuiteReport) -> Result<()> {
    for d in DomainKind::ALL {
        let mut g = MagmaGen::new(d, c.seed);
        r.check(format!("{d}: constant images miss submagmas"), c.cases, |_| {
            let u = g.magma(c.depth, width());
            let y0 = g.magma(c.depth, width());
            let w = separation::replacement_const_witness(&u, &y0);
            if w.verified() {
                Ok(())
            } else {
                Err(format!("(demo replacement-const {u} {y0})"))
            }
        });
    }
    Ok(())
}

fn completion_not_functional(_c: &CheckConfig, r: &mut SuiteReport) -> Result<()> {
    for d in PAIR_DOMAINS {
        let w = separation::completion_not_functional_demo(&seeds_for(d));
        r.fact(format!("{d}: two distinct verified images"), w.verified(), || w.to_string());
        if d == DomainKind::TaggedInt {
            r.note(w.to_string().replace('\n', "\n  ; "));
        }
    }
    Ok(())
}

fn no_minimal(c: &CheckConfig, r: &mut SuiteReport) -> Result<()> {
    for d in DomainKind::ALL {
        let mut g = MagmaGen::new(d, c.seed);
        r.check(format!("{d}: strictly descending atom chains"), c.cases, |_| {
            let mut a = g.atom();
            for _ in 0..10 {
                let b = domain::strictly_below(&a);
                let strict = domain::leq(&b, &a) == Ok(true) && domain::leq(&a, &b) == Ok(false);
                if !strict {
                    return Err(format!("(below {a})"));
                }
                a = b;
            }
            Ok(())
        });
        r.check(format!("{d}: every magma has a strict submagma"), c.cases, |_| {
            let x = g.magma(c.depth, width());
            let y = g.strict_submagma(&x);
            let below = separation::strict_below(&x);
            if proper_subset(&y, &x) && proper_subset(&below, &x) {
                Ok(())
            } else {
                Err(format!("(subset? {y} {x})"))
            }
        });
    }
    Ok(())
}

// ---------------------------------------------------------------- oracle

const ORACLE_UNIVERSES: [&str; 3] = ["tag2x2", "plane2", "qdup4"];

fn oracle_suite(c: &CheckConfig, r: &mut SuiteReport, suite: &str, pairs_only: bool) -> Result<()> {
    let depth = c.depth.clamp(1, oracle::MAX_DEPTH);
    for spec in ORACLE_UNIVERSES {
        let mut u = FiniteUniverse::from_spec(spec, depth)?;
        if pairs_only && Seeds::for_domain(u.domain()).is_err() {
            continue;
        }
        let report = oracle::run_suite(&mut u, suite)?;
        r.note(format!("{spec}: level sizes {:?}", u.level_sizes()));
        let mut ops: Vec<&str> = report.lines.iter().map(|l| l.op).collect();
        ops.dedup();
        ops.sort_unstable();
        ops.dedup();
        for op in ops {
            let lines: Vec<_> = report.lines.iter().filter(|l| l.op == op).collect();
            r.check(format!("{spec}: {op}"), lines.len(), |i| {
                if lines[i].ok {
                    Ok(())
                } else {
                    Err(format!("{} {} MISMATCH", lines[i].op, lines[i].case))
                }
            });
        }
    }
    Ok(())
}

fn oracle_kernel(c: &CheckConfig, r: &mut SuiteReport) -> Result<()> {
    oracle_suite(c, r, "kernel", false)
}

fn oracle_pairs(c: &CheckConfig, r: &mut SuiteReport) -> Result<()> {
    oracle_suite(c, r, "pairs", true)
}

fn oracle_functions(c: &CheckConfig, r: &mut SuiteReport) -> Result<()> {
    oracle_suite(c, r, "functions", true)
}

fn oracle_props(c: &CheckConfig, r: &mut SuiteReport) -> Result<()> {
    oracle_suite(c, r, "props", false)
}
