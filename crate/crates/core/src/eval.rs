//! Evaluator for the expression language. Every value prints in a form that
//! evaluates back to an equal value.

use std::collections::HashMap;
use std::fmt;

use num_rational::Rational64;
use thiserror::Error;

use crate::demo;
use crate::domain::{self, Atom, DomainKind};
use crate::error::MagmaError;
use crate::kernel::{self, intersect, subset, Element, Magma};
use crate::ordinal::Ordinal;
use crate::pair::{union2_equality_case, Seeds, Slot, UnionEqualityCase};
use crate::relation::{self, Classification, Relation};
use crate::separation::{self, ClassDescriptor, Predicate, Verdict, Witness};
use crate::sexp::{self, ParseError, Pos, Sexp};
use crate::tower::{CountGenFun, MagNat, TailRule, Tower, Variant};

pub const DEFAULT_BUDGET: usize = 1000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Value {
    Atom(Atom),
    Magma(Magma),
    Bool(bool),
    Ordinal(Ordinal),
    Nat(MagNat),
    Tuple(Vec<Value>),
    Empty,
    Relation(Relation),
    Class(ClassDescriptor),
    CountGen(CountGenFun),
    Case(UnionEqualityCase),
    Classification(Classification),
    Verdict(Verdict),
    /// `call` is the `(demo ...)` form that rebuilds the witness.
    Witness {
        call: String,
        witness: Witness,
    },
}

impl Value {
    fn kind(&self) -> &'static str {
        match self {
            Value::Atom(_) => "atom",
            Value::Magma(_) => "magma",
            Value::Bool(_) => "boolean",
            Value::Ordinal(_) => "ordinal",
            Value::Nat(_) => "natural",
            Value::Tuple(_) => "tuple",
            Value::Empty => "empty",
            Value::Relation(_) => "relation",
            Value::Class(_) => "class",
            Value::CountGen(_) => "countably generated function",
            Value::Case(_) => "case",
            Value::Classification(_) => "classification",
            Value::Verdict(_) => "verdict",
            Value::Witness { .. } => "witness",
        }
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Atom(a) => a.fmt(f),
            Value::Magma(m) => m.fmt(f),
            Value::Bool(b) => b.fmt(f),
            Value::Ordinal(o) => o.fmt(f),
            Value::Nat(n) => n.fmt(f),
            Value::Tuple(vs) => {
                f.write_str("(values")?;
                for v in vs {
                    write!(f, " {v}")?;
                }
                f.write_str(")")
            }
            Value::Empty => f.write_str("empty"),
            Value::Relation(r) => r.fmt(f),
            Value::Class(c) => c.fmt(f),
            Value::CountGen(g) => g.fmt(f),
            Value::Case(c) => c.fmt(f),
            Value::Classification(c) => c.fmt(f),
            Value::Verdict(v) => v.fmt(f),
            Value::Witness { call, witness } => {
                f.write_str(call)?;
                for line in witness.to_string().lines() {
                    write!(f, "\n; {line}")?;
                }
                Ok(())
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EvalErrorKind {
    #[error("{0}")]
    Magma(#[from] MagmaError),
    #[error("expected {expected}, got {got}")]
    Type { expected: &'static str, got: &'static str },
    #[error("{0}")]
    Syntax(String),
    #[error("unbound name {0}")]
    Unbound(String),
    #[error("{0} is already bound")]
    Rebind(String),
    #[error("unknown form {0}")]
    UnknownHead(String),
    #[error("unknown demo {0}")]
    UnknownDemo(String),
}

/// An evaluation failure and the sub-expression that raised it.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{pos}: {kind} in {expr}")]
pub struct EvalError {
    pub kind: EvalErrorKind,
    pub expr: String,
    pub pos: Pos,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error at {0}")]
    Parse(#[from] ParseError),
    #[error("{0}")]
    Eval(#[from] EvalError),
}

type Res<T> = std::result::Result<T, EvalError>;

fn err<T>(e: &Sexp, kind: impl Into<EvalErrorKind>) -> Res<T> {
    Err(EvalError { kind: kind.into(), expr: e.to_string(), pos: e.pos() })
}

fn syntax<T>(e: &Sexp, msg: impl Into<String>) -> Res<T> {
    err(e, EvalErrorKind::Syntax(msg.into()))
}

/// Evaluation context: the active domain, its seeds, and top-level bindings.
pub struct Session {
    domain: DomainKind,
    seeds: Option<Seeds>,
    tower: Option<Tower>,
    globals: HashMap<String, Value>,
}

impl Session {
    /// A session over `domain` with its default seeds, if it has any.
    pub fn new(domain: DomainKind) -> Session {
        Session::with_seeds(domain, Seeds::for_domain(domain).ok())
    }

    pub fn with_seeds(domain: DomainKind, seeds: Option<Seeds>) -> Session {
        Session { domain, tower: seeds.as_ref().map(|s| Tower::new(s.a0())), seeds, globals: HashMap::new() }
    }

    pub fn domain(&self) -> DomainKind {
        self.domain
    }

    pub fn seeds(&self) -> Option<&Seeds> {
        self.seeds.as_ref()
    }

    pub fn lookup(&self, name: &str) -> Option<&Value> {
        self.globals.get(name)
    }

    /// Parse and evaluate every expression in `text`.
    pub fn eval_str(&mut self, text: &str) -> Result<Vec<Value>, Error> {
        let exprs = sexp::parse_all(text)?;
        let mut out = Vec::with_capacity(exprs.len());
        for e in &exprs {
            out.push(self.eval_top(e)?);
        }
        Ok(out)
    }

    /// Evaluate one top-level form; `(let name e)` binds globally.
    pub fn eval_top(&mut self, e: &Sexp) -> Res<Value> {
        if e.head() == Some("let") {
            let items = e.as_list().expect("head implies list");
            if let [_, Sexp::Atom { text, .. }, body] = items {
                let v = self.eval(body, &Scope::default())?;
                return self.bind(e, text, v);
            }
        }
        self.eval(e, &Scope::default())
    }

    fn bind(&mut self, e: &Sexp, name: &str, v: Value) -> Res<Value> {
        check_name(e, name)?;
        if self.globals.contains_key(name) {
            return err(e, EvalErrorKind::Rebind(name.into()));
        }
        self.globals.insert(name.to_string(), v.clone());
        Ok(v)
    }

    fn seeds_for(&self, e: &Sexp) -> Res<&Seeds> {
        self.seeds.as_ref().ok_or_else(|| EvalError {
            kind: MagmaError::SeedsUnavailable(self.domain).into(),
            expr: e.to_string(),
            pos: e.pos(),
        })
    }

    fn tower_for(&self, e: &Sexp) -> Res<&Tower> {
        self.seeds_for(e)?;
        Ok(self.tower.as_ref().expect("tower exists with seeds"))
    }

    pub fn eval(&self, e: &Sexp, scope: &Scope) -> Res<Value> {
        match e {
            Sexp::Atom { text, .. } => self.eval_symbol(e, text, scope),
            Sexp::List { items, .. } => {
                let Some(head) = items.first().and_then(Sexp::as_atom) else {
                    return syntax(e, "expected a form with a symbol head");
                };
                self.eval_form(e, head, &items[1..], scope)
            }
        }
    }

    fn eval_symbol(&self, e: &Sexp, text: &str, scope: &Scope) -> Res<Value> {
        if let Some(v) = scope.get(text).or_else(|| self.globals.get(text)) {
            return Ok(v.clone());
        }
        Ok(match text {
            "true" => Value::Bool(true),
            "false" => Value::Bool(false),
            "empty" => Value::Empty,
            "intended" => Value::Classification(Classification::Intended),
            "collateral-pair" => Value::Classification(Classification::CollateralPair),
            "collateral-non-pair" => Value::Classification(Classification::CollateralNonPair),
            "not-element" => Value::Classification(Classification::NotElement),
            _ if text.parse::<i64>().is_ok() => return syntax(e, "a bare number is not a value"),
            _ => return err(e, EvalErrorKind::Unbound(text.into())),
        })
    }

    fn magma(&self, e: &Sexp, scope: &Scope) -> Res<Magma> {
        match self.eval(e, scope)? {
            Value::Magma(m) => Ok(m),
            Value::Nat(n) => Ok(n.value),
            other => type_error(e, "magma", &other),
        }
    }

    fn element(&self, e: &Sexp, scope: &Scope) -> Res<Element> {
        match self.eval(e, scope)? {
            Value::Atom(a) => Ok(Element::Atom(a)),
            Value::Magma(m) => Ok(Element::Magma(m)),
            Value::Nat(n) => Ok(Element::Magma(n.value)),
            other => type_error(e, "atom or magma", &other),
        }
    }

    fn atom(&self, e: &Sexp, scope: &Scope) -> Res<Atom> {
        match self.eval(e, scope)? {
            Value::Atom(a) => Ok(a),
            other => type_error(e, "atom", &other),
        }
    }

    fn relation(&self, e: &Sexp, scope: &Scope) -> Res<Relation> {
        match self.eval(e, scope)? {
            Value::Relation(r) => Ok(r),
            other => type_error(e, "relation", &other),
        }
    }

    fn class(&self, e: &Sexp, scope: &Scope) -> Res<ClassDescriptor> {
        match self.eval(e, scope)? {
            Value::Class(c) => Ok(c),
            other => type_error(e, "class", &other),
        }
    }

    fn ordinal(&self, e: &Sexp, scope: &Scope) -> Res<Ordinal> {
        match self.eval(e, scope)? {
            Value::Ordinal(o) => Ok(o),
            Value::Nat(n) if n.variant == Variant::Primary => Ok(Ordinal::finite(n.n)),
            other => type_error(e, "ordinal or natural", &other),
        }
    }

    fn magmas(&self, args: &[Sexp], scope: &Scope) -> Res<Vec<Magma>> {
        args.iter().map(|a| self.magma(a, scope)).collect()
    }

    fn in_domain(&self, e: &Sexp, m: &Magma) -> Res<()> {
        if m.domain() != self.domain {
            return err(e, MagmaError::DomainMismatch(self.domain, m.domain()));
        }
        Ok(())
    }

    fn eval_form(&self, e: &Sexp, head: &str, args: &[Sexp], scope: &Scope) -> Res<Value> {
        let lift = |r: Result<Value, MagmaError>| r.or_else(|m| err(e, m));
        let magma_or_empty = |m: Option<Magma>| m.map_or(Value::Empty, Value::Magma);
        match head {
            "at" => self.atom_literal(e, args).map(Value::Atom),
            "below" => {
                let [a] = arity(e, args)?;
                Ok(Value::Atom(domain::strictly_below(&self.atom(a, scope)?)))
            }
            "ai" => {
                let atoms = args.iter().map(|a| self.atom(a, scope)).collect::<Res<Vec<_>>>()?;
                lift(Magma::atom_ideal(atoms).map(Value::Magma))
            }
            "mi" => {
                let gens = self.magmas(args, scope)?;
                lift(Magma::magma_ideal(gens).map(Value::Magma))
            }
            "pr" => {
                let [x] = arity(e, args)?;
                Ok(Value::Magma(kernel::pr_element(&self.element(x, scope)?)))
            }
            "pr^" => {
                let [n, x] = arity(e, args)?;
                let n = number::<usize>(n)?;
                if n == 0 {
                    return self.eval(x, scope);
                }
                let first = kernel::pr_element(&self.element(x, scope)?);
                Ok(Value::Magma(kernel::pr_iter(n - 1, &first)))
            }
            "union" => {
                let ms = self.magmas(args, scope)?;
                if ms.is_empty() {
                    return syntax(e, "union needs at least one argument");
                }
                lift(kernel::union_all(&ms).map(Value::Magma))
            }
            "inter" => {
                let ms = self.magmas(args, scope)?;
                let Some((first, rest)) = ms.split_first() else {
                    return syntax(e, "inter needs at least one argument");
                };
                let meet = rest.iter().try_fold(first.clone(), |m, x| intersect(&m, x));
                Ok(magma_or_empty(meet))
            }
            "subset?" => {
                let [x, y] = arity(e, args)?;
                Ok(Value::Bool(subset(&self.magma(x, scope)?, &self.magma(y, scope)?)))
            }
            "eq?" => {
                let [x, y] = arity(e, args)?;
                let as_magma = |v: &Value| match v {
                    Value::Magma(m) => Some(m.clone()),
                    Value::Nat(n) => Some(n.value.clone()),
                    _ => None,
                };
                let (a, b) = (self.eval(x, scope)?, self.eval(y, scope)?);
                Ok(Value::Bool(match (as_magma(&a), as_magma(&b)) {
                    (Some(m), Some(n)) => kernel::equal(&m, &n),
                    _ => a == b,
                }))
            }
            "in?" => {
                let [z, x] = arity(e, args)?;
                Ok(Value::Bool(kernel::member(&self.element(z, scope)?, &self.magma(x, scope)?)))
            }
            "level" => {
                let [x] = arity(e, args)?;
                Ok(Value::Ordinal(self.magma(x, scope)?.level()))
            }
            "pair" => {
                let [x, y] = arity(e, args)?;
                let s = self.seeds_for(e)?;
                let (x, y) = (self.magma(x, scope)?, self.magma(y, scope)?);
                lift(s.pair(&x, &y).map(|p| Value::Magma(p.whole)))
            }
            "tuple" => {
                let s = self.seeds_for(e)?;
                let xs = self.magmas(args, scope)?;
                lift(s.tuple(&xs).map(Value::Magma))
            }
            "pair?" => {
                let [x] = arity(e, args)?;
                Ok(Value::Bool(self.seeds_for(e)?.is_pair(&self.magma(x, scope)?)))
            }
            "fst" | "snd" => {
                let [x] = arity(e, args)?;
                let (a, b) = self.seeds_for(e)?.extract_pair(&self.magma(x, scope)?).or_else(|m| err(e, m))?;
                Ok(Value::Magma(if head == "fst" { a } else { b }))
            }
            "untuple" => {
                let [x, n] = arity(e, args)?;
                let n = number::<usize>(n)?;
                let s = self.seeds_for(e)?;
                lift(
                    s.extract_tuple(&self.magma(x, scope)?, n)
                        .map(|xs| Value::Tuple(xs.into_iter().map(Value::Magma).collect())),
                )
            }
            "values" => Ok(Value::Tuple(args.iter().map(|a| self.eval(a, scope)).collect::<Res<_>>()?)),
            "case=" => {
                let [x, y, x2, y2] = arity(e, args)?;
                let [x, y, x2, y2] = [x, y, x2, y2].map(|a| self.magma(a, scope));
                Ok(Value::Case(union2_equality_case(&x?, &y?, &x2?, &y2?)))
            }
            "case" => case_literal(e, args).map(Value::Case),
            "rel" => {
                let [list] = arity(e, args)?;
                let Some(items) = list.as_list() else {
                    return syntax(list, "expected ((z w) ...)");
                };
                let mut pairs = Vec::with_capacity(items.len());
                for item in items {
                    match item.as_list() {
                        Some([z, w]) => pairs.push((self.magma(z, scope)?, self.magma(w, scope)?)),
                        _ => return syntax(item, "expected (z w)"),
                    }
                }
                for (z, w) in &pairs {
                    self.in_domain(e, z)?;
                    self.in_domain(e, w)?;
                }
                lift(Relation::new(self.seeds_for(e)?, pairs).map(Value::Relation))
            }
            "prod" => {
                let [x, y] = arity(e, args)?;
                let s = self.seeds_for(e)?;
                lift(relation::product(s, &self.magma(x, scope)?, &self.magma(y, scope)?).map(Value::Relation))
            }
            "dom" | "ran" => {
                let [r] = arity(e, args)?;
                let r = self.relation(r, scope)?;
                Ok(Value::Magma(if head == "dom" { r.dom() } else { r.ran() }))
            }
            "classify" => {
                let [r, x] = arity(e, args)?;
                Ok(Value::Classification(self.relation(r, scope)?.classify(&self.magma(x, scope)?)))
            }
            "semifun?" => {
                let [r] = arity(e, args)?;
                Ok(Value::Bool(self.relation(r, scope)?.is_semifunction()))
            }
            "fun?" => {
                let [r] = arity(e, args)?;
                lift(self.relation(r, scope)?.is_function().map(Value::Bool))
            }
            "apply" => {
                let [r, z] = arity(e, args)?;
                lift(self.relation(r, scope)?.apply(&self.magma(z, scope)?).map(Value::Magma))
            }
            "slice" => {
                let [r, z] = arity(e, args)?;
                Ok(magma_or_empty(self.relation(r, scope)?.slice(&self.magma(z, scope)?)))
            }
            "nat" | "nat*" => {
                let [n] = arity(e, args)?;
                let variant = if head == "nat" { Variant::Primary } else { Variant::Alt };
                lift(self.tower_for(e)?.nat(number(n)?, variant).map(Value::Nat))
            }
            "ord" => {
                let [q, r] = arity(e, args)?;
                Ok(Value::Ordinal(Ordinal::new(number(q)?, number(r)?)))
            }
            "ord+" => {
                let [a, b] = arity(e, args)?;
                let sum = self.ordinal(a, scope)?.checked_add(self.ordinal(b, scope)?);
                lift(sum.map(Value::Ordinal))
            }
            "ord<" => {
                let [a, b] = arity(e, args)?;
                match (self.eval(a, scope)?, self.eval(b, scope)?) {
                    (Value::Nat(m), Value::Nat(n)) => lift(self.tower_for(e)?.ord_less(&m, &n).map(Value::Bool)),
                    _ => {
                        let (x, y) = (self.ordinal(a, scope)?, self.ordinal(b, scope)?);
                        Ok(Value::Bool((x.q, x.r) < (y.q, y.r)))
                    }
                }
            }
            "cg" => self.countgen(e, args, scope).map(Value::CountGen),
            "cg-apply" => {
                let [f, z] = arity(e, args)?;
                let f = match self.eval(f, scope)? {
                    Value::CountGen(f) => f,
                    other => return type_error(f, "countably generated function", &other),
                };
                lift(f.apply(&self.magma(z, scope)?).map(Value::Magma))
            }
            "class" => {
                let [roots] = arity(e, args)?;
                match roots.as_list() {
                    Some([h, rest @ ..]) if h.as_atom() == Some("roots") => {
                        let roots = self.magmas(rest, scope)?;
                        lift(ClassDescriptor::new(roots).map(Value::Class))
                    }
                    _ => syntax(roots, "expected (roots e ...)"),
                }
            }
            "in-class?" => {
                let [c, x] = arity(e, args)?;
                Ok(Value::Bool(self.class(c, scope)?.contains(&self.magma(x, scope)?)))
            }
            "separate" => {
                let [c, u] = arity(e, args)?;
                Ok(magma_or_empty(self.class(c, scope)?.separate(&self.magma(u, scope)?)))
            }
            "magmatic?" => self.magmatic(e, args, scope).map(Value::Verdict),
            "refuted" => {
                let [x, y] = arity(e, args)?;
                Ok(Value::Verdict(Verdict::Refuted { x: self.magma(x, scope)?, y: self.magma(y, scope)? }))
            }
            "unrefuted" => {
                let [n] = arity(e, args)?;
                Ok(Value::Verdict(Verdict::Unrefuted { budget: number(n)? }))
            }
            "demo" => self.demo(e, args, scope),
            "let" => self.let_form(e, args, scope),
            other => err(e, EvalErrorKind::UnknownHead(other.into())),
        }
    }

    fn atom_literal(&self, e: &Sexp, args: &[Sexp]) -> Res<Atom> {
        let a = parse_atom(e, args)?;
        if a.kind() != self.domain {
            return err(e, MagmaError::DomainMismatch(self.domain, a.kind()));
        }
        Ok(a)
    }

    fn countgen(&self, e: &Sexp, args: &[Sexp], scope: &Scope) -> Res<CountGenFun> {
        let [prefix, tail] = arity(e, args)?;
        let prefix = match prefix.as_list() {
            Some([h, rest @ ..]) if h.as_atom() == Some("prefix") => self.magmas(rest, scope)?,
            _ => return syntax(prefix, "expected (prefix e ...)"),
        };
        let tail = match (tail.head(), tail.as_list()) {
            (Some("const"), Some([_, m])) => TailRule::Constant(self.magma(m, scope)?),
            (Some("pr-tower"), Some([_, m])) => TailRule::PrTower(self.magma(m, scope)?),
            (Some("shift"), Some([_, k])) => TailRule::Shift(number(k)?),
            _ => return syntax(tail, "expected (const e), (pr-tower e) or (shift k)"),
        };
        CountGenFun::new(self.seeds_for(e)?, prefix, tail).or_else(|m| err(e, m))
    }

    fn magmatic(&self, e: &Sexp, args: &[Sexp], scope: &Scope) -> Res<Verdict> {
        let Some((pred, flags)) = args.split_first() else {
            return syntax(e, "expected (magmatic? pred [--budget N] [--seed S])");
        };
        let (mut budget, mut seed) = (DEFAULT_BUDGET, 0u64);
        let mut it = flags.iter();
        while let Some(flag) = it.next() {
            let Some(v) = it.next() else {
                return syntax(flag, "flag without a value");
            };
            match flag.as_atom() {
                Some("--budget") => budget = number(v)?,
                Some("--seed") => seed = number(v)?,
                _ => return syntax(flag, "expected --budget or --seed"),
            }
        }
        let p = match (pred.head(), pred.as_list()) {
            (_, None) if pred.as_atom() == Some("pair?") => Predicate::IsPair(self.seeds_for(e)?.clone()),
            (Some("in-class"), Some([_, c])) => Predicate::InClass(self.class(c, scope)?),
            (Some("equal-to"), Some([_, y])) => Predicate::EqualTo(self.magma(y, scope)?),
            _ => return syntax(pred, "expected pair?, (in-class c) or (equal-to e)"),
        };
        Ok(separation::magmatic_condition_sampler(&p, budget, seed))
    }

    fn demo(&self, e: &Sexp, args: &[Sexp], scope: &Scope) -> Res<Value> {
        let Some((name, rest)) = args.split_first() else {
            return syntax(e, "expected (demo name arg ...)");
        };
        let Some(name) = name.as_atom() else {
            return syntax(name, "demo name must be a symbol");
        };
        let ms = self.magmas(rest, scope)?;
        let (used, witness) = match demo::run(name, self.domain, self.seeds.as_ref(), &ms) {
            None => return err(e, EvalErrorKind::UnknownDemo(name.into())),
            Some(r) => r.or_else(|m| err(e, m))?,
        };
        let mut call = format!("(demo {name}");
        for m in &used {
            call.push_str(&format!(" {m}"));
        }
        call.push(')');
        Ok(Value::Witness { call, witness })
    }

    /// `(let ((name e) ...) body)`: sequential local bindings.
    fn let_form(&self, e: &Sexp, args: &[Sexp], scope: &Scope) -> Res<Value> {
        let [bindings, body] = arity(e, args)?;
        let Some(items) = bindings.as_list() else {
            return syntax(bindings, "expected ((name e) ...)");
        };
        let mut inner = scope.clone();
        for item in items {
            match item.as_list() {
                Some([Sexp::Atom { text, .. }, value]) => {
                    check_name(item, text)?;
                    let v = self.eval(value, &inner)?;
                    inner.vars.push((text.clone(), v));
                }
                _ => return syntax(item, "expected (name e)"),
            }
        }
        self.eval(body, &inner)
    }
}

/// Local bindings, innermost last.
#[derive(Debug, Clone, Default)]
pub struct Scope {
    vars: Vec<(String, Value)>,
}

impl Scope {
    fn get(&self, name: &str) -> Option<&Value> {
        self.vars.iter().rev().find(|(n, _)| n == name).map(|(_, v)| v)
    }
}

const RESERVED: &[&str] = &["true", "false", "empty", "pair?"];

fn check_name(e: &Sexp, name: &str) -> Res<()> {
    let numeric = name.parse::<i64>().is_ok();
    let classification = ["intended", "collateral-pair", "collateral-non-pair", "not-element"].contains(&name);
    if numeric || classification || RESERVED.contains(&name) {
        return syntax(e, format!("{name} cannot be bound"));
    }
    Ok(())
}

fn type_error<T>(e: &Sexp, expected: &'static str, got: &Value) -> Res<T> {
    err(e, EvalErrorKind::Type { expected, got: got.kind() })
}

fn arity<'a, const N: usize>(e: &Sexp, args: &'a [Sexp]) -> Res<&'a [Sexp; N]> {
    args.try_into()
        .or_else(|_| syntax(e, format!("expected {N} argument{}, got {}", if N == 1 { "" } else { "s" }, args.len())))
}

fn number<T: std::str::FromStr>(e: &Sexp) -> Res<T> {
    match e.as_atom().map(str::parse) {
        Some(Ok(n)) => Ok(n),
        _ => syntax(e, "expected a number"),
    }
}

/// `(at tag k n)`, `(at plane x y)`, `(at qdup p/q copy)`.
pub fn parse_atom(e: &Sexp, args: &[Sexp]) -> Res<Atom> {
    let [kind, a, b] = arity(e, args)?;
    match kind.as_atom() {
        Some("tag") => Ok(Atom::tag(number(a)?, number(b)?)),
        Some("plane") => Ok(Atom::plane(number(a)?, number(b)?)),
        Some("qdup") => {
            let q = match a.as_atom().map(str::parse::<Rational64>) {
                Some(Ok(q)) => q,
                _ => return syntax(a, "expected a rational p/q"),
            };
            let copy: u8 = number(b)?;
            if copy > 1 {
                return syntax(b, "copy must be 0 or 1");
            }
            Ok(Atom::qdup(*q.numer(), *q.denom(), copy))
        }
        _ => syntax(kind, "expected tag, plane or qdup"),
    }
}

fn case_literal(e: &Sexp, args: &[Sexp]) -> Res<UnionEqualityCase> {
    let slot = |s: &Sexp, primed: bool| match (s.as_atom(), primed) {
        (Some("x"), false) | (Some("x'"), true) => Ok(Slot::First),
        (Some("y"), false) | (Some("y'"), true) => Ok(Slot::Second),
        _ => syntax(s, "expected x, y, x' or y'"),
    };
    match args {
        [t] if t.as_atom() == Some("I") => Ok(UnionEqualityCase::Same),
        [t] if t.as_atom() == Some("II") => Ok(UnionEqualityCase::Crossed),
        [t] if t.as_atom() == Some("unequal") => Ok(UnionEqualityCase::Unequal),
        [t, eq, sub] if t.as_atom() == Some("III") => match (eq.as_list(), sub.as_list()) {
            (Some([h1, l, r]), Some([h2, _, _])) if h1.as_atom() == Some("=") && h2.as_atom() == Some("sub") => {
                Ok(UnionEqualityCase::Absorbed { left: slot(l, false)?, right: slot(r, true)? })
            }
            _ => syntax(e, "expected (case III (= x x') (sub y y'))"),
        },
        _ => syntax(e, "expected (case I), (case II), (case III ...) or (case unequal)"),
    }
}

/// Evaluate `text` in a fresh session and render each result on its own line.
pub fn eval_to_string(domain: DomainKind, text: &str) -> Result<String, Error> {
    let mut s = Session::new(domain);
    let vals = s.eval_str(text)?;
    Ok(vals.iter().map(Value::to_string).collect::<Vec<_>>().join("\n"))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(text: &str) -> Result<String, Error> {
        eval_to_string(DomainKind::TaggedInt, text)
    }

    fn kind_of(text: &str) -> EvalErrorKind {
        match run(text) {
            Err(Error::Eval(e)) => e.kind,
            other => panic!("expected an eval error, got {other:?}"),
        }
    }

    #[test]
    fn kernel_queries() {
        assert_eq!(run("(subset? (pr (at tag 0 3)) (pr (at tag 0 5)))").unwrap(), "true");
        assert_eq!(run("(pr (at tag 0 3))").unwrap(), "(ai (at tag 0 3))");
        assert_eq!(run("(level (pr^ 3 (at tag 0 0)))").unwrap(), "(ord 0 3)");
        assert_eq!(run("(inter (ai (at tag 0 1)) (ai (at tag 1 1)))").unwrap(), "empty");
        assert_eq!(
            kind_of("(union (pr (at tag 0 0)) (pr (pr (at tag 0 0))))"),
            EvalErrorKind::Magma(MagmaError::KindMismatch)
        );
    }

    #[test]
    fn bindings_and_pairs() {
        let out =
            run("(let x (ai (at tag 2 1))) (let y (ai (at tag 3 1))) (eq? (pair x y) (pair x y)) (fst (pair x y))");
        assert_eq!(out.unwrap().lines().collect::<Vec<_>>()[2..], ["true", "(ai (at tag 2 1))"]);
        assert_eq!(kind_of("(let x (ai (at tag 2 1))) (let x (ai (at tag 2 1)))"), EvalErrorKind::Rebind("x".into()));
        assert_eq!(run("(let ((a (at tag 2 1)) (x (pr a))) (in? a x))").unwrap(), "true");
    }

    #[test]
    fn errors_name_the_subexpression() {
        let Err(Error::Eval(e)) = run("(subset? (ai (at tag 0 1))\n  (pr z))") else { panic!() };
        assert_eq!(e.kind, EvalErrorKind::Unbound("z".into()));
        assert_eq!(e.expr, "z");
        assert_eq!(e.pos, Pos { line: 2, col: 7 });
        assert!(matches!(run("(pr"), Err(Error::Parse(ParseError::Unclosed(_)))));
        assert_eq!(
            kind_of("(at plane 0 0)"),
            MagmaError::DomainMismatch(DomainKind::TaggedInt, DomainKind::Plane).into()
        );
    }

    #[test]
    fn seedless_domain_refuses_pairs() {
        let Err(Error::Eval(e)) = eval_to_string(DomainKind::QDup, "(pair (ai (at qdup 1/2 0)) (ai (at qdup 1/2 1)))")
        else {
            panic!()
        };
        assert_eq!(e.kind, MagmaError::SeedsUnavailable(DomainKind::QDup).into());
        assert_eq!(
            eval_to_string(DomainKind::QDup, "(ai (at qdup 2/4 1) (at qdup 1/2 0))").unwrap(),
            "(ai (at qdup 1/2 0))"
        );
    }

    #[test]
    fn printed_values_evaluate_back() {
        let programs = [
            "(pair (ai (at tag 2 1)) (ai (at tag 3 1)))",
            "(nat 3)",
            "(nat* 2)",
            "(ord+ (ord 1 2) (nat 3))",
            "(untuple (tuple (ai (at tag 2 1)) (ai (at tag 3 1)) (ai (at tag 4 1))) 3)",
            "(rel (((ai (at tag 2 3)) (ai (at tag 5 1))) ((ai (at tag 2 1)) (ai (at tag 6 1)))))",
            "(classify (rel (((ai (at tag 2 3)) (ai (at tag 5 1))))) (pair (ai (at tag 2 1)) (ai (at tag 5 0))))",
            "(class (roots (ai (at tag 2 3))))",
            "(cg (prefix (ai (at tag 2 1))) (pr-tower (ai (at tag 3 0))))",
            "(case= (ai (at tag 0 5)) (ai (at tag 0 1)) (ai (at tag 0 5)) (ai (at tag 0 2)))",
            "(case= (ai (at tag 0 5)) (ai (at tag 1 1)) (ai (at tag 1 1)) (ai (at tag 0 5)))",
            "(magmatic? (equal-to (ai (at tag 2 2))) --budget 50 --seed 1)",
            "(magmatic? (in-class (class (roots (ai (at tag 2 2))))) --budget 50)",
            "(demo replacement-pr)",
            "(demo antisymmetry)",
            "(slice (rel (((ai (at tag 2 3)) (ai (at tag 5 1))))) (ai (at tag 9 9)))",
            "(below (at tag 0 0))",
        ];
        for p in programs {
            let first = run(p).unwrap();
            let again = run(&first).unwrap();
            assert_eq!(first, again, "{p}");
            let mut s = Session::new(DomainKind::TaggedInt);
            let v1 = s.eval_str(p).unwrap();
            let v2 = s.eval_str(&first).unwrap();
            assert_eq!(v1, v2, "{p}");
        }
    }
}
