//! Brute-force extensional semantics over a finite preorder of atoms.
//!
//! Every element is interned in an arena: an atom of the preorder or a set of
//! earlier elements. A magma denotes the set of its elements; `pr` of a set
//! `S` is the family of nonempty down-closed subsets of `S`. Level 1 is `pr`
//! of all atoms and level `k+1` is `pr` of level `k`.
//!
//! Nothing here calls the kernel's decision procedures. The checks compare
//! kernel answers against these denotations.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use crate::domain::{self, Atom, DomainKind};
use crate::error::{MagmaError, Result};
use crate::kernel::{self, Element, Generators, Magma};
use crate::pair::Seeds;
use crate::relation::Relation;

pub const MAX_ATOMS: usize = 8;
pub const MAX_DEPTH: usize = 3;
/// Largest down-set family one `pr` may produce.
pub const DOWNSET_CAP: usize = 1 << 18;

pub type ElemId = u32;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
enum Elem {
    Atom(usize),
    Set(Vec<ElemId>),
}

pub struct FiniteUniverse {
    name: String,
    atoms: Vec<Atom>,
    /// `leq[i][j]` iff atom `i` is below atom `j`.
    leq: Vec<Vec<bool>>,
    arena: Vec<Elem>,
    index: HashMap<Elem, ElemId>,
    levels: Vec<Vec<ElemId>>,
    pr_memo: HashMap<Vec<ElemId>, Vec<ElemId>>,
    embed_memo: HashMap<Magma, Vec<ElemId>>,
}

impl FiniteUniverse {
    /// Named universes: `tag2x2`, `plane2`, `qdup4`, or `tag:TxV`,
    /// `plane:N`, `qdup:QxC`.
    pub fn from_spec(spec: &str, depth: usize) -> Result<FiniteUniverse> {
        let bad = || MagmaError::OutOfRange(format!("unknown atom spec {spec:?}"));
        let dims = |s: &str| -> Result<(i64, i64)> {
            let (a, b) = s.split_once('x').ok_or_else(bad)?;
            Ok((a.parse().map_err(|_| bad())?, b.parse().map_err(|_| bad())?))
        };
        let atoms: Vec<Atom> = match spec {
            "tag2x2" => return FiniteUniverse::from_spec("tag:2x2", depth).map(|u| u.named(spec)),
            "plane2" => return FiniteUniverse::from_spec("plane:2", depth).map(|u| u.named(spec)),
            "qdup4" => return FiniteUniverse::from_spec("qdup:2x2", depth).map(|u| u.named(spec)),
            _ => match spec.split_once(':').ok_or_else(bad)? {
                ("tag", d) => {
                    let (tags, vals) = dims(d)?;
                    (0..tags).flat_map(|t| (0..vals).map(move |v| Atom::tag(t, v))).collect()
                }
                ("plane", n) => {
                    let n: i64 = n.parse().map_err(|_| bad())?;
                    (0..n).flat_map(|x| (0..n).map(move |y| Atom::plane(x, y))).collect()
                }
                ("qdup", d) => {
                    let (qs, copies) = dims(d)?;
                    (0..qs).flat_map(|q| (0..copies).map(move |c| Atom::qdup(q, 1, c as u8))).collect()
                }
                _ => return Err(bad()),
            },
        };
        FiniteUniverse::build(atoms, depth).map(|u| u.named(spec))
    }

    fn named(mut self, name: &str) -> Self {
        self.name = name.to_string();
        self
    }

    pub fn build(atoms: Vec<Atom>, depth: usize) -> Result<FiniteUniverse> {
        if atoms.is_empty() || atoms.len() > MAX_ATOMS {
            return Err(MagmaError::BoundExceeded(format!("{} atoms, at most {MAX_ATOMS}", atoms.len())));
        }
        if depth == 0 || depth > MAX_DEPTH {
            return Err(MagmaError::BoundExceeded(format!("depth {depth}, at most {MAX_DEPTH}")));
        }
        let leq = atoms
            .iter()
            .map(|a| atoms.iter().map(|b| domain::leq(a, b)).collect::<Result<Vec<bool>>>())
            .collect::<Result<Vec<_>>>()?;
        let mut u = FiniteUniverse {
            name: String::new(),
            leq,
            arena: Vec::new(),
            index: HashMap::new(),
            levels: Vec::new(),
            pr_memo: HashMap::new(),
            embed_memo: HashMap::new(),
            atoms,
        };
        let mut base: Vec<ElemId> = (0..u.atoms.len()).map(|i| u.intern(Elem::Atom(i))).collect();
        base.sort_unstable();
        for _ in 0..depth {
            let next = u.pr(&base)?;
            u.levels.push(next.clone());
            base = next;
        }
        Ok(u)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn atoms(&self) -> &[Atom] {
        &self.atoms
    }

    pub fn domain(&self) -> DomainKind {
        self.atoms[0].kind()
    }

    pub fn depth(&self) -> usize {
        self.levels.len()
    }

    /// Level `k` (1-based) as interned element ids.
    pub fn level(&self, k: usize) -> &[ElemId] {
        &self.levels[k - 1]
    }

    pub fn level_sizes(&self) -> Vec<usize> {
        self.levels.iter().map(Vec::len).collect()
    }

    fn intern(&mut self, e: Elem) -> ElemId {
        if let Some(&id) = self.index.get(&e) {
            return id;
        }
        let id = self.arena.len() as ElemId;
        self.arena.push(e.clone());
        self.index.insert(e, id);
        id
    }

    /// The element whose members are exactly `set`.
    pub fn intern_set(&mut self, set: &[ElemId]) -> ElemId {
        self.intern(Elem::Set(set.to_vec()))
    }

    pub fn members(&self, id: ElemId) -> Option<&[ElemId]> {
        match &self.arena[id as usize] {
            Elem::Set(s) => Some(s),
            Elem::Atom(_) => None,
        }
    }

    /// Membership-based inclusion; atoms use the preorder.
    pub fn below(&self, a: ElemId, b: ElemId) -> bool {
        match (&self.arena[a as usize], &self.arena[b as usize]) {
            (Elem::Atom(i), Elem::Atom(j)) => self.leq[*i][*j],
            (Elem::Set(x), Elem::Set(y)) => is_subset(x, y),
            _ => false,
        }
    }

    /// Nonempty down-closed subsets of `s`, each interned; sorted ids.
    pub fn pr(&mut self, s: &[ElemId]) -> Result<Vec<ElemId>> {
        if let Some(hit) = self.pr_memo.get(s) {
            return Ok(hit.clone());
        }
        let sets = self.down_sets(s)?;
        let mut ids: Vec<ElemId> = sets.into_iter().map(|d| self.intern(Elem::Set(d))).collect();
        ids.sort_unstable();
        self.pr_memo.insert(s.to_vec(), ids.clone());
        Ok(ids)
    }

    fn down_sets(&self, s: &[ElemId]) -> Result<Vec<Vec<ElemId>>> {
        let n = s.len();
        let below: Vec<Vec<bool>> = s.iter().map(|&a| s.iter().map(|&b| self.below(a, b)).collect()).collect();
        // Decide elements in order of how many lie below them, so strict
        // predecessors are always decided first.
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&i| (0..n).filter(|&j| below[j][i]).count());
        let mut out = Vec::new();
        let mut state = vec![None::<bool>; n];
        self.extend(&order, 0, &below, &mut state, &mut out, s)?;
        Ok(out)
    }

    fn extend(
        &self,
        order: &[usize],
        k: usize,
        below: &[Vec<bool>],
        state: &mut Vec<Option<bool>>,
        out: &mut Vec<Vec<ElemId>>,
        s: &[ElemId],
    ) -> Result<()> {
        if k == order.len() {
            let mut set: Vec<ElemId> = (0..s.len()).filter(|&i| state[i] == Some(true)).map(|i| s[i]).collect();
            if !set.is_empty() {
                if out.len() >= DOWNSET_CAP {
                    return Err(MagmaError::BoundExceeded(format!("more than {DOWNSET_CAP} down-sets")));
                }
                set.sort_unstable();
                out.push(set);
            }
            return Ok(());
        }
        let e = order[k];
        let forced_in = (0..s.len()).any(|j| state[j] == Some(true) && below[e][j]);
        let forced_out = (0..s.len()).any(|j| state[j] == Some(false) && below[j][e]);
        for choice in [false, true] {
            if (choice && forced_out) || (!choice && forced_in) {
                continue;
            }
            state[e] = Some(choice);
            self.extend(order, k + 1, below, state, out, s)?;
            state[e] = None;
        }
        Ok(())
    }

    fn atom_index(&self, a: &Atom) -> Result<usize> {
        self.atoms
            .iter()
            .position(|b| b == a)
            .or_else(|| {
                let rep = domain::canonical_rep(a);
                self.atoms.iter().position(|b| domain::canonical_rep(b) == rep)
            })
            .ok_or_else(|| MagmaError::OutOfRange(format!("atom {a} is not in universe {}", self.name)))
    }

    pub fn atom_id(&mut self, a: &Atom) -> Result<ElemId> {
        let i = self.atom_index(a)?;
        Ok(self.intern(Elem::Atom(i)))
    }

    /// Universe atoms below `a`.
    pub fn down_atom(&mut self, a: &Atom) -> Result<Vec<ElemId>> {
        let i = self.atom_index(a)?;
        let below: Vec<usize> = (0..self.atoms.len()).filter(|&j| self.leq[j][i]).collect();
        let mut ids: Vec<ElemId> = below.into_iter().map(|j| self.intern(Elem::Atom(j))).collect();
        ids.sort_unstable();
        Ok(ids)
    }

    /// The set of elements of `x`.
    pub fn embed(&mut self, x: &Magma) -> Result<Vec<ElemId>> {
        if let Some(hit) = self.embed_memo.get(x) {
            return Ok(hit.clone());
        }
        let mut acc = BTreeSet::new();
        match x.generators() {
            Generators::Atoms(atoms) => {
                for a in atoms {
                    acc.extend(self.down_atom(a)?);
                }
            }
            Generators::Magmas(gens) => {
                for g in gens {
                    let inner = self.embed(g)?;
                    acc.extend(self.pr(&inner)?);
                }
            }
        }
        let out: Vec<ElemId> = acc.into_iter().collect();
        self.embed_memo.insert(x.clone(), out.clone());
        Ok(out)
    }

    pub fn embed_element(&mut self, e: &Element) -> Result<ElemId> {
        match e {
            Element::Atom(a) => self.atom_id(a),
            Element::Magma(m) => {
                let s = self.embed(m)?;
                Ok(self.intern_set(&s))
            }
        }
    }

    /// Read a denotation back as a canonical presentation by its maximal
    /// members.
    pub fn decode(&self, s: &[ElemId]) -> Result<Magma> {
        let maximal: Vec<ElemId> = s
            .iter()
            .copied()
            .filter(|&a| !s.iter().any(|&b| b != a && self.below(a, b) && !self.below(b, a)))
            .collect();
        let atoms: Vec<Atom> = maximal
            .iter()
            .filter_map(|&id| match &self.arena[id as usize] {
                Elem::Atom(i) => Some(self.atoms[*i]),
                Elem::Set(_) => None,
            })
            .collect();
        if atoms.len() == maximal.len() {
            return Magma::atom_ideal(atoms);
        }
        if !atoms.is_empty() {
            return Err(MagmaError::KindMismatch);
        }
        let gens = maximal.iter().map(|&id| self.decode(self.members(id).expect("set"))).collect::<Result<Vec<_>>>()?;
        Magma::magma_ideal(gens)
    }

    /// `pr(pr²(x) ∪ pr²(a))` on denotations.
    fn ext_half(&mut self, x: &[ElemId], seed: &Atom) -> Result<Vec<ElemId>> {
        let pr1 = self.pr(x)?;
        let pr2 = self.pr(&pr1)?;
        let seed_down = self.down_atom(seed)?;
        let seed_pr2 = self.pr(&seed_down)?;
        let tagged = merge(&pr2, &seed_pr2);
        self.pr(&tagged)
    }

    /// The pair's denotation built from the defining formula on sets.
    pub fn ext_pair(&mut self, seeds: &Seeds, x: &[ElemId], y: &[ElemId]) -> Result<Vec<ElemId>> {
        let h0 = self.ext_half(x, &seeds.a0())?;
        let h1 = self.ext_half(y, &seeds.a1())?;
        Ok(merge(&h0, &h1))
    }
}

fn is_subset(x: &[ElemId], y: &[ElemId]) -> bool {
    let mut j = 0;
    for a in x {
        while j < y.len() && y[j] < *a {
            j += 1;
        }
        if j == y.len() || y[j] != *a {
            return false;
        }
    }
    true
}

fn merge(x: &[ElemId], y: &[ElemId]) -> Vec<ElemId> {
    let mut out: Vec<ElemId> = x.iter().chain(y).copied().collect();
    out.sort_unstable();
    out.dedup();
    out
}

fn intersection(x: &[ElemId], y: &[ElemId]) -> Vec<ElemId> {
    x.iter().copied().filter(|a| y.binary_search(a).is_ok()).collect()
}

fn has_atoms_and_sets(u: &FiniteUniverse, s: &[ElemId]) -> bool {
    let atoms = s.iter().filter(|&&id| matches!(u.arena[id as usize], Elem::Atom(_))).count();
    atoms != 0 && atoms != s.len()
}

/// All magmas of depth at most `depth` whose every node has at most
/// `max_gens` generators, over the universe's atoms.
pub fn small_magmas(atoms: &[Atom], depth: usize, max_gens: usize) -> Vec<Magma> {
    let mut seen = BTreeSet::new();
    let mut layer: Vec<Magma> = Vec::new();
    for combo in combinations(atoms.len(), max_gens) {
        let m = Magma::atom_ideal(combo.iter().map(|&i| atoms[i])).expect("nonempty");
        if seen.insert(m.clone()) {
            layer.push(m);
        }
    }
    let mut all = layer.clone();
    for _ in 1..depth {
        let prev = all.clone();
        for combo in combinations(prev.len(), max_gens) {
            let m = Magma::magma_ideal(combo.iter().map(|&i| prev[i].clone())).expect("nonempty");
            if m.generator_count() == combo.len() && seen.insert(m.clone()) {
                all.push(m);
            }
        }
    }
    all.sort();
    all
}

/// Nonempty index subsets of `0..n` with at most `k` members.
fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if !cur.is_empty() {
            out.push(cur.clone());
        }
        if cur.len() == k {
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    go(0, n, k, &mut cur, &mut out);
    out
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReportLine {
    pub op: &'static str,
    pub case: String,
    pub ok: bool,
}

/// Line-oriented agreement report.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct OracleReport {
    pub lines: Vec<ReportLine>,
}

impl OracleReport {
    fn push(&mut self, op: &'static str, case: String, ok: bool) {
        self.lines.push(ReportLine { op, case, ok });
    }

    pub fn mismatches(&self) -> impl Iterator<Item = &ReportLine> {
        self.lines.iter().filter(|l| !l.ok)
    }

    pub fn mismatch_count(&self) -> usize {
        self.mismatches().count()
    }

    pub fn passed(&self) -> bool {
        self.mismatch_count() == 0
    }

    pub fn extend(&mut self, other: OracleReport) {
        self.lines.extend(other.lines);
    }

    pub fn count(&self, op: &str) -> usize {
        self.lines.iter().filter(|l| l.op == op).count()
    }
}

impl fmt::Display for OracleReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.lines {
            writeln!(f, "{} {} {}", l.op, l.case, if l.ok { "OK" } else { "MISMATCH" })?;
        }
        write!(f, "cases {} mismatches {}", self.lines.len(), self.mismatch_count())
    }
}

pub const SUITES: [&str; 5] = ["kernel", "pairs", "functions", "props", "all"];

pub fn run_suite(u: &mut FiniteUniverse, suite: &str) -> Result<OracleReport> {
    match suite {
        "kernel" => check_kernel(u),
        "pairs" => check_pairs(u),
        "functions" => check_functions(u),
        "props" => check_props(u),
        "all" => {
            let mut r = check_props(u)?;
            r.extend(check_kernel(u)?);
            if Seeds::for_domain(u.domain()).is_ok() {
                r.extend(check_pairs(u)?);
                r.extend(check_functions(u)?);
            }
            Ok(r)
        }
        other => Err(MagmaError::OutOfRange(format!("unknown oracle suite {other:?}"))),
    }
}

/// Subset, equality, membership, union and intersection over every pair of
/// small magmas of depth at most `min(depth, 2)`.
pub fn check_kernel(u: &mut FiniteUniverse) -> Result<OracleReport> {
    let family = small_magmas(&u.atoms.clone(), u.depth(), 2);
    let dens = family.iter().map(|m| u.embed(m)).collect::<Result<Vec<_>>>()?;
    let mut elements: Vec<(Element, ElemId)> = Vec::new();
    for a in u.atoms.clone() {
        let id = u.atom_id(&a)?;
        elements.push((Element::Atom(a), id));
    }
    for (m, d) in family.iter().zip(&dens) {
        elements.push((Element::Magma(m.clone()), u.intern_set(d)));
    }
    let name = u.name.clone();
    let mut r = OracleReport::default();
    for (i, x) in family.iter().enumerate() {
        for (j, y) in family.iter().enumerate() {
            let case = format!("{name}#{i}.{j}");
            let (dx, dy) = (&dens[i], &dens[j]);
            r.push("subset", case.clone(), kernel::subset(x, y) == is_subset(dx, dy));
            r.push("equal", case.clone(), kernel::equal(x, y) == (dx == dy));
            let ext_union = merge(dx, dy);
            let union_ok = match kernel::union(x, y) {
                Ok(m) => !has_atoms_and_sets(u, &ext_union) && u.embed(&m)? == ext_union && u.decode(&ext_union)? == m,
                Err(MagmaError::KindMismatch) => has_atoms_and_sets(u, &ext_union),
                Err(_) => false,
            };
            r.push("union", case.clone(), union_ok);
            let ext_meet = intersection(dx, dy);
            let meet_ok = match kernel::intersect(x, y) {
                None => ext_meet.is_empty(),
                Some(m) => u.embed(&m)? == ext_meet,
            };
            r.push("intersect", case, meet_ok);
        }
        for (k, (e, id)) in elements.iter().enumerate() {
            let case = format!("{name}#{k}in{i}");
            r.push("member", case, kernel::member(e, x) == dens[i].binary_search(id).is_ok());
        }
    }
    Ok(r)
}

/// The level-1 family used for pair checks: every level-1 magma generated
/// by at most two atoms.
fn pair_family(u: &FiniteUniverse) -> Vec<Magma> {
    small_magmas(&u.atoms, 1, 2)
}

/// Pair equality, the sub-pair law, agreement of the kernel's pair with the
/// defining formula on sets, and shape recognition against the existential
/// definition.
pub fn check_pairs(u: &mut FiniteUniverse) -> Result<OracleReport> {
    let seeds = Seeds::for_domain(u.domain())?;
    let family = pair_family(u);
    let dens = family.iter().map(|m| u.embed(m)).collect::<Result<Vec<_>>>()?;
    let n = family.len();
    let mut ext = vec![vec![Vec::new(); n]; n];
    for i in 0..n {
        for j in 0..n {
            ext[i][j] = u.ext_pair(&seeds, &dens[i], &dens[j])?;
        }
    }
    let name = u.name.clone();
    let mut r = OracleReport::default();
    for i in 0..n {
        for j in 0..n {
            let p = seeds.pair(&family[i], &family[j])?.whole;
            let case = format!("{name}#{i}.{j}");
            r.push("pair-embed", case.clone(), u.embed(&p)? == ext[i][j]);
            let found = seeds.extract_pair(&p).ok() == Some((family[i].clone(), family[j].clone()));
            r.push("pair-extract", case.clone(), found);
            let half = seeds.first_half(&family[i])?;
            let half_den = u.embed(&half)?;
            let half_is_pair = ext.iter().flatten().any(|e| *e == half_den);
            r.push("pair-shape", format!("{case}.half"), seeds.is_pair(&half) == half_is_pair);
            let fam_is_pair = ext.iter().flatten().any(|e| *e == dens[i]);
            r.push("pair-shape", format!("{case}.plain"), seeds.is_pair(&family[i]) == fam_is_pair);
            for k in 0..n {
                for l in 0..n {
                    let case = format!("{name}#{i}.{j}.{k}.{l}");
                    let same_parts = dens[i] == dens[k] && dens[j] == dens[l];
                    let q = seeds.pair(&family[k], &family[l])?.whole;
                    r.push("pair-equal", case.clone(), (ext[i][j] == ext[k][l]) == same_parts);
                    r.push("pair-equal-kernel", case.clone(), kernel::equal(&p, &q) == same_parts);
                    let sub_parts = is_subset(&dens[k], &dens[i]) && is_subset(&dens[l], &dens[j]);
                    r.push("sub-pair", case.clone(), is_subset(&ext[k][l], &ext[i][j]) == sub_parts);
                    r.push("sub-pair-kernel", case, kernel::subset(&q, &p) == sub_parts);
                }
            }
        }
    }
    Ok(r)
}

/// `is_function` on every relation with one or two intended pairs over the
/// pair family, against greatest images computed on denotations.
pub fn check_functions(u: &mut FiniteUniverse) -> Result<OracleReport> {
    let seeds = Seeds::for_domain(u.domain())?;
    let family = pair_family(u);
    let dens = family.iter().map(|m| u.embed(m)).collect::<Result<Vec<_>>>()?;
    let n = family.len();
    let mut ext = vec![vec![Vec::new(); n]; n];
    for i in 0..n {
        for j in 0..n {
            ext[i][j] = u.ext_pair(&seeds, &dens[i], &dens[j])?;
        }
    }
    let name = u.name.clone();
    let mut presentations: Vec<Vec<(usize, usize)>> = Vec::new();
    for a in 0..n * n {
        presentations.push(vec![(a / n, a % n)]);
        for b in a + 1..n * n {
            presentations.push(vec![(a / n, a % n), (b / n, b % n)]);
        }
    }
    let mut r = OracleReport::default();
    for (c, pres) in presentations.iter().enumerate() {
        let rel = Relation::new(&seeds, pres.iter().map(|&(z, w)| (family[z].clone(), family[w].clone())).collect())?;
        // ⟨⟨z,w⟩⟩ ∈ R iff its denotation is inside some generator pair's.
        let in_rel = |z: usize, w: usize| pres.iter().any(|&(zi, wi)| is_subset(&ext[z][w], &ext[zi][wi]));
        let dom: Vec<usize> = (0..n).filter(|&z| (0..n).any(|w| in_rel(z, w))).collect();
        // A function is first a semi-function: equal inputs, equal outputs.
        let semi =
            pres.iter().all(|&(zi, wi)| pres.iter().all(|&(zj, wj)| dens[zi] != dens[zj] || dens[wi] == dens[wj]));
        let ext_function = semi
            && dom.iter().all(|&z| {
                let images: Vec<usize> = (0..n).filter(|&w| in_rel(z, w)).collect();
                images.iter().any(|&g| images.iter().all(|&w| is_subset(&dens[w], &dens[g])))
            });
        let case = format!("{name}#rel{c}");
        r.push("is-function", case.clone(), rel.is_function()? == ext_function);
        let mut slices_ok = true;
        for &z in &dom {
            let mut images: Vec<ElemId> = (0..n).filter(|&w| in_rel(z, w)).map(|w| u.intern_set(&dens[w])).collect();
            images.sort_unstable();
            slices_ok &= match rel.slice(&family[z]) {
                Some(s) => u.embed(&s)? == images,
                None => false,
            };
        }
        r.push("slice", case, slices_ok);
    }
    Ok(r)
}

/// Structural facts about the levels: `pr` of a level element is its set of
/// subsets within that level, and levels are pairwise disjoint.
pub fn check_props(u: &mut FiniteUniverse) -> Result<OracleReport> {
    let name = u.name.clone();
    let mut r = OracleReport::default();
    for k in 1..u.depth() {
        let level = u.levels[k - 1].clone();
        for (i, &x) in level.iter().enumerate() {
            let members = u.members(x).expect("set").to_vec();
            let direct = u.pr(&members)?;
            let filtered: Vec<ElemId> = level.iter().copied().filter(|&t| u.below(t, x)).collect();
            r.push("pr-subsets", format!("{name}#L{k}.{i}"), direct == filtered);
            let as_element = u.intern_set(&direct);
            r.push("pr-in-next-level", format!("{name}#L{k}.{i}"), u.levels[k].binary_search(&as_element).is_ok());
        }
    }
    for a in 0..u.depth() {
        for b in a + 1..u.depth() {
            let disjoint = u.levels[a].iter().all(|t| u.levels[b].binary_search(t).is_err());
            r.push("levels-disjoint", format!("{name}#L{}.L{}", a + 1, b + 1), disjoint);
        }
    }
    Ok(r)
}
