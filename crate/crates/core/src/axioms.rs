//! Brute-force checks of the independence axioms on explicit set systems.

use std::collections::{HashMap, HashSet};
use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::ground::GroundSet;
use crate::matroid::{Matroid, ENUMERATION_LIMIT};
use crate::subset::Subset;
use crate::union::{union_matroid, Representation};

/// A ground set with an explicit family of subsets.
#[derive(Debug, Clone)]
pub struct SetSystem {
    ground: Arc<GroundSet>,
    members: Vec<Subset>,
    index: HashSet<Subset>,
}

impl SetSystem {
    pub fn new(ground: Arc<GroundSet>, members: impl IntoIterator<Item = Subset>) -> Result<Self> {
        let all = ground.all();
        let mut list: Vec<Subset> = Vec::new();
        let mut index = HashSet::new();
        for m in members {
            if !m.is_subset(&all) {
                return Err(Error::NotASubset);
            }
            if index.insert(m) {
                list.push(m);
            }
        }
        list.sort();
        Ok(Self {
            ground,
            members: list,
            index,
        })
    }

    /// Members given by element ids.
    pub fn from_ids<S: AsRef<str>>(ground: Arc<GroundSet>, members: &[Vec<S>]) -> Result<Self> {
        let sets = members
            .iter()
            .map(|m| ground.subset(m.iter().map(|s| s.as_ref())))
            .collect::<Result<Vec<_>>>()?;
        Self::new(ground, sets)
    }

    /// The independent sets of `m`.
    pub fn from_matroid(m: &Matroid) -> Result<Self> {
        Self::new(m.ground_arc(), m.independent_sets()?)
    }

    /// `{I1 ∪ I2 : I1 ∈ I(M1), I2 ∈ I(M2)}`, built by pairing independent sets.
    pub fn union_family(m1: &Matroid, m2: &Matroid) -> Result<Self> {
        if m1.ground() != m2.ground() {
            return Err(Error::GroundMismatch);
        }
        let a = m1.independent_sets()?;
        let b = m2.independent_sets()?;
        let mut seen = HashSet::new();
        for x in &a {
            for y in &b {
                seen.insert(*x | *y);
            }
        }
        Self::new(m1.ground_arc(), seen)
    }

    pub fn ground(&self) -> &GroundSet {
        &self.ground
    }

    pub fn ground_arc(&self) -> Arc<GroundSet> {
        self.ground.clone()
    }

    pub fn members(&self) -> &[Subset] {
        &self.members
    }

    pub fn contains(&self, s: Subset) -> bool {
        self.index.contains(&s)
    }

    /// Members with no proper superset in the family.
    pub fn maximal(&self) -> Vec<Subset> {
        let all = self.ground.all();
        self.members
            .iter()
            .copied()
            .filter(|m| (all - *m).iter().all(|e| !self.contains(m.with(e))))
            .filter(|m| !self.members.iter().any(|o| o != m && m.is_subset(o)))
            .collect()
    }

    /// Minimal non-members.
    pub fn circuits(&self) -> Vec<Subset> {
        let all = self.ground.all();
        let mut out: HashSet<Subset> = HashSet::new();
        if !self.contains(Subset::EMPTY) {
            out.insert(Subset::EMPTY);
        }
        for m in &self.members {
            for e in all - *m {
                let c = m.with(e);
                if !self.contains(c) && c.iter().all(|f| self.contains(c.without(f))) {
                    out.insert(c);
                }
            }
        }
        let mut v: Vec<Subset> = out.into_iter().collect();
        v.sort();
        v
    }
}

/// Result of one axiom check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    /// Passed on a seeded random sample; the ground set was above the exhaustive cap.
    SampledPass,
    Fail(Witness),
    /// A prerequisite axiom failed, so this one was not evaluated.
    Precondition,
}

impl Verdict {
    pub fn passed(&self) -> bool {
        matches!(self, Verdict::Pass | Verdict::SampledPass)
    }

    pub fn label(&self) -> &'static str {
        match self {
            Verdict::Pass => "pass",
            Verdict::SampledPass => "sampled-pass",
            Verdict::Fail(_) => "fail",
            Verdict::Precondition => "precondition",
        }
    }

    pub fn witness(&self) -> Option<&Witness> {
        match self {
            Verdict::Fail(w) => Some(w),
            _ => None,
        }
    }
}

/// A violating tuple for one axiom.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    /// The empty set is not a member.
    EmptyMissing,
    /// `subset ⊆ member` is not a member.
    MissingSubset { member: Subset, subset: Subset },
    /// No `x ∈ maximal \ set` has `set + x` in the family, though `set` is not maximal.
    NoExtension { set: Subset, maximal: Subset },
    /// No `y ∈ base \ set` has `(set + y) - x` in the family.
    NoExchange { base: Subset, set: Subset, x: usize },
    /// No circuit `C'` with `z ∈ C' ⊆ (C ∪ ⋃ C_x) \ X`.
    NoElimination {
        circuit: Subset,
        family: Vec<(usize, Subset)>,
        z: usize,
    },
}

impl Witness {
    pub fn axiom(&self) -> &'static str {
        match self {
            Witness::EmptyMissing => "I1",
            Witness::MissingSubset { .. } => "I2",
            Witness::NoExtension { .. } => "I3",
            Witness::NoExchange { .. } => "I3'",
            Witness::NoElimination { .. } => "C",
        }
    }

    /// Re-evaluates the violation against a membership test.
    pub fn confirms(&self, contains: impl Fn(Subset) -> bool, all: Subset) -> bool {
        match self {
            Witness::EmptyMissing => !contains(Subset::EMPTY),
            Witness::MissingSubset { member, subset } => {
                contains(*member) && subset.is_subset(member) && !contains(*subset)
            }
            Witness::NoExtension { set, maximal } => {
                let set_maximal = (all - *set).iter().all(|e| !contains(set.with(e)));
                let max_maximal = (all - *maximal).iter().all(|e| !contains(maximal.with(e)));
                contains(*set)
                    && contains(*maximal)
                    && max_maximal
                    && !set_maximal
                    && (*maximal - *set).iter().all(|x| !contains(set.with(x)))
            }
            Witness::NoExchange { base, set, x } => {
                let max = (all - *base).iter().all(|e| !contains(base.with(e)));
                contains(*base)
                    && max
                    && contains(*set)
                    && set.contains(*x)
                    && !base.contains(*x)
                    && (*base - *set).iter().all(|y| !contains(set.with(y).without(*x)))
            }
            Witness::NoElimination { circuit, family, z } => {
                let is_circuit = |c: Subset| !contains(c) && c.iter().all(|f| contains(c.without(f)));
                let xs: Subset = family.iter().map(|(x, _)| *x).collect();
                let mut span = *circuit;
                for (_, c) in family {
                    span = span | *c;
                }
                let legal = family
                    .iter()
                    .all(|(x, c)| is_circuit(*c) && (*c & xs) == Subset::singleton(*x));
                let region = span - xs;
                is_circuit(*circuit)
                    && xs.is_subset(circuit)
                    && legal
                    && region.contains(*z)
                    && (region.without(*z)).subsets().all(|s| !is_circuit(s.with(*z)))
            }
        }
    }

    /// JSON with element ids.
    pub fn to_json(&self, g: &GroundSet) -> Value {
        match self {
            Witness::EmptyMissing => json!({ "axiom": "I1", "missing": [] }),
            Witness::MissingSubset { member, subset } => json!({
                "axiom": "I2", "member": g.names(*member), "missing": g.names(*subset)
            }),
            Witness::NoExtension { set, maximal } => json!({
                "axiom": "I3", "I": g.names(*set), "maximal": g.names(*maximal)
            }),
            Witness::NoExchange { base, set, x } => json!({
                "axiom": "I3'", "B": g.names(*base), "I": g.names(*set), "x": g.id(*x)
            }),
            Witness::NoElimination { circuit, family, z } => json!({
                "axiom": "C",
                "C": g.names(*circuit),
                "family": family.iter().map(|(x, c)| json!({"x": g.id(*x), "C_x": g.names(*c)})).collect::<Vec<_>>(),
                "z": g.id(*z),
            }),
        }
    }
}

/// Sweep limits.
#[derive(Debug, Clone, Copy)]
pub struct CheckOptions {
    /// Largest ground set swept exhaustively.
    pub exhaustive_limit: usize,
    /// Largest `|X|` in the circuit elimination sweep.
    pub elimination_limit: usize,
    pub samples: usize,
    pub seed: u64,
}

impl Default for CheckOptions {
    fn default() -> Self {
        Self {
            exhaustive_limit: 12,
            elimination_limit: 3,
            samples: 2000,
            seed: 0x5eed,
        }
    }
}

pub fn check_i1(s: &SetSystem) -> Verdict {
    if s.contains(Subset::EMPTY) {
        Verdict::Pass
    } else {
        Verdict::Fail(Witness::EmptyMissing)
    }
}

/// Closure under single deletions, which implies closure under subsets.
pub fn check_i2(s: &SetSystem) -> Verdict {
    for &m in s.members() {
        for e in m {
            if !s.contains(m.without(e)) {
                return Verdict::Fail(Witness::MissingSubset {
                    member: m,
                    subset: m.without(e),
                });
            }
        }
    }
    Verdict::Pass
}

fn down_closed(s: &SetSystem) -> bool {
    check_i1(s).passed() && check_i2(s).passed()
}

pub fn check_i3(s: &SetSystem) -> Verdict {
    if !down_closed(s) {
        return Verdict::Precondition;
    }
    let maximal = s.maximal();
    let all = s.ground().all();
    for &i in s.members() {
        if (all - i).iter().all(|e| !s.contains(i.with(e))) {
            continue;
        }
        for &m in &maximal {
            if (m - i).iter().all(|x| !s.contains(i.with(x))) {
                return Verdict::Fail(Witness::NoExtension { set: i, maximal: m });
            }
        }
    }
    Verdict::Pass
}

pub fn check_i3prime(s: &SetSystem) -> Verdict {
    if !down_closed(s) {
        return Verdict::Precondition;
    }
    for b in s.maximal() {
        for &i in s.members() {
            for x in i - b {
                if (b - i).iter().all(|y| !s.contains(i.with(y).without(x))) {
                    return Verdict::Fail(Witness::NoExchange { base: b, set: i, x });
                }
            }
        }
    }
    Verdict::Pass
}

/// Every bounded chain of members in a finite family has a maximal element,
/// so this holds for every explicit system.
pub fn check_im(_s: &SetSystem) -> Verdict {
    Verdict::Pass
}

/// Finite circuit elimination over families `{C_x : x ∈ X}` with `|X| ≤ limit`.
pub fn check_circuit_elimination(s: &SetSystem, limit: usize) -> Verdict {
    let circuits = s.circuits();
    let mut containing: HashMap<usize, Vec<Subset>> = HashMap::new();
    for &c in &circuits {
        for e in c {
            containing.entry(e).or_default().push(c);
        }
    }
    let mut cache: HashMap<(Subset, usize), bool> = HashMap::new();
    let mut has_circuit_through = |region: Subset, z: usize| -> bool {
        *cache.entry((region, z)).or_insert_with(|| {
            containing
                .get(&z)
                .is_some_and(|cs| cs.iter().any(|c| c.is_subset(&region)))
        })
    };
    for &c in &circuits {
        let elems: Vec<usize> = c.iter().collect();
        for size in 1..=limit.min(elems.len()) {
            for xs in combinations(&elems, size) {
                let xset: Subset = xs.iter().copied().collect();
                let options: Vec<Vec<Subset>> = xs
                    .iter()
                    .map(|x| {
                        containing
                            .get(x)
                            .map(|cs| {
                                cs.iter()
                                    .copied()
                                    .filter(|cx| (*cx & xset) == Subset::singleton(*x))
                                    .collect()
                            })
                            .unwrap_or_default()
                    })
                    .collect();
                if options.iter().any(|o: &Vec<Subset>| o.is_empty()) {
                    continue;
                }
                let mut pick = vec![0usize; xs.len()];
                loop {
                    let mut span = c;
                    for (k, o) in options.iter().enumerate() {
                        span = span | o[pick[k]];
                    }
                    let mut covered = Subset::EMPTY;
                    for (k, o) in options.iter().enumerate() {
                        covered = covered | o[pick[k]];
                    }
                    let region = span - xset;
                    for z in c - covered {
                        if !has_circuit_through(region, z) {
                            let family = xs
                                .iter()
                                .zip(&pick)
                                .enumerate()
                                .map(|(k, (x, p))| (*x, options[k][*p]))
                                .collect();
                            return Verdict::Fail(Witness::NoElimination { circuit: c, family, z });
                        }
                    }
                    if !advance(&mut pick, &options) {
                        break;
                    }
                }
            }
        }
    }
    Verdict::Pass
}

fn advance(pick: &mut [usize], options: &[Vec<Subset>]) -> bool {
    for k in 0..pick.len() {
        pick[k] += 1;
        if pick[k] < options[k].len() {
            return true;
        }
        pick[k] = 0;
    }
    false
}

fn combinations(elems: &[usize], k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn go(elems: &[usize], k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..elems.len() {
            cur.push(elems[i]);
            go(elems, k, i + 1, cur, out);
            cur.pop();
        }
    }
    go(elems, k, 0, &mut cur, &mut out);
    out
}

/// Per-axiom verdicts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomReport {
    pub i1: Verdict,
    pub i2: Verdict,
    pub i3: Verdict,
    pub i3prime: Verdict,
    pub im: Verdict,
    pub c: Verdict,
}

impl AxiomReport {
    pub fn verdicts(&self) -> [(&'static str, &Verdict); 6] {
        [
            ("I1", &self.i1),
            ("I2", &self.i2),
            ("I3", &self.i3),
            ("I3'", &self.i3prime),
            ("IM", &self.im),
            ("C", &self.c),
        ]
    }

    pub fn passed(&self) -> bool {
        self.verdicts().iter().all(|(_, v)| v.passed())
    }

    /// The first failing witness in axiom order.
    pub fn witness(&self) -> Option<&Witness> {
        self.verdicts().into_iter().find_map(|(_, v)| v.witness())
    }

    pub fn to_json(&self, g: &GroundSet) -> Value {
        let mut obj = serde_json::Map::new();
        for (name, v) in self.verdicts() {
            obj.insert(name.to_string(), Value::from(v.label()));
        }
        obj.insert("witness".into(), self.witness().map_or(Value::Null, |w| w.to_json(g)));
        Value::Object(obj)
    }
}

/// Runs every check on an explicit system.
pub fn is_matroid(s: &SetSystem) -> AxiomReport {
    is_matroid_with(s, &CheckOptions::default())
}

pub fn is_matroid_with(s: &SetSystem, opts: &CheckOptions) -> AxiomReport {
    let i1 = check_i1(s);
    let i2 = check_i2(s);
    let closed = i1.passed() && i2.passed();
    AxiomReport {
        i3: check_i3(s),
        i3prime: check_i3prime(s),
        im: check_im(s),
        c: if closed {
            check_circuit_elimination(s, opts.elimination_limit)
        } else {
            Verdict::Precondition
        },
        i1,
        i2,
    }
}

/// Checks an oracle matroid: exhaustively up to the cap, by seeded sampling above it.
pub fn check_matroid(m: &Matroid, opts: &CheckOptions) -> Result<AxiomReport> {
    if m.len() <= opts.exhaustive_limit.min(ENUMERATION_LIMIT) {
        return Ok(is_matroid_with(&SetSystem::from_matroid(m)?, opts));
    }
    Ok(sampled(m, opts))
}

/// The union system of a pair, checked as an explicit family.
pub fn check_union_family(m1: &Matroid, m2: &Matroid, opts: &CheckOptions) -> Result<AxiomReport> {
    if m1.len() <= opts.exhaustive_limit.min(ENUMERATION_LIMIT) {
        return Ok(is_matroid_with(&SetSystem::union_family(m1, m2)?, opts));
    }
    Ok(sampled(&union_matroid(&[m1.clone(), m2.clone()])?, opts))
}

fn greedy_max(m: &Matroid, order: &[usize], start: Subset) -> Subset {
    let mut s = start;
    for &e in order {
        if !s.contains(e) && m.is_independent(s.with(e)) {
            s.insert(e);
        }
    }
    s
}

fn is_max(m: &Matroid, s: Subset) -> bool {
    (m.all() - s).iter().all(|e| !m.is_independent(s.with(e)))
}

fn sampled(m: &Matroid, opts: &CheckOptions) -> AxiomReport {
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let contains = |s: Subset| m.is_independent(s);
    let mut report = AxiomReport {
        i1: check_i1_with(contains),
        i2: Verdict::SampledPass,
        i3: Verdict::SampledPass,
        i3prime: Verdict::SampledPass,
        im: Verdict::Pass,
        c: Verdict::SampledPass,
    };
    let mut order: Vec<usize> = m.all().iter().collect();
    for _ in 0..opts.samples {
        order.shuffle(&mut rng);
        let b1 = greedy_max(m, &order, Subset::EMPTY);
        order.shuffle(&mut rng);
        let b2 = greedy_max(m, &order, Subset::EMPTY);
        let i: Subset = b2.iter().filter(|_| rng.gen_bool(0.5)).collect();
        if report.i2.passed() && !contains(i) {
            report.i2 = Verdict::Fail(Witness::MissingSubset { member: b2, subset: i });
        }
        if !contains(i) {
            continue;
        }
        if report.i3.passed() && !is_max(m, i) && (b1 - i).iter().all(|x| !contains(i.with(x))) {
            report.i3 = Verdict::Fail(Witness::NoExtension { set: i, maximal: b1 });
        }
        let outside: Vec<usize> = (i - b1).iter().collect();
        if let Some(&x) = outside.choose(&mut rng) {
            if report.i3prime.passed() && (b1 - i).iter().all(|y| !contains(i.with(y).without(x))) {
                report.i3prime = Verdict::Fail(Witness::NoExchange { base: b1, set: i, x });
            }
        }
        if report.c.passed() {
            if let Some(w) = sampled_elimination(m, &b1, &mut rng) {
                report.c = Verdict::Fail(w);
            }
        }
    }
    report
}

fn check_i1_with(contains: impl Fn(Subset) -> bool) -> Verdict {
    if contains(Subset::EMPTY) {
        Verdict::Pass
    } else {
        Verdict::Fail(Witness::EmptyMissing)
    }
}

/// Shrinks a dependent set to a minimal one, never removing `keep`.
fn shrink(m: &Matroid, mut s: Subset, keep: usize) -> Subset {
    for e in s {
        if e != keep && !m.is_independent(s.without(e)) {
            s.remove(e);
        }
    }
    s
}

/// Circuit elimination for `|X| = 1` with circuits drawn from fundamental circuits.
fn sampled_elimination(m: &Matroid, base: &Subset, rng: &mut ChaCha8Rng) -> Option<Witness> {
    let outside: Vec<usize> = (m.all() - *base).iter().collect();
    let &e = outside.choose(rng)?;
    let c = shrink(m, base.with(e), e);
    let elems: Vec<usize> = c.iter().collect();
    let &x = elems.choose(rng)?;
    let mut order: Vec<usize> = m.all().without(x).iter().collect();
    order.shuffle(rng);
    let other = greedy_max(m, &order, Subset::EMPTY);
    if m.is_independent(other.with(x)) {
        return None;
    }
    let cx = shrink(m, other.with(x), x);
    let region = (c | cx).without(x);
    for z in c - cx {
        let j = m.basis_of(region.without(z));
        if m.is_independent(j.with(z)) {
            return Some(Witness::NoElimination {
                circuit: c,
                family: vec![(x, cx)],
                z,
            });
        }
    }
    None
}

/// Serializable form of a representation, with element ids.
#[derive(Debug, Clone, Serialize)]
pub struct NamedRepresentation {
    #[serde(rename = "I1")]
    pub first: Vec<String>,
    #[serde(rename = "I2")]
    pub second: Vec<String>,
}

impl NamedRepresentation {
    pub fn new(g: &GroundSet, rep: &Representation) -> Self {
        Self {
            first: g.names(rep.first),
            second: g.names(rep.second),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matroid::ground;

    fn sys(ids: &[&str], members: &[&[&str]]) -> SetSystem {
        let g = ground(ids);
        let m: Vec<Vec<&str>> = members.iter().map(|m| m.to_vec()).collect();
        SetSystem::from_ids(g, &m).unwrap()
    }

    #[test]
    fn i1_i2_examples() {
        let s = sys(&["a", "b"], &[&[], &["a"], &["a", "b"]]);
        let v = check_i2(&s);
        let w = v.witness().unwrap();
        assert_eq!(
            *w,
            Witness::MissingSubset {
                member: Subset::from_indices([0, 1]),
                subset: Subset::singleton(1)
            }
        );
        assert!(w.confirms(|x| s.contains(x), s.ground().all()));
        let empty = sys(&["a"], &[]);
        assert_eq!(check_i1(&empty), Verdict::Fail(Witness::EmptyMissing));
        let u = SetSystem::from_matroid(&Matroid::uniform(2, ground(&["a", "b", "c"]))).unwrap();
        assert!(check_i1(&u).passed() && check_i2(&u).passed());
    }

    #[test]
    fn i3_example() {
        let s = sys(&["a", "b", "c"], &[&[], &["a"], &["b"], &["a", "b"], &["c"]]);
        let v = check_i3(&s);
        assert_eq!(
            v,
            Verdict::Fail(Witness::NoExtension {
                set: Subset::singleton(0),
                maximal: Subset::singleton(2)
            })
        );
        assert!(v.witness().unwrap().confirms(|x| s.contains(x), s.ground().all()));
        assert_eq!(check_i3(&sys(&["a"], &[&[]])), Verdict::Pass);
    }

    #[test]
    fn i3prime_examples() {
        let s = sys(&["a", "b", "c"], &[&[], &["a"], &["b"], &["c"], &["a", "c"]]);
        let v = check_i3prime(&s);
        assert_eq!(
            v,
            Verdict::Fail(Witness::NoExchange {
                base: Subset::singleton(1),
                set: Subset::from_indices([0, 2]),
                x: 0
            })
        );
        assert!(v.witness().unwrap().confirms(|x| s.contains(x), s.ground().all()));
        let not_closed = sys(&["a", "b", "c"], &[&[], &["a"], &["b"], &["a", "c"]]);
        assert_eq!(check_i3prime(&not_closed), Verdict::Precondition);
        let u12 = SetSystem::from_matroid(&Matroid::uniform(1, ground(&["a", "b"]))).unwrap();
        assert_eq!(check_i3prime(&u12), Verdict::Pass);
    }

    #[test]
    fn circuit_elimination_examples() {
        let u13 = SetSystem::from_matroid(&Matroid::uniform(1, ground(&["a", "b", "c"]))).unwrap();
        assert_eq!(check_circuit_elimination(&u13, 3), Verdict::Pass);
        let tri = Matroid::graphic(&["u", "v", "w"], &[("x", "u", "v"), ("y", "v", "w"), ("z", "w", "u")]).unwrap();
        assert_eq!(
            check_circuit_elimination(&SetSystem::from_matroid(&tri).unwrap(), 3),
            Verdict::Pass
        );
        let free = SetSystem::from_matroid(&Matroid::free(ground(&["a", "b"]))).unwrap();
        assert!(free.circuits().is_empty());
        assert_eq!(check_circuit_elimination(&free, 3), Verdict::Pass);
        // a parallel pair plus a coloop
        let bad = sys(
            &["a", "b", "c"],
            &[&[], &["a"], &["b"], &["c"], &["a", "c"], &["b", "c"]],
        );
        let v = check_circuit_elimination(&bad, 3);
        assert!(v.passed(), "{v:?}");
    }

    #[test]
    fn aggregate() {
        let s = sys(&["a", "b"], &[&[], &["a"], &["a", "b"]]);
        let r = is_matroid(&s);
        assert!(!r.passed());
        assert_eq!(r.witness().unwrap().axiom(), "I2");
        let u = Matroid::uniform(2, ground(&["a", "b", "c", "d", "e", "f"]));
        assert!(is_matroid(&SetSystem::union_family(&u, &u).unwrap()).passed());
        let json = r.to_json(s.ground());
        assert_eq!(json["I1"], "pass");
        assert_eq!(json["I2"], "fail");
    }

    #[test]
    fn sampled_above_cap() {
        let ids: Vec<String> = (0..14).map(|i| format!("e{i}")).collect();
        let u = Matroid::uniform(5, ground(&ids));
        let opts = CheckOptions {
            samples: 100,
            ..CheckOptions::default()
        };
        let r = check_matroid(&u, &opts).unwrap();
        assert_eq!(r.i3, Verdict::SampledPass);
        assert!(r.passed());
    }

    #[test]
    fn elimination_failure_is_caught() {
        // circuits {a,b} and {b,c} but {a,c} independent and {a,b,c} minus b has no circuit
        let s = sys(&["a", "b", "c"], &[&[], &["a"], &["b"], &["c"], &["a", "c"]]);
        let v = check_circuit_elimination(&s, 3);
        let w = v.witness().expect("elimination fails");
        assert!(w.confirms(|x| s.contains(x), s.ground().all()));
    }
}
