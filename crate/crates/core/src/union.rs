//! The union system `I(M1 ∨ M2)`, exchange chains and augmentation.
//!
//! A set is in the union system when it splits as `I1 ∪ I2` with `I1`
//! independent in `M1` and `I2` independent in `M2`; such a pair is a
//! [`Representation`]. Exchange chains alternate between fundamental circuits
//! of `M1` and `M2` and are applied one swap at a time.

use std::collections::{BTreeMap, HashMap, VecDeque};

use serde::Serialize;
use serde_json::{json, Value};

use crate::axioms::NamedRepresentation;
use crate::error::{Error, Result};
use crate::ground::GroundSet;
use crate::matroid::Matroid;
use crate::subset::Subset;

/// Which matroid of the pair a link or a set belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Side {
    First,
    Second,
}

impl Side {
    pub fn other(self) -> Side {
        match self {
            Side::First => Side::Second,
            Side::Second => Side::First,
        }
    }
}

/// Even chains start with a link in `M1`, odd chains with a link in `M2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    fn first_side(self) -> Side {
        match self {
            Parity::Even => Side::First,
            Parity::Odd => Side::Second,
        }
    }

    fn of_first_side(side: Side) -> Parity {
        match side {
            Side::First => Parity::Even,
            Side::Second => Parity::Odd,
        }
    }
}

/// A pair `(I1, I2)` certifying that `I1 ∪ I2` is in the union system.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Representation {
    pub first: Subset,
    pub second: Subset,
}

impl Representation {
    pub fn new(first: Subset, second: Subset) -> Self {
        Self { first, second }
    }

    /// The represented set `I1 ∪ I2`.
    pub fn set(&self) -> Subset {
        self.first | self.second
    }

    pub fn side(&self, side: Side) -> Subset {
        match side {
            Side::First => self.first,
            Side::Second => self.second,
        }
    }

    fn side_mut(&mut self, side: Side) -> &mut Subset {
        match side {
            Side::First => &mut self.first,
            Side::Second => &mut self.second,
        }
    }

    /// Drops from `I2` everything already covered by `I1`.
    pub fn normalized(self) -> Self {
        Self {
            first: self.first,
            second: self.second - self.first,
        }
    }

    pub fn is_valid(&self, m1: &Matroid, m2: &Matroid) -> bool {
        m1.is_independent(self.first) && m2.is_independent(self.second)
    }

    pub fn validate(&self, m1: &Matroid, m2: &Matroid) -> Result<()> {
        if !m1.is_independent(self.first) {
            return Err(Error::InvalidRepresentation("I1 is dependent in M1".into()));
        }
        if !m2.is_independent(self.second) {
            return Err(Error::InvalidRepresentation("I2 is dependent in M2".into()));
        }
        Ok(())
    }
}

/// An exchange chain `(y0, …, yn)` with one certificate circuit per link.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExchangeChain {
    pub parity: Parity,
    pub nodes: Vec<usize>,
    pub certs: Vec<Subset>,
}

impl ExchangeChain {
    pub fn to_json(&self, g: &GroundSet) -> Value {
        json!({
            "parity": self.parity,
            "nodes": self.nodes.iter().map(|&e| g.id(e)).collect::<Vec<_>>(),
            "certificates": self.certs.iter().map(|c| g.names(*c)).collect::<Vec<_>>(),
        })
    }

    pub fn trivial(x: usize) -> Self {
        Self {
            parity: Parity::Even,
            nodes: vec![x],
            certs: Vec::new(),
        }
    }

    /// Number of links.
    pub fn len(&self) -> usize {
        self.nodes.len().saturating_sub(1)
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn start(&self) -> usize {
        self.nodes[0]
    }

    pub fn end(&self) -> usize {
        *self.nodes.last().expect("chains are nonempty")
    }

    /// The matroid that link `i` lives in.
    pub fn link_side(&self, i: usize) -> Side {
        let first = self.parity.first_side();
        if i.is_multiple_of(2) {
            first
        } else {
            first.other()
        }
    }

    /// The contiguous subchain `(y_k, …, y_l)`.
    pub fn subchain(&self, k: usize, l: usize) -> ExchangeChain {
        assert!(k <= l && l < self.nodes.len());
        let parity = if k.is_multiple_of(2) {
            self.parity
        } else {
            Parity::of_first_side(self.parity.first_side().other())
        };
        ExchangeChain {
            parity,
            nodes: self.nodes[k..=l].to_vec(),
            certs: self.certs[k..l].to_vec(),
        }
    }
}

fn pick<'a>(m1: &'a Matroid, m2: &'a Matroid, side: Side) -> &'a Matroid {
    match side {
        Side::First => m1,
        Side::Second => m2,
    }
}

fn same_ground(m1: &Matroid, m2: &Matroid) -> Result<()> {
    if m1.ground() == m2.ground() {
        Ok(())
    } else {
        Err(Error::GroundMismatch)
    }
}

/// Fundamental circuits of every element in `I1` and `I2`, computed lazily.
struct Circuits<'a> {
    m1: &'a Matroid,
    m2: &'a Matroid,
    rep: Representation,
    cache: HashMap<(usize, Side), Option<Subset>>,
}

impl<'a> Circuits<'a> {
    fn new(m1: &'a Matroid, m2: &'a Matroid, rep: Representation) -> Self {
        Self {
            m1,
            m2,
            rep,
            cache: HashMap::new(),
        }
    }

    /// The unique circuit of `M_side` in `I_side + y`, when `I_side + y` is dependent.
    fn get(&mut self, y: usize, side: Side) -> Option<Subset> {
        let (m1, m2, rep) = (self.m1, self.m2, self.rep);
        *self.cache.entry((y, side)).or_insert_with(|| {
            let m = pick(m1, m2, side);
            let base = rep.side(side);
            if base.contains(y) {
                None
            } else {
                m.fundamental_circuit(base, y).ok().flatten()
            }
        })
    }
}

/// Checks links (X1)/(X2), the certificates, and the alternation of `y_i`.
pub fn validate_chain(m1: &Matroid, m2: &Matroid, ch: &ExchangeChain, rep: &Representation) -> Result<()> {
    let bad = |link: usize, reason: &str| {
        Err(Error::InvalidChain {
            link,
            reason: reason.to_string(),
        })
    };
    if ch.nodes.is_empty() {
        return bad(0, "empty chain");
    }
    if ch.certs.len() != ch.len() {
        return bad(0, "one certificate circuit per link is required");
    }
    if !rep.set().contains(ch.end()) {
        return bad(ch.len(), "last element is outside I1 ∪ I2");
    }
    for i in 0..ch.len() {
        let side = ch.link_side(i);
        let m = pick(m1, m2, side);
        let base = rep.side(side);
        let (yi, yj) = (ch.nodes[i], ch.nodes[i + 1]);
        let c = ch.certs[i];
        if !c.contains(yi) || !c.contains(yj) {
            return bad(i, "certificate misses a link endpoint");
        }
        if !c.is_subset(&base.with(yi)) {
            return bad(i, "certificate is not inside I + y_i");
        }
        if !m.is_circuit(c) {
            return bad(i, "certificate is not a circuit");
        }
        if i > 0 && !rep.side(ch.link_side(i - 1)).contains(yi) {
            return bad(i, "elements do not alternate between I1 and I2");
        }
    }
    Ok(())
}

fn swap_along(ch: &ExchangeChain, rep: &Representation) -> Representation {
    let mut out = *rep;
    for i in 0..ch.len() {
        let s = out.side_mut(ch.link_side(i));
        *s = s.with(ch.nodes[i]).without(ch.nodes[i + 1]);
    }
    out
}

/// Applies a valid `(I1, I2, y, x)`-chain: the result represents `(I + y) - x`,
/// or `I + y` when `x ∈ I1 ∩ I2`. A chain of length zero leaves the
/// representation unchanged.
///
/// The swaps are the single-element exchanges `I1' := (I1 + y0) - y1`, then
/// recursing on the odd tail. They are only guaranteed to stay independent on
/// shortest chains, so a non-shortest chain is first replaced by a shortest
/// chain between the same endpoints.
pub fn apply_chain(m1: &Matroid, m2: &Matroid, ch: &ExchangeChain, rep: &Representation) -> Result<Representation> {
    validate_chain(m1, m2, ch, rep)?;
    rep.validate(m1, m2)?;
    let out = swap_along(ch, rep);
    if out.is_valid(m1, m2) {
        return Ok(out);
    }
    let shortest = shortest_chain(m1, m2, rep, ch.start(), ch.end()).ok_or(Error::InvalidChain {
        link: 0,
        reason: "no shortest chain between the endpoints".into(),
    })?;
    let out = swap_along(&shortest, rep);
    if out.is_valid(m1, m2) {
        Ok(out)
    } else {
        Err(Error::InvalidChain {
            link: 0,
            reason: "exchange along the shortest chain left a dependent set".into(),
        })
    }
}

/// Chains are traced forward from a fixed first element.
struct Forward {
    /// State `(element, side of its outgoing link)`, in discovery order.
    order: Vec<(usize, Side)>,
    prev: HashMap<(usize, Side), Option<(usize, Side)>>,
}

impl Forward {
    fn chain_to(&self, circuits: &mut Circuits<'_>, state: (usize, Side), last: usize) -> ExchangeChain {
        let mut states = vec![state];
        let mut cur = state;
        while let Some(Some(p)) = self.prev.get(&cur) {
            states.push(*p);
            cur = *p;
        }
        states.reverse();
        let parity = Parity::of_first_side(states[0].1);
        let mut nodes: Vec<usize> = states.iter().map(|s| s.0).collect();
        nodes.push(last);
        let certs = states
            .iter()
            .map(|&(y, side)| circuits.get(y, side).expect("links carry circuits"))
            .collect();
        ExchangeChain { parity, nodes, certs }
    }
}

/// Breadth-first search over chains `(y, y1, …)`. `visit` sees every newly
/// reached element with the side of the link that reached it; returning
/// `true` stops the search, and the chain ending there is returned.
fn forward_search(
    circuits: &mut Circuits<'_>,
    n: usize,
    y: usize,
    mut visit: impl FnMut(&mut Circuits<'_>, usize, Side) -> bool,
) -> Option<ExchangeChain> {
    let mut fw = Forward {
        order: Vec::new(),
        prev: HashMap::new(),
    };
    let mut queue = VecDeque::new();
    for side in [Side::First, Side::Second] {
        if circuits.get(y, side).is_some() {
            fw.prev.insert((y, side), None);
            queue.push_back((y, side));
        }
    }
    let mut seen_elem = vec![false; n];
    seen_elem[y] = true;
    while let Some(state) = queue.pop_front() {
        fw.order.push(state);
        let (a, side) = state;
        let c = circuits.get(a, side).expect("queued states have circuits");
        for b in c.without(a) {
            if !seen_elem[b] {
                seen_elem[b] = true;
                if visit(circuits, b, side) {
                    return Some(fw.chain_to(circuits, state, b));
                }
            }
            let next = (b, side.other());
            if !fw.prev.contains_key(&next) && circuits.get(b, side.other()).is_some() {
                fw.prev.insert(next, Some(state));
                queue.push_back(next);
            }
        }
    }
    None
}

/// A shortest `(I1, I2, y, x)`-chain, if any.
pub fn shortest_chain(m1: &Matroid, m2: &Matroid, rep: &Representation, y: usize, x: usize) -> Option<ExchangeChain> {
    if x == y {
        return rep.set().contains(x).then(|| ExchangeChain::trivial(x));
    }
    let mut circuits = Circuits::new(m1, m2, *rep);
    forward_search(&mut circuits, m1.len(), y, |_, b, _| b == x)
}

/// Adds `y` to the represented set, if the result stays in the union system.
fn insert(m1: &Matroid, m2: &Matroid, rep: &Representation, y: usize) -> Option<Representation> {
    if rep.set().contains(y) {
        return Some(*rep);
    }
    for side in [Side::First, Side::Second] {
        let s = rep.side(side);
        if pick(m1, m2, side).is_independent(s.with(y)) {
            let mut out = *rep;
            *out.side_mut(side) = s.with(y);
            return Some(out);
        }
    }
    let mut circuits = Circuits::new(m1, m2, *rep);
    let mut terminal = None;
    let chain = forward_search(&mut circuits, m1.len(), y, |c, b, side| {
        // b ∈ I_side; it ends an augmenting chain once the other side can take it too
        let other = side.other();
        let free = c.rep.side(other).contains(b) || pick(c.m1, c.m2, other).is_independent(c.rep.side(other).with(b));
        if free {
            terminal = Some(other);
        }
        free
    })?;
    let mut doubled = *rep;
    let other = terminal.expect("terminal side recorded");
    *doubled.side_mut(other) = doubled.side(other).with(chain.end());
    let out = swap_along(&chain, &doubled);
    debug_assert!(out.is_valid(m1, m2));
    Some(out.normalized())
}

/// Decides `X ∈ I(M1 ∨ M2)` and returns a certified representation if so.
///
/// Elements of `X` are inserted in ground order by augmentation along
/// shortest exchange chains.
pub fn union_membership(m1: &Matroid, m2: &Matroid, x: Subset) -> Result<Option<Representation>> {
    same_ground(m1, m2)?;
    if !x.is_subset(&m1.all()) {
        return Err(Error::NotASubset);
    }
    let mut rep = Representation::default();
    for e in x {
        match insert(m1, m2, &rep, e) {
            Some(r) => rep = r,
            None => return Ok(None),
        }
    }
    Ok(Some(rep))
}

/// A maximal union-independent subset of `within`, grown greedily.
pub fn union_base(m1: &Matroid, m2: &Matroid, within: Subset) -> Result<Representation> {
    same_ground(m1, m2)?;
    if !within.is_subset(&m1.all()) {
        return Err(Error::NotASubset);
    }
    let mut rep = Representation::default();
    for e in within {
        if let Some(r) = insert(m1, m2, &rep, e) {
            rep = r;
        }
    }
    Ok(rep)
}

/// `A(I1, I2, x)` with one shortest witnessing chain per member.
#[derive(Debug, Clone)]
pub struct ReachabilitySet {
    pub rep: Representation,
    pub target: usize,
    pub members: Subset,
    pub chains: BTreeMap<usize, ExchangeChain>,
}

impl ReachabilitySet {
    pub fn to_json(&self, g: &GroundSet) -> Value {
        let chains: serde_json::Map<String, Value> = self
            .chains
            .iter()
            .map(|(&y, ch)| (g.id(y).to_string(), ch.to_json(g)))
            .collect();
        json!({
            "rep": NamedRepresentation::new(g, &self.rep),
            "x": g.id(self.target),
            "members": g.names(self.members),
            "chains": chains,
        })
    }

    /// Property (2): every `y ∉ A` either extends `I1` or has its `M1`
    /// fundamental circuit disjoint from `A`. Returns the first violator.
    pub fn property_two_violation(&self, m1: &Matroid) -> Option<usize> {
        (m1.all() - self.members)
            .iter()
            .find(|&y| match m1.fundamental_circuit(self.rep.first, y) {
                Ok(Some(c)) => !c.is_disjoint(&self.members),
                _ => false,
            })
    }
}

/// All `a` with an `(I1, I2, a, x)`-chain, found by breadth-first search
/// backwards from `x`; ties are broken by element order.
pub fn reachability(m1: &Matroid, m2: &Matroid, rep: &Representation, x: usize) -> Result<ReachabilitySet> {
    same_ground(m1, m2)?;
    rep.validate(m1, m2)?;
    if !rep.set().contains(x) {
        return Err(Error::Precondition("x must lie in I1 ∪ I2".into()));
    }
    let n = m1.len();
    let mut circuits = Circuits::new(m1, m2, *rep);
    // state (a, Some(side)): a chain from a to x whose first link is in `side`
    let mut next: HashMap<(usize, Option<Side>), (usize, Option<Side>)> = HashMap::new();
    let mut queue = VecDeque::from([(x, None)]);
    let mut members = Subset::singleton(x);
    let mut chains = BTreeMap::from([(x, ExchangeChain::trivial(x))]);
    let start: (usize, Option<Side>) = (x, None);
    let mut seen = std::collections::HashSet::from([start]);
    while let Some((b, out)) = queue.pop_front() {
        for side in [Side::First, Side::Second] {
            if out == Some(side) {
                continue;
            }
            for a in 0..n {
                let state = (a, Some(side));
                if seen.contains(&state) {
                    continue;
                }
                let Some(c) = circuits.get(a, side) else { continue };
                if a == b || !c.contains(b) {
                    continue;
                }
                seen.insert(state);
                next.insert(state, (b, out));
                queue.push_back(state);
                if !members.contains(a) {
                    members.insert(a);
                    let mut nodes = vec![a];
                    let mut certs = Vec::new();
                    let mut cur = state;
                    while let Some(&nx) = next.get(&cur) {
                        let (y, s) = cur;
                        certs.push(
                            circuits
                                .get(y, s.expect("inner states have sides"))
                                .expect("link circuit"),
                        );
                        nodes.push(nx.0);
                        cur = nx;
                    }
                    chains.insert(
                        a,
                        ExchangeChain {
                            parity: Parity::of_first_side(side),
                            nodes,
                            certs,
                        },
                    );
                }
            }
        }
    }
    let result = ReachabilitySet {
        rep: *rep,
        target: x,
        members,
        chains,
    };
    if let Some(y) = result.property_two_violation(m1) {
        return Err(Error::Precondition(format!(
            "reachability set violates property (2) at element {y}"
        )));
    }
    Ok(result)
}

/// Outcome of [`augment`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Augmentation {
    /// `y ∈ B \ I` with a representation of `(I + y) - x`.
    Exchanged { y: usize, rep: Representation },
    /// The reachability set missed `B \ I`; this representation covers `B + x`,
    /// so `B` was not maximal.
    NotMaximal { witness: Representation },
}

fn extend_to_bases(m1: &Matroid, m2: &Matroid, rep: &Representation) -> Representation {
    let set = rep.set();
    Representation {
        first: m1.extend_greedily(rep.first, set),
        second: m2.extend_greedily(rep.second, set),
    }
}

/// The exchange property (I3′): for `B` maximal and `x ∈ I \ B`, finds
/// `y ∈ B \ I` with `(I + y) - x` in the union system.
pub fn augment(m1: &Matroid, m2: &Matroid, b: &Representation, i: &Representation, x: usize) -> Result<Augmentation> {
    same_ground(m1, m2)?;
    b.validate(m1, m2)?;
    i.validate(m1, m2)?;
    let (bset, iset) = (b.set(), i.set());
    if !iset.contains(x) || bset.contains(x) {
        return Err(Error::Precondition("x must lie in I \\ B".into()));
    }
    let ir = extend_to_bases(m1, m2, i);
    let outside = bset - iset;
    let drop_x = |r: Representation| Representation::new(r.first.without(x), r.second.without(x)).normalized();
    for y in outside {
        for side in [Side::First, Side::Second] {
            if pick(m1, m2, side).is_independent(ir.side(side).with(y)) {
                let mut r = ir;
                *r.side_mut(side) = r.side(side).with(y);
                return Ok(Augmentation::Exchanged { y, rep: drop_x(r) });
            }
        }
    }
    let reach = reachability(m1, m2, &ir, x)?;
    let hit = reach.members & outside;
    if let Some(y) = hit.first() {
        let applied = apply_chain(m1, m2, &reach.chains[&y], &ir)?;
        return Ok(Augmentation::Exchanged {
            y,
            rep: drop_x(applied),
        });
    }
    let a = reach.members;
    let witness = Representation::new(
        (b.first - (b.first & a)) | (ir.first & a),
        (b.second - (b.second & a)) | (ir.second & a),
    );
    Ok(Augmentation::NotMaximal { witness })
}

/// Outcome of [`cochain_augment`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CochainAugmentation {
    /// `I + y` is already in the union system.
    Independent(Representation),
    /// `x ∈ I \ J` with a representation of `(I + y) - x`.
    Exchanged { x: usize, rep: Representation },
}

/// For `I, J` in the union system and `y ∈ J \ I`: either `I + y` is in the
/// union system, or some `x ∈ I \ J` has `(I + y) - x` in it. Uses chains
/// whose first element `y` is fixed.
pub fn cochain_augment(
    m1: &Matroid,
    m2: &Matroid,
    i: &Representation,
    j: Subset,
    y: usize,
) -> Result<CochainAugmentation> {
    same_ground(m1, m2)?;
    i.validate(m1, m2)?;
    let iset = i.set();
    if !j.contains(y) || iset.contains(y) {
        return Err(Error::Precondition("y must lie in J \\ I".into()));
    }
    if union_membership(m1, m2, j)?.is_none() {
        return Err(Error::Precondition("J is not in the union system".into()));
    }
    let ir = extend_to_bases(m1, m2, i);
    if let Some(r) = insert(m1, m2, &ir, y) {
        return Ok(CochainAugmentation::Independent(r));
    }
    let targets = iset - j;
    let mut circuits = Circuits::new(m1, m2, ir);
    let chain = forward_search(&mut circuits, m1.len(), y, |_, b, _| targets.contains(b))
        .ok_or_else(|| Error::Precondition("no chain from y reaches I \\ J".into()))?;
    let x = chain.end();
    let applied = apply_chain(m1, m2, &chain, &ir)?;
    let rep = Representation::new(applied.first.without(x), applied.second.without(x)).normalized();
    Ok(CochainAugmentation::Exchanged { x, rep })
}

/// The iterated union `((M1 ∨ M2) ∨ M3) ∨ …` as a single matroid.
pub fn union_matroid(ms: &[Matroid]) -> Result<Matroid> {
    let (first, rest) = ms.split_first().ok_or(Error::EmptyGround("k-fold union"))?;
    rest.iter().try_fold(first.clone(), |acc, m| Matroid::union(&acc, m))
}

fn decompose(u: &Matroid, x: Subset) -> Result<Option<Vec<Subset>>> {
    match u.union_parts() {
        None => Ok(u.is_independent(x).then(|| vec![x])),
        Some((head, last)) => {
            let Some(rep) = union_membership(head, last, x)? else {
                return Ok(None);
            };
            let mut parts = decompose(head, rep.first)?
                .ok_or_else(|| Error::InvalidRepresentation("nested union rejected its own part".into()))?;
            parts.push(rep.second);
            Ok(Some(parts))
        }
    }
}

/// Membership in `M1 ∨ … ∨ Mk`, with one pairwise disjoint independent set per matroid.
pub fn k_fold_union(ms: &[Matroid], x: Subset) -> Result<Option<Vec<Subset>>> {
    for m in ms {
        same_ground(&ms[0], m)?;
    }
    let u = union_matroid(ms)?;
    if !x.is_subset(&u.all()) {
        return Err(Error::NotASubset);
    }
    decompose(&u, x)
}

/// A maximal member of `M1 ∨ … ∨ Mk` inside `within`, decomposed per matroid.
pub fn k_fold_base(ms: &[Matroid], within: Subset) -> Result<Vec<Subset>> {
    let u = union_matroid(ms)?;
    let base = u.basis_of(within);
    decompose(&u, base)?.ok_or_else(|| Error::InvalidRepresentation("greedy base left the union system".into()))
}
