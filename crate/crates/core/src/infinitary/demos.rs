//! Finite windows of countable unions that violate (IM) in the limit, with
//! certified growth chains.
//!
//! Each demo is a pair (or sequence) of matroids on a shared ground set that
//! grows with the window size `w`. A growth chain `J_0 ⊊ J_1 ⊊ …` certifies
//! `J_t` at window `base + t` by an explicit decomposition into independent
//! sets of the parts.

use std::collections::HashSet;
use std::sync::Arc;

use serde_json::{json, Value};

use crate::axioms::SetSystem;
use crate::error::{Error, Result};
use crate::ground::GroundSet;
use crate::infinitary::family::{minor_matches, Copies, Kind, SymbolicFamily};
use crate::matroid::Matroid;
use crate::subset::{Subset, MAX_ELEMENTS};
use crate::union::{k_fold_union, union_membership};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Demo {
    /// Circuit rows on a grid against rank-one blocks that each own a loop.
    Claim32,
    /// The countable analog of the uncountable construction; same windows as `Claim32`.
    Claim31,
    /// Countably many copies of `U_k` on a common countable set.
    Obs46a { k: usize },
    /// `U_1` on `{a_1..a_m, b_m}` for every `m`.
    Obs46b,
    /// Infinite circuits `C_1, C_2, …` against `U_1(Y_n + l_n)`; `tag` names the circuits.
    Prop22 { tag: String },
}

impl Demo {
    /// Parses a demo name; `claim31` only exists as its countable analog.
    pub fn parse(name: &str, countable_analog: bool) -> Result<Demo> {
        match name {
            "claim32" => Ok(Demo::Claim32),
            "claim31" if countable_analog => Ok(Demo::Claim31),
            "claim31" => Err(Error::Precondition(
                "claim31 has an uncountable ground set; pass --countable-analog".into(),
            )),
            "obs46a" => Ok(Demo::Obs46a { k: 1 }),
            "obs46b" => Ok(Demo::Obs46b),
            "prop22" => Ok(Demo::Prop22 { tag: "c".into() }),
            other => Err(Error::UnknownDemo(other.to_string())),
        }
    }

    /// `prop22` over a family; its circuits come from an infinitely repeated infinite-circuit summand.
    pub fn prop22(family: Option<&SymbolicFamily>) -> Result<Demo> {
        let Some(f) = family else {
            return Ok(Demo::Prop22 { tag: "c".into() });
        };
        f.validate()?;
        f.components
            .iter()
            .find(|c| c.kind == Kind::InfiniteCircuit && c.copies == Copies::Infinite)
            .map(|c| Demo::Prop22 { tag: c.tag.clone() })
            .ok_or_else(|| Error::Precondition(format!("family {} has only finitely many infinite circuits", f.name)))
    }

    pub fn name(&self) -> &'static str {
        match self {
            Demo::Claim32 => "claim32",
            Demo::Claim31 => "claim31",
            Demo::Obs46a { .. } => "obs46a",
            Demo::Obs46b => "obs46b",
            Demo::Prop22 { .. } => "prop22",
        }
    }

    fn ground_size(&self, w: usize) -> usize {
        match self {
            Demo::Claim32 | Demo::Claim31 | Demo::Prop22 { .. } => w * w + w,
            Demo::Obs46a { .. } => w,
            Demo::Obs46b => 2 * w,
        }
    }
}

/// The parts of a demo at one window, on a shared ground set.
#[derive(Debug, Clone)]
pub struct DemoWindow {
    pub window: usize,
    pub ground: Arc<GroundSet>,
    pub parts: Vec<Matroid>,
    /// Per part, the windowed infinite circuits it contains.
    pub circuit_blocks: Vec<Vec<Subset>>,
}

/// Blocks given by ids; everything else on `ground` becomes a loop.
fn on_ground(ground: &Arc<GroundSet>, blocks: Vec<Matroid>) -> Result<Matroid> {
    let mut covered = HashSet::new();
    for b in &blocks {
        covered.extend(b.ground().ids().iter().cloned());
    }
    let rest: Vec<String> = ground
        .ids()
        .iter()
        .filter(|id| !covered.contains(*id))
        .cloned()
        .collect();
    let mut parts = blocks;
    if !rest.is_empty() {
        parts.push(Matroid::loops(GroundSet::new(rest)?));
    }
    Matroid::direct_sum(&parts)?.reorder(ground.ids())
}

fn block(ids: Vec<String>, kind: BlockKind) -> Result<Matroid> {
    let g = GroundSet::new(ids)?;
    Ok(match kind {
        BlockKind::Rank1 => Matroid::uniform(1, g),
        BlockKind::Circuit => Matroid::circuit(g)?,
        BlockKind::Free => Matroid::free(g),
    })
}

#[derive(Clone, Copy)]
enum BlockKind {
    Rank1,
    Circuit,
    Free,
}

fn grid_id(i: usize, r: usize) -> String {
    format!("p{i}_{r}")
}

/// Greedy `Y_1, Y_2, …`: `Y_n` takes the lowest unused element of each `C_i`, `i <= n`.
pub fn prop22_y_sets(w: usize) -> Vec<Vec<(usize, usize)>> {
    let mut used: HashSet<(usize, usize)> = HashSet::new();
    let mut out = Vec::new();
    for n in 1..=w {
        let mut y = Vec::new();
        for i in 1..=n {
            let j = (1..).find(|j| !used.contains(&(i, *j))).expect("unbounded");
            used.insert((i, j));
            y.push((i, j));
        }
        out.push(y);
    }
    out
}

/// The construction invariants: pairwise disjoint, `|Y_n| <= n`, `Y_n` meets `C_1..C_n`.
pub fn prop22_invariants(ys: &[Vec<(usize, usize)>]) -> bool {
    let mut seen = HashSet::new();
    ys.iter().enumerate().all(|(idx, y)| {
        let n = idx + 1;
        let disjoint = y.iter().all(|e| seen.insert(*e));
        let meets = (1..=n).all(|i| y.iter().any(|&(ci, _)| ci == i));
        disjoint && y.len() <= n && meets
    })
}

/// The parts at window `w`. With `finitary`, windowed infinite circuits become free.
pub fn demo_window(demo: &Demo, w: usize, finitary: bool) -> Result<DemoWindow> {
    if w == 0 {
        return Err(Error::Precondition("window size must be at least 1".into()));
    }
    let size = demo.ground_size(w);
    if size > MAX_ELEMENTS {
        return Err(Error::Budget(format!(
            "window {w} of {} needs {size} elements, above the {MAX_ELEMENTS} limit",
            demo.name()
        )));
    }
    let rows = if finitary { BlockKind::Free } else { BlockKind::Circuit };
    let loops: Vec<String> = (1..=w).map(|n| format!("l{n}")).collect();
    match demo {
        Demo::Claim32 | Demo::Claim31 => {
            let mut ids: Vec<String> = Vec::new();
            for i in 1..=w {
                for r in 1..=w {
                    ids.push(grid_id(i, r));
                }
            }
            ids.extend(loops.iter().cloned());
            let ground = GroundSet::new(ids)?;
            let m_blocks = (1..=w)
                .map(|n| {
                    let mut b: Vec<String> = (1..=n).map(|r| grid_id(n, r)).collect();
                    b.push(format!("l{n}"));
                    block(b, BlockKind::Rank1)
                })
                .collect::<Result<Vec<_>>>()?;
            let row_ids: Vec<Vec<String>> = (1..=w).map(|r| (1..=w).map(|i| grid_id(i, r)).collect()).collect();
            let n_blocks = row_ids
                .iter()
                .map(|row| block(row.clone(), rows))
                .collect::<Result<Vec<_>>>()?;
            let blocks = if finitary {
                Vec::new()
            } else {
                row_ids
                    .iter()
                    .map(|row| ground.subset(row))
                    .collect::<Result<Vec<_>>>()?
            };
            Ok(DemoWindow {
                window: w,
                parts: vec![on_ground(&ground, m_blocks)?, on_ground(&ground, n_blocks)?],
                circuit_blocks: vec![Vec::new(), blocks],
                ground,
            })
        }
        Demo::Obs46a { k } => {
            let ground = GroundSet::new((1..=w).map(|i| format!("a_{i}")))?;
            let part = Matroid::uniform(*k, ground.clone());
            Ok(DemoWindow {
                window: w,
                parts: vec![part; w],
                circuit_blocks: vec![Vec::new(); w],
                ground,
            })
        }
        Demo::Obs46b => {
            let a: Vec<String> = (1..=w).map(|i| format!("a_{i}")).collect();
            let b: Vec<String> = (1..=w).map(|i| format!("b_{i}")).collect();
            let ground = GroundSet::new(a.iter().chain(&b).cloned())?;
            let parts = (1..=w)
                .map(|m| {
                    let mut e: Vec<String> = a[..m].to_vec();
                    e.push(b[m - 1].clone());
                    on_ground(&ground, vec![block(e, BlockKind::Rank1)?])
                })
                .collect::<Result<Vec<_>>>()?;
            Ok(DemoWindow {
                window: w,
                parts,
                circuit_blocks: vec![Vec::new(); w],
                ground,
            })
        }
        Demo::Prop22 { tag } => {
            let cid = |i: usize, j: usize| format!("{tag}{i}_{j}");
            let mut ids: Vec<String> = Vec::new();
            for i in 1..=w {
                for j in 1..=w {
                    ids.push(cid(i, j));
                }
            }
            ids.extend(loops.iter().cloned());
            let ground = GroundSet::new(ids)?;
            // Y_n meets the window for n < 2w; l_n is only present for n <= w
            let ys = prop22_y_sets(2 * w - 1);
            let m_blocks = ys
                .iter()
                .enumerate()
                .map(|(idx, y)| {
                    let mut b: Vec<String> = y
                        .iter()
                        .filter(|&&(i, j)| i <= w && j <= w)
                        .map(|&(i, j)| cid(i, j))
                        .collect();
                    if idx < w {
                        b.push(format!("l{}", idx + 1));
                    }
                    b
                })
                .filter(|b| !b.is_empty())
                .map(|b| block(b, BlockKind::Rank1))
                .collect::<Result<Vec<_>>>()?;
            let circ_ids: Vec<Vec<String>> = (1..=w).map(|i| (1..=w).map(|j| cid(i, j)).collect()).collect();
            let n_blocks = circ_ids
                .iter()
                .map(|c| block(c.clone(), rows))
                .collect::<Result<Vec<_>>>()?;
            let blocks = if finitary {
                Vec::new()
            } else {
                circ_ids.iter().map(|c| ground.subset(c)).collect::<Result<Vec<_>>>()?
            };
            Ok(DemoWindow {
                window: w,
                parts: vec![on_ground(&ground, m_blocks)?, on_ground(&ground, n_blocks)?],
                circuit_blocks: vec![Vec::new(), blocks],
                ground,
            })
        }
    }
}

/// `J_t` at window `base + t`, and the elements whose addition should make it dependent.
fn step_sets(demo: &Demo, base: usize, t: usize) -> (Vec<String>, Option<Vec<String>>) {
    let w = base + t;
    let loops = |upto: usize| (1..=upto).map(|n| format!("l{n}")).collect::<Vec<_>>();
    match demo {
        Demo::Claim32 | Demo::Claim31 => {
            let mut s: Vec<String> = (1..=w).flat_map(|i| (1..=base).map(move |r| grid_id(i, r))).collect();
            s.extend(loops(t));
            (s, Some(loops(w)))
        }
        Demo::Obs46a { .. } => ((1..=w).map(|i| format!("a_{i}")).collect(), None),
        Demo::Obs46b => {
            let mut s: Vec<String> = (1..=base).map(|i| format!("a_{i}")).collect();
            s.extend((1..=t).map(|i| format!("b_{i}")));
            (s, Some((1..=w).map(|i| format!("b_{i}")).collect()))
        }
        Demo::Prop22 { tag } => {
            let mut s: Vec<String> = (1..=base)
                .flat_map(|i| (1..=w).map(move |j| format!("{tag}{i}_{j}")))
                .collect();
            s.extend(loops(t));
            (s, Some(loops(w)))
        }
    }
}

fn decompose(parts: &[Matroid], x: Subset) -> Result<Option<Vec<Subset>>> {
    if parts.len() == 2 {
        return Ok(union_membership(&parts[0], &parts[1], x)?.map(|r| vec![r.first, r.second]));
    }
    k_fold_union(parts, x)
}

#[derive(Debug, Clone)]
pub struct ChainStep {
    pub window: usize,
    pub ground: Arc<GroundSet>,
    pub set: Subset,
    /// One independent set per part, with union `set`.
    pub parts: Vec<Subset>,
    /// Whether adding the demo's saturating elements leaves the union system.
    pub saturated_dependent: Option<bool>,
}

#[derive(Debug, Clone)]
pub struct GrowthChain {
    pub demo: Demo,
    pub base: usize,
    pub steps: Vec<ChainStep>,
}

/// `J_0 ⊊ … ⊊ J_steps`, each certified at its own window.
pub fn demo_growth_chain(demo: &Demo, base: usize, steps: usize) -> Result<GrowthChain> {
    if base == 0 {
        return Err(Error::Precondition("base window must be at least 1".into()));
    }
    let last = base + steps;
    if demo.ground_size(last) > MAX_ELEMENTS {
        return Err(Error::Budget(format!(
            "{} steps from window {base} exceed the {MAX_ELEMENTS}-element window budget",
            steps
        )));
    }
    let mut out = Vec::new();
    for t in 0..=steps {
        let win = demo_window(demo, base + t, false)?;
        let (ids, saturate) = step_sets(demo, base, t);
        let set = win.ground.subset(&ids)?;
        let parts = decompose(&win.parts, set)?
            .ok_or_else(|| Error::Precondition(format!("{} step {t} is not in the union system", demo.name())))?;
        let saturated_dependent = match saturate {
            Some(extra) => Some(decompose(&win.parts, set | win.ground.subset(&extra)?)?.is_none()),
            None => None,
        };
        out.push(ChainStep {
            window: win.window,
            ground: win.ground,
            set,
            parts,
            saturated_dependent,
        });
    }
    Ok(GrowthChain {
        demo: demo.clone(),
        base,
        steps: out,
    })
}

impl GrowthChain {
    /// Re-validates every step against freshly built windows, and strict growth.
    pub fn certify(&self) -> Result<bool> {
        let mut prev: Option<HashSet<String>> = None;
        for step in &self.steps {
            let win = demo_window(&self.demo, step.window, false)?;
            if win.ground.ids() != step.ground.ids() || step.parts.len() != win.parts.len() {
                return Ok(false);
            }
            let mut union = Subset::EMPTY;
            for (p, m) in step.parts.iter().zip(&win.parts) {
                if !m.is_independent(*p) {
                    return Ok(false);
                }
                union = union | *p;
            }
            if union != step.set || decompose(&win.parts, step.set)?.is_none() {
                return Ok(false);
            }
            let names: HashSet<String> = step.ground.names(step.set).into_iter().collect();
            if let Some(p) = &prev {
                if !(p.is_subset(&names) && p.len() < names.len()) {
                    return Ok(false);
                }
            }
            prev = Some(names);
        }
        Ok(true)
    }

    pub fn to_json(&self) -> Value {
        let steps: Vec<Value> = self
            .steps
            .iter()
            .map(|s| {
                let mut rep = serde_json::Map::new();
                for (i, p) in s.parts.iter().enumerate() {
                    rep.insert(format!("I{}", i + 1), json!(s.ground.names(*p)));
                }
                json!({
                    "window": s.window,
                    "set": s.ground.names(s.set),
                    "rep": rep,
                    "saturated_dependent": s.saturated_dependent,
                })
            })
            .collect();
        json!({ "demo": self.demo.name(), "base": self.base, "steps": steps })
    }
}

/// Each part at window `w` is its window-`(w+1)` part with new circuit
/// elements contracted and other new elements deleted.
pub fn demo_window_monotone(demo: &Demo, w: usize) -> Result<bool> {
    let small = demo_window(demo, w, false)?;
    let big = demo_window(demo, w + 1, false)?;
    let old = big.ground.subset(small.ground.ids())?;
    for (p, part) in small.parts.iter().enumerate() {
        let mut contract = Subset::EMPTY;
        for b in &big.circuit_blocks[p] {
            contract = contract | (*b - old);
        }
        if !minor_matches(part, &big.parts[p], contract)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Family sizes behind the finitarization/union commutation check at one window.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinUnionReport {
    /// `|I(M1^fin ∨ M2^fin)|` on the window.
    pub fin_members: usize,
    /// Window subsets that lie in the union one window later, where no windowed infinite circuit is complete.
    pub limit_members: usize,
    /// `|I(M1 ∨ M2)|` of the raw window, where windowed infinite circuits are complete.
    pub raw_members: usize,
    pub equal: bool,
}

/// Compares `I(M1^fin ∨ M2^fin)` with the finite members of `I(M1 ∨ M2)` on
/// the ground of `fin`, reading the latter off the next window `next`.
pub fn fin_union_commute_check(raw: &[Matroid; 2], fin: &[Matroid; 2], next: &[Matroid; 2]) -> Result<FinUnionReport> {
    let left = SetSystem::union_family(&fin[0], &fin[1])?;
    let raw_family = SetSystem::union_family(&raw[0], &raw[1])?;
    let g = fin[0].ground();
    let ng = next[0].ground();
    let mut limit = HashSet::new();
    for x in fin[0].all().subsets() {
        let mapped = ng.subset(g.names(x))?;
        if union_membership(&next[0], &next[1], mapped)?.is_some() {
            limit.insert(x);
        }
    }
    let left_set: HashSet<Subset> = left.members().iter().copied().collect();
    Ok(FinUnionReport {
        fin_members: left_set.len(),
        limit_members: limit.len(),
        raw_members: raw_family.members().len(),
        equal: left_set == limit,
    })
}

/// The commutation check on a demo window.
pub fn demo_fin_union_check(demo: &Demo, w: usize) -> Result<FinUnionReport> {
    let raw = demo_window(demo, w, false)?;
    let fin = demo_window(demo, w, true)?;
    let next = demo_window(demo, w + 1, false)?;
    if raw.parts.len() != 2 {
        return Err(Error::Precondition(
            "the commutation check compares two matroids".into(),
        ));
    }
    let pair = |d: &DemoWindow| [d.parts[0].clone(), d.parts[1].clone()];
    fin_union_commute_check(&pair(&raw), &pair(&fin), &pair(&next))
}

/// The commutation check for two families with the same windowed ground sets.
pub fn family_fin_union_check(f1: &SymbolicFamily, f2: &SymbolicFamily, n: usize) -> Result<FinUnionReport> {
    use crate::infinitary::family::finitarize;
    let w = |f: &SymbolicFamily, n: usize| f.window(n).map(|w| w.matroid);
    let raw = [w(f1, n)?, w(f2, n)?];
    let fin = [w(&finitarize(f1), n)?, w(&finitarize(f2), n)?];
    let next = [w(f1, n + 1)?, w(f2, n + 1)?];
    fin_union_commute_check(&raw, &fin, &next)
}

/// On finite matroids finitarization is the identity, so both sides coincide.
pub fn finite_fin_union_check(m1: &Matroid, m2: &Matroid) -> Result<FinUnionReport> {
    let pair = [m1.clone(), m2.clone()];
    fin_union_commute_check(&pair, &pair, &pair)
}
