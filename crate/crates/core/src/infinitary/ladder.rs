//! The one-sided ladder with every edge doubled, and two pairs of disjoint
//! spanning trees whose unions are properly nested.
//!
//! Rungs are `r{i}a`/`r{i}b` (between `u_i` and `v_i`), top edges `t{i}a`/`t{i}b`
//! (between `u_i` and `u_{i+1}`) and bottom edges `d{i}a`/`d{i}b` (between `v_i`
//! and `v_{i+1}`). The four bases are periodic edge patterns of the infinite
//! ladder:
//!
//! - `B1`: every `t·a`, `r1a`, `r{odd}a`, `d{even}a`
//! - `B2`: every `t·b`, `r{even}a`, `d{odd}a`
//! - `B3`: every `t·a`, `r1a`, every `d·a`
//! - `B4`: every `t·b`, `r1b`, `r{i}a` for `i >= 2`
//!
//! so `B3 ∪ B4 = B1 ∪ B2 + r1b`. In a finite graph two disjoint spanning
//! trees always have the same union size, so the inclusion is certified on the
//! window of the first `n` rungs, with `B1` and `B2` shown to be forests whose
//! window vertices are all connected one rung further out.

use std::sync::Arc;

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::ground::GroundSet;
use crate::matroid::Matroid;
use crate::packing::Graph;
use crate::subset::Subset;
use crate::union::union_membership;

/// The doubled ladder on rungs `1..=n`.
pub fn ladder_graph(n: usize) -> Graph {
    let mut vertices = Vec::new();
    for i in 1..=n {
        vertices.push(format!("u{i}"));
        vertices.push(format!("v{i}"));
    }
    let mut edges = Vec::new();
    for i in 1..=n {
        for s in ["a", "b"] {
            edges.push((format!("r{i}{s}"), format!("u{i}"), format!("v{i}")));
        }
        if i < n {
            for s in ["a", "b"] {
                edges.push((format!("t{i}{s}"), format!("u{i}"), format!("u{}", i + 1)));
                edges.push((format!("d{i}{s}"), format!("v{i}"), format!("v{}", i + 1)));
            }
        }
    }
    Graph { vertices, edges }
}

/// Edge ids of pattern `which` (1..=4) that lie in the window of `n` rungs.
pub fn pattern(which: usize, n: usize) -> Vec<String> {
    let mut out = Vec::new();
    let top = if matches!(which, 1 | 3) { "a" } else { "b" };
    for i in 1..n {
        out.push(format!("t{i}{top}"));
        let bottom = match which {
            1 => i % 2 == 0,
            2 => i % 2 == 1,
            3 => true,
            _ => false,
        };
        if bottom {
            out.push(format!("d{i}a"));
        }
    }
    for i in 1..=n {
        let rung = match which {
            1 => (i % 2 == 1).then_some("a"),
            2 => (i % 2 == 0).then_some("a"),
            3 => (i == 1).then_some("a"),
            _ => Some(if i == 1 { "b" } else { "a" }),
        };
        if let Some(s) = rung {
            out.push(format!("r{i}{s}"));
        }
    }
    out
}

#[derive(Debug, Clone)]
pub struct LadderReport {
    pub rungs: usize,
    pub ground: Arc<GroundSet>,
    pub bases: [Subset; 4],
    /// `(B3 ∪ B4) \ (B1 ∪ B2)`.
    pub difference: Subset,
    pub leftmost: String,
    pub b3_b4_spanning: bool,
    pub b1_b2_forests: bool,
    /// Every window vertex is connected inside `B1` (and `B2`) one rung further out.
    pub b1_b2_extend: bool,
    pub disjoint: bool,
    pub proper_inclusion: bool,
    /// Both unions pass union membership, and `B3 ∪ B4` has the window's full union rank.
    pub union_certified: bool,
}

impl LadderReport {
    pub fn certified(&self) -> bool {
        self.b3_b4_spanning
            && self.b1_b2_forests
            && self.b1_b2_extend
            && self.disjoint
            && self.proper_inclusion
            && self.union_certified
            && self.ground.names(self.difference) == [self.leftmost.clone()]
    }

    pub fn to_json(&self) -> Value {
        let g = &self.ground;
        json!({
            "rungs": self.rungs,
            "B1": g.names(self.bases[0]),
            "B2": g.names(self.bases[1]),
            "B3": g.names(self.bases[2]),
            "B4": g.names(self.bases[3]),
            "difference": g.names(self.difference),
            "leftmost": self.leftmost,
            "certified": self.certified(),
        })
    }
}

/// Whether every vertex of `vertices` is joined to `u1` inside `edges` of `g`.
fn connects(g: &Graph, edges: &[String], vertices: &[String]) -> bool {
    let sub = Graph {
        vertices: g.vertices.clone(),
        edges: g.edges.iter().filter(|(e, _, _)| edges.contains(e)).cloned().collect(),
    };
    let mut reached = vec!["u1".to_string()];
    let mut changed = true;
    while changed {
        changed = false;
        for (_, u, v) in &sub.edges {
            let (hu, hv) = (reached.contains(u), reached.contains(v));
            if hu != hv {
                reached.push(if hu { v.clone() } else { u.clone() });
                changed = true;
            }
        }
    }
    vertices.iter().all(|v| reached.contains(v))
}

pub fn ladder_demo(n: usize) -> Result<LadderReport> {
    if n < 2 {
        return Err(Error::Precondition("the ladder needs at least 2 rungs".into()));
    }
    let g = ladder_graph(n);
    let m = g.matroid()?;
    let ground = m.ground_arc();
    let sets: Vec<Subset> = (1..=4).map(|w| ground.subset(pattern(w, n))).collect::<Result<_>>()?;
    let bases = [sets[0], sets[1], sets[2], sets[3]];
    let low = bases[0] | bases[1];
    let high = bases[2] | bases[3];
    let next = ladder_graph(n + 1);
    let extend = [1, 2].iter().all(|&w| connects(&next, &pattern(w, n + 1), &g.vertices));
    let rank = m.full_rank();
    let union_certified =
        union_membership(&m, &m, low)?.is_some() && union_membership(&m, &m, high)?.is_some() && high.len() == 2 * rank;
    Ok(LadderReport {
        rungs: n,
        bases,
        difference: high - low,
        leftmost: "r1b".into(),
        b3_b4_spanning: m.is_base(bases[2]) && m.is_base(bases[3]),
        b1_b2_forests: m.is_independent(bases[0]) && m.is_independent(bases[1]),
        b1_b2_extend: extend,
        disjoint: bases[0].is_disjoint(&bases[1]) && bases[2].is_disjoint(&bases[3]),
        proper_inclusion: low.is_subset(&high) && low != high,
        union_certified,
        ground,
    })
}

/// The doubled ladder's graphic matroid.
pub fn ladder_matroid(n: usize) -> Result<Matroid> {
    ladder_graph(n).matroid()
}
