//! Disjoint bases, covers by independent sets, and spanning-tree packing.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::ground::GroundSet;
use crate::matroid::{Matroid, ENUMERATION_LIMIT};
use crate::subset::Subset;
use crate::union::{k_fold_base, k_fold_union, union_matroid};

/// Largest ground set on which the rank condition is swept over every subset.
pub const SWEEP_LIMIT: usize = 20;

/// Largest ground set on which the dual formulation is cross-checked.
pub const DUAL_CHECK_LIMIT: usize = 6;

/// Elements appearing in at least `c` of the sets.
pub fn g_c(sets: &[Subset], c: usize) -> Subset {
    let mut all = Subset::EMPTY;
    for s in sets {
        all = all | *s;
    }
    all.iter()
        .filter(|&e| sets.iter().filter(|s| s.contains(e)).count() >= c)
        .collect()
}

/// Finds `k` independent sets of `n` whose `g_c` is exactly `x`.
///
/// Independent sets may be shrunk to `x` and then to exactly `c` copies of
/// each element, so the question is whether `c` parallel copies of `n|x`
/// decompose into `k` independent sets.
pub fn in_i_nkc(n: &Matroid, k: usize, c: usize, x: Subset) -> Result<Option<Vec<Subset>>> {
    if c == 0 || c > k {
        return Err(Error::Precondition(format!("need 1 <= c <= k, got c={c}, k={k}")));
    }
    if !x.is_subset(&n.all()) {
        return Err(Error::NotASubset);
    }
    if x.is_empty() {
        return Ok(Some(vec![Subset::EMPTY; k]));
    }
    let positions: Vec<usize> = x.iter().collect();
    let layered = n.restrict(x)?.parallel(c)?;
    let copies = vec![layered.clone(); k];
    let Some(parts) = k_fold_union(&copies, layered.all())? else {
        return Ok(None);
    };
    let back = |s: Subset| -> Subset { s.iter().map(|p| positions[p / c]).collect() };
    Ok(Some(parts.into_iter().map(back).collect()))
}

/// `|Y| >= k · r(E | E - Y)` for one `Y`.
fn packing_condition(m: &Matroid, k: usize, y: Subset) -> Result<bool> {
    Ok(y.len() >= k * m.relative_rank(m.all(), m.all() - y)?)
}

fn sweep(n: usize) -> Result<impl Iterator<Item = Subset>> {
    if n > SWEEP_LIMIT {
        return Err(Error::TooLarge(n));
    }
    Ok((0..1u64 << n).map(Subset::from_bits))
}

/// How the sets `Y` of the rank condition are visited.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum YSweep {
    Exhaustive,
    Sampled { samples: usize, seed: u64 },
}

impl YSweep {
    fn sets(self, m: &Matroid) -> Result<Box<dyn Iterator<Item = Subset>>> {
        match self {
            YSweep::Exhaustive => Ok(Box::new(sweep(m.len())?)),
            YSweep::Sampled { samples, seed } => {
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                let n = m.len();
                let sets: Vec<Subset> = (0..samples)
                    .map(|_| {
                        let mut y = Subset::EMPTY;
                        for e in 0..n {
                            if rng.gen_bool(0.5) {
                                y.insert(e);
                            }
                        }
                        y
                    })
                    .collect();
                Ok(Box::new(sets.into_iter()))
            }
        }
    }

    fn to_json(self) -> Value {
        match self {
            YSweep::Exhaustive => json!("exhaustive"),
            YSweep::Sampled { samples, seed } => json!({"samples": samples, "seed": seed}),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PackingReport {
    pub k: usize,
    pub sweep: YSweep,
    pub packable: bool,
    /// `k` pairwise disjoint bases when packable.
    pub bases: Vec<Subset>,
    /// A `Y` with `|Y| < k · r(E | E - Y)` when not packable.
    pub violating: Option<Subset>,
    /// Whether `I[M*, k, k-1]` is all of `P(E)`; only evaluated on small grounds with `k >= 2`.
    pub dual_check: Option<bool>,
}

impl PackingReport {
    pub fn to_json(&self, g: &GroundSet) -> Value {
        json!({
            "k": self.k,
            "verdict": if self.packable { "packable" } else { "not-packable" },
            "bases": self.bases.iter().map(|b| g.names(*b)).collect::<Vec<_>>(),
            "violating_Y": self.violating.map(|y| g.names(y)),
            "dual_check": self.dual_check,
            "y_sweep": self.sweep.to_json(),
        })
    }

    /// Re-validates the certificate against `m`.
    pub fn certified(&self, m: &Matroid) -> bool {
        if self.packable {
            let disjoint = self
                .bases
                .iter()
                .enumerate()
                .all(|(i, a)| self.bases[i + 1..].iter().all(|b| a.is_disjoint(b)));
            self.bases.len() == self.k && disjoint && self.bases.iter().all(|b| m.is_base(*b))
        } else {
            self.violating
                .is_some_and(|y| matches!(packing_condition(m, self.k, y), Ok(false)))
        }
    }
}

/// `I[M*, k, k-1] = P(E)`, the dual form of having `k` disjoint bases.
pub fn dual_packing_holds(m: &Matroid, k: usize) -> Result<bool> {
    let dual = m.dual();
    for x in sweep(m.len())? {
        if in_i_nkc(&dual, k, k - 1, x)?.is_none() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Decides whether `m` has `k` disjoint bases by the rank condition over all
/// `Y ⊆ E`, and builds them from the `k`-fold union of `m` with itself.
pub fn pack_bases(m: &Matroid, k: usize) -> Result<PackingReport> {
    pack_bases_with(m, k, YSweep::Exhaustive)
}

/// As [`pack_bases`], with the rank condition checked on `sweep`. A sampled
/// sweep may miss every violating `Y`; the verdict still comes from the union
/// construction, but the report is then not certified.
pub fn pack_bases_with(m: &Matroid, k: usize, sweep: YSweep) -> Result<PackingReport> {
    if k == 0 {
        return Err(Error::Precondition("k must be positive".into()));
    }
    let mut violating = None;
    for y in sweep.sets(m)? {
        if !packing_condition(m, k, y)? {
            violating = Some(y);
            break;
        }
    }
    let r = m.full_rank();
    let parts = k_fold_base(&vec![m.clone(); k], m.all())?;
    let total: usize = parts.iter().map(|p| p.len()).sum();
    let constructed = total == k * r;
    let missed = sweep != YSweep::Exhaustive && violating.is_none();
    if constructed == violating.is_some() && !(missed && !constructed) {
        return Err(Error::Precondition(
            "rank condition and union construction disagree".into(),
        ));
    }
    let dual_check = if k >= 2 && m.len() <= DUAL_CHECK_LIMIT {
        Some(dual_packing_holds(m, k)?)
    } else {
        None
    };
    Ok(PackingReport {
        k,
        sweep,
        packable: constructed,
        bases: if constructed { parts } else { Vec::new() },
        violating,
        dual_check,
    })
}

/// Checks `r(E | E - Z) = r_{M.Y}(Y | Y - Z)` for `Z ⊆ Y ⊆ E`.
pub fn minor_rank_identity_check(m: &Matroid, y: Subset, z: Subset) -> Result<bool> {
    if !y.is_subset(&m.all()) || !z.is_subset(&y) {
        return Err(Error::NotASubset);
    }
    let left = m.relative_rank(m.all(), m.all() - z)?;
    let minor = m.contract(y)?;
    let g = m.ground();
    let z_in_minor = minor.ground().subset(g.names(z))?;
    let right = minor.relative_rank(minor.all(), minor.all() - z_in_minor)?;
    Ok(left == right)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoveringReport {
    pub k: usize,
    pub coverable: bool,
    /// `k` pairwise disjoint independent sets with union `E` when coverable.
    pub cover: Vec<Subset>,
    /// An `X` with `k · rank(X) < |X|` when not coverable.
    pub violating: Option<Subset>,
}

impl CoveringReport {
    pub fn to_json(&self, g: &GroundSet) -> Value {
        json!({
            "k": self.k,
            "verdict": if self.coverable { "coverable" } else { "not-coverable" },
            "cover": self.cover.iter().map(|b| g.names(*b)).collect::<Vec<_>>(),
            "violating_X": self.violating.map(|x| g.names(x)),
        })
    }

    pub fn certified(&self, m: &Matroid) -> bool {
        if self.coverable {
            let mut all = Subset::EMPTY;
            for s in &self.cover {
                all = all | *s;
            }
            self.cover.len() == self.k && all == m.all() && self.cover.iter().all(|s| m.is_independent(*s))
        } else {
            self.violating.is_some_and(|x| self.k * m.rank(x) < x.len())
        }
    }
}

/// Covers `E` by `k` independent sets via the `k`-fold union, or returns a
/// set `X` inside a circuit of that union with `k · rank(X) < |X|`.
pub fn cover_independent(m: &Matroid, k: usize) -> Result<CoveringReport> {
    if k == 0 {
        return Err(Error::Precondition("k must be positive".into()));
    }
    let copies = vec![m.clone(); k];
    if let Some(cover) = k_fold_union(&copies, m.all())? {
        return Ok(CoveringReport {
            k,
            coverable: true,
            cover,
            violating: None,
        });
    }
    let u = union_matroid(&copies)?;
    let base = u.basis_of(m.all());
    let e = (m.all() - base).first().expect("E is dependent in the union");
    let circuit = u
        .fundamental_circuit(base, e)?
        .expect("adding to a base closes a circuit");
    if circuit.len() > ENUMERATION_LIMIT {
        return Err(Error::TooLarge(circuit.len()));
    }
    let violating = std::iter::once(circuit)
        .chain(circuit.subsets())
        .find(|x| k * m.rank(*x) < x.len())
        .ok_or_else(|| Error::Precondition("union circuit holds no rank-deficient set".into()))?;
    Ok(CoveringReport {
        k,
        coverable: false,
        cover: Vec::new(),
        violating: Some(violating),
    })
}

/// The rank-condition verdict for covering: `k · rank(X) >= |X|` for all `X`.
pub fn covering_condition(m: &Matroid, k: usize) -> Result<Option<Subset>> {
    for x in sweep(m.len())? {
        if k * m.rank(x) < x.len() {
            return Ok(Some(x));
        }
    }
    Ok(None)
}

/// A finite multigraph with named edges.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Graph {
    pub vertices: Vec<String>,
    /// `(edge id, endpoint, endpoint)`.
    pub edges: Vec<(String, String, String)>,
}

impl Graph {
    pub fn matroid(&self) -> Result<Matroid> {
        Matroid::graphic(&self.vertices, &self.edges)
    }

    pub fn is_connected(&self) -> bool {
        let mut seen = vec![false; self.vertices.len()];
        let pos = |v: &str| self.vertices.iter().position(|w| w == v);
        let Some(first) = seen.first_mut() else {
            return true;
        };
        *first = true;
        let mut changed = true;
        while changed {
            changed = false;
            for (_, u, v) in &self.edges {
                if let (Some(a), Some(b)) = (pos(u), pos(v)) {
                    if seen[a] != seen[b] {
                        seen[a] = true;
                        seen[b] = true;
                        changed = true;
                    }
                }
            }
        }
        seen.iter().all(|&s| s)
    }
}

/// `k` edge-disjoint spanning trees.
pub fn tree_pack(g: &Graph, k: usize) -> Result<PackingReport> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    pack_bases(&g.matroid()?, k)
}

/// `k` forests covering every edge.
pub fn forest_cover(g: &Graph, k: usize) -> Result<CoveringReport> {
    cover_independent(&g.matroid()?, k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matroid::ground;

    fn k4() -> Graph {
        let v = ["1", "2", "3", "4"];
        let mut edges = Vec::new();
        for i in 0..4 {
            for j in i + 1..4 {
                edges.push((format!("e{}{}", v[i], v[j]), v[i].to_string(), v[j].to_string()));
            }
        }
        Graph {
            vertices: v.iter().map(|s| s.to_string()).collect(),
            edges,
        }
    }

    #[test]
    fn sampled_sweep_on_large_grounds() {
        let ids: Vec<String> = (0..30).map(|i| format!("x{i}")).collect();
        let u = Matroid::uniform(2, ground(&ids));
        assert!(matches!(pack_bases(&u, 3), Err(Error::TooLarge(30))));
        let sweep = YSweep::Sampled { samples: 64, seed: 7 };
        let r = pack_bases_with(&u, 3, sweep).unwrap();
        assert!(r.packable && r.certified(&u));
        let r = pack_bases_with(&u, 16, sweep).unwrap();
        assert!(!r.packable);
        assert_eq!(r.certified(&u), r.violating.is_some());
    }

    #[test]
    fn g_c_examples() {
        let (a, b, c) = (0, 1, 2);
        assert_eq!(
            g_c(&[Subset::from_indices([a, b]), Subset::from_indices([b, c])], 2),
            Subset::singleton(b)
        );
        assert_eq!(
            g_c(&[Subset::from_indices([a, b]), Subset::from_indices([b, c])], 1),
            Subset::from_indices([a, b, c])
        );
        let s = Subset::singleton(a);
        assert_eq!(g_c(&[s, s, s], 3), s);
    }

    #[test]
    fn i_nkc_examples() {
        let u = Matroid::uniform(1, ground(&["a", "b"]));
        let w = in_i_nkc(&u, 2, 1, u.all()).unwrap().unwrap();
        assert_eq!(g_c(&w, 1), u.all());
        assert!(w.iter().all(|s| u.is_independent(*s)));
        assert_eq!(in_i_nkc(&u, 2, 2, u.all()).unwrap(), None);
        assert_eq!(in_i_nkc(&u, 3, 2, Subset::EMPTY).unwrap(), Some(vec![Subset::EMPTY; 3]));
    }

    #[test]
    fn packing_examples() {
        let u = Matroid::uniform(1, ground(&["e1", "e2"]));
        let r = pack_bases(&u, 2).unwrap();
        assert!(r.packable && r.certified(&u));
        assert_eq!(r.dual_check, Some(true));
        let r = pack_bases(&u, 3).unwrap();
        assert!(!r.packable && r.certified(&u));
        assert_eq!(r.violating, Some(u.all()));
        assert_eq!(r.dual_check, Some(false));
        let l = Matroid::loops(ground(&["a"]));
        assert!(pack_bases(&l, 1).unwrap().packable);
    }

    #[test]
    fn minor_identity_examples() {
        let u = Matroid::uniform(2, ground(&["a", "b", "c", "d"]));
        assert!(minor_rank_identity_check(&u, Subset::from_indices([0, 1, 2]), Subset::singleton(0)).unwrap());
        assert!(minor_rank_identity_check(&u, Subset::from_indices([0, 1]), Subset::EMPTY).unwrap());
        assert!(minor_rank_identity_check(&u, u.all(), Subset::from_indices([1, 3])).unwrap());
    }

    #[test]
    fn covering_examples() {
        let u = Matroid::uniform(2, ground(&["a", "b", "c", "d"]));
        let r = cover_independent(&u, 2).unwrap();
        assert_eq!(
            r.cover,
            vec![Subset::from_indices([0, 1]), Subset::from_indices([2, 3])]
        );
        let l = Matroid::loops(ground(&["x"]));
        let r = cover_independent(&l, 3).unwrap();
        assert_eq!(r.violating, Some(Subset::singleton(0)));
        assert!(r.certified(&l));
    }

    #[test]
    fn trees() {
        let r = tree_pack(&k4(), 2).unwrap();
        assert!(r.packable && r.bases.len() == 2);
        let tri = Graph {
            vertices: vec!["u".into(), "v".into(), "w".into()],
            edges: vec![
                ("x".into(), "u".into(), "v".into()),
                ("y".into(), "v".into(), "w".into()),
                ("z".into(), "w".into(), "u".into()),
            ],
        };
        assert!(forest_cover(&tri, 2).unwrap().coverable);
        let path = Graph {
            vertices: vec!["u".into(), "v".into(), "w".into()],
            edges: vec![
                ("x".into(), "u".into(), "v".into()),
                ("y".into(), "v".into(), "w".into()),
            ],
        };
        assert!(!tree_pack(&path, 2).unwrap().packable);
        let split = Graph {
            vertices: vec!["u".into(), "v".into()],
            edges: vec![],
        };
        assert_eq!(tree_pack(&split, 1).unwrap_err(), Error::Disconnected);
    }
}
