//! Finite matroids as independence oracles.
//!
//! A [`Matroid`] pairs an ordered [`GroundSet`] with a pure membership
//! predicate on bitmask subsets. Every matroid remembers the [`Descriptor`]
//! that built it, so any constructed object can be written back out as JSON
//! and reloaded with identical behavior.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ground::GroundSet;
use crate::subset::Subset;

/// Largest ground set on which circuits, bases and other exhaustive
/// enumerations are attempted.
pub const ENUMERATION_LIMIT: usize = 24;

const MEMO_CAPACITY: usize = 1 << 20;

/// The constructor expression that built a matroid.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase", deny_unknown_fields)]
pub enum Descriptor {
    Uniform {
        k: usize,
        ground: Vec<String>,
    },
    Circuit {
        ground: Vec<String>,
    },
    Graphic {
        vertices: Vec<String>,
        edges: Vec<(String, String, String)>,
    },
    Free {
        ground: Vec<String>,
    },
    Loops {
        ground: Vec<String>,
    },
    Dual {
        of: Box<Descriptor>,
    },
    Sum {
        parts: Vec<Descriptor>,
    },
    /// Keeps `set`; ground order follows the parent.
    Restrict {
        of: Box<Descriptor>,
        set: Vec<String>,
    },
    /// The contraction onto `set` (the minor `M.set`); ground order follows the parent.
    Contract {
        of: Box<Descriptor>,
        set: Vec<String>,
    },
    /// Same matroid with the ground set listed in `order`.
    Reorder {
        of: Box<Descriptor>,
        order: Vec<String>,
    },
    /// Each element replaced by `copies` parallel copies named `id#1..id#copies`.
    Parallel {
        of: Box<Descriptor>,
        copies: usize,
    },
    /// Independent sets that extend by exactly `k` further elements.
    Mk {
        of: Box<Descriptor>,
        k: usize,
    },
    /// The union `M_1 ∨ … ∨ M_k` of matroids on a shared ground set.
    Union {
        parts: Vec<Descriptor>,
    },
}

enum Oracle {
    Uniform(usize),
    Free,
    Loops,
    Circuit,
    Graphic {
        vertices: usize,
        ends: Vec<(usize, usize)>,
    },
    /// `I` is independent iff `rank(E - I) = rank(E)` in the inner matroid.
    Dual {
        of: Matroid,
        rank: usize,
    },
    /// Each part with the sum-ground position of each of its elements.
    Sum {
        parts: Vec<Matroid>,
        owner: Vec<(usize, usize)>,
    },
    /// Position `i` here is position `map[i]` of the parent.
    Reindex {
        of: Matroid,
        map: Vec<usize>,
    },
    /// Like `Reindex`, but sets hitting a parent element twice are dependent.
    Parallel {
        of: Matroid,
        map: Vec<usize>,
    },
    Mk {
        of: Matroid,
        k: usize,
        rank: usize,
    },
    Union(Matroid, Matroid),
}

struct Inner {
    ground: Arc<GroundSet>,
    descriptor: Descriptor,
    oracle: Oracle,
    memo: Option<Mutex<HashMap<Subset, bool>>>,
}

/// A finite matroid given by an independence oracle. Cheap to clone; immutable.
#[derive(Clone)]
pub struct Matroid {
    inner: Arc<Inner>,
}

impl fmt::Debug for Matroid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Matroid({})",
            serde_json::to_string(&self.inner.descriptor).unwrap_or_default()
        )
    }
}

fn sorted(mut v: Vec<String>) -> Vec<String> {
    v.sort();
    v
}

impl Matroid {
    fn build(ground: Arc<GroundSet>, descriptor: Descriptor, oracle: Oracle) -> Self {
        let memo = match oracle {
            Oracle::Dual { .. } | Oracle::Mk { .. } | Oracle::Union(..) | Oracle::Parallel { .. } => {
                Some(Mutex::new(HashMap::new()))
            }
            _ => None,
        };
        Matroid {
            inner: Arc::new(Inner {
                ground,
                descriptor,
                oracle,
                memo,
            }),
        }
    }

    // ---- constructors ----

    /// `U_{k,E}`: every set of at most `k` elements is independent.
    pub fn uniform(k: usize, ground: Arc<GroundSet>) -> Self {
        let d = Descriptor::Uniform {
            k,
            ground: ground.ids().to_vec(),
        };
        Self::build(ground, d, Oracle::Uniform(k))
    }

    /// The matroid whose only circuit is the whole ground set.
    pub fn circuit(ground: Arc<GroundSet>) -> Result<Self> {
        if ground.is_empty() {
            return Err(Error::EmptyGround("circuit matroid"));
        }
        let d = Descriptor::Circuit {
            ground: ground.ids().to_vec(),
        };
        Ok(Self::build(ground, d, Oracle::Circuit))
    }

    pub fn free(ground: Arc<GroundSet>) -> Self {
        let d = Descriptor::Free {
            ground: ground.ids().to_vec(),
        };
        Self::build(ground, d, Oracle::Free)
    }

    pub fn loops(ground: Arc<GroundSet>) -> Self {
        let d = Descriptor::Loops {
            ground: ground.ids().to_vec(),
        };
        Self::build(ground, d, Oracle::Loops)
    }

    /// Cycle matroid of a multigraph; the ground set is the edge ids in order.
    pub fn graphic<V, E>(vertices: &[V], edges: &[(E, V, V)]) -> Result<Self>
    where
        V: AsRef<str>,
        E: AsRef<str>,
    {
        let vidx: HashMap<&str, usize> = vertices.iter().enumerate().map(|(i, v)| (v.as_ref(), i)).collect();
        if vidx.len() != vertices.len() {
            let mut seen = std::collections::HashSet::new();
            for v in vertices {
                if !seen.insert(v.as_ref()) {
                    return Err(Error::DuplicateElement(v.as_ref().to_string()));
                }
            }
        }
        let mut ends = Vec::with_capacity(edges.len());
        for (_, u, v) in edges {
            let lookup = |x: &V| {
                vidx.get(x.as_ref())
                    .copied()
                    .ok_or_else(|| Error::UnknownVertex(x.as_ref().to_string()))
            };
            ends.push((lookup(u)?, lookup(v)?));
        }
        let ground = GroundSet::new(edges.iter().map(|(e, _, _)| e.as_ref().to_string()))?;
        let d = Descriptor::Graphic {
            vertices: vertices.iter().map(|v| v.as_ref().to_string()).collect(),
            edges: edges
                .iter()
                .map(|(e, u, v)| (e.as_ref().to_string(), u.as_ref().to_string(), v.as_ref().to_string()))
                .collect(),
        };
        Ok(Self::build(
            ground,
            d,
            Oracle::Graphic {
                vertices: vertices.len(),
                ends,
            },
        ))
    }

    /// `M*`: bases are complements of bases of `M`.
    pub fn dual(&self) -> Self {
        let d = Descriptor::Dual {
            of: Box::new(self.descriptor().clone()),
        };
        Self::build(
            self.inner.ground.clone(),
            d,
            Oracle::Dual {
                of: self.clone(),
                rank: self.rank(self.all()),
            },
        )
    }

    /// Direct sum over pairwise disjoint ground sets; the ground is the concatenation.
    pub fn direct_sum(parts: &[Matroid]) -> Result<Self> {
        let mut ids = Vec::new();
        let mut owner = Vec::new();
        let mut seen = std::collections::HashSet::new();
        for (p, m) in parts.iter().enumerate() {
            for (i, id) in m.ground().ids().iter().enumerate() {
                if !seen.insert(id.clone()) {
                    return Err(Error::OverlappingGrounds(id.clone()));
                }
                ids.push(id.clone());
                owner.push((p, i));
            }
        }
        let ground = GroundSet::new(ids)?;
        let d = Descriptor::Sum {
            parts: parts.iter().map(|m| m.descriptor().clone()).collect(),
        };
        Ok(Self::build(
            ground,
            d,
            Oracle::Sum {
                parts: parts.to_vec(),
                owner,
            },
        ))
    }

    fn check_subset(&self, x: Subset) -> Result<()> {
        if x.is_subset(&self.all()) {
            Ok(())
        } else {
            Err(Error::NotASubset)
        }
    }

    fn reindexed(&self, map: Vec<usize>, descriptor: Descriptor) -> Result<Self> {
        let ground = GroundSet::new(map.iter().map(|&i| self.ground().id(i).to_string()))?;
        Ok(Self::build(
            ground,
            descriptor,
            Oracle::Reindex { of: self.clone(), map },
        ))
    }

    /// `M|X`.
    pub fn restrict(&self, x: Subset) -> Result<Self> {
        self.check_subset(x)?;
        let d = Descriptor::Restrict {
            of: Box::new(self.descriptor().clone()),
            set: self.ground().names(x),
        };
        self.reindexed(x.iter().collect(), d)
    }

    /// The contraction onto `Y`, i.e. `M.Y = (M*|Y)*`.
    pub fn contract(&self, y: Subset) -> Result<Self> {
        self.check_subset(y)?;
        let inner = self.dual().restrict(y)?.dual();
        let d = Descriptor::Contract {
            of: Box::new(self.descriptor().clone()),
            set: self.ground().names(y),
        };
        Ok(Self::build(
            inner.inner.ground.clone(),
            d,
            Oracle::Reindex {
                map: (0..y.len()).collect(),
                of: inner,
            },
        ))
    }

    /// Contract the elements of `t` (the minor `M / t`).
    pub fn contract_out(&self, t: Subset) -> Result<Self> {
        self.contract(self.all() - t)
    }

    /// The same matroid with its ground set listed in `order`.
    pub fn reorder<S: AsRef<str>>(&self, order: &[S]) -> Result<Self> {
        if order.len() != self.ground().len() {
            return Err(Error::GroundMismatch);
        }
        let mut map = Vec::with_capacity(order.len());
        for id in order {
            let pos = self
                .ground()
                .position(id.as_ref())
                .ok_or_else(|| Error::UnknownElement(id.as_ref().to_string()))?;
            map.push(pos);
        }
        let d = Descriptor::Reorder {
            of: Box::new(self.descriptor().clone()),
            order: order.iter().map(|s| s.as_ref().to_string()).collect(),
        };
        self.reindexed(map, d)
    }

    /// Replaces each element by `copies` parallel copies `id#1 .. id#copies`.
    pub fn parallel(&self, copies: usize) -> Result<Self> {
        let mut ids = Vec::new();
        let mut map = Vec::new();
        for (i, id) in self.ground().ids().iter().enumerate() {
            for c in 1..=copies {
                ids.push(format!("{id}#{c}"));
                map.push(i);
            }
        }
        let ground = GroundSet::new(ids)?;
        let d = Descriptor::Parallel {
            of: Box::new(self.descriptor().clone()),
            copies,
        };
        Ok(Self::build(ground, d, Oracle::Parallel { of: self.clone(), map }))
    }

    /// `M[k]`: independent sets `I` with an independent `J ⊇ I`, `|J \ I| = k`.
    pub fn mk(&self, k: usize) -> Result<Self> {
        let rank = self.rank(self.all());
        if rank < k {
            return Err(Error::RankTooSmall { rank, k });
        }
        let d = Descriptor::Mk {
            of: Box::new(self.descriptor().clone()),
            k,
        };
        Ok(Self::build(
            self.inner.ground.clone(),
            d,
            Oracle::Mk {
                of: self.clone(),
                k,
                rank,
            },
        ))
    }

    /// `M_1 ∨ M_2` as a matroid whose oracle runs exchange-chain augmentation.
    pub fn union(a: &Matroid, b: &Matroid) -> Result<Self> {
        if a.ground() != b.ground() {
            return Err(Error::GroundMismatch);
        }
        let parts = match a.descriptor() {
            Descriptor::Union { parts } => {
                let mut p = parts.clone();
                p.push(b.descriptor().clone());
                p
            }
            da => vec![da.clone(), b.descriptor().clone()],
        };
        Ok(Self::build(
            a.inner.ground.clone(),
            Descriptor::Union { parts },
            Oracle::Union(a.clone(), b.clone()),
        ))
    }

    /// Builds a matroid from its descriptor, validating every id.
    pub fn from_descriptor(d: &Descriptor) -> Result<Self> {
        let m = match d {
            Descriptor::Uniform { k, ground } => Self::uniform(*k, GroundSet::new(ground.clone())?),
            Descriptor::Circuit { ground } => Self::circuit(GroundSet::new(ground.clone())?)?,
            Descriptor::Free { ground } => Self::free(GroundSet::new(ground.clone())?),
            Descriptor::Loops { ground } => Self::loops(GroundSet::new(ground.clone())?),
            Descriptor::Graphic { vertices, edges } => Self::graphic(vertices, edges)?,
            Descriptor::Dual { of } => Self::from_descriptor(of)?.dual(),
            Descriptor::Sum { parts } => {
                let ms = parts.iter().map(Self::from_descriptor).collect::<Result<Vec<_>>>()?;
                Self::direct_sum(&ms)?
            }
            Descriptor::Restrict { of, set } => {
                let m = Self::from_descriptor(of)?;
                let x = m.ground().subset(set)?;
                m.restrict(x)?
            }
            Descriptor::Contract { of, set } => {
                let m = Self::from_descriptor(of)?;
                let y = m.ground().subset(set)?;
                m.contract(y)?
            }
            Descriptor::Reorder { of, order } => Self::from_descriptor(of)?.reorder(order)?,
            Descriptor::Parallel { of, copies } => Self::from_descriptor(of)?.parallel(*copies)?,
            Descriptor::Mk { of, k } => Self::from_descriptor(of)?.mk(*k)?,
            Descriptor::Union { parts } => {
                let ms = parts.iter().map(Self::from_descriptor).collect::<Result<Vec<_>>>()?;
                let mut it = ms.into_iter();
                let first = it.next().ok_or(Error::EmptyGround("union"))?;
                it.try_fold(first, |acc, m| Self::union(&acc, &m))?
            }
        };
        Ok(m)
    }

    // ---- accessors ----

    pub fn ground(&self) -> &GroundSet {
        &self.inner.ground
    }

    pub fn ground_arc(&self) -> Arc<GroundSet> {
        self.inner.ground.clone()
    }

    pub fn descriptor(&self) -> &Descriptor {
        &self.inner.descriptor
    }

    pub fn len(&self) -> usize {
        self.inner.ground.len()
    }

    pub fn is_empty(&self) -> bool {
        self.inner.ground.is_empty()
    }

    pub fn all(&self) -> Subset {
        self.inner.ground.all()
    }

    /// Parts of a binary union matroid.
    pub fn union_parts(&self) -> Option<(&Matroid, &Matroid)> {
        match &self.inner.oracle {
            Oracle::Union(a, b) => Some((a, b)),
            _ => None,
        }
    }

    // ---- the oracle ----

    /// Independence of `x`. Elements outside the ground set make `x` dependent.
    pub fn is_independent(&self, x: Subset) -> bool {
        if !x.is_subset(&self.all()) {
            return false;
        }
        if let Some(memo) = &self.inner.memo {
            if let Some(&v) = memo.lock().unwrap().get(&x) {
                return v;
            }
            let v = self.evaluate(x);
            let mut memo = memo.lock().unwrap();
            if memo.len() < MEMO_CAPACITY {
                memo.insert(x, v);
            }
            v
        } else {
            self.evaluate(x)
        }
    }

    fn evaluate(&self, x: Subset) -> bool {
        match &self.inner.oracle {
            Oracle::Uniform(k) => x.len() <= *k,
            Oracle::Free => true,
            Oracle::Loops => x.is_empty(),
            Oracle::Circuit => x != self.all(),
            Oracle::Graphic { vertices, ends } => forest(*vertices, x.iter().map(|e| ends[e])),
            Oracle::Dual { of, rank } => of.rank(of.all() - x) == *rank,
            Oracle::Sum { parts, owner } => {
                let mut local = vec![Subset::EMPTY; parts.len()];
                for e in x {
                    let (p, i) = owner[e];
                    local[p].insert(i);
                }
                parts.iter().zip(local).all(|(m, s)| m.is_independent(s))
            }
            Oracle::Reindex { of, map } => of.is_independent(x.iter().map(|i| map[i]).collect()),
            Oracle::Parallel { of, map } => {
                let image: Subset = x.iter().map(|i| map[i]).collect();
                image.len() == x.len() && of.is_independent(image)
            }
            // every independent set extends to a base of size `rank`
            Oracle::Mk { of, k, rank } => of.is_independent(x) && rank - x.len() >= *k,
            Oracle::Union(a, b) => crate::union::union_membership(a, b, x)
                .map(|r| r.is_some())
                .unwrap_or(false),
        }
    }

    // ---- derived quantities ----

    /// Grows the independent set `base` greedily, in ground order, inside `within`.
    pub fn extend_greedily(&self, base: Subset, within: Subset) -> Subset {
        let mut cur = base;
        for e in within - base {
            if self.is_independent(cur.with(e)) {
                cur.insert(e);
            }
        }
        cur
    }

    /// A maximal independent subset of `x`, chosen greedily in ground order.
    pub fn basis_of(&self, x: Subset) -> Subset {
        self.extend_greedily(Subset::EMPTY, x)
    }

    /// Size of a maximal independent subset of `x`.
    pub fn rank(&self, x: Subset) -> usize {
        self.basis_of(x & self.all()).len()
    }

    /// Rank of the whole matroid.
    pub fn full_rank(&self) -> usize {
        self.rank(self.all())
    }

    /// `r(A|B)`: how far a maximal independent `J ⊆ B` extends to an independent `I ⊆ A`.
    ///
    /// Follows the max-formula literally: `J` is a greedy basis of `B` and `I` a
    /// greedy maximal extension of `J` inside `A`.
    pub fn relative_rank(&self, a: Subset, b: Subset) -> Result<usize> {
        self.check_subset(a)?;
        if !b.is_subset(&a) {
            return Err(Error::NotNested);
        }
        let j = self.basis_of(b);
        let i = self.extend_greedily(j, a);
        Ok((i - j).len())
    }

    pub fn is_base(&self, x: Subset) -> bool {
        self.is_independent(x) && (self.all() - x).iter().all(|e| !self.is_independent(x.with(e)))
    }

    pub fn is_circuit(&self, x: Subset) -> bool {
        !x.is_empty() && !self.is_independent(x) && x.iter().all(|e| self.is_independent(x.without(e)))
    }

    /// The unique circuit inside `I + y`, or `None` when `I + y` is independent.
    pub fn fundamental_circuit(&self, i: Subset, y: usize) -> Result<Option<Subset>> {
        if !self.is_independent(i) {
            return Err(Error::Dependent);
        }
        if y >= self.len() {
            return Err(Error::NotASubset);
        }
        let iy = i.with(y);
        if self.is_independent(iy) {
            return Ok(None);
        }
        let c = Subset::singleton(y) | i.iter().filter(|&e| self.is_independent(iy.without(e))).collect();
        Ok(Some(c))
    }

    fn enumerable(&self) -> Result<()> {
        if self.len() > ENUMERATION_LIMIT {
            Err(Error::TooLarge(self.len()))
        } else {
            Ok(())
        }
    }

    /// All subsets of the ground set in increasing mask order.
    pub fn all_subsets(&self) -> Result<impl Iterator<Item = Subset>> {
        self.enumerable()?;
        Ok((0..1u64 << self.len()).map(Subset::from_bits))
    }

    pub fn independent_sets(&self) -> Result<Vec<Subset>> {
        Ok(self.all_subsets()?.filter(|&x| self.is_independent(x)).collect())
    }

    pub fn bases(&self) -> Result<Vec<Subset>> {
        let r = self.full_rank();
        Ok(self
            .all_subsets()?
            .filter(|x| x.len() == r && self.is_independent(*x))
            .collect())
    }

    pub fn circuits(&self) -> Result<Vec<Subset>> {
        Ok(self.all_subsets()?.filter(|&x| self.is_circuit(x)).collect())
    }
}

fn forest(vertices: usize, edges: impl Iterator<Item = (usize, usize)>) -> bool {
    let mut parent: Vec<usize> = (0..vertices).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    for (u, v) in edges {
        let (ru, rv) = (find(&mut parent, u), find(&mut parent, v));
        if ru == rv {
            return false;
        }
        parent[ru] = rv;
    }
    true
}

/// Shorthand for building grounds in tests and examples; panics on bad ids.
pub fn ground<S: AsRef<str>>(ids: &[S]) -> Arc<GroundSet> {
    GroundSet::new(ids.iter().map(|s| s.as_ref().to_string())).expect("valid ground set")
}

impl Descriptor {
    /// The same expression with every element id passed through `f`.
    pub fn relabeled(&self, f: &dyn Fn(&str) -> String) -> Descriptor {
        let ids = |v: &[String]| v.iter().map(|s| f(s)).collect::<Vec<_>>();
        let inner = |d: &Descriptor| Box::new(d.relabeled(f));
        match self {
            Descriptor::Uniform { k, ground } => Descriptor::Uniform {
                k: *k,
                ground: ids(ground),
            },
            Descriptor::Circuit { ground } => Descriptor::Circuit { ground: ids(ground) },
            Descriptor::Free { ground } => Descriptor::Free { ground: ids(ground) },
            Descriptor::Loops { ground } => Descriptor::Loops { ground: ids(ground) },
            Descriptor::Graphic { vertices, edges } => Descriptor::Graphic {
                vertices: vertices.clone(),
                edges: edges.iter().map(|(e, u, v)| (f(e), u.clone(), v.clone())).collect(),
            },
            Descriptor::Dual { of } => Descriptor::Dual { of: inner(of) },
            Descriptor::Sum { parts } => Descriptor::Sum {
                parts: parts.iter().map(|p| p.relabeled(f)).collect(),
            },
            Descriptor::Union { parts } => Descriptor::Union {
                parts: parts.iter().map(|p| p.relabeled(f)).collect(),
            },
            Descriptor::Restrict { of, set } => Descriptor::Restrict {
                of: inner(of),
                set: ids(set),
            },
            Descriptor::Contract { of, set } => Descriptor::Contract {
                of: inner(of),
                set: ids(set),
            },
            Descriptor::Reorder { of, order } => Descriptor::Reorder {
                of: inner(of),
                order: ids(order),
            },
            Descriptor::Parallel { of, copies } => Descriptor::Parallel {
                of: inner(of),
                copies: *copies,
            },
            Descriptor::Mk { of, k } => Descriptor::Mk { of: inner(of), k: *k },
        }
    }

    /// Canonical form: every set-valued field sorted by element id.
    pub fn canonical(&self) -> Descriptor {
        match self {
            Descriptor::Restrict { of, set } => Descriptor::Restrict {
                of: Box::new(of.canonical()),
                set: sorted(set.clone()),
            },
            Descriptor::Contract { of, set } => Descriptor::Contract {
                of: Box::new(of.canonical()),
                set: sorted(set.clone()),
            },
            Descriptor::Dual { of } => Descriptor::Dual {
                of: Box::new(of.canonical()),
            },
            Descriptor::Reorder { of, order } => Descriptor::Reorder {
                of: Box::new(of.canonical()),
                order: order.clone(),
            },
            Descriptor::Parallel { of, copies } => Descriptor::Parallel {
                of: Box::new(of.canonical()),
                copies: *copies,
            },
            Descriptor::Mk { of, k } => Descriptor::Mk {
                of: Box::new(of.canonical()),
                k: *k,
            },
            Descriptor::Sum { parts } => Descriptor::Sum {
                parts: parts.iter().map(Descriptor::canonical).collect(),
            },
            Descriptor::Union { parts } => Descriptor::Union {
                parts: parts.iter().map(Descriptor::canonical).collect(),
            },
            other => other.clone(),
        }
    }
}
