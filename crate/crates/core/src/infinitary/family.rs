//! Countable direct sums described by a finite schema, cut down to finite windows.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::de::{self, Deserializer};
use serde::ser::Serializer;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::matroid::{Descriptor, Matroid};
use crate::subset::Subset;

/// Ground sets up to this size are compared over every subset.
const EXHAUSTIVE_COMPARE: usize = 14;
const SAMPLED_COMPARE: usize = 4096;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Kind {
    /// A finite matroid repeated as a summand.
    FiniteTemplate,
    /// A single circuit on a countable set.
    InfiniteCircuit,
    /// `U_k` on a countable set.
    UniformOnInfinite,
    Loops,
    /// Free on a countable set; what an infinite circuit becomes under finitarization.
    FreeOnInfinite,
}

/// Number of summands of one kind.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Copies {
    Finite(usize),
    Infinite,
}

impl Copies {
    fn at_window(self, n: usize) -> usize {
        match self {
            Copies::Finite(c) => c.min(n),
            Copies::Infinite => n,
        }
    }
}

impl Default for Copies {
    fn default() -> Self {
        Copies::Finite(1)
    }
}

impl Serialize for Copies {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Copies::Finite(n) => s.serialize_u64(*n as u64),
            Copies::Infinite => s.serialize_str("inf"),
        }
    }
}

impl<'de> Deserialize<'de> for Copies {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            N(usize),
            S(String),
        }
        match Raw::deserialize(d)? {
            Raw::N(n) => Ok(Copies::Finite(n)),
            Raw::S(s) if s == "inf" => Ok(Copies::Infinite),
            Raw::S(s) => Err(de::Error::custom(format!(
                "copies must be a count or \"inf\", got {s:?}"
            ))),
        }
    }
}

/// One kind of summand, with its element-id tag.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Component {
    pub kind: Kind,
    pub tag: String,
    #[serde(default)]
    pub copies: Copies,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub matroid: Option<Descriptor>,
}

impl Component {
    fn validate(&self) -> Result<()> {
        if self.tag.is_empty() || self.tag.chars().any(|c| c.is_whitespace() || c == '#') {
            return Err(Error::InvalidElement(self.tag.clone()));
        }
        match (self.kind, &self.k, &self.matroid) {
            (Kind::UniformOnInfinite, None, _) => Err(Error::Precondition(format!("component {} needs k", self.tag))),
            (Kind::FiniteTemplate, _, None) => {
                Err(Error::Precondition(format!("component {} needs a matroid", self.tag)))
            }
            _ => Ok(()),
        }
    }

    fn single(&self) -> bool {
        self.copies == Copies::Finite(1)
    }

    fn prefix(&self, copy: usize) -> String {
        if self.single() {
            self.tag.clone()
        } else {
            format!("{}{copy}", self.tag)
        }
    }

    /// Element id of the `j`-th element (1-based) of copy `copy`.
    pub fn element_id(&self, copy: usize, j: usize) -> String {
        format!("{}_{j}", self.prefix(copy))
    }

    /// Copy `copy` of this summand, truncated to its first `n` elements.
    pub fn window(&self, copy: usize, n: usize) -> Result<Matroid> {
        let ids: Vec<String> = (1..=n).map(|j| self.element_id(copy, j)).collect();
        let d = match self.kind {
            Kind::InfiniteCircuit => Descriptor::Circuit { ground: ids },
            Kind::UniformOnInfinite => Descriptor::Uniform {
                k: self.k.unwrap_or(0),
                ground: ids,
            },
            Kind::Loops => Descriptor::Loops { ground: ids },
            Kind::FreeOnInfinite => Descriptor::Free { ground: ids },
            Kind::FiniteTemplate => {
                let prefix = self.prefix(copy);
                let template = self.matroid.as_ref().expect("validated");
                template.relabeled(&|id| format!("{prefix}_{id}"))
            }
        };
        Matroid::from_descriptor(&d)
    }

    /// Extra elements a base of the finitarization can have over a contained base.
    pub fn gap_per_copy(&self) -> u64 {
        match self.kind {
            Kind::InfiniteCircuit => 1,
            _ => 0,
        }
    }
}

/// A countable direct sum of summands given by kind.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SymbolicFamily {
    pub name: String,
    pub components: Vec<Component>,
}

/// A finite window of a family, with the elements of every windowed infinite circuit.
#[derive(Debug, Clone)]
pub struct Window {
    pub n: usize,
    pub matroid: Matroid,
    pub circuit_blocks: Vec<Subset>,
}

impl SymbolicFamily {
    pub fn new(name: impl Into<String>, components: Vec<Component>) -> Result<Self> {
        let f = Self {
            name: name.into(),
            components,
        };
        f.validate()?;
        Ok(f)
    }

    pub fn validate(&self) -> Result<()> {
        if self.components.is_empty() {
            return Err(Error::EmptyGround("family"));
        }
        self.components.iter().try_for_each(Component::validate)
    }

    /// Summands `1..=n` of each infinite kind, each on its first `n` elements.
    pub fn window(&self, n: usize) -> Result<Window> {
        if n == 0 {
            return Err(Error::Precondition("window size must be at least 1".into()));
        }
        self.validate()?;
        let mut parts = Vec::new();
        let mut blocks_by_part = Vec::new();
        for c in &self.components {
            for copy in 1..=c.copies.at_window(n) {
                let m = c.window(copy, n)?;
                blocks_by_part.push((c.kind == Kind::InfiniteCircuit, m.len()));
                parts.push(m);
            }
        }
        if parts.is_empty() {
            return Err(Error::EmptyGround("window"));
        }
        let matroid = Matroid::direct_sum(&parts)?;
        let mut offset = 0;
        let mut circuit_blocks = Vec::new();
        for (is_circuit, len) in blocks_by_part {
            if is_circuit {
                circuit_blocks.push((offset..offset + len).collect());
            }
            offset += len;
        }
        Ok(Window {
            n,
            matroid,
            circuit_blocks,
        })
    }

    pub fn is_finitary(&self) -> bool {
        self.components
            .iter()
            .all(|c| c.kind != Kind::InfiniteCircuit || c.copies == Copies::Finite(0))
    }
}

/// Infinite circuits become free; every other summand already is finitary.
pub fn finitarize(f: &SymbolicFamily) -> SymbolicFamily {
    SymbolicFamily {
        name: format!("{}^fin", f.name),
        components: f
            .components
            .iter()
            .map(|c| Component {
                kind: if c.kind == Kind::InfiniteCircuit {
                    Kind::FreeOnInfinite
                } else {
                    c.kind
                },
                ..c.clone()
            })
            .collect(),
    }
}

/// The circuits of the finitarized window are exactly the circuits of the
/// raw window other than the windowed infinite circuits.
pub fn finitarization_matches(f: &SymbolicFamily, n: usize) -> Result<bool> {
    let raw = f.window(n)?;
    let fin = finitarize(f).window(n)?;
    let g = raw.matroid.ground();
    let mut expected: Vec<Vec<String>> = raw
        .matroid
        .circuits()?
        .into_iter()
        .filter(|c| !raw.circuit_blocks.contains(c))
        .map(|c| g.names(c))
        .collect();
    let mut got: Vec<Vec<String>> = fin
        .matroid
        .circuits()?
        .into_iter()
        .map(|c| fin.matroid.ground().names(c))
        .collect();
    expected.sort();
    got.sort();
    Ok(g.ids() == fin.matroid.ground().ids() && expected == got)
}

/// Whether `small` is the minor of `big` obtained by contracting `contract`
/// and deleting every other element outside `small`'s ground set.
pub fn minor_matches(small: &Matroid, big: &Matroid, contract: Subset) -> Result<bool> {
    let kept = big.all() - contract;
    let contracted = big.contract(kept)?;
    let keep = contracted.ground().subset(small.ground().ids())?;
    let minor = contracted.restrict(keep)?;
    let minor = minor.reorder(small.ground().ids())?;
    let n = small.len();
    if n <= EXHAUSTIVE_COMPARE {
        return Ok(small
            .all()
            .subsets()
            .all(|s| small.is_independent(s) == minor.is_independent(s)));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(n as u64);
    Ok((0..SAMPLED_COMPARE).all(|_| {
        let size = rng.gen_range(0..=n.min(small.full_rank() + 2));
        let mut s = Subset::EMPTY;
        while s.len() < size {
            s.insert(rng.gen_range(0..n));
        }
        small.is_independent(s) == minor.is_independent(s)
    }))
}

/// Window `n` is window `n + 1` with its new infinite-circuit elements
/// contracted and its other new elements deleted.
pub fn window_monotone(f: &SymbolicFamily, n: usize) -> Result<bool> {
    let small = f.window(n)?;
    let big = f.window(n + 1)?;
    let old = big.matroid.ground().subset(small.matroid.ground().ids())?;
    let mut contract = Subset::EMPTY;
    for b in &big.circuit_blocks {
        contract = contract | (*b - old);
    }
    minor_matches(&small.matroid, &big.matroid, contract)
}

/// A nonnegative integer or infinity.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Gap {
    Finite(u64),
    Infinite,
}

impl fmt::Display for Gap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Gap::Finite(n) => write!(f, "{n}"),
            Gap::Infinite => f.write_str("inf"),
        }
    }
}

impl Serialize for Gap {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Gap::Finite(n) => s.serialize_u64(*n),
            Gap::Infinite => s.serialize_str("inf"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum GapVerdict {
    Finitary,
    NearlyFinitary,
    NotNearlyFinitary,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ComponentGap {
    pub tag: String,
    pub kind: Kind,
    pub copies: Copies,
    pub per_copy: u64,
    pub total: Gap,
    /// `(window, measured gap)` for one summand.
    pub windows: Vec<(usize, u64)>,
    /// Every measured window value equals `per_copy`.
    pub stable: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GapReport {
    pub family: String,
    pub components: Vec<ComponentGap>,
    pub total: Gap,
    pub verdict: GapVerdict,
}

impl GapReport {
    pub fn to_json(&self) -> Value {
        json!(self)
    }
}

/// Max over bases `B'` of `fin` of min over bases `B ⊆ B'` of `m` of `|B' \ B|`.
pub fn window_gap(m: &Matroid, fin: &Matroid) -> Result<u64> {
    let bases = m.bases()?;
    let mut worst = 0;
    for bf in fin.bases()? {
        let best = bases
            .iter()
            .filter(|b| b.is_subset(&bf))
            .map(|b| (bf - *b).len() as u64)
            .min()
            .ok_or_else(|| Error::Precondition("a base of the finitarization contains no base".into()))?;
        worst = worst.max(best);
    }
    Ok(worst)
}

/// Per-summand gaps, measured on single summands at each window in `windows`.
pub fn nearly_finitary_gap(f: &SymbolicFamily, windows: std::ops::RangeInclusive<usize>) -> Result<GapReport> {
    f.validate()?;
    let mut components = Vec::new();
    let mut total = Gap::Finite(0);
    for c in &f.components {
        let per_copy = c.gap_per_copy();
        let fin_c = Component {
            kind: if c.kind == Kind::InfiniteCircuit {
                Kind::FreeOnInfinite
            } else {
                c.kind
            },
            ..c.clone()
        };
        let mut measured = Vec::new();
        for n in windows.clone() {
            measured.push((n, window_gap(&c.window(1, n)?, &fin_c.window(1, n)?)?));
        }
        let stable = measured.iter().all(|&(_, g)| g == per_copy);
        let ctotal = match (c.copies, per_copy) {
            (_, 0) => Gap::Finite(0),
            (Copies::Infinite, _) => Gap::Infinite,
            (Copies::Finite(k), g) => Gap::Finite(k as u64 * g),
        };
        total = match (total, ctotal) {
            (Gap::Finite(a), Gap::Finite(b)) => Gap::Finite(a + b),
            _ => Gap::Infinite,
        };
        components.push(ComponentGap {
            tag: c.tag.clone(),
            kind: c.kind,
            copies: c.copies,
            per_copy,
            total: ctotal,
            windows: measured,
            stable,
        });
    }
    let verdict = if f.is_finitary() {
        GapVerdict::Finitary
    } else if total == Gap::Infinite {
        GapVerdict::NotNearlyFinitary
    } else {
        GapVerdict::NearlyFinitary
    };
    Ok(GapReport {
        family: f.name.clone(),
        components,
        total,
        verdict,
    })
}

/// `M[k]`, defined when `rank(M) >= k`.
pub fn make_mk(m: &Matroid, k: usize) -> Result<Matroid> {
    m.mk(k)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn circuits(copies: Copies) -> SymbolicFamily {
        SymbolicFamily::new(
            "N",
            vec![Component {
                kind: Kind::InfiniteCircuit,
                tag: "c".into(),
                copies,
                k: None,
                matroid: None,
            }],
        )
        .unwrap()
    }

    #[test]
    fn json_schema() {
        let f: SymbolicFamily = serde_json::from_str(
            r#"{"name":"N","components":[{"kind":"infinite_circuit","tag":"c","copies":"inf"},
                {"kind":"uniform_on_infinite","tag":"u","k":2},
                {"kind":"finite_template","tag":"t","matroid":{"type":"uniform","k":2,"ground":["a","b","c"]}}]}"#,
        )
        .unwrap();
        assert_eq!(f.components[0].copies, Copies::Infinite);
        let back: SymbolicFamily = serde_json::from_value(serde_json::to_value(&f).unwrap()).unwrap();
        assert_eq!(back, f);
        assert!(serde_json::from_str::<SymbolicFamily>(r#"{"name":"x","components":[],"extra":1}"#).is_err());
        assert!(serde_json::from_str::<SymbolicFamily>(
            r#"{"name":"x","components":[{"kind":"loops","tag":"l","copies":"many"}]}"#
        )
        .is_err());
    }

    #[test]
    fn windows_and_ids() {
        let w = circuits(Copies::Infinite).window(2).unwrap();
        assert_eq!(w.matroid.ground().ids(), ["c1_1", "c1_2", "c2_1", "c2_2"]);
        assert_eq!(w.circuit_blocks.len(), 2);
        let single = circuits(Copies::Finite(1)).window(3).unwrap();
        assert_eq!(single.matroid.ground().ids(), ["c_1", "c_2", "c_3"]);
        assert_eq!(single.matroid.circuits().unwrap(), vec![single.matroid.all()]);
    }

    #[test]
    fn finitarize_examples() {
        let f = circuits(Copies::Infinite);
        let fin = finitarize(&f);
        assert!(fin.components.iter().all(|c| c.kind == Kind::FreeOnInfinite));
        for n in 1..=3 {
            assert!(finitarization_matches(&f, n).unwrap());
        }
        let t = SymbolicFamily::new(
            "T",
            vec![Component {
                kind: Kind::FiniteTemplate,
                tag: "t".into(),
                copies: Copies::Finite(1),
                k: None,
                matroid: Some(Descriptor::Uniform {
                    k: 2,
                    ground: vec!["a".into(), "b".into(), "c".into()],
                }),
            }],
        )
        .unwrap();
        assert_eq!(finitarize(&t).components, t.components);
    }

    #[test]
    fn gap_examples() {
        let one = nearly_finitary_gap(&circuits(Copies::Finite(1)), 2..=5).unwrap();
        assert_eq!(one.total, Gap::Finite(1));
        assert_eq!(one.verdict, GapVerdict::NearlyFinitary);
        assert!(one.components[0].stable);
        let many = nearly_finitary_gap(&circuits(Copies::Infinite), 2..=4).unwrap();
        assert_eq!(many.total, Gap::Infinite);
        assert_eq!(many.verdict, GapVerdict::NotNearlyFinitary);
        let json = many.to_json();
        assert_eq!(json["total"], "inf");
        assert_eq!(json["verdict"], "not-nearly-finitary");
    }

    #[test]
    fn monotone() {
        let f = circuits(Copies::Infinite);
        for n in 1..=4 {
            assert!(window_monotone(&f, n).unwrap());
        }
    }
}
