//! Instance files: matroid descriptors, explicit set systems, graphs and
//! symbolic families. Every file is schema-checked before use.

use std::fmt;
use std::path::{Path, PathBuf};

use matroid_union::axioms::SetSystem;
use matroid_union::infinitary::SymbolicFamily;
use matroid_union::packing::Graph;
use matroid_union::{Descriptor, GroundSet, Matroid};
use serde::de::DeserializeOwned;
use serde::Deserialize;

/// A usage or schema problem; always exit code 2.
#[derive(Debug)]
pub struct LoadError {
    pub path: PathBuf,
    pub pointer: Option<String>,
    pub message: String,
}

impl fmt::Display for LoadError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.path.display())?;
        if let Some(p) = &self.pointer {
            write!(f, " at {p}")?;
        }
        write!(f, ": {}", self.message)
    }
}

impl std::error::Error for LoadError {}

/// Raw bytes plus the parsed value, kept so the inputs can be digested.
pub struct Loaded<T> {
    pub value: T,
    pub bytes: Vec<u8>,
}

fn error(path: &Path, pointer: Option<String>, message: impl fmt::Display) -> LoadError {
    LoadError {
        path: path.to_path_buf(),
        pointer,
        message: message.to_string(),
    }
}

/// `serde_path_to_error` paths (`a.b[2]`) as JSON pointers (`/a/b/2`).
fn pointer(p: &serde_path_to_error::Path) -> String {
    let mut out = String::new();
    for seg in p.iter() {
        use serde_path_to_error::Segment;
        match seg {
            Segment::Seq { index } => out.push_str(&format!("/{index}")),
            Segment::Map { key } => out.push_str(&format!("/{}", key.replace('~', "~0").replace('/', "~1"))),
            Segment::Enum { variant } => out.push_str(&format!("/{variant}")),
            Segment::Unknown => out.push_str("/?"),
        }
    }
    if out.is_empty() {
        "/".into()
    } else {
        out
    }
}

fn parse<T: DeserializeOwned>(path: &Path) -> Result<Loaded<T>, LoadError> {
    let bytes = std::fs::read(path).map_err(|e| error(path, None, e))?;
    let de = &mut serde_json::Deserializer::from_slice(&bytes);
    let value = serde_path_to_error::deserialize(de).map_err(|e| {
        let p = pointer(e.path());
        error(path, Some(p), e.into_inner())
    })?;
    Ok(Loaded { value, bytes })
}

/// The deepest nested descriptor that fails to parse, as a JSON pointer.
/// Tagged enums buffer their content, so serde cannot report this itself.
fn locate_descriptor(v: &serde_json::Value, at: String) -> (String, String) {
    let children = v
        .get("of")
        .map(|c| vec![(format!("{at}/of"), c)])
        .or_else(|| {
            v.get("parts").and_then(|p| p.as_array()).map(|parts| {
                parts
                    .iter()
                    .enumerate()
                    .map(|(i, c)| (format!("{at}/parts/{i}"), c))
                    .collect()
            })
        })
        .unwrap_or_default();
    for (ptr, child) in children {
        if serde_json::from_value::<Descriptor>(child.clone()).is_err() {
            return locate_descriptor(child, ptr);
        }
    }
    let msg = serde_json::from_value::<Descriptor>(v.clone())
        .err()
        .map(|e| e.to_string())
        .unwrap_or_default();
    (if at.is_empty() { "/".into() } else { at }, msg)
}

pub fn matroid(path: &Path) -> Result<Loaded<Matroid>, LoadError> {
    let bytes = std::fs::read(path).map_err(|e| error(path, None, e))?;
    let raw: serde_json::Value = serde_json::from_slice(&bytes).map_err(|e| error(path, None, e))?;
    let d = match serde_json::from_value::<Descriptor>(raw.clone()) {
        Ok(value) => Loaded { value, bytes },
        Err(_) => {
            let (ptr, msg) = locate_descriptor(&raw, String::new());
            return Err(error(path, Some(ptr), msg));
        }
    };
    let m = Matroid::from_descriptor(&d.value).map_err(|e| error(path, None, e))?;
    Ok(Loaded {
        value: m,
        bytes: d.bytes,
    })
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct ExplicitSystem {
    ground: Vec<String>,
    members: Vec<Vec<String>>,
}

/// What `check-axioms` accepts: a descriptor, or `{"ground": [...], "members": [[...], ...]}`.
pub enum AxiomInput {
    Matroid(Matroid),
    System(SetSystem),
}

pub fn axiom_input(path: &Path) -> Result<Loaded<AxiomInput>, LoadError> {
    let bytes = std::fs::read(path).map_err(|e| error(path, None, e))?;
    let raw: serde_json::Value = serde_json::from_slice(&bytes).map_err(|e| error(path, None, e))?;
    if raw.get("members").is_some() {
        let s: Loaded<ExplicitSystem> = parse(path)?;
        let g = GroundSet::new(s.value.ground.iter()).map_err(|e| error(path, Some("/ground".into()), e))?;
        let sys = SetSystem::from_ids(g, &s.value.members).map_err(|e| error(path, Some("/members".into()), e))?;
        return Ok(Loaded {
            value: AxiomInput::System(sys),
            bytes,
        });
    }
    let m = matroid(path)?;
    Ok(Loaded {
        value: AxiomInput::Matroid(m.value),
        bytes: m.bytes,
    })
}

pub fn graph(path: &Path) -> Result<Loaded<Graph>, LoadError> {
    let g: Loaded<Graph> = parse(path)?;
    g.value.matroid().map_err(|e| error(path, None, e))?;
    Ok(g)
}

pub fn family(path: &Path) -> Result<Loaded<SymbolicFamily>, LoadError> {
    let f: Loaded<SymbolicFamily> = parse(path)?;
    f.value.validate().map_err(|e| error(path, None, e))?;
    Ok(f)
}

/// A comma-separated id list against `g`; `""` is the empty set.
pub fn id_list(g: &GroundSet, arg: &str, flag: &str) -> Result<matroid_union::Subset, LoadError> {
    let ids: Vec<&str> = arg.split(',').map(str::trim).filter(|s| !s.is_empty()).collect();
    g.subset(ids).map_err(|e| error(Path::new(flag), None, e))
}
