use std::collections::HashMap;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::subset::{Subset, MAX_ELEMENTS};

/// An ordered finite carrier set of element ids. Positions give the total order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroundSet {
    elems: Vec<String>,
    index: HashMap<String, usize>,
}

impl GroundSet {
    pub fn new<I, S>(ids: I) -> Result<Arc<Self>>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let elems: Vec<String> = ids.into_iter().map(Into::into).collect();
        if elems.len() > MAX_ELEMENTS {
            return Err(Error::GroundTooLarge(elems.len()));
        }
        let mut index = HashMap::with_capacity(elems.len());
        for (i, e) in elems.iter().enumerate() {
            if e.is_empty() || e.chars().any(char::is_whitespace) {
                return Err(Error::InvalidElement(e.clone()));
            }
            if index.insert(e.clone(), i).is_some() {
                return Err(Error::DuplicateElement(e.clone()));
            }
        }
        Ok(Arc::new(Self { elems, index }))
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    pub fn ids(&self) -> &[String] {
        &self.elems
    }

    pub fn id(&self, pos: usize) -> &str {
        &self.elems[pos]
    }

    pub fn position(&self, id: &str) -> Option<usize> {
        self.index.get(id).copied()
    }

    pub fn all(&self) -> Subset {
        Subset::full(self.len())
    }

    pub fn subset<I, S>(&self, ids: I) -> Result<Subset>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        ids.into_iter()
            .map(|s| {
                self.position(s.as_ref())
                    .ok_or_else(|| Error::UnknownElement(s.as_ref().to_string()))
            })
            .collect()
    }

    /// Element ids of `set`, sorted by id.
    pub fn names(&self, set: Subset) -> Vec<String> {
        let mut v: Vec<String> = set.iter().map(|i| self.elems[i].clone()).collect();
        v.sort();
        v
    }

    /// Element ids of `set`, in ground order.
    pub fn names_ordered(&self, set: Subset) -> Vec<String> {
        set.iter().map(|i| self.elems[i].clone()).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_duplicates_and_whitespace() {
        assert_eq!(
            GroundSet::new(["a", "b", "a"]).unwrap_err(),
            Error::DuplicateElement("a".into())
        );
        assert!(matches!(GroundSet::new(["a b"]), Err(Error::InvalidElement(_))));
        assert!(matches!(GroundSet::new([""]), Err(Error::InvalidElement(_))));
    }

    #[test]
    fn subsets_by_name() {
        let g = GroundSet::new(["x", "y", "z"]).unwrap();
        let s = g.subset(["z", "x"]).unwrap();
        assert_eq!(s, Subset::from_indices([0, 2]));
        assert_eq!(g.names(s), vec!["x", "z"]);
        assert!(g.subset(["w"]).is_err());
    }
}
