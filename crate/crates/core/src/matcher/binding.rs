use std::collections::btree_map::{self, BTreeMap};
use std::fmt;

use crate::error::{Error, Result};
use crate::graph::VertexId;

/// An injective map from query vertices to data vertices.
///
/// Ordered lexicographically by its (key, value) pairs in key order, which is
/// the canonical order of emitted solutions.
#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Binding(BTreeMap<VertexId, VertexId>);

impl Binding {
    pub fn new() -> Self {
        Self::default()
    }

    /// Builds a binding from label pairs; fails on bad labels, a repeated key,
    /// or a repeated value.
    pub fn from_pairs<'a>(pairs: impl IntoIterator<Item = (&'a str, &'a str)>) -> Result<Self> {
        let mut b = Binding::new();
        for (k, v) in pairs {
            b.insert(VertexId::new(k)?, VertexId::new(v)?)?;
        }
        Ok(b)
    }

    pub fn insert(&mut self, key: VertexId, value: VertexId) -> Result<()> {
        if self.0.contains_key(&key) {
            return Err(Error::NotInjective(format!(
                "query vertex {key} bound twice"
            )));
        }
        if self.0.values().any(|v| v == &value) {
            return Err(Error::NotInjective(format!(
                "data vertex {value} bound twice"
            )));
        }
        self.0.insert(key, value);
        Ok(())
    }

    pub(crate) fn from_map_unchecked(map: BTreeMap<VertexId, VertexId>) -> Self {
        Binding(map)
    }

    pub fn get(&self, key: &VertexId) -> Option<&VertexId> {
        self.0.get(key)
    }

    pub fn get_str(&self, key: &str) -> Option<&VertexId> {
        self.0
            .iter()
            .find(|(k, _)| k.as_str() == key)
            .map(|(_, v)| v)
    }

    pub fn contains_key(&self, key: &VertexId) -> bool {
        self.0.contains_key(key)
    }

    pub fn contains_value(&self, value: &VertexId) -> bool {
        self.0.values().any(|v| v == value)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> btree_map::Iter<'_, VertexId, VertexId> {
        self.0.iter()
    }

    pub fn keys(&self) -> impl Iterator<Item = &VertexId> {
        self.0.keys()
    }

    pub fn values(&self) -> impl Iterator<Item = &VertexId> {
        self.0.values()
    }

    /// Keys and values both distinct; always true for values built through
    /// [`Binding::insert`].
    pub fn is_injective(&self) -> bool {
        let mut values: Vec<&VertexId> = self.0.values().collect();
        values.sort();
        values.windows(2).all(|w| w[0] != w[1])
    }

    /// Union of two bindings, or `None` if they share a key or a value.
    pub fn union(&self, other: &Binding) -> Option<Binding> {
        if !is_valid(other, self) {
            return None;
        }
        let mut map = self.0.clone();
        map.extend(other.iter().map(|(k, v)| (k.clone(), v.clone())));
        Some(Binding(map))
    }
}

impl<'a> IntoIterator for &'a Binding {
    type Item = (&'a VertexId, &'a VertexId);
    type IntoIter = btree_map::Iter<'a, VertexId, VertexId>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

impl fmt::Debug for Binding {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, (k, v)) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{k}={v}")?;
        }
        f.write_str("}")
    }
}

/// A partial solution may extend `current` when it binds no query vertex and
/// no data vertex that `current` already uses.
pub fn is_valid_with<'a, Q: 'a, D: 'a>(
    partial: impl IntoIterator<Item = (&'a Q, &'a D)>,
    bound_key: impl Fn(&Q) -> bool,
    used_value: impl Fn(&D) -> bool,
) -> bool {
    partial
        .into_iter()
        .all(|(k, v)| !bound_key(k) && !used_value(v))
}

pub fn is_valid(partial: &Binding, current: &Binding) -> bool {
    is_valid_with(
        partial,
        |k| current.contains_key(k),
        |v| current.contains_value(v),
    )
}
