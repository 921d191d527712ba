use std::fmt;

use crate::error::{Error, Result};
use crate::graph::VertexId;
use crate::graphlet::Graphlet;

use super::Binding;

/// A position in a pattern graphlet: an unbound query vertex or a data vertex.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Term<Q = VertexId, D = VertexId> {
    Variable(Q),
    Constant(D),
}

impl<Q, D> Term<Q, D> {
    pub fn is_variable(&self) -> bool {
        matches!(self, Term::Variable(_))
    }

    pub fn as_variable(&self) -> Option<&Q> {
        match self {
            Term::Variable(q) => Some(q),
            Term::Constant(_) => None,
        }
    }

    pub fn as_constant(&self) -> Option<&D> {
        match self {
            Term::Constant(d) => Some(d),
            Term::Variable(_) => None,
        }
    }
}

impl<Q: fmt::Display, D: fmt::Display> fmt::Debug for Term<Q, D> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::Variable(q) => write!(f, "{q}"),
            Term::Constant(d) => write!(f, "{d}"),
        }
    }
}

/// A boundary of a pattern graphlet.
pub type TermPair<Q = VertexId, D = VertexId> = (Term<Q, D>, Term<Q, D>);

/// A query graphlet whose positions may already be bound to data vertices.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PatternGraphlet<Q = VertexId, D = VertexId> {
    hub: Term<Q, D>,
    neighbors: Vec<Term<Q, D>>,
    boundaries: Vec<TermPair<Q, D>>,
}

impl<Q: Clone + Eq, D: Clone + Eq> PatternGraphlet<Q, D> {
    /// Fails when a neighbor term repeats or a boundary uses a term that is
    /// not a neighbor.
    pub fn new(
        hub: Term<Q, D>,
        neighbors: Vec<Term<Q, D>>,
        boundaries: Vec<TermPair<Q, D>>,
    ) -> Result<Self> {
        for (i, t) in neighbors.iter().enumerate() {
            if neighbors[..i].contains(t) {
                return Err(Error::InvalidGraphlet(
                    "pattern repeats a neighbor term".into(),
                ));
            }
        }
        if boundaries
            .iter()
            .any(|(a, b)| a == b || !neighbors.contains(a) || !neighbors.contains(b))
        {
            return Err(Error::InvalidGraphlet(
                "pattern boundary must join two distinct neighbor terms".into(),
            ));
        }
        Ok(PatternGraphlet {
            hub,
            neighbors,
            boundaries,
        })
    }
}

impl<Q, D> PatternGraphlet<Q, D> {
    pub fn hub(&self) -> &Term<Q, D> {
        &self.hub
    }

    pub fn neighbors(&self) -> &[Term<Q, D>] {
        &self.neighbors
    }

    pub fn boundaries(&self) -> &[TermPair<Q, D>] {
        &self.boundaries
    }

    /// True when no position holds a variable.
    pub fn is_ground(&self) -> bool {
        !self.hub.is_variable() && self.neighbors.iter().all(|t| !t.is_variable())
    }
}

impl<Q: Ord + Clone, D: Ord + Clone> PatternGraphlet<Q, D> {
    /// Sorted neighbors and boundaries, for comparing patterns as sets.
    pub fn canonical(&self) -> Self {
        let mut neighbors = self.neighbors.clone();
        neighbors.sort();
        let mut boundaries: Vec<_> = self
            .boundaries
            .iter()
            .map(|(a, b)| {
                if a <= b {
                    (a.clone(), b.clone())
                } else {
                    (b.clone(), a.clone())
                }
            })
            .collect();
        boundaries.sort();
        PatternGraphlet {
            hub: self.hub.clone(),
            neighbors,
            boundaries,
        }
    }
}

impl PatternGraphlet {
    /// The unbound pattern of a query graphlet: every position is a variable.
    pub fn from_graphlet(g: &Graphlet) -> Self {
        PatternGraphlet {
            hub: Term::Variable(g.hub().clone()),
            neighbors: g.neighbors().iter().cloned().map(Term::Variable).collect(),
            boundaries: g
                .boundaries()
                .iter()
                .map(|b| {
                    (
                        Term::Variable(b.first().clone()),
                        Term::Variable(b.second().clone()),
                    )
                })
                .collect(),
        }
    }
}

impl<Q: fmt::Display, D: fmt::Display> fmt::Debug for PatternGraphlet<Q, D> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<{:?}, {{", self.hub)?;
        for (i, t) in self.neighbors.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{t:?}")?;
        }
        f.write_str("}, {")?;
        for (i, (a, b)) in self.boundaries.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{{{a:?}, {b:?}}}")?;
        }
        f.write_str("}>")
    }
}

/// Replaces every variable that `lookup` binds with its data vertex.
///
/// Returns `None` when two neighbor positions would hold the same constant;
/// no injective match exists for such a pattern.
pub fn substitute_with<Q, D>(
    pattern: &PatternGraphlet<Q, D>,
    lookup: impl Fn(&Q) -> Option<D>,
) -> Option<PatternGraphlet<Q, D>>
where
    Q: Clone,
    D: Clone + Eq,
{
    let term = |t: &Term<Q, D>| match t {
        Term::Variable(q) => lookup(q).map_or_else(|| t.clone(), Term::Constant),
        Term::Constant(_) => t.clone(),
    };
    let neighbors: Vec<Term<Q, D>> = pattern.neighbors.iter().map(term).collect();
    for (i, t) in neighbors.iter().enumerate() {
        if let Term::Constant(c) = t {
            if neighbors[..i].iter().any(|u| u.as_constant() == Some(c)) {
                return None;
            }
        }
    }
    Some(PatternGraphlet {
        hub: term(&pattern.hub),
        neighbors,
        boundaries: pattern
            .boundaries
            .iter()
            .map(|(a, b)| (term(a), term(b)))
            .collect(),
    })
}

pub fn substitute(pattern: &PatternGraphlet, current: &Binding) -> Option<PatternGraphlet> {
    substitute_with(pattern, |q| current.get(q).cloned())
}
