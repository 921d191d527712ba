//! Unification of a pattern graphlet against data graphlets.
//!
//! A data graphlet `<v, N, B>` unifies with a pattern when the pattern's hub
//! maps to `v`, its neighbors map into `N`, and its boundaries map into `B`.
//! Candidates are first narrowed by neighbor and boundary counts and by the
//! constants already present in the pattern.

use crate::graph::{Edge, VertexId};
use crate::graphlet::Graphlet;

use super::pattern::{PatternGraphlet, Term};

/// Read access to a data graphlet, over labels or dense indices.
pub trait GraphletView<D> {
    fn hub(&self) -> &D;
    fn neighbors(&self) -> &[D];
    fn has_neighbor(&self, v: &D) -> bool;
    fn has_boundary(&self, a: &D, b: &D) -> bool;
    fn boundary_count(&self) -> usize;
}

impl GraphletView<VertexId> for Graphlet {
    fn hub(&self) -> &VertexId {
        Graphlet::hub(self)
    }

    fn neighbors(&self) -> &[VertexId] {
        Graphlet::neighbors(self)
    }

    fn has_neighbor(&self, v: &VertexId) -> bool {
        Graphlet::has_neighbor(self, v)
    }

    fn has_boundary(&self, a: &VertexId, b: &VertexId) -> bool {
        Edge::new(a.clone(), b.clone()).is_some_and(|e| self.boundaries().binary_search(&e).is_ok())
    }

    fn boundary_count(&self) -> usize {
        self.boundaries().len()
    }
}

/// Whether unified values may coincide with constants already in the pattern.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum UnifyMode {
    /// Values avoid every constant of the pattern.
    #[default]
    Strict,
    /// Values may repeat pattern constants; validity checking discards them later.
    Lax,
}

/// One unifier: the pattern's variables paired with data vertices, hub first
/// and then neighbors in pattern order.
pub type Assignment<Q = VertexId, D = VertexId> = Vec<(Q, D)>;

type TermRef<'a, Q, D> = (&'a Term<Q, D>, &'a Term<Q, D>);

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum UnifyOutcome<Q = VertexId, D = VertexId> {
    /// No data graphlet unifies.
    NoMatch,
    /// The pattern holds no variables and some data graphlet satisfies it.
    Ground,
    /// At least one unifier; distinct by construction.
    Partial(Vec<Assignment<Q, D>>),
}

fn resolve<'a, Q: Eq, D>(t: &'a Term<Q, D>, vars: &[&Q], values: &[&'a D]) -> Option<&'a D> {
    match t {
        Term::Constant(d) => Some(d),
        Term::Variable(q) => vars
            .iter()
            .position(|v| *v == q)
            .and_then(|i| values.get(i).copied()),
    }
}

/// The cheap pre-check on a data graphlet: size thresholds plus every
/// constant constraint of the pattern.
pub fn passes_filter<Q, D, G>(g: &G, q: &PatternGraphlet<Q, D>) -> bool
where
    D: Eq,
    G: GraphletView<D>,
{
    if q.neighbors().len() > g.neighbors().len() || q.boundaries().len() > g.boundary_count() {
        return false;
    }
    if let Term::Constant(c) = q.hub() {
        if c != g.hub() {
            return false;
        }
    }
    q.neighbors()
        .iter()
        .filter_map(Term::as_constant)
        .all(|c| g.has_neighbor(c))
        && q.boundaries().iter().all(|(a, b)| match (a, b) {
            (Term::Constant(x), Term::Constant(y)) => g.has_boundary(x, y),
            _ => true,
        })
}

pub fn candidate_filter<'a, Q, D, G>(
    data: impl IntoIterator<Item = &'a G>,
    q: &'a PatternGraphlet<Q, D>,
) -> impl Iterator<Item = &'a G>
where
    D: Eq,
    G: GraphletView<D> + 'a,
{
    data.into_iter().filter(move |g| passes_filter(*g, q))
}

/// All unifiers of `q` against one data graphlet that passed the filter.
pub fn unify_one<Q, D, G>(
    g: &G,
    q: &PatternGraphlet<Q, D>,
    mode: UnifyMode,
) -> Vec<Assignment<Q, D>>
where
    Q: Clone + Eq,
    D: Clone + Eq,
    G: GraphletView<D>,
{
    let constants: Vec<&D> = q.neighbors().iter().filter_map(Term::as_constant).collect();
    let hub = match q.hub() {
        Term::Constant(c) if c != g.hub() => return Vec::new(),
        Term::Constant(_) => None,
        Term::Variable(x) => {
            if mode == UnifyMode::Strict && constants.contains(&g.hub()) {
                return Vec::new();
            }
            Some((x.clone(), g.hub().clone()))
        }
    };
    if !constants.iter().all(|c| g.has_neighbor(c)) {
        return Vec::new();
    }

    let vars: Vec<&Q> = q.neighbors().iter().filter_map(Term::as_variable).collect();
    let pool: Vec<&D> = g
        .neighbors()
        .iter()
        .filter(|d| mode == UnifyMode::Lax || !constants.contains(d))
        .collect();

    // each boundary is checked as soon as its last variable is assigned
    let mut checks: Vec<Vec<TermRef<'_, Q, D>>> = vec![Vec::new(); vars.len()];
    for (a, b) in q.boundaries() {
        let depth = |t: &Term<Q, D>| {
            t.as_variable()
                .and_then(|x| vars.iter().position(|v| *v == x))
        };
        match depth(a).max(depth(b)) {
            Some(level) => checks[level].push((a, b)),
            None => {
                let (x, y) = (a.as_constant().unwrap(), b.as_constant().unwrap());
                if !g.has_boundary(x, y) {
                    return Vec::new();
                }
            }
        }
    }

    struct Walk<'a, Q, D, G> {
        g: &'a G,
        vars: &'a [&'a Q],
        pool: &'a [&'a D],
        checks: &'a [Vec<TermRef<'a, Q, D>>],
        taken: Vec<bool>,
        values: Vec<&'a D>,
        hub: &'a Option<(Q, D)>,
        out: Vec<Assignment<Q, D>>,
    }

    impl<'a, Q: Clone + Eq, D: Clone + Eq, G: GraphletView<D>> Walk<'a, Q, D, G> {
        fn extend(&mut self, level: usize) {
            if level == self.vars.len() {
                let assignment = self
                    .hub
                    .iter()
                    .cloned()
                    .chain(
                        self.vars
                            .iter()
                            .zip(&self.values)
                            .map(|(q, d)| ((*q).clone(), (*d).clone())),
                    )
                    .collect();
                self.out.push(assignment);
                return;
            }
            for i in 0..self.pool.len() {
                if self.taken[i] {
                    continue;
                }
                self.values.push(self.pool[i]);
                let ok = self.checks[level].iter().all(|(a, b)| {
                    match (
                        resolve(a, self.vars, &self.values),
                        resolve(b, self.vars, &self.values),
                    ) {
                        (Some(x), Some(y)) => self.g.has_boundary(x, y),
                        _ => false,
                    }
                });
                if ok {
                    self.taken[i] = true;
                    self.extend(level + 1);
                    self.taken[i] = false;
                }
                self.values.pop();
            }
        }
    }

    let mut walk = Walk {
        g,
        vars: &vars,
        pool: &pool,
        checks: &checks,
        taken: vec![false; pool.len()],
        values: Vec::with_capacity(vars.len()),
        hub: &hub,
        out: Vec::new(),
    };
    walk.extend(0);
    walk.out
}

/// Unifies `q` against a collection of data graphlets.
pub fn unify<'a, Q, D, G>(
    data: impl IntoIterator<Item = &'a G>,
    q: &PatternGraphlet<Q, D>,
    mode: UnifyMode,
) -> UnifyOutcome<Q, D>
where
    Q: Clone + Eq,
    D: Clone + Eq,
    G: GraphletView<D> + 'a,
{
    let mut candidates = data.into_iter().filter(|g| passes_filter(*g, q));
    if q.is_ground() {
        return if candidates.next().is_some() {
            UnifyOutcome::Ground
        } else {
            UnifyOutcome::NoMatch
        };
    }
    let unifiers: Vec<Assignment<Q, D>> = candidates.flat_map(|g| unify_one(g, q, mode)).collect();
    if unifiers.is_empty() {
        UnifyOutcome::NoMatch
    } else {
        UnifyOutcome::Partial(unifiers)
    }
}
