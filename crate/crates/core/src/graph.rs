//! The signed graph value type.

use alloc::vec;
use alloc::vec::Vec;
use core::ops::{Mul, Neg};

use crate::bits::VertexSet;
use crate::error::{Error, Result};

/// Largest supported order; adjacency rows are 128-bit masks.
pub const MAX_ORDER: usize = 128;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Positive,
    Negative,
}

impl Sign {
    #[inline]
    pub fn value(self) -> i8 {
        match self {
            Sign::Positive => 1,
            Sign::Negative => -1,
        }
    }

    #[inline]
    pub fn is_negative(self) -> bool {
        self == Sign::Negative
    }

    pub fn from_value(v: i64) -> Option<Sign> {
        match v {
            1 => Some(Sign::Positive),
            -1 => Some(Sign::Negative),
            _ => None,
        }
    }
}

impl Mul for Sign {
    type Output = Sign;
    #[inline]
    fn mul(self, rhs: Sign) -> Sign {
        if self == rhs {
            Sign::Positive
        } else {
            Sign::Negative
        }
    }
}

impl Neg for Sign {
    type Output = Sign;
    #[inline]
    fn neg(self) -> Sign {
        match self {
            Sign::Positive => Sign::Negative,
            Sign::Negative => Sign::Positive,
        }
    }
}

/// An unordered vertex pair stored with `u < v`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
}

impl Edge {
    /// Normalizes the endpoint order. Panics on a loop.
    pub fn new(a: usize, b: usize) -> Self {
        assert_ne!(a, b, "edge endpoints must differ");
        if a < b {
            Edge { u: a, v: b }
        } else {
            Edge { u: b, v: a }
        }
    }
}

impl From<(usize, usize)> for Edge {
    fn from((a, b): (usize, usize)) -> Self {
        Edge::new(a, b)
    }
}

/// A simple graph on `0..n` whose edges carry signs.
///
/// Stored as two families of adjacency bitsets (positive and negative
/// neighbours), so symmetry and the absence of loops hold by construction
/// of the mutators.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedGraph {
    n: usize,
    pos: Vec<VertexSet>,
    neg: Vec<VertexSet>,
}

impl SignedGraph {
    pub fn new(n: usize) -> Result<Self> {
        if n > MAX_ORDER {
            return Err(Error::OrderTooLarge {
                order: n,
                max: MAX_ORDER,
            });
        }
        Ok(SignedGraph {
            n,
            pos: vec![VertexSet::EMPTY; n],
            neg: vec![VertexSet::EMPTY; n],
        })
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize, Sign)>,
    {
        let mut g = SignedGraph::new(n)?;
        for (u, v, s) in edges {
            g.add_edge(u, v, s)?;
        }
        Ok(g)
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    /// Number of edges, `e(G)`.
    pub fn size(&self) -> usize {
        self.pos
            .iter()
            .zip(&self.neg)
            .map(|(p, q)| p.len() + q.len())
            .sum::<usize>()
            / 2
    }

    pub fn negative_edge_count(&self) -> usize {
        self.neg.iter().map(|q| q.len()).sum::<usize>() / 2
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.n {
            Err(Error::VertexOutOfRange {
                vertex: v,
                order: self.n,
            })
        } else {
            Ok(())
        }
    }

    fn check_pair(&self, u: usize, v: usize) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        Ok(())
    }

    pub fn add_edge(&mut self, u: usize, v: usize, sign: Sign) -> Result<()> {
        self.check_pair(u, v)?;
        if self.has_edge(u, v) {
            let e = Edge::new(u, v);
            return Err(Error::DuplicateEdge(e.u, e.v));
        }
        self.put(u, v, sign);
        Ok(())
    }

    /// Sets the sign of an existing edge.
    pub fn set_sign(&mut self, u: usize, v: usize, sign: Sign) -> Result<()> {
        self.check_pair(u, v)?;
        if !self.has_edge(u, v) {
            let e = Edge::new(u, v);
            return Err(Error::NotAnEdge(e.u, e.v));
        }
        self.clear(u, v);
        self.put(u, v, sign);
        Ok(())
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) -> Result<Sign> {
        self.check_pair(u, v)?;
        match self.sign(u, v) {
            Some(s) => {
                self.clear(u, v);
                Ok(s)
            }
            None => {
                let e = Edge::new(u, v);
                Err(Error::NotAnEdge(e.u, e.v))
            }
        }
    }

    #[inline]
    fn put(&mut self, u: usize, v: usize, sign: Sign) {
        let rows = match sign {
            Sign::Positive => &mut self.pos,
            Sign::Negative => &mut self.neg,
        };
        rows[u].insert(v);
        rows[v].insert(u);
    }

    #[inline]
    fn clear(&mut self, u: usize, v: usize) {
        self.pos[u].remove(v);
        self.pos[v].remove(u);
        self.neg[u].remove(v);
        self.neg[v].remove(u);
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && (self.pos[u].contains(v) || self.neg[u].contains(v))
    }

    #[inline]
    pub fn sign(&self, u: usize, v: usize) -> Option<Sign> {
        if u >= self.n {
            None
        } else if self.pos[u].contains(v) {
            Some(Sign::Positive)
        } else if self.neg[u].contains(v) {
            Some(Sign::Negative)
        } else {
            None
        }
    }

    #[inline]
    pub fn neighbors(&self, u: usize) -> VertexSet {
        self.pos[u].union(self.neg[u])
    }

    #[inline]
    pub fn positive_neighbors(&self, u: usize) -> VertexSet {
        self.pos[u]
    }

    #[inline]
    pub fn negative_neighbors(&self, u: usize) -> VertexSet {
        self.neg[u]
    }

    #[inline]
    pub fn degree(&self, u: usize) -> usize {
        self.neighbors(u).len()
    }

    /// Edges sorted by `(u, v)` with their signs.
    pub fn edges(&self) -> impl Iterator<Item = (Edge, Sign)> + '_ {
        (0..self.n).flat_map(move |u| {
            let above = VertexSet(!((1u128 << u) - 1) & !(1u128 << u));
            self.neighbors(u)
                .intersection(above)
                .iter()
                .map(move |v| (Edge { u, v }, self.sign(u, v).unwrap()))
        })
    }

    pub fn negative_edges(&self) -> Vec<Edge> {
        self.edges()
            .filter(|(_, s)| s.is_negative())
            .map(|(e, _)| e)
            .collect()
    }

    /// The sign-forgetting view, `(G, +)`.
    pub fn underlying(&self) -> SignedGraph {
        SignedGraph {
            n: self.n,
            pos: (0..self.n).map(|u| self.neighbors(u)).collect(),
            neg: vec![VertexSet::EMPTY; self.n],
        }
    }

    pub fn same_underlying(&self, other: &SignedGraph) -> bool {
        self.n == other.n && (0..self.n).all(|u| self.neighbors(u) == other.neighbors(u))
    }

    /// `G_U`: flips every edge with exactly one endpoint in `set`.
    pub fn switch(&self, set: VertexSet) -> Result<SignedGraph> {
        if let Some(m) = set.max() {
            self.check_vertex(m)?;
        }
        let mut out = SignedGraph::new(self.n)?;
        for u in 0..self.n {
            let (keep_p, keep_n, flip_mask) = if set.contains(u) {
                (set, set, VertexSet::full(self.n).difference(set))
            } else {
                let rest = VertexSet::full(self.n).difference(set);
                (rest, rest, set)
            };
            out.pos[u] = self.pos[u]
                .intersection(keep_p)
                .union(self.neg[u].intersection(flip_mask));
            out.neg[u] = self.neg[u]
                .intersection(keep_n)
                .union(self.pos[u].intersection(flip_mask));
        }
        Ok(out)
    }

    /// Switches by a sign vector: vertices with `Negative` form the switching set.
    pub fn switch_by(&self, potentials: &[Sign]) -> Result<SignedGraph> {
        let set: VertexSet = potentials
            .iter()
            .enumerate()
            .filter(|(_, s)| s.is_negative())
            .map(|(v, _)| v)
            .collect();
        self.switch(set)
    }

    /// `-G`: every sign flipped.
    pub fn negate(&self) -> SignedGraph {
        SignedGraph {
            n: self.n,
            pos: self.neg.clone(),
            neg: self.pos.clone(),
        }
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn permute(&self, perm: &[usize]) -> Result<SignedGraph> {
        if perm.len() != self.n {
            return Err(Error::InvalidParameter(alloc::format!(
                "permutation of length {} for order {}",
                perm.len(),
                self.n
            )));
        }
        let mut seen = VertexSet::EMPTY;
        for &p in perm {
            self.check_vertex(p)?;
            if seen.contains(p) {
                return Err(Error::InvalidParameter("not a permutation".into()));
            }
            seen.insert(p);
        }
        let mut out = SignedGraph::new(self.n)?;
        for (e, s) in self.edges() {
            out.put(perm[e.u], perm[e.v], s);
        }
        Ok(out)
    }

    /// Vertex sets of the connected components, ordered by smallest member.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut seen = VertexSet::EMPTY;
        let mut out = Vec::new();
        for r in 0..self.n {
            if seen.contains(r) {
                continue;
            }
            let mut comp = VertexSet::singleton(r);
            let mut frontier = comp;
            while !frontier.is_empty() {
                let mut next = VertexSet::EMPTY;
                for x in frontier {
                    next = next.union(self.neighbors(x));
                }
                frontier = next.difference(comp);
                comp = comp.union(frontier);
            }
            seen = seen.union(comp);
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Sub-graph induced on `set`, keeping the original labels (vertices
    /// outside `set` become isolated).
    pub fn restrict(&self, set: VertexSet) -> SignedGraph {
        let mut out = self.clone();
        for u in 0..self.n {
            if set.contains(u) {
                out.pos[u] = out.pos[u].intersection(set);
                out.neg[u] = out.neg[u].intersection(set);
            } else {
                out.pos[u] = VertexSet::EMPTY;
                out.neg[u] = VertexSet::EMPTY;
            }
        }
        out
    }

    /// Dense `{-1, 0, +1}` adjacency matrix, row-major.
    pub fn adjacency_matrix(&self) -> Vec<i8> {
        let n = self.n;
        let mut a = vec![0i8; n * n];
        for (e, s) in self.edges() {
            a[e.u * n + e.v] = s.value();
            a[e.v * n + e.u] = s.value();
        }
        a
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (0..self.n).map(|u| self.degree(u)).collect();
        d.sort_unstable();
        d
    }
}
