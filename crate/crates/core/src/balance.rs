//! Balance testing, spanning forests and tree-canonical signatures.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use crate::bits::VertexSet;
use crate::cycles::Cycle;
use crate::error::{Error, Result};
use crate::graph::{Edge, Sign, SignedGraph};

/// Certificate returned by [`balance`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BalanceWitness {
    /// `sigma(uv) * s_u * s_v = +1` on every edge.
    Potentials(Vec<Sign>),
    /// A cycle of sign `-1`.
    NegativeCycle(Cycle),
}

impl BalanceWitness {
    pub fn is_balanced(&self) -> bool {
        matches!(self, BalanceWitness::Potentials(_))
    }
}

/// A spanning forest given by its edge set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpanningForest {
    n: usize,
    rows: Vec<VertexSet>,
}

impl SpanningForest {
    /// Validates that `edges` form a spanning forest of `g`: edges of `g`,
    /// acyclic, and one tree per component of `g`.
    pub fn new(g: &SignedGraph, edges: &[Edge]) -> Result<Self> {
        let n = g.order();
        let mut rows = vec![VertexSet::EMPTY; n];
        let mut uf: Vec<usize> = (0..n).collect();
        fn find(uf: &mut [usize], mut x: usize) -> usize {
            while uf[x] != x {
                uf[x] = uf[uf[x]];
                x = uf[x];
            }
            x
        }
        for e in edges {
            if e.v >= n {
                return Err(Error::VertexOutOfRange {
                    vertex: e.v,
                    order: n,
                });
            }
            if !g.has_edge(e.u, e.v) {
                return Err(Error::InvalidForest("forest edge missing from graph"));
            }
            let (a, b) = (find(&mut uf, e.u), find(&mut uf, e.v));
            if a == b {
                return Err(Error::InvalidForest("forest contains a cycle"));
            }
            uf[a] = b;
            rows[e.u].insert(e.v);
            rows[e.v].insert(e.u);
        }
        if edges.len() != n - g.components().len() {
            return Err(Error::InvalidForest("forest does not span every component"));
        }
        Ok(SpanningForest { n, rows })
    }

    /// BFS from the smallest vertex of each component, neighbours visited in
    /// ascending order.
    pub fn canonical(g: &SignedGraph) -> Self {
        let n = g.order();
        let mut rows = vec![VertexSet::EMPTY; n];
        for (v, p) in bfs_forest(g).0.into_iter().enumerate() {
            if let Some(p) = p {
                rows[v].insert(p);
                rows[p].insert(v);
            }
        }
        SpanningForest { n, rows }
    }

    #[inline]
    pub fn contains(&self, u: usize, v: usize) -> bool {
        u < self.n && self.rows[u].contains(v)
    }

    pub fn edges(&self) -> Vec<Edge> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in self.rows[u].iter().filter(|&v| v > u) {
                out.push(Edge { u, v });
            }
        }
        out
    }

    /// Potentials with `+1` at the smallest vertex of every tree and
    /// `s_v = s_parent * sigma(parent, v)` along the forest.
    fn potentials(&self, g: &SignedGraph) -> Vec<Sign> {
        let n = self.n;
        let mut pot = vec![Sign::Positive; n];
        let mut seen = VertexSet::EMPTY;
        let mut queue = VecDeque::new();
        for r in 0..n {
            if seen.contains(r) {
                continue;
            }
            seen.insert(r);
            queue.push_back(r);
            while let Some(x) = queue.pop_front() {
                for y in self.rows[x].difference(seen) {
                    seen.insert(y);
                    pot[y] = pot[x] * g.sign(x, y).expect("forest edge in graph");
                    queue.push_back(y);
                }
            }
        }
        pot
    }
}

/// Parent pointers and discovery order of the canonical BFS forest.
fn bfs_forest(g: &SignedGraph) -> (Vec<Option<usize>>, Vec<usize>) {
    let n = g.order();
    let mut parent = vec![None; n];
    let mut order = Vec::with_capacity(n);
    let mut seen = VertexSet::EMPTY;
    let mut queue = VecDeque::new();
    for r in 0..n {
        if seen.contains(r) {
            continue;
        }
        seen.insert(r);
        queue.push_back(r);
        while let Some(x) = queue.pop_front() {
            order.push(x);
            for y in g.neighbors(x).difference(seen) {
                seen.insert(y);
                parent[y] = Some(x);
                queue.push_back(y);
            }
        }
    }
    (parent, order)
}

/// Balance test by potential propagation along the canonical BFS forest.
///
/// A non-tree edge that disagrees with the propagated potentials closes a
/// negative cycle through the two tree paths to their common ancestor.
pub fn balance(g: &SignedGraph) -> BalanceWitness {
    let (parent, order) = bfs_forest(g);
    let n = g.order();
    let mut pot = vec![Sign::Positive; n];
    let mut depth = vec![0usize; n];
    for &v in &order {
        if let Some(p) = parent[v] {
            pot[v] = pot[p] * g.sign(p, v).unwrap();
            depth[v] = depth[p] + 1;
        }
    }
    for (e, s) in g.edges() {
        if parent[e.u] == Some(e.v) || parent[e.v] == Some(e.u) {
            continue;
        }
        if s * pot[e.u] * pot[e.v] == Sign::Negative {
            // Walk both endpoints up to the lowest common ancestor.
            let (mut a, mut b) = (e.u, e.v);
            let mut left = vec![a];
            let mut right = vec![b];
            while depth[a] > depth[b] {
                a = parent[a].unwrap();
                left.push(a);
            }
            while depth[b] > depth[a] {
                b = parent[b].unwrap();
                right.push(b);
            }
            while a != b {
                a = parent[a].unwrap();
                b = parent[b].unwrap();
                left.push(a);
                right.push(b);
            }
            right.pop();
            right.reverse();
            left.extend(right);
            let cycle = Cycle::new(left).expect("tree path cycle is simple");
            return BalanceWitness::NegativeCycle(cycle.canonical());
        }
    }
    BalanceWitness::Potentials(pot)
}

pub fn is_balanced(g: &SignedGraph) -> bool {
    balance(g).is_balanced()
}

/// The unique switching-equivalent signature that is `+1` on every forest
/// edge. Without an explicit forest the canonical BFS forest is used.
pub fn tree_canonical_form(
    g: &SignedGraph,
    forest: Option<&SpanningForest>,
) -> Result<(SignedGraph, SpanningForest)> {
    let forest = match forest {
        Some(f) => {
            // Re-validate: the forest may have been built for another graph.
            SpanningForest::new(g, &f.edges())?
        }
        None => SpanningForest::canonical(g),
    };
    let pot = forest.potentials(g);
    let canon = g.switch_by(&pot)?;
    Ok((canon, forest))
}

/// Whether two signatures of the same underlying graph are switching
/// equivalent, i.e. whether `sigma1 * sigma2` is balanced.
pub fn switching_equivalent(g1: &SignedGraph, g2: &SignedGraph) -> Result<bool> {
    if !g1.same_underlying(g2) {
        return Err(Error::UnderlyingMismatch);
    }
    let mut product = g1.clone();
    for (e, s) in g2.edges() {
        let s1 = g1.sign(e.u, e.v).unwrap();
        product.set_sign(e.u, e.v, s1 * s)?;
    }
    Ok(is_balanced(&product))
}
