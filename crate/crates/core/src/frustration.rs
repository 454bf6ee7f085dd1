//! Exact frustration index.

use alloc::vec::Vec;

use crate::bits::VertexSet;
use crate::error::{Error, Result};
use crate::graph::SignedGraph;

/// Largest order accepted by [`frustration_index`].
pub const FRUSTRATION_LIMIT: usize = 26;

/// Minimum number of edges whose removal leaves `g` balanced, i.e. the
/// minimum over potentials `s` of the number of edges with
/// `sigma(uv) s_u s_v = -1`.
///
/// Solved exactly per component by branch and bound over potentials (the
/// first vertex pinned to `+1`). Refuses orders above [`FRUSTRATION_LIMIT`]
/// instead of returning an estimate.
pub fn frustration_index(g: &SignedGraph) -> Result<usize> {
    if g.order() > FRUSTRATION_LIMIT {
        return Err(Error::ExactLimitExceeded {
            what: "frustration index",
            order: g.order(),
            limit: FRUSTRATION_LIMIT,
        });
    }
    Ok(g.components()
        .into_iter()
        .map(|c| component_frustration(g, c))
        .sum())
}

struct Bnb<'a> {
    g: &'a SignedGraph,
    order: Vec<usize>,
    best: usize,
}

impl Bnb<'_> {
    /// Violations of vertex `x` against the assigned sets if it joins the
    /// `+` side and the `-` side respectively.
    #[inline]
    fn costs(&self, x: usize, plus: VertexSet, minus: VertexSet) -> (usize, usize) {
        let p = self.g.positive_neighbors(x);
        let q = self.g.negative_neighbors(x);
        let as_plus = p.intersection(minus).len() + q.intersection(plus).len();
        let as_minus = p.intersection(plus).len() + q.intersection(minus).len();
        (as_plus, as_minus)
    }

    fn go(&mut self, depth: usize, plus: VertexSet, minus: VertexSet, cost: usize) {
        if cost >= self.best {
            return;
        }
        if depth == self.order.len() {
            self.best = cost;
            return;
        }
        // Each unassigned vertex must pay at least its cheaper side against
        // the assigned part; these lower bounds are over disjoint edge sets.
        let bound: usize = self.order[depth..]
            .iter()
            .map(|&x| {
                let (a, b) = self.costs(x, plus, minus);
                a.min(b)
            })
            .sum();
        if cost + bound >= self.best {
            return;
        }
        let x = self.order[depth];
        let (a, b) = self.costs(x, plus, minus);
        let mut p2 = plus;
        p2.insert(x);
        let mut m2 = minus;
        m2.insert(x);
        if a <= b {
            self.go(depth + 1, p2, minus, cost + a);
            self.go(depth + 1, plus, m2, cost + b);
        } else {
            self.go(depth + 1, plus, m2, cost + b);
            self.go(depth + 1, p2, minus, cost + a);
        }
    }
}

fn component_frustration(g: &SignedGraph, comp: VertexSet) -> usize {
    if comp.len() < 3 {
        return 0;
    }
    // BFS order so that most vertices have assigned neighbours early.
    let mut order = Vec::with_capacity(comp.len());
    let mut seen = VertexSet::singleton(comp.first().unwrap());
    order.push(comp.first().unwrap());
    let mut i = 0;
    while i < order.len() {
        let x = order[i];
        for y in g.neighbors(x).difference(seen) {
            seen.insert(y);
            order.push(y);
        }
        i += 1;
    }
    let edges_in: usize = comp.iter().map(|x| g.degree(x)).sum::<usize>() / 2;
    // Negative-edge count of the given signature is a valid upper bound.
    let upper = comp
        .iter()
        .map(|x| g.negative_neighbors(x).len())
        .sum::<usize>()
        / 2;
    let mut b = Bnb {
        g,
        order,
        best: upper.min(edges_in / 2) + 1,
    };
    let root = b.order[0];
    b.go(1, VertexSet::singleton(root), VertexSet::EMPTY, 0);
    b.best
}
