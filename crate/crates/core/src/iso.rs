//! Switching isomorphism by backtracking.
//!
//! Vertices of the first graph are mapped in BFS order, so every vertex
//! after the root of its component has an already-mapped neighbour. That
//! neighbour fixes the switching potential of the new vertex, and all other
//! mapped neighbours must then agree with it.

use alloc::vec;
use alloc::vec::Vec;

use crate::bits::VertexSet;
use crate::graph::{Sign, SignedGraph};

/// Counts of (positive, negative) triangles; invariant under switching and
/// relabeling.
fn triangle_signature(g: &SignedGraph) -> (usize, usize) {
    let (mut p, mut q) = (0, 0);
    for u in 0..g.order() {
        for v in g.neighbors(u).iter().filter(|&v| v > u) {
            let common = g.neighbors(u).intersection(g.neighbors(v));
            for w in common.iter().filter(|&w| w > v) {
                let s = g.sign(u, v).unwrap() * g.sign(u, w).unwrap() * g.sign(v, w).unwrap();
                if s == Sign::Positive {
                    p += 1;
                } else {
                    q += 1;
                }
            }
        }
    }
    (p, q)
}

fn bfs_order(g: &SignedGraph) -> Vec<usize> {
    let n = g.order();
    let mut order = Vec::with_capacity(n);
    let mut seen = VertexSet::EMPTY;
    // Start each component at a vertex of maximum degree.
    while order.len() < n {
        let root = (0..n)
            .filter(|&v| !seen.contains(v))
            .max_by_key(|&v| (g.degree(v), core::cmp::Reverse(v)))
            .unwrap();
        seen.insert(root);
        let start = order.len();
        order.push(root);
        let mut i = start;
        while i < order.len() {
            let x = order[i];
            let mut next: Vec<usize> = g.neighbors(x).difference(seen).iter().collect();
            next.sort_by_key(|&y| core::cmp::Reverse(g.degree(y)));
            for y in next {
                seen.insert(y);
                order.push(y);
            }
            i += 1;
        }
    }
    order
}

struct Matcher<'a> {
    g1: &'a SignedGraph,
    g2: &'a SignedGraph,
    order: Vec<usize>,
    map: Vec<usize>,
    pot: Vec<Sign>,
    used: VertexSet,
}

impl Matcher<'_> {
    fn extend(&mut self, depth: usize) -> bool {
        if depth == self.order.len() {
            return true;
        }
        let x = self.order[depth];
        let mapped: Vec<usize> = self.order[..depth].to_vec();
        let nx1 = self.g1.neighbors(x);
        let deg = self.g1.degree(x);
        let anchor = mapped.iter().copied().find(|&p| nx1.contains(p));
        for y in 0..self.g2.order() {
            if self.used.contains(y) || self.g2.degree(y) != deg {
                continue;
            }
            let ny2 = self.g2.neighbors(y);
            let pot_y = match anchor {
                Some(p) => {
                    if !ny2.contains(self.map[p]) {
                        continue;
                    }
                    self.g1.sign(x, p).unwrap()
                        * self.g2.sign(y, self.map[p]).unwrap()
                        * self.pot[p]
                }
                None => Sign::Positive,
            };
            let ok = mapped.iter().all(|&p| {
                let q = self.map[p];
                match (self.g1.sign(x, p), self.g2.sign(y, q)) {
                    (None, None) => true,
                    (Some(s1), Some(s2)) => s1 * s2 == pot_y * self.pot[p],
                    _ => false,
                }
            });
            if !ok {
                continue;
            }
            self.map[x] = y;
            self.pot[x] = pot_y;
            self.used.insert(y);
            if self.extend(depth + 1) {
                return true;
            }
            self.used.remove(y);
        }
        false
    }
}

/// Whether some relabeling of `g1` is switching equivalent to `g2`.
/// Exponential in the worst case; intended for small orders.
pub fn switching_isomorphic(g1: &SignedGraph, g2: &SignedGraph) -> bool {
    if g1.order() != g2.order()
        || g1.size() != g2.size()
        || g1.degree_sequence() != g2.degree_sequence()
        || triangle_signature(g1) != triangle_signature(g2)
    {
        return false;
    }
    let n = g1.order();
    let mut m = Matcher {
        g1,
        g2,
        order: bfs_order(g1),
        map: vec![usize::MAX; n],
        pot: vec![Sign::Positive; n],
        used: VertexSet::EMPTY,
    };
    m.extend(0)
}
