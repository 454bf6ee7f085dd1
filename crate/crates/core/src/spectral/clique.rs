use alloc::vec::Vec;

use crate::bits::VertexSet;
use crate::error::{Error, Result};
use crate::graph::SignedGraph;

pub const CLIQUE_LIMIT: usize = 64;
pub const BALANCED_CLIQUE_LIMIT: usize = 32;

/// Maximum clique size in the graph given by adjacency rows, restricted to
/// `cand`. Branch and bound with greedy colouring bounds.
fn max_clique(rows: &[VertexSet], cand: VertexSet) -> usize {
    fn colour_order(rows: &[VertexSet], p: VertexSet) -> Vec<(usize, usize)> {
        // (vertex, colour) with colours non-decreasing
        let mut out = Vec::with_capacity(p.len());
        let mut uncoloured = p;
        let mut colour = 0;
        while !uncoloured.is_empty() {
            colour += 1;
            let mut avail = uncoloured;
            while let Some(v) = avail.first() {
                avail.remove(v);
                avail = avail.difference(rows[v]);
                uncoloured.remove(v);
                out.push((v, colour));
            }
        }
        out
    }

    fn expand(rows: &[VertexSet], size: usize, mut p: VertexSet, best: &mut usize) {
        let order = colour_order(rows, p);
        for &(v, colour) in order.iter().rev() {
            if size + colour <= *best {
                return;
            }
            let next = p.intersection(rows[v]);
            if next.is_empty() {
                if size + 1 > *best {
                    *best = size + 1;
                }
            } else {
                expand(rows, size + 1, next, best);
            }
            p.remove(v);
        }
    }

    let mut best = 0;
    expand(rows, 0, cand, &mut best);
    best
}

/// `omega(G)` of the underlying graph.
pub fn clique_number(g: &SignedGraph) -> Result<usize> {
    let n = g.order();
    if n > CLIQUE_LIMIT {
        return Err(Error::ExactLimitExceeded {
            what: "clique number",
            order: n,
            limit: CLIQUE_LIMIT,
        });
    }
    let rows: Vec<VertexSet> = (0..n).map(|u| g.neighbors(u)).collect();
    Ok(max_clique(&rows, VertexSet::full(n)))
}

/// `omega_b(G)`: the largest clique whose signed subgraph is balanced.
///
/// A clique with smallest vertex `r` is balanced iff, with potentials
/// `s_x = sigma(r, x)`, every edge `xy` satisfies `sigma(xy) = s_x s_y`.
/// For each root this is a plain maximum-clique problem on the
/// compatibility graph of the later neighbours of `r`.
pub fn balanced_clique_number(g: &SignedGraph) -> Result<usize> {
    let n = g.order();
    if n > BALANCED_CLIQUE_LIMIT {
        return Err(Error::ExactLimitExceeded {
            what: "balanced clique number",
            order: n,
            limit: BALANCED_CLIQUE_LIMIT,
        });
    }
    if n == 0 {
        return Ok(0);
    }
    let mut best = 1;
    for r in 0..n {
        let later = VertexSet::full(n).difference(VertexSet::full(r + 1));
        let cand = g.neighbors(r).intersection(later);
        if cand.len() < best {
            continue;
        }
        let mut rows = alloc::vec![VertexSet::EMPTY; n];
        for x in cand {
            let sx = g.sign(r, x).unwrap();
            for y in cand.intersection(g.neighbors(x)) {
                let sy = g.sign(r, y).unwrap();
                if g.sign(x, y).unwrap() == sx * sy {
                    rows[x].insert(y);
                }
            }
        }
        best = best.max(1 + max_clique(&rows, cand));
    }
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::balance::is_balanced;
    use crate::constructions::{build_c3minus_k, build_cycle, complete_signed};
    use crate::graph::{Edge, Sign::*};

    fn brute_cliques(g: &SignedGraph) -> (usize, usize) {
        let n = g.order();
        let (mut w, mut wb) = (0, 0);
        for m in 0u32..1 << n {
            let s: VertexSet = (0..n).filter(|&i| m >> i & 1 == 1).collect();
            let complete = s.iter().all(|x| {
                s.difference(VertexSet::singleton(x))
                    .is_subset(g.neighbors(x))
            });
            if complete {
                w = w.max(s.len());
                if is_balanced(&g.restrict(s)) {
                    wb = wb.max(s.len());
                }
            }
        }
        (w, wb)
    }

    #[test]
    fn examples() {
        assert_eq!(clique_number(&complete_signed(5, &[]).unwrap()), Ok(5));
        assert_eq!(
            clique_number(&build_cycle(5, &[Positive; 5]).unwrap()),
            Ok(2)
        );
        // the triangle dominates only at n = 4, where the clique body is K_2
        assert_eq!(clique_number(&build_c3minus_k(4).unwrap()), Ok(3));
        for n in 5..=12 {
            assert_eq!(clique_number(&build_c3minus_k(n).unwrap()), Ok(n - 2));
        }
        assert_eq!(
            balanced_clique_number(&complete_signed(6, &[]).unwrap()),
            Ok(6)
        );
        let all: Vec<Edge> = (0..5)
            .flat_map(|u| (u + 1..5).map(move |v| Edge::new(u, v)))
            .collect();
        assert_eq!(
            balanced_clique_number(&complete_signed(5, &all).unwrap()),
            Ok(2)
        );
        assert_eq!(
            balanced_clique_number(&complete_signed(4, &[Edge::new(0, 1)]).unwrap()),
            Ok(3)
        );
        assert_eq!(balanced_clique_number(&SignedGraph::new(3).unwrap()), Ok(1));
    }

    #[test]
    fn limits() {
        assert!(clique_number(&SignedGraph::new(65).unwrap()).is_err());
        assert!(balanced_clique_number(&SignedGraph::new(33).unwrap()).is_err());
    }

    #[test]
    fn agree_with_brute_force() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        for _ in 0..200 {
            let n = rng.random_range(1..=8);
            let mut g = SignedGraph::new(n).unwrap();
            for u in 0..n {
                for v in u + 1..n {
                    match rng.random_range(0..4) {
                        0 => {}
                        1 => g.add_edge(u, v, Negative).unwrap(),
                        _ => g.add_edge(u, v, Positive).unwrap(),
                    }
                }
            }
            let (w, wb) = brute_cliques(&g);
            assert_eq!(clique_number(&g).unwrap(), w);
            assert_eq!(balanced_clique_number(&g).unwrap(), wb);
            assert!(wb <= w);
        }
    }
}
