//! Negative cycles of prescribed length.
//!
//! Searches run on the tree-canonical signature. There every forest edge is
//! positive, so a cycle is negative iff it uses an odd number of the
//! remaining negative edges `F`. Each negative cycle is found exactly once,
//! from the smallest `F`-edge it contains: when searching from `f_i` the
//! edges `f_0..f_i` are removed and we look for a positive path of length
//! `l - 1` between the endpoints of `f_i`.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use crate::balance::{is_balanced, tree_canonical_form};
use crate::bits::VertexSet;
use crate::error::{Error, Result};
use crate::graph::{Sign, SignedGraph};

/// A cycle given by its vertex sequence `v0, .., v_{l-1}` (closing edge
/// `v_{l-1} v0` implied).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cycle(Vec<usize>);

impl Cycle {
    pub fn new(vertices: Vec<usize>) -> Result<Self> {
        if vertices.len() < 3 {
            return Err(Error::CycleTooShort(vertices.len()));
        }
        let mut seen = BTreeSet::new();
        for &v in &vertices {
            if !seen.insert(v) {
                return Err(Error::RepeatedVertex(v));
            }
        }
        Ok(Cycle(vertices))
    }

    pub fn vertices(&self) -> &[usize] {
        &self.0
    }

    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.0.len()
    }

    /// Consecutive pairs including the closing pair.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let l = self.0.len();
        (0..l).map(move |i| (self.0[i], self.0[(i + 1) % l]))
    }

    /// Product of the edge signs along the cycle.
    pub fn sign(&self, g: &SignedGraph) -> Result<Sign> {
        let mut acc = Sign::Positive;
        for (a, b) in self.pairs() {
            for x in [a, b] {
                if x >= g.order() {
                    return Err(Error::VertexOutOfRange {
                        vertex: x,
                        order: g.order(),
                    });
                }
            }
            let s = g.sign(a, b).ok_or({
                let (u, v) = if a < b { (a, b) } else { (b, a) };
                Error::NotAnEdge(u, v)
            })?;
            acc = acc * s;
        }
        Ok(acc)
    }

    /// Rotation starting at the minimum vertex, oriented towards the
    /// smaller of its two cycle neighbours.
    pub fn canonical(&self) -> Cycle {
        let l = self.0.len();
        let (i, _) = self.0.iter().enumerate().min_by_key(|(_, &v)| v).unwrap();
        let next = self.0[(i + 1) % l];
        let prev = self.0[(i + l - 1) % l];
        let out = if next <= prev {
            (0..l).map(|j| self.0[(i + j) % l]).collect()
        } else {
            (0..l).map(|j| self.0[(i + l - j) % l]).collect()
        };
        Cycle(out)
    }
}

/// Sign of the cycle visiting `vertices` in order.
pub fn cycle_sign(g: &SignedGraph, vertices: &[usize]) -> Result<Sign> {
    Cycle::new(vertices.to_vec())?.sign(g)
}

/// Mutable copy of the positive/negative adjacency rows.
#[derive(Clone)]
pub(crate) struct SignedRows {
    pub pos: Vec<VertexSet>,
    pub neg: Vec<VertexSet>,
}

impl SignedRows {
    pub fn of(g: &SignedGraph) -> Self {
        let n = g.order();
        SignedRows {
            pos: (0..n).map(|u| g.positive_neighbors(u)).collect(),
            neg: (0..n).map(|u| g.negative_neighbors(u)).collect(),
        }
    }

    pub fn remove(&mut self, u: usize, v: usize) {
        self.pos[u].remove(v);
        self.pos[v].remove(u);
        self.neg[u].remove(v);
        self.neg[v].remove(u);
    }

    fn order(&self) -> usize {
        self.pos.len()
    }
}

/// Depth-first search for simple `src -> dst` paths with a fixed number of
/// edges and a prescribed sign product.
///
/// Every node recomputes, on the graph minus the current path, the sets of
/// vertices that reach `dst` by a walk of exactly `j` edges with each sign.
/// A successor is expanded only if it lies in the right set, which is a
/// necessary condition for completing the path.
struct PathSearch<'a> {
    rows: &'a SignedRows,
    dst: usize,
    want: Sign,
    path: Vec<usize>,
    layers: Vec<(VertexSet, VertexSet)>,
}

impl<'a> PathSearch<'a> {
    fn new(rows: &'a SignedRows, dst: usize, want: Sign, edges: usize) -> Self {
        PathSearch {
            rows,
            dst,
            want,
            path: Vec::with_capacity(edges + 1),
            layers: vec![(VertexSet::EMPTY, VertexSet::EMPTY); edges.max(1)],
        }
    }

    /// `layers[j] = (walk of j edges with sign +, with sign -)`.
    fn fill_layers(&mut self, visited: VertexSet, upto: usize) {
        let n = self.rows.order();
        let avail = VertexSet::full(n)
            .difference(visited)
            .difference(VertexSet::singleton(self.dst));
        self.layers[0] = (VertexSet::singleton(self.dst), VertexSet::EMPTY);
        for j in 1..=upto {
            let (rp, rn) = self.layers[j - 1];
            let mut frontier = VertexSet::EMPTY;
            for x in rp.union(rn) {
                frontier = frontier.union(self.rows.pos[x]).union(self.rows.neg[x]);
            }
            let mut p = VertexSet::EMPTY;
            let mut q = VertexSet::EMPTY;
            for x in frontier.intersection(avail) {
                let (xp, xn) = (self.rows.pos[x], self.rows.neg[x]);
                if !xp.intersection(rp).is_empty() || !xn.intersection(rn).is_empty() {
                    p.insert(x);
                }
                if !xp.intersection(rn).is_empty() || !xn.intersection(rp).is_empty() {
                    q.insert(x);
                }
            }
            self.layers[j] = (p, q);
            if p.is_empty() && q.is_empty() {
                for k in j + 1..=upto {
                    self.layers[k] = (VertexSet::EMPTY, VertexSet::EMPTY);
                }
                return;
            }
        }
    }

    /// Returns `true` when the visitor asked to stop.
    fn run<F>(&mut self, src: usize, edges: usize, visit: &mut F) -> bool
    where
        F: FnMut(&[usize]) -> bool,
    {
        self.path.clear();
        self.path.push(src);
        self.step(src, VertexSet::singleton(src), edges, Sign::Positive, visit)
    }

    fn step<F>(
        &mut self,
        cur: usize,
        visited: VertexSet,
        remaining: usize,
        acc: Sign,
        visit: &mut F,
    ) -> bool
    where
        F: FnMut(&[usize]) -> bool,
    {
        if remaining == 0 {
            debug_assert_eq!(cur, self.dst);
            return visit(&self.path);
        }
        self.fill_layers(visited, remaining - 1);
        let (lp, ln) = self.layers[remaining - 1];
        let need = self.want * acc;
        let (via_pos, via_neg) = match need {
            Sign::Positive => (lp, ln),
            Sign::Negative => (ln, lp),
        };
        let cand_pos = self.rows.pos[cur].intersection(via_pos).difference(visited);
        let cand_neg = self.rows.neg[cur].intersection(via_neg).difference(visited);
        for y in cand_pos.union(cand_neg) {
            let t = if cand_pos.contains(y) {
                Sign::Positive
            } else {
                Sign::Negative
            };
            self.path.push(y);
            let mut next = visited;
            next.insert(y);
            if self.step(y, next, remaining - 1, acc * t, visit) {
                return true;
            }
            self.path.pop();
        }
        false
    }
}

/// Some simple path `src -> dst` with exactly `edges` edges and sign `want`.
pub fn find_signed_path(
    g: &SignedGraph,
    src: usize,
    dst: usize,
    edges: usize,
    want: Sign,
) -> Option<Vec<usize>> {
    find_path_in(&SignedRows::of(g), src, dst, edges, want)
}

pub(crate) fn find_path_in(
    rows: &SignedRows,
    src: usize,
    dst: usize,
    edges: usize,
    want: Sign,
) -> Option<Vec<usize>> {
    if src == dst || edges == 0 || src >= rows.order() || dst >= rows.order() {
        return None;
    }
    let mut search = PathSearch::new(rows, dst, want, edges);
    let mut found = None;
    search.run(src, edges, &mut |p: &[usize]| {
        found = Some(p.to_vec());
        true
    });
    found
}

fn check_length(g: &SignedGraph, length: usize) -> Result<()> {
    if length < 3 || length > g.order() {
        Err(Error::LengthOutOfRange {
            length,
            order: g.order(),
        })
    } else {
        Ok(())
    }
}

/// Runs the restricted search; `visit` receives canonical cycles and
/// returns `true` to stop.
fn search_negative_cycles<F>(g: &SignedGraph, length: usize, mut visit: F) -> Result<()>
where
    F: FnMut(Cycle) -> bool,
{
    check_length(g, length)?;
    let (canon, _) = tree_canonical_form(g, None)?;
    let negative = canon.negative_edges();
    let mut rows = SignedRows::of(&canon);
    for f in negative {
        rows.remove(f.u, f.v);
        let mut search = PathSearch::new(&rows, f.v, Sign::Positive, length - 1);
        let stop = search.run(f.u, length - 1, &mut |p: &[usize]| {
            visit(Cycle(p.to_vec()).canonical())
        });
        if stop {
            break;
        }
    }
    Ok(())
}

/// A negative cycle on exactly `length` vertices, if one exists.
pub fn find_negative_cycle_of_length(g: &SignedGraph, length: usize) -> Result<Option<Cycle>> {
    let mut found = None;
    search_negative_cycles(g, length, |c| {
        found = Some(c);
        true
    })?;
    Ok(found)
}

/// `true` iff `g` has no negative cycle of length `length`.
pub fn is_cl_minus_free(g: &SignedGraph, length: usize) -> Result<bool> {
    Ok(find_negative_cycle_of_length(g, length)?.is_none())
}

/// Length of a shortest negative cycle; `None` iff `g` is balanced.
pub fn negative_girth(g: &SignedGraph) -> Option<usize> {
    if is_balanced(g) {
        return None;
    }
    (3..=g.order()).find(|&l| {
        find_negative_cycle_of_length(g, l)
            .expect("length in range")
            .is_some()
    })
}

/// Up to `limit` distinct negative `length`-cycles in canonical form,
/// sorted.
pub fn enumerate_negative_cycles(
    g: &SignedGraph,
    length: usize,
    limit: usize,
) -> Result<Vec<Cycle>> {
    if limit == 0 {
        return Err(Error::InvalidParameter("limit must be at least 1".into()));
    }
    let mut out = Vec::new();
    search_negative_cycles(g, length, |c| {
        out.push(c);
        out.len() >= limit
    })?;
    out.sort();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{build_c3minus_k, build_cycle, build_g_st, complete_signed};
    use crate::graph::{Edge, Sign::*};

    /// Brute-force enumeration of every simple cycle of length `l`.
    fn naive_cycles(g: &SignedGraph, l: usize) -> Vec<(Cycle, Sign)> {
        fn rec(g: &SignedGraph, l: usize, path: &mut Vec<usize>, out: &mut Vec<(Cycle, Sign)>) {
            let last = *path.last().unwrap();
            if path.len() == l {
                if g.has_edge(last, path[0]) && path[1] < path[l - 1] {
                    let c = Cycle(path.clone());
                    let s = c.sign(g).unwrap();
                    out.push((c, s));
                }
                return;
            }
            for y in g.neighbors(last).iter() {
                if y > path[0] && !path.contains(&y) {
                    path.push(y);
                    rec(g, l, path, out);
                    path.pop();
                }
            }
        }
        let mut out = Vec::new();
        for s in 0..g.order() {
            rec(g, l, &mut vec![s], &mut out);
        }
        out
    }

    #[test]
    fn cycle_sign_examples() {
        let t = build_cycle(3, &[Positive, Positive, Negative]).unwrap();
        assert_eq!(cycle_sign(&t, &[0, 1, 2]), Ok(Negative));
        let c4 = build_cycle(4, &[Negative; 4]).unwrap();
        assert_eq!(cycle_sign(&c4, &[0, 1, 2, 3]), Ok(Positive));
        let p = build_cycle(5, &[Positive; 5]).unwrap();
        assert_eq!(cycle_sign(&p, &[0, 1, 2, 3, 4]), Ok(Positive));
    }

    #[test]
    fn cycle_sign_errors() {
        let c4 = build_cycle(4, &[Positive; 4]).unwrap();
        assert_eq!(cycle_sign(&c4, &[0, 2, 1, 3]), Err(Error::NotAnEdge(0, 2)));
        assert_eq!(cycle_sign(&c4, &[0, 1, 0]), Err(Error::RepeatedVertex(0)));
        assert_eq!(cycle_sign(&c4, &[0, 1]), Err(Error::CycleTooShort(2)));
    }

    #[test]
    fn canonical_rotation() {
        let c = Cycle::new(vec![4, 2, 7, 1, 9]).unwrap().canonical();
        assert_eq!(c.vertices(), &[1, 7, 2, 4, 9]);
        let c = Cycle::new(vec![3, 0, 1]).unwrap().canonical();
        assert_eq!(c.vertices(), &[0, 1, 3]);
    }

    #[test]
    fn g12_has_no_negative_triangle() {
        let g = build_g_st(1, 2).unwrap();
        assert_eq!(find_negative_cycle_of_length(&g, 3).unwrap(), None);
        assert_eq!(negative_girth(&g), Some(4));
        // independent check by enumeration
        assert!(naive_cycles(&g, 3).iter().all(|(_, s)| *s == Positive));
        assert!(naive_cycles(&g, 4).iter().any(|(_, s)| *s == Negative));
    }

    #[test]
    fn unbalanced_k7_has_pentagon() {
        let g = complete_signed(7, &[Edge::new(2, 5)]).unwrap();
        let c = find_negative_cycle_of_length(&g, 5).unwrap().unwrap();
        assert_eq!(c.len(), 5);
        assert_eq!(c.sign(&g).unwrap(), Negative);
    }

    #[test]
    fn c3k40_is_c7_free() {
        let g = build_c3minus_k(40).unwrap();
        assert!(is_cl_minus_free(&g, 7).unwrap());
        assert_eq!(negative_girth(&build_c3minus_k(8).unwrap()), Some(3));
    }

    #[test]
    fn enumeration_counts() {
        let t = build_cycle(3, &[Positive, Positive, Negative]).unwrap();
        assert_eq!(enumerate_negative_cycles(&t, 3, 10).unwrap().len(), 1);
        let all: Vec<Edge> = (0..5)
            .flat_map(|u| (u + 1..5).map(move |v| Edge::new(u, v)))
            .collect();
        let k5 = complete_signed(5, &all).unwrap();
        let cycles = enumerate_negative_cycles(&k5, 5, 100).unwrap();
        assert_eq!(cycles.len(), 12);
        let mut dedup = cycles.clone();
        dedup.dedup();
        assert_eq!(dedup.len(), 12);
        let all4: Vec<Edge> = (0..4)
            .flat_map(|u| (u + 1..4).map(move |v| Edge::new(u, v)))
            .collect();
        let k4 = complete_signed(4, &all4).unwrap();
        assert!(enumerate_negative_cycles(&k4, 4, 100).unwrap().is_empty());
        assert_eq!(enumerate_negative_cycles(&k5, 5, 3).unwrap().len(), 3);
    }

    #[test]
    fn length_range_errors() {
        let g = build_cycle(4, &[Positive; 4]).unwrap();
        assert!(matches!(
            find_negative_cycle_of_length(&g, 2),
            Err(Error::LengthOutOfRange { .. })
        ));
        assert!(matches!(
            is_cl_minus_free(&g, 5),
            Err(Error::LengthOutOfRange { .. })
        ));
        assert!(enumerate_negative_cycles(&g, 4, 0).is_err());
    }

    #[test]
    fn enumeration_matches_naive_on_signed_k6() {
        let g = complete_signed(6, &[Edge::new(0, 1), Edge::new(2, 3), Edge::new(1, 4)]).unwrap();
        for l in 3..=6 {
            let mut naive: Vec<Cycle> = naive_cycles(&g, l)
                .into_iter()
                .filter(|(_, s)| *s == Negative)
                .map(|(c, _)| c.canonical())
                .collect();
            naive.sort();
            assert_eq!(enumerate_negative_cycles(&g, l, usize::MAX).unwrap(), naive);
        }
    }

    #[test]
    fn signed_path_search() {
        let g = build_cycle(5, &[Positive, Positive, Negative, Positive, Positive]).unwrap();
        // 0-1-2-3 has signs +,+,- ; the other way 0-4-3 is +,+
        assert_eq!(
            find_signed_path(&g, 0, 3, 3, Negative),
            Some(vec![0, 1, 2, 3])
        );
        assert_eq!(find_signed_path(&g, 0, 3, 3, Positive), None);
        assert_eq!(find_signed_path(&g, 0, 3, 2, Positive), Some(vec![0, 4, 3]));
        assert_eq!(find_signed_path(&g, 0, 3, 2, Negative), None);
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn arb_graph() -> impl Strategy<Value = SignedGraph> {
            (3usize..=8).prop_flat_map(|n| {
                let pairs = n * (n - 1) / 2;
                proptest::collection::vec(0u8..4, pairs).prop_map(move |codes| {
                    let mut g = SignedGraph::new(n).unwrap();
                    let mut k = 0;
                    for u in 0..n {
                        for v in u + 1..n {
                            match codes[k] {
                                1 | 3 => g.add_edge(u, v, Positive).unwrap(),
                                2 => g.add_edge(u, v, Negative).unwrap(),
                                _ => {}
                            }
                            k += 1;
                        }
                    }
                    g
                })
            })
        }

        proptest! {
            #[test]
            fn existence_agrees_with_naive(g in arb_graph()) {
                for l in 3..=g.order() {
                    let naive = naive_cycles(&g, l).iter().any(|(_, s)| *s == Negative);
                    let fast = find_negative_cycle_of_length(&g, l).unwrap();
                    prop_assert_eq!(naive, fast.is_some());
                    if let Some(c) = fast {
                        prop_assert_eq!(c.len(), l);
                        prop_assert_eq!(c.sign(&g).unwrap(), Negative);
                    }
                }
            }

            #[test]
            fn girth_absent_iff_balanced(g in arb_graph()) {
                let girth = negative_girth(&g);
                prop_assert_eq!(girth.is_none(), is_balanced(&g));
                if let Some(l) = girth {
                    prop_assert!(l >= 3);
                }
            }

            #[test]
            fn adding_an_edge_keeps_negative_cycles(g in arb_graph(), pick in any::<u64>(), neg in any::<bool>()) {
                let n = g.order();
                let non_edges: Vec<(usize, usize)> = (0..n)
                    .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                    .filter(|&(u, v)| !g.has_edge(u, v))
                    .collect();
                prop_assume!(!non_edges.is_empty());
                let (u, v) = non_edges[(pick % non_edges.len() as u64) as usize];
                let mut h = g.clone();
                h.add_edge(u, v, if neg { Negative } else { Positive }).unwrap();
                for l in 3..=n {
                    if !is_cl_minus_free(&g, l).unwrap() {
                        prop_assert!(!is_cl_minus_free(&h, l).unwrap());
                    }
                }
            }

            #[test]
            fn freeness_is_switching_invariant(g in arb_graph(), mask in any::<u128>()) {
                let n = g.order();
                let h = g.switch(VertexSet(mask).intersection(VertexSet::full(n))).unwrap();
                for l in 3..=n {
                    prop_assert_eq!(is_cl_minus_free(&g, l).unwrap(), is_cl_minus_free(&h, l).unwrap());
                }
            }
        }
    }
}
