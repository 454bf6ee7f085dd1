//! Enumeration of switching classes and of small unlabeled graphs.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;
use core::ops::Range;

use crate::balance::SpanningForest;
use crate::bits::VertexSet;
use crate::error::{Error, Result};
use crate::graph::{Edge, Sign, SignedGraph};

/// One tree-canonical representative per switching class of a fixed
/// underlying graph.
///
/// With the canonical BFS forest `T` fixed, a class is determined by the
/// signs of the `m - n + c` edges outside `T`. Pattern bit `j` set means the
/// `j`-th non-forest edge (in `(u, v)` order) is negative.
#[derive(Clone, Debug)]
pub struct SignClasses {
    base: SignedGraph,
    forest: SpanningForest,
    free: Vec<Edge>,
}

impl SignClasses {
    /// Signs of `underlying` are ignored.
    pub fn new(underlying: &SignedGraph) -> Result<Self> {
        let base = underlying.underlying();
        let forest = SpanningForest::canonical(&base);
        let free: Vec<Edge> = base
            .edges()
            .map(|(e, _)| e)
            .filter(|e| !forest.contains(e.u, e.v))
            .collect();
        if free.len() >= 64 {
            return Err(Error::InvalidParameter(alloc::format!(
                "{} non-forest edges: too many sign classes to index",
                free.len()
            )));
        }
        Ok(SignClasses { base, forest, free })
    }

    pub fn underlying(&self) -> &SignedGraph {
        &self.base
    }

    pub fn forest(&self) -> &SpanningForest {
        &self.forest
    }

    pub fn free_edges(&self) -> &[Edge] {
        &self.free
    }

    /// `2^(m - n + c)`.
    pub fn count(&self) -> u64 {
        1u64 << self.free.len()
    }

    pub fn representative(&self, pattern: u64) -> SignedGraph {
        let mut g = self.base.clone();
        for (j, e) in self.free.iter().enumerate() {
            if pattern >> j & 1 == 1 {
                g.set_sign(e.u, e.v, Sign::Negative).unwrap();
            }
        }
        g
    }

    pub fn iter(&self) -> SignClassIter<'_> {
        self.range(0..self.count())
    }

    /// Representatives for the patterns in `range` (clamped to the count).
    pub fn range(&self, range: Range<u64>) -> SignClassIter<'_> {
        let end = range.end.min(self.count());
        SignClassIter {
            classes: self,
            cursor: range.start.min(end),
            end,
        }
    }
}

pub struct SignClassIter<'a> {
    classes: &'a SignClasses,
    cursor: u64,
    end: u64,
}

impl Iterator for SignClassIter<'_> {
    type Item = SignedGraph;

    fn next(&mut self) -> Option<SignedGraph> {
        if self.cursor >= self.end {
            return None;
        }
        let g = self.classes.representative(self.cursor);
        self.cursor += 1;
        Some(g)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let r = (self.end - self.cursor) as usize;
        (r, Some(r))
    }
}

impl ExactSizeIterator for SignClassIter<'_> {}

/// Iterator over switching-class representatives of `underlying`.
pub fn enumerate_sign_classes(underlying: &SignedGraph) -> Result<SignClasses> {
    SignClasses::new(underlying)
}

/// Largest order handled by the built-in generator.
pub const GENERATOR_LIMIT: usize = 8;

/// Bit index of the pair `i < j` in an adjacency code.
#[inline]
fn pair_index(i: usize, j: usize) -> usize {
    j * (j - 1) / 2 + i
}

fn encode(rows: &[VertexSet], perm: &[usize]) -> u64 {
    let mut code = 0u64;
    for (a, &pa) in perm.iter().enumerate() {
        for (b, &pb) in perm.iter().enumerate().skip(a + 1) {
            if rows[a].contains(b) {
                let (i, j) = if pa < pb { (pa, pb) } else { (pb, pa) };
                code |= 1u64 << pair_index(i, j);
            }
        }
    }
    code
}

fn decode(n: usize, code: u64) -> SignedGraph {
    let mut g = SignedGraph::new(n).unwrap();
    for j in 1..n {
        for i in 0..j {
            if code >> pair_index(i, j) & 1 == 1 {
                g.add_edge(i, j, Sign::Positive).unwrap();
            }
        }
    }
    g
}

/// Ordered partition of the vertices by iterated colour refinement. The
/// ordering uses only isomorphism-invariant data.
fn refined_cells(rows: &[VertexSet]) -> Vec<Vec<usize>> {
    let n = rows.len();
    let mut colour: Vec<usize> = rows.iter().map(|r| r.len()).collect();
    let mut classes = 0;
    loop {
        let keys: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut nb: Vec<usize> = rows[v].iter().map(|w| colour[w]).collect();
                nb.sort_unstable();
                (colour[v], nb)
            })
            .collect();
        let mut distinct: Vec<&(usize, Vec<usize>)> = keys.iter().collect();
        distinct.sort();
        distinct.dedup();
        let next: Vec<usize> = keys
            .iter()
            .map(|k| distinct.binary_search(&k).unwrap())
            .collect();
        let count = distinct.len();
        colour = next;
        if count == classes {
            break;
        }
        classes = count;
    }
    let mut cells = vec![Vec::new(); classes];
    for v in 0..n {
        cells[colour[v]].push(v);
    }
    cells
}

/// Canonical adjacency code: the maximum code over all labelings that
/// respect the refined ordered partition. Equal for isomorphic graphs.
pub fn canonical_code(g: &SignedGraph) -> u64 {
    let n = g.order();
    assert!(n <= 11, "canonical codes are 64-bit");
    let rows: Vec<VertexSet> = (0..n).map(|u| g.neighbors(u)).collect();
    let cells = refined_cells(&rows);
    // Cell i occupies labels offset[i]..offset[i]+len.
    let mut perm = vec![0usize; n];
    let mut best = 0u64;
    let mut cell_perms: Vec<Vec<usize>> = cells.clone();
    fn next_permutation(p: &mut [usize]) -> bool {
        let n = p.len();
        if n < 2 {
            return false;
        }
        let Some(i) = (0..n - 1).rev().find(|&i| p[i] < p[i + 1]) else {
            return false;
        };
        let j = (i + 1..n).rev().find(|&j| p[j] > p[i]).unwrap();
        p.swap(i, j);
        p[i + 1..].reverse();
        true
    }
    for c in &mut cell_perms {
        c.sort_unstable();
    }
    loop {
        let mut label = 0;
        for c in &cell_perms {
            for &v in c {
                perm[v] = label;
                label += 1;
            }
        }
        best = best.max(encode(&rows, &perm));
        // odometer over the per-cell permutations
        let mut k = 0;
        loop {
            if k == cell_perms.len() {
                return best;
            }
            if next_permutation(&mut cell_perms[k]) {
                break;
            }
            cell_perms[k].sort_unstable();
            k += 1;
        }
    }
}

/// One representative per isomorphism class of graphs on `n` vertices
/// (`n <= 8`), optionally only connected ones, ordered by canonical code.
///
/// Built vertex by vertex: every graph on `k + 1` vertices arises from one
/// on `k` vertices by adding a vertex, so extending every representative by
/// every neighbourhood and keeping one graph per canonical code is
/// complete.
pub fn enumerate_underlying_graphs(n: usize, connected: bool) -> Result<Vec<SignedGraph>> {
    if n > GENERATOR_LIMIT {
        return Err(Error::ExactLimitExceeded {
            what: "built-in graph generator",
            order: n,
            limit: GENERATOR_LIMIT,
        });
    }
    let mut level: BTreeSet<u64> = BTreeSet::new();
    level.insert(0);
    for k in 1..n {
        let mut next = BTreeSet::new();
        for &code in &level {
            let parent = decode(k, code);
            for nb in 0u64..1 << k {
                let mut g = SignedGraph::new(k + 1).unwrap();
                for (e, _) in parent.edges() {
                    g.add_edge(e.u, e.v, Sign::Positive).unwrap();
                }
                for x in 0..k {
                    if nb >> x & 1 == 1 {
                        g.add_edge(x, k, Sign::Positive).unwrap();
                    }
                }
                next.insert(canonical_code(&g));
            }
        }
        level = next;
    }
    if n == 0 {
        return Ok(if connected {
            Vec::new()
        } else {
            vec![SignedGraph::new(0)?]
        });
    }
    Ok(level
        .into_iter()
        .map(|c| decode(n, c))
        .filter(|g| !connected || g.is_connected())
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::balance::{is_balanced, switching_equivalent};
    use crate::constructions::{build_path, complete_signed};

    /// Minimum code over all n! labelings: an oracle independent of the
    /// refinement.
    fn brute_code(rows: &[VertexSet]) -> u64 {
        let n = rows.len();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut best = u64::MAX;
        loop {
            best = best.min(encode(rows, &perm));
            let Some(i) = (0..n.saturating_sub(1))
                .rev()
                .find(|&i| perm[i] < perm[i + 1])
            else {
                return best;
            };
            let j = (i + 1..n).rev().find(|&j| perm[j] > perm[i]).unwrap();
            perm.swap(i, j);
            perm[i + 1..].reverse();
        }
    }

    fn brute_count(n: usize, connected: bool) -> usize {
        let pairs = n * (n - 1) / 2;
        let mut seen = BTreeSet::new();
        for code in 0u64..1 << pairs {
            let g = decode(n, code);
            if connected && !g.is_connected() {
                continue;
            }
            let rows: Vec<VertexSet> = (0..n).map(|u| g.neighbors(u)).collect();
            seen.insert(brute_code(&rows));
        }
        seen.len()
    }

    #[test]
    fn sign_class_counts() {
        let tri = complete_signed(3, &[]).unwrap();
        let c = enumerate_sign_classes(&tri).unwrap();
        assert_eq!(c.count(), 2);
        let reps: Vec<_> = c.iter().collect();
        assert!(is_balanced(&reps[0]) && !is_balanced(&reps[1]));
        let tree = build_path(6, &[Sign::Negative; 5]).unwrap();
        assert_eq!(enumerate_sign_classes(&tree).unwrap().count(), 1);
        assert_eq!(
            enumerate_sign_classes(&complete_signed(4, &[]).unwrap())
                .unwrap()
                .count(),
            8
        );
        let k8 = enumerate_sign_classes(&complete_signed(8, &[]).unwrap()).unwrap();
        assert_eq!(k8.count(), 1 << 21);
        assert_eq!(k8.range(10..20).len(), 10);
        assert_eq!(k8.range(1 << 21..(1 << 21) + 5).len(), 0);
    }

    #[test]
    fn representatives_are_canonical_and_distinct() {
        for n in 3..=5 {
            for g in enumerate_underlying_graphs(n, false).unwrap() {
                let c = enumerate_sign_classes(&g).unwrap();
                let comps = g.components().len();
                assert_eq!(c.count(), 1 << (g.size() + comps - n));
                let reps: Vec<_> = c.iter().collect();
                for r in &reps {
                    for (e, s) in r.edges() {
                        if c.forest().contains(e.u, e.v) {
                            assert_eq!(s, Sign::Positive);
                        }
                    }
                }
                for i in 0..reps.len() {
                    for j in i + 1..reps.len() {
                        assert!(!switching_equivalent(&reps[i], &reps[j]).unwrap());
                    }
                }
            }
        }
    }

    #[test]
    fn generator_counts() {
        let all = [1, 1, 2, 4, 11, 34, 156, 1044];
        let conn = [0, 1, 1, 2, 6, 21, 112, 853];
        for n in 0..=7 {
            assert_eq!(
                enumerate_underlying_graphs(n, false).unwrap().len(),
                all[n],
                "n={n}"
            );
            assert_eq!(
                enumerate_underlying_graphs(n, true).unwrap().len(),
                conn[n],
                "n={n}"
            );
        }
        assert!(enumerate_underlying_graphs(9, true).is_err());
    }

    #[test]
    fn generator_matches_brute_force_oracle() {
        for n in 1..=6 {
            assert_eq!(
                enumerate_underlying_graphs(n, false).unwrap().len(),
                brute_count(n, false)
            );
            assert_eq!(
                enumerate_underlying_graphs(n, true).unwrap().len(),
                brute_count(n, true)
            );
        }
    }

    #[test]
    fn canonical_code_is_label_invariant() {
        let g = decode(6, 0b1_0110_1101_1001);
        let c = canonical_code(&g);
        for perm in [[5, 4, 3, 2, 1, 0], [1, 0, 3, 2, 5, 4], [2, 3, 0, 5, 1, 4]] {
            assert_eq!(canonical_code(&g.permute(&perm).unwrap()), c);
        }
    }
}
