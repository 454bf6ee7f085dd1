//! The named signed graphs and the coalescence operator.
//!
//! Every builder uses a fixed labeling so that reports and witnesses are
//! reproducible:
//!
//! * `G_{s,t}`: `u = 0`, `v = 1`, `u_1..u_s = 2..=s+1`, `v_1..v_t = s+2..n-1`.
//! * `C3^- . K_{n-2}`: `0, 1` the degree-two triangle vertices, `2` the cut
//!   vertex, `3..n-1` the rest of the clique; `{0,1}` is the negative edge.
//! * `H_{n,a}`: the path is `0 - 1 - .. - (a-1)` with `u = 0`, `v = a - 1`;
//!   the clique `K_{n-a}` is `a..n-1`.

use alloc::format;
use alloc::vec::Vec;

use crate::bits::VertexSet;
use crate::error::{Error, Result};
use crate::graph::{Edge, Sign, SignedGraph};

fn invalid(msg: alloc::string::String) -> Error {
    Error::InvalidParameter(msg)
}

/// `G1 . G2`: disjoint union with `v1` and `v2` identified.
///
/// Vertices of `g1` keep their labels; the remaining vertices of `g2` follow
/// in increasing order.
pub fn coalescence(
    g1: &SignedGraph,
    v1: usize,
    g2: &SignedGraph,
    v2: usize,
) -> Result<SignedGraph> {
    for (v, g) in [(v1, g1), (v2, g2)] {
        if v >= g.order() {
            return Err(Error::VertexOutOfRange {
                vertex: v,
                order: g.order(),
            });
        }
    }
    let n = g1.order() + g2.order() - 1;
    let map = |x: usize| -> usize {
        use core::cmp::Ordering::*;
        match x.cmp(&v2) {
            Equal => v1,
            Less => g1.order() + x,
            Greater => g1.order() + x - 1,
        }
    };
    let mut out = SignedGraph::new(n)?;
    for (e, s) in g1.edges() {
        out.add_edge(e.u, e.v, s)?;
    }
    for (e, s) in g2.edges() {
        out.add_edge(map(e.u), map(e.v), s)?;
    }
    Ok(out)
}

/// `K_n` with the listed edges negative and all others positive.
pub fn complete_signed(n: usize, negative_edges: &[Edge]) -> Result<SignedGraph> {
    let mut g = SignedGraph::new(n)?;
    for u in 0..n {
        for v in u + 1..n {
            g.add_edge(u, v, Sign::Positive)?;
        }
    }
    for e in negative_edges {
        g.set_sign(e.u, e.v, Sign::Negative)?;
    }
    Ok(g)
}

/// Path `0 - 1 - .. - (n-1)`; `signs[i]` is the sign of `{i, i+1}`.
pub fn build_path(n: usize, signs: &[Sign]) -> Result<SignedGraph> {
    if n < 2 || signs.len() != n - 1 {
        return Err(invalid(format!(
            "path on {n} vertices needs {} signs, got {}",
            n.saturating_sub(1),
            signs.len()
        )));
    }
    SignedGraph::from_edges(n, signs.iter().enumerate().map(|(i, &s)| (i, i + 1, s)))
}

/// Cycle `0 - 1 - .. - (n-1) - 0`; `signs[i]` is the sign of `{i, i+1 mod n}`.
pub fn build_cycle(n: usize, signs: &[Sign]) -> Result<SignedGraph> {
    if n < 3 || signs.len() != n {
        return Err(invalid(format!(
            "cycle on {n} vertices needs {n} signs, got {}",
            signs.len()
        )));
    }
    SignedGraph::from_edges(
        n,
        signs.iter().enumerate().map(|(i, &s)| (i, (i + 1) % n, s)),
    )
}

/// `G_{s,t}`: all-positive `K_{s+t}` plus `u ~ u_1..u_s`, `v ~ v_1..v_t`
/// (positive) and the negative edge `uv`.
pub fn build_g_st(s: usize, t: usize) -> Result<SignedGraph> {
    if s == 0 || t == 0 {
        return Err(invalid(format!("G_(s,t) needs s, t >= 1, got ({s}, {t})")));
    }
    let n = s + t + 2;
    let mut g = SignedGraph::new(n)?;
    g.add_edge(0, 1, Sign::Negative)?;
    for x in 2..n {
        for y in x + 1..n {
            g.add_edge(x, y, Sign::Positive)?;
        }
        let end = if x < s + 2 { 0 } else { 1 };
        g.add_edge(end, x, Sign::Positive)?;
    }
    Ok(g)
}

/// `C3^- . (K_{n-2}, +)` in the labeling described in the module docs.
pub fn build_c3minus_k(n: usize) -> Result<SignedGraph> {
    if n < 4 {
        return Err(invalid(format!("C3- . K_(n-2) needs n >= 4, got {n}")));
    }
    let mut g = SignedGraph::new(n)?;
    g.add_edge(0, 1, Sign::Negative)?;
    g.add_edge(0, 2, Sign::Positive)?;
    g.add_edge(1, 2, Sign::Positive)?;
    for x in 2..n {
        for y in x + 1..n {
            g.add_edge(x, y, Sign::Positive)?;
        }
    }
    Ok(g)
}

/// Which attachment pattern the endpoint `v` of the path gets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HnaVariant {
    /// All edges from `v` to the clique negative.
    AllNegative,
    /// All edges from `v` to the clique positive.
    AllPositive,
    /// Edges from `v` to the given clique vertices negative, the rest
    /// positive. The set must be a nonempty proper subset of the clique.
    Mixed(VertexSet),
}

impl HnaVariant {
    /// 1, 2 or 3.
    pub fn kind(&self) -> u8 {
        match self {
            HnaVariant::AllNegative => 1,
            HnaVariant::AllPositive => 2,
            HnaVariant::Mixed(_) => 3,
        }
    }
}

/// Signs of the edges that the path / `u`-attachment normalization leaves
/// free besides the `v`-attachments.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct HnaSigns {
    /// Negative edges inside the clique `K_{n-a}` (vertices `a..n-1`).
    pub clique_negative: Vec<Edge>,
    /// Sign of the closing edge `uv` (ignored when `a = 2`).
    pub endpoint_edge: Option<Sign>,
}

/// The underlying graph `H_{n,a}`, all positive.
pub fn underlying_h_na(n: usize, a: usize) -> Result<SignedGraph> {
    if a < 2 || n < a + 2 {
        return Err(invalid(format!(
            "H_(n,a) needs a >= 2 and n >= a + 2, got n = {n}, a = {a}"
        )));
    }
    let mut g = SignedGraph::new(n)?;
    for i in 0..a - 1 {
        g.add_edge(i, i + 1, Sign::Positive)?;
    }
    if a > 2 {
        g.add_edge(0, a - 1, Sign::Positive)?;
    }
    for x in a..n {
        g.add_edge(0, x, Sign::Positive)?;
        g.add_edge(a - 1, x, Sign::Positive)?;
        for y in x + 1..n {
            g.add_edge(x, y, Sign::Positive)?;
        }
    }
    Ok(g)
}

/// A signature of `H_{n,a}` in the normal form `+1` on the path and on the
/// edges from `u`, with `v`'s attachments chosen by `variant`.
pub fn build_h_na(
    n: usize,
    a: usize,
    variant: &HnaVariant,
    signs: &HnaSigns,
) -> Result<SignedGraph> {
    let mut g = underlying_h_na(n, a)?;
    let v = a - 1;
    let clique = VertexSet::full(n).difference(VertexSet::full(a));
    let negative_attach = match variant {
        HnaVariant::AllNegative => clique,
        HnaVariant::AllPositive => VertexSet::EMPTY,
        HnaVariant::Mixed(set) => {
            if set.is_empty() || *set == clique || !set.is_subset(clique) {
                return Err(invalid(format!(
                    "mixed attachment set {set:?} must be a nonempty proper subset of {clique:?}"
                )));
            }
            *set
        }
    };
    for x in negative_attach {
        g.set_sign(v, x, Sign::Negative)?;
    }
    for e in &signs.clique_negative {
        if !clique.contains(e.u) || !clique.contains(e.v) {
            return Err(invalid(format!("{e:?} is not a clique edge")));
        }
        g.set_sign(e.u, e.v, Sign::Negative)?;
    }
    if a > 2 {
        if let Some(s) = signs.endpoint_edge {
            g.set_sign(0, v, s)?;
        }
    }
    Ok(g)
}
