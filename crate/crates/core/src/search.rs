//! Randomized hill climbing over unbalanced signed graphs without a
//! negative cycle of a fixed length.
//!
//! States are kept in tree-canonical form. Moves add an edge (either sign),
//! delete an edge, or flip a non-forest edge. A move is rejected if the
//! result is balanced or contains a negative `length`-cycle. Only cycles
//! through the touched edge can appear, so feasibility of an addition or
//! flip is a single signed-path query between its endpoints.

use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::balance::{is_balanced, tree_canonical_form, SpanningForest};
use crate::cycles::{find_path_in, is_cl_minus_free, SignedRows};
use crate::error::{Error, Result};
use crate::graph::{Edge, Sign, SignedGraph};
use crate::spectral::spectral_radius;

#[derive(Clone, Debug)]
pub struct SearchConfig {
    pub order: usize,
    /// Forbidden negative cycle length (`2k + 1` for the odd-cycle problem).
    pub cycle_length: usize,
    /// Total number of proposed moves, split evenly over the restarts.
    pub budget: u64,
    pub restarts: u32,
    pub seed: u64,
    /// Starting point of the first restart; random otherwise.
    pub start: Option<SignedGraph>,
    /// Probability of accepting a feasible deletion.
    pub delete_acceptance: f64,
    /// Re-check every accepted state with the full cycle search.
    pub audit: bool,
}

impl SearchConfig {
    pub fn new(order: usize, cycle_length: usize, budget: u64, restarts: u32, seed: u64) -> Self {
        SearchConfig {
            order,
            cycle_length,
            budget,
            restarts,
            seed,
            start: None,
            delete_acceptance: 0.5,
            audit: false,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Move {
    Add { edge: Edge, sign: Sign },
    Delete { edge: Edge },
    Flip { edge: Edge },
}

/// Current point of a climb: always unbalanced, tree-canonical and free of
/// negative `cycle_length`-cycles.
#[derive(Clone, Debug)]
pub struct SearchState {
    pub current: SignedGraph,
    forest: SpanningForest,
    cycle_length: usize,
}

impl SearchState {
    pub fn new(g: &SignedGraph, cycle_length: usize) -> Result<Self> {
        if is_balanced(g) {
            return Err(Error::InvalidParameter(
                "search state must be unbalanced".into(),
            ));
        }
        if !is_cl_minus_free(g, cycle_length)? {
            return Err(Error::InvalidParameter(alloc::format!(
                "search state contains a negative {cycle_length}-cycle"
            )));
        }
        let (current, forest) = tree_canonical_form(g, None)?;
        Ok(SearchState {
            current,
            forest,
            cycle_length,
        })
    }

    pub fn edges(&self) -> usize {
        self.current.size()
    }

    /// Applies `mv` if the result stays feasible; returns whether it did.
    pub fn try_move(&mut self, mv: Move) -> bool {
        let g = &self.current;
        let l = self.cycle_length;
        let next = match mv {
            Move::Add { edge, sign } => {
                if g.has_edge(edge.u, edge.v) {
                    return false;
                }
                // a new negative cycle is the new edge plus a path of sign -sign
                let rows = SignedRows::of(g);
                if find_path_in(&rows, edge.u, edge.v, l - 1, -sign).is_some() {
                    return false;
                }
                let mut h = g.clone();
                h.add_edge(edge.u, edge.v, sign).unwrap();
                h
            }
            Move::Delete { edge } => {
                let mut h = g.clone();
                if h.remove_edge(edge.u, edge.v).is_err() || is_balanced(&h) {
                    return false;
                }
                h
            }
            Move::Flip { edge } => {
                let Some(old) = g.sign(edge.u, edge.v) else {
                    return false;
                };
                if self.forest.contains(edge.u, edge.v) {
                    return false;
                }
                let mut rows = SignedRows::of(g);
                rows.remove(edge.u, edge.v);
                let new = -old;
                if find_path_in(&rows, edge.u, edge.v, l - 1, -new).is_some() {
                    return false;
                }
                let mut h = g.clone();
                h.set_sign(edge.u, edge.v, new).unwrap();
                if is_balanced(&h) {
                    return false;
                }
                h
            }
        };
        let (current, forest) = tree_canonical_form(&next, None).expect("canonical forest");
        self.current = current;
        self.forest = forest;
        true
    }
}

/// Result of [`falsify_search`].
#[derive(Clone, Debug)]
pub struct SearchOutcome {
    pub best: SignedGraph,
    pub best_edges: usize,
    pub best_rho: f64,
    /// Best edge count reached by each restart.
    pub restart_best: Vec<usize>,
    pub steps: u64,
    pub accepted: u64,
    /// Accepted states that failed the audit (always 0 unless broken).
    pub audit_failures: u64,
}

fn random_start(n: usize, l: usize, rng: &mut ChaCha8Rng) -> SignedGraph {
    let choices: Vec<usize> = (3..=n.min(2 * l)).filter(|&c| c != l).collect();
    let len = choices[rng.random_range(0..choices.len())];
    let mut verts: Vec<usize> = (0..n).collect();
    for i in 0..len {
        let j = rng.random_range(i..n);
        verts.swap(i, j);
    }
    let neg = rng.random_range(0..len);
    let mut g = SignedGraph::new(n).unwrap();
    for i in 0..len {
        let s = if i == neg {
            Sign::Negative
        } else {
            Sign::Positive
        };
        g.add_edge(verts[i], verts[(i + 1) % len], s).unwrap();
    }
    g
}

fn random_non_edge(g: &SignedGraph, rng: &mut ChaCha8Rng) -> Option<Edge> {
    let n = g.order();
    let missing = n * (n - 1) / 2 - g.size();
    if missing == 0 {
        return None;
    }
    let mut k = rng.random_range(0..missing);
    for u in 0..n {
        let above = crate::bits::VertexSet::full(n)
            .difference(crate::bits::VertexSet::full(u + 1))
            .difference(g.neighbors(u));
        if k < above.len() {
            let v = above.iter().nth(k).unwrap();
            return Some(Edge { u, v });
        }
        k -= above.len();
    }
    None
}

/// Hill climbing maximizing `(edge count, spectral radius)` with restarts.
/// Deterministic for a fixed configuration.
pub fn falsify_search(cfg: &SearchConfig) -> Result<SearchOutcome> {
    let n = cfg.order;
    let l = cfg.cycle_length;
    if l < 3 || l > n {
        return Err(Error::LengthOutOfRange {
            length: l,
            order: n,
        });
    }
    if n < 4 {
        return Err(Error::InvalidParameter(
            "search needs at least 4 vertices".into(),
        ));
    }
    let restarts = cfg.restarts.max(1);
    let per_restart = cfg.budget / restarts as u64;
    let mut best: Option<(usize, f64, SignedGraph)> = None;
    let mut restart_best = Vec::with_capacity(restarts as usize);
    let (mut steps, mut accepted, mut audit_failures) = (0u64, 0u64, 0u64);

    for r in 0..restarts {
        let mut rng = ChaCha8Rng::seed_from_u64(
            cfg.seed ^ (r as u64 + 1).wrapping_mul(0x9E37_79B9_7F4A_7C15),
        );
        let start = match (&cfg.start, r) {
            (Some(g), 0) => g.clone(),
            _ => random_start(n, l, &mut rng),
        };
        let mut state = SearchState::new(&start, l)?;
        let mut local_best = state.edges();
        let consider = |state: &SearchState, best: &mut Option<(usize, f64, SignedGraph)>| {
            let e = state.edges();
            let worth = match best {
                None => true,
                Some((be, _, _)) => e >= *be,
            };
            if worth {
                let rho = spectral_radius(&state.current);
                let better = match best {
                    None => true,
                    Some((be, br, _)) => e > *be || rho > *br + 1e-12,
                };
                if better {
                    *best = Some((e, rho, state.current.clone()));
                }
            }
        };
        consider(&state, &mut best);
        let mut changed = false;
        for _ in 0..per_restart {
            steps += 1;
            let kind = rng.random_range(0..100u32);
            let mv = if kind < 60 {
                let Some(e) = random_non_edge(&state.current, &mut rng) else {
                    continue;
                };
                // Canonical-positive additions agree with the forest potentials.
                let sign = if rng.random_bool(0.85) {
                    Sign::Positive
                } else {
                    Sign::Negative
                };
                Move::Add { edge: e, sign }
            } else {
                let edges: Vec<(Edge, Sign)> = state.current.edges().collect();
                let (e, _) = edges[rng.random_range(0..edges.len())];
                if kind < 70 {
                    if !rng.random_bool(cfg.delete_acceptance) {
                        continue;
                    }
                    Move::Delete { edge: e }
                } else {
                    Move::Flip { edge: e }
                }
            };
            if !state.try_move(mv) {
                continue;
            }
            accepted += 1;
            changed = true;
            if cfg.audit
                && (is_balanced(&state.current)
                    || !is_cl_minus_free(&state.current, l).unwrap_or(false))
            {
                audit_failures += 1;
            }
            local_best = local_best.max(state.edges());
            if matches!(mv, Move::Add { .. }) || matches!(mv, Move::Flip { .. }) {
                consider(&state, &mut best);
                changed = false;
            }
        }
        if changed {
            consider(&state, &mut best);
        }
        restart_best.push(local_best);
    }
    let (best_edges, best_rho, best) = best.expect("at least one restart");
    Ok(SearchOutcome {
        best,
        best_edges,
        best_rho,
        restart_best,
        steps,
        accepted,
        audit_failures,
    })
}

/// Every feasible move from `g` that improves `(edge count, spectral
/// radius)`: additions, and flips that raise `rho` by more than `1e-9`.
pub fn improving_moves(g: &SignedGraph, cycle_length: usize) -> Result<Vec<Move>> {
    let state = SearchState::new(g, cycle_length)?;
    let n = g.order();
    let base_rho = spectral_radius(&state.current);
    let mut out = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            let edge = Edge { u, v };
            if state.current.has_edge(u, v) {
                let mut s = state.clone();
                if s.try_move(Move::Flip { edge }) && spectral_radius(&s.current) > base_rho + 1e-9
                {
                    out.push(Move::Flip { edge });
                }
            } else {
                for sign in [Sign::Positive, Sign::Negative] {
                    let mut s = state.clone();
                    if s.try_move(Move::Add { edge, sign }) {
                        out.push(Move::Add { edge, sign });
                    }
                }
            }
        }
    }
    Ok(out)
}
