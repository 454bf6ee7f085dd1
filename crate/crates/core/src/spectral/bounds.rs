use crate::error::{Error, Result};
use crate::frustration::frustration_index;
use crate::graph::SignedGraph;

use super::clique::{balanced_clique_number, clique_number};
use super::eigen::eigenvalues;

/// A bound counts as satisfied when `value - quantity >= -BOUND_SLACK`.
pub const BOUND_SLACK: f64 = 1e-8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BoundKind {
    /// `rho(G) <= sqrt(2e - n + 1)` for connected unsigned `G`.
    Hong,
    /// `lambda_1 <= sqrt(2(e - l) - n + 1)`, `l` the frustration index.
    Stanic,
    /// `lambda_1 <= (1 - 1/omega_b) n`.
    Wyq,
    /// `lambda_1(G) <= (1 - 1/omega) n` for unsigned `G`.
    MotzkinStraus,
}

impl BoundKind {
    pub fn name(self) -> &'static str {
        match self {
            BoundKind::Hong => "hong",
            BoundKind::Stanic => "stanic",
            BoundKind::Wyq => "wyq",
            BoundKind::MotzkinStraus => "motzkin-straus",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BoundReport {
    pub kind: BoundKind,
    /// The bound's right-hand side.
    pub value: f64,
    /// The spectral quantity being bounded.
    pub quantity: f64,
    pub slack: f64,
    pub satisfied: bool,
}

impl BoundReport {
    fn new(kind: BoundKind, value: f64, quantity: f64) -> Self {
        let slack = value - quantity;
        BoundReport {
            kind,
            value,
            quantity,
            slack,
            satisfied: slack >= -BOUND_SLACK,
        }
    }
}

fn require_connected(g: &SignedGraph) -> Result<()> {
    if g.is_connected() {
        Ok(())
    } else {
        Err(Error::Disconnected)
    }
}

/// Hong's bound on the underlying (all-positive) graph.
pub fn hong_bound(g: &SignedGraph) -> Result<BoundReport> {
    require_connected(g)?;
    let e = g.size() as f64;
    let n = g.order() as f64;
    let value = libm::sqrt(2.0 * e - n + 1.0);
    let rho = eigenvalues(&g.underlying()).rho;
    Ok(BoundReport::new(BoundKind::Hong, value, rho))
}

pub fn stanic_bound(g: &SignedGraph) -> Result<BoundReport> {
    require_connected(g)?;
    let l = frustration_index(g)? as f64;
    let e = g.size() as f64;
    let n = g.order() as f64;
    let value = libm::sqrt(2.0 * (e - l) - n + 1.0);
    Ok(BoundReport::new(
        BoundKind::Stanic,
        value,
        eigenvalues(g).lambda_max(),
    ))
}

pub fn wyq_bound(g: &SignedGraph) -> Result<BoundReport> {
    let wb = balanced_clique_number(g)?;
    if wb == 0 {
        return Err(Error::InvalidParameter(
            "empty graph has no balanced clique".into(),
        ));
    }
    let value = (1.0 - 1.0 / wb as f64) * g.order() as f64;
    Ok(BoundReport::new(
        BoundKind::Wyq,
        value,
        eigenvalues(g).lambda_max(),
    ))
}

/// The unsigned clique bound, applied to the underlying graph.
pub fn motzkin_straus_bound(g: &SignedGraph) -> Result<BoundReport> {
    let w = clique_number(g)?;
    if w == 0 {
        return Err(Error::InvalidParameter("empty graph has no clique".into()));
    }
    let value = (1.0 - 1.0 / w as f64) * g.order() as f64;
    let l1 = eigenvalues(&g.underlying()).lambda_max();
    Ok(BoundReport::new(BoundKind::MotzkinStraus, value, l1))
}

/// Largest `r + 1` such that `e > (1 - 1/r) n^2 / 2`, i.e. the clique order
/// Turán's theorem guarantees; 1 when no `r >= 1` qualifies.
pub fn turan_clique_guarantee(n: usize, e: usize) -> usize {
    let (n, e) = (n as u128, e as u128);
    // e > (r-1) n^2 / (2r)  <=>  2 r e > (r-1) n^2
    let mut best = 1;
    let mut r = 1u128;
    while r <= n.max(1) {
        if 2 * r * e > (r - 1) * n * n {
            best = r as usize + 1;
        } else {
            break;
        }
        r += 1;
    }
    best
}
