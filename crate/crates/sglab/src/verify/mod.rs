//! Verification harness: exhaustive sweeps over switching classes at small
//! order, construction-side certificates, randomized bound checks and the
//! falsification search, each producing a [`TheoremReport`].
//!
//! Exhaustive sweeps are split into tasks keyed by (underlying graph index,
//! block of [`BLOCK`] sign patterns). Tasks are pure and their results are
//! merged in task order, so reports do not depend on the worker count.

mod claims;
mod random;
mod report;

use std::ops::Range;
use std::time::Instant;

use rayon::prelude::*;
use sglab_core::enumerate::SignClasses;
use sglab_core::SignedGraph;

pub use random::random_connected_signed;
pub use report::{Counters, Status, TheoremReport, Witness};

/// Sign patterns per sweep task.
pub const BLOCK: u64 = 1 << 16;

/// The checkable statements, addressed on the command line by [`Claim::id`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Claim {
    /// Maximum edges of connected unbalanced triangle-negative-free graphs.
    TuranTriangle,
    /// Maximum spectral radius over the same population.
    SpectralTriangle,
    /// Unbalanced complete graphs contain every short negative odd cycle.
    CompleteOddCycles,
    /// Unbalanced `H_{n,a}` contain negative odd cycles in a range.
    PathCliqueOddCycles,
    /// Dense unbalanced graphs have negative girth at most 4.
    DenseNegativeGirth,
    /// `C3^- . K_{n-2}` is extremal-sized and avoids longer negative odd cycles.
    EdgeConstruction,
    /// Same construction, checked against the spectral hypothesis range.
    SpectralConstruction,
    /// Closed-form characteristic polynomial of `C3^- . K_{n-2}`.
    CharPoly,
    /// Hong, Stanic and WYQ bounds on random connected graphs.
    Bounds,
    /// Budgeted hill climbing against the edge bound.
    Falsify,
}

impl Claim {
    pub const ALL: [Claim; 10] = [
        Claim::TuranTriangle,
        Claim::SpectralTriangle,
        Claim::CompleteOddCycles,
        Claim::PathCliqueOddCycles,
        Claim::DenseNegativeGirth,
        Claim::EdgeConstruction,
        Claim::SpectralConstruction,
        Claim::CharPoly,
        Claim::Bounds,
        Claim::Falsify,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Claim::TuranTriangle => "thm-1.1",
            Claim::SpectralTriangle => "thm-1.2",
            Claim::CompleteOddCycles => "lem-2.3",
            Claim::PathCliqueOddCycles => "lem-2.4",
            Claim::DenseNegativeGirth => "lem-2.5",
            Claim::EdgeConstruction => "thm-1.3-construction",
            Claim::SpectralConstruction => "thm-1.4-construction",
            Claim::CharPoly => "lem-3.4",
            Claim::Bounds => "bounds",
            Claim::Falsify => "falsify",
        }
    }

    pub fn from_id(id: &str) -> Option<Claim> {
        Claim::ALL.into_iter().find(|c| c.id() == id)
    }
}

/// Inputs for [`Verifier::run`]; each claim reads the fields it needs.
#[derive(Clone, Debug, Default)]
pub struct ClaimParams {
    pub n: Option<usize>,
    pub k: Option<usize>,
    pub a: Option<usize>,
    pub nmax: Option<usize>,
    pub trials: Option<usize>,
    pub seed: Option<u64>,
    pub budget: Option<u64>,
    pub restarts: Option<u32>,
    /// Start the falsification search from the extremal construction and
    /// also scan its neighbourhood for improving moves.
    pub from_construction: bool,
    /// Underlying graphs supplied from a graph6 file.
    pub graphs: Option<Vec<SignedGraph>>,
}

#[derive(Debug, thiserror::Error)]
#[error("claim {claim} needs --{param}")]
pub struct MissingParam {
    pub claim: &'static str,
    pub param: &'static str,
}

pub struct Verifier {
    pool: rayon::ThreadPool,
    timestamps: bool,
}

impl Verifier {
    /// `jobs` worker threads (at least one).
    pub fn new(jobs: usize) -> Self {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs.max(1))
            .build()
            .expect("thread pool");
        Verifier {
            pool,
            timestamps: true,
        }
    }

    /// Report `seconds = 0` so that reruns are byte-identical.
    pub fn without_timestamps(mut self) -> Self {
        self.timestamps = false;
        self
    }

    pub fn jobs(&self) -> usize {
        self.pool.current_num_threads()
    }

    pub fn run(&self, claim: Claim, p: &ClaimParams) -> Result<TheoremReport, MissingParam> {
        let need = |v: Option<usize>, param| {
            v.ok_or(MissingParam {
                claim: claim.id(),
                param,
            })
        };
        let graphs = p.graphs.as_deref();
        Ok(match claim {
            Claim::TuranTriangle => self.verify_turan_c3(need(p.n, "n")?, graphs),
            Claim::SpectralTriangle => self.verify_spectral_c3(need(p.n, "n")?, graphs),
            Claim::CompleteOddCycles => self.verify_complete_odd_cycles(need(p.n, "n")?),
            Claim::PathCliqueOddCycles => self.verify_path_clique(need(p.n, "n")?, need(p.a, "a")?),
            Claim::DenseNegativeGirth => self.verify_dense_negative_girth(need(p.n, "n")?, graphs),
            Claim::EdgeConstruction => self.verify_construction(need(p.n, "n")?, need(p.k, "k")?),
            Claim::SpectralConstruction => {
                self.verify_spectral_construction(need(p.n, "n")?, need(p.k, "k")?)
            }
            Claim::CharPoly => self.verify_charpoly(need(p.nmax, "nmax")?),
            Claim::Bounds => {
                self.verify_bounds_random(need(p.trials, "trials")?, p.seed.unwrap_or(0))
            }
            Claim::Falsify => self.falsify(&FalsifyParams {
                n: need(p.n, "n")?,
                k: need(p.k, "k")?,
                budget: p.budget.unwrap_or(1_000_000),
                restarts: p.restarts.unwrap_or(20),
                seed: p.seed.unwrap_or(0),
                from_construction: p.from_construction,
                audit: true,
            }),
        })
    }

    /// Evaluates `task` on every (graph, pattern block) pair and returns the
    /// results in task order.
    fn sweep<T, F>(&self, classes: &[SignClasses], task: F) -> Vec<T>
    where
        T: Send,
        F: Fn(usize, &SignClasses, Range<u64>) -> T + Sync,
    {
        let tasks: Vec<(usize, Range<u64>)> = classes
            .iter()
            .enumerate()
            .flat_map(|(gi, c)| {
                let count = c.count();
                (0..count.div_ceil(BLOCK))
                    .map(move |b| (gi, b * BLOCK..((b + 1) * BLOCK).min(count)))
            })
            .collect();
        self.pool.install(|| {
            tasks
                .into_par_iter()
                .map(|(gi, range)| task(gi, &classes[gi], range))
                .collect()
        })
    }

    fn seconds(&self, start: Instant) -> f64 {
        if self.timestamps {
            start.elapsed().as_secs_f64()
        } else {
            0.0
        }
    }
}

/// Parameters of [`Verifier::falsify`].
#[derive(Clone, Debug)]
pub struct FalsifyParams {
    pub n: usize,
    pub k: usize,
    pub budget: u64,
    pub restarts: u32,
    pub seed: u64,
    pub from_construction: bool,
    /// Re-check every accepted state from scratch.
    pub audit: bool,
}
