//! Signed graphs and the machinery needed to study Turán-type problems for
//! negative cycles: switching, balance, tree-canonical signatures,
//! frustration, negative cycles of fixed length, spectra, and the extremal
//! constructions.
//!
//! The crate is `no_std` and only needs `alloc`. File formats, parallel
//! verification sweeps and the command-line front end live in the `sglab`
//! crate.

#![no_std]

extern crate alloc;

pub mod balance;
pub mod bits;
pub mod constructions;
pub mod cycles;
pub mod enumerate;
pub mod error;
pub mod frustration;
pub mod graph;
pub mod iso;
pub mod search;
pub mod spectral;

pub use balance::{
    balance, is_balanced, switching_equivalent, tree_canonical_form, BalanceWitness, SpanningForest,
};
pub use bits::VertexSet;
pub use cycles::{
    enumerate_negative_cycles, find_negative_cycle_of_length, is_cl_minus_free, negative_girth,
    Cycle,
};
pub use error::{Error, Result};
pub use frustration::frustration_index;
pub use graph::{Edge, Sign, SignedGraph, MAX_ORDER};
pub use iso::switching_isomorphic;
