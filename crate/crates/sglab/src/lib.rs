//! Std companion to `sglab-core`: the `.sg` and graph6 formats, the
//! verification harness producing JSON reports, and the pieces the `sglab`
//! binary is built from.

pub mod io;
pub mod verify;

pub use io::{
    parse_graph6, parse_sg, read_graph6, read_sg_file, write_graph6, write_sg, FormatError,
};
pub use verify::{Claim, Status, TheoremReport, Verifier};
