//! Spectra, exact characteristic polynomials, clique numbers and the
//! spectral bounds used for signed graphs.

mod bounds;
mod charpoly;
mod clique;
mod eigen;

pub use bounds::{
    hong_bound, motzkin_straus_bound, stanic_bound, turan_clique_guarantee, wyq_bound, BoundKind,
    BoundReport, BOUND_SLACK,
};
pub use charpoly::{c3k_cubic_factor, char_poly, char_poly_c3k, CharPoly, CHAR_POLY_LIMIT};
pub use clique::{balanced_clique_number, clique_number, BALANCED_CLIQUE_LIMIT, CLIQUE_LIMIT};
pub use eigen::{eigenvalues, spectral_radius, symmetric_eigenvalues, Spectrum, OFF_DIAGONAL_TOL};
