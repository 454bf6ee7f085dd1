use alloc::vec::Vec;

use crate::graph::SignedGraph;

/// Target Frobenius norm of the off-diagonal part.
pub const OFF_DIAGONAL_TOL: f64 = 1e-12;
const MAX_SWEEPS: usize = 100;

/// Eigenvalues of a signed adjacency matrix, largest first.
#[derive(Clone, Debug, PartialEq)]
pub struct Spectrum {
    pub eigenvalues: Vec<f64>,
    /// `max(lambda_1, -lambda_n)`.
    pub rho: f64,
    /// Off-diagonal norm at termination; bounds each eigenvalue error.
    pub tolerance: f64,
}

impl Spectrum {
    pub fn lambda_max(&self) -> f64 {
        self.eigenvalues.first().copied().unwrap_or(0.0)
    }

    pub fn lambda_min(&self) -> f64 {
        self.eigenvalues.last().copied().unwrap_or(0.0)
    }
}

fn off_norm(a: &[f64], n: usize) -> f64 {
    let mut s = 0.0;
    for i in 0..n {
        for j in i + 1..n {
            s += 2.0 * a[i * n + j] * a[i * n + j];
        }
    }
    libm::sqrt(s)
}

/// Cyclic Jacobi rotations on a dense symmetric row-major matrix.
/// Returns the unsorted diagonal and the final off-diagonal norm.
pub fn symmetric_eigenvalues(mut a: Vec<f64>, n: usize) -> (Vec<f64>, f64) {
    assert_eq!(a.len(), n * n);
    let mut off = off_norm(&a, n);
    let mut sweeps = 0;
    while off > OFF_DIAGONAL_TOL && sweeps < MAX_SWEEPS {
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[p * n + q];
                if apq == 0.0 {
                    continue;
                }
                let app = a[p * n + p];
                let aqq = a[q * n + q];
                let theta = (aqq - app) / (2.0 * apq);
                let t = if theta >= 0.0 {
                    1.0 / (theta + libm::sqrt(theta * theta + 1.0))
                } else {
                    -1.0 / (-theta + libm::sqrt(theta * theta + 1.0))
                };
                let c = 1.0 / libm::sqrt(t * t + 1.0);
                let s = t * c;
                for k in 0..n {
                    if k == p || k == q {
                        continue;
                    }
                    let akp = a[k * n + p];
                    let akq = a[k * n + q];
                    let np = c * akp - s * akq;
                    let nq = s * akp + c * akq;
                    a[k * n + p] = np;
                    a[p * n + k] = np;
                    a[k * n + q] = nq;
                    a[q * n + k] = nq;
                }
                a[p * n + p] = app - t * apq;
                a[q * n + q] = aqq + t * apq;
                a[p * n + q] = 0.0;
                a[q * n + p] = 0.0;
            }
        }
        off = off_norm(&a, n);
        sweeps += 1;
    }
    ((0..n).map(|i| a[i * n + i]).collect(), off)
}

/// Full spectrum of `A(G)`.
pub fn eigenvalues(g: &SignedGraph) -> Spectrum {
    let n = g.order();
    let a: Vec<f64> = g.adjacency_matrix().into_iter().map(f64::from).collect();
    let (mut ev, off) = symmetric_eigenvalues(a, n);
    ev.sort_by(|x, y| y.total_cmp(x));
    let rho = match (ev.first(), ev.last()) {
        (Some(&hi), Some(&lo)) => hi.max(-lo),
        _ => 0.0,
    };
    Spectrum {
        eigenvalues: ev,
        rho,
        tolerance: off,
    }
}

/// `rho(G) = max(lambda_1, -lambda_n)`.
pub fn spectral_radius(g: &SignedGraph) -> f64 {
    eigenvalues(g).rho
}
