use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::graph::SignedGraph;

/// Largest order for which [`char_poly`] runs; beyond it the operation
/// refuses instead of falling back to floating point.
pub const CHAR_POLY_LIMIT: usize = 16;

/// Integer polynomial stored low degree first; for a characteristic
/// polynomial `coeffs[i]` multiplies `x^i` and the leading coefficient is 1.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CharPoly {
    pub coeffs: Vec<i128>,
}

impl CharPoly {
    pub fn new(mut coeffs: Vec<i128>) -> Self {
        while coeffs.len() > 1 && *coeffs.last().unwrap() == 0 {
            coeffs.pop();
        }
        CharPoly { coeffs }
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    /// Coefficient of `x^i` (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> i128 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    pub fn mul(&self, other: &CharPoly) -> Result<CharPoly> {
        let mut out = vec![0i128; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in other.coeffs.iter().enumerate() {
                let p = a.checked_mul(b).ok_or(Error::Overflow)?;
                out[i + j] = out[i + j].checked_add(p).ok_or(Error::Overflow)?;
            }
        }
        Ok(CharPoly::new(out))
    }

    /// Exact value at an integer point.
    pub fn eval(&self, x: i128) -> Result<i128> {
        let mut acc: i128 = 0;
        for &c in self.coeffs.iter().rev() {
            acc = acc
                .checked_mul(x)
                .and_then(|v| v.checked_add(c))
                .ok_or(Error::Overflow)?;
        }
        Ok(acc)
    }

    /// Compensated Horner evaluation; accurate to about twice working
    /// precision, which matters near the (clustered) roots.
    pub fn eval_f64(&self, x: f64) -> f64 {
        let mut s = 0.0f64;
        let mut err = 0.0f64;
        for &c in self.coeffs.iter().rev() {
            let (p, ep) = two_prod(s, x);
            let (t, es) = two_sum(p, c as f64);
            s = t;
            err = libm::fma(err, x, ep + es);
        }
        s + err
    }
}

#[inline]
fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    (s, (a - (s - bb)) + (b - bb))
}

#[inline]
fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    (p, libm::fma(a, b, -p))
}

impl fmt::Display for CharPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for i in (0..self.coeffs.len()).rev() {
            let c = self.coeffs[i];
            if c == 0 && !(first && i == 0) {
                continue;
            }
            let mag = c.unsigned_abs();
            if first {
                if c < 0 {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if c < 0 { " - " } else { " + " })?;
            }
            first = false;
            match (i, mag) {
                (0, _) => write!(f, "{mag}")?,
                (1, 1) => f.write_str("x")?,
                (1, _) => write!(f, "{mag}x")?,
                (_, 1) => write!(f, "x^{i}")?,
                _ => write!(f, "{mag}x^{i}")?,
            }
        }
        Ok(())
    }
}

/// `det(xI - A)` by the Faddeev-LeVerrier recursion in checked 128-bit
/// integers. Every division in the recursion is exact.
pub fn char_poly(g: &SignedGraph) -> Result<CharPoly> {
    let n = g.order();
    if n > CHAR_POLY_LIMIT {
        return Err(Error::ExactLimitExceeded {
            what: "characteristic polynomial",
            order: n,
            limit: CHAR_POLY_LIMIT,
        });
    }
    let a: Vec<i128> = g.adjacency_matrix().into_iter().map(i128::from).collect();
    let mut c = vec![0i128; n + 1];
    c[n] = 1;
    // M_1 = I
    let mut m = vec![0i128; n * n];
    for i in 0..n {
        m[i * n + i] = 1;
    }
    for k in 1..=n {
        if k > 1 {
            // M_k = A M_{k-1} + c_{n-k+1} I
            let mut next = vec![0i128; n * n];
            for i in 0..n {
                for l in 0..n {
                    let ail = a[i * n + l];
                    if ail == 0 {
                        continue;
                    }
                    for j in 0..n {
                        let v = ail.checked_mul(m[l * n + j]).ok_or(Error::Overflow)?;
                        next[i * n + j] = next[i * n + j].checked_add(v).ok_or(Error::Overflow)?;
                    }
                }
            }
            for i in 0..n {
                next[i * n + i] = next[i * n + i]
                    .checked_add(c[n - k + 1])
                    .ok_or(Error::Overflow)?;
            }
            m = next;
        }
        // tr(A M_k)
        let mut tr: i128 = 0;
        for i in 0..n {
            for l in 0..n {
                let v = a[i * n + l]
                    .checked_mul(m[l * n + i])
                    .ok_or(Error::Overflow)?;
                tr = tr.checked_add(v).ok_or(Error::Overflow)?;
            }
        }
        let kk = k as i128;
        debug_assert_eq!(tr % kk, 0, "inexact Faddeev-LeVerrier division");
        if tr % kk != 0 {
            return Err(Error::Overflow);
        }
        c[n - k] = -(tr / kk);
    }
    Ok(CharPoly::new(c))
}

/// The cubic `x^3 - (n-5)x^2 - (2n-5)x + (n-5)` whose largest root is
/// `lambda_1(C3^- . K_{n-2})`.
pub fn c3k_cubic_factor(n: usize) -> CharPoly {
    let m = n as i128;
    CharPoly::new(vec![m - 5, -(2 * m - 5), -(m - 5), 1])
}

/// Closed form `(x+1)^{n-4} (x-1) f(x)` for `C3^- . K_{n-2}`, expanded.
pub fn char_poly_c3k(n: usize) -> Result<CharPoly> {
    if n < 4 {
        return Err(Error::InvalidParameter(alloc::format!(
            "C3- . K_(n-2) needs n >= 4, got {n}"
        )));
    }
    let mut p = CharPoly::new(vec![-1, 1]).mul(&c3k_cubic_factor(n))?;
    let x_plus_1 = CharPoly::new(vec![1, 1]);
    for _ in 0..n - 4 {
        p = p.mul(&x_plus_1)?;
    }
    Ok(p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{build_c3minus_k, build_cycle, complete_signed};
    use crate::graph::Sign::*;
    use alloc::string::ToString;

    /// `det(xI - A)` at an integer point by fraction-free (Bareiss)
    /// elimination; independent of the trace recursion.
    fn det_at(g: &SignedGraph, x: i128) -> i128 {
        let n = g.order();
        let a = g.adjacency_matrix();
        let mut m: Vec<Vec<i128>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| if i == j { x } else { 0 } - a[i * n + j] as i128)
                    .collect()
            })
            .collect();
        let mut sign = 1;
        let mut prev = 1i128;
        for k in 0..n {
            if m[k][k] == 0 {
                let Some(r) = (k + 1..n).find(|&r| m[r][k] != 0) else {
                    return 0;
                };
                m.swap(k, r);
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
                }
            }
            prev = m[k][k];
        }
        if n == 0 {
            1
        } else {
            sign * m[n - 1][n - 1]
        }
    }

    #[test]
    fn small_examples() {
        let e = SignedGraph::from_edges(2, [(0, 1, Positive)]).unwrap();
        assert_eq!(char_poly(&e).unwrap().coeffs, [-1, 0, 1]);
        assert_eq!(
            char_poly(&complete_signed(3, &[]).unwrap()).unwrap().coeffs,
            [-2, -3, 0, 1]
        );
        let t = build_cycle(3, &[Positive, Positive, Negative]).unwrap();
        let p = char_poly(&t).unwrap();
        assert_eq!(p.coeffs, [2, -3, 0, 1]);
        assert_eq!(p.to_string(), "x^3 - 3x + 2");
        for x in -4..=4 {
            assert_eq!(p.eval(x).unwrap(), det_at(&t, x));
        }
    }

    #[test]
    fn closed_form_small_n() {
        // n = 4: (x - 1)(x^3 + x^2 - 3x - 1)
        let expect4 = CharPoly::new(vec![-1, 1])
            .mul(&CharPoly::new(vec![-1, -3, 1, 1]))
            .unwrap();
        assert_eq!(char_poly_c3k(4).unwrap(), expect4);
        // n = 5: (x + 1)(x - 1)(x^3 - 5x)
        let expect5 = CharPoly::new(vec![-1, 0, 1])
            .mul(&CharPoly::new(vec![0, -5, 0, 1]))
            .unwrap();
        assert_eq!(char_poly_c3k(5).unwrap(), expect5);
        for n in 4..=40 {
            assert_eq!(c3k_cubic_factor(n).eval(n as i128 - 3).unwrap(), -2);
        }
        assert!(char_poly_c3k(3).is_err());
    }

    #[test]
    fn computed_matches_closed_form_and_determinant() {
        for n in 4..=12 {
            let g = build_c3minus_k(n).unwrap();
            let p = char_poly(&g).unwrap();
            assert_eq!(p, char_poly_c3k(n).unwrap(), "n={n}");
            for x in [-3, -1, 0, 2, 7] {
                assert_eq!(p.eval(x).unwrap(), det_at(&g, x));
            }
        }
    }

    #[test]
    fn coefficient_invariants_on_random_graphs() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for _ in 0..40 {
            let n = rng.random_range(1..=16);
            let mut g = SignedGraph::new(n).unwrap();
            for u in 0..n {
                for v in u + 1..n {
                    match rng.random_range(0..3) {
                        0 => g.add_edge(u, v, Positive).unwrap(),
                        1 => g.add_edge(u, v, Negative).unwrap(),
                        _ => {}
                    }
                }
            }
            let p = char_poly(&g).unwrap();
            assert_eq!(p.coeff(n), 1);
            if n >= 1 {
                assert_eq!(p.coeff(n - 1), 0);
            }
            if n >= 2 {
                assert_eq!(p.coeff(n - 2), -(g.size() as i128));
            }
            for x in [-2, 1, 3] {
                assert_eq!(p.eval(x).unwrap(), det_at(&g, x));
            }
        }
    }

    #[test]
    fn complete_16_is_in_range_and_17_is_refused() {
        let p = char_poly(&complete_signed(16, &[]).unwrap()).unwrap();
        // (x - 15)(x + 1)^15
        assert_eq!(p.eval(15).unwrap(), 0);
        assert_eq!(p.eval(-1).unwrap(), 0);
        assert!(matches!(
            char_poly(&SignedGraph::new(17).unwrap()),
            Err(Error::ExactLimitExceeded { .. })
        ));
    }

    #[test]
    fn residual_at_numerical_eigenvalues() {
        use crate::spectral::eigenvalues;
        for n in 4..=12 {
            let g = build_c3minus_k(n).unwrap();
            let p = char_poly(&g).unwrap();
            let s = eigenvalues(&g);
            let scale = libm::pow(n as f64 + s.rho, n as f64);
            for &l in &s.eigenvalues {
                assert!(p.eval_f64(l).abs() <= 1e-6 * scale);
            }
        }
    }
}
