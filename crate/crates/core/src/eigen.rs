//! Hermitian eigensolver and matrix square root.
//!
//! Cyclic Jacobi with complex rotations: for the at-most-8x8 Hermitian
//! matrices this crate produces, it is simple, accurate to machine precision,
//! and bit-stable across runs because the sweep order is fixed.

use crate::error::{Error, Result};
use crate::matrix::{C64, ComplexMatrix};
use crate::tol::TOL;

/// Largest matrix the eigensolver accepts.
pub const MAX_EIGEN_DIM: usize = 8;

/// Eigendecomposition of a Hermitian matrix.
///
/// Returns eigenvalues sorted descending and the matching unitary of column
/// eigenvectors, so `m = V diag(lambda) V^dagger`. The input must be
/// Hermitian within `TOL.hermiticity` and no larger than 8x8.
pub fn hermitian_eigensystem(m: &ComplexMatrix) -> Result<(Vec<f64>, ComplexMatrix)> {
    if !m.is_square() {
        return Err(Error::DimensionMismatch(format!(
            "eigensolver needs a square matrix, got {}x{}",
            m.rows(),
            m.cols()
        )));
    }
    let n = m.rows();
    if n > MAX_EIGEN_DIM {
        return Err(Error::MatrixTooLarge {
            size: n,
            limit: MAX_EIGEN_DIM,
        });
    }
    let dev = m.hermiticity_deviation();
    if dev > TOL.hermiticity {
        return Err(Error::NotHermitian {
            deviation: dev,
            tolerance: TOL.hermiticity,
        });
    }

    // Work on the exactly Hermitian part so roundoff asymmetry in the input
    // cannot push the iteration off the real-eigenvalue manifold.
    let mut a = m.hermitian_part();
    let mut v = ComplexMatrix::identity(n);

    let scale = a.frobenius_norm().max(1.0);
    let target = scale * 1e-15;
    const MAX_SWEEPS: usize = 60;

    for _ in 0..MAX_SWEEPS {
        let off = off_diagonal_norm(&a);
        if off <= target {
            break;
        }
        // Fixed (p, q) sweep order keeps results identical across runs.
        for p in 0..n - 1 {
            for q in p + 1..n {
                rotate(&mut a, &mut v, p, q);
            }
        }
    }

    let mut order: Vec<usize> = (0..n).collect();
    let diag: Vec<f64> = (0..n).map(|i| a[(i, i)].re).collect();
    // Stable sort keeps degenerate eigenvalues in deterministic order.
    order.sort_by(|&i, &j| diag[j].partial_cmp(&diag[i]).unwrap());

    let values: Vec<f64> = order.iter().map(|&i| diag[i]).collect();
    let mut vectors = ComplexMatrix::zeros(n, n);
    for (new_col, &old_col) in order.iter().enumerate() {
        for r in 0..n {
            vectors[(r, new_col)] = v[(r, old_col)];
        }
    }
    Ok((values, vectors))
}

fn off_diagonal_norm(a: &ComplexMatrix) -> f64 {
    let n = a.rows();
    let mut s = 0.0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                s += a[(i, j)].norm_sqr();
            }
        }
    }
    s.sqrt()
}

/// One Jacobi rotation zeroing a[(p, q)].
///
/// The complex entry is first made real by the phase diag(1, e^{-i phi}) on
/// the (p, q) plane, then annihilated by the classic real rotation with
/// tau = (a_qq - a_pp) / 2|b|, t = sign(tau) / (|tau| + sqrt(1 + tau^2)).
fn rotate(a: &mut ComplexMatrix, v: &mut ComplexMatrix, p: usize, q: usize) {
    let b = a[(p, q)];
    let abs_b = b.norm();
    if abs_b == 0.0 {
        return;
    }
    let w = b.conj() / abs_b; // e^{-i phi}

    let app = a[(p, p)].re;
    let aqq = a[(q, q)].re;
    let tau = (aqq - app) / (2.0 * abs_b);
    let t = if tau >= 0.0 {
        1.0 / (tau + (1.0 + tau * tau).sqrt())
    } else {
        -1.0 / (-tau + (1.0 + tau * tau).sqrt())
    };
    let c = 1.0 / (1.0 + t * t).sqrt();
    let s = t * c;

    // Plane unitary J: J[p][p] = c, J[p][q] = s, J[q][p] = -s w, J[q][q] = c w.
    let n = a.rows();
    // A <- A J, V <- V J (columns p and q mix).
    for k in 0..n {
        let akp = a[(k, p)];
        let akq = a[(k, q)];
        a[(k, p)] = akp * c - akq * (s * w);
        a[(k, q)] = akp * s + akq * (c * w);

        let vkp = v[(k, p)];
        let vkq = v[(k, q)];
        v[(k, p)] = vkp * c - vkq * (s * w);
        v[(k, q)] = vkp * s + vkq * (c * w);
    }
    // A <- J^dagger A (rows p and q mix).
    for k in 0..n {
        let apk = a[(p, k)];
        let aqk = a[(q, k)];
        a[(p, k)] = apk * c - aqk * (s * w.conj());
        a[(q, k)] = apk * s + aqk * (c * w.conj());
    }
    // The rotated pivot pair is real by construction; pin the diagonal and
    // zero the target entry exactly to stop roundoff drift.
    a[(p, q)] = C64::ZERO;
    a[(q, p)] = C64::ZERO;
    a[(p, p)] = C64::new(a[(p, p)].re, 0.0);
    a[(q, q)] = C64::new(a[(q, q)].re, 0.0);
}

/// Clamps a Hermitian spectrum for PSD use.
///
/// Eigenvalues below `-TOL.psd_floor` are rejected; values in
/// `[-psd_floor, 0)` clamp to 0; values at or below `rel_zero * lambda_max`
/// also collapse to exact 0, so the square roots of rank-deficient matrices
/// do not pick up sqrt(machine-epsilon) noise.
pub fn clamp_psd_spectrum(values: &[f64]) -> Result<Vec<f64>> {
    let top = values.iter().cloned().fold(0.0_f64, f64::max);
    let floor = TOL.rel_zero * top;
    values
        .iter()
        .map(|&l| {
            if l < -TOL.psd_floor {
                Err(Error::NotPositiveSemidefinite {
                    eigenvalue: l,
                    tolerance: TOL.psd_floor,
                })
            } else if l <= floor {
                Ok(0.0)
            } else {
                Ok(l)
            }
        })
        .collect()
}

/// Hermitian PSD square root via eigendecomposition.
///
/// `s = V diag(sqrt(lambda)) V^dagger` with the spectrum clamped by
/// [`clamp_psd_spectrum`]; satisfies `||s^2 - m||_F <= 1e-9` for valid input.
pub fn psd_sqrt_matrix(m: &ComplexMatrix) -> Result<ComplexMatrix> {
    let (values, vectors) = hermitian_eigensystem(m)?;
    let roots: Vec<f64> = clamp_psd_spectrum(&values)?
        .into_iter()
        .map(f64::sqrt)
        .collect();
    let n = m.rows();
    // V sqrt(D) V^dagger without forming diag explicitly.
    let mut scaled = vectors.clone();
    for j in 0..n {
        for i in 0..n {
            scaled[(i, j)] *= roots[j];
        }
    }
    scaled.mul(&vectors.dagger())
}
