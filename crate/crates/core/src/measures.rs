//! Coherence, entanglement, and copy-quality measures.

use crate::eigen::{clamp_psd_spectrum, hermitian_eigensystem, psd_sqrt_matrix};
use crate::error::{Error, Result};
use crate::matrix::{C64, ComplexMatrix};
use crate::state::DensityMatrix;
use crate::tol::TOL;

/// l1-norm coherence: the sum of |rho[i][j]| over all off-diagonal entries in
/// the computational basis. Zero exactly for diagonal (incoherent) states.
pub fn l1_coherence(rho: &DensityMatrix) -> f64 {
    let m = rho.matrix();
    let dim = rho.dim();
    let mut sum = 0.0;
    for i in 0..dim {
        for j in 0..dim {
            if i != j {
                sum += m[(i, j)].norm();
            }
        }
    }
    sum
}

/// Spin flip of a two-qubit state: (sigma_y (x) sigma_y) conj(rho)
/// (sigma_y (x) sigma_y).
///
/// With s = (-1, 1, 1, -1), the entries are
/// flipped[i][j] = s_i s_j conj(rho[3-i][3-j]).
fn spin_flip(rho: &ComplexMatrix) -> ComplexMatrix {
    const SIGN: [f64; 4] = [-1.0, 1.0, 1.0, -1.0];
    let mut out = ComplexMatrix::zeros(4, 4);
    for i in 0..4 {
        for j in 0..4 {
            out[(i, j)] = rho[(3 - i, 3 - j)].conj() * (SIGN[i] * SIGN[j]);
        }
    }
    out
}

/// Two-qubit concurrence.
///
/// Computed through the Hermitian matrix sqrt(rho) flipped(rho) sqrt(rho),
/// whose eigenvalues equal those of rho * flipped(rho); the result is
/// max(0, sqrt(l1) - sqrt(l2) - sqrt(l3) - sqrt(l4)) with the eigenvalues in
/// descending order. Only a Hermitian eigensolver is needed on this route.
pub fn concurrence(rho: &DensityMatrix) -> Result<f64> {
    if rho.num_qubits() != 2 {
        return Err(Error::DimensionMismatch(format!(
            "concurrence is defined for 2-qubit states, got {} qubits",
            rho.num_qubits()
        )));
    }
    let flipped = spin_flip(rho.matrix());
    let s = psd_sqrt_matrix(rho.matrix())?;
    // Symmetrize: the triple product is Hermitian up to roundoff.
    let m = s.mul(&flipped)?.mul(&s)?.hermitian_part();
    let (values, _) = hermitian_eigensystem(&m)?;
    let roots: Vec<f64> = clamp_psd_spectrum(&values)?
        .into_iter()
        .map(f64::sqrt)
        .collect();
    let c = roots[0] - roots[1] - roots[2] - roots[3];
    // Mathematically in [0, 1]; clamp roundoff spill at both ends.
    Ok(c.clamp(0.0, 1.0))
}

/// Two-qubit mixed state whose only coherence couples |01> and |10>:
/// a|00><00| + b|01><01| + c|01><10| + conj(c)|10><01| + d|10><10|
/// + e|11><11|.
///
/// Populations are nonnegative and sum to 1; positivity requires
/// |c| <= sqrt(b d). States with |00><11| coherence are outside this form
/// and go through the generic [`concurrence`] path.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct XFormState {
    a: f64,
    b: f64,
    d: f64,
    e: f64,
    c: C64,
}

impl XFormState {
    pub fn new(a: f64, b: f64, d: f64, e: f64, c: C64) -> Result<Self> {
        for (name, v) in [("a", a), ("b", b), ("d", d), ("e", e)] {
            if !v.is_finite() || v < 0.0 {
                return Err(Error::InvalidParameter(format!(
                    "population {name} must be finite and >= 0, got {v}"
                )));
            }
        }
        crate::matrix::finite(c)?;
        let sum_dev = (a + b + d + e - 1.0).abs();
        if sum_dev > TOL.normalization {
            return Err(Error::NotNormalized {
                deviation: sum_dev,
                tolerance: TOL.normalization,
            });
        }
        if c.norm() > (b * d).sqrt() + TOL.bound_slack {
            return Err(Error::InvalidParameter(format!(
                "positivity requires |c| <= sqrt(b*d): |c| = {}, sqrt(b*d) = {}",
                c.norm(),
                (b * d).sqrt()
            )));
        }
        Ok(Self { a, b, d, e, c })
    }

    pub fn populations(&self) -> (f64, f64, f64, f64) {
        (self.a, self.b, self.d, self.e)
    }

    pub fn coherence(&self) -> C64 {
        self.c
    }

    /// The state as a 4x4 density matrix.
    pub fn to_density(&self) -> Result<DensityMatrix> {
        let mut m = ComplexMatrix::zeros(4, 4);
        m[(0, 0)] = C64::new(self.a, 0.0);
        m[(1, 1)] = C64::new(self.b, 0.0);
        m[(2, 2)] = C64::new(self.d, 0.0);
        m[(3, 3)] = C64::new(self.e, 0.0);
        m[(1, 2)] = self.c;
        m[(2, 1)] = self.c.conj();
        DensityMatrix::new(2, m)
    }
}

/// Closed-form concurrence of an [`XFormState`]: 2 max(0, |c| - sqrt(a e)).
pub fn concurrence_xform(s: &XFormState) -> f64 {
    (2.0 * (s.c.norm() - (s.a * s.e).sqrt())).max(0.0)
}

/// l1 coherence of an [`XFormState`]: 2|c|.
pub fn xform_l1(s: &XFormState) -> f64 {
    2.0 * s.c.norm()
}

/// Outcome of comparing entanglement against coherence on one X-form state.
#[derive(Debug, Clone, Copy)]
pub struct BoundCheck {
    pub concurrence: f64,
    pub l1: f64,
    /// True iff concurrence <= l1 + slack; always true for valid states.
    pub holds: bool,
}

/// Evaluates concurrence <= l1 coherence on an X-form state.
pub fn check_bound(s: &XFormState) -> BoundCheck {
    let c = concurrence_xform(s);
    let l1 = xform_l1(s);
    BoundCheck {
        concurrence: c,
        l1,
        holds: c <= l1 + TOL.bound_slack,
    }
}

/// Squared Hilbert-Schmidt distance Tr[(x - y)^2].
///
/// Note the squared convention: no square root is taken.
pub fn hs_distance(x: &DensityMatrix, y: &DensityMatrix) -> Result<f64> {
    if x.dim() != y.dim() {
        return Err(Error::DimensionMismatch(format!(
            "distance needs equal dimensions, got {} and {}",
            x.dim(),
            y.dim()
        )));
    }
    let d = x.matrix().sub(y.matrix())?;
    // Tr[d^2] = ||d||_F^2 for Hermitian d.
    Ok(d.frobenius_norm().powi(2))
}

/// Bundle of the measures commonly reported together.
#[derive(Debug, Clone, Copy)]
pub struct MeasureReport {
    pub l1_coherence: f64,
    pub concurrence: f64,
    /// Present when a reference state was supplied for the distance.
    pub hs_distance: Option<f64>,
}

/// Measures a two-qubit state, optionally with a squared Hilbert-Schmidt
/// distance to a reference of the same dimension.
pub fn measure_two_qubit(
    rho: &DensityMatrix,
    reference: Option<&DensityMatrix>,
) -> Result<MeasureReport> {
    Ok(MeasureReport {
        l1_coherence: l1_coherence(rho),
        concurrence: concurrence(rho)?,
        hs_distance: reference.map(|r| hs_distance(rho, r)).transpose()?,
    })
}
