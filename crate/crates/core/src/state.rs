//! Pure states, input qubits, density matrices, and the partial trace.
//!
//! Qubit ordering convention: qubit 0 is the most significant bit of the
//! computational-basis index, so the basis label reads left to right as a ket
//! string (|q0 q1 q2>). Register modes a, b, c map to qubits 0, 1, 2.

use crate::eigen::{hermitian_eigensystem, MAX_EIGEN_DIM};
use crate::error::{Error, Result};
use crate::matrix::{finite, C64, ComplexMatrix};
use crate::tol::TOL;

/// Normalized multi-qubit state vector.
#[derive(Debug, Clone, PartialEq)]
pub struct PureState {
    num_qubits: usize,
    amplitudes: Vec<C64>,
}

impl PureState {
    /// Builds a state from `2^num_qubits` amplitudes normalized within
    /// `TOL.normalization`.
    pub fn new(num_qubits: usize, amplitudes: Vec<C64>) -> Result<Self> {
        if num_qubits == 0 || amplitudes.len() != 1 << num_qubits {
            return Err(Error::DimensionMismatch(format!(
                "{num_qubits}-qubit state needs {} amplitudes, got {}",
                1usize << num_qubits,
                amplitudes.len()
            )));
        }
        for &z in &amplitudes {
            finite(z)?;
        }
        let norm_sqr: f64 = amplitudes.iter().map(|z| z.norm_sqr()).sum();
        let deviation = (norm_sqr - 1.0).abs();
        if deviation > TOL.normalization {
            return Err(Error::NotNormalized {
                deviation,
                tolerance: TOL.normalization,
            });
        }
        Ok(Self {
            num_qubits,
            amplitudes,
        })
    }

    pub fn num_qubits(&self) -> usize {
        self.num_qubits
    }

    pub fn amplitudes(&self) -> &[C64] {
        &self.amplitudes
    }
}

/// Pure single-qubit input alpha|0> + beta|1>.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct InputQubit {
    alpha: C64,
    beta: C64,
}

impl InputQubit {
    /// Amplitudes must satisfy |alpha|^2 + |beta|^2 = 1 within
    /// `TOL.normalization`.
    pub fn new(alpha: C64, beta: C64) -> Result<Self> {
        finite(alpha)?;
        finite(beta)?;
        let deviation = (alpha.norm_sqr() + beta.norm_sqr() - 1.0).abs();
        if deviation > TOL.normalization {
            return Err(Error::NotNormalized {
                deviation,
                tolerance: TOL.normalization,
            });
        }
        Ok(Self { alpha, beta })
    }

    /// Rescales arbitrary non-zero amplitudes to a normalized input.
    pub fn new_normalized(alpha: C64, beta: C64) -> Result<Self> {
        finite(alpha)?;
        finite(beta)?;
        let norm = (alpha.norm_sqr() + beta.norm_sqr()).sqrt();
        if norm == 0.0 {
            return Err(Error::InvalidParameter(
                "input amplitudes cannot both be zero".into(),
            ));
        }
        Self::new(alpha / norm, beta / norm)
    }

    /// Real input with alpha in [0, 1] and beta = sqrt(1 - alpha^2).
    pub fn from_alpha(alpha: f64) -> Result<Self> {
        if !(0.0..=1.0).contains(&alpha) {
            return Err(Error::InvalidParameter(format!(
                "real alpha must lie in [0, 1], got {alpha}"
            )));
        }
        Self::new(
            C64::new(alpha, 0.0),
            C64::new((1.0 - alpha * alpha).max(0.0).sqrt(), 0.0),
        )
    }

    pub fn alpha(&self) -> C64 {
        self.alpha
    }

    pub fn beta(&self) -> C64 {
        self.beta
    }

    pub fn to_pure_state(self) -> PureState {
        PureState {
            num_qubits: 1,
            amplitudes: vec![self.alpha, self.beta],
        }
    }

    /// Density matrix of the input qubit.
    pub fn density(&self) -> DensityMatrix {
        pure_to_density(&self.to_pure_state())
    }
}

/// Mixed n-qubit state.
///
/// Valid instances are Hermitian within `TOL.hermiticity`, unit-trace within
/// `TOL.unit_trace`, and have eigenvalues >= -TOL.psd_floor.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityMatrix {
    num_qubits: usize,
    matrix: ComplexMatrix,
}

impl DensityMatrix {
    /// Validating constructor.
    ///
    /// The eigenvalue floor is checked for up to 3 qubits (the eigensolver's
    /// 8x8 limit); larger matrices arise in this crate only as outer products
    /// of pure states, which are positive by construction, and are built via
    /// [`pure_to_density`].
    pub fn new(num_qubits: usize, matrix: ComplexMatrix) -> Result<Self> {
        let dim = 1usize << num_qubits;
        if num_qubits == 0 || matrix.rows() != dim || matrix.cols() != dim {
            return Err(Error::DimensionMismatch(format!(
                "{num_qubits}-qubit density matrix must be {dim}x{dim}, got {}x{}",
                matrix.rows(),
                matrix.cols()
            )));
        }
        let dev = matrix.hermiticity_deviation();
        if dev > TOL.hermiticity {
            return Err(Error::NotHermitian {
                deviation: dev,
                tolerance: TOL.hermiticity,
            });
        }
        let trace = matrix.trace();
        let trace_dev = (trace - C64::ONE).norm();
        if trace_dev > TOL.unit_trace {
            return Err(Error::NonUnitTrace {
                deviation: trace_dev,
                tolerance: TOL.unit_trace,
            });
        }
        if dim <= MAX_EIGEN_DIM {
            let (values, _) = hermitian_eigensystem(&matrix)?;
            if let Some(&min) = values.last() {
                if min < -TOL.psd_floor {
                    return Err(Error::NotPositiveSemidefinite {
                        eigenvalue: min,
                        tolerance: TOL.psd_floor,
                    });
                }
            }
        }
        Ok(Self { num_qubits, matrix })
    }

    /// Internal constructor for matrices that are valid by construction
    /// (outer products of normalized states and their partial traces).
    pub(crate) fn from_trusted(num_qubits: usize, matrix: ComplexMatrix) -> Self {
        debug_assert_eq!(matrix.rows(), 1 << num_qubits);
        debug_assert_eq!(matrix.cols(), 1 << num_qubits);
        debug_assert!(matrix.hermiticity_deviation() <= TOL.hermiticity);
        debug_assert!((matrix.trace() - C64::ONE).norm() <= TOL.unit_trace);
        Self { num_qubits, matrix }
    }

    pub fn num_qubits(&self) -> usize {
        self.num_qubits
    }

    pub fn dim(&self) -> usize {
        1 << self.num_qubits
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.matrix
    }
}

/// Outer product |s><s| of a normalized pure state; rank 1 and unit trace by
/// construction.
pub fn pure_to_density(s: &PureState) -> DensityMatrix {
    let dim = 1usize << s.num_qubits;
    let mut m = ComplexMatrix::zeros(dim, dim);
    for i in 0..dim {
        for j in 0..dim {
            m[(i, j)] = s.amplitudes[i] * s.amplitudes[j].conj();
        }
    }
    DensityMatrix::from_trusted(s.num_qubits, m)
}

/// Partial trace over `traced_qubits`.
///
/// The remaining qubits keep their original relative order, and the result
/// stays unit-trace. Indices must be distinct, in range, and leave at least
/// one qubit.
pub fn partial_trace(rho: &DensityMatrix, traced_qubits: &[usize]) -> Result<DensityMatrix> {
    let n = rho.num_qubits;
    let mut traced = traced_qubits.to_vec();
    traced.sort_unstable();
    for w in traced.windows(2) {
        if w[0] == w[1] {
            return Err(Error::InvalidParameter(format!(
                "traced qubit indices must be distinct, {} repeats",
                w[0]
            )));
        }
    }
    for &q in &traced {
        if q >= n {
            return Err(Error::QubitOutOfRange {
                index: q,
                num_qubits: n,
            });
        }
    }
    if traced.len() >= n {
        return Err(Error::InvalidParameter(
            "partial trace must leave at least one qubit".into(),
        ));
    }

    let kept: Vec<usize> = (0..n).filter(|q| !traced.contains(q)).collect();
    let k = kept.len();
    let t = traced.len();
    // Bit weight of qubit q in the full index (qubit 0 is the most
    // significant bit).
    let weight = |q: usize| 1usize << (n - 1 - q);
    let kept_w: Vec<usize> = kept.iter().map(|&q| weight(q)).collect();
    let traced_w: Vec<usize> = traced.iter().map(|&q| weight(q)).collect();

    let spread = |bits: usize, weights: &[usize]| -> usize {
        // Bit i of `bits` (MSB first over `weights`) lands on weights[i].
        let mut idx = 0;
        for (i, &w) in weights.iter().enumerate() {
            if bits >> (weights.len() - 1 - i) & 1 == 1 {
                idx += w;
            }
        }
        idx
    };

    let mut out = ComplexMatrix::zeros(1 << k, 1 << k);
    for r in 0..1usize << k {
        let r_base = spread(r, &kept_w);
        for c in 0..1usize << k {
            let c_base = spread(c, &kept_w);
            let mut sum = C64::ZERO;
            for env in 0..1usize << t {
                let e = spread(env, &traced_w);
                sum += rho.matrix[(r_base + e, c_base + e)];
            }
            out[(r, c)] = sum;
        }
    }
    Ok(DensityMatrix::from_trusted(k, out))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> C64 {
        C64::new(re, im)
    }

    const R2: f64 = std::f64::consts::FRAC_1_SQRT_2;

    fn bell() -> PureState {
        PureState::new(
            2,
            vec![c(R2, 0.0), C64::ZERO, C64::ZERO, c(R2, 0.0)],
        )
        .unwrap()
    }

    #[test]
    fn rejects_unnormalized() {
        assert!(matches!(
            PureState::new(1, vec![c(1.0, 0.0), c(0.1, 0.0)]),
            Err(Error::NotNormalized { .. })
        ));
        assert!(InputQubit::new(c(1.0, 0.0), c(0.1, 0.0)).is_err());
    }

    #[test]
    fn new_normalized_rescales() {
        let q = InputQubit::new_normalized(c(3.0, 0.0), c(4.0, 0.0)).unwrap();
        assert!((q.alpha().re - 0.6).abs() < 1e-15);
        assert!((q.beta().re - 0.8).abs() < 1e-15);
        assert!(InputQubit::new_normalized(C64::ZERO, C64::ZERO).is_err());
    }

    #[test]
    fn density_of_basis_state() {
        let rho = InputQubit::from_alpha(1.0).unwrap().density();
        assert_eq!(rho.matrix()[(0, 0)], C64::ONE);
        assert_eq!(rho.matrix()[(1, 1)], C64::ZERO);
    }

    #[test]
    fn density_of_real_superposition() {
        // (alpha, beta) real gives [[a^2, ab], [ab, b^2]].
        let q = InputQubit::new(c(0.6, 0.0), c(0.8, 0.0)).unwrap();
        let rho = q.density();
        assert!((rho.matrix()[(0, 0)].re - 0.36).abs() < 1e-15);
        assert!((rho.matrix()[(0, 1)].re - 0.48).abs() < 1e-15);
        assert!((rho.matrix()[(1, 1)].re - 0.64).abs() < 1e-15);
    }

    #[test]
    fn bell_density_corners() {
        let rho = pure_to_density(&bell());
        for (i, j) in [(0, 0), (0, 3), (3, 0), (3, 3)] {
            assert!((rho.matrix()[(i, j)].re - 0.5).abs() < 1e-15);
        }
        assert_eq!(rho.matrix()[(1, 1)], C64::ZERO);
    }

    #[test]
    fn trace_out_bell_half_is_maximally_mixed() {
        let rho = pure_to_density(&bell());
        let reduced = partial_trace(&rho, &[1]).unwrap();
        assert!((reduced.matrix()[(0, 0)].re - 0.5).abs() < 1e-15);
        assert!((reduced.matrix()[(1, 1)].re - 0.5).abs() < 1e-15);
        assert_eq!(reduced.matrix()[(0, 1)], C64::ZERO);
    }

    #[test]
    fn trace_out_product_state() {
        // |0> (x) |1>: tracing the second qubit leaves |0><0|.
        let s = PureState::new(2, vec![C64::ZERO, C64::ONE, C64::ZERO, C64::ZERO]).unwrap();
        let reduced = partial_trace(&pure_to_density(&s), &[1]).unwrap();
        assert_eq!(reduced.matrix()[(0, 0)], C64::ONE);
        assert_eq!(reduced.matrix()[(1, 1)], C64::ZERO);
    }

    #[test]
    fn partial_trace_keeps_qubit_order() {
        // |01> tensor |+> on qubits (0,1,2); tracing qubit 1 must leave
        // qubit 0 = |0>, qubit 2 = |+> in that order.
        let plus = [c(R2, 0.0), c(R2, 0.0)];
        let mut amps = vec![C64::ZERO; 8];
        amps[0b010] = plus[0];
        amps[0b011] = plus[1];
        let rho = pure_to_density(&PureState::new(3, amps).unwrap());
        let red = partial_trace(&rho, &[1]).unwrap();
        assert!((red.matrix()[(0, 0)].re - 0.5).abs() < 1e-15);
        assert!((red.matrix()[(0, 1)].re - 0.5).abs() < 1e-15);
        assert!((red.matrix()[(2, 2)].re).abs() < 1e-15); // qubit 0 never |1>
    }

    #[test]
    fn partial_trace_validates_indices() {
        let rho = pure_to_density(&bell());
        assert!(partial_trace(&rho, &[2]).is_err());
        assert!(partial_trace(&rho, &[0, 0]).is_err());
        assert!(partial_trace(&rho, &[0, 1]).is_err());
    }

    #[test]
    fn density_matrix_validation() {
        // Non-unit trace.
        let m = ComplexMatrix::identity(2);
        assert!(matches!(
            DensityMatrix::new(1, m),
            Err(Error::NonUnitTrace { .. })
        ));
        // Negative eigenvalue.
        let mut m = ComplexMatrix::zeros(2, 2);
        m[(0, 0)] = c(1.5, 0.0);
        m[(1, 1)] = c(-0.5, 0.0);
        assert!(matches!(
            DensityMatrix::new(1, m),
            Err(Error::NotPositiveSemidefinite { .. })
        ));
    }
}
