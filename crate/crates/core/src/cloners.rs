//! The catalog of cloning machines as explicit isometries.
//!
//! Each machine maps a single input qubit into (input (x) blank (x) machine)
//! space; the isometry is stored as its two columns, the images of |0> and
//! |1>. Output qubits are ordered mode a = qubit 0 (most significant), mode
//! b = qubit 1, machine register last.

use crate::error::{Error, Result};
use crate::matrix::{C64, ComplexMatrix};
use crate::measures::hs_distance;
use crate::state::{partial_trace, pure_to_density, DensityMatrix, InputQubit, PureState};
use crate::tol::TOL;

/// Machine parameters (mu, nu) of the general two-parameter cloner.
///
/// Valid range: 0 <= mu <= 1/2 and 0 <= nu <= 2 sqrt(mu (1 - 2 mu)), the
/// Cauchy-Schwarz constraint on machine-vector overlaps, both within
/// `TOL.bound_slack`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BHMachineParams {
    mu: f64,
    nu: f64,
}

impl BHMachineParams {
    /// Largest admissible nu for a given mu: 2 sqrt(mu (1 - 2 mu)).
    pub fn schwarz_bound(mu: f64) -> f64 {
        2.0 * (mu * (1.0 - 2.0 * mu)).max(0.0).sqrt()
    }

    pub fn new(mu: f64, nu: f64) -> Result<Self> {
        if !mu.is_finite() || !nu.is_finite() {
            return Err(Error::NonFinite(format!("mu = {mu}, nu = {nu}")));
        }
        let slack = TOL.bound_slack;
        if !(-slack..=0.5 + slack).contains(&mu) {
            return Err(Error::InvalidParameter(format!(
                "mu must lie in [0, 1/2], got {mu}"
            )));
        }
        let bound = Self::schwarz_bound(mu);
        if nu < -slack || nu > bound + slack {
            return Err(Error::InvalidParameter(format!(
                "nu must satisfy 0 <= nu <= 2*sqrt(mu*(1-2*mu)) \
                 (Cauchy-Schwarz bound on machine-vector overlaps): \
                 got nu = {nu}, bound = {bound}"
            )));
        }
        Ok(Self { mu, nu })
    }

    pub fn mu(&self) -> f64 {
        self.mu
    }

    pub fn nu(&self) -> f64 {
        self.nu
    }
}

/// The four machine-register vectors of the general cloner, in a fixed
/// orthonormal basis of the 4-dimensional machine space.
///
/// They satisfy <Qi|Qi> + 2<Yi|Yi> = 1, <Y0|Y1> = 0, <Qi|Yi> = 0,
/// <Q0|Q1> = 0, and <Y0|Q1> = <Q0|Y1> = nu/2.
#[derive(Debug, Clone, PartialEq)]
pub struct MachineVectors {
    pub q0: [C64; 4],
    pub y0: [C64; 4],
    pub q1: [C64; 4],
    pub y1: [C64; 4],
}

/// Builds machine vectors realizing given (mu, nu).
///
/// In basis (m0, m1, m2, m3): Q0 = s m0, Q1 = s m1, Y0 = x m1 + y m2,
/// Y1 = x m0 + y m3, with s = sqrt(1 - 2 mu), x = nu / (2 s) (x = 0 when
/// mu = 1/2), y = sqrt(mu - x^2). The Cauchy-Schwarz bound on nu is exactly
/// the condition that y is real.
pub fn make_machine_vectors(p: &BHMachineParams) -> MachineVectors {
    let s = (1.0 - 2.0 * p.mu).max(0.0).sqrt();
    let x = if s == 0.0 { 0.0 } else { p.nu / (2.0 * s) };
    // Validated parameters keep mu - x^2 >= -slack; clamp roundoff.
    let y = (p.mu - x * x).max(0.0).sqrt();
    let z = C64::ZERO;
    let r = |v: f64| C64::new(v, 0.0);
    MachineVectors {
        q0: [r(s), z, z, z],
        q1: [z, r(s), z, z],
        y0: [z, r(x), r(y), z],
        y1: [r(x), z, z, r(y)],
    }
}

/// Symmetric six-amplitude parameter set of the state-dependent machine:
/// the |0> branch uses (a, b1, b2), the |1> branch (a_t, b1_t, b2_t).
///
/// Branch normalizations a^2 + b1^2 + b2^2 = 1 and
/// a_t^2 + b1_t^2 + b2_t^2 = 1 must hold within
/// `TOL.machine_normalization`; that looser tolerance admits parameter sets
/// entered as rounded decimals, which exact constructions like
/// [`StateDepParams::from_angles`] do not need. Amplitudes are stored as
/// given, never silently rescaled.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StateDepParams {
    a: f64,
    b1: f64,
    b2: f64,
    a_t: f64,
    b1_t: f64,
    b2_t: f64,
}

impl StateDepParams {
    pub fn new(a: f64, b1: f64, b2: f64, a_t: f64, b1_t: f64, b2_t: f64) -> Result<Self> {
        for (name, v) in [
            ("a", a),
            ("b1", b1),
            ("b2", b2),
            ("a_t", a_t),
            ("b1_t", b1_t),
            ("b2_t", b2_t),
        ] {
            if !v.is_finite() {
                return Err(Error::NonFinite(format!("{name} = {v}")));
            }
        }
        let n0 = a * a + b1 * b1 + b2 * b2;
        let n1 = a_t * a_t + b1_t * b1_t + b2_t * b2_t;
        for n in [n0, n1] {
            let deviation = (n - 1.0).abs();
            if deviation > TOL.machine_normalization {
                return Err(Error::NotNormalized {
                    deviation,
                    tolerance: TOL.machine_normalization,
                });
            }
        }
        Ok(Self {
            a,
            b1,
            b2,
            a_t,
            b1_t,
            b2_t,
        })
    }

    /// Exactly normalized symmetric parameters: a = cos(theta),
    /// b1 = b2 = sin(theta)/sqrt(2), a_t = cos(phi),
    /// b1_t = b2_t = sin(phi)/sqrt(2).
    pub fn from_angles(theta: f64, phi: f64) -> Result<Self> {
        let r2 = std::f64::consts::SQRT_2;
        Self::new(
            theta.cos(),
            theta.sin() / r2,
            theta.sin() / r2,
            phi.cos(),
            phi.sin() / r2,
            phi.sin() / r2,
        )
    }

    /// Decimal-rounded optimum of the single-clone coherence objective; used
    /// as the default parameter set by the command line. The rounding leaves
    /// a normalization deviation of about 7e-7.
    pub fn optimized_defaults() -> Self {
        Self {
            a: 0.695654,
            b1: 0.507969,
            b2: 0.507969,
            a_t: 0.718377,
            b1_t: 0.491902,
            b2_t: 0.491902,
        }
    }

    /// True when both branches share their two b-amplitudes (b1 = b2 and
    /// b1_t = b2_t), the symmetric mode in which both clones agree.
    pub fn is_symmetric(&self) -> bool {
        self.b1 == self.b2 && self.b1_t == self.b2_t
    }

    pub fn as_array(&self) -> [f64; 6] {
        [self.a, self.b1, self.b2, self.a_t, self.b1_t, self.b2_t]
    }
}

/// One machine from the catalog.
#[derive(Debug, Clone, PartialEq)]
pub enum ClonerSpec {
    /// Copies basis states exactly; incoherent in the computational basis.
    WoottersZurek,
    /// Machine tuned to equatorial inputs; incoherent at the single-qubit
    /// level.
    PhaseCovariant,
    /// The state-independent cloner with equal measures for every input.
    BHOptimal,
    /// Two-parameter family containing BHOptimal (mu = 1/6, nu = 2/3) and
    /// CoherenceMachine (mu = 1/2, nu = 0) as special points.
    BHGeneral(BHMachineParams),
    /// Emits a fixed maximally entangled pair regardless of input.
    CoherenceMachine,
    /// Six-amplitude machine whose output depends on the input state.
    StateDependent(StateDepParams),
    /// Plain CNOT with the blank as target; no machine register.
    CnotEntangler,
}

impl ClonerSpec {
    /// Dimension of the machine register (1 = no register).
    pub fn machine_dimension(&self) -> usize {
        match self {
            ClonerSpec::CnotEntangler => 1,
            ClonerSpec::BHGeneral(_) => 4,
            _ => 2,
        }
    }

    /// Qubits occupied by the machine register.
    pub fn machine_qubits(&self) -> usize {
        self.machine_dimension().trailing_zeros() as usize
    }

    /// Total output qubits: two clone modes plus the machine register.
    pub fn output_qubits(&self) -> usize {
        2 + self.machine_qubits()
    }

    /// Token used by the command line and reports.
    pub fn token(&self) -> &'static str {
        match self {
            ClonerSpec::WoottersZurek => "wz",
            ClonerSpec::PhaseCovariant => "phase-cov",
            ClonerSpec::BHOptimal => "bh-optimal",
            ClonerSpec::BHGeneral(_) => "bh-general",
            ClonerSpec::CoherenceMachine => "coherence-machine",
            ClonerSpec::StateDependent(_) => "state-dep",
            ClonerSpec::CnotEntangler => "cnot",
        }
    }
}

/// Output of one cloning run: the full pure state and its reductions.
#[derive(Debug, Clone)]
pub struct CloneOutput {
    /// Joint state over input (x) blank (x) machine.
    pub full_state: PureState,
    /// Modes a and b with the machine register traced out.
    pub two_qubit: DensityMatrix,
    /// Mode a alone.
    pub clone_a: DensityMatrix,
    /// Mode b alone.
    pub clone_b: DensityMatrix,
}

/// Builds the isometry of a machine; columns are the images of |0> and |1>.
pub fn build_isometry(spec: &ClonerSpec) -> Result<ComplexMatrix> {
    let dim = 4 * spec.machine_dimension();
    let mut v = ComplexMatrix::zeros(dim, 2);
    let r = |x: f64| C64::new(x, 0.0);
    match spec {
        ClonerSpec::WoottersZurek => {
            // |0> -> |000>, |1> -> |111>.
            v[(0b000, 0)] = C64::ONE;
            v[(0b111, 1)] = C64::ONE;
        }
        ClonerSpec::PhaseCovariant => {
            // |0> -> (1/2+u)|000> + (1/2-u)|110> + u(|011> + |101>),
            // |1> -> (1/2+u)|111> + (1/2-u)|001> + u(|010> + |100>),
            // u = sqrt(1/8).
            let u = 0.125_f64.sqrt();
            v[(0b000, 0)] = r(0.5 + u);
            v[(0b110, 0)] = r(0.5 - u);
            v[(0b011, 0)] = r(u);
            v[(0b101, 0)] = r(u);
            v[(0b111, 1)] = r(0.5 + u);
            v[(0b001, 1)] = r(0.5 - u);
            v[(0b010, 1)] = r(u);
            v[(0b100, 1)] = r(u);
        }
        ClonerSpec::BHOptimal => {
            // |0> -> sqrt(2/3)|000> + sqrt(1/6)(|011> + |101>), and the
            // bit-flipped image for |1>.
            let big = (2.0 / 3.0_f64).sqrt();
            let small = (1.0 / 6.0_f64).sqrt();
            v[(0b000, 0)] = r(big);
            v[(0b011, 0)] = r(small);
            v[(0b101, 0)] = r(small);
            v[(0b111, 1)] = r(big);
            v[(0b010, 1)] = r(small);
            v[(0b100, 1)] = r(small);
        }
        ClonerSpec::CoherenceMachine => {
            // Both images are (|01> + |10>)/sqrt(2) on the clones; only the
            // machine qubit distinguishes them, so the reduced pair is the
            // same maximally entangled state for every input.
            let h = std::f64::consts::FRAC_1_SQRT_2;
            v[(0b010, 0)] = r(h);
            v[(0b100, 0)] = r(h);
            v[(0b011, 1)] = r(h);
            v[(0b101, 1)] = r(h);
        }
        ClonerSpec::BHGeneral(params) => {
            // |0> -> |00> Q0 + (|01> + |10>) Y0,
            // |1> -> |11> Q1 + (|01> + |10>) Y1, machine register 4-dim.
            let mv = make_machine_vectors(params);
            for m in 0..4 {
                v[(m, 0)] += mv.q0[m]; // |00>
                v[(4 + m, 0)] += mv.y0[m]; // |01>
                v[(8 + m, 0)] += mv.y0[m]; // |10>
                v[(12 + m, 1)] += mv.q1[m]; // |11>
                v[(4 + m, 1)] += mv.y1[m]; // |01>
                v[(8 + m, 1)] += mv.y1[m]; // |10>
            }
        }
        ClonerSpec::StateDependent(p) => {
            // |0> -> a|000> + b1|011> + b2|101>,
            // |1> -> a_t|111> + b1_t|010> + b2_t|100>.
            v[(0b000, 0)] = r(p.a);
            v[(0b011, 0)] = r(p.b1);
            v[(0b101, 0)] = r(p.b2);
            v[(0b111, 1)] = r(p.a_t);
            v[(0b010, 1)] = r(p.b1_t);
            v[(0b100, 1)] = r(p.b2_t);
        }
        ClonerSpec::CnotEntangler => {
            // Control copies onto the blank: |0> -> |00>, |1> -> |11>.
            v[(0b00, 0)] = C64::ONE;
            v[(0b11, 1)] = C64::ONE;
        }
    }
    Ok(v)
}

/// Column orthonormality report for a machine's isometry.
#[derive(Debug, Clone, Copy)]
pub struct UnitarityReport {
    /// |<col0|col0> - 1|.
    pub norm0_deviation: f64,
    /// |<col1|col1> - 1|.
    pub norm1_deviation: f64,
    /// |<col0|col1>|.
    pub overlap: f64,
    /// Largest of the three.
    pub max_violation: f64,
}

/// Checks column orthonormality of a machine's isometry and reports the
/// worst deviation. Exact constructions sit at machine precision;
/// decimal-rounded parameter sets show their rounding error here.
pub fn verify_unitarity(spec: &ClonerSpec) -> Result<UnitarityReport> {
    let v = build_isometry(spec)?;
    let gram = v.dagger().mul(&v)?;
    let norm0_deviation = (gram[(0, 0)] - C64::ONE).norm();
    let norm1_deviation = (gram[(1, 1)] - C64::ONE).norm();
    let overlap = gram[(0, 1)].norm();
    Ok(UnitarityReport {
        norm0_deviation,
        norm1_deviation,
        overlap,
        max_violation: norm0_deviation.max(norm1_deviation).max(overlap),
    })
}

/// Runs a machine on an input qubit and reduces the output.
///
/// The full state is alpha * (image of |0>) + beta * (image of |1>). If its
/// norm drifts beyond `TOL.normalization` from 1 (possible only for
/// decimal-rounded machine amplitudes), the state is renormalized before the
/// reductions are taken; exactly normalized machines pass through untouched.
pub fn apply_cloner(spec: &ClonerSpec, input: &InputQubit) -> Result<CloneOutput> {
    let v = build_isometry(spec)?;
    let dim = v.rows();
    let mut amps: Vec<C64> = (0..dim)
        .map(|i| input.alpha() * v[(i, 0)] + input.beta() * v[(i, 1)])
        .collect();
    let norm_sqr: f64 = amps.iter().map(|z| z.norm_sqr()).sum();
    if (norm_sqr - 1.0).abs() > TOL.normalization {
        let norm = norm_sqr.sqrt();
        for z in &mut amps {
            *z /= norm;
        }
    }
    let num_qubits = spec.output_qubits();
    let full_state = PureState::new(num_qubits, amps)?;
    let rho_full = pure_to_density(&full_state);

    let machine: Vec<usize> = (2..num_qubits).collect();
    let two_qubit = if machine.is_empty() {
        rho_full.clone()
    } else {
        partial_trace(&rho_full, &machine)?
    };
    let clone_a = partial_trace(&rho_full, &(1..num_qubits).collect::<Vec<_>>())?;
    let not_b: Vec<usize> = (0..num_qubits).filter(|&q| q != 1).collect();
    let clone_b = partial_trace(&rho_full, &not_b)?;

    Ok(CloneOutput {
        full_state,
        two_qubit,
        clone_a,
        clone_b,
    })
}

/// Squared Hilbert-Schmidt distance between the input and clone a; smaller
/// is better.
pub fn copy_quality(spec: &ClonerSpec, input: &InputQubit) -> Result<f64> {
    let output = apply_cloner(spec, input)?;
    hs_distance(&input.density(), &output.clone_a)
}
