//! Qubit cloning machines as exact isometries, with entanglement and
//! coherence measures on their reduced outputs.
//!
//! A machine maps one pure input qubit into a three-register output
//! (clone a, clone b, machine ancilla); reduced states come from partial
//! traces of the full output, never from separately coded formulas. On the
//! reductions the crate evaluates l1 coherence, two-qubit concurrence, and
//! the squared Hilbert-Schmidt copy-quality distance, plus the closed-form
//! measures of cross-coupled ("X-form") states used to sample the
//! concurrence <= l1-coherence bound.
//!
//! ```
//! use qclone::{apply_cloner, concurrence, ClonerSpec, InputQubit};
//!
//! let input = InputQubit::from_alpha(1.0 / std::f64::consts::SQRT_2)?;
//! let output = apply_cloner(&ClonerSpec::BHOptimal, &input)?;
//! let c = concurrence(&output.two_qubit)?;
//! assert!((c - 1.0 / 3.0).abs() < 1e-9);
//! # Ok::<(), qclone::Error>(())
//! ```
//!
//! The `qclone` binary exposes the catalog, the sweeps behind the two
//! standard figures, input averaging, the state-dependent optimizer, and
//! the seeded bound sampler; see the `cli` module.

pub mod analysis;
pub mod cli;
pub mod cloners;
pub mod eigen;
pub mod error;
pub mod format;
pub mod matrix;
pub mod measures;
pub mod state;
pub mod tol;

pub use analysis::{
    average_copy_quality, cnot_coherence_check, linear_grid, optimize_statedep, sample_bound,
    statedep_objective, sweep_bh_concurrence, sweep_statedep_concurrence, BoundSampleReport,
    OptimizerResult, SweepResult, SweepRow,
};
pub use cloners::{
    apply_cloner, build_isometry, copy_quality, make_machine_vectors, verify_unitarity,
    BHMachineParams, CloneOutput, ClonerSpec, MachineVectors, StateDepParams, UnitarityReport,
};
pub use error::{Error, Result};
pub use matrix::{tensor_product, C64, ComplexMatrix};
pub use measures::{
    check_bound, concurrence, concurrence_xform, hs_distance, l1_coherence, measure_two_qubit,
    xform_l1, BoundCheck, MeasureReport, XFormState,
};
pub use state::{partial_trace, pure_to_density, DensityMatrix, InputQubit, PureState};
pub use tol::{Tolerances, TOL};
