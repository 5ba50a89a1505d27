//! C ABI over the cloning-machine catalog: opaque machine handles, status
//! codes, flat measure structs, and a thread-local last-error message.
//!
//! Every fallible call returns a [`QcloneStatus`]; on any non-Ok status the
//! cause is readable through [`qclone_last_error`] until the next failure
//! on the same thread. The matching C header is generated into
//! `include/qclone.h` when this crate builds.

use std::cell::RefCell;
use std::ffi::{c_char, CString};

use qclone::{
    apply_cloner, average_copy_quality, build_isometry, concurrence, hs_distance, l1_coherence,
    optimize_statedep, sample_bound, verify_unitarity, BHMachineParams, ClonerSpec, InputQubit,
    StateDepParams, C64,
};

/// Status code returned by every fallible call.
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum QcloneStatus {
    Ok = 0,
    InvalidArgument = 1,
    NullPointer = 2,
    NumericFailure = 3,
}

/// Opaque handle to one machine from the catalog.
pub struct QcloneCloner(ClonerSpec);

/// Measures of one machine run on one pure input qubit.
#[repr(C)]
#[derive(Clone, Copy, Debug, Default)]
pub struct QcloneMeasures {
    /// l1 coherence of the two-clone reduction.
    pub two_qubit_l1: f64,
    /// Concurrence of the two-clone reduction.
    pub two_qubit_concurrence: f64,
    /// l1 coherence of clone a.
    pub clone_l1: f64,
    /// Squared Hilbert-Schmidt distance from the input to clone a.
    pub copy_quality: f64,
}

/// Result of seeded random sampling of the concurrence <= l1-coherence
/// bound on cross-coupled two-qubit states.
#[repr(C)]
#[derive(Clone, Copy, Debug, Default)]
pub struct QcloneBoundReport {
    pub samples: u64,
    /// Bound violations observed; soundness requires 0.
    pub violations: u64,
    /// Largest concurrence / l1-coherence ratio seen.
    pub max_ratio: f64,
    /// Largest closed-form vs spectral concurrence disagreement.
    pub max_closed_form_deviation: f64,
}

/// Optimum of the state-dependent machine's clone-coherence coefficient;
/// the maximum is sqrt(2) on the ridge theta + phi = pi/2.
#[repr(C)]
#[derive(Clone, Copy, Debug, Default)]
pub struct QcloneOptimum {
    pub best_value: f64,
    pub theta: f64,
    pub phi: f64,
    pub ridge_residual: f64,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn fail(status: QcloneStatus, message: impl Into<Vec<u8>>) -> QcloneStatus {
    let text = CString::new(message).unwrap_or_else(|_| CString::new("invalid error text").unwrap());
    LAST_ERROR.with(|slot| *slot.borrow_mut() = Some(text));
    status
}

/// Crate version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn qclone_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr() as *const c_char
}

/// Explanation of the most recent failure on this thread, or null if none.
/// The pointer stays valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn qclone_last_error() -> *const c_char {
    LAST_ERROR.with(|slot| {
        slot.borrow()
            .as_ref()
            .map_or(std::ptr::null(), |s| s.as_ptr())
    })
}

unsafe fn construct(
    out: *mut *mut QcloneCloner,
    spec: qclone::Result<ClonerSpec>,
) -> QcloneStatus {
    if out.is_null() {
        return fail(QcloneStatus::NullPointer, "out handle pointer is null");
    }
    match spec {
        Ok(spec) => {
            *out = Box::into_raw(Box::new(QcloneCloner(spec)));
            QcloneStatus::Ok
        }
        Err(e) => fail(QcloneStatus::InvalidArgument, e.to_string()),
    }
}

/// Creates the basis-copying machine.
///
/// # Safety
/// `out` must be a valid pointer to a handle slot.
#[no_mangle]
pub unsafe extern "C" fn qclone_cloner_new_wz(out: *mut *mut QcloneCloner) -> QcloneStatus {
    construct(out, Ok(ClonerSpec::WoottersZurek))
}

/// Creates the equatorial-input machine.
///
/// # Safety
/// `out` must be a valid pointer to a handle slot.
#[no_mangle]
pub unsafe extern "C" fn qclone_cloner_new_phase_covariant(
    out: *mut *mut QcloneCloner,
) -> QcloneStatus {
    construct(out, Ok(ClonerSpec::PhaseCovariant))
}

/// Creates the state-independent optimal machine.
///
/// # Safety
/// `out` must be a valid pointer to a handle slot.
#[no_mangle]
pub unsafe extern "C" fn qclone_cloner_new_bh_optimal(
    out: *mut *mut QcloneCloner,
) -> QcloneStatus {
    construct(out, Ok(ClonerSpec::BHOptimal))
}

/// Creates the maximal-entanglement machine.
///
/// # Safety
/// `out` must be a valid pointer to a handle slot.
#[no_mangle]
pub unsafe extern "C" fn qclone_cloner_new_coherence_machine(
    out: *mut *mut QcloneCloner,
) -> QcloneStatus {
    construct(out, Ok(ClonerSpec::CoherenceMachine))
}

/// Creates the CNOT machine (no ancilla register).
///
/// # Safety
/// `out` must be a valid pointer to a handle slot.
#[no_mangle]
pub unsafe extern "C" fn qclone_cloner_new_cnot(out: *mut *mut QcloneCloner) -> QcloneStatus {
    construct(out, Ok(ClonerSpec::CnotEntangler))
}

/// Creates the two-parameter machine. Parameters must satisfy
/// 0 <= mu <= 1/2 and 0 <= nu <= 2*sqrt(mu*(1-2*mu)).
///
/// # Safety
/// `out` must be a valid pointer to a handle slot.
#[no_mangle]
pub unsafe extern "C" fn qclone_cloner_new_bh_general(
    mu: f64,
    nu: f64,
    out: *mut *mut QcloneCloner,
) -> QcloneStatus {
    construct(out, BHMachineParams::new(mu, nu).map(ClonerSpec::BHGeneral))
}

/// Creates the six-amplitude state-dependent machine. Each branch's squared
/// amplitudes must sum to 1 within 1e-5.
///
/// # Safety
/// `out` must be a valid pointer to a handle slot.
#[no_mangle]
pub unsafe extern "C" fn qclone_cloner_new_state_dependent(
    a: f64,
    b1: f64,
    b2: f64,
    a_t: f64,
    b1_t: f64,
    b2_t: f64,
    out: *mut *mut QcloneCloner,
) -> QcloneStatus {
    construct(
        out,
        StateDepParams::new(a, b1, b2, a_t, b1_t, b2_t).map(ClonerSpec::StateDependent),
    )
}

/// Releases a handle; null is a no-op.
///
/// # Safety
/// `cloner` must be null or a handle from a `qclone_cloner_new_*` call,
/// not yet freed.
#[no_mangle]
pub unsafe extern "C" fn qclone_cloner_free(cloner: *mut QcloneCloner) {
    if !cloner.is_null() {
        drop(Box::from_raw(cloner));
    }
}

fn compute_measures(spec: &ClonerSpec, input: &InputQubit) -> qclone::Result<QcloneMeasures> {
    let output = apply_cloner(spec, input)?;
    Ok(QcloneMeasures {
        two_qubit_l1: l1_coherence(&output.two_qubit),
        two_qubit_concurrence: concurrence(&output.two_qubit)?,
        clone_l1: l1_coherence(&output.clone_a),
        copy_quality: hs_distance(&input.density(), &output.clone_a)?,
    })
}

/// Runs the machine on the pure input `alpha |0> + beta |1>` (re/im parts;
/// must be normalized) and fills `out` with all four measures.
///
/// # Safety
/// `cloner` must be a live handle; `out` must point to a `QcloneMeasures`.
#[no_mangle]
pub unsafe extern "C" fn qclone_cloner_measures(
    cloner: *const QcloneCloner,
    alpha_re: f64,
    alpha_im: f64,
    beta_re: f64,
    beta_im: f64,
    out: *mut QcloneMeasures,
) -> QcloneStatus {
    let Some(handle) = cloner.as_ref() else {
        return fail(QcloneStatus::NullPointer, "cloner handle is null");
    };
    if out.is_null() {
        return fail(QcloneStatus::NullPointer, "out measures pointer is null");
    }
    let input = match InputQubit::new(C64::new(alpha_re, alpha_im), C64::new(beta_re, beta_im)) {
        Ok(input) => input,
        Err(e) => return fail(QcloneStatus::InvalidArgument, e.to_string()),
    };
    match compute_measures(&handle.0, &input) {
        Ok(measures) => {
            *out = measures;
            QcloneStatus::Ok
        }
        Err(e) => fail(QcloneStatus::NumericFailure, e.to_string()),
    }
}

/// Mean copy quality over `points` midpoint samples uniform in |alpha|^2;
/// `points` must be at least 2.
///
/// # Safety
/// `cloner` must be a live handle; `out` must point to a double.
#[no_mangle]
pub unsafe extern "C" fn qclone_cloner_average_copy_quality(
    cloner: *const QcloneCloner,
    points: usize,
    out: *mut f64,
) -> QcloneStatus {
    let Some(handle) = cloner.as_ref() else {
        return fail(QcloneStatus::NullPointer, "cloner handle is null");
    };
    if out.is_null() {
        return fail(QcloneStatus::NullPointer, "out pointer is null");
    }
    match average_copy_quality(&handle.0, points) {
        Ok(average) => {
            *out = average;
            QcloneStatus::Ok
        }
        Err(e) => fail(QcloneStatus::InvalidArgument, e.to_string()),
    }
}

/// Largest column-orthonormality violation of the machine's isometry.
///
/// # Safety
/// `cloner` must be a live handle; `out` must point to a double.
#[no_mangle]
pub unsafe extern "C" fn qclone_cloner_isometry_violation(
    cloner: *const QcloneCloner,
    out: *mut f64,
) -> QcloneStatus {
    let Some(handle) = cloner.as_ref() else {
        return fail(QcloneStatus::NullPointer, "cloner handle is null");
    };
    if out.is_null() {
        return fail(QcloneStatus::NullPointer, "out pointer is null");
    }
    match verify_unitarity(&handle.0) {
        Ok(report) => {
            *out = report.max_violation;
            QcloneStatus::Ok
        }
        Err(e) => fail(QcloneStatus::NumericFailure, e.to_string()),
    }
}

/// Row count of the machine's isometry (there are always 2 columns);
/// 0 for a null handle.
///
/// # Safety
/// `cloner` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn qclone_cloner_isometry_rows(cloner: *const QcloneCloner) -> usize {
    cloner.as_ref().map_or(0, |handle| {
        4 * handle.0.machine_dimension()
    })
}

/// Copies the isometry into `out` as row-major (re, im) pairs: entry
/// (r, c) lands at out[4*r + 2*c] and out[4*r + 2*c + 1]. `len` must be
/// exactly 4 * qclone_cloner_isometry_rows(cloner).
///
/// # Safety
/// `cloner` must be a live handle; `out` must point to `len` doubles.
#[no_mangle]
pub unsafe extern "C" fn qclone_cloner_isometry_copy(
    cloner: *const QcloneCloner,
    out: *mut f64,
    len: usize,
) -> QcloneStatus {
    let Some(handle) = cloner.as_ref() else {
        return fail(QcloneStatus::NullPointer, "cloner handle is null");
    };
    if out.is_null() {
        return fail(QcloneStatus::NullPointer, "out buffer is null");
    }
    let matrix = match build_isometry(&handle.0) {
        Ok(matrix) => matrix,
        Err(e) => return fail(QcloneStatus::NumericFailure, e.to_string()),
    };
    let needed = matrix.rows() * matrix.cols() * 2;
    if len != needed {
        return fail(
            QcloneStatus::InvalidArgument,
            format!("buffer length {len} does not match required {needed}"),
        );
    }
    let out = std::slice::from_raw_parts_mut(out, len);
    for r in 0..matrix.rows() {
        for c in 0..matrix.cols() {
            let z = matrix[(r, c)];
            out[2 * (r * matrix.cols() + c)] = z.re;
            out[2 * (r * matrix.cols() + c) + 1] = z.im;
        }
    }
    QcloneStatus::Ok
}

/// Draws `samples` seeded random cross-coupled states and checks the
/// concurrence <= l1-coherence bound on each; equal seeds reproduce
/// bit-identical reports.
///
/// # Safety
/// `out` must point to a `QcloneBoundReport`.
#[no_mangle]
pub unsafe extern "C" fn qclone_bound_sample(
    samples: usize,
    seed: u64,
    out: *mut QcloneBoundReport,
) -> QcloneStatus {
    if out.is_null() {
        return fail(QcloneStatus::NullPointer, "out report pointer is null");
    }
    match sample_bound(samples, seed) {
        Ok(report) => {
            *out = QcloneBoundReport {
                samples: report.samples as u64,
                violations: report.violations as u64,
                max_ratio: report.max_ratio,
                max_closed_form_deviation: report.max_closed_form_deviation,
            };
            QcloneStatus::Ok
        }
        Err(e) => fail(QcloneStatus::InvalidArgument, e.to_string()),
    }
}

/// Maximizes the state-dependent machine's clone-coherence coefficient;
/// `resolution` (>= 10) sizes the seeding grid.
///
/// # Safety
/// `out` must point to a `QcloneOptimum`.
#[no_mangle]
pub unsafe extern "C" fn qclone_optimize_coherence(
    resolution: usize,
    out: *mut QcloneOptimum,
) -> QcloneStatus {
    if out.is_null() {
        return fail(QcloneStatus::NullPointer, "out pointer is null");
    }
    match optimize_statedep(resolution) {
        Ok(result) => {
            *out = QcloneOptimum {
                best_value: result.best_value,
                theta: result.theta,
                phi: result.phi,
                ridge_residual: result.ridge_residual,
            };
            QcloneStatus::Ok
        }
        Err(e) => fail(QcloneStatus::InvalidArgument, e.to_string()),
    }
}
