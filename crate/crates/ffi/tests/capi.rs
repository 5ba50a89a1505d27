//! Exercises the C ABI exactly as a C caller would: raw pointers, status
//! codes, the thread-local error string, and the generated header.

use std::f64::consts::{FRAC_1_SQRT_2, FRAC_PI_2, SQRT_2};
use std::ffi::CStr;
use std::path::Path;
use std::process::Command;
use std::ptr;

use qclone_ffi::*;

unsafe fn new_handle(
    make: unsafe extern "C" fn(*mut *mut QcloneCloner) -> QcloneStatus,
) -> *mut QcloneCloner {
    let mut handle: *mut QcloneCloner = ptr::null_mut();
    assert_eq!(unsafe { make(&mut handle) }, QcloneStatus::Ok);
    assert!(!handle.is_null());
    handle
}

fn last_error_text() -> String {
    let message = qclone_last_error();
    assert!(!message.is_null(), "a failure should leave an error string");
    unsafe { CStr::from_ptr(message) }
        .to_string_lossy()
        .into_owned()
}

#[test]
fn version_is_a_static_semver_string() {
    let version = qclone_version();
    assert!(!version.is_null());
    let text = unsafe { CStr::from_ptr(version) }.to_str().unwrap();
    assert_eq!(text.split('.').count(), 3);
}

#[test]
fn optimal_machine_measures_match_closed_forms() {
    unsafe {
        let handle = new_handle(qclone_cloner_new_bh_optimal);
        let mut m = QcloneMeasures::default();
        let status = qclone_cloner_measures(handle, FRAC_1_SQRT_2, 0.0, FRAC_1_SQRT_2, 0.0, &mut m);
        assert_eq!(status, QcloneStatus::Ok);
        assert!((m.two_qubit_l1 - 5.0 / 3.0).abs() < 1e-9);
        assert!((m.two_qubit_concurrence - 1.0 / 3.0).abs() < 1e-9);
        assert!((m.clone_l1 - 2.0 / 3.0).abs() < 1e-9);
        assert!((m.copy_quality - 1.0 / 18.0).abs() < 1e-9);
        qclone_cloner_free(handle);
    }
}

#[test]
fn basis_copier_accepts_complex_amplitudes() {
    unsafe {
        let handle = new_handle(qclone_cloner_new_wz);
        let mut m = QcloneMeasures::default();
        let status = qclone_cloner_measures(handle, 0.6, 0.0, 0.0, 0.8, &mut m);
        assert_eq!(status, QcloneStatus::Ok);
        assert!(m.two_qubit_l1 < 1e-12);
        assert!(m.two_qubit_concurrence < 1e-10);
        // 2 |alpha|^2 |beta|^2 with |alpha|^2 = 0.36.
        assert!((m.copy_quality - 0.4608).abs() < 1e-12);
        qclone_cloner_free(handle);
    }
}

#[test]
fn invalid_machine_parameters_set_the_error_string() {
    unsafe {
        let mut handle: *mut QcloneCloner = ptr::null_mut();
        let status = qclone_cloner_new_bh_general(0.4, 0.9, &mut handle);
        assert_eq!(status, QcloneStatus::InvalidArgument);
        assert!(handle.is_null(), "failed construction must not leak a handle");
        assert!(last_error_text().contains("2*sqrt(mu*(1-2*mu))"));

        let status = qclone_cloner_new_state_dependent(0.9, 0.9, 0.9, 0.7, 0.5, 0.5, &mut handle);
        assert_eq!(status, QcloneStatus::InvalidArgument);
        assert!(handle.is_null());
    }
}

#[test]
fn null_pointers_are_rejected_not_dereferenced() {
    unsafe {
        assert_eq!(
            qclone_cloner_new_wz(ptr::null_mut()),
            QcloneStatus::NullPointer
        );
        let mut m = QcloneMeasures::default();
        assert_eq!(
            qclone_cloner_measures(ptr::null(), 1.0, 0.0, 0.0, 0.0, &mut m),
            QcloneStatus::NullPointer
        );
        let handle = new_handle(qclone_cloner_new_cnot);
        assert_eq!(
            qclone_cloner_measures(handle, 1.0, 0.0, 0.0, 0.0, ptr::null_mut()),
            QcloneStatus::NullPointer
        );
        assert_eq!(
            qclone_bound_sample(10, 1, ptr::null_mut()),
            QcloneStatus::NullPointer
        );
        qclone_cloner_free(handle);
        // Freeing null must be a no-op.
        qclone_cloner_free(ptr::null_mut());
    }
}

#[test]
fn unnormalized_input_is_an_invalid_argument() {
    unsafe {
        let handle = new_handle(qclone_cloner_new_wz);
        let mut m = QcloneMeasures::default();
        let status = qclone_cloner_measures(handle, 0.9, 0.0, 0.9, 0.0, &mut m);
        assert_eq!(status, QcloneStatus::InvalidArgument);
        assert!(!qclone_last_error().is_null());
        qclone_cloner_free(handle);
    }
}

#[test]
fn isometry_rows_reflect_machine_space_size() {
    unsafe {
        let wz = new_handle(qclone_cloner_new_wz);
        let cnot = new_handle(qclone_cloner_new_cnot);
        let mut bh: *mut QcloneCloner = ptr::null_mut();
        assert_eq!(
            qclone_cloner_new_bh_general(0.2, 0.3, &mut bh),
            QcloneStatus::Ok
        );
        assert_eq!(qclone_cloner_isometry_rows(wz), 8);
        assert_eq!(qclone_cloner_isometry_rows(cnot), 4);
        assert_eq!(qclone_cloner_isometry_rows(bh), 16);
        assert_eq!(qclone_cloner_isometry_rows(ptr::null()), 0);
        qclone_cloner_free(wz);
        qclone_cloner_free(cnot);
        qclone_cloner_free(bh);
    }
}

#[test]
fn isometry_copy_round_trips_and_validates_length() {
    unsafe {
        let handle = new_handle(qclone_cloner_new_wz);
        let rows = qclone_cloner_isometry_rows(handle);
        let len = rows * 2 * 2;
        let mut buffer = vec![0.0f64; len];
        let status = qclone_cloner_isometry_copy(handle, buffer.as_mut_ptr(), len);
        assert_eq!(status, QcloneStatus::Ok);
        // |0> maps to |000>: entry (0, 0) is 1; |1> maps to |111>: entry (7, 1).
        assert_eq!(buffer[0], 1.0);
        assert_eq!(buffer[1], 0.0);
        assert_eq!(buffer[4 * 7 + 2], 1.0);
        // Column norms: each column of the flattened buffer sums to 1.
        for col in 0..2 {
            let norm: f64 = (0..rows)
                .map(|r| {
                    let re = buffer[4 * r + 2 * col];
                    let im = buffer[4 * r + 2 * col + 1];
                    re * re + im * im
                })
                .sum();
            assert!((norm - 1.0).abs() < 1e-12);
        }
        let status = qclone_cloner_isometry_copy(handle, buffer.as_mut_ptr(), len - 1);
        assert_eq!(status, QcloneStatus::InvalidArgument);
        qclone_cloner_free(handle);
    }
}

#[test]
fn isometry_violation_is_tiny_for_catalog_machines() {
    unsafe {
        let handle = new_handle(qclone_cloner_new_phase_covariant);
        let mut violation = f64::NAN;
        assert_eq!(
            qclone_cloner_isometry_violation(handle, &mut violation),
            QcloneStatus::Ok
        );
        assert!(violation < 1e-12);
        qclone_cloner_free(handle);
    }
}

#[test]
fn average_copy_quality_matches_the_integral() {
    unsafe {
        let handle = new_handle(qclone_cloner_new_wz);
        let mut average = f64::NAN;
        let status = qclone_cloner_average_copy_quality(handle, 2000, &mut average);
        assert_eq!(status, QcloneStatus::Ok);
        assert!((average - 1.0 / 3.0).abs() < 1e-6);
        assert_eq!(
            qclone_cloner_average_copy_quality(handle, 1, &mut average),
            QcloneStatus::InvalidArgument
        );
        qclone_cloner_free(handle);
    }
}

#[test]
fn bound_sampler_is_deterministic_per_seed() {
    unsafe {
        let mut first = QcloneBoundReport::default();
        let mut second = QcloneBoundReport::default();
        let mut other = QcloneBoundReport::default();
        assert_eq!(qclone_bound_sample(2000, 7, &mut first), QcloneStatus::Ok);
        assert_eq!(qclone_bound_sample(2000, 7, &mut second), QcloneStatus::Ok);
        assert_eq!(qclone_bound_sample(2000, 8, &mut other), QcloneStatus::Ok);
        assert_eq!(first.samples, 2000);
        assert_eq!(first.violations, 0);
        assert_eq!(first.max_ratio.to_bits(), second.max_ratio.to_bits());
        assert_ne!(first.max_ratio.to_bits(), other.max_ratio.to_bits());
    }
}

#[test]
fn optimizer_reaches_the_known_maximum() {
    unsafe {
        let mut optimum = QcloneOptimum::default();
        assert_eq!(qclone_optimize_coherence(16, &mut optimum), QcloneStatus::Ok);
        assert!((optimum.best_value - SQRT_2).abs() < 1e-6);
        assert!(optimum.ridge_residual < 1e-6);
        assert!((optimum.theta + optimum.phi - FRAC_PI_2).abs() < 1e-6);
        assert_eq!(
            qclone_optimize_coherence(2, &mut optimum),
            QcloneStatus::InvalidArgument
        );
    }
}

#[test]
fn generated_header_declares_the_full_surface() {
    let header = Path::new(env!("CARGO_MANIFEST_DIR")).join("include/qclone.h");
    let text = std::fs::read_to_string(&header).expect("build script should emit the header");
    for needle in [
        "QCLONE_STATUS_OK",
        "QCLONE_STATUS_INVALID_ARGUMENT",
        "typedef struct QcloneCloner QcloneCloner",
        "qclone_cloner_new_bh_general",
        "qclone_cloner_measures",
        "qclone_bound_sample",
        "qclone_optimize_coherence",
        "qclone_last_error",
    ] {
        assert!(text.contains(needle), "header missing `{needle}`");
    }

    // Syntax-check the header as C when a compiler is available.
    match Command::new("cc")
        .args(["-fsyntax-only", "-x", "c"])
        .arg(&header)
        .output()
    {
        Ok(output) => assert!(
            output.status.success(),
            "header failed to compile as C:\n{}",
            String::from_utf8_lossy(&output.stderr)
        ),
        Err(_) => eprintln!("cc not found, skipping header syntax check"),
    }
}
