//! Property-based invariants: algebraic identities of the tensor/partial
//! trace machinery, spectral routines, measure bounds, and the machine
//! catalog, over randomized inputs.

use proptest::collection::vec;
use proptest::prelude::*;

use qclone::eigen::{hermitian_eigensystem, psd_sqrt_matrix};
use qclone::format::fmt_g12;
use qclone::{
    apply_cloner, check_bound, concurrence, concurrence_xform, hs_distance, l1_coherence,
    make_machine_vectors, partial_trace, pure_to_density, tensor_product, verify_unitarity,
    BHMachineParams, C64, ClonerSpec, ComplexMatrix, DensityMatrix, InputQubit, PureState,
    StateDepParams, XFormState,
};

fn arb_c64() -> impl Strategy<Value = C64> {
    (-1.0f64..1.0, -1.0f64..1.0).prop_map(|(re, im)| C64::new(re, im))
}

fn arb_qubit() -> impl Strategy<Value = InputQubit> {
    (arb_c64(), arb_c64())
        .prop_filter("norm not tiny", |(a, b)| a.norm_sqr() + b.norm_sqr() > 1e-3)
        .prop_map(|(a, b)| InputQubit::new_normalized(a, b).unwrap())
}

fn arb_matrix2() -> impl Strategy<Value = ComplexMatrix> {
    vec(arb_c64(), 4).prop_map(|v| ComplexMatrix::new(2, 2, v).unwrap())
}

/// Random two-qubit density matrix G G^dag / tr.
fn arb_density2() -> impl Strategy<Value = DensityMatrix> {
    vec(arb_c64(), 16).prop_filter_map("trace not tiny", |v| {
        let g = ComplexMatrix::new(4, 4, v).unwrap();
        let h = g.mul(&g.dagger()).unwrap();
        let trace = h.trace().re;
        (trace > 1e-2)
            .then(|| DensityMatrix::new(2, h.scale(C64::new(1.0 / trace, 0.0))).unwrap())
    })
}

/// Random single-qubit unitary by Gram-Schmidt on two random vectors.
fn arb_unitary2() -> impl Strategy<Value = ComplexMatrix> {
    (arb_c64(), arb_c64(), arb_c64(), arb_c64()).prop_filter_map(
        "vectors too dependent",
        |(a, b, c, d)| {
            let n1 = (a.norm_sqr() + b.norm_sqr()).sqrt();
            if n1 < 1e-2 {
                return None;
            }
            let (v0, v1) = (a / n1, b / n1);
            let overlap = v0.conj() * c + v1.conj() * d;
            let (mut u0, mut u1) = (c - overlap * v0, d - overlap * v1);
            let n2 = (u0.norm_sqr() + u1.norm_sqr()).sqrt();
            if n2 < 1e-2 {
                return None;
            }
            u0 /= n2;
            u1 /= n2;
            Some(ComplexMatrix::new(2, 2, vec![v0, u0, v1, u1]).unwrap())
        },
    )
}

fn arb_pure3() -> impl Strategy<Value = PureState> {
    vec(arb_c64(), 8).prop_filter_map("norm not tiny", |v| {
        let norm_sqr: f64 = v.iter().map(|z| z.norm_sqr()).sum();
        if norm_sqr < 1e-3 {
            return None;
        }
        let norm = norm_sqr.sqrt();
        PureState::new(3, v.into_iter().map(|z| z / norm).collect()).ok()
    })
}

fn arb_xform() -> impl Strategy<Value = XFormState> {
    (
        0.01f64..1.0,
        0.01f64..1.0,
        0.01f64..1.0,
        0.01f64..1.0,
        0.0f64..=1.0,
        0.0f64..std::f64::consts::TAU,
    )
        .prop_map(|(w1, w2, w3, w4, frac, phase)| {
            let sum = w1 + w2 + w3 + w4;
            let (a, b, d, e) = (w1 / sum, w2 / sum, w3 / sum, w4 / sum);
            let c = C64::from_polar(frac * (b * d).sqrt(), phase);
            XFormState::new(a, b, d, e, c).unwrap()
        })
}

fn arb_machine() -> impl Strategy<Value = ClonerSpec> {
    prop_oneof![
        Just(ClonerSpec::WoottersZurek),
        Just(ClonerSpec::PhaseCovariant),
        Just(ClonerSpec::BHOptimal),
        Just(ClonerSpec::CoherenceMachine),
        Just(ClonerSpec::CnotEntangler),
        (0.0f64..=0.5, 0.0f64..=1.0).prop_map(|(mu, f)| {
            let nu = f * BHMachineParams::schwarz_bound(mu);
            ClonerSpec::BHGeneral(BHMachineParams::new(mu, nu).unwrap())
        }),
        (
            0.0f64..std::f64::consts::FRAC_PI_2,
            0.0f64..std::f64::consts::FRAC_PI_2
        )
            .prop_map(|(theta, phi)| {
                ClonerSpec::StateDependent(StateDepParams::from_angles(theta, phi).unwrap())
            }),
    ]
}

proptest! {
    #[test]
    fn tensor_product_is_mixed_product_compatible(
        a in arb_matrix2(), b in arb_matrix2(), c in arb_matrix2(), d in arb_matrix2()
    ) {
        let left = tensor_product(&a, &b).mul(&tensor_product(&c, &d)).unwrap();
        let right = tensor_product(&a.mul(&c).unwrap(), &b.mul(&d).unwrap());
        prop_assert!(left.max_abs_diff(&right) < 1e-12);
    }

    #[test]
    fn partial_trace_yields_valid_unit_trace_states(psi in arb_pure3(), keep in 0usize..3) {
        let rho = pure_to_density(&psi);
        let traced: Vec<usize> = (0..3).filter(|&q| q != keep).collect();
        // Construction re-validates hermiticity, trace, and positivity.
        let reduced = partial_trace(&rho, &traced).unwrap();
        prop_assert!((reduced.matrix().trace().re - 1.0).abs() < 1e-10);
        prop_assert_eq!(reduced.num_qubits(), 1);
    }

    #[test]
    fn psd_sqrt_squares_back(rho in arb_density2()) {
        let root = psd_sqrt_matrix(rho.matrix()).unwrap();
        prop_assert!(root.mul(&root).unwrap().max_abs_diff(rho.matrix()) < 1e-9);
    }

    #[test]
    fn eigensystem_reconstructs_its_matrix(rho in arb_density2()) {
        let (values, vectors) = hermitian_eigensystem(rho.matrix()).unwrap();
        prop_assert!((values.iter().sum::<f64>() - 1.0).abs() < 1e-9);
        for pair in values.windows(2) {
            prop_assert!(pair[0] >= pair[1]);
        }
        // A V = V diag(values), and V is unitary.
        let av = rho.matrix().mul(&vectors).unwrap();
        let mut vd = vectors.clone();
        for r in 0..4 {
            for col in 0..4 {
                vd[(r, col)] = vectors[(r, col)] * values[col];
            }
        }
        prop_assert!(av.max_abs_diff(&vd) < 1e-9);
        let gram = vectors.dagger().mul(&vectors).unwrap();
        prop_assert!(gram.max_abs_diff(&ComplexMatrix::identity(4)) < 1e-9);
    }

    #[test]
    fn concurrence_is_local_unitary_invariant(
        rho in arb_density2(), u in arb_unitary2(), w in arb_unitary2()
    ) {
        let local = tensor_product(&u, &w);
        let rotated = local.mul(rho.matrix()).unwrap().mul(&local.dagger()).unwrap();
        let rotated = DensityMatrix::new(2, rotated).unwrap();
        let difference = concurrence(&rho).unwrap() - concurrence(&rotated).unwrap();
        prop_assert!(difference.abs() < 1e-9);
    }

    #[test]
    fn closed_form_matches_spectral_concurrence(state in arb_xform()) {
        let rho = state.to_density().unwrap();
        let difference = concurrence(&rho).unwrap() - concurrence_xform(&state);
        prop_assert!(difference.abs() < 1e-9);
    }

    #[test]
    fn concurrence_never_exceeds_coherence(state in arb_xform()) {
        prop_assert!(check_bound(&state).holds);
        let rho = state.to_density().unwrap();
        prop_assert!(concurrence(&rho).unwrap() <= l1_coherence(&rho) + 1e-12);
    }

    #[test]
    fn machine_vector_relations_hold(mu in 0.0f64..=0.5, f in 0.0f64..=1.0) {
        let nu = f * BHMachineParams::schwarz_bound(mu);
        let p = BHMachineParams::new(mu, nu).unwrap();
        let mv = make_machine_vectors(&p);
        let inner = |x: &[C64; 4], y: &[C64; 4]| -> C64 {
            x.iter().zip(y).map(|(a, b)| a.conj() * b).sum()
        };
        prop_assert!((inner(&mv.q0, &mv.q0).re + 2.0 * inner(&mv.y0, &mv.y0).re - 1.0).abs() < 1e-10);
        prop_assert!((inner(&mv.q1, &mv.q1).re + 2.0 * inner(&mv.y1, &mv.y1).re - 1.0).abs() < 1e-10);
        prop_assert!(inner(&mv.y0, &mv.y1).norm() < 1e-10);
        prop_assert!(inner(&mv.q0, &mv.y0).norm() < 1e-10);
        prop_assert!(inner(&mv.q1, &mv.y1).norm() < 1e-10);
        prop_assert!(inner(&mv.q0, &mv.q1).norm() < 1e-10);
        prop_assert!((inner(&mv.y0, &mv.q1).re - nu / 2.0).abs() < 1e-10);
        prop_assert!((inner(&mv.q0, &mv.y1).re - nu / 2.0).abs() < 1e-10);
    }

    #[test]
    fn every_machine_is_an_isometry(spec in arb_machine()) {
        prop_assert!(verify_unitarity(&spec).unwrap().max_violation < 1e-12);
    }

    #[test]
    fn both_clones_agree_for_every_catalog_machine(spec in arb_machine(), input in arb_qubit()) {
        let out = apply_cloner(&spec, &input).unwrap();
        prop_assert!(out.clone_a.matrix().max_abs_diff(out.clone_b.matrix()) < 1e-10);
        prop_assert!((out.two_qubit.matrix().trace().re - 1.0).abs() < 1e-10);
    }

    #[test]
    fn basis_copier_never_creates_coherence_or_entanglement(input in arb_qubit()) {
        let out = apply_cloner(&ClonerSpec::WoottersZurek, &input).unwrap();
        prop_assert!(l1_coherence(&out.two_qubit) < 1e-12);
        prop_assert!(l1_coherence(&out.clone_a) < 1e-12);
        prop_assert!(concurrence(&out.two_qubit).unwrap() < 1e-10);
    }

    #[test]
    fn hs_distance_is_a_symmetric_nonnegative_square(x in arb_density2(), y in arb_density2()) {
        let d = hs_distance(&x, &y).unwrap();
        prop_assert!(d >= 0.0);
        prop_assert!((d - hs_distance(&y, &x).unwrap()).abs() < 1e-12);
        prop_assert!(hs_distance(&x, &x).unwrap() < 1e-15);
    }

    #[test]
    fn formatted_values_reparse_to_twelve_digits(
        x in prop_oneof![-1e14f64..1e14, -1e-6f64..1e-6]
    ) {
        let parsed: f64 = fmt_g12(x).parse().unwrap();
        let tolerance = 5e-12 * x.abs().max(f64::MIN_POSITIVE);
        prop_assert!((parsed - x).abs() <= tolerance);
    }
}
