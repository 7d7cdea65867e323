use fuzzygeom_core::fuzzy::{build_fuzzy_sphere, build_fuzzy_torus, shift_matrix};
use fuzzygeom_core::matcore::{
    apply_function, commutator, eigenvalues_general, hermitian_eig, operator_norm, superoperator,
    weighted_trace_pairing, CMatrix,
};
use fuzzygeom_core::report::{matrix_from_json, matrix_to_json};
use fuzzygeom_core::{discgeo, Error};
use num_complex::Complex;
use proptest::prelude::*;

type C = Complex<f64>;

fn c(re: f64, im: f64) -> C {
    Complex::new(re, im)
}

fn mat(rows: &[&[C]]) -> CMatrix<f64> {
    let n = rows.len();
    CMatrix::from_row_major(n, rows.iter().flat_map(|r| r.iter().copied()).collect()).unwrap()
}

fn random_hermitian(seed: u64, n: usize) -> CMatrix<f64> {
    // small LCG keeps the oracle independent of the library RNG
    let mut state = seed
        .wrapping_mul(6364136223846793005)
        .wrapping_add(1442695040888963407);
    let mut next = || {
        state = state
            .wrapping_mul(6364136223846793005)
            .wrapping_add(1442695040888963407);
        ((state >> 11) as f64 / (1u64 << 53) as f64) * 2.0 - 1.0
    };
    let a = CMatrix::from_fn(n, |_, _| c(next(), next()));
    (&a + &a.adjoint()).scale(0.5)
}

#[test]
fn commutator_hand_example() {
    let a = CMatrix::from_diag(&[1.0, -1.0]);
    let b = mat(&[&[c(0., 0.), c(1., 0.)], &[c(1., 0.), c(0., 0.)]]);
    let got = commutator(&a, &b).unwrap();
    let want = mat(&[&[c(0., 0.), c(2., 0.)], &[c(-2., 0.), c(0., 0.)]]);
    assert_eq!(got, want);
}

#[test]
fn commutator_with_identity_vanishes() {
    let b = random_hermitian(3, 5);
    let got = commutator(&CMatrix::identity(5), &b).unwrap();
    assert_eq!(got.max_abs(), 0.0);
}

#[test]
fn commutator_dimension_mismatch() {
    let r = commutator(&CMatrix::<f64>::identity(2), &CMatrix::identity(3));
    assert!(matches!(r, Err(Error::DimensionMismatch { .. })));
}

#[test]
fn pauli_coordinates_close_su2() {
    let s = build_fuzzy_sphere::<f64>(2).unwrap();
    let x = s.coords();
    let hbar = 2.0 / 3f64.sqrt();
    assert!((s.hbar() - hbar).abs() < 1e-15);
    let lhs = commutator(&x[0], &x[1]).unwrap();
    let rhs = x[2].scale_c(c(0.0, hbar));
    assert!((&lhs - &rhs).max_abs() < 1e-15);
    // X^i = σ^i/√3
    let r3 = 1.0 / 3f64.sqrt();
    assert!((x[2].get(0, 0).re - r3).abs() < 1e-15 && (x[2].get(1, 1).re + r3).abs() < 1e-15);
    assert!((x[0].get(0, 1).re - r3).abs() < 1e-15);
}

#[test]
fn commutator_is_exactly_antisymmetric() {
    let a = random_hermitian(1, 7);
    let b = random_hermitian(2, 7);
    let ab = commutator(&a, &b).unwrap();
    let ba = commutator(&b, &a).unwrap();
    assert_eq!(ab, -&ba);
    // anti-Hermitian for Hermitian inputs
    assert!((&ab.adjoint() + &ab).max_abs() <= 1e-14 * 7.0);
}

#[test]
fn operator_norm_examples() {
    assert_eq!(operator_norm(&CMatrix::<f64>::zeros(3)).unwrap(), 0.0);
    assert_eq!(
        operator_norm(&CMatrix::from_diag(&[3.0, -5.0])).unwrap(),
        5.0
    );
    // non-normal 2x2 [[0,1],[0,0]] has norm 1
    let j = mat(&[&[c(0., 0.), c(1., 0.)], &[c(0., 0.), c(0., 0.)]]);
    assert!((operator_norm(&j).unwrap() - 1.0).abs() < 1e-14);
    // [[1,2],[3,4]]: sqrt of the top eigenvalue of A^T A = (15 + sqrt(221))
    let a = mat(&[&[c(1., 0.), c(2., 0.)], &[c(3., 0.), c(4., 0.)]]);
    let want = (15.0 + 221f64.sqrt()).sqrt();
    assert!((operator_norm(&a).unwrap() - want).abs() < 1e-13);
}

#[test]
fn operator_norm_of_deformed_commutator() {
    for n in [8usize, 16, 32] {
        let t = build_fuzzy_torus::<f64>(n).unwrap();
        let hbar = t.hbar();
        let s = 0.5;
        let mut theta = CMatrix::zeros(n);
        theta.set(0, 0, c(hbar.powf(s), 0.0));
        let h = shift_matrix::<f64>(n);
        let a = commutator(&theta, &(&h + &h.adjoint()))
            .unwrap()
            .div_i_hbar(hbar);
        let want = 2f64.sqrt() * hbar.powf(s - 1.0);
        assert!((operator_norm(&a).unwrap() - want).abs() < 1e-12 * want);
    }
}

#[test]
fn hermitian_eig_small_cases() {
    let e = hermitian_eig(&CMatrix::<f64>::identity(3)).unwrap();
    assert_eq!(e.eigenvalues, vec![1.0, 1.0, 1.0]);
    let swap = mat(&[&[c(0., 0.), c(1., 0.)], &[c(1., 0.), c(0., 0.)]]);
    let e = hermitian_eig(&swap).unwrap();
    assert!((e.eigenvalues[0] + 1.0).abs() < 1e-15 && (e.eigenvalues[1] - 1.0).abs() < 1e-15);
    // complex 2x2 [[a, b], [b̄, d]]: closed form
    let (a, d, b) = (0.3, -1.2, c(0.4, -0.9));
    let m = mat(&[&[c(a, 0.), b], &[b.conj(), c(d, 0.)]]);
    let e = hermitian_eig(&m).unwrap();
    let mid = 0.5 * (a + d);
    let rad = (0.25 * (a - d) * (a - d) + b.norm_sqr()).sqrt();
    assert!((e.eigenvalues[0] - (mid - rad)).abs() < 1e-14);
    assert!((e.eigenvalues[1] - (mid + rad)).abs() < 1e-14);
}

#[test]
fn hermitian_eig_rejects_non_hermitian() {
    let m = mat(&[&[c(0., 0.), c(1., 0.)], &[c(0., 0.), c(0., 0.)]]);
    assert!(matches!(hermitian_eig(&m), Err(Error::NotHermitian { .. })));
}

fn check_decomposition(a: &CMatrix<f64>) {
    let n = a.dim() as f64;
    let e = hermitian_eig(a).unwrap();
    assert!(e.eigenvalues.windows(2).all(|w| w[0] <= w[1]));
    let v = &e.eigenvectors;
    let vv = v.adjoint().matmul(v);
    assert!((&vv - &CMatrix::identity(a.dim())).max_abs() <= 1e-12 * n);
    let norm = operator_norm(a).unwrap().max(1e-300);
    let resid = (&e.reconstruct() - a).frobenius_norm();
    assert!(resid <= 1e-10 * n * norm, "residual {resid}");
}

#[test]
fn hermitian_eig_reconstructs_random_matrices() {
    for (seed, n) in [(11u64, 1usize), (12, 4), (13, 17), (14, 40)] {
        check_decomposition(&random_hermitian(seed, n));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]
    #[test]
    fn prop_hermitian_eig_reconstruction(seed in 0u64..10_000, n in 1usize..12) {
        check_decomposition(&random_hermitian(seed, n));
    }

    #[test]
    fn prop_trace_equals_eigenvalue_sum(seed in 0u64..10_000, n in 1usize..10) {
        let a = random_hermitian(seed, n);
        let e = hermitian_eig(&a).unwrap();
        let s: f64 = e.eigenvalues.iter().sum();
        prop_assert!((s - a.trace().re).abs() < 1e-12 * n as f64);
    }

    #[test]
    fn prop_general_eigenvalues_match_hermitian(seed in 0u64..10_000, n in 1usize..10) {
        let a = random_hermitian(seed, n);
        let h = hermitian_eig(&a).unwrap().eigenvalues;
        let g = eigenvalues_general(&a).unwrap();
        for (x, z) in h.iter().zip(&g) {
            prop_assert!((x - z.re).abs() < 1e-10 && z.im.abs() < 1e-10);
        }
    }
}

#[test]
fn general_eigenvalues_of_triangular_and_rotation() {
    let t = mat(&[
        &[c(1., 1.), c(5., 0.), c(2., -1.)],
        &[c(0., 0.), c(-2., 0.), c(7., 3.)],
        &[c(0., 0.), c(0., 0.), c(0.5, -0.5)],
    ]);
    let ev = eigenvalues_general(&t).unwrap();
    let want = [c(-2., 0.), c(0.5, -0.5), c(1., 1.)];
    for (g, w) in ev.iter().zip(want) {
        assert!((g - w).norm() < 1e-12, "{g} vs {w}");
    }
    // real rotation by 0.3 rad: e^{±0.3i}
    let (cs, sn) = (0.3f64.cos(), 0.3f64.sin());
    let r = mat(&[&[c(cs, 0.), c(-sn, 0.)], &[c(sn, 0.), c(cs, 0.)]]);
    let ev = eigenvalues_general(&r).unwrap();
    assert!((ev[0] - c(cs, -sn)).norm() < 1e-14 && (ev[1] - c(cs, sn)).norm() < 1e-14);
}

#[test]
fn general_eigenvalues_of_companion_matrix() {
    // roots 1, 2, 3, 4 of (x-1)(x-2)(x-3)(x-4) = x^4 - 10x^3 + 35x^2 - 50x + 24
    let coeffs = [24.0, -50.0, 35.0, -10.0];
    let m = CMatrix::from_fn(4, |i, j| {
        if i == 0 {
            c(-coeffs[3 - j], 0.0)
        } else if j + 1 == i {
            c(1.0, 0.0)
        } else {
            c(0.0, 0.0)
        }
    });
    let ev = eigenvalues_general(&m).unwrap();
    for (k, z) in ev.iter().enumerate() {
        assert!((z - c(k as f64 + 1.0, 0.0)).norm() < 1e-9, "{z}");
    }
}

#[test]
fn apply_function_examples() {
    let a = random_hermitian(5, 6);
    let same = apply_function(&a, |x| x).unwrap();
    assert!((&same - &a).max_abs() < 1e-13);
    let d = apply_function(&CMatrix::from_diag(&[4.0, 9.0]), f64::sqrt).unwrap();
    assert!((&d - &CMatrix::from_diag(&[2.0, 3.0])).max_abs() < 1e-15);
    // f(A) commutes with A
    let f = apply_function(&a, |x| x.exp()).unwrap();
    assert!(commutator(&a, &f).unwrap().max_abs() < 1e-12);
}

#[test]
fn apply_function_axial_example() {
    let z1 = 1.0 / 3f64.sqrt();
    let z = CMatrix::from_diag(&[z1, -z1]);
    let got = apply_function(&z, |t| -2.0 * t * t * t).unwrap();
    let v = 2.0 / (3.0 * 3f64.sqrt());
    assert!((&got - &CMatrix::from_diag(&[-v, v])).max_abs() < 1e-15);
}

#[test]
fn apply_function_reports_singular_eigenvalue() {
    let a = CMatrix::from_diag(&[2.0, 0.0]);
    match apply_function(&a, |x| 1.0 / x) {
        Err(Error::Singular { eigenvalue }) => assert_eq!(eigenvalue, 0.0),
        other => panic!("expected Singular, got {other:?}"),
    }
}

#[test]
fn superoperator_identity_and_vectorization() {
    let m = superoperator(|x: &CMatrix<f64>| x.clone(), 2).unwrap();
    assert_eq!(m, CMatrix::identity(4));
    // column-major: vec(X)[i + j*dim] = X[i, j]; left multiplication by A acts as I ⊗ A
    let a = random_hermitian(9, 3);
    let sup = superoperator(|x: &CMatrix<f64>| a.matmul(x), 3).unwrap();
    for i in 0..3 {
        for j in 0..3 {
            for k in 0..3 {
                // (I ⊗ A)[(i, j), (k, j)] = A[i, k]
                assert_eq!(sup.get(i + 3 * j, k + 3 * j), a.get(i, k));
            }
        }
    }
    let x = random_hermitian(10, 3);
    let lhs: Vec<C> = (0..9)
        .map(|r| (0..9).map(|q| sup.get(r, q) * x.vec_col_major()[q]).sum())
        .collect();
    let rhs = a.matmul(&x).vec_col_major();
    for (p, q) in lhs.iter().zip(&rhs) {
        assert!((p - q).norm() < 1e-14);
    }
}

#[test]
fn adjoint_action_spectra() {
    let h = CMatrix::from_diag(&[1.0, -1.0]);
    // X -> [X, H]: Hermitian superoperator, real spectrum {−2, 0, 0, 2}
    let m = superoperator(|x: &CMatrix<f64>| commutator(x, &h).unwrap(), 2).unwrap();
    let ev = eigenvalues_general(&m).unwrap();
    let re: Vec<f64> = ev.iter().map(|z| z.re).collect();
    for (g, w) in re.iter().zip([-2.0, 0.0, 0.0, 2.0]) {
        assert!((g - w).abs() < 1e-12);
    }
    assert!(ev.iter().all(|z| z.im.abs() <= 1e-10));
    // X -> i[X, H] has purely imaginary spectrum
    let m = superoperator(
        |x: &CMatrix<f64>| commutator(x, &h).unwrap().scale_c(c(0.0, 1.0)),
        2,
    )
    .unwrap();
    let ev = eigenvalues_general(&m).unwrap();
    assert!(ev.iter().all(|z| z.re.abs() <= 1e-10));
}

#[test]
fn adjoint_action_random_hermitian_is_real() {
    let h = random_hermitian(21, 5);
    let m = superoperator(|x: &CMatrix<f64>| commutator(x, &h).unwrap(), 5).unwrap();
    let norm = operator_norm(&h).unwrap();
    let ev = eigenvalues_general(&m).unwrap();
    assert!(ev.iter().all(|z| z.im.abs() <= 1e-10 * norm));
    let m = superoperator(
        |x: &CMatrix<f64>| commutator(x, &h).unwrap().scale_c(c(0.0, 1.0)),
        5,
    )
    .unwrap();
    let ev = eigenvalues_general(&m).unwrap();
    assert!(ev.iter().all(|z| z.re.abs() <= 1e-10 * norm));
}

#[test]
fn superoperator_of_sphere_laplacian_n2() {
    let s = build_fuzzy_sphere::<f64>(2).unwrap();
    let m = superoperator(
        |x: &CMatrix<f64>| discgeo::discrete_laplacian(&s, x).unwrap(),
        2,
    )
    .unwrap();
    let ev = hermitian_eig(&m).unwrap().eigenvalues;
    for (g, w) in ev.iter().zip([-2.0, -2.0, -2.0, 0.0]) {
        assert!((g - w).abs() < 1e-12, "{ev:?}");
    }
}

#[test]
fn superoperator_detects_nonlinearity() {
    let r = superoperator(|x: &CMatrix<f64>| x.matmul(x), 3);
    assert!(matches!(r, Err(Error::Nonlinear { .. })));
}

#[test]
fn weighted_trace_examples() {
    let d = CMatrix::from_diag(&[1.0, 2.0]);
    assert_eq!(
        weighted_trace_pairing(&CMatrix::identity(2), &d, &d).unwrap(),
        c(5.0, 0.0)
    );
    let g = CMatrix::from_diag(&[2.0, 3.0]);
    let a = mat(&[&[c(0., 0.), c(1., 0.)], &[c(0., 0.), c(0., 0.)]]);
    let b = mat(&[&[c(0., 0.), c(0., 0.)], &[c(1., 0.), c(0., 0.)]]);
    assert_eq!(weighted_trace_pairing(&g, &a, &b).unwrap(), c(2.0, 0.0));
}

#[test]
fn partial_integration_with_arbitrary_weight() {
    // D(X) = (1/iℏ) g⁻¹ [X, C]; Tr(g D(X) Y) = −Tr(g D(Y) X)
    let n = 6;
    let hbar = 0.37;
    let base = random_hermitian(31, n);
    let g = &base.matmul(&base) + &CMatrix::identity(n); // positive definite
    let ginv = apply_function(&g, |x| 1.0 / x).unwrap();
    let cm = CMatrix::from_fn(n, |i, j| {
        c((i * 3 + j) as f64 * 0.1, (i as f64 - j as f64) * 0.2)
    });
    let d = |x: &CMatrix<f64>| ginv.matmul(&commutator(x, &cm).unwrap()).div_i_hbar(hbar);
    let x = random_hermitian(32, n);
    let y = random_hermitian(33, n);
    let lhs = weighted_trace_pairing(&g, &d(&x), &y).unwrap();
    let rhs = weighted_trace_pairing(&g, &d(&y), &x).unwrap();
    assert!((lhs + rhs).norm() < 1e-12 * (1.0 + lhs.norm()));
}

#[test]
fn matrix_json_roundtrip() {
    let a = CMatrix::from_fn(3, |i, j| c(i as f64 + 0.1, -(j as f64) / 3.0));
    let text = matrix_to_json(&a).unwrap();
    assert!(
        text.starts_with("{\"dim\":3,\"entries\":[[1.0000000000000001e-1,"),
        "{text}"
    );
    let back: CMatrix<f64> = matrix_from_json(&text).unwrap();
    assert_eq!(back, a);
}

#[test]
fn single_precision_instantiation() {
    let a = CMatrix::<f32>::from_diag(&[3.0, -5.0]);
    assert_eq!(operator_norm(&a).unwrap(), 5.0f32);
    let s = build_fuzzy_sphere::<f32>(4).unwrap();
    let x = s.coords();
    let lhs = commutator(&x[0], &x[1]).unwrap();
    let rhs = x[2].scale_c(Complex::new(0.0f32, s.hbar()));
    assert!((&lhs - &rhs).max_abs() < 1e-5);
}
