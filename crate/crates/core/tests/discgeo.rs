use fuzzygeom_core::discgeo::{
    deformation_probe, discrete_curvature, discrete_curvature_in, discrete_derivation,
    discrete_laplacian, euler_characteristic_hat, laplacian_spectrum, p_hat,
    regularization_defects, sphere_probes, torus_probes, AmbientMetric, Formulation,
    SpectrumOptions,
};
use fuzzygeom_core::fuzzy::{
    build_axial, build_fuzzy_sphere, build_fuzzy_torus, AxialProfile, FuzzySurface,
};
use fuzzygeom_core::matcore::{commutator, operator_norm, weighted_trace_pairing, CMatrix};
use fuzzygeom_core::Error;
use num_complex::Complex;

type C = Complex<f64>;

fn sphere_hbar(n: usize) -> f64 {
    2.0 / ((n * n - 1) as f64).sqrt()
}

fn quartic(n: usize) -> FuzzySurface<f64> {
    build_axial(n, &AxialProfile::quartic(), sphere_hbar(n)).unwrap()
}

fn hermitian_probe(n: usize, seed: f64) -> CMatrix<f64> {
    let a = CMatrix::from_fn(n, |i, j| {
        C::new(
            (seed * (i + 2 * j + 1) as f64).sin(),
            (seed * (3 * i + j) as f64).cos(),
        )
    });
    (&a + &a.adjoint()).scale(0.5)
}

#[test]
fn p_hat_structure() {
    let s = build_fuzzy_sphere::<f64>(5).unwrap();
    let p = p_hat(&s);
    assert!((&p[0][1] - &s.coords()[2]).max_abs() < 1e-12);
    for i in 0..3 {
        assert_eq!(p[i][i].max_abs(), 0.0);
        for j in 0..3 {
            assert!((&p[i][j] + &p[j][i]).max_abs() == 0.0);
        }
    }
    let t = build_fuzzy_torus::<f64>(6).unwrap();
    assert_eq!(p_hat(&t)[0][1].max_abs(), 0.0);
}

#[test]
fn sphere_curvature_is_identity() {
    for n in 2..=32 {
        let s = build_fuzzy_sphere::<f64>(n).unwrap();
        for f in [
            Formulation::Normals,
            Formulation::BracketsRm,
            Formulation::EpsilonR3,
        ] {
            let k = discrete_curvature(&s, f).unwrap();
            assert!(
                (&k.k_hat - &CMatrix::identity(n)).max_abs() <= 1e-10,
                "N={n} {f}"
            );
            assert!(k.hermiticity_defect <= 1e-8);
        }
    }
}

#[test]
fn torus_curvature_vanishes() {
    for n in 2..=32 {
        let t = build_fuzzy_torus::<f64>(n).unwrap();
        let kn = discrete_curvature(&t, Formulation::Normals).unwrap().k_hat;
        let kb = discrete_curvature(&t, Formulation::BracketsRm)
            .unwrap()
            .k_hat;
        assert!(kn.max_abs() <= 1e-12, "N={n}");
        assert!((&kn - &kb).max_abs() <= 1e-8, "N={n}");
    }
}

#[test]
fn formulation_preconditions() {
    let t = build_fuzzy_torus::<f64>(4).unwrap();
    assert!(matches!(
        discrete_curvature(&t, Formulation::EpsilonR3),
        Err(Error::WrongDimension { .. })
    ));
    assert!(matches!(
        discrete_curvature(&t, Formulation::AxialClosedForm),
        Err(Error::WrongDimension { .. })
    ));
    let a = quartic(4);
    assert!(matches!(
        discrete_curvature(&a, Formulation::Normals),
        Err(Error::MissingNormals)
    ));
    let r = discrete_curvature_in(
        &t,
        Formulation::Normals,
        &AmbientMetric::Curved { label: "S3".into() },
    );
    assert!(matches!(r, Err(Error::CurvedAmbientUnsupported)));
    assert_eq!(
        "brackets-rm".parse::<Formulation>().unwrap(),
        Formulation::BracketsRm
    );
    assert!("nope".parse::<Formulation>().is_err());
}

#[test]
fn axial_epsilon_matches_closed_form() {
    for n in [2usize, 4, 8, 16, 32] {
        let a = quartic(n);
        let ke = discrete_curvature(&a, Formulation::EpsilonR3)
            .unwrap()
            .k_hat;
        let kc = discrete_curvature(&a, Formulation::AxialClosedForm)
            .unwrap()
            .k_hat;
        assert!((&ke - &kc).max_abs() <= 1e-10, "N={n}");
        // diagonal
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    assert!(kc.get(i, j).norm() <= 1e-12);
                }
            }
        }
    }
}

/// Scalar oracle: `K̂_kk = (φ_k² + (w_k²(φ_{k+1} − φ_k) + w_{k−1}²(φ_k − φ_{k−1}))/(2ℏ)) / (γ²_kk)²`.
fn quartic_k_diag(n: usize, hbar: f64) -> (Vec<f64>, Vec<f64>) {
    let z: Vec<f64> = (1..=n)
        .map(|k| hbar * (n as f64 + 1.0 - 2.0 * k as f64) / 2.0)
        .collect();
    let phi: Vec<f64> = z.iter().map(|&t| -2.0 * t.powi(3)).collect();
    let mut w2 = vec![0.0; n + 1];
    for k in 1..=n {
        w2[k] = w2[k - 1] - 2.0 * hbar * phi[k - 1];
    }
    let mut kd = Vec::with_capacity(n);
    let mut g = Vec::with_capacity(n);
    for k in 0..n {
        let up = if k + 1 < n {
            w2[k + 1] * (phi[k + 1] - phi[k])
        } else {
            0.0
        };
        let down = if k > 0 {
            w2[k] * (phi[k] - phi[k - 1])
        } else {
            0.0
        };
        let g2 = 0.5 * (w2[k + 1] + w2[k]) + phi[k] * phi[k];
        kd.push((phi[k] * phi[k] + (up + down) / (2.0 * hbar)) / (g2 * g2));
        g.push(g2.sqrt());
    }
    (kd, g)
}

#[test]
fn axial_curvature_matches_scalar_oracle() {
    for n in [2usize, 5, 16, 64] {
        let hb = sphere_hbar(n);
        let a = quartic(n);
        let k = discrete_curvature(&a, Formulation::AxialClosedForm)
            .unwrap()
            .k_hat;
        let (kd, g) = quartic_k_diag(n, hb);
        for i in 0..n {
            assert!(
                (k.get(i, i).re - kd[i]).abs() <= 1e-10 * kd[i].abs().max(1.0),
                "N={n} i={i}"
            );
        }
        let chi = euler_characteristic_hat(&a, &k).unwrap().value;
        let oracle: f64 = (0..n).map(|i| hb * g[i] * kd[i]).sum();
        assert!((chi - oracle).abs() <= 1e-8);
    }
}

#[test]
fn axial_curvature_leading_order() {
    // K = (6z² − 2z⁶)/(1 − z⁴ + 4z⁶)² + O(ℏ) at interior nodes
    let mut prev = f64::INFINITY;
    for n in [16usize, 32, 64, 128] {
        let a = quartic(n);
        let k = discrete_curvature(&a, Formulation::AxialClosedForm)
            .unwrap()
            .k_hat;
        let z = &a.axial().unwrap().z;
        let mut worst: f64 = 0.0;
        for i in 0..n {
            if z[i].abs() < 0.7 {
                let zz = z[i];
                let want = (6.0 * zz * zz - 2.0 * zz.powi(6))
                    / (1.0 - zz.powi(4) + 4.0 * zz.powi(6)).powi(2);
                worst = worst.max((k.get(i, i).re - want).abs());
            }
        }
        assert!(worst < prev, "N={n}: {worst}");
        prev = worst;
    }
    assert!(prev < 0.05);
}

#[test]
fn euler_characteristic_examples() {
    let mut prev = f64::INFINITY;
    for n in 2..=64 {
        let s = build_fuzzy_sphere::<f64>(n).unwrap();
        let k = discrete_curvature(&s, Formulation::Normals).unwrap();
        let chi = euler_characteristic_hat(&s, &k.k_hat).unwrap();
        let want = 2.0 * n as f64 / ((n * n - 1) as f64).sqrt();
        assert!((chi.value - want).abs() <= 1e-10);
        assert!(chi.value - 2.0 < prev);
        prev = chi.value - 2.0;
    }
    let s = build_fuzzy_sphere::<f64>(2).unwrap();
    let k = discrete_curvature(&s, Formulation::Normals).unwrap();
    assert!(
        (euler_characteristic_hat(&s, &k.k_hat).unwrap().value - 4.0 / 3f64.sqrt()).abs() < 1e-12
    );
    for n in [3usize, 8, 20] {
        let t = build_fuzzy_torus::<f64>(n).unwrap();
        let k = discrete_curvature(&t, Formulation::Normals).unwrap();
        assert!(euler_characteristic_hat(&t, &k.k_hat).unwrap().value.abs() <= 1e-12);
    }
    let a = quartic(256);
    let k = discrete_curvature(&a, Formulation::AxialClosedForm).unwrap();
    let chi = euler_characteristic_hat(&a, &k.k_hat).unwrap();
    assert!((chi.value - 2.0).abs() < 0.05);
    assert!(chi.imaginary.abs() <= 1e-10 * chi.value.abs());
}

#[test]
fn euler_rejects_complex_traces() {
    let s = build_fuzzy_sphere::<f64>(3).unwrap();
    let k = CMatrix::identity(3).scale_c(C::new(1.0, 0.5));
    assert!(matches!(
        euler_characteristic_hat(&s, &k),
        Err(Error::CrossCheck { .. })
    ));
}

#[test]
fn derivation_examples() {
    let s = build_fuzzy_sphere::<f64>(6).unwrap();
    let d = discrete_derivation(&s, 0, &CMatrix::identity(6)).unwrap();
    assert_eq!(d.max_abs(), 0.0);
    let d = discrete_derivation(&s, 1, &s.coords()[0]).unwrap();
    // [X¹, X²] = iℏX³
    assert!((&d - &s.coords()[2]).max_abs() < 1e-12);
    assert!(matches!(
        discrete_derivation(&s, 3, &CMatrix::identity(6)),
        Err(Error::InvalidArgument(_))
    ));
}

#[test]
fn derivation_partial_integration() {
    for surf in [build_fuzzy_sphere::<f64>(7).unwrap(), quartic(7)] {
        let x = hermitian_probe(7, 0.37);
        let y = hermitian_probe(7, 1.91);
        for i in 0..3 {
            let a = weighted_trace_pairing(
                surf.gamma_hat(),
                &discrete_derivation(&surf, i, &x).unwrap(),
                &y,
            )
            .unwrap();
            let b = weighted_trace_pairing(
                surf.gamma_hat(),
                &discrete_derivation(&surf, i, &y).unwrap(),
                &x,
            )
            .unwrap();
            assert!(
                (a + b).norm() <= 1e-12 * (1.0 + a.norm()),
                "{}",
                surf.label()
            );
        }
    }
}

#[test]
fn derivation_is_linear() {
    let a = quartic(6);
    let x = hermitian_probe(6, 0.2);
    let y = hermitian_probe(6, 0.9);
    let combo = &x.scale(2.5) + &y.scale_c(C::new(0.0, -1.5));
    for i in 0..3 {
        let lhs = discrete_derivation(&a, i, &combo).unwrap();
        let rhs = &discrete_derivation(&a, i, &x).unwrap().scale(2.5)
            + &discrete_derivation(&a, i, &y)
                .unwrap()
                .scale_c(C::new(0.0, -1.5));
        assert!((&lhs - &rhs).max_abs() < 1e-12);
    }
}

#[test]
fn laplacian_examples() {
    let s = build_fuzzy_sphere::<f64>(5).unwrap();
    assert!(
        discrete_laplacian(&s, &CMatrix::identity(5))
            .unwrap()
            .max_abs()
            < 1e-13
    );
    let z = &s.coords()[2];
    let l = discrete_laplacian(&s, z).unwrap();
    assert!((&l + &z.scale(2.0)).max_abs() < 1e-12);
    // spin-2 component: trace-free part of (X³)²
    let z2 = z.matmul(z);
    let tf = &z2 - &CMatrix::identity(5).scale(z2.trace().re / 5.0);
    let l = discrete_laplacian(&s, &tf).unwrap();
    assert!((&l + &tf.scale(6.0)).max_abs() < 1e-12);
}

#[test]
fn sphere_n3_spectrum() {
    let s = build_fuzzy_sphere::<f64>(3).unwrap();
    let r = laplacian_spectrum(&s, &SpectrumOptions::default()).unwrap();
    let want = [0.0, 2.0, 2.0, 2.0, 6.0, 6.0, 6.0, 6.0, 6.0];
    for (g, w) in r.lambdas.iter().zip(want) {
        assert!((g - w).abs() <= 1e-9, "{:?}", r.lambdas);
    }
    assert_eq!(r.kernel_dim, 1);
    // raw eigenvalues carry the opposite sign
    assert!((r.eigenvalues[0] + 6.0).abs() < 1e-9);
}

#[test]
fn spectrum_bound_on_sphere_and_torus() {
    for n in 2..=8 {
        let s = build_fuzzy_sphere::<f64>(n).unwrap();
        let r = laplacian_spectrum(&s, &SpectrumOptions::default()).unwrap();
        assert!((r.lambda_min_nonzero - 2.0).abs() < 1e-9 && (r.kappa - 1.0).abs() < 1e-10);
        assert!(r.bound_satisfied);
    }
    let t = build_fuzzy_torus::<f64>(8).unwrap();
    let r = laplacian_spectrum(&t, &SpectrumOptions::default()).unwrap();
    assert!(r.kappa.abs() < 1e-12);
    assert!(r.lambdas.iter().all(|&l| l >= -1e-8));
    assert!(r.bound_satisfied);
}

#[test]
fn spectrum_cap() {
    let s = build_fuzzy_sphere::<f64>(9).unwrap();
    let opts = SpectrumOptions {
        cap: 64,
        ..SpectrumOptions::default()
    };
    assert!(matches!(
        laplacian_spectrum(&s, &opts),
        Err(Error::CapExceeded { size: 81, cap: 64 })
    ));
}

#[test]
fn axial_spectrum_reports_imaginary_mass() {
    let a = quartic(6);
    let r = laplacian_spectrum(&a, &SpectrumOptions::default()).unwrap();
    assert_eq!(r.lambdas.len(), 36);
    assert!(r.imaginary_mass.is_finite());
    assert_eq!(r.formulation, Formulation::AxialClosedForm);
    assert_eq!(
        r.bound_satisfied,
        r.lambda_min_nonzero >= 2.0 * r.kappa - 1e-8
    );
}

#[test]
fn torus_defects() {
    let ns = [8usize, 16, 32, 64];
    let probes = torus_probes::<f64>();
    let reps = regularization_defects(|n| build_fuzzy_torus::<f64>(n), &ns, &probes).unwrap();
    let mut prev_product = f64::INFINITY;
    let mut prev_trace = f64::INFINITY;
    for r in &reps {
        assert!(
            r.commutator_defect <= 1e-12,
            "N={} {}",
            r.n_mat,
            r.commutator_defect
        );
        let cos_sq = r
            .entries
            .iter()
            .find(|e| e.label == "product cos1*cos1")
            .unwrap()
            .value;
        assert!(cos_sq <= 1e-12);
        assert!(r.product_defect < prev_product);
        assert!(r.trace_defect < prev_trace);
        prev_product = r.product_defect;
        prev_trace = r.trace_defect;
        assert!(r.product_defect >= 0.0 && r.trace_defect >= 0.0);
    }
    assert!(prev_product < 0.1);
}

#[test]
fn sphere_defects() {
    let reps = regularization_defects(
        |n| build_fuzzy_sphere::<f64>(n),
        &[4, 8, 16],
        &sphere_probes::<f64>(),
    )
    .unwrap();
    let mut prev = f64::INFINITY;
    for r in &reps {
        assert!(r.commutator_defect <= 1e-12);
        assert!(r.trace_defect < prev);
        prev = r.trace_defect;
    }
}

#[test]
fn deformation_defect_does_not_decay() {
    let reps = regularization_defects(
        |n| build_fuzzy_torus::<f64>(n),
        &[16, 32, 64],
        &[deformation_probe(0.5)],
    )
    .unwrap();
    let mut prev = 0.0;
    for r in &reps {
        let hb = (std::f64::consts::PI / r.n_mat as f64).sin();
        let want = 2f64.sqrt() * hb.powf(-0.5);
        assert!(
            (r.commutator_defect - want).abs() <= 1e-10 * want,
            "{} vs {want}",
            r.commutator_defect
        );
        assert!(r.commutator_defect > prev);
        prev = r.commutator_defect;
    }
}

#[test]
fn defect_preconditions() {
    let probes = torus_probes::<f64>();
    assert!(regularization_defects(|n| build_fuzzy_torus::<f64>(n), &[8], &probes).is_err());
    assert!(regularization_defects(|n| build_fuzzy_torus::<f64>(n), &[8, 16], &[]).is_err());
}

#[test]
fn hermitized_curvature_norm_sanity() {
    let a = quartic(8);
    let k = discrete_curvature(&a, Formulation::EpsilonR3).unwrap();
    assert!(k.hermiticity_defect <= 1e-8);
    assert!(operator_norm(&k.k_hat).unwrap() > 0.0);
    let c = commutator(&k.k_hat, &a.coords()[2]).unwrap();
    assert!(c.max_abs() < 1e-10, "axial K̂ commutes with Z");
}
