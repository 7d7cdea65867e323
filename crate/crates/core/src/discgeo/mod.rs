//! Discrete geometry on a fuzzy surface: `P̂`, discrete Gauss curvature,
//! discrete Euler characteristic, derivations `D̂^i` and the Laplacian.

mod defects;
mod spectrum;

use std::fmt;
use std::str::FromStr;

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::fuzzy::FuzzySurface;
use crate::matcore::{commutator_unchecked, CMatrix};
use crate::scalar::Real;

pub use defects::{
    deformation_probe, probe_defects, regularization_defects, sphere_probes, torus_probes,
    DefectReport, MatrixFn, Probe, ProbeDefect, ProbeKind,
};
pub use spectrum::{laplacian_spectrum, laplacian_superoperator, SpectrumOptions, SpectrumReport};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Formulation {
    /// ε-tensor double commutator, surfaces in ℝ³.
    EpsilonR3,
    /// Flat-ambient double-commutator sums, any m.
    BracketsRm,
    /// `−½ Σ_A γ̂†⁻¹ tr̂(Ŝ_A²) γ̂⁻¹`, needs normal matrices.
    Normals,
    /// Closed form for axially symmetric surfaces.
    AxialClosedForm,
}

impl Formulation {
    pub const ALL: [Formulation; 4] = [
        Formulation::EpsilonR3,
        Formulation::BracketsRm,
        Formulation::Normals,
        Formulation::AxialClosedForm,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Formulation::EpsilonR3 => "epsilon-r3",
            Formulation::BracketsRm => "brackets-rm",
            Formulation::Normals => "normals",
            Formulation::AxialClosedForm => "axial-closed-form",
        }
    }

    /// Normals when the surface has them, the closed form for axial
    /// surfaces, double commutators otherwise.
    pub fn default_for<T: Real>(surface: &FuzzySurface<T>) -> Self {
        if surface.normals().is_some() {
            Formulation::Normals
        } else if surface.axial().is_some() {
            Formulation::AxialClosedForm
        } else {
            Formulation::BracketsRm
        }
    }
}

impl fmt::Display for Formulation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Formulation {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Formulation::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown curvature formulation '{s}'")))
    }
}

/// Ambient metric. Only the Euclidean case is evaluated.
#[derive(Clone, Debug, PartialEq)]
pub enum AmbientMetric {
    Euclidean,
    /// Placeholder for `Ĝ_ij`, `Γ̂`, `R̂` sequences of a curved ambient space.
    Curved {
        label: String,
    },
}

#[derive(Clone, Debug)]
pub struct CurvatureResult<T> {
    pub k_hat: CMatrix<T>,
    pub formulation: Formulation,
    /// `‖K̂ − K̂†‖ / max(1, ‖K̂‖)` (Frobenius)
    pub hermiticity_defect: T,
}

/// `P̂^i_j = (1/iℏ)[X^i, X^j]`
pub fn p_hat<T: Real>(surface: &FuzzySurface<T>) -> Vec<Vec<CMatrix<T>>> {
    let x = surface.coords();
    let m = x.len();
    let hbar = surface.hbar();
    let mut out = vec![vec![CMatrix::zeros(surface.n_mat()); m]; m];
    for i in 0..m {
        for j in (i + 1)..m {
            let c = commutator_unchecked(&x[i], &x[j]).div_i_hbar(hbar);
            out[j][i] = -&c;
            out[i][j] = c;
        }
    }
    out
}

pub fn discrete_curvature<T: Real>(
    surface: &FuzzySurface<T>,
    formulation: Formulation,
) -> Result<CurvatureResult<T>> {
    discrete_curvature_in(surface, formulation, &AmbientMetric::Euclidean)
}

pub fn discrete_curvature_in<T: Real>(
    surface: &FuzzySurface<T>,
    formulation: Formulation,
    ambient: &AmbientMetric,
) -> Result<CurvatureResult<T>> {
    if let AmbientMetric::Curved { .. } = ambient {
        return Err(Error::CurvedAmbientUnsupported);
    }
    let k_hat = match formulation {
        Formulation::EpsilonR3 => curvature_epsilon(surface)?,
        Formulation::BracketsRm => curvature_brackets(surface),
        Formulation::Normals => curvature_normals(surface)?,
        Formulation::AxialClosedForm => curvature_axial(surface)?,
    };
    if !k_hat.is_finite() {
        return Err(Error::NonFinite("discrete curvature".into()));
    }
    let hermiticity_defect = k_hat.hermiticity_defect();
    Ok(CurvatureResult {
        k_hat,
        formulation,
        hermiticity_defect,
    })
}

fn levi_civita3(i: usize, j: usize, k: usize) -> i32 {
    match (i, j, k) {
        (0, 1, 2) | (1, 2, 0) | (2, 0, 1) => 1,
        (0, 2, 1) | (2, 1, 0) | (1, 0, 2) => -1,
        _ => 0,
    }
}

/// `−(1/8ℏ⁴) ε_jkl ε_ipq γ̂†⁻² [X^i,[X^k,X^l]] [X^j,[X^p,X^q]] γ̂⁻²`
fn curvature_epsilon<T: Real>(s: &FuzzySurface<T>) -> Result<CMatrix<T>> {
    let x = s.coords();
    if x.len() != 3 {
        return Err(Error::WrongDimension {
            op: "epsilon-r3 curvature",
            expected: "m = 3".into(),
            found: format!("m = {}", x.len()),
        });
    }
    let n = s.n_mat();
    // V^j = ε_jkl [X^k, X^l]
    let mut v = vec![CMatrix::zeros(n); 3];
    for (j, vj) in v.iter_mut().enumerate() {
        for k in 0..3 {
            for l in 0..3 {
                let e = levi_civita3(j, k, l);
                if e != 0 {
                    *vj = &*vj + &commutator_unchecked(&x[k], &x[l]).scale(T::lit(e as f64));
                }
            }
        }
    }
    // [X^i, V^j]
    let xv: Vec<Vec<CMatrix<T>>> = (0..3)
        .map(|i| (0..3).map(|j| commutator_unchecked(&x[i], &v[j])).collect())
        .collect();
    let mut acc = CMatrix::zeros(n);
    for i in 0..3 {
        for j in 0..3 {
            acc = &acc + &xv[i][j].matmul(&xv[j][i]);
        }
    }
    let h = s.hbar();
    let k = acc.scale(-T::one() / (T::lit(8.0) * h * h * h * h));
    Ok(s.sandwich_gamma_inv2(&k))
}

/// `ℏ⁻⁴ γ̂†⁻² (½ Σ_j A_j A_j − ¼ Σ_jkl C_jkl²) γ̂⁻²` with
/// `A_j = Σ_k [[X^j,X^k],X^k]`, `C_jkl = [[X^j,X^k],X^l]`.
fn curvature_brackets<T: Real>(s: &FuzzySurface<T>) -> CMatrix<T> {
    let x = s.coords();
    let m = x.len();
    let n = s.n_mat();
    let mut first = CMatrix::zeros(n);
    let mut second = CMatrix::zeros(n);
    for j in 0..m {
        let mut a = CMatrix::zeros(n);
        for k in 0..m {
            if k == j {
                continue;
            }
            let xjk = commutator_unchecked(&x[j], &x[k]);
            for l in 0..m {
                let c = commutator_unchecked(&xjk, &x[l]);
                second = &second + &c.matmul(&c);
                if l == k {
                    a = &a + &c;
                }
            }
        }
        first = &first + &a.matmul(&a);
    }
    let h = s.hbar();
    let k =
        (&first.scale(T::lit(0.5)) - &second.scale(T::lit(0.25))).scale(T::one() / (h * h * h * h));
    s.sandwich_gamma_inv2(&k)
}

/// `−½ Σ_A γ̂†⁻¹ tr̂(Ŝ_A²) γ̂⁻¹`, `Ŝ_A^i_j = (1/iℏ)[X^i, N_A^j]`,
/// `tr̂ Ŝ² = Σ_ik (Ŝ^i_k)† Ŝ^k_i`.
fn curvature_normals<T: Real>(s: &FuzzySurface<T>) -> Result<CMatrix<T>> {
    let normals = s.normals().ok_or(Error::MissingNormals)?;
    let x = s.coords();
    let m = x.len();
    let n = s.n_mat();
    let h = s.hbar();
    let mut acc = CMatrix::zeros(n);
    for frame in normals {
        let shat: Vec<Vec<CMatrix<T>>> = (0..m)
            .map(|i| {
                (0..m)
                    .map(|j| commutator_unchecked(&x[i], &frame[j]).div_i_hbar(h))
                    .collect()
            })
            .collect();
        for i in 0..m {
            for k in 0..m {
                acc = &acc + &shat[i][k].adjoint().matmul(&shat[k][i]);
            }
        }
    }
    Ok(s.sandwich_gamma_inv1(&acc.scale(T::lit(-0.5))))
}

/// `γ̂⁻²((ff')²(Z) + (1/2ℏ)[W,ff'(Z)]W† + (1/2ℏ)W†[W,ff'(Z)])γ̂⁻²`
fn curvature_axial<T: Real>(s: &FuzzySurface<T>) -> Result<CMatrix<T>> {
    let data = s.axial().ok_or_else(|| Error::WrongDimension {
        op: "axial closed-form curvature",
        expected: "an axially symmetric surface".into(),
        found: s.label().to_string(),
    })?;
    let phi = &data.ff_prime_z;
    let w = &data.w;
    let wd = w.adjoint();
    let c = commutator_unchecked(w, phi);
    let inv2h = T::one() / (T::lit(2.0) * s.hbar());
    let inner = &(&phi.matmul(phi) + &c.matmul(&wd).scale(inv2h)) + &wd.matmul(&c).scale(inv2h);
    let g2 = s.gamma_inv().matmul(s.gamma_inv());
    Ok(g2.matmul(&inner).matmul(&g2))
}

/// Real and imaginary parts of `ℏ Tr(γ̂ K̂)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct EulerEstimate<T> {
    pub value: T,
    pub imaginary: T,
}

const EULER_IMAG_TOL: f64 = 1e-8;

/// `Re ℏ Tr(γ̂ K̂)`; errors when the imaginary part exceeds 1e-8 (relative to max(1, |value|)).
pub fn euler_characteristic_hat<T: Real>(
    surface: &FuzzySurface<T>,
    k_hat: &CMatrix<T>,
) -> Result<EulerEstimate<T>> {
    surface.gamma_hat().check_dim(k_hat)?;
    let g = surface.gamma_hat();
    let n = g.dim();
    let mut tr = Complex::new(T::zero(), T::zero());
    for i in 0..n {
        for k in 0..n {
            tr += g.get(i, k) * k_hat.get(k, i);
        }
    }
    let est = EulerEstimate {
        value: tr.re * surface.hbar(),
        imaginary: tr.im * surface.hbar(),
    };
    if est.imaginary.abs() > T::tol(EULER_IMAG_TOL) * est.value.abs().max(T::one()) {
        return Err(Error::CrossCheck {
            what: "imaginary part of chi_hat",
            defect: est.imaginary.to_f64_lossy(),
            limit: EULER_IMAG_TOL,
        });
    }
    Ok(est)
}

/// `D̂^i(X) = (1/iℏ) γ̂⁻¹ [X, X^i]`
pub fn discrete_derivation<T: Real>(
    surface: &FuzzySurface<T>,
    i: usize,
    x: &CMatrix<T>,
) -> Result<CMatrix<T>> {
    let coords = surface.coords();
    let xi = coords.get(i).ok_or_else(|| {
        Error::InvalidArgument(format!(
            "coordinate index {i} out of range (m = {})",
            coords.len()
        ))
    })?;
    xi.check_dim(x)?;
    Ok(surface.left_gamma_inv(&commutator_unchecked(x, xi).div_i_hbar(surface.hbar())))
}

/// `Δ̂(X) = Σ_j D̂^j D̂^j(X)`
pub fn discrete_laplacian<T: Real>(
    surface: &FuzzySurface<T>,
    x: &CMatrix<T>,
) -> Result<CMatrix<T>> {
    let mut acc = CMatrix::zeros(surface.n_mat());
    for j in 0..surface.ambient_dim() {
        let d = discrete_derivation(surface, j, x)?;
        acc = &acc + &discrete_derivation(surface, j, &d)?;
    }
    Ok(acc)
}
