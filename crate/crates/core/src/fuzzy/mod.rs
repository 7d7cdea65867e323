//! Explicit matrix regularizations: fuzzy sphere, fuzzy Clifford torus,
//! axially symmetric surfaces, and the deformed-torus negative controls.

mod axial;
mod deform;
mod sphere;
mod torus;

use crate::error::{Error, Result};
use crate::matcore::{apply_function, hermitian_eig, CMatrix};
use crate::scalar::Real;

pub use axial::{
    build_axial, casimir_residual, closure_defect, quantum_casimir_polynomial, scan_axial_hbar,
    solve_axial_hbar, AxialData, AxialProfile, SignChange,
};
pub use deform::{make_deformation_fixture, DeformationFixture};
pub use sphere::build_fuzzy_sphere;
pub use torus::{
    build_fuzzy_torus, clock_matrix, shift_matrix, torus_quantization_map, FourierMode,
};

/// Which constructor produced a surface.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SurfaceKind {
    Sphere,
    Torus,
    Axial,
    Custom,
}

/// Fixed-N snapshot of a matrix regularization.
#[derive(Clone, Debug)]
pub struct FuzzySurface<T> {
    label: String,
    kind: SurfaceKind,
    n_mat: usize,
    hbar: T,
    coords: Vec<CMatrix<T>>,
    normals: Option<Vec<Vec<CMatrix<T>>>>,
    gamma_hat: CMatrix<T>,
    gamma_inv: CMatrix<T>,
    gamma_is_identity: bool,
    axial: Option<AxialData<T>>,
}

impl<T: Real> FuzzySurface<T> {
    /// Validating constructor. `gamma_hat = None` means identity.
    pub fn new(
        label: impl Into<String>,
        hbar: T,
        coords: Vec<CMatrix<T>>,
        normals: Option<Vec<Vec<CMatrix<T>>>>,
        gamma_hat: Option<CMatrix<T>>,
    ) -> Result<Self> {
        Self::assemble(
            label.into(),
            SurfaceKind::Custom,
            hbar,
            coords,
            normals,
            gamma_hat,
            None,
        )
    }

    pub(crate) fn assemble(
        label: String,
        kind: SurfaceKind,
        hbar: T,
        coords: Vec<CMatrix<T>>,
        normals: Option<Vec<Vec<CMatrix<T>>>>,
        gamma_hat: Option<CMatrix<T>>,
        axial: Option<AxialData<T>>,
    ) -> Result<Self> {
        if !(hbar > T::zero()) || !hbar.is_finite() {
            return Err(Error::InvalidArgument(format!(
                "hbar must be positive, got {hbar}"
            )));
        }
        let n_mat = coords.first().map(|c| c.dim()).ok_or_else(|| {
            Error::InvalidArgument("a surface needs at least one coordinate matrix".into())
        })?;
        let herm_tol = T::tol(1e-10);
        for c in &coords {
            if c.dim() != n_mat {
                return Err(Error::DimensionMismatch {
                    expected: n_mat,
                    found: c.dim(),
                });
            }
            let d = c.hermiticity_defect();
            if d > herm_tol {
                return Err(Error::NotHermitian {
                    defect: d.to_f64_lossy(),
                });
            }
        }
        if let Some(ns) = &normals {
            for frame in ns {
                if frame.len() != coords.len() {
                    return Err(Error::DimensionMismatch {
                        expected: coords.len(),
                        found: frame.len(),
                    });
                }
                for c in frame {
                    if c.dim() != n_mat {
                        return Err(Error::DimensionMismatch {
                            expected: n_mat,
                            found: c.dim(),
                        });
                    }
                }
            }
        }
        let (gamma_hat, gamma_inv, gamma_is_identity) = match gamma_hat {
            None => (CMatrix::identity(n_mat), CMatrix::identity(n_mat), true),
            Some(g) => {
                if g.dim() != n_mat {
                    return Err(Error::DimensionMismatch {
                        expected: n_mat,
                        found: g.dim(),
                    });
                }
                let spec = hermitian_eig(&g)?;
                let lo = spec.eigenvalues[0];
                let hi = spec.eigenvalues[n_mat - 1]
                    .abs()
                    .max(T::min_positive_value());
                if !(lo > T::lit(1e-12) * hi) {
                    return Err(Error::Degenerate(format!(
                        "gamma_hat is not positive definite (min eigenvalue {lo})"
                    )));
                }
                let inv = apply_function(&g, |x| T::one() / x)?;
                (g, inv, false)
            }
        };
        Ok(Self {
            label,
            kind,
            n_mat,
            hbar,
            coords,
            normals,
            gamma_hat,
            gamma_inv,
            gamma_is_identity,
            axial,
        })
    }

    pub fn label(&self) -> &str {
        &self.label
    }
    pub fn kind(&self) -> &SurfaceKind {
        &self.kind
    }
    pub fn n_mat(&self) -> usize {
        self.n_mat
    }
    pub fn hbar(&self) -> T {
        self.hbar
    }
    /// Ambient dimension m.
    pub fn ambient_dim(&self) -> usize {
        self.coords.len()
    }
    pub fn coords(&self) -> &[CMatrix<T>] {
        &self.coords
    }
    pub fn normals(&self) -> Option<&[Vec<CMatrix<T>>]> {
        self.normals.as_deref()
    }
    pub fn gamma_hat(&self) -> &CMatrix<T> {
        &self.gamma_hat
    }
    pub fn gamma_inv(&self) -> &CMatrix<T> {
        &self.gamma_inv
    }
    pub fn gamma_is_identity(&self) -> bool {
        self.gamma_is_identity
    }
    pub fn axial(&self) -> Option<&AxialData<T>> {
        self.axial.as_ref()
    }

    /// `γ̂⁻¹ X γ̂⁻¹`-style sandwich helpers skip work when γ̂ = 1.
    pub(crate) fn left_gamma_inv(&self, x: &CMatrix<T>) -> CMatrix<T> {
        if self.gamma_is_identity {
            x.clone()
        } else {
            self.gamma_inv.matmul(x)
        }
    }

    pub(crate) fn sandwich_gamma_inv2(&self, x: &CMatrix<T>) -> CMatrix<T> {
        if self.gamma_is_identity {
            return x.clone();
        }
        let g2 = self.gamma_inv.matmul(&self.gamma_inv);
        g2.adjoint().matmul(x).matmul(&g2)
    }

    pub(crate) fn sandwich_gamma_inv1(&self, x: &CMatrix<T>) -> CMatrix<T> {
        if self.gamma_is_identity {
            return x.clone();
        }
        self.gamma_inv.adjoint().matmul(x).matmul(&self.gamma_inv)
    }

    /// `Σ_i (X^i)²`
    pub fn sum_of_squares(&self) -> CMatrix<T> {
        let mut acc = CMatrix::zeros(self.n_mat);
        for x in &self.coords {
            acc = &acc + &x.matmul(x);
        }
        acc
    }
}
