use crate::error::{Error, Result};
use crate::fuzzy::FuzzySurface;
use crate::matcore::{eigenvalues_general, hermitian_eig, superoperator, CMatrix};
use crate::scalar::Real;

use super::{discrete_curvature, discrete_laplacian, Formulation};

#[derive(Clone, Debug)]
pub struct SpectrumOptions {
    /// Largest admissible superoperator dimension N².
    pub cap: usize,
    /// Zero threshold relative to the spectral range.
    pub zero_rel_tol: f64,
    /// Curvature used for κ; `None` picks [`Formulation::default_for`].
    pub formulation: Option<Formulation>,
    /// Slack in `λ_min ≥ 2κ − slack`.
    pub bound_slack: f64,
}

impl Default for SpectrumOptions {
    fn default() -> Self {
        Self {
            cap: 4096,
            zero_rel_tol: 1e-8,
            formulation: None,
            bound_slack: 1e-8,
        }
    }
}

#[derive(Clone, Debug)]
pub struct SpectrumReport<T> {
    /// Raw superoperator eigenvalues (real parts), ascending. `Δ̂û = −λû`.
    pub eigenvalues: Vec<T>,
    /// `λ = −raw`, ascending.
    pub lambdas: Vec<T>,
    /// Largest |imaginary part| among the raw eigenvalues.
    pub imaginary_mass: T,
    pub kappa: T,
    pub lambda_min_nonzero: T,
    pub bound_satisfied: bool,
    pub zero_tolerance: T,
    pub kernel_dim: usize,
    pub formulation: Formulation,
}

/// Matrix of `Δ̂` acting on column-major `vec(X)`.
pub fn laplacian_superoperator<T: Real>(surface: &FuzzySurface<T>) -> Result<CMatrix<T>> {
    superoperator(
        |x: &CMatrix<T>| discrete_laplacian(surface, x).expect("dimensions fixed by construction"),
        surface.n_mat(),
    )
}

pub fn laplacian_spectrum<T: Real>(
    surface: &FuzzySurface<T>,
    opts: &SpectrumOptions,
) -> Result<SpectrumReport<T>> {
    let n = surface.n_mat();
    let size = n * n;
    if size > opts.cap {
        return Err(Error::CapExceeded {
            size,
            cap: opts.cap,
        });
    }
    let sup = laplacian_superoperator(surface)?;
    let (mut raw, imaginary_mass) = if sup.hermiticity_defect() <= T::tol(1e-10) {
        (hermitian_eig(&sup)?.eigenvalues, T::zero())
    } else {
        let vals = eigenvalues_general(&sup)?;
        let imag = vals.iter().map(|z| z.im.abs()).fold(T::zero(), T::max);
        (vals.into_iter().map(|z| z.re).collect::<Vec<_>>(), imag)
    };
    raw.sort_by(|a, b| a.partial_cmp(b).unwrap_or(std::cmp::Ordering::Equal));
    let mut lambdas: Vec<T> = raw.iter().map(|&r| -r).collect();
    lambdas.sort_by(|a, b| a.partial_cmp(b).unwrap_or(std::cmp::Ordering::Equal));

    let range =
        raw.last().copied().unwrap_or(T::zero()) - raw.first().copied().unwrap_or(T::zero());
    let zero_tolerance = (T::lit(opts.zero_rel_tol) * range).max(T::epsilon() * T::lit(64.0));
    let kernel_dim = lambdas.iter().filter(|l| l.abs() <= zero_tolerance).count();
    let lambda_min_nonzero = lambdas
        .iter()
        .copied()
        .find(|l| l.abs() > zero_tolerance)
        .unwrap_or(T::zero());

    let formulation = opts
        .formulation
        .unwrap_or_else(|| Formulation::default_for(surface));
    let k = discrete_curvature(surface, formulation)?;
    let kappa = hermitian_eig(&k.k_hat.hermitian_part())?.eigenvalues[0];
    let bound_satisfied = lambda_min_nonzero >= T::lit(2.0) * kappa - T::lit(opts.bound_slack);
    Ok(SpectrumReport {
        eigenvalues: raw,
        lambdas,
        imaginary_mass,
        kappa,
        lambda_min_nonzero,
        bound_satisfied,
        zero_tolerance,
        kernel_dim,
        formulation,
    })
}
