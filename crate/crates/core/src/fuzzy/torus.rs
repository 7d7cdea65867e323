use num_complex::Complex;

use super::{FuzzySurface, SurfaceKind};
use crate::error::{Error, Result};
use crate::matcore::CMatrix;
use crate::scalar::Real;

/// One Fourier mode `coeff · e^{i(m₁φ₁ + m₂φ₂)}`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct FourierMode<T> {
    pub m1: i64,
    pub m2: i64,
    pub coeff: Complex<T>,
}

impl<T: Real> FourierMode<T> {
    pub fn new(m1: i64, m2: i64, coeff: Complex<T>) -> Self {
        Self { m1, m2, coeff }
    }
    pub fn unit(m1: i64, m2: i64) -> Self {
        Self::new(m1, m2, Complex::new(T::one(), T::zero()))
    }
}

/// `exp(2πi·num/den)` with the integer reduced first.
fn root_of_unity<T: Real>(num: i64, den: i64) -> Complex<T> {
    let r = num.rem_euclid(den);
    let angle = T::TAU() * T::lit(r as f64) / T::lit(den as f64);
    Complex::new(angle.cos(), angle.sin())
}

/// `g = diag(1, ω, …, ω^{N−1})`, `ω = e^{2πi/N}`.
pub fn clock_matrix<T: Real>(n: usize) -> CMatrix<T> {
    let diag: Vec<Complex<T>> = (0..n).map(|k| root_of_unity(k as i64, n as i64)).collect();
    CMatrix::from_complex_diag(&diag)
}

/// Cyclic shift with `h_{k,k+1} = 1` and `h_{N,1} = 1`.
pub fn shift_matrix<T: Real>(n: usize) -> CMatrix<T> {
    CMatrix::from_fn(n, |i, j| {
        if j == (i + 1) % n {
            Complex::new(T::one(), T::zero())
        } else {
            Complex::new(T::zero(), T::zero())
        }
    })
}

/// Fuzzy Clifford torus in ℝ⁴ with `ℏ = sin(π/N)` and normals `N_±`.
pub fn build_fuzzy_torus<T: Real>(n: usize) -> Result<FuzzySurface<T>> {
    if n < 2 {
        return Err(Error::InvalidArgument(format!(
            "fuzzy torus needs N >= 2, got {n}"
        )));
    }
    let g = clock_matrix::<T>(n);
    let h = shift_matrix::<T>(n);
    let c = T::one() / (T::lit(2.0) * T::SQRT_2());
    let i_c = Complex::new(T::zero(), c);
    let x1 = (&g.adjoint() + &g).scale(c);
    let x2 = (&g.adjoint() - &g).scale_c(i_c);
    let x3 = (&h.adjoint() + &h).scale(c);
    let x4 = (&h.adjoint() - &h).scale_c(i_c);
    let hbar = (T::PI() / T::from_usize_lossy(n)).sin();
    let plus = vec![x1.clone(), x2.clone(), x3.clone(), x4.clone()];
    let minus = vec![x1.clone(), x2.clone(), -&x3, -&x4];
    FuzzySurface::assemble(
        format!("torus N={n}"),
        SurfaceKind::Torus,
        hbar,
        vec![x1, x2, x3, x4],
        Some(vec![plus, minus]),
        None,
        None,
    )
}

/// `Σ coeff · ω^{m₁m₂/2} g^{m₁} h^{m₂}` with `ω^{1/2} = e^{iπ/N}`.
/// Modes with `|m| ≥ N` alias onto lower ones; a warning is logged.
pub fn torus_quantization_map<T: Real>(n: usize, modes: &[FourierMode<T>]) -> CMatrix<T> {
    let nn = n as i64;
    let mut out = CMatrix::zeros(n);
    for mode in modes {
        if mode.m1.abs() >= nn || mode.m2.abs() >= nn {
            log::warn!(
                "Fourier mode ({}, {}) aliases at N = {}",
                mode.m1,
                mode.m2,
                n
            );
        }
        // ω^{m₁m₂/2} = exp(2πi · m₁m₂ / (2N))
        let phase: Complex<T> = root_of_unity(mode.m1 * mode.m2, 2 * nn);
        let c = mode.coeff * phase;
        // (g^{m₁} h^{m₂})_{k, k+m₂} = ω^{m₁ k}
        for k in 0..n {
            let col = (k as i64 + mode.m2).rem_euclid(nn) as usize;
            let v = out.get(k, col) + c * root_of_unity::<T>(mode.m1 * k as i64, nn);
            out.set(k, col, v);
        }
    }
    out
}
