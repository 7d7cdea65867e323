//! Deformations `S(f) = T(f) + μ(f)·θ̂` of the fuzzy torus with
//! `θ̂ = diag(ℏ^s, 0, …, 0)`; they converge in norm but fail the
//! first or second order bracket limits.

use num_complex::Complex;

use super::{shift_matrix, FuzzySurface};
use crate::error::{Error, Result};
use crate::matcore::{commutator, operator_norm, CMatrix};
use crate::scalar::Real;

#[derive(Clone, Debug)]
pub struct DeformationFixture<T> {
    pub base: FuzzySurface<T>,
    pub s: T,
    pub theta_hat: CMatrix<T>,
}

pub fn make_deformation_fixture<T: Real>(
    base: &FuzzySurface<T>,
    s: T,
) -> Result<DeformationFixture<T>> {
    if !(s > T::zero() && s <= T::lit(2.0)) {
        return Err(Error::InvalidArgument(format!(
            "deformation exponent must lie in (0, 2], got {s}"
        )));
    }
    let n = base.n_mat();
    let mut theta_hat = CMatrix::zeros(n);
    theta_hat.set(0, 0, Complex::new(base.hbar().powf(s), T::zero()));
    Ok(DeformationFixture {
        base: base.clone(),
        s,
        theta_hat,
    })
}

impl<T: Real> DeformationFixture<T> {
    /// `T(2√2 cos φ₂) = h + h†`
    pub fn t_u(&self) -> CMatrix<T> {
        let h = shift_matrix::<T>(self.base.n_mat());
        &h + &h.adjoint()
    }

    /// `T(2√2 sin φ₂) = i(h† − h)`
    pub fn t_v(&self) -> CMatrix<T> {
        let h = shift_matrix::<T>(self.base.n_mat());
        (&h.adjoint() - &h).scale_c(Complex::new(T::zero(), T::one()))
    }

    /// `‖(1/iℏ)[θ̂, h + h†]‖`; equals `√2 ℏ^{s−1}`.
    pub fn first_order_defect(&self) -> Result<T> {
        let c = commutator(&self.theta_hat, &self.t_u())?;
        operator_norm(&c.div_i_hbar(self.base.hbar()))
    }

    /// `‖−ℏ⁻²[[S(u), S(v)], S(w)] − S({{u,v},w})‖` with `u = 2√2 cos φ₂`,
    /// `v = w = 2√2 sin φ₂` and μ the evaluation at φ = 0, so
    /// `S(u) = h + h† + 2√2 θ̂`, `S(v) = S(w) = i(h† − h)` and `{{u,v},w} = 0`.
    pub fn second_order_defect(&self) -> Result<T> {
        let two_sqrt2 = T::lit(2.0) * T::SQRT_2();
        let su = &self.t_u() + &self.theta_hat.scale(two_sqrt2);
        let sv = self.t_v();
        let inner = commutator(&su, &sv)?;
        let outer = commutator(&inner, &sv)?;
        let hb = self.base.hbar();
        operator_norm(&outer.scale(-T::one() / (hb * hb)))
    }
}
