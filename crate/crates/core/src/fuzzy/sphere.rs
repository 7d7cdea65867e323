use num_complex::Complex;

use super::{FuzzySurface, SurfaceKind};
use crate::error::{Error, Result};
use crate::matcore::CMatrix;
use crate::scalar::Real;

/// Spin-(N−1)/2 generators `(S¹, S², S³)` with `[S¹,S²] = iS³` and cyclic.
/// Basis ordered by descending magnetic number.
pub fn spin_matrices<T: Real>(n: usize) -> [CMatrix<T>; 3] {
    let j = T::from_usize_lossy(n - 1) * T::lit(0.5);
    let m = |k: usize| j - T::from_usize_lossy(k);
    let zero = Complex::new(T::zero(), T::zero());
    // S+ raises m: (S+)_{k-1,k}
    let splus = CMatrix::from_fn(n, |r, c| {
        if c >= 1 && r == c - 1 {
            let mk = m(c);
            Complex::new(
                (j * (j + T::one()) - mk * (mk + T::one())).sqrt(),
                T::zero(),
            )
        } else {
            zero
        }
    });
    let sminus = splus.adjoint();
    let half = T::lit(0.5);
    let s1 = (&splus + &sminus).scale(half);
    let s2 = (&splus - &sminus).scale_c(Complex::new(T::zero(), -half));
    let s3 = CMatrix::from_diag(&(0..n).map(m).collect::<Vec<_>>());
    [s1, s2, s3]
}

/// Fuzzy sphere: `X^i = 2S^i/√(N²−1)`, `ℏ = 2/√(N²−1)`, normals equal to the coordinates.
pub fn build_fuzzy_sphere<T: Real>(n: usize) -> Result<FuzzySurface<T>> {
    if n < 2 {
        return Err(Error::InvalidArgument(format!(
            "fuzzy sphere needs N >= 2, got {n}"
        )));
    }
    let nn = T::from_usize_lossy(n);
    let hbar = T::lit(2.0) / (nn * nn - T::one()).sqrt();
    let coords: Vec<CMatrix<T>> = spin_matrices::<T>(n)
        .iter()
        .map(|s| s.scale(hbar))
        .collect();
    let normals = vec![coords.clone()];
    FuzzySurface::assemble(
        format!("sphere N={n}"),
        SurfaceKind::Sphere,
        hbar,
        coords,
        Some(normals),
        None,
        None,
    )
}
