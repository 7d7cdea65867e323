use num_complex::Complex;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::CMatrix;
use crate::error::{Error, Result};
use crate::scalar::Real;

/// Column-major position of entry (i, j).
#[inline]
pub fn vec_index(dim: usize, i: usize, j: usize) -> usize {
    i + j * dim
}

const SPOT_CHECKS: usize = 3;
const SPOT_SEED: u64 = 0x5eed_f00d;

/// Matrix of a linear map on `dim × dim` matrices: `M vec(X) = vec(L(X))`.
///
/// Columns are built in parallel from the matrix units. Before assembly the
/// map is spot-checked for linearity on seeded random pairs.
pub fn superoperator<T, F>(l: F, dim: usize) -> Result<CMatrix<T>>
where
    T: Real,
    F: Fn(&CMatrix<T>) -> CMatrix<T> + Sync,
{
    if dim == 0 {
        return Err(Error::InvalidShape("dimension must be positive".into()));
    }
    check_linear(&l, dim)?;
    let big = dim * dim;
    let columns: Vec<Vec<Complex<T>>> = (0..big)
        .into_par_iter()
        .map(|col| {
            let (i, j) = (col % dim, col / dim);
            let mut e = CMatrix::zeros(dim);
            e.set(i, j, Complex::new(T::one(), T::zero()));
            let out = l(&e);
            assert_eq!(out.dim(), dim, "map changed the matrix dimension");
            out.vec_col_major()
        })
        .collect();
    let mut m = CMatrix::zeros(big);
    for (col, v) in columns.iter().enumerate() {
        for (row, &z) in v.iter().enumerate() {
            m.set(row, col, z);
        }
    }
    if !m.is_finite() {
        return Err(Error::NonFinite("superoperator".into()));
    }
    Ok(m)
}

fn random_matrix<T: Real>(rng: &mut ChaCha8Rng, dim: usize) -> CMatrix<T> {
    CMatrix::from_fn(dim, |_, _| {
        Complex::new(
            T::lit(rng.gen_range(-1.0..1.0)),
            T::lit(rng.gen_range(-1.0..1.0)),
        )
    })
}

fn check_linear<T, F>(l: &F, dim: usize) -> Result<()>
where
    T: Real,
    F: Fn(&CMatrix<T>) -> CMatrix<T>,
{
    let mut rng = ChaCha8Rng::seed_from_u64(SPOT_SEED);
    let tol = T::tol(1e-10);
    for _ in 0..SPOT_CHECKS {
        let x = random_matrix::<T>(&mut rng, dim);
        let y = random_matrix::<T>(&mut rng, dim);
        let a = Complex::new(
            T::lit(rng.gen_range(-2.0..2.0)),
            T::lit(rng.gen_range(-2.0..2.0)),
        );
        let b = Complex::new(
            T::lit(rng.gen_range(-2.0..2.0)),
            T::lit(rng.gen_range(-2.0..2.0)),
        );
        let lx = l(&x).scale_c(a);
        let ly = l(&y).scale_c(b);
        let combo = &x.scale_c(a) + &y.scale_c(b);
        let lc = l(&combo);
        let scale = lx.frobenius_norm() + ly.frobenius_norm() + T::one();
        let defect = (&(&lc - &lx) - &ly).frobenius_norm() / scale;
        if !(defect <= tol) {
            return Err(Error::Nonlinear {
                defect: defect.to_f64_lossy(),
            });
        }
    }
    Ok(())
}
