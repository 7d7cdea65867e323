//! Dense complex linear algebra.
//!
//! `CMatrix` is square, row-major and immutable in spirit: operations return
//! new matrices. Vectorization for superoperators is column-major,
//! `vec(X)[i + j*dim] = X[i, j]`.

mod eig;
mod general;
mod superop;

use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::scalar::Real;

pub use eig::{apply_function, hermitian_eig, operator_norm, HermitianSpectrum};
pub use general::eigenvalues_general;
pub use superop::{superoperator, vec_index};

/// Below this dimension products run on one thread.
const PAR_MATMUL_DIM: usize = 48;

#[derive(Clone, Debug, PartialEq)]
pub struct CMatrix<T> {
    dim: usize,
    data: Vec<Complex<T>>,
}

impl<T: Real> CMatrix<T> {
    pub fn zeros(dim: usize) -> Self {
        Self {
            dim,
            data: vec![Complex::new(T::zero(), T::zero()); dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m.data[i * dim + i] = Complex::new(T::one(), T::zero());
        }
        m
    }

    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> Complex<T>) -> Self {
        let mut data = Vec::with_capacity(dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                data.push(f(i, j));
            }
        }
        Self { dim, data }
    }

    /// Real diagonal matrix.
    pub fn from_diag(diag: &[T]) -> Self {
        let mut m = Self::zeros(diag.len());
        for (i, &d) in diag.iter().enumerate() {
            m.data[i * diag.len() + i] = Complex::new(d, T::zero());
        }
        m
    }

    pub fn from_complex_diag(diag: &[Complex<T>]) -> Self {
        let n = diag.len();
        let mut m = Self::zeros(n);
        for (i, &d) in diag.iter().enumerate() {
            m.data[i * n + i] = d;
        }
        m
    }

    /// Row-major entries; rejects wrong length and non-finite values.
    pub fn from_row_major(dim: usize, data: Vec<Complex<T>>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::InvalidShape("dimension must be positive".into()));
        }
        if data.len() != dim * dim {
            return Err(Error::DimensionMismatch {
                expected: dim * dim,
                found: data.len(),
            });
        }
        if data.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
            return Err(Error::NonFinite("matrix entries".into()));
        }
        Ok(Self { dim, data })
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.dim
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> Complex<T> {
        self.data[i * self.dim + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: Complex<T>) {
        self.data[i * self.dim + j] = v;
    }

    pub fn entries(&self) -> &[Complex<T>] {
        &self.data
    }

    pub fn is_finite(&self) -> bool {
        self.data
            .iter()
            .all(|z| z.re.is_finite() && z.im.is_finite())
    }

    pub fn adjoint(&self) -> Self {
        Self::from_fn(self.dim, |i, j| self.get(j, i).conj())
    }

    pub fn scale(&self, s: T) -> Self {
        Self {
            dim: self.dim,
            data: self.data.iter().map(|z| z * s).collect(),
        }
    }

    pub fn scale_c(&self, s: Complex<T>) -> Self {
        Self {
            dim: self.dim,
            data: self.data.iter().map(|z| z * s).collect(),
        }
    }

    /// Multiply by `1/(i*hbar)`.
    pub fn div_i_hbar(&self, hbar: T) -> Self {
        self.scale_c(Complex::new(T::zero(), -T::one() / hbar))
    }

    pub fn trace(&self) -> Complex<T> {
        (0..self.dim)
            .map(|i| self.get(i, i))
            .fold(Complex::new(T::zero(), T::zero()), |a, b| a + b)
    }

    pub fn diag_real(&self) -> Vec<T> {
        (0..self.dim).map(|i| self.get(i, i).re).collect()
    }

    pub fn frobenius_norm(&self) -> T {
        self.data.iter().map(|z| z.norm_sqr()).sum::<T>().sqrt()
    }

    pub fn max_abs(&self) -> T {
        self.data.iter().map(|z| z.norm()).fold(T::zero(), T::max)
    }

    /// `‖A − A†‖_F / max(1, ‖A‖_F)`.
    pub fn hermiticity_defect(&self) -> T {
        let mut acc = T::zero();
        for i in 0..self.dim {
            for j in 0..self.dim {
                acc += (self.get(i, j) - self.get(j, i).conj()).norm_sqr();
            }
        }
        acc.sqrt() / self.frobenius_norm().max(T::one())
    }

    /// `(A + A†)/2`
    pub fn hermitian_part(&self) -> Self {
        let half = T::lit(0.5);
        Self::from_fn(self.dim, |i, j| {
            (self.get(i, j) + self.get(j, i).conj()) * half
        })
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_dim(other)?;
        Ok(self + other)
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_dim(other)?;
        Ok(self.matmul(other))
    }

    pub fn check_dim(&self, other: &Self) -> Result<()> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: other.dim,
            });
        }
        Ok(())
    }

    /// Dense product, i-k-j loop order, rows in parallel for larger sizes.
    pub fn matmul(&self, other: &Self) -> Self {
        let n = self.dim;
        assert_eq!(n, other.dim, "matmul dimension mismatch");
        let zero = Complex::new(T::zero(), T::zero());
        let mut out = vec![zero; n * n];
        let row_kernel = |(i, row): (usize, &mut [Complex<T>])| {
            for k in 0..n {
                let a = self.data[i * n + k];
                if a.re == T::zero() && a.im == T::zero() {
                    continue;
                }
                let brow = &other.data[k * n..(k + 1) * n];
                for (o, b) in row.iter_mut().zip(brow) {
                    *o += a * b;
                }
            }
        };
        if n >= PAR_MATMUL_DIM {
            out.par_chunks_mut(n).enumerate().for_each(row_kernel);
        } else {
            out.chunks_mut(n).enumerate().for_each(row_kernel);
        }
        Self { dim: n, data: out }
    }

    pub fn zip_with(&self, other: &Self, f: impl Fn(Complex<T>, Complex<T>) -> Complex<T>) -> Self {
        assert_eq!(self.dim, other.dim, "dimension mismatch");
        Self {
            dim: self.dim,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(&a, &b)| f(a, b))
                .collect(),
        }
    }

    /// Column-major vectorization.
    pub fn vec_col_major(&self) -> Vec<Complex<T>> {
        let n = self.dim;
        let mut v = Vec::with_capacity(n * n);
        for j in 0..n {
            for i in 0..n {
                v.push(self.get(i, j));
            }
        }
        v
    }

    pub fn from_vec_col_major(dim: usize, v: &[Complex<T>]) -> Self {
        Self::from_fn(dim, |i, j| v[vec_index(dim, i, j)])
    }

    /// Matrix power for non-negative exponents, by squaring.
    pub fn powi(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::identity(self.dim);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.matmul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.matmul(&base);
            }
        }
        acc
    }

    pub fn cast<U: Real>(&self) -> CMatrix<U> {
        CMatrix {
            dim: self.dim,
            data: self
                .data
                .iter()
                .map(|z| Complex::new(U::lit(z.re.to_f64_lossy()), U::lit(z.im.to_f64_lossy())))
                .collect(),
        }
    }
}

impl<'a, T: Real> Add for &'a CMatrix<T> {
    type Output = CMatrix<T>;
    fn add(self, rhs: Self) -> CMatrix<T> {
        self.zip_with(rhs, |a, b| a + b)
    }
}

impl<'a, T: Real> Sub for &'a CMatrix<T> {
    type Output = CMatrix<T>;
    fn sub(self, rhs: Self) -> CMatrix<T> {
        self.zip_with(rhs, |a, b| a - b)
    }
}

impl<'a, T: Real> Mul for &'a CMatrix<T> {
    type Output = CMatrix<T>;
    fn mul(self, rhs: Self) -> CMatrix<T> {
        self.matmul(rhs)
    }
}

impl<'a, T: Real> Neg for &'a CMatrix<T> {
    type Output = CMatrix<T>;
    fn neg(self) -> CMatrix<T> {
        CMatrix {
            dim: self.dim,
            data: self.data.iter().map(|z| -z).collect(),
        }
    }
}

/// `ab − ba`
pub fn commutator<T: Real>(a: &CMatrix<T>, b: &CMatrix<T>) -> Result<CMatrix<T>> {
    a.check_dim(b)?;
    Ok(commutator_unchecked(a, b))
}

pub(crate) fn commutator_unchecked<T: Real>(a: &CMatrix<T>, b: &CMatrix<T>) -> CMatrix<T> {
    let ab = a.matmul(b);
    let ba = b.matmul(a);
    &ab - &ba
}

/// `Tr(g a b)`
pub fn weighted_trace_pairing<T: Real>(
    g: &CMatrix<T>,
    a: &CMatrix<T>,
    b: &CMatrix<T>,
) -> Result<Complex<T>> {
    g.check_dim(a)?;
    g.check_dim(b)?;
    let ga = g.matmul(a);
    let n = g.dim();
    let mut acc = Complex::new(T::zero(), T::zero());
    for i in 0..n {
        for k in 0..n {
            acc += ga.get(i, k) * b.get(k, i);
        }
    }
    Ok(acc)
}
