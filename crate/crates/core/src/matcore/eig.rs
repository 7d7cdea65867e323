//! Cyclic complex Jacobi for Hermitian matrices.

use num_complex::Complex;

use super::CMatrix;
use crate::error::{Error, Result};
use crate::scalar::Real;

const MAX_SWEEPS: usize = 100;

#[derive(Clone, Debug)]
pub struct HermitianSpectrum<T> {
    /// Ascending.
    pub eigenvalues: Vec<T>,
    /// Column k is the eigenvector of `eigenvalues[k]`.
    pub eigenvectors: CMatrix<T>,
}

impl<T: Real> HermitianSpectrum<T> {
    /// `V diag(λ) V†`
    pub fn reconstruct(&self) -> CMatrix<T> {
        self.map(|x| x)
    }

    fn map(&self, phi: impl Fn(T) -> T) -> CMatrix<T> {
        let v = &self.eigenvectors;
        let n = v.dim();
        let vals: Vec<T> = self.eigenvalues.iter().map(|&l| phi(l)).collect();
        CMatrix::from_fn(n, |i, j| {
            let mut acc = Complex::new(T::zero(), T::zero());
            for k in 0..n {
                acc += v.get(i, k) * v.get(j, k).conj() * vals[k];
            }
            acc
        })
    }
}

fn hermitian_tolerance<T: Real>() -> T {
    T::tol(1e-10)
}

/// Eigen-decomposition of a Hermitian matrix; eigenvalues ascending.
pub fn hermitian_eig<T: Real>(a: &CMatrix<T>) -> Result<HermitianSpectrum<T>> {
    if !a.is_finite() {
        return Err(Error::NonFinite("hermitian_eig input".into()));
    }
    let defect = a.hermiticity_defect();
    if defect > hermitian_tolerance::<T>() {
        return Err(Error::NotHermitian {
            defect: defect.to_f64_lossy(),
        });
    }
    let n = a.dim();
    // Work on the Hermitian part so tiny asymmetries do not leak into rotations.
    let mut m = a.hermitian_part();
    let mut v = CMatrix::<T>::identity(n);
    let total = m.frobenius_norm();
    let stop = T::epsilon() * total;

    let mut converged = n < 2;
    for _ in 0..MAX_SWEEPS {
        if off_diagonal_norm(&m) <= stop {
            converged = true;
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                rotate(&mut m, &mut v, p, q);
            }
        }
    }
    if !converged {
        if off_diagonal_norm(&m) > stop * T::lit(16.0) {
            return Err(Error::NoConvergence {
                routine: "hermitian_eig",
                iterations: MAX_SWEEPS,
            });
        }
    }

    let mut order: Vec<usize> = (0..n).collect();
    let diag = m.diag_real();
    order.sort_by(|&i, &j| {
        diag[i]
            .partial_cmp(&diag[j])
            .unwrap_or(std::cmp::Ordering::Equal)
    });
    let eigenvalues = order.iter().map(|&k| diag[k]).collect();
    let eigenvectors = CMatrix::from_fn(n, |i, j| v.get(i, order[j]));
    Ok(HermitianSpectrum {
        eigenvalues,
        eigenvectors,
    })
}

fn off_diagonal_norm<T: Real>(m: &CMatrix<T>) -> T {
    let n = m.dim();
    let mut acc = T::zero();
    for i in 0..n {
        for j in 0..n {
            if i != j {
                acc += m.get(i, j).norm_sqr();
            }
        }
    }
    acc.sqrt()
}

/// One Jacobi rotation annihilating entry (p, q).
fn rotate<T: Real>(m: &mut CMatrix<T>, v: &mut CMatrix<T>, p: usize, q: usize) {
    let b = m.get(p, q);
    let babs = b.norm();
    if babs == T::zero() {
        return;
    }
    let app = m.get(p, p).re;
    let aqq = m.get(q, q).re;
    // negligible against both diagonal entries: flush
    let tiny = T::epsilon() * T::lit(1e-2);
    if babs < tiny * app.abs() && babs < tiny * aqq.abs() {
        m.set(p, q, Complex::new(T::zero(), T::zero()));
        m.set(q, p, Complex::new(T::zero(), T::zero()));
        return;
    }
    let phase = b / babs; // e^{i phi}
    let theta = (aqq - app) / (T::lit(2.0) * babs);
    let t = {
        let s = if theta >= T::zero() {
            T::one()
        } else {
            -T::one()
        };
        s / (theta.abs() + (theta * theta + T::one()).sqrt())
    };
    let c = T::one() / (t * t + T::one()).sqrt();
    let s = t * c;
    // G = [[c, s e^{i phi}], [-s e^{-i phi}, c]] on the (p, q) plane.
    let g_pq = phase * s;
    let g_qp = -phase.conj() * s;
    let n = m.dim();
    // columns: M <- M G
    for k in 0..n {
        let mkp = m.get(k, p);
        let mkq = m.get(k, q);
        m.set(k, p, mkp * c + mkq * g_qp);
        m.set(k, q, mkp * g_pq + mkq * c);
    }
    // rows: M <- G† M
    for k in 0..n {
        let mpk = m.get(p, k);
        let mqk = m.get(q, k);
        m.set(p, k, mpk * c + mqk * g_qp.conj());
        m.set(q, k, mpk * g_pq.conj() + mqk * c);
    }
    m.set(p, q, Complex::new(T::zero(), T::zero()));
    m.set(q, p, Complex::new(T::zero(), T::zero()));
    let zp = m.get(p, p).re;
    let zq = m.get(q, q).re;
    m.set(p, p, Complex::new(zp, T::zero()));
    m.set(q, q, Complex::new(zq, T::zero()));
    for k in 0..n {
        let vkp = v.get(k, p);
        let vkq = v.get(k, q);
        v.set(k, p, vkp * c + vkq * g_qp);
        v.set(k, q, vkp * g_pq + vkq * c);
    }
}

/// `V diag(φ(λ)) V†`. Fails with the offending eigenvalue when φ is not finite there.
pub fn apply_function<T: Real>(a: &CMatrix<T>, phi: impl Fn(T) -> T) -> Result<CMatrix<T>> {
    let spec = hermitian_eig(a)?;
    for &l in &spec.eigenvalues {
        if !phi(l).is_finite() {
            return Err(Error::Singular {
                eigenvalue: l.to_f64_lossy(),
            });
        }
    }
    Ok(spec.map(phi))
}

/// Largest singular value.
pub fn operator_norm<T: Real>(a: &CMatrix<T>) -> Result<T> {
    if !a.is_finite() {
        return Err(Error::NonFinite("operator_norm input".into()));
    }
    if a.max_abs() == T::zero() {
        return Ok(T::zero());
    }
    if let Some(d) = diagonal_entries(a) {
        return Ok(d.iter().map(|z| z.norm()).fold(T::zero(), T::max));
    }
    if a.hermiticity_defect() <= T::epsilon() * T::lit(8.0) {
        let spec = hermitian_eig(a)?;
        return Ok(spec
            .eigenvalues
            .iter()
            .map(|l| l.abs())
            .fold(T::zero(), T::max));
    }
    let ata = a.adjoint().matmul(a).hermitian_part();
    let spec = hermitian_eig(&ata)?;
    let top = spec.eigenvalues.last().copied().unwrap_or(T::zero());
    Ok(top.max(T::zero()).sqrt())
}

fn diagonal_entries<T: Real>(a: &CMatrix<T>) -> Option<Vec<Complex<T>>> {
    let n = a.dim();
    for i in 0..n {
        for j in 0..n {
            let z = a.get(i, j);
            if i != j && (z.re != T::zero() || z.im != T::zero()) {
                return None;
            }
        }
    }
    Some((0..n).map(|i| a.get(i, i)).collect())
}
