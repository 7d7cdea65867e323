//! Eigenvalues of general complex matrices: Householder reduction to upper
//! Hessenberg form followed by single-shift complex QR with Wilkinson shifts.

use num_complex::Complex;

use super::CMatrix;
use crate::error::{Error, Result};
use crate::scalar::Real;

const MAX_ITER_PER_EIGENVALUE: usize = 60;

/// All eigenvalues, sorted by real part then imaginary part.
pub fn eigenvalues_general<T: Real>(a: &CMatrix<T>) -> Result<Vec<Complex<T>>> {
    if !a.is_finite() {
        return Err(Error::NonFinite("eigenvalues_general input".into()));
    }
    let n = a.dim();
    let mut h: Vec<Vec<Complex<T>>> = (0..n)
        .map(|i| (0..n).map(|j| a.get(i, j)).collect())
        .collect();
    hessenberg(&mut h);
    let mut vals = qr_iterate(&mut h)?;
    vals.sort_by(|x, y| {
        x.re.partial_cmp(&y.re)
            .unwrap_or(std::cmp::Ordering::Equal)
            .then(x.im.partial_cmp(&y.im).unwrap_or(std::cmp::Ordering::Equal))
    });
    Ok(vals)
}

fn zero<T: Real>() -> Complex<T> {
    Complex::new(T::zero(), T::zero())
}

fn hessenberg<T: Real>(h: &mut [Vec<Complex<T>>]) {
    let n = h.len();
    if n < 3 {
        return;
    }
    for k in 0..n - 2 {
        // Householder vector for column k below the subdiagonal.
        let alpha_norm = (k + 1..n).map(|i| h[i][k].norm_sqr()).sum::<T>().sqrt();
        if alpha_norm == T::zero() {
            continue;
        }
        let x0 = h[k + 1][k];
        let phase = if x0.norm() == T::zero() {
            Complex::new(T::one(), T::zero())
        } else {
            x0 / x0.norm()
        };
        let mut v: Vec<Complex<T>> = (k + 1..n).map(|i| h[i][k]).collect();
        v[0] += phase * alpha_norm;
        let vnorm2 = v.iter().map(|z| z.norm_sqr()).sum::<T>();
        if vnorm2 == T::zero() {
            continue;
        }
        let two = T::lit(2.0);
        // H <- (I - 2 v v†/|v|²) H
        for j in 0..n {
            let mut s = zero::<T>();
            for (idx, i) in (k + 1..n).enumerate() {
                s += v[idx].conj() * h[i][j];
            }
            let s = s * two / vnorm2;
            for (idx, i) in (k + 1..n).enumerate() {
                let d = v[idx] * s;
                h[i][j] -= d;
            }
        }
        // H <- H (I - 2 v v†/|v|²)
        for row in h.iter_mut() {
            let mut s = zero::<T>();
            for (idx, j) in (k + 1..n).enumerate() {
                s += row[j] * v[idx];
            }
            let s = s * two / vnorm2;
            for (idx, j) in (k + 1..n).enumerate() {
                let d = s * v[idx].conj();
                row[j] -= d;
            }
        }
        for i in k + 2..n {
            h[i][k] = zero();
        }
    }
}

fn givens<T: Real>(a: Complex<T>, b: Complex<T>) -> (T, Complex<T>) {
    // returns (c, s) with [c s; -s̄ c] [a; b] = [r; 0]
    let an = a.norm();
    let bn = b.norm();
    if bn == T::zero() {
        return (T::one(), zero());
    }
    if an == T::zero() {
        return (
            T::zero(),
            Complex::new(T::one(), T::zero()) * (b.conj() / bn),
        );
    }
    let r = (an * an + bn * bn).sqrt();
    let c = an / r;
    let s = (a / an) * b.conj() / r;
    (c, s)
}

fn qr_iterate<T: Real>(h: &mut [Vec<Complex<T>>]) -> Result<Vec<Complex<T>>> {
    let n = h.len();
    let mut vals = vec![zero::<T>(); n];
    if n == 0 {
        return Ok(vals);
    }
    let eps = T::epsilon();
    let mut hi = n - 1;
    let mut iter = 0usize;
    let mut total = 0usize;
    loop {
        if hi == 0 {
            vals[0] = h[0][0];
            break;
        }
        // find lo: start of the unreduced block ending at hi
        let mut lo = hi;
        while lo > 0 {
            let s = h[lo - 1][lo - 1].norm() + h[lo][lo].norm();
            let s = if s == T::zero() { T::one() } else { s };
            if h[lo][lo - 1].norm() <= eps * s {
                h[lo][lo - 1] = zero();
                break;
            }
            lo -= 1;
        }
        if lo == hi {
            vals[hi] = h[hi][hi];
            hi -= 1;
            iter = 0;
            continue;
        }
        iter += 1;
        total += 1;
        if iter > MAX_ITER_PER_EIGENVALUE {
            return Err(Error::NoConvergence {
                routine: "eigenvalues_general",
                iterations: total,
            });
        }
        // Wilkinson shift from the trailing 2x2 block
        let a = h[hi - 1][hi - 1];
        let b = h[hi - 1][hi];
        let c = h[hi][hi - 1];
        let d = h[hi][hi];
        let mu = if iter % 11 == 10 {
            // exceptional shift
            d + Complex::new(h[hi][hi - 1].norm() * T::lit(0.75), T::zero())
        } else {
            let tr = a + d;
            let det = a * d - b * c;
            let half = T::lit(0.5);
            let disc = (tr * tr * T::lit(0.25) - det).sqrt();
            let l1 = tr * half + disc;
            let l2 = tr * half - disc;
            if (l1 - d).norm() <= (l2 - d).norm() {
                l1
            } else {
                l2
            }
        };
        for i in lo..=hi {
            h[i][i] -= mu;
        }
        let mut rots = Vec::with_capacity(hi - lo);
        for k in lo..hi {
            let (c, s) = givens(h[k][k], h[k + 1][k]);
            rots.push((c, s));
            for j in k..n {
                let x = h[k][j];
                let y = h[k + 1][j];
                h[k][j] = x * c + s * y;
                h[k + 1][j] = -s.conj() * x + y * c;
            }
        }
        for (idx, k) in (lo..hi).enumerate() {
            let (c, s) = rots[idx];
            let top = (k + 2).min(hi);
            for i in 0..=top {
                let x = h[i][k];
                let y = h[i][k + 1];
                h[i][k] = x * c + y * s.conj();
                h[i][k + 1] = -x * s + y * c;
            }
        }
        for i in lo..=hi {
            h[i][i] += mu;
        }
    }
    Ok(vals)
}
