//! Pointwise dense linear algebra on tiny real matrices (row-major slices).

use crate::scalar::Real;

/// Eigen-decomposition of a small real symmetric matrix by cyclic Jacobi.
/// Returns ascending eigenvalues and eigenvectors as columns of a row-major
/// `k×k` matrix.
pub(crate) fn sym_eig<T: Real>(k: usize, a: &[T]) -> (Vec<T>, Vec<T>) {
    let mut a = a.to_vec();
    let mut v = vec![T::zero(); k * k];
    for i in 0..k {
        v[i * k + i] = T::one();
    }
    let two = T::lit(2.0);
    for _ in 0..60 {
        let off: T = (0..k)
            .flat_map(|i| (0..k).filter(move |&j| j != i).map(move |j| (i, j)))
            .map(|(i, j)| a[i * k + j].powi(2))
            .sum();
        let total: T = a.iter().map(|x| x.powi(2)).sum();
        if off <= T::epsilon() * T::epsilon() * total || off == T::zero() {
            break;
        }
        for p in 0..k {
            for q in p + 1..k {
                let apq = a[p * k + q];
                if apq == T::zero() {
                    continue;
                }
                let theta = (a[q * k + q] - a[p * k + p]) / (two * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + T::one()).sqrt());
                let c = T::one() / (t * t + T::one()).sqrt();
                let s = t * c;
                for r in 0..k {
                    let arp = a[r * k + p];
                    let arq = a[r * k + q];
                    a[r * k + p] = c * arp - s * arq;
                    a[r * k + q] = s * arp + c * arq;
                }
                for r in 0..k {
                    let apr = a[p * k + r];
                    let aqr = a[q * k + r];
                    a[p * k + r] = c * apr - s * aqr;
                    a[q * k + r] = s * apr + c * aqr;
                }
                for r in 0..k {
                    let vrp = v[r * k + p];
                    let vrq = v[r * k + q];
                    v[r * k + p] = c * vrp - s * vrq;
                    v[r * k + q] = s * vrp + c * vrq;
                }
            }
        }
    }
    let mut order: Vec<usize> = (0..k).collect();
    order.sort_by(|&i, &j| {
        a[i * k + i]
            .partial_cmp(&a[j * k + j])
            .unwrap_or(std::cmp::Ordering::Equal)
    });
    let vals = order.iter().map(|&i| a[i * k + i]).collect();
    let mut vecs = vec![T::zero(); k * k];
    for (c, &i) in order.iter().enumerate() {
        for r in 0..k {
            vecs[r * k + c] = v[r * k + i];
        }
    }
    (vals, vecs)
}

/// Orthogonal polar factor `M (MᵀM)^{-1/2}` of a small square matrix.
pub(crate) fn polar_factor<T: Real>(k: usize, m: &[T]) -> Vec<T> {
    let mut mtm = vec![T::zero(); k * k];
    for i in 0..k {
        for j in 0..k {
            mtm[i * k + j] = (0..k).map(|r| m[r * k + i] * m[r * k + j]).sum();
        }
    }
    let (vals, vecs) = sym_eig(k, &mtm);
    let mut inv_sqrt = vec![T::zero(); k * k];
    for i in 0..k {
        for j in 0..k {
            inv_sqrt[i * k + j] = (0..k)
                .map(|c| {
                    vecs[i * k + c] * vecs[j * k + c] / vals[c].max(T::min_positive_value()).sqrt()
                })
                .sum();
        }
    }
    matmul(k, m, &inv_sqrt)
}

pub(crate) fn matmul<T: Real>(k: usize, a: &[T], b: &[T]) -> Vec<T> {
    let mut out = vec![T::zero(); k * k];
    for i in 0..k {
        for l in 0..k {
            let ail = a[i * k + l];
            for j in 0..k {
                out[i * k + j] += ail * b[l * k + j];
            }
        }
    }
    out
}

/// Frobenius norm of `a − b`.
pub(crate) fn frob_diff<T: Real>(a: &[T], b: &[T]) -> T {
    a.iter()
        .zip(b)
        .map(|(x, y)| (*x - *y).powi(2))
        .sum::<T>()
        .sqrt()
}
