//! Axially symmetric surfaces `x² + y² = f²(z)` with polynomial `f²`.
//!
//! The matrices are `Z = diag(z_k)`, `z_k = ℏ(N+1−2k)/2`, and an upper
//! bidiagonal `W` with `[Z,W] = ℏW` and `[W,W†] = −2ℏ·ff'(Z)`. The second
//! relation fixes `w_k²` as partial sums of `Q_l = −2ℏ·ff'(z_l)`.
//!
//! Admissible ℏ comes from the quantum Casimir: there is a unique polynomial
//! `G_ℏ` with `G_ℏ(0) = 0` such that `X² + Y² + G_ℏ(Z)` is a multiple of the
//! identity, and ℏ is admissible when that multiple equals `f²(0)`.

use num_complex::Complex;

use super::{FuzzySurface, SurfaceKind};
use crate::error::{Error, Result};
use crate::matcore::{apply_function, operator_norm, CMatrix};
use crate::scalar::Real;

const W_NEGATIVE_TOL: f64 = 1e-12;
const W_CLOSURE_TOL: f64 = 1e-10;
const BISECTION_MAX_ITER: usize = 200;
const CLOSURE_ROOT_TOL: f64 = 1e-12;

/// Profile given by the coefficients of `f²(z)` in ascending powers.
#[derive(Clone, Debug, PartialEq)]
pub struct AxialProfile<T> {
    label: String,
    f2: Vec<T>,
}

impl<T: Real> AxialProfile<T> {
    pub fn from_coefficients(label: impl Into<String>, coeffs: &[T]) -> Result<Self> {
        let mut f2: Vec<T> = coeffs.to_vec();
        while f2.len() > 1 && f2.last() == Some(&T::zero()) {
            f2.pop();
        }
        if f2.is_empty() || f2.iter().any(|c| !c.is_finite()) {
            return Err(Error::InvalidArgument(
                "profile needs finite coefficients".into(),
            ));
        }
        if f2.len() < 2 {
            return Err(Error::InvalidArgument("profile f² must depend on z".into()));
        }
        Ok(Self {
            label: label.into(),
            f2,
        })
    }

    /// Round sphere, `f² = 1 − z²`.
    pub fn sphere() -> Self {
        Self {
            label: "sphere".into(),
            f2: vec![T::one(), T::zero(), -T::one()],
        }
    }

    /// `f² = 1 − z⁴`.
    pub fn quartic() -> Self {
        Self {
            label: "quartic".into(),
            f2: vec![T::one(), T::zero(), T::zero(), T::zero(), -T::one()],
        }
    }

    pub fn builtin(name: &str) -> Option<Self> {
        match name {
            "sphere" => Some(Self::sphere()),
            "quartic" => Some(Self::quartic()),
            _ => None,
        }
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn f2_coefficients(&self) -> &[T] {
        &self.f2
    }

    pub fn f_squared(&self, z: T) -> T {
        horner(&self.f2, z)
    }

    /// `ff'(z) = (f²)'(z)/2`
    pub fn ff_prime(&self, z: T) -> T {
        horner(&derivative(&self.f2), z) * T::lit(0.5)
    }

    /// `(ff')'(z) = (f²)''(z)/2`
    pub fn ff_prime_derivative(&self, z: T) -> T {
        horner(&derivative(&derivative(&self.f2)), z) * T::lit(0.5)
    }
}

fn horner<T: Real>(c: &[T], z: T) -> T {
    c.iter().rev().fold(T::zero(), |acc, &a| acc * z + a)
}

fn derivative<T: Real>(c: &[T]) -> Vec<T> {
    c.iter()
        .enumerate()
        .skip(1)
        .map(|(k, &a)| a * T::from_usize_lossy(k))
        .collect()
}

fn binomial<T: Real>(n: usize, k: usize) -> T {
    let mut acc = 1.0f64;
    for i in 0..k {
        acc = acc * (n - i) as f64 / (i + 1) as f64;
    }
    T::lit(acc.round())
}

/// Coefficients of `q(z + s)`.
fn shifted<T: Real>(q: &[T], s: T) -> Vec<T> {
    let mut out = vec![T::zero(); q.len()];
    for (j, &a) in q.iter().enumerate() {
        for (i, o) in out.iter_mut().enumerate().take(j + 1) {
            *o += a * binomial::<T>(j, i) * s.powi((j - i) as i32);
        }
    }
    out
}

/// `G_ℏ` with `G(0) = 0` and `G(z+ℏ) − G(z) = −(ℏ/2)(p'(z) + p'(z+ℏ))`, `p = f²`.
/// For `1 − z²` this is `z²`; for `1 − z⁴` it is `z⁴ + ℏ²z²`.
pub fn quantum_casimir_polynomial<T: Real>(profile: &AxialProfile<T>, hbar: T) -> Vec<T> {
    let dp = derivative(profile.f2_coefficients());
    let dps = shifted(&dp, hbar);
    let half_h = hbar * T::lit(0.5);
    let r: Vec<T> = dp
        .iter()
        .zip(&dps)
        .map(|(&a, &b)| -(a + b) * half_h)
        .collect();
    let d = profile.f2_coefficients().len() - 1;
    let mut g = vec![T::zero(); d + 1];
    // z^i coefficient: Σ_{j>i} g_j C(j,i) ℏ^{j−i} = r_i, solved from the top.
    for i in (0..d).rev() {
        let mut rhs = r[i];
        for j in (i + 2)..=d {
            rhs -= g[j] * binomial::<T>(j, i) * hbar.powi((j - i) as i32);
        }
        g[i + 1] = rhs / (T::from_usize_lossy(i + 1) * hbar);
    }
    g
}

fn z_nodes<T: Real>(n: usize, hbar: T) -> Vec<T> {
    let np1 = T::from_usize_lossy(n + 1);
    (1..=n)
        .map(|k| hbar * (np1 - T::from_usize_lossy(2 * k)) * T::lit(0.5))
        .collect()
}

/// `w_k²` for k = 0..=N (with `w_0² = 0`).
fn w_squared<T: Real>(profile: &AxialProfile<T>, z: &[T], hbar: T) -> Vec<T> {
    let mut w2 = Vec::with_capacity(z.len() + 1);
    w2.push(T::zero());
    let mut acc = T::zero();
    let mut comp = T::zero();
    for &zk in z {
        // compensated running sum
        let q = -T::lit(2.0) * hbar * profile.ff_prime(zk) - comp;
        let t = acc + q;
        comp = (t - acc) - q;
        acc = t;
        w2.push(acc);
    }
    w2
}

/// Casimir normalization defect `f̂²₁ + G_ℏ(z₁) − f²(0)`; zero at admissible ℏ.
pub fn closure_defect<T: Real>(n: usize, profile: &AxialProfile<T>, hbar: T) -> T {
    let z = z_nodes(n, hbar);
    let w2 = w_squared(profile, &z, hbar);
    let f_hat_1 = (w2[0] + w2[1]) * T::lit(0.5);
    let g = quantum_casimir_polynomial(profile, hbar);
    f_hat_1 + horner(&g, z[0]) - profile.f_squared(T::zero())
}

/// Data kept from an axial build for the closed-form curvature.
#[derive(Clone, Debug)]
pub struct AxialData<T> {
    pub profile: AxialProfile<T>,
    /// `z_k`, k = 1..N
    pub z: Vec<T>,
    /// `w_k²`, k = 0..N
    pub w_squared: Vec<T>,
    /// `f̂²_k = (w_k² + w_{k−1}²)/2`, k = 1..N
    pub f_hat_squared: Vec<T>,
    pub w: CMatrix<T>,
    pub z_matrix: CMatrix<T>,
    /// `ff'(Z)`
    pub ff_prime_z: CMatrix<T>,
}

/// Build the axial regularization at the given ℏ.
pub fn build_axial<T: Real>(
    n: usize,
    profile: &AxialProfile<T>,
    hbar: T,
) -> Result<FuzzySurface<T>> {
    if n < 2 {
        return Err(Error::InvalidArgument(format!(
            "axial surface needs N >= 2, got {n}"
        )));
    }
    if !(hbar > T::zero()) || !hbar.is_finite() {
        return Err(Error::InvalidArgument(format!(
            "hbar must be positive, got {hbar}"
        )));
    }
    let z = z_nodes(n, hbar);
    let w2 = w_squared(profile, &z, hbar);
    let neg_tol = T::tol(W_NEGATIVE_TOL);
    for (k, &v) in w2.iter().enumerate().take(n).skip(1) {
        if v < -neg_tol {
            return Err(Error::InadmissibleHbar {
                hbar: hbar.to_f64_lossy(),
                k,
                value: v.to_f64_lossy(),
            });
        }
    }
    if w2[n].abs() > T::tol(W_CLOSURE_TOL) {
        return Err(Error::InadmissibleHbar {
            hbar: hbar.to_f64_lossy(),
            k: n,
            value: w2[n].to_f64_lossy(),
        });
    }
    let zero = Complex::new(T::zero(), T::zero());
    let w = CMatrix::from_fn(n, |r, c| {
        if c == r + 1 {
            Complex::new(w2[r + 1].max(T::zero()).sqrt(), T::zero())
        } else {
            zero
        }
    });
    let wd = w.adjoint();
    let half = T::lit(0.5);
    let x = (&w + &wd).scale(half);
    let y = (&w - &wd).scale_c(Complex::new(T::zero(), -half));
    let z_matrix = CMatrix::from_diag(&z);
    let ffp = apply_function(&z_matrix, |t| profile.ff_prime(t))?;
    let gamma2 = &(&w.matmul(&wd) + &wd.matmul(&w)).scale(half) + &ffp.matmul(&ffp);
    let gamma = apply_function(&gamma2, |t| t.sqrt())?;
    let f_hat_squared = (1..=n).map(|k| (w2[k] + w2[k - 1]) * half).collect();
    let data = AxialData {
        profile: profile.clone(),
        z,
        w_squared: w2,
        f_hat_squared,
        w,
        z_matrix: z_matrix.clone(),
        ff_prime_z: ffp,
    };
    FuzzySurface::assemble(
        format!("axial {} N={}", profile.label(), n),
        SurfaceKind::Axial,
        hbar,
        vec![x, y, z_matrix],
        None,
        Some(gamma),
        Some(data),
    )
}

/// `‖X² + Y² + G_ℏ(Z) − f²(0)·1‖` for an axial surface.
pub fn casimir_residual<T: Real>(surface: &FuzzySurface<T>) -> Result<T> {
    let data = surface
        .axial()
        .ok_or_else(|| Error::InvalidArgument("Casimir residual needs an axial surface".into()))?;
    let g = quantum_casimir_polynomial(&data.profile, surface.hbar());
    let x = &surface.coords()[0];
    let y = &surface.coords()[1];
    let gz = CMatrix::from_diag(&data.z.iter().map(|&t| horner(&g, t)).collect::<Vec<_>>());
    let target = CMatrix::identity(surface.n_mat()).scale(data.profile.f_squared(T::zero()));
    let c = &(&(&x.matmul(x) + &y.matmul(y)) + &gz) - &target;
    operator_norm(&c)
}

/// A sub-interval on which the closure defect changes sign.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SignChange<T> {
    pub lo: T,
    pub hi: T,
}

/// Every sign change of the closure defect on a uniform scan of `[lo, hi]`.
pub fn scan_axial_hbar<T: Real>(
    n: usize,
    profile: &AxialProfile<T>,
    lo: T,
    hi: T,
    samples: usize,
) -> Vec<SignChange<T>> {
    let samples = samples.max(2);
    let step = (hi - lo) / T::from_usize_lossy(samples - 1);
    let mut out = Vec::new();
    let mut prev_h = lo;
    let mut prev_d = closure_defect(n, profile, lo);
    for s in 1..samples {
        let h = lo + step * T::from_usize_lossy(s);
        let d = closure_defect(n, profile, h);
        if prev_d == T::zero() || (prev_d < T::zero()) != (d < T::zero()) {
            out.push(SignChange { lo: prev_h, hi: h });
        }
        prev_h = h;
        prev_d = d;
    }
    out
}

/// Bisection for the admissible ℏ on `bracket`.
pub fn solve_axial_hbar<T: Real>(
    n: usize,
    profile: &AxialProfile<T>,
    bracket: (T, T),
) -> Result<T> {
    let (mut lo, mut hi) = bracket;
    if !(lo > T::zero()) || !(hi > lo) {
        return Err(Error::InvalidArgument(format!(
            "bad hbar bracket ({lo}, {hi})"
        )));
    }
    let mut d_lo = closure_defect(n, profile, lo);
    let d_hi = closure_defect(n, profile, hi);
    if d_lo == T::zero() {
        return Ok(lo);
    }
    if d_hi == T::zero() {
        return Ok(hi);
    }
    if (d_lo < T::zero()) == (d_hi < T::zero()) {
        return Err(Error::NoSignChange {
            lo: lo.to_f64_lossy(),
            hi: hi.to_f64_lossy(),
            d_lo: d_lo.to_f64_lossy(),
            d_hi: d_hi.to_f64_lossy(),
        });
    }
    let tol = T::tol(CLOSURE_ROOT_TOL);
    for _ in 0..BISECTION_MAX_ITER {
        let mid = (lo + hi) * T::lit(0.5);
        let d_mid = closure_defect(n, profile, mid);
        if d_mid == T::zero() || mid <= lo || mid >= hi {
            return finish(mid, d_mid, tol);
        }
        if (d_mid < T::zero()) == (d_lo < T::zero()) {
            lo = mid;
            d_lo = d_mid;
        } else {
            hi = mid;
        }
    }
    let mid = (lo + hi) * T::lit(0.5);
    finish(mid, closure_defect(n, profile, mid), tol)
}

fn finish<T: Real>(h: T, d: T, tol: T) -> Result<T> {
    if d.abs() <= tol {
        Ok(h)
    } else {
        Err(Error::NoConvergence {
            routine: "solve_axial_hbar",
            iterations: BISECTION_MAX_ITER,
        })
    }
}
