//! Bracket Laplacian, Hessian tensor, curvature commutation and Gauss–Bonnet.

use rayon::prelude::*;

use super::bracket::{coordinate_brackets, gamma_field, MatrixField};
use super::curvature::gauss_curvature_poisson;
use super::grid::GridField;
use super::manifold::{small_det, EmbeddedManifold};
use crate::error::{Error, Result};
use crate::scalar::Real;

fn pointwise<T: Real>(len: usize, f: impl Fn(usize) -> T + Sync) -> Vec<T> {
    (0..len).into_par_iter().map(&f).collect()
}

/// `D^I(u) = (1/(γ√((n−1)!))){u, x̄^I}`; summed over ordered tuples the
/// factorials cancel, so increasing tuples with `(1/γ){u, x̄^I}` are used.
struct BracketDerivative<'a, T> {
    mf: &'a EmbeddedManifold<T>,
    gamma: Vec<T>,
}

impl<'a, T: Real> BracketDerivative<'a, T> {
    fn new(mf: &'a EmbeddedManifold<T>) -> Result<Self> {
        Ok(BracketDerivative {
            mf,
            gamma: gamma_field(mf)?.values,
        })
    }

    fn all(&self, u: &[T]) -> Vec<Vec<T>> {
        self.mf
            .brackets_with_tuples(u)
            .into_iter()
            .map(|b| b.iter().zip(&self.gamma).map(|(v, g)| *v / *g).collect())
            .collect()
    }
}

fn check_len<T: Real>(mf: &EmbeddedManifold<T>, u: &GridField<T>) -> Result<()> {
    if u.values.len() != mf.grid().len() {
        return Err(Error::DimensionMismatch {
            expected: mf.grid().len(),
            found: u.values.len(),
        });
    }
    Ok(())
}

#[derive(Clone, Debug)]
pub struct BracketLaplacian<T> {
    /// `Δu = D_I D^I(u)`
    pub laplacian: GridField<T>,
    /// `|∇u|² = D_I(u) D^I(u)`
    pub grad_sq: GridField<T>,
    /// `|∇²u|² = D_I D^J(u) D_J D^I(u)`
    pub hess_sq: GridField<T>,
}

pub fn bracket_laplacian<T: Real>(
    mf: &EmbeddedManifold<T>,
    u: &GridField<T>,
) -> Result<BracketLaplacian<T>> {
    check_len(mf, u)?;
    let d = BracketDerivative::new(mf)?;
    let len = mf.grid().len();
    let du = d.all(&u.values);
    let ddu: Vec<Vec<Vec<T>>> = du.iter().map(|f| d.all(f)).collect(); // ddu[J][I] = D^I(D^J u)
    let nt = du.len();
    let shape = mf.grid().shape();
    let laplacian = pointwise(len, |p| (0..nt).map(|t| ddu[t][t][p]).sum());
    let grad_sq = pointwise(len, |p| du.iter().map(|f| f[p] * f[p]).sum());
    let hess_sq = pointwise(len, |p| {
        let mut acc = T::zero();
        for i in 0..nt {
            for j in 0..nt {
                acc += ddu[j][i][p] * ddu[i][j][p];
            }
        }
        acc
    });
    Ok(BracketLaplacian {
        laplacian: GridField {
            shape: shape.clone(),
            values: laplacian,
        },
        grad_sq: GridField {
            shape: shape.clone(),
            values: grad_sq,
        },
        hess_sq: GridField {
            shape,
            values: hess_sq,
        },
    })
}

#[derive(Clone, Debug)]
pub struct HessianTensor<T> {
    /// `∇^{ij}(u)` as an `m×m` matrix per point.
    pub tensor: MatrixField<T>,
    /// Largest `|δ_ij ∇^{ij}(u) − Δu|` on the evaluation region.
    pub trace_defect: T,
    /// Largest `|∇^{ij}∇^{ij} − |∇²u|²|` on the evaluation region.
    pub square_defect: T,
}

/// `∇^{ij}(u) = ½(𝒟^i𝒟^j(u) + 𝒟^j𝒟^i(u) − 𝒟^u(𝒟^i(x^j)))` with
/// `𝒟^i(u) = (1/(γ²(n−1)!)) Σ_I {x^i, x̄^I}{u, x̄^I}` and `𝒟^u = 𝒟^k(u) 𝒟^k`.
pub fn hessian_tensor<T: Real>(
    mf: &EmbeddedManifold<T>,
    u: &GridField<T>,
) -> Result<HessianTensor<T>> {
    check_len(mf, u)?;
    let m = mf.m();
    let len = mf.grid().len();
    let gamma = gamma_field(mf)?.values;
    let xb = coordinate_brackets(mf);
    let grad = |f: &[T]| -> Vec<Vec<T>> {
        let b = mf.brackets_with_tuples(f);
        (0..m)
            .map(|i| {
                pointwise(len, |p| {
                    xb[i].iter().zip(&b).map(|(x, y)| x[p] * y[p]).sum::<T>() / gamma[p].powi(2)
                })
            })
            .collect()
    };
    let gu = grad(&u.values);
    let ggu: Vec<Vec<Vec<T>>> = gu.iter().map(|f| grad(f)).collect(); // ggu[j][i] = 𝒟^i 𝒟^j u
    let pi: Vec<Vec<Vec<T>>> = (0..m).map(|i| grad(&mf.embedding()[i].values)).collect(); // pi[i][j] = 𝒟^j x^i
    let tensor = MatrixField::from_fn(m, len, |_, _, _| T::zero());
    let mut values = tensor.values;
    for i in 0..m {
        for j in 0..m {
            let dpi = grad(&pi[i][j]);
            let comp = pointwise(len, |p| {
                let corr: T = (0..m).map(|k| gu[k][p] * dpi[k][p]).sum();
                T::lit(0.5) * (ggu[j][i][p] + ggu[i][j][p] - corr)
            });
            for p in 0..len {
                values[(p * m + i) * m + j] = comp[p];
            }
        }
    }
    let tensor = MatrixField { dim: m, values };
    let lap = bracket_laplacian(mf, u)?;
    let region = mf.region();
    let mut trace_defect = T::zero();
    let mut square_defect = T::zero();
    for p in (0..len).filter(|&p| region[p]) {
        let a = tensor.at(p);
        let tr: T = (0..m).map(|i| a[i * m + i]).sum();
        let sq: T = a.iter().map(|v| *v * *v).sum();
        trace_defect = trace_defect.max((tr - lap.laplacian.values[p]).abs());
        square_defect = square_defect.max((sq - lap.hess_sq.values[p]).abs());
    }
    Ok(HessianTensor {
        tensor,
        trace_defect,
        square_defect,
    })
}

/// Residual field of
/// `D_I(u)D^I D_J D^J(u) − D_I(u)D^J D_J D^I(u) − ⟦D_I,D^J⟧(u) D_I D^J(u) + K|∇u|²`.
pub fn curvature_commutation_field<T: Real>(
    mf: &EmbeddedManifold<T>,
    u: &GridField<T>,
) -> Result<GridField<T>> {
    if mf.n() != 2 {
        return Err(Error::WrongDimension {
            op: "curvature_commutation_check",
            expected: "n = 2".into(),
            found: format!("n = {}", mf.n()),
        });
    }
    check_len(mf, u)?;
    let d = BracketDerivative::new(mf)?;
    let len = mf.grid().len();
    let k = gauss_curvature_poisson(mf)?;
    let du = d.all(&u.values);
    let nt = du.len();
    let ddu: Vec<Vec<Vec<T>>> = du.iter().map(|f| d.all(f)).collect(); // ddu[J][I] = D_I(D_J u)
    let lap: Vec<T> = pointwise(len, |p| (0..nt).map(|t| ddu[t][t][p]).sum());
    let dlap = d.all(&lap);
    // Δ(D_I u) = Σ_J D_J(D_J(D_I u))
    let lap_du: Vec<Vec<T>> = (0..nt)
        .map(|i| {
            let third: Vec<Vec<Vec<T>>> = ddu[i].iter().map(|f| d.all(f)).collect(); // third[J][J'] = D_J'(D_J(D_I u))
            pointwise(len, |p| (0..nt).map(|j| third[j][j][p]).sum())
        })
        .collect();
    let values = pointwise(len, |p| {
        let mut t1 = T::zero();
        let mut t2 = T::zero();
        let mut t3 = T::zero();
        let mut g2 = T::zero();
        for i in 0..nt {
            t1 += du[i][p] * dlap[i][p];
            t2 += du[i][p] * lap_du[i][p];
            g2 += du[i][p] * du[i][p];
            for j in 0..nt {
                let dij = ddu[j][i][p]; // D_I D^J(u)
                let dji = ddu[i][j][p];
                t3 += (dij - dji) * dij;
            }
        }
        t1 - t2 - t3 + k.values[p] * g2
    });
    Ok(GridField {
        shape: mf.grid().shape(),
        values,
    })
}

/// Largest absolute curvature-commutation residual on the evaluation region.
pub fn curvature_commutation_check<T: Real>(
    mf: &EmbeddedManifold<T>,
    u: &GridField<T>,
) -> Result<T> {
    Ok(curvature_commutation_field(mf, u)?.max_abs_on(Some(mf.region())))
}

/// `(1/2π) Σ K √g Δu¹Δu²` on a fully periodic 2-d chart.
pub fn gauss_bonnet_quadrature<T: Real>(mf: &EmbeddedManifold<T>, k: &GridField<T>) -> Result<T> {
    if mf.n() != 2 {
        return Err(Error::WrongDimension {
            op: "gauss_bonnet_quadrature",
            expected: "n = 2".into(),
            found: format!("n = {}", mf.n()),
        });
    }
    if !mf.grid().is_fully_periodic() {
        return Err(Error::NonPeriodicGrid("Gauss-Bonnet quadrature"));
    }
    check_len(mf, k)?;
    let g = mf.metric();
    let axes = mf.grid().axes();
    let cell = axes[0].spacing() * axes[1].spacing();
    let terms: Vec<T> = pointwise(mf.grid().len(), |p| {
        let rows = [[g[0][p], g[1][p]], [g[2][p], g[3][p]]];
        k.values[p] * small_det(&[&rows[0], &rows[1]]).max(T::zero()).sqrt()
    });
    Ok(pairwise_sum(&terms) * cell / (T::lit(2.0) * T::PI()))
}

/// Fixed-shape pairwise summation.
pub fn pairwise_sum<T: Real>(v: &[T]) -> T {
    if v.len() <= 8 {
        return v.iter().copied().fold(T::zero(), |a, b| a + b);
    }
    let mid = v.len() / 2;
    pairwise_sum(&v[..mid]) + pairwise_sum(&v[mid..])
}
