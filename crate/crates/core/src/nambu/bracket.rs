//! Nambu bracket, γ, tangent projection and the normal frame.

use std::collections::VecDeque;

use rayon::prelude::*;
use serde::Serialize;

use super::grid::GridField;
use super::manifold::{increasing_tuples, small_det, EmbeddedManifold};
use super::small::{polar_factor, sym_eig};
use crate::error::{Error, Result};
use crate::scalar::Real;

/// A `dim×dim` real matrix at every grid point, row-major per point.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct MatrixField<T> {
    pub dim: usize,
    pub values: Vec<T>,
}

impl<T: Real> MatrixField<T> {
    pub fn at(&self, p: usize) -> &[T] {
        let k = self.dim * self.dim;
        &self.values[p * k..(p + 1) * k]
    }

    pub fn entry(&self, p: usize, i: usize, j: usize) -> T {
        self.values[(p * self.dim + i) * self.dim + j]
    }

    pub fn len(&self) -> usize {
        self.values.len() / (self.dim * self.dim)
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Component field `(i, j)`.
    pub fn component(&self, i: usize, j: usize, shape: Vec<usize>) -> GridField<T> {
        GridField {
            shape,
            values: (0..self.len()).map(|p| self.entry(p, i, j)).collect(),
        }
    }

    pub(crate) fn from_fn(
        dim: usize,
        len: usize,
        f: impl Fn(usize, usize, usize) -> T + Sync,
    ) -> Self {
        let values = (0..len)
            .into_par_iter()
            .flat_map_iter(|p| {
                (0..dim * dim)
                    .map(move |k| (p, k / dim, k % dim))
                    .collect::<Vec<_>>()
            })
            .map(|(p, i, j)| f(p, i, j))
            .collect();
        MatrixField { dim, values }
    }
}

fn check_field<T: Real>(mf: &EmbeddedManifold<T>, f: &GridField<T>) -> Result<()> {
    if f.values.len() != mf.grid().len() {
        return Err(Error::DimensionMismatch {
            expected: mf.grid().len(),
            found: f.values.len(),
        });
    }
    Ok(())
}

/// `{f₁, …, f_n} = (1/ρ) det ∂(f₁…f_n)/∂(u¹…uⁿ)`.
pub fn nambu_bracket<T: Real>(
    mf: &EmbeddedManifold<T>,
    fields: &[&GridField<T>],
) -> Result<GridField<T>> {
    let n = mf.n();
    if fields.len() != n {
        return Err(Error::InvalidArgument(format!(
            "bracket on an n = {n} manifold takes {n} fields, got {}",
            fields.len()
        )));
    }
    for f in fields {
        check_field(mf, f)?;
    }
    let grads: Vec<Vec<Vec<T>>> = fields
        .iter()
        .map(|f| mf.grid().gradient(&f.values))
        .collect();
    Ok(bracket_of_gradients(mf, &grads))
}

pub(crate) fn bracket_of_gradients<T: Real>(
    mf: &EmbeddedManifold<T>,
    grads: &[Vec<Vec<T>>],
) -> GridField<T> {
    let n = mf.n();
    let rho = &mf.rho().values;
    let values = (0..mf.grid().len())
        .into_par_iter()
        .map(|p| {
            let rows: Vec<Vec<T>> = grads
                .iter()
                .map(|g| (0..n).map(|a| g[a][p]).collect())
                .collect();
            let refs: Vec<&[T]> = rows.iter().map(|r| r.as_slice()).collect();
            small_det(&refs) / rho[p]
        })
        .collect();
    GridField {
        shape: mf.grid().shape(),
        values,
    }
}

/// Brackets `{x^{K}}` of the embedding over increasing n-tuples `K`.
pub(crate) fn full_brackets<T: Real>(mf: &EmbeddedManifold<T>) -> (Vec<Vec<usize>>, Vec<Vec<T>>) {
    let tuples = increasing_tuples(mf.m(), mf.n());
    let vals = tuples
        .iter()
        .map(|k| {
            let grads: Vec<Vec<Vec<T>>> = k.iter().map(|&i| mf.geo.dx[i].clone()).collect();
            bracket_of_gradients(mf, &grads).values
        })
        .collect();
    (tuples, vals)
}

/// `{x^i, x̄^I}` for every ambient `i` and increasing (n−1)-tuple `I`: `xb[i][t]`.
pub(crate) fn coordinate_brackets<T: Real>(mf: &EmbeddedManifold<T>) -> Vec<Vec<Vec<T>>> {
    mf.geo.dx.iter().map(|d| mf.geo.contract(d)).collect()
}

/// `γ² = Σ_K {x^K}²` over increasing n-tuples (the bracket route).
pub(crate) fn gamma_squared<T: Real>(mf: &EmbeddedManifold<T>) -> Vec<T> {
    let (_, b) = full_brackets(mf);
    (0..mf.grid().len())
        .into_par_iter()
        .map(|p| b.iter().map(|v| v[p] * v[p]).sum())
        .collect()
}

/// γ by the bracket route, cross-checked against `√det g / ρ`.
pub fn gamma_field<T: Real>(mf: &EmbeddedManifold<T>) -> Result<GridField<T>> {
    let g2 = gamma_squared(mf);
    let gamma: Vec<T> = g2.iter().map(|v| v.sqrt()).collect();
    let n = mf.n();
    let g = mf.metric();
    let rho = &mf.rho().values;
    let region = mf.region();
    let metric_route: Vec<T> = (0..mf.grid().len())
        .into_par_iter()
        .map(|p| {
            let rows: Vec<Vec<T>> = (0..n)
                .map(|a| (0..n).map(|b| g[a * n + b][p]).collect())
                .collect();
            let refs: Vec<&[T]> = rows.iter().map(|r| r.as_slice()).collect();
            small_det(&refs).max(T::zero()).sqrt() / rho[p]
        })
        .collect();
    let mut worst = T::zero();
    let mut scale = T::zero();
    for p in (0..gamma.len()).filter(|&p| region[p]) {
        worst = worst.max((gamma[p] - metric_route[p]).abs());
        scale = scale.max(gamma[p]);
    }
    let h = mf.spacing();
    let limit = (T::lit(100.0) * h.powi(mf.grid().order().order() as i32)).max(T::tol(1e-10))
        * scale.max(T::one());
    if worst > limit {
        return Err(Error::CrossCheck {
            what: "gamma: bracket vs metric route",
            defect: worst.to_f64_lossy(),
            limit: limit.to_f64_lossy(),
        });
    }
    if let Some(p) = (0..gamma.len()).find(|&p| region[p] && !(gamma[p] > T::zero())) {
        return Err(Error::Degenerate(format!(
            "gamma vanishes at grid point {p}"
        )));
    }
    Ok(GridField {
        shape: mf.grid().shape(),
        values: gamma,
    })
}

/// `(P²)^{ik} = (1/(n−1)!) Σ_I {x^i, x̄^I}{x^k, x̄^I}`.
pub(crate) fn p_squared<T: Real>(mf: &EmbeddedManifold<T>, xb: &[Vec<Vec<T>>]) -> MatrixField<T> {
    MatrixField::from_fn(mf.m(), mf.grid().len(), |p, i, k| {
        xb[i].iter().zip(&xb[k]).map(|(a, b)| a[p] * b[p]).sum()
    })
}

/// Tangent projection `Π_T = γ⁻² P²` at every point.
pub fn tangent_projection<T: Real>(mf: &EmbeddedManifold<T>) -> Result<MatrixField<T>> {
    let gamma = gamma_field(mf)?;
    let xb = coordinate_brackets(mf);
    let p2 = p_squared(mf, &xb);
    let m = mf.m();
    Ok(MatrixField::from_fn(m, mf.grid().len(), |p, i, k| {
        p2.entry(p, i, k) / gamma.values[p].powi(2)
    }))
}

/// Pointwise algebraic defects of `Π_T`, maxima over the evaluation region.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct ProjectionDefects<T> {
    /// `‖Π² − Π‖_F`
    pub idempotency: T,
    /// `‖Π − Πᵀ‖_F`
    pub symmetry: T,
    /// `|Tr Π − n|`
    pub trace: T,
}

pub fn projection_defects<T: Real>(
    mf: &EmbeddedManifold<T>,
    pi: &MatrixField<T>,
) -> ProjectionDefects<T> {
    let m = pi.dim;
    let n = T::from_usize_lossy(mf.n());
    let mut d = ProjectionDefects {
        idempotency: T::zero(),
        symmetry: T::zero(),
        trace: T::zero(),
    };
    for p in (0..pi.len()).filter(|&p| mf.region()[p]) {
        let a = pi.at(p);
        let sq = super::small::matmul(m, a, a);
        d.idempotency = d.idempotency.max(super::small::frob_diff(&sq, a));
        let at: Vec<T> = (0..m * m).map(|k| a[(k % m) * m + k / m]).collect();
        d.symmetry = d.symmetry.max(super::small::frob_diff(a, &at));
        let tr: T = (0..m).map(|i| a[i * m + i]).sum();
        d.trace = d.trace.max((tr - n).abs());
    }
    d
}

/// Normal frame from the bracket vectors `Z_α` and their Gram matrix.
#[derive(Clone, Debug)]
pub struct NormalFrame<T> {
    /// Increasing (p−1)-tuples labelling `Z_α`.
    pub alphas: Vec<Vec<usize>>,
    /// `z_raw[α][j]`
    pub z_raw: Vec<Vec<GridField<T>>>,
    /// Largest distance of a Gram eigenvalue from {0, 1}.
    pub gram_eigen_defect: T,
    /// Largest `‖𝒵² − 𝒵‖_F`.
    pub gram_idempotency_defect: T,
    /// Largest `|Tr 𝒵 − p|`.
    pub count_check: T,
    /// `orthonormal[A][j]`: the aligned unit normals.
    pub orthonormal: Vec<Vec<GridField<T>>>,
    /// Largest `|N̂_A · N̂_B − δ_AB|`.
    pub orthonormality_defect: T,
    /// Largest `|N̂_A · ∂_a x| / |∂_a x|`.
    pub tangency_defect: T,
}

impl<T: Real> NormalFrame<T> {
    /// Normal `A` at point `p` as an ambient vector.
    pub fn normal_at(&self, a: usize, p: usize) -> Vec<T> {
        self.orthonormal[a].iter().map(|f| f.values[p]).collect()
    }
}

fn permutation_sign(seq: &[usize]) -> i32 {
    let mut s = 1;
    for i in 0..seq.len() {
        for j in i + 1..seq.len() {
            if seq[i] > seq[j] {
                s = -s;
            }
        }
    }
    s
}

/// `Z_α = (1/(γ n! √((p−1)!))) ε_{j k₁…k_n α}{x^{k₁},…,x^{k_n}}`, eigen-orthonormalized
/// and aligned breadth-first from the first evaluation point.
pub fn normal_frame<T: Real>(mf: &EmbeddedManifold<T>) -> Result<NormalFrame<T>> {
    let (m, n) = (mf.m(), mf.n());
    let p_codim = m - n;
    let len = mf.grid().len();
    let shape = mf.grid().shape();
    let gamma = gamma_field(mf)?;
    let (ktuples, kbr) = full_brackets(mf);
    let alphas = increasing_tuples(m, p_codim - 1);
    // Summing over ordered k's and α's cancels the n! and √((p−1)!) factors
    // against increasing tuples.
    let mut z_raw = Vec::with_capacity(alphas.len());
    for alpha in &alphas {
        let mut comps = Vec::with_capacity(m);
        for j in 0..m {
            let mut terms: Vec<(usize, T)> = Vec::new();
            if !alpha.contains(&j) {
                for (t, k) in ktuples.iter().enumerate() {
                    if k.contains(&j) || k.iter().any(|x| alpha.contains(x)) {
                        continue;
                    }
                    let mut seq = vec![j];
                    seq.extend(k);
                    seq.extend(alpha);
                    terms.push((t, T::from_i32(permutation_sign(&seq)).expect("±1")));
                }
            }
            let values = (0..len)
                .into_par_iter()
                .map(|p| terms.iter().map(|&(t, s)| s * kbr[t][p]).sum::<T>() / gamma.values[p])
                .collect();
            comps.push(GridField {
                shape: shape.clone(),
                values,
            });
        }
        z_raw.push(comps);
    }
    let na = alphas.len();
    let region = mf.region();
    let half = T::lit(0.5);

    struct Local<T> {
        eigen: T,
        idem: T,
        count: T,
        normals: Vec<Vec<T>>,
        midgap: Option<T>,
    }
    let locals: Vec<Local<T>> = (0..len)
        .into_par_iter()
        .map(|p| {
            let mut g = vec![T::zero(); na * na];
            for a in 0..na {
                for b in 0..na {
                    g[a * na + b] = (0..m)
                        .map(|j| z_raw[a][j].values[p] * z_raw[b][j].values[p])
                        .sum();
                }
            }
            let (vals, vecs) = sym_eig(na, &g);
            let g2 = super::small::matmul(na, &g, &g);
            let idem = super::small::frob_diff(&g2, &g);
            let count =
                ((0..na).map(|a| g[a * na + a]).sum::<T>() - T::from_usize_lossy(p_codim)).abs();
            let eigen = vals
                .iter()
                .map(|&l| l.abs().min((l - T::one()).abs()))
                .fold(T::zero(), T::max);
            let midgap = vals
                .iter()
                .copied()
                .find(|&l| l >= T::lit(0.25) && l <= T::lit(0.75));
            let normals = (na - p_codim..na)
                .map(|c| {
                    let scale = T::one() / vals[c].max(half).sqrt();
                    (0..m)
                        .map(|j| {
                            (0..na)
                                .map(|b| vecs[b * na + c] * z_raw[b][j].values[p])
                                .sum::<T>()
                                * scale
                        })
                        .collect()
                })
                .collect();
            Local {
                eigen,
                idem,
                count,
                normals,
                midgap,
            }
        })
        .collect();

    let mut frame = NormalFrame {
        alphas,
        z_raw,
        gram_eigen_defect: T::zero(),
        gram_idempotency_defect: T::zero(),
        count_check: T::zero(),
        orthonormal: Vec::new(),
        orthonormality_defect: T::zero(),
        tangency_defect: T::zero(),
    };
    for (p, l) in locals.iter().enumerate() {
        if let Some(v) = l.midgap {
            return Err(Error::GramMidGap {
                value: v.to_f64_lossy(),
                point: p,
            });
        }
        if region[p] {
            frame.gram_eigen_defect = frame.gram_eigen_defect.max(l.eigen);
            frame.gram_idempotency_defect = frame.gram_idempotency_defect.max(l.idem);
            frame.count_check = frame.count_check.max(l.count);
        }
    }

    // breadth-first alignment, each point against the point it was reached from
    let mut aligned: Vec<Option<Vec<Vec<T>>>> = vec![None; len];
    let seed = (0..len).find(|&p| region[p]).unwrap_or(0);
    let mut queue = VecDeque::new();
    aligned[seed] = Some(locals[seed].normals.clone());
    queue.push_back(seed);
    while let Some(p) = queue.pop_front() {
        let parent = aligned[p].clone().expect("visited");
        for q in mf.grid().neighbours(p) {
            if aligned[q].is_some() {
                continue;
            }
            let raw = &locals[q].normals;
            let mut mm = vec![T::zero(); p_codim * p_codim];
            for a in 0..p_codim {
                for b in 0..p_codim {
                    mm[a * p_codim + b] = (0..m).map(|j| raw[a][j] * parent[b][j]).sum();
                }
            }
            let rot = if p_codim == 1 {
                vec![mm[0].signum()]
            } else {
                polar_factor(p_codim, &mm)
            };
            let new: Vec<Vec<T>> = (0..p_codim)
                .map(|b| {
                    (0..m)
                        .map(|j| (0..p_codim).map(|a| raw[a][j] * rot[a * p_codim + b]).sum())
                        .collect()
                })
                .collect();
            aligned[q] = Some(new);
            queue.push_back(q);
        }
    }
    let aligned: Vec<Vec<Vec<T>>> = aligned
        .into_iter()
        .map(|a| a.expect("grid is connected"))
        .collect();
    frame.orthonormal = (0..p_codim)
        .map(|a| {
            (0..m)
                .map(|j| GridField {
                    shape: shape.clone(),
                    values: aligned.iter().map(|v| v[a][j]).collect(),
                })
                .collect()
        })
        .collect();

    for p in (0..len).filter(|&p| region[p]) {
        let nv = &aligned[p];
        for a in 0..p_codim {
            for b in 0..p_codim {
                let dot: T = (0..m).map(|j| nv[a][j] * nv[b][j]).sum();
                let want = if a == b { T::one() } else { T::zero() };
                frame.orthonormality_defect = frame.orthonormality_defect.max((dot - want).abs());
            }
            for ax in 0..n {
                let e = mf.tangent(ax, p);
                let en = e.iter().map(|x| *x * *x).sum::<T>().sqrt();
                let dot: T = (0..m).map(|j| nv[a][j] * e[j]).sum();
                frame.tangency_defect = frame.tangency_defect.max(dot.abs() / en);
            }
        }
    }
    Ok(frame)
}
