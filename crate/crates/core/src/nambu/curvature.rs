//! Curvature from nested brackets.

use rayon::prelude::*;
use serde::Serialize;

use super::bracket::{
    coordinate_brackets, gamma_field, normal_frame, p_squared, MatrixField, NormalFrame,
};
use super::grid::{Grid, GridField};
use super::manifold::EmbeddedManifold;
use crate::error::{Error, Result};
use crate::scalar::Real;

fn need_n<T: Real>(mf: &EmbeddedManifold<T>, op: &'static str, n: usize) -> Result<()> {
    if mf.n() != n {
        return Err(Error::WrongDimension {
            op,
            expected: format!("n = {n}"),
            found: format!("n = {}", mf.n()),
        });
    }
    Ok(())
}

fn field<T: Real>(mf: &EmbeddedManifold<T>, values: Vec<T>) -> GridField<T> {
    GridField {
        shape: mf.grid().shape(),
        values,
    }
}

fn pointwise<T: Real>(len: usize, f: impl Fn(usize) -> T + Sync) -> Vec<T> {
    (0..len).into_par_iter().map(&f).collect()
}

/// `K = γ⁻⁴(½ Σ_j A_j A_j − ¼ Σ_{jkl} C_{jkl}²)` with `C_{jkl} = {{x^j,x^k},x^l}`
/// and `A_j = Σ_k C_{jkk}`.
pub fn gauss_curvature_poisson<T: Real>(mf: &EmbeddedManifold<T>) -> Result<GridField<T>> {
    need_n(mf, "gauss_curvature_poisson", 2)?;
    let m = mf.m();
    let len = mf.grid().len();
    let gamma = gamma_field(mf)?;
    let xb = coordinate_brackets(mf);
    // c[j][k][l] = {{x^j, x^k}, x^l}; for n = 2 the tuple index is the ambient index
    let c: Vec<Vec<Vec<Vec<T>>>> = (0..m)
        .map(|j| (0..m).map(|k| mf.brackets_with_tuples(&xb[j][k])).collect())
        .collect();
    let values = pointwise(len, |p| {
        let mut a2 = T::zero();
        let mut c2 = T::zero();
        for cj in &c {
            let aj: T = (0..m).map(|k| cj[k][k][p]).sum();
            a2 += aj * aj;
            for ck in cj {
                for cl in ck {
                    c2 += cl[p] * cl[p];
                }
            }
        }
        (T::lit(0.5) * a2 - T::lit(0.25) * c2) / gamma.values[p].powi(4)
    });
    Ok(field(mf, values))
}

/// `S^k = Σ_I {{x^k, x̄^I}, x̄^I}` and `V^k_{JI} = {{x^k, x̄^J}, x̄^I}` over increasing tuples.
fn second_brackets<T: Real>(mf: &EmbeddedManifold<T>, xb: &[Vec<Vec<T>>]) -> Vec<Vec<Vec<Vec<T>>>> {
    xb.iter()
        .map(|xk| xk.iter().map(|xkj| mf.brackets_with_tuples(xkj)).collect())
        .collect()
}

fn normal_projector<T: Real>(
    mf: &EmbeddedManifold<T>,
    p2: &MatrixField<T>,
    gamma: &GridField<T>,
) -> MatrixField<T> {
    MatrixField::from_fn(mf.m(), mf.grid().len(), |p, i, k| {
        let d = if i == k { T::one() } else { T::zero() };
        d - p2.entry(p, i, k) / gamma.values[p].powi(2)
    })
}

/// `H^i = (1/Tr P²)((−1)ⁿ/(n−1)!) Π^{ik} Σ_I {{x^k, x̄^I}, x̄^I}` with `Π = δ − γ⁻²P²`.
pub fn mean_curvature_poisson<T: Real>(mf: &EmbeddedManifold<T>) -> Result<Vec<GridField<T>>> {
    let m = mf.m();
    let len = mf.grid().len();
    let gamma = gamma_field(mf)?;
    let xb = coordinate_brackets(mf);
    let p2 = p_squared(mf, &xb);
    let pi = normal_projector(mf, &p2, &gamma);
    let v = second_brackets(mf, &xb);
    let sign = if mf.n() % 2 == 0 { T::one() } else { -T::one() };
    let nt = xb[0].len();
    let s: Vec<Vec<T>> = (0..m)
        .map(|k| pointwise(len, |p| (0..nt).map(|t| v[k][t][t][p]).sum()))
        .collect();
    Ok((0..m)
        .map(|i| {
            field(
                mf,
                pointwise(len, |p| {
                    let tr: T = (0..m).map(|k| p2.entry(p, k, k)).sum();
                    sign * (0..m).map(|k| pi.entry(p, i, k) * s[k][p]).sum::<T>() / tr
                }),
            )
        })
        .collect())
}

/// Scalar curvature in flat ambient space, with both evaluation routes.
#[derive(Clone, Debug)]
pub struct RicciScalar<T> {
    /// `γ⁻⁴ Σ_A [(Tr B_A)² − Tr B_A²]` from the aligned normal frame.
    pub frame_route: GridField<T>,
    /// Frame-free route through `Π = δ − γ⁻²P²`.
    pub projector_route: GridField<T>,
    /// Largest difference between the routes on the evaluation region.
    pub route_difference: T,
}

/// `R = γ⁻⁴ Σ_A [(Tr B_A)² − Tr B_A²]`, `B_A^{ik} = ((−1)ⁿ/(n−1)!){x^i, x̄^I}{x̄^I, n_A^k}`.
pub fn ricci_scalar_flat<T: Real>(mf: &EmbeddedManifold<T>) -> Result<RicciScalar<T>> {
    let frame = normal_frame(mf)?;
    ricci_scalar_with_frame(mf, &frame)
}

pub fn ricci_scalar_with_frame<T: Real>(
    mf: &EmbeddedManifold<T>,
    frame: &NormalFrame<T>,
) -> Result<RicciScalar<T>> {
    if frame.orthonormal.is_empty() {
        return Err(Error::MissingNormals);
    }
    let m = mf.m();
    let len = mf.grid().len();
    let gamma = gamma_field(mf)?;
    let xb = coordinate_brackets(mf);
    let nt = xb[0].len();

    // {n_A^k, x̄^I}; the sign flip to {x̄^I, n_A^k} combines with (−1)ⁿ into an overall −1
    let nb: Vec<Vec<Vec<Vec<T>>>> = frame
        .orthonormal
        .iter()
        .map(|na| {
            na.iter()
                .map(|nk| mf.brackets_with_tuples(&nk.values))
                .collect()
        })
        .collect();
    let frame_route = pointwise(len, |p| {
        let mut acc = T::zero();
        for nba in &nb {
            let b = |i: usize, k: usize| -(0..nt).map(|t| xb[i][t][p] * nba[k][t][p]).sum::<T>();
            let tr: T = (0..m).map(|i| b(i, i)).sum();
            let mut tr2 = T::zero();
            for i in 0..m {
                for k in 0..m {
                    tr2 += b(i, k) * b(k, i);
                }
            }
            acc += tr * tr - tr2;
        }
        acc / gamma.values[p].powi(4)
    });

    let p2 = p_squared(mf, &xb);
    let pi = normal_projector(mf, &p2, &gamma);
    let v = second_brackets(mf, &xb);
    let projector_route = pointwise(len, |p| {
        let s: Vec<T> = (0..m)
            .map(|k| (0..nt).map(|t| v[k][t][t][p]).sum())
            .collect();
        let mut first = T::zero();
        for j in 0..m {
            for k in 0..m {
                first += pi.entry(p, j, k) * s[j] * s[k];
            }
        }
        let mut second = T::zero();
        for tj in 0..nt {
            for ti in 0..nt {
                // (Π V_{JI}) · V_{IJ}
                for k in 0..m {
                    let pv: T = (0..m).map(|i| pi.entry(p, k, i) * v[i][ti][tj][p]).sum();
                    second += v[k][tj][ti][p] * pv;
                }
            }
        }
        (first - second) / gamma.values[p].powi(4)
    });
    let region = mf.region();
    let route_difference = (0..len)
        .filter(|&p| region[p])
        .map(|p| (frame_route[p] - projector_route[p]).abs())
        .fold(T::zero(), T::max);
    if mf.n() == 2 {
        let k = gauss_curvature_poisson(mf)?;
        let (mut worst, mut scale) = (T::zero(), T::one());
        for p in (0..len).filter(|&p| region[p]) {
            worst = worst.max((frame_route[p] - (k.values[p] + k.values[p])).abs());
            scale = scale.max(k.values[p].abs());
        }
        let limit = (T::lit(100.0) * mf.spacing().powi(2)).max(T::tol(1e-8)) * scale;
        if worst > limit {
            return Err(Error::CrossCheck {
                what: "ricci: R vs 2K",
                defect: worst.to_f64_lossy(),
                limit: limit.to_f64_lossy(),
            });
        }
    }
    Ok(RicciScalar {
        frame_route: field(mf, frame_route),
        projector_route: field(mf, projector_route),
        route_difference,
    })
}

fn binomial(n: usize, k: usize) -> usize {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn ordered_distinct(m: usize, n: usize) -> Vec<Vec<usize>> {
    fn rec(m: usize, n: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for i in 0..m {
            if !cur.contains(&i) {
                cur.push(i);
                rec(m, n, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    rec(m, n, &mut Vec::new(), &mut out);
    out
}

/// k-th elementary symmetric function of the principal curvatures of a
/// hypersurface: `C(n,k)(−1)^k Σ{x^{i₁…i_n}}{n^{i₁…i_k}, x^{i_{k+1}…i_n}} / Σ{x^{i₁…i_n}}²`.
pub fn hypersurface_weingarten<T: Real>(
    mf: &EmbeddedManifold<T>,
    k: usize,
) -> Result<GridField<T>> {
    let frame = normal_frame(mf)?;
    hypersurface_weingarten_with_frame(mf, &frame, k)
}

pub fn hypersurface_weingarten_with_frame<T: Real>(
    mf: &EmbeddedManifold<T>,
    frame: &NormalFrame<T>,
    k: usize,
) -> Result<GridField<T>> {
    let (m, n) = (mf.m(), mf.n());
    if m - n != 1 {
        return Err(Error::WrongDimension {
            op: "hypersurface_weingarten",
            expected: "p = 1".into(),
            found: format!("p = {}", m - n),
        });
    }
    if k == 0 || k > n {
        return Err(Error::InvalidArgument(format!(
            "k must lie in 1..={n}, got {k}"
        )));
    }
    let len = mf.grid().len();
    let grid = mf.grid();
    let dn: Vec<Vec<Vec<T>>> = frame.orthonormal[0]
        .iter()
        .map(|f| grid.gradient(&f.values))
        .collect();
    let dx = &mf.geo.dx;
    let rho = &mf.rho().values;
    let tuples = ordered_distinct(m, n);
    let factor =
        T::from_usize_lossy(binomial(n, k)) * if k % 2 == 0 { T::one() } else { -T::one() };
    let values = pointwise(len, |p| {
        let mut num = T::zero();
        let mut den = T::zero();
        for t in &tuples {
            let rx: Vec<Vec<T>> = t
                .iter()
                .map(|&i| (0..n).map(|a| dx[i][a][p]).collect())
                .collect();
            let rm: Vec<Vec<T>> = t
                .iter()
                .enumerate()
                .map(|(r, &i)| {
                    (0..n)
                        .map(|a| if r < k { dn[i][a][p] } else { dx[i][a][p] })
                        .collect()
                })
                .collect();
            let bx =
                super::manifold::small_det(&rx.iter().map(|r| r.as_slice()).collect::<Vec<_>>())
                    / rho[p];
            let bm =
                super::manifold::small_det(&rm.iter().map(|r| r.as_slice()).collect::<Vec<_>>())
                    / rho[p];
            num += bx * bm;
            den += bx * bx;
        }
        factor * num / den
    });
    Ok(field(mf, values))
}

/// Codazzi–Mainardi residuals for a surface in ℝ³.
#[derive(Clone, Debug)]
pub struct CodazziResidual<T> {
    /// `max_i |Σ_k {γ⁻²(P²)^{ik}, n^k}|`
    pub projector_form: GridField<T>,
    /// `max_i |Σ_{jk} {γ⁻²{x^i,x^j}{x^j,n^k}, x^k}|`
    pub raw_form: GridField<T>,
}

impl<T: Real> CodazziResidual<T> {
    pub fn max_on(&self, mask: &[bool]) -> T {
        self.projector_form
            .max_abs_on(Some(mask))
            .max(self.raw_form.max_abs_on(Some(mask)))
    }
}

pub(crate) fn bracket2<T: Real>(grid: &Grid<T>, rho: &[T], f: &[T], g: &[T]) -> Vec<T> {
    let (f1, f2) = (grid.partial(f, 0), grid.partial(f, 1));
    let (g1, g2) = (grid.partial(g, 0), grid.partial(g, 1));
    pointwise(f.len(), |p| (f1[p] * g2[p] - f2[p] * g1[p]) / rho[p])
}

fn codazzi_fields<T: Real>(
    grid: &Grid<T>,
    rho: &[T],
    x: &[&[T]],
    nrm: &[&[T]],
    gamma: &[T],
) -> CodazziResidual<T> {
    let len = grid.len();
    let xx: Vec<Vec<Vec<T>>> = (0..3)
        .map(|i| (0..3).map(|j| bracket2(grid, rho, x[i], x[j])).collect())
        .collect();
    let xn: Vec<Vec<Vec<T>>> = (0..3)
        .map(|j| (0..3).map(|k| bracket2(grid, rho, x[j], nrm[k])).collect())
        .collect();
    let mut proj = vec![T::zero(); len];
    let mut raw = vec![T::zero(); len];
    for i in 0..3 {
        let mut ri = vec![T::zero(); len];
        let mut wi = vec![T::zero(); len];
        for k in 0..3 {
            let a: Vec<T> = pointwise(len, |p| {
                (0..3).map(|j| xx[i][j][p] * xx[k][j][p]).sum::<T>() / gamma[p].powi(2)
            });
            let b = bracket2(grid, rho, &a, nrm[k]);
            let c: Vec<T> = pointwise(len, |p| {
                (0..3).map(|j| xx[i][j][p] * xn[j][k][p]).sum::<T>() / gamma[p].powi(2)
            });
            let d = bracket2(grid, rho, &c, x[k]);
            for p in 0..len {
                ri[p] += b[p];
                wi[p] += d[p];
            }
        }
        for p in 0..len {
            proj[p] = proj[p].max(ri[p].abs());
            raw[p] = raw[p].max(wi[p].abs());
        }
    }
    let shape = grid.shape();
    CodazziResidual {
        projector_form: GridField {
            shape: shape.clone(),
            values: proj,
        },
        raw_form: GridField { shape, values: raw },
    }
}

/// Codazzi–Mainardi residual of a surface in ℝ³ with its aligned unit normal.
pub fn codazzi_residual<T: Real>(mf: &EmbeddedManifold<T>) -> Result<CodazziResidual<T>> {
    if mf.n() != 2 || mf.m() != 3 {
        return Err(Error::WrongDimension {
            op: "codazzi_residual",
            expected: "n = 2, m = 3".into(),
            found: format!("n = {}, m = {}", mf.n(), mf.m()),
        });
    }
    let frame = normal_frame(mf)?;
    let gamma = gamma_field(mf)?;
    let x: Vec<&[T]> = mf.embedding().iter().map(|f| f.values.as_slice()).collect();
    let nrm: Vec<&[T]> = frame.orthonormal[0]
        .iter()
        .map(|f| f.values.as_slice())
        .collect();
    Ok(codazzi_fields(
        mf.grid(),
        &mf.rho().values,
        &x,
        &nrm,
        &gamma.values,
    ))
}

/// Codazzi residual for three arbitrary fields on a 2-d grid with an arbitrary
/// density, using `n^i = (1/2γ) ε_{ijk}{x^j, x^k}` and `γ² = ½ Σ {x^i, x^j}²`.
pub fn codazzi_poisson_probe<T: Real>(
    grid: &Grid<T>,
    x: [&GridField<T>; 3],
    rho: &GridField<T>,
) -> Result<CodazziResidual<T>> {
    if grid.dim() != 2 {
        return Err(Error::WrongDimension {
            op: "codazzi_poisson_probe",
            expected: "2-d grid".into(),
            found: format!("{}-d grid", grid.dim()),
        });
    }
    for f in x.iter().copied().chain(std::iter::once(rho)) {
        if f.values.len() != grid.len() {
            return Err(Error::DimensionMismatch {
                expected: grid.len(),
                found: f.values.len(),
            });
        }
    }
    let len = grid.len();
    let r = &rho.values;
    let b01 = bracket2(grid, r, &x[0].values, &x[1].values);
    let b12 = bracket2(grid, r, &x[1].values, &x[2].values);
    let b20 = bracket2(grid, r, &x[2].values, &x[0].values);
    let gamma: Vec<T> = pointwise(len, |p| {
        (b01[p].powi(2) + b12[p].powi(2) + b20[p].powi(2)).sqrt()
    });
    if let Some(p) = (0..len).find(|&p| !(gamma[p] > T::zero())) {
        return Err(Error::Degenerate(format!(
            "gamma vanishes at grid point {p}"
        )));
    }
    let nrm: Vec<Vec<T>> = [&b12, &b20, &b01]
        .iter()
        .map(|b| pointwise(len, |p| b[p] / gamma[p]))
        .collect();
    let xs: Vec<&[T]> = x.iter().map(|f| f.values.as_slice()).collect();
    let ns: Vec<&[T]> = nrm.iter().map(|v| v.as_slice()).collect();
    Ok(codazzi_fields(grid, r, &xs, &ns, &gamma))
}

/// Normalization of the candidate complex structure built from `P^{ij} = {x^i, x^j}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum JScaling {
    /// `J = γ⁻¹P`
    #[default]
    InverseGamma,
    /// `J = γP`
    Gamma,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct ComplexStructureDefects<T> {
    /// `max ‖J² + Π_T‖_F`
    pub j_squared: T,
    /// `max |J N| / |N|` over the unit normals
    pub normal_annihilation: T,
    /// `max |J(e_a)·e_a| / |e_a|²`
    pub orthogonality: T,
}

impl<T: Real> ComplexStructureDefects<T> {
    pub fn max(&self) -> T {
        self.j_squared
            .max(self.normal_annihilation)
            .max(self.orthogonality)
    }
}

pub fn complex_structure_check<T: Real>(
    mf: &EmbeddedManifold<T>,
) -> Result<ComplexStructureDefects<T>> {
    complex_structure_check_scaled(mf, JScaling::InverseGamma)
}

pub fn complex_structure_check_scaled<T: Real>(
    mf: &EmbeddedManifold<T>,
    scaling: JScaling,
) -> Result<ComplexStructureDefects<T>> {
    need_n(mf, "complex_structure_check", 2)?;
    let m = mf.m();
    let gamma = gamma_field(mf)?;
    let xb = coordinate_brackets(mf);
    let frame = normal_frame(mf)?;
    let p2 = p_squared(mf, &xb);
    let region = mf.region();
    let per_point: Vec<(T, T, T)> = (0..mf.grid().len())
        .into_par_iter()
        .filter(|&p| region[p])
        .map(|p| {
            let g = gamma.values[p];
            let s = match scaling {
                JScaling::InverseGamma => T::one() / g,
                JScaling::Gamma => g,
            };
            let j: Vec<T> = (0..m * m).map(|e| s * xb[e / m][e % m][p]).collect();
            let jj = super::small::matmul(m, &j, &j);
            let mut d2 = T::zero();
            for i in 0..m {
                for k in 0..m {
                    d2 += (jj[i * m + k] + p2.entry(p, i, k) / (g * g)).powi(2);
                }
            }
            let mut ann = T::zero();
            for a in 0..frame.orthonormal.len() {
                let nv = frame.normal_at(a, p);
                let jn: T = (0..m)
                    .map(|i| (0..m).map(|k| j[i * m + k] * nv[k]).sum::<T>().powi(2))
                    .sum();
                ann = ann.max(jn.sqrt());
            }
            let mut orth = T::zero();
            for a in 0..2 {
                let e = mf.tangent(a, p);
                let ee: T = e.iter().map(|v| *v * *v).sum();
                let dot: T = (0..m)
                    .map(|i| e[i] * (0..m).map(|k| j[i * m + k] * e[k]).sum::<T>())
                    .sum();
                orth = orth.max(dot.abs() / ee);
            }
            (d2.sqrt(), ann, orth)
        })
        .collect();
    Ok(per_point.iter().fold(
        ComplexStructureDefects {
            j_squared: T::zero(),
            normal_annihilation: T::zero(),
            orthogonality: T::zero(),
        },
        |acc, &(a, b, c)| ComplexStructureDefects {
            j_squared: acc.j_squared.max(a),
            normal_annihilation: acc.normal_annihilation.max(b),
            orthogonality: acc.orthogonality.max(c),
        },
    ))
}
