//! Parametrized embedded manifolds sampled on a grid, presets and the JSON
//! manifold description.

use std::f64::consts::PI;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};

use super::grid::{Axis, Grid, GridField, StencilOrder};
use crate::error::{Error, Result};
use crate::scalar::Real;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Preset {
    Sphere,
    TorusRev,
    Clifford,
    Ellipsoid,
    Sphere3,
    Custom,
}

impl Preset {
    pub fn name(self) -> &'static str {
        match self {
            Preset::Sphere => "sphere",
            Preset::TorusRev => "torus_rev",
            Preset::Clifford => "clifford",
            Preset::Ellipsoid => "ellipsoid",
            Preset::Sphere3 => "sphere3",
            Preset::Custom => "custom",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        serde_json::from_value(Value::String(s.to_owned()))
            .map_err(|_| Error::InvalidArgument(format!("unknown preset '{s}'")))
    }

    /// Intrinsic dimension.
    pub fn intrinsic_dim(self) -> usize {
        if self == Preset::Sphere3 {
            3
        } else {
            2
        }
    }

    /// Default chart axes for a given number of points per axis.
    pub fn default_axes(self, size: usize) -> Vec<AxisSpec> {
        let polar = AxisSpec {
            size,
            periodic: Some(false),
            range: Some([0.1, PI - 0.1]),
        };
        let angle = AxisSpec {
            size,
            periodic: Some(true),
            range: Some([0.0, 2.0 * PI]),
        };
        match self {
            Preset::Sphere | Preset::Ellipsoid => vec![polar, angle],
            Preset::Sphere3 => vec![polar.clone(), polar, angle],
            Preset::TorusRev | Preset::Clifford | Preset::Custom => vec![angle.clone(), angle],
        }
    }
}

/// Density choice: `sqrt_g` makes γ = 1, `one` is the flat parameter density.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RhoKind {
    SqrtG,
    #[default]
    One,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AxisSpec {
    pub size: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub periodic: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub range: Option<[f64; 2]>,
}

/// JSON manifold description.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ManifoldSpec {
    pub preset: Preset,
    #[serde(default)]
    pub params: Map<String, Value>,
    #[serde(default)]
    pub grid: Vec<AxisSpec>,
    #[serde(default)]
    pub rho: RhoKind,
    #[serde(default)]
    pub stencil: StencilOrder,
}

impl ManifoldSpec {
    pub fn preset(preset: Preset, size: usize) -> Self {
        ManifoldSpec {
            preset,
            params: Map::new(),
            grid: preset.default_axes(size),
            rho: RhoKind::One,
            stencil: StencilOrder::Second,
        }
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    /// Same manifold with every axis resized to `size`.
    pub fn with_size(&self, size: usize) -> Self {
        let mut out = self.clone();
        if out.grid.is_empty() {
            out.grid = self.preset.default_axes(size);
        }
        for a in &mut out.grid {
            a.size = size;
        }
        out
    }

    fn param(&self, key: &str, default: f64) -> Result<f64> {
        match self.params.get(key) {
            None => Ok(default),
            Some(v) => v.as_f64().filter(|x| x.is_finite()).ok_or_else(|| {
                Error::InvalidArgument(format!("parameter '{key}' must be a finite number"))
            }),
        }
    }

    pub fn build<T: Real>(&self) -> Result<EmbeddedManifold<T>> {
        EmbeddedManifold::from_spec(self)
    }
}

/// One term `a_cos·cos(m1 u¹ + m2 u²) + a_sin·sin(m1 u¹ + m2 u²)` of component `component`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct FourierTerm {
    pub component: usize,
    pub m1: i64,
    pub m2: i64,
    pub a_cos: f64,
    pub a_sin: f64,
}

fn parse_terms(params: &Map<String, Value>) -> Result<(usize, Vec<FourierTerm>)> {
    let bad = |msg: &str| Error::InvalidArgument(format!("custom preset: {msg}"));
    let m = params
        .get("ambient")
        .and_then(Value::as_u64)
        .ok_or_else(|| bad("'ambient' must be a positive integer"))? as usize;
    if m < 3 {
        return Err(bad("'ambient' must be at least 3"));
    }
    let arr = params
        .get("terms")
        .and_then(Value::as_array)
        .ok_or_else(|| bad("'terms' must be an array"))?;
    let mut out = Vec::with_capacity(arr.len());
    for t in arr {
        let t = t
            .as_array()
            .filter(|t| t.len() == 5)
            .ok_or_else(|| bad("each term is [component, m1, m2, a_cos, a_sin]"))?;
        let component = t[0]
            .as_u64()
            .ok_or_else(|| bad("component must be an integer"))? as usize;
        if component >= m {
            return Err(bad("component out of range"));
        }
        let m1 = t[1].as_i64().ok_or_else(|| bad("m1 must be an integer"))?;
        let m2 = t[2].as_i64().ok_or_else(|| bad("m2 must be an integer"))?;
        let a_cos = t[3].as_f64().ok_or_else(|| bad("a_cos must be a number"))?;
        let a_sin = t[4].as_f64().ok_or_else(|| bad("a_sin must be a number"))?;
        out.push(FourierTerm {
            component,
            m1,
            m2,
            a_cos,
            a_sin,
        });
    }
    Ok((m, out))
}

/// Precomputed first-order data shared by every bracket formula.
#[derive(Clone, Debug)]
pub(crate) struct BracketGeometry<T> {
    /// `dx[i][a] = ∂_a x^i`
    pub dx: Vec<Vec<Vec<T>>>,
    /// `cof[t][a]`: `{u, x̄^{I_t}} = Σ_a ∂_a u · cof[t][a]`, already divided by ρ.
    pub cof: Vec<Vec<Vec<T>>>,
}

/// Embedded manifold `x: U ⊂ ℝⁿ → ℝᵐ` sampled on a grid, with a density ρ.
#[derive(Clone, Debug)]
pub struct EmbeddedManifold<T> {
    label: String,
    preset: Option<Preset>,
    params: Map<String, Value>,
    grid: Grid<T>,
    embedding: Vec<GridField<T>>,
    rho: GridField<T>,
    region: Vec<bool>,
    pub(crate) geo: BracketGeometry<T>,
}

pub(crate) fn increasing_tuples(m: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, m: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..m {
            cur.push(i);
            rec(i + 1, m, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, m, k, &mut Vec::new(), &mut out);
    out
}

/// `det` of the n×n matrix with rows `rows[r][a]`, n ∈ {1, 2, 3}.
pub(crate) fn small_det<T: Real>(rows: &[&[T]]) -> T {
    match rows.len() {
        1 => rows[0][0],
        2 => rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0],
        3 => {
            let (a, b, c) = (rows[0], rows[1], rows[2]);
            a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0])
                + a[2] * (b[0] * c[1] - b[1] * c[0])
        }
        _ => unreachable!("grids have at most 3 axes"),
    }
}

impl<T: Real> EmbeddedManifold<T> {
    /// Manifold from sampled embedding components and density. `region`
    /// defaults to every point at least two stencil widths from an open edge.
    pub fn new(
        label: impl Into<String>,
        grid: Grid<T>,
        embedding: Vec<GridField<T>>,
        rho: GridField<T>,
        region: Option<Vec<bool>>,
    ) -> Result<Self> {
        let n = grid.dim();
        let m = embedding.len();
        if !(2..=3).contains(&n) {
            return Err(Error::WrongDimension {
                op: "EmbeddedManifold",
                expected: "n = 2 or 3".into(),
                found: format!("n = {n}"),
            });
        }
        if m <= n {
            return Err(Error::WrongDimension {
                op: "EmbeddedManifold",
                expected: format!("m > {n}"),
                found: format!("m = {m}"),
            });
        }
        for f in embedding.iter().chain(std::iter::once(&rho)) {
            if f.values.len() != grid.len() {
                return Err(Error::InvalidShape(format!(
                    "field of {} values on a grid of {}",
                    f.values.len(),
                    grid.len()
                )));
            }
            if f.values.iter().any(|v| !v.is_finite()) {
                return Err(Error::NonFinite("embedding or density".into()));
            }
        }
        let region = match region {
            Some(r) if r.len() == grid.len() => r,
            Some(r) => {
                return Err(Error::InvalidShape(format!(
                    "region of {} points on a grid of {}",
                    r.len(),
                    grid.len()
                )))
            }
            None => margin_region(&grid, None),
        };
        if let Some(p) = (0..grid.len()).find(|&p| region[p] && !(rho.values[p] > T::zero())) {
            return Err(Error::Degenerate(format!(
                "density is not positive at grid point {p}"
            )));
        }
        let geo = BracketGeometry::new(&grid, &embedding, &rho);
        let mf = EmbeddedManifold {
            label: label.into(),
            preset: None,
            params: Map::new(),
            grid,
            embedding,
            rho,
            region,
            geo,
        };
        mf.check_metric()?;
        Ok(mf)
    }

    pub fn from_spec(spec: &ManifoldSpec) -> Result<Self> {
        let preset = spec.preset;
        let n = preset.intrinsic_dim();
        let axes_spec = if spec.grid.is_empty() {
            preset.default_axes(64)
        } else {
            spec.grid.clone()
        };
        if axes_spec.len() != n {
            return Err(Error::InvalidArgument(format!(
                "preset {} needs {n} grid axes, got {}",
                preset.name(),
                axes_spec.len()
            )));
        }
        let defaults = preset.default_axes(8);
        let axes = axes_spec
            .iter()
            .zip(&defaults)
            .map(|(a, d)| {
                let [lo, hi] = a.range.or(d.range).expect("default axes carry ranges");
                Axis {
                    size: a.size,
                    periodic: a.periodic.or(d.periodic).unwrap_or(false),
                    lo: T::lit(lo),
                    hi: T::lit(hi),
                }
            })
            .collect();
        let grid = Grid::new(axes, spec.stencil)?;
        let f = |x: f64| T::lit(x);

        type Emb<T> = Vec<Box<dyn Fn(&[T]) -> T + Sync>>;
        let (emb, sqrt_g): (Emb<T>, Option<Box<dyn Fn(&[T]) -> T + Sync>>) = match preset {
            Preset::Sphere => {
                let r = f(spec.param("radius", 1.0)?);
                (
                    vec![
                        Box::new(move |u| r * u[0].sin() * u[1].cos()),
                        Box::new(move |u| r * u[0].sin() * u[1].sin()),
                        Box::new(move |u| r * u[0].cos()),
                    ],
                    Some(Box::new(move |u| r * r * u[0].sin())),
                )
            }
            Preset::TorusRev => {
                let big = f(spec.param("R", 2.0)?);
                let r = f(spec.param("r", 1.0)?);
                if !(big > r && r > T::zero()) {
                    return Err(Error::InvalidArgument("torus_rev needs R > r > 0".into()));
                }
                (
                    vec![
                        Box::new(move |u| (big + r * u[0].cos()) * u[1].cos()),
                        Box::new(move |u| (big + r * u[0].cos()) * u[1].sin()),
                        Box::new(move |u| r * u[0].sin()),
                    ],
                    Some(Box::new(move |u| r * (big + r * u[0].cos()))),
                )
            }
            Preset::Clifford => {
                let s = T::one() / T::SQRT_2();
                (
                    vec![
                        Box::new(move |u| s * u[0].cos()),
                        Box::new(move |u| s * u[0].sin()),
                        Box::new(move |u| s * u[1].cos()),
                        Box::new(move |u| s * u[1].sin()),
                    ],
                    Some(Box::new(move |_| T::lit(0.5))),
                )
            }
            Preset::Ellipsoid => {
                let a = f(spec.param("a", 1.0)?);
                let b = f(spec.param("b", 1.5)?);
                let c = f(spec.param("c", 2.0)?);
                if !(a > T::zero() && b > T::zero() && c > T::zero()) {
                    return Err(Error::InvalidArgument(
                        "ellipsoid semi-axes must be positive".into(),
                    ));
                }
                (
                    vec![
                        Box::new(move |u| a * u[0].sin() * u[1].cos()),
                        Box::new(move |u| b * u[0].sin() * u[1].sin()),
                        Box::new(move |u| c * u[0].cos()),
                    ],
                    Some(Box::new(move |u| {
                        let (st, ct, sp, cp) = (u[0].sin(), u[0].cos(), u[1].sin(), u[1].cos());
                        let q = (b * c * st * cp).powi(2)
                            + (a * c * st * sp).powi(2)
                            + (a * b * ct).powi(2);
                        st * q.sqrt()
                    })),
                )
            }
            Preset::Sphere3 => {
                let r = f(spec.param("radius", 1.0)?);
                (
                    vec![
                        Box::new(move |u| r * u[0].sin() * u[1].sin() * u[2].cos()),
                        Box::new(move |u| r * u[0].sin() * u[1].sin() * u[2].sin()),
                        Box::new(move |u| r * u[0].sin() * u[1].cos()),
                        Box::new(move |u| r * u[0].cos()),
                    ],
                    Some(Box::new(move |u| {
                        r * r * r * u[0].sin().powi(2) * u[1].sin()
                    })),
                )
            }
            Preset::Custom => {
                let (m, terms) = parse_terms(&spec.params)?;
                let emb: Emb<T> = (0..m)
                    .map(|i| {
                        let mine: Vec<FourierTerm> =
                            terms.iter().copied().filter(|t| t.component == i).collect();
                        Box::new(move |u: &[T]| {
                            mine.iter()
                                .map(|t| {
                                    let arg =
                                        T::lit(t.m1 as f64) * u[0] + T::lit(t.m2 as f64) * u[1];
                                    T::lit(t.a_cos) * arg.cos() + T::lit(t.a_sin) * arg.sin()
                                })
                                .sum()
                        }) as Box<dyn Fn(&[T]) -> T + Sync>
                    })
                    .collect();
                (emb, None)
            }
        };
        let embedding: Vec<GridField<T>> = emb.iter().map(|e| grid.sample(|u| e(u))).collect();
        let rho = match (spec.rho, &sqrt_g) {
            (RhoKind::One, _) => GridField::constant(grid.shape(), T::one()),
            (RhoKind::SqrtG, Some(s)) => grid.sample(|u| s(u)),
            (RhoKind::SqrtG, None) => metric_sqrt_det(&grid, &embedding),
        };
        let cap = match preset {
            Preset::Sphere | Preset::Ellipsoid | Preset::Sphere3 => Some(T::lit(0.2)),
            _ => None,
        };
        let region = margin_region(&grid, cap);
        let rho_name = match spec.rho {
            RhoKind::SqrtG => "sqrt_g",
            RhoKind::One => "one",
        };
        let label = format!(
            "{} {} rho={}",
            preset.name(),
            grid.shape()
                .iter()
                .map(|s| s.to_string())
                .collect::<Vec<_>>()
                .join("x"),
            rho_name
        );
        let mut mf = EmbeddedManifold::new(label, grid, embedding, rho, Some(region))?;
        mf.preset = Some(preset);
        mf.params = spec.params.clone();
        Ok(mf)
    }

    fn check_metric(&self) -> Result<()> {
        let n = self.n();
        let g = self.metric();
        let bad = (0..self.grid.len()).find(|&p| {
            if !self.region[p] {
                return false;
            }
            let at = |a: usize, b: usize| g[a * n + b][p];
            // leading principal minors
            let m1 = at(0, 0);
            let m2 = at(0, 0) * at(1, 1) - at(0, 1) * at(1, 0);
            let ok = m1 > T::zero() && m2 > T::zero();
            if n == 3 {
                let rows: Vec<Vec<T>> =
                    (0..3).map(|a| (0..3).map(|b| at(a, b)).collect()).collect();
                !(ok && small_det(&[&rows[0], &rows[1], &rows[2]]) > T::zero())
            } else {
                !ok
            }
        });
        match bad {
            Some(p) => Err(Error::Degenerate(format!(
                "induced metric is not positive definite at grid point {p}"
            ))),
            None => Ok(()),
        }
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn preset(&self) -> Option<Preset> {
        self.preset
    }

    pub fn params(&self) -> &Map<String, Value> {
        &self.params
    }

    pub fn grid(&self) -> &Grid<T> {
        &self.grid
    }

    /// Intrinsic dimension.
    pub fn n(&self) -> usize {
        self.grid.dim()
    }

    /// Ambient dimension.
    pub fn m(&self) -> usize {
        self.embedding.len()
    }

    /// Codimension.
    pub fn p(&self) -> usize {
        self.m() - self.n()
    }

    pub fn embedding(&self) -> &[GridField<T>] {
        &self.embedding
    }

    pub fn rho(&self) -> &GridField<T> {
        &self.rho
    }

    /// Points on which pointwise checks are evaluated.
    pub fn region(&self) -> &[bool] {
        &self.region
    }

    pub fn region_len(&self) -> usize {
        self.region.iter().filter(|&&b| b).count()
    }

    pub fn spacing(&self) -> T {
        self.grid.max_spacing()
    }

    /// Sample a function of the chart coordinates on this grid.
    pub fn sample(&self, f: impl Fn(&[T]) -> T + Sync) -> GridField<T> {
        self.grid.sample(f)
    }

    /// Induced metric `g_ab = Σ_i ∂_a x^i ∂_b x^i` from the stencil partials,
    /// flattened as `g[a*n + b]`.
    pub fn metric(&self) -> Vec<Vec<T>> {
        let n = self.n();
        let dx = &self.geo.dx;
        let mut out = Vec::with_capacity(n * n);
        for a in 0..n {
            for b in 0..n {
                out.push(
                    (0..self.grid.len())
                        .into_par_iter()
                        .map(|p| dx.iter().map(|d| d[a][p] * d[b][p]).sum())
                        .collect(),
                );
            }
        }
        out
    }

    /// Tangent vector `∂_a x` at point `p`.
    pub fn tangent(&self, a: usize, p: usize) -> Vec<T> {
        self.geo.dx.iter().map(|d| d[a][p]).collect()
    }

    /// Classical Gaussian curvature of the analytic preset, where known.
    pub fn reference_gauss_curvature(&self) -> Option<GridField<T>> {
        let pf = |k: &str, d: f64| T::lit(self.params.get(k).and_then(Value::as_f64).unwrap_or(d));
        match self.preset? {
            Preset::Sphere => {
                let r = pf("radius", 1.0);
                Some(GridField::constant(self.grid.shape(), T::one() / (r * r)))
            }
            Preset::TorusRev => {
                let (big, r) = (pf("R", 2.0), pf("r", 1.0));
                Some(self.sample(|u| u[0].cos() / (r * (big + r * u[0].cos()))))
            }
            Preset::Clifford => Some(GridField::constant(self.grid.shape(), T::zero())),
            Preset::Ellipsoid => {
                let (a, b, c) = (pf("a", 1.0), pf("b", 1.5), pf("c", 2.0));
                Some(self.sample(|u| {
                    let x = a * u[0].sin() * u[1].cos();
                    let y = b * u[0].sin() * u[1].sin();
                    let z = c * u[0].cos();
                    let q = x * x / a.powi(4) + y * y / b.powi(4) + z * z / c.powi(4);
                    T::one() / ((a * b * c).powi(2) * q * q)
                }))
            }
            Preset::Sphere3 | Preset::Custom => None,
        }
    }

    /// Classical scalar curvature of the analytic preset, where known.
    pub fn reference_ricci_scalar(&self) -> Option<GridField<T>> {
        if self.preset? == Preset::Sphere3 {
            let r = T::lit(
                self.params
                    .get("radius")
                    .and_then(Value::as_f64)
                    .unwrap_or(1.0),
            );
            return Some(GridField::constant(
                self.grid.shape(),
                T::lit(6.0) / (r * r),
            ));
        }
        self.reference_gauss_curvature().map(|k| k.map(|v| v + v))
    }

    /// `{u, x̄^I}` for every increasing (n−1)-tuple `I`.
    pub(crate) fn brackets_with_tuples(&self, u: &[T]) -> Vec<Vec<T>> {
        let du = self.grid.gradient(u);
        self.geo.contract(&du)
    }
}

impl<T: Real> BracketGeometry<T> {
    fn new(grid: &Grid<T>, embedding: &[GridField<T>], rho: &GridField<T>) -> Self {
        let n = grid.dim();
        let m = embedding.len();
        let dx: Vec<Vec<Vec<T>>> = embedding.iter().map(|x| grid.gradient(&x.values)).collect();
        let tuples = increasing_tuples(m, n - 1);
        let len = grid.len();
        let cof = tuples
            .iter()
            .map(|t| {
                (0..n)
                    .map(|a| {
                        (0..len)
                            .into_par_iter()
                            .map(|p| {
                                // cofactor of entry (0, a) of the matrix with rows [∂u; ∂x^{t_1}; …]
                                let rows: Vec<Vec<T>> = t
                                    .iter()
                                    .map(|&i| {
                                        (0..n).filter(|&b| b != a).map(|b| dx[i][b][p]).collect()
                                    })
                                    .collect();
                                let refs: Vec<&[T]> = rows.iter().map(|r| r.as_slice()).collect();
                                let minor = if refs.is_empty() {
                                    T::one()
                                } else {
                                    small_det(&refs)
                                };
                                let sign = if a % 2 == 0 { T::one() } else { -T::one() };
                                sign * minor / rho.values[p]
                            })
                            .collect()
                    })
                    .collect()
            })
            .collect();
        BracketGeometry { dx, cof }
    }

    /// `Σ_a du[a]·cof[t][a]` for every tuple `t`.
    pub fn contract(&self, du: &[Vec<T>]) -> Vec<Vec<T>> {
        self.cof
            .iter()
            .map(|c| {
                (0..du[0].len())
                    .into_par_iter()
                    .map(|p| {
                        let mut acc = T::zero();
                        for (a, ca) in c.iter().enumerate() {
                            acc += du[a][p] * ca[p];
                        }
                        acc
                    })
                    .collect()
            })
            .collect()
    }
}

/// `√det g` from stencil partials of the embedding.
fn metric_sqrt_det<T: Real>(grid: &Grid<T>, embedding: &[GridField<T>]) -> GridField<T> {
    let n = grid.dim();
    let dx: Vec<Vec<Vec<T>>> = embedding.iter().map(|x| grid.gradient(&x.values)).collect();
    let values = (0..grid.len())
        .into_par_iter()
        .map(|p| {
            let g: Vec<Vec<T>> = (0..n)
                .map(|a| {
                    (0..n)
                        .map(|b| dx.iter().map(|d| d[a][p] * d[b][p]).sum())
                        .collect()
                })
                .collect();
            let refs: Vec<&[T]> = g.iter().map(|r| r.as_slice()).collect();
            small_det(&refs).max(T::zero()).sqrt()
        })
        .collect();
    GridField {
        shape: grid.shape(),
        values,
    }
}

/// Points at least two stencil half-widths from every open edge and, when
/// `cap` is set, with every open-axis coordinate in `[cap, π − cap]`.
pub fn margin_region<T: Real>(grid: &Grid<T>, cap: Option<T>) -> Vec<bool> {
    let margin = 2 * grid.order().half_width();
    (0..grid.len())
        .map(|p| {
            let idx = grid.index_of(p);
            grid.axes().iter().zip(idx).all(|(ax, i)| {
                if ax.periodic {
                    return true;
                }
                let inside = i >= margin && i + margin < ax.size;
                let c = ax.coord(i);
                inside && cap.is_none_or(|cap| c >= cap && c <= T::PI() - cap)
            })
        })
        .collect()
}
