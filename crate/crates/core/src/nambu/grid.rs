//! Tensor-product grids, grid-sampled fields and finite-difference partials.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::Real;

/// Accuracy of the first-derivative stencils.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum StencilOrder {
    #[default]
    Second,
    Fourth,
}

impl StencilOrder {
    pub fn order(self) -> usize {
        match self {
            StencilOrder::Second => 2,
            StencilOrder::Fourth => 4,
        }
    }

    /// Points on each side of a central stencil.
    pub fn half_width(self) -> usize {
        self.order() / 2
    }
}

/// One coordinate axis. Periodic axes sample `[lo, hi)` with `size` points,
/// open axes sample `[lo, hi]` including both endpoints.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Axis<T> {
    pub size: usize,
    pub periodic: bool,
    pub lo: T,
    pub hi: T,
}

impl<T: Real> Axis<T> {
    pub fn periodic(size: usize, lo: T, hi: T) -> Self {
        Axis {
            size,
            periodic: true,
            lo,
            hi,
        }
    }

    pub fn open(size: usize, lo: T, hi: T) -> Self {
        Axis {
            size,
            periodic: false,
            lo,
            hi,
        }
    }

    pub fn spacing(&self) -> T {
        let cells = if self.periodic {
            self.size
        } else {
            self.size - 1
        };
        (self.hi - self.lo) / T::from_usize_lossy(cells)
    }

    pub fn coord(&self, i: usize) -> T {
        self.lo + self.spacing() * T::from_usize_lossy(i)
    }
}

/// Weights of the first derivative at offset 0 of the Lagrange interpolant
/// through integer nodes `s` (unit spacing).
fn lagrange_derivative_weights(s: &[i64]) -> Vec<f64> {
    let q = s.len();
    (0..q)
        .map(|j| {
            let sj = s[j] as f64;
            let mut acc = 0.0;
            for k in 0..q {
                if k == j {
                    continue;
                }
                let mut term = 1.0 / (sj - s[k] as f64);
                for (l, &sl) in s.iter().enumerate() {
                    if l != j && l != k {
                        term *= -(sl as f64) / (sj - sl as f64);
                    }
                }
                acc += term;
            }
            acc
        })
        .collect()
}

#[derive(Clone, Debug)]
struct Stencil<T> {
    /// (index along the axis, weight already divided by the spacing)
    taps: Vec<(usize, T)>,
}

/// Tensor-product grid in row-major order (last axis fastest).
#[derive(Clone, Debug)]
pub struct Grid<T> {
    axes: Vec<Axis<T>>,
    order: StencilOrder,
    strides: Vec<usize>,
    len: usize,
    stencils: Vec<Vec<Stencil<T>>>,
}

impl<T: Real> Grid<T> {
    pub fn new(axes: Vec<Axis<T>>, order: StencilOrder) -> Result<Self> {
        if axes.is_empty() || axes.len() > 3 {
            return Err(Error::InvalidShape(format!(
                "grid needs 1 to 3 axes, got {}",
                axes.len()
            )));
        }
        for (a, ax) in axes.iter().enumerate() {
            if ax.size < 8 {
                return Err(Error::InvalidShape(format!(
                    "axis {a} has {} points, need at least 8",
                    ax.size
                )));
            }
            if !(ax.hi > ax.lo) || !ax.lo.is_finite() || !ax.hi.is_finite() {
                return Err(Error::InvalidShape(format!(
                    "axis {a} has an empty or non-finite range"
                )));
            }
        }
        let mut strides = vec![1; axes.len()];
        for a in (0..axes.len() - 1).rev() {
            strides[a] = strides[a + 1] * axes[a + 1].size;
        }
        let len = strides[0] * axes[0].size;
        let stencils = axes.iter().map(|ax| build_stencils(ax, order)).collect();
        Ok(Grid {
            axes,
            order,
            strides,
            len,
            stencils,
        })
    }

    pub fn axes(&self) -> &[Axis<T>] {
        &self.axes
    }

    pub fn dim(&self) -> usize {
        self.axes.len()
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn order(&self) -> StencilOrder {
        self.order
    }

    pub fn shape(&self) -> Vec<usize> {
        self.axes.iter().map(|a| a.size).collect()
    }

    pub fn is_fully_periodic(&self) -> bool {
        self.axes.iter().all(|a| a.periodic)
    }

    /// Largest spacing over all axes.
    pub fn max_spacing(&self) -> T {
        self.axes
            .iter()
            .map(|a| a.spacing())
            .fold(T::zero(), T::max)
    }

    /// Multi-index of flat point `p`.
    pub fn index_of(&self, p: usize) -> Vec<usize> {
        self.axes
            .iter()
            .zip(&self.strides)
            .map(|(ax, &s)| (p / s) % ax.size)
            .collect()
    }

    pub fn flat(&self, idx: &[usize]) -> usize {
        idx.iter().zip(&self.strides).map(|(i, s)| i * s).sum()
    }

    /// Parameter coordinates of flat point `p`.
    pub fn coords(&self, p: usize) -> Vec<T> {
        self.index_of(p)
            .iter()
            .zip(&self.axes)
            .map(|(&i, ax)| ax.coord(i))
            .collect()
    }

    /// Sample `f(u)` at every grid point.
    pub fn sample(&self, f: impl Fn(&[T]) -> T + Sync) -> GridField<T> {
        let values = (0..self.len)
            .into_par_iter()
            .map(|p| f(&self.coords(p)))
            .collect();
        GridField {
            shape: self.shape(),
            values,
        }
    }

    /// Grid neighbours of `p` (with periodic wrap where applicable).
    pub fn neighbours(&self, p: usize) -> Vec<usize> {
        let idx = self.index_of(p);
        let mut out = Vec::with_capacity(2 * self.dim());
        for (a, ax) in self.axes.iter().enumerate() {
            let i = idx[a];
            let s = self.strides[a];
            let base = p - i * s;
            if i + 1 < ax.size {
                out.push(base + (i + 1) * s);
            } else if ax.periodic {
                out.push(base);
            }
            if i > 0 {
                out.push(base + (i - 1) * s);
            } else if ax.periodic {
                out.push(base + (ax.size - 1) * s);
            }
        }
        out
    }

    /// `∂f/∂u^a` at every grid point.
    pub fn partial(&self, f: &[T], a: usize) -> Vec<T> {
        assert_eq!(f.len(), self.len, "field does not match grid");
        let size = self.axes[a].size;
        let s = self.strides[a];
        let st = &self.stencils[a];
        (0..self.len)
            .into_par_iter()
            .map(|p| {
                let i = (p / s) % size;
                let base = p - i * s;
                let mut acc = T::zero();
                for &(j, w) in &st[i].taps {
                    acc += w * f[base + j * s];
                }
                acc
            })
            .collect()
    }

    /// All first partials of `f`, indexed by axis.
    pub fn gradient(&self, f: &[T]) -> Vec<Vec<T>> {
        (0..self.dim()).map(|a| self.partial(f, a)).collect()
    }
}

fn build_stencils<T: Real>(ax: &Axis<T>, order: StencilOrder) -> Vec<Stencil<T>> {
    let half = order.half_width() as i64;
    let width = 2 * half + 1;
    let n = ax.size as i64;
    let inv_h = T::one() / ax.spacing();
    (0..n)
        .map(|i| {
            let offsets: Vec<i64> = if ax.periodic {
                (-half..=half).collect()
            } else {
                let start = (i - half).clamp(0, n - width);
                (start..start + width).map(|j| j - i).collect()
            };
            let w = lagrange_derivative_weights(&offsets);
            let taps = offsets
                .iter()
                .zip(w)
                .filter(|(_, w)| *w != 0.0)
                .map(|(&o, w)| ((i + o).rem_euclid(n) as usize, T::lit(w) * inv_h))
                .collect();
            Stencil { taps }
        })
        .collect()
}

/// Real samples of a function on a grid.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GridField<T> {
    pub shape: Vec<usize>,
    pub values: Vec<T>,
}

impl<T: Real> GridField<T> {
    pub fn new(shape: Vec<usize>, values: Vec<T>) -> Result<Self> {
        let len: usize = shape.iter().product();
        if len != values.len() {
            return Err(Error::InvalidShape(format!(
                "{} values for shape {:?}",
                values.len(),
                shape
            )));
        }
        if values.iter().any(|v| !v.is_finite()) {
            return Err(Error::NonFinite("grid field".into()));
        }
        Ok(GridField { shape, values })
    }

    pub fn constant(shape: Vec<usize>, c: T) -> Self {
        let len = shape.iter().product();
        GridField {
            shape,
            values: vec![c; len],
        }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn map(&self, f: impl Fn(T) -> T) -> Self {
        GridField {
            shape: self.shape.clone(),
            values: self.values.iter().map(|&v| f(v)).collect(),
        }
    }

    /// Largest `|v|` over points where `mask` is set (all points for `None`).
    pub fn max_abs_on(&self, mask: Option<&[bool]>) -> T {
        self.values
            .iter()
            .enumerate()
            .filter(|(p, _)| mask.is_none_or(|m| m[*p]))
            .fold(T::zero(), |acc, (_, v)| acc.max(v.abs()))
    }
}
