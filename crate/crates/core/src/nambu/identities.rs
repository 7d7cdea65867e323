//! Algebraic identity probes for the grid bracket and convergence-order fits.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::curvature::bracket2;
use super::grid::{Grid, GridField};
use crate::error::{Error, Result};
use crate::scalar::Real;

fn check2<T: Real>(grid: &Grid<T>, fields: &[&GridField<T>]) -> Result<()> {
    if grid.dim() != 2 {
        return Err(Error::WrongDimension {
            op: "bracket identity",
            expected: "2-d grid".into(),
            found: format!("{}-d grid", grid.dim()),
        });
    }
    for f in fields {
        if f.values.len() != grid.len() {
            return Err(Error::DimensionMismatch {
                expected: grid.len(),
                found: f.values.len(),
            });
        }
    }
    Ok(())
}

/// `{f·g, h} − f{g, h} − g{f, h}` pointwise.
pub fn leibniz_defect<T: Real>(
    grid: &Grid<T>,
    rho: &GridField<T>,
    f: &GridField<T>,
    g: &GridField<T>,
    h: &GridField<T>,
) -> Result<GridField<T>> {
    check2(grid, &[rho, f, g, h])?;
    let r = &rho.values;
    let fg: Vec<T> = f
        .values
        .iter()
        .zip(&g.values)
        .map(|(a, b)| *a * *b)
        .collect();
    let lhs = bracket2(grid, r, &fg, &h.values);
    let gh = bracket2(grid, r, &g.values, &h.values);
    let fh = bracket2(grid, r, &f.values, &h.values);
    let values = (0..grid.len())
        .map(|p| lhs[p] - f.values[p] * gh[p] - g.values[p] * fh[p])
        .collect();
    Ok(GridField {
        shape: grid.shape(),
        values,
    })
}

/// `{f, {g, h}} + {g, {h, f}} + {h, {f, g}}` pointwise.
pub fn jacobi_defect<T: Real>(
    grid: &Grid<T>,
    rho: &GridField<T>,
    f: &GridField<T>,
    g: &GridField<T>,
    h: &GridField<T>,
) -> Result<GridField<T>> {
    check2(grid, &[rho, f, g, h])?;
    let r = &rho.values;
    let (f, g, h) = (&f.values, &g.values, &h.values);
    let a = bracket2(grid, r, f, &bracket2(grid, r, g, h));
    let b = bracket2(grid, r, g, &bracket2(grid, r, h, f));
    let c = bracket2(grid, r, h, &bracket2(grid, r, f, g));
    let values = (0..grid.len()).map(|p| a[p] + b[p] + c[p]).collect();
    Ok(GridField {
        shape: grid.shape(),
        values,
    })
}

/// Smooth random field on a 2-d chart: a few low Fourier modes in the chart
/// coordinates plus `offset`, reproducible from `seed`.
pub fn random_smooth_field<T: Real>(
    grid: &Grid<T>,
    seed: u64,
    modes: i64,
    amplitude: f64,
    offset: f64,
) -> GridField<T> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut terms = Vec::new();
    for m1 in 0..=modes {
        for m2 in -modes..=modes {
            if m1 == 0 && m2 <= 0 {
                continue;
            }
            let decay = 1.0 / (1 + m1 * m1 + m2 * m2) as f64;
            terms.push((
                m1,
                m2,
                amplitude * decay * rng.gen_range(-1.0..1.0),
                amplitude * decay * rng.gen_range(-1.0..1.0),
            ));
        }
    }
    let axes = grid.axes().to_vec();
    grid.sample(|u| {
        // map each axis onto one period so open axes also get smooth samples
        let s: Vec<T> = u
            .iter()
            .zip(&axes)
            .map(|(x, ax)| (*x - ax.lo) / (ax.hi - ax.lo) * T::lit(2.0) * T::PI())
            .collect();
        let mut v = T::lit(offset);
        for &(m1, m2, c, d) in &terms {
            let arg = T::lit(m1 as f64) * s[0]
                + T::lit(m2 as f64) * s.get(1).copied().unwrap_or(T::zero());
            v += T::lit(c) * arg.cos() + T::lit(d) * arg.sin();
        }
        v
    })
}

/// Local orders `log(e_k/e_{k+1}) / log(h_k/h_{k+1})` across consecutive refinements.
pub fn fitted_orders(spacings: &[f64], defects: &[f64]) -> Vec<f64> {
    spacings
        .windows(2)
        .zip(defects.windows(2))
        .map(|(h, e)| (e[0] / e[1]).ln() / (h[0] / h[1]).ln())
        .collect()
}

/// Defect of one identity measured on a sequence of grids.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ConvergenceCheck {
    pub name: String,
    pub spacings: Vec<f64>,
    pub defects: Vec<f64>,
    pub orders: Vec<f64>,
    /// Defects at or below this count as exact.
    pub floor: f64,
    pub min_order: f64,
    pub passed: bool,
}

impl ConvergenceCheck {
    /// Passes when the finest defect is at the roundoff floor or every fitted
    /// order reaches `min_order`.
    pub fn new(
        name: impl Into<String>,
        spacings: Vec<f64>,
        defects: Vec<f64>,
        floor: f64,
        min_order: f64,
    ) -> Self {
        let orders = fitted_orders(&spacings, &defects);
        let at_floor = defects.last().is_some_and(|&d| d <= floor);
        let converging = !orders.is_empty() && orders.iter().all(|&o| o >= min_order);
        ConvergenceCheck {
            name: name.into(),
            spacings,
            defects,
            orders,
            floor,
            min_order,
            passed: at_floor || converging,
        }
    }
}
