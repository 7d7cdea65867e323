use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, ValueEnum};
use fuzzygeom_core::nambu::{
    codazzi_residual, complex_structure_check, curvature_commutation_check,
    gauss_bonnet_quadrature, gauss_curvature_poisson, jacobi_defect, leibniz_defect, normal_frame,
    projection_defects, random_smooth_field, ricci_scalar_flat, tangent_projection,
    write_field_dump, ConvergenceCheck, ManifoldSpec, Preset, RhoKind, StencilOrder,
};
use fuzzygeom_core::report::{fmt17, table_csv, Sig17};
use fuzzygeom_core::{EmbeddedManifold64, Error, GridField64};
use serde_json::json;

use crate::common::{extension, parse_n_list, write_output, CmdResult};
use crate::Failure;

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Check {
    /// max |K − K_exact| on the evaluation region (Ricci scalar for 3-manifolds)
    Curvature,
    /// max |R − R_exact|
    Ricci,
    /// max difference of the two Ricci scalar routes
    RicciRoutes,
    /// Codazzi–Mainardi residual (surfaces in ℝ³)
    Codazzi,
    /// J² = −Π, J·n = 0 and orthogonality defects
    ComplexStructure,
    /// |∫K dA/2π − χ| on a fully periodic chart (χ = 0)
    GaussBonnet,
    /// idempotency, symmetry and trace of the tangent projector
    Projection,
    /// Gram idempotency, rank, orthonormality and tangency of the normal frame
    NormalFrame,
    /// curvature-commutation residual for an ambient quadratic
    Commutation,
    /// Leibniz rule of the grid bracket on random fields with random density
    Leibniz,
    /// Jacobi identity of the grid bracket on random fields with random density
    Jacobi,
}

impl Check {
    fn name(self) -> String {
        self.to_possible_value()
            .map(|v| v.get_name().to_string())
            .unwrap_or_default()
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum RhoArg {
    One,
    SqrtG,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum StencilArg {
    Second,
    Fourth,
}

#[derive(Args, Debug)]
pub struct ContinuumArgs {
    /// Built-in manifold: sphere, torus_rev, clifford, ellipsoid, sphere3.
    #[arg(long, conflicts_with = "spec")]
    pub preset: Option<String>,
    /// Manifold spec JSON file (`{"preset", "params", "grid", "rho"}`).
    #[arg(long)]
    pub spec: Option<PathBuf>,
    /// Grid sizes per axis.
    #[arg(long, default_value = "32,64,128")]
    pub grid: String,
    /// Density of the bracket [default: one, or the spec's value].
    #[arg(long, value_enum)]
    pub rho: Option<RhoArg>,
    /// Finite-difference order [default: second, or the spec's value].
    #[arg(long, value_enum)]
    pub stencil: Option<StencilArg>,
    /// Quantities to study. Repeatable or comma separated.
    #[arg(long, value_enum, value_delimiter = ',', default_value = "curvature")]
    pub check: Vec<Check>,
    /// Output file; `.csv` gets the table, `.json` the fitted summary. Repeatable.
    #[arg(long)]
    pub out: Vec<PathBuf>,
    /// Dump the curvature field (K, or R for 3-manifolds) at the finest grid to `<stem>.bin` + `<stem>.json`.
    #[arg(long)]
    pub dump_field: Option<PathBuf>,
    /// Fitted order required for a pass.
    #[arg(long, default_value_t = 1.8)]
    pub tol_order: f64,
    /// Residuals at or below this floor pass regardless of order.
    #[arg(long, default_value_t = 1e-10)]
    pub tol_floor: f64,
    /// Exit with status 1 when a check misses its order.
    #[arg(long)]
    pub strict: bool,
    /// Add a runtime column to the table.
    #[arg(long)]
    pub timing: bool,
}

fn base_spec(a: &ContinuumArgs) -> Result<ManifoldSpec, Failure> {
    let mut spec = match (&a.preset, &a.spec) {
        (Some(p), None) => ManifoldSpec::preset(Preset::parse(p)?, 32),
        (None, Some(path)) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))?;
            ManifoldSpec::from_json(&text)?
        }
        (None, None) => {
            return Err(Failure::Usage(
                "one of --preset or --spec is required".into(),
            ))
        }
        (Some(_), Some(_)) => unreachable!("clap enforces the conflict"),
    };
    if let Some(r) = a.rho {
        spec.rho = match r {
            RhoArg::One => RhoKind::One,
            RhoArg::SqrtG => RhoKind::SqrtG,
        };
    }
    if let Some(s) = a.stencil {
        spec.stencil = match s {
            StencilArg::Second => StencilOrder::Second,
            StencilArg::Fourth => StencilOrder::Fourth,
        };
    }
    Ok(spec)
}

fn region_error(mf: &EmbeddedManifold64, got: &GridField64, want: &GridField64) -> f64 {
    (0..got.values.len())
        .filter(|&p| mf.region()[p])
        .map(|p| (got.values[p] - want.values[p]).abs())
        .fold(0.0, f64::max)
}

fn curvature_field(mf: &EmbeddedManifold64) -> Result<(GridField64, Option<GridField64>), Error> {
    if mf.n() == 2 {
        Ok((gauss_curvature_poisson(mf)?, mf.reference_gauss_curvature()))
    } else {
        Ok((
            ricci_scalar_flat(mf)?.frame_route,
            mf.reference_ricci_scalar(),
        ))
    }
}

fn no_reference(mf: &EmbeddedManifold64) -> Error {
    Error::NoReference(mf.label().to_string())
}

fn residual(check: Check, mf: &EmbeddedManifold64) -> Result<f64, Error> {
    Ok(match check {
        Check::Curvature => {
            let (k, r) = curvature_field(mf)?;
            region_error(mf, &k, &r.ok_or_else(|| no_reference(mf))?)
        }
        Check::Ricci => {
            let r = ricci_scalar_flat(mf)?.frame_route;
            region_error(
                mf,
                &r,
                &mf.reference_ricci_scalar()
                    .ok_or_else(|| no_reference(mf))?,
            )
        }
        Check::RicciRoutes => ricci_scalar_flat(mf)?.route_difference,
        Check::Codazzi => codazzi_residual(mf)?.max_on(mf.region()),
        Check::ComplexStructure => complex_structure_check(mf)?.max(),
        Check::GaussBonnet => gauss_bonnet_quadrature(mf, &gauss_curvature_poisson(mf)?)?.abs(),
        Check::Projection => {
            let d = projection_defects(mf, &tangent_projection(mf)?);
            d.idempotency.max(d.symmetry).max(d.trace)
        }
        Check::NormalFrame => {
            let f = normal_frame(mf)?;
            f.gram_idempotency_defect
                .max(f.count_check)
                .max(f.orthonormality_defect)
                .max(f.tangency_defect)
        }
        Check::Commutation => {
            let x = mf.embedding();
            let last = x.len() - 1;
            let u = GridField64::new(
                mf.grid().shape(),
                (0..mf.grid().len())
                    .map(|p| {
                        x[0].values[p] * x[1].values[p] + x[last].values[p].powi(2) + x[0].values[p]
                    })
                    .collect(),
            )?;
            curvature_commutation_check(mf, &u)?
        }
        Check::Leibniz | Check::Jacobi => {
            let g = mf.grid();
            let f = random_smooth_field(g, 31, 2, 1.0, 0.0);
            let h = random_smooth_field(g, 32, 2, 1.0, 0.0);
            let k = random_smooth_field(g, 33, 2, 1.0, 0.0);
            let rho = random_smooth_field(g, 34, 2, 0.3, 1.0);
            let d = if check == Check::Leibniz {
                leibniz_defect(g, &rho, &f, &h, &k)?
            } else {
                jacobi_defect(g, &rho, &f, &h, &k)?
            };
            d.max_abs_on(Some(mf.region()))
        }
    })
}

pub fn run(a: ContinuumArgs) -> CmdResult {
    let sizes = parse_n_list(&a.grid)
        .map_err(|_| Failure::Usage(format!("invalid --grid '{}'", a.grid)))?;
    for p in &a.out {
        match extension(p).as_deref() {
            Some("json") | Some("csv") => {}
            _ => {
                return Err(Failure::Usage(format!(
                    "--out {} must end in .json or .csv",
                    p.display()
                )))
            }
        }
    }
    let spec = base_spec(&a)?;
    let mut label = String::new();
    let mut spacings = Vec::new();
    let mut residuals = vec![Vec::new(); a.check.len()];
    let mut times = vec![Vec::new(); a.check.len()];
    for (si, &size) in sizes.iter().enumerate() {
        let mf: EmbeddedManifold64 = spec.with_size(size).build()?;
        log::info!(
            "{}: {} points, {} in region",
            mf.label(),
            mf.grid().len(),
            mf.region_len()
        );
        label = mf.label().to_string();
        spacings.push(mf.spacing());
        for (ci, &c) in a.check.iter().enumerate() {
            let start = Instant::now();
            residuals[ci].push(residual(c, &mf)?);
            times[ci].push(start.elapsed().as_secs_f64() * 1e3);
        }
        if si + 1 == sizes.len() {
            if let Some(stem) = &a.dump_field {
                let (k, _) = curvature_field(&mf)?;
                let name = if mf.n() == 2 {
                    "gauss_curvature"
                } else {
                    "ricci_scalar"
                };
                write_field_dump(stem, name, &k)?;
            }
        }
    }

    let checks: Vec<ConvergenceCheck> = a
        .check
        .iter()
        .zip(&residuals)
        .map(|(c, r)| {
            ConvergenceCheck::new(
                c.name(),
                spacings.clone(),
                r.clone(),
                a.tol_floor,
                a.tol_order,
            )
        })
        .collect();

    let mut header = vec!["check", "size", "h", "residual", "order"];
    if a.timing {
        header.push("runtime_ms");
    }
    let mut rows = Vec::new();
    for (ci, c) in checks.iter().enumerate() {
        for (si, &size) in sizes.iter().enumerate() {
            let mut row = vec![
                c.name.clone(),
                size.to_string(),
                fmt17(spacings[si]),
                fmt17(c.defects[si]),
                if si == 0 || c.defects[si].max(c.defects[si - 1]) <= c.floor {
                    String::new()
                } else {
                    fmt17(c.orders[si - 1])
                },
            ];
            if a.timing {
                row.push(format!("{:.3}", times[ci][si]));
            }
            rows.push(row);
        }
    }
    let csv = table_csv(&header, &rows);
    print!("{csv}");
    for c in &checks {
        let orders: Vec<String> = c.orders.iter().map(|o| format!("{o:.2}")).collect();
        eprintln!(
            "{}: orders [{}] {}",
            c.name,
            orders.join(", "),
            if c.passed { "pass" } else { "FAIL" }
        );
    }

    for p in &a.out {
        let text = if extension(p).as_deref() == Some("csv") {
            csv.clone()
        } else {
            let list: Vec<_> = checks
                .iter()
                .map(|c| {
                    json!({
                        "check": c.name,
                        "sizes": sizes,
                        "spacings": c.spacings.iter().map(|&v| Sig17(v)).collect::<Vec<_>>(),
                        "residuals": c.defects.iter().map(|&v| Sig17(v)).collect::<Vec<_>>(),
                        "orders": c.orders.iter().map(|&v| Sig17(v)).collect::<Vec<_>>(),
                        "floor": Sig17(c.floor),
                        "min_order": Sig17(c.min_order),
                        "passed": c.passed,
                    })
                })
                .collect();
            let doc = json!({ "manifold": label, "checks": list });
            serde_json::to_string_pretty(&doc).map_err(Error::from)? + "\n"
        };
        write_output(p, &text)?;
    }
    let all = checks.iter().all(|c| c.passed);
    Ok(if a.strict && !all { 1 } else { 0 })
}
