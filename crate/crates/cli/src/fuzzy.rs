use std::path::PathBuf;
use std::time::Instant;

use clap::Args;
use fuzzygeom_core::discgeo::{
    discrete_curvature, euler_characteristic_hat, laplacian_spectrum, probe_defects, sphere_probes,
    torus_probes, Formulation, SpectrumOptions,
};
use fuzzygeom_core::fuzzy::casimir_residual;
use fuzzygeom_core::matcore::{operator_norm, CMatrix};
use fuzzygeom_core::report::{matrix_to_json, sweep_csv, GeometryReport, Sig17, SweepRow};
use fuzzygeom_core::FuzzySurface64;
use rayon::prelude::*;

use crate::common::{
    build_surface, extension, parse_n_list, parse_profile, pool, with_n_suffix, write_output,
    CmdResult, SurfaceArg, SurfaceOpts,
};
use crate::Failure;

#[derive(Args, Debug)]
pub struct FuzzyArgs {
    /// Surface family.
    #[arg(value_enum)]
    pub surface: SurfaceArg,
    #[command(flatten)]
    pub opts: SurfaceOpts,
    /// Compute the discrete Euler characteristic ℏ Tr(γ̂ K̂).
    #[arg(long)]
    pub chi: bool,
    /// Curvature formulation: epsilon-r3, brackets-rm, normals, axial-closed-form
    /// [default: normals when available, else the axial closed form, else brackets-rm].
    #[arg(long)]
    pub curvature: Option<String>,
    /// Diagonalize the Laplacian superoperator and check λ_min ≥ 2κ.
    #[arg(long)]
    pub spectrum: bool,
    /// Evaluate the regularization probes (products, commutators, traces).
    #[arg(long)]
    pub defects: bool,
    /// Output file; `.json` gets the geometry report, `.csv` the sweep table. Repeatable.
    #[arg(long)]
    pub out: Vec<PathBuf>,
    /// Write K̂ as `{"dim", "entries"}` JSON (suffixed with `_N<n>` for several sizes).
    #[arg(long)]
    pub dump_matrix: Option<PathBuf>,
    /// Record wall-clock time per entry in the sweep table.
    #[arg(long)]
    pub timing: bool,
    /// Largest superoperator dimension N² accepted by --spectrum.
    #[arg(long, default_value_t = 4096)]
    pub cap: usize,
    /// Relative threshold below which superoperator eigenvalues count as zero.
    #[arg(long, default_value_t = 1e-8)]
    pub tol_zero: f64,
    /// Slack in λ_min ≥ 2κ − slack.
    #[arg(long, default_value_t = 1e-8)]
    pub tol_bound: f64,
}

struct Entry {
    report: GeometryReport,
    row: SweepRow,
    k_hat: Option<CMatrix<f64>>,
}

fn continuum_chi(kind: SurfaceArg) -> f64 {
    match kind {
        SurfaceArg::Torus => 0.0,
        SurfaceArg::Sphere | SurfaceArg::Axial => 2.0,
    }
}

fn one(
    a: &FuzzyArgs,
    n: usize,
    formulation: Option<Formulation>,
    profile: Option<&fuzzygeom_core::fuzzy::AxialProfile<f64>>,
) -> Result<Entry, Failure> {
    let start = Instant::now();
    let surf: FuzzySurface64 = build_surface(a.surface, n, &a.opts, profile)?;
    let mut report = GeometryReport::new(surf.label(), n, surf.hbar());
    let mut row = SweepRow {
        n,
        hbar: surf.hbar(),
        chi_hat: None,
        chi_err: None,
        kappa: None,
        lambda_min: None,
        runtime_ms: None,
    };

    let casimir = match a.surface {
        SurfaceArg::Axial => casimir_residual(&surf)?,
        _ => operator_norm(&(&surf.sum_of_squares() - &CMatrix::identity(n)))?,
    };
    let key = if a.surface == SurfaceArg::Axial {
        "casimir_residual"
    } else {
        "sum_of_squares"
    };
    report.defects.insert(key.into(), Sig17(casimir));

    let mut k_hat = None;
    if a.chi || a.curvature.is_some() || a.dump_matrix.is_some() {
        let f = formulation.unwrap_or_else(|| Formulation::default_for(&surf));
        let k = discrete_curvature(&surf, f)?;
        report.formulation = Some(f.name().into());
        report
            .defects
            .insert("k_hat_hermiticity".into(), Sig17(k.hermiticity_defect));
        let reference = match a.surface {
            SurfaceArg::Sphere => Some(CMatrix::identity(n)),
            SurfaceArg::Torus => Some(CMatrix::zeros(n)),
            SurfaceArg::Axial => None,
        };
        if let Some(r) = reference {
            report.defects.insert(
                "k_hat_reference".into(),
                Sig17(operator_norm(&(&k.k_hat - &r))?),
            );
        }
        report
            .defects
            .insert("k_hat_norm".into(), Sig17(operator_norm(&k.k_hat)?));
        if a.chi {
            let chi = euler_characteristic_hat(&surf, &k.k_hat)?.value;
            report.chi_hat = Some(Sig17(chi));
            row.chi_hat = Some(chi);
            row.chi_err = Some(chi - continuum_chi(a.surface));
        }
        k_hat = Some(k.k_hat);
    }

    if a.spectrum {
        let opts = SpectrumOptions {
            cap: a.cap,
            zero_rel_tol: a.tol_zero,
            formulation,
            bound_slack: a.tol_bound,
        };
        let s = laplacian_spectrum(&surf, &opts)?;
        report.kappa = Some(Sig17(s.kappa));
        report.lambda_min_nonzero = Some(Sig17(s.lambda_min_nonzero));
        report.bound_satisfied = Some(s.bound_satisfied);
        report
            .defects
            .insert("spectrum_imaginary_mass".into(), Sig17(s.imaginary_mass));
        row.kappa = Some(s.kappa);
        row.lambda_min = Some(s.lambda_min_nonzero);
    }

    if a.defects {
        let probes = match a.surface {
            SurfaceArg::Sphere => Some(sphere_probes()),
            SurfaceArg::Torus => Some(torus_probes()),
            SurfaceArg::Axial => None,
        };
        match probes {
            Some(p) => {
                let d = probe_defects(&surf, &p)?;
                report
                    .defects
                    .insert("product".into(), Sig17(d.product_defect));
                report
                    .defects
                    .insert("commutator".into(), Sig17(d.commutator_defect));
                report.defects.insert("trace".into(), Sig17(d.trace_defect));
                for e in d.entries {
                    report
                        .defects
                        .insert(format!("probe {}", e.label), Sig17(e.value));
                }
            }
            None => log::warn!("no regularization probes for axial surfaces"),
        }
    }

    if a.timing {
        row.runtime_ms = Some(start.elapsed().as_secs_f64() * 1e3);
    }
    Ok(Entry { report, row, k_hat })
}

pub fn run(a: FuzzyArgs) -> CmdResult {
    let ns = parse_n_list(&a.opts.n)?;
    let formulation = a
        .curvature
        .as_deref()
        .map(str::parse::<Formulation>)
        .transpose()?;
    let profile = match a.surface {
        SurfaceArg::Axial => Some(parse_profile(&a.opts.profile)?),
        _ => None,
    };
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
    let pool = pool(a.opts.jobs)?;
    let entries: Vec<Result<Entry, Failure>> = pool.install(|| {
        ns.par_iter()
            .map(|&n| one(&a, n, formulation, profile.as_ref()))
            .collect()
    });
    let entries: Vec<Entry> = entries.into_iter().collect::<Result<_, _>>()?;

    let rows: Vec<SweepRow> = entries.iter().map(|e| e.row.clone()).collect();
    let csv = sweep_csv(&rows);
    print!("{csv}");
    for p in &a.out {
        let text = if extension(p).as_deref() == Some("csv") {
            csv.clone()
        } else {
            let reports: Vec<&GeometryReport> = entries.iter().map(|e| &e.report).collect();
            let mut json = if let [r] = reports.as_slice() {
                r.to_json()?
            } else {
                serde_json::to_string_pretty(&reports).map_err(fuzzygeom_core::Error::from)?
            };
            json.push('\n');
            json
        };
        write_output(p, &text)?;
    }
    if let Some(path) = &a.dump_matrix {
        for e in &entries {
            let k = e.k_hat.as_ref().expect("curvature computed when dumping");
            let target = if entries.len() == 1 {
                path.clone()
            } else {
                with_n_suffix(path, e.report.n)
            };
            write_output(&target, &(matrix_to_json(k)? + "\n"))?;
        }
    }
    Ok(0)
}
