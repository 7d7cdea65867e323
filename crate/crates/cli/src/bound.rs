use std::path::PathBuf;

use clap::Args;
use fuzzygeom_core::discgeo::{laplacian_spectrum, Formulation, SpectrumOptions};
use fuzzygeom_core::report::{fmt17, table_csv};
use rayon::prelude::*;

use crate::common::{
    build_surface, parse_n_list, parse_profile, pool, write_output, CmdResult, SurfaceArg,
    SurfaceOpts,
};
use crate::Failure;

pub const BOUND_HEADER: [&str; 5] = ["N", "kappa", "lambda_min_nonzero", "two_kappa", "satisfied"];

#[derive(Args, Debug)]
pub struct BoundArgs {
    /// Surface family.
    #[arg(value_enum)]
    pub surface: SurfaceArg,
    #[command(flatten)]
    pub opts: SurfaceOpts,
    /// Curvature formulation used for κ [default as in `fuzzy`].
    #[arg(long)]
    pub curvature: Option<String>,
    /// Largest superoperator dimension N²; larger requests exit with status 2.
    #[arg(long, default_value_t = 4096)]
    pub cap: usize,
    /// Relative threshold below which eigenvalues count as zero.
    #[arg(long, default_value_t = 1e-8)]
    pub tol_zero: f64,
    /// Slack in λ_min ≥ 2κ − slack.
    #[arg(long, default_value_t = 1e-8)]
    pub tol_bound: f64,
    /// Also write the table to this CSV file.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

/// Prints the table; exits 0 iff every row satisfies the bound.
pub fn run(a: BoundArgs) -> CmdResult {
    let ns = parse_n_list(&a.opts.n)?;
    if let Some(&big) = ns.iter().find(|&&n| n * n > a.cap) {
        return Err(fuzzygeom_core::Error::CapExceeded {
            size: big * big,
            cap: a.cap,
        }
        .into());
    }
    let formulation = a
        .curvature
        .as_deref()
        .map(str::parse::<Formulation>)
        .transpose()?;
    let profile = match a.surface {
        SurfaceArg::Axial => Some(parse_profile(&a.opts.profile)?),
        _ => None,
    };
    let opts = SpectrumOptions {
        cap: a.cap,
        zero_rel_tol: a.tol_zero,
        formulation,
        bound_slack: a.tol_bound,
    };
    let pool = pool(a.opts.jobs)?;
    let rows: Vec<Result<(Vec<String>, bool), Failure>> = pool.install(|| {
        ns.par_iter()
            .map(|&n| {
                let s = build_surface(a.surface, n, &a.opts, profile.as_ref())?;
                let r = laplacian_spectrum(&s, &opts)?;
                let cells = vec![
                    n.to_string(),
                    fmt17(r.kappa),
                    fmt17(r.lambda_min_nonzero),
                    fmt17(2.0 * r.kappa),
                    r.bound_satisfied.to_string(),
                ];
                Ok((cells, r.bound_satisfied))
            })
            .collect()
    });
    let rows: Vec<(Vec<String>, bool)> = rows.into_iter().collect::<Result<_, _>>()?;
    let all = rows.iter().all(|(_, ok)| *ok);
    let cells: Vec<Vec<String>> = rows.into_iter().map(|(c, _)| c).collect();
    let csv = table_csv(&BOUND_HEADER, &cells);
    print!("{csv}");
    if let Some(p) = &a.out {
        write_output(p, &csv)?;
    }
    if !all {
        eprintln!("fuzzygeom: bound violated on at least one row");
    }
    Ok(if all { 0 } else { 1 })
}
