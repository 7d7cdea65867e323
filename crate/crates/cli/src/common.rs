use std::path::Path;

use clap::{Args, ValueEnum};
use fuzzygeom_core::fuzzy::{
    build_axial, build_fuzzy_sphere, build_fuzzy_torus, scan_axial_hbar, solve_axial_hbar,
    AxialProfile,
};
use fuzzygeom_core::{FuzzySurface64, Result as CoreResult};

use crate::Failure;

pub type CmdResult = Result<u8, Failure>;

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum SurfaceArg {
    Sphere,
    Torus,
    Axial,
}

/// Options shared by the commands that build fuzzy surfaces.
#[derive(Args, Debug, Clone)]
pub struct SurfaceOpts {
    /// Matrix sizes: a single value, a list `4,8,16` or an inclusive range `2..16` (`2..=16` also accepted).
    #[arg(long = "n", default_value = "8")]
    pub n: String,
    /// Axial profile: `sphere`, `quartic`, or coefficients of f²(z) in ascending powers (`1,0,-1`).
    #[arg(long, default_value = "quartic")]
    pub profile: String,
    /// Axial ℏ. Without it (or with --solve-hbar) ℏ is solved from the closure condition.
    #[arg(long)]
    pub hbar: Option<f64>,
    /// Solve the closure condition for ℏ (axial surfaces).
    #[arg(long)]
    pub solve_hbar: bool,
    /// Search interval for --solve-hbar.
    #[arg(long, default_value = "0.001,2.0")]
    pub hbar_bracket: String,
    /// Worker threads for the sweep [default: all cores].
    #[arg(long, env = "FUZZYGEOM_JOBS")]
    pub jobs: Option<usize>,
}

pub fn parse_n_list(text: &str) -> Result<Vec<usize>, Failure> {
    let bad = |what: &str| Failure::Usage(format!("invalid --n '{text}': {what}"));
    let mut out = Vec::new();
    for part in text.split(',').map(str::trim) {
        if let Some((a, b)) = part.split_once("..") {
            let a: usize = a.trim().parse().map_err(|_| bad("bad range start"))?;
            let b: usize = b
                .trim_start_matches('=')
                .trim()
                .parse()
                .map_err(|_| bad("bad range end"))?;
            if b < a {
                return Err(bad("empty range"));
            }
            out.extend(a..=b);
        } else {
            out.push(part.parse().map_err(|_| bad("not an integer"))?);
        }
    }
    if out.is_empty() {
        return Err(bad("no sizes"));
    }
    if out.windows(2).any(|w| w[1] <= w[0]) {
        return Err(bad("sizes must be strictly increasing"));
    }
    Ok(out)
}

pub fn parse_f64_list(flag: &str, text: &str) -> Result<Vec<f64>, Failure> {
    text.split(',')
        .map(|s| {
            s.trim()
                .parse::<f64>()
                .map_err(|_| Failure::Usage(format!("invalid {flag} '{text}'")))
        })
        .collect()
}

pub fn parse_profile(text: &str) -> Result<AxialProfile<f64>, Failure> {
    if let Some(p) = AxialProfile::builtin(text) {
        return Ok(p);
    }
    let coeffs = parse_f64_list("--profile", text).map_err(|_| {
        Failure::Usage(format!(
            "unknown profile '{text}' (use sphere, quartic or coefficients)"
        ))
    })?;
    Ok(AxialProfile::from_coefficients(
        format!("f2=[{text}]"),
        &coeffs,
    )?)
}

/// Rayon pool with the requested width.
pub fn pool(jobs: Option<usize>) -> Result<rayon::ThreadPool, Failure> {
    let mut b = rayon::ThreadPoolBuilder::new();
    if let Some(j) = jobs {
        if j == 0 {
            return Err(Failure::Usage("--jobs must be positive".into()));
        }
        b = b.num_threads(j);
    }
    b.build()
        .map_err(|e| Failure::Usage(format!("thread pool: {e}")))
}

/// Admissible ℏ for an axial build: the first sign change of the closure
/// defect whose surface builds.
pub fn axial_hbar(n: usize, profile: &AxialProfile<f64>, bracket: (f64, f64)) -> CoreResult<f64> {
    let changes = scan_axial_hbar(n, profile, bracket.0, bracket.1, 400);
    if changes.len() > 1 {
        log::warn!("N={n}: closure defect changes sign {} times on the bracket; taking the first admissible root", changes.len());
    }
    let mut last_err = None;
    for c in &changes {
        match solve_axial_hbar(n, profile, (c.lo, c.hi)) {
            Ok(h) if build_axial(n, profile, h).is_ok() => return Ok(h),
            Ok(_) => {}
            Err(e) => last_err = Some(e),
        }
    }
    match last_err {
        Some(e) => Err(e),
        None => solve_axial_hbar(n, profile, bracket),
    }
}

pub fn build_surface(
    kind: SurfaceArg,
    n: usize,
    opts: &SurfaceOpts,
    profile: Option<&AxialProfile<f64>>,
) -> CoreResult<FuzzySurface64> {
    match kind {
        SurfaceArg::Sphere => build_fuzzy_sphere(n),
        SurfaceArg::Torus => build_fuzzy_torus(n),
        SurfaceArg::Axial => {
            let profile = profile.expect("profile parsed for axial surfaces");
            let hbar = match opts.hbar {
                Some(h) if !opts.solve_hbar => h,
                _ => {
                    let b = parse_f64_list("--hbar-bracket", &opts.hbar_bracket)
                        .ok()
                        .filter(|v| v.len() == 2)
                        .ok_or_else(|| {
                            fuzzygeom_core::Error::InvalidArgument(format!(
                                "bad --hbar-bracket '{}'",
                                opts.hbar_bracket
                            ))
                        })?;
                    axial_hbar(n, profile, (b[0], b[1]))?
                }
            };
            build_axial(n, profile, hbar)
        }
    }
}

pub fn write_output(path: &Path, text: &str) -> Result<(), Failure> {
    std::fs::write(path, text)
        .map_err(|e| Failure::Usage(format!("cannot write {}: {e}", path.display())))
}

pub fn extension(path: &Path) -> Option<String> {
    path.extension()
        .map(|e| e.to_string_lossy().to_ascii_lowercase())
}

/// `stem.ext` → `stem_N{n}.ext`, used when several sizes share one path.
pub fn with_n_suffix(path: &Path, n: usize) -> std::path::PathBuf {
    let stem = path
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_default();
    let name = match path.extension() {
        Some(e) => format!("{stem}_N{n}.{}", e.to_string_lossy()),
        None => format!("{stem}_N{n}"),
    };
    path.with_file_name(name)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn n_lists() {
        assert_eq!(parse_n_list("2..5").unwrap(), vec![2, 3, 4, 5]);
        assert_eq!(parse_n_list("2..=4").unwrap(), vec![2, 3, 4]);
        assert_eq!(parse_n_list("4,8, 16").unwrap(), vec![4, 8, 16]);
        assert_eq!(parse_n_list("2..3,8").unwrap(), vec![2, 3, 8]);
        assert!(parse_n_list("8,4").is_err());
        assert!(parse_n_list("4,4").is_err());
        assert!(parse_n_list("x").is_err());
        assert!(parse_n_list("5..2").is_err());
    }

    #[test]
    fn suffixes() {
        assert_eq!(
            with_n_suffix(Path::new("/a/k.json"), 8),
            Path::new("/a/k_N8.json")
        );
        assert_eq!(with_n_suffix(Path::new("k"), 3), Path::new("k_N3"));
    }
}
