//! Finite-N defects of the matrix regularization axioms: products,
//! rescaled commutators and traces against their continuum values.

use std::sync::Arc;

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::fuzzy::{torus_quantization_map, FourierMode, FuzzySurface};
use crate::matcore::{commutator_unchecked, operator_norm, CMatrix};
use crate::scalar::Real;

/// Matrix-valued probe evaluated on the surface at a given N.
pub type MatrixFn<T> = Arc<dyn Fn(&FuzzySurface<T>) -> CMatrix<T> + Send + Sync>;

#[derive(Clone)]
pub enum ProbeKind<T> {
    /// `‖T(f)T(h) − T(fh)‖`
    Product {
        f: MatrixFn<T>,
        h: MatrixFn<T>,
        fh: MatrixFn<T>,
    },
    /// `‖(1/iℏ)[T(f), T(h)] − T({f,h})‖`
    Commutator {
        f: MatrixFn<T>,
        h: MatrixFn<T>,
        bracket: MatrixFn<T>,
    },
    /// `|2πℏ Tr T(f) − ∫f ω|`
    Trace { f: MatrixFn<T>, integral: T },
}

#[derive(Clone)]
pub struct Probe<T> {
    pub label: String,
    pub kind: ProbeKind<T>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ProbeDefect<T> {
    pub label: String,
    pub value: T,
}

#[derive(Clone, Debug, PartialEq)]
pub struct DefectReport<T> {
    pub n_mat: usize,
    /// Maximum over product probes (0 when there are none).
    pub product_defect: T,
    pub commutator_defect: T,
    pub trace_defect: T,
    pub probe_labels: Vec<String>,
    /// Per-probe values in probe order.
    pub entries: Vec<ProbeDefect<T>>,
}

fn probe_value<T: Real>(s: &FuzzySurface<T>, kind: &ProbeKind<T>) -> Result<T> {
    match kind {
        ProbeKind::Product { f, h, fh } => {
            let d = &f(s).matmul(&h(s)) - &fh(s);
            operator_norm(&d)
        }
        ProbeKind::Commutator { f, h, bracket } => {
            let c = commutator_unchecked(&f(s), &h(s)).div_i_hbar(s.hbar());
            operator_norm(&(&c - &bracket(s)))
        }
        ProbeKind::Trace { f, integral } => {
            let tr = f(s).trace().re;
            Ok((T::TAU() * s.hbar() * tr - *integral).abs())
        }
    }
}

pub fn regularization_defects<T, F>(
    family: F,
    ns: &[usize],
    probes: &[Probe<T>],
) -> Result<Vec<DefectReport<T>>>
where
    T: Real,
    F: Fn(usize) -> Result<FuzzySurface<T>>,
{
    if probes.is_empty() {
        return Err(Error::InvalidArgument(
            "regularization_defects needs at least one probe".into(),
        ));
    }
    if ns.len() < 2 {
        return Err(Error::InvalidArgument(
            "regularization_defects needs at least two N values".into(),
        ));
    }
    ns.iter()
        .map(|&n| probe_defects(&family(n)?, probes))
        .collect()
}

/// Probe defects of a single surface.
pub fn probe_defects<T: Real>(s: &FuzzySurface<T>, probes: &[Probe<T>]) -> Result<DefectReport<T>> {
    let mut rep = DefectReport {
        n_mat: s.n_mat(),
        product_defect: T::zero(),
        commutator_defect: T::zero(),
        trace_defect: T::zero(),
        probe_labels: probes.iter().map(|p| p.label.clone()).collect(),
        entries: Vec::with_capacity(probes.len()),
    };
    for p in probes {
        let v = probe_value(s, &p.kind)?;
        let slot = match p.kind {
            ProbeKind::Product { .. } => &mut rep.product_defect,
            ProbeKind::Commutator { .. } => &mut rep.commutator_defect,
            ProbeKind::Trace { .. } => &mut rep.trace_defect,
        };
        *slot = slot.max(v);
        rep.entries.push(ProbeDefect {
            label: p.label.clone(),
            value: v,
        });
    }
    Ok(rep)
}

fn modes<T: Real>(list: &[(i64, i64, f64, f64)]) -> Vec<FourierMode<T>> {
    list.iter()
        .map(|&(a, b, re, im)| FourierMode::new(a, b, Complex::new(T::lit(re), T::lit(im))))
        .collect()
}

fn quantized<T: Real>(list: &'static [(i64, i64, f64, f64)]) -> MatrixFn<T> {
    Arc::new(move |s: &FuzzySurface<T>| torus_quantization_map(s.n_mat(), &modes::<T>(list)))
}

/// Torus probes with ρ = 1/2 (so `∫ω = 2π²` and `{f,h} = 2(∂₁f∂₂h − ∂₂f∂₁h)`).
pub fn torus_probes<T: Real>() -> Vec<Probe<T>> {
    const E1: &[(i64, i64, f64, f64)] = &[(1, 0, 1.0, 0.0)];
    const E2: &[(i64, i64, f64, f64)] = &[(0, 1, 1.0, 0.0)];
    const E2C: &[(i64, i64, f64, f64)] = &[(0, -1, 1.0, 0.0)];
    // {e^{iφ₁}, e^{iφ₂}} = −2 e^{i(φ₁+φ₂)}
    const B12: &[(i64, i64, f64, f64)] = &[(1, 1, -2.0, 0.0)];
    // {e^{iφ₁}, e^{−iφ₂}} = 2 e^{i(φ₁−φ₂)}
    const B12C: &[(i64, i64, f64, f64)] = &[(1, -1, 2.0, 0.0)];
    const COS1: &[(i64, i64, f64, f64)] = &[(1, 0, 0.5, 0.0), (-1, 0, 0.5, 0.0)];
    const COS2: &[(i64, i64, f64, f64)] = &[(0, 1, 0.5, 0.0), (0, -1, 0.5, 0.0)];
    // cos²φ₁ = 1/2 + cos(2φ₁)/2
    const COS1SQ: &[(i64, i64, f64, f64)] =
        &[(0, 0, 0.5, 0.0), (2, 0, 0.25, 0.0), (-2, 0, 0.25, 0.0)];
    const COS1COS2: &[(i64, i64, f64, f64)] = &[
        (1, 1, 0.25, 0.0),
        (1, -1, 0.25, 0.0),
        (-1, 1, 0.25, 0.0),
        (-1, -1, 0.25, 0.0),
    ];
    const ONE: &[(i64, i64, f64, f64)] = &[(0, 0, 1.0, 0.0)];
    let pi2 = T::PI() * T::PI();
    vec![
        Probe {
            label: "commutator e1,e2".into(),
            kind: ProbeKind::Commutator {
                f: quantized(E1),
                h: quantized(E2),
                bracket: quantized(B12),
            },
        },
        Probe {
            label: "commutator e1,conj(e2)".into(),
            kind: ProbeKind::Commutator {
                f: quantized(E1),
                h: quantized(E2C),
                bracket: quantized(B12C),
            },
        },
        Probe {
            label: "product cos1*cos1".into(),
            kind: ProbeKind::Product {
                f: quantized(COS1),
                h: quantized(COS1),
                fh: quantized(COS1SQ),
            },
        },
        Probe {
            label: "product cos1*cos2".into(),
            kind: ProbeKind::Product {
                f: quantized(COS1),
                h: quantized(COS2),
                fh: quantized(COS1COS2),
            },
        },
        Probe {
            label: "trace 1".into(),
            kind: ProbeKind::Trace {
                f: quantized(ONE),
                integral: pi2 * T::lit(2.0),
            },
        },
        Probe {
            label: "trace cos1^2".into(),
            kind: ProbeKind::Trace {
                f: quantized(COS1SQ),
                integral: pi2,
            },
        },
    ]
}

/// Sphere probes built from the coordinate matrices (ω = area form, ∫ω = 4π).
pub fn sphere_probes<T: Real>() -> Vec<Probe<T>> {
    let x =
        |i: usize| -> MatrixFn<T> { Arc::new(move |s: &FuzzySurface<T>| s.coords()[i].clone()) };
    let x3sq: MatrixFn<T> = Arc::new(|s: &FuzzySurface<T>| s.coords()[2].matmul(&s.coords()[2]));
    let one: MatrixFn<T> = Arc::new(|s: &FuzzySurface<T>| CMatrix::identity(s.n_mat()));
    let four_pi = T::lit(4.0) * T::PI();
    vec![
        Probe {
            label: "commutator x1,x2".into(),
            kind: ProbeKind::Commutator {
                f: x(0),
                h: x(1),
                bracket: x(2),
            },
        },
        Probe {
            label: "commutator x2,x3".into(),
            kind: ProbeKind::Commutator {
                f: x(1),
                h: x(2),
                bracket: x(0),
            },
        },
        Probe {
            label: "trace 1".into(),
            kind: ProbeKind::Trace {
                f: one,
                integral: four_pi,
            },
        },
        Probe {
            label: "trace x3^2".into(),
            kind: ProbeKind::Trace {
                f: x3sq,
                integral: four_pi / T::lit(3.0),
            },
        },
    ]
}

/// First-order probe of the torus deformation `θ̂ = diag(ℏ^s, 0, …)` against `h + h†`:
/// `‖(1/iℏ)[θ̂, h + h†]‖ = √2 ℏ^{s−1}`.
pub fn deformation_probe<T: Real>(s_exp: T) -> Probe<T> {
    let theta: MatrixFn<T> = Arc::new(move |s: &FuzzySurface<T>| {
        let mut t = CMatrix::zeros(s.n_mat());
        t.set(0, 0, Complex::new(s.hbar().powf(s_exp), T::zero()));
        t
    });
    const U: &[(i64, i64, f64, f64)] = &[(0, 1, 1.0, 0.0), (0, -1, 1.0, 0.0)];
    let zero: MatrixFn<T> = Arc::new(|s: &FuzzySurface<T>| CMatrix::zeros(s.n_mat()));
    Probe {
        label: format!("deformation s={s_exp}"),
        kind: ProbeKind::Commutator {
            f: theta,
            h: quantized(U),
            bracket: zero,
        },
    }
}
