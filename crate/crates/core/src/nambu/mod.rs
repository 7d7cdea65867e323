//! Continuum side: Nambu brackets of grid-sampled functions on parametrized
//! embedded manifolds and the bracket formulas for curvature, normals,
//! Codazzi residuals and the Laplacian.
//!
//! Derivatives are finite differences ([`StencilOrder`]); pointwise checks are
//! restricted to [`EmbeddedManifold::region`].

mod bracket;
mod calculus;
mod curvature;
mod grid;
mod identities;
mod io;
mod manifold;
mod small;

pub use bracket::{
    gamma_field, nambu_bracket, normal_frame, projection_defects, tangent_projection, MatrixField,
    NormalFrame, ProjectionDefects,
};
pub use calculus::{
    bracket_laplacian, curvature_commutation_check, curvature_commutation_field,
    gauss_bonnet_quadrature, hessian_tensor, pairwise_sum, BracketLaplacian, HessianTensor,
};
pub use curvature::{
    codazzi_poisson_probe, codazzi_residual, complex_structure_check,
    complex_structure_check_scaled, gauss_curvature_poisson, hypersurface_weingarten,
    hypersurface_weingarten_with_frame, mean_curvature_poisson, ricci_scalar_flat,
    ricci_scalar_with_frame, CodazziResidual, ComplexStructureDefects, JScaling, RicciScalar,
};
pub use grid::{Axis, Grid, GridField, StencilOrder};
pub use identities::{
    fitted_orders, jacobi_defect, leibniz_defect, random_smooth_field, ConvergenceCheck,
};
pub use io::{read_field_dump, write_field_dump, FieldSidecar};
pub use manifold::{
    margin_region, AxisSpec, EmbeddedManifold, FourierTerm, ManifoldSpec, Preset, RhoKind,
};
