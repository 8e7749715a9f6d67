//! Highest-weight-function evaluation: determinant products for the
//! γ-contraction, Grassmann-Plücker straightening into the semistandard
//! basis, symmetrization spans, and the Waring-rank equation.

mod closure;
mod gamma;
mod matrix;
mod span;
mod straighten;
mod waring;

pub use closure::{closure_hwv_eval, closure_hwv_eval_report, ClosureReport};
pub use gamma::{gamma_eval, orbit_hwv_eval};
pub use matrix::RationalMatrix;
pub use span::{semistandard_tableaux, span_dimension};
pub use straighten::{straighten, symmetrize_pm, TableauExpansion};
pub use waring::waring_equation;
