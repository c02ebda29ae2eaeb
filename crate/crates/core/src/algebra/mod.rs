//! Polynomials, truncated series, Hensel lifting, exact linear algebra and
//! function fields.

pub mod bipoly;
pub mod funcfield;
pub mod hensel;
pub mod linalg;
pub mod poly;
pub mod series;

pub use bipoly::{BiPoly, Var};
pub use funcfield::{FunctionField, RatFn, RatFnField};
pub use hensel::{expand_affine, hensel_lift, LocalParameter};
pub use linalg::{det_valuation, nullspace, pivot_orders, rank, rref, PivotProfile};
pub use poly::{poly_mod_reduce, roots, Poly};
pub use series::Series;
