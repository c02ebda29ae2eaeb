//! Computations with maximal curves over `F_{q^2}`.

pub mod algebra;
pub mod arith;
pub mod classify;
pub mod curve;
pub mod error;
pub mod field;
pub mod gf;
pub mod linsys;
pub mod semigroup;
pub mod zeta;

pub use error::{Error, Result};
pub use field::Field;
pub use gf::{embedding, make_field, Embedding, Fe, Gf};
