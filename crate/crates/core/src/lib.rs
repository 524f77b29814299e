//! Newton complementary duality for sets of forms.
//!
//! Exact rational polynomial arithmetic, the dual of a form set and the
//! Magnus involution, rational maps and their inverses, Rees presentation
//! ideals with the map that dualizes their x-block, de Jonquieres maps, and
//! a Groebner engine backing the ideal computations.

pub mod bigraded;
pub mod error;
pub mod groebner;
pub mod io;
pub mod jonquieres;
pub mod magnus;
pub mod maps;
pub mod newton;
pub mod poly;
pub mod random;
pub mod suites;

pub use error::{Error, Result};
pub use newton::FormSet;
pub use poly::{Coeff, ExponentVector, Monomial, Polynomial};
