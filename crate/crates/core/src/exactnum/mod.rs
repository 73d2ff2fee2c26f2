//! Exact arithmetic: fields, polynomials, matrices, integer factoring.

pub mod factor;
pub mod field;
pub mod intfactor;
pub mod intmat;
pub mod matrix;
pub mod numfield;
pub mod poly;

pub use factor::{discriminant, factor_over_q, is_irreducible, roots_mod_p};
pub use field::{q, qi, Field, PrimeField, Rationals};
pub use matrix::Matrix;
pub use numfield::{NfElem, NumberField, Residue};
pub use poly::Poly;
