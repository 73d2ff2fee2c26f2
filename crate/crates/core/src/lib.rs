//! Exact arithmetic for level-1 elliptic modular forms, index-1 Jacobi
//! forms and their Saito-Kurokawa lifts, with modular-symbol L-values and
//! Bernoulli numbers modulo large primes.

pub mod error;
pub mod exactnum;
pub mod interchange;
pub mod jacobi;
pub mod level1;
pub mod lfun;
pub mod lifts;
pub mod ntt;
pub mod pipeline;
pub mod qexp;
pub mod siegel;

pub use error::{Error, Result};
