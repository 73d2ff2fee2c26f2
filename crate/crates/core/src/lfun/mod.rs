//! Special values: Bernoulli numbers, Dirichlet L-values, and algebraic
//! critical values of level-one newforms.

pub mod bernoulli;
pub mod character;
pub mod euler;

pub use bernoulli::{bernoulli_mod_p, dirichlet_l_neg, gen_bernoulli, irregular_scan, ScanMethod};
pub use character::{kronecker, DirichletChar};
pub mod modsym;

pub use modsym::{l_alg, l_alg_products, AlgebraicLValue, NormReport, SymbolSpace};
pub use euler::{euler_factor_at, remove_euler, remove_euler_q};
