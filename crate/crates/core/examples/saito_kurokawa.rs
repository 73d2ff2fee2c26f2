//! Saito-Kurokawa lifts of the weight 18 and 22 newforms: Maass relations,
//! and the genus-2 Hecke eigenvalues `l^(k-1) + l^(k-2) + a_f(l)`.
//!
//!     cargo run --example saito_kurokawa

use sklift::jacobi::{ez_to_kohnen, jacobi_cusp_basis};
use sklift::level1::{newform, rational_coeff};
use sklift::lifts::maass_lift;
use sklift::siegel::{eigenvalue_extract, hecke_t2_to, maass_check};

fn main() -> sklift::Result<()> {
    let bound = 6;
    for k in [10i64, 12] {
        let ell_max = 3;
        let basis = jacobi_cusp_basis(k, (4 * (ell_max * bound) * (ell_max * bound)) as usize)?;
        let g = ez_to_kohnen(&basis.forms[0]);
        let f = newform(2 * k - 2, 10)?;
        for ell in [2u64, 3] {
            let lift = maass_lift(&g, ell as i64 * bound)?;
            let violations = maass_check(&lift)?;
            let tf = hecke_t2_to(&lift, ell, bound)?;
            let report = eigenvalue_extract(&lift, &tf)?;
            let a = rational_coeff(&f, ell as usize)?;
            let expected = num_rational::BigRational::from_integer(
                num_bigint::BigInt::from(ell).pow((k - 1) as u32)
                    + num_bigint::BigInt::from(ell).pow((k - 2) as u32),
            ) + a;
            println!(
                "k={k} l={ell}: Maass violations {}, eigenvalue {} over {} ratios, expected {}",
                violations.len(),
                report.lambda,
                report.ratios.len(),
                expected
            );
        }
    }
    Ok(())
}
