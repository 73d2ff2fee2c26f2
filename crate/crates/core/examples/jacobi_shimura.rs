//! Index-1 Jacobi cusp forms, their Kohnen plus-space images, and the
//! Shimura lift back to integral weight.

use sklift::jacobi::{ez_to_kohnen, jacobi_cusp_basis, kohnen_hecke, plus_space_check};
use sklift::level1::{newform, rational_coeff};
use sklift::lifts::shimura_lift;

fn main() -> sklift::Result<()> {
    let prec = 12;
    let need = 3 * (prec - 1) * (prec - 1) + 1;
    for k in [10i64, 11, 12, 14] {
        let basis = jacobi_cusp_basis(k, need)?;
        if let Some(note) = &basis.note {
            println!("k={k}: {note}");
        }
        for phi in &basis.forms {
            let g = ez_to_kohnen(phi);
            let c: Vec<String> = (-8..=0).rev().map(|d| phi.c(d).unwrap().to_string()).collect();
            println!("k={k}: c(0), c(-1), ..., c(-8) = {}", c.join(", "));
            println!("  plus-space violations: {}", plus_space_check(&g).len());
            let lift = shimura_lift(&g, -3, prec)?;
            println!("  Shimura lift via D=-3: {:?}", lift.coeffs().iter().map(|x| x.to_string()).collect::<Vec<_>>());
            let t2 = kohnen_hecke(&g, 2)?;
            let ratio = t2.a(3)? / g.a(3)?;
            println!("  T(4) eigenvalue on g: {ratio}");
        }
        if basis.forms.len() == 1 {
            let f = newform(2 * k - 2, 3)?;
            println!("  newform a(2) of weight {}: {}", 2 * k - 2, rational_coeff(&f, 2)?);
        }
    }
    Ok(())
}
