//! Local factors of a Saito-Kurokawa lift: spinor and standard Euler
//! factors at small primes, and the splitting of the standard factor into
//! Dirichlet and shifted elliptic pieces.

use sklift::exactnum::{NumberField, Poly};
use sklift::level1::newform;
use sklift::lfun::{euler_factor_at, DirichletChar};
use sklift::lifts::{
    dirichlet_euler_factor, elliptic_euler_factor, spinor_euler_factor, standard_euler_factor,
};

fn show(field: &NumberField, p: &Poly<NumberField>) -> String {
    p.coeffs()
        .iter()
        .enumerate()
        .map(|(i, c)| format!("({})t^{i}", field.describe(c)))
        .collect::<Vec<_>>()
        .join(" + ")
}

fn main() -> sklift::Result<()> {
    let k = 10;
    let f = newform(2 * k - 2, 8)?;
    let field = &f.field;
    for ell in [2u64, 3, 5, 7] {
        let a = f.coeff(ell as usize)?.clone();
        let spin = spinor_euler_factor(field, &a, k, ell);
        let std = standard_euler_factor(field, &a, k, ell, 1)?;
        let split = dirichlet_euler_factor(field, ell, 1, -2)
            .poly
            .mul(&elliptic_euler_factor(field, &a, k, ell, 1, k - 3).poly)
            .mul(&elliptic_euler_factor(field, &a, k, ell, 1, k - 4).poly);
        println!("l={ell}: a(l) = {}", field.describe(&a));
        println!("  spinor   {}", show(field, &spin.poly));
        println!("  standard {}", show(field, &std.poly));
        println!("  standard = Dirichlet x elliptic x elliptic: {}", std.poly == split);
    }
    let chi = DirichletChar::quadratic(-3)?;
    for s in [1i64, 9] {
        let e = euler_factor_at(field, s, &chi, Some(&f), 2)?;
        println!("L(f, chi_-3, s) factor at 2, s={s}: {}", field.describe(&e));
    }
    Ok(())
}
