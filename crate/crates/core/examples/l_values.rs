//! Modular symbols for S_54: Hecke compatibility with the q-expansion side,
//! then algebraic L-values and their 516223-adic valuations.

use sklift::level1::{hecke_matrix, newform};
use sklift::lfun::{l_alg, l_alg_products, DirichletChar, SymbolSpace};

fn main() -> sklift::Result<()> {
    let w = 54;
    let p = 516223;
    let space = SymbolSpace::new(w)?;
    println!("symbol space dim {}, cuspidal signs {:?}", space.dim(), space.cuspidal_sign_dims());
    let from_q = hecke_matrix(w, 2, 40)?.charpoly()?;
    for sign in [1, -1] {
        let cp = space.cuspidal_charpoly(2, sign)?;
        println!("T(2) on sign {sign:+}: matches q-expansion side: {}", cp == from_q);
    }
    let f = newform(w, 40)?;
    let triv = DirichletChar::trivial();
    let chi = DirichletChar::quadratic(-3)?;
    let centre = l_alg(&space, &f, 27, &triv)?;
    println!("L_alg(f, 27) is zero: {}", centre.is_zero());
    let reqs = vec![
        (28, triv.clone()),
        (1, chi.clone()),
        (2, chi.clone()),
        (27, chi.clone()),
        (26, triv.clone()),
    ];
    for r in l_alg_products(&f, &reqs, p)? {
        println!("j={:>2} chi={:<7} v_p(N L_alg) = {:?}   N = {}", r.j, r.chi, r.valuation, r.norm);
    }
    Ok(())
}
