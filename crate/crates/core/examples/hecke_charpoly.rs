//! Characteristic polynomial of T(2) on S_54 and the newform's eigenfield.
//!
//!     cargo run --example hecke_charpoly -- 54

use sklift::exactnum::{discriminant, roots_mod_p};
use sklift::level1::{dim_cusp, hecke_matrix, newform};

fn main() -> sklift::Result<()> {
    let w: i64 = std::env::args().nth(1).map_or(54, |s| s.parse().expect("weight"));
    let d = dim_cusp(w);
    println!("dim S_{w} = {d}");
    let t2 = hecke_matrix(w, 2, 2 * (d + 1))?;
    let g = t2.charpoly()?;
    println!("charpoly T(2) = {g}");
    println!("disc = {}", discriminant(&g)?);
    let f = newform(w, 12)?;
    println!("a(3) = {}", f.field.describe(f.coeff(3)?));
    if w == 54 {
        println!("roots mod 516223: {:?}", roots_mod_p(&g, 516223)?);
    }
    Ok(())
}
