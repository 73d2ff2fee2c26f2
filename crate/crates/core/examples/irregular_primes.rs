//! Bernoulli numbers modulo a prime: a single index, and the full scan for
//! irregular indices via one power-series inversion.

use std::time::Instant;

use sklift::lfun::{bernoulli_mod_p, irregular_scan, ScanMethod};

fn main() -> sklift::Result<()> {
    for p in [37u64, 59, 67, 101, 103] {
        println!("p = {p}: irregular indices {:?}", irregular_scan(p, ScanMethod::Series)?);
    }
    let p = 516223;
    println!("B_451304 mod {p} = {}", bernoulli_mod_p(451304, p)?.value);
    let t = Instant::now();
    let idx = irregular_scan(p, ScanMethod::Series)?;
    println!("p = {p}: irregular indices {idx:?} ({:.1?})", t.elapsed());
    Ok(())
}
