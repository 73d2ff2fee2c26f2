//! Serializing forms to JSON records and reusing them through the on-disk
//! cache.
//!
//!     SKLIFT_CACHE_DIR=/tmp/sk cargo run --example records_cache

use std::time::Instant;

use sklift::interchange::{self, Cache, FormRecord};
use sklift::jacobi::{ez_to_kohnen, jacobi_generators};
use sklift::level1::{dim_cusp, hecke_matrix_cached};
use sklift::lifts::maass_lift;

fn main() -> sklift::Result<()> {
    let cache = Cache::from_env();
    let w = 54;
    let prec = 2 * (dim_cusp(w) + 1);
    for round in 0..2 {
        let t = Instant::now();
        let m = hecke_matrix_cached(w, 2, prec, &cache)?;
        println!("round {round}: T(2) on S_{w} is {}x{} ({:.1?})", m.rows(), m.cols(), t.elapsed());
    }
    println!("cache directory: {}", cache.dir().display());

    let (p10, _) = jacobi_generators(145)?;
    let lift = maass_lift(&ez_to_kohnen(&p10), 6)?;
    let rec = interchange::siegel_to_record(&lift, interchange::params([("bound", "6".into())]));
    let text = rec.to_json();
    let back = interchange::siegel_from_record(&FormRecord::from_json(&text)?)?;
    println!("Siegel record: {} bytes, hash {}, round trip {}", text.len(), rec.metadata.sha256, back == lift);
    Ok(())
}
