//! The `K_{p,p}` witness for the ratio `|G| / mult(−2, G)` and a bounded search that
//! confirms nothing smaller turns up within nine vertices.

use std::time::Instant;

use signed_spectra::exact::AlgebraicNumber;
use signed_spectra::kp::{kp_search, kpp_witness, signed_chromatic};

fn main() -> signed_spectra::Result<()> {
    for p in 2..=6 {
        let w = kpp_witness(p)?;
        let chi = signed_chromatic(&w.graph.negated(), 1 << 20)?.value();
        println!(
            "p={p}: {} vertices, multiplicity {} at -2, ratio {}, chi(-G) = {:?}",
            w.vertex_count, w.multiplicity, w.ratio, chi
        );
    }
    let t = Instant::now();
    let best = kp_search(3, &AlgebraicNumber::from_int(2), 9)?;
    match best {
        Some(w) => println!("best for p=3 within 9 vertices: ratio {} on {} vertices ({:.1?})", w.ratio, w.vertex_count, t.elapsed()),
        None => println!("no qualifying graph within 9 vertices"),
    }
    Ok(())
}
