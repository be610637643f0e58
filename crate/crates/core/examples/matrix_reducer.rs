//! Small principal submatrices certifying an eigenvalue below `−2` in symmetric integer
//! matrices with zero diagonal.

use signed_spectra::exact::rational::int;
use signed_spectra::reduce::{find_small_witness, verify_witness, IntSymMatrix};

fn main() -> signed_spectra::Result<()> {
    let samples = [
        "0 3 0\n3 0 1\n0 1 0\n",
        "0 2 1 0\n2 0 0 1\n1 0 0 0\n0 1 0 0\n",
        "0 1 1 1 1 1\n1 0 0 0 0 0\n1 0 0 0 0 0\n1 0 0 0 0 0\n1 0 0 0 0 0\n1 0 0 0 0 0\n",
        "0 1 0\n1 0 1\n0 1 0\n",
    ];
    for text in samples {
        let a = IntSymMatrix::parse(text)?;
        match find_small_witness(&a, &int(2), 10)? {
            Some(w) => println!(
                "order {}: witness {:?} via {:?}, replays {}",
                a.order(),
                w.indices,
                w.kind,
                verify_witness(&a, &w.indices, &int(2))
            ),
            None => println!("order {}: no eigenvalue below -2", a.order()),
        }
    }
    Ok(())
}
