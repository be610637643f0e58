//! Root-system representations in `D_n` and `E8`, and the Gram-matrix check `A + 2I`.

use signed_spectra::graph::catalog;
use signed_spectra::line::roots::{root_representation, RootSystem};

fn main() -> signed_spectra::Result<()> {
    for (name, g) in [("K3", catalog::complete(3, signed_spectra::graph::Sign::Pos)), ("E8~", catalog::e8_tilde()), ("S5", catalog::star(5))] {
        for sys in [RootSystem::d_for(&g), RootSystem::E8] {
            match root_representation(&g, sys, 1 << 22)? {
                Some(r) => println!("{name} in {sys:?}: verified {}\n{r}", r.verify(&g)),
                None => println!("{name} in {sys:?}: none"),
            }
        }
    }
    Ok(())
}
