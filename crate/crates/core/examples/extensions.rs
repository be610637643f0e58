//! Path, path-clique and clique extensions from signed anchor sets, and the sizes of the
//! extension families of a small graph.

use signed_spectra::extension::{anchor_subsets, clique_extension, extension_family, path_extension};
use signed_spectra::graph::{catalog, SignedVertexSubset};

fn main() -> signed_spectra::Result<()> {
    let f = catalog::path(2);
    let a = SignedVertexSubset::parse("0+,2-")?;
    let g = path_extension(&f, &a, 3)?;
    println!("(P3, {a}, 3):\n{g}");
    let k = clique_extension(&f, &a, 2)?;
    println!("(P3, {a}, K2) has {} vertices and {} edges", k.order(), k.edge_count());
    println!("signed anchor sets of a 3-vertex graph: {}", anchor_subsets(3, true).count());
    for (ell, m) in [(1, 1), (2, 2), (3, 3)] {
        let fam = extension_family(&f, ell, m, true)?;
        println!("extension family with l={ell}, m={m}: {} graphs", fam.len());
    }
    Ok(())
}
