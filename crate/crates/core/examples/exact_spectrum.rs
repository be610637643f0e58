//! Exact characteristic polynomials, Sturm counting and certified eigenvalue enclosures:
//! the graphs `E_{2,n}` approach `−λ*` from above.

use signed_spectra::exact::rational::{rat, to_decimal};
use signed_spectra::exact::{constants, multiplicity_at, AlgebraicNumber, Spectrum};
use signed_spectra::graph::catalog;

fn main() -> signed_spectra::Result<()> {
    let petersen_like = catalog::by_name("cocktail", &["3".into()])?;
    let s = Spectrum::new(&petersen_like.adjacency());
    println!("char poly of the cocktail party graph on 6 vertices: {}", s.char_poly().poly);
    println!("multiplicity of -2: {}", multiplicity_at(&petersen_like.adjacency(), &AlgebraicNumber::from_int(-2)));

    let neg_lambda_star = constants::lambda_star().neg();
    for n in [2, 4, 6, 10, 20, 40] {
        let g = catalog::e2n(n);
        let s = Spectrum::new(&g.adjacency());
        let (lo, hi) = s.smallest_eig_interval(&rat(1, 1_000_000_000))?;
        let below = s.count_below_algebraic(&neg_lambda_star)?;
        println!("E_(2,{n:2}): lambda_1 in [{}, {}], eigenvalues below -lambda*: {below}", to_decimal(&lo, 7), to_decimal(&hi, 7));
    }
    Ok(())
}
