//! Switching equivalence: normal forms, switching isomorphism, and canonical labels.

use signed_spectra::graph::iso::{canonical_form, is_isomorphic, is_switching_isomorphic, switching_normal_form};
use signed_spectra::graph::{catalog, Sign};

fn main() -> signed_spectra::Result<()> {
    let c5 = catalog::cycle(&[Sign::Pos, Sign::Neg, Sign::Pos, Sign::Neg, Sign::Neg])?;
    let (normal, switched) = switching_normal_form(&c5);
    println!("C5 with three negative edges, switched at {switched:?}:\n{normal}");
    let all_neg = catalog::cycle(&[Sign::Neg; 5])?;
    println!("switching isomorphic to the all-negative C5: {}", is_switching_isomorphic(&c5, &all_neg)?);
    println!("switching isomorphic to the all-positive C5: {}", is_switching_isomorphic(&c5, &catalog::cycle(&[Sign::Pos; 5])?)?);

    let g = catalog::e2n(4);
    let h = g.permuted(&[7, 6, 5, 4, 3, 2, 1, 0]);
    let (kg, _) = canonical_form(&g, 1 << 16)?;
    let (kh, _) = canonical_form(&h, 1 << 16)?;
    println!("relabeled E_(2,4): isomorphic {}, equal canonical forms {}", is_isomorphic(&g, &h)?, kg == kh);
    Ok(())
}
