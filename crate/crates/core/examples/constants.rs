//! The plastic number β and the thresholds λ* and λ′, as certified algebraic numbers.

use std::cmp::Ordering;

use signed_spectra::exact::rational::{rat, to_decimal};
use signed_spectra::exact::{fundamental_constants, AlgebraicNumber};

fn main() -> signed_spectra::Result<()> {
    let c = fundamental_constants(&rat(1, 10_000_000));
    for (name, a) in [("beta", &c.beta), ("lambda*", &c.lambda_star), ("lambda'", &c.lambda_prime)] {
        println!("{name:8} in [{}, {}], minimal polynomial {}", to_decimal(a.lo(), 9), to_decimal(a.hi(), 9), a.minpoly());
    }
    let two = AlgebraicNumber::from_int(2);
    assert_eq!(two.try_cmp(&c.lambda_star)?, Ordering::Less);
    assert_eq!(c.lambda_star.try_cmp(&c.lambda_prime)?, Ordering::Less);
    println!("2 < lambda* < lambda' (exact comparison)");
    Ok(())
}
