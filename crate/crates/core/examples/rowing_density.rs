//! Rowing graphs: the least `a₁` with `λ₁(R(a₁)) < −λ′`, and certified rowing graphs whose
//! smallest eigenvalue sits just below `−t` for several targets `t ∈ (λ*, λ′)`.

use signed_spectra::exact::rational::rat;
use signed_spectra::exact::AlgebraicNumber;
use signed_spectra::rowing::{self, DensityOptions, RowingSpec};

fn main() -> signed_spectra::Result<()> {
    let a1 = rowing::find_a1_below_lambda_prime()?;
    let (lo, hi) = rowing::rowing_eig(&RowingSpec(vec![a1]), &rat(1, 100_000))?;
    println!("least a1 with lambda_1(R(a1)) < -lambda': {a1}, lambda_1 in [{lo}, {hi}]");
    println!("Rayleigh bound at a1: {}", rowing::a1_rayleigh_bound(a1));

    for (name, eps) in [("2.03", rat(1, 1000)), ("2.045", rat(1, 2000))] {
        let t = AlgebraicNumber::parse(name)?;
        match rowing::density_search(&t, &eps, DensityOptions::default()) {
            Ok(hit) => println!("t = {name}, eps = {eps}: {} ({} nodes)", hit.spec, hit.nodes),
            Err(e) => println!("t = {name}, eps = {eps}: {e}"),
        }
    }

    let eps = rat(1, 100);
    for name in ["2.025", "2.03", "2.04", "2.05", "sqrt(41/10)"] {
        let t = AlgebraicNumber::parse(name)?;
        match rowing::density_search(&t, &eps, DensityOptions::default()) {
            Ok(hit) => println!(
                "t = {name}: {} on {} vertices, lambda_1 ~ {:.6}, window lower end {:.6}, {} nodes",
                hit.spec,
                hit.spec.vertex_count(),
                approx(&hit.lo),
                approx(&hit.window_lo),
                hit.nodes
            ),
            Err(e) => println!("t = {name}: {e}"),
        }
    }
    Ok(())
}

fn approx(r: &signed_spectra::exact::Rational) -> f64 {
    use num_traits::ToPrimitive;
    r.to_f64().unwrap_or(f64::NAN)
}
