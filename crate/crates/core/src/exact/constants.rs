use super::algebraic::AlgebraicNumber;
use super::poly::IntPolynomial;
use super::rational::{int, Rational};

/// Minimal polynomial of the plastic number: `x³ − x − 1`.
pub fn beta_minpoly() -> IntPolynomial {
    IntPolynomial::from_i64(&[-1, -1, 0, 1])
}

/// Minimal polynomial of `β^{1/2} + β^{−1/2}`, obtained by eliminating β from
/// `y = β + 1/β + 2` (with `y = x²`): `y³ − 5y² + 4y − 1`.
pub fn lambda_star_minpoly() -> IntPolynomial {
    IntPolynomial::from_i64(&[-1, 0, 4, 0, -5, 0, 1])
}

/// Minimal polynomial of `√(2+√5)`: `x⁴ − 4x² − 1`.
pub fn lambda_prime_minpoly() -> IntPolynomial {
    IntPolynomial::from_i64(&[-1, 0, -4, 0, 1])
}

/// The plastic number, the unique real root of `x³ = x + 1`.
pub fn beta() -> AlgebraicNumber {
    AlgebraicNumber::new(beta_minpoly(), int(1), int(2)).expect("isolating interval for beta")
}

/// `λ* = β^{1/2} + β^{−1/2} ≈ 2.01980`.
pub fn lambda_star() -> AlgebraicNumber {
    AlgebraicNumber::new(lambda_star_minpoly(), int(2), int(3)).expect("isolating interval for lambda*")
}

/// `λ′ = √(2+√5) ≈ 2.05817`.
pub fn lambda_prime() -> AlgebraicNumber {
    AlgebraicNumber::new(lambda_prime_minpoly(), int(2), int(3)).expect("isolating interval for lambda'")
}

#[derive(Clone, Debug)]
pub struct Constants {
    pub beta: AlgebraicNumber,
    pub lambda_star: AlgebraicNumber,
    pub lambda_prime: AlgebraicNumber,
}

/// β, λ* and λ′ with isolating intervals of width at most `eps`.
pub fn fundamental_constants(eps: &Rational) -> Constants {
    Constants {
        beta: beta().refined(eps),
        lambda_star: lambda_star().refined(eps),
        lambda_prime: lambda_prime().refined(eps),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::rat;
    use crate::exact::sturm::SturmChain;
    use num_bigint::BigInt;
    use std::cmp::Ordering;

    #[test]
    fn intervals() {
        let c = fundamental_constants(&rat(1, 1_000_000));
        assert!(c.beta.lo() > &rat(13247, 10000) && c.beta.hi() < &rat(13248, 10000));
        assert!(c.lambda_star.lo() > &rat(20197, 10000) && c.lambda_star.hi() < &rat(20199, 10000));
        assert!(c.lambda_prime.lo() > &rat(20581, 10000) && c.lambda_prime.hi() < &rat(20582, 10000));
    }

    #[test]
    fn beta_has_one_real_root() {
        assert_eq!(SturmChain::new(&beta_minpoly()).real_root_count(), 1);
    }

    /// Polynomials in β reduced modulo β³ − β − 1, as coefficient triples over Q.
    fn reduce(mut c: Vec<BigInt>) -> [BigInt; 3] {
        while c.len() > 3 {
            let top = c.pop().unwrap();
            let k = c.len(); // top multiplies β^k = β^(k-3)(β + 1)
            c[k - 2] += &top;
            c[k - 3] += &top;
        }
        c.resize(3, BigInt::from(0));
        [c[0].clone(), c[1].clone(), c[2].clone()]
    }

    fn mul(a: &[BigInt; 3], b: &[BigInt; 3]) -> [BigInt; 3] {
        let mut c = vec![BigInt::from(0); 5];
        for i in 0..3 {
            for j in 0..3 {
                c[i + j] += &a[i] * &b[j];
            }
        }
        reduce(c)
    }

    #[test]
    fn lambda_star_minpoly_vanishes_algebraically() {
        // λ² = β + 1/β + 2 and 1/β = β² − 1, so y := λ² = β² + β + 1.
        let one = BigInt::from(1);
        let y = [one.clone(), one.clone(), one.clone()];
        let y2 = mul(&y, &y);
        let y3 = mul(&y2, &y);
        // y³ − 5y² + 4y − 1
        let r: Vec<BigInt> = (0..3)
            .map(|i| &y3[i] - BigInt::from(5) * &y2[i] + BigInt::from(4) * &y[i] - if i == 0 { one.clone() } else { BigInt::from(0) })
            .collect();
        assert!(r.iter().all(|c| c == &BigInt::from(0)));
        // and 1/β = β² − 1 indeed: β(β² − 1) = β³ − β = 1
        assert_eq!(mul(&[BigInt::from(0), one.clone(), BigInt::from(0)], &[-one.clone(), BigInt::from(0), one.clone()]), [one, BigInt::from(0), BigInt::from(0)]);
    }

    #[test]
    fn lambda_prime_squared_is_two_plus_sqrt5() {
        // (x² − 2)² = 5  ⇔  x⁴ − 4x² − 1 = 0
        let l = lambda_prime().refined(&rat(1, 1 << 30));
        let s5 = crate::exact::algebraic::AlgebraicNumber::sqrt(&crate::exact::rational::int(5)).unwrap();
        let sq_lo = l.lo() * l.lo() - crate::exact::rational::int(2);
        let sq_hi = l.hi() * l.hi() - crate::exact::rational::int(2);
        assert_eq!(s5.cmp_rational(&sq_lo), Ordering::Greater);
        assert_eq!(s5.cmp_rational(&sq_hi), Ordering::Less);
    }

    #[test]
    fn ordering_of_thresholds() {
        let two = AlgebraicNumber::from_int(2);
        assert_eq!(two.try_cmp(&lambda_star()).unwrap(), Ordering::Less);
        assert_eq!(lambda_star().try_cmp(&lambda_prime()).unwrap(), Ordering::Less);
    }
}
