use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::poly::IntPolynomial;
use super::rational::{int, midpoint, parse_rational, to_decimal, to_f64, Rational};
use super::sturm::SturmChain;
use crate::error::{Error, Result};

/// Maximum bisection depth when comparing two algebraic numbers.
pub const COMPARE_DEPTH: u32 = 256;

/// A real algebraic number: an integer polynomial with exactly one real root in `[lo, hi]`.
///
/// Irrational numbers keep `minpoly(lo)` and `minpoly(hi)` nonzero with opposite signs;
/// rational numbers are stored with a linear polynomial and `lo == hi`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraicNumber {
    minpoly: IntPolynomial,
    lo: Rational,
    hi: Rational,
}

impl AlgebraicNumber {
    pub fn from_rational(r: Rational) -> Self {
        AlgebraicNumber { minpoly: IntPolynomial::linear_root(&r), lo: r.clone(), hi: r }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(int(n))
    }

    /// Root of `poly` isolated by `[lo, hi]`. `poly` should be irreducible; it must at
    /// least be square-free with exactly one root in the interval.
    pub fn new(poly: IntPolynomial, lo: Rational, hi: Rational) -> Result<Self> {
        let poly = poly.primitive();
        if poly.deg() == 0 {
            return Err(Error::InvalidParams("constant polynomial has no root".into()));
        }
        if lo > hi {
            return Err(Error::InvalidParams("empty isolating interval".into()));
        }
        if poly.gcd(&poly.derivative()).deg() > 0 {
            return Err(Error::InvalidParams(format!("{poly} is not square-free")));
        }
        let chain = SturmChain::new(&poly);
        let k = chain.roots_in(&lo, &hi);
        if k != 1 {
            return Err(Error::InvalidParams(format!("{poly} has {k} roots in [{lo}, {hi}]")));
        }
        for end in [&lo, &hi] {
            if poly.sign_at(end) == 0 {
                return Ok(Self::from_rational(end.clone()));
            }
        }
        if poly.deg() == 1 {
            let r = Rational::new(-poly.coeff(0), poly.coeff(1));
            return Ok(Self::from_rational(r));
        }
        Ok(AlgebraicNumber { minpoly: poly, lo, hi })
    }

    /// Non-negative square root of a non-negative rational.
    pub fn sqrt(r: &Rational) -> Result<Self> {
        if r.is_negative() {
            return Err(Error::InvalidParams(format!("sqrt of negative {r}")));
        }
        let (p, q) = (r.numer().clone(), r.denom().clone());
        let pq = &p * &q;
        let s = pq.sqrt();
        if &s * &s == pq {
            return Ok(Self::from_rational(Rational::new(s, q)));
        }
        // q x^2 - p
        let poly = IntPolynomial::new(vec![-p, BigInt::zero(), q]);
        let hi = r.clone().max(int(1));
        Self::new(poly, int(0), hi)
    }

    pub fn minpoly(&self) -> &IntPolynomial {
        &self.minpoly
    }

    pub fn interval(&self) -> (&Rational, &Rational) {
        (&self.lo, &self.hi)
    }

    pub fn lo(&self) -> &Rational {
        &self.lo
    }

    pub fn hi(&self) -> &Rational {
        &self.hi
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        (self.minpoly.deg() == 1).then_some(&self.lo)
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    pub fn neg(&self) -> Self {
        AlgebraicNumber {
            minpoly: self.minpoly.reflect().primitive(),
            lo: -self.hi.clone(),
            hi: -self.lo.clone(),
        }
    }

    /// One bisection step.
    pub fn bisect(&mut self) {
        if self.as_rational().is_some() {
            return;
        }
        let mid = midpoint(&self.lo, &self.hi);
        let s = self.minpoly.sign_at(&mid);
        if s == 0 {
            *self = Self::from_rational(mid);
        } else if s == self.minpoly.sign_at(&self.lo) {
            self.lo = mid;
        } else {
            self.hi = mid;
        }
    }

    /// A copy whose interval has width at most `eps`.
    pub fn refined(&self, eps: &Rational) -> Self {
        let mut a = self.clone();
        while a.width() > *eps {
            a.bisect();
        }
        a
    }

    /// Exact comparison with a rational.
    pub fn cmp_rational(&self, r: &Rational) -> Ordering {
        if let Some(q) = self.as_rational() {
            return q.cmp(r);
        }
        if *r < self.lo {
            return Ordering::Greater;
        }
        if *r > self.hi {
            return Ordering::Less;
        }
        if self.minpoly.sign_at(r) == 0 {
            // r is a root inside the isolating interval, hence the root
            return Ordering::Equal;
        }
        let mut a = self.clone();
        loop {
            a.bisect();
            if *r < a.lo {
                return Ordering::Greater;
            }
            if *r > a.hi {
                return Ordering::Less;
            }
        }
    }

    /// Exact comparison; errors only if the two numbers cannot be separated within
    /// [`COMPARE_DEPTH`] bisections.
    pub fn try_cmp(&self, other: &Self) -> Result<Ordering> {
        if let Some(r) = other.as_rational() {
            return Ok(self.cmp_rational(r));
        }
        if let Some(r) = self.as_rational() {
            return Ok(other.cmp_rational(r).reverse());
        }
        if self.minpoly == other.minpoly {
            let lo = (&self.lo).max(&other.lo);
            let hi = (&self.hi).min(&other.hi);
            if lo <= hi && SturmChain::new(&self.minpoly).roots_in(lo, hi) == 1 {
                return Ok(Ordering::Equal);
            }
        }
        let (mut a, mut b) = (self.clone(), other.clone());
        for _ in 0..COMPARE_DEPTH {
            if a.hi < b.lo {
                return Ok(Ordering::Less);
            }
            if b.hi < a.lo {
                return Ok(Ordering::Greater);
            }
            a.bisect();
            b.bisect();
            if let (Some(x), Some(y)) = (a.as_rational(), b.as_rational()) {
                return Ok(x.cmp(y));
            }
            if a.as_rational().is_some() || b.as_rational().is_some() {
                return a.try_cmp(&b);
            }
        }
        Err(Error::Undecided { depth: COMPARE_DEPTH })
    }

    pub fn to_f64(&self) -> f64 {
        to_f64(&midpoint(&self.lo, &self.hi))
    }

    /// Parses `n`, `p/q`, decimals, `sqrt(r)`, `-sqrt(r)` and the named constants
    /// `beta`, `lambda_star` and `lambda_prime`.
    pub fn parse(s: &str) -> Result<Self> {
        let t = s.trim();
        if let Some(rest) = t.strip_prefix('-') {
            if !rest.trim_start().starts_with(|c: char| c.is_ascii_digit()) {
                return Ok(Self::parse(rest)?.neg());
            }
        }
        match t {
            "beta" | "plastic" => return Ok(super::constants::beta()),
            "lambda_star" | "lambda*" => return Ok(super::constants::lambda_star()),
            "lambda_prime" | "lambda'" => return Ok(super::constants::lambda_prime()),
            _ => {}
        }
        if let Some(inner) = t.strip_prefix("sqrt(").and_then(|r| r.strip_suffix(')')) {
            return Self::sqrt(&parse_rational(inner)?);
        }
        parse_rational(t)
            .map(Self::from_rational)
            .map_err(|_| Error::parse(0, format!("cannot parse algebraic number {t:?}")))
    }
}

impl fmt::Display for AlgebraicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.as_rational() {
            Some(r) => write!(f, "{r}"),
            None => write!(
                f,
                "root of {} in [{}, {}] ≈ {}",
                self.minpoly,
                self.lo,
                self.hi,
                to_decimal(self.refined(&Rational::new(1.into(), 1_000_000_000u64.into())).lo(), 8)
            ),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::rat;

    #[test]
    fn sqrt_two() {
        let s = AlgebraicNumber::sqrt(&int(2)).unwrap();
        assert_eq!(s.cmp_rational(&rat(141, 100)), Ordering::Greater);
        assert_eq!(s.cmp_rational(&rat(142, 100)), Ordering::Less);
        let r = s.refined(&rat(1, 1_000_000));
        assert!(r.width() <= rat(1, 1_000_000));
        assert!((r.to_f64() - 2f64.sqrt()).abs() < 1e-6);
    }

    #[test]
    fn perfect_square_is_rational() {
        let s = AlgebraicNumber::sqrt(&rat(9, 4)).unwrap();
        assert_eq!(s.as_rational(), Some(&rat(3, 2)));
    }

    #[test]
    fn comparisons() {
        let a = AlgebraicNumber::sqrt(&int(2)).unwrap();
        let b = AlgebraicNumber::sqrt(&int(3)).unwrap();
        assert_eq!(a.try_cmp(&b).unwrap(), Ordering::Less);
        assert_eq!(b.try_cmp(&a).unwrap(), Ordering::Greater);
        assert_eq!(a.try_cmp(&a.refined(&rat(1, 1000))).unwrap(), Ordering::Equal);
        assert_eq!(a.neg().try_cmp(&AlgebraicNumber::from_int(-1)).unwrap(), Ordering::Less);
    }

    #[test]
    fn rejects_bad_intervals() {
        let p = IntPolynomial::from_i64(&[-2, 0, 1]);
        assert!(AlgebraicNumber::new(p.clone(), int(-2), int(2)).is_err());
        assert!(AlgebraicNumber::new(p, int(2), int(3)).is_err());
        let sq = IntPolynomial::from_i64(&[1, 2, 1]);
        assert!(AlgebraicNumber::new(sq, int(-2), int(0)).is_err());
    }

    #[test]
    fn parse_forms() {
        assert_eq!(AlgebraicNumber::parse("2").unwrap().as_rational(), Some(&int(2)));
        assert_eq!(AlgebraicNumber::parse("203/100").unwrap().as_rational(), Some(&rat(203, 100)));
        let s = AlgebraicNumber::parse("-sqrt(2)").unwrap();
        assert_eq!(s.cmp_rational(&rat(-141, 100)), Ordering::Less);
        let l = AlgebraicNumber::parse("lambda_star").unwrap();
        assert_eq!(l.cmp_rational(&int(2)), Ordering::Greater);
        assert!(AlgebraicNumber::parse("pi").is_err());
    }
}
