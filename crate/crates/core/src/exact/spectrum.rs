use num_bigint::BigInt;
use num_traits::{One, Signed};

use super::algebraic::AlgebraicNumber;
use super::charpoly::{char_poly, ScaledCharPoly};
use super::matrix::SymRatMatrix;
use super::poly::IntPolynomial;
use super::rational::{int, midpoint, Rational};
use super::sturm::{scale_point, RootCounter, SturmChain};
use crate::error::{Error, Result};

/// Bisection cap when separating an algebraic threshold from the other eigenvalues.
const SEPARATION_CAP: usize = 100_000;

/// Characteristic polynomial of a symmetric matrix with its Sturm machinery cached,
/// for repeated exact eigenvalue queries.
#[derive(Clone, Debug)]
pub struct Spectrum {
    order: usize,
    cp: ScaledCharPoly,
    counter: RootCounter,
}

impl Spectrum {
    pub fn new(m: &SymRatMatrix) -> Self {
        let cp = char_poly(m);
        let counter = RootCounter::new(&cp.poly);
        Spectrum { order: m.order(), cp, counter }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn char_poly(&self) -> &ScaledCharPoly {
        &self.cp
    }

    fn scaled(&self, t: &Rational) -> Rational {
        scale_point(t, &self.cp.scale)
    }

    /// Eigenvalues (with multiplicity) strictly below `t`.
    pub fn count_below(&self, t: &Rational) -> usize {
        self.counter.count_lt(&self.scaled(t))
    }

    /// Eigenvalues (with multiplicity) at most `t`.
    pub fn count_at_most(&self, t: &Rational) -> usize {
        self.counter.count_le(&self.scaled(t))
    }

    pub fn multiplicity(&self, t: &Rational) -> usize {
        self.counter.multiplicity(&self.scaled(t))
    }

    /// Scaled copy of `a` whose root is `scale · a`.
    fn scaled_algebraic(&self, a: &AlgebraicNumber) -> (IntPolynomial, Rational, Rational) {
        let d = &self.cp.scale;
        let s = Rational::from_integer(d.clone());
        (a.minpoly().scale_roots(d).primitive(), a.lo() * &s, a.hi() * &s)
    }

    /// Power of the minimal polynomial of `a` dividing the characteristic polynomial.
    pub fn multiplicity_algebraic(&self, a: &AlgebraicNumber) -> usize {
        if let Some(r) = a.as_rational() {
            return self.multiplicity(r);
        }
        let (m, _, _) = self.scaled_algebraic(a);
        self.cp.poly.multiplicity_of(&m)
    }

    /// Eigenvalues (with multiplicity) strictly below the algebraic number `a`.
    pub fn count_below_algebraic(&self, a: &AlgebraicNumber) -> Result<usize> {
        if let Some(r) = a.as_rational() {
            return Ok(self.count_below(r));
        }
        let (m, lo, hi) = self.scaled_algebraic(a);
        let k = self.cp.poly.multiplicity_of(&m);
        let rest;
        let q = if k == 0 {
            &self.counter
        } else {
            let mut p = self.cp.poly.clone();
            for _ in 0..k {
                p = p.div_exact(&m);
            }
            rest = RootCounter::new(&p);
            &rest
        };
        let mut alpha = AlgebraicNumber::new(m.clone(), lo, hi)?;
        let mut steps = 0;
        while q.count_in(alpha.lo(), alpha.hi()) > 0 {
            alpha.bisect();
            if let Some(r) = alpha.as_rational() {
                // only reachable when the polynomial was reducible
                return Ok(self.counter.count_lt(r));
            }
            steps += 1;
            if steps > SEPARATION_CAP {
                return Err(Error::Undecided { depth: SEPARATION_CAP as u32 });
            }
        }
        let below_conjugates = SturmChain::new(&m).roots_lt(alpha.lo());
        Ok(q.count_lt(alpha.lo()) + k * below_conjugates)
    }

    /// Certified enclosure `[lo, hi]` of the least eigenvalue with `hi − lo ≤ eps`:
    /// no eigenvalue lies below `lo` and at least one lies at or below `hi`.
    pub fn smallest_eig_interval(&self, eps: &Rational) -> Result<(Rational, Rational)> {
        if self.order == 0 {
            return Err(Error::InvalidParams("empty matrix has no eigenvalues".into()));
        }
        if !eps.is_positive() {
            return Err(Error::InvalidParams("eps must be positive".into()));
        }
        let bound = self.gershgorin_bound();
        let mut lo = -&bound - int(1);
        let mut hi = bound;
        while &hi - &lo > *eps {
            let mid = midpoint(&lo, &hi);
            if self.count_below(&mid) == 0 {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        Ok((lo, hi))
    }

    fn gershgorin_bound(&self) -> Rational {
        // all roots of the monic char poly of d·M satisfy |x| ≤ 1 + max|c_i|
        let max = self.cp.poly.coeffs().iter().map(|c| c.abs()).max().unwrap_or_else(BigInt::one);
        Rational::new(BigInt::one() + max, self.cp.scale.clone())
    }
}

pub fn count_eigs_below(m: &SymRatMatrix, t: &Rational) -> usize {
    Spectrum::new(m).count_below(t)
}

pub fn count_eigs_below_algebraic(m: &SymRatMatrix, a: &AlgebraicNumber) -> Result<usize> {
    Spectrum::new(m).count_below_algebraic(a)
}

pub fn smallest_eig_interval(m: &SymRatMatrix, eps: &Rational) -> Result<(Rational, Rational)> {
    Spectrum::new(m).smallest_eig_interval(eps)
}

/// Multiplicity of `lam` as an eigenvalue: `n − rank(M − lam·I)` when rational,
/// otherwise the power of its minimal polynomial dividing the characteristic polynomial.
pub fn multiplicity_at(m: &SymRatMatrix, lam: &AlgebraicNumber) -> usize {
    match lam.as_rational() {
        Some(r) => m.order() - m.shifted(&-r.clone()).exact_rank(),
        None => Spectrum::new(m).multiplicity_algebraic(lam),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::rat;

    fn m(rows: &[&[i64]]) -> SymRatMatrix {
        SymRatMatrix::from_int_rows(&rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    fn neg_k3() -> SymRatMatrix {
        m(&[&[0, -1, -1], &[-1, 0, -1], &[-1, -1, 0]])
    }

    #[test]
    fn counting() {
        let p3 = m(&[&[0, 1, 0], &[1, 0, 1], &[0, 1, 0]]);
        assert_eq!(count_eigs_below(&p3, &int(-1)), 1);
        assert_eq!(count_eigs_below(&p3, &int(-10)), 0);
        assert_eq!(count_eigs_below(&neg_k3(), &rat(-199, 100)), 1);
        assert_eq!(count_eigs_below(&neg_k3(), &int(-2)), 0);
    }

    #[test]
    fn multiplicities() {
        let k3 = m(&[&[0, 1, 1], &[1, 0, 1], &[1, 1, 0]]);
        assert_eq!(multiplicity_at(&neg_k3(), &AlgebraicNumber::from_int(-2)), 1);
        assert_eq!(multiplicity_at(&k3, &AlgebraicNumber::from_int(-1)), 2);
        assert_eq!(Spectrum::new(&k3).multiplicity(&int(-1)), 2);
        // P3 has eigenvalue -sqrt(2) once
        let p3 = m(&[&[0, 1, 0], &[1, 0, 1], &[0, 1, 0]]);
        let s2 = AlgebraicNumber::sqrt(&int(2)).unwrap().neg();
        assert_eq!(multiplicity_at(&p3, &s2), 1);
    }

    #[test]
    fn algebraic_counts() {
        let p3 = m(&[&[0, 1, 0], &[1, 0, 1], &[0, 1, 0]]);
        let s2 = AlgebraicNumber::sqrt(&int(2)).unwrap();
        let sp = Spectrum::new(&p3);
        assert_eq!(sp.count_below_algebraic(&s2.neg()).unwrap(), 0);
        assert_eq!(sp.count_below_algebraic(&s2).unwrap(), 2);
        let s3 = AlgebraicNumber::sqrt(&int(3)).unwrap();
        assert_eq!(sp.count_below_algebraic(&s3.neg()).unwrap(), 0);
        assert_eq!(sp.count_below_algebraic(&s3).unwrap(), 3);
    }

    #[test]
    fn rational_matrix_counts() {
        let a = SymRatMatrix::parse("2\n0 1/3\n1/3 0\n").unwrap();
        assert_eq!(count_eigs_below(&a, &rat(-1, 3)), 0);
        assert_eq!(Spectrum::new(&a).multiplicity(&rat(-1, 3)), 1);
        assert_eq!(count_eigs_below(&a, &rat(-33, 100)), 1);
        let s = AlgebraicNumber::sqrt(&rat(1, 10)).unwrap().neg();
        assert_eq!(count_eigs_below_algebraic(&a, &s).unwrap(), 1);
    }

    #[test]
    fn intervals() {
        let mut s4 = SymRatMatrix::zeros(5);
        for i in 1..5 {
            s4.set(0, i, int(1));
        }
        let (lo, hi) = smallest_eig_interval(&s4, &rat(1, 100)).unwrap();
        assert!(&hi - &lo <= rat(1, 100));
        assert!(lo <= int(-2) && int(-2) <= hi);
        let (lo, hi) = smallest_eig_interval(&SymRatMatrix::zeros(1), &rat(1, 10)).unwrap();
        assert!(lo <= int(0) && int(0) <= hi);
    }
}
