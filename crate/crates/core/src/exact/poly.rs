use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::rational::Rational;

/// Polynomial with arbitrary-precision integer coefficients, constant term first.
/// The leading coefficient is nonzero unless the polynomial is zero (empty vector).
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(coeffs: Vec<BigInt>) -> Self {
        let mut p = IntPolynomial { coeffs };
        p.trim();
        p
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn constant(c: BigInt) -> Self {
        Self::new(vec![c])
    }

    /// `x`.
    pub fn x() -> Self {
        Self::from_i64(&[0, 1])
    }

    /// `b·x − a` for the rational `a/b`.
    pub fn linear_root(r: &Rational) -> Self {
        Self::new(vec![-r.numer().clone(), r.denom().clone()])
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; the zero polynomial reports `None`.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn deg(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn leading(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_default()
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    pub fn content(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    /// Divides out the content and makes the leading coefficient positive.
    pub fn primitive(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut g = self.content();
        if self.leading().is_negative() {
            g = -g;
        }
        Self::new(self.coeffs.iter().map(|c| c / &g).collect())
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * k).collect())
    }

    /// `p(−x)`.
    pub fn reflect(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| if i % 2 == 1 { -c } else { c.clone() })
                .collect(),
        )
    }

    /// `d^deg · p(x/d)`, whose roots are the roots of `p` times `d`.
    pub fn scale_roots(&self, d: &BigInt) -> Self {
        let n = self.deg();
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| c * num_traits::pow(d.clone(), n - i))
                .collect(),
        )
    }

    pub fn eval_int(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        Rational::new(self.homogeneous(x), num_traits::pow(x.denom().clone(), self.deg()))
    }

    fn homogeneous(&self, x: &Rational) -> BigInt {
        let (a, b) = (x.numer(), x.denom());
        let mut acc = BigInt::zero();
        let mut bpow = BigInt::one();
        // sum c_i a^i b^(n-i)
        for c in self.coeffs.iter().rev() {
            acc = acc * a + c * &bpow;
            bpow *= b;
        }
        acc
    }

    /// Sign of `p(x)` as −1, 0 or 1.
    pub fn sign_at(&self, x: &Rational) -> i8 {
        let v = self.homogeneous(x);
        sign_of(&v)
    }

    /// Sign of `p` as `x → +∞` (`positive == true`) or `x → −∞`.
    pub fn sign_at_infinity(&self, positive: bool) -> i8 {
        if self.is_zero() {
            return 0;
        }
        let s = sign_of(&self.leading());
        if !positive && self.deg() % 2 == 1 {
            -s
        } else {
            s
        }
    }

    /// Remainder of `lc(b)^k · self` divided by `b`, with the multiplier forced positive
    /// so that sign sequences are preserved.
    pub fn positive_pseudo_rem(&self, b: &Self) -> Self {
        assert!(!b.is_zero(), "division by zero polynomial");
        let db = b.deg();
        let lb = b.leading();
        let lb_abs = lb.abs();
        let mut r = self.clone();
        while !r.is_zero() && r.deg() >= db {
            let shift = r.deg() - db;
            let lr = r.leading();
            // r <- |lb| r - sign(lb) lr x^shift b
            let factor = if lb.is_negative() { -&lr } else { lr };
            let mut next: Vec<BigInt> = r.coeffs.iter().map(|c| c * &lb_abs).collect();
            for (i, c) in b.coeffs.iter().enumerate() {
                next[i + shift] -= &factor * c;
            }
            r = Self::new(next);
        }
        r
    }

    /// Exact division; panics if `b` does not divide `self` over the integers.
    pub fn div_exact(&self, b: &Self) -> Self {
        let (q, r) = self.div_rem_exact(b).expect("inexact polynomial division");
        assert!(r.is_zero(), "nonzero remainder in exact division");
        q
    }

    /// Long division when every quotient coefficient is integral; `None` otherwise.
    pub fn div_rem_exact(&self, b: &Self) -> Option<(Self, Self)> {
        assert!(!b.is_zero(), "division by zero polynomial");
        let db = b.deg();
        let lb = b.leading();
        let mut r = self.coeffs.clone();
        if r.len() < b.coeffs.len() {
            return Some((Self::zero(), self.clone()));
        }
        let mut q = vec![BigInt::zero(); r.len() - db];
        for k in (0..q.len()).rev() {
            let top = &r[k + db];
            if top.is_zero() {
                continue;
            }
            let (qk, rem) = top.div_rem(&lb);
            if !rem.is_zero() {
                return None;
            }
            for (i, c) in b.coeffs.iter().enumerate() {
                r[k + i] -= &qk * c;
            }
            q[k] = qk;
        }
        Some((Self::new(q), Self::new(r)))
    }

    /// Greatest common divisor, primitive with positive leading coefficient.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.primitive();
        let mut b = other.primitive();
        if a.is_zero() {
            return b;
        }
        if b.is_zero() {
            return a;
        }
        if a.deg() < b.deg() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.positive_pseudo_rem(&b).primitive();
            a = b;
            b = r;
        }
        a.primitive()
    }

    /// Number of times `f` divides `self` (self nonzero, deg f ≥ 1).
    pub fn multiplicity_of(&self, f: &Self) -> usize {
        // f primitive: divisibility over Q gives an integral quotient (Gauss).
        let f = f.primitive();
        let mut p = self.clone();
        let mut k = 0;
        while let Some((q, r)) = p.div_rem_exact(&f) {
            if !r.is_zero() || q.is_zero() {
                break;
            }
            p = q;
            k += 1;
        }
        k
    }
}

fn sign_of(v: &BigInt) -> i8 {
    match v.cmp(&BigInt::zero()) {
        Ordering::Less => -1,
        Ordering::Equal => 0,
        Ordering::Greater => 1,
    }
}

impl std::ops::Add for &IntPolynomial {
    type Output = IntPolynomial;
    fn add(self, o: &IntPolynomial) -> IntPolynomial {
        let n = self.coeffs.len().max(o.coeffs.len());
        IntPolynomial::new((0..n).map(|i| self.coeff(i) + o.coeff(i)).collect())
    }
}

impl std::ops::Sub for &IntPolynomial {
    type Output = IntPolynomial;
    fn sub(self, o: &IntPolynomial) -> IntPolynomial {
        let n = self.coeffs.len().max(o.coeffs.len());
        IntPolynomial::new((0..n).map(|i| self.coeff(i) - o.coeff(i)).collect())
    }
}

impl std::ops::Mul for &IntPolynomial {
    type Output = IntPolynomial;
    fn mul(self, o: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || o.is_zero() {
            return IntPolynomial::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in o.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPolynomial::new(out)
    }
}

impl std::ops::Neg for &IntPolynomial {
    type Output = IntPolynomial;
    fn neg(self) -> IntPolynomial {
        IntPolynomial::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let a = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let show_coeff = i == 0 || !a.is_one();
            if show_coeff {
                write!(f, "{a}")?;
            }
            match i {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{i}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::{int, rat};

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64(c)
    }

    #[test]
    fn display() {
        assert_eq!(p(&[-1, -1, 0, 1]).to_string(), "x^3 - x - 1");
        assert_eq!(p(&[0, 0, 0, -4, 0, 1]).to_string(), "x^5 - 4x^3");
        assert_eq!(IntPolynomial::zero().to_string(), "0");
    }

    #[test]
    fn eval_matches_rational_horner() {
        let f = p(&[-1, -1, 0, 1]);
        assert_eq!(f.eval(&rat(3, 2)), rat(27, 8) - rat(3, 2) - int(1));
        assert_eq!(f.eval(&int(2)), int(5));
        assert_eq!(f.sign_at(&rat(13, 10)), -1);
        assert_eq!(f.sign_at(&rat(14, 10)), 1);
    }

    #[test]
    fn gcd_and_division() {
        // (x-2)(x+1)^2 and (x+1)(x-3)
        let a = p(&[-2, -3, 0, 1]);
        let b = p(&[-3, -2, 1]);
        assert_eq!(a.gcd(&b), p(&[1, 1]));
        assert_eq!(a.div_exact(&p(&[1, 1])), p(&[-2, -1, 1]));
        assert_eq!(a.multiplicity_of(&p(&[1, 1])), 2);
        assert_eq!(a.multiplicity_of(&p(&[-2, 1])), 1);
        assert_eq!(a.multiplicity_of(&p(&[-3, 1])), 0);
    }

    #[test]
    fn gcd_with_nonmonic_factor() {
        // (2x-1)^2 (x+5) and (2x-1)(3x+1)
        let f = &(&p(&[-1, 2]) * &p(&[-1, 2])) * &p(&[5, 1]);
        let g = &p(&[-1, 2]) * &p(&[1, 3]);
        assert_eq!(f.gcd(&g), p(&[-1, 2]));
        assert_eq!(f.multiplicity_of(&p(&[-1, 2])), 2);
    }

    #[test]
    fn reflect_and_scale_roots() {
        let f = p(&[-2, 1]); // root 2
        assert_eq!(f.reflect().primitive(), p(&[2, 1]));
        assert_eq!(f.scale_roots(&BigInt::from(3)), p(&[-6, 1]));
    }
}
