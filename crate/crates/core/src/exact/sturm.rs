use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::poly::IntPolynomial;
use super::rational::Rational;

/// Sturm sequence of a square-free polynomial, built from positive pseudo-remainders.
#[derive(Clone, Debug)]
pub struct SturmChain {
    seq: Vec<IntPolynomial>,
}

impl SturmChain {
    /// `p` must be square-free; the zero or constant polynomial yields an empty count.
    pub fn new(p: &IntPolynomial) -> Self {
        let mut seq = Vec::new();
        if p.deg() == 0 {
            return SturmChain { seq };
        }
        let p0 = p.primitive();
        let p1 = p0.derivative().primitive();
        seq.push(p0);
        seq.push(p1);
        loop {
            let k = seq.len();
            let r = seq[k - 2].positive_pseudo_rem(&seq[k - 1]);
            if r.is_zero() {
                break;
            }
            seq.push((-&r).primitive_keep_sign());
        }
        SturmChain { seq }
    }

    pub fn poly(&self) -> Option<&IntPolynomial> {
        self.seq.first()
    }

    fn variations(signs: impl Iterator<Item = i8>) -> usize {
        let mut last = 0i8;
        let mut v = 0;
        for s in signs.filter(|&s| s != 0) {
            if last != 0 && s != last {
                v += 1;
            }
            last = s;
        }
        v
    }

    fn var_at(&self, x: &Rational) -> usize {
        Self::variations(self.seq.iter().map(|p| p.sign_at(x)))
    }

    fn var_at_neg_inf(&self) -> usize {
        Self::variations(self.seq.iter().map(|p| p.sign_at_infinity(false)))
    }

    fn var_at_pos_inf(&self) -> usize {
        Self::variations(self.seq.iter().map(|p| p.sign_at_infinity(true)))
    }

    /// Distinct real roots in `(−∞, x]`.
    pub fn roots_le(&self, x: &Rational) -> usize {
        if self.seq.is_empty() {
            return 0;
        }
        self.var_at_neg_inf() - self.var_at(x)
    }

    /// Distinct real roots in `(−∞, x)`.
    pub fn roots_lt(&self, x: &Rational) -> usize {
        match self.seq.first() {
            None => 0,
            Some(p) => self.roots_le(x) - usize::from(p.sign_at(x) == 0),
        }
    }

    /// Distinct real roots in the closed interval `[lo, hi]`.
    pub fn roots_in(&self, lo: &Rational, hi: &Rational) -> usize {
        if lo > hi {
            return 0;
        }
        self.roots_le(hi) - self.roots_lt(lo)
    }

    pub fn real_root_count(&self) -> usize {
        if self.seq.is_empty() {
            return 0;
        }
        self.var_at_neg_inf() - self.var_at_pos_inf()
    }
}

trait KeepSign {
    fn primitive_keep_sign(&self) -> IntPolynomial;
}

impl KeepSign for IntPolynomial {
    /// Divides by the positive content only.
    fn primitive_keep_sign(&self) -> IntPolynomial {
        let g = self.content();
        if g.is_zero() || g.is_one() {
            return self.clone();
        }
        IntPolynomial::new(self.coeffs().iter().map(|c| c / &g).collect())
    }
}

/// Counts real roots with multiplicity of a polynomial whose roots are all real, using
/// Sturm chains of the square-free parts of `f, gcd(f, f'), gcd(f', f''), …`.
#[derive(Clone, Debug)]
pub struct RootCounter {
    levels: Vec<SturmChain>,
    poly: IntPolynomial,
}

impl RootCounter {
    pub fn new(f: &IntPolynomial) -> Self {
        let mut levels = Vec::new();
        let mut cur = f.primitive();
        while cur.deg() > 0 {
            let g = cur.gcd(&cur.derivative());
            let sqf = cur.div_exact(&g);
            levels.push(SturmChain::new(&sqf));
            cur = g;
        }
        RootCounter { levels, poly: f.clone() }
    }

    pub fn poly(&self) -> &IntPolynomial {
        &self.poly
    }

    /// Roots with multiplicity strictly below `x`.
    pub fn count_lt(&self, x: &Rational) -> usize {
        self.levels.iter().map(|c| c.roots_lt(x)).sum()
    }

    /// Roots with multiplicity at most `x`.
    pub fn count_le(&self, x: &Rational) -> usize {
        self.levels.iter().map(|c| c.roots_le(x)).sum()
    }

    /// Multiplicity of `x` as a root.
    pub fn multiplicity(&self, x: &Rational) -> usize {
        self.count_le(x) - self.count_lt(x)
    }

    /// Roots with multiplicity in `[lo, hi]`.
    pub fn count_in(&self, lo: &Rational, hi: &Rational) -> usize {
        self.levels.iter().map(|c| c.roots_in(lo, hi)).sum()
    }

    pub fn distinct_real_roots(&self) -> usize {
        self.levels.first().map_or(0, |c| c.real_root_count())
    }
}

/// Scales a rational threshold into the coordinates of a scaled characteristic polynomial.
pub(crate) fn scale_point(x: &Rational, scale: &BigInt) -> Rational {
    if scale.is_one() {
        x.clone()
    } else {
        x * Rational::from_integer(scale.clone())
    }
}
