use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::rational::{common_denominator, parse_rational, Rational};
use crate::error::{Error, Result};

/// Exact symmetric matrix over the rationals.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct SymRatMatrix {
    n: usize,
    a: Vec<Rational>,
}

/// Counts of negative, zero and positive eigenvalues.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default)]
pub struct Inertia {
    pub negative: usize,
    pub zero: usize,
    pub positive: usize,
}

impl SymRatMatrix {
    pub fn zeros(n: usize) -> Self {
        SymRatMatrix { n, a: vec![Rational::zero(); n * n] }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, |i, j| if i == j { Rational::one() } else { Rational::zero() })
    }

    /// Builds the matrix from its upper triangle; `f(i, j)` is called with `i ≤ j`.
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            for j in i..n {
                let v = f(i, j);
                m.a[j * n + i] = v.clone();
                m.a[i * n + j] = v;
            }
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let n = rows.len();
        let mut a = Vec::with_capacity(n * n);
        for (i, r) in rows.into_iter().enumerate() {
            if r.len() != n {
                return Err(Error::parse(i + 2, format!("row has {} entries, expected {n}", r.len())));
            }
            a.extend(r);
        }
        for i in 0..n {
            for j in 0..i {
                if a[i * n + j] != a[j * n + i] {
                    return Err(Error::InvalidParams(format!("matrix not symmetric at ({i},{j})")));
                }
            }
        }
        Ok(SymRatMatrix { n, a })
    }

    pub fn from_int_rows(rows: &[Vec<i64>]) -> Result<Self> {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| Rational::from_integer(v.into())).collect())
                .collect(),
        )
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.a[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rational) {
        self.a[j * self.n + i] = v.clone();
        self.a[i * self.n + j] = v;
    }

    /// `M + t·I`.
    pub fn shifted(&self, t: &Rational) -> Self {
        let mut m = self.clone();
        for i in 0..self.n {
            m.a[i * self.n + i] += t;
        }
        m
    }

    pub fn scaled(&self, k: &Rational) -> Self {
        SymRatMatrix { n: self.n, a: self.a.iter().map(|x| x * k).collect() }
    }

    pub fn principal(&self, idx: &[usize]) -> Self {
        Self::from_fn(idx.len(), |i, j| self.get(idx[i], idx[j]).clone())
    }

    pub fn is_integer(&self) -> bool {
        self.a.iter().all(|x| x.is_integer())
    }

    /// Smallest positive `d` with `d·M` integral, and the rows of `d·M`.
    pub fn integer_scaled(&self) -> (Vec<Vec<BigInt>>, BigInt) {
        let d = common_denominator(self.a.iter());
        let rows = (0..self.n)
            .map(|i| {
                (0..self.n)
                    .map(|j| (self.get(i, j) * Rational::from_integer(d.clone())).to_integer())
                    .collect()
            })
            .collect();
        (rows, d)
    }

    /// Largest absolute row sum (Gershgorin radius).
    pub fn gershgorin_radius(&self) -> Rational {
        (0..self.n)
            .map(|i| (0..self.n).map(|j| self.get(i, j).abs()).sum::<Rational>())
            .max()
            .unwrap_or_else(Rational::zero)
    }

    pub fn determinant(&self) -> Rational {
        let (m, d) = self.integer_scaled();
        let det = bareiss_det(m);
        Rational::new(det, num_traits::pow(d, self.n))
    }

    /// `[det M[0..k][0..k] for k = 1..n]`.
    pub fn leading_principal_minors(&self) -> Vec<Rational> {
        let (m, d) = self.integer_scaled();
        let mut t = super::minors::BorderedBareiss::new();
        let mut out = Vec::with_capacity(self.n);
        for (k, row) in m.into_iter().enumerate() {
            let minor = t.push(row[..=k].to_vec());
            out.push(Rational::new(minor, num_traits::pow(d.clone(), k + 1)));
        }
        out
    }

    /// True iff every leading principal minor is strictly positive.
    pub fn is_positive_definite(&self) -> bool {
        let (m, _) = self.integer_scaled();
        let mut t = super::minors::BorderedBareiss::new();
        m.into_iter().enumerate().all(|(k, row)| t.push(row[..=k].to_vec()).is_positive())
    }

    pub fn exact_rank(&self) -> usize {
        bareiss_rank(self.integer_scaled().0)
    }

    /// Inertia by symmetric congruence with 1×1 and 2×2 pivots.
    pub fn inertia(&self) -> Inertia {
        super::inertia::inertia_big(self.integer_scaled().0)
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let (ln, first) = lines.next().ok_or_else(|| Error::parse(1, "empty matrix text"))?;
        let n: usize = first.parse().map_err(|_| Error::parse(ln, "expected matrix order"))?;
        let mut rows = Vec::with_capacity(n);
        for (ln, l) in lines.by_ref().take(n) {
            let row = l
                .split_whitespace()
                .map(|t| parse_rational(t).map_err(|_| Error::parse(ln, format!("bad entry {t:?}"))))
                .collect::<Result<Vec<_>>>()?;
            rows.push(row);
        }
        if rows.len() != n {
            return Err(Error::parse(ln, format!("expected {n} rows, found {}", rows.len())));
        }
        if let Some((ln, _)) = lines.next() {
            return Err(Error::parse(ln, "trailing content after matrix"));
        }
        Self::from_rows(rows)
    }
}

impl fmt::Display for SymRatMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.n)?;
        for i in 0..self.n {
            let row: Vec<String> = (0..self.n).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "{}", row.join(" "))?;
        }
        Ok(())
    }
}

/// Fraction-free determinant with row pivoting.
pub fn bareiss_det(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&m[i][j] * &m[k][k] - &m[i][k] * &m[k][j]) / &prev;
                m[i][j] = v;
            }
        }
        prev = m[k][k].clone();
    }
    sign * &m[n - 1][n - 1]
}

/// Rank by fraction-free echelon reduction.
pub fn bareiss_rank(mut m: Vec<Vec<BigInt>>) -> usize {
    let rows = m.len();
    let cols = m.first().map_or(0, |r| r.len());
    let mut r = 0;
    let mut prev = BigInt::one();
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        for i in r + 1..rows {
            for j in c + 1..cols {
                let v = (&m[i][j] * &m[r][c] - &m[i][c] * &m[r][j]) / &prev;
                m[i][j] = v;
            }
            m[i][c] = BigInt::zero();
        }
        prev = m[r][c].clone();
        r += 1;
    }
    r
}
