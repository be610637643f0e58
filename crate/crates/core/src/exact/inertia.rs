use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::matrix::Inertia;
use super::rational::Rational;

trait FracFree: Clone {
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn signum(&self) -> i8;
    /// `(p·x − a·b) / prev`, `None` on overflow.
    fn step(p: &Self, x: &Self, a: &Self, b: &Self, prev: &Self) -> Option<Self>;
}

impl FracFree for i128 {
    fn one() -> Self {
        1
    }
    fn is_zero(&self) -> bool {
        *self == 0
    }
    fn signum(&self) -> i8 {
        i128::signum(*self) as i8
    }
    fn step(p: &Self, x: &Self, a: &Self, b: &Self, prev: &Self) -> Option<Self> {
        p.checked_mul(*x)?.checked_sub(a.checked_mul(*b)?).map(|v| v / prev)
    }
}

impl FracFree for BigInt {
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn signum(&self) -> i8 {
        if self.is_positive() { 1 } else if self.is_negative() { -1 } else { 0 }
    }
    fn step(p: &Self, x: &Self, a: &Self, b: &Self, prev: &Self) -> Option<Self> {
        Some((p * x - a * b) / prev)
    }
}

enum Outcome {
    Done(Inertia),
    Overflow,
    NeedsBlockPivot,
}

/// Symmetric fraction-free elimination with diagonal pivots.
fn diagonal_pivoting<T: FracFree>(mut m: Vec<Vec<T>>) -> Outcome {
    let n = m.len();
    let mut active: Vec<usize> = (0..n).collect();
    let mut prev = T::one();
    let mut prev_sign = 1i8;
    let mut out = Inertia::default();
    while !active.is_empty() {
        let Some(pos) = active.iter().position(|&i| !m[i][i].is_zero()) else {
            let all_zero = active.iter().all(|&a| active.iter().all(|&b| m[a][b].is_zero()));
            if all_zero {
                out.zero += active.len();
                return Outcome::Done(out);
            }
            return Outcome::NeedsBlockPivot;
        };
        let i = active.swap_remove(pos);
        let p = m[i][i].clone();
        for (ia, &a) in active.iter().enumerate() {
            for &b in &active[ia..] {
                match T::step(&p, &m[a][b], &m[a][i], &m[i][b], &prev) {
                    Some(v) => {
                        m[a][b] = v.clone();
                        m[b][a] = v;
                    }
                    None => return Outcome::Overflow,
                }
            }
        }
        let s = p.signum();
        if s == prev_sign {
            out.positive += 1;
        } else {
            out.negative += 1;
        }
        prev_sign = s;
        prev = p;
    }
    Outcome::Done(out)
}

/// Block LDLᵀ over the rationals; always succeeds.
pub fn inertia_rational(mut m: Vec<Vec<Rational>>) -> Inertia {
    let mut active: Vec<usize> = (0..m.len()).collect();
    let mut out = Inertia::default();
    while !active.is_empty() {
        if let Some(pos) = active.iter().position(|&i| !m[i][i].is_zero()) {
            let i = active.swap_remove(pos);
            let p = m[i][i].clone();
            if p.is_positive() {
                out.positive += 1;
            } else {
                out.negative += 1;
            }
            for (ia, &a) in active.iter().enumerate() {
                for &b in &active[ia..] {
                    let v = &m[a][b] - &m[a][i] * &m[i][b] / &p;
                    m[a][b] = v.clone();
                    m[b][a] = v;
                }
            }
            continue;
        }
        let pair = active.iter().enumerate().find_map(|(ia, &a)| {
            active[ia + 1..].iter().find(|&&b| !m[a][b].is_zero()).map(|&b| (a, b))
        });
        let Some((i, j)) = pair else {
            out.zero += active.len();
            break;
        };
        // Block [[0, c], [c, 0]] has one eigenvalue of each sign; its inverse is [[0, 1/c], [1/c, 0]].
        active.retain(|&x| x != i && x != j);
        out.positive += 1;
        out.negative += 1;
        let c = m[i][j].clone();
        for (ia, &a) in active.iter().enumerate() {
            for &b in &active[ia..] {
                let v = &m[a][b] - (&m[a][i] * &m[j][b] + &m[a][j] * &m[i][b]) / &c;
                m[a][b] = v.clone();
                m[b][a] = v;
            }
        }
    }
    out
}

pub fn inertia_big(m: Vec<Vec<BigInt>>) -> Inertia {
    match diagonal_pivoting(m.clone()) {
        Outcome::Done(i) => i,
        _ => inertia_rational(
            m.into_iter().map(|r| r.into_iter().map(Rational::from_integer).collect()).collect(),
        ),
    }
}

/// Inertia of a small integer matrix given row-major; tries 128-bit arithmetic first.
pub fn inertia_i64(n: usize, entries: &[i64]) -> Inertia {
    let m: Vec<Vec<i128>> = (0..n).map(|i| (0..n).map(|j| entries[i * n + j] as i128).collect()).collect();
    match diagonal_pivoting(m) {
        Outcome::Done(i) => i,
        _ => inertia_big(
            (0..n).map(|i| (0..n).map(|j| BigInt::from(entries[i * n + j])).collect()).collect(),
        ),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn inert(rows: &[&[i64]]) -> Inertia {
        let n = rows.len();
        inertia_i64(n, &rows.concat())
    }

    #[test]
    fn small_cases() {
        assert_eq!(inert(&[&[0, 1], &[1, 0]]), Inertia { negative: 1, zero: 0, positive: 1 });
        assert_eq!(inert(&[&[1, 1], &[1, 1]]), Inertia { negative: 0, zero: 1, positive: 1 });
        // K3 eigenvalues 2, -1, -1
        assert_eq!(
            inert(&[&[0, 1, 1], &[1, 0, 1], &[1, 1, 0]]),
            Inertia { negative: 2, zero: 0, positive: 1 }
        );
        // A(-K3) + 2I: eigenvalues 0, 3, 3
        assert_eq!(
            inert(&[&[2, -1, -1], &[-1, 2, -1], &[-1, -1, 2]]),
            Inertia { negative: 0, zero: 1, positive: 2 }
        );
        assert_eq!(inert(&[]), Inertia::default());
    }

    #[test]
    fn block_pivot_path() {
        // zero diagonal forces the 2x2 route
        let m = vec![
            vec![0, 1, 0, 2],
            vec![1, 0, 3, 0],
            vec![0, 3, 0, 1],
            vec![2, 0, 1, 0],
        ];
        let r: Vec<Vec<Rational>> =
            m.iter().map(|r| r.iter().map(|&v| Rational::from_integer(v.into())).collect()).collect();
        let a = inertia_rational(r);
        assert_eq!(a.negative + a.zero + a.positive, 4);
        // bipartite: spectrum symmetric, det = (1*1 - 2*3)^2 = 25 != 0
        assert_eq!(a, Inertia { negative: 2, zero: 0, positive: 2 });
        assert_eq!(inertia_i64(4, &m.concat()), a);
    }
}
