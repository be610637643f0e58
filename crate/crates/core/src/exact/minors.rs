use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Incremental leading principal minors of a symmetric integer matrix.
///
/// Rows are appended one at a time (lower-triangular part only); each push returns the
/// determinant of the new leading block in O(k²) operations. Cloning gives a cheap
/// snapshot, so many bordered extensions of a common prefix share the prefix work.
#[derive(Clone, Debug, Default)]
pub struct BorderedBareiss {
    /// `reduced[s][c]` for `c ≥ s` is the Bareiss entry at step `s`; entries `c < s` unused.
    reduced: Vec<Vec<BigInt>>,
    /// Lower-triangular copy of the raw rows, kept for the degenerate fallback.
    raw: Vec<Vec<BigInt>>,
    degenerate: bool,
}

impl BorderedBareiss {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn order(&self) -> usize {
        self.raw.len()
    }

    /// Appends row `k` given as its first `k + 1` entries; returns the new leading minor.
    pub fn push(&mut self, row: Vec<BigInt>) -> BigInt {
        let k = self.raw.len();
        assert_eq!(row.len(), k + 1, "row must have k+1 entries");
        self.raw.push(row.clone());
        if self.degenerate {
            return self.full_det();
        }
        let mut r = row;
        let one = BigInt::one();
        for s in 0..k {
            let rs = r[s].clone();
            self.reduced[s].push(rs.clone());
            let ps = &self.reduced[s][s];
            let prev = if s == 0 { &one } else { &self.reduced[s - 1][s - 1] };
            for c in s + 1..=k {
                let usc = if c < k { &self.reduced[s][c] } else { &rs };
                r[c] = (ps * &r[c] - &rs * usc) / prev;
            }
        }
        let pivot = r[k].clone();
        self.reduced.push(r);
        if pivot.is_zero() {
            self.degenerate = true;
        }
        pivot
    }

    fn full_det(&self) -> BigInt {
        let n = self.raw.len();
        let m = (0..n)
            .map(|i| (0..n).map(|j| if j <= i { self.raw[i][j].clone() } else { self.raw[j][i].clone() }).collect())
            .collect();
        super::matrix::bareiss_det(m)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::matrix::bareiss_det;

    fn minors_direct(m: &[Vec<i64>]) -> Vec<BigInt> {
        (1..=m.len())
            .map(|k| {
                bareiss_det((0..k).map(|i| (0..k).map(|j| BigInt::from(m[i][j])).collect()).collect())
            })
            .collect()
    }

    fn minors_incremental(m: &[Vec<i64>]) -> Vec<BigInt> {
        let mut t = BorderedBareiss::new();
        (0..m.len()).map(|k| t.push((0..=k).map(|j| BigInt::from(m[k][j])).collect())).collect()
    }

    #[test]
    fn matches_direct_including_zero_pivots() {
        let cases = vec![
            vec![vec![2, 1, 1], vec![1, 2, 1], vec![1, 1, 2]],
            vec![vec![1, 1, 0], vec![1, 1, 1], vec![0, 1, 1]],
            vec![vec![0, 1, 2], vec![1, 0, 3], vec![2, 3, 5]],
            vec![vec![3, -1, 2, 0], vec![-1, 4, 1, 2], vec![2, 1, -2, 1], vec![0, 2, 1, 7]],
        ];
        for m in cases {
            assert_eq!(minors_incremental(&m), minors_direct(&m));
        }
    }

    #[test]
    fn snapshots_are_independent() {
        let mut base = BorderedBareiss::new();
        base.push(vec![BigInt::from(2)]);
        let mut a = base.clone();
        let mut b = base.clone();
        assert_eq!(a.push(vec![BigInt::from(1), BigInt::from(2)]), BigInt::from(3));
        assert_eq!(b.push(vec![BigInt::from(2), BigInt::from(2)]), BigInt::from(0));
        assert_eq!(base.order(), 1);
    }
}
