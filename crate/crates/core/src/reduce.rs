//! Small principal submatrices witnessing an eigenvalue below `−λ` in a symmetric
//! integer matrix with zero diagonal.

use std::fmt;

use num_bigint::BigInt;
use num_traits::Signed;

use crate::error::{Error, Result};
use crate::exact::inertia::inertia_big;
use crate::exact::{count_eigs_below, Rational, SymRatMatrix};

/// Symmetric integer matrix with zero diagonal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntSymMatrix {
    n: usize,
    a: Vec<i64>,
}

impl IntSymMatrix {
    pub fn new(n: usize, a: Vec<i64>) -> Result<Self> {
        if a.len() != n * n {
            return Err(Error::LengthMismatch { expected: n * n, got: a.len() });
        }
        for i in 0..n {
            if a[i * n + i] != 0 {
                return Err(Error::InvalidParams(format!("diagonal entry {i} is not zero")));
            }
            for j in 0..i {
                if a[i * n + j] != a[j * n + i] {
                    return Err(Error::InvalidParams(format!("entries ({i},{j}) and ({j},{i}) differ")));
                }
            }
        }
        Ok(IntSymMatrix { n, a })
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Result<Self> {
        let n = rows.len();
        if let Some(r) = rows.iter().find(|r| r.len() != n) {
            return Err(Error::LengthMismatch { expected: n, got: r.len() });
        }
        Self::new(n, rows.concat())
    }

    /// One row per line, entries separated by whitespace; `#` starts a comment.
    pub fn parse(text: &str) -> Result<Self> {
        let mut rows = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let row = line
                .split_whitespace()
                .map(|t| t.parse::<i64>().map_err(|_| Error::parse(i + 1, format!("not an integer: {t:?}"))))
                .collect::<Result<Vec<i64>>>()?;
            rows.push(row);
        }
        Self::from_rows(&rows)
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.a[i * self.n + j]
    }

    pub fn principal(&self, idx: &[usize]) -> IntSymMatrix {
        let a = idx.iter().flat_map(|&i| idx.iter().map(move |&j| self.get(i, j))).collect();
        IntSymMatrix { n: idx.len(), a }
    }

    pub fn to_rational(&self) -> SymRatMatrix {
        SymRatMatrix::from_fn(self.n, |i, j| Rational::from_integer(self.get(i, j).into()))
    }
}

impl fmt::Display for IntSymMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.n {
            let row: Vec<String> = (0..self.n).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "{}", row.join(" "))?;
        }
        Ok(())
    }
}

/// Which step of the cascade produced the witness.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WitnessKind {
    /// a single entry exceeding `λ` in absolute value
    LargeEntry,
    /// an entry `±2` whose rows disagree in some third column
    Mismatch,
    /// an induced subgraph of the signed graph left after the reductions
    SignedGraph,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    /// sorted indices into the input matrix
    pub indices: Vec<usize>,
    pub kind: WitnessKind,
    /// rows deleted by the `±2` reduction, in order
    pub deleted: Vec<usize>,
}

/// Counts eigenvalues below `−λ` of a principal submatrix via the inertia of
/// `den·A + num·I`.
struct Counter<'a> {
    a: &'a IntSymMatrix,
    num: BigInt,
    den: BigInt,
}

impl Counter<'_> {
    fn below(&self, idx: &[usize]) -> usize {
        let m: Vec<Vec<BigInt>> = idx
            .iter()
            .map(|&i| {
                idx.iter()
                    .map(|&j| if i == j { self.num.clone() } else { &self.den * self.a.get(i, j) })
                    .collect()
            })
            .collect();
        inertia_big(m).negative
    }
}

/// Finds an index set `S`, `|S| ≤ order_cap`, with `λ₁(A[S]) < −λ`; `None` if `A` has no
/// eigenvalue below `−λ` at all.
pub fn find_small_witness(a: &IntSymMatrix, lam: &Rational, order_cap: usize) -> Result<Option<Witness>> {
    find_small_witness_with_budget(a, lam, order_cap, 10_000_000)
}

pub fn find_small_witness_with_budget(
    a: &IntSymMatrix,
    lam: &Rational,
    order_cap: usize,
    budget: u64,
) -> Result<Option<Witness>> {
    if lam.is_negative() {
        return Err(Error::InvalidParams("λ must be nonnegative".into()));
    }
    let counter = Counter { a, num: lam.numer().clone(), den: lam.denom().clone() };
    let mut idx: Vec<usize> = (0..a.order()).collect();
    if counter.below(&idx) == 0 {
        return Ok(None);
    }
    let mut deleted = Vec::new();
    loop {
        // (1) an entry larger than λ
        for (p, &i) in idx.iter().enumerate() {
            for &j in &idx[p + 1..] {
                if Rational::from_integer(a.get(i, j).abs().into()) > *lam {
                    return Ok(Some(Witness { indices: sorted(&[i, j]), kind: WitnessKind::LargeEntry, deleted }));
                }
            }
        }
        // (2) an entry ±2, so 2 ≤ λ
        let two = idx.iter().enumerate().find_map(|(p, &i)| {
            idx[p + 1..].iter().find(|&&j| a.get(i, j).abs() == 2).map(|&j| (i, j))
        });
        let Some((i, j)) = two else { break };
        let s = a.get(i, j).signum();
        let mismatch = idx.iter().find(|&&k| k != i && k != j && a.get(i, k) != s * a.get(j, k));
        if let Some(&k) = mismatch {
            // the 3×3 block has λ₁ ≤ −√5, which is below −λ exactly when λ² < 5
            if lam * lam < Rational::from_integer(5.into()) {
                return Ok(Some(Witness { indices: sorted(&[i, j, k]), kind: WitnessKind::Mismatch, deleted }));
            }
            break;
        }
        let reduced: Vec<usize> = idx.iter().copied().filter(|&x| x != i).collect();
        if counter.below(&reduced) == 0 {
            return Err(Error::CrossCheck(format!("deleting row {i} lost the eigenvalue below -λ")));
        }
        deleted.push(i);
        idx = reduced;
    }
    // (3) greedy vertex deletion down to a deletion-minimal witness
    let mut core = idx.clone();
    let mut p = 0;
    while p < core.len() {
        let mut trial = core.clone();
        trial.remove(p);
        if !trial.is_empty() && counter.below(&trial) > 0 {
            core = trial;
        } else {
            p += 1;
        }
    }
    if core.len() <= order_cap {
        return Ok(Some(Witness { indices: core, kind: WitnessKind::SignedGraph, deleted }));
    }
    // exhaustive search over connected index sets by increasing size
    match connected_search(a, &idx, order_cap, &counter, budget)? {
        Some(s) => Ok(Some(Witness { indices: s, kind: WitnessKind::SignedGraph, deleted })),
        None => Err(Error::WitnessNotFoundWithinCap { cap: order_cap }),
    }
}

fn sorted(v: &[usize]) -> Vec<usize> {
    let mut v = v.to_vec();
    v.sort_unstable();
    v
}

/// Breadth-first over connected vertex sets, smallest first; a minimal witness is always
/// connected since the spectrum of a direct sum is the union of the spectra.
fn connected_search(
    a: &IntSymMatrix,
    idx: &[usize],
    cap: usize,
    counter: &Counter<'_>,
    budget: u64,
) -> Result<Option<Vec<usize>>> {
    let mut level: Vec<Vec<usize>> = idx.iter().map(|&i| vec![i]).collect();
    let mut nodes = 0u64;
    for _ in 1..cap {
        let mut next = std::collections::BTreeSet::new();
        for s in &level {
            for &v in idx {
                if s.contains(&v) || !s.iter().any(|&u| a.get(u, v) != 0) {
                    continue;
                }
                let t = sorted(&[s.as_slice(), &[v]].concat());
                if next.contains(&t) {
                    continue;
                }
                nodes += 1;
                if nodes > budget {
                    return Err(Error::budget("witness search", budget));
                }
                if counter.below(&t) > 0 {
                    return Ok(Some(t));
                }
                next.insert(t);
            }
        }
        level = next.into_iter().collect();
    }
    Ok(None)
}

/// Whether `λ₁(A[S]) < −λ`, by Sturm counting.
pub fn verify_witness(a: &IntSymMatrix, s: &[usize], lam: &Rational) -> bool {
    if s.is_empty() || s.iter().any(|&i| i >= a.order()) {
        return false;
    }
    count_eigs_below(&a.principal(s).to_rational(), &-lam.clone()) >= 1
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::{int, rat};
    use crate::graph::catalog;

    fn from_graph(g: &crate::graph::SignedGraph) -> IntSymMatrix {
        IntSymMatrix::new(g.order(), g.adjacency_i64()).unwrap()
    }

    #[test]
    fn large_entry() {
        let a = IntSymMatrix::from_rows(&[vec![0, 3, 0], vec![3, 0, 1], vec![0, 1, 0]]).unwrap();
        let w = find_small_witness(&a, &int(2), 10).unwrap().unwrap();
        assert_eq!((w.indices.clone(), w.kind), (vec![0, 1], WitnessKind::LargeEntry));
        assert!(verify_witness(&a, &w.indices, &int(2)));
        assert!(!verify_witness(&a, &[2], &int(2)));
    }

    #[test]
    fn mismatch_and_reduction() {
        // the ±2 entry with a mismatched third column
        let a = IntSymMatrix::from_rows(&[vec![0, 2, 1], vec![2, 0, 0], vec![1, 0, 0]]).unwrap();
        let w = find_small_witness(&a, &int(2), 10).unwrap().unwrap();
        assert_eq!(w.kind, WitnessKind::Mismatch);
        assert!(verify_witness(&a, &w.indices, &int(2)));
        // rows 0 and 1 agree elsewhere, so row 0 is deleted and the star on 1 remains
        let mut rows = vec![vec![0i64; 7]; 7];
        let mut set = |i: usize, j: usize, v: i64| {
            rows[i][j] = v;
            rows[j][i] = v;
        };
        set(0, 1, 2);
        for k in 2..7 {
            set(0, k, 1);
            set(1, k, 1);
        }
        let a = IntSymMatrix::from_rows(&rows).unwrap();
        let w = find_small_witness(&a, &int(2), 10).unwrap().unwrap();
        assert_eq!(w.deleted, vec![0]);
        assert!(verify_witness(&a, &w.indices, &int(2)));
    }

    #[test]
    fn signed_graph_case() {
        let s5 = from_graph(&catalog::star(5));
        let w = find_small_witness(&s5, &int(2), 10).unwrap().unwrap();
        assert_eq!(w.indices.len(), 6);
        assert!(verify_witness(&s5, &w.indices, &int(2)));
        assert!(find_small_witness(&from_graph(&catalog::path(3)), &int(2), 10).unwrap().is_none());
        assert!(matches!(find_small_witness(&s5, &int(2), 3), Err(Error::WitnessNotFoundWithinCap { cap: 3 })));
        let w = find_small_witness(&s5, &rat(3, 2), 10).unwrap().unwrap();
        assert!(w.indices.len() <= 4);
    }

    #[test]
    fn parse() {
        let a = IntSymMatrix::parse("0 1\n1 0\n").unwrap();
        assert_eq!(a.order(), 2);
        assert!(IntSymMatrix::parse("0 1\n2 0").is_err());
        assert!(IntSymMatrix::parse("1 0\n0 0").is_err());
        assert!(IntSymMatrix::parse("0 x\n0 0").is_err());
    }
}
