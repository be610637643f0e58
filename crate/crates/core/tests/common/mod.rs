#![allow(dead_code)]

use rand::Rng;
use rand_chacha::ChaCha8Rng;
use signed_spectra::exact::inertia::inertia_i64;
use signed_spectra::graph::{Sign, SignedGraph};
use signed_spectra::line::{BiEdge, BidirectedMultigraph};
use signed_spectra::rowing::RowingSpec;

pub use rand::SeedableRng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_sign(r: &mut ChaCha8Rng) -> Sign {
    if r.gen_bool(0.5) {
        Sign::Pos
    } else {
        Sign::Neg
    }
}

pub fn random_unsigned(r: &mut ChaCha8Rng, n: usize, p: f64) -> SignedGraph {
    let mut g = SignedGraph::new(n);
    for i in 0..n {
        for j in i + 1..n {
            if r.gen_bool(p) {
                g.add_edge(i, j, Sign::Pos).unwrap();
            }
        }
    }
    g
}

pub fn random_signed(r: &mut ChaCha8Rng, n: usize, p: f64) -> SignedGraph {
    let mut g = SignedGraph::new(n);
    for i in 0..n {
        for j in i + 1..n {
            if r.gen_bool(p) {
                let s = random_sign(r);
                g.add_edge(i, j, s).unwrap();
            }
        }
    }
    g
}

/// Simple bidirected graph: at most one edge per vertex pair, random incidence signs.
pub fn random_bidirected(r: &mut ChaCha8Rng, n: usize, p: f64) -> BidirectedMultigraph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if r.gen_bool(p) {
                edges.push(BiEdge::new(u, v, random_sign(r), random_sign(r)));
            }
        }
    }
    BidirectedMultigraph::new(n, edges).unwrap()
}

pub fn random_spec(r: &mut ChaCha8Rng, max_len: usize, max_entry: usize) -> RowingSpec {
    let k = r.gen_range(0..=max_len);
    RowingSpec((0..k).map(|_| r.gen_range(0..=max_entry)).collect())
}

/// Number of eigenvalues below `−2`, from the inertia of `A + 2I`.
pub fn below_minus_two(g: &SignedGraph) -> usize {
    let n = g.order();
    let m: Vec<i64> = (0..n * n).map(|k| g.matrix()[k] as i64 + if k / n == k % n { 2 } else { 0 }).collect();
    inertia_i64(n, &m).negative
}

/// Random symmetric `{−1,0,1}` matrix with zero diagonal.
pub fn random_pm_matrix(r: &mut ChaCha8Rng, n: usize, density: f64) -> Vec<Vec<i64>> {
    let mut a = vec![vec![0i64; n]; n];
    for i in 0..n {
        for j in i + 1..n {
            if r.gen_bool(density) {
                let v = if r.gen_bool(0.5) { 1 } else { -1 };
                a[i][j] = v;
                a[j][i] = v;
            }
        }
    }
    a
}

/// Integer matrix product and transpose helpers for small dense matrices.
pub fn mat_mul(a: &[Vec<i64>], b: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let (n, k, m) = (a.len(), b.len(), b.first().map_or(0, |r| r.len()));
    (0..n).map(|i| (0..m).map(|j| (0..k).map(|t| a[i][t] * b[t][j]).sum()).collect()).collect()
}

pub fn transpose(a: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let m = a.first().map_or(0, |r| r.len());
    (0..m).map(|j| a.iter().map(|r| r[j]).collect()).collect()
}

/// Laplace expansion along the first row.
pub fn cofactor_det(a: &[Vec<i64>]) -> i128 {
    let n = a.len();
    if n == 0 {
        return 1;
    }
    let mut total = 0i128;
    for j in 0..n {
        if a[0][j] == 0 {
            continue;
        }
        let minor: Vec<Vec<i64>> =
            a[1..].iter().map(|r| r.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, &v)| v).collect()).collect();
        let s = if j % 2 == 0 { 1 } else { -1 };
        total += s * a[0][j] as i128 * cofactor_det(&minor);
    }
    total
}

/// Incidence matrix built independently from the upper-triangle edge order.
pub fn incidence_matrix_checked(h: &SignedGraph) -> Vec<Vec<i64>> {
    let n = h.order();
    let edges: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).filter(|&(i, j)| h.is_adjacent(i, j)).collect();
    let mut b = vec![vec![0; edges.len()]; n];
    for (k, &(p, q)) in edges.iter().enumerate() {
        b[p][k] = 1;
        b[q][k] = 1;
    }
    b
}
