//! Rowing graphs: certified smallest eigenvalues, Rayleigh bounds and a best-first
//! search for rowing graphs with smallest eigenvalue just below a target.

use std::cmp::Ordering;
use std::collections::{BTreeSet, BinaryHeap};
use std::fmt;
use std::str::FromStr;

use nalgebra::{DMatrix, SymmetricEigen};
use num_bigint::BigInt;
use num_traits::{FromPrimitive, One, Zero};

use crate::error::{Error, Result};
use crate::exact::rational::{int, rat, to_f64};
use crate::exact::{constants, AlgebraicNumber, IntPolynomial, Rational, Spectrum};
use crate::graph::{catalog, SignedGraph};

/// The sequence `a₁, …, a_k` of clique sizes.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct RowingSpec(pub Vec<usize>);

impl RowingSpec {
    pub fn graph(&self) -> SignedGraph {
        catalog::rowing(&self.0)
    }

    pub fn vertex_count(&self) -> usize {
        self.0.len() + 4 + self.0.iter().sum::<usize>()
    }

    /// This sequence followed by `ell` zeros.
    pub fn padded(&self, ell: usize) -> RowingSpec {
        let mut v = self.0.clone();
        v.extend(std::iter::repeat(0).take(ell));
        RowingSpec(v)
    }
}

impl fmt::Display for RowingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|a| a.to_string()).collect();
        write!(f, "R({})", parts.join(","))
    }
}

impl FromStr for RowingSpec {
    type Err = Error;

    /// Comma-separated naturals, optionally wrapped in `R(…)`; empty means `R()`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let inner = s.strip_prefix("R(").and_then(|r| r.strip_suffix(')')).unwrap_or(s).trim();
        if inner.is_empty() {
            return Ok(RowingSpec(Vec::new()));
        }
        inner
            .split(',')
            .map(|t| t.trim().parse::<usize>().map_err(|_| Error::parse(0, format!("bad rowing entry {t:?}"))))
            .collect::<Result<Vec<_>>>()
            .map(RowingSpec)
    }
}

/// `−1 − √2`, the universal lower bound for rowing graphs.
pub fn rowing_floor() -> AlgebraicNumber {
    // root of x² + 2x − 1 in [−5/2, −2]
    AlgebraicNumber::new(IntPolynomial::from_i64(&[-1, 2, 1]), rat(-5, 2), int(-2)).expect("isolating interval")
}

/// Certified enclosure of `λ₁(R(spec))` of width at most `eps`, checked against the
/// floor `−1 − √2`.
pub fn rowing_eig(spec: &RowingSpec, eps: &Rational) -> Result<(Rational, Rational)> {
    let s = Spectrum::new(&spec.graph().adjacency());
    let iv = s.smallest_eig_interval(eps)?;
    if s.count_below_algebraic(&rowing_floor())? != 0 {
        return Err(Error::CrossCheck(format!("{spec} has an eigenvalue below -1-sqrt(2)")));
    }
    Ok(iv)
}

/// Whether `λ₁(R(spec)) < −t` exactly.
pub fn below(spec: &RowingSpec, t: &AlgebraicNumber) -> Result<bool> {
    Ok(Spectrum::new(&spec.graph().adjacency()).count_below_algebraic(&t.neg())? >= 1)
}

/// Least `a₁ ≥ 0` with `λ₁(R(a₁)) < −λ′`.
pub fn find_a1_below_lambda_prime() -> Result<usize> {
    let lp = constants::lambda_prime();
    for a1 in 0..=1000 {
        if below(&RowingSpec(vec![a1]), &lp)? {
            return Ok(a1);
        }
    }
    Err(Error::NonTermination { label: "R(a1) below -lambda'".into(), cap: 1000 })
}

/// Exact Rayleigh quotient `xᵀAx / xᵀx`, an upper bound on `λ₁`.
pub fn rayleigh_quotient(g: &SignedGraph, x: &[Rational]) -> Result<Rational> {
    if x.len() != g.order() {
        return Err(Error::LengthMismatch { expected: g.order(), got: x.len() });
    }
    let den: Rational = x.iter().map(|v| v * v).sum();
    if den.is_zero() {
        return Err(Error::InvalidParams("zero test vector".into()));
    }
    let mut num = Rational::zero();
    for (i, j, s) in g.edges() {
        num += int(2 * s.to_i8() as i64) * &x[i] * &x[j];
    }
    Ok(num / den)
}

/// The test vector for `R(a₁)`: `1, −2, 4` on `v₋₂, v₋₁, v₀`, `0` on `v₁`, `−2` on the
/// coxswain and `−4/a₁` on the clique.
pub fn a1_test_vector(a1: usize) -> Vec<Rational> {
    let mut x = vec![int(1), int(-2), int(4), int(0), int(-2)];
    x.extend(std::iter::repeat(rat(-4, a1 as i64)).take(a1));
    x
}

/// Closed form of the Rayleigh bound for `R(a₁)`: `(−52a₁ − 16)/(25a₁ + 16)`.
pub fn a1_rayleigh_bound(a1: usize) -> Rational {
    let a = a1 as i64;
    rat(-52 * a - 16, 25 * a + 16)
}

/// Upper bound on `λ₁` after inserting a zero before position `k` (1-based, `k ≤ n`):
/// a rational approximation of the least eigenvector is extended by repeating its value
/// at `v_k` on the new path vertex, and the exact Rayleigh quotient is returned.
pub fn zero_insertion_bound(spec: &RowingSpec, k: usize) -> Result<Rational> {
    let n = spec.0.len();
    if k == 0 || k > n {
        return Err(Error::InvalidParams(format!("position {k} outside 1..={n}")));
    }
    let g = spec.graph();
    let x = least_eigenvector(&g);
    let mut ext = spec.0.clone();
    ext.insert(k - 1, 0);
    let h = catalog::rowing(&ext);
    // R(a) vertices: path v₋₂…v_n at 0..=n+2, coxswain n+3, cliques after; the new vertex
    // sits between v_{k−1} and v_k
    let vk = k + 2;
    let mut y = Vec::with_capacity(h.order());
    y.extend_from_slice(&x[..vk]);
    y.push(x[vk].clone());
    y.extend_from_slice(&x[vk..]);
    rayleigh_quotient(&h, &y)
}

fn float_matrix(g: &SignedGraph) -> DMatrix<f64> {
    let n = g.order();
    DMatrix::from_fn(n, n, |i, j| g.sign(i, j) as f64)
}

/// Floating-point smallest eigenvalue, for steering only.
pub fn approx_lambda1(g: &SignedGraph) -> f64 {
    if g.order() == 0 {
        return 0.0;
    }
    SymmetricEigen::new(float_matrix(g)).eigenvalues.iter().copied().fold(f64::INFINITY, f64::min)
}

fn least_eigenvector(g: &SignedGraph) -> Vec<Rational> {
    let e = SymmetricEigen::new(float_matrix(g));
    let (idx, _) = e.eigenvalues.iter().enumerate().fold((0, f64::INFINITY), |b, (i, &v)| if v < b.1 { (i, v) } else { b });
    let scale = 1u64 << 30;
    e.eigenvectors
        .column(idx)
        .iter()
        .map(|&v| Rational::new(BigInt::from_f64((v * scale as f64).round()).unwrap_or_default(), BigInt::from(scale)))
        .collect()
}

/// Checks `λ₁(R(a, 0^ℓ, b)) > λ₁(R(a, 0^ℓ)) − ε` with `ε = 2/(ℓ − 5)`, by certified
/// interval comparison; `false` means it could not be established.
pub fn check_rowing_lemma_b(prefix: &[usize], suffix: &[usize], ell: usize) -> Result<bool> {
    if ell <= 5 {
        return Err(Error::InvalidParams("ℓ must exceed 5".into()));
    }
    let eps = rat(2, ell as i64 - 5);
    let base = RowingSpec(prefix.to_vec()).padded(ell);
    let mut full = base.0.clone();
    full.extend_from_slice(suffix);
    let sb = Spectrum::new(&base.graph().adjacency());
    let sf = Spectrum::new(&catalog::rowing(&full).adjacency());
    let mut width = &eps / int(4);
    for _ in 0..8 {
        let (_, hi) = sb.smallest_eig_interval(&width)?;
        // λ₁(full) > hi − ε ≥ λ₁(base) − ε
        if sf.count_at_most(&(hi - &eps)) == 0 {
            return Ok(true);
        }
        width /= int(16);
    }
    Ok(false)
}

/// Searches `a_{n+1} ∈ 1..=max` with
/// `λ₁(R(…, a_n − 1, a_{n+1}, 0^{ℓ−1})) < λ₁(R(…, a_n, 0^ℓ)) + ε`, certified.
pub fn lemma_c_split(spec: &[usize], ell: usize, eps: &Rational, max: usize) -> Result<Option<usize>> {
    let Some(&last) = spec.last() else {
        return Err(Error::InvalidParams("empty sequence".into()));
    };
    if last == 0 || ell == 0 {
        return Err(Error::InvalidParams("need a_n > 0 and ℓ ≥ 1".into()));
    }
    let base = RowingSpec(spec.to_vec()).padded(ell);
    let (lo, _) = rowing_eig(&base, &(eps / int(4)))?;
    let target = lo + eps;
    let target_f = to_f64(&target);
    for a in 1..=max {
        let mut v = spec.to_vec();
        *v.last_mut().unwrap() -= 1;
        v.push(a);
        let cand = RowingSpec(v).padded(ell - 1);
        let g = cand.graph();
        if approx_lambda1(&g) < target_f + 1e-9 && Spectrum::new(&g.adjacency()).count_below(&target) >= 1 {
            return Ok(Some(a));
        }
    }
    Ok(None)
}

/// Result of [`density_search`]: `λ₁(R(spec)) ∈ [lo, hi]` and the window it certifies.
#[derive(Clone, Debug)]
pub struct DensityHit {
    pub spec: RowingSpec,
    pub lo: Rational,
    pub hi: Rational,
    /// rational lower end used in the certificate: `λ₁ > window_lo`
    pub window_lo: Rational,
    pub nodes: u64,
}

#[derive(Clone, Copy, Debug)]
pub struct DensityOptions {
    pub budget: u64,
    pub max_vertices: usize,
    pub max_entry: usize,
}

impl Default for DensityOptions {
    fn default() -> Self {
        DensityOptions { budget: 1_000_000, max_vertices: 60, max_entry: 24 }
    }
}

struct Frontier {
    score: f64,
    spec: RowingSpec,
}

impl PartialEq for Frontier {
    fn eq(&self, o: &Self) -> bool {
        self.cmp(o) == Ordering::Equal
    }
}
impl Eq for Frontier {}
impl PartialOrd for Frontier {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}
impl Ord for Frontier {
    fn cmp(&self, o: &Self) -> Ordering {
        // max-heap: smaller score first, then lexicographically smaller spec
        o.score.total_cmp(&self.score).then_with(|| o.spec.cmp(&self.spec))
    }
}

/// Children under the proof's moves: appending an entry, zero padding, splitting the
/// last clique, and inserting a zero.
fn moves(spec: &RowingSpec, opts: &DensityOptions) -> Vec<RowingSpec> {
    let v = &spec.0;
    let mut out = Vec::new();
    for a in 0..=opts.max_entry {
        let mut w = v.clone();
        w.push(a);
        out.push(RowingSpec(w));
    }
    if let Some(&last) = v.last() {
        if last > 0 {
            for a in 1..=opts.max_entry {
                let mut w = v.clone();
                *w.last_mut().unwrap() -= 1;
                w.push(a);
                out.push(RowingSpec(w));
            }
        }
    }
    for k in 0..v.len() {
        let mut w = v.clone();
        w.insert(k, 0);
        out.push(RowingSpec(w));
    }
    out.retain(|s| s.vertex_count() <= opts.max_vertices);
    out
}

/// Best-first search for `spec` with `λ₁(R(spec)) ∈ (−(1 + ε/2)t − ε, −t)`, certified
/// exactly before returning.
pub fn density_search(target: &AlgebraicNumber, eps: &Rational, opts: DensityOptions) -> Result<DensityHit> {
    let (ls, lp) = (constants::lambda_star(), constants::lambda_prime());
    if target.try_cmp(&ls)? != Ordering::Greater || target.try_cmp(&lp)? != Ordering::Less {
        return Err(Error::InvalidParams("target must lie strictly between lambda* and lambda'".into()));
    }
    if *eps <= Rational::zero() {
        return Err(Error::InvalidParams("eps must be positive".into()));
    }
    let t = target.refined(&(eps * rat(1, 1000)));
    let half = eps / int(2);
    // −(1 + ε/2)t − ε ≤ window_lo for every t ≥ t.lo
    let window_lo = -(Rational::one() + &half) * t.lo() - eps;
    let (wl, wh) = (to_f64(&window_lo), -t.to_f64());
    let center = (wl + wh) / 2.0;
    let mut heap = BinaryHeap::new();
    let mut seen = BTreeSet::new();
    let root = RowingSpec::default();
    seen.insert(root.clone());
    heap.push(Frontier { score: 0.0, spec: root });
    let mut nodes = 0u64;
    while let Some(Frontier { spec, .. }) = heap.pop() {
        for child in moves(&spec, &opts) {
            if !seen.insert(child.clone()) {
                continue;
            }
            nodes += 1;
            if nodes > opts.budget {
                return Err(Error::budget("rowing density search", opts.budget));
            }
            let l1 = approx_lambda1(&child.graph());
            if l1 > wl + 1e-9 && l1 < wh - 1e-9 {
                if let Some(hit) = certify(&child, &t, &window_lo, nodes)? {
                    return Ok(hit);
                }
            }
            heap.push(Frontier { score: (l1 - center).abs() + 1e-4 * child.vertex_count() as f64, spec: child });
        }
    }
    Err(Error::budget("rowing density search (frontier exhausted)", opts.budget))
}

fn certify(spec: &RowingSpec, t: &AlgebraicNumber, window_lo: &Rational, nodes: u64) -> Result<Option<DensityHit>> {
    let s = Spectrum::new(&spec.graph().adjacency());
    if s.count_below_algebraic(&t.neg())? == 0 || s.count_at_most(window_lo) != 0 {
        return Ok(None);
    }
    let (lo, hi) = s.smallest_eig_interval(&rat(1, 1_000_000))?;
    Ok(Some(DensityHit { spec: spec.clone(), lo, hi, window_lo: window_lo.clone(), nodes }))
}

/// Replays a hit's certificate: `window_lo < λ₁(R(spec)) < −t`.
pub fn verify_density_hit(hit: &DensityHit, target: &AlgebraicNumber, eps: &Rational) -> Result<bool> {
    let t = target.refined(&(eps * rat(1, 1000)));
    let expect_lo = -(Rational::one() + eps / int(2)) * t.lo() - eps;
    let s = Spectrum::new(&hit.spec.graph().adjacency());
    Ok(expect_lo == hit.window_lo && s.count_below_algebraic(&target.neg())? >= 1 && s.count_at_most(&hit.window_lo) == 0)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(v: &[usize]) -> RowingSpec {
        RowingSpec(v.to_vec())
    }

    #[test]
    fn parse_and_display() {
        assert_eq!("R(2,0,2)".parse::<RowingSpec>().unwrap(), spec(&[2, 0, 2]));
        assert_eq!("".parse::<RowingSpec>().unwrap(), spec(&[]));
        assert_eq!(spec(&[1, 0]).to_string(), "R(1,0)");
        assert!("1,x".parse::<RowingSpec>().is_err());
        assert_eq!(spec(&[2, 0, 2]).vertex_count(), spec(&[2, 0, 2]).graph().order());
    }

    #[test]
    fn empty_spec_is_the_four_vertex_path() {
        // λ₁(P₄) = −(1 + √5)/2, a root of x² + x − 1
        let (lo, hi) = rowing_eig(&spec(&[]), &rat(1, 1000)).unwrap();
        let phi = AlgebraicNumber::new(IntPolynomial::from_i64(&[-1, 1, 1]), int(-2), rat(-3, 2)).unwrap();
        assert_ne!(phi.cmp_rational(&lo), Ordering::Less);
        assert_ne!(phi.cmp_rational(&hi), Ordering::Greater);
    }

    #[test]
    fn zero_sequences_are_e2n() {
        let ls = constants::lambda_star();
        for ell in 6..10 {
            let s = spec(&vec![0; ell]);
            assert!(below(&s, &AlgebraicNumber::from_int(2)).unwrap());
            assert!(!below(&s, &ls).unwrap());
        }
    }

    #[test]
    fn a1_bound() {
        for a1 in 1..8 {
            let g = spec(&[a1]).graph();
            assert_eq!(rayleigh_quotient(&g, &a1_test_vector(a1)).unwrap(), a1_rayleigh_bound(a1));
            let (lo, _) = rowing_eig(&spec(&[a1]), &rat(1, 1000)).unwrap();
            assert!(lo <= a1_rayleigh_bound(a1));
        }
        assert!(a1_rayleigh_bound(1_000_000) > rat(-52, 25));
    }

    #[test]
    fn zero_insertion() {
        let s = spec(&[3, 1, 2]);
        for k in 1..=3 {
            let b = zero_insertion_bound(&s, k).unwrap();
            let mut v = s.0.clone();
            v.insert(k - 1, 0);
            let (lo, _) = rowing_eig(&RowingSpec(v), &rat(1, 10_000)).unwrap();
            assert!(lo <= b);
        }
        assert!(zero_insertion_bound(&s, 0).is_err());
    }

    #[test]
    fn lemma_b_small() {
        assert!(check_rowing_lemma_b(&[1], &[1], 7).unwrap());
        assert!(check_rowing_lemma_b(&[], &[3, 2], 7).unwrap());
        assert!(check_rowing_lemma_b(&[2], &[], 7).unwrap());
        assert!(check_rowing_lemma_b(&[2], &[], 5).is_err());
    }

    #[test]
    fn density_small() {
        let t = AlgebraicNumber::from_rational(rat(203, 100));
        let hit = density_search(&t, &rat(1, 100), DensityOptions::default()).unwrap();
        assert!(verify_density_hit(&hit, &t, &rat(1, 100)).unwrap());
        assert!(density_search(&AlgebraicNumber::from_int(2), &rat(1, 100), DensityOptions::default()).is_err());
    }
}
