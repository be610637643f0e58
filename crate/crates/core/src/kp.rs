//! Signed chromatic number and the ratio `|G| / mult(−λ, G)` over connected signed graphs
//! with `λ₁(G) = −λ` and `χ(−G) ≤ p`.

use std::collections::{HashSet, VecDeque};

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use rayon::prelude::*;

use crate::coloring;
use crate::error::{Error, Result};
use crate::exact::inertia::inertia_i64;
use crate::exact::{AlgebraicNumber, Rational, Spectrum};
use crate::graph::iso::{canonical_form, CanonicalForm};
use crate::graph::SignedGraph;
use crate::line::{signed_line_graph, BidirectedMultigraph};

/// Outcome of the signed chromatic number computation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SignedChromatic {
    /// Chromatic number and an optimal valid colouring.
    Finite { colors: usize, coloring: Vec<usize> },
    /// No valid colouring: the negative edge `(u, v)` has both endpoints joined by the
    /// positive path `path` (from `u` to `v`).
    Infinite { negative_edge: (usize, usize), positive_path: Vec<usize> },
}

impl SignedChromatic {
    pub fn value(&self) -> Option<usize> {
        match self {
            SignedChromatic::Finite { colors, .. } => Some(*colors),
            SignedChromatic::Infinite { .. } => None,
        }
    }
}

fn sign_split(g: &SignedGraph) -> (Vec<(usize, usize)>, Vec<(usize, usize)>) {
    let (mut pos, mut neg) = (Vec::new(), Vec::new());
    for (i, j, s) in g.edges() {
        if s.to_i8() > 0 {
            pos.push((i, j));
        } else {
            neg.push((i, j));
        }
    }
    (pos, neg)
}

fn positive_path(g: &SignedGraph, from: usize, to: usize) -> Vec<usize> {
    let mut prev = vec![usize::MAX; g.order()];
    prev[from] = from;
    let mut queue = VecDeque::from([from]);
    while let Some(v) = queue.pop_front() {
        if v == to {
            break;
        }
        for w in g.neighbors(v) {
            if g.sign(v, w) > 0 && prev[w] == usize::MAX {
                prev[w] = v;
                queue.push_back(w);
            }
        }
    }
    let mut path = vec![to];
    while *path.last().unwrap() != from {
        path.push(prev[*path.last().unwrap()]);
    }
    path.reverse();
    path
}

/// Least number of colours with positive edges monochromatic and negative edges
/// bichromatic.
pub fn signed_chromatic(g: &SignedGraph, budget: u64) -> Result<SignedChromatic> {
    let (pos, neg) = sign_split(g);
    match coloring::quotient(g.order(), &pos, &neg) {
        Err((u, v)) => Ok(SignedChromatic::Infinite { negative_edge: (u, v), positive_path: positive_path(g, u, v) }),
        Ok(q) => {
            let (colors, c) = coloring::chromatic_number(&q.conflicts, budget)?;
            Ok(SignedChromatic::Finite { colors, coloring: q.class_of.iter().map(|&k| c[k]).collect() })
        }
    }
}

/// Whether `coloring` is a valid colouring of `g`.
pub fn is_valid_coloring(g: &SignedGraph, coloring: &[usize]) -> bool {
    coloring.len() == g.order()
        && g.edges().iter().all(|&(i, j, s)| (coloring[i] == coloring[j]) == (s.to_i8() > 0))
}

/// Whether `χ(−G) ≤ p`.
fn negated_colorable(g: &SignedGraph, p: usize, budget: u64) -> Result<bool> {
    let (pos, neg) = sign_split(g);
    // in −G the negative edges of G are the monochromatic ones
    match coloring::quotient(g.order(), &neg, &pos) {
        Err(_) => Ok(false),
        Ok(q) => Ok(coloring::k_coloring(&q.conflicts, p, budget)?.is_some()),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KpWitness {
    pub graph: SignedGraph,
    pub vertex_count: usize,
    pub multiplicity: usize,
    pub ratio: Rational,
}

/// The signed line graph of all-positive `K_{p,p}`: `p²` vertices, multiplicity
/// `(p − 1)²` at `−2`.
pub fn kpp_witness(p: usize) -> Result<KpWitness> {
    if p < 2 {
        return Err(Error::InvalidParams("kpp_witness needs p ≥ 2".into()));
    }
    let graph = signed_line_graph(&BidirectedMultigraph::k_pp(p));
    let multiplicity = Threshold::new(&AlgebraicNumber::from_int(2)).stats(&graph).1;
    let vertex_count = graph.order();
    Ok(KpWitness {
        ratio: Rational::new(vertex_count.into(), multiplicity.into()),
        graph,
        vertex_count,
        multiplicity,
    })
}

/// Exact counts at `−λ`: eigenvalues strictly below, and multiplicity.
struct Threshold {
    /// `λ = num/den` when rational and small
    small: Option<(i64, i64)>,
    lam: AlgebraicNumber,
}

impl Threshold {
    fn new(lam: &AlgebraicNumber) -> Self {
        let small = lam.as_rational().and_then(|r| Some((r.numer().to_i64()?, r.denom().to_i64()?)));
        Threshold { small, lam: lam.clone() }
    }

    fn stats(&self, g: &SignedGraph) -> (usize, usize) {
        let n = g.order();
        match self.small {
            Some((num, den)) => {
                let m: Vec<i64> = (0..n * n)
                    .map(|k| den * g.matrix()[k] as i64 + if k / n == k % n { num } else { 0 })
                    .collect();
                let inertia = inertia_i64(n, &m);
                (inertia.negative, inertia.zero)
            }
            None => {
                let s = Spectrum::new(&g.adjacency());
                let t = self.lam.neg();
                let below = s.count_below_algebraic(&t).expect("separation of an algebraic threshold");
                (below, s.multiplicity_algebraic(&t))
            }
        }
    }
}

#[derive(Clone, Copy, Debug)]
pub struct KpOptions {
    /// largest accepted `max_n`
    pub cap: usize,
    /// total number of candidate graphs examined
    pub budget: u64,
}

impl Default for KpOptions {
    fn default() -> Self {
        KpOptions { cap: 9, budget: 20_000_000 }
    }
}

struct Node {
    form: CanonicalForm,
    graph: SignedGraph,
    mult: usize,
}

/// Best ratio within `max_n` vertices; `None` if no qualifying graph exists there.
pub fn kp_search(p: usize, lam: &AlgebraicNumber, max_n: usize) -> Result<Option<KpWitness>> {
    kp_search_with(p, lam, max_n, KpOptions::default())
}

pub fn kp_search_with(p: usize, lam: &AlgebraicNumber, max_n: usize, opts: KpOptions) -> Result<Option<KpWitness>> {
    if p == 0 {
        return Err(Error::InvalidParams("p must be at least 1".into()));
    }
    if max_n > opts.cap {
        return Err(Error::InvalidParams(format!("max_n = {max_n} exceeds the enumeration cap {}", opts.cap)));
    }
    if lam.cmp_rational(&Rational::from_integer(0.into())).is_le() {
        return Err(Error::InvalidParams("λ must be positive".into()));
    }
    let th = Threshold::new(lam);
    let color_budget = 1u64 << 20;
    let mut best: Option<(Rational, CanonicalForm, KpWitness)> = None;
    let offer = |w: KpWitness, form: CanonicalForm, best: &mut Option<(Rational, CanonicalForm, KpWitness)>| {
        let better = match best {
            None => true,
            Some((r, f, _)) => w.ratio < *r || (w.ratio == *r && form < *f),
        };
        if better {
            *best = Some((w.ratio.clone(), form, w));
        }
    };
    if lam.as_rational() == Some(&Rational::from_integer(2.into())) && p >= 2 && p * p <= max_n {
        let w = kpp_witness(p)?;
        if negated_colorable(&w.graph, p, color_budget)? {
            let form = canonical_form(&w.graph, 1 << 16)?.0;
            offer(w, form, &mut best);
        }
    }
    if max_n == 0 {
        return Ok(best.map(|b| b.2));
    }
    let k1 = SignedGraph::new(1);
    let (below, mult) = th.stats(&k1);
    let mut level = Vec::new();
    if below == 0 {
        level.push(Node { form: canonical_form(&k1, 16)?.0, graph: k1, mult });
    }
    let mut examined = 0u64;
    for k in 1..=max_n {
        for node in &level {
            if node.mult > 0 {
                let w = KpWitness {
                    graph: node.graph.clone(),
                    vertex_count: k,
                    multiplicity: node.mult,
                    ratio: Rational::new(k.into(), node.mult.into()),
                };
                offer(w, node.form.clone(), &mut best);
            }
        }
        if k == max_n {
            break;
        }
        // descendants up to max_n have multiplicity at most mult + (max_n − k)
        let promising = |node: &Node| match &best {
            None => true,
            Some((r, _, _)) => {
                let denom = node.mult + max_n - k;
                denom > 0 && Rational::new(max_n.into(), denom.into()) < *r
            }
        };
        let parents: Vec<&Node> = level.iter().filter(|n| promising(n)).collect();
        let patterns = 3u64.pow(k as u32) - 1;
        examined += parents.len() as u64 * patterns;
        if examined > opts.budget {
            return Err(Error::budget("k_p enumeration", opts.budget));
        }
        let children: Vec<Node> = parents
            .par_iter()
            .map(|parent| expand(parent, p, &th, color_budget))
            .collect::<Result<Vec<Vec<Node>>>>()?
            .into_iter()
            .flatten()
            .collect();
        let mut seen = HashSet::new();
        let mut next: Vec<Node> = children.into_iter().filter(|c| seen.insert(c.form.clone())).collect();
        next.sort_by(|a, b| a.form.cmp(&b.form));
        level = next;
        if level.is_empty() {
            break;
        }
    }
    Ok(best.map(|b| b.2))
}

fn expand(parent: &Node, p: usize, th: &Threshold, color_budget: u64) -> Result<Vec<Node>> {
    let k = parent.graph.order();
    let mut out = Vec::new();
    let mut seen = HashSet::new();
    for code in 1..3u64.pow(k as u32) {
        let mut g = parent.graph.clone();
        let v = g.add_vertex();
        let mut c = code;
        for u in 0..k {
            match c % 3 {
                1 => g.set(u, v, 1),
                2 => g.set(u, v, -1),
                _ => {}
            }
            c /= 3;
        }
        let (below, mult) = th.stats(&g);
        if below > 0 || !negated_colorable(&g, p, color_budget)? {
            continue;
        }
        let form = canonical_form(&g, 1 << 16)?.0;
        if seen.insert(form.clone()) {
            out.push(Node { form, graph: g, mult });
        }
    }
    Ok(out)
}

/// Replays a witness: connected, `χ(−G) ≤ p`, nothing below `−λ`, multiplicity as stated.
pub fn verify_kp_witness(w: &KpWitness, p: usize, lam: &AlgebraicNumber) -> Result<bool> {
    let g = &w.graph;
    let s = Spectrum::new(&g.adjacency());
    let t = lam.neg();
    let mult = s.multiplicity_algebraic(&t);
    Ok(g.is_connected()
        && s.count_below_algebraic(&t)? == 0
        && mult == w.multiplicity
        && mult > 0
        && w.vertex_count == g.order()
        && w.ratio == Rational::new(BigInt::from(g.order()), BigInt::from(mult))
        && negated_colorable(g, p, 1 << 22)?)
}
