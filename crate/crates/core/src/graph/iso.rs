use super::SignedGraph;
use crate::error::{Error, Result};

/// Default node budget for the backtracking searches.
pub const DEFAULT_BUDGET: u64 = 50_000_000;

/// Switches a BFS spanning forest to all-positive edges; returns the normalized graph and
/// the switching set used. Two graphs with the same labeling are switching equivalent
/// iff their normal forms coincide.
pub fn switching_normal_form(g: &SignedGraph) -> (SignedGraph, Vec<usize>) {
    let n = g.order();
    let mut s = vec![0i8; n];
    for root in 0..n {
        if s[root] != 0 {
            continue;
        }
        s[root] = 1;
        let mut queue = vec![root];
        let mut k = 0;
        while k < queue.len() {
            let u = queue[k];
            k += 1;
            for w in g.neighbors(u) {
                if s[w] == 0 {
                    s[w] = s[u] * g.sign(u, w);
                    queue.push(w);
                }
            }
        }
    }
    let set: Vec<usize> = (0..n).filter(|&v| s[v] < 0).collect();
    (g.switched(&set), set)
}

/// Number of triangles through `v` whose sign product is negative; switching invariant.
fn unbalanced_triangles(g: &SignedGraph, v: usize) -> usize {
    let nb: Vec<usize> = g.neighbors(v).collect();
    let mut c = 0;
    for (a, &x) in nb.iter().enumerate() {
        for &y in &nb[a + 1..] {
            let s = g.sign(x, y);
            if s != 0 && g.sign(v, x) * g.sign(v, y) * s < 0 {
                c += 1;
            }
        }
    }
    c
}

fn bfs_order(g: &SignedGraph) -> Vec<usize> {
    let n = g.order();
    let mut seen = vec![false; n];
    let mut order = Vec::with_capacity(n);
    let mut roots: Vec<usize> = (0..n).collect();
    roots.sort_by_key(|&v| std::cmp::Reverse(g.degree(v)));
    for r in roots {
        if seen[r] {
            continue;
        }
        seen[r] = true;
        let start = order.len();
        order.push(r);
        while start < order.len() {
            // pick the unvisited vertex with most already-ordered neighbours next
            let mut best: Option<(usize, usize, usize)> = None;
            for &u in &order[start..] {
                for w in g.neighbors(u) {
                    if seen[w] {
                        continue;
                    }
                    let links = g.neighbors(w).filter(|&x| seen[x]).count();
                    let key = (links, g.degree(w), usize::MAX - w);
                    if best.is_none_or(|b| key > b) {
                        best = Some(key);
                    }
                }
            }
            match best {
                Some((_, _, inv)) => {
                    let w = usize::MAX - inv;
                    seen[w] = true;
                    order.push(w);
                }
                None => break,
            }
        }
    }
    order
}

struct Matcher<'a> {
    host: &'a SignedGraph,
    pat: &'a SignedGraph,
    switching: bool,
    exact_size: bool,
    order: Vec<usize>,
    map: Vec<usize>,
    sw: Vec<i8>,
    used: Vec<bool>,
    pat_inv: Vec<(usize, usize)>,
    host_inv: Vec<(usize, usize)>,
    nodes: u64,
    budget: u64,
}

const NONE: usize = usize::MAX;

impl Matcher<'_> {
    fn run(&mut self, depth: usize) -> Result<bool> {
        if depth == self.order.len() {
            return Ok(true);
        }
        let u = self.order[depth];
        for x in 0..self.host.order() {
            if self.used[x] {
                continue;
            }
            let (pd, pi) = self.pat_inv[u];
            let (hd, hi) = self.host_inv[x];
            if self.exact_size {
                if (pd, pi) != (hd, hi) {
                    continue;
                }
            } else if pd > hd {
                continue;
            }
            self.nodes += 1;
            if self.nodes > self.budget {
                return Err(Error::budget("induced subgraph search", self.budget));
            }
            let Some(s) = self.compatible(u, x) else {
                continue;
            };
            self.map[u] = x;
            self.sw[u] = s;
            self.used[x] = true;
            if self.run(depth + 1)? {
                return Ok(true);
            }
            self.used[x] = false;
            self.map[u] = NONE;
        }
        Ok(false)
    }

    /// Switching sign for `u ↦ x` consistent with every mapped vertex, if any.
    fn compatible(&self, u: usize, x: usize) -> Option<i8> {
        let mut s = 0i8;
        for w in 0..self.pat.order() {
            let y = self.map[w];
            if y == NONE {
                continue;
            }
            let fp = self.pat.sign(u, w);
            let gh = self.host.sign(x, y);
            if (fp == 0) != (gh == 0) {
                return None;
            }
            if fp == 0 {
                continue;
            }
            if !self.switching {
                if fp != gh {
                    return None;
                }
                continue;
            }
            // need fp · s · sw[w] = gh
            let need = gh * fp * self.sw[w];
            if s == 0 {
                s = need;
            } else if s != need {
                return None;
            }
        }
        Some(if s == 0 { 1 } else { s })
    }
}

fn matcher<'a>(host: &'a SignedGraph, pat: &'a SignedGraph, switching: bool, exact_size: bool, budget: u64) -> Matcher<'a> {
    let inv = |g: &SignedGraph, v: usize| {
        if switching {
            (g.degree(v), if exact_size { unbalanced_triangles(g, v) } else { 0 })
        } else {
            (g.degree(v), if exact_size { g.negative_degree(v) } else { 0 })
        }
    };
    Matcher {
        host,
        pat,
        switching,
        exact_size,
        order: bfs_order(pat),
        map: vec![NONE; pat.order()],
        sw: vec![0; pat.order()],
        used: vec![false; host.order()],
        pat_inv: (0..pat.order()).map(|v| inv(pat, v)).collect(),
        host_inv: (0..host.order()).map(|v| inv(host, v)).collect(),
        nodes: 0,
        budget,
    }
}

/// An injection `V(F) → V(G)` realizing `F` as an induced subgraph of `G`, exactly or
/// after switching `F`.
pub fn contains_induced(g: &SignedGraph, f: &SignedGraph, up_to_switching: bool) -> Result<Option<Vec<usize>>> {
    contains_induced_with_budget(g, f, up_to_switching, DEFAULT_BUDGET)
}

pub fn contains_induced_with_budget(
    g: &SignedGraph,
    f: &SignedGraph,
    up_to_switching: bool,
    budget: u64,
) -> Result<Option<Vec<usize>>> {
    if f.order() > g.order() {
        return Ok(None);
    }
    let mut m = matcher(g, f, up_to_switching, false, budget);
    Ok(if m.run(0)? { Some(m.map) } else { None })
}

/// Whether some relabeling of `h` followed by a switching equals `g`.
pub fn is_switching_isomorphic(g: &SignedGraph, h: &SignedGraph) -> Result<bool> {
    is_switching_isomorphic_with_budget(g, h, DEFAULT_BUDGET)
}

pub fn is_switching_isomorphic_with_budget(g: &SignedGraph, h: &SignedGraph, budget: u64) -> Result<bool> {
    if !same_shape(g, h) {
        return Ok(false);
    }
    let (gn, _) = switching_normal_form(g);
    let (hn, _) = switching_normal_form(h);
    let mut m = matcher(&gn, &hn, true, true, budget);
    m.run(0)
}

/// Whether `g` and `h` are isomorphic as signed graphs (no switching).
pub fn is_isomorphic(g: &SignedGraph, h: &SignedGraph) -> Result<bool> {
    if !same_shape(g, h) {
        return Ok(false);
    }
    let mut m = matcher(g, h, false, true, DEFAULT_BUDGET);
    m.run(0)
}

fn same_shape(g: &SignedGraph, h: &SignedGraph) -> bool {
    if g.order() != h.order() || g.edge_count() != h.edge_count() {
        return false;
    }
    let mut dg: Vec<usize> = (0..g.order()).map(|v| g.degree(v)).collect();
    let mut dh: Vec<usize> = (0..h.order()).map(|v| h.degree(v)).collect();
    dg.sort_unstable();
    dh.sort_unstable();
    dg == dh
}

/// Canonical labeling key of a signed graph: two graphs are isomorphic iff their keys
/// are equal. Computed by colour refinement and individualization, minimizing the
/// relabeled upper triangle over all leaves of the search tree.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct CanonicalForm {
    pub order: usize,
    pub key: Vec<i8>,
}

pub fn canonical_form(g: &SignedGraph, leaf_budget: u64) -> Result<(CanonicalForm, SignedGraph)> {
    let n = g.order();
    let colors = refine(g, initial_colors(g));
    let mut best: Option<(Vec<i8>, Vec<usize>)> = None;
    let mut leaves = 0u64;
    search(g, colors, &mut best, &mut leaves, leaf_budget)?;
    let (key, perm) = best.unwrap_or_default();
    let relabeled = g.permuted(&perm);
    Ok((CanonicalForm { order: n, key }, relabeled))
}

fn initial_colors(g: &SignedGraph) -> Vec<usize> {
    let keys: Vec<(usize, usize)> = (0..g.order()).map(|v| (g.degree(v), g.negative_degree(v))).collect();
    rank(&keys)
}

fn rank<K: Ord + Clone>(keys: &[K]) -> Vec<usize> {
    let mut sorted: Vec<K> = keys.to_vec();
    sorted.sort();
    sorted.dedup();
    keys.iter().map(|k| sorted.binary_search(k).unwrap()).collect()
}

/// Equitable refinement: split colour classes by the multiset of (neighbour colour, sign).
fn refine(g: &SignedGraph, mut colors: Vec<usize>) -> Vec<usize> {
    let n = g.order();
    loop {
        let count = colors.iter().copied().max().map_or(0, |m| m + 1);
        let keys: Vec<(usize, Vec<(usize, i8)>)> = (0..n)
            .map(|v| {
                let mut sig: Vec<(usize, i8)> = g.neighbors(v).map(|w| (colors[w], g.sign(v, w))).collect();
                sig.sort_unstable();
                (colors[v], sig)
            })
            .collect();
        let next = rank(&keys);
        let next_count = next.iter().copied().max().map_or(0, |m| m + 1);
        if next_count == count {
            return next;
        }
        colors = next;
    }
}

fn search(
    g: &SignedGraph,
    colors: Vec<usize>,
    best: &mut Option<(Vec<i8>, Vec<usize>)>,
    leaves: &mut u64,
    budget: u64,
) -> Result<()> {
    let n = g.order();
    let mut sizes = vec![0usize; n];
    for &c in &colors {
        sizes[c] += 1;
    }
    // smallest non-singleton cell, lowest colour first
    let target = (0..n).filter(|&c| sizes[c] > 1).min_by_key(|&c| (sizes[c], c));
    let Some(cell) = target else {
        *leaves += 1;
        if *leaves > budget {
            return Err(Error::budget("canonical labeling", budget));
        }
        let mut perm = vec![0; n];
        for v in 0..n {
            perm[colors[v]] = v;
        }
        let key: Vec<i8> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).map(|(i, j)| g.sign(perm[i], perm[j])).collect();
        if best.as_ref().is_none_or(|(b, _)| key < *b) {
            *best = Some((key, perm));
        }
        return Ok(());
    };
    for v in (0..n).filter(|&v| colors[v] == cell) {
        // individualize v: it keeps the cell's colour, the rest of the cell moves up
        let keys: Vec<(usize, usize)> = (0..n)
            .map(|w| (colors[w], usize::from(colors[w] == cell && w != v)))
            .collect();
        let next = refine(g, rank(&keys));
        search(g, next, best, leaves, budget)?;
    }
    Ok(())
}
