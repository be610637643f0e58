use std::fmt;

use crate::error::{Error, Result};
use crate::graph::SignedGraph;

/// A root system to represent signed graphs in.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RootSystem {
    /// `D_n` with the given number of axes.
    D(usize),
    /// the 112 roots of `D₈` and the 128 vectors `½(±1, …, ±1)` with an even number of
    /// minus signs
    E8,
}

impl RootSystem {
    /// `D_n` with `n = 2|G|`, enough axes for any representable graph.
    pub fn d_for(g: &SignedGraph) -> Self {
        RootSystem::D((2 * g.order()).max(2))
    }

    /// Coordinates are stored multiplied by this factor.
    pub fn scale(&self) -> i64 {
        match self {
            RootSystem::D(_) => 1,
            RootSystem::E8 => 2,
        }
    }

    pub fn dimension(&self) -> usize {
        match self {
            RootSystem::D(n) => *n,
            RootSystem::E8 => 8,
        }
    }
}

/// One root per graph vertex; coordinates are scaled by `system.scale()` so that the
/// half-integer roots of `E8` stay integral.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootAssignment {
    pub system: RootSystem,
    pub vectors: Vec<Vec<i64>>,
}

impl RootAssignment {
    /// Gram matrix in true (unscaled) coordinates.
    pub fn gram(&self) -> Vec<Vec<i64>> {
        let s2 = self.system.scale().pow(2);
        self.vectors
            .iter()
            .map(|a| self.vectors.iter().map(|b| a.iter().zip(b).map(|(x, y)| x * y).sum::<i64>() / s2).collect())
            .collect()
    }

    /// Whether every vector is a root and the Gram matrix equals `A + 2I`.
    pub fn verify(&self, g: &SignedGraph) -> bool {
        let n = g.order();
        if self.vectors.len() != n || !self.vectors.iter().all(|v| is_root(self.system, v)) {
            return false;
        }
        let gram = self.gram();
        (0..n).all(|i| (0..n).all(|j| gram[i][j] == if i == j { 2 } else { g.sign(i, j) as i64 }))
    }
}

fn is_root(system: RootSystem, v: &[i64]) -> bool {
    if v.len() != system.dimension() {
        return false;
    }
    match system {
        RootSystem::D(_) => {
            let nz: Vec<i64> = v.iter().copied().filter(|&x| x != 0).collect();
            nz.len() == 2 && nz.iter().all(|x| x.abs() == 1)
        }
        RootSystem::E8 => e8_roots().iter().any(|r| r.as_slice() == v),
    }
}

impl fmt::Display for RootAssignment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = self.system.scale();
        for (i, v) in self.vectors.iter().enumerate() {
            let parts: Vec<String> = v
                .iter()
                .map(|&x| if s == 1 || x % s == 0 { (x / s).to_string() } else { format!("{x}/{s}") })
                .collect();
            writeln!(f, "{i}: ({})", parts.join(", "))?;
        }
        Ok(())
    }
}

/// The 240 roots of `E8` in doubled coordinates: `±2e_i ± 2e_j` and `(±1, …, ±1)` with
/// an even number of minus signs.
pub fn e8_roots() -> Vec<Vec<i64>> {
    let mut out = Vec::with_capacity(240);
    for i in 0..8 {
        for j in i + 1..8 {
            for (a, b) in [(2, 2), (2, -2), (-2, 2), (-2, -2)] {
                let mut v = vec![0; 8];
                v[i] = a;
                v[j] = b;
                out.push(v);
            }
        }
    }
    for mask in 0u32..256 {
        if mask.count_ones() % 2 == 0 {
            out.push((0..8).map(|k| if mask >> k & 1 == 1 { -1 } else { 1 }).collect());
        }
    }
    out
}

/// Vertex order: breadth-first within each component, so every non-root vertex has an
/// earlier neighbour.
fn bfs_order(g: &SignedGraph) -> Vec<(usize, Option<usize>)> {
    let mut order = Vec::with_capacity(g.order());
    let mut seen = vec![false; g.order()];
    for s in 0..g.order() {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        order.push((s, None));
        let mut head = order.len() - 1;
        while head < order.len() {
            let v = order[head].0;
            head += 1;
            for w in g.neighbors(v) {
                if !seen[w] {
                    seen[w] = true;
                    order.push((w, Some(v)));
                }
            }
        }
    }
    order
}

/// A root of `D_n` as two signed axes `(a, sa), (b, sb)` with `a < b`.
type DRoot = [(usize, i64); 2];

fn d_dot(x: &DRoot, y: &DRoot) -> i64 {
    let mut s = 0;
    for &(a, sa) in x {
        for &(b, sb) in y {
            if a == b {
                s += sa * sb;
            }
        }
    }
    s
}

fn d_root(a: (usize, i64), b: (usize, i64)) -> DRoot {
    if a.0 < b.0 {
        [a, b]
    } else {
        [b, a]
    }
}

struct DSearch<'a> {
    g: &'a SignedGraph,
    order: Vec<(usize, Option<usize>)>,
    axes: usize,
    roots: Vec<Option<DRoot>>,
    used_axes: usize,
    nodes: u64,
    budget: u64,
}

impl DSearch<'_> {
    fn candidates(&self, v: usize, parent: Option<usize>) -> Vec<DRoot> {
        let u = self.used_axes;
        let mut out = Vec::new();
        let others = |exclude: &[usize], first: (usize, i64), out: &mut Vec<DRoot>| {
            for b in 0..u {
                if !exclude.contains(&b) {
                    out.push(d_root(first, (b, 1)));
                    out.push(d_root(first, (b, -1)));
                }
            }
            if u < self.axes {
                out.push(d_root(first, (u, 1)));
            }
        };
        match parent {
            Some(w) => {
                let r = self.roots[w].unwrap();
                let s = self.g.sign(v, w) as i64;
                for &(a, sa) in &r {
                    others(&[r[0].0, r[1].0], (a, s * sa), &mut out);
                }
            }
            None => {
                for a in 0..u {
                    for sa in [1, -1] {
                        for b in a + 1..u {
                            out.push([(a, sa), (b, 1)]);
                            out.push([(a, sa), (b, -1)]);
                        }
                    }
                }
                for a in 0..u {
                    if u < self.axes {
                        out.push([(a, 1), (u, 1)]);
                        out.push([(a, -1), (u, 1)]);
                    }
                }
                if u + 1 < self.axes {
                    out.push([(u, 1), (u + 1, 1)]);
                }
            }
        }
        out
    }

    fn run(&mut self, k: usize) -> Result<bool> {
        if k == self.order.len() {
            return Ok(true);
        }
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Error::budget("D_n representation search", self.budget));
        }
        let (v, parent) = self.order[k];
        for cand in self.candidates(v, parent) {
            let ok = self.order[..k].iter().all(|&(w, _)| d_dot(&cand, self.roots[w].as_ref().unwrap()) == self.g.sign(v, w) as i64);
            if !ok {
                continue;
            }
            let saved = self.used_axes;
            self.used_axes = self.used_axes.max(cand[1].0 + 1);
            self.roots[v] = Some(cand);
            if self.run(k + 1)? {
                return Ok(true);
            }
            self.roots[v] = None;
            self.used_axes = saved;
        }
        Ok(false)
    }
}

struct E8Search<'a> {
    g: &'a SignedGraph,
    order: Vec<(usize, Option<usize>)>,
    roots: Vec<Vec<i64>>,
    /// `dot[r][s]` is the true inner product of roots `r` and `s`
    dot: Vec<Vec<i8>>,
    by_dot: Vec<[Vec<usize>; 2]>,
    chosen: Vec<usize>,
    nodes: u64,
    budget: u64,
}

impl E8Search<'_> {
    fn run(&mut self, k: usize) -> Result<bool> {
        if k == self.order.len() {
            return Ok(true);
        }
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Error::budget("E8 representation search", self.budget));
        }
        let (v, parent) = self.order[k];
        let cands: Vec<usize> = match parent {
            _ if k == 0 => vec![0],
            Some(w) => {
                let s = self.g.sign(v, w);
                self.by_dot[self.chosen[w]][usize::from(s < 0)].clone()
            }
            None => (0..self.roots.len()).collect(),
        };
        for c in cands {
            let ok = self.order[..k].iter().all(|&(w, _)| self.dot[c][self.chosen[w]] == self.g.sign(v, w));
            if !ok {
                continue;
            }
            self.chosen[v] = c;
            if self.run(k + 1)? {
                return Ok(true);
            }
        }
        Ok(false)
    }
}

/// Searches for roots with Gram matrix `A + 2I`; `None` certifies that none exist.
pub fn root_representation(g: &SignedGraph, system: RootSystem, budget: u64) -> Result<Option<RootAssignment>> {
    let order = bfs_order(g);
    match system {
        RootSystem::D(axes) => {
            let mut s = DSearch { g, order, axes, roots: vec![None; g.order()], used_axes: 0, nodes: 0, budget };
            if !s.run(0)? {
                return Ok(None);
            }
            let vectors = s
                .roots
                .iter()
                .map(|r| {
                    let mut v = vec![0; axes];
                    for &(a, sa) in r.as_ref().unwrap() {
                        v[a] = sa;
                    }
                    v
                })
                .collect();
            Ok(Some(RootAssignment { system, vectors }))
        }
        RootSystem::E8 => {
            if g.order() > 240 {
                return Ok(None);
            }
            let roots = e8_roots();
            let dot: Vec<Vec<i8>> = roots
                .iter()
                .map(|a| roots.iter().map(|b| (a.iter().zip(b).map(|(x, y)| x * y).sum::<i64>() / 4) as i8).collect())
                .collect();
            let by_dot = (0..roots.len())
                .map(|r| {
                    let with = |d: i8| (0..roots.len()).filter(|&s| dot[r][s] == d).collect::<Vec<_>>();
                    [with(1), with(-1)]
                })
                .collect();
            let mut s = E8Search { g, order, roots, dot, by_dot, chosen: vec![0; g.order()], nodes: 0, budget };
            if !s.run(0)? {
                return Ok(None);
            }
            let vectors = s.chosen.iter().map(|&c| s.roots[c].clone()).collect();
            Ok(Some(RootAssignment { system, vectors }))
        }
    }
}
