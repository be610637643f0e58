//! Signed graphs, switching, induced-subgraph search and the catalog of named graphs.

pub mod catalog;
pub mod iso;

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::exact::{Rational, SymRatMatrix};

/// Sign of an edge or of an anchor vertex.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum Sign {
    Pos,
    Neg,
}

impl Sign {
    pub fn to_i8(self) -> i8 {
        match self {
            Sign::Pos => 1,
            Sign::Neg => -1,
        }
    }

    pub fn from_i8(v: i8) -> Option<Sign> {
        match v {
            1 => Some(Sign::Pos),
            -1 => Some(Sign::Neg),
            _ => None,
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Pos => Sign::Neg,
            Sign::Neg => Sign::Pos,
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Sign::Pos => '+',
            Sign::Neg => '-',
        }
    }
}

impl std::ops::Mul for Sign {
    type Output = Sign;
    fn mul(self, o: Sign) -> Sign {
        if self == o { Sign::Pos } else { Sign::Neg }
    }
}

/// Simple graph whose edges carry signs; unsigned graphs are the all-positive case.
/// Stored as a dense matrix with entries in {−1, 0, 1} and zero diagonal.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct SignedGraph {
    n: usize,
    adj: Vec<i8>,
}

impl SignedGraph {
    pub fn new(n: usize) -> Self {
        SignedGraph { n, adj: vec![0; n * n] }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize, Sign)]) -> Result<Self> {
        let mut g = Self::new(n);
        for &(i, j, s) in edges {
            g.add_edge(i, j, s)?;
        }
        Ok(g)
    }

    /// All-positive graph from an edge list.
    pub fn unsigned(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Self::new(n);
        for &(i, j) in edges {
            g.add_edge(i, j, Sign::Pos)?;
        }
        Ok(g)
    }

    /// Builds a graph from a dense matrix with entries in {−1, 0, 1}.
    pub fn from_matrix(n: usize, entries: &[i8]) -> Result<Self> {
        if entries.len() != n * n {
            return Err(Error::LengthMismatch { expected: n * n, got: entries.len() });
        }
        for i in 0..n {
            if entries[i * n + i] != 0 {
                return Err(Error::InvalidParams(format!("loop at vertex {i}")));
            }
            for j in 0..n {
                let v = entries[i * n + j];
                if !(-1..=1).contains(&v) || v != entries[j * n + i] {
                    return Err(Error::InvalidParams(format!("invalid entry at ({i},{j})")));
                }
            }
        }
        Ok(SignedGraph { n, adj: entries.to_vec() })
    }

    pub fn add_edge(&mut self, i: usize, j: usize, s: Sign) -> Result<()> {
        if i >= self.n || j >= self.n {
            return Err(Error::InvalidParams(format!("edge {i}-{j} outside 0..{}", self.n)));
        }
        if i == j {
            return Err(Error::InvalidParams(format!("loop at vertex {i}")));
        }
        if self.adj[i * self.n + j] != 0 {
            return Err(Error::InvalidParams(format!("duplicate edge {i}-{j}")));
        }
        self.set(i, j, s.to_i8());
        Ok(())
    }

    pub(crate) fn set(&mut self, i: usize, j: usize, v: i8) {
        self.adj[i * self.n + j] = v;
        self.adj[j * self.n + i] = v;
    }

    /// Appends an isolated vertex and returns its index.
    pub fn add_vertex(&mut self) -> usize {
        let n = self.n + 1;
        let mut adj = vec![0; n * n];
        for i in 0..self.n {
            adj[i * n..i * n + self.n].copy_from_slice(&self.adj[i * self.n..(i + 1) * self.n]);
        }
        self.n = n;
        self.adj = adj;
        n - 1
    }

    pub fn order(&self) -> usize {
        self.n
    }

    /// Edge sign as −1, 0 (no edge) or 1.
    pub fn sign(&self, i: usize, j: usize) -> i8 {
        self.adj[i * self.n + j]
    }

    pub fn is_adjacent(&self, i: usize, j: usize) -> bool {
        self.sign(i, j) != 0
    }

    pub fn row(&self, i: usize) -> &[i8] {
        &self.adj[i * self.n..(i + 1) * self.n]
    }

    pub fn matrix(&self) -> &[i8] {
        &self.adj
    }

    pub fn neighbors(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        self.row(i).iter().enumerate().filter(|(_, &s)| s != 0).map(|(j, _)| j)
    }

    pub fn degree(&self, i: usize) -> usize {
        self.row(i).iter().filter(|&&s| s != 0).count()
    }

    /// Number of negative edges at `i`.
    pub fn negative_degree(&self, i: usize) -> usize {
        self.row(i).iter().filter(|&&s| s < 0).count()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().filter(|&&s| s != 0).count() / 2
    }

    /// Edges `(i, j, sign)` with `i < j` in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize, Sign)> {
        let mut out = Vec::new();
        for i in 0..self.n {
            for j in i + 1..self.n {
                if let Some(s) = Sign::from_i8(self.sign(i, j)) {
                    out.push((i, j, s));
                }
            }
        }
        out
    }

    pub fn is_all_positive(&self) -> bool {
        self.adj.iter().all(|&s| s >= 0)
    }

    pub fn adjacency(&self) -> SymRatMatrix {
        SymRatMatrix::from_fn(self.n, |i, j| Rational::from_integer(self.sign(i, j).into()))
    }

    pub fn adjacency_i64(&self) -> Vec<i64> {
        self.adj.iter().map(|&s| s as i64).collect()
    }

    /// The graph with every edge sign reversed.
    pub fn negated(&self) -> Self {
        SignedGraph { n: self.n, adj: self.adj.iter().map(|&s| -s).collect() }
    }

    /// Same vertices and edges, all positive.
    pub fn underlying(&self) -> Self {
        SignedGraph { n: self.n, adj: self.adj.iter().map(|&s| s.abs()).collect() }
    }

    /// Flips the sign of every edge with exactly one end in `s`.
    pub fn switched(&self, s: &[usize]) -> Self {
        let mut side = vec![false; self.n];
        for &v in s {
            side[v] = true;
        }
        let mut g = self.clone();
        for i in 0..self.n {
            for j in 0..self.n {
                if side[i] != side[j] {
                    g.adj[i * self.n + j] = -g.adj[i * self.n + j];
                }
            }
        }
        g
    }

    /// Induced subgraph on `idx`, with vertex `k` of the result being `idx[k]`.
    pub fn induced(&self, idx: &[usize]) -> Self {
        let m = idx.len();
        let mut g = Self::new(m);
        for a in 0..m {
            for b in 0..m {
                g.adj[a * m + b] = self.sign(idx[a], idx[b]);
            }
        }
        g
    }

    pub fn remove_vertex(&self, v: usize) -> Self {
        let keep: Vec<usize> = (0..self.n).filter(|&u| u != v).collect();
        self.induced(&keep)
    }

    /// Vertices renumbered so that new vertex `k` is old vertex `perm[k]`.
    pub fn permuted(&self, perm: &[usize]) -> Self {
        self.induced(perm)
    }

    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut k = 0;
            while k < comp.len() {
                let u = comp[k];
                k += 1;
                for w in self.neighbors(u) {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.components().len() == 1
    }

    /// Disjoint union with `other` placed after this graph's vertices.
    pub fn disjoint_union(&self, other: &Self) -> Self {
        let n = self.n + other.n;
        let mut g = Self::new(n);
        for (i, j, s) in self.edges() {
            g.set(i, j, s.to_i8());
        }
        for (i, j, s) in other.edges() {
            g.set(self.n + i, self.n + j, s.to_i8());
        }
        g
    }

    /// Parses either the `n=<int>` / `± i j` format or the compact digit format
    /// (`0514…-01…`, vertices are the digits `0..=max`).
    pub fn parse(text: &str) -> Result<Self> {
        let body: Vec<(usize, &str)> = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
            .collect();
        let Some(&(ln, first)) = body.first() else {
            return Err(Error::parse(1, "empty graph text"));
        };
        let Some(ns) = first.strip_prefix("n=").or_else(|| first.strip_prefix("n =")) else {
            if body.len() != 1 {
                return Err(Error::parse(ln, "expected `n=<int>` header"));
            }
            return parse_compact(first).map_err(|e| match e {
                Error::Parse { msg, .. } => Error::parse(ln, msg),
                other => other,
            });
        };
        let n: usize = ns.trim().parse().map_err(|_| Error::parse(ln, "bad vertex count"))?;
        let mut g = Self::new(n);
        for &(ln, l) in &body[1..] {
            let toks: Vec<&str> = l.split_whitespace().collect();
            let [s, i, j] = toks[..] else {
                return Err(Error::parse(ln, "expected `± i j`"));
            };
            let sign = match s {
                "+" => Sign::Pos,
                "-" => Sign::Neg,
                _ => return Err(Error::parse(ln, format!("bad sign {s:?}"))),
            };
            let i: usize = i.parse().map_err(|_| Error::parse(ln, "bad vertex"))?;
            let j: usize = j.parse().map_err(|_| Error::parse(ln, "bad vertex"))?;
            g.add_edge(i, j, sign).map_err(|e| Error::parse(ln, e.to_string()))?;
        }
        Ok(g)
    }
}

/// Compact digit format: pairs of digits for positive edges, optionally followed by
/// `-` and pairs for negative edges.
pub fn parse_compact(s: &str) -> Result<SignedGraph> {
    let (pos, neg) = match s.split_once('-') {
        Some((p, n)) => (p, Some(n)),
        None => (s, None),
    };
    let digits = |part: &str| -> Result<Vec<usize>> {
        part.chars()
            .map(|c| c.to_digit(10).map(|d| d as usize).ok_or_else(|| Error::parse(0, format!("bad digit {c:?}"))))
            .collect()
    };
    let pd = digits(pos)?;
    let nd = match neg {
        Some(n) => digits(n)?,
        None => Vec::new(),
    };
    if pd.len() % 2 != 0 || nd.len() % 2 != 0 {
        return Err(Error::parse(0, "odd number of digits in edge list"));
    }
    if neg.is_some() && nd.is_empty() {
        return Err(Error::parse(0, "empty negative edge list"));
    }
    let n = pd.iter().chain(&nd).max().map_or(0, |m| m + 1);
    let mut g = SignedGraph::new(n);
    for (chunk, sign) in [(&pd, Sign::Pos), (&nd, Sign::Neg)] {
        for e in chunk.chunks(2) {
            g.add_edge(e[0], e[1], sign).map_err(|err| Error::parse(0, err.to_string()))?;
        }
    }
    Ok(g)
}

impl fmt::Display for SignedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "n={}", self.n)?;
        for (i, j, s) in self.edges() {
            writeln!(f, "{} {i} {j}", s.symbol())?;
        }
        Ok(())
    }
}

/// Vertex subset with a sign per member: the anchor set of an extension.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default, PartialOrd, Ord)]
pub struct SignedVertexSubset {
    members: BTreeMap<usize, Sign>,
}

impl SignedVertexSubset {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_pairs(pairs: impl IntoIterator<Item = (usize, Sign)>) -> Self {
        SignedVertexSubset { members: pairs.into_iter().collect() }
    }

    pub fn all_positive(vs: impl IntoIterator<Item = usize>) -> Self {
        Self::from_pairs(vs.into_iter().map(|v| (v, Sign::Pos)))
    }

    pub fn insert(&mut self, v: usize, s: Sign) {
        self.members.insert(v, s);
    }

    pub fn get(&self, v: usize) -> Option<Sign> {
        self.members.get(&v).copied()
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, Sign)> + '_ {
        self.members.iter().map(|(&v, &s)| (v, s))
    }

    pub fn max_vertex(&self) -> Option<usize> {
        self.members.keys().next_back().copied()
    }

    /// Every sign reversed.
    pub fn negated(&self) -> Self {
        Self::from_pairs(self.iter().map(|(v, s)| (v, s.flip())))
    }

    /// Parses `0+,2-,3` (a bare vertex is positive).
    pub fn parse(s: &str) -> Result<Self> {
        let mut out = Self::new();
        for tok in s.split(',').map(str::trim).filter(|t| !t.is_empty()) {
            let (num, sign) = match tok.chars().last() {
                Some('+') => (&tok[..tok.len() - 1], Sign::Pos),
                Some('-') => (&tok[..tok.len() - 1], Sign::Neg),
                _ => (tok, Sign::Pos),
            };
            let v: usize = num.parse().map_err(|_| Error::parse(0, format!("bad anchor {tok:?}")))?;
            out.insert(v, sign);
        }
        Ok(out)
    }
}

impl fmt::Display for SignedVertexSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.iter().map(|(v, s)| format!("{v}{}", s.symbol())).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}
