use std::fmt;

use num_bigint::BigInt;

use crate::coloring;
use crate::error::{Error, Result};
use crate::exact::matrix::bareiss_rank;
use crate::graph::{Sign, SignedGraph};

/// An edge `uv` with incidence signs `σ(u, e) = su` and `σ(v, e) = sv`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct BiEdge {
    pub u: usize,
    pub v: usize,
    pub su: Sign,
    pub sv: Sign,
}

impl BiEdge {
    pub fn new(u: usize, v: usize, su: Sign, sv: Sign) -> Self {
        BiEdge { u, v, su, sv }
    }

    /// Incidence sign at `w`, if `w` is an endpoint.
    pub fn sign_at(&self, w: usize) -> Option<Sign> {
        if w == self.u {
            Some(self.su)
        } else if w == self.v {
            Some(self.sv)
        } else {
            None
        }
    }

    fn ends(&self) -> (usize, usize) {
        (self.u.min(self.v), self.u.max(self.v))
    }
}

/// A bidirected multigraph: parallel edges allowed in pairs obeying the sign rule,
/// no loops.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BidirectedMultigraph {
    n: usize,
    edges: Vec<BiEdge>,
}

impl BidirectedMultigraph {
    pub fn new(n: usize, edges: Vec<BiEdge>) -> Result<Self> {
        let h = BidirectedMultigraph { n, edges };
        h.validate()?;
        Ok(h)
    }

    fn validate(&self) -> Result<()> {
        for (k, e) in self.edges.iter().enumerate() {
            if e.u >= self.n || e.v >= self.n {
                return Err(Error::InvalidParams(format!("edge {k} has an endpoint outside 0..{}", self.n)));
            }
            if e.u == e.v {
                return Err(Error::InvalidParams(format!("edge {k} is a loop")));
            }
        }
        for a in 0..self.edges.len() {
            let mut parallel = 0;
            for b in 0..self.edges.len() {
                if a == b || self.edges[a].ends() != self.edges[b].ends() {
                    continue;
                }
                parallel += 1;
                let (x, y) = self.edges[a].ends();
                let (ea, eb) = (&self.edges[a], &self.edges[b]);
                let agree_x = ea.sign_at(x) == eb.sign_at(x);
                let agree_y = ea.sign_at(y) == eb.sign_at(y);
                if agree_x == agree_y {
                    return Err(Error::InvalidParams(format!(
                        "parallel edges {a} and {b} must agree at exactly one endpoint"
                    )));
                }
            }
            if parallel > 1 {
                return Err(Error::InvalidParams(format!("more than two edges between {:?}", self.edges[a].ends())));
            }
        }
        Ok(())
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[BiEdge] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// All-positive bidirected graph on a simple graph.
    pub fn all_positive(h: &SignedGraph) -> Self {
        let edges = h.edges().into_iter().map(|(u, v, _)| BiEdge::new(u, v, Sign::Pos, Sign::Pos)).collect();
        BidirectedMultigraph { n: h.order(), edges }
    }

    /// `K_{p,p}` with all-positive incidences; parts `0..p` and `p..2p`, edges in
    /// lexicographic order.
    pub fn k_pp(p: usize) -> Self {
        let mut edges = Vec::with_capacity(p * p);
        for i in 0..p {
            for j in 0..p {
                edges.push(BiEdge::new(i, p + j, Sign::Pos, Sign::Pos));
            }
        }
        BidirectedMultigraph { n: 2 * p, edges }
    }

    pub fn is_connected(&self) -> bool {
        let mut g = SignedGraph::new(self.n);
        for e in &self.edges {
            g.set(e.u, e.v, 1);
        }
        g.is_connected()
    }

    /// The vertex both edges share when they intersect in exactly one vertex.
    pub fn intersection(&self, a: usize, b: usize) -> Option<usize> {
        let (ea, eb) = (&self.edges[a], &self.edges[b]);
        let shared: Vec<usize> = [ea.u, ea.v].into_iter().filter(|&w| w == eb.u || w == eb.v).collect();
        (shared.len() == 1).then(|| shared[0])
    }

    /// Parses `n=<int>` followed by lines `e u v su sv`; `#` starts a comment.
    pub fn parse(text: &str) -> Result<Self> {
        let mut n = None;
        let mut edges = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            if let Some(rest) = line.strip_prefix("n=") {
                n = Some(rest.trim().parse::<usize>().map_err(|e| Error::parse(i + 1, e.to_string()))?);
                continue;
            }
            let toks: Vec<&str> = line.split_whitespace().collect();
            if toks.len() != 5 || toks[0] != "e" {
                return Err(Error::parse(i + 1, format!("expected `e u v su sv`, got `{line}`")));
            }
            let idx = |t: &str| t.parse::<usize>().map_err(|e| Error::parse(i + 1, e.to_string()));
            let sg = |t: &str| match t {
                "+" => Ok(Sign::Pos),
                "-" => Ok(Sign::Neg),
                _ => Err(Error::parse(i + 1, format!("bad incidence sign `{t}`"))),
            };
            edges.push(BiEdge::new(idx(toks[1])?, idx(toks[2])?, sg(toks[3])?, sg(toks[4])?));
        }
        let n = n.ok_or_else(|| Error::parse(0, "missing `n=` header"))?;
        Self::new(n, edges)
    }
}

impl fmt::Display for BidirectedMultigraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "n={}", self.n)?;
        for e in &self.edges {
            writeln!(f, "e {} {} {} {}", e.u, e.v, e.su.symbol(), e.sv.symbol())?;
        }
        Ok(())
    }
}

/// Signed line graph: vertex `k` is edge `k`; two edges meeting in exactly one vertex
/// `w` are joined with sign `σ(w, e₁)σ(w, e₂)`.
pub fn signed_line_graph(h: &BidirectedMultigraph) -> SignedGraph {
    let m = h.edge_count();
    let mut g = SignedGraph::new(m);
    for a in 0..m {
        for b in a + 1..m {
            if let Some(w) = h.intersection(a, b) {
                let s = h.edges[a].sign_at(w).unwrap() * h.edges[b].sign_at(w).unwrap();
                g.set(a, b, s.to_i8());
            }
        }
    }
    g
}

/// The vectors `σ(u, e)e_u + σ(v, e)e_v` and the rank of the set.
pub fn edge_vectors_and_rank(h: &BidirectedMultigraph) -> (Vec<Vec<i64>>, usize) {
    let vectors: Vec<Vec<i64>> = h
        .edges
        .iter()
        .map(|e| {
            let mut v = vec![0; h.n];
            v[e.u] = e.su.to_i8() as i64;
            v[e.v] = e.sv.to_i8() as i64;
            v
        })
        .collect();
    let big: Vec<Vec<BigInt>> = vectors.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
    let rank = bareiss_rank(big);
    (vectors, rank)
}

/// A proper `p`-edge-colouring (colour per edge, in `0..p`), or `None` if none exists.
pub fn proper_edge_coloring(h: &BidirectedMultigraph, p: usize, budget: u64) -> Result<Option<Vec<usize>>> {
    if p == 0 {
        return Err(Error::InvalidParams("p must be at least 1".into()));
    }
    let m = h.edge_count();
    let (mut same, mut diff) = (Vec::new(), Vec::new());
    for a in 0..m {
        for b in a + 1..m {
            if let Some(w) = h.intersection(a, b) {
                if h.edges[a].sign_at(w) == h.edges[b].sign_at(w) {
                    diff.push((a, b));
                } else {
                    same.push((a, b));
                }
            }
        }
    }
    let Ok(q) = coloring::quotient(m, &same, &diff) else {
        return Ok(None);
    };
    Ok(coloring::k_coloring(&q.conflicts, p, budget)?.map(|c| q.class_of.iter().map(|&k| c[k]).collect()))
}

/// Checks a colouring against the definition.
pub fn is_proper_edge_coloring(h: &BidirectedMultigraph, colors: &[usize]) -> bool {
    let m = h.edge_count();
    colors.len() == m
        && (0..m).all(|a| {
            (a + 1..m).all(|b| match h.intersection(a, b) {
                Some(w) => (h.edges[a].sign_at(w) == h.edges[b].sign_at(w)) == (colors[a] != colors[b]),
                None => true,
            })
        })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::catalog;
    use Sign::{Neg as N, Pos as P};

    /// The four-vertex bidirected graph drawn with its five-vertex signed line graph.
    fn drawn_bidirected() -> BidirectedMultigraph {
        // edges v1v2, v2v4, v1v3, v3v4, v1v4 with v_i -> i-1
        BidirectedMultigraph::new(
            4,
            vec![
                BiEdge::new(0, 1, N, P),
                BiEdge::new(1, 3, P, P),
                BiEdge::new(0, 2, N, P),
                BiEdge::new(2, 3, N, P),
                BiEdge::new(0, 3, N, N),
            ],
        )
        .unwrap()
    }

    /// The six-vertex multigraph drawn with a proper 3-edge-colouring.
    fn drawn_multigraph() -> (BidirectedMultigraph, Vec<usize>) {
        let h = BidirectedMultigraph::new(
            6,
            vec![
                BiEdge::new(0, 1, P, P),
                BiEdge::new(0, 1, N, P),
                BiEdge::new(1, 2, P, P),
                BiEdge::new(1, 2, P, N),
                BiEdge::new(2, 3, N, P),
                BiEdge::new(3, 4, N, N),
                BiEdge::new(3, 4, P, N),
                BiEdge::new(4, 5, N, N),
                BiEdge::new(4, 5, N, P),
            ],
        )
        .unwrap();
        (h, vec![0, 0, 1, 2, 1, 1, 2, 0, 0])
    }

    #[test]
    fn drawn_signed_line_graph() {
        let g = signed_line_graph(&drawn_bidirected());
        let expect = SignedGraph::from_edges(
            5,
            &[(0, 1, P), (1, 3, P), (3, 2, N), (2, 0, P), (0, 4, P), (4, 3, N), (2, 4, P), (4, 1, N)],
        )
        .unwrap();
        assert_eq!(g, expect);
    }

    #[test]
    fn drawn_coloring_is_proper() {
        let (h, c) = drawn_multigraph();
        assert!(is_proper_edge_coloring(&h, &c));
        let found = proper_edge_coloring(&h, 3, 1 << 20).unwrap().unwrap();
        assert!(is_proper_edge_coloring(&h, &found));
        assert!(proper_edge_coloring(&h, 2, 1 << 20).unwrap().is_none());
    }

    #[test]
    fn all_positive_gives_line_graph() {
        let h = catalog::complete(4, P);
        assert_eq!(signed_line_graph(&BidirectedMultigraph::all_positive(&h)), super::super::line_graph(&h));
        let single = BidirectedMultigraph::new(2, vec![BiEdge::new(0, 1, N, P)]).unwrap();
        assert_eq!(signed_line_graph(&single), SignedGraph::new(1));
        assert_eq!(proper_edge_coloring(&single, 1, 10).unwrap(), Some(vec![0]));
    }

    #[test]
    fn validation() {
        assert!(BidirectedMultigraph::new(2, vec![BiEdge::new(0, 0, P, P)]).is_err());
        assert!(BidirectedMultigraph::new(2, vec![BiEdge::new(0, 2, P, P)]).is_err());
        let bad = vec![BiEdge::new(0, 1, P, P), BiEdge::new(1, 0, N, N)];
        assert!(BidirectedMultigraph::new(2, bad).is_err());
        let ok = vec![BiEdge::new(0, 1, P, P), BiEdge::new(1, 0, P, N)];
        assert!(BidirectedMultigraph::new(2, ok.clone()).is_ok());
        let mut three = ok;
        three.push(BiEdge::new(0, 1, N, P));
        assert!(BidirectedMultigraph::new(2, three).is_err());
    }

    #[test]
    fn ranks() {
        assert_eq!(edge_vectors_and_rank(&BidirectedMultigraph::k_pp(3)).1, 5);
        let tree = BidirectedMultigraph::new(
            5,
            vec![BiEdge::new(0, 1, N, P), BiEdge::new(1, 2, N, N), BiEdge::new(1, 3, P, N), BiEdge::new(3, 4, P, P)],
        )
        .unwrap();
        assert_eq!(edge_vectors_and_rank(&tree).1, 4);
        let (h, _) = drawn_multigraph();
        assert_eq!(edge_vectors_and_rank(&h).1, 6);
    }

    #[test]
    fn kpp_colorable() {
        for p in 1..5 {
            let h = BidirectedMultigraph::k_pp(p);
            let c = proper_edge_coloring(&h, p, 1 << 22).unwrap().unwrap();
            assert!(is_proper_edge_coloring(&h, &c));
            if p > 1 {
                assert!(proper_edge_coloring(&h, p - 1, 1 << 22).unwrap().is_none());
            }
        }
    }

    #[test]
    fn text_roundtrip() {
        let (h, _) = drawn_multigraph();
        assert_eq!(BidirectedMultigraph::parse(&h.to_string()).unwrap(), h);
        assert!(BidirectedMultigraph::parse("e 0 1 + +").is_err());
        assert!(BidirectedMultigraph::parse("n=2\ne 0 1 + x").is_err());
    }
}
