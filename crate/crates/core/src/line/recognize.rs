use crate::error::{Error, Result};
use crate::graph::iso::contains_induced;
use crate::graph::{catalog, Sign, SignedGraph};

use super::bidirected::{signed_line_graph, BiEdge, BidirectedMultigraph};

/// Which forbidden induced subgraph was found.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ForbiddenKind {
    Claw,
    Diamond,
    NegativeTriangle,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Recognition {
    /// `G` is the signed line graph of this simple bidirected graph, with edge `k` of
    /// the result corresponding to vertex `k` of `G`.
    Line(BidirectedMultigraph),
    /// `G` contains an induced subgraph switching equivalent to the forbidden graph,
    /// on these vertices.
    Forbidden { kind: ForbiddenKind, vertices: Vec<usize> },
}

/// Recognizes signed line graphs of simple bidirected graphs among graphs free of
/// the claw, the diamond and the negative triangle up to switching.
pub fn recognize_signed_line(g: &SignedGraph) -> Result<Recognition> {
    let forbidden = [
        (ForbiddenKind::Claw, catalog::claw()),
        (ForbiddenKind::Diamond, catalog::diamond()),
        (ForbiddenKind::NegativeTriangle, catalog::complete(3, Sign::Neg)),
    ];
    for (kind, f) in forbidden {
        if let Some(vertices) = contains_induced(g, &f, true)? {
            return Ok(Recognition::Forbidden { kind, vertices });
        }
    }
    let n = g.order();
    let mut cliques = maximal_cliques(g);
    let mut membership: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (c, clique) in cliques.iter().enumerate() {
        for &v in clique {
            membership[v].push(c);
        }
    }
    for v in 0..n {
        while membership[v].len() < 2 {
            membership[v].push(cliques.len());
            cliques.push(vec![v]);
        }
        if membership[v].len() > 2 {
            return Err(Error::CrossCheck(format!("vertex {v} lies in more than two maximal cliques")));
        }
    }
    // each clique is a vertex of H; σ(c, e₀) = + for the smallest member e₀
    let sigma = |c: usize, x: usize| -> Sign {
        let e0 = cliques[c][0];
        if x == e0 {
            Sign::Pos
        } else {
            Sign::from_i8(g.sign(e0, x)).expect("clique members are adjacent")
        }
    };
    let edges: Vec<BiEdge> = (0..n)
        .map(|v| {
            let (a, b) = (membership[v][0], membership[v][1]);
            BiEdge::new(a, b, sigma(a, v), sigma(b, v))
        })
        .collect();
    let h = BidirectedMultigraph::new(cliques.len(), edges)?;
    if signed_line_graph(&h) != *g {
        return Err(Error::CrossCheck("reconstructed bidirected graph does not reproduce the input".into()));
    }
    Ok(Recognition::Line(h))
}

/// Maximal cliques of the underlying graph with at least two vertices, members sorted.
fn maximal_cliques(g: &SignedGraph) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let p: Vec<usize> = (0..g.order()).collect();
    bron_kerbosch(g, &mut Vec::new(), p, Vec::new(), &mut out);
    out.retain(|c| c.len() >= 2);
    for c in &mut out {
        c.sort_unstable();
    }
    out.sort();
    out
}

fn bron_kerbosch(g: &SignedGraph, r: &mut Vec<usize>, p: Vec<usize>, x: Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if p.is_empty() && x.is_empty() {
        out.push(r.clone());
        return;
    }
    let pivot = p.iter().chain(&x).copied().max_by_key(|&u| p.iter().filter(|&&w| g.is_adjacent(u, w)).count()).unwrap();
    let (mut p, mut x) = (p, x);
    let candidates: Vec<usize> = p.iter().copied().filter(|&v| !g.is_adjacent(pivot, v)).collect();
    for v in candidates {
        let np = p.iter().copied().filter(|&w| g.is_adjacent(v, w)).collect();
        let nx = x.iter().copied().filter(|&w| g.is_adjacent(v, w)).collect();
        r.push(v);
        bron_kerbosch(g, r, np, nx, out);
        r.pop();
        p.retain(|&w| w != v);
        x.push(v);
    }
}
