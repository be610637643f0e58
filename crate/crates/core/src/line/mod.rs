//! Line graphs, generalized line graphs, bidirected multigraphs, signed line graphs,
//! signed line graph recognition and root-system representations.

pub mod bidirected;
pub mod recognize;
pub mod roots;

pub use bidirected::{edge_vectors_and_rank, proper_edge_coloring, signed_line_graph, BiEdge, BidirectedMultigraph};
pub use recognize::{recognize_signed_line, ForbiddenKind, Recognition};
pub use roots::{root_representation, RootAssignment, RootSystem};

use crate::error::{Error, Result};
use crate::graph::SignedGraph;

/// Edges of the underlying simple graph in lexicographic order; vertex `k` of the line
/// graph is edge `k` of this list.
pub fn edge_list(h: &SignedGraph) -> Vec<(usize, usize)> {
    h.edges().into_iter().map(|(i, j, _)| (i, j)).collect()
}

/// Line graph of the underlying graph of `h` (all-positive).
pub fn line_graph(h: &SignedGraph) -> SignedGraph {
    let edges = edge_list(h);
    let m = edges.len();
    let mut g = SignedGraph::new(m);
    for a in 0..m {
        for b in a + 1..m {
            let (p, q) = (edges[a], edges[b]);
            if p.0 == q.0 || p.0 == q.1 || p.1 == q.0 || p.1 == q.1 {
                g.set(a, b, 1);
            }
        }
    }
    g
}

/// `L(H; a₁, …, a_n)`: the line graph followed by a cocktail party graph on `2aᵢ`
/// vertices for each vertex `vᵢ`, each joined to every line-graph vertex containing `vᵢ`.
pub fn generalized_line_graph(h: &SignedGraph, a: &[usize]) -> Result<SignedGraph> {
    if a.len() != h.order() {
        return Err(Error::LengthMismatch { expected: h.order(), got: a.len() });
    }
    let edges = edge_list(h);
    let mut g = line_graph(h);
    for (v, &ai) in a.iter().enumerate() {
        let start = g.order();
        for _ in 0..2 * ai {
            g.add_vertex();
        }
        for x in start..start + 2 * ai {
            for y in x + 1..start + 2 * ai {
                // partner of x is x ^ 1 relative to start
                if (x - start) / 2 != (y - start) / 2 {
                    g.set(x, y, 1);
                }
            }
            for (k, &(p, q)) in edges.iter().enumerate() {
                if p == v || q == v {
                    g.set(x, k, 1);
                }
            }
        }
    }
    Ok(g)
}

/// Vertex-edge incidence matrix `B` (rows = vertices, columns = edges of [`edge_list`]).
pub fn incidence_matrix(h: &SignedGraph) -> Vec<Vec<i64>> {
    let edges = edge_list(h);
    let mut b = vec![vec![0; edges.len()]; h.order()];
    for (k, &(p, q)) in edges.iter().enumerate() {
        b[p][k] = 1;
        b[q][k] = 1;
    }
    b
}
