//! Line graphs, generalized line graphs, bidirected graphs with their signed line
//! graphs, recognition, and proper edge colourings.

use signed_spectra::exact::{count_eigs_below, rational::int};
use signed_spectra::graph::{catalog, SignedGraph};
use signed_spectra::line::{
    edge_vectors_and_rank, generalized_line_graph, line_graph, proper_edge_coloring, recognize_signed_line,
    signed_line_graph, BiEdge, BidirectedMultigraph, Recognition,
};

fn main() -> signed_spectra::Result<()> {
    let h = SignedGraph::unsigned(4, &[(0, 2), (2, 3), (0, 3), (3, 1), (1, 0)])?;
    let l = generalized_line_graph(&h, &[2, 1, 0, 3])?;
    println!("L(K4 - e; 2,1,0,3): {} vertices, eigenvalues below -2: {}", l.order(), count_eigs_below(&l.adjacency(), &int(-2)));
    println!("L(K4) has {} vertices", line_graph(&catalog::complete(4, signed_spectra::graph::Sign::Pos)).order());

    let b = BidirectedMultigraph::parse("n=4\ne 0 1 - +\ne 1 3 + +\ne 0 2 - +\ne 2 3 - +\ne 0 3 - -\n")?;
    let g = signed_line_graph(&b);
    println!("signed line graph of the bidirected graph:\n{g}");
    if let Recognition::Forbidden { kind, vertices } = recognize_signed_line(&g)? {
        println!("outside the reconstructible class: {kind:?} on {vertices:?}");
    }

    let mut k33 = BidirectedMultigraph::all_positive(&SignedGraph::unsigned(
        6,
        &[(0, 3), (0, 4), (0, 5), (1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5)],
    )?);
    k33 = BidirectedMultigraph::new(
        6,
        k33.edges().iter().enumerate().map(|(i, e)| if i % 4 == 0 { BiEdge::new(e.u, e.v, e.su.flip(), e.sv) } else { *e }).collect(),
    )?;
    let lk = signed_line_graph(&k33);
    if let Recognition::Line(r) = recognize_signed_line(&lk)? {
        println!("signed L(K_(3,3)) reconstructed, roundtrip equal: {}", signed_line_graph(&r) == lk);
    }
    match recognize_signed_line(&catalog::claw())? {
        Recognition::Forbidden { kind, vertices } => println!("claw rejected: {kind:?} on {vertices:?}"),
        Recognition::Line(_) => unreachable!(),
    }

    for p in 2..=4 {
        let k = BidirectedMultigraph::k_pp(p);
        let (_, rank) = edge_vectors_and_rank(&k);
        let colors = proper_edge_coloring(&k, p, 1 << 20)?.is_some();
        println!("K_({p},{p}): rank {rank}, proper {p}-edge-colouring: {colors}");
    }
    Ok(())
}
