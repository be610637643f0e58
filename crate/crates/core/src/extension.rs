//! Path, path-clique and clique extensions of a graph from a signed anchor set.
//!
//! Numbering: the vertices of `F` keep their indices, then come `v₀ … v_ℓ`, then the
//! clique vertices.

use crate::error::{Error, Result};
use crate::graph::{Sign, SignedGraph, SignedVertexSubset};

fn check_anchor(f: &SignedGraph, a: &SignedVertexSubset) -> Result<()> {
    if a.is_empty() {
        return Err(Error::EmptyAnchor);
    }
    match a.max_vertex() {
        Some(v) if v >= f.order() => Err(Error::InvalidParams(format!("anchor vertex {v} not in F"))),
        _ => Ok(()),
    }
}

fn join(g: &mut SignedGraph, v: usize, a: &SignedVertexSubset) {
    for (u, s) in a.iter() {
        g.set(u, v, s.to_i8());
    }
}

/// Appends the path `v₀ … v_ℓ`, returning the graph and the index of `v_ℓ`.
fn grow_path(f: &SignedGraph, a: &SignedVertexSubset, ell: usize) -> (SignedGraph, usize) {
    let mut g = f.clone();
    let v0 = g.add_vertex();
    join(&mut g, v0, a);
    let mut last = v0;
    for _ in 0..ell {
        let v = g.add_vertex();
        g.set(last, v, 1);
        last = v;
    }
    (g, last)
}

/// Appends an all-positive clique of size `m` joined to every vertex of `attach` with the
/// given signs.
fn grow_clique(g: &mut SignedGraph, m: usize, attach: &SignedVertexSubset) {
    let start = g.order();
    for _ in 0..m {
        let v = g.add_vertex();
        join(g, v, attach);
        for u in start..v {
            g.set(u, v, 1);
        }
    }
}

/// `(F, A, ℓ)`: a positive path `v₀ … v_ℓ` with `v₀` joined to each anchor with its sign.
pub fn path_extension(f: &SignedGraph, a: &SignedVertexSubset, ell: usize) -> Result<SignedGraph> {
    check_anchor(f, a)?;
    Ok(grow_path(f, a, ell).0)
}

/// `(F, A, ℓ, K_m)`: the path extension plus a positive clique of size `m` joined to `v_ℓ`.
pub fn path_clique_extension(f: &SignedGraph, a: &SignedVertexSubset, ell: usize, m: usize) -> Result<SignedGraph> {
    check_anchor(f, a)?;
    if m == 0 {
        return Err(Error::InvalidParams("clique size must be at least 1".into()));
    }
    let (mut g, last) = grow_path(f, a, ell);
    grow_clique(&mut g, m, &SignedVertexSubset::all_positive([last]));
    Ok(g)
}

/// `(F, A, K_m)`: a positive clique of size `m`, each vertex joined to every anchor.
pub fn clique_extension(f: &SignedGraph, a: &SignedVertexSubset, m: usize) -> Result<SignedGraph> {
    check_anchor(f, a)?;
    if m == 0 {
        return Err(Error::InvalidParams("clique size must be at least 1".into()));
    }
    let mut g = f.clone();
    grow_clique(&mut g, m, a);
    Ok(g)
}

/// Every non-empty anchor set of an `n`-vertex graph, in lexicographic order of the state
/// vector `(s₀, …, s_{n−1})` with `s = 0` absent, `1` positive, `2` negative (signed) or
/// `s ∈ {0, 1}` (unsigned).
pub fn anchor_subsets(n: usize, signed: bool) -> impl Iterator<Item = SignedVertexSubset> {
    let base: u64 = if signed { 3 } else { 2 };
    let total = base.pow(n as u32);
    (1..total).map(move |mut code| {
        let mut digits = vec![0u64; n];
        for d in digits.iter_mut().rev() {
            *d = code % base;
            code /= base;
        }
        SignedVertexSubset::from_pairs(digits.iter().enumerate().filter(|(_, &d)| d != 0).map(|(v, &d)| {
            (v, if d == 1 { Sign::Pos } else { Sign::Neg })
        }))
    })
}

/// The extension family: for every non-empty anchor set, the path extension at `ℓ`, the
/// path-clique extensions at `ℓ₀ = 0..ℓ−1` with clique `K_m`, and the clique extension.
pub fn extension_family(f: &SignedGraph, ell: usize, m: usize, signed: bool) -> Result<Vec<SignedGraph>> {
    if ell == 0 || m == 0 {
        return Err(Error::InvalidParams("extension family needs ℓ ≥ 1 and m ≥ 1".into()));
    }
    let mut out = Vec::new();
    for a in anchor_subsets(f.order(), signed) {
        out.push(path_extension(f, &a, ell)?);
        for l0 in 0..ell {
            out.push(path_clique_extension(f, &a, l0, m)?);
        }
        out.push(clique_extension(f, &a, m)?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::catalog;
    use crate::graph::iso::{is_isomorphic, is_switching_isomorphic};

    fn k1() -> SignedGraph {
        SignedGraph::new(1)
    }

    fn pos(v: &[usize]) -> SignedVertexSubset {
        SignedVertexSubset::all_positive(v.iter().copied())
    }

    #[test]
    fn path_from_single_vertex() {
        for ell in 0..5 {
            assert_eq!(path_extension(&k1(), &pos(&[0]), ell).unwrap(), catalog::path(ell + 1));
        }
        assert_eq!(path_clique_extension(&k1(), &pos(&[0]), 0, 1).unwrap(), catalog::path(2));
    }

    #[test]
    fn g23_extensions_are_e2n() {
        let g23 = crate::graph::parse_compact("0514233545").unwrap();
        for ell in 0..6 {
            let x = path_extension(&g23, &pos(&[1]), ell).unwrap();
            assert!(is_isomorphic(&x, &catalog::e2n(ell + 3)).unwrap());
        }
    }

    #[test]
    fn counts() {
        let a = SignedVertexSubset::parse("0+,2-").unwrap();
        assert_eq!(path_extension(&catalog::diamond(), &a, 3).unwrap().order(), 8);
        assert_eq!(path_clique_extension(&catalog::claw(), &pos(&[0]), 2, 5).unwrap().order(), 12);
        assert_eq!(extension_family(&k1(), 2, 3, false).unwrap().len(), 4);
        assert_eq!(extension_family(&catalog::claw(), 3, 2, false).unwrap().len(), 15 * 5);
        assert_eq!(extension_family(&catalog::claw(), 3, 2, true).unwrap().len(), 80 * 5);
    }

    #[test]
    fn clique_cases() {
        assert_eq!(clique_extension(&k1(), &pos(&[0]), 4).unwrap(), catalog::complete(5, Sign::Pos));
        let nk2 = SignedGraph::from_edges(2, &[(0, 1, Sign::Neg)]).unwrap();
        let a = SignedVertexSubset::parse("0-,1+").unwrap();
        let t = clique_extension(&nk2, &a, 1).unwrap();
        let negs = t.edges().iter().filter(|e| e.2 == Sign::Neg).count();
        assert_eq!((t.edge_count(), negs), (3, 2));
    }

    #[test]
    fn m_one_is_longer_path() {
        let a = SignedVertexSubset::parse("1-,3+").unwrap();
        let f = catalog::diamond();
        assert_eq!(path_clique_extension(&f, &a, 2, 1).unwrap(), path_extension(&f, &a, 3).unwrap());
    }

    #[test]
    fn errors() {
        assert_eq!(path_extension(&k1(), &SignedVertexSubset::new(), 1), Err(Error::EmptyAnchor));
        assert!(clique_extension(&k1(), &pos(&[0]), 0).is_err());
        assert!(path_extension(&k1(), &pos(&[3]), 0).is_err());
        assert!(extension_family(&k1(), 0, 1, false).is_err());
    }

    #[test]
    fn all_negative_anchor_is_switched_positive_anchor() {
        let f = catalog::diamond();
        let a = pos(&[0, 2]);
        let neg = path_clique_extension(&f, &a.negated(), 2, 3).unwrap();
        let switched = path_clique_extension(&f.switched(&[0, 2]), &a, 2, 3).unwrap();
        assert!(is_switching_isomorphic(&neg, &switched).unwrap());
        // switching all of V(F) instead leaves F untouched
        assert!(is_switching_isomorphic(&neg, &path_clique_extension(&f, &a, 2, 3).unwrap()).unwrap());
    }

    #[test]
    fn anchor_order() {
        let v: Vec<String> = anchor_subsets(2, true).map(|a| a.to_string()).collect();
        assert_eq!(v, ["{1+}", "{1-}", "{0+}", "{0+,1+}", "{0+,1-}", "{0-}", "{0-,1+}", "{0-,1-}"]);
    }
}
