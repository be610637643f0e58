mod common;

use proptest::prelude::*;
use rand::seq::SliceRandom;
use signed_spectra::exact::char_poly;
use signed_spectra::extension::{anchor_subsets, clique_extension, extension_family, path_clique_extension, path_extension};
use signed_spectra::graph::iso::{canonical_form, contains_induced, is_isomorphic, is_switching_isomorphic, switching_normal_form};
use signed_spectra::graph::{catalog, SignedGraph, SignedVertexSubset};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn switching_preserves_characteristic_polynomial(seed in any::<u64>(), n in 1usize..10) {
        let mut r = common::rng(seed);
        let g = common::random_signed(&mut r, n, 0.5);
        let s: Vec<usize> = (0..n).filter(|_| rand::Rng::gen_bool(&mut r, 0.5)).collect();
        let h = g.switched(&s);
        prop_assert_eq!(char_poly(&g.adjacency()), char_poly(&h.adjacency()));
        prop_assert!(is_switching_isomorphic(&g, &h).unwrap());
    }

    #[test]
    fn normal_form_is_a_switching(seed in any::<u64>(), n in 1usize..10) {
        let mut r = common::rng(seed);
        let g = common::random_signed(&mut r, n, 0.5);
        let (nf, s) = switching_normal_form(&g);
        prop_assert_eq!(g.switched(&s), nf.clone());
        let (nf2, _) = switching_normal_form(&nf.switched(&[0]));
        prop_assert_eq!(nf2, nf);
    }

    #[test]
    fn canonical_form_ignores_labels(seed in any::<u64>(), n in 1usize..9) {
        let mut r = common::rng(seed);
        let g = common::random_signed(&mut r, n, 0.5);
        let mut perm: Vec<usize> = (0..n).collect();
        perm.shuffle(&mut r);
        let h = g.permuted(&perm);
        prop_assert!(is_isomorphic(&g, &h).unwrap());
        prop_assert_eq!(canonical_form(&g, 1 << 16).unwrap().0, canonical_form(&h, 1 << 16).unwrap().0);
    }

    #[test]
    fn induced_subgraphs_are_found(seed in any::<u64>(), n in 2usize..9) {
        let mut r = common::rng(seed);
        let g = common::random_signed(&mut r, n, 0.5);
        let k = rand::Rng::gen_range(&mut r, 1..=n);
        let mut idx: Vec<usize> = (0..n).collect();
        idx.shuffle(&mut r);
        idx.truncate(k);
        let f = g.induced(&idx);
        let hit = contains_induced(&g, &f, false).unwrap().expect("induced copy");
        prop_assert_eq!(g.induced(&hit), f);
    }

    #[test]
    fn extension_sizes(seed in any::<u64>(), n in 1usize..6, ell in 0usize..5, m in 1usize..5) {
        let mut r = common::rng(seed);
        let f = common::random_signed(&mut r, n, 0.5);
        let anchors: Vec<SignedVertexSubset> = anchor_subsets(n, true).collect();
        let a = anchors.choose(&mut r).unwrap();
        let p = path_extension(&f, a, ell).unwrap();
        prop_assert_eq!(p.order(), n + ell + 1);
        prop_assert_eq!(p.edge_count(), f.edge_count() + a.len() + ell);
        let pc = path_clique_extension(&f, a, ell, m).unwrap();
        prop_assert_eq!(pc.order(), n + ell + 1 + m);
        let c = clique_extension(&f, a, m).unwrap();
        prop_assert_eq!(c.order(), n + m);
        prop_assert_eq!(c.edge_count(), f.edge_count() + m * a.len() + m * (m - 1) / 2);
        for (i, s) in a.iter() {
            prop_assert_eq!(p.sign(i, n), s.to_i8());
        }
    }
}

#[test]
fn anchor_counts() {
    assert_eq!(anchor_subsets(4, false).count(), 15);
    assert_eq!(anchor_subsets(4, true).count(), 80);
}

#[test]
fn claw_family_sizes() {
    let claw = catalog::claw();
    for ell in 1..4 {
        assert_eq!(extension_family(&claw, ell, 2, false).unwrap().len(), 15 * (ell + 2));
        assert_eq!(extension_family(&claw, ell, 2, true).unwrap().len(), 80 * (ell + 2));
    }
}

#[test]
fn empty_anchor_is_rejected() {
    assert!(path_extension(&catalog::claw(), &SignedVertexSubset::new(), 2).is_err());
    assert!(clique_extension(&SignedGraph::new(0), &SignedVertexSubset::new(), 2).is_err());
}
