mod common;

use proptest::prelude::*;
use signed_spectra::exact::rational::{int, rat};
use signed_spectra::exact::{AlgebraicNumber, Spectrum};
use signed_spectra::kp::{is_valid_coloring, kp_search, kpp_witness, signed_chromatic, verify_kp_witness};
use signed_spectra::reduce::{find_small_witness, verify_witness, IntSymMatrix};
use signed_spectra::rowing::{self, RowingSpec};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(60))]

    #[test]
    fn reducer_witnesses_replay(seed in any::<u64>(), n in 2usize..11, density in 0.2f64..0.9) {
        let mut r = common::rng(seed);
        let rows = common::random_pm_matrix(&mut r, n, density);
        let a = IntSymMatrix::from_rows(&rows).unwrap();
        let s = Spectrum::new(&a.to_rational());
        let has = s.count_below(&int(-2)) > 0;
        match find_small_witness(&a, &int(2), 10).unwrap() {
            Some(w) => {
                prop_assert!(has);
                prop_assert!(w.indices.len() <= 10);
                prop_assert!(verify_witness(&a, &w.indices, &int(2)));
            }
            None => prop_assert!(!has),
        }
    }

    #[test]
    fn reducer_handles_large_entries(seed in any::<u64>(), n in 2usize..9) {
        let mut r = common::rng(seed);
        let mut rows = common::random_pm_matrix(&mut r, n, 0.5);
        rows[0][1] = 2;
        rows[1][0] = 2;
        let a = IntSymMatrix::from_rows(&rows).unwrap();
        if let Some(w) = find_small_witness(&a, &int(2), 10).unwrap() {
            prop_assert!(verify_witness(&a, &w.indices, &int(2)));
        } else {
            prop_assert_eq!(Spectrum::new(&a.to_rational()).count_below(&int(-2)), 0);
        }
    }

    #[test]
    fn rowing_graphs_respect_the_floor(seed in any::<u64>()) {
        let mut r = common::rng(seed);
        let spec = common::random_spec(&mut r, 6, 9);
        let s = Spectrum::new(&spec.graph().adjacency());
        prop_assert_eq!(s.count_below_algebraic(&rowing::rowing_floor()).unwrap(), 0);
        let (lo, hi) = rowing::rowing_eig(&spec, &rat(1, 1000)).unwrap();
        prop_assert!(lo <= hi);
    }

    #[test]
    fn zero_insertion_keeps_an_upper_bound(seed in any::<u64>()) {
        let mut r = common::rng(seed);
        let mut spec = common::random_spec(&mut r, 5, 6);
        if spec.0.is_empty() {
            spec.0.push(3);
        }
        let k = rand::Rng::gen_range(&mut r, 1..=spec.0.len());
        let bound = rowing::zero_insertion_bound(&spec, k).unwrap();
        let mut longer = spec.0.clone();
        longer.insert(k - 1, 0);
        let (lo, _) = rowing::rowing_eig(&RowingSpec(longer), &rat(1, 1_000_000)).unwrap();
        prop_assert!(lo <= bound);
    }

    #[test]
    fn chromatic_colourings_are_valid(seed in any::<u64>(), n in 1usize..9) {
        let mut r = common::rng(seed);
        let g = common::random_signed(&mut r, n, 0.4);
        if let signed_spectra::kp::SignedChromatic::Finite { colors, coloring } = signed_chromatic(&g, 1 << 20).unwrap() {
            prop_assert!(is_valid_coloring(&g, &coloring));
            prop_assert_eq!(coloring.iter().copied().max().map_or(0, |c| c + 1), colors);
        }
    }
}

#[test]
fn kpp_witnesses_replay() {
    let two = AlgebraicNumber::from_int(2);
    for p in 2..=5 {
        let w = kpp_witness(p).unwrap();
        assert_eq!(w.multiplicity, (p - 1) * (p - 1));
        assert_eq!(w.ratio, rat((p * p) as i64, ((p - 1) * (p - 1)) as i64));
        assert!(verify_kp_witness(&w, p, &two).unwrap());
    }
}

#[test]
fn kp_search_small_cases() {
    let two = AlgebraicNumber::from_int(2);
    let w = kp_search(2, &two, 6).unwrap().unwrap();
    assert!(verify_kp_witness(&w, 2, &two).unwrap());
    assert!(w.ratio <= rat(4, 1));
}

#[test]
fn least_a1_is_minimal() {
    let lp = signed_spectra::exact::constants::lambda_prime();
    let a1 = rowing::find_a1_below_lambda_prime().unwrap();
    assert!(rowing::below(&RowingSpec(vec![a1]), &lp).unwrap());
    for a in 0..a1 {
        assert!(!rowing::below(&RowingSpec(vec![a]), &lp).unwrap());
    }
}
