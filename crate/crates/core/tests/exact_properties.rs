mod common;

use nalgebra::DMatrix;
use num_bigint::BigInt;
use num_traits::Zero;
use proptest::prelude::*;
use signed_spectra::exact::charpoly::char_poly_int;
use signed_spectra::exact::inertia::inertia_i64;
use signed_spectra::exact::matrix::bareiss_det;
use signed_spectra::exact::rational::{int, rat};
use signed_spectra::exact::sturm::SturmChain;
use signed_spectra::exact::{count_eigs_below, AlgebraicNumber, IntPolynomial, Spectrum, SymRatMatrix};

fn sym_matrix(max_n: usize, range: i64) -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1..=max_n).prop_flat_map(move |n| {
        proptest::collection::vec(-range..=range, n * (n + 1) / 2).prop_map(move |upper| {
            let mut a = vec![vec![0i64; n]; n];
            let mut k = 0;
            for i in 0..n {
                for j in i..n {
                    a[i][j] = upper[k];
                    a[j][i] = upper[k];
                    k += 1;
                }
            }
            a
        })
    })
}

fn square_matrix(max_n: usize, range: i64) -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1..=max_n).prop_flat_map(move |n| proptest::collection::vec(proptest::collection::vec(-range..=range, n), n))
}

fn big(a: &[Vec<i64>]) -> Vec<Vec<BigInt>> {
    a.iter().map(|r| r.iter().map(|&v| BigInt::from(v)).collect()).collect()
}

/// `p(A)` by Horner's rule.
fn eval_at_matrix(p: &IntPolynomial, a: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    let n = a.len();
    let mut acc = vec![vec![BigInt::zero(); n]; n];
    for c in p.coeffs().iter().rev() {
        let mut next = vec![vec![BigInt::zero(); n]; n];
        for i in 0..n {
            for j in 0..n {
                let mut s = BigInt::zero();
                for t in 0..n {
                    s += &acc[i][t] * &a[t][j];
                }
                next[i][j] = s;
            }
            next[i][i] += c;
        }
        acc = next;
    }
    acc
}

fn float_eigs(a: &[Vec<i64>]) -> Vec<f64> {
    let n = a.len();
    let m = DMatrix::from_fn(n, n, |i, j| a[i][j] as f64);
    m.symmetric_eigenvalues().iter().copied().collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn cayley_hamilton(a in square_matrix(6, 4)) {
        let p = char_poly_int(&big(&a));
        prop_assert_eq!(p.deg(), a.len());
        prop_assert!(eval_at_matrix(&p, &big(&a)).iter().flatten().all(|x| x.is_zero()));
    }

    #[test]
    fn bareiss_matches_cofactor_expansion(a in square_matrix(6, 5)) {
        prop_assert_eq!(bareiss_det(big(&a)), BigInt::from(common::cofactor_det(&a)));
    }

    #[test]
    fn rational_determinant_matches_cofactor(a in sym_matrix(6, 5)) {
        let m = SymRatMatrix::from_int_rows(&a).unwrap();
        prop_assert_eq!(m.determinant(), int(common::cofactor_det(&a) as i64));
    }

    #[test]
    fn sturm_counts_match_floating_eigenvalues(a in sym_matrix(7, 3), t2 in -15i64..15) {
        // half-integers are never eigenvalues of integer matrices
        let t = rat(2 * t2 + 1, 2);
        let tf = (2 * t2 + 1) as f64 / 2.0;
        let eigs = float_eigs(&a);
        prop_assume!(eigs.iter().all(|e| (e - tf).abs() > 1e-6));
        let expected = eigs.iter().filter(|&&e| e < tf).count();
        let m = SymRatMatrix::from_int_rows(&a).unwrap();
        prop_assert_eq!(count_eigs_below(&m, &t), expected);
    }

    #[test]
    fn inertia_agrees_with_sturm(a in sym_matrix(8, 2), t in -4i64..4) {
        let n = a.len();
        let shifted: Vec<i64> = (0..n * n).map(|k| a[k / n][k % n] - if k / n == k % n { t } else { 0 }).collect();
        let i = inertia_i64(n, &shifted);
        let s = Spectrum::new(&SymRatMatrix::from_int_rows(&a).unwrap());
        prop_assert_eq!(i.negative, s.count_below(&int(t)));
        prop_assert_eq!(i.zero, s.multiplicity(&int(t)));
        prop_assert_eq!(i.negative + i.zero + i.positive, n);
    }

    #[test]
    fn sturm_real_roots_of_products(roots in proptest::collection::vec(-6i64..6, 1..6)) {
        let mut p = IntPolynomial::from_i64(&[1]);
        for &r in &roots {
            p = &p * &IntPolynomial::from_i64(&[-r, 1]);
        }
        let mut distinct = roots.clone();
        distinct.sort();
        distinct.dedup();
        prop_assert_eq!(SturmChain::new(&p).real_root_count(), distinct.len());
    }

    #[test]
    fn square_roots_compare_like_floats(a in 1i64..200, b in 1i64..200) {
        prop_assume!(a != b);
        let (x, y) = (AlgebraicNumber::sqrt(&int(a)).unwrap(), AlgebraicNumber::sqrt(&int(b)).unwrap());
        prop_assert_eq!(x.try_cmp(&y).unwrap(), a.cmp(&b));
    }
}

#[test]
fn plastic_number_has_one_real_root() {
    assert_eq!(SturmChain::new(&IntPolynomial::from_i64(&[-1, -1, 0, 1])).real_root_count(), 1);
}
