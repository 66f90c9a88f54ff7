mod common;

use common::*;
use gmtors::intlat::*;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

fn matrix_strategy() -> impl Strategy<Value = IntMatrix<BigInt>> {
    (1usize..=4, 1usize..=4).prop_flat_map(|(r, c)| {
        proptest::collection::vec(-9i64..=9, r * c)
            .prop_map(move |v| IntMatrix::new(r, c, v.into_iter().map(BigInt::from).collect()).unwrap())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn smith_reconstructs(a in matrix_strategy()) {
        let s = smith_normal_form(&a);
        prop_assert!(verify_smith(&a, &s).is_ok());
        prop_assert!(s.invariant_factors.iter().all(|x| !x.is_negative()));
    }

    #[test]
    fn minors_are_products_of_invariant_factors(a in matrix_strategy()) {
        let s = smith_normal_form(&a);
        let mut prod = BigInt::one();
        for k in 1..=a.rows().min(a.cols()) {
            prod *= &s.invariant_factors[k - 1];
            prop_assert_eq!(minor_gcd(&a, k).unwrap(), prod.clone());
        }
    }

    #[test]
    fn minors_are_unimodular_invariants(a in matrix_strategy(), seed in any::<u64>()) {
        let mut r = rng(seed);
        let p = random_unimodular(&mut r, a.rows());
        let q = random_unimodular(&mut r, a.cols());
        let paq = p.mul(&a).unwrap().mul(&q).unwrap();
        for k in 1..=a.rows().min(a.cols()) {
            prop_assert_eq!(minor_gcd(&paq, k).unwrap(), minor_gcd(&a, k).unwrap());
        }
    }

    #[test]
    fn cauchy_binet_oracle(seed in any::<u64>()) {
        let mut r = rng(seed);
        let a = random_matrix(&mut r, 3, 4, 9);
        let b = random_matrix(&mut r, 4, 3, 9);
        prop_assert_eq!(a.mul(&b).unwrap().det().unwrap(), cauchy_binet(&a, &b));
    }

    #[test]
    fn saturation_chain(a in matrix_strategy(), p in prop::sample::select(vec![2u64, 3, 5])) {
        let l = IntegerLattice::from_columns(&a);
        let sat = l.saturation();
        let psat = l.p_saturation(p);
        prop_assert_eq!(sat.saturation(), sat.clone());
        prop_assert!(psat.is_p_full(p));
        prop_assert!(l.is_sublattice_of(&psat));
        prop_assert!(psat.is_sublattice_of(&sat));
        prop_assert_eq!(psat.rank(), l.rank());
    }

    #[test]
    fn minima_product_bounded_by_index(a in matrix_strategy()) {
        let l = IntegerLattice::from_columns(&a);
        prop_assume!(l.is_full_rank());
        let m = successive_minima(&l, &MinimaConfig::default()).unwrap();
        prop_assert!(m.product() <= l.index().unwrap());
        prop_assert!(m.minima.windows(2).all(|w| w[0] <= w[1]));
        for w in &m.witnesses {
            prop_assert!(l.contains(w));
        }
    }

    #[test]
    fn reduce_is_canonical(a in matrix_strategy(), v in proptest::collection::vec(-20i64..=20, 4)) {
        let l = IntegerLattice::from_columns(&a);
        let n = l.ambient_dim();
        let v: Vec<BigInt> = v[..n].iter().map(|&x| x.into()).collect();
        let rv = l.reduce(&v);
        let diff: Vec<BigInt> = v.iter().zip(&rv).map(|(x, y)| x - y).collect();
        prop_assert!(l.contains(&diff));
        // shifting by a lattice vector does not change the representative
        let shifted: Vec<BigInt> = v.iter().zip(l.basis().first().cloned().unwrap_or(vec![BigInt::zero(); n]))
            .map(|(x, b)| x + b * 3).collect();
        prop_assert_eq!(l.reduce(&shifted), rv);
    }
}

#[test]
fn kernel_is_saturated_and_annihilated() {
    let mut r = rng(7);
    for _ in 0..100 {
        let a = random_matrix(&mut r, 2, 4, 5);
        let k = kernel_basis(&a);
        assert!(k.is_primitive());
        for v in k.basis() {
            assert!(a.mul_vec(v).iter().all(|x| x.is_zero()));
        }
        assert_eq!(k.rank() + smith_normal_form(&a).rank(), 4);
    }
}
