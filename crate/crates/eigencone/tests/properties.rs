//! Property tests over randomly drawn partitions, weights and cone points.

use proptest::prelude::*;

use eigencone::cone::{is_member, klyachko_value, enumerate_facets, DEFAULT_BUDGET};
use eigencone::ratlinalg::{primitive, RatMatrix, Rational};
use eigencone::schubert::{lr_multiply, pieri_multiply, BoxPartition, SchubertIndex};
use eigencone::weights::{dual_weight, kappa, weight_of_kappa, DominantWeight, KappaTuple};

fn box_partition(rows: u32, cols: u32) -> impl Strategy<Value = BoxPartition> {
    proptest::collection::vec(0..=cols, rows as usize).prop_map(move |mut parts| {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        BoxPartition::new(rows, cols, &parts).expect("sorted parts fit the box")
    })
}

fn dominant_weight(n: u32, cap: i64) -> impl Strategy<Value = DominantWeight> {
    proptest::collection::vec(0..=cap, n as usize).prop_map(|mut entries| {
        entries.sort_unstable_by(|a, b| b.cmp(a));
        DominantWeight::new(&entries).expect("sorted entries are dominant")
    })
}

fn schubert_index(n: u32, r: u32) -> impl Strategy<Value = SchubertIndex> {
    proptest::sample::subsequence((1..=n).collect::<Vec<u32>>(), r as usize)
        .prop_map(move |elements| SchubertIndex::new(n, elements).expect("subsequence is valid"))
}

proptest! {
    #[test]
    fn lr_product_is_graded_and_commutative(
        p in box_partition(3, 4),
        q in box_partition(3, 4),
    ) {
        let pq = lr_multiply(&p, &q).unwrap();
        for (nu, c) in pq.terms() {
            prop_assert!(*c > 0);
            prop_assert_eq!(nu.size(), p.size() + q.size());
        }
        prop_assert_eq!(&pq, &lr_multiply(&q, &p).unwrap());
        prop_assert_eq!(&pq, &pieri_multiply(&p, &q).unwrap());
    }

    #[test]
    fn index_partition_bijection(index in schubert_index(8, 3)) {
        let back = SchubertIndex::from_partition(&index.partition(), 8).unwrap();
        prop_assert_eq!(back, index.clone());
        prop_assert_eq!(index.dual().dual(), index.clone());
        prop_assert_eq!(
            index.dual_partition().size(),
            3 * 5 - index.codim()
        );
    }

    #[test]
    fn kappa_inverts_up_to_positive_scale(w in dominant_weight(5, 6)) {
        let x = kappa(&w);
        prop_assert!(x.is_dominant());
        if !x.is_zero() {
            let (back, t) = weight_of_kappa(&x).unwrap();
            prop_assert!(t > Rational::new(0.into(), 1.into()));
            prop_assert_eq!(kappa(&back), x.scale(&t));
        }
        prop_assert_eq!(dual_weight(&dual_weight(&w)), w);
    }

    #[test]
    fn membership_is_a_cone(
        a in dominant_weight(3, 2),
        b in dominant_weight(3, 2),
        c in dominant_weight(3, 2),
        d in dominant_weight(3, 2),
        e in dominant_weight(3, 2),
        f in dominant_weight(3, 2),
        num in 1i64..5,
        den in 1i64..5,
    ) {
        let x = KappaTuple::from_weights(&[a, b, c]).unwrap();
        let y = KappaTuple::from_weights(&[d, e, f]).unwrap();
        let x_in = is_member(&x, DEFAULT_BUDGET).unwrap();
        let y_in = is_member(&y, DEFAULT_BUDGET).unwrap();
        if x_in {
            let scaled = x.scale(&Rational::new(num.into(), den.into()));
            prop_assert!(is_member(&scaled, DEFAULT_BUDGET).unwrap());
        }
        if x_in && y_in {
            let sum = x.add(&y).unwrap();
            prop_assert!(is_member(&sum, DEFAULT_BUDGET).unwrap());
            // Members never sit strictly above a facet hyperplane.
            for facet in enumerate_facets(3, 3, DEFAULT_BUDGET).unwrap().iter() {
                let v = klyachko_value(facet, &sum).unwrap();
                prop_assert!(v <= Rational::new(0.into(), 1.into()));
            }
        }
    }

    #[test]
    fn primitive_spans_the_same_ray(
        nums in proptest::collection::vec(-6i64..=6, 1..6),
        dens in proptest::collection::vec(1i64..=6, 6),
    ) {
        let v: Vec<Rational> = nums
            .iter()
            .zip(&dens)
            .map(|(&n, &d)| Rational::new(n.into(), d.into()))
            .collect();
        prop_assume!(v.iter().any(|x| x != &Rational::new(0.into(), 1.into())));
        let p = primitive(&v).unwrap();
        // One common positive factor relates v and p.
        let k = v.iter().position(|x| x != &Rational::new(0.into(), 1.into())).unwrap();
        let t = Rational::from_integer(p[k].clone()) / &v[k];
        for (x, y) in v.iter().zip(&p) {
            prop_assert_eq!(x * &t, Rational::from_integer(y.clone()));
        }
    }

    #[test]
    fn rank_respects_transposition(
        rows in proptest::collection::vec(
            proptest::collection::vec(-4i64..=4, 4),
            1..5,
        ),
    ) {
        let m: Vec<Vec<Rational>> = rows
            .iter()
            .map(|r| r.iter().map(|&x| Rational::from_integer(x.into())).collect())
            .collect();
        let rank = RatMatrix::from_rows(m.clone()).unwrap().rank();
        let transposed: Vec<Vec<Rational>> = (0..4)
            .map(|j| m.iter().map(|row| row[j].clone()).collect())
            .collect();
        prop_assert_eq!(RatMatrix::from_rows(transposed).unwrap().rank(), rank);
        prop_assert!(rank <= 4.min(m.len()));
    }
}
