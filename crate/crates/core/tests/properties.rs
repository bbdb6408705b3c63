use fpp::lparam;
use fpp::vogan_a::{self, GradedDims};
use fpp::{weyl, BigQ, ExponentVector, LeviSubset, RootDatum, Scalar, WeylElement, Q};
use proptest::prelude::*;
use std::collections::BTreeSet;

const LABELS: [&str; 12] = ["A1", "A2", "A3", "A4", "A5", "B2", "B3", "C2", "C3", "D4", "G2", "F4"];

fn datum_and_vector() -> impl Strategy<Value = (RootDatum, ExponentVector<Q>)> {
    (0..LABELS.len()).prop_flat_map(|k| {
        let d = RootDatum::named(LABELS[k]).unwrap();
        let n = d.rank();
        prop::collection::vec((-12i64..=12, 1i64..=4), n)
            .prop_map(move |c| (d.clone(), ExponentVector::new(c.into_iter().map(|(a, b)| Q::new(a, b)).collect())))
    })
}

fn graded_dims() -> impl Strategy<Value = GradedDims> {
    prop::collection::vec(0usize..=2, 1..=4).prop_filter_map("nonzero", |v| {
        let pairs: Vec<(i64, usize)> =
            v.iter().enumerate().filter(|(_, d)| **d > 0).map(|(i, d)| (i as i64, *d)).collect();
        if pairs.is_empty() {
            None
        } else {
            GradedDims::from_pairs(&pairs).ok()
        }
    })
}

proptest! {
    #[test]
    fn dominant_representative_is_constant_on_orbits(
        (d, v) in datum_and_vector(),
        word in prop::collection::vec(0usize..8, 0..12),
    ) {
        let word: Vec<usize> = word.into_iter().map(|i| i % d.rank()).collect();
        let w = WeylElement::from_word(&d, &word).unwrap();
        let (dom, u) = weyl::make_dominant(&d, &v).unwrap();
        let (dom2, _) = weyl::make_dominant(&d, &w.apply(&v)).unwrap();
        prop_assert!(dom.is_dominant());
        prop_assert_eq!(&dom, &dom2);
        prop_assert_eq!(u.apply(&v), dom);
    }

    #[test]
    fn levi_split_partitions_positive_roots((d, _) in datum_and_vector(), mask in any::<u8>()) {
        let m = LeviSubset::from_indices((0..d.rank()).filter(|i| mask >> i & 1 == 1));
        let (levi, nil) = d.levi_split(&m);
        prop_assert_eq!(levi.len() + nil.len(), d.positive_roots().len());
        let a: BTreeSet<&Vec<i64>> = levi.iter().map(|r| &r.root).collect();
        let b: BTreeSet<&Vec<i64>> = nil.iter().map(|r| &r.root).collect();
        prop_assert!(a.is_disjoint(&b));
        for r in &levi {
            prop_assert!(r.support().iter().all(|i| m.contains(*i)));
        }
        for r in &nil {
            prop_assert!(!r.support().iter().all(|i| m.contains(*i)));
        }
    }

    #[test]
    fn scalar_backends_agree((d, v) in datum_and_vector()) {
        let (dom, _) = weyl::make_dominant(&d, &v).unwrap();
        let big: ExponentVector<BigQ> = dom.convert();
        let small = lparam::fpp_check_vector(&d, &dom).unwrap();
        let wide = lparam::fpp_check_vector(&d, &big).unwrap();
        prop_assert_eq!(small.in_fpp, wide.in_fpp);
        prop_assert_eq!(small.violated, wide.violated);
        prop_assert_eq!(small.boundary, wide.boundary);
    }

    #[test]
    fn closure_order_and_dimension(g in graded_dims(), picks in prop::collection::vec(any::<prop::sample::Index>(), 3)) {
        let orbits = vogan_a::enumerate_orbits(&g, vogan_a::DEFAULT_N_CAP).unwrap();
        let [a, b, c] = [0, 1, 2].map(|k| &orbits[picks[k].index(orbits.len())]);
        let leq = |x, y| vogan_a::closure_leq(x, y).unwrap();
        prop_assert!(leq(a, a));
        if leq(a, b) && leq(b, a) {
            prop_assert_eq!(a, b);
        }
        if leq(a, b) && leq(b, c) {
            prop_assert!(leq(a, c));
        }
        if leq(a, b) && a != b {
            prop_assert!(vogan_a::orbit_dimension(a) < vogan_a::orbit_dimension(b));
        }
    }

    #[test]
    fn rank_data_determines_the_multisegment(g in graded_dims(), pick in any::<prop::sample::Index>()) {
        let orbits = vogan_a::enumerate_orbits(&g, vogan_a::DEFAULT_N_CAP).unwrap();
        let m = &orbits[pick.index(orbits.len())];
        prop_assert_eq!(&vogan_a::rank_invariants(m).to_multisegment().unwrap(), m);
        prop_assert_eq!(vogan_a::infchar_of_multisegment::<Q>(m).len(), g.total());
    }

    #[test]
    fn levi_leq1_contains_m_lambda((d, v) in datum_and_vector()) {
        let (dom, _) = weyl::make_dominant(&d, &v).unwrap();
        let ic = lparam::InfCharData::from_dominant(&d, dom).unwrap();
        let m = lparam::levi_leq1(&d, &ic);
        prop_assert!(ic.m_lambda().is_subset(&m));
        let one = Q::from_int(1);
        prop_assert!(lparam::nilradical_weights(&d, &m, ic.nu_lambda()).iter().all(|x| *x > one));
    }
}
