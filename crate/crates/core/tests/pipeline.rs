use proptest::prelude::*;
use stanley_core::hilbert::polarization_identity_check;
use stanley_core::polarization::check_facet_bijection;
use stanley_core::{
    depth_report, hilbert_series, polarize_ideal, series_equal, transfer, verify, Field, MonomialIdeal, RationalSeries,
    SolverOptions,
};

#[test]
fn three_generator_cm_ideal_end_to_end() {
    let i = MonomialIdeal::from_exponents(2, &[&[2, 0], &[1, 1], &[0, 2]]).unwrap();
    let t = transfer(&i, Field::Rational, &SolverOptions::default()).unwrap();
    assert_eq!(t.n1(), 2);
    assert_eq!((t.polarized.input_depth, t.polarized.output_depth), (0, 2));
    let p = &t.polarized.partition;
    assert!(verify(p, 2).all_ok());
    assert!(series_equal(&p.series().unwrap(), &RationalSeries::new(vec![1, 2], 2)));
    assert!(series_equal(&hilbert_series(&p.ideal).unwrap(), &RationalSeries::new(vec![1, 2], 2)));
}

#[test]
fn depth_agrees_across_fields_on_small_ideals() {
    let i = MonomialIdeal::from_exponents(4, &[&[1, 1, 0, 0], &[0, 1, 1, 0], &[0, 0, 1, 1], &[2, 0, 0, 1]]).unwrap();
    let q = depth_report(&i, Field::Rational).unwrap();
    let f2 = depth_report(&i, Field::prime(2).unwrap()).unwrap();
    let f3 = depth_report(&i, Field::prime(3).unwrap()).unwrap();
    assert_eq!((q.depth, q.dim), (f2.depth, f2.dim));
    assert_eq!(q.depth, f3.depth);
}

fn ideal_strategy() -> impl Strategy<Value = MonomialIdeal> {
    (1usize..=4).prop_flat_map(|n| {
        proptest::collection::vec(proptest::collection::vec(0u32..=3, n), 1..=5).prop_filter_map("unit", move |rows| {
            let refs: Vec<&[u32]> = rows.iter().map(Vec::as_slice).collect();
            MonomialIdeal::from_exponents(n, &refs).ok()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]
    #[test]
    fn polarization_preserves_series_facets_and_shifts_depth(i in ideal_strategy()) {
        prop_assert!(polarization_identity_check(&i).unwrap());
        prop_assert!(check_facet_bijection(&i).unwrap());
        let (pol, pm) = polarize_ideal(&i).unwrap();
        prop_assert!(pol.is_squarefree());
        let a = depth_report(&i, Field::Rational).unwrap();
        let b = depth_report(&pol, Field::Rational).unwrap();
        prop_assert_eq!(b.depth, a.depth + pm.n1());
        prop_assert_eq!(b.dim, a.dim + pm.n1());
    }
}
