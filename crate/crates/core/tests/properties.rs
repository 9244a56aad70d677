use hdepth::testkit::{
    certify, default_prefix_bound, inclusion_exclusion_numerator, naive_expand, naive_hdepth,
    standard_monomial_counts, Certification,
};
use hdepth::{hdepth, Depth, HdepthError, HilbertSeries, IntPolynomial, Monomial, MonomialIdeal, MonomialModuleExpr};
use num_bigint::BigInt;
use proptest::prelude::*;

fn module_series() -> impl Strategy<Value = HilbertSeries> {
    (prop::collection::vec(-8i64..=8, 1..10), 1usize..9)
        .prop_map(|(mut c, dim)| {
            let s: i64 = c.iter().sum();
            if s < 1 {
                let last = c.len() - 1;
                c[last] += 1 - s;
            }
            HilbertSeries::new(IntPolynomial::from_i64s(&c), dim, 0)
        })
        .prop_filter("Hilbert series of a module", |s| {
            !matches!(hdepth(s), Err(HdepthError::SeriesNotPositive { .. }))
        })
}

fn ideal_strategy() -> impl Strategy<Value = MonomialIdeal> {
    (1usize..=5).prop_flat_map(|n| {
        prop::collection::vec(prop::collection::vec(0u32..=3, n), 0..=7).prop_map(move |gens| {
            let gens = gens
                .into_iter()
                .map(Monomial::new)
                .filter(|m| m.degree() > 0)
                .collect();
            MonomialIdeal::new(n, gens).unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn agrees_with_prefix_oracle(series in module_series()) {
        let e = hdepth(&series).unwrap().value.finite().unwrap();
        let bound = default_prefix_bound(series.numerator(), series.denom_exp());
        prop_assert_eq!(certify(&series, e, bound), Certification::Confirmed);
        prop_assert_eq!(naive_hdepth(&series, bound), Some(e));
    }

    #[test]
    fn tail_past_the_starting_bound_is_non_decreasing(series in module_series()) {
        let r = hdepth(&series).unwrap();
        let g = series.numerator();
        for step in &r.trace {
            let start = step.probes[0].bound;
            let coeffs = naive_expand(g, step.k, start + 60);
            for w in coeffs[start..].windows(2) {
                prop_assert!(w[0] <= w[1], "k = {}, from {}: {:?}", step.k, start, &coeffs[start..]);
            }
        }
    }

    #[test]
    fn upper_bound_with_equality_iff_positive(series in module_series()) {
        let e = hdepth(&series).unwrap().value.finite().unwrap();
        prop_assert!(e <= series.denom_exp());
        prop_assert_eq!(e == series.denom_exp(), series.numerator().is_positive());
    }

    #[test]
    fn direct_sum_is_at_least_the_smaller_depth(a in module_series(), b in module_series()) {
        let dim = a.denom_exp().max(b.denom_exp());
        let sum = &a.numerator_over(dim).unwrap() + &b.numerator_over(dim).unwrap();
        let s = HilbertSeries::reduced(sum, dim, 0);
        let ds = hdepth(&s).unwrap().value;
        let da = hdepth(&a).unwrap().value;
        let db = hdepth(&b).unwrap().value;
        prop_assert!(ds >= da.min(db));
    }

    #[test]
    fn pivot_recursion_matches_subset_sum(ideal in ideal_strategy()) {
        let ideal = ideal.minimalize();
        prop_assert_eq!(ideal.numerator_quotient(), inclusion_exclusion_numerator(&ideal).unwrap());
    }

    #[test]
    fn series_counts_standard_monomials(ideal in ideal_strategy()) {
        let jet = HilbertSeries::new(ideal.numerator_quotient(), ideal.n_vars(), 0).expand(6);
        let counts = standard_monomial_counts(&ideal, 6);
        for (d, c) in counts.into_iter().enumerate() {
            prop_assert_eq!(jet.coeff(d), Some(BigInt::from(c)));
        }
    }

    #[test]
    fn minimalize_keeps_the_ideal(ideal in ideal_strategy()) {
        let min = ideal.minimalize();
        prop_assert!(min.is_minimal());
        prop_assert_eq!(min.minimalize(), min.clone());
        for g in ideal.generators() {
            prop_assert!(min.contains(g));
        }
        for g in min.generators() {
            prop_assert!(ideal.generators().contains(g));
        }
    }

    #[test]
    fn value_at_one_vanishes_iff_dimension_drops(ideal in ideal_strategy()) {
        let e = MonomialModuleExpr::Quotient(ideal.clone());
        let value = ideal.numerator_quotient().sumcoef();
        let n = ideal.n_vars();
        if ideal.is_zero() {
            prop_assert_eq!(value, BigInt::from(1));
        } else {
            // a nonzero monomial ideal has height >= 1
            prop_assert_eq!(value, BigInt::from(0));
            if let Ok(d) = e.dim() {
                prop_assert!(d < n);
            }
        }
    }
}

#[test]
fn maximal_ideal_depths_follow_ceil_formula_far_out() {
    for n in [31, 40, 48] {
        let s = MonomialModuleExpr::free_plus_maximal(n, 0).unwrap().series().unwrap();
        assert_eq!(hdepth(&s).unwrap().value, Depth::Finite(n.div_ceil(2)));
    }
}
