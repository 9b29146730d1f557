use proptest::prelude::*;

use qfrac::contfrac::{
    build_catalog_cf, convergent, equivalence_transform, euler_cf_from_rationals,
    eval_series_depth, partial_numerator_product, CFSpec, CatalogCf, CfArgs,
};
use qfrac::qseries::{ExactRational, QSeries};
use qfrac::QfracError;

fn catalog_cf(id: CatalogCf, depth: usize, order: usize) -> CFSpec {
    let terms = (1..=depth).map(|e| QSeries::q_power(e, order)).collect();
    build_catalog_cf(id, &CfArgs::default().with_terms(terms), depth, order).unwrap()
}

#[test]
fn determinant_identity_for_catalog_fractions() {
    for id in CatalogCf::ALL {
        let cf = catalog_cf(id, 12, 14);
        let convs: Vec<_> = cf.convergents().collect();
        assert!(convs.len() >= 12, "{id}");
        for n in 1..convs.len() {
            let det = &(&convs[n].p * &convs[n - 1].q) - &(&convs[n - 1].p * &convs[n].q);
            let prod = partial_numerator_product(&cf, n);
            let want = if n % 2 == 1 { prod } else { -&prod };
            assert_eq!(det, want, "{id} at depth {n}");
        }
    }
}

#[test]
fn stabilised_value_persists_two_levels_deeper() {
    let order = 20;
    for id in [
        CatalogCf::RAb,
        CatalogCf::FAc,
        CatalogCf::RbQ2,
        CatalogCf::GordonGollnitz,
    ] {
        let cf = build_catalog_cf(id, &CfArgs::default(), 40, order).unwrap();
        let (value, n) = eval_series_depth(&cf, order).unwrap();
        for extra in [n + 1, n + 2] {
            let c = convergent(&cf, extra).unwrap();
            assert_eq!(c.p.div(&c.q).unwrap(), value, "{id} at depth {extra}");
        }
    }
}

#[test]
fn eval_rejects_bad_orders_and_shallow_fractions() {
    let cf = build_catalog_cf(CatalogCf::RAb, &CfArgs::default(), 3, 10).unwrap();
    assert!(matches!(
        eval_series_depth(&cf, 11),
        Err(QfracError::Usage(_))
    ));
    assert!(matches!(
        eval_series_depth(&cf, 10),
        Err(QfracError::Convergence(_))
    ));
    assert!(eval_series_depth(&cf, 1).is_ok());
}

fn small_rational() -> impl Strategy<Value = ExactRational> {
    (-9i64..=9, 1i64..=9).prop_map(|(n, d)| ExactRational::new(n, d))
}

fn scalar(s: &QSeries) -> ExactRational {
    s.coeff(0).as_constant().unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn euler_convergents_are_partial_sums(terms in prop::collection::vec(small_rational(), 1..=11)) {
        let cf = euler_cf_from_rationals(&terms).unwrap();
        let (mut sum, mut prod) = (ExactRational::zero(), ExactRational::one());
        for (k, t) in terms.iter().enumerate() {
            prod = &prod * t;
            sum = &sum + &prod;
            let c = convergent(&cf, k + 1).unwrap();
            prop_assert_eq!(scalar(&c.p), &sum * &scalar(&c.q));
        }
    }

    #[test]
    fn equivalence_transform_keeps_ratios(
        terms in prop::collection::vec(small_rational(), 1..=8),
        scales in prop::collection::vec(small_rational(), 8),
    ) {
        prop_assume!(scales.iter().all(|s| !s.is_zero()));
        let cf = euler_cf_from_rationals(&terms).unwrap();
        let cs: Vec<_> = scales[..cf.depth()]
            .iter()
            .map(|s| QSeries::from_rational(s.clone(), 0))
            .collect();
        let scaled = equivalence_transform(&cf, &cs).unwrap();
        for (x, y) in cf.convergents().zip(scaled.convergents()) {
            // P/Q = P'/Q' as cross-multiplication.
            prop_assert_eq!(scalar(&x.p) * scalar(&y.q), scalar(&y.p) * scalar(&x.q));
        }
    }
}

#[test]
fn equivalence_transform_needs_units() {
    let cf = catalog_cf(CatalogCf::RAb, 3, 6);
    let mut scales = vec![QSeries::one(6); 3];
    scales[1] = QSeries::q_power(1, 6);
    assert!(matches!(
        equivalence_transform(&cf, &scales),
        Err(QfracError::Domain(_))
    ));
    assert!(matches!(
        equivalence_transform(&cf, &scales[..2]),
        Err(QfracError::Usage(_))
    ));
}
