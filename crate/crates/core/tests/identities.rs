use qfrac::contfrac::{build_catalog_cf, convergent, CatalogCf, CfArgs};
use qfrac::identities::{
    list_identities, verify_all, verify_all_with, verify_identity, verify_with, ParamMode, Status,
    VerifyOptions,
};
use qfrac::qseries::{
    pochhammer, q_factorial, ExactRational, Exponents, ParamPoly, PochhammerOrder, QMonomial,
    QSeries,
};
use qfrac::QfracError;

#[test]
fn full_catalog_passes_at_order_40() {
    let reports = verify_all(40, true);
    assert!(reports.len() >= 24);
    let failed: Vec<_> = reports.iter().filter(|r| !r.passed()).collect();
    assert!(failed.is_empty(), "{failed:#?}");
}

#[test]
fn every_entry_passes_at_small_orders() {
    for order in [0, 1, 2, 5, 13] {
        for r in verify_all(order, false) {
            assert_eq!(r.status, Status::Pass, "{} at order {order}: {r:?}", r.id);
        }
    }
}

#[test]
fn parallel_and_serial_agree() {
    let strip = |mut rs: Vec<qfrac::identities::IdentityReport>| {
        rs.iter_mut().for_each(|r| r.elapsed_ms = 0);
        rs
    };
    assert_eq!(strip(verify_all(15, true)), strip(verify_all(15, false)));
}

#[test]
fn randomized_entries_pass_for_other_seeds() {
    let randomized: Vec<_> = list_identities()
        .into_iter()
        .filter(|i| i.param_mode == ParamMode::Randomized)
        .collect();
    assert!(!randomized.is_empty());
    for info in randomized {
        for seed in [2, 17, 12345] {
            let r = verify_identity(info.id, 20, seed).unwrap();
            assert!(r.passed(), "{} with seed {seed}: {r:?}", info.id);
        }
    }
}

#[test]
fn corrupted_fixtures_report_the_first_mismatch() {
    for id in ["LEBESGUE", "RR_G", "THM_2_2", "F_CF", "COLORED_DEN"] {
        let opts = VerifyOptions {
            corrupt: vec![id.to_string()],
            ..VerifyOptions::new(10)
        };
        let r = verify_with(id, &opts).unwrap();
        assert_eq!(r.status, Status::Fail, "{id}");
        let m = r.first_mismatch.expect("mismatch");
        assert_eq!((m.q, m.ea, m.eb, m.ec), (1, 0, 0, 0), "{id}");
        let (l, r): (ExactRational, ExactRational) =
            (m.lhs.parse().unwrap(), m.rhs.parse().unwrap());
        assert_eq!(&r - &l, ExactRational::one(), "{id}");
    }
    let all = verify_all_with(&VerifyOptions {
        corrupt: vec!["RR_H".into()],
        ..VerifyOptions::new(8)
    });
    let failing: Vec<_> = all
        .iter()
        .filter(|r| !r.passed())
        .map(|r| r.id.as_str())
        .collect();
    assert_eq!(failing, ["RR_H"]);
}

#[test]
fn unknown_id_is_a_usage_error() {
    assert!(matches!(
        verify_identity("NOPE", 5, 1),
        Err(QfracError::Usage(_))
    ));
}

/// `sum_k a^k q^{k(k+1)/2} (-b/a q^shift)_k / (q)_k`.
fn lemma_sum(shift: i64, order: usize) -> QSeries {
    let base = QMonomial::new(-1, Exponents::new(-1, 1, 0), shift);
    let mut acc = QSeries::zero(order);
    let mut k = 0;
    while k * (k + 1) / 2 <= order {
        let lead = QSeries::monomial(
            ParamPoly::monomial(ExactRational::one(), Exponents::new(k as i32, 0, 0)),
            k * (k + 1) / 2,
            order,
        );
        let poch = pochhammer(&base, PochhammerOrder::Finite(k), order).unwrap();
        acc = &acc + &(&lead * &poch).div(&q_factorial(k, order)).unwrap();
        k += 1;
    }
    acc
}

fn agreeing_prefix(x: &QSeries, y: &QSeries) -> usize {
    x.coeffs()
        .iter()
        .zip(y.coeffs())
        .take_while(|(a, b)| a == b)
        .count()
}

#[test]
fn lemma_coverage_grows_with_depth() {
    let order = 24;
    let cf = build_catalog_cf(CatalogCf::RAb, &CfArgs::default(), 30, order).unwrap();
    let (num, den) = (lemma_sum(0, order), lemma_sum(1, order));
    let mut last = (0, 0);
    for depth in 1..=30 {
        let c = convergent(&cf, depth).unwrap();
        let cover = (agreeing_prefix(&c.p, &num), agreeing_prefix(&c.q, &den));
        assert!(
            cover.0 >= last.0 && cover.1 >= last.1,
            "depth {depth}: {cover:?} < {last:?}"
        );
        // the depth-D partials carry q^D, so at least D coefficients are settled
        assert!(
            cover.0 >= depth.min(order + 1) && cover.1 >= depth.min(order + 1),
            "depth {depth}"
        );
        last = cover;
    }
    assert_eq!(last, (order + 1, order + 1));
}
