use proptest::prelude::*;

use qfrac::qseries::{
    pochhammer, qbinomial, series_arith, ArithOp, ExactRational, Exponents, Param, ParamPoly,
    PochhammerOrder, QMonomial, QSeries,
};

const ORDER: usize = 12;

type Term = (usize, i32, i32, i64, i64);

fn build(terms: &[Term], order: usize) -> QSeries {
    let mut coeffs = vec![ParamPoly::zero(); order + 1];
    for &(n, ea, eb, num, den) in terms {
        if n <= order {
            coeffs[n].add_term(Exponents::new(ea, eb, 0), &ExactRational::new(num, den));
        }
    }
    QSeries::from_coeffs(coeffs, order)
}

fn series() -> impl Strategy<Value = QSeries> {
    prop::collection::vec(
        (0usize..=ORDER, 0i32..3, -1i32..2, -6i64..7, 1i64..5),
        0..10,
    )
    .prop_map(|t| build(&t, ORDER))
}

fn unit_series() -> impl Strategy<Value = QSeries> {
    (
        1i64..6,
        prop::collection::vec((1usize..=ORDER, 0i32..2, 0i32..2, -6i64..7, 1i64..5), 0..8),
    )
        .prop_map(|(c0, mut t)| {
            t.push((0, 0, 0, c0, 1));
            build(&t, ORDER)
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn ring_axioms(x in series(), y in series(), z in series()) {
        prop_assert_eq!(&(&x + &y) + &z, &x + &(&y + &z));
        prop_assert_eq!(&x * &y, &y * &x);
        prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
        prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
        prop_assert_eq!(series_arith(&x, &y, ArithOp::Sub).unwrap(), &x - &y);
    }

    #[test]
    fn inverse_is_two_sided(s in unit_series()) {
        let inv = s.inverse().unwrap();
        prop_assert_eq!(&s * &inv, QSeries::one(ORDER));
        prop_assert_eq!(&inv * &s, QSeries::one(ORDER));
    }

    #[test]
    fn qshift_composes(s in series(), m1 in 0i64..3, m2 in 0i64..3, down in any::<bool>()) {
        // Shifts of mixed sign lose the terms pushed past the order, so
        // only same-sign pairs compose exactly.
        let (m1, m2) = if down { (-m1, -m2) } else { (m1, m2) };
        let twice = s
            .subst_param_qshift(Param::B, m1)
            .and_then(|t| t.subst_param_qshift(Param::B, m2));
        match s.subst_param_qshift(Param::B, m1 + m2) {
            Ok(once) => prop_assert_eq!(twice.unwrap(), once),
            Err(_) => prop_assert!(twice.is_err()),
        }
    }
}

#[test]
fn pochhammer_steps() {
    let z = QMonomial::new(-2, Exponents::of(Param::A, 1), 1);
    for k in 0..10 {
        let next = pochhammer(&z, PochhammerOrder::Finite(k + 1), 30).unwrap();
        let cur = pochhammer(&z, PochhammerOrder::Finite(k), 30).unwrap();
        let factor = qfrac::qseries::one_minus(&z.with_q(1 + k as i64), 30).unwrap();
        assert_eq!(next, &cur * &factor, "k = {k}");
    }
}

#[test]
fn qbinomial_symmetry_and_q_to_one() {
    for k in 0..=10usize {
        let mut binom = 1u64;
        for j in 0..=k {
            let c = qbinomial(k, j, 60);
            assert_eq!(c, qbinomial(k, k - j, 60));
            let total: ExactRational = c.coeffs().iter().map(|p| p.as_constant().unwrap()).sum();
            assert_eq!(total, ExactRational::from(binom as i64), "C({k},{j})");
            binom = binom * (k - j) as u64 / (j + 1) as u64;
        }
    }
}

#[test]
fn q_binomial_theorem() {
    let order = 80;
    let z = QMonomial::new(-1, Exponents::of(Param::A, 1), 0);
    for k in 0..=12usize {
        let lhs = pochhammer(&z, PochhammerOrder::Finite(k), order).unwrap();
        let mut rhs = QSeries::zero(order);
        for j in 0..=k {
            let lead = QSeries::monomial(
                ParamPoly::monomial(ExactRational::one(), Exponents::of(Param::A, j as i32)),
                j * j.saturating_sub(1) / 2,
                order,
            );
            rhs = &rhs + &(&lead * &qbinomial(k, j, order));
        }
        assert_eq!(lhs, rhs, "k = {k}");
    }
}
