//! Independent series builders shared by the catalog entries: sums come from
//! Pochhammer terms, products from `product_build`, fraction values from the
//! convergent recurrence.

use crate::contfrac::{build_catalog_cf, eval_finite_with, CatalogCf, CfArgs};
use crate::error::Result;
use crate::partitions::{count_partitions, PartSpec};
use crate::qseries::{
    pochhammer, pochhammer_step, product_build, product_of_factors, q_factorial, ExactRational,
    Exponents, FactorSign, Param, ParamPoly, PochhammerOrder, QMonomial, QSeries,
};

pub(crate) fn mono(c: i64, exps: Exponents, power: usize, order: usize) -> QSeries {
    QSeries::monomial(
        ParamPoly::monomial(ExactRational::from_integer(c), exps),
        power,
        order,
    )
}

pub(crate) fn inv_qfac(k: usize, order: usize) -> QSeries {
    q_factorial(k, order)
        .inverse()
        .expect("(q;q)_k has constant term 1")
}

fn inv(s: QSeries) -> QSeries {
    s.inverse()
        .expect("products built here have constant term 1")
}

/// `prod_{e in exps, e <= N} (1 -/+ x q^e)`.
pub(crate) fn prod(
    exps: impl IntoIterator<Item = u64>,
    sign: FactorSign,
    param: Option<Param>,
    order: usize,
) -> QSeries {
    product_build(exps, sign, param, order).expect("positive exponents")
}

/// Positive integers `<= order` in the given residue classes.
pub(crate) fn residues(modulus: u64, classes: &[u64], order: usize) -> Vec<u64> {
    (1..=order as u64)
        .filter(|j| classes.contains(&(j % modulus)))
        .collect()
}

/// Arithmetic progression `start, start + step, ...` up to `order`.
pub(crate) fn progression(start: u64, step: u64, order: usize) -> Vec<u64> {
    (0..)
        .map(|m| start + step * m)
        .take_while(|&e| e <= order as u64)
        .collect()
}

/// Value of a finite telescoping fraction with terms `q^e`, `e` in `exps`.
pub(crate) fn telescoping_series(id: CatalogCf, exps: &[u64], order: usize) -> Result<QSeries> {
    eval_finite_with(
        |w| {
            let terms = exps
                .iter()
                .map(|&e| QSeries::q_power(e as usize, w))
                .collect();
            build_catalog_cf(id, &CfArgs::default().with_terms(terms), usize::MAX, w)
        },
        order,
    )
}

/// `sum_k count(k) q^k` from the dynamic-programming oracle.
pub(crate) fn counts(spec: &PartSpec, order: usize) -> QSeries {
    let coeffs = (0..=order as u64)
        .map(|k| {
            let c = num_bigint::BigInt::from(count_partitions(k, spec));
            ParamPoly::constant(ExactRational::from(c))
        })
        .collect();
    QSeries::from_coeffs(coeffs, order)
}

/// `sum_k a^k q^{k(k+1)/2} (-a^{-1} b q^shift)_k / (q)_k`.
pub(crate) fn lemma_sum(shift: i64, order: usize) -> QSeries {
    let base = QMonomial::new(-1, Exponents::new(-1, 1, 0), shift);
    let mut acc = QSeries::zero(order);
    for k in (0..).take_while(|k| k * (k + 1) / 2 <= order) {
        let lead = mono(1, Exponents::new(k as i32, 0, 0), k * (k + 1) / 2, order);
        let poch = pochhammer(&base, PochhammerOrder::Finite(k), order).expect("finite");
        acc = &acc + &(&(&lead * &poch) * &inv_qfac(k, order));
    }
    acc
}

/// `sum_{i,j} a^i b^j q^{i(i+1)/2 + ij + j^2 + shift*j} / ((q)_i (q)_j)`.
pub(crate) fn double_sum(shift: usize, order: usize) -> QSeries {
    let mut acc = QSeries::zero(order);
    for i in 0..=order {
        if i * (i + 1) / 2 > order {
            break;
        }
        for j in 0..=order {
            let e = i * (i + 1) / 2 + i * j + j * j + shift * j;
            if e > order {
                break;
            }
            let lead = mono(1, Exponents::new(i as i32, j as i32, 0), e, order);
            acc = &acc + &(&(&lead * &inv_qfac(i, order)) * &inv_qfac(j, order));
        }
    }
    acc
}

/// `f(a, c) = sum_k a^k q^{k(k-1)/2} (-cq)_k / (q)_k`.
pub(crate) fn f_closed(order: usize) -> QSeries {
    let base = QMonomial::new(-1, Exponents::of(Param::C, 1), 1);
    let mut acc = QSeries::zero(order);
    for k in (0usize..).take_while(|&k| k * k.saturating_sub(1) / 2 <= order) {
        let lead = mono(
            1,
            Exponents::of(Param::A, k as i32),
            k * k.saturating_sub(1) / 2,
            order,
        );
        let poch = pochhammer(&base, PochhammerOrder::Finite(k), order).expect("finite");
        acc = &acc + &(&(&lead * &poch) * &inv_qfac(k, order));
    }
    acc
}

/// `f(a, c)` with `A_k` solved from `(1 - q^k) A_k = (q^{k-1} + c q^{2k-1}) A_{k-1}`.
pub(crate) fn f_recursive(order: usize) -> Result<QSeries> {
    let mut a_k = QSeries::one(order);
    let mut acc = a_k.clone();
    let mut k = 1usize;
    while k * (k - 1) / 2 <= order {
        let step = &QSeries::q_power(k - 1, order)
            + &mono(1, Exponents::of(Param::C, 1), 2 * k - 1, order);
        let one_minus = &QSeries::one(order) - &QSeries::q_power(k, order);
        a_k = (&a_k * &step).div(&one_minus)?;
        acc = &acc
            + &a_k.scale(&ParamPoly::monomial(
                ExactRational::one(),
                Exponents::of(Param::A, k as i32),
            ));
        k += 1;
    }
    Ok(acc)
}

/// `sum_k q^{k(k+1)} (-b q^{shift}; q^2)_k / (q^2; q^2)_k`, `shift` in `{-1, 1}`.
pub(crate) fn gollnitz_sum(shift: i64, order: usize) -> QSeries {
    let mut acc = QSeries::zero(order);
    for k in (0..).take_while(|k| k * (k + 1) <= order + 1) {
        let poch = if shift >= 0 || k == 0 {
            let base = QMonomial::new(-1, Exponents::of(Param::B, 1), shift.max(1));
            let p = pochhammer_step(&base, 2, PochhammerOrder::Finite(k), order).expect("finite");
            &QSeries::q_power(k * (k + 1), order) * &p
        } else {
            // q^{k(k+1)} (1 + b/q) = q^{k(k+1)-1} (q + b)
            let head = &QSeries::q_power(1, order) + &QSeries::param(Param::B, order);
            let base = QMonomial::new(-1, Exponents::of(Param::B, 1), 1);
            let rest =
                pochhammer_step(&base, 2, PochhammerOrder::Finite(k - 1), order).expect("finite");
            &(&QSeries::q_power(k * (k + 1) - 1, order) * &head) * &rest
        };
        let den = pochhammer_step(&QMonomial::q(2), 2, PochhammerOrder::Finite(k), order)
            .expect("finite");
        acc = &acc + &poch.div(&den).expect("unit");
    }
    acc
}

/// `prod (1 + x q^e)` over `e` in `plus` divided by the same over `minus`.
pub(crate) fn ratio(
    plus: &[u64],
    minus: &[u64],
    sign: FactorSign,
    param: Option<Param>,
    order: usize,
) -> QSeries {
    let num = prod(plus.iter().copied(), sign, param, order);
    let den = prod(minus.iter().copied(), sign, param, order);
    &num * &inv(den)
}

/// `prod 1/(1 - q^e)`.
pub(crate) fn inv_prod(exps: impl IntoIterator<Item = u64>, order: usize) -> QSeries {
    inv(prod(exps, FactorSign::Minus, None, order))
}

/// `prod_m (1 - a^2 q^{4m-3})(1 - b^2 q^{4m-3}) / ((1 - a^2 q^{4m-1})(1 - b^2 q^{4m-1}))`.
pub(crate) fn three_param_product(order: usize) -> Result<QSeries> {
    let factors = |start: u64| {
        progression(start, 4, order).into_iter().flat_map(|e| {
            [
                (ExactRational::from_integer(-1), Exponents::new(2, 0, 0), e),
                (ExactRational::from_integer(-1), Exponents::new(0, 2, 0), e),
            ]
        })
    };
    let num = product_of_factors(factors(1), order)?;
    let den = product_of_factors(factors(3), order)?;
    num.div(&den)
}
