//! q-Pochhammer symbols, Gaussian binomials and finite/infinite products.

use super::poly::{Exponents, Param, ParamPoly};
use super::rational::ExactRational;
use super::series::QSeries;
use crate::error::{domain, usage, Result};

/// `coeff * a^ea b^eb c^ec * q^q_exp`, the base `z` of `(z; q)_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QMonomial {
    pub coeff: ExactRational,
    pub exps: Exponents,
    pub q_exp: i64,
}

impl QMonomial {
    pub fn new(coeff: impl Into<ExactRational>, exps: Exponents, q_exp: i64) -> Self {
        QMonomial {
            coeff: coeff.into(),
            exps,
            q_exp,
        }
    }

    /// `q^e`.
    pub fn q(q_exp: i64) -> Self {
        Self::new(1, Exponents::ZERO, q_exp)
    }

    pub fn with_q(&self, q_exp: i64) -> Self {
        QMonomial {
            q_exp,
            ..self.clone()
        }
    }

    fn poly(&self) -> ParamPoly {
        ParamPoly::monomial(self.coeff.clone(), self.exps)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PochhammerOrder {
    Finite(usize),
    Infinite,
}

/// `1 - z` as a series (with `z` a q-monomial of nonnegative q-exponent).
pub fn one_minus(z: &QMonomial, order: usize) -> Result<QSeries> {
    if z.q_exp < 0 {
        return domain(format!("factor 1 - z q^{} has a negative q-power", z.q_exp));
    }
    let mut s = QSeries::one(order);
    let e = z.q_exp as usize;
    if e <= order {
        let mut c = s.coeff(e).clone();
        c = &c - &z.poly();
        s.set_coeff(e, c);
    }
    Ok(s)
}

/// `(z; q)_k = prod_{j<k} (1 - z q^j)`.
pub fn pochhammer(base: &QMonomial, k: PochhammerOrder, order: usize) -> Result<QSeries> {
    pochhammer_step(base, 1, k, order)
}

/// `(z; q^step)_k = prod_{j<k} (1 - z q^{step*j})`.
///
/// The infinite product stops once the next factor's q-power exceeds the
/// order, since from there on every factor is `1` up to truncation.
pub fn pochhammer_step(
    base: &QMonomial,
    step: u32,
    k: PochhammerOrder,
    order: usize,
) -> Result<QSeries> {
    if step == 0 {
        return usage("pochhammer step must be positive");
    }
    let step = step as i64;
    let mut acc = QSeries::one(order);
    match k {
        PochhammerOrder::Finite(k) => {
            for j in 0..k as i64 {
                let e = base.q_exp + step * j;
                if e > order as i64 {
                    break;
                }
                acc = &acc * &one_minus(&base.with_q(e), order)?;
            }
        }
        PochhammerOrder::Infinite => {
            if base.q_exp < 1 {
                return domain("infinite pochhammer needs a base with q-exponent >= 1");
            }
            let mut e = base.q_exp;
            while e <= order as i64 {
                acc = &acc * &one_minus(&base.with_q(e), order)?;
                e += step;
            }
        }
    }
    Ok(acc)
}

/// `(q; q)_k`, the usual denominator of partition sums.
pub fn q_factorial(k: usize, order: usize) -> QSeries {
    pochhammer(&QMonomial::q(1), PochhammerOrder::Finite(k), order).expect("q-exponent 1")
}

/// Gaussian binomial `[k choose j]_q`, zero when `j > k`.
///
/// Built from the Pascal rule `[k,j] = [k-1,j-1] + q^j [k-1,j]` on integer
/// coefficient vectors, so it never divides.
pub fn qbinomial(k: usize, j: usize, order: usize) -> QSeries {
    if j > k {
        return QSeries::zero(order);
    }
    // row[t] = [r choose t]_q as coefficient vectors, for the current r
    let mut row: Vec<Vec<i64>> = vec![vec![1]];
    for r in 1..=k {
        let mut next = Vec::with_capacity(r + 1);
        for t in 0..=r {
            let mut c = if t >= 1 {
                row[t - 1].clone()
            } else {
                Vec::new()
            };
            if t < r {
                let shifted = &row[t];
                if c.len() < shifted.len() + t {
                    c.resize(shifted.len() + t, 0);
                }
                for (i, v) in shifted.iter().enumerate() {
                    c[i + t] += v;
                }
            }
            next.push(c);
        }
        row = next;
    }
    QSeries::from_integers(&row[j], order)
}

/// Sign of the `x q^e` term in each product factor.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FactorSign {
    Plus,
    Minus,
}

/// `prod_i (1 +/- x q^{e_i})` with `x` either 1 or a parameter symbol.
///
/// Factors with `e_i > order` are identically 1 and skipped; exponents must be
/// positive.
pub fn product_build(
    exponents: impl IntoIterator<Item = u64>,
    sign: FactorSign,
    param: Option<Param>,
    order: usize,
) -> Result<QSeries> {
    let exps = match param {
        Some(p) => Exponents::of(p, 1),
        None => Exponents::ZERO,
    };
    let coeff = match sign {
        FactorSign::Plus => ExactRational::from_integer(-1),
        FactorSign::Minus => ExactRational::one(),
    };
    let mut acc = QSeries::one(order);
    for e in exponents {
        if e == 0 {
            return usage("product exponents must be positive");
        }
        if e > order as u64 {
            continue;
        }
        let z = QMonomial::new(coeff.clone(), exps, e as i64);
        acc = &acc * &one_minus(&z, order)?;
    }
    Ok(acc)
}

/// `prod_i (1 + m_i q^{e_i})` for arbitrary monomial multipliers.
pub fn product_of_factors(
    factors: impl IntoIterator<Item = (ExactRational, Exponents, u64)>,
    order: usize,
) -> Result<QSeries> {
    let mut acc = QSeries::one(order);
    for (c, exps, e) in factors {
        if e > order as u64 {
            continue;
        }
        let z = QMonomial::new(-c, exps, e as i64);
        acc = &acc * &one_minus(&z, order)?;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(s: &QSeries) -> Vec<i64> {
        s.rational_coeffs()
            .unwrap()
            .iter()
            .map(|c| c.to_f64() as i64)
            .collect()
    }

    #[test]
    fn pochhammer_examples() {
        let s = pochhammer(&QMonomial::q(1), PochhammerOrder::Finite(2), 5).unwrap();
        assert_eq!(ints(&s), vec![1, -1, -1, 1, 0, 0]);

        let minus_b = QMonomial::new(-1, Exponents::of(Param::B, 1), 0);
        let s = pochhammer(&minus_b, PochhammerOrder::Finite(2), 3).unwrap();
        let b = ParamPoly::param(Param::B);
        assert_eq!(s.coeff(0), &(&ParamPoly::one() + &b));
        assert_eq!(s.coeff(1), &(&b + &(&b * &b)));
        assert!(s.coeff(2).is_zero());

        let s = pochhammer(&minus_b, PochhammerOrder::Finite(0), 3).unwrap();
        assert_eq!(s, QSeries::one(3));
    }

    #[test]
    fn infinite_pochhammer_needs_positive_q_exponent() {
        let z = QMonomial::new(1, Exponents::ZERO, 0);
        assert!(matches!(
            pochhammer(&z, PochhammerOrder::Infinite, 5),
            Err(crate::QfracError::Domain(_))
        ));
        // Euler's pentagonal numbers
        let s = pochhammer(&QMonomial::q(1), PochhammerOrder::Infinite, 12).unwrap();
        assert_eq!(ints(&s), vec![1, -1, -1, 0, 0, 1, 0, 1, 0, 0, 0, 0, -1]);
    }

    #[test]
    fn qbinomial_examples() {
        assert_eq!(qbinomial(7, 0, 5), QSeries::one(5));
        assert_eq!(ints(&qbinomial(2, 1, 4)), vec![1, 1, 0, 0, 0]);
        assert_eq!(ints(&qbinomial(4, 2, 6)), vec![1, 1, 2, 1, 1, 0, 0]);
        assert!(qbinomial(2, 3, 4).is_zero());
    }

    #[test]
    fn product_examples() {
        let s = product_build([1], FactorSign::Minus, None, 3).unwrap();
        assert_eq!(ints(&s), vec![1, -1, 0, 0]);
        // distinct powers of two up to 2^3: every value below 16 exactly once
        let s = product_build([1, 2, 4, 8], FactorSign::Plus, None, 20).unwrap();
        let mut want = vec![1; 16];
        want.extend([0; 5]);
        assert_eq!(ints(&s), want);
        assert!(product_build([0], FactorSign::Plus, None, 3).is_err());
    }
}
