//! Truncated power series in `q` with [`ParamPoly`] coefficients.
//!
//! A series of order `N` stores the coefficients of `q^0 ..= q^N`; every
//! operation saturates at `N`, so two series of the same order agree "up to
//! order N" exactly when their coefficient vectors are equal.

use std::ops::{Add, Mul, Neg, Sub};

use super::poly::{Exponents, Param, ParamPoly};
use super::rational::ExactRational;
use crate::error::{domain, usage, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QSeries {
    // invariant: non-empty, len = order + 1
    coeffs: Vec<ParamPoly>,
}

/// Which ring operation [`series_arith`] performs.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
}

/// Checked ring operation; the operands must share one order.
pub fn series_arith(lhs: &QSeries, rhs: &QSeries, op: ArithOp) -> Result<QSeries> {
    lhs.check_order(rhs)?;
    Ok(match op {
        ArithOp::Add => lhs.add_unchecked(rhs),
        ArithOp::Sub => lhs.sub_unchecked(rhs),
        ArithOp::Mul => lhs.mul_unchecked(rhs),
    })
}

impl QSeries {
    pub fn zero(order: usize) -> Self {
        QSeries {
            coeffs: vec![ParamPoly::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        Self::constant(ParamPoly::one(), order)
    }

    pub fn constant(c: ParamPoly, order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = c;
        s
    }

    pub fn from_rational(c: ExactRational, order: usize) -> Self {
        Self::constant(ParamPoly::constant(c), order)
    }

    /// `c * q^power`; zero when `power > order`.
    pub fn monomial(c: ParamPoly, power: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if power <= order {
            s.coeffs[power] = c;
        }
        s
    }

    /// `q^power` with unit coefficient.
    pub fn q_power(power: usize, order: usize) -> Self {
        Self::monomial(ParamPoly::one(), power, order)
    }

    /// A parameter symbol as a constant series.
    pub fn param(p: Param, order: usize) -> Self {
        Self::constant(ParamPoly::param(p), order)
    }

    /// Univariate series from integer coefficients; extra entries are dropped
    /// and missing ones are zero.
    pub fn from_integers(coeffs: &[i64], order: usize) -> Self {
        let mut s = Self::zero(order);
        for (k, c) in coeffs.iter().enumerate().take(order + 1) {
            s.coeffs[k] = ParamPoly::constant(ExactRational::from_integer(*c));
        }
        s
    }

    pub fn from_coeffs(mut coeffs: Vec<ParamPoly>, order: usize) -> Self {
        coeffs.resize(order + 1, ParamPoly::zero());
        QSeries { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, n: usize) -> &ParamPoly {
        &self.coeffs[n]
    }

    pub fn coeffs(&self) -> &[ParamPoly] {
        &self.coeffs
    }

    pub fn set_coeff(&mut self, n: usize, c: ParamPoly) {
        if n <= self.order() {
            self.coeffs[n] = c;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(ParamPoly::is_zero)
    }

    /// Lowest power with a nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// Drops coefficients above `order` (which must not exceed the current one).
    pub fn truncate(&self, order: usize) -> Result<QSeries> {
        if order > self.order() {
            return usage(format!(
                "cannot raise order {} to {order} by truncation",
                self.order()
            ));
        }
        Ok(QSeries {
            coeffs: self.coeffs[..=order].to_vec(),
        })
    }

    /// Divides by `q^k`, which must divide the series; the order drops by `k`.
    pub fn shift_down(&self, k: usize) -> Result<QSeries> {
        if k > self.order() {
            return usage(format!("shift {k} exceeds order {}", self.order()));
        }
        if self.coeffs[..k].iter().any(|c| !c.is_zero()) {
            return domain(format!("series is not divisible by q^{k}"));
        }
        Ok(QSeries {
            coeffs: self.coeffs[k..].to_vec(),
        })
    }

    /// Multiplies by `q^k` keeping the order.
    pub fn shift_up(&self, k: usize) -> QSeries {
        let n = self.order();
        let mut out = Self::zero(n);
        for (i, c) in self.coeffs.iter().enumerate() {
            if i + k > n {
                break;
            }
            out.coeffs[i + k] = c.clone();
        }
        out
    }

    fn check_order(&self, other: &QSeries) -> Result<()> {
        if self.order() != other.order() {
            return usage(format!(
                "order mismatch: {} vs {}",
                self.order(),
                other.order()
            ));
        }
        Ok(())
    }

    pub fn checked_add(&self, rhs: &QSeries) -> Result<QSeries> {
        series_arith(self, rhs, ArithOp::Add)
    }

    pub fn checked_sub(&self, rhs: &QSeries) -> Result<QSeries> {
        series_arith(self, rhs, ArithOp::Sub)
    }

    pub fn checked_mul(&self, rhs: &QSeries) -> Result<QSeries> {
        series_arith(self, rhs, ArithOp::Mul)
    }

    fn add_unchecked(&self, rhs: &QSeries) -> QSeries {
        QSeries {
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(x, y)| x + y)
                .collect(),
        }
    }

    fn sub_unchecked(&self, rhs: &QSeries) -> QSeries {
        QSeries {
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(x, y)| x - y)
                .collect(),
        }
    }

    fn mul_unchecked(&self, rhs: &QSeries) -> QSeries {
        let n = self.order();
        let mut out = Self::zero(n);
        // Sparse on both sides: catalog partials are mostly a few terms wide.
        let right: Vec<(usize, &ParamPoly)> = rhs
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .collect();
        for (i, x) in self.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for &(j, y) in &right {
                if i + j > n {
                    break;
                }
                out.coeffs[i + j].add_mul(x, y);
            }
        }
        out
    }

    /// Multiplies every coefficient by a parameter polynomial.
    pub fn scale(&self, c: &ParamPoly) -> QSeries {
        QSeries {
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    pub fn scale_rational(&self, c: &ExactRational) -> QSeries {
        QSeries {
            coeffs: self.coeffs.iter().map(|x| x.scale(c)).collect(),
        }
    }

    /// Multiplicative inverse up to the series order.
    ///
    /// The constant term must be a nonzero rational without parameters.
    pub fn inverse(&self) -> Result<QSeries> {
        let c0 = match self.coeffs[0].as_constant() {
            Some(c) if !c.is_zero() => c,
            _ => return domain(format!("constant term {} is not a unit", self.coeffs[0])),
        };
        let inv0 = c0.recip().expect("nonzero");
        let neg_inv0 = -&inv0;
        let n = self.order();
        let support: Vec<(usize, &ParamPoly)> = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .filter(|(_, c)| !c.is_zero())
            .collect();
        let mut out = Self::zero(n);
        out.coeffs[0] = ParamPoly::constant(inv0);
        for m in 1..=n {
            let mut acc = ParamPoly::zero();
            for &(k, s) in &support {
                if k > m {
                    break;
                }
                acc.add_mul(s, &out.coeffs[m - k]);
            }
            out.coeffs[m] = acc.scale(&neg_inv0);
        }
        Ok(out)
    }

    /// `self * other^{-1}`.
    pub fn div(&self, other: &QSeries) -> Result<QSeries> {
        self.checked_mul(&other.inverse()?)
    }

    /// Applies `q -> q^m`, dropping terms pushed past the order.
    pub fn subst_q_power(&self, m: i64) -> Result<QSeries> {
        if m <= 0 {
            return usage(format!("q -> q^{m} needs a positive power"));
        }
        let m = m as usize;
        let n = self.order();
        let mut out = Self::zero(n);
        for (i, c) in self.coeffs.iter().enumerate() {
            match i.checked_mul(m) {
                Some(k) if k <= n => out.coeffs[k] = c.clone(),
                _ => break,
            }
        }
        Ok(out)
    }

    /// Applies `param -> param * q^m`: the monomial `x^i q^n` becomes
    /// `x^i q^(n + m*i)`.
    pub fn subst_param_qshift(&self, param: Param, m: i64) -> Result<QSeries> {
        let n = self.order() as i64;
        let mut out = Self::zero(self.order());
        for (i, c) in self.coeffs.iter().enumerate() {
            for (e, x) in c.terms() {
                let target = i as i64 + m * e.get(param) as i64;
                if target < 0 {
                    return domain(format!(
                        "{} -> {}q^{m} sends q^{i} {}^{} to a negative q-power",
                        param.name(),
                        param.name(),
                        param.name(),
                        e.get(param)
                    ));
                }
                if target <= n {
                    out.coeffs[target as usize].add_term(*e, x);
                }
            }
        }
        Ok(out)
    }

    /// Substitutes `param -> coeff * a^e.a b^e.b c^e.c` (a Laurent monomial,
    /// possibly in other parameters).
    pub fn subst_param_monomial(
        &self,
        param: Param,
        coeff: &ExactRational,
        image: Exponents,
    ) -> Result<QSeries> {
        let mut out = Self::zero(self.order());
        for (i, c) in self.coeffs.iter().enumerate() {
            for (e, x) in c.terms() {
                let k = e.get(param);
                let f = match coeff.pow(k) {
                    Some(f) => f,
                    None => return domain(format!("{} -> 0 under negative power", param.name())),
                };
                let mut base = *e;
                *base.get_mut(param) = 0;
                let exps = Exponents::new(
                    base.a + k * image.a,
                    base.b + k * image.b,
                    base.c + k * image.c,
                );
                out.coeffs[i].add_term(exps, &(x * &f));
            }
        }
        Ok(out)
    }

    /// Coefficient of `a^ea b^eb q^n` (with `c^0`).
    pub fn coeff_extract(&self, n: usize, ea: i32, eb: i32) -> Result<ExactRational> {
        self.coeff_extract3(n, Exponents::new(ea, eb, 0))
    }

    pub fn coeff_extract3(&self, n: usize, exps: Exponents) -> Result<ExactRational> {
        if n > self.order() {
            return usage(format!("q^{n} is beyond order {}", self.order()));
        }
        Ok(self.coeffs[n].coeff(exps))
    }

    /// Substitutes rational values for parameters.
    pub fn specialize(&self, values: &[(Param, ExactRational)]) -> Result<QSeries> {
        Ok(QSeries {
            coeffs: self
                .coeffs
                .iter()
                .map(|c| c.specialize(values))
                .collect::<Result<_>>()?,
        })
    }

    /// Rewrites parameter exponents coefficientwise.
    pub fn map_exponents(&self, f: impl Fn(Exponents) -> Exponents) -> QSeries {
        QSeries {
            coeffs: self.coeffs.iter().map(|c| c.map_exponents(&f)).collect(),
        }
    }

    /// Rewrites every parameter monomial `(exponents, coefficient)`.
    pub fn map_terms(
        &self,
        f: impl Fn(Exponents, &ExactRational) -> (Exponents, ExactRational),
    ) -> QSeries {
        QSeries {
            coeffs: self
                .coeffs
                .iter()
                .map(|c| ParamPoly::from_terms(c.terms().map(|(e, x)| f(*e, x))))
                .collect(),
        }
    }

    /// Keeps only the parameter monomials accepted by `keep`.
    pub fn filter_terms(&self, keep: impl Fn(&Exponents) -> bool) -> QSeries {
        let mut out = self.clone();
        for c in &mut out.coeffs {
            c.retain(&keep);
        }
        out
    }

    pub fn is_polynomial_in_params(&self) -> bool {
        self.coeffs.iter().all(ParamPoly::is_polynomial)
    }

    /// Rational coefficients of a parameter-free series.
    pub fn rational_coeffs(&self) -> Option<Vec<ExactRational>> {
        self.coeffs.iter().map(ParamPoly::as_constant).collect()
    }
}

impl std::fmt::Debug for QSeries {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "[{c}]q^{i}")?;
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(q^{})", self.order() + 1)
    }
}

// The operator forms panic on mismatched orders; use the `checked_*` methods
// (or `series_arith`) when the orders are not known to agree.
macro_rules! series_op {
    ($tr:ident, $m:ident, $inner:ident) => {
        impl $tr<&QSeries> for &QSeries {
            type Output = QSeries;
            fn $m(self, rhs: &QSeries) -> QSeries {
                self.check_order(rhs).expect("series order mismatch");
                self.$inner(rhs)
            }
        }
        impl $tr<QSeries> for QSeries {
            type Output = QSeries;
            fn $m(self, rhs: QSeries) -> QSeries {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&QSeries> for QSeries {
            type Output = QSeries;
            fn $m(self, rhs: &QSeries) -> QSeries {
                (&self).$m(rhs)
            }
        }
        impl $tr<QSeries> for &QSeries {
            type Output = QSeries;
            fn $m(self, rhs: QSeries) -> QSeries {
                self.$m(&rhs)
            }
        }
    };
}
series_op!(Add, add, add_unchecked);
series_op!(Sub, sub, sub_unchecked);
series_op!(Mul, mul, mul_unchecked);

impl Neg for &QSeries {
    type Output = QSeries;
    fn neg(self) -> QSeries {
        QSeries {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for QSeries {
    type Output = QSeries;
    fn neg(self) -> QSeries {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(s: &QSeries) -> Vec<i64> {
        s.rational_coeffs()
            .unwrap()
            .iter()
            .map(|c| {
                assert!(c.is_integer());
                c.to_f64() as i64
            })
            .collect()
    }

    fn a() -> ParamPoly {
        ParamPoly::param(Param::A)
    }

    fn b() -> ParamPoly {
        ParamPoly::param(Param::B)
    }

    #[test]
    fn cancellation() {
        let n = 5;
        let x = QSeries::from_integers(&[1, 1], n);
        let y = QSeries::from_integers(&[1, -1], n);
        assert_eq!(&x + &y, QSeries::from_integers(&[2], n));
    }

    #[test]
    fn telescoping_product() {
        let n = 9;
        let geo = QSeries::from_integers(&[1; 10], n);
        let one_minus_q = QSeries::from_integers(&[1, -1], n);
        assert_eq!(&one_minus_q * &geo, QSeries::one(n));
    }

    #[test]
    fn parametric_expansion() {
        let n = 4;
        let x = &QSeries::one(n) + &QSeries::monomial(a(), 1, n);
        let y = &QSeries::one(n) + &QSeries::monomial(b(), 1, n);
        let p = &x * &y;
        assert_eq!(p.coeff(0), &ParamPoly::one());
        assert_eq!(p.coeff(1), &(&a() + &b()));
        assert_eq!(p.coeff(2), &(&a() * &b()));
        assert!(p.coeff(3).is_zero());
    }

    #[test]
    fn order_mismatch_is_usage_error() {
        let x = QSeries::one(3);
        let y = QSeries::one(4);
        for op in [ArithOp::Add, ArithOp::Sub, ArithOp::Mul] {
            assert!(matches!(
                series_arith(&x, &y, op),
                Err(crate::QfracError::Usage(_))
            ));
        }
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(QSeries::one(6).inverse().unwrap(), QSeries::one(6));
        let inv = QSeries::from_integers(&[1, -1], 6).inverse().unwrap();
        assert_eq!(ints(&inv), vec![1; 7]);
        let inv = QSeries::from_rational(ExactRational::new(-2, 3), 3)
            .inverse()
            .unwrap();
        assert_eq!(inv, QSeries::from_rational(ExactRational::new(-3, 2), 3));
    }

    #[test]
    fn inverse_rejects_non_units() {
        let s = QSeries::from_integers(&[0, 1], 4);
        assert!(matches!(s.inverse(), Err(crate::QfracError::Domain(_))));
        let s = &QSeries::one(4) + &QSeries::param(Param::A, 4);
        assert!(matches!(s.inverse(), Err(crate::QfracError::Domain(_))));
    }

    #[test]
    fn q_power_substitution() {
        let s = QSeries::from_integers(&[1, 1], 4).subst_q_power(2).unwrap();
        assert_eq!(ints(&s), vec![1, 0, 1, 0, 0]);
        let s = QSeries::from_integers(&[1, 1, 1], 4)
            .subst_q_power(3)
            .unwrap();
        assert_eq!(ints(&s), vec![1, 0, 0, 1, 0]);
        assert!(QSeries::one(4).subst_q_power(0).is_err());
        assert!(QSeries::one(4).subst_q_power(-1).is_err());
    }

    #[test]
    fn param_qshift_examples() {
        let n = 6;
        let s = QSeries::monomial(a(), 2, n)
            .subst_param_qshift(Param::A, 1)
            .unwrap();
        assert_eq!(s, QSeries::monomial(a(), 3, n));

        let s = (&QSeries::one(n) + &QSeries::param(Param::A, n))
            .subst_param_qshift(Param::A, 1)
            .unwrap();
        assert_eq!(s, &QSeries::one(n) + &QSeries::monomial(a(), 1, n));

        let a2 = &a() * &a();
        let s = QSeries::monomial(a2.clone(), 1, n)
            .subst_param_qshift(Param::A, 1)
            .unwrap();
        assert_eq!(s, QSeries::monomial(a2, 3, n));

        let s = QSeries::param(Param::B, n);
        assert!(matches!(
            s.subst_param_qshift(Param::B, -1),
            Err(crate::QfracError::Domain(_))
        ));
    }

    #[test]
    fn extract_and_specialize() {
        let n = 3;
        let s = &QSeries::one(n) + &QSeries::monomial(a(), 1, n);
        assert_eq!(s.coeff_extract(1, 1, 0).unwrap(), ExactRational::one());
        assert!(s.coeff_extract(4, 0, 0).is_err());
        let z = s.specialize(&[(Param::A, ExactRational::zero())]).unwrap();
        assert_eq!(z, QSeries::one(n));

        let n = 5;
        let f1 = &QSeries::one(n) + &QSeries::monomial(b(), 1, n);
        let f3 = &QSeries::one(n) + &QSeries::monomial(b(), 3, n);
        let s = (&f1 * &f3)
            .specialize(&[(Param::B, ExactRational::one())])
            .unwrap();
        assert_eq!(ints(&s), vec![1, 1, 0, 1, 1, 0]);
    }

    #[test]
    fn shifts() {
        let s = QSeries::from_integers(&[0, 0, 3, 4], 5);
        assert_eq!(ints(&s.shift_down(2).unwrap()), vec![3, 4, 0, 0]);
        assert!(s.shift_down(3).is_err());
        assert_eq!(ints(&s.shift_up(2)), vec![0, 0, 0, 0, 3, 4]);
    }
}
