//! Laurent polynomials in the fixed parameters `a`, `b`, `c`.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::rational::ExactRational;
use crate::error::{domain, Result};

/// One of the three formal parameters carried by series coefficients.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Param {
    A,
    B,
    C,
}

impl Param {
    pub const ALL: [Param; 3] = [Param::A, Param::B, Param::C];

    pub fn name(self) -> &'static str {
        match self {
            Param::A => "a",
            Param::B => "b",
            Param::C => "c",
        }
    }
}

/// Exponent vector `(e_a, e_b, e_c)`. Ordered lexicographically, which is the
/// order mismatches are reported in.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Exponents {
    pub a: i32,
    pub b: i32,
    pub c: i32,
}

impl Exponents {
    pub const ZERO: Exponents = Exponents { a: 0, b: 0, c: 0 };

    pub fn new(a: i32, b: i32, c: i32) -> Self {
        Exponents { a, b, c }
    }

    pub fn of(param: Param, e: i32) -> Self {
        let mut x = Self::ZERO;
        *x.get_mut(param) = e;
        x
    }

    pub fn get(&self, param: Param) -> i32 {
        match param {
            Param::A => self.a,
            Param::B => self.b,
            Param::C => self.c,
        }
    }

    pub fn get_mut(&mut self, param: Param) -> &mut i32 {
        match param {
            Param::A => &mut self.a,
            Param::B => &mut self.b,
            Param::C => &mut self.c,
        }
    }

    pub fn is_nonnegative(&self) -> bool {
        self.a >= 0 && self.b >= 0 && self.c >= 0
    }
}

impl Add for Exponents {
    type Output = Exponents;
    fn add(self, o: Exponents) -> Exponents {
        Exponents::new(self.a + o.a, self.b + o.b, self.c + o.c)
    }
}

/// Sparse Laurent polynomial: exponent vector -> nonzero rational.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct ParamPoly {
    terms: BTreeMap<Exponents, ExactRational>,
}

impl ParamPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(ExactRational::one())
    }

    pub fn constant(c: ExactRational) -> Self {
        Self::monomial(c, Exponents::ZERO)
    }

    pub fn monomial(c: ExactRational, exps: Exponents) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exps, c);
        }
        ParamPoly { terms }
    }

    /// The bare symbol `a`, `b` or `c`.
    pub fn param(p: Param) -> Self {
        Self::monomial(ExactRational::one(), Exponents::of(p, 1))
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Exponents, ExactRational)>) -> Self {
        let mut out = ParamPoly::zero();
        for (e, c) in terms {
            out.add_term(e, &c);
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// `Some(c)` when the polynomial is a parameter-free constant (zero included).
    pub fn as_constant(&self) -> Option<ExactRational> {
        match self.terms.len() {
            0 => Some(ExactRational::zero()),
            1 => self.terms.get(&Exponents::ZERO).cloned(),
            _ => None,
        }
    }

    pub fn coeff(&self, exps: Exponents) -> ExactRational {
        self.terms.get(&exps).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &ExactRational)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, exps: Exponents, c: &ExactRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exps) {
            Entry::Vacant(v) => {
                v.insert(c.clone());
            }
            Entry::Occupied(mut o) => {
                let s = o.get() + c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    /// `self += x * y`, the inner kernel of series multiplication.
    pub fn add_mul(&mut self, x: &ParamPoly, y: &ParamPoly) {
        for (ex, cx) in &x.terms {
            for (ey, cy) in &y.terms {
                self.add_term(*ex + *ey, &(cx * cy));
            }
        }
    }

    pub fn scale(&self, c: &ExactRational) -> ParamPoly {
        if c.is_zero() {
            return ParamPoly::zero();
        }
        ParamPoly {
            terms: self.terms.iter().map(|(e, x)| (*e, x * c)).collect(),
        }
    }

    /// Multiplies by the monomial `c * a^e.a b^e.b c^e.c`.
    pub fn mul_monomial(&self, c: &ExactRational, exps: Exponents) -> ParamPoly {
        if c.is_zero() {
            return ParamPoly::zero();
        }
        ParamPoly {
            terms: self.terms.iter().map(|(e, x)| (*e + exps, x * c)).collect(),
        }
    }

    /// Rewrites every exponent vector; colliding images are summed.
    pub fn map_exponents(&self, mut f: impl FnMut(Exponents) -> Exponents) -> ParamPoly {
        let mut out = ParamPoly::zero();
        for (e, c) in &self.terms {
            out.add_term(f(*e), c);
        }
        out
    }

    pub fn retain(&mut self, mut keep: impl FnMut(&Exponents) -> bool) {
        self.terms.retain(|e, _| keep(e));
    }

    pub fn min_exponent(&self, p: Param) -> Option<i32> {
        self.terms.keys().map(|e| e.get(p)).min()
    }

    pub fn max_exponent(&self, p: Param) -> Option<i32> {
        self.terms.keys().map(|e| e.get(p)).max()
    }

    pub fn is_polynomial(&self) -> bool {
        self.terms.keys().all(Exponents::is_nonnegative)
    }

    /// Substitutes rational values for some parameters; unassigned ones stay
    /// symbolic. Fails on a negative power of a parameter assigned zero.
    pub fn specialize(&self, values: &[(Param, ExactRational)]) -> Result<ParamPoly> {
        let mut out = ParamPoly::zero();
        for (e, c) in &self.terms {
            let mut coef = c.clone();
            let mut exps = *e;
            for (p, v) in values {
                let k = exps.get(*p);
                match v.pow(k) {
                    Some(f) => coef = &coef * &f,
                    None => return domain(format!("{}^{k} with {} = 0", p.name(), p.name())),
                }
                *exps.get_mut(*p) = 0;
            }
            out.add_term(exps, &coef);
        }
        Ok(out)
    }
}

impl fmt::Display for ParamPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c})")?;
            for p in Param::ALL {
                match e.get(p) {
                    0 => {}
                    1 => write!(f, "*{}", p.name())?,
                    k => write!(f, "*{}^{k}", p.name())?,
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for ParamPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Add for &ParamPoly {
    type Output = ParamPoly;
    fn add(self, rhs: &ParamPoly) -> ParamPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, c);
        }
        out
    }
}

impl Sub for &ParamPoly {
    type Output = ParamPoly;
    fn sub(self, rhs: &ParamPoly) -> ParamPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, &-c);
        }
        out
    }
}

impl Mul for &ParamPoly {
    type Output = ParamPoly;
    fn mul(self, rhs: &ParamPoly) -> ParamPoly {
        let mut out = ParamPoly::zero();
        out.add_mul(self, rhs);
        out
    }
}

impl Neg for &ParamPoly {
    type Output = ParamPoly;
    fn neg(self) -> ParamPoly {
        ParamPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> ExactRational {
        ExactRational::from_integer(n)
    }

    #[test]
    fn no_zero_terms_survive() {
        let a = ParamPoly::param(Param::A);
        let d = &a - &a;
        assert!(d.is_zero());
        assert_eq!(d.as_constant(), Some(ExactRational::zero()));
    }

    #[test]
    fn laurent_product_clears_negative_exponents() {
        let inv_a_b = ParamPoly::monomial(q(1), Exponents::new(-1, 1, 0));
        let a = ParamPoly::param(Param::A);
        let p = &inv_a_b * &a;
        assert_eq!(p, ParamPoly::param(Param::B));
        assert!(p.is_polynomial());
        assert!(!inv_a_b.is_polynomial());
    }

    #[test]
    fn specialize_rejects_zero_to_negative_power() {
        let p = ParamPoly::monomial(q(3), Exponents::new(-1, 0, 0));
        assert!(p.specialize(&[(Param::A, q(0))]).is_err());
        let p = ParamPoly::monomial(q(3), Exponents::new(2, 1, 0));
        let s = p
            .specialize(&[(Param::A, ExactRational::new(1, 2))])
            .unwrap();
        assert_eq!(
            s,
            ParamPoly::monomial(ExactRational::new(3, 4), Exponents::new(0, 1, 0))
        );
    }
}
