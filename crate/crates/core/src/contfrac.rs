//! Finite continued fractions over the truncated series ring.
//!
//! A [`CFSpec`] stands for
//!
//! ```text
//! b0 + a1 / (b1 + a2 / (b2 + ... + aD / bD))
//! ```
//!
//! and its convergents `P_n / Q_n` come from the three-term recurrence
//! `P_n = b_n P_{n-1} + a_n P_{n-2}` (likewise `Q`), seeded with
//! `P_{-1} = 1, P_0 = b0, Q_{-1} = 0, Q_0 = 1`.

use std::fmt;
use std::str::FromStr;

use crate::error::{domain, usage, QfracError, Result};
use crate::qseries::{ExactRational, Param, ParamPoly, QSeries};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CFSpec {
    b0: QSeries,
    partials: Vec<(QSeries, QSeries)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConvergentPair {
    pub p: QSeries,
    pub q: QSeries,
    pub depth: usize,
}

impl CFSpec {
    /// All series must share the order of `b0`.
    pub fn new(b0: QSeries, partials: Vec<(QSeries, QSeries)>) -> Result<Self> {
        let n = b0.order();
        if partials
            .iter()
            .any(|(a, b)| a.order() != n || b.order() != n)
        {
            return usage("continued fraction components must share one order");
        }
        Ok(CFSpec { b0, partials })
    }

    pub fn order(&self) -> usize {
        self.b0.order()
    }

    pub fn depth(&self) -> usize {
        self.partials.len()
    }

    pub fn b0(&self) -> &QSeries {
        &self.b0
    }

    /// `(a_k, b_k)` for `k = 1..=depth` (stored zero-based).
    pub fn partials(&self) -> &[(QSeries, QSeries)] {
        &self.partials
    }

    pub fn truncate_depth(&self, depth: usize) -> CFSpec {
        CFSpec {
            b0: self.b0.clone(),
            partials: self.partials[..depth.min(self.depth())].to_vec(),
        }
    }

    /// Applies a ring map to every component (e.g. a parameter substitution).
    pub fn map_series(&self, f: impl Fn(&QSeries) -> Result<QSeries>) -> Result<CFSpec> {
        let b0 = f(&self.b0)?;
        let partials = self
            .partials
            .iter()
            .map(|(a, b)| Ok((f(a)?, f(b)?)))
            .collect::<Result<Vec<_>>>()?;
        CFSpec::new(b0, partials)
    }

    /// Lazily yields the convergents of depth `0..=depth`.
    pub fn convergents(&self) -> Convergents<'_> {
        Convergents {
            cf: self,
            next: 0,
            prev: None,
            cur: None,
        }
    }
}

/// Iterator over [`ConvergentPair`]s, one recurrence step per item.
pub struct Convergents<'a> {
    cf: &'a CFSpec,
    next: usize,
    prev: Option<(QSeries, QSeries)>,
    cur: Option<(QSeries, QSeries)>,
}

impl Iterator for Convergents<'_> {
    type Item = ConvergentPair;

    fn next(&mut self) -> Option<ConvergentPair> {
        let n = self.cf.order();
        let depth = self.next;
        if depth > self.cf.depth() {
            return None;
        }
        let (p, q) = match depth {
            0 => {
                self.prev = Some((QSeries::one(n), QSeries::zero(n)));
                (self.cf.b0.clone(), QSeries::one(n))
            }
            k => {
                let (a, b) = &self.cf.partials[k - 1];
                let (pp, qp) = self.prev.as_ref().expect("seeded");
                let (pc, qc) = self.cur.as_ref().expect("seeded");
                (b * pc + a * pp, b * qc + a * qp)
            }
        };
        if depth > 0 {
            self.prev = self.cur.take();
        }
        self.cur = Some((p.clone(), q.clone()));
        self.next += 1;
        Some(ConvergentPair { p, q, depth })
    }
}

/// `P_n, Q_n` of the depth-`n` truncation.
pub fn convergent(cf: &CFSpec, n: usize) -> Result<ConvergentPair> {
    if n > cf.depth() {
        return usage(format!(
            "depth {n} exceeds continued fraction depth {}",
            cf.depth()
        ));
    }
    Ok(cf.convergents().nth(n).expect("n <= depth"))
}

/// Euler's continued fraction for `a0 + a0 a1 + ... + a0 a1 ... an`:
///
/// ```text
/// a0 / (1 - a1 / (1 + a1 - a2 / (1 + a2 - ... - an / (1 + an))))
/// ```
///
/// Stored with `b0 = 0` and first partial `(a0, 1)`, so the convergent of
/// depth `k + 1` equals the partial sum through `a0 ... ak`.
pub fn euler_cf_from_terms(terms: &[QSeries]) -> Result<CFSpec> {
    let Some(first) = terms.first() else {
        return usage("Euler continued fraction needs at least one term");
    };
    let n = first.order();
    let one = QSeries::one(n);
    let mut partials = vec![(first.clone(), one.clone())];
    for t in &terms[1..] {
        partials.push((-t, &one + t));
    }
    CFSpec::new(QSeries::zero(n), partials)
}

/// [`euler_cf_from_terms`] over plain rationals (order-0 series).
pub fn euler_cf_from_rationals(terms: &[ExactRational]) -> Result<CFSpec> {
    let series: Vec<QSeries> = terms
        .iter()
        .map(|t| QSeries::from_rational(t.clone(), 0))
        .collect();
    euler_cf_from_terms(&series)
}

fn is_unit(s: &QSeries) -> bool {
    matches!(s.coeff(0).as_constant(), Some(c) if !c.is_zero())
}

/// Rescales level `k` by `c_k`: `a_k -> c_k c_{k-1} a_k`, `b_k -> c_k b_k`
/// with `c_0 = 1`. Every convergent ratio is unchanged.
pub fn equivalence_transform(cf: &CFSpec, scales: &[QSeries]) -> Result<CFSpec> {
    if scales.len() != cf.depth() {
        return usage(format!(
            "{} scales for a continued fraction of depth {}",
            scales.len(),
            cf.depth()
        ));
    }
    if let Some(k) = scales.iter().position(|c| !is_unit(c)) {
        return domain(format!("scale c_{} is not invertible", k + 1));
    }
    let mut prev = QSeries::one(cf.order());
    let mut partials = Vec::with_capacity(cf.depth());
    for ((a, b), c) in cf.partials.iter().zip(scales) {
        let a = c.checked_mul(&prev)?.checked_mul(a)?;
        let b = c.checked_mul(b)?;
        partials.push((a, b));
        prev = c.clone();
    }
    CFSpec::new(cf.b0.clone(), partials)
}

/// Depth guard used by [`eval_series`]: `N + 8`.
pub fn default_depth_guard(order: usize) -> usize {
    order + 8
}

/// The limiting series of an infinite continued fraction, truncated at `order`.
///
/// Walks the convergents and stops at the first depth `n` whose convergent
/// agrees with depth `n + 1` through `q^order`. With unit denominators that
/// is exactly when `a_1 a_2 ... a_{n+1}` vanishes to that order, since
/// `P_{n+1}/Q_{n+1} - P_n/Q_n = (-1)^n a_1...a_{n+1} / (Q_n Q_{n+1})`.
pub fn eval_series(cf: &CFSpec, order: usize) -> Result<QSeries> {
    eval_series_depth(cf, order).map(|(s, _)| s)
}

/// [`eval_series`] that also returns the depth at which the value stabilised.
pub fn eval_series_depth(cf: &CFSpec, order: usize) -> Result<(QSeries, usize)> {
    let cf = if order < cf.order() {
        cf.map_series(|s| s.truncate(order))?
    } else if order > cf.order() {
        return usage(format!(
            "order {order} exceeds the continued fraction's order {}",
            cf.order()
        ));
    } else {
        cf.clone()
    };
    let guard = default_depth_guard(order).min(cf.depth());
    let mut running = QSeries::one(order);
    for conv in cf.convergents() {
        let n = conv.depth;
        if !is_unit(&conv.q) {
            return domain(format!("denominator Q_{n} has no unit constant term"));
        }
        if n >= guard {
            break;
        }
        running = &running * &cf.partials[n].0;
        if running.is_zero() {
            return Ok((conv.p.div(&conv.q)?, n));
        }
    }
    Err(QfracError::Convergence(format!(
        "no stabilisation at order {order} within depth {guard}"
    )))
}

/// Value `P_D / Q_D` of the full-depth fraction, `Q_D` a unit.
pub fn eval_ratio(cf: &CFSpec) -> Result<QSeries> {
    let last = convergent(cf, cf.depth())?;
    last.p.div(&last.q)
}

/// Value of a finite continued fraction whose final denominator may carry a
/// power of `q`.
///
/// `build(order)` must construct the same fraction at any working order. If
/// `Q_D = q^v * (unit)` the fraction is rebuilt at order `order + v`, both
/// `P_D` and `Q_D` are divided by `q^v`, and the quotient is returned. Fails
/// if `P_D` is not divisible by `q^v` (the value is then not a power series).
pub fn eval_finite_with(build: impl Fn(usize) -> Result<CFSpec>, order: usize) -> Result<QSeries> {
    let mut work = order;
    loop {
        let cf = build(work)?;
        let last = convergent(&cf, cf.depth())?;
        match last.q.valuation() {
            None => {
                // Q_D vanishes through q^work; look further out.
                work = work.saturating_mul(2).max(work + 16);
                if work > 1 << 20 {
                    return domain("final denominator vanishes identically");
                }
            }
            Some(v) if order + v <= work => {
                let p = last.p.shift_down(v)?.truncate(order)?;
                let q = last.q.shift_down(v)?.truncate(order)?;
                return p.div(&q);
            }
            Some(v) => work = order + v,
        }
    }
}

/// Keys of the continued fractions the catalog knows how to build.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CatalogCf {
    /// `1 + bq/(1 + aq + bq^2/(1 + aq^2 + ...))`
    RAb,
    /// `1 + a + acq/(1 + aq + acq^2/(1 + aq^2 + ...))`
    FAc,
    /// Cleared Euler fraction for `1/prod(1 - a_i)` (terms from the args).
    Thm21,
    /// Cleared Euler fraction for `prod(1 + a_i)` (terms from the args).
    Thm22,
    /// Euler's fraction straight from the terms `a_0..a_n`.
    Euler,
    /// `1/(1 - z/(1 + z - z/(2 + z - 2z/(3 + z - ...))))`, i.e. `exp(z)`.
    Exp,
    /// `2z/(1 - z^2/(3 + z^2 - 9z^2/(5 + 3z^2 - ...)))`, i.e. `log((1+z)/(1-z))`.
    Log,
    /// `1 + bq/(1 + q^2 + bq^3/(1 + q^4 + ...))`
    RbQ2,
    /// `1 + q + q^2/(1 + q^3 + q^4/(1 + q^5 + q^6/(...)))`
    GordonGollnitz,
    /// `1 - ab + (a - bq)(b - aq)/((1 - ab)(1 + q^2) + ...)`
    ThreeParam,
}

impl CatalogCf {
    pub const ALL: [CatalogCf; 10] = [
        CatalogCf::RAb,
        CatalogCf::FAc,
        CatalogCf::Thm21,
        CatalogCf::Thm22,
        CatalogCf::Euler,
        CatalogCf::Exp,
        CatalogCf::Log,
        CatalogCf::RbQ2,
        CatalogCf::GordonGollnitz,
        CatalogCf::ThreeParam,
    ];

    pub fn key(self) -> &'static str {
        match self {
            CatalogCf::RAb => "R_AB",
            CatalogCf::FAc => "F_AC",
            CatalogCf::Thm21 => "THM_2_1",
            CatalogCf::Thm22 => "THM_2_2",
            CatalogCf::Euler => "EULER",
            CatalogCf::Exp => "EXP",
            CatalogCf::Log => "LOG",
            CatalogCf::RbQ2 => "R1B_Q2",
            CatalogCf::GordonGollnitz => "GORDON_GOLLNITZ_38",
            CatalogCf::ThreeParam => "THREE_PARAM",
        }
    }

    /// Whether the fraction is built from explicit terms rather than a depth.
    pub fn uses_terms(self) -> bool {
        matches!(self, CatalogCf::Thm21 | CatalogCf::Thm22 | CatalogCf::Euler)
    }
}

impl fmt::Display for CatalogCf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.key())
    }
}

impl FromStr for CatalogCf {
    type Err = QfracError;

    fn from_str(s: &str) -> Result<Self> {
        CatalogCf::ALL
            .into_iter()
            .find(|c| c.key().eq_ignore_ascii_case(s))
            .ok_or_else(|| {
                let keys: Vec<_> = CatalogCf::ALL.iter().map(|c| c.key()).collect();
                QfracError::Usage(format!(
                    "unknown continued fraction `{s}`; expected one of {}",
                    keys.join(", ")
                ))
            })
    }
}

/// Parameter values and term lists for [`build_catalog_cf`].
///
/// A `None` parameter stays symbolic.
#[derive(Clone, Debug, Default)]
pub struct CfArgs {
    pub a: Option<ExactRational>,
    pub b: Option<ExactRational>,
    pub c: Option<ExactRational>,
    /// `a_1..a_n` for the telescoping fractions, `a_0..a_n` for `EULER`.
    pub terms: Vec<QSeries>,
    /// Argument of `EXP`/`LOG`; defaults to `q`.
    pub z: Option<QSeries>,
}

impl CfArgs {
    pub fn with_a(mut self, a: impl Into<ExactRational>) -> Self {
        self.a = Some(a.into());
        self
    }

    pub fn with_b(mut self, b: impl Into<ExactRational>) -> Self {
        self.b = Some(b.into());
        self
    }

    pub fn with_terms(mut self, terms: Vec<QSeries>) -> Self {
        self.terms = terms;
        self
    }

    fn value(&self, p: Param, order: usize) -> QSeries {
        let v = match p {
            Param::A => &self.a,
            Param::B => &self.b,
            Param::C => &self.c,
        };
        match v {
            Some(x) => QSeries::from_rational(x.clone(), order),
            None => QSeries::param(p, order),
        }
    }
}

/// Constructs one of the catalog fractions to `depth` partial quotients at
/// the given series order. Term-built fractions use all of their terms,
/// capped at `depth` levels.
pub fn build_catalog_cf(
    id: CatalogCf,
    args: &CfArgs,
    depth: usize,
    order: usize,
) -> Result<CFSpec> {
    if depth == 0 && !id.uses_terms() {
        return usage("depth must be at least 1");
    }
    let n = order;
    let one = QSeries::one(n);
    let qp = |e: usize| QSeries::q_power(e, n);
    let a = args.value(Param::A, n);
    let b = args.value(Param::B, n);
    let c = args.value(Param::C, n);
    let cf = match id {
        CatalogCf::RAb => {
            let partials = (1..=depth)
                .map(|k| (&b * &qp(k), &one + &(&a * &qp(k))))
                .collect();
            CFSpec::new(one.clone(), partials)?
        }
        CatalogCf::FAc => {
            let ac = &a * &c;
            let partials = (1..=depth)
                .map(|k| (&ac * &qp(k), &one + &(&a * &qp(k))))
                .collect();
            CFSpec::new(&one + &a, partials)?
        }
        CatalogCf::Thm21 | CatalogCf::Thm22 => {
            let t = &args.terms;
            if t.is_empty() {
                return usage(format!("{id} needs at least one term"));
            }
            if t.iter().any(|x| x.order() != n) {
                return usage("terms must have the requested order");
            }
            // s = -1 clears 1/prod(1 - a_i), s = +1 clears prod(1 + a_i)
            let plus = id == CatalogCf::Thm22;
            let signed = |x: &QSeries| if plus { x.clone() } else { -x };
            let comp = |x: &QSeries| &one + &signed(x);
            let mut partials = vec![(one.clone(), one.clone())];
            partials.push((-&t[0], if plus { comp(&t[0]) } else { one.clone() }));
            for m in 1..t.len() {
                let lead = &comp(&t[m - 1]) * &t[m];
                let num = if m >= 2 { &t[m - 2] * &lead } else { lead };
                let den = &(&t[m - 1] + &t[m]) + &signed(&(&t[m - 1] * &t[m]));
                partials.push((-num, den));
            }
            CFSpec::new(QSeries::zero(n), partials)?.truncate_depth(depth.max(1))
        }
        CatalogCf::Euler => euler_cf_from_terms(&args.terms)?.truncate_depth(depth.max(1)),
        CatalogCf::Exp => {
            let z = args.z.clone().unwrap_or_else(|| qp(1));
            let mut partials = vec![(one.clone(), one.clone())];
            for k in 2..=depth {
                let num = if k == 2 {
                    -&z
                } else {
                    (-&z).scale_rational(&ExactRational::from_integer(k as i64 - 2))
                };
                let den =
                    &QSeries::from_rational(ExactRational::from_integer(k as i64 - 1), n) + &z;
                partials.push((num, den));
            }
            partials.truncate(depth.max(1));
            CFSpec::new(QSeries::zero(n), partials)?
        }
        CatalogCf::Log => {
            let z = args.z.clone().unwrap_or_else(|| qp(1));
            let z2 = &z * &z;
            let mut partials = vec![(
                z.scale_rational(&ExactRational::from_integer(2)),
                one.clone(),
            )];
            for k in 2..=depth as i64 {
                let odd = 2 * k - 3;
                let num = (-&z2).scale_rational(&ExactRational::from_integer(odd * odd));
                let den = &QSeries::from_rational(ExactRational::from_integer(2 * k - 1), n)
                    + &z2.scale_rational(&ExactRational::from_integer(odd));
                partials.push((num, den));
            }
            partials.truncate(depth.max(1));
            CFSpec::new(QSeries::zero(n), partials)?
        }
        CatalogCf::RbQ2 => {
            let partials = (1..=depth)
                .map(|k| (&b * &qp(2 * k - 1), &one + &qp(2 * k)))
                .collect();
            CFSpec::new(one.clone(), partials)?
        }
        CatalogCf::GordonGollnitz => {
            let partials = (1..=depth)
                .map(|k| (qp(2 * k), &one + &qp(2 * k + 1)))
                .collect();
            CFSpec::new(&one + &qp(1), partials)?
        }
        CatalogCf::ThreeParam => {
            let one_minus_ab = &one - &(&a * &b);
            let partials = (1..=depth)
                .map(|k| {
                    let m = 2 * k - 1;
                    let left = &a - &(&b * &qp(m));
                    let right = &b - &(&a * &qp(m));
                    (&left * &right, &one_minus_ab * &(&one + &qp(2 * k)))
                })
                .collect();
            CFSpec::new(one_minus_ab, partials)?
        }
    };
    Ok(cf)
}

/// `prod_{k=1}^{n} a_k` of the first `n` partial numerators.
pub fn partial_numerator_product(cf: &CFSpec, n: usize) -> QSeries {
    cf.partials[..n]
        .iter()
        .fold(QSeries::one(cf.order()), |acc, (a, _)| &acc * a)
}

/// `ParamPoly` helper used by tests and the identities module.
pub fn constant(c: i64, order: usize) -> QSeries {
    QSeries::constant(ParamPoly::constant(ExactRational::from_integer(c)), order)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64, d: i64) -> ExactRational {
        ExactRational::new(n, d)
    }

    fn value(cf: &CFSpec, depth: usize) -> ExactRational {
        let c = convergent(cf, depth).unwrap();
        let p = c.p.coeff(0).as_constant().unwrap();
        let q = c.q.coeff(0).as_constant().unwrap();
        &p / &q
    }

    #[test]
    fn depth_zero_is_leading_term() {
        let cf = build_catalog_cf(CatalogCf::RAb, &CfArgs::default(), 3, 4).unwrap();
        let c = convergent(&cf, 0).unwrap();
        assert_eq!(c.p, QSeries::one(4));
        assert_eq!(c.q, QSeries::one(4));
        assert!(convergent(&cf, 4).is_err());
    }

    #[test]
    fn euler_small_cases() {
        let cf = euler_cf_from_rationals(&[rat(3, 7)]).unwrap();
        assert_eq!(value(&cf, 1), rat(3, 7));
        let (a0, a1) = (rat(2, 5), rat(-4, 3));
        let cf = euler_cf_from_rationals(&[a0.clone(), a1.clone()]).unwrap();
        assert_eq!(value(&cf, 2), &a0 + &(&a0 * &a1));
        assert!(euler_cf_from_terms(&[]).is_err());
    }

    #[test]
    fn exp_convergents_are_taylor_partial_sums() {
        let z = rat(3, 2);
        let args = CfArgs {
            z: Some(QSeries::from_rational(z.clone(), 0)),
            ..Default::default()
        };
        let cf = build_catalog_cf(CatalogCf::Exp, &args, 12, 0).unwrap();
        let mut sum = ExactRational::zero();
        let mut term = ExactRational::one();
        for k in 0..12 {
            sum = &sum + &term;
            assert_eq!(value(&cf, k + 1), sum, "depth {}", k + 1);
            term = &(&term * &z) / &ExactRational::from_integer(k as i64 + 1);
        }
    }

    #[test]
    fn log_convergents_are_arctanh_partial_sums() {
        let z = rat(1, 3);
        let args = CfArgs {
            z: Some(QSeries::from_rational(z.clone(), 0)),
            ..Default::default()
        };
        let cf = build_catalog_cf(CatalogCf::Log, &args, 10, 0).unwrap();
        let z2 = &z * &z;
        let mut sum = ExactRational::zero();
        let mut pow = ExactRational::one();
        for k in 0..10i64 {
            sum = &sum + &(&pow / &ExactRational::from_integer(2 * k + 1));
            pow = &pow * &z2;
            let want = &(&z * &ExactRational::from_integer(2)) * &sum;
            assert_eq!(value(&cf, k as usize + 1), want);
        }
    }

    #[test]
    fn exp_cleared_matches_uncleared_euler_form() {
        // Euler terms 1, z/1, z/2, z/3, ... and the clearing scales 1, 1, 1, 2, 3, ...
        let z = QSeries::q_power(1, 6);
        let mut terms = vec![QSeries::one(6)];
        for k in 1..6i64 {
            terms.push(z.scale_rational(&rat(1, k)));
        }
        let raw = euler_cf_from_terms(&terms).unwrap();
        let scales: Vec<QSeries> = (1..=raw.depth() as i64)
            .map(|k| constant((k - 1).max(1), 6))
            .collect();
        let cleared = equivalence_transform(&raw, &scales).unwrap();
        let built = build_catalog_cf(
            CatalogCf::Exp,
            &CfArgs {
                z: Some(z),
                ..Default::default()
            },
            raw.depth(),
            6,
        )
        .unwrap();
        assert_eq!(cleared, built);
    }

    #[test]
    fn equivalence_transform_rejects_non_units() {
        let cf = build_catalog_cf(CatalogCf::RAb, &CfArgs::default(), 2, 3).unwrap();
        let bad = vec![QSeries::one(3), QSeries::q_power(1, 3)];
        assert!(matches!(
            equivalence_transform(&cf, &bad),
            Err(QfracError::Domain(_))
        ));
        let same = equivalence_transform(&cf, &[QSeries::one(3), QSeries::one(3)]).unwrap();
        assert_eq!(same, cf);
    }

    #[test]
    fn r_ab_partials() {
        let cf =
            build_catalog_cf(CatalogCf::RAb, &CfArgs::default().with_a(0).with_b(1), 4, 8).unwrap();
        for (k, (a, b)) in cf.partials().iter().enumerate() {
            assert_eq!(a, &QSeries::q_power(k + 1, 8));
            assert_eq!(b, &QSeries::one(8));
        }
    }

    #[test]
    fn vanishing_partials_stabilise_immediately() {
        let cf = build_catalog_cf(
            CatalogCf::RAb,
            &CfArgs::default().with_a(0).with_b(0),
            20,
            12,
        )
        .unwrap();
        assert_eq!(eval_series(&cf, 12).unwrap(), QSeries::one(12));
    }

    #[test]
    fn shallow_fraction_fails_to_stabilise() {
        let cf = build_catalog_cf(CatalogCf::RAb, &CfArgs::default(), 3, 12).unwrap();
        assert!(matches!(
            eval_series(&cf, 12),
            Err(QfracError::Convergence(_))
        ));
    }

    #[test]
    fn stable_value_persists_deeper() {
        let n = 15;
        let args = CfArgs::default().with_a(0).with_b(1);
        let shallow = build_catalog_cf(CatalogCf::RAb, &args, n + 8, n).unwrap();
        let v = eval_series(&shallow, n).unwrap();
        // stabilises at depth n; compare with explicit deeper convergents
        for extra in [0usize, 2] {
            let c = convergent(&shallow, n + extra).unwrap();
            assert_eq!(c.p.div(&c.q).unwrap(), v);
        }
    }
}
