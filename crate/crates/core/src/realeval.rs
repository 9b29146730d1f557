//! Double-precision evaluation of numeric continued fractions and of the
//! Rogers-Ramanujan fraction at its classical singular values.

use std::f64::consts::{E, LN_2, PI};
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{domain, usage, QfracError, Result};

/// Rescale `(P, Q)` once `max(|P|, |Q|)` passes this.
pub const RESCALE_THRESHOLD: f64 = 1e150;

/// `b0 + a1/(b1 + a2/(b2 + ...))` with partials generated on demand.
pub struct RealCF {
    pub b0: f64,
    partial: Box<dyn Fn(usize) -> (f64, f64) + Send + Sync>,
}

impl RealCF {
    /// `partial(k)` is `(a_k, b_k)` for `k >= 1`.
    pub fn new(b0: f64, partial: impl Fn(usize) -> (f64, f64) + Send + Sync + 'static) -> Self {
        RealCF {
            b0,
            partial: Box::new(partial),
        }
    }

    pub fn partial(&self, k: usize) -> (f64, f64) {
        (self.partial)(k)
    }
}

impl fmt::Debug for RealCF {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("RealCF")
            .field("b0", &self.b0)
            .finish_non_exhaustive()
    }
}

/// `P_D / Q_D` by the forward recurrence, rescaling past [`RESCALE_THRESHOLD`].
pub fn eval_cf_real(cf: &RealCF, depth: usize) -> Result<f64> {
    eval_cf_real_with(cf, depth, Some(RESCALE_THRESHOLD))
}

/// [`eval_cf_real`] with an explicit rescaling threshold (`None` disables it).
pub fn eval_cf_real_with(cf: &RealCF, depth: usize, rescale: Option<f64>) -> Result<f64> {
    if depth == 0 {
        return usage("depth must be at least 1");
    }
    let (mut p_prev, mut p) = (1.0, cf.b0);
    let (mut q_prev, mut q) = (0.0, 1.0);
    for k in 1..=depth {
        let (a, b) = cf.partial(k);
        if !a.is_finite() || !b.is_finite() {
            return domain(format!("partial quotient {k} is not finite"));
        }
        let p_next = b * p + a * p_prev;
        let q_next = b * q + a * q_prev;
        p_prev = p;
        q_prev = q;
        p = p_next;
        q = q_next;
        if let Some(limit) = rescale {
            let m = p.abs().max(q.abs());
            if m > limit {
                p /= m;
                q /= m;
                p_prev /= m;
                q_prev /= m;
            }
        }
    }
    if q == 0.0 {
        return domain(format!("denominator Q_{depth} vanishes"));
    }
    Ok(p / q)
}

/// `4/(1 + 1^2/(2 + 3^2/(2 + 5^2/(2 + ...))))`; depth `D` gives the Leibniz
/// partial sum with `D` terms.
pub fn pi_cf() -> RealCF {
    RealCF::new(0.0, |k| match k {
        1 => (4.0, 1.0),
        _ => {
            let odd = (2 * k - 3) as f64;
            (odd * odd, 2.0)
        }
    })
}

/// `1/(1 - z/(1 + z - z/(2 + z - 2z/(3 + z - ...))))`.
pub fn exp_cf(z: f64) -> RealCF {
    RealCF::new(0.0, move |k| match k {
        1 => (1.0, 1.0),
        2 => (-z, 1.0 + z),
        _ => (-((k - 2) as f64) * z, (k - 1) as f64 + z),
    })
}

/// `2z/(1 - z^2/(3 + z^2 - 9z^2/(5 + 3z^2 - ...)))`, i.e. `log((1+z)/(1-z))`.
pub fn log_cf(z: f64) -> RealCF {
    RealCF::new(0.0, move |k| match k {
        1 => (2.0 * z, 1.0),
        _ => {
            let odd = (2 * k - 3) as f64;
            (-odd * odd * z * z, (2 * k - 1) as f64 + odd * z * z)
        }
    })
}

/// `q^{1/5}/(1 + q/(1 + q^2/(1 + ...)))`.
pub fn rr_cf(q: f64) -> RealCF {
    RealCF::new(0.0, move |k| match k {
        1 => (q.powf(0.2), 1.0),
        _ => (q.powi(k as i32 - 1), 1.0),
    })
}

/// The fraction and product forms of `R(q)`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct RrValue {
    pub cf: f64,
    pub product: f64,
}

/// `q^{1/5} prod (1-q^{5n-4})(1-q^{5n-1})/((1-q^{5n-3})(1-q^{5n-2}))`,
/// stopping once a factor is within `1e-17` of 1.
pub fn rr_product(q: f64) -> f64 {
    let mut acc = q.powf(0.2);
    for n in 1.. {
        let e = |k: i32| q.powi(5 * n - k);
        let factor = (1.0 - e(4)) * (1.0 - e(1)) / ((1.0 - e(3)) * (1.0 - e(2)));
        acc *= factor;
        if (factor - 1.0).abs() < 1e-17 {
            break;
        }
    }
    acc
}

pub fn rr_value(q: f64, depth: usize) -> Result<RrValue> {
    if !(q > 0.0 && q < 1.0) {
        return usage(format!("q = {q} is outside (0, 1)"));
    }
    Ok(RrValue {
        cf: eval_cf_real(&rr_cf(q), depth)?,
        product: rr_product(q),
    })
}

/// `(sqrt 5 + 1) / 2`.
pub fn golden_ratio() -> f64 {
    (5f64.sqrt() + 1.0) / 2.0
}

/// `q = e^{-pi}`, `e^{-2 pi}`, `e^{-4 pi}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum SingularValueCase {
    #[serde(rename = "e^-pi")]
    EPi,
    #[serde(rename = "e^-2pi")]
    E2Pi,
    #[serde(rename = "e^-4pi")]
    E4Pi,
}

impl SingularValueCase {
    pub const ALL: [SingularValueCase; 3] = [
        SingularValueCase::EPi,
        SingularValueCase::E2Pi,
        SingularValueCase::E4Pi,
    ];

    pub fn q(self) -> f64 {
        let k = match self {
            SingularValueCase::EPi => 1.0,
            SingularValueCase::E2Pi => 2.0,
            SingularValueCase::E4Pi => 4.0,
        };
        (-k * PI).exp()
    }

    pub fn closed_form(self) -> f64 {
        let phi = golden_ratio();
        let r5 = 5f64.sqrt();
        let q5 = 5f64.powf(0.25);
        let phi32 = phi.powf(1.5);
        match self {
            SingularValueCase::EPi => 0.5 * phi * (r5 - phi32) * (q5 + phi32),
            SingularValueCase::E2Pi => q5 * phi.sqrt() - phi,
            SingularValueCase::E4Pi => 0.5 * phi * (r5 - phi32) * (phi32 - q5),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            SingularValueCase::EPi => "e^-pi",
            SingularValueCase::E2Pi => "e^-2pi",
            SingularValueCase::E4Pi => "e^-4pi",
        }
    }
}

impl FromStr for SingularValueCase {
    type Err = QfracError;

    fn from_str(s: &str) -> Result<Self> {
        SingularValueCase::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| {
                QfracError::Usage(format!(
                    "unknown singular case `{s}`; expected e^-pi, e^-2pi or e^-4pi"
                ))
            })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct SingularValueCheck {
    pub case: SingularValueCase,
    pub q: f64,
    pub cf_value: f64,
    pub product_value: f64,
    pub closed_form_value: f64,
    pub max_delta: f64,
}

/// Depth used for the fraction in [`singular_value_check`].
pub const SINGULAR_DEPTH: usize = 60;

pub fn singular_value_check(case: SingularValueCase) -> SingularValueCheck {
    let q = case.q();
    let v = rr_value(q, SINGULAR_DEPTH).expect("singular q lies in (0, 1)");
    let closed = case.closed_form();
    let max_delta = [
        (v.cf - v.product).abs(),
        (v.cf - closed).abs(),
        (v.product - closed).abs(),
    ]
    .into_iter()
    .fold(0.0, f64::max);
    SingularValueCheck {
        case,
        q,
        cf_value: v.cf,
        product_value: v.product,
        closed_form_value: closed,
        max_delta,
    }
}

/// Constants the CLI can evaluate.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Constant {
    Pi,
    E,
    Ln2,
    Rr,
}

impl Constant {
    pub fn name(self) -> &'static str {
        match self {
            Constant::Pi => "pi",
            Constant::E => "e",
            Constant::Ln2 => "ln2",
            Constant::Rr => "rr",
        }
    }

    /// Reference value (`rr` at `q = e^{-2 pi}`, from its closed form).
    pub fn reference(self) -> f64 {
        match self {
            Constant::Pi => PI,
            Constant::E => E,
            Constant::Ln2 => LN_2,
            Constant::Rr => SingularValueCase::E2Pi.closed_form(),
        }
    }

    pub fn cf(self) -> RealCF {
        match self {
            Constant::Pi => pi_cf(),
            Constant::E => exp_cf(1.0),
            Constant::Ln2 => log_cf(1.0 / 3.0),
            Constant::Rr => rr_cf(SingularValueCase::E2Pi.q()),
        }
    }
}

impl FromStr for Constant {
    type Err = QfracError;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "pi" => Ok(Constant::Pi),
            "e" => Ok(Constant::E),
            "ln2" => Ok(Constant::Ln2),
            "rr" => Ok(Constant::Rr),
            _ => usage(format!("unknown constant `{s}`; expected pi, e, ln2 or rr")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pi_depth_two() {
        let v = eval_cf_real(&pi_cf(), 2).unwrap();
        assert!((v - 8.0 / 3.0).abs() < 1e-15);
        assert!(eval_cf_real(&pi_cf(), 0).is_err());
    }

    #[test]
    fn exp_and_log() {
        assert!((eval_cf_real(&exp_cf(1.0), 20).unwrap() - E).abs() < 1e-12);
        assert!((eval_cf_real(&log_cf(1.0 / 3.0), 30).unwrap() - LN_2).abs() < 1e-12);
    }

    #[test]
    fn zero_denominator_is_an_error() {
        let cf = RealCF::new(1.0, |_| (1.0, 0.0));
        // Q_1 = 0
        assert!(matches!(eval_cf_real(&cf, 1), Err(QfracError::Domain(_))));
        let cf = RealCF::new(0.0, |_| (f64::NAN, 1.0));
        assert!(eval_cf_real(&cf, 3).is_err());
    }

    #[test]
    fn rr_small_q_limit() {
        let q = 1e-12;
        let v = rr_value(q, 10).unwrap();
        assert!((v.cf / q.powf(0.2) - 1.0).abs() < 1e-10);
        assert!(rr_value(1.0, 10).is_err());
    }

    #[test]
    fn singular_values() {
        let c = singular_value_check(SingularValueCase::E2Pi);
        assert!(c.max_delta < 1e-8);
        assert!((c.cf_value - 0.2840790438).abs() < 1e-9);
        for case in SingularValueCase::ALL {
            let c = singular_value_check(case);
            assert!((c.cf_value - c.product_value).abs() < 1e-10, "{case:?}");
            assert!(c.max_delta < 1e-6, "{case:?}");
        }
    }
}
