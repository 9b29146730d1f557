//! JSON form of a series: `[{"power": n, "terms": [{"ea","eb","ec","num","den"}]}]`.
//!
//! Numerators and denominators are decimal strings so arbitrarily large
//! values survive the round trip.

use serde::{Deserialize, Serialize};

use super::poly::{Exponents, ParamPoly};
use super::rational::ExactRational;
use super::series::QSeries;
use crate::error::{usage, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub ea: i32,
    pub eb: i32,
    pub ec: i32,
    pub num: String,
    pub den: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PowerJson {
    pub power: usize,
    pub terms: Vec<TermJson>,
}

/// One entry per power `0..=order`, empty `terms` for zero coefficients.
pub fn series_to_json(s: &QSeries) -> Vec<PowerJson> {
    s.coeffs()
        .iter()
        .enumerate()
        .map(|(power, c)| PowerJson {
            power,
            terms: c
                .terms()
                .map(|(e, x)| TermJson {
                    ea: e.a,
                    eb: e.b,
                    ec: e.c,
                    num: x.numer().to_string(),
                    den: x.denom().to_string(),
                })
                .collect(),
        })
        .collect()
}

pub fn series_from_json(powers: &[PowerJson]) -> Result<QSeries> {
    let order = match powers.iter().map(|p| p.power).max() {
        Some(o) => o,
        None => return usage("empty series"),
    };
    let mut coeffs = vec![ParamPoly::zero(); order + 1];
    for p in powers {
        for t in &p.terms {
            let x: ExactRational = format!("{}/{}", t.num, t.den).parse()?;
            coeffs[p.power].add_term(Exponents::new(t.ea, t.eb, t.ec), &x);
        }
    }
    Ok(QSeries::from_coeffs(coeffs, order))
}
