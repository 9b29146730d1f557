//! Exact truncated power series in `q` over Laurent polynomials in `a, b, c`.
//!
//! - [`ExactRational`]: reduced arbitrary-precision fraction
//! - [`ParamPoly`]: sparse Laurent polynomial in the parameters
//! - [`QSeries`]: coefficients of `q^0..=q^N`, saturating at `N`
//! - [`pochhammer`], [`qbinomial`], [`product_build`]: the standard builders
//!
//! Values are immutable once built and can be shared across threads freely.

mod json;
mod poly;
mod products;
mod rational;
mod series;

pub use json::{series_from_json, series_to_json, PowerJson, TermJson};
pub use poly::{Exponents, Param, ParamPoly};
pub use products::{
    one_minus, pochhammer, pochhammer_step, product_build, product_of_factors, q_factorial,
    qbinomial, FactorSign, PochhammerOrder, QMonomial,
};
pub use rational::ExactRational;
pub use series::{series_arith, ArithOp, QSeries};
