use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use super::catalog::{Comparison, Ctx, IdentityCase, ParamMode, CATALOG};
use crate::error::{QfracError, Result};
use crate::qseries::{ParamPoly, QSeries};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Error,
}

/// Lowest differing coefficient: smallest q-power, then the
/// lexicographically smallest `(ea, eb, ec)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Mismatch {
    pub q: usize,
    pub ea: i32,
    pub eb: i32,
    pub ec: i32,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdentityReport {
    pub id: String,
    pub status: Status,
    pub order: usize,
    pub depth: usize,
    pub first_mismatch: Option<Mismatch>,
    pub elapsed_ms: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cause: Option<String>,
}

impl IdentityReport {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

/// Knobs for [`verify_with`].
#[derive(Clone, Debug)]
pub struct VerifyOptions {
    pub order: usize,
    pub seed: u64,
    pub parallel: bool,
    /// Ids whose right-hand side gets `+1` added at `q^min(1, order)`;
    /// harness self-test only.
    pub corrupt: Vec<String>,
}

impl VerifyOptions {
    pub fn new(order: usize) -> Self {
        VerifyOptions {
            order,
            seed: 1,
            parallel: false,
            corrupt: Vec::new(),
        }
    }
}

/// `(id, description, anchor, parameter mode)` for every entry, sorted by id.
#[derive(Clone, Debug, Serialize)]
pub struct IdentityInfo {
    pub id: &'static str,
    pub description: &'static str,
    pub anchor: &'static str,
    pub param_mode: ParamMode,
}

pub fn list_identities() -> Vec<IdentityInfo> {
    CATALOG
        .iter()
        .map(|c| IdentityInfo {
            id: c.id,
            description: c.description,
            anchor: c.anchor,
            param_mode: c.param_mode,
        })
        .collect()
}

pub fn find_case(id: &str) -> Result<&'static IdentityCase> {
    CATALOG.iter().find(|c| c.id == id).ok_or_else(|| {
        let ids: Vec<_> = CATALOG.iter().map(|c| c.id).collect();
        QfracError::Usage(format!(
            "unknown identity `{id}`; valid ids: {}",
            ids.join(", ")
        ))
    })
}

pub fn first_mismatch(lhs: &QSeries, rhs: &QSeries) -> Option<Mismatch> {
    for (n, (l, r)) in lhs.coeffs().iter().zip(rhs.coeffs()).enumerate() {
        if l == r {
            continue;
        }
        let diff = l - r;
        let (e, _) = diff.terms().next().expect("nonzero difference");
        return Some(Mismatch {
            q: n,
            ea: e.a,
            eb: e.b,
            ec: e.c,
            lhs: l.coeff(*e).to_string(),
            rhs: r.coeff(*e).to_string(),
        });
    }
    None
}

fn corrupt(s: &QSeries) -> QSeries {
    let k = s.order().min(1);
    let mut out = s.clone();
    out.set_coeff(k, s.coeff(k) + &ParamPoly::one());
    out
}

fn judge(cmp: &Comparison, corrupted: bool) -> std::result::Result<Option<Mismatch>, String> {
    for (idx, (lhs, rhs)) in cmp.pairs.iter().enumerate() {
        if lhs.order() != rhs.order() {
            return Err(format!(
                "component {idx}: orders {} and {} differ",
                lhs.order(),
                rhs.order()
            ));
        }
        for s in [lhs, rhs] {
            if !s.is_polynomial_in_params() {
                return Err(format!(
                    "component {idx}: negative parameter exponent survived"
                ));
            }
        }
        let rhs = if corrupted && idx == 0 {
            corrupt(rhs)
        } else {
            rhs.clone()
        };
        if let Some(m) = first_mismatch(lhs, &rhs) {
            return Ok(Some(m));
        }
    }
    Ok(None)
}

fn run(case: &IdentityCase, opts: &VerifyOptions) -> IdentityReport {
    let start = Instant::now();
    let ctx = Ctx {
        order: opts.order,
        seed: opts.seed,
    };
    let corrupted = opts.corrupt.iter().any(|c| c == case.id);
    let mut report = IdentityReport {
        id: case.id.to_string(),
        status: Status::Error,
        order: opts.order,
        depth: 0,
        first_mismatch: None,
        elapsed_ms: 0,
        cause: None,
    };
    match (case.build)(&ctx) {
        Ok(cmp) => {
            report.depth = cmp.depth;
            report.order = cmp.order.unwrap_or(opts.order);
            match judge(&cmp, corrupted) {
                Ok(None) => report.status = Status::Pass,
                Ok(Some(m)) => {
                    report.status = Status::Fail;
                    report.first_mismatch = Some(m);
                }
                Err(cause) => report.cause = Some(cause),
            }
        }
        Err(e) => report.cause = Some(e.to_string()),
    }
    report.elapsed_ms = start.elapsed().as_millis() as u64;
    report
}

/// Checks one entry; an unknown id is a usage error, builder failures are
/// reported as `status = error`.
pub fn verify_identity(id: &str, order: usize, seed: u64) -> Result<IdentityReport> {
    let opts = VerifyOptions {
        seed,
        ..VerifyOptions::new(order)
    };
    verify_with(id, &opts)
}

pub fn verify_with(id: &str, opts: &VerifyOptions) -> Result<IdentityReport> {
    Ok(run(find_case(id)?, opts))
}

/// One report per entry, sorted by id.
pub fn verify_all(order: usize, parallel: bool) -> Vec<IdentityReport> {
    let opts = VerifyOptions {
        parallel,
        ..VerifyOptions::new(order)
    };
    verify_all_with(&opts)
}

pub fn verify_all_with(opts: &VerifyOptions) -> Vec<IdentityReport> {
    let mut reports: Vec<IdentityReport> = if opts.parallel {
        CATALOG.par_iter().map(|c| run(c, opts)).collect()
    } else {
        CATALOG.iter().map(|c| run(c, opts)).collect()
    };
    reports.sort_by(|x, y| x.id.cmp(&y.id));
    reports
}
