//! Seeded random rational instances for the finite (parameter-free) entries.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::contfrac::{build_catalog_cf, euler_cf_from_rationals, CFSpec, CatalogCf, CfArgs};
use crate::error::{QfracError, Result};
use crate::qseries::{ExactRational, QSeries};

/// Instances drawn per randomized entry.
pub const RANDOM_INSTANCES: usize = 100;
const MAX_DRAWS: usize = 10_000;

pub(crate) fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Numerator in `-9..=9`, denominator in `1..=9`.
pub(crate) fn small_rational(rng: &mut impl Rng) -> ExactRational {
    ExactRational::new(rng.gen_range(-9..=9), rng.gen_range(1..=9))
}

fn all_denominators_nonzero(cf: &CFSpec) -> bool {
    cf.convergents()
        .all(|c| !c.q.coeff(0).as_constant().expect("rational").is_zero())
}

/// Draws `len` rationals, retrying until `accept` holds.
pub(crate) fn draw_terms(
    rng: &mut impl Rng,
    len: usize,
    accept: impl Fn(&[ExactRational]) -> bool,
) -> Result<Vec<ExactRational>> {
    for _ in 0..MAX_DRAWS {
        let terms: Vec<_> = (0..len).map(|_| small_rational(rng)).collect();
        if accept(&terms) {
            return Ok(terms);
        }
    }
    Err(QfracError::Domain(format!(
        "no admissible draw of {len} terms in {MAX_DRAWS} attempts"
    )))
}

pub(crate) fn telescoping_cf(id: CatalogCf, terms: &[ExactRational]) -> Result<CFSpec> {
    let series = terms
        .iter()
        .map(|t| QSeries::from_rational(t.clone(), 0))
        .collect();
    build_catalog_cf(id, &CfArgs::default().with_terms(series), usize::MAX, 0)
}

pub(crate) fn cf_value(cf: &CFSpec) -> ExactRational {
    let last = cf.convergents().last().expect("depth >= 0");
    let p = last.p.coeff(0).as_constant().expect("rational");
    let q = last.q.coeff(0).as_constant().expect("rational");
    &p / &q
}

/// Acceptance test for draws whose fraction must have no zero denominator.
pub(crate) fn cf_admissible(id: CatalogCf, terms: &[ExactRational]) -> bool {
    let one = ExactRational::one();
    if terms.iter().any(|t| t == &one) {
        return false;
    }
    telescoping_cf(id, terms)
        .map(|cf| all_denominators_nonzero(&cf))
        .unwrap_or(false)
}

pub(crate) fn euler_admissible(terms: &[ExactRational]) -> bool {
    euler_cf_from_rationals(terms)
        .map(|cf| all_denominators_nonzero(&cf))
        .unwrap_or(false)
}
