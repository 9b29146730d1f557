//! The identity catalog: one entry per checked statement, each pairing a
//! left-hand builder with an independently built right-hand side.

use rand::Rng;

use super::builders::*;
use super::random::{
    cf_admissible, cf_value, draw_terms, euler_admissible, rng, telescoping_cf, RANDOM_INSTANCES,
};
use crate::contfrac::{
    build_catalog_cf, convergent, euler_cf_from_rationals, eval_series_depth, CatalogCf, CfArgs,
};
use crate::error::{QfracError, Result};
use crate::partitions::{count_colored, PartSpec, Variant};
use crate::qseries::{
    pochhammer, qbinomial, ExactRational, Exponents, FactorSign, Param, ParamPoly, PochhammerOrder,
    QMonomial, QSeries,
};

/// Inputs shared by every builder.
#[derive(Clone, Copy, Debug)]
pub struct Ctx {
    pub order: usize,
    pub seed: u64,
}

/// Pairs of series that must agree coefficientwise, plus bookkeeping.
#[derive(Clone, Debug)]
pub struct Comparison {
    pub pairs: Vec<(QSeries, QSeries)>,
    /// Continued-fraction depth used (0 if none).
    pub depth: usize,
    /// Order actually compared, when it differs from the requested one.
    pub order: Option<usize>,
}

impl Comparison {
    fn one(lhs: QSeries, rhs: QSeries) -> Self {
        Comparison {
            pairs: vec![(lhs, rhs)],
            depth: 0,
            order: None,
        }
    }

    fn many(pairs: Vec<(QSeries, QSeries)>) -> Self {
        Comparison {
            pairs,
            depth: 0,
            order: None,
        }
    }

    fn depth(mut self, depth: usize) -> Self {
        self.depth = depth;
        self
    }
}

/// How an entry treats the parameters `a, b, c`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ParamMode {
    None,
    Generic,
    Randomized,
}

pub type Builder = fn(&Ctx) -> Result<Comparison>;

#[derive(Clone, Copy)]
pub struct IdentityCase {
    pub id: &'static str,
    pub description: &'static str,
    pub anchor: &'static str,
    pub param_mode: ParamMode,
    pub build: Builder,
}

impl std::fmt::Debug for IdentityCase {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("IdentityCase")
            .field("id", &self.id)
            .finish()
    }
}

fn cf_args() -> CfArgs {
    CfArgs::default()
}

fn eval(id: CatalogCf, args: &CfArgs, order: usize) -> Result<(QSeries, usize)> {
    let cf = build_catalog_cf(id, args, order + 8, order)?;
    eval_series_depth(&cf, order)
}

fn pack(values: Vec<ExactRational>) -> QSeries {
    let n = values.len() - 1;
    QSeries::from_coeffs(values.into_iter().map(ParamPoly::constant).collect(), n)
}

// --- randomized finite identities -------------------------------------------

fn euler_cf_finite(ctx: &Ctx) -> Result<Comparison> {
    let mut rng = rng(ctx.seed);
    let (mut lhs, mut rhs) = (Vec::new(), Vec::new());
    for _ in 0..RANDOM_INSTANCES {
        let n = rng.gen_range(0..=10usize);
        let terms = draw_terms(&mut rng, n + 1, euler_admissible)?;
        let cf = euler_cf_from_rationals(&terms)?;
        let mut prod = ExactRational::one();
        let mut sum = ExactRational::zero();
        for (k, t) in terms.iter().enumerate() {
            prod = &prod * t;
            sum = &sum + &prod;
            let c = convergent(&cf, k + 1)?;
            let p = c.p.coeff(0).as_constant().expect("rational");
            let q = c.q.coeff(0).as_constant().expect("rational");
            lhs.push(&p / &q);
            rhs.push(sum.clone());
        }
    }
    Ok(Comparison::one(pack(lhs), pack(rhs)).depth(11))
}

fn telescope(ctx: &Ctx, plus: bool) -> Result<Comparison> {
    let mut rng = rng(ctx.seed);
    let one = ExactRational::one();
    let (mut lhs, mut rhs) = (Vec::new(), Vec::new());
    for _ in 0..RANDOM_INSTANCES {
        let n = rng.gen_range(1..=8usize);
        let a = draw_terms(&mut rng, n, |t| plus || t.iter().all(|x| x != &one))?;
        let mut sum = one.clone();
        let mut running = one.clone();
        for x in &a {
            if plus {
                sum = &sum + &(x * &running);
                running = &running * &(&one + x);
            } else {
                running = &running * &(&one - x);
                sum = &sum + &(x / &running);
            }
        }
        let product = if plus {
            a.iter().fold(one.clone(), |acc, x| &acc * &(&one + x))
        } else {
            &one / &a.iter().fold(one.clone(), |acc, x| &acc * &(&one - x))
        };
        lhs.push(sum);
        rhs.push(product);
    }
    Ok(Comparison::one(pack(lhs), pack(rhs)))
}

fn telescope_1(ctx: &Ctx) -> Result<Comparison> {
    telescope(ctx, false)
}

fn telescope_2(ctx: &Ctx) -> Result<Comparison> {
    telescope(ctx, true)
}

fn thm(ctx: &Ctx, id: CatalogCf) -> Result<Comparison> {
    let mut rng = rng(ctx.seed);
    let one = ExactRational::one();
    let (mut lhs, mut rhs) = (Vec::new(), Vec::new());
    for _ in 0..RANDOM_INSTANCES {
        let n = rng.gen_range(1..=8usize);
        let a = draw_terms(&mut rng, n, |t| cf_admissible(id, t))?;
        lhs.push(cf_value(&telescoping_cf(id, &a)?));
        rhs.push(if id == CatalogCf::Thm21 {
            &one / &a.iter().fold(one.clone(), |acc, x| &acc * &(&one - x))
        } else {
            a.iter().fold(one.clone(), |acc, x| &acc * &(&one + x))
        });
    }
    Ok(Comparison::one(pack(lhs), pack(rhs)).depth(9))
}

fn thm_2_1(ctx: &Ctx) -> Result<Comparison> {
    thm(ctx, CatalogCf::Thm21)
}

fn thm_2_2(ctx: &Ctx) -> Result<Comparison> {
    thm(ctx, CatalogCf::Thm22)
}

// --- section 2 corollaries ---------------------------------------------------

fn corollary(ctx: &Ctx, exps: Vec<u64>, distinct: bool) -> Result<Comparison> {
    let n = ctx.order;
    let id = if distinct {
        CatalogCf::Thm22
    } else {
        CatalogCf::Thm21
    };
    let cf = telescoping_series(id, &exps, n)?;
    let product = if distinct {
        prod(exps.iter().copied(), FactorSign::Plus, None, n)
    } else {
        inv_prod(exps.iter().copied(), n)
    };
    let spec = PartSpec::new(exps.clone(), distinct)?;
    Ok(
        Comparison::many(vec![(cf, product.clone()), (product, counts(&spec, n))])
            .depth(exps.len() + 1),
    )
}

fn cor_16(ctx: &Ctx) -> Result<Comparison> {
    corollary(ctx, (1..=10).collect(), false)
}

fn cor_18(ctx: &Ctx) -> Result<Comparison> {
    corollary(ctx, (1..=10).collect(), true)
}

fn cor_20(ctx: &Ctx) -> Result<Comparison> {
    corollary(ctx, (1..=8).map(|i| 2 * i - 1).collect(), false)
}

fn cor_22(ctx: &Ctx) -> Result<Comparison> {
    corollary(ctx, (1..=8).map(|i| 2 * i - 1).collect(), true)
}

fn cor_24(ctx: &Ctx) -> Result<Comparison> {
    corollary(ctx, (0..=6).map(|i| 1 << i).collect(), false)
}

fn cor_26(ctx: &Ctx) -> Result<Comparison> {
    let n = ctx.order;
    let mut c = corollary(ctx, (0..=5).map(|i| 1 << i).collect(), true)?;
    // (1 - q^64) / (1 - q)
    let top = &QSeries::one(n) - &QSeries::q_power(64, n);
    let closed = top.div(&(&QSeries::one(n) - &QSeries::q_power(1, n)))?;
    let product = c.pairs[0].1.clone();
    c.pairs.push((product, closed));
    Ok(c)
}

fn cor_26b(ctx: &Ctx) -> Result<Comparison> {
    let n = ctx.order;
    let mut c = corollary(ctx, vec![1, 3, 9, 27], true)?;
    let indicator = (0..=n as u64)
        .map(|k| {
            let mut x = k;
            let mut ok = k <= 40;
            while x > 0 {
                ok &= x % 3 != 2;
                x /= 3;
            }
            ExactRational::from_integer(ok as i64)
        })
        .collect();
    let product = c.pairs[0].1.clone();
    c.pairs.push((product, pack_order(indicator, n)));
    Ok(c)
}

fn pack_order(values: Vec<ExactRational>, order: usize) -> QSeries {
    QSeries::from_coeffs(values.into_iter().map(ParamPoly::constant).collect(), order)
}

fn euler_odd_eq_distinct(ctx: &Ctx) -> Result<Comparison> {
    let n = ctx.order;
    let odd = inv_prod(progression(1, 2, n), n);
    let distinct = prod(1..=n as u64, FactorSign::Plus, None, n);
    let odd_counts = counts(&PartSpec::odd(n as u64, false), n);
    let distinct_counts = counts(&PartSpec::all(n as u64, true), n);
    Ok(Comparison::many(vec![
        (odd, distinct.clone()),
        (odd_counts, distinct_counts),
        (distinct, counts(&PartSpec::all(n as u64, true), n)),
    ]))
}

// --- Rogers-Ramanujan --------------------------------------------------------

fn rr_sum(shift: usize, order: usize) -> QSeries {
    let mut acc = QSeries::zero(order);
    for k in (0..).take_while(|k| k * k + shift * k <= order) {
        acc = &acc + &(&QSeries::q_power(k * k + shift * k, order) * &inv_qfac(k, order));
    }
    acc
}

fn rr_g(ctx: &Ctx) -> Result<Comparison> {
    let n = ctx.order;
    Ok(Comparison::one(
        rr_sum(0, n),
        inv_prod(residues(5, &[1, 4], n), n),
    ))
}

fn rr_h(ctx: &Ctx) -> Result<Comparison> {
    let n = ctx.order;
    Ok(Comparison::one(
        rr_sum(1, n),
        inv_prod(residues(5, &[2, 3], n), n),
    ))
}

fn rr_cf_product(ctx: &Ctx) -> Result<Comparison> {
    let n = ctx.order;
    let (r, depth) = eval(CatalogCf::RAb, &cf_args().with_a(0).with_b(1), n)?;
    let rhs = ratio(
        &residues(5, &[1, 4], n),
        &residues(5, &[2, 3], n),
        FactorSign::Minus,
        None,
        n,
    );
    Ok(Comparison::one(r.inverse()?, rhs).depth(depth))
}

fn lebesgue(ctx: &Ctx) -> Result<Comparison> {
    let n = ctx.order;
    let base = QMonomial::new(-1, Exponents::of(Param::B, 1), 1);
    let mut sum = QSeries::zero(n);
    for k in (0..).take_while(|k| k * (k + 1) / 2 <= n) {
        let poch = pochhammer(&base, PochhammerOrder::Finite(k), n)?;
        let term = &(&QSeries::q_power(k * (k + 1) / 2, n) * &poch) * &inv_qfac(k, n);
        sum = &sum + &term;
    }
    let rhs = &prod(progression(2, 2, n), FactorSign::Plus, Some(Param::B), n)
        * &prod(1..=n as u64, FactorSign::Plus, None, n);
    Ok(Comparison::one(sum, rhs))
}

fn r1b_product(ctx: &Ctx) -> Result<Comparison> {
    let n = ctx.order;
    let (r, depth) = eval(CatalogCf::RAb, &cf_args().with_a(1), n)?;
    let rhs = ratio(
        &progression(1, 2, n),
        &progression(2, 2, n),
        FactorSign::Plus,
        Some(Param::B),
        n,
    );
    Ok(Comparison::one(r, rhs).depth(depth))
}

fn r1b_q2_product(order: usize) -> QSeries {
    ratio(
        &progression(1, 4, order),
        &progression(3, 4, order),
        FactorSign::Plus,
        Some(Param::B),
        order,
    )
}

fn r1b_q2(ctx: &Ctx) -> Result<Comparison> {
    let n = ctx.order;
    let (r, depth) = eval(CatalogCf::RbQ2, &cf_args(), n)?;
    Ok(Comparison::one(r, r1b_q2_product(n)).depth(depth))
}

// --- numerator / denominator of R(a, b) --------------------------------------

fn r_ab_convergent(order: usize) -> Result<(QSeries, QSeries, usize)> {
    // P_n and Q_n are fixed modulo q^{n+1}
    let depth = order + 1;
    let cf = build_catalog_cf(CatalogCf::RAb, &cf_args(), depth, order)?;
    let c = convergent(&cf, depth)?;
    Ok((c.p, c.q, depth))
}

fn lemma_num(ctx: &Ctx) -> Result<Comparison> {
    let (p, _, depth) = r_ab_convergent(ctx.order)?;
    Ok(Comparison::one(p, lemma_sum(0, ctx.order)).depth(depth))
}

fn lemma_den(ctx: &Ctx) -> Result<Comparison> {
    let (_, q, depth) = r_ab_convergent(ctx.order)?;
    Ok(Comparison::one(q, lemma_sum(1, ctx.order)).depth(depth))
}

fn expansions_ij(ctx: &Ctx) -> Result<Comparison> {
    let n = ctx.order;
    Ok(Comparison::many(vec![
        (double_sum(0, n), lemma_sum(0, n)),
        (double_sum(1, n), lemma_sum(1, n)),
    ]))
}

fn num_den_shift(ctx: &Ctx) -> Result<Comparison> {
    let n = ctx.order;
    let shifted = double_sum(0, n).subst_param_qshift(Param::B, 1)?;
    Ok(Comparison::one(shifted, double_sum(1, n)))
}

// --- F(a, c) -----------------------------------------------------------------

fn f_recurrence(ctx: &Ctx) -> Result<Comparison> {
    let n = ctx.order;
    let f = f_closed(n);
    let f1 = f.subst_param_qshift(Param::A, 1)?;
    let f2 = f.subst_param_qshift(Param::A, 2)?;
    let one_plus_a = &QSeries::one(n) + &QSeries::param(Param::A, n);
    let acq = mono(1, Exponents::new(1, 0, 1), 1, n);
    let rhs = &(&one_plus_a * &f1) + &(&acq * &f2);
    Ok(Comparison::one(f, rhs))
}

fn f_iteration(ctx: &Ctx) -> Result<Comparison> {
    Ok(Comparison::one(
        f_recursive(ctx.order)?,
        f_closed(ctx.order),
    ))
}

fn f_cf(ctx: &Ctx) -> Result<Comparison> {
    let n = ctx.order;
    let (value, depth) = eval(CatalogCf::FAc, &cf_args(), n)?;
    let f = f_closed(n);
    let rhs = f.div(&f.subst_param_qshift(Param::A, 1)?)?;
    Ok(Comparison::one(value, rhs).depth(depth))
}

fn r_from_f(ctx: &Ctx) -> Result<Comparison> {
    let n = ctx.order;
    let (r, depth) = eval(CatalogCf::RAb, &cf_args(), n)?;
    let c_image = Exponents::new(-1, 1, 0);
    let one = ExactRational::one();
    let f = f_closed(n);
    let top = f.subst_param_monomial(Param::C, &one, c_image)?;
    let bottom =
        f.subst_param_qshift(Param::A, 1)?
            .subst_param_monomial(Param::C, &one, c_image)?;
    let rhs = &top.div(&bottom)? - &QSeries::param(Param::A, n);
    Ok(Comparison::one(r, rhs).depth(depth))
}

fn q_binomial_theorem(ctx: &Ctx) -> Result<Comparison> {
    // sum_k c^k (-a)_k against sum_k c^k sum_j a^j q^{j(j-1)/2} [k, j]
    let n = ctx.order;
    let base = QMonomial::new(-1, Exponents::of(Param::A, 1), 0);
    let (mut lhs, mut rhs) = (QSeries::zero(n), QSeries::zero(n));
    for k in 0..=10usize {
        let tag = ParamPoly::monomial(ExactRational::one(), Exponents::of(Param::C, k as i32));
        lhs = &lhs + &pochhammer(&base, PochhammerOrder::Finite(k), n)?.scale(&tag);
        for j in 0..=k {
            let t = &mono(
                1,
                Exponents::new(j as i32, 0, k as i32),
                j * j.saturating_sub(1) / 2,
                n,
            ) * &qbinomial(k, j, n);
            rhs = &rhs + &t;
        }
    }
    Ok(Comparison::one(lhs, rhs))
}

// --- the q -> q^2 fraction and its relatives ---------------------------------

fn rbq2_convergent(order: usize) -> Result<(QSeries, QSeries, usize)> {
    let depth = order + 1;
    let cf = build_catalog_cf(CatalogCf::RbQ2, &cf_args(), depth, order)?;
    let c = convergent(&cf, depth)?;
    Ok((c.p, c.q, depth))
}

fn gollnitz_num(ctx: &Ctx) -> Result<Comparison> {
    let n = ctx.order;
    let sum = gollnitz_sum(-1, n);
    let b_part = prod(progression(1, 4, n), FactorSign::Plus, Some(Param::B), n);
    let p1 = &b_part * &prod(progression(2, 2, n), FactorSign::Plus, None, n);
    let p2 = &(&b_part * &prod(progression(2, 4, n), FactorSign::Plus, None, n))
        * &prod(progression(4, 4, n), FactorSign::Plus, None, n);
    let (p, _, depth) = rbq2_convergent(n)?;
    Ok(Comparison::many(vec![(sum.clone(), p1.clone()), (p1, p2), (p, sum)]).depth(depth))
}

fn gollnitz_den(ctx: &Ctx) -> Result<Comparison> {
    let n = ctx.order;
    let sum = gollnitz_sum(1, n);
    let rhs = &(&prod(progression(3, 4, n), FactorSign::Plus, Some(Param::B), n)
        * &prod(progression(2, 4, n), FactorSign::Plus, None, n))
        * &prod(progression(4, 4, n), FactorSign::Plus, None, n);
    let (_, q, depth) = rbq2_convergent(n)?;
    Ok(Comparison::many(vec![(sum.clone(), rhs), (q, sum)]).depth(depth))
}

fn cf_37a(ctx: &Ctx) -> Result<Comparison> {
    let n = ctx.order;
    let (value, depth) = eval(CatalogCf::RbQ2, &cf_args().with_b(1), n)?;
    let rhs = ratio(
        &residues(8, &[2, 3, 7], n),
        &residues(8, &[1, 5, 6], n),
        FactorSign::Minus,
        None,
        n,
    );
    Ok(Comparison::one(value, rhs).depth(depth))
}

fn gordon_gollnitz_38(ctx: &Ctx) -> Result<Comparison> {
    let n = ctx.order;
    let (value, depth) = eval(CatalogCf::GordonGollnitz, &cf_args(), n)?;
    let rhs = ratio(
        &residues(8, &[3, 4, 5], n),
        &residues(8, &[1, 4, 7], n),
        FactorSign::Minus,
        None,
        n,
    );
    Ok(Comparison::one(value, rhs).depth(depth))
}

// --- three parameters ----------------------------------------------------------

fn three_param_39(ctx: &Ctx) -> Result<Comparison> {
    // a -> aq, b -> bq on both sides so the fraction converges q-adically
    let n = ctx.order;
    let grade = |s: &QSeries| {
        s.subst_param_qshift(Param::A, 1)?
            .subst_param_qshift(Param::B, 1)
    };
    let cf = build_catalog_cf(CatalogCf::ThreeParam, &cf_args(), n + 8, n)?.map_series(grade)?;
    let (value, depth) = eval_series_depth(&cf, n)?;
    let rhs = grade(&three_param_product(n)?)?;
    Ok(Comparison::one(value, rhs).depth(depth))
}

fn three_param_spec(ctx: &Ctx) -> Result<Comparison> {
    let n = ctx.order;
    let (value, depth) = eval(CatalogCf::ThreeParam, &cf_args().with_a(0), n)?;
    let odd = value
        .coeffs()
        .iter()
        .flat_map(|c| c.terms().map(|(e, _)| e.b))
        .find(|b| b % 2 != 0);
    if let Some(b) = odd {
        return Err(QfracError::Domain(format!(
            "a = 0 specialisation has odd b-exponent {b}"
        )));
    }
    // b^2 -> -b
    let halved = value.map_terms(|e, x| {
        let j = e.b / 2;
        let sign = if j % 2 == 0 { x.clone() } else { -x };
        (Exponents::new(e.a, j, e.c), sign)
    });
    let (cf_value, _) = eval(CatalogCf::RbQ2, &cf_args(), n)?;
    Ok(Comparison::many(vec![
        (halved.clone(), cf_value),
        (halved, r1b_q2_product(n)),
    ])
    .depth(depth))
}

// --- coloured partitions -------------------------------------------------------

/// Largest weight and `i`, `j` used by the coloured entries.
pub const COLORED_MAX_N: usize = 25;
pub const COLORED_MAX_IJ: u32 = 4;

fn colored_series(variant: Variant, order: usize) -> Result<QSeries> {
    let mut coeffs = vec![ParamPoly::zero(); order + 1];
    for i in 0..=COLORED_MAX_IJ {
        for j in 0..=COLORED_MAX_IJ {
            for (n, slot) in coeffs.iter_mut().enumerate() {
                let c = count_colored(variant, n as u32, i, j)?;
                slot.add_term(
                    Exponents::new(i as i32, j as i32, 0),
                    &ExactRational::from_integer(c as i64),
                );
            }
        }
    }
    Ok(QSeries::from_coeffs(coeffs, order))
}

fn colored(ctx: &Ctx, den: bool) -> Result<Comparison> {
    let n = ctx.order.min(COLORED_MAX_N);
    let [a, b, c] = if den {
        [Variant::AD, Variant::BD, Variant::CD]
    } else {
        [Variant::AN, Variant::BN, Variant::CN]
    };
    let (sa, sb, sc) = (
        colored_series(a, n)?,
        colored_series(b, n)?,
        colored_series(c, n)?,
    );
    let max = COLORED_MAX_IJ as i32;
    let gf = double_sum(den as usize, n).filter_terms(|e| e.a <= max && e.b <= max);
    Ok(Comparison {
        pairs: vec![(sa, sb.clone()), (sb.clone(), sc), (sb, gf)],
        depth: 0,
        order: Some(n),
    })
}

fn colored_num(ctx: &Ctx) -> Result<Comparison> {
    colored(ctx, false)
}

fn colored_den(ctx: &Ctx) -> Result<Comparison> {
    colored(ctx, true)
}

// --- exponential and logarithm as q-series -------------------------------------

fn exp_series(ctx: &Ctx) -> Result<Comparison> {
    let n = ctx.order;
    let (value, depth) = eval(CatalogCf::Exp, &cf_args(), n)?;
    let mut fact = ExactRational::one();
    let mut coeffs = vec![ExactRational::one()];
    for k in 1..=n as i64 {
        fact = &fact * &ExactRational::from_integer(k);
        coeffs.push(fact.recip().expect("nonzero"));
    }
    Ok(Comparison::one(value, pack_order(coeffs, n)).depth(depth))
}

fn log_series(ctx: &Ctx) -> Result<Comparison> {
    let n = ctx.order;
    let (value, depth) = eval(CatalogCf::Log, &cf_args(), n)?;
    let coeffs = (0..=n as i64)
        .map(|k| {
            if k % 2 == 1 {
                ExactRational::new(2, k)
            } else {
                ExactRational::zero()
            }
        })
        .collect();
    Ok(Comparison::one(value, pack_order(coeffs, n)).depth(depth))
}

macro_rules! case {
    ($id:literal, $mode:ident, $build:ident, $desc:literal, $anchor:literal) => {
        IdentityCase {
            id: $id,
            description: $desc,
            anchor: $anchor,
            param_mode: ParamMode::$mode,
            build: $build,
        }
    };
}

/// Every entry, sorted by id.
pub static CATALOG: &[IdentityCase] = &[
    case!("CF_37A", None, cf_37a,
        "1 + q/(1 + q^2 + q^3/(1 + q^4 + ...)) = prod_{j=2,3,7 mod 8}(1-q^j) / prod_{j=1,5,6 mod 8}(1-q^j)",
        "section 3, the b = 1 case of the q -> q^2 fraction"),
    case!("COLORED_DEN", None, colored_den,
        "A^D = B^D = C^D, and sum_n B^D(n;i,j) q^n is the a^i b^j coefficient of R^D(a,b)",
        "section 3, denominator theorem for two-coloured partitions"),
    case!("COLORED_NUM", None, colored_num,
        "A^N = B^N = C^N, and sum_n B^N(n;i,j) q^n is the a^i b^j coefficient of R^N(a,b)",
        "section 3, numerator theorem for two-coloured partitions"),
    case!("COR_16", None, cor_16,
        "1/prod_{i<=10}(1-q^i): cleared fraction = product = partition counts",
        "section 2, unrestricted partitions into parts <= n"),
    case!("COR_18", None, cor_18,
        "prod_{i<=10}(1+q^i): cleared fraction = product = distinct partition counts",
        "section 2, distinct partitions into parts <= n"),
    case!("COR_20", None, cor_20,
        "1/prod_{i<=8}(1-q^{2i-1}): cleared fraction = product = odd-part counts",
        "section 2, partitions into odd parts"),
    case!("COR_22", None, cor_22,
        "prod_{i<=8}(1+q^{2i-1}): cleared fraction = product = distinct odd-part counts",
        "section 2, distinct odd parts"),
    case!("COR_24", None, cor_24,
        "1/prod_{i<=6}(1-q^{2^i}): cleared fraction = product = binary partition counts",
        "section 2, binary partitions"),
    case!("COR_26", None, cor_26,
        "prod_{i<=5}(1+q^{2^i}) = (1-q^64)/(1-q): cleared fraction = product = counts",
        "section 2, distinct binary partitions"),
    case!("COR_26B", None, cor_26b,
        "prod_{i<=3}(1+q^{3^i}): coefficient 1 exactly on sums of distinct powers of 3",
        "section 2, distinct ternary partitions"),
    case!("EULER_CF_FINITE", Randomized, euler_cf_finite,
        "depth-k convergent of Euler's fraction = a0 + a0 a1 + ... + a0...a_{k-1}",
        "section 1, Euler's continued fraction formula"),
    case!("EULER_ODD_EQ_DISTINCT", None, euler_odd_eq_distinct,
        "1/prod(1-q^{2m-1}) = prod(1+q^m), with both count oracles",
        "section 2, Euler's odd = distinct theorem"),
    case!("EXPANSIONS_IJ", Generic, expansions_ij,
        "double sums over (i,j) equal the single Pochhammer sums for R^N and R^D",
        "section 3, second lemma on R(a,b)"),
    case!("EXP_SERIES", None, exp_series,
        "1/(1 - q/(1 + q - q/(2 + q - 2q/(3 + q - ...)))) = sum q^k/k!",
        "section 1, exponential example"),
    case!("F_CF", Generic, f_cf,
        "1 + a + acq/(1 + aq + acq^2/(...)) = f(a,c)/f(aq,c)",
        "section 3, the fraction F(a,c)"),
    case!("F_ITERATION", Generic, f_iteration,
        "sum a^k A_k with A_k from its recurrence = sum a^k q^{k(k-1)/2}(-cq)_k/(q)_k",
        "section 3, iteration of the A_k recurrence"),
    case!("F_RECURRENCE", Generic, f_recurrence,
        "f(a,c) = (1+a) f(aq,c) + acq f(aq^2,c)",
        "section 3, functional equation of f(a,c)"),
    case!("GOLLNITZ_DEN", Generic, gollnitz_den,
        "sum q^{k(k+1)}(-bq;q^2)_k/(q^2;q^2)_k = prod(1+bq^{4m-1})(1+q^{4m-2})(1+q^{4m}) = denominator",
        "section 3, denominator of the q -> q^2 fraction"),
    case!("GOLLNITZ_NUM", Generic, gollnitz_num,
        "sum q^{k(k+1)}(-b/q;q^2)_k/(q^2;q^2)_k = prod(1+bq^{4m-3})(1+q^{2m}) = numerator",
        "section 3, numerator of the q -> q^2 fraction"),
    case!("GORDON_GOLLNITZ_38", None, gordon_gollnitz_38,
        "1 + q + q^2/(1 + q^3 + q^4/(1 + q^5 + ...)) = prod_{3,4,5 mod 8}(1-q^j) / prod_{1,4,7 mod 8}(1-q^j)",
        "section 3, Gordon-Gollnitz fraction"),
    case!("LEBESGUE", Generic, lebesgue,
        "sum q^{k(k+1)/2}(-bq)_k/(q)_k = prod(1+bq^{2m})(1+q^m)",
        "section 3, Lebesgue's identity"),
    case!("LEMMA_DEN", Generic, lemma_den,
        "denominator of R(a,b) = sum a^k q^{k(k+1)/2}(-b/a q)_k/(q)_k",
        "section 3, first lemma on R(a,b), denominator"),
    case!("LEMMA_NUM", Generic, lemma_num,
        "numerator of R(a,b) = sum a^k q^{k(k+1)/2}(-b/a)_k/(q)_k",
        "section 3, first lemma on R(a,b), numerator"),
    case!("LOG_SERIES", None, log_series,
        "2q/(1 - q^2/(3 + q^2 - 9q^2/(5 + 3q^2 - ...))) = 2 sum q^{2k+1}/(2k+1)",
        "section 1, logarithm example"),
    case!("NUM_DEN_SHIFT", Generic, num_den_shift,
        "R^D(a,b) = R^N(a,bq) on the double-sum expansions",
        "section 3, second lemma on R(a,b), shift relation"),
    case!("Q_BINOMIAL_THEOREM", Generic, q_binomial_theorem,
        "(-z)_k = sum_j z^j q^{j(j-1)/2} [k,j]_q for k <= 10 (z = a, k tagged by c^k)",
        "section 3, q-binomial theorem"),
    case!("R1B_PRODUCT", Generic, r1b_product,
        "R(1,b) = prod(1+bq^{2m-1})/(1+bq^{2m})",
        "section 3, product form of R(1,b)"),
    case!("R1B_Q2", Generic, r1b_q2,
        "1 + bq/(1 + q^2 + bq^3/(1 + q^4 + ...)) = prod(1+bq^{4m-3})/(1+bq^{4m-1})",
        "section 3, the q -> q^2 case of R(1,b)"),
    case!("RR_CF_PRODUCT", None, rr_cf_product,
        "1/(1 + q/(1 + q^2/(1 + ...))) = prod(1-q^{5n-4})(1-q^{5n-1})/((1-q^{5n-3})(1-q^{5n-2}))",
        "section 3, Rogers-Ramanujan continued fraction"),
    case!("RR_G", None, rr_g,
        "sum q^{n^2}/(q)_n = 1/prod(1-q^{5n-4})(1-q^{5n-1})",
        "section 3, G(q)"),
    case!("RR_H", None, rr_h,
        "sum q^{n^2+n}/(q)_n = 1/prod(1-q^{5n-3})(1-q^{5n-2})",
        "section 3, H(q)"),
    case!("R_FROM_F", Generic, r_from_f,
        "R(a,b) = f(a,b/a)/f(aq,b/a) - a",
        "section 3, R(a,b) from f(a,c)"),
    case!("TELESCOPE_1", Randomized, telescope_1,
        "1 + sum_k a_k/prod_{i<=k}(1-a_i) = 1/prod(1-a_i)",
        "section 2, first telescoping identity"),
    case!("TELESCOPE_2", Randomized, telescope_2,
        "1 + sum_k a_k prod_{i<k}(1+a_i) = prod(1+a_i)",
        "section 2, second telescoping identity"),
    case!("THM_2_1", Randomized, thm_2_1,
        "cleared fraction for 1/prod(1-a_i) has value 1/prod(1-a_i)",
        "section 2, first telescoping fraction theorem"),
    case!("THM_2_2", Randomized, thm_2_2,
        "cleared fraction for prod(1+a_i) has value prod(1+a_i)",
        "section 2, second telescoping fraction theorem"),
    case!("THREE_PARAM_39", Generic, three_param_39,
        "three-parameter fraction = prod(1-a^2q^{4m-3})(1-b^2q^{4m-3})/((1-a^2q^{4m-1})(1-b^2q^{4m-1})), graded by a -> aq, b -> bq",
        "section 4, three-parameter fraction"),
    case!("THREE_PARAM_SPEC", Generic, three_param_spec,
        "three-parameter fraction at a = 0 with b^2 -> -b equals the q -> q^2 fraction",
        "section 4, specialisation to the q -> q^2 fraction"),
];
