//! Partition counting oracles: dynamic programming, exhaustive enumeration,
//! and the two-colour statistics attached to the numerator and denominator
//! of `R(a, b)`.

use std::fmt;
use std::str::FromStr;

use crate::error::{usage, QfracError, Result};
use crate::qseries::{product_build, FactorSign, QSeries};

/// Largest weight [`enumerate_partitions`] will list.
pub const ENUMERATION_CAP: u64 = 25;
/// Largest weight accepted by the coloured enumerators.
pub const COLORED_CAP: u32 = 30;
/// Largest `i + j` accepted by the coloured enumerators.
pub const COLORED_PARTS_CAP: u32 = 8;

/// Allowed part sizes, optionally required to be distinct.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PartSpec {
    allowed: Vec<u64>,
    distinct: bool,
}

impl PartSpec {
    /// `allowed` must be nonempty, positive and strictly ascending.
    pub fn new(allowed: Vec<u64>, distinct: bool) -> Result<Self> {
        if allowed.is_empty() {
            return usage("allowed part list is empty");
        }
        if allowed[0] == 0 {
            return usage("parts must be positive");
        }
        if allowed.windows(2).any(|w| w[0] >= w[1]) {
            return usage("allowed parts must be strictly ascending");
        }
        Ok(PartSpec { allowed, distinct })
    }

    /// Parts `1..=max`.
    pub fn all(max: u64, distinct: bool) -> Self {
        PartSpec::new((1..=max.max(1)).collect(), distinct).expect("ascending")
    }

    /// Odd parts up to `max`.
    pub fn odd(max: u64, distinct: bool) -> Self {
        PartSpec::new((1..=max.max(1)).step_by(2).collect(), distinct).expect("ascending")
    }

    /// Powers `base^0, base^1, ...` not exceeding `max`.
    pub fn powers(base: u64, max: u64, distinct: bool) -> Result<Self> {
        if base < 2 {
            return usage("power base must be at least 2");
        }
        let mut v = vec![1u64];
        while let Some(next) = v.last().unwrap().checked_mul(base) {
            if next > max {
                break;
            }
            v.push(next);
        }
        PartSpec::new(v, distinct)
    }

    /// Parses a part list such as `1..5`, `1,2,4,8` or `1..20:2`
    /// (inclusive ranges, optional step, comma-separated pieces).
    pub fn parse_parts(text: &str, distinct: bool) -> Result<Self> {
        let mut parts = Vec::new();
        for piece in text.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let (range, step) = match piece.split_once(':') {
                Some((r, s)) => (r, parse_u64(s)?),
                None => (piece, 1),
            };
            if step == 0 {
                return usage("range step must be positive");
            }
            match range.split_once("..") {
                Some((lo, hi)) => {
                    let (lo, hi) = (parse_u64(lo)?, parse_u64(hi.trim_start_matches('='))?);
                    parts.extend((lo..=hi).step_by(step as usize));
                }
                None => parts.push(parse_u64(range)?),
            }
        }
        parts.sort_unstable();
        parts.dedup();
        PartSpec::new(parts, distinct)
    }

    pub fn allowed(&self) -> &[u64] {
        &self.allowed
    }

    pub fn distinct(&self) -> bool {
        self.distinct
    }
}

fn parse_u64(s: &str) -> Result<u64> {
    s.trim()
        .parse()
        .map_err(|_| QfracError::Usage(format!("bad part size `{s}`")))
}

/// Number of partitions of `k` obeying `spec`.
pub fn count_partitions(k: u64, spec: &PartSpec) -> u128 {
    let k = k as usize;
    let mut ways = vec![0u128; k + 1];
    ways[0] = 1;
    for &e in spec.allowed.iter().take_while(|&&e| e as usize <= k) {
        let e = e as usize;
        if spec.distinct {
            for t in (e..=k).rev() {
                ways[t] += ways[t - e];
            }
        } else {
            for t in e..=k {
                ways[t] += ways[t - e];
            }
        }
    }
    ways[k]
}

/// Every partition of `k` obeying `spec`, parts descending, listed in
/// reverse lexicographic order.
pub fn enumerate_partitions(k: u64, spec: &PartSpec) -> Result<Vec<Vec<u64>>> {
    if k > ENUMERATION_CAP {
        return usage(format!("enumeration cap is {ENUMERATION_CAP}, got {k}"));
    }
    let mut out = Vec::new();
    let usable: Vec<u64> = spec.allowed.iter().copied().filter(|&e| e <= k).collect();
    walk(
        k,
        &usable,
        usable.len(),
        spec.distinct,
        &mut Vec::new(),
        &mut out,
    );
    Ok(out)
}

// `limit`: only usable[..limit] may still be used
fn walk(
    rem: u64,
    usable: &[u64],
    limit: usize,
    distinct: bool,
    acc: &mut Vec<u64>,
    out: &mut Vec<Vec<u64>>,
) {
    if rem == 0 {
        out.push(acc.clone());
        return;
    }
    for idx in (0..limit).rev() {
        let e = usable[idx];
        if e > rem {
            continue;
        }
        acc.push(e);
        let next = if distinct { idx } else { idx + 1 };
        walk(rem - e, usable, next, distinct, acc, out);
        acc.pop();
    }
}

/// `prod 1/(1 - q^e)` or `prod (1 + q^e)` over the allowed parts.
pub fn gf_from_spec(spec: &PartSpec, order: usize) -> QSeries {
    let exps = spec.allowed.iter().copied();
    if spec.distinct {
        product_build(exps, FactorSign::Plus, None, order).expect("positive parts")
    } else {
        product_build(exps, FactorSign::Minus, None, order)
            .and_then(|p| p.inverse())
            .expect("unit constant term")
    }
}

/// The six coloured-partition families.
///
/// Numerator (`..N`) and denominator (`..D`) versions of:
///
/// - `A`: `i + j` distinct red parts and `j` distinct blue parts, the blue
///   parts lying in `0..=i+j-1` (numerator) or `1..=i+j` (denominator).
/// - `B`: `i` distinct red parts all `> j`, and `j` blue parts with pairwise
///   gaps of at least 2; in `BD` a blue part cannot be 1.
/// - `C`: `i` red and `j` blue parts, all distinct when pooled, and for each
///   blue part `v` the value `v - 1` is not a part; in `CD` a blue part cannot
///   be 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Variant {
    AN,
    BN,
    CN,
    AD,
    BD,
    CD,
}

impl Variant {
    pub const ALL: [Variant; 6] = [
        Variant::AN,
        Variant::BN,
        Variant::CN,
        Variant::AD,
        Variant::BD,
        Variant::CD,
    ];

    pub fn is_denominator(self) -> bool {
        matches!(self, Variant::AD | Variant::BD | Variant::CD)
    }

    pub fn name(self) -> &'static str {
        match self {
            Variant::AN => "AN",
            Variant::BN => "BN",
            Variant::CN => "CN",
            Variant::AD => "AD",
            Variant::BD => "BD",
            Variant::CD => "CD",
        }
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Variant {
    type Err = QfracError;

    fn from_str(s: &str) -> Result<Self> {
        Variant::ALL
            .into_iter()
            .find(|v| v.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| {
                QfracError::Usage(format!(
                    "unknown variant `{s}`; expected one of AN, BN, CN, AD, BD, CD"
                ))
            })
    }
}

/// A red/blue partition; both lists descending.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ColoredPartition {
    pub red_parts: Vec<u32>,
    pub blue_parts: Vec<u32>,
    pub n: u32,
    pub i: u32,
    pub j: u32,
}

/// Descending sets of `count` distinct values in `lo..=hi` summing to `sum`
/// whose consecutive members differ by at least `gap`.
fn distinct_sets(sum: u32, count: u32, lo: u32, hi: u32, gap: u32) -> Vec<Vec<u32>> {
    fn rec(
        rem: u32,
        count: u32,
        lo: u32,
        hi: u32,
        gap: u32,
        acc: &mut Vec<u32>,
        out: &mut Vec<Vec<u32>>,
    ) {
        if count == 0 {
            if rem == 0 {
                out.push(acc.clone());
            }
            return;
        }
        // the smallest completion uses lo, lo+gap, ...
        let min_rest = |c: u32| c * lo + gap * c * (c.saturating_sub(1)) / 2;
        let top = hi.min(rem);
        for v in (lo..=top).rev() {
            if min_rest(count - 1) + v > rem {
                continue;
            }
            if count > 1 && v < lo + gap * (count - 1) {
                break;
            }
            acc.push(v);
            let next_hi = v.saturating_sub(gap);
            if count == 1 || v >= gap {
                rec(rem - v, count - 1, lo, next_hi, gap, acc, out);
            }
            acc.pop();
        }
    }
    let mut out = Vec::new();
    if hi >= lo || count == 0 {
        rec(sum, count, lo, hi, gap.max(1), &mut Vec::new(), &mut out);
    }
    out
}

fn check_caps(n: u32, i: u32, j: u32) -> Result<()> {
    if n > COLORED_CAP {
        return usage(format!(
            "coloured enumeration cap is n <= {COLORED_CAP}, got {n}"
        ));
    }
    if i + j > COLORED_PARTS_CAP {
        return usage(format!(
            "coloured enumeration cap is i + j <= {COLORED_PARTS_CAP}, got {}",
            i + j
        ));
    }
    Ok(())
}

/// All coloured partitions of `n` with statistics `(i, j)` for `variant`,
/// in descending order.
pub fn enumerate_colored(
    variant: Variant,
    n: u32,
    i: u32,
    j: u32,
) -> Result<Vec<ColoredPartition>> {
    check_caps(n, i, j)?;
    let den = variant.is_denominator();
    let mut out = Vec::new();
    let mut push = |red: &[u32], blue: &[u32]| {
        out.push(ColoredPartition {
            red_parts: red.to_vec(),
            blue_parts: blue.to_vec(),
            n,
            i,
            j,
        })
    };
    match variant {
        Variant::AN | Variant::AD => {
            let (lo, hi) = if den {
                (1, i + j)
            } else {
                (0, (i + j).saturating_sub(1))
            };
            for blue_sum in 0..=n {
                let blues = distinct_sets(blue_sum, j, lo, hi, 1);
                if blues.is_empty() {
                    continue;
                }
                let reds = distinct_sets(n - blue_sum, i + j, 1, n, 1);
                for r in &reds {
                    for b in &blues {
                        push(r, b);
                    }
                }
            }
        }
        Variant::BN | Variant::BD => {
            let blue_lo = if den { 2 } else { 1 };
            for blue_sum in 0..=n {
                let blues = distinct_sets(blue_sum, j, blue_lo, n, 2);
                if blues.is_empty() {
                    continue;
                }
                let reds = distinct_sets(n - blue_sum, i, j + 1, n, 1);
                for r in &reds {
                    for b in &blues {
                        push(r, b);
                    }
                }
            }
        }
        Variant::CN | Variant::CD => {
            for pooled in distinct_sets(n, i + j, 1, n, 1) {
                let present = |v: u32| pooled.contains(&v);
                for mask in blue_masks(pooled.len(), j as usize) {
                    let blue: Vec<u32> = mask.iter().map(|&k| pooled[k]).collect();
                    if den && blue.contains(&1) {
                        continue;
                    }
                    if blue.iter().any(|&v| v > 1 && present(v - 1)) {
                        continue;
                    }
                    let red: Vec<u32> = (0..pooled.len())
                        .filter(|k| !mask.contains(k))
                        .map(|k| pooled[k])
                        .collect();
                    push(&red, &blue);
                }
            }
        }
    }
    out.sort_unstable_by(|x, y| y.cmp(x));
    Ok(out)
}

// index subsets of size k, lexicographic
fn blue_masks(len: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, len: usize, k: usize, acc: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if acc.len() == k {
            out.push(acc.clone());
            return;
        }
        for x in start..len {
            acc.push(x);
            rec(x + 1, len, k, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    if k <= len {
        rec(0, len, k, &mut Vec::new(), &mut out);
    }
    out
}

/// `|enumerate_colored(variant, n, i, j)|`.
pub fn count_colored(variant: Variant, n: u32, i: u32, j: u32) -> Result<u64> {
    Ok(enumerate_colored(variant, n, i, j)?.len() as u64)
}

/// One row of a coloured count table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColoredCount {
    pub n: u32,
    pub i: u32,
    pub j: u32,
    pub variant: Variant,
    pub count: u64,
}

/// Counts for every `n <= n_max`, `i <= i_max`, `j <= j_max` and variant,
/// ordered by `(n, i, j, variant)`.
pub fn colored_table(
    variants: &[Variant],
    n_max: u32,
    i_max: u32,
    j_max: u32,
) -> Result<Vec<ColoredCount>> {
    check_caps(n_max, i_max, j_max)?;
    let mut rows = Vec::new();
    for n in 0..=n_max {
        for i in 0..=i_max {
            for j in 0..=j_max {
                for &variant in variants {
                    let count = count_colored(variant, n, i, j)?;
                    rows.push(ColoredCount {
                        n,
                        i,
                        j,
                        variant,
                        count,
                    });
                }
            }
        }
    }
    Ok(rows)
}

/// CSV with header `n,i,j,variant,count`.
pub fn colored_table_csv(rows: &[ColoredCount]) -> String {
    let mut s = String::from("n,i,j,variant,count\n");
    for r in rows {
        s.push_str(&format!(
            "{},{},{},{},{}\n",
            r.n, r.i, r.j, r.variant, r.count
        ));
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn count_examples() {
        let all = PartSpec::all(5, false);
        assert_eq!(count_partitions(0, &all), 1);
        assert_eq!(count_partitions(5, &all), 7);
        assert_eq!(count_partitions(5, &PartSpec::all(5, true)), 3);
    }

    #[test]
    fn enumerate_examples() {
        let s = PartSpec::all(3, false);
        assert_eq!(
            enumerate_partitions(3, &s).unwrap(),
            vec![vec![3], vec![2, 1], vec![1, 1, 1]]
        );
        let s = PartSpec::new(vec![2, 4], false).unwrap();
        assert!(enumerate_partitions(1, &s).unwrap().is_empty());
        let s = PartSpec::powers(2, 64, true).unwrap();
        assert_eq!(enumerate_partitions(4, &s).unwrap(), vec![vec![4]]);
        assert!(enumerate_partitions(26, &s).is_err());
    }

    #[test]
    fn spec_validation() {
        assert!(PartSpec::new(vec![], false).is_err());
        assert!(PartSpec::new(vec![0, 1], false).is_err());
        assert!(PartSpec::new(vec![2, 2], false).is_err());
        assert!(PartSpec::new(vec![3, 1], false).is_err());
    }

    #[test]
    fn parse_part_lists() {
        let p = PartSpec::parse_parts("1..5", false).unwrap();
        assert_eq!(p.allowed(), &[1, 2, 3, 4, 5]);
        let p = PartSpec::parse_parts("1..9:2,4", true).unwrap();
        assert_eq!(p.allowed(), &[1, 3, 4, 5, 7, 9]);
        assert!(PartSpec::parse_parts("x", false).is_err());
        assert!(PartSpec::parse_parts("0..3", false).is_err());
    }

    #[test]
    fn colored_examples() {
        assert_eq!(count_colored(Variant::BN, 1, 0, 1).unwrap(), 1);
        assert_eq!(count_colored(Variant::BD, 1, 0, 1).unwrap(), 0);
        assert_eq!(count_colored(Variant::AN, 3, 1, 0).unwrap(), 1);
        assert_eq!(count_colored(Variant::CN, 0, 0, 0).unwrap(), 1);
        assert!(count_colored(Variant::AN, 31, 0, 0).is_err());
        assert!(count_colored(Variant::AN, 10, 5, 4).is_err());
    }

    #[test]
    fn a_numerator_allows_zero_blue() {
        // i = 0, j = 1: one red part n, one blue part 0
        let v = enumerate_colored(Variant::AN, 4, 0, 1).unwrap();
        assert_eq!(v.len(), 1);
        assert_eq!(v[0].red_parts, vec![4]);
        assert_eq!(v[0].blue_parts, vec![0]);
    }

    #[test]
    fn distinct_sets_respects_gap() {
        assert_eq!(distinct_sets(6, 2, 1, 6, 2), vec![vec![5, 1], vec![4, 2]]);
        assert_eq!(distinct_sets(0, 0, 1, 6, 1), vec![Vec::<u32>::new()]);
        assert_eq!(distinct_sets(3, 3, 0, 2, 1), vec![vec![2, 1, 0]]);
    }

    #[test]
    fn csv_layout() {
        let rows = colored_table(&[Variant::BN], 1, 0, 1).unwrap();
        assert_eq!(
            colored_table_csv(&rows),
            "n,i,j,variant,count\n0,0,0,BN,1\n0,0,1,BN,0\n1,0,0,BN,0\n1,0,1,BN,1\n"
        );
    }
}
