//! The chirally cosmetic family on `(2,r)`-torus knots,
//!
//! ```text
//! S³_K(2r²(2k+1) / (r(2k+1) + 1)) ≅ −S³_K(2r²(2k+1) / (r(2k+1) − 1)),
//! ```
//!
//! and an exhaustive scan for slope pairs that pass the homological and
//! Casson–Walker necessary conditions. Survivors are candidates only.

use std::collections::HashMap;

use num_integer::Integer;
use num_traits::{One, ToPrimitive};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::alexander::a2_of;
use crate::arith::{int, int_serde, Int, Rational};
use crate::error::{Error, Result};
use crate::invariants::{casson_walker, cw_pair_test};
use crate::surgery::Slope;
use crate::topo::KnotExpr;

pub const CANDIDATE_LABEL: &str = "candidate (necessary conditions passed)";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct FamilyB {
    pub r: i64,
    pub k: i64,
}

fn check_family_params(r: i64, k: i64) -> Result<()> {
    if r % 2 == 0 || r.abs() < 3 {
        return Err(Error::pre(format!("r odd with |r| ≥ 3 (got r = {r})")));
    }
    if k < 0 {
        return Err(Error::pre(format!("k ≥ 0 (got k = {k})")));
    }
    Ok(())
}

/// The reduced slopes `(2r²(2k+1)/(r(2k+1)+1), 2r²(2k+1)/(r(2k+1)−1))`.
///
/// Both fractions reduce by exactly 2, to a common numerator `r²(2k+1)`.
pub fn family_b_pair(r: i64, k: i64) -> Result<(Slope, Slope)> {
    check_family_params(r, k)?;
    let (r, t) = (int(r), int(2 * k + 1));
    let numer = int(2) * &r * &r * &t;
    let mut out = Vec::with_capacity(2);
    for delta in [1, -1] {
        let denom = &r * &t + delta;
        if numer.gcd(&denom) != int(2) {
            return Err(Error::Inconsistent(format!(
                "gcd({numer}, {denom}) ≠ 2 for a family slope"
            )));
        }
        out.push(Slope::new(numer.clone(), denom)?);
    }
    let minus = out.pop().expect("two slopes");
    let plus = out.pop().expect("two slopes");
    Ok((plus, minus))
}

/// A pair `m/n`, `m/n′` with `n > n′` that passed every filter.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CandidatePair {
    pub m: i64,
    pub n: i64,
    pub n_prime: i64,
    pub passed: Vec<String>,
    pub family_b: Option<FamilyB>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchSummary {
    pub label: String,
    pub knot: String,
    #[serde(with = "int_serde")]
    pub a2: Int,
    pub m_max: i64,
    pub n_max: i64,
    pub candidates: usize,
    pub family_b: usize,
}

/// `r` when the knot is a positive `(r,2)`-torus knot, whose family slopes
/// are positive.
fn family_r(knot: &KnotExpr) -> Option<i64> {
    let t = knot.torus_type()?;
    let r = t.p().to_i64()?;
    (t.has_multiplicity_two() && r > 0).then_some(r)
}

fn family_annotation(r: i64, m: i64, n: i64, n_prime: i64) -> Option<FamilyB> {
    let rr = r.checked_mul(r)?;
    if m % rr != 0 || (m / rr) % 2 == 0 {
        return None;
    }
    let k = (m / rr - 1) / 2;
    let (plus, minus) = family_b_pair(r, k).ok()?;
    let matches = plus == Slope::new(m, n).ok()? && minus == Slope::new(m, n_prime).ok()?;
    matches.then_some(FamilyB { r, k })
}

fn scan_modulus(a2: &Int, m: i64, n_max: i64, family: Option<i64>) -> Result<Vec<CandidatePair>> {
    let mut by_value: HashMap<Rational, Vec<i64>> = HashMap::new();
    let mut found = Vec::new();
    let big_m = int(m);
    for n in 1..=n_max {
        if !m.gcd(&n).is_one() {
            continue;
        }
        let lambda = casson_walker(a2, &Slope::new(m, n)?)?;
        if let Some(partners) = by_value.get(&-&lambda) {
            for &n_prime in partners {
                if !cw_pair_test(a2, &big_m, &int(n), &int(n_prime))? {
                    return Err(Error::Inconsistent(format!(
                        "λ({m}/{n}) = −λ({m}/{n_prime}) but the pair test fails"
                    )));
                }
                found.push(CandidatePair {
                    m,
                    n,
                    n_prime,
                    passed: vec!["h1".into(), "casson_walker".into()],
                    family_b: family.and_then(|r| family_annotation(r, m, n, n_prime)),
                });
            }
        }
        by_value.entry(lambda).or_default().push(n);
    }
    Ok(found)
}

/// Every `(m; n, n′)` with `1 ≤ m ≤ m_max`, `1 ≤ n′ < n ≤ n_max`, both
/// slopes reduced, and `λ(S³_K(m/n)) = −λ(S³_K(m/n′))`.
///
/// Moduli are scanned in parallel on `threads` workers; the output is
/// sorted by `(m, n, n′)` whatever the worker count.
pub fn enumerate_candidates(
    knot: &KnotExpr,
    m_max: i64,
    n_max: i64,
    threads: usize,
) -> Result<Vec<CandidatePair>> {
    if m_max < 1 || n_max < 1 {
        return Err(Error::pre(format!(
            "m_max, n_max ≥ 1 (got m_max = {m_max}, n_max = {n_max})"
        )));
    }
    if threads == 0 {
        return Err(Error::pre("threads ≥ 1"));
    }
    let a2 = a2_of(knot)?;
    let family = family_r(knot);
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map_err(|e| Error::Inconsistent(format!("worker pool: {e}")))?;
    let slices: Vec<Vec<CandidatePair>> = pool.install(|| {
        (1..=m_max)
            .into_par_iter()
            .map(|m| scan_modulus(&a2, m, n_max, family))
            .collect::<Result<_>>()
    })?;
    let mut out: Vec<CandidatePair> = slices.into_iter().flatten().collect();
    out.sort_by_key(|c| (c.m, c.n, c.n_prime));
    Ok(out)
}

pub fn search_summary(
    knot: &KnotExpr,
    m_max: i64,
    n_max: i64,
    found: &[CandidatePair],
) -> Result<SearchSummary> {
    Ok(SearchSummary {
        label: CANDIDATE_LABEL.into(),
        knot: knot.to_string(),
        a2: a2_of(knot)?,
        m_max,
        n_max,
        candidates: found.len(),
        family_b: found.iter().filter(|c| c.family_b.is_some()).count(),
    })
}

/// JSON-lines rendering: one candidate per line, then `{"summary": …}`.
pub fn to_json_lines(found: &[CandidatePair], summary: &SearchSummary) -> String {
    let mut out = String::new();
    for c in found {
        out.push_str(&serde_json::to_string(c).expect("candidates serialize"));
        out.push('\n');
    }
    let summary = serde_json::json!({ "summary": summary });
    out.push_str(&summary.to_string());
    out.push('\n');
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyBCheck {
    pub k: i64,
    pub plus: Slope,
    pub minus: Slope,
    pub lambda_plus: Rational,
    pub lambda_minus: Rational,
    pub passes: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyBReport {
    pub r: i64,
    #[serde(with = "int_serde")]
    pub a2: Int,
    pub checks: Vec<FamilyBCheck>,
}

impl FamilyBReport {
    pub fn passed(&self) -> usize {
        self.checks.iter().filter(|c| c.passes).count()
    }

    pub fn all_pass(&self) -> bool {
        self.passed() == self.checks.len()
    }
}

/// Checks `λ(plus) = −λ(minus)` for `k = 0, …, k_max` with
/// `a₂ = a₂(T_{r,2})`.
pub fn verify_family_b(r: i64, k_max: i64) -> Result<FamilyBReport> {
    check_family_params(r, k_max.max(0))?;
    if r < 0 {
        return Err(Error::pre(format!("r ≥ 3 (got r = {r})")));
    }
    if k_max < 0 {
        return Err(Error::pre(format!("k_max ≥ 0 (got k_max = {k_max})")));
    }
    let a2 = a2_of(&KnotExpr::torus(r, 2)?)?;
    let mut checks = Vec::new();
    for k in 0..=k_max {
        let (plus, minus) = family_b_pair(r, k)?;
        let lambda_plus = casson_walker(&a2, &plus)?;
        let lambda_minus = casson_walker(&a2, &minus)?;
        let passes = lambda_plus == -&lambda_minus;
        if passes != cw_pair_test(&a2, plus.m(), plus.n(), minus.n())? {
            return Err(Error::Inconsistent(format!(
                "λ comparison and pair test disagree at r = {r}, k = {k}"
            )));
        }
        checks.push(FamilyBCheck {
            k,
            plus,
            minus,
            lambda_plus,
            lambda_minus,
            passes,
        });
    }
    Ok(FamilyBReport { r, a2, checks })
}
