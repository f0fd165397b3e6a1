//! Certified evaluation of the conjectured and classical infinite series.
//!
//! Partial sums are exact rationals. Tails are bounded from a declared term
//! ratio that is checked against every evaluated term, and the closed forms
//! come from [`constants`] as rational balls.

mod ball;
mod constants;
mod decimal;
mod registry;
#[cfg(test)]
mod tests;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

pub use ball::Ball;
pub use constants::{
    constant_ball, hurwitz, reference_constant, zeta4_from_pi, Constant, MAX_DIGITS,
};
pub use decimal::HighPrecisionDecimal;
pub use registry::{series_lookup, series_registry, Claim, SeriesEntry};

use crate::catalog::Verdict;
use crate::error::{Error, Result};
use crate::sums::term_exact;
use ball::ten_pow_neg;
use decimal::fixed;

/// Largest `digits` accepted by [`eval_series`].
pub const MAX_SERIES_DIGITS: u32 = 100;

/// Largest number of terms accepted by [`eval_series`].
pub const MAX_TERMS: u64 = 5000;

const WORK_GUARD: u32 = 10;

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct SeriesResult {
    pub id: String,
    pub claimed: String,
    pub digits: u32,
    pub terms: u64,
    pub partial_sum: String,
    pub claimed_value: String,
    /// `|partial - claimed|`, in scientific notation.
    pub difference: String,
    /// Bound on the omitted tail, in scientific notation.
    pub tail_bound: String,
    /// `|first omitted term|`, which also bounds the tail of an alternating series.
    pub next_term: String,
    pub observed_ratio: String,
    pub verdict: Verdict,
}

fn terms_of(e: &SeriesEntry, count: u64) -> Result<Vec<BigRational>> {
    (0..count as i64)
        .map(|i| {
            let k = e.start + i;
            term_exact(&e.term, k, 2).ok_or(Error::DivisionByZero(k))
        })
        .collect()
}

/// `x` as `d.ddddde-N` with a few significant digits.
pub fn sci(x: &BigRational) -> String {
    if x.is_zero() {
        return "0".to_string();
    }
    let neg = x.is_negative();
    let mut a = x.abs();
    let ten = BigRational::from_integer(BigInt::from(10));
    let mut e = 0i64;
    // Bring a into [1, 10) by bit-length estimate, then fix up.
    let est =
        ((a.numer().bits() as f64 - a.denom().bits() as f64) * std::f64::consts::LOG10_2) as i64;
    if est > 0 {
        a /= ten.pow(est as i32);
    } else if est < 0 {
        a *= ten.pow((-est) as i32);
    }
    e += est;
    while a >= ten {
        a /= &ten;
        e += 1;
    }
    while a < BigRational::one() {
        a *= &ten;
        e -= 1;
    }
    let mut m = fixed(&a, 4);
    if m.starts_with("10") {
        m = "1.0000".to_string();
        e += 1;
    }
    format!("{}{m}e{e}", if neg { "-" } else { "" })
}

/// Largest `|t_{k+1}/t_k|` over the evaluated terms from the entry's `rho_from`.
fn max_ratio(e: &SeriesEntry, terms: &[BigRational]) -> Option<BigRational> {
    let skip = (e.rho_from - e.start).max(0) as usize;
    terms
        .windows(2)
        .skip(skip)
        .filter(|w| !w[0].is_zero())
        .map(|w| (&w[1] / &w[0]).abs())
        .max()
}

/// Evaluate series `id` with `k_max` terms and compare it with its closed form
/// at `digits` decimal places.
pub fn eval_series(id: &str, digits: u32, k_max: u64) -> Result<SeriesResult> {
    let e = series_lookup(id).ok_or_else(|| Error::UnknownId(id.to_string()))?;
    if digits == 0 || digits > MAX_SERIES_DIGITS {
        return Err(Error::InvalidArgument(format!(
            "digits must lie in 1..={MAX_SERIES_DIGITS}"
        )));
    }
    if k_max == 0 || k_max > MAX_TERMS {
        return Err(Error::InvalidArgument(format!(
            "terms must lie in 1..={MAX_TERMS}"
        )));
    }
    let terms = terms_of(e, k_max + 1)?;
    let ratio = max_ratio(e, &terms).unwrap_or_else(BigRational::zero);
    let rho = e.rho_rational();
    if !e.geometric() || ratio >= BigRational::one() || ratio > rho {
        return Err(Error::SlowConvergence {
            id: id.to_string(),
            ratio: fixed(&ratio, 6),
        });
    }
    let (summed, next) = terms.split_at(k_max as usize);
    let partial: BigRational = summed.iter().sum();
    let next = next[0].abs();
    // Every later ratio stays below rho, so the tail is dominated by a geometric series.
    let tail = &next / (BigRational::one() - &rho);
    let w = digits + WORK_GUARD;
    let claim = e.claim.value(w)?;
    let diff = (&partial - &claim.mid).abs();
    let tol = ten_pow_neg(digits);
    let certified = tail <= tol;
    let matches = diff <= &tol + &tail + &claim.rad;
    let verdict = if certified && matches {
        Verdict::Pass
    } else if !matches {
        Verdict::Fail
    } else {
        Verdict::Skipped(format!(
            "tail bound {} exceeds 1e-{digits}; add terms",
            sci(&tail)
        ))
    };
    Ok(SeriesResult {
        id: id.to_string(),
        claimed: e.claim.to_string(),
        digits,
        terms: k_max,
        partial_sum: fixed(&partial, digits),
        claimed_value: fixed(&claim.mid, digits),
        difference: sci(&diff),
        tail_bound: sci(&tail),
        next_term: sci(&next),
        observed_ratio: fixed(&ratio, 6),
        verdict,
    })
}

/// Enough terms for `digits` places, from the declared ratio.
pub fn default_terms(id: &str, digits: u32) -> Result<u64> {
    let e = series_lookup(id).ok_or_else(|| Error::UnknownId(id.to_string()))?;
    if !e.geometric() {
        return Ok(200);
    }
    let rho = e.rho.0 as f64 / e.rho.1 as f64;
    let n = (digits as f64 + 4.0) / -rho.log10();
    Ok((n.ceil() as u64 + 5).clamp(1, MAX_TERMS))
}

/// One row per registered series; evaluation errors become failing rows.
pub fn run_series_suite(ids: Option<&[String]>, digits: u32, terms: Option<u64>) -> Vec<SeriesRow> {
    use rayon::prelude::*;
    let chosen: Vec<&SeriesEntry> = match ids {
        Some(ids) => series_registry()
            .iter()
            .filter(|e| ids.iter().any(|i| i == e.id))
            .collect(),
        None => series_registry().iter().collect(),
    };
    chosen
        .par_iter()
        .map(|e| {
            let k = match terms {
                Some(k) => k,
                None => default_terms(e.id, digits).unwrap_or(200),
            };
            match eval_series(e.id, digits, k) {
                Ok(r) => SeriesRow {
                    id: r.id.clone(),
                    claimed: r.claimed.clone(),
                    digits,
                    terms: k,
                    tail_bound: r.tail_bound.clone(),
                    difference: r.difference.clone(),
                    verdict: r.verdict.clone(),
                    detail: String::new(),
                },
                Err(err) => SeriesRow {
                    id: e.id.to_string(),
                    claimed: e.claim.to_string(),
                    digits,
                    terms: k,
                    tail_bound: "none".to_string(),
                    difference: String::new(),
                    verdict: Verdict::Fail,
                    detail: err.to_string(),
                },
            }
        })
        .collect()
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct SeriesRow {
    pub id: String,
    pub claimed: String,
    pub digits: u32,
    pub terms: u64,
    pub tail_bound: String,
    pub difference: String,
    pub verdict: Verdict,
    pub detail: String,
}

pub fn series_rows_to_json_lines(rows: &[SeriesRow]) -> String {
    rows.iter()
        .map(|r| serde_json::to_string(r).expect("row serializes") + "\n")
        .collect()
}

pub fn series_rows_to_csv(rows: &[SeriesRow]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record([
        "id",
        "claimed",
        "digits",
        "terms",
        "tailBound",
        "difference",
        "verdict",
        "detail",
    ])
    .expect("in-memory write");
    for r in rows {
        let v = r.verdict.to_string();
        w.write_record([
            &r.id,
            &r.claimed,
            &r.digits.to_string(),
            &r.terms.to_string(),
            &r.tail_bound,
            &r.difference,
            &v,
            &r.detail,
        ])
        .expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("flush")).expect("utf8")
}

pub fn series_rows_to_text(rows: &[SeriesRow]) -> String {
    let mut out = String::new();
    for r in rows {
        out += &format!(
            "{:<22} {:<24} D={:<4} terms={:<5} tail<={:<12} diff={:<12} {}",
            r.id, r.claimed, r.digits, r.terms, r.tail_bound, r.difference, r.verdict
        );
        if !r.detail.is_empty() {
            out += &format!("  {}", r.detail);
        }
        out.push('\n');
    }
    out
}

/// The high-precision check on the first series of the `pi^2` family.
#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct HeadlineCheck {
    pub terms: u64,
    pub working_digits: u32,
    /// Upper bound for `|2 S / pi^2 - 1|`.
    pub relative_error: String,
    pub threshold_exponent: u32,
    pub holds: bool,
}

/// `S` = the first `terms` terms of `conj1.4/first`; checks `|2S/pi^2 - 1| < 10^-exp`.
pub fn headline_check(terms: u64, working_digits: u32, exp: u32) -> Result<HeadlineCheck> {
    if working_digits > MAX_DIGITS {
        return Err(Error::InvalidArgument(format!(
            "at most {MAX_DIGITS} digits are supported"
        )));
    }
    let e = series_lookup("conj1.4/first").expect("registered");
    let partial: BigRational = terms_of(e, terms)?.iter().sum();
    let pi = constant_ball(Constant::Pi, working_digits)?;
    let inv = pi.powi(-2).expect("pi is nonzero");
    let q = &Ball::exact(partial * BigRational::from_integer(BigInt::from(2))) * &inv;
    let err = &q - &Ball::int(1);
    let upper = err.mid.abs() + &err.rad;
    Ok(HeadlineCheck {
        terms,
        working_digits,
        relative_error: sci(&upper),
        threshold_exponent: exp,
        holds: upper < ten_pow_neg(exp),
    })
}
