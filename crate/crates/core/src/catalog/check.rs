//! Checking entries at one `(p, a)`, sweeping prime ranges, and reports.

use std::cmp::Ordering;
use std::fmt;

use rayon::prelude::*;
use serde::{Serialize, Serializer};

use super::entries::select;
use super::eval::{Env, EvalError, Val};
use super::types::{CongruenceSpec, Status};
use crate::arith::{sieve_primes, PadicTracked};
use crate::error::Error;
use crate::special::cache::euler_p3_fast;
use crate::special::quadform::candidates;
use crate::sums::{eval_sum, Range, SumSpec, TermFactor, DEFAULT_GUARD, MAX_RANGE_MODULUS};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail,
    Skipped(String),
}

impl Verdict {
    pub fn is_pass(&self) -> bool {
        *self == Verdict::Pass
    }

    pub fn is_fail(&self) -> bool {
        *self == Verdict::Fail
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Pass => f.write_str("pass"),
            Verdict::Fail => f.write_str("fail"),
            Verdict::Skipped(r) => write!(f, "skipped({r})"),
        }
    }
}

impl Serialize for Verdict {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct CheckResult {
    pub id: String,
    pub p: u64,
    pub a: u32,
    pub lhs_class: String,
    pub rhs_class: String,
    /// `p^e` as text.
    pub modulus: String,
    pub mod_exp: i64,
    pub verdict: Verdict,
    pub achieved_precision: i64,
    pub quad_form_ambiguity: bool,
    pub status: Status,
    pub diagnostic: Option<String>,
}

impl CheckResult {
    fn blank(spec: &CongruenceSpec, p: u64, a: u32, e: i64, verdict: Verdict) -> Self {
        Self {
            id: spec.id.clone(),
            p,
            a,
            lhs_class: String::new(),
            rhs_class: String::new(),
            modulus: format!("{p}^{e}"),
            mod_exp: e,
            verdict,
            achieved_precision: 0,
            quad_form_ambiguity: false,
            status: spec.status,
            diagnostic: None,
        }
    }
}

/// Verdict for one form solution (or none).
struct Outcome {
    pass: bool,
    lhs: String,
    rhs: String,
    achieved: i64,
    diagnostic: Option<String>,
}

fn compare(
    spec: &CongruenceSpec,
    env: &Env,
    e: i64,
    guard: u32,
) -> std::result::Result<Outcome, EvalError> {
    let need = e + guard as i64;
    let p = env.p;
    let lhs = env.eval(&spec.lhs, need)?.to_tracked(p, need);
    let rhs = env.eval(&spec.rhs, need)?.to_tracked(p, need);
    let diff = lhs.sub(&rhs);
    let achieved = diff.abs_precision().min(need);
    let class = |x: &PadicTracked| x.truncate(e).class_string();
    if achieved < e {
        return Ok(Outcome {
            pass: false,
            lhs: class(&lhs),
            rhs: class(&rhs),
            achieved,
            diagnostic: Some(format!(
                "precision shortfall: needed {e}, achieved {achieved}"
            )),
        });
    }
    let pass = diff.is_zero_mod(e);
    let diagnostic = (!pass).then(|| match diff.valuation() {
        Some(v) => format!("difference has valuation {v}"),
        None => "difference is zero".to_string(),
    });
    Ok(Outcome {
        pass,
        lhs: class(&lhs),
        rhs: class(&rhs),
        achieved,
        diagnostic,
    })
}

fn modulus_fits(p: u64, a: u32) -> bool {
    p.checked_pow(a).is_some_and(|q| q <= MAX_RANGE_MODULUS)
}

/// Checks `spec` at `(p, a)` with the given guard digits.
pub fn check_with_guard(spec: &CongruenceSpec, p: u64, a: u32, guard: u32) -> CheckResult {
    if !spec.is_applicable(p, a) {
        return CheckResult::blank(spec, p, a, 0, Verdict::Skipped("inapplicable".into()));
    }
    let e = spec.mod_exp.at(p, a);
    if !modulus_fits(p, a) {
        return CheckResult::blank(spec, p, a, e, Verdict::Skipped("rangeTooLarge".into()));
    }
    let mut res = CheckResult::blank(spec, p, a, e, Verdict::Fail);
    let mut env = Env::new(p, a);
    let outcome = match &spec.form {
        None => compare(spec, &env, e, guard),
        Some(req) => {
            let cands = candidates(p, req);
            res.quad_form_ambiguity = cands.len() > 1;
            if cands.is_empty() {
                res.diagnostic = Some(format!("no representation {}", req.describe()));
                return res;
            }
            let mut chosen = None;
            for c in &cands {
                env.form = Some((c.x, c.y));
                match compare(spec, &env, e, guard) {
                    Ok(o) => {
                        let o = Outcome {
                            diagnostic: o
                                .diagnostic
                                .map(|d| format!("{d} at (x, y) = ({}, {})", c.x, c.y)),
                            ..o
                        };
                        let pass = o.pass;
                        chosen = Some(Ok(o));
                        if pass {
                            break;
                        }
                    }
                    Err(err) => {
                        chosen = Some(Err(err));
                        break;
                    }
                }
            }
            chosen.expect("at least one candidate")
        }
    };
    match outcome {
        Ok(o) => {
            res.verdict = if o.pass { Verdict::Pass } else { Verdict::Fail };
            res.lhs_class = o.lhs;
            res.rhs_class = o.rhs;
            res.achieved_precision = o.achieved;
            if res.diagnostic.is_none() {
                res.diagnostic = o.diagnostic;
            }
        }
        Err(EvalError::Skip(reason)) => res.verdict = Verdict::Skipped(reason),
        Err(EvalError::Failed(err)) => res.diagnostic = Some(err.to_string()),
    }
    res
}

/// Checks `spec` at `(p, a)` with [`DEFAULT_GUARD`] guard digits.
pub fn check(spec: &CongruenceSpec, p: u64, a: u32) -> CheckResult {
    check_with_guard(spec, p, a, DEFAULT_GUARD)
}

#[derive(Clone, Debug)]
pub struct RunConfig {
    pub guard: u32,
    /// Largest prime checked at `a >= 2`; larger ones are reported as skipped.
    pub a_cap_prime: u64,
    /// Worker threads; `None` uses the global pool.
    pub workers: Option<usize>,
}

impl Default for RunConfig {
    fn default() -> Self {
        Self {
            guard: DEFAULT_GUARD,
            a_cap_prime: 100,
            workers: None,
        }
    }
}

fn natural_cmp(x: &str, y: &str) -> Ordering {
    fn chunks(s: &str) -> Vec<(bool, &str)> {
        let mut out = Vec::new();
        let mut start = 0;
        let b = s.as_bytes();
        for i in 1..=b.len() {
            if i == b.len() || b[i].is_ascii_digit() != b[start].is_ascii_digit() {
                out.push((b[start].is_ascii_digit(), &s[start..i]));
                start = i;
            }
        }
        out
    }
    let (cx, cy) = (chunks(x), chunks(y));
    for ((dx, sx), (dy, sy)) in cx.iter().zip(cy.iter()) {
        let ord = if *dx && *dy {
            sx.len().cmp(&sy.len()).then_with(|| sx.cmp(sy))
        } else {
            sx.cmp(sy)
        };
        if ord != Ordering::Equal {
            return ord;
        }
    }
    cx.len().cmp(&cy.len())
}

/// Runs every selected entry over the primes in `[lo, hi]` and `a = 1..=a_max`.
///
/// Entries stated only for `a = 1` contribute one item per prime. Results are
/// ordered by `(id, p, a)` with ids compared in natural order.
pub fn run_range(
    patterns: &[String],
    lo: u64,
    hi: u64,
    a_max: u32,
    cfg: &RunConfig,
) -> Vec<CheckResult> {
    let specs = select(patterns);
    run_specs(&specs, lo, hi, a_max, cfg)
}

pub fn run_specs(
    specs: &[&CongruenceSpec],
    lo: u64,
    hi: u64,
    a_max: u32,
    cfg: &RunConfig,
) -> Vec<CheckResult> {
    let primes = if hi < 3 {
        Vec::new()
    } else {
        sieve_primes(lo.max(3), hi)
    };
    let mut items = Vec::new();
    for (si, spec) in specs.iter().enumerate() {
        for &p in &primes {
            let top = if spec.multi_a { a_max.max(1) } else { 1 };
            for a in 1..=top {
                items.push((si, p, a));
            }
        }
    }
    let work = |&(si, p, a): &(usize, u64, u32)| {
        let spec = specs[si];
        if a > 1 && p > cfg.a_cap_prime && spec.is_applicable(p, a) {
            let e = spec.mod_exp.at(p, a);
            return CheckResult::blank(
                spec,
                p,
                a,
                e,
                Verdict::Skipped(format!("aCap(p>{})", cfg.a_cap_prime)),
            );
        }
        check_with_guard(spec, p, a, cfg.guard)
    };
    let mut out: Vec<CheckResult> = match cfg.workers {
        Some(n) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(n.max(1))
                .build()
                .expect("thread pool");
            pool.install(|| items.par_iter().map(work).collect())
        }
        None => items.par_iter().map(work).collect(),
    };
    out.sort_by(|x, y| {
        natural_cmp(&x.id, &y.id)
            .then(x.p.cmp(&y.p))
            .then(x.a.cmp(&y.a))
    });
    out
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub total: usize,
    pub pass: usize,
    pub fail: usize,
    pub skipped: usize,
}

impl Summary {
    pub fn of(results: &[CheckResult]) -> Self {
        let mut s = Summary {
            total: results.len(),
            ..Default::default()
        };
        for r in results {
            match r.verdict {
                Verdict::Pass => s.pass += 1,
                Verdict::Fail => s.fail += 1,
                Verdict::Skipped(_) => s.skipped += 1,
            }
        }
        s
    }
}

impl fmt::Display for Summary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "total {} pass {} fail {} skipped {}",
            self.total, self.pass, self.fail, self.skipped
        )
    }
}

pub fn to_json_lines(results: &[CheckResult]) -> String {
    let mut out = String::new();
    for r in results {
        out.push_str(&serde_json::to_string(r).expect("serializable"));
        out.push('\n');
    }
    out
}

pub fn to_csv(results: &[CheckResult]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    for r in results {
        w.serialize(r).expect("serializable");
    }
    String::from_utf8(w.into_inner().expect("flush")).expect("utf-8")
}

pub fn to_text(results: &[CheckResult]) -> String {
    let mut out = String::new();
    for r in results {
        out.push_str(&format!(
            "{:<24} p={:<5} a={} {:<10} {} vs {} (mod {}){}\n",
            r.id,
            r.p,
            r.a,
            r.verdict.to_string(),
            r.lhs_class,
            r.rhs_class,
            r.modulus,
            r.diagnostic
                .as_ref()
                .map(|d| format!(" [{d}]"))
                .unwrap_or_default()
        ));
    }
    out
}

/// One exceptional prime and whether the first sum then matches its sign
/// term modulo `p^3`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ExceptionalHit {
    pub p: u64,
    pub sum_class: String,
    pub collapses_mod_p3: bool,
}

/// Primes `5 <= p <= bound` with `p | E_{p-3}`, ascending.
pub fn search_exceptional(bound: u64) -> Vec<u64> {
    if bound < 5 {
        return Vec::new();
    }
    let primes = sieve_primes(5, bound);
    primes
        .into_par_iter()
        .filter(|&p| euler_p3_fast(p) == 0)
        .collect()
}

/// [`search_exceptional`] with the mod `p^3` cross-check of the `2^k` sum.
pub fn exceptional_report(bound: u64) -> Result<Vec<ExceptionalHit>, Error> {
    let spec = SumSpec::new(Range::full())
        .over(2)
        .factor(TermFactor::central(1));
    search_exceptional(bound)
        .into_iter()
        .map(|p| {
            let s = eval_sum(&spec, p, 1, 3)?.truncate(3);
            let sign = if (p - 1) / 2 % 2 == 0 { 1 } else { -1 };
            let target =
                Val::Exact(num_rational::BigRational::from_integer(sign.into())).to_tracked(p, 3);
            Ok(ExceptionalHit {
                p,
                sum_class: s.class_string(),
                collapses_mod_p3: s.sub(&target).is_zero_mod(3),
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn natural_order() {
        assert_eq!(
            natural_cmp("conj5.2/line2", "conj5.2/line10"),
            Ordering::Less
        );
        assert_eq!(
            natural_cmp("conj5.10/line1", "conj5.2/line1"),
            Ordering::Greater
        );
        assert_eq!(natural_cmp("thm1.1/eq1.1", "thm1.1/eq1.1"), Ordering::Equal);
    }
}
