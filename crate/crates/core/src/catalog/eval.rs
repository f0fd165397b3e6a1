//! Evaluation of [`Expr`] trees to a requested absolute precision.
//!
//! Each node is asked for a value known modulo `p^need`. Products pass the
//! request on after accounting for the valuation of the other factor, so a
//! factor like `p^{-3}` makes its partner be computed three digits deeper.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::expr::{Expr, Special};
use crate::arith::{rational_valuation, PadicTracked};
use crate::error::Error;
use crate::special::cache::{fermat_quotient_two, Source};
use crate::special::harmonic::reciprocal_power_sum;
use crate::special::poly::{bernoulli_poly_exact, euler_poly_exact};
use crate::special::tables::exact_ceiling;
use crate::special::{special_values, SpecialValueCache};
use crate::sums::eval_sum_to;

/// Why an evaluation stopped.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EvalError {
    /// A value is not available at this prime, e.g. beyond the exact ceiling.
    Skip(String),
    Failed(Error),
}

impl From<Error> for EvalError {
    fn from(e: Error) -> Self {
        EvalError::Failed(e)
    }
}

pub(crate) type EvalResult<T> = std::result::Result<T, EvalError>;

#[derive(Clone, Debug)]
pub enum Val {
    Exact(BigRational),
    Tracked(PadicTracked),
}

impl Val {
    pub fn to_tracked(&self, p: u64, abs: i64) -> PadicTracked {
        match self {
            Val::Exact(q) => PadicTracked::from_rational_abs(q, p, abs),
            Val::Tracked(t) => t.clone(),
        }
    }

    /// Lower bound for the valuation, `None` for an exact zero.
    fn floor(&self, p: u64) -> Option<i64> {
        match self {
            Val::Exact(q) => rational_valuation(q, p),
            Val::Tracked(t) if t.is_exact_zero() => None,
            Val::Tracked(t) => Some(t.valuation_floor()),
        }
    }

    fn abs(&self) -> i64 {
        match self {
            Val::Exact(_) => i64::MAX / 8,
            Val::Tracked(t) => t.abs_precision(),
        }
    }

    fn is_zero(&self) -> bool {
        match self {
            Val::Exact(q) => q.is_zero(),
            Val::Tracked(t) => t.is_exact_zero(),
        }
    }
}

type CacheMap = HashMap<(u64, u32, u64), Arc<SpecialValueCache>>;

fn cache_store() -> &'static Mutex<CacheMap> {
    static STORE: OnceLock<Mutex<CacheMap>> = OnceLock::new();
    STORE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// `special_values(p, g)`, memoized per `(p, g, ceiling)`.
pub fn cached_special_values(p: u64, g: u32) -> Arc<SpecialValueCache> {
    let key = (p, g, exact_ceiling());
    if let Some(c) = cache_store().lock().expect("cache lock").get(&key) {
        return c.clone();
    }
    let built = Arc::new(special_values(p, g));
    cache_store()
        .lock()
        .expect("cache lock")
        .entry(key)
        .or_insert(built)
        .clone()
}

/// Evaluation context for one `(p, a)` and optionally one form solution.
pub struct Env {
    pub p: u64,
    pub a: u32,
    pub form: Option<(i64, i64)>,
}

impl Env {
    pub fn new(p: u64, a: u32) -> Self {
        Self { p, a, form: None }
    }

    fn special(&self, s: Special, need: i64) -> EvalResult<PadicTracked> {
        let p = self.p;
        let g = need.clamp(1, 64) as u32;
        if s == Special::FermatQ2 {
            return Ok(fermat_quotient_two(p, g));
        }
        let cache = cached_special_values(p, g);
        let entry = match s {
            Special::EulerP3 => cache.euler_p3.as_ref(),
            Special::BernoulliP3 => cache.bernoulli_p3.as_ref(),
            Special::BernoulliP5 => cache.bernoulli_p5.as_ref(),
            Special::BernoulliPolyThird => cache.bpoly_third.as_ref(),
            Special::EulerPolyQuarter => cache.epoly_quarter.as_ref(),
            Special::FermatQ2 => unreachable!("handled above"),
        };
        let Some(c) = entry else {
            return self.special_fallback(s, need);
        };
        if c.source == Source::FastPath && c.value.abs_precision() < need {
            return Err(EvalError::Skip("outOfExactRange".into()));
        }
        Ok(c.value.clone())
    }

    /// Values the cache omits at small primes, computed exactly.
    fn special_fallback(&self, s: Special, need: i64) -> EvalResult<PadicTracked> {
        let p = self.p;
        let third = BigRational::new(BigInt::one(), BigInt::from(3));
        let quarter = BigRational::new(BigInt::one(), BigInt::from(4));
        let exact = match s {
            Special::BernoulliPolyThird if p >= 2 && p - 2 <= exact_ceiling() => {
                bernoulli_poly_exact((p - 2) as usize, &third)
            }
            Special::EulerPolyQuarter if p >= 3 && p - 3 <= exact_ceiling() => {
                euler_poly_exact((p - 3) as usize, &quarter)
            }
            Special::BernoulliPolyThird | Special::EulerPolyQuarter => {
                return Err(EvalError::Skip("outOfExactRange".into()))
            }
            _ => return Err(EvalError::Skip(format!("{s} undefined at p = {p}"))),
        };
        Ok(PadicTracked::from_rational_abs(&exact, p, need))
    }

    pub fn eval(&self, e: &Expr, need: i64) -> EvalResult<Val> {
        let p = self.p;
        match e {
            Expr::Const(q) => Ok(Val::Exact(q.clone())),
            Expr::PPow(j) => Ok(Val::Exact(p_power(p, *j))),
            Expr::QPow(j) => Ok(Val::Exact(p_power(p, j * self.a as i64))),
            Expr::Exact { f, .. } => Ok(Val::Exact(f(p, self.a))),
            Expr::Form { f, name } => {
                let (x, y) = self.form.ok_or_else(|| {
                    EvalError::Failed(Error::InvalidArgument(format!(
                        "`{name}` needs a form solution"
                    )))
                })?;
                Ok(Val::Exact(f(x, y, p)))
            }
            Expr::Special(s) => Ok(Val::Tracked(self.special(*s, need)?)),
            Expr::RecipSum { hi, s, alternating } => Ok(Val::Tracked(reciprocal_power_sum(
                p,
                1,
                hi.at(p),
                *s,
                *alternating,
                need,
            ))),
            Expr::Sum(spec) => Ok(Val::Tracked(eval_sum_to(spec, p, self.a, need)?)),
            Expr::Add(terms) => {
                let vals = terms
                    .iter()
                    .map(|t| self.eval(t, need))
                    .collect::<EvalResult<Vec<_>>>()?;
                Ok(add_all(&vals, p, need))
            }
            Expr::Neg(inner) => Ok(match self.eval(inner, need)? {
                Val::Exact(q) => Val::Exact(-q),
                Val::Tracked(t) => Val::Tracked(t.neg()),
            }),
            Expr::Mul(a, b) => self.mul(a, b, need),
            Expr::Div(a, b) => {
                let d = match self.eval(b, 0)? {
                    Val::Exact(q) => q,
                    Val::Tracked(_) => {
                        return Err(EvalError::Failed(Error::InvalidArgument(format!(
                            "divisor `{b}` is not exact"
                        ))))
                    }
                };
                if d.is_zero() {
                    return Err(EvalError::Failed(Error::InvalidArgument(format!(
                        "divisor `{b}` is zero"
                    ))));
                }
                let vd = rational_valuation(&d, p).expect("nonzero");
                let inv = d.recip();
                Ok(scale(self.eval(a, need + vd)?, &inv, p))
            }
        }
    }

    fn mul(&self, a: &Expr, b: &Expr, need: i64) -> EvalResult<Val> {
        let p = self.p;
        let mut va = self.eval(a, need)?;
        if va.is_zero() {
            return Ok(Val::Exact(BigRational::zero()));
        }
        if let Val::Exact(c) = &va {
            let vc = rational_valuation(c, p).expect("nonzero");
            return Ok(scale(self.eval(b, need - vc)?, c, p));
        }
        let mut fa = va.floor(p).expect("nonzero");
        let mut vb = self.eval(b, need - fa)?;
        if vb.is_zero() {
            return Ok(Val::Exact(BigRational::zero()));
        }
        if let Val::Exact(c) = &vb {
            let vc = rational_valuation(c, p).expect("nonzero");
            if va.abs() < need - vc {
                va = self.eval(a, need - vc)?;
            }
            return Ok(scale(va, c, p));
        }
        // Both tracked: refine until each side covers the other's valuation.
        for _ in 0..4 {
            let fb = vb.floor(p).expect("nonzero");
            let mut changed = false;
            if va.abs() < need - fb {
                va = self.eval(a, need - fb)?;
                changed = true;
            }
            let nfa = va.floor(p).expect("nonzero");
            if nfa != fa || vb.abs() < need - nfa {
                fa = nfa;
                if vb.abs() < need - fa {
                    vb = self.eval(b, need - fa)?;
                    changed = true;
                }
            }
            if !changed {
                break;
            }
        }
        let (x, y) = (va.to_tracked(p, need), vb.to_tracked(p, need));
        Ok(Val::Tracked(x.mul(&y)))
    }
}

fn p_power(p: u64, j: i64) -> BigRational {
    let base = BigInt::from(p).pow(j.unsigned_abs() as u32);
    if j >= 0 {
        BigRational::from_integer(base)
    } else {
        BigRational::new(BigInt::one(), base)
    }
}

fn scale(v: Val, c: &BigRational, p: u64) -> Val {
    match v {
        Val::Exact(q) => Val::Exact(q * c),
        Val::Tracked(t) => {
            if c.is_zero() {
                return Val::Exact(BigRational::zero());
            }
            let vc = rational_valuation(c, p).expect("nonzero");
            // The unit of `c` is needed only to the unit precision of `t`.
            let m = t.unit_precision().unwrap_or(1);
            let ct = PadicTracked::from_rational(c, p, m);
            debug_assert_eq!(ct.valuation(), Some(vc));
            Val::Tracked(t.mul(&ct))
        }
    }
}

fn add_all(vals: &[Val], p: u64, need: i64) -> Val {
    if vals.iter().all(|v| matches!(v, Val::Exact(_))) {
        let mut acc = BigRational::zero();
        for v in vals {
            if let Val::Exact(q) = v {
                acc += q;
            }
        }
        return Val::Exact(acc);
    }
    let mut exact = BigRational::zero();
    let mut acc = PadicTracked::exact_zero(p);
    for v in vals {
        match v {
            Val::Exact(q) => exact += q,
            Val::Tracked(t) => acc = acc.add(t),
        }
    }
    if !exact.is_zero() {
        let abs = acc.abs_precision().min(need.max(acc.valuation_floor()));
        acc = acc.add(&PadicTracked::from_rational_abs(&exact, p, abs.max(need)));
    }
    Val::Tracked(acc)
}
