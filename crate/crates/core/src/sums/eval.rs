//! Two-pass p-adic evaluation of [`SumSpec`] sums.
//!
//! The first pass bounds the valuation of every term from factorial
//! valuations alone. The second pass carries units modulo `p^M`, where `M` is
//! the requested absolute precision minus the smallest term valuation, so
//! every term is known to at least the requested absolute precision and no
//! cancellation can silently eat digits.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::ring::{with_ring, ModRing};
use super::spec::{Factor, InnerShape, SumSpec};
use crate::arith::modular::split_valuation_u64;
use crate::arith::padic::ppow;
use crate::arith::{is_prime, PadicTracked};
use crate::error::{Error, Result};

/// Extra `p`-adic digits carried beyond the requested precision.
pub const DEFAULT_GUARD: u32 = 2;

/// Largest `p^a` accepted as a summation bound.
pub const MAX_RANGE_MODULUS: u64 = 50_000_000;

fn vp_u64(n: u64, p: u64) -> i64 {
    split_valuation_u64(n, p).0
}

fn vp_i128(n: i128, p: u64) -> (i64, i128) {
    debug_assert!(n != 0);
    let (mut n, p) = (n, p as i128);
    let mut v = 0;
    while n % p == 0 {
        n /= p;
        v += 1;
    }
    (v, n)
}

/// `v_p(n!)` for `n = 0 ..= top`.
fn factorial_valuations(top: usize, p: u64) -> Vec<i64> {
    let mut v = Vec::with_capacity(top + 1);
    v.push(0);
    for n in 1..=top as u64 {
        let last = *v.last().expect("nonempty");
        v.push(last + vp_u64(n, p));
    }
    v
}

/// Step `j -> j+1` of `binom(num/den, j)`: multiply by `(num - den j) / (den (j+1))`.
fn rb_step(num: i64, den: i64, j: i64) -> (i128, i128) {
    (
        num as i128 - den as i128 * j as i128,
        den as i128 * (j as i128 + 1),
    )
}

/// Valuations of `binom(num/den, j)`, `None` once the product hits zero.
fn rational_binom_valuations(num: i64, den: i64, kmax: i64, p: u64) -> Vec<Option<i64>> {
    let mut out = Vec::with_capacity(kmax.max(0) as usize + 1);
    let mut cur = Some(0i64);
    for j in 0..=kmax {
        out.push(cur);
        let (a, b) = rb_step(num, den, j);
        cur = match cur {
            Some(v) if a != 0 => Some(v + vp_i128(a, p).0 - vp_i128(b, p).0),
            _ => None,
        };
    }
    out
}

struct Plan<'a> {
    spec: &'a SumSpec,
    p: u64,
    lo: i64,
    hi: i64,
    fact_v: Vec<i64>,
    rb_v: Vec<Vec<Option<i64>>>,
    weights: Vec<Option<i64>>,
}

fn validate(spec: &SumSpec, p: u64, a: u32) -> Result<u64> {
    if p < 3 || !is_prime(p) {
        return Err(Error::NotOddPrime(p));
    }
    if a == 0 {
        return Err(Error::InvalidArgument("exponent a must be >= 1".into()));
    }
    let q = (p as u128)
        .checked_pow(a)
        .filter(|&q| q <= MAX_RANGE_MODULUS as u128)
        .ok_or_else(|| {
            Error::InvalidArgument(format!("range modulus {p}^{a} exceeds {MAX_RANGE_MODULUS}"))
        })? as u64;
    if spec.base.0 == 0 || spec.base.1 == 0 {
        return Err(Error::InvalidArgument(
            "base must be a nonzero rational".into(),
        ));
    }
    for f in &spec.factors {
        if f.exp == 0 {
            return Err(Error::InvalidArgument(
                "factor exponent must be nonzero".into(),
            ));
        }
        if let Factor::RationalBinom { den, .. } = f.factor {
            if den == 0 {
                return Err(Error::InvalidArgument(
                    "rational binomial with zero denominator".into(),
                ));
            }
            if den as i128 % p as i128 == 0 {
                return Err(Error::DenominatorDivisible(p));
            }
        }
    }
    Ok(q)
}

impl<'a> Plan<'a> {
    fn new(spec: &'a SumSpec, p: u64, a: u32) -> Result<Self> {
        let q = validate(spec, p, a)?;
        let (lo, hi) = spec.range.bounds(q);
        let lo = lo.max(0);
        if spec.k_power < 0 && lo == 0 && hi >= 0 {
            return Err(Error::InvalidArgument(
                "negative power of k with k = 0 in range".into(),
            ));
        }
        let top = if hi >= lo {
            spec.max_top(hi, p).max(spec.max_top(lo, p))
        } else {
            0
        };
        let fact_v = factorial_valuations(top.max(0) as usize, p);
        let rb_v = spec
            .factors
            .iter()
            .map(|f| match f.factor {
                Factor::RationalBinom { num, den } => rational_binom_valuations(num, den, hi, p),
                _ => Vec::new(),
            })
            .collect();
        let mut plan = Self {
            spec,
            p,
            lo,
            hi,
            fact_v,
            rb_v,
            weights: Vec::new(),
        };
        plan.weights = (lo..=hi).map(|k| plan.weight(k)).collect::<Result<_>>()?;
        Ok(plan)
    }

    fn base_valuation(&self) -> i64 {
        let (n, d) = self.spec.base;
        vp_i128(n as i128, self.p).0 - vp_i128(d as i128, self.p).0
    }

    /// Lower bound for `v_p` of term `k`, or `None` for a zero term.
    fn weight(&self, k: i64) -> Result<Option<i64>> {
        let spec = self.spec;
        let p = self.p;
        let c = spec.coeff_at(k);
        if c == 0 {
            return Ok(None);
        }
        if spec.character3 && k % 3 == 0 {
            return Ok(None);
        }
        let mut w = vp_i128(c, p).0 + k * self.base_valuation();
        if spec.k_power != 0 {
            if k == 0 {
                return Ok(None);
            }
            w += spec.k_power as i64 * vp_u64(k as u64, p);
        }
        for (i, f) in spec.factors.iter().enumerate() {
            let e = f.exp as i64;
            match &f.factor {
                Factor::Binom { top, bottom } => {
                    let (t, b) = (top.at(k, p), bottom.at(k, p));
                    if t < 0 {
                        return Err(Error::InvalidArgument(format!("negative binomial top {t}")));
                    }
                    if b < 0 || b > t {
                        if e > 0 {
                            return Ok(None);
                        }
                        return Err(Error::DivisionByZero(k));
                    }
                    let fv = &self.fact_v;
                    w += e * (fv[t as usize] - fv[b as usize] - fv[(t - b) as usize]);
                }
                Factor::Linear { c1, c0 } => {
                    let l = *c1 as i128 * k as i128 + *c0 as i128;
                    if l == 0 {
                        if e > 0 {
                            return Ok(None);
                        }
                        return Err(Error::DivisionByZero(k));
                    }
                    w += e * vp_i128(l, p).0;
                }
                Factor::RationalBinom { .. } => match self.rb_v[i][k as usize] {
                    Some(v) => w += e * v,
                    None if e > 0 => return Ok(None),
                    None => return Err(Error::DivisionByZero(k)),
                },
                Factor::Inner(_) => {
                    if e < 0 {
                        return Err(Error::InvalidArgument(
                            "inner convolutions cannot be inverted".into(),
                        ));
                    }
                }
            }
        }
        Ok(Some(w))
    }

    fn min_weight(&self) -> Option<i64> {
        self.weights.iter().flatten().copied().min()
    }
}

/// Factorial units modulo the ring: `n! = p^{v(n)} * fu[n]`.
struct FactUnits<E> {
    fu: Vec<E>,
    finv: Vec<E>,
}

fn int_unit<R: ModRing>(r: &R, n: i128, p: u64) -> R::E {
    r.from_i128(vp_i128(n, p).1)
}

fn fact_units<R: ModRing>(r: &R, top: usize, p: u64) -> FactUnits<R::E> {
    let mut fu = Vec::with_capacity(top + 1);
    fu.push(r.one());
    for n in 1..=top {
        let u = r.from_i128(split_valuation_u64(n as u64, p).1 as i128);
        let next = r.mul(&fu[n - 1], &u);
        fu.push(next);
    }
    let mut finv = vec![r.zero(); top + 1];
    finv[top] = r.inv(&fu[top]).expect("factorial unit is invertible");
    for n in (1..=top).rev() {
        let u = r.from_i128(split_valuation_u64(n as u64, p).1 as i128);
        finv[n - 1] = r.mul(&finv[n], &u);
    }
    FactUnits { fu, finv }
}

impl<E: Clone> FactUnits<E> {
    fn binom<R: ModRing<E = E>>(&self, r: &R, t: usize, b: usize, invert: bool) -> E {
        if invert {
            r.mul(&r.mul(&self.finv[t], &self.fu[b]), &self.fu[t - b])
        } else {
            r.mul(&r.mul(&self.fu[t], &self.finv[b]), &self.finv[t - b])
        }
    }
}

/// `binom(num/den, j)` for `j = 0 ..= kmax` as `(v, unit)` pairs.
fn rational_binom_units<R: ModRing>(
    r: &R,
    num: i64,
    den: i64,
    kmax: i64,
    p: u64,
) -> Vec<Option<(i64, R::E)>> {
    let mut out = Vec::with_capacity(kmax.max(0) as usize + 1);
    let mut cur = Some((0i64, r.one()));
    for j in 0..=kmax {
        out.push(cur.clone());
        let (a, b) = rb_step(num, den, j);
        cur = match cur {
            Some((v, u)) if a != 0 => {
                let (va, ua) = vp_i128(a, p);
                let (vb, ub) = vp_i128(b, p);
                let ub = r.inv(&r.from_i128(ub)).expect("unit");
                Some((v + va - vb, r.mul(&r.mul(&u, &r.from_i128(ua)), &ub)))
            }
            _ => None,
        };
    }
    out
}

/// Powers `p^0 .. p^{m-1}` in the ring.
fn p_powers<R: ModRing>(r: &R, p: u64, m: u32) -> Vec<R::E> {
    let pe = r.from_i128(p as i128);
    let mut out = Vec::with_capacity(m as usize);
    let mut cur = r.one();
    for _ in 0..m {
        out.push(cur.clone());
        cur = r.mul(&cur, &pe);
    }
    out
}

/// Values of an inner convolution for `n = lo ..= hi`, as ring elements.
fn inner_values<R: ModRing>(
    r: &R,
    shape: InnerShape,
    lo: i64,
    hi: i64,
    p: u64,
    m: u32,
    fact_v: &[i64],
    fu: Option<&FactUnits<R::E>>,
    pp: &[R::E],
) -> Vec<R::E> {
    let m = m as i64;
    let mut out = Vec::with_capacity((hi - lo + 1).max(0) as usize);
    match shape {
        InnerShape::QuarterBinoms => {
            let a = rational_binom_units(r, -1, 4, hi, p);
            let b = rational_binom_units(r, -3, 4, hi, p);
            for n in lo..=hi {
                let mut acc = r.zero();
                for j in 0..=n {
                    let (Some((va, ua)), Some((vb, ub))) = (&a[j as usize], &b[(n - j) as usize])
                    else {
                        continue;
                    };
                    let v = 2 * (va + vb);
                    if v >= m {
                        continue;
                    }
                    let u = r.mul(ua, ub);
                    acc = r.add(&acc, &r.mul(&pp[v as usize], &r.mul(&u, &u)));
                }
                out.push(acc);
            }
        }
        InnerShape::BinomSquaredCentral | InnerShape::BinomFourthCentral => {
            let fu = fu.expect("factorial units present for inner convolutions");
            let power: i64 = if shape == InnerShape::BinomSquaredCentral {
                2
            } else {
                4
            };
            let cv = |j: usize| fact_v[2 * j] - 2 * fact_v[j];
            for n in lo..=hi {
                let n = n as usize;
                let mut acc = r.zero();
                for j in 0..=n {
                    let vb = fact_v[n] - fact_v[j] - fact_v[n - j];
                    let v = power * vb + cv(j) + cv(n - j);
                    if v >= m {
                        continue;
                    }
                    let b = fu.binom(r, n, j, false);
                    let b = r.pow(&b, power as u64);
                    let c = r.mul(
                        &fu.binom(r, 2 * j, j, false),
                        &fu.binom(r, 2 * (n - j), n - j, false),
                    );
                    acc = r.add(&acc, &r.mul(&pp[v as usize], &r.mul(&b, &c)));
                }
                out.push(acc);
            }
        }
    }
    out
}

fn unit_pass<R: ModRing>(r: &R, plan: &Plan<'_>, vmin: i64, m: u32) -> BigUint {
    let spec = plan.spec;
    let p = plan.p;
    let (lo, hi) = (plan.lo, plan.hi);
    let needs_fact = spec.factors.iter().any(|f| {
        matches!(
            f.factor,
            Factor::Binom { .. }
                | Factor::Inner(InnerShape::BinomSquaredCentral | InnerShape::BinomFourthCentral)
        )
    });
    let fu = needs_fact.then(|| fact_units(r, plan.fact_v.len() - 1, p));
    let pp = p_powers(r, p, m);
    let rb: Vec<Vec<Option<(i64, R::E)>>> = spec
        .factors
        .iter()
        .map(|f| match f.factor {
            Factor::RationalBinom { num, den } => rational_binom_units(r, num, den, hi, p),
            _ => Vec::new(),
        })
        .collect();
    let inner: Vec<Vec<R::E>> = spec
        .factors
        .iter()
        .map(|f| match f.factor {
            Factor::Inner(shape) => {
                inner_values(r, shape, lo, hi, p, m, &plan.fact_v, fu.as_ref(), &pp)
            }
            _ => Vec::new(),
        })
        .collect();

    let (bn, bd) = spec.base;
    let ub = r.mul(
        &int_unit(r, bn as i128, p),
        &r.inv(&int_unit(r, bd as i128, p)).expect("unit"),
    );
    let mut ub_pow = r.pow(&ub, lo as u64);
    let mut acc = r.zero();
    for (idx, k) in (lo..=hi).enumerate() {
        let this_pow = ub_pow.clone();
        ub_pow = r.mul(&ub_pow, &ub);
        let Some(w) = plan.weights[idx] else { continue };
        let d = w - vmin;
        if d >= m as i64 {
            continue;
        }
        let mut u = r.mul(&this_pow, &int_unit(r, spec.coeff_at(k), p));
        if spec.k_power != 0 {
            let uk = int_unit(r, k as i128, p);
            let uk = if spec.k_power < 0 {
                r.inv(&uk).expect("unit")
            } else {
                uk
            };
            u = r.mul(&u, &r.pow(&uk, spec.k_power.unsigned_abs() as u64));
        }
        if spec.character3 && k % 3 == 2 {
            u = r.neg(&u);
        }
        for (i, f) in spec.factors.iter().enumerate() {
            let e = f.exp.unsigned_abs() as u64;
            let fac = match &f.factor {
                Factor::Binom { top, bottom } => {
                    let (t, b) = (top.at(k, p) as usize, bottom.at(k, p) as usize);
                    fu.as_ref()
                        .expect("factorial units")
                        .binom(r, t, b, f.exp < 0)
                }
                Factor::Linear { c1, c0 } => {
                    let x = int_unit(r, *c1 as i128 * k as i128 + *c0 as i128, p);
                    if f.exp < 0 {
                        r.inv(&x).expect("unit")
                    } else {
                        x
                    }
                }
                Factor::RationalBinom { .. } => {
                    let x = rb[i][k as usize].as_ref().expect("nonzero term").1.clone();
                    if f.exp < 0 {
                        r.inv(&x).expect("unit")
                    } else {
                        x
                    }
                }
                Factor::Inner(_) => inner[i][idx].clone(),
            };
            u = r.mul(&u, &r.pow(&fac, e));
        }
        acc = r.add(&acc, &r.mul(&pp[d as usize], &u));
    }
    r.to_biguint(&acc)
}

/// The sum to absolute precision `abs`, i.e. known modulo `p^abs`.
pub fn eval_sum_to(spec: &SumSpec, p: u64, a: u32, abs: i64) -> Result<PadicTracked> {
    let plan = Plan::new(spec, p, a)?;
    let Some(vmin) = plan.min_weight() else {
        return Ok(PadicTracked::exact_zero(p));
    };
    if vmin >= abs {
        return Ok(PadicTracked::zero_to(p, abs));
    }
    let m = u32::try_from(abs - vmin)
        .map_err(|_| Error::InvalidArgument("precision too large".into()))?;
    let q = ppow(p, m);
    let acc = with_ring(
        &q,
        |r| unit_pass(r, &plan, vmin, m),
        |r| unit_pass(r, &plan, vmin, m),
    );
    Ok(PadicTracked::from_parts(p, vmin, acc, m))
}

/// The sum modulo at least `p^{target_exp}`, with [`DEFAULT_GUARD`] extra digits.
pub fn eval_sum(spec: &SumSpec, p: u64, a: u32, target_exp: i64) -> Result<PadicTracked> {
    eval_sum_to(spec, p, a, target_exp + DEFAULT_GUARD as i64)
}

/// `max(0, -min_k v_p(term_k))` bounded from factor valuations.
pub fn max_negative_valuation(spec: &SumSpec, p: u64, a: u32) -> Result<i64> {
    let plan = Plan::new(spec, p, a)?;
    Ok(plan.min_weight().map_or(0, |v| (-v).max(0)))
}

/// `binom(2k,k)` for `k = 0 ..= k_max` with units modulo `p^{e + guard}`.
pub fn central_binom_stream(p: u64, e: u32, k_max: u64) -> CentralBinomStream {
    CentralBinomStream::new(p, e + DEFAULT_GUARD, k_max)
}

/// Iterator over `binom(2k,k)` in valuation/unit form, driven by
/// `binom(2k+2,k+1) = binom(2k,k) * 2(2k+1)/(k+1)`.
pub struct CentralBinomStream {
    p: u64,
    m: u32,
    q: BigUint,
    k: u64,
    k_max: u64,
    v: i64,
    u: BigUint,
}

impl CentralBinomStream {
    fn new(p: u64, m: u32, k_max: u64) -> Self {
        let q = ppow(p, m);
        Self {
            p,
            m,
            q,
            k: 0,
            k_max,
            v: 0,
            u: BigUint::one(),
        }
    }
}

impl Iterator for CentralBinomStream {
    type Item = PadicTracked;

    fn next(&mut self) -> Option<PadicTracked> {
        if self.k > self.k_max {
            return None;
        }
        let out = PadicTracked::from_parts(self.p, self.v, self.u.clone(), self.m);
        let k = self.k;
        let (vn, un) = split_valuation_u64(2 * (2 * k + 1), self.p);
        let (vd, ud) = split_valuation_u64(k + 1, self.p);
        let inv = crate::arith::modular::inv_mod(&BigUint::from(ud), &self.q).expect("unit");
        self.u = &self.u * BigUint::from(un) % &self.q * inv % &self.q;
        self.v += vn - vd;
        self.k += 1;
        Some(out)
    }
}

/// `prod_{j<k} (alpha - j) / k!`.
pub fn rational_binom(alpha: &BigRational, k: u64) -> BigRational {
    let mut acc = BigRational::one();
    for j in 0..k {
        acc = acc * (alpha - BigRational::from_integer(BigInt::from(j)))
            / BigRational::from_integer(BigInt::from(j + 1));
    }
    acc
}

fn binom_exact(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for j in 0..k {
        acc = acc * BigInt::from(n - j) / BigInt::from(j + 1);
    }
    acc
}

/// The inner convolution as an exact rational.
pub fn inner_convolution_exact(shape: InnerShape, n: u64) -> BigRational {
    match shape {
        InnerShape::QuarterBinoms => {
            let a: Vec<BigRational> = rational_binoms(-1, 4, n);
            let b: Vec<BigRational> = rational_binoms(-3, 4, n);
            (0..=n as usize)
                .map(|j| (&a[j] * &a[j]) * (&b[n as usize - j] * &b[n as usize - j]))
                .sum()
        }
        InnerShape::BinomSquaredCentral | InnerShape::BinomFourthCentral => {
            let power = if shape == InnerShape::BinomSquaredCentral {
                2
            } else {
                4
            };
            let mut central = vec![BigInt::one()];
            for j in 1..=n {
                let next =
                    &central[j as usize - 1] * BigInt::from(2 * (2 * j - 1)) / BigInt::from(j);
                central.push(next);
            }
            let (mut row, mut s) = (BigInt::one(), BigInt::zero());
            for j in 0..=n {
                s += row.pow(power) * &central[j as usize] * &central[(n - j) as usize];
                row = row * BigInt::from(n - j) / BigInt::from(j + 1);
            }
            BigRational::from_integer(s)
        }
    }
}

fn rational_binoms(num: i64, den: i64, n: u64) -> Vec<BigRational> {
    let mut out = Vec::with_capacity(n as usize + 1);
    let mut cur = BigRational::one();
    for j in 0..=n as i64 {
        out.push(cur.clone());
        let (a, b) = rb_step(num, den, j);
        cur *= BigRational::new(BigInt::from(a), BigInt::from(b));
    }
    out
}

/// The inner convolution at `p`, known modulo `p^m`.
pub fn inner_convolution(shape: InnerShape, n: u64, p: u64, m: u32) -> Result<PadicTracked> {
    if p < 3 || !is_prime(p) {
        return Err(Error::NotOddPrime(p));
    }
    let m = m.max(1);
    let q = ppow(p, m);
    let fact_v = factorial_valuations(2 * n as usize, p);
    let n = n as i64;
    let value = with_ring(
        &q,
        |r| {
            let fu = fact_units(r, fact_v.len() - 1, p);
            let pp = p_powers(r, p, m);
            r.to_biguint(&inner_values(r, shape, n, n, p, m, &fact_v, Some(&fu), &pp)[0])
        },
        |r| {
            let fu = fact_units(r, fact_v.len() - 1, p);
            let pp = p_powers(r, p, m);
            r.to_biguint(&inner_values(r, shape, n, n, p, m, &fact_v, Some(&fu), &pp)[0])
        },
    );
    Ok(PadicTracked::from_parts(p, 0, value, m))
}

/// Exact term `k` of `spec`, for a prime `p` used only by `binom(p-1,k)`-type
/// factors. `None` when the term is undefined (a zero divisor).
pub fn term_exact(spec: &SumSpec, k: i64, p: u64) -> Option<BigRational> {
    let mut t = BigRational::from_integer(BigInt::from(spec.coeff_at(k)));
    if t.is_zero() {
        return Some(t);
    }
    if spec.k_power != 0 {
        if k == 0 {
            return if spec.k_power > 0 {
                Some(BigRational::zero())
            } else {
                None
            };
        }
        t *= BigRational::from_integer(BigInt::from(k)).pow(spec.k_power);
    }
    t *= spec.base_rational().pow(i32::try_from(k).ok()?);
    if spec.character3 {
        match k.rem_euclid(3) {
            0 => return Some(BigRational::zero()),
            2 => t = -t,
            _ => {}
        }
    }
    for f in &spec.factors {
        let x = match &f.factor {
            Factor::Binom { top, bottom } => {
                let (tp, b) = (top.at(k, p), bottom.at(k, p));
                if tp < 0 {
                    return None;
                }
                if b < 0 || b > tp {
                    BigRational::zero()
                } else {
                    BigRational::from_integer(binom_exact(tp as u64, b as u64))
                }
            }
            Factor::Linear { c1, c0 } => {
                BigRational::from_integer(BigInt::from(*c1 as i128 * k as i128 + *c0 as i128))
            }
            Factor::RationalBinom { num, den } => rational_binom(
                &BigRational::new(BigInt::from(*num), BigInt::from(*den)),
                k as u64,
            ),
            Factor::Inner(shape) => inner_convolution_exact(*shape, k as u64),
        };
        if x.is_zero() {
            if f.exp < 0 {
                return None;
            }
            return Some(BigRational::zero());
        }
        t *= if f.exp > 0 {
            x.pow(f.exp)
        } else {
            x.recip().pow(-f.exp)
        };
    }
    Some(t)
}

/// The exact sum at `(p, a)`.
pub fn sum_exact(spec: &SumSpec, p: u64, a: u32) -> Result<BigRational> {
    let q = validate(spec, p, a)?;
    let (lo, hi) = spec.range.bounds(q);
    let mut acc = BigRational::zero();
    for k in lo.max(0)..=hi {
        acc += term_exact(spec, k, p).ok_or(Error::DivisionByZero(k))?;
    }
    Ok(acc)
}
