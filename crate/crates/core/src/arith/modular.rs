//! Residues modulo odd prime powers and the Jacobi symbol.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::primes::is_prime;
use crate::error::{Error, Result};

/// An odd prime power `p^e` with `e >= 1`.
#[derive(Clone, PartialEq, Eq)]
pub struct PrimePower {
    p: u64,
    e: u32,
    modulus: BigUint,
}

impl PrimePower {
    pub fn new(p: u64, e: u32) -> Result<Self> {
        if p < 3 || !is_prime(p) {
            return Err(Error::NotOddPrime(p));
        }
        if e == 0 {
            return Err(Error::InvalidArgument(
                "prime power exponent must be >= 1".into(),
            ));
        }
        Ok(Self {
            p,
            e,
            modulus: BigUint::from(p).pow(e),
        })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn e(&self) -> u32 {
        self.e
    }

    pub fn modulus(&self) -> &BigUint {
        &self.modulus
    }
}

impl fmt::Debug for PrimePower {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}^{}", self.p, self.e)
    }
}

/// A value in `[0, p^e)`.
#[derive(Clone, PartialEq, Eq)]
pub struct Residue {
    value: BigUint,
    ctx: PrimePower,
}

impl Residue {
    pub fn new(value: &BigInt, ctx: &PrimePower) -> Self {
        Self {
            value: reduce_signed(value, ctx.modulus()),
            ctx: ctx.clone(),
        }
    }

    pub fn value(&self) -> &BigUint {
        &self.value
    }

    pub fn context(&self) -> &PrimePower {
        &self.ctx
    }

    /// The residue as a `u64`, if it fits.
    pub fn to_u64(&self) -> Option<u64> {
        u64::try_from(&self.value).ok()
    }
}

impl fmt::Debug for Residue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod {:?})", self.value, self.ctx)
    }
}

/// Least nonnegative representative of `a` modulo `m`.
pub(crate) fn reduce_signed(a: &BigInt, m: &BigUint) -> BigUint {
    let m = BigInt::from(m.clone());
    a.mod_floor(&m)
        .to_biguint()
        .expect("mod_floor is nonnegative")
}

/// Inverse of `a` modulo `m`, if `gcd(a, m) = 1`.
pub(crate) fn inv_mod(a: &BigUint, m: &BigUint) -> Option<BigUint> {
    if m.is_one() {
        return Some(BigUint::zero());
    }
    let a = BigInt::from(a % m);
    let m_signed = BigInt::from(m.clone());
    let ext = a.extended_gcd(&m_signed);
    if !ext.gcd.is_one() {
        return None;
    }
    Some(reduce_signed(&ext.x, m))
}

/// `a^{-1} mod p^e`, rejecting multiples of `p`.
pub fn mod_inverse(a: &BigInt, ctx: &PrimePower) -> Result<Residue> {
    let r = reduce_signed(a, ctx.modulus());
    match inv_mod(&r, ctx.modulus()) {
        Some(value) => Ok(Residue {
            value,
            ctx: ctx.clone(),
        }),
        None => Err(Error::NotInvertible {
            value: a.to_string(),
            modulus: format!("{ctx:?}"),
        }),
    }
}

/// Splits `n != 0` as `p^v * rest` with `p` not dividing `rest`.
pub(crate) fn split_valuation(n: &BigInt, p: u64) -> (i64, BigInt) {
    debug_assert!(!n.is_zero());
    let p_big = BigInt::from(p);
    let mut v = 0;
    let mut rest = n.clone();
    loop {
        let (q, r) = rest.div_rem(&p_big);
        if !r.is_zero() {
            break;
        }
        rest = q;
        v += 1;
    }
    (v, rest)
}

pub(crate) fn split_valuation_u64(mut n: u64, p: u64) -> (i64, u64) {
    debug_assert!(n != 0);
    let mut v = 0;
    while n.is_multiple_of(p) {
        n /= p;
        v += 1;
    }
    (v, n)
}

/// `v_p(q)` for a nonzero rational.
pub fn rational_valuation(q: &BigRational, p: u64) -> Option<i64> {
    if q.is_zero() {
        return None;
    }
    Some(split_valuation(q.numer(), p).0 - split_valuation(q.denom(), p).0)
}

/// Reduces a rational with denominator coprime to `p` modulo `p^e`.
pub fn reduce_rational(q: &BigRational, ctx: &PrimePower) -> Result<Residue> {
    let den = reduce_signed(q.denom(), ctx.modulus());
    let inv = inv_mod(&den, ctx.modulus()).ok_or(Error::DenominatorDivisible(ctx.p()))?;
    let num = reduce_signed(q.numer(), ctx.modulus());
    Ok(Residue {
        value: num * inv % ctx.modulus(),
        ctx: ctx.clone(),
    })
}

/// The Jacobi symbol `(a/n)` for odd `n >= 1`.
///
/// # Panics
/// Panics when `n` is even.
pub fn jacobi(a: i64, n: u64) -> i8 {
    assert!(n % 2 == 1, "Jacobi symbol needs an odd modulus, got {n}");
    let a = a.rem_euclid(n as i64) as u64;
    jacobi_reduced(a, n)
}

/// `(a/n)` for an arbitrary-size `a`.
pub fn jacobi_big(a: &BigInt, n: u64) -> i8 {
    assert!(n % 2 == 1, "Jacobi symbol needs an odd modulus, got {n}");
    let r = reduce_signed(a, &BigUint::from(n));
    jacobi_reduced(u64::try_from(&r).expect("reduced below n"), n)
}

fn jacobi_reduced(mut a: u64, mut n: u64) -> i8 {
    let mut t = 1i8;
    while a != 0 {
        while a.is_multiple_of(2) {
            a /= 2;
            if matches!(n % 8, 3 | 5) {
                t = -t;
            }
        }
        std::mem::swap(&mut a, &mut n);
        if a % 4 == 3 && n % 4 == 3 {
            t = -t;
        }
        a %= n;
    }
    if n == 1 {
        t
    } else {
        0
    }
}
