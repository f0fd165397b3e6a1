//! Bernoulli and Euler polynomials, exactly and modulo prime powers.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::tables::{with_bernoulli, with_euler};
use crate::arith::modular::{inv_mod, reduce_signed};
use crate::arith::{PrimePower, Residue};
use crate::error::{Error, Result};

fn binom_row(n: usize) -> Vec<BigInt> {
    let mut row = Vec::with_capacity(n + 1);
    row.push(BigInt::one());
    for k in 0..n {
        let next = &row[k] * BigInt::from(n - k) / BigInt::from(k + 1);
        row.push(next);
    }
    row
}

/// `B_n(x) = sum_k binom(n,k) B_k x^{n-k}` as an exact rational.
pub fn bernoulli_poly_exact(n: usize, x: &BigRational) -> BigRational {
    let row = binom_row(n);
    with_bernoulli(n, |b| {
        // Horner in x over descending k.
        let mut acc = BigRational::zero();
        for k in 0..=n {
            acc = acc * x + BigRational::from_integer(row[k].clone()) * &b[k];
        }
        acc
    })
}

/// `E_n(x) = sum_k binom(n,k) (E_k / 2^k) (x - 1/2)^{n-k}` as an exact rational.
pub fn euler_poly_exact(n: usize, x: &BigRational) -> BigRational {
    let row = binom_row(n);
    let y = x - BigRational::new(1.into(), 2.into());
    with_euler(n, |e| {
        let mut acc = BigRational::zero();
        for k in 0..=n {
            let c = BigRational::new(&row[k] * &e[k], BigInt::one() << k);
            acc = acc * &y + c;
        }
        acc
    })
}

struct Reducer<'a> {
    ctx: &'a PrimePower,
}

impl Reducer<'_> {
    fn rational(&self, q: &BigRational) -> Result<BigUint> {
        let m = self.ctx.modulus();
        let d = reduce_signed(q.denom(), m);
        let inv = inv_mod(&d, m).ok_or(Error::DenominatorDivisible(self.ctx.p()))?;
        Ok(reduce_signed(q.numer(), m) * inv % m)
    }
}

/// `B_n(x) mod p^e`, rejecting any denominator divisible by `p`.
pub fn bernoulli_poly_at(n: usize, x: &BigRational, ctx: &PrimePower) -> Result<Residue> {
    let r = Reducer { ctx };
    let m = ctx.modulus();
    let xr = r.rational(x)?;
    let row = binom_row(n);
    let value = with_bernoulli(n, |b| -> Result<BigUint> {
        let mut acc = BigUint::zero();
        for k in 0..=n {
            let term = reduce_signed(&row[k], m) * r.rational(&b[k])? % m;
            acc = (acc * &xr + term) % m;
        }
        Ok(acc)
    })?;
    Ok(Residue::new(&BigInt::from(value), ctx))
}

/// `E_n(x) mod p^e`.
pub fn euler_poly_at(n: usize, x: &BigRational, ctx: &PrimePower) -> Result<Residue> {
    let r = Reducer { ctx };
    let m = ctx.modulus();
    let y = r.rational(&(x - BigRational::new(1.into(), 2.into())))?;
    let inv2 = inv_mod(&BigUint::from(2u32), m).expect("p is odd");
    let row = binom_row(n);
    let value = with_euler(n, |e| {
        let mut acc = BigUint::zero();
        let mut inv2k = BigUint::one();
        for k in 0..=n {
            let term = reduce_signed(&(&row[k] * &e[k]), m) * &inv2k % m;
            acc = (acc * &y + term) % m;
            inv2k = inv2k * &inv2 % m;
        }
        acc
    });
    Ok(Residue::new(&BigInt::from(value), ctx))
}
