//! Per-prime special values: Euler and Bernoulli residues, Fermat quotients,
//! harmonic numbers, and two polynomial values.
//!
//! When the needed index lies within the exact-table ceiling the values come
//! from exact tables at the requested precision. Otherwise `E_{p-3}`,
//! `B_{p-3}` and `B_{p-5}` fall back to O(p) congruences that only determine
//! them modulo `p`, and the polynomial values are unavailable.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
#[cfg(test)]
use num_traits::One;
use num_traits::Zero;

use super::harmonic::{harmonic_padic, reciprocal_power_sum};
use super::poly::{bernoulli_poly_at, euler_poly_at};
use super::tables::{bernoulli_number, euler_number, exact_ceiling};
use crate::arith::padic::ppow;
use crate::arith::primes::{inv_mod_u64, mul_mod};
use crate::arith::{PadicTracked, PrimePower};

/// Where a cached value came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Source {
    ExactTable,
    FastPath,
    Direct,
}

#[derive(Clone, Debug)]
pub struct Cached {
    pub value: PadicTracked,
    pub source: Source,
}

#[derive(Clone, Debug)]
pub struct SpecialValueCache {
    pub p: u64,
    pub g: u32,
    pub euler_p3: Option<Cached>,
    pub bernoulli_p3: Option<Cached>,
    pub bernoulli_p5: Option<Cached>,
    pub fermat_q2: Cached,
    pub harmonic_p1: Cached,
    pub harmonic_half: Cached,
    pub harmonic_quarter: Cached,
    /// `B_{p-2}(1/3) mod p^g`, present for `p > 3` within the exact ceiling.
    pub bpoly_third: Option<Cached>,
    /// `E_{p-3}(1/4) mod p^g`, present for `p > 3` within the exact ceiling.
    pub epoly_quarter: Option<Cached>,
}

fn exact(value: PadicTracked) -> Cached {
    Cached {
        value,
        source: Source::ExactTable,
    }
}

fn direct(value: PadicTracked) -> Cached {
    Cached {
        value,
        source: Source::Direct,
    }
}

fn fast(p: u64, r: u64) -> Cached {
    Cached {
        value: PadicTracked::from_parts(p, 0, BigUint::from(r), 1),
        source: Source::FastPath,
    }
}

/// `q_p(2) = (2^{p-1} - 1) / p` with absolute precision `g`.
pub fn fermat_quotient_two(p: u64, g: u32) -> PadicTracked {
    let m = ppow(p, g + 1);
    let t = BigUint::from(2u32).modpow(&BigUint::from(p - 1), &m);
    let num = (t + &m - 1u32) % &m;
    PadicTracked::from_rational_abs(
        &BigRational::from_integer(BigInt::from(num / p)),
        p,
        g as i64,
    )
}

fn sign_half(p: u64) -> bool {
    (p - 1) / 2 % 2 == 1
}

/// `E_{p-3} mod p` from `sum_{k=1}^{floor(p/4)} 1/k^2 == (-1)^{(p-1)/2} 4 E_{p-3}`.
pub fn euler_p3_fast(p: u64) -> u64 {
    let mut s = 0u64;
    for k in 1..=p / 4 {
        let inv = inv_mod_u64(k % p, p).expect("k < p");
        s = (s + mul_mod(inv, inv, p)) % p;
    }
    let mut e = mul_mod(s, inv_mod_u64(4, p).expect("odd p"), p);
    if sign_half(p) {
        e = (p - e) % p;
    }
    e
}

/// `B_{p-3} mod p` from `H_{p-1} / p^2 == -B_{p-3} / 3`, for `p > 3`.
pub fn bernoulli_p3_fast(p: u64) -> u64 {
    let h = reciprocal_power_sum(p, 1, p - 1, 1, false, 3);
    let r = scaled_mod_p(&h, 2);
    (p - mul_mod(3, r, p)) % p
}

/// `B_{p-5} mod p` from `(5/p^2) sum 1/k^3 == -6 B_{p-5}`, for `p > 5`.
pub fn bernoulli_p5_fast(p: u64) -> u64 {
    let s = reciprocal_power_sum(p, 1, p - 1, 3, false, 3);
    let r = scaled_mod_p(&s, 2);
    let c = mul_mod(5, inv_mod_u64(6, p).expect("p > 3"), p);
    (p - mul_mod(c, r, p)) % p
}

fn scaled_mod_p(x: &PadicTracked, k: i64) -> u64 {
    let r = x.shift(-k).residue(1).expect("divisible by p^k");
    u64::try_from(&r).expect("below p")
}

/// Reduces an exact `E_n` to absolute precision `g`.
fn euler_tracked(n: usize, p: u64, g: u32) -> PadicTracked {
    PadicTracked::from_rational_abs(&BigRational::from_integer(euler_number(n)), p, g as i64)
}

fn bernoulli_tracked(n: i64, p: u64, g: u32) -> PadicTracked {
    PadicTracked::from_rational_abs(&bernoulli_number(n), p, g as i64)
}

/// Builds the cache for prime `p` at guard precision `g`.
pub fn special_values(p: u64, g: u32) -> SpecialValueCache {
    let g = g.max(1);
    let ceiling = exact_ceiling();
    let in_exact = |n: u64| n <= ceiling;

    let euler_p3 = if p < 3 {
        None
    } else if in_exact(p - 3) {
        Some(exact(euler_tracked((p - 3) as usize, p, g)))
    } else {
        Some(fast(p, euler_p3_fast(p)))
    };
    let bernoulli_p3 = if p < 3 {
        None
    } else if in_exact(p - 3) {
        Some(exact(bernoulli_tracked(p as i64 - 3, p, g)))
    } else {
        Some(fast(p, bernoulli_p3_fast(p)))
    };
    let bernoulli_p5 = if p < 5 {
        None
    } else if in_exact(p - 5) {
        Some(exact(bernoulli_tracked(p as i64 - 5, p, g)))
    } else {
        Some(fast(p, bernoulli_p5_fast(p)))
    };

    let poly_ok = p > 3 && in_exact(p - 2);
    let (bpoly_third, epoly_quarter) = if poly_ok {
        let ctx = PrimePower::new(p, g).expect("odd prime");
        let b = bernoulli_poly_at(
            (p - 2) as usize,
            &BigRational::new(1.into(), 3.into()),
            &ctx,
        )
        .expect("denominators coprime to p");
        let e = euler_poly_at(
            (p - 3) as usize,
            &BigRational::new(1.into(), 4.into()),
            &ctx,
        )
        .expect("denominators coprime to p");
        (
            Some(exact(from_residue(p, b.value(), g))),
            Some(exact(from_residue(p, e.value(), g))),
        )
    } else {
        (None, None)
    };

    SpecialValueCache {
        p,
        g,
        euler_p3,
        bernoulli_p3,
        bernoulli_p5,
        fermat_q2: direct(fermat_quotient_two(p, g)),
        harmonic_p1: direct(harmonic_padic(p - 1, p, g as i64 + 3)),
        harmonic_half: direct(harmonic_padic((p - 1) / 2, p, 2)),
        harmonic_quarter: direct(harmonic_padic(p / 4, p, 2)),
        bpoly_third,
        epoly_quarter,
    }
}

fn from_residue(p: u64, r: &BigUint, g: u32) -> PadicTracked {
    if r.is_zero() {
        return PadicTracked::zero_to(p, g as i64);
    }
    PadicTracked::from_parts(p, 0, r.clone(), g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::sieve_primes;

    fn res(x: &PadicTracked, e: u32) -> u64 {
        u64::try_from(&x.residue(e).unwrap()).unwrap()
    }

    #[test]
    fn examples() {
        let c = special_values(5, 3);
        assert_eq!(res(&c.fermat_q2.value, 1), 3);
        assert_eq!(res(&c.euler_p3.as_ref().unwrap().value, 1), 4);
        assert_eq!(euler_p3_fast(13), 10);
        assert_eq!(res(&special_values(13, 2).euler_p3.unwrap().value, 1), 10);
    }

    #[test]
    fn fermat_quotient_identity() {
        for p in sieve_primes(3, 400) {
            let q = fermat_quotient_two(p, 4);
            let exact = (BigInt::one() << (p - 1)) - 1;
            let direct = PadicTracked::from_int(&(exact / p), p, 4).truncate(4);
            assert_eq!(q, direct, "p = {p}");
        }
    }

    #[test]
    fn fast_paths_agree_with_tables() {
        for p in sieve_primes(7, 300) {
            let e = euler_tracked((p - 3) as usize, p, 1);
            assert_eq!(euler_p3_fast(p), res(&e, 1), "E, p = {p}");
            let b3 = bernoulli_tracked(p as i64 - 3, p, 1);
            assert_eq!(bernoulli_p3_fast(p), res(&b3, 1), "B3, p = {p}");
            let b5 = bernoulli_tracked(p as i64 - 5, p, 1);
            assert_eq!(bernoulli_p5_fast(p), res(&b5, 1), "B5, p = {p}");
        }
    }

    #[test]
    fn small_prime_caches() {
        let c = special_values(3, 2);
        assert!(c.bernoulli_p5.is_none());
        assert!(c.bpoly_third.is_none());
        assert_eq!(res(&c.euler_p3.unwrap().value, 2), 1);
        assert_eq!(res(&c.bernoulli_p3.unwrap().value, 2), 1);
    }

    #[test]
    fn lehmer_congruences() {
        for p in sieve_primes(5, 400) {
            let c = special_values(p, 2);
            let ctx = PrimePower::new(p, 2).unwrap();
            let m = ctx.modulus();
            let q = c.fermat_q2.value.residue(2).unwrap();
            let pb = BigUint::from(p);
            let half = c.harmonic_half.value.residue(2).unwrap();
            // -2q + p q^2
            let rhs = (m * 2u32 - (&q * 2u32) % m + &pb * &q * &q) % m;
            assert_eq!(half, rhs, "H_(p-1)/2, p = {p}");

            let quarter = c.harmonic_quarter.value.residue(2).unwrap();
            let e = c.euler_p3.unwrap().value.residue(1).unwrap();
            let inv2 = crate::arith::modular::inv_mod(&BigUint::from(2u32), m).unwrap();
            // -3q + (3/2) p q^2 - (-1)^{(p-1)/2} p E
            let mut rhs = (m * 3u32 - (&q * 3u32) % m + &pb * &q * &q * 3u32 * &inv2) % m;
            let pe = &pb * &e % m;
            rhs = if sign_half(p) {
                (rhs + pe) % m
            } else {
                (rhs + m - pe) % m
            };
            assert_eq!(quarter, rhs, "H_floor(p/4), p = {p}");
        }
    }

    #[test]
    fn lemma_two_four() {
        for p in sieve_primes(5, 400) {
            let s = reciprocal_power_sum(p, 1, (p - 1) / 2, 2, false, 1);
            assert!(s.is_zero_mod(1), "p = {p}");
            let t = reciprocal_power_sum(p, 1, (p - 1) / 2, 2, true, 1);
            let e = res(&euler_tracked((p - 3) as usize, p, 1), 1);
            let mut rhs = 2 * e % p;
            if sign_half(p) {
                rhs = (p - rhs) % p;
            }
            assert_eq!(res(&t, 1), rhs, "p = {p}");
        }
    }
}
