//! Classical congruences used as lemmas, checked with exact integers.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::tables::{binom, q, qi};
use crate::arith::{is_prime, rational_valuation};
use crate::error::{Error, Result};
use crate::special::bernoulli_number;

/// Largest `p^i` for which the lifting congruence is also checked at `i = 2`.
const LIFT_SECOND_STEP_MAX: u64 = 2_000;

pub const NUMERIC_IDS: &[(&str, &str)] = &[
    (
        "morley",
        "binom(p-1,(p-1)/2) == (-1)^((p-1)/2) 4^(p-1) (mod p^3), p > 3",
    ),
    (
        "glaisher",
        "binom(2p-1,p-1) == 1 - 2/3 p^3 B_{p-3} (mod p^4), p > 3",
    ),
    (
        "sd-lifting",
        "binom(2p^(i+1),p^(i+1))/2 == binom(2p^i,p^i)/2 (mod p^(2i+2))",
    ),
    (
        "lemma4.2",
        "sum_{k=1}^{p-1} (1 + 2p H_{k-1})/k^2 == 8/3 p B_{p-3} (mod p^2), p > 3",
    ),
    (
        "lemma2.1",
        "k binom(2k,k) binom(2(p-k),p-k) == (-1)^(floor(2k/p)-1) 2p (mod p^2) for 0 < k < p",
    ),
];

/// `x == y (mod p^e)` for rationals with `p`-integral difference.
fn congruent(x: &BigRational, y: &BigRational, p: u64, e: i64) -> bool {
    let d = x - y;
    match rational_valuation(&d, p) {
        None => true,
        Some(v) => v >= e,
    }
}

fn min_prime(id: &str) -> u64 {
    match id {
        "morley" | "glaisher" | "lemma4.2" => 5,
        _ => 3,
    }
}

/// Decide the numeric congruence `id` at the odd prime `p`.
pub fn verify_numeric_congruence(id: &str, p: u64) -> Result<bool> {
    if !NUMERIC_IDS.iter().any(|(i, _)| *i == id) {
        return Err(Error::UnknownId(id.to_string()));
    }
    if p < 3 || !is_prime(p) {
        return Err(Error::NotOddPrime(p));
    }
    if p < min_prime(id) {
        return Err(Error::InvalidArgument(format!(
            "`{id}` is stated for p > 3"
        )));
    }
    let half = (p - 1) / 2;
    Ok(match id {
        "morley" => {
            let s = if half.is_multiple_of(2) {
                BigInt::one()
            } else {
                -BigInt::one()
            };
            congruent(
                &qi(&binom(p - 1, half)),
                &qi(&(s * BigInt::from(4).pow(p as u32 - 1))),
                p,
                3,
            )
        }
        "glaisher" => {
            let rhs = BigRational::one()
                - BigRational::new(BigInt::from(2), BigInt::from(3))
                    * q(p as i64).pow(3)
                    * bernoulli_number(p as i64 - 3);
            congruent(&qi(&binom(2 * p - 1, p - 1)), &rhs, p, 4)
        }
        "sd-lifting" => {
            let mut ok = true;
            let mut pi = p;
            for i in 1..=2u32 {
                if i == 2 && pi > LIFT_SECOND_STEP_MAX {
                    break;
                }
                let next = pi * p;
                let (lo, hi) = (binom(2 * pi, pi) / 2, binom(2 * next, next) / 2);
                ok &= congruent(&qi(&hi), &qi(&lo), p, 2 * i as i64 + 2);
                pi = next;
            }
            ok
        }
        "lemma4.2" => {
            let pq = q(p as i64);
            let mut h = BigRational::zero();
            let mut lhs = BigRational::zero();
            for k in 1..p {
                let kq = q(k as i64);
                lhs += (BigRational::one() + q(2) * &pq * &h) / (&kq * &kq);
                h += kq.recip();
            }
            let rhs = BigRational::new(BigInt::from(8), BigInt::from(3))
                * pq
                * bernoulli_number(p as i64 - 3);
            congruent(&lhs, &rhs, p, 2)
        }
        "lemma2.1" => (1..p).all(|k| {
            let lhs = BigInt::from(k) * binom(2 * k, k) * binom(2 * (p - k), p - k);
            let s = if 2 * k / p == 0 { -1 } else { 1 };
            congruent(&qi(&lhs), &q(s * 2 * p as i64), p, 2)
        }),
        _ => unreachable!("checked against NUMERIC_IDS"),
    })
}
