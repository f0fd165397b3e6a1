//! The sequences `s_n`, `t_n`, `r_n` and their recursions.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde::Serialize;

use super::identities::as_text;
use super::tables::{binom, q, qi};
use crate::arith::is_prime;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SequenceTriple {
    pub n: u64,
    /// `(1/n) sum_{k<n} (21k+8) binom(2k,k)^3`.
    #[serde(serialize_with = "as_text")]
    pub s: BigRational,
    /// `s_n / (4 binom(2n,n))`.
    #[serde(serialize_with = "as_text")]
    pub t: BigRational,
    /// `sum_{k<n} binom(n+k-1,k)^2`.
    #[serde(serialize_with = "as_text")]
    pub r: BigRational,
}

impl SequenceTriple {
    pub fn t_equals_r(&self) -> bool {
        self.t == self.r
    }

    /// `s_n` is an integer divisible by `4 binom(2n,n)`.
    pub fn s_divisible(&self) -> bool {
        self.s.is_integer() && self.t.is_integer()
    }
}

/// `sum_{k<n} (21k+8) binom(2k,k)^3` for `n = 0..=n_max`.
fn raw_sums(n_max: u64) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero()];
    let mut c = BigInt::one();
    for k in 0..n_max {
        let next = &out[k as usize] + BigInt::from(21 * k + 8) * c.pow(3);
        out.push(next);
        c = c * BigInt::from(2 * (2 * k + 1)) / BigInt::from(k + 1);
    }
    out
}

fn r_value(n: u64) -> BigInt {
    (0..n).map(|k| binom(n + k - 1, k).pow(2)).sum()
}

fn triple_from(n: u64, raw: &BigInt) -> SequenceTriple {
    let s = BigRational::new(raw.clone(), BigInt::from(n));
    let t = &s / (q(4) * qi(&binom(2 * n, n)));
    SequenceTriple {
        n,
        s,
        t,
        r: qi(&r_value(n)),
    }
}

/// `(s_n, t_n, r_n)` for `n >= 1`.
pub fn sequence_triple(n: u64) -> SequenceTriple {
    assert!(n >= 1, "sequence_triple needs n >= 1");
    triple_from(n, &raw_sums(n)[n as usize])
}

/// All triples for `1 <= n <= n_max`.
pub fn sequence_triples(n_max: u64) -> Vec<SequenceTriple> {
    let raw = raw_sums(n_max);
    (1..=n_max)
        .into_par_iter()
        .map(|n| triple_from(n, &raw[n as usize]))
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct RecursionReport {
    pub n_max: u64,
    /// `n^3 (n+1) s_{n+1} = n^4 s_n + 8 (2n-1)^3 (21n+8) binom(2n-2,n-1)^3`.
    pub s_recursion: bool,
    /// `(4n+2) t_{n+1} - n t_n = (21n+8) binom(2n-1,n)^2`, checked with `t = r`.
    pub t_recursion: bool,
    /// The same recursion for `t_n = s_n / (4 binom(2n,n))`.
    pub t_recursion_from_s: bool,
    pub first_failure: Option<String>,
}

impl RecursionReport {
    pub fn holds(&self) -> bool {
        self.s_recursion && self.t_recursion && self.t_recursion_from_s
    }
}

/// Both recursions for `1 <= n < n_max`.
pub fn verify_recursions(n_max: u64) -> RecursionReport {
    let triples = sequence_triples(n_max.max(2));
    let mut report = RecursionReport {
        n_max,
        s_recursion: true,
        t_recursion: true,
        t_recursion_from_s: true,
        first_failure: None,
    };
    for n in 1..n_max {
        let (cur, next) = (&triples[n as usize - 1], &triples[n as usize]);
        let nq = q(n as i64);
        let c = qi(&binom(2 * n - 2, n - 1));
        let s_ok = nq.pow(3) * q(n as i64 + 1) * &next.s
            == nq.pow(4) * &cur.s
                + q(8) * q(2 * n as i64 - 1).pow(3) * q(21 * n as i64 + 8) * c.pow(3);
        let rhs = q(21 * n as i64 + 8) * qi(&binom(2 * n - 1, n)).pow(2);
        let t_ok = q(4 * n as i64 + 2) * &next.r - &nq * &cur.r == rhs;
        let ts_ok = q(4 * n as i64 + 2) * &next.t - &nq * &cur.t == rhs;
        for (flag, ok, name) in [
            (&mut report.s_recursion, s_ok, "s"),
            (&mut report.t_recursion, t_ok, "t=r"),
            (&mut report.t_recursion_from_s, ts_ok, "t"),
        ] {
            if !ok && *flag {
                *flag = false;
                report
                    .first_failure
                    .get_or_insert_with(|| format!("{name} recursion at n = {n}"));
            }
        }
    }
    report
}

/// Composite `n` in `2..=bound` with `s_n == 8 (mod n^3)`.
pub fn scan_s_primality(bound: u64) -> Vec<u64> {
    let raw = raw_sums(bound);
    (2..=bound)
        .into_par_iter()
        .filter(|&n| !is_prime(n))
        .filter(|&n| {
            // s_n = raw / n is an integer, so s_n == 8 (mod n^3) iff raw == 8n (mod n^4).
            let n4 = BigInt::from(n).pow(4);
            (&raw[n as usize] - BigInt::from(8 * n))
                .mod_floor(&n4)
                .is_zero()
        })
        .collect()
}

/// The hedged observations about `t_n`, scanned but never asserted.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct TGuessScan {
    pub n_max: u64,
    /// `n` with `t_n == 3 (mod 4)`.
    pub three_mod_four: Vec<u64>,
    /// `n >= 3` with `t_n` a probable prime.
    pub probable_primes: Vec<u64>,
}

pub fn scan_t_guesses(n_max: u64) -> TGuessScan {
    let ts: Vec<(u64, BigInt)> = (1..=n_max)
        .into_par_iter()
        .map(|n| (n, r_value(n)))
        .collect();
    let four = BigInt::from(4);
    let three_mod_four = ts
        .iter()
        .filter(|(_, t)| t.mod_floor(&four) == BigInt::from(3))
        .map(|(n, _)| *n)
        .collect();
    let probable_primes = ts
        .par_iter()
        .filter(|(n, t)| *n >= 3 && is_probable_prime(t))
        .map(|(n, _)| *n)
        .collect();
    TGuessScan {
        n_max,
        three_mod_four,
        probable_primes,
    }
}

/// Miller-Rabin with the first twelve prime bases; deterministic below 3.3e24.
pub fn is_probable_prime(n: &BigInt) -> bool {
    let two = BigInt::from(2);
    if n < &two {
        return false;
    }
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for b in BASES {
        let b = BigInt::from(b);
        if n == &b {
            return true;
        }
        if (n % &b).is_zero() {
            return false;
        }
    }
    let one = BigInt::one();
    let nm1 = n - &one;
    let s = nm1.trailing_zeros().unwrap_or(0);
    let d = &nm1 >> s;
    'bases: for b in BASES {
        let mut x = BigInt::from(b).modpow(&d, n);
        if x == one || x == nm1 {
            continue;
        }
        for _ in 1..s {
            x = x.modpow(&two, n);
            if x == nm1 {
                continue 'bases;
            }
        }
        return false;
    }
    debug_assert!(n.is_positive());
    true
}
