//! Integrality and divisibility claims, decided exactly.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::Zero;
use serde::Serialize;

use super::identities::as_text;
use super::tables::binom;
use crate::error::{Error, Result};
use crate::sums::{inner_convolution_exact, InnerShape};

/// The weight `w_k` of a divisibility sum.
#[derive(Clone, Copy, Debug)]
enum Weight {
    /// `binom(2k,k)^3`.
    CentralCubed,
    /// `binom(2k,k)^2 binom(4k,2k)`.
    CentralSqQuartic,
    /// `binom(2k,k)^2 binom(3k,k)`.
    CentralSqCubic,
    /// `binom(6k,3k) binom(3k,k) binom(2k,k)`.
    Sextic,
}

impl Weight {
    fn at(self, k: u64) -> BigInt {
        let c = binom(2 * k, k);
        match self {
            Weight::CentralCubed => c.pow(3),
            Weight::CentralSqQuartic => c.pow(2) * binom(4 * k, 2 * k),
            Weight::CentralSqCubic => c.pow(2) * binom(3 * k, k),
            Weight::Sextic => binom(6 * k, 3 * k) * binom(3 * k, k) * c,
        }
    }
}

/// Divisor shape `c n (2n+1)^e binom(2n,n)`.
#[derive(Clone, Copy, Debug)]
struct Divisor {
    c: u64,
    with_odd: bool,
}

impl Divisor {
    fn at(self, n: u64) -> BigInt {
        let odd = if self.with_odd { 2 * n + 1 } else { 1 };
        BigInt::from(self.c * n * odd) * binom(2 * n, n)
    }
}

struct Claim {
    id: &'static str,
    lin: (u64, u64),
    weight: Weight,
    base: i64,
    divisor: Divisor,
    /// Allows a factor `1/3` when `2n+1` is a power of 3.
    three_allowance: bool,
    statement: &'static str,
}

const fn claim(
    id: &'static str,
    lin: (u64, u64),
    weight: Weight,
    base: i64,
    divisor: (u64, bool),
    three_allowance: bool,
    statement: &'static str,
) -> Claim {
    Claim {
        id,
        lin,
        weight,
        base,
        divisor: Divisor {
            c: divisor.0,
            with_odd: divisor.1,
        },
        three_allowance,
        statement,
    }
}

const CLAIMS: &[Claim] = &[
    claim("conj5.1/first", (3, 1), Weight::CentralCubed, -8, (2, false), false,
        "2n binom(2n,n) | sum_{k<n} (3k+1) binom(2k,k)^3 (-8)^(n-1-k)"),
    claim("conj5.1/second", (3, 1), Weight::CentralCubed, 16, (2, false), false,
        "2n binom(2n,n) | sum_{k<n} (3k+1) binom(2k,k)^3 16^(n-1-k)"),
    claim("conj5.1/third", (6, 1), Weight::CentralCubed, 256, (2, false), false,
        "2n binom(2n,n) | sum_{k<n} (6k+1) binom(2k,k)^3 256^(n-1-k)"),
    claim("conj5.1/fourth", (6, 1), Weight::CentralCubed, -512, (2, false), false,
        "2n binom(2n,n) | sum_{k<n} (6k+1) binom(2k,k)^3 (-512)^(n-1-k)"),
    claim("conj5.1/fifth", (42, 5), Weight::CentralCubed, 4096, (2, false), false,
        "2n binom(2n,n) | sum_{k<n} (42k+5) binom(2k,k)^3 4096^(n-1-k)"),
    claim("conj5.3/last", (35, 8), Weight::CentralSqQuartic, 81, (4, true), true,
        "sum_{k<n} (35k+8) binom(2k,k)^2 binom(4k,2k) 81^(n-1-k) / (4n(2n+1) binom(2n,n)) in 3^(-delta(2n+1)) Z"),
    claim("conj5.4/i", (11, 3), Weight::CentralSqCubic, 64, (1, true), false,
        "sum_{k<n} (11k+3) binom(2k,k)^2 binom(3k,k) 64^(n-1-k) / (n(2n+1) binom(2n,n)) in Z"),
    claim("conj5.5/last", (10, 3), Weight::CentralSqCubic, 8, (1, true), false,
        "sum_{k<n} (10k+3) binom(2k,k)^2 binom(3k,k) 8^(n-1-k) / (n(2n+1) binom(2n,n)) in Z"),
    claim("rem5.2/first", (15, 4), Weight::CentralSqCubic, -27, (2, true), true,
        "sum_{k<n} (15k+4) binom(2k,k)^2 binom(3k,k) (-27)^(n-1-k) / (2n(2n+1) binom(2n,n)) in 3^(-delta(2n+1)) Z"),
    claim("rem5.2/second", (40, 3), Weight::CentralSqQuartic, 614_656, (2, true), false,
        "sum_{k<n} (40k+3) binom(2k,k)^2 binom(4k,2k) 28^(4(n-1-k)) / (2n(2n+1) binom(2n,n)) in Z"),
    claim("conj5.8/last", (154, 15), Weight::Sextic, -32_768, (2, true), false,
        "sum_{k<n} (154k+15) binom(6k,3k) binom(3k,k) binom(2k,k) (-2^15)^(n-1-k) / (2n(2n+1) binom(2n,n)) in Z"),
];

/// Ids accepted by [`verify_divisibility`].
pub fn divisibility_ids() -> impl Iterator<Item = &'static str> {
    CLAIMS
        .iter()
        .map(|c| c.id)
        .chain(["lemma4.1", "conj5.15/a_m"])
}

pub fn divisibility_statement(id: &str) -> Result<&'static str> {
    match id {
        "lemma4.1" => Ok("4 binom(2n,n) | s_n = (1/n) sum_{k<n} (21k+8) binom(2k,k)^3"),
        "conj5.15/a_m" => Ok("a_m = sum_{n<m} (3n^2+n) 16^(m-1-n) inner(n) / (2m^3(m-1)) in Z, odd iff m is a power of 2"),
        _ => CLAIMS.iter().find(|c| c.id == id).map(|c| c.statement).ok_or_else(|| Error::UnknownId(id.into())),
    }
}

/// `delta(m)` is 1 when `m` is a power of 3 (including `3^0`), else 0.
pub fn delta(mut m: u64) -> u32 {
    if m == 0 {
        return 0;
    }
    while m.is_multiple_of(3) {
        m /= 3;
    }
    u32::from(m == 1)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct DivisibilityCase {
    pub id: String,
    pub n: u64,
    /// The quotient whose integrality is claimed.
    #[serde(serialize_with = "as_text")]
    pub quotient: BigRational,
    /// Power of 3 allowed in the denominator.
    pub allowance: u32,
    pub holds: bool,
}

fn power_of_two(m: u64) -> bool {
    m.is_power_of_two()
}

/// `sum_{k<n} (c1 k + c0) w_k b^(n-1-k)` evaluated by Horner's rule.
fn weighted_sum(c: &Claim, n: u64) -> BigInt {
    let base = BigInt::from(c.base);
    let mut acc = BigInt::zero();
    for k in 0..n {
        acc = acc * &base + BigInt::from(c.lin.0 * k + c.lin.1) * c.weight.at(k);
    }
    acc
}

/// The `a_m` of the last integrality claim, as an exact rational.
pub fn a_m(m: u64) -> BigRational {
    let mut acc = BigInt::zero();
    let sixteen = BigInt::from(16);
    for n in 0..m {
        let inner = inner_convolution_exact(InnerShape::BinomSquaredCentral, n);
        debug_assert!(inner.is_integer());
        acc = acc * &sixteen + BigInt::from(3 * n * n + n) * inner.to_integer();
    }
    BigRational::new(acc, BigInt::from(2 * m.pow(3) * (m - 1)))
}

/// Decide the claim `id` at `n` (for `conj5.15/a_m`, `n` is `m`).
pub fn verify_divisibility(id: &str, n: u64) -> Result<DivisibilityCase> {
    let min = if matches!(id, "lemma4.1" | "conj5.3/last") {
        1
    } else {
        2
    };
    if n < min {
        divisibility_statement(id)?;
        return Err(Error::InvalidArgument(format!(
            "`{id}` needs n >= {min}, got {n}"
        )));
    }
    let (quotient, allowance, extra) = match id {
        "lemma4.1" => {
            let raw = (0..n)
                .map(|k| BigInt::from(21 * k + 8) * binom(2 * k, k).pow(3))
                .sum::<BigInt>();
            (
                BigRational::new(raw, BigInt::from(4 * n) * binom(2 * n, n)),
                0,
                true,
            )
        }
        "conj5.15/a_m" => {
            let a = a_m(n);
            let parity = a.is_integer() && (a.to_integer().is_odd() == power_of_two(n));
            (a, 0, parity)
        }
        _ => {
            let c = CLAIMS
                .iter()
                .find(|c| c.id == id)
                .ok_or_else(|| Error::UnknownId(id.into()))?;
            let allowance = if c.three_allowance {
                delta(2 * n + 1)
            } else {
                0
            };
            (
                BigRational::new(weighted_sum(c, n), c.divisor.at(n)),
                allowance,
                true,
            )
        }
    };
    let scaled = &quotient * BigRational::from_integer(BigInt::from(3u64.pow(allowance)));
    let holds = scaled.is_integer() && extra;
    Ok(DivisibilityCase {
        id: id.to_string(),
        n,
        quotient,
        allowance,
        holds,
    })
}
