//! The registered closed-form identities, each evaluated on both sides exactly.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use super::tables::{binom, binom_row, q, qi, sign, upper_row, Tables};
use crate::arith::jacobi;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdentityCase {
    pub id: String,
    pub n: u64,
    #[serde(serialize_with = "as_text")]
    pub lhs: BigRational,
    #[serde(serialize_with = "as_text")]
    pub rhs: BigRational,
    pub equal: bool,
}

pub(crate) fn as_text<S: serde::Serializer>(
    v: &BigRational,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(v)
}

/// Registered identity ids with their smallest admissible `n` and a statement.
pub const IDENTITIES: &[(&str, u64, &str)] = &[
    ("eq2.5", 1, "sum_{k=1}^n binom(2k,k)/k = (n+1)/3 binom(2n+1,n) sum_{k=1}^n 1/(k^2 binom(n,k)^2)"),
    (
        "eq2.6",
        1,
        "sum_{k=1}^n (-1)^k/(k^2 binom(n,k) binom(n+k,k)) = (-1)^(n-1) (3 sum 1/(k^2 binom(2k,k)) + 2 sum (-1)^k/k^2)",
    ),
    ("eq2.7", 1, "sum_{k=1}^n 1/(k^2 binom(n+k,k)) = 3 sum_{k=1}^n 1/(k^2 binom(2k,k)) - sum_{k=1}^n 1/k^2"),
    ("eq3.4", 0, "(-1)^n sum_k binom(n,k) (-2)^(n-k) (H_{n+k} - H_{n-k}) = sum_{k=1}^n (-1)^k/k - H_n/2"),
    ("eq3.5", 0, "(-1)^n sum_k binom(n,k) binom(n+k,k) (-1)^k (H_{n+k} - H_{n-k}) = 3/2 sum_{k=1}^n binom(2k,k)/k"),
    (
        "eq3.6",
        0,
        "(-1)^n sum_k binom(n,k) binom(n+k,k) (-1)^k k (H_{n+k} - H_{n-k}) = (2n+1)(1 - binom(2n,n)) + 3/2 n(n+1) sum binom(2k,k)/k",
    ),
    ("eq3.7", 0, "sum_k binom(n,k) (-2)^(n-k) H_{n+k} = (-1)^n H_n/2"),
    ("eq3.8", 0, "sum_k binom(n,k) (-2)^(n-k) H_{n-k} = (-1)^n H_n - (-1)^n sum_{k=1}^n (-1)^k/k"),
    (
        "eq3.9",
        0,
        "sum_k binom(n,k) binom(n+k,k) (-1)^k H_{n-k} = 2(-1)^n H_n - 3/2 (-1)^n sum_{k=1}^n binom(2k,k)/k",
    ),
    ("os/h-upper", 0, "sum_k binom(n,k) binom(n+k,k) (-1)^k H_{n+k} = (-1)^n 2 H_n"),
    ("os/k-h-upper", 0, "(-1)^n sum_k binom(n,k) binom(n+k,k) (-1)^k k H_{n+k} = 2n(n+1) H_n - n^2"),
    (
        "os/k-h-lower",
        0,
        "(-1)^n sum_k binom(n,k) binom(n+k,k) (-1)^k k H_{n-k} = (2n+1) binom(2n,n) - (n+1)^2 + 2n(n+1) H_n - 3/2 n(n+1) sum binom(2k,k)/k",
    ),
    (
        "rem3.1",
        1,
        "sum_{k=1}^n binom(n,k)^2 binom(n+k,k)^2 (1 + 2k(H_{n+k} + H_{n-k}) - 4k H_k) = 0",
    ),
    (
        "rem1.3/tauraso",
        0,
        "sum_{k=0}^n (4k+1) binom(2k,k)^2/16^k = (n+1)^2 binom(2n+1,n)^2/16^n = (2n+1)^2 binom(2n,n)^2/16^n",
    ),
    (
        "rem5.5/gosper-27",
        0,
        "sum_{k=0}^n (9k+2) binom(2k,k) binom(3k,k)/27^k = (3n+1)(3n+2)/27^n binom(2n,n) binom(3n,n)",
    ),
    (
        "rem5.5/gosper-432",
        0,
        "sum_{k=0}^n (36k+5) binom(6k,3k) binom(3k,k)/432^k = (6n+1)(6n+5)/432^n binom(6n,3n) binom(3n,n)",
    ),
    ("chu-vandermonde", 0, "sum_k binom(n,k) binom(n+k,k) (-1)^k = (-1)^n"),
    ("chu-vandermonde/k", 0, "sum_k k binom(n,k) binom(n+k,k) (-1)^k = (-1)^n n(n+1)"),
    ("trig-sum", 0, "sum_{k=0}^n (-2)^k binom(n+k,2k) = (2/(2n+1))"),
];

pub fn identity_ids() -> impl Iterator<Item = &'static str> {
    IDENTITIES.iter().map(|(id, _, _)| *id)
}

fn lookup(id: &str) -> Result<(u64, &'static str)> {
    IDENTITIES
        .iter()
        .find(|(i, _, _)| *i == id)
        .map(|(_, lo, s)| (*lo, *s))
        .ok_or_else(|| Error::UnknownId(id.to_string()))
}

pub fn identity_statement(id: &str) -> Result<&'static str> {
    lookup(id).map(|(_, s)| s)
}

fn frac(n: BigInt, d: BigInt) -> BigRational {
    BigRational::new(n, d)
}

fn half3() -> BigRational {
    BigRational::new(BigInt::from(3), BigInt::from(2))
}

fn pow_big(b: i64, e: u64) -> BigInt {
    BigInt::from(b).pow(e as u32)
}

/// Check `id` at `n`, building fresh tables.
pub fn verify_identity(id: &str, n: u64) -> Result<IdentityCase> {
    // The trigonometric sum needs no prefix tables.
    let size = if id == "trig-sum" { 0 } else { n };
    verify_with(&Tables::new(size), id, n)
}

/// Check `id` at `n` with precomputed tables covering `n`.
pub(crate) fn verify_with(t: &Tables, id: &str, n: u64) -> Result<IdentityCase> {
    let (lo, _) = lookup(id)?;
    if n < lo {
        return Err(Error::InvalidArgument(format!(
            "`{id}` needs n >= {lo}, got {n}"
        )));
    }
    debug_assert!(n <= t.n_max || id == "trig-sum");
    let (lhs, rhs) = sides(t, id, n);
    let out = IdentityCase {
        id: id.to_string(),
        n,
        equal: lhs == rhs,
        lhs,
        rhs,
    };
    Ok(out)
}

fn sides(t: &Tables, id: &str, n: u64) -> (BigRational, BigRational) {
    let h = &t.h;
    let nu = n as usize;
    let sn = sign(n);
    let nq = q(n as i64);
    let row = || binom_row(n);
    let up = || upper_row(n);
    // `binom(n,k) binom(n+k,k) (-1)^k`, the kernel shared by several identities.
    let kernel = || -> Vec<BigRational> {
        row()
            .iter()
            .zip(up())
            .enumerate()
            .map(|(k, (a, b))| sign(k as u64) * qi(&(a * b)))
            .collect()
    };
    let two_kernel = || -> Vec<BigRational> {
        row()
            .iter()
            .enumerate()
            .map(|(k, a)| qi(&(a * pow_big(-2, n - k as u64))))
            .collect()
    };
    match id {
        "eq2.5" => {
            let r = row();
            let s: BigRational = (1..=nu)
                .map(|k| frac(BigInt::one(), BigInt::from(k * k) * &r[k] * &r[k]))
                .sum();
            let rhs = frac(BigInt::from(n + 1), BigInt::from(3)) * qi(&binom(2 * n + 1, n)) * s;
            (t.cb_over_k[nu].clone(), rhs)
        }
        "eq2.6" => {
            let (r, u) = (row(), up());
            let lhs: BigRational = (1..=nu)
                .map(|k| sign(k as u64) * frac(BigInt::one(), BigInt::from(k * k) * &r[k] * &u[k]))
                .sum();
            let rhs = -sn * (q(3) * &t.inv_k2_cb[nu] + q(2) * &t.alt2[nu]);
            (lhs, rhs)
        }
        "eq2.7" => {
            let u = up();
            let lhs: BigRational = (1..=nu)
                .map(|k| frac(BigInt::one(), BigInt::from(k * k) * &u[k]))
                .sum();
            (lhs, q(3) * &t.inv_k2_cb[nu] - &t.inv2[nu])
        }
        "eq3.4" => {
            let s: BigRational = two_kernel()
                .iter()
                .enumerate()
                .map(|(k, c)| c * (&h[nu + k] - &h[nu - k]))
                .sum();
            (sn * s, &t.alt1[nu] - &h[nu] / q(2))
        }
        "eq3.5" => {
            let s: BigRational = kernel()
                .iter()
                .enumerate()
                .map(|(k, c)| c * (&h[nu + k] - &h[nu - k]))
                .sum();
            (sn * s, half3() * &t.cb_over_k[nu])
        }
        "eq3.6" => {
            let s: BigRational = kernel()
                .iter()
                .enumerate()
                .map(|(k, c)| c * q(k as i64) * (&h[nu + k] - &h[nu - k]))
                .sum();
            let rhs = q(2 * n as i64 + 1) * (BigRational::one() - qi(&t.central[nu]))
                + half3() * &nq * q(n as i64 + 1) * &t.cb_over_k[nu];
            (sn * s, rhs)
        }
        "eq3.7" => {
            let s: BigRational = two_kernel()
                .iter()
                .enumerate()
                .map(|(k, c)| c * &h[nu + k])
                .sum();
            (s, sn * &h[nu] / q(2))
        }
        "eq3.8" => {
            let s: BigRational = two_kernel()
                .iter()
                .enumerate()
                .map(|(k, c)| c * &h[nu - k])
                .sum();
            (s, &sn * &h[nu] - &sn * &t.alt1[nu])
        }
        "eq3.9" => {
            let s: BigRational = kernel()
                .iter()
                .enumerate()
                .map(|(k, c)| c * &h[nu - k])
                .sum();
            (s, q(2) * &sn * &h[nu] - half3() * &sn * &t.cb_over_k[nu])
        }
        "os/h-upper" => {
            let s: BigRational = kernel()
                .iter()
                .enumerate()
                .map(|(k, c)| c * &h[nu + k])
                .sum();
            (s, q(2) * sn * &h[nu])
        }
        "os/k-h-upper" => {
            let s: BigRational = kernel()
                .iter()
                .enumerate()
                .map(|(k, c)| c * q(k as i64) * &h[nu + k])
                .sum();
            (sn * s, q(2) * &nq * q(n as i64 + 1) * &h[nu] - &nq * &nq)
        }
        "os/k-h-lower" => {
            let s: BigRational = kernel()
                .iter()
                .enumerate()
                .map(|(k, c)| c * q(k as i64) * &h[nu - k])
                .sum();
            let n1 = q(n as i64 + 1);
            let rhs = q(2 * n as i64 + 1) * qi(&t.central[nu]) - &n1 * &n1
                + q(2) * &nq * &n1 * &h[nu]
                - half3() * &nq * &n1 * &t.cb_over_k[nu];
            (sn * s, rhs)
        }
        "rem3.1" => {
            let (r, u) = (row(), up());
            let s: BigRational = (1..=nu)
                .map(|k| {
                    let w = qi(&(&r[k] * &u[k]).pow(2));
                    let kq = q(k as i64);
                    w * (BigRational::one() + q(2) * &kq * (&h[nu + k] + &h[nu - k])
                        - q(4) * &kq * &h[k])
                })
                .sum();
            (s, BigRational::zero())
        }
        "rem1.3/tauraso" => {
            let lhs: BigRational = (0..=nu)
                .map(|k| {
                    frac(
                        BigInt::from(4 * k + 1) * t.central[k].pow(2),
                        pow_big(16, k as u64),
                    )
                })
                .sum();
            let d = pow_big(16, n);
            let first = frac(
                BigInt::from(n + 1).pow(2) * binom(2 * n + 1, n).pow(2),
                d.clone(),
            );
            let second = frac(BigInt::from(2 * n + 1).pow(2) * t.central[nu].pow(2), d);
            if first != second {
                // Report the form that disagrees with the sum.
                return (lhs, first);
            }
            (lhs, second)
        }
        "rem5.5/gosper-27" => {
            let w = |k: u64| &t.central[k as usize] * binom(3 * k, k);
            let lhs: BigRational = (0..=n)
                .map(|k| frac(BigInt::from(9 * k + 2) * w(k), pow_big(27, k)))
                .sum();
            (
                lhs,
                frac(
                    BigInt::from((3 * n + 1) * (3 * n + 2)) * w(n),
                    pow_big(27, n),
                ),
            )
        }
        "rem5.5/gosper-432" => {
            let w = |k: u64| binom(6 * k, 3 * k) * binom(3 * k, k);
            let lhs: BigRational = (0..=n)
                .map(|k| frac(BigInt::from(36 * k + 5) * w(k), pow_big(432, k)))
                .sum();
            (
                lhs,
                frac(
                    BigInt::from((6 * n + 1) * (6 * n + 5)) * w(n),
                    pow_big(432, n),
                ),
            )
        }
        "chu-vandermonde" => (kernel().into_iter().sum(), sn),
        "chu-vandermonde/k" => {
            let s: BigRational = kernel()
                .iter()
                .enumerate()
                .map(|(k, c)| c * q(k as i64))
                .sum();
            (s, sn * &nq * q(n as i64 + 1))
        }
        "trig-sum" => {
            // binom(n+k, 2k) stepped in k.
            let (mut c, mut s) = (BigInt::one(), BigInt::zero());
            for k in 0..=n {
                s += pow_big(-2, k) * &c;
                c = c * BigInt::from((n + k + 1) * (n - k))
                    / BigInt::from((2 * k + 1) * (2 * k + 2));
            }
            (qi(&s), q(jacobi(2, 2 * n + 1) as i64))
        }
        _ => unreachable!("ids are checked against the registry"),
    }
}
