//! Reference constants, each as a certified ball.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::ball::{ten_pow_neg, Ball};
use super::decimal::HighPrecisionDecimal;
use crate::error::{Error, Result};
use crate::special::tables::with_bernoulli;

/// Largest precision served; the headline check for eq (1.20) needs 240 digits.
pub const MAX_DIGITS: u32 = 300;

/// Extra digits carried internally beyond what a caller asks for.
const GUARD_DIGITS: u32 = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Constant {
    Pi,
    Zeta3,
    Zeta4,
    /// `L(2, (./3)) = sum (k/3)/k^2`.
    K,
    Sqrt2,
    Sqrt3,
}

impl Constant {
    pub const ALL: [Constant; 6] = [
        Constant::Pi,
        Constant::Sqrt2,
        Constant::Sqrt3,
        Constant::Zeta3,
        Constant::Zeta4,
        Constant::K,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Constant::Pi => "pi",
            Constant::Zeta3 => "zeta3",
            Constant::Zeta4 => "zeta4",
            Constant::K => "K",
            Constant::Sqrt2 => "sqrt2",
            Constant::Sqrt3 => "sqrt3",
        }
    }
}

impl fmt::Display for Constant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Constant {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Constant::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::UnknownId(s.to_string()))
    }
}

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// `atan(1/x)` by its alternating series, to within `10^-w`.
fn atan_inv(x: i64, w: u32) -> Ball {
    let eps = ten_pow_neg(w);
    let x2 = BigInt::from(x * x);
    let mut pow = BigInt::from(x);
    let mut sum = BigRational::zero();
    let mut j = 0i64;
    loop {
        let term = BigRational::new(BigInt::one(), &pow * BigInt::from(2 * j + 1));
        if term < eps {
            // Alternating with decreasing terms: the first omitted term bounds the tail.
            return Ball::new(sum, term);
        }
        if j % 2 == 0 {
            sum += term;
        } else {
            sum -= term;
        }
        pow *= &x2;
        j += 1;
    }
}

/// Machin's formula `pi = 16 atan(1/5) - 4 atan(1/239)`.
fn pi_machin(w: u32) -> Ball {
    let a = atan_inv(5, w + 2);
    let b = atan_inv(239, w + 2);
    &a.scale(&rat(16, 1)) - &b.scale(&rat(4, 1))
}

/// Hurwitz zeta `zeta(s, a)` for integer `s >= 2` and rational `a > 0` by
/// Euler-Maclaurin summation, exact in every term, to within `10^-w`.
pub fn hurwitz(s: u32, a: &BigRational, w: u32) -> Result<Ball> {
    assert!(s >= 2 && a.is_positive());
    let eps = ten_pow_neg(w + 2);
    let n = (w / 2 + 10) as i64;
    let big_n = a + BigRational::from_integer(BigInt::from(n));
    let si = s as i32;
    let mut sum: BigRational = (0..n).map(|k| (a + rat(k, 1)).recip().pow(si)).sum();
    sum += big_n.recip().pow(si - 1) / rat(s as i64 - 1, 1);
    sum += big_n.recip().pow(si) / rat(2, 1);
    let inv_n2 = big_n.recip().pow(2);
    // Correction terms B_{2j}/(2j)! (s)_{2j-1} N^{-s-2j+1}.
    let max_j = (3 * n) as usize;
    let res = with_bernoulli(2 * max_j + 2, |b| {
        let mut rising = BigRational::from_integer(BigInt::from(s)); // (s)_1
        let mut fact = BigRational::from_integer(BigInt::from(2)); // 2!
        let mut npow = big_n.recip().pow(si + 1);
        let mut prev: Option<BigRational> = None;
        for j in 1..=max_j {
            let term = &b[2 * j] / &fact * &rising * &npow;
            let mag = term.abs();
            if mag < eps {
                // For real s the remainder is at most the first omitted term.
                return Ok((sum.clone(), mag * rat(2, 1)));
            }
            if let Some(p) = &prev {
                if &mag > p {
                    break;
                }
            }
            sum += &term;
            prev = Some(mag);
            let (sj, j2) = (s as i64 + 2 * j as i64, 2 * j as i64);
            rising *= rat((sj - 1) * sj, 1);
            fact *= rat((j2 + 1) * (j2 + 2), 1);
            npow *= &inv_n2;
        }
        Err(Error::PrecisionShortfall {
            needed: w as i64,
            achieved: 0,
        })
    })?;
    Ok(Ball::new(res.0, res.1))
}

fn sqrt_ball(n: u32, w: u32) -> Ball {
    let scale = BigInt::from(10).pow(w);
    let s = (BigInt::from(n) * &scale * &scale).sqrt();
    Ball::new(BigRational::new(s, scale), ten_pow_neg(w))
}

fn compute(c: Constant, w: u32) -> Result<Ball> {
    let wide = w + 4;
    let b = match c {
        Constant::Pi => pi_machin(wide),
        Constant::Zeta3 => hurwitz(3, &rat(1, 1), wide)?,
        Constant::Zeta4 => hurwitz(4, &rat(1, 1), wide)?,
        Constant::K => {
            let d = &hurwitz(2, &rat(1, 3), wide + 2)? - &hurwitz(2, &rat(2, 3), wide + 2)?;
            d.scale(&rat(1, 9))
        }
        Constant::Sqrt2 => sqrt_ball(2, wide),
        Constant::Sqrt3 => sqrt_ball(3, wide),
    };
    let b = b.rounded(w + 2);
    debug_assert!(b.rad < ten_pow_neg(w));
    Ok(b)
}

type Memo = HashMap<(Constant, u32), Ball>;

fn memo() -> &'static Mutex<Memo> {
    static M: OnceLock<Mutex<Memo>> = OnceLock::new();
    M.get_or_init(|| Mutex::new(HashMap::new()))
}

/// `c` as a ball of radius below `10^-w`, computed once per `(c, w)`.
pub fn constant_ball(c: Constant, w: u32) -> Result<Ball> {
    if let Some(b) = memo().lock().expect("memo lock").get(&(c, w)) {
        return Ok(b.clone());
    }
    let b = compute(c, w)?;
    memo().lock().expect("memo lock").insert((c, w), b.clone());
    Ok(b)
}

/// `name` to `digits` decimal places.
pub fn reference_constant(name: &str, digits: u32) -> Result<HighPrecisionDecimal> {
    if digits > MAX_DIGITS {
        return Err(Error::InvalidArgument(format!(
            "at most {MAX_DIGITS} digits are supported"
        )));
    }
    let c: Constant = name.parse()?;
    HighPrecisionDecimal::from_ball(&constant_ball(c, digits + GUARD_DIGITS)?, digits)
}

/// `zeta(4)` by the second route, `pi^4 / 90` from Machin's formula.
pub fn zeta4_from_pi(w: u32) -> Result<Ball> {
    let pi = constant_ball(Constant::Pi, w + 4)?;
    let p4 = pi.powi(4).expect("pi is nonzero");
    Ok(p4.scale(&rat(1, 90)))
}
