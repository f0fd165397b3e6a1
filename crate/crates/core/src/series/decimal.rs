use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::ball::{ten_pow_neg, Ball};
use crate::error::{Error, Result};

/// `mantissa * 10^exponent`, within `10^-digits` of the value it stands for.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HighPrecisionDecimal {
    pub mantissa: BigInt,
    pub exponent: i32,
    pub digits: u32,
}

impl HighPrecisionDecimal {
    /// Round a certified ball to `digits` places; fails if the ball is too wide.
    pub fn from_ball(b: &Ball, digits: u32) -> Result<Self> {
        let r = b.rounded(digits + 1);
        if r.rad >= ten_pow_neg(digits) {
            return Err(Error::PrecisionShortfall {
                needed: digits as i64,
                achieved: -1,
            });
        }
        let scale = BigInt::from(10).pow(digits + 1);
        let m = r.mid * BigRational::from_integer(scale);
        debug_assert!(m.is_integer());
        Ok(Self {
            mantissa: m.to_integer(),
            exponent: -(digits as i32 + 1),
            digits,
        })
    }

    pub fn to_rational(&self) -> BigRational {
        let ten = BigInt::from(10);
        if self.exponent >= 0 {
            BigRational::from_integer(&self.mantissa * ten.pow(self.exponent as u32))
        } else {
            BigRational::new(self.mantissa.clone(), ten.pow(self.exponent.unsigned_abs()))
        }
    }

    /// The value as a ball of radius `10^-digits`.
    pub fn to_ball(&self) -> Ball {
        Ball::new(self.to_rational(), ten_pow_neg(self.digits))
    }

    /// Fixed notation with `places` decimals, rounded half away from zero.
    pub fn to_fixed(&self, places: u32) -> String {
        fixed(&self.to_rational(), places)
    }
}

impl fmt::Display for HighPrecisionDecimal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_fixed(self.digits))
    }
}

pub(crate) fn fixed(q: &BigRational, places: u32) -> String {
    let scale = BigInt::from(10).pow(places);
    let x = q.abs() * BigRational::from_integer(scale.clone());
    let (mut n, r) = x.numer().div_mod_floor(x.denom());
    if BigInt::from(2) * r >= *x.denom() {
        n += 1;
    }
    let (int, frac) = n.div_mod_floor(&scale);
    let sign = if q.is_negative() && !(int.is_zero() && frac.is_zero()) {
        "-"
    } else {
        ""
    };
    if places == 0 {
        return format!("{sign}{int}");
    }
    format!(
        "{sign}{int}.{:0>width$}",
        frac.to_string(),
        width = places as usize
    )
}
