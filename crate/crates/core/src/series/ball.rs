//! Rational midpoint-radius intervals.

use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// The closed interval `[mid - rad, mid + rad]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ball {
    pub mid: BigRational,
    pub rad: BigRational,
}

pub(crate) fn ten_pow_neg(d: u32) -> BigRational {
    BigRational::new(BigInt::one(), BigInt::from(10).pow(d))
}

impl Ball {
    pub fn exact(q: BigRational) -> Self {
        Self {
            mid: q,
            rad: BigRational::zero(),
        }
    }

    pub fn new(mid: BigRational, rad: BigRational) -> Self {
        Self {
            mid,
            rad: rad.abs(),
        }
    }

    pub fn int(n: i64) -> Self {
        Self::exact(BigRational::from_integer(BigInt::from(n)))
    }

    /// Round the midpoint to a multiple of `10^-digits`, widening the radius.
    pub fn rounded(&self, digits: u32) -> Self {
        let scale = BigInt::from(10).pow(digits);
        let scaled = &self.mid * BigRational::from_integer(scale.clone());
        let (q, r) = scaled.numer().div_mod_floor(scaled.denom());
        let up = BigInt::from(2) * r >= *scaled.denom();
        let n = if up { q + 1 } else { q };
        let mid = BigRational::new(n, scale);
        let err = (&self.mid - &mid).abs();
        Self {
            mid,
            rad: &self.rad + err,
        }
    }

    pub fn contains(&self, q: &BigRational) -> bool {
        (&self.mid - q).abs() <= self.rad
    }

    /// Lower bound for `|x|` over the ball, zero if it straddles zero.
    pub fn min_abs(&self) -> BigRational {
        let m = self.mid.abs();
        if m > self.rad {
            m - &self.rad
        } else {
            BigRational::zero()
        }
    }

    pub fn recip(&self) -> Option<Self> {
        let lo = self.min_abs();
        if lo.is_zero() {
            return None;
        }
        let mid = self.mid.recip();
        // |1/x - 1/m| <= r / (|m| (|m| - r)).
        let rad = &self.rad / (self.mid.abs() * lo);
        Some(Self { mid, rad })
    }

    pub fn powi(&self, e: i32) -> Option<Self> {
        let base = if e < 0 { self.recip()? } else { self.clone() };
        let mut acc = Ball::int(1);
        for _ in 0..e.unsigned_abs() {
            acc = &acc * &base;
        }
        Some(acc)
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Self {
            mid: &self.mid * c,
            rad: &self.rad * c.abs(),
        }
    }

    /// Whether the two balls overlap once each is widened by `tol`.
    pub fn agrees(&self, other: &Ball, tol: &BigRational) -> bool {
        (&self.mid - &other.mid).abs() <= &self.rad + &other.rad + tol
    }
}

impl Add for &Ball {
    type Output = Ball;
    fn add(self, o: &Ball) -> Ball {
        Ball {
            mid: &self.mid + &o.mid,
            rad: &self.rad + &o.rad,
        }
    }
}

impl Sub for &Ball {
    type Output = Ball;
    fn sub(self, o: &Ball) -> Ball {
        Ball {
            mid: &self.mid - &o.mid,
            rad: &self.rad + &o.rad,
        }
    }
}

impl Mul for &Ball {
    type Output = Ball;
    fn mul(self, o: &Ball) -> Ball {
        let rad = self.mid.abs() * &o.rad + o.mid.abs() * &self.rad + &self.rad * &o.rad;
        Ball {
            mid: &self.mid * &o.mid,
            rad,
        }
    }
}

impl Neg for &Ball {
    type Output = Ball;
    fn neg(self) -> Ball {
        Ball {
            mid: -&self.mid,
            rad: self.rad.clone(),
        }
    }
}
