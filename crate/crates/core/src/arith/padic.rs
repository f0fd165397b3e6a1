//! Precision-tracked p-adic numbers.
//!
//! A value is either `p^v * u + O(p^{v+m})` with `u` a unit modulo `p^m`, or a
//! zero known to absolute precision `t`, i.e. `O(p^t)`. An exact zero is the
//! same marker with `t = EXACT`.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::modular::{inv_mod, reduce_signed, split_valuation};
use crate::error::{Error, Result};

/// Absolute precision used for exact zeros.
pub const EXACT: i64 = i64::MAX / 4;

#[derive(Clone, PartialEq, Eq)]
enum Repr {
    Zero { abs: i64 },
    Unit { v: i64, u: BigUint, m: u32 },
}

#[derive(Clone, PartialEq, Eq)]
pub struct PadicTracked {
    p: u64,
    repr: Repr,
}

pub(crate) fn ppow(p: u64, e: u32) -> BigUint {
    BigUint::from(p).pow(e)
}

impl PadicTracked {
    pub fn exact_zero(p: u64) -> Self {
        Self {
            p,
            repr: Repr::Zero { abs: EXACT },
        }
    }

    /// `O(p^t)`.
    pub fn zero_to(p: u64, t: i64) -> Self {
        Self {
            p,
            repr: Repr::Zero { abs: t.min(EXACT) },
        }
    }

    pub fn one(p: u64, m: u32) -> Self {
        Self {
            p,
            repr: Repr::Unit {
                v: 0,
                u: BigUint::one(),
                m: m.max(1),
            },
        }
    }

    /// Builds `p^v * u` from a unit candidate, normalizing any factors of `p`
    /// left in `u`. Absolute precision is `v + m` regardless of the shift.
    pub fn from_parts(p: u64, v: i64, u: BigUint, m: u32) -> Self {
        let abs = v + m as i64;
        let modulus = ppow(p, m);
        let u = u % &modulus;
        if u.is_zero() {
            return Self::zero_to(p, abs);
        }
        let (w, rest) = split_unsigned(&u, p);
        let v = v + w;
        let m = (abs - v) as u32;
        Self {
            p,
            repr: Repr::Unit {
                v,
                u: rest % ppow(p, m),
                m,
            },
        }
    }

    /// `q` with unit precision `m`; `q = 0` yields the exact zero.
    pub fn from_rational(q: &BigRational, p: u64, m: u32) -> Self {
        let m = m.max(1);
        if q.is_zero() {
            return Self::exact_zero(p);
        }
        let (vn, n) = split_valuation(q.numer(), p);
        let (vd, d) = split_valuation(q.denom(), p);
        let modulus = ppow(p, m);
        let dinv = inv_mod(&reduce_signed(&d, &modulus), &modulus).expect("p-free denominator");
        let u = reduce_signed(&n, &modulus) * dinv % &modulus;
        Self {
            p,
            repr: Repr::Unit { v: vn - vd, u, m },
        }
    }

    pub fn from_int(n: &BigInt, p: u64, m: u32) -> Self {
        Self::from_rational(&BigRational::from_integer(n.clone()), p, m)
    }

    /// Rational with the requested absolute precision `abs` rather than unit precision.
    pub fn from_rational_abs(q: &BigRational, p: u64, abs: i64) -> Self {
        if q.is_zero() {
            return Self::exact_zero(p);
        }
        let v = super::modular::rational_valuation(q, p).expect("nonzero");
        if abs <= v {
            return Self::zero_to(p, abs);
        }
        Self::from_rational(q, p, (abs - v) as u32)
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn is_zero_marker(&self) -> bool {
        matches!(self.repr, Repr::Zero { .. })
    }

    pub fn is_exact_zero(&self) -> bool {
        matches!(self.repr, Repr::Zero { abs } if abs >= EXACT)
    }

    /// Valuation; `None` for the zero marker.
    pub fn valuation(&self) -> Option<i64> {
        match self.repr {
            Repr::Zero { .. } => None,
            Repr::Unit { v, .. } => Some(v),
        }
    }

    /// Lower bound for the valuation: the true valuation, or the absolute
    /// precision of a zero marker.
    pub fn valuation_floor(&self) -> i64 {
        match self.repr {
            Repr::Zero { abs } => abs,
            Repr::Unit { v, .. } => v,
        }
    }

    pub fn unit(&self) -> Option<&BigUint> {
        match &self.repr {
            Repr::Zero { .. } => None,
            Repr::Unit { u, .. } => Some(u),
        }
    }

    pub fn unit_precision(&self) -> Option<u32> {
        match self.repr {
            Repr::Zero { .. } => None,
            Repr::Unit { m, .. } => Some(m),
        }
    }

    /// The exponent `t` such that the value is known modulo `p^t`.
    pub fn abs_precision(&self) -> i64 {
        match self.repr {
            Repr::Zero { abs } => abs,
            Repr::Unit { v, m, .. } => v + m as i64,
        }
    }

    /// Forgets digits beyond absolute precision `t`.
    pub fn truncate(&self, t: i64) -> Self {
        if t >= self.abs_precision() {
            return self.clone();
        }
        match &self.repr {
            Repr::Zero { .. } => Self::zero_to(self.p, t),
            Repr::Unit { v, u, .. } => {
                if t <= *v {
                    Self::zero_to(self.p, t)
                } else {
                    let m = (t - v) as u32;
                    Self {
                        p: self.p,
                        repr: Repr::Unit {
                            v: *v,
                            u: u % ppow(self.p, m),
                            m,
                        },
                    }
                }
            }
        }
    }

    fn check_prime(&self, other: &Self) {
        assert_eq!(self.p, other.p, "p-adic operands over different primes");
    }

    pub fn add(&self, other: &Self) -> Self {
        self.check_prime(other);
        let p = self.p;
        let abs = self.abs_precision().min(other.abs_precision());
        let (xv, xu, yv, yu) = match (&self.repr, &other.repr) {
            (Repr::Zero { .. }, _) => return other.truncate(abs),
            (_, Repr::Zero { .. }) => return self.truncate(abs),
            (Repr::Unit { v: xv, u: xu, .. }, Repr::Unit { v: yv, u: yu, .. }) => {
                (*xv, xu, *yv, yu)
            }
        };
        let vmin = xv.min(yv);
        if abs <= vmin {
            return Self::zero_to(p, abs);
        }
        let width = (abs - vmin) as u32;
        let modulus = ppow(p, width);
        let lift = |v: i64, u: &BigUint| {
            let shift = (v - vmin) as u32;
            if shift >= width {
                BigUint::zero()
            } else {
                u * ppow(p, shift)
            }
        };
        let t = (lift(xv, xu) + lift(yv, yu)) % &modulus;
        Self::from_parts(p, vmin, t, width)
    }

    pub fn neg(&self) -> Self {
        match &self.repr {
            Repr::Zero { .. } => self.clone(),
            Repr::Unit { v, u, m } => {
                let modulus = ppow(self.p, *m);
                Self {
                    p: self.p,
                    repr: Repr::Unit {
                        v: *v,
                        u: (&modulus - u) % &modulus,
                        m: *m,
                    },
                }
            }
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.check_prime(other);
        let p = self.p;
        match (&self.repr, &other.repr) {
            (Repr::Zero { abs: a }, Repr::Zero { abs: b }) => {
                Self::zero_to(p, a.saturating_add(*b))
            }
            (Repr::Zero { abs }, Repr::Unit { v, .. })
            | (Repr::Unit { v, .. }, Repr::Zero { abs }) => {
                if *abs >= EXACT {
                    Self::exact_zero(p)
                } else {
                    Self::zero_to(p, abs + v)
                }
            }
            (
                Repr::Unit {
                    v: xv,
                    u: xu,
                    m: xm,
                },
                Repr::Unit {
                    v: yv,
                    u: yu,
                    m: ym,
                },
            ) => {
                let m = (*xm).min(*ym);
                let u = xu * yu % ppow(p, m);
                Self {
                    p,
                    repr: Repr::Unit { v: xv + yv, u, m },
                }
            }
        }
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        self.check_prime(other);
        let p = self.p;
        match (&self.repr, &other.repr) {
            (_, Repr::Zero { abs }) => Err(Error::DivisionByZero(*abs)),
            (Repr::Zero { abs }, Repr::Unit { v, .. }) => {
                if *abs >= EXACT {
                    Ok(Self::exact_zero(p))
                } else {
                    Ok(Self::zero_to(p, abs - v))
                }
            }
            (
                Repr::Unit {
                    v: xv,
                    u: xu,
                    m: xm,
                },
                Repr::Unit {
                    v: yv,
                    u: yu,
                    m: ym,
                },
            ) => {
                let m = (*xm).min(*ym);
                let modulus = ppow(p, m);
                let inv = inv_mod(yu, &modulus).expect("unit is invertible");
                Ok(Self {
                    p,
                    repr: Repr::Unit {
                        v: xv - yv,
                        u: xu * inv % &modulus,
                        m,
                    },
                })
            }
        }
    }

    /// Multiplies by `p^k`.
    pub fn shift(&self, k: i64) -> Self {
        match &self.repr {
            Repr::Zero { abs } => {
                if *abs >= EXACT {
                    self.clone()
                } else {
                    Self::zero_to(self.p, abs + k)
                }
            }
            Repr::Unit { v, u, m } => Self {
                p: self.p,
                repr: Repr::Unit {
                    v: v + k,
                    u: u.clone(),
                    m: *m,
                },
            },
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut r = Self::one(self.p, self.unit_precision().unwrap_or(1).max(1));
        if e == 0 {
            return r;
        }
        for _ in 0..e {
            r = r.mul(self);
        }
        r
    }

    /// Residue modulo `p^e` of an integral value known to precision `>= e`.
    pub fn residue(&self, e: u32) -> Result<BigUint> {
        let achieved = self.abs_precision();
        if achieved < e as i64 {
            return Err(Error::PrecisionShortfall {
                needed: e as i64,
                achieved,
            });
        }
        match &self.repr {
            Repr::Zero { .. } => Ok(BigUint::zero()),
            Repr::Unit { v, u, .. } => {
                if *v < 0 {
                    return Err(Error::DenominatorDivisible(self.p));
                }
                if *v >= e as i64 {
                    return Ok(BigUint::zero());
                }
                Ok(u * ppow(self.p, *v as u32) % ppow(self.p, e))
            }
        }
    }

    /// True when the value is known to be `0 mod p^e`.
    pub fn is_zero_mod(&self, e: i64) -> bool {
        self.abs_precision() >= e && self.valuation_floor() >= e
    }

    /// Human-readable class such as `26 + O(5^3)` or `5^-2*8 + O(5^0)`.
    pub fn class_string(&self) -> String {
        format!("{self:?}")
    }
}

fn split_unsigned(u: &BigUint, p: u64) -> (i64, BigUint) {
    let (v, rest) = split_valuation(&BigInt::from(u.clone()), p);
    (v, rest.to_biguint().expect("positive"))
}

impl fmt::Debug for PadicTracked {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p = self.p;
        match &self.repr {
            Repr::Zero { abs } if *abs >= EXACT => write!(f, "0"),
            Repr::Zero { abs } => write!(f, "O({p}^{abs})"),
            Repr::Unit { v, u, m } => {
                let abs = v + *m as i64;
                if *v >= 0 {
                    let shown = u * ppow(p, *v as u32);
                    write!(f, "{shown} + O({p}^{abs})")
                } else {
                    write!(f, "{p}^{v}*{u} + O({p}^{abs})")
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::modular::{reduce_rational, PrimePower};
    use proptest::prelude::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    fn unit(p: u64, v: i64, u: u64, m: u32) -> PadicTracked {
        PadicTracked::from_parts(p, v, BigUint::from(u), m)
    }

    fn parts(x: &PadicTracked) -> (i64, u64, u32) {
        (
            x.valuation().unwrap(),
            u64::try_from(x.unit().unwrap()).unwrap(),
            x.unit_precision().unwrap(),
        )
    }

    #[test]
    fn from_rational_examples() {
        assert_eq!(
            parts(&PadicTracked::from_rational(&q(83, 8), 5, 3)),
            (0, 26, 3)
        );
        assert_eq!(
            parts(&PadicTracked::from_rational(&q(1, 5), 5, 1)),
            (-1, 1, 1)
        );
        assert_eq!(
            parts(&PadicTracked::from_rational(&q(50, 3), 5, 2)),
            (2, 9, 2)
        );
        assert!(PadicTracked::from_rational(&q(0, 1), 5, 3).is_exact_zero());
    }

    #[test]
    fn add_examples() {
        let x = unit(5, 0, 1, 3);
        assert_eq!(x.add(&PadicTracked::zero_to(5, 3)), x);
        assert_eq!(x.add(&PadicTracked::exact_zero(5)), x);
        let s = x.add(&unit(5, 0, 124, 3));
        assert!(s.is_zero_marker());
        assert_eq!(s.abs_precision(), 3);
        let s = unit(5, 0, 6, 3).add(&unit(5, 0, 4, 1));
        assert!(s.is_zero_marker());
        assert_eq!(s.abs_precision(), 1);
        // A zero marker with less precision caps the partner.
        let s = unit(5, 0, 7, 3).add(&PadicTracked::zero_to(5, 1));
        assert_eq!(parts(&s), (0, 2, 1));
    }

    #[test]
    fn mul_div_examples() {
        let x = unit(5, 1, 4, 2);
        assert_eq!(x.mul(&PadicTracked::one(5, 5)), x);
        assert_eq!(parts(&x.mul(&unit(5, -3, 2, 3))), (-2, 8, 2));
        let d = unit(5, 0, 2, 2).div(&unit(5, 1, 3, 2)).unwrap();
        assert_eq!(parts(&d), (-1, 9, 2));
        assert!(matches!(
            x.div(&PadicTracked::zero_to(5, 4)),
            Err(Error::DivisionByZero(4))
        ));
    }

    #[test]
    fn residue_reporting() {
        let x = PadicTracked::from_rational(&q(83, 8), 5, 3);
        assert_eq!(x.residue(3).unwrap(), BigUint::from(26u32));
        assert_eq!(x.residue(2).unwrap(), BigUint::from(1u32));
        assert!(x.residue(4).is_err());
        assert_eq!(x.class_string(), "26 + O(5^3)");
        assert_eq!(
            PadicTracked::from_rational(&q(8, 5), 5, 2).class_string(),
            "5^-1*8 + O(5^1)"
        );
    }

    fn small_primes() -> Vec<u64> {
        vec![3, 5, 7, 11, 13]
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]

        #[test]
        fn faithful_round_trip(idx in 0usize..5, n in -1_000_000i64..1_000_000, d in 1i64..100_000, m in 1u32..8, de in 0u32..8) {
            let p = small_primes()[idx];
            let e = 1 + de % m;
            let d = if d % p as i64 == 0 { d + 1 } else { d };
            let r = q(n, d);
            let x = PadicTracked::from_rational(&r, p, m);
            let ctx = PrimePower::new(p, e).unwrap();
            let direct = reduce_rational(&r, &ctx).unwrap();
            if let Ok(res) = x.residue(e) {
                prop_assert_eq!(&res, direct.value());
            } else {
                // Only possible when the valuation pushes abs precision below e.
                prop_assert!(x.abs_precision() < e as i64);
            }
        }
    }

    proptest! {
        #[test]
        fn sound_on_explicit_pairs(idx in 0usize..5,
                                   an in -50_000i64..50_000, ad in 1i64..3000, av in -3i32..4,
                                   bn in -50_000i64..50_000, bd in 1i64..3000, bv in -3i32..4,
                                   ma in 1u32..6, mb in 1u32..6) {
            let p = small_primes()[idx];
            let scale = |n: i64, d: i64, v: i32| {
                let pp = BigInt::from(p).pow(v.unsigned_abs());
                if v >= 0 { BigRational::new(BigInt::from(n) * pp, d.into()) } else { BigRational::new(n.into(), BigInt::from(d) * pp) }
            };
            check_sound(p, &scale(an, ad, av), &scale(bn, bd, bv), ma, mb)?;
        }
    }

    fn reduce_at(r: &BigRational, p: u64, t: i64) -> Option<BigRational> {
        // Returns r mod p^t as a canonical rational representative class key.
        if r.is_zero() {
            return Some(BigRational::zero());
        }
        let x = PadicTracked::from_rational_abs(r, p, t);
        if x.is_zero_marker() {
            return Some(BigRational::zero());
        }
        let v = x.valuation().unwrap();
        let u = BigInt::from(x.unit().unwrap().clone());
        let pv = BigRational::from_integer(BigInt::from(p)).pow(v as i32);
        Some(BigRational::from_integer(u) * pv)
    }

    fn check_sound(
        p: u64,
        a: &BigRational,
        b: &BigRational,
        ma: u32,
        mb: u32,
    ) -> std::result::Result<(), TestCaseError> {
        let x = PadicTracked::from_rational(a, p, ma);
        let y = PadicTracked::from_rational(b, p, mb);
        for (val, exact) in [(x.add(&y), a + b), (x.mul(&y), a * b)] {
            let t = val.abs_precision();
            if t >= EXACT {
                continue;
            }
            let reported = match val.valuation() {
                None => BigRational::zero(),
                Some(v) => {
                    BigRational::from_integer(BigInt::from(val.unit().unwrap().clone()))
                        * BigRational::from_integer(BigInt::from(p)).pow(v as i32)
                }
            };
            prop_assert_eq!(reduce_at(&exact, p, t), reduce_at(&reported, p, t));
        }
        // Guard independence: two more digits agree after truncation.
        let x2 = PadicTracked::from_rational(a, p, ma + 2);
        let y2 = PadicTracked::from_rational(b, p, mb + 2);
        let s = x.add(&y);
        let s2 = x2.add(&y2).truncate(s.abs_precision());
        prop_assert_eq!(s, s2);
        Ok(())
    }
}
