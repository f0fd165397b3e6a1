//! Residue rings `Z / p^m` with a machine-word fast path.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::arith::modular::{inv_mod, reduce_signed};
use crate::arith::primes::inv_mod_u64;

pub(crate) trait ModRing: Sync {
    type E: Clone + Send + Sync;

    fn zero(&self) -> Self::E;
    fn one(&self) -> Self::E;
    fn from_i128(&self, n: i128) -> Self::E;
    fn add(&self, a: &Self::E, b: &Self::E) -> Self::E;
    fn mul(&self, a: &Self::E, b: &Self::E) -> Self::E;
    fn neg(&self, a: &Self::E) -> Self::E;
    fn inv(&self, a: &Self::E) -> Option<Self::E>;
    fn to_biguint(&self, a: &Self::E) -> BigUint;

    fn pow(&self, a: &Self::E, mut e: u64) -> Self::E {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }
}

/// Modulus below `2^63`.
pub(crate) struct SmallRing {
    q: u64,
}

impl SmallRing {
    pub(crate) fn new(q: u64) -> Self {
        debug_assert!(q < 1 << 63);
        Self { q }
    }
}

impl ModRing for SmallRing {
    type E = u64;

    fn zero(&self) -> u64 {
        0
    }

    fn one(&self) -> u64 {
        1 % self.q
    }

    fn from_i128(&self, n: i128) -> u64 {
        n.rem_euclid(self.q as i128) as u64
    }

    fn add(&self, a: &u64, b: &u64) -> u64 {
        let s = a + b;
        if s >= self.q {
            s - self.q
        } else {
            s
        }
    }

    fn mul(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 * *b as u128) % self.q as u128) as u64
    }

    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 {
            0
        } else {
            self.q - a
        }
    }

    fn inv(&self, a: &u64) -> Option<u64> {
        if self.q == 1 {
            return Some(0);
        }
        inv_mod_u64(*a, self.q)
    }

    fn to_biguint(&self, a: &u64) -> BigUint {
        BigUint::from(*a)
    }
}

pub(crate) struct BigRing {
    q: BigUint,
}

impl BigRing {
    pub(crate) fn new(q: BigUint) -> Self {
        Self { q }
    }
}

impl ModRing for BigRing {
    type E = BigUint;

    fn zero(&self) -> BigUint {
        BigUint::zero()
    }

    fn one(&self) -> BigUint {
        BigUint::one() % &self.q
    }

    fn from_i128(&self, n: i128) -> BigUint {
        reduce_signed(&BigInt::from(n), &self.q)
    }

    fn add(&self, a: &BigUint, b: &BigUint) -> BigUint {
        let s = a + b;
        if s >= self.q {
            s - &self.q
        } else {
            s
        }
    }

    fn mul(&self, a: &BigUint, b: &BigUint) -> BigUint {
        (a * b).mod_floor(&self.q)
    }

    fn neg(&self, a: &BigUint) -> BigUint {
        if a.is_zero() {
            BigUint::zero()
        } else {
            &self.q - a
        }
    }

    fn inv(&self, a: &BigUint) -> Option<BigUint> {
        inv_mod(a, &self.q)
    }

    fn to_biguint(&self, a: &BigUint) -> BigUint {
        a.clone()
    }
}

/// Runs `f` with the cheapest ring for modulus `q`.
pub(crate) fn with_ring<T>(
    q: &BigUint,
    small: impl FnOnce(&SmallRing) -> T,
    big: impl FnOnce(&BigRing) -> T,
) -> T {
    match q.to_u64() {
        Some(v) if v < 1 << 63 => small(&SmallRing::new(v)),
        _ => big(&BigRing::new(q.clone())),
    }
}
