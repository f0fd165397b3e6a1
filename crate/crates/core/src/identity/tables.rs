//! Exact prefix tables shared by the identity checks.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub(crate) fn q(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

pub(crate) fn qi(n: &BigInt) -> BigRational {
    BigRational::from_integer(n.clone())
}

pub(crate) fn binom(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut c = BigInt::one();
    for j in 0..k {
        c = c * BigInt::from(n - j) / BigInt::from(j + 1);
    }
    c
}

pub(crate) fn sign(n: u64) -> BigRational {
    if n.is_multiple_of(2) {
        BigRational::one()
    } else {
        -BigRational::one()
    }
}

/// `binom(n, k)` for `k = 0..=n`.
pub(crate) fn binom_row(n: u64) -> Vec<BigInt> {
    let mut row = Vec::with_capacity(n as usize + 1);
    let mut c = BigInt::one();
    for k in 0..=n {
        row.push(c.clone());
        c = c * BigInt::from(n - k) / BigInt::from(k + 1);
    }
    row
}

/// `binom(n + k, k)` for `k = 0..=n`.
pub(crate) fn upper_row(n: u64) -> Vec<BigInt> {
    let mut row = Vec::with_capacity(n as usize + 1);
    let mut c = BigInt::one();
    for k in 0..=n {
        row.push(c.clone());
        c = c * BigInt::from(n + k + 1) / BigInt::from(k + 1);
    }
    row
}

/// Harmonic numbers and the other prefix sums, indexed by their upper limit.
pub(crate) struct Tables {
    pub n_max: u64,
    /// `H_0 ..= H_{2 n_max}`.
    pub h: Vec<BigRational>,
    /// `sum_{k<=n} (-1)^k / k`.
    pub alt1: Vec<BigRational>,
    /// `sum_{k<=n} 1 / k^2`.
    pub inv2: Vec<BigRational>,
    /// `sum_{k<=n} (-1)^k / k^2`.
    pub alt2: Vec<BigRational>,
    /// `sum_{k<=n} binom(2k,k) / k`.
    pub cb_over_k: Vec<BigRational>,
    /// `sum_{k<=n} 1 / (k^2 binom(2k,k))`.
    pub inv_k2_cb: Vec<BigRational>,
    /// `binom(2k, k)` for `k = 0..=n_max`.
    pub central: Vec<BigInt>,
}

impl Tables {
    pub fn new(n_max: u64) -> Self {
        let top = 2 * n_max as usize + 1;
        let mut h = vec![BigRational::zero()];
        for k in 1..=top {
            let next = &h[k - 1] + BigRational::new(BigInt::one(), BigInt::from(k));
            h.push(next);
        }
        let mut central = vec![BigInt::one()];
        for k in 1..=n_max {
            let next = &central[k as usize - 1] * BigInt::from(2 * (2 * k - 1)) / BigInt::from(k);
            central.push(next);
        }
        let zero = BigRational::zero();
        let (mut alt1, mut inv2, mut alt2, mut cb_over_k, mut inv_k2_cb) = (
            vec![zero.clone()],
            vec![zero.clone()],
            vec![zero.clone()],
            vec![zero.clone()],
            vec![zero],
        );
        for k in 1..=n_max as usize {
            let kk = BigInt::from(k);
            let s = sign(k as u64);
            let r1 = BigRational::new(BigInt::one(), kk.clone());
            let r2 = BigRational::new(BigInt::one(), &kk * &kk);
            alt1.push(&alt1[k - 1] + &s * &r1);
            alt2.push(&alt2[k - 1] + &s * &r2);
            inv2.push(&inv2[k - 1] + &r2);
            cb_over_k.push(&cb_over_k[k - 1] + BigRational::new(central[k].clone(), kk.clone()));
            inv_k2_cb
                .push(&inv_k2_cb[k - 1] + BigRational::new(BigInt::one(), &kk * &kk * &central[k]));
        }
        Self {
            n_max,
            h,
            alt1,
            inv2,
            alt2,
            cb_over_k,
            inv_k2_cb,
            central,
        }
    }
}
