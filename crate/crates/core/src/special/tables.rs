//! Exact Euler and Bernoulli numbers.
//!
//! Both tables come from the zigzag (up/down) numbers `A_n`, generated by the
//! Seidel boustrophedon triangle using integer additions only:
//!
//! * `E_{2n} = (-1)^n A_{2n}`
//! * `B_{2n} = (-1)^{n-1} 2n A_{2n-1} / (4^n (4^n - 1))`
//!
//! The defining recurrences are checked independently in the tests.

use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Default largest index held in exact tables.
pub const DEFAULT_EXACT_CEILING: u64 = 1200;

static CEILING: AtomicU64 = AtomicU64::new(0);

/// The exact-table ceiling: `SUPERCONG_EXACT_CEILING` if set, otherwise
/// [`DEFAULT_EXACT_CEILING`], unless overridden with [`set_exact_ceiling`].
pub fn exact_ceiling() -> u64 {
    let c = CEILING.load(Ordering::Relaxed);
    if c != 0 {
        return c;
    }
    let c = std::env::var("SUPERCONG_EXACT_CEILING")
        .ok()
        .and_then(|s| s.trim().parse::<u64>().ok())
        .filter(|&c| c > 0)
        .unwrap_or(DEFAULT_EXACT_CEILING);
    CEILING.store(c, Ordering::Relaxed);
    c
}

pub fn set_exact_ceiling(c: u64) {
    CEILING.store(c.max(1), Ordering::Relaxed);
}

struct Zigzag {
    /// `A_0 ..= A_n`.
    values: Vec<BigInt>,
    /// Last boustrophedon row, length `values.len()`.
    row: Vec<BigInt>,
    euler: Vec<BigInt>,
    bernoulli: Vec<BigRational>,
}

impl Zigzag {
    fn new() -> Self {
        Self {
            values: vec![BigInt::one()],
            row: vec![BigInt::one()],
            euler: vec![BigInt::one()],
            bernoulli: vec![BigRational::one()],
        }
    }

    fn extend_to(&mut self, n: usize) {
        while self.values.len() <= n {
            let k = self.values.len();
            // Row k is built from row k-1 in alternating direction; its far
            // end is A_k.
            let prev = &self.row;
            let mut next = Vec::with_capacity(k + 1);
            next.push(BigInt::zero());
            for j in 0..k {
                let v = &next[j] + &prev[k - 1 - j];
                next.push(v);
            }
            self.values.push(next[k].clone());
            self.row = next;
        }
        while self.euler.len() <= n {
            let i = self.euler.len();
            let e = if i % 2 == 1 {
                BigInt::zero()
            } else if (i / 2).is_multiple_of(2) {
                self.values[i].clone()
            } else {
                -self.values[i].clone()
            };
            self.euler.push(e);
        }
        while self.bernoulli.len() <= n {
            let i = self.bernoulli.len();
            let b = if i == 1 {
                BigRational::new(BigInt::from(-1), BigInt::from(2))
            } else if i % 2 == 1 {
                BigRational::zero()
            } else {
                let half = i / 2;
                let four = BigInt::one() << (2 * half);
                let den = &four * (&four - 1u32);
                let mut num = BigInt::from(i) * &self.values[i - 1];
                if half.is_multiple_of(2) {
                    num = -num;
                }
                BigRational::new(num, den)
            };
            self.bernoulli.push(b);
        }
    }
}

fn store() -> &'static RwLock<Zigzag> {
    static STORE: OnceLock<RwLock<Zigzag>> = OnceLock::new();
    STORE.get_or_init(|| RwLock::new(Zigzag::new()))
}

fn ensure(n: usize) {
    if store().read().expect("table lock").euler.len() > n {
        return;
    }
    store().write().expect("table lock").extend_to(n);
}

/// `E_0 ..= E_N`.
#[derive(Clone, Debug)]
pub struct EulerTable {
    values: Arc<Vec<BigInt>>,
}

impl EulerTable {
    pub fn get(&self, n: usize) -> &BigInt {
        &self.values[n]
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn values(&self) -> &[BigInt] {
        &self.values
    }
}

/// `B_0 ..= B_N`, with `B_1 = -1/2`.
#[derive(Clone, Debug)]
pub struct BernoulliTable {
    values: Arc<Vec<BigRational>>,
}

impl BernoulliTable {
    pub fn get(&self, n: usize) -> &BigRational {
        &self.values[n]
    }

    /// `B_n` with the convention `B_{-1} = 0`.
    pub fn get_signed(&self, n: i64) -> BigRational {
        if n < 0 {
            BigRational::zero()
        } else {
            self.values[n as usize].clone()
        }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn values(&self) -> &[BigRational] {
        &self.values
    }
}

/// Exact `E_0 ..= E_n`. Previously computed entries are reused.
pub fn euler_table(n: usize) -> EulerTable {
    ensure(n);
    let z = store().read().expect("table lock");
    EulerTable {
        values: Arc::new(z.euler[..=n].to_vec()),
    }
}

/// Exact `B_0 ..= B_n`.
pub fn bernoulli_table(n: usize) -> BernoulliTable {
    ensure(n);
    let z = store().read().expect("table lock");
    BernoulliTable {
        values: Arc::new(z.bernoulli[..=n].to_vec()),
    }
}

/// A single Euler number.
pub fn euler_number(n: usize) -> BigInt {
    ensure(n);
    store().read().expect("table lock").euler[n].clone()
}

/// A single Bernoulli number; `B_{-1}` is zero.
pub fn bernoulli_number(n: i64) -> BigRational {
    if n < 0 {
        return BigRational::zero();
    }
    ensure(n as usize);
    store().read().expect("table lock").bernoulli[n as usize].clone()
}

/// Runs `f` on borrowed Bernoulli numbers `B_0 ..= B_n` without copying.
pub fn with_bernoulli<R>(n: usize, f: impl FnOnce(&[BigRational]) -> R) -> R {
    ensure(n);
    let z = store().read().expect("table lock");
    f(&z.bernoulli[..=n])
}

/// Runs `f` on borrowed Euler numbers `E_0 ..= E_n`.
pub fn with_euler<R>(n: usize, f: impl FnOnce(&[BigInt]) -> R) -> R {
    ensure(n);
    let z = store().read().expect("table lock");
    f(&z.euler[..=n])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn binom_row(n: usize) -> Vec<BigInt> {
        let mut row = vec![BigInt::one()];
        for k in 0..n {
            let next = &row[k] * BigInt::from(n - k) / BigInt::from(k + 1);
            row.push(next);
        }
        row
    }

    #[test]
    fn small_values() {
        let e = euler_table(6);
        assert_eq!(e.get(0), &BigInt::from(1));
        assert_eq!(
            (e.get(2).clone(), e.get(4).clone(), e.get(6).clone()),
            (BigInt::from(-1), BigInt::from(5), BigInt::from(-61))
        );
        assert_eq!(euler_number(10), BigInt::from(-50521));
        let b = bernoulli_table(12);
        assert_eq!(b.get(2), &BigRational::new(1.into(), 6.into()));
        assert!(b.get(3).is_zero());
        assert_eq!(b.get(12), &BigRational::new((-691).into(), 2730.into()));
        assert!(bernoulli_number(-1).is_zero());
    }

    #[test]
    fn euler_defining_recurrence() {
        let e = euler_table(200);
        for n in 1..=200usize {
            let row = binom_row(n);
            let s: BigInt = (0..=n).step_by(2).map(|k| &row[k] * e.get(n - k)).sum();
            assert!(s.is_zero(), "n = {n}");
            if n % 2 == 1 {
                assert!(e.get(n).is_zero());
            }
        }
    }

    #[test]
    fn bernoulli_defining_recurrence() {
        let b = bernoulli_table(200);
        for n in 1..=200usize {
            let row = binom_row(n + 1);
            let s: BigRational = (0..=n)
                .map(|k| BigRational::from_integer(row[k].clone()) * b.get(k))
                .sum();
            assert!(s.is_zero(), "n = {n}");
            if n >= 3 && n % 2 == 1 {
                assert!(b.get(n).is_zero());
            }
        }
    }

    #[test]
    fn von_staudt_clausen_denominators() {
        let b = bernoulli_table(300);
        for n in (2..=300usize).step_by(2) {
            let expected: BigInt = (2..=n as u64 + 1)
                .filter(|&q| crate::arith::is_prime(q) && (n as u64).is_multiple_of(q - 1))
                .map(BigInt::from)
                .product();
            assert_eq!(b.get(n).denom(), &expected, "n = {n}");
        }
    }

    #[test]
    fn extension_reuses_prefix() {
        let short = bernoulli_table(20);
        let long = bernoulli_table(60);
        assert_eq!(&long.values()[..=20], short.values());
        assert_eq!(euler_table(30).values(), &euler_table(80).values()[..=30]);
    }
}
