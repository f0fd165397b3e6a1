//! Harmonic numbers and reciprocal power sums.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::arith::modular::{inv_mod, split_valuation_u64};
use crate::arith::padic::ppow;
use crate::arith::primes::{inv_mod_u64, mul_mod, pow_mod};
use crate::arith::PadicTracked;

/// `H_n` exactly.
pub fn harmonic_exact(n: u64) -> BigRational {
    reciprocal_power_sum_exact(1, n, 1, false)
}

/// `sum_{k=lo}^{hi} (+-1)^k / k^s` exactly.
pub fn reciprocal_power_sum_exact(lo: u64, hi: u64, s: u32, alternating: bool) -> BigRational {
    let mut acc = BigRational::zero();
    for k in lo.max(1)..=hi {
        let mut t = BigRational::new(BigInt::one(), BigInt::from(k).pow(s));
        if alternating && k % 2 == 1 {
            t = -t;
        }
        acc += t;
    }
    acc
}

fn max_valuation(hi: u64, p: u64) -> i64 {
    let mut v = 0;
    let mut q = p;
    while q <= hi {
        v += 1;
        match q.checked_mul(p) {
            Some(n) => q = n,
            None => break,
        }
    }
    v
}

/// `sum_{k=lo}^{hi} (+-1)^k / k^s` as a tracked p-adic value with absolute
/// precision at least `abs`.
pub fn reciprocal_power_sum(
    p: u64,
    lo: u64,
    hi: u64,
    s: u32,
    alternating: bool,
    abs: i64,
) -> PadicTracked {
    let lo = lo.max(1);
    if lo > hi {
        return PadicTracked::exact_zero(p);
    }
    let vmax = s as i64 * max_valuation(hi, p);
    let width = abs + vmax;
    if width <= 0 {
        return PadicTracked::zero_to(p, abs);
    }
    let width = width as u32;
    let small = (p as f64).log2() * width as f64 <= 62.0;
    if small {
        let m = p.pow(width);
        let mut acc = 0u64;
        for k in lo..=hi {
            let (v, u) = split_valuation_u64(k, p);
            let shift = vmax - s as i64 * v;
            if shift >= width as i64 {
                continue;
            }
            let inv = pow_mod(inv_mod_u64(u % m, m).expect("unit"), s as u64, m);
            let mut t = mul_mod(inv, p.pow(shift as u32), m);
            if alternating && k % 2 == 1 {
                t = (m - t) % m;
            }
            acc = (acc + t) % m;
        }
        PadicTracked::from_parts(p, -vmax, BigUint::from(acc), width)
    } else {
        let m = ppow(p, width);
        let mut acc = BigUint::zero();
        for k in lo..=hi {
            let (v, u) = split_valuation_u64(k, p);
            let shift = vmax - s as i64 * v;
            if shift >= width as i64 {
                continue;
            }
            let inv = inv_mod(&BigUint::from(u), &m)
                .expect("unit")
                .modpow(&BigUint::from(s), &m);
            let mut t = inv * ppow(p, shift as u32) % &m;
            if alternating && k % 2 == 1 {
                t = (&m - t) % &m;
            }
            acc = (acc + t) % &m;
        }
        PadicTracked::from_parts(p, -vmax, acc, width)
    }
}

/// `H_n` with absolute precision at least `m`; `H_0` is the exact zero.
pub fn harmonic_padic(n: u64, p: u64, m: i64) -> PadicTracked {
    reciprocal_power_sum(p, 1, n, 1, false, m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{reduce_rational, PrimePower};

    #[test]
    fn examples() {
        let h1 = harmonic_padic(1, 5, 3);
        assert_eq!(h1.residue(3).unwrap(), BigUint::one());
        assert!(harmonic_padic(0, 5, 3).is_exact_zero());
        let h4 = harmonic_padic(4, 5, 4);
        assert_eq!(h4.valuation(), Some(2));
        assert_eq!(harmonic_exact(4), BigRational::new(25.into(), 12.into()));
        assert_eq!(
            harmonic_padic(3, 7, 2).residue(2).unwrap(),
            BigUint::from(10u32)
        );
    }

    #[test]
    fn matches_exact_reduction() {
        for p in [3u64, 5, 7, 11] {
            for (s, alt) in [(1, false), (2, false), (2, true), (3, false)] {
                let mut exact = BigRational::zero();
                for n in 0..(p * p + 2 * p) {
                    if n > 0 {
                        let t = BigRational::new(BigInt::one(), BigInt::from(n).pow(s));
                        exact += if alt && n % 2 == 1 { -t } else { t };
                    }
                    let tracked = reciprocal_power_sum(p, 1, n, s, alt, 4);
                    assert!(tracked.abs_precision() >= 4);
                    if exact.is_zero() {
                        assert!(tracked.is_zero_marker());
                    } else {
                        let direct = PadicTracked::from_rational_abs(&exact, p, 4);
                        assert_eq!(tracked.truncate(4), direct, "p={p} n={n} s={s}");
                    }
                }
            }
        }
    }

    #[test]
    fn wide_modulus_path() {
        // p^width exceeds 2^62, forcing the big-integer branch.
        let p = 101;
        let exact = harmonic_exact(p - 1);
        let tracked = harmonic_padic(p - 1, p, 12);
        let ctx = PrimePower::new(p, 12).unwrap();
        assert_eq!(
            &tracked.residue(12).unwrap(),
            reduce_rational(&exact, &ctx).unwrap().value()
        );
    }
}
