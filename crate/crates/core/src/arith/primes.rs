//! Prime generation and deterministic primality.

/// Segment width for [`sieve_primes`]; one segment fits comfortably in L2.
const SEGMENT: u64 = 1 << 16;

/// All primes in `[lo, hi]`, ascending.
///
/// Uses a segmented sieve of Eratosthenes so that memory stays bounded by the
/// segment width plus the base primes up to `sqrt(hi)`.
pub fn sieve_primes(lo: u64, hi: u64) -> Vec<u64> {
    let lo = lo.max(2);
    if lo > hi {
        return Vec::new();
    }
    let root = isqrt(hi);
    let base = simple_sieve(root);

    let mut out = Vec::new();
    let mut start = lo;
    while start <= hi {
        let end = hi.min(start.saturating_add(SEGMENT - 1));
        let mut composite = vec![false; (end - start + 1) as usize];
        for &q in &base {
            if q * q > end {
                break;
            }
            let first = (q * q).max(start.div_ceil(q) * q);
            let mut m = first;
            while m <= end {
                composite[(m - start) as usize] = true;
                m += q;
            }
        }
        out.extend(
            composite
                .iter()
                .enumerate()
                .filter(|(_, &c)| !c)
                .map(|(i, _)| start + i as u64),
        );
        if end == u64::MAX {
            break;
        }
        start = end + 1;
    }
    out
}

fn simple_sieve(n: u64) -> Vec<u64> {
    if n < 2 {
        return Vec::new();
    }
    let n = n as usize;
    let mut is = vec![true; n + 1];
    is[0] = false;
    is[1] = false;
    let mut i = 2;
    while i * i <= n {
        if is[i] {
            let mut j = i * i;
            while j <= n {
                is[j] = false;
                j += i;
            }
        }
        i += 1;
    }
    is.iter()
        .enumerate()
        .filter(|(_, &b)| b)
        .map(|(i, _)| i as u64)
        .collect()
}

/// Floor of the square root.
pub fn isqrt(n: u64) -> u64 {
    if n < 2 {
        return n;
    }
    let mut x = (n as f64).sqrt() as u64;
    while x.checked_mul(x).is_none_or(|sq| sq > n) {
        x -= 1;
    }
    while (x + 1).checked_mul(x + 1).is_some_and(|sq| sq <= n) {
        x += 1;
    }
    x
}

pub(crate) fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub(crate) fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut r = 1 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, b, m);
        }
        b = mul_mod(b, b, m);
        e >>= 1;
    }
    r
}

/// Inverse of `a` modulo `m`, if it exists.
pub(crate) fn inv_mod_u64(a: u64, m: u64) -> Option<u64> {
    let (mut r0, mut r1) = (m as i128, (a % m) as i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    if r0 != 1 {
        return None;
    }
    Some(t0.rem_euclid(m as i128) as u64)
}

/// Deterministic Miller–Rabin; the first twelve prime bases are a proven
/// witness set for every `n < 3.3 * 10^24`, so all of `u64` is covered.
pub fn is_prime(n: u64) -> bool {
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    if n < 2 {
        return false;
    }
    for &b in &BASES {
        if n.is_multiple_of(b) {
            return n == b;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for &a in &BASES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// `p`-adic valuation of `n!` by Legendre's formula.
pub fn factorial_valuation(n: u64, p: u64) -> u64 {
    let mut v = 0;
    let mut q = n / p;
    while q > 0 {
        v += q;
        q /= p;
    }
    v
}

#[cfg(test)]
mod tests {
    use super::*;

    fn trial_division(n: u64) -> bool {
        n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
    }

    #[test]
    fn small_ranges() {
        assert_eq!(sieve_primes(2, 10), vec![2, 3, 5, 7]);
        assert_eq!(sieve_primes(140, 150), vec![149]);
        assert!(sieve_primes(24, 28).is_empty());
        assert!(sieve_primes(10, 5).is_empty());
    }

    #[test]
    fn sieve_matches_trial_division_across_segments() {
        let lo = 60_000;
        let hi = 140_000;
        let expected: Vec<u64> = (lo..=hi).filter(|&n| trial_division(n)).collect();
        assert_eq!(sieve_primes(lo, hi), expected);
    }

    #[test]
    fn miller_rabin_agrees_with_trial_division() {
        for n in 0..20_000 {
            assert_eq!(is_prime(n), trial_division(n), "n = {n}");
        }
        // Strong pseudoprimes to several small bases.
        for n in [
            3_215_031_751u64,
            2_152_302_898_747,
            3_474_749_660_383,
            341_550_071_728_321,
        ] {
            assert!(!is_prime(n));
        }
        assert!(is_prime(18_446_744_073_709_551_557));
    }

    #[test]
    fn legendre_formula_matches_factorization() {
        for p in [2u64, 3, 5, 7, 11, 13] {
            let mut direct = 0;
            for n in 1..=2000u64 {
                let mut m = n;
                while m % p == 0 {
                    direct += 1;
                    m /= p;
                }
                assert_eq!(factorial_valuation(n, p), direct, "n = {n}, p = {p}");
            }
        }
    }

    #[test]
    fn small_inverses() {
        assert_eq!(inv_mod_u64(8, 125), Some(47));
        assert_eq!(inv_mod_u64(10, 125), None);
        for a in 1..343u64 {
            if a % 7 != 0 {
                assert_eq!(mul_mod(a, inv_mod_u64(a, 343).unwrap(), 343), 1);
            }
        }
    }

    #[test]
    fn isqrt_edges() {
        for n in 0..10_000u64 {
            let r = isqrt(n);
            assert!(r * r <= n && (r + 1) * (r + 1) > n);
        }
        assert_eq!(isqrt(u64::MAX), 4_294_967_295);
    }
}
