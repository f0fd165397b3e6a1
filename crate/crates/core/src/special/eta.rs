//! Coefficients of `q * prod_{n>=1} (1 - q^{4n})^6` and the Klein–Fricke
//! closed form for its prime coefficients.

use super::quadform::{represent_form, Side};

/// `a(1) ..= a(n)` (index 0 of the result is `a(1)`).
pub fn eta_coeffs(n: usize) -> Vec<i64> {
    if n == 0 {
        return Vec::new();
    }
    // Work in t = q^4; a(m) is the coefficient of t^{(m-1)/4}.
    let deg = (n - 1) / 4;
    let mut poly = vec![0i128; deg + 1];
    poly[0] = 1;
    for j in 1..=deg {
        for _ in 0..6 {
            for i in (j..=deg).rev() {
                poly[i] = poly[i]
                    .checked_sub(poly[i - j])
                    .expect("coefficient overflow");
            }
        }
    }
    (1..=n)
        .map(|m| {
            if (m - 1) % 4 == 0 {
                i64::try_from(poly[(m - 1) / 4]).expect("fits")
            } else {
                0
            }
        })
        .collect()
}

/// `4x^2 - 2p` where `p = x^2 + y^2` with `x` odd, for `p == 1 (mod 4)`; zero
/// for `p == 3 (mod 4)`.
pub fn klein_fricke(p: u64) -> i64 {
    if p % 4 == 3 {
        return 0;
    }
    let r = represent_form(p, 1, 1, &[Side::XOdd])
        .expect("unique up to sign")
        .expect("p = 1 (mod 4) is a sum of two squares");
    4 * r.x * r.x - 2 * p as i64
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::sieve_primes;

    #[test]
    fn examples() {
        let a = eta_coeffs(13);
        assert_eq!(a[0], 1);
        assert_eq!(a[4], -6);
        assert_eq!(a[12], 10);
        assert_eq!(klein_fricke(5), -6);
        assert_eq!(klein_fricke(13), 10);
    }

    #[test]
    fn matches_klein_fricke_below_200() {
        let a = eta_coeffs(200);
        for p in sieve_primes(3, 199) {
            assert_eq!(a[p as usize - 1], klein_fricke(p), "p = {p}");
        }
    }

    #[test]
    fn multiplicative_at_coprime_indices() {
        // A Hecke eigenform: a(mn) = a(m) a(n) for coprime m, n.
        let a = eta_coeffs(2000);
        for m in 1..45usize {
            for n in 1..45usize {
                if num_integer::gcd(m, n) == 1 && m * n <= 2000 {
                    assert_eq!(a[m * n - 1], a[m - 1] * a[n - 1], "m={m}, n={n}");
                }
            }
        }
    }
}
