//! Named exact atoms: Jacobi symbols, signs, and closed binomials in `p`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use super::expr::{exact, form, Expr};
use crate::arith::jacobi;

fn unit(s: i8) -> BigRational {
    BigRational::from_integer(BigInt::from(s))
}

fn q_of(p: u64, e: u32) -> u64 {
    p.checked_pow(e).expect("p^a fits in u64")
}

/// `(c / p^a)`.
pub fn jac(c: i64) -> Expr {
    exact(format!("({c}/p^a)"), move |p, a| {
        unit(jacobi(c, q_of(p, a)))
    })
}

/// `(c / p^{a-1})`, which is `1` at `a = 1`.
pub fn jac_prev(c: i64) -> Expr {
    exact(format!("({c}/p^(a-1))"), move |p, a| {
        unit(jacobi(c, q_of(p, a - 1)))
    })
}

/// `(c / p)`.
pub fn jac_p(c: i64) -> Expr {
    exact(format!("({c}/p)"), move |p, _| unit(jacobi(c, p)))
}

/// `(p / m)` for odd `m`.
pub fn p_over(m: u64) -> Expr {
    exact(format!("(p/{m})"), move |p, _| unit(jacobi(p as i64, m)))
}

/// `(p^a / 3)`.
pub fn q_over3() -> Expr {
    exact("(p^a/3)", |p, a| unit(jacobi(q_of(p, a) as i64, 3)))
}

/// `(p^{a-1} / 3)`.
pub fn q_prev_over3() -> Expr {
    exact("(p^(a-1)/3)", |p, a| unit(jacobi(q_of(p, a - 1) as i64, 3)))
}

/// `(-1)^{(p-1)/2}`.
pub fn sign_half() -> Expr {
    exact("(-1)^((p-1)/2)", |p, _| {
        unit(if (p - 1) / 2 % 2 == 0 { 1 } else { -1 })
    })
}

/// `(-1)^{(p+1)/2}`.
pub fn sign_half_plus() -> Expr {
    exact("(-1)^((p+1)/2)", |p, _| {
        unit(if p.div_ceil(2) % 2 == 0 { 1 } else { -1 })
    })
}

/// `(-1)^{(p-3)/4}` for `p == 3 (mod 4)`.
pub fn sign_quarter_minus() -> Expr {
    exact("(-1)^((p-3)/4)", |p, _| {
        unit(if (p - 3) / 4 % 2 == 0 { 1 } else { -1 })
    })
}

/// `(-1)^{(p+1)/4}` for `p == 3 (mod 4)`.
pub fn sign_quarter_plus() -> Expr {
    exact("(-1)^((p+1)/4)", |p, _| {
        unit(if (p + 1) / 4 % 2 == 0 { 1 } else { -1 })
    })
}

/// `(-1)^{floor((p+5)/8)}`.
pub fn sign_eighth() -> Expr {
    exact("(-1)^floor((p+5)/8)", |p, _| {
        unit(if (p + 5) / 8 % 2 == 0 { 1 } else { -1 })
    })
}

/// `b^{p + off}`.
pub fn pow_p(b: i64, off: i64) -> Expr {
    let name = match off {
        0 => format!("{b}^p"),
        o if o > 0 => format!("{b}^(p+{o})"),
        o => format!("{b}^(p{o})"),
    };
    exact(name, move |p, _| {
        let e = (p as i64 + off) as u32;
        BigRational::from_integer(BigInt::from(b).pow(e))
    })
}

pub(crate) fn binom_int(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::from(0);
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for j in 0..k {
        acc = acc * (n - j) / (j + 1);
    }
    acc
}

/// `binom(2(p-d)/3, (p-d)/3)` with `d` in `{1, -1}` chosen so that `3 | p - d`.
pub fn binom_third(d: i64) -> Expr {
    let name = if d == 1 {
        "binom(2(p-1)/3,(p-1)/3)"
    } else {
        "binom(2(p+1)/3,(p+1)/3)"
    };
    exact(name, move |p, _| {
        let n = ((p as i64 - d) / 3) as u64;
        BigRational::from_integer(binom_int(2 * n, n))
    })
}

/// `binom(2(p - (p/3))/3, (p - (p/3))/3)`.
pub fn binom_third_auto() -> Expr {
    exact("binom(2(p-(p/3))/3,(p-(p/3))/3)", |p, _| {
        let d = jacobi(p as i64, 3) as i64;
        let n = ((p as i64 - d) / 3) as u64;
        BigRational::from_integer(binom_int(2 * n, n))
    })
}

/// `binom((p+1)/2, (p+1)/r)`.
pub fn binom_half_over(r: u64) -> Expr {
    exact(format!("binom((p+1)/2,(p+1)/{r})"), move |p, _| {
        BigRational::from_integer(binom_int(p.div_ceil(2), (p + 1) / r))
    })
}

fn form_q(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// `c1 x^2 + c0 p`.
pub fn fx2(c1: i64, c0: i64) -> Expr {
    form(format!("{c1}x^2 + {c0}p"), move |x, _, p| {
        form_q(c1 * x * x + c0 * p as i64)
    })
}

/// `2z - p/(2z)` with `z = x`.
pub fn two_x_minus() -> Expr {
    form("(2x - p/(2x))", |x, _, p| {
        form_q(2 * x) - BigRational::new(BigInt::from(p), BigInt::from(2 * x))
    })
}

/// `2y - p/(2y)`.
pub fn two_y_minus() -> Expr {
    form("(2y - p/(2y))", |_, y, p| {
        form_q(2 * y) - BigRational::new(BigInt::from(p), BigInt::from(2 * y))
    })
}

/// `4y - p/(3y)`.
pub fn four_y_minus() -> Expr {
    form("(4y - p/(3y))", |_, y, p| {
        form_q(4 * y) - BigRational::new(BigInt::from(p), BigInt::from(3 * y))
    })
}

pub fn fx() -> Expr {
    form("x", |x, _, _| form_q(x))
}

pub fn fy() -> Expr {
    form("y", |_, y, _| form_q(y))
}

pub fn fxy() -> Expr {
    form("xy", |x, y, _| form_q(x * y))
}

/// `(xy / 3)`.
pub fn fxy_over3() -> Expr {
    form("(xy/3)", |x, y, _| form_q(jacobi(x * y, 3) as i64))
}

/// `(-1)^{floor(x/6)}`.
pub fn fsign_x6() -> Expr {
    form("(-1)^floor(x/6)", |x, _, _| {
        form_q(if x.div_euclid(6) % 2 == 0 { 1 } else { -1 })
    })
}

/// Jacobi-symbol predicate on `p` for applicability conditions.
pub fn legendre(a: i64, p: u64) -> i8 {
    jacobi(a, p)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomials() {
        assert_eq!(binom_int(10, 5), BigInt::from(252));
        assert_eq!(binom_int(3, 5), BigInt::from(0));
        assert_eq!(binom_int(0, 0), BigInt::from(1));
    }

    #[test]
    fn floor_sign() {
        let Expr::Form { f, .. } = fsign_x6() else {
            unreachable!()
        };
        assert_eq!(f(-3, 0, 13), form_q(-1));
        assert_eq!(f(5, 0, 13), form_q(1));
        assert_eq!(f(13, 0, 13), form_q(1));
        assert_eq!(f(6, 0, 13), form_q(-1));
    }
}
