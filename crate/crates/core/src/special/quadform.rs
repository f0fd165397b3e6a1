//! Representations `scale * p = lead * x^2 + d * y^2` by brute-force search.
//!
//! Side conditions are plain data. A candidate `(|x|, |y|)` is accepted when
//! some independent choice of signs for `x` and `y` satisfies every condition.

use std::fmt;

use crate::arith::{isqrt, jacobi};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    XOdd,
    XEven,
    YEven,
    YOdd,
    /// `x == r (mod m)`.
    XMod {
        m: i64,
        r: i64,
    },
    /// `y == r (mod m)`.
    YMod {
        m: i64,
        r: i64,
    },
    XPos,
    YPos,
    /// `m` does not divide `x`.
    XNotDiv(i64),
    /// `m` divides `y`.
    YDiv(i64),
    /// Jacobi symbol `(x / m) = val` for odd `m`.
    XJacobi {
        m: u64,
        val: i8,
    },
    /// `m` divides `x + y`.
    XPlusYDiv(i64),
}

impl Side {
    pub fn holds(&self, x: i64, y: i64) -> bool {
        match *self {
            Side::XOdd => x.rem_euclid(2) == 1,
            Side::XEven => x.rem_euclid(2) == 0,
            Side::YEven => y.rem_euclid(2) == 0,
            Side::YOdd => y.rem_euclid(2) == 1,
            Side::XMod { m, r } => x.rem_euclid(m) == r.rem_euclid(m),
            Side::YMod { m, r } => y.rem_euclid(m) == r.rem_euclid(m),
            Side::XPos => x > 0,
            Side::YPos => y > 0,
            Side::XNotDiv(m) => x.rem_euclid(m) != 0,
            Side::YDiv(m) => y.rem_euclid(m) == 0,
            Side::XJacobi { m, val } => jacobi(x, m) == val,
            Side::XPlusYDiv(m) => (x + y).rem_euclid(m) == 0,
        }
    }

    /// Whether the condition can tell `x` from `-x`.
    fn sees_x_sign(&self) -> bool {
        matches!(
            self,
            Side::XMod { .. } | Side::XPos | Side::XJacobi { .. } | Side::XPlusYDiv(_)
        )
    }

    fn sees_y_sign(&self) -> bool {
        matches!(self, Side::YMod { .. } | Side::YPos | Side::XPlusYDiv(_))
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Side::XOdd => write!(f, "x odd"),
            Side::XEven => write!(f, "x even"),
            Side::YEven => write!(f, "y even"),
            Side::YOdd => write!(f, "y odd"),
            Side::XMod { m, r } => write!(f, "x = {r} (mod {m})"),
            Side::YMod { m, r } => write!(f, "y = {r} (mod {m})"),
            Side::XPos => write!(f, "x > 0"),
            Side::YPos => write!(f, "y > 0"),
            Side::XNotDiv(m) => write!(f, "{m} does not divide x"),
            Side::YDiv(m) => write!(f, "{m} divides y"),
            Side::XJacobi { m, val } => write!(f, "(x/{m}) = {val}"),
            Side::XPlusYDiv(m) => write!(f, "{m} divides x + y"),
        }
    }
}

/// A form request: `scale * p = lead * x^2 + d * y^2` under `side`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormRequest {
    pub lead: u64,
    pub d: u64,
    pub scale: u64,
    pub side: Vec<Side>,
}

impl FormRequest {
    pub fn new(lead: u64, d: u64, scale: u64, side: &[Side]) -> Self {
        Self {
            lead,
            d,
            scale,
            side: side.to_vec(),
        }
    }

    pub fn describe(&self) -> String {
        let lhs = if self.scale == 1 {
            "p".to_string()
        } else {
            format!("{}p", self.scale)
        };
        let x = if self.lead == 1 {
            "x^2".to_string()
        } else {
            format!("{}x^2", self.lead)
        };
        let conds: Vec<String> = self.side.iter().map(|s| s.to_string()).collect();
        if conds.is_empty() {
            format!("{lhs} = {x} + {}y^2", self.d)
        } else {
            format!("{lhs} = {x} + {}y^2, {}", self.d, conds.join(", "))
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadFormRep {
    pub lead: u64,
    pub d: u64,
    pub scale: u64,
    pub x: i64,
    pub y: i64,
    pub side: Vec<Side>,
}

/// Every nonnegative `(x, y)` with `scale * p = lead * x^2 + d * y^2`.
pub fn raw_solutions(p: u64, lead: u64, d: u64, scale: u64) -> Vec<(i64, i64)> {
    let n = scale as u128 * p as u128;
    let mut out = Vec::new();
    let ymax = isqrt((n / d as u128) as u64);
    for y in 0..=ymax {
        let rest = n - d as u128 * (y as u128) * (y as u128);
        if !rest.is_multiple_of(lead as u128) {
            continue;
        }
        let xx = (rest / lead as u128) as u64;
        let x = isqrt(xx);
        if x * x == xx {
            out.push((x as i64, y as i64));
        }
    }
    out
}

/// All sign-adjusted solutions satisfying the side conditions. Signs that the
/// conditions cannot see are kept positive, so each `(|x|, |y|)` yields every
/// distinguishable admissible sign pattern once.
pub fn candidates(p: u64, req: &FormRequest) -> Vec<QuadFormRep> {
    let x_free = !req.side.iter().any(Side::sees_x_sign);
    let y_free = !req.side.iter().any(Side::sees_y_sign);
    let mut out = Vec::new();
    for (ax, ay) in raw_solutions(p, req.lead, req.d, req.scale) {
        let xs: Vec<i64> = if x_free || ax == 0 {
            vec![ax]
        } else {
            vec![ax, -ax]
        };
        let ys: Vec<i64> = if y_free || ay == 0 {
            vec![ay]
        } else {
            vec![ay, -ay]
        };
        for &x in &xs {
            for &y in &ys {
                if req.side.iter().all(|s| s.holds(x, y)) {
                    out.push(QuadFormRep {
                        lead: req.lead,
                        d: req.d,
                        scale: req.scale,
                        x,
                        y,
                        side: req.side.clone(),
                    });
                }
            }
        }
    }
    out
}

/// The representation under `side`, or `None` if there is none.
///
/// Fails with [`Error::AmbiguousForm`] when two different `(|x|, |y|)` pairs
/// both satisfy the conditions. When only unconstrained signs differ, the
/// first admissible sign pattern (positive before negative) is returned.
pub fn represent(p: u64, req: &FormRequest) -> Result<Option<QuadFormRep>> {
    let all = candidates(p, req);
    let mut pairs: Vec<(i64, i64)> = all.iter().map(|r| (r.x.abs(), r.y.abs())).collect();
    pairs.dedup();
    if pairs.len() > 1 {
        return Err(Error::AmbiguousForm {
            p,
            candidates: format!("{pairs:?}"),
        });
    }
    Ok(all.into_iter().next())
}

/// `represent` for the standard shape `scale * p = x^2 + d * y^2`.
pub fn represent_form(p: u64, d: u64, scale: u64, side: &[Side]) -> Result<Option<QuadFormRep>> {
    represent(p, &FormRequest::new(1, d, scale, side))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::sieve_primes;

    #[test]
    fn examples() {
        let r = represent_form(11, 7, 1, &[Side::XPos, Side::YPos])
            .unwrap()
            .unwrap();
        assert_eq!((r.x, r.y), (2, 1));
        let r = represent_form(
            13,
            1,
            1,
            &[Side::XMod { m: 4, r: 1 }, Side::YEven, Side::YPos],
        )
        .unwrap()
        .unwrap();
        assert_eq!((r.x, r.y), (-3, 2));
        let r = represent_form(31, 27, 4, &[Side::XMod { m: 3, r: 2 }])
            .unwrap()
            .unwrap();
        assert_eq!((r.x, r.y), (-4, 2));
        assert!(represent_form(7, 1, 1, &[]).unwrap().is_none());
    }

    #[test]
    fn ambiguity_is_reported() {
        // 52 = 6^2 + 4^2 = 4^2 + 6^2 with no parity condition to separate them.
        let err = represent_form(13, 1, 4, &[]).unwrap_err();
        assert!(matches!(err, Error::AmbiguousForm { p: 13, .. }));
    }

    #[test]
    fn uniqueness_for_classical_forms() {
        for p in sieve_primes(5, 3000) {
            if p % 4 == 1 {
                let r = represent_form(p, 1, 1, &[Side::XOdd, Side::XPos, Side::YPos])
                    .unwrap()
                    .unwrap();
                assert_eq!(r.x * r.x + r.y * r.y, p as i64);
            }
            if p % 3 == 1 {
                let r = represent_form(p, 3, 1, &[Side::XPos, Side::YPos])
                    .unwrap()
                    .unwrap();
                assert_eq!(r.x * r.x + 3 * r.y * r.y, p as i64);
                let r = represent_form(p, 27, 4, &[Side::XMod { m: 3, r: 1 }])
                    .unwrap()
                    .unwrap();
                assert_eq!(r.x * r.x + 27 * r.y * r.y, 4 * p as i64);
            }
            if p % 3 == 2 {
                assert!(represent_form(p, 3, 1, &[]).unwrap().is_none());
            }
        }
    }

    #[test]
    fn leading_coefficient_forms() {
        for p in sieve_primes(7, 500) {
            for (x, y) in raw_solutions(p, 3, 5, 1) {
                assert_eq!(3 * x * x + 5 * y * y, p as i64);
            }
        }
        assert_eq!(raw_solutions(23, 3, 5, 1), vec![(1, 2)]);
    }
}
