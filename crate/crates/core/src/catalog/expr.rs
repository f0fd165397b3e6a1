//! Expression trees for both sides of a congruence.

use std::fmt;
use std::ops;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed};

use crate::sums::SumSpec;

pub type ExactFn = Arc<dyn Fn(u64, u32) -> BigRational + Send + Sync>;
pub type FormFn = Arc<dyn Fn(i64, i64, u64) -> BigRational + Send + Sync>;

/// Per-prime special values taken from the special-value cache.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Special {
    EulerP3,
    BernoulliP3,
    BernoulliP5,
    FermatQ2,
    BernoulliPolyThird,
    EulerPolyQuarter,
}

impl fmt::Display for Special {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Special::EulerP3 => "E_{p-3}",
            Special::BernoulliP3 => "B_{p-3}",
            Special::BernoulliP5 => "B_{p-5}",
            Special::FermatQ2 => "q_p(2)",
            Special::BernoulliPolyThird => "B_{p-2}(1/3)",
            Special::EulerPolyQuarter => "E_{p-3}(1/4)",
        };
        f.write_str(s)
    }
}

/// Upper limit of a reciprocal power sum, in terms of `p` (not `p^a`).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Upto {
    PMinusOne,
    HalfP,
    QuarterP,
}

impl Upto {
    pub fn at(self, p: u64) -> u64 {
        match self {
            Upto::PMinusOne => p - 1,
            Upto::HalfP => (p - 1) / 2,
            Upto::QuarterP => p / 4,
        }
    }
}

#[derive(Clone)]
pub enum Expr {
    Const(BigRational),
    /// `p^j`.
    PPow(i64),
    /// `p^{a j}`.
    QPow(i64),
    /// A rational depending only on `(p, a)`.
    Exact {
        name: String,
        f: ExactFn,
    },
    /// A rational depending on the quadratic form solution `(x, y)` and `p`.
    Form {
        name: String,
        f: FormFn,
    },
    Special(Special),
    /// `sum_{k=1}^{hi} (+-1)^k / k^s`.
    RecipSum {
        hi: Upto,
        s: u32,
        alternating: bool,
    },
    Sum(Box<SumSpec>),
    Add(Vec<Expr>),
    Neg(Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    /// The divisor must evaluate exactly.
    Div(Box<Expr>, Box<Expr>),
}

impl Expr {
    pub fn uses(&self, s: Special) -> bool {
        match self {
            Expr::Special(t) => *t == s,
            Expr::Add(v) => v.iter().any(|e| e.uses(s)),
            Expr::Neg(e) => e.uses(s),
            Expr::Mul(a, b) | Expr::Div(a, b) => a.uses(s) || b.uses(s),
            _ => false,
        }
    }

    pub fn uses_form(&self) -> bool {
        match self {
            Expr::Form { .. } => true,
            Expr::Add(v) => v.iter().any(Expr::uses_form),
            Expr::Neg(e) => e.uses_form(),
            Expr::Mul(a, b) | Expr::Div(a, b) => a.uses_form() || b.uses_form(),
            _ => false,
        }
    }

    /// The sums appearing in the expression.
    pub fn sums(&self) -> Vec<&SumSpec> {
        let mut out = Vec::new();
        self.collect_sums(&mut out);
        out
    }

    fn collect_sums<'a>(&'a self, out: &mut Vec<&'a SumSpec>) {
        match self {
            Expr::Sum(s) => out.push(s),
            Expr::Add(v) => v.iter().for_each(|e| e.collect_sums(out)),
            Expr::Neg(e) => e.collect_sums(out),
            Expr::Mul(a, b) | Expr::Div(a, b) => {
                a.collect_sums(out);
                b.collect_sums(out);
            }
            _ => {}
        }
    }

    fn precedence(&self) -> u8 {
        match self {
            Expr::Add(_) => 1,
            Expr::Neg(_) | Expr::Sum(_) | Expr::RecipSum { .. } => 2,
            Expr::Mul(..) | Expr::Div(..) => 3,
            Expr::Const(q) if !q.is_integer() || q.is_negative() => 2,
            _ => 4,
        }
    }
}

pub fn int(n: i64) -> Expr {
    Expr::Const(BigRational::from_integer(BigInt::from(n)))
}

pub fn frac(n: i64, d: i64) -> Expr {
    Expr::Const(BigRational::new(BigInt::from(n), BigInt::from(d)))
}

pub fn zero() -> Expr {
    int(0)
}

/// `p^j`.
pub fn pp(j: i64) -> Expr {
    Expr::PPow(j)
}

/// `p^{a j}`.
pub fn qq(j: i64) -> Expr {
    Expr::QPow(j)
}

pub fn sum(spec: SumSpec) -> Expr {
    Expr::Sum(Box::new(spec))
}

pub fn special(s: Special) -> Expr {
    Expr::Special(s)
}

pub fn exact(
    name: impl Into<String>,
    f: impl Fn(u64, u32) -> BigRational + Send + Sync + 'static,
) -> Expr {
    Expr::Exact {
        name: name.into(),
        f: Arc::new(f),
    }
}

pub fn form(
    name: impl Into<String>,
    f: impl Fn(i64, i64, u64) -> BigRational + Send + Sync + 'static,
) -> Expr {
    Expr::Form {
        name: name.into(),
        f: Arc::new(f),
    }
}

pub fn recip(hi: Upto, s: u32, alternating: bool) -> Expr {
    Expr::RecipSum { hi, s, alternating }
}

impl ops::Add for Expr {
    type Output = Expr;
    fn add(self, rhs: Expr) -> Expr {
        let mut terms = match self {
            Expr::Add(v) => v,
            e => vec![e],
        };
        match rhs {
            Expr::Add(v) => terms.extend(v),
            e => terms.push(e),
        }
        Expr::Add(terms)
    }
}

impl ops::Sub for Expr {
    type Output = Expr;
    fn sub(self, rhs: Expr) -> Expr {
        self + (-rhs)
    }
}

impl ops::Neg for Expr {
    type Output = Expr;
    fn neg(self) -> Expr {
        match self {
            Expr::Neg(e) => *e,
            Expr::Const(q) => Expr::Const(-q),
            e => Expr::Neg(Box::new(e)),
        }
    }
}

impl ops::Mul for Expr {
    type Output = Expr;
    fn mul(self, rhs: Expr) -> Expr {
        Expr::Mul(Box::new(self), Box::new(rhs))
    }
}

impl ops::Div for Expr {
    type Output = Expr;
    fn div(self, rhs: Expr) -> Expr {
        Expr::Div(Box::new(self), Box::new(rhs))
    }
}

impl ops::Mul<Expr> for i64 {
    type Output = Expr;
    fn mul(self, rhs: Expr) -> Expr {
        int(self) * rhs
    }
}

fn write_child(f: &mut fmt::Formatter<'_>, e: &Expr, min: u8) -> fmt::Result {
    if e.precedence() < min {
        write!(f, "({e})")
    } else {
        write!(f, "{e}")
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Const(q) => write!(f, "{q}"),
            Expr::PPow(1) => write!(f, "p"),
            Expr::PPow(j) => write!(f, "p^{j}"),
            Expr::QPow(1) => write!(f, "p^a"),
            Expr::QPow(j) => write!(f, "p^({j}a)"),
            Expr::Exact { name, .. } | Expr::Form { name, .. } => f.write_str(name),
            Expr::Special(s) => write!(f, "{s}"),
            Expr::RecipSum { hi, s, alternating } => {
                let hi = match hi {
                    Upto::PMinusOne => "p-1",
                    Upto::HalfP => "(p-1)/2",
                    Upto::QuarterP => "floor(p/4)",
                };
                let sign = if *alternating { "(-1)^k" } else { "1" };
                if *s == 1 {
                    write!(f, "sum_{{k=1..{hi}}} {sign}/k")
                } else {
                    write!(f, "sum_{{k=1..{hi}}} {sign}/k^{s}")
                }
            }
            Expr::Sum(s) => write!(f, "{s}"),
            Expr::Add(v) => {
                if v.is_empty() {
                    return write!(f, "0");
                }
                for (i, e) in v.iter().enumerate() {
                    match (i, e) {
                        (0, _) => write_child(f, e, 2)?,
                        (_, Expr::Neg(inner)) => {
                            write!(f, " - ")?;
                            write_child(f, inner, 3)?;
                        }
                        (_, Expr::Const(q)) if q.is_negative() => write!(f, " - {}", -q)?,
                        _ => {
                            write!(f, " + ")?;
                            write_child(f, e, 2)?;
                        }
                    }
                }
                Ok(())
            }
            Expr::Neg(e) => {
                write!(f, "-")?;
                write_child(f, e, 3)
            }
            Expr::Mul(a, b) => {
                if let Expr::Const(q) = a.as_ref() {
                    if q.is_one() {
                        return write!(f, "{b}");
                    }
                    if (-q).is_one() {
                        write!(f, "-")?;
                        return write_child(f, b, 3);
                    }
                }
                write_child(f, a, 3)?;
                write!(f, "*")?;
                write_child(f, b, 4)
            }
            Expr::Div(a, b) => {
                write_child(f, a, 3)?;
                write!(f, "/")?;
                write_child(f, b, 4)
            }
        }
    }
}

impl fmt::Debug for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
