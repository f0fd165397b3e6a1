use std::fmt;
use std::sync::Arc;

use serde::Serialize;

use super::expr::Expr;
use crate::special::FormRequest;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Theorem,
    Conjecture,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Theorem => "theorem",
            Status::Conjecture => "conjecture",
        })
    }
}

/// A named predicate on `(p, a)`.
#[derive(Clone)]
pub struct Applicability {
    pub desc: String,
    pub f: Arc<dyn Fn(u64, u32) -> bool + Send + Sync>,
}

impl Applicability {
    pub fn new(
        desc: impl Into<String>,
        f: impl Fn(u64, u32) -> bool + Send + Sync + 'static,
    ) -> Self {
        Self {
            desc: desc.into(),
            f: Arc::new(f),
        }
    }

    pub fn holds(&self, p: u64, a: u32) -> bool {
        (self.f)(p, a)
    }

    pub fn and(self, other: Applicability) -> Self {
        let (f, g) = (self.f, other.f);
        Self {
            desc: format!("{}, {}", self.desc, other.desc),
            f: Arc::new(move |p, a| f(p, a) && g(p, a)),
        }
    }
}

impl fmt::Debug for Applicability {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.desc)
    }
}

/// The exponent `e` of the modulus `p^e`, as a function of `(p, a)`.
#[derive(Clone)]
pub struct ModExp {
    pub desc: String,
    pub f: Arc<dyn Fn(u64, u32) -> i64 + Send + Sync>,
}

impl ModExp {
    pub fn new(
        desc: impl Into<String>,
        f: impl Fn(u64, u32) -> i64 + Send + Sync + 'static,
    ) -> Self {
        Self {
            desc: desc.into(),
            f: Arc::new(f),
        }
    }

    pub fn constant(e: i64) -> Self {
        Self::new(e.to_string(), move |_, _| e)
    }

    pub fn at(&self, p: u64, a: u32) -> i64 {
        (self.f)(p, a)
    }
}

impl fmt::Debug for ModExp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.desc)
    }
}

/// One catalog entry: `lhs == rhs (mod p^modExp)` for admissible `(p, a)`.
#[derive(Clone, Debug)]
pub struct CongruenceSpec {
    pub id: String,
    pub status: Status,
    /// Whether the entry is stated for every `a >= 1` rather than `a = 1`.
    pub multi_a: bool,
    pub applicability: Applicability,
    pub lhs: Expr,
    pub rhs: Expr,
    pub mod_exp: ModExp,
    /// Quadratic form supplying the `x`, `y` atoms.
    pub form: Option<FormRequest>,
}

impl CongruenceSpec {
    pub fn is_applicable(&self, p: u64, a: u32) -> bool {
        p % 2 == 1 && a >= 1 && (a == 1 || self.multi_a) && self.applicability.holds(p, a)
    }

    /// Human-readable statement.
    pub fn statement(&self) -> String {
        let mut s = format!("{} == {} (mod p^{})", self.lhs, self.rhs, self.mod_exp.desc);
        if let Some(req) = &self.form {
            s.push_str(&format!(", where {}", req.describe()));
        }
        s
    }
}

impl From<i64> for ModExp {
    fn from(e: i64) -> Self {
        ModExp::constant(e)
    }
}
