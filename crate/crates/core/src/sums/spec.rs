//! Declarative description of binomial sums over a prime-dependent range.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;

/// `k * K + c + p * P`, where `K` is the summation index and `P` the prime.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Affine {
    pub k: i64,
    pub c: i64,
    pub p: i64,
}

impl Affine {
    pub const fn new(k: i64, c: i64) -> Self {
        Self { k, c, p: 0 }
    }

    pub fn at(&self, k: i64, p: u64) -> i64 {
        self.k * k + self.c + self.p * p as i64
    }
}

impl fmt::Display for Affine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        match self.p {
            0 => {}
            1 => parts.push("p".to_string()),
            n => parts.push(format!("{n}p")),
        }
        match self.k {
            0 => {}
            1 => parts.push("k".to_string()),
            n => parts.push(format!("{n}k")),
        }
        let mut s = parts.join("+");
        if self.c != 0 || s.is_empty() {
            if s.is_empty() {
                s = self.c.to_string();
            } else if self.c > 0 {
                s = format!("{s}+{}", self.c);
            } else {
                s = format!("{s}{}", self.c);
            }
        }
        write!(f, "{s}")
    }
}

/// A range endpoint `floor((num * p^a + off) / den)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Bound {
    pub num: i64,
    pub off: i64,
    pub den: i64,
}

impl Bound {
    pub const fn new(num: i64, off: i64, den: i64) -> Self {
        Self { num, off, den }
    }

    pub const fn constant(c: i64) -> Self {
        Self {
            num: 0,
            off: c,
            den: 1,
        }
    }

    pub fn at(&self, q: u64) -> i64 {
        (self.num as i128 * q as i128 + self.off as i128).div_euclid(self.den as i128) as i64
    }
}

impl fmt::Display for Bound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let q = match self.num {
            0 => String::new(),
            1 => "p^a".to_string(),
            n => format!("{n}p^a"),
        };
        let body = match (q.is_empty(), self.off) {
            (true, c) => c.to_string(),
            (false, 0) => q,
            (false, c) if c > 0 => format!("{q}+{c}"),
            (false, c) => format!("{q}{c}"),
        };
        if self.den == 1 {
            write!(f, "{body}")
        } else {
            write!(f, "floor(({body})/{})", self.den)
        }
    }
}

/// Inclusive summation range.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Range {
    pub lo: Bound,
    pub hi: Bound,
}

impl Range {
    pub const fn new(lo: Bound, hi: Bound) -> Self {
        Self { lo, hi }
    }

    /// `0 <= k <= p^a - 1`.
    pub const fn full() -> Self {
        Self::new(Bound::constant(0), Bound::new(1, -1, 1))
    }

    /// `0 <= k <= (p^a - 1)/2`.
    pub const fn half() -> Self {
        Self::new(Bound::constant(0), Bound::new(1, -1, 2))
    }

    /// `1 <= k <= p^a - 1`.
    pub const fn full_from_one() -> Self {
        Self::new(Bound::constant(1), Bound::new(1, -1, 1))
    }

    /// `1 <= k <= (p^a - 1)/2`.
    pub const fn half_from_one() -> Self {
        Self::new(Bound::constant(1), Bound::new(1, -1, 2))
    }

    /// `p^a/2 < k < p^a`.
    pub const fn upper_half() -> Self {
        Self::new(Bound::new(1, 1, 2), Bound::new(1, -1, 1))
    }

    /// `0 <= k <= floor(num * p^a / den)`.
    pub const fn up_to_fraction(num: i64, den: i64) -> Self {
        Self::new(Bound::constant(0), Bound::new(num, 0, den))
    }

    pub fn bounds(&self, q: u64) -> (i64, i64) {
        (self.lo.at(q), self.hi.at(q))
    }
}

impl fmt::Display for Range {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if *self == Range::upper_half() {
            return write!(f, "p^a/2<k<p^a");
        }
        let hi = match (self.hi.num, self.hi.off, self.hi.den) {
            (1, -1, 1) => "p^a-1".to_string(),
            (1, -1, 2) => "(p^a-1)/2".to_string(),
            (n, 0, d) => format!("floor({n}p^a/{d})"),
            _ => self.hi.to_string(),
        };
        write!(f, "k={}..{}", self.lo, hi)
    }
}

/// The three inner convolutions that appear as term factors.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum InnerShape {
    /// `sum_k binom(-1/4,k)^2 binom(-3/4,n-k)^2`.
    QuarterBinoms,
    /// `sum_k binom(n,k)^2 binom(2k,k) binom(2(n-k),n-k)`.
    BinomSquaredCentral,
    /// `sum_k binom(n,k)^4 binom(2k,k) binom(2(n-k),n-k)`.
    BinomFourthCentral,
}

impl fmt::Display for InnerShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            InnerShape::QuarterBinoms => write!(f, "[sum_j binom(-1/4,j)^2 binom(-3/4,k-j)^2]"),
            InnerShape::BinomSquaredCentral => {
                write!(f, "[sum_j binom(k,j)^2 binom(2j,j) binom(2(k-j),k-j)]")
            }
            InnerShape::BinomFourthCentral => {
                write!(f, "[sum_j binom(k,j)^4 binom(2j,j) binom(2(k-j),k-j)]")
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Factor {
    /// `binom(top, bottom)`; zero when `bottom < 0` or `bottom > top`.
    Binom {
        top: Affine,
        bottom: Affine,
    },
    /// `c1 * k + c0`.
    Linear {
        c1: i64,
        c0: i64,
    },
    /// `binom(num/den, k)`.
    RationalBinom {
        num: i64,
        den: i64,
    },
    Inner(InnerShape),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TermFactor {
    pub factor: Factor,
    pub exp: i32,
}

impl TermFactor {
    pub fn binom(tk: i64, tc: i64, bk: i64, bc: i64, exp: i32) -> Self {
        Self {
            factor: Factor::Binom {
                top: Affine::new(tk, tc),
                bottom: Affine::new(bk, bc),
            },
            exp,
        }
    }

    /// `binom(2k,k)^exp`.
    pub fn central(exp: i32) -> Self {
        Self::binom(2, 0, 1, 0, exp)
    }

    /// `binom(3k,k)^exp`.
    pub fn binom3(exp: i32) -> Self {
        Self::binom(3, 0, 1, 0, exp)
    }

    /// `binom(4k,2k)^exp`.
    pub fn binom4(exp: i32) -> Self {
        Self::binom(4, 0, 2, 0, exp)
    }

    /// `binom(6k,3k)^exp`.
    pub fn binom6(exp: i32) -> Self {
        Self::binom(6, 0, 3, 0, exp)
    }

    /// `(c1 k + c0)^exp`.
    pub fn linear(c1: i64, c0: i64, exp: i32) -> Self {
        Self {
            factor: Factor::Linear { c1, c0 },
            exp,
        }
    }

    /// Catalan number `C_k = binom(2k,k)/(k+1)`, as two factors.
    pub fn catalan() -> [Self; 2] {
        [Self::central(1), Self::linear(1, 1, -1)]
    }

    /// `C_{2k} = binom(4k,2k)/(2k+1)`.
    pub fn catalan_even() -> [Self; 2] {
        [Self::binom4(1), Self::linear(2, 1, -1)]
    }

    /// Second-order Catalan number `C_k^{(2)} = binom(3k,k)/(2k+1)`.
    pub fn catalan2() -> [Self; 2] {
        [Self::binom3(1), Self::linear(2, 1, -1)]
    }

    /// `binom(p-1, k)`.
    pub fn upper_p_minus_one() -> Self {
        Self {
            factor: Factor::Binom {
                top: Affine { k: 0, c: -1, p: 1 },
                bottom: Affine::new(1, 0),
            },
            exp: 1,
        }
    }

    pub fn rational_binom(num: i64, den: i64, exp: i32) -> Self {
        Self {
            factor: Factor::RationalBinom { num, den },
            exp,
        }
    }

    pub fn inner(shape: InnerShape) -> Self {
        Self {
            factor: Factor::Inner(shape),
            exp: 1,
        }
    }
}

impl fmt::Display for TermFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let base = match &self.factor {
            Factor::Binom { top, bottom } => format!("binom({top},{bottom})"),
            Factor::Linear { c1, c0 } => format!("({})", Affine::new(*c1, *c0)),
            Factor::RationalBinom { num, den } => format!("binom({num}/{den},k)"),
            Factor::Inner(s) => s.to_string(),
        };
        if self.exp == 1 {
            write!(f, "{base}")
        } else {
            write!(f, "{base}^{}", self.exp)
        }
    }
}

/// `sum_{k in range} coeff(k) k^kpower base^k [(k/3)] prod factors`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SumSpec {
    pub range: Range,
    /// `c0 + c1 k + c2 k^2`.
    pub coeff: [i64; 3],
    pub k_power: i32,
    /// Base `num/den` of the geometric factor; the sign of `num` carries `(-1)^k`.
    pub base: (i64, i64),
    pub character3: bool,
    pub factors: Vec<TermFactor>,
}

impl SumSpec {
    pub fn new(range: Range) -> Self {
        Self {
            range,
            coeff: [1, 0, 0],
            k_power: 0,
            base: (1, 1),
            character3: false,
            factors: Vec::new(),
        }
    }

    pub fn coeff(mut self, c0: i64, c1: i64, c2: i64) -> Self {
        self.coeff = [c0, c1, c2];
        self
    }

    /// Linear coefficient `c1 k + c0`.
    pub fn lin(self, c1: i64, c0: i64) -> Self {
        self.coeff(c0, c1, 0)
    }

    pub fn k_power(mut self, e: i32) -> Self {
        self.k_power = e;
        self
    }

    /// Geometric factor `(num/den)^k`.
    pub fn base(mut self, num: i64, den: i64) -> Self {
        self.base = (num, den);
        self
    }

    /// `1 / d^k`.
    pub fn over(self, d: i64) -> Self {
        self.base(1, d)
    }

    pub fn character3(mut self) -> Self {
        self.character3 = true;
        self
    }

    pub fn factor(mut self, f: TermFactor) -> Self {
        self.factors.push(f);
        self
    }

    pub fn factors(mut self, fs: impl IntoIterator<Item = TermFactor>) -> Self {
        self.factors.extend(fs);
        self
    }

    pub fn base_rational(&self) -> BigRational {
        BigRational::new(BigInt::from(self.base.0), BigInt::from(self.base.1))
    }

    pub fn coeff_at(&self, k: i64) -> i128 {
        let k = k as i128;
        self.coeff[0] as i128 + self.coeff[1] as i128 * k + self.coeff[2] as i128 * k * k
    }

    /// Largest factorial argument needed for `k <= kmax`.
    pub(crate) fn max_top(&self, kmax: i64, p: u64) -> i64 {
        let mut m = kmax.max(0);
        for f in &self.factors {
            match &f.factor {
                Factor::Binom { top, .. } => m = m.max(top.at(kmax, p)).max(top.at(0, p)),
                Factor::Inner(_) => m = m.max(2 * kmax),
                _ => {}
            }
        }
        m
    }
}

fn coeff_string(c: &[i64; 3]) -> Option<String> {
    if *c == [1, 0, 0] {
        return None;
    }
    let mut parts = Vec::new();
    for (i, &v) in c.iter().enumerate().rev() {
        if v == 0 {
            continue;
        }
        let mono = match i {
            0 => String::new(),
            1 => "k".to_string(),
            _ => "k^2".to_string(),
        };
        let mag = if v.abs() == 1 && i > 0 {
            String::new()
        } else {
            v.abs().to_string()
        };
        let sign = if v < 0 { "-" } else { "+" };
        parts.push((sign, format!("{mag}{mono}")));
    }
    let mut s = String::new();
    for (i, (sign, body)) in parts.iter().enumerate() {
        if i == 0 {
            if *sign == "-" {
                s.push('-');
            }
        } else {
            s.push_str(sign);
        }
        s.push_str(body);
    }
    Some(format!("({s})"))
}

impl fmt::Display for SumSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if let Some(c) = coeff_string(&self.coeff) {
            parts.push(c);
        }
        if self.k_power != 0 {
            parts.push(format!("k^{}", self.k_power));
        }
        if self.base != (1, 1) {
            let (n, d) = self.base;
            if d == 1 {
                parts.push(format!("({n})^k"));
            } else {
                parts.push(format!("({n}/{d})^k"));
            }
        }
        if self.character3 {
            parts.push("(k/3)".to_string());
        }
        for t in &self.factors {
            parts.push(t.to_string());
        }
        if parts.is_empty() {
            parts.push("1".to_string());
        }
        write!(f, "sum_{{{}}} {}", self.range, parts.join(" "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bounds() {
        let r = Range::full();
        assert_eq!(r.bounds(25), (0, 24));
        assert_eq!(Range::half().bounds(7), (0, 3));
        assert_eq!(Range::upper_half().bounds(7), (4, 6));
        assert_eq!(Range::up_to_fraction(3, 4).bounds(13), (0, 9));
        assert_eq!(Range::up_to_fraction(2, 3).bounds(49), (0, 32));
        assert_eq!(Range::up_to_fraction(7, 8).bounds(17), (0, 14));
    }

    #[test]
    fn display() {
        let s = SumSpec::new(Range::full())
            .lin(21, 8)
            .factor(TermFactor::central(3));
        assert_eq!(s.to_string(), "sum_{k=0..p^a-1} (21k+8) binom(2k,k)^3");
        let s = SumSpec::new(Range::half_from_one())
            .k_power(-2)
            .factor(TermFactor::central(-1));
        assert_eq!(s.to_string(), "sum_{k=1..(p^a-1)/2} k^-2 binom(2k,k)^-1");
        let s = SumSpec::new(Range::full())
            .coeff(32, 160, 205)
            .base(-1, 1)
            .factor(TermFactor::central(5));
        assert!(s.to_string().contains("(205k^2+160k+32) (-1)^k"));
        assert_eq!(TermFactor::upper_p_minus_one().to_string(), "binom(p-1,k)");
    }
}
