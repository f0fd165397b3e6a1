//! The infinite series under test and their claimed closed forms.

use std::fmt;
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_rational::BigRational;

use super::ball::Ball;
use super::constants::{constant_ball, Constant};
use crate::error::Result;
use crate::sums::{Bound, InnerShape, Range, SumSpec, TermFactor};

/// `coeff * pi^a sqrt2^b sqrt3^c zeta3^d zeta4^e K^f`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Claim {
    pub coeff: (i64, i64),
    /// Exponents in the order of [`Constant::ALL`].
    pub powers: [i32; 6],
}

impl Claim {
    pub fn value(&self, w: u32) -> Result<Ball> {
        let mut acc = Ball::exact(BigRational::new(
            BigInt::from(self.coeff.0),
            BigInt::from(self.coeff.1),
        ));
        for (c, &e) in Constant::ALL.iter().zip(&self.powers) {
            if e != 0 {
                // Each power carries a few extra digits so the product stays within 10^-w.
                let b = constant_ball(*c, w + 6)?
                    .powi(e)
                    .expect("constants are nonzero");
                acc = &acc * &b;
            }
        }
        Ok(acc)
    }
}

impl fmt::Display for Claim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (n, d) = self.coeff;
        let mut num = Vec::new();
        let mut den = Vec::new();
        if n.abs() != 1 || self.powers.iter().all(|&e| e <= 0) {
            num.push(n.abs().to_string());
        }
        if d != 1 {
            den.push(d.to_string());
        }
        for (c, &e) in Constant::ALL.iter().zip(&self.powers) {
            let s = match e.abs() {
                0 => continue,
                1 => c.name().to_string(),
                k => format!("{}^{k}", c.name()),
            };
            if e > 0 {
                num.push(s)
            } else {
                den.push(s)
            }
        }
        let sign = if n < 0 { "-" } else { "" };
        let top = num.join(" ");
        match den.len() {
            0 => write!(f, "{sign}{top}"),
            1 => write!(f, "{sign}{top}/{}", den[0]),
            _ => write!(f, "{sign}{top}/({})", den.join(" ")),
        }
    }
}

#[derive(Clone, Debug)]
pub struct SeriesEntry {
    pub id: &'static str,
    /// First summation index.
    pub start: i64,
    /// The term as a binomial-sum summand; only its factors are used.
    pub term: SumSpec,
    pub claim: Claim,
    /// Declared bound on `|t_{k+1} / t_k|`; `(1, 1)` when no geometric bound exists.
    pub rho: (i64, i64),
    /// Index from which `rho` is claimed to hold.
    pub rho_from: i64,
    pub alternating: bool,
}

impl SeriesEntry {
    pub fn statement(&self) -> String {
        let body = self.term.to_string();
        let body = body.split_once(' ').map(|(_, b)| b).unwrap_or(&body);
        format!("sum_{{k>={}}} {} = {}", self.start, body, self.claim)
    }

    pub fn rho_rational(&self) -> BigRational {
        BigRational::new(BigInt::from(self.rho.0), BigInt::from(self.rho.1))
    }

    pub fn geometric(&self) -> bool {
        self.rho.0 < self.rho.1
    }
}

fn term() -> SumSpec {
    SumSpec::new(Range::new(Bound::constant(0), Bound::constant(0)))
}

fn claim(n: i64, d: i64, powers: [i32; 6]) -> Claim {
    Claim {
        coeff: (n, d),
        powers,
    }
}

const PI2: [i32; 6] = [2, 0, 0, 0, 0, 0];
const K: [i32; 6] = [0, 0, 0, 0, 0, 1];

struct Def {
    id: &'static str,
    start: i64,
    term: SumSpec,
    claim: Claim,
    rho: (i64, i64),
    rho_from: i64,
}

fn def(
    id: &'static str,
    start: i64,
    term: SumSpec,
    claim: Claim,
    rho: (i64, i64),
    rho_from: i64,
) -> Def {
    Def {
        id,
        start,
        term,
        claim,
        rho,
        rho_from,
    }
}

fn build() -> Vec<SeriesEntry> {
    use TermFactor as F;
    let c2b3 = |t: SumSpec| t.factor(F::central(-2)).factor(F::binom3(-1));
    let c2b4 = |t: SumSpec| t.factor(F::central(-2)).factor(F::binom4(-1));
    let defs = vec![
        def(
            "conj1.4/first",
            1,
            c2b3(term().lin(10, -3).base(8, 1).k_power(-3)),
            claim(1, 2, PI2),
            (1, 12),
            1,
        ),
        def(
            "conj1.4/second",
            1,
            c2b3(term().lin(11, -3).base(64, 1).k_power(-3)),
            claim(8, 1, PI2),
            (5, 8),
            1,
        ),
        def(
            "conj1.4/third",
            1,
            c2b4(term().lin(35, -8).base(81, 1).k_power(-3)),
            claim(12, 1, PI2),
            (1, 3),
            1,
        ),
        def(
            "conj1.4/eq1.21a",
            1,
            c2b3(term().lin(15, -4).base(-27, 1).k_power(-3)),
            claim(-27, 1, K),
            (3, 10),
            1,
        ),
        def(
            "conj1.4/eq1.21b",
            1,
            c2b4(term().lin(5, -1).base(-144, 1).k_power(-3)),
            claim(-45, 2, K),
            (3, 5),
            1,
        ),
        def(
            "conj1.4/eq1.22",
            0,
            term()
                .coeff(1, 7, 18)
                .base(-1, 128)
                .factor(F::central(2))
                .factor(F::inner(InnerShape::QuarterBinoms)),
            claim(4, 1, [-2, 1, 0, 0, 0, 0]),
            (1, 5),
            1,
        ),
        def(
            "conj1.4/eq1.23",
            0,
            term()
                .coeff(5, 26, 40)
                .base(-1, 256)
                .factor(F::central(2))
                .factor(F::inner(InnerShape::BinomSquaredCentral)),
            claim(24, 1, [-2, 0, 0, 0, 0, 0]),
            (1, 1),
            1,
        ),
        def(
            "remark1.1/first",
            1,
            term().k_power(-2).factor(F::central(-1)),
            claim(1, 18, PI2),
            (1, 4),
            1,
        ),
        def(
            "remark1.1/second",
            1,
            term().k_power(-2).base(4, 1).factor(F::central(-1)),
            claim(1, 2, PI2),
            (1, 1),
            1,
        ),
        def(
            "remark1.2/first",
            1,
            term().k_power(-1).base(2, 1).factor(F::central(-1)),
            claim(1, 2, [1, 0, 0, 0, 0, 0]),
            (1, 2),
            1,
        ),
        def(
            "remark1.2/second",
            1,
            term().k_power(-3).base(-1, 1).factor(F::central(-1)),
            claim(-2, 5, [0, 0, 0, 1, 0, 0]),
            (1, 4),
            1,
        ),
        def(
            "remark1.2/third",
            1,
            term().k_power(-4).factor(F::central(-1)),
            claim(17, 36, [0, 0, 0, 0, 1, 0]),
            (1, 4),
            1,
        ),
        def(
            "zeilberger-pi2over6",
            1,
            term().lin(21, -8).k_power(-3).factor(F::central(-3)),
            claim(1, 6, PI2),
            (1, 64),
            1,
        ),
        def(
            "ramanujan/first",
            0,
            term().lin(6, 1).over(256).factor(F::central(3)),
            claim(4, 1, [-1, 0, 0, 0, 0, 0]),
            (1, 4),
            1,
        ),
        def(
            "ramanujan/second",
            0,
            term().lin(6, 1).base(-1, 512).factor(F::central(3)),
            claim(2, 1, [-1, 1, 0, 0, 0, 0]),
            (1, 8),
            1,
        ),
        def(
            "ramanujan/third",
            0,
            term().lin(42, 5).over(4096).factor(F::central(3)),
            claim(16, 1, [-1, 0, 0, 0, 0, 0]),
            (1, 64),
            1,
        ),
        def(
            "rem5.2/series1",
            0,
            term()
                .lin(5, 1)
                .base(-1, 192)
                .factor(F::central(2))
                .factor(F::binom3(1)),
            claim(4, 1, [-1, 0, 1, 0, 0, 0]),
            (9, 16),
            1,
        ),
        def(
            "rem5.2/series2",
            0,
            term()
                .lin(6, 1)
                .over(216)
                .factor(F::central(2))
                .factor(F::binom3(1)),
            claim(3, 1, [-1, 0, 1, 0, 0, 0]),
            (1, 2),
            1,
        ),
        def(
            "rem5.2/series3",
            0,
            term()
                .lin(8, 1)
                .over(2304)
                .factor(F::central(2))
                .factor(F::binom4(1)),
            claim(2, 1, [-1, 0, 1, 0, 0, 0]),
            (1, 9),
            1,
        ),
        def(
            "rem5.2/series4",
            0,
            term()
                .lin(40, 3)
                .over(614_656)
                .factor(F::central(2))
                .factor(F::binom4(1)),
            claim(49, 3, [-1, 0, -1, 0, 0, 0]),
            (1, 2401),
            1,
        ),
        def(
            "rem5.2/series5",
            0,
            term()
                .lin(28, 3)
                .base(-1, 12_288)
                .factor(F::central(2))
                .factor(F::binom4(1)),
            claim(16, 1, [-1, 0, -1, 0, 0, 0]),
            (1, 48),
            1,
        ),
        def(
            "az-zeta3",
            1,
            term()
                .coeff(32, -160, 205)
                .base(-1, 1)
                .k_power(-5)
                .factor(F::central(-5)),
            claim(-2, 1, [0, 0, 0, 1, 0, 0]),
            (1, 1024),
            1,
        ),
    ];
    defs.into_iter()
        .map(|d| {
            let alternating = d.term.base.0 < 0;
            SeriesEntry {
                id: d.id,
                start: d.start,
                term: d.term,
                claim: d.claim,
                rho: d.rho,
                rho_from: d.rho_from,
                alternating,
            }
        })
        .collect()
}

pub fn series_registry() -> &'static [SeriesEntry] {
    static R: OnceLock<Vec<SeriesEntry>> = OnceLock::new();
    R.get_or_init(build)
}

pub fn series_lookup(id: &str) -> Option<&'static SeriesEntry> {
    series_registry().iter().find(|e| e.id == id)
}
