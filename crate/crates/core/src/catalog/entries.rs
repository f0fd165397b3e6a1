//! The registry. Ids are stable public keys.
//!
//! Terms the source writes on the left next to the sum (for instance
//! `+ 4q_p(2)/p`) are moved to the right-hand side. Pairs of sums that are
//! claimed congruent to each other are stored as `lhs - c*rhs == 0`.

use std::sync::OnceLock;

use super::atoms::*;
use super::expr::{frac, int, pp, qq, recip, special, sum, zero, Expr, Special, Upto};
use super::types::{Applicability, CongruenceSpec, ModExp, Status};
use crate::arith::jacobi;
use crate::special::{eta_coeffs, FormRequest, Side};
use crate::sums::{InnerShape, Range, SumSpec, TermFactor as T};

use num_bigint::BigInt;
use num_rational::BigRational;

fn e() -> Expr {
    special(Special::EulerP3)
}
fn b3() -> Expr {
    special(Special::BernoulliP3)
}
fn b5() -> Expr {
    special(Special::BernoulliP5)
}
fn q2() -> Expr {
    special(Special::FermatQ2)
}
fn bpoly() -> Expr {
    special(Special::BernoulliPolyThird)
}
fn epoly() -> Expr {
    special(Special::EulerPolyQuarter)
}
/// `H_{p-1}`.
fn h() -> Expr {
    recip(Upto::PMinusOne, 1, false)
}

fn s(r: Range) -> SumSpec {
    SumSpec::new(r)
}
fn full() -> SumSpec {
    s(Range::full())
}
fn half() -> SumSpec {
    s(Range::half())
}
fn upper() -> SumSpec {
    s(Range::upper_half())
}

fn odd() -> Applicability {
    Applicability::new("p odd", |p, _| p % 2 == 1)
}
fn gt(c: u64) -> Applicability {
    Applicability::new(format!("p > {c}"), move |p, _| p > c)
}
fn ne(c: u64) -> Applicability {
    Applicability::new(format!("p != {c}"), move |p, _| p != c)
}
fn pmod(m: u64, rs: &'static [u64]) -> Applicability {
    let list: Vec<String> = rs.iter().map(|r| r.to_string()).collect();
    Applicability::new(format!("p = {} (mod {m})", list.join(",")), move |p, _| {
        rs.contains(&(p % m))
    })
}
/// `(c/p) = v`.
fn sym(c: i64, v: i8) -> Applicability {
    Applicability::new(format!("({c}/p) = {v}"), move |p, _| jacobi(c, p) == v)
}
/// `(p/m) = v`.
fn psym(m: u64, v: i8) -> Applicability {
    Applicability::new(format!("(p/{m}) = {v}"), move |p, _| {
        jacobi(p as i64, m) == v
    })
}
fn or_a_gt1(inner: Applicability) -> Applicability {
    let f = inner.f.clone();
    Applicability::new(format!("({} or a > 1)", inner.desc), move |p, a| {
        a > 1 || f(p, a)
    })
}

fn delta(p: u64, c: u64) -> i64 {
    i64::from(p == c)
}

struct Entry(CongruenceSpec);

impl Entry {
    fn multi(mut self) -> Self {
        self.0.multi_a = true;
        self
    }
    fn form(mut self, lead: u64, d: u64, scale: u64, side: &[Side]) -> Self {
        self.0.form = Some(FormRequest::new(lead, d, scale, side));
        self
    }
}

fn entry(
    status: Status,
    id: &str,
    lhs: Expr,
    rhs: Expr,
    m: impl Into<ModExp>,
    app: Applicability,
) -> Entry {
    Entry(CongruenceSpec {
        id: id.to_string(),
        status,
        multi_a: false,
        applicability: app,
        lhs,
        rhs,
        mod_exp: m.into(),
        form: None,
    })
}

fn thm(id: &str, lhs: Expr, rhs: Expr, m: impl Into<ModExp>, app: Applicability) -> Entry {
    entry(Status::Theorem, id, lhs, rhs, m, app)
}

fn conj(id: &str, lhs: Expr, rhs: Expr, m: impl Into<ModExp>, app: Applicability) -> Entry {
    entry(Status::Conjecture, id, lhs, rhs, m, app)
}

/// `a(p)` from the eta product `q prod (1 - q^{4n})^6`.
fn eta_ap() -> Expr {
    super::expr::exact("a(p)", |p, _| {
        let c = eta_coeffs(p as usize)[p as usize - 1];
        BigRational::from_integer(BigInt::from(c))
    })
}

fn one_over_q() -> Expr {
    qq(-1)
}

fn section_one() -> Vec<Entry> {
    let cc_over_k = || sum(s(Range::half_from_one()).k_power(-1).factor(T::central(1)));
    vec![
        thm(
            "thm1.1/eq1.1",
            sum(full().over(2).factor(T::central(1))),
            sign_half() - pp(2) * e(),
            3,
            odd(),
        ),
        thm(
            "thm1.1/eq1.2",
            cc_over_k(),
            sign_half_plus() * frac(8, 3) * pp(1) * e(),
            2,
            gt(3),
        ),
        thm(
            "thm1.1/eq1.3",
            sum(s(Range::half_from_one()).k_power(-2).factor(T::central(-1))),
            sign_half() * frac(4, 3) * e(),
            1,
            gt(3),
        ),
        thm(
            "thm1.1/eq1.4",
            sum(s(Range::half_from_one())
                .k_power(-2)
                .base(4, 1)
                .factor(T::central(-1))),
            sign_half() * int(4) * e(),
            1,
            odd(),
        ),
        thm(
            "thm1.1/eq1.5",
            sum(upper().k_power(-1).over(4).factor(T::central(1))),
            sign_half() * int(2) * pp(1) * e(),
            2,
            odd(),
        ),
        thm(
            "rem1.1/sun-tauraso",
            sum(s(Range::full_from_one()).k_power(-1).factor(T::central(1))),
            frac(8, 9) * pp(2) * b3(),
            3,
            gt(3),
        ),
        thm(
            "rem1.1/tauraso-half",
            sum(s(Range::full_from_one())
                .k_power(-1)
                .over(4)
                .factor(T::central(1))),
            -recip(Upto::HalfP, 1, false),
            3,
            gt(5),
        ),
        thm(
            "rem1.1/tauraso-harmonic",
            sum(s(Range::full_from_one()).k_power(-2).factor(T::central(-1))),
            frac(1, 3) * pp(-1) * h(),
            3,
            gt(5),
        ),
        thm(
            "sec1/wolstenholme-b3",
            pp(-2) * h(),
            frac(-1, 3) * b3(),
            1,
            gt(3),
        ),
        thm(
            "sec1/wolstenholme-b5",
            int(5) * pp(-2) * recip(Upto::PMinusOne, 3, false),
            int(-6) * b5(),
            1,
            gt(3),
        ),
        conj(
            "conj1.1/line1",
            sum(s(Range::full_from_one())
                .k_power(-2)
                .base(4, 1)
                .factor(T::central(-1))),
            int(-2) * (q2() * q2()) + pp(1) * b3() - int(4) * pp(-1) * q2(),
            2,
            gt(3),
        ),
        conj(
            "conj1.1/line2",
            pp(1)
                * sum(s(Range::full_from_one())
                    .k_power(-1)
                    .base(2, 1)
                    .factor(T::central(-1))),
            jac_p(-1) - int(1) - pp(1) * q2() + pp(2) * e(),
            3,
            gt(3),
        ),
        conj(
            "conj1.1/line3",
            sum(s(Range::full_from_one()).k_power(-3).factor(T::central(1))),
            frac(2, 3) * b3(),
            1,
            gt(3),
        ),
        conj(
            "conj1.1/line4",
            sum(s(Range::full_from_one()).k_power(-3).factor(T::central(1))),
            int(-2) * pp(-2) * h() - frac(13, 27) * recip(Upto::PMinusOne, 3, false),
            4,
            gt(7),
        ),
        conj(
            "conj1.1/line5",
            sum(s(Range::half_from_one())
                .k_power(-3)
                .base(-1, 1)
                .factor(T::central(-1))),
            int(-2) * b3(),
            1,
            gt(5),
        ),
        conj(
            "conj1.1/line6",
            sum(s(Range::half_from_one())
                .k_power(-2)
                .base(-1, 1)
                .factor(T::central(1))),
            frac(56, 15) * pp(1) * b3(),
            2,
            gt(5),
        ),
        conj(
            "conj1.1/line7",
            sum(s(Range::full_from_one()).k_power(-4).factor(T::central(-1))),
            pp(-3) * h() - frac(7, 45) * pp(1) * b5(),
            2,
            gt(5),
        ),
        thm(
            "thm1.2/eq1.6",
            sum(half().over(8).factor(T::central(1))),
            jac_p(2) + jac_p(-2) * frac(1, 4) * pp(2) * e(),
            3,
            gt(3),
        ),
        thm(
            "thm1.2/eq1.7",
            sum(half().over(16).factor(T::central(2))),
            sign_half() + pp(2) * e(),
            3,
            gt(3),
        ),
        thm(
            "thm1.2/eq1.8",
            sum(half().lin(1, 0).over(16).factor(T::central(2))),
            sign_half_plus() * frac(1, 4) + frac(1, 4) * pp(2) * (int(1) - e()),
            3,
            gt(3),
        ),
        thm(
            "thm1.2/eq1.9",
            sum(upper().over(16).factor(T::central(2))),
            int(-2) * pp(2) * e(),
            3,
            gt(3),
        ),
        thm(
            "thm1.2/eq1.10",
            sum(upper().lin(1, 0).over(16).factor(T::central(2))),
            frac(1, 2) * pp(2) * e(),
            3,
            gt(3),
        ),
        thm(
            "thm1.2/eq1.11",
            sign_half() * sum(half().over(16).factor(T::central(2))),
            int(1) - frac(3, 8) * pp(1) * cc_over_k(),
            4,
            gt(3),
        ),
        thm(
            "thm1.2/eq1.12",
            sum(half().lin(1, 0).over(16).factor(T::central(2))),
            sign_half_plus() * frac(1, 4)
                + frac(1, 4) * pp(2) * (pow_p(2, 0) - int(1))
                + sign_half() * frac(3, 32) * pp(1) * cc_over_k(),
            4,
            gt(3),
        ),
        thm(
            "rem1.3/os",
            sign_half() * sum(half().over(16).factor(T::central(2))),
            int(1) - frac(3, 8) * pp(1) * cc_over_k(),
            3,
            gt(3),
        ),
        thm(
            "rem1.3/line2",
            sum(half().lin(4, 1).over(16).factor(T::central(2))),
            pp(2) * (pow_p(2, 0) - int(1)),
            4,
            gt(3),
        ),
        thm(
            "rem1.3/line3",
            sum(upper().lin(4, 1).over(16).factor(T::central(2))),
            int(6) * pp(2) * (int(1) - pow_p(2, -1)),
            4,
            odd(),
        ),
        conj(
            "conj1.2/eq1.13a",
            sum(s(Range::up_to_fraction(3, 4))
                .base(-1, 4)
                .factor(T::central(1))),
            jac(2),
            2,
            or_a_gt1(pmod(4, &[1])),
        )
        .multi(),
        conj(
            "conj1.2/eq1.13b",
            sum(s(Range::up_to_fraction(3, 4))
                .over(16)
                .factor(T::central(2))),
            jac(-1),
            3,
            or_a_gt1(pmod(4, &[1])),
        )
        .multi(),
        conj(
            "conj1.2/eq1.14r5",
            sum(s(Range::up_to_fraction(5, 8))
                .over(16)
                .factor(T::central(2))),
            jac(-1),
            3,
            gt(3).and(or_a_gt1(pmod(8, &[1, 3]))),
        )
        .multi(),
        conj(
            "conj1.2/eq1.14r7",
            sum(s(Range::up_to_fraction(7, 8))
                .over(16)
                .factor(T::central(2))),
            jac(-1),
            3,
            gt(3).and(or_a_gt1(pmod(8, &[1, 3]))),
        )
        .multi(),
        thm(
            "thm1.3/eq1.15",
            one_over_q() * sum(full().lin(21, 8).factor(T::central(3))),
            int(8) + int(16) * pp(3) * b3(),
            4,
            odd(),
        )
        .multi(),
        conj(
            "conj1.3/eq1.18",
            sum(s(Range::up_to_fraction(2, 3))
                .lin(21, 8)
                .factor(T::central(3))),
            int(8) * qq(1),
            ModExp::new("(a+5+(-1)^p)", |p, a| {
                a as i64 + 5 + if p % 2 == 0 { 1 } else { -1 }
            }),
            Applicability::new("p^a = 1 (mod 3)", |p, a| (p % 3).pow(a) % 3 == 1),
        )
        .multi(),
        conj(
            "conj1.3/eq1.19",
            sum(s(Range::full_from_one())
                .lin(21, -8)
                .k_power(-3)
                .factor(T::central(-3))),
            pp(-2) * h() * (int(15) * pp(1) - int(6)) + frac(12, 5) * pp(2) * b5()
                - (pp(1) - int(1)) * pp(-3),
            3,
            gt(5),
        ),
    ]
}

fn sections_two_to_four() -> Vec<Entry> {
    vec![
        thm(
            "lehmer/eq2.2",
            recip(Upto::HalfP, 1, false),
            int(-2) * q2() + pp(1) * (q2() * q2()),
            2,
            odd(),
        ),
        thm(
            "lehmer/eq2.3",
            recip(Upto::QuarterP, 1, false),
            int(-3) * q2() + frac(3, 2) * pp(1) * (q2() * q2()) - sign_half() * pp(1) * e(),
            2,
            odd(),
        ),
        thm(
            "lehmer/quarter-squares",
            recip(Upto::QuarterP, 2, false),
            sign_half() * int(4) * e(),
            1,
            gt(3),
        ),
        thm(
            "lemma2.4/line1",
            recip(Upto::HalfP, 2, false),
            zero(),
            1,
            gt(3),
        ),
        thm(
            "lemma2.4/line2",
            recip(Upto::HalfP, 2, true),
            sign_half() * int(2) * e(),
            1,
            gt(3),
        ),
    ]
}

fn c3(spec: SumSpec) -> Expr {
    sum(spec.factor(T::central(3)))
}

fn section_five_cubes() -> Vec<Entry> {
    let m512 = || full().base(-1, 512);
    vec![
        thm(
            "vanhamme/line1",
            c3(half().lin(6, 1).over(256)),
            pp(1) * jac_p(-1),
            4,
            gt(3),
        ),
        conj(
            "vanhamme/line2",
            c3(half().lin(6, 1).base(-1, 512)),
            pp(1) * jac_p(-2),
            3,
            odd(),
        ),
        conj(
            "vanhamme/line3",
            c3(half().lin(42, 5).over(4096)),
            int(5) * pp(1) * jac_p(-1),
            4,
            odd(),
        ),
        thm("rv/eta", c3(full().over(64)), eta_ap(), 2, odd()),
        conj(
            "conj5.1/line1",
            c3(full().lin(3, 1).base(-1, 8)),
            pp(1) * jac_p(-1) + pp(3) * e(),
            4,
            gt(3),
        ),
        conj(
            "conj5.1/line2",
            c3(half().lin(3, 1).over(16)),
            pp(1) + int(2) * jac_p(-1) * pp(3) * e(),
            4,
            gt(3),
        ),
        conj(
            "conj5.1/line3",
            c3(full().lin(6, 1).over(256)),
            pp(1) * jac_p(-1) - pp(3) * e(),
            4,
            gt(3),
        ),
        conj(
            "conj5.1/line4",
            c3(half().lin(6, 1).base(-1, 512)),
            pp(1) * jac_p(-2) + frac(1, 4) * pp(3) * jac_p(2) * e(),
            4,
            gt(3),
        ),
        conj(
            "conj5.1/line5",
            c3(full().lin(42, 5).over(4096)),
            int(5) * pp(1) * jac_p(-1) - pp(3) * e(),
            4,
            gt(3),
        ),
        conj(
            "conj5.1/line6",
            c3(half().lin(3, 1).base(-1, 8)),
            int(4) * jac_p(2) * c3(m512().lin(6, 1)) - int(3) * pp(1) * jac_p(-1),
            4,
            gt(3),
        ),
        conj(
            "conj5.1/line7",
            one_over_q() * c3(full().lin(3, 1).over(16)),
            int(1) + frac(7, 6) * pp(3) * b3(),
            4,
            gt(3),
        )
        .multi(),
        conj(
            "conj5.1/line8",
            one_over_q() * c3(half().lin(42, 5).over(4096)),
            jac(-1) * (int(5) - frac(3, 4) * pp(1) * h()),
            5,
            gt(3),
        )
        .multi(),
        conj(
            "conj5.2/line1",
            c3(full().base(-1, 8)) - c3(full().over(64)),
            zero(),
            3,
            pmod(4, &[1]),
        ),
        conj(
            "conj5.2/line2",
            c3(full().over(64)) - jac_p(2) * c3(m512()),
            zero(),
            3,
            pmod(4, &[1]),
        ),
        conj(
            "conj5.2/line3",
            c3(full().base(-1, 8)),
            zero(),
            2,
            pmod(4, &[3]),
        ),
        conj("conj5.2/line4", c3(m512()), zero(), 2, pmod(4, &[3])),
        conj(
            "conj5.2/line5",
            c3(full().over(16)) - jac_p(-1) * c3(full().over(256)),
            zero(),
            3,
            pmod(3, &[1]),
        ),
        conj(
            "conj5.2/line6",
            c3(full().over(16)),
            fx2(4, -2),
            2,
            pmod(3, &[1]),
        )
        .form(1, 3, 1, &[]),
        conj(
            "conj5.2/line7",
            c3(full().over(16)),
            zero(),
            2,
            pmod(3, &[2]),
        ),
        conj(
            "conj5.2/line8",
            c3(full().over(256)),
            zero(),
            2,
            pmod(3, &[2]),
        ),
        conj(
            "conj5.2/line9",
            c3(full()) - jac_p(-1) * c3(full().over(4096)),
            zero(),
            3,
            psym(7, 1),
        ),
        conj(
            "conj5.2/line10",
            c3(full().over(4096)),
            zero(),
            2,
            psym(7, -1),
        ),
        conj(
            "conj5.2/line11",
            c3(full().base(-1, 64)),
            jac_p(-1) * fx2(4, -2),
            2,
            sym(-2, 1),
        )
        .form(1, 2, 1, &[]),
        conj(
            "conj5.2/line12",
            c3(full().base(-1, 64)),
            zero(),
            2,
            pmod(8, &[5, 7]),
        ),
    ]
}

/// `binom(2k,k)^2 binom(3k,k)`.
fn c2b3(spec: SumSpec) -> Expr {
    sum(spec.factor(T::central(2)).factor(T::binom3(1)))
}

/// `binom(2k,k)^2 binom(4k,2k)`.
fn c2b4(spec: SumSpec) -> Expr {
    sum(spec.factor(T::central(2)).factor(T::binom4(1)))
}

/// `binom(6k,3k) binom(3k,k) binom(2k,k)`.
fn b6b3c(spec: SumSpec) -> Expr {
    sum(spec
        .factor(T::binom6(1))
        .factor(T::binom3(1))
        .factor(T::central(1)))
}

/// `(p^{a-1}/3) c p^2 B_{p-2}(1/3)`.
fn bpoly_term(c: Expr) -> Expr {
    q_prev_over3() * c * pp(2) * bpoly()
}

fn section_five_products() -> Vec<Entry> {
    vec![
        conj(
            "conj5.3/line1",
            c2b4(full().over(81)) - c3(full()),
            zero(),
            3,
            gt(3).and(psym(7, 1)),
        ),
        conj(
            "conj5.3/line2",
            c2b4(full().over(81)),
            zero(),
            2,
            gt(3).and(psym(7, -1)),
        ),
        conj(
            "conj5.3/line3",
            one_over_q() * c2b4(half().lin(35, 8).over(81)),
            int(8) * pow_p(3, -1),
            2,
            gt(3),
        )
        .multi(),
        conj(
            "conj5.3/line4",
            one_over_q() * c2b4(full().lin(35, 8).over(81)),
            int(8) + frac(416, 27) * pp(3) * b3(),
            4,
            gt(3),
        )
        .multi(),
        conj(
            "conj5.4/line1",
            one_over_q() * c2b3(full().lin(11, 3).over(64)),
            int(3) + frac(7, 2) * pp(3) * b3(),
            4,
            odd(),
        )
        .multi(),
        conj(
            "conj5.4/line2",
            pp(1)
                * sum(s(Range::half_from_one())
                    .lin(11, -3)
                    .k_power(-3)
                    .base(64, 1)
                    .factor(T::central(-2))
                    .factor(T::binom3(-1))),
            int(32) * q2() - frac(64, 3) * pp(2) * b3(),
            3,
            gt(3),
        ),
        conj(
            "conj5.5/line1",
            c2b3(full().over(8)),
            fx2(4, -2),
            2,
            sym(-2, 1),
        )
        .form(1, 2, 1, &[]),
        conj(
            "conj5.5/line2",
            c2b3(full().over(8)),
            zero(),
            2,
            sym(-2, -1),
        ),
        conj(
            "conj5.5/line3",
            one_over_q() * c2b3(full().lin(10, 3).over(8)),
            int(3) + frac(49, 8) * pp(3) * b3(),
            4,
            odd(),
        )
        .multi(),
        conj(
            "conj5.6/line1",
            c2b3(full().base(-1, 27)),
            fx2(4, -2),
            2,
            gt(3).and(pmod(15, &[1, 4])),
        )
        .form(1, 15, 1, &[]),
        conj(
            "conj5.6/line2",
            c2b3(full().base(-1, 27)),
            fx2(-12, 2),
            2,
            gt(3).and(pmod(15, &[2, 8])),
        )
        .form(3, 5, 1, &[]),
        conj(
            "conj5.6/line3",
            c2b3(full().base(-1, 27)),
            zero(),
            2,
            gt(3).and(psym(15, -1)),
        ),
        conj(
            "conj5.6/line4",
            c2b3(full().base(-1, 192)),
            fx2(1, -2),
            2,
            gt(3).and(pmod(3, &[1])),
        )
        .form(1, 27, 4, &[]),
        conj(
            "conj5.6/line5",
            c2b3(full().base(-1, 192)),
            zero(),
            2,
            gt(3).and(pmod(3, &[2])),
        ),
        conj(
            "conj5.6/line6",
            c2b3(full().over(216)) - p_over(3) * c2b4(full().over(2304)),
            zero(),
            ModExp::new("((5+(-6/p))/2)", |p, _| (5 + jacobi(-6, p) as i64) / 2),
            gt(3),
        ),
        conj(
            "conj5.6/line7",
            c2b3(full().over(216)),
            fx2(4, -2),
            2,
            gt(3).and(pmod(24, &[1, 7])),
        )
        .form(1, 6, 1, &[]),
        conj(
            "conj5.6/line8",
            c2b3(full().over(216)),
            fx2(8, -2),
            2,
            gt(3).and(pmod(24, &[5, 11])),
        )
        .form(2, 3, 1, &[]),
        conj(
            "conj5.6/line9",
            c2b3(full().over(216)),
            zero(),
            2,
            gt(3).and(sym(-6, -1)),
        ),
        conj(
            "conj5.6/line10",
            c2b4(full().over(614656)),
            fx2(4, -2),
            2,
            gt(3).and(sym(-2, 1)),
        )
        .form(1, 2, 1, &[]),
        conj(
            "conj5.6/line11",
            c2b4(full().over(614656)),
            zero(),
            2,
            gt(3).and(ne(7)).and(pmod(8, &[5, 7])),
        ),
        conj(
            "conj5.6/line12",
            c2b4(full().base(-1, 12288)),
            fx2(4, -2),
            2,
            gt(3).and(pmod(12, &[1])),
        )
        .form(1, 1, 1, &[Side::XNotDiv(3), Side::YDiv(3)]),
        conj(
            "conj5.6/line13",
            c2b4(full().base(-1, 12288)),
            -(fxy_over3() * int(4) * fxy()),
            2,
            gt(3).and(pmod(12, &[5])),
        )
        .form(1, 1, 1, &[]),
        conj(
            "conj5.6/line14",
            c2b4(full().base(-1, 12288)),
            zero(),
            2,
            gt(3).and(pmod(4, &[3])),
        ),
        conj(
            "conj5.6/line15",
            one_over_q() * c2b3(full().lin(15, 4).base(-1, 27)),
            int(4) * q_over3() + bpoly_term(frac(4, 3)),
            3,
            gt(3),
        )
        .multi(),
        conj(
            "conj5.6/line16",
            one_over_q() * c2b3(full().lin(5, 1).base(-1, 192)),
            q_over3() + bpoly_term(frac(5, 18)),
            3,
            gt(3),
        )
        .multi(),
        conj(
            "conj5.6/line17",
            one_over_q() * c2b3(full().lin(6, 1).over(216)),
            q_over3() - bpoly_term(frac(5, 12)),
            3,
            gt(3),
        )
        .multi(),
        conj(
            "conj5.6/line18",
            one_over_q() * c2b4(full().lin(8, 1).over(2304)),
            q_over3() - bpoly_term(frac(5, 24)),
            3,
            gt(3),
        )
        .multi(),
        conj(
            "conj5.6/line19",
            one_over_q() * c2b4(full().lin(40, 3).over(614656)),
            int(3) * q_over3() - bpoly_term(frac(5, 392)),
            3,
            gt(3).and(ne(7)),
        )
        .multi(),
        conj(
            "conj5.6/line20",
            one_over_q() * c2b4(full().lin(28, 3).base(-1, 12288)),
            int(3) * q_over3() + bpoly_term(frac(5, 24)),
            3,
            gt(3),
        )
        .multi(),
        conj(
            "conj5.6/line21",
            one_over_q() * c2b4(upper().lin(8, 1).over(2304)),
            zero(),
            2,
            gt(3),
        )
        .multi(),
        conj(
            "rem5.2/line1",
            one_over_q() * c2b4(full().lin(5, 1).base(-1, 144)),
            q_over3() + bpoly_term(frac(5, 12)),
            3,
            gt(3),
        )
        .multi(),
        conj(
            "conj5.7/line1",
            c2b4(full().base(-1, 1024)),
            fx2(4, -2),
            2,
            pmod(20, &[1, 9]),
        )
        .form(1, 5, 1, &[]),
        conj(
            "conj5.7/line2",
            c2b4(full().base(-1, 1024)),
            fx2(-2, 2),
            2,
            pmod(20, &[3, 7]),
        )
        .form(1, 5, 2, &[]),
        conj(
            "conj5.7/line3",
            c2b4(full().base(-1, 1024)),
            zero(),
            2,
            sym(-5, -1),
        ),
        conj(
            "conj5.7/line4",
            one_over_q() * c2b4(full().lin(20, 3).base(-1, 1024)),
            int(3) * jac(-1) + int(3) * jac_prev(-1) * pp(2) * e(),
            3,
            odd(),
        )
        .multi(),
        conj(
            "conj5.7/line5",
            c2b4(full().over(20736)),
            fx2(4, -2),
            2,
            gt(3).and(pmod(40, &[1, 9, 11, 19])),
        )
        .form(1, 10, 1, &[]),
        conj(
            "conj5.7/line6",
            c2b4(full().over(20736)),
            fx2(-8, 2),
            2,
            gt(3).and(pmod(40, &[7, 13, 23, 37])),
        )
        .form(2, 5, 1, &[]),
        conj(
            "conj5.7/line7",
            c2b4(full().over(20736)),
            zero(),
            2,
            gt(3).and(sym(-10, -1)),
        ),
        conj(
            "conj5.7/line8",
            one_over_q() * c2b4(full().lin(10, 1).over(20736)),
            jac(-2) - jac_prev(-2) * frac(1, 48) * pp(2) * epoly(),
            3,
            gt(3),
        )
        .multi(),
        conj(
            "conj5.7/line9",
            c2b4(full().base(-1, 6635520)),
            fx2(4, -2),
            2,
            gt(5).and(pmod(20, &[1, 9])),
        )
        .form(1, 1, 1, &[Side::XNotDiv(5), Side::YDiv(5)]),
        conj(
            "conj5.7/line10",
            c2b4(full().base(-1, 6635520)),
            int(4) * fxy(),
            2,
            gt(5).and(pmod(20, &[13, 17])),
        )
        .form(1, 1, 1, &[Side::XPlusYDiv(5)]),
        conj(
            "conj5.7/line11",
            c2b4(full().base(-1, 6635520)),
            zero(),
            2,
            gt(5).and(pmod(4, &[3])),
        ),
        conj(
            "conj5.8/line1",
            b6b3c(full().base(-1, 32768)),
            jac_p(-2) * fx2(1, -2),
            2,
            psym(11, 1),
        )
        .form(1, 11, 4, &[]),
        conj(
            "conj5.8/line2",
            b6b3c(full().base(-1, 32768)),
            zero(),
            2,
            psym(11, -1),
        ),
        conj(
            "conj5.8/line3",
            one_over_q() * b6b3c(full().lin(154, 15).base(-1, 32768)),
            int(15) * jac(-2) + jac_prev(-2) * frac(15, 16) * pp(2) * epoly(),
            3,
            odd(),
        )
        .multi(),
        conj(
            "conj5.9/line1",
            c2b3(full().lin(9, 2).over(108)),
            zero(),
            ModExp::new("2a", |_, a| 2 * a as i64),
            pmod(3, &[1]),
        )
        .multi(),
        conj(
            "conj5.9/line2",
            c2b4(full().lin(16, 3).over(256)),
            zero(),
            ModExp::new("(2a+delta(p,3))", |p, a| 2 * a as i64 + delta(p, 3)),
            pmod(8, &[1, 3]),
        )
        .multi(),
        conj(
            "conj5.9/line3",
            c3(full().lin(4, 1).over(64)),
            zero(),
            ModExp::new("2a", |_, a| 2 * a as i64),
            pmod(4, &[1]),
        )
        .multi(),
        conj(
            "conj5.9/line4",
            b6b3c(full().lin(36, 5).over(1728)),
            zero(),
            ModExp::new("(2a+delta(p,5))", |p, a| 2 * a as i64 + delta(p, 5)),
            pmod(4, &[1]),
        )
        .multi(),
    ]
}

/// `binom(2k,k) binom(3k,k)`.
fn cb3(spec: SumSpec) -> Expr {
    sum(spec.factor(T::central(1)).factor(T::binom3(1)))
}

/// `binom(2k,k) binom(4k,2k)`.
fn cb4(spec: SumSpec) -> Expr {
    sum(spec.factor(T::central(1)).factor(T::binom4(1)))
}

/// `binom(6k,3k) binom(3k,k)`.
fn b6b3(spec: SumSpec) -> Expr {
    sum(spec.factor(T::binom6(1)).factor(T::binom3(1)))
}

/// `binom(3k,k) C_k`.
fn b3cat(spec: SumSpec) -> Expr {
    sum(spec.factor(T::binom3(1)).factors(T::catalan()))
}

fn a_plus(c: i64) -> ModExp {
    ModExp::new(format!("(a+{c})"), move |_, a| a as i64 + c)
}

fn section_five_pairs() -> Vec<Entry> {
    let x1mod4 = [Side::XMod { m: 4, r: 1 }];
    let x1mod4_yeven = [Side::XMod { m: 4, r: 1 }, Side::YEven];
    vec![
        conj(
            "conj5.10/line1",
            cb3(full().lin(1, 0).over(54)),
            zero(),
            a_plus(1),
            pmod(3, &[1]),
        )
        .multi(),
        conj(
            "conj5.10/line2",
            cb4(full().over(128)),
            sign_eighth() * two_x_minus(),
            2,
            pmod(8, &[1, 3]),
        )
        .form(1, 2, 1, &x1mod4),
        conj(
            "conj5.10/line3",
            cb4(full().lin(1, 0).over(128)),
            zero(),
            ModExp::new("(a+1+delta(p,3))", |p, a| a as i64 + 1 + delta(p, 3)),
            pmod(8, &[1, 3]),
        )
        .multi(),
        conj(
            "conj5.10/line4",
            b6b3(full().over(864)),
            fsign_x6() * two_x_minus(),
            2,
            pmod(12, &[1]),
        )
        .form(1, 1, 1, &x1mod4_yeven),
        conj(
            "conj5.10/line5",
            b6b3(full().over(864)),
            fxy_over3() * two_y_minus(),
            2,
            pmod(12, &[5]),
        )
        .form(1, 1, 1, &x1mod4_yeven),
        conj(
            "conj5.10/line6",
            b6b3(full().lin(1, 0).over(864)),
            zero(),
            a_plus(1),
            pmod(4, &[1]),
        )
        .multi(),
        conj(
            "conj5.10/line7",
            one_over_q() * pp(-2) * b6b3(full().lin(1, 0).over(864)),
            int(3),
            1,
            Applicability::new("p = 5", |p, _| p == 5),
        )
        .multi(),
        conj(
            "conj5.11/line1",
            sum(full().base(-1, 16).character3().factor(T::central(2))),
            sign_quarter_minus() * four_y_minus(),
            2,
            gt(3).and(pmod(12, &[7])),
        )
        .form(1, 3, 1, &[Side::YMod { m: 4, r: 1 }]),
        conj(
            "conj5.11/line2",
            sum(full()
                .lin(1, 0)
                .base(-1, 16)
                .character3()
                .factor(T::central(2))),
            sign_quarter_plus() * fy(),
            2,
            gt(3).and(pmod(12, &[7])),
        )
        .form(1, 3, 1, &[Side::YMod { m: 4, r: 1 }]),
        conj(
            "conj5.11/line3",
            sum(full()
                .over(16)
                .character3()
                .factor(T::upper_p_minus_one())
                .factor(T::central(2))),
            zero(),
            2,
            gt(3).and(pmod(12, &[1])),
        ),
        conj(
            "conj5.11/line4",
            sum(full().base(-1, 16).character3().factor(T::central(2))),
            zero(),
            1,
            gt(3).and(pmod(12, &[11])),
        ),
        conj(
            "conj5.12/line1",
            cb4(full().over(64)),
            jac(-2) - jac_prev(-2) * frac(3, 16) * pp(2) * epoly(),
            3,
            odd(),
        )
        .multi(),
        conj(
            "conj5.12/line2",
            sum(full()
                .over(64)
                .factor(T::central(1))
                .factors(T::catalan_even())),
            jac(-1) - jac_prev(-1) * int(3) * pp(2) * e(),
            3,
            odd(),
        )
        .multi(),
        conj(
            "conj5.12/line3",
            b6b3(full().over(432)),
            jac(-1) - jac_prev(-1) * frac(25, 9) * pp(2) * e(),
            3,
            gt(3),
        )
        .multi(),
        conj(
            "conj5.12/line4",
            sum(full().over(432).factor(T::binom6(1)).factors(T::catalan2())),
            q_over3(),
            2,
            gt(3),
        )
        .multi(),
        conj(
            "conj5.12/line5",
            sum(s(Range::full_from_one())
                .over(27)
                .factor(T::binom(2, 0, 1, 1, 1))
                .factor(T::binom(3, 0, 1, 1, 1))),
            int(2) * q_over3() - int(7),
            1,
            gt(3),
        )
        .multi(),
        conj(
            "conj5.12/line6",
            sum(s(Range::full_from_one())
                .over(27)
                .factor(T::binom(2, 0, 1, -1, 1))
                .factor(T::binom(3, 0, 1, -1, 1))),
            q_over3() - qq(1),
            2,
            gt(3),
        )
        .multi(),
        conj(
            "conj5.12/line7",
            cb3(full().over(27)),
            q_over3() - bpoly_term(frac(1, 3)),
            3,
            gt(3),
        )
        .multi(),
        conj(
            "conj5.12/line8",
            sum(full().over(27).factor(T::central(1)).factors(T::catalan2())),
            q_over3() - bpoly_term(frac(2, 3)),
            3,
            gt(3),
        )
        .multi(),
        conj(
            "conj5.12/line9",
            sum(full()
                .lin(4, 1)
                .over(27)
                .factor(T::central(1))
                .factors(T::catalan2())),
            q_over3(),
            4,
            gt(3),
        )
        .multi(),
        conj(
            "conj5.13/line1",
            cb3(full().over(24)) - p_over(3) * cb3(full().base(-1, 216)),
            zero(),
            2,
            gt(3),
        ),
        conj(
            "conj5.13/line2",
            cb3(full().over(24)),
            binom_third(1),
            2,
            gt(3).and(pmod(3, &[1])),
        ),
        conj(
            "conj5.13/line3",
            cb3(full().over(24)),
            pp(1) / binom_third(-1),
            2,
            gt(3).and(pmod(3, &[2])),
        ),
        conj(
            "conj5.13/line4",
            b3cat(full().over(24)) - frac(1, 9) * p_over(3) * b3cat(full().base(-1, 216)),
            zero(),
            1,
            gt(3),
        ),
        conj(
            "conj5.13/line5",
            b3cat(full().over(24)),
            frac(1, 2) * binom_third_auto(),
            1,
            gt(3),
        ),
        conj(
            "conj5.13/line6",
            cb3(full().lin(1, 2).over(24)),
            fx(),
            2,
            gt(3).and(pmod(3, &[1])),
        )
        .form(1, 27, 4, &[Side::XMod { m: 3, r: 2 }]),
        conj(
            "conj5.13/line7",
            cb3(full().lin(9, 2).base(-1, 216)),
            fx(),
            2,
            gt(3).and(pmod(3, &[1])),
        )
        .form(1, 27, 4, &[Side::XMod { m: 3, r: 2 }]),
        conj(
            "conj5.14/line1",
            sum(full()
                .over(48)
                .factor(T::central(1))
                .factor(T::binom(4, 0, 2, 1, 1))),
            zero(),
            2,
            gt(3),
        ),
        conj(
            "conj5.14/line2",
            cb4(full().over(48)),
            two_x_minus(),
            2,
            gt(3).and(pmod(3, &[1])),
        )
        .form(1, 3, 1, &[Side::XMod { m: 3, r: 1 }]),
        conj(
            "conj5.14/line3",
            cb4(full().lin(1, 1).over(48)),
            fx(),
            2,
            gt(3).and(pmod(3, &[1])),
        )
        .form(1, 3, 1, &[Side::XMod { m: 3, r: 1 }]),
        conj(
            "conj5.14/line4",
            cb4(full().over(48)),
            frac(3, 2) * pp(1) / binom_half_over(6),
            2,
            gt(3).and(pmod(3, &[2])),
        ),
        conj(
            "conj5.14/line5",
            cb4(full().over(63)),
            p_over(3) * two_x_minus(),
            2,
            gt(3).and(psym(7, 1)),
        )
        .form(1, 7, 1, &[Side::XJacobi { m: 7, val: 1 }]),
        conj(
            "conj5.14/line6",
            cb4(full().lin(1, 8).over(63)),
            int(8) * p_over(3) * fx(),
            2,
            gt(3).and(psym(7, 1)),
        )
        .form(1, 7, 1, &[Side::XJacobi { m: 7, val: 1 }]),
        conj(
            "conj5.14/line7",
            cb4(full().over(63)),
            zero(),
            1,
            gt(3).and(psym(7, -1)),
        ),
        conj(
            "conj5.14/line8",
            sum(full().over(63).factor(T::central(1)).factor(T::binom4(2))),
            zero(),
            1,
            gt(3).and(psym(7, -1)),
        ),
        conj(
            "conj5.14/line9",
            cb4(full().over(72)),
            jac_p(6) * two_x_minus(),
            2,
            gt(3).and(pmod(4, &[1])),
        )
        .form(1, 1, 1, &x1mod4_yeven),
        conj(
            "conj5.14/line10",
            cb4(full().lin(-1, 1).over(72)),
            jac_p(6) * fx(),
            2,
            gt(3).and(pmod(4, &[1])),
        )
        .form(1, 1, 1, &x1mod4_yeven),
        conj(
            "conj5.14/line11",
            cb4(full().over(72)),
            jac_p(6) * frac(2, 3) * pp(1) / binom_half_over(4),
            2,
            gt(3).and(pmod(4, &[3])),
        ),
    ]
}

fn section_five_higher() -> Vec<Entry> {
    vec![
        conj(
            "az/line1",
            sum(half().coeff(32, 160, 205).base(-1, 1).factor(T::central(5))),
            int(32) * pp(2) + frac(896, 3) * pp(5) * b3(),
            6,
            gt(3),
        ),
        conj(
            "conj5.15/line1",
            sum(full()
                .coeff(1, 7, 18)
                .base(-1, 128)
                .factor(T::central(2))
                .factor(T::inner(InnerShape::QuarterBinoms))),
            pp(2) * jac_p(2),
            3,
            odd(),
        ),
        conj(
            "conj5.15/line2",
            sum(full()
                .coeff(5, 26, 40)
                .base(-1, 256)
                .factor(T::central(2))
                .factor(T::inner(InnerShape::BinomSquaredCentral))),
            int(5) * pp(2),
            3,
            odd(),
        ),
        conj(
            "conj5.15/line3",
            sum(full()
                .coeff(3, 11, 12)
                .base(-1, 32)
                .factor(T::inner(InnerShape::BinomFourthCentral))),
            int(3) * pp(2) + frac(7, 4) * pp(5) * b3(),
            6,
            odd(),
        ),
        conj(
            "conj5.15/line4",
            sum(full()
                .coeff(0, 1, 3)
                .over(16)
                .factor(T::inner(InnerShape::BinomSquaredCentral))),
            int(-4) * pp(4) * q2() + int(6) * pp(5) * (q2() * q2()),
            6,
            gt(3),
        ),
    ]
}

fn build() -> Vec<CongruenceSpec> {
    let mut all = Vec::new();
    for group in [
        section_one(),
        sections_two_to_four(),
        section_five_cubes(),
        section_five_products(),
        section_five_pairs(),
        section_five_higher(),
    ] {
        all.extend(group.into_iter().map(|e| e.0));
    }
    all
}

/// Every registered congruence, in registry order.
pub fn catalog() -> &'static [CongruenceSpec] {
    static CATALOG: OnceLock<Vec<CongruenceSpec>> = OnceLock::new();
    CATALOG.get_or_init(build)
}

pub fn lookup(id: &str) -> Option<&'static CongruenceSpec> {
    catalog().iter().find(|s| s.id == id)
}

/// Entries whose id matches one of `patterns`: an exact id, a prefix ending
/// in `*`, or `*` alone for everything.
pub fn select(patterns: &[String]) -> Vec<&'static CongruenceSpec> {
    catalog()
        .iter()
        .filter(|s| {
            patterns.iter().any(|pat| match pat.strip_suffix('*') {
                Some(prefix) => s.id.starts_with(prefix),
                None => s.id == *pat,
            })
        })
        .collect()
}
