use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};
use proptest::prelude::*;

use super::*;
use crate::arith::{sieve_primes, PadicTracked};
use crate::special::euler_number;

fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

fn binom(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let mut acc = BigInt::one();
    for j in 0..k {
        acc = acc * (n - j) / (j + 1);
    }
    acc
}

fn residue(x: &PadicTracked, e: u32) -> BigUint {
    x.residue(e).unwrap()
}

fn reduce(x: &BigRational, p: u64, e: u32) -> BigUint {
    PadicTracked::from_rational_abs(x, p, e as i64)
        .residue(e)
        .unwrap()
}

#[test]
fn eq_1_1_at_five() {
    let spec = SumSpec::new(Range::full())
        .over(2)
        .factor(TermFactor::central(1));
    assert_eq!(sum_exact(&spec, 5, 1).unwrap(), q(83, 8));
    let s = eval_sum(&spec, 5, 1, 3).unwrap();
    assert_eq!(residue(&s, 3), BigUint::from(26u32));
    // 1 - 25 E_2 = 26
    let rhs = BigInt::one() - 25 * euler_number(2);
    assert_eq!(rhs, BigInt::from(26));
}

#[test]
fn eq_1_2_at_five() {
    let spec = SumSpec::new(Range::half_from_one())
        .k_power(-1)
        .factor(TermFactor::central(1));
    assert_eq!(sum_exact(&spec, 5, 1).unwrap(), q(5, 1));
    let s = eval_sum(&spec, 5, 1, 2).unwrap();
    assert_eq!(residue(&s, 2), BigUint::from(5u32));
}

#[test]
fn eq_1_15_at_five() {
    let spec = SumSpec::new(Range::full())
        .lin(21, 8)
        .factor(TermFactor::central(3));
    let direct: BigInt = (0..5u64)
        .map(|k| BigInt::from(21 * k + 8) * binom(2 * k, k).pow(3))
        .sum();
    assert_eq!(direct, BigInt::from(6427008u64 * 5));
    let s = eval_sum(&spec, 5, 1, 5).unwrap().shift(-1);
    assert_eq!(residue(&s, 4), BigUint::from(133u32));
}

#[test]
fn stream_examples() {
    let v: Vec<_> = central_binom_stream(5, 2, 3).collect();
    assert_eq!(v.len(), 4);
    assert_eq!(v[0].valuation(), Some(0));
    assert_eq!(v[3].valuation(), Some(1));
    assert_eq!(v[3].unit(), Some(&BigUint::from(4u32)));
    let v: Vec<_> = central_binom_stream(7, 2, 4).collect();
    assert_eq!(v[4].valuation(), Some(1));
    assert_eq!(v[4].unit(), Some(&BigUint::from(10u32)));
}

fn carries(a: u64, b: u64, p: u64) -> i64 {
    let (mut a, mut b, mut c, mut n) = (a, b, 0, 0);
    while a > 0 || b > 0 || c > 0 {
        let s = a % p + b % p + c;
        c = if s >= p { 1 } else { 0 };
        n += c as i64;
        a /= p;
        b /= p;
    }
    n
}

#[test]
fn stream_matches_direct_and_kummer() {
    for p in [3u64, 5, 47, 53] {
        let kmax = (p * p - 1).min(2000);
        let e = 4;
        let mut exact = BigInt::one();
        for (k, x) in central_binom_stream(p, e, kmax).enumerate() {
            let k = k as u64;
            if k > 0 {
                exact = exact * (2 * (2 * k - 1)) / k;
            }
            let direct = PadicTracked::from_int(&exact, p, e + DEFAULT_GUARD);
            assert_eq!(x, direct, "p={p}, k={k}");
            assert_eq!(x.valuation(), Some(carries(k, k, p)), "p={p}, k={k}");
            if p / 2 < k && k < p {
                assert_eq!(x.valuation(), Some(1));
            }
        }
    }
}

#[test]
fn lemma_2_1_product() {
    for p in sieve_primes(5, 200) {
        let m = BigInt::from(p * p);
        for k in 1..p {
            let lhs = BigInt::from(k) * binom(2 * k, k) * binom(2 * (p - k), p - k);
            let sign = if (2 * k / p) % 2 == 1 { 1 } else { -1 };
            let rhs = BigInt::from(sign * 2 * p as i64);
            assert!(((lhs - rhs) % &m).is_zero(), "p={p}, k={k}");
        }
    }
}

#[test]
fn rational_binom_examples() {
    assert_eq!(rational_binom(&q(7, 3), 0), q(1, 1));
    assert_eq!(rational_binom(&q(-1, 4), 2), q(5, 32));
    let mut four = BigInt::one();
    for k in 0..=50u64 {
        let expected = BigRational::new(
            binom(2 * k, k),
            if k % 2 == 0 {
                four.clone()
            } else {
                -four.clone()
            },
        );
        assert_eq!(rational_binom(&q(-1, 2), k), expected);
        four *= 4;
    }
}

#[test]
fn inner_examples() {
    assert_eq!(
        inner_convolution_exact(InnerShape::BinomSquaredCentral, 0),
        q(1, 1)
    );
    assert_eq!(
        inner_convolution_exact(InnerShape::BinomSquaredCentral, 1),
        q(4, 1)
    );
    assert_eq!(
        inner_convolution_exact(InnerShape::QuarterBinoms, 1),
        q(5, 8)
    );
    assert_eq!(
        inner_convolution_exact(InnerShape::BinomFourthCentral, 1),
        q(4, 1)
    );
    for shape in [
        InnerShape::QuarterBinoms,
        InnerShape::BinomSquaredCentral,
        InnerShape::BinomFourthCentral,
    ] {
        for p in [3u64, 5, 7, 11] {
            for n in 0..3 * p {
                let exact = inner_convolution_exact(shape, n);
                let tracked = inner_convolution(shape, n, p, 5).unwrap();
                assert_eq!(
                    residue(&tracked, 5),
                    reduce(&exact, p, 5),
                    "{shape:?} p={p} n={n}"
                );
            }
        }
    }
}

fn sample_specs() -> Vec<SumSpec> {
    vec![
        SumSpec::new(Range::half_from_one())
            .k_power(-2)
            .factor(TermFactor::central(-1)),
        SumSpec::new(Range::full_from_one())
            .k_power(-3)
            .base(-1, 1)
            .factor(TermFactor::central(-1)),
        SumSpec::new(Range::upper_half())
            .k_power(-1)
            .over(4)
            .factor(TermFactor::central(1)),
        SumSpec::new(Range::half())
            .lin(6, 1)
            .over(256)
            .factor(TermFactor::central(3)),
        SumSpec::new(Range::full())
            .coeff(32, 160, 205)
            .base(-1, 1)
            .factor(TermFactor::central(5)),
        SumSpec::new(Range::full_from_one())
            .lin(21, -8)
            .k_power(-3)
            .factor(TermFactor::central(-3)),
        SumSpec::new(Range::full())
            .over(27)
            .factor(TermFactor::binom(2, 0, 1, 1, 1))
            .factor(TermFactor::binom(3, 0, 1, 1, 1)),
        SumSpec::new(Range::full())
            .over(432)
            .factor(TermFactor::binom6(1))
            .factors(TermFactor::catalan2()),
        SumSpec::new(Range::full())
            .over(64)
            .factor(TermFactor::central(1))
            .factors(TermFactor::catalan_even()),
        SumSpec::new(Range::full())
            .over(16)
            .character3()
            .factor(TermFactor::upper_p_minus_one())
            .factor(TermFactor::central(2)),
        SumSpec::new(Range::up_to_fraction(2, 3))
            .lin(21, 8)
            .factor(TermFactor::central(3)),
        SumSpec::new(Range::full())
            .coeff(1, 7, 18)
            .base(-1, 128)
            .factor(TermFactor::central(2))
            .factor(TermFactor::inner(InnerShape::QuarterBinoms)),
        SumSpec::new(Range::full())
            .coeff(0, 1, 3)
            .over(16)
            .factor(TermFactor::inner(InnerShape::BinomSquaredCentral)),
        SumSpec::new(Range::full())
            .coeff(3, 11, 12)
            .base(-1, 32)
            .factor(TermFactor::inner(InnerShape::BinomFourthCentral)),
        SumSpec::new(Range::full())
            .over(48)
            .factor(TermFactor::central(1))
            .factor(TermFactor::binom(4, 0, 2, 1, 1)),
        SumSpec::new(Range::full_from_one())
            .k_power(-4)
            .factor(TermFactor::central(-1)),
        SumSpec::new(Range::full())
            .base(9, 25)
            .factor(TermFactor::rational_binom(-1, 3, 2)),
    ]
}

#[test]
fn evaluator_matches_exact_sums() {
    for spec in sample_specs() {
        for (p, a) in [
            (3u64, 1u32),
            (5, 1),
            (7, 1),
            (11, 1),
            (13, 1),
            (3, 2),
            (5, 2),
        ] {
            if eval_sum(&spec, p, a, 1).is_err() {
                // binom(-1/3, k) at p = 3
                assert_eq!(p, 3);
                continue;
            }
            let exact = sum_exact(&spec, p, a).unwrap();
            let target = 6;
            let tracked = eval_sum_to(&spec, p, a, target).unwrap();
            assert!(tracked.abs_precision() >= target, "{spec} at {p}^{a}");
            let expected = PadicTracked::from_rational_abs(&exact, p, target);
            assert_eq!(tracked, expected, "{spec} at {p}^{a}");
        }
    }
}

#[test]
fn rejects_bad_specs() {
    let bad = SumSpec::new(Range::full()).k_power(-1);
    assert!(eval_sum(&bad, 5, 1, 2).is_err());
    let bad = SumSpec::new(Range::full()).factor(TermFactor::rational_binom(1, 5, 1));
    assert!(eval_sum(&bad, 5, 1, 2).is_err());
    assert!(eval_sum(&SumSpec::new(Range::full()), 9, 1, 2).is_err());
}

#[test]
fn negative_valuation_bound() {
    let spec = SumSpec::new(Range::full_from_one())
        .k_power(-3)
        .factor(TermFactor::central(-3));
    // binom(2k,k)^{-3} for p/2 < k < p gives -3; k^{-3} never below 0 for k < p.
    assert_eq!(max_negative_valuation(&spec, 7, 1).unwrap(), 3);
    let spec = SumSpec::new(Range::full())
        .over(2)
        .factor(TermFactor::central(1));
    assert_eq!(max_negative_valuation(&spec, 7, 1).unwrap(), 0);
}

#[test]
fn empty_range_is_exact_zero() {
    let spec = SumSpec::new(Range::new(Bound::constant(5), Bound::constant(2)));
    assert!(eval_sum(&spec, 7, 1, 3).unwrap().is_exact_zero());
}

proptest! {
    #[test]
    fn linearity(c0 in -20i64..20, c1 in -20i64..20, d0 in -20i64..20, d1 in -20i64..20, idx in 0usize..12, which in 0usize..17) {
        let p = sieve_primes(3, 60)[idx];
        let base = sample_specs()[which].clone();
        let f = base.clone().coeff(c0, c1, 0);
        let g = base.clone().coeff(d0, d1, 0);
        let h = base.coeff(c0 + d0, c1 + d1, 0);
        let t = 5;
        prop_assume!(eval_sum(&f, p, 1, 1).is_ok());
        let sf = eval_sum_to(&f, p, 1, t).unwrap();
        let sg = eval_sum_to(&g, p, 1, t).unwrap();
        let sh = eval_sum_to(&h, p, 1, t).unwrap();
        prop_assert_eq!(sf.add(&sg).truncate(t), sh.truncate(t));
    }

    #[test]
    fn guard_independence(idx in 0usize..15, which in 0usize..17, t in 1i64..6) {
        let p = sieve_primes(3, 60)[idx];
        let spec = &sample_specs()[which];
        prop_assume!(eval_sum(spec, p, 1, 1).is_ok());
        let lo = eval_sum_to(spec, p, 1, t).unwrap();
        let hi = eval_sum_to(spec, p, 1, t + 2).unwrap();
        prop_assert_eq!(hi.truncate(t), lo.truncate(t));
    }
}
