use num_bigint::BigInt;
use num_rational::BigRational;

use super::*;

fn r(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

#[test]
fn identity_examples() {
    let c = verify_identity("eq2.5", 2).unwrap();
    assert_eq!(
        (c.lhs.clone(), c.rhs.clone(), c.equal),
        (r(5, 1), r(5, 1), true)
    );
    let c = verify_identity("eq2.7", 1).unwrap();
    assert_eq!((c.lhs.clone(), c.equal), (r(1, 2), true));
    let c = verify_identity("chu-vandermonde", 3).unwrap();
    assert_eq!((c.lhs.clone(), c.equal), (r(-1, 1), true));
    assert!(matches!(
        verify_identity("eq9.9", 3),
        Err(crate::Error::UnknownId(_))
    ));
    assert!(verify_identity("eq2.5", 0).is_err());
}

#[test]
fn every_identity_small_n() {
    for (id, lo, _) in IDENTITIES {
        for n in *lo..=30 {
            let c = verify_identity(id, n).unwrap();
            assert!(c.equal, "{id} at n = {n}: {} vs {}", c.lhs, c.rhs);
        }
    }
}

#[test]
fn trig_sum_period_eight() {
    for n in 0..=500u64 {
        let c = verify_identity("trig-sum", n).unwrap();
        assert!(c.equal);
        let expect = [1, -1, -1, 1][(n % 4) as usize];
        assert_eq!(c.lhs, r(expect, 1), "n = {n}");
    }
}

#[test]
fn triple_examples() {
    let t = sequence_triple(1);
    assert_eq!(
        (t.s.clone(), t.t.clone(), t.r.clone()),
        (r(8, 1), r(1, 1), r(1, 1))
    );
    let t = sequence_triple(2);
    assert_eq!(
        (t.s.clone(), t.t.clone(), t.r.clone()),
        (r(120, 1), r(5, 1), r(5, 1))
    );
    let t = sequence_triple(3);
    assert_eq!((t.t.clone(), t.r.clone()), (r(46, 1), r(46, 1)));
    assert!(t.s_divisible());
}

#[test]
fn recursions_hold() {
    let rep = verify_recursions(60);
    assert!(rep.holds(), "{:?}", rep.first_failure);
}

#[test]
fn divisibility_examples() {
    let c = verify_divisibility("conj5.1/first", 2).unwrap();
    assert_eq!(c.quotient, r(1, 1));
    assert!(c.holds);
    let c = verify_divisibility("conj5.15/a_m", 2).unwrap();
    assert_eq!(c.quotient, r(1, 1));
    assert!(c.holds);
    assert!(verify_divisibility("lemma4.1", 50).unwrap().holds);
    assert!(verify_divisibility("nope", 5).is_err());
    assert_eq!((delta(1), delta(3), delta(9), delta(15)), (1, 1, 1, 0));
}

#[test]
fn three_allowance_is_used() {
    // 2n+1 = 27 at n = 13: the allowance is granted, and the plain quotient
    // is checked only up to that factor.
    let c = verify_divisibility("conj5.3/last", 13).unwrap();
    assert_eq!(c.allowance, 1);
    assert!(c.holds);
    assert_eq!(
        verify_divisibility("conj5.3/last", 12).unwrap().allowance,
        0
    );
}

#[test]
fn a_m_parity() {
    for m in 2..=20 {
        let c = verify_divisibility("conj5.15/a_m", m).unwrap();
        assert!(c.holds, "m = {m}: {}", c.quotient);
    }
}

#[test]
fn s_primality_small() {
    assert!(scan_s_primality(10).is_empty());
    assert!(scan_s_primality(100).is_empty());
}

#[test]
fn primes_satisfy_s_congruence() {
    for p in crate::arith::sieve_primes(2, 100) {
        let s = sequence_triple(p).s;
        let d = (s - r(8, 1)) / r((p * p * p) as i64, 1);
        assert!(d.is_integer(), "p = {p}");
    }
}

#[test]
fn numeric_examples() {
    for id in ["morley", "glaisher", "sd-lifting", "lemma4.2", "lemma2.1"] {
        assert!(verify_numeric_congruence(id, 5).unwrap(), "{id}");
        assert!(verify_numeric_congruence(id, 7).unwrap(), "{id}");
    }
    assert!(verify_numeric_congruence("morley", 3).is_err());
    assert!(verify_numeric_congruence("sd-lifting", 3).unwrap());
    assert!(verify_numeric_congruence("glaisher", 9).is_err());
    assert!(verify_numeric_congruence("nope", 5).is_err());
}

#[test]
fn t_guesses_are_observations() {
    let g = scan_t_guesses(40);
    assert!(g.three_mod_four.is_empty());
    assert!(g.probable_primes.is_empty());
    assert!(is_probable_prime(&BigInt::from(1_000_000_007u64)));
    assert!(!is_probable_prime(&BigInt::from(1_000_000_007u64 * 3)));
}

#[test]
fn small_suite_passes() {
    let cfg = SuiteConfig {
        n_max: 20,
        div_max: 20,
        am_max: 16,
        scan_bound: 50,
        numeric_p_max: 30,
        t_scan: 20,
    };
    let rows = run_identity_suite(&cfg);
    assert!(
        rows.iter().all(|r| !r.verdict.is_fail()),
        "{}",
        rows_to_text(&rows)
    );
    let json = rows_to_json_lines(&rows);
    let first: serde_json::Value = serde_json::from_str(json.lines().next().unwrap()).unwrap();
    assert_eq!(first["verdict"], "pass");
    assert!(rows_to_csv(&rows).starts_with("id,kind,n,verdict,detail"));
}
