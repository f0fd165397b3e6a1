use super::*;
use crate::arith::sieve_primes;

fn ids(pat: &str) -> Vec<String> {
    vec![pat.to_string()]
}

#[test]
fn registry_shape() {
    let all = catalog();
    assert!(all.len() >= 80, "{} entries", all.len());
    let mut seen = std::collections::HashSet::new();
    for s in all {
        assert!(seen.insert(s.id.as_str()), "duplicate id {}", s.id);
    }
}

#[test]
fn mod_exp_lookups() {
    let e = lookup("thm1.1/eq1.1").unwrap();
    assert_eq!(e.mod_exp.at(7, 1), 3);
    assert!(e.is_applicable(3, 1));
    let e = lookup("conj1.3/eq1.18").unwrap();
    assert_eq!(e.mod_exp.at(7, 1), 5);
    assert_eq!(e.mod_exp.at(7, 2), 6);
    assert!(e.is_applicable(7, 1) && e.is_applicable(5, 2) && !e.is_applicable(5, 1));
    let e = lookup("conj5.9/line1").unwrap();
    assert_eq!(e.mod_exp.at(7, 2), 4);
    assert!(e.is_applicable(7, 1) && !e.is_applicable(5, 1));
    let e = lookup("conj5.6/line6").unwrap();
    assert_eq!(e.mod_exp.at(5, 1), 3);
    assert_eq!(e.mod_exp.at(13, 1), 2);
}

#[test]
fn spot_checks() {
    let r = check(lookup("thm1.1/eq1.1").unwrap(), 5, 1);
    assert_eq!(r.verdict, Verdict::Pass);
    assert_eq!(r.lhs_class, "26 + O(5^3)");
    assert_eq!(r.rhs_class, "26 + O(5^3)");
    let r = check(lookup("thm1.3/eq1.15").unwrap(), 5, 1);
    assert_eq!(r.verdict, Verdict::Pass);
    assert_eq!(r.lhs_class, "133 + O(5^4)");
    let r = check(lookup("thm1.1/eq1.2").unwrap(), 3, 1);
    assert_eq!(r.verdict, Verdict::Skipped("inapplicable".into()));
    let r = check(lookup("thm1.2/eq1.9").unwrap(), 7, 1);
    assert_eq!(r.verdict, Verdict::Pass, "{r:?}");
}

#[test]
fn exceptional_primes() {
    assert_eq!(search_exceptional(1000), vec![149, 241]);
    assert!(search_exceptional(100).is_empty());
    assert!(search_exceptional(4).is_empty());
    for hit in exceptional_report(250).unwrap() {
        assert!(hit.collapses_mod_p3, "{hit:?}");
    }
}

#[test]
fn empty_selection() {
    assert!(run_range(&[], 5, 97, 1, &RunConfig::default()).is_empty());
}

#[test]
fn damaged_rhs_fails() {
    let mut spec = lookup("thm1.1/eq1.1").unwrap().clone();
    spec.rhs = spec.rhs + expr::Expr::PPow(2);
    let r = check(&spec, 7, 1);
    assert_eq!(r.verdict, Verdict::Fail);
    assert!(r.diagnostic.is_some());
}

#[test]
fn theorems_small_primes() {
    let specs: Vec<_> = catalog()
        .iter()
        .filter(|s| s.status == Status::Theorem)
        .collect();
    let res = run_specs(&specs, 3, 61, 2, &RunConfig::default());
    let bad: Vec<_> = res.iter().filter(|r| r.verdict.is_fail()).collect();
    assert!(
        bad.is_empty(),
        "{}",
        to_text(&bad.into_iter().cloned().collect::<Vec<_>>())
    );
}

#[test]
fn conjectures_small_primes() {
    let specs: Vec<_> = catalog()
        .iter()
        .filter(|s| s.status == Status::Conjecture)
        .collect();
    let res = run_specs(
        &specs,
        3,
        43,
        2,
        &RunConfig {
            a_cap_prime: 7,
            ..Default::default()
        },
    );
    let bad: Vec<_> = res
        .iter()
        .filter(|r| r.verdict.is_fail())
        .cloned()
        .collect();
    assert!(bad.is_empty(), "{}", to_text(&bad));
}

#[test]
fn reports_are_deterministic() {
    let a = run_range(&ids("thm1.2/*"), 5, 41, 1, &RunConfig::default());
    let b = run_range(
        &ids("thm1.2/*"),
        5,
        41,
        1,
        &RunConfig {
            workers: Some(1),
            ..Default::default()
        },
    );
    assert_eq!(to_json_lines(&a), to_json_lines(&b));
    assert_eq!(a.len(), 7 * (sieve_primes(5, 41).len()));
    let csv = to_csv(&a);
    assert!(csv.starts_with("id,p,a,lhsClass"));
}

#[test]
fn every_entry_detects_a_perturbation() {
    for spec in catalog() {
        let Some(p) = sieve_primes(3, 80)
            .into_iter()
            .find(|&p| check(spec, p, 1).verdict.is_pass())
        else {
            panic!("{} never passes below 80", spec.id);
        };
        let e = spec.mod_exp.at(p, 1);
        let mut bent = spec.clone();
        bent.rhs = bent.rhs + expr::Expr::PPow(e - 1);
        let r = check(&bent, p, 1);
        assert_eq!(r.verdict, Verdict::Fail, "{} at p={p}", spec.id);
    }
}
