//! Lowering the exact-table ceiling turns entries that need `B_{p-2}(1/3)` or
//! `E_{p-3}(1/4)` into skips above it. Kept in its own binary because the
//! ceiling is process-wide.

use supercong::catalog::expr::Special;
use supercong::catalog::{catalog, check, Verdict};
use supercong::special::tables::{exact_ceiling, set_exact_ceiling};

#[test]
fn beyond_ceiling_is_skipped() {
    let spec = catalog()
        .iter()
        .find(|s| {
            s.lhs.uses(Special::BernoulliPolyThird) || s.rhs.uses(Special::BernoulliPolyThird)
        })
        .expect("some entry uses B_{p-2}(1/3)");
    let p = (41..200)
        .find(|&p| supercong::arith::is_prime(p) && spec.is_applicable(p, 1))
        .unwrap();
    assert!(check(spec, p, 1).verdict.is_pass());
    let old = exact_ceiling();
    set_exact_ceiling(30);
    let r = check(spec, p, 1);
    assert_eq!(
        r.verdict,
        Verdict::Skipped("outOfExactRange".into()),
        "{}",
        spec.id
    );
    set_exact_ceiling(old);
    assert!(check(spec, p, 1).verdict.is_pass());
}
