//! Registry of congruences, the checker, and prime-range sweeps.

pub mod atoms;
pub mod check;
pub mod entries;
pub mod eval;
pub mod expr;
pub mod types;

pub use check::{
    check, check_with_guard, exceptional_report, run_range, run_specs, search_exceptional, to_csv,
    to_json_lines, to_text, CheckResult, ExceptionalHit, RunConfig, Summary, Verdict,
};
pub use entries::{catalog, lookup, select};
pub use expr::Expr;
pub use types::{Applicability, CongruenceSpec, ModExp, Status};

#[cfg(test)]
mod tests;
