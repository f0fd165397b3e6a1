use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_supercong"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).expect("utf-8")
}

#[test]
fn search_exceptional_prints_the_two_primes() {
    let o = run(&["search-exceptional", "--bound", "1000"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).lines().next(), Some("149 241"));
}

#[test]
fn check_single_row_json() {
    let o = run(&[
        "check",
        "--ids",
        "thm1.1/eq1.1",
        "--primes",
        "5..5",
        "--format",
        "json",
        "--no-timestamp",
    ]);
    assert!(o.status.success());
    let text = stdout(&o);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 2, "{text}");
    let row: serde_json::Value = serde_json::from_str(lines[0]).unwrap();
    for field in [
        "id", "p", "a", "lhsClass", "rhsClass", "modulus", "verdict", "status",
    ] {
        assert!(row.get(field).is_some(), "missing {field}: {row}");
    }
    assert_eq!(row["verdict"], "pass");
    assert_eq!(row["lhsClass"], row["rhsClass"]);
    let summary: serde_json::Value = serde_json::from_str(lines[1]).unwrap();
    assert_eq!(summary["summary"]["pass"], 1);
    assert!(summary.get("timestamp").is_none());
}

#[test]
fn list_has_the_catalog() {
    let o = run(&["list"]);
    assert!(o.status.success());
    assert!(stdout(&o).lines().count() >= 80);
    let o = run(&["list", "--ids", "thm1.1/*", "--format", "csv"]);
    let t = stdout(&o);
    assert!(t.starts_with("id,kind,status,statement"));
    assert!(t.lines().skip(1).all(|l| l.starts_with("thm1.1/")));
}

#[test]
fn invalid_flags_exit_nonzero() {
    assert!(!run(&["check", "--primes", "9"]).status.success());
    assert!(!run(&["frobnicate"]).status.success());
    assert!(!run(&["series", "--digits", "500"]).status.success());
    assert!(!run(&["check", "--ids", "no-such-id"]).status.success());
}

#[test]
fn reports_are_reproducible_without_timestamp() {
    let args = [
        "check",
        "--ids",
        "thm1.2/*",
        "--primes",
        "5..60",
        "--no-timestamp",
    ];
    let (a, b) = (run(&args), run(&args));
    assert_eq!(a.stdout, b.stdout);
    let stamped = stdout(&run(&["check", "--ids", "thm1.2/*", "--primes", "5..7"]));
    assert!(stamped.contains("# generated "));
}

#[test]
fn conjecture_sweep_and_out_file() {
    let dir = std::env::temp_dir().join(format!("supercong-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("conj.csv");
    let o = run(&[
        "check",
        "--ids",
        "conj1.1/*",
        "--primes",
        "3..40",
        "--format",
        "csv",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let body = std::fs::read_to_string(&path).unwrap();
    assert!(body.lines().count() > 10);
    assert!(String::from_utf8_lossy(&o.stderr).contains("conjecture failures 0"));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn identities_and_series_commands() {
    let o = run(&[
        "identities",
        "--n-max",
        "10",
        "--ids",
        "eq2.*",
        "--format",
        "json",
        "--no-timestamp",
    ]);
    assert!(o.status.success());
    let t = stdout(&o);
    let rows: Vec<serde_json::Value> = t
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    assert!(rows.len() > 10);
    assert!(rows[..rows.len() - 1]
        .iter()
        .all(|r| r["verdict"] == "pass" && r["id"].as_str().unwrap().starts_with("eq2.")));

    let o = run(&[
        "series",
        "--digits",
        "30",
        "--ids",
        "zeilberger-pi2over6,ramanujan/*",
        "--format",
        "json",
        "--no-timestamp",
    ]);
    assert!(o.status.success());
    let t = stdout(&o);
    let rows: Vec<serde_json::Value> = t
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    assert_eq!(rows.len(), 5);
    for r in &rows[..4] {
        for field in ["id", "claimed", "digits", "tailBound", "verdict"] {
            assert!(r.get(field).is_some());
        }
        assert_eq!(r["verdict"], "pass");
    }
}

#[test]
fn misprinted_series_fails_the_run() {
    let o = run(&["series", "--digits", "20", "--ids", "rem5.2/series1"]);
    assert_eq!(o.status.code(), Some(1));
}
