use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_delta-springer"))
        .args(args)
        .env_remove("DELTA_SPRINGER_MAX_MACDONALD_N")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn frobenius_small_case() {
    for route in ["skew", "battery", "hl"] {
        let o = run(&["frobenius", "--n", "2", "--lambda", "1", "--s", "2", "--route", route]);
        assert!(o.status.success(), "{route}");
        assert_eq!(stdout(&o).trim(), "(1+q)*s[2] + q*s[1,1]", "{route}");
    }
    // charge instead of cocharge: the q-reversal
    let o = run(&[
        "frobenius",
        "--n",
        "2",
        "--lambda",
        "1",
        "--s",
        "2",
        "--route",
        "charge",
    ]);
    assert_eq!(stdout(&o).trim(), "(1+q)*s[2] + s[1,1]");
}

#[test]
fn frobenius_rnk_matches_delta() {
    let f = run(&["frobenius", "--n", "4", "--rnk", "2", "--format", "json"]);
    let d = run(&["delta", "--n", "4", "--k", "1", "--t0", "--revq", "--omega"]);
    assert!(f.status.success() && d.status.success());
    let f: serde_json::Value = serde_json::from_str(&stdout(&f)).unwrap();
    let d: serde_json::Value = serde_json::from_str(&stdout(&d)).unwrap();
    assert_eq!(f, d);
}

#[test]
fn frobenius_csv() {
    let o = run(&["frobenius", "--n", "2", "--lambda", "", "--s", "1", "--format", "csv"]);
    assert!(o.status.success());
    assert!(stdout(&o).lines().count() >= 2);
}

#[test]
fn kostka() {
    let o = run(&["kostka", "--nu", "6", "--mu", "1,1,1,1,1,1"]);
    assert_eq!(stdout(&o).trim(), "q^15");
    let o = run(&["kostka", "--nu", "2,1", "--mu", "1,1,1", "--modified"]);
    assert_eq!(stdout(&o).trim(), "q+q^2");
}

#[test]
fn golden_examples() {
    let o = run(&["golden", "fig1"]);
    let out = stdout(&o);
    assert!(out.contains("cc: 12"));
    assert!(out.contains("term: q^6 s(6,2,1)"));

    let out = stdout(&run(&["golden", "fig3"]));
    assert!(out.contains("f(T): (45|367|28|19)"));
    assert!(out.contains("minimaj: 14"));

    let o = run(&["golden", "s2", "--format", "json"]);
    let doc: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(doc["charge_image"], 5);
    assert_eq!(doc["phi_alpha"], serde_json::json!([3, 8]));
}

#[test]
fn verify_sweeps_pass() {
    for (check, max_n) in [("routes", "4"), ("s2", "5"), ("osp", "4"), ("topdeg", "4"), ("t0", "4")] {
        let o = run(&["verify", check, "--max-n", max_n]);
        let out = stdout(&o);
        assert_eq!(o.status.code(), Some(0), "{check}: {out}");
        assert!(out.contains(" 0 failed"), "{check}");
    }
}

#[test]
fn verify_conjectures_reports_printed_displays() {
    let o = run(&["verify", "conjectures", "--max-n", "4", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("displays (4,3) and (5,3) as printed;XFAIL"));
    assert!(out.contains("t^1 n=4 k=3;PASS"));
    assert!(out.contains("t^2 n=3 k=3;SKIP"));
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["frobenius", "--n", "2", "--lambda", "3"][..],
        &["frobenius", "--n", "2", "--lambda", "x"],
        &["frobenius", "--n", "3", "--rnk", "2", "--lambda", "1"],
        &["delta", "--n", "9", "--k", "1"],
        &["delta", "--n", "3", "--k", "3"],
        &["golden", "fig3", "--format", "csv"],
        &["verify", "nothing"],
    ] {
        let o = run(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(!o.stderr.is_empty());
    }
}

#[test]
fn guard_message_names_variable() {
    let o = run(&["delta", "--n", "9", "--k", "1"]);
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.contains("DELTA_SPRINGER_MAX_MACDONALD_N"), "{err}");
}
