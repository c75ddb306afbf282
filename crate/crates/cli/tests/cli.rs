use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ideal4")).args(args).output().expect("binary runs")
}

fn run_env(args: &[&str], threads: &str) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ideal4"))
        .args(args)
        .env("IDEAL4_THREADS", threads)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> serde_json::Value {
    serde_json::from_str(&stdout(o)).unwrap()
}

#[test]
fn verify_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("a.json");
    let ok = run(&["verify", "--family", "a", "--a", "1.0", "--grid", "8x8x8", "--tol", "1e-6", "-o", path.to_str().unwrap()]);
    assert_eq!(ok.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(doc["status"], "PASS");
    assert_eq!(doc["schema_version"], 1);
    assert!(doc["summary"]["max_abs_slack"].as_f64().unwrap() <= 1e-6);
    assert!(doc.get("points").is_none());

    let fail = run(&["verify", "--family", "graph", "--coeffs", "1,2,7", "--grid", "4x4x4"]);
    assert_eq!(fail.status.code(), Some(1));
    assert_eq!(json(&fail)["status"], "FAIL");

    let bad = run(&["verify", "--family", "b", "--a", "1.5"]);
    assert_eq!(bad.status.code(), Some(2));
    let err = String::from_utf8(bad.stderr).unwrap();
    assert_eq!(err.lines().count(), 1, "{err}");
    assert!(bad.stdout.is_empty());

    for args in [
        &["verify", "--family", "d"][..],
        &["verify", "--family", "a", "--a", "1", "--grid", "0x8x8"],
        &["verify", "--family", "a", "--a", "1", "--u-range", "-2:2"],
        &["verify", "--family", "c"],
        &["bogus"],
    ] {
        assert_eq!(run(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn verify_report_is_thread_independent() {
    let args = ["verify", "--family", "c", "--a", "1", "--grid", "5x5x5", "--points"];
    let (one, auto) = (run_env(&args, "1"), run_env(&args, "0"));
    assert_eq!(one.status.code(), Some(0));
    assert_eq!(one.stdout, auto.stdout);
    assert!(json(&one)["points"].as_array().unwrap().len() == 125);
    assert_eq!(run_env(&args, "many").status.code(), Some(2));
}

#[test]
fn delta_examples() {
    let a = json(&run(&["delta", "--family", "a", "--a", "1", "--point", "0,0.1,0.1"]));
    assert!((a["delta"].as_f64().unwrap() - 1.0).abs() < 1e-12);
    assert!((a["bound"].as_f64().unwrap() - 1.0).abs() < 1e-12);

    let l1 = json(&run(&["delta", "--family", "L1", "--point", "0,1,0"]));
    assert!(l1["delta"].as_f64().unwrap().abs() < 1e-12);
    assert!(l1["mean_sq"].as_f64().unwrap().abs() < 1e-12);

    let flat = json(&run(&["delta", "--family", "hyperplane", "--point", "0.1,-0.2,0.3"]));
    for key in ["delta", "tau", "inf_k", "mean_sq", "bound", "slack"] {
        assert_eq!(flat[key].as_f64(), Some(0.0), "{key}");
    }
    assert_eq!(run(&["delta", "--family", "b", "--a", "0.5", "--point", "0,0,0"]).status.code(), Some(2));
    assert_eq!(run(&["delta", "--family", "a", "--a", "1", "--point", "0,0"]).status.code(), Some(2));
}

#[test]
fn elliptic_examples() {
    let sn = run(&["elliptic", "sn", "0", "0.5"]);
    assert_eq!(sn.status.code(), Some(0));
    assert_eq!(stdout(&sn).trim(), "0");

    let sd = run(&["elliptic", "sd", "1.8540746773013719", "0.7071067811865476"]);
    let v: f64 = stdout(&sd).trim().parse().unwrap();
    assert!((v - std::f64::consts::SQRT_2).abs() < 1e-13);
    assert!(stdout(&sd).starts_with("1.41421356237"));

    let neg = run(&["elliptic", "cn", "-0.3", "0.4"]);
    assert_eq!(neg.status.code(), Some(0));

    let pole = run(&["elliptic", "ns", "0", "0.5"]);
    assert_eq!(pole.status.code(), Some(1));
    assert!(String::from_utf8(pole.stderr).unwrap().contains("pole"));

    assert_eq!(run(&["elliptic", "xx", "0", "0.5"]).status.code(), Some(2));
    assert_eq!(run(&["elliptic", "sn", "0", "1.0"]).status.code(), Some(2));
}

#[test]
fn mesh_output() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("a.csv");
    let out = run(&[
        "mesh", "--family", "a", "--a", "1", "--grid", "2x2x2", "--t-range", "0:1", "--u-range", "0:1", "--v-range",
        "0:1", "-o", path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = std::fs::read_to_string(&path).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "t,u,v,x1,x2,x3,x4");
    assert_eq!(lines.len(), 9);
    assert_eq!(lines[1], "0,0,0,0,0,0,1");
    assert!(!text.contains('\r'));

    let c = run(&["mesh", "--family", "c", "--a", "1.5", "--grid", "3x2x2", "--with-delta"]);
    let text = stdout(&c);
    assert!(text.starts_with("t,u,v,x1,x2,x3,x4,delta,slack\n"));
    let m = ideal4_core_sd(1.5);
    for row in text.lines().skip(1) {
        let f: Vec<f64> = row.split(',').map(|x| x.parse().unwrap()).collect();
        let r2 = f[3] * f[3] + f[4] * f[4] + f[5] * f[5];
        let sd = m(f[0]);
        assert!((r2 - sd * sd).abs() < 1e-12);
        assert!(f[8].abs() < 1e-9);
    }
    let again = run(&["mesh", "--family", "c", "--a", "1.5", "--grid", "3x2x2", "--with-delta"]);
    assert_eq!(c.stdout, again.stdout);

    assert_eq!(run(&["mesh", "--family", "a", "--a", "1", "--grid", "0x2x2"]).status.code(), Some(2));
    let unwritable = run(&["mesh", "--family", "a", "--a", "1", "-o", "/nonexistent/dir/x.csv"]);
    assert_eq!(unwritable.status.code(), Some(2));
}

/// `sd(at)/a` through the library, for checking mesh radii.
fn ideal4_core_sd(a: f64) -> impl Fn(f64) -> f64 {
    let m = ideal4_core::elliptic::EllipticModulus::lemniscatic();
    move |t| m.sd(a * t).unwrap() / a
}

#[test]
fn catalog_list_names_every_family() {
    let out = stdout(&run(&["catalog-list"]));
    for name in ["a", "b", "c", "L1", "L2", "hyperplane", "graph"] {
        assert!(out.lines().any(|l| l.split_whitespace().next() == Some(name)), "{name}");
    }
}
