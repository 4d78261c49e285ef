use std::io::Write;
use std::process::{Command, Output};

use serde_json::Value;

fn macvogan(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_macvogan"))
        .args(args)
        .env_remove("MACVOGAN_BUDGET")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn temp_json(text: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::Builder::new().suffix(".json").tempfile().unwrap();
    f.write_all(text.as_bytes()).unwrap();
    f
}

#[test]
fn census_json_is_sorted_and_newline_terminated() {
    let o = macvogan(&[
        "census", "--group", "sl", "--n", "2", "--q", "3", "--format", "json",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.ends_with("}\n"));
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["total"], 7);
    let keys: Vec<&String> = v.as_object().unwrap().keys().collect();
    assert_eq!(keys, ["N", "classes", "group", "q", "total"]);
    let first = out.find("\"N\"").unwrap();
    assert!(first < out.find("\"classes\"").unwrap());

    let gl = macvogan(&["census", "--group", "gl", "--n", "2", "--q", "3"]);
    let v: Value = serde_json::from_str(&stdout(&gl)).unwrap();
    assert_eq!(v["total"], 8);
}

#[test]
fn census_tsv() {
    let o = macvogan(&[
        "census", "--group", "gl", "--n", "2", "--q", "2", "--format", "tsv",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().count(), 1 + 3);
}

#[test]
fn identical_invocations_give_identical_bytes() {
    let args = [
        "verify", "--suite", "all", "--n", "3", "--q", "4", "--seed", "17",
    ];
    let a = macvogan(&args);
    let b = macvogan(&args);
    assert_eq!(a.status.code(), Some(0), "{}", stdout(&a));
    assert_eq!(a.stdout, b.stdout);
    let fibers = ["fibers", "--n", "3", "--q", "4"];
    assert_eq!(macvogan(&fibers).stdout, macvogan(&fibers).stdout);
}

#[test]
fn verify_all_passes_on_small_cases() {
    for (n, q) in [("2", "3"), ("1", "2"), ("4", "5")] {
        let o = macvogan(&["verify", "--suite", "all", "--n", n, "--q", q]);
        assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    }
}

#[test]
fn examples_report_the_worked_values() {
    let o = macvogan(&["example", "--which", "surjectivity", "--n", "3", "--q", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("L-packet size 3\n"), "{out}");
    assert!(out.contains("MV fiber size 1\n"));
    assert!(out.contains("iota_hat injective=true surjective=false"));

    let o = macvogan(&[
        "example",
        "--which",
        "injectivity",
        "--n",
        "4",
        "--q",
        "5",
        "--e",
        "2",
    ]);
    let out = stdout(&o);
    assert!(out.contains("L-packet size 1\n"), "{out}");
    assert!(out.contains("MV fiber size 2\n"));
    assert!(out.contains("iota_hat injective=false surjective=true kernel=2"));
}

#[test]
fn packet_from_file() {
    let f = temp_json(
        r#"{"N":2,"blocks":[{"d":1,"length":1,"orbit":0,"u":"0"},{"d":1,"length":1,"orbit":2,"u":"1/3"}],"q":5}"#,
    );
    let o = macvogan(&["packet", "--param", f.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["packet_size"], 1);
    assert_eq!(v["mv_class"]["stab_order"], 2);
    assert_eq!(v["members"][0]["heads"].as_array().unwrap().len(), 2);
    assert_eq!(v["iota_hat"]["surjective"], true);

    let tsv = macvogan(&[
        "packet",
        "--param",
        f.path().to_str().unwrap(),
        "--format",
        "tsv",
    ]);
    assert_eq!(stdout(&tsv), "psi\theads\n()\t(0) (1)\n");
}

#[test]
fn fibers_of_a_single_class() {
    let f = temp_json(
        r#"{"entries":[{"d":1,"orbit":1,"partition":[1]},{"d":1,"orbit":3,"partition":[1]}],"q":5}"#,
    );
    let o = macvogan(&[
        "fibers",
        "--n",
        "2",
        "--q",
        "5",
        "--class",
        f.path().to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let class = &v["classes"][0];
    assert_eq!(class["stab_order"], 2);
    assert_eq!(class["fiber"].as_array().unwrap().len(), 2);
    // The representative is the orbit minimum, {0, 2}.
    assert_eq!(class["representative"]["entries"][0]["orbit"], 0);

    let wrong = macvogan(&[
        "fibers",
        "--n",
        "3",
        "--q",
        "5",
        "--class",
        f.path().to_str().unwrap(),
    ]);
    assert_eq!(wrong.status.code(), Some(2));
}

#[test]
fn usage_and_input_errors_exit_2() {
    for args in [
        &["census", "--group", "sl", "--n", "2"][..],
        &["census", "--group", "so", "--n", "2", "--q", "3"],
        &[
            "census", "--group", "gl", "--n", "2", "--q", "3", "--colour",
        ],
        &["verify", "--suite", "nope", "--n", "2", "--q", "3"],
        &["packet", "--param", "/nonexistent/param.json"],
        &["example", "--which", "surjectivity", "--n", "1", "--q", "3"],
        &["census", "--group", "gl", "--n", "2", "--q", "12"],
        &[],
    ] {
        let o = macvogan(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(!o.stderr.is_empty());
    }
    let bad = temp_json(r#"{"N":3,"blocks":[{"d":1,"length":1,"orbit":0,"u":"0"}],"q":5}"#);
    let o = macvogan(&["packet", "--param", bad.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn budget_override_skips_the_oracle() {
    let o = Command::new(env!("CARGO_BIN_EXE_macvogan"))
        .args(["verify", "--suite", "counting", "--n", "2", "--q", "3"])
        .env("MACVOGAN_BUDGET", "10")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("skipped: GL_2(F_3)"), "{}", stdout(&o));

    let o = Command::new(env!("CARGO_BIN_EXE_macvogan"))
        .args(["verify", "--suite", "counting", "--n", "2", "--q", "3"])
        .env("MACVOGAN_BUDGET", "lots")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
}
