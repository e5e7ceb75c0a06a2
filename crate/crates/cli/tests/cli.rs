use std::process::{Command, Output};

fn run(args: &str) -> Output {
    Command::new(env!("CARGO_BIN_EXE_eulerian2"))
        .args(args.split_whitespace())
        .output()
        .expect("binary runs")
}

fn stdout(args: &str) -> String {
    let out = run(args);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{args}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn code(args: &str) -> i32 {
    run(args).status.code().expect("exit code")
}

#[test]
fn rows() {
    assert_eq!(stdout("row 3"), "1 8 6\n");
    assert_eq!(stdout("row 1"), "1\n");
    assert_eq!(stdout("row 4 --format csv"), "1,22,58,24\n");
    assert_eq!(
        stdout("row 4 --format csv --header"),
        "1,2,3,4\n1,22,58,24\n"
    );
    assert_eq!(stdout("row 3 --format json"), "[\"1\",\"8\",\"6\"]\n");
    assert_eq!(stdout("row 3 --format bfile"), "1 1\n2 8\n3 6\n");
    assert_eq!(code("row 0"), 2);
    assert_eq!(code("row -1"), 2);
}

#[test]
fn sequences() {
    assert_eq!(stdout("seq bernoulli 4"), "1, -1/2, 1/6, 0, -1/30\n");
    assert_eq!(stdout("seq harmonic 3"), "0, 1, 3/2, 11/6\n");
    assert_eq!(stdout("seq cauchy2 2"), "1, 1/2, 5/6\n");
    assert_eq!(stdout("seq cauchy2 3"), "1, 1/2, 5/6, 9/4\n");
    assert_eq!(
        stdout("seq stirling1 3"),
        "1\n0, 1\n0, -1, 1\n0, 2, -3, 1\n"
    );
    assert_eq!(
        stdout("seq stirling2 2 --format bfile"),
        "0 1\n1 0\n2 1\n3 0\n4 1\n5 1\n"
    );
    assert_eq!(stdout("seq eulerian 3 --format csv"), "1\n1,2\n1,8,6\n");
    assert_eq!(code("seq fibonacci 3"), 2);
    assert_eq!(code("seq bernoulli 3 --format bfile"), 2);
    assert_eq!(code("seq harmonic 3 --format bfile"), 2);
}

#[test]
fn norlund() {
    assert_eq!(stdout("norlund 2 --method egf"), "0, -1/12, 1/4\n");
    assert_eq!(stdout("norlund 2 --method theorem1"), "0, -1/12, 1/4\n");
    assert_eq!(stdout("norlund 2 --method interp"), "0, -1/12, 1/4\n");
    assert_eq!(stdout("norlund 2 --eval 1"), "1/6\n");
    // (-1)^3 c_3 with c_3 = 9/4.
    assert_eq!(stdout("norlund 3 --eval 3"), "-9/4\n");
    assert_eq!(stdout("norlund 2 --eval -1/2"), "5/48\n");
    assert_eq!(stdout("norlund 0"), "1\n");
    assert_eq!(stdout("norlund 0 --method interp"), "1\n");
    assert_eq!(code("norlund 0 --method theorem1"), 2);
    assert_eq!(code("norlund 2 --method taylor"), 2);
    assert_eq!(code("norlund 2 --eval 1/0"), 2);
}

#[test]
fn verify() {
    assert_eq!(code("verify --all --n-max 10"), 0);
    assert_eq!(
        code("verify --identity theorem4 --sign-mode as-printed --n-max 5"),
        1
    );
    let json: serde_json::Value = serde_json::from_str(&stdout(
        "verify --identity theorem3 --n-max 1 --format json",
    ))
    .unwrap();
    let reports = json.as_array().unwrap();
    assert_eq!(reports.len(), 1);
    assert_eq!(reports[0]["holds"], true);
    assert_eq!(reports[0]["identity"], "theorem3");

    let plain = stdout("verify --identity miki --n-max 4");
    assert_eq!(plain.lines().count(), 3);
    assert!(plain.starts_with("XFAIL miki n=2"));

    let derivatives = stdout("verify --identity derivatives --n-max 3 --format csv --header");
    assert!(derivatives.starts_with("identity,params,lhs,rhs,holds,status,note\n"));
    assert_eq!(derivatives.lines().count(), 1 + 3 + 2 + 2);

    assert_eq!(code("verify --identity nonsense"), 2);
    assert_eq!(code("verify --n-max 0"), 2);
    assert_eq!(code("verify --enumeration-cap 11"), 2);
    assert_eq!(code("verify --all --identity miki"), 2);
    assert_eq!(code("verify --format bfile --identity miki --n-max 3"), 2);
}

#[test]
fn enumerate() {
    assert_eq!(stdout("enumerate 2"), "1122\n1221\n2211\n");
    assert_eq!(
        stdout("enumerate 2 --histogram"),
        "k=1:1 k=2:2 (recurrence: 1 2) MATCH\n"
    );
    assert_eq!(stdout("enumerate 3").lines().count(), 15);
    assert_eq!(
        stdout("enumerate 4 --histogram"),
        "k=1:1 k=2:22 k=3:58 k=4:24 (recurrence: 1 22 58 24) MATCH\n"
    );
    let over = run("enumerate 9");
    assert_eq!(over.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&over.stderr).contains("cap"));
    assert_eq!(code("enumerate 9 --cap 11"), 2);
    assert_eq!(code("enumerate 0"), 2);
}
