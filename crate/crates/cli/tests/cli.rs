use std::path::PathBuf;
use std::process::{Command, Output};

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests")
        .join("fixtures")
        .join(name)
}

fn qtop(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qtop"))
        .current_dir(fixture(""))
        .args(args)
        .output()
        .expect("spawn qtop")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn golden(args: &[&str], file: &str, code: i32) {
    let o = qtop(args);
    assert_eq!(o.status.code(), Some(code), "args {args:?}\n{}", stderr(&o));
    let want = std::fs::read_to_string(fixture(file)).unwrap();
    assert_eq!(stdout(&o), want, "golden {file}");
}

#[test]
fn classify_golden() {
    golden(
        &["classify", "--space", "sierpinski.qtop"],
        "classify_sierpinski.out",
        0,
    );
    golden(&["classify", "--space", "w3.qtop"], "classify_w3.out", 0);
}

#[test]
fn classify_sierpinski_flags() {
    let o = qtop(&["classify", "--space", "sierpinski.qtop"]);
    let out = stdout(&o);
    let mut lines = out.lines();
    let head: Vec<&str> = lines.next().unwrap().split('\t').collect();
    let row: Vec<&str> = lines.next().unwrap().split('\t').collect();
    let col = |k: &str| row[head.iter().position(|h| *h == k).unwrap()];
    assert_eq!(col("T0"), "1");
    assert_eq!(col("T1"), "0");
}

#[test]
fn qu_golden_and_exit() {
    golden(&["qu", "--space", "w3.qtop"], "qu_w3.out", 1);
    let o = qtop(&["qu", "--space", "sierpinski.qtop", "--check", "normal"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "normal\t1\n");
}

#[test]
fn urysohn_golden() {
    golden(
        &["urysohn", "--space", "sierpinski.qtop", "--set", "{1}"],
        "urysohn_sierpinski.out",
        0,
    );
    golden(
        &[
            "urysohn", "--space", "w3.qtop", "--set", "{0}", "--depth", "3",
        ],
        "urysohn_w3.out",
        0,
    );
}

#[test]
fn monoid_golden_and_exit() {
    golden(
        &[
            "monoid",
            "--in",
            "max_sierpinski.qtop",
            "--set",
            "{1}",
            "--nbhd",
            "{0,1}",
        ],
        "monoid_max_sierpinski.out",
        0,
    );
    golden(
        &[
            "monoid",
            "--in",
            "z2_discrete.qtop",
            "--check",
            "para",
            "--set",
            "{0}",
            "--nbhd",
            "{0}",
        ],
        "monoid_z2_para.out",
        0,
    );
    golden(
        &["monoid", "--in", "max_wrong_sierpinski.qtop"],
        "monoid_max_wrong.out",
        1,
    );
}

#[test]
fn enumerate_golden() {
    golden(
        &["enumerate", "--n", "2", "--campaign", "diagram"],
        "enumerate_diagram_2.out",
        0,
    );
}

#[test]
fn enumerate_out_file_matches_stdout() {
    let path = std::env::temp_dir().join(format!("qtop-cli-{}.tsv", std::process::id()));
    let o = qtop(&[
        "enumerate",
        "--n",
        "2",
        "--campaign",
        "diagram",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let written = std::fs::read_to_string(&path).unwrap();
    std::fs::remove_file(&path).ok();
    assert_eq!(
        written,
        std::fs::read_to_string(fixture("enumerate_diagram_2.out")).unwrap()
    );
    assert!(stdout(&o).starts_with("campaign diagram n=2: 4 instances, 0 violations"));
}

#[test]
fn enumerate_over_cap_exits_2() {
    let o = qtop(&["enumerate", "--n", "5", "--campaign", "diagram"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).starts_with("error:"));
    let o = qtop(&["monoid-enumerate", "--n", "5", "--campaign", "p2"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn monoid_enumerate_small() {
    for c in ["p2", "monoreg", "qrl", "lvr"] {
        let o = qtop(&["monoid-enumerate", "--n", "2", "--campaign", c]);
        assert_eq!(o.status.code(), Some(0), "{c}: {}", stderr(&o));
        assert!(stdout(&o).contains("violations\t0"), "{c}");
    }
}

#[test]
fn bad_syntax_reports_position() {
    let o = qtop(&["classify", "--space", "bad_syntax.qtop"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("line 4, column 1"), "{}", stderr(&o));
    assert!(stdout(&o).is_empty());
}

#[test]
fn missing_file_exits_2() {
    let o = qtop(&["classify", "--space", "no_such_file.qtop"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn bad_set_exits_2() {
    let o = qtop(&["urysohn", "--space", "sierpinski.qtop", "--set", "{7}"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn dump_round_trip() {
    for (cmd, flag, file) in [
        ("classify", "--space", "w3.qtop"),
        ("classify", "--space", "sierpinski.qtop"),
        ("monoid", "--in", "max_sierpinski.qtop"),
        ("monoid", "--in", "z2_discrete.qtop"),
    ] {
        let first = stdout(&qtop(&[cmd, flag, file, "--dump"]));
        let path = std::env::temp_dir().join(format!("qtop-dump-{}-{file}", std::process::id()));
        std::fs::write(&path, &first).unwrap();
        let o = qtop(&[cmd, flag, path.to_str().unwrap(), "--dump"]);
        std::fs::remove_file(&path).ok();
        assert_eq!(o.status.code(), Some(0));
        assert_eq!(stdout(&o), first, "{file}");
    }
}

#[test]
fn sorgenfrey_urysohn_value() {
    let o = qtop(&["sorgenfrey", "urysohn", "--eps", "1", "--z", "1/3"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let out = stdout(&o);
    assert!(out.contains("z\t1/3\n"));
    assert!(out.contains("f\t171/512\n"), "{out}");
    // |f - 1/3| <= 2^-10 at depth 10
    let err = (171.0_f64 / 512.0 - 1.0 / 3.0).abs();
    assert!(err <= 2f64.powi(-10));
}

#[test]
fn sorgenfrey_qball_golden() {
    golden(
        &["sorgenfrey", "qball", "--x", "0", "--eps", "1"],
        "qball_0_1.out",
        0,
    );
}

#[test]
fn sorgenfrey_verify_passes() {
    let o = qtop(&["sorgenfrey", "verify", "--eps", "1", "--depth", "4"]);
    assert_eq!(o.status.code(), Some(0), "{}\n{}", stdout(&o), stderr(&o));
}

#[test]
fn sorgenfrey_bad_eps_exits_2() {
    let o = qtop(&["sorgenfrey", "qball", "--x", "0", "--eps", "-1"]);
    assert_eq!(o.status.code(), Some(2));
    let o = qtop(&["sorgenfrey", "urysohn", "--eps", "x", "--z", "0"]);
    assert_eq!(o.status.code(), Some(2));
}
