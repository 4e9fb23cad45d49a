use std::path::PathBuf;
use std::process::{Command, Output};

fn fixture(name: &str) -> String {
    let mut path = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    path.push("tests/fixtures");
    path.push(name);
    path.to_str().unwrap().to_string()
}

fn arbor(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_arbor"))
        .args(args)
        .output()
        .expect("failed to spawn arbor")
}

fn stdout_lines(out: &Output) -> Vec<String> {
    String::from_utf8_lossy(&out.stdout)
        .lines()
        .map(str::to_string)
        .collect()
}

fn assert_exit(out: &Output, code: i32) {
    assert_eq!(
        out.status.code(),
        Some(code),
        "stdout: {}\nstderr: {}",
        String::from_utf8_lossy(&out.stdout),
        String::from_utf8_lossy(&out.stderr)
    );
}

#[test]
fn poly_human_and_machine() {
    let out = arbor(&["poly", &fixture("u24.m")]);
    assert_exit(&out, 0);
    assert_eq!(stdout_lines(&out), vec!["k^4 - 4k^2 + 3k", "coeffs: 0 3 -4 0 1"]);

    let out = arbor(&["--machine", "poly", &fixture("u24.m")]);
    assert_exit(&out, 0);
    assert_eq!(stdout_lines(&out), vec!["coeffs: 0 3 -4 0 1"]);

    let out = arbor(&["poly", &fixture("u25.m")]);
    assert_eq!(
        stdout_lines(&out),
        vec!["k^5 - 10k^3 + 15k^2 - 6k", "coeffs: 0 -6 15 -10 0 1"]
    );

    let out = arbor(&["poly", &fixture("m1.m")]);
    assert_eq!(stdout_lines(&out)[0], "k^4 - k^3 - 2k^2 + 2k");
}

#[test]
fn poly_of_loopy_matroid_is_zero() {
    let out = arbor(&["poly", &fixture("loopy.m")]);
    assert_exit(&out, 0);
    assert_eq!(stdout_lines(&out), vec!["0", "coeffs:"]);
}

#[test]
fn eval_matches_known_values() {
    let out = arbor(&["eval", &fixture("c3.m"), "3"]);
    assert_exit(&out, 0);
    assert_eq!(stdout_lines(&out), vec!["24"]);

    for (file, k, expected) in [
        ("c3.m", "1", "0"),
        ("c3.m", "2", "6"),
        ("path2.m", "3", "9"),
        ("double_edge.m", "3", "6"),
        ("c4.m", "3", "78"),
        ("u25.m", "2", "0"),
    ] {
        let out = arbor(&["eval", &fixture(file), k]);
        assert_exit(&out, 0);
        assert_eq!(stdout_lines(&out), vec![expected], "{file} at k={k}");
    }
}

#[test]
fn arboricity_with_witness_partition() {
    let out = arbor(&["arboricity", &fixture("u25.m")]);
    assert_exit(&out, 0);
    assert_eq!(stdout_lines(&out), vec!["a(M) = 3, witness X = {0,1,2,3,4}"]);

    let out = arbor(&["arboricity", &fixture("u25.m"), "--witness-partition", "3"]);
    assert_exit(&out, 0);
    let lines = stdout_lines(&out);
    assert!(lines[1].starts_with("partition: {"), "{lines:?}");

    let out = arbor(&["arboricity", &fixture("u25.m"), "--witness-partition", "2"]);
    assert_eq!(stdout_lines(&out)[1], "partition: none (no cover with 2 parts)");

    let out = arbor(&["--machine", "arboricity", &fixture("u25.m"), "--witness-partition", "3"]);
    let lines = stdout_lines(&out);
    assert_eq!(lines[0], "arboricity: 3");
    assert_eq!(lines[1], "witness: 0 1 2 3 4");
    assert!(lines[2].starts_with("partition: "));

    let out = arbor(&["arboricity", &fixture("loopy.m")]);
    assert_eq!(stdout_lines(&out), vec!["a(M) = unbounded, witness X = {0}"]);
}

#[test]
fn circuits_output_is_reparseable() {
    let out = arbor(&["--machine", "circuits", &fixture("u24.m")]);
    assert_exit(&out, 0);
    assert_eq!(
        stdout_lines(&out),
        vec![
            "circuits 4",
            "circuit 0 1 2",
            "circuit 0 1 3",
            "circuit 0 2 3",
            "circuit 1 2 3"
        ]
    );

    let out = arbor(&["circuits", &fixture("c3.m")]);
    assert_eq!(stdout_lines(&out), vec!["# 1 circuit(s)", "circuits 3", "circuit 0 1 2"]);
}

#[test]
fn brute_force_counts() {
    let out = arbor(&["brute", &fixture("c3.m"), "2"]);
    assert_exit(&out, 0);
    assert_eq!(stdout_lines(&out), vec!["6"]);

    let out = arbor(&["brute", &fixture("double_edge.m"), "3"]);
    assert_eq!(stdout_lines(&out), vec!["6"]);
}

#[test]
fn sched_formula_polynomial() {
    let out = arbor(&["sched", &fixture("sched_c3.sexp"), "3"]);
    assert_exit(&out, 0);
    assert_eq!(stdout_lines(&out), vec!["k^3 - k", "coeffs: 0 -1 0 1"]);
}

#[test]
fn dsum_multiplies() {
    let out = arbor(&["dsum", &fixture("u12.m"), &fixture("u12.m")]);
    assert_exit(&out, 0);
    assert_eq!(stdout_lines(&out)[0], "k^4 - 2k^3 + k^2");

    // Direct sum with a free matroid shifts degrees.
    let out = arbor(&["dsum", &fixture("u12.m"), &fixture("c3.m")]);
    let via_eval = arbor(&["eval", &fixture("u12.m"), "3"]);
    assert_exit(&via_eval, 0);
    // (k^2 - k)(k^3 - k) at k = 3: 6 * 24.
    let lines = stdout_lines(&out);
    let coeffs: Vec<i128> = lines[1]
        .strip_prefix("coeffs:")
        .unwrap()
        .split_whitespace()
        .map(|t| t.parse().unwrap())
        .collect();
    let value: i128 = coeffs
        .iter()
        .rev()
        .fold(0, |acc, c| acc * 3 + c);
    assert_eq!(value, 6 * 24);
}

#[test]
fn demos_pass() {
    for demo in [
        vec!["demo", "cycles", "--max", "6"],
        vec!["demo", "condel", "--n", "4"],
        vec!["demo", "valuativity"],
        vec!["demo", "chromatic"],
    ] {
        let out = arbor(&demo);
        assert_exit(&out, 0);
        let text = String::from_utf8_lossy(&out.stdout).to_string();
        assert!(text.contains("PASS"), "{demo:?}: {text}");
        assert!(!text.contains("FAIL"), "{demo:?}: {text}");
    }
    let out = arbor(&["demo", "condel", "--n", "4"]);
    let text = String::from_utf8_lossy(&out.stdout).to_string();
    assert!(text.contains("NOTE"), "condel must surface the displayed-value notes");
}

#[test]
fn exit_codes() {
    // 2: parse errors.
    let out = arbor(&["poly", &fixture("bad.m")]);
    assert_exit(&out, 2);
    let out = arbor(&["poly", "/nonexistent/file.m"]);
    assert_exit(&out, 2);

    // 3: size caps and budgets.
    let out = arbor(&["--max-n", "5", "poly", &fixture("free10.m")]);
    assert_exit(&out, 3);
    let out = arbor(&["--budget", "100", "brute", &fixture("free10.m"), "4"]);
    assert_exit(&out, 3);
    let out = arbor(&["demo", "cycles", "--max", "30"]);
    assert_exit(&out, 3);

    // 4: arithmetic overflow.
    let out = arbor(&["eval", &fixture("free10.m"), "100000"]);
    assert_exit(&out, 4);

    // 4: non-integer scheduling polynomial.
    let dir = std::env::temp_dir().join("arbor_cli_asym.sexp");
    std::fs::write(&dir, "(atom 0 1)\n").unwrap();
    let out = arbor(&["sched", dir.to_str().unwrap(), "2"]);
    assert_exit(&out, 4);
}

#[test]
fn output_is_deterministic_and_thread_independent() {
    let a = arbor(&["arboricity", &fixture("m1.m"), "--witness-partition", "2"]);
    let b = arbor(&["arboricity", &fixture("m1.m"), "--witness-partition", "2"]);
    assert_eq!(a.stdout, b.stdout);

    let single = arbor(&["poly", &fixture("u25.m")]);
    let multi = arbor(&["--threads", "4", "poly", &fixture("u25.m")]);
    assert_eq!(single.stdout, multi.stdout);
}

#[test]
fn printed_coefficients_evaluate_consistently() {
    for file in ["u24.m", "u25.m", "c3.m", "c4.m", "m1.m"] {
        let out = arbor(&["--machine", "poly", &fixture(file)]);
        assert_exit(&out, 0);
        let line = &stdout_lines(&out)[0];
        let coeffs: Vec<i128> = line
            .strip_prefix("coeffs:")
            .unwrap()
            .split_whitespace()
            .map(|t| t.parse().unwrap())
            .collect();
        for k in 0..=10i128 {
            let horner = coeffs.iter().rev().fold(0i128, |acc, c| acc * k + c);
            let out = arbor(&["eval", &fixture(file), &k.to_string()]);
            assert_eq!(stdout_lines(&out), vec![horner.to_string()], "{file} at {k}");
        }
    }
}
