use std::path::PathBuf;
use std::process::Command;

use t44::cli::{run, Outcome};

fn t44(args: &[&str]) -> Outcome {
    let argv = std::iter::once("t44").chain(args.iter().copied());
    run(argv, || Ok(String::new()))
}

fn t44_stdin(args: &[&str], input: &str) -> Outcome {
    let input = input.to_string();
    run(std::iter::once("t44").chain(args.iter().copied()), move || Ok(input))
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("t44-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn generate_worked_example() {
    let o = t44(&["generate", "--family", "w2", "--n", "2", "--mark", "+", "--lambda", "2"]);
    assert_eq!(o.code, 0, "{}", o.stderr);
    assert!(o.stdout.starts_with("W2(2)+  lambda=2  mu=3  d=5\nPhi =\n"));
    for row in ["-z4", "z1*z4", "-z1*z3", "z2*z3", "z1*z2*z4"] {
        assert!(o.stdout.contains(row), "{row} missing:\n{}", o.stdout);
    }
    assert!(o.stdout.contains("det Phi = z1^2*z2^2*z3^3*z4^2"), "{}", o.stdout);
    assert!(!o.stdout.contains("NO"));
}

#[test]
fn generate_regular_module() {
    let o = t44(&["generate", "--family", "w10", "--lambda", "2"]);
    assert_eq!(o.code, 0, "{}", o.stderr);
    assert!(o.stdout.contains("Phi =\n[ z1*z2*z3*z4 ]\nPsi =\n[ 1 ]\n"), "{}", o.stdout);
}

#[test]
fn invalid_input_exits_two() {
    let cases: [&[&str]; 7] = [
        &["generate", "--family", "w0", "--n", "1", "--mu", "1", "--lambda", "2"],
        &["derive", "--family", "w6", "--n", "0"],
        &["generate", "--family", "w2", "--n", "1", "--mark", "+", "--lambda", "0.5"],
        &["generate", "--family", "w2", "--n", "1", "--mark", "+", "--lambda", "1"],
        &["generate", "--family", "w12", "--n", "1"],
        &["generate", "--family", "w1", "--n", "1", "--mark", "++", "--transpose"],
        &["frobnicate"],
    ];
    for args in cases {
        let o = t44(args);
        assert_eq!(o.code, 2, "{args:?}: {}", o.stderr);
        assert!(o.stdout.is_empty());
        assert!(!o.stderr.is_empty());
    }
    let o = t44(cases[0]);
    assert!(o.stderr.contains("0 and 1"), "{}", o.stderr);
}

#[test]
fn derive_traces() {
    let o = t44(&["derive", "--family", "w2", "--n", "2", "--mark", "+"]);
    assert_eq!(o.code, 0, "{}", o.stderr);
    for part in ["X =\n", "presentation:\n", "elimination:\n", "minimal presentation:\n", "Phi =\n"] {
        assert!(o.stdout.contains(part), "{part}");
    }
    assert!(o.stdout.contains("eliminate u4_1"));
    assert!(o.stdout.ends_with("matches Table 2 (identity permutation)\n"));

    let o = t44(&["derive", "--family", "w3", "--n", "1", "--mark", "+"]);
    assert_eq!(o.code, 0);
    let last = o.stdout.lines().last().unwrap();
    assert!(last.starts_with("matches Table 2") || last.starts_with("agrees with Table 2"), "{last}");

    let o = t44(&["derive", "--family", "w2", "--n", "1", "--mark", "-", "--format", "json"]);
    assert_eq!(o.code, 0);
    let v: serde_json::Value = serde_json::from_str(&o.stdout).unwrap();
    assert!(v["comparison"].as_str().unwrap().starts_with("matches Table 2"));
    assert_eq!(v["x"]["row_stripes"], serde_json::json!([1, 2, 0]));
}

#[test]
fn json_round_trip_and_verify() {
    let o = t44(&["generate", "--family", "w4", "--n", "2", "--mark", "-", "--format", "json", "--lambda", "-1/3"]);
    assert_eq!(o.code, 0, "{}", o.stderr);
    let v = t44_stdin(&["verify", "--format", "json"], &o.stdout);
    assert_eq!(v.code, 0, "{}", v.stderr);
    assert_eq!(v.stdout, o.stdout);
    let text = t44_stdin(&["verify"], &o.stdout);
    assert_eq!(text.stdout, "W4(2)- lambda=-1/3 d=6: verified\n");

    // Several lambdas give an array.
    let many = t44(&["generate", "--family", "w7", "--n", "2", "--format", "json", "--lambda", "2", "--lambda", "5"]);
    let arr: serde_json::Value = serde_json::from_str(&many.stdout).unwrap();
    assert_eq!(arr.as_array().unwrap().len(), 2);
    let back = t44_stdin(&["verify", "--format", "json"], &many.stdout);
    assert_eq!(back.stdout, many.stdout);
}

#[test]
fn verify_rejects_tampering() {
    let o = t44(&["generate", "--family", "w2", "--n", "1", "--mark", "+", "--format", "json"]);
    let mut v: serde_json::Value = serde_json::from_str(&o.stdout).unwrap();
    v["phi"][0][0]["terms"][0]["c"] = serde_json::json!("2");
    let bad = t44_stdin(&["verify"], &v.to_string());
    assert_eq!(bad.code, 1, "{}", bad.stderr);
    let garbage = t44_stdin(&["verify"], "{ not json");
    assert_eq!(garbage.code, 2);
}

#[test]
fn files_in_and_out() {
    let out = scratch("w8.json");
    let o = t44(&["generate", "--family", "w8", "--n", "1", "--format", "json", "--out", out.to_str().unwrap()]);
    assert_eq!(o.code, 0);
    assert!(o.stdout.is_empty());
    let v = t44(&["verify", "--in", out.to_str().unwrap()]);
    assert_eq!(v.code, 0, "{}", v.stderr);
    assert!(v.stdout.contains("W8(1)"));
    let missing = t44(&["verify", "--in", scratch("absent.json").to_str().unwrap()]);
    assert_eq!(missing.code, 2);
}

#[test]
fn ar_command() {
    let o = t44(&["ar", "--family", "w4", "--n", "1", "--mark", "+"]);
    assert_eq!(o.code, 0, "{}", o.stderr);
    assert!(o.stdout.contains("W5(1)-"), "{}", o.stdout);
    assert!(o.stdout.contains("[match]"));
    let lit = t44(&["ar", "--family", "w4", "--n", "1", "--mark", "+", "--convention", "literal"]);
    assert_eq!(lit.code, 1, "{}", lit.stdout);
    let all = t44(&["ar", "--max-n", "2"]);
    assert_eq!(all.code, 0);
    assert!(all.stdout.contains("exactly one convention: stripe"));
}

#[test]
fn words_listing() {
    let o = t44(&["words", "--max-n", "2"]);
    assert_eq!(o.code, 0);
    assert_eq!(o.stdout.lines().count(), 75);
    let j = t44(&["words", "--max-n", "0", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&j.stdout).unwrap();
    assert!(v.as_array().unwrap().iter().all(|w| w["n"].as_u64().unwrap_or(0) == 0));
}

#[test]
fn identical_jobs_give_identical_output() {
    let args = ["generate", "--family", "w9", "--n", "2", "--format", "json", "--lambda", "5"];
    assert_eq!(t44(&args), t44(&args));
    let ar = ["ar", "--max-n", "1", "--seed", "3"];
    assert_eq!(t44(&ar), t44(&ar));
}

#[test]
fn check_all_small_and_corrupted() {
    let o = t44(&["check-all", "--max-n", "0"]);
    assert_eq!(o.code, 0, "{}", o.stdout);
    assert!(o.stdout.ends_with("all 8 criteria passed\n"));

    let golden = include_str!("../data/golden.json").replacen("\"z1*z4\"", "\"z1*z3\"", 1);
    let path = scratch("golden-bad.json");
    std::fs::write(&path, golden).unwrap();
    let o = t44(&["check-all", "--max-n", "0", "--golden", path.to_str().unwrap()]);
    assert_eq!(o.code, 1);
    assert!(o.stdout.contains("golden file has z1*z3"), "{}", o.stdout);
    assert!(o.stdout.ends_with("criteria failed\n"));
}

#[test]
fn check_all_spec_example() {
    let o = t44(&["check-all", "--max-n", "4", "--lambda", "2", "--lambda", "5"]);
    assert_eq!(o.code, 0, "{}", o.stdout);
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_t44");
    let ok = Command::new(bin).args(["generate", "--family", "w10"]).output().unwrap();
    assert_eq!(ok.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&ok.stdout).contains("[ z1*z2*z3*z4 ]"));
    let bad = Command::new(bin).args(["derive", "--family", "w9", "--n", "0"]).output().unwrap();
    assert_eq!(bad.status.code(), Some(2));
    assert!(bad.stdout.is_empty());
}
