use std::path::PathBuf;
use std::process::{Command, Output};

use tempfile::TempDir;

fn fixture(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "fixtures", name].iter().collect();
    p.to_string_lossy().into_owned()
}

fn coxconv(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_coxconv")).args(args).env_remove("COXCONV_BUDGET").output().unwrap()
}

fn code(args: &[&str]) -> i32 {
    coxconv(args).status.code().unwrap()
}

fn stdout(args: &[&str]) -> String {
    String::from_utf8(coxconv(args).stdout).unwrap()
}

fn write(dir: &TempDir, name: &str, body: &str) -> String {
    let p = dir.path().join(name);
    std::fs::write(&p, body).unwrap();
    p.to_string_lossy().into_owned()
}

#[test]
fn lcs_check_exit_codes() {
    assert_eq!(code(&["lcs", "check", &fixture("a2.json")]), 0);
    assert_eq!(code(&["lcs", "check", &fixture("ex2b.json")]), 0);
    let dir = TempDir::new().unwrap();
    // α_t(α̌_s) = -1 but α_s(α̌_t) = 0.
    let bad = write(
        &dir,
        "bad.json",
        r#"{"dim": 2, "S": ["s", "t"], "alpha": {"s": [1, 0], "t": [0, 1]},
            "alpha_check": {"s": ["2", "-1"], "t": ["0", "2"]}}"#,
    );
    assert_eq!(code(&["lcs", "check", &bad]), 1);
    assert!(stdout(&["lcs", "check", &bad]).contains("\"valid\": false"));
}

#[test]
fn example_b_is_hyperbolic() {
    let out = stdout(&["lcs", "check", &fixture("ex2b.json")]);
    assert!(out.contains("\"hyperbolic\""));
    let out = stdout(&["lcs", "check", &fixture("ex2a.json")]);
    assert!(out.contains("\"affine\""));
}

#[test]
fn rootsys_build_roundtrips() {
    let dir = TempDir::new().unwrap();
    let out = dir.path().join("b3.json");
    assert_eq!(code(&["rootsys", "build", "--family", "B", "--rank", "3", "--out", out.to_str().unwrap()]), 0);
    assert_eq!(std::fs::read_to_string(&out).unwrap(), std::fs::read_to_string(fixture("b3.json")).unwrap());
    assert_eq!(code(&["lcs", "check", out.to_str().unwrap()]), 0);
    assert_eq!(code(&["rootsys", "build", "--family", "D1", "--rank", "3"]), 0);
    assert_eq!(code(&["rootsys", "build", "--family", "D", "--rank", "1"]), 64);
}

#[test]
fn orbit_enumerate_exit_codes() {
    let out = coxconv(&["orbit", "enumerate", &fixture("a3.json"), "--vector", &fixture("a3_chamber.json")]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8(out.stdout).unwrap().contains("\"size\": 24"));
    let args = ["orbit", "enumerate", &fixture("ex2a.json"), "--vector", &fixture("ex2a_chamber.json"), "--budget", "5"];
    assert_eq!(code(&args), 2);
    let env = Command::new(env!("CARGO_BIN_EXE_coxconv"))
        .args(["orbit", "enumerate", &fixture("ex2a.json"), "--covector", &fixture("alpha_s.json")])
        .env("COXCONV_BUDGET", "9")
        .output()
        .unwrap();
    assert_eq!(env.status.code(), Some(2));
    assert!(String::from_utf8(env.stdout).unwrap().contains("\"budget\": 9"));
}

#[test]
fn titscone_exit_codes() {
    assert_eq!(code(&["titscone", "test", &fixture("ex2a.json"), "--vector", &fixture("ex2a_chamber.json")]), 0);
    let dir = TempDir::new().unwrap();
    let off = write(&dir, "v.json", r#"["0", "1", "-1", "0", "-1"]"#);
    assert_eq!(code(&["titscone", "test", &fixture("aff_a1.json"), "--vector", &off]), 1);
    let args = ["titscone", "test", &fixture("ex2a.json"), "--vector", &fixture("ex2a_outside.json"), "--cap", "20"];
    assert_eq!(code(&args), 2);
}

#[test]
fn stabilizer_and_dual() {
    let dir = TempDir::new().unwrap();
    let wall = write(&dir, "w.json", r#"["1", "1", "0", "0"]"#);
    let out: serde_json::Value = serde_json::from_str(&stdout(&["stabilizer", &fixture("a3.json"), "--vector", &wall])).unwrap();
    // α_1 and α_3 vanish on (1, 1, 0, 0): 𝒲_I = ⟨r_1, r_3⟩ ≅ ℤ/2 × ℤ/2.
    assert_eq!(out["generators"], serde_json::json!([0, 2]));
    assert_eq!(out["elements"].as_array().unwrap().len(), 4);
    assert_eq!(code(&["stabilizer", &fixture("a3.json"), "--vector", &wall]), 0);
    let origin = write(&dir, "o.json", r#"["0", "0"]"#);
    assert_eq!(code(&["stabilizer", &fixture("ex2a.json"), "--vector", &origin, "--budget", "10"]), 2);
    // Off the chamber: precondition error.
    assert_eq!(code(&["stabilizer", &fixture("a3.json"), "--vector", &fixture("ex2a_outside.json")]), 64);
    assert_eq!(code(&["dual", &fixture("ex2a.json")]), 0);
}

#[test]
fn convexity_exit_codes() {
    assert_eq!(code(&["convexity", "verify", &fixture("ex2b.json"), "--vector", &fixture("acheck_s.json")]), 1);
    assert_eq!(code(&["convexity", "verify", &fixture("a3.json"), "--vector", &fixture("a3_chamber.json")]), 0);
    let args = ["convexity", "verify", &fixture("ex2a.json"), "--vector", &fixture("ex2a_chamber.json"), "--dual"];
    assert_eq!(code(&[&args[..], &["--orbit-budget", "7", "--root-budget", "40"]].concat()), 0);
}

#[test]
fn affine_exit_codes() {
    assert_eq!(code(&["affine", "dmin", "--type", "C2", "--lc", "1", "--bar", &fixture("bar.json")]), 0);
    assert_eq!(code(&["affine", "dmin", "--type", "C2", "--lc", "1", "--bar", &fixture("bar_far.json")]), 1);
    let min = ["affine", "minimize", "--type", "A1", "--lc", "1", "--bar", &fixture("bar_far.json"), "--ld", "0"];
    assert_eq!(code(&min), 0);
    assert!(stdout(&min).contains("\"MINIMUM\""));
    assert_eq!(code(&["affine", "minimize", "--type", "B2", "--lc=-1", "--bar", &fixture("bar.json")]), 1);
    let ex = stdout(&["affine", "example47", "--m", "2"]);
    assert!(ex.contains("\"-5/4\""));
    assert_eq!(code(&["affine", "example47", "--m", "5"]), 0);
    assert_eq!(code(&["affine", "roots", "--type", "BC2", "--support", "2", "--level", "2"]), 0);
}

#[test]
fn suites_pass() {
    let out = coxconv(&["suite", "examples"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("example-a/") && text.contains("example-b/counterexample"));
}

#[test]
fn usage_and_parse_errors() {
    assert_eq!(code(&[]), 64);
    assert_eq!(code(&["bogus"]), 64);
    assert_eq!(code(&["suite", "nope"]), 64);
    assert_eq!(code(&["lcs", "check", "/nonexistent.json"]), 64);
    let dir = TempDir::new().unwrap();
    let broken = write(&dir, "broken.json", "{\"dim\": 2,");
    let out = coxconv(&["lcs", "check", &broken]);
    assert_eq!(out.status.code(), Some(64));
    assert!(String::from_utf8(out.stderr).unwrap().starts_with("error:"));
    assert_eq!(code(&["affine", "dmin", "--type", "E8", "--bar", &fixture("bar.json")]), 64);
    assert_eq!(code(&["--help"]), 0);
    assert_eq!(code(&["--version"]), 0);
}

#[test]
fn output_is_deterministic() {
    let dir = TempDir::new().unwrap();
    let v = write(&dir, "v.json", r#"["3", "2", "1"]"#);
    let args = ["orbit", "enumerate", &fixture("b3.json"), "--vector", &v];
    assert_eq!(coxconv(&args).stdout, coxconv(&args).stdout);
    let s = ["suite", "affine", "--seed", "3"];
    assert_eq!(coxconv(&s).stdout, coxconv(&s).stdout);
}
