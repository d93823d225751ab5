use std::path::PathBuf;
use std::process::{Command, Output};

fn fixture(stem: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../core/fixtures").join(format!("{stem}.json"))
}

fn tpa(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tpa")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn verify_passes_on_c3() {
    let o = tpa(&["verify", fixture("c3_partial").to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("\"passed\": true"));
    assert!(out.contains("\"command\": \"verify\""));
}

#[test]
fn separability_prints_e() {
    let o = tpa(&["separability", fixture("scalar_twist_1").to_str().unwrap(), "--format", "text"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("e_lift = [\"1/2\",\"0\",\"0\",\"1/2\"]"));
}

#[test]
fn characteristic_two_fails_normalization() {
    let path = fixture("scalar_twist_1");
    let o = tpa(&["--field", "prime:2", "separability", path.to_str().unwrap(), "--center", "1"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("normalization failed"));
}

#[test]
fn missing_gauge_is_an_input_error() {
    let o = tpa(&["gauge", fixture("c3_partial").to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("missing object \"gauge\""));
}

#[test]
fn malformed_files_exit_two() {
    let dir = std::env::temp_dir().join(format!("tpa-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let bad = dir.join("bad.json");
    std::fs::write(&bad, "{\"field\": \"rational\",\n \"hopf\": }").unwrap();
    let o = tpa(&["verify", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 2"));
    let o = tpa(&["verify", dir.join("absent.json").to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn output_is_deterministic() {
    let path = fixture("c3_enveloping");
    let a = tpa(&["report", path.to_str().unwrap(), "--parallel", "1"]);
    let b = tpa(&["report", path.to_str().unwrap(), "--parallel", "4"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn timing_adds_wall_time() {
    let o = tpa(&["--timing", "--format", "text", "morita", fixture("c3_enveloping").to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("wall time:"));
}

#[test]
fn globalize_from_an_idempotent() {
    let o = tpa(&["globalize", fixture("c3_induced").to_str().unwrap(), "--format", "text"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("induced_dim_a = 2"));
}
