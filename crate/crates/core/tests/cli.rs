//! The `gzariski` binary: exit codes, golden output, determinism and the
//! lattice cache.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_gzariski"))
}

fn corpus(file: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("corpus").join(file)
}

fn golden(file: &str) -> String {
    let p = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(file);
    std::fs::read_to_string(p).unwrap()
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn validate_accepts_corpus_files() {
    for f in ["inst-a.inst", "inst-d.inst", "inst-zero.inst"] {
        let o = run(&["validate", corpus(f).to_str().unwrap()]);
        assert!(o.status.success(), "{f}: {}", String::from_utf8_lossy(&o.stderr));
        assert!(stdout(&o).contains(": ok"));
    }
}

#[test]
fn input_errors_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let bad_syntax = dir.path().join("syntax.inst");
    std::fs::write(&bad_syntax, "[ring]\ncomponent 0 = 2\nmul 0 0 (1) (1 = (1)\n").unwrap();
    let bad_unity = dir.path().join("unity.inst");
    std::fs::write(
        &bad_unity,
        "[ring]\ncomponent 0 = 2\nmul 0 0 (1) (1) = (1)\none = 0:(0)\n[module]\nregular\n",
    )
    .unwrap();
    let cases: [&[&str]; 5] = [
        &["validate", bad_syntax.to_str().unwrap()],
        &["validate", bad_unity.to_str().unwrap()],
        &["verify", "/no/such/file.inst"],
        &["verify", "--corpus", "--checks", "T9.9"],
        &["spectrum", bad_syntax.to_str().unwrap(), "--kind", "qp-ring"],
    ];
    for args in cases {
        let o = run(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(String::from_utf8_lossy(&o.stderr).starts_with("error: "), "{args:?}");
    }
    let o = run(&["validate", bad_syntax.to_str().unwrap()]);
    assert!(String::from_utf8_lossy(&o.stderr).contains("3:16: syntax error"));
}

#[test]
fn exit_code_reflects_failures() {
    let d = corpus("inst-d.inst");
    assert_eq!(run(&["verify", d.to_str().unwrap()]).status.code(), Some(0));
    let b = corpus("inst-b.inst");
    assert_eq!(
        run(&["verify", b.to_str().unwrap(), "--checks", "T3.15.6"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(
        run(&["verify", b.to_str().unwrap(), "--checks", "T3.1,T4.3"])
            .status
            .code(),
        Some(0)
    );
}

#[test]
fn machine_lines_from_examples() {
    let a = corpus("inst-a.inst");
    let o = run(&["verify", a.to_str().unwrap(), "--checks", "T3.1", "--format", "machine"]);
    let text = stdout(&o);
    assert!(text.lines().any(|l| l == "check T3.1 INST-A PASS"), "{text}");

    let b = corpus("inst-b.inst");
    let o = run(&[
        "verify",
        b.to_str().unwrap(),
        "--checks",
        "T3.15.6",
        "--format",
        "machine",
    ]);
    let line = stdout(&o).lines().find(|l| !l.starts_with('#')).unwrap().to_string();
    assert_eq!(
        line,
        "check T3.15.6 INST-B FAIL witness=((0),(2)) note=semantics:radical;containment:PASS"
    );
}

#[test]
fn corpus_report_matches_golden() {
    let o = run(&["verify", "--corpus", "--format", "machine"]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(stdout(&o), golden("corpus.machine"));
}

#[test]
fn topology_and_spectrum_match_golden() {
    let d = corpus("inst-d.inst");
    let o = run(&["topology", d.to_str().unwrap(), "--space", "qp-module"]);
    assert_eq!(stdout(&o), golden("inst-d.topology"));
    let c = corpus("inst-c.inst");
    let o = run(&["spectrum", c.to_str().unwrap(), "--kind", "qp-module"]);
    assert_eq!(stdout(&o), golden("inst-c.spectrum"));
}

#[test]
fn ring_spectrum_honours_semantics_flag() {
    let b = corpus("inst-b.inst");
    let o = run(&[
        "topology",
        b.to_str().unwrap(),
        "--space",
        "qp-ring",
        "--semantics",
        "containment",
    ]);
    let text = stdout(&o);
    assert!(
        text.starts_with("INST-B qp-ring semantics=containment points=2"),
        "{text}"
    );
    assert!(text.contains("T0 true"));
    let o = run(&["topology", b.to_str().unwrap(), "--space", "qp-ring"]);
    assert!(stdout(&o).contains("T0 false"));
}

#[test]
fn output_independent_of_thread_count() {
    let one = run(&["verify", "--corpus", "--format", "machine", "--jobs", "1"]);
    let eight = run(&["verify", "--corpus", "--format", "machine", "--jobs", "8"]);
    assert_eq!(one.stdout, eight.stdout);
}

#[test]
fn out_flag_writes_the_report() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.txt");
    let o = run(&[
        "verify",
        "--corpus",
        "--format",
        "machine",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(o.stdout.is_empty());
    assert_eq!(std::fs::read_to_string(path).unwrap(), golden("corpus.machine"));
}

#[test]
fn cache_hit_changes_no_byte() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("cache");
    let cache = cache.to_str().unwrap();
    let cold = run(&["verify", "--corpus", "--format", "machine", "--cache-dir", cache]);
    let entries = std::fs::read_dir(cache).unwrap().count();
    assert_eq!(entries, 13);
    let warm = run(&[
        "verify",
        "--corpus",
        "--format",
        "machine",
        "--cache-dir",
        cache,
        "--jobs",
        "3",
    ]);
    assert_eq!(cold.stdout, warm.stdout);
    assert_eq!(stdout(&warm), golden("corpus.machine"));
    assert_eq!(std::fs::read_dir(cache).unwrap().count(), entries);
}
