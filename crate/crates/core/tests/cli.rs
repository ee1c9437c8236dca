use std::process::Command;

use scp_cro::bench::brute_force_optimum;
use scp_cro::orlib::{generate_random, write_native};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_scp-cro"))
}

fn run_ok(cmd: &mut Command) -> String {
    let out = cmd.output().expect("binary runs");
    assert!(
        out.status.success(),
        "stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn native_file(dir: &tempfile::TempDir, name: &str, seed: u64) -> std::path::PathBuf {
    let path = dir.path().join(name);
    let inst = generate_random(8, 12, 0.3, 1, 100, seed).unwrap();
    std::fs::write(&path, write_native(&inst)).unwrap();
    path
}

#[test]
fn solve_greedy_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let f = native_file(&dir, "g.txt", 3);
    let a = run_ok(
        bin()
            .args(["solve", "--format", "native", "--algo", "greedy"])
            .arg(&f),
    );
    let b = run_ok(
        bin()
            .args(["solve", "--format", "native", "--algo", "greedy"])
            .arg(&f),
    );
    assert_eq!(a, b);
    assert!(a.starts_with("cost "));
    assert!(a.contains("\ncover "));
}

#[test]
fn oracle_matches_library() {
    let dir = tempfile::tempdir().unwrap();
    let f = native_file(&dir, "o.txt", 9);
    let out = run_ok(bin().args(["oracle", "--format", "native"]).arg(&f));
    let inst = generate_random(8, 12, 0.3, 1, 100, 9).unwrap();
    let (cost, cover) = brute_force_optimum(&inst).unwrap();
    let cols: Vec<String> = cover.one_based().iter().map(|j| j.to_string()).collect();
    assert_eq!(out, format!("cost {cost}\ncover {}\n", cols.join(" ")));
}

#[test]
fn bench_json_is_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    let f = native_file(&dir, "b.txt", 1);
    let args = [
        "bench", "--format", "native", "--seed", "1", "--trials", "10", "--bks", "100",
    ];
    let a = run_ok(bin().args(args).arg(&f));
    let b = run_ok(bin().args(args).arg(&f));
    assert_eq!(a, b);
    let v: serde_json::Value = serde_json::from_str(&a).unwrap();
    assert_eq!(v["rows"][0]["trials"], 10);
    assert!(v["rows"][0]["opt_count"].is_u64());
}

#[test]
fn bench_csv_columns() {
    let dir = tempfile::tempdir().unwrap();
    let f = native_file(&dir, "c.txt", 2);
    let out = run_ok(
        bin()
            .args([
                "bench",
                "--format",
                "native",
                "--trials",
                "3",
                "--out",
                "csv",
                "--fe-limit",
                "500",
            ])
            .arg(&f),
    );
    assert!(out.starts_with("instance,bks,opt,best,pct,mean,pct,worst,pct\n"));
}

#[test]
fn gen_writes_native_instance() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("gen.txt");
    run_ok(
        bin()
            .args([
                "gen", "--rows", "8", "--cols", "12", "--seed", "4", "--output",
            ])
            .arg(&path),
    );
    let text = std::fs::read_to_string(&path).unwrap();
    assert_eq!(
        text,
        write_native(&generate_random(8, 12, 0.3, 1, 100, 4).unwrap())
    );
}

#[test]
fn suite_covers_every_file() {
    let dir = tempfile::tempdir().unwrap();
    native_file(&dir, "scp41.txt", 1);
    native_file(&dir, "other.txt", 2);
    let out = run_ok(
        bin()
            .args([
                "suite",
                "--format",
                "native",
                "--trials",
                "2",
                "--fe-limit",
                "300",
                "--out",
                "csv",
            ])
            .arg(dir.path()),
    );
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 3);
    assert!(lines[1].starts_with("4.1,429,") || lines[2].starts_with("4.1,429,"));
}

#[test]
fn usage_errors_exit_nonzero() {
    let out = bin().args(["solve"]).output().unwrap();
    assert!(!out.status.success());
    let out = bin()
        .args(["solve", "--algo", "simplex", "x.txt"])
        .output()
        .unwrap();
    assert!(!out.status.success());
    let out = bin()
        .args(["solve", "/nonexistent/file.txt"])
        .output()
        .unwrap();
    assert!(!out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("error"));
    let out = bin()
        .args(["solve", "--collision-rate", "2", "x.txt"])
        .output()
        .unwrap();
    assert!(!out.status.success());
}
