//! End-to-end tests of the command-line binary: exit codes, output
//! determinism, the JSON schema, and the point-count cache protocol.

use std::path::Path;
use std::process::{Command, Output};

const BIN: &str = env!("CARGO_BIN_EXE_tower-forge");

fn run(args: &[&str]) -> Output {
    Command::new(BIN)
        .args(args)
        .env_remove("TOWER_FORGE_CACHE_DIR")
        .output()
        .expect("binary runs")
}

fn run_with_cache(args: &[&str], cache_dir: &Path) -> Output {
    Command::new(BIN)
        .args(args)
        .env("TOWER_FORGE_CACHE_DIR", cache_dir)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("stdout is UTF-8")
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).expect("stderr is UTF-8")
}

#[test]
fn success_paths_exit_zero() {
    for args in [
        &["projspace", "--ell", "5", "--level", "2"][..],
        &["orbits", "--ell", "3", "--level", "4"],
        &["tower", "--p", "7", "--ell", "5", "--max-level", "4"],
        &["curve", "--p", "7", "--a", "6"],
        &["census", "--p", "7"],
        &["hasse", "--p", "13"],
        &["--help"],
        &["--version"],
        &["curve", "--help"],
    ] {
        let out = run(args);
        assert_eq!(out.status.code(), Some(0), "{args:?}: {}", stderr(&out));
    }
}

#[test]
fn usage_and_validation_errors_exit_one() {
    for args in [
        // clap-level: unknown flag, missing required, bad value.
        &["projspace", "--ell", "5"][..],
        &["tower", "--p", "7", "--ell", "5", "--bogus"],
        &["no-such-command"],
        &["census", "--p", "7", "--format", "yaml"],
        // library-level validation.
        &["projspace", "--ell", "4", "--level", "2"],
        &["projspace", "--ell", "2", "--level", "1"],
        &[
            "orbits", "--ell", "3", "--level", "2", "--matrix", "1,3,2,9",
        ],
        &["orbits", "--ell", "3", "--level", "2", "--matrix", "1,2,3"],
        &["orbits", "--ell", "3", "--level", "2", "--matrix", "what"],
        &["curve", "--p", "7", "--a", "1"],
        &["curve", "--p", "8", "--a", "3"],
        &[
            "curve", "--p", "7", "--a", "6", "--ell", "7", "--level", "2",
        ],
        &["tower", "--p", "5", "--ell", "5"],
        // csv not defined for the certificate chain.
        &["curve", "--p", "7", "--a", "6", "--format", "csv"],
        &["hasse", "--p", "13", "--format", "csv"],
    ] {
        let out = run(args);
        assert_eq!(out.status.code(), Some(1), "{args:?}: {}", stdout(&out));
        assert!(!stderr(&out).is_empty(), "{args:?} must explain itself");
    }
}

#[test]
fn partial_fiber_flags_are_rejected() {
    // --ell and --level must come together on the curve command.
    for args in [
        &["curve", "--p", "7", "--a", "6", "--ell", "5"][..],
        &["curve", "--p", "7", "--a", "6", "--level", "2"],
    ] {
        let out = run(args);
        assert_eq!(out.status.code(), Some(1), "{args:?}");
    }
}

#[test]
fn output_is_byte_deterministic() {
    for args in [
        &["census", "--p", "11", "--format", "json"][..],
        &["tower", "--p", "7", "--ell", "5"],
        &["orbits", "--ell", "5", "--level", "4", "--format", "csv"],
    ] {
        let a = run(args);
        let b = run(args);
        assert_eq!(a.status.code(), Some(0));
        assert_eq!(a.stdout, b.stdout, "{args:?} output drifted between runs");
    }
    // Thread count must not leak into the bytes either.
    let one = run(&["census", "--p", "13", "--threads", "1"]);
    let four = run(&["census", "--p", "13", "--threads", "4"]);
    assert_eq!(one.stdout, four.stdout, "worker threads changed the output");
}

#[test]
fn tower_json_matches_schema() {
    let out = run(&["tower", "--p", "7", "--ell", "5", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("valid JSON");
    assert_eq!(v["p"], 7);
    assert_eq!(v["ell"], 5);
    assert_eq!(v["dv_bound"], 6);
    assert_eq!(v["optimal"], true);
    assert_eq!(v["limit"], "6");
    let levels = v["levels"].as_array().expect("levels array");
    assert_eq!(levels.len(), 4);
    for (lv, n) in levels.iter().zip([2u64, 4, 6, 8]) {
        assert_eq!(lv["n"], n);
        for key in ["degree", "genus", "points_lower_bound", "ratio"] {
            assert!(
                lv[key].is_string(),
                "level {n} field {key} must be a string"
            );
        }
    }
    assert_eq!(levels[3]["ratio"], "1406250/233251");
}

#[test]
fn output_flag_writes_the_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("tower.json");
    let out = run(&[
        "tower",
        "--p",
        "7",
        "--ell",
        "5",
        "--format",
        "json",
        "--output",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(
        stdout(&out).is_empty(),
        "nothing goes to stdout with --output"
    );
    let direct = run(&["tower", "--p", "7", "--ell", "5", "--format", "json"]);
    assert_eq!(std::fs::read(&path).unwrap(), direct.stdout);
}

#[test]
fn census_cap_guards_the_scan() {
    // Above the default ceiling the command refuses and says how to proceed.
    let refused = run(&["census", "--p", "37"]);
    assert_eq!(refused.status.code(), Some(1));
    assert!(stderr(&refused).contains("capped at p <= 31"), "{}", stderr(&refused));
    // Raising the cap explicitly unlocks the run.
    let allowed = run(&["census", "--p", "37", "--cap", "37", "--threads", "4"]);
    assert_eq!(allowed.status.code(), Some(0), "{}", stderr(&allowed));
    assert!(
        stdout(&allowed).contains("18 supersingular"),
        "{}",
        stdout(&allowed)
    );
}

#[test]
fn census_range_covers_each_prime() {
    let out = run(&["census", "--p", "5", "--max-p", "13", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    // One table per prime in 5..=13, each led by its own header.
    assert_eq!(
        text.matches("a,points,trace,group_n1,group_n2,criteria\n")
            .count(),
        4
    );
    assert!(text.contains("6+1*w,144,-22,12,12,(1)(3)"), "{text}");
}

#[test]
fn replay_command_reports_every_check() {
    let out = run(&["replay-paper"]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let text = stdout(&out);
    assert_eq!(text.matches("[ok]").count(), 8, "{text}");
    assert!(text.contains("all 8 checks passed"), "{text}");
    assert!(!text.contains("FAILED"), "{text}");
}

#[test]
fn cache_records_then_hits_then_catches_corruption() {
    let dir = tempfile::tempdir().unwrap();

    let first = run_with_cache(&["curve", "--p", "7", "--a", "6"], dir.path());
    assert_eq!(first.status.code(), Some(0), "{}", stderr(&first));
    assert!(
        stdout(&first).contains("points: 64 (computed and cached)"),
        "{}",
        stdout(&first)
    );

    let cache_file = dir.path().join("point-counts.csv");
    assert_eq!(
        std::fs::read_to_string(&cache_file).unwrap(),
        "p,a_c0,a_c1,n\n7,6,0,64\n"
    );

    let second = run_with_cache(&["curve", "--p", "7", "--a", "6"], dir.path());
    assert_eq!(second.status.code(), Some(0));
    assert!(
        stdout(&second).contains("points: 64 (cache hit)"),
        "{}",
        stdout(&second)
    );

    let verified = run_with_cache(&["curve", "--p", "7", "--a", "6", "--verify"], dir.path());
    assert_eq!(verified.status.code(), Some(0));
    assert!(
        stdout(&verified).contains("points: 64 (cache hit, verified by recount)"),
        "{}",
        stdout(&verified)
    );

    // Corrupt the cached count to 48: that is within the Weil bound and
    // divisible by 4, so it passes the shape checks and only a recount can
    // catch it. --verify does, with the cross-check exit code.
    std::fs::write(&cache_file, "p,a_c0,a_c1,n\n7,6,0,48\n").unwrap();
    let poisoned = run_with_cache(&["curve", "--p", "7", "--a", "6", "--verify"], dir.path());
    assert_eq!(poisoned.status.code(), Some(2), "{}", stdout(&poisoned));
    assert!(
        stderr(&poisoned).contains("cross-check failed"),
        "{}",
        stderr(&poisoned)
    );

    // An impossible count (violates 4 | N) is rejected even without --verify.
    std::fs::write(&cache_file, "p,a_c0,a_c1,n\n7,6,0,63\n").unwrap();
    let impossible = run_with_cache(&["curve", "--p", "7", "--a", "6"], dir.path());
    assert_eq!(impossible.status.code(), Some(2), "{}", stdout(&impossible));

    // A malformed cache line is a usage-level error, not a cross-check.
    std::fs::write(&cache_file, "p,a_c0,a_c1,n\n7,6,0\n").unwrap();
    let malformed = run_with_cache(&["curve", "--p", "7", "--a", "6"], dir.path());
    assert_eq!(malformed.status.code(), Some(1), "{}", stderr(&malformed));
    assert!(
        stderr(&malformed).contains("line 2"),
        "{}",
        stderr(&malformed)
    );
}

#[test]
fn quadratic_extension_parameters_parse_on_the_command_line() {
    let out = run(&["curve", "--p", "11", "--a", "6+1*w", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["a"], "6+1*w");
    assert_eq!(v["point_count"], 144);
    assert_eq!(v["trace"], -22);
    assert_eq!(v["criteria"]["tags"], "(1)(3)");

    let garbage = run(&["curve", "--p", "11", "--a", "6+w+w^2"]);
    assert_eq!(garbage.status.code(), Some(1));
}
