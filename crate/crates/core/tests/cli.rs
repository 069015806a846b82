//! The `detlinks` binary: outputs, exit codes and the profile cache.

use std::path::Path;
use std::process::{Command, Output};

fn detlinks(cache: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_detlinks"))
        .args(args)
        .env("DETLINKS_CACHE", cache)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

/// Last column of every data row.
fn last_column(o: &Output) -> Vec<String> {
    stdout(o)
        .lines()
        .skip(1)
        .map(|l| l.rsplit(',').next().unwrap().to_string())
        .collect()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn polar_csv_and_md() {
    let dir = tempfile::tempdir().unwrap();
    let o = detlinks(
        dir.path(),
        &["polar", "--m", "3", "--n", "3", "--r", "1", "--format", "csv"],
    );
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o),
        "m,n,r,k,e\n3,3,1,0,6\n3,3,1,1,12\n3,3,1,2,12\n3,3,1,3,6\n3,3,1,4,3\n"
    );

    let o = detlinks(
        dir.path(),
        &["polar", "--m", "2", "--n", "2..7", "--r", "1", "--format", "md"],
    );
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert_eq!(text.lines().count(), 8);
    assert!(text.contains("| 2×5 | 1 | 5 | 8 | 5 | 0 | 0 | 0 |  |  |"));
}

#[test]
fn polar_json_is_exact() {
    let dir = tempfile::tempdir().unwrap();
    let o = detlinks(
        dir.path(),
        &["polar", "--m", "5", "--n", "6", "--r", "2", "--format", "json"],
    );
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v[0]["values"][5].to_string(), "50520");
    assert_eq!(v[0]["raw_signs"][1], -1);
}

#[test]
fn output_is_deterministic_across_cache_states() {
    let dir = tempfile::tempdir().unwrap();
    let args = ["polar", "--m", "3..4", "--n", "4..5", "--r", "1..2", "--jobs", "3"];
    let cold = detlinks(dir.path(), &args);
    assert!(dir.path().join("polar-profiles.json").exists());
    let warm = detlinks(dir.path(), &args);
    assert_eq!(cold.status.code(), Some(0));
    assert_eq!(cold.stdout, warm.stdout);
}

#[test]
fn usage_errors() {
    let dir = tempfile::tempdir().unwrap();
    for args in [
        &["polar", "--m", "3", "--n", "5..4", "--r", "1"][..],
        &["polar", "--m", "3", "--n", "4"],
        &["polar", "--m", "3", "--n", "4", "--r", "1", "--format", "xml"],
        &["euler", "--hilbert-burch"],
        &["nonsense"],
    ] {
        let o = detlinks(dir.path(), args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(o.stdout.is_empty());
        assert!(!stderr(&o).is_empty());
    }
}

#[test]
fn euler_tables() {
    let dir = tempfile::tempdir().unwrap();
    let o = detlinks(
        dir.path(),
        &["euler", "--m", "3", "--n", "4", "--s", "3", "--codim", "5..6"],
    );
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "m,n,s,i,chi\n3,4,3,5,-7\n3,4,3,6,-7\n");

    let o = detlinks(dir.path(), &["euler", "--hilbert-burch", "--max-m", "3"]);
    assert_eq!(stdout(&o), "d,m1,m2,m3\n0,1,3,6\n1,0,-1,-10\n2,0,2,17\n3,0,2,-7\n");

    let o = detlinks(
        dir.path(),
        &["euler", "--m", "3", "--n", "4", "--s", "3", "--codim", "99"],
    );
    assert_eq!(o.status.code(), Some(3));
    assert!(stderr(&o).contains("codim"));
}

#[test]
fn betti_vectors() {
    let dir = tempfile::tempdir().unwrap();
    let o = detlinks(
        dir.path(),
        &["betti", "--m", "3", "--n", "4", "--s", "3", "--codim", "6"],
    );
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(last_column(&o), ["1", "0", "1", "9"]);

    let o = detlinks(
        dir.path(),
        &["betti", "--m", "2", "--n", "3", "--s", "2", "--codim", "0"],
    );
    assert_eq!(last_column(&o), ["1", "0", "1", "0"]);

    let o = detlinks(
        dir.path(),
        &["betti", "--m", "3", "--n", "4", "--s", "3", "--codim", "2"],
    );
    assert_eq!(o.status.code(), Some(3));
    assert!(stderr(&o).contains("link not smooth at this codimension"));
}

#[test]
fn domain_errors() {
    let dir = tempfile::tempdir().unwrap();
    let o = detlinks(dir.path(), &["polar", "--m", "4", "--n", "3", "--r", "1"]);
    assert_eq!(o.status.code(), Some(3));
    let o = detlinks(dir.path(), &["ring", "--r", "5", "--m", "3"]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn ring_dump_and_verify() {
    let dir = tempfile::tempdir().unwrap();
    let o = detlinks(dir.path(), &["ring", "--r", "2", "--m", "4", "--verify"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o),
        "index,partition,degree\n0,,0\n1,1,1\n2,2,2\n3,1 1,2\n4,2 1,3\n5,2 2,4\n"
    );
    assert!(stderr(&o).contains("0 mismatches"));
    let o = detlinks(dir.path(), &["ring", "--r", "2", "--m", "4", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["poincare"], serde_json::json!([1, 0, 1, 0, 2, 0, 1, 0, 1]));
}

#[test]
fn cache_lifecycle() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("polar-profiles.json");
    let o = detlinks(dir.path(), &["polar", "--m", "3", "--n", "4", "--r", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let cached: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&file).unwrap()).unwrap();
    assert_eq!(cached["version"], 1);
    assert_eq!(
        cached["entries"]["3,4,2"]["values"],
        serde_json::json!(["6", "16", "27", "24", "10", "0", "0"])
    );

    let o = detlinks(dir.path(), &["cache", "inspect"]);
    assert!(stdout(&o).contains("3,4,2"));

    // A tampered digit is trusted until --verify recomputes it.
    let text = std::fs::read_to_string(&file).unwrap().replace("\"27\"", "\"28\"");
    std::fs::write(&file, text).unwrap();
    let o = detlinks(dir.path(), &["polar", "--m", "3", "--n", "4", "--r", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("3,4,2,2,28"));
    let o = detlinks(dir.path(), &["polar", "--m", "3", "--n", "4", "--r", "2", "--verify"]);
    assert_eq!(o.status.code(), Some(4));
    assert!(stderr(&o).contains("3,4,2"));

    // Corrupted and wrong-version files are ignored with a warning.
    std::fs::write(&file, "{ broken").unwrap();
    let o = detlinks(dir.path(), &["polar", "--m", "3", "--n", "4", "--r", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("3,4,2,2,27"));
    assert!(stderr(&o).contains("warning"));
    std::fs::write(&file, r#"{"version": 2, "entries": {}}"#).unwrap();
    let o = detlinks(
        dir.path(),
        &["euler", "--m", "3", "--n", "4", "--s", "3", "--codim", "6"],
    );
    assert_eq!(o.status.code(), Some(0));
    assert!(stderr(&o).contains("version"));

    let o = detlinks(dir.path(), &["cache", "clear"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(!file.exists());
}
