//! End-to-end runs of the `impsep` binary.

use std::path::{Path, PathBuf};
use std::process::Command;

use impsep::GraphFile;

const THETA: &str = "p sep 5 5\ne 1 2\ne 2 5\ne 1 3\ne 3 4\ne 4 5\nx 1\ny 5\n";
const STAR: &str = "p sep 4 3\ne 1 2\ne 1 3\ne 1 4\nt 2 3 4\n";
const CYCLE: &str = "p sep 6 6\ne 1 2\ne 2 3\ne 3 4\ne 4 5\ne 5 6\ne 6 1\nt 1 3 5\n";

struct Run {
    code: i32,
    stdout: String,
    stderr: String,
}

fn impsep(args: &[&str]) -> Run {
    let out = Command::new(env!("CARGO_BIN_EXE_impsep")).args(args).output().unwrap();
    Run {
        code: out.status.code().unwrap(),
        stdout: String::from_utf8(out.stdout).unwrap(),
        stderr: String::from_utf8(out.stderr).unwrap(),
    }
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path.to_str().unwrap().to_owned()
}

#[test]
fn theta_important() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "theta.txt", THETA);
    let run = impsep(&["important", &f, "--max-excess", "1"]);
    assert_eq!(run.code, 0, "{}", run.stderr);
    assert_eq!(run.stdout, "2 4\ncount 1\nbound 6\n");
    assert_eq!(impsep(&["important", &f, "--max-excess", "1", "--sequential"]).stdout, run.stdout);
    assert_eq!(impsep(&["oracle", "important", &f, "3"]).stdout, run.stdout);
}

#[test]
fn minsep_sizes() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "theta.txt", THETA);
    let run = impsep(&["minsep", &f]);
    assert_eq!(run.code, 0);
    let lines: Vec<&str> = run.stdout.lines().collect();
    assert_eq!(lines[0], "size 2");
    assert!(["2 3", "2 4"].contains(&lines[1]), "{}", run.stdout);

    let edge = write(dir.path(), "edge.txt", "p sep 2 1\ne 1 2\nx 1\ny 2\n");
    let run = impsep(&["minsep", &edge]);
    assert_eq!(run.code, 2);
    assert!(run.stderr.contains("no separator exists"), "{}", run.stderr);
}

#[test]
fn mwc_answers() {
    let dir = tempfile::tempdir().unwrap();
    let star = write(dir.path(), "star.txt", STAR);
    let run = impsep(&["mwc", &star, "--excess", "0"]);
    assert_eq!((run.code, run.stdout.as_str()), (0, "YES 1\nm 1\nterminal 2\n"));

    let cycle = write(dir.path(), "cycle.txt", CYCLE);
    let no = impsep(&["mwc", &cycle, "--excess", "0"]);
    assert_eq!((no.code, no.stdout.as_str()), (1, "NO\nm 2\nterminal 1\n"));
    let yes = impsep(&["mwc", &cycle, "--excess", "1"]);
    assert_eq!(yes.code, 0);
    assert!(yes.stdout.starts_with("YES "));
    assert_eq!(impsep(&["oracle", "mwc", &cycle, "--excess", "0"]).code, 1);
    assert_eq!(impsep(&["oracle", "mwc", &cycle]).stdout.lines().next().unwrap().split(' ').count(), 4);

    let adjacent = write(dir.path(), "adj.txt", "p sep 3 2\ne 1 2\ne 2 3\nt 1 2\n");
    let run = impsep(&["mwc", &adjacent, "--excess", "3"]);
    assert_eq!(run.code, 2);
    assert!(run.stderr.contains("adjacent"), "{}", run.stderr);
}

#[test]
fn json_documents() {
    let dir = tempfile::tempdir().unwrap();
    let theta = write(dir.path(), "theta.txt", THETA);
    let star = write(dir.path(), "star.txt", STAR);

    let v: serde_json::Value = serde_json::from_str(&impsep(&["important", &theta, "--max-excess", "1", "--json"]).stdout).unwrap();
    assert_eq!(
        v,
        serde_json::json!({
            "n": 5, "r": 2, "max_excess": 1, "count": 1, "bound": "6",
            "separators": [{"vertices": [2, 4], "excess": 0}]
        })
    );
    let v: serde_json::Value = serde_json::from_str(&impsep(&["minsep", &theta, "--json"]).stdout).unwrap();
    assert_eq!((v["n"].as_u64(), v["r"].as_u64()), (Some(5), Some(2)));
    assert_eq!(v["separator"].as_array().unwrap().len(), 2);
    let v: serde_json::Value = serde_json::from_str(&impsep(&["mwc", &star, "--excess", "0", "--json"]).stdout).unwrap();
    assert_eq!(
        v,
        serde_json::json!({"n": 4, "m": 1, "terminal": 2, "excess": 0, "feasible": true, "cut": [1]})
    );
}

#[test]
fn parse_errors_exit_two() {
    let dir = tempfile::tempdir().unwrap();
    let cases = [
        ("p sep 2 1\ne 1 1\nx 1\ny 2\n", "line 2: self-loop"),
        ("p sep 2 1\ne 1 3\nx 1\ny 2\n", "line 2"),
        ("p sep 3 2\ne 1 2\nx 1\ny 3\n", "line 1"),
        ("e 1 2\n", "line 1"),
        ("p sep 3 1\ne 1 2\nq 1\n", "line 3"),
    ];
    for (i, (text, want)) in cases.iter().enumerate() {
        let f = write(dir.path(), &format!("bad{i}.txt"), text);
        let run = impsep(&["minsep", &f]);
        assert_eq!(run.code, 2, "{text}");
        assert!(run.stderr.contains(want), "{text}: {}", run.stderr);
    }
    assert_eq!(impsep(&["minsep", "/nonexistent/file"]).code, 2);
    assert_eq!(impsep(&["important"]).code, 2);
}

fn corpus_files(dir: &Path, args: &[&str]) -> Vec<PathBuf> {
    let out = dir.to_str().unwrap();
    let mut full = vec!["corpus"];
    full.extend_from_slice(args);
    full.extend_from_slice(&["--out", out]);
    let run = impsep(&full);
    assert_eq!(run.code, 0, "{}", run.stderr);
    let mut files: Vec<PathBuf> = std::fs::read_dir(dir).unwrap().map(|e| e.unwrap().path()).collect();
    files.sort();
    files
}

#[test]
fn corpus_files_parse_and_repeat() {
    let a = tempfile::tempdir().unwrap();
    let b = tempfile::tempdir().unwrap();
    let args = ["--seed", "11", "--n", "8", "--count", "15", "--mode", "random", "--min-n", "4"];
    let fa = corpus_files(a.path(), &args);
    let fb = corpus_files(b.path(), &args);
    assert_eq!(fa.len(), 15);
    assert_eq!(fa[0].file_name().unwrap(), "instance-000000.txt");
    for (x, y) in fa.iter().zip(&fb) {
        let text = std::fs::read_to_string(x).unwrap();
        assert_eq!(text, std::fs::read_to_string(y).unwrap());
        assert!(text.starts_with("c seed 11 index "));
        let f = GraphFile::parse(&text).unwrap();
        assert!((4..=8).contains(&f.graph.vertex_count()));
        assert_eq!(f.terminals.map(|t| t.len()), Some(3));
    }
    let ex = tempfile::tempdir().unwrap();
    assert_eq!(corpus_files(ex.path(), &["--seed", "0", "--n", "4", "--mode", "exhaustive"]).len(), 24);
}

#[test]
fn important_matches_oracle_on_corpus() {
    let dir = tempfile::tempdir().unwrap();
    let files = corpus_files(dir.path(), &["--seed", "5", "--n", "9", "--count", "25", "--mode", "random", "--p", "0.35", "--min-n", "5"]);
    for f in files {
        let path = f.to_str().unwrap();
        let parsed = GraphFile::parse(&std::fs::read_to_string(&f).unwrap()).unwrap();
        if parsed.x.is_none() {
            continue;
        }
        let r: usize = impsep(&["minsep", path]).stdout.lines().next().unwrap()[5..].parse().unwrap();
        for k in 0..=2 {
            let ks = k.to_string();
            let fast = impsep(&["important", path, "--max-excess", &ks]);
            let slow = impsep(&["oracle", "important", path, &(r + k).to_string()]);
            assert_eq!(fast.code, 0, "{path}: {}", fast.stderr);
            assert_eq!(fast.stdout, slow.stdout, "{path} k {k}");
        }
    }
}
