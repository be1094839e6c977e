// Copyright 2026 The pcycle Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn pcycle(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pcycle"))
        .args(args)
        .output()
        .expect("spawn pcycle")
}

fn stdout(out: &Output) -> String {
    assert!(
        out.status.success(),
        "exit {:?}: {}",
        out.status.code(),
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join(format!("../../scenarios/{name}.txt"))
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn gen_is_deterministic_per_seed() {
    let args = ["gen", "--nodes", "12", "--degree", "3.2", "--seed", "7"];
    let a = stdout(&pcycle(&args));
    let b = stdout(&pcycle(&args));
    assert_eq!(a, b);
    assert!(a.contains("nodes 12\n"));
    let c = stdout(&pcycle(&[
        "gen", "--nodes", "12", "--degree", "3.2", "--seed", "8",
    ]));
    assert_ne!(a, c);
}

#[test]
fn gen_defaults_reproduce_the_bundled_suite() {
    let bundled = std::fs::read_to_string(fixture("longhaul-3")).unwrap();
    assert_eq!(stdout(&pcycle(&["gen", "--seed", "3"])), bundled);
}

#[test]
fn route_design_verify_pipeline() {
    let dir = tempfile::tempdir().unwrap();
    let scenario = dir.path().join("scenario.txt");
    let loaded = dir.path().join("loaded.txt");
    stdout(&pcycle(&[
        "gen",
        "--nodes",
        "10",
        "--degree",
        "3",
        "--seed",
        "5",
        "--out",
        s(&scenario),
    ]));
    stdout(&pcycle(&["route", s(&scenario), "--out", s(&loaded)]));
    let routed = std::fs::read_to_string(&loaded).unwrap();
    assert!(!routed.contains("demand "));

    for algorithm in ["aggregation", "cida", "sla"] {
        let solution = dir.path().join(format!("{algorithm}.txt"));
        stdout(&pcycle(&[
            "design",
            "--algorithm",
            algorithm,
            s(&loaded),
            "--out",
            s(&solution),
        ]));
        let text = std::fs::read_to_string(&solution).unwrap();
        assert!(text.starts_with("pcycle "));
        assert!(text.contains(&format!("summary algorithm {algorithm}\n")));
        let report = stdout(&pcycle(&["verify", s(&solution), s(&loaded)]));
        assert!(!report.contains("unprotected"), "{algorithm}: {report}");
        // Designing straight from the demand file gives the same result.
        let direct = stdout(&pcycle(&["design", "--algorithm", algorithm, s(&scenario)]));
        assert_eq!(direct, text);
    }
}

#[test]
fn design_accepts_policy_flags() {
    let k4 = fixture("k4");
    for args in [
        ["--capacity-policy", "best-ratio"],
        ["--capacity-policy", "min-on-cycle"],
        ["--ae-mode", "min"],
        ["--ae-mode", "product"],
    ] {
        let out = stdout(&pcycle(&["design", s(&k4), args[0], args[1]]));
        assert!(out.contains("summary leftover 0\n"));
    }
}

#[test]
fn compare_all_emits_three_rows() {
    let out = stdout(&pcycle(&["compare", "--all", s(&fixture("ring-chords"))]));
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(
        lines[0],
        "scenario,algorithm,redundancy,pcycle_count,fully_protected,runtime_ms"
    );
    assert_eq!(lines.len(), 4);
    let algorithms: Vec<&str> = lines[1..]
        .iter()
        .map(|l| l.split(',').nth(1).unwrap())
        .collect();
    assert_eq!(algorithms, ["aggregation", "cida", "sla"]);
    assert!(lines[1..]
        .iter()
        .all(|l| l.starts_with("ring-chords,") && !l.ends_with(',')));
}

#[test]
fn compare_without_timing_is_byte_identical() {
    let (bowtie, k4) = (fixture("bowtie"), fixture("k4"));
    let args = ["compare", "--no-timing", s(&bowtie), s(&k4)];
    let a = stdout(&pcycle(&args));
    assert_eq!(a, stdout(&pcycle(&args)));
    assert_eq!(a.lines().count(), 7);
    assert!(a.lines().skip(1).all(|l| l.ends_with(',')));
}

#[test]
fn verify_rejects_an_incomplete_solution() {
    let dir = tempfile::tempdir().unwrap();
    let solution = dir.path().join("partial.txt");
    std::fs::write(&solution, "pcycle 1 ring a b c protects ab=1 ac=1 bc=1\n").unwrap();
    let out = pcycle(&["verify", s(&solution), s(&fixture("k4"))]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stdout).contains("unprotected"));
}

#[test]
fn verify_rejects_overclaimed_protection() {
    let dir = tempfile::tempdir().unwrap();
    let solution = dir.path().join("overclaim.txt");
    // Each ring offers ab one path, so ring a-b-d cannot claim both channels.
    std::fs::write(
        &solution,
        "pcycle 1 ring a b d protects ab=2 ad=1 bd=1\npcycle 1 ring a b c protects ac=1 bc=1\n",
    )
    .unwrap();
    let out = pcycle(&["verify", s(&solution), s(&fixture("bowtie"))]);
    assert_eq!(out.status.code(), Some(1));
    let report = String::from_utf8_lossy(&out.stdout).into_owned();
    assert!(report.contains("ab,2,2,2,2,unprotected"), "{report}");
    assert!(report.contains("ac,1,1,1,1,protected"), "{report}");
}

#[test]
fn oracle_matches_known_optimum() {
    let out = stdout(&pcycle(&["oracle", s(&fixture("k4"))]));
    assert!(out.contains("summary spare 4\n"));
    assert!(out.contains("summary algorithm oracle\n"));
}

#[test]
fn candidates_lists_cycles_with_chords() {
    let out = stdout(&pcycle(&["candidates", "--set", "sla", s(&fixture("k4"))]));
    assert!(!out.is_empty());
    for line in out.lines() {
        assert!(
            line.starts_with("cycle ") && line.contains(" straddling "),
            "{line}"
        );
    }
    let shortest = stdout(&pcycle(&["candidates", s(&fixture("k4"))]));
    assert_eq!(shortest.lines().count(), 3);
}

#[test]
fn exit_codes() {
    assert_eq!(
        pcycle(&["design", "--algorithm", "nope", "x"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(pcycle(&[]).status.code(), Some(2));
    assert_eq!(
        pcycle(&["design", "/nonexistent/file.txt"]).status.code(),
        Some(1)
    );

    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.txt");
    std::fs::write(&bad, "nodes 2\nnode a\nnode b\nlink ab a b 0 1\n").unwrap();
    let out = pcycle(&["design", s(&bad)]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("error"));
}
