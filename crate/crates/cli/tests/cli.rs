use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    run_env(args, &[])
}

fn run_env(args: &[&str], env: &[(&str, &str)]) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_rootgroups"));
    cmd.args(args);
    for (k, _) in std::env::vars().filter(|(k, _)| k.starts_with("ROOTGROUPS_")) {
        cmd.env_remove(k);
    }
    for (k, v) in env {
        cmd.env(k, v);
    }
    cmd.output().expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exited normally")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!("stdout is not JSON ({e}): {}", String::from_utf8_lossy(&out.stdout))
    })
}

#[test]
fn construct_reports_order_center_and_exponent() {
    for (family, q, order, center, exponent) in [("g2", "2", 64, 2, 8), ("su4", "3", 729, 3, 9), ("g2", "5", 15625, 5, 25)] {
        let out = run(&["construct", "--family", family, "--q", q]);
        assert_eq!(code(&out), 0);
        let v = json(&out);
        assert_eq!(v["schema_version"], 1);
        assert_eq!(v["command"], "construct");
        assert_eq!((v["order"].as_u64(), v["center_order"].as_u64(), v["exponent"].as_u64()), (Some(order), Some(center), Some(exponent)));
        assert_eq!(v["associativity"]["passed"], true);
    }
}

#[test]
fn verify_suites_and_exit_codes() {
    let out = run(&["verify", "--all", "--family", "g2", "--q", "3"]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert_eq!(v["failed"], 0);
    assert!(v["lemmas"].as_array().unwrap().iter().any(|l| l["id"] == "swapping-core" && l["verdict"] == "pass"));

    let out = run(&["verify", "--lemma", "G2Exponent", "--q", "4"]);
    assert_eq!(code(&out), 0);
    assert_eq!(json(&out)["lemmas"][0]["detail"], "exponent 8");

    let out = run(&["verify", "--lemma", "no-such-lemma"]);
    assert_eq!(code(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("unknown lemma id"));

    let out = run(&["verify", "--lemma", "thomas", "--family", "su4"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn failing_lemma_exits_one_with_a_witness() {
    let out = run(&["verify", "--lemma", "q4cent", "--family", "su4", "--q", "5"]);
    assert_eq!(code(&out), 1);
    let l = &json(&out)["lemmas"][0];
    assert_eq!(l["verdict"], "fail");
    assert!(l["witness"].as_str().unwrap().contains("≰ Q_1"));
}

#[test]
fn enumerate_rc_matches_both_q2_propositions() {
    for (family, survivors) in [("g2", 8), ("su4", 10)] {
        let out = run(&["enumerate-rc", "--family", family, "--q", "2"]);
        assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
        let v = json(&out);
        assert_eq!(v["matches"], true);
        assert_eq!(v["summary"]["undecided"], 0);
        assert_eq!(v["summary"]["radical_centric_classes"], survivors);
    }
}

#[test]
fn enumeration_beyond_q2_needs_allow_partial() {
    assert_eq!(code(&run(&["enumerate-rc", "--q", "3"])), 2);
    assert_eq!(code(&run(&["enumerate-rc", "--q", "4", "--allow-partial"])), 2);
}

#[test]
fn subgroup_cap_is_a_resource_error_unless_partial_is_allowed() {
    let args = ["enumerate-rc", "--q", "2", "--max-subgroups", "10"];
    let out = run(&args);
    assert_eq!(code(&out), 3);
    // The partial report is emitted, but it cannot establish the match.
    let out = run(&[&args[..], &["--allow-partial"]].concat());
    assert_eq!(code(&out), 1);
    let v = json(&out);
    assert_eq!(v["summary"]["complete"], false);
    assert_eq!(v["matches"], false);
}

#[test]
fn enumeration_cap_is_a_resource_error() {
    let out = run(&["construct", "--q", "4", "--max-elements", "1000"]);
    assert_eq!(code(&out), 3);
}

#[test]
fn bad_parameters_are_usage_errors() {
    assert_eq!(code(&run(&["construct", "--q", "6"])), 2);
    assert_eq!(code(&run(&["construct", "--family", "e8"])), 2);
    assert_eq!(code(&run(&["construct", "--q", "4", "--modulus", "1,0,0"])), 2);
    assert_eq!(code(&run(&["construct", "--threads", "0"])), 2);
    assert_eq!(code(&run(&["dump", "--recipe", "Z(S"])), 2);
    assert_eq!(code(&run(&["dump", "--recipe", "roots(2b)"])), 2);
}

#[test]
fn dump_describes_a_recipe() {
    let out = run(&["dump", "--recipe", "C(roots(3a+b, 3a+2b))"]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert_eq!(v["order"], 32);
    assert_eq!(v["normal"], true);
    assert_eq!(v["centric"], true);
    assert_eq!(v["elements"].as_array().unwrap().len(), 32);
}

#[test]
fn environment_mirrors_flags() {
    let out = run_env(&["construct"], &[("ROOTGROUPS_FAMILY", "su4"), ("ROOTGROUPS_Q", "3"), ("ROOTGROUPS_OUT", "md")]);
    assert_eq!(code(&out), 0);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("# su4 q=3"), "{text}");
    let out = run_env(&["construct", "--q", "2"], &[("ROOTGROUPS_Q", "3")]);
    assert_eq!(json(&out)["q"], 2);
}

#[test]
fn reports_are_byte_identical_across_runs_and_thread_counts() {
    let args = ["verify", "--all", "--family", "su4", "--q", "2"];
    let a = run(&args);
    let b = run(&args);
    let c = run(&[&args[..], &["--threads", "1"]].concat());
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(a.stdout, c.stdout);
}

fn cached(dir: &Path, args: &[&str]) -> Output {
    run(&[args, &["--cache-dir", dir.to_str().unwrap()]].concat())
}

#[test]
fn cache_hits_and_cold_runs_agree() {
    let dir = tempfile::tempdir().unwrap();
    let args = ["verify", "--all", "--family", "g2", "--q", "3"];
    let cold = cached(dir.path(), &args);
    assert!(String::from_utf8_lossy(&cold.stderr).contains("built and cached"));
    let files: Vec<_> = std::fs::read_dir(dir.path()).unwrap().collect();
    assert_eq!(files.len(), 1);
    let hit = cached(dir.path(), &args);
    assert!(String::from_utf8_lossy(&hit.stderr).contains("loaded from cache"));
    let uncached = run(&args);
    assert_eq!(code(&cold), 0);
    assert_eq!(cold.stdout, hit.stdout);
    assert_eq!(cold.stdout, uncached.stdout);
}

#[test]
fn corrupt_cache_is_rebuilt() {
    let dir = tempfile::tempdir().unwrap();
    let args = ["construct", "--family", "su4", "--q", "2"];
    let first = cached(dir.path(), &args);
    let path = std::fs::read_dir(dir.path()).unwrap().next().unwrap().unwrap().path();
    let mut bytes = std::fs::read(&path).unwrap();
    let mid = bytes.len() / 2;
    bytes[mid] ^= 0xff;
    std::fs::write(&path, bytes).unwrap();
    let again = cached(dir.path(), &args);
    assert!(String::from_utf8_lossy(&again.stderr).contains("built and cached"));
    assert_eq!(first.stdout, again.stdout);
}

#[test]
fn datum_lists_the_roots() {
    let out = run(&["datum", "--family", "g2"]);
    let v = json(&out);
    assert_eq!(v["datum"]["roots"].as_array().unwrap().len(), 6);
}
