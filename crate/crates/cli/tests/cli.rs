//! End-to-end checks of the command-line interface.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use tempfile::TempDir;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_crowdbelief"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/fixtures")
        .join(name)
}

fn simulate(dir: &Path, seed: &str) {
    let out = run(&[
        "simulate",
        "--seed",
        seed,
        "--out-dir",
        dir.to_str().unwrap(),
    ]);
    assert!(out.status.success(), "simulate failed: {out:?}");
}

#[test]
fn usage_errors_exit_64() {
    let out = run(&["profile", "--gold", "g.csv"]);
    assert_eq!(out.status.code(), Some(64));

    let out = run(&["frobnicate"]);
    assert_eq!(out.status.code(), Some(64));

    let out = run(&["--help"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn aggregate_rejects_out_of_range_lambda_as_usage() {
    let dir = TempDir::new().unwrap();
    simulate(dir.path(), "3");
    let out = run(&[
        "aggregate",
        "--contributions",
        dir.path().join("contributions.csv").to_str().unwrap(),
        "--config",
        dir.path().join("campaign.toml").to_str().unwrap(),
        "--lambda",
        "1.5",
        "--out",
        dir.path().join("agg.csv").to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(64));
}

#[test]
fn simulate_writes_all_files_and_is_seed_deterministic() {
    let dir_a = TempDir::new().unwrap();
    let dir_b = TempDir::new().unwrap();
    simulate(dir_a.path(), "99");
    simulate(dir_b.path(), "99");
    for name in [
        "contributions.csv",
        "gold.csv",
        "truth.csv",
        "intended_profiles.csv",
        "campaign.toml",
    ] {
        let a = std::fs::read(dir_a.path().join(name)).unwrap();
        let b = std::fs::read(dir_b.path().join(name)).unwrap();
        assert!(!a.is_empty(), "{name} is empty");
        assert_eq!(a, b, "{name} differs between same-seed runs");
    }
}

#[test]
fn simulate_without_seed_prints_one() {
    let dir = TempDir::new().unwrap();
    let out = run(&["simulate", "--out-dir", dir.path().to_str().unwrap()]);
    assert!(out.status.success());
    let stdout = String::from_utf8(out.stdout).unwrap();
    assert!(stdout.lines().any(|l| l.starts_with("seed: ")), "{stdout}");
}

#[test]
fn profile_runs_on_simulated_campaign() {
    let dir = TempDir::new().unwrap();
    simulate(dir.path(), "5");
    let out_file = dir.path().join("profiles.json");
    let out = run(&[
        "profile",
        "--contributions",
        dir.path().join("contributions.csv").to_str().unwrap(),
        "--gold",
        dir.path().join("gold.csv").to_str().unwrap(),
        "--config",
        dir.path().join("campaign.toml").to_str().unwrap(),
        "--out",
        out_file.to_str().unwrap(),
        "--format",
        "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let document: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&out_file).unwrap()).unwrap();
    let profiles = document["profiles"].as_array().unwrap();
    assert_eq!(profiles.len(), 40);
    assert!(document["config"]["beta"].as_f64().unwrap() > 0.0);
    // spammers are generated to be recoverable
    let spammers: Vec<&serde_json::Value> = profiles
        .iter()
        .filter(|p| {
            p["contributor_id"]
                .as_str()
                .unwrap()
                .starts_with("spammer_")
        })
        .collect();
    assert_eq!(spammers.len(), 10);
    for spammer in spammers {
        let decision: Vec<&str> = spammer["decision"]
            .as_array()
            .unwrap()
            .iter()
            .map(|d| d.as_str().unwrap())
            .collect();
        assert!(decision.contains(&"spammer"), "decision {decision:?}");
    }
}

#[test]
fn evaluate_groups_all_emits_one_curve() {
    let dir = TempDir::new().unwrap();
    simulate(dir.path(), "5");
    let out_file = dir.path().join("curves.csv");
    let out = run(&[
        "evaluate",
        "--contributions",
        dir.path().join("contributions.csv").to_str().unwrap(),
        "--gold",
        dir.path().join("gold.csv").to_str().unwrap(),
        "--config",
        dir.path().join("campaign.toml").to_str().unwrap(),
        "--out",
        out_file.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = std::fs::read_to_string(&out_file).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("group,lambda,error_rate,mv_error"));
    let rows: Vec<&str> = lines.collect();
    // default grid has 11 points and the only group is "All"
    assert_eq!(rows.len(), 11);
    assert!(rows.iter().all(|r| r.starts_with("All,")));
}

#[test]
fn evaluate_reports_empty_groups_without_failing() {
    let dir = TempDir::new().unwrap();
    // campaign with a single archetype: three profile groups stay empty
    let spec = dir.path().join("spec.toml");
    std::fs::write(
        &spec,
        "[[archetypes]]\n\
         profile = \"spammer\"\n\
         count = 6\n\
         accuracy = 0.2\n\
         imprecision_rate = 0.0\n\
         time_ratio_range = [0.05, 0.3]\n\
         confidence_behavior = { fixed = 0 }\n",
    )
    .unwrap();
    let out = run(&[
        "simulate",
        "--spec",
        spec.to_str().unwrap(),
        "--seed",
        "17",
        "--out-dir",
        dir.path().to_str().unwrap(),
    ]);
    assert!(out.status.success(), "{out:?}");

    let out_file = dir.path().join("curves.csv");
    let out = run(&[
        "evaluate",
        "--contributions",
        dir.path().join("contributions.csv").to_str().unwrap(),
        "--gold",
        dir.path().join("gold.csv").to_str().unwrap(),
        "--config",
        dir.path().join("campaign.toml").to_str().unwrap(),
        "--groups",
        "profile",
        "--out",
        out_file.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let stderr = String::from_utf8(out.stderr).unwrap();
    assert!(stderr.contains("selects no contributors"), "{stderr}");
    let text = std::fs::read_to_string(&out_file).unwrap();
    assert!(text.lines().any(|l| l == "expert,,,"), "{text}");
    assert!(text.lines().any(|l| l.starts_with("spammer,0,")), "{text}");

    // on a spammer-only campaign every decision names the spammer profile
    let profiles_file = dir.path().join("profiles.csv");
    let out = run(&[
        "profile",
        "--contributions",
        dir.path().join("contributions.csv").to_str().unwrap(),
        "--gold",
        dir.path().join("gold.csv").to_str().unwrap(),
        "--config",
        dir.path().join("campaign.toml").to_str().unwrap(),
        "--out",
        profiles_file.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = std::fs::read_to_string(&profiles_file).unwrap();
    for row in text.lines().skip(1) {
        let decision = row.rsplit(',').next().unwrap();
        assert!(decision.split('|').any(|d| d == "spammer"), "{row}");
    }
}

#[test]
fn profile_rejects_malformed_contributions_with_row_numbers() {
    let dir = TempDir::new().unwrap();
    let out_file = dir.path().join("out.csv");
    let out = run(&[
        "profile",
        "--contributions",
        fixture("malformed/contrib_unknown_answer.csv")
            .to_str()
            .unwrap(),
        "--gold",
        fixture("gold_ok.csv").to_str().unwrap(),
        "--config",
        fixture("config.toml").to_str().unwrap(),
        "--out",
        out_file.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(1));
    let stderr = String::from_utf8(out.stderr).unwrap();
    assert!(stderr.contains("row 2"), "{stderr}");
    assert!(stderr.contains("unknown answer label"), "{stderr}");
    assert!(!out_file.exists());
}

#[test]
fn missing_input_file_exits_2() {
    let dir = TempDir::new().unwrap();
    let out = run(&[
        "profile",
        "--contributions",
        "/nonexistent/contributions.csv",
        "--gold",
        fixture("gold_ok.csv").to_str().unwrap(),
        "--config",
        fixture("config.toml").to_str().unwrap(),
        "--out",
        dir.path().join("out.csv").to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn valid_fixture_campaign_profiles_cleanly() {
    let dir = TempDir::new().unwrap();
    let out_file = dir.path().join("profiles.csv");
    let out = run(&[
        "profile",
        "--contributions",
        fixture("contributions_ok.csv").to_str().unwrap(),
        "--gold",
        fixture("gold_ok.csv").to_str().unwrap(),
        "--config",
        fixture("config.toml").to_str().unwrap(),
        "--out",
        out_file.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0), "{out:?}");
    let text = std::fs::read_to_string(&out_file).unwrap();
    assert_eq!(text.lines().count(), 3, "{text}");
}
