use std::process::{Command, Output};

use nilring::registry::{fact_text, CheckReport, HuntResult, Witness};
use serde_json::Value;

fn nilring(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_nilring"))
        .args(args)
        .env_remove("NILRING_MAX_ORDER")
        .output()
        .unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> Value {
    let mut full = args.to_vec();
    full.extend(["--format", "json"]);
    let out = nilring(&full);
    serde_json::from_slice(&out.stdout).unwrap()
}

/// Fact lines of a rendered witness: everything after the ideal, set and map listings.
fn text_facts(text: &str) -> Vec<String> {
    let mut facts = Vec::new();
    let mut inside = false;
    for line in text.lines() {
        if line.trim_start().starts_with("witness over") {
            inside = true;
            continue;
        }
        if !inside {
            continue;
        }
        let t = line.trim();
        let listing = (t.starts_with('I') && t.contains(" [") && t.contains("] = {"))
            || t.starts_with("S = {")
            || t.starts_with("f = ")
            || (t.starts_with('f') && t.contains(": I"));
        if !listing && line.starts_with("      ") {
            facts.push(t.to_string());
        }
    }
    facts
}

#[test]
fn exit_codes() {
    assert_eq!(nilring(&["describe", "cyclic:12"]).status.code(), Some(0));
    assert_eq!(nilring(&["describe", "circle:3"]).status.code(), Some(2));
    assert_eq!(nilring(&["describe"]).status.code(), Some(2));
    assert_eq!(
        nilring(&["check", "P999", "cyclic:4"]).status.code(),
        Some(2)
    );
    assert_eq!(
        nilring(&["--max-order", "10", "describe", "cyclic:12"])
            .status
            .code(),
        Some(3)
    );
    assert_eq!(
        nilring(&["localize", "cyclic:8", "--invert", "2"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        nilring(&["check", "P201", "cyclic:12"]).status.code(),
        Some(0)
    );
    assert_eq!(nilring(&["hunt", "P201"]).status.code(), Some(0));
    assert_eq!(nilring(&["hunt", "X223"]).status.code(), Some(0));
}

#[test]
fn env_cap() {
    let out = Command::new(env!("CARGO_BIN_EXE_nilring"))
        .args(["ideals", "cyclic:12"])
        .env("NILRING_MAX_ORDER", "8")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("cap"));
}

#[test]
fn help_documents_inline_grammar() {
    let help = stdout(&nilring(&["--help"]));
    for form in ["cyclic:N", "ut3:M", "product:", "quotient:", "tables:"] {
        assert!(help.contains(form), "{form}");
    }
}

#[test]
fn zero_ring_is_degenerate() {
    let d = json(&["describe", "cyclic:1"]);
    assert_eq!(d["order"], 1);
    assert_eq!(d["zero_ring"], true);
    assert_eq!(d["semisimple"], true);
    let i = json(&["ideals", "cyclic:1"]);
    assert_eq!(i["count"], 1);
    assert_eq!(i["ideals"][0]["nilpotent"], true);
    assert_eq!(i["ideals"][0]["essential"], true);
    assert_eq!(i["ideals"][0]["nil_essential"], true);
}

#[test]
fn describe_z12() {
    let d = json(&["describe", "cyclic:12"]);
    assert_eq!(d["units"], serde_json::json!(["1", "5", "7", "11"]));
    assert_eq!(
        d["jacobson_radical"]["members"],
        serde_json::json!(["0", "6"])
    );
    assert_eq!(
        d["socle"]["members"],
        serde_json::json!(["0", "2", "4", "6", "8", "10"])
    );
    assert_eq!(d["nilradical"]["members"], serde_json::json!(["0", "6"]));
}

#[test]
fn localize_z6() {
    let l = json(&["localize", "cyclic:6", "--invert", "3"]);
    assert_eq!(l["multiplicative_set"], serde_json::json!(["1", "3"]));
    assert_eq!(l["kernel"], serde_json::json!(["0", "2", "4"]));
    assert_eq!(l["order"], 2);
    let three = l["ideals"]
        .as_array()
        .unwrap()
        .iter()
        .find(|r| r["ideal"]["label"] == "(3)")
        .unwrap();
    assert_eq!(three["nil_essential"], false);
    assert_eq!(three["localized_nil_essential"], true);
}

#[test]
fn text_and_json_facts_agree() {
    for (check, ring) in [
        ("X202", "ut3:2"),
        ("X205", "ut3:2"),
        ("X223", "cyclic:6"),
        ("X223", "cyclic:12"),
    ] {
        let text = stdout(&nilring(&["check", check, ring]));
        let report: CheckReport =
            serde_json::from_slice(&nilring(&["check", check, ring, "--format", "json"]).stdout)
                .unwrap();
        let witness: Witness = report.witness.expect("witness");
        let from_json: Vec<String> = witness
            .facts
            .iter()
            .map(|f| fact_text(&witness, f))
            .collect();
        let from_text = text_facts(&text);
        assert!(!from_text.is_empty());
        for fact in &from_text {
            assert!(from_json.contains(fact), "{check} {ring}: {fact}");
        }
        for ideal in &witness.ideals {
            assert!(text.contains(&format!("= {{{}}}", ideal.members.join(", "))));
        }
    }
    let text = stdout(&nilring(&["hunt", "X223"]));
    let hunt: HuntResult =
        serde_json::from_slice(&nilring(&["hunt", "X223", "--format", "json"]).stdout).unwrap();
    let w = hunt.witness.unwrap().witness;
    let from_json: Vec<String> = w.facts.iter().map(|f| fact_text(&w, f)).collect();
    for fact in text_facts(&text) {
        assert!(from_json.contains(&fact), "{fact}");
    }
}

#[test]
fn suite_selection_and_corpus_file() {
    let dir = std::env::temp_dir().join(format!("nilring-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let corpus = dir.join("corpus.json");
    std::fs::write(
        &corpus,
        r#"{"rings":[{"kind":"cyclic","n":6},{"kind":"ut3","m":2}],"checks":["X223","R220"]}"#,
    )
    .unwrap();
    let s = json(&["suite", "--corpus", corpus.to_str().unwrap()]);
    assert_eq!(s["reports"].as_array().unwrap().len(), 4);
    assert_eq!(s["summary"]["confirmed"]["X223"], 1);
    let empty = dir.join("empty.json");
    std::fs::write(&empty, r#"{"rings":[]}"#).unwrap();
    let out = nilring(&["suite", "--corpus", empty.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    std::fs::write(&empty, r#"{"rings":[{"kind":"cyclic","n":0}]}"#).unwrap();
    assert_eq!(
        nilring(&["suite", "--corpus", empty.to_str().unwrap()])
            .status
            .code(),
        Some(2)
    );
}
