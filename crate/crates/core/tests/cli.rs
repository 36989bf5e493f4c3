mod common;

use std::process::Command;

use common::{all_subsets, decreasing_sequences};
use lattice_rook::cli::{run, CliResponse, Status};
use serde_json::Value;

fn call(args: &[&str]) -> CliResponse {
    run(std::iter::once("lattice-rook").chain(args.iter().copied()))
}

fn json(args: &[&str]) -> Value {
    let mut argv = vec!["--json"];
    argv.extend_from_slice(args);
    let r = call(&argv);
    assert_eq!(r.status, Status::Ok, "{args:?}: {}", r.stderr);
    serde_json::from_str(r.stdout.trim()).unwrap()
}

fn plain(args: &[&str]) -> String {
    let r = call(args);
    assert_eq!(r.status, Status::Ok, "{args:?}: {}", r.stderr);
    r.stdout
}

fn item_text(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Array(xs) => xs.iter().map(item_text).collect::<Vec<_>>().join(","),
        other => other.to_string(),
    }
}

/// Checks that the plain rendering carries the same payload as the JSON one.
fn agree(args: &[&str]) -> Value {
    let doc = json(args);
    let text = plain(args);
    let lines: Vec<&str> = text.lines().collect();
    if let Some(v) = doc.get("value") {
        assert_eq!(lines[0], v.as_str().unwrap(), "{args:?}");
    } else if let Some(items) = doc.get("items") {
        let items = items.as_array().unwrap();
        let truncated = doc["truncated"].as_bool().unwrap();
        assert_eq!(
            lines.len(),
            items.len() + usize::from(truncated),
            "{args:?}"
        );
        for (line, item) in lines.iter().zip(items) {
            assert_eq!(*line, item_text(item));
        }
    } else {
        assert_eq!(lines[0], format!("lhs: {}", doc["lhs"].as_str().unwrap()));
        assert_eq!(lines[1], format!("rhs: {}", doc["rhs"].as_str().unwrap()));
        assert_eq!(lines[2], format!("equal: {}", doc["equal"]));
    }
    doc
}

#[test]
fn documented_examples() {
    let doc = agree(&["paths-count", "--dir", "dec", "--heights", "4,2"]);
    assert_eq!(
        doc.to_string(),
        r#"{"input":{"dir":"dec","heights":[4,2]},"method":"iterative","value":"12"}"#
    );
    assert_eq!(
        agree(&["dim-subset", "--n", "8", "--set", "2,4,6"])["value"],
        "14"
    );
    let vector = "1:{};1:{3};1:{4,7};1:{5,6};1:{1,2,3}";
    assert_eq!(
        agree(&["dim-vector", "--n", "7", "--vector", vector])["value"],
        "24"
    );
    let doc = agree(&["verify", "--identity", "cor35", "--k", "4"]);
    assert_eq!(
        (doc["lhs"].as_str(), doc["rhs"].as_str()),
        (Some("42"), Some("42"))
    );
    assert_eq!(doc["equal"], true);
    assert_eq!(
        agree(&["monoid-size", "--n", "2"]).to_string(),
        r#"{"input":{"n":2},"value":"5"}"#
    );
}

#[test]
fn every_command_agrees_across_formats() {
    let cmds: Vec<Vec<&str>> = vec![
        vec!["paths-count", "--dir", "inc", "--heights", "1,2,2,4"],
        vec![
            "paths-count",
            "--dir",
            "dec",
            "--heights",
            "3,1",
            "--method",
            "oracle",
        ],
        vec!["paths-list", "--dir", "dec", "--heights", "2,1"],
        vec![
            "paths-list",
            "--dir",
            "inc",
            "--heights",
            "1,3",
            "--cap",
            "3",
        ],
        vec![
            "dim-subset",
            "--n",
            "6",
            "--set",
            "1,4,6",
            "--method",
            "determinant",
        ],
        vec!["dim-subset", "--n", "5", "--set", ""],
        vec![
            "dim-vector",
            "--n",
            "5",
            "--vector",
            "2:{1,5};-1/2:{2,3}",
            "--method",
            "oracle",
        ],
        vec![
            "reduce",
            "--n",
            "7",
            "--vector",
            "1:{};-2:{1};1:{3};5:{1,2};3:{4,7};-2:{5,6};1:{1,2,3}",
        ],
        vec!["monoid-size", "--n", "6"],
        vec!["monoid-list", "--n", "3"],
        vec!["monoid-list", "--n", "4", "--cap", "5"],
        vec![
            "monoid-compose",
            "--n",
            "4",
            "--f",
            "2 3 4 / 1 2 3",
            "--g",
            "1 3 4 / 1 2 4",
        ],
        vec!["verify", "--identity", "cor34", "--heights", "5,3,3,1"],
        vec![
            "verify",
            "--identity",
            "hockey-stick",
            "--a",
            "4",
            "--b",
            "5",
            "--p",
            "2",
        ],
    ];
    for cmd in &cmds {
        agree(cmd);
    }
}

#[test]
fn listing_payloads() {
    let doc = json(&["paths-list", "--dir", "dec", "--heights", "1"]);
    assert_eq!(doc["items"], serde_json::json!([[0], [1]]));
    assert_eq!(doc["truncated"], false);
    let doc = json(&["monoid-list", "--n", "4", "--cap", "5"]);
    assert_eq!(doc["items"].as_array().unwrap().len(), 5);
    assert_eq!(doc["truncated"], true);
}

#[test]
fn check_never_fails_on_path_sweep() {
    for k in 1..=4 {
        for h in decreasing_sequences(k, 4) {
            let text: Vec<String> = h.iter().map(u64::to_string).collect();
            let dec = text.join(",");
            let mut rev = text.clone();
            rev.reverse();
            let inc = rev.join(",");
            for method in ["auto", "iterative", "determinant", "oracle"] {
                for (dir, hs) in [("dec", &dec), ("inc", &inc)] {
                    let r = call(&[
                        "paths-count",
                        "--dir",
                        dir,
                        "--heights",
                        hs,
                        "--method",
                        method,
                        "--check",
                    ]);
                    assert_eq!(r.status, Status::Ok, "{dir} {hs} {method}: {}", r.stderr);
                }
            }
        }
    }
}

#[test]
fn check_never_fails_on_subset_sweep() {
    for s in all_subsets(7) {
        let set: Vec<String> = s.elems().iter().map(usize::to_string).collect();
        let set = set.join(",");
        for method in ["auto", "iterative", "determinant", "oracle"] {
            let r = call(&[
                "dim-subset",
                "--n",
                "7",
                "--set",
                &set,
                "--method",
                method,
                "--check",
            ]);
            assert_eq!(r.status, Status::Ok, "{set} {method}: {}", r.stderr);
        }
    }
}

#[test]
fn usage_errors_exit_one() {
    for args in [
        vec![],
        vec!["frobnicate"],
        vec!["paths-count", "--dir", "dec"],
        vec!["paths-count", "--dir", "sideways", "--heights", "1"],
        vec!["paths-count", "--dir", "dec", "--heights", "4,x"],
        vec!["paths-count", "--dir", "dec", "--heights", "-1"],
        vec!["paths-count", "--dir", "dec", "--heights", ""],
        vec!["monoid-size", "--n", "two"],
        vec!["dim-vector", "--n", "3", "--vector", "1{1}"],
        vec!["monoid-compose", "--n", "3", "--f", "1 2", "--g", "1 / 1"],
        vec!["verify", "--identity", "cor34", "--bogus"],
        vec!["verify", "--identity", "cor34"],
    ] {
        let r = call(&args);
        assert_eq!(r.exit_code(), 1, "{args:?}");
        assert!(r.stdout.is_empty() && !r.stderr.is_empty(), "{args:?}");
    }
}

#[test]
fn domain_errors_exit_two() {
    for args in [
        vec!["paths-count", "--dir", "dec", "--heights", "1,2"],
        vec!["paths-count", "--dir", "inc", "--heights", "3,1"],
        vec!["dim-subset", "--n", "3", "--set", "1,4"],
        vec!["dim-subset", "--n", "3", "--set", "2,2"],
        vec!["dim-vector", "--n", "3", "--vector", "1:{5}"],
        vec!["monoid-compose", "--n", "3", "--f", "1 / 4", "--g", "1 / 1"],
        vec!["monoid-size", "--n", "0"],
        vec!["verify", "--identity", "cor35", "--k", "0"],
    ] {
        let r = call(&args);
        assert_eq!(r.exit_code(), 2, "{args:?}: {}", r.stderr);
    }
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_lattice-rook");
    let out = Command::new(bin)
        .args(["paths-count", "--dir", "dec", "--heights", "4,2"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "12\n");
    let out = Command::new(bin).arg("--nope").output().unwrap();
    assert_eq!(out.status.code(), Some(1));
    let out = Command::new(bin)
        .args(["paths-count", "--dir", "dec", "--heights", "1,2"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(out.stdout.is_empty());
}
