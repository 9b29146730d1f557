use std::process::Command;

use serde_json::Value;

fn run(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_qfrac"))
        .args(args)
        .output()
        .unwrap();
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn json(args: &[&str]) -> Value {
    let (code, out, err) = run(args);
    assert_eq!(code, 0, "{args:?}: {err}");
    serde_json::from_str(&out).unwrap()
}

#[test]
fn partitions_query() {
    let (code, out, _) = run(&["partitions", "--k", "5", "--parts", "1..5"]);
    assert_eq!((code, out.trim()), (0, r#"{"k":5,"count":7}"#));
    let v = json(&[
        "partitions",
        "--k",
        "6",
        "--parts",
        "1..6",
        "--distinct",
        "--enumerate",
    ]);
    assert_eq!(v["count"], 4);
    assert_eq!(v["partitions"][0], serde_json::json!([6]));
    let (code, _, _) = run(&["partitions", "--k", "5", "--parts", "0..3"]);
    assert_eq!(code, 2);
}

#[test]
fn colored_query_and_table() {
    let v = json(&[
        "colored",
        "--variant",
        "BN",
        "--n",
        "1",
        "--i",
        "0",
        "--j",
        "1",
    ]);
    assert_eq!(v["count"], 1);
    let (code, out, _) = run(&[
        "colored", "--table", "--n-max", "2", "--i-max", "1", "--j-max", "1", "--format", "csv",
    ]);
    assert_eq!(code, 0);
    assert!(out.starts_with("n,i,j,variant,count\n"));
    let (code, _, _) = run(&[
        "colored",
        "--variant",
        "XX",
        "--n",
        "1",
        "--i",
        "0",
        "--j",
        "1",
    ]);
    assert_eq!(code, 2);
    let (code, _, _) = run(&[
        "colored",
        "--variant",
        "AN",
        "--n",
        "99",
        "--i",
        "0",
        "--j",
        "1",
    ]);
    assert_eq!(code, 2);
}

#[test]
fn verify_reports_follow_the_schema() {
    let v = json(&[
        "verify", "--id", "RR_G", "--id", "LEBESGUE", "--order", "12",
    ]);
    let rs = v.as_array().unwrap();
    assert_eq!(rs[0]["id"], "LEBESGUE");
    for r in rs {
        assert_eq!(r["status"], "pass");
        assert!(r["first_mismatch"].is_null());
        assert_eq!(r["order"], 12);
        for key in ["depth", "elapsed_ms"] {
            assert!(r[key].is_u64(), "{key}");
        }
    }
    let (code, out, _) = run(&["verify", "--id", "RR_G", "--order", "6", "--format", "text"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("RR_G pass order=6"));
}

#[test]
fn verify_usage_errors() {
    let (code, _, err) = run(&["verify", "--id", "NOPE"]);
    assert_eq!(code, 2);
    assert!(err.contains("LEBESGUE"));
    for bad in [
        &["verify"][..],
        &["verify", "--all", "--id", "RR_G"],
        &["verify", "--all", "--order", "-1"],
        &[],
    ] {
        assert_eq!(run(bad).0, 2, "{bad:?}");
    }
    assert_eq!(run(&["--help"]).0, 0);
}

#[test]
fn expand_fraction_and_identity() {
    let v = json(&[
        "expand", "--cf", "R_AB", "--a", "0", "--b", "1", "--order", "6",
    ]);
    // 1 + q/(1 + q^2/(1 + ...)) starts 1 + q
    let head: Vec<_> = v["series"].as_array().unwrap()[..2]
        .iter()
        .map(|p| p["terms"][0]["num"].as_str().unwrap().to_string())
        .collect();
    assert_eq!(head, ["1", "1"]);
    let v = json(&[
        "expand",
        "--cf",
        "EULER",
        "--q-terms",
        "1,1,1",
        "--order",
        "4",
    ]);
    let nums: Vec<_> = v["series"]
        .as_array()
        .unwrap()
        .iter()
        .map(|p| {
            p["terms"]
                .as_array()
                .unwrap()
                .first()
                .map(|t| t["num"].as_str().unwrap().to_string())
        })
        .collect();
    // q + q^2 + q^3
    assert_eq!(
        nums,
        [
            None,
            Some("1".into()),
            Some("1".into()),
            Some("1".into()),
            None
        ]
    );
    let v = json(&["expand", "--id", "RR_G", "--order", "5"]);
    assert_eq!(v["components"][0]["lhs"], v["components"][0]["rhs"]);
    assert_eq!(run(&["expand", "--cf", "THM_2_1"]).0, 2);
    assert_eq!(run(&["expand", "--cf", "NOPE"]).0, 2);
}

#[test]
fn real_constants() {
    let v = json(&["real", "--const", "ln2", "--depth", "30"]);
    assert!(v["delta"].as_f64().unwrap() < 1e-12);
    let v = json(&["real", "--const", "singular"]);
    assert_eq!(v.as_array().unwrap().len(), 3);
    assert_eq!(run(&["real", "--const", "tau"]).0, 2);
    assert_eq!(run(&["real", "--const", "pi", "--depth", "0"]).0, 2);
}

#[test]
fn list_is_sorted() {
    let v = json(&["list"]);
    let ids: Vec<_> = v
        .as_array()
        .unwrap()
        .iter()
        .map(|i| i["id"].as_str().unwrap())
        .collect();
    let mut sorted = ids.clone();
    sorted.sort();
    assert_eq!(ids, sorted);
    assert!(ids.len() >= 24);
}
