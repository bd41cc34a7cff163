//! Subcommands, JSON documents and exit codes.

use origami_forge::cli::run;
use serde_json::Value;

fn forge(args: &[&str]) -> (u8, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = run(std::iter::once("origami-forge").chain(args.iter().copied()), &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn json(args: &[&str]) -> Value {
    let (code, out, err) = forge(args);
    assert_eq!(code, 0, "{args:?}: {err}");
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["schema"], 1);
    v
}

#[test]
fn analyze() {
    let v = json(&["analyze", "wollmilchsau"]);
    assert_eq!(v["genus"], 3);
    assert_eq!(v["cylinders"], serde_json::json!([[1, 2, 3, 4], [5, 6, 7, 8]]));
    assert_eq!(v["vertex_orbits"].as_array().unwrap().len(), 4);
    // Files are resolved against the fixture directory.
    assert_eq!(json(&["analyze", "o14.ori"])["genus"], 4);
}

#[test]
fn hss_and_verification() {
    let v = json(&["hss", "wollmilchsau"]);
    let words: Vec<&str> = v["curves"].as_array().unwrap().iter().map(|c| c["word"].as_str().unwrap()).collect();
    assert_eq!(words, vec!["x^4", "x y^-1 x y", "x^-1 y^-1 x^-1 y"]);
    let (code, _, trace) = forge(&["hss", "o14", "--trace"]);
    assert_eq!(code, 0);
    // One round of the list machine per curve beyond the step-1 cuts.
    let o14 = json(&["hss", "o14"]);
    let rounds = o14["genus"].as_u64().unwrap() as usize - o14["step1_cuts"].as_array().unwrap().len();
    assert_eq!(trace.lines().count(), rounds);
    for line in trace.lines() {
        let round: Value = serde_json::from_str(line).unwrap();
        assert!(round["chain"].is_array());
    }
    assert_eq!(json(&["verify-hss", "x4"])["passed"], true);
}

#[test]
fn veech_and_shear() {
    let v = json(&["veech-check", "l22", "--matrix", "1,2,0,1"]);
    assert_eq!((v["member"].clone(), v["witness_square"].clone()), (Value::Bool(true), Value::from(1)));
    assert_eq!(json(&["veech-check", "l22", "--matrix", "1,1,0,1"])["member"], false);
    let v = json(&["shear", "l22", "--p", "1", "--q", "1"]);
    assert_eq!(v["d"], 3);
    let (code, _, err) = forge(&["veech-check", "l22", "--matrix", "0,1,1,0"]);
    assert_eq!(code, 1);
    let e: Value = serde_json::from_str(err.trim()).unwrap();
    assert_eq!(e["error"]["kind"], "subgroup");
}

#[test]
fn homology() {
    let v = json(&["homology", "wollmilchsau"]);
    assert_eq!(v["rank"], 6);
    let v = json(&["homology", "wollmilchsau", "--twist"]);
    assert_eq!(v["certificate"]["passed"], true);
    assert_eq!(v["certificate"]["multiplier"], 4);
    let v = json(&["homology", "l22", "--direction", "1,1"]);
    assert_eq!(v["certificate"]["derivative"], serde_json::json!([4, -3, 3, -2]));
}

#[test]
fn moebius() {
    let v = json(&["moebius", "2,0", "0,0", "0,0", "0.5,0"]);
    assert_eq!(v["classification"], "loxodromic");
    assert_eq!(v["conjugated"], true);
    assert_eq!(v["roundtrip"], true);
    let lambda = v["fixed_data"]["lambda"][0].as_f64().unwrap();
    assert!((lambda - 0.25).abs() < 1e-9);
    assert_eq!(json(&["moebius", "1,0", "1,0", "0,0", "1,0"])["classification"], "parabolic");
    let (code, _, _) = forge(&["moebius", "1,0", "2,0", "2,0", "4,0"]);
    assert_eq!(code, 1);
}

#[test]
fn fixtures_and_sweep() {
    let v = json(&["fixtures"]);
    assert!(v["fixtures"].as_array().unwrap().iter().any(|f| f["name"] == "o14" && f["genus"] == 4));
    let v = json(&["sweep", "--max-d", "6", "--count", "20", "--seed", "5"]);
    assert_eq!((v["passed"].clone(), v["failed"].clone()), (Value::from(20), Value::from(0)));
    assert_eq!(v["algorithm"], "chacha8-fy-reject");
}

#[test]
fn exit_codes() {
    assert_eq!(forge(&["--help"]).0, 0);
    assert_eq!(forge(&["--version"]).0, 0);
    assert_eq!(forge(&[]).0, 2);
    assert_eq!(forge(&["frobnicate"]).0, 2);
    assert_eq!(forge(&["veech-check", "l22", "--matrix", "1,2,3"]).0, 2);
    assert_eq!(forge(&["moebius", "1", "0,0", "0,0", "1,0"]).0, 2);
    let (code, out, err) = forge(&["analyze", "no-such-origami"]);
    assert_eq!((code, out.as_str()), (1, ""));
    let e: Value = serde_json::from_str(err.trim()).unwrap();
    assert_eq!((e["schema"].clone(), e["error"]["kind"].clone()), (Value::from(1), Value::from("io")));
    let (code, _, err) = forge(&["shear", "l22", "--p", "2", "--q", "4"]);
    assert_eq!(code, 1);
    assert!(err.contains("\"origami\""));
}
