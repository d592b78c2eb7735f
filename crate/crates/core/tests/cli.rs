use qfc_core::cli::run;

fn qfc(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = run(std::iter::once("qfc").chain(args.iter().copied()), &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

#[test]
fn numerical_semigroup_commands() {
    let (code, out, _) = qfc(&["frobenius", "--monoid", "3,5"]);
    assert_eq!(code, 0);
    assert!(out.contains('7'), "{out}");
    let (code, out, _) = qfc(&["apery", "--monoid", "3,5", "--m", "3"]);
    assert_eq!(code, 0);
    for a in ["0", "5", "10"] {
        assert!(out.contains(a), "{out}");
    }
    assert_eq!(qfc(&["frobenius", "--monoid", "4,6"]).0, 65);
}

#[test]
fn gaps_report_status() {
    let (code, out, _) = qfc(&[
        "gaps",
        "--monoid",
        "(2,0);(0,2);(2,3);(3,2);(3,3)",
        "--box",
        "9",
        "--json",
    ]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["status"], "InfiniteEvidence");
    assert_eq!(v["elements"].as_array().unwrap().len(), 27);
}

#[test]
fn verdict_documents_round_trip_through_files() {
    let dir = std::env::temp_dir().join(format!("qfc-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let cases: [&[&str]; 4] = [
        &["decide", "qfc", "--monoid", "3,5", "--json"],
        &["decide", "normal", "--monoid", "2,3", "--json"],
        &[
            "decide",
            "qfc",
            "--algebra",
            "x1 + x2; x1^2; x1^3",
            "--field",
            "Q",
            "--json",
        ],
        &["decide", "fc", "--algebra", "x1; x1^-1 + x1", "--field", "F3", "--json"],
    ];
    for (i, args) in cases.iter().enumerate() {
        let (code, out, err) = qfc(args);
        assert!(code == 0 || code == 1, "{args:?}: {code} {err}");
        let path = dir.join(format!("doc{i}.json"));
        std::fs::write(&path, &out).unwrap();
        let (code, out, _) = qfc(&["certificate", "verify", "--input", path.to_str().unwrap()]);
        assert_eq!(code, 0, "{args:?}: {out}");
    }
    let path = dir.join("tampered.json");
    let (_, out, _) = qfc(&["decide", "qfc", "--monoid", "3,5", "--json"]);
    std::fs::write(&path, out.replace("\"combination\": [\n", "\"combination\": [\n7,")).unwrap();
    assert_ne!(qfc(&["certificate", "verify", "--input", path.to_str().unwrap()]).0, 0);
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn algebra_decisions() {
    assert_eq!(qfc(&["decide", "qfc", "--algebra", "x1^2", "--field", "F3"]).0, 1);
    assert_eq!(
        qfc(&["decide", "pfc", "--algebra", "x1^2 + x1^3; x1^2", "--field", "Q"]).0,
        1
    );
    assert_eq!(qfc(&["decide", "qfc", "--algebra", "x1", "--field", "Z"]).0, 65);
}

#[test]
fn oracle_commands() {
    let (code, out, _) = qfc(&[
        "oracle",
        "fuzz",
        "--monoid",
        "2",
        "--property",
        "qfc",
        "--prime",
        "2",
        "--box=-2..4",
    ]);
    assert_eq!(code, 1, "{out}");
    let (code, _, _) = qfc(&[
        "oracle",
        "fuzz",
        "--monoid",
        "3,5",
        "--property",
        "qfc",
        "--prime",
        "2",
        "--box=-2..4",
    ]);
    assert_eq!(code, 0);
    let (code, out, _) = qfc(&["oracle", "witness-f2", "--poly", "x1^3 + x1", "--json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["shift"], 1);
}

#[test]
fn help_and_usage() {
    let (code, out, _) = qfc(&["--help"]);
    assert_eq!(code, 0);
    assert!(out.contains("decide"));
    assert_eq!(qfc(&["gaps"]).0, 64);
}
