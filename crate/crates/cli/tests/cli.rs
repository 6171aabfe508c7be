use std::process::{Command, Output};

fn preproj(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_preproj")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn data_lines(s: &str) -> Vec<&str> {
    s.lines().filter(|l| !l.starts_with('#')).collect()
}

#[test]
fn classify_row_counts() {
    for (rank, rows) in [("1", 2), ("2", 6), ("3", 24)] {
        let o = preproj(&["classify", "--type", "A", "--rank", rank, "--format", "tsv"]);
        assert!(o.status.success());
        assert_eq!(data_lines(&stdout(&o)).len(), rows, "A{rank}");
    }
}

#[test]
fn classify_is_deterministic_and_matches_golden() {
    let a = stdout(&preproj(&["classify", "--type", "A3"]));
    let b = stdout(&preproj(&["classify", "--type", "A", "--rank", "3", "--field-char", "3"]));
    assert_eq!(a, b);
    assert_eq!(a, include_str!("../golden/a3_classify.tsv"));
}

#[test]
fn json_and_tsv_carry_the_same_rows() {
    let tsv = stdout(&preproj(&["classify", "--type", "A", "--rank", "3"]));
    let json: serde_json::Value =
        serde_json::from_str(&stdout(&preproj(&["classify", "--type", "A", "--rank", "3", "--format", "json"]))).unwrap();
    assert_eq!(json["algebra"], "A3");
    assert_eq!(json["field_char"], 1009);
    let records = json["records"].as_array().unwrap();
    let lines = data_lines(&tsv);
    assert_eq!(records.len(), lines.len());
    let list = |v: &serde_json::Value| {
        let names: Vec<&str> = v.as_array().unwrap().iter().map(|x| x.as_str().unwrap()).collect();
        if names.is_empty() { "0".to_string() } else { names.join(",") }
    };
    for (r, line) in records.iter().zip(lines) {
        let cols: Vec<&str> = line.split('\t').collect();
        assert_eq!(r["label"].as_str().unwrap(), cols[0]);
        assert_eq!(r["word"].as_str().unwrap(), cols[1]);
        assert_eq!(list(&r["torsion"]), cols[2]);
        assert_eq!(list(&r["wide"]), cols[3]);
        assert_eq!(r["v"].as_str().unwrap(), cols[4]);
        assert_eq!(r["tag"].as_str().unwrap(), cols[5]);
        assert_eq!(r["homological"].as_bool().unwrap().to_string(), cols[6]);
    }
}

#[test]
fn ideal_reports() {
    let out = stdout(&preproj(&["ideal", "--type", "A", "--rank", "3", "--word", "3,2,3"]));
    assert!(out.contains("summands\tP1,S1,M12\n") || out.contains("summands\tP1,M12,S1\n"), "{out}");
    assert!(out.contains("idempotent\ttrue"));
    let out = stdout(&preproj(&["ideal", "--type", "A", "--rank", "3", "--word", ""]));
    assert!(out.contains("dim_ideal\t10\n") && out.contains("dim_quotient\t0\n"), "{out}");
    let out = stdout(&preproj(&["ideal", "--type", "A", "--rank", "3", "--word", "1,2,1,3,2,1"]));
    assert!(out.contains("dim_ideal\t0\n") && out.contains("gen\t0\n"), "{out}");
}

#[test]
fn verify_suites_exit_zero() {
    for suite in ["theoremB", "nakayama", "stratifying"] {
        let o = preproj(&["verify", "--suite", suite]);
        assert!(o.status.success(), "{suite}: {}", stdout(&o));
        assert!(!stdout(&o).contains("FAIL"));
    }
    let o = preproj(&["verify", "--suite", "theoremB", "--type", "A", "--rank", "3"]);
    assert!(stdout(&o).contains("PASS A3 has 2 nontrivial homological records"));
}

#[test]
fn usage_errors_exit_two() {
    let cases: [&[&str]; 6] = [
        &["verify", "--suite", "nosuch"],
        &["ideal", "--type", "A", "--rank", "3", "--word", "4"],
        &["classify", "--type", "A", "--rank", "3", "--field-char", "12"],
        &["classify", "--nakayama", "3:3"],
        &["classify", "--type", "A"],
        &["classify", "--bogus"],
    ];
    for args in cases {
        assert_eq!(preproj(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn representation_infinite_type_is_refused() {
    let o = preproj(&["classify", "--type", "D", "--rank", "4", "--max-registry", "60"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("registry"));
}
