use std::process::{Command, Output};

fn polybound(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_polybound")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn report_json_names_every_root_bound() {
    let o = polybound(&["report", "90,-101,18", "--p", "1"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let names: Vec<&str> = v["entries"].as_array().unwrap().iter().map(|e| e["name"].as_str().unwrap()).collect();
    for want in ["norm_chain", "thm1_sym", "thm1_asym", "easy_l1", "blaschke_canonical_sym"] {
        assert!(names.contains(&want), "{want} missing from {names:?}");
    }
    let asym = v["entries"].as_array().unwrap().iter().find(|e| e["name"] == "thm1_asym").unwrap();
    assert!((asym["value"].as_f64().unwrap() - 90.9).abs() < 1e-9);
}

#[test]
fn report_text_and_infinite_exponent() {
    let o = polybound(&["report", "1,1", "--p", "inf", "--format", "text"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("pair_sup"));
}

#[test]
fn bad_input_exits_2() {
    for args in [
        &["report", "1,,x", "--p", "1"][..],
        &["report", "0,0", "--p", "1"],
        &["report", "1,1", "--p", "-1"],
        &["witness", "--p", "2.5"],
        &["verify", "--count", "1", "--degree-min", "0"],
    ] {
        let o = polybound(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
    }
}

#[test]
fn verify_is_clean_and_deterministic() {
    let args = ["verify", "--count", "40", "--seed", "3", "--p-grid", "1,2", "--json"];
    let a = polybound(&args);
    let b = polybound(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(stdout(&a), stdout(&b));
    let v: serde_json::Value = serde_json::from_str(&stdout(&a)).unwrap();
    assert!(v["violations"].as_array().unwrap().is_empty());
}

#[test]
fn subsets_csv_has_one_row_per_subset() {
    let o = polybound(&["subsets", "90,-101,18", "--p", "1"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert_eq!(text.lines().count(), 1 + 4);
    assert!(text.contains("102.0125"));
    assert!(String::from_utf8_lossy(&o.stderr).contains("canonical subset"));
}

#[test]
fn witness_and_sharpness_run() {
    let o = polybound(&["witness", "--p", "1.5"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(v["pair_wins"]["pair_sym"].as_f64().unwrap() > v["pair_wins"]["hausdorff_young"].as_f64().unwrap());

    let o = polybound(&["sharpness", "--count", "20", "--p-grid", "1,2"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("bound,"));
}
