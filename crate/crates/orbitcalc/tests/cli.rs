mod common;

use serde_json::{json, Value};

use common::{data, orbitcalc, DATA_FILES};
use orbitcalc::format;

#[test]
fn classify_two_edge_cycle() {
    let out = orbitcalc(&["--format", "json", "classify", &data("s4.txt")]);
    assert_eq!(out.status, 0);
    assert_eq!(out.stdout, "{\"class\":{\"summands\":[{\"kind\":\"S4\",\"count\":1}],\"chi\":2}}\n");
}

#[test]
fn admissibility_of_sphere_bundle() {
    let out = orbitcalc(&["--format", "json", "admissible", &data("s2xs2.txt")]);
    assert_eq!(out.status, 0);
    assert_eq!(out.json(), json!({"admissible": false, "witnesses": [[0, 2], [1, 3]]}));
}

#[test]
fn symmetry_rank_calculator() {
    let out = orbitcalc(&["--format", "json", "calc", "symrank", "--n", "6", "--k", "2"]);
    assert_eq!(out.status, 0);
    assert_eq!(out.json(), json!({"bound": 3}));
}

#[test]
fn classify_table_rows() {
    let expected = [
        ("cp2.txt", json!([{"kind": "CP2", "count": 1}]), 3),
        ("cp2bar.txt", json!([{"kind": "CP2bar", "count": 1}]), 3),
        ("s2xs2.txt", json!([{"kind": "S2xS2", "count": 1}]), 4),
        ("cp2_connsum_cp2bar.txt", json!([{"kind": "CP2", "count": 1}, {"kind": "CP2bar", "count": 1}]), 4),
        ("cp2_connsum_cp2.txt", json!([{"kind": "CP2", "count": 2}]), 4),
    ];
    for (file, summands, chi) in expected {
        let out = orbitcalc(&["--format", "json", "classify", &data(file)]);
        assert_eq!(out.status, 0, "{file}");
        assert_eq!(out.json(), json!({"class": {"summands": summands, "chi": chi}}), "{file}");
    }
}

#[test]
fn domain_errors_exit_one_with_an_error_object() {
    let out = orbitcalc(&["--format", "json", "validate", &data("illegal.txt")]);
    assert_eq!(out.status, 1);
    assert_eq!(out.json()["error"]["code"], "illegal_determinant");
    assert!(out.stderr.is_empty());

    let text = orbitcalc(&["validate", &data("illegal.txt")]);
    assert_eq!(text.status, 1);
    assert!(text.stdout.is_empty());
    assert!(text.stderr.starts_with("error [illegal_determinant]"), "{}", text.stderr);
    assert!(!text.stderr.contains("panicked"));

    let cases: [(&[&str], &str); 6] = [
        (&["calc", "symrank", "--n", "6", "--k", "0"], "invalid_curvature_index"),
        (&["calc", "intersection", "--n", "6", "--d1", "3", "--d2", "2", "--k", "2"], "order_violation"),
        (&["calc", "trichotomy", "--n", "5", "--b2", "1"], "odd_dimension"),
        (&["calc", "b2bound", "--b", "2", "--chi-triple", "0"], "empty_fixed_set"),
        (&["calc", "orderbound", "4", "-2"], "non_positive_chi"),
        (&["classify", "/nonexistent/space.txt"], "io_error"),
    ];
    for (args, code) in cases {
        let mut full = vec!["--format", "json"];
        full.extend_from_slice(args);
        let out = orbitcalc(&full);
        assert_eq!(out.status, 1, "{args:?}");
        assert_eq!(out.json()["error"]["code"], code, "{args:?}");
    }
}

#[test]
fn usage_errors_exit_two() {
    let cases: [&[&str]; 7] = [
        &[],
        &["frobnicate"],
        &["survey", "--t-max", "1", "--w-max", "1"],
        &["survey", "--t-max", "4", "--w-max", "0"],
        &["survey", "--t-max", "4", "--w-max", "1", "--jobs", "0"],
        &["decompose", "x.txt", "--force-split", "0,2,case3"],
        &["--format", "yaml", "calc", "symrank", "--n", "6", "--k", "2"],
    ];
    for args in cases {
        let out = orbitcalc(args);
        assert_eq!(out.status, 2, "{args:?}: {}", out.stderr);
        assert!(out.stdout.is_empty(), "{args:?}");
    }
    assert_eq!(orbitcalc(&["--help"]).status, 0);
}

#[test]
fn forced_root_split_agrees_with_default() {
    let path = data("five_edges.txt");
    let default = orbitcalc(&["--format", "json", "decompose", &path]).json();
    let splits = default["splits"].as_array().unwrap().clone();
    assert!(!splits.is_empty());
    let mut raw = Vec::new();
    for split in splits {
        let split = split.as_str().unwrap();
        let forced = orbitcalc(&["--format", "json", "decompose", &path, "--force-split", split]).json();
        assert_eq!(forced["class"], default["class"], "{split}");
        assert_eq!(forced["root"], split);
        raw.push(forced["raw_class"].clone());
    }
    raw.sort_by_key(|v| v.to_string());
    raw.dedup();
    assert!(raw.len() > 1, "the raw cut result differs across cuts for this space");
}

fn text_fields(text: &str) -> Vec<(String, String)> {
    text.lines()
        .filter_map(|l| l.split_once(": "))
        .map(|(k, v)| (k.to_string(), v.to_string()))
        .collect()
}

fn scalar(v: &Value) -> String {
    match v {
        Value::Array(items) if items.is_empty() => "none".to_string(),
        Value::Array(items) => items.iter().map(scalar).collect::<Vec<_>>().join(" "),
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

#[test]
fn text_and_json_report_the_same_facts() {
    let calcs: [&[&str]; 8] = [
        &["calc", "symrank", "--n", "6", "--k", "2"],
        &["calc", "connectedness", "--n", "6", "--d", "2", "--k", "2", "--delta", "1"],
        &["calc", "intersection", "--n", "6", "--d1", "2", "--d2", "2", "--k", "2"],
        &["calc", "periodicity", "--n", "6", "--d", "2", "--l", "1"],
        &["calc", "trichotomy", "--n", "8", "--b2", "3"],
        &["calc", "conner", "--ambient", "1,0,0,2,0,0,1", "--fixed", "1,2,1"],
        &["calc", "b2bound", "--b", "2", "--chi-triple", "1"],
        &["calc", "orderbound", "4", "6"],
    ];
    let empty = orbitcalc(&["calc", "periodicity", "--n", "6", "--d", "2", "--l", "2"]);
    assert_eq!(empty.stdout, "surjective: none\ninjective: none\n");
    for args in calcs {
        let text = orbitcalc(args);
        let mut full = vec!["--format", "json"];
        full.extend_from_slice(args);
        let doc = orbitcalc(&full).json();
        let fields = text_fields(&text.stdout);
        let object = doc.as_object().unwrap();
        assert_eq!(fields.len(), object.len(), "{args:?}");
        for (key, value) in fields {
            assert_eq!(scalar(&object[&key]), value, "{args:?} field {key}");
        }
    }
    for file in ["s2xs2.txt", "five_edges.txt", "s4.txt"] {
        let path = data(file);
        let text = text_fields(&orbitcalc(&["admissible", &path]).stdout);
        let doc = orbitcalc(&["--format", "json", "admissible", &path]).json();
        assert_eq!(text[0].1, doc["admissible"].to_string());
        let witnesses: Vec<String> =
            doc["witnesses"].as_array().unwrap().iter().map(|w| format!("{},{}", w[0], w[1])).collect();
        if witnesses.is_empty() {
            assert_eq!(text[1].1, "none");
        } else {
            assert_eq!(text[1].1.split_whitespace().collect::<Vec<_>>(), witnesses);
        }

        let text = text_fields(&orbitcalc(&["classify", &path]).stdout);
        let doc = orbitcalc(&["--format", "json", "classify", &path]).json();
        let expanded: Vec<String> = doc["class"]["summands"]
            .as_array()
            .unwrap()
            .iter()
            .flat_map(|s| std::iter::repeat(s["kind"].as_str().unwrap().to_string()).take(s["count"].as_u64().unwrap() as usize))
            .collect();
        assert_eq!(text[0].1, expanded.join(" # "));
        assert_eq!(text[1].1, doc["class"]["chi"].to_string());
    }
    let text = orbitcalc(&["survey", "--t-max", "5", "--w-max", "2"]).stdout;
    let doc = orbitcalc(&["--format", "json", "survey", "--t-max", "5", "--w-max", "2"]).json();
    assert!(text.contains(&format!("total: {}", doc["total"])));
    assert!(text.contains(&format!("theorem_dim4_holds: {}", doc["theorem_dim4_holds"])));
    assert_eq!(text.lines().filter(|l| l.contains("(chi ")).count(), doc["classes"].as_array().unwrap().len());
}

#[test]
fn survey_json_is_identical_for_every_job_count() {
    let reference = orbitcalc(&["--format", "json", "survey", "--t-max", "6", "--w-max", "3", "--jobs", "1"]);
    assert_eq!(reference.status, 0);
    assert_eq!(reference.json()["theorem_dim4_holds"], true);
    for jobs in ["1", "2", "3", "7"] {
        let out = orbitcalc(&["--format", "json", "survey", "--t-max", "6", "--w-max", "3", "--jobs", jobs]);
        assert_eq!(out.stdout, reference.stdout, "--jobs {jobs}");
    }
    let listing = orbitcalc(&["--format", "json", "enumerate", "--t-max", "6", "--w-max", "3"]);
    for jobs in ["2", "5"] {
        let out = orbitcalc(&["--format", "json", "enumerate", "--t-max", "6", "--w-max", "3", "--jobs", jobs]);
        assert_eq!(out.stdout, listing.stdout, "--jobs {jobs}");
    }
}

#[test]
fn enumerated_spaces_round_trip_through_files() {
    let listing = orbitcalc(&["--format", "json", "enumerate", "--t-max", "6", "--w-max", "2"]).json();
    let spaces = listing["spaces"].as_array().unwrap();
    assert_eq!(listing["count"].as_u64().unwrap() as usize, spaces.len());
    let dir = tempfile::tempdir().unwrap();
    for (k, space) in spaces.iter().enumerate() {
        let edges: Vec<(i64, i64)> = space
            .as_array()
            .unwrap()
            .iter()
            .map(|e| (e[0].as_i64().unwrap(), e[1].as_i64().unwrap()))
            .collect();
        let x = orbitcalc_core::WeightedOrbitSpace::validate(&edges).unwrap();
        let text = format::write(&x);
        assert_eq!(format::parse(&text), Ok(x.clone()));
        let path = dir.path().join(format!("space{k}.txt"));
        std::fs::write(&path, &text).unwrap();
        let out = orbitcalc(&["--format", "json", "validate", path.to_str().unwrap()]);
        assert_eq!(out.status, 0);
        assert_eq!(&out.json()["edges"], space);
    }
}

#[test]
fn data_files_parse_as_documented() {
    for file in DATA_FILES {
        let text = std::fs::read_to_string(data(file)).unwrap();
        let parsed = format::parse(&text);
        assert_eq!(parsed.is_ok(), file != "illegal.txt", "{file}");
    }
}
