use std::fs;

use gfree_cli::{run, run_with_stdin, Output, EXIT_OK, EXIT_USAGE};

const PETERSEN_EDGES: &str = "\
# outer 5-cycle, spokes, inner pentagram
10
0 1
1 2
2 3
3 4
4 0
0 5
1 6
2 7
3 8
4 9
5 7
7 9
9 6
6 8
8 5
";

fn gfree(args: &[&str]) -> Output {
    run(std::iter::once("gfree").chain(args.iter().copied()))
}

fn json(out: &Output) -> serde_json::Value {
    assert_eq!(out.code, EXIT_OK, "stderr: {}", out.stderr);
    serde_json::from_str(&out.stdout).expect("stdout is JSON")
}

#[test]
fn gen_lists_connected_graphs() {
    let out = gfree(&["gen", "--nmax", "3"]);
    assert_eq!(out.code, EXIT_OK);
    assert_eq!(out.stdout.lines().count(), 2);
    let out = gfree(&["gen", "--nmax", "5"]);
    assert_eq!(out.stdout.lines().count(), 21);
}

#[test]
fn chi_of_k7_without_triangles() {
    let out = gfree(&["chi", "--input", "K7", "-p", "K3"]);
    assert_eq!(out.code, EXIT_OK);
    assert_eq!(out.stdout.lines().next(), Some("4"));
}

#[test]
fn partition_of_petersen_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("petersen.txt");
    fs::write(&path, PETERSEN_EDGES).unwrap();
    let p = path.to_str().unwrap();
    let v = json(&gfree(&[
        "partition",
        "--input",
        p,
        "--specs",
        "K2,K2,K2",
        "--json",
    ]));
    let classes = v["classes"].as_array().unwrap();
    assert_eq!(classes.len(), 3);
    let designated = v["designated_max_class"].as_u64().unwrap() as usize;
    assert_eq!(v["audit"]["max_class_size"], 4);
    assert_eq!(v["audit"]["oracle_max_size"], 4);
    assert!(designated < 3);

    // same graph by name gives the same certificate
    let named = gfree(&[
        "partition",
        "--input",
        "petersen",
        "--specs",
        "K2,K2,K2",
        "--json",
    ]);
    assert_eq!(json(&named), v);
}

#[test]
fn stdin_and_g6_inputs_agree() {
    let mut stdin = "Dhc\n".as_bytes();
    let a = run_with_stdin(
        ["gfree", "maxset", "-i", "-", "-p", "K2", "--json"],
        &mut stdin,
    );
    let b = gfree(&["maxset", "-i", "g6:Dhc", "-p", "K2", "--json"]);
    let c = gfree(&["maxset", "-i", "C5", "-p", "K2", "--json"]);
    assert_eq!(json(&a), json(&b));
    assert_eq!(json(&b), json(&c));
    assert_eq!(json(&a)["size"], 2);
}

#[test]
fn excluded_inputs_report_their_case() {
    let v = json(&gfree(&[
        "partition",
        "-i",
        "K7",
        "--specs",
        "K3,K3,K3",
        "--json",
    ]));
    assert_eq!(v["exception"], "all_complete_and_h_complete");
    assert_eq!(v["specs"], "K3,K3,K3");
    assert_eq!(v["graph_g6"], "F~~~w");

    let v = json(&gfree(&["partition", "-i", "C7", "--arboricity", "--json"]));
    assert_eq!(v["exception"], "single_iso");
}

#[test]
fn lovasz_and_audit() {
    let v = json(&gfree(&[
        "lovasz",
        "-i",
        "K3,3,3",
        "--degrees",
        "3,4",
        "--json",
    ]));
    assert!(v["moves"].as_u64().unwrap() <= 27);
    let out = gfree(&["audit", "-i", "petersen", "-p", "C4"]);
    assert_eq!(out.code, EXIT_OK, "{}", out.stdout);
    assert!(out.stdout.ends_with("PASS\n"));
}

#[test]
fn bad_input_is_a_usage_error() {
    for args in [
        &["chi", "-i", "K7", "-p", "K0"][..],
        &["chi", "-i", "not-a-graph!", "-p", "K2"],
        &["partition", "-i", "petersen", "--specs", ""],
        &["partition", "-i", "petersen", "--specs", "K2,K2"],
        &["verify", "--suite", "nope", "--nmax", "3"],
        &["lovasz", "-i", "C5", "--degrees", "1,1"],
        &["frobnicate"],
    ] {
        let out = gfree(args);
        assert_eq!(out.code, EXIT_USAGE, "{args:?}: {}", out.stdout);
        assert!(!out.stderr.is_empty(), "{args:?}");
    }
}

#[test]
fn json_output_is_byte_stable() {
    let args = [
        "verify",
        "--nmax",
        "5",
        "--suite",
        "theorem1,lovasz",
        "--json",
    ];
    let one = gfree(&[&args[..], &["--workers", "1"]].concat());
    let four = gfree(&[&args[..], &["--workers", "4"]].concat());
    assert_eq!(one.code, EXIT_OK);
    assert_eq!(one.stdout, four.stdout);
    let again = gfree(&[&args[..], &["--workers", "1"]].concat());
    assert_eq!(one.stdout, again.stdout);
}

#[test]
fn verify_small_corpus_passes() {
    let dir = tempfile::tempdir().unwrap();
    let reports = dir.path().join("reports");
    let out = gfree(&[
        "verify",
        "--nmax",
        "4",
        "--report-dir",
        reports.to_str().unwrap(),
        "--json",
    ]);
    let v = json(&out);
    let arr = v.as_array().unwrap();
    assert_eq!(arr.len(), 6);
    for r in arr {
        assert_eq!(r["passed"], true, "{r}");
        assert_eq!(r["graphs"], 10);
        let name = r["suite"].as_str().unwrap();
        let file: serde_json::Value = serde_json::from_str(
            &fs::read_to_string(reports.join(format!("{name}.json"))).unwrap(),
        )
        .unwrap();
        assert_eq!(&file, r);
    }

    let text = gfree(&["verify", "--nmax", "4"]);
    assert_eq!(text.code, EXIT_OK);
    assert_eq!(text.stdout.matches("PASS").count(), 6);
}
