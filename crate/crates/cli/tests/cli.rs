use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use propconn_cli::{ReportDocument, ScanRow};
use serde_json::{json, Value};

fn propconn(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_propconn"))
        .args(args)
        .output()
        .unwrap()
}

fn report(out: &Output) -> ReportDocument {
    let text = String::from_utf8(out.stdout.clone()).unwrap();
    let doc: ReportDocument = serde_json::from_str(&text).unwrap();
    // schema round trip
    let again: ReportDocument =
        serde_json::from_str(&serde_json::to_string(&doc).unwrap()).unwrap();
    assert_eq!(again, doc);
    doc
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    fs::write(&p, text).unwrap();
    p.display().to_string()
}

#[test]
fn formula_complete_vertex() {
    let out = propconn(&[
        "formula", "--class", "complete", "--n", "5", "--r", "1/2", "--mode", "vertex",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let doc = report(&out);
    assert_eq!(doc.value, json!(3));
    assert_eq!(doc.inputs.r.unwrap().to_string(), "1/2");
}

#[test]
fn compute_path_with_witness() {
    let dir = tempfile::tempdir().unwrap();
    let file = write(dir.path(), "p4.el", "n 4\n0 1\n1 2\n2 3\n");
    let out = propconn(&[
        "compute",
        "--graph",
        &file,
        "--r",
        "1/2",
        "--mode",
        "vertex",
        "--witness",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let doc = report(&out);
    assert_eq!((doc.value, doc.witness), (json!(1), json!([1])));

    let out = propconn(&[
        "compute",
        "--graph",
        &file,
        "--r",
        "1/2",
        "--mode",
        "edge",
        "--witness",
    ]);
    let doc = report(&out);
    assert_eq!((doc.value, doc.witness), (json!(1), json!([[1, 2]])));
}

#[test]
fn compute_reads_graph6() {
    let dir = tempfile::tempdir().unwrap();
    let file = write(dir.path(), "k3.g6", "Bw\n");
    let out = propconn(&["compute", "--graph", &file, "--r", "1/3", "--mode", "edge"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(report(&out).value, json!(3));
}

#[test]
fn infeasible_edge_removal_exits_2() {
    let dir = tempfile::tempdir().unwrap();
    let file = write(dir.path(), "p3.el", "n 3\n0 1\n1 2\n");
    let out = propconn(&["compute", "--graph", &file, "--r", "1/4", "--mode", "edge"]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(report(&out).value, Value::Null);

    let out = propconn(&[
        "formula", "--class", "path", "--n", "3", "--r", "1/4", "--mode", "edge",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn usage_errors_exit_1() {
    for args in [
        &[
            "formula", "--class", "path", "--n", "4", "--r", "0.5", "--mode", "vertex",
        ][..],
        &[
            "formula", "--class", "path", "--n", "4", "--r", "1/2", "--mode", "vertex", "--bogus",
        ],
        &[
            "formula",
            "--class",
            "complete-bipartite",
            "--a",
            "2",
            "--b",
            "3",
            "--r",
            "1/2",
            "--mode",
            "edge",
        ],
        &[
            "compute",
            "--graph",
            "/nonexistent/file.el",
            "--r",
            "1/2",
            "--mode",
            "vertex",
        ],
        &[
            "extremal", "--n", "6", "--m", "16", "--r", "1/2", "--stat", "coemin",
        ],
        &["nonsense"],
    ] {
        assert_eq!(propconn(args).status.code(), Some(1), "{args:?}");
    }
    assert_eq!(propconn(&["--help"]).status.code(), Some(0));
}

#[test]
fn extremal_examples() {
    let out = propconn(&[
        "extremal", "--n", "6", "--m", "10", "--r", "1/2", "--stat", "coemin",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let doc = report(&out);
    assert_eq!(doc.value, json!(4));
    assert_eq!(doc.method.as_deref(), Some("formula"));
    assert_eq!(doc.witness["edges"].as_array().unwrap().len(), 10);

    let out = propconn(&[
        "extremal",
        "--n",
        "6",
        "--m",
        "9",
        "--r",
        "1/2",
        "--stat",
        "covmin",
        "--enumerate",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let doc = report(&out);
    assert_eq!(
        (doc.value, doc.method.as_deref()),
        (json!(1), Some("enumeration"))
    );

    // no closed form in the middle, so enumeration is used
    let out = propconn(&[
        "extremal", "--n", "5", "--m", "8", "--r", "9/10", "--stat", "coemax",
    ]);
    assert_eq!(report(&out).method.as_deref(), Some("enumeration"));
}

#[test]
fn scan_writes_one_row_per_m() {
    let dir = tempfile::tempdir().unwrap();
    let csv_path = dir.path().join("scan.csv");
    let out = propconn(&[
        "scan",
        "--n",
        "6",
        "--r",
        "1/2",
        "--stat",
        "coemin",
        "--all-m",
        "--out",
        csv_path.to_str().unwrap(),
        "--enumerate",
        "--witness",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = fs::read_to_string(&csv_path).unwrap();
    assert_eq!(
        text.lines().next().unwrap(),
        "n,m,r,stat,value,method,witness_graph6"
    );
    let rows: Vec<ScanRow> = csv::Reader::from_reader(text.as_bytes())
        .deserialize()
        .collect::<Result<_, _>>()
        .unwrap();
    assert_eq!(rows.len(), 16);
    let values: Vec<usize> = rows.iter().map(|r| r.value).collect();
    assert_eq!(values, vec![0, 0, 0, 0, 0, 0, 0, 1, 2, 3, 4, 5, 6, 7, 8, 9]);
    assert!(rows
        .iter()
        .all(|r| r.witness_graph6.is_some() && r.r.to_string() == "1/2"));

    let out = propconn(&[
        "scan",
        "--n",
        "6",
        "--r",
        "1/2",
        "--stat",
        "coemin",
        "--out",
        csv_path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn verify_proven_formulas_pass() {
    let out = propconn(&["verify", "--n-max", "7", "--r-grid", "1/4,1/3,1/2,2/3,3/4"]);
    assert_eq!(out.status.code(), Some(0));
    let doc = report(&out);
    assert_eq!(doc.value["proven_mismatches"], json!(0));
    assert!(doc.discrepancies.iter().all(|d| !d.proven));
    assert!(doc
        .discrepancies
        .iter()
        .any(|d| d.check == "cycle-vertex-reduced-order"));
}

#[test]
fn conjecture_verdicts() {
    let out = propconn(&[
        "conjecture",
        "--name",
        "coemax-bound",
        "--n",
        "6",
        "--m",
        "9",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let doc = report(&out);
    for key in [
        "name",
        "n",
        "m",
        "r",
        "holds",
        "lhs",
        "rhs",
        "witness_graph6",
    ] {
        assert!(doc.value.get(key).is_some(), "missing {key}");
    }
    assert_eq!(doc.value["rhs"], json!("8"));

    let out = propconn(&[
        "conjecture",
        "--name",
        "equal-partition",
        "--n",
        "6",
        "--k",
        "3",
        "--all-m",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(report(&out).value.as_array().unwrap().len(), 16);

    let out = propconn(&[
        "conjecture",
        "--name",
        "coemax-bound",
        "--n",
        "5",
        "--all-m",
    ]);
    assert_eq!(out.status.code(), Some(1));
}
