use std::path::PathBuf;
use std::process::{Command, Output};

const TREFOIL: &str = "[[4,-2,-5,1],[2,-6,-3,5],[6,-4,-1,3]]";

fn repo_root() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../..")
}

fn knotsum(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_knotsum"))
        .args(args)
        .current_dir(repo_root())
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn validate_command() {
    let ok = knotsum(&["validate", TREFOIL]);
    assert_eq!(ok.status.code(), Some(0));
    assert_eq!(stdout(&ok), "ok\n");
    assert_eq!(knotsum(&["validate", "[[1,2,3]]"]).status.code(), Some(2));
    assert_eq!(
        knotsum(&["validate", "[[4,-2,-5,1],[2,-6,-3,5],[6,-4,-1,4]]"]).status.code(),
        Some(1)
    );
}

#[test]
fn sum_command() {
    let two = knotsum(&["sum", TREFOIL, TREFOIL]);
    assert_eq!(two.status.code(), Some(0));
    let code: knotsum::PdCode = stdout(&two).trim().parse().unwrap();
    let reference: knotsum::PdCode =
        "[[8,-12,-9,11],[12,-10,-1,9],[10,-8,-11,7],[4,-2,-5,1],[2,-6,-3,5],[6,-4,-7,3]]"
            .parse()
            .unwrap();
    assert!(code.diagram_equal(&reference));
    assert_eq!(knotsum(&["sum", TREFOIL]).status.code(), Some(2));
    let three = knotsum(&["sum", TREFOIL, TREFOIL, TREFOIL]);
    let code: knotsum::PdCode = stdout(&three).trim().parse().unwrap();
    assert_eq!(code.crossing_count(), 9);
}

#[test]
fn symmetry_command() {
    let run = |args: &[&str]| {
        let o = knotsum(args);
        (o.status.code(), stdout(&o).trim().to_owned())
    };
    assert_eq!(run(&["symmetry", "3_1", "3_1:m"]), (Some(0), "full".into()));
    assert_eq!(run(&["symmetry", "3_1", "3_1"]), (Some(0), "invertible".into()));
    assert_eq!(run(&["symmetry", "3_1", "8_17"]), (Some(0), "none".into()));
    assert_eq!(run(&["symmetry", "3_1", "12a_1"]).0, Some(1));
}

#[test]
fn orbits_command() {
    let o = knotsum(&["orbits", "3_1", "3_1"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o),
        "3_1 # 3_1\t4\tinvertible\n3_1 # 3_1m\t8\tfull\n3_1m # 3_1m\t4\tinvertible\n"
    );
}

#[test]
fn tabulate_to_file_and_stdout() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("table.csv");
    let o = knotsum(&[
        "tabulate",
        "--max-crossings",
        "6",
        "--output",
        path.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let census = stdout(&o);
    assert!(census.contains("invertible\t2\n"));
    assert!(census.contains("full\t1\n"));
    let table = std::fs::read_to_string(&path).unwrap();
    assert_eq!(table.lines().count(), 4);

    let json = knotsum(&["tabulate", "--max-crossings", "7", "--format", "json", "--pdcodes"]);
    assert_eq!(json.status.code(), Some(0));
    let rows: serde_json::Value = serde_json::from_slice(&json.stdout).unwrap();
    assert_eq!(rows.as_array().unwrap().len(), 5);
    assert!(String::from_utf8(json.stderr).unwrap().contains("total\t5"));
}

#[test]
fn tabulate_full_census_and_determinism() {
    let a = knotsum(&["tabulate"]);
    let b = knotsum(&["tabulate"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(a.stderr, b.stderr);
    assert_eq!(stdout(&a).lines().count(), 545);
    let census = String::from_utf8(a.stderr).unwrap();
    for line in [
        "none\t20",
        "pos_amphichiral\t0",
        "invertible\t506",
        "neg_amphichiral\t2",
        "full\t16",
        "total\t544",
        "12\t16\t0\t314\t2\t10",
    ] {
        assert!(census.contains(line), "missing `{line}` in\n{census}");
    }
}

#[test]
fn usage_and_data_errors() {
    assert_eq!(knotsum(&["tabulate", "--format", "bogus"]).status.code(), Some(2));
    assert_eq!(
        knotsum(&["--primes", "missing.tsv", "tabulate"]).status.code(),
        Some(1)
    );
    assert_eq!(knotsum(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(knotsum(&["--help"]).status.code(), Some(0));
}
