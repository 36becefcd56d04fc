use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use leapfrog_cli::json::{CertifyReport, FaceOriginJson, LeapfrogJson, OracleReport};

fn corpus(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../corpus").join(name)
}

fn leapfrog(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_leapfrog"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exited normally")
}

fn lines<T: serde::de::DeserializeOwned>(o: &Output) -> Vec<T> {
    String::from_utf8_lossy(&o.stdout)
        .lines()
        .map(|l| serde_json::from_str(l).expect("JSON line"))
        .collect()
}

const K4: &str = r#"{"n":4,"adj":[[1,2,3],[0,3,2],[0,1,3],[0,2,1]]}"#;

fn temp_file(contents: &[u8]) -> tempfile::NamedTempFile {
    let f = tempfile::NamedTempFile::new().unwrap();
    std::fs::write(f.path(), contents).unwrap();
    f
}

#[test]
fn leapfrog_of_dodecahedron_has_60_vertices() {
    let o = leapfrog(&["leapfrog", "--in", corpus("c20.pc").to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    let docs: Vec<LeapfrogJson> = lines(&o);
    assert_eq!(docs.len(), 1);
    assert_eq!(docs[0].h.n, 60);
    assert_eq!(docs[0].n, 20);
}

#[test]
fn leapfrog_of_c26_keeps_pentagons() {
    let o = leapfrog(&["leapfrog", "--in", corpus("c26.pc").to_str().unwrap()]);
    let doc = &lines::<LeapfrogJson>(&o)[0];
    let h = doc.h.to_map().unwrap();
    let pentagons = doc
        .face_origin
        .iter()
        .enumerate()
        .filter(|(f, o)| {
            matches!(o, FaceOriginJson::Face { .. })
                && h.face_size(leapfrog_core::planar_map::FaceId::new(*f)) == 5
        })
        .count();
    assert_eq!(pentagons, 12);
    assert_eq!(doc.vertex_origin.len(), 78);
}

#[test]
fn empty_input_is_a_parse_error() {
    let f = temp_file(b"");
    assert_eq!(code(&leapfrog(&["leapfrog", "--in", f.path().to_str().unwrap()])), 2);
    let missing = leapfrog(&["leapfrog", "--in", "/nonexistent/graphs.pc"]);
    assert_eq!(code(&missing), 2);
}

#[test]
fn certify_c26_and_c30() {
    for (file, bound) in [("c26.pc", 128u128), ("c30.pc", 256)] {
        let o = leapfrog(&["certify", "--in", corpus(file).to_str().unwrap()]);
        assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
        for r in lines::<CertifyReport>(&o) {
            assert!(r.bound_met);
            assert_eq!(r.bound, bound);
            assert!(r.verified_cycles as u128 >= bound);
            assert!(r.findings.is_empty());
        }
    }
}

#[test]
fn certify_rejects_wrong_residue_and_non_fullerenes() {
    let o = leapfrog(&["certify", "--in", corpus("c20.pc").to_str().unwrap()]);
    assert_eq!(code(&o), 4);
    let r = &lines::<CertifyReport>(&o)[0];
    assert!(r.error.as_deref().unwrap().contains("4k - 2"));
    let k4 = temp_file(K4.as_bytes());
    assert_eq!(code(&leapfrog(&["certify", "--in", k4.path().to_str().unwrap()])), 3);
}

#[test]
fn seed_flags_select_the_face_search() {
    let path = corpus("c26.pc");
    let path = path.to_str().unwrap();
    let default = lines::<CertifyReport>(&leapfrog(&["certify", "--in", path]))[0].clone();
    let [h, p] = default.seed.unwrap();
    let (h, p) = (h.to_string(), p.to_string());
    let again = leapfrog(&["certify", "--in", path, "--seed-hexagon", &h, "--seed-pentagon", &p]);
    assert_eq!(lines::<CertifyReport>(&again)[0], default);
    // the seed hexagon paired with itself is not a pentagon
    let bad = leapfrog(&["certify", "--in", path, "--seed-hexagon", &h, "--seed-pentagon", &h]);
    assert_eq!(code(&bad), 3);
    let half = leapfrog(&["certify", "--in", path, "--seed-hexagon", &h]);
    assert_eq!(code(&half), 2);
}

#[test]
fn materialized_tree_is_reported() {
    let o = leapfrog(&["certify", "--in", corpus("c26.pc").to_str().unwrap(), "--materialize-tree"]);
    let r = &lines::<CertifyReport>(&o)[0];
    assert!(r.tree_nodes.unwrap() > r.proper);
}

#[test]
fn oracle_counts_k4_cycles() {
    let k4 = temp_file(K4.as_bytes());
    let o = leapfrog(&["oracle", "--in", k4.path().to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    let r = &lines::<OracleReport>(&o)[0];
    assert_eq!((r.count, r.complete), (3, true));
}

#[test]
fn oracle_decompositions_of_c26_complete() {
    let o = leapfrog(&["oracle", "--in", corpus("c26.pc").to_str().unwrap(), "--mode", "decompositions"]);
    let r = &lines::<OracleReport>(&o)[0];
    assert!(r.complete);
    assert_eq!(r.count, r.proper.unwrap() + r.improper.unwrap());
    let large = leapfrog(&["oracle", "--in", corpus("c34.pc").to_str().unwrap(), "--mode", "decompositions"]);
    assert_eq!(code(&large), 3);
}

#[test]
fn capped_oracle_warns_and_succeeds() {
    let o = leapfrog(&[
        "oracle",
        "--in",
        corpus("c26.pc").to_str().unwrap(),
        "--leapfrog",
        "--cap-cycles",
        "50",
    ]);
    assert_eq!(code(&o), 0);
    let r = &lines::<OracleReport>(&o)[0];
    assert_eq!((r.count, r.complete), (50, false));
    assert!(String::from_utf8_lossy(&o.stderr).contains("warning"));
}

#[test]
fn export_decomposition_marks_white_vertices() {
    let o = leapfrog(&[
        "export",
        "--in",
        corpus("c26.pc").to_str().unwrap(),
        "--what",
        "decomposition",
        "--index",
        "0",
        "--format",
        "dot",
    ]);
    assert_eq!(code(&o), 0);
    let text = String::from_utf8(o.stdout).unwrap();
    assert!(text.starts_with("graph g0_d0 {"));
    assert_eq!(text.matches("class=\"white\"").count(), 7);
    assert_eq!(text.matches("class=\"black\"").count(), 19);
}

#[test]
fn export_cycle_marks_78_edges() {
    let o = leapfrog(&[
        "export",
        "--in",
        corpus("c26.pc").to_str().unwrap(),
        "--what",
        "cycle",
        "--index",
        "5",
        "--format",
        "dot",
    ]);
    let text = String::from_utf8(o.stdout).unwrap();
    assert_eq!(text.matches("class=\"cycle\"").count(), 78);
    assert_eq!(text.matches(" -- ").count(), 117);
}

#[test]
fn export_errors() {
    let path = corpus("c26.pc");
    let path = path.to_str().unwrap();
    assert_eq!(code(&leapfrog(&["export", "--in", path, "--format", "svg"])), 2);
    assert_eq!(code(&leapfrog(&["export", "--in", path, "--what", "cycle", "--index", "999"])), 2);
}

#[test]
fn export_graph_json_round_trips() {
    let o = leapfrog(&["export", "--in", corpus("c28.pc").to_str().unwrap()]);
    let maps: Vec<leapfrog_cli::json::MapJson> = lines(&o);
    assert_eq!(maps.len(), 2);
    let f = temp_file(serde_json::to_string(&maps).unwrap().as_bytes());
    let again = leapfrog(&["export", "--in", f.path().to_str().unwrap()]);
    assert_eq!(again.stdout, o.stdout);
}

#[test]
fn output_file_and_workers() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("report.jsonl");
    let path = corpus("c34.pc");
    let one = leapfrog(&["certify", "--in", path.to_str().unwrap(), "--workers", "1"]);
    let o = leapfrog(&[
        "certify",
        "--in",
        path.to_str().unwrap(),
        "--workers",
        "4",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(code(&o), 0);
    assert!(o.stdout.is_empty());
    assert_eq!(std::fs::read(&out).unwrap(), one.stdout);
    let nowhere = dir.path().join("missing/report.jsonl");
    let bad = leapfrog(&["certify", "--in", path.to_str().unwrap(), "--out", nowhere.to_str().unwrap()]);
    assert_eq!(code(&bad), 2);
}
