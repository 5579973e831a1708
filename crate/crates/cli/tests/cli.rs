use std::fs;
use std::io::Write;
use std::path::Path;
use std::process::{Command, Output, Stdio};

use tckit::{catalog, format};

const BIN: &str = env!("CARGO_BIN_EXE_tckit");

fn tckit(args: &[&str]) -> Output {
    Command::new(BIN).args(args).env_remove(tckit::SEARCH_BOUND_VAR).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let path = dir.join(name);
    fs::write(&path, text).unwrap();
    path.to_str().unwrap().to_string()
}

#[test]
fn build_theta() {
    let o = tckit(&["braid", "build", "theta", "--m", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "degree=4; word=2,1,3,2\n");
    let o = tckit(&["braid", "build", "garside", "--m", "3"]);
    assert_eq!(stdout(&o), "degree=3; word=1,2,1\n");
    let o = tckit(&["braid", "build", "delta-prime", "--m", "2"]);
    assert_eq!(stdout(&o), "degree=4; word=1\n");
}

#[test]
fn braid_eq() {
    let dir = tempfile::tempdir().unwrap();
    let a = write(dir.path(), "a.braid", "degree=3; word=1,2,1\n");
    let b = write(dir.path(), "b.braid", "# braid relation\ndegree=3;\nword=2, 1, 2\n");
    let c = write(dir.path(), "c.braid", "degree=3; word=2,1\n");
    let o = tckit(&["braid", "eq", &a, &b]);
    assert_eq!((o.status.code(), stdout(&o).as_str()), (Some(0), "true\n"));
    let o = tckit(&["braid", "eq", &a, &c]);
    assert_eq!((o.status.code(), stdout(&o).as_str()), (Some(0), "false\n"));
    let d = write(dir.path(), "d.braid", "degree=2; word=1\n");
    let o = tckit(&["braid", "eq", &a, &d]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("degree mismatch"));
}

#[test]
fn parse_errors_exit_two_with_position() {
    let dir = tempfile::tempdir().unwrap();
    let a = write(dir.path(), "a.braid", "degree=3; word=1\n");
    let bad = write(dir.path(), "bad.braid", "degree=3\nword=1,,2\n");
    let o = tckit(&["braid", "eq", &a, &bad]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("bad.braid:2:8:"), "{}", stderr(&o));
    let movie = write(dir.path(), "m.tcm", "degree=2\nslice=\nevent=band ins 0 1 +1\n");
    let o = tckit(&["validate", &movie]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("m.tcm:3:1:"), "{}", stderr(&o));
    let o = tckit(&["braid", "build", "theta"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn catalog_pipeline_matches_golden_reports() {
    let golden = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden");
    let dir = tempfile::tempdir().unwrap();
    for name in catalog::NAMES {
        let shown = tckit(&["catalog", "show", name]);
        assert_eq!(shown.status.code(), Some(0), "{name}");
        let chart = write(dir.path(), &format!("{name}.tc"), &stdout(&shown));
        let movie = dir.path().join(format!("{name}.tcm"));
        let o = tckit(&["compile", &chart, "-o", movie.to_str().unwrap()]);
        assert_eq!(o.status.code(), Some(0), "{name}: {}", stderr(&o));
        let o = tckit(&["invariants", movie.to_str().unwrap()]);
        let expected = fs::read_to_string(golden.join(format!("{name}.invariants"))).unwrap();
        assert_eq!(stdout(&o), expected, "{name}");
        let o = tckit(&["validate", movie.to_str().unwrap()]);
        assert_eq!(o.status.code(), Some(0), "{name}");
        assert!(stdout(&o).starts_with("ok=true\n"));
    }
}

#[test]
fn pipes_through_standard_input() {
    let shown = tckit(&["catalog", "show", "turned-spun-trefoil"]);
    let mut child = Command::new(BIN)
        .args(["compile", "-"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(&shown.stdout).unwrap();
    let compiled = child.wait_with_output().unwrap();
    let mut child = Command::new(BIN)
        .args(["invariants", "-"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(&compiled.stdout).unwrap();
    let o = child.wait_with_output().unwrap();
    let text = stdout(&o);
    for line in ["degree=4", "blacks=8", "chi=0", "components=1", "genus=[1]"] {
        assert!(text.lines().any(|l| l == line), "missing {line} in\n{text}");
    }
}

#[test]
fn emitted_files_round_trip() {
    let params = catalog::Params::default();
    for entry in catalog::all(&params) {
        let text = format::emit_chart(&entry.chart);
        let (a, b) = format::parse_chart(&text).unwrap();
        assert_eq!((&a, &b), (entry.chart.a(), entry.chart.b()));
        let compiled = tckit_core::compile::compile(&entry.chart).unwrap();
        let movie_text = format::emit_movie(&compiled.movie, &compiled.blocks);
        let file = format::parse_movie(&movie_text).unwrap();
        assert_eq!(file.movie, compiled.movie);
        assert_eq!(file.blocks, compiled.blocks);
        assert_eq!(format::emit_movie(&file.movie, &file.blocks), movie_text);
    }
    let w = tckit_core::braid::build_theta(3);
    let text = format::emit_braid(&w);
    assert_eq!(format::emit_braid(&format::parse_braid(&text).unwrap()), text);
}

#[test]
fn tampered_movie_fails_validation() {
    let dir = tempfile::tempdir().unwrap();
    let shown = tckit(&["catalog", "show", "trivial-torus"]);
    let chart = write(dir.path(), "t.tc", &stdout(&shown));
    let compiled = stdout(&tckit(&["compile", &chart]));
    let tampered = compiled.replacen("event=band ins", "event=band del", 1);
    let movie = write(dir.path(), "t.tcm", &tampered);
    let o = tckit(&["validate", &movie]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("ok=false"));
    assert!(stdout(&o).contains("failure=event "), "{}", stdout(&o));
    let o = tckit(&["invariants", &movie]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).starts_with("error: invalid movie"));
}

#[test]
fn two_component_chart() {
    let dir = tempfile::tempdir().unwrap();
    let chart = write(dir.path(), "e.tc", "degree=2\na=\nb=\n");
    let movie = dir.path().join("e.tcm");
    tckit(&["compile", &chart, "-o", movie.to_str().unwrap()]);
    let o = tckit(&["invariants", movie.to_str().unwrap()]);
    assert_eq!(
        stdout(&o),
        "degree=4\nblacks=8\nchi=0\ncomponents=2\ngenus=[1,1]\n\
         component=1,4 chi=0 genus=1\ncomponent=2,3 chi=0 genus=1\n"
    );
}

#[test]
fn domain_errors_exit_one() {
    let dir = tempfile::tempdir().unwrap();
    let chart = write(dir.path(), "nc.tc", "degree=3\na=1\nb=2\n");
    let o = tckit(&["compile", &chart]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(stderr(&o), "error: boundary braids do not commute\n");
    let o = tckit(&["catalog", "show", "nope"]);
    assert_eq!(o.status.code(), Some(1));
    let o = tckit(&["invariants", dir.path().join("missing.tcm").to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn classify_and_search_bound() {
    let dir = tempfile::tempdir().unwrap();
    let chart = write(dir.path(), "s.tc", "degree=2\na=1,1\nb=1,1,1,1,1,1,1\n");
    let o = tckit(&["classify", &chart]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(stdout(&o), "kind=unknown\nwitness=none\n");
    let o = Command::new(BIN)
        .args(["classify", &chart])
        .env(tckit::SEARCH_BOUND_VAR, "7")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "kind=symmetry-spun\nwitness=beta=1 j=2 k=7\n");
    let o = Command::new(BIN)
        .args(["classify", &chart])
        .env(tckit::SEARCH_BOUND_VAR, "many")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));

    let shown = tckit(&["catalog", "show", "symmetry-spun-beta"]);
    let chart = write(dir.path(), "b.tc", &stdout(&shown));
    let o = tckit(&["classify", &chart]);
    assert_eq!(stdout(&o), "kind=symmetry-spun\nwitness=beta=1,2 j=2 k=1\n");
}

#[test]
fn catalog_parameters() {
    let o = tckit(&["catalog", "show", "torus-2p", "--p", "-7"]);
    assert_eq!(stdout(&o), "degree=2\na=-1,-1,-1,-1,-1,-1,-1\nb=-1,-1,-1,-1,-1,-1,-1\n");
    let o = tckit(&["catalog", "show", "symmetry-spun-beta", "--beta", "degree=4; word=1,-3"]);
    assert_eq!(stdout(&o), "degree=4\na=1,-3,1,-3\nb=1,-3\n");
    let o = tckit(&["catalog", "show", "symmetry-spun-beta", "--beta", "degree=4; word=4"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn braid_index_reports() {
    let dir = tempfile::tempdir().unwrap();
    let o = tckit(&["catalog", "show", "torus-2p", "--p", "7"]);
    let chart = write(dir.path(), "t.tc", &stdout(&o));
    let o = tckit(&["braid-index", &chart]);
    assert!(stdout(&o).starts_with("upper=4\nlower=4\nexact=4\n"), "{}", stdout(&o));
    let o = tckit(&["catalog", "show", "spun-trefoil"]);
    let chart = write(dir.path(), "s.tc", &stdout(&o));
    let o = tckit(&["braid-index", &chart]);
    assert_eq!(
        stdout(&o),
        "upper=4\nlower=1\nexact=none\ncomparative_upper=none\nfacts=upper-2m\n"
    );
}

#[test]
fn verify_steps() {
    let o = tckit(&["verify-steps", "--m", "3", "--b", "1,-2,1"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).starts_with("ok=true\n"));
    let o = tckit(&["verify-steps", "--m", "2", "--b", "2"]);
    assert_eq!(o.status.code(), Some(2));
    let o = tckit(&["verify-steps", "--m", "1"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn chart_graphs() {
    let dir = tempfile::tempdir().unwrap();
    let ribbon = "degree=3\nv p 1\nv q 1\ne x p q 1 +\ne inner - - 2 -\ne outer - - 1 +\n\
                  inside x inner\ninside inner outer\n";
    let g = write(dir.path(), "r.graph", ribbon);
    let o = tckit(&["graph", &g]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).ends_with("kind=Ribbon\n"));
    let free = "degree=2\nv p 1\nv q 1\ne x p q 1 +\n";
    let g = write(dir.path(), "f.graph", free);
    let o = tckit(&["graph", &g]);
    assert!(stdout(&o).ends_with("kind=Unknotted\n"), "{}", stdout(&o));
    let bad = "degree=2\nv p 1\nv q 1\ne x p q 3 +\n";
    let g = write(dir.path(), "b.graph", bad);
    let o = tckit(&["graph", &g]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).ends_with("kind=Other\n"));
}

#[test]
fn in_process_run() {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = tckit::run(["tckit", "braid", "build", "delta", "--m", "3"], &mut out, &mut err);
    assert_eq!(code, 0);
    assert_eq!(String::from_utf8(out).unwrap(), "degree=6; word=4,5,4\n");
    let mut out = Vec::new();
    let code = tckit::run(["tckit", "--help"], &mut out, &mut err);
    assert_eq!(code, 0);
    assert!(String::from_utf8(out).unwrap().contains("catalog"));
}
