use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../core/tests/fixtures").join(name)
}

fn qcuts(args: &[&str], stdin: Option<&str>) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_qcuts"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    let mut pipe = child.stdin.take().unwrap();
    pipe.write_all(stdin.unwrap_or("").as_bytes()).unwrap();
    drop(pipe);
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn tensor(left: &str, right: &str) -> String {
    let o = qcuts(&["tensor", "--left", left, "--right", right], None);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    stdout(&o)
}

#[test]
fn exit_codes() {
    let b2 = fixture("b2xb2_split.json");
    let o = qcuts(&["validate", b2.to_str().unwrap()], None);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "ok\n");

    let bad = fixture("malformed/undeclared_vertex.json");
    let o = qcuts(&["cuts", bad.to_str().unwrap()], None);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("undeclared vertex 3"));

    let o = qcuts(&["validate"], Some(r#"{"format_version": 1, "vertices": [{"id": "a"}, {"id": "b"}]}"#));
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("2 components"), "{}", stdout(&o));

    assert_eq!(qcuts(&["cuts", "--no-such-flag"], None).status.code(), Some(2));
    assert_eq!(qcuts(&[], None).status.code(), Some(2));
}

#[test]
fn tensor_piped_into_cuts() {
    let doc = tensor("A3:1<2>3", "B2:1>2");
    let o = qcuts(&["cuts", "--count-only", "-"], Some(&doc));
    assert_eq!(stdout(&o), "13\n");
}

#[test]
fn e6_times_f4_has_16599_cuts() {
    let doc = tensor("E6", "F4");
    let file = tempfile::NamedTempFile::new().unwrap();
    std::fs::write(file.path(), &doc).unwrap();
    let o = qcuts(&["cuts", "--count-only", file.path().to_str().unwrap()], None);
    assert_eq!(stdout(&o), "16599\n");
}

#[test]
fn check_reports() {
    let circle = fixture("circle.json");
    let o = qcuts(&["check", circle.to_str().unwrap()], None);
    let text = stdout(&o);
    assert!(text.contains("simply-connected: No (H1 rank 1)"), "{text}");
    assert!(text.contains("euler-characteristic: 0"), "{text}");

    let b2 = fixture("b2xb2_split.json");
    let text = stdout(&qcuts(&["check", b2.to_str().unwrap()], None));
    for line in ["cuts: 7", "covered: yes", "enough-cuts: yes", "fully-compatible: yes", "transitive: yes"] {
        assert!(text.contains(line), "{line} missing from {text}");
    }
    assert!(text.contains("simply-connected: Yes"), "{text}");
}

#[test]
fn mutate_and_truncate() {
    let b2 = fixture("b2xb2_split.json");
    let b2 = b2.to_str().unwrap();
    let o = qcuts(&["mutate", b2, "--cut", "{d,e}", "--vertex", "3", "--dir", "minus"], None);
    assert_eq!(stdout(&o), "{c,f}\n");
    let o = qcuts(&["mutate", b2, "--cut", "d,e", "--vertex", "3", "--dir", "plus"], None);
    assert_eq!(o.status.code(), Some(1));
    let o = qcuts(&["mutate", b2, "--cut", "d,zz", "--vertex", "3", "--dir", "plus"], None);
    assert!(String::from_utf8_lossy(&o.stderr).contains("unknown arrow zz"));

    let text = stdout(&qcuts(&["truncate", b2, "--cut", "d,e"], None));
    assert!(text.contains("relation d: +[a c] -[b f]"), "{text}");
}

#[test]
fn graph_outputs() {
    let b2 = fixture("b2xb2_split.json");
    let b2 = b2.to_str().unwrap();
    let dot = stdout(&qcuts(&["graph", b2, "--dot"], None));
    assert_eq!(dot.matches(" -- ").count(), 9);
    let plain = stdout(&qcuts(&["graph", b2], None));
    assert_eq!(plain.lines().count(), 7 + 9);
    let quiver = stdout(&qcuts(&["dot", b2, "--cut", "d,e"], None));
    assert_eq!(quiver.matches("dashed").count(), 2);
}

#[test]
fn output_is_deterministic() {
    let a = tensor("D4", "B3");
    let b = tensor("D4", "B3");
    assert_eq!(a, b);
    let g1 = stdout(&qcuts(&["graph", "--json", "--labeled"], Some(&tensor("A3:1<2>3", "B2"))));
    let g2 = stdout(&qcuts(&["graph", "--json", "--labeled"], Some(&tensor("A3:1<2>3", "B2"))));
    assert_eq!(g1, g2);
}
