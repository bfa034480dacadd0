use std::fs;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cstiling")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn hexagon_count() {
    let o = run(&["count", "--k", "3"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), "6");
}

#[test]
fn square_count_carries_a_note() {
    let o = run(&["count", "--k", "2", "--jobs", "1"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert_eq!(text.lines().next(), Some("0"));
    assert!(text.contains("note:"));
}

#[test]
fn octagon_bound() {
    let o = run(&["bound", "--k", "4"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("N = 553"));
}

#[test]
fn usage_errors_exit_with_two() {
    assert_eq!(run(&[]).status.code(), Some(2));
    assert_eq!(run(&["count"]).status.code(), Some(2));
    assert_eq!(run(&["count", "--k", "1"]).status.code(), Some(2));
    assert_eq!(run(&["enumerate", "--k", "3", "--multiplicities", "1,1"]).status.code(), Some(2));
}

#[test]
fn enumerate_classify_validate_render() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("k3");
    let o = run(&["enumerate", "--k", "3", "--out", out.to_str().unwrap()]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    assert!(stdout(&o).contains("6 classes"));
    for i in 0..6 {
        assert!(out.join(format!("class_{i:04}.json")).exists());
        assert!(out.join(format!("class_{i:04}.svg")).exists());
    }
    let summary: serde_json::Value = serde_json::from_str(&fs::read_to_string(out.join("summary.json")).unwrap()).unwrap();
    assert_eq!(summary["class_count"], 6);

    let o = run(&["classify", "--in", out.to_str().unwrap()]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("type 3/3/3"));

    let first = out.join("class_0000.json");
    let o = run(&["validate", first.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("valid"));

    let mut doc: serde_json::Value = serde_json::from_str(&fs::read_to_string(&first).unwrap()).unwrap();
    doc["faces"].as_array_mut().unwrap().pop();
    let broken = dir.path().join("broken.json");
    fs::write(&broken, doc.to_string()).unwrap();
    let o = run(&["validate", first.to_str().unwrap(), broken.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("INVALID"));

    fs::write(dir.path().join("garbage.json"), "{").unwrap();
    assert_eq!(run(&["validate", dir.path().join("garbage.json").to_str().unwrap()]).status.code(), Some(2));

    let svg = dir.path().join("c.svg");
    let o = run(&["render", first.to_str().unwrap(), "--svg", svg.to_str().unwrap()]);
    assert!(o.status.success());
    assert!(fs::read_to_string(svg).unwrap().contains("<polygon"));
}

#[test]
fn summaries_are_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let mut texts = Vec::new();
    for (name, jobs) in [("a", "1"), ("b", "2")] {
        let out = dir.path().join(name);
        let o = run(&["enumerate", "--k", "4", "--multiplicities", "2,1,2,1", "--jobs", jobs, "--out", out.to_str().unwrap()]);
        assert!(o.status.success());
        texts.push(fs::read_to_string(out.join("summary.json")).unwrap());
    }
    assert_eq!(texts[0], texts[1]);
    assert!(texts[0].contains("case_counts"));
}
