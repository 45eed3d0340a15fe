use std::process::{Command, Output};

fn pinclass(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pinclass"))
        .args(args)
        .env_remove("PINCLASS_JOBS")
        .env_remove("PINCLASS_STATE_CAP")
        .env_remove("PINCLASS_MINIMAL_PINS")
        .env_remove("PINCLASS_JSON")
        .env_remove("PINCLASS_DUMP_AUTOMATA")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn summary_line(o: &Output) -> String {
    stdout(o)
        .lines()
        .find_map(|l| l.strip_prefix("summary: "))
        .expect("report has a summary")
        .to_string()
}

#[test]
fn decide_132_is_finite() {
    let o = pinclass(&["decide", "--basis", "132"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(summary_line(&o), "finite");
}

#[test]
fn decide_123_is_infinite_by_parallel_alternations() {
    let o = pinclass(&["decide", "--basis", "123"]);
    assert_eq!(o.status.code(), Some(3));
    assert_eq!(summary_line(&o), "infinite (parallel alternations)");
}

#[test]
fn decide_1_is_finite_empty_class() {
    let o = pinclass(&["decide", "--basis", "1"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(summary_line(&o), "finite (empty class)");
}

#[test]
fn basis_separators_are_interchangeable() {
    let a = pinclass(&["decide", "--basis", "2413,3142"]);
    let b = pinclass(&["decide", "--basis", "2413 3142"]);
    let c = pinclass(&["decide", "--basis", "2413", "3142"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(a.stdout, c.stdout);
}

#[test]
fn reports_are_byte_identical_across_runs() {
    for args in [
        &["decide", "--basis", "2413,3142"][..],
        &["decide", "--basis", "2413,3142", "--json"][..],
        &["decide", "--basis", "4321,1234", "--json"][..],
    ] {
        let a = pinclass(args);
        let b = pinclass(args);
        assert_eq!(a.stdout, b.stdout, "{args:?}");
        assert_eq!(a.status.code(), b.status.code());
    }
}

#[test]
fn json_report_is_machine_readable() {
    let o = pinclass(&["decide", "--basis", "132", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["verdict"], "finite");
    assert_eq!(v["empty_class"], false);
    let mechanisms = v["mechanisms"].as_array().unwrap();
    let names: Vec<&str> = mechanisms.iter().map(|m| m["mechanism"].as_str().unwrap()).collect();
    assert_eq!(names, ["parallel_alternations", "wedge_type1", "wedge_type2", "pin_sequences"]);
    assert!(mechanisms.iter().all(|m| m["present"] == false));
}

#[test]
fn skipped_stages_are_marked() {
    let o = pinclass(&["decide", "--basis", "123", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let pins = &v["mechanisms"][3];
    assert_eq!(pins["present"], serde_json::Value::Null);
    assert!(pins["skipped"].is_string());
}

#[test]
fn minimal_pins_does_not_change_the_verdict() {
    for basis in ["132", "2413,3142", "2413,3142,246135"] {
        let plain = pinclass(&["decide", "--basis", basis, "--json"]);
        let minimal = pinclass(&["decide", "--basis", basis, "--json", "--minimal-pins"]);
        let a: serde_json::Value = serde_json::from_str(&stdout(&plain)).unwrap();
        let b: serde_json::Value = serde_json::from_str(&stdout(&minimal)).unwrap();
        assert_eq!(a["verdict"], b["verdict"], "{basis}");
        assert_eq!(plain.status.code(), minimal.status.code());
    }
}

#[test]
fn state_cap_hit_exits_2_with_partial_report() {
    let o = pinclass(&["decide", "--basis", "132", "--state-cap", "3"]);
    assert_eq!(o.status.code(), Some(2));
    assert_eq!(summary_line(&o), "undecided");
    assert!(stderr(&o).contains("limit exceeded"));
}

#[test]
fn state_cap_from_environment() {
    let o = Command::new(env!("CARGO_BIN_EXE_pinclass"))
        .args(["decide", "--basis", "132"])
        .env("PINCLASS_STATE_CAP", "3")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn usage_errors_exit_1() {
    assert_eq!(pinclass(&["decide"]).status.code(), Some(1));
    assert_eq!(pinclass(&["decide", "--basis", "1x2"]).status.code(), Some(1));
    assert_eq!(pinclass(&["decide", "--basis", "122"]).status.code(), Some(1));
    assert_eq!(pinclass(&["no-such-command"]).status.code(), Some(1));
    assert_eq!(pinclass(&["--help"]).status.code(), Some(0));
}

#[test]
fn dump_automata_writes_adjacency_files() {
    let dir = std::env::temp_dir().join(format!("pinclass-dump-{}", std::process::id()));
    let o = pinclass(&["decide", "--basis", "2413,3142", "--dump-automata", dir.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    for name in ["transducer.txt", "strict.txt", "pin_language.txt"] {
        let text = std::fs::read_to_string(dir.join(name)).unwrap();
        let mut lines = text.lines();
        assert!(lines.next().unwrap().starts_with("initial\t"), "{name}");
        assert!(lines.next().unwrap().starts_with("accepting\t"), "{name}");
        for l in lines {
            assert_eq!(l.split('\t').count(), 3, "{name}: {l}");
        }
    }
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn pin_class_count() {
    let o = pinclass(&["pin-class", "count", "--max-len", "1"]);
    assert_eq!(stdout(&o), "1\n");
    let o = pinclass(&["pin-class", "count", "--max-len", "6"]);
    assert_eq!(stdout(&o), "1\n2\n6\n24\n120\n664\n");
}

#[test]
fn pin_class_count_beyond_cap_exits_2() {
    let o = pinclass(&["pin-class", "count", "--max-len", "9"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn pin_class_basis_of_length_6() {
    let o = pinclass(&["pin-class", "basis", "--max-len", "6"]);
    assert_eq!(o.status.code(), Some(0));
    let lines: Vec<String> = stdout(&o).lines().map(String::from).collect();
    assert_eq!(lines.len(), 56);
    let mut sorted = lines.clone();
    sorted.sort();
    assert_eq!(lines, sorted);
    assert!(lines.iter().all(|l| l.len() == 6));
}

#[test]
fn pin_perm() {
    let o = pinclass(&["pin-perm", "4RDL21DL"]);
    assert_eq!(stdout(&o), "27453618\n");
    let o = pinclass(&["pin-perm", "1RL"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("position 3"));
    let o = pinclass(&["pin-perm", "R1"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("position 1"));
}

#[test]
fn embed_osc() {
    let o = pinclass(&["embed-osc", "2153647"]);
    assert_eq!(stdout(&o), "1 4 5 6 7 8 12\n");
    let o = pinclass(&["embed-osc", "321"]);
    assert_eq!(stdout(&o), "contains 321\n");
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn simples_table() {
    let o = pinclass(&["simples", "--max-len", "6"]);
    assert_eq!(stdout(&o), "1\t1\n2\t2\n3\t0\n4\t2\n5\t6\n6\t46\n");
    let o = pinclass(&["simples", "--basis", "132", "--max-len", "5", "--list"]);
    assert_eq!(stdout(&o), "1\t1\n  1\n2\t2\n  12\n  21\n3\t0\n4\t0\n5\t0\n");
}

#[test]
fn jobs_flag_is_accepted() {
    let o = pinclass(&["--jobs", "2", "pin-class", "count", "--max-len", "4"]);
    assert_eq!(stdout(&o), "1\n2\n6\n24\n");
}
