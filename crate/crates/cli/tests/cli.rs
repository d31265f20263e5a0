use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_simplex-color"))
}

fn run(dir: &Path, args: &[&str]) -> Output {
    bin().current_dir(dir).args(args).output().unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn generate(dir: &Path, args: &[&str], out: &str) {
    let mut full = vec!["generate"];
    full.extend_from_slice(args);
    full.extend_from_slice(&["-o", out]);
    let o = run(dir, &full);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
}

#[test]
fn fan_colors_with_three() {
    let t = tempfile::tempdir().unwrap();
    generate(t.path(), &["--kind", "fan", "--dim", "2", "--size", "3"], "fan.json");
    let o = run(t.path(), &["color", "fan.json"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("colors used: 3"));
    assert!(t.path().join("fan.coloring.json").exists());
    assert!(t.path().join("fan.certificate.json").exists());
    let o = run(
        t.path(),
        &["verify", "fan.json", "fan.coloring.json", "--certificate", "fan.certificate.json"],
    );
    assert_eq!(code(&o), 0);
}

#[test]
fn freudenthal_cells_alias_counts_simplices() {
    let t = tempfile::tempdir().unwrap();
    let o = run(
        t.path(),
        &["generate", "--kind", "freudenthal", "--dim", "4", "--cells", "2", "-o", "f4.json"],
    );
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).starts_with("384 simplices"));
}

#[test]
fn high_dimensional_fan_goes_to_stdout() {
    let t = tempfile::tempdir().unwrap();
    let o = run(t.path(), &["generate", "--kind", "fan", "--dim", "7", "--size", "3"]);
    assert_eq!(code(&o), 0);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["dimension"], 7);
    assert_eq!(v["simplices"].as_array().unwrap().len(), 3);
}

#[test]
fn path_needs_two_colors() {
    let t = tempfile::tempdir().unwrap();
    generate(t.path(), &["--kind", "path", "--dim", "3", "--size", "5"], "p.json");
    let o = run(t.path(), &["color", "p.json", "--method", "geometric", "-o", "col.json"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("colors used: 2"));
    assert!(t.path().join("col.certificate.json").exists());
    let o = run(t.path(), &["chromatic", "p.json"]);
    assert_eq!(stdout(&o).trim(), "chromatic number: 2");
}

#[test]
fn unrealizable_control_exits_three() {
    let t = tempfile::tempdir().unwrap();
    generate(t.path(), &["--kind", "boundary-abstract", "--dim", "2"], "b.json");
    let o = run(t.path(), &["color", "b.json"]);
    assert_eq!(code(&o), 3);
    assert!(String::from_utf8_lossy(&o.stderr).contains("4 remaining"));
}

#[test]
fn bad_coloring_exits_four() {
    let t = tempfile::tempdir().unwrap();
    generate(t.path(), &["--kind", "fan", "--dim", "2", "--size", "3"], "fan.json");
    fs::write(t.path().join("bad.json"), r#"{"colors":[0,0,1]}"#).unwrap();
    let o = run(t.path(), &["verify", "fan.json", "bad.json"]);
    assert_eq!(code(&o), 4);
    assert!(stdout(&o).contains("same-color"));
    fs::write(t.path().join("short.json"), r#"{"colors":[0,1]}"#).unwrap();
    assert_eq!(code(&run(t.path(), &["verify", "fan.json", "short.json"])), 2);
}

#[test]
fn input_errors_exit_two() {
    let t = tempfile::tempdir().unwrap();
    fs::write(t.path().join("broken.json"), "{\"dimension\": 2,\n \"vertices\": [").unwrap();
    let o = run(t.path(), &["color", "broken.json"]);
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 2"));
    assert_eq!(code(&run(t.path(), &["color", "missing.json"])), 2);
    assert_eq!(
        code(&run(t.path(), &["generate", "--kind", "tri-tiling", "--dim", "3", "--size", "2"])),
        2
    );
    assert_eq!(code(&run(t.path(), &["generate", "--kind", "cube", "--dim", "3"])), 2);
}

#[test]
fn analyze_reports_cliques() {
    let t = tempfile::tempdir().unwrap();
    generate(t.path(), &["--kind", "fan", "--dim", "2", "--size", "3"], "fan.json");
    let text = stdout(&run(t.path(), &["analyze", "fan.json"]));
    assert!(text.contains("max degree: 2"));
    assert!(text.contains("K_4: absent"));
    assert!(text.contains("K_3: present (1 found)"));
    assert!(text.contains("4 vertices, vertex count ok, halfspace condition ok"));

    generate(t.path(), &["--kind", "fan", "--dim", "3", "--size", "4"], "tetra.json");
    let o = run(t.path(), &["analyze", "tetra.json", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["k_d2"], serde_json::Value::Null);
    assert_eq!(v["k_d1"][0]["distinct_vertex_ids"].as_array().unwrap().len(), 5);
    assert_eq!(v["k_d1"][0]["halfspace_condition_ok"], true);

    generate(t.path(), &["--kind", "freudenthal", "--dim", "2", "--size", "4"], "grid.json");
    assert!(stdout(&run(t.path(), &["analyze", "grid.json"])).contains("K_4: absent"));
}

#[test]
fn render_is_deterministic_and_planar_only() {
    let t = tempfile::tempdir().unwrap();
    generate(t.path(), &["--kind", "tri-tiling", "--dim", "2", "--size", "4"], "t.json");
    assert_eq!(code(&run(t.path(), &["color", "t.json"])), 0);
    for out in ["a.svg", "b.svg"] {
        let o = run(
            t.path(),
            &["render", "t.json", "--coloring", "t.coloring.json", "--show-dual", "-o", out],
        );
        assert_eq!(code(&o), 0);
    }
    let a = fs::read(t.path().join("a.svg")).unwrap();
    assert_eq!(a, fs::read(t.path().join("b.svg")).unwrap());
    let svg = String::from_utf8(a).unwrap();
    assert_eq!(svg.matches("<polygon").count(), 16);
    assert!(svg.contains("<polyline"));

    generate(t.path(), &["--kind", "fan", "--dim", "3", "--size", "4"], "f3.json");
    assert_eq!(code(&run(t.path(), &["render", "f3.json", "-o", "x.svg"])), 2);

    let o = run(
        t.path(),
        &["render", "t.json", "--coloring", "t.coloring.json", "--palette", "red", "-o", "c.svg"],
    );
    assert_eq!(code(&o), 2);
}

#[test]
fn batch_coloring_then_verify_every_kind() {
    let t = tempfile::tempdir().unwrap();
    let specs: &[(&str, &str, &str)] = &[
        ("fan", "3", "4"),
        ("closed-fan", "2", "7"),
        ("tri-tiling", "2", "6"),
        ("delaunay2d", "2", "60"),
        ("freudenthal", "3", "2"),
        ("path", "4", "30"),
    ];
    let mut names = Vec::new();
    for (kind, d, size) in specs {
        let name = format!("{kind}.json");
        generate(t.path(), &["--kind", kind, "--dim", d, "--size", size, "--seed", "5"], &name);
        names.push(name);
    }
    let mut args = vec!["color", "--jobs", "3"];
    args.extend(names.iter().map(String::as_str));
    let o = run(t.path(), &args);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    let lines: Vec<String> = stdout(&o).lines().map(String::from).collect();
    assert_eq!(lines.len(), names.len());
    for (line, name) in lines.iter().zip(&names) {
        assert!(line.starts_with(name.as_str()), "{line}");
        let stem = name.trim_end_matches(".json");
        let coloring = format!("{stem}.coloring.json");
        let cert = format!("{stem}.certificate.json");
        let o = run(t.path(), &["verify", name, &coloring, "--certificate", &cert]);
        assert_eq!(code(&o), 0, "{name}");
    }

    // -o is rejected for batches; a failing member sets the exit code.
    assert_eq!(code(&run(t.path(), &["color", "fan.json", "path.json", "-o", "x.json"])), 2);
    generate(t.path(), &["--kind", "boundary-abstract", "--dim", "3"], "b.json");
    assert_eq!(code(&run(t.path(), &["color", "fan.json", "b.json"])), 3);
}

#[test]
fn off_output_round_trips_through_color() {
    let t = tempfile::tempdir().unwrap();
    generate(t.path(), &["--kind", "delaunay2d", "--dim", "2", "--size", "25", "--seed", "2"], "d.off");
    let text = fs::read_to_string(t.path().join("d.off")).unwrap();
    assert!(text.starts_with("OFF\n"));
    assert_eq!(code(&run(t.path(), &["color", "d.off"])), 0);
    assert_eq!(code(&run(t.path(), &["verify", "d.off", "d.coloring.json"])), 0);
}
