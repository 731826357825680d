use std::path::Path;
use std::process::{Command, Output};

fn run(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_linkdensity"))
        .current_dir(dir)
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn pretzel_determinant_through_files() {
    let dir = tempfile::tempdir().unwrap();
    let g = run(dir.path(), &["gen", "pretzel", "3", "5", "3", "--closure", "D", "--out", "p.lnk"]);
    assert!(g.status.success());
    let o = run(dir.path(), &["inv", "det", "p.lnk"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "39");
}

#[test]
fn synth_writes_passing_certificate() {
    let dir = tempfile::tempdir().unwrap();
    let o = run(
        dir.path(),
        &["synth", "--target", "1.831931", "--eps", "0.3", "--out", "k.lnk", "--cert", "c.txt"],
    );
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let cert = std::fs::read_to_string(dir.path().join("c.txt")).unwrap();
    assert!(cert.lines().any(|l| l == "pass = true"));
    assert!(cert.contains("# config = Synth"));
    let d = run(dir.path(), &["inv", "det", "k.lnk"]);
    let det = cert.lines().find_map(|l| l.strip_prefix("determinant = ")).unwrap();
    assert_eq!(stdout(&d).trim(), det);
}

#[test]
fn budget_exhaustion_exits_three() {
    let dir = tempfile::tempdir().unwrap();
    let o = run(
        dir.path(),
        &["synth", "--target", "3.663862376708876", "--eps", "0.3", "--out", "k.lnk", "--cert", "c.txt"],
    );
    assert_eq!(o.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&o.stderr).contains("best gap 0.162553875230864"));
}

#[test]
fn domain_errors_exit_two() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(dir.path().join("empty.lnk"), "link 0 0\n").unwrap();
    assert_eq!(run(dir.path(), &["density", "det", "empty.lnk"]).status.code(), Some(2));
    assert_eq!(run(dir.path(), &["gen", "weaving", "2", "3"]).status.code(), Some(2));
    assert_eq!(run(dir.path(), &["gen", "braid", "2", "1,1,1", "--closure", "N"]).status.code(), Some(2));
    assert_eq!(run(dir.path(), &["gen", "weaving", "3", "3", "--format", "pd"]).status.code(), Some(2));
    std::fs::write(dir.path().join("bad.lnk"), "nonsense\n").unwrap();
    let o = run(dir.path(), &["inv", "det", "bad.lnk"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 1"));
}

#[test]
fn unknown_flags_rejected() {
    let dir = tempfile::tempdir().unwrap();
    let o = run(dir.path(), &["gen", "weaving", "3", "3", "--bogus"]);
    assert!(!o.status.success());
}

#[test]
fn output_is_deterministic_without_timestamp() {
    let dir = tempfile::tempdir().unwrap();
    let args = ["--no-timestamp", "gen", "weaving", "4", "4", "--closure", "N"];
    let a = run(dir.path(), &args);
    let b = run(dir.path(), &args);
    assert_eq!(a.stdout, b.stdout);
    assert!(!stdout(&a).contains("timestamp"));
    let c = run(dir.path(), &args[1..]);
    assert!(stdout(&c).contains("# timestamp = "));
}

#[test]
fn native_round_trip_preserves_canonical_form() {
    let dir = tempfile::tempdir().unwrap();
    for (args, file) in [
        (vec!["gen", "nonalt", "3", "--out", "a.lnk"], "a.lnk"),
        (vec!["gen", "weaving", "4", "3", "--closure", "belt", "--out", "b.lnk"], "b.lnk"),
        (vec!["gen", "pretzel", "2", "3", "4", "--out", "c.lnk"], "c.lnk"),
    ] {
        let mut full = args.clone();
        full.insert(0, "--no-timestamp");
        assert!(run(dir.path(), &full).status.success());
        let text = std::fs::read_to_string(dir.path().join(file)).unwrap();
        let first = linkdensity::format::parse(&text).unwrap();
        let rewritten = match &first {
            linkdensity::format::Diagram::Link(d) => linkdensity::format::write_link(d, &[]),
            linkdensity::format::Diagram::Tangle(t) => linkdensity::format::write_tangle(t, &[]),
        };
        let second = linkdensity::format::parse(&rewritten).unwrap();
        assert_eq!(canon(&first), canon(&second));
    }
    let text = std::fs::read_to_string(dir.path().join("a.lnk")).unwrap();
    let direct = linkdensity::synthesis::nonalt_family(3).unwrap();
    let parsed = linkdensity::format::parse_link(&text).unwrap();
    assert_eq!(direct.canonical_form().unwrap(), parsed.canonical_form().unwrap());
}

fn canon(d: &linkdensity::format::Diagram) -> linkdensity::CanonicalForm {
    match d {
        linkdensity::format::Diagram::Link(l) => l.canonical_form().unwrap(),
        linkdensity::format::Diagram::Tangle(t) => t.canonical_form().unwrap(),
    }
}

#[test]
fn scan_writes_rows_in_order() {
    let dir = tempfile::tempdir().unwrap();
    let o = run(
        dir.path(),
        &["scan", "weaving", "--k-min", "3", "--k-max", "7", "--closure", "D", "--csv", "s.csv"],
    );
    assert!(o.status.success());
    let text = std::fs::read_to_string(dir.path().join("s.csv")).unwrap();
    let lines: Vec<_> = text.lines().collect();
    assert_eq!(lines[0], "k,crossings,det_digits,det,det_density");
    assert_eq!(lines.len(), 6);
    assert!(lines[1].starts_with("3,6,2,16,"));
    assert!(lines[2].starts_with("4,12,3,384,"));
}

#[test]
fn exports_trefoil() {
    let dir = tempfile::tempdir().unwrap();
    let dt = run(dir.path(), &["gen", "braid", "2", "1,1,1", "--format", "dt"]);
    assert_eq!(stdout(&dt).trim(), "DT[-4,-6,-2]");
    let pd = run(dir.path(), &["gen", "braid", "2", "1,1,1", "--format", "pd"]);
    assert_eq!(stdout(&pd).matches("X[").count(), 3);
}

#[test]
fn nonalt_certificate_reports_each_check() {
    let dir = tempfile::tempdir().unwrap();
    assert!(run(dir.path(), &["gen", "nonalt", "3", "--out", "n.lnk"]).status.success());
    let o = stdout(&run(dir.path(), &["certify-nonalt", "n.lnk"]));
    for line in ["adequate = true", "diagrammatically_prime = true", "non_alternating_diagram = true"] {
        assert!(o.contains(line), "{o}");
    }
}
