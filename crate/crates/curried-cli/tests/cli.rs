use std::path::Path;
use std::process::{Command, Output};

use curried::checkers::parse_rep;
use curried::diagram::{compose, parse_morphism};
use curried::Rational;

fn curried(args: &[&str], dir: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_curried")).args(args).current_dir(dir).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn enumerate_counts_match_closed_forms() {
    let dir = tempfile::tempdir().unwrap();
    let o = curried(&["enumerate", "--kind", "brauer", "-n", "3", "-m", "3", "--count"], dir.path());
    assert_eq!(stdout(&o).trim(), "15");
    let o = curried(&["enumerate", "--kind", "partition", "-n", "2", "-m", "1", "--count"], dir.path());
    assert_eq!(stdout(&o).trim(), "5");
}

#[test]
fn compose_agrees_with_the_library() {
    let dir = tempfile::tempdir().unwrap();
    let cap = "n=2 m=0 kind=brauer blocks=[[b1,b2]]";
    let cup = "n=0 m=2 kind=brauer blocks=[[t1,t2]]";
    std::fs::write(dir.path().join("cap.diag"), cap).unwrap();
    std::fs::write(dir.path().join("cup.diag"), cup).unwrap();
    let o = curried(&["compose", "--kind", "brauer", "--delta", "3/2", "cap.diag", "cup.diag"], dir.path());
    assert!(o.status.success());
    let got = parse_morphism(&stdout(&o)).unwrap();
    let want = compose(&parse_morphism(cap).unwrap(), &parse_morphism(cup).unwrap(), &Rational::new(3, 2)).unwrap();
    assert_eq!(got, want);
}

#[test]
fn functor_output_reparses_and_checks() {
    let dir = tempfile::tempdir().unwrap();
    for (from, algebra) in
        [("brauer", "sp"), ("restricted", "witt"), ("partition", "weyl"), ("star", "weyl"), ("fa", "witt")]
    {
        let o = curried(
            &[
                "functor",
                "--from",
                from,
                "--delta",
                "1",
                "--epsilon",
                "2",
                "--truncate",
                "3",
                "--roundtrip",
                "-o",
                "x.rep",
            ],
            dir.path(),
        );
        assert!(o.status.success(), "{from}: {}", String::from_utf8_lossy(&o.stderr));
        let text = std::fs::read_to_string(dir.path().join("x.rep")).unwrap();
        assert_eq!(parse_rep(&text).unwrap().algebra.to_string(), algebra);
        let o = curried(&["check", "--algebra", algebra, "--input", "x.rep"], dir.path());
        assert!(o.status.success(), "{from}: {}", stdout(&o));
        assert!(stdout(&o).ends_with("result pass\n"));
    }
}

#[test]
fn reports_are_byte_identical_across_runs() {
    let dir = tempfile::tempdir().unwrap();
    let args = ["functor", "--from", "partition", "--delta", "2", "--truncate", "3"];
    let (a, b) = (curried(&args, dir.path()), curried(&args, dir.path()));
    assert_eq!(a.stdout, b.stdout);
    let args = ["oracle", "--kind", "gl", "--dim", "2", "--seed", "11"];
    assert_eq!(curried(&args, dir.path()).stdout, curried(&args, dir.path()).stdout);
}

#[test]
fn exit_codes_separate_bad_input_from_failed_checks() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(dir.path().join("bad.rep"), "rep algebra=gl\nnot a module\n").unwrap();
    assert_eq!(curried(&["check", "--algebra", "gl", "--input", "bad.rep"], dir.path()).status.code(), Some(2));
    assert_eq!(curried(&["check", "--algebra", "gl", "--input", "missing.rep"], dir.path()).status.code(), Some(2));
    assert_eq!(curried(&["acceptance", "--only", "12"], dir.path()).status.code(), Some(2));

    // scale β so that the sp relations break
    let o = curried(&["functor", "--from", "brauer", "--delta", "1", "--truncate", "3"], dir.path());
    let mut file = parse_rep(&stdout(&o)).unwrap();
    for (name, op) in &mut file.ops {
        if name == "beta" {
            *op = op.scale(&Rational::from_int(2));
        }
    }
    std::fs::write(dir.path().join("broken.rep"), curried::checkers::write_rep(&file)).unwrap();
    let o = curried(&["check", "--algebra", "sp", "--input", "broken.rep", "--format", "machine"], dir.path());
    assert_eq!(o.status.code(), Some(1));
    let report: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(report["passed"], false);
    assert!(!report["operation"].as_array().unwrap().is_empty());
}

#[test]
fn acceptance_subset_prints_one_line_per_criterion() {
    let dir = tempfile::tempdir().unwrap();
    let o = curried(&["acceptance", "--only", "1,3,5"], dir.path());
    assert!(o.status.success());
    let out = stdout(&o);
    assert_eq!(out.lines().count(), 3);
    assert!(out.lines().all(|l| l.starts_with("[PASS]")));
}
