use std::io::Write;
use std::process::{Command, Output, Stdio};

use imocheck::report::parse_record;

fn imocheck(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_imocheck"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn tiling_file(text: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(text.as_bytes()).unwrap();
    f
}

const SMALL_SUITE: &[&str] = &[
    "suite",
    "--a2-max",
    "20",
    "--sum-instances",
    "20",
    "--c1-rect-max",
    "5",
    "--c1-parity-max",
    "5",
    "--c1-area-cap",
    "9",
    "--c1-guillotines",
    "20",
    "--c1-pinwheels",
    "3",
    "--n1-max",
    "100",
    "--n1-step-max",
    "500",
    "--n1-lemma-budget",
    "50",
    "--n1-isqrt-samples",
    "100",
];

#[test]
fn a2_prints_exact_terms() {
    let o = imocheck(&["a2", "--n", "1"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "0\t-1/1\n1\t1/2\n");

    let o = imocheck(&["a2", "--n", "3"]);
    assert_eq!(stdout(&o).lines().last(), Some("3\t1/24"));
}

#[test]
fn a2_verify() {
    let o = imocheck(&["a2", "--n", "6", "--verify"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("6\t863/60480"));
    assert_eq!(out.lines().last(), Some("pass"));

    assert_eq!(imocheck(&["a2", "--n", "0", "--verify"]).status.code(), Some(2));
    assert_eq!(imocheck(&["a2", "--n", "0"]).status.code(), Some(2));
    assert_eq!(imocheck(&["a2"]).status.code(), Some(2));
}

#[test]
fn c1_check_unit_squares() {
    let mut text = String::from("board 3 3\n");
    for x in 0..3 {
        for y in 0..3 {
            text.push_str(&format!("tile {x} {} {y} {}\n", x + 1, y + 1));
        }
    }
    let f = tiling_file(&text);
    let o = imocheck(&["c1-check", f.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert_eq!(stdout(&o), "witness (0,1,0,1) ds={0,2,0,2} AllEven\n");
}

#[test]
fn c1_check_single_tile() {
    let f = tiling_file("board 1 1\ntile 0 1 0 1\n");
    let o = imocheck(&["c1-check", f.path().to_str().unwrap(), "--ascii"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "witness (0,1,0,1) ds={0,0,0,0} AllEven\n");
    assert_eq!(stderr(&o), "A\n");
}

#[test]
fn c1_check_overlap_exits_1() {
    let f = tiling_file("board 3 1\ntile 0 2 0 1\ntile 1 3 0 1\n");
    let o = imocheck(&["c1-check", f.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    let err = stderr(&o);
    assert!(err.contains("(0,2,0,1)") && err.contains("(1,3,0,1)"), "{err}");
}

#[test]
fn c1_check_gap_exits_1() {
    let f = tiling_file("board 3 1\ntile 0 2 0 1\n");
    assert_eq!(imocheck(&["c1-check", f.path().to_str().unwrap()]).status.code(), Some(1));
}

#[test]
fn c1_check_parse_error_exits_2_with_line() {
    let f = tiling_file("# comment\nboard 3 3\ntile 0 3 0 x\n");
    let o = imocheck(&["c1-check", f.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("line 3"), "{}", stderr(&o));

    assert_eq!(imocheck(&["c1-check", "/nonexistent/tiling.txt"]).status.code(), Some(2));
}

#[test]
fn c1_check_even_board_exits_2() {
    let f = tiling_file("board 2 1\ntile 0 2 0 1\n");
    assert_eq!(imocheck(&["c1-check", f.path().to_str().unwrap()]).status.code(), Some(2));
}

#[test]
fn c1_gen_single_tile() {
    let o = imocheck(&["c1-gen", "--a", "1", "--b", "1", "--seed", "9"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "board 1 1\ntile 0 1 0 1\n");
}

#[test]
fn c1_gen_bad_dimensions_exit_2() {
    for args in [
        ["--a", "2", "--b", "2", "--kind", "pinwheel"],
        ["--a", "0", "--b", "3", "--kind", "guillotine"],
        ["--a", "3", "--b", "0", "--kind", "pinwheel"],
    ] {
        let mut full = vec!["c1-gen", "--seed", "1"];
        full.extend(args);
        assert_eq!(imocheck(&full).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn c1_gen_pipes_into_check() {
    for kind in ["guillotine", "pinwheel"] {
        for seed in 0..5 {
            let seed = seed.to_string();
            let gen = imocheck(&["c1-gen", "--a", "17", "--b", "11", "--seed", &seed, "--kind", kind]);
            assert_eq!(gen.status.code(), Some(0));
            let f = tiling_file(&stdout(&gen));
            let check = imocheck(&["c1-check", f.path().to_str().unwrap()]);
            assert_eq!(check.status.code(), Some(0), "{kind} {seed}: {}", stderr(&check));
            assert!(stdout(&check).starts_with("witness "));
        }
    }
}

#[test]
fn c1_gen_is_deterministic() {
    let args = ["c1-gen", "--a", "9", "--b", "7", "--seed", "123"];
    assert_eq!(stdout(&imocheck(&args)), stdout(&imocheck(&args)));
}

#[test]
fn n1_orbit_and_classification() {
    let o = imocheck(&["n1", "--a0", "7", "--steps", "5"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "7 10 13 16 4 2\n");

    let o = imocheck(&["n1", "--a0", "3", "--classify"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "PeriodicMult3 cycle=(0,3)\n");

    let o = imocheck(&["n1", "--a0", "7", "--classify"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("DivergentViaMod1 "));
}

#[test]
fn n1_bad_start_and_budget() {
    assert_eq!(imocheck(&["n1", "--a0", "1", "--steps", "3"]).status.code(), Some(2));
    assert_eq!(imocheck(&["n1", "--a0", "0", "--classify"]).status.code(), Some(2));
    assert_eq!(imocheck(&["n1", "--a0", "5"]).status.code(), Some(2));
    let o = imocheck(&["n1", "--a0", "7", "--classify", "--budget", "2"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(stdout(&o).starts_with("BudgetExceeded"));
}

#[test]
fn n1_claims_emit_records() {
    for a0 in ["3", "7", "8", "13", "30"] {
        let o = imocheck(&["n1", "--a0", a0, "--claims"]);
        assert_eq!(o.status.code(), Some(0), "a0={a0}");
        let out = stdout(&o);
        assert!(!out.is_empty());
        for line in out.lines() {
            let rec = parse_record(line).unwrap();
            assert!(rec.outcome() == imocheck::Outcome::Pass, "{line}");
        }
    }
}

#[test]
fn suite_records_follow_grammar() {
    let mut args = SMALL_SUITE.to_vec();
    args.extend(["--format", "records", "--seed", "99"]);
    let o = imocheck(&args);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert!(stderr(&o).contains("seed=99"));
    let out = stdout(&o);
    let mut ids = std::collections::BTreeSet::new();
    for line in out.lines() {
        let rec = parse_record(line).unwrap();
        assert_eq!(rec.outcome(), imocheck::Outcome::Pass, "{line}");
        ids.insert(rec.id);
    }
    assert_eq!(ids.len(), imocheck::ClaimId::ALL.len());
}

#[test]
fn suite_sequential_matches_parallel() {
    let mut seq = SMALL_SUITE.to_vec();
    seq.extend(["--format", "records", "--sequential"]);
    let mut par = SMALL_SUITE.to_vec();
    par.extend(["--format", "records"]);
    assert_eq!(stdout(&imocheck(&seq)), stdout(&imocheck(&par)));
}

#[test]
fn suite_human_format() {
    let o = imocheck(SMALL_SUITE);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.lines().last().unwrap().ends_with("claims passed"));
    assert!(!out.contains("CLAIM "));
}

#[test]
fn suite_starved_budget_exits_1() {
    let mut args = SMALL_SUITE.to_vec();
    args.extend(["--format", "records", "--n1-budget", "1"]);
    let o = imocheck(&args);
    assert_eq!(o.status.code(), Some(1));
    let out = stdout(&o);
    let starved = out
        .lines()
        .map(|l| parse_record(l).unwrap())
        .find(|r| r.id == imocheck::ClaimId::N1Classification)
        .unwrap();
    assert_eq!(starved.outcome(), imocheck::Outcome::Fail);
    assert!(starved.get("detail").unwrap().starts_with("BudgetExceeded"));
}

#[test]
fn suite_bad_config_exits_2() {
    assert_eq!(imocheck(&["suite", "--c1-area-cap", "17"]).status.code(), Some(2));
    assert_eq!(imocheck(&["suite", "--a2-max", "0"]).status.code(), Some(2));
    assert_eq!(imocheck(&["suite", "--format", "xml"]).status.code(), Some(2));
}

#[test]
fn records_and_diagnostics_use_separate_streams() {
    let mut args = SMALL_SUITE.to_vec();
    args.extend(["--format", "records"]);
    let o = Command::new(env!("CARGO_BIN_EXE_imocheck"))
        .args(&args)
        .stdin(Stdio::null())
        .output()
        .unwrap();
    assert!(stdout(&o).lines().all(|l| l.starts_with("CLAIM ")));
    assert!(stderr(&o).lines().all(|l| !l.starts_with("CLAIM ")));
}
