use std::io::{self, Write};
use std::path::Path;

use imocheck::a2::{self, A2Sequence};
use imocheck::c1::{self, distances, Tiling};
use imocheck::n1::{self, Classification};
use imocheck::suite::{self, OutputFormat, SuiteConfig};
use imocheck::{ClaimReport, Error};

use crate::exit;

fn usage(msg: impl std::fmt::Display) -> u8 {
    eprintln!("error: {msg}");
    exit::USAGE
}

pub fn a2(n: u64, verify: bool) -> u8 {
    if n < 1 {
        return usage("--n must be at least 1");
    }
    let seq = A2Sequence::up_to(n as usize);
    let mut out = io::stdout().lock();
    for (i, v) in seq.values().iter().enumerate() {
        let _ = writeln!(out, "{i}\t{v}");
    }
    if !verify {
        return exit::PASS;
    }
    let report = a2::verify(n as usize);
    let _ = writeln!(out, "{}", if report.passed() { "pass" } else { "fail" });
    eprintln!("{report}");
    if report.passed() {
        exit::PASS
    } else {
        exit::FAILED
    }
}

pub fn c1_check(path: &Path, ascii: bool) -> u8 {
    let text = match std::fs::read_to_string(path) {
        Ok(t) => t,
        Err(e) => return usage(format!("{}: {e}", path.display())),
    };
    let tiling = match c1::parse_tiling(&text) {
        Ok(t) => t,
        Err(e) => return usage(format!("{}: {e}", path.display())),
    };
    if let Err(e) = tiling.validate() {
        eprintln!("{e}");
        return exit::FAILED;
    }
    if ascii {
        eprint!("{}", ascii_board(&tiling));
    }
    if tiling.width() % 2 == 0 || tiling.height() % 2 == 0 {
        return usage(format!(
            "board {}x{} has an even side; the witness needs odd sides",
            tiling.width(),
            tiling.height()
        ));
    }
    match tiling.witness() {
        Ok((tile, parity)) => {
            let ds = distances(&tile, &tiling.board());
            println!(
                "witness {tile} ds={{{},{},{},{}}} {parity}",
                ds[0], ds[1], ds[2], ds[3]
            );
            exit::PASS
        }
        Err(e) => {
            eprintln!("{e}");
            exit::ANOMALY
        }
    }
}

/// One character per square, tiles labelled in lexicographic order; the top
/// row has the largest `y`.
fn ascii_board(t: &Tiling) -> String {
    const LABELS: &[u8] = b"ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789";
    let (w, h) = (t.width() as usize, t.height() as usize);
    let mut grid = vec![vec![b'.'; w]; h];
    for (i, r) in t.tiles().iter().enumerate() {
        let label = LABELS[i % LABELS.len()];
        for s in r.squares() {
            grid[s.y as usize][s.x as usize] = label;
        }
    }
    let mut out = String::new();
    for row in grid.iter().rev() {
        out.push_str(std::str::from_utf8(row).unwrap());
        out.push('\n');
    }
    out
}

pub fn c1_gen(a: u32, b: u32, seed: u64, pinwheel: bool) -> u8 {
    if a == 0 || b == 0 {
        return usage("board sides must be positive");
    }
    let tiling = if pinwheel {
        match c1::random_pinwheel(a, b, seed) {
            Ok(t) => t,
            Err(e) => return usage(format!("pinwheel needs a, b >= 3 ({e})")),
        }
    } else {
        c1::guillotine(a, b, seed)
    };
    print!("{}", c1::serialize_tiling(&tiling));
    exit::PASS
}

pub fn n1(a0: u64, steps: Option<u64>, classify: bool, claims: bool, budget: Option<u64>) -> u8 {
    if a0 <= 1 {
        return usage("--a0 must be greater than 1");
    }
    let budget = budget.unwrap_or_else(|| n1::default_budget(a0));
    if let Some(k) = steps {
        return match n1::orbit(a0, k) {
            Ok(values) => {
                let line: Vec<String> = values.iter().map(u64::to_string).collect();
                println!("{}", line.join(" "));
                exit::PASS
            }
            Err(e) => anomaly(&e),
        };
    }
    if claims {
        return match n1_claims(a0, budget) {
            Ok(reports) => {
                let mut code = exit::PASS;
                for r in &reports {
                    println!("{}", r.to_record());
                    if !r.passed() {
                        code = exit::FAILED;
                    }
                }
                code
            }
            Err(e) => anomaly(&e),
        };
    }
    if !classify {
        return usage("one of --steps, --classify or --claims is required");
    }
    match n1::classify(a0, budget) {
        Ok(trace) => {
            println!("{}", trace.summary());
            if trace.classification == Classification::BudgetExceeded {
                exit::ANOMALY
            } else {
                exit::PASS
            }
        }
        Err(e) => anomaly(&e),
    }
}

fn anomaly(e: &Error) -> u8 {
    eprintln!("{e}");
    match e {
        Error::PreconditionFailed(_) => exit::USAGE,
        _ => exit::ANOMALY,
    }
}

/// Claims and orbit lemmas that apply to the orbit starting at `a0`.
fn n1_claims(a0: u64, budget: u64) -> imocheck::Result<Vec<ClaimReport>> {
    let mut out = vec![n1::check_claim_for(a0, 0, budget)?];
    if a0 <= 9 {
        match a0 % 3 {
            0 => out.push(n1::check_claim3a(a0, 0, budget)?),
            1 => out.push(n1::check_claim4a(a0, 0, budget)?),
            _ => {}
        }
    }
    if a0 > 9 && a0 % 3 != 2 {
        out.push(n1::check_claim2(a0)?);
    }
    out.push(n1::lemma_mult3_propagates(a0, budget)?);
    out.push(n1::lemma_nonmult3_propagates(a0, budget)?);
    out.push(n1::lemma_all_gt1(a0, budget)?);
    Ok(out)
}

pub fn suite(config: SuiteConfig) -> u8 {
    eprintln!("seed={}", config.seed);
    let records = config.format == OutputFormat::Records;
    let mut out = io::stdout().lock();
    let result = suite::run(&config, |r| {
        let _ = if records {
            writeln!(out, "{}", r.to_record())
        } else {
            writeln!(out, "{r}")
        };
    });
    match result {
        Ok(summary) => {
            let line = format!(
                "{} of {} claims passed",
                summary.total - summary.failed,
                summary.total
            );
            if records {
                eprintln!("{line}");
            } else {
                let _ = writeln!(out, "{line}");
            }
            if summary.passed() {
                exit::PASS
            } else {
                exit::FAILED
            }
        }
        Err(e @ Error::PreconditionFailed(_)) => usage(e),
        Err(e) => anomaly(&e),
    }
}
