//! Sweeps over rect ranges and tiling families, one `ClaimReport` per claim.

use std::collections::HashSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::generate::{enumerate_tilings, guillotine, random_pinwheel};
use super::literal;
use super::rect::{all_rects_within, count_green_row, Rect, RectClass};
use super::tiling::{distances, parity_lemma_check, shared_parity, Tiling};
use crate::exec::Exec;
use crate::mix_seed;
use crate::report::{ClaimId, ClaimReport};

fn coords(r: &Rect) -> Vec<u64> {
    vec![r.x1 as u64, r.x2 as u64, r.y1 as u64, r.y2 as u64]
}

fn rect_sweep<F>(id: ClaimId, max: u32, exec: Exec, bad: F) -> ClaimReport
where
    F: Fn(&Rect) -> bool + Sync + Send,
{
    let rects = all_rects_within(max);
    let report = ClaimReport::new(id)
        .param("max_coord", max as u64)
        .steps(rects.len() as u64);
    match exec.find_first_slice(&rects, |r| bad(r).then_some(*r)) {
        Some(r) => report.fail(coords(&r)),
        None => report,
    }
}

/// Closed-form colour counts against brute-force enumeration of squares.
pub fn check_counting(max: u32, exec: Exec) -> ClaimReport {
    rect_sweep(ClaimId::C1Counting, max, exec, |r| {
        let green = r.squares().filter(|s| s.is_green()).count() as u64;
        let yellow = r.squares().filter(|s| s.is_yellow()).count() as u64;
        let g = r.count_green().unwrap();
        let y = r.count_yellow().unwrap();
        g != green || y != yellow || g + y != r.area()
    })
}

pub fn check_row_counting(max: u32) -> ClaimReport {
    let mut report = ClaimReport::new(ClaimId::C1RowCounting).param("max_coord", max as u64);
    let mut steps = 0;
    for y0 in 0..=max {
        for x1 in 0..=max {
            for x2 in x1 + 1..=max {
                steps += 1;
                let brute = Rect::new(x1, x2, y0, y0 + 1)
                    .squares()
                    .filter(|s| s.is_green())
                    .count() as u64;
                if count_green_row(x1, x2, y0).unwrap() != brute && report.passed() {
                    report = report.fail(vec![x1 as u64, x2 as u64, y0 as u64]);
                }
            }
        }
    }
    report.steps(steps)
}

/// Green rects hold one extra green square, yellow rects one extra yellow
/// square, mixed rects an even split.
pub fn check_class_count_link(max: u32, exec: Exec) -> ClaimReport {
    rect_sweep(ClaimId::C1ClassCountLink, max, exec, |r| {
        let g = literal::green_squares(r).len() as u64;
        let y = literal::yellow_squares(r).len() as u64;
        match r.classify().unwrap() {
            RectClass::Green => g != y + 1,
            RectClass::Yellow => y != g + 1,
            RectClass::Mixed => g != y,
        }
    })
}

/// `(0, a, 0, b)` is green for every odd `a, b <= max_side`.
pub fn check_odd_board_green(max_side: u32) -> ClaimReport {
    let mut report =
        ClaimReport::new(ClaimId::C1OddBoardGreen).param("max_side", max_side as u64);
    let mut steps = 0;
    for a in (1..=max_side).step_by(2) {
        for b in (1..=max_side).step_by(2) {
            steps += 1;
            if Rect::board(a, b).classify().unwrap() != RectClass::Green && report.passed() {
                report = report.fail(vec![a as u64, b as u64]);
            }
        }
    }
    report.steps(steps)
}

/// Every quadruple with coordinates in `0..=max`, invalid ones included.
fn all_quadruples(max: u32) -> Vec<Rect> {
    let r = 0..=max;
    r.clone()
        .flat_map(|x1| {
            let r = r.clone();
            r.clone().flat_map(move |x2| {
                let r = r.clone();
                r.clone()
                    .flat_map(move |y1| r.clone().map(move |y2| Rect::new(x1, x2, y1, y2)))
            })
        })
        .collect()
}

fn pair_agreement<F>(id: ClaimId, max: u32, exec: Exec, disagree: F) -> ClaimReport
where
    F: Fn(&Rect, &HashSet<super::rect::Square>, &Rect, &HashSet<super::rect::Square>) -> bool
        + Sync
        + Send,
{
    let rects = all_quadruples(max);
    let sets: Vec<_> = rects.iter().map(literal::squares).collect();
    let n = rects.len() as u64;
    let report = ClaimReport::new(id)
        .param("max_coord", max as u64)
        .steps(n * n);
    let hit = exec.find_first_range(0..n, |i| {
        let (r1, s1) = (&rects[i as usize], &sets[i as usize]);
        rects
            .iter()
            .zip(&sets)
            .find(|(r2, s2)| disagree(r1, s1, r2, s2))
            .map(|(r2, _)| (*r1, *r2))
    });
    match hit {
        Some((r1, r2)) => report.fail([coords(&r1), coords(&r2)].concat()),
        None => report,
    }
}

/// Interval overlap agrees with shared-square overlap on all rect pairs.
pub fn check_overlap_agreement(max: u32, exec: Exec) -> ClaimReport {
    pair_agreement(ClaimId::C1OverlapAgreement, max, exec, |r1, s1, r2, s2| {
        r1.overlaps(r2) == s1.is_disjoint(s2)
    })
}

/// Coordinate containment agrees with square-set inclusion on all pairs.
pub fn check_inside_agreement(max: u32, exec: Exec) -> ClaimReport {
    pair_agreement(ClaimId::C1InsideAgreement, max, exec, |r1, s1, r2, s2| {
        r1.inside(r2) != s1.is_subset(s2)
    })
}

/// Per-tiling facts for the main theorem run.
#[derive(Clone, Copy, Debug, Default)]
struct TilingVerdict {
    theorem: bool,
    disjoint_union: bool,
    finiteness: bool,
}

fn judge(t: &Tiling) -> TilingVerdict {
    let board = t.board();
    let theorem = match (t.witness(), t.find_green_tile()) {
        (Ok((w, _)), Ok(g)) => {
            shared_parity(&distances(&w, &board)).is_some()
                && shared_parity(&distances(&g, &board)).is_some()
        }
        _ => false,
    };
    let sum = |f: fn(&Rect) -> u64| t.tiles().iter().map(f).sum::<u64>();
    let disjoint_union = sum(|r| r.count_green().unwrap_or(u64::MAX))
        == board.count_green().unwrap_or(0)
        && sum(|r| r.count_yellow().unwrap_or(u64::MAX)) == board.count_yellow().unwrap_or(0)
        && sum(|r| literal::green_squares(r).len() as u64)
            == literal::green_squares(&board).len() as u64;
    let finiteness = t.tiles().iter().all(|r| r.inside(&board));
    TilingVerdict {
        theorem,
        disjoint_union,
        finiteness,
    }
}

struct TheoremTally {
    theorem: ClaimReport,
    union: ClaimReport,
    finite: ClaimReport,
    seen: u64,
}

impl TheoremTally {
    fn new(id: ClaimId) -> Self {
        TheoremTally {
            theorem: ClaimReport::new(id),
            union: ClaimReport::new(ClaimId::C1DisjointUnion),
            finite: ClaimReport::new(ClaimId::C1Finiteness),
            seen: 0,
        }
    }

    fn record(&mut self, t: &Tiling, v: TilingVerdict, tag: u64) {
        self.seen += 1;
        let cex = || vec![t.width() as u64, t.height() as u64, tag];
        for (report, ok) in [
            (&mut self.theorem, v.theorem),
            (&mut self.union, v.disjoint_union),
            (&mut self.finite, v.finiteness),
        ] {
            if !ok && report.passed() {
                *report = report.clone().fail(cex()).detail(format!("tiles={:?}", t.tiles()));
            }
        }
    }

    fn finish(self, params: &[(&'static str, u64)]) -> Vec<ClaimReport> {
        [self.theorem, self.union, self.finite]
            .into_iter()
            .map(|mut r| {
                r.params.extend_from_slice(params);
                r.steps(self.seen)
            })
            .collect()
    }
}

const CHUNK: usize = 4096;

/// Odd-by-odd boards with area at most `area_cap`.
pub fn odd_boards(area_cap: u32) -> Vec<(u32, u32)> {
    let mut out = Vec::new();
    for a in (1..=area_cap).step_by(2) {
        for b in (1..=area_cap).step_by(2) {
            if a * b <= area_cap {
                out.push((a, b));
            }
        }
    }
    out
}

/// Main theorem over every tiling of every odd board of area `<= area_cap`.
///
/// Returns the theorem, disjoint-union and finiteness reports, in that order.
pub fn check_theorem_exhaustive(area_cap: u32, exec: Exec) -> Vec<ClaimReport> {
    let mut tally = TheoremTally::new(ClaimId::C1TheoremExhaustive);
    for (a, b) in odd_boards(area_cap) {
        let mut iter = match enumerate_tilings(a, b) {
            Ok(it) => it,
            Err(e) => {
                let r = ClaimReport::new(ClaimId::C1TheoremExhaustive)
                    .fail(vec![a as u64, b as u64])
                    .detail(e.to_string());
                return vec![r];
            }
        };
        let mut index = 0u64;
        loop {
            let chunk: Vec<Tiling> = iter.by_ref().take(CHUNK).collect();
            if chunk.is_empty() {
                break;
            }
            let verdicts = exec.map_slice(&chunk, judge);
            for (t, v) in chunk.iter().zip(verdicts) {
                tally.record(t, v, index);
                index += 1;
            }
        }
    }
    tally.finish(&[("area_cap", area_cap as u64)])
}

/// Enumeration soundness and completeness: every enumerated tiling satisfies
/// the literal `tiles` predicate and is distinct, and `1 x n` strips have
/// exactly `2^(n-1)` tilings.
pub fn check_enumeration(area_cap: u32) -> ClaimReport {
    let mut report = ClaimReport::new(ClaimId::C1EnumerationCount).param("area_cap", area_cap as u64);
    let mut steps = 0;
    for a in 1..=area_cap {
        for b in 1..=area_cap / a {
            let mut seen = HashSet::new();
            for t in enumerate_tilings(a, b).expect("area within cap") {
                steps += 1;
                let sound = literal::tiles(t.tiles(), &t.board())
                    && t.tiles().iter().all(Rect::is_valid);
                if (!sound || !seen.insert(t)) && report.passed() {
                    report = report.fail(vec![a as u64, b as u64, steps]);
                }
            }
            let strip = a == 1 || b == 1;
            if strip && seen.len() as u64 != 1 << (a * b - 1) && report.passed() {
                report = report
                    .fail(vec![a as u64, b as u64])
                    .detail(format!("count={}", seen.len()));
            }
        }
    }
    report.steps(steps)
}

/// The `i`-th seeded guillotine tiling of an odd board up to 17x11.
pub fn random_guillotine(seed: u64, i: u64) -> Tiling {
    let s = mix_seed(seed, i);
    let mut rng = ChaCha8Rng::seed_from_u64(s);
    let a = 2 * rng.random_range(0..=8) + 1;
    let b = 2 * rng.random_range(0..=5) + 1;
    guillotine(a, b, s)
}

/// The `i`-th seeded pinwheel on an odd board between 3x3 and 17x11.
pub fn random_odd_pinwheel(seed: u64, i: u64) -> Tiling {
    let s = mix_seed(seed ^ 0x5049_4E57_4845_454C, i);
    let mut rng = ChaCha8Rng::seed_from_u64(s);
    let a = 2 * rng.random_range(1..=8) + 1;
    let b = 2 * rng.random_range(1..=5) + 1;
    random_pinwheel(a, b, s).expect("sides are at least 3")
}

/// Main theorem over `guillotines` seeded guillotine tilings followed by
/// `pinwheels` seeded pinwheels. Same report triple as the exhaustive run.
pub fn check_theorem_random(
    seed: u64,
    guillotines: u64,
    pinwheels: u64,
    exec: Exec,
) -> Vec<ClaimReport> {
    let tilings: Vec<Tiling> = (0..guillotines)
        .map(|i| random_guillotine(seed, i))
        .chain((0..pinwheels).map(|i| random_odd_pinwheel(seed, i)))
        .collect();
    let verdicts = exec.map_slice(&tilings, judge);
    let mut tally = TheoremTally::new(ClaimId::C1TheoremRandom);
    for (i, (t, v)) in tilings.iter().zip(verdicts).enumerate() {
        tally.record(t, v, i as u64);
    }
    tally.finish(&[
        ("seed", seed),
        ("guillotines", guillotines),
        ("pinwheels", pinwheels),
    ])
}

/// Distance parity for every green rect inside every green rect with
/// coordinates in `0..=max`.
pub fn check_parity_lemma(max: u32, exec: Exec) -> ClaimReport {
    let greens: Vec<Rect> = all_rects_within(max)
        .into_iter()
        .filter(|r| r.classify() == Ok(RectClass::Green))
        .collect();
    let counts = exec.map_slice(&greens, |ro| {
        let mut pairs = 0u64;
        for ri in greens.iter().filter(|ri| ri.inside(ro)) {
            pairs += 1;
            let r = parity_lemma_check(ri, ro).expect("preconditions hold by construction");
            if !r.passed() {
                return Err(r.witness);
            }
        }
        Ok(pairs)
    });
    let mut report = ClaimReport::new(ClaimId::C1ParityLemma).param("max_coord", max as u64);
    let mut steps = 0;
    for c in counts {
        match c {
            Ok(n) => steps += n,
            Err(cex) => {
                if report.passed() {
                    report = report.fail(cex);
                }
            }
        }
    }
    report.steps(steps)
}
