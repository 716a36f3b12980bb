//! The sequence `a_{n+1} = sqrt(a_n)` when `a_n` is a perfect square and
//! `a_n + 3` otherwise, its bounded-budget classification, and checkers for
//! the mod-3 lemmas and the four descent/divergence claims.
//!
//! Values are `u64` with checked arithmetic; overflow is an error, never a
//! wrap.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::report::{ClaimId, ClaimReport};

/// Operand bound for the scanned halves of the mod-3 lemmas.
pub const LEMMA_SCAN_MAX: u64 = 10_000;

/// Default classification budget `4 * a0 + 1000`.
pub fn default_budget(a0: u64) -> u64 {
    4 * a0 + 1000
}

/// `floor(sqrt(x))` by integer Newton iteration from above.
pub fn isqrt(x: u64) -> u64 {
    if x < 2 {
        return x;
    }
    let bits = 64 - x.leading_zeros();
    let mut r = 1u64 << bits.div_ceil(2);
    loop {
        let next = (r + x / r) / 2;
        if next >= r {
            return r;
        }
        r = next;
    }
}

pub fn is_perfect_square(x: u64) -> bool {
    let r = isqrt(x);
    r * r == x
}

/// The root `s` with `s * s = x`, when there is one.
pub fn sqrt_nat(x: u64) -> Option<u64> {
    let r = isqrt(x);
    (r * r == x).then_some(r)
}

pub fn step(x: u64) -> Result<u64> {
    match sqrt_nat(x) {
        Some(r) => Ok(r),
        None => x.checked_add(3).ok_or(Error::Overflow(x)),
    }
}

fn require_start(a0: u64) -> Result<()> {
    if a0 <= 1 {
        return Err(Error::PreconditionFailed(format!("a0 must exceed 1, got {a0}")));
    }
    Ok(())
}

/// Walks an orbit while keeping `isqrt` of the current value up to date
/// incrementally, so `+3` runs cost no square roots.
#[derive(Clone, Debug)]
pub struct OrbitWalker {
    value: u64,
    root: u64,
}

impl OrbitWalker {
    pub fn new(a0: u64) -> Self {
        OrbitWalker {
            value: a0,
            root: isqrt(a0),
        }
    }

    pub fn value(&self) -> u64 {
        self.value
    }

    pub fn is_square(&self) -> bool {
        self.root * self.root == self.value
    }

    pub fn advance(&mut self) -> Result<u64> {
        if self.is_square() {
            self.value = self.root;
            self.root = isqrt(self.value);
        } else {
            self.value = self.value.checked_add(3).ok_or(Error::Overflow(self.value))?;
            while let Some(sq) = (self.root + 1).checked_mul(self.root + 1) {
                if sq > self.value {
                    break;
                }
                self.root += 1;
            }
        }
        Ok(self.value)
    }
}

/// `[a_0, ..., a_k]`.
pub fn orbit(a0: u64, k: u64) -> Result<Vec<u64>> {
    require_start(a0)?;
    let mut w = OrbitWalker::new(a0);
    let mut out = Vec::with_capacity(k as usize + 1);
    out.push(a0);
    for _ in 0..k {
        out.push(w.advance()?);
    }
    Ok(out)
}

/// First repeated value: `entry` is the index where it first occurs and
/// `period` the distance to its second occurrence.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Cycle {
    pub entry: u64,
    pub period: u64,
}

impl fmt::Display for Cycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.entry, self.period)
    }
}

/// Brent's cycle finder restricted to the terms `a_0..=a_budget`.
pub fn detect_cycle(a0: u64, budget: u64) -> Result<Option<Cycle>> {
    require_start(a0)?;
    // If entry + period <= budget, Brent's search stops within about
    // 3 * budget steps of the fast pointer.
    let cap = 3 * budget + 3;
    let mut power = 1u64;
    let mut period = 1u64;
    let mut tortoise = a0;
    let mut hare = OrbitWalker::new(a0);
    hare.advance()?;
    let mut steps = 1u64;
    while tortoise != hare.value() {
        if steps >= cap {
            return Ok(None);
        }
        if power == period {
            tortoise = hare.value();
            power *= 2;
            period = 0;
        }
        hare.advance()?;
        period += 1;
        steps += 1;
    }

    let mut lead = OrbitWalker::new(a0);
    for _ in 0..period {
        lead.advance()?;
    }
    let mut trail = OrbitWalker::new(a0);
    let mut entry = 0u64;
    while trail.value() != lead.value() {
        trail.advance()?;
        lead.advance()?;
        entry += 1;
    }
    Ok((entry + period <= budget).then_some(Cycle { entry, period }))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Classification {
    PeriodicMult3,
    DivergentMod2,
    DivergentViaMod1,
    BudgetExceeded,
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Classification::PeriodicMult3 => "PeriodicMult3",
            Classification::DivergentMod2 => "DivergentMod2",
            Classification::DivergentViaMod1 => "DivergentViaMod1",
            Classification::BudgetExceeded => "BudgetExceeded",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Certificate {
    Cycle(Cycle),
    /// `a_index = value` with `value % 3 == 2`, and every step from `index`
    /// up to `confirmed_to` was checked to be a non-square `+3`.
    Mod2 {
        index: u64,
        value: u64,
        confirmed_to: u64,
    },
    None,
}

/// Orbit prefix plus its classification. `values` runs up to the index that
/// settled the classification: the first repeat for cycles, the residue-2
/// witness for divergent orbits, the whole budget otherwise.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitTrace {
    pub a0: u64,
    pub budget: u64,
    pub values: Vec<u64>,
    pub classification: Classification,
    pub certificate: Certificate,
}

impl OrbitTrace {
    pub fn cycle_values(&self) -> Option<BTreeSet<u64>> {
        match self.certificate {
            Certificate::Cycle(c) => Some(
                self.values[c.entry as usize..(c.entry + c.period) as usize]
                    .iter()
                    .copied()
                    .collect(),
            ),
            _ => None,
        }
    }

    pub fn summary(&self) -> String {
        match self.certificate {
            Certificate::Cycle(c) => format!("{} cycle={c}", self.classification),
            Certificate::Mod2 { index, value, .. } => {
                format!("{} m={index} value={value}", self.classification)
            }
            Certificate::None => format!("{} budget={}", self.classification, self.budget),
        }
    }
}

/// Bounded-budget classification of the orbit from `a0`.
///
/// A cycle within `a_0..=a_budget` gives `PeriodicMult3`. Otherwise the first
/// residue-2 term `a_m` (with `m < budget`) gives `DivergentMod2` for
/// `a0 % 3 == 2` or `DivergentViaMod1` for `a0 % 3 == 1`, provided every
/// step from `m` to `budget` is a non-square `+3`. Anything else is
/// `BudgetExceeded`. Outcomes contradicting the mod-3 structure (a cycle
/// off the multiples of 3, a residue-2 term from a multiple of 3, a square
/// after a residue-2 term) are reported as `TheoremViolation`.
pub fn classify(a0: u64, budget: u64) -> Result<OrbitTrace> {
    require_start(a0)?;
    if let Some(cycle) = detect_cycle(a0, budget)? {
        let values = orbit(a0, cycle.entry + cycle.period)?;
        let trace = OrbitTrace {
            a0,
            budget,
            values,
            classification: Classification::PeriodicMult3,
            certificate: Certificate::Cycle(cycle),
        };
        let cyc = trace.cycle_values().unwrap();
        if !a0.is_multiple_of(3) || cyc.iter().any(|v| !v.is_multiple_of(3)) {
            return Err(Error::TheoremViolation(format!(
                "a0={a0} cycles through {cyc:?}"
            )));
        }
        return Ok(trace);
    }

    let mut w = OrbitWalker::new(a0);
    let mut values = vec![a0];
    let mut witness: Option<(u64, u64)> = None;
    for n in 0..budget {
        let cur = w.value();
        if witness.is_none() && cur % 3 == 2 {
            if a0.is_multiple_of(3) {
                return Err(Error::TheoremViolation(format!(
                    "a0={a0} reaches {cur} at index {n}"
                )));
            }
            witness = Some((n, cur));
        }
        if witness.is_some() && w.is_square() {
            return Err(Error::TheoremViolation(format!(
                "a0={a0}: square {cur} at index {n} after a residue-2 term"
            )));
        }
        w.advance()?;
        if witness.is_none() {
            values.push(w.value());
        }
    }

    let (classification, certificate) = match witness {
        Some((index, value)) => {
            let class = if a0 % 3 == 2 {
                Classification::DivergentMod2
            } else {
                Classification::DivergentViaMod1
            };
            (
                class,
                Certificate::Mod2 {
                    index,
                    value,
                    confirmed_to: budget,
                },
            )
        }
        None => (Classification::BudgetExceeded, Certificate::None),
    };
    Ok(OrbitTrace {
        a0,
        budget,
        values,
        classification,
        certificate,
    })
}

fn orbit_value(a0: u64, n: u64) -> Result<u64> {
    let mut w = OrbitWalker::new(a0);
    for _ in 0..n {
        w.advance()?;
    }
    Ok(w.value())
}

/// From a residue-2 term `a_n`: every `a_m` with `n <= m <= n + window` is a
/// non-square of residue 2 and is followed by `a_m + 3`.
pub fn check_claim1(a0: u64, n: u64, window: u64) -> Result<ClaimReport> {
    require_start(a0)?;
    let mut w = OrbitWalker::new(a0);
    for _ in 0..n {
        w.advance()?;
    }
    if w.value() % 3 != 2 {
        return Err(Error::PreconditionFailed(format!(
            "a_{n} = {} is not 2 mod 3",
            w.value()
        )));
    }
    let report = ClaimReport::new(ClaimId::N1Claim1)
        .param("a0", a0)
        .param("n", n)
        .param("window", window);
    for m in n..=n + window {
        let cur = w.value();
        let square = w.is_square();
        let next = w.advance()?;
        if square || cur % 3 != 2 || next != cur + 3 {
            return Ok(report.steps(m - n + 1).fail(vec![m, cur, next]));
        }
    }
    Ok(report.steps(window + 1).witness(vec![n]))
}

/// Descent certificate for `x > 9` with `x % 3 != 2`.
///
/// With `t` the largest integer such that `t^2 < x`, the first square reached
/// from `x` is `(t + i)^2` for some `i` in `1..=3`, and the term after it,
/// `t + i`, is below `t^2 < x`. The number of steps to that smaller term is
/// also held to `2 * isqrt(x) + 6`.
///
/// Witness on success: `[t, i, square, steps, smaller value]`.
pub fn check_claim2(x: u64) -> Result<ClaimReport> {
    if x % 3 == 2 || x <= 9 {
        return Err(Error::PreconditionFailed(format!(
            "claim 2 needs x > 9 and x % 3 != 2, got {x}"
        )));
    }
    let t = isqrt(x - 1);
    let report = ClaimReport::new(ClaimId::N1Claim2).param("x", x);
    if t < 3 || t * t >= x || (t + 1) * (t + 1) < x {
        return Ok(report.fail(vec![x, t]).detail("bad t"));
    }
    let limit = (t + 3) * (t + 3);
    let bound = 2 * isqrt(x) + 6;
    let mut w = OrbitWalker::new(x);
    let mut k = 0u64;
    while !w.is_square() {
        if w.value() > limit {
            return Ok(report.steps(k).fail(vec![x, t, w.value()]).detail("overshot (t+3)^2"));
        }
        w.advance()?;
        k += 1;
    }
    let square = w.value();
    let root = isqrt(square);
    let i = root - t;
    let next = w.advance()?;
    let steps = k + 1;
    let ok = (1..=3).contains(&i)
        && next == root
        && next <= t + 3
        && t + 3 < t * t
        && t * t < x
        && steps <= bound;
    let report = report.steps(steps);
    Ok(if ok {
        report.witness(vec![t, i, square, steps, next])
    } else {
        report.fail(vec![x, t, square, steps, next])
    })
}

fn search_after<P>(
    id: ClaimId,
    a0: u64,
    n: u64,
    budget: u64,
    pre: P,
    pre_msg: &str,
    target: impl Fn(u64) -> bool,
) -> Result<ClaimReport>
where
    P: Fn(u64) -> bool,
{
    require_start(a0)?;
    let mut w = OrbitWalker::new(a0);
    for _ in 0..n {
        w.advance()?;
    }
    let start = w.value();
    if !pre(start) {
        return Err(Error::PreconditionFailed(format!("a_{n} = {start}: {pre_msg}")));
    }
    let report = ClaimReport::new(id)
        .param("a0", a0)
        .param("n", n)
        .param("budget", budget);
    let mut tail = std::collections::VecDeque::with_capacity(8);
    for d in 1..=budget {
        let v = w.advance()?;
        if target(v) {
            return Ok(report.steps(d).witness(vec![n + d, v]));
        }
        if tail.len() == 8 {
            tail.pop_front();
        }
        tail.push_back(v);
    }
    Ok(report.steps(budget).fail(tail.into_iter().collect()))
}

/// From `a_n` divisible by 3, some later term equals 3.
pub fn check_claim3(a0: u64, n: u64, budget: u64) -> Result<ClaimReport> {
    search_after(
        ClaimId::N1Claim3,
        a0,
        n,
        budget,
        |v| v % 3 == 0,
        "not a multiple of 3",
        |v| v == 3,
    )
}

/// Small case of claim 3: `a_n` divisible by 3 and at most 9.
pub fn check_claim3a(a0: u64, n: u64, budget: u64) -> Result<ClaimReport> {
    search_after(
        ClaimId::N1Claim3Small,
        a0,
        n,
        budget,
        |v| v % 3 == 0 && v <= 9,
        "not a multiple of 3 at most 9",
        |v| v == 3,
    )
}

/// From `a_n` with residue 1, some later term has residue 2.
pub fn check_claim4(a0: u64, n: u64, budget: u64) -> Result<ClaimReport> {
    search_after(
        ClaimId::N1Claim4,
        a0,
        n,
        budget,
        |v| v % 3 == 1,
        "not 1 mod 3",
        |v| v % 3 == 2,
    )
}

pub fn check_claim4a(a0: u64, n: u64, budget: u64) -> Result<ClaimReport> {
    search_after(
        ClaimId::N1Claim4Small,
        a0,
        n,
        budget,
        |v| v % 3 == 1 && v <= 9,
        "not 1 mod 3 and at most 9",
        |v| v % 3 == 2,
    )
}

fn residue_lemma(id: ClaimId, holds: impl Fn(u64) -> bool) -> ClaimReport {
    let report = ClaimReport::new(id).param("scan_max", LEMMA_SCAN_MAX);
    // Residues 0, 1, 2 cover every class; the scan repeats the check on
    // actual operands.
    match (0..3).chain(0..=LEMMA_SCAN_MAX).find(|&s| !holds(s)) {
        Some(s) => report.fail(vec![s]),
        None => report.steps(3 + LEMMA_SCAN_MAX + 1),
    }
}

/// `s^2 mod 3 != 2`.
pub fn lemma_square_mod3_ne2() -> ClaimReport {
    residue_lemma(ClaimId::N1SquareMod3, |s| (s * s) % 3 != 2)
}

/// `{(t+1)^2, (t+2)^2, (t+3)^2} mod 3 = {0, 1}`.
pub fn lemma_three_squares_mod3() -> ClaimReport {
    residue_lemma(ClaimId::N1ThreeSquaresMod3, |t| {
        let set: BTreeSet<u64> = (1..=3).map(|i| ((t + i) * (t + i)) % 3).collect();
        set == BTreeSet::from([0, 1])
    })
}

/// `x^2 mod 3 = 0` exactly when `x mod 3 = 0`.
pub fn lemma_square_mod3_zero() -> ClaimReport {
    residue_lemma(ClaimId::N1SquareMod3Zero, |x| {
        ((x * x) % 3 == 0) == (x % 3 == 0)
    })
}

fn orbit_lemma(
    id: ClaimId,
    a0: u64,
    budget: u64,
    mut bad: impl FnMut(u64, u64) -> bool,
) -> Result<ClaimReport> {
    require_start(a0)?;
    let report = ClaimReport::new(id).param("a0", a0).param("budget", budget);
    let mut w = OrbitWalker::new(a0);
    for n in 0..=budget {
        if bad(n, w.value()) {
            return Ok(report.steps(n).fail(vec![a0, n, w.value()]));
        }
        if n < budget {
            w.advance()?;
        }
    }
    Ok(report.steps(budget))
}

/// Once a term is a multiple of 3, every later term is too.
pub fn lemma_mult3_propagates(a0: u64, budget: u64) -> Result<ClaimReport> {
    let mut seen = false;
    orbit_lemma(ClaimId::N1Mult3Propagates, a0, budget, move |_, v| {
        let bad = seen && v % 3 != 0;
        seen |= v % 3 == 0;
        bad
    })
}

/// Once a term is not a multiple of 3, no later term is.
pub fn lemma_nonmult3_propagates(a0: u64, budget: u64) -> Result<ClaimReport> {
    let mut seen = false;
    orbit_lemma(ClaimId::N1NonMult3Propagates, a0, budget, move |_, v| {
        let bad = seen && v % 3 == 0;
        seen |= v % 3 != 0;
        bad
    })
}

pub fn lemma_all_gt1(a0: u64, budget: u64) -> Result<ClaimReport> {
    orbit_lemma(ClaimId::N1AllGreaterThanOne, a0, budget, |_, v| v <= 1)
}

/// Claims 3/4 dispatched on the residue of `a_n`; residue 2 runs claim 1.
pub fn check_claim_for(a0: u64, n: u64, budget: u64) -> Result<ClaimReport> {
    match orbit_value(a0, n)? % 3 {
        0 => check_claim3(a0, n, budget),
        1 => check_claim4(a0, n, budget),
        _ => check_claim1(a0, n, budget),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use std::collections::HashMap;

    /// Naive first-repeat oracle using a value -> first index map.
    fn naive_cycle(a0: u64, budget: u64) -> Option<Cycle> {
        let mut seen = HashMap::new();
        let mut v = a0;
        for n in 0..=budget {
            if let Some(&first) = seen.get(&v) {
                return Some(Cycle {
                    entry: first,
                    period: n - first,
                });
            }
            seen.insert(v, n);
            v = step(v).unwrap();
        }
        None
    }

    #[test]
    fn isqrt_examples() {
        assert_eq!(isqrt(16), 4);
        assert!(is_perfect_square(16));
        assert_eq!(isqrt(2), 1);
        assert!(!is_perfect_square(2));
        assert_eq!(isqrt(0), 0);
        assert_eq!(isqrt(1), 1);
        assert_eq!(isqrt(u64::MAX), u32::MAX as u64);
        assert_eq!(sqrt_nat(49), Some(7));
        assert_eq!(sqrt_nat(50), None);
    }

    #[test]
    fn isqrt_near_squares() {
        for r in (1u64..2_000_000).step_by(997).chain([u32::MAX as u64]) {
            let sq = r * r;
            assert_eq!(isqrt(sq), r);
            assert_eq!(isqrt(sq - 1), r - 1);
            if let Some(next) = sq.checked_add(2 * r) {
                assert_eq!(isqrt(next), r);
            }
        }
    }

    #[test]
    fn step_examples() {
        assert_eq!(step(16).unwrap(), 4);
        assert_eq!(step(4).unwrap(), 2);
        assert_eq!(step(5).unwrap(), 8);
        assert_eq!(step(u64::MAX - 1), Err(Error::Overflow(u64::MAX - 1)));
    }

    #[test]
    fn orbit_examples() {
        assert_eq!(orbit(3, 6).unwrap(), vec![3, 6, 9, 3, 6, 9, 3]);
        assert_eq!(orbit(7, 5).unwrap(), vec![7, 10, 13, 16, 4, 2]);
        assert_eq!(orbit(5, 4).unwrap(), vec![5, 8, 11, 14, 17]);
        assert!(matches!(orbit(1, 3), Err(Error::PreconditionFailed(_))));
        assert!(matches!(orbit(0, 3), Err(Error::PreconditionFailed(_))));
    }

    #[test]
    fn cycle_examples() {
        let c = |a0, entry, period| (a0, Some(Cycle { entry, period }));
        for (a0, want) in [c(3, 0, 3), c(6, 0, 3)] {
            assert_eq!(detect_cycle(a0, 10).unwrap(), want);
        }
        assert_eq!(detect_cycle(5, 1000).unwrap(), None);
        // 12 reaches 6 at index 9 and returns to it at index 12.
        assert_eq!(
            detect_cycle(12, 100).unwrap(),
            Some(Cycle { entry: 9, period: 3 })
        );
        assert_eq!(detect_cycle(12, 11).unwrap(), None);
        assert_eq!(detect_cycle(12, 12).unwrap(), naive_cycle(12, 12));
    }

    #[test]
    fn classify_examples() {
        let t = classify(3, 100).unwrap();
        assert_eq!(t.classification, Classification::PeriodicMult3);
        assert_eq!(t.certificate, Certificate::Cycle(Cycle { entry: 0, period: 3 }));
        assert_eq!(t.summary(), "PeriodicMult3 cycle=(0,3)");

        let t = classify(5, 100).unwrap();
        assert_eq!(t.classification, Classification::DivergentMod2);
        assert!(matches!(t.certificate, Certificate::Mod2 { index: 0, value: 5, .. }));

        let t = classify(4, 100).unwrap();
        assert_eq!(t.classification, Classification::DivergentViaMod1);
        assert!(matches!(t.certificate, Certificate::Mod2 { index: 1, value: 2, .. }));
        assert_eq!(t.values, vec![4, 2]);

        assert_eq!(
            classify(3, 1).unwrap().classification,
            Classification::BudgetExceeded
        );
        assert!(matches!(classify(1, 10), Err(Error::PreconditionFailed(_))));
    }

    #[test]
    fn claim1_examples() {
        assert!(check_claim1(5, 0, 500).unwrap().passed());
        assert!(check_claim1(7, 5, 500).unwrap().passed());
        assert!(matches!(
            check_claim1(3, 0, 10),
            Err(Error::PreconditionFailed(_))
        ));
    }

    #[test]
    fn claim2_examples() {
        let r = check_claim2(12).unwrap();
        assert!(r.passed());
        assert_eq!(r.witness, vec![3, 3, 36, 9, 6]);
        let r = check_claim2(10).unwrap();
        assert!(r.passed());
        assert_eq!(r.witness, vec![3, 1, 16, 3, 4]);
        assert!(matches!(check_claim2(11), Err(Error::PreconditionFailed(_))));
        assert!(matches!(check_claim2(9), Err(Error::PreconditionFailed(_))));
    }

    #[test]
    fn claim3_examples() {
        let r = check_claim3(6, 0, 10).unwrap();
        assert_eq!((r.passed(), r.steps), (true, 2));
        let r = check_claim3a(9, 0, 10).unwrap();
        assert_eq!((r.passed(), r.steps), (true, 1));
        let r = check_claim3(12, 0, 100).unwrap();
        assert_eq!((r.passed(), r.steps), (true, 11));
        assert!(check_claim3a(12, 0, 100).is_err());
        assert!(check_claim3(4, 0, 100).is_err());
        let starved = check_claim3(12, 0, 5).unwrap();
        assert!(!starved.passed());
        assert_eq!(starved.witness, vec![15, 18, 21, 24, 27]);
    }

    #[test]
    fn claim4_examples() {
        let r = check_claim4a(4, 0, 10).unwrap();
        assert_eq!((r.passed(), r.steps), (true, 1));
        let r = check_claim4a(7, 0, 10).unwrap();
        assert_eq!((r.passed(), r.steps), (true, 5));
        let r = check_claim4(10, 0, 10).unwrap();
        assert_eq!((r.passed(), r.steps), (true, 4));
        assert!(check_claim4(6, 0, 10).is_err());
    }

    #[test]
    fn residue_lemmas() {
        assert!(lemma_square_mod3_ne2().passed());
        assert!(lemma_three_squares_mod3().passed());
        assert!(lemma_square_mod3_zero().passed());
        let set: BTreeSet<u64> = [16u64, 25, 36].iter().map(|v| v % 3).collect();
        assert_eq!(set, BTreeSet::from([0, 1]));
    }

    #[test]
    fn orbit_lemmas() {
        assert!(lemma_mult3_propagates(6, 100).unwrap().passed());
        assert!(lemma_nonmult3_propagates(7, 100).unwrap().passed());
        assert!(lemma_all_gt1(4, 100).unwrap().passed());
        assert!(lemma_all_gt1(1, 100).is_err());
    }

    #[test]
    fn dispatch_by_residue() {
        assert_eq!(check_claim_for(12, 0, 100).unwrap().id, ClaimId::N1Claim3);
        assert_eq!(check_claim_for(7, 0, 100).unwrap().id, ClaimId::N1Claim4);
        assert_eq!(check_claim_for(7, 5, 100).unwrap().id, ClaimId::N1Claim1);
    }

    proptest! {
        #[test]
        fn isqrt_brackets(x in 0u64..=1_000_000_000_000) {
            let r = isqrt(x);
            prop_assert!(r * r <= x);
            prop_assert!(x < (r + 1) * (r + 1));
        }

        #[test]
        fn isqrt_brackets_full_range(x: u64) {
            let r = isqrt(x) as u128;
            prop_assert!(r * r <= x as u128);
            prop_assert!((x as u128) < (r + 1) * (r + 1));
        }

        #[test]
        fn walker_matches_step(a0 in 2u64..100_000, k in 0usize..400) {
            let mut w = OrbitWalker::new(a0);
            let mut v = a0;
            for _ in 0..k {
                v = step(v).unwrap();
                prop_assert_eq!(w.advance().unwrap(), v);
                prop_assert_eq!(w.is_square(), is_perfect_square(v));
            }
        }

        #[test]
        fn brent_matches_naive(a0 in 2u64..3000, budget in 1u64..400) {
            prop_assert_eq!(detect_cycle(a0, budget).unwrap(), naive_cycle(a0, budget));
        }
    }
}
