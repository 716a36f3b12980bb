//! The full claim battery, driven by one `SuiteConfig`.

use std::collections::BTreeMap;

use crate::c1::checks as c1;
use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::mix_seed;
use crate::n1::{self, Certificate, Classification};
use crate::report::{ClaimId, ClaimReport};
use crate::{a2, sum_lemmas};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum OutputFormat {
    #[default]
    Human,
    Records,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteConfig {
    pub seed: u64,
    pub a2_max: u64,
    pub sum_instances: u64,
    pub c1_rect_max: u32,
    pub c1_parity_max: u32,
    pub c1_area_cap: u32,
    pub c1_guillotines: u64,
    pub c1_pinwheels: u64,
    pub n1_max: u64,
    /// Classification budget is `n1_budget_mul * a0 + n1_budget_add`.
    pub n1_budget_mul: u64,
    pub n1_budget_add: u64,
    pub n1_step_max: u64,
    pub n1_lemma_budget: u64,
    pub n1_divergence_len: u64,
    pub n1_isqrt_samples: u64,
    pub format: OutputFormat,
    pub exec: Exec,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            seed: 2017,
            a2_max: 200,
            sum_instances: 500,
            c1_rect_max: 12,
            c1_parity_max: 9,
            c1_area_cap: 16,
            c1_guillotines: 1000,
            c1_pinwheels: 50,
            n1_max: 10_000,
            n1_budget_mul: 4,
            n1_budget_add: 1000,
            n1_step_max: 100_000,
            n1_lemma_budget: 1000,
            n1_divergence_len: 1000,
            n1_isqrt_samples: 1_000_000,
            format: OutputFormat::Human,
            exec: Exec::Parallel,
        }
    }
}

impl SuiteConfig {
    pub fn validate(&self) -> Result<()> {
        let caps = [
            ("a2 max index", self.a2_max),
            ("sum instances", self.sum_instances),
            ("c1 rect max", self.c1_rect_max as u64),
            ("c1 parity max", self.c1_parity_max as u64),
            ("c1 area cap", self.c1_area_cap as u64),
            ("c1 guillotine count", self.c1_guillotines),
            ("c1 pinwheel count", self.c1_pinwheels),
            ("n1 max a0", self.n1_max),
            ("n1 step max", self.n1_step_max),
            ("n1 lemma budget", self.n1_lemma_budget),
            ("n1 divergence length", self.n1_divergence_len),
            ("n1 isqrt samples", self.n1_isqrt_samples),
        ];
        if let Some((name, _)) = caps.iter().find(|(_, v)| *v == 0) {
            return Err(Error::PreconditionFailed(format!("{name} must be positive")));
        }
        if self.n1_max < 2 {
            return Err(Error::PreconditionFailed("n1 max a0 must be at least 2".into()));
        }
        if self.c1_area_cap > crate::c1::MAX_ENUM_AREA {
            return Err(Error::PreconditionFailed(format!(
                "c1 area cap must not exceed {}",
                crate::c1::MAX_ENUM_AREA
            )));
        }
        if self.n1_budget(2) == 0 {
            return Err(Error::PreconditionFailed("n1 budget must be positive".into()));
        }
        Ok(())
    }

    pub fn n1_budget(&self, a0: u64) -> u64 {
        self.n1_budget_mul * a0 + self.n1_budget_add
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SuiteSummary {
    pub total: usize,
    pub failed: usize,
}

impl SuiteSummary {
    pub fn passed(&self) -> bool {
        self.failed == 0
    }
}

/// Runs every check, handing each report to `sink` as soon as its group
/// finishes. Sweeps fan out according to `config.exec`; reports are always
/// delivered from the calling thread in a fixed order.
pub fn run(config: &SuiteConfig, mut sink: impl FnMut(&ClaimReport)) -> Result<SuiteSummary> {
    config.validate()?;
    let mut summary = SuiteSummary::default();
    let mut emit = |reports: Vec<ClaimReport>| {
        for r in &reports {
            summary.total += 1;
            if !r.passed() {
                summary.failed += 1;
            }
            sink(r);
        }
    };
    emit(a2_reports(config));
    emit(c1_reports(config));
    emit(n1_reports(config));
    Ok(summary)
}

/// Runs the suite and collects the reports.
pub fn run_collect(config: &SuiteConfig) -> Result<Vec<ClaimReport>> {
    let mut out = Vec::new();
    run(config, |r| out.push(r.clone()))?;
    Ok(out)
}

pub fn a2_reports(config: &SuiteConfig) -> Vec<ClaimReport> {
    let mut out = sum_lemmas::check_all(config.seed, config.sum_instances);
    out.push(a2::check_base_case());
    out.push(a2::verify(config.a2_max as usize));
    let cf_max = config.a2_max.min(100) as usize;
    out.push(a2::check_closed_form(cf_max));
    out.push(a2::check_subtraction(cf_max.min(50)));
    out.push(a2::check_coefficients(config.a2_max.min(50)));
    out
}

pub fn c1_reports(config: &SuiteConfig) -> Vec<ClaimReport> {
    let exec = config.exec;
    let mut out = vec![
        c1::check_counting(config.c1_rect_max, exec),
        c1::check_row_counting(config.c1_rect_max),
        c1::check_class_count_link(config.c1_rect_max, exec),
        c1::check_odd_board_green(15),
        c1::check_overlap_agreement(4, exec),
        c1::check_inside_agreement(4, exec),
        c1::check_enumeration(config.c1_area_cap),
    ];
    let exhaustive = c1::check_theorem_exhaustive(config.c1_area_cap, exec);
    let random = c1::check_theorem_random(
        config.seed,
        config.c1_guillotines,
        config.c1_pinwheels,
        exec,
    );
    out.extend(exhaustive);
    out.extend(random);
    out.push(c1::check_parity_lemma(config.c1_parity_max, exec));
    out
}

/// Collects per-case outcomes into one report per claim, keeping the first
/// failure in case order.
struct Tally {
    params: Vec<(&'static str, u64)>,
    entries: BTreeMap<ClaimId, ClaimReport>,
}

impl Tally {
    fn new(params: Vec<(&'static str, u64)>) -> Self {
        Tally {
            params,
            entries: BTreeMap::new(),
        }
    }

    fn add(&mut self, id: ClaimId, failure: Option<(Vec<u64>, String)>) {
        let params = &self.params;
        let entry = self.entries.entry(id).or_insert_with(|| {
            let mut r = ClaimReport::new(id);
            r.params = params.clone();
            r
        });
        entry.steps += 1;
        if let Some((cex, detail)) = failure {
            if entry.passed() {
                *entry = entry.clone().fail(cex).detail(detail);
            }
        }
    }

    fn into_reports(self, order: &[ClaimId]) -> Vec<ClaimReport> {
        let mut entries = self.entries;
        order.iter().filter_map(|id| entries.remove(id)).collect()
    }
}

type Outcomes = Vec<(ClaimId, Option<(Vec<u64>, String)>)>;

fn report_outcome(
    id: ClaimId,
    a0: u64,
    r: Result<ClaimReport>,
) -> (ClaimId, Option<(Vec<u64>, String)>) {
    match r {
        Ok(rep) if rep.passed() => (id, None),
        Ok(rep) => {
            let mut cex = vec![a0];
            cex.extend(rep.witness);
            (id, Some((cex, rep.detail.unwrap_or_default())))
        }
        Err(e) => (id, Some((vec![a0], e.to_string()))),
    }
}

/// Every per-start-value check for one `a0`.
fn n1_case(config: &SuiteConfig, a0: u64) -> Outcomes {
    let budget = config.n1_budget(a0);
    let lemma_budget = config.n1_lemma_budget;
    let mut out: Outcomes = Vec::new();
    let fail = |msg: String| Some((vec![a0], msg));

    match n1::classify(a0, budget) {
        Err(e) => out.push((ClaimId::N1Classification, fail(e.to_string()))),
        Ok(trace) => {
            let want_periodic = a0.is_multiple_of(3);
            let got_periodic = trace.classification == Classification::PeriodicMult3;
            let ok = want_periodic == got_periodic
                && trace.classification != Classification::BudgetExceeded;
            out.push((
                ClaimId::N1Classification,
                (!ok).then(|| (vec![a0], trace.summary())),
            ));
            if let Some(values) = trace.cycle_values() {
                let ok = values.into_iter().eq([3, 6, 9]);
                out.push((ClaimId::N1CycleShape, (!ok).then(|| (vec![a0], trace.summary()))));
            }
            match (a0 % 3, trace.certificate) {
                (0, Certificate::Cycle(c)) => {
                    out.push(report_outcome(
                        ClaimId::N1Claim3,
                        a0,
                        n1::check_claim3(a0, 0, budget),
                    ));
                    out.push(report_outcome(
                        ClaimId::N1Claim3Small,
                        a0,
                        n1::check_claim3a(a0, c.entry, budget),
                    ));
                }
                (_, Certificate::Mod2 { index, .. }) => {
                    if a0 % 3 == 1 {
                        out.push(report_outcome(
                            ClaimId::N1Claim4,
                            a0,
                            n1::check_claim4(a0, 0, budget),
                        ));
                        if let Some(n) = trace.values.iter().position(|&v| v % 3 == 1 && v <= 9) {
                            out.push(report_outcome(
                                ClaimId::N1Claim4Small,
                                a0,
                                n1::check_claim4a(a0, n as u64, budget),
                            ));
                        }
                    }
                    out.push(report_outcome(
                        ClaimId::N1Claim1,
                        a0,
                        n1::check_claim1(a0, index, lemma_budget),
                    ));
                }
                _ => {}
            }
        }
    }

    out.push(report_outcome(
        ClaimId::N1Mult3Propagates,
        a0,
        n1::lemma_mult3_propagates(a0, lemma_budget),
    ));
    out.push(report_outcome(
        ClaimId::N1NonMult3Propagates,
        a0,
        n1::lemma_nonmult3_propagates(a0, lemma_budget),
    ));
    out.push(report_outcome(
        ClaimId::N1AllGreaterThanOne,
        a0,
        n1::lemma_all_gt1(a0, lemma_budget),
    ));

    if a0 % 3 == 2 {
        let failure = match n1::orbit(a0, config.n1_divergence_len - 1) {
            Ok(vals) => {
                let ok = vals.windows(2).all(|w| w[0] < w[1])
                    && vals.iter().all(|&v| !n1::is_perfect_square(v));
                (!ok).then(|| (vec![a0], "not strictly increasing square-free".to_string()))
            }
            Err(e) => fail(e.to_string()),
        };
        out.push((ClaimId::N1Divergence, failure));
    }

    if a0 > 9 && a0 % 3 != 2 {
        out.push(report_outcome(ClaimId::N1Claim2, a0, n1::check_claim2(a0)));
    }
    out
}

fn n1_isqrt_report(config: &SuiteConfig) -> ClaimReport {
    const SAMPLE_MAX: u64 = 1_000_000_000_000;
    let samples = config.n1_isqrt_samples;
    let report = ClaimReport::new(ClaimId::N1Isqrt)
        .param("seed", config.seed)
        .param("samples", samples)
        .param("max", SAMPLE_MAX)
        .steps(samples);
    let brackets = |x: u64| {
        let r = n1::isqrt(x) as u128;
        r * r <= x as u128 && (x as u128) < (r + 1) * (r + 1)
    };
    let bad = config.exec.find_first_range(0..samples, |i| {
        let x = mix_seed(config.seed, i) % (SAMPLE_MAX + 1);
        (!brackets(x)).then_some(x)
    });
    match bad {
        Some(x) => report.fail(vec![x]),
        None => report,
    }
}

fn n1_step_reports(config: &SuiteConfig) -> Vec<ClaimReport> {
    let max = config.n1_step_max;
    let failures = config.exec.map_range(2..max + 1, |x| {
        let next = n1::step(x).ok();
        let image = next.is_some_and(|y| (y == n1::isqrt(x) || y == x + 3) && y > 1);
        let residue = next.is_some_and(|y| (x % 3 == 0) == (y % 3 == 0));
        (image, residue)
    });
    let first = |pick: fn(&(bool, bool)) -> bool| {
        failures
            .iter()
            .position(|f| !pick(f))
            .map(|i| i as u64 + 2)
    };
    let make = |id, bad: Option<u64>| {
        let r = ClaimReport::new(id).param("max", max).steps(max - 1);
        match bad {
            Some(x) => r.fail(vec![x]),
            None => r,
        }
    };
    vec![
        make(ClaimId::N1StepImage, first(|f| f.0)),
        make(ClaimId::N1ResiduePreservation, first(|f| f.1)),
    ]
}

fn n1_fixed_orbits() -> ClaimReport {
    let seven = n1::orbit(7, 5).ok();
    let three = n1::orbit(3, 6).ok();
    let ok = seven.as_deref() == Some(&[7, 10, 13, 16, 4, 2][..])
        && three.as_deref() == Some(&[3, 6, 9, 3, 6, 9, 3][..]);
    let r = ClaimReport::new(ClaimId::N1FixedOrbits).steps(2);
    if ok {
        r
    } else {
        r.fail(vec![7, 3])
    }
}

pub fn n1_reports(config: &SuiteConfig) -> Vec<ClaimReport> {
    let mut out = vec![
        n1_isqrt_report(config),
        n1::lemma_square_mod3_ne2(),
        n1::lemma_three_squares_mod3(),
        n1::lemma_square_mod3_zero(),
    ];
    out.extend(n1_step_reports(config));
    out.push(n1_fixed_orbits());

    let cases = config.exec.map_range(2..config.n1_max + 1, |a0| n1_case(config, a0));
    let mut tally = Tally::new(vec![
        ("a0_max", config.n1_max),
        ("budget_mul", config.n1_budget_mul),
        ("budget_add", config.n1_budget_add),
    ]);
    for outcomes in cases {
        for (id, failure) in outcomes {
            tally.add(id, failure);
        }
    }
    out.extend(tally.into_reports(&[
        ClaimId::N1Mult3Propagates,
        ClaimId::N1NonMult3Propagates,
        ClaimId::N1AllGreaterThanOne,
        ClaimId::N1Claim1,
        ClaimId::N1Claim2,
        ClaimId::N1Claim3,
        ClaimId::N1Claim3Small,
        ClaimId::N1Claim4,
        ClaimId::N1Claim4Small,
        ClaimId::N1Divergence,
        ClaimId::N1Classification,
        ClaimId::N1CycleShape,
    ]));
    out
}
