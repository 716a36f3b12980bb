//! Machine-readable outcome records for individual claim checks.
//!
//! Record line layout:
//!
//! ```text
//! CLAIM <id> <key>=<natural>... outcome=<pass|fail> steps=<k> witness=<n,n,...|-> [detail=<token>]
//! ```
//!
//! Every field after the id is a whitespace-free `key=value` token.

use std::fmt;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ClaimId {
    // exact sums and the recurrence sequence
    SumReindex,
    SumRemoveZero,
    SumDistribLeft,
    SumSubtract,
    SumNegate,
    A2BaseCase,
    A2Positivity,
    A2ClosedForm,
    A2Subtraction,
    A2Coefficient,
    // rectangle tilings
    C1Counting,
    C1RowCounting,
    C1ClassCountLink,
    C1OddBoardGreen,
    C1OverlapAgreement,
    C1InsideAgreement,
    C1EnumerationCount,
    C1DisjointUnion,
    C1Finiteness,
    C1TheoremExhaustive,
    C1TheoremRandom,
    C1ParityLemma,
    // sqrt-or-plus-three sequence
    N1Isqrt,
    N1SquareMod3,
    N1ThreeSquaresMod3,
    N1SquareMod3Zero,
    N1Mult3Propagates,
    N1NonMult3Propagates,
    N1AllGreaterThanOne,
    N1StepImage,
    N1ResiduePreservation,
    N1FixedOrbits,
    N1Claim1,
    N1Claim2,
    N1Claim3,
    N1Claim3Small,
    N1Claim4,
    N1Claim4Small,
    N1Divergence,
    N1Classification,
    N1CycleShape,
}

impl ClaimId {
    pub const ALL: &'static [ClaimId] = &[
        ClaimId::SumReindex,
        ClaimId::SumRemoveZero,
        ClaimId::SumDistribLeft,
        ClaimId::SumSubtract,
        ClaimId::SumNegate,
        ClaimId::A2BaseCase,
        ClaimId::A2Positivity,
        ClaimId::A2ClosedForm,
        ClaimId::A2Subtraction,
        ClaimId::A2Coefficient,
        ClaimId::C1Counting,
        ClaimId::C1RowCounting,
        ClaimId::C1ClassCountLink,
        ClaimId::C1OddBoardGreen,
        ClaimId::C1OverlapAgreement,
        ClaimId::C1InsideAgreement,
        ClaimId::C1EnumerationCount,
        ClaimId::C1DisjointUnion,
        ClaimId::C1Finiteness,
        ClaimId::C1TheoremExhaustive,
        ClaimId::C1TheoremRandom,
        ClaimId::C1ParityLemma,
        ClaimId::N1Isqrt,
        ClaimId::N1SquareMod3,
        ClaimId::N1ThreeSquaresMod3,
        ClaimId::N1SquareMod3Zero,
        ClaimId::N1Mult3Propagates,
        ClaimId::N1NonMult3Propagates,
        ClaimId::N1AllGreaterThanOne,
        ClaimId::N1StepImage,
        ClaimId::N1ResiduePreservation,
        ClaimId::N1FixedOrbits,
        ClaimId::N1Claim1,
        ClaimId::N1Claim2,
        ClaimId::N1Claim3,
        ClaimId::N1Claim3Small,
        ClaimId::N1Claim4,
        ClaimId::N1Claim4Small,
        ClaimId::N1Divergence,
        ClaimId::N1Classification,
        ClaimId::N1CycleShape,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            ClaimId::SumReindex => "sum-reindex",
            ClaimId::SumRemoveZero => "sum-remove-zero",
            ClaimId::SumDistribLeft => "sum-distrib-left",
            ClaimId::SumSubtract => "sum-subtract",
            ClaimId::SumNegate => "sum-negate",
            ClaimId::A2BaseCase => "a2-base-case",
            ClaimId::A2Positivity => "a2-positivity",
            ClaimId::A2ClosedForm => "a2-closed-form",
            ClaimId::A2Subtraction => "a2-subtraction",
            ClaimId::A2Coefficient => "a2-coefficient",
            ClaimId::C1Counting => "c1-counting",
            ClaimId::C1RowCounting => "c1-row-counting",
            ClaimId::C1ClassCountLink => "c1-class-count-link",
            ClaimId::C1OddBoardGreen => "c1-odd-board-green",
            ClaimId::C1OverlapAgreement => "c1-overlap-agreement",
            ClaimId::C1InsideAgreement => "c1-inside-agreement",
            ClaimId::C1EnumerationCount => "c1-enumeration-count",
            ClaimId::C1DisjointUnion => "c1-disjoint-union",
            ClaimId::C1Finiteness => "c1-finiteness",
            ClaimId::C1TheoremExhaustive => "c1-theorem-exhaustive",
            ClaimId::C1TheoremRandom => "c1-theorem-random",
            ClaimId::C1ParityLemma => "c1-parity-lemma",
            ClaimId::N1Isqrt => "n1-isqrt",
            ClaimId::N1SquareMod3 => "n1-square-mod3",
            ClaimId::N1ThreeSquaresMod3 => "n1-three-squares-mod3",
            ClaimId::N1SquareMod3Zero => "n1-square-mod3-zero",
            ClaimId::N1Mult3Propagates => "n1-mult3-propagates",
            ClaimId::N1NonMult3Propagates => "n1-nonmult3-propagates",
            ClaimId::N1AllGreaterThanOne => "n1-all-gt1",
            ClaimId::N1StepImage => "n1-step-image",
            ClaimId::N1ResiduePreservation => "n1-residue-preservation",
            ClaimId::N1FixedOrbits => "n1-fixed-orbits",
            ClaimId::N1Claim1 => "n1-claim1",
            ClaimId::N1Claim2 => "n1-claim2",
            ClaimId::N1Claim3 => "n1-claim3",
            ClaimId::N1Claim3Small => "n1-claim3a",
            ClaimId::N1Claim4 => "n1-claim4",
            ClaimId::N1Claim4Small => "n1-claim4a",
            ClaimId::N1Divergence => "n1-divergence",
            ClaimId::N1Classification => "n1-classification",
            ClaimId::N1CycleShape => "n1-cycle-shape",
        }
    }
}

impl fmt::Display for ClaimId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl std::str::FromStr for ClaimId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ClaimId::ALL
            .iter()
            .copied()
            .find(|id| id.as_str() == s)
            .ok_or_else(|| Error::Parse {
                line: 1,
                msg: format!("unknown claim id {s:?}"),
            })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    Fail,
}

impl Outcome {
    pub fn from_bool(pass: bool) -> Self {
        if pass {
            Outcome::Pass
        } else {
            Outcome::Fail
        }
    }
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Outcome::Pass => "pass",
            Outcome::Fail => "fail",
        })
    }
}

/// Outcome of one claim check. On failure `witness` holds a counterexample
/// that can be re-checked on its own (an index, a starting value, or rect
/// coordinates, depending on the claim).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClaimReport {
    pub id: ClaimId,
    pub params: Vec<(&'static str, u64)>,
    pub outcome: Outcome,
    pub witness: Vec<u64>,
    pub steps: u64,
    pub detail: Option<String>,
}

impl ClaimReport {
    pub fn new(id: ClaimId) -> Self {
        ClaimReport {
            id,
            params: Vec::new(),
            outcome: Outcome::Pass,
            witness: Vec::new(),
            steps: 0,
            detail: None,
        }
    }

    pub fn param(mut self, key: &'static str, value: u64) -> Self {
        self.params.push((key, value));
        self
    }

    pub fn steps(mut self, steps: u64) -> Self {
        self.steps = steps;
        self
    }

    pub fn witness(mut self, witness: Vec<u64>) -> Self {
        self.witness = witness;
        self
    }

    pub fn detail(mut self, detail: impl Into<String>) -> Self {
        self.detail = Some(detail.into());
        self
    }

    pub fn fail(mut self, counterexample: Vec<u64>) -> Self {
        self.outcome = Outcome::Fail;
        self.witness = counterexample;
        self
    }

    pub fn passed(&self) -> bool {
        self.outcome == Outcome::Pass
    }

    pub fn to_record(&self) -> String {
        let mut line = format!("CLAIM {}", self.id);
        for (k, v) in &self.params {
            line.push_str(&format!(" {k}={v}"));
        }
        line.push_str(&format!(" outcome={} steps={}", self.outcome, self.steps));
        line.push_str(" witness=");
        if self.witness.is_empty() {
            line.push('-');
        } else {
            let w: Vec<String> = self.witness.iter().map(u64::to_string).collect();
            line.push_str(&w.join(","));
        }
        if let Some(detail) = &self.detail {
            let token: String = detail
                .chars()
                .map(|c| if c.is_whitespace() { '_' } else { c })
                .collect();
            line.push_str(&format!(" detail={token}"));
        }
        line
    }
}

impl fmt::Display for ClaimReport {
    /// Human-readable form.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mark = if self.passed() { "ok  " } else { "FAIL" };
        write!(f, "[{mark}] {:<26}", self.id.as_str())?;
        let params: Vec<String> = self.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
        if !params.is_empty() {
            write!(f, " {}", params.join(" "))?;
        }
        write!(f, " steps={}", self.steps)?;
        if !self.witness.is_empty() {
            write!(f, " witness={:?}", self.witness)?;
        }
        if let Some(d) = &self.detail {
            write!(f, " ({d})")?;
        }
        Ok(())
    }
}

/// A record line split into its id and `key=value` fields.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RecordLine {
    pub id: ClaimId,
    pub fields: Vec<(String, String)>,
}

impl RecordLine {
    pub fn get(&self, key: &str) -> Option<&str> {
        self.fields
            .iter()
            .find(|(k, _)| k == key)
            .map(|(_, v)| v.as_str())
    }

    pub fn outcome(&self) -> Outcome {
        match self.get("outcome") {
            Some("pass") => Outcome::Pass,
            _ => Outcome::Fail,
        }
    }
}

/// Parses one record line, enforcing the grammar in the module docs.
pub fn parse_record(line: &str) -> Result<RecordLine> {
    let err = |msg: String| Error::Parse { line: 1, msg };
    let mut tokens = line.split_whitespace();
    if tokens.next() != Some("CLAIM") {
        return Err(err("record must start with CLAIM".into()));
    }
    let id: ClaimId = tokens
        .next()
        .ok_or_else(|| err("missing claim id".into()))?
        .parse()?;
    let mut fields = Vec::new();
    for tok in tokens {
        let (k, v) = tok
            .split_once('=')
            .ok_or_else(|| err(format!("field {tok:?} is not key=value")))?;
        if k.is_empty() || v.is_empty() {
            return Err(err(format!("empty key or value in {tok:?}")));
        }
        fields.push((k.to_string(), v.to_string()));
    }
    let rec = RecordLine { id, fields };
    match rec.get("outcome") {
        Some("pass") | Some("fail") => {}
        other => return Err(err(format!("bad outcome {other:?}"))),
    }
    match rec.get("steps") {
        Some(s) if s.parse::<u64>().is_ok() => {}
        other => return Err(err(format!("bad steps {other:?}"))),
    }
    match rec.get("witness") {
        Some("-") => {}
        Some(w) if w.split(',').all(|n| n.parse::<u64>().is_ok()) => {}
        other => return Err(err(format!("bad witness {other:?}"))),
    }
    Ok(rec)
}
