//! The sequence `a_0 = -1`, `sum_{k=0..n} a_{n-k} / (k+1) = 0` for `n >= 1`,
//! computed exactly, together with the closed form for `a_{n+1}` obtained by
//! subtracting consecutive recurrences.

use crate::error::{Error, Result};
use crate::rational::{finite_sum, Rational};
use crate::report::{ClaimId, ClaimReport};

/// Prefix `a_0, ..., a_n` of the sequence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct A2Sequence {
    values: Vec<Rational>,
}

impl Default for A2Sequence {
    fn default() -> Self {
        Self::new()
    }
}

impl A2Sequence {
    /// The one-term prefix `[a_0] = [-1]`.
    pub fn new() -> Self {
        A2Sequence {
            values: vec![Rational::from_integer(-1)],
        }
    }

    /// Prefix up to and including `a_n`.
    pub fn up_to(n: usize) -> Self {
        let mut seq = Self::new();
        while seq.last_index() < n {
            seq.extend();
        }
        seq
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    pub fn last_index(&self) -> usize {
        self.values.len() - 1
    }

    pub fn get(&self, i: usize) -> Option<&Rational> {
        self.values.get(i)
    }

    pub fn truncated(&self, n: usize) -> A2Sequence {
        A2Sequence {
            values: self.values[..=n].to_vec(),
        }
    }

    /// Appends `a_{n+1} = -sum_{k=1..n+1} a_{n+1-k} / (k+1)`, the unique value
    /// making the recurrence hold at `n + 1`.
    pub fn extend(&mut self) -> &Rational {
        let next = self.values.len() as u64;
        let vals = &self.values;
        let tail = finite_sum(
            |k| &vals[(next - k) as usize] * &Rational::frac(1, k as i64 + 1),
            1,
            next + 1,
        );
        self.values.push(-tail);
        self.values.last().unwrap()
    }

    /// `sum_{k=0..m} a_{m-k} / (k+1)`; zero for every `1 <= m <= n`.
    pub fn residual(&self, m: usize) -> Rational {
        let vals = &self.values;
        finite_sum(
            |k| &vals[m - k as usize] * &Rational::frac(1, k as i64 + 1),
            0,
            m as u64 + 1,
        )
    }

    /// Closed form for the next term:
    /// `a_{n+1} = 1/(n+2) * sum_{k=1..n} k / ((n-k+1)(n-k+2)) * a_k`.
    ///
    /// Requires `n >= 1`; for `n = 0` the coefficient of `a_0` does not vanish.
    pub fn closed_form_next(&self) -> Result<Rational> {
        let n = self.last_index() as i64;
        if n < 1 {
            return Err(Error::PreconditionFailed(
                "closed form needs a prefix with last index >= 1".into(),
            ));
        }
        let vals = &self.values;
        let sum = finite_sum(
            |k| {
                let k = k as i64;
                let coeff = Rational::frac(k, (n - k + 1) * (n - k + 2));
                coeff * &vals[k as usize]
            },
            1,
            n as u64 + 1,
        );
        Ok(sum * Rational::frac(1, n + 2))
    }
}

/// Positivity, zero residual and closed-form agreement for `1 <= m <= n_max`.
pub fn verify(n_max: usize) -> ClaimReport {
    let report = ClaimReport::new(ClaimId::A2Positivity).param("n_max", n_max as u64);
    if n_max < 1 {
        return report.fail(vec![0]).detail("n_max must be >= 1");
    }
    let mut seq = A2Sequence::new();
    for m in 1..=n_max {
        let closed = if m >= 2 {
            Some(seq.closed_form_next().expect("prefix has index >= 1"))
        } else {
            None
        };
        let value = seq.extend().clone();
        let residual = seq.residual(m);
        if !residual.is_zero() {
            return report
                .steps(m as u64)
                .fail(vec![m as u64])
                .detail(format!("residual={residual} value={value}"));
        }
        if !value.is_positive() {
            return report
                .steps(m as u64)
                .fail(vec![m as u64])
                .detail(format!("value={value}"));
        }
        if let Some(closed) = closed {
            if closed != value {
                return report
                    .steps(m as u64)
                    .fail(vec![m as u64])
                    .detail(format!("recurrence={value} closed={closed}"));
            }
        }
    }
    let last = seq.values().last().unwrap().to_string();
    report
        .steps(n_max as u64)
        .witness(vec![n_max as u64])
        .detail(format!("last={last}"))
}

/// `a_1 = 1/2`.
pub fn check_base_case() -> ClaimReport {
    let mut seq = A2Sequence::new();
    let a1 = seq.extend().clone();
    let r = ClaimReport::new(ClaimId::A2BaseCase).steps(1).detail(format!("a1={a1}"));
    if a1 == Rational::frac(1, 2) {
        r.witness(vec![1])
    } else {
        r.fail(vec![1])
    }
}

/// Closed form equals the recurrence value for every prefix `2 <= n <= n_max`.
pub fn check_closed_form(n_max: usize) -> ClaimReport {
    let report = ClaimReport::new(ClaimId::A2ClosedForm).param("n_max", n_max as u64);
    let seq = A2Sequence::up_to(n_max + 1);
    for n in 2..=n_max {
        let closed = seq.truncated(n).closed_form_next().expect("n >= 2");
        if &closed != seq.get(n + 1).unwrap() {
            return report.steps(n as u64).fail(vec![n as u64]).detail(format!(
                "closed={closed} recurrence={}",
                seq.get(n + 1).unwrap()
            ));
        }
    }
    report.steps(n_max.saturating_sub(1) as u64)
}

/// `(n+1) * sum_{k<n+1} a_k/(n+1-k) - n * sum_{k<n} a_k/(n-k) = 0`, with both
/// inner sums computed independently.
pub fn check_subtraction(n_max: usize) -> ClaimReport {
    let report = ClaimReport::new(ClaimId::A2Subtraction).param("n_max", n_max as u64);
    let seq = A2Sequence::up_to(n_max + 1);
    let vals = seq.values();
    for n in 2..=n_max as u64 {
        let big = finite_sum(
            |k| &vals[k as usize] * &Rational::frac(1, (n + 1 - k) as i64),
            0,
            n + 1,
        );
        let small = finite_sum(
            |k| &vals[k as usize] * &Rational::frac(1, (n - k) as i64),
            0,
            n,
        );
        let diff = Rational::from_integer(n + 1) * big - Rational::from_integer(n) * small;
        if !diff.is_zero() {
            return report.fail(vec![n]).detail(format!("difference={diff}"));
        }
    }
    report.steps(n_max.saturating_sub(1) as u64)
}

/// `n/(n-i) - (n+1)/(n+1-i) = i/((n-i)(n+1-i)) > 0` for `1 <= i < n <= n_max`.
pub fn check_coefficients(n_max: u64) -> ClaimReport {
    let report = ClaimReport::new(ClaimId::A2Coefficient).param("n_max", n_max);
    let mut checked = 0;
    for n in 2..=n_max as i64 {
        for i in 1..n {
            let lhs = Rational::frac(n, n - i) - Rational::frac(n + 1, n + 1 - i);
            let rhs = Rational::frac(i, (n - i) * (n + 1 - i));
            checked += 1;
            if lhs != rhs || !lhs.is_positive() {
                return report
                    .steps(checked)
                    .fail(vec![n as u64, i as u64])
                    .detail(format!("difference={lhs} reduced={rhs}"));
            }
        }
    }
    report.steps(checked)
}
