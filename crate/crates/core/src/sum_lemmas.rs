//! Randomized checks of the finite-sum identities the recurrence argument
//! leans on: re-indexing, isolating the first term, pulling out a factor,
//! splitting a difference and pulling out a negation.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::rational::{finite_sum, Rational};
use crate::report::{ClaimId, ClaimReport};

pub const MAX_TERMS: u64 = 12;

fn random_rational(rng: &mut impl Rng) -> Rational {
    Rational::frac(rng.random_range(-60..=60), rng.random_range(1..=24))
}

fn random_table(rng: &mut impl Rng, n: u64) -> Vec<Rational> {
    (0..n).map(|_| random_rational(rng)).collect()
}

/// Runs `instances` random instances of every identity, each with between
/// 1 and 12 terms.
pub fn check_all(seed: u64, instances: u64) -> Vec<ClaimReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let ids = [
        ClaimId::SumReindex,
        ClaimId::SumRemoveZero,
        ClaimId::SumDistribLeft,
        ClaimId::SumSubtract,
        ClaimId::SumNegate,
    ];
    let mut reports: Vec<ClaimReport> = ids
        .iter()
        .map(|&id| {
            ClaimReport::new(id)
                .param("seed", seed)
                .param("instances", instances)
                .steps(instances)
        })
        .collect();

    for inst in 0..instances {
        let n = rng.random_range(1..=MAX_TERMS);
        let f = random_table(&mut rng, n);
        let g = random_table(&mut rng, n);
        let r = random_rational(&mut rng);
        let fk = |k: u64| f[k as usize].clone();
        let gk = |k: u64| g[k as usize].clone();
        let sum_f = finite_sum(fk, 0, n);

        let checks = [
            finite_sum(|i| fk(n - 1 - i), 0, n) == sum_f,
            sum_f == &f[0] + &finite_sum(fk, 1, n),
            &r * &sum_f == finite_sum(|k| &r * &f[k as usize], 0, n),
            finite_sum(|k| &f[k as usize] - &g[k as usize], 0, n)
                == &sum_f - &finite_sum(gk, 0, n),
            finite_sum(|k| -&f[k as usize], 0, n) == -&sum_f,
        ];
        for (i, ok) in checks.iter().enumerate() {
            if !ok && reports[i].passed() {
                reports[i] = reports[i].clone().fail(vec![inst, n]);
            }
        }
    }
    reports
}
