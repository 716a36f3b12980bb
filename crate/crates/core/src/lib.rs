//! Executable checks for three olympiad problem models:
//!
//! * [`a2`]: the rational recurrence `a_0 = -1`,
//!   `sum_{k=0..n} a_{n-k}/(k+1) = 0`, computed exactly, with positivity and a
//!   closed form checked against the recurrence.
//! * [`c1`]: tilings of an odd-by-odd board by integer rectangles and the
//!   checkerboard argument that some tile has all four side distances of
//!   equal parity.
//! * [`n1`]: the sequence that takes square roots of perfect squares and
//!   adds 3 otherwise, classified by residue mod 3.
//!
//! [`suite`] runs every check and reports one [`report::ClaimReport`] per
//! claim. Sweeps run on rayon when the `parallel` feature is on.

pub mod a2;
pub mod c1;
pub mod error;
pub mod exec;
pub mod n1;
pub mod rational;
pub mod report;
pub mod sum_lemmas;
pub mod suite;

pub use error::{Error, Result};
pub use exec::Exec;
pub use rational::{finite_sum, Rational};
pub use report::{ClaimId, ClaimReport, Outcome};

/// Derives the `i`-th independent sub-seed from `seed` (splitmix64 finalizer).
pub fn mix_seed(seed: u64, i: u64) -> u64 {
    let mut z = seed ^ i.wrapping_add(1).wrapping_mul(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}
