//! Exact rationals over arbitrary-precision integers, plus the finite-sum
//! helper every sequence computation goes through.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// A canonical rational number: positive denominator, numerator and
/// denominator coprime, zero stored as `0/1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Rational(BigRational);

impl Rational {
    pub fn new(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Result<Self> {
        let den = den.into();
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        // `Ratio::new` reduces and moves the sign onto the numerator.
        Ok(Rational(BigRational::new(num.into(), den)))
    }

    pub fn from_integer(n: impl Into<BigInt>) -> Self {
        Rational(BigRational::from_integer(n.into()))
    }

    /// `num / den` for small operands whose denominator is known non-zero.
    ///
    /// Panics on a zero denominator.
    pub fn frac(num: i64, den: i64) -> Self {
        Self::new(num, den).expect("literal fraction with zero denominator")
    }

    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn checked_div(&self, rhs: &Rational) -> Result<Rational> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Rational(&self.0 / &rhs.0))
    }

    pub fn recip(&self) -> Result<Rational> {
        Rational::one().checked_div(self)
    }

    /// Total order consistent with the reals.
    pub fn cmp_value(&self, other: &Rational) -> Ordering {
        self.0.cmp(&other.0)
    }
}

impl fmt::Display for Rational {
    /// Always `num/den`, including integers (`-1/1`).
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.0.numer(), self.0.denom())
    }
}

impl std::str::FromStr for Rational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse {
            line: 1,
            msg: format!("not a rational: {s:?}"),
        };
        let (n, d) = s.split_once('/').unwrap_or((s, "1"));
        let n: BigInt = n.trim().parse().map_err(|_| bad())?;
        let d: BigInt = d.trim().parse().map_err(|_| bad())?;
        Rational::new(n, d)
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident) => {
        impl $tr<&Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational((&self.0).$method(&rhs.0))
            }
        }

        impl $tr<Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational(self.0.$method(rhs.0))
            }
        }

        impl $tr<&Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational(self.0.$method(&rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}

impl std::iter::Sum for Rational {
    /// Accumulates over the running lcm of the denominators and reduces
    /// once at the end.
    fn sum<I: Iterator<Item = Rational>>(iter: I) -> Rational {
        let mut num = BigInt::zero();
        let mut den = BigInt::one();
        for x in iter {
            let (n, d) = (x.0.numer(), x.0.denom());
            if *d == den {
                num += n;
            } else {
                let g = den.gcd(d);
                let scale_acc = d / &g;
                num = num * &scale_acc + n * (&den / &g);
                den *= scale_acc;
            }
        }
        Rational(BigRational::new(num, den))
    }
}

/// Exact sum of `f(lo), ..., f(hi - 1)`.
///
/// An empty range (`lo >= hi`) sums to `0/1`.
pub fn finite_sum<F>(f: F, lo: u64, hi: u64) -> Rational
where
    F: Fn(u64) -> Rational,
{
    (lo..hi).map(f).sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn make_canonicalizes() {
        let r = Rational::new(1, 2).unwrap();
        assert_eq!(r.to_string(), "1/2");
        assert_eq!(Rational::new(2, -4).unwrap().to_string(), "-1/2");
        assert_eq!(Rational::new(0, 7).unwrap().to_string(), "0/1");
        assert_eq!(Rational::new(0, -7).unwrap(), Rational::zero());
        assert_eq!(Rational::from_integer(-1).to_string(), "-1/1");
    }

    #[test]
    fn make_rejects_zero_denominator() {
        assert_eq!(Rational::new(3, 0), Err(Error::ZeroDenominator));
    }

    #[test]
    fn arithmetic_examples() {
        let sum = Rational::frac(1, 4) + Rational::frac(-1, 3);
        assert_eq!(sum, Rational::frac(-1, 12));
        assert_eq!(Rational::frac(1, 2) * Rational::zero(), Rational::zero());
        let q = Rational::frac(1, 6)
            .checked_div(&Rational::frac(1, 6))
            .unwrap();
        assert_eq!(q, Rational::one());
        assert_eq!(
            Rational::one().checked_div(&Rational::zero()),
            Err(Error::DivisionByZero)
        );
        assert_eq!(
            Rational::frac(-1, 3).cmp_value(&Rational::frac(-1, 4)),
            Ordering::Less
        );
    }

    #[test]
    fn parse_display_round_trip() {
        for s in ["1/2", "-1/1", "0/1", "19/720"] {
            assert_eq!(s.parse::<Rational>().unwrap().to_string(), s);
        }
        assert_eq!("6/-4".parse::<Rational>().unwrap().to_string(), "-3/2");
        assert!("1/0".parse::<Rational>().is_err());
        assert!("x".parse::<Rational>().is_err());
    }

    #[test]
    fn sum_examples() {
        assert_eq!(finite_sum(|_| Rational::one(), 0, 3), Rational::frac(3, 1));
        assert_eq!(finite_sum(|_| Rational::one(), 5, 5), Rational::zero());
        let harmonic = finite_sum(|k| Rational::frac(1, k as i64 + 1), 0, 2);
        assert_eq!(harmonic, Rational::frac(3, 2));
    }

    fn arb_rational() -> impl Strategy<Value = Rational> {
        (-1000i64..=1000, 1i64..=500).prop_map(|(n, d)| Rational::frac(n, d))
    }

    proptest! {
        #[test]
        fn canonical_form(n in -10_000i64..10_000, d in -10_000i64..10_000) {
            prop_assume!(d != 0);
            let r = Rational::new(n, d).unwrap();
            prop_assert!(r.denom().is_positive());
            prop_assert!(num_integer::Integer::gcd(r.numer(), r.denom()).is_one());
            // Cross-multiplication equality with the unreduced input.
            prop_assert_eq!(r.numer() * BigInt::from(d), BigInt::from(n) * r.denom());
        }

        #[test]
        fn field_laws(a in arb_rational(), b in arb_rational(), c in arb_rational()) {
            prop_assert_eq!((&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!((&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert!((&a + &(-&a)).is_zero());
            if !a.is_zero() {
                prop_assert_eq!(&a * &a.recip().unwrap(), Rational::one());
            }
        }

        #[test]
        fn order_matches_cross_multiplication(a in arb_rational(), b in arb_rational()) {
            let lhs = a.numer() * b.denom();
            let rhs = b.numer() * a.denom();
            prop_assert_eq!(a.cmp_value(&b), lhs.cmp(&rhs));
        }
    }
}
