//! Scalar backends.
//!
//! Everything in this crate is generic over one scalar type. Two backends are
//! provided: [`f64`] for numeric work (quadrature, transcendental functions,
//! plotting) and [`Rat`] (arbitrary-precision rationals) for the identity
//! checks that must hold exactly. The trait exposes the transcendental
//! functions through `try_*` methods returning `Option`, so exact code paths
//! degrade into [`Error::NotExactlyRepresentable`](crate::Error) instead of
//! rounding silently: rationals answer `Some` only where the true value is
//! itself rational (perfect-square roots, the trivial angle).

use std::fmt::{Debug, Display};
use std::ops::{Add, Div, Mul, Neg, Sub};

use num::bigint::BigInt;
use num::{BigRational, One, Signed, ToPrimitive, Zero};

/// Arbitrary-precision rational scalar, the exact backend.
pub type Rat = BigRational;

pub trait Scalar:
    Clone
    + PartialEq
    + PartialOrd
    + Debug
    + Display
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
    + 'static
{
    fn zero() -> Self;
    fn one() -> Self;
    fn from_i64(n: i64) -> Self;
    /// The exact ratio n/d. Panics on d = 0.
    fn ratio(n: i64, d: i64) -> Self;

    fn is_zero(&self) -> bool;
    fn is_positive(&self) -> bool;
    fn is_negative(&self) -> bool;
    fn abs(&self) -> Self;

    /// Square root, when representable in this backend.
    fn try_sqrt(&self) -> Option<Self>;
    /// (cos t, sin t), when representable.
    fn try_cos_sin(&self) -> Option<(Self, Self)>;
    /// (cosh t, sinh t), when representable.
    fn try_cosh_sinh(&self) -> Option<(Self, Self)>;
    /// e^t, when representable.
    fn try_exp(&self) -> Option<Self>;
    /// atan2(self, x) on the branch (-pi, pi], when representable.
    fn try_atan2(&self, x: &Self) -> Option<Self>;
    /// atanh t for |t| < 1, when representable.
    fn try_atanh(&self) -> Option<Self>;
    fn try_pi() -> Option<Self>;

    /// Whether this backend stores values exactly.
    fn exact_backend() -> bool;

    fn to_f64(&self) -> f64;

    /// Parse from the CLI surface syntax: integers, `p/q` fractions and
    /// decimal literals are accepted by both backends.
    fn parse_str(s: &str) -> Option<Self>;
}

impl Scalar for f64 {
    fn zero() -> Self {
        0.0
    }
    fn one() -> Self {
        1.0
    }
    fn from_i64(n: i64) -> Self {
        n as f64
    }
    fn ratio(n: i64, d: i64) -> Self {
        assert!(d != 0, "zero denominator");
        n as f64 / d as f64
    }

    fn is_zero(&self) -> bool {
        *self == 0.0
    }
    fn is_positive(&self) -> bool {
        *self > 0.0
    }
    fn is_negative(&self) -> bool {
        *self < 0.0
    }
    fn abs(&self) -> Self {
        f64::abs(*self)
    }

    fn try_sqrt(&self) -> Option<Self> {
        (*self >= 0.0).then(|| f64::sqrt(*self))
    }
    fn try_cos_sin(&self) -> Option<(Self, Self)> {
        Some((self.cos(), self.sin()))
    }
    fn try_cosh_sinh(&self) -> Option<(Self, Self)> {
        Some((self.cosh(), self.sinh()))
    }
    fn try_exp(&self) -> Option<Self> {
        Some(f64::exp(*self))
    }
    fn try_atan2(&self, x: &Self) -> Option<Self> {
        let phi = f64::atan2(*self, *x);
        // Fold the -pi edge onto the (-pi, pi] branch.
        Some(if phi <= -std::f64::consts::PI {
            std::f64::consts::PI
        } else {
            phi
        })
    }
    fn try_atanh(&self) -> Option<Self> {
        (f64::abs(*self) < 1.0).then(|| f64::atanh(*self))
    }
    fn try_pi() -> Option<Self> {
        Some(std::f64::consts::PI)
    }

    fn exact_backend() -> bool {
        false
    }

    fn to_f64(&self) -> f64 {
        *self
    }

    fn parse_str(s: &str) -> Option<Self> {
        if let Some((n, d)) = s.split_once('/') {
            let n: f64 = n.trim().parse().ok()?;
            let d: f64 = d.trim().parse().ok()?;
            (d != 0.0).then(|| n / d)
        } else {
            s.trim().parse().ok()
        }
    }
}

impl Scalar for Rat {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn from_i64(n: i64) -> Self {
        Rat::from_integer(BigInt::from(n))
    }
    fn ratio(n: i64, d: i64) -> Self {
        Rat::new(BigInt::from(n), BigInt::from(d))
    }

    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn is_positive(&self) -> bool {
        Signed::is_positive(self)
    }
    fn is_negative(&self) -> bool {
        Signed::is_negative(self)
    }
    fn abs(&self) -> Self {
        Signed::abs(self)
    }

    fn try_sqrt(&self) -> Option<Self> {
        if Signed::is_negative(self) {
            return None;
        }
        let (n, d) = (self.numer(), self.denom());
        let sn = n.sqrt();
        let sd = d.sqrt();
        (&sn * &sn == *n && &sd * &sd == *d).then(|| Rat::new(sn, sd))
    }
    fn try_cos_sin(&self) -> Option<(Self, Self)> {
        Scalar::is_zero(self).then(|| (<Self as Scalar>::one(), <Self as Scalar>::zero()))
    }
    fn try_cosh_sinh(&self) -> Option<(Self, Self)> {
        Scalar::is_zero(self).then(|| (<Self as Scalar>::one(), <Self as Scalar>::zero()))
    }
    fn try_exp(&self) -> Option<Self> {
        Scalar::is_zero(self).then(<Self as Scalar>::one)
    }
    fn try_atan2(&self, _x: &Self) -> Option<Self> {
        None
    }
    fn try_atanh(&self) -> Option<Self> {
        Scalar::is_zero(self).then(<Self as Scalar>::zero)
    }
    fn try_pi() -> Option<Self> {
        None
    }

    fn exact_backend() -> bool {
        true
    }

    fn to_f64(&self) -> f64 {
        ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }

    fn parse_str(s: &str) -> Option<Self> {
        let s = s.trim();
        if let Some((n, d)) = s.split_once('/') {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            (!Zero::is_zero(&d)).then(|| Rat::new(n, d))
        } else if let Some((int, frac)) = s.split_once('.') {
            let sign = if int.trim_start().starts_with('-') { -1 } else { 1 };
            let int: BigInt = if int.is_empty() || int == "-" {
                Zero::zero()
            } else {
                int.parse().ok()?
            };
            if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
                return None;
            }
            let num: BigInt = frac.parse().ok()?;
            let den = num::pow(BigInt::from(10), frac.len());
            Some(Rat::from_integer(int) + Rat::new(num * sign, den))
        } else {
            let n: BigInt = s.parse().ok()?;
            Some(Rat::from_integer(n))
        }
    }
}

/// Shorthand for an exact rational from an integer pair.
pub fn rat(n: i64, d: i64) -> Rat {
    Rat::ratio(n, d)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_sqrt_only_for_perfect_squares() {
        assert_eq!(rat(9, 4).try_sqrt(), Some(rat(3, 2)));
        assert_eq!(rat(2, 1).try_sqrt(), None);
        assert_eq!(rat(-4, 1).try_sqrt(), None);
        assert_eq!(rat(0, 5).try_sqrt(), Some(rat(0, 1)));
    }

    #[test]
    fn rational_parsing_handles_fractions_and_decimals() {
        assert_eq!(Rat::parse_str("3/4"), Some(rat(3, 4)));
        assert_eq!(Rat::parse_str("-1.25"), Some(rat(-5, 4)));
        assert_eq!(Rat::parse_str("7"), Some(rat(7, 1)));
        assert_eq!(Rat::parse_str("0.1"), Some(rat(1, 10)));
        assert_eq!(Rat::parse_str("1/0"), None);
        assert_eq!(Rat::parse_str("1.2.3"), None);
    }

    #[test]
    fn float_atan2_uses_half_open_branch() {
        let phi = (-0.0f64).try_atan2(&-1.0).unwrap();
        assert_eq!(phi, std::f64::consts::PI);
    }

    #[test]
    fn exact_trig_only_at_zero() {
        assert_eq!(rat(0, 1).try_cos_sin(), Some((rat(1, 1), rat(0, 1))));
        assert_eq!(rat(1, 2).try_cos_sin(), None);
    }
}
