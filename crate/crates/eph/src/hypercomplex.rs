//! Two-component numbers `u + ι v` over one of three algebras.
//!
//! The square of the imaginary unit selects the algebra: `ι² = σ` with
//! σ = −1 (complex numbers), σ = 0 (dual numbers, ι is usually written ε and
//! is nilpotent) or σ = +1 (double numbers, ι is written h and is a
//! non-trivial square root of 1). The latter two algebras have zero divisors:
//! every `εy` for σ = 0, and the two lines spanned by `1 ± h` for σ = +1.
//! All partial operations report failures through [`Error`]; mixing numbers
//! from different algebras is rejected, never coerced.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Selects one of the three algebras by the sign of ι².
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Sigma {
    /// ι² = −1: complex numbers, elliptic geometry.
    Elliptic,
    /// ι² = 0: dual numbers, parabolic geometry.
    Parabolic,
    /// ι² = +1: double (split-complex) numbers, hyperbolic geometry.
    Hyperbolic,
}

impl Sigma {
    /// The integer value of ι².
    pub fn unit_square(self) -> i64 {
        match self {
            Sigma::Elliptic => -1,
            Sigma::Parabolic => 0,
            Sigma::Hyperbolic => 1,
        }
    }

    pub fn from_int(n: i64) -> Option<Self> {
        match n {
            -1 => Some(Sigma::Elliptic),
            0 => Some(Sigma::Parabolic),
            1 => Some(Sigma::Hyperbolic),
            _ => None,
        }
    }

    /// ι² as a scalar of the chosen backend.
    pub fn factor<S: Scalar>(self) -> S {
        S::from_i64(self.unit_square())
    }

    /// Conventional letter for the imaginary unit of this algebra.
    pub fn unit_symbol(self) -> char {
        match self {
            Sigma::Elliptic => 'i',
            Sigma::Parabolic => 'ε',
            Sigma::Hyperbolic => 'h',
        }
    }
}

/// A number `re + ι im` in the algebra tagged by `sigma`.
#[derive(Debug, Clone, PartialEq)]
pub struct HNum<S: Scalar> {
    pub re: S,
    pub im: S,
    pub sigma: Sigma,
}

impl<S: Scalar> HNum<S> {
    pub fn new(re: S, im: S, sigma: Sigma) -> Self {
        HNum { re, im, sigma }
    }

    pub fn from_real(re: S, sigma: Sigma) -> Self {
        HNum::new(re, S::zero(), sigma)
    }

    pub fn zero(sigma: Sigma) -> Self {
        HNum::from_real(S::zero(), sigma)
    }

    pub fn one(sigma: Sigma) -> Self {
        HNum::from_real(S::one(), sigma)
    }

    /// The imaginary unit ι of the algebra.
    pub fn unit(sigma: Sigma) -> Self {
        HNum::new(S::zero(), S::one(), sigma)
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    fn check_sigma(&self, other: &Self) -> Result<()> {
        if self.sigma == other.sigma {
            Ok(())
        } else {
            Err(Error::SigmaMismatch)
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_sigma(other)?;
        Ok(HNum::new(
            self.re.clone() + other.re.clone(),
            self.im.clone() + other.im.clone(),
            self.sigma,
        ))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_sigma(other)?;
        Ok(HNum::new(
            self.re.clone() - other.re.clone(),
            self.im.clone() - other.im.clone(),
            self.sigma,
        ))
    }

    /// `(a + ιb)(c + ιd) = (ac + σbd) + ι(ad + bc)`.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_sigma(other)?;
        let (a, b) = (&self.re, &self.im);
        let (c, d) = (&other.re, &other.im);
        let sigma: S = self.sigma.factor();
        Ok(HNum::new(
            a.clone() * c.clone() + sigma * b.clone() * d.clone(),
            a.clone() * d.clone() + b.clone() * c.clone(),
            self.sigma,
        ))
    }

    pub fn neg(&self) -> Self {
        HNum::new(-self.re.clone(), -self.im.clone(), self.sigma)
    }

    /// Componentwise multiplication by a real scalar.
    pub fn scale(&self, s: &S) -> Self {
        HNum::new(self.re.clone() * s.clone(), self.im.clone() * s.clone(), self.sigma)
    }

    /// `u + ιv ↦ u − ιv`.
    pub fn conj(&self) -> Self {
        HNum::new(self.re.clone(), -self.im.clone(), self.sigma)
    }

    /// The square modulus `re² − σ·im²`; real-valued in all three algebras.
    pub fn modulus_sq(&self) -> S {
        let sigma: S = self.sigma.factor();
        self.re.clone() * self.re.clone() - sigma * self.im.clone() * self.im.clone()
    }

    /// An element is invertible exactly when its square modulus is nonzero.
    pub fn is_invertible(&self) -> bool {
        !self.modulus_sq().is_zero()
    }

    /// `w⁻¹ = conj(w) / modulus_sq(w)`.
    pub fn invert(&self) -> Result<Self> {
        let msq = self.modulus_sq();
        if msq.is_zero() {
            return Err(Error::ZeroDivisor);
        }
        Ok(HNum::new(
            self.re.clone() / msq.clone(),
            -self.im.clone() / msq,
            self.sigma,
        ))
    }

    /// Division `self · other⁻¹`.
    pub fn div(&self, other: &Self) -> Result<Self> {
        self.mul(&other.invert()?)
    }

    /// The angular coordinate of the polar decomposition:
    /// atan2(v, u) on (−π, π] for σ = −1, v/u for σ = 0 and
    /// atanh(v/u) (needing |u| > |v|) for σ = +1.
    pub fn arg(&self) -> Result<S> {
        match self.sigma {
            Sigma::Elliptic => {
                if self.is_zero() {
                    return Err(Error::ArgUndefined);
                }
                self.im
                    .try_atan2(&self.re)
                    .ok_or(Error::NotExactlyRepresentable)
            }
            Sigma::Parabolic => {
                if self.re.is_zero() {
                    return Err(Error::ArgUndefined);
                }
                Ok(self.im.clone() / self.re.clone())
            }
            Sigma::Hyperbolic => {
                if !(self.re.abs() > self.im.abs()) {
                    return Err(Error::ArgUndefined);
                }
                (self.im.clone() / self.re.clone())
                    .try_atanh()
                    .ok_or(Error::NotExactlyRepresentable)
            }
        }
    }

    /// The unit-modulus exponential `e^{ιt}` in the three Euler forms
    /// `cos t + ι sin t`, `1 + ιt`, `cosh t + ι sinh t`.
    pub fn exp_unit(sigma: Sigma, t: &S) -> Result<Self> {
        match sigma {
            Sigma::Elliptic => {
                let (c, s) = t.try_cos_sin().ok_or(Error::NotExactlyRepresentable)?;
                Ok(HNum::new(c, s, sigma))
            }
            Sigma::Parabolic => Ok(HNum::new(S::one(), t.clone(), sigma)),
            Sigma::Hyperbolic => {
                let (c, s) = t.try_cosh_sinh().ok_or(Error::NotExactlyRepresentable)?;
                Ok(HNum::new(c, s, sigma))
            }
        }
    }

    /// Non-negative integer power by repeated multiplication.
    pub fn pow(&self, k: u32) -> Self {
        let mut acc = HNum::one(self.sigma);
        for _ in 0..k {
            acc = acc.mul(self).expect("same sigma");
        }
        acc
    }
}

impl<S: Scalar> fmt::Display for HNum<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            return write!(f, "{}", self.re);
        }
        let unit = self.sigma.unit_symbol();
        if self.im.is_negative() {
            write!(f, "{}-{}{}", self.re, self.im.abs(), unit)
        } else {
            write!(f, "{}+{}{}", self.re, self.im, unit)
        }
    }
}

/// A 2×2 matrix with entries in one hypercomplex algebra.
///
/// Used for the Cayley images of the subgroup orbits and for the exact
/// expansion of ladder operators; real SL(2,R) matrices live in
/// [`crate::sl2::Mat2`] instead.
#[derive(Debug, Clone, PartialEq)]
pub struct HMat2<S: Scalar> {
    pub a: HNum<S>,
    pub b: HNum<S>,
    pub c: HNum<S>,
    pub d: HNum<S>,
}

impl<S: Scalar> HMat2<S> {
    pub fn new(a: HNum<S>, b: HNum<S>, c: HNum<S>, d: HNum<S>) -> Result<Self> {
        if a.sigma != b.sigma || a.sigma != c.sigma || a.sigma != d.sigma {
            return Err(Error::SigmaMismatch);
        }
        Ok(HMat2 { a, b, c, d })
    }

    pub fn sigma(&self) -> Sigma {
        self.a.sigma
    }

    pub fn identity(sigma: Sigma) -> Self {
        HMat2 {
            a: HNum::one(sigma),
            b: HNum::zero(sigma),
            c: HNum::zero(sigma),
            d: HNum::one(sigma),
        }
    }

    /// Embed a real matrix `[[a,b],[c,d]]` into the σ-algebra.
    pub fn from_real(a: S, b: S, c: S, d: S, sigma: Sigma) -> Self {
        HMat2 {
            a: HNum::from_real(a, sigma),
            b: HNum::from_real(b, sigma),
            c: HNum::from_real(c, sigma),
            d: HNum::from_real(d, sigma),
        }
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.sigma() != other.sigma() {
            return Err(Error::SigmaMismatch);
        }
        let p = |x: &HNum<S>, y: &HNum<S>| x.mul(y).expect("same sigma");
        let s = |x: HNum<S>, y: HNum<S>| x.add(&y).expect("same sigma");
        Ok(HMat2 {
            a: s(p(&self.a, &other.a), p(&self.b, &other.c)),
            b: s(p(&self.a, &other.b), p(&self.b, &other.d)),
            c: s(p(&self.c, &other.a), p(&self.d, &other.c)),
            d: s(p(&self.c, &other.b), p(&self.d, &other.d)),
        })
    }

    pub fn scale(&self, s: &S) -> Self {
        HMat2 {
            a: self.a.scale(s),
            b: self.b.scale(s),
            c: self.c.scale(s),
            d: self.d.scale(s),
        }
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        Ok(HMat2 {
            a: self.a.sub(&other.a)?,
            b: self.b.sub(&other.b)?,
            c: self.c.sub(&other.c)?,
            d: self.d.sub(&other.d)?,
        })
    }

    pub fn det(&self) -> HNum<S> {
        let ad = self.a.mul(&self.d).expect("same sigma");
        let bc = self.b.mul(&self.c).expect("same sigma");
        ad.sub(&bc).expect("same sigma")
    }

    /// `XY − YX`.
    pub fn commutator(&self, other: &Self) -> Result<Self> {
        self.mul(other)?.sub(&other.mul(self)?)
    }
}
