//! Exotic parabolic arithmetic on dual-number points.
//!
//! Dual numbers carry two non-standard vector structures, one adapted to the
//! upper unipotent rotations (flavor `N`) and one to the lower unipotent
//! rotations (flavor `Nprime`). Each flavor has its own norm and argument;
//! vectors multiply by adding arguments and multiplying norms, and add
//! componentwise in homogeneous polar coordinates `[norm·arg, norm]`. The
//! homogeneous chart is total: it absorbs the points the affine chart cannot
//! express, such as the `Nprime` zero vector. Affine coordinates are a view
//! that is materialized when defined and refused otherwise.
//!
//! Everything here is rational arithmetic; run it over [`Rat`](crate::Rat)
//! for exact identities.

use std::fmt;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Which unipotent family the vector structure is adapted to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Flavor {
    /// Upper unipotent: norm u² − v, argument u.
    N,
    /// Lower unipotent: norm u²/(v+1), argument 1/u.
    Nprime,
}

impl Flavor {
    pub fn label(self) -> &'static str {
        match self {
            Flavor::N => "N",
            Flavor::Nprime => "N'",
        }
    }
}

/// Coordinates of a parabolic vector: either the affine dual-number point
/// (u, v), or the homogeneous polar pair [a, r] = [norm·argument, norm].
#[derive(Debug, Clone, PartialEq)]
pub enum Coords<S: Scalar> {
    Affine { u: S, v: S },
    HomPolar { a: S, r: S },
}

/// A dual-number point with one of the two exotic vector structures.
#[derive(Debug, Clone, PartialEq)]
pub struct PVec<S: Scalar> {
    pub flavor: Flavor,
    pub coords: Coords<S>,
}

impl<S: Scalar> fmt::Display for PVec<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.coords {
            Coords::Affine { u, v } => write!(f, "{}:({}, {})", self.flavor.label(), u, v),
            Coords::HomPolar { a, r } => write!(f, "{}:[{}, {}]", self.flavor.label(), a, r),
        }
    }
}

fn check_flavor<S: Scalar>(p: &PVec<S>, q: &PVec<S>) -> Result<()> {
    if p.flavor == q.flavor {
        Ok(())
    } else {
        Err(Error::FlavorMismatch)
    }
}

impl<S: Scalar> PVec<S> {
    pub fn affine(flavor: Flavor, u: S, v: S) -> Self {
        PVec {
            flavor,
            coords: Coords::Affine { u, v },
        }
    }

    pub fn hompolar(flavor: Flavor, a: S, r: S) -> Self {
        PVec {
            flavor,
            coords: Coords::HomPolar { a, r },
        }
    }

    /// The zero vector: (0, 0) for `N`; for `Nprime` it lies at (∞, −1) and
    /// only the homogeneous form [0, 0] can hold it.
    pub fn zero(flavor: Flavor) -> Self {
        match flavor {
            Flavor::N => PVec::affine(flavor, S::zero(), S::zero()),
            Flavor::Nprime => PVec::hompolar(flavor, S::zero(), S::zero()),
        }
    }

    /// The multiplicative unit: norm 1, argument 0.
    pub fn unit(flavor: Flavor) -> Self {
        match flavor {
            Flavor::N => PVec::affine(flavor, S::zero(), -S::one()),
            Flavor::Nprime => PVec::hompolar(flavor, S::zero(), S::one()),
        }
    }

    /// Reconstructs the vector with the given argument and norm:
    /// (arg, arg² − mod) for `N`, homogeneous [mod·arg, mod] for `Nprime`.
    pub fn from_arg_mod(flavor: Flavor, arg: S, modulus: S) -> Self {
        match flavor {
            Flavor::N => {
                let v = arg.clone() * arg.clone() - modulus;
                PVec::affine(flavor, arg, v)
            }
            Flavor::Nprime => PVec::hompolar(flavor, modulus.clone() * arg, modulus),
        }
    }

    pub fn norm(&self) -> Result<S> {
        match (&self.coords, self.flavor) {
            (Coords::Affine { u, v }, Flavor::N) => Ok(u.clone() * u.clone() - v.clone()),
            (Coords::Affine { u, v }, Flavor::Nprime) => {
                let den = v.clone() + S::one();
                if den.is_zero() {
                    Err(Error::NormUndefined)
                } else {
                    Ok(u.clone() * u.clone() / den)
                }
            }
            (Coords::HomPolar { r, .. }, _) => Ok(r.clone()),
        }
    }

    pub fn argument(&self) -> Result<S> {
        match (&self.coords, self.flavor) {
            (Coords::Affine { u, .. }, Flavor::N) => Ok(u.clone()),
            (Coords::Affine { u, .. }, Flavor::Nprime) => {
                if u.is_zero() {
                    Err(Error::ArgUndefined)
                } else {
                    Ok(S::one() / u.clone())
                }
            }
            (Coords::HomPolar { a, r }, _) => {
                if r.is_zero() {
                    Err(Error::ArgUndefined)
                } else {
                    Ok(a.clone() / r.clone())
                }
            }
        }
    }

    /// The homogeneous polar pair [norm·argument, norm].
    pub fn hompolar_pair(&self) -> Result<(S, S)> {
        match (&self.coords, self.flavor) {
            (Coords::HomPolar { a, r }, _) => Ok((a.clone(), r.clone())),
            (Coords::Affine { u, v }, Flavor::N) => {
                let n = u.clone() * u.clone() - v.clone();
                Ok((n.clone() * u.clone(), n))
            }
            (Coords::Affine { u, v }, Flavor::Nprime) => {
                let den = v.clone() + S::one();
                if den.is_zero() {
                    return Err(Error::NormUndefined);
                }
                if u.is_zero() {
                    return Err(Error::ArgUndefined);
                }
                let n = u.clone() * u.clone() / den;
                Ok((n.clone() / u.clone(), n))
            }
        }
    }

    pub fn to_hompolar(&self) -> Result<Self> {
        let (a, r) = self.hompolar_pair()?;
        Ok(PVec::hompolar(self.flavor, a, r))
    }

    /// The affine dual-number point, when the chart covers this vector.
    pub fn to_affine(&self) -> Result<Self> {
        match (&self.coords, self.flavor) {
            (Coords::Affine { .. }, _) => Ok(self.clone()),
            (Coords::HomPolar { a, r }, Flavor::N) => {
                if r.is_zero() {
                    if a.is_zero() {
                        Ok(PVec::affine(self.flavor, S::zero(), S::zero()))
                    } else {
                        Err(Error::ArgUndefined)
                    }
                } else {
                    let u = a.clone() / r.clone();
                    let v = u.clone() * u.clone() - r.clone();
                    Ok(PVec::affine(self.flavor, u, v))
                }
            }
            (Coords::HomPolar { a, r }, Flavor::Nprime) => {
                if a.is_zero() || r.is_zero() {
                    Err(Error::ArgUndefined)
                } else {
                    let u = r.clone() / a.clone();
                    let v = r.clone() / (a.clone() * a.clone()) - S::one();
                    Ok(PVec::affine(self.flavor, u, v))
                }
            }
        }
    }

    fn materialized(flavor: Flavor, a: S, r: S) -> Self {
        let h = PVec::hompolar(flavor, a, r);
        h.to_affine().unwrap_or(h)
    }

    /// Parabolic conjugation: (u, v) ↦ (−u, v); [a, r] ↦ [−a, r]. Preserves
    /// the norm, negates the argument.
    pub fn pconj(&self) -> Self {
        let coords = match &self.coords {
            Coords::Affine { u, v } => Coords::Affine {
                u: -u.clone(),
                v: v.clone(),
            },
            Coords::HomPolar { a, r } => Coords::HomPolar {
                a: -a.clone(),
                r: r.clone(),
            },
        };
        PVec {
            flavor: self.flavor,
            coords,
        }
    }

    /// Parabolic product: arguments add, norms multiply. Affine operands use
    /// the closed affine formulas; otherwise the homogeneous rule
    /// [a₁r₂ + a₂r₁, r₁r₂] applies.
    pub fn pmul(&self, other: &Self) -> Result<Self> {
        check_flavor(self, other)?;
        if let (Coords::Affine { u: u1, v: v1 }, Coords::Affine { u: u2, v: v2 }) =
            (&self.coords, &other.coords)
        {
            match self.flavor {
                Flavor::N => {
                    let u = u1.clone() + u2.clone();
                    let n1 = u1.clone() * u1.clone() - v1.clone();
                    let n2 = u2.clone() * u2.clone() - v2.clone();
                    let v = u.clone() * u.clone() - n1 * n2;
                    return Ok(PVec::affine(self.flavor, u, v));
                }
                Flavor::Nprime => {
                    let s = u1.clone() + u2.clone();
                    if s.is_zero() {
                        return Err(Error::ProductUndefined);
                    }
                    let u = u1.clone() * u2.clone() / s.clone();
                    let v = (v1.clone() + S::one()) * (v2.clone() + S::one())
                        / (s.clone() * s)
                        - S::one();
                    return Ok(PVec::affine(self.flavor, u, v));
                }
            }
        }
        let (a1, r1) = self.hompolar_pair()?;
        let (a2, r2) = other.hompolar_pair()?;
        Ok(PVec::materialized(
            self.flavor,
            a1 * r2.clone() + a2 * r1.clone(),
            r1 * r2,
        ))
    }

    /// Scalar multiplication: scales the norm, preserves the argument.
    pub fn smul(&self, alpha: &S) -> Result<Self> {
        match (&self.coords, self.flavor) {
            (Coords::Affine { u, v }, Flavor::N) => {
                let v2 = alpha.clone() * v.clone()
                    + u.clone() * u.clone() * (S::one() - alpha.clone());
                Ok(PVec::affine(self.flavor, u.clone(), v2))
            }
            (Coords::Affine { u, v }, Flavor::Nprime) => {
                if alpha.is_zero() {
                    return Err(Error::DivisionByZero);
                }
                let v2 = (v.clone() + S::one()) / alpha.clone() - S::one();
                Ok(PVec::affine(self.flavor, u.clone(), v2))
            }
            (Coords::HomPolar { a, r }, _) => Ok(PVec::hompolar(
                self.flavor,
                alpha.clone() * a.clone(),
                alpha.clone() * r.clone(),
            )),
        }
    }

    /// Exotic addition, componentwise in homogeneous polar coordinates.
    pub fn padd(&self, other: &Self) -> Result<Self> {
        check_flavor(self, other)?;
        let (a1, r1) = self.hompolar_pair()?;
        let (a2, r2) = other.hompolar_pair()?;
        Ok(PVec::materialized(self.flavor, a1 + a2, r1 + r2))
    }

    /// Additive inverse: (u, 2u² − v) for `N`, (u, −v − 2) for `Nprime`,
    /// [−a, −r] in homogeneous form.
    pub fn pneg(&self) -> Self {
        let coords = match (&self.coords, self.flavor) {
            (Coords::Affine { u, v }, Flavor::N) => Coords::Affine {
                u: u.clone(),
                v: S::from_i64(2) * u.clone() * u.clone() - v.clone(),
            },
            (Coords::Affine { u, v }, Flavor::Nprime) => Coords::Affine {
                u: u.clone(),
                v: -v.clone() - S::from_i64(2),
            },
            (Coords::HomPolar { a, r }, _) => Coords::HomPolar {
                a: -a.clone(),
                r: -r.clone(),
            },
        };
        PVec {
            flavor: self.flavor,
            coords,
        }
    }

    /// Subtraction, as addition of the inverse.
    pub fn psub(&self, other: &Self) -> Result<Self> {
        self.padd(&other.pneg())
    }
}

/// Which lexicographic extremum tropical addition takes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TropicalMode {
    Min,
    Max,
}

/// Tropical addition: the lexicographic minimum or maximum of the affine
/// coordinate pairs.
pub fn tropical_add<S: Scalar>(
    p1: &PVec<S>,
    p2: &PVec<S>,
    mode: TropicalMode,
) -> Result<PVec<S>> {
    check_flavor(p1, p2)?;
    let (u1, v1) = match &p1.coords {
        Coords::Affine { u, v } => (u, v),
        Coords::HomPolar { .. } => {
            return Err(Error::DomainError("tropical addition needs affine form"))
        }
    };
    let (u2, v2) = match &p2.coords {
        Coords::Affine { u, v } => (u, v),
        Coords::HomPolar { .. } => {
            return Err(Error::DomainError("tropical addition needs affine form"))
        }
    };
    let first_less = u1 < u2 || (u1 == u2 && v1 <= v2);
    let take_first = match mode {
        TropicalMode::Min => first_less,
        TropicalMode::Max => !first_less,
    };
    Ok(if take_first { p1.clone() } else { p2.clone() })
}
