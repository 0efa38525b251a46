//! The upper half-plane as a homogeneous space of SL(2,R).
//!
//! For each isotropy subgroup H ∈ {K, N′, A′} the maps here realize
//! G/H: the section `s_map` embeds a point as a group element, `p_map`
//! projects a group element back to the plane, and `r_map` extracts the
//! H-factor so that s(p(g))·r(g) = g. The group action comes in two
//! equivalent forms: `act_brute`, a rational formula on coordinate pairs,
//! and `act_moebius`, the fractional-linear map on projective pairs of
//! hypercomplex numbers, which also covers ideal points. Cayley transforms
//! diagonalize the rotation subgroups over the matching number system, and
//! the two parabolic rotation families act on dual-number points by the
//! closed forms derived from their Möbius action.

use crate::error::{Error, Result};
use crate::hypercomplex::{HMat2, HNum, Sigma};
use crate::scalar::Scalar;
use crate::sl2::{Mat2, SL2Elem};

/// A point (u, v) of the hypercomplex plane; the interior chart of the
/// homogeneous space is v > 0, but action images may leave it.
#[derive(Debug, Clone, PartialEq)]
pub struct HalfPlanePoint<S: Scalar> {
    pub u: S,
    pub v: S,
}

impl<S: Scalar> HalfPlanePoint<S> {
    pub fn new(u: S, v: S) -> Self {
        HalfPlanePoint { u, v }
    }

    pub fn base() -> Self {
        HalfPlanePoint::new(S::zero(), S::one())
    }
}

/// The isotropy subgroup choice, with its associated number system.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IsotropyGroup {
    K,
    Nprime,
    Aprime,
}

impl IsotropyGroup {
    pub fn sigma(self) -> Sigma {
        match self {
            IsotropyGroup::K => Sigma::Elliptic,
            IsotropyGroup::Nprime => Sigma::Parabolic,
            IsotropyGroup::Aprime => Sigma::Hyperbolic,
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            IsotropyGroup::K => "K",
            IsotropyGroup::Nprime => "N'",
            IsotropyGroup::Aprime => "A'",
        }
    }
}

/// A projective pair [w1 : w2] of hypercomplex numbers, covering the ideal
/// points that the affine chart misses.
#[derive(Debug, Clone, PartialEq)]
pub struct ProjPoint<S: Scalar> {
    w1: HNum<S>,
    w2: HNum<S>,
}

impl<S: Scalar> ProjPoint<S> {
    /// Requires matching number systems and a non-degenerate pair: at least
    /// one coordinate invertible, or two independent zero divisors.
    pub fn new(w1: HNum<S>, w2: HNum<S>) -> Result<Self> {
        if w1.sigma != w2.sigma {
            return Err(Error::SigmaMismatch);
        }
        if !w1.is_invertible() && !w2.is_invertible() {
            let cross = w1.re.clone() * w2.im.clone() - w1.im.clone() * w2.re.clone();
            if cross.is_zero() {
                return Err(Error::DegeneratePoint);
            }
        }
        Ok(ProjPoint { w1, w2 })
    }

    pub fn from_affine(w: HNum<S>) -> Self {
        let one = HNum::one(w.sigma);
        ProjPoint { w1: w, w2: one }
    }

    pub fn embed(p: &HalfPlanePoint<S>, sigma: Sigma) -> Self {
        ProjPoint::from_affine(HNum::new(p.u.clone(), p.v.clone(), sigma))
    }

    pub fn sigma(&self) -> Sigma {
        self.w1.sigma
    }

    pub fn pair(&self) -> (&HNum<S>, &HNum<S>) {
        (&self.w1, &self.w2)
    }

    /// Whether the point lies outside the affine chart.
    pub fn is_ideal(&self) -> bool {
        !self.w2.is_invertible()
    }

    /// The affine value w1/w2.
    pub fn affine(&self) -> Result<HNum<S>> {
        if self.is_ideal() {
            return Err(Error::IdealPoint);
        }
        self.w1.mul(&self.w2.invert()?)
    }

    /// The affine value as a coordinate pair.
    pub fn affine_point(&self) -> Result<HalfPlanePoint<S>> {
        let w = self.affine()?;
        Ok(HalfPlanePoint::new(w.re, w.im))
    }

    /// Scales to [w : 1] whenever the second coordinate is invertible.
    pub fn normalized(&self) -> Self {
        match self.affine() {
            Ok(w) => ProjPoint::from_affine(w),
            Err(_) => self.clone(),
        }
    }
}

/// The section s(u, v) = (1/√v)·[[v, u], [0, 1]], an element of SL(2,R).
pub fn s_map<S: Scalar>(p: &HalfPlanePoint<S>) -> Result<SL2Elem<S>> {
    let raw = s_map_raw(p)?;
    let root = p.v.try_sqrt().ok_or(Error::NotExactlyRepresentable)?;
    Ok(SL2Elem::from_mat_unchecked(raw.scale(&(S::one() / root))))
}

/// The unnormalized section [[v, u], [0, 1]] with determinant v, avoiding
/// the square root; projections that only need the point up to the positive
/// scale can stay exact with this form.
pub fn s_map_raw<S: Scalar>(p: &HalfPlanePoint<S>) -> Result<Mat2<S>> {
    if !p.v.is_positive() {
        return Err(Error::DomainError("section needs v > 0"));
    }
    Ok(Mat2::new(p.v.clone(), p.u.clone(), S::zero(), S::one()))
}

/// Projection for a positive-determinant matrix: the unique (u, v) with
/// m = √(det m)·s(u, v)·h, h in the chosen subgroup.
pub fn p_map_mat<S: Scalar>(m: &Mat2<S>, h: IsotropyGroup) -> Result<HalfPlanePoint<S>> {
    let sig = S::from_i64(h.sigma().unit_square());
    let den = m.d.clone() * m.d.clone() - sig.clone() * m.c.clone() * m.c.clone();
    if den.is_zero() {
        return Err(Error::IdealPoint);
    }
    let u = (m.b.clone() * m.d.clone() - sig * m.a.clone() * m.c.clone()) / den.clone();
    let v = m.det() / den;
    Ok(HalfPlanePoint::new(u, v))
}

/// Projection G → G/H; left inverse of the section.
pub fn p_map<S: Scalar>(g: &SL2Elem<S>, h: IsotropyGroup) -> Result<HalfPlanePoint<S>> {
    p_map_mat(g.mat(), h)
}

/// The H-factor r(g) = s(p(g))⁻¹·g of g relative to the section. Requires
/// the factorization to exist: always for K, d > 0 for N′, d > |c| for A′.
pub fn r_map<S: Scalar>(g: &SL2Elem<S>, h: IsotropyGroup) -> Result<SL2Elem<S>> {
    let m = g.mat();
    let (c, d) = (m.c.clone(), m.d.clone());
    let mat = match h {
        IsotropyGroup::K => {
            let rr = c.clone() * c.clone() + d.clone() * d.clone();
            let r = rr.try_sqrt().ok_or(Error::NotExactlyRepresentable)?;
            Mat2::new(
                d.clone() / r.clone(),
                -c.clone() / r.clone(),
                c / r.clone(),
                d / r,
            )
        }
        IsotropyGroup::Nprime => {
            if !d.is_positive() {
                return Err(Error::FactorizationFails("N' factor needs d > 0"));
            }
            Mat2::new(S::one(), S::zero(), c / d, S::one())
        }
        IsotropyGroup::Aprime => {
            let den = d.clone() * d.clone() - c.clone() * c.clone();
            if !d.is_positive() || !den.is_positive() {
                return Err(Error::FactorizationFails("A' factor needs d > |c|"));
            }
            let r = den.try_sqrt().ok_or(Error::NotExactlyRepresentable)?;
            Mat2::new(
                d.clone() / r.clone(),
                c.clone() / r.clone(),
                c / r.clone(),
                d / r,
            )
        }
    };
    Ok(SL2Elem::from_mat_unchecked(mat))
}

/// The action of g on (u, v) in coordinates:
/// u' = ((au+b)(cu+d) − σ·ac·v²)/D, v' = v/D with D = (cu+d)² − σ(cv)².
pub fn act_brute<S: Scalar>(
    g: &SL2Elem<S>,
    p: &HalfPlanePoint<S>,
    sigma: Sigma,
) -> Result<HalfPlanePoint<S>> {
    let m = g.mat();
    let sig = S::from_i64(sigma.unit_square());
    let cu_d = m.c.clone() * p.u.clone() + m.d.clone();
    let cv = m.c.clone() * p.v.clone();
    let den = cu_d.clone() * cu_d.clone() - sig.clone() * cv.clone() * cv;
    if den.is_zero() {
        return Err(Error::IdealPoint);
    }
    let au_b = m.a.clone() * p.u.clone() + m.b.clone();
    let u = (au_b * cu_d - sig * m.a.clone() * m.c.clone() * p.v.clone() * p.v.clone())
        / den.clone();
    let v = p.v.clone() / den;
    Ok(HalfPlanePoint::new(u, v))
}

/// The fractional-linear action on projective pairs for a matrix with
/// hypercomplex entries: [w1 : w2] ↦ [a·w1 + b·w2 : c·w1 + d·w2].
pub fn act_moebius_h<S: Scalar>(m: &HMat2<S>, w: &ProjPoint<S>) -> Result<ProjPoint<S>> {
    if m.sigma() != w.sigma() {
        return Err(Error::SigmaMismatch);
    }
    let (w1, w2) = w.pair();
    let n1 = m.a.mul(w1)?.add(&m.b.mul(w2)?)?;
    let n2 = m.c.mul(w1)?.add(&m.d.mul(w2)?)?;
    Ok(ProjPoint::new(n1, n2)?.normalized())
}

fn lift_real<S: Scalar>(m: &Mat2<S>, sigma: Sigma) -> HMat2<S> {
    let [a, b, c, d] = m.entries();
    HMat2::from_real(a, b, c, d, sigma)
}

/// The fractional-linear action of a real group element.
pub fn act_moebius<S: Scalar>(g: &SL2Elem<S>, w: &ProjPoint<S>) -> Result<ProjPoint<S>> {
    act_moebius_h(&lift_real(g.mat(), w.sigma()), w)
}

/// The Cayley matrix of the number system: [[1, −i], [−i, 1]] elliptic,
/// [[1, −ε], [−ε, 1]] parabolic, [[1, h], [−h, 1]] hyperbolic.
pub fn cayley<S: Scalar>(sigma: Sigma) -> HMat2<S> {
    let one = HNum::one(sigma);
    let unit = HNum::unit(sigma);
    match sigma {
        Sigma::Hyperbolic => HMat2::new(one.clone(), unit.clone(), unit.neg(), one).unwrap(),
        _ => HMat2::new(one.clone(), unit.neg(), unit.neg(), one).unwrap(),
    }
}

/// The inverse Cayley matrix, with the ½ prefactor where the determinant
/// is 2 (elliptic, hyperbolic) and exactly unit-determinant parabolic form.
pub fn cayley_inverse<S: Scalar>(sigma: Sigma) -> HMat2<S> {
    let one = HNum::one(sigma);
    let unit = HNum::unit(sigma);
    let half = S::ratio(1, 2);
    match sigma {
        Sigma::Parabolic => HMat2::new(one.clone(), unit.clone(), unit, one).unwrap(),
        Sigma::Hyperbolic => HMat2::new(one.clone(), unit.neg(), unit, one)
            .unwrap()
            .scale(&half),
        Sigma::Elliptic => HMat2::new(one.clone(), unit.clone(), unit, one)
            .unwrap()
            .scale(&half),
    }
}

/// C_σ · g · C_σ⁻¹; diagonalizes K over complex numbers and A′ over double
/// numbers, and brings N to the near-diagonal dual form [[1+εt, t], [0, 1−εt]].
pub fn cayley_conjugate<S: Scalar>(g: &SL2Elem<S>, sigma: Sigma) -> Result<HMat2<S>> {
    let gm = lift_real(g.mat(), sigma);
    cayley::<S>(sigma).mul(&gm)?.mul(&cayley_inverse(sigma))
}

/// Rotation from the upper unipotent family: (u, v) ↦ (u + t, v + 2tu + t²).
pub fn parab_rotate_n<S: Scalar>(t: &S, p: &HalfPlanePoint<S>) -> HalfPlanePoint<S> {
    let u = p.u.clone() + t.clone();
    let v = p.v.clone()
        + S::from_i64(2) * t.clone() * p.u.clone()
        + t.clone() * t.clone();
    HalfPlanePoint::new(u, v)
}

/// Rotation from the lower unipotent family:
/// (u, v) ↦ (u/(1+tu), (v − 2tu − t²u²)/(1+tu)²).
pub fn parab_rotate_nprime<S: Scalar>(
    t: &S,
    p: &HalfPlanePoint<S>,
) -> Result<HalfPlanePoint<S>> {
    let den = S::one() + t.clone() * p.u.clone();
    if den.is_zero() {
        return Err(Error::IdealPoint);
    }
    let u = p.u.clone() / den.clone();
    let tu = t.clone() * p.u.clone();
    let v = (p.v.clone() - S::from_i64(2) * tu.clone() - tu.clone() * tu)
        / (den.clone() * den);
    Ok(HalfPlanePoint::new(u, v))
}

/// Image of the reference ideal point (the unit of the lower-unipotent
/// vector structure, at infinite u) under rotation by t: (1/t, 1/t² − 1).
pub fn parab_rotate_nprime_ideal<S: Scalar>(t: &S) -> Result<HalfPlanePoint<S>> {
    if t.is_zero() {
        return Err(Error::IdealPoint);
    }
    let inv = S::one() / t.clone();
    Ok(HalfPlanePoint::new(
        inv.clone(),
        inv.clone() * inv - S::one(),
    ))
}

/// cosₚ t = 1 − t².
pub fn parab_cos<S: Scalar>(t: &S) -> S {
    S::one() - t.clone() * t.clone()
}

/// sinₚ t = t.
pub fn parab_sin<S: Scalar>(t: &S) -> S {
    t.clone()
}
