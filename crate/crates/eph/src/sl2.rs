//! SL(2,R) and its Lie algebra.
//!
//! The group is handled through five one-parameter subgroups: the diagonal
//! subgroup A, the upper unipotent N, the rotations K (the Iwasawa triple
//! G = ANK), and the conjugates A' (hyperbolic rotations) and N' (lower
//! unipotent). The exponential of a traceless matrix X closes in three
//! branches controlled by the sign of δ = a² + bc = −det X, which is also
//! what classifies the one-parameter subgroup generated by X up to
//! conjugation.

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// A real 2×2 matrix `[[a, b], [c, d]]`.
#[derive(Debug, Clone, PartialEq)]
pub struct Mat2<S: Scalar> {
    pub a: S,
    pub b: S,
    pub c: S,
    pub d: S,
}

impl<S: Scalar> Mat2<S> {
    pub fn new(a: S, b: S, c: S, d: S) -> Self {
        Mat2 { a, b, c, d }
    }

    pub fn identity() -> Self {
        Mat2::new(S::one(), S::zero(), S::zero(), S::one())
    }

    pub fn zero() -> Self {
        Mat2::new(S::zero(), S::zero(), S::zero(), S::zero())
    }

    pub fn det(&self) -> S {
        self.a.clone() * self.d.clone() - self.b.clone() * self.c.clone()
    }

    pub fn trace(&self) -> S {
        self.a.clone() + self.d.clone()
    }

    pub fn mul(&self, o: &Self) -> Self {
        Mat2::new(
            self.a.clone() * o.a.clone() + self.b.clone() * o.c.clone(),
            self.a.clone() * o.b.clone() + self.b.clone() * o.d.clone(),
            self.c.clone() * o.a.clone() + self.d.clone() * o.c.clone(),
            self.c.clone() * o.b.clone() + self.d.clone() * o.d.clone(),
        )
    }

    pub fn add(&self, o: &Self) -> Self {
        Mat2::new(
            self.a.clone() + o.a.clone(),
            self.b.clone() + o.b.clone(),
            self.c.clone() + o.c.clone(),
            self.d.clone() + o.d.clone(),
        )
    }

    pub fn sub(&self, o: &Self) -> Self {
        Mat2::new(
            self.a.clone() - o.a.clone(),
            self.b.clone() - o.b.clone(),
            self.c.clone() - o.c.clone(),
            self.d.clone() - o.d.clone(),
        )
    }

    pub fn scale(&self, s: &S) -> Self {
        Mat2::new(
            self.a.clone() * s.clone(),
            self.b.clone() * s.clone(),
            self.c.clone() * s.clone(),
            self.d.clone() * s.clone(),
        )
    }

    pub fn neg(&self) -> Self {
        self.scale(&-S::one())
    }

    pub fn inverse(&self) -> Result<Self> {
        let det = self.det();
        if det.is_zero() {
            return Err(Error::DomainError("singular matrix"));
        }
        Ok(Mat2::new(
            self.d.clone() / det.clone(),
            -self.b.clone() / det.clone(),
            -self.c.clone() / det.clone(),
            self.a.clone() / det,
        ))
    }

    pub fn entries(&self) -> [S; 4] {
        [self.a.clone(), self.b.clone(), self.c.clone(), self.d.clone()]
    }
}

pub(crate) fn close_to<S: Scalar>(x: &S, y: &S) -> bool {
    if S::exact_backend() {
        x == y
    } else {
        (x.clone() - y.clone()).abs() <= S::ratio(1, 1_000_000_000_000)
    }
}

/// An element of SL(2,R): a 2×2 real matrix of determinant one.
#[derive(Debug, Clone, PartialEq)]
pub struct SL2Elem<S: Scalar>(Mat2<S>);

impl<S: Scalar> SL2Elem<S> {
    /// Validates det = 1 (exactly for the rational backend, within 1e-12 for
    /// floats).
    pub fn new(m: Mat2<S>) -> Result<Self> {
        if close_to(&m.det(), &S::one()) {
            Ok(SL2Elem(m))
        } else {
            Err(Error::DomainError("determinant is not 1"))
        }
    }

    pub fn from_entries(a: S, b: S, c: S, d: S) -> Result<Self> {
        SL2Elem::new(Mat2::new(a, b, c, d))
    }

    /// For matrices whose determinant is one by construction.
    pub fn from_mat_unchecked(m: Mat2<S>) -> Self {
        SL2Elem(m)
    }

    pub fn identity() -> Self {
        SL2Elem(Mat2::identity())
    }

    pub fn mat(&self) -> &Mat2<S> {
        &self.0
    }

    pub fn mul(&self, o: &Self) -> Self {
        SL2Elem(self.0.mul(&o.0))
    }

    /// Exact inverse `[[d, −b], [−c, a]]`.
    pub fn inverse(&self) -> Self {
        SL2Elem(Mat2::new(
            self.0.d.clone(),
            -self.0.b.clone(),
            -self.0.c.clone(),
            self.0.a.clone(),
        ))
    }
}

/// A traceless 2×2 matrix, an element of sl(2,R).
#[derive(Debug, Clone, PartialEq)]
pub struct LieElem<S: Scalar>(Mat2<S>);

impl<S: Scalar> LieElem<S> {
    pub fn new(m: Mat2<S>) -> Result<Self> {
        if close_to(&m.trace(), &S::zero()) {
            Ok(LieElem(m))
        } else {
            Err(Error::DomainError("trace is not 0"))
        }
    }

    /// Builds `[[a, b], [c, -a]]` from the three free entries.
    pub fn from_parts(a: S, b: S, c: S) -> Self {
        LieElem(Mat2::new(a.clone(), b, c, -a))
    }

    pub fn mat(&self) -> &Mat2<S> {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.a.is_zero() && self.0.b.is_zero() && self.0.c.is_zero()
    }

    pub fn scale(&self, s: &S) -> Self {
        LieElem(self.0.scale(s))
    }

    pub fn neg(&self) -> Self {
        LieElem(self.0.neg())
    }

    pub fn add(&self, o: &Self) -> Self {
        LieElem(self.0.add(&o.0))
    }

    pub fn sub(&self, o: &Self) -> Self {
        LieElem(self.0.sub(&o.0))
    }

    /// δ = a² + bc = −det X; its sign separates the K/N/A branches.
    pub fn delta(&self) -> S {
        self.0.a.clone() * self.0.a.clone() + self.0.b.clone() * self.0.c.clone()
    }
}

/// `XY − YX`; traceless for any two inputs.
pub fn commutator<S: Scalar>(x: &LieElem<S>, y: &LieElem<S>) -> LieElem<S> {
    LieElem(x.0.mul(&y.0).sub(&y.0.mul(&x.0)))
}

/// The five named one-parameter subgroups.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SubgroupKind {
    A,
    N,
    K,
    APrime,
    NPrime,
}

/// The subgroup element at parameter `t`:
/// A(t) = diag(e^t, e^{−t}), N(t) = [[1,t],[0,1]],
/// K(t) = [[cos t, sin t],[−sin t, cos t]] (t on (−π, π]),
/// A'(t) = [[cosh t, sinh t],[sinh t, cosh t]], N'(t) = [[1,0],[t,1]].
pub fn subgroup_element<S: Scalar>(which: SubgroupKind, t: &S) -> Result<SL2Elem<S>> {
    let m = match which {
        SubgroupKind::A => {
            let e = t.try_exp().ok_or(Error::NotExactlyRepresentable)?;
            Mat2::new(e.clone(), S::zero(), S::zero(), S::one() / e)
        }
        SubgroupKind::N => Mat2::new(S::one(), t.clone(), S::zero(), S::one()),
        SubgroupKind::K => {
            if let Some(pi) = S::try_pi() {
                if !(t > &-pi.clone() && t <= &pi) {
                    return Err(Error::DomainError("K angle outside (-pi, pi]"));
                }
            }
            let (c, s) = t.try_cos_sin().ok_or(Error::NotExactlyRepresentable)?;
            Mat2::new(c.clone(), s.clone(), -s, c)
        }
        SubgroupKind::APrime => {
            let (ch, sh) = t.try_cosh_sinh().ok_or(Error::NotExactlyRepresentable)?;
            Mat2::new(ch.clone(), sh.clone(), sh, ch)
        }
        SubgroupKind::NPrime => Mat2::new(S::one(), S::zero(), t.clone(), S::one()),
    };
    Ok(SL2Elem::from_mat_unchecked(m))
}

/// The factors of g = A(α)·N(ν)·K(φ) with α > 0 and φ on (−π, π].
#[derive(Debug, Clone, PartialEq)]
pub struct IwasawaFactors<S: Scalar> {
    pub alpha: S,
    pub nu: S,
    pub phi: S,
}

impl<S: Scalar> IwasawaFactors<S> {
    /// Rebuilds diag(α, 1/α) · [[1, ν], [0, 1]] · K(φ).
    pub fn recompose(&self) -> Result<SL2Elem<S>> {
        let (c, s) = self
            .phi
            .try_cos_sin()
            .ok_or(Error::NotExactlyRepresentable)?;
        let an = Mat2::new(
            self.alpha.clone(),
            self.alpha.clone() * self.nu.clone(),
            S::zero(),
            S::one() / self.alpha.clone(),
        );
        let k = Mat2::new(c.clone(), s.clone(), -s, c);
        Ok(SL2Elem::from_mat_unchecked(an.mul(&k)))
    }
}

/// Splits g into its unique ANK factors. The rotation is read off the second
/// row (c, d) = (−sin φ, cos φ)/α, which pins φ = atan2(−c, d) on (−π, π]
/// and α = 1/√(c² + d²) > 0; ν then falls out of the first row.
pub fn iwasawa_decompose<S: Scalar>(g: &SL2Elem<S>) -> Result<IwasawaFactors<S>> {
    let m = g.mat();
    let rr = m.c.clone() * m.c.clone() + m.d.clone() * m.d.clone();
    let r = rr.try_sqrt().ok_or(Error::NotExactlyRepresentable)?;
    let phi = (-m.c.clone())
        .try_atan2(&m.d)
        .ok_or(Error::NotExactlyRepresentable)?;
    // atan2 can hand back a negative zero; keep the canonical one.
    let phi = if phi.is_zero() { S::zero() } else { phi };
    let alpha = S::one() / r;
    let nu = m.a.clone() * m.c.clone() + m.b.clone() * m.d.clone();
    Ok(IwasawaFactors { alpha, nu, phi })
}

/// exp(tX) for traceless X, in the closed form matching the sign of
/// δ = −det X: trigonometric for δ < 0, affine `I + tX` for δ = 0 and
/// hyperbolic for δ > 0.
pub fn exp_traceless<S: Scalar>(x: &LieElem<S>, t: &S) -> Result<SL2Elem<S>> {
    let delta = x.delta();
    let i = Mat2::identity();
    let m = if delta.is_zero() {
        i.add(&x.mat().scale(t))
    } else if delta.is_positive() {
        let mu = delta.try_sqrt().ok_or(Error::NotExactlyRepresentable)?;
        let (ch, sh) = (mu.clone() * t.clone())
            .try_cosh_sinh()
            .ok_or(Error::NotExactlyRepresentable)?;
        i.scale(&ch).add(&x.mat().scale(&(sh / mu)))
    } else {
        let mu = (-delta).try_sqrt().ok_or(Error::NotExactlyRepresentable)?;
        let (c, s) = (mu.clone() * t.clone())
            .try_cos_sin()
            .ok_or(Error::NotExactlyRepresentable)?;
        i.scale(&c).add(&x.mat().scale(&(s / mu)))
    };
    Ok(SL2Elem::from_mat_unchecked(m))
}

/// Which one-parameter subgroup a traceless matrix generates, up to
/// conjugation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SubgroupClass {
    /// δ < 0: conjugate to the rotation generator.
    KType,
    /// δ = 0: conjugate to a unipotent generator.
    NType,
    /// δ > 0: conjugate to a boost generator.
    AType,
}

impl SubgroupClass {
    pub fn label(self) -> &'static str {
        match self {
            SubgroupClass::KType => "K-type",
            SubgroupClass::NType => "N-type",
            SubgroupClass::AType => "A-type",
        }
    }

    /// The canonical generator `[[0, 1], [σ, 0]]` of the class, with
    /// σ = −1, 0, +1 for K, N, A.
    pub fn standard_generator<S: Scalar>(self) -> LieElem<S> {
        let c = match self {
            SubgroupClass::KType => -S::one(),
            SubgroupClass::NType => S::zero(),
            SubgroupClass::AType => S::one(),
        };
        LieElem::from_parts(S::zero(), S::one(), c)
    }
}

pub fn classify<S: Scalar>(x: &LieElem<S>) -> Result<SubgroupClass> {
    if x.is_zero() {
        return Err(Error::ZeroElement);
    }
    let delta = x.delta();
    Ok(if delta.is_zero() {
        SubgroupClass::NType
    } else if delta.is_positive() {
        SubgroupClass::AType
    } else {
        SubgroupClass::KType
    })
}

/// Finds S in SL(2,R) and a standard generator G (the class generator up to
/// sign) with S·G·S⁻¹ = λX for some λ > 0. The sign on G is unavoidable: the
/// elliptic and nilpotent generator rays are not conjugate to their negatives
/// inside SL(2,R).
pub fn conjugate_to_standard<S: Scalar>(
    x: &LieElem<S>,
) -> Result<(SL2Elem<S>, LieElem<S>)> {
    let class = classify(x)?;
    let (a, b, c) = (x.mat().a.clone(), x.mat().b.clone(), x.mat().c.clone());

    // Fast path: X is already a multiple of the standard generator.
    if a.is_zero() {
        let std_mult = match class {
            SubgroupClass::KType => (c.clone() == -b.clone()).then(|| b.clone()),
            SubgroupClass::NType if c.is_zero() => Some(b.clone()),
            SubgroupClass::AType => (c == b).then(|| b.clone()),
            _ => None,
        };
        if let Some(lambda) = std_mult {
            let g = class.standard_generator::<S>();
            let std = if lambda.is_positive() { g } else { g.neg() };
            return Ok((SL2Elem::identity(), std));
        }
    }

    let sqrt = |v: S| v.try_sqrt().ok_or(Error::NotExactlyRepresentable);

    match class {
        SubgroupClass::KType => {
            // Basis (Xe₁/μ, e₁) turns X into ±μ·G_K; c ≠ 0 for K-type.
            let mu = sqrt(-x.delta())?;
            let u1 = (a.clone() / mu.clone(), c.clone() / mu.clone());
            let flip = c.is_positive();
            let (p, q) = if flip { (-u1.0, -u1.1) } else { u1 };
            let m = Mat2::new(p, S::one(), q, S::zero());
            let s = sqrt(m.det())?;
            let g = class.standard_generator::<S>();
            let std = if flip { g.neg() } else { g };
            Ok((SL2Elem::from_mat_unchecked(m.scale(&(S::one() / s))), std))
        }
        SubgroupClass::AType => {
            let mu = sqrt(x.delta())?;
            // Eigenvectors of X for ±μ.
            let (vp, mut vm) = if !b.is_zero() {
                (
                    (b.clone(), mu.clone() - a.clone()),
                    (b.clone(), -mu.clone() - a.clone()),
                )
            } else if !c.is_zero() {
                (
                    (mu.clone() + a.clone(), c.clone()),
                    (a.clone() - mu.clone(), c.clone()),
                )
            } else if a.is_positive() {
                ((S::one(), S::zero()), (S::zero(), S::one()))
            } else {
                ((S::zero(), S::one()), (S::one(), S::zero()))
            };
            // Orient the eigenbasis before pairing it with (1, ±1).
            let det_p = vp.0.clone() * vm.1.clone() - vp.1.clone() * vm.0.clone();
            if det_p.is_positive() {
                vm = (-vm.0, -vm.1);
            }
            // S sends the G_A eigenvectors (1, ±1) onto (vp, vm).
            let half = S::ratio(1, 2);
            let m = Mat2::new(
                (vp.0.clone() + vm.0.clone()) * half.clone(),
                (vp.0 - vm.0) * half.clone(),
                (vp.1.clone() + vm.1.clone()) * half.clone(),
                (vp.1 - vm.1) * half,
            );
            let s = sqrt(m.det())?;
            Ok((
                SL2Elem::from_mat_unchecked(m.scale(&(S::one() / s))),
                class.standard_generator::<S>(),
            ))
        }
        SubgroupClass::NType => {
            // The nilpotent cone splits into the two rays ±[[a,b],[c,-a]]
            // with b ≥ 0; conjugation reaches only the matching ray.
            let plus_ray = b.is_positive() || (b.is_zero() && c.is_negative());
            let (ta, tb, tc) = if plus_ray {
                (a, b, c)
            } else {
                (-a, -b, -c)
            };
            let m = if !tb.is_zero() {
                let p = sqrt(tb.clone())?;
                Mat2::new(p.clone(), S::zero(), -ta / p.clone(), S::one() / p)
            } else {
                // ta = 0 and tc < 0 on this ray.
                let q = sqrt(-tc)?;
                Mat2::new(S::zero(), -S::one() / q.clone(), q, S::zero())
            };
            let g = class.standard_generator::<S>();
            let std = if plus_ray { g } else { g.neg() };
            Ok((SL2Elem::from_mat_unchecked(m), std))
        }
    }
}

/// The basis A = ½[[−1,0],[0,1]], B = ½[[0,1],[1,0]], Z = [[0,1],[−1,0]]
/// with [Z,A] = 2B, [Z,B] = −2A, [A,B] = −½Z.
pub fn basis_abz<S: Scalar>() -> (LieElem<S>, LieElem<S>, LieElem<S>) {
    let half = S::ratio(1, 2);
    (
        LieElem::from_parts(-half.clone(), S::zero(), S::zero()),
        LieElem::from_parts(S::zero(), half.clone(), half),
        LieElem::from_parts(S::zero(), S::one(), -S::one()),
    )
}
