//! Characters of the one-dimensional subgroups and the representations they
//! induce on functions over the half-plane.
//!
//! The K-induced family acts on complex-valued functions with the unit
//! multiplier `|cw+d|^k/(cw+d)^k`. The N′-induced family comes in three
//! flavors sharing one Möbius action on dual-number points but differing in
//! how the factor `s = τcv/(cu+d)` touches the value:
//!
//! * complex values, multiplied by `e^{is}`;
//! * dual-number values, multiplied by `1 + εs`;
//! * dual-number values, moved by the exotic parabolic rotation with
//!   parameter `s` (an affine map, not a multiplication).
//!
//! All entries `(a, b, c, d)` in the formulas above are those of `g⁻¹`.
//!
//! [`inner_product`] integrates `f1·conj(f2) du dv/v²` by the midpoint rule,
//! choosing the flavor's notion of conjugation and multiplication, and
//! [`unitarity_defect`] measures how far a group element is from acting
//! unitarily, together with an empirical quadrature-error estimate from one
//! grid refinement.

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::homogeneous::HalfPlanePoint;
use crate::hypercomplex::{HNum, Sigma};
use crate::scalar::Scalar;
use crate::sl2::{close_to, SL2Elem};

/// How an N′ character (and the representation it induces) treats values.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NprimeFlavor {
    /// Values in the complex numbers, multiplier `e^{is}`.
    Complex,
    /// Values in the dual numbers, multiplier `1 + εs`.
    ParabAlgebraic,
    /// Values in the dual numbers, moved by the exotic rotation with
    /// parameter `s`.
    ParabGeometric,
}

impl NprimeFlavor {
    /// The algebra the function values live in.
    pub fn value_sigma(self) -> Sigma {
        match self {
            NprimeFlavor::Complex => Sigma::Elliptic,
            NprimeFlavor::ParabAlgebraic | NprimeFlavor::ParabGeometric => Sigma::Parabolic,
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            NprimeFlavor::Complex => "complex",
            NprimeFlavor::ParabAlgebraic => "parabolic-algebraic",
            NprimeFlavor::ParabGeometric => "parabolic-geometric",
        }
    }
}

/// A character of K or N′. K carries only the complex characters
/// `K(t) ↦ e^{−ikt}`, so the integer label lives directly in that variant.
#[derive(Debug, Clone, PartialEq)]
pub enum CharacterSpec<S: Scalar> {
    K { k: i64 },
    Nprime { flavor: NprimeFlavor, tau: S },
}

/// Character value at a subgroup element.
///
/// For `K(t)` this is `e^{−ikt}`, read off the matrix as `(a − ib)^k`
/// without evaluating `t` itself. For `N′(t)` it is `e^{iτt}`, `1 + ετt`,
/// or the unit-norm parabolic vector with argument `τt` (which composes
/// under the exotic product), depending on the flavor.
pub fn chi<S: Scalar>(spec: &CharacterSpec<S>, h: &SL2Elem<S>) -> Result<HNum<S>> {
    let m = h.mat();
    match spec {
        CharacterSpec::K { k } => {
            if !(close_to(&m.a, &m.d) && close_to(&m.b, &(-m.c.clone()))) {
                return Err(Error::NotInSubgroup);
            }
            let unit = HNum::new(m.a.clone(), -m.b.clone(), Sigma::Elliptic);
            if *k >= 0 {
                Ok(unit.pow(*k as u32))
            } else {
                Ok(unit.conj().pow((-*k) as u32))
            }
        }
        CharacterSpec::Nprime { flavor, tau } => {
            let one = S::one();
            if !(close_to(&m.a, &one) && close_to(&m.d, &one) && close_to(&m.b, &S::zero())) {
                return Err(Error::NotInSubgroup);
            }
            let t = tau.clone() * m.c.clone();
            match flavor {
                NprimeFlavor::Complex => {
                    let (c, s) = t.try_cos_sin().ok_or(Error::NotExactlyRepresentable)?;
                    Ok(HNum::new(c, s, Sigma::Elliptic))
                }
                NprimeFlavor::ParabAlgebraic => Ok(HNum::new(S::one(), t, Sigma::Parabolic)),
                NprimeFlavor::ParabGeometric => {
                    let sq = t.clone() * t.clone();
                    Ok(HNum::new(t, sq - S::one(), Sigma::Parabolic))
                }
            }
        }
    }
}

/// A closed coordinate rectangle in the half-plane, `v_min > 0`.
#[derive(Debug, Clone, PartialEq)]
pub struct Rect<S: Scalar> {
    pub u_min: S,
    pub u_max: S,
    pub v_min: S,
    pub v_max: S,
}

impl<S: Scalar> Rect<S> {
    pub fn new(u_min: S, u_max: S, v_min: S, v_max: S) -> Result<Self> {
        if !(u_min < u_max && v_min < v_max) || !v_min.is_positive() {
            return Err(Error::DomainError("rectangle needs u_min < u_max and 0 < v_min < v_max"));
        }
        Ok(Rect { u_min, u_max, v_min, v_max })
    }

    pub fn contains(&self, w: &HalfPlanePoint<S>) -> bool {
        self.u_min <= w.u && w.u <= self.u_max && self.v_min <= w.v && w.v <= self.v_max
    }

    /// Whether this rectangle lies inside `outer`.
    pub fn within(&self, outer: &Rect<S>) -> bool {
        outer.u_min <= self.u_min
            && self.u_max <= outer.u_max
            && outer.v_min <= self.v_min
            && self.v_max <= outer.v_max
    }
}

/// A function on the half-plane given by a black-box evaluation rule, the
/// algebra of its values, and (when compactly supported) a declared support
/// rectangle. The rule must return finite values on the support; outside it
/// may return whatever the defining formula produces.
#[derive(Clone)]
pub struct SampledFunction<S: Scalar> {
    rule: Arc<dyn Fn(&HalfPlanePoint<S>) -> HNum<S> + Send + Sync>,
    pub support: Option<Rect<S>>,
    pub value_sigma: Sigma,
}

impl<S: Scalar> SampledFunction<S> {
    pub fn new<F>(value_sigma: Sigma, support: Option<Rect<S>>, rule: F) -> Self
    where
        F: Fn(&HalfPlanePoint<S>) -> HNum<S> + Send + Sync + 'static,
    {
        SampledFunction { rule: Arc::new(rule), support, value_sigma }
    }

    pub fn value_at(&self, w: &HalfPlanePoint<S>) -> HNum<S> {
        (self.rule)(w)
    }
}

impl<S: Scalar> fmt::Debug for SampledFunction<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SampledFunction")
            .field("support", &self.support)
            .field("value_sigma", &self.value_sigma)
            .finish_non_exhaustive()
    }
}

/// The K-eigenfunction `f_k(w) = |w−i|^k / (w−i)^k`, complex-valued and
/// supported on the whole half-plane. Returns zero at the singular point
/// `w = i` itself.
pub fn f_k(k: i64) -> Result<SampledFunction<f64>> {
    if k < 1 {
        return Err(Error::DomainError("f_k needs k >= 1"));
    }
    let k = k as u32;
    Ok(SampledFunction::new(Sigma::Elliptic, None, move |w| {
        let m = HNum::new(w.u, w.v - 1.0, Sigma::Elliptic);
        let msq = m.modulus_sq();
        if msq == 0.0 {
            return HNum::zero(Sigma::Elliptic);
        }
        // |m|^k / m^k = (conj m / |m|)^k.
        m.conj().scale(&(1.0 / msq.sqrt())).pow(k)
    }))
}

/// A smooth compactly supported bump: a product of squared cosines in `u`
/// and `v`, scaled into the two components as `(amp_re·P, amp_im·P²)` so
/// they carry different profiles.
pub fn cos_bump(sigma: Sigma, rect: Rect<f64>, amp_re: f64, amp_im: f64) -> SampledFunction<f64> {
    let r = rect.clone();
    SampledFunction::new(sigma, Some(rect), move |w| {
        if !r.contains(w) {
            return HNum::zero(sigma);
        }
        let hu = (std::f64::consts::PI * (w.u - 0.5 * (r.u_min + r.u_max)) / (r.u_max - r.u_min))
            .cos();
        let hv = (std::f64::consts::PI * (w.v - 0.5 * (r.v_min + r.v_max)) / (r.v_max - r.v_min))
            .cos();
        let p = hu * hu * hv * hv;
        HNum::new(amp_re * p, amp_im * p * p, sigma)
    })
}

/// The characteristic function of a rectangle.
pub fn indicator_bump(sigma: Sigma, rect: Rect<f64>) -> SampledFunction<f64> {
    let r = rect.clone();
    SampledFunction::new(sigma, Some(rect), move |w| {
        if r.contains(w) {
            HNum::one(sigma)
        } else {
            HNum::zero(sigma)
        }
    })
}

/// K-induced action on a complex-valued function:
/// `ρ_k(g)f(w) = (|cw+d|^k/(cw+d)^k) · f((aw+b)/(cw+d))` with `(a,b,c,d)`
/// the entries of `g⁻¹`. The multiplier has unit modulus; [`f_k`] is an
/// eigenfunction of every `ρ_k(K(t))`, with eigenvalue `e^{ikt}` (the
/// character of `K(t)⁻¹`).
pub fn rep_k<S: Scalar>(
    k: i64,
    g: &SL2Elem<S>,
    f: &SampledFunction<S>,
    w: &HalfPlanePoint<S>,
) -> Result<HNum<S>> {
    if k < 1 {
        return Err(Error::DomainError("rep_k needs k >= 1"));
    }
    if f.value_sigma != Sigma::Elliptic {
        return Err(Error::FlavorMismatch);
    }
    if !w.v.is_positive() {
        return Err(Error::DomainError("rep_k needs an interior point"));
    }
    let [a, b, c, d] = g.inverse().mat().entries();
    let wc = HNum::new(w.u.clone(), w.v.clone(), Sigma::Elliptic);
    let m = HNum::new(c.clone() * w.u.clone() + d, c * w.v.clone(), Sigma::Elliptic);
    let msq = m.modulus_sq();
    if msq.is_zero() {
        return Err(Error::IdealPoint);
    }
    let modulus = msq.try_sqrt().ok_or(Error::NotExactlyRepresentable)?;
    let mult = m.conj().scale(&(S::one() / modulus)).pow(k as u32);
    let num = wc.scale(&a).add(&HNum::from_real(b, Sigma::Elliptic))?;
    let image = num.div(&m)?;
    let value = f.value_at(&HalfPlanePoint::new(image.re, image.im));
    mult.mul(&value)
}

/// Applies the flavor's multiplier with parameter `s` to a function value.
fn nprime_value<S: Scalar>(flavor: NprimeFlavor, s: S, base: HNum<S>) -> Result<HNum<S>> {
    match flavor {
        NprimeFlavor::Complex => {
            let (c, sn) = s.try_cos_sin().ok_or(Error::NotExactlyRepresentable)?;
            HNum::new(c, sn, Sigma::Elliptic).mul(&base)
        }
        NprimeFlavor::ParabAlgebraic => {
            HNum::new(S::one(), s, Sigma::Parabolic).mul(&base)
        }
        NprimeFlavor::ParabGeometric => {
            let two_s = s.clone() + s.clone();
            let im = base.im.clone() + two_s * base.re.clone() + s.clone() * s.clone();
            Ok(HNum::new(base.re.clone() + s, im, Sigma::Parabolic))
        }
    }
}

fn nprime_at<S: Scalar>(
    flavor: NprimeFlavor,
    tau: &S,
    inv: &[S; 4],
    f: &SampledFunction<S>,
    w: &HalfPlanePoint<S>,
) -> Result<HNum<S>> {
    let [a, b, c, d] = inv.clone();
    let den = c.clone() * w.u.clone() + d;
    if den.is_zero() {
        return Err(Error::IdealPoint);
    }
    let s = tau.clone() * c * w.v.clone() / den.clone();
    let image = HalfPlanePoint::new(
        (a * w.u.clone() + b) / den.clone(),
        w.v.clone() / (den.clone() * den),
    );
    nprime_value(flavor, s, f.value_at(&image))
}

/// N′-induced action. The domain always moves by the dual-number Möbius map
/// `w ↦ (aw+b)/(cw+d)`, i.e. `(u,v) ↦ ((au+b)/(cu+d), v/(cu+d)²)`, with
/// `(a,b,c,d)` the entries of `g⁻¹`; the value is then touched by the
/// flavor's multiplier with parameter `s = τcv/(cu+d)`.
pub fn rep_nprime<S: Scalar>(
    flavor: NprimeFlavor,
    tau: &S,
    g: &SL2Elem<S>,
    f: &SampledFunction<S>,
    w: &HalfPlanePoint<S>,
) -> Result<HNum<S>> {
    if f.value_sigma != flavor.value_sigma() {
        return Err(Error::FlavorMismatch);
    }
    let inv = g.inverse().mat().entries();
    nprime_at(flavor, tau, &inv, f, w)
}

/// The transported function `ρ(g)f` as a new [`SampledFunction`], with its
/// support rectangle mapped forward by `g`.
///
/// Fails with [`Error::SupportEscaped`] when the image of the support is not
/// a rectangle in the chart (a pole of the Möbius map meets the support).
/// Where the defining formula has no value (the single line `cu+d = 0`,
/// always outside the transported support) the rule returns zero.
pub fn rep_nprime_fn(
    flavor: NprimeFlavor,
    tau: f64,
    g: &SL2Elem<f64>,
    f: &SampledFunction<f64>,
) -> Result<SampledFunction<f64>> {
    if f.value_sigma != flavor.value_sigma() {
        return Err(Error::FlavorMismatch);
    }
    let support = match &f.support {
        None => None,
        Some(r) => {
            // Forward image under g: u' = (au+b)/(cu+d) is monotone in u and
            // v' = v/(cu+d)², so a sign-constant denominator maps the
            // rectangle onto a rectangle spanned by the corner images.
            let [a, b, c, d] = g.mat().entries();
            let den0 = c * r.u_min + d;
            let den1 = c * r.u_max + d;
            if den0 * den1 <= 0.0 {
                return Err(Error::SupportEscaped);
            }
            let u0 = (a * r.u_min + b) / den0;
            let u1 = (a * r.u_max + b) / den1;
            let dsq_min = (den0 * den0).min(den1 * den1);
            let dsq_max = (den0 * den0).max(den1 * den1);
            Some(Rect::new(
                u0.min(u1),
                u0.max(u1),
                r.v_min / dsq_max,
                r.v_max / dsq_min,
            )?)
        }
    };
    let inv = g.inverse().mat().entries();
    let f = f.clone();
    let sigma = f.value_sigma;
    Ok(SampledFunction::new(sigma, support, move |w| {
        nprime_at(flavor, &tau, &inv, &f, w).unwrap_or_else(|_| HNum::zero(sigma))
    }))
}

/// Midpoint quadrature grid over a rectangle, serializable as JSON.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct QuadratureSpec {
    pub u_min: f64,
    pub u_max: f64,
    pub v_min: f64,
    pub v_max: f64,
    pub nu: usize,
    pub nv: usize,
}

impl QuadratureSpec {
    pub fn validate(&self) -> Result<()> {
        if !(self.v_min > 0.0) {
            return Err(Error::DomainError("quadrature grid needs v_min > 0"));
        }
        if !(self.u_min < self.u_max && self.v_min < self.v_max) {
            return Err(Error::DomainError("quadrature grid needs a nonempty rectangle"));
        }
        if self.nu == 0 || self.nv == 0 {
            return Err(Error::DomainError("quadrature grid needs at least one cell"));
        }
        Ok(())
    }

    pub fn rect(&self) -> Result<Rect<f64>> {
        Rect::new(self.u_min, self.u_max, self.v_min, self.v_max)
    }

    /// The same rectangle with twice as many cells in each direction.
    pub fn refined(&self) -> Self {
        QuadratureSpec { nu: self.nu * 2, nv: self.nv * 2, ..*self }
    }
}

/// The invariant pairing `∫ f1 · conj(f2) du dv / v²` by the midpoint rule,
/// with conjugation and multiplication taken in the flavor's algebra (the
/// exotic parabolic product for the geometric flavor).
///
/// Cells outside both declared supports are skipped: there the integrand is
/// exactly zero, including for the geometric flavor, whose value tails
/// outside a transported support are norm-zero vectors that annihilate each
/// other under the exotic product.
pub fn inner_product(
    f1: &SampledFunction<f64>,
    f2: &SampledFunction<f64>,
    flavor: NprimeFlavor,
    grid: &QuadratureSpec,
) -> Result<HNum<f64>> {
    grid.validate()?;
    let sigma = flavor.value_sigma();
    if f1.value_sigma != sigma || f2.value_sigma != sigma {
        return Err(Error::FlavorMismatch);
    }
    let outer = grid.rect()?;
    let mut supports = [None, None];
    for (slot, f) in supports.iter_mut().zip([f1, f2]) {
        let r = f
            .support
            .as_ref()
            .ok_or(Error::DomainError("inner product needs compactly supported functions"))?;
        if !r.within(&outer) {
            return Err(Error::DomainError("support must lie inside the quadrature grid"));
        }
        *slot = Some(r.clone());
    }
    let [s1, s2] = supports.map(|r| r.unwrap());

    let du = (grid.u_max - grid.u_min) / grid.nu as f64;
    let dv = (grid.v_max - grid.v_min) / grid.nv as f64;
    let mut acc_re = 0.0;
    let mut acc_im = 0.0;
    for j in 0..grid.nv {
        let v = grid.v_min + (j as f64 + 0.5) * dv;
        let cell = du * dv / (v * v);
        for i in 0..grid.nu {
            let u = grid.u_min + (i as f64 + 0.5) * du;
            let w = HalfPlanePoint::new(u, v);
            if !s1.contains(&w) && !s2.contains(&w) {
                continue;
            }
            let z1 = f1.value_at(&w);
            let z2 = f2.value_at(&w);
            let (tre, tim) = match flavor {
                NprimeFlavor::Complex => (
                    z1.re * z2.re + z1.im * z2.im,
                    z1.im * z2.re - z1.re * z2.im,
                ),
                NprimeFlavor::ParabAlgebraic => {
                    (z1.re * z2.re, z1.im * z2.re - z1.re * z2.im)
                }
                NprimeFlavor::ParabGeometric => {
                    // pmul(z1, pconj z2) in affine coordinates: arguments
                    // subtract, norms multiply.
                    let p = z1.re - z2.re;
                    let n1 = z1.re * z1.re - z1.im;
                    let n2 = z2.re * z2.re - z2.im;
                    (p, p * p - n1 * n2)
                }
            };
            acc_re += tre * cell;
            acc_im += tim * cell;
        }
    }
    Ok(HNum::new(acc_re, acc_im, sigma))
}

/// Result of a unitarity check: the pairing before and after transporting
/// both functions by `g`, their distance, and an empirical quadrature-error
/// estimate (the larger change of either pairing under one grid refinement).
#[derive(Debug, Clone, PartialEq)]
pub struct UnitarityReport {
    pub base: HNum<f64>,
    pub transported: HNum<f64>,
    pub defect: f64,
    pub quad_error: f64,
}

fn component_gap(x: &HNum<f64>, y: &HNum<f64>) -> f64 {
    (x.re - y.re).abs().max((x.im - y.im).abs())
}

/// Compares `⟨ρ(g)f1, ρ(g)f2⟩` with `⟨f1, f2⟩` for an N′-induced
/// representation. The defect of an exactly unitary action is pure
/// quadrature noise, so callers should judge `defect` against `quad_error`
/// rather than an absolute constant.
pub fn unitarity_defect(
    spec: &CharacterSpec<f64>,
    g: &SL2Elem<f64>,
    f1: &SampledFunction<f64>,
    f2: &SampledFunction<f64>,
    grid: &QuadratureSpec,
) -> Result<UnitarityReport> {
    let (flavor, tau) = match spec {
        CharacterSpec::Nprime { flavor, tau } => (*flavor, *tau),
        CharacterSpec::K { .. } => {
            return Err(Error::DomainError(
                "unitarity check covers the N-prime induced representations",
            ))
        }
    };
    let tf1 = rep_nprime_fn(flavor, tau, g, f1)?;
    let tf2 = rep_nprime_fn(flavor, tau, g, f2)?;
    let outer = grid.rect()?;
    for tf in [&tf1, &tf2] {
        match &tf.support {
            Some(r) if r.within(&outer) => {}
            _ => return Err(Error::SupportEscaped),
        }
    }
    let base = inner_product(f1, f2, flavor, grid)?;
    let transported = inner_product(&tf1, &tf2, flavor, grid)?;
    let fine = grid.refined();
    let base_fine = inner_product(f1, f2, flavor, &fine)?;
    let transported_fine = inner_product(&tf1, &tf2, flavor, &fine)?;
    Ok(UnitarityReport {
        defect: component_gap(&transported, &base),
        quad_error: component_gap(&base_fine, &base).max(component_gap(&transported_fine, &transported)),
        base,
        transported,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dualalg::{Coords, Flavor, PVec};
    use crate::sampling;
    use crate::scalar::{rat, Rat};
    use crate::sl2::{subgroup_element, SubgroupKind};

    fn k_elem(t: f64) -> SL2Elem<f64> {
        subgroup_element(SubgroupKind::K, &t).unwrap()
    }

    fn nprime_elem<S: Scalar>(t: S) -> SL2Elem<S> {
        subgroup_element(SubgroupKind::NPrime, &t).unwrap()
    }

    #[test]
    fn k_character_values() {
        let spec = CharacterSpec::K { k: 2 };
        let at_pi = chi(&spec, &k_elem(std::f64::consts::PI)).unwrap();
        assert!((at_pi.re - 1.0).abs() < 1e-12 && at_pi.im.abs() < 1e-12);

        let t = 0.37;
        let v = chi(&CharacterSpec::K { k: 3 }, &k_elem(t)).unwrap();
        assert!((v.re - (3.0 * t).cos()).abs() < 1e-12);
        assert!((v.im + (3.0 * t).sin()).abs() < 1e-12);

        let inv = chi(&CharacterSpec::K { k: -3 }, &k_elem(t)).unwrap();
        let prod = v.mul(&inv).unwrap();
        assert!((prod.re - 1.0).abs() < 1e-12 && prod.im.abs() < 1e-12);
    }

    #[test]
    fn nprime_character_values_and_inverses() {
        let tau = rat(2, 3);
        let spec = CharacterSpec::Nprime { flavor: NprimeFlavor::ParabAlgebraic, tau: tau.clone() };
        let h = nprime_elem(rat(5, 7));
        let v = chi(&spec, &h).unwrap();
        assert_eq!(v, HNum::new(rat(1, 1), rat(10, 21), Sigma::Parabolic));
        let vi = chi(&spec, &h.inverse()).unwrap();
        assert_eq!(v.mul(&vi).unwrap(), HNum::one(Sigma::Parabolic));

        let gspec = CharacterSpec::Nprime { flavor: NprimeFlavor::ParabGeometric, tau };
        let gv = chi(&gspec, &h).unwrap();
        assert_eq!(gv, HNum::new(rat(10, 21), rat(100, 441) - rat(1, 1), Sigma::Parabolic));
    }

    #[test]
    fn characters_reject_foreign_elements() {
        let g = subgroup_element(SubgroupKind::N, &1.5).unwrap();
        assert_eq!(chi(&CharacterSpec::K { k: 1 }, &g), Err(Error::NotInSubgroup));
        let spec = CharacterSpec::Nprime { flavor: NprimeFlavor::Complex, tau: 1.0 };
        assert_eq!(chi(&spec, &k_elem(0.3)), Err(Error::NotInSubgroup));
    }

    #[test]
    fn character_multiplicativity() {
        let t1 = 0.8;
        let t2 = -1.7;
        for k in [1i64, 2, 5] {
            let spec = CharacterSpec::K { k };
            let lhs = chi(&spec, &k_elem(t1 + t2)).unwrap();
            let rhs = chi(&spec, &k_elem(t1)).unwrap().mul(&chi(&spec, &k_elem(t2)).unwrap()).unwrap();
            assert!((lhs.re - rhs.re).abs() < 1e-12 && (lhs.im - rhs.im).abs() < 1e-12);
        }

        let tau = rat(3, 2);
        let (r1, r2) = (rat(1, 3), rat(-4, 5));
        for flavor in [NprimeFlavor::ParabAlgebraic, NprimeFlavor::ParabGeometric] {
            let spec = CharacterSpec::Nprime { flavor, tau: tau.clone() };
            let lhs = chi(&spec, &nprime_elem(r1.clone() + r2.clone())).unwrap();
            let a = chi(&spec, &nprime_elem(r1.clone())).unwrap();
            let b = chi(&spec, &nprime_elem(r2.clone())).unwrap();
            let rhs = match flavor {
                NprimeFlavor::ParabAlgebraic => a.mul(&b).unwrap(),
                _ => {
                    let pa = PVec::affine(Flavor::N, a.re.clone(), a.im.clone());
                    let pb = PVec::affine(Flavor::N, b.re.clone(), b.im.clone());
                    match pa.pmul(&pb).unwrap().coords {
                        Coords::Affine { u, v } => HNum::new(u, v, Sigma::Parabolic),
                        Coords::HomPolar { .. } => unreachable!("N products stay affine"),
                    }
                }
            };
            assert_eq!(lhs, rhs, "{} character should compose", flavor.label());
        }
    }

    #[test]
    fn geometric_character_is_unit_norm() {
        let spec = CharacterSpec::Nprime { flavor: NprimeFlavor::ParabGeometric, tau: rat(4, 3) };
        let v = chi(&spec, &nprime_elem(rat(7, 5))).unwrap();
        assert_eq!(v.re.clone() * v.re.clone() - v.im.clone(), rat(1, 1));
    }

    #[test]
    fn identity_acts_trivially_in_every_model() {
        let f = f_k(2).unwrap();
        let w = HalfPlanePoint::new(0.4, 1.7);
        let id = SL2Elem::identity();
        let v = rep_k(2, &id, &f, &w).unwrap();
        assert_eq!(v, f.value_at(&w));

        let bump = cos_bump(
            Sigma::Parabolic,
            Rect::new(-1.0, 1.0, 0.5, 2.0).unwrap(),
            1.0,
            0.7,
        );
        for flavor in [NprimeFlavor::ParabAlgebraic, NprimeFlavor::ParabGeometric] {
            let v = rep_nprime(flavor, &0.9, &id, &bump, &w).unwrap();
            assert_eq!(v, bump.value_at(&w));
        }
        let cbump = cos_bump(Sigma::Elliptic, Rect::new(-1.0, 1.0, 0.5, 2.0).unwrap(), 1.0, 0.7);
        let v = rep_nprime(NprimeFlavor::Complex, &0.9, &id, &cbump, &w).unwrap();
        assert_eq!(v, cbump.value_at(&w));
    }

    #[test]
    fn upper_triangular_elements_translate_the_domain_only() {
        // c stays zero in the inverse, so the multiplier parameter vanishes
        // and only the Möbius shift of the domain remains.
        let g = SL2Elem::from_mat_unchecked(crate::sl2::Mat2::new(2.0, 0.6, 0.0, 0.5));
        let bump = cos_bump(Sigma::Parabolic, Rect::new(-8.0, 8.0, 0.1, 9.0).unwrap(), 1.0, -0.4);
        let w = HalfPlanePoint::new(0.3, 1.2);
        // g⁻¹ = [[1/2, −3/5], [0, 2]] sends w to ((u/2 − 3/5)/2, v/4).
        let moved = HalfPlanePoint::new((0.5 * w.u - 0.6) / 2.0, w.v / 4.0);
        let expect = bump.value_at(&moved);
        assert!(expect.re != 0.0);
        for flavor in [NprimeFlavor::ParabAlgebraic, NprimeFlavor::ParabGeometric] {
            let v = rep_nprime(flavor, &1.3, &g, &bump, &w).unwrap();
            assert_eq!(v, expect);
        }
    }

    #[test]
    fn k_eigenfunction_property() {
        // Every rotation acts on f_k by the scalar e^{ikt}, which is the
        // character of the inverse element.
        let ws = [
            HalfPlanePoint::new(0.7, 2.3),
            HalfPlanePoint::new(-1.4, 0.6),
            HalfPlanePoint::new(2.2, 1.1),
        ];
        for k in [1i64, 2, 5] {
            let f = f_k(k).unwrap();
            for j in 1..=12 {
                let t = -std::f64::consts::PI + j as f64 * std::f64::consts::PI / 6.0;
                let h = k_elem(t);
                let ev = chi(&CharacterSpec::K { k }, &h.inverse()).unwrap();
                for w in &ws {
                    let lhs = rep_k(k, &h, &f, w).unwrap();
                    let rhs = ev.mul(&f.value_at(w)).unwrap();
                    assert!(
                        (lhs.re - rhs.re).abs() < 1e-10 && (lhs.im - rhs.im).abs() < 1e-10,
                        "k={k} t={t}: {lhs:?} vs {rhs:?}"
                    );
                }
            }
        }
    }

    #[test]
    fn rep_k_is_a_homomorphism() {
        let mut r = sampling::rng(11);
        let f = f_k(3).unwrap();
        for _ in 0..40 {
            let g1 = sampling::float_sl2(&mut r);
            let g2 = sampling::float_sl2(&mut r);
            let w = HalfPlanePoint::new(1.1, 0.9);
            let joint = rep_k(3, &g1.mul(&g2), &f, &w).unwrap();

            let inner = f.clone();
            let g2c = g2.clone();
            let staged = SampledFunction::new(Sigma::Elliptic, None, move |p| {
                rep_k(3, &g2c, &inner, p).unwrap()
            });
            let split = rep_k(3, &g1, &staged, &w).unwrap();
            assert!(
                (joint.re - split.re).abs() < 1e-10 && (joint.im - split.im).abs() < 1e-10
            );
        }
    }

    /// The Möbius image of `w` under `g⁻¹`, or None at the pole line.
    fn dual_image<S: Scalar>(g: &SL2Elem<S>, w: &HalfPlanePoint<S>) -> Option<HalfPlanePoint<S>> {
        let [a, b, c, d] = g.inverse().mat().entries();
        let den = c * w.u.clone() + d;
        if den.is_zero() {
            return None;
        }
        Some(HalfPlanePoint::new(
            (a * w.u.clone() + b) / den.clone(),
            w.v.clone() / (den.clone() * den),
        ))
    }

    #[test]
    fn rep_nprime_is_a_homomorphism_exactly_for_parabolic_values() {
        let mut r = sampling::rng(23);
        let tau = rat(2, 5);
        let f = SampledFunction::new(Sigma::Parabolic, None, |p: &HalfPlanePoint<Rat>| {
            HNum::new(
                p.u.clone() + p.v.clone(),
                p.u.clone() * p.v.clone() - rat(1, 2),
                Sigma::Parabolic,
            )
        });
        for flavor in [NprimeFlavor::ParabAlgebraic, NprimeFlavor::ParabGeometric] {
            let mut checked = 0;
            for _ in 0..80 {
                let g1 = sampling::rational_sl2(&mut r);
                let g2 = sampling::rational_sl2(&mut r);
                let w = sampling::rational_point(&mut r);
                // Skip draws whose staging passes through a pole; the joint
                // map is then out of the chart as well or compares nothing.
                let Some(mid) = dual_image(&g1, &w) else { continue };
                if dual_image(&g2, &mid).is_none() {
                    continue;
                }
                let joint = rep_nprime(flavor, &tau, &g1.mul(&g2), &f, &w).unwrap();

                let fc = f.clone();
                let g2c = g2.clone();
                let tauc = tau.clone();
                let staged = SampledFunction::new(Sigma::Parabolic, None, move |p| {
                    rep_nprime(flavor, &tauc, &g2c, &fc, p).unwrap()
                });
                let split = rep_nprime(flavor, &tau, &g1, &staged, &w).unwrap();
                assert_eq!(joint, split, "{}", flavor.label());
                checked += 1;
            }
            assert!(checked >= 50, "too many draws skipped");
        }
    }

    #[test]
    fn rep_nprime_complex_homomorphism_within_float_tolerance() {
        let mut r = sampling::rng(31);
        let tau = 0.75;
        let f = SampledFunction::new(Sigma::Elliptic, None, |p: &HalfPlanePoint<f64>| {
            HNum::new((p.u + p.v).sin(), (p.u * p.v).cos(), Sigma::Elliptic)
        });
        let mut checked = 0;
        for _ in 0..80 {
            let g1 = sampling::float_sl2(&mut r);
            let g2 = sampling::float_sl2(&mut r);
            let w = HalfPlanePoint::new(0.3, 1.4);
            // Keep both stages away from the pole line so float error from
            // the two evaluation orders stays well under the tolerance.
            let [_, _, c1, d1] = g1.inverse().mat().entries();
            if (c1 * w.u + d1).abs() < 0.2 {
                continue;
            }
            let mid = dual_image(&g1, &w).unwrap();
            let [_, _, c2, d2] = g2.inverse().mat().entries();
            if (c2 * mid.u + d2).abs() < 0.2 {
                continue;
            }
            let joint = rep_nprime(NprimeFlavor::Complex, &tau, &g1.mul(&g2), &f, &w).unwrap();
            let fc = f.clone();
            let g2c = g2.clone();
            let staged = SampledFunction::new(Sigma::Elliptic, None, move |p| {
                rep_nprime(NprimeFlavor::Complex, &tau, &g2c, &fc, p).unwrap()
            });
            let split = rep_nprime(NprimeFlavor::Complex, &tau, &g1, &staged, &w).unwrap();
            assert!((joint.re - split.re).abs() < 1e-10 && (joint.im - split.im).abs() < 1e-10);
            checked += 1;
        }
        assert!(checked >= 40, "too many draws skipped");
    }

    #[test]
    fn multipliers_have_unit_size() {
        let mut r = sampling::rng(43);
        let ones = SampledFunction::new(Sigma::Elliptic, None, |_: &HalfPlanePoint<f64>| {
            HNum::one(Sigma::Elliptic)
        });
        for _ in 0..30 {
            let g = sampling::float_sl2(&mut r);
            let w = HalfPlanePoint::new(-0.8, 2.1);
            let v = rep_k(4, &g, &ones, &w).unwrap();
            assert!((v.modulus_sq() - 1.0).abs() < 1e-12);
        }

        // Acting on the parabolic unit vector exposes the geometric
        // multiplier itself; its exotic norm must be exactly one.
        let mut r = sampling::rng(44);
        let unit = SampledFunction::new(Sigma::Parabolic, None, |_: &HalfPlanePoint<Rat>| {
            HNum::new(rat(0, 1), rat(-1, 1), Sigma::Parabolic)
        });
        for _ in 0..30 {
            let g = sampling::rational_sl2(&mut r);
            let w = sampling::rational_point(&mut r);
            if let Ok(v) = rep_nprime(NprimeFlavor::ParabGeometric, &rat(3, 4), &g, &unit, &w) {
                assert_eq!(v.re.clone() * v.re.clone() - v.im.clone(), rat(1, 1));
            }
        }
    }

    #[test]
    fn invariant_measure_matches_jacobian() {
        // Central-difference Jacobian of the dual Möbius action against the
        // analytic density ratio v²/v′²: the action preserves du dv / v².
        let mut r = sampling::rng(57);
        let mut checked = 0;
        for _ in 0..40 {
            let g = sampling::float_sl2(&mut r);
            let [a, b, c, d] = g.inverse().mat().entries();
            let map = |u: f64, v: f64| {
                let den = c * u + d;
                ((a * u + b) / den, v / (den * den))
            };
            let (u, v) = (0.42, 1.37);
            if (c * u + d).abs() < 0.2 {
                continue;
            }
            let h = 1e-5;
            let xu = (map(u + h, v).0 - map(u - h, v).0) / (2.0 * h);
            let yu = (map(u + h, v).1 - map(u - h, v).1) / (2.0 * h);
            let xv = (map(u, v + h).0 - map(u, v - h).0) / (2.0 * h);
            let yv = (map(u, v + h).1 - map(u, v - h).1) / (2.0 * h);
            let jac = xu * yv - xv * yu;
            let vp = map(u, v).1;
            assert!((jac * v * v / (vp * vp) - 1.0).abs() < 1e-6);
            checked += 1;
        }
        assert!(checked >= 20);
    }

    #[test]
    fn indicator_pairing_converges_to_the_exact_integral() {
        let rect = Rect::new(0.0, 1.0, 1.0, 2.0).unwrap();
        let f = indicator_bump(Sigma::Elliptic, rect);
        let coarse = QuadratureSpec { u_min: 0.0, u_max: 1.0, v_min: 1.0, v_max: 2.0, nu: 40, nv: 40 };
        let fine = coarse.refined();
        let a = inner_product(&f, &f, NprimeFlavor::Complex, &coarse).unwrap();
        let b = inner_product(&f, &f, NprimeFlavor::Complex, &fine).unwrap();
        assert_eq!(a.im, 0.0);
        assert!(a.re > 0.0);
        assert!((b.re - 0.5).abs() < (a.re - 0.5).abs());
        assert!((b.re - 0.5).abs() < 1e-4);
    }

    #[test]
    fn pairing_is_conjugate_symmetric() {
        let r1 = Rect::new(-0.5, 1.0, 0.8, 2.0).unwrap();
        let r2 = Rect::new(0.0, 1.5, 1.0, 2.5).unwrap();
        let f1 = cos_bump(Sigma::Elliptic, r1, 1.0, 0.6);
        let f2 = cos_bump(Sigma::Elliptic, r2, -0.4, 1.1);
        let grid = QuadratureSpec { u_min: -1.0, u_max: 2.0, v_min: 0.5, v_max: 3.0, nu: 80, nv: 80 };
        let ab = inner_product(&f1, &f2, NprimeFlavor::Complex, &grid).unwrap();
        let ba = inner_product(&f2, &f1, NprimeFlavor::Complex, &grid).unwrap();
        assert_eq!(ab, ba.conj());
    }

    #[test]
    fn quadrature_spec_serializes_round_trip() {
        let spec = QuadratureSpec { u_min: -2.0, u_max: 2.0, v_min: 0.25, v_max: 3.0, nu: 400, nv: 400 };
        let text = serde_json::to_string(&spec).unwrap();
        assert_eq!(serde_json::from_str::<QuadratureSpec>(&text).unwrap(), spec);
        let parsed: QuadratureSpec =
            serde_json::from_str(r#"{"u_min":0,"u_max":1,"v_min":1,"v_max":2,"nu":8,"nv":8}"#)
                .unwrap();
        parsed.validate().unwrap();
    }

    #[test]
    fn identity_has_zero_unitarity_defect() {
        let rect = Rect::new(-1.0, 1.0, 0.8, 2.2).unwrap();
        let grid = QuadratureSpec { u_min: -2.0, u_max: 2.0, v_min: 0.4, v_max: 3.0, nu: 50, nv: 50 };
        for flavor in [
            NprimeFlavor::Complex,
            NprimeFlavor::ParabAlgebraic,
            NprimeFlavor::ParabGeometric,
        ] {
            let sigma = flavor.value_sigma();
            let f1 = cos_bump(sigma, rect.clone(), 1.0, 0.5);
            let f2 = cos_bump(sigma, rect.clone(), 0.7, -0.9);
            let spec = CharacterSpec::Nprime { flavor, tau: 1.2 };
            let report =
                unitarity_defect(&spec, &SL2Elem::identity(), &f1, &f2, &grid).unwrap();
            assert_eq!(report.defect, 0.0, "{}", flavor.label());
        }
    }

    #[test]
    fn near_identity_defect_is_quadrature_noise() {
        let rect = Rect::new(-1.0, 1.0, 0.8, 2.2).unwrap();
        let grid = QuadratureSpec { u_min: -2.5, u_max: 2.5, v_min: 0.3, v_max: 3.5, nu: 120, nv: 120 };
        let g = subgroup_element(SubgroupKind::NPrime, &0.1).unwrap();
        for flavor in [
            NprimeFlavor::Complex,
            NprimeFlavor::ParabAlgebraic,
            NprimeFlavor::ParabGeometric,
        ] {
            let sigma = flavor.value_sigma();
            let f1 = cos_bump(sigma, rect.clone(), 1.0, 0.5);
            let f2 = cos_bump(sigma, rect.clone(), 0.7, -0.9);
            let spec = CharacterSpec::Nprime { flavor, tau: 0.8 };
            let report = unitarity_defect(&spec, &g, &f1, &f2, &grid).unwrap();
            assert!(
                report.defect <= 4.0 * report.quad_error.max(f64::EPSILON),
                "{}: defect {} vs quad error {}",
                flavor.label(),
                report.defect,
                report.quad_error
            );
        }
    }

    #[test]
    fn escaping_support_is_detected() {
        let rect = Rect::new(-1.0, 1.0, 0.8, 2.2).unwrap();
        let f = cos_bump(Sigma::Parabolic, rect, 1.0, 0.5);
        let grid = QuadratureSpec { u_min: -2.0, u_max: 2.0, v_min: 0.4, v_max: 3.0, nu: 40, nv: 40 };
        let spec = CharacterSpec::Nprime { flavor: NprimeFlavor::ParabAlgebraic, tau: 1.0 };
        let far = subgroup_element(SubgroupKind::N, &10.0).unwrap();
        assert_eq!(
            unitarity_defect(&spec, &far, &f, &f, &grid),
            Err(Error::SupportEscaped)
        );
        // A pole of the Möbius map inside the support is also an escape.
        let pole = subgroup_element(SubgroupKind::NPrime, &5.0).unwrap();
        assert_eq!(rep_nprime_fn(NprimeFlavor::ParabAlgebraic, 1.0, &pole, &f).err(), Some(Error::SupportEscaped));
    }
}
