//! Curve data behind the two rotation figures: algebraic wheels (norm
//! level sets with straight spokes through the origin) and geometric
//! parabolic wheels (parabola families with vertical spokes).
//!
//! Every generator emits [`OrbitCurve`] records with exactly
//! [`SAMPLES_PER_CURVE`] points each, parameter windows chosen so the
//! samples stay inside the [−2, 2]² view box. The `level` field stores
//! the right-hand constant of the defining equation for orbits and the
//! angle parameter for spokes, so [`OrbitCurve::defining_residual`] can
//! replay the equation from the record alone.

use std::f64::consts::PI;
use std::fmt;
use std::io;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::hypercomplex::Sigma;

pub const SAMPLES_PER_CURVE: usize = 256;

/// Half-width of the square view box all curves are clipped to.
pub const VIEW: f64 = 2.0;

/// Which wheel picture a curve belongs to: the three algebraic rotation
/// cases and the two geometric parabolic ones.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub enum CaseLabel {
    E,
    P0,
    P,
    Pprime,
    H,
}

impl CaseLabel {
    pub fn from_sigma(sigma: Sigma) -> Self {
        match sigma {
            Sigma::Elliptic => CaseLabel::E,
            Sigma::Parabolic => CaseLabel::P0,
            Sigma::Hyperbolic => CaseLabel::H,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            CaseLabel::E => "E",
            CaseLabel::P0 => "P0",
            CaseLabel::P => "P",
            CaseLabel::Pprime => "Pprime",
            CaseLabel::H => "H",
        }
    }
}

impl fmt::Display for CaseLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub enum CurveKind {
    Orbit,
    Spoke,
    UnitCycle,
}

impl CurveKind {
    pub fn as_str(self) -> &'static str {
        match self {
            CurveKind::Orbit => "Orbit",
            CurveKind::Spoke => "Spoke",
            CurveKind::UnitCycle => "UnitCycle",
        }
    }
}

impl fmt::Display for CurveKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// One sampled curve of a figure.
///
/// Level conventions: orbits and unit cycles store the constant of their
/// defining equation (E: x²+y² = ℓ; P0: x² = ℓ; H: x²−y² = ℓ;
/// P: x²−y = ℓ; P′: x²/(y+1) = ℓ, with the leading coefficient and the
/// offset halved for curves from the geodesic-spoke variant). Spokes
/// store the rotation parameter: the angle of the ray for algebraic
/// cases, the line position u₀ for geometric ones.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OrbitCurve {
    pub case_label: CaseLabel,
    pub level: f64,
    pub samples: Vec<(f64, f64)>,
    pub kind: CurveKind,
}

/// Direction of the algebraic spoke at parameter t: the unit-cycle point
/// (cos_σ t, sin_σ t).
fn direction(case: CaseLabel, t: f64) -> (f64, f64) {
    match case {
        CaseLabel::E => (t.cos(), t.sin()),
        CaseLabel::P0 => (1.0, t),
        CaseLabel::H => (t.cosh(), t.sinh()),
        CaseLabel::P | CaseLabel::Pprime => unreachable!("geometric spokes are vertical"),
    }
}

impl OrbitCurve {
    /// Absolute residual of `(x, y)` against the defining equation.
    ///
    /// `geodesic` selects the halved parabola families of the
    /// geodesic-spoke variant; it is ignored for every other case.
    pub fn defining_residual(&self, x: f64, y: f64, geodesic: bool) -> f64 {
        match (self.kind, self.case_label) {
            (CurveKind::Spoke, CaseLabel::P | CaseLabel::Pprime) => (x - self.level).abs(),
            (CurveKind::Spoke, case) => {
                let (dx, dy) = direction(case, self.level);
                (x * dy - y * dx).abs()
            }
            (_, CaseLabel::E) => (x * x + y * y - self.level).abs(),
            (_, CaseLabel::P0) => (x * x - self.level).abs(),
            (_, CaseLabel::H) => (x * x - y * y - self.level).abs(),
            (_, CaseLabel::P) => {
                let a = if geodesic { 0.5 } else { 1.0 };
                (a * x * x - y - self.level).abs()
            }
            (_, CaseLabel::Pprime) => {
                let b = if geodesic { 0.5 } else { 1.0 };
                (x * x - self.level * (y + b)).abs()
            }
        }
    }

    pub fn max_residual(&self, geodesic: bool) -> f64 {
        self.samples
            .iter()
            .map(|&(x, y)| self.defining_residual(x, y, geodesic))
            .fold(0.0, f64::max)
    }
}

fn param_curve(
    case: CaseLabel,
    level: f64,
    kind: CurveKind,
    t0: f64,
    t1: f64,
    f: impl Fn(f64) -> (f64, f64),
) -> OrbitCurve {
    let step = (t1 - t0) / (SAMPLES_PER_CURVE - 1) as f64;
    let samples = (0..SAMPLES_PER_CURVE)
        .map(|i| f(t0 + step * i as f64))
        .collect();
    OrbitCurve { case_label: case, level, samples, kind }
}

fn circle(r: f64, kind: CurveKind) -> OrbitCurve {
    param_curve(CaseLabel::E, r * r, kind, 0.0, 2.0 * PI, |t| (r * t.cos(), r * t.sin()))
}

fn strip_lines(r: f64, kind: CurveKind) -> [OrbitCurve; 2] {
    let line = |x: f64| param_curve(CaseLabel::P0, r * r, kind, -VIEW, VIEW, move |y| (x, y));
    [line(r), line(-r)]
}

/// Both branches of x² − y² = c inside the view box; empty when the
/// branches miss the box entirely.
fn hyperbola_branches(c: f64, kind: CurveKind) -> Vec<OrbitCurve> {
    let r = c.abs().sqrt();
    let reach = 4.0 / c.abs() - 1.0;
    if reach < 0.0 {
        return Vec::new();
    }
    let s_max = reach.sqrt().asinh().min((VIEW / r).asinh());
    let branch = |sx: f64, sy: f64| {
        param_curve(CaseLabel::H, c, kind, -s_max, s_max, move |s| {
            if c > 0.0 {
                (sx * r * s.cosh(), r * s.sinh())
            } else {
                (r * s.sinh(), sy * r * s.cosh())
            }
        })
    };
    vec![branch(1.0, 1.0), branch(-1.0, -1.0)]
}

/// The parabola a·x² − y = level, widest window inside the view box.
fn parabola_concentric(a: f64, level: f64, kind: CurveKind) -> OrbitCurve {
    let x_max = ((VIEW + level) / a).max(0.0).sqrt().min(VIEW);
    param_curve(CaseLabel::P, level, kind, -x_max, x_max, |x| (x, a * x * x - level))
}

/// The parabola x²/(y + offset) = level for a positive level.
fn parabola_confocal(offset: f64, level: f64, kind: CurveKind) -> OrbitCurve {
    let x_max = (level * (VIEW + offset)).sqrt().min(VIEW);
    param_curve(CaseLabel::Pprime, level, kind, -x_max, x_max, |x| {
        (x, x * x / level - offset)
    })
}

fn ray(case: CaseLabel, angle: f64) -> OrbitCurve {
    let (dx, dy) = direction(case, angle);
    let s_max = VIEW / dx.abs().max(dy.abs());
    param_curve(case, angle, CurveKind::Spoke, 0.0, s_max, |s| (s * dx, s * dy))
}

fn vertical_spoke(case: CaseLabel, u0: f64) -> OrbitCurve {
    param_curve(case, u0, CurveKind::Spoke, -VIEW, VIEW, |y| (u0, y))
}

fn sort_curves(curves: &mut [OrbitCurve]) {
    curves.sort_by(|a, b| {
        a.case_label
            .cmp(&b.case_label)
            .then(a.level.total_cmp(&b.level))
            .then(a.kind.cmp(&b.kind))
    });
}

/// Level sets of the σ-norm x² − σy² = r² for the given wheel radii:
/// circles, vertical line pairs, or hyperbola branch pairs. Nonpositive
/// radii are skipped.
pub fn algebraic_orbits(sigma: Sigma, radii: &[f64]) -> Vec<OrbitCurve> {
    let mut out = Vec::new();
    for &r in radii.iter().filter(|r| **r > 0.0) {
        match sigma {
            Sigma::Elliptic => out.push(circle(r, CurveKind::Orbit)),
            Sigma::Parabolic => out.extend(strip_lines(r, CurveKind::Orbit)),
            Sigma::Hyperbolic => out.extend(hyperbola_branches(r * r, CurveKind::Orbit)),
        }
    }
    sort_curves(&mut out);
    out
}

/// The two geometric parabolic wheel families.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ParabolicFamily {
    /// Concentric parabolas x² − y = level.
    P,
    /// Confocal parabolas x²/(y + 1) = level.
    Pprime,
}

/// Norm level sets of the geometric parabolic wheels. For `Pprime` only
/// positive levels describe parabolas; other levels are skipped.
pub fn geometric_orbits(flavor: ParabolicFamily, levels: &[f64]) -> Vec<OrbitCurve> {
    geometric_orbits_with(flavor, levels, false)
}

/// Geodesic-spoke variant of the parabolic wheels (experimental): the
/// concentric family becomes x²/2 − y = level and the confocal one
/// x²/(y + ½) = level.
pub fn geometric_orbits_geodesic(flavor: ParabolicFamily, levels: &[f64]) -> Vec<OrbitCurve> {
    geometric_orbits_with(flavor, levels, true)
}

fn geometric_orbits_with(
    flavor: ParabolicFamily,
    levels: &[f64],
    geodesic: bool,
) -> Vec<OrbitCurve> {
    let shift = if geodesic { 0.5 } else { 1.0 };
    let mut out: Vec<OrbitCurve> = match flavor {
        ParabolicFamily::P => levels
            .iter()
            .map(|&l| parabola_concentric(shift, l, CurveKind::Orbit))
            .collect(),
        ParabolicFamily::Pprime => levels
            .iter()
            .filter(|l| **l > 0.0)
            .map(|&l| parabola_confocal(shift, l, CurveKind::Orbit))
            .collect(),
    };
    sort_curves(&mut out);
    out
}

/// Where a spoke family comes from: straight rays for the algebraic
/// wheels, vertical argument level lines for the geometric parabolic
/// ones.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SpokeFamily {
    Algebraic(Sigma),
    Geometric(ParabolicFamily),
}

/// One spoke per angle. Algebraic spokes are rays from the origin
/// through (cos_σ t, sin_σ t); geometric spokes are the vertical lines
/// u = t.
pub fn spokes(family: SpokeFamily, angles: &[f64]) -> Vec<OrbitCurve> {
    let mut out: Vec<OrbitCurve> = match family {
        SpokeFamily::Algebraic(sigma) => angles
            .iter()
            .map(|&t| ray(CaseLabel::from_sigma(sigma), t))
            .collect(),
        SpokeFamily::Geometric(flavor) => {
            let case = match flavor {
                ParabolicFamily::P => CaseLabel::P,
                ParabolicFamily::Pprime => CaseLabel::Pprime,
            };
            angles.iter().map(|&t| vertical_spoke(case, t)).collect()
        }
    };
    sort_curves(&mut out);
    out
}

const WHEEL_RADII: [f64; 4] = [0.5, 1.0, 1.5, 2.0];
const SLOPE_STEPS: [f64; 7] = [-1.2, -0.8, -0.4, 0.0, 0.4, 0.8, 1.2];

fn turn_angles() -> Vec<f64> {
    (0..12).map(|k| k as f64 * PI / 6.0).collect()
}

/// All curves of the algebraic-wheels figure: evenly spaced norm levels
/// and spokes for the three cases.
pub fn figure_rotations() -> Vec<OrbitCurve> {
    let mut out = Vec::new();
    out.extend(algebraic_orbits(Sigma::Elliptic, &WHEEL_RADII));
    out.extend(spokes(SpokeFamily::Algebraic(Sigma::Elliptic), &turn_angles()));
    out.extend(algebraic_orbits(Sigma::Parabolic, &WHEEL_RADII));
    out.extend(spokes(SpokeFamily::Algebraic(Sigma::Parabolic), &SLOPE_STEPS));
    out.extend(algebraic_orbits(Sigma::Hyperbolic, &WHEEL_RADII));
    out.extend(spokes(SpokeFamily::Algebraic(Sigma::Hyperbolic), &SLOPE_STEPS));
    sort_curves(&mut out);
    out
}

/// All curves of the geometric-wheels figure. Orbit levels follow the
/// published drawing families; `geodesic` switches the two parabolic
/// panels to their geodesic-spoke variants (experimental).
pub fn figure_geometric(geodesic: bool) -> Vec<OrbitCurve> {
    let mut out = Vec::new();

    out.extend(algebraic_orbits(Sigma::Elliptic, &[0.2, 0.4, 0.6, 0.8, 1.0]));
    out.push(circle(1.0, CurveKind::UnitCycle));
    out.extend(spokes(SpokeFamily::Algebraic(Sigma::Elliptic), &turn_angles()));

    for i in 1..=5 {
        let sq = (i * i) as f64;
        out.extend(hyperbola_branches(-0.04 * sq, CurveKind::Orbit));
        out.extend(hyperbola_branches(0.12 * sq, CurveKind::Orbit));
    }
    out.extend(hyperbola_branches(-1.0, CurveKind::UnitCycle));
    out.extend(spokes(SpokeFamily::Algebraic(Sigma::Hyperbolic), &SLOPE_STEPS));

    let shift = if geodesic { 0.5 } else { 1.0 };
    let p_levels: Vec<f64> = (0..6).map(|i| shift - 0.5 * i as f64).collect();
    out.extend(geometric_orbits_with(ParabolicFamily::P, &p_levels, geodesic));
    out.push(parabola_concentric(shift, shift, CurveKind::UnitCycle));
    out.extend(spokes(
        SpokeFamily::Geometric(ParabolicFamily::P),
        &[-1.5, -1.0, -0.5, 0.0, 0.5, 1.0, 1.5],
    ));

    let pp_levels: Vec<f64> = (0..5)
        .map(|i| 1.0 / (shift * (i * i * i) as f64 + shift))
        .collect();
    out.extend(geometric_orbits_with(ParabolicFamily::Pprime, &pp_levels, geodesic));
    out.push(parabola_confocal(shift, 1.0 / shift, CurveKind::UnitCycle));
    out.extend(spokes(
        SpokeFamily::Geometric(ParabolicFamily::Pprime),
        &[-2.0, -1.0, -2.0 / 3.0, 2.0 / 3.0, 1.0, 2.0],
    ));

    sort_curves(&mut out);
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EmitFormat {
    Csv,
    Svg,
    Json,
}

/// Renders the curve list in the requested format. Output is a pure
/// function of the input, so identical calls give identical bytes.
pub fn render(curves: &[OrbitCurve], format: EmitFormat) -> String {
    match format {
        EmitFormat::Csv => render_csv(curves),
        EmitFormat::Svg => render_svg(curves),
        EmitFormat::Json => {
            let mut s = serde_json::to_string_pretty(curves).expect("plain data serializes");
            s.push('\n');
            s
        }
    }
}

/// Writes the rendered curves to `path`.
pub fn emit(curves: &[OrbitCurve], format: EmitFormat, path: &Path) -> io::Result<()> {
    std::fs::write(path, render(curves, format))
}

fn render_csv(curves: &[OrbitCurve]) -> String {
    use fmt::Write;
    let mut out = String::from("case,level,kind,x,y\n");
    for c in curves {
        for &(x, y) in &c.samples {
            writeln!(out, "{},{},{},{},{}", c.case_label, c.level, c.kind, x, y)
                .expect("string write");
        }
    }
    out
}

fn render_svg(curves: &[OrbitCurve]) -> String {
    use fmt::Write;
    let mut out = String::from(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"-2 -2 4 4\" \
         width=\"480\" height=\"480\">\n",
    );
    for c in curves {
        let stroke = match c.kind {
            CurveKind::Orbit => "#3465a4",
            CurveKind::Spoke => "#4e9a06",
            CurveKind::UnitCycle => "#cc0000",
        };
        write!(
            out,
            "  <polyline class=\"{}\" fill=\"none\" stroke=\"{}\" stroke-width=\"0.015\" \
             points=\"",
            c.case_label, stroke
        )
        .expect("string write");
        for (i, &(x, y)) in c.samples.iter().enumerate() {
            if i > 0 {
                out.push(' ');
            }
            // SVG's y axis points down.
            write!(out, "{},{}", x, -y).expect("string write");
        }
        out.push_str("\"/>\n");
    }
    out.push_str("</svg>\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::homogeneous::{parab_rotate_n, parab_rotate_nprime, HalfPlanePoint};
    use crate::hypercomplex::HNum;
    use proptest::prelude::*;

    fn rotated(sigma: Sigma, t: f64, x: f64, y: f64) -> (f64, f64) {
        let turn = HNum::exp_unit(sigma, &t).unwrap();
        let image = turn.mul(&HNum::new(x, y, sigma)).unwrap();
        (image.re, image.im)
    }

    #[test]
    fn every_figure_sample_lies_on_its_curve() {
        for (curves, geodesic) in [
            (figure_rotations(), false),
            (figure_geometric(false), false),
            (figure_geometric(true), true),
        ] {
            for c in &curves {
                assert_eq!(c.samples.len(), SAMPLES_PER_CURVE);
                assert!(c.max_residual(geodesic) <= 1e-9, "{:?} {} {:?}", c.case_label, c.level, c.kind);
                for &(x, y) in &c.samples {
                    assert!(x.abs() <= VIEW + 1e-12 && y.abs() <= VIEW + 1e-12);
                }
            }
        }
    }

    #[test]
    fn figure_curve_counts_are_stable() {
        let fig1 = figure_rotations();
        // E: 4 orbits + 12 spokes; P0: 8 lines + 7 spokes; H: 8 branches + 7 spokes.
        assert_eq!(fig1.len(), 46);
        let fig2 = figure_geometric(false);
        // E: 5 + 1 + 12; H: 20 + 2 + 7; P: 6 + 1 + 7; P': 5 + 1 + 6.
        assert_eq!(fig2.len(), 73);
        assert_eq!(figure_geometric(true).len(), 73);
    }

    #[test]
    fn output_ordering_follows_case_then_level() {
        let fig = figure_geometric(false);
        for pair in fig.windows(2) {
            let key = |c: &OrbitCurve| (c.case_label, c.level);
            let (a, b) = (key(&pair[0]), key(&pair[1]));
            assert!(a.0 < b.0 || (a.0 == b.0 && a.1 <= b.1));
        }
    }

    #[test]
    fn unit_wheels_for_the_three_algebraic_cases() {
        let circle = &algebraic_orbits(Sigma::Elliptic, &[1.0])[0];
        assert_eq!(circle.level, 1.0);
        assert_eq!(circle.samples[0], (1.0, 0.0));
        let top = circle
            .samples
            .iter()
            .map(|&(x, y)| ((x - 0.0).powi(2) + (y - 1.0).powi(2)).sqrt())
            .fold(f64::INFINITY, f64::min);
        assert!(top < 0.05, "passes near (0, 1)");

        let strip = algebraic_orbits(Sigma::Parabolic, &[1.0]);
        assert_eq!(strip.len(), 2);
        assert!(strip.iter().any(|c| c.samples.iter().all(|s| s.0 == 1.0)));
        assert!(strip.iter().any(|c| c.samples.iter().all(|s| s.0 == -1.0)));

        let hyp = algebraic_orbits(Sigma::Hyperbolic, &[1.0]);
        assert_eq!(hyp.len(), 2);
        assert!(hyp.iter().any(|c| c.samples.iter().all(|s| s.0 > 0.0)));
        assert!(hyp.iter().any(|c| c.samples.iter().all(|s| s.0 < 0.0)));
    }

    #[test]
    fn unit_parabola_is_shared_between_the_two_families() {
        let p = geometric_orbits(ParabolicFamily::P, &[1.0]);
        let pp = geometric_orbits(ParabolicFamily::Pprime, &[1.0]);
        // x² − y = 1 and x²/(y+1) = 1 describe the same parabola and the
        // same window, so the sampled points agree exactly.
        assert_eq!(p[0].samples, pp[0].samples);
    }

    #[test]
    fn algebraic_rotations_preserve_the_levels() {
        for sigma in [Sigma::Elliptic, Sigma::Parabolic, Sigma::Hyperbolic] {
            for curve in algebraic_orbits(sigma, &[0.7, 1.3]) {
                for t in [0.3, -0.7, 1.9] {
                    for &(x, y) in curve.samples.iter().step_by(17) {
                        let (xr, yr) = rotated(sigma, t, x, y);
                        assert!(curve.defining_residual(xr, yr, false) <= 1e-9);
                    }
                }
            }
        }
    }

    #[test]
    fn moebius_rotations_preserve_the_geometric_levels() {
        for curve in geometric_orbits(ParabolicFamily::P, &[1.0, 0.0, -0.5]) {
            for t in [0.4, -0.3] {
                for &(x, y) in curve.samples.iter().step_by(23) {
                    let p = parab_rotate_n(&t, &HalfPlanePoint::new(x, y));
                    assert!(curve.defining_residual(p.u, p.v, false) <= 1e-9);
                }
            }
        }
        for curve in geometric_orbits(ParabolicFamily::Pprime, &[1.0, 0.2]) {
            for t in [0.4, -0.3] {
                for &(x, y) in curve.samples.iter().step_by(23) {
                    if (1.0 + t * x).abs() < 0.1 {
                        continue;
                    }
                    let p = parab_rotate_nprime(&t, &HalfPlanePoint::new(x, y)).unwrap();
                    assert!(curve.defining_residual(p.u, p.v, false) <= 1e-9);
                }
            }
        }
    }

    #[test]
    fn spoke_markers_rotate_onto_the_shifted_spoke() {
        // Algebraic: the unit-cycle marker of the spoke at angle s lands
        // on the spoke at angle s + t.
        for sigma in [Sigma::Elliptic, Sigma::Parabolic, Sigma::Hyperbolic] {
            let case = CaseLabel::from_sigma(sigma);
            for s in [0.0, 0.5, -0.9] {
                for t in [0.3, -1.1] {
                    let (mx, my) = direction(case, s);
                    let (xr, yr) = rotated(sigma, t, mx, my);
                    let target = ray(case, s + t);
                    assert!(target.defining_residual(xr, yr, false) <= 1e-9);
                    let (dx, dy) = direction(case, s + t);
                    assert!(xr * dx + yr * dy > 0.0, "same side of the origin");
                }
            }
        }

        // Geometric P: the vertical line u = u0 moves to u = u0 + t.
        let t = 0.8;
        let p = parab_rotate_n(&t, &HalfPlanePoint::new(0.5, 0.7));
        assert_eq!(p.u, 1.3);

        // Geometric P': positions transform as u0/(1 + t·u0), which is a
        // shift by t of the reciprocal angle parameter.
        let u0: f64 = 0.5;
        let q = parab_rotate_nprime(&t, &HalfPlanePoint::new(u0, 0.3)).unwrap();
        assert!((q.u - u0 / (1.0 + t * u0)).abs() < 1e-15);
        assert!((1.0 / q.u - (1.0 / u0 + t)).abs() < 1e-12);
    }

    #[test]
    fn positive_x_axis_spoke_at_angle_zero() {
        let spoke = &spokes(SpokeFamily::Algebraic(Sigma::Elliptic), &[0.0])[0];
        assert!(spoke.samples.iter().all(|&(x, y)| y == 0.0 && (0.0..=VIEW).contains(&x)));
        assert_eq!(spoke.samples[0], (0.0, 0.0));
        assert_eq!(spoke.samples[SAMPLES_PER_CURVE - 1], (2.0, 0.0));
    }

    #[test]
    fn csv_has_the_fixed_header_and_one_row_per_sample() {
        let curves = algebraic_orbits(Sigma::Elliptic, &[1.0]);
        let csv = render(&curves, EmitFormat::Csv);
        let mut lines = csv.lines();
        assert_eq!(lines.next(), Some("case,level,kind,x,y"));
        assert_eq!(lines.clone().count(), SAMPLES_PER_CURVE);
        assert_eq!(lines.next(), Some("E,1,Orbit,1,0"));
        assert!(csv.ends_with('\n') && !csv.contains('\r'));

        assert_eq!(render(&[], EmitFormat::Csv), "case,level,kind,x,y\n");
    }

    #[test]
    fn svg_is_one_polyline_per_curve_with_case_classes() {
        let curves = figure_rotations();
        let svg = render(&curves, EmitFormat::Svg);
        assert!(svg.starts_with("<svg"));
        assert!(svg.contains("viewBox=\"-2 -2 4 4\""));
        assert_eq!(svg.matches("<polyline").count(), curves.len());
        assert_eq!(
            svg.matches("class=\"E\"").count(),
            curves.iter().filter(|c| c.case_label == CaseLabel::E).count()
        );
        assert_eq!(render(&[], EmitFormat::Svg).matches("<polyline").count(), 0);
    }

    #[test]
    fn json_round_trips_and_rendering_is_deterministic() {
        let curves = figure_geometric(false);
        let json = render(&curves, EmitFormat::Json);
        let back: Vec<OrbitCurve> = serde_json::from_str(&json).unwrap();
        assert_eq!(back, curves);
        for format in [EmitFormat::Csv, EmitFormat::Svg, EmitFormat::Json] {
            assert_eq!(render(&curves, format), render(&curves, format));
        }
    }

    proptest! {
        #[test]
        fn random_wheel_rotations_stay_on_the_wheel(
            case in 0u8..3,
            r in 0.1f64..2.0,
            t in -2.0f64..2.0,
        ) {
            let sigma = [Sigma::Elliptic, Sigma::Parabolic, Sigma::Hyperbolic][case as usize];
            for curve in algebraic_orbits(sigma, &[r]) {
                for &(x, y) in curve.samples.iter().step_by(31) {
                    let (xr, yr) = rotated(sigma, t, x, y);
                    prop_assert!(curve.defining_residual(xr, yr, false) <= 1e-9);
                }
            }
        }
    }
}
