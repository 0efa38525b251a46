//! The rotation-wheel figures: concentric orbits with spokes for the three
//! algebraic geometries, and the two parabolic wheel variants drawn by the
//! upper and lower unipotent flows. Renders each figure to SVG, CSV and JSON
//! and reports how far the sampled points stray from their defining curves.

use std::collections::BTreeMap;

use eph::orbitgen::{
    algebraic_orbits, emit, figure_geometric, figure_rotations, geometric_orbits, render,
    CurveKind, EmitFormat, ParabolicFamily,
};
use eph::Sigma;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    // Figure one: orbits of the three rotation groups with radial spokes.
    let wheels = figure_rotations();
    summarize("rotation wheels", &wheels, false);

    // Figure two: the same parabolic plane rotated by the two unipotent
    // families, once with straight spokes and once with geodesic ones.
    let straight = figure_geometric(false);
    summarize("parabolic wheels        ", &straight, false);
    let geodesic = figure_geometric(true);
    summarize("parabolic wheels (geod.)", &geodesic, true);

    // Everything emits to CSV, SVG or JSON. SVG is a quick look, CSV loads
    // into anything, JSON round-trips the full curve structure.
    let dir = std::env::temp_dir();
    for (format, file) in [
        (EmitFormat::Svg, "wheels.svg"),
        (EmitFormat::Csv, "wheels.csv"),
        (EmitFormat::Json, "wheels.json"),
    ] {
        let path = dir.join(file);
        emit(&wheels, format, &path)?;
        println!("wrote {}", path.display());
    }

    // JSON output parses back into the same curves.
    let json = render(&geodesic, EmitFormat::Json);
    let back: Vec<eph::orbitgen::OrbitCurve> = serde_json::from_str(&json)?;
    assert_eq!(back, geodesic);
    println!("JSON round-trip preserves all {} curves", back.len());

    // Individual families are available without assembling a whole figure.
    let two_orbits = algebraic_orbits(Sigma::Hyperbolic, &[0.5, 2.0]);
    for c in &two_orbits {
        let (x, y) = c.samples[10];
        println!(
            "H orbit at level {}: sample ({x:.3}, {y:.3}), x^2 - y^2 = {:.3}",
            c.level,
            x * x - y * y
        );
    }
    let parab = geometric_orbits(ParabolicFamily::P, &[1.0]);
    println!("one concentric parabola: {} samples", parab[0].samples.len());
    Ok(())
}

fn summarize(name: &str, curves: &[eph::orbitgen::OrbitCurve], geodesic: bool) {
    let mut by_kind: BTreeMap<CurveKind, usize> = BTreeMap::new();
    for c in curves {
        *by_kind.entry(c.kind).or_default() += 1;
    }
    let worst = curves
        .iter()
        .map(|c| c.max_residual(geodesic))
        .fold(0.0, f64::max);
    let parts: Vec<String> = by_kind
        .iter()
        .map(|(k, n)| format!("{n} {k}"))
        .collect();
    println!(
        "{name}: {} curves ({}), worst residual {worst:.2e}",
        curves.len(),
        parts.join(", ")
    );
}
