//! Characters of the compact-direction subgroups induce group actions on
//! functions over the half-plane. This evaluates the characters, checks the
//! standard K-eigenfunction, transports a bump function, and measures
//! unitarity of the pairing for all three lower-unipotent flavors.

use eph::induced::{
    chi, cos_bump, f_k, indicator_bump, inner_product, rep_k, rep_nprime_fn, unitarity_defect,
    CharacterSpec, NprimeFlavor, QuadratureSpec, Rect,
};
use eph::homogeneous::HalfPlanePoint;
use eph::sl2::{subgroup_element, SubgroupKind};
use eph::Error;

fn main() -> Result<(), Error> {
    // A character of K winds k times around the unit circle; characters of
    // N' come in three flavors, valued in complex or dual numbers.
    let k3 = CharacterSpec::K { k: 3 };
    let kt = subgroup_element(SubgroupKind::K, &0.5_f64)?;
    println!("{:42} = {}", "chi[k=3](K(0.5))", chi(&k3, &kt)?);
    let np = subgroup_element(SubgroupKind::NPrime, &0.8_f64)?;
    for flavor in [
        NprimeFlavor::Complex,
        NprimeFlavor::ParabAlgebraic,
        NprimeFlavor::ParabGeometric,
    ] {
        let spec = CharacterSpec::Nprime { flavor, tau: 0.5 };
        let name = format!("chi[{}, tau=1/2](N'(0.8))", flavor.label());
        println!("{name:42} = {}", chi(&spec, &np)?);
    }

    // f_k is a joint eigenfunction of the rotations: transporting it by K(t)
    // only multiplies it by the character value at K(t)^-1.
    println!();
    let f = f_k(3)?;
    let w = HalfPlanePoint::new(0.7, 1.9);
    let moved = rep_k(3, &kt, &f, &w)?;
    let eigen = chi(&k3, &kt.inverse())?;
    let expect = eigen.mul(&f.value_at(&w))?;
    println!("rho_3(K(0.5)) f_3 at (0.7, 1.9) = {moved}");
    println!("chi_3(K(-0.5)) * f_3            = {expect}");

    // Transporting a bump by a generic element moves its support rectangle
    // and rescales its values; the support image is tracked exactly.
    println!();
    let rect = Rect::new(-0.5, 0.5, 1.0, 2.0)?;
    let bump = cos_bump(NprimeFlavor::Complex.value_sigma(), rect.clone(), 1.0, 0.5);
    let g = subgroup_element(SubgroupKind::NPrime, &0.15_f64)?;
    let tf = rep_nprime_fn(NprimeFlavor::Complex, 0.4, &g, &bump)?;
    let support = tf.support.as_ref().unwrap();
    println!(
        "support [-0.5, 0.5]x[1, 2] maps to [{:.4}, {:.4}]x[{:.4}, {:.4}]",
        support.u_min, support.u_max, support.v_min, support.v_max
    );

    // The invariant pairing divides by v^2, which is exactly what the action
    // distorts; transported functions keep their inner products up to
    // quadrature noise. Judge the defect against that noise, not against an
    // absolute epsilon.
    println!();
    let grid = QuadratureSpec {
        u_min: -2.0,
        u_max: 2.0,
        v_min: 0.25,
        v_max: 4.0,
        nu: 220,
        nv: 220,
    };
    for flavor in [
        NprimeFlavor::Complex,
        NprimeFlavor::ParabAlgebraic,
        NprimeFlavor::ParabGeometric,
    ] {
        let sigma = flavor.value_sigma();
        let f1 = cos_bump(sigma, rect.clone(), 1.0, 0.5);
        let f2 = indicator_bump(sigma, Rect::new(-0.3, 0.4, 1.2, 1.8)?);
        let base = inner_product(&f1, &f2, flavor, &grid)?;
        let spec = CharacterSpec::Nprime { flavor, tau: 0.4 };
        let report = unitarity_defect(&spec, &g, &f1, &f2, &grid)?;
        println!(
            "{:20} <f1,f2> = {base}, defect {:.2e} vs quadrature error {:.2e}",
            flavor.label(),
            report.defect,
            report.quad_error
        );
    }
    Ok(())
}
