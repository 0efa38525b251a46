//! Traceless 2×2 matrices sort into three conjugacy classes, each generating
//! one of the standard one-parameter subgroups. This walks a few elements
//! through classification, conjugation to the standard generator, the matrix
//! exponential, and the Iwasawa factorization of the result.

use eph::sl2::{
    classify, commutator, conjugate_to_standard, exp_traceless, iwasawa_decompose, LieElem,
};
use eph::Error;

fn inspect(name: &str, x: &LieElem<f64>) -> Result<(), Error> {
    let class = classify(x)?;
    println!("{name}: delta = {:+.3}, class {}", x.delta(), class.label());

    let (s, generator) = conjugate_to_standard(x)?;
    let back = s.mat().mul(generator.mat()).mul(s.inverse().mat());
    let [a, b, c, _] = back.entries();
    let [xa, xb, xc, _] = x.mat().entries();
    let lambda = [a / xa, b / xb, c / xc]
        .into_iter()
        .find(|r| r.is_finite() && *r != 0.0)
        .unwrap();
    println!("  S G S^-1 = {lambda:.4} X  (lambda > 0: {})", lambda > 0.0);

    // Flow along X for a moment, then split the group element into its
    // boost, shear and rotation factors.
    let g = exp_traceless(x, &0.8)?;
    let f = iwasawa_decompose(&g)?;
    println!(
        "  exp(0.8 X) = A({:.4}) N({:.4}) K({:.4})",
        f.alpha, f.nu, f.phi
    );
    let r = f.recompose()?;
    let err = g
        .mat()
        .entries()
        .iter()
        .zip(r.mat().entries())
        .map(|(p, q)| (p - q).abs())
        .fold(0.0, f64::max);
    println!("  recomposition error {err:.2e}");
    Ok(())
}

fn main() -> Result<(), Error> {
    inspect("rotation-like  ", &LieElem::from_parts(0.3, 1.0, -2.0))?;
    inspect("shear-like     ", &LieElem::from_parts(1.0, -0.5, 2.0))?;
    inspect("boost-like     ", &LieElem::from_parts(0.2, 2.0, 1.0))?;

    // Brackets of the diagonal/anti-diagonal basis stay in the algebra, and
    // each bracket lands in a definite class of its own.
    let a = LieElem::from_parts(1.0, 0.0, 0.0);
    let b = LieElem::from_parts(0.0, 1.0, 1.0);
    let z = LieElem::from_parts(0.0, 1.0, -1.0);
    for (nm, x, y) in [("[A,B]", &a, &b), ("[A,Z]", &a, &z), ("[B,Z]", &b, &z)] {
        let k = commutator(x, y);
        let [p, q, r, _] = k.mat().entries();
        println!("{nm} = ({p:+.0}, {q:+.0}, {r:+.0})  class {}", classify(&k)?.label());
    }
    Ok(())
}
