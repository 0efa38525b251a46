//! The group acts on the upper half-plane in three geometries at once, one
//! per number algebra. This compares the coordinate action with the
//! fractional-linear one, looks at what the Cayley transform does to each
//! compact-direction subgroup, and runs the two parabolic rotation flows.

use eph::homogeneous::{
    act_brute, act_moebius, cayley_conjugate, parab_rotate_n, parab_rotate_nprime,
    parab_rotate_nprime_ideal, HalfPlanePoint, ProjPoint,
};
use eph::sl2::{subgroup_element, SL2Elem, SubgroupKind};
use eph::{rat, Error, HMat2, Rat, Scalar, Sigma};

fn rows<S: Scalar>(m: &HMat2<S>) -> String {
    format!("[[{}, {}], [{}, {}]]", m.a, m.b, m.c, m.d)
}

fn main() -> Result<(), Error> {
    let g = SL2Elem::from_entries(rat(2, 1), rat(1, 1), rat(3, 1), rat(2, 1))?;
    let p = HalfPlanePoint::new(rat(1, 2), rat(1, 3));

    // Same element, same point, three geometries. The coordinate formula and
    // the projective formula give identical answers (exactly, over rationals).
    for sigma in [Sigma::Elliptic, Sigma::Parabolic, Sigma::Hyperbolic] {
        let q = act_brute(&g, &p, sigma)?;
        let via_proj = act_moebius(&g, &ProjPoint::embed(&p, sigma))?.affine_point()?;
        assert_eq!(q, via_proj);
        println!("sigma = {:+}: g.(1/2, 1/3) = ({}, {})", sigma.unit_square(), q.u, q.v);
    }

    // Some orbits leave the affine chart. The hyperbolic action has genuine
    // ideal points where the denominator's square modulus vanishes.
    let edge = HalfPlanePoint::new(rat(-1, 3), rat(1, 3));
    match act_brute(&g, &edge, Sigma::Hyperbolic) {
        Err(Error::IdealPoint) => println!("(-1/3, 1/3) maps to an ideal point under h-geometry"),
        other => println!("unexpected: {other:?}"),
    }

    // Cayley conjugation diagonalizes the compact direction of each geometry:
    // K over complex numbers, A' over double numbers, and it brings N to a
    // near-diagonal dual form.
    println!();
    let k = subgroup_element(SubgroupKind::K, &0.7_f64)?;
    println!("C K(0.7) C^-1   = {}", rows(&cayley_conjugate(&k, Sigma::Elliptic)?));
    let ap = subgroup_element(SubgroupKind::APrime, &0.7_f64)?;
    println!("C A'(0.7) C^-1  = {}", rows(&cayley_conjugate(&ap, Sigma::Hyperbolic)?));
    let n = subgroup_element::<Rat>(SubgroupKind::N, &rat(7, 10))?;
    println!("C N(7/10) C^-1  = {}", rows(&cayley_conjugate(&n, Sigma::Parabolic)?));

    // Parabolic rotations: the N flow slides points along parabolas v = u^2+c,
    // the N' flow rotates them around the unit parabolic cycle. Both conserve
    // their defining invariant.
    println!();
    let start = HalfPlanePoint::new(rat(1, 1), rat(3, 2));
    let mut along_n = start.clone();
    for _ in 0..4 {
        along_n = parab_rotate_n(&rat(1, 4), &along_n);
        let c = along_n.v.clone() - along_n.u.clone() * along_n.u.clone();
        print!("({}, {}) [v-u^2 = {c}]  ", along_n.u, along_n.v);
    }
    println!();
    let mut along_np = start;
    for _ in 0..4 {
        along_np = parab_rotate_nprime(&rat(1, 4), &along_np)?;
        let c = along_np.u.clone() * along_np.u.clone() / (along_np.v.clone() + rat(1, 1));
        print!("({}, {}) [u^2/(v+1) = {c}]  ", along_np.u, along_np.v);
    }
    println!();

    // The N' flow moves the point at infinite u to a finite position.
    let back = parab_rotate_nprime_ideal(&rat(1, 4))?;
    println!("ideal point after N'(1/4): ({}, {})", back.u, back.v);
    Ok(())
}
