//! Ladder operators for the three generator types. Whether a basis element X
//! admits raising and lowering operators depends on where the eigenvalues of
//! ad X are allowed to live: theta = a^2 + b^2 - 4z^2 decides, and each sign
//! of theta matches exactly one of the number algebras.

use eph::hypercomplex::HNum;
use eph::ladder::{bracket, find_y, killing_form, solve_ladder, verify_ladder, HLieVector};
use eph::{rat, Error, Rat, Sigma};

fn main() -> Result<(), Error> {
    let z = [rat(0, 1), rat(0, 1), rat(1, 1)];
    let b = [rat(0, 1), rat(1, 1), rat(0, 1)];
    let shear = [rat(0, 1), rat(1, 1), rat(-1, 2)];

    // The rotation generator has theta = -4: eigenvalues +/-2i, complex only.
    // The boost generator has theta = 1: eigenvalues +/-1 over the reals plus
    // +/-h over double numbers. The mixed shear has theta = 0: only the dual
    // numbers offer nonzero roots +/-epsilon.
    for (name, x, sigma) in [
        ("Z (rotation)", &z, Sigma::Elliptic),
        ("B (boost)   ", &b, Sigma::Hyperbolic),
        ("B - Z/2     ", &shear, Sigma::Parabolic),
    ] {
        let theta = x[0].clone() * x[0].clone() + x[1].clone() * x[1].clone()
            - rat(4, 1) * x[2].clone() * x[2].clone();
        println!("{name}: theta = {theta}");
        for (lambda, l) in solve_ladder(x, sigma)? {
            let [ca, cb, cz] = l.coeffs();
            println!("  lambda = {lambda:6}  L = ({ca})A + ({cb})B + ({cz})Z");
        }
    }

    // Over the wrong algebra the same element has no ladder at all.
    assert_eq!(
        solve_ladder(&z, Sigma::Hyperbolic),
        Err(Error::NoNontrivialSolution)
    );
    println!("\nZ over double numbers: no nontrivial solution, as it must be");

    // Scaling X = Z/2 makes the eigenvalues exactly +/-i, and the canonical
    // pair L+- = +-iA + B then satisfies all three commutation relations
    // [X, L+] = iL+, [X, L-] = -iL-, [L-, L+] = 2iX. verify_ladder replays
    // them through 2x2 matrices over the algebra instead of trusting ad X.
    let i = HNum::<Rat>::unit(Sigma::Elliptic);
    let one = HNum::one(Sigma::Elliptic);
    let zero = HNum::zero(Sigma::Elliptic);
    let lplus = HLieVector::new(i.clone(), one.clone(), zero.clone())?;
    let lminus = HLieVector::new(i.neg(), one, zero)?;
    let x_half = [rat(0, 1), rat(0, 1), rat(1, 2)];
    let report = verify_ladder(&x_half, &lplus, &lminus, Sigma::Elliptic)?;
    println!(
        "relations for X = Z/2: raising {}, lowering {}, pairing {}",
        report.raising, report.lowering, report.pairing
    );
    let lb = bracket(&lminus, &lplus)?;
    let [ca, cb, cz] = lb.coeffs();
    println!("[L-, L+] = ({ca})A + ({cb})B + ({cz})Z");

    // Every X in span{B, Z} has a Killing-orthogonal partner Y = [A, X] with
    // [A, Y] = X; elements with an A-component do not.
    let x = [rat(0, 1), rat(3, 1), rat(1, 2)];
    let y = find_y(&x)?;
    println!(
        "\npartner of (0, 3, 1/2): ({}, {}, {}), Killing form {}",
        y[0],
        y[1],
        y[2],
        killing_form(&x, &y)
    );
    assert!(find_y(&[rat(1, 1), rat(2, 1), rat(0, 1)]).is_err());

    // The Killing form itself tells the generator types apart: negative on
    // rotations, positive on boosts, zero on the shear directions.
    for (name, x) in [("Z", &z), ("B", &b), ("B - Z/2", &shear)] {
        println!("K({name}, {name}) = {}", killing_form(x, x));
    }
    Ok(())
}
