//! A tour of the three two-dimensional number algebras: complex (ι² = −1),
//! dual (ι² = 0) and double (ι² = +1), with the same code running over exact
//! rationals and over floats.

use eph::hypercomplex::{HNum, Sigma};
use eph::{rat, Error, Rat};

fn main() -> Result<(), Error> {
    for sigma in [Sigma::Elliptic, Sigma::Parabolic, Sigma::Hyperbolic] {
        let i = sigma.unit_symbol();
        let w = HNum::new(rat(3, 1), rat(2, 1), sigma);
        let z = HNum::new(rat(1, 2), rat(-1, 1), sigma);
        println!("sigma = {:+}  (unit {i}, {i}^2 = {:+})", sigma.unit_square(), sigma.unit_square());
        println!("  w = {w}, z = {z}");
        println!("  w + z = {}", w.add(&z)?);
        println!("  w * z = {}", w.mul(&z)?);
        println!("  |w|^2 = {}", w.modulus_sq());
        println!("  w * conj(w) = {}", w.mul(&w.conj())?);

        // The square modulus is multiplicative in every algebra.
        let prod = w.mul(&z)?;
        assert_eq!(prod.modulus_sq(), w.modulus_sq() * z.modulus_sq());
        println!("  |wz|^2 = |w|^2 |z|^2 = {}", prod.modulus_sq());
        println!();
    }

    // Zero divisors exist for sigma >= 0: the dual unit squares to zero, and
    // the double-number light cone re = ±im is not invertible.
    let eps = HNum::new(rat(0, 1), rat(1, 1), Sigma::Parabolic);
    println!("dual unit: eps^2 = {}", eps.mul(&eps)?);
    let cone = HNum::new(rat(1, 1), rat(1, 1), Sigma::Hyperbolic);
    println!("double-number 1+h is invertible: {}", cone.is_invertible());
    assert!(matches!(cone.invert(), Err(Error::ZeroDivisor)));

    // Unit exponentials trace the unit cycles: circle, vertical line, and
    // unit hyperbola. Their arguments add under multiplication.
    println!();
    for sigma in [Sigma::Elliptic, Sigma::Parabolic, Sigma::Hyperbolic] {
        let e1 = HNum::<f64>::exp_unit(sigma, &0.4)?;
        let e2 = HNum::<f64>::exp_unit(sigma, &0.3)?;
        let prod = e1.mul(&e2)?;
        println!(
            "sigma = {:+}: exp(0.4) exp(0.3) = {prod}, argument {:.15}",
            sigma.unit_square(),
            prod.arg()?
        );
    }

    // Over rationals only the parabolic exponential is available; the other
    // two need transcendental values and say so instead of rounding.
    let exact = HNum::<Rat>::exp_unit(Sigma::Parabolic, &rat(5, 7))?;
    println!("exact dual exponential at 5/7: {exact}");
    assert!(matches!(
        HNum::<Rat>::exp_unit(Sigma::Elliptic, &rat(1, 3)),
        Err(Error::NotExactlyRepresentable)
    ));
    Ok(())
}
