//! Dual-number points carry two exotic vector structures, one per unipotent
//! rotation family. Products multiply norms and add arguments; sums add
//! componentwise in homogeneous polar coordinates. The affine chart is only a
//! view: it refuses points it cannot express instead of inventing values.

use eph::dualalg::{tropical_add, Flavor, PVec, TropicalMode};
use eph::{rat, Error, Rat};

type V = PVec<Rat>;

fn main() -> Result<(), Error> {
    // The two flavors measure the same affine point differently.
    let p = V::affine(Flavor::N, rat(2, 1), rat(1, 1));
    println!("{p}: norm {}, argument {}", p.norm()?, p.argument()?);
    let q = V::affine(Flavor::Nprime, rat(2, 1), rat(1, 1));
    println!("{q}: norm {}, argument {}", q.norm()?, q.argument()?);

    // Products multiply the norms and add the arguments, in both flavors.
    let p2 = V::affine(Flavor::N, rat(-1, 2), rat(3, 1));
    let prod = p.pmul(&p2)?;
    println!(
        "{p} * {p2} = {prod}  (norm {} = {} * {}, argument {} = {} + {})",
        prod.norm()?,
        p.norm()?,
        p2.norm()?,
        prod.argument()?,
        p.argument()?,
        p2.argument()?,
    );

    // Units and zeros. The N' zero sits at infinite u, so only the
    // homogeneous chart [norm*arg, norm] = [0, 0] can hold it.
    for flavor in [Flavor::N, Flavor::Nprime] {
        let unit = V::unit(flavor);
        let x = V::from_arg_mod(flavor, rat(3, 1), rat(5, 1));
        assert_eq!(x.pmul(&unit)?.hompolar_pair()?, x.hompolar_pair()?);
        println!("{} unit {unit}, zero {}", flavor.label(), V::zero(flavor));
    }

    // Addition happens in the homogeneous chart: both components of
    // [norm*arg, norm] add, and the result materializes back to affine form
    // whenever that form exists.
    let a = V::affine(Flavor::N, rat(1, 1), rat(0, 1));
    let b = V::affine(Flavor::N, rat(1, 2), rat(-2, 1));
    let sum = a.padd(&b)?;
    let (ha, hr) = sum.hompolar_pair()?;
    println!("{a} + {b} = {sum}, homogeneous [{ha}, {hr}]");

    // The affine N' product formula needs the argument sum to be nonzero.
    // The identity itself is fine: route through the homogeneous chart.
    let c = V::affine(Flavor::Nprime, rat(1, 1), rat(1, 1));
    let d = V::affine(Flavor::Nprime, rat(-1, 1), rat(1, 1));
    assert_eq!(c.pmul(&d), Err(Error::ProductUndefined));
    let via_hompolar = c.to_hompolar()?.pmul(&d.to_hompolar()?)?;
    println!("{c} * {d} = {via_hompolar}  (affine chart refuses this one)");

    // Conjugation flips the argument and keeps the norm, so x * conj(x) is
    // the norm times the unit.
    let x = V::affine(Flavor::N, rat(3, 1), rat(4, 1));
    let xc = x.pconj();
    let nsq = x.pmul(&xc)?;
    println!("{x} * {xc} = {nsq}, norm {}", nsq.norm()?);

    // The scalar action scales the norm and keeps the argument fixed.
    let y = V::from_arg_mod(Flavor::Nprime, rat(2, 1), rat(3, 1));
    let sy = y.smul(&rat(2, 1))?;
    println!(
        "2 . {y} = {sy}  (argument {} stays, norm {} -> {})",
        sy.argument()?,
        y.norm()?,
        sy.norm()?,
    );

    // Tropical addition takes a lexicographic extremum instead of a sum.
    let t1 = V::affine(Flavor::N, rat(1, 1), rat(5, 1));
    let t2 = V::affine(Flavor::N, rat(1, 1), rat(2, 1));
    println!(
        "min({t1}, {t2}) = {}, max = {}",
        tropical_add(&t1, &t2, TropicalMode::Min)?,
        tropical_add(&t1, &t2, TropicalMode::Max)?,
    );
    Ok(())
}
