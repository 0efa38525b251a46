//! Deterministic random inputs for the verification suites.
//!
//! Everything is seeded explicitly, so every suite run sees the same
//! instances. Rational group elements are built from the unipotent and
//! diagonal factors, which keeps determinants exactly one without square
//! roots.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::homogeneous::HalfPlanePoint;
use crate::scalar::{rat, Rat};
use crate::sl2::{LieElem, Mat2, SL2Elem};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A rational with numerator in [-span, span] and denominator in [1, max_den].
pub fn rat_in(r: &mut ChaCha8Rng, span: i64, max_den: i64) -> Rat {
    rat(r.gen_range(-span..=span), r.gen_range(1..=max_den))
}

fn nonzero_rat_in(r: &mut ChaCha8Rng, span: i64, max_den: i64) -> Rat {
    let mut n = r.gen_range(-span..=span);
    if n == 0 {
        n = 1;
    }
    rat(n, r.gen_range(1..=max_den))
}

/// [[1, x], [0, 1]] · diag(q, 1/q) · [[1, 0], [y, 1]] for random rationals;
/// the factorization makes det = 1 exact.
pub fn rational_sl2(r: &mut ChaCha8Rng) -> SL2Elem<Rat> {
    let x = rat_in(r, 6, 3);
    let q = nonzero_rat_in(r, 6, 3);
    let y = rat_in(r, 6, 3);
    let n = Mat2::new(rat(1, 1), x, rat(0, 1), rat(1, 1));
    let a = Mat2::new(q.clone(), rat(0, 1), rat(0, 1), rat(1, 1) / q);
    let np = Mat2::new(rat(1, 1), rat(0, 1), y, rat(1, 1));
    SL2Elem::from_mat_unchecked(n.mul(&a).mul(&np))
}

/// A rational point with v > 0.
pub fn rational_point(r: &mut ChaCha8Rng) -> HalfPlanePoint<Rat> {
    let u = rat_in(r, 6, 3);
    let v = rat(r.gen_range(1..=9), r.gen_range(1..=3));
    HalfPlanePoint::new(u, v)
}

/// A float group element from the same three-factor form.
pub fn float_sl2(r: &mut ChaCha8Rng) -> SL2Elem<f64> {
    let x: f64 = r.gen_range(-2.0..2.0);
    let q: f64 = r.gen_range(0.4..2.5);
    let y: f64 = r.gen_range(-2.0..2.0);
    SL2Elem::from_mat_unchecked(Mat2::new(q + x * y / q, x / q, y / q, 1.0 / q))
}

/// A float traceless matrix with entries bounded by `span`.
pub fn float_traceless(r: &mut ChaCha8Rng, span: f64) -> LieElem<f64> {
    LieElem::from_parts(
        r.gen_range(-span..span),
        r.gen_range(-span..span),
        r.gen_range(-span..span),
    )
}

/// A rational traceless matrix.
pub fn rational_traceless(r: &mut ChaCha8Rng) -> LieElem<Rat> {
    LieElem::from_parts(rat_in(r, 5, 3), rat_in(r, 5, 3), rat_in(r, 5, 3))
}
