//! Elliptic, parabolic and hyperbolic geometry of SL(2,R) actions on the
//! hypercomplex half-planes.

pub mod dualalg;
pub mod error;
pub mod homogeneous;
pub mod hypercomplex;
pub mod induced;
pub mod ladder;
pub mod orbitgen;
pub mod sampling;
pub mod scalar;
pub mod sl2;
pub mod verify;

pub use error::{Error, Result};
pub use hypercomplex::{HMat2, HNum, Sigma};
pub use scalar::{rat, Rat, Scalar};
