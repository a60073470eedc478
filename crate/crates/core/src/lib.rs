//! Exact computations for Serre-invariant stability conditions on the
//! Kuznetsov component of a cubic fivefold and its Clifford model on P³.

pub mod chow;
pub mod error;
pub mod knum;
pub mod numerics;
pub mod serre;
pub mod tilt;
pub mod walls;

pub use error::{Error, Result};
pub use numerics::{Angle, HSeries, Mat2, Phase, QuadExt, Rational};
