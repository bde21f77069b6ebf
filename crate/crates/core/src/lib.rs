//! Exact generalized inverses of nondecreasing piecewise-affine functions.
//!
//! For a nondecreasing `T : ℝ → ℝ` the two generalized inverses are
//!
//! ```text
//! T⁺(y) = inf{x : T(x) > y}      (right-continuous)
//! T⁻(y) = inf{x : T(x) ≥ y}      (left-continuous)
//! ```
//!
//! with `inf ∅ = +∞` and `inf ℝ = −∞`. Everything here works in exact
//! rational arithmetic: functions are finitely many affine pieces with
//! explicitly valued breakpoints, and inverses are computed in closed form.
//!
//! Modules:
//! - [`piecewise`]: representation, evaluation, limits, jumps, plateaus.
//! - [`inverse`]: pointwise and closed-form `T⁺`, `T⁻`.
//! - [`compose`]: exact composition and the closed forms of `T∘T±`, `T±∘T`.
//! - [`properties`]: random functions, a brute-force oracle and the
//!   executable property registry.
//! - [`sampling`]: inverse-transform sampling, ECDFs, KS distance.
//! - [`cli`]: JSON function files and the `geninv` command implementations.

pub mod cli;
pub mod compose;
pub mod error;
pub mod fixtures;
pub mod inverse;
pub mod piecewise;
pub mod properties;
pub mod region;
pub mod sampling;
pub mod scalar;

pub use error::{Error, Result, Side};
pub use inverse::{invert_minus, invert_plus, Which};
pub use piecewise::{
    Breakpoint, ExtPiecewise, ExtSegment, JumpRecord, Law, Piecewise, PiecewiseMonotone, PlateauRecord, Preimage,
    Segment,
};
pub use scalar::{ExtReal, Rational};
