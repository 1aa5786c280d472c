//! Exact algebraic verification of parallel-manipulator trajectories.
//!
//! The library certifies whether a time-parametrized trajectory of a
//! translational parallel manipulator crosses a parallel singularity
//! (`det(A) = 0`). Everything on the certified path is exact: sparse
//! multivariate polynomials over the rationals, Gröbner-basis elimination to
//! project singularity loci and trajectories, and real-root isolation with
//! rational interval endpoints that refine to any width.
//!
//! Modules:
//! - [`poly`]: the algebraic kernel (arithmetic, orders, Buchberger,
//!   elimination, determinants, text format).
//! - [`roots`]: square-free decomposition, Sturm-certified isolation,
//!   refinement, and bivariate circle systems in `(sin_t, cos_t)`.
//! - [`interval`]: rational interval arithmetic with certified enclosures of
//!   algebraic and trigonometric values.
//! - [`robot`]: constraint models of translational manipulators, Jacobians,
//!   singularity/joint-limit projections, IKP/DKP queries; ships the
//!   Orthoglide as a built-in.
//! - [`trajectory`]: trigonometric trajectories, their algebraization, and
//!   joint-space images.
//! - [`scan`]: the verdict procedure: locate and classify singular events
//!   along a trajectory and report them.

pub mod error;
pub mod interval;
pub mod poly;
pub mod robot;
pub mod roots;
pub mod scan;
pub mod trajectory;

pub(crate) mod uni;

pub use error::{Error, Result};
pub use poly::{MultiPoly, Rational, VarSet};
