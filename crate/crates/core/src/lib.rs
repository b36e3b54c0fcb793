//! Explicit piecewise quasiconformal mapping of an isosceles trapezoid onto
//! a rectangle, with dilatation analysis and two-sided bounds for the
//! quasiconformal reflection coefficient of the trapezoid's boundary.
//!
//! The crate is organized around one construction: a plane homeomorphism
//! that straightens the unit-height trapezoid with half-bases `c <= d` into
//! the rectangle `[-d, d] x [0, 1]`, region by region, in closed form.
//! Everything else is measurement of that map and of the bounds it yields.
//!
//! * [`geometry`] — the shapes, the five-region decomposition of the plane,
//!   and region classification;
//! * [`qcmap`] — forward/inverse evaluation, seam sampling, and the
//!   assembled parallelogram map;
//! * [`dilatation`] — exact and finite-difference Wirtinger derivatives,
//!   the dilatation quotient, and closed-form per-region suprema with grid
//!   scans to confirm them;
//! * [`elliptic`] — complete elliptic integrals (modulus convention, AGM),
//!   the modulus quotient `g`, and its peak `lambda0`;
//! * [`bounds`] — the lower and the two upper bounds for the reflection
//!   coefficient, the parallelogram variant, classical reference values,
//!   and comparison scans.
//!
//! # Example
//!
//! ```
//! use qctrap_core::{bounds, qcmap, PlanePoint, Trapezoid};
//!
//! let t = Trapezoid::new(0.25, 2.0)?;
//! let eval = qcmap::forward(&t, PlanePoint::new(1.2, 0.4));
//! assert!((eval.output.x - 1.5).abs() < 1e-12);
//!
//! let r = bounds::report(&t);
//! assert!(r.lower <= r.upper_tau.min(r.upper_new));
//! # Ok::<(), qctrap_core::Error>(())
//! ```
//!
//! # `no_std`
//!
//! The crate is `no_std`-compatible (with `alloc`): disable the default
//! `std` feature and enable `libm` to route the transcendental functions
//! through software implementations. The only behavioral difference is that
//! `lambda0` is then recomputed per call instead of cached per process.

#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

mod error;
mod math;

pub mod bounds;
pub mod dilatation;
pub mod elliptic;
pub mod geometry;
pub mod qcmap;

pub use error::Error;
pub use geometry::{HalfPlane, Parallelogram, PlanePoint, Region, RegionTag, Trapezoid, Window};
pub use num_complex::Complex64;
