//! Error type shared by every fallible operation in the crate.

use core::fmt;

use alloc::string::String;

use crate::geometry::Region;

/// Errors produced by constructors, evaluators, and solvers.
///
/// Every variant carries enough payload to reconstruct what went wrong
/// without consulting logs: offending values, the regions involved, or the
/// iteration context.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// An input fell outside the mathematical domain of the operation.
    /// The message states the constraint and the offending value.
    Domain(String),
    /// A finite-difference stencil reached across a seam of the piecewise
    /// map, so the difference quotient would mix two analytic branches.
    StencilStraddlesSeam {
        /// Region of the stencil center.
        center: Region,
        /// Region of the first stencil point found on the other side.
        straddled: Region,
    },
    /// The dilatation quotient is undefined because `|f_z|` does not
    /// dominate `|f_zbar|`; an orientation-preserving map must have
    /// `|f_z| > |f_zbar|` pointwise.
    DegenerateJacobian {
        /// Modulus of the `z`-derivative.
        fz_abs: f64,
        /// Modulus of the `zbar`-derivative.
        fzbar_abs: f64,
    },
    /// An iterative solver exhausted its iteration budget or lost its
    /// bracket before reaching the requested accuracy.
    Convergence {
        /// Which solver failed, e.g. `"lambda0 bisection"`.
        context: &'static str,
    },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Domain(msg) => write!(f, "{msg}"),
            Error::StencilStraddlesSeam { center, straddled } => write!(
                f,
                "finite-difference stencil straddles a seam: center lies in {center}, \
                 a stencil point lies in {straddled}; shrink the step or move the point"
            ),
            Error::DegenerateJacobian { fz_abs, fzbar_abs } => write!(
                f,
                "dilatation undefined: |f_z| = {fz_abs} does not exceed |f_zbar| = {fzbar_abs}"
            ),
            Error::Convergence { context } => {
                write!(f, "iteration failed to converge: {context}")
            }
        }
    }
}

impl core::error::Error for Error {}
