//! Two-sided bounds for the quasiconformal reflection coefficient of the
//! trapezoid's boundary, plus the parallelogram variant, reference values
//! for rectangles and inscribed-circle polygons, and comparison scans.
//!
//! # The bounds
//!
//! For the unit-height trapezoid with half-bases `c <= d` and acute angle
//! `pi*alpha` (see [`crate::geometry::Trapezoid`]):
//!
//! * **Lower bound** ([`lower_bound`]):
//!   `QR >= g(min(c/d, lambda0)) * (1 + C(alpha)) * d`, built from the
//!   modulus quotient `g` and angle factor `C` of [`crate::elliptic`]. The
//!   argument of `g` is capped at `lambda0` because `g` peaks there.
//! * **Shear-based upper bound** ([`upper_bound_tau`]):
//!   `QR <= (sqrt(1 + tau^2) + tau)^2` with
//!   `tau = max(c + d, (1 - c^2 + d^2) / (2c))`.
//! * **Reflection-based upper bound** ([`upper_bound_new`]):
//!   `QR <= pi * (sqrt((d+c)^2 + d^2 (d-c)^2) + (d-c) sqrt(1+d^2))^4 / (8 c^2 d)`,
//!   which is `2 pi d` times the square of the map's quasiconformality
//!   constant ([`crate::dilatation::global_bound`]) — the bound inherited
//!   from reflecting across the boundary with the explicit piecewise map.
//! * **Large-`d` slope** ([`asymptotic_slope`]): `upper_bound_new` grows like
//!   `C1(alpha) * d` as `d -> infinity` at fixed angle, with
//!   `C1 = (pi/8) (sqrt(4 + cot^2) + cot)^4`.
//!
//! [`upper_bound_parallelogram`] is the same reflection-based construction
//! for the unit-height parallelogram of base `a`, assembled from two
//! half-trapezoids. [`werner_bounds`] and [`kuhnau_inscribed`] give the
//! classical reference values the new bounds are compared against.

use core::fmt;

use alloc::format;
use alloc::vec::Vec;

use crate::dilatation;
use crate::elliptic;
use crate::error::Error;
use crate::geometry::{cot_pi_alpha, Parallelogram, Trapezoid};
use crate::math;

/// Which branch of the lower bound fired: whether the base ratio `c/d` sat
/// above or below the peak `lambda0` of the modulus quotient `g`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LowerBranch {
    /// `c/d >= lambda0`: the bound uses the peak value `g(lambda0)`.
    AtLambda0,
    /// `c/d < lambda0`: the bound uses `g(c/d)`.
    AtBaseRatio,
}

impl fmt::Display for LowerBranch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LowerBranch::AtLambda0 => f.write_str("g at lambda0"),
            LowerBranch::AtBaseRatio => f.write_str("g at base ratio c/d"),
        }
    }
}

/// Lower bound for the reflection coefficient:
/// `g(min(c/d, lambda0)) * (1 + C(alpha)) * d`, together with the branch
/// that was taken.
///
/// The two branches meet continuously at `c/d = lambda0` since the capped
/// argument is continuous there.
pub fn lower_bound(t: &Trapezoid) -> (f64, LowerBranch) {
    let ratio = t.base_ratio();
    let peak = elliptic::lambda0();
    let (arg, branch) = if ratio >= peak {
        (peak, LowerBranch::AtLambda0)
    } else {
        (ratio, LowerBranch::AtBaseRatio)
    };
    let g = elliptic::g_of(arg).expect("capped base ratio lies in (0, 1)");
    let c_alpha =
        elliptic::c_of_alpha(t.alpha()).expect("trapezoid construction validated alpha");
    (g * (1.0 + c_alpha) * t.d(), branch)
}

/// Shear-based upper bound `(sqrt(1 + tau^2) + tau)^2` with
/// `tau = max(c + d, (1 - c^2 + d^2)/(2c))`, returned as
/// `(bound, tau)`.
///
/// The second expression for `tau` takes over when the top edge is short
/// relative to the unit height (`1 + d^2 > 3c^2 + 2cd`); at the switch the
/// two expressions coincide, so the bound is continuous in `(c, d)`.
pub fn upper_bound_tau(t: &Trapezoid) -> (f64, f64) {
    let c = t.c();
    let d = t.d();
    let tau = (c + d).max((1.0 - c * c + d * d) / (2.0 * c));
    let s = math::sqrt(1.0 + tau * tau) + tau;
    (s * s, tau)
}

/// Reflection-based upper bound
/// `pi * (sqrt((d+c)^2 + d^2 (d-c)^2) + (d-c) sqrt(1+d^2))^4 / (8 c^2 d)`.
///
/// Equals `2 pi d * K^2` where `K` is the quasiconformality constant of the
/// piecewise map ([`crate::dilatation::global_bound`]); the test suite checks
/// that identity to near machine precision.
pub fn upper_bound_new(t: &Trapezoid) -> f64 {
    let c = t.c();
    let d = t.d();
    let m = d - c;
    let s = math::sqrt((d + c) * (d + c) + d * d * m * m) + m * math::sqrt(1.0 + d * d);
    let s2 = s * s;
    core::f64::consts::PI * s2 * s2 / (8.0 * c * c * d)
}

/// Slope of the reflection-based bound for wide trapezoids:
/// `upper_bound_new ~ C1(alpha) * d` as `d -> infinity` at fixed `alpha`,
/// with `C1(alpha) = (pi/8) * (sqrt(4 + cot^2(pi*alpha)) + cot(pi*alpha))^4`.
///
/// # Errors
///
/// [`Error::Domain`] when `alpha` is outside `(0, 1/2]` or non-finite.
pub fn asymptotic_slope(alpha: f64) -> Result<f64, Error> {
    if !(alpha.is_finite() && alpha > 0.0 && alpha <= 0.5) {
        return Err(Error::Domain(format!(
            "alpha must lie in (0, 0.5] (got {alpha})"
        )));
    }
    let cot = cot_pi_alpha(alpha);
    let s = math::sqrt(4.0 + cot * cot) + cot;
    let s2 = s * s;
    Ok(core::f64::consts::PI / 8.0 * s2 * s2)
}

/// Reflection-based upper bound for the unit-height parallelogram with base
/// `a` and acute angle `pi*alpha`:
///
/// ```text
/// pi * (sqrt(4 a^2 + (a + cot)^2 cot^2) + cot * sqrt(4 + (a + cot)^2))^4
///   / (16 (a + cot) (a - cot)^2),        cot = cot(pi*alpha).
/// ```
///
/// This is the trapezoid bound of [`upper_bound_new`] evaluated at the
/// companion half-trapezoid (`c = (a - cot)/2`, `d = (a + cot)/2`) and
/// rewritten in `(a, cot)`; the test suite confirms the two routes agree.
pub fn upper_bound_parallelogram(pg: &Parallelogram) -> f64 {
    let a = pg.a();
    let cot = cot_pi_alpha(pg.alpha());
    let sum = a + cot;
    let diff = a - cot;
    let s = math::sqrt(4.0 * a * a + sum * sum * cot * cot)
        + cot * math::sqrt(4.0 + sum * sum);
    let s2 = s * s;
    core::f64::consts::PI * s2 * s2 / (16.0 * sum * diff * diff)
}

/// Classical two-sided bounds `(pi*m/3, pi*m)` for the reflection
/// coefficient of the rectangle boundary with aspect ratio `m >= 1`
/// (sides `m` and `1`). Near the square (`1 <= m < 1.037`) the coefficient
/// is exactly 3, which the lower member approaches as `m -> 3/pi` would
/// suggest; the pair is used here purely as a sanity reference.
///
/// # Errors
///
/// [`Error::Domain`] when `m < 1` or non-finite (orient the rectangle so the
/// longer side is `m`).
pub fn werner_bounds(m: f64) -> Result<(f64, f64), Error> {
    if !(m.is_finite() && m >= 1.0) {
        return Err(Error::Domain(format!(
            "rectangle aspect ratio must satisfy m >= 1 (got {m})"
        )));
    }
    Ok((core::f64::consts::PI * m / 3.0, core::f64::consts::PI * m))
}

/// Exact reflection coefficient `2/alpha - 1` for a polygon that admits an
/// inscribed circle, where `pi*alpha` is its smallest interior angle
/// (`alpha` in `(0, 1)`). The square gives `alpha = 1/2` and coefficient 3.
///
/// # Errors
///
/// [`Error::Domain`] when `alpha` is outside `(0, 1)` or non-finite.
pub fn kuhnau_inscribed(alpha: f64) -> Result<f64, Error> {
    if !(alpha.is_finite() && alpha > 0.0 && alpha < 1.0) {
        return Err(Error::Domain(format!(
            "minimal-angle parameter must lie in (0, 1) (got {alpha})"
        )));
    }
    Ok(2.0 / alpha - 1.0)
}

/// All bounds for one trapezoid, bundled for reporting.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundsReport {
    pub trapezoid: Trapezoid,
    /// Lower bound for the reflection coefficient.
    pub lower: f64,
    /// Which branch produced `lower`.
    pub lower_branch: LowerBranch,
    /// Shear-based upper bound.
    pub upper_tau: f64,
    /// The `tau` that produced `upper_tau`.
    pub tau: f64,
    /// Reflection-based upper bound.
    pub upper_new: f64,
    /// Quasiconformality constant of the piecewise map.
    pub k_tilde: f64,
}

/// Evaluates every bound for `t`.
pub fn report(t: &Trapezoid) -> BoundsReport {
    let (lower, lower_branch) = lower_bound(t);
    let (upper_tau, tau) = upper_bound_tau(t);
    BoundsReport {
        trapezoid: *t,
        lower,
        lower_branch,
        upper_tau,
        tau,
        upper_new: upper_bound_new(t),
        k_tilde: dilatation::global_bound(t),
    }
}

/// Grid spacing for [`compare_scan`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ScanSpacing {
    /// Uniform steps in `c`.
    Uniform,
    /// Uniform steps in `ln c` (geometric progression).
    Log,
}

/// One row of a comparison scan at fixed angle: the trapezoid with top
/// half-base `c` (hence `d = c + cot`) and its three bounds.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScanRow {
    pub c: f64,
    pub d: f64,
    pub lower: f64,
    pub upper_tau: f64,
    pub upper_new: f64,
}

/// Sweeps `c` over `[c_min, c_max]` with `n` points at fixed `alpha` and
/// evaluates all three bounds per point — the raw material for comparing the
/// two upper bounds' regimes.
///
/// # Errors
///
/// [`Error::Domain`] when `alpha` is invalid, when
/// `0 < c_min < c_max` fails, or when `n < 2`.
pub fn compare_scan(
    alpha: f64,
    c_min: f64,
    c_max: f64,
    n: usize,
    spacing: ScanSpacing,
) -> Result<Vec<ScanRow>, Error> {
    if !(alpha.is_finite() && alpha > 0.0 && alpha <= 0.5) {
        return Err(Error::Domain(format!(
            "alpha must lie in (0, 0.5] (got {alpha})"
        )));
    }
    if !(c_min.is_finite() && c_max.is_finite() && c_min > 0.0 && c_min < c_max) {
        return Err(Error::Domain(format!(
            "scan range must satisfy 0 < c_min < c_max (got [{c_min}, {c_max}])"
        )));
    }
    if n < 2 {
        return Err(Error::Domain(format!(
            "scan needs at least 2 points (got n = {n})"
        )));
    }
    let cot = cot_pi_alpha(alpha);
    let nf = (n - 1) as f64;
    let mut rows = Vec::with_capacity(n);
    for i in 0..n {
        let s = (i as f64) / nf;
        let c = match spacing {
            ScanSpacing::Uniform => c_min + (c_max - c_min) * s,
            ScanSpacing::Log => math::exp(math::ln(c_min) + (math::ln(c_max) - math::ln(c_min)) * s),
        };
        let t = Trapezoid::new(alpha, c + cot)
            .expect("c > 0 guarantees d > cot for a validated alpha");
        let (lower, _) = lower_bound(&t);
        let (upper_tau, _) = upper_bound_tau(&t);
        rows.push(ScanRow {
            c,
            d: t.d(),
            lower,
            upper_tau,
            upper_new: upper_bound_new(&t),
        });
    }
    Ok(rows)
}
