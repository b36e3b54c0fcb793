//! Complete elliptic integrals in the *modulus* convention, the modulus
//! quotient `g`, and the distinguished modulus `lambda0` where the lower
//! bound's two branches meet.
//!
//! `K` here takes the modulus `k` (not the parameter `m = k^2`):
//!
//! ```text
//! K(k) = integral_0^{pi/2} dtheta / sqrt(1 - k^2 sin^2 theta),
//! ```
//!
//! computed through the arithmetic-geometric mean, `K(k) = pi / (2 AGM(1, k'))`
//! with the complementary modulus `k' = sqrt(1 - k^2)` (DLMF 19.8.5). The AGM
//! converges quadratically, so a handful of iterations reaches full f64
//! accuracy on the whole open interval.

use alloc::format;

use crate::error::Error;
use crate::math;

/// Iteration cap for the AGM loop. Quadratic convergence needs ~6 rounds at
/// moderate moduli and stays under 30 even for `1 - k` near machine epsilon;
/// the cap only guards against pathological rounding cycles.
const MAX_AGM_ITERATIONS: usize = 40;

/// Relative gap `|a - b| <= AGM_TOLERANCE * a` at which the AGM is declared
/// converged; one final averaging step after that lands within an ulp.
const AGM_TOLERANCE: f64 = 1e-16;

/// Complete elliptic integral of the first kind, modulus convention.
///
/// # Input
///
/// `k` — the modulus, `0 <= k < 1`.
///
/// # Errors
///
/// [`Error::Domain`] when `k` is outside `[0, 1)` or non-finite. Note that
/// `K` diverges as `k -> 1`, so moduli that round to `1.0` are rejected
/// rather than returning a huge inaccurate value.
pub fn ellip_k(k: f64) -> Result<f64, Error> {
    if !(k.is_finite() && (0.0..1.0).contains(&k)) {
        return Err(Error::Domain(format!(
            "elliptic modulus must lie in [0, 1) (got {k})"
        )));
    }
    // Complementary modulus via the product form, which keeps full accuracy
    // for k close to 1 where 1 - k^2 would cancel.
    let k_comp = math::sqrt((1.0 - k) * (1.0 + k));
    let mut a = 1.0_f64;
    let mut b = k_comp;
    let mut iterations = 0;
    while (a - b).abs() > AGM_TOLERANCE * a && iterations < MAX_AGM_ITERATIONS {
        let am = 0.5 * (a + b);
        let gm = math::sqrt(a * b);
        a = am;
        b = gm;
        iterations += 1;
    }
    Ok(core::f64::consts::PI / (a + b))
}

/// Complementary integral `K'(k) = K(k')` with `k' = sqrt(1 - k^2)`.
///
/// # Input
///
/// `k` — the modulus, `0 < k <= 1` (the complement must stay below 1).
///
/// # Errors
///
/// [`Error::Domain`] when `k` is outside `(0, 1]` or non-finite.
pub fn ellip_k_prime(k: f64) -> Result<f64, Error> {
    if !(k.is_finite() && k > 0.0 && k <= 1.0) {
        return Err(Error::Domain(format!(
            "complementary integral needs modulus in (0, 1] (got {k})"
        )));
    }
    ellip_k(math::sqrt((1.0 - k) * (1.0 + k)))
}

/// The modulus quotient `g(k) = k * K'(k) / K(k)` appearing in the lower
/// bound for the reflection coefficient.
///
/// `g` is continuous on `(0, 1)`, vanishes at both endpoints, is concave,
/// and attains its maximum at [`lambda0`].
///
/// # Errors
///
/// [`Error::Domain`] when `k` is outside `(0, 1)` or non-finite.
pub fn g_of(k: f64) -> Result<f64, Error> {
    if !(k.is_finite() && k > 0.0 && k < 1.0) {
        return Err(Error::Domain(format!(
            "g is defined on the open interval (0, 1) (got {k})"
        )));
    }
    Ok(k * ellip_k_prime(k)? / ellip_k(k)?)
}

/// Residual whose root is `lambda0`: `(1 - k^2) K(k) K'(k) - pi/2`.
/// Writing the critical-point equation of `g` in this form avoids
/// differentiating the integrals (Legendre's relation turns `g'(k) = 0` into
/// exactly this).
fn lambda0_residual(k: f64) -> Result<f64, Error> {
    Ok((1.0 - k * k) * ellip_k(k)? * ellip_k_prime(k)? - core::f64::consts::FRAC_PI_2)
}

/// Locates `lambda0`, the unique maximum of [`g_of`] on `(0, 1)`, by
/// bisecting its critical-point equation on the bracket `[0.1, 0.99]`.
///
/// Bisection is deliberate: the residual is smooth and the bracket is fixed,
/// so 60 halvings pin the root to below f64 resolution with no risk of the
/// overshoot a Newton step could take toward the singular endpoint `k = 1`.
///
/// # Errors
///
/// [`Error::Convergence`] if the bracket ever loses its sign change (which
/// would indicate a broken `K` implementation, not bad input).
pub fn find_lambda0() -> Result<f64, Error> {
    let mut lo = 0.1_f64;
    let mut hi = 0.99_f64;
    let f_lo = lambda0_residual(lo)?;
    let f_hi = lambda0_residual(hi)?;
    if !(f_lo > 0.0 && f_hi < 0.0) {
        return Err(Error::Convergence {
            context: "lambda0 bisection bracket [0.1, 0.99] lost its sign change",
        });
    }
    for _ in 0..60 {
        let mid = 0.5 * (lo + hi);
        if lambda0_residual(mid)? > 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
        if hi - lo <= 1e-14 {
            break;
        }
    }
    Ok(0.5 * (lo + hi))
}

/// Cached value of [`find_lambda0`]. With the `std` feature the root is
/// computed once per process; without it, each call recomputes (the search
/// is ~60 AGM evaluations, still cheap).
pub fn lambda0() -> f64 {
    #[cfg(feature = "std")]
    {
        use std::sync::OnceLock;
        static LAMBDA0: OnceLock<f64> = OnceLock::new();
        *LAMBDA0.get_or_init(|| {
            find_lambda0().expect("lambda0 bisection cannot fail on a correct K")
        })
    }
    #[cfg(not(feature = "std"))]
    {
        find_lambda0().expect("lambda0 bisection cannot fail on a correct K")
    }
}

/// The angle factor `C(alpha)` multiplying the lower bound, written in the
/// cancellation-free form
///
/// ```text
/// C(alpha) = 1 / (sqrt(1 + tan^2(pi*alpha)/4) + tan(pi*alpha)/2)^2,
/// ```
///
/// which equals the textbook difference form
/// `(sqrt(1 + tan^2/4) - tan/2)^2` (rationalize the reciprocal) but loses no
/// digits as `alpha -> 1/2`, where the difference form subtracts two nearly
/// equal large numbers. `C` decreases from 1 (at `alpha -> 0`) to 0 (at
/// `alpha = 1/2`, pinned exactly).
///
/// # Errors
///
/// [`Error::Domain`] when `alpha` is outside `(0, 1/2]` or non-finite.
pub fn c_of_alpha(alpha: f64) -> Result<f64, Error> {
    if !(alpha.is_finite() && alpha > 0.0 && alpha <= 0.5) {
        return Err(Error::Domain(format!(
            "alpha must lie in (0, 0.5] (got {alpha})"
        )));
    }
    if alpha == 0.5 {
        return Ok(0.0);
    }
    let half_tan = 0.5 * math::tan(core::f64::consts::PI * alpha);
    let root = math::sqrt(1.0 + half_tan * half_tan) + half_tan;
    Ok(1.0 / (root * root))
}
