//! Shared helpers for the integration suites: tolerance assertions, an
//! independent quadrature oracle for the elliptic integral, and seeded
//! region samplers.

#![allow(dead_code)] // each integration test binary uses a different subset

use qctrap_core::geometry::{classify_region, seam_distance};
use qctrap_core::{HalfPlane, PlanePoint, Region, RegionTag, Trapezoid};
use rand::rngs::StdRng;
use rand::Rng;

/// Asserts `|value - expected| <= tol * max(1, |expected|)`.
pub fn assert_close(value: f64, expected: f64, tol: f64, what: &str) {
    let scale = expected.abs().max(1.0);
    assert!(
        (value - expected).abs() <= tol * scale,
        "{what}: got {value}, expected {expected} (tol {tol})"
    );
}

/// Relative error against `reference`, degrading to absolute near zero.
pub fn rel_err(value: f64, reference: f64) -> f64 {
    (value - reference).abs() / reference.abs().max(1.0)
}

fn simpson(f: &impl Fn(f64) -> f64, a: f64, b: f64) -> f64 {
    (b - a) / 6.0 * (f(a) + 4.0 * f(0.5 * (a + b)) + f(b))
}

fn adaptive_step(
    f: &impl Fn(f64) -> f64,
    a: f64,
    b: f64,
    whole: f64,
    tol: f64,
    depth: u32,
) -> f64 {
    let mid = 0.5 * (a + b);
    let left = simpson(f, a, mid);
    let right = simpson(f, mid, b);
    let refined = left + right;
    // Standard Richardson criterion for Simpson halving (factor 15).
    if depth == 0 || (refined - whole).abs() <= 15.0 * tol {
        refined + (refined - whole) / 15.0
    } else {
        adaptive_step(f, a, mid, left, 0.5 * tol, depth - 1)
            + adaptive_step(f, mid, b, right, 0.5 * tol, depth - 1)
    }
}

/// Adaptive Simpson quadrature of `f` over `[a, b]`.
pub fn adaptive_simpson(f: impl Fn(f64) -> f64, a: f64, b: f64, tol: f64) -> f64 {
    let whole = simpson(&f, a, b);
    adaptive_step(&f, a, b, whole, tol, 40)
}

/// Complete elliptic integral of the first kind (modulus convention) by
/// direct quadrature of its defining integral — deliberately a different
/// algorithm from the library's AGM, to serve as an oracle.
pub fn ellip_k_quadrature(k: f64) -> f64 {
    assert!((0.0..1.0).contains(&k), "oracle needs 0 <= k < 1");
    adaptive_simpson(
        |theta| {
            let s = theta.sin();
            1.0 / (1.0 - k * k * s * s).sqrt()
        },
        0.0,
        std::f64::consts::FRAC_PI_2,
        1e-13,
    )
}

/// Draws a point uniformly from a sampling box for `tag`, rejecting until it
/// classifies as `tag` and sits at least `margin` away from every seam.
/// `half` flips the sign of x. Panics if rejection takes implausibly long
/// (which would mean the box or the classifier is broken).
pub fn sample_region_point(
    t: &Trapezoid,
    tag: RegionTag,
    half: HalfPlane,
    margin: f64,
    rng: &mut StdRng,
) -> PlanePoint {
    let d = t.d();
    let (x_range, y_range) = match tag {
        RegionTag::G1 => (0.0..d, 0.0..1.0),
        RegionTag::G2 => (0.0..3.0 * d, 0.0..1.0),
        RegionTag::G3 => (0.0..t.c(), 1.0..3.0),
        RegionTag::G4 => (0.0..3.0 * d, 1.0..3.0),
        RegionTag::G5 => (0.0..3.0 * d, -2.0..0.0),
    };
    for _ in 0..100_000 {
        let x = rng.gen_range(x_range.clone());
        let y = rng.gen_range(y_range.clone());
        let x = match half {
            HalfPlane::Right => x,
            HalfPlane::Left => -x,
        };
        let p = PlanePoint::new(x, y);
        if classify_region(t, p) == Region::new(tag, half) && seam_distance(t, p) >= margin {
            return p;
        }
    }
    panic!("rejection sampling failed for {tag}/{}", half.name());
}

/// The four trapezoids used as canonical verification cases: a square-ish
/// one, a nearly-right angle, a shallow angle, and a stress case with a very
/// shallow angle and wide base.
pub fn canonical_cases() -> [Trapezoid; 4] {
    [
        Trapezoid::new(0.25, 2.0).unwrap(),
        Trapezoid::new(0.45, 1.5).unwrap(),
        Trapezoid::new(0.1, 10.0).unwrap(),
        Trapezoid::new(0.05, 50.0).unwrap(),
    ]
}
