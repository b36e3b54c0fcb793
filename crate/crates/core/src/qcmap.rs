//! The piecewise map itself: forward and inverse evaluation, the complex
//! cross-check form on the trapezoid piece, seam sampling, and the assembled
//! parallelogram map.
//!
//! # The map
//!
//! On the right half-plane the map sends the right half of the trapezoid onto
//! the right half of the rectangle `[-d, d] x [0, 1]` and extends to the whole
//! half-plane region by region (with `(x, y)` coordinates, `m = d - c`):
//!
//! * `G1`: `(x, y) -> (x / (1 - ell*y), y)` — straightens the slant;
//! * `G2`: `(x, y) -> (x + m*y, y)` — a horizontal shear;
//! * `G3`: `(x, y) -> (x / (1 - ell), y)` — a horizontal stretch;
//! * `G4`: `(x, y) -> (x + m, y)` — a horizontal translation;
//! * `G5`: the identity.
//!
//! The left half-plane is covered by odd reflection,
//! `f(z) = -conj(f(-conj(z)))`, which glues continuously along the imaginary
//! axis because every branch fixes `x = 0`. Each branch is affine in `x` with
//! positive coefficient at fixed `y`, preserves `y`, and the branches agree on
//! the seams, so the assembled map is a homeomorphism of the plane.
//!
//! Every branch is invertible in closed form; [`inverse`] picks the branch by
//! classifying the *image* point against the straightened geometry
//! ([`crate::geometry::classify_image_region`]).

use num_complex::Complex64;

use alloc::vec::Vec;

use crate::error::Error;
use crate::geometry::{
    classify_image_region, classify_region, HalfPlane, PlanePoint, Region, RegionTag, Trapezoid,
};

/// Result of evaluating the map (or its inverse) at one point: the input, the
/// output, and the region whose branch was used.
///
/// For [`forward`] the region classifies `input` in the domain plane; for
/// [`inverse`] it classifies `input` in the image plane (the inverse's own
/// domain).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MapEvaluation {
    pub input: PlanePoint,
    pub output: PlanePoint,
    pub region: Region,
}

fn forward_right_branch(t: &Trapezoid, tag: RegionTag, x: f64, y: f64) -> PlanePoint {
    let m = t.d() - t.c();
    let u = match tag {
        RegionTag::G1 => x / (1.0 - t.ell() * y),
        RegionTag::G2 => x + m * y,
        RegionTag::G3 => x / (1.0 - t.ell()),
        RegionTag::G4 => x + m,
        RegionTag::G5 => x,
    };
    PlanePoint::new(u, y)
}

fn inverse_right_branch(t: &Trapezoid, tag: RegionTag, u: f64, v: f64) -> PlanePoint {
    let m = t.d() - t.c();
    let x = match tag {
        RegionTag::G1 => u * (1.0 - t.ell() * v),
        RegionTag::G2 => u - m * v,
        RegionTag::G3 => u * (1.0 - t.ell()),
        RegionTag::G4 => u - m,
        RegionTag::G5 => u,
    };
    PlanePoint::new(x, v)
}

/// Evaluates the branch belonging to `region` at `p`, without classifying
/// `p` first.
///
/// Each branch is a closed-form expression valid on the closure of its
/// region, so this is the tool for comparing two branches *on* a seam (see
/// [`seam_samples`]) or for forcing a branch near a seam. For points genuinely
/// inside `region`, [`forward`] gives the same value.
///
/// # Panics
///
/// Panics when `p` is non-finite.
pub fn forward_in_region(t: &Trapezoid, region: Region, p: PlanePoint) -> PlanePoint {
    assert!(
        p.is_finite(),
        "cannot evaluate map at non-finite point ({}, {})",
        p.x,
        p.y
    );
    match region.half {
        HalfPlane::Right => forward_right_branch(t, region.tag, p.x, p.y),
        HalfPlane::Left => {
            // f(z) = -conj(f(-conj(z))): evaluate the mirrored point with the
            // right-half branch, then mirror the output back.
            let q = forward_right_branch(t, region.tag, -p.x, p.y);
            PlanePoint::new(-q.x, q.y)
        }
    }
}

/// Evaluates the piecewise map at `p`: classifies the point, applies the
/// branch of its region, and records both.
///
/// # Panics
///
/// Panics when `p` is non-finite (propagated from classification).
pub fn forward(t: &Trapezoid, p: PlanePoint) -> MapEvaluation {
    let region = classify_region(t, p);
    let output = forward_in_region(t, region, p);
    MapEvaluation {
        input: p,
        output,
        region,
    }
}

/// Evaluates the inverse map at the image point `w`: classifies `w` in the
/// image plane, applies the matching inverse branch, and records both. The
/// reported region is the image-plane region of `w`.
///
/// # Panics
///
/// Panics when `w` is non-finite.
pub fn inverse(t: &Trapezoid, w: PlanePoint) -> MapEvaluation {
    let region = classify_image_region(t, w);
    let output = match region.half {
        HalfPlane::Right => inverse_right_branch(t, region.tag, w.x, w.y),
        HalfPlane::Left => {
            let q = inverse_right_branch(t, region.tag, -w.x, w.y);
            PlanePoint::new(-q.x, q.y)
        }
    };
    MapEvaluation {
        input: w,
        output,
        region,
    }
}

/// The `G1` branch written in complex arithmetic:
///
/// ```text
/// f(z) = (4 z + i*ell*(z - zbar)^2) / (4 + 2 i*ell*(z - zbar))
/// ```
///
/// Algebraically identical to the real `G1` formula (substitute
/// `z - zbar = 2iy` and simplify), but evaluated through an entirely
/// different code path — complex products and a complex division — so it
/// serves as an independent cross-check route. Valid on the closure of the
/// right-half trapezoid piece; not meaningful elsewhere.
///
/// # Panics
///
/// Panics when `p` is non-finite.
pub fn forward_g1_complex(t: &Trapezoid, p: PlanePoint) -> PlanePoint {
    assert!(
        p.is_finite(),
        "cannot evaluate map at non-finite point ({}, {})",
        p.x,
        p.y
    );
    let z = Complex64::new(p.x, p.y);
    let dz = z - z.conj(); // = 2iy
    let i = Complex64::new(0.0, 1.0);
    let num = 4.0 * z + i * t.ell() * dz * dz;
    let den = Complex64::new(4.0, 0.0) + 2.0 * i * t.ell() * dz;
    let w = num / den;
    PlanePoint::new(w.re, w.im)
}

/// Evaluates the assembled parallelogram map at `p`.
///
/// The right half of the parallelogram is the right half of the companion
/// trapezoid flipped upside down, so the branch there is
/// `flip . f_trapezoid . flip` with `flip(x, y) = (x, 1 - y)`. The left half
/// follows from the central symmetry of the parallelogram about `i/2`:
/// `F(i - z) = i - F(z)`. The parallelogram's interior maps onto the
/// rectangle `[-half_d, half_d] x [0, 1]`.
///
/// The reported region classifies the flipped point against the companion
/// trapezoid, with the half-plane of `p` itself.
///
/// # Panics
///
/// Panics when `p` is non-finite.
pub fn forward_parallelogram(
    pg: &crate::geometry::Parallelogram,
    p: PlanePoint,
) -> MapEvaluation {
    assert!(
        p.is_finite(),
        "cannot evaluate map at non-finite point ({}, {})",
        p.x,
        p.y
    );
    let t = pg.companion_trapezoid();
    if p.x >= 0.0 {
        let flipped = PlanePoint::new(p.x, 1.0 - p.y);
        let inner = forward(t, flipped);
        MapEvaluation {
            input: p,
            output: PlanePoint::new(inner.output.x, 1.0 - inner.output.y),
            region: inner.region,
        }
    } else {
        // Central symmetry: F(z) = i - F(i - z), and i - z lands at x > 0.
        let partner = forward_parallelogram(pg, PlanePoint::new(-p.x, 1.0 - p.y));
        MapEvaluation {
            input: p,
            output: PlanePoint::new(-partner.output.x, 1.0 - partner.output.y),
            region: Region::new(partner.region.tag, HalfPlane::Left),
        }
    }
}

/// One sample point on a seam, together with the two regions whose branches
/// meet there. Continuity of the map means
/// `forward_in_region(t, first, point) == forward_in_region(t, second, point)`
/// up to rounding.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeamSample {
    pub point: PlanePoint,
    pub first: Region,
    pub second: Region,
}

fn right(tag: RegionTag) -> Region {
    Region::new(tag, HalfPlane::Right)
}

/// Samples every seam of the decomposition with `n` points each (endpoints
/// included) and records which two branches meet there.
///
/// Seven seams are walked: the five region interfaces of the right
/// half-plane (slanted side `G1|G2`, top edge `G1|G3`, top line `G2|G4`,
/// vertical ray `G3|G4`, bottom edge `G1|G5`, bottom line `G2|G5`) and the
/// symmetry axis, where each right-half branch meets its left-half mirror.
/// Unbounded seams are truncated to the default analysis window
/// (`x <= 3d`, `-2 <= y <= 3`).
///
/// # Errors
///
/// [`Error::Domain`] when `n < 2` (both endpoints are always sampled).
pub fn seam_samples(t: &Trapezoid, n: usize) -> Result<Vec<SeamSample>, Error> {
    use alloc::format;
    if n < 2 {
        return Err(Error::Domain(format!(
            "seam sampling needs at least 2 points per seam (got n = {n})"
        )));
    }
    let c = t.c();
    let d = t.d();
    let x_far = 3.0 * d;
    let (y_low, y_high) = (-2.0, 3.0);
    let steps = |a: f64, b: f64| {
        let count = n;
        (0..count).map(move |i| a + (b - a) * (i as f64) / ((count - 1) as f64))
    };

    let mut out = Vec::with_capacity(7 * n);
    // Slanted trapezoid side: x = d(1 - ell*y), y in [0, 1].
    for y in steps(0.0, 1.0) {
        out.push(SeamSample {
            point: PlanePoint::new(d * (1.0 - t.ell() * y), y),
            first: right(RegionTag::G1),
            second: right(RegionTag::G2),
        });
    }
    // Top edge of the trapezoid: y = 1, x in [0, c].
    for x in steps(0.0, c) {
        out.push(SeamSample {
            point: PlanePoint::new(x, 1.0),
            first: right(RegionTag::G1),
            second: right(RegionTag::G3),
        });
    }
    // Top line beyond the trapezoid: y = 1, x in [c, 3d].
    for x in steps(c, x_far) {
        out.push(SeamSample {
            point: PlanePoint::new(x, 1.0),
            first: right(RegionTag::G2),
            second: right(RegionTag::G4),
        });
    }
    // Vertical ray: x = c, y in [1, 3].
    for y in steps(1.0, y_high) {
        out.push(SeamSample {
            point: PlanePoint::new(c, y),
            first: right(RegionTag::G3),
            second: right(RegionTag::G4),
        });
    }
    // Bottom edge of the trapezoid: y = 0, x in [0, d].
    for x in steps(0.0, d) {
        out.push(SeamSample {
            point: PlanePoint::new(x, 0.0),
            first: right(RegionTag::G1),
            second: right(RegionTag::G5),
        });
    }
    // Bottom line beyond the trapezoid: y = 0, x in [d, 3d].
    for x in steps(d, x_far) {
        out.push(SeamSample {
            point: PlanePoint::new(x, 0.0),
            first: right(RegionTag::G2),
            second: right(RegionTag::G5),
        });
    }
    // Symmetry axis: x = 0, y in [-2, 3]; the branch tag depends on y.
    for y in steps(y_low, y_high) {
        let tag = classify_region(t, PlanePoint::new(0.0, y)).tag;
        out.push(SeamSample {
            point: PlanePoint::new(0.0, y),
            first: Region::new(tag, HalfPlane::Right),
            second: Region::new(tag, HalfPlane::Left),
        });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{seam_distance, Parallelogram, Window};
    use crate::testutil::assert_close;
    use proptest::prelude::*;

    fn quarter_trapezoid() -> Trapezoid {
        Trapezoid::new(0.25, 2.0).unwrap()
    }

    #[test]
    fn rectangle_case_is_the_identity() {
        let t = Trapezoid::new(0.5, 3.0).unwrap();
        for (x, y) in [
            (0.5, 0.5),
            (2.9, 0.1),
            (5.0, 0.5),
            (1.0, 2.0),
            (4.0, 1.5),
            (2.0, -1.0),
            (-0.7, 0.3),
            (-4.0, 2.0),
        ] {
            let eval = forward(&t, PlanePoint::new(x, y));
            assert_eq!(eval.output.x, x, "ell = 0 must reproduce x exactly");
            assert_eq!(eval.output.y, y);
            let back = inverse(&t, PlanePoint::new(x, y));
            assert_eq!(back.output.x, x);
            assert_eq!(back.output.y, y);
        }
    }

    #[test]
    fn known_images_in_each_region() {
        let t = quarter_trapezoid();
        // G1 interior point.
        let eval = forward(&t, PlanePoint::new(1.2, 0.4));
        assert_eq!(eval.region, right(RegionTag::G1));
        assert_close(eval.output.x, 1.5, 1e-15, "G1 image x");
        assert_close(eval.output.y, 0.4, 1e-15, "G1 image y");
        // Top-right trapezoid corner goes to the rectangle corner.
        let eval = forward(&t, PlanePoint::new(1.0, 1.0));
        assert_close(eval.output.x, 2.0, 1e-15, "corner image x");
        assert_close(eval.output.y, 1.0, 1e-15, "corner image y");
        // G2: shear by m*y with m = 1.
        let eval = forward(&t, PlanePoint::new(1.7, 0.5));
        assert_eq!(eval.region, right(RegionTag::G2));
        assert_close(eval.output.x, 2.2, 1e-15, "G2 image x");
        // G3: stretch by 1/(1 - ell) = 2.
        let eval = forward(&t, PlanePoint::new(0.5, 1.2));
        assert_eq!(eval.region, right(RegionTag::G3));
        assert_close(eval.output.x, 1.0, 1e-15, "G3 image x");
        // G4: translate by m = 1.
        let eval = forward(&t, PlanePoint::new(1.2, 1.2));
        assert_eq!(eval.region, right(RegionTag::G4));
        assert_close(eval.output.x, 2.2, 1e-15, "G4 image x");
        // G5: identity.
        let eval = forward(&t, PlanePoint::new(0.3, -0.1));
        assert_eq!(eval.region, right(RegionTag::G5));
        assert_eq!(eval.output, PlanePoint::new(0.3, -0.1));
    }

    #[test]
    fn odd_reflection_on_the_left_half() {
        let t = quarter_trapezoid();
        for (x, y) in [(1.2, 0.4), (1.7, 0.5), (0.5, 1.2), (1.2, 1.2), (0.3, -0.1)] {
            let r = forward(&t, PlanePoint::new(x, y));
            let l = forward(&t, PlanePoint::new(-x, y));
            assert_eq!(l.output.x, -r.output.x, "u must be odd in x");
            assert_eq!(l.output.y, r.output.y, "v must be even in x");
            assert_eq!(l.region.tag, r.region.tag);
            assert_eq!(l.region.half, HalfPlane::Left);
        }
    }

    #[test]
    fn axis_is_fixed() {
        let t = quarter_trapezoid();
        for y in [-1.5, 0.0, 0.3, 1.0, 2.7] {
            let eval = forward(&t, PlanePoint::new(0.0, y));
            assert_eq!(eval.output.x, 0.0);
            assert_eq!(eval.output.y, y);
        }
    }

    #[test]
    fn trapezoid_boundary_maps_onto_rectangle_boundary() {
        let t = quarter_trapezoid();
        let (c, d) = (t.c(), t.d());
        let n = 200;
        for i in 0..=n {
            let s = i as f64 / n as f64;
            // Bottom edge stays put.
            let p = PlanePoint::new(-d + 2.0 * d * s, 0.0);
            let w = forward(&t, p).output;
            assert_close(w.x, p.x, 1e-12, "bottom edge x");
            assert_close(w.y, 0.0, 1e-12, "bottom edge y");
            // Top edge x in [-c, c] goes to [-d, d] at height 1.
            let p = PlanePoint::new(-c + 2.0 * c * s, 1.0);
            let w = forward(&t, p).output;
            assert_close(w.x, p.x / (1.0 - t.ell()), 1e-12, "top edge x");
            assert_close(w.y, 1.0, 1e-12, "top edge y");
            // Right slant goes to the vertical side u = d.
            let y = s;
            let p = PlanePoint::new(d * (1.0 - t.ell() * y), y);
            let w = forward(&t, p).output;
            assert_close(w.x, d, 1e-12, "right slant image");
            assert_close(w.y, y, 1e-12, "right slant height");
            // Left slant goes to u = -d.
            let p = PlanePoint::new(-d * (1.0 - t.ell() * y), y);
            let w = forward(&t, p).output;
            assert_close(w.x, -d, 1e-12, "left slant image");
        }
    }

    #[test]
    fn complex_and_real_g1_forms_agree() {
        let t = quarter_trapezoid();
        let n = 40;
        for i in 0..n {
            for j in 0..n {
                let y = (j as f64 + 0.5) / n as f64;
                let xmax = t.d() * (1.0 - t.ell() * y);
                let x = xmax * (i as f64 + 0.5) / n as f64;
                let p = PlanePoint::new(x, y);
                let a = forward(&t, p).output;
                let b = forward_g1_complex(&t, p);
                assert!(
                    (a.x - b.x).abs() <= 1e-12 && (a.y - b.y).abs() <= 1e-12,
                    "complex route diverged at {p}: ({}, {}) vs ({}, {})",
                    a.x,
                    a.y,
                    b.x,
                    b.y
                );
            }
        }
    }

    #[test]
    fn inverse_undoes_known_images() {
        let t = quarter_trapezoid();
        let back = inverse(&t, PlanePoint::new(2.0, 1.0));
        assert_close(back.output.x, 1.0, 1e-15, "corner preimage x");
        assert_close(back.output.y, 1.0, 1e-15, "corner preimage y");
        assert_eq!(back.region.tag, RegionTag::G1);
        let back = inverse(&t, PlanePoint::new(1.5, 0.4));
        assert_close(back.output.x, 1.2, 1e-15, "G1 preimage x");
        // The inverse classifies in the image plane: u = 2.2 > d at v = 0.5
        // belongs to the image G2 even though 2.2 is also outside the slant.
        let back = inverse(&t, PlanePoint::new(2.2, 0.5));
        assert_eq!(back.region, right(RegionTag::G2));
        assert_close(back.output.x, 1.7, 1e-15, "G2 preimage x");
    }

    #[test]
    fn forward_region_matches_image_region() {
        let t = quarter_trapezoid();
        // Away from seams, the image of a G_k point must classify as the
        // image-plane G_k, so inverse picks the matching branch.
        let window = Window::default_for(&t);
        let n = 60;
        for i in 0..n {
            for j in 0..n {
                let x = window.x_min
                    + (window.x_max - window.x_min) * ((i as f64 + 0.5) / n as f64);
                let y = window.y_min
                    + (window.y_max - window.y_min) * ((j as f64 + 0.5) / n as f64);
                let p = PlanePoint::new(x, y);
                if seam_distance(&t, p) < 1e-6 {
                    continue;
                }
                let eval = forward(&t, p);
                let img = classify_image_region(&t, eval.output);
                assert_eq!(
                    img, eval.region,
                    "image of {p} classified as {img}, mapped as {}",
                    eval.region
                );
            }
        }
    }

    #[test]
    fn seam_samples_cover_all_interfaces() {
        let t = quarter_trapezoid();
        let samples = seam_samples(&t, 5).unwrap();
        assert_eq!(samples.len(), 7 * 5);
        for s in &samples {
            // Both declared branches agree on the seam point, and whatever
            // region the classifier picks (at corners of the decomposition
            // that may be a third adjacent region), its branch agrees too.
            let a = forward_in_region(&t, s.first, s.point);
            let b = forward_in_region(&t, s.second, s.point);
            let via_classify = forward(&t, s.point).output;
            for (u, v) in [(a, b), (a, via_classify)] {
                assert!(
                    (u.x - v.x).abs() <= 1e-12 && (u.y - v.y).abs() <= 1e-12,
                    "branches {} and {} disagree at {}: ({}, {}) vs ({}, {})",
                    s.first,
                    s.second,
                    s.point,
                    u.x,
                    u.y,
                    v.x,
                    v.y
                );
            }
        }
        // Away from corners, classification lands in the declared pair.
        let interior = samples
            .iter()
            .filter(|s| {
                let r = classify_region(&t, s.point);
                r == s.first || r == s.second
            })
            .count();
        assert!(
            interior >= samples.len() - 7,
            "only {interior} of {} seam samples classified into their pair",
            samples.len()
        );
        assert!(seam_samples(&t, 1).is_err());
    }

    #[test]
    fn parallelogram_corners_map_to_rectangle_corners() {
        let pg = Parallelogram::new(0.25, 3.0).unwrap();
        // Vertices (-half_d, 0), (half_c, 0), (half_d, 1), (-half_c, 1) with
        // half_c = 1, half_d = 2; the image is [-2, 2] x [0, 1], and the two
        // slanted sides straighten onto the vertical sides.
        let cases = [
            ((1.0, 0.0), (2.0, 0.0)),
            ((-2.0, 0.0), (-2.0, 0.0)),
            ((2.0, 1.0), (2.0, 1.0)),
            ((-1.0, 1.0), (-2.0, 1.0)),
            // Midpoint of the right slant from (1, 0) to (2, 1).
            ((1.5, 0.5), (2.0, 0.5)),
        ];
        for ((x, y), (u, v)) in cases {
            let eval = forward_parallelogram(&pg, PlanePoint::new(x, y));
            assert_close(eval.output.x, u, 1e-12, "parallelogram corner u");
            assert_close(eval.output.y, v, 1e-12, "parallelogram corner v");
        }
        // Center of symmetry is fixed.
        let eval = forward_parallelogram(&pg, PlanePoint::new(0.0, 0.5));
        assert_close(eval.output.x, 0.0, 1e-15, "center u");
        assert_close(eval.output.y, 0.5, 1e-15, "center v");
    }

    #[test]
    fn parallelogram_map_is_centrally_symmetric() {
        let pg = Parallelogram::new(0.3, 2.0).unwrap();
        let pts = [
            (0.8, 0.2),
            (1.3, 0.9),
            (0.1, 0.6),
            (-0.4, 0.8),
            (-1.1, 0.3),
            (0.0, 0.9),
        ];
        for (x, y) in pts {
            let w = forward_parallelogram(&pg, PlanePoint::new(x, y)).output;
            let w2 = forward_parallelogram(&pg, PlanePoint::new(-x, 1.0 - y)).output;
            assert_close(w2.x, -w.x, 1e-14, "central symmetry u");
            assert_close(w2.y, 1.0 - w.y, 1e-14, "central symmetry v");
        }
    }

    #[test]
    fn map_is_injective_on_a_grid() {
        // y is preserved and each branch is increasing in x at fixed y, so it
        // suffices to see that images within a row stay strictly ordered with
        // a uniform gap. The row gap itself is the y-gap, untouched by the map.
        let t = quarter_trapezoid();
        let window = Window::default_for(&t);
        let n = 200;
        let dx = (window.x_max - window.x_min) / (n - 1) as f64;
        let dy = (window.y_max - window.y_min) / (n - 1) as f64;
        let min_input_sep = dx.min(dy);
        let k = crate::dilatation::global_bound(&t);
        let floor = min_input_sep / (2.0 * k);
        let mut min_gap = f64::INFINITY;
        for j in 0..n {
            let y = window.y_min + dy * j as f64;
            let mut prev = f64::NEG_INFINITY;
            for i in 0..n {
                let x = window.x_min + dx * i as f64;
                let u = forward(&t, PlanePoint::new(x, y)).output.x;
                assert!(u > prev, "image abscissas must increase along a row");
                if prev.is_finite() {
                    min_gap = min_gap.min(u - prev);
                }
                prev = u;
            }
        }
        assert!(
            min_gap.min(dy) >= floor,
            "grid images too close: gap {min_gap}, floor {floor}"
        );
    }

    fn any_trapezoid() -> impl Strategy<Value = Trapezoid> {
        (0.02f64..=0.5, 0.05f64..50.0).prop_map(|(alpha, excess)| {
            let d = crate::geometry::cot_pi_alpha(alpha) + excess;
            Trapezoid::new(alpha, d).expect("d > cot by construction")
        })
    }

    proptest! {
        #[test]
        fn round_trip_is_tight(
            t in any_trapezoid(),
            sx in -3.0f64..3.0,
            y in -2.0f64..3.0,
        ) {
            let p = PlanePoint::new(sx * t.d(), y);
            let w = forward(&t, p).output;
            let back = inverse(&t, w).output;
            let scale = 1.0_f64.max(p.x.abs()).max(p.y.abs());
            prop_assert!((back.x - p.x).abs() <= 1e-12 * scale,
                "x: {} -> {} -> {}", p.x, w.x, back.x);
            prop_assert!((back.y - p.y).abs() <= 1e-12 * scale);
        }

        #[test]
        fn forward_preserves_height_and_parity(
            t in any_trapezoid(),
            sx in -3.0f64..3.0,
            y in -2.0f64..3.0,
        ) {
            let p = PlanePoint::new(sx * t.d(), y);
            let w = forward(&t, p).output;
            prop_assert_eq!(w.y, p.y);
            let mirrored = forward(&t, PlanePoint::new(-p.x, p.y)).output;
            prop_assert_eq!(mirrored.x, -w.x);
        }
    }
}
