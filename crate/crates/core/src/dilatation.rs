//! Pointwise dilatation of the piecewise map: Wirtinger derivatives (closed
//! form and finite-difference), the dilatation quotient, per-region suprema
//! in closed form, and grid scans that compare the two.
//!
//! # Dilatation
//!
//! For a map `f` with Wirtinger derivatives `f_z = (f_x - i f_y)/2` and
//! `f_zbar = (f_x + i f_y)/2`, the dilatation is
//!
//! ```text
//! D_f = (|f_z| + |f_zbar|) / (|f_z| - |f_zbar|),
//! ```
//!
//! finite and `>= 1` wherever the map is orientation-preserving
//! (`|f_z| > |f_zbar|`). For the piecewise map every branch is affine or
//! rational in `(x, y)`, so the derivatives below are exact closed forms:
//! branch `G1` has the only position-dependent pair, `G2` and `G3` are
//! constant shears/stretches, and `G4`, `G5` are rigid.
//!
//! The per-region suprema ([`region_bound`]) are likewise closed forms; the
//! supremum over the whole plane is attained on `G1` ([`global_bound`]), and
//! grid scans ([`grid_max`]) verify both claims numerically.

use core::fmt;

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;

use num_complex::Complex64;

use crate::error::Error;
use crate::geometry::{
    classify_region, seam_distance, HalfPlane, PlanePoint, Region, RegionTag, Trapezoid, Window,
};
use crate::math;
use crate::qcmap::forward;

/// Default step for finite-difference derivative checks. Chosen near the
/// cube root of f64 epsilon scaled for second-order central differences:
/// small enough for O(h^2) truncation error around 1e-10 on these branches,
/// large enough that cancellation stays below it.
pub const DEFAULT_FD_STEP: f64 = 1e-5;

/// Margin used by [`grid_max`] to keep samples away from seams: twice
/// [`DEFAULT_FD_STEP`], so every surviving grid point can also host a
/// centered finite-difference stencil without straddling a branch switch.
pub const SEAM_EXCLUSION_MARGIN: f64 = 2e-5;

/// The pair of Wirtinger derivatives of the map at a point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WirtingerPair {
    /// `f_z`, the derivative with respect to `z`.
    pub fz: Complex64,
    /// `f_zbar`, the derivative with respect to `zbar`.
    pub fzbar: Complex64,
}

fn right_half_pair(t: &Trapezoid, tag: RegionTag, x: f64, y: f64) -> WirtingerPair {
    let ell = t.ell();
    let m = t.d() - t.c();
    match tag {
        RegionTag::G1 => {
            // u = x / (1 - ell*y): u_x = 1/den, u_y = ell*x/den^2.
            let den = 1.0 - ell * y;
            let ux = 1.0 / den;
            let uy = ell * x / (den * den);
            // f = u + i*y: f_x = u_x, f_y = u_y + i.
            WirtingerPair {
                fz: 0.5 * Complex64::new(ux + 1.0, -uy),
                fzbar: 0.5 * Complex64::new(ux - 1.0, uy),
            }
        }
        RegionTag::G2 => WirtingerPair {
            fz: Complex64::new(1.0, -0.5 * m),
            fzbar: Complex64::new(0.0, 0.5 * m),
        },
        RegionTag::G3 => {
            let s = 1.0 / (1.0 - ell);
            WirtingerPair {
                fz: Complex64::new(0.5 * (s + 1.0), 0.0),
                fzbar: Complex64::new(0.5 * (s - 1.0), 0.0),
            }
        }
        RegionTag::G4 | RegionTag::G5 => WirtingerPair {
            fz: Complex64::new(1.0, 0.0),
            fzbar: Complex64::new(0.0, 0.0),
        },
    }
}

/// Closed-form Wirtinger derivatives of the piecewise map at `p`.
///
/// On the left half-plane the odd reflection `f(z) = -conj(f(-conj(z)))`
/// turns both derivatives into the conjugates of their mirror values, so
/// their moduli — and hence the dilatation — are mirror-symmetric.
///
/// # Errors
///
/// [`Error::Domain`] when `p` is non-finite.
pub fn wirtinger(t: &Trapezoid, p: PlanePoint) -> Result<WirtingerPair, Error> {
    if !p.is_finite() {
        return Err(Error::Domain(format!(
            "derivatives need a finite point (got ({}, {}))",
            p.x, p.y
        )));
    }
    let region = classify_region(t, p);
    let pair = right_half_pair(t, region.tag, p.x.abs(), p.y);
    Ok(match region.half {
        HalfPlane::Right => pair,
        HalfPlane::Left => WirtingerPair {
            fz: pair.fz.conj(),
            fzbar: pair.fzbar.conj(),
        },
    })
}

/// Wirtinger derivatives estimated by second-order central differences with
/// step `h`, for cross-checking the closed forms through the plain forward
/// evaluator.
///
/// # Errors
///
/// * [`Error::Domain`] when `p` is non-finite or `h` is not a positive
///   finite number.
/// * [`Error::StencilStraddlesSeam`] when any of the four stencil points
///   falls in a different region than `p`, which would difference across a
///   branch switch. Use [`crate::geometry::seam_distance`] to pick safe
///   points, or shrink `h`.
pub fn wirtinger_fd(t: &Trapezoid, p: PlanePoint, h: f64) -> Result<WirtingerPair, Error> {
    if !p.is_finite() {
        return Err(Error::Domain(format!(
            "derivatives need a finite point (got ({}, {}))",
            p.x, p.y
        )));
    }
    if !(h.is_finite() && h > 0.0) {
        return Err(Error::Domain(format!(
            "finite-difference step must be positive and finite (got h = {h})"
        )));
    }
    let center = classify_region(t, p);
    let stencil = [
        PlanePoint::new(p.x + h, p.y),
        PlanePoint::new(p.x - h, p.y),
        PlanePoint::new(p.x, p.y + h),
        PlanePoint::new(p.x, p.y - h),
    ];
    for q in stencil {
        let r = classify_region(t, q);
        if r != center {
            return Err(Error::StencilStraddlesSeam {
                center,
                straddled: r,
            });
        }
    }
    let w = |q: PlanePoint| {
        let out = forward(t, q).output;
        Complex64::new(out.x, out.y)
    };
    let inv2h = 1.0 / (2.0 * h);
    let fx = (w(stencil[0]) - w(stencil[1])) * inv2h;
    let fy = (w(stencil[2]) - w(stencil[3])) * inv2h;
    let i = Complex64::new(0.0, 1.0);
    Ok(WirtingerPair {
        fz: 0.5 * (fx - i * fy),
        fzbar: 0.5 * (fx + i * fy),
    })
}

/// Dilatation quotient `(|f_z| + |f_zbar|) / (|f_z| - |f_zbar|)` of a
/// derivative pair.
///
/// # Errors
///
/// [`Error::DegenerateJacobian`] when `|f_z| <= |f_zbar|`, i.e. the pair does
/// not belong to an orientation-preserving point.
pub fn dilatation(pair: &WirtingerPair) -> Result<f64, Error> {
    let fz_abs = pair.fz.norm();
    let fzbar_abs = pair.fzbar.norm();
    // NaN norms are incomparable and must land in the error branch too.
    if fz_abs.partial_cmp(&fzbar_abs) != Some(core::cmp::Ordering::Greater) {
        return Err(Error::DegenerateJacobian { fz_abs, fzbar_abs });
    }
    Ok((fz_abs + fzbar_abs) / (fz_abs - fzbar_abs))
}

/// Closed-form supremum of the dilatation over one region (the same for both
/// half-planes, by mirror symmetry).
///
/// * `G1`: `(sqrt((2-ell)^2 + (ell*d)^2) + ell*sqrt(1 + d^2))^2 / (4(1-ell))`,
///   approached at the trapezoid's top-right corner `(c, 1)`;
/// * `G2`: `((m + sqrt(m^2 + 4))/2)^2` with `m = d - c` — the constant
///   dilatation of the shear;
/// * `G3`: `1/(1-ell)` — the constant dilatation of the stretch;
/// * `G4`, `G5`: `1` (rigid motions).
pub fn region_bound(t: &Trapezoid, tag: RegionTag) -> f64 {
    let ell = t.ell();
    let d = t.d();
    match tag {
        RegionTag::G1 => {
            let reach = math::sqrt((2.0 - ell) * (2.0 - ell) + ell * ell * d * d)
                + ell * math::sqrt(1.0 + d * d);
            reach * reach / (4.0 * (1.0 - ell))
        }
        RegionTag::G2 => {
            let m = d - t.c();
            let r = 0.5 * (m + math::sqrt(m * m + 4.0));
            r * r
        }
        RegionTag::G3 => 1.0 / (1.0 - ell),
        RegionTag::G4 | RegionTag::G5 => 1.0,
    }
}

/// Supremum of the dilatation over the whole plane: the `G1` bound, which
/// dominates every other region's bound (the shear and stretch dilatations
/// embed into the `G1` corner value). This is the quasiconformality constant
/// of the map.
pub fn global_bound(t: &Trapezoid) -> f64 {
    region_bound(t, RegionTag::G1)
}

/// The same global bound written in the trapezoid's base data
/// `(c, d, cot = d - c)` instead of `(ell, d)`:
///
/// ```text
/// (sqrt((d + c)^2 + d^2 cot^2) + cot * sqrt(1 + d^2))^2 / (4 c d)
/// ```
///
/// Algebraically identical to [`global_bound`] (multiply numerator and
/// denominator of the `ell` form by `d^2` and substitute `ell = cot/d`);
/// kept as a second evaluation route for verification.
pub fn global_bound_base_form(t: &Trapezoid) -> f64 {
    let c = t.c();
    let d = t.d();
    let cot = d - c;
    let reach = math::sqrt((d + c) * (d + c) + d * d * cot * cot)
        + cot * math::sqrt(1.0 + d * d);
    reach * reach / (4.0 * c * d)
}

/// One grid sample from [`grid_max`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DilatationSample {
    pub point: PlanePoint,
    pub region: Region,
    pub dilatation: f64,
}

/// Output of [`grid_max`]: the retained samples and the per-region maxima.
#[derive(Debug, Clone, PartialEq)]
pub struct DilatationField {
    /// All samples that survived the seam exclusion, in row-major order.
    pub samples: Vec<DilatationSample>,
    /// Largest observed dilatation per region actually hit by the grid.
    pub max_per_region: BTreeMap<Region, f64>,
}

impl DilatationField {
    /// Largest observed dilatation for a region tag, across both half-planes.
    /// `None` when the grid never sampled that tag.
    pub fn tag_max(&self, tag: RegionTag) -> Option<f64> {
        let mut best: Option<f64> = None;
        for (region, &value) in &self.max_per_region {
            if region.tag == tag {
                best = Some(best.map_or(value, |b: f64| b.max(value)));
            }
        }
        best
    }

    /// Largest observed dilatation over all samples, `None` for an empty scan.
    pub fn overall_max(&self) -> Option<f64> {
        self.max_per_region
            .values()
            .copied()
            .fold(None, |acc: Option<f64>, v| Some(acc.map_or(v, |a| a.max(v))))
    }
}

impl fmt::Display for DilatationField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "dilatation field ({} samples;", self.samples.len())?;
        for (region, value) in &self.max_per_region {
            write!(f, " max[{region}] = {value}")?;
        }
        write!(f, ")")
    }
}

/// Scans the closed-form dilatation on a `resolution x resolution` grid over
/// `window`, skipping points within [`SEAM_EXCLUSION_MARGIN`] of a seam, and
/// returns the samples plus per-region maxima.
///
/// The scan uses the exact derivatives ([`wirtinger`]); pairing it with
/// [`region_bound`] checks that no sample exceeds its region's closed-form
/// supremum and that the `G1` samples come close to theirs.
///
/// # Errors
///
/// [`Error::Domain`] when `resolution < 2`.
pub fn grid_max(
    t: &Trapezoid,
    resolution: usize,
    window: Window,
) -> Result<DilatationField, Error> {
    if resolution < 2 {
        return Err(Error::Domain(format!(
            "grid scan needs resolution >= 2 (got {resolution})"
        )));
    }
    let nf = (resolution - 1) as f64;
    let mut samples = Vec::new();
    let mut max_per_region: BTreeMap<Region, f64> = BTreeMap::new();
    for j in 0..resolution {
        let y = window.y_min + (window.y_max - window.y_min) * (j as f64) / nf;
        for i in 0..resolution {
            let x = window.x_min + (window.x_max - window.x_min) * (i as f64) / nf;
            let p = PlanePoint::new(x, y);
            if seam_distance(t, p) < SEAM_EXCLUSION_MARGIN {
                continue;
            }
            let region = classify_region(t, p);
            let pair = wirtinger(t, p).expect("grid points are finite");
            let value = dilatation(&pair)
                .expect("piecewise map is orientation-preserving on every region");
            samples.push(DilatationSample {
                point: p,
                region,
                dilatation: value,
            });
            max_per_region
                .entry(region)
                .and_modify(|m| *m = m.max(value))
                .or_insert(value);
        }
    }
    Ok(DilatationField {
        samples,
        max_per_region,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::cot_pi_alpha;
    use crate::testutil::assert_close;
    use proptest::prelude::*;

    fn quarter_trapezoid() -> Trapezoid {
        Trapezoid::new(0.25, 2.0).unwrap()
    }

    #[test]
    fn rectangle_case_has_unit_derivatives() {
        let t = Trapezoid::new(0.5, 3.0).unwrap();
        for (x, y) in [(0.5, 0.5), (5.0, 0.2), (1.0, 2.0), (-2.0, -1.0)] {
            let pair = wirtinger(&t, PlanePoint::new(x, y)).unwrap();
            assert_eq!(pair.fz, Complex64::new(1.0, 0.0));
            assert_eq!(pair.fzbar, Complex64::new(0.0, 0.0));
            assert_eq!(dilatation(&pair).unwrap(), 1.0);
        }
    }

    #[test]
    fn g1_derivatives_match_frozen_values() {
        // At alpha = 1/4, d = 2 (ell = 1/2) and p = (1.2, 0.4):
        // den = 0.8, u_x = 1.25, u_y = 0.5*1.2/0.64 = 0.9375, so
        // f_z = (2.25 - 0.9375 i)/2 and f_zbar = (0.25 + 0.9375 i)/2.
        let t = quarter_trapezoid();
        let pair = wirtinger(&t, PlanePoint::new(1.2, 0.4)).unwrap();
        assert_close(pair.fz.re, 1.125, 1e-15, "G1 fz re");
        assert_close(pair.fz.im, -0.46875, 1e-15, "G1 fz im");
        assert_close(pair.fzbar.re, 0.125, 1e-15, "G1 fzbar re");
        assert_close(pair.fzbar.im, 0.46875, 1e-15, "G1 fzbar im");
    }

    #[test]
    fn axis_points_have_real_derivatives_in_g1() {
        let t = quarter_trapezoid();
        let pair = wirtinger(&t, PlanePoint::new(0.0, 0.5)).unwrap();
        assert_eq!(pair.fz.im, 0.0, "on the axis u_y vanishes");
        assert_eq!(pair.fzbar.im, 0.0);
        // den = 0.75: fz = (1/0.75 + 1)/2, fzbar = (1/0.75 - 1)/2.
        assert_close(pair.fz.re, 7.0 / 6.0, 1e-15, "axis fz");
        assert_close(pair.fzbar.re, 1.0 / 6.0, 1e-15, "axis fzbar");
    }

    #[test]
    fn left_half_conjugates_the_pair() {
        let t = quarter_trapezoid();
        for (x, y) in [(1.2, 0.4), (1.7, 0.5), (0.5, 1.2), (0.4, -0.3)] {
            let r = wirtinger(&t, PlanePoint::new(x, y)).unwrap();
            let l = wirtinger(&t, PlanePoint::new(-x, y)).unwrap();
            assert_eq!(l.fz, r.fz.conj());
            assert_eq!(l.fzbar, r.fzbar.conj());
            // Dilatation is unchanged by conjugation.
            assert_eq!(
                dilatation(&l).unwrap(),
                dilatation(&r).unwrap(),
                "dilatation must be mirror-symmetric"
            );
        }
    }

    #[test]
    fn constant_branches_have_constant_pairs() {
        let t = quarter_trapezoid();
        // G2 pair is independent of position.
        let a = wirtinger(&t, PlanePoint::new(1.9, 0.2)).unwrap();
        let b = wirtinger(&t, PlanePoint::new(4.0, 0.9)).unwrap();
        assert_eq!(a, b);
        // m = d - c reproduces 1 only to rounding, so compare with assert_close.
        assert_close(a.fz.re, 1.0, 1e-15, "G2 fz re");
        assert_close(a.fz.im, -0.5, 1e-15, "G2 fz im");
        assert_close(a.fzbar.re, 0.0, 1e-15, "G2 fzbar re");
        assert_close(a.fzbar.im, 0.5, 1e-15, "G2 fzbar im");
        // G3: real stretch, s = 2.
        let g3 = wirtinger(&t, PlanePoint::new(0.5, 1.5)).unwrap();
        assert_close(g3.fz.re, 1.5, 1e-15, "G3 fz re");
        assert_eq!(g3.fz.im, 0.0);
        assert_close(g3.fzbar.re, 0.5, 1e-15, "G3 fzbar re");
        assert_eq!(g3.fzbar.im, 0.0);
        // G4 and G5 are rigid.
        for (x, y) in [(1.5, 2.0), (0.7, -0.4)] {
            let pair = wirtinger(&t, PlanePoint::new(x, y)).unwrap();
            assert_eq!(dilatation(&pair).unwrap(), 1.0);
        }
    }

    #[test]
    fn finite_differences_confirm_closed_forms() {
        let t = quarter_trapezoid();
        // One interior point per region, both halves.
        let points = [
            (0.6, 0.45),
            (-0.6, 0.45),
            (2.5, 0.5),
            (-2.5, 0.5),
            (0.4, 1.8),
            (1.9, 2.2),
            (1.0, -0.8),
            (-1.0, -0.8),
        ];
        for (x, y) in points {
            let p = PlanePoint::new(x, y);
            let exact = wirtinger(&t, p).unwrap();
            let fd = wirtinger_fd(&t, p, DEFAULT_FD_STEP).unwrap();
            let scale = exact.fz.norm().max(1.0);
            assert!(
                (exact.fz - fd.fz).norm() <= 1e-8 * scale,
                "fz mismatch at {p}: {} vs {}",
                exact.fz,
                fd.fz
            );
            assert!(
                (exact.fzbar - fd.fzbar).norm() <= 1e-8 * scale,
                "fzbar mismatch at {p}: {} vs {}",
                exact.fzbar,
                fd.fzbar
            );
        }
    }

    #[test]
    fn stencil_near_seam_is_rejected() {
        let t = quarter_trapezoid();
        // (1.49, 0.5) is 1e-2-ish from the slanted seam; a step of 0.1
        // reaches across it.
        let err = wirtinger_fd(&t, PlanePoint::new(1.49, 0.5), 0.1).unwrap_err();
        match err {
            Error::StencilStraddlesSeam { center, straddled } => {
                assert_eq!(center.tag, RegionTag::G1);
                assert_eq!(straddled.tag, RegionTag::G2);
            }
            other => panic!("expected straddle error, got {other:?}"),
        }
        // Same point with the default small step is fine.
        assert!(wirtinger_fd(&t, PlanePoint::new(1.49, 0.5), DEFAULT_FD_STEP).is_ok());
    }

    #[test]
    fn bad_fd_inputs_are_domain_errors() {
        let t = quarter_trapezoid();
        let p = PlanePoint::new(0.5, 0.5);
        assert!(matches!(
            wirtinger_fd(&t, p, 0.0),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            wirtinger_fd(&t, p, -1e-5),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            wirtinger_fd(&t, p, f64::NAN),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            wirtinger(&t, PlanePoint::new(f64::NAN, 0.0)),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn degenerate_pairs_are_rejected() {
        let pair = WirtingerPair {
            fz: Complex64::new(1.0, 0.0),
            fzbar: Complex64::new(0.0, 1.0),
        };
        match dilatation(&pair).unwrap_err() {
            Error::DegenerateJacobian { fz_abs, fzbar_abs } => {
                assert_eq!(fz_abs, 1.0);
                assert_eq!(fzbar_abs, 1.0);
            }
            other => panic!("expected degenerate-jacobian error, got {other:?}"),
        }
    }

    #[test]
    fn shear_dilatation_matches_closed_form() {
        // A shear (x, y) -> (x + m*y, y) has dilatation
        // ((m + sqrt(m^2+4))/2)^2; for m = 1 that is the squared golden
        // ratio, 2.618...
        let t = quarter_trapezoid();
        let pair = wirtinger(&t, PlanePoint::new(3.0, 0.5)).unwrap();
        let value = dilatation(&pair).unwrap();
        assert_close(value, 2.618033988749895, 1e-12, "G2 dilatation");
        assert_close(
            region_bound(&t, RegionTag::G2),
            2.618033988749895,
            1e-12,
            "G2 bound",
        );
    }

    #[test]
    fn region_bounds_known_values() {
        let t = quarter_trapezoid();
        // G3 bound = 1/(1 - ell) = 2.
        assert_close(region_bound(&t, RegionTag::G3), 2.0, 1e-15, "G3 bound");
        assert_eq!(region_bound(&t, RegionTag::G4), 1.0);
        assert_eq!(region_bound(&t, RegionTag::G5), 1.0);
        // G1 bound, frozen: (sqrt(2.25 + 1) + 0.5*sqrt(5))^2 / 2.
        assert_close(
            region_bound(&t, RegionTag::G1),
            4.265564437074639,
            1e-12,
            "G1 bound",
        );
        // Rectangle case: everything is 1.
        let r = Trapezoid::new(0.5, 3.0).unwrap();
        for tag in RegionTag::ALL {
            assert_eq!(region_bound(&r, tag), 1.0, "{tag} bound for rectangle");
        }
    }

    #[test]
    fn g1_dilatation_approaches_its_bound_at_the_corner() {
        let t = quarter_trapezoid();
        let bound = region_bound(&t, RegionTag::G1);
        // Approach the top-right corner (c, 1) from inside G1.
        let p = PlanePoint::new(t.c() - 1e-9, 1.0 - 1e-9);
        let value = dilatation(&wirtinger(&t, p).unwrap()).unwrap();
        assert!(
            value <= bound + 1e-9,
            "corner value {value} exceeds bound {bound}"
        );
        assert_close(value, bound, 1e-6, "corner value vs G1 bound");
    }

    #[test]
    fn global_bound_forms_agree_and_dominate() {
        for (alpha, excess) in [
            (0.1, 0.3),
            (0.2, 1.0),
            (0.25, 1.0),
            (0.3, 5.0),
            (0.45, 0.2),
            (0.5, 2.0),
            (0.05, 20.0),
        ] {
            let t = Trapezoid::new(alpha, cot_pi_alpha(alpha) + excess).unwrap();
            let k = global_bound(&t);
            let k_base = global_bound_base_form(&t);
            assert!(
                (k - k_base).abs() <= 1e-12 * k,
                "forms disagree at alpha = {alpha}: {k} vs {k_base}"
            );
            for tag in RegionTag::ALL {
                assert!(
                    region_bound(&t, tag) <= k * (1.0 + 1e-12),
                    "{tag} bound exceeds the global bound at alpha = {alpha}"
                );
            }
        }
    }

    #[test]
    fn grid_max_respects_bounds() {
        let t = quarter_trapezoid();
        let window = Window::default_for(&t);
        let field = grid_max(&t, 96, window).unwrap();
        assert!(!field.samples.is_empty());
        for (region, &observed) in &field.max_per_region {
            let bound = region_bound(&t, region.tag);
            assert!(
                observed <= bound + 1e-9,
                "{region} observed {observed} above bound {bound}"
            );
        }
        // The constant branches attain their bound exactly.
        assert_close(
            field.tag_max(RegionTag::G2).unwrap(),
            region_bound(&t, RegionTag::G2),
            1e-12,
            "G2 max vs bound",
        );
        assert_close(
            field.tag_max(RegionTag::G3).unwrap(),
            region_bound(&t, RegionTag::G3),
            1e-12,
            "G3 max vs bound",
        );
        assert_eq!(field.tag_max(RegionTag::G5).unwrap(), 1.0);
        assert!(field.overall_max().unwrap() <= global_bound(&t) + 1e-9);
        // Both halves get sampled.
        assert!(field
            .max_per_region
            .keys()
            .any(|r| r.half == HalfPlane::Left));
        assert!(grid_max(&t, 1, window).is_err());
    }

    #[test]
    fn rectangle_grid_is_identically_one() {
        let t = Trapezoid::new(0.5, 2.0).unwrap();
        let field = grid_max(&t, 48, Window::default_for(&t)).unwrap();
        for sample in &field.samples {
            assert_eq!(sample.dilatation, 1.0);
        }
    }

    #[test]
    fn dilatation_rises_toward_the_slanted_corner() {
        // Within G1, the dilatation grows along x at fixed y and, maximized
        // over x, grows along y. Checked on dense sweeps.
        let t = quarter_trapezoid();
        let slack = 1e-12;
        let n = 400;
        for j in 0..8 {
            let y = 0.1 + 0.8 * (j as f64) / 7.0;
            let xmax = t.d() * (1.0 - t.ell() * y);
            let mut prev = 0.0;
            for i in 0..n {
                // Scale the unit fraction so the last point is exactly xmax
                // (multiplying first could round one ulp past the seam).
                let x = xmax * ((i as f64) / ((n - 1) as f64));
                let v = dilatation(&wirtinger(&t, PlanePoint::new(x, y)).unwrap()).unwrap();
                assert!(
                    v >= prev - slack,
                    "dilatation dropped along the row at y = {y}: {prev} -> {v}"
                );
                prev = v;
            }
        }
        let mut prev = 0.0;
        for j in 0..n {
            let y = (j as f64) / ((n - 1) as f64);
            let x = t.d() * (1.0 - t.ell() * y);
            let v = dilatation(&wirtinger(&t, PlanePoint::new(x, y)).unwrap()).unwrap();
            assert!(
                v >= prev - slack,
                "row maximum dropped at y = {y}: {prev} -> {v}"
            );
            prev = v;
        }
    }

    fn any_trapezoid() -> impl Strategy<Value = Trapezoid> {
        (0.02f64..=0.5, 0.05f64..50.0).prop_map(|(alpha, excess)| {
            let d = cot_pi_alpha(alpha) + excess;
            Trapezoid::new(alpha, d).expect("d > cot by construction")
        })
    }

    proptest! {
        #[test]
        fn dilatation_is_scale_invariant(
            re in -2.0f64..2.0,
            im in -2.0f64..2.0,
            rb in -0.4f64..0.4,
            ib in -0.4f64..0.4,
            s in 0.1f64..10.0,
        ) {
            // Scaling both derivatives by s > 0 leaves the quotient fixed.
            let fz = Complex64::new(re + 3.0, im); // keep |fz| > |fzbar|
            let fzbar = Complex64::new(rb, ib);
            let base = WirtingerPair { fz, fzbar };
            let scaled = WirtingerPair { fz: s * fz, fzbar: s * fzbar };
            let a = dilatation(&base).unwrap();
            let b = dilatation(&scaled).unwrap();
            prop_assert!((a - b).abs() <= 1e-12 * a);
        }

        #[test]
        fn sampled_dilatation_never_exceeds_region_bound(
            t in any_trapezoid(),
            sx in -3.0f64..3.0,
            y in -2.0f64..3.0,
        ) {
            let p = PlanePoint::new(sx * t.d(), y);
            let region = classify_region(&t, p);
            let value = dilatation(&wirtinger(&t, p).unwrap()).unwrap();
            let bound = region_bound(&t, region.tag);
            prop_assert!(
                value <= bound * (1.0 + 1e-12),
                "dilatation {} above bound {} in {}", value, bound, region
            );
            prop_assert!(value >= 1.0);
        }
    }
}
