//! The `verify` subcommand's check suite: numerical validation of the
//! piecewise map and its dilatation analysis, with per-check margins.
//!
//! Six checks run against one trapezoid: seam continuity of the branches,
//! equivalence of the rational complex form with the real branch on the
//! trapezoid piece, finite differences against the closed-form derivatives,
//! a grid scan of the dilatation against the per-region bounds (both "never
//! above" and "the trapezoid piece comes within 1% of its supremum"), and
//! the forward/inverse round trip. Every check reports its observed margin,
//! its tolerance, and its sample count, so a pass is auditable.

use qctrap_core::geometry::{classify_region, seam_distance};
use qctrap_core::{dilatation, qcmap};
use qctrap_core::{HalfPlane, PlanePoint, Region, RegionTag, Trapezoid, Window};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::report::CheckResult;

/// Tolerance for the finite-difference cross-check: second-order central
/// differences at `FD_STEP` carry truncation error around 1e-10 on these
/// branches, so a 1e-6 gate catches any formula error while never tripping
/// on discretization noise.
const FD_TOL: f64 = 1e-6;
/// Step for the finite-difference stencils.
const FD_STEP: f64 = 1e-5;
/// Minimum seam distance for sampled stencil centers; exceeds
/// `FD_STEP * sqrt(2)` so the whole stencil stays inside one region.
const FD_MARGIN: f64 = 3e-5;
/// Absolute slack allowed over the closed-form region bounds; the bounds are
/// suprema, so sampled values may only reach them from below and anything
/// beyond rounding noise is a defect.
const BOUND_SLACK: f64 = 1e-9;
/// The grid maximum on the trapezoid piece must come within this fraction of
/// its closed-form supremum (which sits at the top corner).
const PROXIMITY_TOL: f64 = 0.01;
/// Sample counts, chosen to keep a full run well under a second while
/// exercising every region and both half-planes.
const SEAM_POINTS_PER_SEAM: usize = 150;
const COMPLEX_GRID: usize = 40;
const FD_POINTS_PER_REGION: usize = 1000;
const ROUND_TRIP_POINTS: usize = 10_000;

/// Runs all checks against `t`. Failures are reported in the results, not
/// as errors; `Err` means the check could not even be set up (for example a
/// grid resolution below 2).
pub fn run_checks(
    t: &Trapezoid,
    resolution: usize,
    tol: f64,
) -> Result<Vec<CheckResult>, qctrap_core::Error> {
    let mut checks = vec![
        seam_continuity(t, tol)?,
        g1_complex_equivalence(t, tol),
        wirtinger_fd_vs_analytic(t),
    ];
    let field = concentrated_grid(t, resolution)?;
    checks.push(region_bounds_hold(t, &field));
    checks.push(g1_max_approaches_bound(t, &field));
    checks.push(round_trip(t, tol));
    Ok(checks)
}

/// Worst per-coordinate disagreement of the two branches meeting at each
/// seam, over every seam of the decomposition (mirror seam included).
fn seam_continuity(t: &Trapezoid, tol: f64) -> Result<CheckResult, qctrap_core::Error> {
    let samples = qcmap::seam_samples(t, SEAM_POINTS_PER_SEAM)?;
    let mut worst = 0.0f64;
    for s in &samples {
        let a = qcmap::forward_in_region(t, s.first, s.point);
        let b = qcmap::forward_in_region(t, s.second, s.point);
        worst = worst.max((a.x - b.x).abs().max((a.y - b.y).abs()));
    }
    Ok(CheckResult {
        name: "seam_continuity",
        pass: worst <= tol,
        observed: worst,
        tolerance: tol,
        samples: samples.len(),
        detail: "worst per-coordinate gap between the two branches meeting at each seam"
            .to_string(),
    })
}

/// Worst per-coordinate disagreement between the real branch on the
/// trapezoid piece and its rational complex form, on an interior grid of the
/// right half.
fn g1_complex_equivalence(t: &Trapezoid, tol: f64) -> CheckResult {
    let n = COMPLEX_GRID;
    let mut worst = 0.0f64;
    for j in 0..n {
        let y = (j as f64 + 0.5) / n as f64;
        let x_max = t.d() * (1.0 - t.ell() * y);
        for i in 0..n {
            let x = x_max * ((i as f64 + 0.5) / n as f64);
            let p = PlanePoint::new(x, y);
            let real = qcmap::forward(t, p).output;
            let complex = qcmap::forward_g1_complex(t, p);
            worst = worst.max((real.x - complex.x).abs().max((real.y - complex.y).abs()));
        }
    }
    CheckResult {
        name: "g1_complex_equivalence",
        pass: worst <= tol,
        observed: worst,
        tolerance: tol,
        samples: n * n,
        detail: "real branch vs rational complex form on an interior grid of the trapezoid piece"
            .to_string(),
    }
}

/// Draws a point uniformly from a box around region `tag`, rejecting until
/// it classifies as `tag`/`half` and clears every seam by `FD_MARGIN`.
fn sample_region_point(
    t: &Trapezoid,
    tag: RegionTag,
    half: HalfPlane,
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
        if classify_region(t, p) == Region::new(tag, half) && seam_distance(t, p) >= FD_MARGIN {
            return p;
        }
    }
    unreachable!("every region covers a positive fraction of its sampling box")
}

/// Worst relative disagreement (absolute near zero) between closed-form and
/// finite-difference derivatives on random interior points of every region
/// and both half-planes.
fn wirtinger_fd_vs_analytic(t: &Trapezoid) -> CheckResult {
    let mut rng = StdRng::seed_from_u64(0x7e5f_0001);
    let mut worst = 0.0f64;
    for tag in RegionTag::ALL {
        for i in 0..FD_POINTS_PER_REGION {
            let half = if i % 2 == 0 {
                HalfPlane::Right
            } else {
                HalfPlane::Left
            };
            let p = sample_region_point(t, tag, half, &mut rng);
            let exact = dilatation::wirtinger(t, p).expect("sampled points are finite");
            let fd = dilatation::wirtinger_fd(t, p, FD_STEP)
                .expect("sampled points clear the seams by more than the stencil reach");
            let err_fz = (fd.fz - exact.fz).norm() / exact.fz.norm().max(1.0);
            let err_fzbar = (fd.fzbar - exact.fzbar).norm() / exact.fzbar.norm().max(1.0);
            worst = worst.max(err_fz).max(err_fzbar);
        }
    }
    CheckResult {
        name: "wirtinger_fd_vs_analytic",
        pass: worst <= FD_TOL,
        observed: worst,
        tolerance: FD_TOL,
        samples: 5 * FD_POINTS_PER_REGION,
        detail: format!(
            "closed-form vs central-difference derivatives at h = {FD_STEP:e}, \
             all regions, both half-planes"
        ),
    }
}

/// Grid scan of the dilatation over a window that concentrates resolution on
/// the trapezoid and a thin band around it — where the dilatation actually
/// peaks — while still sampling every region tag.
fn concentrated_grid(
    t: &Trapezoid,
    resolution: usize,
) -> Result<dilatation::DilatationField, qctrap_core::Error> {
    let window = Window::new(0.0, 1.05 * t.d(), -0.25, 1.25)?;
    dilatation::grid_max(t, resolution, window)
}

/// Largest signed excess of a sampled dilatation over its region's
/// closed-form bound; negative means every sample stayed below.
fn region_bounds_hold(t: &Trapezoid, field: &dilatation::DilatationField) -> CheckResult {
    let mut worst = f64::NEG_INFINITY;
    let mut parts = Vec::new();
    for tag in RegionTag::ALL {
        if let Some(observed) = field.tag_max(tag) {
            let bound = dilatation::region_bound(t, tag);
            worst = worst.max(observed - bound);
            parts.push(format!("{tag} {observed:.6}/{bound:.6}"));
        }
    }
    CheckResult {
        name: "region_bounds_hold",
        pass: worst <= BOUND_SLACK,
        observed: worst,
        tolerance: BOUND_SLACK,
        samples: field.samples.len(),
        detail: format!("largest signed max-minus-bound; per region: {}", parts.join(", ")),
    }
}

/// Relative shortfall of the sampled maximum on the trapezoid piece from its
/// closed-form supremum (attained at the top corner).
fn g1_max_approaches_bound(t: &Trapezoid, field: &dilatation::DilatationField) -> CheckResult {
    let bound = dilatation::global_bound(t);
    let observed = field
        .tag_max(RegionTag::G1)
        .expect("the scan window always covers the trapezoid piece");
    let deficit = 1.0 - observed / bound;
    CheckResult {
        name: "g1_max_approaches_bound",
        pass: deficit <= PROXIMITY_TOL,
        observed: deficit,
        tolerance: PROXIMITY_TOL,
        samples: field.samples.len(),
        detail: format!(
            "relative shortfall of the sampled G1 maximum {observed:.12} from its supremum \
             {bound:.12}"
        ),
    }
}

/// Worst scaled coordinate error of the forward/inverse round trip in both
/// orders, on random points of the default analysis window.
fn round_trip(t: &Trapezoid, tol: f64) -> CheckResult {
    let window = Window::default_for(t);
    let mut rng = StdRng::seed_from_u64(0x7e5f_0002);
    let mut worst = 0.0f64;
    for _ in 0..ROUND_TRIP_POINTS {
        let p = PlanePoint::new(
            rng.gen_range(window.x_min..window.x_max),
            rng.gen_range(window.y_min..window.y_max),
        );
        let scale = p.x.abs().max(p.y.abs()).max(1.0);
        let there = qcmap::forward(t, p).output;
        let back = qcmap::inverse(t, there).output;
        worst = worst.max((back.x - p.x).abs().max((back.y - p.y).abs()) / scale);
        let pre = qcmap::inverse(t, p).output;
        let again = qcmap::forward(t, pre).output;
        worst = worst.max((again.x - p.x).abs().max((again.y - p.y).abs()) / scale);
    }
    CheckResult {
        name: "round_trip",
        pass: worst <= tol,
        observed: worst,
        tolerance: tol,
        samples: ROUND_TRIP_POINTS,
        detail: "worst scaled coordinate error of inverse∘forward and forward∘inverse".to_string(),
    }
}
