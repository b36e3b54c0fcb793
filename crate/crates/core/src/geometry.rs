//! Domain geometry: the trapezoid and parallelogram shapes, the five-region
//! decomposition of the plane that the piecewise map is built on, and region
//! classification.
//!
//! # Shape conventions
//!
//! The trapezoid `T` is isosceles with unit height, sitting on the real axis
//! symmetrically about the imaginary axis: vertices `(-d, 0)`, `(d, 0)`,
//! `(c, 1)`, `(-c, 1)` with `0 < c <= d`. Its acute base angle is `pi*alpha`
//! for `alpha` in `(0, 1/2]`, which ties the half-bases together through
//! `d = c + cot(pi*alpha)`; `alpha = 1/2` degenerates the trapezoid to the
//! rectangle `c = d`. The slant parameter `ell = (d - c) / d` in `[0, 1)`
//! measures how far the shape is from that rectangle.
//!
//! The parallelogram `P` also has unit height and acute angle `pi*alpha`
//! (here `alpha` strictly inside `(0, 1/2)`), base length `a > cot(pi*alpha)`,
//! and is placed centrally symmetric about `i/2`: with
//! `half_c = (a - cot)/2` and `half_d = (a + cot)/2`, its vertices are
//! `(-half_d, 0)`, `(half_c, 0)`, `(half_d, 1)`, `(-half_c, 1)`. Cutting `P`
//! along the imaginary axis produces two pieces which, after flipping one of
//! them upside down, are the two halves of the trapezoid with half-bases
//! `(half_c, half_d)` — which is how its map is assembled from the trapezoid
//! map.
//!
//! # Region decomposition
//!
//! The closed right half-plane splits into five pieces relative to `T`:
//!
//! * `G1` — the right half of the trapezoid: `0 <= y <= 1`,
//!   `0 <= x <= d * (1 - ell * y)`;
//! * `G2` — the rest of the horizontal strip `0 <= y <= 1`;
//! * `G3` — the quarter-plane part above the top edge: `y > 1`, `0 <= x <= c`;
//! * `G4` — the remainder of `y > 1`;
//! * `G5` — the lower half-plane `y < 0`.
//!
//! Points with `x < 0` are classified by mirror symmetry and tagged with
//! [`HalfPlane::Left`]. Boundary ties go to the region listed first above,
//! so classification is total and unambiguous; the map itself is continuous
//! across every seam, making the tie-break harmless.

use core::fmt;

use alloc::format;

use crate::error::Error;
use crate::math;

/// A point of the plane, `(x, y)` standing for `x + i*y`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PlanePoint {
    /// Real part.
    pub x: f64,
    /// Imaginary part.
    pub y: f64,
}

impl PlanePoint {
    /// Creates a point; coordinates may be any `f64`, including non-finite
    /// ones (evaluators check finiteness where it matters).
    pub const fn new(x: f64, y: f64) -> Self {
        Self { x, y }
    }

    /// True when both coordinates are finite.
    pub fn is_finite(&self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }
}

impl fmt::Display for PlanePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// Axis-aligned sampling rectangle `[x_min, x_max] x [y_min, y_max]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Window {
    pub x_min: f64,
    pub x_max: f64,
    pub y_min: f64,
    pub y_max: f64,
}

impl Window {
    /// Creates a window after checking that both ranges are finite and
    /// non-degenerate.
    pub fn new(x_min: f64, x_max: f64, y_min: f64, y_max: f64) -> Result<Self, Error> {
        let all_finite =
            x_min.is_finite() && x_max.is_finite() && y_min.is_finite() && y_max.is_finite();
        if !all_finite || x_min >= x_max || y_min >= y_max {
            return Err(Error::Domain(format!(
                "window must satisfy x_min < x_max and y_min < y_max with finite bounds \
                 (got [{x_min}, {x_max}] x [{y_min}, {y_max}])"
            )));
        }
        Ok(Self {
            x_min,
            x_max,
            y_min,
            y_max,
        })
    }

    /// Default analysis window for a trapezoid with half-base `d`:
    /// `[-3d, 3d] x [-2, 3]`. Wide enough to show all five regions and a
    /// comfortable band of the reflected exterior.
    pub fn default_for(trapezoid: &Trapezoid) -> Self {
        let d = trapezoid.d();
        Self {
            x_min: -3.0 * d,
            x_max: 3.0 * d,
            y_min: -2.0,
            y_max: 3.0,
        }
    }

    /// True when the point lies inside the closed window.
    pub fn contains(&self, p: PlanePoint) -> bool {
        self.x_min <= p.x && p.x <= self.x_max && self.y_min <= p.y && p.y <= self.y_max
    }
}

/// Which of the five pieces of the decomposition a point falls in.
/// See the module docs for the geometry of each piece.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum RegionTag {
    /// Right half of the trapezoid interior (and its closure).
    G1,
    /// Rest of the unit strip `0 <= y <= 1`.
    G2,
    /// Above the top edge, `x <= c`.
    G3,
    /// Above the top edge, `x > c`.
    G4,
    /// Lower half-plane `y < 0`.
    G5,
}

impl RegionTag {
    /// All tags, in order. Handy for iterating per-region reports.
    pub const ALL: [RegionTag; 5] = [
        RegionTag::G1,
        RegionTag::G2,
        RegionTag::G3,
        RegionTag::G4,
        RegionTag::G5,
    ];

    /// Short name, `"G1"` through `"G5"`.
    pub fn name(&self) -> &'static str {
        match self {
            RegionTag::G1 => "G1",
            RegionTag::G2 => "G2",
            RegionTag::G3 => "G3",
            RegionTag::G4 => "G4",
            RegionTag::G5 => "G5",
        }
    }
}

impl fmt::Display for RegionTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Which half-plane a point was classified in. The map on the left half is
/// the mirror conjugate of the map on the right half.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum HalfPlane {
    /// `x >= 0`, where the defining formulas apply directly.
    Right,
    /// `x < 0`, handled through `f(z) = -conj(f(-conj(z)))`.
    Left,
}

impl HalfPlane {
    /// Short name, `"right"` or `"left"`.
    pub fn name(&self) -> &'static str {
        match self {
            HalfPlane::Right => "right",
            HalfPlane::Left => "left",
        }
    }
}

/// A region tag together with the half-plane it was found in, e.g.
/// "G2 on the left". This is the full classification of a point.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Region {
    pub tag: RegionTag,
    pub half: HalfPlane,
}

impl Region {
    pub const fn new(tag: RegionTag, half: HalfPlane) -> Self {
        Self { tag, half }
    }
}

impl fmt::Display for Region {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.tag.name(), self.half.name())
    }
}

/// Cotangent of `pi * alpha`, with the rectangle case pinned exactly:
/// `alpha = 1/2` returns `0.0` rather than the rounding noise of
/// `1/tan(pi/2)`. Callers must have validated `alpha` already.
pub(crate) fn cot_pi_alpha(alpha: f64) -> f64 {
    if alpha == 0.5 {
        0.0
    } else {
        1.0 / math::tan(core::f64::consts::PI * alpha)
    }
}

fn check_alpha(alpha: f64, max_inclusive: bool) -> Result<(), Error> {
    let ok = alpha.is_finite()
        && alpha > 0.0
        && if max_inclusive {
            alpha <= 0.5
        } else {
            alpha < 0.5
        };
    if ok {
        Ok(())
    } else {
        let range = if max_inclusive { "(0, 0.5]" } else { "(0, 0.5)" };
        Err(Error::Domain(format!(
            "alpha must lie in {range} (got {alpha})"
        )))
    }
}

/// Isosceles trapezoid with unit height, acute angle `pi*alpha`, and
/// half-bases `c <= d`. See the module docs for the exact placement.
///
/// Constructed from the free parameters `(alpha, d)`; the derived values
/// `c = d - cot(pi*alpha)` and `ell = (d - c)/d` are computed once and
/// cached so that every consumer sees identical floating-point values.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Trapezoid {
    alpha: f64,
    d: f64,
    c: f64,
    ell: f64,
}

impl Trapezoid {
    /// Builds the trapezoid with angle parameter `alpha` in `(0, 1/2]` and
    /// bottom half-base `d > cot(pi*alpha)`.
    ///
    /// # Errors
    ///
    /// [`Error::Domain`] when `alpha` is out of range or `d` is too small
    /// for the top edge to have positive length.
    pub fn new(alpha: f64, d: f64) -> Result<Self, Error> {
        check_alpha(alpha, true)?;
        let cot = cot_pi_alpha(alpha);
        if !(d.is_finite() && d > cot) {
            return Err(Error::Domain(format!(
                "d must exceed cot(pi*alpha) = {cot} (got d = {d})"
            )));
        }
        let c = d - cot;
        let ell = (d - c) / d;
        Ok(Self { alpha, d, c, ell })
    }

    /// Angle parameter: the acute base angle is `pi * alpha`.
    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    /// Bottom half-base.
    pub fn d(&self) -> f64 {
        self.d
    }

    /// Top half-base, `d - cot(pi*alpha)`.
    pub fn c(&self) -> f64 {
        self.c
    }

    /// Slant parameter `ell = (d - c)/d` in `[0, 1)`; zero exactly for the
    /// rectangle case `alpha = 1/2`.
    pub fn ell(&self) -> f64 {
        self.ell
    }

    /// Aspect ratio `c/d` of the two half-bases, in `(0, 1]`.
    pub fn base_ratio(&self) -> f64 {
        self.c / self.d
    }
}

impl fmt::Display for Trapezoid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "trapezoid(alpha = {}, d = {}, c = {}, ell = {})",
            self.alpha, self.d, self.c, self.ell
        )
    }
}

/// Unit-height parallelogram with acute angle `pi*alpha` and base length
/// `a`, placed centrally symmetric about `i/2`: vertices `(-half_d, 0)`,
/// `(half_c, 0)`, `(half_d, 1)`, `(-half_c, 1)` with `half_c = (a - cot)/2`
/// and `half_d = (a + cot)/2`.
///
/// Splitting it along the imaginary axis yields two halves of the trapezoid
/// with half-bases `(half_c, half_d)` (one of them flipped upside down),
/// which is exactly how [`crate::qcmap::forward_parallelogram`] reuses the
/// trapezoid map.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Parallelogram {
    alpha: f64,
    a: f64,
    half_c: f64,
    half_d: f64,
    companion: Trapezoid,
}

impl Parallelogram {
    /// Builds the parallelogram with `alpha` strictly inside `(0, 1/2)` and
    /// base `a > cot(pi*alpha)` (so that it is genuinely slanted and its
    /// trapezoid halves are non-degenerate).
    ///
    /// # Errors
    ///
    /// [`Error::Domain`] when `alpha` or `a` is out of range.
    pub fn new(alpha: f64, a: f64) -> Result<Self, Error> {
        check_alpha(alpha, false)?;
        let cot = cot_pi_alpha(alpha);
        if !(a.is_finite() && a > cot) {
            return Err(Error::Domain(format!(
                "a must exceed cot(pi*alpha) = {cot} (got a = {a})"
            )));
        }
        let half_c = 0.5 * (a - cot);
        let half_d = 0.5 * (a + cot);
        let companion = Trapezoid::new(alpha, half_d)?;
        Ok(Self {
            alpha,
            a,
            half_c,
            half_d,
            companion,
        })
    }

    /// Angle parameter: the acute angle is `pi * alpha`.
    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    /// Base length.
    pub fn a(&self) -> f64 {
        self.a
    }

    /// Half-length of the shorter horizontal cut, `(a - cot)/2`.
    pub fn half_c(&self) -> f64 {
        self.half_c
    }

    /// Half-length of the longer horizontal cut, `(a + cot)/2`.
    pub fn half_d(&self) -> f64 {
        self.half_d
    }

    /// The trapezoid whose right half, after a vertical flip, tiles the right
    /// half of this parallelogram. Its half-bases are
    /// (`half_c`, `half_d`).
    pub fn companion_trapezoid(&self) -> &Trapezoid {
        &self.companion
    }
}

/// Classifies a point of the plane into its region relative to `trapezoid`.
///
/// Total on finite points; ties on seams go to the region listed first in
/// the module-level ordering (`G5`, then `G1`/`G2` within the strip, then
/// `G3`/`G4`), and `x = 0` counts as the right half-plane.
///
/// # Panics
///
/// Panics when either coordinate of `p` is non-finite; classification of an
/// infinite point is meaningless.
pub fn classify_region(trapezoid: &Trapezoid, p: PlanePoint) -> Region {
    assert!(
        p.is_finite(),
        "cannot classify non-finite point ({}, {})",
        p.x,
        p.y
    );
    let half = if p.x >= 0.0 {
        HalfPlane::Right
    } else {
        HalfPlane::Left
    };
    let x = p.x.abs();
    let y = p.y;
    let tag = if y < 0.0 {
        RegionTag::G5
    } else if y <= 1.0 {
        if x <= trapezoid.d() * (1.0 - trapezoid.ell() * y) {
            RegionTag::G1
        } else {
            RegionTag::G2
        }
    } else if x <= trapezoid.c() {
        RegionTag::G3
    } else {
        RegionTag::G4
    };
    Region::new(tag, half)
}

/// Classifies a point of the *image* plane: the same five-way split after
/// the trapezoid has been straightened to the rectangle `[-d, d] x [0, 1]`.
/// This is the region an image point must be in for the matching inverse
/// branch to apply.
///
/// # Panics
///
/// Panics when either coordinate of `w` is non-finite.
pub fn classify_image_region(trapezoid: &Trapezoid, w: PlanePoint) -> Region {
    assert!(
        w.is_finite(),
        "cannot classify non-finite point ({}, {})",
        w.x,
        w.y
    );
    let half = if w.x >= 0.0 {
        HalfPlane::Right
    } else {
        HalfPlane::Left
    };
    let u = w.x.abs();
    let v = w.y;
    let tag = if v < 0.0 {
        RegionTag::G5
    } else if v <= 1.0 {
        if u <= trapezoid.d() {
            RegionTag::G1
        } else {
            RegionTag::G2
        }
    } else if u <= trapezoid.d() {
        RegionTag::G3
    } else {
        RegionTag::G4
    };
    Region::new(tag, half)
}

fn dist_point_segment(p: (f64, f64), a: (f64, f64), b: (f64, f64)) -> f64 {
    let (px, py) = p;
    let (ax, ay) = a;
    let (bx, by) = b;
    let (ux, uy) = (bx - ax, by - ay);
    let len2 = ux * ux + uy * uy;
    // Degenerate segments collapse to point distance.
    let t = if len2 > 0.0 {
        (((px - ax) * ux + (py - ay) * uy) / len2).clamp(0.0, 1.0)
    } else {
        0.0
    };
    math::hypot(px - (ax + t * ux), py - (ay + t * uy))
}

/// Distance from `p` to the nearest seam of the piecewise map: the lines
/// `y = 0` and `y = 1`, the symmetry axis `x = 0`, the slanted sides of the
/// trapezoid, and the vertical rays `x = +-c`, `y >= 1`.
///
/// Used to keep finite-difference stencils and sample grids clear of the
/// places where the map switches analytic branch.
pub fn seam_distance(trapezoid: &Trapezoid, p: PlanePoint) -> f64 {
    let x = p.x.abs();
    let y = p.y;
    let c = trapezoid.c();
    let d = trapezoid.d();
    let mut dist = p.y.abs().min((y - 1.0).abs()).min(x);
    // Vertical ray x = c, y >= 1 (mirrored to x = -c by |x|).
    let ray = if y >= 1.0 {
        (x - c).abs()
    } else {
        math::hypot(x - c, 1.0 - y)
    };
    dist = dist.min(ray);
    // Slanted trapezoid side from (d, 0) to (c, 1), again via |x|.
    dist.min(dist_point_segment((x, y), (d, 0.0), (c, 1.0)))
}
