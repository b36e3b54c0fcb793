//! Grid-distortion rendering: the image of a Cartesian grid under the
//! piecewise map, as a standalone SVG 1.1 document.
//!
//! Mathematical `(u, v)` coordinates map to pixels through
//! `X = (u - origin_u) * scale` and `Y = (origin_v - v) * scale` — the
//! vertical axis flips to screen orientation. The root element carries
//! `data-scale`, `data-origin-u`, and `data-origin-v` in full precision so
//! scripts (and the integration tests) can invert the transform exactly.
//!
//! Each `<polyline>` is the image of a run of samples along one grid line.
//! `data-axis` says which family the line belongs to (`"x"`: vertical line
//! at `x = data-value`; `"y"`: horizontal line at `y = data-value`), and the
//! `class` names the region whose branch produced the run. Runs split where
//! the samples cross a region seam, repeating the first sample after the
//! crossing so the strokes stay visually continuous.
//!
//! The drawing also contains the trapezoid outline (dashed; the domain
//! shape, for reference) and its image rectangle (solid) in the same
//! coordinate system.

use std::fmt::Write as _;

use qctrap_core::{qcmap, Error, PlanePoint, RegionTag, Trapezoid, Window};

/// Samples per grid-line image: double the 64-point floor that keeps the
/// curved images of the trapezoid piece smooth at typical sizes.
const SAMPLES_PER_LINE: usize = 128;
/// Pixel width allotted to the mathematical content, excluding margins.
const CONTENT_WIDTH: f64 = 960.0;
/// White space around the drawing, in pixels.
const MARGIN: f64 = 20.0;

/// Pixel transform; see the module docs for the inverse.
struct Transform {
    scale: f64,
    origin_u: f64,
    origin_v: f64,
}

impl Transform {
    fn x(&self, u: f64) -> f64 {
        (u - self.origin_u) * self.scale
    }

    fn y(&self, v: f64) -> f64 {
        (self.origin_v - v) * self.scale
    }
}

/// One run of samples along a grid line, inside a single region.
struct Run {
    axis: &'static str,
    value: f64,
    tag: RegionTag,
    points: Vec<PlanePoint>,
}

/// Splits the sampled image of one grid line into per-region runs.
fn push_runs(
    axis: &'static str,
    value: f64,
    samples: &[(PlanePoint, RegionTag)],
    out: &mut Vec<Run>,
) {
    let mut current = Run {
        axis,
        value,
        tag: samples[0].1,
        points: vec![samples[0].0],
    };
    for (k, &(p, tag)) in samples.iter().enumerate().skip(1) {
        current.points.push(p);
        if tag != current.tag && k < samples.len() - 1 {
            out.push(core::mem::replace(
                &mut current,
                Run {
                    axis,
                    value,
                    tag,
                    points: vec![p],
                },
            ));
        }
    }
    out.push(current);
}

/// Renders the grid image. `lines` is the number of grid lines per
/// direction (window edges included).
///
/// # Errors
///
/// [`Error::Domain`] when `lines < 2`.
pub fn render(t: &Trapezoid, lines: usize, window: Window) -> Result<String, Error> {
    if lines < 2 {
        return Err(Error::Domain(format!(
            "grid rendering needs at least 2 lines per direction (got {lines})"
        )));
    }

    let mut runs: Vec<Run> = Vec::new();
    let frac = |i: usize, n: usize| (i as f64) / ((n - 1) as f64);
    // Vertical grid lines: x fixed, y sweeps the window.
    for i in 0..lines {
        let x = window.x_min + (window.x_max - window.x_min) * frac(i, lines);
        let samples: Vec<(PlanePoint, RegionTag)> = (0..SAMPLES_PER_LINE)
            .map(|k| {
                let y = window.y_min + (window.y_max - window.y_min) * frac(k, SAMPLES_PER_LINE);
                let eval = qcmap::forward(t, PlanePoint::new(x, y));
                (eval.output, eval.region.tag)
            })
            .collect();
        push_runs("x", x, &samples, &mut runs);
    }
    // Horizontal grid lines: y fixed, x sweeps the window.
    for j in 0..lines {
        let y = window.y_min + (window.y_max - window.y_min) * frac(j, lines);
        let samples: Vec<(PlanePoint, RegionTag)> = (0..SAMPLES_PER_LINE)
            .map(|k| {
                let x = window.x_min + (window.x_max - window.x_min) * frac(k, SAMPLES_PER_LINE);
                let eval = qcmap::forward(t, PlanePoint::new(x, y));
                (eval.output, eval.region.tag)
            })
            .collect();
        push_runs("y", y, &samples, &mut runs);
    }

    let (d, c) = (t.d(), t.c());
    let trapezoid_outline = [
        PlanePoint::new(-d, 0.0),
        PlanePoint::new(d, 0.0),
        PlanePoint::new(c, 1.0),
        PlanePoint::new(-c, 1.0),
    ];
    let rectangle_outline = [
        PlanePoint::new(-d, 0.0),
        PlanePoint::new(d, 0.0),
        PlanePoint::new(d, 1.0),
        PlanePoint::new(-d, 1.0),
    ];

    // Bounding box of everything drawn, in mathematical coordinates.
    let mut u_min = f64::INFINITY;
    let mut u_max = f64::NEG_INFINITY;
    let mut v_min = f64::INFINITY;
    let mut v_max = f64::NEG_INFINITY;
    let all_points = runs
        .iter()
        .flat_map(|r| r.points.iter())
        .chain(trapezoid_outline.iter())
        .chain(rectangle_outline.iter());
    for p in all_points {
        u_min = u_min.min(p.x);
        u_max = u_max.max(p.x);
        v_min = v_min.min(p.y);
        v_max = v_max.max(p.y);
    }

    let scale = CONTENT_WIDTH / (u_max - u_min);
    let transform = Transform {
        scale,
        origin_u: u_min - MARGIN / scale,
        origin_v: v_max + MARGIN / scale,
    };
    let width = transform.x(u_max) + MARGIN;
    let height = transform.y(v_min) + MARGIN;

    let mut out = String::new();
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" \
         viewBox=\"0 0 {width:.4} {height:.4}\" data-scale=\"{}\" data-origin-u=\"{}\" \
         data-origin-v=\"{}\">",
        transform.scale, transform.origin_u, transform.origin_v
    );
    out.push_str(
        "<style>\n\
         polyline, polygon { fill: none; stroke-width: 1.2; stroke-linejoin: round; \
         stroke-linecap: round; }\n\
         .G1 { stroke: #d62728; }\n\
         .G2 { stroke: #1f77b4; }\n\
         .G3 { stroke: #2ca02c; }\n\
         .G4 { stroke: #9467bd; }\n\
         .G5 { stroke: #7f7f7f; }\n\
         .domain-outline { stroke: #555555; stroke-width: 1; stroke-dasharray: 6 4; }\n\
         .image-outline { stroke: #000000; stroke-width: 1.8; }\n\
         </style>\n",
    );
    for run in &runs {
        let _ = write!(
            out,
            "<polyline class=\"{}\" data-axis=\"{}\" data-value=\"{}\" points=\"",
            run.tag.name(),
            run.axis,
            run.value
        );
        for (k, p) in run.points.iter().enumerate() {
            if k > 0 {
                out.push(' ');
            }
            let _ = write!(out, "{:.4},{:.4}", transform.x(p.x), transform.y(p.y));
        }
        out.push_str("\"/>\n");
    }
    for (class, polygon) in [
        ("domain-outline", &trapezoid_outline),
        ("image-outline", &rectangle_outline),
    ] {
        let _ = write!(out, "<polygon class=\"{class}\" points=\"");
        for (k, p) in polygon.iter().enumerate() {
            if k > 0 {
                out.push(' ');
            }
            let _ = write!(out, "{:.4},{:.4}", transform.x(p.x), transform.y(p.y));
        }
        out.push_str("\"/>\n");
    }
    out.push_str("</svg>\n");
    Ok(out)
}
