//! SVG figures of a polygon arrangement.
//!
//! Coordinates are written as decimals for display; each polygon element is
//! preceded by a comment carrying its exact translation vector.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::arrangement::overlapping_translates;
use crate::error::RenderError;
use crate::geom::Rect;
use crate::lattice::TranslateSet;
use crate::polygon::CSPolygon;
use crate::rational::to_f64;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum RenderMode {
    Outline,
    /// Translucent fills; overlapping translates stack into darker regions.
    MultiplicityShade,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RenderSpec {
    pub window: Rect,
    pub mode: RenderMode,
    pub stroke_width: f64,
    pub fill_opacity: f64,
    /// Output width in pixels; the height follows the window's aspect ratio.
    pub pixel_width: f64,
}

impl RenderSpec {
    pub fn new(window: Rect, mode: RenderMode) -> Self {
        RenderSpec {
            window,
            mode,
            stroke_width: 0.02,
            fill_opacity: 0.15,
            pixel_width: 800.0,
        }
    }
}

/// One `<polygon>` per translate whose bounding box meets the window, in the
/// order of [`overlapping_translates`].
pub fn render_svg(
    polygon: &CSPolygon,
    x: &TranslateSet,
    spec: &RenderSpec,
) -> Result<String, RenderError> {
    let w = &spec.window;
    if !w.has_interior() {
        return Err(RenderError::EmptyWindow);
    }
    let (x0, y0, x1, y1) = (to_f64(&w.x0), to_f64(&w.y0), to_f64(&w.x1), to_f64(&w.y1));
    let (width, height) = (x1 - x0, y1 - y0);
    let px_h = spec.pixel_width * height / width;

    let mut out = String::new();
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{:.0}" height="{:.0}" viewBox="{x0} {} {width} {height}">"#,
        spec.pixel_width, px_h, -y1
    )
    .unwrap();
    // flip y so the picture uses mathematical orientation
    out.push_str("<g transform=\"scale(1,-1)\">\n");
    let (fill, opacity) = match spec.mode {
        RenderMode::Outline => ("none", 0.0),
        RenderMode::MultiplicityShade => ("black", spec.fill_opacity),
    };
    for t in overlapping_translates(polygon, x, w) {
        let pts: Vec<String> = polygon
            .vertices()
            .iter()
            .map(|v| {
                let p = v + &t;
                format!("{},{}", to_f64(&p.x), to_f64(&p.y))
            })
            .collect();
        writeln!(out, "<!-- translate {} -->", t.to_text()).unwrap();
        writeln!(
            out,
            r#"<polygon points="{}" fill="{fill}" fill-opacity="{opacity}" stroke="black" stroke-width="{}"/>"#,
            pts.join(" "),
            spec.stroke_width
        )
        .unwrap();
    }
    out.push_str("</g>\n</svg>\n");
    Ok(out)
}
