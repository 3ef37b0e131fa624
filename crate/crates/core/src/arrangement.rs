//! Exact covering multiplicity of `P + X` over a period.
//!
//! The edges of all translates meeting a region cut it into open faces. The
//! number of translates whose interior contains a point is constant on each
//! face and Λ-periodic, so `P + X` is a `k`-fold tiling exactly when every face
//! inside a region containing a fundamental domain has multiplicity `k`.
//!
//! Faces are reached by vertical slabs: every endpoint and every pairwise
//! crossing contributes an x-breakpoint, and inside an open slab the segments
//! are totally ordered by height. One sample per gap between consecutive
//! segments at the slab's mid-abscissa hits every face. Counts inside a slab
//! are accumulated bottom-up from the crossing directions, so they are exact
//! and every sample is off every edge by construction.

use num_traits::{Signed, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::ArrangementError;
use crate::geom::{intersect_segments, Intersection, Point, Rect, Segment, Vector};
use crate::lattice::TranslateSet;
use crate::polygon::{CSPolygon, Location};
use crate::rational::{int, mid, Rational};

/// Every translation vector `t ∈ X` (with multiplicity) whose translate's
/// bounding box meets `region`. A superset of the translates meeting the
/// region; none are missed.
pub fn overlapping_translates(polygon: &CSPolygon, x: &TranslateSet, region: &Rect) -> Vec<Vector> {
    let bb = polygon.bbox();
    let window = Rect::new(
        &region.x0 - &bb.x1,
        &region.y0 - &bb.y1,
        &region.x1 - &bb.x0,
        &region.y1 - &bb.y0,
    );
    x.points_in_box(&window)
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Coverage {
    pub interior_count: u64,
    pub boundary_count: u64,
}

/// Counts translates containing `p` in their interior and on their boundary.
pub fn multiplicity_at(polygon: &CSPolygon, x: &TranslateSet, p: &Point) -> Coverage {
    let mut cov = Coverage::default();
    for t in overlapping_translates(polygon, x, &Rect::point(p)) {
        match polygon.locate(&t, p) {
            Location::Interior => cov.interior_count += 1,
            Location::Vertex(_) | Location::Edge(_) => cov.boundary_count += 1,
            Location::Exterior => {}
        }
    }
    cov
}

/// A segment together with the change in coverage when it is crossed upward.
struct Crossing<'a> {
    seg: &'a Segment,
    delta: i64,
}

fn x_range(seg: &Segment) -> (&Rational, &Rational) {
    if seg.a.x <= seg.b.x {
        (&seg.a.x, &seg.b.x)
    } else {
        (&seg.b.x, &seg.a.x)
    }
}

fn y_at(seg: &Segment, x: &Rational) -> Rational {
    let t = (x - &seg.a.x) / (&seg.b.x - &seg.a.x);
    &seg.a.y + (&seg.b.y - &seg.a.y) * t
}

/// Sorted, deduplicated slab boundaries inside `[x0, x1]`.
fn breakpoints(segments: &[&Segment], region: &Rect) -> Vec<Rational> {
    let inside = |x: &Rational| *x > region.x0 && *x < region.x1;
    let mut xs = vec![region.x0.clone(), region.x1.clone()];
    for s in segments {
        for p in [&s.a, &s.b] {
            if inside(&p.x) {
                xs.push(p.x.clone());
            }
        }
    }
    let boxes: Vec<Rect> = segments.iter().map(|s| s.bbox()).collect();
    for i in 0..segments.len() {
        for j in (i + 1)..segments.len() {
            if !boxes[i].intersects(&boxes[j]) {
                continue;
            }
            if let Ok(Intersection::Point(p)) = intersect_segments(segments[i], segments[j]) {
                if inside(&p.x) {
                    xs.push(p.x);
                }
            }
        }
    }
    xs.sort();
    xs.dedup();
    xs
}

/// One vertical slab: its mid-abscissa and the crossings there, sorted by
/// height, as `(y, summed delta)` with coincident segments merged.
fn slab_crossings(crossings: &[Crossing<'_>], x: &Rational) -> Vec<(Rational, i64)> {
    let mut ys: Vec<(Rational, i64)> = crossings
        .iter()
        .filter(|c| {
            let (lo, hi) = x_range(c.seg);
            lo < x && x < hi
        })
        .map(|c| (y_at(c.seg, x), c.delta))
        .collect();
    ys.sort_by(|a, b| a.0.cmp(&b.0));
    let mut merged: Vec<(Rational, i64)> = Vec::with_capacity(ys.len());
    for (y, d) in ys {
        match merged.last_mut() {
            Some((ly, ld)) if *ly == y => *ld += d,
            _ => merged.push((y, d)),
        }
    }
    merged
}

/// Face samples of the slab at `x` inside `[y0, y1]`, each with the running
/// coverage count (counted from below all segments).
fn slab_samples(merged: &[(Rational, i64)], x: &Rational, region: &Rect) -> Vec<(Point, i64)> {
    let mut out = Vec::new();
    let mut count = 0i64;
    let mut lower: Option<&Rational> = None;
    let mut emit = |lo: Option<&Rational>, hi: Option<&Rational>, count: i64| {
        let lo = match lo {
            Some(v) if *v > region.y0 => v,
            _ => &region.y0,
        };
        let hi = match hi {
            Some(v) if *v < region.y1 => v,
            _ => &region.y1,
        };
        if lo < hi {
            out.push((Point::new(x.clone(), mid(lo, hi)), count));
        }
    };
    for (y, d) in merged {
        emit(lower, Some(y), count);
        count += d;
        lower = Some(y);
    }
    emit(lower, None, count);
    out
}

fn slab_midpoints(xs: &[Rational]) -> Vec<Rational> {
    xs.windows(2).map(|w| mid(&w[0], &w[1])).collect()
}

/// One point in every face of the arrangement of `segments` restricted to
/// `region`; no returned point lies on any segment.
pub fn slab_sample_points(
    segments: &[Segment],
    region: &Rect,
) -> Result<Vec<Point>, ArrangementError> {
    if !region.has_interior() {
        return Err(ArrangementError::EmptyRegion);
    }
    let relevant: Vec<&Segment> = segments
        .iter()
        .filter(|s| {
            let (lo, hi) = x_range(s);
            *hi > region.x0 && *lo < region.x1
        })
        .collect();
    let xs = breakpoints(&relevant, region);
    let crossings: Vec<Crossing<'_>> = relevant
        .iter()
        .map(|s| Crossing { seg: s, delta: 0 })
        .collect();
    Ok(slab_midpoints(&xs)
        .par_iter()
        .flat_map_iter(|x| {
            let merged = slab_crossings(&crossings, x);
            slab_samples(&merged, x, region).into_iter().map(|(p, _)| p)
        })
        .collect())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Sample {
    pub point: Point,
    pub interior_count: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MultiplicityReport {
    pub k_expected: u64,
    /// `area(P) · |offsets| / det(Λ)`.
    #[serde(with = "crate::rational::serde_str")]
    pub area_ratio: Rational,
    pub region: Rect,
    pub translates_considered: usize,
    pub samples: Vec<Sample>,
    pub min_count: u64,
    pub max_count: u64,
    pub pass: bool,
}

/// Decides whether `P + X` is a `k`-fold tiling by computing the coverage on
/// every face of the edge arrangement over one fundamental domain of a
/// reduced basis.
pub fn verify_k_fold(polygon: &CSPolygon, x: &TranslateSet, k: u64) -> MultiplicityReport {
    let region = x.base().reduced().fundamental_bbox();
    let translates = overlapping_translates(polygon, x, &region);
    let sign = polygon.orientation().sign();

    let mut segments: Vec<(Segment, i64)> = Vec::new();
    for t in &translates {
        for i in 0..polygon.len() {
            let seg = Segment {
                a: polygon.vertex(i) + t,
                b: polygon.vertex(i + 1) + t,
            };
            // counts accumulate from below, so segments under the region matter
            let (lo, hi) = x_range(&seg);
            if *hi <= region.x0 || *lo >= region.x1 {
                continue;
            }
            let dx = &seg.b.x - &seg.a.x;
            // the interior lies to the left when walking a ccw boundary
            let delta = if dx.is_zero() {
                0
            } else if dx.is_positive() {
                sign
            } else {
                -sign
            };
            segments.push((seg, delta));
        }
    }

    let refs: Vec<&Segment> = segments.iter().map(|(s, _)| s).collect();
    let xs = breakpoints(&refs, &region);
    let crossings: Vec<Crossing<'_>> = segments
        .iter()
        .map(|(seg, delta)| Crossing { seg, delta: *delta })
        .collect();
    let samples: Vec<Sample> = slab_midpoints(&xs)
        .par_iter()
        .flat_map_iter(|x| {
            let merged = slab_crossings(&crossings, x);
            slab_samples(&merged, x, &region)
                .into_iter()
                .map(|(point, c)| Sample {
                    point,
                    interior_count: u64::try_from(c).expect("coverage counts are non-negative"),
                })
        })
        .collect();

    let min_count = samples.iter().map(|s| s.interior_count).min().unwrap_or(0);
    let max_count = samples.iter().map(|s| s.interior_count).max().unwrap_or(0);
    let area_ratio = polygon.area() * int(x.density() as i64) / x.base().det();
    let identity = area_ratio == int(k as i64);
    MultiplicityReport {
        k_expected: k,
        area_ratio,
        region,
        translates_considered: translates.len(),
        pass: !samples.is_empty() && min_count == k && max_count == k && identity,
        samples,
        min_count,
        max_count,
    }
}
