//! Vertex-local structure of a multiple tiling.
//!
//! At a vertex `v` of `P + X`, the translates with `v` on their boundary each
//! contribute an inner angle at `v` (a polygon angle, or a straight angle when
//! `v` is inside one of their edges). Chaining angles whose bounding rays
//! coincide partitions them into adjacent wheels; each wheel turns a whole
//! number of times around `v`. Writing `phi` for the total winding and
//! `varphi` for the number of translates containing `v` in their interior,
//! a `k`-fold tiling satisfies `k = phi + varphi` at every vertex, and
//! `phi = kappa·(m-1)/2 + ell/2` with `kappa ≥ 1` and `ell` the number of
//! translated edges passing through `v`.
//!
//! Windings are counted by how often a fixed reference ray is swept, using
//! exact sign tests only.

use std::cmp::Ordering;

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::arrangement::overlapping_translates;
use crate::error::LocalError;
use crate::geom::{cross, in_ccw_sector, same_direction, Point, Rect, Vector};
use crate::lattice::TranslateSet;
use crate::polygon::{CSPolygon, Location, Orientation};

/// A translate with `v` on its boundary.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Incidence {
    pub translate: Vector,
    pub location: Location,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexStar {
    pub vertex: Point,
    /// `X^v`, with multiplicity.
    pub on_boundary: Vec<Incidence>,
    /// `varphi(v)`: translates containing `v` in their interior.
    pub in_interior_count: u64,
    /// `ell`: translated edges containing `v` in their relative interior.
    pub edge_through_count: u64,
}

/// True when `v` is a vertex of some translate in `P + X`.
pub fn is_tiling_vertex(polygon: &CSPolygon, x: &TranslateSet, v: &Point) -> bool {
    polygon.vertices().iter().any(|pv| {
        x.offsets()
            .iter()
            .any(|o| x.base().member(&(&(v - pv) - o)))
    })
}

pub fn vertex_star(
    polygon: &CSPolygon,
    x: &TranslateSet,
    v: &Point,
) -> Result<VertexStar, LocalError> {
    if !is_tiling_vertex(polygon, x, v) {
        return Err(LocalError::NotAVertexOfTiling);
    }
    let mut star = VertexStar {
        vertex: v.clone(),
        on_boundary: Vec::new(),
        in_interior_count: 0,
        edge_through_count: 0,
    };
    for t in overlapping_translates(polygon, x, &Rect::point(v)) {
        match polygon.locate(&t, v) {
            Location::Interior => star.in_interior_count += 1,
            Location::Exterior => {}
            location => {
                if matches!(location, Location::Edge(_)) {
                    star.edge_through_count += 1;
                }
                star.on_boundary.push(Incidence {
                    translate: t,
                    location,
                });
            }
        }
    }
    Ok(star)
}

/// Inner angle of a translate at `v`, swept counterclockwise from `start`
/// to `end`.
#[derive(Clone, Debug)]
struct Angle {
    start: Vector,
    end: Vector,
}

fn inner_angle(polygon: &CSPolygon, location: Location) -> Angle {
    let (first, second) = match location {
        Location::Vertex(i) => {
            let here = polygon.vertex(i);
            let next = polygon.vertex(i + 1) - here;
            let prev = polygon.vertex(i + polygon.len() - 1) - here;
            (next, prev)
        }
        Location::Edge(i) => {
            let e = polygon.edge_vector(i);
            let back = -&e;
            (e, back)
        }
        _ => unreachable!("inner angles exist only at boundary points"),
    };
    match polygon.orientation() {
        Orientation::Counterclockwise => Angle {
            start: first,
            end: second,
        },
        Orientation::Clockwise => Angle {
            start: second,
            end: first,
        },
    }
}

/// Total order on directions by counterclockwise angle from the positive x-axis.
fn direction_cmp(a: &Vector, b: &Vector) -> Ordering {
    let upper = |v: &Vector| v.y.is_positive() || (v.y.is_zero() && v.x.is_positive());
    match (upper(a), upper(b)) {
        (true, false) => Ordering::Less,
        (false, true) => Ordering::Greater,
        _ => {
            let c = cross(a, b);
            if c.is_positive() {
                Ordering::Less
            } else if c.is_negative() {
                Ordering::Greater
            } else {
                Ordering::Equal
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Wheel {
    /// Translates in the order their inner angles are chained.
    pub translates: Vec<Vector>,
    pub winding: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WheelReport {
    pub vertex: Point,
    pub wheels: Vec<Wheel>,
    /// Total winding of all wheels.
    pub phi: u64,
    /// Translates containing the vertex in their interior.
    pub varphi: u64,
    pub ell: u64,
    pub kappa: u64,
}

/// Partitions `X^v` into adjacent wheels and computes the local invariants.
pub fn wheels_at(
    polygon: &CSPolygon,
    x: &TranslateSet,
    v: &Point,
) -> Result<WheelReport, LocalError> {
    let star = vertex_star(polygon, x, v)?;
    let mut angles: Vec<(Angle, &Vector)> = star
        .on_boundary
        .iter()
        .map(|inc| (inner_angle(polygon, inc.location), &inc.translate))
        .collect();
    angles.sort_by(|(a, ta), (b, tb)| direction_cmp(&a.start, &b.start).then_with(|| ta.cmp(tb)));

    let reference = Point::from_ints(1, 0);
    let mut used = vec![false; angles.len()];
    let mut wheels = Vec::new();
    while let Some(first) = used.iter().position(|u| !u) {
        used[first] = true;
        let mut members = vec![first];
        let mut end = angles[first].0.end.clone();
        while !same_direction(&end, &angles[first].0.start) {
            let next = (0..angles.len())
                .find(|&j| !used[j] && same_direction(&angles[j].0.start, &end))
                .ok_or(LocalError::WheelMatchingFailed)?;
            used[next] = true;
            members.push(next);
            end = angles[next].0.end.clone();
        }
        let winding = members
            .iter()
            .filter(|&&j| in_ccw_sector(&angles[j].0.start, &angles[j].0.end, &reference))
            .count() as u64;
        if winding == 0 {
            return Err(LocalError::WheelMatchingFailed);
        }
        wheels.push(Wheel {
            translates: members.iter().map(|&j| angles[j].1.clone()).collect(),
            winding,
        });
    }

    let phi: u64 = wheels.iter().map(|w| w.winding).sum();
    let ell = star.edge_through_count;
    let m = polygon.m();
    let violation = LocalError::KappaNotPositiveInteger { phi, ell, m };
    // phi = kappa·(m-1)/2 + ell/2
    let twice = (2 * phi).checked_sub(ell).ok_or(violation.clone())?;
    let denom = (m - 1) as u64;
    if twice == 0 || twice % denom != 0 {
        return Err(violation);
    }
    Ok(WheelReport {
        vertex: v.clone(),
        wheels,
        phi,
        varphi: star.in_interior_count,
        ell,
        kappa: twice / denom,
    })
}

/// Representatives, one per lattice class, of the vertices of `P + X`,
/// sorted by coordinates.
pub fn vertex_classes(polygon: &CSPolygon, x: &TranslateSet) -> Vec<Point> {
    let lattice = x.base();
    let mut reps: Vec<Point> = polygon
        .vertices()
        .iter()
        .flat_map(|v| {
            x.offsets()
                .iter()
                .map(move |o| lattice.reduce_mod(&(v + o)))
        })
        .collect();
    reps.sort();
    reps.dedup();
    reps
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexSumRow {
    pub vertex: Point,
    pub phi: u64,
    pub varphi: u64,
    pub ell: u64,
    pub kappa: u64,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexSumTable {
    pub k: u64,
    pub rows: Vec<VertexSumRow>,
    pub all_hold: bool,
}

/// Checks `phi(v) + varphi(v) = k` at every vertex of one period, one row per
/// vertex class modulo the lattice.
pub fn check_vertex_sums(
    polygon: &CSPolygon,
    x: &TranslateSet,
    k: u64,
) -> Result<VertexSumTable, LocalError> {
    let rows = vertex_classes(polygon, x)
        .iter()
        .map(|v| {
            let w = wheels_at(polygon, x, v)?;
            Ok(VertexSumRow {
                vertex: v.clone(),
                phi: w.phi,
                varphi: w.varphi,
                ell: w.ell,
                kappa: w.kappa,
                holds: w.phi + w.varphi == k,
            })
        })
        .collect::<Result<Vec<_>, LocalError>>()?;
    let all_hold = rows.iter().all(|r| r.holds);
    Ok(VertexSumTable { k, rows, all_hold })
}

/// For an edge of the tiling ending at `v`, how many translates have `v` on
/// their boundary and the rest of the edge inside their interior.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeCover {
    pub other_end: Point,
    pub covering_translates: u64,
}

/// Evaluates the covering count for every tiling edge incident to `v`.
pub fn incident_edge_covers(
    polygon: &CSPolygon,
    x: &TranslateSet,
    v: &Point,
) -> Result<Vec<EdgeCover>, LocalError> {
    let star = vertex_star(polygon, x, v)?;
    let mut ends: Vec<Point> = star
        .on_boundary
        .iter()
        .filter_map(|inc| match inc.location {
            Location::Vertex(i) => Some([
                polygon.vertex(i + 1) + &inc.translate,
                polygon.vertex(i + polygon.len() - 1) + &inc.translate,
            ]),
            _ => None,
        })
        .flatten()
        .collect();
    ends.sort();
    ends.dedup();
    // G \ {v} lies in int(P + t) exactly when the far end does, by convexity
    Ok(ends
        .into_iter()
        .map(|w| {
            let covering_translates = star
                .on_boundary
                .iter()
                .filter(|inc| polygon.locate(&inc.translate, &w) == Location::Interior)
                .count() as u64;
            EdgeCover {
                other_end: w,
                covering_translates,
            }
        })
        .collect())
}

/// `⌈(m - 3) / 2⌉`, the guaranteed number of covering translates per
/// incident edge when `m ≥ 4`.
pub fn edge_cover_lower_bound(m: usize) -> u64 {
    (m.saturating_sub(3) as u64).div_ceil(2)
}
