//! Recognizes whether a polygon is a linear image of one of the generated
//! families and recovers the family parameter.
//!
//! Octagons are normalized so that edges 0 and 2 become horizontal and
//! vertical, then tested against the linear relations satisfied by each
//! family. Decagons are matched through their edge midpoints. A candidate is
//! only accepted after the rebuilt canonical polygon matches the mapped input
//! vertex for vertex.

use num_traits::{Signed, Zero};
use serde::{Serialize, Serializer};

use crate::affine::{AffineMap, LinearMap};
use crate::families::{
    decagon_midpoints, decagon_polygon, in_w_interior, octagon_type1_polygon,
    octagon_type2_polygon, Family,
};
use crate::geom::Point;
use crate::polygon::CSPolygon;
use crate::rational::{frac, int, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RejectReason {
    /// Twelve or more vertices: such polygons tile at least six-fold.
    TooManyVertices,
    /// An octagon or decagon that is not a linear image of a family member.
    NoFamilyMatch,
}

impl RejectReason {
    pub fn message(self) -> &'static str {
        match self {
            RejectReason::TooManyVertices => {
                "a centrally symmetric polygon with 12 or more vertices cannot tile with multiplicity below 6"
            }
            RejectReason::NoFamilyMatch => {
                "no vertex relabeling maps the polygon onto a five-fold octagon or decagon family member"
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
#[allow(clippy::large_enum_variant)]
pub enum Classification {
    FiveFold {
        family: Family,
        /// `map(input relabeled) = canonical family polygon`.
        map: AffineMap,
        shift: usize,
        reflect: bool,
    },
    NotFiveFold(RejectReason),
}

impl Classification {
    pub fn family(&self) -> Option<&Family> {
        match self {
            Classification::FiveFold { family, .. } => Some(family),
            Classification::NotFiveFold(_) => None,
        }
    }
}

#[derive(Serialize)]
#[serde(tag = "result", rename_all = "snake_case")]
enum ClassificationRepr<'a> {
    FiveFold {
        family: &'static str,
        parameter: Option<String>,
        map: &'a AffineMap,
        shift: usize,
        reflect: bool,
    },
    NotFiveFold {
        reason: RejectReason,
        message: &'static str,
    },
}

impl Serialize for Classification {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Classification::FiveFold {
                family,
                map,
                shift,
                reflect,
            } => ClassificationRepr::FiveFold {
                family: family.name(),
                parameter: family.parameter(),
                map,
                shift: *shift,
                reflect: *reflect,
            },
            Classification::NotFiveFold(reason) => ClassificationRepr::NotFiveFold {
                reason: *reason,
                message: reason.message(),
            },
        }
        .serialize(s)
    }
}

fn maps_onto(map: &LinearMap, from: &CSPolygon, to: &CSPolygon) -> bool {
    from.len() == to.len()
        && from
            .vertices()
            .iter()
            .zip(to.vertices())
            .all(|(a, b)| map.apply(a) == *b)
}

/// Linear map taking the first two vertices of `from` onto those of `to`,
/// kept only if it carries every vertex across.
fn vertex_map(from: &CSPolygon, to: &CSPolygon) -> Option<LinearMap> {
    let map = LinearMap::solve(from.vertex(0), from.vertex(1), to.vertex(0), to.vertex(1))?;
    maps_onto(&map, from, to).then_some(map)
}

fn relabelings(n: usize) -> impl Iterator<Item = (usize, bool)> {
    [false, true]
        .into_iter()
        .flat_map(move |reflect| (0..n).map(move |shift| (shift, reflect)))
}

fn octagon_candidate(q: &CSPolygon) -> Option<(Family, LinearMap)> {
    let g1 = q.edge_vector(0);
    let g3 = q.edge_vector(2);
    let norm = LinearMap::from_columns(&g1, &g3).inverse().ok()?;
    // 1-based labels to match the relations below
    let w: Vec<Point> = (0..8).map(|i| norm.apply(q.vertex(i))).collect();
    let x = |i: usize| &w[i - 1].x;
    let y = |i: usize| &w[i - 1].y;

    let first = y(5) - y(4) == y(4) - y(3)
        && y(3) - y(2) == (y(4) - y(3)) * int(2)
        && x(6) - x(5) == (x(7) - x(6)) * int(2) + (x(5) - x(4)) * int(3);
    if first && !(x(6) - x(5)).is_zero() {
        let alpha: Rational = (x(5) - x(4)) * int(2) / (x(6) - x(5));
        if alpha.is_positive() && alpha < frac(2, 3) {
            if let Ok(canonical) = octagon_type1_polygon(&alpha) {
                if let Some(map) = vertex_map(q, &canonical) {
                    return Some((Family::OctagonI { alpha }, map));
                }
            }
        }
    }

    let second =
        y(3) == y(8) && y(5) - y(4) == y(4) - y(3) && x(8) - x(3) == (x(1) - x(2)) * int(2);
    if second && !(x(1) - x(2)).is_zero() {
        let beta: Rational = x(6) * int(2) / (x(1) - x(2));
        if beta.is_positive() && beta <= int(1) {
            if let Ok(canonical) = octagon_type2_polygon(&beta) {
                if let Some(map) = vertex_map(q, &canonical) {
                    return Some((Family::OctagonII { beta }, map));
                }
            }
        }
    }
    None
}

fn decagon_candidate(q: &CSPolygon) -> Option<(Family, LinearMap)> {
    let target = decagon_midpoints();
    let u: Vec<Point> = (0..5).map(|i| q.midpoint(i)).collect();
    let map = LinearMap::solve(&u[0], &u[1], &target[0], &target[1])?;
    if !(2..5).all(|i| map.apply(&u[i]) == target[i]) {
        return None;
    }
    let v1 = map.apply(q.vertex(0));
    // with these midpoints a convex decagon forces v1 into W
    debug_assert!(in_w_interior(&v1));
    let canonical = decagon_polygon(&v1).ok()?;
    maps_onto(&map, q, &canonical).then_some((Family::Decagon { v1 }, map))
}

/// Identifies the family of `polygon`, if any. Relabelings are tried in the
/// order (shift 0..2m, unreflected first) and the first match wins.
pub fn classify(polygon: &CSPolygon) -> Classification {
    let found = |family, map, shift, reflect| Classification::FiveFold {
        family,
        map: AffineMap::linear(map),
        shift,
        reflect,
    };
    match polygon.m() {
        2 => {
            let target = [Point::from_ints(1, 1), Point::from_ints(-1, 1)];
            let map =
                LinearMap::solve(polygon.vertex(0), polygon.vertex(1), &target[0], &target[1])
                    .expect("adjacent vertices of a centered polygon are independent");
            found(Family::Parallelogram, map, 0, false)
        }
        3 => {
            let map = LinearMap::solve(
                polygon.vertex(0),
                polygon.vertex(1),
                &Point::from_ints(1, 0),
                &Point::from_ints(0, 1),
            )
            .expect("adjacent vertices of a centered polygon are independent");
            found(Family::Hexagon, map, 0, false)
        }
        m @ (4 | 5) => {
            for (shift, reflect) in relabelings(2 * m) {
                let q = polygon.relabel(shift, reflect);
                let hit = if m == 4 {
                    octagon_candidate(&q)
                } else {
                    decagon_candidate(&q)
                };
                if let Some((family, map)) = hit {
                    return found(family, map, shift, reflect);
                }
            }
            Classification::NotFiveFold(RejectReason::NoFamilyMatch)
        }
        _ => Classification::NotFiveFold(RejectReason::TooManyVertices),
    }
}
