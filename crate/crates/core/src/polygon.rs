//! Centrally symmetric convex polygons centered at the origin.
//!
//! Vertices keep the order they were given in (clockwise or counterclockwise);
//! edge `i` runs from vertex `i` to vertex `i + 1`, indices modulo `2m`, all
//! 0-based. Predicates use the stored orientation sign, so no reordering is
//! ever needed.

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::affine::AffineMap;
use crate::error::GeomError;
use crate::geom::{cross, in_ccw_sector, orient, Point, Rect, Segment, Vector};
use crate::rational::{int, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Orientation {
    Counterclockwise,
    Clockwise,
}

impl Orientation {
    /// +1 for counterclockwise, -1 for clockwise.
    pub fn sign(self) -> i64 {
        match self {
            Orientation::Counterclockwise => 1,
            Orientation::Clockwise => -1,
        }
    }
}

/// Where a point sits relative to a (translated) polygon. Vertex and edge
/// indices refer to the polygon's own labeling; `Edge(i)` means the relative
/// interior of edge `i`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase", tag = "kind", content = "index")]
pub enum Location {
    Interior,
    Vertex(usize),
    Edge(usize),
    Exterior,
}

impl Location {
    pub fn is_boundary(&self) -> bool {
        matches!(self, Location::Vertex(_) | Location::Edge(_))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CSPolygon {
    vertices: Vec<Point>,
    orientation: Orientation,
}

impl CSPolygon {
    /// Checks central symmetry about the origin and strict convexity.
    pub fn new(vertices: Vec<Point>) -> Result<Self, GeomError> {
        let n = vertices.len();
        if n < 4 {
            return Err(GeomError::TooFewVertices(n));
        }
        if !n.is_multiple_of(2) {
            return Err(GeomError::OddVertexCount(n));
        }
        let m = n / 2;
        for i in 0..m {
            if vertices[i + m] != -&vertices[i] {
                return Err(GeomError::NotCentered {
                    index: i + m,
                    opposite: i,
                });
            }
        }

        let first = orient(&vertices[0], &vertices[1], &vertices[2]);
        if first.is_zero() {
            return Err(GeomError::NotStrictlyConvex { index: 1 });
        }
        let positive = first.is_positive();
        for i in 0..n {
            let (a, b, c) = (&vertices[i], &vertices[(i + 1) % n], &vertices[(i + 2) % n]);
            let turn = orient(a, b, c);
            if turn.is_zero() || turn.is_positive() != positive {
                return Err(GeomError::NotStrictlyConvex { index: (i + 1) % n });
            }
            // The origin must see every edge on the interior side, otherwise
            // the vertex sequence is not a simple convex loop around it.
            let around = cross(a, b);
            if around.is_zero() || around.is_positive() != positive {
                return Err(GeomError::NotStrictlyConvex { index: (i + 1) % n });
            }
        }
        // constant turning can still wind around the center more than once
        let reference = Point::from_ints(1, 0);
        let windings = (0..n)
            .filter(|&i| {
                let (a, b) = (&vertices[i], &vertices[(i + 1) % n]);
                if positive {
                    in_ccw_sector(a, b, &reference)
                } else {
                    in_ccw_sector(b, a, &reference)
                }
            })
            .count();
        if windings != 1 {
            return Err(GeomError::NotStrictlyConvex { index: 0 });
        }

        let orientation = if positive {
            Orientation::Counterclockwise
        } else {
            Orientation::Clockwise
        };
        Ok(CSPolygon {
            vertices,
            orientation,
        })
    }

    /// Builds the polygon from its first half `v_1, …, v_m`; the rest are
    /// the negations.
    pub fn from_half(half: &[Point]) -> Result<Self, GeomError> {
        let mut vertices = half.to_vec();
        vertices.extend(half.iter().map(|v| -v));
        CSPolygon::new(vertices)
    }

    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    pub fn orientation(&self) -> Orientation {
        self.orientation
    }

    /// Number of vertices, `2m`.
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Half the vertex count.
    pub fn m(&self) -> usize {
        self.vertices.len() / 2
    }

    /// Vertex `i` with wrap-around.
    pub fn vertex(&self, i: usize) -> &Point {
        &self.vertices[i % self.len()]
    }

    /// Vertices in counterclockwise order, starting from vertex 0.
    pub fn ccw_vertices(&self) -> Vec<Point> {
        match self.orientation {
            Orientation::Counterclockwise => self.vertices.clone(),
            Orientation::Clockwise => {
                let mut v = self.vertices.clone();
                v[1..].reverse();
                v
            }
        }
    }

    pub fn edge(&self, i: usize) -> Segment {
        Segment {
            a: self.vertex(i).clone(),
            b: self.vertex(i + 1).clone(),
        }
    }

    pub fn edges(&self) -> impl Iterator<Item = Segment> + '_ {
        (0..self.len()).map(move |i| self.edge(i))
    }

    pub fn edge_vector(&self, i: usize) -> Vector {
        self.vertex(i + 1) - self.vertex(i)
    }

    /// Midpoint `u_i` of edge `i`.
    pub fn midpoint(&self, i: usize) -> Point {
        self.vertex(i).midpoint(self.vertex(i + 1))
    }

    /// `a_i = u_i - u_{i+m} = 2 u_i`.
    pub fn a_vector(&self, i: usize) -> Vector {
        self.vertex(i) + self.vertex(i + 1)
    }

    /// Exact shoelace area, always positive.
    pub fn area(&self) -> Rational {
        let n = self.len();
        let twice: Rational = (0..n)
            .map(|i| cross(&self.vertices[i], &self.vertices[(i + 1) % n]))
            .sum();
        twice.abs() / int(2)
    }

    pub fn bbox(&self) -> Rect {
        Rect::bounding(&self.vertices).expect("polygon has vertices")
    }

    /// Classifies `p` against the translate `P + t`.
    pub fn locate(&self, t: &Vector, p: &Point) -> Location {
        let q = p - t;
        let n = self.len();
        let sign = self.orientation.sign();
        let mut on_line = None;
        let mut on_lines = 0;
        for i in 0..n {
            let mut s = orient(&self.vertices[i], &self.vertices[(i + 1) % n], &q);
            if sign < 0 {
                s = -s;
            }
            if s.is_negative() {
                return Location::Exterior;
            }
            if s.is_zero() {
                on_lines += 1;
                on_line.get_or_insert(i);
            }
        }
        match (on_lines, on_line) {
            (0, _) => Location::Interior,
            (1, Some(i)) => Location::Edge(i),
            (_, Some(i)) => {
                // on two supporting lines: a vertex, shared by edges i and its neighbour
                if q == self.vertices[i] {
                    Location::Vertex(i)
                } else {
                    Location::Vertex((i + 1) % n)
                }
            }
            _ => unreachable!(),
        }
    }

    /// Image under an invertible linear map. Vertex order is kept; the
    /// orientation flips with the sign of the determinant.
    pub fn apply_affine(&self, map: &AffineMap) -> Result<CSPolygon, GeomError> {
        if !map.linear.is_invertible() {
            return Err(GeomError::SingularMap);
        }
        if !map.translation.is_zero() {
            return Err(GeomError::NonCenteringTranslation);
        }
        let vertices = self.vertices.iter().map(|v| map.linear.apply(v)).collect();
        CSPolygon::new(vertices)
    }

    /// The same polygon with its labels shifted by `shift` and optionally
    /// reversed: new vertex `i` is old vertex `shift ± i`.
    pub fn relabel(&self, shift: usize, reflect: bool) -> CSPolygon {
        let n = self.len();
        let vertices = (0..n)
            .map(|i| {
                let j = if reflect {
                    (shift + n - i % n) % n
                } else {
                    (shift + i) % n
                };
                self.vertices[j].clone()
            })
            .collect();
        let orientation = match (self.orientation, reflect) {
            (o, false) => o,
            (Orientation::Clockwise, true) => Orientation::Counterclockwise,
            (Orientation::Counterclockwise, true) => Orientation::Clockwise,
        };
        CSPolygon {
            vertices,
            orientation,
        }
    }
}

#[derive(Serialize, Deserialize)]
struct PolygonRepr {
    vertices: Vec<Point>,
}

impl Serialize for CSPolygon {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        PolygonRepr {
            vertices: self.vertices.clone(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for CSPolygon {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        CSPolygon::new(PolygonRepr::deserialize(d)?.vertices).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::affine::LinearMap;
    use crate::rational::frac;

    fn p(x: Rational, y: Rational) -> Point {
        Point::new(x, y)
    }

    pub(crate) fn square() -> CSPolygon {
        CSPolygon::new(vec![
            Point::from_ints(1, 1),
            Point::from_ints(-1, 1),
            Point::from_ints(-1, -1),
            Point::from_ints(1, -1),
        ])
        .unwrap()
    }

    fn d8_half() -> CSPolygon {
        CSPolygon::from_half(&[
            p(frac(7, 8), int(-2)),
            p(frac(-9, 8), int(-2)),
            p(frac(-11, 8), int(0)),
            p(frac(-11, 8), int(1)),
        ])
        .unwrap()
    }

    #[test]
    fn square_is_valid() {
        let sq = square();
        assert_eq!(sq.m(), 2);
        assert_eq!(sq.orientation(), Orientation::Counterclockwise);
        assert_eq!(sq.area(), int(4));
    }

    #[test]
    fn d8_half_is_clockwise_with_area_ten() {
        let d8 = d8_half();
        assert_eq!(d8.m(), 4);
        assert_eq!(d8.orientation(), Orientation::Clockwise);
        assert_eq!(d8.area(), int(10));
    }

    #[test]
    fn lattice_octagon_has_area_seven() {
        let c = Point::new(frac(3, 2), frac(3, 2));
        let raw = [
            (1, 0),
            (2, 0),
            (3, 1),
            (3, 2),
            (2, 3),
            (1, 3),
            (0, 2),
            (0, 1),
        ];
        let vs = raw
            .iter()
            .map(|&(x, y)| &Point::from_ints(x, y) - &c)
            .collect();
        assert_eq!(CSPolygon::new(vs).unwrap().area(), int(7));
    }

    #[test]
    fn rejects_bad_inputs() {
        let pts = |raw: &[(i64, i64)]| {
            raw.iter()
                .map(|&(x, y)| Point::from_ints(x, y))
                .collect::<Vec<_>>()
        };
        assert_eq!(
            CSPolygon::new(pts(&[(1, 0), (0, 1), (-1, 0)])),
            Err(GeomError::TooFewVertices(3))
        );
        assert_eq!(
            CSPolygon::new(pts(&[(1, 0), (0, 1), (-1, 0), (0, -1), (1, -1)])),
            Err(GeomError::OddVertexCount(5))
        );
        assert!(matches!(
            CSPolygon::new(pts(&[(1, 1), (-1, 1), (-1, -1), (2, -1)])),
            Err(GeomError::NotCentered { .. })
        ));
        assert!(matches!(
            CSPolygon::new(pts(&[(1, 0), (2, 0), (0, 1), (-1, 0), (-2, 0), (0, -1)])),
            Err(GeomError::NotStrictlyConvex { .. })
        ));
        // collinear adjacent edges are rejected rather than merged
        assert!(matches!(
            CSPolygon::new(pts(&[(1, 1), (0, 1), (-1, 1), (-1, -1), (0, -1), (1, -1)])),
            Err(GeomError::NotStrictlyConvex { .. })
        ));
    }

    #[test]
    fn rejects_doubly_wound_star() {
        // vertices of a centrally symmetric decagon visited with step 3
        let ring = [
            (4, 0),
            (3, 2),
            (1, 3),
            (-1, 3),
            (-3, 2),
            (-4, 0),
            (-3, -2),
            (-1, -3),
            (1, -3),
            (3, -2),
        ];
        let star = (0..10).map(|i| {
            let (x, y) = ring[(3 * i) % 10];
            Point::from_ints(x, y)
        });
        assert!(CSPolygon::new(star.collect()).is_err());
    }

    #[test]
    fn locate_on_square() {
        let sq = square();
        let o = Point::origin();
        assert_eq!(sq.locate(&o, &Point::origin()), Location::Interior);
        assert_eq!(sq.locate(&o, &Point::from_ints(1, 0)), Location::Edge(3));
        assert_eq!(sq.locate(&o, &Point::from_ints(1, 1)), Location::Vertex(0));
        assert_eq!(
            sq.locate(&o, &Point::from_ints(-1, -1)),
            Location::Vertex(2)
        );
        assert_eq!(sq.locate(&o, &Point::from_ints(2, 0)), Location::Exterior);
        let t = Point::from_ints(2, 0);
        assert_eq!(sq.locate(&t, &Point::from_ints(1, 0)), Location::Edge(1));
    }

    #[test]
    fn locate_d8_vertex() {
        let d8 = d8_half();
        let v1 = p(frac(7, 8), int(-2));
        assert_eq!(d8.locate(&Point::origin(), &v1), Location::Vertex(0));
        assert_eq!(
            d8.locate(&Point::origin(), &p(int(0), int(-2))),
            Location::Edge(0)
        );
    }

    #[test]
    fn affine_images() {
        let d8 = d8_half();
        assert_eq!(d8.apply_affine(&AffineMap::identity()).unwrap(), d8);
        let scaled = square()
            .apply_affine(&AffineMap::linear(LinearMap::from_ints(2, 0, 0, 1)))
            .unwrap();
        assert_eq!(scaled.area(), int(8));
        let sheared = d8
            .apply_affine(&AffineMap::linear(LinearMap::from_ints(1, 1, 0, 1)))
            .unwrap();
        assert_eq!(sheared.area(), int(10));
        let flip = d8
            .apply_affine(&AffineMap::linear(LinearMap::from_ints(-1, 0, 0, 1)))
            .unwrap();
        assert_eq!(flip.orientation(), Orientation::Counterclockwise);
        assert_eq!(
            d8.apply_affine(&AffineMap::linear(LinearMap::from_ints(1, 2, 2, 4))),
            Err(GeomError::SingularMap)
        );
        assert_eq!(
            d8.apply_affine(&AffineMap::new(
                LinearMap::identity(),
                Point::from_ints(1, 0)
            )),
            Err(GeomError::NonCenteringTranslation)
        );
    }

    #[test]
    fn relabel_round_trip() {
        let d8 = d8_half();
        let r = d8.relabel(3, true);
        assert_eq!(r.vertex(0), d8.vertex(3));
        assert_eq!(r.vertex(1), d8.vertex(2));
        assert_eq!(CSPolygon::new(r.vertices().to_vec()).unwrap(), r);
    }

    #[test]
    fn ccw_order_starts_at_first_vertex() {
        let d8 = d8_half();
        let ccw = CSPolygon::new(d8.ccw_vertices()).unwrap();
        assert_eq!(ccw.orientation(), Orientation::Counterclockwise);
        assert_eq!(ccw.vertex(0), d8.vertex(0));
        assert_eq!(ccw.area(), d8.area());
    }
}
