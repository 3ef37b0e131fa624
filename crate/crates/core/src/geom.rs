//! Exact points, vectors, rectangles and segments.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{GeomError, ParseError};
use crate::rational::{format_rational, int, mid, parse_rational, Rational};

/// A point (or vector) of the rational plane.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Point {
    pub x: Rational,
    pub y: Rational,
}

/// Displacements share the representation of points.
pub type Vector = Point;

impl Point {
    pub fn new(x: Rational, y: Rational) -> Self {
        Point { x, y }
    }

    pub fn from_ints(x: i64, y: i64) -> Self {
        Point::new(int(x), int(y))
    }

    pub fn origin() -> Self {
        Point::new(Rational::zero(), Rational::zero())
    }

    pub fn is_zero(&self) -> bool {
        self.x.is_zero() && self.y.is_zero()
    }

    pub fn scale(&self, s: &Rational) -> Point {
        Point::new(&self.x * s, &self.y * s)
    }

    pub fn half(&self) -> Point {
        self.scale(&Rational::new(1.into(), 2.into()))
    }

    pub fn midpoint(&self, other: &Point) -> Point {
        Point::new(mid(&self.x, &other.x), mid(&self.y, &other.y))
    }

    /// `x` and `y` in `p/q` text form, comma separated.
    pub fn to_text(&self) -> String {
        format!("{},{}", format_rational(&self.x), format_rational(&self.y))
    }

    /// Parses `x,y` where each coordinate is a rational literal.
    pub fn parse(text: &str) -> Result<Point, ParseError> {
        let (x, y) = text
            .split_once(',')
            .ok_or_else(|| ParseError::Point(text.to_string()))?;
        Ok(Point::new(parse_rational(x)?, parse_rational(y)?))
    }
}

impl fmt::Debug for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.to_text())
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.to_text())
    }
}

impl Serialize for Point {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        [format_rational(&self.x), format_rational(&self.y)].serialize(s)
    }
}

impl<'de> Deserialize<'de> for Point {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Pair(
            #[serde(with = "crate::rational::serde_str")] Rational,
            #[serde(with = "crate::rational::serde_str")] Rational,
        );
        let Pair(x, y) = Pair::deserialize(d)?;
        Ok(Point::new(x, y))
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident) => {
        impl $tr<Point> for Point {
            type Output = Point;
            fn $method(self, rhs: Point) -> Point {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&Point> for Point {
            type Output = Point;
            fn $method(self, rhs: &Point) -> Point {
                (&self).$method(rhs)
            }
        }
        impl $tr<Point> for &Point {
            type Output = Point;
            fn $method(self, rhs: Point) -> Point {
                self.$method(&rhs)
            }
        }
    };
}

impl Add<&Point> for &Point {
    type Output = Point;
    fn add(self, rhs: &Point) -> Point {
        Point::new(&self.x + &rhs.x, &self.y + &rhs.y)
    }
}

impl Sub<&Point> for &Point {
    type Output = Point;
    fn sub(self, rhs: &Point) -> Point {
        Point::new(&self.x - &rhs.x, &self.y - &rhs.y)
    }
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);

impl Neg for &Point {
    type Output = Point;
    fn neg(self) -> Point {
        Point::new(-&self.x, -&self.y)
    }
}

impl Neg for Point {
    type Output = Point;
    fn neg(self) -> Point {
        -&self
    }
}

impl Mul<&Rational> for &Point {
    type Output = Point;
    fn mul(self, rhs: &Rational) -> Point {
        self.scale(rhs)
    }
}

/// `a × b`, positive when `b` is counterclockwise of `a`.
pub fn cross(a: &Vector, b: &Vector) -> Rational {
    &a.x * &b.y - &a.y * &b.x
}

pub fn dot(a: &Vector, b: &Vector) -> Rational {
    &a.x * &b.x + &a.y * &b.y
}

/// Orientation of the triple: `cross(b - a, c - a)`.
pub fn orient(a: &Point, b: &Point, c: &Point) -> Rational {
    let abx = &b.x - &a.x;
    let aby = &b.y - &a.y;
    let acx = &c.x - &a.x;
    let acy = &c.y - &a.y;
    abx * acy - aby * acx
}

/// True when `a` and `b` point along the same ray.
pub fn same_direction(a: &Vector, b: &Vector) -> bool {
    cross(a, b).is_zero() && dot(a, b).is_positive()
}

/// True when direction `r` lies in the half-open counterclockwise sector
/// `(start, end]`, whose opening angle must be in `(0, π]`.
pub fn in_ccw_sector(start: &Vector, end: &Vector, r: &Vector) -> bool {
    let c = cross(start, end);
    if c.is_positive() {
        cross(start, r).is_positive() && !cross(r, end).is_negative()
    } else {
        // straight angle: `end` is opposite to `start`
        let cr = cross(start, r);
        cr.is_positive() || (cr.is_zero() && dot(start, r).is_negative())
    }
}

/// Closed axis-aligned rectangle `[x0, x1] × [y0, y1]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Rect {
    #[serde(with = "crate::rational::serde_str")]
    pub x0: Rational,
    #[serde(with = "crate::rational::serde_str")]
    pub y0: Rational,
    #[serde(with = "crate::rational::serde_str")]
    pub x1: Rational,
    #[serde(with = "crate::rational::serde_str")]
    pub y1: Rational,
}

impl Rect {
    pub fn new(x0: Rational, y0: Rational, x1: Rational, y1: Rational) -> Self {
        Rect { x0, y0, x1, y1 }
    }

    pub fn from_ints(x0: i64, y0: i64, x1: i64, y1: i64) -> Self {
        Rect::new(int(x0), int(y0), int(x1), int(y1))
    }

    pub fn point(p: &Point) -> Self {
        Rect::new(p.x.clone(), p.y.clone(), p.x.clone(), p.y.clone())
    }

    /// Smallest rectangle containing all points; `None` for an empty slice.
    pub fn bounding<'a>(points: impl IntoIterator<Item = &'a Point>) -> Option<Rect> {
        let mut it = points.into_iter();
        let first = it.next()?;
        let mut r = Rect::point(first);
        for p in it {
            if p.x < r.x0 {
                r.x0 = p.x.clone();
            }
            if p.x > r.x1 {
                r.x1 = p.x.clone();
            }
            if p.y < r.y0 {
                r.y0 = p.y.clone();
            }
            if p.y > r.y1 {
                r.y1 = p.y.clone();
            }
        }
        Some(r)
    }

    /// Empty when a lower bound exceeds the upper one. Degenerate
    /// (zero-width) rectangles are not empty.
    pub fn is_empty(&self) -> bool {
        self.x0 > self.x1 || self.y0 > self.y1
    }

    pub fn has_interior(&self) -> bool {
        self.x0 < self.x1 && self.y0 < self.y1
    }

    pub fn contains(&self, p: &Point) -> bool {
        self.x0 <= p.x && p.x <= self.x1 && self.y0 <= p.y && p.y <= self.y1
    }

    pub fn intersects(&self, other: &Rect) -> bool {
        self.x0 <= other.x1 && other.x0 <= self.x1 && self.y0 <= other.y1 && other.y0 <= self.y1
    }

    pub fn translate(&self, t: &Vector) -> Rect {
        Rect::new(
            &self.x0 + &t.x,
            &self.y0 + &t.y,
            &self.x1 + &t.x,
            &self.y1 + &t.y,
        )
    }

    /// Parses `x0,y0,x1,y1`.
    pub fn parse(text: &str) -> Result<Rect, ParseError> {
        let parts: Vec<&str> = text.split(',').collect();
        if parts.len() != 4 {
            return Err(ParseError::Point(text.to_string()));
        }
        Ok(Rect::new(
            parse_rational(parts[0])?,
            parse_rational(parts[1])?,
            parse_rational(parts[2])?,
            parse_rational(parts[3])?,
        ))
    }
}

/// Closed segment with distinct endpoints.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Segment {
    pub a: Point,
    pub b: Point,
}

impl Segment {
    pub fn new(a: Point, b: Point) -> Result<Self, GeomError> {
        if a == b {
            return Err(GeomError::DegenerateSegment);
        }
        Ok(Segment { a, b })
    }

    pub fn direction(&self) -> Vector {
        &self.b - &self.a
    }

    pub fn midpoint(&self) -> Point {
        self.a.midpoint(&self.b)
    }

    pub fn bbox(&self) -> Rect {
        Rect::bounding([&self.a, &self.b]).expect("two points")
    }

    /// Point at parameter `t`, `a` at 0 and `b` at 1.
    pub fn at(&self, t: &Rational) -> Point {
        &self.a + &self.direction().scale(t)
    }

    /// Closed containment test.
    pub fn contains(&self, p: &Point) -> bool {
        orient(&self.a, &self.b, p).is_zero() && self.bbox().contains(p)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Intersection {
    None,
    Point(Point),
    Overlap(Segment),
}

/// Exact intersection of two closed segments. Collinear overlaps of positive
/// length come back as a segment oriented along `s1`.
pub fn intersect_segments(s1: &Segment, s2: &Segment) -> Result<Intersection, GeomError> {
    if s1.a == s1.b || s2.a == s2.b {
        return Err(GeomError::DegenerateSegment);
    }
    let d1 = s1.direction();
    let d2 = s2.direction();
    let denom = cross(&d1, &d2);
    let w = &s2.a - &s1.a;
    if denom.is_zero() {
        if !cross(&w, &d1).is_zero() {
            return Ok(Intersection::None);
        }
        // collinear: project s2's endpoints onto s1's parameter line
        let len2 = dot(&d1, &d1);
        let ta = dot(&(&s2.a - &s1.a), &d1) / &len2;
        let tb = dot(&(&s2.b - &s1.a), &d1) / &len2;
        let (lo, hi) = if ta <= tb { (ta, tb) } else { (tb, ta) };
        let start = if lo > Rational::zero() {
            lo
        } else {
            Rational::zero()
        };
        let end = if hi < int(1) { hi } else { int(1) };
        return Ok(if start > end {
            Intersection::None
        } else if start == end {
            Intersection::Point(s1.at(&start))
        } else {
            Intersection::Overlap(Segment {
                a: s1.at(&start),
                b: s1.at(&end),
            })
        });
    }
    let t = cross(&w, &d2) / &denom;
    let u = cross(&w, &d1) / &denom;
    let unit = |v: &Rational| !v.is_negative() && *v <= int(1);
    if unit(&t) && unit(&u) {
        Ok(Intersection::Point(s1.at(&t)))
    } else {
        Ok(Intersection::None)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::frac;

    fn seg(a: (i64, i64), b: (i64, i64)) -> Segment {
        Segment::new(Point::from_ints(a.0, a.1), Point::from_ints(b.0, b.1)).unwrap()
    }

    #[test]
    fn crossing_diagonals_meet_in_the_middle() {
        let r = intersect_segments(&seg((0, 0), (2, 2)), &seg((0, 2), (2, 0))).unwrap();
        assert_eq!(r, Intersection::Point(Point::from_ints(1, 1)));
    }

    #[test]
    fn disjoint_collinear_segments() {
        let r = intersect_segments(&seg((0, 0), (1, 0)), &seg((2, 0), (3, 0))).unwrap();
        assert_eq!(r, Intersection::None);
    }

    #[test]
    fn collinear_overlap() {
        let r = intersect_segments(&seg((0, 0), (2, 0)), &seg((1, 0), (3, 0))).unwrap();
        assert_eq!(r, Intersection::Overlap(seg((1, 0), (2, 0))));
        // touching at one endpoint is a point
        let r = intersect_segments(&seg((0, 0), (1, 0)), &seg((1, 0), (3, 0))).unwrap();
        assert_eq!(r, Intersection::Point(Point::from_ints(1, 0)));
    }

    #[test]
    fn parallel_and_missing() {
        assert_eq!(
            intersect_segments(&seg((0, 0), (1, 0)), &seg((0, 1), (1, 1))).unwrap(),
            Intersection::None
        );
        assert_eq!(
            intersect_segments(&seg((0, 0), (1, 1)), &seg((3, 0), (2, 1))).unwrap(),
            Intersection::None
        );
    }

    #[test]
    fn degenerate_segment_rejected() {
        let p = Point::from_ints(1, 1);
        assert_eq!(
            Segment::new(p.clone(), p.clone()),
            Err(GeomError::DegenerateSegment)
        );
        let bad = Segment { a: p.clone(), b: p };
        assert_eq!(
            intersect_segments(&bad, &seg((0, 0), (1, 0))),
            Err(GeomError::DegenerateSegment)
        );
    }

    #[test]
    fn sector_membership() {
        let e = Point::from_ints(1, 0);
        let n = Point::from_ints(0, 1);
        let w = Point::from_ints(-1, 0);
        assert!(in_ccw_sector(&e, &n, &Point::from_ints(1, 1)));
        assert!(in_ccw_sector(&e, &n, &n));
        assert!(!in_ccw_sector(&e, &n, &e));
        assert!(in_ccw_sector(&e, &w, &n));
        assert!(in_ccw_sector(&e, &w, &w));
        assert!(!in_ccw_sector(&e, &w, &Point::from_ints(0, -1)));
    }

    #[test]
    fn point_text_round_trip() {
        let p = Point::new(frac(7, 8), int(-2));
        assert_eq!(p.to_text(), "7/8,-2");
        assert_eq!(Point::parse("7/8,-2").unwrap(), p);
        assert!(Point::parse("7/8").is_err());
    }
}
