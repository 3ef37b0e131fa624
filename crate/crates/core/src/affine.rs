//! Exact 2×2 linear maps and affine maps.

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::GeomError;
use crate::geom::{cross, Point, Vector};
use crate::rational::Rational;

/// Row-major 2×2 matrix `[[a, b], [c, d]]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LinearMap {
    pub rows: [Point; 2],
}

impl LinearMap {
    pub fn new(a: Rational, b: Rational, c: Rational, d: Rational) -> Self {
        LinearMap {
            rows: [Point::new(a, b), Point::new(c, d)],
        }
    }

    pub fn from_ints(a: i64, b: i64, c: i64, d: i64) -> Self {
        use crate::rational::int;
        LinearMap::new(int(a), int(b), int(c), int(d))
    }

    pub fn identity() -> Self {
        LinearMap::new(
            Rational::one(),
            Rational::zero(),
            Rational::zero(),
            Rational::one(),
        )
    }

    /// Map whose columns are `c1` and `c2` (sends `e1 ↦ c1`, `e2 ↦ c2`).
    pub fn from_columns(c1: &Vector, c2: &Vector) -> Self {
        LinearMap::new(c1.x.clone(), c2.x.clone(), c1.y.clone(), c2.y.clone())
    }

    pub fn det(&self) -> Rational {
        cross(&self.rows[0], &self.rows[1])
    }

    pub fn is_invertible(&self) -> bool {
        !self.det().is_zero()
    }

    pub fn apply(&self, p: &Point) -> Point {
        let [r0, r1] = &self.rows;
        Point::new(&r0.x * &p.x + &r0.y * &p.y, &r1.x * &p.x + &r1.y * &p.y)
    }

    pub fn inverse(&self) -> Result<LinearMap, GeomError> {
        let det = self.det();
        if det.is_zero() {
            return Err(GeomError::SingularMap);
        }
        let [r0, r1] = &self.rows;
        Ok(LinearMap::new(
            &r1.y / &det,
            -&r0.y / &det,
            -&r1.x / &det,
            &r0.x / &det,
        ))
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &LinearMap) -> LinearMap {
        let c1 = self.apply(&Point::new(
            other.rows[0].x.clone(),
            other.rows[1].x.clone(),
        ));
        let c2 = self.apply(&Point::new(
            other.rows[0].y.clone(),
            other.rows[1].y.clone(),
        ));
        LinearMap::from_columns(&c1, &c2)
    }

    /// The unique linear map with `p1 ↦ q1` and `p2 ↦ q2`; `None` when `p1`
    /// and `p2` are linearly dependent.
    pub fn solve(p1: &Vector, p2: &Vector, q1: &Vector, q2: &Vector) -> Option<LinearMap> {
        let src = LinearMap::from_columns(p1, p2).inverse().ok()?;
        Some(LinearMap::from_columns(q1, q2).compose(&src))
    }
}

/// `p ↦ linear·p + translation`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AffineMap {
    pub linear: LinearMap,
    pub translation: Vector,
}

impl AffineMap {
    pub fn new(linear: LinearMap, translation: Vector) -> Self {
        AffineMap {
            linear,
            translation,
        }
    }

    pub fn linear(linear: LinearMap) -> Self {
        AffineMap::new(linear, Point::origin())
    }

    pub fn identity() -> Self {
        AffineMap::linear(LinearMap::identity())
    }

    pub fn det(&self) -> Rational {
        self.linear.det()
    }

    pub fn apply(&self, p: &Point) -> Point {
        &self.linear.apply(p) + &self.translation
    }

    pub fn inverse(&self) -> Result<AffineMap, GeomError> {
        let inv = self.linear.inverse()?;
        let t = -inv.apply(&self.translation);
        Ok(AffineMap::new(inv, t))
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &AffineMap) -> AffineMap {
        AffineMap::new(
            self.linear.compose(&other.linear),
            self.apply(&other.translation),
        )
    }
}
