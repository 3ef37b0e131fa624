//! Planar lattices, half-lattices, and finite unions of lattice cosets.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::affine::LinearMap;
use crate::error::LatticeError;
use crate::geom::{cross, dot, Point, Rect, Vector};
use crate::rational::{ceil_int, floor_int, frac, int, is_integer, Rational};

/// `Λ = { z1·b1 + z2·b2 : z ∈ Z² }` with `b1 × b2 ≠ 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Lattice {
    b1: Vector,
    b2: Vector,
    // maps a point to its coordinates in the basis
    coords: LinearMap,
}

impl Lattice {
    pub fn new(b1: Vector, b2: Vector) -> Result<Self, LatticeError> {
        let coords = LinearMap::from_columns(&b1, &b2)
            .inverse()
            .map_err(|_| LatticeError::Degenerate)?;
        Ok(Lattice { b1, b2, coords })
    }

    /// The integer lattice Z².
    pub fn integer() -> Self {
        Lattice::new(Point::from_ints(1, 0), Point::from_ints(0, 1)).expect("unit basis")
    }

    pub fn b1(&self) -> &Vector {
        &self.b1
    }

    pub fn b2(&self) -> &Vector {
        &self.b2
    }

    pub fn basis(&self) -> [&Vector; 2] {
        [&self.b1, &self.b2]
    }

    /// `|b1 × b2|`, the area of a fundamental domain.
    pub fn det(&self) -> Rational {
        cross(&self.b1, &self.b2).abs()
    }

    /// Coordinates of `p` in the basis, `p = z1·b1 + z2·b2`.
    pub fn coordinates(&self, p: &Point) -> (Rational, Rational) {
        let z = self.coords.apply(p);
        (z.x, z.y)
    }

    pub fn point(&self, z1: &BigInt, z2: &BigInt) -> Point {
        let z1 = Rational::from_integer(z1.clone());
        let z2 = Rational::from_integer(z2.clone());
        &self.b1.scale(&z1) + &self.b2.scale(&z2)
    }

    pub fn member(&self, p: &Point) -> bool {
        let (z1, z2) = self.coordinates(p);
        is_integer(&z1) && is_integer(&z2)
    }

    /// Membership in `½Λ`.
    pub fn half_member(&self, p: &Point) -> bool {
        let (z1, z2) = self.coordinates(p);
        is_integer(&(z1 * int(2))) && is_integer(&(z2 * int(2)))
    }

    /// Every lattice point of the closed rectangle, ordered by `(z1, z2)`.
    pub fn points_in_box(&self, rect: &Rect) -> Vec<Point> {
        if rect.is_empty() {
            return Vec::new();
        }
        // The coordinate map is linear, so the image of the box is the
        // parallelogram spanned by the images of its corners.
        let corners = [
            Point::new(rect.x0.clone(), rect.y0.clone()),
            Point::new(rect.x1.clone(), rect.y0.clone()),
            Point::new(rect.x0.clone(), rect.y1.clone()),
            Point::new(rect.x1.clone(), rect.y1.clone()),
        ];
        let images: Vec<Point> = corners.iter().map(|c| self.coords.apply(c)).collect();
        let zbox = Rect::bounding(&images).expect("four corners");
        let mut out = Vec::new();
        let mut z1 = ceil_int(&zbox.x0);
        let z1_end = floor_int(&zbox.x1);
        let z2_start = ceil_int(&zbox.y0);
        let z2_end = floor_int(&zbox.y1);
        while z1 <= z1_end {
            let mut z2 = z2_start.clone();
            while z2 <= z2_end {
                let p = self.point(&z1, &z2);
                if rect.contains(&p) {
                    out.push(p);
                }
                z2 += 1;
            }
            z1 += 1;
        }
        out
    }

    /// Representative of `p + Λ` in the half-open fundamental domain
    /// `{ s·b1 + t·b2 : 0 ≤ s, t < 1 }`.
    pub fn reduce_mod(&self, p: &Point) -> Point {
        let (z1, z2) = self.coordinates(p);
        let f1 = &z1 - Rational::from_integer(floor_int(&z1));
        let f2 = &z2 - Rational::from_integer(floor_int(&z2));
        &self.b1.scale(&f1) + &self.b2.scale(&f2)
    }

    /// Bounding rectangle of the fundamental parallelogram.
    pub fn fundamental_bbox(&self) -> Rect {
        let o = Point::origin();
        let sum = &self.b1 + &self.b2;
        Rect::bounding([&o, &self.b1, &self.b2, &sum]).expect("four points")
    }

    /// The same lattice with a Lagrange-reduced basis (shortest vectors first).
    pub fn reduced(&self) -> Lattice {
        let norm = |v: &Vector| dot(v, v);
        let (mut b1, mut b2) = (self.b1.clone(), self.b2.clone());
        loop {
            if norm(&b1) > norm(&b2) {
                std::mem::swap(&mut b1, &mut b2);
            }
            let ratio = dot(&b1, &b2) / norm(&b1);
            let mu = Rational::from_integer(floor_int(&(ratio + frac(1, 2))));
            if mu.is_zero() {
                break;
            }
            b2 = &b2 - &b1.scale(&mu);
        }
        Lattice::new(b1, b2).expect("reduction preserves the lattice")
    }

    /// Image lattice `T·Λ` under an invertible linear map.
    pub fn transform(&self, map: &LinearMap) -> Result<Lattice, LatticeError> {
        Lattice::new(map.apply(&self.b1), map.apply(&self.b2))
    }
}

/// Multiset `X = ⋃ⱼ (Λ + oⱼ)`; repeated offsets count repeatedly.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TranslateSet {
    lattice: Lattice,
    offsets: Vec<Vector>,
}

impl TranslateSet {
    pub fn new(lattice: Lattice, offsets: Vec<Vector>) -> Result<Self, LatticeError> {
        if offsets.is_empty() {
            return Err(LatticeError::NoOffsets);
        }
        Ok(TranslateSet { lattice, offsets })
    }

    /// A plain lattice arrangement: the single offset `0`.
    pub fn lattice(lattice: Lattice) -> Self {
        TranslateSet {
            lattice,
            offsets: vec![Point::origin()],
        }
    }

    pub fn base(&self) -> &Lattice {
        &self.lattice
    }

    pub fn offsets(&self) -> &[Vector] {
        &self.offsets
    }

    /// Number of translates of `X` per fundamental domain of the lattice.
    pub fn density(&self) -> usize {
        self.offsets.len()
    }

    /// All elements of `X` in the closed rectangle, with multiplicity,
    /// sorted by reduced offset and then lexicographically.
    pub fn points_in_box(&self, rect: &Rect) -> Vec<Vector> {
        let mut offsets: Vec<(Point, &Vector)> = self
            .offsets
            .iter()
            .map(|o| (self.lattice.reduce_mod(o), o))
            .collect();
        offsets.sort();
        let mut out = Vec::new();
        for (_, o) in offsets {
            let shifted = rect.translate(&-o);
            let mut pts: Vec<Vector> = self
                .lattice
                .points_in_box(&shifted)
                .into_iter()
                .map(|p| &p + o)
                .collect();
            pts.sort();
            out.extend(pts);
        }
        out
    }

    /// How many times `p` occurs in the multiset `X`.
    pub fn count(&self, p: &Point) -> usize {
        self.offsets
            .iter()
            .filter(|o| self.lattice.member(&(p - *o)))
            .count()
    }

    pub fn transform(&self, map: &LinearMap) -> Result<TranslateSet, LatticeError> {
        Ok(TranslateSet {
            lattice: self.lattice.transform(map)?,
            offsets: self.offsets.iter().map(|o| map.apply(o)).collect(),
        })
    }
}

#[derive(Serialize, Deserialize)]
struct LatticeRepr {
    basis: [Point; 2],
}

impl Serialize for Lattice {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        LatticeRepr {
            basis: [self.b1.clone(), self.b2.clone()],
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Lattice {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let [b1, b2] = LatticeRepr::deserialize(d)?.basis;
        Lattice::new(b1, b2).map_err(serde::de::Error::custom)
    }
}

#[derive(Serialize, Deserialize)]
struct TranslateSetRepr {
    lattice: Lattice,
    #[serde(default = "origin_only")]
    offsets: Vec<Point>,
}

fn origin_only() -> Vec<Point> {
    vec![Point::origin()]
}

impl Serialize for TranslateSet {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        TranslateSetRepr {
            lattice: self.lattice.clone(),
            offsets: self.offsets.clone(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for TranslateSet {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let r = TranslateSetRepr::deserialize(d)?;
        TranslateSet::new(r.lattice, r.offsets).map_err(serde::de::Error::custom)
    }
}
