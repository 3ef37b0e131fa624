//! Bolle's criterion for multiple lattice tiles.
//!
//! A centrally symmetric convex polygon `P` (centered at the origin) is a
//! `k`-fold lattice tile for `Λ` exactly when every edge `G` satisfies
//!
//! 1. the relative interior of `G` contains a point of `½Λ`, and
//! 2. the midpoint of `G` lies in `½Λ`, or the edge vector of `G` lies in `Λ`.
//!
//! When it is, `k = area(P) / det(Λ)`. Half-lattice points on an edge are
//! found by solving one linear Diophantine equation, never by sampling.

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::diophantine::solve_linear;
use crate::geom::{Point, Segment, Vector};
use crate::lattice::Lattice;
use crate::polygon::CSPolygon;
use crate::rational::{ceil_int, floor_int, int, is_integer, Rational};

/// The points of `½Λ` on a closed segment: `start + j·step` for
/// `0 ≤ j < count`, ordered from the segment's first endpoint to its second.
/// `params` holds the matching segment parameters in `[0, 1]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HalfLatticeRun {
    pub start: Point,
    pub step: Vector,
    pub count: usize,
    pub t_start: Rational,
    pub t_step: Rational,
}

impl HalfLatticeRun {
    fn empty() -> Self {
        HalfLatticeRun {
            start: Point::origin(),
            step: Point::origin(),
            count: 0,
            t_start: Rational::zero(),
            t_step: Rational::zero(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.count == 0
    }

    pub fn points(&self) -> impl Iterator<Item = Point> + '_ {
        (0..self.count).map(move |j| &self.start + &self.step.scale(&int(j as i64)))
    }

    pub fn params(&self) -> impl Iterator<Item = Rational> + '_ {
        (0..self.count).map(move |j| &self.t_start + &self.t_step * int(j as i64))
    }

    /// First point strictly between the endpoints, if any.
    pub fn interior_witness(&self) -> Option<Point> {
        let zero = Rational::zero();
        let one = int(1);
        self.points()
            .zip(self.params())
            .find(|(_, t)| *t > zero && *t < one)
            .map(|(p, _)| p)
    }
}

fn lcm_of_denominators<'a>(values: impl IntoIterator<Item = &'a Rational>) -> BigInt {
    use num_integer::Integer;
    values
        .into_iter()
        .fold(BigInt::from(1), |acc, v| acc.lcm(v.denom()))
}

/// All points of `½Λ` on the closed segment.
pub fn half_lattice_points_on_segment(lattice: &Lattice, seg: &Segment) -> HalfLatticeRun {
    // In doubled lattice coordinates the segment is A + t·D and we need
    // A + t·D ∈ Z² with t ∈ [0, 1].
    let (a1, a2) = lattice.coordinates(&seg.a);
    let (d1, d2) = lattice.coordinates(&seg.direction());
    let two = int(2);
    let (a1, a2, d1, d2) = (a1 * &two, a2 * &two, d1 * &two, d2 * &two);
    if d1.is_zero() && d2.is_zero() {
        return HalfLatticeRun::empty();
    }

    // z - A parallel to D:  D1·z2 - D2·z1 = D1·A2 - D2·A1
    let rhs = &d1 * &a2 - &d2 * &a1;
    let scale = Rational::from_integer(lcm_of_denominators([&d1, &d2, &rhs]));
    let ca = (-&d2 * &scale).to_integer();
    let cb = (&d1 * &scale).to_integer();
    let cc = (&rhs * &scale).to_integer();
    let Some(line) = solve_linear(&ca, &cb, &cc) else {
        return HalfLatticeRun::empty();
    };

    let param = |z1: &BigInt, z2: &BigInt| -> Rational {
        if !d1.is_zero() {
            (Rational::from_integer(z1.clone()) - &a1) / &d1
        } else {
            (Rational::from_integer(z2.clone()) - &a2) / &d2
        }
    };
    let (z1, z2) = line.at(&BigInt::zero());
    let t0 = param(&z1, &z2);
    let (w1, w2) = line.at(&BigInt::from(1));
    let dt = param(&w1, &w2) - &t0;

    // t0 + j·dt ∈ [0, 1]
    let lo = (-&t0) / &dt;
    let hi = (int(1) - &t0) / &dt;
    let (lo, hi) = if lo <= hi { (lo, hi) } else { (hi, lo) };
    let j_lo = ceil_int(&lo);
    let j_hi = floor_int(&hi);
    if j_lo > j_hi {
        return HalfLatticeRun::empty();
    }
    let count = (&j_hi - &j_lo + 1u32)
        .to_usize()
        .expect("run length fits in usize");
    let j_first = if dt.is_positive() { j_lo } else { j_hi };
    let t_start = &t0 + &dt * Rational::from_integer(j_first);
    let t_step = dt.abs();
    HalfLatticeRun {
        start: seg.at(&t_start),
        step: seg.direction().scale(&t_step),
        count,
        t_start,
        t_step,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeEvidence {
    pub edge: usize,
    pub interior_half_lattice_witness: Option<Point>,
    pub midpoint_in_half_lattice: bool,
    pub edge_is_lattice_vector: bool,
    pub verdict: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BolleReport {
    pub pass: bool,
    pub per_edge: Vec<EdgeEvidence>,
    #[serde(with = "crate::rational::serde_str")]
    pub area: Rational,
    #[serde(with = "crate::rational::serde_str")]
    pub det: Rational,
    /// `area / det`.
    #[serde(with = "crate::rational::serde_str")]
    pub area_ratio: Rational,
    pub multiplicity: Option<u64>,
    /// Edge conditions all hold but `area / det` is not a positive integer.
    pub non_integer_multiplicity: bool,
}

pub fn check_edge(lattice: &Lattice, edge: usize, seg: &Segment) -> EdgeEvidence {
    let run = half_lattice_points_on_segment(lattice, seg);
    let witness = run.interior_witness();
    let midpoint_in_half_lattice = lattice.half_member(&seg.midpoint());
    // Λ = -Λ, so the direction of traversal does not matter
    let edge_is_lattice_vector = lattice.member(&seg.direction());
    let verdict = witness.is_some() && (midpoint_in_half_lattice || edge_is_lattice_vector);
    EdgeEvidence {
        edge,
        interior_half_lattice_witness: witness,
        midpoint_in_half_lattice,
        edge_is_lattice_vector,
        verdict,
    }
}

pub fn check_bolle(polygon: &CSPolygon, lattice: &Lattice) -> BolleReport {
    let per_edge: Vec<EdgeEvidence> = polygon
        .edges()
        .enumerate()
        .map(|(i, seg)| check_edge(lattice, i, &seg))
        .collect();
    let area = polygon.area();
    let det = lattice.det();
    let area_ratio = &area / &det;
    let edges_ok = per_edge.iter().all(|e| e.verdict);
    let integral = is_integer(&area_ratio) && area_ratio.is_positive();
    let multiplicity = (edges_ok && integral)
        .then(|| area_ratio.to_integer().to_u64())
        .flatten();
    BolleReport {
        pass: multiplicity.is_some(),
        per_edge,
        area,
        det,
        area_ratio,
        multiplicity,
        non_integer_multiplicity: edges_ok && !integral,
    }
}
