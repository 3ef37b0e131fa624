//! Generators for the polygons that tile five-fold, together with their
//! lattices, plus the two one-fold families.
//!
//! Every generator runs the Bolle check on its own output before returning,
//! so a returned [`FamilyInstance`] always tiles with multiplicity
//! `expected_k`.

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::bolle::check_bolle;
use crate::error::FamilyError;
use crate::geom::{cross, orient, Point, Vector};
use crate::lattice::Lattice;
use crate::polygon::CSPolygon;
use crate::rational::{format_rational, frac, int, Rational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Family {
    Parallelogram,
    Hexagon,
    /// First octagon family, `0 < alpha < 2/3`.
    OctagonI {
        alpha: Rational,
    },
    /// Second octagon family, `0 < beta ≤ 1`.
    OctagonII {
        beta: Rational,
    },
    /// Decagon with fixed edge midpoints, determined by its first vertex.
    Decagon {
        v1: Point,
    },
}

impl Family {
    /// Short name, as used by the command line.
    pub fn name(&self) -> &'static str {
        match self {
            Family::Parallelogram => "parallelogram",
            Family::Hexagon => "hexagon",
            Family::OctagonI { .. } => "octagon1",
            Family::OctagonII { .. } => "octagon2",
            Family::Decagon { .. } => "decagon",
        }
    }

    /// The family parameter as text (`p/q` or `x,y`).
    pub fn parameter(&self) -> Option<String> {
        match self {
            Family::Parallelogram | Family::Hexagon => None,
            Family::OctagonI { alpha } => Some(format_rational(alpha)),
            Family::OctagonII { beta } => Some(format_rational(beta)),
            Family::Decagon { v1 } => Some(v1.to_text()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyInstance {
    pub family: Family,
    pub polygon: CSPolygon,
    pub lattice: Lattice,
    pub expected_k: u64,
}

#[derive(Serialize)]
struct InstanceRepr<'a> {
    family: &'static str,
    parameter: Option<String>,
    polygon: &'a CSPolygon,
    lattice: &'a Lattice,
    expected_k: u64,
}

impl Serialize for FamilyInstance {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        InstanceRepr {
            family: self.family.name(),
            parameter: self.family.parameter(),
            polygon: &self.polygon,
            lattice: &self.lattice,
            expected_k: self.expected_k,
        }
        .serialize(s)
    }
}

fn self_checked(
    family: Family,
    polygon: CSPolygon,
    lattice: Lattice,
    expected_k: u64,
) -> Result<FamilyInstance, FamilyError> {
    let report = check_bolle(&polygon, &lattice);
    if report.multiplicity != Some(expected_k) {
        let got = match report.multiplicity {
            Some(k) => k.to_string(),
            None if report.non_integer_multiplicity => format_rational(&report.area_ratio),
            None => "edge condition failure".to_string(),
        };
        return Err(FamilyError::SelfCheckFailed {
            expected: expected_k,
            got,
        });
    }
    Ok(FamilyInstance {
        family,
        polygon,
        lattice,
        expected_k,
    })
}

/// Centered parallelogram with edge vectors `e1`, `e2`, tiling once with
/// the lattice they span.
pub fn parallelogram(e1: &Vector, e2: &Vector) -> Result<FamilyInstance, FamilyError> {
    if cross(e1, e2).is_zero() {
        return Err(FamilyError::DegenerateEdges);
    }
    let s = (e1 + e2).half();
    let d = (e1 - e2).half();
    let polygon = CSPolygon::new(vec![s.clone(), -&d, -&s, d])?;
    let lattice = Lattice::new(e1.clone(), e2.clone())?;
    self_checked(Family::Parallelogram, polygon, lattice, 1)
}

/// Hexagon `v1, v2, v3, -v1, -v2, -v3`, tiling once with `⟨v1+v2, v2+v3⟩`.
pub fn hexagon(v1: &Point, v2: &Point, v3: &Point) -> Result<FamilyInstance, FamilyError> {
    let polygon = CSPolygon::new(vec![v1.clone(), v2.clone(), v3.clone(), -v1, -v2, -v3])?;
    let lattice = Lattice::new(v1 + v2, v2 + v3)?;
    self_checked(Family::Hexagon, polygon, lattice, 1)
}

fn octagon_from_half(half: [Point; 4]) -> Result<CSPolygon, FamilyError> {
    Ok(CSPolygon::from_half(&half)?)
}

pub fn octagon_type1_polygon(alpha: &Rational) -> Result<CSPolygon, FamilyError> {
    let a4 = alpha / int(4);
    let a54 = alpha * frac(5, 4);
    octagon_from_half([
        Point::new(frac(3, 2) - &a54, int(-2)),
        Point::new(frac(-1, 2) - &a54, int(-2)),
        Point::new(&a4 - frac(3, 2), int(0)),
        Point::new(&a4 - frac(3, 2), int(1)),
    ])
}

/// `Λ(α) = ⟨(2, 0), (1 + α/2, 1)⟩`.
pub fn octagon_type1_lattice(alpha: &Rational) -> Lattice {
    Lattice::new(
        Point::from_ints(2, 0),
        Point::new(int(1) + alpha / int(2), int(1)),
    )
    .expect("basis is triangular with nonzero diagonal")
}

pub fn octagon_type1(alpha: &Rational) -> Result<FamilyInstance, FamilyError> {
    if !alpha.is_positive() || *alpha >= frac(2, 3) {
        return Err(FamilyError::ParameterOutOfRange {
            value: format_rational(alpha),
            range: "(0, 2/3)",
        });
    }
    self_checked(
        Family::OctagonI {
            alpha: alpha.clone(),
        },
        octagon_type1_polygon(alpha)?,
        octagon_type1_lattice(alpha),
        5,
    )
}

pub fn octagon_type2_polygon(beta: &Rational) -> Result<CSPolygon, FamilyError> {
    octagon_from_half([
        Point::new(int(2) - beta, int(-3)),
        Point::new(-beta, int(-3)),
        Point::from_ints(-2, -1),
        Point::from_ints(-2, 1),
    ])
}

/// `⟨(2, 0), (1 + β/2, 2)⟩`, the lattice the second octagon family tiles with.
pub fn octagon_type2_lattice(beta: &Rational) -> Lattice {
    Lattice::new(
        Point::from_ints(2, 0),
        Point::new(int(1) + beta / int(2), int(2)),
    )
    .expect("basis is triangular with nonzero diagonal")
}

/// `⟨(2, 0), (1 + β/2, 1)⟩`, half the determinant of
/// [`octagon_type2_lattice`]. Translates of the octagon by it cover the
/// plane ten times on average, and unevenly, so it tiles with no
/// multiplicity.
pub fn octagon_type2_misprinted_lattice(beta: &Rational) -> Lattice {
    Lattice::new(
        Point::from_ints(2, 0),
        Point::new(int(1) + beta / int(2), int(1)),
    )
    .expect("basis is triangular with nonzero diagonal")
}

pub fn octagon_type2(beta: &Rational) -> Result<FamilyInstance, FamilyError> {
    if !beta.is_positive() || *beta > int(1) {
        return Err(FamilyError::ParameterOutOfRange {
            value: format_rational(beta),
            range: "(0, 1]",
        });
    }
    self_checked(
        Family::OctagonII { beta: beta.clone() },
        octagon_type2_polygon(beta)?,
        octagon_type2_lattice(beta),
        5,
    )
}

/// Edge midpoints `u1..u5` of the canonical decagons; `u6..u10` are their
/// negations.
pub fn decagon_midpoints() -> [Point; 5] {
    [
        Point::from_ints(0, 2),
        Point::from_ints(2, 2),
        Point::from_ints(3, 1),
        Point::from_ints(3, 0),
        Point::from_ints(2, -1),
    ]
}

/// Corners of the quadrilateral `W`, in clockwise order. A canonical decagon
/// exists exactly when its first vertex lies strictly inside `W`.
pub fn w_quadrilateral() -> [Point; 4] {
    [
        Point::from_ints(-1, 2),
        Point::new(int(-1), frac(3, 2)),
        Point::new(frac(-4, 3), frac(4, 3)),
        Point::new(frac(-3, 2), frac(3, 2)),
    ]
}

pub fn in_w_interior(p: &Point) -> bool {
    let w = w_quadrilateral();
    (0..4).all(|i| orient(&w[i], &w[(i + 1) % 4], p).is_negative())
}

/// `⟨a3, a2 + a5⟩ = ⟨(6, 2), (8, 2)⟩`.
pub fn decagon_lattice() -> Lattice {
    let a = decagon_midpoints().map(|u| u.scale(&int(2)));
    Lattice::new(a[2].clone(), &a[1] + &a[4]).expect("independent")
}

pub fn decagon_polygon(v1: &Point) -> Result<CSPolygon, FamilyError> {
    if !in_w_interior(v1) {
        return Err(FamilyError::VertexNotInW);
    }
    let half = decagon_midpoints();
    let mut vertices = vec![v1.clone()];
    for i in 0..10 {
        let u = if i < 5 {
            half[i].clone()
        } else {
            -&half[i - 5]
        };
        let next = &u.scale(&int(2)) - &vertices[i];
        vertices.push(next);
    }
    if vertices.pop().as_ref() != Some(v1) {
        return Err(FamilyError::ChainDoesNotClose);
    }
    Ok(CSPolygon::new(vertices)?)
}

pub fn decagon_from_vertex(v1: &Point) -> Result<FamilyInstance, FamilyError> {
    self_checked(
        Family::Decagon { v1: v1.clone() },
        decagon_polygon(v1)?,
        decagon_lattice(),
        5,
    )
}

fn require_decagon(polygon: &CSPolygon) -> Result<(), FamilyError> {
    if polygon.m() != 5 {
        return Err(FamilyError::WrongGonality {
            expected: 10,
            got: polygon.len(),
        });
    }
    Ok(())
}

/// `a_i = u_i - u_{i+5} = 2·u_i` for the five edges of the first half.
pub fn midpoint_vectors(polygon: &CSPolygon) -> Result<[Vector; 5], FamilyError> {
    require_decagon(polygon)?;
    Ok(std::array::from_fn(|i| polygon.a_vector(i)))
}

/// `a1 - a2 + a3 - a4 + a5 = 0`.
pub fn alternating_midpoint_sum_is_zero(a: &[Vector; 5]) -> bool {
    let sum = &(&(&(&a[0] - &a[1]) + &a[2]) - &a[3]) + &a[4];
    sum.is_zero()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CaseLattice {
    pub case: String,
    pub basis: [Vector; 2],
    pub degenerate: bool,
    #[serde(with = "crate::rational::serde_str::option")]
    pub det: Option<Rational>,
    pub bolle_k: Option<u64>,
}

/// The five candidate lattices a five-fold decagon tiling can use.
pub fn case_lattices(polygon: &CSPolygon) -> Result<Vec<CaseLattice>, FamilyError> {
    let a = midpoint_vectors(polygon)?;
    let cases = [
        ("i", a[0].clone(), &a[2] - &a[3]),
        ("ii", a[2].clone(), &a[1] + &a[4]),
        ("iii", a[3].clone(), &a[0] - &a[1]),
        ("iv", a[2].clone(), &a[0] + &a[4]),
        ("v", a[4].clone(), &a[1] - &a[3]),
    ];
    Ok(cases
        .into_iter()
        .map(
            |(case, b1, b2)| match Lattice::new(b1.clone(), b2.clone()) {
                Ok(lattice) => CaseLattice {
                    case: case.to_string(),
                    basis: [b1, b2],
                    degenerate: false,
                    det: Some(lattice.det()),
                    bolle_k: check_bolle(polygon, &lattice).multiplicity,
                },
                Err(_) => CaseLattice {
                    case: case.to_string(),
                    basis: [b1, b2],
                    degenerate: true,
                    det: None,
                    bolle_k: None,
                },
            },
        )
        .collect())
}
