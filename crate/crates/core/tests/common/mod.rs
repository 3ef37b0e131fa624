//! Shared fixtures and independent oracles for the integration tests.
//!
//! The oracles deliberately avoid the library's algorithms: areas come from a
//! triangle fan, coverage from brute-force half-plane tests over a plain
//! integer range of lattice coordinates.

#![allow(dead_code)]

use num_traits::{Signed, Zero};
use tilekit::rational::{frac, int, Rational};
use tilekit::{CSPolygon, LinearMap, Point, TranslateSet};

pub fn pt(x: i64, y: i64) -> Point {
    Point::from_ints(x, y)
}

pub fn ptq(x: (i64, i64), y: (i64, i64)) -> Point {
    Point::new(frac(x.0, x.1), frac(y.0, y.1))
}

/// The octagon with vertices (1,0),(2,0),(3,1),(3,2),(2,3),(1,3),(0,2),(0,1),
/// moved so its center (3/2,3/2) is at the origin.
pub fn lattice_octagon() -> CSPolygon {
    let c = ptq((3, 2), (3, 2));
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
    CSPolygon::new(raw.iter().map(|&(x, y)| &pt(x, y) - &c).collect()).unwrap()
}

/// Area by fanning triangles from vertex 0, independent of the shoelace sum.
pub fn fan_area(vertices: &[Point]) -> Rational {
    let o = &vertices[0];
    let mut twice = Rational::zero();
    for w in vertices[1..].windows(2) {
        let (a, b) = (&w[0] - o, &w[1] - o);
        twice += &a.x * &b.y - &a.y * &b.x;
    }
    (twice / int(2)).abs()
}

/// Strict interior test by half-planes, orientation taken from the fan area sign.
pub fn strictly_inside(vertices: &[Point], t: &Point, p: &Point) -> bool {
    let n = vertices.len();
    let mut signs = (0, 0);
    for i in 0..n {
        let a = &vertices[i] + t;
        let b = &vertices[(i + 1) % n] + t;
        let c = (&b.x - &a.x) * (&p.y - &a.y) - (&b.y - &a.y) * (&p.x - &a.x);
        if c.is_positive() {
            signs.0 += 1;
        } else if c.is_negative() {
            signs.1 += 1;
        } else {
            return false;
        }
    }
    signs.0 == n || signs.1 == n
}

/// Number of translates of `X` containing `p` in their interior, found by
/// scanning lattice coordinates in `-r..=r` around the origin.
pub fn brute_interior_count(polygon: &CSPolygon, x: &TranslateSet, p: &Point, r: i64) -> usize {
    let l = x.base();
    let mut count = 0;
    for o in x.offsets() {
        for i in -r..=r {
            for j in -r..=r {
                let t = &(&l.b1().scale(&int(i)) + &l.b2().scale(&int(j))) + o;
                if strictly_inside(polygon.vertices(), &t, p) {
                    count += 1;
                }
            }
        }
    }
    count
}

/// A scan radius for `brute_interior_count` large enough that every lattice
/// coordinate pair outside it places the translate away from `p`.
pub fn coverage_radius(polygon: &CSPolygon, x: &TranslateSet, p: &Point) -> i64 {
    let linf = |q: &Point| std::cmp::max(q.x.abs(), q.y.abs());
    let reach = polygon.vertices().iter().map(linf).max().unwrap()
        + linf(p)
        + x.offsets()
            .iter()
            .map(linf)
            .max()
            .unwrap_or_else(Rational::zero);
    let (b1, b2) = (x.base().b1(), x.base().b2());
    let det = (&b1.x * &b2.y - &b1.y * &b2.x).abs();
    let spread = b1.x.abs() + b1.y.abs() + b2.x.abs() + b2.y.abs();
    (reach * spread / det)
        .ceil()
        .to_integer()
        .to_string()
        .parse::<i64>()
        .unwrap()
        + 1
}

/// Deterministic xorshift stream for reproducible test inputs.
pub struct Rng(u64);

impl Rng {
    pub fn new(seed: u64) -> Self {
        Rng(seed.max(1))
    }

    pub fn next(&mut self) -> u64 {
        let mut x = self.0;
        x ^= x << 13;
        x ^= x >> 7;
        x ^= x << 17;
        self.0 = x;
        x
    }

    pub fn range(&mut self, lo: i64, hi: i64) -> i64 {
        lo + (self.next() % (hi - lo + 1) as u64) as i64
    }

    /// Rational in `(lo, hi)` with denominator `den`.
    pub fn open_frac(&mut self, lo: Rational, hi: Rational, den: i64) -> Rational {
        loop {
            let q = &lo + (&hi - &lo) * frac(self.range(1, den - 1), den);
            if q > lo && q < hi {
                return q;
            }
        }
    }
}

/// Random centrally symmetric convex decagon from five edge directions in
/// the upper half-plane.
pub fn random_decagon(rng: &mut Rng) -> CSPolygon {
    loop {
        let mut dirs: Vec<Point> = Vec::new();
        while dirs.len() < 5 {
            let d = pt(rng.range(-9, 9), rng.range(0, 9));
            let upper = d.y.is_positive() || (d.y.is_zero() && d.x.is_positive());
            let parallel = dirs.iter().any(|e| (&e.x * &d.y - &e.y * &d.x).is_zero());
            if upper && !parallel {
                dirs.push(d);
            }
        }
        // sort counterclockwise from the positive x-axis
        dirs.sort_by(|a, b| {
            let c = &a.x * &b.y - &a.y * &b.x;
            if c.is_positive() {
                std::cmp::Ordering::Less
            } else {
                std::cmp::Ordering::Greater
            }
        });
        let edges: Vec<Point> = dirs
            .iter()
            .map(|d| d.scale(&frac(rng.range(1, 6), rng.range(1, 3))))
            .collect();
        let mut half = vec![Point::origin()];
        for e in &edges {
            let next = half.last().unwrap() + e;
            half.push(next);
        }
        let center = half[5].half();
        let vertices: Vec<Point> = half[..5].iter().map(|v| v - &center).collect();
        if let Ok(p) = CSPolygon::from_half(&vertices) {
            return p;
        }
    }
}

/// A centrally symmetric `2m`-gon inscribed in the unit circle, close to
/// regular, with rational vertices from the rational parametrization of
/// the circle.
pub fn near_regular(m: usize) -> CSPolygon {
    let half: Vec<Point> = (0..m)
        .map(|j| {
            let theta = std::f64::consts::PI * (j as f64 + 0.5) / m as f64;
            let t = frac(((theta / 2.0).tan() * 1000.0).round() as i64, 1000);
            let d = int(1) + &t * &t;
            Point::new((int(1) - &t * &t) / &d, int(2) * &t / d)
        })
        .collect();
    CSPolygon::from_half(&half).unwrap()
}

/// Unimodular integer matrix times a rational scale.
pub fn random_linear(rng: &mut Rng) -> LinearMap {
    let mut m = LinearMap::identity();
    for _ in 0..4 {
        let s = int(rng.range(-2, 2));
        let e = if rng.next().is_multiple_of(2) {
            LinearMap::new(int(1), s, int(0), int(1))
        } else {
            LinearMap::new(int(1), int(0), s, int(1))
        };
        m = e.compose(&m);
    }
    let scale = frac(rng.range(1, 7), rng.range(1, 5));
    let sign = if rng.next().is_multiple_of(3) {
        int(-1)
    } else {
        int(1)
    };
    LinearMap::new(&scale * &sign, int(0), int(0), scale).compose(&m)
}
