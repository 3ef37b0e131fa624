//! Library results checked against the independent oracles in `common`.

mod common;

use common::*;
use tilekit::bolle::half_lattice_points_on_segment;
use tilekit::families::{
    decagon_from_vertex, hexagon, octagon_type1, octagon_type2, octagon_type2_misprinted_lattice,
    parallelogram,
};
use tilekit::rational::{frac, int};
use tilekit::{
    check_bolle, multiplicity_at, verify_k_fold, CSPolygon, Lattice, Point, Segment, TranslateSet,
};

fn sample_points(rng: &mut Rng, n: usize, span: i64) -> Vec<Point> {
    (0..n)
        .map(|_| {
            Point::new(
                frac(rng.range(-span * 97, span * 97), 97),
                frac(rng.range(-span * 89, span * 89), 89),
            )
        })
        .collect()
}

fn assert_brute_coverage(polygon: &CSPolygon, x: &TranslateSet, k: usize, r: i64, seed: u64) {
    let mut rng = Rng::new(seed);
    for p in sample_points(&mut rng, 12, 3) {
        let boundary = multiplicity_at(polygon, x, &p).boundary_count;
        if boundary == 0 {
            assert_eq!(brute_interior_count(polygon, x, &p, r), k, "at {p}");
        }
    }
}

#[test]
fn octagon1_area_and_coverage() {
    let f = octagon_type1(&frac(1, 2)).unwrap();
    assert_eq!(fan_area(f.polygon.vertices()), int(10));
    assert_eq!(f.polygon.area(), int(10));
    assert_eq!(f.lattice.det(), int(2));
    assert_brute_coverage(
        &f.polygon,
        &TranslateSet::lattice(f.lattice.clone()),
        5,
        8,
        11,
    );
}

#[test]
fn octagon1_vertex_interior_count() {
    let f = octagon_type1(&frac(1, 2)).unwrap();
    let v1 = ptq((7, 8), (-2, 1));
    let x = TranslateSet::lattice(f.lattice);
    assert_eq!(brute_interior_count(&f.polygon, &x, &v1, 8), 3);
    assert_eq!(multiplicity_at(&f.polygon, &x, &v1).interior_count, 3);
}

#[test]
fn lattice_octagon_is_seven_fold() {
    let p = lattice_octagon();
    assert_eq!(fan_area(p.vertices()), int(7));
    let x = TranslateSet::lattice(Lattice::integer());
    assert_brute_coverage(&p, &x, 7, 4, 12);
    let r = verify_k_fold(&p, &x, 7);
    assert!(r.pass);
    assert_eq!(check_bolle(&p, &Lattice::integer()).multiplicity, Some(7));
}

#[test]
fn octagon2_both_lattices() {
    for beta in [frac(1, 4), frac(1, 2), int(1)] {
        let f = octagon_type2(&beta).unwrap();
        assert_eq!(fan_area(f.polygon.vertices()), int(20));
        assert_brute_coverage(
            &f.polygon,
            &TranslateSet::lattice(f.lattice.clone()),
            5,
            8,
            13,
        );
        // average coverage 10, but not constant: no multiple tiling at all
        let wide = TranslateSet::lattice(octagon_type2_misprinted_lattice(&beta));
        assert_eq!(wide.base().det(), int(2));
        let r = verify_k_fold(&f.polygon, &wide, 10);
        assert!(!r.pass);
        assert!(r.min_count < r.max_count);
        let mut rng = Rng::new(14);
        let counts: Vec<usize> = sample_points(&mut rng, 40, 3)
            .iter()
            .filter(|p| multiplicity_at(&f.polygon, &wide, p).boundary_count == 0)
            .map(|p| brute_interior_count(&f.polygon, &wide, p, 10))
            .collect();
        assert!(counts.iter().min() < counts.iter().max(), "{counts:?}");
    }
}

#[test]
fn decagon_area_and_coverage() {
    let f = decagon_from_vertex(&ptq((-5, 4), (3, 2))).unwrap();
    assert_eq!(fan_area(f.polygon.vertices()), int(20));
    assert_brute_coverage(
        &f.polygon,
        &TranslateSet::lattice(f.lattice.clone()),
        5,
        30,
        15,
    );
}

#[test]
fn fedorov_examples() {
    let h = hexagon(&pt(1, 0), &pt(0, 1), &pt(-1, 1)).unwrap();
    assert_eq!(fan_area(h.polygon.vertices()), int(3));
    assert_eq!(h.lattice.det(), int(3));
    assert_brute_coverage(
        &h.polygon,
        &TranslateSet::lattice(h.lattice.clone()),
        1,
        6,
        16,
    );
    let p = parallelogram(&pt(2, 0), &pt(1, 3)).unwrap();
    assert_eq!(fan_area(p.polygon.vertices()), int(6));
    assert_brute_coverage(
        &p.polygon,
        &TranslateSet::lattice(p.lattice.clone()),
        1,
        6,
        17,
    );
}

/// Points of `½Λ` on a segment by scanning doubled lattice coordinates.
fn brute_half_points(l: &Lattice, s: &Segment, r: i64) -> Vec<Point> {
    let mut out = Vec::new();
    for i in -r..=r {
        for j in -r..=r {
            let p = &l.b1().scale(&frac(i, 2)) + &l.b2().scale(&frac(j, 2));
            if s.contains(&p) {
                out.push(p);
            }
        }
    }
    out.sort();
    out
}

#[test]
fn half_lattice_points_match_brute_force() {
    let mut rng = Rng::new(99);
    let l = Lattice::new(pt(2, 0), ptq((5, 4), (1, 1))).unwrap();
    for _ in 0..200 {
        let a = Point::new(frac(rng.range(-24, 24), 8), frac(rng.range(-8, 8), 4));
        let b = Point::new(frac(rng.range(-24, 24), 8), frac(rng.range(-8, 8), 4));
        let Ok(s) = Segment::new(a, b) else { continue };
        let mut got: Vec<Point> = half_lattice_points_on_segment(&l, &s).points().collect();
        got.sort();
        assert_eq!(got, brute_half_points(&l, &s, 20), "{s:?}");
    }
}
