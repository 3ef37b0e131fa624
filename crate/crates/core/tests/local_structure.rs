mod common;

use common::*;
use tilekit::error::LocalError;
use tilekit::families::{decagon_from_vertex, octagon_type1};
use tilekit::local::{
    check_vertex_sums, edge_cover_lower_bound, incident_edge_covers, vertex_classes, vertex_star,
    wheels_at,
};
use tilekit::rational::frac;
use tilekit::{Lattice, TranslateSet};

#[test]
fn octagon1_first_vertex() {
    let f = octagon_type1(&frac(1, 2)).unwrap();
    let x = TranslateSet::lattice(f.lattice);
    let v1 = ptq((7, 8), (-2, 1));
    let star = vertex_star(&f.polygon, &x, &v1).unwrap();
    assert_eq!(star.in_interior_count, 3);
    assert_eq!(star.edge_through_count, 1);
    let w = wheels_at(&f.polygon, &x, &v1).unwrap();
    assert_eq!((w.phi, w.ell, w.kappa, w.varphi), (2, 1, 1, 3));
}

#[test]
fn octagon1_vertex_sums() {
    let f = octagon_type1(&frac(1, 2)).unwrap();
    let x = TranslateSet::lattice(f.lattice);
    let t = check_vertex_sums(&f.polygon, &x, 5).unwrap();
    assert!(t.all_hold);
    assert!(t.rows.iter().all(|r| r.phi + r.varphi == 5));
    // rows come sorted by reduced coordinates
    let vs: Vec<_> = t.rows.iter().map(|r| r.vertex.clone()).collect();
    let mut sorted = vs.clone();
    sorted.sort();
    assert_eq!(vs, sorted);
    assert!(!check_vertex_sums(&f.polygon, &x, 4).unwrap().all_hold);
}

#[test]
fn decagon_every_vertex() {
    let f = decagon_from_vertex(&ptq((-5, 4), (3, 2))).unwrap();
    let x = TranslateSet::lattice(f.lattice.clone());
    for v in f.polygon.vertices() {
        let w = wheels_at(&f.polygon, &x, v).unwrap();
        assert_eq!((w.phi, w.varphi, w.ell, w.kappa), (2, 3, 0, 1), "at {v}");
    }
}

#[test]
fn lattice_octagon_vertex_sums() {
    let p = lattice_octagon();
    let x = TranslateSet::lattice(Lattice::integer());
    let t = check_vertex_sums(&p, &x, 7).unwrap();
    assert!(t.all_hold);
    for v in vertex_classes(&p, &x) {
        for c in incident_edge_covers(&p, &x, &v).unwrap() {
            assert!(c.covering_translates >= edge_cover_lower_bound(4));
        }
    }
}

#[test]
fn non_tiling_is_flagged() {
    let f = octagon_type1(&frac(1, 2)).unwrap();
    // a lattice that is not a multiple tiling lattice for this octagon
    let x = TranslateSet::lattice(Lattice::new(pt(3, 0), pt(0, 3)).unwrap());
    let v = f.polygon.vertex(0).clone();
    assert!(matches!(
        wheels_at(&f.polygon, &x, &v),
        Err(LocalError::WheelMatchingFailed | LocalError::KappaNotPositiveInteger { .. })
    ));
    assert_eq!(
        vertex_star(&f.polygon, &x, &ptq((1, 3), (1, 3))),
        Err(LocalError::NotAVertexOfTiling)
    );
}
