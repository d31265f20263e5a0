//! The planar interior-overlap check against exact polygon clipping.

mod common;

use num_traits::Zero;
use proptest::prelude::*;
use simplex_color::complex::{validate, ValidationLevel, Violation};
use simplex_color::geometry::{orientation, Point, Rational, Sign};
use simplex_color::{generate, Complex, GeneratorKind, GeneratorSpec};

type P = (Rational, Rational);

fn cross(o: &P, a: &P, b: &P) -> Rational {
    (&a.0 - &o.0) * (&b.1 - &o.1) - (&a.1 - &o.1) * (&b.0 - &o.0)
}

/// Clips a convex polygon by the left half-plane of the directed edge `a -> b`.
fn clip(poly: &[P], a: &P, b: &P) -> Vec<P> {
    let mut out = Vec::new();
    for i in 0..poly.len() {
        let (p, q) = (&poly[i], &poly[(i + 1) % poly.len()]);
        let (sp, sq) = (cross(a, b, p), cross(a, b, q));
        if sp >= Rational::zero() {
            out.push(p.clone());
        }
        if (sp > Rational::zero() && sq < Rational::zero()) || (sp < Rational::zero() && sq > Rational::zero()) {
            let t = &sp / (&sp - &sq);
            out.push((&p.0 + &t * (&q.0 - &p.0), &p.1 + &t * (&q.1 - &p.1)));
        }
    }
    out
}

fn area2(poly: &[P]) -> Rational {
    let mut s = Rational::zero();
    for i in 0..poly.len() {
        let (p, q) = (&poly[i], &poly[(i + 1) % poly.len()]);
        s += &p.0 * &q.1 - &q.0 * &p.1;
    }
    s
}

fn ccw(tri: [&Point; 3]) -> Vec<P> {
    let mut v: Vec<P> = tri.iter().map(|p| (p.coords()[0].clone(), p.coords()[1].clone())).collect();
    if cross(&v[0], &v[1], &v[2]) < Rational::zero() {
        v.swap(1, 2);
    }
    v
}

fn interiors_meet(t1: [&Point; 3], t2: [&Point; 3]) -> bool {
    let clipper = ccw(t2);
    let mut poly = ccw(t1);
    for i in 0..3 {
        poly = clip(&poly, &clipper[i], &clipper[(i + 1) % 3]);
        if poly.is_empty() {
            return false;
        }
    }
    area2(&poly) > Rational::zero()
}

fn small_point() -> impl Strategy<Value = Point> {
    (-4i64..=4, -4i64..=4).prop_map(|(x, y)| Point::from_ints(&[x, y]))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(400))]

    #[test]
    fn planar_overlap_matches_clipping(
        pts in prop::collection::vec(small_point(), 6),
        shared in 0usize..=2,
    ) {
        let first = vec![0, 1, 2];
        // The second triangle reuses `shared` vertex ids of the first.
        let second: Vec<usize> = (0..shared).chain(3..6 - shared).collect();
        for tri in [&first, &second] {
            let p: Vec<&Point> = tri.iter().map(|&i| &pts[i]).collect();
            prop_assume!(orientation(&p, 2).unwrap() != Sign::Zero);
        }
        let c = Complex::new(2, pts.clone(), vec![first.clone(), second.clone()]).unwrap();
        let reported = validate(&c, ValidationLevel::GeometricStrict)
            .violations
            .iter()
            .any(|v| matches!(v, Violation::InteriorOverlap { .. }));
        let tri = |ids: &[usize]| [&pts[ids[0]], &pts[ids[1]], &pts[ids[2]]];
        prop_assert_eq!(reported, interiors_meet(tri(&first), tri(&second)));
    }
}

#[test]
fn abstract_boundaries_overlap_in_the_plane_and_space() {
    for d in [2, 3] {
        let c = generate(&GeneratorSpec::new(GeneratorKind::BoundaryAbstract, d, 0)).unwrap();
        let r = validate(&c, ValidationLevel::GeometricStrict);
        assert!(r.violations.iter().any(|v| matches!(v, Violation::InteriorOverlap { .. })));
        assert_eq!(r.combinatorial_violations().count(), 0);
    }
}

#[test]
fn tetrahedra_sharing_a_facet_on_one_side_overlap() {
    let base = common::complex(
        3,
        &[&[0, 0, 0], &[4, 0, 0], &[0, 4, 0], &[1, 1, 3], &[1, 1, -3]],
        &[&[0, 1, 2, 3], &[0, 1, 2, 4]],
    );
    assert!(validate(&base, ValidationLevel::GeometricStrict).is_valid());
    let folded = common::complex(
        3,
        &[&[0, 0, 0], &[4, 0, 0], &[0, 4, 0], &[1, 1, 3], &[1, 1, 1]],
        &[&[0, 1, 2, 3], &[0, 1, 2, 4]],
    );
    let r = validate(&folded, ValidationLevel::GeometricStrict);
    assert_eq!(r.violations, vec![Violation::InteriorOverlap { first: 0, second: 1 }]);
}
