use num_rational::BigRational;
use num_traits::{FromPrimitive, Signed, Zero};
use proptest::prelude::*;
use strata_core::{circumcircle, in_circle, orient, Point, Sign};

fn q(x: f64) -> BigRational {
    BigRational::from_f64(x).unwrap()
}

fn sign(v: BigRational) -> Sign {
    if v.is_zero() {
        Sign::Zero
    } else if v.is_positive() {
        Sign::Positive
    } else {
        Sign::Negative
    }
}

fn exact_orient(a: Point, b: Point, c: Point) -> Sign {
    let (ax, ay, bx, by, cx, cy) = (q(a.x), q(a.y), q(b.x), q(b.y), q(c.x), q(c.y));
    sign((bx - &ax) * (cy - &ay) - (by - ay) * (cx - ax))
}

fn exact_in_circle(a: Point, b: Point, c: Point, d: Point) -> Sign {
    let row = |p: Point| {
        let (x, y) = (q(p.x) - q(d.x), q(p.y) - q(d.y));
        let w = &x * &x + &y * &y;
        (x, y, w)
    };
    let (ax, ay, aw) = row(a);
    let (bx, by, bw) = row(b);
    let (cx, cy, cw) = row(c);
    let det = &ax * (&by * &cw - &bw * &cy) - &ay * (&bx * &cw - &bw * &cx) + &aw * (&bx * &cy - &by * &cx);
    sign(det)
}

fn coord() -> impl Strategy<Value = f64> {
    prop_oneof![
        -1e3..1e3f64,
        (-50i32..50).prop_map(f64::from),
        (-8i32..8).prop_map(|k| 0.1 * f64::from(k)),
    ]
}

fn point() -> impl Strategy<Value = Point> {
    (coord(), coord()).prop_map(|(x, y)| Point::new(x, y))
}

/// Points on a small integer lattice, so affine images stay exact.
fn lattice() -> impl Strategy<Value = Point> {
    (-20i32..20, -20i32..20).prop_map(|(x, y)| Point::new(f64::from(x), f64::from(y)))
}

/// Reorders a triple counterclockwise; collinear triples are left as they are.
fn ccw(a: Point, b: Point, c: Point) -> (Point, Point) {
    match exact_orient(a, b, c) {
        Sign::Negative => (c, b),
        _ => (b, c),
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 2000, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn orient_matches_rational(a in point(), b in point(), c in point()) {
        prop_assert_eq!(orient(a, b, c), exact_orient(a, b, c));
    }

    #[test]
    fn in_circle_matches_rational(a in point(), b in point(), c in point(), d in point()) {
        let (b, c) = ccw(a, b, c);
        prop_assume!(exact_orient(a, b, c) == Sign::Positive);
        prop_assert_eq!(in_circle(a, b, c, d).unwrap(), exact_in_circle(a, b, c, d));
    }

    #[test]
    fn nearly_collinear_orient(a in point(), b in point(), t in 0.0..1.0f64, k in -3i32..=3) {
        // c sits on segment ab up to a few ulps.
        let c = Point::new(a.x + t * (b.x - a.x), a.y + t * (b.y - a.y));
        let c = Point::new(c.x + f64::from(k) * f64::EPSILON * c.x.abs().max(1.0), c.y);
        prop_assert_eq!(orient(a, b, c), exact_orient(a, b, c));
    }

    #[test]
    fn in_circle_cyclic_invariance(a in point(), b in point(), c in point(), d in point()) {
        let (b, c) = ccw(a, b, c);
        prop_assume!(exact_orient(a, b, c) == Sign::Positive);
        let s = in_circle(a, b, c, d).unwrap();
        prop_assert_eq!(in_circle(b, c, a, d).unwrap(), s);
        prop_assert_eq!(in_circle(c, a, b, d).unwrap(), s);
    }

    #[test]
    fn affine_invariance(
        a in lattice(), b in lattice(), c in lattice(), d in lattice(),
        s in 1u32..64, tx in -1000i32..1000, ty in -1000i32..1000,
    ) {
        let f = |p: Point| Point::new(f64::from(s) * p.x + f64::from(tx), f64::from(s) * p.y + f64::from(ty));
        prop_assert_eq!(orient(f(a), f(b), f(c)), orient(a, b, c));
        if orient(a, b, c) == Sign::Positive {
            prop_assert_eq!(in_circle(f(a), f(b), f(c), f(d)).unwrap(), in_circle(a, b, c, d).unwrap());
        }
    }

    #[test]
    fn circumcircle_is_equidistant(a in point(), b in point(), c in point()) {
        let area2 = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
        let scale = a.dist(&b).max(b.dist(&c)).max(a.dist(&c));
        prop_assume!(area2.abs() > 1e-3 * scale * scale);
        let circle = circumcircle(a, b, c).unwrap();
        for p in [a, b, c] {
            let r = circle.center.dist(&p);
            prop_assert!((r - circle.radius).abs() <= 1e-9 * circle.radius, "{} vs {}", r, circle.radius);
        }
    }
}

#[test]
fn rational_oracle_sanity() {
    let p = |x: f64, y: f64| Point::new(x, y);
    assert_eq!(exact_orient(p(0., 0.), p(1., 0.), p(0., 1.)), Sign::Positive);
    assert_eq!(exact_in_circle(p(0., 0.), p(2., 0.), p(0., 2.), p(2., 2.)), Sign::Zero);
    assert_eq!(
        exact_in_circle(p(0., 0.), p(2., 0.), p(0., 2.), p(1., 1.)),
        Sign::Positive
    );
}
