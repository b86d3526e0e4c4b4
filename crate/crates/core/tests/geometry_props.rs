use std::f64::consts::PI;

use proptest::prelude::*;
use survnet::geometry::{convex_hull, hull_perimeter_of, Point};

fn points(max: usize) -> impl Strategy<Value = Vec<Point>> {
    prop::collection::vec((-50.0..50.0f64, -50.0..50.0f64), 1..max)
        .prop_map(|v| v.into_iter().map(|(x, y)| Point::new(x, y)).collect())
}

/// Perimeter as the integral of the support function over all directions.
fn cauchy_perimeter(v: &[Point], steps: usize) -> f64 {
    let h = |t: f64| {
        v.iter()
            .map(|p| p.x * t.cos() + p.y * t.sin())
            .fold(f64::MIN, f64::max)
    };
    let dt = 2.0 * PI / steps as f64;
    (0..steps).map(|k| h(k as f64 * dt)).sum::<f64>() * dt
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn hull_is_idempotent(pts in points(40)) {
        let h = convex_hull(&pts).unwrap();
        let again = convex_hull(h.vertices()).unwrap();
        prop_assert_eq!(h.vertices(), again.vertices());
    }

    #[test]
    fn hull_perimeter_is_monotone(pts in points(30), extra in points(10)) {
        let base = hull_perimeter_of(&pts).unwrap();
        let mut all = pts.clone();
        all.extend(extra);
        let grown = hull_perimeter_of(&all).unwrap();
        prop_assert!(grown >= base * (1.0 - 1e-12));
    }

    #[test]
    fn hull_contains_its_inputs(pts in points(30)) {
        let h = convex_hull(&pts).unwrap();
        let v = h.vertices();
        if v.len() >= 3 {
            let tol = 1e-9 * 100.0;
            for p in &pts {
                for i in 0..v.len() {
                    let (a, b) = (v[i], v[(i + 1) % v.len()]);
                    let cross = (b.x - a.x) * (p.y - a.y) - (b.y - a.y) * (p.x - a.x);
                    prop_assert!(cross >= -tol * a.dist(b));
                }
            }
        }
    }

    #[test]
    fn perimeter_matches_support_integral(pts in points(25)) {
        let h = convex_hull(&pts).unwrap();
        let exact = h.perimeter();
        let approx = cauchy_perimeter(h.vertices(), 16384);
        prop_assert!((exact - approx).abs() <= 1e-6 * exact.max(1e-9) + 1e-9);
    }
}

#[test]
fn degenerate_hulls_follow_length_convention() {
    let seg = [Point::new(0.0, 0.0), Point::new(3.0, 4.0), Point::new(1.5, 2.0)];
    assert!((hull_perimeter_of(&seg).unwrap() - 10.0).abs() < 1e-12);
    assert_eq!(hull_perimeter_of(&[Point::new(2.0, 2.0)]).unwrap(), 0.0);
}
