//! Random problem generators for tests and benchmarks: polygons in strictly
//! convex position with well-separated vertices, the constraint systems
//! whose feasible regions they are, and random objective directions.

use std::f64::consts::TAU;

use rand::Rng;

use crate::geometry::{Angle, Vector2};
use crate::lp::LinearForm;
use crate::polytope::{Halfspace, HalfspaceSystem};

/// `n >= 3` points in counterclockwise order on a circle, with irregular
/// but well-separated polar angles (consecutive gaps within a 3:1 ratio of
/// each other), so the points are in strictly convex position and the
/// resulting polygon is numerically friendly.
pub fn convex_position_points<R: Rng>(
    rng: &mut R,
    n: usize,
    center: Vector2,
    radius: f64,
) -> Vec<Vector2> {
    assert!(n >= 3, "a polygon needs at least 3 vertices");
    assert!(radius > 0.0, "radius must be positive");
    let gaps: Vec<f64> = (0..n).map(|_| rng.gen_range(0.5..1.5)).collect();
    let total: f64 = gaps.iter().sum();
    let offset = rng.gen_range(0.0..TAU);
    let mut points = Vec::with_capacity(n);
    let mut acc = 0.0;
    for gap in gaps {
        let theta = offset + acc / total * TAU;
        points.push(center + Vector2::new(theta.cos(), theta.sin()) * radius);
        acc += gap;
    }
    points
}

/// The constraint system whose feasible region is exactly the given
/// counterclockwise convex polygon: one row per edge, `a` the outward unit
/// normal and `b = a · tail`, with no implicit nonnegativity. Unit normals
/// keep the system's magnitude (and with it every scaled tolerance) close
/// to the polygon's own size.
pub fn system_from_ccw_points(points: &[Vector2]) -> HalfspaceSystem {
    assert!(points.len() >= 3);
    let rows: Vec<Halfspace> = (0..points.len())
        .map(|i| {
            let tail = points[i];
            let head = points[(i + 1) % points.len()];
            let e = head - tail;
            let a = Vector2::new(e.x2, -e.x1).normalized(); // outward for ccw order
            Halfspace::new(a.x1, a.x2, a.dot(tail))
        })
        .collect();
    HalfspaceSystem::new(rows, false).expect("edge normals of a polygon are nonzero")
}

/// A bounded system whose feasible polygon has exactly `n` vertices and
/// sits strictly inside the open first quadrant (so nonnegative objectives
/// behave as over `x >= 0`).
pub fn random_polygon_system<R: Rng>(rng: &mut R, n: usize) -> HalfspaceSystem {
    let radius = rng.gen_range(1.0..10.0);
    let cx = radius * 1.5 + rng.gen_range(0.0..radius);
    let cy = radius * 1.5 + rng.gen_range(0.0..radius);
    let points = convex_position_points(rng, n, Vector2::new(cx, cy), radius);
    system_from_ccw_points(&points)
}

/// A uniformly random direction as a unit-norm form.
pub fn random_direction<R: Rng>(rng: &mut R) -> LinearForm {
    LinearForm::from_angle(Angle::from_radians(rng.gen_range(0.0..TAU)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::cross;
    use crate::polytope::{build_polygon, is_bounded, DEFAULT_EPS_GEOM};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn points_are_strictly_convex_and_ccw() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for n in 3..=12 {
            let pts = convex_position_points(&mut rng, n, Vector2::new(5.0, 5.0), 2.0);
            assert_eq!(pts.len(), n);
            for i in 0..n {
                let a = pts[i];
                let b = pts[(i + 1) % n];
                let c = pts[(i + 2) % n];
                assert!(cross(b - a, c - b) > 1e-9, "n={n}, corner {i}");
            }
        }
    }

    #[test]
    fn system_reproduces_its_polygon() {
        let mut rng = ChaCha8Rng::seed_from_u64(21);
        for _ in 0..50 {
            let n = rng.gen_range(3..=12);
            let sys = random_polygon_system(&mut rng, n);
            assert!(is_bounded(&sys));
            let poly = build_polygon(&sys, DEFAULT_EPS_GEOM).unwrap();
            assert_eq!(poly.vertex_count(), n, "vertex count survives the round trip");
            // All vertices strictly inside the first quadrant.
            for v in poly.vertices() {
                assert!(v.x1 > 0.0 && v.x2 > 0.0);
            }
        }
    }

    #[test]
    fn directions_are_unit_norm() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..100 {
            let f = random_direction(&mut rng);
            assert!((f.norm() - 1.0).abs() < 1e-12);
        }
    }
}
