//! Plane primitives: vectors, normalized angles, and open angular intervals
//! with wraparound. Everything downstream (polygon normals, fan cones,
//! objective directions) reduces to these three types.

use std::f64::consts::TAU;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::Error;

/// Default tolerance for angular comparisons, in radians.
pub const DEFAULT_EPS_ANGLE: f64 = 1e-9;

/// A point or direction in the plane.
#[derive(Clone, Copy, Debug, PartialEq, Default)]
pub struct Vector2 {
    pub x1: f64,
    pub x2: f64,
}

impl Vector2 {
    /// Panics on NaN or infinite components; finiteness is a crate-wide
    /// precondition and is validated at the input boundary.
    pub fn new(x1: f64, x2: f64) -> Self {
        assert!(
            x1.is_finite() && x2.is_finite(),
            "vector components must be finite, got ({x1}, {x2})"
        );
        Self { x1, x2 }
    }

    pub fn dot(self, other: Self) -> f64 {
        self.x1 * other.x1 + self.x2 * other.x2
    }

    pub fn norm(self) -> f64 {
        self.x1.hypot(self.x2)
    }

    /// Exact test; tolerance-aware callers compare `norm` themselves.
    pub fn is_zero(self) -> bool {
        self.x1 == 0.0 && self.x2 == 0.0
    }

    /// Counterclockwise quarter turn.
    pub fn perp(self) -> Self {
        Self::new(-self.x2, self.x1)
    }

    /// Panics on the zero vector.
    pub fn normalized(self) -> Self {
        let n = self.norm();
        assert!(n > 0.0, "cannot normalize the zero vector");
        Self::new(self.x1 / n, self.x2 / n)
    }
}

impl Add for Vector2 {
    type Output = Vector2;
    fn add(self, rhs: Vector2) -> Vector2 {
        Vector2::new(self.x1 + rhs.x1, self.x2 + rhs.x2)
    }
}

impl Sub for Vector2 {
    type Output = Vector2;
    fn sub(self, rhs: Vector2) -> Vector2 {
        Vector2::new(self.x1 - rhs.x1, self.x2 - rhs.x2)
    }
}

impl Mul<f64> for Vector2 {
    type Output = Vector2;
    fn mul(self, rhs: f64) -> Vector2 {
        Vector2::new(self.x1 * rhs, self.x2 * rhs)
    }
}

impl Neg for Vector2 {
    type Output = Vector2;
    fn neg(self) -> Vector2 {
        Vector2::new(-self.x1, -self.x2)
    }
}

/// 2D cross product `u.x1 * v.x2 - u.x2 * v.x1`: positive when `v` lies
/// counterclockwise of `u`.
pub fn cross(u: Vector2, v: Vector2) -> f64 {
    u.x1 * v.x2 - u.x2 * v.x1
}

/// Polar angle of a nonzero vector, normalized to `[0, 2π)`.
pub fn angle_of(v: Vector2) -> Result<Angle, Error> {
    if v.is_zero() {
        return Err(Error::ZeroVector);
    }
    Ok(Angle::from_radians(v.x2.atan2(v.x1)))
}

/// An angle reduced to the half-open interval `[0, 2π)`.
///
/// Keeping every stored angle in one canonical window makes interval and
/// equality logic purely arithmetic; only `ccw_to` has to reason about
/// wraparound.
#[derive(Clone, Copy, Debug, PartialEq, PartialOrd)]
pub struct Angle(f64);

impl Angle {
    pub fn from_radians(radians: f64) -> Self {
        assert!(radians.is_finite(), "angle must be finite, got {radians}");
        let mut value = radians.rem_euclid(TAU);
        // rem_euclid of a tiny negative can round up to exactly TAU, and a
        // negative zero survives it; collapse both to canonical zero.
        if !(value > 0.0 && value < TAU) {
            value = 0.0;
        }
        Self(value)
    }

    pub fn from_degrees(degrees: f64) -> Self {
        Self::from_radians(degrees.to_radians())
    }

    pub fn radians(self) -> f64 {
        self.0
    }

    pub fn degrees(self) -> f64 {
        self.0.to_degrees()
    }

    /// Counterclockwise sweep from `self` to `other`, in `[0, 2π)`.
    pub fn ccw_to(self, other: Angle) -> f64 {
        let d = (other.0 - self.0).rem_euclid(TAU);
        if d >= TAU {
            0.0
        } else {
            d
        }
    }

    /// Arc distance along the shorter side, in `[0, π]`.
    pub fn separation(self, other: Angle) -> f64 {
        let d = self.ccw_to(other);
        d.min(TAU - d)
    }

    pub fn unit_vector(self) -> Vector2 {
        Vector2::new(self.0.cos(), self.0.sin())
    }
}

/// Open arc swept counterclockwise from `lo` to `hi`, endpoints excluded.
/// The arc may pass through zero (e.g. `lo = 3π/2`, `hi = π/4`).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct AngularInterval {
    lo: Angle,
    hi: Angle,
}

impl AngularInterval {
    /// Panics when `lo == hi`: neither the empty arc nor the full circle is
    /// representable, and no caller needs them.
    pub fn open(lo: Angle, hi: Angle) -> Self {
        assert!(
            lo != hi,
            "degenerate angular interval at {} rad",
            lo.radians()
        );
        Self { lo, hi }
    }

    pub fn lo(self) -> Angle {
        self.lo
    }

    pub fn hi(self) -> Angle {
        self.hi
    }

    /// Arc length, in `(0, 2π)`.
    pub fn width(self) -> f64 {
        self.lo.ccw_to(self.hi)
    }

    /// Strict membership with the default endpoint tolerance.
    pub fn contains(self, angle: Angle) -> bool {
        self.contains_with_margin(angle, DEFAULT_EPS_ANGLE)
    }

    /// Strict membership; angles within `eps` of either endpoint count as
    /// sitting on the endpoint and are excluded.
    pub fn contains_with_margin(self, angle: Angle, eps: f64) -> bool {
        let t = self.lo.ccw_to(angle);
        t > eps && t < self.width() - eps
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn angle_normalization() {
        assert_eq!(Angle::from_radians(-std::f64::consts::FRAC_PI_2).radians(), 3.0 * std::f64::consts::FRAC_PI_2);
        assert_eq!(Angle::from_radians(5.0 * std::f64::consts::PI).radians(), std::f64::consts::PI);
        assert_eq!(Angle::from_radians(TAU).radians(), 0.0);
        assert_eq!(Angle::from_radians(0.0).radians(), 0.0);
        // A negative angle far below zero still lands in [0, 2π).
        let a = Angle::from_radians(-7.0 * TAU - 1.0);
        assert!(a.radians() >= 0.0 && a.radians() < TAU);
        // Tiny negative inputs must not normalize to exactly 2π.
        let b = Angle::from_radians(-1e-300);
        assert!(b.radians() < TAU);
        // Negative zero collapses to positive zero.
        assert!(Angle::from_radians(-0.0).radians().is_sign_positive());
    }

    #[test]
    fn angle_of_fixed_directions() {
        assert_eq!(angle_of(Vector2::new(2.0, 1.0)).unwrap().radians(), 0.4636476090008061);
        assert_eq!(angle_of(Vector2::new(1.0, 2.0)).unwrap().radians(), 1.1071487177940904);
        assert_eq!(angle_of(Vector2::new(2.0, 3.0)).unwrap().radians(), 0.982793723247329);
        assert_eq!(angle_of(Vector2::new(0.0, -1.0)).unwrap().radians(), 4.71238898038469);
        assert_eq!(angle_of(Vector2::new(1.0, 0.0)).unwrap().radians(), 0.0);
        assert_eq!(angle_of(Vector2::new(-1.0, 0.0)).unwrap().radians(), std::f64::consts::PI);
    }

    #[test]
    fn angle_of_degree_values() {
        let a = angle_of(Vector2::new(2.0, 1.0)).unwrap().degrees();
        assert!((a - 26.56505117707799).abs() < 1e-12);
        let b = angle_of(Vector2::new(1.0, 2.0)).unwrap().degrees();
        assert!((b - 63.43494882292201).abs() < 1e-12);
        let c = angle_of(Vector2::new(3.0, 4.0)).unwrap().degrees();
        assert!((c - 53.13010235415598).abs() < 1e-12);
    }

    #[test]
    fn angle_of_zero_vector_fails() {
        assert_eq!(angle_of(Vector2::new(0.0, 0.0)), Err(Error::ZeroVector));
    }

    #[test]
    fn angle_scaling_invariance() {
        let v = Vector2::new(-3.0, 7.0);
        let a = angle_of(v).unwrap();
        for s in [1e-6, 0.5, 2.0, 1e6] {
            let b = angle_of(v * s).unwrap();
            assert!(a.separation(b) < 1e-12, "scale {s}");
        }
    }

    #[test]
    fn cross_orientation_and_antisymmetry() {
        let u = Vector2::new(-20.0, 10.0);
        let v = Vector2::new(-20.0, 40.0);
        assert_eq!(cross(u, v), -600.0);
        assert_eq!(cross(v, u), 600.0);
        assert_eq!(cross(u, u), 0.0);
        // Counterclockwise of (1,0) is (0,1).
        assert!(cross(Vector2::new(1.0, 0.0), Vector2::new(0.0, 1.0)) > 0.0);
    }

    #[test]
    fn perp_is_ccw_quarter_turn() {
        let v = Vector2::new(3.0, -2.0);
        let p = v.perp();
        assert_eq!(p, Vector2::new(2.0, 3.0));
        assert_eq!(v.dot(p), 0.0);
        assert!(cross(v, p) > 0.0);
    }

    #[test]
    fn ccw_to_wraps() {
        let a = Angle::from_degrees(350.0);
        let b = Angle::from_degrees(10.0);
        assert!((a.ccw_to(b).to_degrees() - 20.0).abs() < 1e-12);
        assert!((b.ccw_to(a).to_degrees() - 340.0).abs() < 1e-12);
        assert_eq!(a.ccw_to(a), 0.0);
        assert!((a.separation(b).to_degrees() - 20.0).abs() < 1e-12);
    }

    #[test]
    fn interval_membership_plain() {
        let i = AngularInterval::open(Angle::from_degrees(30.0), Angle::from_degrees(120.0));
        assert!((i.width().to_degrees() - 90.0).abs() < 1e-12);
        assert!(i.contains(Angle::from_degrees(31.0)));
        assert!(i.contains(Angle::from_degrees(119.0)));
        assert!(!i.contains(Angle::from_degrees(30.0)));
        assert!(!i.contains(Angle::from_degrees(120.0)));
        assert!(!i.contains(Angle::from_degrees(150.0)));
        assert!(!i.contains(Angle::from_degrees(0.0)));
    }

    #[test]
    fn interval_membership_wraparound() {
        // Arc from 270° through 0° to 45°.
        let i = AngularInterval::open(Angle::from_degrees(270.0), Angle::from_degrees(45.0));
        assert!((i.width().to_degrees() - 135.0).abs() < 1e-12);
        assert!(i.contains(Angle::from_degrees(300.0)));
        assert!(i.contains(Angle::from_degrees(0.0)));
        assert!(i.contains(Angle::from_degrees(44.0)));
        assert!(!i.contains(Angle::from_degrees(45.0)));
        assert!(!i.contains(Angle::from_degrees(270.0)));
        assert!(!i.contains(Angle::from_degrees(100.0)));
    }

    #[test]
    fn interval_margin_excludes_near_endpoints() {
        let i = AngularInterval::open(Angle::from_radians(1.0), Angle::from_radians(2.0));
        let eps = 1e-9;
        assert!(!i.contains_with_margin(Angle::from_radians(1.0 + 0.4e-9), eps));
        assert!(!i.contains_with_margin(Angle::from_radians(2.0 - 0.4e-9), eps));
        assert!(i.contains_with_margin(Angle::from_radians(1.0 + 1e-6), eps));
        // Just below lo on the circle is outside, not wrapped inside.
        assert!(!i.contains_with_margin(Angle::from_radians(1.0 - 0.4e-9), eps));
    }

    #[test]
    #[should_panic(expected = "degenerate angular interval")]
    fn interval_rejects_equal_endpoints() {
        let a = Angle::from_radians(1.0);
        let _ = AngularInterval::open(a, a);
    }
}
