//! Classify 2D linear objectives over a convex polygonal feasible region
//! `S = {x : Ax <= b, x >= 0}` by where they attain their maximum.
//!
//! Over a bounded polygon every nonzero objective maximizes at a vertex or
//! along an edge, and two objectives are equivalent when their argmax sets
//! coincide. The quotient of all nonzero objective directions by that
//! relation is a normal fan: one open angular cone per vertex (bounded by
//! the outward normals of its two incident edges) and one boundary angle
//! per edge, `I + J` classes in total for a polygon with `I` vertices and
//! `J` edges. Building the fan once answers three kinds of questions
//! without solving further linear programs:
//!
//! - **Argmax lookup**: the class of a direction names its optimal vertex
//!   or edge ([`QuotientSet::class_of`]).
//! - **Sensitivity**: the cone of a vertex is exactly the set of objective
//!   directions that keep it the strict optimum
//!   ([`QuotientSet::sensitivity_interval`]).
//! - **Ideal solutions**: a multiobjective instance admits one point (or
//!   edge) maximizing all `K` objectives simultaneously iff all of them
//!   land in a single class ([`molpp::classify_instance`]).
//!
//! Two independent solvers are kept side by side on purpose: vertex
//! enumeration ([`lp::argmax_enumerate`]) is the semantic ground truth in
//! 2D, and a two-phase tableau simplex ([`lp::simplex_solve`]) cross-checks
//! it. The [`sampling`] module generates random well-conditioned instances
//! for tests and benchmarks.
//!
//! ```
//! use fanlp::polytope::{build_polygon, Halfspace, HalfspaceSystem};
//! use fanlp::fan::build_fan;
//! use fanlp::lp::LinearForm;
//!
//! let system = HalfspaceSystem::with_nonnegativity(vec![
//!     Halfspace::new(0.25, 0.5, 40.0),
//!     Halfspace::new(0.4, 0.2, 40.0),
//!     Halfspace::new(0.0, 0.8, 40.0),
//! ])?;
//! let polygon = build_polygon(&system, 1e-9)?;
//! let fan = build_fan(&polygon)?;
//!
//! // 2*x1 + 3*x2 is maximized at the vertex (80, 40), and stays there for
//! // every objective direction strictly between 26.565° and 63.435°.
//! let class = fan.class_of(LinearForm::new(2.0, 3.0)?);
//! let cone = fan.sensitivity_interval(2)?;
//! assert_eq!(class.id(), 2);
//! assert!((cone.lo().degrees() - 26.565).abs() < 1e-3);
//! assert!((cone.hi().degrees() - 63.435).abs() < 1e-3);
//! # Ok::<(), fanlp::Error>(())
//! ```

pub mod error;
pub mod fan;
pub mod geometry;
pub mod lp;
pub mod molpp;
pub mod polytope;
pub mod sampling;

pub use error::Error;
pub use fan::{build_fan, build_fan_with_eps, ClassKind, EquivalenceClass, QuotientSet};
pub use geometry::{angle_of, cross, Angle, AngularInterval, Vector2};
pub use lp::{
    argmax_enumerate, project_onto_line, simplex_solve, ArgmaxKind, ArgmaxSet, KernelLine,
    LinearForm,
};
pub use molpp::{
    classify_instance, classify_instance_with, verify_ideal, verify_ideal_with,
    ClassificationReport, MolppInstance, ObjectiveAssignment, OptimalTarget, Verdict,
};
pub use polytope::{build_polygon, is_bounded, Edge, Halfspace, HalfspaceSystem, Polygon};

/// The three tolerances the geometric pipeline runs on. Each is relative:
/// geometry and value tolerances are scaled by problem magnitude at the
/// point of use; the angular tolerance is absolute in radians (angles
/// carry no scale).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Tolerances {
    /// Feasibility slack and vertex deduplication, relative to
    /// `max(1, max|a|, max|b|)`.
    pub eps_geom: f64,
    /// Objective-value ties, relative to `‖c‖ * max‖v‖`.
    pub eps_val: f64,
    /// Distance to a face angle below which a direction counts as on the
    /// face, in radians.
    pub eps_angle: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Self {
            eps_geom: polytope::DEFAULT_EPS_GEOM,
            eps_val: lp::DEFAULT_EPS_VAL,
            eps_angle: geometry::DEFAULT_EPS_ANGLE,
        }
    }
}
