use thiserror::Error;

/// Everything that can go wrong across the crate.
///
/// Geometric degeneracies (empty or unbounded regions, ties the polygon
/// cannot attribute to a single face) are ordinary outcomes of user input,
/// so they are errors rather than panics. Panics are reserved for broken
/// internal invariants.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// The zero vector has no direction angle.
    #[error("zero vector has no direction")]
    ZeroVector,

    /// Objective with both coefficients zero; every feasible point is
    /// optimal for it, so it carries no direction information.
    #[error("objective form is identically zero")]
    ZeroForm,

    /// A constraint row is unusable (zero normal or non-finite entry).
    #[error("constraint row {row} is invalid: {reason}")]
    InvalidHalfspace { row: usize, reason: &'static str },

    /// The constraint system has no feasible point.
    #[error("feasible region is empty")]
    EmptyRegion,

    /// The feasible region is unbounded, so it is not a polygon and optima
    /// need not exist.
    #[error("feasible region is unbounded")]
    UnboundedRegion,

    /// The operation needs a full-dimensional polygon (at least three
    /// vertices); the region collapsed to a segment or a point.
    #[error("region degenerates to {vertices} vertex/vertices; a polygon needs at least 3")]
    NotAPolygon { vertices: usize },

    /// Vertex, edge, or objective index out of range.
    #[error("index {index} out of range for length {len}")]
    IndexOutOfRange { index: usize, len: usize },

    /// An objective ties at vertices that do not share an edge. With exact
    /// arithmetic this cannot happen on a convex polygon; it signals a
    /// value tolerance too coarse for the instance.
    #[error("objective ties at non-adjacent vertices {a} and {b}; value tolerance too coarse")]
    NonAdjacentTie { a: usize, b: usize },

    /// The linear program has no feasible point (simplex phase one ended
    /// with a positive artificial objective).
    #[error("linear program is infeasible")]
    Infeasible,

    /// The linear program's objective increases without bound over the
    /// feasible region.
    #[error("linear program is unbounded")]
    Unbounded,

    /// A point submitted for ideal-solution verification is not feasible.
    #[error("candidate point violates the constraint system")]
    InfeasibleCandidate,

    /// A multiobjective instance needs at least one objective.
    #[error("instance has no objectives")]
    NoObjectives,
}
