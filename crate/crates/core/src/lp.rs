//! Single objectives over the polygon: where a linear form attains its
//! maximum (a vertex or a whole edge), an independent tableau simplex used
//! to cross-check that answer, and the kernel-line projection view of the
//! objective value.

mod simplex;

pub use simplex::simplex_solve;

use crate::error::Error;
use crate::geometry::{angle_of, Angle, Vector2};
use crate::polytope::Polygon;

/// Default tolerance for objective-value comparisons; always used scaled
/// by `‖c‖ * max‖v‖`.
pub const DEFAULT_EPS_VAL: f64 = 1e-9;

/// A nonzero linear objective `f(x) = c1*x1 + c2*x2`.
///
/// Zero forms are rejected at construction: every feasible point maximizes
/// them, so they have no direction and no class in the fan.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LinearForm {
    c1: f64,
    c2: f64,
}

impl LinearForm {
    pub fn new(c1: f64, c2: f64) -> Result<Self, Error> {
        assert!(
            c1.is_finite() && c2.is_finite(),
            "objective coefficients must be finite, got ({c1}, {c2})"
        );
        if c1 == 0.0 && c2 == 0.0 {
            return Err(Error::ZeroForm);
        }
        Ok(Self { c1, c2 })
    }

    /// Unit form pointing along `angle`; never zero.
    pub fn from_angle(angle: Angle) -> Self {
        let u = angle.unit_vector();
        Self { c1: u.x1, c2: u.x2 }
    }

    pub fn c1(self) -> f64 {
        self.c1
    }

    pub fn c2(self) -> f64 {
        self.c2
    }

    pub fn coefficients(self) -> Vector2 {
        Vector2::new(self.c1, self.c2)
    }

    pub fn eval(self, x: Vector2) -> f64 {
        self.c1 * x.x1 + self.c2 * x.x2
    }

    pub fn norm(self) -> f64 {
        self.c1.hypot(self.c2)
    }

    /// Polar angle of the coefficient vector, in `[0, 2π)`.
    pub fn direction_angle(self) -> Angle {
        angle_of(self.coefficients()).expect("form is nonzero by construction")
    }

    /// The zero line of the form, `{x : f(x) = 0}`.
    pub fn kernel_line(self) -> KernelLine {
        KernelLine {
            direction: Vector2::new(-self.c2, self.c1),
        }
    }
}

/// The line `f = 0` through the origin, directed by `(-c2, c1)` — the
/// objective's coefficient vector rotated a quarter turn counterclockwise,
/// so the form increases to the right of the direction of travel.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct KernelLine {
    direction: Vector2,
}

impl KernelLine {
    pub fn direction(self) -> Vector2 {
        self.direction
    }
}

/// Orthogonal projection of `x` onto the kernel line. The residual
/// `x - project_onto_line(x, line)` is parallel to the objective's
/// coefficient vector, and its length is `|f(x)| / ‖c‖`; maximizing a form
/// with nonnegative coefficients over the first quadrant is the same as
/// maximizing the distance to this line.
pub fn project_onto_line(x: Vector2, line: KernelLine) -> Vector2 {
    let u = line.direction.normalized();
    u * x.dot(u)
}

/// Where a form attains its maximum over a polygon.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArgmaxKind {
    /// Unique maximizer at this vertex index.
    Vertex(usize),
    /// The maximum is attained on the whole edge with this index.
    Edge(usize),
}

/// Result of maximizing a form over a polygon's vertex set.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ArgmaxSet {
    pub kind: ArgmaxKind,
    pub optimal_value: f64,
}

/// Maximizes `objective` over the polygon by evaluating every vertex.
/// Vertices within `eps_val * ‖c‖ * max‖v‖` of the best value count as
/// tied; one survivor is a vertex optimum, two adjacent survivors are an
/// edge optimum, anything else reports [`Error::NonAdjacentTie`].
pub fn argmax_enumerate(
    polygon: &Polygon,
    objective: LinearForm,
    eps_val: f64,
) -> Result<ArgmaxSet, Error> {
    assert!(eps_val >= 0.0, "eps_val must be nonnegative");
    let vertices = polygon.vertices();
    debug_assert!(!vertices.is_empty(), "polygons always have a vertex");
    let values: Vec<f64> = vertices.iter().map(|&v| objective.eval(v)).collect();
    let best = values.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let tol = eps_val * objective.norm() * polygon.max_vertex_norm();
    let tied: Vec<usize> = (0..values.len())
        .filter(|&i| values[i] >= best - tol)
        .collect();

    let n = vertices.len();
    let kind = match tied.as_slice() {
        [] => unreachable!("the maximum itself always survives the filter"),
        [i] => ArgmaxKind::Vertex(*i),
        [i, j] => {
            // On a counterclockwise polygon, edge k runs from vertex k to
            // vertex (k+1) % n.
            if (i + 1) % n == *j {
                ArgmaxKind::Edge(*i)
            } else if (j + 1) % n == *i {
                ArgmaxKind::Edge(*j)
            } else {
                return Err(Error::NonAdjacentTie { a: *i, b: *j });
            }
        }
        more => {
            return Err(Error::NonAdjacentTie {
                a: more[0],
                b: more[more.len() - 1],
            })
        }
    };
    Ok(ArgmaxSet {
        kind,
        optimal_value: best,
    })
}
