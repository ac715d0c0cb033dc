//! Feasible regions `S = {x : Ax <= b, x >= 0}` turned into explicit convex
//! polygons: vertex enumeration over tight constraint pairs, feasibility
//! filtering, counterclockwise ordering, and edge extraction with outward
//! unit normals. Also decides emptiness and boundedness so callers never
//! receive a polygon for a region that is not one.

use crate::error::Error;
use crate::geometry::{angle_of, cross, Angle, Vector2};

/// Default geometric tolerance; always used scaled by the system magnitude.
pub const DEFAULT_EPS_GEOM: f64 = 1e-9;

/// Relative threshold below which two constraint normals count as parallel.
const PARALLEL_TOL: f64 = 1e-12;

/// One constraint row `a1*x1 + a2*x2 <= b`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Halfspace {
    pub a1: f64,
    pub a2: f64,
    pub b: f64,
}

impl Halfspace {
    pub fn new(a1: f64, a2: f64, b: f64) -> Self {
        Self { a1, a2, b }
    }

    pub fn normal(self) -> Vector2 {
        Vector2::new(self.a1, self.a2)
    }

    /// Left-hand side `a · p`.
    pub fn eval(self, p: Vector2) -> f64 {
        self.a1 * p.x1 + self.a2 * p.x2
    }

    /// Whether `p` satisfies the inequality with slack tolerance `tol`.
    pub fn admits(self, p: Vector2, tol: f64) -> bool {
        self.eval(p) <= self.b + tol
    }
}

/// Constraint data defining the feasible region. Nonnegativity of both
/// variables is part of the region definition and is carried as a flag
/// rather than as explicit rows, so user row indices stay stable.
#[derive(Clone, Debug, PartialEq)]
pub struct HalfspaceSystem {
    rows: Vec<Halfspace>,
    include_nonnegativity: bool,
}

impl HalfspaceSystem {
    /// Validates each row: entries must be finite and the coefficient
    /// vector nonzero. A zero-normal row is either vacuous or plainly
    /// infeasible and in both cases almost certainly an input mistake.
    pub fn new(rows: Vec<Halfspace>, include_nonnegativity: bool) -> Result<Self, Error> {
        for (row, r) in rows.iter().enumerate() {
            if !(r.a1.is_finite() && r.a2.is_finite() && r.b.is_finite()) {
                return Err(Error::InvalidHalfspace {
                    row,
                    reason: "non-finite entry",
                });
            }
            if r.a1 == 0.0 && r.a2 == 0.0 {
                return Err(Error::InvalidHalfspace {
                    row,
                    reason: "zero coefficient vector",
                });
            }
        }
        Ok(Self {
            rows,
            include_nonnegativity,
        })
    }

    pub fn with_nonnegativity(rows: Vec<Halfspace>) -> Result<Self, Error> {
        Self::new(rows, true)
    }

    pub fn rows(&self) -> &[Halfspace] {
        &self.rows
    }

    pub fn include_nonnegativity(&self) -> bool {
        self.include_nonnegativity
    }

    /// User rows plus, when enabled, `-x1 <= 0` and `-x2 <= 0`.
    pub fn effective_rows(&self) -> Vec<Halfspace> {
        let mut rows = self.rows.clone();
        if self.include_nonnegativity {
            rows.push(Halfspace::new(-1.0, 0.0, 0.0));
            rows.push(Halfspace::new(0.0, -1.0, 0.0));
        }
        rows
    }

    /// Magnitude of the system, `max(1, max|a|, max|b|)`; every geometric
    /// tolerance in this module is relative to it.
    pub fn scale(&self) -> f64 {
        let mut m = 1.0f64;
        for r in &self.rows {
            m = m.max(r.a1.abs()).max(r.a2.abs()).max(r.b.abs());
        }
        m
    }

    /// Whether `p` satisfies every effective row within `tol`.
    pub fn admits(&self, p: Vector2, tol: f64) -> bool {
        self.effective_rows().iter().all(|r| r.admits(p, tol))
    }
}

/// Directed boundary edge from `tail` to `head` in counterclockwise order,
/// with its outward unit normal. For a counterclockwise polygon the outward
/// normal is the edge direction rotated clockwise by a quarter turn, i.e.
/// `cross(head - tail, outward_normal) < 0`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Edge {
    pub tail_index: usize,
    pub head_index: usize,
    pub outward_normal: Vector2,
    pub normal_angle: Angle,
}

/// A convex polygon: vertices in counterclockwise order starting from the
/// lexicographically smallest, and one edge per consecutive vertex pair.
///
/// Degenerate regions survive as polygons with one vertex (edge-free) or
/// two vertices (a single segment edge); operations that need a
/// full-dimensional polygon reject those explicitly.
#[derive(Clone, Debug, PartialEq)]
pub struct Polygon {
    vertices: Vec<Vector2>,
    edges: Vec<Edge>,
}

impl Polygon {
    pub fn vertices(&self) -> &[Vector2] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertex(&self, index: usize) -> Result<Vector2, Error> {
        self.vertices.get(index).copied().ok_or(Error::IndexOutOfRange {
            index,
            len: self.vertices.len(),
        })
    }

    /// The edges meeting at a vertex, as `(incoming, outgoing)`: the
    /// incoming edge ends there, the outgoing one starts there.
    pub fn incident_edges(&self, vertex_index: usize) -> Result<(&Edge, &Edge), Error> {
        let n = self.vertices.len();
        if n < 3 {
            return Err(Error::NotAPolygon { vertices: n });
        }
        if vertex_index >= n {
            return Err(Error::IndexOutOfRange {
                index: vertex_index,
                len: n,
            });
        }
        let incoming = &self.edges[(vertex_index + n - 1) % n];
        let outgoing = &self.edges[vertex_index];
        Ok((incoming, outgoing))
    }

    /// Largest vertex norm; scales value tolerances downstream.
    pub fn max_vertex_norm(&self) -> f64 {
        self.vertices.iter().map(|v| v.norm()).fold(0.0, f64::max)
    }

    /// Endpoints `(tail, head)` of an edge.
    pub fn edge_endpoints(&self, edge_index: usize) -> Result<(Vector2, Vector2), Error> {
        let e = self.edges.get(edge_index).ok_or(Error::IndexOutOfRange {
            index: edge_index,
            len: self.edges.len(),
        })?;
        Ok((self.vertices[e.tail_index], self.vertices[e.head_index]))
    }
}

/// Whether the feasible region has a nonzero recession direction, i.e. a
/// direction `d != 0` with `a · d <= 0` for every effective row. The
/// recession cone of a halfplane intersection is polyhedral, so if it is
/// nontrivial it contains an extreme ray perpendicular to some row normal;
/// probing the two perpendiculars of every row is therefore exhaustive.
fn has_recession_direction(rows: &[Halfspace]) -> bool {
    if rows.is_empty() {
        return true;
    }
    for r in rows {
        let n = r.normal();
        for d in [n.perp(), -n.perp()] {
            let ok = rows
                .iter()
                .all(|q| q.normal().dot(d) <= PARALLEL_TOL * q.normal().norm() * d.norm());
            if ok {
                return true;
            }
        }
    }
    false
}

/// Whether the region `{x : rows, x >= 0 if enabled}` is bounded. A system
/// with no effective rows is the whole plane, hence unbounded.
pub fn is_bounded(system: &HalfspaceSystem) -> bool {
    !has_recession_direction(&system.effective_rows())
}

/// Intersection point of two constraint boundary lines, or `None` when the
/// normals are (numerically) parallel.
fn line_intersection(p: Halfspace, q: Halfspace) -> Option<Vector2> {
    let det = cross(p.normal(), q.normal());
    if det.abs() <= PARALLEL_TOL * p.normal().norm() * q.normal().norm() {
        return None;
    }
    let x1 = (p.b * q.a2 - q.b * p.a2) / det;
    let x2 = (p.a1 * q.b - q.a1 * p.b) / det;
    if !(x1.is_finite() && x2.is_finite()) {
        return None;
    }
    // Collapse negative zeros so printed coordinates are canonical.
    Some(Vector2::new(x1 + 0.0, x2 + 0.0))
}

/// Convex hull by monotone chain, counterclockwise, starting at the
/// lexicographically smallest point. Points within `eps_cross` of collinear
/// are dropped, so hull vertices are strict corners.
fn convex_hull(mut points: Vec<Vector2>, eps_cross: f64) -> Vec<Vector2> {
    points.sort_by(|p, q| {
        p.x1.partial_cmp(&q.x1)
            .unwrap()
            .then(p.x2.partial_cmp(&q.x2).unwrap())
    });
    if points.len() <= 2 {
        return points;
    }
    let mut hull: Vec<Vector2> = Vec::with_capacity(points.len() * 2);
    // Lower chain, then upper chain over the reversed order.
    for pass in 0..2 {
        let start = hull.len();
        let iter: Box<dyn Iterator<Item = &Vector2>> = if pass == 0 {
            Box::new(points.iter())
        } else {
            Box::new(points.iter().rev())
        };
        for &p in iter {
            while hull.len() >= start + 2 {
                let a = hull[hull.len() - 2];
                let b = hull[hull.len() - 1];
                if cross(b - a, p - b) <= eps_cross {
                    hull.pop();
                } else {
                    break;
                }
            }
            hull.push(p);
        }
        hull.pop(); // chain end repeats as the next chain's start
    }
    hull
}

/// Enumerates the vertices of the feasible region and assembles the
/// polygon. Fails with [`Error::EmptyRegion`] or [`Error::UnboundedRegion`]
/// when the region is not a (possibly degenerate) polytope.
///
/// Candidate vertices are the pairwise intersections of constraint
/// boundary lines, kept when they satisfy every row within
/// `eps_geom * scale` and deduplicated at the same tolerance.
pub fn build_polygon(system: &HalfspaceSystem, eps_geom: f64) -> Result<Polygon, Error> {
    assert!(eps_geom > 0.0, "eps_geom must be positive");
    let rows = system.effective_rows();
    if rows.is_empty() {
        return Err(Error::UnboundedRegion);
    }
    let tol = eps_geom * system.scale();

    let mut candidates: Vec<Vector2> = Vec::new();
    for i in 0..rows.len() {
        for j in (i + 1)..rows.len() {
            let Some(p) = line_intersection(rows[i], rows[j]) else {
                continue;
            };
            if rows.iter().all(|r| r.admits(p, tol)) {
                candidates.push(p);
            }
        }
    }
    // Deduplicate by coordinates; order does not matter yet.
    let mut unique: Vec<Vector2> = Vec::new();
    for p in candidates {
        if !unique.iter().any(|q| (p - *q).norm() <= tol) {
            unique.push(p);
        }
    }

    if unique.is_empty() {
        return Err(diagnose_vertexless(&rows, tol));
    }
    if has_recession_direction(&rows) {
        return Err(Error::UnboundedRegion);
    }

    let coord_max = unique
        .iter()
        .map(|p| p.x1.abs().max(p.x2.abs()))
        .fold(1.0, f64::max);
    let hull = convex_hull(unique, eps_geom * coord_max * coord_max);
    Ok(assemble(hull))
}

/// A region with no candidate vertices is either empty or contains a line.
/// If it contains a line it is invariant along that line, which forces all
/// constraint normals to be mutually parallel; that case reduces to a
/// one-dimensional interval along the common normal.
fn diagnose_vertexless(rows: &[Halfspace], tol: f64) -> Error {
    let n0 = rows[0].normal();
    let all_parallel = rows
        .iter()
        .all(|r| cross(n0, r.normal()).abs() <= PARALLEL_TOL * n0.norm() * r.normal().norm());
    if !all_parallel {
        // Normals span the plane, so a nonempty region would have had a
        // feasible tight pair; none survived, hence empty.
        return Error::EmptyRegion;
    }
    // All constraints read alpha_i * s <= b_i along the unit normal u.
    let u = n0.normalized();
    let mut lo = f64::NEG_INFINITY;
    let mut hi = f64::INFINITY;
    for r in rows {
        let alpha = r.normal().dot(u);
        let bound = r.b / alpha;
        if alpha > 0.0 {
            hi = hi.min(bound);
        } else {
            lo = lo.max(bound);
        }
    }
    if lo <= hi + tol {
        Error::UnboundedRegion
    } else {
        Error::EmptyRegion
    }
}

/// Builds the polygon from hull points already in counterclockwise order.
fn assemble(vertices: Vec<Vector2>) -> Polygon {
    let n = vertices.len();
    let mut edges = Vec::with_capacity(if n >= 3 { n } else { n - 1 });
    let edge_count = match n {
        0 => unreachable!("hull of a nonempty point set is nonempty"),
        1 => 0,
        2 => 1,
        _ => n,
    };
    for i in 0..edge_count {
        let tail = i;
        let head = (i + 1) % n;
        let e = vertices[head] - vertices[tail];
        let outward_normal = Vector2::new(e.x2, -e.x1).normalized();
        let normal_angle = angle_of(outward_normal).expect("unit normal is nonzero");
        edges.push(Edge {
            tail_index: tail,
            head_index: head,
            outward_normal,
            normal_angle,
        });
    }
    Polygon { vertices, edges }
}
