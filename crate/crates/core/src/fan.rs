//! The quotient of nonzero objective directions by shared argmax over a
//! fixed polygon, laid out as a normal fan. A direction strictly between
//! the outward-normal angles of a vertex's two incident edges maximizes at
//! exactly that vertex; a direction equal to an edge's normal angle
//! maximizes on that whole edge. Corner cones and face angles therefore
//! tile the circle, and classifying a form is a sorted-angle lookup rather
//! than a linear program.

use crate::error::Error;
use crate::geometry::{Angle, AngularInterval, DEFAULT_EPS_ANGLE};
use crate::lp::LinearForm;
use crate::polytope::Polygon;

/// How a class maximizes: at a single vertex or along a whole edge.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum ClassKind {
    /// Directions whose argmax is exactly this vertex: the open cone from
    /// the incoming edge's normal angle to the outgoing edge's.
    Corner {
        vertex_index: usize,
        cone: AngularInterval,
    },
    /// The single direction (up to positive scaling) whose argmax is this
    /// whole edge: its outward normal angle.
    Face {
        edge_index: usize,
        normal_angle: Angle,
    },
}

/// One argmax-equivalence class of objective directions.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct EquivalenceClass {
    id: usize,
    kind: ClassKind,
}

impl EquivalenceClass {
    /// Stable id: corners take `0..I` in vertex order, faces `I..I+J` in
    /// edge order, so reports are reproducible.
    pub fn id(&self) -> usize {
        self.id
    }

    pub fn kind(&self) -> ClassKind {
        self.kind
    }
}

/// The complete fan of a polygon: `I` corner classes plus `J` face
/// classes (`J = I` for a full-dimensional polygon).
#[derive(Clone, Debug)]
pub struct QuotientSet {
    polygon: Polygon,
    classes: Vec<EquivalenceClass>,
    /// Face normal angles in increasing order, each with its edge index;
    /// the lookup structure for `class_of`.
    boundaries: Vec<(f64, usize)>,
    eps_angle: f64,
}

/// Builds the fan with the default angular tolerance.
pub fn build_fan(polygon: &Polygon) -> Result<QuotientSet, Error> {
    build_fan_with_eps(polygon, DEFAULT_EPS_ANGLE)
}

/// Builds the fan; directions within `eps_angle` of an edge's normal angle
/// classify as that edge's face class.
///
/// Degenerate regions (fewer than three vertices) have no two-dimensional
/// normal fan and are rejected.
pub fn build_fan_with_eps(polygon: &Polygon, eps_angle: f64) -> Result<QuotientSet, Error> {
    assert!(eps_angle >= 0.0, "eps_angle must be nonnegative");
    let n = polygon.vertex_count();
    if n < 3 {
        return Err(Error::NotAPolygon { vertices: n });
    }

    let mut classes = Vec::with_capacity(2 * n);
    for v in 0..n {
        let (incoming, outgoing) = polygon
            .incident_edges(v)
            .expect("vertex index is in range");
        let cone = AngularInterval::open(incoming.normal_angle, outgoing.normal_angle);
        // The cone width is the exterior angle at the corner, which is
        // strictly between 0 and π for a strict convex corner; the hull
        // already removed straight (collinear) corners.
        debug_assert!(cone.width() < std::f64::consts::PI);
        classes.push(EquivalenceClass {
            id: v,
            kind: ClassKind::Corner {
                vertex_index: v,
                cone,
            },
        });
    }
    for (e, edge) in polygon.edges().iter().enumerate() {
        classes.push(EquivalenceClass {
            id: n + e,
            kind: ClassKind::Face {
                edge_index: e,
                normal_angle: edge.normal_angle,
            },
        });
    }

    let mut boundaries: Vec<(f64, usize)> = polygon
        .edges()
        .iter()
        .enumerate()
        .map(|(e, edge)| (edge.normal_angle.radians(), e))
        .collect();
    boundaries.sort_by(|a, b| a.0.partial_cmp(&b.0).expect("angles are finite"));

    Ok(QuotientSet {
        polygon: polygon.clone(),
        classes,
        boundaries,
        eps_angle,
    })
}

impl QuotientSet {
    pub fn polygon(&self) -> &Polygon {
        &self.polygon
    }

    /// All classes, indexed by id: corners first, then faces.
    pub fn classes(&self) -> &[EquivalenceClass] {
        &self.classes
    }

    pub fn class_by_id(&self, id: usize) -> Option<&EquivalenceClass> {
        self.classes.get(id)
    }

    pub fn corner_classes(&self) -> &[EquivalenceClass] {
        &self.classes[..self.polygon.vertex_count()]
    }

    pub fn face_classes(&self) -> &[EquivalenceClass] {
        &self.classes[self.polygon.vertex_count()..]
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn eps_angle(&self) -> f64 {
        self.eps_angle
    }

    /// The class of a nonzero form; positive rescaling cannot change it.
    pub fn class_of(&self, objective: LinearForm) -> &EquivalenceClass {
        self.class_of_angle(objective.direction_angle())
    }

    /// The class of the direction `angle`: the face class of the nearest
    /// edge normal when within `eps_angle` of one, otherwise the corner
    /// cone strictly containing the angle. Every angle lands in exactly
    /// one class.
    pub fn class_of_angle(&self, angle: Angle) -> &EquivalenceClass {
        let n = self.polygon.vertex_count();
        let len = self.boundaries.len();
        let a = angle.radians();
        // The two circular neighbors of `a` in the sorted boundary list:
        // the successor (first angle >= a, wrapping) and the predecessor.
        let k = self.boundaries.partition_point(|&(b, _)| b < a);
        let successor = k % len;
        let predecessor = (k + len - 1) % len;
        for cand in [successor, predecessor] {
            let (b, e) = self.boundaries[cand];
            if Angle::from_radians(b).separation(angle) <= self.eps_angle {
                return &self.classes[n + e];
            }
        }
        // Strictly between two face angles: the predecessor's edge ends at
        // vertex (edge + 1) % n, whose cone starts at that face angle.
        let (_, edge) = self.boundaries[predecessor];
        let vertex = (edge + 1) % n;
        let class = &self.classes[vertex];
        debug_assert!(matches!(
            class.kind,
            ClassKind::Corner { cone, .. } if cone.contains_with_margin(angle, 0.0)
        ));
        class
    }

    /// The open cone of directions for which the vertex stays the strict
    /// optimum: equivalently, all `c` with `⟨c, next − v⟩ < 0` and
    /// `⟨c, v − prev⟩ > 0` for the vertex's boundary neighbors.
    pub fn sensitivity_interval(&self, vertex_index: usize) -> Result<AngularInterval, Error> {
        let n = self.polygon.vertex_count();
        if vertex_index >= n {
            return Err(Error::IndexOutOfRange {
                index: vertex_index,
                len: n,
            });
        }
        match self.classes[vertex_index].kind {
            ClassKind::Corner { cone, .. } => Ok(cone),
            ClassKind::Face { .. } => unreachable!("ids below I are corner classes"),
        }
    }
}
