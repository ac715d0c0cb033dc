//! The multiobjective layer: run every objective of an instance through
//! the fan, group objectives by class, and decide whether one feasible
//! point maximizes all of them at once. One polygon and one fan are built
//! per instance regardless of how many objectives it carries; each
//! objective costs a single cone lookup instead of a linear program.

use std::collections::BTreeMap;

use crate::error::Error;
use crate::fan::{build_fan_with_eps, ClassKind, QuotientSet};
use crate::geometry::{Angle, Vector2};
use crate::lp::LinearForm;
use crate::polytope::{build_polygon, HalfspaceSystem};
use crate::Tolerances;

/// A constraint system together with the objectives to maximize over it.
#[derive(Clone, Debug)]
pub struct MolppInstance {
    system: HalfspaceSystem,
    objectives: Vec<LinearForm>,
}

impl MolppInstance {
    pub fn new(system: HalfspaceSystem, objectives: Vec<LinearForm>) -> Result<Self, Error> {
        if objectives.is_empty() {
            return Err(Error::NoObjectives);
        }
        Ok(Self { system, objectives })
    }

    pub fn system(&self) -> &HalfspaceSystem {
        &self.system
    }

    pub fn objectives(&self) -> &[LinearForm] {
        &self.objectives
    }
}

/// Optimal face of a single objective, with coordinates resolved.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum OptimalTarget {
    Vertex {
        index: usize,
        point: Vector2,
    },
    Edge {
        index: usize,
        endpoints: (Vector2, Vector2),
    },
}

/// One objective's position in the fan.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ObjectiveAssignment {
    pub objective_index: usize,
    pub class_id: usize,
    pub angle: Angle,
    pub target: OptimalTarget,
}

/// Outcome of the ideal-solution question. The verdict is about class
/// agreement: it is `IdealVertex`/`IdealFace` exactly when all objectives
/// share one class, i.e. have identical argmax sets.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Verdict {
    /// Every objective is maximized at this single vertex.
    IdealVertex { vertex_index: usize, point: Vector2 },
    /// Every objective is a positive multiple of one edge normal, so every
    /// point of that edge maximizes all of them simultaneously.
    IdealFace {
        edge_index: usize,
        endpoints: (Vector2, Vector2),
    },
    /// The objectives' argmax sets differ.
    NoIdeal,
}

/// The full classification of an instance: the fan, each objective's
/// class, the grouping, and the verdict.
#[derive(Clone, Debug)]
pub struct ClassificationReport {
    quotient: QuotientSet,
    per_objective: Vec<ObjectiveAssignment>,
    groups: BTreeMap<usize, Vec<usize>>,
    verdict: Verdict,
    tolerances: Tolerances,
}

impl ClassificationReport {
    pub fn quotient(&self) -> &QuotientSet {
        &self.quotient
    }

    pub fn per_objective(&self) -> &[ObjectiveAssignment] {
        &self.per_objective
    }

    /// Objective indices grouped by class id, in class-id order.
    pub fn groups(&self) -> &BTreeMap<usize, Vec<usize>> {
        &self.groups
    }

    pub fn verdict(&self) -> Verdict {
        self.verdict
    }

    pub fn tolerances(&self) -> Tolerances {
        self.tolerances
    }
}

/// Classifies with the default tolerances.
pub fn classify_instance(instance: &MolppInstance) -> Result<ClassificationReport, Error> {
    classify_instance_with(instance, Tolerances::default())
}

/// Builds the polygon and fan once, then classifies each objective by cone
/// lookup. The verdict is `IdealVertex`/`IdealFace` iff all objectives
/// land in a single class.
pub fn classify_instance_with(
    instance: &MolppInstance,
    tolerances: Tolerances,
) -> Result<ClassificationReport, Error> {
    let polygon = build_polygon(instance.system(), tolerances.eps_geom)?;
    let quotient = build_fan_with_eps(&polygon, tolerances.eps_angle)?;

    let mut per_objective = Vec::with_capacity(instance.objectives().len());
    let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for (k, &objective) in instance.objectives().iter().enumerate() {
        let class = quotient.class_of(objective);
        let target = resolve_target(&quotient, class.kind());
        per_objective.push(ObjectiveAssignment {
            objective_index: k,
            class_id: class.id(),
            angle: objective.direction_angle(),
            target,
        });
        groups.entry(class.id()).or_default().push(k);
    }

    let verdict = if groups.len() == 1 {
        match per_objective[0].target {
            OptimalTarget::Vertex { index, point } => Verdict::IdealVertex {
                vertex_index: index,
                point,
            },
            OptimalTarget::Edge { index, endpoints } => Verdict::IdealFace {
                edge_index: index,
                endpoints,
            },
        }
    } else {
        Verdict::NoIdeal
    };

    Ok(ClassificationReport {
        quotient,
        per_objective,
        groups,
        verdict,
        tolerances,
    })
}

fn resolve_target(quotient: &QuotientSet, kind: ClassKind) -> OptimalTarget {
    let polygon = quotient.polygon();
    match kind {
        ClassKind::Corner { vertex_index, .. } => OptimalTarget::Vertex {
            index: vertex_index,
            point: polygon.vertices()[vertex_index],
        },
        ClassKind::Face { edge_index, .. } => OptimalTarget::Edge {
            index: edge_index,
            endpoints: polygon
                .edge_endpoints(edge_index)
                .expect("class indices come from the polygon"),
        },
    }
}

/// Checks the ideal-solution definition directly with the default
/// tolerances.
pub fn verify_ideal(instance: &MolppInstance, candidate: Vector2) -> Result<bool, Error> {
    verify_ideal_with(instance, candidate, Tolerances::default())
}

/// True iff `candidate` maximizes every objective of the instance: for
/// each objective, its value at the candidate is within tolerance of the
/// best vertex value. Comparing against vertices suffices by linearity.
/// This check is independent of the fan and serves as its cross-check.
pub fn verify_ideal_with(
    instance: &MolppInstance,
    candidate: Vector2,
    tolerances: Tolerances,
) -> Result<bool, Error> {
    let system = instance.system();
    if !system.admits(candidate, tolerances.eps_geom * system.scale()) {
        return Err(Error::InfeasibleCandidate);
    }
    let polygon = build_polygon(system, tolerances.eps_geom)?;
    let vmax = polygon.max_vertex_norm();
    for objective in instance.objectives() {
        let best = polygon
            .vertices()
            .iter()
            .map(|&v| objective.eval(v))
            .fold(f64::NEG_INFINITY, f64::max);
        let tol = tolerances.eps_val * objective.norm() * vmax;
        if objective.eval(candidate) < best - tol {
            return Ok(false);
        }
    }
    Ok(true)
}
