//! Deterministic text reports and JSON documents. Text output honors the
//! precision and angle-unit flags; JSON keeps full-precision numbers with
//! angles converted to the requested unit. All indices in both formats are
//! 1-based to match the labels `v1`, `e1`, `c1`, `f1` used throughout.

use std::fmt::Write as _;

use clap::ValueEnum;
use serde::Serialize;

use fanlp::{
    Angle, AngularInterval, ArgmaxKind, ArgmaxSet, ClassKind, ClassificationReport,
    EquivalenceClass, LinearForm, OptimalTarget, Polygon, QuotientSet, Tolerances, Vector2,
    Verdict,
};

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum AngleUnit {
    Deg,
    Rad,
}

#[derive(Clone, Copy)]
pub struct RenderOptions {
    pub unit: AngleUnit,
    pub precision: usize,
}

impl RenderOptions {
    pub fn angle_value(&self, a: Angle) -> f64 {
        match self.unit {
            AngleUnit::Deg => a.degrees(),
            AngleUnit::Rad => a.radians(),
        }
    }

    /// Converts a span (cone width) given in radians.
    pub fn span_value(&self, radians: f64) -> f64 {
        match self.unit {
            AngleUnit::Deg => radians.to_degrees(),
            AngleUnit::Rad => radians,
        }
    }

    pub fn unit_name(&self) -> &'static str {
        match self.unit {
            AngleUnit::Deg => "deg",
            AngleUnit::Rad => "rad",
        }
    }

    pub fn num(&self, x: f64) -> String {
        let x = if x == 0.0 { 0.0 } else { x }; // never print -0
        format!("{x:.prec$}", prec = self.precision)
    }

    pub fn angle(&self, a: Angle) -> String {
        self.num(self.angle_value(a))
    }

    pub fn point(&self, p: Vector2) -> String {
        format!("({}, {})", self.num(p.x1), self.num(p.x2))
    }
}

pub fn vlabel(i: usize) -> String {
    format!("v{}", i + 1)
}

pub fn elabel(i: usize) -> String {
    format!("e{}", i + 1)
}

pub fn clabel(id: usize) -> String {
    format!("c{}", id + 1)
}

pub fn flabel(k: usize) -> String {
    format!("f{}", k + 1)
}

fn scrub(x: f64) -> f64 {
    if x == 0.0 {
        0.0
    } else {
        x
    }
}

fn point_array(p: Vector2) -> [f64; 2] {
    [scrub(p.x1), scrub(p.x2)]
}

// ---------------------------------------------------------------- text ----

pub fn polygon_text(polygon: &Polygon, o: &RenderOptions) -> String {
    let mut s = String::new();
    let _ = writeln!(
        s,
        "polygon: {} vertices, {} edges",
        polygon.vertex_count(),
        polygon.edge_count()
    );
    for (i, v) in polygon.vertices().iter().enumerate() {
        let _ = writeln!(s, "  {} = {}", vlabel(i), o.point(*v));
    }
    if polygon.edge_count() > 0 {
        let _ = writeln!(
            s,
            "edges (tail -> head, outward normal angle in {}):",
            o.unit_name()
        );
        for (i, e) in polygon.edges().iter().enumerate() {
            let _ = writeln!(
                s,
                "  {} = {} -> {}, normal {}",
                elabel(i),
                vlabel(e.tail_index),
                vlabel(e.head_index),
                o.angle(e.normal_angle)
            );
        }
    }
    s
}

fn class_line(class: &EquivalenceClass, o: &RenderOptions) -> String {
    match class.kind() {
        ClassKind::Corner { vertex_index, cone } => format!(
            "  {}: corner {}, cone ({}, {}), width {}\n",
            clabel(class.id()),
            vlabel(vertex_index),
            o.angle(cone.lo()),
            o.angle(cone.hi()),
            o.num(o.span_value(cone.width()))
        ),
        ClassKind::Face { edge_index, normal_angle } => format!(
            "  {}: face {}, angle {}\n",
            clabel(class.id()),
            elabel(edge_index),
            o.angle(normal_angle)
        ),
    }
}

pub fn fan_text(fan: &QuotientSet, o: &RenderOptions) -> String {
    let mut s = polygon_text(fan.polygon(), o);
    let _ = writeln!(s, "classes ({}):", fan.len());
    for class in fan.classes() {
        s.push_str(&class_line(class, o));
    }
    s
}

fn target_text(target: &OptimalTarget, o: &RenderOptions) -> String {
    match target {
        OptimalTarget::Vertex { index, point } => {
            format!("vertex {} = {}", vlabel(*index), o.point(*point))
        }
        OptimalTarget::Edge { index, endpoints } => format!(
            "edge {} = {} -- {}",
            elabel(*index),
            o.point(endpoints.0),
            o.point(endpoints.1)
        ),
    }
}

pub fn verdict_text(verdict: Verdict, o: &RenderOptions) -> String {
    match verdict {
        Verdict::IdealVertex { vertex_index, point } => {
            format!("ideal vertex {} = {}", vlabel(vertex_index), o.point(point))
        }
        Verdict::IdealFace { edge_index, endpoints } => format!(
            "ideal face {} = {} -- {}",
            elabel(edge_index),
            o.point(endpoints.0),
            o.point(endpoints.1)
        ),
        Verdict::NoIdeal => "no ideal solution".to_string(),
    }
}

pub fn classify_text(
    report: &ClassificationReport,
    forms: &[LinearForm],
    o: &RenderOptions,
) -> String {
    let mut s = fan_text(report.quotient(), o);
    let _ = writeln!(s, "objectives ({}):", forms.len());
    for (a, f) in report.per_objective().iter().zip(forms) {
        let _ = writeln!(
            s,
            "  {} = {}, angle {}, class {}, argmax {}",
            flabel(a.objective_index),
            o.point(f.coefficients()),
            o.angle(a.angle),
            clabel(a.class_id),
            target_text(&a.target, o)
        );
    }
    let _ = writeln!(s, "groups:");
    for (class_id, members) in report.groups() {
        let names: Vec<String> = members.iter().map(|k| flabel(*k)).collect();
        let _ = writeln!(s, "  {}: {}", clabel(*class_id), names.join(" "));
    }
    let _ = writeln!(s, "verdict: {}", verdict_text(report.verdict(), o));
    s
}

#[allow(clippy::too_many_arguments)]
pub fn solve_text(
    k: usize,
    form: LinearForm,
    by_enum: &ArgmaxSet,
    polygon: &Polygon,
    simplex_point: Vector2,
    simplex_value: f64,
    agrees: bool,
    o: &RenderOptions,
) -> String {
    let mut s = String::new();
    let _ = writeln!(
        s,
        "objective {} = {}, angle {} {}",
        flabel(k),
        o.point(form.coefficients()),
        o.angle(form.direction_angle()),
        o.unit_name()
    );
    let where_text = match by_enum.kind {
        ArgmaxKind::Vertex(i) => {
            format!("vertex {} = {}", vlabel(i), o.point(polygon.vertices()[i]))
        }
        ArgmaxKind::Edge(e) => {
            let (tail, head) = polygon.edge_endpoints(e).expect("argmax edge exists");
            format!("edge {} = {} -- {}", elabel(e), o.point(tail), o.point(head))
        }
    };
    let _ = writeln!(s, "enumeration: {}, value {}", where_text, o.num(by_enum.optimal_value));
    let _ = writeln!(
        s,
        "simplex: x = {}, value {}",
        o.point(simplex_point),
        o.num(simplex_value)
    );
    let _ = writeln!(s, "agreement: {}", if agrees { "yes" } else { "NO" });
    s
}

pub fn sensitivity_vertex_text(
    vertex_index: usize,
    point: Vector2,
    cone: AngularInterval,
    o: &RenderOptions,
) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "vertex {} = {}", vlabel(vertex_index), o.point(point));
    let _ = writeln!(
        s,
        "cone: ({}, {}) {}, width {}",
        o.angle(cone.lo()),
        o.angle(cone.hi()),
        o.unit_name(),
        o.num(o.span_value(cone.width()))
    );
    s
}

pub fn sensitivity_objective_text(
    k: usize,
    form: LinearForm,
    class: &EquivalenceClass,
    polygon: &Polygon,
    o: &RenderOptions,
) -> String {
    let mut s = String::new();
    let _ = writeln!(
        s,
        "objective {} = {}, angle {} {}",
        flabel(k),
        o.point(form.coefficients()),
        o.angle(form.direction_angle()),
        o.unit_name()
    );
    match class.kind() {
        ClassKind::Corner { vertex_index, cone } => {
            let _ = writeln!(s, "class: {} (corner {})", clabel(class.id()), vlabel(vertex_index));
            s.push_str(&sensitivity_vertex_text(
                vertex_index,
                polygon.vertices()[vertex_index],
                cone,
                o,
            ));
        }
        ClassKind::Face { edge_index, normal_angle } => {
            let (tail, head) = polygon.edge_endpoints(edge_index).expect("face edge exists");
            let _ = writeln!(s, "class: {} (face {})", clabel(class.id()), elabel(edge_index));
            let _ = writeln!(
                s,
                "argmax edge {} = {} -- {}",
                elabel(edge_index),
                o.point(tail),
                o.point(head)
            );
            let _ = writeln!(
                s,
                "cone: degenerate; the argmax stays this edge only at angle {} {}",
                o.angle(normal_angle),
                o.unit_name()
            );
        }
    }
    s
}

// ---------------------------------------------------------------- json ----

#[derive(Serialize)]
pub struct ToleranceDoc {
    eps_geom: f64,
    eps_val: f64,
    eps_angle: f64,
}

impl From<Tolerances> for ToleranceDoc {
    fn from(t: Tolerances) -> Self {
        ToleranceDoc {
            eps_geom: t.eps_geom,
            eps_val: t.eps_val,
            eps_angle: t.eps_angle,
        }
    }
}

#[derive(Serialize)]
pub struct VertexDoc {
    index: usize,
    point: [f64; 2],
}

#[derive(Serialize)]
pub struct EdgeDoc {
    index: usize,
    tail: usize,
    head: usize,
    normal_angle: f64,
}

#[derive(Serialize)]
pub struct PolygonDoc {
    vertices: Vec<VertexDoc>,
    edges: Vec<EdgeDoc>,
}

#[derive(Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ClassDoc {
    Corner {
        id: usize,
        vertex: usize,
        cone_lo: f64,
        cone_hi: f64,
        width: f64,
    },
    Face {
        id: usize,
        edge: usize,
        angle: f64,
    },
}

#[derive(Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum TargetDoc {
    Vertex {
        vertex: usize,
        point: [f64; 2],
    },
    Edge {
        edge: usize,
        endpoints: [[f64; 2]; 2],
    },
}

impl From<&OptimalTarget> for TargetDoc {
    fn from(t: &OptimalTarget) -> Self {
        match t {
            OptimalTarget::Vertex { index, point } => TargetDoc::Vertex {
                vertex: index + 1,
                point: point_array(*point),
            },
            OptimalTarget::Edge { index, endpoints } => TargetDoc::Edge {
                edge: index + 1,
                endpoints: [point_array(endpoints.0), point_array(endpoints.1)],
            },
        }
    }
}

#[derive(Serialize)]
pub struct FormDoc {
    index: usize,
    coefficients: [f64; 2],
    angle: f64,
}

#[derive(Serialize)]
pub struct ObjectiveDoc {
    #[serde(flatten)]
    form: FormDoc,
    class_id: usize,
    argmax: TargetDoc,
}

#[derive(Serialize)]
pub struct GroupDoc {
    class_id: usize,
    objectives: Vec<usize>,
}

#[derive(Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum VerdictDoc {
    IdealVertex {
        vertex: usize,
        point: [f64; 2],
    },
    IdealFace {
        edge: usize,
        endpoints: [[f64; 2]; 2],
    },
    NoIdeal,
}

#[derive(Serialize)]
pub struct ReportDocument {
    version: &'static str,
    angle_unit: &'static str,
    tolerances: ToleranceDoc,
    polygon: PolygonDoc,
    classes: Vec<ClassDoc>,
    #[serde(skip_serializing_if = "Option::is_none")]
    objectives: Option<Vec<ObjectiveDoc>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    groups: Option<Vec<GroupDoc>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    verdict: Option<VerdictDoc>,
}

#[derive(Serialize)]
pub struct SolveSideDoc {
    #[serde(flatten)]
    argmax: TargetDoc,
    value: f64,
}

#[derive(Serialize)]
pub struct SimplexSideDoc {
    point: [f64; 2],
    value: f64,
}

#[derive(Serialize)]
pub struct SolveDocument {
    version: &'static str,
    angle_unit: &'static str,
    tolerances: ToleranceDoc,
    objective: FormDoc,
    enumeration: SolveSideDoc,
    simplex: SimplexSideDoc,
    agreement: bool,
}

#[derive(Serialize)]
pub struct ConeDoc {
    lo: f64,
    hi: f64,
    width: f64,
}

#[derive(Serialize)]
pub struct SensitivityDocument {
    version: &'static str,
    angle_unit: &'static str,
    tolerances: ToleranceDoc,
    #[serde(skip_serializing_if = "Option::is_none")]
    objective: Option<FormDoc>,
    class_id: usize,
    target: TargetDoc,
    #[serde(skip_serializing_if = "Option::is_none")]
    cone: Option<ConeDoc>,
    #[serde(skip_serializing_if = "Option::is_none")]
    face_angle: Option<f64>,
}

fn polygon_doc(polygon: &Polygon, o: &RenderOptions) -> PolygonDoc {
    PolygonDoc {
        vertices: polygon
            .vertices()
            .iter()
            .enumerate()
            .map(|(i, v)| VertexDoc {
                index: i + 1,
                point: point_array(*v),
            })
            .collect(),
        edges: polygon
            .edges()
            .iter()
            .enumerate()
            .map(|(i, e)| EdgeDoc {
                index: i + 1,
                tail: e.tail_index + 1,
                head: e.head_index + 1,
                normal_angle: o.angle_value(e.normal_angle),
            })
            .collect(),
    }
}

fn class_docs(fan: &QuotientSet, o: &RenderOptions) -> Vec<ClassDoc> {
    fan.classes()
        .iter()
        .map(|class| match class.kind() {
            ClassKind::Corner { vertex_index, cone } => ClassDoc::Corner {
                id: class.id() + 1,
                vertex: vertex_index + 1,
                cone_lo: o.angle_value(cone.lo()),
                cone_hi: o.angle_value(cone.hi()),
                width: o.span_value(cone.width()),
            },
            ClassKind::Face { edge_index, normal_angle } => ClassDoc::Face {
                id: class.id() + 1,
                edge: edge_index + 1,
                angle: o.angle_value(normal_angle),
            },
        })
        .collect()
}

fn form_doc(k: usize, form: LinearForm, o: &RenderOptions) -> FormDoc {
    FormDoc {
        index: k + 1,
        coefficients: point_array(form.coefficients()),
        angle: o.angle_value(form.direction_angle()),
    }
}

pub fn fan_document(fan: &QuotientSet, tolerances: Tolerances, o: &RenderOptions) -> ReportDocument {
    ReportDocument {
        version: VERSION,
        angle_unit: o.unit_name(),
        tolerances: tolerances.into(),
        polygon: polygon_doc(fan.polygon(), o),
        classes: class_docs(fan, o),
        objectives: None,
        groups: None,
        verdict: None,
    }
}

pub fn classify_document(
    report: &ClassificationReport,
    forms: &[LinearForm],
    o: &RenderOptions,
) -> ReportDocument {
    let objectives = report
        .per_objective()
        .iter()
        .zip(forms)
        .map(|(a, f)| ObjectiveDoc {
            form: form_doc(a.objective_index, *f, o),
            class_id: a.class_id + 1,
            argmax: (&a.target).into(),
        })
        .collect();
    let groups = report
        .groups()
        .iter()
        .map(|(class_id, members)| GroupDoc {
            class_id: class_id + 1,
            objectives: members.iter().map(|k| k + 1).collect(),
        })
        .collect();
    let verdict = match report.verdict() {
        Verdict::IdealVertex { vertex_index, point } => VerdictDoc::IdealVertex {
            vertex: vertex_index + 1,
            point: point_array(point),
        },
        Verdict::IdealFace { edge_index, endpoints } => VerdictDoc::IdealFace {
            edge: edge_index + 1,
            endpoints: [point_array(endpoints.0), point_array(endpoints.1)],
        },
        Verdict::NoIdeal => VerdictDoc::NoIdeal,
    };
    ReportDocument {
        version: VERSION,
        angle_unit: o.unit_name(),
        tolerances: report.tolerances().into(),
        polygon: polygon_doc(report.quotient().polygon(), o),
        classes: class_docs(report.quotient(), o),
        objectives: Some(objectives),
        groups: Some(groups),
        verdict: Some(verdict),
    }
}

#[allow(clippy::too_many_arguments)]
pub fn solve_document(
    k: usize,
    form: LinearForm,
    by_enum: &ArgmaxSet,
    polygon: &Polygon,
    simplex_point: Vector2,
    simplex_value: f64,
    agrees: bool,
    tolerances: Tolerances,
    o: &RenderOptions,
) -> SolveDocument {
    let argmax = match by_enum.kind {
        ArgmaxKind::Vertex(i) => TargetDoc::Vertex {
            vertex: i + 1,
            point: point_array(polygon.vertices()[i]),
        },
        ArgmaxKind::Edge(e) => {
            let (tail, head) = polygon.edge_endpoints(e).expect("argmax edge exists");
            TargetDoc::Edge {
                edge: e + 1,
                endpoints: [point_array(tail), point_array(head)],
            }
        }
    };
    SolveDocument {
        version: VERSION,
        angle_unit: o.unit_name(),
        tolerances: tolerances.into(),
        objective: form_doc(k, form, o),
        enumeration: SolveSideDoc {
            argmax,
            value: scrub(by_enum.optimal_value),
        },
        simplex: SimplexSideDoc {
            point: point_array(simplex_point),
            value: scrub(simplex_value),
        },
        agreement: agrees,
    }
}

pub fn sensitivity_vertex_document(
    vertex_index: usize,
    point: Vector2,
    cone: AngularInterval,
    tolerances: Tolerances,
    o: &RenderOptions,
) -> SensitivityDocument {
    SensitivityDocument {
        version: VERSION,
        angle_unit: o.unit_name(),
        tolerances: tolerances.into(),
        objective: None,
        class_id: vertex_index + 1,
        target: TargetDoc::Vertex {
            vertex: vertex_index + 1,
            point: point_array(point),
        },
        cone: Some(ConeDoc {
            lo: o.angle_value(cone.lo()),
            hi: o.angle_value(cone.hi()),
            width: o.span_value(cone.width()),
        }),
        face_angle: None,
    }
}

pub fn sensitivity_objective_document(
    k: usize,
    form: LinearForm,
    class: &EquivalenceClass,
    polygon: &Polygon,
    tolerances: Tolerances,
    o: &RenderOptions,
) -> SensitivityDocument {
    let objective = Some(form_doc(k, form, o));
    match class.kind() {
        ClassKind::Corner { vertex_index, cone } => {
            let mut doc = sensitivity_vertex_document(
                vertex_index,
                polygon.vertices()[vertex_index],
                cone,
                tolerances,
                o,
            );
            doc.objective = objective;
            doc.class_id = class.id() + 1;
            doc
        }
        ClassKind::Face { edge_index, normal_angle } => {
            let (tail, head) = polygon.edge_endpoints(edge_index).expect("face edge exists");
            SensitivityDocument {
                version: VERSION,
                angle_unit: o.unit_name(),
                tolerances: tolerances.into(),
                objective,
                class_id: class.id() + 1,
                target: TargetDoc::Edge {
                    edge: edge_index + 1,
                    endpoints: [point_array(tail), point_array(head)],
                },
                cone: None,
                face_angle: Some(o.angle_value(normal_angle)),
            }
        }
    }
}

pub fn to_json<T: Serialize>(doc: &T) -> String {
    let mut s = serde_json::to_string_pretty(doc).expect("report documents serialize");
    s.push('\n');
    s
}
