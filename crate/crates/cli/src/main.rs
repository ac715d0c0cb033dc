//! Command-line front end: reads a JSON problem file and answers questions
//! about the feasible polygon, its argmax classes, and the multiobjective
//! verdict. Exit code 0 on success, 1 on domain failures (empty region,
//! unboundedness, zero objectives), 2 on usage and parse errors.

mod problem;
mod report;
mod svg;

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use fanlp::{
    argmax_enumerate, build_fan_with_eps, build_polygon, classify_instance_with, simplex_solve,
    ArgmaxKind, LinearForm, MolppInstance, Polygon, Tolerances, Vector2,
};

use problem::{ProblemError, ProblemFile};
use report::{AngleUnit, Format, RenderOptions};

#[derive(Parser)]
#[command(
    name = "fanlp",
    version,
    about = "Argmax classification of 2D linear objectives over a convex polygonal region"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Maximize one objective with both solvers and cross-check them.
    Solve {
        #[command(flatten)]
        common: Common,
        /// 1-based index into the problem's objectives list.
        #[arg(long, default_value_t = 1)]
        objective: usize,
    },
    /// Print the polygon and its full set of argmax classes.
    Fan {
        #[command(flatten)]
        common: Common,
    },
    /// Classify every objective and decide whether an ideal solution exists.
    Classify {
        #[command(flatten)]
        common: Common,
    },
    /// Print the cone of objective directions sharing one argmax.
    Sensitivity {
        #[command(flatten)]
        common: Common,
        /// 1-based vertex index.
        #[arg(long, conflicts_with = "objective", required_unless_present = "objective")]
        vertex: Option<usize>,
        /// 1-based objective index.
        #[arg(long)]
        objective: Option<usize>,
    },
    /// Render the polygon, cones, and objectives as an SVG figure.
    Plot {
        #[command(flatten)]
        common: Common,
        /// Output SVG path.
        #[arg(long, default_value = "fan.svg")]
        output: PathBuf,
    },
}

#[derive(Args)]
struct Common {
    /// Problem file (JSON).
    #[arg(long, value_name = "FILE")]
    input: PathBuf,
    /// Output format (plot always writes SVG and ignores this).
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Unit for printed angles.
    #[arg(long, value_enum, default_value_t = AngleUnit::Deg)]
    angle_unit: AngleUnit,
    /// Decimal places in text output.
    #[arg(long, default_value_t = 3)]
    precision: usize,
    /// Relative tolerance for feasibility checks and vertex dedup.
    #[arg(long, default_value_t = 1e-9)]
    eps_geom: f64,
    /// Relative tolerance for objective-value ties.
    #[arg(long, default_value_t = 1e-9)]
    eps_val: f64,
    /// Angular tolerance (radians) for matching a face normal exactly.
    #[arg(long, default_value_t = 1e-9)]
    eps_angle: f64,
}

struct Failure {
    code: u8,
    prefix: &'static str,
    message: String,
}

impl From<fanlp::Error> for Failure {
    fn from(e: fanlp::Error) -> Self {
        use fanlp::Error as E;
        let (prefix, code) = match e {
            E::EmptyRegion | E::Infeasible => ("E_EMPTY", 1),
            E::UnboundedRegion | E::Unbounded => ("E_UNBOUNDED", 1),
            E::ZeroForm | E::ZeroVector => ("E_ZEROFORM", 1),
            E::InvalidHalfspace { .. } => ("E_PARSE", 2),
            _ => ("E_DOMAIN", 1),
        };
        Failure {
            code,
            prefix,
            message: e.to_string(),
        }
    }
}

impl From<ProblemError> for Failure {
    fn from(e: ProblemError) -> Self {
        Failure {
            code: 2,
            prefix: "E_PARSE",
            message: e.to_string(),
        }
    }
}

fn io_failure(action: &str, e: std::io::Error) -> Failure {
    Failure {
        code: 1,
        prefix: "E_IO",
        message: format!("{action}: {e}"),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(output) => {
            print!("{output}");
            ExitCode::SUCCESS
        }
        Err(f) => {
            eprintln!("{}: {}", f.prefix, f.message);
            ExitCode::from(f.code)
        }
    }
}

struct Context {
    problem: ProblemFile,
    system: fanlp::HalfspaceSystem,
    tolerances: Tolerances,
    options: RenderOptions,
}

fn setup(common: &Common) -> Result<Context, Failure> {
    for (name, value) in [
        ("--eps-geom", common.eps_geom),
        ("--eps-val", common.eps_val),
        ("--eps-angle", common.eps_angle),
    ] {
        if !(value.is_finite() && value > 0.0) {
            return Err(Failure {
                code: 2,
                prefix: "E_PARSE",
                message: format!("{name} must be a positive finite number, got {value}"),
            });
        }
    }
    let problem = ProblemFile::load(&common.input)?;
    let system = problem.system()?;
    Ok(Context {
        problem,
        system,
        tolerances: Tolerances {
            eps_geom: common.eps_geom,
            eps_val: common.eps_val,
            eps_angle: common.eps_angle,
        },
        options: RenderOptions {
            unit: common.angle_unit,
            precision: common.precision,
        },
    })
}

/// Converts a 1-based command-line index into a 0-based one.
fn index_1based(index: usize, len: usize) -> Result<usize, Failure> {
    if index == 0 || index > len {
        Err(fanlp::Error::IndexOutOfRange { index, len }.into())
    } else {
        Ok(index - 1)
    }
}

fn run(cli: Cli) -> Result<String, Failure> {
    match cli.command {
        Command::Solve { common, objective } => cmd_solve(&common, objective),
        Command::Fan { common } => cmd_fan(&common),
        Command::Classify { common } => cmd_classify(&common),
        Command::Sensitivity {
            common,
            vertex,
            objective,
        } => cmd_sensitivity(&common, vertex, objective),
        Command::Plot { common, output } => cmd_plot(&common, &output),
    }
}

/// The two solvers agree when the optimal values match at a relative
/// tolerance and the simplex point lies on the enumerated argmax.
fn solvers_agree(
    by_enum: &fanlp::ArgmaxSet,
    polygon: &Polygon,
    x: Vector2,
    value: f64,
    form: LinearForm,
) -> bool {
    let scale = form.norm() * (1.0 + polygon.max_vertex_norm());
    if (by_enum.optimal_value - value).abs() > 1e-6 * scale {
        return false;
    }
    let point_tol = 1e-6 * (1.0 + polygon.max_vertex_norm());
    match by_enum.kind {
        ArgmaxKind::Vertex(i) => (x - polygon.vertices()[i]).norm() <= point_tol,
        ArgmaxKind::Edge(e) => {
            // The simplex returns a basic solution, i.e. one endpoint.
            let (tail, head) = polygon.edge_endpoints(e).expect("argmax edge exists");
            (x - tail).norm() <= point_tol || (x - head).norm() <= point_tol
        }
    }
}

fn cmd_solve(common: &Common, objective: usize) -> Result<String, Failure> {
    let ctx = setup(common)?;
    let polygon = build_polygon(&ctx.system, ctx.tolerances.eps_geom)?;
    let k = index_1based(objective, ctx.problem.objectives.len())?;
    let form = ctx.problem.form(k)?;
    let by_enum = argmax_enumerate(&polygon, form, ctx.tolerances.eps_val)?;
    let (x, value) = simplex_solve(&ctx.system, form)?;
    let agrees = solvers_agree(&by_enum, &polygon, x, value, form);
    Ok(match common.format {
        Format::Text => {
            report::solve_text(k, form, &by_enum, &polygon, x, value, agrees, &ctx.options)
        }
        Format::Json => report::to_json(&report::solve_document(
            k,
            form,
            &by_enum,
            &polygon,
            x,
            value,
            agrees,
            ctx.tolerances,
            &ctx.options,
        )),
    })
}

fn cmd_fan(common: &Common) -> Result<String, Failure> {
    let ctx = setup(common)?;
    let polygon = build_polygon(&ctx.system, ctx.tolerances.eps_geom)?;
    let fan = build_fan_with_eps(&polygon, ctx.tolerances.eps_angle)?;
    Ok(match common.format {
        Format::Text => report::fan_text(&fan, &ctx.options),
        Format::Json => report::to_json(&report::fan_document(&fan, ctx.tolerances, &ctx.options)),
    })
}

fn cmd_classify(common: &Common) -> Result<String, Failure> {
    let ctx = setup(common)?;
    let forms = ctx.problem.forms()?;
    let instance = MolppInstance::new(ctx.system.clone(), forms.clone())?;
    let classified = classify_instance_with(&instance, ctx.tolerances)?;
    Ok(match common.format {
        Format::Text => report::classify_text(&classified, &forms, &ctx.options),
        Format::Json => report::to_json(&report::classify_document(&classified, &forms, &ctx.options)),
    })
}

fn cmd_sensitivity(
    common: &Common,
    vertex: Option<usize>,
    objective: Option<usize>,
) -> Result<String, Failure> {
    let ctx = setup(common)?;
    let polygon = build_polygon(&ctx.system, ctx.tolerances.eps_geom)?;
    let fan = build_fan_with_eps(&polygon, ctx.tolerances.eps_angle)?;
    if let Some(v) = vertex {
        let i = index_1based(v, polygon.vertex_count())?;
        let cone = fan.sensitivity_interval(i)?;
        let point = polygon.vertices()[i];
        return Ok(match common.format {
            Format::Text => report::sensitivity_vertex_text(i, point, cone, &ctx.options),
            Format::Json => report::to_json(&report::sensitivity_vertex_document(
                i,
                point,
                cone,
                ctx.tolerances,
                &ctx.options,
            )),
        });
    }
    let k = index_1based(
        objective.expect("clap requires --vertex or --objective"),
        ctx.problem.objectives.len(),
    )?;
    let form = ctx.problem.form(k)?;
    let class = fan.class_of(form);
    Ok(match common.format {
        Format::Text => report::sensitivity_objective_text(k, form, class, &polygon, &ctx.options),
        Format::Json => report::to_json(&report::sensitivity_objective_document(
            k,
            form,
            class,
            &polygon,
            ctx.tolerances,
            &ctx.options,
        )),
    })
}

fn cmd_plot(common: &Common, output: &PathBuf) -> Result<String, Failure> {
    let ctx = setup(common)?;
    let polygon = build_polygon(&ctx.system, ctx.tolerances.eps_geom)?;
    let fan = build_fan_with_eps(&polygon, ctx.tolerances.eps_angle)?;
    let mut objectives = Vec::with_capacity(ctx.problem.objectives.len());
    for k in 0..ctx.problem.objectives.len() {
        let form = ctx.problem.form(k)?;
        objectives.push((form, fan.class_of(form).id()));
    }
    let figure = svg::render(&polygon, &fan, &objectives);
    fs::write(output, figure).map_err(|e| io_failure("cannot write figure", e))?;
    Ok(format!("wrote {}\n", output.display()))
}
