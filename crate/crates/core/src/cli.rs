//! Command-line front end. Exit codes: 0 success, 1 verification failure
//! (the report is still written), 2 input or usage error.

use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::arrangement::{multiplicity_at, verify_k_fold};
use crate::bolle::check_bolle;
use crate::classify::{classify, Classification};
use crate::error::{Error, LocalError, ParseError};
use crate::families::{self, case_lattices, FamilyInstance};
use crate::geom::{Point, Rect};
use crate::io::{read_lattice, read_polygon, read_translates};
use crate::local::{check_vertex_sums, wheels_at};
use crate::rational::{format_rational, parse_rational, Rational};
use crate::svg::{render_svg, RenderMode, RenderSpec};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "tilekit",
    version,
    about = "Exact multiple lattice tilings by centrally symmetric polygons"
)]
struct Cli {
    /// Output format for reports.
    #[arg(long, value_enum, global = true, default_value_t = ReportFormat::Json)]
    report: ReportFormat,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum ReportFormat {
    Json,
    Text,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FamilyArg {
    Parallelogram,
    Hexagon,
    Octagon1,
    Octagon2,
    Decagon,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ModeArg {
    Outline,
    MultiplicityShade,
}

fn rational_arg(s: &str) -> Result<Rational, String> {
    parse_rational(s).map_err(|e| e.to_string())
}

fn point_arg(s: &str) -> Result<Point, String> {
    Point::parse(s).map_err(|e| e.to_string())
}

fn rect_arg(s: &str) -> Result<Rect, String> {
    Rect::parse(s).map_err(|e| e.to_string())
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Generate a family member with its lattice.
    Gen {
        #[arg(long, value_enum)]
        family: FamilyArg,
        #[arg(long, value_parser = rational_arg, allow_hyphen_values = true)]
        alpha: Option<Rational>,
        #[arg(long, value_parser = rational_arg, allow_hyphen_values = true)]
        beta: Option<Rational>,
        /// First decagon vertex, `x,y`.
        #[arg(long, value_parser = point_arg, allow_hyphen_values = true)]
        vertex: Option<Point>,
        /// Parallelogram edge vectors, or hexagon vertices, as `x,y`.
        #[arg(long = "point", value_parser = point_arg, allow_hyphen_values = true)]
        points: Vec<Point>,
    },
    /// Check the Bolle edge conditions for a polygon and a lattice.
    Bolle {
        #[arg(long)]
        polygon: PathBuf,
        /// Lattice file (`{"basis": ...}` or anything with a "lattice" key).
        #[arg(long, alias = "translates")]
        lattice: PathBuf,
    },
    /// Decide whether P + X is a k-fold tiling.
    Verify {
        #[arg(long)]
        polygon: PathBuf,
        #[arg(long)]
        translates: PathBuf,
        #[arg(long)]
        k: u64,
        /// Include every face sample in the report.
        #[arg(long)]
        samples: bool,
    },
    /// Coverage counts at one point.
    Multiplicity {
        #[arg(long)]
        polygon: PathBuf,
        #[arg(long)]
        translates: PathBuf,
        #[arg(long, value_parser = point_arg, allow_hyphen_values = true)]
        point: Point,
    },
    /// Adjacent wheels at a vertex of the tiling.
    Wheel {
        #[arg(long)]
        polygon: PathBuf,
        #[arg(long)]
        translates: PathBuf,
        #[arg(long, value_parser = point_arg, allow_hyphen_values = true)]
        vertex: Point,
    },
    /// Check phi + varphi = k at every vertex class.
    Sums {
        #[arg(long)]
        polygon: PathBuf,
        #[arg(long)]
        translates: PathBuf,
        #[arg(long)]
        k: u64,
    },
    /// Recognize the family of a polygon.
    Classify {
        #[arg(long)]
        polygon: PathBuf,
    },
    /// Draw the arrangement as SVG.
    Render {
        #[arg(long)]
        polygon: PathBuf,
        #[arg(long)]
        translates: PathBuf,
        /// `x0,y0,x1,y1`; defaults to a box around one period.
        #[arg(long, value_parser = rect_arg, allow_hyphen_values = true)]
        window: Option<Rect>,
        #[arg(long, value_enum, default_value_t = ModeArg::Outline)]
        mode: ModeArg,
        /// Write to a file instead of standard output.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Candidate lattices of a decagon.
    Cases {
        #[arg(long)]
        polygon: PathBuf,
    },
}

struct Outcome {
    json: Value,
    text: String,
    code: i32,
}

impl Outcome {
    fn new(report: &impl Serialize, text: String, pass: bool) -> Outcome {
        Outcome {
            json: serde_json::to_value(report).expect("reports serialize"),
            text,
            code: if pass { EXIT_OK } else { EXIT_FAIL },
        }
    }
}

fn verdict(pass: bool) -> &'static str {
    if pass {
        "PASS"
    } else {
        "FAIL"
    }
}

fn usage(msg: &str) -> Error {
    Error::Parse(ParseError::Json(msg.to_string()))
}

fn init_threads() {
    if let Some(n) = std::env::var("TILEKIT_THREADS")
        .ok()
        .and_then(|s| s.parse::<usize>().ok())
    {
        // a pool built earlier in the same process wins
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global();
    }
}

fn generate(
    family: FamilyArg,
    alpha: Option<Rational>,
    beta: Option<Rational>,
    vertex: Option<Point>,
    points: Vec<Point>,
) -> Result<FamilyInstance, Error> {
    let pt = |i: usize, x: i64, y: i64| {
        points
            .get(i)
            .cloned()
            .unwrap_or_else(|| Point::from_ints(x, y))
    };
    let inst = match family {
        FamilyArg::Parallelogram => families::parallelogram(&pt(0, 1, 0), &pt(1, 0, 1))?,
        FamilyArg::Hexagon => families::hexagon(&pt(0, 1, 0), &pt(1, 0, 1), &pt(2, -1, 1))?,
        FamilyArg::Octagon1 => {
            families::octagon_type1(&alpha.ok_or_else(|| usage("octagon1 needs --alpha"))?)?
        }
        FamilyArg::Octagon2 => {
            families::octagon_type2(&beta.ok_or_else(|| usage("octagon2 needs --beta"))?)?
        }
        FamilyArg::Decagon => {
            families::decagon_from_vertex(&vertex.ok_or_else(|| usage("decagon needs --vertex"))?)?
        }
    };
    Ok(inst)
}

fn execute(command: Command) -> Result<Outcome, Error> {
    Ok(match command {
        Command::Gen {
            family,
            alpha,
            beta,
            vertex,
            points,
        } => {
            let inst = generate(family, alpha, beta, vertex, points)?;
            let text = format!(
                "{} {}: {} vertices, area {}, det {}, k = {}",
                inst.family.name(),
                inst.family.parameter().unwrap_or_default(),
                inst.polygon.len(),
                format_rational(&inst.polygon.area()),
                format_rational(&inst.lattice.det()),
                inst.expected_k
            );
            Outcome::new(&inst, text, true)
        }
        Command::Bolle { polygon, lattice } => {
            let p = read_polygon(&polygon)?;
            let l = read_lattice(&lattice)?;
            let r = check_bolle(&p, &l);
            let mut text = String::new();
            for e in &r.per_edge {
                text.push_str(&format!(
                    "edge {}: witness {}, midpoint in half-lattice {}, edge in lattice {} -> {}\n",
                    e.edge,
                    e.interior_half_lattice_witness
                        .as_ref()
                        .map_or("none".to_string(), |w| w.to_string()),
                    e.midpoint_in_half_lattice,
                    e.edge_is_lattice_vector,
                    verdict(e.verdict)
                ));
            }
            text.push_str(&format!(
                "area/det = {} -> {}",
                format_rational(&r.area_ratio),
                verdict(r.pass)
            ));
            Outcome::new(&r, text, r.pass)
        }
        Command::Verify {
            polygon,
            translates,
            k,
            samples,
        } => {
            let p = read_polygon(&polygon)?;
            let x = read_translates(&translates)?;
            let r = verify_k_fold(&p, &x, k);
            let text = format!(
                "{} faces sampled over {} translates: coverage {}..{}, area ratio {} -> {}",
                r.samples.len(),
                r.translates_considered,
                r.min_count,
                r.max_count,
                format_rational(&r.area_ratio),
                verdict(r.pass)
            );
            let mut out = Outcome::new(&r, text, r.pass);
            out.json["sample_count"] = json!(r.samples.len());
            if !samples {
                out.json.as_object_mut().expect("object").remove("samples");
            }
            out
        }
        Command::Multiplicity {
            polygon,
            translates,
            point,
        } => {
            let p = read_polygon(&polygon)?;
            let x = read_translates(&translates)?;
            let c = multiplicity_at(&p, &x, &point);
            let text = format!(
                "interior {}, boundary {}",
                c.interior_count, c.boundary_count
            );
            Outcome::new(&c, text, true)
        }
        Command::Wheel {
            polygon,
            translates,
            vertex,
        } => {
            let p = read_polygon(&polygon)?;
            let x = read_translates(&translates)?;
            match wheels_at(&p, &x, &vertex) {
                Ok(w) => {
                    let text = format!(
                        "{} wheel(s), phi {}, varphi {}, ell {}, kappa {}",
                        w.wheels.len(),
                        w.phi,
                        w.varphi,
                        w.ell,
                        w.kappa
                    );
                    Outcome::new(&w, text, true)
                }
                Err(e @ LocalError::NotAVertexOfTiling) => return Err(e.into()),
                Err(e) => local_failure(&e),
            }
        }
        Command::Sums {
            polygon,
            translates,
            k,
        } => {
            let p = read_polygon(&polygon)?;
            let x = read_translates(&translates)?;
            match check_vertex_sums(&p, &x, k) {
                Ok(t) => {
                    let mut text = String::new();
                    for r in &t.rows {
                        text.push_str(&format!(
                            "{}: phi {} + varphi {} = {} {}\n",
                            r.vertex,
                            r.phi,
                            r.varphi,
                            r.phi + r.varphi,
                            verdict(r.holds)
                        ));
                    }
                    text.push_str(verdict(t.all_hold));
                    Outcome::new(&t, text, t.all_hold)
                }
                Err(e) => local_failure(&e),
            }
        }
        Command::Classify { polygon } => {
            let p = read_polygon(&polygon)?;
            let c = classify(&p);
            let text = match &c {
                Classification::FiveFold { family, .. } => match family.parameter() {
                    Some(param) => format!("{} {}", family.name(), param),
                    None => family.name().to_string(),
                },
                Classification::NotFiveFold(reason) => {
                    format!("not five-fold: {}", reason.message())
                }
            };
            let ok = matches!(c, Classification::FiveFold { .. });
            Outcome::new(&c, text, ok)
        }
        Command::Render {
            polygon,
            translates,
            window,
            mode,
            out,
        } => {
            let p = read_polygon(&polygon)?;
            let x = read_translates(&translates)?;
            let window = window.unwrap_or_else(|| x.base().reduced().fundamental_bbox());
            let mode = match mode {
                ModeArg::Outline => RenderMode::Outline,
                ModeArg::MultiplicityShade => RenderMode::MultiplicityShade,
            };
            let svg = render_svg(&p, &x, &RenderSpec::new(window, mode))?;
            match out {
                Some(path) => {
                    std::fs::write(&path, &svg)?;
                    let elements = svg.matches("<polygon").count();
                    let text = format!("wrote {} polygons to {}", elements, path.display());
                    Outcome::new(&json!({ "path": path, "polygons": elements }), text, true)
                }
                None => Outcome {
                    json: Value::String(svg.clone()),
                    text: svg,
                    code: EXIT_OK,
                },
            }
        }
        Command::Cases { polygon } => {
            let p = read_polygon(&polygon)?;
            let cases = case_lattices(&p)?;
            let text = cases
                .iter()
                .map(|c| {
                    let status = if c.degenerate {
                        "degenerate".to_string()
                    } else {
                        match c.bolle_k {
                            Some(k) => format!("k = {k}"),
                            None => "not a multiple tiling".to_string(),
                        }
                    };
                    format!(
                        "case {}: [{}, {}] {}",
                        c.case, c.basis[0], c.basis[1], status
                    )
                })
                .collect::<Vec<_>>()
                .join("\n");
            Outcome::new(&cases, text, true)
        }
    })
}

fn local_failure(e: &LocalError) -> Outcome {
    Outcome {
        json: json!({ "pass": false, "error": e.to_string() }),
        text: format!("FAIL: {e}"),
        code: EXIT_FAIL,
    }
}

/// Runs the command line with `args` (including the program name) and
/// returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let _ = if e.use_stderr() {
                write!(err, "{e}")
            } else {
                write!(out, "{e}")
            };
            return code;
        }
    };
    init_threads();
    let format = cli.report;
    match execute(cli.command) {
        Ok(outcome) => {
            let _ = match (format, &outcome.json) {
                (ReportFormat::Json, Value::String(raw)) => write!(out, "{raw}"),
                (ReportFormat::Json, v) => {
                    writeln!(out, "{}", serde_json::to_string_pretty(v).expect("json"))
                }
                (ReportFormat::Text, _) => writeln!(out, "{}", outcome.text.trim_end()),
            };
            outcome.code
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_INPUT
        }
    }
}
