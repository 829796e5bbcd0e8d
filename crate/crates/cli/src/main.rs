//! `latper`: reproduce the Blichfeldt-type table, check the covering and
//! counting theorems on user polygons, and draw tilings as SVG.

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use lattice_periodic::regions::BBox;
use lattice_periodic::render::{render_svg, Overlay, RenderSpec};
use lattice_periodic::theorems::{
    blichfeldt_check, canonical_cells, covering_check, minkowski_check, theorem5_verify,
};
use lattice_periodic::tilings::{catalog, table, TilingId, TilingRecord};
use lattice_periodic::{Boundary, ConvexPolygon, Error, PolygonJson, QuadNum, Rat, Status};

const EXIT_INPUT: u8 = 1;
const EXIT_HYPOTHESIS: u8 = 2;
const EXIT_FALSIFIED: u8 = 3;

#[derive(Parser)]
#[command(name = "latper", version, about = "Exact geometry of numbers for the Archimedean tilings")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print k, det and the Blichfeldt coefficient of all eleven tilings.
    Catalog {
        #[arg(long)]
        json: bool,
    },
    /// Check one theorem on a tiling.
    Verify {
        #[command(subcommand)]
        check: Check,
    },
    /// Draw a tiling window as SVG.
    Render(RenderArgs),
}

#[derive(Args)]
struct Common {
    /// Tiling vertex figure, e.g. 4.8.8 or 3.6.3.6.
    #[arg(long)]
    tiling: String,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct PolygonArgs {
    /// Polygon file: {"vertices": [["x", "y"], ...]}.
    #[arg(long)]
    polygon: Option<PathBuf>,
    /// Scale the polygon about the origin by this rational.
    #[arg(long, allow_hyphen_values = true)]
    shrink: Option<String>,
}

#[derive(Subcommand)]
enum Check {
    /// Some translate of D holds floor(area(D) k / det) + 1 points.
    Blichfeldt {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        poly: PolygonArgs,
    },
    /// Counts of V - V and V in an o-symmetric body K.
    Minkowski {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        poly: PolygonArgs,
        #[arg(long, default_value_t = 1)]
        ell: u64,
    },
    /// Whether D + V covers the plane, and the volume bound.
    Covering {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        poly: PolygonArgs,
        /// Use the interior of D.
        #[arg(long)]
        open: bool,
    },
    /// Every translate of D1 - D2 holds ell points of V - V.
    Theorem5 {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        polygon: Option<PathBuf>,
        #[arg(long)]
        polygon2: Option<PathBuf>,
        /// Defaults to k.
        #[arg(long)]
        ell: Option<u64>,
        /// Scale factor for both domains; defaults to 9/10.
        #[arg(long, allow_hyphen_values = true)]
        shrink: Option<String>,
    },
    /// Whether V - V = V ∪ (−V).
    Criterion {
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Args)]
struct RenderArgs {
    #[arg(long)]
    tiling: String,
    /// Window corners x0,y0,x1,y1 as coordinate expressions.
    #[arg(long, default_value = "0,0,6,6", allow_hyphen_values = true)]
    window: String,
    /// Overlay polygon files.
    #[arg(long)]
    polygon: Vec<PathBuf>,
    /// Overlay the difference body of the two fundamental cells scaled by 9/10.
    #[arg(long)]
    hexagon: bool,
    #[arg(long)]
    out: PathBuf,
}

/// A failed run: exit code and message.
struct Failure(u8, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure(EXIT_INPUT, e.to_string())
    }
}

fn tiling(name: &str) -> Result<TilingRecord, Failure> {
    Ok(catalog(name.parse::<TilingId>()?))
}

fn read_polygon(path: &Path) -> Result<ConvexPolygon, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure(EXIT_INPUT, format!("{}: {e}", path.display())))?;
    PolygonJson::parse(&text).map_err(|e| Failure(EXIT_INPUT, format!("{}: {e}", path.display())))
}

fn parse_rat(text: &str) -> Result<Rat, Failure> {
    let x: QuadNum = text.parse()?;
    match x.as_rational() {
        Some(r) if r.signum() > 0 => Ok(r.clone()),
        _ => Err(Failure(EXIT_INPUT, format!("--shrink must be a positive rational, got {text}"))),
    }
}

fn shaped(rec: &TilingRecord, poly: &PolygonArgs) -> Result<ConvexPolygon, Failure> {
    let base = match &poly.polygon {
        Some(path) => read_polygon(path)?,
        None => rec.set.lattice().fundamental_cell(),
    };
    match &poly.shrink {
        Some(s) => Ok(base.scale(&QuadNum::from_rat(parse_rat(s)?))?),
        None => Ok(base),
    }
}

fn status_code(s: Status) -> u8 {
    match s {
        Status::Verified => 0,
        Status::HypothesisNotMet => EXIT_HYPOTHESIS,
        Status::Falsified => EXIT_FALSIFIED,
    }
}

fn status_text(s: Status) -> &'static str {
    match s {
        Status::Verified => "verified",
        Status::HypothesisNotMet => "hypothesis not met, nothing asserted",
        Status::Falsified => "FALSIFIED: hypotheses hold but a conclusion fails",
    }
}

fn emit(json: bool, value: serde_json::Value, text: String) {
    let out = if json { serde_json::to_string_pretty(&value).expect("reports serialize") + "\n" } else { text };
    let _ = io::stdout().lock().write_all(out.as_bytes());
}

fn run_catalog(json: bool) {
    let rows = table();
    let mut text = format!("{:<11} {:<12} {:>3}  {:<30} {:<30}\n", "tiling", "name", "k", "det", "k/det");
    for r in &rows {
        text.push_str(&format!(
            "{:<11} {:<12} {:>3}  {:<30} {:<30}\n",
            r.id,
            r.name,
            r.k,
            format!("{} ({})", r.det.exact, r.det.decimal),
            format!("{} ({})", r.coefficient.exact, r.coefficient.decimal),
        ));
    }
    text.push_str("bound: floor(vol(D) * k/det) + 1; decimals within 2^-20\n");
    emit(json, json!({ "rows": rows }), text);
}

fn run_verify(check: Check) -> Result<u8, Failure> {
    match check {
        Check::Criterion { common } => {
            let rec = tiling(&common.tiling)?;
            let holds = rec.set.criterion_check();
            let diff = rec.set.difference_set().k();
            let sym = rec.set.symmetric_union().k();
            emit(
                common.json,
                json!({ "tiling": rec.id.to_string(), "criterion": holds, "difference_classes": diff, "symmetric_classes": sym }),
                format!("{}: V - V = V u -V is {holds} ({diff} and {sym} classes)\n", rec.id),
            );
            Ok(if holds { 0 } else { EXIT_HYPOTHESIS })
        }
        Check::Blichfeldt { common, poly } => {
            let rec = tiling(&common.tiling)?;
            let d = shaped(&rec, &poly)?;
            let r = blichfeldt_check(&rec.set, &d)?;
            let text = format!(
                "{}: area {} ({}), bound {}, max count {} at z = ({}, {})\nstatus: {}\n",
                rec.id, r.area.exact, r.area.decimal, r.bound, r.max_count, r.witness.x.exact, r.witness.y.exact, status_text(r.status)
            );
            emit(common.json, json!({ "tiling": rec.id.to_string(), "report": r }), text);
            Ok(status_code(r.status))
        }
        Check::Minkowski { common, poly, ell } => {
            let rec = tiling(&common.tiling)?;
            let k = shaped(&rec, &poly)?;
            let r = minkowski_check(&rec.set, &k, ell)?;
            let text = format!(
                "{}: o-symmetric {}, area {} >= {}: {}\nV - V: {} points (need {})\nV: {} (need {})\nstatus: {}\n",
                rec.id,
                r.o_symmetric,
                r.area.exact,
                r.required_area.exact,
                r.area_ok,
                r.difference_count,
                r.difference_required,
                r.set_count.map_or("not asserted, criterion fails".into(), |c| c.to_string()),
                r.set_required,
                status_text(r.status)
            );
            emit(common.json, json!({ "tiling": rec.id.to_string(), "report": r }), text);
            Ok(status_code(r.status))
        }
        Check::Covering { common, poly, open } => {
            let rec = tiling(&common.tiling)?;
            let d = shaped(&rec, &poly)?;
            let boundary = if open { Boundary::Open } else { Boundary::Closed };
            let r = covering_check(&rec.set, &d, boundary)?;
            let text = format!(
                "{}: covering {} (least count {} at z = ({}, {}))\narea {} >= det/k = {}: {}\nstatus: {}\n",
                rec.id,
                r.covering,
                r.min_count,
                r.least_covered.x.exact,
                r.least_covered.y.exact,
                r.area.exact,
                r.volume_bound.exact,
                r.area_ok,
                status_text(r.status)
            );
            emit(common.json, json!({ "tiling": rec.id.to_string(), "report": r }), text);
            Ok(status_code(r.status))
        }
        Check::Theorem5 { common, polygon, polygon2, ell, shrink } => {
            let rec = tiling(&common.tiling)?;
            let s = match &shrink {
                Some(t) => parse_rat(t)?,
                None => Rat::new(9, 10),
            };
            let (p, q) = canonical_cells(rec.set.lattice(), &Rat::one())?;
            let factor = QuadNum::from_rat(s);
            let d1 = polygon.as_deref().map(read_polygon).transpose()?.unwrap_or(p).scale(&factor)?;
            let d2 = polygon2.as_deref().map(read_polygon).transpose()?.unwrap_or(q).scale(&factor)?;
            let ell = ell.unwrap_or(rec.k as u64);
            let r = theorem5_verify(&rec.set, &d1, &d2, ell)?;
            let text = format!(
                "{}: ell {ell}\narea(D1) + area(D2) = {} > {}: {}\nmax counts {} and {} <= {ell}: {}\nleast count of V - V in D1 - D2: {} (need {ell})\nleast count of V itself: {}\nstatus: {}\n",
                rec.id,
                r.area_sum.exact,
                r.required_area.exact,
                r.area_ok,
                r.max_count_d1,
                r.max_count_d2,
                r.max_counts_ok,
                r.conclusion_min,
                r.set_min,
                status_text(r.status)
            );
            emit(common.json, json!({ "tiling": rec.id.to_string(), "report": r }), text);
            Ok(status_code(r.status))
        }
    }
}

fn parse_window(text: &str) -> Result<BBox, Failure> {
    let parts: Vec<&str> = text.split(',').collect();
    if parts.len() != 4 {
        return Err(Failure(EXIT_INPUT, format!("--window needs x0,y0,x1,y1, got {text:?}")));
    }
    let v = parts.iter().map(|s| s.parse::<QuadNum>()).collect::<Result<Vec<_>, _>>()?;
    Ok(BBox { min_x: v[0].clone(), min_y: v[1].clone(), max_x: v[2].clone(), max_y: v[3].clone() })
}

const OVERLAY_FILLS: [&str; 4] = ["#3070c0", "#c05030", "#40a040", "#a040a0"];

fn run_render(args: RenderArgs) -> Result<u8, Failure> {
    let rec = tiling(&args.tiling)?;
    let window = parse_window(&args.window)?;
    let mut overlays = Vec::new();
    if args.hexagon {
        let (p, q) = canonical_cells(rec.set.lattice(), &Rat::new(9, 10))?;
        overlays.push(p.difference_body(&q));
    }
    for path in &args.polygon {
        overlays.push(read_polygon(path)?);
    }
    let overlays = overlays
        .into_iter()
        .enumerate()
        .map(|(i, polygon)| Overlay { polygon, fill: OVERLAY_FILLS[i % OVERLAY_FILLS.len()].to_string() })
        .collect();
    let spec = RenderSpec { tiling: rec.id, window, overlays };
    let (svg, summary) = render_svg(&spec)?;
    fs::write(&args.out, svg).map_err(|e| Failure(EXIT_INPUT, format!("{}: {e}", args.out.display())))?;
    println!(
        "wrote {}: {} vertices, {} edges, {} overlays",
        args.out.display(),
        summary.vertices,
        summary.edges,
        summary.overlays
    );
    Ok(0)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_INPUT } else { 0 });
        }
    };
    let result = match cli.command {
        Command::Catalog { json } => {
            run_catalog(json);
            Ok(0)
        }
        Command::Verify { check } => run_verify(check),
        Command::Render(args) => run_render(args),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(Failure(code, msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(code)
        }
    }
}
