use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use stressdraw_core::io::{coordinates_json, gallery_csv, graph_from_json, graph_to_json, kaleidoscope_csv};
use stressdraw_core::method::{gallery, GalleryEntry, GALLERY_METHODS};
use stressdraw_core::morph::kaleidoscope_drawing;
use stressdraw_core::render::render_svg;
use stressdraw_core::{
    generate_planar, generate_planar_closest, kaleidoscope, regular_polygon, run_method, worst_case_graph,
    DrawingMetrics, Error, Method, MethodParams, PlanarEmbedding, RChoice,
};

#[derive(Parser)]
#[command(name = "stressdraw", version, about = "Weighted Tutte drawings of 3-connected planar graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a random 3-connected planar graph or the nested worst case.
    Generate(GenerateArgs),
    /// Draw a graph with one method and report its metrics.
    Draw(DrawArgs),
    /// Sweep xy-morph directions from 0 to 90 degrees.
    Kaleidoscope(KaleidoscopeArgs),
    /// Run the five comparison methods on several graphs.
    Gallery(GalleryArgs),
}

#[derive(Args)]
struct GenerateArgs {
    #[arg(long, required_unless_present = "worst_case")]
    n: Option<usize>,
    #[arg(long, required_unless_present = "worst_case")]
    m: Option<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Two apexes joined to each other and to a path of K vertices.
    #[arg(long, value_name = "K", conflicts_with_all = ["n", "m"])]
    worst_case: Option<usize>,
    /// Accept the sparsest graph reached if exactly M edges is not reachable.
    #[arg(long)]
    closest: bool,
    #[arg(long)]
    out: PathBuf,
}

#[derive(Args)]
struct DrawArgs {
    graph: PathBuf,
    #[arg(long, value_parser = parse_method)]
    method: Method,
    /// Spread direction in degrees (xspread, yspread, xymorph).
    #[arg(long)]
    angle: Option<f64>,
    /// Weight of depth-1 edges (bfs, schnyder).
    #[arg(long)]
    a: Option<f64>,
    /// Depth scaling: a number > 1, or `best` to search 2..=16 (bfs, schnyder).
    #[arg(long, value_parser = parse_r)]
    r: Option<RChoice>,
    #[arg(long)]
    svg: Option<PathBuf>,
    #[arg(long)]
    metrics: Option<PathBuf>,
    #[arg(long)]
    coords: Option<PathBuf>,
}

#[derive(Args)]
struct KaleidoscopeArgs {
    graph: PathBuf,
    #[arg(long, default_value_t = 5.0)]
    step: f64,
    #[arg(long)]
    out: PathBuf,
    /// Write `best.svg` and `worst.svg` here.
    #[arg(long)]
    svg_dir: Option<PathBuf>,
}

#[derive(Args)]
struct GalleryArgs {
    #[arg(required = true)]
    graphs: Vec<PathBuf>,
    #[arg(long)]
    out_dir: PathBuf,
}

fn parse_method(s: &str) -> Result<Method, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_r(s: &str) -> Result<RChoice, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

enum Failure {
    Core(Error),
    Io(PathBuf, std::io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

impl Failure {
    fn exit_code(&self) -> u8 {
        match self {
            Failure::Io(..) => 2,
            Failure::Core(e) => match e {
                Error::GenerationStalled { .. }
                | Error::NotTriangulation
                | Error::NotStOrientation(_)
                | Error::ZeroGap(_)
                | Error::DegeneratePosition(_)
                | Error::NoValidTopBottom => 3,
                Error::SingularSystem | Error::ResidualTooLarge { .. } | Error::ZeroLengthEdge(_) => 4,
                _ => 2,
            },
        }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Core(e) => write!(f, "{}: {e}", e.kind()),
            Failure::Io(path, e) => write!(f, "Io: {}: {e}", path.display()),
        }
    }
}

type CliResult<T = ()> = Result<T, Failure>;

/// Writes through a temporary sibling so readers never see a partial file.
fn write_atomic(path: &Path, contents: &str) -> CliResult {
    let io = |e| Failure::Io(path.to_path_buf(), e);
    if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
        fs::create_dir_all(dir).map_err(io)?;
    }
    let mut tmp = path.as_os_str().to_owned();
    tmp.push(".tmp");
    fs::write(&tmp, contents).map_err(io)?;
    fs::rename(&tmp, path).map_err(io)
}

fn read_graph(path: &Path) -> CliResult<PlanarEmbedding> {
    let text = fs::read_to_string(path).map_err(|e| Failure::Io(path.to_path_buf(), e))?;
    Ok(graph_from_json(&text)?)
}

fn generate(args: GenerateArgs) -> CliResult {
    let emb = match (args.worst_case, args.n, args.m) {
        (Some(k), _, _) => worst_case_graph(k)?,
        (None, Some(n), Some(m)) if args.closest => generate_planar_closest(n, m, args.seed)?,
        (None, Some(n), Some(m)) => generate_planar(n, m, args.seed)?,
        _ => unreachable!("clap requires n and m without --worst-case"),
    };
    write_atomic(&args.out, &graph_to_json(&emb))?;
    println!(
        "n={} m={} faces={} outer_face={} three_connected=true",
        emb.n(),
        emb.m(),
        emb.faces().len(),
        emb.outer_face().len()
    );
    Ok(())
}

fn draw(args: DrawArgs) -> CliResult {
    let directional = matches!(args.method, Method::XSpread | Method::YSpread | Method::XyMorph);
    let tree = matches!(args.method, Method::Bfs | Method::Schnyder);
    if args.angle.is_some() && !directional {
        return Err(Error::BadParams(format!("--angle does not apply to {}", args.method)).into());
    }
    if (args.a.is_some() || args.r.is_some()) && !tree {
        return Err(Error::BadParams(format!("--a and --r do not apply to {}", args.method)).into());
    }
    let defaults = MethodParams::default();
    let params = MethodParams {
        angle_degrees: args.angle.unwrap_or(defaults.angle_degrees),
        a: args.a.unwrap_or(defaults.a),
        r: args.r.unwrap_or(defaults.r),
    };
    let emb = read_graph(&args.graph)?;
    let result = run_method(&emb, args.method, &params)?;
    let metrics = DrawingMetrics::measure(&result.drawing, &emb)?;
    if let Some(path) = &args.svg {
        write_atomic(path, &render_svg(&result.drawing, &emb))?;
    }
    if let Some(path) = &args.coords {
        write_atomic(path, &coordinates_json(&result.drawing))?;
    }
    if let Some(path) = &args.metrics {
        write_atomic(path, &metrics.to_json())?;
    }
    if let Some(r) = result.r {
        eprintln!("r = {r}");
    }
    println!("{}", metrics.to_json());
    Ok(())
}

fn kaleidoscope_cmd(args: KaleidoscopeArgs) -> CliResult {
    let emb = read_graph(&args.graph)?;
    let poly = regular_polygon(emb.outer_face(), stressdraw_core::solver::DEFAULT_RADIUS)?;
    let k = kaleidoscope(&emb, &poly, args.step)?;
    write_atomic(&args.out, &kaleidoscope_csv(&k)?)?;
    if let Some(dir) = &args.svg_dir {
        for (name, row) in [("best", k.best()), ("worst", k.worst())] {
            let morph = kaleidoscope_drawing(&emb, &poly, row.angle_degrees)?;
            write_atomic(&dir.join(format!("{name}.svg")), &render_svg(&morph.drawing, &emb))?;
        }
    }
    println!(
        "rows={} best_angle={} best_ratio={:.6} worst_angle={} worst_ratio={:.6}",
        k.rows.len(),
        k.best().angle_degrees,
        k.best().ratio,
        k.worst().angle_degrees,
        k.worst().ratio
    );
    Ok(())
}

fn gallery_cmd(args: GalleryArgs) -> CliResult {
    let mut loaded = Vec::new();
    let mut failed = Vec::new();
    for path in &args.graphs {
        let name = path.file_stem().map_or_else(|| path.display().to_string(), |s| s.to_string_lossy().into_owned());
        match read_graph(path) {
            Ok(emb) => loaded.push((name, emb)),
            Err(Failure::Core(e)) => failed.push(GalleryEntry::load_failure(&name, e)),
            Err(Failure::Io(_, e)) => failed.push(GalleryEntry::load_failure(&name, Error::Format(e.to_string()))),
        }
    }
    let mut entries = gallery(&loaded);
    for (entry, (_, emb)) in entries.iter().zip(&loaded) {
        for (method, cell) in GALLERY_METHODS.iter().zip(&entry.results) {
            if let Ok(cell) = cell {
                let path = args.out_dir.join(format!("{}_{method}.svg", entry.name));
                write_atomic(&path, &render_svg(&cell.result.drawing, emb))?;
            }
        }
    }
    entries.extend(failed);
    write_atomic(&args.out_dir.join("gallery.csv"), &gallery_csv(&entries)?)?;
    let failures = entries.iter().filter(|e| e.results.iter().any(|r| r.is_err())).count();
    println!("graphs={} with_failures={failures}", entries.len());
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Generate(args) => generate(args),
        Command::Draw(args) => draw(args),
        Command::Kaleidoscope(args) => kaleidoscope_cmd(args),
        Command::Gallery(args) => gallery_cmd(args),
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => {
            eprintln!("error: {failure}");
            ExitCode::from(failure.exit_code())
        }
    }
}
