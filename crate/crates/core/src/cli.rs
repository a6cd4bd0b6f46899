//! Command-line front end.
//!
//! Exit codes: 0 success, 1 clippers disagree, 2 usage or malformed input,
//! 3 I/O failure, 4 mesh validation failure.

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use crate::bench::{
    emit_table, generate_line_dataset, load_lines, run_benchmark_with, save_lines, BenchConfig, HitMode, TableFormat,
};
use crate::clip::{Algorithm, ClipResult, Counters};
use crate::error::{Error, Result};
use crate::geometry::{ClipMode, Segment, Vec3};
use crate::mesh::{generate_inscribed_polyhedron, load_mesh, save_mesh, ConvexMesh};

pub const EXIT_OK: i32 = 0;
pub const EXIT_DISAGREE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_IO: i32 = 3;
pub const EXIT_INVALID_MESH: i32 = 4;

#[derive(Debug, Parser)]
#[command(name = "hullclip", version, about = "Clip segments and lines against convex triangle meshes")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Generate a polyhedron inscribed in a sphere and write it as a mesh file.
    GenMesh(GenMeshArgs),
    /// Generate random segments that all hit or all miss a mesh.
    GenLines(GenLinesArgs),
    /// Clip one segment or a file of segments.
    Clip(ClipArgs),
    /// Check that all four clippers agree on every segment of a file.
    Verify(VerifyArgs),
    /// Time the clippers over a range of facet counts.
    Bench(BenchArgs),
}

#[derive(Debug, Args)]
pub struct GenMeshArgs {
    /// Number of facets (even, at least 4).
    #[arg(long)]
    pub n: usize,
    #[arg(long, default_value_t = 0.5)]
    pub radius: f64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long)]
    pub out: PathBuf,
}

#[derive(Debug, Args)]
pub struct GenLinesArgs {
    #[arg(long)]
    pub mesh: PathBuf,
    #[arg(long)]
    pub count: usize,
    /// `hit` or `miss`.
    #[arg(long, default_value = "hit")]
    pub mode: HitMode,
    #[arg(long, default_value_t = 1.0)]
    pub outer_radius: f64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long)]
    pub out: PathBuf,
}

#[derive(Debug, Args)]
pub struct ClipArgs {
    #[arg(long)]
    pub mesh: PathBuf,
    /// `cb`, `planes`, `sqrt` or `oracle`.
    #[arg(long, default_value = "cb")]
    pub algo: Algorithm,
    /// Segment endpoints `ax ay az bx by bz`.
    #[arg(
        long,
        num_args = 6,
        allow_negative_numbers = true,
        value_names = ["AX", "AY", "AZ", "BX", "BY", "BZ"],
        conflicts_with = "lines",
        required_unless_present = "lines"
    )]
    pub seg: Option<Vec<f64>>,
    /// File of segments.
    #[arg(long)]
    pub lines: Option<PathBuf>,
    /// Clip the infinite lines through the segments.
    #[arg(long)]
    pub line: bool,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long)]
    pub mesh: PathBuf,
    #[arg(long)]
    pub lines: PathBuf,
    #[arg(long)]
    pub line: bool,
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    /// Comma-separated facet counts.
    #[arg(long, value_delimiter = ',', default_value = "10,20,50,100,200,500,1000,2000,4000")]
    pub n: Vec<usize>,
    /// Segments per facet count.
    #[arg(long, default_value_t = 10_000)]
    pub lines: usize,
    #[arg(long, default_value = "hit")]
    pub mode: HitMode,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// `csv` or `markdown`.
    #[arg(long, default_value = "csv")]
    pub format: TableFormat,
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, default_value_t = 0.5)]
    pub inner_radius: f64,
    #[arg(long, default_value_t = 1.0)]
    pub outer_radius: f64,
    #[arg(long, default_value_t = 3)]
    pub repeats: usize,
}

/// Exit code for an error.
pub fn exit_code(err: &Error) -> i32 {
    match err {
        Error::EquivalenceViolation { .. } => EXIT_DISAGREE,
        Error::Io(_) => EXIT_IO,
        Error::TooSmall { .. }
        | Error::IndexOutOfRange { .. }
        | Error::DegenerateFacet { .. }
        | Error::NotClosed { .. }
        | Error::InconsistentOrientation { .. }
        | Error::EulerViolation { .. }
        | Error::NotConvex { .. }
        | Error::HullFailed(_) => EXIT_INVALID_MESH,
        _ => EXIT_USAGE,
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    match execute(cli.command, &mut out) {
        Ok(code) => code,
        Err(e) => {
            let _ = out.flush();
            eprintln!("error: {e}");
            exit_code(&e)
        }
    }
}

/// Runs a parsed command, writing its report to `out`.
pub fn execute(command: Command, out: &mut impl Write) -> Result<i32> {
    match command {
        Command::GenMesh(a) => gen_mesh(a, out),
        Command::GenLines(a) => gen_lines(a, out),
        Command::Clip(a) => clip(a, out),
        Command::Verify(a) => verify(a, out),
        Command::Bench(a) => bench(a, out),
    }
}

fn gen_mesh(a: GenMeshArgs, out: &mut impl Write) -> Result<i32> {
    let mesh = generate_inscribed_polyhedron(a.n, a.radius, a.seed)?;
    save_mesh(&mesh, &a.out)?;
    writeln!(
        out,
        "V={} E={} F={}",
        mesh.num_vertices(),
        mesh.num_edges(),
        mesh.num_facets()
    )?;
    Ok(EXIT_OK)
}

fn gen_lines(a: GenLinesArgs, out: &mut impl Write) -> Result<i32> {
    let mesh = load_mesh(&a.mesh)?;
    let data = generate_line_dataset(&mesh, a.count, a.mode, a.outer_radius, a.seed)?;
    save_lines(&data.segments, &a.out)?;
    writeln!(
        out,
        "{} segments ({}), {} attempts, acceptance rate {}",
        data.segments.len(),
        data.hit_mode,
        data.attempts,
        data.acceptance_rate()
    )?;
    Ok(EXIT_OK)
}

fn read_segments(seg: Option<Vec<f64>>, lines: Option<PathBuf>, line_mode: bool) -> Result<Vec<Segment>> {
    let segments = match (seg, lines) {
        (Some(c), _) => {
            let s = Segment::new(Vec3::new(c[0], c[1], c[2]), Vec3::new(c[3], c[4], c[5]))
                .map_err(|e| Error::InvalidArgument(format!("--seg: {e}")))?;
            vec![s]
        }
        (None, Some(path)) => load_lines(path)?,
        (None, None) => return Err(Error::InvalidArgument("give --seg or --lines".into())),
    };
    let mode = if line_mode { ClipMode::Line } else { ClipMode::Segment };
    Ok(segments.into_iter().map(|s| s.in_mode(mode)).collect())
}

fn clip(a: ClipArgs, out: &mut impl Write) -> Result<i32> {
    let segments = read_segments(a.seg, a.lines, a.line)?;
    let mesh = load_mesh(&a.mesh)?;
    let mut totals = Counters::default();
    for s in &segments {
        let r = a.algo.clip(&mesh, s);
        writeln!(out, "{r}")?;
        totals += r.counters;
    }
    writeln!(out, "counters {totals}")?;
    Ok(EXIT_OK)
}

fn verify(a: VerifyArgs, out: &mut impl Write) -> Result<i32> {
    let segments = read_segments(None, Some(a.lines), a.line)?;
    let mesh = load_mesh(&a.mesh)?;
    match first_disagreement(&mesh, &segments) {
        None => {
            writeln!(out, "OK {} segments, all four clippers agree", segments.len())?;
            Ok(EXIT_OK)
        }
        Some((i, results)) => {
            writeln!(out, "MISMATCH segment {} `{}`", i + 1, segments[i])?;
            for (alg, r) in Algorithm::ALL.iter().zip(results) {
                writeln!(out, "{alg}: {r}")?;
            }
            Ok(EXIT_DISAGREE)
        }
    }
}

/// Index of the first segment on which the clippers disagree, with all four
/// results. Agreement is judged against the oracle within `1e-9 * scale`.
pub fn first_disagreement(mesh: &ConvexMesh, segments: &[Segment]) -> Option<(usize, [ClipResult; 4])> {
    let tol = 1e-9 * mesh.scale();
    segments.iter().enumerate().find_map(|(i, s)| {
        let results = Algorithm::ALL.map(|alg| alg.clip(mesh, s));
        let oracle = &results[3];
        let agree = results.iter().all(|r| r.agrees_with(oracle, s, tol));
        (!agree).then_some((i, results))
    })
}

fn bench(a: BenchArgs, out: &mut impl Write) -> Result<i32> {
    let config = BenchConfig {
        n_facets: a.n,
        lines_per_case: a.lines,
        hit_mode: a.mode,
        seed: a.seed,
        inner_radius: a.inner_radius,
        outer_radius: a.outer_radius,
        repeats: a.repeats,
    };
    let rows = run_benchmark_with(&config)?;
    let table = emit_table(&rows, a.format)?;
    let mut summary = String::new();
    for r in &rows {
        summary.push_str(&format!(
            "N={} v1={:.3} v2={:.3} walk_visits={:.2} fallbacks={}\n",
            r.n_facets, r.v1, r.v2, r.mean_walk_visits, r.sqrt_fallbacks
        ));
    }
    match a.out {
        Some(path) => {
            std::fs::write(path, table)?;
            out.write_all(summary.as_bytes())?;
        }
        None => {
            out.write_all(table.as_bytes())?;
            eprint!("{summary}");
        }
    }
    Ok(EXIT_OK)
}
