//! Timing and operation-count comparison of the clippers on tessellated
//! spheres.
//!
//! For each facet count `N` a polyhedron is inscribed in a sphere of
//! `inner_radius` and a dataset of segments is drawn in a concentric ball of
//! `outer_radius`. All three clippers run over the whole batch; wall time is
//! the minimum over `repeats` runs and the counters are summed.

mod dataset;
mod table;

use std::hint::black_box;
use std::time::{Duration, Instant};

pub use dataset::{
    generate_line_dataset, load_lines, parse_lines, sample_ball, save_lines, write_lines, HitMode, LineDataset,
};
pub use table::{emit_table, TableFormat};

use crate::clip::{clip_cb, clip_sqrt_with_fallback, clip_two_planes, ClipResult, Counters};
use crate::error::{Error, Result};
use crate::geometry::Segment;
use crate::mesh::{generate_inscribed_polyhedron, ConvexMesh};

#[derive(Debug, Clone, PartialEq)]
pub struct BenchConfig {
    pub n_facets: Vec<usize>,
    pub lines_per_case: usize,
    pub hit_mode: HitMode,
    pub seed: u64,
    pub inner_radius: f64,
    pub outer_radius: f64,
    pub repeats: usize,
}

impl BenchConfig {
    pub fn new(n_facets: Vec<usize>, lines_per_case: usize, hit_mode: HitMode, seed: u64) -> Self {
        BenchConfig {
            n_facets,
            lines_per_case,
            hit_mode,
            seed,
            inner_radius: 0.5,
            outer_radius: 1.0,
            repeats: 3,
        }
    }
}

/// One column of the results table.
#[derive(Debug, Clone, PartialEq)]
pub struct BenchRow {
    pub n_facets: usize,
    pub lines: usize,
    /// Whole-batch wall times in seconds.
    pub t_cb: f64,
    pub t_rho: f64,
    pub t: f64,
    pub v1: f64,
    pub v2: f64,
    pub mean_walk_visits: f64,
    pub mean_cb_steps_rho: f64,
    pub mean_cb_steps_sqrt: f64,
    pub sqrt_fallbacks: usize,
    pub totals_cb: Counters,
    pub totals_rho: Counters,
    pub totals_sqrt: Counters,
}

/// Mesh seed for facet count `n`.
pub fn mesh_seed(seed: u64, n: usize) -> u64 {
    seed.wrapping_mul(1_000_003).wrapping_add(n as u64)
}

/// Dataset seed for facet count `n` and `mode`.
pub fn dataset_seed(seed: u64, n: usize, mode: HitMode) -> u64 {
    mesh_seed(seed, n) ^ match mode {
        HitMode::AllMiss => 0x6d69_7373,
        HitMode::AllHit => 0x6869_7400,
    }
}

pub fn run_benchmark(n_facets: &[usize], lines_per_case: usize, hit_mode: HitMode, seed: u64) -> Result<Vec<BenchRow>> {
    run_benchmark_with(&BenchConfig::new(n_facets.to_vec(), lines_per_case, hit_mode, seed))
}

pub fn run_benchmark_with(config: &BenchConfig) -> Result<Vec<BenchRow>> {
    if config.lines_per_case == 0 {
        return Err(Error::InvalidArgument("lines per case must be at least 1".into()));
    }
    if config.n_facets.is_empty() {
        return Err(Error::InvalidArgument("no facet counts given".into()));
    }
    if let Some(&n) = config.n_facets.iter().find(|&&n| n < 4 || n % 2 != 0) {
        return Err(Error::InvalidFacetCount(n));
    }
    config
        .n_facets
        .iter()
        .map(|&n| {
            let mesh = generate_inscribed_polyhedron(n, config.inner_radius, mesh_seed(config.seed, n))?;
            let data = generate_line_dataset(
                &mesh,
                config.lines_per_case,
                config.hit_mode,
                config.outer_radius,
                dataset_seed(config.seed, n, config.hit_mode),
            )?;
            bench_case(&mesh, &data.segments, config.repeats.max(1))
        })
        .collect()
}

/// Checks equivalence, sums counters and times the three clippers on one mesh.
pub fn bench_case(mesh: &ConvexMesh, segments: &[Segment], repeats: usize) -> Result<BenchRow> {
    let n = mesh.num_facets();
    let tol = 1e-9 * mesh.scale();
    let mut totals_cb = Counters::default();
    let mut totals_rho = Counters::default();
    let mut totals_sqrt = Counters::default();
    for s in segments {
        let cb = clip_cb(mesh, s);
        let rho = clip_two_planes(mesh, s);
        let sqrt = clip_sqrt_with_fallback(mesh, s);
        for (name, r) in [("two-planes", &rho), ("sqrt", &sqrt)] {
            if !r.agrees_with(&cb, s, tol) {
                return Err(Error::EquivalenceViolation {
                    n_facets: n,
                    algorithm: name,
                    segment: s.to_string(),
                });
            }
        }
        totals_cb += cb.counters;
        totals_rho += rho.counters;
        totals_sqrt += sqrt.counters;
    }

    let mut best = [Duration::MAX; 3];
    for _ in 0..repeats {
        best[0] = best[0].min(time_batch(mesh, segments, clip_cb));
        best[1] = best[1].min(time_batch(mesh, segments, clip_two_planes));
        best[2] = best[2].min(time_batch(mesh, segments, clip_sqrt_with_fallback));
    }
    let [t_cb, t_rho, t] = best.map(|d| d.as_secs_f64().max(f64::MIN_POSITIVE));
    let lines = segments.len() as f64;
    Ok(BenchRow {
        n_facets: n,
        lines: segments.len(),
        t_cb,
        t_rho,
        t,
        v1: t_cb / t,
        v2: t_rho / t,
        mean_walk_visits: totals_sqrt.walk_visits as f64 / lines,
        mean_cb_steps_rho: totals_rho.cb_steps as f64 / lines,
        mean_cb_steps_sqrt: totals_sqrt.cb_steps as f64 / lines,
        sqrt_fallbacks: totals_sqrt.fallbacks,
        totals_cb,
        totals_rho,
        totals_sqrt,
    })
}

fn time_batch(mesh: &ConvexMesh, segments: &[Segment], clip: fn(&ConvexMesh, &Segment) -> ClipResult) -> Duration {
    let start = Instant::now();
    for s in segments {
        black_box(clip(black_box(mesh), black_box(s)));
    }
    start.elapsed()
}
